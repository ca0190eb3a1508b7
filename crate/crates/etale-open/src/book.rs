//! The guide chapters under `book/src` compile as doc-tests of this crate,
//! so every code block in the book is checked by `cargo test --doc`.

#[doc = include_str!("../../../book/src/fields.md")]
pub mod fields {}
