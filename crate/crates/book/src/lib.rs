//! The guide in `book/`, one module per chapter, so `cargo test --doc`
//! runs every Rust snippet in it.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}
#[doc = include_str!("../../../book/src/diagrams.md")]
pub mod diagrams {}
#[doc = include_str!("../../../book/src/bracket.md")]
pub mod bracket {}
#[doc = include_str!("../../../book/src/ribbon_graphs.md")]
pub mod ribbon_graphs {}
#[doc = include_str!("../../../book/src/ribbon_polynomials.md")]
pub mod ribbon_polynomials {}
#[doc = include_str!("../../../book/src/correspondence.md")]
pub mod correspondence {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
