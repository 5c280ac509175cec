//! The guide under `book/src`, one module per chapter, so that
//! `cargo test --doc` runs every code listing against the current library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/words.md")]
pub mod words {}
#[doc = include_str!("../../../book/src/matrices.md")]
pub mod matrices {}
#[doc = include_str!("../../../book/src/thue.md")]
pub mod thue {}
#[doc = include_str!("../../../book/src/audits.md")]
pub mod audits {}
#[doc = include_str!("../../../book/src/prs.md")]
pub mod prs {}
#[doc = include_str!("../../../book/src/irreducible.md")]
pub mod irreducible {}
#[doc = include_str!("../../../book/src/constructions.md")]
pub mod constructions {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../book/src/reference-checks.md")]
pub mod reference_checks {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
