//! Parikh matrices, M-equivalence, Thue systems and Parikh rewriting systems.
//!
//! The crate computes Parikh matrices of words over ordered alphabets, runs
//! symmetric string-rewriting systems (with parametric rule families such as
//! `abxba <-> baxab`), and adds counters to obtain Parikh rewriting systems.
//! On top of that it measures rewriting distances, finds irreducible
//! transformations, and verifies soundness and completeness with respect to
//! M-equivalence by exhaustive search over all words up to a length bound.
//!
//! ```
//! use parikh::{parikh_matrix, Alphabet};
//!
//! let abc = Alphabet::parse("abc")?;
//! let m = parikh_matrix(&abc, &abc.word("abcbac")?)?;
//! assert_eq!(m.get(0, 3), 3); // |abcbac|_abc
//! # Ok::<(), parikh::Error>(())
//! ```
//!
//! Every exhaustive operation takes a [`Limits`] and fails with
//! [`Error::CapExceeded`] rather than exhausting memory.

pub mod error;
pub mod format;
pub mod irreducible;
pub mod limits;
pub mod matrix;
pub mod oracle;
pub mod presets;
pub mod prs;
pub mod suite;
pub mod thue;
pub mod words;

pub use error::{Error, Result};
pub use irreducible::{
    decompose, derive_thue_system, irreducible, irreducible_graph_path, DerivedRule, DerivedSystem,
    Irreducibility, IrreducibleStep,
};
pub use limits::Limits;
pub use matrix::{
    m_ambiguous, m_class, m_equivalent, parikh_matrix, verify_matrix_theorem, ParikhMatrix,
};
pub use prs::{
    audit_prs_complete, audit_prs_sound, counter_delta, prs_transforms, Counter,
    ParikhRewritingSystem,
};
pub use thue::{
    audit_parikh_complete, audit_parikh_sound, dist, r_class, transforms, AuditReport, DirectStep,
    Direction, RewritePattern, RuleFamily, ThueSystem,
};
pub use words::{
    anagrams, count_subword, parikh_vector, project, Alphabet, LetterSet, ParikhVector, Word,
};
