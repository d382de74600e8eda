//! Wedderburn decompositions of the semisimple group algebras `F_q S_n` and
//! `F_q A_n` (`char F_q = p > n`), their centrally primitive idempotents, and
//! the minimal group codes those idempotents generate.
//!
//! Modules, bottom-up:
//!
//! - [`ffield`]: prime-field arithmetic, quadratic residues, square roots
//! - [`perm`]: permutations, `S_n`/`A_n` in canonical order, classes, subgroups
//! - [`tableaux`]: partitions, hooks, standard tableaux, `Γ`/`Δ` classification
//! - [`galg`]: group-algebra arithmetic, Young symmetrizers, central idempotents, essentiality
//! - [`chars`]: Murnaghan–Nakayama characters, the `A_n` character table, character idempotents
//! - [`blocks`]: Wedderburn block lists of `F_q S_n` and `F_q A_n`
//! - [`codes`]: ideals as linear codes, exhaustive minimum distance, weight distributions
//! - [`report`]: serializable decomposition / code / essentiality / character-table reports
//! - [`cli`]: argument parsing and dispatch behind the `wedderburn` binary
//!
//! The coordinate order of every group-algebra element and code is the
//! lexicographic order of one-line notation (`A_n`: its even subsequence).

pub mod blocks;
pub mod chars;
pub mod cli;
pub mod codes;
pub mod error;
pub mod ffield;
pub mod galg;
pub mod matrix;
pub mod perm;
pub mod report;
pub mod tableaux;

pub use error::{Error, Result};
pub use ffield::{FieldSpec, Fp};
pub use galg::{Algebra, Element};
pub use perm::{Group, GroupKind, Permutation};
pub use tableaux::{Partition, YoungTableau};
