//! System files, the independent root oracle, bound validation and the
//! shipped corpus.

mod brute;
mod corpus;
mod eigen;
mod oracle;
mod sysfile;
mod validate;

pub use brute::brute_force_lattice_count;
pub use corpus::{bivariate_corpus, corpus_entry, CorpusEntry, CORPUS};
pub use eigen::eigen_system;
pub use oracle::{oracle_roots_2d, OracleRoot, OracleRoots};
pub use sysfile::SystemFile;
pub use validate::{validate_bounds, validate_with_roots, ValidationReport, ValidationRow, Verdict};
