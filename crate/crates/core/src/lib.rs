//! Involutions, labelled Motzkin paths and the bijection between them, with
//! path-level descriptions of pattern-avoiding involution classes and an
//! exhaustive census harness for checking them.
//!
//! ```
//! use involution_paths::{phi, phi_inverse, Involution};
//!
//! let tau: Involution = "3 4 1 2".parse().unwrap();
//! let path = phi(&tau);
//! assert_eq!(path.to_string(), "UUD1D1");
//! assert_eq!(phi_inverse(&path).unwrap(), tau);
//! ```

pub mod bijection;
pub mod census;
pub mod classes;
pub mod error;
pub mod generate;
pub mod path;
pub mod perm;
pub mod sequences;
pub mod theorems;

pub use bijection::{check_rc_reflection, phi, phi_inverse};
pub use census::{
    bfile_index, bfile_terms, check_guard, count_class, count_class_with, diff_bfile, formula_for,
    parse_bfile, run_census, size_limit, write_bfile, write_csv, BFileDiff, CensusOptions,
    CountMethod, CountReport, CountRow, Divergence, Formula,
};
pub use classes::{
    is_centrosymmetric, path_predicate, verify_characterization, Base, Characterization,
    ClassDescriptor, ClassPredicate, Counterexample, VerificationReport,
};
pub use error::{Error, Result};
pub use generate::{gen_involutions, gen_labelled_paths, gen_paths, Involutions, PathConstraints};
pub use path::{parse_path, LabelledMotzkinPath, Labelling, MotzkinPath, ParsedPath, Step};
pub use perm::{Involution, Pattern, PatternSet, Permutation};
pub use sequences::{binomial, oracle, Sequence};
pub use theorems::{registry, run_theorem, Check, Theorem, TheoremReport, TheoremRow};
