//! Exact computation of cylindric Schur functions and fusion coefficients.
//!
//! The crate covers four layers:
//!
//! - [`partition`]: partitions, skew shapes, and the `(N, L)` predicates for
//!   partitions and horizontal strips.
//! - [`tableaux`]: counting and listing cylindric semistandard tableaux,
//!   i.e. the numbers `K^cyl_{λ/μ,α}`.
//! - [`schur`]: fixed-degree symmetric functions in the monomial and Schur
//!   bases, Littlewood–Richardson coefficients, and cylindric Schur
//!   functions `s^cyl_{λ/μ}`.
//! - [`fusion`]: the fusion ring `Λ^(N,L)` built degree by degree with exact
//!   integer linear algebra ([`hermite`]), its structure constants
//!   `d^λ_{μν}`, and the fusion Pieri rule.
//!
//! [`verify`] ties them together: it checks that every skew cylindric Schur
//! function expands as `Σ_ν d^λ_{μν} s^cyl_ν`, runs grid scans, and exports
//! structure-constant tables.
//!
//! ```
//! use cylschur::{fusion_product, CylProfile, Partition};
//!
//! let p = CylProfile::new(2, 1).unwrap();
//! let box1: Partition = "1".parse().unwrap();
//! let prod = fusion_product(p, &box1, &box1).unwrap();
//! assert_eq!(prod.to_string(), "1·S(1,1)");
//! ```
//!
//! The `examples/` directory has one runnable program per capability.

pub mod error;
pub mod fusion;
pub mod hermite;
pub mod partition;
pub mod schur;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use fusion::{
    build_degree_quotient, degree_quotient, fusion_coefficient, fusion_h_expansion,
    fusion_product, ideal_generators, reduce_schur, reduce_vector, verify_pieri, DegreeQuotient,
    FusionElement,
};
pub use partition::{
    enumerate_nl_partitions, horizontal_strip_extensions, is_horizontal_strip, partitions_of,
    CylProfile, Partition, SkewShape,
};
pub use schur::{
    cylindric_schur, h_to_schur, lr_coefficient, schur_product, schur_to_monomial, MonomialVector,
    SchurVector,
};
pub use tableaux::{classical_kostka, count_cyl_tableaux, enumerate_cyl_tableaux, TableauChain, Weight};
pub use verify::{
    export_fusion_table, scan, verify_proposition1, verify_theorem1, OutputFormat, ScanConfig,
    VerificationReport,
};
