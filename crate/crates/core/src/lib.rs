//! Picture fuzzy sets and the topologies they generate.
//!
//! A picture fuzzy set assigns every element of a finite universe a triple
//! of positive membership, neutral membership and negative membership with
//! sum at most one. Grades are exact multiples of `10^-4`, so every equality
//! and inclusion test in this crate is decided without rounding.
//!
//! ```
//! use pftopo::{generate_from_subbase, rank_of, Family, PictureFuzzySet, Universe};
//!
//! let x = Universe::new(["a", "b"]).unwrap();
//! let mut s = Family::new(&x);
//! s.insert("K1", PictureFuzzySet::from_decimals(&x, &[("0.2", "0.1", "0.3"), ("0.4", "0", "0.5")]).unwrap()).unwrap();
//! s.insert("K2", PictureFuzzySet::from_decimals(&x, &[("0.5", "0.1", "0.2"), ("0.1", "0.2", "0.6")]).unwrap()).unwrap();
//! let trace = generate_from_subbase(&s, false).unwrap();
//! assert!(pftopo::check_axioms(&trace.topology).unwrap().is_topology);
//! assert_eq!(rank_of(&trace.topology).unwrap().get(), 3);
//! ```

pub mod construction;
pub mod document;
pub mod error;
pub mod expr;
pub mod family;
pub mod grade;
pub mod laws;
pub mod pfs;
pub mod relations;
pub mod topology;

pub use construction::{
    chain_topology, generate_from_base, generate_from_subbase, intersection_closure, trivial_topology,
    union_closure, ConstructionTrace,
};
pub use document::{load_family, load_family_with, save_family, DocumentError};
pub use error::Error;
pub use expr::{evaluate, parse, ExprAst, SyntaxError};
pub use family::{Family, Member};
pub use grade::Grade;
pub use pfs::{InclusionMode, MembershipTriple, PictureFuzzySet, SumCheck, Universe};
pub use relations::{balanced, partition_by_rho, rank_of, rho_equivalent, zero_rho_join, Rank, RhoPartition};
pub use topology::{
    check_axioms, check_base, check_subbase_minimality, verify_base_for, AxiomReport, AxiomViolation,
    BaseReport, BaseViolation, MinimalityReport,
};
