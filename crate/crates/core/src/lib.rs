//! Chromatic symmetric functions of graphs.
//!
//! The crate computes `X_G` in the monomial, power-sum, Schur and elementary
//! bases. Single Schur coefficients are evaluated directly from counts of
//! stable set partitions and special rim hook tabloids, without building the
//! full expansion. On top of that sit positivity checks that return
//! machine-checkable certificates.
//!
//! ```
//! use csf_core::{csf_schur, parse_graph, GraphAnalysis, GraphFormat};
//!
//! let claw = parse_graph("claw", GraphFormat::FamilyDsl).unwrap();
//! let x = csf_schur(&GraphAnalysis::new(claw)).unwrap();
//! assert_eq!(x.to_latex(), "s_{31}-s_{2^2}+5s_{21^2}+8s_{1^4}");
//! ```

pub mod census;
pub mod error;
pub mod expansions;
pub mod graph;
pub mod partition;
pub mod positivity;
pub mod rimhooks;

pub use census::{
    count_of_type, has_connected_partition_of_type, has_stable_partition_of_type,
    stable_partition_census, CensusEntry, CensusJson, GraphAnalysis, StableCensus,
};
pub use error::{Error, Result};
pub use expansions::{
    csf_elementary, csf_in_basis, csf_monomial, csf_power, csf_schur, e_to_s, evaluate_ones,
    m_to_s, s_to_e, schur_coefficient, schur_coefficient_terms, schur_coefficient_unfiltered,
    Basis, ExpansionJson, SymFuncExpansion, TabloidTerm, TermJson, DEFAULT_EDGE_CAP,
};
pub use graph::{
    build_family, parse_graph, FamilyKind, FamilySpec, Graph, GraphFormat, MAX_VERTICES,
};
pub use partition::{partitions_of, sort_to_partition, Composition, Partition};
pub use positivity::{
    balanced_bipartition_test, dominance_witness, e_positivity_verdict, schur_positivity_verdict,
    wolfgang_witness, Answer, Certificate, PositivityVerdict, Property, Strategy,
};
pub use rimhooks::{
    inverse_kostka, inverse_kostka_column, kostka, special_tabloids, tabloid_for_content,
    SpecialTabloid,
};
