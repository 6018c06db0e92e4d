//! Presentations, generator-image endomorphisms, the injection catalogue, generalized Artin
//! generators with their lifts, and the index graph of finite-index subgroups.

pub mod endo;
pub mod graph;
pub mod mapping;
pub mod presentation;
pub mod xi;

pub use endo::{
    b_inverse_z_sweep, b_lattice, b_solution, catalogue_injection, check_homomorphism, engine_z_exponent,
    transvection_classify, z_image_exponent, z_image_exponent_signed, BLattice, Classification, EndomorphismSpec,
    RelationWitness, TransvectionClass, TransvectionParams,
};
pub use graph::{injection_graph, InjectionGraph};
pub use mapping::{CurveAction, MappingClassSpec};
pub use presentation::{presentation_of, Family, Presentation, SourceWord};
pub use xi::{
    gen_artin_generator, iota_k_expression, xi1_formula_check, xi_evaluate, xi_functorial_on, xi_top_counterexample,
    CapMode, GenArtinGenerator, GenCase, XiEvaluation,
};
