//! Braid words, the Garside word-problem engine and the Artin free-group action.

pub mod free;
pub mod garside;
pub mod oracle;
pub mod perm;
pub mod word;

pub use free::{artin_endo, artin_equals, FreeGroupEndo, FreeWord};
pub use garside::GarsideNormalForm;
pub use perm::Permutation;
pub use word::{
    center_generator, half_twist_delta, pure_generator, pure_generator_product, BraidWord, Letter,
};
