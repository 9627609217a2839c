//! Operads seen as categories over finite pointed sets.

pub mod ell;
pub mod fibrous;
pub mod finptd;
pub mod free_algebra;
pub mod genmap;
pub mod nerve;
pub mod operad;
pub mod segal;

pub use ell::{ell_compose, ell_hom, Ell, EllMorphism, EllObject, FibredCategory};
pub use fibrous::{check_defect, check_fibrous, Defect, FibrousReport};
pub use finptd::{smash, smash_obj, MapClass, PtdMap};
pub use free_algebra::{free_algebra, FreeAlgebraElement};
pub use genmap::{gen_hom, gen_hom_count, GenMap};
pub use nerve::{chain_bijection, nerve_over, verify_chain_bijection, verify_naturality, Chain};
pub use operad::{BVTensorOperad, FiniteOperad, FreeForestOperad, TableOperad, ThinOp};
pub use segal::{d3_check, segal_d1_check, DecompositionReport};
