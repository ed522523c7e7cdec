//! Constructors for the affine⊗affine classification: tensor products,
//! twists, toric and path bigraphs, pseudo-twists, binding assemblies and
//! the thirteen exceptional bigraphs, with Kac quadruples, duality and
//! bounded enumeration.

pub mod assemble;
pub mod binding;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod exceptional;
pub mod family;
pub mod group;
pub mod kac;
pub mod listing;
pub mod search;

pub use binding::{build_binding, BindingKind, Pattern, Side};
pub use construct::{build_path, build_pseudo_twist, build_tensor, build_toric, build_twist, end_binding, partner_type};
pub use enumerate::{enumerate_catalog, family_instances};
pub use error::{CatalogError, Result};
pub use exceptional::{build_exceptional, is_exceptional, EXCEPTIONAL_IDS};
pub use family::{family_info, FamilyId, FamilyInfo, FAMILIES};
pub use group::{automorphism_group, conjugator, is_conjugate};
pub use kac::{kac_quadruple, KacQuadruple};
pub use listing::{listed_quadruple, vertex_count};
pub use search::{binding_search, double_binding_search, SearchReport};
