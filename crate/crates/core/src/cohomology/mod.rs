//! Bar-complex cohomology of finite groups with finite abelian coefficients.

pub mod cochain;
pub mod compute;
mod dense;
pub mod group;
pub mod kx;
pub mod module;

pub use cochain::{
    coboundary, cup_product, is_cocycle, is_normalized, kx_coboundary, kx_is_cocycle, normalize_cocycle,
    restrict_cochain, Cochain, KxCochain, Pairing,
};
pub use compute::{
    class_order, cohomologous, cohomology_group, is_coboundary, limits, restriction_map, set_limits, solve_coboundary,
    CohClass, CohomologyGroup, Limits,
};
pub use group::{Embedding, FiniteGroup};
pub use kx::{kx_class_order, kx_cohomologous, kx_cohomology, kx_is_trivial, kx_model_image, kx_restriction, kx_solve_coboundary, KxClass, KxCohomology};
pub use module::GModule;
