//! Q/Z-valued forms on finite abelian groups.

pub mod bichar;
pub mod lagrangian;
pub mod orthogonal;
pub mod quadratic;
pub mod qz;

pub use bichar::{Bicharacter, SubBichar};
pub use lagrangian::{d_distance, enumerate_lagrangians, is_isotropic, is_lagrangian};
pub use orthogonal::{det_square_class, is_special, orthogonal_group, Isometry};
pub use quadratic::{MetricGroup, QuadraticForm};
pub use qz::{squarefree, QZ};
