//! Finite abelian groups: elements, homomorphisms, subgroups, quotients and
//! duals on top of integer normal forms.

pub mod group;
pub mod hom;
pub mod lattice;
pub mod snf;
pub mod subgroup;

pub use group::{Elem, FinAbGroup};
pub use hom::Homomorphism;
pub use snf::{smith_normal_form, Smith};
pub use subgroup::{all_subgroups, dual_pairing, Presentation, Quotient, Subgroup};
