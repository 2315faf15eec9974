//! Fixtures shared by the benchmarks.

use pointext_core::abelian::FinAbGroup;
use pointext_core::cohomology::{FiniteGroup, GModule};
use pointext_core::metric::{QuadraticForm, QZ};

pub fn group(inv: &[i64]) -> FinAbGroup {
    FinAbGroup::new(inv.to_vec()).expect("fixture group")
}

/// `Z/3²` acting trivially on `Z/3` with `q(x) = x²/3`.
pub fn pw_fixture() -> (GModule, QuadraticForm) {
    let g = FiniteGroup::from_abelian(&group(&[3, 3]));
    let a = group(&[3]);
    let q = QuadraticForm::new(a.clone(), vec![QZ::new(1, 3)], &[]).expect("form");
    (GModule::trivial(&g, &a), q)
}
