//! Obstruction and torsor bookkeeping for graded extensions of `Vec_A`, the
//! Pontryagin-Whitehead function, Tambara-Yamagami data, and the tools for
//! extending a 3-cocycle from a normal subgroup.

mod appendix;
mod pw;

pub use appendix::{
    central_subgroup_zomega, conjugation_cocycle, lhs_d2, omega_extends, D2Report, Extendability, LhsData,
};
pub use pw::{bq_cup, canonical_braiding, pointed_o4, pointed_o4_cochain, pw_canonical, pw_cochain};

use crate::abelian::{Elem, FinAbGroup, Homomorphism};
use crate::cohomology::{
    cohomology_group, kx_class_order, kx_cohomology, CohClass, FiniteGroup, GModule, KxClass, KxCochain,
};
use crate::error::{Error, Result};
use crate::metric::{Bicharacter, Isometry, MetricGroup, QZ};
use crate::modcat::{bimodcat_tensor, brpic_from_isometry, simple_count, unit_bimodule, ModCatClass};

/// A group `G` acting on `π₂ = A ⊕ A*` by isometries of the hyperbolic form.
#[derive(Clone, Debug)]
pub struct ExtensionProblem {
    group: FiniteGroup,
    base: FinAbGroup,
    action: Vec<Isometry>,
    pi2: GModule,
}

impl ExtensionProblem {
    /// `action[g]` is `c(g)`; it must be a homomorphism into `O(A ⊕ A*)`.
    pub fn new(group: FiniteGroup, base: FinAbGroup, action: Vec<Isometry>) -> Result<Self> {
        let hyp = MetricGroup::hyperbolic(&base);
        if action.len() != group.order() {
            return Err(Error::InvalidData("need one isometry per group element".into()));
        }
        if action.iter().any(|c| c.source() != &hyp || c.target() != &hyp) {
            return Err(Error::ObjectMismatch("each c(g) must be an isometry of A ⊕ A*".into()));
        }
        let mats = action.iter().map(|c| c.map().matrix().to_vec()).collect();
        // GModule::new checks c(gh) = c(g)c(h) and c(1) = 1
        let pi2 = GModule::new(group.clone(), hyp.group().clone(), mats)?;
        Ok(ExtensionProblem { group, base, action, pi2 })
    }

    pub fn trivial_action(group: &FiniteGroup, base: &FinAbGroup) -> Self {
        let hyp = MetricGroup::hyperbolic(base);
        let id = Isometry::identity(&hyp);
        Self::new(group.clone(), base.clone(), vec![id; group.order()]).expect("trivial action")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn base(&self) -> &FinAbGroup {
        &self.base
    }

    pub fn action(&self) -> &[Isometry] {
        &self.action
    }

    pub fn pi2(&self) -> &GModule {
        &self.pi2
    }
}

/// Obstruction groups and torsor groups. `o3_class` is `None` when no closed
/// cocycle formula is available for the categorical data.
#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub o3_group: Vec<i64>,
    pub o3_class: Option<CohClass>,
    pub torsor_rank_m: Vec<i64>,
    pub o4_group: Vec<i64>,
    pub torsor_rank_alpha: Vec<i64>,
    /// `π₃` is modelled as `(1/modulus)Z/Z`.
    pub modulus: i64,
}

impl ObstructionReport {
    /// Both obstruction groups vanish.
    pub fn unobstructed(&self) -> bool {
        self.o3_group.is_empty() && self.o4_group.is_empty()
    }

    /// `|H²(G, π₂)|·|H³(G, π₃)|` when nothing obstructs, the number of pairs `(M, α)` over `c`.
    pub fn extension_count(&self) -> Option<u128> {
        let ord = |v: &[i64]| v.iter().map(|&x| x as u128).product::<u128>();
        self.unobstructed().then(|| ord(&self.torsor_rank_m) * ord(&self.torsor_rank_alpha))
    }
}

pub fn obstruction_spaces(p: &ExtensionProblem) -> Result<ObstructionReport> {
    let h3 = cohomology_group(&p.pi2, 3)?;
    let h2 = cohomology_group(&p.pi2, 2)?;
    let k3 = kx_cohomology(&p.group, 3)?;
    let k4 = kx_cohomology(&p.group, 4)?;
    Ok(ObstructionReport {
        o3_group: h3.invariants().to_vec(),
        o3_class: None,
        torsor_rank_m: h2.invariants().to_vec(),
        o4_group: k4.invariants().to_vec(),
        torsor_rank_alpha: k3.invariants().to_vec(),
        modulus: p.group.order() as i64,
    })
}

/// Does the order of `nu` divide `d⁴`?
pub fn divisibility_check(nu: &KxClass, d: u64) -> bool {
    let d4 = (d as u128).pow(4);
    d4 % nu.order() as u128 == 0
}

/// Same check from a cocycle, using only coboundary tests; works where the full
/// `H⁴(G, k×)` is over budget but `B⁴` is not.
pub fn divisibility_check_cochain(g: &FiniteGroup, nu: &KxCochain, d: u64) -> Result<bool> {
    let d4 = (d as u128).pow(4);
    Ok(d4 % kx_class_order(g, nu)? as u128 == 0)
}

/// Tambara-Yamagami data: the `Z/2`-extension of `Vec_A` attached to `χ`.
#[derive(Clone, Debug)]
pub struct TyReport {
    pub valid: bool,
    /// `(a, f) ↦ (χ̂⁻¹f, χ̂a)` on `A ⊕ A*`.
    pub isometry: Isometry,
    pub bimodule: ModCatClass,
    pub bimodule_order: usize,
    /// Simple objects in the odd component.
    pub simple_count: u128,
    pub report: ObstructionReport,
    pub h2_vanishes: bool,
    pub h3_vanishes: bool,
    pub count: u128,
}

fn check_ty_form(a: &FinAbGroup, chi: &Bicharacter) -> Result<()> {
    if chi.group() != a {
        return Err(Error::ObjectMismatch("χ lives on a different group".into()));
    }
    let k = a.rank();
    for i in 0..k {
        for j in i + 1..k {
            if chi.values()[i][j] != chi.values()[j][i] {
                return Err(Error::InvalidData(format!(
                    "χ is not symmetric: χ(e{i}, e{j}) = {} but χ(e{j}, e{i}) = {}",
                    chi.values()[i][j],
                    chi.values()[j][i]
                )));
            }
        }
    }
    if let Some(x) = a.elements().into_iter().find(|x| !a.is_zero(x) && (0..k).all(|j| chi.eval(x, &a.basis(j)).is_zero())) {
        return Err(Error::InvalidData(format!("χ is degenerate: χ({x:?}, y) = 0 for every y")));
    }
    Ok(())
}

/// `χ̂ : A → A*`, `a ↦ χ(a, ·)`.
fn chi_hat(a: &FinAbGroup, chi: &Bicharacter) -> Result<Homomorphism> {
    let n = a.invariants();
    let k = a.rank();
    let m = (0..k).map(|j| (0..k).map(|i| chi.values()[i][j].scaled_to(n[j])).collect()).collect();
    Homomorphism::new(a.clone(), a.dual(), m)
}

pub fn tambara_yamagami(a: &FinAbGroup, chi: &Bicharacter) -> Result<TyReport> {
    check_ty_form(a, chi)?;
    let k = a.rank();
    let h = chi_hat(a, chi)?;
    let inv_imgs: Vec<Elem> = (0..k)
        .map(|j| h.preimage(&a.dual().basis(j))?.ok_or_else(|| Error::Internal("χ̂ is not onto".into())))
        .collect::<Result<_>>()?;
    let hinv = Homomorphism::from_images(a.dual(), a.clone(), &inv_imgs)?;
    let parts = [a, a];
    let (i0, i1) = (Homomorphism::injection(&parts, 0), Homomorphism::injection(&parts, 1));
    let (p0, p1) = (Homomorphism::projection(&parts, 0), Homomorphism::projection(&parts, 1));
    let swap = i0.compose(&hinv)?.compose(&p1)?.add(&i1.compose(&h)?.compose(&p0)?)?;
    let hyp = MetricGroup::hyperbolic(a);
    let g = Isometry::new(hyp.clone(), hyp.clone(), swap)?;
    if !g.compose(&g)?.is_identity() {
        return Err(Error::Internal("the swap isometry is not an involution".into()));
    }
    let bimodule = brpic_from_isometry(a, &g)?;
    let unit = unit_bimodule(a);
    let sq = bimodcat_tensor(a, a, a, &bimodule, &bimodule)?;
    let bimodule_order = match sq.as_single() {
        Some((1, c)) if *c == unit => {
            if bimodule == unit {
                1
            } else {
                2
            }
        }
        _ => return Err(Error::Internal("the bimodule does not square to the unit".into())),
    };
    let z2 = FiniteGroup::cyclic(2);
    let p = ExtensionProblem::new(z2, a.clone(), vec![Isometry::identity(&hyp), g.clone()])?;
    let report = obstruction_spaces(&p)?;
    let count = report
        .extension_count()
        .ok_or_else(|| Error::Internal("Tambara-Yamagami data is obstructed".into()))?;
    Ok(TyReport {
        valid: true,
        simple_count: simple_count(a, &g)?,
        isometry: g,
        bimodule,
        bimodule_order,
        h2_vanishes: report.torsor_rank_m.is_empty(),
        h3_vanishes: report.o3_group.is_empty(),
        report,
        count,
    })
}

/// `χ` from generator entries `(i, j, value)`; a missing mirror entry is filled symmetrically.
pub fn bicharacter_from_entries(a: &FinAbGroup, entries: &[(usize, usize, QZ)]) -> Result<Bicharacter> {
    let k = a.rank();
    let mut v = vec![vec![None; k]; k];
    for &(i, j, x) in entries {
        if i >= k || j >= k {
            return Err(Error::InvalidData(format!("generator index ({i},{j}) out of range")));
        }
        v[i][j] = Some(x);
    }
    let vals = (0..k).map(|i| (0..k).map(|j| v[i][j].or(v[j][i]).unwrap_or(QZ::ZERO)).collect()).collect();
    Bicharacter::new(a.clone(), vals)
}
