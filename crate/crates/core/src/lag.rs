//! Lagrangian correspondences and their multiplicity-weighted composition.

use std::collections::BTreeMap;

use crate::abelian::{Elem, FinAbGroup, Homomorphism, Subgroup};
use crate::error::{Error, Result};
use crate::metric::{is_lagrangian, Isometry, MetricGroup};

/// `Σ mult · L` with each `L` Lagrangian in `source⁻¹ ⊕ target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LagCorrespondence {
    source: MetricGroup,
    target: MetricGroup,
    terms: Vec<(u128, Subgroup)>,
}

impl LagCorrespondence {
    pub fn new(source: MetricGroup, target: MetricGroup, terms: Vec<(u128, Subgroup)>) -> Result<Self> {
        let space = MetricGroup::corr_space(&source, &target);
        for (m, l) in &terms {
            if *m == 0 {
                return Err(Error::InvalidData("multiplicities must be positive".into()));
            }
            if !is_lagrangian(&space, l)? {
                return Err(Error::NotLagrangian("term is not Lagrangian in source⁻¹ ⊕ target".into()));
            }
        }
        Ok(Self::merged(source, target, terms))
    }

    fn merged(source: MetricGroup, target: MetricGroup, terms: Vec<(u128, Subgroup)>) -> Self {
        let mut acc: BTreeMap<Subgroup, u128> = BTreeMap::new();
        for (m, l) in terms {
            *acc.entry(l).or_default() += m;
        }
        LagCorrespondence { source, target, terms: acc.into_iter().map(|(l, m)| (m, l)).collect() }
    }

    pub fn single(source: MetricGroup, target: MetricGroup, l: Subgroup) -> Result<Self> {
        Self::new(source, target, vec![(1, l)])
    }

    pub fn source(&self) -> &MetricGroup {
        &self.source
    }

    pub fn target(&self) -> &MetricGroup {
        &self.target
    }

    pub fn terms(&self) -> &[(u128, Subgroup)] {
        &self.terms
    }

    pub fn add(&self, other: &LagCorrespondence) -> Result<LagCorrespondence> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::ObjectMismatch("cannot add correspondences between different objects".into()));
        }
        let mut t = self.terms.clone();
        t.extend(other.terms.iter().cloned());
        Ok(Self::merged(self.source.clone(), self.target.clone(), t))
    }

    pub fn scale(&self, k: u128) -> LagCorrespondence {
        let t = self.terms.iter().map(|(m, l)| (m * k, l.clone())).collect();
        Self::merged(self.source.clone(), self.target.clone(), t)
    }
}

/// Diagonal of `E⁻¹ ⊕ E`.
pub fn identity_corr(e: &MetricGroup) -> LagCorrespondence {
    graph_of_isometry(&Isometry::identity(e))
}

/// `{(x, g x)}`.
pub fn graph_of_isometry(g: &Isometry) -> LagCorrespondence {
    let e1 = g.source().group();
    let e2 = g.target().group();
    let w = e1.direct_sum(e2);
    let gens: Vec<Elem> = (0..e1.rank())
        .map(|i| {
            let mut v = e1.basis(i);
            v.extend(g.map().image_of_generator(i));
            v
        })
        .collect();
    let l = Subgroup::from_generators(&w, &gens).expect("graph generators");
    LagCorrespondence::single(g.source().clone(), g.target().clone(), l).expect("graphs of isometries are Lagrangian")
}

/// `L ∩ (0 ⊕ E₂)` read inside `E₂`, or `L ∩ (E₁ ⊕ 0)` read inside `E₁`.
fn meet_factor(l: &Subgroup, e1: &FinAbGroup, e2: &FinAbGroup, second: bool) -> Subgroup {
    let parts = [e1, e2];
    Homomorphism::injection(&parts, usize::from(second)).preimage_of(l).expect("shape")
}

/// Composite of single Lagrangians `M ∘ L` with its multiplicity `m(M, L)`.
pub fn compose_lagrangians(
    e1: &FinAbGroup,
    e2: &FinAbGroup,
    e3: &FinAbGroup,
    m: &Subgroup,
    l: &Subgroup,
) -> Result<(u128, Subgroup)> {
    let parts = [e1, e2, e2, e3];
    // L in the first two slots, M in the last two
    let l_in = Homomorphism::from_blocks(&[&Homomorphism::injection(&parts, 0), &Homomorphism::injection(&parts, 1)])?;
    let m_in = Homomorphism::from_blocks(&[&Homomorphism::injection(&parts, 2), &Homomorphism::injection(&parts, 3)])?;
    let lm = l.map(&l_in)?.sum(&m.map(&m_in)?)?;
    let diff = Homomorphism::projection(&parts, 1).add(&Homomorphism::projection(&parts, 2).neg())?;
    let fiber = diff.kernel().intersect(&lm)?;
    let p = Homomorphism::injection(&[e1, e3], 0)
        .compose(&Homomorphism::projection(&parts, 0))?
        .add(&Homomorphism::injection(&[e1, e3], 1).compose(&Homomorphism::projection(&parts, 3))?)?;
    let composite = fiber.map(&p)?;
    let mid = meet_factor(l, e1, e2, true).intersect(&meet_factor(m, e2, e3, false))?;
    let mult = mid.order();
    if fiber.order() != mult * composite.order() {
        return Err(Error::Internal("fiber size disagrees with the middle kernel".into()));
    }
    Ok((mult, composite))
}

/// `M • L` for `L: E₁ → E₂`, `M: E₂ → E₃`, extended bilinearly.
pub fn compose(m: &LagCorrespondence, l: &LagCorrespondence) -> Result<LagCorrespondence> {
    if m.source != l.target {
        return Err(Error::ObjectMismatch("source of the outer correspondence is not the target of the inner".into()));
    }
    let (e1, e2, e3) = (l.source.group(), l.target.group(), m.target.group());
    let mut terms = vec![];
    for (a, mm) in &m.terms {
        for (b, ll) in &l.terms {
            let (k, c) = compose_lagrangians(e1, e2, e3, mm, ll)?;
            terms.push((a * b * k, c));
        }
    }
    Ok(LagCorrespondence::merged(l.source.clone(), m.target.clone(), terms))
}

/// Inverse of [`graph_of_isometry`].
pub fn corr_to_isometry(k: &LagCorrespondence) -> Result<Isometry> {
    let [(1, l)] = k.terms.as_slice() else {
        return Err(Error::NotInvertible("correspondence is not a single term of multiplicity 1".into()));
    };
    let (e1, e2) = (k.source.group(), k.target.group());
    if !meet_factor(l, e1, e2, false).is_trivial() || !meet_factor(l, e1, e2, true).is_trivial() {
        return Err(Error::NotInvertible("Lagrangian meets a factor nontrivially".into()));
    }
    let pres = l.presentation();
    let p1 = Homomorphism::projection(&[e1, e2], 0).compose(&pres.inclusion)?;
    let p2 = Homomorphism::projection(&[e1, e2], 1).compose(&pres.inclusion)?;
    let imgs: Vec<Elem> = (0..e1.rank())
        .map(|i| {
            let z = p1.preimage(&e1.basis(i))?.ok_or_else(|| Error::Internal("projection not onto".into()))?;
            Ok(p2.apply(&z))
        })
        .collect::<Result<_>>()?;
    let map = Homomorphism::from_images(e1.clone(), e2.clone(), &imgs)?;
    Isometry::new(k.source.clone(), k.target.clone(), map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{enumerate_lagrangians, orthogonal_group};

    fn hyp(inv: &[i64]) -> MetricGroup {
        MetricGroup::hyperbolic(&FinAbGroup::new(inv.to_vec()).unwrap())
    }

    #[test]
    fn identity_and_doubling() {
        let e = hyp(&[2]);
        let id = identity_corr(&e);
        assert_eq!(id.terms()[0].1.order(), 4);
        assert_eq!(compose(&id, &id).unwrap(), id);
        let w = e.group().direct_sum(e.group());
        let l00 = Subgroup::from_generators(&w, &[vec![1, 0, 0, 0], vec![0, 0, 1, 0]]).unwrap();
        let k = LagCorrespondence::single(e.clone(), e.clone(), l00.clone()).unwrap();
        let kk = compose(&k, &k).unwrap();
        assert_eq!(kk.terms(), &[(2, l00)]);
        assert!(matches!(corr_to_isometry(&k), Err(Error::NotInvertible(_))));
        for l in enumerate_lagrangians(&MetricGroup::corr_space(&e, &e), 256).unwrap() {
            let c = LagCorrespondence::single(e.clone(), e.clone(), l).unwrap();
            assert_eq!(compose(&id, &c).unwrap(), c);
            assert_eq!(compose(&c, &id).unwrap(), c);
        }
    }

    #[test]
    fn swap_graph() {
        let e = hyp(&[2]);
        let o = orthogonal_group(&e, 256).unwrap();
        let swap = o.iter().find(|g| !g.is_identity()).unwrap();
        let gr = graph_of_isometry(swap);
        let mut els = gr.terms()[0].1.elements();
        els.sort();
        assert_eq!(els, vec![vec![0, 0, 0, 0], vec![0, 1, 1, 0], vec![1, 0, 0, 1], vec![1, 1, 1, 1]]);
    }

    #[test]
    fn graphs_compose_and_round_trip() {
        for inv in [vec![2], vec![3], vec![2, 2], vec![4]] {
            let e = hyp(&inv);
            let o = orthogonal_group(&e, 256).unwrap();
            for g in &o {
                assert_eq!(&corr_to_isometry(&graph_of_isometry(g)).unwrap(), g);
                for h in o.iter().take(6) {
                    let c = compose(&graph_of_isometry(h), &graph_of_isometry(g)).unwrap();
                    assert_eq!(c, graph_of_isometry(&h.compose(g).unwrap()));
                }
            }
        }
    }

    #[test]
    fn multiplicity_cocycle_and_orders() {
        for inv in [vec![2], vec![3], vec![4]] {
            let e = hyp(&inv);
            let g = e.group();
            let ls = enumerate_lagrangians(&MetricGroup::corr_space(&e, &e), 256).unwrap();
            for l in &ls {
                for m in &ls {
                    let (mlm, ml) = compose_lagrangians(g, g, g, m, l).unwrap();
                    assert_eq!(ml.order() * g.order(), m.order() * l.order());
                    for n in &ls {
                        let (nml, _) = compose_lagrangians(g, g, g, n, &ml).unwrap();
                        let (nm, nm_c) = compose_lagrangians(g, g, g, n, m).unwrap();
                        let (nm_l, _) = compose_lagrangians(g, g, g, &nm_c, l).unwrap();
                        assert_eq!(nml * mlm, nm_l * nm);
                    }
                }
            }
        }
    }
}
