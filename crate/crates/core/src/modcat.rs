//! Module and bimodule categories over `Vec_A` as pairs `(H, ψ)`, their tensor
//! products, and the passage to Lagrangian correspondences.

use std::collections::BTreeMap;

use crate::abelian::{all_subgroups, dual_pairing, Elem, FinAbGroup, Homomorphism, Subgroup};
use crate::error::{Error, Result};
use crate::lag::{graph_of_isometry, LagCorrespondence};
use crate::metric::qz::is_perfect_square;
use crate::metric::{is_lagrangian, orthogonal_group, Bicharacter, Isometry, MetricGroup, SubBichar, QZ};

/// `M(H, ψ)`: a subgroup `H` of the base with an alternating bicharacter on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModCatClass {
    base: FinAbGroup,
    psi: SubBichar,
}

impl ModCatClass {
    pub fn new(base: FinAbGroup, psi: SubBichar) -> Result<Self> {
        if psi.subgroup().ambient() != &base {
            return Err(Error::AmbientMismatch("H is not a subgroup of the base".into()));
        }
        if !psi.is_alternating() {
            return Err(Error::InvalidData("ψ must be alternating".into()));
        }
        Ok(ModCatClass { base, psi })
    }

    /// `ψ` given by its values `(s, t, v)` with `s < t` on canonical generators of `H`.
    pub fn from_upper(base: FinAbGroup, h: Subgroup, entries: &[(usize, usize, QZ)]) -> Result<Self> {
        let r = h.generators().len();
        let mut vals = vec![vec![QZ::ZERO; r]; r];
        for &(s, t, v) in entries {
            if s >= r || t >= r || s == t {
                return Err(Error::InvalidData(format!("bad generator pair ({s},{t}) for ψ on {r} generators")));
            }
            vals[s][t] = v;
            vals[t][s] = v.neg();
        }
        Self::new(base, SubBichar::new(h, vals)?)
    }

    pub fn trivial_psi(base: &FinAbGroup, h: Subgroup) -> Self {
        ModCatClass { base: base.clone(), psi: SubBichar::zero(&h) }
    }

    pub fn base(&self) -> &FinAbGroup {
        &self.base
    }

    pub fn h(&self) -> &Subgroup {
        self.psi.subgroup()
    }

    pub fn psi(&self) -> &SubBichar {
        &self.psi
    }

    /// Nonzero `(s, t, ψ(g_s, g_t))` with `s < t`.
    pub fn psi_upper(&self) -> Vec<(usize, usize, QZ)> {
        let v = self.psi.values();
        let mut out = vec![];
        for s in 0..v.len() {
            for t in s + 1..v.len() {
                if !v[s][t].is_zero() {
                    out.push((s, t, v[s][t]));
                }
            }
        }
        out
    }
}

/// `Σ m · M(H, ψ)`, merged and sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModCatSum {
    terms: Vec<(u128, ModCatClass)>,
}

impl ModCatSum {
    pub fn new(terms: Vec<(u128, ModCatClass)>) -> Self {
        let mut acc: BTreeMap<ModCatClass, u128> = BTreeMap::new();
        for (m, c) in terms {
            if m > 0 {
                *acc.entry(c).or_default() += m;
            }
        }
        ModCatSum { terms: acc.into_iter().map(|(c, m)| (m, c)).collect() }
    }

    pub fn single(m: u128, c: ModCatClass) -> Self {
        Self::new(vec![(m, c)])
    }

    pub fn terms(&self) -> &[(u128, ModCatClass)] {
        &self.terms
    }

    /// The single class when the sum has exactly one term.
    pub fn as_single(&self) -> Option<(u128, &ModCatClass)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((*m, c)),
            _ => None,
        }
    }
}

pub fn modcat_opposite(m: &ModCatClass) -> ModCatClass {
    ModCatClass { base: m.base.clone(), psi: m.psi.neg() }
}

pub fn is_invertible_modcat(m: &ModCatClass) -> bool {
    m.psi.is_nondegenerate()
}

/// Every class over `A`, sorted.
pub fn all_classes(a: &FinAbGroup) -> Vec<ModCatClass> {
    let mut out = vec![];
    for h in all_subgroups(a) {
        let p = h.presentation();
        for b in alternating_bicharacters(&p.group) {
            out.push(ModCatClass { base: a.clone(), psi: SubBichar::from_abstract(&h, &b) });
        }
    }
    out.sort();
    out
}

/// All alternating bicharacters, enumerated by their values above the diagonal.
pub fn alternating_bicharacters(g: &FinAbGroup) -> Vec<Bicharacter> {
    let n = g.invariants();
    let k = n.len();
    let pairs: Vec<(usize, usize, i64)> =
        (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j, num_integer::gcd(n[i], n[j])))).collect();
    let total: i64 = pairs.iter().map(|p| p.2).product();
    (0..total)
        .map(|mut idx| {
            let mut vals = vec![vec![QZ::ZERO; k]; k];
            for &(i, j, d) in &pairs {
                let v = QZ::new(idx % d, d);
                idx /= d;
                vals[i][j] = v;
                vals[j][i] = v.neg();
            }
            Bicharacter::new(g.clone(), vals).expect("gcd-valued table is well defined")
        })
        .collect()
}

/// `m · M(H ∩ B, ψ|)` with `m = [A : B + H]`.
pub fn modcat_restrict(m: &ModCatClass, b: &Subgroup) -> Result<ModCatSum> {
    if b.ambient() != &m.base {
        return Err(Error::AmbientMismatch("B is not a subgroup of the base".into()));
    }
    let hb = m.h().intersect(b)?;
    let idx = m.h().sum(b)?.index();
    let psi = SubBichar::from_fn(&hb, |x, y| m.psi.eval(x, y).expect("x, y lie in H"));
    Ok(ModCatSum::single(idx, ModCatClass { base: m.base.clone(), psi }))
}

struct Descent {
    k: Subgroup,
    kperp: Subgroup,
    class: ModCatClass,
}

// K = ker φ, K^⊥ under ξ, H = φ(K^⊥), ψ the descent of ξ|K^⊥ along φ.
fn descend(phi: &Homomorphism, xi: &Bicharacter) -> Result<Descent> {
    let k = phi.kernel();
    let kperp = xi.perp(&k)?;
    let image = phi.image_of(&kperp)?;
    let pres = kperp.presentation();
    let f = phi.compose(&pres.inclusion)?;
    let lifts: Vec<Elem> = image
        .generators()
        .iter()
        .map(|h| {
            f.preimage(h)?
                .map(|z| pres.inclusion.apply(&z))
                .ok_or_else(|| Error::Internal("generator of φ(K^⊥) has no lift".into()))
        })
        .collect::<Result<_>>()?;
    for a in k.intersect(&kperp)?.generators() {
        for b in kperp.generators() {
            if !xi.eval(a, b).is_zero() || !xi.eval(b, a).is_zero() {
                return Err(Error::Internal("bicharacter does not descend along φ".into()));
            }
        }
    }
    let vals = lifts.iter().map(|x| lifts.iter().map(|y| xi.eval(x, y)).collect()).collect();
    let psi = SubBichar::new(image, vals).map_err(|e| Error::Internal(format!("descended form is ill defined: {e}")))?;
    let class = ModCatClass::new(phi.codomain().clone(), psi).map_err(|e| Error::Internal(e.to_string()))?;
    Ok(Descent { k, kperp, class })
}

/// Decomposition of the category of `A`-graded spaces right-equivariant under `B`
/// acting through `φ` with cocycle `ξ`.
pub fn equivariantization_decompose(a: &FinAbGroup, phi: &Homomorphism, xi: &Bicharacter) -> Result<ModCatSum> {
    if phi.codomain() != a || xi.group() != phi.domain() {
        return Err(Error::AmbientMismatch("φ must map the group of ξ into A".into()));
    }
    if !xi.is_alternating() {
        return Err(Error::InvalidData("ξ must be alternating".into()));
    }
    let d = descend(phi, xi)?;
    let m = d.k.intersect(&xi.radical())?.order();
    if d.k.order() * d.kperp.order() != m * phi.domain().order() {
        return Err(Error::Internal("multiplicity formulas disagree".into()));
    }
    Ok(ModCatSum::single(m, d.class))
}

/// `M₁ ⊠_{Vec_A} M₂` for module categories over the symmetric base `Vec_A`.
pub fn modcat_tensor(m1: &ModCatClass, m2: &ModCatClass) -> Result<ModCatSum> {
    if m1.base != m2.base {
        return Err(Error::AmbientMismatch("module categories over different groups".into()));
    }
    let p1 = m1.h().presentation();
    let p2 = m2.h().presentation();
    let phi = Homomorphism::from_blocks(&[&p1.inclusion, &p2.inclusion])?;
    let xi = m1.psi.to_abstract().direct_sum(&m2.psi.to_abstract());
    equivariantization_decompose(&m1.base, &phi, &xi)
}

fn check_base(m: &ModCatClass, x: &FinAbGroup, y: &FinAbGroup) -> Result<()> {
    if m.base != x.direct_sum(y) {
        return Err(Error::AmbientMismatch("bimodule base is not the expected direct sum".into()));
    }
    Ok(())
}

/// `M ⊠_{Vec_{A₂}} M′` for `M` over `A₁ ⊕ A₂` and `M′` over `A₂ ⊕ A₃`.
pub fn bimodcat_tensor(
    a1: &FinAbGroup,
    a2: &FinAbGroup,
    a3: &FinAbGroup,
    m: &ModCatClass,
    mp: &ModCatClass,
) -> Result<ModCatSum> {
    check_base(m, a1, a2)?;
    check_base(mp, a2, a3)?;
    let p = m.h().presentation();
    let pp = mp.h().presentation();
    let b0 = p.group.direct_sum(&pp.group);
    let xi0 = m.psi.to_abstract().direct_sum(&mp.psi.to_abstract());
    let l12 = [a1, a2];
    let l23 = [a2, a3];
    // H∘H′: pairs with middle coordinates (−a₂, a₂)
    let mid = Homomorphism::from_blocks(&[
        &Homomorphism::projection(&l12, 1).compose(&p.inclusion)?,
        &Homomorphism::projection(&l23, 0).compose(&pp.inclusion)?,
    ])?;
    let circ = mid.kernel();
    let coker = a2.order() / mid.image().order();
    let l13 = [a1, a3];
    let rho = Homomorphism::from_blocks(&[
        &Homomorphism::injection(&l13, 0).compose(&Homomorphism::projection(&l12, 0))?.compose(&p.inclusion)?,
        &Homomorphism::injection(&l13, 1).compose(&Homomorphism::projection(&l23, 1))?.compose(&pp.inclusion)?,
    ])?;
    debug_assert_eq!(rho.domain(), &b0);
    let cp = circ.presentation();
    let xi = xi0.pullback(&cp.inclusion)?;
    let phi = rho.compose(&cp.inclusion)?;
    let d = descend(&phi, &xi)?;
    let (k, kp) = (d.k.order(), d.kperp.order());
    let num = k * kp * a2.order();
    let den = m.h().order() * mp.h().order();
    if num % den != 0 {
        return Err(Error::Internal("multiplicity is not an integer".into()));
    }
    let mult = num / den;
    // second formula: |K|·|K^⊥|·|H_⊥ ∩ H′_⊥| / |H∘H′|, the middle factor being the cokernel onto A₂
    if k * kp * coker != mult * circ.order() {
        return Err(Error::Internal("the two multiplicity formulas disagree".into()));
    }
    Ok(ModCatSum::single(mult, d.class))
}

/// Unit `(Vec_A, Vec_A)`-bimodule: `H = {(a, −a)}`, `ψ = 0`.
pub fn unit_bimodule(a: &FinAbGroup) -> ModCatClass {
    let g = a.direct_sum(a);
    let k = a.rank();
    let gens: Vec<Elem> = (0..k)
        .map(|i| {
            let mut v = g.basis(i);
            v[k + i] = a.invariants()[i] - 1;
            v
        })
        .collect();
    ModCatClass::trivial_psi(&g, Subgroup::from_generators(&g, &gens).expect("antidiagonal"))
}

/// `τ(H, ψ) = {(h, z) : z|_H = ψ(h, ·)}` inside `A ⊕ A*`.
pub fn tau(m: &ModCatClass) -> Result<Subgroup> {
    let a = &m.base;
    let hyp = a.direct_sum(&a.dual());
    let parts = [a, a];
    let e = a.exponent();
    let gens = m.h().generators();
    let mut out: Vec<Elem> = Homomorphism::injection(&parts, 1).image_of(&m.h().annihilator())?.generators().to_vec();
    if !gens.is_empty() {
        let target = FinAbGroup::from_orders(&vec![e; gens.len()])?;
        let mat = gens
            .iter()
            .map(|g| (0..a.rank()).map(|j| g[j] * (e / a.invariants()[j])).collect())
            .collect();
        let res = Homomorphism::new(a.dual(), target, mat)?;
        for (s, g) in gens.iter().enumerate() {
            let want: Vec<i64> = (0..gens.len()).map(|t| m.psi.values()[s][t].scaled_to(e)).collect();
            let z = res
                .preimage(&res.codomain().element(&want)?)?
                .ok_or_else(|| Error::Internal("ψ(h, ·) does not extend to A".into()))?;
            let mut v = g.clone();
            v.extend(z);
            out.push(v);
        }
    }
    Subgroup::from_generators(&hyp, &out)
}

/// Inverse of [`tau`].
pub fn sigma(a: &FinAbGroup, l: &Subgroup) -> Result<ModCatClass> {
    let hyp = MetricGroup::hyperbolic(a);
    if !is_lagrangian(&hyp, l)? {
        return Err(Error::NotLagrangian("σ needs a Lagrangian of A ⊕ A*".into()));
    }
    let parts = [a, a];
    let pres = l.presentation();
    let pa = Homomorphism::projection(&parts, 0).compose(&pres.inclusion)?;
    let pf = Homomorphism::projection(&parts, 1).compose(&pres.inclusion)?;
    let h = pa.image();
    let fs: Vec<Elem> = h
        .generators()
        .iter()
        .map(|g| Ok(pf.apply(&pa.preimage(g)?.ok_or_else(|| Error::Internal("projection".into()))?)))
        .collect::<Result<_>>()?;
    let e = a.exponent();
    let vals = fs
        .iter()
        .map(|f| h.generators().iter().map(|g| QZ::new(dual_pairing(a, g, f), e)).collect())
        .collect();
    ModCatClass::new(a.clone(), SubBichar::new(h, vals)?)
}

// (a₁, a₂, f₁, f₂) ↦ (a₁, f₁, −a₂, f₂)
fn gamma_reorder(a1: &FinAbGroup, a2: &FinAbGroup) -> Homomorphism {
    let a1d = a1.dual();
    let a2d = a2.dual();
    let src = [a1, a2, &a1d, &a2d];
    let dst = [a1, &a1d, a2, &a2d];
    let blocks = [(0, 0, false), (1, 2, true), (2, 1, false), (3, 3, false)];
    let mut acc = Homomorphism::zero(&FinAbGroup::direct_sum_all(&src), &FinAbGroup::direct_sum_all(&dst));
    for (s, d, neg) in blocks {
        let mut f = Homomorphism::injection(&dst, d).compose(&Homomorphism::projection(&src, s)).expect("shape");
        if neg {
            f = f.neg();
        }
        acc = acc.add(&f).expect("shape");
    }
    acc
}

fn gamma_reorder_inv(a1: &FinAbGroup, a2: &FinAbGroup) -> Homomorphism {
    let a1d = a1.dual();
    let a2d = a2.dual();
    let src = [a1, &a1d, a2, &a2d];
    let dst = [a1, a2, &a1d, &a2d];
    let blocks = [(0, 0, false), (2, 1, true), (1, 2, false), (3, 3, false)];
    let mut acc = Homomorphism::zero(&FinAbGroup::direct_sum_all(&src), &FinAbGroup::direct_sum_all(&dst));
    for (s, d, neg) in blocks {
        let mut f = Homomorphism::injection(&dst, d).compose(&Homomorphism::projection(&src, s)).expect("shape");
        if neg {
            f = f.neg();
        }
        acc = acc.add(&f).expect("shape");
    }
    acc
}

/// `T(M) = γ τ(M)` for a bimodule class over `A₁ ⊕ A₂`.
pub fn t_functor(a1: &FinAbGroup, a2: &FinAbGroup, m: &ModCatClass) -> Result<LagCorrespondence> {
    t_functor_sum(a1, a2, &ModCatSum::single(1, m.clone()))
}

pub fn t_functor_sum(a1: &FinAbGroup, a2: &FinAbGroup, s: &ModCatSum) -> Result<LagCorrespondence> {
    let g = gamma_reorder(a1, a2);
    let terms = s
        .terms
        .iter()
        .map(|(k, c)| {
            check_base(c, a1, a2)?;
            Ok((*k, tau(c)?.map(&g)?))
        })
        .collect::<Result<_>>()?;
    LagCorrespondence::new(MetricGroup::hyperbolic(a1), MetricGroup::hyperbolic(a2), terms)
}

/// Inverse of [`t_functor`] on single Lagrangians.
pub fn t_inverse(a1: &FinAbGroup, a2: &FinAbGroup, l: &Subgroup) -> Result<ModCatClass> {
    sigma(&a1.direct_sum(a2), &l.map(&gamma_reorder_inv(a1, a2))?)
}

/// The invertible bimodule class attached to `g ∈ O(A ⊕ A*)`.
pub fn brpic_from_isometry(a: &FinAbGroup, g: &Isometry) -> Result<ModCatClass> {
    let gr = graph_of_isometry(g);
    t_inverse(a, a, &gr.terms()[0].1)
}

/// `O(A ⊕ A*)` with its bimodule classes and the multiplication table of `⊠_{Vec_A}`.
#[derive(Clone, Debug)]
pub struct BrPic {
    pub isometries: Vec<Isometry>,
    pub classes: Vec<ModCatClass>,
    /// `tensor[i][j]` indexes `classes[i] ⊠ classes[j]`.
    pub tensor: Vec<Vec<usize>>,
    /// `compose[i][j]` indexes `isometries[j] ∘ isometries[i]`.
    pub compose: Vec<Vec<usize>>,
}

pub fn brpic_group(a: &FinAbGroup, cap: u128) -> Result<BrPic> {
    use rayon::prelude::*;
    let hyp = MetricGroup::hyperbolic(a);
    let isometries = orthogonal_group(&hyp, cap)?;
    let classes: Vec<ModCatClass> = isometries.iter().map(|g| brpic_from_isometry(a, g)).collect::<Result<_>>()?;
    let cidx: BTreeMap<&ModCatClass, usize> = classes.iter().enumerate().map(|(i, c)| (c, i)).collect();
    if cidx.len() != classes.len() {
        return Err(Error::Internal("distinct isometries gave equal bimodule classes".into()));
    }
    let gidx: std::collections::HashMap<&Isometry, usize> = isometries.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let tensor = classes
        .par_iter()
        .map(|x| {
            classes
                .iter()
                .map(|y| {
                    let s = bimodcat_tensor(a, a, a, x, y)?;
                    match s.as_single() {
                        Some((1, c)) => {
                            cidx.get(c).copied().ok_or_else(|| Error::Internal("product left the group".into()))
                        }
                        _ => Err(Error::Internal("product of invertible bimodules is not invertible".into())),
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let compose = isometries
        .iter()
        .map(|g| {
            isometries
                .iter()
                .map(|h| {
                    let c = h.compose(g)?;
                    gidx.get(&c).copied().ok_or_else(|| Error::Internal("O(E) not closed".into()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BrPic { isometries, classes, tensor, compose })
}

/// Number of simple objects of the component `C_g`: `|ker(P ∘ g|_{A*})|`.
pub fn simple_count(a: &FinAbGroup, g: &Isometry) -> Result<u128> {
    let parts = [a, a];
    if g.source() != &MetricGroup::hyperbolic(a) || g.target() != g.source() {
        return Err(Error::ObjectMismatch("g must be an isometry of A ⊕ A*".into()));
    }
    let f = Homomorphism::projection(&parts, 0).compose(g.map())?.compose(&Homomorphism::injection(&parts, 1))?;
    Ok(f.kernel().order())
}

/// `FPdim² = |A| / count`, shared by every simple of `C_g`.
pub fn fpdim_squared(a: &FinAbGroup, g: &Isometry) -> Result<u128> {
    let c = simple_count(a, g)?;
    if a.order() % c != 0 {
        return Err(Error::Internal("simple count does not divide |A|".into()));
    }
    Ok(a.order() / c)
}

pub fn is_integral_brpic(a: &FinAbGroup, g: &Isometry) -> Result<bool> {
    Ok(is_perfect_square(fpdim_squared(a, g)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lag::{compose, identity_corr};
    use crate::metric::{enumerate_lagrangians, is_special};

    fn grp(inv: &[i64]) -> FinAbGroup {
        FinAbGroup::from_orders(inv).unwrap()
    }

    fn cls(a: &FinAbGroup, gens: &[Elem], psi: &[(usize, usize, QZ)]) -> ModCatClass {
        ModCatClass::from_upper(a.clone(), Subgroup::from_generators(a, gens).unwrap(), psi).unwrap()
    }

    #[test]
    fn opposite_and_invertibility() {
        let a = grp(&[3, 3]);
        let m = cls(&a, &[vec![1, 0], vec![0, 1]], &[(0, 1, QZ::new(1, 3))]);
        let op = modcat_opposite(&m);
        assert_eq!(op.psi().values()[0][1], QZ::new(2, 3));
        assert_eq!(modcat_opposite(&op), m);
        assert!(is_invertible_modcat(&m));
        assert!(!is_invertible_modcat(&ModCatClass::trivial_psi(&a, Subgroup::whole(&a))));
        assert!(is_invertible_modcat(&ModCatClass::trivial_psi(&a, Subgroup::trivial(&a))));
        assert!(ModCatClass::from_upper(a.clone(), Subgroup::whole(&a), &[(0, 1, QZ::new(1, 2))]).is_err());
    }

    #[test]
    fn tensor_examples() {
        let a = grp(&[2]);
        let whole = ModCatClass::trivial_psi(&a, Subgroup::whole(&a));
        let unit = ModCatClass::trivial_psi(&a, Subgroup::trivial(&a));
        assert_eq!(modcat_tensor(&whole, &whole).unwrap(), ModCatSum::single(2, whole.clone()));
        assert_eq!(modcat_tensor(&unit, &whole).unwrap(), ModCatSum::single(1, whole.clone()));
        for b in [grp(&[2, 2]), grp(&[4]), grp(&[2, 4]), grp(&[3, 3])] {
            let u = ModCatClass::trivial_psi(&b, Subgroup::trivial(&b));
            let all = all_classes(&b);
            for m in &all {
                assert_eq!(modcat_tensor(&u, m).unwrap(), ModCatSum::single(1, m.clone()));
                if is_invertible_modcat(m) {
                    assert_eq!(modcat_tensor(m, &modcat_opposite(m)).unwrap(), ModCatSum::single(1, u.clone()));
                }
            }
            // invertible classes form a group of the size of H²(A*, k×)
            let inv: Vec<&ModCatClass> = all.iter().filter(|m| is_invertible_modcat(m)).collect();
            assert_eq!(inv.len(), alternating_bicharacters(&b.dual()).len());
            for x in &inv {
                for y in &inv {
                    let (k, c) = modcat_tensor(x, y).unwrap().as_single().map(|(k, c)| (k, c.clone())).unwrap();
                    assert_eq!(k, 1);
                    assert!(is_invertible_modcat(&c));
                }
            }
        }
    }

    #[test]
    fn tensor_multiplicity_matches_bruteforce_radical() {
        let a = grp(&[2, 4]);
        let all = all_classes(&a);
        for m1 in all.iter().step_by(7) {
            for m2 in all.iter().step_by(5) {
                let (k, _) = modcat_tensor(m1, m2).unwrap().as_single().map(|(k, c)| (k, c.clone())).unwrap();
                // |H₁ ∩ H₂ ∩ Rad(ψ₁ × ψ₂)| counted element by element
                let i = m1.h().intersect(m2.h()).unwrap();
                let rad = i
                    .elements()
                    .into_iter()
                    .filter(|h| {
                        let nh = a.neg(h);
                        m1.h().generators().iter().all(|x| m1.psi().eval(&nh, x).unwrap().is_zero())
                            && m2.h().generators().iter().all(|y| m2.psi().eval(h, y).unwrap().is_zero())
                    })
                    .count() as u128;
                assert_eq!(k, rad);
            }
        }
    }

    #[test]
    fn equivariantization_examples() {
        let a = grp(&[2]);
        let b = grp(&[2, 2]);
        let phi = Homomorphism::new(b.clone(), a.clone(), vec![vec![1, 0]]).unwrap();
        let s = equivariantization_decompose(&a, &phi, &Bicharacter::zero(&b)).unwrap();
        assert_eq!(s, ModCatSum::single(2, ModCatClass::trivial_psi(&a, Subgroup::whole(&a))));
        let zero = Homomorphism::zero(&b, &a);
        let s = equivariantization_decompose(&a, &zero, &Bicharacter::zero(&b)).unwrap();
        assert_eq!(s, ModCatSum::single(4, ModCatClass::trivial_psi(&a, Subgroup::trivial(&a))));
    }

    #[test]
    fn restriction_examples() {
        let a = grp(&[4]);
        let h = Subgroup::from_generators(&a, &[vec![2]]).unwrap();
        let m = ModCatClass::trivial_psi(&a, h.clone());
        assert_eq!(modcat_restrict(&m, &h).unwrap(), ModCatSum::single(2, m.clone()));
        assert_eq!(modcat_restrict(&m, &Subgroup::whole(&a)).unwrap(), ModCatSum::single(1, m.clone()));
        assert_eq!(
            modcat_restrict(&m, &Subgroup::trivial(&a)).unwrap(),
            ModCatSum::single(2, ModCatClass::trivial_psi(&a, Subgroup::trivial(&a)))
        );
    }

    #[test]
    fn tau_sigma_round_trips() {
        for inv in [vec![2], vec![3], vec![4], vec![2, 2], vec![2, 4], vec![6]] {
            let a = grp(&inv);
            let hyp = MetricGroup::hyperbolic(&a);
            let classes = all_classes(&a);
            let lags = enumerate_lagrangians(&hyp, 256).unwrap();
            assert_eq!(classes.len(), lags.len(), "{inv:?}");
            for c in &classes {
                let l = tau(c).unwrap();
                assert!(is_lagrangian(&hyp, &l).unwrap());
                assert_eq!(&sigma(&a, &l).unwrap(), c);
            }
            for l in &lags {
                assert_eq!(&tau(&sigma(&a, l).unwrap()).unwrap(), l);
            }
        }
        let a = grp(&[2]);
        let whole = tau(&ModCatClass::trivial_psi(&a, Subgroup::whole(&a))).unwrap();
        assert_eq!(whole, Subgroup::from_generators(&a.direct_sum(&a), &[vec![1, 0]]).unwrap());
        let zero = tau(&ModCatClass::trivial_psi(&a, Subgroup::trivial(&a))).unwrap();
        assert_eq!(zero, Subgroup::from_generators(&a.direct_sum(&a), &[vec![0, 1]]).unwrap());
    }

    #[test]
    fn unit_bimodule_is_identity() {
        for inv in [vec![], vec![2], vec![3], vec![2, 2]] {
            let a = grp(&inv);
            let u = unit_bimodule(&a);
            assert_eq!(t_functor(&a, &a, &u).unwrap(), identity_corr(&MetricGroup::hyperbolic(&a)));
            let g = Isometry::identity(&MetricGroup::hyperbolic(&a));
            assert_eq!(brpic_from_isometry(&a, &g).unwrap(), u);
            for m in all_classes(&a.direct_sum(&a)) {
                assert_eq!(bimodcat_tensor(&a, &a, &a, &m, &u).unwrap(), ModCatSum::single(1, m.clone()));
                assert_eq!(bimodcat_tensor(&a, &a, &a, &u, &m).unwrap(), ModCatSum::single(1, m.clone()));
            }
        }
    }

    #[test]
    fn functoriality_small() {
        let gs = [grp(&[]), grp(&[2]), grp(&[3])];
        for a1 in &gs {
            for a2 in &gs {
                for a3 in &gs {
                    let c12 = all_classes(&a1.direct_sum(a2));
                    let c23 = all_classes(&a2.direct_sum(a3));
                    for n in &c12 {
                        for np in &c23 {
                            let lhs = t_functor_sum(a1, a3, &bimodcat_tensor(a1, a2, a3, n, np).unwrap()).unwrap();
                            let rhs =
                                compose(&t_functor(a2, a3, np).unwrap(), &t_functor(a1, a2, n).unwrap()).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn brpic_small() {
        for (inv, order) in [(vec![2], 2), (vec![3], 4)] {
            let a = grp(&inv);
            let bp = brpic_group(&a, 256).unwrap();
            assert_eq!(bp.isometries.len(), order);
            assert_eq!(bp.tensor, bp.compose);
        }
        let a = grp(&[2]);
        let hyp = MetricGroup::hyperbolic(&a);
        let o = orthogonal_group(&hyp, 256).unwrap();
        let swap = o.iter().find(|g| !g.is_identity()).unwrap();
        assert_eq!(simple_count(&a, swap).unwrap(), 1);
        assert_eq!(fpdim_squared(&a, swap).unwrap(), 2);
        assert!(!is_integral_brpic(&a, swap).unwrap());
        assert_eq!(simple_count(&a, &o[0]).unwrap() + simple_count(&a, &o[1]).unwrap(), 3);
        for inv in [vec![4], vec![2, 2], vec![3]] {
            let a = grp(&inv);
            for g in orthogonal_group(&MetricGroup::hyperbolic(&a), 256).unwrap() {
                assert_eq!(is_integral_brpic(&a, &g).unwrap(), is_special(&g).unwrap());
            }
        }
    }
}
