use crate::abelian::{Elem, Homomorphism};
use crate::cohomology::{
    is_coboundary, is_cocycle, kx_cohomology, kx_is_trivial, kx_solve_coboundary, Cochain, Embedding, FiniteGroup,
    GModule, KxClass, KxCochain,
};
use crate::cohomology::cochain::{kx_require_cocycle, tuple_index};
use crate::error::{Error, Result};

/// `c_z(a,b) = ω(z,a,b) − ω(a,z,b) + ω(a,b,z)`.
pub fn conjugation_cocycle(n: &FiniteGroup, omega: &KxCochain, z: usize) -> Result<KxCochain> {
    if omega.degree() != 3 {
        return Err(Error::InvalidData("ω must be a 3-cochain".into()));
    }
    kx_require_cocycle(n, omega, "ω")?;
    if z >= n.order() || !n.is_central(z) {
        return Err(Error::NonCentralElement(format!("element {z}")));
    }
    let ord = n.order();
    let w = |a, b, c| omega.value(tuple_index(ord, &[a, b, c]));
    let c = KxCochain::from_fn(n, 2, |t| w(z, t[0], t[1]).sub(w(t[0], z, t[1])).add(w(t[0], t[1], z)));
    kx_require_cocycle(n, &c, "c_z").map_err(|e| Error::Internal(format!("conjugation cochain: {e}")))?;
    Ok(c)
}

/// `Z(N, ω)`: central elements with `[c_z] = 0`.
pub fn central_subgroup_zomega(n: &FiniteGroup, omega: &KxCochain) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for z in n.center() {
        if kx_is_trivial(n, &conjugation_cocycle(n, omega, z)?)? {
            out.push(z);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct Extendability {
    pub extendable: bool,
    /// Classes of `Γ` restricting to `[ω]`.
    pub class_count: u128,
    pub kernel_order: u128,
    /// A cocycle on `Γ` restricting to a cocycle cohomologous to `ω`.
    pub extension: Option<KxCochain>,
}

/// Is `[ω]` in the image of `res : Hⁿ(Γ, k×) → Hⁿ(N, k×)`?
pub fn omega_extends(emb: &Embedding, omega: &KxCochain) -> Result<Extendability> {
    let n = omega.degree();
    kx_require_cocycle(&emb.sub, omega, "ω")?;
    let hn = kx_cohomology(&emb.sub, n)?;
    let hg = kx_cohomology(&emb.parent, n)?;
    let imgs: Vec<Elem> = hg.basis().iter().map(|b| hn.coords(&b.restrict(emb))).collect::<Result<_>>()?;
    let res = Homomorphism::from_images(hg.as_group(), hn.as_group(), &imgs)?;
    let target = hn.coords(omega)?;
    let kernel_order = res.kernel().order();
    let pre = res.preimage(&target)?;
    let extension = pre.map(|x| hg.cocycle(&x)).transpose()?;
    Ok(Extendability {
        extendable: extension.is_some(),
        class_count: if extension.is_some() { kernel_order } else { 0 },
        kernel_order,
        extension,
    })
}

/// Extension data `1 → N → Γ → G → 1`: lifted automorphisms `φ(g)` of `N` and
/// `n(g,h) ∈ N` with `φ(g)φ(h) = c_{n(g,h)} φ(gh)`.
#[derive(Clone, Debug)]
pub struct LhsData {
    pub n: FiniteGroup,
    pub g: FiniteGroup,
    pub phi: Vec<Vec<usize>>,
    pub nmap: Vec<Vec<usize>>,
}

impl LhsData {
    pub fn new(n: FiniteGroup, g: FiniteGroup, phi: Vec<Vec<usize>>, nmap: Vec<Vec<usize>>) -> Result<Self> {
        let (on, og) = (n.order(), g.order());
        if phi.len() != og || phi.iter().any(|f| !n.is_automorphism(f)) {
            return Err(Error::InvalidData("φ must give one automorphism of N per element of G".into()));
        }
        if nmap.len() != og || nmap.iter().any(|r| r.len() != og || r.iter().any(|&x| x >= on)) {
            return Err(Error::InvalidData("n(g,h) must be a |G|×|G| table of elements of N".into()));
        }
        for x in 0..og {
            for y in 0..og {
                let c = nmap[x][y];
                let ok = (0..on).all(|a| phi[x][phi[y][a]] == n.mul(n.mul(c, phi[g.mul(x, y)][a]), n.inv(c)));
                if !ok {
                    return Err(Error::InvalidData(format!("φ({x})φ({y}) ≠ c_n φ({x}{y}) at ({x},{y})")));
                }
            }
        }
        Ok(LhsData { n, g, phi, nmap })
    }

    /// Split data from an action of `G` on `N` by automorphisms.
    pub fn split(n: FiniteGroup, g: FiniteGroup, phi: Vec<Vec<usize>>) -> Result<Self> {
        let e = n.identity();
        let og = g.order();
        Self::new(n, g, phi, vec![vec![e; og]; og])
    }
}

/// `(α·c)(x₁..xₖ) = c(α⁻¹x₁..α⁻¹xₖ)`.
fn act_by_automorphism(n: &FiniteGroup, alpha: &[usize], c: &KxCochain) -> KxCochain {
    let ord = n.order();
    let mut inv = vec![0; ord];
    for (a, &b) in alpha.iter().enumerate() {
        inv[b] = a;
    }
    KxCochain::from_fn(n, c.degree(), |t| {
        let s: Vec<usize> = t.iter().map(|&x| inv[x]).collect();
        c.value(tuple_index(ord, &s))
    })
}

fn conjugation(n: &FiniteGroup, c: usize) -> Vec<usize> {
    (0..n.order()).map(|a| n.mul(n.mul(c, a), n.inv(c))).collect()
}

#[derive(Clone, Debug)]
pub struct D2Report {
    pub gamma: Vec<KxCochain>,
    pub t: Vec<KxCochain>,
    /// `u[g][h]` is the class of `U_{g,h}` in `H²(N, k×)`.
    pub u: Vec<Vec<KxClass>>,
    pub all_trivial: bool,
    /// The classes form a 2-cocycle of `G` with values in `H²(N, k×)`.
    pub class_cocycle: bool,
    /// That 2-cocycle is a coboundary: some other choice of `γ` makes every `U` trivial.
    pub vanishes: bool,
}

/// `U_{g,h} = γ_g + φ(g)·γ_h − t_{n(g,h)} − c_{n(g,h)}·γ_{gh}`.
pub fn lhs_d2(data: &LhsData, omega: &KxCochain) -> Result<D2Report> {
    let (n, g) = (&data.n, &data.g);
    if omega.degree() != 3 {
        return Err(Error::InvalidData("ω must be a 3-cochain".into()));
    }
    kx_require_cocycle(n, omega, "ω")?;
    let gamma: Vec<KxCochain> = (0..g.order())
        .map(|x| {
            let rhs = act_by_automorphism(n, &data.phi[x], omega).sub(omega);
            kx_solve_coboundary(n, &rhs)?.ok_or_else(|| Error::NotInvariant(format!("φ({x})·[ω] ≠ [ω]")))
        })
        .collect::<Result<_>>()?;
    let t: Vec<KxCochain> = (0..n.order())
        .map(|c| {
            let rhs = act_by_automorphism(n, &conjugation(n, c), omega).sub(omega);
            kx_solve_coboundary(n, &rhs)?
                .ok_or_else(|| Error::Internal("an inner automorphism moved the class of ω".into()))
        })
        .collect::<Result<_>>()?;
    let mut u = Vec::with_capacity(g.order());
    for x in 0..g.order() {
        let mut row = Vec::with_capacity(g.order());
        for y in 0..g.order() {
            let c = data.nmap[x][y];
            let val = gamma[x]
                .add(&act_by_automorphism(n, &data.phi[x], &gamma[y]))
                .sub(&t[c])
                .sub(&act_by_automorphism(n, &conjugation(n, c), &gamma[g.mul(x, y)]));
            kx_require_cocycle(n, &val, "U").map_err(|e| Error::Internal(format!("d2 cochain: {e}")))?;
            row.push(KxClass::new(n, &val)?);
        }
        u.push(row);
    }
    let all_trivial = u.iter().flatten().all(|c| c.is_trivial());
    let (class_cocycle, vanishes) = class_level(data, &u)?;
    Ok(D2Report { gamma, t, u, all_trivial, class_cocycle, vanishes })
}

// G acts on H²(N, k×) through φ; test (g,h) ↦ [U_{g,h}] against B²(G, H²(N, k×)).
fn class_level(data: &LhsData, u: &[Vec<KxClass>]) -> Result<(bool, bool)> {
    let (n, g) = (&data.n, &data.g);
    let h2 = kx_cohomology(n, 2)?;
    if h2.is_trivial() {
        return Ok((true, true));
    }
    let k = h2.invariants().len();
    let action = (0..g.order())
        .map(|x| {
            let cols: Vec<Elem> =
                h2.basis().iter().map(|b| h2.coords(&act_by_automorphism(n, &data.phi[x], b))).collect::<Result<_>>()?;
            Ok((0..k).map(|i| cols.iter().map(|c| c[i]).collect()).collect())
        })
        .collect::<Result<Vec<Vec<Vec<i64>>>>>()?;
    let m = GModule::new(g.clone(), h2.as_group(), action)?;
    let c = Cochain::from_fn(&m, 2, |t| u[t[0]][t[1]].coords().to_vec());
    if !is_cocycle(&m, &c)? {
        return Ok((false, false));
    }
    Ok((true, is_coboundary(&m, &c)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::FinAbGroup;
    use crate::metric::QZ;

    fn cyclic_generator(n: usize) -> KxCochain {
        let g = FiniteGroup::cyclic(n);
        let ni = n as i64;
        KxCochain::from_fn(&g, 3, |t| {
            let (a, b, c) = (t[0] as i64, t[1] as i64, t[2] as i64);
            QZ::new(a * ((b + c) / ni), ni)
        })
    }

    #[test]
    fn zero_cocycle_has_full_center() {
        let q8 = FiniteGroup::quaternion();
        let z = central_subgroup_zomega(&q8, &KxCochain::zero(&q8, 3)).unwrap();
        assert_eq!(z, q8.center());
    }

    #[test]
    fn non_central_element_is_rejected() {
        let s3 = FiniteGroup::symmetric3();
        let z = (0..6).find(|&x| !s3.is_central(x)).unwrap();
        assert!(matches!(
            conjugation_cocycle(&s3, &KxCochain::zero(&s3, 3), z),
            Err(Error::NonCentralElement(_))
        ));
    }

    #[test]
    fn conjugation_classes_are_additive_for_abelian_groups() {
        let n = FiniteGroup::cyclic(4);
        let w = cyclic_generator(4);
        assert!(crate::cohomology::kx_is_cocycle(&n, &w));
        for z1 in 0..4 {
            for z2 in 0..4 {
                let lhs = conjugation_cocycle(&n, &w, n.mul(z1, z2)).unwrap();
                let rhs = conjugation_cocycle(&n, &w, z1).unwrap().add(&conjugation_cocycle(&n, &w, z2).unwrap());
                assert!(crate::cohomology::kx_cohomologous(&n, &lhs, &rhs).unwrap());
            }
        }
        // H²(Z/4, k×) = 0, so every c_z is trivial
        assert_eq!(central_subgroup_zomega(&n, &w).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn z2_generator_extends_to_z4() {
        let z4 = FiniteGroup::cyclic(4);
        let emb = Embedding::from_elements(&z4, &[0, 2]).unwrap();
        let w = KxCochain::from_fn(&emb.sub, 3, |t| if t == [1, 1, 1] { QZ::new(1, 2) } else { QZ::ZERO });
        let r = omega_extends(&emb, &w).unwrap();
        assert!(r.extendable);
        assert_eq!(r.kernel_order, 2);
        assert_eq!(r.class_count, 2);
        let ext = r.extension.unwrap();
        assert!(crate::cohomology::kx_cohomologous(&emb.sub, &ext.restrict(&emb), &w).unwrap());
        let z = omega_extends(&emb, &KxCochain::zero(&emb.sub, 3)).unwrap();
        assert!(z.extendable && z.class_count == 2);
    }

    #[test]
    fn d2_of_zero_vanishes() {
        let n = FiniteGroup::from_abelian(&FinAbGroup::new(vec![2, 2]).unwrap());
        let g = FiniteGroup::cyclic(2);
        let swap = vec![0, 2, 1, 3];
        let data = LhsData::split(n.clone(), g, vec![vec![0, 1, 2, 3], swap]).unwrap();
        let r = lhs_d2(&data, &KxCochain::zero(&n, 3)).unwrap();
        assert!(r.all_trivial && r.class_cocycle && r.vanishes);
    }

    #[test]
    fn d2_for_a_swap_invariant_class() {
        let n = FiniteGroup::from_abelian(&FinAbGroup::new(vec![2, 2]).unwrap());
        let g = FiniteGroup::cyclic(2);
        let data = LhsData::split(n.clone(), g, vec![vec![0, 1, 2, 3], vec![0, 2, 1, 3]]).unwrap();
        // element index x = 2·x₀ + x₁; ω = a₀b₀c₀/2 + a₁b₁c₁/2
        let w = KxCochain::from_fn(&n, 3, |t| {
            let bit = |x: usize, i: usize| ((x >> (1 - i)) & 1) as i64;
            QZ::new((0..2).map(|i| bit(t[0], i) * bit(t[1], i) * bit(t[2], i)).sum(), 2)
        });
        let r = lhs_d2(&data, &w).unwrap();
        assert!(r.class_cocycle);
        assert_eq!(r.u.len(), 2);
    }

    #[test]
    fn non_invariant_class_is_reported() {
        let n = FiniteGroup::from_abelian(&FinAbGroup::new(vec![2, 2]).unwrap());
        let g = FiniteGroup::cyclic(2);
        let data = LhsData::split(n.clone(), g, vec![vec![0, 1, 2, 3], vec![0, 2, 1, 3]]).unwrap();
        let w = KxCochain::from_fn(&n, 3, |t| QZ::new(((t[0] >> 1) & (t[1] >> 1) & (t[2] >> 1)) as i64, 2));
        assert!(matches!(lhs_d2(&data, &w), Err(Error::NotInvariant(_))));
    }

    #[test]
    fn bad_extension_data_is_rejected() {
        let n = FiniteGroup::cyclic(3);
        let g = FiniteGroup::cyclic(2);
        // Z/3 has no inner automorphisms, so φ(1)² = id is forced
        assert!(LhsData::split(n.clone(), g.clone(), vec![vec![0, 1, 2], vec![0, 2, 1]]).is_ok());
        assert!(LhsData::split(n, g, vec![vec![0, 2, 1], vec![0, 2, 1]]).is_err());
    }
}
