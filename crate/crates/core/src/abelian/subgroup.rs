use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::group::{Elem, FinAbGroup};
use super::hom::Homomorphism;
use super::lattice::{modp, ModLattice};
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

/// Subgroup of a finite abelian group, stored as the reduced Hermite basis of
/// its lifted lattice (relation rows `n_i e_i` included).
#[derive(Clone, Debug)]
pub struct Subgroup {
    ambient: FinAbGroup,
    lattice: ModLattice,
    gens: Vec<Elem>,
    // pivot column of each canonical generator
    gen_cols: Vec<usize>,
    presentation: OnceLock<Arc<Presentation>>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.lattice == other.lattice
    }
}
impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.lattice.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    /// Order first, then the canonical generator lists.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then(self.order().cmp(&other.order()))
            .then_with(|| self.lattice.pivots().cmp(&other.lattice.pivots()))
            .then_with(|| self.gens.cmp(&other.gens))
    }
}

/// A subgroup as an abstract group: `inclusion` maps it onto the subgroup.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub group: FinAbGroup,
    pub inclusion: Homomorphism,
    gen_coords: Vec<Elem>,
}

impl Presentation {
    /// Coordinates in `group` of an element of the subgroup given by its
    /// coefficients on the canonical generators.
    pub fn from_gen_coeffs(&self, c: &[i64]) -> Elem {
        let mut out = self.group.zero();
        for (coef, img) in c.iter().zip(&self.gen_coords) {
            out = self.group.add(&out, &self.group.scale(*coef, img));
        }
        out
    }
}

/// `G/S` with its projection and lifts of the quotient generators.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FinAbGroup,
    pub projection: Homomorphism,
    pub section: Vec<Elem>,
}

impl Subgroup {
    fn from_lattice(ambient: &FinAbGroup, mut lattice: ModLattice) -> Subgroup {
        lattice.canonicalize();
        let mut gens = vec![];
        let mut gen_cols = vec![];
        for (j, row) in lattice.rows() {
            let mut x = ambient.zero();
            for &(c, v) in row {
                x[c] = v;
            }
            let x = ambient.element(&x).expect("row shape");
            if !ambient.is_zero(&x) {
                gens.push(x);
                gen_cols.push(j);
            }
        }
        Subgroup { ambient: ambient.clone(), lattice, gens, gen_cols, presentation: OnceLock::new() }
    }

    fn base_lattice(g: &FinAbGroup) -> ModLattice {
        let e = g.exponent();
        let mut lat = ModLattice::new(g.rank(), e);
        for (i, &n) in g.invariants().iter().enumerate() {
            if n < e {
                lat.insert(&[(i, n)]);
            }
        }
        lat
    }

    pub fn from_generators(g: &FinAbGroup, gens: &[Elem]) -> Result<Subgroup> {
        let mut lat = Self::base_lattice(g);
        for x in gens {
            g.check(x)?;
            lat.insert_dense(x);
        }
        Ok(Self::from_lattice(g, lat))
    }

    pub fn trivial(g: &FinAbGroup) -> Subgroup {
        Self::from_lattice(g, Self::base_lattice(g))
    }

    pub fn whole(g: &FinAbGroup) -> Subgroup {
        let gens: Vec<Elem> = (0..g.rank()).map(|i| g.basis(i)).collect();
        Self::from_generators(g, &gens).expect("basis elements")
    }

    pub fn ambient(&self) -> &FinAbGroup {
        &self.ambient
    }

    /// Canonical generators (Hermite rows that are nonzero in the group).
    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn lattice(&self) -> &ModLattice {
        &self.lattice
    }

    pub fn order(&self) -> u128 {
        self.ambient
            .invariants()
            .iter()
            .enumerate()
            .map(|(i, &n)| (n / self.lattice.pivot(i)) as u128)
            .product()
    }

    pub fn index(&self) -> u128 {
        self.ambient.order() / self.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.ambient.order()
    }

    pub fn contains(&self, x: &[i64]) -> Result<bool> {
        self.ambient.check(x)?;
        let v: Vec<(usize, i64)> = x.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect();
        Ok(self.lattice.contains(&v))
    }

    /// Coefficients of `x` on the canonical generators, `None` if `x ∉ S`.
    pub fn decompose(&self, x: &[i64]) -> Option<Vec<i64>> {
        let v: Vec<(usize, i64)> = x.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect();
        let d = self.lattice.decompose(&v)?;
        let mut out = vec![0; self.gens.len()];
        for (col, c) in d {
            if let Some(pos) = self.gen_cols.iter().position(|&j| j == col) {
                out[pos] = c;
            }
        }
        Some(out)
    }

    fn same_ambient(&self, other: &Subgroup) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(format!(
                "{:?} vs {:?}",
                self.ambient.invariants(),
                other.ambient.invariants()
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subgroup) -> Result<Subgroup> {
        self.same_ambient(other)?;
        let mut lat = self.lattice.clone();
        for g in &other.gens {
            lat.insert_dense(g);
        }
        Ok(Self::from_lattice(&self.ambient, lat))
    }

    pub fn intersect(&self, other: &Subgroup) -> Result<Subgroup> {
        self.same_ambient(other)?;
        let k = self.ambient.rank();
        let e = self.lattice.modulus();
        // rows (u|u) for u in S and (v|0) for v in T; the part with zero first block is S∩T
        let mut big = ModLattice::new(2 * k, e);
        for (_, r) in self.lattice.rows() {
            let mut v = r.clone();
            v.extend(r.iter().map(|&(c, x)| (c + k, x)));
            big.insert(&v);
        }
        for (_, r) in other.lattice.rows() {
            big.insert(r);
        }
        let mut lat = Self::base_lattice(&self.ambient);
        for (j, r) in big.rows() {
            if j >= k {
                let v: Vec<(usize, i64)> = r.iter().map(|&(c, x)| (c - k, x)).collect();
                lat.insert(&v);
            }
        }
        Ok(Self::from_lattice(&self.ambient, lat))
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.gens.iter().all(|g| other.contains(g).unwrap_or(false)))
    }

    /// All elements (intended for small subgroups).
    pub fn elements(&self) -> Vec<Elem> {
        let p = self.presentation();
        p.group.elements().iter().map(|x| p.inclusion.apply(x)).collect()
    }

    /// Quotient `ambient / self`.
    pub fn quotient(&self) -> Quotient {
        let g = &self.ambient;
        let k = g.rank();
        let e = self.lattice.modulus();
        let m: Vec<Vec<BigInt>> = (0..k)
            .map(|j| {
                let mut row = vec![BigInt::zero(); k];
                match self.lattice.row(j) {
                    Some(r) => {
                        for &(c, x) in r {
                            row[c] = BigInt::from(x);
                        }
                    }
                    None => row[j] = BigInt::from(e),
                }
                row
            })
            .collect();
        let s = smith_normal_form(&m);
        let diag = s.diagonal();
        let keep: Vec<usize> = (0..k).filter(|&i| !diag[i].is_one()).collect();
        let invs: Vec<i64> = keep.iter().map(|&i| diag[i].to_i64().expect("fits")).collect();
        let q = FinAbGroup::new(invs.clone()).expect("quotient invariants are >= 2");
        let mat: Vec<Vec<i64>> = keep
            .iter()
            .zip(&invs)
            .map(|(&i, &d)| (0..k).map(|j| big_mod(&s.v[j][i], d)).collect())
            .collect();
        let projection = Homomorphism::new(g.clone(), q.clone(), mat).expect("projection is well defined");
        let section = keep
            .iter()
            .map(|&i| {
                let x: Vec<i64> = (0..k).map(|j| big_mod(&s.v_inv[i][j], g.invariants()[j])).collect();
                x
            })
            .collect();
        Quotient { group: q, projection, section }
    }

    /// Abstract presentation of the subgroup (cached).
    pub fn presentation(&self) -> Arc<Presentation> {
        self.presentation
            .get_or_init(|| {
                let g = &self.ambient;
                let orders: Vec<i64> = self.gens.iter().map(|x| g.element_order(x)).collect();
                let free = FinAbGroup::new(orders).expect("generator orders >= 2");
                let pi = Homomorphism::from_images(free.clone(), g.clone(), &self.gens).expect("generator map");
                let q = pi.kernel().quotient();
                let incl_imgs: Vec<Elem> = q.section.iter().map(|x| pi.apply(x)).collect();
                let inclusion =
                    Homomorphism::from_images(q.group.clone(), g.clone(), &incl_imgs).expect("inclusion");
                let gen_coords = (0..free.rank()).map(|s| q.projection.image_of_generator(s)).collect();
                Arc::new(Presentation { group: q.group, inclusion, gen_coords })
            })
            .clone()
    }

    /// Coordinates of `x ∈ S` in the abstract presentation.
    pub fn abstract_coords(&self, x: &[i64]) -> Option<Elem> {
        let c = self.decompose(x)?;
        Some(self.presentation().from_gen_coeffs(&c))
    }

    /// Annihilator in the dual group (same invariants) under `⟨a,f⟩ = Σ a_i f_i / n_i`.
    pub fn annihilator(&self) -> Subgroup {
        let g = &self.ambient;
        let e = g.exponent();
        let target = FinAbGroup::from_orders(&vec![e; self.gens.len()]).expect("cyclic factors");
        if target.rank() == 0 {
            return Subgroup::whole(g);
        }
        let mat: Vec<Vec<i64>> = self
            .gens
            .iter()
            .map(|b| (0..g.rank()).map(|i| modp(b[i] as i128 * (e / g.invariants()[i]) as i128, e)).collect())
            .collect();
        Homomorphism::new(g.clone(), target, mat).expect("pairing map").kernel()
    }

    /// Image of this subgroup under an embedding into a larger group.
    pub fn map(&self, f: &Homomorphism) -> Result<Subgroup> {
        f.image_of(self)
    }
}

fn big_mod(x: &BigInt, n: i64) -> i64 {
    let r = x % BigInt::from(n);
    let r = r.to_i64().expect("fits");
    r.rem_euclid(n)
}

/// Pairing `⟨a, f⟩ = Σ a_i f_i / n_i` as a numerator over the exponent.
pub fn dual_pairing(g: &FinAbGroup, a: &[i64], f: &[i64]) -> i64 {
    let e = g.exponent();
    let s: i128 = (0..g.rank()).map(|i| a[i] as i128 * f[i] as i128 * (e / g.invariants()[i]) as i128).sum();
    modp(s, e)
}

/// Every subgroup of a (small) group, in canonical order.
pub fn all_subgroups(g: &FinAbGroup) -> Vec<Subgroup> {
    use std::collections::HashSet;
    let elems = g.elements();
    let mut seen: HashSet<Subgroup> = HashSet::new();
    let start = Subgroup::trivial(g);
    seen.insert(start.clone());
    let mut frontier = vec![start];
    while let Some(s) = frontier.pop() {
        for x in &elems {
            if s.contains(x).unwrap_or(true) {
                continue;
            }
            let mut gens = s.generators().to_vec();
            gens.push(x.clone());
            let t = Subgroup::from_generators(g, &gens).expect("elements of g");
            if seen.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    let mut out: Vec<Subgroup> = seen.into_iter().collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn brute_span(g: &FinAbGroup, gens: &[Elem]) -> HashSet<Elem> {
        let mut s: HashSet<Elem> = HashSet::new();
        s.insert(g.zero());
        loop {
            let cur: Vec<Elem> = s.iter().cloned().collect();
            let before = s.len();
            for x in &cur {
                for y in gens {
                    s.insert(g.add(x, y));
                }
            }
            if s.len() == before {
                return s;
            }
        }
    }

    #[test]
    fn spec_examples() {
        let z4 = FinAbGroup::cyclic(4);
        let s = Subgroup::from_generators(&z4, &[vec![2]]).unwrap();
        assert_eq!(s.order(), 2);
        assert!(!s.contains(&[1]).unwrap());
        let v = FinAbGroup::new(vec![2, 2]).unwrap();
        let a = Subgroup::from_generators(&v, &[vec![1, 0]]).unwrap();
        let b = Subgroup::from_generators(&v, &[vec![0, 1]]).unwrap();
        assert!(a.intersect(&b).unwrap().is_trivial());
        assert!(a.sum(&b).unwrap().is_whole());
        let z6 = FinAbGroup::cyclic(6);
        assert_eq!(Subgroup::from_generators(&z6, &[vec![2], vec![3]]).unwrap().order(), 6);
        let z12 = FinAbGroup::cyclic(12);
        let s2 = Subgroup::from_generators(&z12, &[vec![2]]).unwrap();
        let s3 = Subgroup::from_generators(&z12, &[vec![3]]).unwrap();
        let i = s2.intersect(&s3).unwrap();
        assert_eq!(i, Subgroup::from_generators(&z12, &[vec![6]]).unwrap());
        assert_eq!(i.order(), 2);
        let q = s.quotient();
        assert_eq!(q.group.invariants(), &[2]);
        assert_eq!(s.annihilator(), s);
        assert!(Subgroup::trivial(&z4).annihilator().is_whole());
        assert!(Subgroup::whole(&z4).annihilator().is_trivial());
    }

    #[test]
    fn ambient_mismatch() {
        let a = Subgroup::trivial(&FinAbGroup::cyclic(4));
        let b = Subgroup::trivial(&FinAbGroup::cyclic(2));
        assert!(a.sum(&b).is_err());
        assert!(Subgroup::from_generators(&FinAbGroup::cyclic(4), &[vec![0, 1]]).is_err());
    }

    #[test]
    fn subgroup_lattice_invariants_order_36() {
        for g in FinAbGroup::all_up_to(36) {
            let subs = all_subgroups(&g);
            for s in &subs {
                assert_eq!(s.quotient().group.order() * s.order(), g.order());
                assert_eq!(Subgroup::from_generators(&g, s.generators()).unwrap(), *s);
                assert_eq!(s.annihilator().order() * s.order(), g.order());
                assert_eq!(s.annihilator().annihilator(), *s);
                let p = s.presentation();
                assert_eq!(p.group.order(), s.order());
                assert!(p.inclusion.is_injective());
                assert_eq!(p.inclusion.image(), *s);
            }
            if g.order() <= 16 {
                for s in &subs {
                    for t in &subs {
                        let i = s.intersect(t).unwrap();
                        let u = s.sum(t).unwrap();
                        assert_eq!(i.order() * u.order(), s.order() * t.order());
                    }
                }
            }
        }
    }

    #[test]
    fn known_subgroup_counts() {
        // Z/2^2 has 5 subgroups, Z/2^3 has 16, Z/4 + Z/2 has 8, Z/12 has 6
        let c = |inv: Vec<i64>| all_subgroups(&FinAbGroup::new(inv).unwrap()).len();
        assert_eq!(c(vec![2, 2]), 5);
        assert_eq!(c(vec![2, 2, 2]), 16);
        assert_eq!(c(vec![2, 4]), 8);
        assert_eq!(c(vec![12]), 6);
    }

    proptest::proptest! {
        #[test]
        fn generated_subgroups_match_span(gens in proptest::collection::vec((0i64..4, 0i64..6, 0i64..2), 0..4)) {
            let g = FinAbGroup::new(vec![4, 6, 2]).unwrap();
            let gens: Vec<Elem> = gens.into_iter().map(|(a, b, c)| vec![a, b, c]).collect();
            let s = Subgroup::from_generators(&g, &gens).unwrap();
            let span = brute_span(&g, &gens);
            proptest::prop_assert_eq!(s.order(), span.len() as u128);
            for x in g.elements() {
                proptest::prop_assert_eq!(s.contains(&x).unwrap(), span.contains(&x));
                if let Some(c) = s.decompose(&x) {
                    let mut y = g.zero();
                    for (coef, gen) in c.iter().zip(s.generators()) { y = g.add(&y, &g.scale(*coef, gen)); }
                    proptest::prop_assert_eq!(y, x.clone());
                    let ac = s.abstract_coords(&x).unwrap();
                    proptest::prop_assert_eq!(s.presentation().inclusion.apply(&ac), x);
                }
            }
            let q = s.quotient();
            for x in g.elements() {
                proptest::prop_assert_eq!(q.group.is_zero(&q.projection.apply(&x)), span.contains(&x));
            }
            for (i, lift) in q.section.iter().enumerate() {
                proptest::prop_assert_eq!(q.projection.apply(lift), q.group.basis(i));
            }
        }
    }
}
