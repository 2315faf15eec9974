use std::sync::OnceLock;

use super::group::{Elem, FinAbGroup};
use super::lattice::{modp, ModLattice};
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

/// Homomorphism given by generator images: column `j` is the image of `e_j`.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    domain: FinAbGroup,
    codomain: FinAbGroup,
    matrix: Vec<Vec<i64>>,
    solver: OnceLock<ModLattice>,
}

impl PartialEq for Homomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.codomain == other.codomain && self.matrix == other.matrix
    }
}
impl Eq for Homomorphism {}

impl std::hash::Hash for Homomorphism {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.domain.hash(state);
        self.codomain.hash(state);
        self.matrix.hash(state);
    }
}

impl Homomorphism {
    /// `matrix` has one row per codomain generator and one column per domain generator.
    pub fn new(domain: FinAbGroup, codomain: FinAbGroup, matrix: Vec<Vec<i64>>) -> Result<Self> {
        if matrix.len() != codomain.rank() || matrix.iter().any(|r| r.len() != domain.rank()) {
            return Err(Error::InvalidData("homomorphism matrix has the wrong shape".into()));
        }
        let matrix: Vec<Vec<i64>> = matrix
            .iter()
            .zip(codomain.invariants())
            .map(|(r, &n)| r.iter().map(|&x| x.rem_euclid(n)).collect())
            .collect();
        for (j, &nj) in domain.invariants().iter().enumerate() {
            for (i, &ni) in codomain.invariants().iter().enumerate() {
                if modp(nj as i128 * matrix[i][j] as i128, ni) != 0 {
                    return Err(Error::InvalidData(format!(
                        "generator {j} of order {nj} cannot map to an element with coordinate {} mod {ni}",
                        matrix[i][j]
                    )));
                }
            }
        }
        Ok(Homomorphism { domain, codomain, matrix, solver: OnceLock::new() })
    }

    pub fn from_images(domain: FinAbGroup, codomain: FinAbGroup, images: &[Elem]) -> Result<Self> {
        if images.len() != domain.rank() {
            return Err(Error::InvalidData("wrong number of generator images".into()));
        }
        let m = (0..codomain.rank()).map(|i| images.iter().map(|y| y[i]).collect()).collect();
        Self::new(domain, codomain, m)
    }

    pub fn identity(g: &FinAbGroup) -> Self {
        let imgs: Vec<Elem> = (0..g.rank()).map(|i| g.basis(i)).collect();
        Self::from_images(g.clone(), g.clone(), &imgs).expect("identity is well defined")
    }

    pub fn zero(domain: &FinAbGroup, codomain: &FinAbGroup) -> Self {
        Self::new(domain.clone(), codomain.clone(), vec![vec![0; domain.rank()]; codomain.rank()]).expect("zero map")
    }

    /// Inclusion of summand `i` into `⊕ parts`.
    pub fn injection(parts: &[&FinAbGroup], i: usize) -> Self {
        let sum = FinAbGroup::direct_sum_all(parts);
        let off: usize = parts[..i].iter().map(|g| g.rank()).sum();
        let imgs: Vec<Elem> = (0..parts[i].rank()).map(|j| sum.basis(off + j)).collect();
        Self::from_images(parts[i].clone(), sum, &imgs).expect("injection")
    }

    /// Projection of `⊕ parts` onto summand `i`.
    pub fn projection(parts: &[&FinAbGroup], i: usize) -> Self {
        let sum = FinAbGroup::direct_sum_all(parts);
        let off: usize = parts[..i].iter().map(|g| g.rank()).sum();
        let m = (0..parts[i].rank())
            .map(|r| (0..sum.rank()).map(|c| i64::from(c == off + r)).collect())
            .collect();
        Self::new(sum, parts[i].clone(), m).expect("projection")
    }

    /// `(x_1, …) ↦ Σ f_i(x_i)` out of a direct sum of the domains.
    pub fn from_blocks(fs: &[&Homomorphism]) -> Result<Self> {
        let cod = fs.first().map(|f| f.codomain.clone()).ok_or_else(|| Error::InvalidData("no blocks".into()))?;
        if fs.iter().any(|f| f.codomain != cod) {
            return Err(Error::AmbientMismatch("blocks have different codomains".into()));
        }
        let dom = FinAbGroup::direct_sum_all(&fs.iter().map(|f| &f.domain).collect::<Vec<_>>());
        let m = (0..cod.rank()).map(|r| fs.iter().flat_map(|f| f.matrix[r].iter().copied()).collect()).collect();
        Self::new(dom, cod, m)
    }

    /// `x ↦ (f_1(x), f_2(x), …)` into a direct sum of the codomains.
    pub fn stack(fs: &[&Homomorphism]) -> Result<Self> {
        let dom = fs.first().map(|f| f.domain.clone()).ok_or_else(|| Error::InvalidData("no blocks".into()))?;
        if fs.iter().any(|f| f.domain != dom) {
            return Err(Error::AmbientMismatch("blocks have different domains".into()));
        }
        let cod = FinAbGroup::direct_sum_all(&fs.iter().map(|f| &f.codomain).collect::<Vec<_>>());
        let m = fs.iter().flat_map(|f| f.matrix.iter().cloned()).collect();
        Self::new(dom, cod, m)
    }

    /// `f ⊕ g` on direct sums.
    pub fn direct_sum(&self, other: &Homomorphism) -> Homomorphism {
        let dp = [&self.domain, &other.domain];
        let cp = [&self.codomain, &other.codomain];
        let a = Homomorphism::injection(&cp, 0).compose(self).expect("shape");
        let b = Homomorphism::injection(&cp, 1).compose(other).expect("shape");
        let pa = a.compose(&Homomorphism::projection(&dp, 0)).expect("shape");
        let pb = b.compose(&Homomorphism::projection(&dp, 1)).expect("shape");
        pa.add(&pb).expect("shape")
    }

    pub fn domain(&self) -> &FinAbGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FinAbGroup {
        &self.codomain
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn image_of_generator(&self, j: usize) -> Elem {
        self.matrix.iter().map(|r| r[j]).collect()
    }

    pub fn apply(&self, x: &[i64]) -> Elem {
        self.matrix
            .iter()
            .zip(self.codomain.invariants())
            .map(|(r, &n)| {
                let s: i128 = r.iter().zip(x).map(|(&a, &b)| a as i128 * b as i128).sum();
                modp(s, n)
            })
            .collect()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Homomorphism) -> Result<Homomorphism> {
        if inner.codomain != self.domain {
            return Err(Error::AmbientMismatch("cannot compose: codomain/domain differ".into()));
        }
        let imgs: Vec<Elem> = (0..inner.domain.rank()).map(|j| self.apply(&inner.image_of_generator(j))).collect();
        Homomorphism::from_images(inner.domain.clone(), self.codomain.clone(), &imgs)
    }

    pub fn add(&self, other: &Homomorphism) -> Result<Homomorphism> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::AmbientMismatch("cannot add homomorphisms with different ends".into()));
        }
        let imgs: Vec<Elem> = (0..self.domain.rank())
            .map(|j| self.codomain.add(&self.image_of_generator(j), &other.image_of_generator(j)))
            .collect();
        Homomorphism::from_images(self.domain.clone(), self.codomain.clone(), &imgs)
    }

    pub fn neg(&self) -> Homomorphism {
        let imgs: Vec<Elem> =
            (0..self.domain.rank()).map(|j| self.codomain.neg(&self.image_of_generator(j))).collect();
        Homomorphism::from_images(self.domain.clone(), self.codomain.clone(), &imgs).expect("negation")
    }

    fn modulus(&self) -> i64 {
        num_integer::lcm(self.domain.exponent(), self.codomain.exponent())
    }

    // Lattice spanned by (f(e_j) | e_j) and the relations, codomain columns first.
    fn solver(&self) -> &ModLattice {
        self.solver.get_or_init(|| {
            let l = self.codomain.rank();
            let k = self.domain.rank();
            let e = self.modulus();
            let mut lat = ModLattice::new(l + k, e);
            for (i, &n) in self.codomain.invariants().iter().enumerate() {
                if n < e {
                    lat.insert(&[(i, n)]);
                }
            }
            for (j, &n) in self.domain.invariants().iter().enumerate() {
                if n < e {
                    lat.insert(&[(l + j, n)]);
                }
            }
            for j in 0..k {
                let mut v: Vec<(usize, i64)> =
                    (0..l).filter(|&i| self.matrix[i][j] != 0).map(|i| (i, self.matrix[i][j])).collect();
                v.push((l + j, 1));
                lat.insert(&v);
            }
            lat.canonicalize();
            lat
        })
    }

    pub fn kernel(&self) -> Subgroup {
        let l = self.codomain.rank();
        let lat = self.solver();
        let gens: Vec<Elem> = lat
            .rows()
            .filter(|(j, _)| *j >= l)
            .map(|(_, r)| {
                let mut x = self.domain.zero();
                for &(c, v) in r {
                    x[c - l] = v;
                }
                self.domain.element(&x).expect("shape")
            })
            .collect();
        Subgroup::from_generators(&self.domain, &gens).expect("kernel generators lie in the domain")
    }

    pub fn image(&self) -> Subgroup {
        let gens: Vec<Elem> = (0..self.domain.rank()).map(|j| self.image_of_generator(j)).collect();
        Subgroup::from_generators(&self.codomain, &gens).expect("images lie in the codomain")
    }

    /// Image of a subgroup of the domain.
    pub fn image_of(&self, s: &Subgroup) -> Result<Subgroup> {
        if s.ambient() != &self.domain {
            return Err(Error::AmbientMismatch("subgroup is not in the domain".into()));
        }
        let gens: Vec<Elem> = s.generators().iter().map(|g| self.apply(g)).collect();
        Subgroup::from_generators(&self.codomain, &gens)
    }

    /// Some `x` with `f(x) = y`, if any.
    pub fn preimage(&self, y: &[i64]) -> Result<Option<Elem>> {
        self.codomain.check(y)?;
        let l = self.codomain.rank();
        let v: Vec<(usize, i64)> = y.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect();
        let r = self.solver().reduce(&v);
        if r.iter().any(|&(c, _)| c < l) {
            return Ok(None);
        }
        let mut x = self.domain.zero();
        for &(c, val) in &r {
            x[c - l] = -val;
        }
        let x = self.domain.element(&x)?;
        debug_assert_eq!(self.apply(&x), y);
        Ok(Some(x))
    }

    /// Preimage of a subgroup of the codomain.
    pub fn preimage_of(&self, t: &Subgroup) -> Result<Subgroup> {
        if t.ambient() != &self.codomain {
            return Err(Error::AmbientMismatch("subgroup is not in the codomain".into()));
        }
        let q = t.quotient();
        q.projection.compose(self).map(|h| h.kernel())
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().order() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.codomain.order()
    }

    /// Restriction to a subgroup, as a map out of its abstract presentation.
    pub fn restrict(&self, s: &Subgroup) -> Result<Homomorphism> {
        if s.ambient() != &self.domain {
            return Err(Error::AmbientMismatch("subgroup is not in the domain".into()));
        }
        self.compose(&s.presentation().inclusion)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn doubling_on_z4() {
        let g = FinAbGroup::cyclic(4);
        let f = Homomorphism::new(g.clone(), g.clone(), vec![vec![2]]).unwrap();
        assert_eq!(f.kernel().order(), 2);
        assert_eq!(f.image().order(), 2);
        assert!(f.kernel().contains(&[2]).unwrap());
        assert_eq!(f.preimage(&[2]).unwrap().map(|x| f.apply(&x)), Some(vec![2]));
        assert_eq!(f.preimage(&[1]).unwrap(), None);
    }

    #[test]
    fn z6_to_z4() {
        let f = Homomorphism::new(FinAbGroup::cyclic(6), FinAbGroup::cyclic(4), vec![vec![2]]).unwrap();
        let k = f.kernel();
        assert_eq!(k.order(), 3);
        for x in [0, 2, 4] {
            assert!(k.contains(&[x]).unwrap());
        }
        assert_eq!(f.image().order(), 2);
        assert!(Homomorphism::new(FinAbGroup::cyclic(6), FinAbGroup::cyclic(4), vec![vec![1]]).is_err());
    }

    #[test]
    fn kernel_image_orders_bruteforce() {
        let a = FinAbGroup::new(vec![2, 4, 3]).unwrap();
        let b = FinAbGroup::new(vec![4, 6]).unwrap();
        let f = Homomorphism::new(a.clone(), b.clone(), vec![vec![2, 1, 0], vec![3, 0, 2]]).unwrap();
        let ker_bf = a.elements().into_iter().filter(|x| b.is_zero(&f.apply(x))).count() as u128;
        let im_bf: std::collections::HashSet<_> = a.elements().iter().map(|x| f.apply(x)).collect();
        assert_eq!(f.kernel().order(), ker_bf);
        assert_eq!(f.image().order(), im_bf.len() as u128);
        assert_eq!(f.kernel().order() * f.image().order(), a.order());
        for y in b.elements() {
            let p = f.preimage(&y).unwrap();
            assert_eq!(p.is_some(), im_bf.contains(&y));
        }
    }
}
