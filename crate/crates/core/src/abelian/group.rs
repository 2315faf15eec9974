use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::lattice::modp;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

/// Element coordinates, coordinate `i` reduced mod the `i`-th invariant.
pub type Elem = Vec<i64>;

/// Finite abelian group `Z/n_1 ⊕ ... ⊕ Z/n_k`, invariants kept as given.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinAbGroup {
    invariants: Vec<i64>,
}

impl FinAbGroup {
    pub fn new(invariants: Vec<i64>) -> Result<Self> {
        if let Some(n) = invariants.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidData(format!("invariant {n} is smaller than 2")));
        }
        let g = FinAbGroup { invariants };
        g.order_checked()
            .ok_or_else(|| Error::InvalidData("group order overflows".into()))?;
        Ok(g)
    }

    /// Like [`FinAbGroup::new`] but drops invariants equal to 1.
    pub fn from_orders(orders: &[i64]) -> Result<Self> {
        Self::new(orders.iter().copied().filter(|&n| n != 1).collect())
    }

    pub fn cyclic(n: i64) -> Self {
        Self::from_orders(&[n]).expect("positive cyclic order")
    }

    pub fn trivial() -> Self {
        FinAbGroup { invariants: vec![] }
    }

    pub fn invariants(&self) -> &[i64] {
        &self.invariants
    }

    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    fn order_checked(&self) -> Option<u128> {
        self.invariants.iter().try_fold(1u128, |acc, &n| acc.checked_mul(n as u128))
    }

    pub fn order(&self) -> u128 {
        self.order_checked().expect("order checked at construction")
    }

    pub fn exponent(&self) -> i64 {
        self.invariants.iter().fold(1i64, |a, &n| num_integer::lcm(a, n))
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    /// Divisor-chain form `d_1 | d_2 | ...` of the same group.
    pub fn canonical(&self) -> FinAbGroup {
        let k = self.rank();
        let m: Vec<Vec<BigInt>> = (0..k)
            .map(|i| (0..k).map(|j| if i == j { BigInt::from(self.invariants[i]) } else { BigInt::from(0) }).collect())
            .collect();
        let s = smith_normal_form(&m);
        let inv = s
            .diagonal()
            .into_iter()
            .filter(|d| !d.is_one())
            .map(|d| d.to_i64().expect("invariant fits"))
            .collect();
        FinAbGroup { invariants: inv }
    }

    pub fn is_isomorphic(&self, other: &FinAbGroup) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut inv = self.invariants.clone();
        inv.extend_from_slice(&other.invariants);
        FinAbGroup { invariants: inv }
    }

    pub fn direct_sum_all(parts: &[&FinAbGroup]) -> FinAbGroup {
        FinAbGroup { invariants: parts.iter().flat_map(|g| g.invariants.iter().copied()).collect() }
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.rank()]
    }

    pub fn basis(&self, i: usize) -> Elem {
        let mut e = self.zero();
        e[i] = 1;
        e
    }

    /// Reduce arbitrary integer coordinates into the group.
    pub fn element(&self, coords: &[i64]) -> Result<Elem> {
        if coords.len() != self.rank() {
            return Err(Error::ParentMismatch(format!(
                "expected {} coordinates, got {}",
                self.rank(),
                coords.len()
            )));
        }
        Ok(coords.iter().zip(&self.invariants).map(|(&c, &n)| c.rem_euclid(n)).collect())
    }

    pub fn check(&self, x: &[i64]) -> Result<()> {
        if x.len() != self.rank() || x.iter().zip(&self.invariants).any(|(&c, &n)| c < 0 || c >= n) {
            return Err(Error::ParentMismatch(format!("{x:?} is not a reduced element of {:?}", self.invariants)));
        }
        Ok(())
    }

    pub fn add(&self, x: &[i64], y: &[i64]) -> Elem {
        x.iter().zip(y).zip(&self.invariants).map(|((&a, &b), &n)| (a + b) % n).collect()
    }

    pub fn sub(&self, x: &[i64], y: &[i64]) -> Elem {
        x.iter().zip(y).zip(&self.invariants).map(|((&a, &b), &n)| (a - b).rem_euclid(n)).collect()
    }

    pub fn neg(&self, x: &[i64]) -> Elem {
        x.iter().zip(&self.invariants).map(|(&a, &n)| (n - a) % n).collect()
    }

    pub fn scale(&self, c: i64, x: &[i64]) -> Elem {
        x.iter().zip(&self.invariants).map(|(&a, &n)| modp(c as i128 * a as i128, n)).collect()
    }

    pub fn is_zero(&self, x: &[i64]) -> bool {
        x.iter().all(|&c| c == 0)
    }

    pub fn element_order(&self, x: &[i64]) -> i64 {
        x.iter()
            .zip(&self.invariants)
            .fold(1, |acc, (&a, &n)| num_integer::lcm(acc, n / num_integer::gcd(a, n)))
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> Vec<Elem> {
        let total = self.order() as usize;
        let mut out = Vec::with_capacity(total);
        let mut cur = self.zero();
        for _ in 0..total {
            out.push(cur.clone());
            for i in (0..self.rank()).rev() {
                cur[i] += 1;
                if cur[i] < self.invariants[i] {
                    break;
                }
                cur[i] = 0;
            }
        }
        out
    }

    /// Mixed-radix index of an element (inverse of the `elements` order).
    pub fn index_of(&self, x: &[i64]) -> usize {
        x.iter().zip(&self.invariants).fold(0usize, |acc, (&a, &n)| acc * n as usize + a as usize)
    }

    pub fn from_index(&self, mut idx: usize) -> Elem {
        let mut out = self.zero();
        for i in (0..self.rank()).rev() {
            let n = self.invariants[i] as usize;
            out[i] = (idx % n) as i64;
            idx /= n;
        }
        out
    }

    /// Every finite abelian group of order at most `n`, once, in divisor-chain form.
    pub fn all_up_to(n: i64) -> Vec<FinAbGroup> {
        fn rec(prefix: Vec<i64>, order: i64, n: i64, out: &mut Vec<FinAbGroup>) {
            out.push(FinAbGroup::new(prefix.clone()).expect("invariants exceed 1"));
            let mut d = *prefix.last().unwrap_or(&2);
            while order * d <= n {
                if prefix.last().is_none_or(|&l| d % l == 0) {
                    let mut p = prefix.clone();
                    p.push(d);
                    rec(p, order * d, n, out);
                }
                d += 1;
            }
        }
        let mut out = vec![];
        rec(vec![], 1, n, &mut out);
        out
    }

    /// The dual group `Hom(A, Q/Z)`, with the same invariants.
    pub fn dual(&self) -> FinAbGroup {
        self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        let g = FinAbGroup::new(vec![4, 6]).unwrap();
        assert_eq!(g.canonical().invariants(), &[2, 12]);
        assert_eq!(g.canonical().canonical(), g.canonical());
        assert_eq!(FinAbGroup::new(vec![2, 3]).unwrap().canonical().invariants(), &[6]);
        assert!(FinAbGroup::new(vec![1]).is_err());
        assert!(FinAbGroup::trivial().canonical().is_trivial());
        assert_eq!(g.dual().dual().invariants(), g.invariants());
    }

    #[test]
    fn element_arithmetic() {
        let g = FinAbGroup::new(vec![4, 6]).unwrap();
        let x = g.element(&[-1, 8]).unwrap();
        assert_eq!(x, vec![3, 2]);
        assert_eq!(g.add(&x, &g.neg(&x)), g.zero());
        assert_eq!(g.element_order(&x), 12);
        assert_eq!(g.elements().len(), 24);
        for (i, e) in g.elements().iter().enumerate() {
            assert_eq!(g.index_of(e), i);
            assert_eq!(&g.from_index(i), e);
        }
        assert!(g.element(&[1]).is_err());
    }
}
