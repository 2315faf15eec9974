use std::collections::BTreeSet;

use crate::abelian::FinAbGroup;
use crate::error::{Error, Result};

/// Finite group given by its multiplication table on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
    id: usize,
}

impl FiniteGroup {
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidData("multiplication table must be a nonempty square over 0..n".into()));
        }
        let flat: Vec<usize> = table.concat();
        let m = |a: usize, b: usize| flat[a * n + b];
        let id = (0..n)
            .find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| Error::InvalidData("table has no identity".into()))?;
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            inv[a] = (0..n)
                .find(|&b| m(a, b) == id && m(b, a) == id)
                .ok_or_else(|| Error::InvalidData(format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::InvalidData(format!("table is not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { n, table: flat, inv, id })
    }

    fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let t: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
        FiniteGroup::from_table(t).expect("built-in group")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        Self::from_fn(n, |a, b| (a + b) % n)
    }

    /// Elements indexed in the lexicographic order of [`FinAbGroup::elements`].
    pub fn from_abelian(a: &FinAbGroup) -> Self {
        let n = a.order() as usize;
        Self::from_fn(n, |x, y| a.index_of(&a.add(&a.from_index(x), &a.from_index(y))))
    }

    /// `(g, h) ↦ g·|H| + h`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let m = other.n;
        Self::from_fn(self.n * m, |x, y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
    }

    /// Dihedral group of order `2m`: `r^i s^j ↦ 2i + j`.
    pub fn dihedral(m: usize) -> Self {
        Self::from_fn(2 * m, |x, y| {
            let (i, j) = (x / 2, x % 2);
            let (k, l) = (y / 2, y % 2);
            // r^i s^j r^k s^l = r^(i ± k) s^(j+l)
            let r = if j == 0 { (i + k) % m } else { (i + m - k) % m };
            2 * r + (j + l) % 2
        })
    }

    pub fn symmetric3() -> Self {
        Self::dihedral(3)
    }

    /// Quaternion group: `±1, ±i, ±j, ±k` as `0..8` with sign in the low bit.
    pub fn quaternion() -> Self {
        // unit product table on 1,i,j,k with signs
        const T: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        Self::from_fn(8, |x, y| {
            let (u, su) = (x / 2, x % 2 == 1);
            let (v, sv) = (y / 2, y % 2 == 1);
            let (w, sw) = T[u][v];
            2 * w + usize::from(su ^ sv ^ sw)
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.id
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_central(&self, z: usize) -> bool {
        (0..self.n).all(|a| self.mul(a, z) == self.mul(z, a))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n).filter(|&z| self.is_central(z)).collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.id {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Sorted subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = BTreeSet::from([self.id]);
        let mut todo = vec![self.id];
        while let Some(x) = todo.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    todo.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Every subgroup, as sorted element lists.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let mut all = BTreeSet::from([vec![self.id]]);
        let mut todo = vec![vec![self.id]];
        while let Some(s) = todo.pop() {
            for g in 0..self.n {
                if s.binary_search(&g).is_err() {
                    let mut gens = s.clone();
                    gens.push(g);
                    let t = self.generated(&gens);
                    if all.insert(t.clone()) {
                        todo.push(t);
                    }
                }
            }
        }
        all.into_iter().collect()
    }

    /// Is `f` (a permutation of `0..n`) an automorphism?
    pub fn is_automorphism(&self, f: &[usize]) -> bool {
        f.len() == self.n
            && f.iter().collect::<BTreeSet<_>>().len() == self.n
            && (0..self.n).all(|a| (0..self.n).all(|b| f[self.mul(a, b)] == self.mul(f[a], f[b])))
    }
}

/// Injective homomorphism `sub → parent` given on elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding {
    pub sub: FiniteGroup,
    pub parent: FiniteGroup,
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn new(sub: FiniteGroup, parent: FiniteGroup, map: Vec<usize>) -> Result<Self> {
        if map.len() != sub.order() || map.iter().any(|&x| x >= parent.order()) {
            return Err(Error::InvalidData("embedding map has the wrong shape".into()));
        }
        if map.iter().collect::<BTreeSet<_>>().len() != map.len() {
            return Err(Error::InvalidData("embedding map is not injective".into()));
        }
        for a in 0..sub.order() {
            for b in 0..sub.order() {
                if map[sub.mul(a, b)] != parent.mul(map[a], map[b]) {
                    return Err(Error::InvalidData(format!("embedding map is not a homomorphism at ({a},{b})")));
                }
            }
        }
        Ok(Embedding { sub, parent, map })
    }

    /// The subgroup on a sorted list of elements closed under the product.
    pub fn from_elements(parent: &FiniteGroup, elems: &[usize]) -> Result<Self> {
        let pos = |x: usize| elems.iter().position(|&y| y == x);
        let mut t = vec![];
        for &a in elems {
            let row: Option<Vec<usize>> = elems.iter().map(|&b| pos(parent.mul(a, b))).collect();
            t.push(row.ok_or_else(|| Error::InvalidData("elements are not closed under the product".into()))?);
        }
        Embedding::new(FiniteGroup::from_table(t)?, parent.clone(), elems.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        let s3 = FiniteGroup::symmetric3();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.center(), vec![0]);
        assert_eq!(s3.subgroups().len(), 6);
        let q = FiniteGroup::quaternion();
        assert!(!q.is_abelian());
        assert_eq!(q.center().len(), 2);
        assert_eq!(q.subgroups().len(), 6);
        assert_eq!((0..8).filter(|&x| q.element_order(x) == 4).count(), 6);
        let d4 = FiniteGroup::dihedral(4);
        assert_eq!(d4.subgroups().len(), 10);
        let v = FiniteGroup::from_abelian(&FinAbGroup::new(vec![2, 2]).unwrap());
        assert!(v.is_abelian());
        assert_eq!(v.subgroups().len(), 5);
        assert_eq!(FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2)).subgroups().len(), 5);
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![0, 1]]).is_err());
        let e = Embedding::from_elements(&FiniteGroup::cyclic(4), &[0, 2]).unwrap();
        assert_eq!(e.sub.order(), 2);
        assert!(Embedding::from_elements(&FiniteGroup::cyclic(4), &[0, 1]).is_err());
    }
}
