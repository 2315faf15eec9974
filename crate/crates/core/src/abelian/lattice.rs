//! Integer lattices `L` with `e·Z^n ⊆ L ⊆ Z^n`, kept as a sparse Hermite
//! (echelon) basis with all entries reduced mod `e`.
//!
//! Columns without an explicit pivot row carry the implicit row `e·e_j`.
//! After [`ModLattice::canonicalize`] the representation is unique.

use std::collections::BTreeMap;

pub type SparseVec = Vec<(usize, i64)>;

#[inline]
pub fn modp(a: i128, m: i64) -> i64 {
    a.rem_euclid(m as i128) as i64
}

/// `(g, s, t)` with `s*a + t*b = g = gcd(a, b) >= 0`.
pub fn xgcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (r0, s0, t0) = (-r0, -s0, -t0);
    }
    (r0 as i64, s0 as i64, t0 as i64)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModLattice {
    modulus: i64,
    dim: usize,
    rows: Vec<Option<SparseVec>>,
}

pub(crate) fn axpy(w: &mut BTreeMap<usize, i64>, c: i64, row: &[(usize, i64)], e: i64) {
    if c.rem_euclid(e) == 0 {
        return;
    }
    for &(k, x) in row {
        let cur = w.get(&k).copied().unwrap_or(0);
        let v = modp(cur as i128 + c as i128 * x as i128, e);
        if v == 0 {
            w.remove(&k);
        } else {
            w.insert(k, v);
        }
    }
}

fn lincomb(a: i64, x: &[(usize, i64)], b: i64, y: &[(usize, i64)], e: i64) -> SparseVec {
    let mut w: BTreeMap<usize, i64> = BTreeMap::new();
    axpy(&mut w, a, x, e);
    axpy(&mut w, b, y, e);
    w.into_iter().collect()
}

impl ModLattice {
    /// The lattice `e·Z^dim`.
    pub fn new(dim: usize, modulus: i64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        assert!(modulus < (1i64 << 62), "modulus too large");
        ModLattice { modulus, dim, rows: vec![None; dim] }
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Pivot at column `j` (the modulus when no explicit row).
    pub fn pivot(&self, j: usize) -> i64 {
        self.rows[j].as_ref().map_or(self.modulus, |r| r[0].1)
    }

    pub fn row(&self, j: usize) -> Option<&SparseVec> {
        self.rows[j].as_ref()
    }

    /// Explicit rows as `(pivot column, row)`.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseVec)> {
        self.rows.iter().enumerate().filter_map(|(j, r)| r.as_ref().map(|r| (j, r)))
    }

    pub fn explicit_rank(&self) -> usize {
        self.rows.iter().filter(|r| r.is_some()).count()
    }

    fn normalize(&self, v: &[(usize, i64)]) -> BTreeMap<usize, i64> {
        let mut w = BTreeMap::new();
        for &(k, x) in v {
            assert!(k < self.dim, "column out of range");
            let cur = w.get(&k).copied().unwrap_or(0);
            let y = modp(cur as i128 + x as i128, self.modulus);
            if y == 0 {
                w.remove(&k);
            } else {
                w.insert(k, y);
            }
        }
        w
    }

    pub fn insert_dense(&mut self, v: &[i64]) {
        let sv: SparseVec = v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, x)).collect();
        self.insert(&sv);
    }

    /// Add a generator.
    pub fn insert(&mut self, v: &[(usize, i64)]) {
        let e = self.modulus;
        if e == 1 {
            return;
        }
        let mut stack: Vec<BTreeMap<usize, i64>> = vec![self.normalize(v)];
        while let Some(mut w) = stack.pop() {
            while let Some((&j, &a)) = w.iter().next() {
                match self.rows[j].take() {
                    Some(row) => {
                        let d = row[0].1;
                        if a % d == 0 {
                            axpy(&mut w, -(a / d), &row, e);
                            self.rows[j] = Some(row);
                        } else {
                            let (g, s, t) = xgcd(a, d);
                            let wv: SparseVec = w.iter().map(|(&k, &x)| (k, x)).collect();
                            let newrow = lincomb(s, &wv, t, &row, e);
                            debug_assert_eq!(newrow[0], (j, g));
                            let rem = lincomb(1, &row, -(d / g), &newrow, e);
                            if !rem.is_empty() {
                                stack.push(rem.into_iter().collect());
                            }
                            axpy(&mut w, -(a / g), &newrow, e);
                            self.rows[j] = Some(newrow);
                        }
                    }
                    None => {
                        let (g, s, _) = xgcd(a, e);
                        let wv: SparseVec = w.iter().map(|(&k, &x)| (k, x)).collect();
                        let newrow = lincomb(s, &wv, 0, &[], e);
                        debug_assert_eq!(newrow[0], (j, g));
                        let extra = lincomb(e / g, &newrow, 0, &[], e);
                        if !extra.is_empty() {
                            stack.push(extra.into_iter().collect());
                        }
                        axpy(&mut w, -(a / g), &newrow, e);
                        self.rows[j] = Some(newrow);
                    }
                }
            }
        }
    }

    /// Canonical remainder of `v` modulo the lattice: entry `j` lies in `[0, pivot(j))`.
    pub fn reduce(&self, v: &[(usize, i64)]) -> SparseVec {
        let mut w = self.normalize(v);
        self.reduce_map(&mut w, 0);
        w.into_iter().collect()
    }

    fn reduce_map(&self, w: &mut BTreeMap<usize, i64>, from: usize) {
        let mut cursor = from;
        loop {
            let Some((&j, &a)) = w.range(cursor..).next() else { break };
            if let Some(row) = &self.rows[j] {
                let d = row[0].1;
                let q = a / d;
                if q != 0 {
                    axpy(w, -q, row, self.modulus);
                }
            }
            cursor = j + 1;
        }
    }

    pub fn contains(&self, v: &[(usize, i64)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Write `v` as an integer combination of the basis rows (implicit rows
    /// included); returns `None` when `v` is not in the lattice.  Coefficients
    /// are reported for explicit rows only, keyed by pivot column.
    pub fn decompose(&self, v: &[(usize, i64)]) -> Option<Vec<(usize, i64)>> {
        let mut w = self.normalize(v);
        let mut out = vec![];
        while let Some((&j, &a)) = w.iter().next() {
            let row = self.rows[j].as_ref()?;
            let d = row[0].1;
            if a % d != 0 {
                return None;
            }
            out.push((j, a / d));
            axpy(&mut w, -(a / d), row, self.modulus);
        }
        Some(out)
    }

    /// Bring into reduced Hermite form (unique per lattice).
    pub fn canonicalize(&mut self) {
        for j in (0..self.dim).rev() {
            let Some(row) = self.rows[j].take() else { continue };
            let lead = row[0];
            let mut w: BTreeMap<usize, i64> = row[1..].iter().copied().collect();
            self.reduce_map(&mut w, j + 1);
            let mut r = vec![lead];
            r.extend(w);
            self.rows[j] = Some(r);
        }
    }

    /// log of the index `[Z^dim : L]` as the list of nontrivial pivots.
    pub fn pivots(&self) -> Vec<i64> {
        (0..self.dim).map(|j| self.pivot(j)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xgcd_identity() {
        for a in -30i64..30 {
            for b in -30i64..30 {
                let (g, s, t) = xgcd(a, b);
                assert_eq!(s * a + t * b, g);
                assert_eq!(g, num_integer::gcd(a, b));
            }
        }
    }

    #[test]
    fn lattice_mod_twelve() {
        // <2> + <3> in Z/12 is everything
        let mut l = ModLattice::new(1, 12);
        l.insert(&[(0, 2)]);
        assert_eq!(l.pivot(0), 2);
        l.insert(&[(0, 3)]);
        assert_eq!(l.pivot(0), 1);
        assert!(l.contains(&[(0, 7)]));
    }

    #[test]
    fn canonical_form_is_unique() {
        let mut a = ModLattice::new(2, 4);
        a.insert(&[(0, 2), (1, 2)]);
        a.insert(&[(1, 2)]);
        a.canonicalize();
        let mut b = ModLattice::new(2, 4);
        b.insert(&[(0, 2)]);
        b.insert(&[(1, 6)]);
        b.canonicalize();
        assert_eq!(a, b);
    }

    proptest::proptest! {
        #[test]
        fn membership_matches_bruteforce(gens in proptest::collection::vec(proptest::collection::vec(0i64..6, 2), 0..4)) {
            // lattice in (Z/6)^2 generated by gens, compared to explicit closure
            let mut l = ModLattice::new(2, 6);
            for g in &gens { l.insert_dense(g); }
            let mut span = std::collections::HashSet::new();
            span.insert((0i64, 0i64));
            loop {
                let mut grew = false;
                let cur: Vec<_> = span.iter().copied().collect();
                for (x, y) in cur {
                    for g in &gens {
                        let p = ((x + g[0]) % 6, (y + g[1]) % 6);
                        if span.insert(p) { grew = true; }
                    }
                }
                if !grew { break; }
            }
            for x in 0..6 { for y in 0..6 {
                proptest::prop_assert_eq!(l.contains(&[(0, x), (1, y)]), span.contains(&(x, y)));
            }}
            let idx: i64 = l.pivots().iter().product();
            proptest::prop_assert_eq!(36 / idx, span.len() as i64);
        }
    }
}
