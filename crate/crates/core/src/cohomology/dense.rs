//! Echelon lattices `e·Zⁿ ⊆ L ⊆ Zⁿ` with dense rows, for the cochain systems.

use crate::abelian::lattice::xgcd;

#[derive(Clone, Debug)]
pub(crate) struct DenseLattice {
    e: u64,
    width: usize,
    // row with pivot column j, stored from column j on
    rows: Vec<Option<Vec<u64>>>,
}

#[inline]
fn sub_mul(dst: &mut [u64], q: u64, src: &[u64], e: u64) {
    if q == 0 {
        return;
    }
    let nq = e - q % e;
    for (d, &s) in dst.iter_mut().zip(src) {
        if s != 0 {
            *d = (*d + nq * s) % e;
        }
    }
}

impl DenseLattice {
    pub fn new(width: usize, e: i64) -> Self {
        assert!((1..1 << 31).contains(&e), "modulus out of range");
        DenseLattice { e: e as u64, width, rows: vec![None; width] }
    }

    pub fn modulus(&self) -> i64 {
        self.e as i64
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn pivot(&self, j: usize) -> i64 {
        self.rows[j].as_ref().map_or(self.e, |r| r[0]) as i64
    }

    /// Row with pivot `j`, from column `j` on.
    pub fn row(&self, j: usize) -> Option<&[u64]> {
        self.rows[j].as_deref()
    }

    pub fn vector(&self, v: &[i64]) -> Vec<u64> {
        assert_eq!(v.len(), self.width);
        v.iter().map(|&x| x.rem_euclid(self.e as i64) as u64).collect()
    }

    pub fn insert(&mut self, v: &[i64]) {
        let v = self.vector(v);
        self.insert_reduced(v);
    }

    pub fn insert_reduced(&mut self, v: Vec<u64>) {
        let e = self.e;
        if e == 1 {
            return;
        }
        let mut stack = vec![(0usize, v)];
        while let Some((start, mut w)) = stack.pop() {
            // w is indexed from column `start`
            for j in start..self.width {
                let a = w[j - start];
                if a == 0 {
                    continue;
                }
                let tail = &mut w[j - start..];
                match self.rows[j].take() {
                    Some(row) => {
                        let d = row[0];
                        if a % d == 0 {
                            sub_mul(tail, a / d, &row, e);
                            self.rows[j] = Some(row);
                        } else {
                            let (g, s, t) = xgcd(a as i64, d as i64);
                            let (s, t) = (s.rem_euclid(e as i64) as u64, t.rem_euclid(e as i64) as u64);
                            let newrow: Vec<u64> = tail.iter().zip(&row).map(|(&x, &y)| (s * x + t * y) % e).collect();
                            let g = g as u64;
                            debug_assert_eq!(newrow[0], g);
                            let mut rem = row;
                            sub_mul(&mut rem, d / g, &newrow, e);
                            if rem.iter().any(|&x| x != 0) {
                                stack.push((j, rem));
                            }
                            sub_mul(tail, a / g, &newrow, e);
                            self.rows[j] = Some(newrow);
                        }
                    }
                    None => {
                        let (g, s, _) = xgcd(a as i64, e as i64);
                        let s = s.rem_euclid(e as i64) as u64;
                        let g = g as u64;
                        let newrow: Vec<u64> = tail.iter().map(|&x| (s * x) % e).collect();
                        debug_assert_eq!(newrow[0], g);
                        let extra: Vec<u64> = newrow.iter().map(|&x| (x * (e / g)) % e).collect();
                        if extra.iter().any(|&x| x != 0) {
                            stack.push((j, extra));
                        }
                        sub_mul(tail, a / g, &newrow, e);
                        self.rows[j] = Some(newrow);
                    }
                }
            }
        }
    }

    /// Reduce in place; entry `j` ends in `[0, pivot(j))`.
    pub fn reduce(&self, v: &mut [u64]) {
        for j in 0..self.width {
            let a = v[j];
            if a == 0 {
                continue;
            }
            if let Some(row) = &self.rows[j] {
                let q = a / row[0];
                sub_mul(&mut v[j..], q, row, self.e);
            }
        }
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let mut w = self.vector(v);
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::lattice::ModLattice;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn agrees_with_sparse_lattice(
            e in 2i64..40,
            rows in proptest::collection::vec(proptest::collection::vec(0i64..40, 5), 0..6),
            probe in proptest::collection::vec(0i64..40, 5),
        ) {
            let mut d = DenseLattice::new(5, e);
            let mut s = ModLattice::new(5, e);
            for r in &rows {
                d.insert(r);
                s.insert_dense(r);
            }
            for j in 0..5 {
                prop_assert_eq!(d.pivot(j), s.pivot(j));
            }
            let sp: Vec<(usize, i64)> = probe.iter().copied().enumerate().collect();
            prop_assert_eq!(d.contains(&probe), s.contains(&sp));
        }
    }
}
