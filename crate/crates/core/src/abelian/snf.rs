//! Smith normal form over the integers with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// `u * m * v == d`, with `u_inv`, `v_inv` the inverses of `u`, `v`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Smith {
    /// Diagonal entries d_0 | d_1 | ... (length min(rows, cols)).
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.len().min(self.d.first().map_or(0, |r| r.len()));
        (0..k).map(|i| self.d[i][i].clone()).collect()
    }
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][t] * &b[t][j];
            }
        }
    }
    out
}

pub fn from_i64(m: &[Vec<i64>]) -> IntMatrix {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

struct Work {
    a: IntMatrix,
    s: Smith,
    rows: usize,
    cols: usize,
}

impl Work {
    // row_i += c * row_j (u tracks row ops, u_inv the inverse ops)
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for k in 0..self.cols {
            let t = &self.a[j][k] * c;
            self.a[i][k] += t;
        }
        for k in 0..self.rows {
            let t = &self.s.u[j][k] * c;
            self.s.u[i][k] += t;
        }
        for k in 0..self.rows {
            let t = &self.s.u_inv[k][i] * c;
            self.s.u_inv[k][j] -= t;
        }
    }

    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for k in 0..self.rows {
            let t = &self.a[k][j] * c;
            self.a[k][i] += t;
        }
        for k in 0..self.cols {
            let t = &self.s.v[k][j] * c;
            self.s.v[k][i] += t;
        }
        for k in 0..self.cols {
            let t = &self.s.v_inv[i][k] * c;
            self.s.v_inv[j][k] -= t;
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        self.s.u.swap(i, j);
        for row in self.s.u_inv.iter_mut() {
            row.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        for row in self.s.v.iter_mut() {
            row.swap(i, j);
        }
        self.s.v_inv.swap(i, j);
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -x.clone();
        }
        for x in self.s.u[i].iter_mut() {
            *x = -x.clone();
        }
        for row in self.s.u_inv.iter_mut() {
            row[i] = -row[i].clone();
        }
    }
}

/// Smith normal form of an arbitrary integer matrix.
pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut w = Work {
        a: m.clone(),
        s: Smith {
            u: identity(rows),
            u_inv: identity(rows),
            d: vec![],
            v: identity(cols),
            v_inv: identity(cols),
        },
        rows,
        cols,
    };
    let steps = rows.min(cols);
    for t in 0..steps {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !w.a[i][j].is_zero()
                    && best.map_or(true, |(bi, bj)| w.a[i][j].abs() < w.a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if w.a[i][t].is_zero() {
                    continue;
                }
                let q = w.a[i][t].div_floor(&w.a[t][t]);
                w.add_row(i, t, &-q);
                if !w.a[i][t].is_zero() {
                    w.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if w.a[t][j].is_zero() {
                    continue;
                }
                let q = w.a[t][j].div_floor(&w.a[t][t]);
                w.add_col(j, t, &-q);
                if !w.a[t][j].is_zero() {
                    w.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // divisibility of the rest of the block
            let p = w.a[t][t].clone();
            let mut bad = None;
            'outer: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&w.a[i][j] % &p).is_zero() {
                        bad = Some(i);
                        break 'outer;
                    }
                }
            }
            match bad {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
    }
    w.s.d = w.a;
    w.s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &[Vec<i64>]) -> Vec<BigInt> {
        let mm = from_i64(m);
        let s = smith_normal_form(&mm);
        assert_eq!(mat_mul(&mat_mul(&s.u, &mm), &s.v), s.d);
        assert_eq!(mat_mul(&s.u, &s.u_inv), identity(mm.len()));
        let c = mm.first().map_or(0, |r| r.len());
        assert_eq!(mat_mul(&s.v, &s.v_inv), identity(c));
        let d = s.diagonal();
        for i in 0..s.d.len() {
            for j in 0..c {
                if i != j {
                    assert!(s.d[i][j].is_zero());
                }
            }
        }
        for w in d.windows(2) {
            if !w[0].is_zero() {
                assert!((&w[1] % &w[0]).is_zero());
            } else {
                assert!(w[1].is_zero());
            }
        }
        d
    }

    #[test]
    fn examples() {
        assert_eq!(check(&[vec![2, 0], vec![0, 2]]), vec![2.into(), 2.into()]);
        assert_eq!(check(&[vec![1, 2], vec![3, 4]]), vec![1.into(), 2.into()]);
        assert_eq!(check(&[vec![0]]), vec![BigInt::zero()]);
        assert!(check(&[]).is_empty());
        assert_eq!(check(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]),
            vec![2.into(), 6.into(), 12.into()]);
        assert_eq!(check(&[vec![4, 0], vec![0, 6]]), vec![2.into(), 12.into()]);
    }

    proptest::proptest! {
        #[test]
        fn transforms_are_consistent(m in proptest::collection::vec(proptest::collection::vec(-20i64..20, 3), 0..5)) {
            let d = check(&m);
            // product of the diagonal is the gcd of maximal minors up to sign; check the 2x2/3x3 square case by determinant
            if m.len() == 3 {
                let det = |a: &Vec<Vec<i64>>| a[0][0]*(a[1][1]*a[2][2]-a[1][2]*a[2][1]) - a[0][1]*(a[1][0]*a[2][2]-a[1][2]*a[2][0]) + a[0][2]*(a[1][0]*a[2][1]-a[1][1]*a[2][0]);
                let prod: BigInt = d.iter().product();
                proptest::prop_assert_eq!(prod, BigInt::from(det(&m).abs()));
            }
        }
    }
}
