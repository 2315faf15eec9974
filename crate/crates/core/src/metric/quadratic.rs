use crate::abelian::{Elem, FinAbGroup, Homomorphism, Subgroup};
use crate::error::{Error, Result};
use crate::metric::bichar::Bicharacter;
use crate::metric::qz::QZ;

/// `q(Σ c_i e_i) = Σ c_i² q(e_i) + Σ_{i<j} c_i c_j b(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    group: FinAbGroup,
    diag: Vec<QZ>,
    // full symmetric polarization table, b[i][i] = 2 q(e_i)
    b: Vec<Vec<QZ>>,
}

impl QuadraticForm {
    /// `offdiag` lists `(i, j, b(e_i, e_j))` with `i != j`; missing pairs are 0.
    pub fn new(group: FinAbGroup, diag: Vec<QZ>, offdiag: &[(usize, usize, QZ)]) -> Result<Self> {
        let k = group.rank();
        if diag.len() != k {
            return Err(Error::InvalidData(format!("expected {k} diagonal values, got {}", diag.len())));
        }
        let n = group.invariants();
        let mut b = vec![vec![QZ::ZERO; k]; k];
        for i in 0..k {
            // well defined on Z/n: q((c+n)e) = q(ce) needs gcd(2n, n²)·q = 0
            let w = num_integer::gcd(2 * n[i], n[i] * n[i]);
            if !diag[i].mul_int(w).is_zero() {
                return Err(Error::InvalidData(format!(
                    "q(e_{i}) = {} is not well defined on a generator of order {}",
                    diag[i], n[i]
                )));
            }
            b[i][i] = diag[i].mul_int(2);
        }
        let mut seen = std::collections::HashSet::new();
        for &(i, j, v) in offdiag {
            let (i, j) = if i < j { (i, j) } else { (j, i) };
            if i == j || j >= k {
                return Err(Error::InvalidData(format!("bad off-diagonal index pair ({i},{j})")));
            }
            if !seen.insert((i, j)) {
                return Err(Error::InvalidData(format!("duplicate off-diagonal pair ({i},{j})")));
            }
            if !v.mul_int(n[i]).is_zero() || !v.mul_int(n[j]).is_zero() {
                return Err(Error::InvalidData(format!("b(e_{i}, e_{j}) = {v} not killed by generator orders")));
            }
            b[i][j] = v;
            b[j][i] = v;
        }
        Ok(QuadraticForm { group, diag, b })
    }

    pub fn zero(group: &FinAbGroup) -> Self {
        QuadraticForm::new(group.clone(), vec![QZ::ZERO; group.rank()], &[]).expect("zero form")
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn diag(&self) -> &[QZ] {
        &self.diag
    }

    /// Off-diagonal data `(i, j, b)` with `i < j`, nonzero only.
    pub fn offdiag(&self) -> Vec<(usize, usize, QZ)> {
        let k = self.group.rank();
        let mut out = vec![];
        for i in 0..k {
            for j in i + 1..k {
                if !self.b[i][j].is_zero() {
                    out.push((i, j, self.b[i][j]));
                }
            }
        }
        out
    }

    pub fn eval(&self, x: &[i64]) -> QZ {
        let k = self.group.rank();
        let mut acc = QZ::ZERO;
        for i in 0..k {
            if x[i] == 0 {
                continue;
            }
            acc = acc.add(self.diag[i].mul_int(x[i] * x[i]));
            for j in i + 1..k {
                if x[j] != 0 {
                    acc = acc.add(self.b[i][j].mul_int(x[i] * x[j]));
                }
            }
        }
        acc
    }

    /// `b_q(x, y) = q(x+y) − q(x) − q(y)`.
    pub fn bilinear(&self) -> Bicharacter {
        Bicharacter::new(self.group.clone(), self.b.clone()).expect("polarization is well defined")
    }

    pub fn polar(&self, x: &[i64], y: &[i64]) -> QZ {
        let mut acc = QZ::ZERO;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj != 0 {
                    acc = acc.add(self.b[i][j].mul_int(xi * yj));
                }
            }
        }
        acc
    }

    pub fn neg(&self) -> QuadraticForm {
        QuadraticForm {
            group: self.group.clone(),
            diag: self.diag.iter().map(|v| v.neg()).collect(),
            b: self.b.iter().map(|r| r.iter().map(|v| v.neg()).collect()).collect(),
        }
    }

    pub fn direct_sum(&self, other: &QuadraticForm) -> QuadraticForm {
        let a = self.group.rank();
        let g = self.group.direct_sum(&other.group);
        let k = g.rank();
        let mut diag = self.diag.clone();
        diag.extend_from_slice(&other.diag);
        let b = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| match (i < a, j < a) {
                        (true, true) => self.b[i][j],
                        (false, false) => other.b[i - a][j - a],
                        _ => QZ::ZERO,
                    })
                    .collect()
            })
            .collect();
        QuadraticForm { group: g, diag, b }
    }

    /// `x ↦ q(f x)` on the domain of `f`.
    pub fn pullback(&self, f: &Homomorphism) -> Result<QuadraticForm> {
        if f.codomain() != &self.group {
            return Err(Error::AmbientMismatch("pullback along a map into another group".into()));
        }
        let imgs: Vec<Elem> = (0..f.domain().rank()).map(|j| f.image_of_generator(j)).collect();
        let k = imgs.len();
        let diag = imgs.iter().map(|x| self.eval(x)).collect();
        let mut off = vec![];
        for i in 0..k {
            for j in i + 1..k {
                off.push((i, j, self.polar(&imgs[i], &imgs[j])));
            }
        }
        QuadraticForm::new(f.domain().clone(), diag, &off)
    }
}

/// Nondegenerate quadratic form on a finite abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MetricGroup {
    q: QuadraticForm,
}

impl MetricGroup {
    pub fn new(q: QuadraticForm) -> Result<Self> {
        if !q.bilinear().is_nondegenerate() {
            return Err(Error::InvalidData("quadratic form is degenerate".into()));
        }
        Ok(MetricGroup { q })
    }

    pub fn trivial() -> Self {
        MetricGroup { q: QuadraticForm::zero(&FinAbGroup::trivial()) }
    }

    /// `A ⊕ A*` with `q(a, f) = f(a)`.
    pub fn hyperbolic(a: &FinAbGroup) -> Self {
        let k = a.rank();
        let g = a.direct_sum(&a.dual());
        let off: Vec<(usize, usize, QZ)> = (0..k).map(|i| (i, k + i, QZ::new(1, a.invariants()[i]))).collect();
        let q = QuadraticForm::new(g, vec![QZ::ZERO; 2 * k], &off).expect("hyperbolic data");
        MetricGroup { q }
    }

    pub fn group(&self) -> &FinAbGroup {
        self.q.group()
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.q
    }

    pub fn q(&self, x: &[i64]) -> QZ {
        self.q.eval(x)
    }

    pub fn b(&self, x: &[i64], y: &[i64]) -> QZ {
        self.q.polar(x, y)
    }

    pub fn order(&self) -> u128 {
        self.group().order()
    }

    pub fn inverse(&self) -> MetricGroup {
        MetricGroup { q: self.q.neg() }
    }

    pub fn direct_sum(&self, other: &MetricGroup) -> MetricGroup {
        MetricGroup { q: self.q.direct_sum(&other.q) }
    }

    /// `E₁⁻¹ ⊕ E₂`, the home of correspondences `E₁ → E₂`.
    pub fn corr_space(src: &MetricGroup, dst: &MetricGroup) -> MetricGroup {
        src.inverse().direct_sum(dst)
    }

    pub fn orthogonal_complement(&self, n: &Subgroup) -> Result<Subgroup> {
        self.q.bilinear().perp(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperbolic_examples() {
        let e = MetricGroup::hyperbolic(&FinAbGroup::cyclic(2));
        assert_eq!(e.q(&[1, 1]), QZ::new(1, 2));
        assert_eq!(e.q(&[1, 0]), QZ::ZERO);
        assert_eq!(e.q(&[0, 1]), QZ::ZERO);
        assert_eq!(MetricGroup::hyperbolic(&FinAbGroup::trivial()).order(), 1);
        let e3 = MetricGroup::hyperbolic(&FinAbGroup::cyclic(3));
        assert_eq!(e3.group().elements().iter().filter(|x| e3.q(x).is_zero()).count(), 5);
        let n = Subgroup::from_generators(e.group(), &[vec![1, 0]]).unwrap();
        assert_eq!(e.orthogonal_complement(&n).unwrap(), n);
    }

    #[test]
    fn validation() {
        let z2 = FinAbGroup::cyclic(2);
        assert!(QuadraticForm::new(z2.clone(), vec![QZ::new(1, 4)], &[]).is_ok());
        assert!(QuadraticForm::new(z2.clone(), vec![QZ::new(1, 8)], &[]).is_err());
        // n² q = 0 but not well defined on Z/3
        assert!(QuadraticForm::new(FinAbGroup::cyclic(3), vec![QZ::new(1, 9)], &[]).is_err());
        assert!(MetricGroup::new(QuadraticForm::new(z2.clone(), vec![QZ::new(1, 2)], &[]).unwrap()).is_err());
        assert!(MetricGroup::new(QuadraticForm::new(z2, vec![QZ::new(1, 4)], &[]).unwrap()).is_ok());
    }

    proptest::proptest! {
        #[test]
        fn polarization_and_evenness(d in proptest::collection::vec(0i64..8, 2), o in 0i64..4) {
            // Z/2 + Z/4 with arbitrary well-defined data
            let g = FinAbGroup::new(vec![2, 4]).unwrap();
            let q = QuadraticForm::new(g.clone(), vec![QZ::new(d[0] % 4, 4), QZ::new(d[1], 8)], &[(0, 1, QZ::new(o % 2, 2))]).unwrap();
            let b = q.bilinear();
            proptest::prop_assert!(b.is_symmetric());
            for x in g.elements() {
                proptest::prop_assert_eq!(q.eval(&x), q.eval(&g.neg(&x)));
                for y in g.elements() {
                    let lhs = q.eval(&g.add(&x, &y)).sub(q.eval(&x)).sub(q.eval(&y));
                    proptest::prop_assert_eq!(lhs, b.eval(&x, &y));
                }
            }
        }
    }
}
