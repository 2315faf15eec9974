use crate::abelian::Elem;
use crate::cohomology::group::{Embedding, FiniteGroup};
use crate::cohomology::module::GModule;
use crate::error::{Error, Result};
use crate::metric::QZ;

/// Index of `(g_1, …, g_n)` with `g_1` most significant.
pub fn tuple_index(order: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &g| acc * order + g)
}

pub fn tuple_of(order: usize, n: usize, mut idx: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for s in t.iter_mut().rev() {
        *s = idx % order;
        idx /= order;
    }
    t
}

/// Dense `n`-cochain `Gⁿ → M`, values stored row by row in tuple order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    degree: usize,
    rank: usize,
    data: Vec<i64>,
}

impl Cochain {
    pub fn zero(m: &GModule, degree: usize) -> Self {
        let cells = m.group().order().pow(degree as u32);
        Cochain { degree, rank: m.rank(), data: vec![0; cells * m.rank()] }
    }

    /// Values listed per tuple in lexicographic order; each is reduced into `M`.
    pub fn from_values(m: &GModule, degree: usize, values: &[Elem]) -> Result<Self> {
        let cells = m.group().order().pow(degree as u32);
        if values.len() != cells {
            return Err(Error::InvalidData(format!("a {degree}-cochain needs {cells} values, got {}", values.len())));
        }
        let mut data = Vec::with_capacity(cells * m.rank());
        for v in values {
            data.extend(m.module().element(v)?);
        }
        Ok(Cochain { degree, rank: m.rank(), data })
    }

    pub fn from_fn(m: &GModule, degree: usize, mut f: impl FnMut(&[usize]) -> Elem) -> Self {
        let g = m.group().order();
        let cells = g.pow(degree as u32);
        let mut data = Vec::with_capacity(cells * m.rank());
        for idx in 0..cells {
            data.extend(m.module().element(&f(&tuple_of(g, degree, idx))).expect("value of the right rank"));
        }
        Cochain { degree, rank: m.rank(), data }
    }

    pub(crate) fn from_raw(degree: usize, rank: usize, data: Vec<i64>) -> Self {
        Cochain { degree, rank, data }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn raw(&self) -> &[i64] {
        &self.data
    }

    pub fn at(&self, idx: usize) -> &[i64] {
        &self.data[idx * self.rank..(idx + 1) * self.rank]
    }

    pub fn value(&self, order: usize, t: &[usize]) -> &[i64] {
        self.at(tuple_index(order, t))
    }

    pub fn values(&self) -> Vec<Elem> {
        if self.rank == 0 {
            return vec![vec![]; self.cells()];
        }
        self.data.chunks(self.rank).map(|c| c.to_vec()).collect()
    }

    pub fn cells(&self) -> usize {
        if self.rank == 0 {
            0
        } else {
            self.data.len() / self.rank
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn check(&self, m: &GModule) -> Result<()> {
        let cells = m.group().order().pow(self.degree as u32);
        if self.rank != m.rank() || self.data.len() != cells * m.rank() {
            return Err(Error::InvalidData("cochain does not match the module".into()));
        }
        Ok(())
    }

    pub fn add(&self, m: &GModule, other: &Cochain) -> Cochain {
        self.lincomb(m, 1, other, 1)
    }

    pub fn sub(&self, m: &GModule, other: &Cochain) -> Cochain {
        self.lincomb(m, 1, other, -1)
    }

    pub fn scale(&self, m: &GModule, a: i64) -> Cochain {
        self.lincomb(m, a, self, 0)
    }

    pub fn lincomb(&self, m: &GModule, a: i64, other: &Cochain, b: i64) -> Cochain {
        assert_eq!(self.degree, other.degree, "degrees differ");
        let inv = m.module().invariants();
        let k = self.rank;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .enumerate()
            .map(|(i, (&x, &y))| {
                let n = inv[i % k] as i128;
                (a as i128 * x as i128 + b as i128 * y as i128).rem_euclid(n) as i64
            })
            .collect();
        Cochain { degree: self.degree, rank: k, data }
    }
}

/// `(dc)(g₁..g_{n+1}) = g₁·c(g₂..) + Σᵢ (−1)ⁱ c(..gᵢg_{i+1}..) + (−1)^{n+1} c(g₁..g_n)`.
pub fn coboundary(m: &GModule, c: &Cochain) -> Result<Cochain> {
    c.check(m)?;
    let g = m.group();
    let ord = g.order();
    let n = c.degree;
    let k = m.rank();
    let inv = m.module().invariants();
    let cells = ord.pow(n as u32 + 1);
    let mut data = vec![0i64; cells * k];
    let mut face = vec![0usize; n];
    let mut acc = vec![0i128; k];
    for idx in 0..cells {
        let t = tuple_of(ord, n + 1, idx);
        acc.iter_mut().for_each(|a| *a = 0);
        let first = m.act(t[0], c.value(ord, &t[1..]));
        for r in 0..k {
            acc[r] += first[r] as i128;
        }
        for i in 1..=n {
            face[..i - 1].copy_from_slice(&t[..i - 1]);
            face[i - 1] = g.mul(t[i - 1], t[i]);
            face[i..].copy_from_slice(&t[i + 1..]);
            let v = c.value(ord, &face);
            let s = if i % 2 == 0 { 1 } else { -1 };
            for r in 0..k {
                acc[r] += s * v[r] as i128;
            }
        }
        let v = c.value(ord, &t[..n]);
        let s = if (n + 1) % 2 == 0 { 1 } else { -1 };
        for r in 0..k {
            acc[r] += s * v[r] as i128;
            data[idx * k + r] = acc[r].rem_euclid(inv[r] as i128) as i64;
        }
    }
    Ok(Cochain { degree: n + 1, rank: k, data })
}

pub fn is_cocycle(m: &GModule, c: &Cochain) -> Result<bool> {
    Ok(coboundary(m, c)?.is_zero())
}

pub fn require_cocycle(m: &GModule, c: &Cochain, what: &str) -> Result<()> {
    if !is_cocycle(m, c)? {
        return Err(Error::CocycleViolation(format!("{what} is not a cocycle")));
    }
    Ok(())
}

/// `(σʲ f)(g₁..g_{n−1}) = f(g₁..g_j, 1, g_{j+1}..)`.
pub fn codegeneracy(m: &GModule, f: &Cochain, j: usize) -> Cochain {
    assert!(j < f.degree, "codegeneracy index out of range");
    let ord = m.group().order();
    let id = m.group().identity();
    let mut u = vec![0; f.degree];
    Cochain::from_fn(m, f.degree - 1, |t| {
        u[..j].copy_from_slice(&t[..j]);
        u[j] = id;
        u[j + 1..].copy_from_slice(&t[j..]);
        f.value(ord, &u).to_vec()
    })
}

/// Vanishes whenever some argument is the identity.
pub fn is_normalized(m: &GModule, c: &Cochain) -> bool {
    let ord = m.group().order();
    let id = m.group().identity();
    (0..c.cells()).all(|i| {
        let v = c.at(i);
        v.iter().all(|&x| x == 0) || !tuple_of(ord, c.degree, i).contains(&id)
    })
}

/// `(f′, h)` with `f = f′ + d h` and `f′` normalized; `f` must be a cocycle.
pub fn normalize_cocycle(m: &GModule, f: &Cochain) -> Result<(Cochain, Option<Cochain>)> {
    let n = f.degree;
    if n == 0 {
        return Ok((f.clone(), None));
    }
    let mut cur = f.clone();
    let mut h = Cochain::zero(m, n - 1);
    for j in 0..n {
        let s = codegeneracy(m, &cur, j);
        if s.is_zero() {
            continue;
        }
        let sign = if j % 2 == 0 { 1 } else { -1 };
        cur = cur.lincomb(m, 1, &coboundary(m, &s)?, -sign);
        h = h.lincomb(m, 1, &s, sign);
    }
    if !is_normalized(m, &cur) {
        return Err(Error::CocycleViolation("cochain could not be normalized; is it a cocycle?".into()));
    }
    Ok((cur, Some(h)))
}

/// Restrict along `N ↪ G`.
pub fn restrict_cochain(emb: &Embedding, m: &GModule, c: &Cochain) -> Result<(GModule, Cochain)> {
    c.check(m)?;
    let rm = m.restrict(emb)?;
    let ord = emb.parent.order();
    let out = Cochain::from_fn(&rm, c.degree, |t| {
        let mapped: Vec<usize> = t.iter().map(|&x| emb.map[x]).collect();
        c.value(ord, &mapped).to_vec()
    });
    Ok((rm, out))
}

/// `Q/Z`-valued cochain with trivial action, as numerators over a common denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KxCochain {
    degree: usize,
    den: i64,
    data: Vec<i64>,
}

impl KxCochain {
    pub fn zero(g: &FiniteGroup, degree: usize) -> Self {
        KxCochain { degree, den: 1, data: vec![0; g.order().pow(degree as u32)] }
    }

    pub fn new(g: &FiniteGroup, degree: usize, den: i64, nums: Vec<i64>) -> Result<Self> {
        if den < 1 || nums.len() != g.order().pow(degree as u32) {
            return Err(Error::InvalidData("k× cochain has the wrong shape".into()));
        }
        Ok(KxCochain { degree, den, data: nums.iter().map(|x| x.rem_euclid(den)).collect() }.normalized())
    }

    pub fn from_qz(g: &FiniteGroup, degree: usize, values: &[QZ]) -> Result<Self> {
        let den = values.iter().fold(1, |a, v| num_integer::lcm(a, v.den()));
        Self::new(g, degree, den, values.iter().map(|v| v.scaled_to(den)).collect())
    }

    pub fn from_fn(g: &FiniteGroup, degree: usize, f: impl Fn(&[usize]) -> QZ) -> Self {
        let ord = g.order();
        let vals: Vec<QZ> = (0..ord.pow(degree as u32)).map(|i| f(&tuple_of(ord, degree, i))).collect();
        Self::from_qz(g, degree, &vals).expect("shape")
    }

    /// View a `Z/m`-valued cochain as `(1/m)Z/Z`-valued.
    pub fn from_cyclic(c: &Cochain, m: i64) -> Self {
        assert_eq!(c.rank, 1, "cyclic coefficients have rank 1");
        KxCochain { degree: c.degree, den: m, data: c.data.clone() }.normalized()
    }

    // smallest denominator
    fn normalized(mut self) -> Self {
        let g = self.data.iter().fold(self.den, |a, &x| num_integer::gcd(a, x));
        if g > 1 {
            self.den /= g;
            self.data.iter_mut().for_each(|x| *x /= g);
        }
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn nums(&self) -> &[i64] {
        &self.data
    }

    pub fn value(&self, idx: usize) -> QZ {
        QZ::new(self.data[idx], self.den)
    }

    pub fn values(&self) -> Vec<QZ> {
        (0..self.data.len()).map(|i| self.value(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Numerators over `d`, which must be a multiple of the denominator.
    pub fn scaled_to(&self, d: i64) -> Vec<i64> {
        assert_eq!(d % self.den, 0, "denominator {} does not divide {d}", self.den);
        self.data.iter().map(|&x| x * (d / self.den)).collect()
    }

    pub fn lincomb(&self, a: i64, other: &KxCochain, b: i64) -> KxCochain {
        assert_eq!(self.degree, other.degree, "degrees differ");
        let d = num_integer::lcm(self.den, other.den);
        let (x, y) = (self.scaled_to(d), other.scaled_to(d));
        let data = x
            .iter()
            .zip(&y)
            .map(|(&p, &q)| (a as i128 * p as i128 + b as i128 * q as i128).rem_euclid(d as i128) as i64)
            .collect();
        KxCochain { degree: self.degree, den: d, data }.normalized()
    }

    pub fn add(&self, other: &KxCochain) -> KxCochain {
        self.lincomb(1, other, 1)
    }

    pub fn sub(&self, other: &KxCochain) -> KxCochain {
        self.lincomb(1, other, -1)
    }

    pub fn neg(&self) -> KxCochain {
        self.lincomb(-1, self, 0)
    }

    pub fn scale(&self, a: i64) -> KxCochain {
        self.lincomb(a, self, 0)
    }

    /// As a `Z/d`-valued cochain (numerators over `d`).
    pub fn to_cyclic(&self, g: &FiniteGroup, d: i64) -> Result<(GModule, Cochain)> {
        let m = GModule::qz_coefficients(g, d)?;
        let data = if d == 1 { vec![] } else { self.scaled_to(d) };
        Ok((m, Cochain { degree: self.degree, rank: usize::from(d > 1), data }))
    }

    pub fn restrict(&self, emb: &Embedding) -> KxCochain {
        let ord = emb.parent.order();
        let so = emb.sub.order();
        let data = (0..so.pow(self.degree as u32))
            .map(|i| {
                let t: Vec<usize> = tuple_of(so, self.degree, i).iter().map(|&x| emb.map[x]).collect();
                self.data[tuple_index(ord, &t)]
            })
            .collect();
        KxCochain { degree: self.degree, den: self.den, data }.normalized()
    }
}

/// Coboundary with trivial action on `Q/Z`.
pub fn kx_coboundary(g: &FiniteGroup, c: &KxCochain) -> KxCochain {
    let (m, cc) = c.to_cyclic(g, c.den.max(1)).expect("shape");
    if c.den == 1 {
        return KxCochain::zero(g, c.degree + 1);
    }
    let d = coboundary(&m, &cc).expect("shape");
    KxCochain::from_cyclic(&d, c.den)
}

pub fn kx_is_cocycle(g: &FiniteGroup, c: &KxCochain) -> bool {
    kx_coboundary(g, c).is_zero()
}

pub fn kx_require_cocycle(g: &FiniteGroup, c: &KxCochain, what: &str) -> Result<()> {
    if c.data.len() != g.order().pow(c.degree as u32) {
        return Err(Error::InvalidData(format!("{what} has the wrong number of values")));
    }
    if !kx_is_cocycle(g, c) {
        return Err(Error::CocycleViolation(format!("{what} is not a cocycle")));
    }
    Ok(())
}

/// `G`-invariant biadditive pairing `M × M′ → Q/Z`, given on generator pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    left: GModule,
    right: GModule,
    values: Vec<Vec<QZ>>,
}

impl Pairing {
    pub fn new(left: GModule, right: GModule, values: Vec<Vec<QZ>>) -> Result<Self> {
        if left.group() != right.group() {
            return Err(Error::InvalidData("paired modules must share the group".into()));
        }
        let (a, b) = (left.rank(), right.rank());
        if values.len() != a || values.iter().any(|r| r.len() != b) {
            return Err(Error::InvalidData("pairing table has the wrong shape".into()));
        }
        let (ni, nj) = (left.module().invariants(), right.module().invariants());
        for i in 0..a {
            for j in 0..b {
                if !values[i][j].mul_int(ni[i]).is_zero() || !values[i][j].mul_int(nj[j]).is_zero() {
                    return Err(Error::InvalidData(format!("pairing value at ({i},{j}) is not well defined")));
                }
            }
        }
        let p = Pairing { left, right, values };
        for g in 0..p.left.group().order() {
            for i in 0..a {
                for j in 0..b {
                    let x = p.left.module().basis(i);
                    let y = p.right.module().basis(j);
                    if p.eval(&p.left.act(g, &x), &p.right.act(g, &y)) != p.values[i][j] {
                        return Err(Error::InvalidData(format!("pairing is not invariant under element {g}")));
                    }
                }
            }
        }
        Ok(p)
    }

    /// `⟨a, f⟩ = Σ aᵢ fᵢ / nᵢ` between `M` and its dual.
    pub fn evaluation(m: &GModule) -> Pairing {
        let n = m.module().invariants();
        let k = n.len();
        let values = (0..k).map(|i| (0..k).map(|j| if i == j { QZ::new(1, n[i]) } else { QZ::ZERO }).collect()).collect();
        Pairing { left: m.clone(), right: m.dual(), values }
    }

    pub fn left(&self) -> &GModule {
        &self.left
    }

    pub fn right(&self) -> &GModule {
        &self.right
    }

    pub fn eval(&self, x: &[i64], y: &[i64]) -> QZ {
        let mut acc = QZ::ZERO;
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b != 0 {
                    acc = acc.add(self.values[i][j].mul_int(a * b));
                }
            }
        }
        acc
    }
}

/// `(α ∪ β)(g₁..g_{p+q}) = ⟨α(g₁..g_p), (g₁⋯g_p)·β(g_{p+1}..)⟩`.
pub fn cup_product(pairing: &Pairing, alpha: &Cochain, beta: &Cochain) -> Result<KxCochain> {
    let (ml, mr) = (pairing.left(), pairing.right());
    require_cocycle(ml, alpha, "left factor")?;
    require_cocycle(mr, beta, "right factor")?;
    Ok(cup_unchecked(pairing, alpha, beta))
}

pub fn cup_unchecked(pairing: &Pairing, alpha: &Cochain, beta: &Cochain) -> KxCochain {
    let g = pairing.left().group();
    let ord = g.order();
    let (p, q) = (alpha.degree, beta.degree);
    KxCochain::from_fn(g, p + q, |t| {
        let prod = t[..p].iter().fold(g.identity(), |a, &x| g.mul(a, x));
        let b = pairing.right().act(prod, beta.value(ord, &t[p..]));
        pairing.eval(alpha.value(ord, &t[..p]), &b)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::FinAbGroup;
    use rand::{Rng, SeedableRng};

    fn random_cochain(m: &GModule, n: usize, rng: &mut impl Rng) -> Cochain {
        let inv = m.module().invariants().to_vec();
        let cells = m.group().order().pow(n as u32);
        let vals: Vec<Elem> = (0..cells).map(|_| inv.iter().map(|&k| rng.gen_range(0..k)).collect()).collect();
        Cochain::from_values(m, n, &vals).unwrap()
    }

    #[test]
    fn d_squared_is_zero() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let s3 = FiniteGroup::symmetric3();
        let sign: Vec<Vec<Vec<i64>>> = (0..6).map(|g| vec![vec![if g % 2 == 0 { 1 } else { 5 }]]).collect();
        let mods = [
            GModule::trivial(&s3, &FinAbGroup::cyclic(6)),
            GModule::new(s3.clone(), FinAbGroup::cyclic(6), sign).unwrap(),
            GModule::trivial(&FiniteGroup::cyclic(4), &FinAbGroup::new(vec![2, 4]).unwrap()),
        ];
        for m in &mods {
            for n in 0..4 {
                let c = random_cochain(m, n, &mut rng);
                let dd = coboundary(m, &coboundary(m, &c).unwrap()).unwrap();
                assert!(dd.is_zero(), "n = {n}");
            }
        }
    }

    #[test]
    fn low_degree_formulas() {
        let g = FiniteGroup::cyclic(3);
        let m = GModule::trivial(&g, &FinAbGroup::cyclic(5));
        let c0 = Cochain::from_values(&m, 0, &[vec![2]]).unwrap();
        assert!(coboundary(&m, &c0).unwrap().is_zero());
        let lam = Cochain::from_fn(&m, 1, |t| vec![(t[0] * t[0]) as i64]);
        let d = coboundary(&m, &lam).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let want = (lam.value(3, &[b])[0] - lam.value(3, &[(a + b) % 3])[0] + lam.value(3, &[a])[0]).rem_euclid(5);
                assert_eq!(d.value(3, &[a, b])[0], want);
            }
        }
    }

    #[test]
    fn cup_with_degree_zero_is_pointwise() {
        let g = FiniteGroup::cyclic(2);
        let m = GModule::trivial(&g, &FinAbGroup::cyclic(4));
        let p = Pairing::evaluation(&m);
        let a = Cochain::from_values(&m, 0, &[vec![1]]).unwrap();
        let b = Cochain::from_fn(&m, 1, |t| vec![2 * t[0] as i64]);
        let c = cup_product(&p, &a, &b).unwrap();
        assert_eq!(c.values(), vec![QZ::ZERO, QZ::new(1, 2)]);
        let zero = Cochain::zero(&m, 1);
        assert!(cup_product(&p, &zero, &b).unwrap().is_zero());
    }
}
