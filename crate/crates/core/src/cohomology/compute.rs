//! `Hⁿ(G, M)` from the normalized bar complex: coboundary lattices, cocycle
//! lattices and a fixed Smith basis of `Zⁿ/Bⁿ`, memoized per `(G, M, n)`.
//!
//! Cochain values are stored in scaled coordinates: `M = ⊕ Z/nᵣ` sits in
//! `(Z/e)^k` through `xᵣ ↦ (e/nᵣ)·xᵣ`, so no relation rows are needed.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::ToPrimitive;

use crate::abelian::snf::from_i64;
use crate::abelian::{smith_normal_form, Elem, FinAbGroup};
use crate::cohomology::cochain::{
    coboundary, is_cocycle, is_normalized, normalize_cocycle, restrict_cochain, tuple_index, Cochain,
};
use crate::cohomology::dense::DenseLattice;
use crate::cohomology::group::Embedding;
use crate::cohomology::module::GModule;
use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: usize = 50_000_000;
pub const DEFAULT_MAX_DEGREE: usize = 5;
pub const DEFAULT_MAX_GROUP_ORDER: usize = 12;

static BUDGET: AtomicUsize = AtomicUsize::new(DEFAULT_BUDGET);
static MAX_DEGREE: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_DEGREE);
static MAX_GROUP_ORDER: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_GROUP_ORDER);

/// Limits on cohomology computations.  `budget` bounds the size (rows × columns)
/// of any linear system over normalized cochains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub budget: usize,
    pub max_degree: usize,
    pub max_group_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { budget: DEFAULT_BUDGET, max_degree: DEFAULT_MAX_DEGREE, max_group_order: DEFAULT_MAX_GROUP_ORDER }
    }
}

pub fn limits() -> Limits {
    Limits {
        budget: BUDGET.load(Ordering::Relaxed),
        max_degree: MAX_DEGREE.load(Ordering::Relaxed),
        max_group_order: MAX_GROUP_ORDER.load(Ordering::Relaxed),
    }
}

pub fn set_limits(l: Limits) {
    BUDGET.store(l.budget, Ordering::Relaxed);
    MAX_DEGREE.store(l.max_degree, Ordering::Relaxed);
    MAX_GROUP_ORDER.store(l.max_group_order, Ordering::Relaxed);
}

/// Number of normalized `n`-cochain coordinates, `(|G|−1)ⁿ·rank`.
pub(crate) fn ndim(m: &GModule, n: usize) -> u128 {
    ((m.group().order() - 1) as u128).saturating_pow(n as u32).saturating_mul(m.rank() as u128)
}

/// Size of the system for `d: Cⁿ⁻¹ → Cⁿ`.
pub(crate) fn system_size(m: &GModule, n: usize) -> u128 {
    let inp = if n == 0 { 0 } else { ndim(m, n - 1) };
    ndim(m, n).saturating_mul(inp)
}

pub(crate) fn check_size(m: &GModule, size: u128, what: &str) -> Result<()> {
    let l = limits();
    if m.group().order() > l.max_group_order {
        return Err(Error::BudgetExceeded(format!(
            "group of order {} exceeds the order cap {}",
            m.group().order(),
            l.max_group_order
        )));
    }
    if size > l.budget as u128 {
        return Err(Error::BudgetExceeded(format!("{what} has size {size}, budget is {}", l.budget)));
    }
    Ok(())
}

fn scales(m: &GModule) -> Vec<i64> {
    let e = m.exponent();
    m.module().invariants().iter().map(|&n| e / n).collect()
}

/// Sparse images `d(εₛ,ᵣ)` for `d: Cⁿ⁻¹_N → Cⁿ_N` in scaled coordinates, one per input coordinate.
pub(crate) fn coboundary_columns(m: &GModule, n: usize) -> Vec<Vec<(usize, i64)>> {
    assert!(n >= 1);
    let g = m.group();
    let k = m.rank();
    let sc = scales(m);
    let elems: Vec<usize> = (0..g.order()).filter(|&x| x != g.identity()).collect();
    let base = elems.len();
    let mut pos = vec![usize::MAX; g.order()];
    for (i, &x) in elems.iter().enumerate() {
        pos[x] = i;
    }
    let mut cols: Vec<Vec<(usize, i64)>> = vec![vec![]; base.pow(n as u32 - 1) * k];
    let mut t = vec![0usize; n];
    let mut face = vec![0usize; n - 1];
    for out in 0..base.pow(n as u32) {
        let mut x = out;
        for s in t.iter_mut().rev() {
            *s = x % base;
            x /= base;
        }
        let a = m.matrix(elems[t[0]]);
        let s0 = tuple_index(base, &t[1..]);
        for r in 0..k {
            for (rp, &v) in a[r].iter().enumerate() {
                if v != 0 {
                    cols[s0 * k + rp].push((out * k + r, v * sc[r]));
                }
            }
        }
        for i in 1..n {
            let p = pos[g.mul(elems[t[i - 1]], elems[t[i]])];
            if p == usize::MAX {
                continue;
            }
            face[..i - 1].copy_from_slice(&t[..i - 1]);
            face[i - 1] = p;
            face[i..].copy_from_slice(&t[i + 1..]);
            let s = tuple_index(base, &face);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for r in 0..k {
                cols[s * k + r].push((out * k + r, sign * sc[r]));
            }
        }
        let s = tuple_index(base, &t[..n - 1]);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        for r in 0..k {
            cols[s * k + r].push((out * k + r, sign * sc[r]));
        }
    }
    cols
}

pub(crate) fn densify(len: usize, col: &[(usize, i64)], offset: usize, v: &mut [i64]) {
    debug_assert!(offset + len <= v.len());
    for &(i, x) in col {
        v[offset + i] += x;
    }
}

/// Positions of normalized tuples among all tuples.
fn normalized_cells(m: &GModule, n: usize) -> Vec<usize> {
    let g = m.group();
    let ord = g.order();
    let elems: Vec<usize> = (0..ord).filter(|&x| x != g.identity()).collect();
    let base = elems.len();
    (0..base.pow(n as u32))
        .map(|c| {
            let mut x = c;
            let mut t = vec![0; n];
            for s in t.iter_mut().rev() {
                *s = elems[x % base];
                x /= base;
            }
            tuple_index(ord, &t)
        })
        .collect()
}

/// Scaled coordinates of a normalized cochain.
pub(crate) fn to_scaled(m: &GModule, c: &Cochain) -> Vec<i64> {
    let k = m.rank();
    let sc = scales(m);
    let mut v = Vec::with_capacity(ndim(m, c.degree()) as usize);
    for cell in normalized_cells(m, c.degree()) {
        v.extend(c.at(cell).iter().zip(&sc).map(|(&x, &s)| x * s));
    }
    debug_assert_eq!(v.len(), ndim(m, c.degree()) as usize);
    let _ = k;
    v
}

pub(crate) fn from_scaled(m: &GModule, n: usize, v: &[u64]) -> Cochain {
    let k = m.rank();
    let sc = scales(m);
    let mut data = vec![0i64; m.group().order().pow(n as u32) * k];
    for (i, cell) in normalized_cells(m, n).into_iter().enumerate() {
        for r in 0..k {
            data[cell * k + r] = v[i * k + r] as i64 / sc[r];
        }
    }
    Cochain::from_raw(n, k, data)
}

/// `Bⁿ_N` in scaled coordinates.
fn build_coboundaries(m: &GModule, n: usize) -> DenseLattice {
    let dim = ndim(m, n) as usize;
    let mut l = DenseLattice::new(dim, m.exponent());
    if n > 0 {
        for c in coboundary_columns(m, n) {
            let mut v = vec![0i64; dim];
            densify(dim, &c, 0, &mut v);
            l.insert(&v);
        }
    }
    l
}

/// `(d x | x)` over `Cⁿ_N ⊕ Cⁿ⁻¹_N`.
fn build_solver(m: &GModule, n: usize) -> DenseLattice {
    let (out, inp) = (ndim(m, n) as usize, ndim(m, n - 1) as usize);
    let sc = scales(m);
    let mut l = DenseLattice::new(out + inp, m.exponent());
    for (j, c) in coboundary_columns(m, n).into_iter().enumerate() {
        let mut v = vec![0i64; out + inp];
        densify(out, &c, 0, &mut v);
        v[out + j] = sc[j % m.rank()];
        l.insert(&v);
    }
    l
}

/// `Zⁿ_N` as `Bⁿ_N` plus the cocycles supported where `Bⁿ_N` leaves room.
fn build_cocycles(m: &GModule, n: usize, b: &DenseLattice) -> DenseLattice {
    let k = m.rank();
    let sc = scales(m);
    let dim = b.width();
    let support: Vec<usize> = (0..dim).filter(|&j| b.pivot(j) != sc[j % k]).collect();
    let out = ndim(m, n + 1) as usize;
    let mut aug = DenseLattice::new(out + support.len(), m.exponent());
    let cols = coboundary_columns(m, n + 1);
    for (u, &j) in support.iter().enumerate() {
        let mut v = vec![0i64; out + support.len()];
        densify(out, &cols[j], 0, &mut v);
        v[out + u] = sc[j % k];
        aug.insert(&v);
    }
    drop(cols);
    let mut z = b.clone();
    for p in out..out + support.len() {
        if let Some(row) = aug.row(p) {
            let mut v = vec![0i64; dim];
            for (i, &x) in row.iter().enumerate() {
                v[support[p - out + i]] = x as i64;
            }
            z.insert(&v);
        }
    }
    z
}

struct Entry {
    b: OnceLock<Arc<DenseLattice>>,
    solver: OnceLock<Arc<DenseLattice>>,
    h: OnceLock<Arc<CohomologyGroup>>,
}

type Memo = Mutex<HashMap<(GModule, usize), Arc<Entry>>>;

fn entry(m: &GModule, n: usize) -> Arc<Entry> {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    let mut map = memo.lock().unwrap_or_else(|e| e.into_inner());
    map.entry((m.clone(), n))
        .or_insert_with(|| Arc::new(Entry { b: OnceLock::new(), solver: OnceLock::new(), h: OnceLock::new() }))
        .clone()
}

pub(crate) fn coboundary_lattice(m: &GModule, n: usize) -> Result<Arc<DenseLattice>> {
    check_size(m, system_size(m, n), "coboundary system")?;
    Ok(entry(m, n).b.get_or_init(|| Arc::new(build_coboundaries(m, n))).clone())
}

fn solver_lattice(m: &GModule, n: usize) -> Result<Arc<DenseLattice>> {
    check_size(m, system_size(m, n), "coboundary solver")?;
    Ok(entry(m, n).solver.get_or_init(|| Arc::new(build_solver(m, n))).clone())
}

/// Normalized representative of a cocycle, with the correction term.
pub(crate) fn normal_form(m: &GModule, c: &Cochain) -> Result<(Cochain, Option<Cochain>)> {
    if is_normalized(m, c) {
        return Ok((c.clone(), None));
    }
    normalize_cocycle(m, c)
}

/// Is `c` a coboundary?  Non-cocycles are not.
pub fn is_coboundary(m: &GModule, c: &Cochain) -> Result<bool> {
    c.check(m)?;
    if c.degree() == 0 {
        return Ok(c.is_zero());
    }
    if !is_cocycle(m, c)? {
        return Ok(false);
    }
    let (cn, _) = normal_form(m, c)?;
    Ok(coboundary_lattice(m, c.degree())?.contains(&to_scaled(m, &cn)))
}

pub fn cohomologous(m: &GModule, a: &Cochain, b: &Cochain) -> Result<bool> {
    is_coboundary(m, &a.sub(m, b))
}

/// Some `x` with `d x = c`, or `None` when `c` is not a coboundary.
pub fn solve_coboundary(m: &GModule, c: &Cochain) -> Result<Option<Cochain>> {
    c.check(m)?;
    let n = c.degree();
    if n == 0 {
        return Err(Error::InvalidData("degree-0 cochains are never coboundaries of anything".into()));
    }
    if !is_cocycle(m, c)? {
        return Ok(None);
    }
    let (cn, h) = normal_form(m, c)?;
    let l = solver_lattice(m, n)?;
    let out = ndim(m, n) as usize;
    let mut v = l.vector(&[to_scaled(m, &cn), vec![0; ndim(m, n - 1) as usize]].concat());
    l.reduce(&mut v);
    if v[..out].iter().any(|&x| x != 0) {
        return Ok(None);
    }
    let e = m.exponent() as u64;
    let neg: Vec<u64> = v[out..].iter().map(|&x| (e - x) % e).collect();
    let mut x = from_scaled(m, n - 1, &neg);
    if let Some(h) = h {
        x = x.add(m, &h);
    }
    debug_assert_eq!(coboundary(m, &x)?, *c);
    Ok(Some(x))
}

/// Order of the class of the cocycle `c`.
pub fn class_order(m: &GModule, c: &Cochain) -> Result<i64> {
    if !is_cocycle(m, c)? {
        return Err(Error::CocycleViolation("class order of a non-cocycle".into()));
    }
    let e = m.exponent();
    for d in (1..=e).filter(|d| e % d == 0) {
        if is_coboundary(m, &c.scale(m, d))? {
            return Ok(d);
        }
    }
    Err(Error::Internal("exponent does not kill the class".into()))
}

/// `Hⁿ(G, M) = Zⁿ/Bⁿ` with a fixed Smith basis.
#[derive(Debug)]
pub struct CohomologyGroup {
    module: GModule,
    degree: usize,
    invariants: Vec<i64>,
    basis: Vec<Cochain>,
    z: DenseLattice,
    b: Arc<DenseLattice>,
    // columns where Zⁿ is strictly larger than Bⁿ
    free: Vec<usize>,
    // coordinate change, |free| × |invariants|, entries mod the invariant
    coord: Vec<Vec<i64>>,
}

impl CohomologyGroup {
    fn build(m: &GModule, n: usize, b: Arc<DenseLattice>) -> Result<Self> {
        let z = build_cocycles(m, n, &b);
        let free: Vec<usize> = (0..z.width()).filter(|&j| z.pivot(j) < b.pivot(j)).collect();
        let mut h = CohomologyGroup { module: m.clone(), degree: n, invariants: vec![], basis: vec![], z, b, free, coord: vec![] };
        let e = h.b.modulus() as u64;
        let dim = h.z.width();
        let full = |j: usize, row: &[u64]| -> Vec<u64> {
            let mut v = vec![0u64; dim];
            v[j..].copy_from_slice(row);
            v
        };
        let rel: Vec<Vec<i64>> = h
            .free
            .iter()
            .enumerate()
            .map(|(fi, &f)| match h.b.row(f) {
                Some(row) => h.free_coords(full(f, row)),
                None => {
                    // e·ε_f: (e/p)·z_f agrees with it up to later columns
                    let zf = full(f, h.z.row(f)?);
                    let q = e / zf[f];
                    let mut tail: Vec<u64> = zf.iter().map(|&x| (x * q) % e).collect();
                    tail[f] = 0;
                    let mut c = h.free_coords(tail)?;
                    c.iter_mut().for_each(|x| *x = -*x);
                    c[fi] += q as i64;
                    Some(c)
                }
            })
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Internal("coboundary outside the cocycle lattice".into()))?;
        let s = smith_normal_form(&from_i64(&rel));
        let diag: Vec<i64> = s.diagonal().iter().map(|d| d.to_i64().expect("invariant fits")).collect();
        let keep: Vec<usize> = (0..diag.len()).filter(|&i| diag[i] != 1).collect();
        if keep.iter().any(|&i| diag[i] == 0) {
            return Err(Error::Internal("cohomology group is not finite".into()));
        }
        h.invariants = keep.iter().map(|&i| diag[i]).collect();
        h.coord = (0..h.free.len())
            .map(|f| keep.iter().map(|&i| (&s.v[f][i] % diag[i]).to_i64().unwrap().rem_euclid(diag[i])).collect())
            .collect();
        for &i in &keep {
            let mut acc = vec![0u64; dim];
            for (f, &col) in h.free.iter().enumerate() {
                let c = (&s.v_inv[i][f] % e as i64).to_i64().unwrap().rem_euclid(e as i64) as u64;
                if c != 0 {
                    for (a, &x) in acc[col..].iter_mut().zip(h.z.row(col).expect("explicit row")) {
                        *a = (*a + c * x) % e;
                    }
                }
            }
            h.basis.push(from_scaled(m, n, &acc));
        }
        Ok(h)
    }

    // Forward substitution against the echelon bases of Zⁿ and Bⁿ.
    fn free_coords(&self, mut w: Vec<u64>) -> Option<Vec<i64>> {
        let e = self.z.modulus() as u64;
        let mut out = vec![0i64; self.free.len()];
        for j in 0..w.len() {
            let a = w[j];
            if a == 0 {
                continue;
            }
            let p = self.z.pivot(j) as u64;
            if a % p != 0 || p == e {
                return None;
            }
            let q = a / p;
            let row = match self.free.binary_search(&j) {
                Ok(f) => {
                    out[f] = q as i64;
                    self.z.row(j)?
                }
                Err(_) => self.b.row(j)?,
            };
            for (x, &y) in w[j..].iter_mut().zip(row) {
                *x = (*x + (e - q) * y) % e;
            }
        }
        Some(out)
    }

    pub fn module(&self) -> &GModule {
        &self.module
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn invariants(&self) -> &[i64] {
        &self.invariants
    }

    pub fn order(&self) -> u128 {
        self.invariants.iter().map(|&d| d as u128).product()
    }

    pub fn as_group(&self) -> FinAbGroup {
        FinAbGroup::from_orders(&self.invariants).expect("invariants exceed 1")
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    /// Normalized representative cocycles of the Smith generators.
    pub fn basis(&self) -> &[Cochain] {
        &self.basis
    }

    /// Canonical coordinates of the class of `c`.
    pub fn coords(&self, c: &Cochain) -> Result<Elem> {
        c.check(&self.module)?;
        if c.degree() != self.degree {
            return Err(Error::InvalidData("cochain degree differs from the group degree".into()));
        }
        if !is_cocycle(&self.module, c)? {
            return Err(Error::CocycleViolation(format!("{}-cochain is not a cocycle", self.degree)));
        }
        let (cn, _) = normal_form(&self.module, c)?;
        let w = self.z.vector(&to_scaled(&self.module, &cn));
        let a = self.free_coords(w).ok_or_else(|| Error::Internal("cocycle outside Zⁿ".into()))?;
        Ok(self
            .invariants
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let s: i128 = a.iter().zip(&self.coord).map(|(&x, row)| x as i128 * row[i] as i128).sum();
                s.rem_euclid(d as i128) as i64
            })
            .collect())
    }

    /// A normalized cocycle with the given coordinates.
    pub fn cocycle(&self, coords: &[i64]) -> Result<Cochain> {
        if coords.len() != self.invariants.len() {
            return Err(Error::InvalidData("wrong number of class coordinates".into()));
        }
        let m = &self.module;
        let mut c = Cochain::zero(m, self.degree);
        for (b, &x) in self.basis.iter().zip(coords) {
            c = c.lincomb(m, 1, b, x);
        }
        Ok(c)
    }
}

pub fn cohomology_group(m: &GModule, n: usize) -> Result<Arc<CohomologyGroup>> {
    let l = limits();
    if n > l.max_degree {
        return Err(Error::BudgetExceeded(format!("degree {n} exceeds the degree cap {}", l.max_degree)));
    }
    check_size(m, system_size(m, n + 1), "cocycle system")?;
    let b = coboundary_lattice(m, n)?;
    let ent = entry(m, n);
    if let Some(h) = ent.h.get() {
        return Ok(h.clone());
    }
    let h = Arc::new(CohomologyGroup::build(m, n, b)?);
    Ok(ent.h.get_or_init(|| h).clone())
}

/// A class in `Hⁿ(G, M)` with its canonical coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohClass {
    module: GModule,
    representative: Cochain,
    invariants: Vec<i64>,
    coords: Elem,
}

impl CohClass {
    pub fn new(m: &GModule, c: &Cochain) -> Result<Self> {
        let h = cohomology_group(m, c.degree())?;
        let coords = h.coords(c)?;
        Ok(CohClass { module: m.clone(), representative: c.clone(), invariants: h.invariants.clone(), coords })
    }

    pub fn from_coords(m: &GModule, n: usize, coords: &[i64]) -> Result<Self> {
        let h = cohomology_group(m, n)?;
        let c = h.cocycle(coords)?;
        Self::new(m, &c)
    }

    pub fn module(&self) -> &GModule {
        &self.module
    }

    pub fn degree(&self) -> usize {
        self.representative.degree()
    }

    pub fn representative(&self) -> &Cochain {
        &self.representative
    }

    pub fn invariants(&self) -> &[i64] {
        &self.invariants
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_trivial(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }

    pub fn order(&self) -> i64 {
        self.coords.iter().zip(&self.invariants).fold(1, |acc, (&x, &d)| num_integer::lcm(acc, d / num_integer::gcd(x, d)))
    }
}

/// Restrict a class along `N ↪ Γ`.
pub fn restriction_map(emb: &Embedding, m: &GModule, class: &CohClass) -> Result<CohClass> {
    if class.module() != m {
        return Err(Error::InvalidData("class lives over a different module".into()));
    }
    let (rm, c) = restrict_cochain(emb, m, class.representative())?;
    CohClass::new(&rm, &c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::cochain::coboundary;
    use crate::cohomology::group::FiniteGroup;

    fn cyc_coeff(g: &FiniteGroup, m: i64) -> GModule {
        GModule::qz_coefficients(g, m).unwrap()
    }

    #[test]
    fn cyclic_groups_alternate() {
        for n in 2..=6usize {
            let g = FiniteGroup::cyclic(n);
            for m in [n as i64, (n * n) as i64] {
                let md = cyc_coeff(&g, m);
                for deg in 0..=5 {
                    let h = cohomology_group(&md, deg).unwrap();
                    // Z/m with trivial action: every degree is Z/gcd(n, m)
                    let want: Vec<i64> = if deg == 0 { vec![m] } else { vec![n as i64] };
                    assert_eq!(h.invariants(), want.as_slice(), "n={n} m={m} deg={deg}");
                }
            }
        }
    }

    #[test]
    fn shapiro_vanishing_for_swap() {
        let g = FiniteGroup::cyclic(2);
        let a = FinAbGroup::new(vec![2, 2]).unwrap();
        let swap = GModule::new(g, a, vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 0]]]).unwrap();
        assert_eq!(cohomology_group(&swap, 0).unwrap().invariants(), &[2]);
        for n in 1..=4 {
            assert!(cohomology_group(&swap, n).unwrap().is_trivial(), "degree {n}");
        }
    }

    #[test]
    fn small_nonabelian_and_twisted() {
        let s3 = FiniteGroup::symmetric3();
        // H^n(S3, Z/6) trivial action: Z/6, Z/2, 0, Z/6 ... from Z: H^1(S3;Z/6)=Hom(S3,Z/6)=Z/2
        let m = GModule::trivial(&s3, &FinAbGroup::cyclic(6));
        assert_eq!(cohomology_group(&m, 1).unwrap().invariants(), &[2]);
        assert_eq!(cohomology_group(&m, 2).unwrap().invariants(), &[2]);
        assert_eq!(cohomology_group(&m, 3).unwrap().invariants(), &[6]);
        // sign action on Z/3 over Z/2: H^1 = Z/3/(2-fold) = 0, H^0 = 0
        let g = FiniteGroup::cyclic(2);
        let sign = GModule::new(g, FinAbGroup::cyclic(3), vec![vec![vec![1]], vec![vec![2]]]).unwrap();
        for n in 0..=3 {
            assert!(cohomology_group(&sign, n).unwrap().is_trivial());
        }
        // Klein four with Z/2: H^n has rank n+1
        let v = FiniteGroup::from_abelian(&FinAbGroup::new(vec![2, 2]).unwrap());
        let m = cyc_coeff(&v, 2);
        for n in 0..=3 {
            assert_eq!(cohomology_group(&m, n).unwrap().invariants(), vec![2; n + 1].as_slice());
        }
    }

    #[test]
    fn normalization_keeps_the_class() {
        use crate::cohomology::cochain::{is_normalized, normalize_cocycle};
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let z4 = FiniteGroup::cyclic(4);
        let v = FiniteGroup::from_abelian(&FinAbGroup::new(vec![2, 2]).unwrap());
        let s3 = FiniteGroup::symmetric3();
        let sign: Vec<Vec<Vec<i64>>> = (0..6).map(|g| vec![vec![if g % 2 == 0 { 1 } else { 5 }]]).collect();
        let mods = [
            GModule::new(s3, FinAbGroup::cyclic(6), sign).unwrap(),
            GModule::new(z4, FinAbGroup::cyclic(8), (0..4).map(|g| vec![vec![[1, 3, 1, 3][g]]]).collect()).unwrap(),
            GModule::new(
                v.clone(),
                FinAbGroup::new(vec![2, 4]).unwrap(),
                (0..4).map(|g| if g == 0 || g == 3 { vec![vec![1, 0], vec![0, 1]] } else { vec![vec![1, 0], vec![2, 1]] }).collect(),
            )
            .unwrap(),
        ];
        for m in &mods {
            let inv = m.module().invariants().to_vec();
            for n in 1..=3 {
                let h = cohomology_group(m, n).unwrap();
                for _ in 0..4 {
                    let cells = m.group().order().pow(n as u32 - 1);
                    let vals: Vec<Elem> = (0..cells).map(|_| inv.iter().map(|&k| rng.gen_range(0..k)).collect()).collect();
                    let x = Cochain::from_values(m, n - 1, &vals).unwrap();
                    let coords: Vec<i64> = h.invariants().iter().map(|&d| rng.gen_range(0..d)).collect();
                    let z = h.cocycle(&coords).unwrap();
                    assert!(is_normalized(m, &z));
                    let f = z.add(m, &coboundary(m, &x).unwrap());
                    let (fn_, corr) = normalize_cocycle(m, &f).unwrap();
                    assert!(is_normalized(m, &fn_));
                    if let Some(c) = corr {
                        assert_eq!(fn_.add(m, &coboundary(m, &c).unwrap()), f);
                    }
                    assert_eq!(h.coords(&f).unwrap(), coords);
                    let y = solve_coboundary(m, &f.sub(m, &z)).unwrap().unwrap();
                    assert_eq!(coboundary(m, &y).unwrap(), f.sub(m, &z));
                }
            }
        }
    }

    #[test]
    fn coordinates_are_canonical() {
        let g = FiniteGroup::from_abelian(&FinAbGroup::new(vec![2, 2]).unwrap());
        let m = cyc_coeff(&g, 4);
        let h = cohomology_group(&m, 2).unwrap();
        for (i, b) in h.basis().iter().enumerate() {
            let mut want = vec![0; h.invariants().len()];
            want[i] = 1;
            assert_eq!(h.coords(b).unwrap(), want);
            let x = Cochain::from_fn(&m, 1, |t| vec![(t[0] * 3 + 1) as i64]);
            let shifted = b.add(&m, &coboundary(&m, &x).unwrap());
            assert_eq!(h.coords(&shifted).unwrap(), want);
            assert!(cohomologous(&m, b, &shifted).unwrap());
            let y = solve_coboundary(&m, &shifted.sub(&m, b)).unwrap().unwrap();
            assert_eq!(coboundary(&m, &y).unwrap(), shifted.sub(&m, b));
            assert_eq!(class_order(&m, b).unwrap(), h.invariants()[i]);
        }
        let bad = Cochain::from_fn(&m, 2, |t| vec![i64::from(t == [1, 2])]);
        assert!(matches!(h.coords(&bad), Err(Error::CocycleViolation(_))));
    }

    #[test]
    fn restriction_z4_to_z2_degree_three() {
        let g = FiniteGroup::cyclic(4);
        let emb = Embedding::from_elements(&g, &[0, 2]).unwrap();
        let m = cyc_coeff(&g, 4);
        let h = cohomology_group(&m, 3).unwrap();
        let img: Vec<CohClass> = h
            .basis()
            .iter()
            .map(|b| restriction_map(&emb, &m, &CohClass::new(&m, b).unwrap()).unwrap())
            .collect();
        assert!(img.iter().any(|c| !c.is_trivial()));
        let triv = Embedding::from_elements(&g, &[0]).unwrap();
        let r = restriction_map(&triv, &m, &CohClass::new(&m, &h.basis()[0]).unwrap()).unwrap();
        assert!(r.is_trivial());
    }

    #[test]
    fn budget_is_enforced() {
        let g = FiniteGroup::cyclic(12);
        let m = cyc_coeff(&g, 12);
        assert!(matches!(cohomology_group(&m, 6), Err(Error::BudgetExceeded(_))));
    }
}
