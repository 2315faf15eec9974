//! `k×`-valued cohomology with trivial action, with torsion of `k×` identified
//! with `Q/Z` through `exp(2πi·x)`.
//!
//! A cochain with values in `(1/D)Z/Z` is a coboundary in `Q/Z` exactly when
//! it is one in `(1/(D·|G|))Z/Z`; every class comes from `Hⁿ(G, (1/|G|)Z/Z)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::ToPrimitive;

use crate::abelian::snf::from_i64;
use crate::abelian::{smith_normal_form, Elem, FinAbGroup};
use crate::cohomology::cochain::{kx_require_cocycle, Cochain, KxCochain};
use crate::cohomology::compute::{
    check_size, coboundary_columns, cohomology_group, densify, is_coboundary, ndim, normal_form, solve_coboundary,
    system_size, to_scaled,
};
use crate::cohomology::dense::DenseLattice;
use crate::cohomology::group::{Embedding, FiniteGroup};
use crate::cohomology::module::GModule;
use crate::error::{Error, Result};

/// `c` at level `N` (a multiple of its denominator), as a `Z/N`-valued cochain.
fn at_level(g: &FiniteGroup, c: &KxCochain, level: i64) -> Result<(GModule, Cochain)> {
    c.to_cyclic(g, level)
}

fn check_degree(c: &KxCochain) -> Result<()> {
    if c.degree() == 0 {
        return Err(Error::InvalidData("k×-valued cohomology is only finite in positive degrees".into()));
    }
    Ok(())
}

/// Is the cocycle `c` trivial in `Hⁿ(G, k×)`?
pub fn kx_is_trivial(g: &FiniteGroup, c: &KxCochain) -> Result<bool> {
    kx_require_cocycle(g, c, "k×-valued cochain")?;
    if c.degree() == 0 || c.is_zero() {
        return Ok(c.is_zero());
    }
    let level = c.den() * g.order() as i64;
    let (m, cc) = at_level(g, c, level)?;
    is_coboundary(&m, &cc)
}

pub fn kx_cohomologous(g: &FiniteGroup, a: &KxCochain, b: &KxCochain) -> Result<bool> {
    kx_is_trivial(g, &a.sub(b))
}

/// Some `x` with `d x = c` in `k×`-valued cochains, or `None`.
pub fn kx_solve_coboundary(g: &FiniteGroup, c: &KxCochain) -> Result<Option<KxCochain>> {
    check_degree(c)?;
    if c.is_zero() {
        return Ok(Some(KxCochain::zero(g, c.degree() - 1)));
    }
    let level = c.den() * g.order() as i64;
    let (m, cc) = at_level(g, c, level)?;
    Ok(solve_coboundary(&m, &cc)?.map(|x| KxCochain::from_cyclic(&x, level)))
}

/// Order of the class of `c` in `Hⁿ(G, k×)`.
pub fn kx_class_order(g: &FiniteGroup, c: &KxCochain) -> Result<i64> {
    check_degree(c)?;
    kx_require_cocycle(g, c, "k×-valued cochain")?;
    let bound = num_integer::gcd(c.den(), g.order() as i64);
    for d in (1..=bound).filter(|d| bound % d == 0) {
        if kx_is_trivial(g, &c.scale(d))? {
            return Ok(d);
        }
    }
    Err(Error::Internal("|G| does not kill the class".into()))
}

/// Normalized `Z/level`-cochains augmented by one coordinate per generator, spanning
/// the generators and all coboundaries.
fn generator_lattice(g: &FiniteGroup, n: usize, gens: &[KxCochain], level: i64) -> Result<DenseLattice> {
    let m = GModule::qz_coefficients(g, level)?;
    check_size(&m, system_size(&m, n), "k× coordinate system")?;
    let out = ndim(&m, n) as usize;
    let k = gens.len();
    let mut lat = DenseLattice::new(out + k, level);
    for (i, b) in gens.iter().enumerate() {
        let (_, c) = at_level(g, b, level)?;
        let mut v = to_scaled(&m, &normal_form(&m, &c)?.0);
        v.resize(out + k, 0);
        v[out + i] = 1;
        lat.insert(&v);
    }
    if n > 0 {
        for col in coboundary_columns(&m, n) {
            let mut v = vec![0i64; out + k];
            densify(out, &col, 0, &mut v);
            lat.insert(&v);
        }
    }
    Ok(lat)
}

/// Relations among the generators: rows of `lat` supported on the generator block.
fn relations(g: &FiniteGroup, n: usize, gens: &[KxCochain], lat: &DenseLattice, level: i64) -> Result<Vec<Vec<i64>>> {
    let out = ndim(&GModule::qz_coefficients(g, level)?, n) as usize;
    let k = gens.len();
    let mut rel: Vec<Vec<i64>> = vec![];
    for p in out..out + k {
        if let Some(row) = lat.row(p) {
            let mut r = vec![0i64; k];
            for (i, &x) in row.iter().enumerate() {
                r[p - out + i] = x as i64;
            }
            rel.push(r);
        }
    }
    for i in 0..k {
        let mut r = vec![0i64; k];
        r[i] = level;
        rel.push(r);
    }
    Ok(rel)
}

/// Invariants of the image of `Hⁿ(G, (1/m)Z/Z)` in `Hⁿ(G, k×)`, with coboundaries
/// taken in `(1/level)Z/Z`; `level` must be a multiple of `m`.
pub fn kx_model_image(g: &FiniteGroup, n: usize, m: i64, level: i64) -> Result<Vec<i64>> {
    if n == 0 || m < 1 || level % m != 0 {
        return Err(Error::InvalidData("need n ≥ 1 and m dividing level".into()));
    }
    let raw = cohomology_group(&GModule::qz_coefficients(g, m)?, n)?;
    let gens: Vec<KxCochain> = raw.basis().iter().map(|b| KxCochain::from_cyclic(b, m)).collect();
    let lat = generator_lattice(g, n, &gens, level)?;
    let rel = relations(g, n, &gens, &lat, level)?;
    if rel.is_empty() {
        return Ok(vec![]);
    }
    let s = smith_normal_form(&from_i64(&rel));
    Ok(s.diagonal().iter().map(|d| d.to_i64().expect("invariant fits")).filter(|&d| d != 1).collect())
}

/// `Hⁿ(G, k×)` as the image of `Hⁿ(G, (1/|G|)Z/Z)`, with a fixed Smith basis.
#[derive(Debug)]
pub struct KxCohomology {
    group: FiniteGroup,
    degree: usize,
    gens: Vec<KxCochain>,
    invariants: Vec<i64>,
    basis: Vec<KxCochain>,
    // |gens| × |invariants|
    coord: Vec<Vec<i64>>,
    lattices: Mutex<HashMap<i64, Arc<DenseLattice>>>,
}

impl KxCohomology {
    fn build(g: &FiniteGroup, n: usize) -> Result<Self> {
        let ord = g.order() as i64;
        let raw = cohomology_group(&GModule::qz_coefficients(g, ord)?, n)?;
        let gens: Vec<KxCochain> = raw.basis().iter().map(|b| KxCochain::from_cyclic(b, ord)).collect();
        let mut h = KxCohomology {
            group: g.clone(),
            degree: n,
            gens,
            invariants: vec![],
            basis: vec![],
            coord: vec![],
            lattices: Mutex::new(HashMap::new()),
        };
        let level = ord * ord;
        let k = h.gens.len();
        let lat = h.lattice(level)?;
        let rel = relations(g, n, &h.gens, &lat, level)?;
        let s = smith_normal_form(&from_i64(&rel));
        let diag: Vec<i64> = s.diagonal().iter().map(|d| d.to_i64().expect("invariant fits")).collect();
        let keep: Vec<usize> = (0..diag.len()).filter(|&i| diag[i] != 1).collect();
        h.invariants = keep.iter().map(|&i| diag[i]).collect();
        h.coord = (0..k)
            .map(|f| keep.iter().map(|&i| (&s.v[f][i] % diag[i]).to_i64().unwrap().rem_euclid(diag[i])).collect())
            .collect();
        for &i in &keep {
            let mut c = KxCochain::zero(g, n);
            for (f, b) in h.gens.iter().enumerate() {
                let x = (&s.v_inv[i][f] % ord).to_i64().unwrap();
                c = c.lincomb(1, b, x);
            }
            h.basis.push(c);
        }
        Ok(h)
    }

    /// Augmented lattice over normalized `Z/N`-cochains and generator coefficients.
    fn lattice(&self, level: i64) -> Result<Arc<DenseLattice>> {
        let mut map = self.lattices.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(l) = map.get(&level) {
            return Ok(l.clone());
        }
        let lat = generator_lattice(&self.group, self.degree, &self.gens, level)?;
        let lat = Arc::new(lat);
        map.insert(level, lat.clone());
        Ok(lat)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
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

    pub fn basis(&self) -> &[KxCochain] {
        &self.basis
    }

    /// Canonical coordinates of the class of the cocycle `c`.
    pub fn coords(&self, c: &KxCochain) -> Result<Elem> {
        if c.degree() != self.degree {
            return Err(Error::InvalidData("cochain degree differs from the group degree".into()));
        }
        kx_require_cocycle(&self.group, c, "k×-valued cochain")?;
        let g = &self.group;
        let ord = g.order() as i64;
        let level = num_integer::lcm(c.den(), ord) * ord;
        let lat = self.lattice(level)?;
        let m = GModule::qz_coefficients(g, level)?;
        let (_, cc) = at_level(g, c, level)?;
        let (cn, _) = normal_form(&m, &cc)?;
        let out = ndim(&m, self.degree) as usize;
        let mut v = to_scaled(&m, &cn);
        v.resize(out + self.gens.len(), 0);
        let mut w = lat.vector(&v);
        lat.reduce(&mut w);
        if w[..out].iter().any(|&x| x != 0) {
            return Err(Error::Internal("class outside the image of the |G|-level cohomology".into()));
        }
        let r: Vec<i64> = w[out..].iter().map(|&x| -(x as i64)).collect();
        Ok(self
            .invariants
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let s: i128 = r.iter().zip(&self.coord).map(|(&x, row)| x as i128 * row[i] as i128).sum();
                s.rem_euclid(d as i128) as i64
            })
            .collect())
    }

    pub fn cocycle(&self, coords: &[i64]) -> Result<KxCochain> {
        if coords.len() != self.invariants.len() {
            return Err(Error::InvalidData("wrong number of class coordinates".into()));
        }
        let mut c = KxCochain::zero(&self.group, self.degree);
        for (b, &x) in self.basis.iter().zip(coords) {
            c = c.lincomb(1, b, x);
        }
        Ok(c)
    }
}

/// `Hⁿ(G, k×)` for `n ≥ 1`, memoized per `(G, n)`.
pub fn kx_cohomology(g: &FiniteGroup, n: usize) -> Result<Arc<KxCohomology>> {
    if n == 0 {
        return Err(Error::InvalidData("k×-valued cohomology is only finite in positive degrees".into()));
    }
    type Memo = Mutex<HashMap<(FiniteGroup, usize), Arc<OnceLock<Arc<KxCohomology>>>>>;
    static MEMO: OnceLock<Memo> = OnceLock::new();
    let cell = {
        let mut map = MEMO.get_or_init(Default::default).lock().unwrap_or_else(|e| e.into_inner());
        map.entry((g.clone(), n)).or_default().clone()
    };
    if let Some(h) = cell.get() {
        return Ok(h.clone());
    }
    let h = Arc::new(KxCohomology::build(g, n)?);
    Ok(cell.get_or_init(|| h).clone())
}

/// A class in `Hⁿ(G, k×)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KxClass {
    group: FiniteGroup,
    representative: KxCochain,
    invariants: Vec<i64>,
    coords: Elem,
}

impl KxClass {
    pub fn new(g: &FiniteGroup, c: &KxCochain) -> Result<Self> {
        check_degree(c)?;
        let h = kx_cohomology(g, c.degree())?;
        let coords = h.coords(c)?;
        Ok(KxClass { group: g.clone(), representative: c.clone(), invariants: h.invariants.clone(), coords })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.representative.degree()
    }

    pub fn representative(&self) -> &KxCochain {
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

/// Restriction `Hⁿ(Γ, k×) → Hⁿ(N, k×)`.
pub fn kx_restriction(emb: &Embedding, class: &KxClass) -> Result<KxClass> {
    if class.group() != &emb.parent {
        return Err(Error::InvalidData("class lives over a different group".into()));
    }
    KxClass::new(&emb.sub, &class.representative().restrict(emb))
}
