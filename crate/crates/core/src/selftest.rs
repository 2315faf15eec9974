//! The acceptance suite: criteria 1 through 11, each a deterministic check with
//! an optional wall-clock limit. Randomized parts take an explicit seed.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::abelian::{Elem, FinAbGroup, Homomorphism, Subgroup};
use crate::cohomology::{
    coboundary, cohomology_group, kx_class_order, kx_cohomologous, kx_cohomology, kx_is_cocycle, kx_is_trivial,
    kx_model_image, Cochain, Embedding, FiniteGroup, GModule, KxCochain,
};
use crate::error::Error;
use crate::lag::{compose, compose_lagrangians, graph_of_isometry};
use crate::metric::qz::{is_perfect_square, square_class_mul};
use crate::metric::{
    d_distance, det_square_class, enumerate_lagrangians, is_special, orthogonal_group, Isometry, MetricGroup,
    QuadraticForm, QZ,
};
use crate::modcat::{
    all_classes, alternating_bicharacters, bimodcat_tensor, brpic_group, is_integral_brpic, t_functor, t_functor_sum,
    ModCatClass,
};
use crate::metric::SubBichar;
use crate::obstructions::{
    bicharacter_from_entries, bq_cup, lhs_d2, omega_extends, pointed_o4_cochain, pw_cochain, tambara_yamagami,
    LhsData,
};

pub const DEFAULT_SEED: u64 = 20_251_016;
const CAP: u128 = 1 << 20;

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl std::fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let limit = self.limit.map(|l| format!(" (limit {}s)", l.as_secs())).unwrap_or_default();
        write!(
            f,
            "criterion {:>2} {}: {} in {:.2}s{} - {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed.as_secs_f64(),
            limit,
            self.detail
        )
    }
}

#[derive(Debug)]
struct Fail(String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(e.to_string())
    }
}

type Check = std::result::Result<String, Fail>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(Fail(format!($($fmt)+)));
        }
    };
}

pub const CRITERIA: [(u8, &str, Option<u64>); 11] = [
    (1, "Tambara-Yamagami reproduction", Some(1)),
    (2, "BrPic equals O(A + A*)", Some(30)),
    (3, "T is a functor", Some(120)),
    (4, "Lagrangian distance and determinant laws", Some(60)),
    (5, "integral components are the special ones", None),
    (6, "composition multiplicities form a 2-cocycle", None),
    (7, "PW is quadratic with polarization b_q", Some(120)),
    (8, "pointed O4 is bilinear", None),
    (9, "O4-type classes divide D^4", None),
    (10, "extending 3-cocycles and d2", Some(60)),
    (11, "coefficient stabilization", None),
];

/// Criteria whose statement is false as written. They still run and report FAIL;
/// the acceptance target requires them to keep failing rather than counting them.
pub const EXPECTED_FAILURES: [u8; 1] = [11];

pub fn run(id: u8, seed: u64) -> Option<CriterionReport> {
    let &(id, title, limit) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let out = match id {
        1 => c1(),
        2 => c2(),
        3 => c3(seed),
        4 => c4(),
        5 => c5(),
        6 => c6(),
        7 => c7(seed),
        8 => c8(),
        9 => c9(),
        10 => c10(),
        _ => c11(),
    };
    let elapsed = start.elapsed();
    let limit = limit.map(Duration::from_secs);
    let (mut passed, mut detail) = match out {
        Ok(d) => (true, d),
        Err(Fail(d)) => (false, d),
    };
    if let Some(l) = limit {
        if elapsed >= l {
            passed = false;
            detail = format!("over time: {detail}");
        }
    }
    Some(CriterionReport { id, title, passed, detail, elapsed, limit })
}

pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    CRITERIA.iter().filter_map(|c| run(c.0, seed)).collect()
}

fn grp(inv: &[i64]) -> FinAbGroup {
    FinAbGroup::from_orders(inv).expect("fixture group")
}

fn c1() -> Check {
    let a = grp(&[2]);
    let chi = bicharacter_from_entries(&a, &[(0, 0, QZ::new(1, 2))])?;
    let r = tambara_yamagami(&a, &chi)?;
    ensure!(r.valid, "form reported invalid");
    ensure!(r.h2_vanishes && r.h3_vanishes, "H2 = {:?}, H3 = {:?}", r.report.torsor_rank_m, r.report.o3_group);
    ensure!(r.count == 2, "count {}", r.count);
    Ok(format!("H^2 = H^3 = 0 under the swap action, H^3(Z/2, k*) = {:?}, count {}", r.report.torsor_rank_alpha, r.count))
}

/// `O(E)` by trying every assignment of generator images.
fn brute_orthogonal(e: &MetricGroup) -> BTreeSet<Vec<Elem>> {
    let g = e.group();
    let elems = g.elements();
    let k = g.rank();
    let mut out = BTreeSet::new();
    for mut idx in 0..elems.len().pow(k as u32) {
        let mut imgs = vec![];
        for _ in 0..k {
            imgs.push(elems[idx % elems.len()].clone());
            idx /= elems.len();
        }
        let Ok(f) = Homomorphism::from_images(g.clone(), g.clone(), &imgs) else { continue };
        if f.is_injective() && elems.iter().all(|x| e.q(&f.apply(x)) == e.q(x)) {
            out.insert(imgs);
        }
    }
    out
}

fn c2() -> Check {
    let mut orders = vec![];
    for inv in [vec![2], vec![3], vec![4], vec![2, 2]] {
        let a = grp(&inv);
        let hyp = MetricGroup::hyperbolic(&a);
        let bp = brpic_group(&a, CAP)?;
        let brute = brute_orthogonal(&hyp);
        let found: BTreeSet<Vec<Elem>> = bp
            .isometries
            .iter()
            .map(|g| (0..hyp.group().rank()).map(|j| g.map().image_of_generator(j)).collect())
            .collect();
        ensure!(found == brute, "A = {inv:?}: enumerated O has {} elements, brute force {}", found.len(), brute.len());
        ensure!(bp.tensor == bp.compose, "A = {inv:?}: tensor table differs from the composition table");
        for (g, c) in bp.isometries.iter().zip(&bp.classes) {
            ensure!(t_functor(&a, &a, c)? == graph_of_isometry(g), "A = {inv:?}: T(σ(graph g)) is not graph g");
        }
        orders.push(bp.isometries.len());
    }
    Ok(format!("orders {orders:?} for A = Z/2, Z/3, Z/4, Z/2^2"))
}

fn check_functor(a1: &FinAbGroup, a2: &FinAbGroup, a3: &FinAbGroup, n: &ModCatClass, np: &ModCatClass) -> Check {
    let lhs = t_functor_sum(a1, a3, &bimodcat_tensor(a1, a2, a3, n, np)?)?;
    let rhs = compose(&t_functor(a2, a3, np)?, &t_functor(a1, a2, n)?)?;
    ensure!(lhs == rhs, "T(N ⊠ N') ≠ T(N')•T(N) for A = {:?}, {:?}, {:?}", a1.invariants(), a2.invariants(), a3.invariants());
    Ok(String::new())
}

fn random_class(base: &FinAbGroup, rng: &mut ChaCha8Rng) -> ModCatClass {
    let ngens = rng.gen_range(0..=3);
    let gens: Vec<Elem> =
        (0..ngens).map(|_| base.invariants().iter().map(|&n| rng.gen_range(0..n)).collect()).collect();
    let h = Subgroup::from_generators(base, &gens).expect("random generators");
    let bs = alternating_bicharacters(&h.presentation().group);
    let b = &bs[rng.gen_range(0..bs.len())];
    ModCatClass::new(base.clone(), SubBichar::from_abstract(&h, b)).expect("alternating")
}

fn c3(seed: u64) -> Check {
    let small = [grp(&[]), grp(&[2]), grp(&[3]), grp(&[2, 2])];
    let mut pairs = 0usize;
    for a1 in &small {
        for a2 in &small {
            for a3 in &small {
                let c12 = all_classes(&a1.direct_sum(a2));
                let c23 = all_classes(&a2.direct_sum(a3));
                pairs += c12.len() * c23.len();
                c12.par_iter()
                    .try_for_each(|n| c23.iter().try_for_each(|np| check_functor(a1, a2, a3, n, np).map(|_| ())))?;
            }
        }
    }
    let pool = FinAbGroup::all_up_to(8);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<_> = (0..200)
        .map(|_| {
            let a: Vec<FinAbGroup> = (0..3).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
            let n = random_class(&a[0].direct_sum(&a[1]), &mut rng);
            let np = random_class(&a[1].direct_sum(&a[2]), &mut rng);
            (a, n, np)
        })
        .collect();
    cases.par_iter().try_for_each(|(a, n, np)| check_functor(&a[0], &a[1], &a[2], n, np).map(|_| ()))?;
    Ok(format!("{pairs} exhaustive pairs and 200 random instances (seed {seed})"))
}

/// Every quadratic form on `g` given by generator data, nondegenerate ones only.
fn metric_structures(g: &FinAbGroup) -> Vec<MetricGroup> {
    let n = g.invariants();
    let k = n.len();
    let dw: Vec<i64> = n.iter().map(|&x| num_integer::gcd(2 * x, x * x)).collect();
    let pairs: Vec<(usize, usize, i64)> =
        (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j, num_integer::gcd(n[i], n[j])))).collect();
    let radices: Vec<i64> = dw.iter().copied().chain(pairs.iter().map(|p| p.2)).collect();
    let total: i64 = radices.iter().product();
    let mut out = vec![];
    for mut idx in 0..total {
        let mut digits = vec![];
        for &r in &radices {
            digits.push(idx % r);
            idx /= r;
        }
        let diag: Vec<QZ> = (0..k).map(|i| QZ::new(digits[i], dw[i])).collect();
        let off: Vec<(usize, usize, QZ)> =
            pairs.iter().enumerate().map(|(p, &(i, j, d))| (i, j, QZ::new(digits[k + p], d))).collect();
        if let Ok(q) = QuadraticForm::new(g.clone(), diag, &off) {
            if let Ok(e) = MetricGroup::new(q) {
                out.push(e);
            }
        }
    }
    out
}

/// One metric group per value census `{(ord x, q(x))}` on each abelian group of order `≤ bound`.
pub fn metric_census(bound: i64) -> Vec<MetricGroup> {
    type CensusKey = (Vec<i64>, Vec<(i64, QZ)>);
    let mut reps: BTreeMap<CensusKey, MetricGroup> = BTreeMap::new();
    for g in FinAbGroup::all_up_to(bound) {
        for e in metric_structures(&g) {
            let mut census: Vec<(i64, QZ)> = g.elements().iter().map(|x| (g.element_order(x), e.q(x))).collect();
            census.sort();
            reps.entry((g.invariants().to_vec(), census)).or_insert(e);
        }
    }
    reps.into_values().collect()
}

fn lagrangian_laws(e: &MetricGroup) -> std::result::Result<(usize, usize), Fail> {
    let ls = enumerate_lagrangians(e, CAP)?;
    let mut d = vec![vec![0u128; ls.len()]; ls.len()];
    for i in 0..ls.len() {
        for j in 0..ls.len() {
            d[i][j] = d_distance(e, &ls[i], &ls[j])?;
        }
    }
    for i in 0..ls.len() {
        for j in 0..ls.len() {
            for k in 0..ls.len() {
                ensure!(square_class_mul(d[i][j], d[j][k]) == d[i][k], "d is not a cocycle on {:?}", e.group());
                let top = ls[i].sum(&ls[j])?.intersect(&ls[k])?;
                let bot = ls[i].intersect(&ls[k])?.sum(&ls[j].intersect(&ls[k])?)?;
                ensure!(is_perfect_square(top.order() / bot.order()), "three-Lagrangian index is not a square");
            }
        }
    }
    let o = orthogonal_group(e, CAP)?;
    let det: Vec<u128> = o.iter().map(det_square_class).collect::<crate::Result<_>>()?;
    let index: std::collections::HashMap<&Isometry, usize> = o.iter().enumerate().map(|(i, g)| (g, i)).collect();
    for (gi, g) in o.iter().enumerate() {
        for l in &ls {
            ensure!(d_distance(e, l, &l.map(g.map())?)? == det[gi], "det(g) ≠ d(L, gL) on {:?}", e.group());
        }
        for (hi, h) in o.iter().enumerate() {
            let gh = g.compose(h)?;
            let Some(&x) = index.get(&gh) else { return Err(Fail("O(E) is not closed".into())) };
            ensure!(det[x] == square_class_mul(det[gi], det[hi]), "det is not multiplicative on {:?}", e.group());
        }
    }
    Ok((ls.len(), o.len()))
}

fn c4() -> Check {
    let census = metric_census(16);
    let stats: Vec<(usize, usize)> =
        census.par_iter().map(lagrangian_laws).collect::<std::result::Result<_, Fail>>()?;
    let lags: usize = stats.iter().map(|s| s.0).sum();
    let isos: usize = stats.iter().map(|s| s.1).sum();
    Ok(format!("{} metric groups, {lags} Lagrangians, {isos} isometries", census.len()))
}

fn c5() -> Check {
    let groups = FinAbGroup::all_up_to(9);
    let counts: Vec<usize> = groups
        .par_iter()
        .map(|a| {
            let o = orthogonal_group(&MetricGroup::hyperbolic(a), CAP)?;
            for g in &o {
                ensure!(is_integral_brpic(a, g)? == is_special(g)?, "A = {:?}: integrality differs from SO", a.invariants());
            }
            Ok(o.len())
        })
        .collect::<std::result::Result<_, Fail>>()?;
    Ok(format!("{} groups, {} isometries", groups.len(), counts.iter().sum::<usize>()))
}

fn lag_fixtures() -> Vec<MetricGroup> {
    let semion_pair = QuadraticForm::new(grp(&[2, 2]), vec![QZ::new(1, 4), QZ::new(3, 4)], &[]).expect("form");
    vec![
        MetricGroup::trivial(),
        MetricGroup::hyperbolic(&grp(&[2])),
        MetricGroup::hyperbolic(&grp(&[3])),
        MetricGroup::new(semion_pair).expect("nondegenerate"),
    ]
}

fn c6() -> Check {
    let fx = lag_fixtures();
    let lag = |a: &MetricGroup, b: &MetricGroup| enumerate_lagrangians(&MetricGroup::corr_space(a, b), CAP);
    let mut quads = vec![];
    for a in 0..fx.len() {
        for b in 0..fx.len() {
            for c in 0..fx.len() {
                for d in 0..fx.len() {
                    quads.push([a, b, c, d]);
                }
            }
        }
    }
    let counts: Vec<usize> = quads
        .par_iter()
        .map(|q| {
            let [e1, e2, e3, e4] = q.map(|i| &fx[i]);
            let (g1, g2, g3, g4) = (e1.group(), e2.group(), e3.group(), e4.group());
            let (l1s, l2s, l3s) = (lag(e1, e2)?, lag(e2, e3)?, lag(e3, e4)?);
            for l1 in &l1s {
                for l2 in &l2s {
                    let (m21, c21) = compose_lagrangians(g1, g2, g3, l2, l1)?;
                    for l3 in &l3s {
                        let (m32, c32) = compose_lagrangians(g2, g3, g4, l3, l2)?;
                        let (ma, ca) = compose_lagrangians(g1, g3, g4, l3, &c21)?;
                        let (mb, cb) = compose_lagrangians(g1, g2, g4, &c32, l1)?;
                        ensure!(ca == cb, "composition is not associative");
                        ensure!(ma * m21 == mb * m32, "multiplicities violate the cocycle law");
                    }
                }
            }
            Ok(l1s.len() * l2s.len() * l3s.len())
        })
        .collect::<std::result::Result<_, Fail>>()?;
    Ok(format!("{} composable triples", counts.iter().sum::<usize>()))
}

/// `(module, form)` fixtures for PW: `G ∈ {Z/2², Z/3², Z/3, Z/9}` against odd `A`, with
/// `G` acting through `±1` where it can and both square classes of `q`.
fn pw_fixtures() -> Vec<(GModule, QuadraticForm)> {
    let mut out = vec![];
    let z3sq = grp(&[3, 3]);
    let forms_on = |a: &FinAbGroup| -> Vec<QuadraticForm> {
        let n = a.invariants();
        [1, 2]
            .iter()
            .map(|&u| {
                let mut diag = vec![QZ::new(u, n[0])];
                diag.extend(n[1..].iter().map(|&d| QZ::new(1, d)));
                QuadraticForm::new(a.clone(), diag, &[]).expect("form")
            })
            .collect()
    };
    let cases: Vec<(Vec<i64>, Vec<FinAbGroup>)> = vec![
        (vec![2, 2], vec![grp(&[3]), grp(&[5])]),
        (vec![3, 3], vec![grp(&[3]), grp(&[5]), z3sq.clone()]),
        (vec![3], vec![grp(&[3]), z3sq.clone()]),
        (vec![9], vec![grp(&[3]), z3sq]),
    ];
    for (ginv, targets) in cases {
        let ga = grp(&ginv);
        let g = FiniteGroup::from_abelian(&ga);
        for a in targets {
            let mut mods = vec![GModule::trivial(&g, &a)];
            if ginv[0] == 2 {
                // first coordinate acts by −1
                let p = a.invariants()[0];
                let act = (0..g.order()).map(|x| vec![vec![if ga.from_index(x)[0] == 1 { p - 1 } else { 1 }]]).collect();
                mods.push(GModule::new(g.clone(), a.clone(), act).expect("sign action"));
            }
            for m in mods {
                for q in forms_on(&a) {
                    out.push((m.clone(), q));
                }
            }
        }
    }
    out
}

fn random_cochain(m: &GModule, n: usize, rng: &mut ChaCha8Rng) -> Cochain {
    let cells = m.group().order().pow(n as u32);
    let vals: Vec<Elem> =
        (0..cells).map(|_| m.module().invariants().iter().map(|&d| rng.gen_range(0..d)).collect()).collect();
    Cochain::from_values(m, n, &vals).expect("shape")
}

fn c7(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    for (m, q) in pw_fixtures() {
        let g = m.group();
        let h2 = cohomology_group(&m, 2)?;
        let basis = h2.basis();
        let half = (m.exponent() + 1) / 2;
        for (i, l1) in basis.iter().enumerate() {
            let pw1 = pw_cochain(&m, &q, l1, None)?;
            ensure!(kx_is_cocycle(g, &pw1), "PW(L) is not a 4-cocycle");
            ensure!(kx_cohomologous(g, &pw1, &bq_cup(&m, &q, &l1.scale(&m, half), l1)?)?, "PW(L) ≠ b_q(L^1/2, L)");
            let shifted = l1.add(&m, &coboundary(&m, &random_cochain(&m, 1, &mut rng))?);
            ensure!(kx_cohomologous(g, &pw1, &pw_cochain(&m, &q, &shifted, None)?)?, "PW moved under L ↦ L + dβ");
            for l2 in &basis[i..] {
                let defect = pw_cochain(&m, &q, &l1.add(&m, l2), None)?.sub(&pw1).sub(&pw_cochain(&m, &q, l2, None)?);
                ensure!(kx_cohomologous(g, &defect, &bq_cup(&m, &q, l1, l2)?)?, "bilinear defect ≠ b_q cup");
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} basis pairs over {} fixtures (seed {seed})", pw_fixtures().len()))
}

/// Pointed fixtures `(G, H)` with trivial, sign and swap actions.
fn pointed_fixtures() -> Vec<GModule> {
    let groups: Vec<(FiniteGroup, Vec<bool>)> = vec![
        (FiniteGroup::cyclic(2), vec![false, true]),
        (FiniteGroup::cyclic(3), vec![false; 3]),
        (FiniteGroup::cyclic(4), (0..4).map(|x| x % 2 == 1).collect()),
        (FiniteGroup::from_abelian(&grp(&[2, 2])), (0..4).map(|x| x >= 2).collect()),
    ];
    let mut out = vec![];
    for (g, odd) in groups {
        for inv in [vec![2], vec![3], vec![4], vec![2, 2]] {
            let h = grp(&inv);
            out.push(GModule::trivial(&g, &h));
            if odd.iter().any(|&x| x) {
                let flip: Vec<Vec<i64>> = if inv == [2, 2] {
                    vec![vec![0, 1], vec![1, 0]]
                } else if inv[0] > 2 {
                    vec![vec![inv[0] - 1]]
                } else {
                    continue;
                };
                let id: Vec<Vec<i64>> = (0..h.rank()).map(|i| (0..h.rank()).map(|j| i64::from(i == j)).collect()).collect();
                let act = odd.iter().map(|&o| if o { flip.clone() } else { id.clone() }).collect();
                out.push(GModule::new(g.clone(), h, act).expect("involutive action"));
            }
        }
    }
    out
}

fn c8() -> Check {
    let mut checked = 0;
    let mut vanishing = 0;
    for m in pointed_fixtures() {
        let g = m.group();
        let md = m.dual();
        let b = cohomology_group(&m, 2)?.basis().to_vec();
        let bd = cohomology_group(&md, 2)?.basis().to_vec();
        let o4 = |x: &Cochain, y: &Cochain| pointed_o4_cochain(&m, x, y);
        let h4_zero = kx_cohomology(g, 4)?.is_trivial();
        for x1 in &b {
            for y in &bd {
                let base = o4(x1, y)?;
                if h4_zero {
                    ensure!(kx_is_trivial(g, &base)?, "O4 nonzero although H^4(G, k*) = 0");
                }
                for x2 in &b {
                    let sum = o4(&x1.add(&m, x2), y)?;
                    ensure!(kx_cohomologous(g, &sum, &base.add(&o4(x2, y)?))?, "O4 not additive in M1");
                }
                for y2 in &bd {
                    let sum = o4(x1, &y.add(&md, y2))?;
                    ensure!(kx_cohomologous(g, &sum, &base.add(&o4(x1, y2)?))?, "O4 not additive in M2");
                }
                checked += 1;
            }
        }
        if h4_zero {
            vanishing += 1;
        }
    }
    Ok(format!("{checked} basis pairs, {vanishing} fixtures with H^4(G, k*) = 0"))
}

fn c9() -> Check {
    let mut classes = 0;
    for (m, q) in pw_fixtures() {
        let d = m.module().order();
        for l in cohomology_group(&m, 2)?.basis() {
            let nu = pw_cochain(&m, &q, l, None)?;
            let ord = kx_class_order(m.group(), &nu)? as u128;
            ensure!(d.pow(4) % ord == 0, "PW class of order {ord} with |A| = {d}");
            classes += 1;
        }
    }
    for m in pointed_fixtures() {
        let d = m.module().order();
        let bd = cohomology_group(&m.dual(), 2)?.basis().to_vec();
        for x in cohomology_group(&m, 2)?.basis() {
            for y in &bd {
                let ord = kx_class_order(m.group(), &pointed_o4_cochain(&m, x, y)?)? as u128;
                ensure!(d.pow(4) % ord == 0, "O4 class of order {ord} with |H| = {d}");
                classes += 1;
            }
        }
    }
    Ok(format!("{classes} classes"))
}

fn z2_generator(g: &FiniteGroup) -> KxCochain {
    KxCochain::from_fn(g, 3, |t| if t == [1, 1, 1] { QZ::new(1, 2) } else { QZ::ZERO })
}

/// `ω(a,b,c) = a·⌊(b+c)/n⌋/n` on `Z/n`.
pub fn cyclic_generator(n: usize) -> KxCochain {
    let g = FiniteGroup::cyclic(n);
    let ni = n as i64;
    KxCochain::from_fn(&g, 3, |t| QZ::new(t[0] as i64 * ((t[1] + t[2]) as i64 / ni), ni))
}

fn c10() -> Check {
    let z4 = FiniteGroup::cyclic(4);
    let emb = Embedding::from_elements(&z4, &[0, 2])?;
    let r = omega_extends(&emb, &z2_generator(&emb.sub))?;
    ensure!(r.extendable, "the generator of H^3(Z/2) does not extend to Z/4");
    let parents = [
        FiniteGroup::cyclic(4),
        FiniteGroup::from_abelian(&grp(&[2, 2])),
        FiniteGroup::symmetric3(),
        FiniteGroup::dihedral(4),
        FiniteGroup::quaternion(),
    ];
    let mut pairs = 0;
    for p in &parents {
        for s in p.subgroups() {
            if s.len() == 1 {
                continue;
            }
            let emb = Embedding::from_elements(p, &s)?;
            let z = omega_extends(&emb, &KxCochain::zero(&emb.sub, 3))?;
            ensure!(z.extendable && z.class_count == z.kernel_order, "ω = 0 does not extend");
            pairs += 1;
        }
    }
    // d2 corpus
    let v4 = FiniteGroup::from_abelian(&grp(&[2, 2]));
    let z2 = FiniteGroup::cyclic(2);
    let mut data = vec![
        LhsData::split(v4.clone(), z2.clone(), vec![vec![0, 1, 2, 3], vec![0, 2, 1, 3]])?,
        LhsData::split(FiniteGroup::cyclic(4), z2.clone(), vec![vec![0, 1, 2, 3], vec![0, 3, 2, 1]])?,
        LhsData::split(FiniteGroup::cyclic(3), z2.clone(), vec![vec![0, 1, 2], vec![0, 2, 1]])?,
        // Z/4 as an extension of Z/2 by Z/2
        LhsData::new(FiniteGroup::cyclic(2), z2.clone(), vec![vec![0, 1]; 2], vec![vec![0, 0], vec![0, 1]])?,
    ];
    data.push(LhsData::split(FiniteGroup::quaternion(), z2, vec![(0..8).collect(); 2])?);
    let mut reports = 0;
    let mut not_invariant = 0;
    for d in &data {
        let h3 = kx_cohomology(&d.n, 3)?;
        let zero = lhs_d2(d, &KxCochain::zero(&d.n, 3))?;
        ensure!(zero.all_trivial && zero.vanishes, "d2(0) ≠ 0");
        let total: i64 = h3.invariants().iter().product();
        for idx in 0..total {
            let mut coords = vec![];
            let mut r = idx;
            for &k in h3.invariants() {
                coords.push(r % k);
                r /= k;
            }
            let w = h3.cocycle(&coords)?;
            match lhs_d2(d, &w) {
                Ok(rep) => {
                    for c in rep.u.iter().flatten() {
                        ensure!(kx_is_cocycle(&d.n, c.representative()), "U is not a 2-cocycle");
                    }
                    reports += 1;
                }
                Err(Error::NotInvariant(_)) => not_invariant += 1,
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(format!(
        "Z/2 generator extends to Z/4 ({} classes); ω = 0 extends over {pairs} subgroup pairs; {reports} d2 tables, {not_invariant} non-invariant classes skipped",
        r.class_count
    ))
}

/// The map `Hⁿ(G, Z/m) → Hⁿ(G, Z/(m|G|))` induced by `x ↦ |G|x`, as an isomorphism test.
pub fn raw_inclusion_is_iso(g: &FiniteGroup, n: usize, m: i64) -> crate::Result<bool> {
    let k = g.order() as i64;
    let src = cohomology_group(&GModule::qz_coefficients(g, m)?, n)?;
    let dm = GModule::qz_coefficients(g, m * k)?;
    let dst = cohomology_group(&dm, n)?;
    let imgs: Vec<Elem> = src
        .basis()
        .iter()
        .map(|b| {
            let vals: Vec<Elem> = b.values().iter().map(|v| vec![v[0] * k]).collect();
            dst.coords(&Cochain::from_values(&dm, n, &vals)?)
        })
        .collect::<crate::Result<_>>()?;
    let f = Homomorphism::from_images(src.as_group(), dst.as_group(), &imgs)?;
    Ok(f.is_injective() && src.order() == dst.order())
}

/// Criterion 11 in the `k×` model: the image of `Hⁿ(G, (1/m)Z/Z)` in `Hⁿ(G, Q/Z)` does
/// not grow when `m` is replaced by `m|G|`, and does not depend on the level used
/// to test coboundaries.
pub fn stabilization_holds(g: &FiniteGroup, n: usize) -> crate::Result<bool> {
    let k = g.order() as i64;
    let m = k;
    let a = kx_model_image(g, n, m, m * k * k)?;
    let b = kx_model_image(g, n, m * k, m * k * k)?;
    let c = kx_model_image(g, n, m, m * k * k * k)?;
    Ok(a == b && b == c && a == kx_cohomology(g, n)?.invariants())
}

fn c11() -> Check {
    let fixtures = [
        ("Z/2", FiniteGroup::cyclic(2)),
        ("Z/4", FiniteGroup::cyclic(4)),
        ("Z/2^2", FiniteGroup::from_abelian(&grp(&[2, 2]))),
    ];
    let mut raw_failures = vec![];
    let mut image_failures = vec![];
    for (name, g) in &fixtures {
        for n in 1..=4 {
            if !raw_inclusion_is_iso(g, n, g.order() as i64)? {
                raw_failures.push(format!("{name}/H^{n}"));
            }
            if !stabilization_holds(g, n)? {
                image_failures.push(format!("{name}/H^{n}"));
            }
        }
    }
    ensure!(image_failures.is_empty(), "image in Q/Z grows at {}", image_failures.join(", "));
    ensure!(
        raw_failures.is_empty(),
        "inclusion map not an isomorphism at {}; image in H^n(G, Q/Z) stable for all fixtures",
        raw_failures.join(", ")
    );
    Ok("inclusion map an isomorphism for all fixtures, n = 1..4".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_has_expected_small_counts() {
        let c = metric_census(4);
        let by_order = |n: u128| c.iter().filter(|e| e.order() == n).count();
        // Z/2: q(1) = ±1/4; Z/3: two classes; Z/4: four; Z/2²: hyperbolic, D4-type, and the four semion products
        assert_eq!(by_order(1), 1);
        assert_eq!(by_order(2), 2);
        assert_eq!(by_order(3), 2);
    }

    #[test]
    fn criterion_one_runs() {
        let r = run(1, DEFAULT_SEED).unwrap();
        assert!(r.passed, "{r}");
    }
}
