use pointext_core::abelian::all_subgroups;
use pointext_core::cohomology::{
    cohomology_group, cup_product, kx_class_order, kx_cohomology, restriction_map, CohClass, Embedding, FiniteGroup,
    GModule, Pairing,
};
use pointext_core::lag::{compose, corr_to_isometry, graph_of_isometry};
use pointext_core::metric::{det_square_class, enumerate_lagrangians, is_special, orthogonal_group, MetricGroup};
use pointext_core::modcat::{
    bimodcat_tensor, brpic_group, fpdim_squared, is_integral_brpic, modcat_tensor, sigma, simple_count, t_functor,
    t_functor_sum, tau, ModCatSum,
};
use pointext_core::obstructions::{
    bicharacter_from_entries, lhs_d2, omega_extends, obstruction_spaces, pointed_o4_cochain, pw_cochain,
    tambara_yamagami, ExtensionProblem, LhsData,
};
use pointext_core::{selftest, Error, Result};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::json::*;

pub struct Opts {
    pub cap: u128,
    pub modulus: Option<i64>,
    pub seed: u64,
}

/// A report, and whether the requested object failed to exist.
pub struct Outcome {
    pub report: Value,
    pub infeasible: bool,
}

impl From<Value> for Outcome {
    fn from(report: Value) -> Self {
        Outcome { report, infeasible: false }
    }
}

pub enum VerbError {
    Json(serde_json::Error),
    Core(Error),
}

impl From<Error> for VerbError {
    fn from(e: Error) -> Self {
        VerbError::Core(e)
    }
}

fn parse<T: DeserializeOwned>(v: Value) -> std::result::Result<T, VerbError> {
    serde_json::from_value(v).map_err(VerbError::Json)
}

type Out = std::result::Result<Outcome, VerbError>;

pub const VERBS: [&str; 20] = [
    "group-info",
    "lagrangians",
    "orth-group",
    "lag-compose",
    "modcat-tensor",
    "bimod-tensor",
    "tau",
    "t-functor",
    "brpic",
    "simple-count",
    "cohomology",
    "cup",
    "restrict",
    "obstruction-spaces",
    "pw",
    "pointed-o4",
    "ty-classify",
    "omega-extends",
    "lhs-d2",
    "selftest",
];

pub fn run(verb: &str, input: Value, o: &Opts) -> Out {
    match verb {
        "group-info" => group_info(parse(input)?, o),
        "lagrangians" => lagrangians(parse(input)?, o),
        "orth-group" => orth_group(parse(input)?, o),
        "lag-compose" => lag_compose(parse(input)?),
        "modcat-tensor" => modcat_tensor_verb(parse(input)?),
        "bimod-tensor" => bimod_tensor(parse(input)?),
        "tau" => tau_verb(parse(input)?),
        "t-functor" => t_functor_verb(parse(input)?),
        "brpic" => brpic(parse(input)?, o),
        "simple-count" => simple_count_verb(parse(input)?),
        "cohomology" => cohomology(parse(input)?, o),
        "cup" => cup(parse(input)?),
        "restrict" => restrict(parse(input)?, o),
        "obstruction-spaces" => obstruction_spaces_verb(parse(input)?),
        "pw" => pw(parse(input)?),
        "pointed-o4" => pointed_o4_verb(parse(input)?),
        "ty-classify" => ty_classify(parse(input)?),
        "omega-extends" => omega_extends_verb(parse(input)?),
        "lhs-d2" => lhs_d2_verb(parse(input)?),
        "selftest" => selftest_verb(parse(input)?, o),
        _ => Err(Error::InvalidData(format!("unknown verb {verb:?}")).into()),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupInfo {
    group: GroupJson,
}

fn group_info(i: GroupInfo, o: &Opts) -> Out {
    let g = i.group.group()?;
    let subgroups = if g.order() <= o.cap { json!(all_subgroups(&g).len()) } else { Value::Null };
    Ok(json!({
        "invariants": g.invariants(),
        "canonical": g.canonical().invariants(),
        "order": g.order(),
        "exponent": g.exponent(),
        "dual": group_out(&g.dual()),
        "subgroup_count": subgroups,
    })
    .into())
}

fn lagrangians(e: MetricJson, o: &Opts) -> Out {
    let e = e.metric()?;
    let ls = enumerate_lagrangians(&e, o.cap)?;
    Ok(json!({ "metric": metric_out(&e), "lagrangians": ls.iter().map(subgroup_out).collect::<Vec<_>>() }).into())
}

fn orth_group(e: MetricJson, o: &Opts) -> Out {
    let e = e.metric()?;
    let os = orthogonal_group(&e, o.cap)?;
    let elems = os
        .iter()
        .map(|g| Ok(json!({ "images": images_out(g), "det": det_square_class(g)?, "special": is_special(g)? })))
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({ "metric": metric_out(&e), "order": os.len(), "isometries": elems }).into())
}

/// `{"M": corr, "L": corr}` composes `M∘L`; `{"graph": isometry}` and
/// `{"isometry": corr}` convert between isometries and invertible correspondences.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LagCompose {
    #[serde(rename = "M", default)]
    m: Option<CorrJson>,
    #[serde(rename = "L", default)]
    l: Option<CorrJson>,
    #[serde(default)]
    graph: Option<IsometryJson>,
    #[serde(default)]
    isometry: Option<CorrJson>,
}

fn lag_compose(i: LagCompose) -> Out {
    match i {
        LagCompose { m: Some(m), l: Some(l), graph: None, isometry: None } => {
            Ok(corr_out(&compose(&m.corr()?, &l.corr()?)?).into())
        }
        LagCompose { m: None, l: None, graph: Some(g), isometry: None } => {
            Ok(corr_out(&graph_of_isometry(&g.isometry()?)).into())
        }
        LagCompose { m: None, l: None, graph: None, isometry: Some(k) } => match corr_to_isometry(&k.corr()?) {
            Ok(g) => Ok(isometry_out(&g).into()),
            Err(Error::NotInvertible(why)) => {
                Ok(Outcome { report: json!({ "invertible": false, "reason": why }), infeasible: true })
            }
            Err(e) => Err(e.into()),
        },
        _ => Err(Error::InvalidData("give either M and L, or graph, or isometry".into()).into()),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModcatTensor {
    #[serde(rename = "M1")]
    m1: ClassJson,
    #[serde(rename = "M2")]
    m2: ClassJson,
}

fn modcat_tensor_verb(i: ModcatTensor) -> Out {
    Ok(json!({ "sum": sum_out(&modcat_tensor(&i.m1.class()?, &i.m2.class()?)?) }).into())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BimodTensor {
    #[serde(rename = "A1")]
    a1: GroupJson,
    #[serde(rename = "A2")]
    a2: GroupJson,
    #[serde(rename = "A3")]
    a3: GroupJson,
    /// Over `A₁ ⊕ A₂`.
    #[serde(rename = "M")]
    m: ClassJson,
    /// Over `A₂ ⊕ A₃`.
    #[serde(rename = "M_prime")]
    mp: ClassJson,
}

fn bimod_tensor(i: BimodTensor) -> Out {
    let s = bimodcat_tensor(&i.a1.group()?, &i.a2.group()?, &i.a3.group()?, &i.m.class()?, &i.mp.class()?)?;
    Ok(json!({ "sum": sum_out(&s) }).into())
}

/// `{"class": C}` gives `τ(C)`; `{"A": A, "lagrangian": gens}` gives `σ(L)`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Tau {
    #[serde(default)]
    class: Option<ClassJson>,
    #[serde(rename = "A", default)]
    a: Option<GroupJson>,
    #[serde(default)]
    lagrangian: Option<Vec<Vec<i64>>>,
}

fn tau_verb(i: Tau) -> Out {
    match i {
        Tau { class: Some(c), a: None, lagrangian: None } => {
            let c = c.class()?;
            Ok(json!({ "A": group_out(c.base()), "lagrangian": subgroup_out(&tau(&c)?) }).into())
        }
        Tau { class: None, a: Some(a), lagrangian: Some(l) } => {
            let a = a.group()?;
            let l = subgroup(MetricGroup::hyperbolic(&a).group(), &l)?;
            Ok(json!({ "class": class_out(&sigma(&a, &l)?) }).into())
        }
        _ => Err(Error::InvalidData("give either class, or A and lagrangian".into()).into()),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SumTerm {
    mult: u128,
    class: ClassJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TFunctor {
    #[serde(rename = "A1")]
    a1: GroupJson,
    #[serde(rename = "A2")]
    a2: GroupJson,
    #[serde(default)]
    class: Option<ClassJson>,
    #[serde(default)]
    sum: Option<Vec<SumTerm>>,
}

fn t_functor_verb(i: TFunctor) -> Out {
    let (a1, a2) = (i.a1.group()?, i.a2.group()?);
    let k = match (i.class, i.sum) {
        (Some(c), None) => t_functor(&a1, &a2, &c.class()?)?,
        (None, Some(s)) => {
            let terms = s.iter().map(|t| Ok((t.mult, t.class.class()?))).collect::<Result<_>>()?;
            t_functor_sum(&a1, &a2, &ModCatSum::new(terms))?
        }
        _ => return Err(Error::InvalidData("give either class or sum".into()).into()),
    };
    Ok(corr_out(&k).into())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct OnA {
    #[serde(rename = "A")]
    a: GroupJson,
}

fn brpic(i: OnA, o: &Opts) -> Out {
    let a = i.a.group()?;
    let bp = brpic_group(&a, o.cap)?;
    let elems = bp
        .isometries
        .iter()
        .zip(&bp.classes)
        .map(|(g, c)| {
            Ok(json!({
                "images": images_out(g),
                "class": class_out(c),
                "simple_count": simple_count(&a, g)?,
                "integral": is_integral_brpic(&a, g)?,
                "special": is_special(g)?,
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({ "A": group_out(&a), "order": bp.isometries.len(), "elements": elems, "table": bp.tensor }).into())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SimpleCount {
    #[serde(rename = "A")]
    a: GroupJson,
    /// Images of the generators of `A ⊕ A*`.
    images: Vec<Vec<i64>>,
}

fn simple_count_verb(i: SimpleCount) -> Out {
    let a = i.a.group()?;
    let g = IsometryJson {
        source: MetricJson::Hyperbolic(HyperbolicJson { hyperbolic: GroupJson::List(a.invariants().to_vec()) }),
        target: None,
        images: i.images,
    }
    .isometry()?;
    Ok(json!({
        "simple_count": simple_count(&a, &g)?,
        "fpdim_squared": fpdim_squared(&a, &g)?,
        "integral": is_integral_brpic(&a, &g)?,
        "special": is_special(&g)?,
    })
    .into())
}

/// `M` absent means `(1/m)Z/Z` with `m` from `--modulus`, or `k×` with `"kx": true`.
impl Cohomology {
    fn module(&self, modulus: Option<i64>) -> Result<GModule> {
        let g = self.g.group()?;
        match (&self.m, modulus) {
            (Some(m), _) => module(&g, &m.group()?, &self.action),
            (None, Some(n)) if self.action.is_none() => GModule::qz_coefficients(&g, n),
            _ => Err(Error::InvalidData("the module needs M, or --modulus for (1/m)Z/Z".into())),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Cohomology {
    #[serde(rename = "G")]
    g: FiniteGroupJson,
    #[serde(rename = "M", default)]
    m: Option<GroupJson>,
    #[serde(default)]
    action: Option<Vec<Vec<Vec<i64>>>>,
    degree: usize,
    #[serde(default)]
    kx: bool,
}

fn cohomology(i: Cohomology, o: &Opts) -> Out {
    if i.kx {
        let g = i.g.group()?;
        let h = kx_cohomology(&g, i.degree)?;
        return Ok(json!({
            "coefficients": "kx",
            "degree": i.degree,
            "invariants": h.invariants(),
            "order": h.order(),
            "basis": h.basis().iter().map(kx_cochain_out).collect::<Vec<_>>(),
        })
        .into());
    }
    let m = i.module(o.modulus)?;
    let h = cohomology_group(&m, i.degree)?;
    Ok(json!({
        "module": group_out(m.module()),
        "degree": i.degree,
        "invariants": h.invariants(),
        "order": h.order(),
        "basis": h.basis().iter().map(cochain_out).collect::<Vec<_>>(),
    })
    .into())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Cup {
    #[serde(rename = "G")]
    g: FiniteGroupJson,
    left: GroupJson,
    right: GroupJson,
    #[serde(default)]
    left_action: Option<Vec<Vec<Vec<i64>>>>,
    #[serde(default)]
    right_action: Option<Vec<Vec<Vec<i64>>>>,
    /// Pairing values on generators, `left rank × right rank`.
    pairing: Vec<Vec<QzJson>>,
    alpha: CochainJson,
    alpha_degree: usize,
    beta: CochainJson,
    beta_degree: usize,
}

fn cup(i: Cup) -> Out {
    let g = i.g.group()?;
    let ml = module(&g, &i.left.group()?, &i.left_action)?;
    let mr = module(&g, &i.right.group()?, &i.right_action)?;
    let vals = i.pairing.iter().map(|r| r.iter().map(QzJson::value).collect::<Result<_>>()).collect::<Result<_>>()?;
    let p = Pairing::new(ml.clone(), mr.clone(), vals)?;
    let c = cup_product(&p, &i.alpha.cochain(&ml, i.alpha_degree)?, &i.beta.cochain(&mr, i.beta_degree)?)?;
    Ok(json!({ "values": kx_cochain_out(&c), "class": kx_class_out(&g, &c)? }).into())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Restrict {
    #[serde(rename = "G")]
    g: FiniteGroupJson,
    /// Elements of the subgroup, listed in the order that indexes it.
    #[serde(rename = "N")]
    n: Vec<usize>,
    degree: usize,
    /// `Hⁿ(G, M)` when given, `Hⁿ(G, k×)` otherwise.
    #[serde(rename = "M", default)]
    m: Option<GroupJson>,
    #[serde(default)]
    action: Option<Vec<Vec<Vec<i64>>>>,
    cocycle: CochainJson,
}

fn restrict(i: Restrict, o: &Opts) -> Out {
    let g = i.g.group()?;
    let emb = Embedding::from_elements(&g, &i.n)?;
    let m = match (&i.m, o.modulus) {
        (Some(a), _) => Some(module(&g, &a.group()?, &i.action)?),
        (None, Some(n)) => Some(GModule::qz_coefficients(&g, n)?),
        (None, None) => None,
    };
    match m {
        Some(m) => {
            let c = CohClass::new(&m, &i.cocycle.cochain(&m, i.degree)?)?;
            let r = restriction_map(&emb, &m, &c)?;
            Ok(json!({
                "invariants": r.invariants(),
                "coords": r.coords(),
                "values": cochain_out(r.representative()),
            })
            .into())
        }
        None => {
            let r = i.cocycle.kx(&g, i.degree)?.restrict(&emb);
            Ok(json!({ "values": kx_cochain_out(&r), "class": kx_class_out(&emb.sub, &r)? }).into())
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Obstruction {
    #[serde(rename = "G")]
    g: FiniteGroupJson,
    #[serde(rename = "A")]
    a: GroupJson,
    /// Per element of `G`, the images of the generators of `A ⊕ A*`; trivial when absent.
    #[serde(default)]
    action: Option<Vec<Vec<Vec<i64>>>>,
}

fn report_out(r: &pointext_core::obstructions::ObstructionReport) -> Value {
    json!({
        "o3_group": r.o3_group,
        "o3_class": null,
        "torsor_rank_M": r.torsor_rank_m,
        "o4_group": r.o4_group,
        "torsor_rank_alpha": r.torsor_rank_alpha,
        "modulus": r.modulus,
        "unobstructed": r.unobstructed(),
        "extension_count": r.extension_count(),
    })
}

fn obstruction_spaces_verb(i: Obstruction) -> Out {
    let g = i.g.group()?;
    let a = i.a.group()?;
    let p = match i.action {
        None => ExtensionProblem::trivial_action(&g, &a),
        Some(act) => {
            let hyp = MetricJson::Hyperbolic(HyperbolicJson { hyperbolic: GroupJson::List(a.invariants().to_vec()) });
            let isos = act
                .into_iter()
                .map(|images| IsometryJson { source: hyp.clone(), target: None, images }.isometry())
                .collect::<Result<_>>()?;
            ExtensionProblem::new(g, a.clone(), isos)?
        }
    };
    let r = obstruction_spaces(&p)?;
    let infeasible = !r.unobstructed();
    Ok(Outcome { report: json!({ "A": group_out(&a), "report": report_out(&r) }), infeasible })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Pw {
    #[serde(rename = "G")]
    g: FiniteGroupJson,
    #[serde(rename = "A")]
    a: GroupJson,
    q: Vec<QzJson>,
    #[serde(default)]
    b: Entries,
    #[serde(default)]
    action: Option<Vec<Vec<Vec<i64>>>>,
    #[serde(rename = "L")]
    l: CochainJson,
    #[serde(default)]
    theta: Option<CochainJson>,
}

fn divides_d4(g: &FiniteGroup, c: &pointext_core::cohomology::KxCochain, d: u128) -> Result<bool> {
    Ok(d.pow(4) % kx_class_order(g, c)? as u128 == 0)
}

fn pw(i: Pw) -> Out {
    let g = i.g.group()?;
    let a = i.a.group()?;
    let form = FormJson { invariants: a.invariants().to_vec(), q: i.q, b: i.b }.form()?;
    let m = module(&g, &a, &i.action)?;
    let l = i.l.cochain(&m, 2)?;
    let theta = i.theta.as_ref().map(|t| t.cochain(&m.dual(), 2)).transpose()?;
    let nu = pw_cochain(&m, &form, &l, theta.as_ref())?;
    Ok(json!({ "class": kx_class_out(&g, &nu)?, "divides_D4": divides_d4(&g, &nu, a.order())? }).into())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PointedO4 {
    #[serde(rename = "G")]
    g: FiniteGroupJson,
    #[serde(rename = "H")]
    h: GroupJson,
    #[serde(default)]
    action: Option<Vec<Vec<Vec<i64>>>>,
    #[serde(rename = "M1")]
    m1: CochainJson,
    /// Values in `H*` (same invariants as `H`, contragredient action).
    #[serde(rename = "M2")]
    m2: CochainJson,
}

fn pointed_o4_verb(i: PointedO4) -> Out {
    let g = i.g.group()?;
    let h = i.h.group()?;
    let m = module(&g, &h, &i.action)?;
    let nu = pointed_o4_cochain(&m, &i.m1.cochain(&m, 2)?, &i.m2.cochain(&m.dual(), 2)?)?;
    let class = kx_class_out(&g, &nu)?;
    let infeasible = class["trivial"] == json!(false);
    Ok(Outcome { report: json!({ "class": class, "divides_D4": divides_d4(&g, &nu, h.order())? }), infeasible })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Ty {
    #[serde(rename = "A")]
    a: GroupJson,
    chi: Entries,
}

fn ty_classify(i: Ty) -> Out {
    let a = i.a.group()?;
    let chi = bicharacter_from_entries(&a, &entries(&i.chi)?)?;
    match tambara_yamagami(&a, &chi) {
        Ok(r) => Ok(Outcome {
            report: json!({
                "valid": r.valid,
                "count": r.count,
                "h2_vanishes": r.h2_vanishes,
                "h3_vanishes": r.h3_vanishes,
                "bimodule": class_out(&r.bimodule),
                "bimodule_order": r.bimodule_order,
                "simple_count": r.simple_count,
                "swap": images_out(&r.isometry),
                "report": report_out(&r.report),
            }),
            infeasible: !(r.valid && r.report.unobstructed()),
        }),
        Err(Error::InvalidData(why)) => {
            Ok(Outcome { report: json!({ "valid": false, "reason": why, "count": 0 }), infeasible: true })
        }
        Err(e) => Err(e.into()),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct OmegaExtends {
    #[serde(rename = "G")]
    g: FiniteGroupJson,
    #[serde(rename = "N")]
    n: Vec<usize>,
    /// A 3-cocycle on `N`, indexed by positions in `N`.
    omega: CochainJson,
}

fn omega_extends_verb(i: OmegaExtends) -> Out {
    let g = i.g.group()?;
    let emb = Embedding::from_elements(&g, &i.n)?;
    let r = omega_extends(&emb, &i.omega.kx(&emb.sub, 3)?)?;
    Ok(Outcome {
        report: json!({
            "extendable": r.extendable,
            "class_count": r.class_count,
            "kernel_order": r.kernel_order,
            "extension": r.extension.as_ref().map(kx_cochain_out),
        }),
        infeasible: !r.extendable,
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LhsD2 {
    #[serde(rename = "N")]
    n: FiniteGroupJson,
    #[serde(rename = "G")]
    g: FiniteGroupJson,
    /// `phi[g]` is the automorphism of `N` lifting `g`, as an element permutation.
    phi: Vec<Vec<usize>>,
    /// `n[g][h] ∈ N` with `φ(g)φ(h) = c_{n(g,h)} φ(gh)`; identity when absent.
    #[serde(default)]
    n_map: Option<Vec<Vec<usize>>>,
    omega: CochainJson,
}

fn lhs_d2_verb(i: LhsD2) -> Out {
    let (n, g) = (i.n.group()?, i.g.group()?);
    let data = match i.n_map {
        Some(nm) => LhsData::new(n.clone(), g, i.phi, nm)?,
        None => LhsData::split(n.clone(), g, i.phi)?,
    };
    let omega = i.omega.kx(&n, 3)?;
    match lhs_d2(&data, &omega) {
        Ok(r) => {
            let u = r
                .u
                .iter()
                .map(|row| row.iter().map(|c| json!({"coords": c.coords(), "trivial": c.is_trivial()})).collect())
                .collect::<Vec<Vec<Value>>>();
            Ok(Outcome {
                report: json!({
                    "invariants": r.u.first().and_then(|row| row.first()).map(|c| c.invariants().to_vec()),
                    "u": u,
                    "all_trivial": r.all_trivial,
                    "class_cocycle": r.class_cocycle,
                    "vanishes": r.vanishes,
                }),
                infeasible: !r.vanishes,
            })
        }
        Err(Error::NotInvariant(why)) => {
            Ok(Outcome { report: json!({ "invariant": false, "reason": why }), infeasible: true })
        }
        Err(e) => Err(e.into()),
    }
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct Selftest {
    #[serde(default)]
    criteria: Option<Vec<u8>>,
}

fn selftest_verb(i: Option<Selftest>, o: &Opts) -> Out {
    let ids: Vec<u8> = match i.unwrap_or_default().criteria {
        Some(ids) => ids,
        None => selftest::CRITERIA.iter().map(|c| c.0).collect(),
    };
    let mut rows = vec![];
    let mut all = true;
    for id in ids {
        let r = selftest::run(id, o.seed).ok_or_else(|| Error::InvalidData(format!("no criterion {id}")))?;
        eprintln!("{r}");
        all &= r.passed;
        rows.push(json!({
            "id": r.id,
            "title": r.title,
            "passed": r.passed,
            "detail": r.detail,
            "seconds": r.elapsed.as_secs_f64(),
            "limit_seconds": r.limit.map(|l| l.as_secs()),
        }));
    }
    Ok(Outcome { report: json!({ "seed": o.seed, "passed": all, "criteria": rows }), infeasible: !all })
}
