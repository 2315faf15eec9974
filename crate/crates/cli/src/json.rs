//! JSON documents and their conversion to library values.
//!
//! Cochains are dense arrays over `Gⁿ` in lexicographic tuple order with the first
//! entry most significant: `(g₁, …, gₙ) ↦ Σ gᵢ·|G|^(n−i)`.

use pointext_core::abelian::{Elem, FinAbGroup, Homomorphism, Subgroup};
use pointext_core::cohomology::{
    cohomology_group, kx_class_order, kx_cohomology, kx_is_trivial, Cochain, FiniteGroup, GModule, KxClass, KxCochain,
};
use pointext_core::lag::LagCorrespondence;
use pointext_core::metric::{Isometry, MetricGroup, QuadraticForm, QZ};
use pointext_core::modcat::{ModCatClass, ModCatSum};
use pointext_core::{Error, Result};
use serde::Deserialize;
use serde_json::{json, Value};

/// A `Q/Z` value: `"num/den"` or an integer.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum QzJson {
    Int(i64),
    Text(String),
}

impl QzJson {
    pub fn value(&self) -> Result<QZ> {
        match self {
            QzJson::Int(n) => Ok(QZ::new(*n, 1)),
            QzJson::Text(s) => s.parse(),
        }
    }
}

pub fn qz_out(x: QZ) -> Value {
    json!(x.to_string())
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Invariants {
    pub invariants: Vec<i64>,
}

/// `{"invariants":[…]}` or the bare list.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum GroupJson {
    List(Vec<i64>),
    Object(Invariants),
}

impl GroupJson {
    pub fn group(&self) -> Result<FinAbGroup> {
        match self {
            GroupJson::List(v) | GroupJson::Object(Invariants { invariants: v }) => FinAbGroup::new(v.clone()),
        }
    }
}

pub fn group_out(g: &FinAbGroup) -> Value {
    json!({ "invariants": g.invariants() })
}

pub type Entries = Vec<(usize, usize, QzJson)>;

pub fn entries(e: &[(usize, usize, QzJson)]) -> Result<Vec<(usize, usize, QZ)>> {
    e.iter().map(|(i, j, x)| Ok((*i, *j, x.value()?))).collect()
}

pub fn entries_out(e: &[(usize, usize, QZ)]) -> Value {
    Value::Array(e.iter().map(|(i, j, x)| json!([i, j, x.to_string()])).collect())
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormJson {
    pub invariants: Vec<i64>,
    /// `q` on the generators.
    pub q: Vec<QzJson>,
    /// `b(e_i, e_j)` for `i < j`; missing pairs are zero.
    #[serde(default)]
    pub b: Entries,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperbolicJson {
    pub hyperbolic: GroupJson,
}

/// A metric group: an explicit form, or `{"hyperbolic": A}` for `A ⊕ A*`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum MetricJson {
    Hyperbolic(HyperbolicJson),
    Form(FormJson),
}

impl FormJson {
    pub fn form(&self) -> Result<QuadraticForm> {
        let diag = self.q.iter().map(QzJson::value).collect::<Result<_>>()?;
        QuadraticForm::new(FinAbGroup::new(self.invariants.clone())?, diag, &entries(&self.b)?)
    }
}

impl MetricJson {
    pub fn metric(&self) -> Result<MetricGroup> {
        match self {
            MetricJson::Hyperbolic(h) => Ok(MetricGroup::hyperbolic(&h.hyperbolic.group()?)),
            MetricJson::Form(f) => MetricGroup::new(f.form()?),
        }
    }
}

pub fn metric_out(e: &MetricGroup) -> Value {
    let f = e.form();
    json!({
        "invariants": e.group().invariants(),
        "q": f.diag().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "b": entries_out(&f.offdiag()),
    })
}

pub fn elem(g: &FinAbGroup, x: &[i64]) -> Result<Elem> {
    g.element(x)
}

pub fn subgroup(g: &FinAbGroup, gens: &[Vec<i64>]) -> Result<Subgroup> {
    let gens: Vec<Elem> = gens.iter().map(|x| elem(g, x)).collect::<Result<_>>()?;
    Subgroup::from_generators(g, &gens)
}

pub fn subgroup_out(s: &Subgroup) -> Value {
    json!(s.generators())
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub mult: u128,
    pub gens: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorrJson {
    pub source: MetricJson,
    pub target: MetricJson,
    pub terms: Vec<TermJson>,
}

impl CorrJson {
    pub fn corr(&self) -> Result<LagCorrespondence> {
        let (s, t) = (self.source.metric()?, self.target.metric()?);
        let space = MetricGroup::corr_space(&s, &t);
        let terms = self
            .terms
            .iter()
            .map(|x| Ok((x.mult, subgroup(space.group(), &x.gens)?)))
            .collect::<Result<_>>()?;
        LagCorrespondence::new(s, t, terms)
    }
}

pub fn corr_out(k: &LagCorrespondence) -> Value {
    json!({
        "source": metric_out(k.source()),
        "target": metric_out(k.target()),
        "terms": k.terms().iter().map(|(m, l)| json!({"mult": m, "gens": subgroup_out(l)})).collect::<Vec<_>>(),
    })
}

/// An isometry given by the images of the source generators.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsometryJson {
    pub source: MetricJson,
    /// Defaults to the source.
    #[serde(default)]
    pub target: Option<MetricJson>,
    pub images: Vec<Vec<i64>>,
}

impl IsometryJson {
    pub fn isometry(&self) -> Result<Isometry> {
        let s = self.source.metric()?;
        let t = match &self.target {
            Some(t) => t.metric()?,
            None => s.clone(),
        };
        let imgs: Vec<Elem> = self.images.iter().map(|x| elem(t.group(), x)).collect::<Result<_>>()?;
        let f = Homomorphism::from_images(s.group().clone(), t.group().clone(), &imgs)?;
        Isometry::new(s, t, f)
    }
}

pub fn images_out(g: &Isometry) -> Value {
    json!((0..g.source().group().rank()).map(|j| g.map().image_of_generator(j)).collect::<Vec<_>>())
}

pub fn isometry_out(g: &Isometry) -> Value {
    json!({ "source": metric_out(g.source()), "target": metric_out(g.target()), "images": images_out(g) })
}

/// `{"base": A, "H": gens, "psi": [[s, t, "num/den"], …]}`; `psi` indexes the canonical
/// generators of `H` (as printed by this tool).
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassJson {
    pub base: GroupJson,
    #[serde(rename = "H")]
    pub h: Vec<Vec<i64>>,
    #[serde(default)]
    pub psi: Entries,
}

impl ClassJson {
    pub fn class(&self) -> Result<ModCatClass> {
        let a = self.base.group()?;
        let h = subgroup(&a, &self.h)?;
        ModCatClass::from_upper(a, h, &entries(&self.psi)?)
    }
}

pub fn class_out(c: &ModCatClass) -> Value {
    json!({ "base": group_out(c.base()), "H": subgroup_out(c.h()), "psi": entries_out(&c.psi_upper()) })
}

pub fn sum_out(s: &ModCatSum) -> Value {
    Value::Array(s.terms().iter().map(|(m, c)| json!({"mult": m, "class": class_out(c)})).collect())
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CyclicJson {
    pub cyclic: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AbelianJson {
    pub abelian: Vec<i64>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedJson {
    /// `S3`, `Q8`, or `D<m>` for the dihedral group of order `2m`.
    pub named: String,
}

/// A finite group: a multiplication table, or one of the built-in families.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum FiniteGroupJson {
    Table(TableJson),
    Cyclic(CyclicJson),
    Abelian(AbelianJson),
    Named(NamedJson),
}

impl FiniteGroupJson {
    pub fn group(&self) -> Result<FiniteGroup> {
        match self {
            FiniteGroupJson::Table(t) => {
                if t.table.len() != t.order {
                    return Err(Error::InvalidData(format!("table has {} rows, order is {}", t.table.len(), t.order)));
                }
                FiniteGroup::from_table(t.table.clone())
            }
            FiniteGroupJson::Cyclic(c) if c.cyclic > 0 => Ok(FiniteGroup::cyclic(c.cyclic)),
            FiniteGroupJson::Cyclic(_) => Err(Error::InvalidData("cyclic order must be positive".into())),
            FiniteGroupJson::Abelian(a) => Ok(FiniteGroup::from_abelian(&FinAbGroup::new(a.abelian.clone())?)),
            FiniteGroupJson::Named(n) => match n.named.as_str() {
                "S3" => Ok(FiniteGroup::symmetric3()),
                "Q8" => Ok(FiniteGroup::quaternion()),
                s => match s.strip_prefix('D').and_then(|m| m.parse::<usize>().ok()) {
                    Some(m) if m >= 1 => Ok(FiniteGroup::dihedral(m)),
                    _ => Err(Error::InvalidData(format!("unknown group name {s:?}"))),
                },
            },
        }
    }
}

/// Action matrices per group element (row `i` is output coordinate `i`); trivial when absent.
pub fn module(g: &FiniteGroup, a: &FinAbGroup, action: &Option<Vec<Vec<Vec<i64>>>>) -> Result<GModule> {
    match action {
        None => Ok(GModule::trivial(g, a)),
        Some(act) => GModule::new(g.clone(), a.clone(), act.clone()),
    }
}

/// `{"values": […]}` dense, or `{"coords": […]}` in the printed cohomology basis.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainJson {
    #[serde(default)]
    pub values: Option<Vec<Value>>,
    #[serde(default)]
    pub coords: Option<Vec<i64>>,
}

fn one_of<'a, T>(values: &'a Option<T>, coords: &'a Option<Vec<i64>>) -> Result<std::result::Result<&'a T, &'a [i64]>> {
    match (values, coords) {
        (Some(v), None) => Ok(Ok(v)),
        (None, Some(c)) => Ok(Err(c)),
        _ => Err(Error::InvalidData("give exactly one of \"values\" and \"coords\"".into())),
    }
}

impl CochainJson {
    /// Values in a module: integer arrays, or bare integers for cyclic modules.
    pub fn cochain(&self, m: &GModule, n: usize) -> Result<Cochain> {
        match one_of(&self.values, &self.coords)? {
            Ok(vals) => {
                let vals: Vec<Elem> = vals
                    .iter()
                    .map(|v| match v {
                        Value::Number(_) => serde_json::from_value::<i64>(v.clone()).map(|x| vec![x]),
                        _ => serde_json::from_value::<Vec<i64>>(v.clone()),
                    })
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|e| Error::InvalidData(format!("cochain value: {e}")))?;
                Cochain::from_values(m, n, &vals)
            }
            Err(c) => cohomology_group(m, n)?.cocycle(c),
        }
    }

    /// Values in `k×`, as `Q/Z` strings.
    pub fn kx(&self, g: &FiniteGroup, n: usize) -> Result<KxCochain> {
        match one_of(&self.values, &self.coords)? {
            Ok(vals) => {
                let vals: Vec<QZ> = vals
                    .iter()
                    .map(|v| {
                        serde_json::from_value::<QzJson>(v.clone())
                            .map_err(|e| Error::InvalidData(format!("cochain value: {e}")))?
                            .value()
                    })
                    .collect::<Result<_>>()?;
                KxCochain::from_qz(g, n, &vals)
            }
            Err(c) => kx_cohomology(g, n)?.cocycle(c),
        }
    }
}

pub fn cochain_out(c: &Cochain) -> Value {
    json!(c.values())
}

pub fn kx_cochain_out(c: &KxCochain) -> Value {
    Value::Array(c.values().into_iter().map(qz_out).collect())
}

/// A class in `Hⁿ(G, k×)`. When the cohomology group is over the size budget the
/// coordinates are `null` and only the order and triviality are reported.
pub fn kx_class_out(g: &FiniteGroup, c: &KxCochain) -> Result<Value> {
    match KxClass::new(g, c) {
        Ok(k) => Ok(json!({
            "degree": k.degree(),
            "invariants": k.invariants(),
            "coords": k.coords(),
            "order": k.order(),
            "trivial": k.is_trivial(),
        })),
        Err(Error::BudgetExceeded(_)) => Ok(json!({
            "degree": c.degree(),
            "invariants": null,
            "coords": null,
            "order": kx_class_order(g, c)?,
            "trivial": kx_is_trivial(g, c)?,
        })),
        Err(e) => Err(e),
    }
}
