use crate::cohomology::{cup_product, Cochain, GModule, KxClass, KxCochain, Pairing};
use crate::error::{Error, Result};
use crate::metric::{QuadraticForm, QZ};

fn bq_values(m: &GModule, q: &QuadraticForm, scale: i64) -> Result<Vec<Vec<QZ>>> {
    if q.group() != m.module() {
        return Err(Error::ObjectMismatch("quadratic form and module live on different groups".into()));
    }
    let k = m.rank();
    let a = m.module();
    Ok((0..k).map(|i| (0..k).map(|j| q.polar(&a.basis(i), &a.basis(j)).mul_int(scale)).collect()).collect())
}

/// `c(a, b) = 2⁻¹·b_q(a, b)`, the canonical braiding of `Vec_A` for odd `|A|`.
pub fn canonical_braiding(m: &GModule, q: &QuadraticForm) -> Result<Pairing> {
    let e = m.exponent();
    if e % 2 == 0 {
        return Err(Error::UnsupportedOddOnly(format!("|A| is even (exponent {e})")));
    }
    let half = (e + 1) / 2;
    Pairing::new(m.clone(), m.clone(), bq_values(m, q, half)?)
        .map_err(|_| Error::InvalidData("the action does not preserve q".into()))
}

/// Cup product of `l1 ∈ Z²(G, A)` and `l2 ∈ Z²(G, A)` through `b_q`.
pub fn bq_cup(m: &GModule, q: &QuadraticForm, l1: &Cochain, l2: &Cochain) -> Result<KxCochain> {
    let p = Pairing::new(m.clone(), m.clone(), bq_values(m, q, 1)?)
        .map_err(|_| Error::InvalidData("the action does not preserve q".into()))?;
    cup_product(&p, l1, l2)
}

/// `ν(f,g,h,k) = c(L(f,g), fg·L(h,k))`, shifted by `⟨L ∪ θ⟩` when `θ ∈ Z²(G, A*)` is given.
pub fn pw_cochain(m: &GModule, q: &QuadraticForm, l: &Cochain, theta: Option<&Cochain>) -> Result<KxCochain> {
    if l.degree() != 2 {
        return Err(Error::InvalidData("L must be a 2-cochain".into()));
    }
    let c = canonical_braiding(m, q)?;
    let mut nu = cup_product(&c, l, l)?;
    if let Some(t) = theta {
        if t.degree() != 2 {
            return Err(Error::InvalidData("θ must be a 2-cochain".into()));
        }
        nu = nu.add(&cup_product(&Pairing::evaluation(m), l, t)?);
    }
    Ok(nu)
}

pub fn pw_canonical(m: &GModule, q: &QuadraticForm, l: &Cochain, theta: Option<&Cochain>) -> Result<KxClass> {
    KxClass::new(m.group(), &pw_cochain(m, q, l, theta)?)
}

/// `O₄(c, M₁, M₂)` as a cochain: the cup product of `M₁ ∈ Z²(G, H)` and `M₂ ∈ Z²(G, H*)` under evaluation.
pub fn pointed_o4_cochain(m: &GModule, m1: &Cochain, m2: &Cochain) -> Result<KxCochain> {
    if m1.degree() != 2 || m2.degree() != 2 {
        return Err(Error::InvalidData("M₁ and M₂ must be 2-cochains".into()));
    }
    cup_product(&Pairing::evaluation(m), m1, m2)
}

pub fn pointed_o4(m: &GModule, m1: &Cochain, m2: &Cochain) -> Result<KxClass> {
    KxClass::new(m.group(), &pointed_o4_cochain(m, m1, m2)?)
}
