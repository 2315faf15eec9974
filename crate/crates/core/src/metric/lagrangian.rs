use std::collections::{BTreeSet, HashSet};

use crate::abelian::{Elem, Subgroup};
use crate::error::{Error, Result};
use crate::metric::qz::squarefree;
use crate::metric::quadratic::MetricGroup;

pub const DEFAULT_CAP: u128 = 256;

fn same_ambient(e: &MetricGroup, l: &Subgroup) -> Result<()> {
    if l.ambient() != e.group() {
        return Err(Error::AmbientMismatch("subgroup does not live in the metric group".into()));
    }
    Ok(())
}

/// q vanishes on L. Checking q on generators and b on generator pairs is enough.
pub fn is_isotropic(e: &MetricGroup, l: &Subgroup) -> Result<bool> {
    same_ambient(e, l)?;
    let g = l.generators();
    for (i, x) in g.iter().enumerate() {
        if !e.q(x).is_zero() {
            return Ok(false);
        }
        for y in &g[i + 1..] {
            if !e.b(x, y).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_lagrangian(e: &MetricGroup, l: &Subgroup) -> Result<bool> {
    Ok(is_isotropic(e, l)? && l.order() * l.order() == e.order())
}

/// Every Lagrangian subgroup, sorted.
pub fn enumerate_lagrangians(e: &MetricGroup, cap: u128) -> Result<Vec<Subgroup>> {
    if e.order() > cap {
        return Err(Error::CapExceeded { what: "metric group order".into(), size: e.order(), cap });
    }
    let n = e.order();
    let r = (n as f64).sqrt().round() as u128;
    if r * r != n {
        return Ok(vec![]);
    }
    let g = e.group();
    let zeros: Vec<Elem> = g.elements().into_iter().filter(|x| !g.is_zero(x) && e.q(x).is_zero()).collect();
    // Grow isotropic subgroups one isotropic element at a time; every Lagrangian is reached
    // because any isotropic subgroup is a chain of such extensions from 0.
    let mut seen: HashSet<Subgroup> = HashSet::new();
    let mut layer = vec![Subgroup::trivial(g)];
    let mut out = BTreeSet::new();
    while let Some(s) = layer.pop() {
        if s.order() == r {
            out.insert(s);
            continue;
        }
        for x in &zeros {
            if s.contains(x)? || s.generators().iter().any(|y| !e.b(x, y).is_zero()) {
                continue;
            }
            let mut gens = s.generators().to_vec();
            gens.push(x.clone());
            let t = Subgroup::from_generators(g, &gens)?;
            if t.order() <= r && seen.insert(t.clone()) {
                layer.push(t);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Square class of `|L₁| / |L₁ ∩ L₂|`, as a squarefree integer.
pub fn d_distance(e: &MetricGroup, l1: &Subgroup, l2: &Subgroup) -> Result<u128> {
    for l in [l1, l2] {
        if !is_lagrangian(e, l)? {
            return Err(Error::NotLagrangian("d is only defined on Lagrangian subgroups".into()));
        }
    }
    let i = l1.intersect(l2)?;
    Ok(squarefree(l1.order() / i.order()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{all_subgroups, FinAbGroup};
    use crate::metric::qz::QZ;
    use crate::metric::quadratic::QuadraticForm;

    fn brute_lagrangians(e: &MetricGroup) -> Vec<Subgroup> {
        all_subgroups(e.group())
            .into_iter()
            .filter(|s| s.order() * s.order() == e.order() && s.elements().iter().all(|x| e.q(x).is_zero()))
            .collect()
    }

    #[test]
    fn small_examples() {
        let e = MetricGroup::hyperbolic(&FinAbGroup::cyclic(2));
        let l0 = Subgroup::from_generators(e.group(), &[vec![1, 0]]).unwrap();
        let l1 = Subgroup::from_generators(e.group(), &[vec![0, 1]]).unwrap();
        let diag = Subgroup::from_generators(e.group(), &[vec![1, 1]]).unwrap();
        assert!(is_lagrangian(&e, &l0).unwrap());
        assert!(!is_isotropic(&e, &diag).unwrap());
        let zero = Subgroup::trivial(e.group());
        assert!(is_isotropic(&e, &zero).unwrap() && !is_lagrangian(&e, &zero).unwrap());
        assert_eq!(enumerate_lagrangians(&e, DEFAULT_CAP).unwrap().len(), 2);
        assert_eq!(d_distance(&e, &l0, &l1).unwrap(), 2);
        assert_eq!(d_distance(&e, &l0, &l0).unwrap(), 1);
        assert!(d_distance(&e, &l0, &diag).is_err());

        let e3 = MetricGroup::hyperbolic(&FinAbGroup::cyclic(3));
        let ls = enumerate_lagrangians(&e3, DEFAULT_CAP).unwrap();
        assert_eq!(ls.len(), 2);
        assert_eq!(d_distance(&e3, &ls[0], &ls[1]).unwrap(), 3);

        let z2 = MetricGroup::new(QuadraticForm::new(FinAbGroup::cyclic(2), vec![QZ::new(1, 4)], &[]).unwrap()).unwrap();
        assert!(enumerate_lagrangians(&z2, DEFAULT_CAP).unwrap().is_empty());
        assert!(enumerate_lagrangians(&MetricGroup::hyperbolic(&FinAbGroup::new(vec![2; 5]).unwrap()), 256).is_err());
    }

    #[test]
    fn agrees_with_bruteforce_and_three_lagrangian_identity() {
        for inv in [vec![2], vec![3], vec![4], vec![2, 2], vec![6], vec![2, 4]] {
            let e = MetricGroup::hyperbolic(&FinAbGroup::new(inv.clone()).unwrap());
            let ls = enumerate_lagrangians(&e, DEFAULT_CAP).unwrap();
            let bf = brute_lagrangians(&e);
            assert_eq!(ls, bf, "{inv:?}");
            for a in &ls {
                for b in &ls {
                    for c in &ls {
                        let lhs = crate::metric::qz::square_class_mul(
                            d_distance(&e, a, b).unwrap(),
                            d_distance(&e, b, c).unwrap(),
                        );
                        assert_eq!(lhs, d_distance(&e, a, c).unwrap());
                        // |((a+b)∩c) / (a∩c + b∩c)| is a square
                        let top = a.sum(b).unwrap().intersect(c).unwrap();
                        let bot = a.intersect(c).unwrap().sum(&b.intersect(c).unwrap()).unwrap();
                        assert!(crate::metric::qz::is_perfect_square(top.order() / bot.order()));
                    }
                }
            }
        }
    }
}
