use crate::abelian::{Elem, FinAbGroup, Homomorphism, Subgroup};
use crate::error::{Error, Result};
use crate::metric::qz::QZ;

/// Biadditive map `E × E → Q/Z` given on generator pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bicharacter {
    group: FinAbGroup,
    values: Vec<Vec<QZ>>,
}

impl Bicharacter {
    pub fn new(group: FinAbGroup, values: Vec<Vec<QZ>>) -> Result<Self> {
        let k = group.rank();
        if values.len() != k || values.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidData("bicharacter table has the wrong shape".into()));
        }
        let n = group.invariants();
        for i in 0..k {
            for j in 0..k {
                let v = values[i][j];
                if !v.mul_int(n[i]).is_zero() || !v.mul_int(n[j]).is_zero() {
                    return Err(Error::InvalidData(format!(
                        "value {v} on generators ({i},{j}) is not killed by the generator orders"
                    )));
                }
            }
        }
        Ok(Bicharacter { group, values })
    }

    pub fn zero(group: &FinAbGroup) -> Self {
        let k = group.rank();
        Bicharacter { group: group.clone(), values: vec![vec![QZ::ZERO; k]; k] }
    }

    pub fn from_fn(group: &FinAbGroup, f: impl Fn(usize, usize) -> QZ) -> Result<Self> {
        let k = group.rank();
        Self::new(group.clone(), (0..k).map(|i| (0..k).map(|j| f(i, j)).collect()).collect())
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn values(&self) -> &[Vec<QZ>] {
        &self.values
    }

    pub fn eval(&self, x: &[i64], y: &[i64]) -> QZ {
        let mut acc = QZ::ZERO;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj != 0 {
                    acc = acc.add(self.values[i][j].mul_int(xi * yj));
                }
            }
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        let k = self.group.rank();
        (0..k).all(|i| (0..k).all(|j| self.values[i][j] == self.values[j][i]))
    }

    /// `b(x,x) = 0` for all `x` (diagonal zero and skew off the diagonal).
    pub fn is_alternating(&self) -> bool {
        let k = self.group.rank();
        (0..k).all(|i| self.values[i][i].is_zero() && (0..k).all(|j| self.values[i][j] == self.values[j][i].neg()))
    }

    pub fn neg(&self) -> Bicharacter {
        Bicharacter {
            group: self.group.clone(),
            values: self.values.iter().map(|r| r.iter().map(|v| v.neg()).collect()).collect(),
        }
    }

    pub fn transpose(&self) -> Bicharacter {
        let k = self.group.rank();
        Bicharacter {
            group: self.group.clone(),
            values: (0..k).map(|i| (0..k).map(|j| self.values[j][i]).collect()).collect(),
        }
    }

    /// Block sum on `E ⊕ F`.
    pub fn direct_sum(&self, other: &Bicharacter) -> Bicharacter {
        let a = self.group.rank();
        let g = self.group.direct_sum(&other.group);
        let k = g.rank();
        let values = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| match (i < a, j < a) {
                        (true, true) => self.values[i][j],
                        (false, false) => other.values[i - a][j - a],
                        _ => QZ::ZERO,
                    })
                    .collect()
            })
            .collect();
        Bicharacter { group: g, values }
    }

    /// `(x, y) ↦ b(f x, f y)` on the domain of `f`.
    pub fn pullback(&self, f: &Homomorphism) -> Result<Bicharacter> {
        if f.codomain() != &self.group {
            return Err(Error::AmbientMismatch("pullback along a map into another group".into()));
        }
        let imgs: Vec<Elem> = (0..f.domain().rank()).map(|j| f.image_of_generator(j)).collect();
        Bicharacter::from_fn(f.domain(), |i, j| self.eval(&imgs[i], &imgs[j]))
    }

    fn common_den(&self) -> i64 {
        self.values.iter().flatten().fold(1, |a, v| num_integer::lcm(a, v.den()))
    }

    /// `{a : b(x, a) = 0 for all x in n}`.
    pub fn perp(&self, n: &Subgroup) -> Result<Subgroup> {
        if n.ambient() != &self.group {
            return Err(Error::AmbientMismatch("subgroup not in the bicharacter's group".into()));
        }
        let d = self.common_den();
        let gens = n.generators();
        if d == 1 || gens.is_empty() {
            return Ok(Subgroup::whole(&self.group));
        }
        let target = FinAbGroup::from_orders(&vec![d; gens.len()])?;
        let mat: Vec<Vec<i64>> = gens
            .iter()
            .map(|x| (0..self.group.rank()).map(|j| self.eval(x, &self.group.basis(j)).scaled_to(d)).collect())
            .collect();
        Ok(Homomorphism::new(self.group.clone(), target, mat)?.kernel())
    }

    /// Left radical `{x : b(x, ·) = 0}`.
    pub fn radical(&self) -> Subgroup {
        self.transpose().perp(&Subgroup::whole(&self.group)).expect("same group")
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.radical().is_trivial()
    }
}

/// Bicharacter on a subgroup `H`, stored on the canonical generators of `H`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubBichar {
    sub: Subgroup,
    values: Vec<Vec<QZ>>,
}

impl SubBichar {
    /// Build from a table on canonical generators; checks well-definedness.
    pub fn new(sub: Subgroup, values: Vec<Vec<QZ>>) -> Result<Self> {
        let r = sub.generators().len();
        if values.len() != r || values.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidData(format!(
                "form table must be {r}x{r} on the canonical generators"
            )));
        }
        let s = SubBichar { sub, values };
        let abs = s.try_to_abstract()?;
        let back = SubBichar::from_abstract(&s.sub, &abs);
        if back != s {
            return Err(Error::InvalidData("form table does not respect the relations of the subgroup".into()));
        }
        Ok(s)
    }

    pub fn zero(sub: &Subgroup) -> Self {
        let r = sub.generators().len();
        SubBichar { sub: sub.clone(), values: vec![vec![QZ::ZERO; r]; r] }
    }

    /// Evaluate `f` on generator pairs; `f` must be biadditive on `H`.
    pub fn from_fn(sub: &Subgroup, f: impl Fn(&[i64], &[i64]) -> QZ) -> Self {
        let g = sub.generators();
        SubBichar { sub: sub.clone(), values: g.iter().map(|x| g.iter().map(|y| f(x, y)).collect()).collect() }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.sub
    }

    pub fn values(&self) -> &[Vec<QZ>] {
        &self.values
    }

    pub fn eval(&self, x: &[i64], y: &[i64]) -> Result<QZ> {
        let cx = self.sub.decompose(x).ok_or_else(|| Error::InvalidData(format!("{x:?} not in the subgroup")))?;
        let cy = self.sub.decompose(y).ok_or_else(|| Error::InvalidData(format!("{y:?} not in the subgroup")))?;
        let mut acc = QZ::ZERO;
        for (s, &a) in cx.iter().enumerate() {
            for (t, &b) in cy.iter().enumerate() {
                if a != 0 && b != 0 {
                    acc = acc.add(self.values[s][t].mul_int(a * b));
                }
            }
        }
        Ok(acc)
    }

    fn try_to_abstract(&self) -> Result<Bicharacter> {
        let p = self.sub.presentation();
        let imgs: Vec<Elem> = (0..p.group.rank()).map(|i| p.inclusion.image_of_generator(i)).collect();
        let k = imgs.len();
        let mut values = vec![vec![QZ::ZERO; k]; k];
        for i in 0..k {
            for j in 0..k {
                values[i][j] = self.eval(&imgs[i], &imgs[j])?;
            }
        }
        Bicharacter::new(p.group.clone(), values)
    }

    /// The form transported to the abstract presentation of `H`.
    pub fn to_abstract(&self) -> Bicharacter {
        self.try_to_abstract().expect("validated at construction")
    }

    pub fn from_abstract(sub: &Subgroup, b: &Bicharacter) -> SubBichar {
        let coords: Vec<Elem> = sub.generators().iter().map(|g| sub.abstract_coords(g).expect("generator")).collect();
        SubBichar {
            sub: sub.clone(),
            values: coords.iter().map(|x| coords.iter().map(|y| b.eval(x, y)).collect()).collect(),
        }
    }

    pub fn is_alternating(&self) -> bool {
        let r = self.values.len();
        (0..r).all(|i| self.values[i][i].is_zero() && (0..r).all(|j| self.values[i][j] == self.values[j][i].neg()))
    }

    pub fn neg(&self) -> SubBichar {
        SubBichar {
            sub: self.sub.clone(),
            values: self.values.iter().map(|r| r.iter().map(|v| v.neg()).collect()).collect(),
        }
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.to_abstract().is_nondegenerate()
    }

    /// Radical inside `H`, as a subgroup of the ambient group.
    pub fn radical(&self) -> Subgroup {
        let p = self.sub.presentation();
        p.inclusion.image_of(&self.to_abstract().radical()).expect("presentation subgroup")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perp_examples() {
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        // hyperbolic pairing on Z/2 + Z/2*
        let b = Bicharacter::new(g.clone(), vec![vec![QZ::ZERO, QZ::new(1, 2)], vec![QZ::new(1, 2), QZ::ZERO]]).unwrap();
        let n = Subgroup::from_generators(&g, &[vec![1, 0]]).unwrap();
        assert_eq!(b.perp(&n).unwrap(), n);
        assert!(b.perp(&Subgroup::trivial(&g)).unwrap().is_whole());
        assert!(b.is_nondegenerate());
        let z2 = FinAbGroup::cyclic(2);
        let zero = Bicharacter::zero(&z2);
        assert!(zero.perp(&Subgroup::whole(&z2)).unwrap().is_whole());
        assert!(!zero.is_nondegenerate());
        assert!(Bicharacter::new(z2, vec![vec![QZ::new(1, 4)]]).is_err());
    }

    #[test]
    fn sub_bichar_round_trip() {
        let g = FinAbGroup::new(vec![3, 9]).unwrap();
        let h = Subgroup::from_generators(&g, &[vec![1, 3], vec![0, 3]]).unwrap();
        let abs = Bicharacter::from_fn(&h.presentation().group, |i, j| {
            if i < j { QZ::new(1, 3) } else if i > j { QZ::new(2, 3) } else { QZ::ZERO }
        })
        .unwrap();
        let s = SubBichar::from_abstract(&h, &abs);
        assert!(s.is_alternating());
        assert_eq!(s.to_abstract(), abs);
        assert!(SubBichar::new(h.clone(), s.values().to_vec()).is_ok());
        assert!(s.is_nondegenerate());
    }

    proptest::proptest! {
        #[test]
        fn nondegenerate_perp_sizes(v in proptest::collection::vec(0i64..4, 4), gens in proptest::collection::vec((0i64..4, 0i64..4), 0..3)) {
            let g = FinAbGroup::new(vec![4, 4]).unwrap();
            let b = Bicharacter::from_fn(&g, |i, j| QZ::new(v[2 * i + j], 4)).unwrap();
            let n = Subgroup::from_generators(&g, &gens.iter().map(|&(a, c)| vec![a, c]).collect::<Vec<_>>()).unwrap();
            let p = b.perp(&n).unwrap();
            for a in g.elements() {
                let inside = n.elements().iter().all(|x| b.eval(x, &a).is_zero());
                proptest::prop_assert_eq!(p.contains(&a).unwrap(), inside);
            }
            if b.is_nondegenerate() {
                proptest::prop_assert_eq!(n.order() * p.order(), g.order());
            }
        }
    }
}
