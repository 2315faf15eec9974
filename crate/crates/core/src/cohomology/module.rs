use crate::abelian::{Elem, FinAbGroup, Homomorphism};
use crate::cohomology::group::{Embedding, FiniteGroup};
use crate::error::{Error, Result};

/// Finite abelian group with a left action of a finite group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GModule {
    group: FiniteGroup,
    module: FinAbGroup,
    // action[g] is the matrix of g: row i is output coordinate i
    action: Vec<Vec<Vec<i64>>>,
}

impl GModule {
    pub fn new(group: FiniteGroup, module: FinAbGroup, action: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        if action.len() != group.order() {
            return Err(Error::InvalidData("need one action matrix per group element".into()));
        }
        let homs: Vec<Homomorphism> = action
            .iter()
            .map(|m| Homomorphism::new(module.clone(), module.clone(), m.clone()))
            .collect::<Result<_>>()?;
        if homs[group.identity()] != Homomorphism::identity(&module) {
            return Err(Error::InvalidData("the identity must act trivially".into()));
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                if homs[group.mul(g, h)] != homs[g].compose(&homs[h])? {
                    return Err(Error::InvalidData(format!("action is not a homomorphism at ({g},{h})")));
                }
            }
        }
        let action = homs.iter().map(|h| h.matrix().to_vec()).collect();
        Ok(GModule { group, module, action })
    }

    pub fn trivial(group: &FiniteGroup, module: &FinAbGroup) -> Self {
        let k = module.rank();
        let id: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect();
        GModule { group: group.clone(), module: module.clone(), action: vec![id; group.order()] }
    }

    /// `(1/m)Z/Z ≅ Z/m` with trivial action.
    pub fn qz_coefficients(group: &FiniteGroup, m: i64) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidData("coefficient modulus must be positive".into()));
        }
        Ok(Self::trivial(group, &FinAbGroup::from_orders(&[m])?))
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn module(&self) -> &FinAbGroup {
        &self.module
    }

    pub fn rank(&self) -> usize {
        self.module.rank()
    }

    pub fn exponent(&self) -> i64 {
        self.module.exponent()
    }

    pub fn matrix(&self, g: usize) -> &[Vec<i64>] {
        &self.action[g]
    }

    pub fn is_trivial_action(&self) -> bool {
        let id = &self.action[self.group.identity()];
        self.action.iter().all(|m| m == id)
    }

    pub fn act(&self, g: usize, x: &[i64]) -> Elem {
        let inv = self.module.invariants();
        self.action[g]
            .iter()
            .zip(inv)
            .map(|(row, &n)| {
                let s: i128 = row.iter().zip(x).map(|(&a, &b)| a as i128 * b as i128).sum();
                s.rem_euclid(n as i128) as i64
            })
            .collect()
    }

    /// Dual module `M* = Hom(M, Q/Z)` with `(g f)(a) = f(g⁻¹ a)`, same invariants.
    pub fn dual(&self) -> GModule {
        let n = self.module.invariants();
        let k = n.len();
        let action = (0..self.group.order())
            .map(|g| {
                let r = &self.action[self.group.inv(g)];
                (0..k).map(|j| (0..k).map(|i| (r[i][j] * n[j] / n[i]).rem_euclid(n[j])).collect()).collect()
            })
            .collect();
        GModule { group: self.group.clone(), module: self.module.clone(), action }
    }

    /// Restriction along an embedding of groups.
    pub fn restrict(&self, emb: &Embedding) -> Result<GModule> {
        if emb.parent != self.group {
            return Err(Error::InvalidData("embedding does not land in the acting group".into()));
        }
        let action = emb.map.iter().map(|&g| self.action[g].clone()).collect();
        Ok(GModule { group: emb.sub.clone(), module: self.module.clone(), action })
    }

    /// Same module viewed over `G` through a homomorphism `G → self.group`.
    pub fn pullback(&self, group: &FiniteGroup, f: &[usize]) -> Result<GModule> {
        GModule::new(group.clone(), self.module.clone(), f.iter().map(|&x| self.action[x].clone()).collect())
    }

    pub fn direct_sum(&self, other: &GModule) -> Result<GModule> {
        if self.group != other.group {
            return Err(Error::InvalidData("modules over different groups".into()));
        }
        let (a, b) = (self.rank(), other.rank());
        let action = (0..self.group.order())
            .map(|g| {
                (0..a + b)
                    .map(|i| {
                        (0..a + b)
                            .map(|j| match (i < a, j < a) {
                                (true, true) => self.action[g][i][j],
                                (false, false) => other.action[g][i - a][j - a],
                                _ => 0,
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(GModule { group: self.group.clone(), module: self.module.direct_sum(&other.module), action })
    }
}
