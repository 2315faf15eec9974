use std::collections::HashSet;

use crate::abelian::{Elem, Homomorphism};
use crate::error::{Error, Result};
use crate::metric::qz::{squarefree, QZ};
use crate::metric::quadratic::MetricGroup;

/// Group isomorphism `source → target` carrying one quadratic form to the other.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Isometry {
    source: MetricGroup,
    target: MetricGroup,
    map: Homomorphism,
}

impl Isometry {
    pub fn new(source: MetricGroup, target: MetricGroup, map: Homomorphism) -> Result<Self> {
        if map.domain() != source.group() || map.codomain() != target.group() {
            return Err(Error::AmbientMismatch("map does not go between the given metric groups".into()));
        }
        if source.order() != target.order() {
            return Err(Error::InvalidData("metric groups have different orders".into()));
        }
        let k = source.group().rank();
        let imgs: Vec<Elem> = (0..k).map(|j| map.image_of_generator(j)).collect();
        for i in 0..k {
            let ei = source.group().basis(i);
            if target.q(&imgs[i]) != source.q(&ei) {
                return Err(Error::InvalidData(format!("map does not preserve q on generator {i}")));
            }
            for j in i + 1..k {
                if target.b(&imgs[i], &imgs[j]) != source.b(&ei, &source.group().basis(j)) {
                    return Err(Error::InvalidData(format!("map does not preserve b on generators {i},{j}")));
                }
            }
        }
        // preserving a nondegenerate b forces injectivity; equal orders then give bijectivity
        debug_assert!(map.is_injective());
        Ok(Isometry { source, target, map })
    }

    pub fn identity(e: &MetricGroup) -> Self {
        Isometry { source: e.clone(), target: e.clone(), map: Homomorphism::identity(e.group()) }
    }

    pub fn source(&self) -> &MetricGroup {
        &self.source
    }

    pub fn target(&self) -> &MetricGroup {
        &self.target
    }

    pub fn map(&self) -> &Homomorphism {
        &self.map
    }

    pub fn apply(&self, x: &[i64]) -> Elem {
        self.map.apply(x)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Isometry) -> Result<Isometry> {
        if inner.target != self.source {
            return Err(Error::ObjectMismatch("isometries are not composable".into()));
        }
        Ok(Isometry { source: inner.source.clone(), target: self.target.clone(), map: self.map.compose(&inner.map)? })
    }

    pub fn inverse(&self) -> Isometry {
        let k = self.target.group().rank();
        let imgs: Vec<Elem> = (0..k)
            .map(|j| self.map.preimage(&self.target.group().basis(j)).expect("shape").expect("isometries are onto"))
            .collect();
        let map = Homomorphism::from_images(self.target.group().clone(), self.source.group().clone(), &imgs)
            .expect("inverse of an isomorphism");
        Isometry { source: self.target.clone(), target: self.source.clone(), map }
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.map == Homomorphism::identity(self.source.group())
    }
}

/// Square class of `|(g − 1)E|`.
pub fn det_square_class(g: &Isometry) -> Result<u128> {
    if g.source != g.target {
        return Err(Error::ObjectMismatch("det needs an isometry of a single metric group".into()));
    }
    let d = g.map.add(&Homomorphism::identity(g.source.group()).neg())?;
    Ok(squarefree(d.image().order()))
}

pub fn is_special(g: &Isometry) -> Result<bool> {
    Ok(det_square_class(g)? == 1)
}

/// All of `O(E, q)`, sorted by matrix.
pub fn orthogonal_group(e: &MetricGroup, cap: u128) -> Result<Vec<Isometry>> {
    if e.order() > cap {
        return Err(Error::CapExceeded { what: "metric group order".into(), size: e.order(), cap });
    }
    let g = e.group();
    let k = g.rank();
    let elems = g.elements();
    let basis: Vec<Elem> = (0..k).map(|i| g.basis(i)).collect();
    let q0: Vec<QZ> = basis.iter().map(|x| e.q(x)).collect();
    // candidates for the image of e_i: same order, same q
    let cands: Vec<Vec<&Elem>> = (0..k)
        .map(|i| {
            elems.iter().filter(|y| g.element_order(y) == g.invariants()[i] && e.q(y) == q0[i]).collect()
        })
        .collect();
    let b0: Vec<Vec<QZ>> = (0..k).map(|i| (0..k).map(|j| e.b(&basis[i], &basis[j])).collect()).collect();

    let mut out = vec![];
    let mut chosen: Vec<&Elem> = Vec::with_capacity(k);
    fn dfs<'a>(
        i: usize,
        cands: &[Vec<&'a Elem>],
        b0: &[Vec<QZ>],
        e: &MetricGroup,
        chosen: &mut Vec<&'a Elem>,
        out: &mut Vec<Vec<Elem>>,
    ) {
        if i == cands.len() {
            out.push(chosen.iter().map(|y| (*y).clone()).collect());
            return;
        }
        for &y in &cands[i] {
            if chosen.iter().enumerate().all(|(j, z)| e.b(z, y) == b0[j][i]) {
                chosen.push(y);
                dfs(i + 1, cands, b0, e, chosen, out);
                chosen.pop();
            }
        }
    }
    dfs(0, &cands, &b0, e, &mut chosen, &mut out);

    let mut isos: Vec<Isometry> = out
        .into_iter()
        .map(|imgs| {
            let map = Homomorphism::from_images(g.clone(), g.clone(), &imgs)?;
            Isometry::new(e.clone(), e.clone(), map)
        })
        .collect::<Result<_>>()?;
    isos.sort_by(|a, b| a.map.matrix().cmp(b.map.matrix()));
    verify_closed(&isos)?;
    Ok(isos)
}

// Closure under composition: the list contains 1 and equals the subgroup generated by a
// greedily chosen generating subset, reached by multiplying on the left from 1.
fn verify_closed(isos: &[Isometry]) -> Result<()> {
    let key = |g: &Isometry| g.map.matrix().to_vec();
    let all: HashSet<Vec<Vec<i64>>> = isos.iter().map(key).collect();
    let id = isos.iter().find(|g| g.is_identity()).ok_or_else(|| Error::Internal("no identity".into()))?;
    let mut gens: Vec<&Isometry> = vec![];
    let mut reached: HashSet<Vec<Vec<i64>>> = HashSet::from([key(id)]);
    let mut reached_list = vec![id.clone()];
    for g in isos {
        if reached.contains(&key(g)) {
            continue;
        }
        gens.push(g);
        // close up again under all generators
        let mut i = 0;
        while i < reached_list.len() {
            for s in &gens {
                let h = s.compose(&reached_list[i])?;
                let kh = key(&h);
                if !all.contains(&kh) {
                    return Err(Error::Internal("orthogonal group is not closed under composition".into()));
                }
                if reached.insert(kh) {
                    reached_list.push(h);
                }
            }
            i += 1;
        }
    }
    if reached.len() != all.len() {
        return Err(Error::Internal("orthogonal group closure mismatch".into()));
    }
    Ok(())
}
