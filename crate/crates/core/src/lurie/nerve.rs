//! Chains in ℓ(P) over a level simplex, and their correspondence with operad
//! maps `o(ω(A)) → P`.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use super::ell::{ell_compose, ell_identity, EllMorphism, EllObject};
use super::finptd::PtdMap;
use super::genmap::{gen_hom, precompose, GenMap};
use super::operad::FiniteOperad;
use crate::error::{Error, Result};
use crate::level::{omega_edge, omega_mor, omega_obj, FinSimplex, SimplicialOperator};
use crate::tree::EdgeId;

/// Composable morphisms `c₀ → c₁ → … → cₙ` lying over the maps of a simplex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Chain {
    pub objects: Vec<EllObject>,
    /// `arrows[i]` goes from `objects[i]` to `objects[i + 1]`.
    pub arrows: Vec<EllMorphism>,
}

/// The pointed map `A_i → A_{i+1}`.
pub fn step_map(a: &FinSimplex, i: usize) -> PtdMap {
    PtdMap::new(a.level(i + 1).len(), a.step(i).to_vec()).expect("validated simplex")
}

/// Every chain over `A`, sorted.
pub fn nerve_over(p: &dyn FiniteOperad, a: &FinSimplex) -> Vec<Chain> {
    let n = a.top();
    let tops: Vec<EllObject> =
        (0..a.level(n).len()).map(|_| 0..p.color_count()).multi_cartesian_product().map(EllObject).collect();
    let tops = if a.level(n).is_empty() { vec![EllObject(Vec::new())] } else { tops };
    let mut out = Vec::new();
    for top in tops {
        descend(p, a, n, vec![top], Vec::new(), &mut out);
    }
    out.sort();
    out
}

/// Chooses colorings level by level going down, `objects` holding levels `i..=n`.
fn descend(
    p: &dyn FiniteOperad,
    a: &FinSimplex,
    i: usize,
    objects: Vec<EllObject>,
    arrows: Vec<EllMorphism>,
    out: &mut Vec<Chain>,
) {
    if i == 0 {
        let mut objects = objects;
        let mut arrows = arrows;
        objects.reverse();
        arrows.reverse();
        out.push(Chain { objects, arrows });
        return;
    }
    let alpha = step_map(a, i - 1);
    let d = objects.last().expect("nonempty").clone();
    let fibers = alpha.fibers();
    let dead: Vec<usize> = (0..alpha.src()).filter(|&x| alpha.apply(x).is_none()).collect();
    let per_fiber: Vec<Vec<_>> = fibers.iter().zip(&d.0).map(|(f, &c)| p.operations_with_output(c, f.len())).collect();
    let component_choices: Vec<Vec<_>> = if per_fiber.is_empty() {
        vec![Vec::new()]
    } else {
        per_fiber.iter().map(|v| v.iter().cloned()).multi_cartesian_product().collect()
    };
    let dead_choices: Vec<Vec<usize>> = if dead.is_empty() {
        vec![Vec::new()]
    } else {
        dead.iter().map(|_| 0..p.color_count()).multi_cartesian_product().collect()
    };
    for comps in &component_choices {
        let mut coloring = vec![0; alpha.src()];
        for (fiber, op) in fibers.iter().zip(comps) {
            for (x, &c) in fiber.iter().zip(&op.inputs) {
                coloring[*x] = c;
            }
        }
        for dc in &dead_choices {
            for (x, &c) in dead.iter().zip(dc) {
                coloring[*x] = c;
            }
            let c = EllObject(coloring.clone());
            let arrow = EllMorphism { over: alpha.clone(), src: c.clone(), dst: d.clone(), components: comps.clone() };
            let mut objs = objects.clone();
            objs.push(c);
            let mut arrs = arrows.clone();
            arrs.push(arrow);
            descend(p, a, i - 1, objs, arrs, out);
        }
    }
}

/// Position of each in-edge of the vertex `ℓi:a` within the fiber of `a`.
fn in_edge_positions(a: &FinSimplex, i: usize, k: usize) -> (Vec<EdgeId>, Vec<usize>) {
    let fiber = step_map(a, i - 1).fiber(k);
    let names: Vec<EdgeId> = fiber.iter().map(|&b| omega_edge(i - 1, &a.level(i - 1)[b])).collect();
    let sorted: Vec<EdgeId> = names.iter().cloned().sorted().collect();
    let pos = sorted.iter().map(|e| names.iter().position(|x| x == e).expect("same set")).collect();
    (sorted, pos)
}

/// The operad map `o(ω(A)) → P` of a chain.
pub fn chain_to_map(p: &dyn FiniteOperad, a: &FinSimplex, chain: &Chain) -> GenMap {
    let mut g = GenMap::default();
    for (i, obj) in chain.objects.iter().enumerate() {
        for (k, name) in a.level(i).iter().enumerate() {
            g.colors.insert(omega_edge(i, name), obj.0[k]);
        }
    }
    for i in 1..=a.top() {
        for (k, name) in a.level(i).iter().enumerate() {
            let (_, pos) = in_edge_positions(a, i, k);
            let op = p.permute(&chain.arrows[i - 1].components[k], &pos);
            g.ops.insert(omega_edge(i, name), op);
        }
    }
    g
}

/// Inverse of [`chain_to_map`].
pub fn map_to_chain(p: &dyn FiniteOperad, a: &FinSimplex, g: &GenMap) -> Result<Chain> {
    let color = |e: &EdgeId| g.colors.get(e).copied().ok_or_else(|| Error::UnknownEdge(e.clone()));
    let objects = (0..=a.top())
        .map(|i| Ok(EllObject(a.level(i).iter().map(|x| color(&omega_edge(i, x))).collect::<Result<_>>()?)))
        .collect::<Result<Vec<_>>>()?;
    let mut arrows = Vec::new();
    for i in 1..=a.top() {
        let mut components = Vec::new();
        for (k, name) in a.level(i).iter().enumerate() {
            let (_, pos) = in_edge_positions(a, i, k);
            let mut inverse = vec![0; pos.len()];
            for (t, &x) in pos.iter().enumerate() {
                inverse[x] = t;
            }
            let v = omega_edge(i, name);
            let op = g.ops.get(&v).ok_or_else(|| Error::UnknownEdge(v.clone()))?;
            components.push(p.permute(op, &inverse));
        }
        arrows.push(EllMorphism {
            over: step_map(a, i - 1),
            src: objects[i - 1].clone(),
            dst: objects[i].clone(),
            components,
        });
    }
    Ok(Chain { objects, arrows })
}

/// Chains paired with their operad maps.
pub fn chain_bijection(p: &dyn FiniteOperad, a: &FinSimplex) -> Vec<(Chain, GenMap)> {
    nerve_over(p, a)
        .into_iter()
        .map(|c| {
            let g = chain_to_map(p, a, &c);
            (c, g)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub chains: usize,
    pub maps: usize,
    pub ok: bool,
    pub witness: Option<String>,
}

/// Checks that chains and operad maps `o(ω(A)) → P` correspond exactly.
pub fn verify_chain_bijection(p: &dyn FiniteOperad, a: &FinSimplex) -> BijectionReport {
    let pairs = chain_bijection(p, a);
    let maps = gen_hom(&omega_obj(a), p);
    let mut report = BijectionReport { chains: pairs.len(), maps: maps.len(), ok: true, witness: None };
    for (c, g) in &pairs {
        match map_to_chain(p, a, g) {
            Ok(back) if back == *c => {}
            other => {
                report.ok = false;
                report.witness = Some(format!("chain {c:?} came back as {other:?}"));
                return report;
            }
        }
    }
    let mut forward: Vec<GenMap> = pairs.into_iter().map(|(_, g)| g).collect();
    forward.sort();
    if forward != maps {
        report.ok = false;
        let missing = maps.iter().find(|m| forward.binary_search(m).is_err());
        report.witness = Some(format!("maps and chains differ, e.g. {missing:?}"));
        return report;
    }
    for g in &maps {
        match map_to_chain(p, a, g) {
            Ok(c) if chain_to_map(p, a, &c) == *g => {}
            other => {
                report.ok = false;
                report.witness = Some(format!("map {g:?} came back as {other:?}"));
                return report;
            }
        }
    }
    report
}

/// The chain over `A ∘ φ` obtained by composing arrows.
pub fn restrict_chain(p: &dyn FiniteOperad, chain: &Chain, phi: &SimplicialOperator) -> Result<Chain> {
    let v = phi.values();
    let objects: Vec<EllObject> = v.iter().map(|&k| chain.objects[k].clone()).collect();
    let mut arrows = Vec::new();
    for w in v.windows(2) {
        let mut arrow = ell_identity(p, &chain.objects[w[0]]);
        for k in w[0]..w[1] {
            arrow = ell_compose(p, &chain.arrows[k], &arrow)?;
        }
        arrows.push(arrow);
    }
    Ok(Chain { objects, arrows })
}

/// Checks `map(χ∘φ) = map(χ) ∘ ω(φ)` for every chain over `A`.
pub fn verify_naturality(p: &dyn FiniteOperad, a: &FinSimplex, phi: &SimplicialOperator) -> Result<BijectionReport> {
    let f = omega_mor(phi, a)?;
    let restricted = a.restrict(phi)?;
    let chains = nerve_over(p, a);
    let mut report = BijectionReport { chains: chains.len(), maps: chains.len(), ok: true, witness: None };
    let mut images: BTreeMap<GenMap, ()> = BTreeMap::new();
    for c in &chains {
        let lhs = chain_to_map(p, &restricted, &restrict_chain(p, c, phi)?);
        let rhs = precompose(p, &chain_to_map(p, a, c), &f)?;
        if lhs != rhs {
            report.ok = false;
            report.witness = Some(format!("square fails on {c:?}: {lhs:?} vs {rhs:?}"));
            return Ok(report);
        }
        images.insert(lhs, ());
    }
    report.maps = images.len();
    Ok(report)
}
