//! Level forests: simplices `A: [n] -> Fin*`, simplicial operators acting on
//! them, and the functor ω into forests.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::omega::{OperadMap, Operation};
use crate::tree::{EdgeId, Forest, Tree};

/// Reserved name of the basepoint in serialized maps.
pub const BASEPOINT: &str = "*";

/// A chain `A₀ → A₁ → … → Aₙ` of pointed maps between finite sets.
///
/// `maps[i]` is `α_{i+1}: A_i → A_{i+1} ∪ {*}`, stored by index, `None` for `*`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinSimplex {
    levels: Vec<Vec<String>>,
    maps: Vec<Vec<Option<usize>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Scalar {
    Str(String),
    Int(i64),
}

impl Scalar {
    fn into_string(self) -> String {
        match self {
            Scalar::Str(s) => s,
            Scalar::Int(i) => i.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct FinSimplexJson {
    levels: Vec<Vec<Scalar>>,
    maps: Vec<BTreeMap<String, Scalar>>,
}

impl FinSimplex {
    pub fn new(levels: Vec<Vec<String>>, maps: Vec<Vec<Option<usize>>>) -> Result<FinSimplex> {
        let bad = |m: String| Err(Error::InvalidSimplex(m));
        if levels.is_empty() {
            return bad("a simplex needs at least one level".into());
        }
        if maps.len() + 1 != levels.len() {
            return bad(format!("{} levels need {} maps, got {}", levels.len(), levels.len() - 1, maps.len()));
        }
        for (i, level) in levels.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for a in level {
                if a == BASEPOINT || EdgeId::new(omega_name(i, a)).is_err() {
                    return bad(format!("invalid element name `{a}`"));
                }
                if !seen.insert(a) {
                    return bad(format!("duplicate element `{a}` at level {i}"));
                }
            }
        }
        for (i, m) in maps.iter().enumerate() {
            if m.len() != levels[i].len() {
                return bad(format!("map {} must be total on level {i}", i + 1));
            }
            if m.iter().flatten().any(|&b| b >= levels[i + 1].len()) {
                return bad(format!("map {} leaves level {}", i + 1, i + 1));
            }
        }
        Ok(FinSimplex { levels, maps })
    }

    /// Levels `⟨k₀⟩, …, ⟨kₙ⟩` with elements named `1..=kᵢ`; maps are given
    /// 1-based with `0` standing for the basepoint.
    pub fn skeletal(sizes: &[usize], maps: &[Vec<usize>]) -> Result<FinSimplex> {
        let levels = sizes.iter().map(|&k| (1..=k).map(|x| x.to_string()).collect()).collect();
        let maps = maps.iter().map(|m| m.iter().map(|&x| x.checked_sub(1)).collect()).collect();
        FinSimplex::new(levels, maps)
    }

    pub fn from_json(text: &str) -> Result<FinSimplex> {
        let raw: FinSimplexJson = serde_json::from_str(text).map_err(|e| Error::InvalidSimplex(e.to_string()))?;
        let levels: Vec<Vec<String>> =
            raw.levels.into_iter().map(|l| l.into_iter().map(Scalar::into_string).collect()).collect();
        let mut maps = Vec::new();
        for (i, m) in raw.maps.into_iter().enumerate() {
            let (Some(src), Some(dst)) = (levels.get(i), levels.get(i + 1)) else {
                return Err(Error::InvalidSimplex("more maps than level pairs".into()));
            };
            let mut out = vec![None; src.len()];
            let mut assigned = vec![false; src.len()];
            for (k, v) in m {
                let Some(a) = src.iter().position(|x| *x == k) else {
                    return Err(Error::InvalidSimplex(format!("map {} mentions unknown `{k}`", i + 1)));
                };
                let v = v.into_string();
                out[a] =
                    if v == BASEPOINT {
                        None
                    } else {
                        Some(dst.iter().position(|x| *x == v).ok_or_else(|| {
                            Error::InvalidSimplex(format!("map {} sends `{k}` to unknown `{v}`", i + 1))
                        })?)
                    };
                assigned[a] = true;
            }
            if let Some(a) = assigned.iter().position(|x| !x) {
                return Err(Error::InvalidSimplex(format!("map {} is not defined on `{}`", i + 1, src[a])));
            }
            maps.push(out);
        }
        FinSimplex::new(levels, maps)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let maps: Vec<BTreeMap<String, String>> = self
            .maps
            .iter()
            .enumerate()
            .map(|(i, m)| {
                m.iter()
                    .enumerate()
                    .map(|(a, b)| {
                        let v = b.map_or(BASEPOINT.to_string(), |b| self.levels[i + 1][b].clone());
                        (self.levels[i][a].clone(), v)
                    })
                    .collect()
            })
            .collect();
        serde_json::json!({ "levels": self.levels, "maps": maps })
    }

    /// The top index `n`.
    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, i: usize) -> &[String] {
        &self.levels[i]
    }

    pub fn levels(&self) -> &[Vec<String>] {
        &self.levels
    }

    /// `α_{i+1}` as an index map.
    pub fn step(&self, i: usize) -> &[Option<usize>] {
        &self.maps[i]
    }

    /// `α_{ij}: A_j → A_i ∪ {*}` for `i ≥ j`, with `*` absorbing.
    pub fn composite(&self, i: usize, j: usize) -> Vec<Option<usize>> {
        assert!(i >= j && i <= self.top(), "composite needs j <= i <= n");
        let mut cur: Vec<Option<usize>> = (0..self.levels[j].len()).map(Some).collect();
        for k in j..i {
            for x in cur.iter_mut() {
                *x = x.and_then(|b| self.maps[k][b]);
            }
        }
        cur
    }

    /// The simplex `A ∘ φ`.
    pub fn restrict(&self, phi: &SimplicialOperator) -> Result<FinSimplex> {
        if phi.target() != self.top() {
            return Err(Error::LevelMismatch { operator: phi.target(), simplex: self.top() });
        }
        let levels = phi.values().iter().map(|&k| self.levels[k].clone()).collect();
        let maps = phi.values().windows(2).map(|w| self.composite(w[1], w[0])).collect();
        FinSimplex::new(levels, maps)
    }

    pub fn total_size(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }
}

impl fmt::Debug for FinSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinSimplex({})", self.to_json())
    }
}

/// A monotone map `[m] → [n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialOperator {
    values: Vec<usize>,
    target: usize,
}

impl SimplicialOperator {
    pub fn new(values: Vec<usize>, target: usize) -> Result<SimplicialOperator> {
        if values.is_empty() {
            return Err(Error::InvalidOperator("empty domain".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidOperator(format!("{values:?} is not monotone")));
        }
        if values.iter().any(|&v| v > target) {
            return Err(Error::InvalidOperator(format!("{values:?} leaves [{target}]")));
        }
        Ok(SimplicialOperator { values, target })
    }

    pub fn identity(n: usize) -> SimplicialOperator {
        SimplicialOperator { values: (0..=n).collect(), target: n }
    }

    /// The coface `dⁱ: [n-1] → [n]` skipping `i`.
    pub fn coface(n: usize, i: usize) -> Result<SimplicialOperator> {
        if n == 0 || i > n {
            return Err(Error::InvalidOperator(format!("no coface d{i} into [{n}]")));
        }
        SimplicialOperator::new((0..=n).filter(|&k| k != i).collect(), n)
    }

    /// The codegeneracy `sⁱ: [n+1] → [n]` repeating `i`.
    pub fn codegeneracy(n: usize, i: usize) -> Result<SimplicialOperator> {
        if i > n {
            return Err(Error::InvalidOperator(format!("no codegeneracy s{i} onto [{n}]")));
        }
        SimplicialOperator::new((0..=n + 1).map(|k| if k <= i { k } else { k - 1 }).collect(), n)
    }

    /// Domain top index `m`.
    pub fn source(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &SimplicialOperator) -> Result<SimplicialOperator> {
        if inner.target != self.source() {
            return Err(Error::InvalidOperator(format!(
                "cannot compose [{}]→[{}] after [{}]→[{}]",
                self.source(),
                self.target,
                inner.source(),
                inner.target
            )));
        }
        SimplicialOperator::new(inner.values.iter().map(|&k| self.values[k]).collect(), self.target)
    }
}

/// Name of the edge of ω(A) for the element `a` of level `i`.
pub fn omega_name(level: usize, element: &str) -> String {
    format!("ℓ{level}:{element}")
}

pub fn omega_edge(level: usize, element: &str) -> EdgeId {
    EdgeId::new(omega_name(level, element)).expect("validated element name")
}

/// Splits an ω edge name into its level and element.
pub fn parse_omega_edge(e: &EdgeId) -> Option<(usize, &str)> {
    let rest = e.as_str().strip_prefix('ℓ')?;
    let (lvl, elem) = rest.split_once(':')?;
    Some((lvl.parse().ok()?, elem))
}

/// The level forest ω(A).
///
/// Components are listed by decreasing root level, then by element order.
pub fn omega_obj(a: &FinSimplex) -> Forest {
    let n = a.top();
    // preimages[i][b] = elements of level i-1 mapped to b in level i
    let mut preimages: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for i in 1..=n {
        let mut pre = vec![Vec::new(); a.levels[i].len()];
        for (x, y) in a.maps[i - 1].iter().enumerate() {
            if let Some(y) = y {
                pre[*y].push(x);
            }
        }
        preimages.push(pre);
    }
    let mut comps = Vec::new();
    for i in (0..=n).rev() {
        for (k, name) in a.levels[i].iter().enumerate() {
            let is_root = i == n || a.maps[i][k].is_none();
            if !is_root {
                continue;
            }
            let mut vertices = Vec::new();
            let mut stack = vec![(i, k)];
            while let Some((lvl, idx)) = stack.pop() {
                if lvl == 0 {
                    continue;
                }
                let ins = preimages[lvl][idx].iter().map(|&b| omega_edge(lvl - 1, &a.levels[lvl - 1][b])).collect();
                vertices.push((omega_edge(lvl, &a.levels[lvl][idx]), ins));
                stack.extend(preimages[lvl][idx].iter().map(|&b| (lvl - 1, b)));
            }
            comps.push(Tree::from_vertices(omega_edge(i, name), vertices).expect("level forest is a forest"));
        }
    }
    Forest::new(comps).expect("ω edge names are distinct")
}

/// The morphism `ω(A∘φ) → ω(A)` induced by a simplicial operator `φ`.
pub fn omega_mor(phi: &SimplicialOperator, a: &FinSimplex) -> Result<OperadMap> {
    let restricted = a.restrict(phi)?;
    let source = omega_obj(&restricted);
    let target = omega_obj(a);
    let vals = phi.values();
    let mut edge_map = BTreeMap::new();
    let mut vertex_map = BTreeMap::new();
    for (j, level) in restricted.levels.iter().enumerate() {
        for (k, name) in level.iter().enumerate() {
            let image = omega_edge(vals[j], name);
            edge_map.insert(omega_edge(j, name), image.clone());
            if j > 0 {
                let below = a.composite(vals[j], vals[j - 1]);
                let inputs = below
                    .iter()
                    .enumerate()
                    .filter(|(_, t)| **t == Some(k))
                    .map(|(b, _)| omega_edge(vals[j - 1], &a.levels[vals[j - 1]][b]))
                    .collect();
                vertex_map.insert(omega_edge(j, name), Operation { output: image, inputs });
            }
        }
    }
    Ok(OperadMap::from_parts(Arc::new(source), Arc::new(target), edge_map, vertex_map))
}

/// A presentation of a forest as a retract of a level forest.
#[derive(Clone, Debug)]
pub struct Retract {
    pub simplex: FinSimplex,
    /// The input forest with unary chains adjoined above shallow leaves.
    pub padded: Forest,
    /// `F → ω(A)`.
    pub section: OperadMap,
    /// `ω(A) → F`.
    pub retraction: OperadMap,
}

/// Presents `forest` as a retract of `ω(A)`.
///
/// Each component gets root level `max(max leaf depth, max stump depth + 1)`;
/// leaves sitting above level 0 are padded with unary chains.
pub fn retract_witness(forest: &Forest) -> Result<Retract> {
    let mut taken: BTreeSet<String> = forest.edges().map(|e| e.to_string()).collect();
    let mut level_of: BTreeMap<EdgeId, usize> = BTreeMap::new();
    // padding edge -> leaf it sits above
    let mut pad_owner: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
    let mut padded_components = Vec::new();
    let mut order: Vec<(usize, EdgeId)> = Vec::new();
    for (ci, t) in forest.components().iter().enumerate() {
        let leaf_depth = t.leaves().iter().map(|e| t.depth(e)).max().unwrap_or(0);
        let stump_depth = t.stump_edges().iter().map(|e| t.depth(e) + 1).max().unwrap_or(0);
        let top = leaf_depth.max(stump_depth);
        let mut vertices: Vec<(EdgeId, Vec<EdgeId>)> = t.vertices().map(|v| (v.out_edge, v.in_edges)).collect();
        for e in t.edges() {
            let lvl = top - t.depth(e);
            level_of.insert(e.clone(), lvl);
            order.push((ci, e.clone()));
        }
        for leaf in t.leaves() {
            let mut below = leaf.clone();
            for step in 1..=level_of[&leaf] {
                let pad = fresh_name(&leaf, step, &mut taken);
                vertices.push((below.clone(), vec![pad.clone()]));
                level_of.insert(pad.clone(), level_of[&leaf] - step);
                pad_owner.insert(pad.clone(), leaf.clone());
                order.push((ci, pad.clone()));
                below = pad;
            }
        }
        padded_components.push(Tree::from_vertices(t.root().clone(), vertices)?);
    }
    let padded = Forest::new(padded_components)?;
    let n = level_of.values().copied().max().unwrap_or(0);
    order.sort();
    let mut levels: Vec<Vec<String>> = vec![Vec::new(); n + 1];
    let mut index: BTreeMap<EdgeId, usize> = BTreeMap::new();
    for (_, e) in &order {
        let l = level_of[e];
        index.insert(e.clone(), levels[l].len());
        levels[l].push(e.to_string());
    }
    let mut maps: Vec<Vec<Option<usize>>> = (0..n).map(|i| vec![None; levels[i].len()]).collect();
    for (_, e) in &order {
        let l = level_of[e];
        if l < n {
            let parent = padded.components().iter().find_map(|t| t.parent(e));
            maps[l][index[e]] = parent.map(|p| index[p]);
        }
    }
    let simplex = FinSimplex::new(levels, maps)?;
    let omega = Arc::new(omega_obj(&simplex));
    let source = Arc::new(forest.clone());
    let section_edges = forest.edges().map(|e| (e.clone(), omega_edge(level_of[e], e.as_str()))).collect();
    let section = OperadMap::from_edge_map(source.clone(), omega.clone(), section_edges);
    let retraction_edges =
        level_of.iter().map(|(e, l)| (omega_edge(*l, e.as_str()), pad_owner.get(e).unwrap_or(e).clone())).collect();
    let retraction = OperadMap::from_edge_map(omega, source, retraction_edges);
    Ok(Retract { simplex, padded, section, retraction })
}

fn fresh_name(leaf: &EdgeId, step: usize, taken: &mut BTreeSet<String>) -> EdgeId {
    let mut sep = String::new();
    loop {
        let candidate = format!("{leaf}{sep}{step}");
        if taken.insert(candidate.clone()) {
            return EdgeId::new(candidate).expect("derived from a valid name");
        }
        sep.push('_');
    }
}

/// Strips the level prefix from every edge of an ω forest.
pub fn forget_levels(f: &Forest) -> Result<Forest> {
    let comps = f
        .components()
        .iter()
        .map(|t| {
            t.rename(|e| parse_omega_edge(e).map_or_else(|| e.clone(), |(_, a)| EdgeId::new(a).expect("valid element")))
        })
        .collect::<Result<Vec<_>>>()?;
    Forest::new(comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega::{compose, operations, validate};
    use crate::tree::parse_forest;

    /// ⟨4⟩ → ⟨3⟩ → ⟨1⟩ with α₁(1)=α₁(2)=1, α₁(3)=α₁(4)=3, α₂(1)=α₂(2)=1, α₂(3)=*.
    fn example() -> FinSimplex {
        FinSimplex::skeletal(&[4, 3, 1], &[vec![1, 1, 3, 3], vec![1, 1, 0]]).unwrap()
    }

    #[test]
    fn omega_of_the_worked_example() {
        let f = omega_obj(&example());
        assert_eq!(f.to_string(), "{ℓ2:1[ℓ1:1[ℓ0:1,ℓ0:2],ℓ1:2[]];ℓ1:3[ℓ0:3,ℓ0:4]}");
        assert_eq!(f.edge_count(), 8);
        assert_eq!(f.stump_edges().len(), 1);
    }

    #[test]
    fn omega_small_cases() {
        let single = FinSimplex::skeletal(&[3], &[]).unwrap();
        assert_eq!(omega_obj(&single).to_string(), "{ℓ0:1;ℓ0:2;ℓ0:3}");
        let lin = FinSimplex::skeletal(&[1, 1], &[vec![1]]).unwrap();
        let f = omega_obj(&lin);
        assert_eq!(f.to_string(), "{ℓ1:1[ℓ0:1]}");
        let empty = FinSimplex::skeletal(&[0], &[]).unwrap();
        assert!(omega_obj(&empty).is_empty());
    }

    #[test]
    fn json_roundtrip_and_errors() {
        let text = r#"{"levels": [[1,2,3,4],[1,2,3],[1]], "maps": [{"1":1,"2":1,"3":3,"4":3},{"1":1,"2":1,"3":"*"}]}"#;
        let a = FinSimplex::from_json(text).unwrap();
        assert_eq!(a, example());
        assert_eq!(FinSimplex::from_json(&a.to_json().to_string()).unwrap(), a);
        assert!(FinSimplex::from_json(r#"{"levels": [[1],[1]], "maps": [{}]}"#).is_err());
        assert!(FinSimplex::from_json(r#"{"levels": [[1],[1]], "maps": [{"1":"7"}]}"#).is_err());
        assert!(FinSimplex::from_json(r#"{"levels": [["*"]], "maps": []}"#).is_err());
        assert!(FinSimplex::from_json("not json").is_err());
    }

    #[test]
    fn face_d1_on_the_worked_example() {
        let a = example();
        let d1 = SimplicialOperator::coface(2, 1).unwrap();
        let f = omega_mor(&d1, &a).unwrap();
        assert_eq!(f.source().to_string(), "{ℓ1:1[ℓ0:1,ℓ0:2];ℓ0:3;ℓ0:4}");
        validate(&f).unwrap();
        let v = &f.vertex_map()[&omega_edge(1, "1")];
        assert_eq!(v.output, omega_edge(2, "1"));
        assert_eq!(v.inputs, BTreeSet::from([omega_edge(0, "1"), omega_edge(0, "2")]));
        let (_, tree) = f.target().tree_of(&v.output).unwrap();
        assert!(operations(tree, &v.output).unwrap().contains(v));
    }

    #[test]
    fn identity_operator_gives_identity_map() {
        let a = example();
        let f = omega_mor(&SimplicialOperator::identity(2), &a).unwrap();
        assert_eq!(f, OperadMap::identity(Arc::new(omega_obj(&a))));
        assert!(matches!(omega_mor(&SimplicialOperator::identity(1), &a), Err(Error::LevelMismatch { .. })));
    }

    #[test]
    fn s0_after_d0_is_identity() {
        let a = example();
        let d0 = SimplicialOperator::coface(3, 0).unwrap();
        let s0 = SimplicialOperator::codegeneracy(2, 0).unwrap();
        let composite = s0.after(&d0).unwrap();
        assert_eq!(composite, SimplicialOperator::identity(2));
        let lhs = omega_mor(&composite, &a).unwrap();
        let via = compose(&omega_mor(&d0, &a.restrict(&s0).unwrap()).unwrap(), &omega_mor(&s0, &a).unwrap()).unwrap();
        assert_eq!(lhs, via);
    }

    #[test]
    fn retract_pads_shallow_leaves() {
        let f = parse_forest("{r[a,b[]]}").unwrap();
        let r = retract_witness(&f).unwrap();
        assert_eq!(r.padded.to_string(), "{r[a[a1],b[]]}");
        assert_eq!(r.simplex.levels(), &[vec!["a1".to_string()], vec!["a".into(), "b".into()], vec!["r".into()]]);
        validate(&r.section).unwrap();
        validate(&r.retraction).unwrap();
        let rs = compose(&r.section, &r.retraction).unwrap();
        assert_eq!(rs, OperadMap::identity(Arc::new(f)));
        assert_eq!(forget_levels(r.retraction.source()).unwrap(), r.padded);
    }

    #[test]
    fn retract_of_a_single_stump_and_empty_forest() {
        let r = retract_witness(&parse_forest("{r[]}").unwrap()).unwrap();
        assert_eq!(r.padded.to_string(), "{r[]}");
        assert_eq!(r.simplex.levels(), &[Vec::<String>::new(), vec!["r".to_string()]]);
        let r = retract_witness(&Forest::empty()).unwrap();
        assert_eq!(r.simplex.top(), 0);
        assert!(r.simplex.level(0).is_empty());
    }

    #[test]
    fn level_uniform_forest_is_an_isomorphic_retract() {
        let w = omega_obj(&example());
        let r = retract_witness(&w).unwrap();
        assert_eq!(r.padded, w);
        assert!(r.section.is_edge_injective() && r.section.is_edge_surjective());
        let sr = compose(&r.retraction, &r.section).unwrap();
        assert_eq!(sr, OperadMap::identity(r.retraction.source().clone()));
    }

    #[test]
    fn operator_constructors() {
        assert_eq!(SimplicialOperator::coface(2, 1).unwrap().values(), &[0, 2]);
        assert_eq!(SimplicialOperator::codegeneracy(1, 0).unwrap().values(), &[0, 0, 1]);
        assert!(SimplicialOperator::new(vec![1, 0], 1).is_err());
        assert!(SimplicialOperator::new(vec![0, 3], 2).is_err());
        assert!(SimplicialOperator::coface(0, 0).is_err());
    }
}
