//! The free colored operad on a tree or forest, and morphisms of Ω and Φ as
//! operad maps between free operads.
//!
//! The colors of `o(T)` are the edges of `T`. An operation is a *cut*: an
//! output edge together with a set of edges above it that bound a subtree,
//! with stump branches closed off internally. Since the colors of a tree are
//! pairwise distinct, an operation is determined by its output and input set.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::{EdgeId, Forest, Tree};

/// An operation of `o(T)`: a cut with the given output edge and input set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Operation {
    pub output: EdgeId,
    pub inputs: BTreeSet<EdgeId>,
}

impl Operation {
    pub fn identity(e: EdgeId) -> Operation {
        Operation { inputs: BTreeSet::from([e.clone()]), output: e }
    }

    pub fn is_identity(&self) -> bool {
        self.inputs.len() == 1 && self.inputs.contains(&self.output)
    }

    pub fn arity(&self) -> usize {
        self.inputs.len()
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}->{}", self.inputs.iter().join(","), self.output)
    }
}

/// All cuts above `e`, including the identity `{e}`, in sorted order.
///
/// Closure from `{e}`: any member of a cut with a vertex above it may be
/// expanded through that vertex (a stump expands to nothing).
pub fn operations(tree: &Tree, e: &EdgeId) -> Result<Vec<Operation>> {
    if !tree.contains(e) {
        return Err(Error::UnknownEdge(e.clone()));
    }
    let start = BTreeSet::from([e.clone()]);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(cut) = queue.pop_front() {
        for x in &cut {
            if let Some(ins) = tree.inputs(x) {
                let mut next = cut.clone();
                next.remove(x);
                next.extend(ins.iter().cloned());
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen.into_iter().map(|inputs| Operation { output: e.clone(), inputs }).collect())
}

/// Vertices (by outgoing edge) enclosed by a cut, in breadth-first order from
/// the output, or `None` when `op` is not a cut of `tree`.
pub fn cut_vertices(tree: &Tree, op: &Operation) -> Option<Vec<EdgeId>> {
    if !tree.contains(&op.output) {
        return None;
    }
    let mut region = Vec::new();
    let mut hit = 0usize;
    let mut queue = VecDeque::from([op.output.clone()]);
    while let Some(x) = queue.pop_front() {
        if op.inputs.contains(&x) {
            hit += 1;
            continue;
        }
        {
            let ins = tree.inputs(&x)?;
            region.push(x.clone());
            queue.extend(ins.iter().cloned());
        }
    }
    (hit == op.inputs.len()).then_some(region)
}

pub fn is_cut(tree: &Tree, op: &Operation) -> bool {
    cut_vertices(tree, op).is_some()
}

/// A morphism of Φ: an operad map `o(source) -> o(target)`.
///
/// Vertices of the source are keyed by their outgoing edge.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OperadMap {
    edge_map: BTreeMap<EdgeId, EdgeId>,
    vertex_map: BTreeMap<EdgeId, Operation>,
    source: Arc<Forest>,
    target: Arc<Forest>,
}

#[derive(Serialize)]
struct OperadMapRecord<'a> {
    edge_map: &'a BTreeMap<EdgeId, EdgeId>,
    vertex_map: BTreeMap<&'a EdgeId, String>,
}

impl Serialize for OperadMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        OperadMapRecord {
            edge_map: &self.edge_map,
            vertex_map: self.vertex_map.iter().map(|(k, v)| (k, v.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl fmt::Debug for OperadMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OperadMap")
            .field("source", &self.source.to_string())
            .field("target", &self.target.to_string())
            .field("edge_map", &self.edge_map)
            .finish()
    }
}

/// A failed invariant of an [`OperadMap`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Outgoing edge of the offending source vertex, or the offending edge.
    pub at: EdgeId,
    pub kind: ViolationKind,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    MissingEdge,
    EdgeOutsideTarget,
    OutputColor,
    InputColors,
    NotInjective,
    NotACut,
    SplitComponent,
    MissingVertex,
}

impl OperadMap {
    /// Builds a map from its edge map, deriving each vertex image.
    pub fn from_edge_map(source: Arc<Forest>, target: Arc<Forest>, edge_map: BTreeMap<EdgeId, EdgeId>) -> OperadMap {
        let vertex_map = source
            .vertices()
            .map(|v| {
                let op = Operation {
                    output: edge_map[&v.out_edge].clone(),
                    inputs: v.in_edges.iter().map(|e| edge_map[e].clone()).collect(),
                };
                (v.out_edge, op)
            })
            .collect();
        OperadMap { edge_map, vertex_map, source, target }
    }

    /// Builds a map from raw data without checking it; see [`validate`].
    pub fn from_parts(
        source: Arc<Forest>,
        target: Arc<Forest>,
        edge_map: BTreeMap<EdgeId, EdgeId>,
        vertex_map: BTreeMap<EdgeId, Operation>,
    ) -> OperadMap {
        OperadMap { edge_map, vertex_map, source, target }
    }

    pub fn identity(forest: Arc<Forest>) -> OperadMap {
        let edge_map = forest.edges().map(|e| (e.clone(), e.clone())).collect();
        OperadMap::from_edge_map(forest.clone(), forest, edge_map)
    }

    pub fn source(&self) -> &Arc<Forest> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Forest> {
        &self.target
    }

    pub fn edge_map(&self) -> &BTreeMap<EdgeId, EdgeId> {
        &self.edge_map
    }

    pub fn vertex_map(&self) -> &BTreeMap<EdgeId, Operation> {
        &self.vertex_map
    }

    pub fn apply(&self, e: &EdgeId) -> Option<&EdgeId> {
        self.edge_map.get(e)
    }

    /// Mutable access for fault-injection fixtures.
    pub fn edge_map_mut(&mut self) -> &mut BTreeMap<EdgeId, EdgeId> {
        &mut self.edge_map
    }

    pub fn is_edge_injective(&self) -> bool {
        self.edge_map.values().collect::<BTreeSet<_>>().len() == self.edge_map.len()
    }

    pub fn is_edge_surjective(&self) -> bool {
        let image: BTreeSet<_> = self.edge_map.values().collect();
        self.target.edges().all(|e| image.contains(e))
    }
}

/// Checks every invariant of an operad map, collecting all violations.
pub fn validate(f: &OperadMap) -> std::result::Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    let v = |at: &EdgeId, kind, expected: String, actual: String| Violation { at: at.clone(), kind, expected, actual };
    for e in f.source.edges() {
        match f.edge_map.get(e) {
            None => out.push(v(e, ViolationKind::MissingEdge, "an image".into(), "none".into())),
            Some(t) if !f.target.contains(t) => {
                out.push(v(e, ViolationKind::EdgeOutsideTarget, "an edge of the target".into(), t.to_string()))
            }
            _ => {}
        }
    }
    if !out.is_empty() {
        return Err(out);
    }
    for comp in f.source.components() {
        let images: BTreeSet<_> = comp.edges().filter_map(|e| f.target.component_of(&f.edge_map[e])).collect();
        if images.len() > 1 {
            out.push(v(
                comp.root(),
                ViolationKind::SplitComponent,
                "one target component".into(),
                format!("{images:?}"),
            ));
        }
    }
    for vert in f.source.vertices() {
        let Some(op) = f.vertex_map.get(&vert.out_edge) else {
            out.push(v(&vert.out_edge, ViolationKind::MissingVertex, "an image".into(), "none".into()));
            continue;
        };
        let want_out = &f.edge_map[&vert.out_edge];
        if op.output != *want_out {
            out.push(v(&vert.out_edge, ViolationKind::OutputColor, want_out.to_string(), op.output.to_string()));
        }
        let imgs: Vec<&EdgeId> = vert.in_edges.iter().map(|e| &f.edge_map[e]).collect();
        let want_in: BTreeSet<EdgeId> = imgs.iter().map(|e| (*e).clone()).collect();
        if want_in.len() != imgs.len() {
            out.push(v(
                &vert.out_edge,
                ViolationKind::NotInjective,
                "distinct input colors".into(),
                imgs.iter().join(","),
            ));
        }
        if op.inputs != want_in {
            out.push(v(
                &vert.out_edge,
                ViolationKind::InputColors,
                want_in.iter().join(","),
                op.inputs.iter().join(","),
            ));
        }
        let in_target = f.target.tree_of(&op.output).map(|(_, t)| is_cut(t, op)).unwrap_or(false);
        if !in_target {
            out.push(v(&vert.out_edge, ViolationKind::NotACut, "a cut of the target".into(), op.to_string()));
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// Composite `g ∘ f` by operadic substitution of cuts.
pub fn compose(f: &OperadMap, g: &OperadMap) -> Result<OperadMap> {
    if f.target != g.source {
        return Err(Error::Boundary(format!("{} vs {}", f.target, g.source)));
    }
    let edge_map: BTreeMap<EdgeId, EdgeId> =
        f.edge_map.iter().map(|(s, t)| (s.clone(), g.edge_map[t].clone())).collect();
    let mut vertex_map = BTreeMap::new();
    for (v, op) in &f.vertex_map {
        let (_, tree) = f.target.tree_of(&op.output)?;
        let region = cut_vertices(tree, op).ok_or_else(|| Error::Internal(format!("{op} is not a cut of {tree}")))?;
        let mut frontier = BTreeSet::from([g.edge_map[&op.output].clone()]);
        for w in &region {
            let image = &g.vertex_map[w];
            if !frontier.remove(&image.output) {
                return Err(Error::Internal(format!("substitution lost color {}", image.output)));
            }
            frontier.extend(image.inputs.iter().cloned());
        }
        let composite = Operation { output: g.edge_map[&op.output].clone(), inputs: frontier };
        let expected: BTreeSet<EdgeId> = op.inputs.iter().map(|e| g.edge_map[e].clone()).collect();
        if composite.inputs != expected {
            return Err(Error::Internal(format!("substituted cut {composite} disagrees with colors")));
        }
        vertex_map.insert(v.clone(), composite);
    }
    Ok(OperadMap { edge_map, vertex_map, source: f.source.clone(), target: g.target.clone() })
}

type PartialMap = Vec<(EdgeId, EdgeId)>;

/// Enumerates operad maps from one tree into one tree, rooted top-down with
/// memoisation on (source edge, target edge).
struct TreeHom<'a> {
    source: &'a Tree,
    target: &'a Tree,
    cuts: HashMap<EdgeId, Vec<Operation>>,
    memo: HashMap<(EdgeId, EdgeId), Arc<Vec<PartialMap>>>,
}

impl<'a> TreeHom<'a> {
    fn new(source: &'a Tree, target: &'a Tree) -> Self {
        let cuts = target.edges().map(|e| (e.clone(), operations(target, e).expect("edge of target"))).collect();
        TreeHom { source, target, cuts, memo: HashMap::new() }
    }

    /// All partial maps on the subtree of the source above `s`, with `s ↦ t`.
    fn above(&mut self, s: &EdgeId, t: &EdgeId) -> Arc<Vec<PartialMap>> {
        let key = (s.clone(), t.clone());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let mut out = Vec::new();
        match self.source.inputs(s) {
            None => out.push(vec![(s.clone(), t.clone())]),
            Some(ins) => {
                let ins = ins.to_vec();
                let cuts: Vec<Operation> = self.cuts[t].iter().filter(|c| c.arity() == ins.len()).cloned().collect();
                for cut in cuts {
                    let targets: Vec<EdgeId> = cut.inputs.iter().cloned().collect();
                    for perm in targets.iter().permutations(targets.len()) {
                        let mut partial: Vec<Vec<PartialMap>> = vec![vec![vec![(s.clone(), t.clone())]]];
                        for (si, ti) in ins.iter().zip(perm) {
                            partial.push(self.above(si, ti).as_ref().clone());
                        }
                        for combo in partial.iter().multi_cartesian_product() {
                            out.push(combo.into_iter().flatten().cloned().collect());
                        }
                    }
                }
            }
        }
        let out = Arc::new(out);
        self.memo.insert(key, out.clone());
        out
    }

    fn all(&mut self) -> Vec<PartialMap> {
        let root = self.source.root().clone();
        let targets: Vec<EdgeId> = self.target.edges().cloned().collect();
        targets.iter().flat_map(|t| self.above(&root, t).as_ref().clone()).collect()
    }

    fn count_above(&self, s: &EdgeId, t: &EdgeId, memo: &mut HashMap<(EdgeId, EdgeId), u128>) -> u128 {
        if let Some(&c) = memo.get(&(s.clone(), t.clone())) {
            return c;
        }
        let c = match self.source.inputs(s) {
            None => 1,
            Some(ins) => {
                let mut total = 0u128;
                for cut in self.cuts[t].iter().filter(|c| c.arity() == ins.len()) {
                    let targets: Vec<&EdgeId> = cut.inputs.iter().collect();
                    for perm in targets.iter().permutations(targets.len()) {
                        let mut prod = 1u128;
                        for (si, ti) in ins.iter().zip(perm) {
                            prod = prod.saturating_mul(self.count_above(si, ti, memo));
                            if prod == 0 {
                                break;
                            }
                        }
                        total = total.saturating_add(prod);
                    }
                }
                total
            }
        };
        memo.insert((s.clone(), t.clone()), c);
        c
    }
}

/// Every operad map `o(source) -> o(target)`, in canonical order.
pub fn hom(source: &Forest, target: &Forest) -> Vec<OperadMap> {
    let source_arc = Arc::new(source.clone());
    let target_arc = Arc::new(target.clone());
    let mut per_component: Vec<Vec<PartialMap>> = Vec::new();
    for s in source.components() {
        let mut maps = Vec::new();
        for t in target.components() {
            maps.extend(TreeHom::new(s, t).all());
        }
        if maps.is_empty() {
            return Vec::new();
        }
        per_component.push(maps);
    }
    let mut out: Vec<OperadMap> = if per_component.is_empty() {
        vec![OperadMap::from_edge_map(source_arc, target_arc, BTreeMap::new())]
    } else {
        per_component
            .iter()
            .multi_cartesian_product()
            .map(|parts| {
                let edge_map = parts.into_iter().flatten().cloned().collect();
                OperadMap::from_edge_map(source_arc.clone(), target_arc.clone(), edge_map)
            })
            .collect()
    };
    out.sort();
    out
}

/// `|hom(source, target)|`, computed without enumerating.
pub fn hom_count(source: &Forest, target: &Forest) -> u128 {
    let mut total = 1u128;
    for s in source.components() {
        let mut per = 0u128;
        for t in target.components() {
            let th = TreeHom::new(s, t);
            let mut memo = HashMap::new();
            for e in t.edges() {
                per = per.saturating_add(th.count_above(s.root(), e, &mut memo));
            }
        }
        total = total.saturating_mul(per);
    }
    total
}

/// Shape of an elementary morphism between trees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Elementary {
    Iso,
    Degeneracy,
    InnerFace,
    OuterFace,
    EdgeOfCorolla,
    Other,
}

/// Tags a map between single trees with the elementary shape it matches.
pub fn classify_elementary(f: &OperadMap) -> Elementary {
    let (src, tgt) = (f.source.as_ref(), f.target.as_ref());
    if src.components().len() != 1 || tgt.components().len() != 1 || validate(f).is_err() {
        return Elementary::Other;
    }
    let (s, t) = (&src.components()[0], &tgt.components()[0]);
    let spans: Vec<(EdgeId, Vec<EdgeId>)> =
        f.vertex_map.iter().map(|(v, op)| (v.clone(), cut_vertices(t, op).expect("validated cut"))).collect();
    let generators = spans.iter().filter(|(_, r)| r.len() == 1).count();
    let hit: BTreeSet<&EdgeId> = spans.iter().flat_map(|(_, r)| r.iter()).collect();
    let injective = f.is_edge_injective();
    let surjective = f.is_edge_surjective();

    if s.vertex_count() == 0 && t.vertex_count() == 1 {
        return Elementary::EdgeOfCorolla;
    }
    if injective && surjective && generators == spans.len() && hit.len() == t.vertex_count() {
        return Elementary::Iso;
    }
    if surjective && s.edge_count() == t.edge_count() + 1 {
        let identities = spans.iter().filter(|(_, r)| r.is_empty()).count();
        if identities == 1 && generators + 1 == spans.len() && hit.len() == t.vertex_count() {
            return Elementary::Degeneracy;
        }
    }
    if !injective {
        return Elementary::Other;
    }
    let missing: Vec<&EdgeId> = {
        let image: BTreeSet<&EdgeId> = f.edge_map.values().collect();
        t.edges().filter(|e| !image.contains(e)).collect()
    };
    if missing.len() == 1 && t.is_inner(missing[0]) && spans.len() + 1 == t.vertex_count() {
        let doubles: Vec<_> = spans.iter().filter(|(_, r)| r.len() == 2).collect();
        if doubles.len() == 1 && generators + 1 == spans.len() && doubles[0].1.contains(missing[0]) {
            return Elementary::InnerFace;
        }
    }
    if generators == spans.len() && spans.len() + 1 == t.vertex_count() {
        let chopped: Vec<EdgeId> = t.vertices().map(|v| v.out_edge).filter(|o| !hit.contains(o)).collect();
        let v = &chopped[0];
        let ins = t.inputs(v).unwrap_or(&[]);
        let inner_attached = usize::from(t.is_inner(v)) + ins.iter().filter(|e| t.is_inner(e)).count();
        let expected_missing: BTreeSet<&EdgeId> = if v == t.root() {
            ins.iter().filter(|e| !t.is_inner(e)).chain(std::iter::once(v)).collect()
        } else {
            ins.iter().collect()
        };
        let missing: BTreeSet<&EdgeId> = missing.into_iter().collect();
        if inner_attached == 1 && missing == expected_missing {
            return Elementary::OuterFace;
        }
    }
    Elementary::Other
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::parse_tree;

    fn forest(s: &str) -> Forest {
        crate::tree::parse_forest_or_tree(s).unwrap()
    }

    fn cut(out: &str, ins: &[&str]) -> Operation {
        Operation { output: out.into(), inputs: ins.iter().map(|e| EdgeId::from(*e)).collect() }
    }

    /// Independent cut oracle: a cut above `e` is `{e}` or a choice, for the
    /// vertex above `e`, of a cut above each input (stumps contribute nothing).
    fn cut_oracle(t: &Tree, e: &EdgeId) -> BTreeSet<BTreeSet<EdgeId>> {
        let mut out = BTreeSet::from([BTreeSet::from([e.clone()])]);
        if let Some(ins) = t.inputs(e) {
            let mut acc = vec![BTreeSet::new()];
            for i in ins {
                let sub = cut_oracle(t, i);
                acc = acc.iter().flat_map(|a| sub.iter().map(move |s| a.union(s).cloned().collect())).collect();
            }
            out.extend(acc);
        }
        out
    }

    #[test]
    fn operations_of_small_trees() {
        let eta = parse_tree("e").unwrap();
        assert_eq!(operations(&eta, &"e".into()).unwrap(), vec![Operation::identity("e".into())]);
        let c2 = parse_tree("r[a,b]").unwrap();
        let ops = operations(&c2, &"r".into()).unwrap();
        assert_eq!(ops.len(), 2);
        assert!(ops.contains(&cut("r", &["a", "b"])));
    }

    #[test]
    fn operations_match_cut_oracle() {
        let t = parse_tree("r[a[x,y],b[]]").unwrap();
        let ops: BTreeSet<_> = operations(&t, &"r".into()).unwrap().into_iter().map(|o| o.inputs).collect();
        let expected: BTreeSet<BTreeSet<EdgeId>> = [&["r"][..], &["a", "b"], &["a"], &["x", "y", "b"], &["x", "y"]]
            .iter()
            .map(|s| s.iter().map(|e| EdgeId::from(*e)).collect())
            .collect();
        assert_eq!(ops, expected);
        assert_eq!(cut_oracle(&t, &"r".into()), expected);
        for tree in ["r[a[x[],y],b[c[d,e[]]]]", "r[a[b[c[]]]]", "q[w[],v[],u[]]"] {
            let t = parse_tree(tree).unwrap();
            for e in t.edges() {
                let ops: BTreeSet<_> = operations(&t, e).unwrap().into_iter().map(|o| o.inputs).collect();
                assert_eq!(ops, cut_oracle(&t, e), "{tree} at {e}");
            }
        }
        assert!(operations(&t, &"zz".into()).is_err());
    }

    #[test]
    fn hom_from_eta_is_a_color_choice() {
        let t = forest("r[a[x,y],b[]]");
        assert_eq!(hom(&forest("e"), &t).len(), 5);
    }

    #[test]
    fn hom_counts() {
        assert_eq!(hom(&forest("r[a,b]"), &forest("s[c,d]")).len(), 2);
        assert_eq!(hom(&forest("r[a]"), &forest("r[x,y]")).len(), 3);
        assert_eq!(hom(&forest("{}"), &forest("{}")).len(), 1);
        assert_eq!(hom(&forest("{e}"), &forest("{}")).len(), 0);
        for (s, t) in [("r[a[b,c],d]", "x[y[z,w[]],u]"), ("{e;r[a]}", "{x[y];p[q,s]}")] {
            assert_eq!(hom(&forest(s), &forest(t)).len() as u128, hom_count(&forest(s), &forest(t)));
        }
    }

    #[test]
    fn every_hom_element_validates() {
        let s = forest("r[a[b],c[]]");
        let t = forest("x[y[z,w[]],u]");
        let maps = hom(&s, &t);
        assert!(!maps.is_empty());
        for f in &maps {
            validate(f).unwrap();
        }
    }

    #[test]
    fn corrupted_map_is_reported_at_the_vertex() {
        let s = forest("r[a,b]");
        let mut f = OperadMap::identity(Arc::new(s));
        f.edge_map_mut().insert("a".into(), "r".into());
        let errs = validate(&f).unwrap_err();
        assert!(errs.iter().any(|v| v.at == EdgeId::from("r") && v.kind == ViolationKind::InputColors));
    }

    #[test]
    fn identity_laws_and_degeneracy_composite() {
        let s = Arc::new(forest("r[a]"));
        let eta = Arc::new(forest("e"));
        let c2 = Arc::new(forest("x[y,z]"));
        let degen = hom(&s, &eta);
        assert_eq!(degen.len(), 1);
        let edges = hom(&eta, &c2);
        let targets = hom(&s, &c2);
        for g in &edges {
            let h = compose(&degen[0], g).unwrap();
            assert!(targets.contains(&h));
            assert_eq!(compose(&OperadMap::identity(s.clone()), &h).unwrap(), h);
            assert_eq!(compose(&h, &OperadMap::identity(c2.clone())).unwrap(), h);
        }
        let mismatched = compose(&edges[0], &degen[0]);
        assert!(matches!(mismatched, Err(Error::Boundary(_))));
    }

    #[test]
    fn classification() {
        let t = Arc::new(forest("r[a[x,y],b]"));
        assert_eq!(classify_elementary(&OperadMap::identity(t.clone())), Elementary::Iso);
        let face = Arc::new(forest("r[x,y,b]"));
        let incl = hom(&face, &t)
            .into_iter()
            .find(|f| f.is_edge_injective() && f.edge_map().iter().all(|(a, b)| a == b))
            .unwrap();
        assert_eq!(classify_elementary(&incl), Elementary::InnerFace);
        let degen = &hom(&forest("r[a]"), &forest("e"))[0];
        assert_eq!(classify_elementary(degen), Elementary::Degeneracy);
        let outer = Arc::new(forest("r[a,b]"));
        let f = hom(&outer, &t).into_iter().find(|f| f.edge_map().iter().all(|(a, b)| a == b)).unwrap();
        assert_eq!(classify_elementary(&f), Elementary::OuterFace);
        let root_chop = Arc::new(forest("a[x,y]"));
        let f = hom(&root_chop, &t).into_iter().find(|f| f.edge_map().iter().all(|(a, b)| a == b)).unwrap();
        assert_eq!(classify_elementary(&f), Elementary::OuterFace);
        let edge = &hom(&forest("e"), &forest("x[y,z]"))[0];
        assert_eq!(classify_elementary(edge), Elementary::EdgeOfCorolla);
    }
}
