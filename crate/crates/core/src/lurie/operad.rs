//! Finite colored operads in sets, seen through sequence-level operations.
//!
//! Every realization here is thin: at most one operation has a given input
//! sequence and output. Composition is then determined by its colors, but it
//! is still routed through [`FiniteOperad::compose`] so that closure failures
//! surface as errors.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::omega::operations;
use crate::shuffle::{max_product, tensor_hom, TupleEdge};
use crate::tree::{EdgeId, Forest, Tree};

/// An operation `(c₁,…,c_k) → d`, colors by index.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ThinOp {
    pub inputs: Vec<usize>,
    pub output: usize,
}

impl ThinOp {
    pub fn new(inputs: Vec<usize>, output: usize) -> ThinOp {
        ThinOp { inputs, output }
    }

    pub fn arity(&self) -> usize {
        self.inputs.len()
    }
}

pub trait FiniteOperad {
    fn color_names(&self) -> &[String];

    fn color_count(&self) -> usize {
        self.color_names().len()
    }

    fn contains(&self, op: &ThinOp) -> bool;

    /// Every operation with the given output and arity.
    fn operations_with_output(&self, output: usize, arity: usize) -> Vec<ThinOp>;

    /// No operation has more inputs than this.
    fn max_arity(&self) -> usize;

    /// Operations `inputs → output`.
    fn ops(&self, inputs: &[usize], output: usize) -> Vec<ThinOp> {
        let op = ThinOp::new(inputs.to_vec(), output);
        if self.contains(&op) {
            vec![op]
        } else {
            Vec::new()
        }
    }

    /// Operations with the given input sequence, any output.
    fn operations_from(&self, inputs: &[usize]) -> Vec<ThinOp> {
        (0..self.color_count()).flat_map(|d| self.ops(inputs, d)).collect()
    }

    fn operations(&self) -> Vec<ThinOp> {
        (0..self.color_count())
            .flat_map(|d| (0..=self.max_arity()).flat_map(move |k| self.operations_with_output(d, k)))
            .collect()
    }

    fn identity(&self, color: usize) -> ThinOp {
        ThinOp::new(vec![color], color)
    }

    /// Substitutes `inner` into input slot `slot` of `outer`.
    fn compose(&self, outer: &ThinOp, slot: usize, inner: &ThinOp) -> Result<ThinOp> {
        if outer.inputs.get(slot) != Some(&inner.output) {
            return Err(Error::Boundary(format!("slot {slot} of {outer:?} does not accept {inner:?}")));
        }
        let mut inputs = outer.inputs[..slot].to_vec();
        inputs.extend_from_slice(&inner.inputs);
        inputs.extend_from_slice(&outer.inputs[slot + 1..]);
        let op = ThinOp::new(inputs, outer.output);
        if !self.contains(&op) {
            return Err(Error::InvalidOperad(format!("composite {op:?} is missing")));
        }
        Ok(op)
    }

    /// `op·σ`: input `k` of the result is input `sigma[k]` of `op`.
    fn permute(&self, op: &ThinOp, sigma: &[usize]) -> ThinOp {
        ThinOp::new(sigma.iter().map(|&k| op.inputs[k]).collect(), op.output)
    }
}

/// The free operad `o(F)` on a forest: colors are edges, operations are cuts
/// with their inputs in any order.
#[derive(Clone, Debug)]
pub struct FreeForestOperad {
    forest: Arc<Forest>,
    edges: Vec<EdgeId>,
    names: Vec<String>,
    index: BTreeMap<EdgeId, usize>,
    /// Input sets of the cuts with a given output.
    cuts: Vec<BTreeSet<BTreeSet<usize>>>,
    max_arity: usize,
}

impl FreeForestOperad {
    pub fn new(forest: impl Into<Arc<Forest>>) -> FreeForestOperad {
        let forest: Arc<Forest> = forest.into();
        let edges: Vec<EdgeId> = forest.edges().cloned().sorted().collect();
        let index: BTreeMap<EdgeId, usize> = edges.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let mut cuts = Vec::new();
        for e in &edges {
            let (_, tree) = forest.tree_of(e).expect("edge of the forest");
            let ops = operations(tree, e).expect("edge of the tree");
            cuts.push(ops.into_iter().map(|op| op.inputs.iter().map(|x| index[x]).collect()).collect());
        }
        let max_arity = cuts.iter().flatten().map(BTreeSet::len).max().unwrap_or(0);
        let names = edges.iter().map(|e| e.to_string()).collect();
        FreeForestOperad { forest, edges, names, index, cuts, max_arity }
    }

    pub fn forest(&self) -> &Arc<Forest> {
        &self.forest
    }

    pub fn edge(&self, color: usize) -> &EdgeId {
        &self.edges[color]
    }

    pub fn color_of(&self, e: &EdgeId) -> Option<usize> {
        self.index.get(e).copied()
    }
}

impl FiniteOperad for FreeForestOperad {
    fn color_names(&self) -> &[String] {
        &self.names
    }

    fn contains(&self, op: &ThinOp) -> bool {
        let Some(cuts) = self.cuts.get(op.output) else { return false };
        let set: BTreeSet<usize> = op.inputs.iter().copied().collect();
        set.len() == op.inputs.len() && cuts.contains(&set)
    }

    fn operations_with_output(&self, output: usize, arity: usize) -> Vec<ThinOp> {
        self.cuts[output]
            .iter()
            .filter(|c| c.len() == arity)
            .flat_map(|c| c.iter().copied().permutations(arity).map(move |p| ThinOp::new(p, output)))
            .collect()
    }

    fn max_arity(&self) -> usize {
        self.max_arity
    }
}

/// A thin operad given by an explicit table, closed under symmetry and
/// composition.
#[derive(Clone, Debug)]
pub struct TableOperad {
    names: Vec<String>,
    ops: BTreeSet<ThinOp>,
    by_output: BTreeMap<(usize, usize), Vec<ThinOp>>,
    max_arity: usize,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    colors: Vec<String>,
    operations: Vec<TableEntry>,
}

#[derive(Serialize, Deserialize)]
struct TableEntry {
    inputs: Vec<String>,
    output: String,
}

impl TableOperad {
    /// Adds identities and all input permutations, then checks closure.
    pub fn new(names: Vec<String>, ops: impl IntoIterator<Item = ThinOp>) -> Result<TableOperad> {
        let n = names.len();
        if names.iter().collect::<BTreeSet<_>>().len() != n {
            return Err(Error::InvalidOperad("duplicate color names".into()));
        }
        let mut set: BTreeSet<ThinOp> = (0..n).map(|c| ThinOp::new(vec![c], c)).collect();
        for op in ops {
            if op.output >= n || op.inputs.iter().any(|&c| c >= n) {
                return Err(Error::InvalidOperad(format!("{op:?} uses an unknown color")));
            }
            let k = op.arity();
            for p in (0..k).permutations(k) {
                set.insert(ThinOp::new(p.iter().map(|&i| op.inputs[i]).collect(), op.output));
            }
        }
        let mut by_output: BTreeMap<(usize, usize), Vec<ThinOp>> = BTreeMap::new();
        for op in &set {
            by_output.entry((op.output, op.arity())).or_default().push(op.clone());
        }
        let max_arity = set.iter().map(ThinOp::arity).max().unwrap_or(0);
        let table = TableOperad { names, ops: set, by_output, max_arity };
        table.check_closed()?;
        Ok(table)
    }

    fn check_closed(&self) -> Result<()> {
        for outer in &self.ops {
            for (slot, &c) in outer.inputs.iter().enumerate() {
                for k in 0..=self.max_arity {
                    for inner in self.by_output.get(&(c, k)).into_iter().flatten() {
                        self.compose(outer, slot, inner)?;
                    }
                }
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<TableOperad> {
        let raw: TableJson = serde_json::from_str(text).map_err(|e| Error::InvalidOperad(e.to_string()))?;
        let index: BTreeMap<&str, usize> = raw.colors.iter().enumerate().map(|(i, c)| (c.as_str(), i)).collect();
        let lookup =
            |c: &str| index.get(c).copied().ok_or_else(|| Error::InvalidOperad(format!("unknown color `{c}`")));
        let ops = raw
            .operations
            .iter()
            .map(|e| Ok(ThinOp::new(e.inputs.iter().map(|c| lookup(c)).collect::<Result<_>>()?, lookup(&e.output)?)))
            .collect::<Result<Vec<_>>>()?;
        TableOperad::new(raw.colors.clone(), ops)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let operations: Vec<TableEntry> = self
            .ops
            .iter()
            .map(|op| TableEntry {
                inputs: op.inputs.iter().map(|&c| self.names[c].clone()).collect(),
                output: self.names[op.output].clone(),
            })
            .collect();
        serde_json::to_value(TableJson { colors: self.names.clone(), operations }).expect("plain data")
    }

    /// Tabulates any finite operad.
    pub fn from_operad(p: &dyn FiniteOperad) -> Result<TableOperad> {
        TableOperad::new(p.color_names().to_vec(), p.operations())
    }
}

impl FiniteOperad for TableOperad {
    fn color_names(&self) -> &[String] {
        &self.names
    }

    fn contains(&self, op: &ThinOp) -> bool {
        self.ops.contains(op)
    }

    fn operations_with_output(&self, output: usize, arity: usize) -> Vec<ThinOp> {
        self.by_output.get(&(output, arity)).cloned().unwrap_or_default()
    }

    fn max_arity(&self) -> usize {
        self.max_arity
    }
}

/// The Boardman–Vogt tensor product of the free operads on some trees.
///
/// Colors are tuples of edges; operations are read off from maps of corollas
/// into the tensor product.
#[derive(Clone, Debug)]
pub struct BVTensorOperad {
    tuples: Vec<TupleEdge>,
    names: Vec<String>,
    table: TableOperad,
}

impl BVTensorOperad {
    pub fn new(factors: &[Tree]) -> Result<BVTensorOperad> {
        let tuples: Vec<TupleEdge> = factors
            .iter()
            .map(|t| t.edges().cloned().collect::<Vec<_>>())
            .multi_cartesian_product()
            .map(TupleEdge)
            .collect();
        let index: BTreeMap<&TupleEdge, usize> = tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let max_arity = max_product(factors).len();
        let root = EdgeId::from("p");
        let mut ops = Vec::new();
        for k in 0..=max_arity {
            let leaves: Vec<EdgeId> = (0..k).map(|i| EdgeId::new(format!("x{i}")).expect("valid")).collect();
            let probe = Forest::from(Tree::corolla(root.clone(), leaves.clone())?);
            for m in tensor_hom(&probe, factors) {
                let inputs = leaves.iter().map(|x| index[&m.edge_map[x]]).collect();
                ops.push(ThinOp::new(inputs, index[&m.edge_map[&root]]));
            }
        }
        let names: Vec<String> = tuples.iter().map(|t| t.to_string()).collect();
        let table = TableOperad::new(names.clone(), ops)?;
        Ok(BVTensorOperad { tuples, names, table })
    }

    pub fn tuple(&self, color: usize) -> &TupleEdge {
        &self.tuples[color]
    }
}

impl FiniteOperad for BVTensorOperad {
    fn color_names(&self) -> &[String] {
        &self.names
    }

    fn contains(&self, op: &ThinOp) -> bool {
        self.table.contains(op)
    }

    fn operations_with_output(&self, output: usize, arity: usize) -> Vec<ThinOp> {
        self.table.operations_with_output(output, arity)
    }

    fn max_arity(&self) -> usize {
        self.table.max_arity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{parse_forest_or_tree, parse_tree};

    fn free(s: &str) -> FreeForestOperad {
        FreeForestOperad::new(parse_forest_or_tree(s).unwrap())
    }

    #[test]
    fn free_operad_on_a_corolla() {
        let p = free("r[a,b]");
        let (r, a, b) =
            (p.color_of(&"r".into()).unwrap(), p.color_of(&"a".into()).unwrap(), p.color_of(&"b".into()).unwrap());
        assert!(p.contains(&ThinOp::new(vec![a, b], r)));
        assert!(p.contains(&ThinOp::new(vec![b, a], r)));
        assert!(!p.contains(&ThinOp::new(vec![a, a], r)));
        assert!(!p.contains(&ThinOp::new(vec![a], r)));
        assert_eq!(p.operations_with_output(r, 2).len(), 2);
        assert_eq!(p.max_arity(), 2);
        assert_eq!(p.operations().len(), 3 + 2);
    }

    #[test]
    fn free_operad_composition_is_closed() {
        let p = free("{r[a[x,y],b[]];s[t]}");
        let all = p.operations();
        for outer in &all {
            for (slot, &c) in outer.inputs.iter().enumerate() {
                for inner in all.iter().filter(|o| o.output == c) {
                    let op = p.compose(outer, slot, inner).unwrap();
                    assert!(p.contains(&op));
                }
            }
        }
    }

    #[test]
    fn table_symmetrizes_and_checks_closure() {
        let json = r#"{"colors":["a","b","c"],"operations":[{"inputs":["a","b"],"output":"c"}]}"#;
        let t = TableOperad::from_json(json).unwrap();
        assert!(t.contains(&ThinOp::new(vec![1, 0], 2)));
        assert!(t.contains(&ThinOp::new(vec![0], 0)));
        let back = TableOperad::from_json(&t.to_json().to_string()).unwrap();
        assert_eq!(back.operations(), t.operations());
        let open = r#"{"colors":["a"],"operations":[{"inputs":["a","a"],"output":"a"}]}"#;
        assert!(matches!(TableOperad::from_json(open), Err(Error::InvalidOperad(_))));
        let unknown = r#"{"colors":["a"],"operations":[{"inputs":["z"],"output":"a"}]}"#;
        assert!(TableOperad::from_json(unknown).is_err());
    }

    #[test]
    fn table_of_a_free_operad_agrees() {
        let p = free("r[a[x],b[]]");
        let t = TableOperad::from_operad(&p).unwrap();
        assert_eq!(t.operations().into_iter().collect::<BTreeSet<_>>(), p.operations().into_iter().collect());
    }

    #[test]
    fn bv_tensor_with_unit_is_the_factor() {
        let s = parse_tree("r[a,b[]]").unwrap();
        let bv = BVTensorOperad::new(&[s.clone(), parse_tree("u").unwrap()]).unwrap();
        let p = FreeForestOperad::new(Forest::from(s));
        assert_eq!(bv.color_count(), p.color_count());
        assert_eq!(bv.operations().len(), p.operations().len());
    }

    #[test]
    fn bv_tensor_of_corollas() {
        let bv = BVTensorOperad::new(&[parse_tree("r[a1,a2]").unwrap(), parse_tree("q[c1,c2]").unwrap()]).unwrap();
        assert_eq!(bv.color_count(), 9);
        let root = bv.names.iter().position(|n| n == "(r|q)").unwrap();
        // The 4-ary operation from the root to all leaf tuples, in every order.
        assert_eq!(bv.operations_with_output(root, 4).len(), 24);
        assert_eq!(bv.max_arity(), 4);
    }
}
