//! Operad maps `o(F) → P` out of free forest operads.
//!
//! Such a map is a coloring of the edges of `F` together with an operation of
//! `P` for every vertex, its inputs listed in the vertex's in-edge order.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::operad::{FiniteOperad, FreeForestOperad, ThinOp};
use crate::error::{Error, Result};
use crate::omega::{OperadMap, Operation};
use crate::tree::{EdgeId, Forest, Tree};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GenMap {
    pub colors: BTreeMap<EdgeId, usize>,
    /// Keyed by the out-edge of the vertex.
    pub ops: BTreeMap<EdgeId, ThinOp>,
}

impl GenMap {
    /// The part of the map living on `tree`.
    pub fn restrict(&self, tree: &Tree) -> GenMap {
        GenMap {
            colors: tree.edges().map(|e| (e.clone(), self.colors[e])).collect(),
            ops: tree.vertices().map(|v| (v.out_edge.clone(), self.ops[&v.out_edge].clone())).collect(),
        }
    }

    fn merge(mut self, other: &GenMap) -> GenMap {
        self.colors.extend(other.colors.iter().map(|(k, v)| (k.clone(), *v)));
        self.ops.extend(other.ops.iter().map(|(k, v)| (k.clone(), v.clone())));
        self
    }

    /// Reads an operad map into a forest as a map into its free operad.
    pub fn from_operad_map(f: &OperadMap, p: &FreeForestOperad) -> GenMap {
        let src = f.source();
        let colors = f.edge_map().iter().map(|(e, t)| (e.clone(), p.color_of(t).expect("target edge"))).collect();
        let ops = src
            .vertices()
            .map(|v| {
                let inputs = v.in_edges.iter().map(|e| p.color_of(&f.edge_map()[e]).expect("target edge")).collect();
                (v.out_edge.clone(), ThinOp::new(inputs, p.color_of(&f.edge_map()[&v.out_edge]).expect("target edge")))
            })
            .collect();
        GenMap { colors, ops }
    }
}

fn tree_maps(tree: &Tree, p: &dyn FiniteOperad) -> Vec<GenMap> {
    // Vertices in breadth-first order, so each out-edge is colored before its vertex.
    let order: Vec<EdgeId> = tree.subtree_edges(tree.root()).into_iter().filter(|e| tree.inputs(e).is_some()).collect();
    let mut out = Vec::new();
    for root_color in 0..p.color_count() {
        let mut current = GenMap::default();
        current.colors.insert(tree.root().clone(), root_color);
        extend(tree, p, &order, 0, &mut current, &mut out);
    }
    out
}

fn extend(tree: &Tree, p: &dyn FiniteOperad, order: &[EdgeId], at: usize, current: &mut GenMap, out: &mut Vec<GenMap>) {
    let Some(v) = order.get(at) else {
        out.push(current.clone());
        return;
    };
    let ins = tree.inputs(v).expect("vertex");
    for op in p.operations_with_output(current.colors[v], ins.len()) {
        for (e, &c) in ins.iter().zip(&op.inputs) {
            current.colors.insert(e.clone(), c);
        }
        current.ops.insert(v.clone(), op);
        extend(tree, p, order, at + 1, current, out);
    }
    current.ops.remove(v);
    for e in ins {
        current.colors.remove(e);
    }
}

/// `Hom(o(F), P)`, sorted.
pub fn gen_hom(forest: &Forest, p: &dyn FiniteOperad) -> Vec<GenMap> {
    let mut acc = vec![GenMap::default()];
    for t in forest.components() {
        let maps = tree_maps(t, p);
        acc = acc.iter().flat_map(|a| maps.iter().map(move |m| a.clone().merge(m))).collect();
    }
    acc.sort();
    acc
}

/// `|Hom(o(F), P)|` by dynamic programming over edges and colors.
pub fn gen_hom_count(forest: &Forest, p: &dyn FiniteOperad) -> u128 {
    fn count(
        tree: &Tree,
        p: &dyn FiniteOperad,
        e: &EdgeId,
        c: usize,
        memo: &mut HashMap<(EdgeId, usize), u128>,
    ) -> u128 {
        let Some(ins) = tree.inputs(e) else { return 1 };
        if let Some(&v) = memo.get(&(e.clone(), c)) {
            return v;
        }
        let mut total = 0u128;
        for op in p.operations_with_output(c, ins.len()) {
            let mut prod = 1u128;
            for (child, &cc) in ins.iter().zip(&op.inputs) {
                prod = prod.saturating_mul(count(tree, p, child, cc, memo));
                if prod == 0 {
                    break;
                }
            }
            total = total.saturating_add(prod);
        }
        memo.insert((e.clone(), c), total);
        total
    }
    let mut memo = HashMap::new();
    forest
        .components()
        .iter()
        .map(|t| (0..p.color_count()).map(|c| count(t, p, t.root(), c, &mut memo)).fold(0u128, u128::saturating_add))
        .fold(1u128, u128::saturating_mul)
}

/// Evaluates `g` on a cut `op` of `tree`, listing inputs in `input_order`.
pub fn apply_cut(
    p: &dyn FiniteOperad,
    g: &GenMap,
    tree: &Tree,
    op: &Operation,
    input_order: &[EdgeId],
) -> Result<ThinOp> {
    fn eval(
        p: &dyn FiniteOperad,
        g: &GenMap,
        tree: &Tree,
        op: &Operation,
        e: &EdgeId,
    ) -> Result<(ThinOp, Vec<EdgeId>)> {
        let color = *g.colors.get(e).ok_or_else(|| Error::UnknownEdge(e.clone()))?;
        if op.inputs.contains(e) {
            return Ok((p.identity(color), vec![e.clone()]));
        }
        let ins = tree.inputs(e).ok_or_else(|| Error::Mismatch(format!("{op} is not a cut: reached leaf {e}")))?;
        let mut result = g.ops[e].clone();
        let mut edges: Vec<EdgeId> = Vec::new();
        for (slot, child) in ins.iter().enumerate().rev() {
            let (inner, inner_edges) = eval(p, g, tree, op, child)?;
            result = p.compose(&result, slot, &inner)?;
            let mut block = inner_edges;
            block.extend(edges);
            edges = block;
        }
        Ok((result, edges))
    }
    let (result, edges) = eval(p, g, tree, op, &op.output)?;
    if edges.len() != input_order.len() {
        return Err(Error::Mismatch(format!("{op} has {} inputs, {} requested", edges.len(), input_order.len())));
    }
    let sigma = input_order
        .iter()
        .map(|e| {
            edges.iter().position(|x| x == e).ok_or_else(|| Error::Mismatch(format!("{e} is not an input of {op}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(p.permute(&result, &sigma))
}

/// `g ∘ o(f)` for an operad map `f: F' → F` and `g: o(F) → P`.
pub fn precompose(p: &dyn FiniteOperad, g: &GenMap, f: &OperadMap) -> Result<GenMap> {
    let colors = f
        .edge_map()
        .iter()
        .map(|(e, t)| Ok((e.clone(), *g.colors.get(t).ok_or_else(|| Error::UnknownEdge(t.clone()))?)))
        .collect::<Result<_>>()?;
    let mut ops = BTreeMap::new();
    for v in f.source().vertices() {
        let image = &f.vertex_map()[&v.out_edge];
        let (_, tree) = f.target().tree_of(&image.output)?;
        let order: Vec<EdgeId> = v.in_edges.iter().map(|e| f.edge_map()[e].clone()).collect();
        ops.insert(v.out_edge.clone(), apply_cut(p, g, tree, image, &order)?);
    }
    Ok(GenMap { colors, ops })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega::{hom, hom_count};
    use crate::tree::parse_forest_or_tree;

    fn forest(s: &str) -> Forest {
        parse_forest_or_tree(s).unwrap()
    }

    #[test]
    fn agrees_with_omega_hom_on_free_targets() {
        let cases = [("e", "r[a,b[]]"), ("r[a,b]", "s[x[p,q],y]"), ("{a[b];c}", "r[s[t]]"), ("r[a[]]", "{x[y[]];z}")];
        for (src, tgt) in cases {
            let (f, g) = (forest(src), forest(tgt));
            let p = FreeForestOperad::new(g.clone());
            let maps = gen_hom(&f, &p);
            let mut via_omega: Vec<GenMap> = hom(&f, &g).iter().map(|m| GenMap::from_operad_map(m, &p)).collect();
            via_omega.sort();
            assert_eq!(maps, via_omega, "{src} -> {tgt}");
            assert_eq!(gen_hom_count(&f, &p), hom_count(&f, &g));
        }
    }

    #[test]
    fn empty_forest_has_one_map() {
        let p = FreeForestOperad::new(forest("r[a]"));
        assert_eq!(gen_hom(&Forest::empty(), &p), vec![GenMap::default()]);
        assert_eq!(gen_hom_count(&Forest::empty(), &p), 1);
    }

    #[test]
    fn precomposition_matches_composition_of_operad_maps() {
        let (a, b, c) = (forest("s[t[u]]"), forest("r[a[x,y],b]"), forest("q[w[v,z],k[]]"));
        let p = FreeForestOperad::new(c.clone());
        for f in hom(&a, &b) {
            for g in hom(&b, &c).into_iter().take(20) {
                let gm = GenMap::from_operad_map(&g, &p);
                let composite = crate::omega::compose(&f, &g).unwrap();
                assert_eq!(precompose(&p, &gm, &f).unwrap(), GenMap::from_operad_map(&composite, &p));
            }
        }
    }
}
