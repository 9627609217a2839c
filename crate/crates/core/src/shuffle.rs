//! Shuffles of trees: the trees whose union is the Boardman–Vogt tensor
//! product of the free operads on the factors.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::rc::Rc;
use std::sync::Arc;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::omega::{hom, OperadMap};
use crate::tree::{EdgeId, Forest, Tree};

/// An edge of a shuffle: one edge per tensor factor.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TupleEdge(pub Vec<EdgeId>);

impl TupleEdge {
    pub fn coords(&self) -> &[EdgeId] {
        &self.0
    }

    pub fn name(&self) -> EdgeId {
        EdgeId::new(self.to_string()).expect("tuple of valid names is a valid name")
    }
}

impl fmt::Display for TupleEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join("|"))
    }
}

impl fmt::Debug for TupleEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for TupleEdge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A tree over tuple edges together with the coordinates of each edge.
///
/// Equality and ordering only look at the tree, which is canonical.
#[derive(Clone)]
pub struct Shuffle {
    tree: Tree,
    coords: BTreeMap<EdgeId, TupleEdge>,
}

impl Shuffle {
    fn from_parts(root: TupleEdge, vertices: Vec<(TupleEdge, Vec<TupleEdge>)>) -> Result<Shuffle> {
        let mut coords = BTreeMap::new();
        coords.insert(root.name(), root.clone());
        for (_, ins) in &vertices {
            for t in ins {
                coords.insert(t.name(), t.clone());
            }
        }
        let tree = Tree::from_vertices(
            root.name(),
            vertices.into_iter().map(|(o, ins)| (o.name(), ins.iter().map(TupleEdge::name).collect())),
        )?;
        Ok(Shuffle { tree, coords })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn tuple(&self, e: &EdgeId) -> Option<&TupleEdge> {
        self.coords.get(e)
    }

    pub fn root_tuple(&self) -> &TupleEdge {
        &self.coords[self.tree.root()]
    }

    pub fn tuples(&self) -> BTreeSet<TupleEdge> {
        self.coords.values().cloned().collect()
    }

    pub fn max_tuples(&self) -> BTreeSet<TupleEdge> {
        self.tree.max_edges().iter().map(|e| self.coords[e].clone()).collect()
    }

    /// The tree with `stumps` added over the named leaf tuples.
    pub fn add_stumps(&self, stumps: &BTreeSet<TupleEdge>) -> Result<Shuffle> {
        let names = stumps.iter().map(TupleEdge::name).collect();
        Ok(Shuffle { tree: self.tree.add_stumps(&names)?, coords: self.coords.clone() })
    }

    /// Leaves whose tuple lies in `set`.
    pub fn leaves_in(&self, set: &BTreeSet<TupleEdge>) -> BTreeSet<TupleEdge> {
        self.tree.leaves().iter().map(|e| &self.coords[e]).filter(|t| set.contains(*t)).cloned().collect()
    }

    /// Replaces every tuple by its image under `f`.
    fn map_tuples(&self, mut f: impl FnMut(&TupleEdge) -> TupleEdge) -> Result<Shuffle> {
        let root = f(self.root_tuple());
        let vertices = self
            .tree
            .vertices()
            .map(|v| (f(&self.coords[&v.out_edge]), v.in_edges.iter().map(|e| f(&self.coords[e])).collect()))
            .collect();
        Shuffle::from_parts(root, vertices)
    }
}

impl PartialEq for Shuffle {
    fn eq(&self, other: &Self) -> bool {
        self.tree == other.tree
    }
}

impl Eq for Shuffle {}

impl PartialOrd for Shuffle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Shuffle {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.tree.cmp(&other.tree)
    }
}

impl std::hash::Hash for Shuffle {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.tree.hash(state)
    }
}

impl fmt::Display for Shuffle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.tree, f)
    }
}

impl fmt::Debug for Shuffle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Shuffle({})", self.tree)
    }
}

impl Serialize for Shuffle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.tree.serialize(s)
    }
}

type VertexList = Vec<(TupleEdge, Vec<TupleEdge>)>;

struct Generator<'a> {
    factors: &'a [Tree],
    memo: HashMap<TupleEdge, Rc<Vec<Rc<VertexList>>>>,
}

impl Generator<'_> {
    /// All ways to grow a shuffle above `t`, as vertex lists.
    fn above(&mut self, t: &TupleEdge) -> Rc<Vec<Rc<VertexList>>> {
        if let Some(r) = self.memo.get(t) {
            return r.clone();
        }
        let movable: Vec<usize> =
            (0..t.0.len()).filter(|&i| self.factors[i].inputs(&t.0[i]).is_some_and(|ins| !ins.is_empty())).collect();
        let mut out: Vec<Rc<VertexList>> = Vec::new();
        if movable.is_empty() {
            let stumped = (0..t.0.len()).any(|i| self.factors[i].is_stump_edge(&t.0[i]));
            out.push(Rc::new(if stumped { vec![(t.clone(), Vec::new())] } else { Vec::new() }));
        }
        for i in movable {
            let children: Vec<TupleEdge> = self.factors[i]
                .inputs(&t.0[i])
                .expect("movable")
                .iter()
                .map(|c| {
                    let mut coords = t.0.clone();
                    coords[i] = c.clone();
                    TupleEdge(coords)
                })
                .collect();
            let options: Vec<Rc<Vec<Rc<VertexList>>>> = children.iter().map(|c| self.above(c)).collect();
            for pick in options.iter().map(|o| o.iter()).multi_cartesian_product() {
                let mut verts = vec![(t.clone(), children.clone())];
                for part in pick {
                    verts.extend(part.iter().cloned());
                }
                out.push(Rc::new(verts));
            }
        }
        let out = Rc::new(out);
        self.memo.insert(t.clone(), out.clone());
        out
    }
}

/// All shuffles of the given trees, sorted and duplicate free.
///
/// At a tuple edge the generator branches on every coordinate that still has
/// a non-stump vertex above it. Once none is left the tuple is maximal: it is
/// closed by one stump if some coordinate is a stump edge, and is a leaf
/// otherwise.
pub fn shuffles(factors: &[Tree]) -> Vec<Shuffle> {
    if factors.is_empty() {
        return Vec::new();
    }
    let root = TupleEdge(factors.iter().map(|t| t.root().clone()).collect());
    let mut gen = Generator { factors, memo: HashMap::new() };
    let all = gen.above(&root);
    let set: BTreeSet<Shuffle> = all
        .iter()
        .map(|verts| Shuffle::from_parts(root.clone(), verts.as_ref().clone()).expect("generated shuffle is a tree"))
        .collect();
    set.into_iter().collect()
}

/// Number of shuffles, without materializing them beyond the memo table.
pub fn shuffle_count(factors: &[Tree]) -> u128 {
    fn go(factors: &[Tree], t: &TupleEdge, memo: &mut HashMap<TupleEdge, u128>) -> u128 {
        if let Some(&c) = memo.get(t) {
            return c;
        }
        let mut total = 0u128;
        let mut any = false;
        for i in 0..t.0.len() {
            let Some(ins) = factors[i].inputs(&t.0[i]).filter(|ins| !ins.is_empty()) else { continue };
            any = true;
            let mut prod = 1u128;
            for c in ins {
                let mut coords = t.0.clone();
                coords[i] = c.clone();
                prod = prod.saturating_mul(go(factors, &TupleEdge(coords), memo));
            }
            total = total.saturating_add(prod);
        }
        let c = if any { total } else { 1 };
        memo.insert(t.clone(), c);
        c
    }
    if factors.is_empty() {
        return 0;
    }
    let root = TupleEdge(factors.iter().map(|t| t.root().clone()).collect());
    go(factors, &root, &mut HashMap::new())
}

/// `∏ᵢ max(Sᵢ)` as tuples.
pub fn max_product(factors: &[Tree]) -> BTreeSet<TupleEdge> {
    factors
        .iter()
        .map(|t| t.max_edges().into_iter().collect::<Vec<_>>())
        .multi_cartesian_product()
        .map(TupleEdge)
        .collect()
}

/// The intersection `A_α` of a nonempty family of shuffles of the same factors.
///
/// Its edges are the common tuples; the parent of a tuple is its nearest
/// common ancestor, which must agree across the family.
pub fn intersect(alpha: &[Shuffle]) -> Result<Shuffle> {
    let (first, rest) = alpha.split_first().ok_or(Error::EmptySubset)?;
    let mut common: BTreeSet<EdgeId> = first.tree.edge_set();
    for s in rest {
        let other = s.tree.edge_set();
        common.retain(|e| other.contains(e));
    }
    if !common.contains(first.tree.root()) {
        return Err(Error::Internal("shuffles do not share a root".into()));
    }
    let induced_parent = |s: &Shuffle, e: &EdgeId| -> Option<EdgeId> {
        let mut cur = s.tree.parent(e)?;
        while !common.contains(cur) {
            cur = s.tree.parent(cur)?;
        }
        Some(cur.clone())
    };
    let mut children: BTreeMap<EdgeId, Vec<EdgeId>> = BTreeMap::new();
    for e in &common {
        let p = induced_parent(first, e);
        for s in rest {
            if induced_parent(s, e) != p {
                return Err(Error::Internal(format!("tuple {e} has different induced parents")));
            }
        }
        if let Some(p) = p {
            children.entry(p).or_default().push(e.clone());
        }
    }
    for e in &common {
        if !children.contains_key(e) && first.tree.is_stump_edge(e) {
            if rest.iter().any(|s| !s.tree.is_stump_edge(e)) {
                return Err(Error::Internal(format!("tuple {e} is a stump in only some shuffles")));
            }
            children.insert(e.clone(), Vec::new());
        }
    }
    let tree = Tree::from_vertices(first.tree.root().clone(), children)
        .map_err(|e| Error::Internal(format!("intersection is not tree shaped: {e}")))?;
    let coords = common.iter().map(|e| (e.clone(), first.coords[e].clone())).collect();
    Ok(Shuffle { tree, coords })
}

/// The inclusion of `A_α` into `A_β` for `β ⊆ α`, as an operad map.
pub fn inclusion(smaller: &Shuffle, larger: &Shuffle) -> OperadMap {
    let edge_map = smaller.tree.edges().map(|e| (e.clone(), e.clone())).collect();
    OperadMap::from_edge_map(
        Arc::new(Forest::from(smaller.tree.clone())),
        Arc::new(Forest::from(larger.tree.clone())),
        edge_map,
    )
}

/// Whether `f` looks like a composite of inner faces: injective on edges,
/// preserving the root and every maximal edge, missing only inner edges.
pub fn is_inner_face(f: &OperadMap) -> bool {
    let (Some(s), Some(t)) = (f.source().components().first(), f.target().components().first()) else {
        return false;
    };
    if f.source().components().len() != 1 || f.target().components().len() != 1 {
        return false;
    }
    if !f.is_edge_injective() || f.apply(s.root()) != Some(t.root()) {
        return false;
    }
    let image: BTreeSet<&EdgeId> = f.edge_map().values().collect();
    let max_ok =
        s.max_edges().iter().map(|e| &f.edge_map()[e]).collect::<BTreeSet<_>>() == t.max_edges().iter().collect();
    max_ok && t.edges().filter(|e| !image.contains(e)).all(|e| t.is_inner(e))
}

/// `A ↦ A[Ē_i]`: pairs each shuffle of `factors` with a shuffle of the factors
/// where `Sᵢ` gets a stump over its leaf `e`.
pub fn stump_transport(factors: &[Tree], i: usize, e: &EdgeId) -> Result<Vec<(Shuffle, Shuffle)>> {
    let factor = factors.get(i).ok_or_else(|| Error::Internal(format!("no factor {i}")))?;
    if !factor.contains(e) {
        return Err(Error::UnknownEdge(e.clone()));
    }
    if !factor.is_leaf(e) {
        return Err(Error::NotLeaf(e.clone()));
    }
    let e_i: BTreeSet<TupleEdge> = factors
        .iter()
        .enumerate()
        .map(|(j, t)| if j == i { vec![e.clone()] } else { t.leaves().into_iter().collect() })
        .multi_cartesian_product()
        .map(TupleEdge)
        .collect();
    shuffles(factors)
        .into_iter()
        .map(|a| {
            let b = a.add_stumps(&a.leaves_in(&e_i))?;
            Ok((a, b))
        })
        .collect()
}

/// The factors with a stump added over leaf `e` of factor `i`.
pub fn stumped_factors(factors: &[Tree], i: usize, e: &EdgeId) -> Result<Vec<Tree>> {
    let mut out = factors.to_vec();
    out[i] = out[i].add_stumps(&BTreeSet::from([e.clone()]))?;
    Ok(out)
}

/// Result of decomposing shuffles through the interiors of the factors.
#[derive(Clone, Debug)]
pub struct InteriorDecomposition {
    /// Tuples of interior leaves with at least one coordinate a stump edge.
    pub stumped: BTreeSet<TupleEdge>,
    /// `(A°, A°[Ē])` for every shuffle `A°` of the interiors.
    pub pairing: Vec<(Shuffle, Shuffle)>,
}

pub fn interior_decomposition(factors: &[Tree]) -> Result<InteriorDecomposition> {
    let interiors: Vec<Tree> = factors.iter().map(|t| t.interior().0).collect();
    let stumped: BTreeSet<TupleEdge> = interiors
        .iter()
        .map(|t| t.leaves().into_iter().collect::<Vec<_>>())
        .multi_cartesian_product()
        .filter(|coords| coords.iter().zip(factors).any(|(e, t)| t.is_stump_edge(e)))
        .map(TupleEdge)
        .collect();
    let pairing = shuffles(&interiors)
        .into_iter()
        .map(|a| {
            let b = a.add_stumps(&a.leaves_in(&stumped))?;
            Ok((a, b))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(InteriorDecomposition { stumped, pairing })
}

/// A nested grouping of factor indices, e.g. `0,(1,2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bracketing {
    Factor(usize),
    Group(Vec<Bracketing>),
}

impl Bracketing {
    pub fn parse(text: &str) -> Result<Bracketing> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let items = parse_items(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Bracketing(format!("unexpected `{}` at {pos}", chars[pos])));
        }
        let b = Bracketing::Group(items);
        b.check()?;
        Ok(b)
    }

    fn flatten(&self, out: &mut Vec<usize>) {
        match self {
            Bracketing::Factor(i) => out.push(*i),
            Bracketing::Group(g) => g.iter().for_each(|b| b.flatten(out)),
        }
    }

    /// Factors must appear as `0..n` in order, and groups must be nonempty.
    pub fn check(&self) -> Result<()> {
        fn nonempty(b: &Bracketing) -> bool {
            match b {
                Bracketing::Factor(_) => true,
                Bracketing::Group(g) => !g.is_empty() && g.iter().all(nonempty),
            }
        }
        if !nonempty(self) {
            return Err(Error::Bracketing("empty group".into()));
        }
        let mut order = Vec::new();
        self.flatten(&mut order);
        if order.iter().copied().ne(0..order.len()) {
            return Err(Error::Bracketing(format!("factors must appear in order, found {order:?}")));
        }
        Ok(())
    }

    pub fn factor_count(&self) -> usize {
        let mut v = Vec::new();
        self.flatten(&mut v);
        v.len()
    }
}

fn parse_items(chars: &[char], pos: &mut usize) -> Result<Vec<Bracketing>> {
    let mut items = Vec::new();
    loop {
        match chars.get(*pos) {
            Some('(') => {
                *pos += 1;
                let inner = parse_items(chars, pos)?;
                if chars.get(*pos) != Some(&')') {
                    return Err(Error::Bracketing(format!("missing `)` at {}", *pos)));
                }
                *pos += 1;
                items.push(Bracketing::Group(inner));
            }
            Some(c) if c.is_ascii_digit() => {
                let start = *pos;
                while chars.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
                    *pos += 1;
                }
                let s: String = chars[start..*pos].iter().collect();
                items.push(Bracketing::Factor(s.parse().map_err(|_| Error::Bracketing(s.clone()))?));
            }
            other => return Err(Error::Bracketing(format!("expected a factor or group at {}, found {other:?}", *pos))),
        }
        match chars.get(*pos) {
            Some(',') => *pos += 1,
            _ => return Ok(items),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AssocInclusion {
    /// Shuffles built by shuffling groups recursively, tuples flattened.
    pub k: Vec<Shuffle>,
    /// Shuffles of the flat product.
    pub j: Vec<Shuffle>,
    /// `injection[x]` is the index in `j` of `k[x]`.
    pub injection: Vec<usize>,
}

pub fn assoc_inclusion(factors: &[Tree], bracketing: &Bracketing) -> Result<AssocInclusion> {
    bracketing.check()?;
    if bracketing.factor_count() != factors.len() {
        return Err(Error::Bracketing(format!(
            "bracketing has {} factors, got {} trees",
            bracketing.factor_count(),
            factors.len()
        )));
    }
    let j = shuffles(factors);
    let k = grouped_shuffles(factors, bracketing)?;
    let index: BTreeMap<&Shuffle, usize> = j.iter().enumerate().map(|(x, s)| (s, x)).collect();
    let injection = k
        .iter()
        .map(|s| {
            index.get(s).copied().ok_or_else(|| Error::Internal(format!("grouped shuffle {s} is not a flat shuffle")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AssocInclusion { k, j, injection })
}

fn grouped_shuffles(factors: &[Tree], b: &Bracketing) -> Result<Vec<Shuffle>> {
    match b {
        Bracketing::Factor(i) => {
            let t = &factors[*i];
            let s = Shuffle {
                tree: t.rename(|e| TupleEdge(vec![e.clone()]).name())?,
                coords: t.edges().map(|e| (TupleEdge(vec![e.clone()]).name(), TupleEdge(vec![e.clone()]))).collect(),
            };
            Ok(vec![s])
        }
        Bracketing::Group(items) => {
            let parts = items.iter().map(|x| grouped_shuffles(factors, x)).collect::<Result<Vec<_>>>()?;
            let mut out = BTreeSet::new();
            for pick in parts.iter().map(|p| p.iter()).multi_cartesian_product() {
                let trees: Vec<Tree> = pick.iter().map(|s| s.tree.clone()).collect();
                for s in shuffles(&trees) {
                    let flat = s.map_tuples(|t| {
                        TupleEdge(t.0.iter().zip(&pick).flat_map(|(e, p)| p.coords[e].0.clone()).collect())
                    })?;
                    out.insert(flat);
                }
            }
            Ok(out.into_iter().collect())
        }
    }
}

/// An operad map from `o(F)` into the Boardman–Vogt tensor of the factors,
/// recorded by where edges and vertices land.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TensorMap {
    pub edge_map: BTreeMap<EdgeId, TupleEdge>,
    /// Vertex (by out-edge) to the output tuple and input tuples of its image.
    pub vertex_map: BTreeMap<EdgeId, (TupleEdge, BTreeSet<TupleEdge>)>,
}

impl TensorMap {
    fn from_map(f: &OperadMap, shuffle: &Shuffle) -> TensorMap {
        let edge_map = f.edge_map().iter().map(|(e, t)| (e.clone(), shuffle.coords[t].clone())).collect();
        let vertex_map = f
            .vertex_map()
            .iter()
            .map(|(v, op)| {
                let ins = op.inputs.iter().map(|e| shuffle.coords[e].clone()).collect();
                (v.clone(), (shuffle.coords[&op.output].clone(), ins))
            })
            .collect();
        TensorMap { edge_map, vertex_map }
    }

    fn merge(mut self, other: &TensorMap) -> TensorMap {
        self.edge_map.extend(other.edge_map.iter().map(|(k, v)| (k.clone(), v.clone())));
        self.vertex_map.extend(other.vertex_map.iter().map(|(k, v)| (k.clone(), v.clone())));
        self
    }

    /// Applies a permutation to every tuple: coordinate `i` moves to `perm[i]`.
    pub fn permute_coords(&self, perm: &[usize]) -> TensorMap {
        let p = |t: &TupleEdge| {
            let mut out = t.0.clone();
            for (i, e) in t.0.iter().enumerate() {
                out[perm[i]] = e.clone();
            }
            TupleEdge(out)
        };
        TensorMap {
            edge_map: self.edge_map.iter().map(|(k, v)| (k.clone(), p(v))).collect(),
            vertex_map: self
                .vertex_map
                .iter()
                .map(|(k, (o, ins))| (k.clone(), (p(o), ins.iter().map(p).collect())))
                .collect(),
        }
    }
}

/// `Hom(o(F), o(S₁) ⊗ … ⊗ o(Sₙ))`, sorted and deduplicated.
///
/// A tree maps into the tensor through some shuffle; a forest maps each
/// component independently.
pub fn tensor_hom(source: &Forest, factors: &[Tree]) -> Vec<TensorMap> {
    let all = shuffles(factors);
    let mut acc: Vec<TensorMap> = vec![TensorMap { edge_map: BTreeMap::new(), vertex_map: BTreeMap::new() }];
    for comp in source.components() {
        let comp_forest = Forest::from(comp.clone());
        let mut maps = BTreeSet::new();
        for s in &all {
            for f in hom(&comp_forest, &Forest::from(s.tree.clone())) {
                maps.insert(TensorMap::from_map(&f, s));
            }
        }
        acc = acc.iter().cartesian_product(maps.iter()).map(|(a, m)| a.clone().merge(m)).collect();
    }
    acc.sort();
    acc.dedup();
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega::validate;
    use crate::tree::parse_tree;

    fn t(s: &str) -> Tree {
        parse_tree(s).unwrap()
    }

    /// Lattice paths: interleavings of chains with the given vertex counts.
    fn multinomial_dp(lens: &[usize]) -> u128 {
        let mut memo: HashMap<Vec<usize>, u128> = HashMap::new();
        fn go(rem: Vec<usize>, memo: &mut HashMap<Vec<usize>, u128>) -> u128 {
            if rem.iter().all(|&x| x == 0) {
                return 1;
            }
            if let Some(&v) = memo.get(&rem) {
                return v;
            }
            let mut total = 0;
            for i in 0..rem.len() {
                if rem[i] > 0 {
                    let mut next = rem.clone();
                    next[i] -= 1;
                    total += go(next, memo);
                }
            }
            memo.insert(rem, total);
            total
        }
        go(lens.to_vec(), &mut memo)
    }

    #[test]
    fn linear_chains_match_lattice_paths() {
        assert_eq!(shuffles(&[Tree::linear("a", 2), Tree::linear("b", 1)]).len(), 3);
        for m in 0..=4 {
            for n in 0..=4 {
                let f = [Tree::linear("a", m), Tree::linear("b", n)];
                assert_eq!(shuffles(&f).len() as u128, multinomial_dp(&[m, n]), "{m},{n}");
                assert_eq!(shuffle_count(&f), multinomial_dp(&[m, n]));
            }
        }
        let f = [Tree::linear("a", 2), Tree::linear("b", 1), Tree::linear("c", 2)];
        assert_eq!(shuffles(&f).len() as u128, multinomial_dp(&[2, 1, 2]));
    }

    #[test]
    fn corolla_percolations() {
        let s = shuffles(&[t("r[a1,a2]"), t("q[c1,c2]")]);
        assert_eq!(s.len(), 2);
        for a in &s {
            assert_eq!(a.root_tuple().to_string(), "(r|q)");
            assert_eq!(a.max_tuples(), max_product(&[t("r[a1,a2]"), t("q[c1,c2]")]));
            assert_eq!(a.tree.vertex_count(), 3);
        }
    }

    #[test]
    fn unit_factor_relabels() {
        let s = t("r[a[x,y],b[]]");
        let out = shuffles(&[s.clone(), t("u")]);
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].to_string(), "(r|u)[(a|u)[(x|u),(y|u)],(b|u)[]]");
    }

    #[test]
    fn stump_against_corolla_closes_after_branching() {
        let f = [t("s[]"), t("q[c1,c2]")];
        let out = shuffles(&f);
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].to_string(), "(s|q)[(s|c1)[],(s|c2)[]]");
        assert_eq!(out[0].max_tuples(), max_product(&f));
    }

    #[test]
    fn intersection_of_percolations_is_the_corolla() {
        let s = shuffles(&[t("r[a1,a2]"), t("q[c1,c2]")]);
        let meet = intersect(&s).unwrap();
        assert_eq!(meet.tree.vertex_count(), 1);
        assert_eq!(meet.tree.leaves().len(), 4);
        assert_eq!(meet.root_tuple().to_string(), "(r|q)");
        for a in &s {
            let f = inclusion(&meet, a);
            validate(&f).unwrap();
            assert!(is_inner_face(&f));
        }
        assert_eq!(intersect(&s[..1]).unwrap(), s[0]);
        assert!(matches!(intersect(&[]), Err(Error::EmptySubset)));
    }

    #[test]
    fn stump_transport_cases() {
        let pairs = stump_transport(&[t("u"), t("v")], 0, &EdgeId::from("u")).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].1.to_string(), "(u|v)[]");

        let f = [t("r[a1,a2]"), t("q[c1,c2]")];
        for leaf in ["a1", "a2"] {
            let e = EdgeId::from(leaf);
            let pairs = stump_transport(&f, 0, &e).unwrap();
            let image: BTreeSet<Shuffle> = pairs.iter().map(|p| p.1.clone()).collect();
            let expected: BTreeSet<Shuffle> = shuffles(&stumped_factors(&f, 0, &e).unwrap()).into_iter().collect();
            assert_eq!(image.len(), 2);
            assert_eq!(image, expected);
        }
        assert!(matches!(stump_transport(&f, 0, &EdgeId::from("r")), Err(Error::NotLeaf(_))));
    }

    #[test]
    fn interior_decomposition_cases() {
        let open = [t("r[a,b]"), t("q[c]")];
        let d = interior_decomposition(&open).unwrap();
        assert!(d.stumped.is_empty());
        assert!(d.pairing.iter().all(|(a, b)| a == b));

        let f = [t("r[a[],b]"), t("u")];
        let d = interior_decomposition(&f).unwrap();
        assert_eq!(d.stumped, BTreeSet::from([TupleEdge(vec!["a".into(), "u".into()])]));
        let image: BTreeSet<Shuffle> = d.pairing.iter().map(|p| p.1.clone()).collect();
        assert_eq!(image, shuffles(&f).into_iter().collect());
    }

    #[test]
    fn associativity_inclusions() {
        let f = [Tree::linear("r", 1), Tree::linear("s", 1), Tree::linear("t", 1)];
        let inc = assoc_inclusion(&f, &Bracketing::parse("0,(1,2)").unwrap()).unwrap();
        assert_eq!(inc.j.len(), 6);
        assert!(inc.k.len() <= inc.j.len());
        assert_eq!(inc.injection.iter().collect::<BTreeSet<_>>().len(), inc.k.len());
        let whole = assoc_inclusion(&f, &Bracketing::parse("(0,1,2)").unwrap()).unwrap();
        assert_eq!(whole.k, whole.j);
        let single = assoc_inclusion(&f, &Bracketing::parse("0,(1),2").unwrap()).unwrap();
        assert_eq!(single.k, single.j);
    }

    #[test]
    fn bracketing_errors() {
        assert!(Bracketing::parse("0,(1,2").is_err());
        assert!(Bracketing::parse("1,0").is_err());
        assert!(Bracketing::parse("0,()").is_err());
        assert!(Bracketing::parse("0,,1").is_err());
    }

    #[test]
    fn tensor_hom_cases() {
        let c2 = t("r[a1,a2]");
        assert_eq!(tensor_hom(&Forest::from(c2.clone()), &[c2.clone(), t("u")]).len(), 2);
        let s = t("r[a[x,y],b[]]");
        let eta = Forest::from(t("e"));
        let colors = tensor_hom(&eta, &[s.clone(), c2.clone()]);
        assert_eq!(colors.len(), s.edge_count() * c2.edge_count());
        let f = Forest::from(t("p[q]"));
        assert_eq!(tensor_hom(&f, std::slice::from_ref(&s)).len(), hom(&f, &Forest::from(s)).len());
        assert_eq!(tensor_hom(&Forest::empty(), &[c2]).len(), 1);
    }

    #[test]
    fn tensor_hom_is_symmetric_in_the_factors() {
        let a = t("r[a1,a2]");
        let b = t("q[c[]]");
        let f = Forest::from(t("p[x,y]"));
        let ab = tensor_hom(&f, &[a.clone(), b.clone()]);
        let ba: BTreeSet<TensorMap> = tensor_hom(&f, &[b, a]).into_iter().collect();
        let swapped: BTreeSet<TensorMap> = ab.iter().map(|m| m.permute_coords(&[1, 0])).collect();
        assert_eq!(swapped, ba);
    }
}
