//! Finite rooted trees with stumps, forests, and tree surgery.
//!
//! A [`Tree`] is stored as a map from the outgoing edge of each vertex to the
//! sorted list of its incoming edges. A vertex with no incoming edges is a
//! stump. Because children are kept sorted by name, the derived equality is
//! structural equality of named trees, and [`Display`](std::fmt::Display)
//! produces a canonical string.

use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Characters that delimit names in the text grammar.
const DELIMITERS: &[char] = &['[', ']', ',', ';', '{', '}'];

/// Name of an edge. Edges double as the colors of the free operad on a tree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(Arc<str>);

impl EdgeId {
    /// Builds a name, rejecting empty strings, whitespace and grammar delimiters.
    pub fn new(name: impl AsRef<str>) -> Result<Self> {
        let name = name.as_ref();
        if name.is_empty() || name.chars().any(|c| c.is_whitespace() || DELIMITERS.contains(&c)) {
            return Err(Error::InvalidName(name.to_string()));
        }
        Ok(EdgeId(Arc::from(name)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for EdgeId {
    /// Panics on an invalid name; use [`EdgeId::new`] for untrusted input.
    fn from(s: &str) -> Self {
        EdgeId::new(s).expect("invalid edge name")
    }
}

impl Borrow<str> for EdgeId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl Serialize for EdgeId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for EdgeId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        EdgeId::new(&s).map_err(serde::de::Error::custom)
    }
}

/// A vertex, identified by its outgoing edge.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub out_edge: EdgeId,
    pub in_edges: Vec<EdgeId>,
}

impl Vertex {
    pub fn is_stump(&self) -> bool {
        self.in_edges.is_empty()
    }
}

/// A finite rooted tree, possibly with stumps.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree {
    root: EdgeId,
    /// out edge -> sorted in edges
    vertices: BTreeMap<EdgeId, Vec<EdgeId>>,
    /// edge -> out edge of the vertex it enters
    parent: BTreeMap<EdgeId, EdgeId>,
}

impl Tree {
    /// The unit tree η: one edge, no vertices.
    pub fn eta(root: EdgeId) -> Tree {
        Tree { root, vertices: BTreeMap::new(), parent: BTreeMap::new() }
    }

    /// The corolla with the given leaves; `corolla(r, [])` is the null corolla.
    pub fn corolla(root: EdgeId, leaves: impl IntoIterator<Item = EdgeId>) -> Result<Tree> {
        let leaves: Vec<EdgeId> = leaves.into_iter().collect();
        Tree::from_vertices(root.clone(), [(root, leaves)])
    }

    /// The linear tree with `k` unary vertices, edges `{prefix}0` (root) up to `{prefix}k`.
    pub fn linear(prefix: &str, k: usize) -> Tree {
        let name = |i: usize| EdgeId::new(format!("{prefix}{i}")).expect("valid prefix");
        let vertices = (0..k).map(|i| (name(i), vec![name(i + 1)]));
        Tree::from_vertices(name(0), vertices).expect("linear tree is well formed")
    }

    /// Builds and validates a tree from its root and vertex list.
    pub fn from_vertices(root: EdgeId, vertices: impl IntoIterator<Item = (EdgeId, Vec<EdgeId>)>) -> Result<Tree> {
        let mut map: BTreeMap<EdgeId, Vec<EdgeId>> = BTreeMap::new();
        let mut parent: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
        for (out, mut ins) in vertices {
            ins.sort();
            for e in &ins {
                if parent.insert(e.clone(), out.clone()).is_some() {
                    return Err(Error::DuplicateEdge(e.clone()));
                }
            }
            if map.insert(out.clone(), ins).is_some() {
                return Err(Error::DuplicateEdge(out));
            }
        }
        if parent.contains_key(&root) {
            return Err(Error::MalformedTree(format!("root `{root}` is an input of a vertex")));
        }
        let tree = Tree { root, vertices: map, parent };
        // Every edge must be reached exactly once walking up from the root.
        let mut seen = 0usize;
        let mut queue = VecDeque::from([tree.root.clone()]);
        while let Some(e) = queue.pop_front() {
            seen += 1;
            if let Some(ins) = tree.vertices.get(&e) {
                queue.extend(ins.iter().cloned());
            }
        }
        let total = 1 + tree.parent.len();
        if seen != total {
            return Err(Error::MalformedTree("tree is not connected to its root".into()));
        }
        for out in tree.vertices.keys() {
            if *out != tree.root && !tree.parent.contains_key(out) {
                return Err(Error::MalformedTree(format!("vertex `{out}` is detached")));
            }
        }
        Ok(tree)
    }

    pub fn root(&self) -> &EdgeId {
        &self.root
    }

    /// All edges in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = &EdgeId> + '_ {
        let mut all: Vec<&EdgeId> = self.parent.keys().collect();
        all.push(&self.root);
        all.sort();
        all.into_iter()
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.edges().cloned().collect()
    }

    pub fn edge_count(&self) -> usize {
        self.parent.len() + 1
    }

    pub fn contains(&self, e: &EdgeId) -> bool {
        *e == self.root || self.parent.contains_key(e)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Vertices in sorted order of their outgoing edge.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices.iter().map(|(o, ins)| Vertex { out_edge: o.clone(), in_edges: ins.clone() })
    }

    /// Inputs of the vertex whose outgoing edge is `e`, if there is one.
    pub fn inputs(&self, e: &EdgeId) -> Option<&[EdgeId]> {
        self.vertices.get(e).map(Vec::as_slice)
    }

    /// Outgoing edge of the vertex that `e` enters; `None` for the root.
    pub fn parent(&self, e: &EdgeId) -> Option<&EdgeId> {
        self.parent.get(e)
    }

    pub fn is_stump_edge(&self, e: &EdgeId) -> bool {
        matches!(self.vertices.get(e), Some(ins) if ins.is_empty())
    }

    pub fn is_leaf(&self, e: &EdgeId) -> bool {
        self.contains(e) && !self.vertices.contains_key(e)
    }

    /// An edge other than the root that is the outgoing edge of a vertex.
    /// Edges closed by a stump count as inner.
    pub fn is_inner(&self, e: &EdgeId) -> bool {
        *e != self.root && self.vertices.contains_key(e)
    }

    pub fn leaves(&self) -> BTreeSet<EdgeId> {
        self.edges().filter(|e| self.is_leaf(e)).cloned().collect()
    }

    pub fn stump_edges(&self) -> BTreeSet<EdgeId> {
        self.vertices.iter().filter(|(_, i)| i.is_empty()).map(|(o, _)| o.clone()).collect()
    }

    pub fn inner_edges(&self) -> BTreeSet<EdgeId> {
        self.vertices.keys().filter(|e| **e != self.root).cloned().collect()
    }

    /// Leaves together with the outgoing edges of stumps.
    pub fn max_edges(&self) -> BTreeSet<EdgeId> {
        self.edges().filter(|e| self.vertices.get(*e).is_none_or(Vec::is_empty)).cloned().collect()
    }

    pub fn is_open(&self) -> bool {
        self.vertices.values().all(|i| !i.is_empty())
    }

    /// Number of edges strictly between `e` and the root.
    pub fn depth(&self, e: &EdgeId) -> usize {
        let mut d = 0;
        let mut cur = e;
        while let Some(p) = self.parent.get(cur) {
            d += 1;
            cur = p;
        }
        d
    }

    /// Edges of the subtree rooted at `e`, in breadth-first order from `e`.
    pub fn subtree_edges(&self, e: &EdgeId) -> Vec<EdgeId> {
        let mut out = Vec::new();
        let mut queue = VecDeque::from([e.clone()]);
        while let Some(x) = queue.pop_front() {
            if let Some(ins) = self.vertices.get(&x) {
                queue.extend(ins.iter().cloned());
            }
            out.push(x);
        }
        out
    }

    fn require(&self, e: &EdgeId) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::UnknownEdge(e.clone()))
        }
    }

    /// Renames every edge; `f` must be injective on the edges of the tree.
    pub fn rename(&self, mut f: impl FnMut(&EdgeId) -> EdgeId) -> Result<Tree> {
        let vertices: Vec<_> = self.vertices.iter().map(|(o, ins)| (f(o), ins.iter().map(&mut f).collect())).collect();
        Tree::from_vertices(f(&self.root), vertices)
    }

    /// Removes all stumps. The edge correspondence is the identity on names.
    pub fn interior(&self) -> (Tree, BTreeMap<EdgeId, EdgeId>) {
        let vertices =
            self.vertices.iter().filter(|(_, ins)| !ins.is_empty()).map(|(o, i)| (o.clone(), i.clone())).collect();
        let tree = Tree { root: self.root.clone(), vertices, parent: self.parent.clone() };
        let corr = self.edges().map(|e| (e.clone(), e.clone())).collect();
        (tree, corr)
    }

    /// Adds a stump on top of each edge of `leaves`.
    pub fn add_stumps(&self, leaves: &BTreeSet<EdgeId>) -> Result<Tree> {
        let mut t = self.clone();
        for e in leaves {
            self.require(e)?;
            if !self.is_leaf(e) {
                return Err(Error::NotLeaf(e.clone()));
            }
            t.vertices.insert(e.clone(), Vec::new());
        }
        Ok(t)
    }

    /// Cuts at an inner edge `d`, returning the lower part (with `d` as a leaf)
    /// and the upper part (rooted at `d`).
    pub fn cut_at(&self, d: &EdgeId) -> Result<(Tree, Tree)> {
        self.require(d)?;
        if !self.is_inner(d) {
            return Err(Error::NotInner(d.clone()));
        }
        let above: BTreeSet<EdgeId> = self.subtree_edges(d).into_iter().collect();
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for (o, ins) in &self.vertices {
            if above.contains(o) {
                upper.push((o.clone(), ins.clone()));
            } else {
                lower.push((o.clone(), ins.clone()));
            }
        }
        Ok((Tree::from_vertices(self.root.clone(), lower)?, Tree::from_vertices(d.clone(), upper)?))
    }

    /// Grafts `upper` onto the leaf `e` of `self`; `upper` must be rooted at `e`.
    pub fn graft(&self, e: &EdgeId, upper: &Tree) -> Result<Tree> {
        self.require(e)?;
        if !self.is_leaf(e) {
            return Err(Error::NotLeaf(e.clone()));
        }
        if upper.root() != e {
            return Err(Error::GraftRoot { expected: e.clone(), found: upper.root().clone() });
        }
        for x in upper.edges() {
            if x != e && self.contains(x) {
                return Err(Error::DuplicateEdge(x.clone()));
            }
        }
        let vertices = self.vertices.iter().chain(upper.vertices.iter()).map(|(o, i)| (o.clone(), i.clone()));
        Tree::from_vertices(self.root.clone(), vertices)
    }

    /// Contracts a set of inner edges, merging the vertices on either side.
    /// The returned edge map is the inclusion of the surviving edges.
    pub fn contract_inner(&self, set: &BTreeSet<EdgeId>) -> Result<(Tree, BTreeMap<EdgeId, EdgeId>)> {
        for d in set {
            self.require(d)?;
            if !self.is_inner(d) {
                return Err(Error::NotInner(d.clone()));
            }
        }
        let mut vertices = Vec::new();
        for (o, _) in self.vertices.iter().filter(|(o, _)| !set.contains(*o)) {
            vertices.push((o.clone(), self.expand_through(o, set)));
        }
        let tree = Tree::from_vertices(self.root.clone(), vertices)?;
        let map = tree.edges().map(|e| (e.clone(), e.clone())).collect();
        Ok((tree, map))
    }

    /// Inputs of the merged vertex at `o` when every edge of `set` is contracted.
    fn expand_through(&self, o: &EdgeId, set: &BTreeSet<EdgeId>) -> Vec<EdgeId> {
        let mut out = Vec::new();
        for e in &self.vertices[o] {
            if set.contains(e) {
                out.extend(self.expand_through(e, set));
            } else {
                out.push(e.clone());
            }
        }
        out
    }

    fn write_node(&self, e: &EdgeId, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{e}")?;
        if let Some(ins) = self.vertices.get(e) {
            f.write_str("[")?;
            for (k, c) in ins.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                self.write_node(c, f)?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_node(&self.root, f)
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({self})")
    }
}

impl std::str::FromStr for Tree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Tree> {
        parse_tree(s)
    }
}

impl Serialize for Tree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A finite sequence of edge-disjoint trees; the empty forest is allowed.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Forest {
    components: Vec<Tree>,
}

impl Forest {
    pub fn new(components: Vec<Tree>) -> Result<Forest> {
        let mut seen = BTreeSet::new();
        for t in &components {
            for e in t.edges() {
                if !seen.insert(e.clone()) {
                    return Err(Error::DuplicateEdge(e.clone()));
                }
            }
        }
        Ok(Forest { components })
    }

    pub fn empty() -> Forest {
        Forest::default()
    }

    pub fn components(&self) -> &[Tree] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.components.iter().map(Tree::edge_count).sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(Tree::vertex_count).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = &EdgeId> + '_ {
        self.components.iter().flat_map(|t| t.edges())
    }

    pub fn contains(&self, e: &EdgeId) -> bool {
        self.component_of(e).is_some()
    }

    pub fn component_of(&self, e: &EdgeId) -> Option<usize> {
        self.components.iter().position(|t| t.contains(e))
    }

    /// The component containing `e` together with its index.
    pub fn tree_of(&self, e: &EdgeId) -> Result<(usize, &Tree)> {
        self.component_of(e).map(|i| (i, &self.components[i])).ok_or_else(|| Error::UnknownEdge(e.clone()))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.components.iter().flat_map(|t| t.vertices())
    }

    pub fn inputs(&self, e: &EdgeId) -> Option<&[EdgeId]> {
        self.components.iter().find_map(|t| t.inputs(e))
    }

    pub fn leaves(&self) -> BTreeSet<EdgeId> {
        self.components.iter().flat_map(|t| t.leaves()).collect()
    }

    pub fn stump_edges(&self) -> BTreeSet<EdgeId> {
        self.components.iter().flat_map(|t| t.stump_edges()).collect()
    }
}

impl From<Tree> for Forest {
    fn from(t: Tree) -> Forest {
        Forest { components: vec![t] }
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, t) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str(";")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Forest({self})")
    }
}

impl std::str::FromStr for Forest {
    type Err = Error;
    fn from_str(s: &str) -> Result<Forest> {
        parse_forest(s)
    }
}

impl Serialize for Forest {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    at: usize,
    src: &'a str,
    vertices: Vec<(EdgeId, Vec<EdgeId>)>,
    names: BTreeSet<EdgeId>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { chars: src.char_indices().collect(), at: 0, src, vertices: Vec::new(), names: BTreeSet::new() }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.src.len(), |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.get(self.at), Some((_, c)) if c.is_whitespace()) {
            self.at += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.at).map(|(_, c)| *c)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.at += 1;
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn name(&mut self) -> Result<EdgeId> {
        self.skip_ws();
        let start = self.at;
        while matches!(self.chars.get(self.at), Some((_, c)) if !c.is_whitespace() && !DELIMITERS.contains(c)) {
            self.at += 1;
        }
        if start == self.at {
            return self.err("expected an edge name");
        }
        let s: String = self.chars[start..self.at].iter().map(|(_, c)| c).collect();
        let id = EdgeId::new(&s)?;
        if !self.names.insert(id.clone()) {
            return Err(Error::DuplicateEdge(id));
        }
        Ok(id)
    }

    fn edge(&mut self) -> Result<EdgeId> {
        let e = self.name()?;
        if self.peek() == Some('[') {
            self.at += 1;
            let mut ins = Vec::new();
            if self.peek() != Some(']') {
                loop {
                    ins.push(self.edge()?);
                    match self.peek() {
                        Some(',') => self.at += 1,
                        Some(']') => break,
                        _ => return self.err("expected `,` or `]`"),
                    }
                }
            }
            self.expect(']')?;
            self.vertices.push((e.clone(), ins));
        }
        Ok(e)
    }

    fn tree(&mut self) -> Result<Tree> {
        self.vertices.clear();
        let root = self.edge()?;
        Tree::from_vertices(root, std::mem::take(&mut self.vertices))
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            return self.err("trailing input");
        }
        Ok(())
    }
}

/// Parses `edge := NAME node? ; node := '[' (edge (',' edge)*)? ']'`.
pub fn parse_tree(text: &str) -> Result<Tree> {
    let mut p = Parser::new(text);
    let t = p.tree()?;
    p.finish()?;
    Ok(t)
}

/// Parses `forest := '{' (tree (';' tree)*)? '}'`.
pub fn parse_forest(text: &str) -> Result<Forest> {
    let mut p = Parser::new(text);
    p.expect('{')?;
    let mut comps = Vec::new();
    if p.peek() != Some('}') {
        loop {
            comps.push(p.tree()?);
            match p.peek() {
                Some(';') => p.at += 1,
                Some('}') => break,
                _ => return p.err("expected `;` or `}`"),
            }
        }
    }
    p.expect('}')?;
    p.finish()?;
    Forest::new(comps)
}

/// Accepts either a bracketed forest or a single tree.
pub fn parse_forest_or_tree(text: &str) -> Result<Forest> {
    if text.trim_start().starts_with('{') {
        parse_forest(text)
    } else {
        parse_tree(text).map(Forest::from)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tree {
        parse_tree(s).unwrap()
    }

    fn set(xs: &[&str]) -> BTreeSet<EdgeId> {
        xs.iter().map(|x| EdgeId::from(*x)).collect()
    }

    #[test]
    fn parses_unit_and_corolla() {
        let eta = t("e");
        assert_eq!(eta.edge_count(), 1);
        assert_eq!(eta.vertex_count(), 0);
        let c2 = t("r[a,b]");
        assert_eq!(c2.vertex_count(), 1);
        assert_eq!(c2.leaves(), set(&["a", "b"]));
    }

    #[test]
    fn parses_tree_with_stump() {
        let s = t("r[a[x,y],b[]]");
        assert_eq!(s.edge_count(), 5);
        assert_eq!(s.vertex_count(), 3);
        assert_eq!(s.leaves(), set(&["x", "y"]));
        assert_eq!(s.stump_edges(), set(&["b"]));
        assert_eq!(s.max_edges(), set(&["x", "y", "b"]));
    }

    #[test]
    fn canonical_form_sorts_children() {
        assert_eq!(t(" r [ b , a ] ").to_string(), "r[a,b]");
        assert_eq!(t("r[b,a]"), t("r[a,b]"));
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert!(matches!(parse_tree("r[a,"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_tree("r[a]]"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_tree(""), Err(Error::Syntax { .. })));
        assert_eq!(parse_tree("r[a,a]"), Err(Error::DuplicateEdge("a".into())));
        assert_eq!(parse_tree("r[r]"), Err(Error::DuplicateEdge("r".into())));
    }

    #[test]
    fn forests() {
        let f = parse_forest("{}").unwrap();
        assert!(f.is_empty());
        let f = parse_forest("{ r[a]; s }").unwrap();
        assert_eq!(f.components().len(), 2);
        assert_eq!(f.to_string(), "{r[a];s}");
        assert!(matches!(parse_forest("{r[a];a}"), Err(Error::DuplicateEdge(_))));
        let w = parse_forest("{ℓ2:1[ℓ1:1[ℓ0:1,ℓ0:2],ℓ1:2[]];ℓ1:3[ℓ0:3,ℓ0:4]}").unwrap();
        assert_eq!(w.edge_count(), 8);
    }

    #[test]
    fn interior_removes_stumps() {
        assert_eq!(t("r[a[x,y],b[]]").interior().0, t("r[a[x,y],b]"));
        let open = t("r[a[x,y],b]");
        assert_eq!(open.interior().0, open);
        assert_eq!(t("r[]").interior().0, t("r"));
        let (i, corr) = t("r[a[x,y],b[]]").interior();
        assert_eq!(corr.len(), i.edge_count());
    }

    #[test]
    fn add_stumps_cases() {
        assert_eq!(t("e").add_stumps(&set(&["e"])).unwrap(), t("e[]"));
        assert_eq!(t("r[a,b]").add_stumps(&set(&["a"])).unwrap(), t("r[a[],b]"));
        assert_eq!(t("r[a,b]").add_stumps(&set(&["r"])), Err(Error::NotLeaf("r".into())));
        let s = t("r[a[x,y],b]");
        let e = set(&["x", "b"]);
        assert_eq!(s.add_stumps(&e).unwrap().interior().0, s);
    }

    #[test]
    fn cut_and_graft() {
        let s = t("r[a[x,y],b[]]");
        let (lower, upper) = s.cut_at(&"a".into()).unwrap();
        assert_eq!(lower, t("r[a,b[]]"));
        assert_eq!(upper, t("a[x,y]"));
        assert_eq!(lower.graft(&"a".into(), &upper).unwrap(), s);
        let (lower, upper) = s.cut_at(&"b".into()).unwrap();
        assert_eq!(upper, t("b[]"));
        assert_eq!(lower.graft(&"b".into(), &upper).unwrap(), s);
        assert_eq!(s.cut_at(&"r".into()), Err(Error::NotInner("r".into())));
        assert_eq!(s.cut_at(&"x".into()), Err(Error::NotInner("x".into())));
    }

    #[test]
    fn graft_cases() {
        let upper = t("e[x,y]");
        assert_eq!(t("e").graft(&"e".into(), &upper).unwrap(), upper);
        assert_eq!(t("r[a,b]").graft(&"a".into(), &t("a[x,y]")).unwrap(), t("r[a[x,y],b]"));
        let s = t("r[a,b]");
        assert_eq!(s.graft(&"a".into(), &t("a[]")).unwrap(), s.add_stumps(&set(&["a"])).unwrap());
        assert!(matches!(s.graft(&"a".into(), &t("a[b]")), Err(Error::DuplicateEdge(_))));
        assert!(matches!(s.graft(&"r".into(), &t("r[z]")), Err(Error::NotLeaf(_))));
        assert!(matches!(s.graft(&"a".into(), &t("q[z]")), Err(Error::GraftRoot { .. })));
    }

    #[test]
    fn contraction() {
        let s = t("r[a[x,y],b]");
        assert_eq!(s.contract_inner(&set(&["a"])).unwrap().0, t("r[x,y,b]"));
        assert_eq!(s.contract_inner(&BTreeSet::new()).unwrap().0, s);
        assert!(matches!(s.contract_inner(&set(&["x"])), Err(Error::NotInner(_))));
        assert_eq!(t("r[a[],b]").contract_inner(&set(&["a"])).unwrap().0, t("r[b]"));
    }

    #[test]
    fn contracting_a_linear_tree_leaves_one_vertex() {
        for n in 1..7 {
            let lin = Tree::linear("e", n);
            let (c, map) = lin.contract_inner(&lin.inner_edges()).unwrap();
            assert_eq!(c.to_string(), format!("e0[e{n}]"));
            assert_eq!(map.len(), 2);
        }
    }

    #[test]
    fn max_edges_cases() {
        assert_eq!(t("e").max_edges(), set(&["e"]));
        assert_eq!(t("r[]").max_edges(), set(&["r"]));
    }

    #[test]
    fn malformed_vertex_lists_are_rejected() {
        let r = Tree::from_vertices("r".into(), [("r".into(), vec!["a".into()]), ("q".into(), vec!["z".into()])]);
        assert!(matches!(r, Err(Error::MalformedTree(_))));
        assert!(EdgeId::new("a b").is_err());
        assert!(EdgeId::new("").is_err());
        assert!(EdgeId::new("(a|b)").is_ok());
    }
}
