//! Graphviz output for forests. Stumps are filled squares, leaves open
//! circles; level forests get one dashed rank line per level.

use std::collections::BTreeMap;
use std::fmt::Write;

use dendrotensor::level::parse_omega_edge;
use dendrotensor::{EdgeId, Forest, Tree};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn node(prefix: &str, kind: &str, e: &EdgeId) -> String {
    quote(&format!("{prefix}{kind}:{e}"))
}

fn header(out: &mut String, title: &str) {
    writeln!(out, "digraph {} {{", quote(title)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=point, width=0.08];").unwrap();
    writeln!(out, "  edge [dir=none];").unwrap();
}

/// Writes one tree; node ids carry `prefix` so several copies can share a graph.
fn write_tree(out: &mut String, t: &Tree, prefix: &str, levels: &mut BTreeMap<usize, Vec<String>>) {
    let root_node = node(prefix, "root", t.root());
    writeln!(out, "  {root_node} [shape=none, label=\"\", width=0];").unwrap();
    for e in t.edges() {
        let top = if t.inputs(e).is_some() { node(prefix, "v", e) } else { node(prefix, "leaf", e) };
        if t.is_stump_edge(e) {
            writeln!(out, "  {top} [shape=square, style=filled, fillcolor=black, label=\"\", width=0.12];").unwrap();
        } else if t.is_leaf(e) {
            writeln!(out, "  {top} [shape=circle, label=\"\", width=0.12];").unwrap();
        }
        let bottom = match t.parent(e) {
            Some(p) => node(prefix, "v", p),
            None => root_node.clone(),
        };
        writeln!(out, "  {top} -> {bottom} [label={}];", quote(e.as_str())).unwrap();
        if let Some((level, _)) = parse_omega_edge(e) {
            levels.entry(level).or_default().push(top);
        }
    }
}

/// Renders a forest; `title` names the graph.
pub fn forest_to_dot(forest: &Forest, title: &str) -> String {
    let mut out = String::new();
    header(&mut out, title);
    let mut levels: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for t in forest.components() {
        write_tree(&mut out, t, "", &mut levels);
    }
    let mut previous: Option<String> = None;
    for (level, nodes) in &levels {
        let marker = quote(&format!("level {level}"));
        writeln!(out, "  {marker} [shape=plaintext, label={}];", quote(&format!("level {}", level + 1))).unwrap();
        writeln!(out, "  {{ rank=same; {marker}; {} }}", nodes.join("; ")).unwrap();
        if let Some(prev) = previous {
            writeln!(out, "  {prev} -> {marker} [style=dashed, color=gray];").unwrap();
        }
        previous = Some(marker);
    }
    out.push_str("}\n");
    out
}

/// Renders trees that may share edge names, one cluster each.
pub fn gallery_to_dot(trees: &[Tree], title: &str) -> String {
    let mut out = String::new();
    header(&mut out, title);
    for (i, t) in trees.iter().enumerate() {
        writeln!(out, "  subgraph \"cluster_{i}\" {{").unwrap();
        writeln!(out, "  label=\"{}\";", i + 1).unwrap();
        write_tree(&mut out, t, &format!("{i}/"), &mut BTreeMap::new());
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use dendrotensor::tree::parse_forest;

    #[test]
    fn marks_stumps_and_leaves() {
        let dot = forest_to_dot(&parse_forest("{r[a,b[]]}").unwrap(), "t");
        assert!(dot.contains("\"v:b\" [shape=square"));
        assert!(dot.contains("\"leaf:a\" [shape=circle"));
        assert!(dot.contains("\"v:r\" -> \"root:r\""));
        assert!(!dot.contains("dashed"));
    }

    #[test]
    fn level_forests_get_rank_lines() {
        let dot = forest_to_dot(&parse_forest("{ℓ1:1[ℓ0:1,ℓ0:2]}").unwrap(), "w");
        assert!(dot.contains("rank=same"));
        assert!(dot.contains("style=dashed"));
    }

    #[test]
    fn gallery_keeps_copies_apart() {
        let t: Tree = "r[a]".parse().unwrap();
        let dot = gallery_to_dot(&[t.clone(), t], "g");
        assert!(dot.contains("\"0/v:r\"") && dot.contains("\"1/v:r\""));
    }
}
