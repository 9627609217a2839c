//! Enumeration commands. Each returns every output format, and `main` picks one.

use dendrotensor::level::{omega_obj, FinSimplex};
use dendrotensor::lurie::{free_algebra, FiniteOperad, FreeForestOperad};
use dendrotensor::omega::hom;
use dendrotensor::shuffle::{shuffles, tensor_hom};
use dendrotensor::tree::{parse_forest_or_tree, parse_tree};
use dendrotensor::{EdgeId, Result, Tree};
use serde_json::{json, Value};

use crate::dot::{forest_to_dot, gallery_to_dot};

#[derive(Clone, Debug)]
pub struct Output {
    pub json: Value,
    pub text: String,
    pub dot: Option<String>,
}

impl Output {
    fn listing(command: &str, items: Vec<Value>, lines: Vec<String>, dot: Option<String>) -> Output {
        let count = items.len();
        let mut text = format!("{count}\n");
        for l in lines {
            text.push_str(&l);
            text.push('\n');
        }
        Output { json: json!({ "command": command, "count": count, "items": items }), text, dot }
    }
}

pub fn cmd_omega(simplex_json: &str) -> Result<Output> {
    let a = FinSimplex::from_json(simplex_json)?;
    let w = omega_obj(&a);
    let stumps: usize = w.components().iter().map(|t| t.stump_edges().len()).sum();
    let text = w.to_string();
    Ok(Output {
        json: json!({
            "command": "omega",
            "forest": text,
            "components": w.components().len(),
            "edges": w.edge_count(),
            "stumps": stumps,
        }),
        dot: Some(forest_to_dot(&w, "omega")),
        text: format!("{text}\n"),
    })
}

pub fn cmd_hom(source: &str, target: &str) -> Result<Output> {
    let s = parse_forest_or_tree(source)?;
    let t = parse_forest_or_tree(target)?;
    let maps = hom(&s, &t);
    let items = maps.iter().map(|f| json!({ "edges": f.edge_map(), "vertices": f.vertex_map() })).collect();
    let lines = maps
        .iter()
        .map(|f| f.edge_map().iter().map(|(a, b)| format!("{a}↦{b}")).collect::<Vec<_>>().join(" "))
        .collect();
    Ok(Output::listing("hom", items, lines, None))
}

fn parse_trees(texts: &[String]) -> Result<Vec<Tree>> {
    texts.iter().map(|t| parse_tree(t)).collect()
}

pub fn cmd_shuffles(factors: &[String]) -> Result<Output> {
    let fs = parse_trees(factors)?;
    let all = shuffles(&fs);
    let items = all.iter().map(|s| Value::String(s.to_string())).collect();
    let lines = all.iter().map(|s| s.to_string()).collect();
    let trees: Vec<Tree> = all.iter().map(|s| s.tree().clone()).collect();
    Ok(Output::listing("shuffles", items, lines, Some(gallery_to_dot(&trees, "shuffles"))))
}

pub fn cmd_tensor_hom(source: &str, factors: &[String]) -> Result<Output> {
    let s = parse_forest_or_tree(source)?;
    let fs = parse_trees(factors)?;
    let maps = tensor_hom(&s, &fs);
    let items = maps.iter().map(|m| json!({ "edges": m.edge_map })).collect();
    let lines =
        maps.iter().map(|m| m.edge_map.iter().map(|(a, b)| format!("{a}↦{b}")).collect::<Vec<_>>().join(" ")).collect();
    Ok(Output::listing("tensor-hom", items, lines, None))
}

fn color_index(p: &FreeForestOperad, name: &str) -> Result<usize> {
    let e = EdgeId::new(name)?;
    p.color_of(&e).ok_or(dendrotensor::Error::UnknownEdge(e))
}

/// Free algebra on one generator set per color of `o(F)`. `sizes` gives
/// `|X_c|` by color name; unnamed colors get no generators.
pub fn cmd_free_algebra(forest: &str, sizes: &[(String, usize)], color: Option<&str>) -> Result<Output> {
    let f = parse_forest_or_tree(forest)?;
    let p = FreeForestOperad::new(f);
    let names = p.color_names();
    let mut size_of = vec![0; names.len()];
    for (name, n) in sizes {
        size_of[color_index(&p, name)?] = *n;
    }
    let r: Vec<usize> = (0..names.len()).collect();
    let targets: Vec<usize> = match color {
        Some(name) => vec![color_index(&p, name)?],
        None => r.clone(),
    };
    let mut items = Vec::new();
    let mut lines = Vec::new();
    for d in targets {
        for e in free_algebra(&p, &r, &size_of, d)? {
            let gens: Vec<String> = e.gamma.iter().zip(&e.labels).map(|(&g, l)| format!("{}#{l}", names[g])).collect();
            let inputs: Vec<&str> = e.op.inputs.iter().map(|&c| names[c].as_str()).collect();
            let op = format!("({})→{}", inputs.join(","), names[e.op.output]);
            lines.push(format!("{}: {op} on [{}]", names[d], gens.join(", ")));
            items.push(json!({ "color": names[d], "operation": op, "generators": gens }));
        }
    }
    Ok(Output::listing("free-algebra", items, lines, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str =
        r#"{"levels": [[1,2,3,4],[1,2,3],[1]], "maps": [{"1":1,"2":1,"3":3,"4":3},{"1":1,"2":1,"3":"*"}]}"#;

    #[test]
    fn omega_example() {
        let out = cmd_omega(EXAMPLE).unwrap();
        assert_eq!(out.json["forest"], "{ℓ2:1[ℓ1:1[ℓ0:1,ℓ0:2],ℓ1:2[]];ℓ1:3[ℓ0:3,ℓ0:4]}");
        assert_eq!(out.json["edges"], 8);
        assert_eq!(out.json["stumps"], 1);
        assert_eq!(cmd_omega(r#"{"levels": [[1,2]], "maps": []}"#).unwrap().json["forest"], "{ℓ0:1;ℓ0:2}");
        assert_eq!(cmd_omega(r#"{"levels": [[]], "maps": []}"#).unwrap().json["forest"], "{}");
    }

    #[test]
    fn counts() {
        assert_eq!(cmd_hom("x", "r[a[x,y],b[]]").unwrap().json["count"], 5);
        assert_eq!(cmd_shuffles(&["a0[a1[a2]]".into(), "b0[b1]".into()]).unwrap().json["count"], 3);
        assert_eq!(cmd_tensor_hom("r[a,b]", &["r[a,b]".into(), "u".into()]).unwrap().json["count"], 2);
    }

    #[test]
    fn free_algebra_by_name() {
        let out = cmd_free_algebra("r[a,b]", &[("a".into(), 1), ("b".into(), 1)], Some("r")).unwrap();
        assert_eq!(out.json["count"], 1);
        assert!(cmd_free_algebra("r[a,b]", &[("z".into(), 1)], None).is_err());
    }
}
