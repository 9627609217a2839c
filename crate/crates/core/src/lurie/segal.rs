//! Segal-type decompositions of `Hom(o(-), P)`: cutting a tree at an inner
//! edge, and splitting a forest into its components.

use std::collections::BTreeSet;

use serde::Serialize;

use super::genmap::{gen_hom, GenMap};
use super::operad::FiniteOperad;
use crate::error::Result;
use crate::tree::{EdgeId, Forest, Tree};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    /// `|Hom(o(T), P)|` or `|Hom(o(F), P)|`.
    pub whole: usize,
    /// Size of the fiber product or product.
    pub parts: usize,
    pub ok: bool,
    pub witness: Option<String>,
}

impl DecompositionReport {
    fn check(whole: &[GenMap], parts: &BTreeSet<Vec<GenMap>>, restrict: impl Fn(&GenMap) -> Vec<GenMap>) -> Self {
        let mut report = DecompositionReport { whole: whole.len(), parts: parts.len(), ok: true, witness: None };
        let mut image = BTreeSet::new();
        for g in whole {
            let r = restrict(g);
            if !parts.contains(&r) {
                report.ok = false;
                report.witness = Some(format!("restriction of {g:?} is not in the product"));
                return report;
            }
            if !image.insert(r) {
                report.ok = false;
                report.witness = Some(format!("{g:?} shares its restriction with another map"));
                return report;
            }
        }
        if image.len() != parts.len() {
            report.ok = false;
            report.witness = Some(format!("{} of {} product elements are hit", image.len(), parts.len()));
        }
        report
    }
}

/// `Hom(o(T), P) ≅ Hom(o(T^b), P) ×_{P-colors} Hom(o(T_b), P)` at an inner edge `b`.
pub fn segal_d1_check(p: &dyn FiniteOperad, tree: &Tree, b: &EdgeId) -> Result<DecompositionReport> {
    let (lower, upper) = tree.cut_at(b)?;
    let whole = gen_hom(&Forest::from(tree.clone()), p);
    let lowers = gen_hom(&Forest::from(lower.clone()), p);
    let uppers = gen_hom(&Forest::from(upper.clone()), p);
    let mut fiber_product = BTreeSet::new();
    for l in &lowers {
        for u in uppers.iter().filter(|u| u.colors[b] == l.colors[b]) {
            fiber_product.insert(vec![l.clone(), u.clone()]);
        }
    }
    Ok(DecompositionReport::check(&whole, &fiber_product, |g| vec![g.restrict(&lower), g.restrict(&upper)]))
}

/// `Hom(o(F), P) ≅ ∏ᵢ Hom(o(Tᵢ), P)`.
pub fn d3_check(p: &dyn FiniteOperad, forest: &Forest) -> DecompositionReport {
    let whole = gen_hom(forest, p);
    let mut product: Vec<Vec<GenMap>> = vec![Vec::new()];
    for t in forest.components() {
        let maps = gen_hom(&Forest::from(t.clone()), p);
        product = product
            .iter()
            .flat_map(|prefix| {
                maps.iter().map(move |m| {
                    let mut v = prefix.clone();
                    v.push(m.clone());
                    v
                })
            })
            .collect();
    }
    let product: BTreeSet<Vec<GenMap>> = product.into_iter().collect();
    DecompositionReport::check(&whole, &product, |g| forest.components().iter().map(|t| g.restrict(t)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lurie::operad::FreeForestOperad;
    use crate::tree::{parse_forest_or_tree, parse_tree};

    fn free(s: &str) -> FreeForestOperad {
        FreeForestOperad::new(parse_forest_or_tree(s).unwrap())
    }

    #[test]
    fn linear_tree_middle_edge() {
        let t = Tree::linear("e", 2);
        let r = segal_d1_check(&free("r[a,b]"), &t, &"e1".into()).unwrap();
        assert!(r.ok, "{r:?}");
        assert_eq!(r.whole, r.parts);
    }

    #[test]
    fn cut_below_a_stump() {
        let t = parse_tree("r[a[],b]").unwrap();
        let p = free("s[x[],y[z]]");
        let r = segal_d1_check(&p, &t, &"a".into()).unwrap();
        assert!(r.ok, "{r:?}");
        assert!(r.whole > 0);
    }

    #[test]
    fn unit_operad_collapses() {
        let t = parse_tree("r[a[x]]").unwrap();
        let r = segal_d1_check(&free("e"), &t, &"a".into()).unwrap();
        assert!(r.ok);
        assert_eq!((r.whole, r.parts), (1, 1));
    }

    #[test]
    fn leaves_are_not_cut_points() {
        let t = parse_tree("r[a]").unwrap();
        assert!(segal_d1_check(&free("e"), &t, &"a".into()).is_err());
    }

    #[test]
    fn forests_split_into_components() {
        let p = free("r[a,b]");
        let f = parse_forest_or_tree("{s[x,y];t[u,v]}").unwrap();
        let r = d3_check(&p, &f);
        assert!(r.ok);
        let single = gen_hom(&Forest::from(parse_tree("s[x,y]").unwrap()), &p).len();
        assert_eq!(r.whole, single * single);
        let empty = d3_check(&p, &Forest::empty());
        assert_eq!((empty.whole, empty.parts, empty.ok), (1, 1, true));
        let one = d3_check(&p, &Forest::from(parse_tree("s[x]").unwrap()));
        assert!(one.ok);
    }
}
