//! The free `P`-algebra on a family of sets, computed term by term as
//! `⊔_γ P(r∘γ; d) ×_{Aut_I(J)} ∏_{j∈J} X_{γ(j)}` over multisets `γ` on `I`.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use super::operad::{FiniteOperad, ThinOp};
use crate::error::{Error, Result};

/// An orbit representative: `gamma` is sorted, and `(op, labels)` is the least
/// element of its orbit under the permutations fixing `gamma`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FreeAlgebraElement {
    pub gamma: Vec<usize>,
    pub op: ThinOp,
    pub labels: Vec<usize>,
}

/// Permutations of `0..gamma.len()` that preserve the sorted sequence `gamma`.
fn stabilizer(gamma: &[usize]) -> Vec<Vec<usize>> {
    let blocks: Vec<Vec<usize>> =
        (0..gamma.len()).chunk_by(|&j| gamma[j]).into_iter().map(|(_, g)| g.collect()).collect();
    let per_block: Vec<Vec<Vec<usize>>> =
        blocks.iter().map(|b| b.iter().copied().permutations(b.len()).collect()).collect();
    if per_block.is_empty() {
        return vec![Vec::new()];
    }
    per_block
        .iter()
        .map(|p| p.iter())
        .multi_cartesian_product()
        .map(|pick| pick.into_iter().flatten().copied().collect())
        .collect()
}

/// Elements of the free algebra in color `d`, where `r[i]` colors the
/// generator set `i` and `sizes[i] = |X_i|`.
pub fn free_algebra(p: &dyn FiniteOperad, r: &[usize], sizes: &[usize], d: usize) -> Result<Vec<FreeAlgebraElement>> {
    if r.len() != sizes.len() {
        return Err(Error::Mismatch(format!("{} colors for {} generator sets", r.len(), sizes.len())));
    }
    if d >= p.color_count() || r.iter().any(|&c| c >= p.color_count()) {
        return Err(Error::Mismatch("unknown color".into()));
    }
    let hit: BTreeSet<usize> = r.iter().copied().collect();
    if let Some(c) = (0..p.color_count()).find(|c| !hit.contains(c)) {
        return Err(Error::NotSurjective(p.color_names()[c].clone()));
    }
    let mut out = BTreeSet::new();
    for k in 0..=p.max_arity() {
        for gamma in (0..r.len()).combinations_with_replacement(k) {
            let inputs: Vec<usize> = gamma.iter().map(|&i| r[i]).collect();
            let ops = p.ops(&inputs, d);
            if ops.is_empty() {
                continue;
            }
            let stab = stabilizer(&gamma);
            let label_choices: Vec<Vec<usize>> = if k == 0 {
                vec![Vec::new()]
            } else {
                gamma.iter().map(|&i| 0..sizes[i]).multi_cartesian_product().collect()
            };
            for op in &ops {
                for labels in &label_choices {
                    let rep = stab
                        .iter()
                        .map(|sigma| (p.permute(op, sigma), sigma.iter().map(|&j| labels[j]).collect::<Vec<_>>()))
                        .min()
                        .expect("stabilizer contains the identity");
                    out.insert(FreeAlgebraElement { gamma: gamma.clone(), op: rep.0, labels: rep.1 });
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}
