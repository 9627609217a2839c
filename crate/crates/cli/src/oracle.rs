//! Brute-force oracles, deliberately independent of the algorithms they check.

use std::collections::{BTreeSet, HashMap};

use dendrotensor::lurie::{FiniteOperad, ThinOp};

/// Number of interleavings of chains with the given lengths, by recursion on
/// which chain moves first.
pub fn interleavings(lens: &[usize]) -> u128 {
    fn go(rem: &mut Vec<usize>, memo: &mut HashMap<Vec<usize>, u128>) -> u128 {
        if rem.iter().all(|&x| x == 0) {
            return 1;
        }
        if let Some(&v) = memo.get(rem.as_slice()) {
            return v;
        }
        let mut total = 0;
        for i in 0..rem.len() {
            if rem[i] > 0 {
                rem[i] -= 1;
                total += go(rem, memo);
                rem[i] += 1;
            }
        }
        memo.insert(rem.clone(), total);
        total
    }
    go(&mut lens.to_vec(), &mut HashMap::new())
}

/// A term of the free algebra before quotienting: generator sets, an
/// operation, and one label per input.
pub type Term = (Vec<usize>, ThinOp, Vec<usize>);

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Least element of the orbit of a term under all of `Σ_k`.
pub fn orbit_min(term: &Term) -> Term {
    let (gens, op, labels) = term;
    permutations(gens.len())
        .into_iter()
        .map(|s| {
            (
                s.iter().map(|&j| gens[j]).collect(),
                ThinOp::new(s.iter().map(|&j| op.inputs[j]).collect(), op.output),
                s.iter().map(|&j| labels[j]).collect(),
            )
        })
        .min()
        .expect("nonempty group")
}

/// Orbits of all terms in color `d`: every operation into `d`, every way of
/// choosing generator sets over its input colors, every labelling.
pub fn free_algebra_orbits(p: &dyn FiniteOperad, r: &[usize], sizes: &[usize], d: usize) -> BTreeSet<Term> {
    let mut orbits = BTreeSet::new();
    for k in 0..=p.max_arity() {
        for op in p.operations_with_output(d, k) {
            let mut gens: Vec<Vec<usize>> = vec![Vec::new()];
            for &c in &op.inputs {
                gens = gens
                    .into_iter()
                    .flat_map(|g| {
                        (0..r.len()).filter(move |&i| r[i] == c).map(move |i| {
                            let mut g = g.clone();
                            g.push(i);
                            g
                        })
                    })
                    .collect();
            }
            for g in gens {
                let mut labelings: Vec<Vec<usize>> = vec![Vec::new()];
                for &i in &g {
                    labelings = labelings
                        .into_iter()
                        .flat_map(|l| {
                            (0..sizes[i]).map(move |x| {
                                let mut l = l.clone();
                                l.push(x);
                                l
                            })
                        })
                        .collect();
                }
                for labels in labelings {
                    orbits.insert(orbit_min(&(g.clone(), op.clone(), labels)));
                }
            }
        }
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interleaving_counts() {
        assert_eq!(interleavings(&[2, 1]), 3);
        assert_eq!(interleavings(&[1, 1, 1]), 6);
        assert_eq!(interleavings(&[4, 4]), 70);
        assert_eq!(interleavings(&[]), 1);
    }

    #[test]
    fn orbit_minimum_is_invariant() {
        let t = (vec![1, 0], ThinOp::new(vec![5, 4], 9), vec![0, 2]);
        let swapped = (vec![0, 1], ThinOp::new(vec![4, 5], 9), vec![2, 0]);
        assert_eq!(orbit_min(&t), orbit_min(&swapped));
        assert_eq!(permutations(4).len(), 24);
    }
}
