//! Seeded random instances for property suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::level::{FinSimplex, SimplicialOperator};
use crate::tree::{EdgeId, Forest, Tree};

/// Default probability that a grown vertex is a stump.
pub const DEFAULT_STUMP_PROBABILITY: f64 = 0.2;

/// A random tree with between 1 and `max_edges` edges named `{prefix}0`, `{prefix}1`, ….
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, max_edges: usize, stump_probability: f64, prefix: &str) -> Tree {
    let target = rng.gen_range(1..=max_edges.max(1));
    grow(rng, target, stump_probability, prefix, 0).0
}

fn grow<R: Rng + ?Sized>(
    rng: &mut R,
    target: usize,
    stump_probability: f64,
    prefix: &str,
    first: usize,
) -> (Tree, usize) {
    let name = |i: usize| EdgeId::new(format!("{prefix}{i}")).expect("valid prefix");
    let mut next = first + 1;
    let root = name(first);
    let mut open = vec![root.clone()];
    let mut vertices: Vec<(EdgeId, Vec<EdgeId>)> = Vec::new();
    let mut count = 1;
    while count < target && !open.is_empty() {
        let e = open.swap_remove(rng.gen_range(0..open.len()));
        let room = target - count;
        let arity = if rng.gen_bool(stump_probability) { 0 } else { rng.gen_range(1..=room.min(3)) };
        let ins: Vec<EdgeId> = (0..arity).map(|k| name(next + k)).collect();
        next += arity;
        count += arity;
        open.extend(ins.iter().cloned());
        vertices.push((e, ins));
    }
    (Tree::from_vertices(root, vertices).expect("grown tree is well formed"), next)
}

/// A random forest with at most `max_edges` edges in total and at most
/// `max_components` components, possibly empty.
pub fn random_forest<R: Rng + ?Sized>(
    rng: &mut R,
    max_edges: usize,
    max_components: usize,
    stump_probability: f64,
    prefix: &str,
) -> Forest {
    let k = rng.gen_range(0..=max_components.min(max_edges));
    let mut budget = max_edges;
    let mut comps = Vec::new();
    let mut next = 0;
    for i in 0..k {
        let left = k - i - 1;
        let size = rng.gen_range(1..=(budget - left).max(1));
        let (t, n) = grow(rng, size, stump_probability, prefix, next);
        next = n;
        budget -= t.edge_count();
        comps.push(t);
    }
    Forest::new(comps).expect("distinct names")
}

/// A random simplex with top index at most `max_length` and levels of at most
/// `max_width` elements named `1..`.
pub fn random_simplex<R: Rng + ?Sized>(rng: &mut R, max_width: usize, max_length: usize) -> FinSimplex {
    let n = rng.gen_range(0..=max_length);
    let sizes: Vec<usize> = (0..=n).map(|_| rng.gen_range(0..=max_width)).collect();
    let maps: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..sizes[i])
                .map(|_| if sizes[i + 1] == 0 || rng.gen_bool(0.2) { 0 } else { rng.gen_range(1..=sizes[i + 1]) })
                .collect()
        })
        .collect();
    FinSimplex::skeletal(&sizes, &maps).expect("generated simplex is valid")
}

/// A random monotone map `[m] → [target]` with `m ≤ max_source`.
pub fn random_operator<R: Rng + ?Sized>(rng: &mut R, target: usize, max_source: usize) -> SimplicialOperator {
    let m = rng.gen_range(0..=max_source);
    let mut values: Vec<usize> = (0..=m).map(|_| rng.gen_range(0..=target)).collect();
    values.sort_unstable();
    SimplicialOperator::new(values, target).expect("sorted values in range")
}

/// A random inner edge of `tree`, if it has one.
pub fn random_inner_edge<R: Rng + ?Sized>(rng: &mut R, tree: &Tree) -> Option<EdgeId> {
    let inner: Vec<EdgeId> = tree.inner_edges().into_iter().collect();
    inner.choose(rng).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_respect_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let t = random_tree(&mut rng, 7, 0.2, "e");
            assert!((1..=7).contains(&t.edge_count()));
            let f = random_forest(&mut rng, 10, 3, 0.2, "f");
            assert!(f.edge_count() <= 10 && f.components().len() <= 3);
            let a = random_simplex(&mut rng, 4, 3);
            assert!(a.top() <= 3 && a.levels().iter().all(|l| l.len() <= 4));
            let phi = random_operator(&mut rng, a.top(), 4);
            assert_eq!(phi.target(), a.top());
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let draw = || {
            let mut rng = ChaCha8Rng::seed_from_u64(42);
            (0..20).map(|_| random_tree(&mut rng, 8, 0.2, "e").to_string()).collect::<Vec<_>>()
        };
        assert_eq!(draw(), draw());
    }
}
