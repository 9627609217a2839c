//! Fixed inputs shared by the benchmarks under `benches/`.

use dendrotensor::level::FinSimplex;
use dendrotensor::{Forest, Tree};

pub fn tree(text: &str) -> Tree {
    text.parse().expect("fixture tree")
}

pub fn forest(text: &str) -> Forest {
    text.parse().expect("fixture forest")
}

/// A binary tree with `depth` levels of vertices, edges named by path.
pub fn binary(depth: usize) -> Tree {
    fn go(name: String, depth: usize) -> String {
        if depth == 0 {
            return name;
        }
        format!("{name}[{},{}]", go(format!("{name}l"), depth - 1), go(format!("{name}r"), depth - 1))
    }
    tree(&go("e".into(), depth))
}

/// The three-level simplex with one element mapping to the basepoint.
pub fn example_simplex() -> FinSimplex {
    FinSimplex::skeletal(&[4, 3, 1], &[vec![1, 1, 3, 3], vec![1, 1, 0]]).expect("fixture simplex")
}
