//! The category ℓ(P) over `Fin*` attached to an operad `P`.

use std::fmt::Debug;
use std::hash::Hash;

use itertools::Itertools;
use serde::Serialize;

use super::finptd::PtdMap;
use super::operad::{FiniteOperad, ThinOp};
use crate::error::{Error, Result};

/// A coloring `c: ⟨n⟩ → colors(P)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EllObject(pub Vec<usize>);

impl EllObject {
    pub fn over(&self) -> usize {
        self.0.len()
    }
}

/// A morphism `(c, d, p)` over `α`: `p[j] ∈ P(c|α⁻¹(j); d(j))`, with the
/// fiber taken in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EllMorphism {
    pub over: PtdMap,
    pub src: EllObject,
    pub dst: EllObject,
    pub components: Vec<ThinOp>,
}

fn check_object(p: &dyn FiniteOperad, x: &EllObject, n: usize, what: &str) -> Result<()> {
    if x.over() != n {
        return Err(Error::Mismatch(format!("{what} lies over ⟨{}⟩, expected ⟨{n}⟩", x.over())));
    }
    if x.0.iter().any(|&c| c >= p.color_count()) {
        return Err(Error::Mismatch(format!("{what} uses an unknown color")));
    }
    Ok(())
}

/// All morphisms `c → d` over `α`.
pub fn ell_hom(p: &dyn FiniteOperad, alpha: &PtdMap, c: &EllObject, d: &EllObject) -> Result<Vec<EllMorphism>> {
    check_object(p, c, alpha.src(), "source")?;
    check_object(p, d, alpha.dst(), "target")?;
    let choices: Vec<Vec<ThinOp>> = alpha
        .fibers()
        .iter()
        .zip(&d.0)
        .map(|(fiber, &out)| p.ops(&fiber.iter().map(|&i| c.0[i]).collect::<Vec<_>>(), out))
        .collect();
    Ok(product(&choices)
        .into_iter()
        .map(|components| EllMorphism { over: alpha.clone(), src: c.clone(), dst: d.clone(), components })
        .collect())
}

fn product(choices: &[Vec<ThinOp>]) -> Vec<Vec<ThinOp>> {
    if choices.is_empty() {
        return vec![Vec::new()];
    }
    choices.iter().map(|c| c.iter().cloned()).multi_cartesian_product().collect()
}

pub fn ell_identity(p: &dyn FiniteOperad, x: &EllObject) -> EllMorphism {
    EllMorphism {
        over: PtdMap::identity(x.over()),
        src: x.clone(),
        dst: x.clone(),
        components: x.0.iter().map(|&c| p.identity(c)).collect(),
    }
}

/// `g ∘ f`, substituting the components of `f` into those of `g`.
pub fn ell_compose(p: &dyn FiniteOperad, g: &EllMorphism, f: &EllMorphism) -> Result<EllMorphism> {
    if f.dst != g.src || f.over.dst() != g.over.src() {
        return Err(Error::Boundary(format!("{:?} does not feed {:?}", f.dst, g.src)));
    }
    let over = g.over.after(&f.over)?;
    let mut components = Vec::with_capacity(over.dst());
    for (k, fiber) in g.over.fibers().iter().enumerate() {
        let mut op = g.components[k].clone();
        let mut order: Vec<usize> = Vec::new();
        for (slot, &j) in fiber.iter().enumerate().rev() {
            op = p.compose(&op, slot, &f.components[j])?;
            let mut block = f.over.fiber(j);
            block.extend(order);
            order = block;
        }
        // `order` lists the source elements feeding `op`; put them in increasing order.
        let sigma: Vec<usize> = (0..order.len()).sorted_by_key(|&t| order[t]).collect();
        components.push(p.permute(&op, &sigma));
    }
    Ok(EllMorphism { over, src: f.src.clone(), dst: g.dst.clone(), components })
}

/// A category over `Fin*`, explored one fiber at a time.
pub trait FibredCategory {
    type Obj: Clone + Ord + Hash + Debug;
    type Mor: Clone + Ord + Hash + Debug;

    fn objects_over(&self, n: usize) -> Vec<Self::Obj>;

    /// Every morphism out of `x` lying over `alpha`, with its target.
    fn morphisms_from(&self, x: &Self::Obj, alpha: &PtdMap) -> Vec<(Self::Obj, Self::Mor)>;

    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor;

    fn identity(&self, x: &Self::Obj) -> Self::Mor;
}

/// ℓ(P) for a finite operad.
pub struct Ell<'a> {
    pub operad: &'a dyn FiniteOperad,
}

impl<'a> Ell<'a> {
    pub fn new(operad: &'a dyn FiniteOperad) -> Ell<'a> {
        Ell { operad }
    }
}

impl FibredCategory for Ell<'_> {
    type Obj = EllObject;
    type Mor = EllMorphism;

    fn objects_over(&self, n: usize) -> Vec<EllObject> {
        if n == 0 {
            return vec![EllObject(Vec::new())];
        }
        (0..n).map(|_| 0..self.operad.color_count()).multi_cartesian_product().map(EllObject).collect()
    }

    fn morphisms_from(&self, x: &EllObject, alpha: &PtdMap) -> Vec<(EllObject, EllMorphism)> {
        let choices: Vec<Vec<ThinOp>> = alpha
            .fibers()
            .iter()
            .map(|fiber| self.operad.operations_from(&fiber.iter().map(|&i| x.0[i]).collect::<Vec<_>>()))
            .collect();
        product(&choices)
            .into_iter()
            .map(|components| {
                let dst = EllObject(components.iter().map(|op| op.output).collect());
                let m = EllMorphism { over: alpha.clone(), src: x.clone(), dst: dst.clone(), components };
                (dst, m)
            })
            .collect()
    }

    fn compose(&self, g: &EllMorphism, f: &EllMorphism) -> EllMorphism {
        ell_compose(self.operad, g, f).expect("composable morphisms of ℓ(P)")
    }

    fn identity(&self, x: &EllObject) -> EllMorphism {
        ell_identity(self.operad, x)
    }
}
