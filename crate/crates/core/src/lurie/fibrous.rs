//! Set-level checks of Lurie's axioms for a category over `Fin*`, truncated
//! to objects over `⟨0⟩,…,⟨N⟩`.
//!
//! Fib1 is checked on the inert maps that kill a single element and on the
//! permutations. Every inert map is a composite of these, and composites of
//! cocartesian arrows are cocartesian. A lift over a permutation must be an
//! isomorphism; a lift over an elementary inert map is tested against every
//! `β: ⟨n⟩ → ⟨k⟩` with `k ≤ N` by comparing outgoing morphism sets.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::ell::{Ell, EllMorphism, EllObject, FibredCategory};
use super::finptd::PtdMap;
use super::operad::FiniteOperad;

const MAX_WITNESSES: usize = 5;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub checked: u64,
    pub violations: u64,
    pub witnesses: Vec<String>,
}

impl AxiomResult {
    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibrousReport {
    pub truncation: usize,
    pub fib1: AxiomResult,
    pub fib2: AxiomResult,
    pub fib3: AxiomResult,
}

impl FibrousReport {
    pub fn passed(&self) -> bool {
        self.fib1.passed() && self.fib2.passed() && self.fib3.passed()
    }

    pub fn summary(&self) -> String {
        let status = |a: &AxiomResult| if a.passed() { "ok" } else { "FAILED" };
        format!(
            "Fib1 {}, Fib2 {}, Fib3 {}: verified up to ⟨{}⟩",
            status(&self.fib1),
            status(&self.fib2),
            status(&self.fib3),
            self.truncation
        )
    }
}

type Lift<C> = (<C as FibredCategory>::Obj, <C as FibredCategory>::Mor);

struct Checker<'c, C: FibredCategory> {
    cat: &'c C,
    n: usize,
    objects: Vec<Vec<C::Obj>>,
    /// Verified cocartesian lifts over `ρⁱ`.
    rho_lifts: HashMap<(C::Obj, usize), Option<Lift<C>>>,
}

impl<'c, C: FibredCategory> Checker<'c, C> {
    /// Whether `a: x → y` over `alpha` is cocartesian against every β out of ⟨alpha.dst⟩.
    fn is_cocartesian(&self, x: &C::Obj, alpha: &PtdMap, y: &C::Obj, a: &C::Mor) -> bool {
        for k in 0..=self.n {
            for beta in PtdMap::all(alpha.dst(), k) {
                let from_y = self.cat.morphisms_from(y, &beta);
                let from_x = self.cat.morphisms_from(x, &beta.after(alpha).expect("composable"));
                if from_y.len() != from_x.len() {
                    return false;
                }
                let target: HashSet<(C::Obj, C::Mor)> = from_x.into_iter().collect();
                let mut seen = HashSet::new();
                for (z, g) in from_y {
                    let image = (z, self.cat.compose(&g, a));
                    if !target.contains(&image) || !seen.insert(image) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn cocartesian_lift(&self, x: &C::Obj, alpha: &PtdMap) -> Option<(C::Obj, C::Mor)> {
        self.cat.morphisms_from(x, alpha).into_iter().find(|(y, a)| self.is_cocartesian(x, alpha, y, a))
    }

    fn iso_lift(&self, x: &C::Obj, sigma: &PtdMap) -> Option<(C::Obj, C::Mor)> {
        let inv = sigma.inverse().expect("permutation");
        self.cat.morphisms_from(x, sigma).into_iter().find(|(y, a)| {
            self.cat.morphisms_from(y, &inv).into_iter().any(|(z, b)| {
                z == *x
                    && self.cat.compose(&b, a) == self.cat.identity(x)
                    && self.cat.compose(a, &b) == self.cat.identity(y)
            })
        })
    }

    fn rho_lift(&mut self, x: &C::Obj, m: usize, i: usize) -> Option<(C::Obj, C::Mor)> {
        if let Some(r) = self.rho_lifts.get(&(x.clone(), i)) {
            return r.clone();
        }
        let r = self.cocartesian_lift(x, &PtdMap::rho(m, i));
        self.rho_lifts.insert((x.clone(), i), r.clone());
        r
    }

    fn fib1(&self) -> AxiomResult {
        let mut res = AxiomResult::default();
        for m in 0..=self.n {
            for x in &self.objects[m] {
                for dead in 0..m {
                    let survivors: Vec<usize> = (0..m).filter(|&i| i != dead).collect();
                    let alpha = PtdMap::keep(m, &survivors);
                    let ok = self.cocartesian_lift(x, &alpha).is_some();
                    res.record(ok, || format!("no cocartesian lift of {x:?} over {alpha}"));
                }
                for sigma in PtdMap::permutations(m) {
                    let ok = self.iso_lift(x, &sigma).is_some();
                    res.record(ok, || format!("no invertible lift of {x:?} over {sigma}"));
                }
            }
        }
        res
    }

    /// The tuple of `ρⁱ`-lifts of `x`, if all exist.
    fn decompose(&mut self, x: &C::Obj, m: usize) -> Option<Vec<(C::Obj, C::Mor)>> {
        (0..m).map(|i| self.rho_lift(x, m, i)).collect()
    }

    fn fib2(&mut self) -> AxiomResult {
        let mut res = AxiomResult::default();
        let ones = self.objects[1].len();
        for m in 0..=self.n {
            let objects = self.objects[m].clone();
            let mut images = HashSet::new();
            for x in &objects {
                match self.decompose(x, m) {
                    Some(parts) => {
                        let tuple: Vec<C::Obj> = parts.iter().map(|p| p.0.clone()).collect();
                        let fresh = images.insert(tuple.clone());
                        res.record(fresh, || format!("two objects over ⟨{m}⟩ restrict to {tuple:?}"));
                        // Fiber morphisms: Hom over id⟨m⟩ out of x versus the product over ⟨1⟩.
                        let lhs = self.cat.morphisms_from(x, &PtdMap::identity(m)).len();
                        let rhs: usize =
                            tuple.iter().map(|xi| self.cat.morphisms_from(xi, &PtdMap::identity(1)).len()).product();
                        res.record(lhs == rhs, || {
                            format!("{x:?} has {lhs} fiber morphisms out, its restrictions give {rhs}")
                        });
                    }
                    None => res.record(false, || format!("{x:?} has no cocartesian lift over some ρⁱ")),
                }
            }
            let expected = ones.checked_pow(m as u32).unwrap_or(usize::MAX);
            res.record(images.len() == expected, || {
                format!("objects over ⟨{m}⟩ hit {} of the {expected} tuples over ⟨1⟩", images.len())
            });
        }
        res
    }

    fn fib3(&mut self) -> AxiomResult {
        let mut res = AxiomResult::default();
        for m in 0..=self.n {
            let sources = self.objects[m].clone();
            for n in 0..=self.n {
                for f in PtdMap::all(m, n).collect::<Vec<_>>() {
                    let rho_f: Vec<PtdMap> = (0..n).map(|i| PtdMap::rho(n, i).after(&f).expect("composable")).collect();
                    for y in &sources {
                        let out = self.cat.morphisms_from(y, &f);
                        let expected: usize = rho_f.iter().map(|g| self.cat.morphisms_from(y, g).len()).product();
                        let mut seen = HashSet::new();
                        let mut ok = out.len() == expected;
                        for (x, g) in &out {
                            let Some(parts) = self.decompose(x, n) else {
                                ok = false;
                                break;
                            };
                            let image: Vec<(C::Obj, C::Mor)> =
                                parts.iter().map(|(xi, ai)| (xi.clone(), self.cat.compose(ai, g))).collect();
                            if !seen.insert(image) {
                                ok = false;
                                break;
                            }
                        }
                        res.record(ok, || {
                            format!("over {f} from {y:?}: {} morphisms, {expected} in the product", out.len())
                        });
                    }
                }
            }
        }
        res
    }
}

/// Runs Fib1 to Fib3 up to `⟨truncation⟩`.
pub fn check_fibrous_category<C: FibredCategory>(cat: &C, truncation: usize) -> FibrousReport {
    let objects = (0..=truncation.max(1)).map(|m| cat.objects_over(m)).collect();
    let mut checker = Checker { cat, n: truncation, objects, rho_lifts: HashMap::new() };
    let fib1 = checker.fib1();
    let fib2 = checker.fib2();
    let fib3 = checker.fib3();
    FibrousReport { truncation, fib1, fib2, fib3 }
}

pub fn check_fibrous(p: &dyn FiniteOperad, truncation: usize) -> FibrousReport {
    check_fibrous_category(&Ell::new(p), truncation)
}

/// Deliberate corruptions of ℓ(P), used to show the checks have teeth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Defect {
    /// No morphisms over maps `⟨3⟩ → ⟨2⟩`.
    DropMultiComponentFamily,
    /// Every morphism over `id⟨2⟩` appears twice.
    DuplicateFiberMorphisms,
    /// The first object over `⟨2⟩` is missing.
    DropObject,
    /// One extra morphism over each map `⟨1⟩ → ⟨0⟩`.
    ExtraMorphismToZero,
    /// No morphisms over the swap of `⟨2⟩`.
    DropSwap,
}

impl Defect {
    pub const ALL: [Defect; 5] = [
        Defect::DropMultiComponentFamily,
        Defect::DuplicateFiberMorphisms,
        Defect::DropObject,
        Defect::ExtraMorphismToZero,
        Defect::DropSwap,
    ];
}

/// ℓ(P) with a [`Defect`]; morphisms carry a tag distinguishing copies.
pub struct Defective<'a> {
    pub base: Ell<'a>,
    pub defect: Defect,
}

impl Defective<'_> {
    fn dropped_object(&self) -> Option<EllObject> {
        match self.defect {
            Defect::DropObject => self.base.objects_over(2).into_iter().next(),
            _ => None,
        }
    }
}

impl FibredCategory for Defective<'_> {
    type Obj = EllObject;
    type Mor = (EllMorphism, u8);

    fn objects_over(&self, n: usize) -> Vec<EllObject> {
        let dropped = self.dropped_object();
        self.base.objects_over(n).into_iter().filter(|x| Some(x) != dropped.as_ref()).collect()
    }

    fn morphisms_from(&self, x: &EllObject, alpha: &PtdMap) -> Vec<(EllObject, (EllMorphism, u8))> {
        let dropped = self.dropped_object();
        if Some(x) == dropped.as_ref() {
            return Vec::new();
        }
        let base = self.base.morphisms_from(x, alpha);
        let base = base.into_iter().filter(|(y, _)| Some(y) != dropped.as_ref());
        match self.defect {
            Defect::DropMultiComponentFamily if alpha.src() == 3 && alpha.dst() == 2 => Vec::new(),
            Defect::DropSwap if *alpha == PtdMap::permutation(&[1, 0]) => Vec::new(),
            Defect::DuplicateFiberMorphisms if *alpha == PtdMap::identity(2) => {
                base.flat_map(|(y, m)| [(y.clone(), (m.clone(), 0)), (y, (m, 1))]).collect()
            }
            Defect::ExtraMorphismToZero if alpha.src() == 1 && alpha.dst() == 0 => {
                base.flat_map(|(y, m)| [(y.clone(), (m.clone(), 0)), (y, (m, 1))]).collect()
            }
            _ => base.map(|(y, m)| (y, (m, 0))).collect(),
        }
    }

    fn compose(&self, g: &(EllMorphism, u8), f: &(EllMorphism, u8)) -> (EllMorphism, u8) {
        let m = self.base.compose(&g.0, &f.0);
        let tagged = match self.defect {
            Defect::DuplicateFiberMorphisms => m.over == PtdMap::identity(2),
            Defect::ExtraMorphismToZero => m.over.src() == 1 && m.over.dst() == 0,
            _ => false,
        };
        let tag = if tagged { g.1 | f.1 } else { 0 };
        (m, tag)
    }

    fn identity(&self, x: &EllObject) -> (EllMorphism, u8) {
        (self.base.identity(x), 0)
    }
}

pub fn check_defect(p: &dyn FiniteOperad, defect: Defect, truncation: usize) -> FibrousReport {
    check_fibrous_category(&Defective { base: Ell::new(p), defect }, truncation)
}
