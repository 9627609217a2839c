//! The skeleton of finite pointed sets: objects `⟨n⟩ = {1,…,n}₊`.
//!
//! Elements are stored 0-based; the basepoint is `None`.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};

/// A pointed map `⟨m⟩ → ⟨n⟩`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PtdMap {
    dst: usize,
    map: Vec<Option<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MapClass {
    Inert,
    Active,
    Both,
    Neither,
}

impl PtdMap {
    pub fn new(dst: usize, map: Vec<Option<usize>>) -> Result<PtdMap> {
        if let Some(j) = map.iter().flatten().find(|&&j| j >= dst) {
            return Err(Error::InvalidPointedMap(format!("{} is outside ⟨{dst}⟩", j + 1)));
        }
        Ok(PtdMap { dst, map })
    }

    /// From 1-based values, `0` meaning the basepoint.
    pub fn from_one_based(dst: usize, values: &[usize]) -> Result<PtdMap> {
        PtdMap::new(dst, values.iter().map(|&v| v.checked_sub(1)).collect())
    }

    pub fn identity(n: usize) -> PtdMap {
        PtdMap { dst: n, map: (0..n).map(Some).collect() }
    }

    /// `ρⁱ: ⟨n⟩ → ⟨1⟩`, keeping only `i` (0-based).
    pub fn rho(n: usize, i: usize) -> PtdMap {
        PtdMap { dst: 1, map: (0..n).map(|k| (k == i).then_some(0)).collect() }
    }

    /// The order-preserving inert map keeping exactly `survivors` (sorted).
    pub fn keep(m: usize, survivors: &[usize]) -> PtdMap {
        let mut map = vec![None; m];
        for (rank, &i) in survivors.iter().enumerate() {
            map[i] = Some(rank);
        }
        PtdMap { dst: survivors.len(), map }
    }

    /// The bijection `i ↦ perm[i]`.
    pub fn permutation(perm: &[usize]) -> PtdMap {
        PtdMap { dst: perm.len(), map: perm.iter().map(|&j| Some(j)).collect() }
    }

    pub fn src(&self) -> usize {
        self.map.len()
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn apply(&self, i: usize) -> Option<usize> {
        self.map[i]
    }

    pub fn values(&self) -> &[Option<usize>] {
        &self.map
    }

    /// The fiber over `j`, in increasing order.
    pub fn fiber(&self, j: usize) -> Vec<usize> {
        (0..self.map.len()).filter(|&i| self.map[i] == Some(j)).collect()
    }

    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.dst];
        for (i, j) in self.map.iter().enumerate() {
            if let Some(j) = j {
                out[*j].push(i);
            }
        }
        out
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &PtdMap) -> Result<PtdMap> {
        if inner.dst != self.src() {
            return Err(Error::Boundary(format!("⟨{}⟩ does not feed ⟨{}⟩", inner.dst, self.src())));
        }
        Ok(PtdMap { dst: self.dst, map: inner.map.iter().map(|x| x.and_then(|j| self.map[j])).collect() })
    }

    pub fn is_inert(&self) -> bool {
        self.fibers().iter().all(|f| f.len() == 1)
    }

    pub fn is_active(&self) -> bool {
        self.map.iter().all(Option::is_some)
    }

    pub fn is_order_preserving(&self) -> bool {
        self.map.iter().flatten().tuple_windows().all(|(a, b)| a <= b)
    }

    pub fn is_bijection(&self) -> bool {
        self.src() == self.dst && self.is_inert()
    }

    pub fn classify(&self) -> MapClass {
        match (self.is_inert(), self.is_active()) {
            (true, true) => MapClass::Both,
            (true, false) => MapClass::Inert,
            (false, true) => MapClass::Active,
            (false, false) => MapClass::Neither,
        }
    }

    /// `self = active ∘ inert`, the intermediate object being the surviving
    /// elements in their original order.
    pub fn factorize(&self) -> (PtdMap, PtdMap) {
        let survivors: Vec<usize> = (0..self.src()).filter(|&i| self.map[i].is_some()).collect();
        let inert = PtdMap::keep(self.src(), &survivors);
        let active = PtdMap { dst: self.dst, map: survivors.iter().map(|&i| self.map[i]).collect() };
        (inert, active)
    }

    /// Every pointed map `⟨m⟩ → ⟨n⟩`, in lexicographic order.
    pub fn all(m: usize, n: usize) -> impl Iterator<Item = PtdMap> {
        (0..m)
            .map(|_| std::iter::once(None).chain((0..n).map(Some)))
            .multi_cartesian_product()
            .map(move |map| PtdMap { dst: n, map })
    }

    /// Every bijection of `⟨n⟩`.
    pub fn permutations(n: usize) -> impl Iterator<Item = PtdMap> {
        (0..n).permutations(n).map(|p| PtdMap::permutation(&p))
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Option<PtdMap> {
        if !self.is_bijection() {
            return None;
        }
        let mut map = vec![None; self.dst];
        for (i, j) in self.map.iter().enumerate() {
            map[j.expect("bijection")] = Some(i);
        }
        Some(PtdMap { dst: self.src(), map })
    }
}

impl fmt::Display for PtdMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals = self.map.iter().map(|x| x.map_or("*".to_string(), |j| (j + 1).to_string())).join(",");
        write!(f, "⟨{}⟩→⟨{}⟩[{vals}]", self.src(), self.dst)
    }
}

impl fmt::Debug for PtdMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for PtdMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `⟨m⟩ ∧ ⟨n⟩ = ⟨mn⟩`, with `(i, j)` at index `i·n + j`.
pub fn smash_obj(m: usize, n: usize) -> usize {
    m * n
}

/// Smash product of pointed maps; the basepoint absorbs.
pub fn smash(f: &PtdMap, g: &PtdMap) -> PtdMap {
    let (n, q) = (g.src(), g.dst());
    let mut map = Vec::with_capacity(f.src() * n);
    for i in 0..f.src() {
        for j in 0..n {
            map.push(match (f.map[i], g.map[j]) {
                (Some(a), Some(b)) => Some(a * q + b),
                _ => None,
            });
        }
    }
    PtdMap { dst: f.dst() * q, map }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_examples() {
        assert_eq!(PtdMap::from_one_based(1, &[1, 0]).unwrap().classify(), MapClass::Inert);
        assert_eq!(PtdMap::from_one_based(1, &[1, 1]).unwrap().classify(), MapClass::Active);
        assert_eq!(PtdMap::identity(3).classify(), MapClass::Both);
        assert_eq!(PtdMap::from_one_based(2, &[1, 1, 0]).unwrap().classify(), MapClass::Neither);
        assert_eq!(PtdMap::rho(2, 0), PtdMap::from_one_based(1, &[1, 0]).unwrap());
        assert!(PtdMap::from_one_based(1, &[2]).is_err());
    }

    #[test]
    fn factorization_examples() {
        let a = PtdMap::from_one_based(1, &[1, 0, 1]).unwrap();
        let (inert, active) = a.factorize();
        assert_eq!(inert, PtdMap::from_one_based(2, &[1, 0, 2]).unwrap());
        assert_eq!(active, PtdMap::from_one_based(1, &[1, 1]).unwrap());
        let rho = PtdMap::rho(3, 1);
        assert_eq!(rho.factorize(), (rho.clone(), PtdMap::identity(1)));
        let act = PtdMap::from_one_based(1, &[1, 1]).unwrap();
        assert_eq!(act.factorize(), (PtdMap::identity(2), act));
    }

    #[test]
    fn factorization_is_exhaustively_unique() {
        for m in 0..=4 {
            for n in 0..=4 {
                for a in PtdMap::all(m, n) {
                    let (i, act) = a.factorize();
                    assert!(i.is_inert() && act.is_active());
                    assert!(i.is_order_preserving());
                    assert_eq!(act.after(&i).unwrap(), a);
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(PtdMap::all(0, 3).count(), 1);
        assert_eq!(PtdMap::all(2, 1).count(), 4);
        assert_eq!(PtdMap::all(3, 2).count(), 27);
        assert_eq!(PtdMap::permutations(3).count(), 6);
    }

    #[test]
    fn smash_examples() {
        assert_eq!(smash_obj(1, 1), 1);
        assert_eq!(smash_obj(3, 0), 0);
        assert_eq!(smash_obj(2, 3), 6);
        let f = PtdMap::rho(2, 1);
        let g = PtdMap::identity(3);
        let s = smash(&f, &g);
        assert_eq!((s.src(), s.dst()), (6, 3));
        assert_eq!(s.values(), &[None, None, None, Some(0), Some(1), Some(2)]);
        // Functorial in each variable.
        for g1 in PtdMap::all(2, 2) {
            for g2 in PtdMap::all(2, 1) {
                for h in PtdMap::all(2, 2) {
                    let lhs = smash(&g2.after(&g1).unwrap(), &h);
                    let rhs = smash(&g2, &PtdMap::identity(2)).after(&smash(&g1, &h)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn inverse_of_permutation() {
        let p = PtdMap::permutation(&[2, 0, 1]);
        let q = p.inverse().unwrap();
        assert_eq!(q.after(&p).unwrap(), PtdMap::identity(3));
        assert!(PtdMap::rho(2, 0).inverse().is_none());
    }
}
