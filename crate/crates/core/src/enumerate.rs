//! Exhaustive generation of small bounded lattices and residuated lattices,
//! up to isomorphism, and a counterexample hunt over them.
//!
//! Lattices are generated as partial orders on the middle elements
//! `1..n-1` whose strict relations all point from a smaller to a larger
//! index; a lattice is kept when its relation code is the least among all
//! such relabelings. Products are then searched cell by cell with
//! the order and monoid laws checked as soon as the relevant cells are
//! fixed. A table is kept when it is least among
//! its images under the lattice automorphisms.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{validate, ResiduatedLattice};
use crate::error::{AlgebraError, Result};
use crate::lattice::join_meet_tables;
use crate::property::{HuntSpec, PropertyRegistry};
use crate::spec::AlgebraSpec;

pub const DEFAULT_FULL_CAP: usize = 5;
pub const DEFAULT_CHAIN_CAP: usize = 6;
pub const SIZE_CAP_ENV: &str = "RESLAT_SIZE_CAP";

/// Size cap for a lattice family, overridden by `RESLAT_SIZE_CAP`.
pub fn size_cap(chains_only: bool) -> usize {
    std::env::var(SIZE_CAP_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(if chains_only {
        DEFAULT_CHAIN_CAP
    } else {
        DEFAULT_FULL_CAP
    })
}

fn check_cap(n: usize, chains_only: bool) -> Result<()> {
    let cap = size_cap(chains_only);
    if n > cap {
        return Err(AlgebraError::EnumerationCapExceeded { n, cap });
    }
    Ok(())
}

/// A bounded lattice on `0..n` with bottom `0` and top `n-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedLattice {
    pub n: usize,
    /// Row-major `leq[a*n+b]`.
    pub leq: Vec<bool>,
    pub join: Vec<usize>,
    pub meet: Vec<usize>,
}

impl BoundedLattice {
    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.leq[a * self.n + b] || self.leq[b * self.n + a]))
    }

    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let lt = |a: usize, b: usize| a != b && self.leq[a * n + b];
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Permutations of the middle elements that preserve the order.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        permutations_of_middle(n)
            .into_iter()
            .filter(|p| (0..n).all(|a| (0..n).all(|b| self.leq[a * n + b] == self.leq[p[a] * n + p[b]])))
            .collect()
    }
}

/// Every permutation of `0..n` fixing `0` and `n-1`, identity first.
fn permutations_of_middle(n: usize) -> Vec<Vec<usize>> {
    if n <= 2 {
        return vec![(0..n).collect()];
    }
    let mut out = Vec::new();
    let mut mid: Vec<usize> = (1..n - 1).collect();
    let k = mid.len();
    heap_permutations(&mut mid, k, &mut |m| {
        let mut p = Vec::with_capacity(n);
        p.push(0);
        p.extend_from_slice(m);
        p.push(n - 1);
        out.push(p);
    });
    out.sort();
    out
}

fn heap_permutations(a: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        f(a);
        return;
    }
    for i in 0..k {
        heap_permutations(a, k - 1, f);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
}

/// Pairs `(i, j)` of middle elements with `i < j`, in code order.
fn middle_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..n.saturating_sub(1) {
        for j in i + 1..n - 1 {
            out.push((i, j));
        }
    }
    out
}

fn full_leq(n: usize, pairs: &[(usize, usize)], code: u64) -> Vec<bool> {
    let mut leq = vec![false; n * n];
    for a in 0..n {
        leq[a * n + a] = true;
        leq[a] = true; // 0 ≤ a
        leq[a * n + n - 1] = true;
    }
    for (bit, &(i, j)) in pairs.iter().enumerate() {
        if code >> bit & 1 == 1 {
            leq[i * n + j] = true;
        }
    }
    leq
}

fn is_transitive(n: usize, leq: &[bool]) -> bool {
    (0..n).all(|a| (0..n).all(|b| !leq[a * n + b] || (0..n).all(|c| !leq[b * n + c] || leq[a * n + c])))
}

/// Relation code of `leq` relabeled by `p`, if every relation still points
/// upward in index.
fn relabeled_code(n: usize, leq: &[bool], pairs: &[(usize, usize)], p: &[usize]) -> Option<u64> {
    let mut code = 0u64;
    for a in 1..n - 1 {
        for b in 1..n - 1 {
            if a != b && leq[a * n + b] {
                let (x, y) = (p[a], p[b]);
                if x > y {
                    return None;
                }
                let bit = pairs.iter().position(|&q| q == (x, y)).expect("middle pair");
                code |= 1 << bit;
            }
        }
    }
    Some(code)
}

/// All bounded lattices on `n` elements up to isomorphism, in increasing
/// relation code (so the antichain-like shapes first and the chain last).
pub fn enumerate_lattices(n: usize) -> Result<Vec<BoundedLattice>> {
    check_cap(n, false)?;
    Ok(lattices_uncapped(n))
}

fn lattices_uncapped(n: usize) -> Vec<BoundedLattice> {
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![BoundedLattice { n, leq: vec![true], join: vec![0], meet: vec![0] }];
    }
    let pairs = middle_pairs(n);
    let perms = permutations_of_middle(n);
    let mut out = Vec::new();
    for code in 0..(1u64 << pairs.len()) {
        let leq = full_leq(n, &pairs, code);
        if !is_transitive(n, &leq) {
            continue;
        }
        let canonical =
            perms.iter().filter_map(|p| relabeled_code(n, &leq, &pairs, p)).min().expect("identity relabeling");
        if canonical != code {
            continue;
        }
        if let Some((join, meet)) = join_meet_tables(n, &leq) {
            out.push(BoundedLattice { n, leq, join, meet });
        }
    }
    out
}

/// Chains only, one per size.
pub fn chain_lattice(n: usize) -> BoundedLattice {
    let leq: Vec<bool> = (0..n * n).map(|i| i / n <= i % n).collect();
    let join = (0..n * n).map(|i| (i / n).max(i % n)).collect();
    let meet = (0..n * n).map(|i| (i / n).min(i % n)).collect();
    BoundedLattice { n, leq, join, meet }
}

/// Element names: `0`, `a`, `b`, .., `1`.
pub fn element_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i == 0 {
                "0".to_string()
            } else if i == n - 1 {
                "1".to_string()
            } else {
                char::from(b'a' + (i as u8 - 1)).to_string()
            }
        })
        .collect()
}

struct ProdSearch<'a> {
    lat: &'a BoundedLattice,
    autos: &'a [Vec<usize>],
    cells: Vec<(usize, usize)>,
    prod: Vec<Option<usize>>,
    found: Vec<Vec<usize>>,
    nodes: &'a AtomicU64,
    budget: Option<u64>,
}

impl ProdSearch<'_> {
    fn get(&self, a: usize, b: usize) -> Option<usize> {
        self.prod[a * self.lat.n + b]
    }

    fn set(&mut self, a: usize, b: usize, v: Option<usize>) {
        let n = self.lat.n;
        self.prod[a * n + b] = v;
        self.prod[b * n + a] = v;
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.lat.leq[a * self.lat.n + b]
    }

    /// Checks monotonicity, join distributivity and associativity on every
    /// instance whose cells are all fixed.
    fn consistent(&self) -> bool {
        let n = self.lat.n;
        let lat = self.lat;
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = self.get(x, y) else { continue };
                for z in 0..n {
                    // x ≤ z ⇒ x⊙y ≤ z⊙y
                    if let Some(zy) = self.get(z, y) {
                        if self.leq(x, z) && !self.leq(xy, zy) {
                            return false;
                        }
                    }
                    // x⊙(y∨z) = x⊙y ∨ x⊙z
                    if let (Some(xz), Some(xyz)) = (self.get(x, z), self.get(x, lat.join[y * n + z])) {
                        if xyz != lat.join[xy * n + xz] {
                            return false;
                        }
                    }
                    // (x⊙y)⊙z = x⊙(y⊙z)
                    if let (Some(l), Some(yz)) = (self.get(xy, z), self.get(y, z)) {
                        if let Some(r) = self.get(x, yz) {
                            if l != r {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, k: usize) -> Result<()> {
        let count = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(b) = self.budget {
            if count > b {
                return Err(AlgebraError::BudgetExceeded { nodes: b });
            }
        }
        if k == self.cells.len() {
            if self.is_canonical() && self.fully_associative() {
                self.found.push(self.prod.iter().map(|v| v.expect("complete")).collect());
            }
            return Ok(());
        }
        let (i, j) = self.cells[k];
        let n = self.lat.n;
        let m = self.lat.meet[i * n + j];
        for v in 0..n {
            if !self.leq(v, m) {
                continue;
            }
            self.set(i, j, Some(v));
            if self.consistent() {
                self.run(k + 1)?;
            }
        }
        self.set(i, j, None);
        Ok(())
    }

    fn fully_associative(&self) -> bool {
        let n = self.lat.n;
        let p = |a: usize, b: usize| self.get(a, b).expect("complete");
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| p(p(x, y), z) == p(x, p(y, z)))))
    }

    /// The table is least among its automorphic images, compared cell by
    /// cell in search order.
    fn is_canonical(&self) -> bool {
        let p = |a: usize, b: usize| self.get(a, b).expect("complete");
        for s in self.autos.iter().skip(1) {
            for &(i, j) in &self.cells {
                // the image table holds s(p(s⁻¹i, s⁻¹j)) at (i, j)
                let (si, sj) = (inverse(s, i), inverse(s, j));
                let image = s[p(si, sj)];
                let own = p(i, j);
                if image < own {
                    return false;
                }
                if image > own {
                    break;
                }
            }
        }
        true
    }
}

fn inverse(p: &[usize], x: usize) -> usize {
    p.iter().position(|&y| y == x).expect("permutation")
}

/// All residuated products on one lattice, as full row-major tables.
pub fn products_on(lat: &BoundedLattice, budget: Option<u64>, nodes: &AtomicU64) -> Result<Vec<Vec<usize>>> {
    let n = lat.n;
    let mut prod = vec![None; n * n];
    if n > 0 {
        let top = n - 1;
        for x in 0..n {
            prod[x] = Some(0);
            prod[x * n] = Some(0);
            prod[top * n + x] = Some(x);
            prod[x * n + top] = Some(x);
        }
    }
    let mut cells = Vec::new();
    for i in 1..n.saturating_sub(1) {
        for j in i..n - 1 {
            cells.push((i, j));
        }
    }
    let autos = lat.automorphisms();
    let mut search = ProdSearch { lat, autos: &autos, cells, prod, found: Vec::new(), nodes, budget };
    search.run(0)?;
    Ok(search.found)
}

fn algebra_from(lat: &BoundedLattice, prod: &[usize], name: String) -> Result<ResiduatedLattice> {
    let n = lat.n;
    let spec = AlgebraSpec::from_fns(
        name,
        element_names(n),
        0,
        n - 1,
        |a, b| lat.join[a * n + b],
        |a, b| lat.meet[a * n + b],
        |a, b| prod[a * n + b],
        None,
    );
    validate(&spec)
}

/// What to enumerate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationTask {
    pub size: usize,
    pub chains_only: bool,
    /// Property names that every result must satisfy.
    pub filters: Vec<String>,
    /// Cap on search nodes across the whole run.
    pub budget: Option<u64>,
}

impl EnumerationTask {
    pub fn new(size: usize) -> Self {
        EnumerationTask { size, chains_only: false, filters: Vec::new(), budget: None }
    }

    pub fn chains(size: usize) -> Self {
        EnumerationTask { chains_only: true, ..Self::new(size) }
    }

    pub fn run(&self, registry: &PropertyRegistry) -> Result<Vec<ResiduatedLattice>> {
        check_cap(self.size, self.chains_only)?;
        let props = self.filters.iter().map(|f| registry.get(f)).collect::<Result<Vec<_>>>()?;
        let all = residuated_uncapped(self.size, self.chains_only, self.budget)?;
        let keep: Vec<bool> = all
            .par_iter()
            .map(|l| {
                for p in &props {
                    if !p.holds(l)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            })
            .collect::<Result<_>>()?;
        Ok(all.into_iter().zip(keep).filter_map(|(l, k)| k.then_some(l)).collect())
    }
}

/// All residuated lattices on `n` elements up to isomorphism, validated.
/// Ordered by lattice (as in [`enumerate_lattices`]), then by product table.
/// Names are `R{n}.{lattice}.{k}`.
pub fn enumerate_residuated(n: usize) -> Result<Vec<ResiduatedLattice>> {
    check_cap(n, false)?;
    residuated_uncapped(n, false, None)
}

/// Residuated chains on `n` elements.
pub fn enumerate_residuated_chains(n: usize) -> Result<Vec<ResiduatedLattice>> {
    check_cap(n, true)?;
    residuated_uncapped(n, true, None)
}

fn residuated_uncapped(n: usize, chains_only: bool, budget: Option<u64>) -> Result<Vec<ResiduatedLattice>> {
    if n == 0 {
        return Ok(vec![]);
    }
    let lattices: Vec<(usize, BoundedLattice)> = lattices_uncapped(n).into_iter().enumerate().collect();
    let nodes = AtomicU64::new(0);
    let per_lattice: Vec<Vec<ResiduatedLattice>> = lattices
        .par_iter()
        .filter(|(_, lat)| !chains_only || lat.is_chain())
        .map(|(li, lat)| {
            products_on(lat, budget, &nodes)?
                .iter()
                .enumerate()
                .map(|(k, prod)| algebra_from(lat, prod, format!("R{n}.{li}.{k}")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(per_lattice.into_iter().flatten().collect())
}

/// Result of a counterexample hunt.
#[derive(Debug, Clone)]
pub enum HuntOutcome {
    /// Least algebra meeting every antecedent and failing the consequent,
    /// with the consequent's violation.
    Found { algebra: ResiduatedLattice, violation: String },
    /// No counterexample on any size up to and including this one.
    Exhausted { size: usize, examined: usize },
}

/// Searches sizes `1..=max_size` in enumeration order.
pub fn hunt(spec: &HuntSpec, max_size: usize, registry: &PropertyRegistry) -> Result<HuntOutcome> {
    let antecedents = spec.antecedents.iter().map(|a| registry.get(a)).collect::<Result<Vec<_>>>()?;
    let consequent = registry.get(&spec.consequent)?;
    check_cap(max_size, false)?;
    let mut examined = 0;
    for n in 1..=max_size {
        let algebras = residuated_uncapped(n, false, None)?;
        examined += algebras.len();
        let verdicts: Vec<Option<String>> = algebras
            .par_iter()
            .map(|l| {
                for a in &antecedents {
                    if !a.holds(l)? {
                        return Ok(None);
                    }
                }
                consequent.evaluate(l)
            })
            .collect::<Result<_>>()?;
        if let Some((l, v)) = algebras.into_iter().zip(verdicts).find_map(|(l, v)| v.map(|v| (l, v))) {
            return Ok(HuntOutcome::Found { algebra: l, violation: v });
        }
    }
    Ok(HuntOutcome::Exhausted { size: max_size, examined })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| lattices_uncapped(n).len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 5, 15]);
    }

    #[test]
    fn lattices_have_bounds_and_natural_order() {
        for lat in lattices_uncapped(5) {
            let n = lat.n;
            for a in 0..n {
                assert!(lat.leq[a]);
                assert!(lat.leq[a * n + n - 1]);
                for b in 0..n {
                    if lat.leq[a * n + b] {
                        assert!(a <= b);
                    }
                }
            }
        }
    }

    #[test]
    fn small_residuated_counts() {
        assert_eq!(residuated_uncapped(1, false, None).unwrap().len(), 1);
        assert_eq!(residuated_uncapped(2, false, None).unwrap().len(), 1);
        assert_eq!(residuated_uncapped(3, false, None).unwrap().len(), 2);
    }

    #[test]
    fn three_chains_include_goedel_and_lukasiewicz() {
        let all = residuated_uncapped(3, false, None).unwrap();
        let sq: Vec<usize> = all.iter().map(|l| l.prod(1, 1)).collect();
        assert!(sq.contains(&0) && sq.contains(&1));
    }

    #[test]
    fn diamond_carries_only_the_boolean_product() {
        let all = residuated_uncapped(4, false, None).unwrap();
        let diamonds: Vec<_> = all.iter().filter(|l| !l.is_chain()).collect();
        assert_eq!(diamonds.len(), 1);
        assert!(diamonds[0]
            .elements()
            .all(|a| diamonds[0].elements().all(|b| diamonds[0].prod(a, b) == diamonds[0].meet(a, b))));
    }

    #[test]
    fn budget_is_enforced() {
        let err = residuated_uncapped(5, false, Some(10)).unwrap_err();
        assert!(matches!(err, AlgebraError::BudgetExceeded { nodes: 10 }));
    }

    #[test]
    fn names_are_letters() {
        assert_eq!(element_names(4), ["0", "a", "b", "1"]);
    }
}
