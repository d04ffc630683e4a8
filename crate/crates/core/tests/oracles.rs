//! Brute-force oracles, written without the library's search or closure
//! code, checked against the library on every small algebra.

use std::collections::BTreeSet;

use itertools::Itertools;
use reslat::corpus::{builtin_algebra, KEYS};
use reslat::enumerate::enumerate_residuated;
use reslat::filters::all_filters;
use reslat::quotient::quotient;
use reslat::{ElemSet, ResiduatedLattice};

/// Order bits then product table, minimized over all relabelings.
type Code = (Vec<bool>, Vec<usize>);

fn canonical(n: usize, leq: &[bool], prod: &[usize]) -> Code {
    (0..n)
        .permutations(n)
        .map(|p| {
            let mut inv = vec![0; n];
            for (old, &new) in p.iter().enumerate() {
                inv[new] = old;
            }
            let l = (0..n * n).map(|i| leq[inv[i / n] * n + inv[i % n]]).collect();
            let m = (0..n * n).map(|i| p[prod[inv[i / n] * n + inv[i % n]]]).collect();
            (l, m)
        })
        .min()
        .expect("at least one permutation")
}

fn code_of(l: &ResiduatedLattice) -> Code {
    let n = l.n();
    let leq: Vec<bool> = (0..n * n).map(|i| l.leq(i / n, i % n)).collect();
    let prod: Vec<usize> = (0..n * n).map(|i| l.prod(i / n, i % n)).collect();
    canonical(n, &leq, &prod)
}

/// Partial orders with 0 least and n-1 greatest in which every pair has a
/// least upper bound and a greatest lower bound.
fn bounded_lattice_orders(n: usize) -> Vec<Vec<bool>> {
    let free: Vec<(usize, usize)> =
        (1..n.saturating_sub(1)).flat_map(|a| (1..n - 1).map(move |b| (a, b))).filter(|(a, b)| a != b).collect();
    let mut out = Vec::new();
    for bits in 0u64..(1 << free.len()) {
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
            leq[a] = true;
            leq[a * n + n - 1] = true;
        }
        for (k, &(a, b)) in free.iter().enumerate() {
            if bits >> k & 1 == 1 {
                leq[a * n + b] = true;
            }
        }
        let le = |a: usize, b: usize| leq[a * n + b];
        let antisym = (0..n).all(|a| (0..n).all(|b| a == b || !(le(a, b) && le(b, a))));
        let trans = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(le(a, b) && le(b, c)) || le(a, c))));
        if !(antisym && trans) {
            continue;
        }
        let has_lub = |a: usize, b: usize| {
            let ubs: Vec<usize> = (0..n).filter(|&u| le(a, u) && le(b, u)).collect();
            ubs.iter().any(|&u| ubs.iter().all(|&v| le(u, v)))
        };
        let has_glb = |a: usize, b: usize| {
            let lbs: Vec<usize> = (0..n).filter(|&u| le(u, a) && le(u, b)).collect();
            lbs.iter().any(|&u| lbs.iter().all(|&v| le(v, u)))
        };
        if (0..n).all(|a| (0..n).all(|b| has_lub(a, b) && has_glb(a, b))) {
            out.push(leq);
        }
    }
    out
}

/// Every commutative monoid table with unit n-1 on the given order that is
/// associative, monotone and residuated. With `zero_absorbs`, cells with a
/// 0 argument are fixed at 0 (a⊙0 ≤ 1⊙0 = 0 under monotonicity).
fn residuated_tables(n: usize, leq: &[bool], zero_absorbs: bool) -> Vec<Vec<usize>> {
    let le = |a: usize, b: usize| leq[a * n + b];
    let top = n - 1;
    let lo = usize::from(zero_absorbs);
    let cells: Vec<(usize, usize)> = (lo..top).flat_map(|a| (a..top).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    let total = n.pow(cells.len() as u32);
    for code in 0..total {
        let mut prod = vec![0; n * n];
        for a in 0..n {
            prod[a * n + top] = a;
            prod[top * n + a] = a;
        }
        let mut c = code;
        for &(a, b) in &cells {
            prod[a * n + b] = c % n;
            prod[b * n + a] = c % n;
            c /= n;
        }
        let p = |a: usize, b: usize| prod[a * n + b];
        let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| p(p(a, b), c) == p(a, p(b, c)))));
        let mono = (0..n).all(|a| (0..n).all(|b| !le(a, b) || (0..n).all(|c| le(p(a, c), p(b, c)))));
        let residuated = (0..n).all(|a| {
            (0..n).all(|b| {
                let below: Vec<usize> = (0..n).filter(|&c| le(p(a, c), b)).collect();
                below.iter().any(|&m| below.iter().all(|&c| le(c, m)))
            })
        });
        if assoc && mono && residuated {
            out.push(prod);
        }
    }
    out
}

fn oracle_codes(n: usize) -> BTreeSet<Code> {
    let zero_absorbs = n >= 5;
    bounded_lattice_orders(n)
        .into_iter()
        .flat_map(|leq| residuated_tables(n, &leq, zero_absorbs).into_iter().map(move |prod| canonical(n, &leq, &prod)))
        .collect()
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 2..=5 {
        let oracle = oracle_codes(n);
        let found = enumerate_residuated(n).unwrap();
        let codes: BTreeSet<Code> = found.iter().map(code_of).collect();
        assert_eq!(codes.len(), found.len(), "n = {n}: duplicates up to isomorphism");
        assert_eq!(codes, oracle, "n = {n}");
    }
}

/// Residuation and the lattice laws checked from the order alone.
fn independent_axioms(l: &ResiduatedLattice) -> Result<(), String> {
    let e: Vec<usize> = l.elements().collect();
    for &a in &e {
        for &b in &e {
            let ubs: Vec<usize> = e.iter().copied().filter(|&u| l.leq(a, u) && l.leq(b, u)).collect();
            if !ubs.contains(&l.join(a, b)) || !ubs.iter().all(|&u| l.leq(l.join(a, b), u)) {
                return Err(format!("join at ({a}, {b})"));
            }
            let lbs: Vec<usize> = e.iter().copied().filter(|&u| l.leq(u, a) && l.leq(u, b)).collect();
            if !lbs.contains(&l.meet(a, b)) || !lbs.iter().all(|&u| l.leq(u, l.meet(a, b))) {
                return Err(format!("meet at ({a}, {b})"));
            }
            if l.prod(a, b) != l.prod(b, a) {
                return Err(format!("commutativity at ({a}, {b})"));
            }
            for &c in &e {
                if l.prod(l.prod(a, b), c) != l.prod(a, l.prod(b, c)) {
                    return Err(format!("associativity at ({a}, {b}, {c})"));
                }
                if l.leq(l.prod(a, c), b) != l.leq(c, l.imp(a, b)) {
                    return Err(format!("residuation at ({a}, {b}, {c})"));
                }
            }
        }
        if l.prod(a, l.top()) != a || !l.leq(l.bottom(), a) || !l.leq(a, l.top()) {
            return Err(format!("bounds or unit at {a}"));
        }
    }
    Ok(())
}

fn population() -> Vec<ResiduatedLattice> {
    let mut all: Vec<ResiduatedLattice> = KEYS.iter().map(|k| builtin_algebra(k).unwrap()).collect();
    for n in 1..=4 {
        all.extend(enumerate_residuated(n).unwrap());
    }
    all
}

#[test]
fn every_algebra_passes_the_independent_axiom_check() {
    for l in population() {
        independent_axioms(&l).unwrap_or_else(|e| panic!("{}: {e}", l.name()));
    }
}

/// Classes of a ≡ b iff a→b ∈ F and b→a ∈ F, by pairwise scan.
fn congruence_classes(l: &ResiduatedLattice, f: ElemSet) -> Vec<ElemSet> {
    let related = |a: usize, b: usize| f.contains(l.imp(a, b)) && f.contains(l.imp(b, a));
    let mut classes: Vec<ElemSet> = Vec::new();
    for a in l.elements() {
        match classes.iter_mut().find(|c| related(c.first().unwrap(), a)) {
            Some(c) => c.insert(a),
            None => classes.push(ElemSet::singleton(a)),
        }
    }
    classes
}

#[test]
fn quotients_match_the_congruence_oracle() {
    for l in population() {
        for f in all_filters(&l).unwrap() {
            let oracle = congruence_classes(&l, f.members);
            let q = quotient(&l, f.members).unwrap();
            let mut got = q.congruence.classes.clone();
            got.sort_by_key(|c| c.first());
            assert_eq!(got, oracle, "{} mod {}", l.name(), l.fmt_set(f.members));
            let ops: [fn(&ResiduatedLattice, usize, usize) -> usize; 4] =
                [ResiduatedLattice::join, ResiduatedLattice::meet, ResiduatedLattice::prod, ResiduatedLattice::imp];
            let p = |a: usize| q.projection.apply(a);
            for (a, b) in l.elements().cartesian_product(l.elements()) {
                assert!(q.congruence.classes[p(a)].contains(a));
                for op in ops {
                    assert_eq!(p(op(&l, a, b)), op(&q.algebra, p(a), p(b)));
                }
            }
        }
    }
}

#[test]
fn filters_match_a_subset_scan() {
    for l in population() {
        let oracle: Vec<ElemSet> = (1u64..(1 << l.n()))
            .map(ElemSet::from_bits)
            .filter(|&s| {
                let up = s.iter().all(|a| l.elements().all(|b| !l.leq(a, b) || s.contains(b)));
                let closed = s.iter().all(|a| s.iter().all(|b| s.contains(l.prod(a, b))));
                up && closed
            })
            .collect();
        let mut got: Vec<ElemSet> = all_filters(&l).unwrap().into_iter().map(|f| f.members).collect();
        got.sort_by_key(|s| s.bits());
        assert_eq!(got, oracle, "{}", l.name());
    }
}
