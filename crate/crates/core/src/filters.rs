//! Filters, prime and maximal spectra with their Stone topologies, dense
//! elements and the radical.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::ResiduatedLattice;
use crate::error::{AlgebraError, Result};
use crate::set::{supersets_within, ElemSet};

/// Largest carrier for which [`all_filters`] scans every subset.
pub const EXHAUSTIVE_FILTER_CAP: usize = 20;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct FilterFlags {
    pub proper: bool,
    pub prime: bool,
    pub maximal: bool,
    pub primary: bool,
    pub quasi_primary: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filter {
    pub members: ElemSet,
    pub flags: FilterFlags,
}

impl Filter {
    /// Wraps a subset after checking both the filter and the
    /// deductive-system characterizations.
    pub fn new(l: &ResiduatedLattice, members: ElemSet) -> Result<Filter> {
        let as_filter = is_filter(l, members);
        let as_ds = is_deductive_system(l, members);
        if as_filter != as_ds {
            return Err(AlgebraError::Inconsistent {
                check: "filter ⇔ deductive system",
                detail: format!("{} filter={as_filter} deductive={as_ds}", l.fmt_set(members)),
            });
        }
        if !as_filter {
            return Err(AlgebraError::NotAFilter);
        }
        Ok(Filter { members, flags: filter_flags(l, members) })
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn is_proper(&self) -> bool {
        self.flags.proper
    }
}

/// Nonempty, ⊙-closed and upward closed.
pub fn is_filter(l: &ResiduatedLattice, s: ElemSet) -> bool {
    !s.is_empty()
        && s.iter().all(|a| l.elements().all(|b| !l.leq(a, b) || s.contains(b)))
        && s.iter().all(|a| s.iter().all(|b| s.contains(l.prod(a, b))))
}

/// Contains 1 and is closed under modus ponens.
pub fn is_deductive_system(l: &ResiduatedLattice, s: ElemSet) -> bool {
    s.contains(l.top()) && s.iter().all(|a| l.elements().all(|b| !s.contains(l.imp(a, b)) || s.contains(b)))
}

/// Least filter containing `x`; `{1}` for the empty set.
pub fn generated_filter(l: &ResiduatedLattice, x: ElemSet) -> Filter {
    let members = filter_closure(l, x);
    Filter { members, flags: filter_flags(l, members) }
}

fn filter_closure(l: &ResiduatedLattice, x: ElemSet) -> ElemSet {
    let mut s = x.with(l.top());
    loop {
        let mut next = l.up_closure(s);
        for a in s {
            for b in s {
                next.insert(l.prod(a, b));
            }
        }
        if next == s {
            return s;
        }
        s = next;
    }
}

pub fn is_prime(l: &ResiduatedLattice, f: ElemSet) -> bool {
    f != l.full()
        && l.elements().all(|a| l.elements().all(|b| !f.contains(l.join(a, b)) || f.contains(a) || f.contains(b)))
}

/// Proper, and adjoining any outside element generates the whole carrier.
pub fn is_maximal(l: &ResiduatedLattice, f: ElemSet) -> bool {
    f != l.full() && l.elements().filter(|&a| !f.contains(a)).all(|a| filter_closure(l, f.with(a)) == l.full())
}

/// `¬(a⊙b) ∈ F` implies `¬aⁿ ∈ F` or `¬bⁿ ∈ F` for some `n ≥ 1`.
///
/// `¬aⁿ` grows with `n` and `F` is an up-set, so the existential is decided
/// at the stable power of `a`.
pub fn is_primary(l: &ResiduatedLattice, f: ElemSet) -> Result<bool> {
    if f == l.full() {
        return Err(AlgebraError::NotProper);
    }
    Ok(first_primary_violation(l, f).is_none())
}

pub(crate) fn first_primary_violation(l: &ResiduatedLattice, f: ElemSet) -> Option<(usize, usize)> {
    let neg_stable: Vec<usize> = l.elements().map(|a| l.neg(l.stable_power(a))).collect();
    l.elements()
        .flat_map(|a| l.elements().map(move |b| (a, b)))
        .find(|&(a, b)| f.contains(l.neg(l.prod(a, b))) && !f.contains(neg_stable[a]) && !f.contains(neg_stable[b]))
}

/// `¬(a⊙b) ∈ F` implies some `u` with `u ∨ ¬u ∈ B(A)` and some `n ≥ 1`
/// with `¬(aⁿ⊙u) ∈ F` and `¬(bⁿ⊙¬u) ∈ F`. The condition on `u` is taken
/// literally (`u ∨ ¬u` central, not `u` central). Both memberships are
/// monotone in `n`, so the stable powers decide the existential.
pub fn is_quasi_primary(l: &ResiduatedLattice, f: ElemSet) -> Result<bool> {
    if f == l.full() {
        return Err(AlgebraError::NotProper);
    }
    Ok(first_quasi_primary_violation(l, f).is_none())
}

pub(crate) fn first_quasi_primary_violation(l: &ResiduatedLattice, f: ElemSet) -> Option<(usize, usize)> {
    let center = l.boolean_center();
    let witnesses: Vec<usize> = l.elements().filter(|&u| center.contains(l.join(u, l.neg(u)))).collect();
    let stable: Vec<usize> = l.elements().map(|a| l.stable_power(a)).collect();
    l.elements().flat_map(|a| l.elements().map(move |b| (a, b))).find(|&(a, b)| {
        f.contains(l.neg(l.prod(a, b)))
            && !witnesses
                .iter()
                .any(|&u| f.contains(l.neg(l.prod(stable[a], u))) && f.contains(l.neg(l.prod(stable[b], l.neg(u)))))
    })
}

fn filter_flags(l: &ResiduatedLattice, f: ElemSet) -> FilterFlags {
    let proper = f != l.full();
    if !proper {
        return FilterFlags::default();
    }
    FilterFlags {
        proper,
        prime: is_prime(l, f),
        maximal: is_maximal(l, f),
        primary: first_primary_violation(l, f).is_none(),
        quasi_primary: first_quasi_primary_violation(l, f).is_none(),
    }
}

fn canonical_key(f: &ElemSet) -> (usize, u64) {
    (f.len(), f.bits())
}

/// Every filter, found by scanning subsets that contain 1. Sorted by
/// cardinality, then by bitmask.
pub fn all_filters(l: &ResiduatedLattice) -> Result<Vec<Filter>> {
    if l.n() > EXHAUSTIVE_FILTER_CAP {
        return Err(AlgebraError::ExhaustiveCapExceeded { n: l.n(), cap: EXHAUSTIVE_FILTER_CAP });
    }
    let ups: Vec<ElemSet> = l.elements().map(|a| l.up_closure(ElemSet::singleton(a))).collect();
    let mut sets: Vec<ElemSet> = supersets_within(l.n(), ElemSet::singleton(l.top()))
        .filter(|&s| s.iter().all(|a| ups[a].is_subset(s)))
        .filter(|&s| s.iter().all(|a| s.iter().all(|b| s.contains(l.prod(a, b)))))
        .collect();
    sets.sort_by_key(canonical_key);
    sets.into_iter().map(|s| Filter::new(l, s)).collect()
}

/// Maximal filters in canonical order.
pub fn maximal_filters(l: &ResiduatedLattice) -> Result<Vec<Filter>> {
    Ok(all_filters(l)?.into_iter().filter(|f| f.flags.maximal).collect())
}

pub fn prime_filters(l: &ResiduatedLattice) -> Result<Vec<Filter>> {
    Ok(all_filters(l)?.into_iter().filter(|f| f.flags.prime).collect())
}

/// A finite spectral space. Point sets are bitmasks over point indices.
#[derive(Debug, Clone)]
pub struct SpectrumSpace {
    pub points: Vec<Filter>,
    /// `basis[a]` is `S(a)`, the points not containing `a`.
    pub basis: Vec<ElemSet>,
    /// Every open set, sorted by cardinality then bitmask.
    pub opens: Vec<ElemSet>,
}

impl SpectrumSpace {
    fn build(l: &ResiduatedLattice, points: Vec<Filter>) -> Result<SpectrumSpace> {
        if points.len() > crate::set::MAX_BITS {
            return Err(AlgebraError::Inconsistent {
                check: "spectrum size",
                detail: format!("{} points exceed the bitmask width", points.len()),
            });
        }
        let basis: Vec<ElemSet> =
            l.elements().map(|a| (0..points.len()).filter(|&p| !points[p].contains(a)).collect()).collect();
        let mut opens: BTreeSet<(usize, u64)> = BTreeSet::new();
        opens.insert((0, 0));
        for b in &basis {
            let current: Vec<ElemSet> = opens.iter().map(|&(_, bits)| ElemSet::from_bits(bits)).collect();
            for o in current {
                opens.insert(canonical_key(&o.union(*b)));
            }
        }
        Ok(SpectrumSpace {
            points,
            basis,
            opens: opens.into_iter().map(|(_, bits)| ElemSet::from_bits(bits)).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn all_points(&self) -> ElemSet {
        ElemSet::full(self.points.len())
    }

    /// `S(X)`: points not containing `X`.
    pub fn open_of(&self, x: ElemSet) -> ElemSet {
        (0..self.points.len()).filter(|&p| !x.is_subset(self.points[p].members)).collect()
    }

    pub fn is_open(&self, s: ElemSet) -> bool {
        self.opens.binary_search_by_key(&canonical_key(&s), canonical_key).is_ok()
    }

    /// Whether the open family contains ∅ and the whole space and is closed
    /// under pairwise union and intersection.
    pub fn is_topology(&self) -> bool {
        self.is_open(ElemSet::EMPTY)
            && self.is_open(self.all_points())
            && self
                .opens
                .iter()
                .all(|&u| self.opens.iter().all(|&v| self.is_open(u.union(v)) && self.is_open(u.intersection(v))))
    }

    /// Position of the point whose filter is `members`.
    pub fn index_of(&self, members: ElemSet) -> Option<usize> {
        self.points.iter().position(|p| p.members == members)
    }
}

/// Prime filters with the Stone topology.
pub fn spectrum(l: &ResiduatedLattice) -> Result<SpectrumSpace> {
    SpectrumSpace::build(l, prime_filters(l)?)
}

/// Maximal filters with the topology induced from the Stone topology.
pub fn max_spectrum(l: &ResiduatedLattice) -> Result<SpectrumSpace> {
    let max = maximal_filters(l)?;
    if let Some(m) = max.iter().find(|m| !m.flags.prime) {
        return Err(AlgebraError::Inconsistent {
            check: "Max(A) ⊆ Spec(A)",
            detail: format!("maximal filter {} is not prime", l.fmt_set(m.members)),
        });
    }
    SpectrumSpace::build(l, max)
}

/// `S(X)` over the prime spectrum.
pub fn stone_open(l: &ResiduatedLattice, x: ElemSet) -> Result<Vec<Filter>> {
    let spec = spectrum(l)?;
    Ok(spec.open_of(x).iter().map(|p| spec.points[p].clone()).collect())
}

/// `Ds(A) = {a : ¬a = 0}` as a filter.
pub fn dense_elements(l: &ResiduatedLattice) -> Result<Filter> {
    Filter::new(l, l.dense_set())
}

/// `Rad(A)` as the intersection of the maximal filters.
pub fn radical_by_intersection(l: &ResiduatedLattice) -> Result<ElemSet> {
    Ok(maximal_filters(l)?.iter().fold(l.full(), |acc, m| acc.intersection(m.members)))
}

/// `Rad(A)` from the element-wise description: for every `n` there is an
/// `m` with `¬((¬(aⁿ))^m) = 1`. `n` ranges over the distinct powers of `a`
/// and `m` over the distinct powers of `¬(aⁿ)`; later powers repeat the
/// last one, so this covers every `n, m ≥ 1`.
pub fn radical_by_formula(l: &ResiduatedLattice) -> ElemSet {
    l.elements()
        .filter(|&a| {
            l.distinct_powers(a).into_iter().all(|an| {
                let x = l.neg(an);
                l.distinct_powers(x).into_iter().any(|xm| l.neg(xm) == l.top())
            })
        })
        .collect()
}

/// `Rad(A)`, computed both ways; disagreement is an error.
pub fn radical(l: &ResiduatedLattice) -> Result<Filter> {
    let by_intersection = radical_by_intersection(l)?;
    let by_formula = radical_by_formula(l);
    if by_intersection != by_formula {
        return Err(AlgebraError::RadicalMismatch {
            by_intersection: l.set_names(by_intersection),
            by_formula: l.set_names(by_formula),
        });
    }
    Filter::new(l, by_intersection)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::builtin_algebra;

    fn names(l: &ResiduatedLattice, fs: &[Filter]) -> Vec<Vec<String>> {
        fs.iter().map(|f| l.set_names(f.members)).collect()
    }

    fn sets(v: &[&[&str]]) -> Vec<Vec<String>> {
        v.iter().map(|s| s.iter().map(|x| x.to_string()).collect()).collect()
    }

    #[test]
    fn generated_filters() {
        let l = builtin_algebra("RL6D").unwrap();
        let d = l.subset_of_names(&["d"]).unwrap();
        assert_eq!(l.set_names(generated_filter(&l, d).members), ["d", "1"]);
        assert_eq!(generated_filter(&l, ElemSet::singleton(l.top())).members.len(), 1);
        assert_eq!(generated_filter(&l, ElemSet::EMPTY).members.len(), 1);
        let a = l.subset_of_names(&["a"]).unwrap();
        assert_eq!(generated_filter(&l, a).members, l.full());
    }

    #[test]
    fn filters_of_the_corpus() {
        let l = builtin_algebra("RL6D").unwrap();
        assert_eq!(
            names(&l, &all_filters(&l).unwrap()),
            sets(&[&["1"], &["c", "1"], &["d", "1"], &["b", "c", "d", "1"], &["0", "a", "b", "c", "d", "1"]])
        );
        let q = builtin_algebra("RL7Q").unwrap();
        assert_eq!(
            names(&q, &all_filters(&q).unwrap()),
            sets(&[
                &["1"],
                &["e", "1"],
                &["a", "b", "e", "1"],
                &["c", "d", "e", "1"],
                &["0", "a", "b", "c", "d", "e", "1"]
            ])
        );
        let b = builtin_algebra("BOOL2").unwrap();
        assert_eq!(all_filters(&b).unwrap().len(), 2);
    }

    #[test]
    fn maximal_spectra() {
        let l = builtin_algebra("RL6D").unwrap();
        assert_eq!(names(&l, &maximal_filters(&l).unwrap()), sets(&[&["b", "c", "d", "1"]]));
        let q = builtin_algebra("RL7Q").unwrap();
        assert_eq!(names(&q, &maximal_filters(&q).unwrap()), sets(&[&["a", "b", "e", "1"], &["c", "d", "e", "1"]]));
        let b = builtin_algebra("BOOL2").unwrap();
        let spec = spectrum(&b).unwrap();
        let max = max_spectrum(&b).unwrap();
        assert_eq!(spec.len(), 1);
        assert_eq!(max.points[0].members, ElemSet::singleton(b.top()));
        assert!(spec.is_topology() && max.is_topology());
    }

    #[test]
    fn stone_opens() {
        let l = builtin_algebra("RL6D").unwrap();
        let spec = spectrum(&l).unwrap();
        assert!(stone_open(&l, ElemSet::EMPTY).unwrap().is_empty());
        assert_eq!(stone_open(&l, ElemSet::singleton(l.bottom())).unwrap().len(), spec.len());
        let a = l.subset_of_names(&["a"]).unwrap();
        assert_eq!(spec.open_of(a), spec.all_points());

        let q = builtin_algebra("RL7Q").unwrap();
        let c = q.subset_of_names(&["c"]).unwrap();
        let expected: Vec<ElemSet> = [&["1"][..], &["e", "1"], &["a", "b", "e", "1"]]
            .iter()
            .map(|s| q.subset_of_names(s).unwrap())
            .filter(|&s| is_prime(&q, s))
            .collect();
        let got: Vec<ElemSet> = stone_open(&q, c).unwrap().into_iter().map(|f| f.members).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn dense_sets_match_the_published_values() {
        for (key, ds) in [("RL6D", &["c", "1"][..]), ("RL6C", &["1"]), ("RL7Q", &["e", "1"])] {
            let l = builtin_algebra(key).unwrap();
            assert_eq!(l.set_names(dense_elements(&l).unwrap().members), ds, "{key}");
        }
    }

    #[test]
    fn radicals() {
        let l = builtin_algebra("RL6D").unwrap();
        assert_eq!(l.set_names(radical(&l).unwrap().members), ["b", "c", "d", "1"]);
        let q = builtin_algebra("RL7Q").unwrap();
        assert_eq!(q.set_names(radical(&q).unwrap().members), ["e", "1"]);
        let luk = builtin_algebra("CHAIN3_LUK").unwrap();
        assert_eq!(radical(&luk).unwrap().members, ElemSet::singleton(luk.top()));
    }

    #[test]
    fn primary_needs_a_proper_filter() {
        let l = builtin_algebra("RL6D").unwrap();
        assert_eq!(is_primary(&l, l.full()), Err(AlgebraError::NotProper));
        assert_eq!(is_quasi_primary(&l, l.full()), Err(AlgebraError::NotProper));
        for f in all_filters(&l).unwrap().iter().filter(|f| f.is_proper()) {
            if is_primary(&l, f.members).unwrap() {
                assert!(is_quasi_primary(&l, f.members).unwrap());
            }
        }
    }

    #[test]
    fn non_filter_subset_is_rejected() {
        let l = builtin_algebra("RL6D").unwrap();
        let s = l.subset_of_names(&["b", "1"]).unwrap();
        assert_eq!(Filter::new(&l, s), Err(AlgebraError::NotAFilter));
    }
}
