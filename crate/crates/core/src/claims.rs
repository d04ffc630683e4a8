//! Structural claims about residuated lattices, each checkable on one finite
//! algebra and held as a [`Claim`] trait object in a [`ClaimRegistry`].
//!
//! Universal claims report `Pass` or `Fail` with the least violation, or
//! `NotApplicable` when their hypotheses fail. Existential claims report
//! `Pass` with a witness when the algebra is one, and `NotApplicable`
//! otherwise.

use serde::Serialize;

use crate::algebra::{direct_product, subalgebra, ResiduatedLattice};
use crate::classify::{self, Verdict};
use crate::corpus::builtin_algebra;
use crate::error::{AlgebraError, Result};
use crate::filters::{self, is_deductive_system, is_filter};
use crate::morphism::{center_algebra, is_boolean_algebra};
use crate::quotient::{
    dense_quotient, dense_quotient_comparison, lifting_diagram, max_spectrum_correspondence, quotient,
    radical_double_negation, radical_quotient, theta_iso,
};
use crate::regular::{
    boolean_center_equality, is_glivenko, mv_structure_on_reg, satisfies_star_equation, star_algebra,
};
use crate::set::ElemSet;

/// Largest carrier on which claims scan every subset.
pub const SUBSET_SCAN_CAP: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClaimStatus {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "N-A")]
    NotApplicable,
}

impl ClaimStatus {
    pub fn label(self) -> &'static str {
        match self {
            ClaimStatus::Pass => "PASS",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::NotApplicable => "N-A",
        }
    }
}

impl std::fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimOutcome {
    pub status: ClaimStatus,
    pub detail: String,
}

impl ClaimOutcome {
    pub fn pass(detail: impl Into<String>) -> Self {
        ClaimOutcome { status: ClaimStatus::Pass, detail: detail.into() }
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        ClaimOutcome { status: ClaimStatus::Fail, detail: detail.into() }
    }

    pub fn not_applicable(detail: impl Into<String>) -> Self {
        ClaimOutcome { status: ClaimStatus::NotApplicable, detail: detail.into() }
    }

    /// `Pass` when `violation` is `None`.
    pub fn universal(ok: impl Into<String>, violation: Option<String>) -> Self {
        match violation {
            None => Self::pass(ok),
            Some(v) => Self::fail(v),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimKind {
    /// Holds for every algebra meeting the hypotheses.
    Universal,
    /// Some algebra is an instance.
    Existential,
}

pub trait Claim: Send + Sync {
    fn id(&self) -> &str;

    fn statement(&self) -> &str;

    fn kind(&self) -> ClaimKind {
        ClaimKind::Universal
    }

    fn check(&self, l: &ResiduatedLattice) -> Result<ClaimOutcome>;
}

pub struct FnClaim {
    id: &'static str,
    statement: &'static str,
    kind: ClaimKind,
    check: fn(&ResiduatedLattice) -> Result<ClaimOutcome>,
}

impl FnClaim {
    pub const fn universal(
        id: &'static str,
        statement: &'static str,
        check: fn(&ResiduatedLattice) -> Result<ClaimOutcome>,
    ) -> Self {
        FnClaim { id, statement, kind: ClaimKind::Universal, check }
    }

    pub const fn existential(
        id: &'static str,
        statement: &'static str,
        check: fn(&ResiduatedLattice) -> Result<ClaimOutcome>,
    ) -> Self {
        FnClaim { id, statement, kind: ClaimKind::Existential, check }
    }
}

impl Claim for FnClaim {
    fn id(&self) -> &str {
        self.id
    }

    fn statement(&self) -> &str {
        self.statement
    }

    fn kind(&self) -> ClaimKind {
        self.kind
    }

    fn check(&self, l: &ResiduatedLattice) -> Result<ClaimOutcome> {
        (self.check)(l)
    }
}

/// One line of a claim run.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub statement: String,
    pub kind: ClaimKind,
    pub status: ClaimStatus,
    pub detail: String,
}

pub struct ClaimRegistry {
    entries: Vec<Box<dyn Claim>>,
}

impl Default for ClaimRegistry {
    fn default() -> Self {
        ClaimRegistry { entries: builtin_claims().into_iter().map(|c| Box::new(c) as Box<dyn Claim>).collect() }
    }
}

impl ClaimRegistry {
    pub fn empty() -> Self {
        ClaimRegistry { entries: Vec::new() }
    }

    /// Adds a claim, replacing any existing one with the same id.
    pub fn register(&mut self, c: Box<dyn Claim>) {
        self.entries.retain(|e| e.id() != c.id());
        self.entries.push(c);
    }

    pub fn get(&self, id: &str) -> Option<&dyn Claim> {
        self.entries.iter().find(|c| c.id() == id).map(|c| c.as_ref())
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|c| c.id())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Runs one claim. Size caps and the one-element algebra make a claim
    /// inapplicable; any other error is a failure.
    pub fn run(&self, claim: &dyn Claim, l: &ResiduatedLattice) -> ClaimResult {
        let outcome = match claim.check(l) {
            Ok(o) => o,
            Err(e @ (AlgebraError::ExhaustiveCapExceeded { .. } | AlgebraError::CapExceeded { .. })) => {
                ClaimOutcome::not_applicable(e.to_string())
            }
            Err(AlgebraError::Trivial) => ClaimOutcome::not_applicable("one-element algebra"),
            Err(e) => ClaimOutcome::fail(e.to_string()),
        };
        ClaimResult {
            id: claim.id().to_string(),
            statement: claim.statement().to_string(),
            kind: claim.kind(),
            status: outcome.status,
            detail: outcome.detail,
        }
    }

    pub fn run_all(&self, l: &ResiduatedLattice) -> Vec<ClaimResult> {
        self.entries.iter().map(|c| self.run(c.as_ref(), l)).collect()
    }
}

fn name(l: &ResiduatedLattice, a: usize) -> &str {
    l.elem_name(a)
}

fn pairs(l: &ResiduatedLattice) -> impl Iterator<Item = (usize, usize)> + '_ {
    l.elements().flat_map(move |a| l.elements().map(move |b| (a, b)))
}

fn requires(cond: bool, what: &str) -> Option<ClaimOutcome> {
    (!cond).then(|| ClaimOutcome::not_applicable(format!("hypothesis fails: {what}")))
}

fn is_mtl(l: &ResiduatedLattice) -> bool {
    classify::is_mtl(l).is_none()
}

fn is_bl(l: &ResiduatedLattice) -> bool {
    classify::is_bl(l).is_none()
}

fn is_mv(l: &ResiduatedLattice) -> bool {
    classify::is_mv(l).is_none()
}

fn is_quasi_local(l: &ResiduatedLattice) -> bool {
    classify::quasi_local_violation(l).is_none()
}

fn is_local(l: &ResiduatedLattice) -> Result<bool> {
    Ok(filters::maximal_filters(l)?.len() == 1)
}

fn calculus(l: &ResiduatedLattice) -> Option<String> {
    if l.neg(l.bottom()) != l.top() || l.neg(l.top()) != l.bottom() {
        return Some("¬0 = 1 and ¬1 = 0 fail".into());
    }
    for (a, b) in pairs(l) {
        if l.leq(a, b) != (l.imp(a, b) == l.top()) {
            return Some(format!("{0} ≤ {1} disagrees with {0}→{1} = 1", name(l, a), name(l, b)));
        }
    }
    for a in l.elements() {
        let nn = l.neg(l.neg(a));
        if !l.leq(a, nn) {
            return Some(format!("{} ≰ ¬¬{}", name(l, a), name(l, a)));
        }
        if l.neg(nn) != l.neg(a) {
            return Some(format!("¬¬¬{0} ≠ ¬{0}", name(l, a)));
        }
    }
    for (a, b) in pairs(l).filter(|&(a, b)| l.leq(a, b)) {
        for (c, d) in pairs(l).filter(|&(c, d)| l.leq(c, d)) {
            if !l.leq(l.prod(a, c), l.prod(b, d)) {
                return Some(format!("{}⊙{} ≰ {}⊙{}", name(l, a), name(l, c), name(l, b), name(l, d)));
            }
        }
    }
    None
}

fn subsets_scan<T>(l: &ResiduatedLattice, mut f: impl FnMut(ElemSet) -> Option<T>) -> Result<Option<T>> {
    if l.n() > SUBSET_SCAN_CAP {
        return Err(AlgebraError::ExhaustiveCapExceeded { n: l.n(), cap: SUBSET_SCAN_CAP });
    }
    for bits in 1..(1u64 << l.n()) {
        if let Some(t) = f(ElemSet::from_bits(bits)) {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

fn lifting(l: &ResiduatedLattice) -> Result<bool> {
    Ok(lifting_diagram(l)?.has_lifting())
}

fn center_sizes(l: &ResiduatedLattice) -> Result<String> {
    let d = lifting_diagram(l)?;
    Ok(format!(
        "|B(A)| = {}, |B(A/Ds)| = {}, |B(A/Rad)| = {}, B(φ) {}surjective",
        d.b_p.source.n(),
        d.b_p.target.n(),
        d.b_r.target.n(),
        if d.b_phi.surjective { "" } else { "not " }
    ))
}

fn builtin_claims() -> Vec<FnClaim> {
    vec![
        // residuated lattices in general
        FnClaim::universal(
            "residuation-calculus",
            "a ≤ b iff a→b = 1; a ≤ ¬¬a; ¬¬¬a = ¬a; ¬0 = 1, ¬1 = 0; ⊙ is monotone",
            |l| Ok(ClaimOutcome::universal("all instances hold", calculus(l))),
        ),
        FnClaim::universal("center-idempotent-regular", "every e ∈ B(A) has e⊙e = e and ¬¬e = e", |l| {
            let bad = l
                .boolean_center()
                .iter()
                .find(|&e| l.prod(e, e) != e || l.neg(l.neg(e)) != e);
            Ok(ClaimOutcome::universal(
                format!("B(A) = {}", l.fmt_set(l.boolean_center())),
                bad.map(|e| format!("e = {}", name(l, e))),
            ))
        }),
        FnClaim::universal(
            "center-characterization",
            "e is complemented in the lattice iff e ∨ ¬e = 1",
            |l| {
                let (b, c) = (l.boolean_center(), l.lattice_complemented());
                Ok(ClaimOutcome::universal(
                    format!("B(A) = {}", l.fmt_set(b)),
                    (b != c).then(|| format!("e∨¬e = 1 on {}, complemented {}", l.fmt_set(b), l.fmt_set(c))),
                ))
            },
        ),
        FnClaim::universal(
            "center-boolean-subalgebra",
            "B(A) is closed under ∨, ∧, ⊙, → and is a Boolean algebra",
            |l| {
                let b = l.boolean_center();
                if let Some((op, x, y, r)) = l.first_non_closure(b) {
                    return Ok(ClaimOutcome::fail(format!(
                        "{} {op} {} = {} ∉ B(A)",
                        name(l, x),
                        name(l, y),
                        name(l, r)
                    )));
                }
                let (alg, _) = center_algebra(l);
                Ok(ClaimOutcome::universal(
                    format!("|B(A)| = {}", b.len()),
                    (!is_boolean_algebra(&alg)).then(|| "B(A) is not Boolean".into()),
                ))
            },
        ),
        FnClaim::universal(
            "filters-are-deductive-systems",
            "a nonempty subset is a filter iff it is a deductive system",
            |l| {
                let bad = subsets_scan(l, |s| (is_filter(l, s) != is_deductive_system(l, s)).then_some(s))?;
                Ok(ClaimOutcome::universal(
                    format!("{} filters", filters::all_filters(l)?.len()),
                    bad.map(|s| format!("disagreement on {}", l.fmt_set(s))),
                ))
            },
        ),
        FnClaim::universal("maximal-filters-are-prime", "Max(A) ⊆ Spec(A)", |l| {
            let max = filters::maximal_filters(l)?;
            let bad = max.iter().find(|m| !m.flags.prime);
            Ok(ClaimOutcome::universal(
                format!("|Max| = {}, |Spec| = {}", max.len(), filters::prime_filters(l)?.len()),
                bad.map(|m| format!("{} is maximal but not prime", l.fmt_set(m.members))),
            ))
        }),
        FnClaim::universal(
            "stone-topology",
            "S(X) is a topology on Spec(A) with basis S(a), and S(X ∪ Y) = S(X) ∪ S(Y)",
            |l| {
                let spec = filters::spectrum(l)?;
                if !spec.is_topology() {
                    return Ok(ClaimOutcome::fail("open family is not a topology"));
                }
                for (a, b) in pairs(l) {
                    let x = ElemSet::singleton(a).with(b);
                    if spec.open_of(x) != spec.basis[a].union(spec.basis[b]) {
                        return Ok(ClaimOutcome::fail(format!("S({{{}, {}}}) ≠ S({0}) ∪ S({1})", name(l, a), name(l, b))));
                    }
                    if !spec.is_open(spec.open_of(x)) {
                        return Ok(ClaimOutcome::fail("S(X) missing from the open family"));
                    }
                }
                Ok(ClaimOutcome::pass(format!("{} points, {} opens", spec.len(), spec.opens.len())))
            },
        ),
        FnClaim::universal(
            "congruence-mod-filter",
            "a ↔ b ∈ F is a congruence for every filter F, and a ≤ b implies a/F ≤ b/F",
            |l| {
                for f in filters::all_filters(l)? {
                    let q = quotient(l, f.members)?;
                    if let Some((a, b)) = pairs(l).find(|&(a, b)| {
                        l.leq(a, b) && !q.algebra.leq(q.projection.apply(a), q.projection.apply(b))
                    }) {
                        return Ok(ClaimOutcome::fail(format!(
                            "F = {}: {} ≤ {} but not modulo F",
                            l.fmt_set(f.members),
                            name(l, a),
                            name(l, b)
                        )));
                    }
                }
                Ok(ClaimOutcome::pass("every filter"))
            },
        ),
        FnClaim::universal(
            "regular-elements-image-of-negation",
            "Reg(A) = ¬A and Reg(A) is closed under →",
            |l| {
                let reg = l.regular_elements();
                let image: ElemSet = l.elements().map(|a| l.neg(a)).collect();
                if reg != image {
                    return Ok(ClaimOutcome::fail(format!("Reg = {}, ¬A = {}", l.fmt_set(reg), l.fmt_set(image))));
                }
                let bad = reg.iter().flat_map(|a| reg.iter().map(move |b| (a, b))).find(|&(a, b)| !reg.contains(l.imp(a, b)));
                Ok(ClaimOutcome::universal(
                    format!("Reg(A) = {}", l.fmt_set(reg)),
                    bad.map(|(a, b)| format!("{}→{} ∉ Reg(A)", name(l, a), name(l, b))),
                ))
            },
        ),
        FnClaim::universal(
            "glivenko-iff-reg-involutive-morphism",
            "A is Glivenko iff (Reg(A), ∨*, ∧*, ⊙*, →) is an involutive residuated lattice onto which ¬¬ is a surjective morphism",
            |l| {
                let g = is_glivenko(l);
                let s = star_algebra(l);
                let rhs = s.double_negation_is_surjective_morphism();
                Ok(ClaimOutcome::universal(
                    format!("Glivenko: {g}"),
                    (g != rhs).then(|| {
                        format!("Glivenko {g}, star side {rhs} ({})", s.invalid_reason.unwrap_or_default())
                    }),
                ))
            },
        ),
        FnClaim::universal(
            "glivenko-reg-mv-iff-star-equation",
            "for Glivenko A, Reg(A) with ¬a ⊕ ¬b = ¬(a⊙*b) is an MV-algebra iff (¬a→¬b)→¬b = (¬b→¬a)→¬a",
            |l| {
                if let Some(na) = requires(is_glivenko(l), "Glivenko") {
                    return Ok(na);
                }
                let mv = mv_structure_on_reg(l)?;
                Ok(ClaimOutcome::universal(
                    format!("MV: {}, equation: {}", mv.is_mv, mv.star_equation),
                    (!mv.agrees_with_star_equation())
                        .then(|| format!("MV {} vs equation {} ({:?})", mv.is_mv, mv.star_equation, mv.violation)),
                ))
            },
        ),
        FnClaim::universal("glivenko-mtl-center-of-reg", "for Glivenko MTL-algebras, B(A) = B(Reg(A))", |l| {
            if let Some(na) = requires(is_glivenko(l) && is_mtl(l), "Glivenko MTL") {
                return Ok(na);
            }
            Ok(ClaimOutcome::universal(
                format!("B(A) = {}", l.fmt_set(l.boolean_center())),
                (boolean_center_equality(l) != Some(true)).then(|| "B(A) ≠ B(Reg(A))".into()),
            ))
        }),
        FnClaim::universal(
            "glivenko-mtl-star-lattice-ops",
            "for Glivenko MTL-algebras, ∨* and ∧* coincide with ∨ and ∧ on Reg(A)",
            |l| {
                if let Some(na) = requires(is_glivenko(l) && is_mtl(l), "Glivenko MTL") {
                    return Ok(na);
                }
                let s = star_algebra(l);
                let k = s.len();
                let bad = (0..k * k).find(|&i| {
                    let (a, b) = (s.members[i / k], s.members[i % k]);
                    s.star_join[i] != l.join(a, b) || s.star_meet[i] != l.meet(a, b)
                });
                Ok(ClaimOutcome::universal(
                    "coincide",
                    bad.map(|i| format!("at ({}, {})", name(l, s.members[i / k]), name(l, s.members[i % k]))),
                ))
            },
        ),
        FnClaim::universal(
            "glivenko-theta-isomorphism",
            "for Glivenko A, θ(a/Ds(A)) = ¬¬a is an isomorphism A/Ds(A) → Reg(A) with θ∘p_A = ¬¬",
            |l| {
                if let Some(na) = requires(is_glivenko(l), "Glivenko") {
                    return Ok(na);
                }
                let t = theta_iso(l)?;
                Ok(ClaimOutcome::universal(
                    format!("{} classes onto {} regular elements", t.theta.source.n(), t.theta.target.n()),
                    if !t.theta.is_isomorphism() {
                        Some("θ is not bijective".into())
                    } else if !t.commutes() {
                        Some("θ∘p_A ≠ ¬¬".into())
                    } else {
                        None
                    },
                ))
            },
        ),
        FnClaim::universal(
            "glivenko-iff-dense-quotient-involutive",
            "A is Glivenko iff A/Ds(A) is involutive",
            |l| {
                let g = is_glivenko(l);
                let inv = dense_quotient(l)?.algebra.is_involutive();
                Ok(ClaimOutcome::universal(
                    format!("both {g}"),
                    (g != inv).then(|| format!("Glivenko {g}, A/Ds involutive {inv}")),
                ))
            },
        ),
        FnClaim::universal("dense-filter-within-radical", "Ds(A) is a filter and Ds(A) ⊆ Rad(A)", |l| {
            let ds = filters::dense_elements(l)?.members;
            let rad = filters::radical(l)?.members;
            Ok(ClaimOutcome::universal(
                format!("Ds = {}, Rad = {}", l.fmt_set(ds), l.fmt_set(rad)),
                (!ds.is_subset(rad)).then(|| "Ds ⊄ Rad".into()),
            ))
        }),
        // dense elements and the radical
        FnClaim::universal(
            "max-dense-correspondence",
            "membership and Max(A) transfer to A/Ds(A), Rad(A/Ds) = Rad(A)/Ds, and Max(A) ≅ Max(A/Ds(A)) as spaces",
            |l| {
                let c = max_spectrum_correspondence(l)?;
                let ok = c.membership_transfer
                    && c.max_correspondence
                    && c.radical_membership_transfer
                    && c.radical_transfer
                    && c.homeomorphism;
                Ok(ClaimOutcome::universal(
                    format!("|Max(A)| = {} = |Max(A/Ds)|", c.max_count),
                    (!ok).then(|| format!("{c:?}")),
                ))
            },
        ),
        FnClaim::universal(
            "radical-element-formula",
            "Rad(A) = {a : ∀n ∃m ¬((¬aⁿ)^m) = 1}",
            |l| {
                let by_int = filters::radical_by_intersection(l)?;
                let by_formula = filters::radical_by_formula(l);
                Ok(ClaimOutcome::universal(
                    format!("Rad = {}", l.fmt_set(by_int)),
                    (by_int != by_formula)
                        .then(|| format!("intersection {} vs formula {}", l.fmt_set(by_int), l.fmt_set(by_formula))),
                ))
            },
        ),
        FnClaim::universal("radical-of-subalgebra", "Rad(B) = B ∩ Rad(A) for every subalgebra B", |l| {
            let rad = filters::radical(l)?.members;
            let mut count = 0;
            let must = ElemSet::singleton(l.bottom()).with(l.top());
            let bad = subsets_scan(l, |s| {
                if !must.is_subset(s) || l.first_non_closure(s).is_some() {
                    return None;
                }
                count += 1;
                let b = subalgebra(l, s).ok()?;
                let members: Vec<usize> = s.iter().collect();
                let rb: ElemSet = filters::radical(&b).ok()?.members.iter().map(|i| members[i]).collect();
                (rb != s.intersection(rad)).then_some(s)
            })?;
            Ok(ClaimOutcome::universal(
                format!("{count} subalgebras"),
                bad.map(|s| format!("B = {}", l.fmt_set(s))),
            ))
        }),
        FnClaim::universal(
            "radical-of-product",
            "Rad(A × C) = Rad(A) × Rad(C), checked with C = A, the two-element and the three-element MV chains",
            |l| {
                let mut partners = Vec::new();
                for key in ["BOOL2", "CHAIN3_LUK"] {
                    partners.push(builtin_algebra(key).map_err(|e| AlgebraError::Inconsistent {
                        check: "corpus",
                        detail: e.to_string(),
                    })?);
                }
                partners.push(l.clone());
                let mut checked = 0;
                for c in &partners {
                    if l.n() * c.n() > filters::EXHAUSTIVE_FILTER_CAP {
                        continue;
                    }
                    let p = direct_product(l, c)?;
                    let (ra, rc) = (filters::radical(l)?.members, filters::radical(c)?.members);
                    let expected: ElemSet = ra
                        .iter()
                        .flat_map(|x| rc.iter().map(move |y| x * c.n() + y))
                        .collect();
                    let rp = filters::radical(&p)?.members;
                    if rp != expected {
                        return Ok(ClaimOutcome::fail(format!("with {}: {}", c.name(), p.fmt_set(rp))));
                    }
                    checked += 1;
                }
                if checked == 0 {
                    return Ok(ClaimOutcome::not_applicable("every product exceeds the filter scan cap"));
                }
                Ok(ClaimOutcome::pass(format!("{checked} products")))
            },
        ),
        FnClaim::universal(
            "dense-quotient-within-dense-filter",
            "Ds(A/F) = Ds(A)/F for every filter F ⊆ Ds(A)",
            |l| {
                let ds = l.dense_set();
                let mut count = 0;
                for f in filters::all_filters(l)?.into_iter().filter(|f| f.members.is_subset(ds)) {
                    let c = dense_quotient_comparison(l, f.members)?;
                    if !c.equal {
                        return Ok(ClaimOutcome::fail(format!("F = {}", l.fmt_set(f.members))));
                    }
                    count += 1;
                }
                Ok(ClaimOutcome::pass(format!("{count} filters within Ds")))
            },
        ),
        FnClaim::existential(
            "dense-quotient-may-differ",
            "some filter F has Ds(A/F) ≠ Ds(A)/F",
            |l| {
                let mut lines = Vec::new();
                let mut witness = None;
                for f in filters::all_filters(l)? {
                    if f.members.is_subset(l.dense_set()) {
                        continue;
                    }
                    let c = dense_quotient_comparison(l, f.members)?;
                    let classes: Vec<String> = c.classes.iter().map(|k| format!("{{{}}}", k.join(","))).collect();
                    lines.push(format!(
                        "F = {{{}}}: classes {}; Ds(A/F) = {{{}}}, Ds(A)/F = {{{}}}: {}",
                        c.filter.join(","),
                        classes.join(" "),
                        c.dense_of_quotient.join(", "),
                        c.image_of_dense.join(", "),
                        if c.equal { "equal".to_string() } else { format!("differ at {}", c.only_in_dense_of_quotient.join(", ")) }
                    ));
                    if !c.equal && witness.is_none() {
                        witness = Some(lines.len() - 1);
                    }
                }
                let detail = if lines.is_empty() { "every filter lies within Ds(A)".to_string() } else { lines.join("; ") };
                Ok(match witness {
                    Some(_) => ClaimOutcome::pass(detail),
                    None => ClaimOutcome::not_applicable(format!("no separating filter here. {detail}")),
                })
            },
        ),
        FnClaim::universal(
            "glivenko-radical-double-negation",
            "for Glivenko A, a ∈ Rad(A) iff ¬¬a ∈ Rad(A)",
            |l| {
                if let Some(na) = requires(is_glivenko(l), "Glivenko") {
                    return Ok(na);
                }
                let r = radical_double_negation(l)?;
                Ok(ClaimOutcome::universal(
                    format!("Rad = {{{}}}", r.radical.join(", ")),
                    (!r.double_negation_invariant).then(|| "membership differs under ¬¬".into()),
                ))
            },
        ),
        FnClaim::universal(
            "glivenko-radical-of-reg",
            "for Glivenko A, Rad(Reg(A)) = Rad(A) ∩ Reg(A)",
            |l| {
                if let Some(na) = requires(is_glivenko(l), "Glivenko") {
                    return Ok(na);
                }
                let r = radical_double_negation(l)?;
                Ok(ClaimOutcome::universal(
                    format!("Rad(Reg) = {{{}}}", r.radical_of_reg.join(", ")),
                    (!r.reg_radical_is_intersection).then(|| {
                        format!("Rad(Reg) = {{{}}}, Rad ∩ Reg = {{{}}}", r.radical_of_reg.join(", "), r.radical_meet_reg.join(", "))
                    }),
                ))
            },
        ),
        FnClaim::universal(
            "glivenko-dense-quotient-mv-iff-star-equation",
            "for Glivenko A, A/Ds(A) is an MV-algebra iff (¬a→¬b)→¬b = (¬b→¬a)→¬a",
            |l| {
                if let Some(na) = requires(is_glivenko(l), "Glivenko") {
                    return Ok(na);
                }
                let mv = is_mv(&dense_quotient(l)?.algebra);
                let eq = satisfies_star_equation(l);
                Ok(ClaimOutcome::universal(format!("both {mv}"), (mv != eq).then(|| format!("A/Ds MV {mv}, equation {eq}"))))
            },
        ),
        FnClaim::universal(
            "bl-glivenko-with-star-equation",
            "every BL-algebra is Glivenko and satisfies (¬a→¬b)→¬b = (¬b→¬a)→¬a",
            |l| {
                if let Some(na) = requires(is_bl(l), "BL") {
                    return Ok(na);
                }
                Ok(ClaimOutcome::universal(
                    "both hold",
                    classify::glivenko_witness(l).or_else(|| classify::star_equation_witness(l)).map(|w| w.detail),
                ))
            },
        ),
        FnClaim::universal("bl-dense-quotient-mv", "for BL-algebras, A/Ds(A) is an MV-algebra", |l| {
            if let Some(na) = requires(is_bl(l), "BL") {
                return Ok(na);
            }
            let p = dense_quotient(l)?;
            Ok(ClaimOutcome::universal(
                format!("|A/Ds| = {}", p.algebra.n()),
                classify::is_mv(&p.algebra).map(|w| w.detail),
            ))
        }),
        FnClaim::existential(
            "mtl-dense-quotient-not-bl",
            "some MTL-algebra has A/Ds(A) not a BL-algebra",
            |l| {
                if let Some(na) = requires(is_mtl(l), "MTL") {
                    return Ok(na);
                }
                let p = dense_quotient(l)?;
                Ok(match classify::is_bl(&p.algebra) {
                    Some(w) => ClaimOutcome::pass(format!("A/Ds(A) has {} elements; {}", p.algebra.n(), w.detail)),
                    None => ClaimOutcome::not_applicable("A/Ds(A) is BL"),
                })
            },
        ),
        // lifting Boolean center
        FnClaim::universal(
            "lifting-diagram-commutes",
            "φ_A(a/Ds(A)) = a/Rad(A) is a well-defined morphism with φ_A∘p_A = r_A",
            |l| {
                let d = lifting_diagram(l)?;
                Ok(ClaimOutcome::universal("commutes", (!d.commutes()).then(|| "φ∘p ≠ r".into())))
            },
        ),
        FnClaim::universal("center-maps-injective", "B(p_A) and B(r_A) are injective", |l| {
            let d = lifting_diagram(l)?;
            Ok(ClaimOutcome::universal(
                center_sizes(l)?,
                (!(d.b_p.injective && d.b_r.injective)).then(|| center_sizes(l).unwrap_or_default()),
            ))
        }),
        FnClaim::universal(
            "lifting-implies-phi-center-surjective",
            "if A has lifting Boolean center then B(φ_A) is surjective",
            |l| {
                let d = lifting_diagram(l)?;
                if let Some(na) = requires(d.has_lifting(), "lifting Boolean center") {
                    return Ok(na);
                }
                Ok(ClaimOutcome::universal(center_sizes(l)?, (!d.b_phi.surjective).then(|| center_sizes(l).unwrap_or_default())))
            },
        ),
        FnClaim::universal(
            "glivenko-lifting-iff-phi-center-surjective",
            "for Glivenko A, A has lifting Boolean center iff B(φ_A) is surjective",
            |l| {
                if let Some(na) = requires(is_glivenko(l), "Glivenko") {
                    return Ok(na);
                }
                let d = lifting_diagram(l)?;
                let sizes = center_sizes(l)?;
                Ok(ClaimOutcome::universal(
                    sizes.clone(),
                    (d.has_lifting() != d.b_phi.surjective).then(|| format!("lifting {}, {sizes}", d.has_lifting())),
                ))
            },
        ),
        FnClaim::universal(
            "dense-quotient-lifting-iff-phi-center-iso",
            "A/Ds(A) has lifting Boolean center iff B(φ_A) is a Boolean isomorphism",
            |l| {
                let d = lifting_diagram(l)?;
                let lhs = lifting(&d.p.algebra)?;
                let rhs = d.b_phi.is_isomorphism();
                Ok(ClaimOutcome::universal(
                    format!("both {lhs}"),
                    (lhs != rhs).then(|| format!("A/Ds lifting {lhs}, B(φ) iso {rhs}")),
                ))
            },
        ),
        FnClaim::universal(
            "glivenko-dense-quotient-lifting-lifts",
            "for Glivenko A, if A/Ds(A) has lifting Boolean center then so does A",
            |l| {
                if let Some(na) = requires(is_glivenko(l), "Glivenko") {
                    return Ok(na);
                }
                let p = dense_quotient(l)?;
                if let Some(na) = requires(lifting(&p.algebra)?, "A/Ds(A) has lifting Boolean center") {
                    return Ok(na);
                }
                let sizes = center_sizes(l)?;
                Ok(ClaimOutcome::universal(sizes.clone(), (!lifting(l)?).then_some(sizes)))
            },
        ),
        FnClaim::universal("mv-lifting", "every MV-algebra has lifting Boolean center", |l| {
            if let Some(na) = requires(is_mv(l), "MV") {
                return Ok(na);
            }
            let sizes = center_sizes(l)?;
            Ok(ClaimOutcome::universal(sizes.clone(), (!lifting(l)?).then_some(sizes)))
        }),
        FnClaim::universal("bl-lifting", "every BL-algebra has lifting Boolean center", |l| {
            if let Some(na) = requires(is_bl(l), "BL") {
                return Ok(na);
            }
            let sizes = center_sizes(l)?;
            Ok(ClaimOutcome::universal(sizes.clone(), (!lifting(l)?).then_some(sizes)))
        }),
        FnClaim::universal(
            "glivenko-star-equation-lifting",
            "every Glivenko A with (¬a→¬b)→¬b = (¬b→¬a)→¬a has lifting Boolean center",
            |l| {
                if let Some(na) = requires(is_glivenko(l) && satisfies_star_equation(l), "Glivenko with the ★-equation") {
                    return Ok(na);
                }
                let sizes = center_sizes(l)?;
                Ok(ClaimOutcome::universal(sizes.clone(), (!lifting(l)?).then_some(sizes)))
            },
        ),
        FnClaim::existential("lifting-may-fail", "some residuated lattice lacks lifting Boolean center", |l| {
            let sizes = center_sizes(l)?;
            Ok(if lifting(l)? {
                ClaimOutcome::not_applicable(format!("A has lifting Boolean center; {sizes}"))
            } else {
                ClaimOutcome::pass(sizes)
            })
        }),
        // local, simple and quasi-local
        FnClaim::universal(
            "local-maximal-is-infinite-order",
            "if A is local, its maximal filter is D(A) = {a : ord(a) = ∞} and Rad(A) = D(A)",
            |l| {
                let max = filters::maximal_filters(l)?;
                if let Some(na) = requires(max.len() == 1, "local") {
                    return Ok(na);
                }
                let d = classify::infinite_order_elements(l);
                let rad = filters::radical(l)?.members;
                Ok(ClaimOutcome::universal(
                    format!("D(A) = {}", l.fmt_set(d)),
                    (max[0].members != d || rad != d)
                        .then(|| format!("Max = {}, D(A) = {}", l.fmt_set(max[0].members), l.fmt_set(d))),
                ))
            },
        ),
        FnClaim::universal(
            "simple-iff-order-condition",
            "A is simple iff every a ≠ 1 has finite order",
            |l| {
                if l.n() == 1 {
                    return Err(AlgebraError::Trivial);
                }
                let by_filters = filters::all_filters(l)?.len() == 2;
                let by_order = classify::order_condition(l);
                Ok(ClaimOutcome::universal(
                    format!("both {by_filters}"),
                    (by_filters != by_order).then(|| format!("filters {by_filters}, order {by_order}")),
                ))
            },
        ),
        FnClaim::universal("simple-implies-local", "every simple residuated lattice is local", |l| {
            if l.n() == 1 {
                return Err(AlgebraError::Trivial);
            }
            if let Some(na) = requires(filters::all_filters(l)?.len() == 2, "simple") {
                return Ok(na);
            }
            Ok(ClaimOutcome::universal("local", (!is_local(l)?).then(|| "not local".into())))
        }),
        FnClaim::universal(
            "quotient-simple-iff-maximal",
            "for a proper filter M, A/M is simple iff M is maximal",
            |l| {
                let mut count = 0;
                for f in filters::all_filters(l)?.into_iter().filter(|f| f.is_proper()) {
                    let q = quotient(l, f.members)?;
                    let simple = classify::is_simple(&q.algebra)? == Verdict::True;
                    if simple != f.flags.maximal {
                        return Ok(ClaimOutcome::fail(format!(
                            "M = {}: A/M simple {simple}, maximal {}",
                            l.fmt_set(f.members),
                            f.flags.maximal
                        )));
                    }
                    count += 1;
                }
                Ok(ClaimOutcome::pass(format!("{count} proper filters")))
            },
        ),
        FnClaim::universal(
            "max-count-radical-quotient",
            "|Max(A)| = |Max(A/Rad(A))|, so A is local iff A/Rad(A) is",
            |l| {
                let a = filters::maximal_filters(l)?.len();
                let r = filters::maximal_filters(&radical_quotient(l)?.algebra)?.len();
                Ok(ClaimOutcome::universal(format!("both {a}"), (a != r).then(|| format!("{a} vs {r}"))))
            },
        ),
        FnClaim::universal(
            "primary-implies-quasi-primary",
            "every primary filter is quasi-primary",
            |l| {
                let all = filters::all_filters(l)?;
                let primaries: Vec<_> = all.iter().filter(|f| f.is_proper() && f.flags.primary).collect();
                if let Some(na) = requires(!primaries.is_empty(), "a primary filter exists") {
                    return Ok(na);
                }
                let bad = primaries.iter().find(|f| !f.flags.quasi_primary);
                Ok(ClaimOutcome::universal(
                    format!("{} primary filters", primaries.len()),
                    bad.map(|f| format!("{} is primary only", l.fmt_set(f.members))),
                ))
            },
        ),
        FnClaim::universal(
            "local-order-dichotomy",
            "if A is local, every a has ord(a) < ∞ or ord(¬a) < ∞",
            |l| {
                if let Some(na) = requires(l.n() > 1 && is_local(l)?, "local") {
                    return Ok(na);
                }
                let bad = l.elements().find(|&a| !l.ord(a).is_finite() && !l.ord(l.neg(a)).is_finite());
                Ok(ClaimOutcome::universal("holds", bad.map(|a| format!("a = {}", name(l, a)))))
            },
        ),
        FnClaim::universal("local-implies-quasi-local", "every local residuated lattice is quasi-local", |l| {
            if let Some(na) = requires(l.n() > 1 && is_local(l)?, "local") {
                return Ok(na);
            }
            Ok(ClaimOutcome::universal("quasi-local", classify::is_quasi_local(l).map(|w| w.detail)))
        }),
        FnClaim::universal("local-center-trivial", "if A is local then B(A) = {0, 1}", |l| {
            if let Some(na) = requires(l.n() > 1 && is_local(l)?, "local") {
                return Ok(na);
            }
            let b = l.boolean_center();
            Ok(ClaimOutcome::universal(
                format!("B(A) = {}", l.fmt_set(b)),
                (b.len() != 2).then(|| format!("B(A) = {}", l.fmt_set(b))),
            ))
        }),
        FnClaim::universal(
            "quasi-local-quotients",
            "if A is quasi-local then A/F is quasi-local for every filter F",
            |l| {
                if let Some(na) = requires(is_quasi_local(l), "quasi-local") {
                    return Ok(na);
                }
                let all = filters::all_filters(l)?;
                for f in &all {
                    if let Some(w) = classify::is_quasi_local(&quotient(l, f.members)?.algebra) {
                        return Ok(ClaimOutcome::fail(format!("F = {}: {}", l.fmt_set(f.members), w.detail)));
                    }
                }
                Ok(ClaimOutcome::pass(format!("{} quotients", all.len())))
            },
        ),
        FnClaim::universal(
            "quasi-local-dense-quotient",
            "if A is quasi-local then so is A/Ds(A)",
            |l| {
                if let Some(na) = requires(is_quasi_local(l), "quasi-local") {
                    return Ok(na);
                }
                Ok(ClaimOutcome::universal(
                    "A/Ds(A) quasi-local",
                    classify::is_quasi_local(&dense_quotient(l)?.algebra).map(|w| w.detail),
                ))
            },
        ),
        FnClaim::existential(
            "quasi-local-not-reflected",
            "some A has A/Ds(A) quasi-local while A is not",
            |l| {
                let ql_quotient = is_quasi_local(&dense_quotient(l)?.algebra);
                Ok(match (ql_quotient, classify::is_quasi_local(l)) {
                    (true, Some(w)) => ClaimOutcome::pass(format!("A/Ds(A) quasi-local; in A, {}", w.detail)),
                    (false, _) => ClaimOutcome::not_applicable("A/Ds(A) is not quasi-local"),
                    (true, None) => ClaimOutcome::not_applicable("A is quasi-local"),
                })
            },
        ),
        FnClaim::universal(
            "glivenko-star-equation-quasi-local-lifts",
            "for Glivenko A with (¬a→¬b)→¬b = (¬b→¬a)→¬a, A is quasi-local whenever A/Ds(A) is",
            |l| {
                if let Some(na) = requires(is_glivenko(l) && satisfies_star_equation(l), "Glivenko with the ★-equation") {
                    return Ok(na);
                }
                if let Some(na) = requires(is_quasi_local(&dense_quotient(l)?.algebra), "A/Ds(A) quasi-local") {
                    return Ok(na);
                }
                Ok(ClaimOutcome::universal("A quasi-local", classify::is_quasi_local(l).map(|w| w.detail)))
            },
        ),
    ]
}
