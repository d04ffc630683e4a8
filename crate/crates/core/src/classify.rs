//! Class membership with least witnesses, and the per-algebra report.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::ResiduatedLattice;
use crate::error::{AlgebraError, Result};
use crate::filters::{self, Filter};
use crate::quotient::{dense_quotient, has_lifting_boolean_center, quotient, radical_quotient};
use crate::regular::{glivenko_violation, star_equation_violation};
use crate::set::ElemSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    /// The one-element algebra, where the notion presupposes a proper filter.
    Trivial,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Verdict::True
    }
}

/// Elements of a violating tuple, least in index order, and the identity
/// they break.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub elements: Vec<String>,
    pub detail: String,
}

impl Witness {
    fn new(l: &ResiduatedLattice, elems: &[usize], detail: String) -> Witness {
        Witness { elements: elems.iter().map(|&e| l.elem_name(e).to_string()).collect(), detail }
    }
}

/// Least `(a, b)` with `(a→b) ∨ (b→a) ≠ 1`.
pub fn prelinearity_violation(l: &ResiduatedLattice) -> Option<(usize, usize)> {
    pairs(l).find(|&(a, b)| l.join(l.imp(a, b), l.imp(b, a)) != l.top())
}

/// Least `(a, b)` with `a ∧ b ≠ a ⊙ (a→b)`.
pub fn divisibility_violation(l: &ResiduatedLattice) -> Option<(usize, usize)> {
    pairs(l).find(|&(a, b)| l.meet(a, b) != l.prod(a, l.imp(a, b)))
}

/// Least `a` with `¬¬a ≠ a`.
pub fn involution_violation(l: &ResiduatedLattice) -> Option<usize> {
    l.elements().find(|&a| l.neg(l.neg(a)) != a)
}

fn pairs(l: &ResiduatedLattice) -> impl Iterator<Item = (usize, usize)> + '_ {
    l.elements().flat_map(move |a| l.elements().map(move |b| (a, b)))
}

fn prelinearity_witness(l: &ResiduatedLattice) -> Option<Witness> {
    prelinearity_violation(l).map(|(a, b)| {
        let lhs = l.join(l.imp(a, b), l.imp(b, a));
        Witness::new(
            l,
            &[a, b],
            format!(
                "({0}→{1}) ∨ ({1}→{0}) = {2} ≠ {3}",
                l.elem_name(a),
                l.elem_name(b),
                l.elem_name(lhs),
                l.elem_name(l.top())
            ),
        )
    })
}

fn divisibility_witness(l: &ResiduatedLattice) -> Option<Witness> {
    divisibility_violation(l).map(|(a, b)| {
        Witness::new(
            l,
            &[a, b],
            format!(
                "{0}∧{1} = {2} ≠ {3} = {0}⊙({0}→{1})",
                l.elem_name(a),
                l.elem_name(b),
                l.elem_name(l.meet(a, b)),
                l.elem_name(l.prod(a, l.imp(a, b)))
            ),
        )
    })
}

fn involution_witness(l: &ResiduatedLattice) -> Option<Witness> {
    involution_violation(l)
        .map(|a| Witness::new(l, &[a], format!("¬¬{} = {}", l.elem_name(a), l.elem_name(l.neg(l.neg(a))))))
}

/// `None` when the class holds, otherwise the least violation.
pub fn is_mtl(l: &ResiduatedLattice) -> Option<Witness> {
    prelinearity_witness(l)
}

pub fn is_involutive(l: &ResiduatedLattice) -> Option<Witness> {
    involution_witness(l)
}

pub fn is_imtl(l: &ResiduatedLattice) -> Option<Witness> {
    is_mtl(l).or_else(|| is_involutive(l))
}

pub fn is_bl(l: &ResiduatedLattice) -> Option<Witness> {
    is_mtl(l).or_else(|| divisibility_witness(l))
}

/// Involutive BL.
pub fn is_mv(l: &ResiduatedLattice) -> Option<Witness> {
    is_involutive(l).or_else(|| is_bl(l))
}

pub fn glivenko_witness(l: &ResiduatedLattice) -> Option<Witness> {
    glivenko_violation(l).map(|a| {
        let nn = l.neg(l.neg(a));
        let v = l.neg(l.neg(l.imp(nn, a)));
        Witness::new(l, &[a], format!("¬¬(¬¬{0}→{0}) = {1}", l.elem_name(a), l.elem_name(v)))
    })
}

pub fn star_equation_witness(l: &ResiduatedLattice) -> Option<Witness> {
    star_equation_violation(l).map(|(a, b)| {
        let (na, nb) = (l.neg(a), l.neg(b));
        Witness::new(
            l,
            &[a, b],
            format!(
                "(¬{0}→¬{1})→¬{1} = {2} ≠ {3} = (¬{1}→¬{0})→¬{0}",
                l.elem_name(a),
                l.elem_name(b),
                l.elem_name(l.imp(l.imp(na, nb), nb)),
                l.elem_name(l.imp(l.imp(nb, na), na))
            ),
        )
    })
}

/// Every `a ≠ 1` has finite order.
pub fn order_condition(l: &ResiduatedLattice) -> bool {
    l.elements().filter(|&a| a != l.top()).all(|a| l.ord(a).is_finite())
}

/// The only filters are `{1}` and `A`, decided twice: by filter
/// enumeration and by the order condition.
pub fn is_simple(l: &ResiduatedLattice) -> Result<Verdict> {
    if l.n() == 1 {
        return Err(AlgebraError::Trivial);
    }
    let by_filters = simple_by_filters(l)?;
    if by_filters != order_condition(l) {
        return Err(AlgebraError::Inconsistent {
            check: "simple ⇔ order condition",
            detail: format!("filters say {by_filters}"),
        });
    }
    Ok(Verdict::from_bool(by_filters))
}

fn simple_by_filters(l: &ResiduatedLattice) -> Result<bool> {
    Ok(filters::all_filters(l)?.len() == 2)
}

/// Least nontrivial proper filter: `⟨a⟩` for the least `a ≠ 1` of infinite order.
fn simple_witness(l: &ResiduatedLattice) -> Option<Witness> {
    let a = l.elements().find(|&a| a != l.top() && !l.ord(a).is_finite())?;
    let f = filters::generated_filter(l, ElemSet::singleton(a));
    Some(Witness::new(
        l,
        &f.members.iter().collect::<Vec<_>>(),
        format!("ord({}) = ∞, so {} is a proper filter other than {{1}}", l.elem_name(a), l.fmt_set(f.members)),
    ))
}

/// `D(A) = {a : ord(a) = ∞}`.
pub fn infinite_order_elements(l: &ResiduatedLattice) -> ElemSet {
    l.infinite_order_set()
}

/// Exactly one maximal filter. A `True` verdict is cross-checked against
/// its order-based consequences.
pub fn is_local(l: &ResiduatedLattice) -> Result<Verdict> {
    if l.n() == 1 {
        return Err(AlgebraError::Trivial);
    }
    let max = filters::maximal_filters(l)?;
    if max.len() != 1 {
        return Ok(Verdict::False);
    }
    local_consequences(l, &max[0])?;
    Ok(Verdict::True)
}

fn local_consequences(l: &ResiduatedLattice, m: &Filter) -> Result<()> {
    let d = infinite_order_elements(l);
    if m.members != d {
        return Err(AlgebraError::Inconsistent {
            check: "local ⇒ unique maximal filter = D(A)",
            detail: format!("Max = {}, D(A) = {}", l.fmt_set(m.members), l.fmt_set(d)),
        });
    }
    let two = ElemSet::singleton(l.bottom()).with(l.top());
    if l.boolean_center() != two {
        return Err(AlgebraError::Inconsistent {
            check: "local ⇒ B(A) = {0,1}",
            detail: l.fmt_set(l.boolean_center()),
        });
    }
    if let Some(a) = l.elements().find(|&a| !l.ord(a).is_finite() && !l.ord(l.neg(a)).is_finite()) {
        return Err(AlgebraError::Inconsistent {
            check: "local ⇒ ord(a) < ∞ or ord(¬a) < ∞",
            detail: l.elem_name(a).to_string(),
        });
    }
    Ok(())
}

/// Finitely many maximal filters: always true here; the count is returned.
pub fn is_semilocal(l: &ResiduatedLattice) -> Result<(Verdict, usize)> {
    if l.n() == 1 {
        return Err(AlgebraError::Trivial);
    }
    Ok((Verdict::True, filters::maximal_filters(l)?.len()))
}

/// Least `a` admitting no `e ∈ B(A)` with `aⁿ⊙e = 0` and `(¬a)ⁿ⊙¬e = 0`.
///
/// Both products only shrink as `n` grows, so one `n` past every
/// stabilization index serves all elements.
pub fn quasi_local_violation(l: &ResiduatedLattice) -> Option<usize> {
    let center = l.boolean_center();
    let zero = l.bottom();
    l.elements().find(|&a| {
        let an = l.stable_power(a);
        let nan = l.stable_power(l.neg(a));
        !center.iter().any(|e| l.prod(an, e) == zero && l.prod(nan, l.neg(e)) == zero)
    })
}

pub fn is_quasi_local(l: &ResiduatedLattice) -> Option<Witness> {
    quasi_local_violation(l).map(|a| {
        Witness::new(
            l,
            &[a],
            format!(
                "no u ∈ B(A) = {1} with {0}ⁿ⊙u = 0 and (¬{0})ⁿ⊙¬u = 0",
                l.elem_name(a),
                l.fmt_set(l.boolean_center())
            ),
        )
    })
}

/// An implication between verdicts, checked on one algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImplicationCheck {
    pub name: &'static str,
    /// Whether the hypotheses hold; a vacuous check always holds.
    pub applicable: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub algebra: String,
    pub n: usize,
    pub verdicts: BTreeMap<&'static str, Verdict>,
    pub witnesses: BTreeMap<&'static str, Witness>,
    pub filter_count: usize,
    pub spec_count: usize,
    pub max_count: usize,
    pub dense: Vec<String>,
    pub radical: Vec<String>,
    pub boolean_center: Vec<String>,
    /// `D(A)`, the elements of infinite order.
    pub infinite_order: Vec<String>,
    pub regular: Vec<String>,
    pub implications: Vec<ImplicationCheck>,
}

impl ClassificationReport {
    pub fn verdict(&self, class: &str) -> Option<Verdict> {
        self.verdicts.get(class).copied()
    }

    pub fn is(&self, class: &str) -> bool {
        self.verdict(class).is_some_and(Verdict::is_true)
    }

    pub fn failed_implications(&self) -> impl Iterator<Item = &ImplicationCheck> {
        self.implications.iter().filter(|c| !c.holds)
    }
}

/// Class names in report order.
pub const CLASSES: [&str; 14] = [
    "mtl",
    "imtl",
    "bl",
    "mv",
    "involutive",
    "glivenko",
    "star_equation",
    "simple",
    "local",
    "semilocal",
    "quasi_local",
    "dense_quotient_quasi_local",
    "dense_quotient_involutive",
    "lifting_boolean_center",
];

pub fn classification_report(l: &ResiduatedLattice) -> Result<ClassificationReport> {
    let mut verdicts = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    let mut record = |class: &'static str, w: Option<Witness>| {
        verdicts.insert(class, Verdict::from_bool(w.is_none()));
        if let Some(w) = w {
            witnesses.insert(class, w);
        }
    };
    record("mtl", is_mtl(l));
    record("imtl", is_imtl(l));
    record("bl", is_bl(l));
    record("mv", is_mv(l));
    record("involutive", is_involutive(l));
    record("glivenko", glivenko_witness(l));
    record("star_equation", star_equation_witness(l));
    record("quasi_local", is_quasi_local(l));

    let p = dense_quotient(l)?;
    let ds_ql = is_quasi_local(&p.algebra).map(|w| Witness { detail: format!("in A/Ds(A): {}", w.detail), ..w });
    record("dense_quotient_quasi_local", ds_ql);
    record(
        "dense_quotient_involutive",
        is_involutive(&p.algebra).map(|w| Witness { detail: format!("in A/Ds(A): {}", w.detail), ..w }),
    );
    let lifting = has_lifting_boolean_center(l)?;
    let r = radical_quotient(l)?;
    record(
        "lifting_boolean_center",
        (!lifting).then(|| Witness {
            elements: vec![],
            detail: format!(
                "|B(A)| = {} but |B(A/Rad(A))| = {}",
                l.boolean_center().len(),
                r.algebra.boolean_center().len()
            ),
        }),
    );

    let all = filters::all_filters(l)?;
    let spec = filters::spectrum(l)?;
    let max = filters::max_spectrum(l)?;
    if l.n() == 1 {
        for class in ["simple", "local", "semilocal"] {
            verdicts.insert(class, Verdict::Trivial);
        }
    } else {
        let simple = is_simple(l)?;
        verdicts.insert("simple", simple);
        if let Some(w) = (!simple.is_true()).then(|| simple_witness(l)).flatten() {
            witnesses.insert("simple", w);
        }
        let local = is_local(l)?;
        verdicts.insert("local", local);
        if !local.is_true() && max.len() >= 2 {
            witnesses.insert(
                "local",
                Witness {
                    elements: vec![],
                    detail: format!(
                        "maximal filters {} and {}",
                        l.fmt_set(max.points[0].members),
                        l.fmt_set(max.points[1].members)
                    ),
                },
            );
        }
        verdicts.insert("semilocal", is_semilocal(l)?.0);
    }

    let implications = implication_checks(l, &verdicts, &all)?;
    let rad = filters::radical(l)?;
    Ok(ClassificationReport {
        algebra: l.name().to_string(),
        n: l.n(),
        verdicts,
        witnesses,
        filter_count: all.len(),
        spec_count: spec.len(),
        max_count: max.len(),
        dense: l.set_names(l.dense_set()),
        radical: l.set_names(rad.members),
        boolean_center: l.set_names(l.boolean_center()),
        infinite_order: l.set_names(infinite_order_elements(l)),
        regular: l.set_names(l.regular_elements()),
        implications,
    })
}

fn implication_checks(
    l: &ResiduatedLattice,
    v: &BTreeMap<&'static str, Verdict>,
    all: &[Filter],
) -> Result<Vec<ImplicationCheck>> {
    let is = |c: &str| v.get(c).copied().is_some_and(Verdict::is_true);
    let imp = |name, hyp: bool, concl: bool| ImplicationCheck { name, applicable: hyp, holds: !hyp || concl };
    let mut out = vec![
        imp("mv ⇒ bl", is("mv"), is("bl")),
        imp("bl ⇒ mtl", is("bl"), is("mtl")),
        ImplicationCheck {
            name: "imtl = mtl ∧ involutive",
            applicable: true,
            holds: is("imtl") == (is("mtl") && is("involutive")),
        },
        imp("simple ⇒ local", is("simple"), is("local")),
        imp("local ⇒ semilocal", is("local"), is("semilocal")),
        imp("local ⇒ quasi_local", is("local"), is("quasi_local")),
        imp("local ⇒ B(A) = {0,1}", is("local"), l.boolean_center().len() == 2),
        imp("quasi_local ⇒ dense_quotient_quasi_local", is("quasi_local"), is("dense_quotient_quasi_local")),
        imp(
            "glivenko ∧ star_equation ∧ dense_quotient_quasi_local ⇒ quasi_local",
            is("glivenko") && is("star_equation") && is("dense_quotient_quasi_local"),
            is("quasi_local"),
        ),
        ImplicationCheck {
            name: "glivenko ⇔ dense_quotient_involutive",
            applicable: true,
            holds: is("glivenko") == is("dense_quotient_involutive"),
        },
        imp("mv ⇒ lifting_boolean_center", is("mv"), is("lifting_boolean_center")),
        imp("bl ⇒ lifting_boolean_center", is("bl"), is("lifting_boolean_center")),
        imp(
            "glivenko ∧ star_equation ⇒ lifting_boolean_center",
            is("glivenko") && is("star_equation"),
            is("lifting_boolean_center"),
        ),
    ];
    let proper: Vec<&Filter> = all.iter().filter(|f| f.is_proper()).collect();
    out.push(ImplicationCheck {
        name: "primary ⇒ quasi_primary",
        applicable: proper.iter().any(|f| f.flags.primary),
        holds: proper.iter().all(|f| !f.flags.primary || f.flags.quasi_primary),
    });
    let ql = is("quasi_local");
    let mut preserved = true;
    if ql {
        for f in all {
            if is_quasi_local(&quotient(l, f.members)?.algebra).is_some() {
                preserved = false;
                break;
            }
        }
    }
    out.push(ImplicationCheck { name: "quasi_local ⇒ every A/F quasi_local", applicable: ql, holds: preserved });
    if l.n() > 1 {
        let r = radical_quotient(l)?;
        let rl = is_local(&r.algebra)?;
        out.push(ImplicationCheck {
            name: "local ⇔ A/Rad(A) local",
            applicable: true,
            holds: is("local") == rl.is_true(),
        });
    }
    Ok(out)
}
