//! Regular elements, the Glivenko property, the ★-operations on `Reg(A)`
//! and the MV structure they may carry.

use std::sync::Arc;

use crate::algebra::{validate, ResiduatedLattice};
use crate::error::{AlgebraError, Result};
use crate::morphism::Morphism;
use crate::set::ElemSet;
use crate::spec::AlgebraSpec;

/// `{a : ¬¬a = a}`; equal to the image of ¬.
pub fn regular_elements(l: &ResiduatedLattice) -> ElemSet {
    let reg = l.regular_elements();
    debug_assert_eq!(reg, l.elements().map(|a| l.neg(a)).collect());
    reg
}

/// Least `a` with `¬¬(¬¬a → a) ≠ 1`.
pub fn glivenko_violation(l: &ResiduatedLattice) -> Option<usize> {
    l.elements().find(|&a| {
        let nn = l.neg(l.neg(a));
        l.neg(l.neg(l.imp(nn, a))) != l.top()
    })
}

pub fn is_glivenko(l: &ResiduatedLattice) -> bool {
    glivenko_violation(l).is_none()
}

/// Least pair violating `(¬a→¬b)→¬b = (¬b→¬a)→¬a`.
pub fn star_equation_violation(l: &ResiduatedLattice) -> Option<(usize, usize)> {
    l.elements().flat_map(|a| l.elements().map(move |b| (a, b))).find(|&(a, b)| {
        let (na, nb) = (l.neg(a), l.neg(b));
        l.imp(l.imp(na, nb), nb) != l.imp(l.imp(nb, na), na)
    })
}

pub fn satisfies_star_equation(l: &ResiduatedLattice) -> bool {
    star_equation_violation(l).is_none()
}

/// `Reg(A)` with `a ⊙* b = ¬¬(a⊙b)`, `a ∨* b = ¬¬(a∨b)`, `a ∧* b = ¬¬(a∧b)`
/// and the inherited →. Tables are indexed by position in `members` and hold
/// ambient element indices.
#[derive(Debug, Clone)]
pub struct StarAlgebra {
    pub carrier: ElemSet,
    pub members: Vec<usize>,
    pub star_join: Vec<usize>,
    pub star_meet: Vec<usize>,
    pub star_prod: Vec<usize>,
    pub imp: Vec<usize>,
    /// The ★-tables as a validated residuated lattice, when they form one.
    pub algebra: Option<Arc<ResiduatedLattice>>,
    /// Why validation failed, when it did.
    pub invalid_reason: Option<String>,
    pub is_involutive_rl: bool,
    /// `a ↦ ¬¬a` onto the ★-algebra, when that is a morphism.
    pub double_negation: Option<Morphism>,
}

impl StarAlgebra {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Position of an ambient element inside `members`.
    pub fn position(&self, a: usize) -> Option<usize> {
        self.members.iter().position(|&m| m == a)
    }

    /// Whether the Glivenko equivalence's right-hand side holds: the
    /// ★-algebra is an involutive residuated lattice and ¬¬ is a surjective
    /// morphism onto it.
    pub fn double_negation_is_surjective_morphism(&self) -> bool {
        self.is_involutive_rl && self.double_negation.as_ref().is_some_and(|m| m.surjective)
    }
}

pub fn star_algebra(l: &ResiduatedLattice) -> StarAlgebra {
    let carrier = regular_elements(l);
    let members: Vec<usize> = carrier.iter().collect();
    let k = members.len();
    let nn = |x: usize| l.neg(l.neg(x));
    let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<usize> {
        (0..k * k).map(|i| f(members[i / k], members[i % k])).collect()
    };
    let star_join = table(&|a, b| nn(l.join(a, b)));
    let star_meet = table(&|a, b| nn(l.meet(a, b)));
    let star_prod = table(&|a, b| nn(l.prod(a, b)));
    let imp = table(&|a, b| l.imp(a, b));

    let pos = |x: usize| members.iter().position(|&m| m == x).expect("regular");
    let names: Vec<String> = members.iter().map(|&m| l.elem_name(m).to_string()).collect();
    let named = |t: &[usize]| -> Vec<Vec<String>> {
        t.chunks(k).map(|r| r.iter().map(|&x| l.elem_name(x).to_string()).collect()).collect()
    };
    let spec = AlgebraSpec {
        name: format!("Reg({})", l.name()),
        elements: names,
        join: named(&star_join),
        meet: named(&star_meet),
        prod: named(&star_prod),
        imp: Some(named(&imp)),
        bottom: l.elem_name(l.bottom()).to_string(),
        top: l.elem_name(l.top()).to_string(),
    };
    let (algebra, invalid_reason) = match validate(&spec) {
        Ok(alg) => (Some(Arc::new(alg)), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let is_involutive_rl = algebra.as_ref().is_some_and(|a| a.is_involutive());
    let double_negation = algebra.as_ref().and_then(|alg| {
        let map = l.elements().map(|a| pos(nn(a))).collect();
        Morphism::new(Arc::new(l.clone()), alg.clone(), map).ok()
    });
    StarAlgebra {
        carrier,
        members,
        star_join,
        star_meet,
        star_prod,
        imp,
        algebra,
        invalid_reason,
        is_involutive_rl,
        double_negation,
    }
}

/// `⊕` on `Reg(A)` given by `¬a ⊕ ¬b = ¬(a ⊙* b)`, with the MV axiom scan.
#[derive(Debug, Clone)]
pub struct MvStructure {
    pub star: StarAlgebra,
    /// Indexed like the star tables; entries are ambient indices.
    pub oplus: Vec<usize>,
    pub is_mv: bool,
    /// First MV axiom that fails, with the elements involved.
    pub violation: Option<String>,
    pub star_equation: bool,
}

impl MvStructure {
    pub fn agrees_with_star_equation(&self) -> bool {
        self.is_mv == self.star_equation
    }
}

/// Builds `⊕` on `Reg(A)` and checks the MV axioms. A regular `x` is
/// written as `¬(¬x)`, so `x ⊕ y = ¬(¬x ⊙* ¬y)`.
pub fn mv_structure_on_reg(l: &ResiduatedLattice) -> Result<MvStructure> {
    if let Some(a) = glivenko_violation(l) {
        return Err(AlgebraError::NotGlivenko(l.elem_name(a).to_string()));
    }
    let star = star_algebra(l);
    let k = star.len();
    let m = &star.members;
    let pos = |x: usize| star.position(x).expect("regular");
    let sprod = |x: usize, y: usize| star.star_prod[pos(x) * k + pos(y)];
    let oplus_amb = |x: usize, y: usize| l.neg(sprod(l.neg(x), l.neg(y)));
    let oplus: Vec<usize> = (0..k * k).map(|i| oplus_amb(m[i / k], m[i % k])).collect();
    let op = |x: usize, y: usize| oplus[pos(x) * k + pos(y)];
    let name = |x: usize| l.elem_name(x).to_string();
    let zero = l.bottom();
    let one = l.neg(zero);

    let mut violation = None;
    'scan: for &a in m {
        if l.neg(l.neg(a)) != a {
            violation = Some(format!("¬¬{} ≠ {}", name(a), name(a)));
            break;
        }
        if op(a, zero) != a {
            violation = Some(format!("{} ⊕ 0 ≠ {}", name(a), name(a)));
            break;
        }
        if op(a, one) != one {
            violation = Some(format!("{} ⊕ ¬0 ≠ ¬0", name(a)));
            break;
        }
        for &b in m {
            if op(a, b) != op(b, a) {
                violation = Some(format!("{0} ⊕ {1} ≠ {1} ⊕ {0}", name(a), name(b)));
                break 'scan;
            }
            if op(l.neg(op(l.neg(a), b)), b) != op(l.neg(op(l.neg(b), a)), a) {
                violation = Some(format!("¬(¬{0} ⊕ {1}) ⊕ {1} ≠ ¬(¬{1} ⊕ {0}) ⊕ {0}", name(a), name(b)));
                break 'scan;
            }
            for &c in m {
                if op(op(a, b), c) != op(a, op(b, c)) {
                    violation = Some(format!("⊕ not associative at ({}, {}, {})", name(a), name(b), name(c)));
                    break 'scan;
                }
            }
        }
    }
    Ok(MvStructure { star, oplus, is_mv: violation.is_none(), violation, star_equation: satisfies_star_equation(l) })
}

/// `B(A) = B(Reg(A))`, the latter taken in the ★-algebra.
///
/// Returns `None` when the ★-tables do not form a residuated lattice.
pub fn boolean_center_equality(l: &ResiduatedLattice) -> Option<bool> {
    let star = star_algebra(l);
    let alg = star.algebra.as_ref()?;
    let reg_center: ElemSet = alg.boolean_center().iter().map(|i| star.members[i]).collect();
    Some(reg_center == l.boolean_center())
}
