//! Validated finite residuated lattices and their derived operations.

use std::fmt;

use serde::Serialize;

use crate::error::{AlgebraError, Op, Result};
use crate::set::{ElemSet, MAX_BITS};
use crate::spec::AlgebraSpec;

/// Default upper bound on carrier size accepted by [`validate`].
pub const DEFAULT_SIZE_CAP: usize = MAX_BITS;

/// A finite commutative residuated lattice with index-based tables.
///
/// Elements are the indices `0..n`; names are carried for reporting only.
/// Instances are only produced by validation, so every accessor can assume
/// the lattice, monoid and residuation laws.
#[derive(Clone, PartialEq, Eq)]
pub struct ResiduatedLattice {
    name: String,
    names: Vec<String>,
    n: usize,
    join: Vec<usize>,
    meet: Vec<usize>,
    prod: Vec<usize>,
    imp: Vec<usize>,
    leq: Vec<bool>,
    bottom: usize,
    top: usize,
}

/// `ord(a)`: the least `k ≥ 1` with `a^k = 0`, or infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OrderValue {
    Finite(usize),
    Infinite,
}

impl OrderValue {
    pub fn is_finite(self) -> bool {
        matches!(self, OrderValue::Finite(_))
    }
}

impl fmt::Display for OrderValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderValue::Finite(k) => write!(f, "{k}"),
            OrderValue::Infinite => f.write_str("∞"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementOrder {
    pub element: usize,
    pub ord: OrderValue,
    /// Distinct powers `a¹, a², ..` up to the first repetition or zero.
    pub power_trace: Vec<usize>,
}

/// Validates a spec against the residuated-lattice axioms with the default cap.
pub fn validate(spec: &AlgebraSpec) -> Result<ResiduatedLattice> {
    validate_capped(spec, DEFAULT_SIZE_CAP)
}

/// Validates a spec, rejecting carriers larger than `cap`.
///
/// When the residuum table is omitted it is derived as the maximum of
/// `{c : a⊙c ≤ b}`; when present it must satisfy residuation exactly.
pub fn validate_capped(spec: &AlgebraSpec, cap: usize) -> Result<ResiduatedLattice> {
    let cap = cap.min(MAX_BITS);
    let index = spec.check_shape().map_err(|e| AlgebraError::NameError(e.to_string()))?;
    let n = spec.elements.len();
    if n > cap {
        return Err(AlgebraError::CapExceeded { n, cap });
    }
    let flat = |t: &Vec<Vec<String>>| -> Vec<usize> { t.iter().flatten().map(|s| index[s.as_str()]).collect() };
    let join = flat(&spec.join);
    let meet = flat(&spec.meet);
    let prod = flat(&spec.prod);
    let given_imp = spec.imp.as_ref().map(flat);
    let bottom = index[spec.bottom.as_str()];
    let top = index[spec.top.as_str()];
    let names = spec.elements.clone();
    let nm = |i: usize| names[i].clone();

    check_lattice(n, &join, &meet, bottom, top, &nm)?;
    let leq: Vec<bool> = (0..n * n).map(|k| join[k] == k % n).collect();
    check_monoid(n, &prod, top, &nm)?;

    let imp = match given_imp {
        Some(imp) => imp,
        None => derive_residuum(n, &prod, &leq, &nm)?,
    };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = leq[a * n + imp[b * n + c]];
                let rhs = leq[prod[a * n + b] * n + c];
                if lhs != rhs {
                    return Err(AlgebraError::ResiduationViolation { a: nm(a), b: nm(b), c: nm(c), lhs, rhs });
                }
            }
        }
    }

    Ok(ResiduatedLattice { name: spec.name.clone(), names, n, join, meet, prod, imp, leq, bottom, top })
}

fn check_lattice(
    n: usize,
    join: &[usize],
    meet: &[usize],
    bottom: usize,
    top: usize,
    nm: &dyn Fn(usize) -> String,
) -> Result<()> {
    let fail = |axiom, elems: &[usize]| AlgebraError::LatticeAxiomViolation {
        axiom,
        elems: elems.iter().map(|&e| nm(e)).collect(),
    };
    let j = |a: usize, b: usize| join[a * n + b];
    let m = |a: usize, b: usize| meet[a * n + b];
    for a in 0..n {
        if j(a, a) != a {
            return Err(fail("a∨a = a", &[a]));
        }
        if m(a, a) != a {
            return Err(fail("a∧a = a", &[a]));
        }
        if j(bottom, a) != a || m(top, a) != a {
            return Err(fail("0 ≤ a ≤ 1", &[a]));
        }
        for b in 0..n {
            if j(a, b) != j(b, a) {
                return Err(fail("a∨b = b∨a", &[a, b]));
            }
            if m(a, b) != m(b, a) {
                return Err(fail("a∧b = b∧a", &[a, b]));
            }
            if j(a, m(a, b)) != a {
                return Err(fail("a∨(a∧b) = a", &[a, b]));
            }
            if m(a, j(a, b)) != a {
                return Err(fail("a∧(a∨b) = a", &[a, b]));
            }
            // order read off the join must agree with the order read off the meet
            if (j(a, b) == b) != (m(a, b) == a) {
                return Err(fail("a∨b = b ⇔ a∧b = a", &[a, b]));
            }
            for c in 0..n {
                if j(j(a, b), c) != j(a, j(b, c)) {
                    return Err(fail("(a∨b)∨c = a∨(b∨c)", &[a, b, c]));
                }
                if m(m(a, b), c) != m(a, m(b, c)) {
                    return Err(fail("(a∧b)∧c = a∧(b∧c)", &[a, b, c]));
                }
            }
        }
    }
    Ok(())
}

fn check_monoid(n: usize, prod: &[usize], top: usize, nm: &dyn Fn(usize) -> String) -> Result<()> {
    let fail = |axiom, elems: &[usize]| AlgebraError::MonoidAxiomViolation {
        axiom,
        elems: elems.iter().map(|&e| nm(e)).collect(),
    };
    let p = |a: usize, b: usize| prod[a * n + b];
    for a in 0..n {
        if p(a, top) != a {
            return Err(fail("a⊙1 = a", &[a]));
        }
        for b in 0..n {
            if p(a, b) != p(b, a) {
                return Err(fail("a⊙b = b⊙a", &[a, b]));
            }
            for c in 0..n {
                if p(p(a, b), c) != p(a, p(b, c)) {
                    return Err(fail("(a⊙b)⊙c = a⊙(b⊙c)", &[a, b, c]));
                }
            }
        }
    }
    Ok(())
}

fn derive_residuum(n: usize, prod: &[usize], leq: &[bool], nm: &dyn Fn(usize) -> String) -> Result<Vec<usize>> {
    let mut imp = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let below: Vec<usize> = (0..n).filter(|&c| leq[prod[a * n + c] * n + b]).collect();
            let max = below.iter().copied().find(|&m| below.iter().all(|&c| leq[c * n + m]));
            imp[a * n + b] = max.ok_or_else(|| AlgebraError::NoResidual { a: nm(a), b: nm(b) })?;
        }
    }
    Ok(imp)
}

impl ResiduatedLattice {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Carrier size.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn full(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elem_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    /// Resolves a list of element names into a subset.
    pub fn subset_of_names<S: AsRef<str>>(&self, names: &[S]) -> Result<ElemSet> {
        names
            .iter()
            .map(|s| self.index_of(s.as_ref()).ok_or_else(|| AlgebraError::UnknownElement(s.as_ref().to_string())))
            .collect()
    }

    pub fn set_names(&self, s: ElemSet) -> Vec<String> {
        s.iter().map(|i| self.names[i].clone()).collect()
    }

    /// `{x, y, ..}` rendering of a subset.
    pub fn fmt_set(&self, s: ElemSet) -> String {
        format!("{{{}}}", self.set_names(s).join(", "))
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b]
    }

    pub fn prod(&self, a: usize, b: usize) -> usize {
        self.prod[a * self.n + b]
    }

    pub fn imp(&self, a: usize, b: usize) -> usize {
        self.imp[a * self.n + b]
    }

    pub fn apply(&self, op: Op, a: usize, b: usize) -> usize {
        match op {
            Op::Join => self.join(a, b),
            Op::Meet => self.meet(a, b),
            Op::Prod => self.prod(a, b),
            Op::Imp => self.imp(a, b),
        }
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// `¬a = a → 0`.
    pub fn neg(&self, a: usize) -> usize {
        self.imp(a, self.bottom)
    }

    /// `a ↔ b = (a→b) ∧ (b→a)`.
    pub fn biimp(&self, a: usize, b: usize) -> usize {
        self.meet(self.imp(a, b), self.imp(b, a))
    }

    /// `a^k`, with `a^0 = 1`.
    pub fn power(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.top, |acc, _| self.prod(acc, a))
    }

    /// The value at which `a, a², a³, ..` stabilizes. Powers are
    /// ≤-non-increasing, so the sequence is constant from the first repeat on,
    /// and `a^k` equals this value for every `k ≥ n`.
    pub fn stable_power(&self, a: usize) -> usize {
        let mut p = a;
        loop {
            let next = self.prod(p, a);
            if next == p {
                return p;
            }
            p = next;
        }
    }

    /// Distinct powers `a¹, a², ..` in order, ending at the stable value.
    pub fn distinct_powers(&self, a: usize) -> Vec<usize> {
        let mut out = vec![a];
        loop {
            let next = self.prod(*out.last().unwrap(), a);
            if next == *out.last().unwrap() {
                return out;
            }
            out.push(next);
        }
    }

    pub fn order_of(&self, a: usize) -> ElementOrder {
        let mut trace = Vec::new();
        let mut p = a;
        loop {
            trace.push(p);
            if p == self.bottom {
                return ElementOrder { element: a, ord: OrderValue::Finite(trace.len()), power_trace: trace };
            }
            let next = self.prod(p, a);
            // non-increasing sequence: a repeat can only be a consecutive one
            if next == p {
                return ElementOrder { element: a, ord: OrderValue::Infinite, power_trace: trace };
            }
            p = next;
        }
    }

    pub fn ord(&self, a: usize) -> OrderValue {
        self.order_of(a).ord
    }

    /// `B(A) = {e : e ∨ ¬e = 1}`.
    pub fn boolean_center(&self) -> ElemSet {
        self.elements().filter(|&e| self.join(e, self.neg(e)) == self.top).collect()
    }

    /// Complemented elements of the bare lattice, found by searching for a
    /// lattice complement. Independent of the residuum.
    pub fn lattice_complemented(&self) -> ElemSet {
        self.elements()
            .filter(|&e| self.elements().any(|f| self.join(e, f) == self.top && self.meet(e, f) == self.bottom))
            .collect()
    }

    /// The complement of a central element, which is its negation.
    pub fn complement(&self, e: usize) -> Result<usize> {
        if self.join(e, self.neg(e)) == self.top {
            Ok(self.neg(e))
        } else {
            Err(AlgebraError::NotComplemented(self.names[e].clone()))
        }
    }

    /// `Reg(A) = {a : ¬¬a = a}`.
    pub fn regular_elements(&self) -> ElemSet {
        self.elements().filter(|&a| self.neg(self.neg(a)) == a).collect()
    }

    /// `Ds(A) = {a : ¬a = 0}`.
    pub fn dense_set(&self) -> ElemSet {
        self.elements().filter(|&a| self.neg(a) == self.bottom).collect()
    }

    /// `D(A) = {a : ord(a) = ∞}`.
    pub fn infinite_order_set(&self) -> ElemSet {
        self.elements().filter(|&a| !self.ord(a).is_finite()).collect()
    }

    pub fn is_involutive(&self) -> bool {
        self.elements().all(|a| self.neg(self.neg(a)) == a)
    }

    /// Up-set generated by `s`.
    pub fn up_closure(&self, s: ElemSet) -> ElemSet {
        self.elements().filter(|&b| s.iter().any(|a| self.leq(a, b))).collect()
    }

    /// Whether the subset is closed under all four operations.
    pub fn first_non_closure(&self, s: ElemSet) -> Option<(Op, usize, usize, usize)> {
        for op in Op::ALL {
            for a in s {
                for b in s {
                    let r = self.apply(op, a, b);
                    if !s.contains(r) {
                        return Some((op, a, b, r));
                    }
                }
            }
        }
        None
    }

    /// Converts back into named tables (with the residuum included).
    pub fn to_spec(&self) -> AlgebraSpec {
        let imp = |a, b| self.imp(a, b);
        AlgebraSpec::from_fns(
            self.name.clone(),
            self.names.clone(),
            self.bottom,
            self.top,
            |a, b| self.join(a, b),
            |a, b| self.meet(a, b),
            |a, b| self.prod(a, b),
            Some(&imp),
        )
    }

    /// Pairs `(a, b)` with `a` covered by `b`: the transitive reduction of `<`.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                if self.lt(a, b) && !self.elements().any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_chain(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.leq(a, b) || self.leq(b, a)))
    }
}

impl fmt::Debug for ResiduatedLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ResiduatedLattice")
            .field("name", &self.name)
            .field("elements", &self.names)
            .finish_non_exhaustive()
    }
}

/// Componentwise product; element `(x, y)` sits at index `x * |L2| + y`.
pub fn direct_product(l1: &ResiduatedLattice, l2: &ResiduatedLattice) -> Result<ResiduatedLattice> {
    let m = l2.n();
    let names: Vec<String> = l1
        .elements()
        .flat_map(|x| l2.elements().map(move |y| (x, y)))
        .map(|(x, y)| format!("({},{})", l1.elem_name(x), l2.elem_name(y)))
        .collect();
    let lift = |f1: fn(&ResiduatedLattice, usize, usize) -> usize| {
        move |a: usize, b: usize| f1(l1, a / m, b / m) * m + f1(l2, a % m, b % m)
    };
    let imp = lift(ResiduatedLattice::imp);
    let spec = AlgebraSpec::from_fns(
        format!("{}×{}", l1.name(), l2.name()),
        names,
        l1.bottom() * m + l2.bottom(),
        l1.top() * m + l2.top(),
        lift(ResiduatedLattice::join),
        lift(ResiduatedLattice::meet),
        lift(ResiduatedLattice::prod),
        Some(&imp),
    );
    validate(&spec)
}

/// Induced algebra on a subset closed under every operation.
///
/// Element `i` of the result is the `i`-th member of `subset` in index order.
pub fn subalgebra(l: &ResiduatedLattice, subset: ElemSet) -> Result<ResiduatedLattice> {
    if let Some(i) = subset.iter().find(|&i| i >= l.n()) {
        return Err(AlgebraError::BadIndex { index: i, n: l.n() });
    }
    for (c, label) in [(l.bottom(), "0"), (l.top(), "1")] {
        if !subset.contains(c) {
            return Err(AlgebraError::MissingConstant(label.to_string()));
        }
    }
    if let Some((op, a, b, r)) = l.first_non_closure(subset) {
        return Err(AlgebraError::NotClosed {
            op,
            a: l.elem_name(a).to_string(),
            b: l.elem_name(b).to_string(),
            result: l.elem_name(r).to_string(),
        });
    }
    Ok(induced(l, subset, l.name().to_string()))
}

/// Restriction of the tables to a closed subset. Caller guarantees closure.
pub(crate) fn induced(l: &ResiduatedLattice, subset: ElemSet, name: String) -> ResiduatedLattice {
    let members: Vec<usize> = subset.iter().collect();
    let pos = |x: usize| members.iter().position(|&m| m == x).expect("closed subset");
    let k = members.len();
    let tab =
        |op: Op| -> Vec<usize> { (0..k * k).map(|idx| pos(l.apply(op, members[idx / k], members[idx % k]))).collect() };
    let join = tab(Op::Join);
    let leq = (0..k * k).map(|idx| join[idx] == idx % k).collect();
    ResiduatedLattice {
        name,
        names: members.iter().map(|&m| l.elem_name(m).to_string()).collect(),
        n: k,
        join,
        meet: tab(Op::Meet),
        prod: tab(Op::Prod),
        imp: tab(Op::Imp),
        leq,
        bottom: pos(l.bottom()),
        top: pos(l.top()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::builtin_algebra;

    fn bool2() -> ResiduatedLattice {
        builtin_algebra("BOOL2").unwrap()
    }

    #[test]
    fn smallest_boolean_algebra_validates() {
        let b = bool2();
        assert_eq!(b.n(), 2);
        assert_eq!(b.neg(0), 1);
        assert_eq!(b.neg(1), 0);
    }

    #[test]
    fn altered_residuum_is_rejected() {
        let mut spec = crate::corpus::builtin("RL6D").unwrap().spec;
        let imp = spec.imp.as_mut().unwrap();
        // c → b changed from d to 1
        imp[3][2] = "1".into();
        let err = validate(&spec).unwrap_err();
        assert!(matches!(err, AlgebraError::ResiduationViolation { .. }), "{err}");
    }

    #[test]
    fn cap_is_enforced() {
        let spec = crate::corpus::builtin("RL6D").unwrap().spec;
        assert_eq!(validate_capped(&spec, 5).unwrap_err(), AlgebraError::CapExceeded { n: 6, cap: 5 });
    }

    #[test]
    fn non_lattice_join_is_rejected() {
        let mut spec = bool2().to_spec();
        spec.join[0][1] = "0".into();
        assert!(matches!(validate(&spec).unwrap_err(), AlgebraError::LatticeAxiomViolation { .. }));
    }

    #[test]
    fn non_unital_product_is_rejected() {
        let mut spec = bool2().to_spec();
        spec.prod[1][1] = "0".into();
        assert!(matches!(validate(&spec).unwrap_err(), AlgebraError::MonoidAxiomViolation { .. }));
    }

    #[test]
    fn missing_residual_is_reported() {
        let names: Vec<String> = ["0", "x", "y", "1"].iter().map(|s| s.to_string()).collect();
        let leq = |a: usize, b: usize| a == b || a == 0 || b == 3;
        let join = |a: usize, b: usize| {
            if leq(a, b) {
                b
            } else if leq(b, a) {
                a
            } else {
                3
            }
        };
        let meet = |a: usize, b: usize| {
            if leq(a, b) {
                a
            } else if leq(b, a) {
                b
            } else {
                0
            }
        };
        // diamond with every product of atoms zero: {c : x⊙c ≤ 0} = {0, x, y} has no maximum
        let prod = |a: usize, b: usize| {
            if a == 3 {
                b
            } else if b == 3 {
                a
            } else {
                0
            }
        };
        let spec = AlgebraSpec::from_fns("nores", names, 0, 3, join, meet, prod, None);
        assert!(matches!(validate(&spec).unwrap_err(), AlgebraError::NoResidual { .. }));
    }

    #[test]
    fn negation_and_biimplication_on_rl6d() {
        let l = builtin_algebra("RL6D").unwrap();
        let [a, b, c, d] = ["a", "b", "c", "d"].map(|s| l.index_of(s).unwrap());
        assert_eq!(l.neg(b), a);
        assert_eq!(l.neg(l.bottom()), l.top());
        assert_eq!(l.neg(l.top()), l.bottom());
        assert_eq!(l.biimp(b, c), d);
    }

    #[test]
    fn element_orders() {
        let l = builtin_algebra("RL6D").unwrap();
        assert_eq!(l.ord(l.index_of("a").unwrap()), OrderValue::Finite(2));
        assert_eq!(l.ord(l.top()), OrderValue::Infinite);
        let c6 = builtin_algebra("RL6C").unwrap();
        let c = c6.index_of("c").unwrap();
        let o = c6.order_of(c);
        assert_eq!(o.ord, OrderValue::Finite(3));
        assert_eq!(o.power_trace, vec![c, c6.index_of("b").unwrap(), c6.bottom()]);
        assert_eq!(c6.power(c, 0), c6.top());
    }

    #[test]
    fn boolean_centers() {
        let l = builtin_algebra("RL6D").unwrap();
        assert_eq!(l.boolean_center(), ElemSet::EMPTY.with(l.bottom()).with(l.top()));
        assert_eq!(l.complement(l.bottom()), Ok(l.top()));
        assert!(matches!(l.complement(l.index_of("b").unwrap()), Err(AlgebraError::NotComplemented(_))));
        let q = builtin_algebra("RL7Q").unwrap();
        assert_eq!(q.boolean_center().len(), 2);
    }

    #[test]
    fn products() {
        let b = bool2();
        let b4 = direct_product(&b, &b).unwrap();
        assert_eq!(b4.n(), 4);
        assert_eq!(b4.boolean_center(), b4.full());
        let l = builtin_algebra("RL6D").unwrap();
        assert_eq!(direct_product(&l, &b).unwrap().n(), 12);
    }

    #[test]
    fn subalgebras() {
        let c6 = builtin_algebra("RL6C").unwrap();
        let s = c6.subset_of_names(&["0", "a", "d", "1"]).unwrap();
        let sub = subalgebra(&c6, s).unwrap();
        assert_eq!(sub.n(), 4);
        assert_eq!(validate(&sub.to_spec()).unwrap(), sub);
        assert_eq!(subalgebra(&c6, c6.full()).unwrap(), c6);

        let l = builtin_algebra("RL6D").unwrap();
        let s = l.subset_of_names(&["0", "b", "1"]).unwrap();
        assert_eq!(
            subalgebra(&l, s).unwrap_err(),
            AlgebraError::NotClosed { op: Op::Imp, a: "b".into(), b: "0".into(), result: "a".into() }
        );
        let s = l.subset_of_names(&["b", "1"]).unwrap();
        assert!(matches!(subalgebra(&l, s), Err(AlgebraError::MissingConstant(_))));
    }

    #[test]
    fn covering_relation_of_rl6d() {
        let l = builtin_algebra("RL6D").unwrap();
        let named: Vec<(String, String)> =
            l.covering_pairs().into_iter().map(|(a, b)| (l.elem_name(a).into(), l.elem_name(b).into())).collect();
        let expected = [("0", "a"), ("a", "b"), ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")];
        assert_eq!(named.len(), 6);
        for (x, y) in expected {
            assert!(named.contains(&(x.into(), y.into())), "{x} ⋖ {y}");
        }
    }
}
