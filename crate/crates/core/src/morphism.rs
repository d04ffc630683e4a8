//! Maps between finite residuated lattices, verified exhaustively.

use std::sync::Arc;

use crate::algebra::{induced, ResiduatedLattice};
use crate::error::{AlgebraError, Op, Result};
use crate::set::ElemSet;

#[derive(Debug, Clone)]
pub struct Morphism {
    pub source: Arc<ResiduatedLattice>,
    pub target: Arc<ResiduatedLattice>,
    pub map: Vec<usize>,
    pub injective: bool,
    pub surjective: bool,
}

impl Morphism {
    /// Checks that `map` preserves ∨, ∧, ⊙, →, 0 and 1.
    pub fn new(source: Arc<ResiduatedLattice>, target: Arc<ResiduatedLattice>, map: Vec<usize>) -> Result<Morphism> {
        if map.len() != source.n() {
            return Err(AlgebraError::Inconsistent {
                check: "morphism domain",
                detail: format!("map has {} entries for {} elements", map.len(), source.n()),
            });
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.n()) {
            return Err(AlgebraError::BadIndex { index: bad, n: target.n() });
        }
        if map[source.bottom()] != target.bottom() {
            return Err(AlgebraError::ConstantNotPreserved("0"));
        }
        if map[source.top()] != target.top() {
            return Err(AlgebraError::ConstantNotPreserved("1"));
        }
        for op in Op::ALL {
            for a in source.elements() {
                for b in source.elements() {
                    if map[source.apply(op, a, b)] != target.apply(op, map[a], map[b]) {
                        return Err(AlgebraError::NotAMorphism {
                            op,
                            a: source.elem_name(a).to_string(),
                            b: source.elem_name(b).to_string(),
                        });
                    }
                }
            }
        }
        let image: ElemSet = map.iter().copied().collect();
        let injective = image.len() == source.n();
        let surjective = image == target.full();
        Ok(Morphism { source, target, map, injective, surjective })
    }

    pub fn identity(l: Arc<ResiduatedLattice>) -> Morphism {
        let map = l.elements().collect();
        Morphism::new(l.clone(), l, map).expect("identity is a morphism")
    }

    pub fn is_isomorphism(&self) -> bool {
        self.injective && self.surjective
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn image(&self, s: ElemSet) -> ElemSet {
        s.iter().map(|a| self.map[a]).collect()
    }

    pub fn preimage(&self, s: ElemSet) -> ElemSet {
        self.source.elements().filter(|&a| s.contains(self.map[a])).collect()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism) -> Result<Morphism> {
        let map = self.map.iter().map(|&y| other.map[y]).collect();
        Morphism::new(self.source.clone(), other.target.clone(), map)
    }
}

/// The Boolean center as a residuated lattice (it is closed under all four
/// operations), together with the list of ambient indices it occupies.
pub fn center_algebra(l: &ResiduatedLattice) -> (ResiduatedLattice, Vec<usize>) {
    let center = l.boolean_center();
    let alg = induced(l, center, format!("B({})", l.name()));
    (alg, center.iter().collect())
}

/// Whether a residuated lattice is a Boolean algebra: distributive,
/// complemented, with ⊙ = ∧.
pub fn is_boolean_algebra(l: &ResiduatedLattice) -> bool {
    let els = || l.elements();
    els().all(|a| l.join(a, l.neg(a)) == l.top() && l.meet(a, l.neg(a)) == l.bottom())
        && els().all(|a| els().all(|b| l.prod(a, b) == l.meet(a, b)))
        && els().all(|a| els().all(|b| els().all(|c| l.meet(a, l.join(b, c)) == l.join(l.meet(a, b), l.meet(a, c)))))
}

/// `B(f)`: restriction of `f` to the Boolean centers.
pub fn b_functor(f: &Morphism) -> Result<Morphism> {
    let (src, src_members) = center_algebra(&f.source);
    let (tgt, tgt_members) = center_algebra(&f.target);
    let mut map = Vec::with_capacity(src_members.len());
    for &e in &src_members {
        let y = f.map[e];
        match tgt_members.iter().position(|&t| t == y) {
            Some(p) => map.push(p),
            None => return Err(AlgebraError::CenterNotPreserved(f.source.elem_name(e).to_string())),
        }
    }
    for (alg, side) in [(&src, "source"), (&tgt, "target")] {
        if !is_boolean_algebra(alg) {
            return Err(AlgebraError::Inconsistent {
                check: "B(A) is a Boolean algebra",
                detail: format!("center of the {side} is not Boolean"),
            });
        }
    }
    Morphism::new(Arc::new(src), Arc::new(tgt), map)
}

/// Searches for an isomorphism by backtracking over order-preserving
/// bijections. Exponential; meant for small algebras and test oracles.
pub fn find_isomorphism(a: &ResiduatedLattice, b: &ResiduatedLattice) -> Option<Vec<usize>> {
    if a.n() != b.n() {
        return None;
    }
    let n = a.n();
    // cheap invariant per element: (down-set size, up-set size, idempotent?)
    let sig = |l: &ResiduatedLattice, x: usize| {
        let down = l.elements().filter(|&y| l.leq(y, x)).count();
        let up = l.elements().filter(|&y| l.leq(x, y)).count();
        (down, up, l.prod(x, x) == x, l.neg(x) == l.bottom())
    };
    let sa: Vec<_> = a.elements().map(|x| sig(a, x)).collect();
    let sb: Vec<_> = b.elements().map(|x| sig(b, x)).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn consistent(a: &ResiduatedLattice, b: &ResiduatedLattice, map: &[usize], x: usize) -> bool {
        // every fully mapped triple that involves x
        for op in Op::ALL {
            for p in 0..=x {
                for q in 0..=x {
                    let r = a.apply(op, p, q);
                    if r <= x && (p == x || q == x || r == x) && map[r] != b.apply(op, map[p], map[q]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn go(
        a: &ResiduatedLattice,
        b: &ResiduatedLattice,
        sa: &[(usize, usize, bool, bool)],
        sb: &[(usize, usize, bool, bool)],
        x: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if x == a.n() {
            return true;
        }
        for y in 0..b.n() {
            if used[y] || sa[x] != sb[y] {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if consistent(a, b, map, x) && go(a, b, sa, sb, x + 1, map, used) {
                return true;
            }
            used[y] = false;
            map[x] = usize::MAX;
        }
        false
    }

    go(a, b, &sa, &sb, 0, &mut map, &mut used).then_some(map)
}

pub fn is_isomorphic(a: &ResiduatedLattice, b: &ResiduatedLattice) -> bool {
    find_isomorphism(a, b).is_some()
}
