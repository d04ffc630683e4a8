//! Quotients modulo a filter and the canonical maps
//! `p_A : A → A/Ds(A)`, `r_A : A → A/Rad(A)`, `φ_A : A/Ds(A) → A/Rad(A)` and
//! `θ : A/Ds(A) → Reg(A)`.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{validate, ResiduatedLattice};
use crate::error::{AlgebraError, Op, Result};
use crate::filters::{self, is_filter, SpectrumSpace};
use crate::morphism::{b_functor, Morphism};
use crate::regular::{glivenko_violation, star_algebra};
use crate::set::ElemSet;
use crate::spec::AlgebraSpec;

/// `a ≡ b (mod F)` iff `a ↔ b ∈ F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    pub filter: ElemSet,
    /// Classes ordered by their least member.
    pub classes: Vec<ElemSet>,
    pub class_of: Vec<usize>,
}

impl Congruence {
    pub fn new(l: &ResiduatedLattice, filter: ElemSet) -> Result<Congruence> {
        if !is_filter(l, filter) {
            return Err(AlgebraError::NotAFilter);
        }
        let mut classes: Vec<ElemSet> = Vec::new();
        let mut class_of = vec![usize::MAX; l.n()];
        for a in l.elements() {
            if class_of[a] != usize::MAX {
                continue;
            }
            let class: ElemSet = l.elements().filter(|&b| filter.contains(l.biimp(a, b))).collect();
            for b in class {
                if class_of[b] != usize::MAX {
                    return Err(AlgebraError::Inconsistent {
                        check: "≡ (mod F) is an equivalence",
                        detail: format!("{} lies in two classes", l.elem_name(b)),
                    });
                }
                class_of[b] = classes.len();
            }
            classes.push(class);
        }
        // compatibility with every operation, checked over all representatives
        for op in Op::ALL {
            for a in l.elements() {
                for b in l.elements() {
                    let r = class_of[l.apply(op, a, b)];
                    let ra = classes[class_of[a]].first().unwrap();
                    let rb = classes[class_of[b]].first().unwrap();
                    if r != class_of[l.apply(op, ra, rb)] {
                        return Err(AlgebraError::Inconsistent {
                            check: "≡ (mod F) is a congruence",
                            detail: format!(
                                "{} {op} {} lands outside the class of {} {op} {}",
                                l.elem_name(a),
                                l.elem_name(b),
                                l.elem_name(ra),
                                l.elem_name(rb)
                            ),
                        });
                    }
                }
            }
        }
        Ok(Congruence { filter, classes, class_of })
    }

    pub fn representative(&self, class: usize) -> usize {
        self.classes[class].first().expect("classes are nonempty")
    }
}

/// `A/F` with its congruence and the canonical surjection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: Arc<ResiduatedLattice>,
    pub congruence: Congruence,
    pub projection: Morphism,
}

impl Quotient {
    /// `{x/F : x ∈ S}` as a subset of the quotient.
    pub fn image(&self, s: ElemSet) -> ElemSet {
        self.projection.image(s)
    }

    /// `{x ∈ A : x/F ∈ T}`.
    pub fn preimage(&self, t: ElemSet) -> ElemSet {
        self.projection.preimage(t)
    }
}

/// `A/F`, element names suffixed with `/F`.
pub fn quotient(l: &ResiduatedLattice, f: ElemSet) -> Result<Quotient> {
    quotient_labeled(l, f, "F")
}

/// `A/F` with class names `rep/label`, representatives being least indices.
pub fn quotient_labeled(l: &ResiduatedLattice, f: ElemSet, label: &str) -> Result<Quotient> {
    quotient_of(Arc::new(l.clone()), f, label)
}

fn quotient_of(source: Arc<ResiduatedLattice>, f: ElemSet, label: &str) -> Result<Quotient> {
    let l = source.as_ref();
    let cong = Congruence::new(l, f)?;
    let k = cong.classes.len();
    let names: Vec<String> = (0..k).map(|c| format!("{}/{label}", l.elem_name(cong.representative(c)))).collect();
    let table = |op: Op| -> Vec<Vec<String>> {
        (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let r = l.apply(op, cong.representative(i), cong.representative(j));
                        names[cong.class_of[r]].clone()
                    })
                    .collect()
            })
            .collect()
    };
    let spec = AlgebraSpec {
        name: format!("{}/{label}", l.name()),
        join: table(Op::Join),
        meet: table(Op::Meet),
        prod: table(Op::Prod),
        imp: Some(table(Op::Imp)),
        bottom: names[cong.class_of[l.bottom()]].clone(),
        top: names[cong.class_of[l.top()]].clone(),
        elements: names,
    };
    let algebra = Arc::new(validate(&spec)?);
    let projection = Morphism::new(source.clone(), algebra.clone(), cong.class_of.clone())?;
    Ok(Quotient { algebra, congruence: cong, projection })
}

/// `p_A : A → A/Ds(A)`.
pub fn dense_quotient(l: &ResiduatedLattice) -> Result<Quotient> {
    quotient_labeled(l, l.dense_set(), "Ds")
}

/// `r_A : A → A/Rad(A)`.
pub fn radical_quotient(l: &ResiduatedLattice) -> Result<Quotient> {
    let rad = filters::radical(l)?;
    quotient_labeled(l, rad.members, "Rad")
}

/// Comparison of `Ds(A/F)` with `{x/F : x ∈ Ds(A)}`.
#[derive(Debug, Clone, Serialize)]
pub struct DenseQuotientComparison {
    pub filter: Vec<String>,
    pub classes: Vec<Vec<String>>,
    pub dense_of_quotient: Vec<String>,
    pub image_of_dense: Vec<String>,
    pub equal: bool,
    /// Classes dense in `A/F` that are not images of dense elements.
    pub only_in_dense_of_quotient: Vec<String>,
    pub only_in_image: Vec<String>,
    pub filter_within_dense: bool,
}

pub fn dense_quotient_comparison(l: &ResiduatedLattice, f: ElemSet) -> Result<DenseQuotientComparison> {
    let q = quotient(l, f)?;
    let qa = &q.algebra;
    let ds_q = qa.dense_set();
    let img = q.image(l.dense_set());
    let filter_within_dense = f.is_subset(l.dense_set());
    let cmp = DenseQuotientComparison {
        filter: l.set_names(f),
        classes: q.congruence.classes.iter().map(|&c| l.set_names(c)).collect(),
        dense_of_quotient: qa.set_names(ds_q),
        image_of_dense: qa.set_names(img),
        equal: ds_q == img,
        only_in_dense_of_quotient: qa.set_names(ds_q.difference(img)),
        only_in_image: qa.set_names(img.difference(ds_q)),
        filter_within_dense,
    };
    if filter_within_dense && !cmp.equal {
        return Err(AlgebraError::Inconsistent {
            check: "F ⊆ Ds(A) ⇒ Ds(A/F) = Ds(A)/F",
            detail: format!("F = {}", l.fmt_set(f)),
        });
    }
    Ok(cmp)
}

/// The triangle `A → A/Ds(A) → A/Rad(A)` and its image under `B`.
#[derive(Debug, Clone)]
pub struct LiftingDiagram {
    pub p: Quotient,
    pub r: Quotient,
    pub phi: Morphism,
    pub b_p: Morphism,
    pub b_r: Morphism,
    pub b_phi: Morphism,
}

impl LiftingDiagram {
    /// Lifting Boolean center: `B(r_A)` is surjective.
    pub fn has_lifting(&self) -> bool {
        self.b_r.surjective
    }

    /// `φ_A ∘ p_A = r_A`, pointwise.
    pub fn commutes(&self) -> bool {
        self.p
            .projection
            .source
            .elements()
            .all(|a| self.phi.apply(self.p.projection.apply(a)) == self.r.projection.apply(a))
    }
}

pub fn lifting_diagram(l: &ResiduatedLattice) -> Result<LiftingDiagram> {
    let p = dense_quotient(l)?;
    let r = radical_quotient(l)?;
    let phi = comparison_map(&p, &r)?;
    let b_p = b_functor(&p.projection)?;
    let b_r = b_functor(&r.projection)?;
    let b_phi = b_functor(&phi)?;
    Ok(LiftingDiagram { p, r, phi, b_p, b_r, b_phi })
}

pub fn has_lifting_boolean_center(l: &ResiduatedLattice) -> Result<bool> {
    Ok(lifting_diagram(l)?.has_lifting())
}

/// `a/F ↦ a/G` for filters `F ⊆ G`, checked to be well defined.
fn comparison_map(from: &Quotient, to: &Quotient) -> Result<Morphism> {
    let src = &from.projection.source;
    let mut map = vec![usize::MAX; from.algebra.n()];
    for a in src.elements() {
        let c = from.projection.apply(a);
        let t = to.projection.apply(a);
        if map[c] == usize::MAX {
            map[c] = t;
        } else if map[c] != t {
            return Err(AlgebraError::NotWellDefined(from.algebra.elem_name(c).to_string()));
        }
    }
    Morphism::new(from.algebra.clone(), to.algebra.clone(), map)
}

/// `φ_A : A/Ds(A) → A/Rad(A)`, `a/Ds ↦ a/Rad`.
pub fn phi_map(l: &ResiduatedLattice) -> Result<Morphism> {
    let p = dense_quotient(l)?;
    let r = radical_quotient(l)?;
    comparison_map(&p, &r)
}

/// `θ : A/Ds(A) → Reg(A)`, `a/Ds ↦ ¬¬a`, together with `p_A` so the
/// triangle `θ ∘ p_A = ¬¬` can be inspected.
#[derive(Debug, Clone)]
pub struct ThetaIso {
    pub p: Quotient,
    pub theta: Morphism,
    pub double_negation: Morphism,
}

impl ThetaIso {
    pub fn commutes(&self) -> bool {
        self.p
            .projection
            .source
            .elements()
            .all(|a| self.theta.apply(self.p.projection.apply(a)) == self.double_negation.apply(a))
    }
}

pub fn theta_iso(l: &ResiduatedLattice) -> Result<ThetaIso> {
    if let Some(a) = glivenko_violation(l) {
        return Err(AlgebraError::NotGlivenko(l.elem_name(a).to_string()));
    }
    let star = star_algebra(l);
    let (reg, nn) = match (&star.algebra, &star.double_negation) {
        (Some(reg), Some(nn)) => (reg.clone(), nn.clone()),
        _ => {
            return Err(AlgebraError::Inconsistent {
                check: "Glivenko ⇒ Reg(A) is a residuated lattice",
                detail: star.invalid_reason.unwrap_or_else(|| "¬¬ is not a morphism".into()),
            })
        }
    };
    let p = dense_quotient(l)?;
    let mut map = vec![usize::MAX; p.algebra.n()];
    for a in l.elements() {
        let c = p.projection.apply(a);
        let t = nn.apply(a);
        if map[c] == usize::MAX {
            map[c] = t;
        } else if map[c] != t {
            return Err(AlgebraError::NotWellDefined(p.algebra.elem_name(c).to_string()));
        }
    }
    let theta = Morphism::new(p.algebra.clone(), reg, map)?;
    Ok(ThetaIso { p, theta, double_negation: nn })
}

/// Outcome of comparing `Max(A)` with `Max(A/Ds(A))`.
#[derive(Debug, Clone, Serialize)]
pub struct MaxCorrespondence {
    /// `a/Ds ∈ M/Ds ⇔ a ∈ M` for every maximal `M` and every `a`.
    pub membership_transfer: bool,
    /// `Max(A/Ds) = {N/Ds : N ∈ Max(A)}`.
    pub max_correspondence: bool,
    /// `a/Ds ∈ Rad(A)/Ds ⇔ a ∈ Rad(A)`.
    pub radical_membership_transfer: bool,
    /// `Rad(A/Ds) = Rad(A)/Ds`.
    pub radical_transfer: bool,
    /// `h(N) = N/Ds` is a bijection with `h(S_Max(b)) = S_Max(b/Ds)` for
    /// every `b`, and carries the open family onto the open family.
    pub homeomorphism: bool,
    /// `|Max(A)| = |Max(A/Rad(A))|`.
    pub radical_quotient_count: bool,
    pub max_count: usize,
    pub dense_quotient_max_count: usize,
    pub radical_quotient_max_count: usize,
}

impl MaxCorrespondence {
    pub fn all_hold(&self) -> bool {
        self.membership_transfer
            && self.max_correspondence
            && self.radical_membership_transfer
            && self.radical_transfer
            && self.homeomorphism
            && self.radical_quotient_count
    }
}

pub fn max_spectrum_correspondence(l: &ResiduatedLattice) -> Result<MaxCorrespondence> {
    let p = dense_quotient(l)?;
    let qa = &p.algebra;
    let max_a = filters::max_spectrum(l)?;
    let max_q = filters::max_spectrum(qa)?;
    let rad = filters::radical(l)?.members;
    let rad_q = filters::radical(qa)?.members;

    let membership_transfer = max_a.points.iter().all(|m| {
        let img = p.image(m.members);
        l.elements().all(|a| img.contains(p.projection.apply(a)) == m.contains(a))
    });
    let images: Vec<ElemSet> = max_a.points.iter().map(|m| p.image(m.members)).collect();
    let mut sorted_images = images.clone();
    sorted_images.sort_by_key(|s| (s.len(), s.bits()));
    let q_points: Vec<ElemSet> = max_q.points.iter().map(|m| m.members).collect();
    let max_correspondence = sorted_images == q_points;
    let rad_img = p.image(rad);
    let radical_membership_transfer = l.elements().all(|a| rad_img.contains(p.projection.apply(a)) == rad.contains(a));
    let radical_transfer = rad_q == rad_img;

    let h: Vec<Option<usize>> = images.iter().map(|&s| max_q.index_of(s)).collect();
    let homeomorphism = h.iter().all(Option::is_some) && {
        let h: Vec<usize> = h.into_iter().map(Option::unwrap).collect();
        let bijective = h.iter().copied().collect::<ElemSet>().len() == max_q.len() && h.len() == max_q.len();
        let push = |s: ElemSet| -> ElemSet { s.iter().map(|i| h[i]).collect() };
        let basis_ok = l.elements().all(|b| push(max_a.basis[b]) == max_q.basis[p.projection.apply(b)]);
        let mut pushed: Vec<ElemSet> = max_a.opens.iter().map(|&o| push(o)).collect();
        pushed.sort_by_key(|s| (s.len(), s.bits()));
        bijective && basis_ok && pushed == max_q.opens
    };

    let r = radical_quotient(l)?;
    let max_r = filters::maximal_filters(&r.algebra)?;
    Ok(MaxCorrespondence {
        membership_transfer,
        max_correspondence,
        radical_membership_transfer,
        radical_transfer,
        homeomorphism,
        radical_quotient_count: max_a.len() == max_r.len(),
        max_count: max_a.len(),
        dense_quotient_max_count: max_q.len(),
        radical_quotient_max_count: max_r.len(),
    })
}

/// Checks of `a ∈ Rad(A) ⇔ ¬¬a ∈ Rad(A)` and `Rad(Reg(A)) = Rad(A) ∩ Reg(A)`.
#[derive(Debug, Clone, Serialize)]
pub struct RadicalDoubleNegation {
    pub radical: Vec<String>,
    pub radical_of_reg: Vec<String>,
    pub radical_meet_reg: Vec<String>,
    pub double_negation_invariant: bool,
    pub reg_radical_is_intersection: bool,
}

impl RadicalDoubleNegation {
    pub fn all_hold(&self) -> bool {
        self.double_negation_invariant && self.reg_radical_is_intersection
    }
}

pub fn radical_double_negation(l: &ResiduatedLattice) -> Result<RadicalDoubleNegation> {
    if let Some(a) = glivenko_violation(l) {
        return Err(AlgebraError::NotGlivenko(l.elem_name(a).to_string()));
    }
    let rad = filters::radical(l)?.members;
    let star = star_algebra(l);
    let reg_alg = star.algebra.clone().ok_or_else(|| AlgebraError::Inconsistent {
        check: "Glivenko ⇒ Reg(A) is a residuated lattice",
        detail: star.invalid_reason.clone().unwrap_or_default(),
    })?;
    let rad_reg: ElemSet = filters::radical(&reg_alg)?.members.iter().map(|i| star.members[i]).collect();
    let meet = rad.intersection(star.carrier);
    Ok(RadicalDoubleNegation {
        radical: l.set_names(rad),
        radical_of_reg: l.set_names(rad_reg),
        radical_meet_reg: l.set_names(meet),
        double_negation_invariant: l.elements().all(|a| rad.contains(a) == rad.contains(l.neg(l.neg(a)))),
        reg_radical_is_intersection: rad_reg == meet,
    })
}

/// Maps an open family through a point map, for comparing spaces.
pub fn spaces_homeomorphic_via(a: &SpectrumSpace, b: &SpectrumSpace, h: &[usize]) -> bool {
    if h.len() != a.len() || a.len() != b.len() || h.iter().copied().collect::<ElemSet>().len() != b.len() {
        return false;
    }
    let mut pushed: Vec<ElemSet> = a.opens.iter().map(|o| o.iter().map(|i| h[i]).collect()).collect();
    pushed.sort_by_key(|s: &ElemSet| (s.len(), s.bits()));
    pushed == b.opens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::builtin_algebra;
    use crate::morphism::is_isomorphic;

    #[test]
    fn rl6d_mod_d1_is_a_three_chain() {
        let l = builtin_algebra("RL6D").unwrap();
        let f = l.subset_of_names(&["d", "1"]).unwrap();
        let q = quotient(&l, f).unwrap();
        let classes: Vec<Vec<String>> = q.congruence.classes.iter().map(|&c| l.set_names(c)).collect();
        assert_eq!(classes, [vec!["0", "a"], vec!["b", "c"], vec!["d", "1"]]);
        assert_eq!(q.algebra.n(), 3);
        assert!(q.algebra.is_chain());
        assert_eq!(q.algebra.names(), ["0/F", "b/F", "d/F"]);
    }

    #[test]
    fn trivial_filter_gives_an_isomorphic_copy() {
        for key in crate::corpus::KEYS {
            let l = builtin_algebra(key).unwrap();
            let q = quotient(&l, ElemSet::singleton(l.top())).unwrap();
            assert!(q.projection.is_isomorphism(), "{key}");
            assert!(is_isomorphic(&l, &q.algebra));
        }
    }

    #[test]
    fn rl7q_dense_quotient_is_the_diamond() {
        let q = builtin_algebra("RL7Q").unwrap();
        let p = dense_quotient(&q).unwrap();
        let classes: Vec<Vec<String>> = p.congruence.classes.iter().map(|&c| q.set_names(c)).collect();
        assert_eq!(classes, [vec!["0"], vec!["a", "b"], vec!["c", "d"], vec!["e", "1"]]);
        assert_eq!(p.algebra.covering_pairs().len(), 4);
        assert!(!p.algebra.is_chain());
        assert_eq!(p.algebra.boolean_center(), p.algebra.full());
    }

    #[test]
    fn not_a_filter() {
        let l = builtin_algebra("RL6D").unwrap();
        let s = l.subset_of_names(&["b", "1"]).unwrap();
        assert!(matches!(quotient(&l, s), Err(AlgebraError::NotAFilter)));
    }

    #[test]
    fn dense_comparisons_on_rl6d() {
        let l = builtin_algebra("RL6D").unwrap();
        let cmp = dense_quotient_comparison(&l, l.dense_set()).unwrap();
        assert!(cmp.filter_within_dense && cmp.equal);
        let f = l.subset_of_names(&["d", "1"]).unwrap();
        let cmp = dense_quotient_comparison(&l, f).unwrap();
        assert!(!cmp.filter_within_dense);
        // b↔c = d ∈ F collapses b and c, so the published witness b/F is c/F
        assert!(cmp.equal, "{cmp:?}");
    }

    #[test]
    fn lifting_on_rl7q() {
        let q = builtin_algebra("RL7Q").unwrap();
        let d = lifting_diagram(&q).unwrap();
        assert!(!d.has_lifting());
        assert_eq!(d.b_r.source.n(), 2);
        assert_eq!(d.b_r.target.n(), 4);
        assert!(d.b_p.injective && d.b_r.injective && !d.b_p.surjective);
        assert!(d.phi.is_isomorphism());
        assert!(d.commutes());
    }

    #[test]
    fn mv_and_bl_corpus_members_lift() {
        for key in ["BOOL2", "BOOL4", "CHAIN3_LUK", "CHAIN4_LUK", "CHAIN3_GODEL"] {
            assert!(has_lifting_boolean_center(&builtin_algebra(key).unwrap()).unwrap(), "{key}");
        }
    }

    #[test]
    fn theta_on_rl7q() {
        let q = builtin_algebra("RL7Q").unwrap();
        let t = theta_iso(&q).unwrap();
        assert!(t.theta.is_isomorphism());
        assert!(t.commutes());
        let names: Vec<&str> = t.theta.target.names().iter().map(String::as_str).collect();
        assert_eq!(names, ["0", "b", "d", "1"]);
    }

    #[test]
    fn theta_is_identity_for_involutive() {
        let c6 = builtin_algebra("RL6C").unwrap();
        let t = theta_iso(&c6).unwrap();
        assert_eq!(t.p.algebra.n(), 6);
        assert_eq!(t.theta.map, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn max_correspondence_on_corpus() {
        let l = builtin_algebra("RL6D").unwrap();
        let c = max_spectrum_correspondence(&l).unwrap();
        assert!(c.all_hold());
        assert_eq!(c.dense_quotient_max_count, 1);
        let q = builtin_algebra("RL7Q").unwrap();
        let c = max_spectrum_correspondence(&q).unwrap();
        assert!(c.all_hold());
        assert_eq!((c.max_count, c.dense_quotient_max_count), (2, 2));
    }

    #[test]
    fn radical_double_negation_on_rl7q() {
        let q = builtin_algebra("RL7Q").unwrap();
        let r = radical_double_negation(&q).unwrap();
        assert!(r.all_hold(), "{r:?}");
        assert_eq!(r.radical, ["e", "1"]);
        assert_eq!(r.radical_of_reg, ["1"]);
    }
}
