//! Named class predicates, selectable at runtime.
//!
//! Each predicate is a [`Property`] trait object held in a
//! [`PropertyRegistry`]; the enumerator's counterexample hunt and the CLI
//! resolve them by name.

use crate::algebra::ResiduatedLattice;
use crate::classify::{self, Verdict, Witness};
use crate::error::{AlgebraError, Result};
use crate::filters;
use crate::quotient::{dense_quotient, lifting_diagram};

/// Outcome of evaluating a property: `None` when it holds, otherwise a
/// description of the least violation.
pub type Evaluation = Option<String>;

pub trait Property: Send + Sync {
    fn name(&self) -> &str;

    fn description(&self) -> &str;

    fn evaluate(&self, l: &ResiduatedLattice) -> Result<Evaluation>;

    fn holds(&self, l: &ResiduatedLattice) -> Result<bool> {
        Ok(self.evaluate(l)?.is_none())
    }
}

/// A property backed by a plain function.
pub struct FnProperty {
    name: &'static str,
    description: &'static str,
    eval: fn(&ResiduatedLattice) -> Result<Evaluation>,
}

impl FnProperty {
    pub const fn new(
        name: &'static str,
        description: &'static str,
        eval: fn(&ResiduatedLattice) -> Result<Evaluation>,
    ) -> FnProperty {
        FnProperty { name, description, eval }
    }
}

impl Property for FnProperty {
    fn name(&self) -> &str {
        self.name
    }

    fn description(&self) -> &str {
        self.description
    }

    fn evaluate(&self, l: &ResiduatedLattice) -> Result<Evaluation> {
        (self.eval)(l)
    }
}

fn detail(w: Option<Witness>) -> Evaluation {
    w.map(|w| w.detail)
}

/// Maps the one-element algebra to a failed evaluation.
fn verdict(v: Result<Verdict>, why: impl FnOnce() -> String) -> Result<Evaluation> {
    match v {
        Ok(Verdict::True) => Ok(None),
        Ok(_) => Ok(Some(why())),
        Err(AlgebraError::Trivial) => Ok(Some("undefined on the one-element algebra".into())),
        Err(e) => Err(e),
    }
}

fn in_dense_quotient(l: &ResiduatedLattice, w: Option<Witness>) -> Evaluation {
    w.map(|w| format!("in {}: {}", l.name(), w.detail))
}

fn builtin_properties() -> Vec<Box<dyn Property>> {
    let props: Vec<FnProperty> = vec![
        FnProperty::new("mtl", "prelinearity (a→b)∨(b→a) = 1", |l| Ok(detail(classify::is_mtl(l)))),
        FnProperty::new("imtl", "MTL and involutive", |l| Ok(detail(classify::is_imtl(l)))),
        FnProperty::new("bl", "MTL with divisibility a∧b = a⊙(a→b)", |l| Ok(detail(classify::is_bl(l)))),
        FnProperty::new("mv", "involutive BL", |l| Ok(detail(classify::is_mv(l)))),
        FnProperty::new("involutive", "¬¬a = a", |l| Ok(detail(classify::is_involutive(l)))),
        FnProperty::new("glivenko", "¬¬(¬¬a→a) = 1", |l| Ok(detail(classify::glivenko_witness(l)))),
        FnProperty::new("star_equation", "(¬a→¬b)→¬b = (¬b→¬a)→¬a", |l| {
            Ok(detail(classify::star_equation_witness(l)))
        }),
        FnProperty::new("simple", "only the filters {1} and A", |l| {
            verdict(classify::is_simple(l), || "has a proper filter other than {1}".into())
        }),
        FnProperty::new("local", "exactly one maximal filter", |l| {
            verdict(classify::is_local(l), || "more than one maximal filter".into())
        }),
        FnProperty::new("semilocal", "finitely many maximal filters", |l| {
            verdict(classify::is_semilocal(l).map(|(v, _)| v), String::new)
        }),
        FnProperty::new("quasi_local", "every a has central u with aⁿ⊙u = 0 = (¬a)ⁿ⊙¬u", |l| {
            Ok(detail(classify::is_quasi_local(l)))
        }),
        FnProperty::new("dense_quotient_quasi_local", "A/Ds(A) is quasi-local", |l| {
            let p = dense_quotient(l)?;
            Ok(in_dense_quotient(&p.algebra, classify::is_quasi_local(&p.algebra)))
        }),
        FnProperty::new("dense_quotient_involutive", "A/Ds(A) is involutive", |l| {
            let p = dense_quotient(l)?;
            Ok(in_dense_quotient(&p.algebra, classify::is_involutive(&p.algebra)))
        }),
        FnProperty::new("dense_quotient_mv", "A/Ds(A) is an MV-algebra", |l| {
            let p = dense_quotient(l)?;
            Ok(in_dense_quotient(&p.algebra, classify::is_mv(&p.algebra)))
        }),
        FnProperty::new("lifting_boolean_center", "B(A) → B(A/Rad(A)) is surjective", |l| {
            let d = lifting_diagram(l)?;
            Ok((!d.has_lifting())
                .then(|| format!("|B(A)| = {}, |B(A/Rad(A))| = {}", d.b_r.source.n(), d.b_r.target.n())))
        }),
        FnProperty::new("dense_quotient_lifting", "A/Ds(A) has lifting Boolean center", |l| {
            let p = dense_quotient(l)?;
            let d = lifting_diagram(&p.algebra)?;
            Ok((!d.has_lifting())
                .then(|| format!("|B(A/Ds)| = {}, |B(A/Ds/Rad)| = {}", d.b_r.source.n(), d.b_r.target.n())))
        }),
        FnProperty::new("phi_center_surjective", "B(A/Ds(A)) → B(A/Rad(A)) is surjective", |l| {
            let d = lifting_diagram(l)?;
            Ok((!d.b_phi.surjective)
                .then(|| format!("|B(A/Ds)| = {}, |B(A/Rad)| = {}", d.b_phi.source.n(), d.b_phi.target.n())))
        }),
        FnProperty::new("chain", "the order is linear", |l| {
            Ok((!l.is_chain()).then(|| "two incomparable elements".into()))
        }),
        FnProperty::new("boolean", "B(A) = A", |l| {
            let c = l.boolean_center();
            Ok((c != l.full()).then(|| format!("B(A) = {}", l.fmt_set(c))))
        }),
        FnProperty::new("dense_is_radical", "Ds(A) = Rad(A)", |l| {
            let rad = filters::radical(l)?.members;
            Ok((rad != l.dense_set()).then(|| format!("Ds = {}, Rad = {}", l.fmt_set(l.dense_set()), l.fmt_set(rad))))
        }),
    ];
    props.into_iter().map(|p| Box::new(p) as Box<dyn Property>).collect()
}

pub struct PropertyRegistry {
    entries: Vec<Box<dyn Property>>,
}

impl Default for PropertyRegistry {
    fn default() -> Self {
        PropertyRegistry { entries: builtin_properties() }
    }
}

impl PropertyRegistry {
    pub fn empty() -> Self {
        PropertyRegistry { entries: Vec::new() }
    }

    /// Adds a property, replacing any existing one with the same name.
    pub fn register(&mut self, p: Box<dyn Property>) {
        self.entries.retain(|e| e.name() != p.name());
        self.entries.push(p);
    }

    pub fn get(&self, name: &str) -> Result<&dyn Property> {
        self.entries
            .iter()
            .find(|p| p.name() == name)
            .map(|p| p.as_ref())
            .ok_or_else(|| AlgebraError::UnknownProperty(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|p| p.name())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Property> {
        self.entries.iter().map(|p| p.as_ref())
    }
}

/// `a,b=>c`: antecedent names, then the consequent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HuntSpec {
    pub antecedents: Vec<String>,
    pub consequent: String,
}

impl std::str::FromStr for HuntSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (lhs, rhs) = s.split_once("=>").ok_or_else(|| format!("expected `a,b=>c`, got `{s}`"))?;
        let antecedents: Vec<String> =
            lhs.split(',').map(str::trim).filter(|x| !x.is_empty()).map(String::from).collect();
        let consequent = rhs.trim().to_string();
        if consequent.is_empty() || consequent.contains(',') {
            return Err(format!("expected a single consequent in `{s}`"));
        }
        Ok(HuntSpec { antecedents, consequent })
    }
}
