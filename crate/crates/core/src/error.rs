use thiserror::Error;

/// Binary operation of the residuated-lattice signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Join,
    Meet,
    Prod,
    Imp,
}

impl Op {
    pub const ALL: [Op; 4] = [Op::Join, Op::Meet, Op::Prod, Op::Imp];

    pub fn symbol(self) -> &'static str {
        match self {
            Op::Join => "∨",
            Op::Meet => "∧",
            Op::Prod => "⊙",
            Op::Imp => "→",
        }
    }

    pub fn field(self) -> &'static str {
        match self {
            Op::Join => "join",
            Op::Meet => "meet",
            Op::Prod => "prod",
            Op::Imp => "imp",
        }
    }
}

impl std::fmt::Display for Op {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("malformed algebra: {0}")]
    NameError(String),

    #[error("carrier of {n} elements exceeds the size cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("lattice axiom `{axiom}` fails at ({}) ", .elems.join(", "))]
    LatticeAxiomViolation { axiom: &'static str, elems: Vec<String> },

    #[error("monoid axiom `{axiom}` fails at ({}) ", .elems.join(", "))]
    MonoidAxiomViolation { axiom: &'static str, elems: Vec<String> },

    #[error("residuation fails at ({a}, {b}, {c}): {a} ≤ {b}→{c} is {lhs} but {a}⊙{b} ≤ {c} is {rhs}")]
    ResiduationViolation { a: String, b: String, c: String, lhs: bool, rhs: bool },

    #[error("no residual {a}→{b}: the set {{c : {a}⊙c ≤ {b}}} has no maximum")]
    NoResidual { a: String, b: String },

    #[error("{0} is not in the Boolean center")]
    NotComplemented(String),

    #[error("subset is not closed: {a} {op} {b} = {result} lies outside it")]
    NotClosed { op: Op, a: String, b: String, result: String },

    #[error("subset lacks the constant {0}")]
    MissingConstant(String),

    #[error("element index {index} out of range for a carrier of {n}")]
    BadIndex { index: usize, n: usize },

    #[error("unknown element name `{0}`")]
    UnknownElement(String),

    #[error("map is not a morphism: f({a} {op} {b}) ≠ f({a}) {op} f({b})")]
    NotAMorphism { op: Op, a: String, b: String },

    #[error("map is not a morphism: it does not preserve the constant {0}")]
    ConstantNotPreserved(&'static str),

    #[error("map is not well defined on the class of {0}")]
    NotWellDefined(String),

    #[error("B(f) leaves the Boolean center: f({0}) is not central")]
    CenterNotPreserved(String),

    #[error("filter operation needs a proper filter")]
    NotProper,

    #[error("subset is not a filter of this algebra")]
    NotAFilter,

    #[error("radical by intersection {by_intersection:?} differs from radical by element formula {by_formula:?}")]
    RadicalMismatch { by_intersection: Vec<String>, by_formula: Vec<String> },

    #[error("algebra is not Glivenko: ¬¬(¬¬{0}→{0}) ≠ 1")]
    NotGlivenko(String),

    #[error("predicate is undefined on the one-element algebra")]
    Trivial,

    #[error("exhaustive filter scan is capped at {cap} elements (carrier has {n})")]
    ExhaustiveCapExceeded { n: usize, cap: usize },

    #[error("enumeration is capped at {cap} elements for this lattice family (asked for {n}); set RESLAT_SIZE_CAP to raise it")]
    EnumerationCapExceeded { n: usize, cap: usize },

    #[error("search budget of {nodes} nodes exhausted")]
    BudgetExceeded { nodes: u64 },

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("internal consistency check `{check}` failed: {detail}")]
    Inconsistent { check: &'static str, detail: String },
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
