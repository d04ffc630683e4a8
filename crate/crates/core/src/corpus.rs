//! Built-in example algebras and their file and DOT renderings.
//!
//! Files are JSON documents mirroring [`AlgebraSpec`]; field order is fixed
//! so a load followed by a save reproduces the input up to whitespace.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{validate, ResiduatedLattice};
use crate::error::AlgebraError;
use crate::lattice::{join_meet_tables, order_from_covers};
use crate::spec::AlgebraSpec;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("unknown corpus key `{0}`")]
    UnknownKey(String),

    #[error("parse error{}: {detail}", location(*.line, *.column, .field.as_deref(), *.row))]
    Parse { line: Option<usize>, column: Option<usize>, field: Option<String>, row: Option<usize>, detail: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Invalid(#[from] AlgebraError),
}

fn location(line: Option<usize>, column: Option<usize>, field: Option<&str>, row: Option<usize>) -> String {
    let mut s = String::new();
    if let Some(l) = line {
        let _ = write!(s, " at line {l}");
        if let Some(c) = column {
            let _ = write!(s, ", column {c}");
        }
    }
    if let Some(f) = field {
        let _ = write!(s, " in field `{f}`");
    }
    if let Some(r) = row {
        let _ = write!(s, " row {r}");
    }
    s
}

/// Where an expected value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// Printed alongside the published tables.
    Published,
    /// Worked out by hand from the tables.
    Computed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    DenseElements,
    BooleanCenter,
    Radical,
    RegularElements,
}

#[derive(Debug, Clone, Serialize)]
pub struct Expectation {
    pub quantity: Quantity,
    pub value: &'static [&'static str],
    pub source: Source,
}

/// A published statement about a corpus algebra that the tables do not bear
/// out. Recorded verbatim so reports can show both sides.
#[derive(Debug, Clone, Serialize)]
pub struct Discrepancy {
    /// Id of the claim check that exposes it.
    pub claim: &'static str,
    pub published: &'static str,
    pub note: &'static str,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub key: &'static str,
    pub spec: AlgebraSpec,
    pub provenance: &'static str,
    pub expected: Vec<Expectation>,
    pub discrepancies: Vec<Discrepancy>,
}

pub const KEYS: [&str; 9] =
    ["BOOL2", "BOOL4", "CHAIN3_LUK", "CHAIN3_GODEL", "CHAIN4_LUK", "HEYT5", "RL6D", "RL6C", "RL7Q"];

/// Tables built from a covering relation plus row-major ⊙ and → tables
/// written as whitespace-separated element names.
fn from_published(key: &str, names: &[&str], covers: &[(&str, &str)], prod: &str, imp: Option<&str>) -> AlgebraSpec {
    let n = names.len();
    let idx = |s: &str| names.iter().position(|x| *x == s).unwrap();
    let covers: Vec<(usize, usize)> = covers.iter().map(|(a, b)| (idx(a), idx(b))).collect();
    let leq = order_from_covers(n, &covers);
    let (join, meet) = join_meet_tables(n, &leq).expect("corpus order is a lattice");
    let named = |t: &[usize]| -> Vec<Vec<String>> {
        t.chunks(n).map(|r| r.iter().map(|&i| names[i].to_string()).collect()).collect()
    };
    let parse = |s: &str| -> Vec<Vec<String>> {
        let rows: Vec<Vec<String>> = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| l.split_whitespace().map(String::from).collect())
            .collect();
        assert_eq!(rows.len(), n);
        rows
    };
    AlgebraSpec {
        name: key.to_string(),
        elements: names.iter().map(|s| s.to_string()).collect(),
        join: named(&join),
        meet: named(&meet),
        prod: parse(prod),
        imp: imp.map(parse),
        bottom: names[0].to_string(),
        top: names[n - 1].to_string(),
    }
}

/// Finite Łukasiewicz chain `0 < 1/(k-1) < .. < 1` with truncated addition.
fn lukasiewicz_chain(key: &str, k: usize) -> AlgebraSpec {
    let names: Vec<String> = (0..k)
        .map(|i| match i {
            0 => "0".to_string(),
            i if i == k - 1 => "1".to_string(),
            i => format!("{i}/{}", k - 1),
        })
        .collect();
    let top = k - 1;
    AlgebraSpec::from_fns(
        key,
        names,
        0,
        top,
        |a, b| a.max(b),
        |a, b| a.min(b),
        |a, b| (a + b).saturating_sub(top),
        None,
    )
}

pub fn builtin(key: &str) -> Result<CorpusEntry, CorpusError> {
    use Quantity::*;
    use Source::*;
    let entry = match key {
        "BOOL2" => CorpusEntry {
            key: "BOOL2",
            spec: AlgebraSpec::from_fns(
                "BOOL2",
                vec!["0".into(), "1".into()],
                0,
                1,
                |a, b| a.max(b),
                |a, b| a.min(b),
                |a, b| a.min(b),
                None,
            ),
            provenance: "two-element Boolean algebra",
            expected: vec![Expectation { quantity: BooleanCenter, value: &["0", "1"], source: Computed }],
            discrepancies: vec![],
        },
        "BOOL4" => CorpusEntry {
            key: "BOOL4",
            spec: from_published(
                "BOOL4",
                &["0", "p", "q", "1"],
                &[("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")],
                "0 0 0 0
                 0 p 0 p
                 0 0 q q
                 0 p q 1",
                None,
            ),
            provenance: "four-element Boolean algebra (square of BOOL2)",
            expected: vec![Expectation { quantity: BooleanCenter, value: &["0", "p", "q", "1"], source: Computed }],
            discrepancies: vec![],
        },
        "CHAIN3_LUK" => CorpusEntry {
            key: "CHAIN3_LUK",
            spec: lukasiewicz_chain("CHAIN3_LUK", 3),
            provenance: "three-element Łukasiewicz chain (an MV-algebra)",
            expected: vec![Expectation { quantity: DenseElements, value: &["1"], source: Computed }],
            discrepancies: vec![],
        },
        "CHAIN3_GODEL" => CorpusEntry {
            key: "CHAIN3_GODEL",
            spec: AlgebraSpec::from_fns(
                "CHAIN3_GODEL",
                vec!["0".into(), "h".into(), "1".into()],
                0,
                2,
                |a, b| a.max(b),
                |a, b| a.min(b),
                |a, b| a.min(b),
                None,
            ),
            provenance: "three-element Gödel chain (a BL-algebra that is not MV)",
            expected: vec![Expectation { quantity: DenseElements, value: &["h", "1"], source: Computed }],
            discrepancies: vec![],
        },
        "CHAIN4_LUK" => CorpusEntry {
            key: "CHAIN4_LUK",
            spec: lukasiewicz_chain("CHAIN4_LUK", 4),
            provenance: "four-element Łukasiewicz chain (an MV-algebra)",
            expected: vec![Expectation { quantity: Radical, value: &["1"], source: Computed }],
            discrepancies: vec![],
        },
        "HEYT5" => CorpusEntry {
            key: "HEYT5",
            spec: from_published(
                "HEYT5",
                &["0", "a", "b", "c", "1"],
                &[("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"), ("c", "1")],
                "0 0 0 0 0
                 0 a 0 a a
                 0 0 b b b
                 0 a b c c
                 0 a b c 1",
                None,
            ),
            provenance: "five-element Heyting algebra: a four-element Boolean algebra with a new top; \
                         least enumerated Glivenko algebra satisfying the ★-equation without lifting",
            expected: vec![
                Expectation { quantity: DenseElements, value: &["c", "1"], source: Computed },
                Expectation { quantity: BooleanCenter, value: &["0", "1"], source: Computed },
                Expectation { quantity: RegularElements, value: &["0", "a", "b", "1"], source: Computed },
                Expectation { quantity: Radical, value: &["c", "1"], source: Computed },
            ],
            discrepancies: lifting_discrepancies(
                "A/Ds(A) is Boolean, hence quasi-local; A is not quasi-local (take a)",
            ),
        },
        "RL6D" => CorpusEntry {
            key: "RL6D",
            spec: from_published(
                "RL6D",
                &["0", "a", "b", "c", "d", "1"],
                &[("0", "a"), ("a", "b"), ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")],
                "0 0 0 0 0 0
                 0 0 0 a 0 a
                 0 0 b b b b
                 0 a b c b c
                 0 0 b b d d
                 0 a b c d 1",
                Some(
                    "1 1 1 1 1 1
                     d 1 1 1 1 1
                     a a 1 1 1 1
                     0 a d 1 d 1
                     a a c c 1 1
                     0 a b c d 1",
                ),
            ),
            provenance: "published tables: six elements, 0 < a < b < c, d < 1",
            expected: vec![
                Expectation { quantity: DenseElements, value: &["c", "1"], source: Published },
                Expectation { quantity: BooleanCenter, value: &["0", "1"], source: Computed },
                Expectation { quantity: Radical, value: &["b", "c", "d", "1"], source: Computed },
            ],
            discrepancies: vec![Discrepancy {
                claim: "dense-quotient-may-differ",
                published: "with F = {d,1}: b/F ∈ Ds(A/F) but b/F ∉ Ds(A)/F, since b/F ≠ c/F",
                note: "b↔c = (b→c)∧(c→b) = 1∧d = d ∈ F, so b/F = c/F and the two sets coincide for this F",
            }],
        },
        "RL6C" => CorpusEntry {
            key: "RL6C",
            spec: from_published(
                "RL6C",
                &["0", "a", "b", "c", "d", "1"],
                &[("0", "a"), ("a", "b"), ("b", "c"), ("c", "d"), ("d", "1")],
                "0 0 0 0 0 0
                 0 0 0 0 0 a
                 0 0 0 0 b b
                 0 0 0 b c c
                 0 0 b c d d
                 0 a b c d 1",
                Some(
                    "1 1 1 1 1 1
                     d 1 1 1 1 1
                     c c 1 1 1 1
                     b b c 1 1 1
                     a a b c 1 1
                     0 a b c d 1",
                ),
            ),
            provenance: "published tables: six-element IMTL chain that is not BL",
            expected: vec![
                Expectation { quantity: DenseElements, value: &["1"], source: Published },
                Expectation { quantity: RegularElements, value: &["0", "a", "b", "c", "d", "1"], source: Computed },
            ],
            discrepancies: vec![],
        },
        "RL7Q" => CorpusEntry {
            key: "RL7Q",
            spec: from_published(
                "RL7Q",
                &["0", "a", "b", "c", "d", "e", "1"],
                &[("0", "a"), ("0", "c"), ("a", "b"), ("c", "d"), ("b", "e"), ("d", "e"), ("e", "1")],
                "0 0 0 0 0 0 0
                 0 a a 0 0 a a
                 0 a a 0 0 a b
                 0 0 0 c c c c
                 0 0 0 c c c d
                 0 a a c c e e
                 0 a b c d e 1",
                Some(
                    "1 1 1 1 1 1 1
                     d 1 1 d d 1 1
                     d e 1 d d 1 1
                     b b b 1 1 1 1
                     b b b e 1 1 1
                     0 b b d d 1 1
                     0 a b c d e 1",
                ),
            ),
            provenance: "published tables: seven elements, quasi-local only modulo Ds",
            expected: vec![
                Expectation { quantity: DenseElements, value: &["e", "1"], source: Published },
                Expectation { quantity: BooleanCenter, value: &["0", "1"], source: Published },
                Expectation { quantity: RegularElements, value: &["0", "b", "d", "1"], source: Computed },
                Expectation { quantity: Radical, value: &["e", "1"], source: Computed },
            ],
            discrepancies: lifting_discrepancies(
                "Reg(A) = {0,b,d,1} is Boolean under ★, so the equation holds; A is Glivenko and \
                 A/Ds(A) is quasi-local, yet A is not quasi-local (take a)",
            ),
        },
        other => return Err(CorpusError::UnknownKey(other.to_string())),
    };
    Ok(entry)
}

/// Shared by the Glivenko algebras whose center is smaller than that of Reg(A).
fn lifting_discrepancies(quasi_local_note: &'static str) -> Vec<Discrepancy> {
    const CENTERS: &str = "B(A) = {0,1} while A/Ds(A) and A/Rad(A) have four-element centers; \
                           B(Reg(A)) ⊄ B(A) because ∨* differs from ∨ outside MTL";
    vec![
        Discrepancy {
            claim: "glivenko-lifting-iff-phi-center-surjective",
            published: "a Glivenko residuated lattice has lifting Boolean center iff B(φ_A) is surjective",
            note: CENTERS,
        },
        Discrepancy {
            claim: "glivenko-dense-quotient-lifting-lifts",
            published: "a Glivenko residuated lattice has lifting Boolean center whenever A/Ds(A) has",
            note: CENTERS,
        },
        Discrepancy {
            claim: "glivenko-star-equation-lifting",
            published: "a Glivenko residuated lattice satisfying (¬a→¬b)→¬b = (¬b→¬a)→¬a has lifting Boolean center",
            note: CENTERS,
        },
        Discrepancy {
            claim: "glivenko-star-equation-quasi-local-lifts",
            published: "Glivenko plus (¬a→¬b)→¬b = (¬b→¬a)→¬a makes A quasi-local whenever A/Ds(A) is",
            note: quasi_local_note,
        },
    ]
}

/// Validated algebra for a corpus key.
pub fn builtin_algebra(key: &str) -> Result<ResiduatedLattice, CorpusError> {
    Ok(validate(&builtin(key)?.spec)?)
}

/// Every corpus entry, in listing order.
pub fn all_builtin() -> Vec<CorpusEntry> {
    KEYS.iter().map(|k| builtin(k).expect("known key")).collect()
}

/// Evaluates a quantity on an algebra as a list of element names.
pub fn measure(l: &ResiduatedLattice, q: Quantity) -> Result<Vec<String>, AlgebraError> {
    let set = match q {
        Quantity::DenseElements => l.dense_set(),
        Quantity::BooleanCenter => l.boolean_center(),
        Quantity::RegularElements => l.regular_elements(),
        Quantity::Radical => crate::filters::radical(l)?.members,
    };
    Ok(l.set_names(set))
}

/// Parses the algebra file format, checking names and table shapes.
pub fn parse_spec(text: &str) -> Result<AlgebraSpec, CorpusError> {
    let spec: AlgebraSpec = serde_json::from_str(text).map_err(|e| CorpusError::Parse {
        line: Some(e.line()),
        column: Some(e.column()),
        field: None,
        row: None,
        detail: e.to_string(),
    })?;
    spec.check_shape().map_err(|e| CorpusError::Parse {
        line: None,
        column: e.col,
        field: Some(e.field.clone()),
        row: e.row,
        detail: e.detail,
    })?;
    Ok(spec)
}

pub fn render_spec(spec: &AlgebraSpec) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"name\": {},", json(&spec.name));
    let _ = writeln!(out, "  \"elements\": {},", json_row(&spec.elements));
    let mut tables = vec![("join", &spec.join), ("meet", &spec.meet), ("prod", &spec.prod)];
    if let Some(imp) = &spec.imp {
        tables.push(("imp", imp));
    }
    for (field, t) in tables {
        let _ = writeln!(out, "  \"{field}\": [");
        for (i, row) in t.iter().enumerate() {
            let sep = if i + 1 < t.len() { "," } else { "" };
            let _ = writeln!(out, "    {}{sep}", json_row(row));
        }
        out.push_str("  ],\n");
    }
    let _ = writeln!(out, "  \"bottom\": {},", json(&spec.bottom));
    let _ = writeln!(out, "  \"top\": {}", json(&spec.top));
    out.push_str("}\n");
    out
}

fn json(s: &str) -> String {
    serde_json::to_string(s).expect("string serializes")
}

fn json_row(row: &[String]) -> String {
    format!("[{}]", row.iter().map(|s| json(s)).collect::<Vec<_>>().join(", "))
}

pub fn load(path: impl AsRef<Path>) -> Result<AlgebraSpec, CorpusError> {
    let path = path.as_ref();
    let text =
        std::fs::read_to_string(path).map_err(|source| CorpusError::Io { path: path.display().to_string(), source })?;
    parse_spec(&text)
}

pub fn save(path: impl AsRef<Path>, spec: &AlgebraSpec) -> Result<(), CorpusError> {
    let path = path.as_ref();
    std::fs::write(path, render_spec(spec))
        .map_err(|source| CorpusError::Io { path: path.display().to_string(), source })
}

/// DOT digraph of the covering relation, edges pointing upward.
pub fn hasse_dot(l: &ResiduatedLattice) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", json(l.name()));
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=circle];\n");
    for i in l.elements() {
        let _ = writeln!(out, "  n{i} [label={}];", json(l.elem_name(i)));
    }
    let _ = writeln!(out, "  {{ rank=source; n{}; }}", l.bottom());
    let _ = writeln!(out, "  {{ rank=sink; n{}; }}", l.top());
    for (a, b) in l.covering_pairs() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

pub fn export_hasse(l: &ResiduatedLattice, path: impl AsRef<Path>) -> Result<String, CorpusError> {
    let path = path.as_ref();
    let dot = hasse_dot(l);
    std::fs::write(path, &dot).map_err(|source| CorpusError::Io { path: path.display().to_string(), source })?;
    Ok(dot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::ElemSet;

    #[test]
    fn every_entry_validates_and_matches_expectations() {
        for entry in all_builtin() {
            let l = validate(&entry.spec).unwrap_or_else(|e| panic!("{}: {e}", entry.key));
            for exp in &entry.expected {
                let got = measure(&l, exp.quantity).unwrap();
                assert_eq!(got, exp.value, "{} {:?}", entry.key, exp.quantity);
            }
        }
    }

    #[test]
    fn unknown_key() {
        assert!(matches!(builtin("RL9Z"), Err(CorpusError::UnknownKey(_))));
    }

    #[test]
    fn hasse_shapes() {
        let rl6d = builtin_algebra("RL6D").unwrap();
        assert_eq!(rl6d.covering_pairs().len(), 6);
        let rl7q = builtin_algebra("RL7Q").unwrap();
        let dot = hasse_dot(&rl7q);
        assert_eq!(dot.matches(" -> ").count(), 7);
        assert_eq!(dot.matches("[label=").count(), 7);
        let b2 = builtin_algebra("BOOL2").unwrap();
        assert_eq!(hasse_dot(&b2).matches(" -> ").count(), 1);
    }

    #[test]
    fn rl7q_order_matches_the_figure() {
        let l = builtin_algebra("RL7Q").unwrap();
        let ix = |s| l.index_of(s).unwrap();
        assert!(l.lt(ix("a"), ix("b")) && l.lt(ix("c"), ix("d")));
        assert!(l.lt(ix("b"), ix("e")) && l.lt(ix("d"), ix("e")) && l.lt(ix("e"), l.top()));
        assert!(!l.leq(ix("a"), ix("d")) && !l.leq(ix("c"), ix("b")));
        assert_eq!(l.join(ix("a"), ix("c")), ix("e"));
    }

    #[test]
    fn render_parse_round_trip() {
        for entry in all_builtin() {
            let text = render_spec(&entry.spec);
            let back = parse_spec(&text).unwrap();
            assert_eq!(back, entry.spec);
            assert_eq!(render_spec(&back), text);
        }
    }

    #[test]
    fn truncated_row_names_the_row() {
        let mut spec = builtin("RL6D").unwrap().spec;
        spec.meet[4].truncate(3);
        let text = render_spec(&spec);
        match parse_spec(&text) {
            Err(CorpusError::Parse { field, row, .. }) => {
                assert_eq!(field.as_deref(), Some("meet"));
                assert_eq!(row, Some(4));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_spec("{ \"name\": "), Err(CorpusError::Parse { line: Some(_), .. })));
    }

    #[test]
    fn derived_residuum_matches_printed_table() {
        for key in ["RL6D", "RL6C", "RL7Q"] {
            let mut spec = builtin(key).unwrap().spec;
            let printed = spec.imp.take().unwrap();
            let l = validate(&spec).unwrap();
            assert_eq!(l.to_spec().imp.unwrap(), printed, "{key}");
        }
    }

    #[test]
    fn luk_chain_is_involutive() {
        let l = builtin_algebra("CHAIN4_LUK").unwrap();
        assert!(l.is_involutive());
        assert_eq!(l.boolean_center(), ElemSet::EMPTY.with(0).with(3));
    }
}
