//! Raw operation tables as they arrive from a file or the built-in corpus.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Named operation tables of a candidate residuated lattice.
///
/// Tables are row-major: `join[i][j]` is the name of `elements[i] ∨ elements[j]`.
/// The residuum table may be omitted, in which case validation derives it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub name: String,
    pub elements: Vec<String>,
    pub join: Vec<Vec<String>>,
    pub meet: Vec<Vec<String>>,
    pub prod: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub imp: Option<Vec<Vec<String>>>,
    pub bottom: String,
    pub top: String,
}

/// Where a spec is malformed. Row and column are set for table cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeError {
    pub field: String,
    pub row: Option<usize>,
    pub col: Option<usize>,
    pub detail: String,
}

impl fmt::Display for ShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "field `{}`", self.field)?;
        if let Some(r) = self.row {
            write!(f, ", row {r}")?;
        }
        if let Some(c) = self.col {
            write!(f, ", column {c}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

impl AlgebraSpec {
    /// Builds a spec from index-valued operations over the named carrier.
    #[allow(clippy::too_many_arguments)]
    pub fn from_fns(
        name: impl Into<String>,
        elements: Vec<String>,
        bottom: usize,
        top: usize,
        join: impl Fn(usize, usize) -> usize,
        meet: impl Fn(usize, usize) -> usize,
        prod: impl Fn(usize, usize) -> usize,
        imp: Option<&dyn Fn(usize, usize) -> usize>,
    ) -> Self {
        let n = elements.len();
        let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<String>> {
            (0..n).map(|i| (0..n).map(|j| elements[f(i, j)].clone()).collect()).collect()
        };
        AlgebraSpec {
            name: name.into(),
            join: table(&join),
            meet: table(&meet),
            prod: table(&prod),
            imp: imp.map(table),
            bottom: elements[bottom].clone(),
            top: elements[top].clone(),
            elements,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Checks names and table shapes; on success returns the name → index map.
    pub fn check_shape(&self) -> Result<HashMap<&str, usize>, ShapeError> {
        let err = |field: &str, row, col, detail: String| ShapeError { field: field.to_string(), row, col, detail };
        if self.elements.is_empty() {
            return Err(err("elements", None, None, "carrier is empty".into()));
        }
        let mut index = HashMap::with_capacity(self.elements.len());
        for (i, e) in self.elements.iter().enumerate() {
            if e.trim().is_empty() {
                return Err(err("elements", Some(i), None, "empty element name".into()));
            }
            if index.insert(e.as_str(), i).is_some() {
                return Err(err("elements", Some(i), None, format!("duplicate element `{e}`")));
            }
        }
        let n = self.elements.len();
        let mut tables: Vec<(&str, &Vec<Vec<String>>)> =
            vec![("join", &self.join), ("meet", &self.meet), ("prod", &self.prod)];
        if let Some(imp) = &self.imp {
            tables.push(("imp", imp));
        }
        for (field, table) in tables {
            if table.len() != n {
                return Err(err(field, None, None, format!("expected {n} rows, found {}", table.len())));
            }
            for (r, row) in table.iter().enumerate() {
                if row.len() != n {
                    return Err(err(field, Some(r), None, format!("expected {n} entries, found {}", row.len())));
                }
                for (c, entry) in row.iter().enumerate() {
                    if !index.contains_key(entry.as_str()) {
                        return Err(err(field, Some(r), Some(c), format!("unknown element `{entry}`")));
                    }
                }
            }
        }
        for (field, v) in [("bottom", &self.bottom), ("top", &self.top)] {
            if !index.contains_key(v.as_str()) {
                return Err(err(field, None, None, format!("unknown element `{v}`")));
            }
        }
        Ok(index)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bool2() -> AlgebraSpec {
        let names = vec!["0".to_string(), "1".to_string()];
        AlgebraSpec::from_fns("B2", names, 0, 1, |a, b| a.max(b), |a, b| a.min(b), |a, b| a.min(b), None)
    }

    #[test]
    fn well_formed_spec_passes() {
        let spec = bool2();
        let idx = spec.check_shape().unwrap();
        assert_eq!(idx["1"], 1);
    }

    #[test]
    fn short_row_is_reported_with_its_position() {
        let mut s = bool2();
        s.prod[1].pop();
        let e = s.check_shape().unwrap_err();
        assert_eq!(e.field, "prod");
        assert_eq!(e.row, Some(1));
    }

    #[test]
    fn unknown_entry_and_duplicates() {
        let mut s = bool2();
        s.meet[0][1] = "x".into();
        assert_eq!(s.check_shape().unwrap_err().col, Some(1));
        let mut s = bool2();
        s.elements[1] = "0".into();
        assert!(s.check_shape().unwrap_err().detail.contains("duplicate"));
    }
}
