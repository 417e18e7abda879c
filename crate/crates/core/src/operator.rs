//! Sparse linear operators on the underlying 2^n-dimensional vector space
//! of an algebra, stored column-major.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::blade::Blade;
use crate::error::{CliffordError, Result};
use crate::multivector::{Multivector, Rational};
use crate::signature::Signature;

/// Columns hold (row, coefficient) pairs sorted by row with no explicit
/// zeros, so structural equality is semantic equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOperator {
    dim: usize,
    cols: Vec<Vec<(usize, Rational)>>,
}

impl LinearOperator {
    pub fn zero(dim: usize) -> Self {
        LinearOperator {
            dim,
            cols: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let cols = (0..dim).map(|c| vec![(c, Rational::one())]).collect();
        LinearOperator { dim, cols }
    }

    /// Operator whose column at blade mask c is the image of that blade.
    pub fn from_blade_images<F>(sig: &Signature, mut image: F) -> Self
    where
        F: FnMut(Blade) -> Multivector,
    {
        let dim = sig.algebra_dim();
        let cols = (0..dim)
            .map(|c| {
                let img = image(Blade::from_mask_unchecked(c as u32));
                img.terms()
                    .map(|(b, v)| (b.mask() as usize, v.clone()))
                    .collect()
            })
            .collect();
        LinearOperator { dim, cols }
    }

    fn from_column_maps(dim: usize, cols: Vec<BTreeMap<usize, Rational>>) -> Self {
        LinearOperator {
            dim,
            cols: cols
                .into_iter()
                .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Entries sorted by (column, row).
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (c, *r, v)))
    }

    pub fn apply(&self, x: &Multivector) -> Multivector {
        let mut out = BTreeMap::new();
        for (blade, coeff) in x.terms() {
            let c = blade.mask() as usize;
            assert!(c < self.dim, "input has blades outside operator domain");
            for (row, value) in &self.cols[c] {
                let entry = out.entry(*row).or_insert_with(Rational::zero);
                *entry += coeff * value;
            }
        }
        Multivector::from_terms(
            out.into_iter()
                .map(|(row, v)| (Blade::from_mask_unchecked(row as u32), v)),
        )
    }

    /// Composition self after other.
    pub fn compose(&self, other: &LinearOperator) -> LinearOperator {
        assert_eq!(self.dim, other.dim, "operator dimensions must match");
        let mut cols = vec![BTreeMap::new(); self.dim];
        for (c, col) in other.cols.iter().enumerate() {
            for (mid, w) in col {
                for (row, v) in &self.cols[*mid] {
                    let entry = cols[c].entry(*row).or_insert_with(Rational::zero);
                    *entry += v * w;
                }
            }
        }
        LinearOperator::from_column_maps(self.dim, cols)
    }

    pub fn add(&self, other: &LinearOperator) -> LinearOperator {
        assert_eq!(self.dim, other.dim, "operator dimensions must match");
        let mut cols = vec![BTreeMap::new(); self.dim];
        for source in [&self.cols, &other.cols] {
            for (c, col) in source.iter().enumerate() {
                for (row, v) in col {
                    let entry = cols[c].entry(*row).or_insert_with(Rational::zero);
                    *entry += v;
                }
            }
        }
        LinearOperator::from_column_maps(self.dim, cols)
    }

    pub fn scale(&self, factor: &Rational) -> LinearOperator {
        if factor.is_zero() {
            return LinearOperator::zero(self.dim);
        }
        LinearOperator {
            dim: self.dim,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(r, v)| (*r, v * factor)).collect())
                .collect(),
        }
    }

    pub fn neg(&self) -> LinearOperator {
        self.scale(&-Rational::one())
    }

    pub fn trace(&self) -> Rational {
        let mut acc = Rational::zero();
        for (c, col) in self.cols.iter().enumerate() {
            if let Ok(idx) = col.binary_search_by_key(&c, |(r, _)| *r) {
                acc += &col[idx].1;
            }
        }
        acc
    }

    /// JSON form `{"dim": d, "cols": {"c": [[row, "p/q"], ...]}}` listing
    /// only nonzero entries.
    pub fn to_json(&self) -> Value {
        let mut cols = Map::new();
        for (c, col) in self.cols.iter().enumerate() {
            if col.is_empty() {
                continue;
            }
            let entries: Vec<Value> = col
                .iter()
                .map(|(r, v)| json!([r, rational_string(v)]))
                .collect();
            cols.insert(c.to_string(), Value::Array(entries));
        }
        json!({ "dim": self.dim, "cols": Value::Object(cols) })
    }

    pub fn from_json(value: &Value) -> Result<LinearOperator> {
        let err = |message: &str| CliffordError::Json {
            kind: "LinearOperator",
            message: message.into(),
        };
        let dim = value
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| err("missing integer field 'dim'"))? as usize;
        let cols_obj = value
            .get("cols")
            .and_then(Value::as_object)
            .ok_or_else(|| err("missing object field 'cols'"))?;
        let mut cols = vec![BTreeMap::new(); dim];
        for (key, entries) in cols_obj {
            let c: usize = key.parse().map_err(|_| err("non-integer column key"))?;
            if c >= dim {
                return Err(err("column index out of range"));
            }
            let entries = entries.as_array().ok_or_else(|| err("column must be an array"))?;
            for entry in entries {
                let pair = entry.as_array().filter(|p| p.len() == 2);
                let pair = pair.ok_or_else(|| err("entry must be [row, coeff]"))?;
                let row = pair[0]
                    .as_u64()
                    .ok_or_else(|| err("row must be an integer"))? as usize;
                if row >= dim {
                    return Err(err("row index out of range"));
                }
                let coeff = pair[1]
                    .as_str()
                    .ok_or_else(|| err("coefficient must be a string"))?;
                let coeff = Rational::from_str(coeff)
                    .map_err(|e| err(&format!("bad coefficient {coeff:?}: {e}")))?;
                cols[c].insert(row, coeff);
            }
        }
        Ok(LinearOperator::from_column_maps(dim, cols))
    }
}

pub(crate) fn rational_string(v: &Rational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}
