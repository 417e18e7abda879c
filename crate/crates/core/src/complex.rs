//! Gaussian rationals a + b i and exact square complex matrices.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{CliffordError, Result};
use crate::multivector::Rational;
use crate::operator::rational_string;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_int(re: i64, im: i64) -> Self {
        GaussianRational::new(
            Rational::from_integer(re.into()),
            Rational::from_integer(im.into()),
        )
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational::new(re, Rational::zero())
    }

    pub fn i() -> Self {
        GaussianRational::from_int(0, 1)
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Text form used in matrix output: "0", "3/2", "i", "-i", "2i",
    /// "1/2+1/2i", "1-2i".
    pub fn text(&self) -> String {
        fn imaginary(im: &Rational) -> String {
            if im.is_one() {
                "i".into()
            } else if (-im).is_one() {
                "-i".into()
            } else {
                format!("{}i", rational_string(im))
            }
        }
        if self.im.is_zero() {
            rational_string(&self.re)
        } else if self.re.is_zero() {
            imaginary(&self.im)
        } else if self.im.is_negative() {
            format!("{}-{}", rational_string(&self.re), imaginary(&-self.im.clone()))
        } else {
            format!("{}+{}", rational_string(&self.re), imaginary(&self.im))
        }
    }

    pub fn latex(&self) -> String {
        fn part(value: &Rational) -> String {
            crate::expr::format_rational(value, crate::expr::FormatStyle::Latex)
        }
        fn imaginary(im: &Rational) -> String {
            if im.is_one() {
                "i".into()
            } else if (-im).is_one() {
                "-i".into()
            } else {
                format!("{} i", part(im))
            }
        }
        if self.im.is_zero() {
            part(&self.re)
        } else if self.re.is_zero() {
            imaginary(&self.im)
        } else if self.im.is_negative() {
            format!("{} - {}", part(&self.re), imaginary(&-self.im.clone()))
        } else {
            format!("{} + {}", part(&self.re), imaginary(&self.im))
        }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> Self {
        GaussianRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> Self {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: Self) -> Self {
        let denom = rhs.norm_sqr();
        assert!(!denom.is_zero(), "division by zero Gaussian rational");
        let num = self * rhs.conj();
        GaussianRational::new(num.re / &denom, num.im / &denom)
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::real(Rational::one())
    }
}

/// Square matrix over the Gaussian rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexMatrix {
    m: usize,
    entries: Vec<GaussianRational>,
}

impl ComplexMatrix {
    pub fn zeros(m: usize) -> Self {
        ComplexMatrix {
            m,
            entries: vec![GaussianRational::zero(); m * m],
        }
    }

    pub fn identity(m: usize) -> Self {
        let mut out = ComplexMatrix::zeros(m);
        for i in 0..m {
            *out.at_mut(i, i) = GaussianRational::one();
        }
        out
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let m = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != m) {
            return Err(CliffordError::BadMatrixShape {
                rows: m,
                cols: bad.len(),
                expected: m,
            });
        }
        Ok(ComplexMatrix {
            m,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builder from integer (re, im) pairs, for fixtures and tests.
    pub fn from_int_rows(rows: &[&[(i64, i64)]]) -> Self {
        ComplexMatrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&(re, im)| GaussianRational::from_int(re, im))
                        .collect()
                })
                .collect(),
        )
        .expect("integer fixture must be square")
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn at(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i * self.m + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut GaussianRational {
        &mut self.entries[i * self.m + j]
    }

    pub fn mul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.m, other.m, "matrix sizes must match");
        let m = self.m;
        let mut out = ComplexMatrix::zeros(m);
        for i in 0..m {
            for k in 0..m {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..m {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.clone() * b.clone();
                    let cur = out.at(i, j).clone();
                    *out.at_mut(i, j) = cur + prod;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.m, other.m, "matrix sizes must match");
        ComplexMatrix {
            m: self.m,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> ComplexMatrix {
        ComplexMatrix {
            m: self.m,
            entries: self.entries.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, factor: &GaussianRational) -> ComplexMatrix {
        ComplexMatrix {
            m: self.m,
            entries: self
                .entries
                .iter()
                .map(|a| a.clone() * factor.clone())
                .collect(),
        }
    }

    pub fn anticommutator(&self, other: &ComplexMatrix) -> ComplexMatrix {
        self.mul(other).add(&other.mul(self))
    }

    /// JSON form `{"m": m, "entries": [[["re","im"], ...], ...]}` with exact
    /// fraction strings, row-major.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.m)
            .map(|i| {
                let row: Vec<Value> = (0..self.m)
                    .map(|j| {
                        let v = self.at(i, j);
                        json!([rational_string(&v.re), rational_string(&v.im)])
                    })
                    .collect();
                Value::Array(row)
            })
            .collect();
        json!({ "m": self.m, "entries": rows })
    }

    pub fn from_json(value: &Value) -> Result<ComplexMatrix> {
        let err = |message: &str| CliffordError::Json {
            kind: "ComplexMatrix",
            message: message.into(),
        };
        let m = value
            .get("m")
            .and_then(Value::as_u64)
            .ok_or_else(|| err("missing integer field 'm'"))? as usize;
        let rows = value
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| err("missing array field 'entries'"))?;
        if rows.len() != m {
            return Err(err("row count does not match 'm'"));
        }
        let mut out = ComplexMatrix::zeros(m);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_array().filter(|r| r.len() == m);
            let row = row.ok_or_else(|| err("each row must list m entries"))?;
            for (j, entry) in row.iter().enumerate() {
                let pair = entry.as_array().filter(|p| p.len() == 2);
                let pair = pair.ok_or_else(|| err("entry must be [re, im]"))?;
                let parse = |v: &Value| -> Result<Rational> {
                    let s = v.as_str().ok_or_else(|| err("parts must be strings"))?;
                    Rational::from_str(s).map_err(|e| err(&format!("bad fraction {s:?}: {e}")))
                };
                *out.at_mut(i, j) = GaussianRational::new(parse(&pair[0])?, parse(&pair[1])?);
            }
        }
        Ok(out)
    }

    /// Rows of entries in the text form, e.g. `[0, -i; i, 0]` per row.
    pub fn text(&self) -> String {
        (0..self.m)
            .map(|i| {
                let row: Vec<String> = (0..self.m).map(|j| self.at(i, j).text()).collect();
                format!("[ {} ]", row.join(", "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// LaTeX pmatrix block.
    pub fn latex(&self) -> String {
        let body = (0..self.m)
            .map(|i| {
                (0..self.m)
                    .map(|j| self.at(i, j).latex())
                    .collect::<Vec<_>>()
                    .join(" & ")
            })
            .collect::<Vec<_>>()
            .join(" \\\\ ");
        format!("\\begin{{pmatrix}} {body} \\end{{pmatrix}}")
    }
}
