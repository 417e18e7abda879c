//! Text syntax for multivectors.
//!
//! ```text
//! expr     := [sign] term (sign term)*
//! term     := rational ['*' blade] | blade | 'omega'
//! rational := integer ['/' positive-integer]
//! blade    := 'e' digit+                  only for n <= 9, one digit per index
//!           | 'e[' index (',' index)* ']' indices strictly increasing
//! ```
//!
//! `omega` names the volume blade e_1...e_n.  Whitespace may separate any
//! two tokens.  Formatting emits the same syntax, so parse(format(x)) == x.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::blade::{volume_element, Blade};
use crate::error::{CliffordError, Result};
use crate::multivector::{Multivector, Rational};
use crate::signature::Signature;

pub fn parse_multivector(sig: &Signature, input: &str) -> Result<Multivector> {
    Parser {
        sig,
        bytes: input.as_bytes(),
        pos: 0,
    }
    .parse()
}

struct Parser<'a> {
    sig: &'a Signature,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn parse(mut self) -> Result<Multivector> {
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.error("empty expression"));
        }
        let mut negate = false;
        if let Some(c @ (b'+' | b'-')) = self.peek() {
            negate = c == b'-';
            self.pos += 1;
        }
        let mut acc = self.term(negate)?;
        loop {
            self.skip_ws();
            match self.peek() {
                None => return Ok(acc),
                Some(c @ (b'+' | b'-')) => {
                    self.pos += 1;
                    let term = self.term(c == b'-')?;
                    acc = acc.add(&term);
                }
                Some(c) => {
                    return Err(self.error(&format!(
                        "expected '+' or '-' before next term, found {:?}",
                        c as char
                    )))
                }
            }
        }
    }

    fn term(&mut self, negate: bool) -> Result<Multivector> {
        self.skip_ws();
        let term = match self.peek() {
            Some(b'e') => Multivector::unit(self.blade()?),
            Some(b'o') => {
                self.keyword("omega")?;
                Multivector::unit(volume_element(self.sig))
            }
            Some(c) if c.is_ascii_digit() || c == b'-' || c == b'+' => {
                let coeff = self.rational()?;
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                    let blade = match self.peek() {
                        Some(b'e') => self.blade()?,
                        Some(b'o') => {
                            self.keyword("omega")?;
                            volume_element(self.sig)
                        }
                        _ => return Err(self.error("expected blade after '*'")),
                    };
                    Multivector::term(blade, coeff)
                } else {
                    Multivector::scalar(coeff)
                }
            }
            Some(c) => return Err(self.error(&format!("unexpected character {:?}", c as char))),
            None => return Err(self.error("expected a term")),
        };
        Ok(if negate { term.neg() } else { term })
    }

    fn rational(&mut self) -> Result<Rational> {
        let numer = self.integer(true)?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let denom_pos = self.pos;
            let denom = self.integer(false)?;
            if denom.is_zero() {
                return Err(CliffordError::Parse {
                    position: denom_pos,
                    message: "denominator must be a positive integer".into(),
                });
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    fn integer(&mut self, signed: bool) -> Result<BigInt> {
        let start = self.pos;
        let mut negative = false;
        if signed {
            if let Some(c @ (b'+' | b'-')) = self.peek() {
                negative = c == b'-';
                self.pos += 1;
            }
        }
        let digits_start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.bytes[digits_start..self.pos]).unwrap();
        let mut value: BigInt = digits.parse().unwrap();
        if negative {
            value = -value;
        }
        Ok(value)
    }

    fn blade(&mut self) -> Result<Blade> {
        debug_assert_eq!(self.peek(), Some(b'e'));
        self.pos += 1;
        let mut indices = Vec::new();
        if self.peek() == Some(b'[') {
            self.pos += 1;
            loop {
                self.skip_ws();
                let value = self.index()?;
                indices.push(value);
                self.skip_ws();
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b']') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.error("expected ',' or ']' in blade index list")),
                }
            }
        } else {
            if self.sig.n() > 9 {
                return Err(self.error(
                    "digit-form blades are ambiguous for more than 9 generators; use e[i,j,...]",
                ));
            }
            let start = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                indices.push((self.bytes[self.pos] - b'0') as usize);
                self.pos += 1;
            }
            if self.pos == start {
                return Err(self.error("expected blade indices after 'e'"));
            }
        }
        Blade::from_indices(&indices, self.sig)
    }

    fn index(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a blade index"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| CliffordError::Parse {
                position: start,
                message: "blade index out of range for usize".into(),
            })
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        if self.bytes[self.pos..].starts_with(word.as_bytes()) {
            let end = self.pos + word.len();
            let boundary = self
                .bytes
                .get(end)
                .map_or(true, |c| !c.is_ascii_alphanumeric());
            if boundary {
                self.pos = end;
                return Ok(());
            }
        }
        Err(self.error(&format!("expected keyword '{word}'")))
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, message: &str) -> CliffordError {
        CliffordError::Parse {
            position: self.pos,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormatStyle {
    Text,
    Latex,
}

/// Canonical rendering: terms ordered by (grade, mask), coefficients in
/// lowest terms, unit coefficients elided.
pub fn format_multivector(sig: &Signature, x: &Multivector, style: FormatStyle) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (blade, coeff)) in x.terms_by_grade().into_iter().enumerate() {
        let negative = coeff.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let magnitude = coeff.abs();
        out.push_str(&format_term(sig, blade, &magnitude, style));
    }
    out
}

fn format_term(sig: &Signature, blade: Blade, magnitude: &Rational, style: FormatStyle) -> String {
    if blade == Blade::SCALAR {
        return format_rational(magnitude, style);
    }
    if magnitude.is_one() {
        return format_blade(sig, blade, style);
    }
    match style {
        FormatStyle::Text => format!(
            "{}*{}",
            format_rational(magnitude, style),
            format_blade(sig, blade, style)
        ),
        FormatStyle::Latex => format!(
            "{} {}",
            format_rational(magnitude, style),
            format_blade(sig, blade, style)
        ),
    }
}

pub fn format_rational(value: &Rational, style: FormatStyle) -> String {
    match style {
        FormatStyle::Text => {
            if value.denom().is_one() {
                value.numer().to_string()
            } else {
                format!("{}/{}", value.numer(), value.denom())
            }
        }
        FormatStyle::Latex => {
            if value.denom().is_one() {
                value.numer().to_string()
            } else if value.is_negative() {
                format!("-\\frac{{{}}}{{{}}}", value.numer().abs(), value.denom())
            } else {
                format!("\\frac{{{}}}{{{}}}", value.numer(), value.denom())
            }
        }
    }
}

pub fn format_blade(sig: &Signature, blade: Blade, style: FormatStyle) -> String {
    let indices: Vec<String> = blade.indices().map(|j| j.to_string()).collect();
    match style {
        FormatStyle::Text => {
            if sig.n() <= 9 {
                format!("e{}", indices.concat())
            } else {
                format!("e[{}]", indices.join(","))
            }
        }
        FormatStyle::Latex => {
            if sig.n() <= 9 {
                format!("e_{{{}}}", indices.concat())
            } else {
                format!("e_{{{}}}", indices.join(","))
            }
        }
    }
}
