//! Text grammar for polynomials: terms separated by `+`/`-`, each term an
//! optional coefficient (rational or `(re+imi)`) followed by monomials
//! `z<k>` / `z<k>^<e>` with 1-based variable indices. `parse(format(q)) == q`
//! exactly.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{CPoly, MultiIndex};
use crate::grat::{format_rational, GRat};

#[derive(Debug, Error, PartialEq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { position, message: message.into() })
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigRational, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return err(start, "expected digits");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<BigRational>()
            .map_err(|e| ParseError { position: start, message: format!("bad integer: {e}") })
    }

    /// rational := integer [ '/' integer ]
    fn rational(&mut self) -> Result<BigRational, ParseError> {
        let mut v = self.integer()?;
        if self.eat(b'/') {
            let d = self.integer()?;
            if d.is_zero() {
                return err(self.pos, "zero denominator");
            }
            v = v / d;
        }
        Ok(v)
    }

    /// signed rational with optional leading sign
    fn signed_rational(&mut self) -> Result<BigRational, ParseError> {
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let v = self.rational()?;
        Ok(if neg { -v } else { v })
    }
}

/// Parses the text grammar. When `nvars` is given, variable indices above
/// it are rejected; otherwise the arity is inferred from the largest index
/// seen (minimum 1).
pub fn parse_poly(text: &str, nvars: Option<usize>) -> Result<CPoly, ParseError> {
    let mut lx = Lexer::new(text);
    // terms accumulated as (coefficient, exponent map by 1-based var)
    let mut raw_terms: Vec<(GRat, Vec<(usize, u32)>)> = Vec::new();
    let mut max_var = 0usize;

    let mut first = true;
    loop {
        lx.skip_ws();
        if lx.pos >= lx.src.len() {
            if first {
                return err(lx.pos, "empty polynomial");
            }
            break;
        }
        // sign
        let mut negative = false;
        if first {
            if lx.eat(b'-') {
                negative = true;
            } else {
                lx.eat(b'+');
            }
        } else {
            match lx.bump() {
                Some(b'+') => {}
                Some(b'-') => negative = true,
                Some(c) => return err(lx.pos - 1, format!("expected '+' or '-', found {:?}", c as char)),
                None => break,
            }
        }
        first = false;

        let (coeff, monos) = parse_term(&mut lx, &mut max_var)?;
        let coeff = if negative { -coeff } else { coeff };
        raw_terms.push((coeff, monos));
    }

    let n = match nvars {
        Some(n) => {
            if n < 1 {
                return err(0, "variable count must be >= 1");
            }
            if max_var > n {
                return err(0, format!("variable index z{max_var} out of range for n={n}"));
            }
            n
        }
        None => max_var.max(1),
    };

    let mut poly = CPoly::zero(n);
    for (coeff, monos) in raw_terms {
        let mut exps = vec![0u32; n];
        for (var, e) in monos {
            exps[var - 1] += e;
        }
        poly.add_term(MultiIndex::new(exps), coeff);
    }
    Ok(poly)
}

/// term := [coefficient] ['*'] monomial ('*'? monomial)*
fn parse_term(lx: &mut Lexer, max_var: &mut usize) -> Result<(GRat, Vec<(usize, u32)>), ParseError> {
    let mut coeff = GRat::one();
    let mut have_coeff = false;

    match lx.peek() {
        Some(b'(') => {
            lx.bump();
            coeff = parse_complex_coeff(lx)?;
            if !lx.eat(b')') {
                return err(lx.pos, "expected ')'");
            }
            have_coeff = true;
        }
        Some(c) if c.is_ascii_digit() => {
            coeff = GRat::real(lx.rational()?);
            have_coeff = true;
        }
        _ => {}
    }

    if have_coeff {
        lx.eat(b'*');
    }

    let mut monos = Vec::new();
    loop {
        match lx.peek() {
            Some(b'z') => {
                lx.bump();
                let pos = lx.pos;
                let idx = lx.integer()?;
                if !idx.is_integer() || idx.numer().sign() == num_bigint::Sign::Minus {
                    return err(pos, "variable index must be a positive integer");
                }
                let k: usize = idx
                    .numer()
                    .to_string()
                    .parse()
                    .map_err(|_| ParseError { position: pos, message: "variable index too large".into() })?;
                if k == 0 {
                    return err(pos, "variable indices start at z1");
                }
                *max_var = (*max_var).max(k);
                let mut e = 1u32;
                if lx.eat(b'^') {
                    let pos = lx.pos;
                    let ev = lx.integer()?;
                    if !ev.is_integer() {
                        return err(pos, "exponent must be an integer");
                    }
                    e = ev
                        .numer()
                        .to_string()
                        .parse()
                        .map_err(|_| ParseError { position: pos, message: "exponent too large".into() })?;
                }
                monos.push((k, e));
                lx.eat(b'*');
            }
            _ => break,
        }
    }

    if !have_coeff && monos.is_empty() {
        return err(lx.pos, "expected a coefficient or a monomial");
    }
    Ok((coeff, monos))
}

/// Inside parens: `re`, `re+imi`, `re-imi`, or `imi` with rational parts.
fn parse_complex_coeff(lx: &mut Lexer) -> Result<GRat, ParseError> {
    let first = lx.signed_rational()?;
    if lx.eat(b'i') {
        // pure imaginary
        return Ok(GRat::new(BigRational::zero(), first));
    }
    match lx.peek() {
        Some(b'+') | Some(b'-') => {
            let im = lx.signed_rational()?;
            if !lx.eat(b'i') {
                return err(lx.pos, "expected 'i' after imaginary part");
            }
            Ok(GRat::new(first, im))
        }
        _ => Ok(GRat::real(first)),
    }
}

struct TermDisplay<'a>(&'a MultiIndex, &'a GRat);

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let TermDisplay(alpha, coeff) = self;
        let mut monos = String::new();
        for (j, e) in alpha.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => {
                    if !monos.is_empty() {
                        monos.push('*');
                    }
                    monos.push_str(&format!("z{}", j + 1));
                }
                e => {
                    if !monos.is_empty() {
                        monos.push('*');
                    }
                    monos.push_str(&format!("z{}^{}", j + 1, e));
                }
            }
        }
        let coeff_str = if coeff.is_real() {
            if coeff.re.is_one() && !monos.is_empty() {
                String::new()
            } else {
                format_rational(&coeff.re)
            }
        } else if coeff.re.is_zero() {
            format!("({}i)", format_rational(&coeff.im))
        } else if coeff.im.is_negative() {
            format!(
                "({}-{}i)",
                format_rational(&coeff.re),
                format_rational(&(-coeff.im.clone()))
            )
        } else {
            format!("({}+{}i)", format_rational(&coeff.re), format_rational(&coeff.im))
        };
        if monos.is_empty() {
            write!(f, "{coeff_str}")
        } else if coeff_str.is_empty() {
            write!(f, "{monos}")
        } else {
            write!(f, "{coeff_str}*{monos}")
        }
    }
}

/// Renders in descending graded-lex term order. Negative-real leading
/// coefficients fold their sign into the term separator.
pub fn format_poly(p: &CPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (alpha, coeff)) in p.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
        let (sep, shown);
        if coeff.is_real() && coeff.re.is_negative() {
            sep = if i == 0 { "-".to_string() } else { " - ".to_string() };
            shown = -coeff;
        } else {
            sep = if i == 0 { String::new() } else { " + ".to_string() };
            shown = coeff.clone();
        }
        out.push_str(&sep);
        out.push_str(&TermDisplay(alpha, &shown).to_string());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grat::GRat;
    use crate::mpoly::MultiIndex;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn parses_linear_example() {
        let p = parse_poly("2 - z1 - z2", None).unwrap();
        assert_eq!(p.nvars(), 2);
        assert_eq!(p.coefficient(&mi(&[0, 0])), GRat::from_int(2));
        assert_eq!(p.coefficient(&mi(&[1, 0])), GRat::from_int(-1));
        assert_eq!(p.coefficient(&mi(&[0, 1])), GRat::from_int(-1));
        assert_eq!(p.num_terms(), 3);
    }

    #[test]
    fn parses_complex_coefficient_term() {
        let p = parse_poly("(1/2+3/4i)*z1^2*z2", None).unwrap();
        assert_eq!(p.num_terms(), 1);
        assert_eq!(
            p.coefficient(&mi(&[2, 1])),
            GRat::from_ratio_pair((1, 2), (3, 4))
        );
    }

    #[test]
    fn rejects_zero_index() {
        let e = parse_poly("z0", Some(2)).unwrap_err();
        assert!(e.message.contains("start at z1"), "{e}");
    }

    #[test]
    fn rejects_out_of_range_index() {
        let e = parse_poly("z3", Some(2)).unwrap_err();
        assert!(e.message.contains("out of range"), "{e}");
    }

    #[test]
    fn position_reported_on_syntax_error() {
        let e = parse_poly("2 + * z1", None).unwrap_err();
        assert!(e.position >= 4, "{e:?}");
    }

    #[test]
    fn roundtrip_various() {
        for src in [
            "2 - z1 - z2",
            "(1/2+3/4i)*z1^2*z2",
            "1",
            "-3/7",
            "(2i)*z1 + z2^5 - 1/3",
            "z1*z2",
            "(1-2i) + (0+1i)*z2",
        ] {
            let p = parse_poly(src, None).unwrap();
            let q = parse_poly(&format_poly(&p), Some(p.nvars())).unwrap();
            assert_eq!(p, q, "roundtrip failed for {src:?} -> {:?}", format_poly(&p));
        }
    }
}
