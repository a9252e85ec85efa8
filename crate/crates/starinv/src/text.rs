//! Text forms of rings, scalars and elements.
//!
//! Ring specs look like `mat:2:Qi:transpose` or `zmod:6`. Scalars are
//! `[-]p/q` over `Q`, `[-]p/q+r/s i` over `Q(i)`, residues over `F_p`, and
//! `a+bw` over `F_{p^2}` where `w` is the generator of the extension.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use starinv_core::field::{Fp2, Gaussian, QuadraticField};
use starinv_core::ring::{FieldSpec, Involution, Matrix, Payload, RingContext, RingElement, RingKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError {
            line: 1,
            column: 1,
            message: message.into(),
        }
    }

    pub fn at(mut self, line: usize, column: usize) -> Self {
        self.line = line;
        self.column = column;
        self
    }

    fn shifted(mut self, column: usize) -> Self {
        self.column += column;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_ring(spec: &str) -> Result<RingContext, ParseError> {
    let parts: Vec<&str> = spec.trim().split(':').collect();
    let bad = |m: &str| ParseError::new(format!("ring spec `{spec}`: {m}"));
    match parts.as_slice() {
        ["zmod", n] => {
            let n: u64 = n.parse().map_err(|_| bad("modulus is not an integer"))?;
            RingContext::modular(n).map_err(|e| bad(&e.to_string()))
        }
        ["mat", k, field, inv] => {
            let k: usize = k.parse().map_err(|_| bad("size is not an integer"))?;
            let field = match *field {
                "Q" => FieldSpec::Rational,
                "Qi" => FieldSpec::Gaussian,
                f if f.starts_with('F') => {
                    let (p, square) = match f[1..].strip_suffix("^2") {
                        Some(p) => (p, true),
                        None => (&f[1..], false),
                    };
                    let p: u32 = p.parse().map_err(|_| bad("characteristic is not an integer"))?;
                    let made = if square { FieldSpec::prime_square(p) } else { FieldSpec::prime(p) };
                    made.map_err(|e| bad(&e.to_string()))?
                }
                _ => return Err(bad("field must be Q, Qi, F<p> or F<p>^2")),
            };
            let involution = match *inv {
                "transpose" => Involution::Transpose,
                "ctranspose" => Involution::ConjugateTranspose,
                _ => return Err(bad("involution must be transpose or ctranspose")),
            };
            RingContext::matrix(k, field, involution).map_err(|e| bad(&e.to_string()))
        }
        _ => Err(bad("expected mat:<k>:<field>:<involution> or zmod:<n>")),
    }
}

pub fn ring_spec(ctx: &RingContext) -> String {
    match ctx.kind() {
        RingKind::Modular(z) => format!("zmod:{}", z.modulus()),
        RingKind::Matrix { k, field, involution } => {
            let field = match field {
                FieldSpec::Rational => "Q".to_string(),
                FieldSpec::Gaussian => "Qi".to_string(),
                FieldSpec::Prime(f) => format!("F{}", f.characteristic()),
                FieldSpec::PrimeSquare(f) => format!("F{}^2", f.characteristic()),
            };
            let inv = match involution {
                Involution::Transpose => "transpose",
                Involution::ConjugateTranspose => "ctranspose",
            };
            format!("mat:{k}:{field}:{inv}")
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, ParseError> {
    let s = s.trim();
    let bad = || ParseError::new(format!("`{s}` is not a rational number"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let digits = |t: &str| {
        let body = t.strip_prefix(['-', '+']).unwrap_or(t);
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(num) || !digits(den) || den.starts_with(['-', '+']) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(ParseError::new(format!("`{s}` has a zero denominator")));
    }
    Ok(BigRational::new(num, den))
}

fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Splits `x+y<unit>` into the constant and the coefficient of `unit`.
/// The split point is the last sign that is not at the start and not
/// right after a `/`.
fn split_two_part(s: &str, unit: char) -> Result<(String, String), ParseError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = compact.strip_suffix(unit) else {
        return Ok((compact, "0".to_string()));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len()).rev().find(|&i| matches!(bytes[i], b'+' | b'-') && bytes[i - 1] != b'/');
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1".to_string(),
        "-" => "-1".to_string(),
        t => t.strip_prefix('+').unwrap_or(t).to_string(),
    };
    if re.contains(unit) {
        return Err(ParseError::new(format!("`{s}` has `{unit}` twice")));
    }
    Ok((re.to_string(), im))
}

pub fn parse_gaussian(s: &str) -> Result<Gaussian, ParseError> {
    let (re, im) = split_two_part(s, 'i')?;
    Ok(Complex::new(parse_rational(&re)?, parse_rational(&im)?))
}

/// `re`, `re+im i`, `re-im i`; `im i` alone when `re = 0`; a unit
/// coefficient is left out.
pub fn format_gaussian(z: &Gaussian) -> String {
    if z.im.is_zero() {
        return format_rational(&z.re);
    }
    let mag = z.im.abs();
    let coef = if mag.is_one() {
        String::new()
    } else if mag.denom().is_one() {
        format_rational(&mag)
    } else {
        format!("{} ", format_rational(&mag))
    };
    let sign = if z.im.is_negative() { "-" } else { "+" };
    if z.re.is_zero() {
        let sign = if z.im.is_negative() { "-" } else { "" };
        format!("{sign}{coef}i")
    } else {
        format!("{}{sign}{coef}i", format_rational(&z.re))
    }
}

fn parse_int(s: &str) -> Result<i64, ParseError> {
    let t = s.trim();
    t.parse().map_err(|_| ParseError::new(format!("`{t}` is not an integer")))
}

pub fn parse_fp2(f: &QuadraticField, s: &str) -> Result<Fp2, ParseError> {
    let (a, b) = split_two_part(s, 'w')?;
    Ok(f.from_parts(parse_int(&a)?, parse_int(&b)?))
}

pub fn format_fp2(x: &Fp2) -> String {
    match (x[0], x[1]) {
        (a, 0) => a.to_string(),
        (0, 1) => "w".to_string(),
        (0, b) => format!("{b}w"),
        (a, 1) => format!("{a}+w"),
        (a, b) => format!("{a}+{b}w"),
    }
}

/// Row-major scalar strings of an element; one entry for a residue.
pub fn entries(e: &RingElement) -> Vec<String> {
    match e.payload() {
        Payload::Rational(m) => m.entries().iter().map(format_rational).collect(),
        Payload::Gaussian(m) => m.entries().iter().map(format_gaussian).collect(),
        Payload::Prime(m) => m.entries().iter().map(|x| x.to_string()).collect(),
        Payload::PrimeSquare(m) => m.entries().iter().map(format_fp2).collect(),
        Payload::Residue(v) => vec![v.to_string()],
    }
}

fn residue(n: u64, s: &str) -> Result<u64, ParseError> {
    let v = parse_int(s)?;
    Ok(v.rem_euclid(n as i64) as u64)
}

/// Builds an element from row-major scalar strings. Errors name the entry.
pub fn from_entries<S: AsRef<str>>(ctx: &RingContext, raw: &[S]) -> Result<RingElement, ParseError> {
    let at = |i: usize, e: ParseError| ParseError::new(format!("entry {}: {}", i + 1, e.message));
    let payload = match ctx.kind() {
        RingKind::Modular(z) => match raw {
            [v] => Payload::Residue(residue(z.modulus(), v.as_ref()).map_err(|e| at(0, e))?),
            _ => return Err(ParseError::new(format!("a residue takes 1 entry, got {}", raw.len()))),
        },
        RingKind::Matrix { k, field, .. } => {
            if raw.len() != k * k {
                return Err(ParseError::new(format!("a {k}x{k} matrix takes {} entries, got {}", k * k, raw.len())));
            }
            fn collect<T: Clone, S: AsRef<str>>(
                k: usize,
                raw: &[S],
                f: impl Fn(&str) -> Result<T, ParseError>,
                at: impl Fn(usize, ParseError) -> ParseError,
            ) -> Result<Matrix<T>, ParseError> {
                let v = raw
                    .iter()
                    .enumerate()
                    .map(|(i, s)| f(s.as_ref()).map_err(|e| at(i, e)))
                    .collect::<Result<Vec<T>, _>>()?;
                Ok(Matrix::from_vec(k, k, v))
            }
            match field {
                FieldSpec::Rational => Payload::Rational(collect(k, raw, parse_rational, at)?),
                FieldSpec::Gaussian => Payload::Gaussian(collect(k, raw, parse_gaussian, at)?),
                FieldSpec::Prime(f) => {
                    let p = f.characteristic() as u64;
                    Payload::Prime(collect(k, raw, |s| residue(p, s).map(|v| v as u32), at)?)
                }
                FieldSpec::PrimeSquare(f) => Payload::PrimeSquare(collect(k, raw, |s| parse_fp2(&f, s), at)?),
            }
        }
    };
    ctx.element(payload).map_err(|e| ParseError::new(e.to_string()))
}

/// Nested-list form, `[[1, i], [0, 0]]`, or the bare residue.
pub fn format_element(e: &RingElement) -> String {
    let cells = entries(e);
    match e.context().kind() {
        RingKind::Modular(_) => cells[0].clone(),
        RingKind::Matrix { k, .. } => {
            let rows: Vec<String> = cells.chunks(k).map(|r| format!("[{}]", r.join(", "))).collect();
            format!("[{}]", rows.join(", "))
        }
    }
}

/// Parses the nested-list form (brackets optional, entries separated by
/// commas, optionally quoted). Column numbers point into `s`.
pub fn parse_list(ctx: &RingContext, s: &str) -> Result<RingElement, ParseError> {
    let mut cells = Vec::new();
    let mut start = 0;
    let mut current = String::new();
    for (i, ch) in s.char_indices() {
        match ch {
            '[' | ']' | '"' => {}
            ',' => {
                cells.push((start, std::mem::take(&mut current)));
                start = i + 1;
            }
            c => {
                if current.trim().is_empty() && !c.is_whitespace() {
                    start = i;
                }
                current.push(c);
            }
        }
    }
    cells.push((start, current));
    let cells: Vec<(usize, String)> = cells.into_iter().filter(|(_, c)| !c.trim().is_empty()).collect();
    let strings: Vec<&str> = cells.iter().map(|(_, c)| c.as_str()).collect();
    from_entries(ctx, &strings).map_err(|e| {
        // Point at the offending entry when the message names one.
        let idx = e
            .message
            .strip_prefix("entry ")
            .and_then(|r| r.split(':').next())
            .and_then(|n| n.parse::<usize>().ok());
        match idx.and_then(|i| cells.get(i - 1)) {
            Some((col, _)) => e.shifted(*col),
            None => e,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_specs_round_trip() {
        for s in ["zmod:6", "mat:2:Q:transpose", "mat:3:Qi:ctranspose", "mat:2:F3:transpose", "mat:2:F2^2:ctranspose"] {
            assert_eq!(ring_spec(&parse_ring(s).unwrap()), s);
        }
        for s in ["zmod:1", "mat:0:Q:transpose", "mat:2:F4:transpose", "mat:2:R:transpose", "ring", "mat:2:Q:adjoint"] {
            assert!(parse_ring(s).is_err(), "{s}");
        }
    }

    #[test]
    fn gaussian_forms() {
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let cases = [
            ("1", (q(1, 1), q(0, 1))),
            ("-3/4", (q(-3, 4), q(0, 1))),
            ("i", (q(0, 1), q(1, 1))),
            ("-i", (q(0, 1), q(-1, 1))),
            ("1+2i", (q(1, 1), q(2, 1))),
            ("1/2+3/4 i", (q(1, 2), q(3, 4))),
            ("-1/2-1/3 i", (q(-1, 2), q(-1, 3))),
            ("-1/2 i", (q(0, 1), q(-1, 2))),
            ("2/4", (q(1, 2), q(0, 1))),
        ];
        for (s, (re, im)) in cases {
            assert_eq!(parse_gaussian(s).unwrap(), Complex::new(re, im), "{s}");
        }
        for s in ["", "1/0", "i+i", "x", "1/-2", "1//2"] {
            assert!(parse_gaussian(s).is_err(), "{s}");
        }
        assert_eq!(format_gaussian(&parse_gaussian("1/2-3/4 i").unwrap()), "1/2-3/4 i");
        assert_eq!(format_gaussian(&parse_gaussian("-i").unwrap()), "-i");
        assert_eq!(format_gaussian(&parse_gaussian("3+2i").unwrap()), "3+2i");
    }

    #[test]
    fn list_form_and_positions() {
        let ctx = parse_ring("mat:2:Qi:transpose").unwrap();
        let a = parse_list(&ctx, "[[1, i], [0, 0]]").unwrap();
        assert_eq!(format_element(&a), "[[1, i], [0, 0]]");
        assert_eq!(parse_list(&ctx, "1,i,0,0").unwrap(), a);
        let err = parse_list(&ctx, "[[1, x], [0, 0]]").unwrap_err();
        assert_eq!(err.column, 6);
        assert!(parse_list(&ctx, "[[1, 0]]").is_err());
        let z = parse_ring("zmod:6").unwrap();
        assert_eq!(format_element(&parse_list(&z, "-1").unwrap()), "5");
        let f = parse_ring("mat:2:F2^2:ctranspose").unwrap();
        let x = parse_list(&f, "[[w, 1+w], [0, 1]]").unwrap();
        assert_eq!(format_element(&x), "[[w, 1+w], [0, 1]]");
    }
}
