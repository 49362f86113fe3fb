use crate::monomial::Monomial;
use crate::ordering::WeightedOrdering;
use crate::polynomial::Polynomial;
use crate::{Int, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;

/// Error with a byte offset into the source string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyParseError {
    pub offset: usize,
    pub msg: String,
}

impl fmt::Display for PolyParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.msg)
    }
}

impl std::error::Error for PolyParseError {}

/// 1-based (line, column) of a byte offset, for error reporting against
/// multi-line input files.
pub fn line_col(src: &str, offset: usize) -> (usize, usize) {
    let mut line = 1;
    let mut col = 1;
    for (i, ch) in src.char_indices() {
        if i >= offset {
            break;
        }
        if ch == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    (line, col)
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    names: HashMap<&'a str, usize>,
    nvars: usize,
}

impl<'a> Cursor<'a> {
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
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyParseError> {
        Err(PolyParseError { offset: self.pos, msg: msg.into() })
    }

    fn uint(&mut self) -> Result<Int, PolyParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a number");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse::<Int>().unwrap())
    }

    fn uint_usize(&mut self) -> Result<usize, PolyParseError> {
        let at = self.pos;
        let v = self.uint()?;
        u64::try_from(&v)
            .ok()
            .and_then(|v| usize::try_from(v).ok())
            .ok_or(PolyParseError { offset: at, msg: "number too large".into() })
    }

    /// Variable factor: a declared identifier, or the positional forms
    /// `T<k>` / `T(<k>)` with 1-based k. Declared names win over the
    /// positional reading.
    fn variable(&mut self) -> Result<usize, PolyParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let word = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        if word.is_empty() {
            return self.err("expected a variable");
        }
        if let Some(&ix) = self.names.get(word) {
            return Ok(ix);
        }
        let index_from = |cur: &Self, at: usize, idx: usize| {
            if idx == 0 || idx > cur.nvars {
                Err(PolyParseError {
                    offset: at,
                    msg: format!("variable index {idx} outside 1..={}", cur.nvars),
                })
            } else {
                Ok(idx - 1)
            }
        };
        if word == "T" && self.src.get(self.pos) == Some(&b'(') {
            self.pos += 1;
            let at = self.pos;
            let idx = self.uint_usize()?;
            if self.peek() != Some(b')') {
                return self.err("expected ')'");
            }
            self.bump();
            return index_from(self, at, idx);
        }
        if let Some(num) = word.strip_prefix('T') {
            if !num.is_empty() && num.bytes().all(|b| b.is_ascii_digit()) {
                if let Ok(idx) = num.parse::<usize>() {
                    return index_from(self, start + 1, idx);
                }
            }
        }
        Err(PolyParseError {
            offset: start,
            msg: format!("unknown variable {word:?}"),
        })
    }
}

/// Parse `src` as a polynomial over the declared variable `names`. The
/// grammar is a signed sum of products; each product multiplies rational
/// constants and powers of variables with explicit `*` between factors.
/// Variables are declared identifiers, or positional `T3` / `T(3)`.
pub fn parse_polynomial_named(
    src: &str,
    names: &[String],
) -> Result<Polynomial, PolyParseError> {
    let nvars = names.len();
    let map: HashMap<&str, usize> = names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    let mut cur = Cursor { src: src.as_bytes(), pos: 0, names: map, nvars };
    let mut result = Polynomial::zero(nvars);
    let mut first = true;
    loop {
        let mut sign = Rat::one();
        match cur.peek() {
            None if first => return cur.err("empty input"),
            None => break,
            Some(b'+') => {
                cur.bump();
            }
            Some(b'-') => {
                cur.bump();
                sign = -sign;
            }
            Some(_) if first => {}
            Some(c) => {
                return cur.err(format!("expected '+' or '-', found {:?}", c as char))
            }
        }
        first = false;
        let (mon, coef) = parse_term(&mut cur, nvars)?;
        result.add_term(mon, coef * sign);
    }
    Ok(result)
}

/// Parse over the default variable set T1..Tn.
pub fn parse_polynomial(src: &str, nvars: usize) -> Result<Polynomial, PolyParseError> {
    let names: Vec<String> = (1..=nvars).map(|i| format!("T{i}")).collect();
    parse_polynomial_named(src, &names)
}

fn parse_term(
    cur: &mut Cursor<'_>,
    nvars: usize,
) -> Result<(Monomial, Rat), PolyParseError> {
    let mut coef = Rat::one();
    let mut exps = vec![0u32; nvars];
    loop {
        match cur.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let ix = cur.variable()?;
                let exp = if cur.peek() == Some(b'^') {
                    cur.bump();
                    let at = cur.pos;
                    let e = cur.uint_usize()?;
                    u32::try_from(e).map_err(|_| PolyParseError {
                        offset: at,
                        msg: "exponent too large".into(),
                    })?
                } else {
                    1
                };
                exps[ix] += exp;
            }
            Some(c) if c.is_ascii_digit() => {
                let num = cur.uint()?;
                let den = if cur.peek() == Some(b'/') {
                    cur.bump();
                    let at = cur.pos;
                    let d = cur.uint()?;
                    if d.is_zero() {
                        return Err(PolyParseError {
                            offset: at,
                            msg: "zero denominator".into(),
                        });
                    }
                    d
                } else {
                    Int::one()
                };
                coef *= Rat::new(num, den);
            }
            Some(c) => {
                return cur.err(format!("expected a factor, found {:?}", c as char))
            }
            None => return cur.err("expected a factor"),
        }
        if cur.peek() == Some(b'*') {
            cur.bump();
            continue;
        }
        break;
    }
    Ok((Monomial::from_exps(exps), coef))
}

/// Canonical text form: terms descending under `ord`, coefficients as
/// reduced fractions, explicit `*` between factors.
pub fn print_polynomial_named(
    p: &Polynomial,
    names: &[String],
    ord: &WeightedOrdering,
) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&Monomial, &Rat)> = p.terms().collect();
    terms.sort_by(|(a, _), (b, _)| ord.compare(b, a));
    let mut out = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if !mag.is_one() || m.is_one() {
            factors.push(mag.to_string());
        }
        for v in 0..m.nvars() {
            let e = m.exp(v);
            if e == 1 {
                factors.push(names[v].clone());
            } else if e > 1 {
                factors.push(format!("{}^{}", names[v], e));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

/// Canonical text form over the default variable set T1..Tn.
pub fn print_polynomial(p: &Polynomial, ord: &WeightedOrdering) -> String {
    let names: Vec<String> = (1..=p.nvars()).map(|i| format!("T{i}")).collect();
    print_polynomial_named(p, &names, ord)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let ord = WeightedOrdering::grevlex(4);
        for src in ["T1*T2 - T3*T4", "2*T1^2 + 1/2*T2", "-T1 + 1", "3/6*T4"] {
            let p = parse_polynomial(src, 4).unwrap();
            let printed = print_polynomial(&p, &ord);
            let back = parse_polynomial(&printed, 4).unwrap();
            assert_eq!(p, back, "source {:?} printed {:?}", src, printed);
        }
        let p = parse_polynomial("3/6*T4", 4).unwrap();
        assert_eq!(print_polynomial(&p, &ord), "1/2*T4");
    }

    #[test]
    fn named_variables_resolve() {
        let names: Vec<String> =
            ["x12", "x13", "z_1", "p"].iter().map(|s| s.to_string()).collect();
        let p = parse_polynomial_named("x12*z_1 - 2*p^3", &names).unwrap();
        let q = parse_polynomial_named("T1*T(3) - 2*T4^3", &names).unwrap();
        assert_eq!(p, q);
        let ord = WeightedOrdering::grevlex(4);
        assert_eq!(print_polynomial_named(&p, &names, &ord), "-2*p^3 + x12*z_1");
        // A declared name shadowing the positional form still resolves.
        let names2: Vec<String> = vec!["a".into(), "T1".into()];
        let p = parse_polynomial_named("T1", &names2).unwrap();
        assert_eq!(p, parse_polynomial_named("T(2)", &names2).unwrap());
    }

    #[test]
    fn parenthesized_indices_and_repeats() {
        let a = parse_polynomial("T(12)*T1^2*T1", 12).unwrap();
        let b = parse_polynomial("T1^3*T12", 12).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn cancellation_to_zero() {
        let p = parse_polynomial("T1*T2 - T1*T2", 2).unwrap();
        assert!(p.is_zero());
        let ord = WeightedOrdering::grevlex(2);
        assert_eq!(print_polynomial(&p, &ord), "0");
    }

    #[test]
    fn errors_carry_position() {
        let e = parse_polynomial("T1 + T9", 4).unwrap_err();
        assert!(e.msg.contains("outside"));
        assert_eq!(line_col("T1 + T9", e.offset), (1, 7));
        assert!(parse_polynomial("T0", 4).is_err());
        assert!(parse_polynomial("2T1", 4).is_err());
        assert!(parse_polynomial("", 4).is_err());
        assert!(parse_polynomial("T1 +", 4).is_err());
        assert!(parse_polynomial("1/0", 4).is_err());
        assert!(parse_polynomial("T(1)^^2", 4).is_err());
        assert!(parse_polynomial_named("y1", &["x1".to_string()]).is_err());
        let e = parse_polynomial("T1 *\n* T2", 4).unwrap_err();
        let (line, _) = line_col("T1 *\n* T2", e.offset);
        assert_eq!(line, 2);
    }
}
