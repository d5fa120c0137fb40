//! Text input: a variable declaration line followed by one polynomial per
//! line. Expressions use + - * ^ with explicit multiplication signs,
//! parentheses, and integer or p/q rational constants.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::poly::Polynomial;
use crate::vars::VarOrder;
use crate::{Error, Result};

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

struct ExprParser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    order: &'a Arc<VarOrder>,
}

impl<'a> ExprParser<'a> {
    fn err(&self, col: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col,
            msg: msg.into(),
        }
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let negate = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some('-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
                let f = self.factor()?;
                acc = &acc * &f;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let c0 = self.col();
        let digits = self.digits(c0)?;
        let e: u32 = digits
            .parse()
            .map_err(|_| self.err(c0, "exponent out of range"))?;
        Ok(base.pow(e))
    }

    fn primary(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let c0 = self.col();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                if self.peek() == Some(')') {
                    self.pos += 1;
                    Ok(e)
                } else {
                    Err(self.err(self.col(), "expected `)`"))
                }
            }
            Some(c) if c.is_ascii_digit() => self.number(c0),
            Some(c) if is_ident_start(c) => {
                let mut name = String::new();
                while matches!(self.peek(), Some(c) if is_ident_char(c)) {
                    name.push(self.peek().unwrap());
                    self.pos += 1;
                }
                match self.order.index_of(&name) {
                    Some(i) => Ok(Polynomial::var(self.order, i)),
                    None => Err(self.err(c0, format!("unknown variable `{name}`"))),
                }
            }
            Some(c) => Err(self.err(c0, format!("unexpected `{c}`"))),
            None => Err(self.err(c0, "unexpected end of line")),
        }
    }

    fn number(&mut self, c0: usize) -> Result<Polynomial> {
        let numer: BigInt = self.digits(c0)?.parse().expect("digits parse as an integer");
        let value = if self.peek() == Some('/') {
            self.pos += 1;
            let c1 = self.col();
            let denom: BigInt = self.digits(c1)?.parse().expect("digits parse as an integer");
            if denom.is_zero() {
                return Err(self.err(c1, "zero denominator"));
            }
            BigRational::new(numer, denom)
        } else {
            BigRational::from_integer(numer)
        };
        Ok(Polynomial::constant(self.order, value))
    }

    fn digits(&mut self, c0: usize) -> Result<String> {
        let mut s = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            s.push(self.peek().unwrap());
            self.pos += 1;
        }
        if s.is_empty() {
            Err(self.err(c0, "expected a number"))
        } else {
            Ok(s)
        }
    }

    fn finish(&mut self, acc: Polynomial) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            None => Ok(acc),
            Some(c) if is_ident_start(c) || c.is_ascii_digit() || c == '(' => Err(self.err(
                self.col(),
                format!("unexpected `{c}` (products need an explicit `*`)"),
            )),
            Some(c) => Err(self.err(self.col(), format!("unexpected `{c}`"))),
        }
    }
}

fn parse_line(line: &str, line_no: usize, order: &Arc<VarOrder>) -> Result<Polynomial> {
    let mut p = ExprParser {
        chars: line.chars().collect(),
        pos: 0,
        line: line_no,
        order,
    };
    let e = p.expr()?;
    p.finish(e)
}

/// Parse one polynomial expression against an existing variable order.
pub fn parse_polynomial(src: &str, order: &Arc<VarOrder>) -> Result<Polynomial> {
    parse_line(strip_comment(src), 1, order)
}

fn strip_comment(line: &str) -> &str {
    let line = line.strip_suffix('\r').unwrap_or(line);
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn parse_header(line: &str, line_no: usize) -> Result<Arc<VarOrder>> {
    let t = line.trim();
    let Some(rest) = t.strip_prefix("vars") else {
        return Err(Error::Parse {
            line: line_no,
            col: 1,
            msg: "the first line must declare variables, e.g. `vars x, y`".into(),
        });
    };
    if !rest.starts_with(|c: char| c.is_whitespace()) {
        return Err(Error::Parse {
            line: line_no,
            col: 1,
            msg: "the first line must declare variables, e.g. `vars x, y`".into(),
        });
    }
    let mut names: Vec<String> = Vec::new();
    for piece in rest.split(',') {
        let name = piece.trim();
        let col = line.find(name).map(|i| i + 1).unwrap_or(1);
        if name.is_empty() || !name.starts_with(is_ident_start) || !name.chars().all(is_ident_char)
        {
            return Err(Error::Parse {
                line: line_no,
                col,
                msg: format!("bad variable name `{name}`"),
            });
        }
        if names.iter().any(|n| n == name) {
            return Err(Error::Parse {
                line: line_no,
                col,
                msg: format!("variable `{name}` declared twice"),
            });
        }
        names.push(name.to_string());
    }
    Ok(VarOrder::new(names))
}

/// Parse a whole input file: variable declaration, then one polynomial per
/// line. Blank lines and `#` comments are skipped anywhere.
pub fn parse_system(text: &str) -> Result<(Arc<VarOrder>, Vec<Polynomial>)> {
    let mut order: Option<Arc<VarOrder>> = None;
    let mut polys: Vec<Polynomial> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        last_line = i + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        match &order {
            None => order = Some(parse_header(line, i + 1)?),
            Some(ord) => polys.push(parse_line(line, i + 1, ord)?),
        }
    }
    let Some(order) = order else {
        return Err(Error::Parse {
            line: 1,
            col: 1,
            msg: "missing vars declaration".into(),
        });
    };
    if polys.is_empty() {
        return Err(Error::Parse {
            line: last_line.max(1),
            col: 1,
            msg: "the system has no polynomials".into(),
        });
    }
    Ok((order, polys))
}

/// Comma-separated rational coordinates, e.g. `1,0,-1/2`.
pub fn parse_point(src: &str, nvars: usize) -> Result<Vec<BigRational>> {
    let mut out = Vec::new();
    for piece in src.split(',') {
        let t = piece.trim();
        let col = src.find(t).map(|i| i + 1).unwrap_or(1);
        let bad = || Error::Parse {
            line: 1,
            col,
            msg: format!("bad coordinate `{t}`"),
        };
        let (ns, ds) = match t.split_once('/') {
            Some((a, b)) => (a, Some(b)),
            None => (t, None),
        };
        let numer: BigInt = ns.parse().map_err(|_| bad())?;
        let denom: BigInt = match ds {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::from(1),
        };
        if denom.is_zero() {
            return Err(Error::Parse {
                line: 1,
                col,
                msg: "zero denominator".into(),
            });
        }
        out.push(BigRational::new(numer, denom));
    }
    if out.len() != nvars {
        return Err(Error::Parse {
            line: 1,
            col: 1,
            msg: format!("expected {nvars} coordinates, got {}", out.len()),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_small_system_with_comments_and_crlf() {
        let text = "# symmetric quadratics\r\nvars x, y, z\r\n\r\nx^2 + y + z - 1\r\nx + y^2 + z - 1 # middle\r\nx + y + z^2 - 1\r\n";
        let (ord, polys) = parse_system(text).unwrap();
        assert_eq!(ord.names(), &["x", "y", "z"]);
        assert_eq!(polys.len(), 3);
        assert_eq!(polys[0].to_string(), "z + y + x^2 - 1");
    }

    #[test]
    fn printing_and_reparsing_is_identity() {
        let ord = VarOrder::new(vec!["x", "y"]);
        for src in [
            "x^2*y - 2*x + 3",
            "-x + 1/2",
            "0",
            "(x + y)^3 - x*y",
            "7/3",
        ] {
            let p = parse_polynomial(src, &ord).unwrap();
            let q = parse_polynomial(&p.to_string(), &ord).unwrap();
            assert_eq!(p, q);
        }
    }

    #[test]
    fn reports_position_of_unknown_variables() {
        let ord = VarOrder::new(vec!["x"]);
        let err = parse_polynomial("x + w^2", &ord).unwrap_err();
        match err {
            Error::Parse { line, col, msg } => {
                assert_eq!((line, col), (1, 5));
                assert!(msg.contains('w'));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_juxtaposed_products_with_a_hint() {
        let ord = VarOrder::new(vec!["x"]);
        let err = parse_polynomial("2x", &ord).unwrap_err();
        match err {
            Error::Parse { col, msg, .. } => {
                assert_eq!(col, 2);
                assert!(msg.contains('*'));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_zero_denominators_and_empty_systems() {
        let ord = VarOrder::new(vec!["x"]);
        assert!(matches!(
            parse_polynomial("1/0", &ord),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_system("vars x\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_system("x + 1\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn header_errors_carry_line_numbers() {
        let err = parse_system("# intro\nvars x, x\nx\n").unwrap_err();
        match err {
            Error::Parse { line, msg, .. } => {
                assert_eq!(line, 2);
                assert!(msg.contains("twice"));
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_system("vars x\nx +\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn points_parse_signed_rationals() {
        let pt = parse_point(" 1, 0, -1/2", 3).unwrap();
        assert_eq!(pt[0], BigRational::from_integer(BigInt::from(1)));
        assert_eq!(
            pt[2],
            BigRational::new(BigInt::from(-1), BigInt::from(2))
        );
        assert!(parse_point("1,2", 3).is_err());
        assert!(parse_point("1,1/0,3", 3).is_err());
    }
}
