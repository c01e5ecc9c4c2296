//! Textual grammar for space expressions.
//!
//! ```text
//! expr   := I[p,q] | II[n] | III[n] | IV[n]
//!         | grass[k,n] | quadric[m] | lg[n] | so[n] | e6 | e7
//!         | ball[2n] | cyl[2n] | closed[name,2n]
//!         | dual(expr) | prod(a1*expr, a2*expr, ...)
//! scale  := integer | p/q | decimal   (nonzero, sign allowed)
//! ```
//!
//! `dual` swaps a classical bounded domain with its compact dual and is
//! resolved at parse time, so expressions round-trip through the canonical
//! printer of the resolved form.  Errors carry the byte position.

use num_rational::Ratio;
use symcap::capacities::{Rat, SpaceExpr};
use symcap::catalog::{domain_of_dual, dual_of_domain, CatalogEntry, HssctFamily};
use symcap::jts::JtsSpec;

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.msg)
    }
}

pub struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

type PResult<T> = std::result::Result<T, ParseError>;

pub fn parse_space(src: &str) -> PResult<SpaceExpr> {
    let mut p = Parser {
        src,
        bytes: src.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing input"));
    }
    Ok(expr)
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> PResult<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {:?}", c as char)))
        }
    }

    fn ident(&mut self) -> PResult<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self
            .peek()
            .map(|c| c.is_ascii_alphanumeric() || c == b'_')
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a name"));
        }
        Ok(&self.src[start..self.pos])
    }

    fn integer(&mut self) -> PResult<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse::<i64>()
            .map_err(|_| ParseError {
                pos: start,
                msg: "expected an integer".into(),
            })
    }

    /// Nonzero rational scale: integer, fraction p/q or decimal literal.
    fn scale(&mut self) -> PResult<Rat> {
        self.skip_ws();
        let start = self.pos;
        let whole = self.integer()?;
        let value = match self.peek() {
            Some(b'/') => {
                self.pos += 1;
                let den = self.integer()?;
                if den == 0 {
                    return Err(ParseError {
                        pos: start,
                        msg: "zero denominator".into(),
                    });
                }
                Ratio::new(whole, den)
            }
            Some(b'.') => {
                self.pos += 1;
                let digit_start = self.pos;
                while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
                    self.pos += 1;
                }
                if digit_start == self.pos {
                    return Err(self.err("expected digits after the decimal point"));
                }
                let frac_str = &self.src[digit_start..self.pos];
                let frac: i64 = frac_str.parse().map_err(|_| ParseError {
                    pos: digit_start,
                    msg: "fractional part too large".into(),
                })?;
                let den = 10i64.checked_pow(frac_str.len() as u32).ok_or(ParseError {
                    pos: digit_start,
                    msg: "fractional part too long".into(),
                })?;
                let sign = if whole < 0 || self.src[start..].starts_with('-') {
                    -1
                } else {
                    1
                };
                Ratio::new(whole * den + sign * frac, den)
            }
            _ => Ratio::from_integer(whole),
        };
        if value == Ratio::from_integer(0) {
            return Err(ParseError {
                pos: start,
                msg: "scales must be nonzero".into(),
            });
        }
        Ok(value)
    }

    fn bracket_args(&mut self) -> PResult<Vec<i64>> {
        self.expect(b'[')?;
        let mut args = vec![self.integer()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                    args.push(self.integer()?);
                }
                Some(b']') => {
                    self.pos += 1;
                    return Ok(args);
                }
                _ => return Err(self.err("expected ',' or ']'")),
            }
        }
    }

    fn positive(&self, v: i64, what: &str) -> PResult<usize> {
        if v <= 0 {
            Err(ParseError {
                pos: self.pos,
                msg: format!("{what} must be positive, got {v}"),
            })
        } else {
            Ok(v as usize)
        }
    }

    /// Validate family parameters against the catalog at parse time.
    fn hssct(&self, family: HssctFamily, at: usize) -> PResult<SpaceExpr> {
        CatalogEntry::lookup(family)
            .map(|_| SpaceExpr::Hssct(family))
            .map_err(|e| ParseError {
                pos: at,
                msg: e.to_string(),
            })
    }

    fn expr(&mut self) -> PResult<SpaceExpr> {
        self.skip_ws();
        let at = self.pos;
        let name = self.ident()?;
        let fail = |msg: String| ParseError { pos: at, msg };
        let to_space = |r: symcap::Result<SpaceExpr>| r.map_err(|e| fail(e.to_string()));
        match name {
            "I" => {
                let args = self.bracket_args()?;
                if args.len() != 2 {
                    return Err(fail("I[p,q] takes two arguments".into()));
                }
                let (p, q) = (self.positive(args[0], "p")?, self.positive(args[1], "q")?);
                to_space(JtsSpec::type_i(p, q).map(SpaceExpr::CartanDomain))
            }
            "II" | "III" | "IV" => {
                let args = self.bracket_args()?;
                if args.len() != 1 {
                    return Err(fail(format!("{name}[n] takes one argument")));
                }
                let n = self.positive(args[0], "n")?;
                let spec = match name {
                    "II" => JtsSpec::type_ii(n),
                    "III" => JtsSpec::type_iii(n),
                    _ => JtsSpec::type_iv(n),
                };
                to_space(spec.map(SpaceExpr::CartanDomain))
            }
            "grass" => {
                let args = self.bracket_args()?;
                if args.len() != 2 {
                    return Err(fail("grass[k,n] takes two arguments".into()));
                }
                let k = self.positive(args[0], "k")?;
                let n = self.positive(args[1], "n")? as u32;
                self.hssct(HssctFamily::Grass { k, n }, at)
            }
            "quadric" => {
                let args = self.bracket_args()?;
                if args.len() != 1 {
                    return Err(fail("quadric[m] takes one argument".into()));
                }
                let m = self.positive(args[0], "m")? as u32;
                self.hssct(HssctFamily::Quadric { m }, at)
            }
            "lg" => {
                let args = self.bracket_args()?;
                if args.len() != 1 {
                    return Err(fail("lg[n] takes one argument".into()));
                }
                let n = self.positive(args[0], "n")? as u32;
                self.hssct(HssctFamily::LGDual { n }, at)
            }
            "so" => {
                let args = self.bracket_args()?;
                if args.len() != 1 {
                    return Err(fail("so[n] takes one argument".into()));
                }
                let n = self.positive(args[0], "n")? as u32;
                self.hssct(HssctFamily::SODual { n }, at)
            }
            "e6" => self.hssct(HssctFamily::CayleyPlane, at),
            "e7" => self.hssct(HssctFamily::Freudenthal, at),
            "ball" | "cyl" => {
                let args = self.bracket_args()?;
                if args.len() != 1 {
                    return Err(fail(format!("{name}[2n] takes one argument")));
                }
                let real_dim = self.positive(args[0], "dimension")?;
                Ok(if name == "ball" {
                    SpaceExpr::Ball { real_dim }
                } else {
                    SpaceExpr::Cylinder { real_dim }
                })
            }
            "closed" => {
                self.expect(b'[')?;
                let mname = self.ident()?.to_string();
                self.expect(b',')?;
                let dim = self.integer()?;
                self.expect(b']')?;
                let real_dim = self.positive(dim, "dimension")?;
                Ok(SpaceExpr::ClosedGeneric {
                    name: mname,
                    real_dim,
                })
            }
            "dual" => {
                self.expect(b'(')?;
                let inner = self.expr()?;
                self.expect(b')')?;
                match inner {
                    SpaceExpr::CartanDomain(spec) => {
                        to_space(dual_of_domain(spec).map(SpaceExpr::Hssct))
                    }
                    SpaceExpr::Hssct(family) => {
                        to_space(domain_of_dual(family).map(SpaceExpr::CartanDomain))
                    }
                    SpaceExpr::Ball { real_dim } => Ok(SpaceExpr::Hssct(HssctFamily::Grass {
                        k: 1,
                        n: (real_dim / 2 + 1) as u32,
                    })),
                    other => Err(fail(format!("dual(...) is not defined for {other}"))),
                }
            }
            "prod" => {
                self.expect(b'(')?;
                let mut factors = Vec::new();
                loop {
                    let a = self.scale()?;
                    self.expect(b'*')?;
                    let x = self.expr()?;
                    factors.push((a, x));
                    self.skip_ws();
                    match self.peek() {
                        Some(b',') => {
                            self.pos += 1;
                        }
                        Some(b')') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.err("expected ',' or ')'")),
                    }
                }
                Ok(SpaceExpr::Product(factors))
            }
            other => Err(fail(format!("unknown space {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip(s: &str) -> String {
        let e = parse_space(s).unwrap();
        let printed = e.to_string();
        assert_eq!(parse_space(&printed).unwrap(), e, "round trip of {s}");
        printed
    }

    #[test]
    fn atoms() {
        assert_eq!(round_trip("I[2,3]"), "I[2,3]");
        assert_eq!(round_trip("grass[2,4]"), "grass[2,4]");
        assert_eq!(round_trip("e6"), "e6");
        assert_eq!(round_trip("ball[6]"), "ball[6]");
        assert_eq!(round_trip("closed[N,8]"), "closed[N,8]");
    }

    #[test]
    fn duals_resolve() {
        assert_eq!(round_trip("dual(I[2,2])"), "grass[2,4]");
        assert_eq!(round_trip("dual(grass[2,4])"), "I[2,2]");
        assert_eq!(round_trip("dual(IV[4])"), "quadric[4]");
        assert_eq!(round_trip("dual(ball[6])"), "grass[1,4]");
        assert!(parse_space("dual(cyl[4])").is_err());
        assert!(parse_space("dual(e6)").is_err());
    }

    #[test]
    fn products_and_scales() {
        assert_eq!(
            round_trip("prod(1*grass[2,4], 2*quadric[3])"),
            "prod(1*grass[2,4],2*quadric[3])"
        );
        assert_eq!(
            round_trip("prod(1.5*I[1,1], -3/2*II[3])"),
            "prod(3/2*I[1,1],-3/2*II[3])"
        );
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_space("bogus").unwrap_err();
        assert_eq!(e.pos, 0);
        let e = parse_space("prod(0*I[1,1])").unwrap_err();
        assert_eq!(e.pos, 5);
        assert!(parse_space("grass[2,4] junk").is_err());
        assert!(parse_space("I[2]").is_err());
        assert!(parse_space("quadric[2]").is_err());
    }
}
