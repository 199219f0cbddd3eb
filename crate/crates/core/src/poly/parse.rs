//! Reader for the textual polynomial form produced by `Display`:
//! `±c*v1^e1*v2^e2 ± ...`. Factors within a term may appear in any order and
//! a bare integer factor may appear anywhere in the product.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::{Monomial, Poly, PolyError, VarContext};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: &'a Arc<VarContext>,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
            {
                self.pos += 1;
            }
            Some(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
        } else {
            None
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigInt), PolyError> {
        let mut coeff = BigInt::one();
        let mut exps = vec![0u32; self.ctx.len()];
        loop {
            if let Some(d) = self.digits() {
                coeff *= d.parse::<BigInt>().expect("digit run");
            } else if let Some(name) = self.ident() {
                let Some(slot) = self.ctx.slot_by_name(name) else {
                    return Err(PolyError::UnknownVariable(name.to_string()));
                };
                let exp = if self.eat(b'^') {
                    match self.digits() {
                        Some(d) => match d.parse::<u32>() {
                            Ok(e) => e,
                            Err(_) => return self.err("exponent out of range"),
                        },
                        None => return self.err("expected exponent after '^'"),
                    }
                } else {
                    1
                };
                exps[slot] += exp;
            } else {
                return self.err("expected integer or variable");
            }
            if !self.eat(b'*') {
                break;
            }
        }
        Ok((Monomial::from_exponents(exps), coeff))
    }

    fn poly(&mut self) -> Result<Poly, PolyError> {
        let mut terms = Vec::new();
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negative { -c } else { c }));
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    negative = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negative = true;
                }
                Some(_) => return self.err("expected '+', '-' or end of input"),
            }
        }
        Ok(Poly::from_terms(self.ctx, terms))
    }
}

impl Poly {
    /// Parses the text form used by `Display`. Variable names must belong to
    /// `ctx`.
    pub fn parse(ctx: &Arc<VarContext>, text: &str) -> Result<Poly, PolyError> {
        let mut parser = Parser {
            src: text.as_bytes(),
            pos: 0,
            ctx,
        };
        if parser.peek().is_none() {
            return parser.err("empty polynomial");
        }
        parser.poly()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Bank;

    fn ctx() -> Arc<VarContext> {
        VarContext::builder()
            .indexed(Bank::X, 2)
            .indexed(Bank::Y, 1)
            .build()
    }

    #[test]
    fn round_trip_display() {
        let c = ctx();
        for s in ["x1^2*x2 - 3*y1", "-x1 + 1", "0", "12*x1*x2*y1^3 + x2^2 - 7"] {
            assert_eq!(Poly::parse(&c, s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn collects_like_terms() {
        let c = ctx();
        let q = Poly::parse(&c, "x1 + 2 * x1 - 3*x1 + x2*x2").unwrap();
        assert_eq!(q.to_string(), "x2^2");
    }

    #[test]
    fn errors() {
        let c = ctx();
        assert_eq!(
            Poly::parse(&c, "x3 + 1"),
            Err(PolyError::UnknownVariable("x3".into()))
        );
        assert!(matches!(
            Poly::parse(&c, "x1 +"),
            Err(PolyError::Parse { .. })
        ));
        assert!(matches!(
            Poly::parse(&c, "x1^"),
            Err(PolyError::Parse { .. })
        ));
        assert!(matches!(
            Poly::parse(&c, "   "),
            Err(PolyError::Parse { .. })
        ));
        assert!(matches!(
            Poly::parse(&c, "x1 x2"),
            Err(PolyError::Parse { .. })
        ));
    }
}
