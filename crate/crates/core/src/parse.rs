//! Recursive-descent parser for the expression language.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ('^' nonneg-integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! `integer '/' integer` needs no rule of its own: it parses as a quotient.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::space::SpaceRef;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
}

fn lex(text: &str) -> Result<Lexer> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("digits");
            toks.push((Tok::Int(n), start));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            toks.push((Tok::Ident(text[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            toks.push((Tok::Op(c), i));
            i += 1;
        } else {
            return Err(Error::Syntax { pos: i, msg: format!("unexpected character `{c}`") });
        }
    }
    toks.push((Tok::End, text.len()));
    Ok(Lexer { toks })
}

struct Parser<'a> {
    lexer: Lexer,
    pos: usize,
    space: &'a SpaceRef,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.lexer.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.lexer.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.lexer.toks[self.pos].0.clone();
        if self.pos + 1 < self.lexer.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax { pos: self.offset(), msg: msg.to_string() })
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let negate = match self.peek() {
            Tok::Op('-') => {
                self.bump();
                true
            }
            Tok::Op('+') => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Tok::Op('+') => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Op('-') => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Op('*') => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Tok::Op('/') => {
                    self.bump();
                    let at = self.offset();
                    let d = self.factor()?;
                    acc = acc.checked_div(&d).map_err(|_| Error::Syntax {
                        pos: at,
                        msg: "division by zero".to_string(),
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.peek() == &Tok::Op('^') {
            self.bump();
            match self.bump() {
                Tok::Int(n) => {
                    let e: u32 = u32::try_from(&n).map_err(|_| Error::Syntax {
                        pos: self.offset(),
                        msg: "exponent too large".to_string(),
                    })?;
                    if e > 100_000 {
                        return self.err("exponent too large");
                    }
                    return base.pow(e as i32);
                }
                _ => {
                    self.pos = self.pos.saturating_sub(1);
                    return self.err("expected a non-negative integer exponent");
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        let at = self.offset();
        match self.bump() {
            Tok::Int(n) => Ok(RatFunc::from_rational(self.space, n.into())),
            Tok::Ident(name) => match self.space.index(&name) {
                Some(i) => Ok(RatFunc::from_poly(&Poly::var(self.space, i))),
                None => Err(Error::UnknownSymbol(name)),
            },
            Tok::Op('(') => {
                let e = self.expr()?;
                if self.peek() != &Tok::Op(')') {
                    return self.err("expected `)`");
                }
                self.bump();
                Ok(e)
            }
            Tok::End => Err(Error::Syntax { pos: at, msg: "unexpected end of input".to_string() }),
            Tok::Op(c) => Err(Error::Syntax { pos: at, msg: format!("unexpected `{c}`") }),
        }
    }
}

/// Parse `text` as a rational function in `space`.
pub fn parse(text: &str, space: &SpaceRef) -> Result<RatFunc> {
    let lexer = lex(text)?;
    let mut p = Parser { lexer, pos: 0, space };
    let r = p.expr()?;
    if p.peek() != &Tok::End {
        return p.err("unexpected trailing input");
    }
    Ok(r)
}

/// Parse an expression that must denote a polynomial with integer coefficients.
pub fn parse_poly(text: &str, space: &SpaceRef) -> Result<Poly> {
    let r = parse(text, space)?;
    let (n, d) = r.numer_denom();
    if !d.is_one() {
        return Err(Error::Syntax { pos: 0, msg: "expected an integer polynomial".to_string() });
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::Space;

    fn sp() -> SpaceRef {
        Space::standard()
    }

    #[test]
    fn cancels_common_factor() {
        assert_eq!(parse("(b^2-1)/(b-1)", &sp()).unwrap(), parse("b+1", &sp()).unwrap());
    }

    #[test]
    fn rational_literal_and_leading_sign() {
        let r = parse(" -c", &sp()).unwrap();
        assert_eq!(r, parse("0-c", &sp()).unwrap());
        assert_eq!(
            parse("3/4*(b+1/b)+1/2", &sp()).unwrap(),
            parse("(3*b^2+2*b+3)/(4*b)", &sp()).unwrap()
        );
    }

    #[test]
    fn negative_exponent_is_rejected() {
        assert!(matches!(parse("x^-1", &sp()), Err(Error::Syntax { pos: 2, .. })));
    }

    #[test]
    fn unknown_symbol_is_reported() {
        assert_eq!(parse("q+1", &sp()), Err(Error::UnknownSymbol("q".into())));
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert!(matches!(parse("(a+b", &sp()), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse("a+*b", &sp()), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse("a $ b", &sp()), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse("1/(a-a)", &sp()), Err(Error::Syntax { pos: 2, .. })));
    }
}
