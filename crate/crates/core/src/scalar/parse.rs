//! Parser for the scalar string syntax: `3*v^-2*u1^2 + u2`, with `/` for
//! fractions over denominator atoms as printed by `FieldElem`.

use super::field::{Atom, FieldElem};
use super::laurent::{Expo, LaurentPoly};
use crate::error::Error;

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i128),
    Var(usize), // 0 = v, i >= 1 = u_i
    Caret,
    Star,
    Plus,
    Minus,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Eof,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::ScalarSyntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn next(&mut self) -> Result<Tok, Error> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(Tok::Eof);
        }
        let c = self.src[self.pos];
        self.pos += 1;
        Ok(match c {
            b'^' => Tok::Caret,
            b'*' => Tok::Star,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b'v' => Tok::Var(0),
            b'u' => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Err(self.err("expected index after 'u'"));
                }
                let idx: usize = std::str::from_utf8(&self.src[start..self.pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| self.err("bad u index"))?;
                if idx == 0 {
                    return Err(self.err("u indices are 1-based"));
                }
                Tok::Var(idx)
            }
            b'0'..=b'9' => {
                let start = self.pos - 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: i128 = std::str::from_utf8(&self.src[start..self.pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| self.err("integer too large"))?;
                Tok::Int(n)
            }
            _ => return Err(self.err(&format!("unexpected character '{}'", c as char))),
        })
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
    cur: Tok,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self, Error> {
        let mut lex = Lexer::new(src);
        let cur = lex.next()?;
        Ok(Parser { lex, cur })
    }

    fn bump(&mut self) -> Result<(), Error> {
        self.cur = self.lex.next()?;
        Ok(())
    }

    fn err(&self, msg: &str) -> Error {
        Error::ScalarSyntax {
            pos: self.lex.pos,
            msg: msg.to_string(),
        }
    }

    fn parse_exponent(&mut self) -> Result<i32, Error> {
        // after '^': optional '-' then integer
        let neg = if self.cur == Tok::Minus {
            self.bump()?;
            true
        } else {
            false
        };
        if let Tok::Int(n) = self.cur {
            self.bump()?;
            let e = i32::try_from(n).map_err(|_| self.err("exponent too large"))?;
            Ok(if neg { -e } else { e })
        } else {
            Err(self.err("expected integer exponent"))
        }
    }

    /// factor := INT | var ('^' exp)? | '(' poly ')'
    fn parse_factor(&mut self) -> Result<LaurentPoly, Error> {
        match self.cur.clone() {
            Tok::Int(n) => {
                self.bump()?;
                Ok(LaurentPoly::constant(n))
            }
            Tok::Var(slot) => {
                self.bump()?;
                let e = if self.cur == Tok::Caret {
                    self.bump()?;
                    self.parse_exponent()?
                } else {
                    1
                };
                let expo = if slot == 0 {
                    Expo::v_pow(e)
                } else {
                    Expo::u_pow(slot, e)
                };
                Ok(LaurentPoly::monomial(expo, 1))
            }
            Tok::LParen => {
                self.bump()?;
                let p = self.parse_poly()?;
                if self.cur != Tok::RParen {
                    return Err(self.err("expected ')'"));
                }
                self.bump()?;
                Ok(p)
            }
            _ => Err(self.err("expected a term")),
        }
    }

    /// product := factor ('*' factor)*
    fn parse_product(&mut self) -> Result<LaurentPoly, Error> {
        let mut p = self.parse_factor()?;
        while self.cur == Tok::Star {
            self.bump()?;
            p = &p * &self.parse_factor()?;
        }
        Ok(p)
    }

    /// poly := ('-')? product (('+'|'-') product)*
    fn parse_poly(&mut self) -> Result<LaurentPoly, Error> {
        let mut neg = false;
        if self.cur == Tok::Minus {
            self.bump()?;
            neg = true;
        }
        let mut p = self.parse_product()?;
        if neg {
            p = -p;
        }
        loop {
            match self.cur {
                Tok::Plus => {
                    self.bump()?;
                    p += &self.parse_product()?;
                }
                Tok::Minus => {
                    self.bump()?;
                    p -= &self.parse_product()?;
                }
                _ => return Ok(p),
            }
        }
    }

    /// atom := '[' INT ']' | '(' poly ')'
    fn parse_atom(&mut self) -> Result<Atom, Error> {
        match self.cur {
            Tok::LBracket => {
                self.bump()?;
                let m = if let Tok::Int(n) = self.cur {
                    self.bump()?;
                    i64::try_from(n).map_err(|_| self.err("quantum integer too large"))?
                } else {
                    return Err(self.err("expected integer inside '[...]'"));
                };
                if self.cur != Tok::RBracket {
                    return Err(self.err("expected ']'"));
                }
                self.bump()?;
                if m < 2 {
                    return Err(self.err("quantum integer atoms require m >= 2"));
                }
                Ok(Atom::QInt(m))
            }
            Tok::LParen => {
                self.bump()?;
                let p = self.parse_poly()?;
                if self.cur != Tok::RParen {
                    return Err(self.err("expected ')'"));
                }
                self.bump()?;
                if p.is_zero() {
                    return Err(self.err("zero denominator atom"));
                }
                Ok(Atom::Poly(p))
            }
            _ => Err(self.err("expected denominator atom")),
        }
    }
}

/// Parse the scalar syntax, optionally with a `/ atom*atom` fraction tail.
pub fn parse_scalar(src: &str) -> Result<FieldElem, Error> {
    let mut p = Parser::new(src)?;
    let num = p.parse_poly()?;
    let mut elem = FieldElem::from_poly(num);
    if p.cur == Tok::Slash {
        p.bump()?;
        loop {
            let atom = p.parse_atom()?;
            elem = &elem * &FieldElem::from_poly(atom.poly()).recip();
            if p.cur == Tok::Star {
                p.bump()?;
            } else {
                break;
            }
        }
    }
    if p.cur != Tok::Eof {
        return Err(p.err("trailing input"));
    }
    Ok(elem)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_examples() {
        for s in [
            "3*v^-2*u1^2 + u2",
            "v + v^-1",
            "-u1 + 2*v^3",
            "1",
            "0",
        ] {
            let x = parse_scalar(s).unwrap();
            let printed = x.to_string();
            let y = parse_scalar(&printed).unwrap();
            assert_eq!(x, y, "roundtrip failed for {s}");
        }
    }

    #[test]
    fn fraction_parsing() {
        let x = parse_scalar("v + v^-1 / [2]").unwrap();
        assert!(x.is_one());
        let y = parse_scalar("u1 - u2 / (u1-u2)").unwrap();
        assert!(y.is_one());
    }

    #[test]
    fn syntax_errors() {
        assert!(parse_scalar("v^").is_err());
        assert!(parse_scalar("u0").is_err());
        assert!(parse_scalar("3 +").is_err());
        assert!(parse_scalar("w").is_err());
    }
}
