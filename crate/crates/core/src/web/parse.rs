//! Parser for the web DSL.
//!
//! ```text
//! top    := term ('@' term)*
//! term   := chain ('+' chain)*
//! chain  := slice (';' slice)*
//! slice  := 'coil' '(' obj ')' | 'coil_inv' '(' obj ')' | planar
//! planar := atom ('*' atom)*
//! atom   := NAME '(' ints ')' | 'id' '(' obj ')'
//!         | 'scalar' STRING '*' atom | '(' term ')'
//! obj    := '[' ints? ']'
//! ```
//! `;` composes bottom to top; `*` binds tighter than `;`. Comments run from
//! `#` to end of line.

use crate::error::{Error, Result};
use crate::rep::coil::Direction;
use crate::scalar::parse_scalar;

use super::ast::{Gen, WebTerm};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Int(i32),
    Str(String),
    Semi,
    Star,
    Plus,
    At,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Eof,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            chars: src.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn bump_char(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            line: self.line,
            col: self.col,
            msg: msg.to_string(),
        }
    }

    fn next(&mut self) -> Result<(Tok, usize, usize)> {
        loop {
            match self.chars.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump_char();
                }
                Some('#') => {
                    while let Some(c) = self.bump_char() {
                        if c == '\n' {
                            break;
                        }
                    }
                }
                _ => break,
            }
        }
        let (line, col) = (self.line, self.col);
        let Some(&c) = self.chars.peek() else {
            return Ok((Tok::Eof, line, col));
        };
        let tok = match c {
            ';' => {
                self.bump_char();
                Tok::Semi
            }
            '*' => {
                self.bump_char();
                Tok::Star
            }
            '+' => {
                self.bump_char();
                Tok::Plus
            }
            '@' => {
                self.bump_char();
                Tok::At
            }
            ',' => {
                self.bump_char();
                Tok::Comma
            }
            '(' => {
                self.bump_char();
                Tok::LParen
            }
            ')' => {
                self.bump_char();
                Tok::RParen
            }
            '[' => {
                self.bump_char();
                Tok::LBracket
            }
            ']' => {
                self.bump_char();
                Tok::RBracket
            }
            '"' => {
                self.bump_char();
                let mut s = String::new();
                loop {
                    match self.bump_char() {
                        Some('"') => break,
                        Some(c) => s.push(c),
                        None => return Err(self.err("unterminated string")),
                    }
                }
                Tok::Str(s)
            }
            '-' | '0'..='9' => {
                let mut s = String::new();
                s.push(self.bump_char().unwrap());
                while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
                    s.push(self.bump_char().unwrap());
                }
                let n: i32 = s
                    .parse()
                    .map_err(|_| self.err("expected an integer"))?;
                Tok::Int(n)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while matches!(self.chars.peek(), Some(c) if c.is_ascii_alphanumeric() || *c == '_')
                {
                    s.push(self.bump_char().unwrap());
                }
                Tok::Name(s)
            }
            c => return Err(self.err(&format!("unexpected character '{c}'"))),
        };
        Ok((tok, line, col))
    }
}

pub struct Parser<'a> {
    lex: Lexer<'a>,
    cur: Tok,
    line: usize,
    col: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self> {
        let mut lex = Lexer::new(src);
        let (cur, line, col) = lex.next()?;
        Ok(Parser { lex, cur, line, col })
    }

    fn bump(&mut self) -> Result<()> {
        let (tok, line, col) = self.lex.next()?;
        self.cur = tok;
        self.line = line;
        self.col = col;
        Ok(())
    }

    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            line: self.line,
            col: self.col,
            msg: msg.to_string(),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.cur == tok {
            self.bump()
        } else {
            Err(self.err(&format!("expected {what}")))
        }
    }

    fn parse_int(&mut self) -> Result<i32> {
        if let Tok::Int(n) = self.cur {
            self.bump()?;
            Ok(n)
        } else {
            Err(self.err("expected an integer"))
        }
    }

    fn parse_obj(&mut self) -> Result<Vec<i32>> {
        self.expect(Tok::LBracket, "'['")?;
        let mut word = Vec::new();
        if self.cur != Tok::RBracket {
            word.push(self.parse_int()?);
            while self.cur == Tok::Comma {
                self.bump()?;
                word.push(self.parse_int()?);
            }
        }
        self.expect(Tok::RBracket, "']'")?;
        Ok(word)
    }

    fn parse_args(&mut self, arity: usize, name: &str) -> Result<Vec<i32>> {
        self.expect(Tok::LParen, "'('")?;
        let mut args = Vec::new();
        args.push(self.parse_int()?);
        while self.cur == Tok::Comma {
            self.bump()?;
            args.push(self.parse_int()?);
        }
        self.expect(Tok::RParen, "')'")?;
        if args.len() != arity {
            return Err(self.err(&format!("{name} takes {arity} argument(s)")));
        }
        Ok(args)
    }

    fn parse_atom(&mut self) -> Result<WebTerm> {
        match self.cur.clone() {
            Tok::LParen => {
                self.bump()?;
                let t = self.parse_expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(t)
            }
            Tok::Name(name) => {
                self.bump()?;
                match name.as_str() {
                    "id" => {
                        self.expect(Tok::LParen, "'('")?;
                        let w = self.parse_obj()?;
                        self.expect(Tok::RParen, "')'")?;
                        Ok(WebTerm::Id(w))
                    }
                    "scalar" => {
                        let s = if let Tok::Str(s) = self.cur.clone() {
                            self.bump()?;
                            s
                        } else {
                            return Err(self.err("expected a quoted scalar"));
                        };
                        let c = parse_scalar(&s)?;
                        self.expect(Tok::Star, "'*'")?;
                        let t = self.parse_atom()?;
                        Ok(WebTerm::Scale(c, Box::new(t)))
                    }
                    "merge" => {
                        let a = self.parse_args(2, "merge")?;
                        Ok(WebTerm::Gen(Gen::Merge(a[0], a[1])))
                    }
                    "split" => {
                        let a = self.parse_args(2, "split")?;
                        Ok(WebTerm::Gen(Gen::Split(a[0], a[1])))
                    }
                    "dmerge" => {
                        let a = self.parse_args(2, "dmerge")?;
                        Ok(WebTerm::Gen(Gen::DMerge(a[0], a[1])))
                    }
                    "dsplit" => {
                        let a = self.parse_args(2, "dsplit")?;
                        Ok(WebTerm::Gen(Gen::DSplit(a[0], a[1])))
                    }
                    "capL" => Ok(WebTerm::Gen(Gen::CapL(self.parse_args(1, "capL")?[0]))),
                    "capR" => Ok(WebTerm::Gen(Gen::CapR(self.parse_args(1, "capR")?[0]))),
                    "cupL" => Ok(WebTerm::Gen(Gen::CupL(self.parse_args(1, "cupL")?[0]))),
                    "cupR" => Ok(WebTerm::Gen(Gen::CupR(self.parse_args(1, "cupR")?[0]))),
                    "over" => {
                        let a = self.parse_args(2, "over")?;
                        Ok(WebTerm::Gen(Gen::Over(a[0], a[1])))
                    }
                    "under" => {
                        let a = self.parse_args(2, "under")?;
                        Ok(WebTerm::Gen(Gen::Under(a[0], a[1])))
                    }
                    "coil" | "coil_inv" => {
                        Err(self.err("coils are whole slices; use ';' around them"))
                    }
                    other => Err(Error::UnknownGenerator(other.to_string())),
                }
            }
            _ => Err(self.err("expected a generator, 'id', 'scalar', or '('")),
        }
    }

    fn parse_planar(&mut self) -> Result<WebTerm> {
        let mut t = self.parse_atom()?;
        while self.cur == Tok::Star {
            self.bump()?;
            let rhs = self.parse_atom()?;
            t = WebTerm::tensor(t, rhs);
        }
        Ok(t)
    }

    fn parse_slice(&mut self) -> Result<WebTerm> {
        if let Tok::Name(name) = self.cur.clone() {
            if name == "coil" || name == "coil_inv" {
                self.bump()?;
                self.expect(Tok::LParen, "'('")?;
                let w = self.parse_obj()?;
                self.expect(Tok::RParen, "')'")?;
                let dir = if name == "coil" {
                    Direction::Winding
                } else {
                    Direction::Inverse
                };
                return Ok(WebTerm::CoilSlice(w, dir));
            }
        }
        self.parse_planar()
    }

    fn parse_chain(&mut self) -> Result<WebTerm> {
        let mut t = self.parse_slice()?;
        while self.cur == Tok::Semi {
            self.bump()?;
            let top = self.parse_slice()?;
            t = WebTerm::compose(top, t);
        }
        Ok(t)
    }

    fn parse_term(&mut self) -> Result<WebTerm> {
        let mut t = self.parse_chain()?;
        while self.cur == Tok::Plus {
            self.bump()?;
            let rhs = self.parse_chain()?;
            t = WebTerm::Sum(Box::new(t), Box::new(rhs));
        }
        Ok(t)
    }

    fn parse_expr(&mut self) -> Result<WebTerm> {
        let mut t = self.parse_term()?;
        while self.cur == Tok::At {
            self.bump()?;
            let rhs = self.parse_term()?;
            t = WebTerm::SkeinTensor(Box::new(t), Box::new(rhs));
        }
        Ok(t)
    }

    fn parse_top(&mut self) -> Result<WebTerm> {
        let t = self.parse_expr()?;
        if self.cur != Tok::Eof {
            return Err(self.err("trailing input"));
        }
        Ok(t)
    }
}

/// Parse a web term from DSL text.
pub fn parse(src: &str) -> Result<WebTerm> {
    Parser::new(src)?.parse_top()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_terms() {
        let t = parse("split(1,1) ; merge(1,1)").unwrap();
        assert_eq!(
            t,
            WebTerm::compose(
                WebTerm::Gen(Gen::Merge(1, 1)),
                WebTerm::Gen(Gen::Split(1, 1))
            )
        );
        let t = parse("coil([1,1])").unwrap();
        assert_eq!(t, WebTerm::CoilSlice(vec![1, 1], Direction::Winding));
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse("merge(1,)") {
            Err(Error::Syntax { line, col, .. }) => {
                assert_eq!(line, 1);
                assert!(col >= 8);
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(
            parse("frobnicate(1)"),
            Err(Error::UnknownGenerator(_))
        ));
    }

    #[test]
    fn comments_and_whitespace() {
        let t = parse("# a digon\n  split(1,1)\n  ; merge(1,1)  # closes it\n").unwrap();
        assert_eq!(
            t,
            WebTerm::compose(
                WebTerm::Gen(Gen::Merge(1, 1)),
                WebTerm::Gen(Gen::Split(1, 1))
            )
        );
    }

    #[test]
    fn roundtrip_printing() {
        let sources = [
            "split(1,1) ; merge(1,1)",
            "coil([1,1]) ; coil_inv([1,1])",
            "merge(1,1) * id([2]) ; over(2,2)",
            "(coil([1])) @ (id([1]))",
            "scalar \"v + v^-1\" * id([1])",
            "cupL(1) ; capR(1)",
            "id([1,-2,3])",
            "split(1,1) + merge(1,1) ; split(1,1)",
        ];
        for src in sources {
            let t = parse(src).unwrap();
            let printed = t.to_string();
            let back = parse(&printed).unwrap();
            assert_eq!(t, back, "roundtrip failed: {src} printed as {printed}");
        }
    }

    #[test]
    fn flips_are_involutive() {
        let t = parse("cupL(2) ; over(2,2) * id([-2]) ; capR(2) * id([2,-2]) ; coil([2,-2])")
            .unwrap();
        assert_eq!(t.flip_updown().flip_updown(), t);
        assert_eq!(t.flip_leftright().flip_leftright(), t);
        // merge flips to split
        let m = parse("merge(1,2)").unwrap();
        assert_eq!(m.flip_updown(), parse("split(1,2)").unwrap());
        assert_eq!(m.flip_leftright(), parse("merge(2,1)").unwrap());
    }
}
