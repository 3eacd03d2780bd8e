//! Recursive-descent reader for the polynomial grammar:
//!
//! ```text
//! expression := ['+'|'-'] term (('+'|'-') term)*
//! term       := factor ('*' factor)*
//! factor     := rational | variable ('^' nat)? | '(' expression ')' ('^' nat)?
//! rational   := int ('/' posint)?
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use super::frame::VariableFrame;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("digits parse");
            out.push((start, Token::Int(n)));
            continue;
        }
        if c.is_ascii_alphabetic() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Token::Ident(text[start..i].to_string())));
            continue;
        }
        let tok = match c {
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            other => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((start, tok));
        i += c.len_utf8();
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    frame: &'a VariableFrame,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expression(&mut self) -> Result<Polynomial> {
        let negate_first = match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                true
            }
            Some(Token::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate_first {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Token::Star) = self.peek() {
            self.bump();
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<Option<u32>> {
        if self.peek() != Some(&Token::Caret) {
            return Ok(None);
        }
        self.bump();
        match self.peek() {
            Some(Token::Int(n)) => {
                let e = u32::try_from(n.clone());
                match e {
                    Ok(e) => {
                        self.bump();
                        Ok(Some(e))
                    }
                    Err(_) => self.error("exponent too large"),
                }
            }
            _ => self.error("expected a non-negative integer exponent"),
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let arity = self.frame.len();
        let offset = self.offset();
        match self.bump() {
            Some(Token::Int(n)) => {
                if self.peek() == Some(&Token::Slash) {
                    self.bump();
                    let den_offset = self.offset();
                    match self.bump() {
                        Some(Token::Int(d)) => {
                            if d.is_zero() {
                                return Err(Error::ZeroDenominator(den_offset));
                            }
                            Ok(Polynomial::constant(arity, Rational::new(n, d)))
                        }
                        _ => Err(Error::Syntax {
                            pos: den_offset,
                            msg: "expected a positive integer denominator".into(),
                        }),
                    }
                } else {
                    Ok(Polynomial::constant(arity, Rational::from_integer(n)))
                }
            }
            Some(Token::Ident(name)) => {
                let i = self
                    .frame
                    .index_of(&name)
                    .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                let v = Polynomial::var(arity, i);
                Ok(match self.exponent()? {
                    Some(e) => v.pow(e),
                    None => v,
                })
            }
            Some(Token::LParen) => {
                let inner = self.expression()?;
                if self.bump() != Some(Token::RParen) {
                    self.pos -= 1;
                    return self.error("expected `)`");
                }
                Ok(match self.exponent()? {
                    Some(e) => inner.pow(e),
                    None => inner,
                })
            }
            _ => Err(Error::Syntax {
                pos: offset,
                msg: "expected a number, variable or `(`".into(),
            }),
        }
    }
}

/// Parses `text` against `frame`.
pub fn parse(text: &str, frame: &VariableFrame) -> Result<Polynomial> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Syntax {
            pos: 0,
            msg: "empty expression".into(),
        });
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        frame,
    };
    let p = parser.expression()?;
    if parser.pos < parser.tokens.len() {
        return parser.error("unexpected trailing input");
    }
    Ok(p)
}

/// Identifiers occurring in `text`, in order of first appearance.
pub fn identifiers(text: &str) -> Result<Vec<String>> {
    let mut seen = Vec::new();
    for (_, t) in tokenize(text)? {
        if let Token::Ident(name) = t {
            if !seen.contains(&name) {
                seen.push(name);
            }
        }
    }
    Ok(seen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_frac};

    fn fr() -> VariableFrame {
        VariableFrame::standard(2)
    }

    #[test]
    fn parse_examples() {
        let f = parse("x1 + x2^3", &fr()).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.coefficient_of(&[1, 0]), rat(1));
        assert_eq!(f.coefficient_of(&[0, 3]), rat(1));

        let g = parse("3/2*x1*x2 - 1", &fr()).unwrap();
        assert_eq!(g.coefficient_of(&[1, 1]), rat_frac(3, 2));
        assert_eq!(g.coefficient_of(&[0, 0]), rat(-1));
        assert_eq!(g.num_terms(), 2);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse("x1^(-1)", &fr()), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse("x3", &fr()), Err(Error::UnknownVariable(v)) if v == "x3"));
        assert!(matches!(parse("1/0*x1", &fr()), Err(Error::ZeroDenominator(2))));
        assert!(matches!(parse("x1 +", &fr()), Err(Error::Syntax { .. })));
        assert!(matches!(parse("x1 x2", &fr()), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse("x1/2", &fr()), Err(Error::Syntax { .. })));
        assert!(matches!(parse("", &fr()), Err(Error::Syntax { .. })));
        assert!(matches!(parse("(x1", &fr()), Err(Error::Syntax { .. })));
    }

    #[test]
    fn whitespace_and_grouping() {
        let a = parse(" ( x1 + 1 ) ^ 2 ", &fr()).unwrap();
        let b = parse("x1^2+2*x1+1", &fr()).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse("-x1 + 2", &fr()).unwrap(), -parse("x1 - 2", &fr()).unwrap());
    }
}
