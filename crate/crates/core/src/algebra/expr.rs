//! A small expression language shared by the polynomial parser and the
//! command-line literal syntax.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')' | '-' atom
//! ```
//!
//! Minus is plus in characteristic two; integer literals are read modulo 2.

use super::field::Ring;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u64),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(u64),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>, Error> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let v = s.parse().map_err(|_| Error::Parse(format!("integer too large: {s}")))?;
            out.push(Tok::Int(v));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {src:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, Error> {
        let mut lhs = self.term()?;
        while self.eat('+') || self.eat('-') {
            let rhs = self.term()?;
            lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, Error> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat('*') {
                let rhs = self.factor()?;
                lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
            } else if self.eat('/') {
                let rhs = self.factor()?;
                lhs = Expr::Div(Box::new(lhs), Box::new(rhs));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, Error> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    Ok(Expr::Pow(Box::new(base), n))
                }
                other => Err(Error::Parse(format!("expected exponent, found {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, Error> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Var(s))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                self.atom()
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr, Error> {
        let toks = tokenize(src)?;
        if toks.is_empty() {
            return Err(Error::Parse("empty expression".into()));
        }
        let mut p = Parser { toks, pos: 0 };
        let e = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(Error::Parse(format!("trailing input in {src:?}")));
        }
        Ok(e)
    }

    /// Evaluates in the ring of `one`; division requires a unit divisor.
    pub fn eval<R: Ring>(&self, one: &R, resolve: &dyn Fn(&str) -> Option<R>) -> Result<R, Error> {
        Ok(match self {
            Expr::Int(n) => one.from_bit(n % 2 == 1),
            Expr::Var(name) => {
                resolve(name).ok_or_else(|| Error::Parse(format!("unknown symbol {name:?}")))?
            }
            Expr::Add(a, b) => a.eval(one, resolve)? + b.eval(one, resolve)?,
            Expr::Mul(a, b) => a.eval(one, resolve)? * b.eval(one, resolve)?,
            Expr::Div(a, b) => {
                let d = b.eval(one, resolve)?;
                let inv = d
                    .unit_inverse()
                    .ok_or_else(|| Error::Parse(format!("division by non-unit {d:?}")))?;
                a.eval(one, resolve)? * inv
            }
            Expr::Pow(a, n) => a.eval(one, resolve)?.pow(*n),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Gf;

    #[test]
    fn parses_precedence() {
        let e = Expr::parse("w^2*t + 1").unwrap();
        assert!(matches!(e, Expr::Add(_, _)));
        assert!(Expr::parse("(w").is_err());
        assert!(Expr::parse("w $").is_err());
    }

    #[test]
    fn evaluates_in_a_field() {
        let one = Gf::one(2);
        let w = Gf::generator(2);
        let v = Expr::parse("w^2 + w + 1").unwrap().eval(&one, &|s| (s == "w").then_some(w)).unwrap();
        assert!(v.is_zero());
        let q = Expr::parse("1/w").unwrap().eval(&one, &|s| (s == "w").then_some(w)).unwrap();
        assert_eq!(q * w, one);
    }
}
