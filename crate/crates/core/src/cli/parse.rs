//! Recursive-descent parser for rational functions and derivations.
//!
//! ```text
//! derivation := ["-"] term { ("+" | "-") term }
//! term       := [ ratexpr ] ("dx" | "dy")
//! ratexpr    := factor { ("*" | "/") factor }
//! factor     := atom [ "^" ["-"] integer ]
//! atom       := integer | "x" | "y" | "t" | "(" expr ")"
//! expr       := ["-"] ratexpr { ("+" | "-") ratexpr }
//! ```
//!
//! `t` names the first variable, for univariate input.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polyrat::{RatFunc, Var, Q};
use crate::vectorfield::Derivation;

const MAX_EXPONENT: i64 = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Word(String),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Lexer> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (at, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|p| p.1).collect();
            toks.push((Tok::Int(s.parse().expect("digits")), at));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_alphanumeric() {
                i += 1;
            }
            toks.push((Tok::Word(chars[start..i].iter().map(|p| p.1).collect()), at));
        } else if "+-*/^();".contains(c) {
            toks.push((Tok::Sym(c), at));
            i += 1;
        } else {
            return Err(Error::SyntaxError {
                position: at,
                expected: "a number, x, y, t, dx, dy or an operator".into(),
            });
        }
    }
    toks.push((Tok::End, text.len()));
    Ok(Lexer { toks, pos: 0 })
}

impl Lexer {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn at(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(Error::SyntaxError { position: self.at(), expected: expected.into() })
    }

    fn basis(&self) -> Option<Var> {
        match self.peek() {
            Tok::Word(w) if w == "dx" => Some(Var::X),
            Tok::Word(w) if w == "dy" => Some(Var::Y),
            _ => None,
        }
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(RatFunc::constant(Q::from_integer(n)))
            }
            Tok::Word(w) => match w.as_str() {
                "x" | "t" => {
                    self.bump();
                    Ok(RatFunc::var(Var::X))
                }
                "y" => {
                    self.bump();
                    Ok(RatFunc::var(Var::Y))
                }
                _ => self.fail("a number, x, y, t or \"(\""),
            },
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.fail("\")\"");
                }
                Ok(e)
            }
            _ => self.fail("a number, x, y, t or \"(\""),
        }
    }

    fn factor(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let Tok::Int(n) = self.peek().clone() else {
            return self.fail("an integer exponent");
        };
        let e: i64 = match i64::try_from(&n) {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => return self.fail("an exponent of at most 512"),
        };
        self.bump();
        let e = if neg { -e } else { e };
        if e < 0 && base.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(base.pow(e as i32))
    }

    fn ratexpr(&mut self) -> Result<RatFunc> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.eat('/') {
                acc = acc.div(&self.factor()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let neg = self.eat('-');
        let mut acc = self.ratexpr()?;
        if neg {
            acc = -&acc;
        }
        loop {
            if self.eat('+') {
                acc = &acc + &self.ratexpr()?;
            } else if self.eat('-') {
                acc = &acc - &self.ratexpr()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Derivation> {
        let coef = if self.basis().is_some() { RatFunc::one() } else { self.ratexpr()? };
        let Some(v) = self.basis() else {
            return self.fail("\"dx\" or \"dy\"");
        };
        self.bump();
        Ok(match v {
            Var::X => Derivation::new(coef, RatFunc::zero()),
            Var::Y => Derivation::new(RatFunc::zero(), coef),
        })
    }

    fn derivation(&mut self) -> Result<Derivation> {
        let neg = self.eat('-');
        let mut acc = self.term()?;
        if neg {
            acc = -&acc;
        }
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn finish(&self, expected: &str) -> Result<()> {
        match self.peek() {
            Tok::End => Ok(()),
            _ => self.fail(expected),
        }
    }
}

pub fn parse_ratfunc(text: &str) -> Result<RatFunc> {
    let mut lx = lex(text)?;
    let f = lx.expr()?;
    lx.finish("an operator or end of input")?;
    Ok(f)
}

pub fn parse_derivation(text: &str) -> Result<Derivation> {
    let mut lx = lex(text)?;
    let d = lx.derivation()?;
    lx.finish("\"+\", \"-\" or end of input")?;
    Ok(d)
}

/// Semicolon-separated derivations.
pub fn parse_generators(text: &str) -> Result<Vec<Derivation>> {
    let mut lx = lex(text)?;
    let mut out = vec![lx.derivation()?];
    while lx.eat(';') {
        if *lx.peek() == Tok::End {
            break;
        }
        out.push(lx.derivation()?);
    }
    lx.finish("\"+\", \"-\", \";\" or end of input")?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyrat::q;

    #[test]
    fn spec_examples() {
        let d = parse_derivation("y^2 dx - (x/(y+1)) dy").unwrap();
        let y = RatFunc::var(Var::Y);
        let x = RatFunc::var(Var::X);
        assert_eq!(d.coef(Var::X), &(&y * &y));
        assert_eq!(d.coef(Var::Y), &-&x.div(&(&y + &RatFunc::one())).unwrap());
        assert_eq!(parse_derivation("dx").unwrap(), Derivation::dx());
        assert!(matches!(parse_derivation("x dz"), Err(Error::SyntaxError { position: 2, .. })));
    }

    #[test]
    fn rendered_forms_parse_back() {
        for s in
            ["-x^2 dx - x*y dy", "(y^3 + 3*x) dx + y dy", "1/2*y^2 dx", "1/y dx", "-1/2 dy", "(x + 1)/(y^2 + 1) dx"]
        {
            let d = parse_derivation(s).unwrap();
            assert_eq!(d.to_string(), s);
        }
    }

    #[test]
    fn errors() {
        assert_eq!(parse_ratfunc("1/0"), Err(Error::DivisionByZero));
        assert!(matches!(parse_ratfunc("x +"), Err(Error::SyntaxError { position: 3, .. })));
        assert!(matches!(parse_derivation("x"), Err(Error::SyntaxError { position: 1, .. })));
        assert!(matches!(parse_ratfunc("2 x"), Err(Error::SyntaxError { position: 2, .. })));
        assert_eq!(parse_ratfunc("t^2 - 2*t").unwrap(), parse_ratfunc("x*(x - 2)").unwrap());
        assert_eq!(parse_ratfunc("y^-2").unwrap(), parse_ratfunc("1/y^2").unwrap());
        assert_eq!(parse_generators("dx; y dx;").unwrap().len(), 2);
        assert_eq!(parse_ratfunc("3/6").unwrap(), RatFunc::constant(crate::polyrat::qr(1, 2)));
        assert_eq!(parse_ratfunc("-(2)").unwrap(), RatFunc::constant(q(-2)));
    }
}
