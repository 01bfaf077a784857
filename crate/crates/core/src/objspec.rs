//! The object mini-language.
//!
//! ```text
//! expr  := term ('+' term)*
//! term  := atom ('[' int ']')*
//! atom  := 'Lambda' | 'P' v | 'S' v | 'I' v | 'tau' atom | 'tauinv' atom | '(' expr ')'
//! ```
//!
//! `v` is a vertex name. `tau` and `tauinv` apply to modules, so their argument
//! must not carry a shift. `X[k]` is the k-th suspension.

use std::sync::Arc;

use crate::algebra::{ar_translate, ar_translate_inv, injective, projective, simple, PathAlgebra, Rep};
use crate::error::{Error, Result};
use crate::perf::{stalk, PerfComplex};

enum Value {
    Module(Rep),
    Complex(PerfComplex),
}

struct Parser<'a> {
    alg: &'a Arc<PathAlgebra>,
    src: &'a str,
    pos: usize,
    cap: usize,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::ObjSpec { pos, msg: msg.into() }
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let t = self.rest();
        self.pos += t.len() - t.trim_start().len();
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn name(&mut self) -> &'a str {
        let t = self.rest();
        let n = t.find(|c: char| !(c.is_alphanumeric() || c == '_')).unwrap_or(t.len());
        self.pos += n;
        &t[..n]
    }

    fn int(&mut self) -> Result<i32> {
        self.skip_ws();
        let t = self.rest();
        let sign = usize::from(t.starts_with('-') || t.starts_with('+'));
        let n = t[sign..].find(|c: char| !c.is_ascii_digit()).unwrap_or(t.len() - sign);
        if n == 0 {
            return Err(err(self.pos, "expected an integer shift"));
        }
        let v = t[..sign + n].parse().map_err(|_| err(self.pos, "shift out of range"))?;
        self.pos += sign + n;
        Ok(v)
    }

    fn complex(&self, v: Value) -> Result<PerfComplex> {
        match v {
            Value::Complex(c) => Ok(c),
            Value::Module(m) => stalk(&m, 0, self.cap),
        }
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        while self.eat("+") {
            let rhs = self.term()?;
            acc = match (acc, rhs) {
                (Value::Module(a), Value::Module(b)) => Value::Module(Rep::direct_sum(&[&a, &b])?),
                (a, b) => {
                    let (a, b) = (self.complex(a)?, self.complex(b)?);
                    Value::Complex(PerfComplex::direct_sum(&[&a, &b])?)
                }
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Value> {
        let mut v = self.atom()?;
        while self.eat("[") {
            let k = self.int()?;
            if !self.eat("]") {
                return Err(err(self.pos, "expected ']'"));
            }
            v = Value::Complex(self.complex(v)?.shift(k));
        }
        Ok(v)
    }

    fn vertex(&mut self) -> Result<usize> {
        let at = self.pos;
        let name = self.name();
        if name.is_empty() {
            return Err(err(at, "expected a vertex name"));
        }
        self.alg.quiver.vertex_index(name).ok_or_else(|| err(at, format!("unknown vertex '{name}'")))
    }

    fn atom(&mut self) -> Result<Value> {
        self.skip_ws();
        let at = self.pos;
        if self.eat("(") {
            let v = self.expr()?;
            if !self.eat(")") {
                return Err(err(self.pos, "expected ')'"));
            }
            return Ok(v);
        }
        if self.eat("Lambda") {
            return Ok(Value::Complex(PerfComplex::lambda(self.alg)));
        }
        for (kw, inverse) in [("tauinv", true), ("tau", false)] {
            if self.eat(kw) {
                let arg_at = self.pos;
                let Value::Module(m) = self.atom()? else {
                    return Err(err(arg_at, format!("{kw} applies to modules only")));
                };
                let r = if inverse { ar_translate_inv(&m) } else { ar_translate(&m) };
                return r.map(Value::Module).map_err(|e| err(arg_at, e.to_string()));
            }
        }
        let kind = self.rest().chars().next();
        let make: fn(&Arc<PathAlgebra>, usize) -> Result<Rep> = match kind {
            Some('P') => projective,
            Some('S') => simple,
            Some('I') => injective,
            Some(c) => return Err(err(at, format!("unexpected '{c}'"))),
            None => return Err(err(at, "unexpected end of input")),
        };
        self.pos += 1;
        let v = self.vertex()?;
        Ok(Value::Module(make(self.alg, v)?))
    }
}

/// Parses an object spec into a complex of projectives.
pub fn parse_object(alg: &Arc<PathAlgebra>, src: &str, cap: usize) -> Result<PerfComplex> {
    let mut p = Parser { alg, src, pos: 0, cap };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(err(p.pos, "trailing input"));
    }
    p.complex(v)
}
