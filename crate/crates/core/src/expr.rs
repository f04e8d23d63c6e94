//! Text form of rational maps.
//!
//! ```text
//! expr    := sum ('o' sum)*            composition, loosest
//! sum     := term (('+' | '-') term)*
//! term    := unary (('*' | '/')? unary)*   juxtaposition multiplies
//! unary   := ('-' | '+') unary | power
//! power   := primary ('^' ['-'] int | '^' '(' ['-'] int ')')?
//! primary := int | 'z' | '(' expr ')' | name | name '(' int ')'
//! ```
//!
//! Names are the family tags: `T(n)`, `Z(n)`, `pow(n)`, `Delta`, `Gamma`,
//! `Omega`, `lattes233_12`, `lattes233_4`, `lattes233_6`, `theta_cyclic(n)`,
//! `theta_dihedral(n)`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::families::{make, recognize, FamilyTag};
use crate::numeric::Rational;
use crate::ratmap::RatMap;
use crate::{Error, Result};

/// Default cap on the degree of any intermediate map.
pub const DEFAULT_DEGREE_CAP: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Z,
    Name(String),
    Compose,
    Op(char),
    End,
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    cap: usize,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
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
            let s: String = chars[start..i].iter().map(|(_, c)| c).collect();
            out.push((at, Tok::Int(s.parse().unwrap())));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|(_, c)| c).collect();
            out.push((
                at,
                match s.as_str() {
                    "z" => Tok::Z,
                    "o" => Tok::Compose,
                    _ => Tok::Name(s),
                },
            ));
        } else if "+-*/^()∘".contains(c) {
            out.push((at, if c == '∘' { Tok::Compose } else { Tok::Op(c) }));
            i += 1;
        } else {
            return Err(Error::Parse {
                pos: at,
                msg: format!("unexpected character {c:?}"),
            });
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn at(&self) -> usize {
        self.toks[self.pos].0
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.at(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if *self.peek() == Tok::Op(c) {
            self.next();
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn check(&self, degree: usize) -> Result<()> {
        if degree > self.cap {
            return Err(Error::LimitExceeded(format!(
                "degree {degree} exceeds the cap {}",
                self.cap
            )));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<RatMap> {
        let mut parts = vec![self.sum()?];
        while *self.peek() == Tok::Compose {
            self.next();
            parts.push(self.sum()?);
        }
        let mut acc = parts.pop().unwrap();
        while let Some(f) = parts.pop() {
            self.check(f.degree() * acc.degree())?;
            acc = f.compose(&acc);
        }
        Ok(acc)
    }

    fn sum(&mut self) -> Result<RatMap> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Op('+') => {
                    self.next();
                    let r = self.term()?;
                    self.check(acc.degree() + r.degree())?;
                    acc = acc.add(&r);
                }
                Tok::Op('-') => {
                    self.next();
                    let r = self.term()?;
                    self.check(acc.degree() + r.degree())?;
                    acc = acc.sub(&r);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatMap> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Op('*') => {
                    self.next();
                    let r = self.unary()?;
                    self.check(acc.degree() + r.degree())?;
                    acc = acc.mul(&r);
                }
                Tok::Op('/') => {
                    self.next();
                    let at = self.at();
                    let r = self.unary()?;
                    self.check(acc.degree() + r.degree())?;
                    acc = acc.div(&r).map_err(|_| Error::Parse {
                        pos: at,
                        msg: "division by zero".into(),
                    })?;
                }
                Tok::Int(_) | Tok::Z | Tok::Name(_) | Tok::Op('(') => {
                    let r = self.power()?;
                    self.check(acc.degree() + r.degree())?;
                    acc = acc.mul(&r);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatMap> {
        match self.peek() {
            Tok::Op('-') => {
                self.next();
                Ok(self.unary()?.neg())
            }
            Tok::Op('+') => {
                self.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = *self.peek() == Tok::Op('(');
        if paren {
            self.next();
        }
        let neg = *self.peek() == Tok::Op('-');
        if neg {
            self.next();
        }
        let Tok::Int(n) = self.peek().clone() else {
            return self.err("exponent must be an integer");
        };
        self.next();
        if *self.peek() == Tok::Op('/') && paren {
            return self.err("exponent must be an integer");
        }
        if paren {
            self.expect(')')?;
        }
        let Some(n) = n.to_i64().filter(|n| *n <= self.cap as i64) else {
            return Err(Error::LimitExceeded(format!("exponent {n} too large")));
        };
        Ok(if neg { -n } else { n })
    }

    fn power(&mut self) -> Result<RatMap> {
        let base = self.primary()?;
        if *self.peek() != Tok::Op('^') {
            return Ok(base);
        }
        self.next();
        let at = self.at();
        let k = self.exponent()?;
        self.check(base.degree() * k.unsigned_abs() as usize)?;
        base.pow(k).map_err(|_| Error::Parse {
            pos: at,
            msg: "zero raised to a negative power".into(),
        })
    }

    fn index(&mut self) -> Result<Option<u32>> {
        if *self.peek() != Tok::Op('(') {
            return Ok(None);
        }
        self.next();
        let Tok::Int(n) = self.next() else {
            return self.err("expected a family index");
        };
        self.expect(')')?;
        match n.to_u32() {
            Some(n) => Ok(Some(n)),
            None => Err(Error::LimitExceeded(format!("family index {n} too large"))),
        }
    }

    fn primary(&mut self) -> Result<RatMap> {
        let at = self.at();
        match self.next() {
            Tok::Int(n) => Ok(RatMap::constant(Rational::from_integer(n))),
            Tok::Z => Ok(RatMap::identity()),
            Tok::Op('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Name(name) => {
                let text = match self.index()? {
                    Some(n) => format!("{name}({n})"),
                    None => name,
                };
                let tag: FamilyTag = text.parse().map_err(|_| Error::Parse {
                    pos: at,
                    msg: format!("unknown name {text:?}"),
                })?;
                if let FamilyTag::Power(n) | FamilyTag::Chebyshev(n) = tag {
                    self.check(n as usize)?;
                }
                if let FamilyTag::Zhukovsky(n) | FamilyTag::ThetaDihedral(n) = tag {
                    self.check(2 * n as usize)?;
                }
                make(tag).map_err(|e| Error::Parse {
                    pos: at,
                    msg: e.to_string(),
                })
            }
            Tok::End => Err(Error::Parse {
                pos: at,
                msg: "unexpected end of input".into(),
            }),
            t => Err(Error::Parse {
                pos: at,
                msg: format!("unexpected {t:?}"),
            }),
        }
    }
}

/// Parses with the default degree cap.
pub fn parse_expression(text: &str) -> Result<RatMap> {
    parse_expression_capped(text, DEFAULT_DEGREE_CAP)
}

pub fn parse_expression_capped(text: &str, cap: usize) -> Result<RatMap> {
    if text.trim().is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty expression".into(),
        });
    }
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        cap,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Family name when the map is a recognized member (powers stay `z^n`),
/// else the reduced fraction. Parses back to the same map.
pub fn print_map(f: &RatMap) -> String {
    match recognize(f) {
        Some(FamilyTag::Power(_)) | None => f.text(),
        Some(tag) => tag.to_string(),
    }
}
