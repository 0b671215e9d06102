//! Expression syntax for semiring terms.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr    := term ("+" term)*
//! term    := factor ("*" factor)*
//! factor  := primary ["'"]
//! primary := "0" | "1" | "x" INT | "y" INT | "(" expr ")"
//! ```
//!
//! `+` is the semiring addition (join), `*` the multiplication (meet) and the
//! postfix apostrophe the complement. `0` and `1` are the two identities.

use std::fmt;

use crate::error::{Error, Result};

/// Maximum parenthesis nesting accepted by the parser.
pub const MAX_NESTING: usize = 256;

/// Largest variable count for which atom indices `0..2^n` are addressable.
const MAX_ATOM_BITS: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Zero,
    One,
    /// Generator `x_i`, 1-based.
    Var(usize),
    /// Atom `y_k`, 0-based.
    AtomVar(usize),
    Join(Vec<Expr>),
    Meet(Vec<Expr>),
    Complement(Box<Expr>),
}

impl Expr {
    /// Builds a join, flattening nested joins. A single child is returned as is.
    ///
    /// Panics if `children` is empty.
    pub fn join(children: impl IntoIterator<Item = Expr>) -> Expr {
        Self::flat(children, true)
    }

    /// Builds a meet, flattening nested meets. A single child is returned as is.
    ///
    /// Panics if `children` is empty.
    pub fn meet(children: impl IntoIterator<Item = Expr>) -> Expr {
        Self::flat(children, false)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn complement(self) -> Expr {
        Expr::Complement(Box::new(self))
    }

    fn flat(children: impl IntoIterator<Item = Expr>, is_join: bool) -> Expr {
        let mut out = Vec::new();
        for child in children {
            match child {
                Expr::Join(inner) if is_join => out.extend(inner),
                Expr::Meet(inner) if !is_join => out.extend(inner),
                other => out.push(other),
            }
        }
        assert!(!out.is_empty(), "join/meet needs at least one child");
        if out.len() == 1 {
            out.pop().unwrap()
        } else if is_join {
            Expr::Join(out)
        } else {
            Expr::Meet(out)
        }
    }

    /// Checks index bounds for `n` variables.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self {
            Expr::Zero | Expr::One => Ok(()),
            Expr::Var(i) => check_var(*i as u64, n),
            Expr::AtomVar(k) => check_atom(*k as u64, n),
            Expr::Join(cs) | Expr::Meet(cs) => {
                if cs.is_empty() {
                    return Err(Error::Unsupported("empty join/meet".into()));
                }
                cs.iter().try_for_each(|c| c.validate(n))
            }
            Expr::Complement(c) => c.validate(n),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Expr::Zero | Expr::One | Expr::Var(_) | Expr::AtomVar(_) => 1,
            Expr::Join(cs) | Expr::Meet(cs) => 1 + cs.iter().map(Expr::depth).max().unwrap_or(0),
            Expr::Complement(c) => 1 + c.depth(),
        }
    }

    /// Renders the expression in the surface syntax accepted by [`parse`].
    pub fn render(&self) -> String {
        self.to_string()
    }

    fn fmt_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Join(_) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Zero => f.write_str("0"),
            Expr::One => f.write_str("1"),
            Expr::Var(i) => write!(f, "x{i}"),
            Expr::AtomVar(k) => write!(f, "y{k}"),
            Expr::Join(cs) => {
                for (idx, c) in cs.iter().enumerate() {
                    if idx > 0 {
                        f.write_str(" + ")?;
                    }
                    // A nested join only appears in hand-built trees; keep it grouped.
                    if matches!(c, Expr::Join(_)) {
                        write!(f, "({c})")?;
                    } else {
                        write!(f, "{c}")?;
                    }
                }
                Ok(())
            }
            Expr::Meet(cs) => {
                for (idx, c) in cs.iter().enumerate() {
                    if idx > 0 {
                        f.write_str(" * ")?;
                    }
                    if matches!(c, Expr::Meet(_)) {
                        write!(f, "({c})")?;
                    } else {
                        c.fmt_factor(f)?;
                    }
                }
                Ok(())
            }
            Expr::Complement(c) => match c.as_ref() {
                Expr::Zero | Expr::One | Expr::Var(_) | Expr::AtomVar(_) => write!(f, "{c}'"),
                _ => write!(f, "({c})'"),
            },
        }
    }
}

fn check_var(index: u64, n: usize) -> Result<()> {
    if index >= 1 && index <= n as u64 {
        Ok(())
    } else {
        Err(Error::VarOutOfRange { index, n })
    }
}

fn check_atom(index: u64, n: usize) -> Result<()> {
    let m = atom_count(n)?;
    if index < m as u64 {
        Ok(())
    } else {
        Err(Error::AtomOutOfRange { index, m })
    }
}

fn atom_count(n: usize) -> Result<usize> {
    if n == 0 || n > MAX_ATOM_BITS {
        return Err(Error::VariableCount {
            n,
            min: 1,
            max: MAX_ATOM_BITS,
        });
    }
    Ok(1usize << n)
}

/// Parses `text` into an expression over `n` variables.
pub fn parse(text: &str, n: usize) -> Result<Expr> {
    atom_count(n)?;
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        n,
        depth: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
    depth: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
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

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some(b'+') {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(Expr::join(terms))
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(b'*') {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(Expr::meet(factors))
    }

    fn factor(&mut self) -> Result<Expr> {
        let p = self.primary()?;
        if self.peek() == Some(b'\'') {
            self.pos += 1;
            Ok(p.complement())
        } else {
            Ok(p)
        }
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                Ok(Expr::Zero)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Expr::One)
            }
            Some(b'x') => {
                self.pos += 1;
                let i = self.int()?;
                check_var(i, self.n)?;
                Ok(Expr::Var(i as usize))
            }
            Some(b'y') => {
                self.pos += 1;
                let k = self.int()?;
                check_atom(k, self.n)?;
                Ok(Expr::AtomVar(k as usize))
            }
            Some(b'(') => {
                if self.depth >= MAX_NESTING {
                    return Err(self.error("nesting too deep"));
                }
                self.pos += 1;
                self.depth += 1;
                let e = self.expr()?;
                self.depth -= 1;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(_) => Err(self.error("expected '0', '1', 'x<int>', 'y<int>' or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    /// Decimal digits immediately following the symbol letter. Values that overflow
    /// `u64` saturate, which the range check then rejects.
    fn int(&mut self) -> Result<u64> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(&b) = self.src.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = value.saturating_mul(10).saturating_add(u64::from(b - b'0'));
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected decimal index"));
        }
        Ok(value)
    }
}
