//! Scalar expressions in t, x, u, v with exact first partials.
//!
//! Grammar (lowest to highest precedence):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' unary)?          right-associative
//! atom  := number | var | func '(' expr ')' | '(' expr ')'
//! ```
//!
//! Partials with respect to x, u and v come from a single pass over a
//! three-component dual number.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    T,
    X,
    U,
    V,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::X => "x",
            Var::U => "u",
            Var::V => "v",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Exp,
    Log,
    Sqrt,
    Abs,
}

impl Func {
    fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "exp" => Func::Exp,
            "log" => Func::Log,
            "sqrt" => Func::Sqrt,
            "abs" => Func::Abs,
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    fn prec(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
            BinOp::Pow => 4,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => " + ",
            BinOp::Sub => " - ",
            BinOp::Mul => " * ",
            BinOp::Div => " / ",
            BinOp::Pow => "^",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Var(Var),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

const NEG_PREC: u8 = 3;
const ATOM_PREC: u8 = 5;

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Num(_) | Expr::Var(_) | Expr::Call(..) => ATOM_PREC,
            Expr::Neg(_) => NEG_PREC,
            Expr::Bin(op, ..) => op.prec(),
        }
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.visit(&mut |e| {
            if let Expr::Var(v) = e {
                out.insert(*v);
            }
        });
        out
    }

    pub fn uses_abs(&self) -> bool {
        let mut found = false;
        self.visit(&mut |e| {
            if let Expr::Call(Func::Abs, _) = e {
                found = true;
            }
        });
        found
    }

    fn is_constant(&self) -> bool {
        self.variables().is_empty()
    }

    fn visit(&self, f: &mut impl FnMut(&Expr)) {
        f(self);
        match self {
            Expr::Num(_) | Expr::Var(_) => {}
            Expr::Neg(a) | Expr::Call(_, a) => a.visit(f),
            Expr::Bin(_, a, b) => {
                a.visit(f);
                b.visit(f);
            }
        }
    }

    /// Replace every occurrence of one variable by another.
    pub fn rename(&self, from: Var, to: Var) -> Expr {
        match self {
            Expr::Var(v) if *v == from => Expr::Var(to),
            Expr::Num(_) | Expr::Var(_) => self.clone(),
            Expr::Neg(a) => Expr::Neg(Box::new(a.rename(from, to))),
            Expr::Call(g, a) => Expr::Call(*g, Box::new(a.rename(from, to))),
            Expr::Bin(op, a, b) => Expr::Bin(*op, Box::new(a.rename(from, to)), Box::new(b.rename(from, to))),
        }
    }

    pub fn eval(&self, env: &EvalEnv) -> Result<f64> {
        Ok(eval_with_partials(self, env)?.value)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(x) => write!(f, "{x:?}"),
            Expr::Var(v) => f.write_str(v.name()),
            Expr::Call(g, a) => write!(f, "{}({a})", g.name()),
            Expr::Neg(a) => {
                if a.prec() < NEG_PREC {
                    write!(f, "-({a})")
                } else {
                    write!(f, "-{a}")
                }
            }
            Expr::Bin(op, a, b) => {
                let p = op.prec();
                let (lp, rp) = if *op == BinOp::Pow {
                    (a.prec() <= p, b.prec() < NEG_PREC)
                } else {
                    (a.prec() < p, b.prec() <= p)
                };
                wrap(f, a, lp)?;
                f.write_str(op.symbol())?;
                wrap(f, b, rp)
            }
        }
    }
}

fn wrap(f: &mut fmt::Formatter<'_>, e: &Expr, paren: bool) -> fmt::Result {
    if paren {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

// ---------------------------------------------------------------------------
// lexing and parsing

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(x) => format!("number {x}"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' | b'.' => {
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    if j < bytes.len() && bytes[j].is_ascii_digit() {
                        while j < bytes.len() && bytes[j].is_ascii_digit() {
                            j += 1;
                        }
                        i = j;
                    }
                }
                let lexeme = &text[start..i];
                let x: f64 = lexeme.parse().map_err(|_| Error::Syntax {
                    offset: start,
                    expected: vec!["number".into()],
                    found: format!("`{lexeme}`"),
                })?;
                if !x.is_finite() {
                    return Err(Error::Syntax {
                        offset: start,
                        expected: vec!["finite number".into()],
                        found: format!("`{lexeme}`"),
                    });
                }
                out.push((Tok::Num(x), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(Error::Syntax {
                    offset: start,
                    expected: vec!["expression".into()],
                    found: format!("`{ch}`"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

const OPERAND: [&str; 4] = ["number", "variable", "'('", "'-'"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T> {
        Err(Error::Syntax {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let exp = self.unary()?;
            return Ok(Expr::Bin(BinOp::Pow, Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Num(x) => {
                self.bump();
                Ok(Expr::Num(x))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.fail(&["')'", "operator"]);
                }
                self.bump();
                Ok(e)
            }
            Tok::Ident(name) => {
                self.bump();
                let var = match name.as_str() {
                    "t" => Some(Var::T),
                    "x" => Some(Var::X),
                    "u" => Some(Var::U),
                    "v" => Some(Var::V),
                    _ => None,
                };
                if let Some(v) = var {
                    return Ok(Expr::Var(v));
                }
                let Some(g) = Func::from_name(&name) else {
                    return Err(Error::UnknownIdent { name, offset });
                };
                if *self.peek() != Tok::LParen {
                    return self.fail(&["'('"]);
                }
                self.bump();
                let arg = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.fail(&["')'", "operator"]);
                }
                self.bump();
                Ok(Expr::Call(g, Box::new(arg)))
            }
            _ => self.fail(&OPERAND),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail(&["operator", "end of input"]);
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// evaluation

/// Point at which an expression is evaluated; `v` carries the fractional derivative
/// of x in variational problems.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EvalEnv {
    pub t: f64,
    pub x: f64,
    pub u: f64,
    pub v: f64,
}

impl EvalEnv {
    pub fn new(t: f64, x: f64, u: f64, v: f64) -> Self {
        Self { t, x, u, v }
    }
}

/// Value and first partials with respect to x, u, v.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Partials {
    pub value: f64,
    pub d_dx: f64,
    pub d_du: f64,
    pub d_dv: f64,
}

#[derive(Debug, Clone, Copy)]
struct Dual {
    v: f64,
    d: [f64; 3],
}

impl Dual {
    fn cst(v: f64) -> Self {
        Self { v, d: [0.0; 3] }
    }

    fn seed(v: f64, k: usize) -> Self {
        let mut d = [0.0; 3];
        d[k] = 1.0;
        Self { v, d }
    }

    /// Chain rule with outer derivative `dv`.
    fn chain(self, value: f64, dv: f64) -> Self {
        Self { v: value, d: self.d.map(|x| dv * x) }
    }

    fn has_tangent(&self) -> bool {
        self.d.iter().any(|x| *x != 0.0)
    }
}

pub fn eval_with_partials(e: &Expr, env: &EvalEnv) -> Result<Partials> {
    for (name, val) in [("t", env.t), ("x", env.x), ("u", env.u), ("v", env.v)] {
        if !val.is_finite() {
            return Err(Error::Domain(format!("{name} = {val} is not finite")));
        }
    }
    let r = eval_dual(e, env)?;
    if !r.v.is_finite() || r.d.iter().any(|x| !x.is_finite()) {
        return Err(Error::ExprDomain { node: e.to_string(), detail: "result is not finite".into() });
    }
    Ok(Partials { value: r.v, d_dx: r.d[0], d_du: r.d[1], d_dv: r.d[2] })
}

fn domain(e: &Expr, detail: String) -> Error {
    Error::ExprDomain { node: e.to_string(), detail }
}

fn eval_dual(e: &Expr, env: &EvalEnv) -> Result<Dual> {
    Ok(match e {
        Expr::Num(x) => Dual::cst(*x),
        Expr::Var(Var::T) => Dual::cst(env.t),
        Expr::Var(Var::X) => Dual::seed(env.x, 0),
        Expr::Var(Var::U) => Dual::seed(env.u, 1),
        Expr::Var(Var::V) => Dual::seed(env.v, 2),
        Expr::Neg(a) => {
            let a = eval_dual(a, env)?;
            a.chain(-a.v, -1.0)
        }
        Expr::Call(g, arg) => {
            let a = eval_dual(arg, env)?;
            let x = a.v;
            match g {
                Func::Sin => a.chain(x.sin(), x.cos()),
                Func::Cos => a.chain(x.cos(), -x.sin()),
                Func::Exp => {
                    let y = x.exp();
                    a.chain(y, y)
                }
                Func::Log => {
                    if x <= 0.0 {
                        return Err(domain(e, format!("logarithm of non-positive value {x}")));
                    }
                    a.chain(x.ln(), 1.0 / x)
                }
                Func::Sqrt => {
                    if x < 0.0 || (x == 0.0 && a.has_tangent()) {
                        return Err(domain(e, format!("square root not differentiable at {x}")));
                    }
                    let y = x.sqrt();
                    if x == 0.0 {
                        Dual::cst(0.0)
                    } else {
                        a.chain(y, 0.5 / y)
                    }
                }
                Func::Abs => a.chain(x.abs(), if x > 0.0 { 1.0 } else if x < 0.0 { -1.0 } else { 0.0 }),
            }
        }
        Expr::Bin(op, l, r) => {
            let a = eval_dual(l, env)?;
            let b = eval_dual(r, env)?;
            match op {
                BinOp::Add => Dual { v: a.v + b.v, d: [0, 1, 2].map(|k| a.d[k] + b.d[k]) },
                BinOp::Sub => Dual { v: a.v - b.v, d: [0, 1, 2].map(|k| a.d[k] - b.d[k]) },
                BinOp::Mul => Dual { v: a.v * b.v, d: [0, 1, 2].map(|k| a.d[k] * b.v + a.v * b.d[k]) },
                BinOp::Div => {
                    if b.v == 0.0 {
                        return Err(domain(e, "division by zero".into()));
                    }
                    let q = a.v / b.v;
                    Dual { v: q, d: [0, 1, 2].map(|k| (a.d[k] - q * b.d[k]) / b.v) }
                }
                BinOp::Pow => pow(e, a, b, r.is_constant())?,
            }
        }
    })
}

fn pow(e: &Expr, a: Dual, b: Dual, const_exp: bool) -> Result<Dual> {
    if const_exp {
        let p = b.v;
        let is_int = p == p.trunc() && p.abs() <= 64.0;
        if a.v < 0.0 && !is_int {
            return Err(domain(e, format!("negative base {} with non-integer exponent {p}", a.v)));
        }
        if a.v == 0.0 && p < 0.0 {
            return Err(domain(e, "zero raised to a negative power".into()));
        }
        let (y, dy) = if is_int {
            let n = p as i32;
            (a.v.powi(n), if n == 0 { 0.0 } else { p * a.v.powi(n - 1) })
        } else {
            (a.v.powf(p), p * a.v.powf(p - 1.0))
        };
        if a.v == 0.0 && p < 1.0 && p != 0.0 && a.has_tangent() {
            return Err(domain(e, format!("power {p} not differentiable at zero")));
        }
        let dy = if a.has_tangent() { dy } else { 0.0 };
        return Ok(a.chain(y, dy));
    }
    if a.v <= 0.0 {
        return Err(domain(e, format!("variable exponent needs a positive base, got {}", a.v)));
    }
    let la = a.v.ln();
    let y = (b.v * la).exp();
    Ok(Dual { v: y, d: [0, 1, 2].map(|k| y * (b.d[k] * la + b.v * a.d[k] / a.v)) })
}
