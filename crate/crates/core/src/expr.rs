//! A small expression language over the torus: elements, forms, fields and the operations on them.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/' | '⊗' | '·' | '∧' | '^^' | <juxtaposition>) unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' '-'? INT)?
//! atom    := INT | u | v | q | du | dv | pu | pv | ∂u | ∂v | '(' expr ')'
//!          | d '(' expr ')' | int '(' expr ',' expr ')' | lie '(' expr ',' expr ')'
//! ```
//!
//! Every rendering produced by [`Value`]'s `Display` parses back to an equal value.

use std::cell::RefCell;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::calculus::{d0, d1, wedge, Form};
use crate::error::{Error, Result};
use crate::interior::Interior;
use crate::scalar::ScalarQ;
use crate::tensor::{Letter, Tensor, TwoForm};
use crate::torus::TorusElement;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Wedge,
    Otimes,
    Dot,
    LParen,
    RParen,
    Comma,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Wedge => "'^^'".into(),
            Tok::Otimes => "'⊗'".into(),
            Tok::Dot => "'·'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Eof => "end of input".into(),
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self, Tok::Int(_) | Tok::Ident(_) | Tok::LParen)
    }
}

fn syntax(offset: usize, message: impl Into<String>, expected: &[&str]) -> Error {
    Error::Syntax { offset, message: message.into(), expected: expected.join(", ") }
}

const ATOM_START: &[&str] = &["integer", "u", "v", "q", "du", "dv", "pu", "pv", "d(", "int(", "lie(", "(", "-"];

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut it = src.char_indices().peekable();
    while let Some(&(i, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, d)) = it.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = j + d.len_utf8();
                it.next();
            }
            out.push((i, Tok::Int(src[i..end].parse().expect("digits"))));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '∂' {
            let mut end = i + c.len_utf8();
            it.next();
            while let Some(&(j, d)) = it.peek() {
                if !d.is_ascii_alphanumeric() {
                    break;
                }
                end = j + d.len_utf8();
                it.next();
            }
            out.push((i, Tok::Ident(src[i..end].to_string())));
            continue;
        }
        it.next();
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => {
                if matches!(it.peek(), Some(&(_, '^'))) {
                    it.next();
                    Tok::Wedge
                } else {
                    Tok::Caret
                }
            }
            '∧' => Tok::Wedge,
            '⊗' => Tok::Otimes,
            '·' => Tok::Dot,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            _ => return Err(syntax(i, format!("unexpected character '{c}'"), &["a token"])),
        };
        out.push((i, tok));
    }
    out.push((src.len(), Tok::Eof));
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Atom {
    U,
    V,
    Q,
    Letter(Letter),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Tensor,
    Wedge,
}

/// Parsed expression tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Atom(Atom),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    D(Box<Expr>),
    Interior(Box<Expr>, Box<Expr>),
    Lie(Box<Expr>, Box<Expr>),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

const ADD_BP: u8 = 10;
const MUL_BP: u8 = 20;
const NEG_BP: u8 = 30;
const POW_BP: u8 = 40;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, name: &str) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(self.offset(), format!("found {}", self.peek().describe()), &[name]))
        }
    }

    fn expr(&mut self, min_bp: u8) -> Result<Expr> {
        let mut lhs = self.prefix()?;
        loop {
            let tok = self.peek().clone();
            if tok == Tok::Caret {
                if POW_BP < min_bp {
                    break;
                }
                self.bump();
                lhs = Expr::Pow(Box::new(lhs), self.exponent()?);
                continue;
            }
            let (op, bp, explicit) = match tok {
                Tok::Plus => (BinOp::Add, ADD_BP, true),
                Tok::Minus => (BinOp::Sub, ADD_BP, true),
                Tok::Star | Tok::Dot => (BinOp::Mul, MUL_BP, true),
                Tok::Slash => (BinOp::Div, MUL_BP, true),
                Tok::Otimes => (BinOp::Tensor, MUL_BP, true),
                Tok::Wedge => (BinOp::Wedge, MUL_BP, true),
                t if t.starts_atom() => (BinOp::Mul, MUL_BP, false),
                _ => break,
            };
            if bp < min_bp {
                break;
            }
            if explicit {
                self.bump();
            }
            let rhs = self.expr(bp + 1)?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn exponent(&mut self) -> Result<i64> {
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let at = self.offset();
        match self.bump() {
            Tok::Int(n) => {
                let k: i64 = n.try_into().map_err(|_| syntax(at, "exponent too large", &["integer"]))?;
                Ok(if neg { -k } else { k })
            }
            t => Err(syntax(at, format!("found {}", t.describe()), &["integer exponent"])),
        }
    }

    fn prefix(&mut self) -> Result<Expr> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.expr(NEG_BP)?)));
        }
        self.atom()
    }

    fn call_args(&mut self, n: usize) -> Result<Vec<Expr>> {
        self.expect(Tok::LParen, "(")?;
        let mut args = vec![self.expr(0)?];
        for _ in 1..n {
            self.expect(Tok::Comma, ",")?;
            args.push(self.expr(0)?);
        }
        self.expect(Tok::RParen, ")")?;
        Ok(args)
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.offset();
        match self.bump() {
            Tok::Int(n) => Ok(Expr::Int(n)),
            Tok::LParen => {
                let e = self.expr(0)?;
                self.expect(Tok::RParen, ")")?;
                Ok(e)
            }
            Tok::Ident(name) => {
                let letter = |l| Ok(Expr::Atom(Atom::Letter(l)));
                match name.as_str() {
                    "u" => Ok(Expr::Atom(Atom::U)),
                    "v" => Ok(Expr::Atom(Atom::V)),
                    "q" => Ok(Expr::Atom(Atom::Q)),
                    "du" => letter(Letter::Du),
                    "dv" => letter(Letter::Dv),
                    "pu" | "∂u" => letter(Letter::Pu),
                    "pv" | "∂v" => letter(Letter::Pv),
                    "d" => Ok(Expr::D(Box::new(self.call_args(1)?.remove(0)))),
                    "int" | "lie" => {
                        let mut a = self.call_args(2)?;
                        let (w, x) = (a.pop().unwrap(), a.pop().unwrap());
                        Ok(if name == "int" {
                            Expr::Interior(Box::new(x), Box::new(w))
                        } else {
                            Expr::Lie(Box::new(x), Box::new(w))
                        })
                    }
                    _ => Err(syntax(at, format!("unknown identifier '{name}'"), ATOM_START)),
                }
            }
            t => Err(syntax(at, format!("found {}", t.describe()), ATOM_START)),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.expr(0)?;
    if *p.peek() != Tok::Eof {
        return Err(syntax(p.offset(), format!("found {}", p.peek().describe()), &["operator", "end of input"]));
    }
    Ok(e)
}

/// Result of evaluating an expression.
#[derive(Clone, Debug)]
pub enum Value {
    Element(TorusElement),
    Tensor(Tensor),
    TwoForm(TwoForm),
}

impl Value {
    pub fn is_zero(&self) -> bool {
        match self {
            Value::Element(e) => e.is_zero(),
            Value::Tensor(t) => t.is_zero(),
            Value::TwoForm(w) => w.is_zero(),
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Value::Element(_) => "algebra element",
            Value::Tensor(t) if t.is_vec_field() => "vector field",
            Value::Tensor(t) if t.degree() == Some(1) => "one-form",
            Value::Tensor(_) => "tensor",
            Value::TwoForm(_) => "two-form",
        }
    }

    pub fn from_form(f: Form) -> Value {
        match f {
            Form::Zero(m) => Value::Element(m),
            Form::One(t) => Value::Tensor(t),
            Form::Two(w) => Value::TwoForm(w),
        }
    }

    pub fn as_form(&self) -> Result<Form> {
        match self {
            Value::Element(m) => Ok(Form::Zero(m.clone())),
            Value::Tensor(t) if t.is_zero() => Ok(Form::One(Tensor::zero())),
            Value::Tensor(t) if t.is_form() && t.degree() == Some(1) => Ok(Form::One(t.clone())),
            Value::TwoForm(w) => Ok(Form::Two(w.clone())),
            other => Err(Error::TypeMismatch(format!("expected a form, found a {}", other.kind()))),
        }
    }

    pub fn as_field(&self) -> Result<Tensor> {
        match self {
            v if v.is_zero() => Ok(Tensor::zero()),
            Value::Tensor(t) if t.is_vec_field() && t.degree() == Some(1) => Ok(t.clone()),
            other => Err(Error::TypeMismatch(format!("expected a vector field, found a {}", other.kind()))),
        }
    }

    pub fn as_scalar(&self) -> Option<ScalarQ> {
        match self {
            Value::Element(m) => m.as_scalar(),
            v if v.is_zero() => Some(ScalarQ::zero()),
            _ => None,
        }
    }

    fn scale(&self, c: &ScalarQ) -> Value {
        match self {
            Value::Element(m) => Value::Element(m.scale(c)),
            Value::Tensor(t) => Value::Tensor(t.scale(c)),
            Value::TwoForm(w) => Value::TwoForm(w.scale(c)),
        }
    }

    /// Substitutes `q = q0` in every coefficient.
    pub fn at_q(&self, q0: &BigRational) -> Result<Value> {
        let err = RefCell::new(None);
        let sub = |c: &ScalarQ| match c.eval_rational(q0) {
            Ok(x) => ScalarQ::from_bigrational(&x),
            Err(e) => {
                err.borrow_mut().get_or_insert(e);
                ScalarQ::zero()
            }
        };
        let el = |m: &TorusElement| m.map_coeffs(sub);
        let out = match self {
            Value::Element(m) => Value::Element(el(m)),
            Value::Tensor(t) => Value::Tensor(t.map_coeffs(el)),
            Value::TwoForm(w) => Value::TwoForm(TwoForm::new(el(&w.coef))),
        };
        match err.into_inner() {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }
}

/// Zeros of every kind are equal.
impl PartialEq for Value {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (a, b) if a.is_zero() && b.is_zero() => true,
            (Value::Element(a), Value::Element(b)) => a == b,
            (Value::Tensor(a), Value::Tensor(b)) => a == b,
            (Value::TwoForm(a), Value::TwoForm(b)) => a == b,
            _ => false,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Element(m) => write!(f, "{m}"),
            Value::Tensor(t) => write!(f, "{t}"),
            Value::TwoForm(w) => write!(f, "{w}"),
        }
    }
}

fn mismatch(op: &str, a: &Value, b: &Value) -> Error {
    Error::TypeMismatch(format!("cannot {op} a {} and a {}", a.kind(), b.kind()))
}

fn add(a: Value, b: Value) -> Result<Value> {
    use Value::*;
    Ok(match (a, b) {
        (a, b) if b.is_zero() => a,
        (a, b) if a.is_zero() => b,
        (Element(x), Element(y)) => Element(&x + &y),
        (Tensor(x), Tensor(y)) => Tensor(&x + &y),
        (TwoForm(x), TwoForm(y)) => TwoForm(&x + &y),
        (a, b) => return Err(mismatch("add", &a, &b)),
    })
}

fn mul(a: Value, b: Value) -> Result<Value> {
    use Value::*;
    Ok(match (a, b) {
        (Element(x), Element(y)) => Element(&x * &y),
        (Element(x), Tensor(t)) => Tensor(t.left_mul(&x)),
        (Tensor(t), Element(y)) => Tensor(t.right_mul(&y)),
        (Element(x), TwoForm(w)) => TwoForm(w.left_mul(&x)),
        (TwoForm(w), Element(y)) => TwoForm(w.right_mul(&y)),
        (a, b) => return Err(mismatch("multiply (use ⊗ or ∧)", &a, &b)),
    })
}

fn tensor(a: Value, b: Value) -> Result<Value> {
    match (a, b) {
        (Value::Tensor(x), Value::Tensor(y)) => Ok(Value::Tensor(x.tensor(&y))),
        (a @ Value::Element(_), b) | (a, b @ Value::Element(_)) => mul(a, b),
        (a, b) => Err(mismatch("tensor", &a, &b)),
    }
}

fn wedge_values(a: Value, b: Value) -> Result<Value> {
    let (x, y) = (a.as_form()?, b.as_form()?);
    let deg = x.degree() + y.degree();
    wedge(&x, &y).map(Value::from_form).ok_or(Error::UnsupportedDegree(deg))
}

fn atom(a: Atom) -> Value {
    match a {
        Atom::U => Value::Element(TorusElement::u()),
        Atom::V => Value::Element(TorusElement::v()),
        Atom::Q => Value::Element(TorusElement::scalar(ScalarQ::q())),
        Atom::Letter(l) => Value::Tensor(Tensor::letter(l)),
    }
}

pub fn eval(e: &Expr) -> Result<Value> {
    Ok(match e {
        Expr::Int(n) => Value::Element(TorusElement::scalar(ScalarQ::from_bigrational(&BigRational::from_integer(n.clone())))),
        Expr::Atom(a) => atom(*a),
        Expr::Neg(x) => eval(x)?.scale(&ScalarQ::from_int(-1)),
        Expr::Pow(x, k) => match eval(x)? {
            Value::Element(m) => Value::Element(m.pow(*k)?),
            other => return Err(Error::TypeMismatch(format!("cannot raise a {} to a power", other.kind()))),
        },
        Expr::Bin(op, a, b) => {
            let (a, b) = (eval(a)?, eval(b)?);
            match op {
                BinOp::Add => add(a, b)?,
                BinOp::Sub => add(a, b.scale(&ScalarQ::from_int(-1)))?,
                BinOp::Mul => mul(a, b)?,
                BinOp::Div => {
                    let c = b.as_scalar().ok_or_else(|| mismatch("divide", &a, &b))?;
                    if c.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    a.scale(&c.inv()?)
                }
                BinOp::Tensor => tensor(a, b)?,
                BinOp::Wedge => wedge_values(a, b)?,
            }
        }
        Expr::D(x) => match eval(x)?.as_form()? {
            Form::Zero(m) => Value::Tensor(d0(&m)),
            Form::One(w) => Value::TwoForm(d1(&w)),
            Form::Two(_) => return Err(Error::UnsupportedDegree(3)),
        },
        Expr::Interior(x, w) => {
            let (x, w) = (eval(x)?.as_field()?, eval(w)?.as_form()?);
            Value::from_form(Interior::default().interior(&x, &w))
        }
        Expr::Lie(x, w) => {
            let (x, w) = (eval(x)?.as_field()?, eval(w)?.as_form()?);
            Value::from_form(Interior::default().lie(&x, &w))
        }
    })
}

/// Parses and evaluates.
pub fn evaluate(src: &str) -> Result<Value> {
    eval(&parse(src)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus::Monomial;

    fn ev(s: &str) -> Value {
        evaluate(s).unwrap_or_else(|e| panic!("{s}: {e}"))
    }

    #[test]
    fn product_is_normal_ordered() {
        assert_eq!(ev("u*v").to_string(), "(q) v^1 u^1");
        assert_eq!(ev("u v"), ev("q*v*u"));
    }

    #[test]
    fn differential_of_product() {
        // du·v + q dv·u
        let expect = add(ev("du*v"), ev("q*dv*u")).unwrap();
        assert_eq!(ev("d(u*v)"), expect);
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        match parse("(u") {
            Err(Error::Syntax { offset, expected, .. }) => {
                assert_eq!(offset, 2);
                assert!(expected.contains(')'));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("u + * v"), Err(Error::Syntax { offset: 4, .. })));
        assert!(matches!(parse("u $"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse("uv"), Err(Error::Syntax { offset: 0, .. })));
    }

    #[test]
    fn precedence() {
        assert_eq!(ev("-u^2"), ev("-(u^2)"));
        assert_eq!(ev("2*u + 3"), ev("3 + u*2"));
        assert_eq!(ev("1/q^2"), Value::Element(TorusElement::scalar(ScalarQ::q_pow(-2))));
        assert_eq!(ev("u^-1 * u"), ev("1"));
        assert_eq!(ev("2 - 3 - 4"), ev("-5"));
    }

    #[test]
    fn forms_and_fields() {
        assert_eq!(ev("du ^^ dv"), Value::TwoForm(TwoForm::volume()));
        assert_eq!(ev("dv ∧ du"), ev("-(du^^dv)/q"));
        assert_eq!(ev("int(pu, du^^dv)"), ev("dv"));
        assert_eq!(ev("int(pv, du^^dv)"), ev("-q*du"));
        assert_eq!(ev("lie(pu, v*u)"), ev("v/q"));
        assert_eq!(ev("d(d(v^2*u^-1))"), ev("0"));
        assert!(matches!(evaluate("d(du^^dv)"), Err(Error::UnsupportedDegree(3))));
        assert!(matches!(evaluate("du^^dv^^du"), Err(Error::UnsupportedDegree(3))));
        assert!(matches!(evaluate("u/(u-u)"), Err(Error::DivisionByZero)));
        assert!(matches!(evaluate("u/v"), Err(Error::TypeMismatch(_))));
        assert!(matches!(evaluate("du + u"), Err(Error::TypeMismatch(_))));
        assert!(matches!(evaluate("d(pu)"), Err(Error::TypeMismatch(_))));
    }

    #[test]
    fn renders_reparse() {
        for s in ["u*v", "d(u*v)", "v*pu", "du⊗dv*u", "(du^^dv)*v", "(q+1)/(2*q)", "-1/q^2", "u^-3 + 2*v", "0"] {
            let v = ev(s);
            assert_eq!(ev(&v.to_string()), v, "{s} -> {v}");
        }
    }

    #[test]
    fn numeric_substitution() {
        let v = ev("(q^2 - 1)/(q - 1) * u").at_q(&BigRational::from_integer(3.into())).unwrap();
        assert_eq!(v, Value::Element(TorusElement::term(ScalarQ::from_int(4), Monomial::new(0, 1))));
        assert!(matches!(ev("1/(q-1)").at_q(&BigRational::from_integer(1.into())), Err(Error::Pole(_))));
    }
}
