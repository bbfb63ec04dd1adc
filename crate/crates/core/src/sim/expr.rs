//! Target expressions naming exact matrices, e.g. `R x I`,
//! `C2[-HDG]`, `C2[SDG phase=zeta]`, `-ZPHASE(2,2)*X*ZPHASE(2,2)`.
//!
//! ```text
//! expr    := product ('x' product)*          tensor, qutrit 0 leftmost
//! product := unary ('*' unary)*              matrix product
//! unary   := '-' unary | atom
//! atom    := gate | 'I' | 'CX' | scalar | '(' expr ')'
//!          | 'C2' '[' expr ['phase=' PHASE] ']'
//! scalar  := ('zeta' | 'omega' | 'i' | 'z36') ['^' INT]
//! ```

use crate::circuit::{parse_single_gate, Gate, SingleGate, Thirds};
use crate::rings::{Cyclo36, RootOfUnity};

use super::apply::{gate_matrix, single_gate_matrix};
use super::matrix::{controlled_target, Matrix};
use super::MAX_QUTRITS;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("target expression, column {column}: {message}")]
pub struct ExprError {
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Phase(String),
    Sym(char),
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let mut word: String = chars[start..i].iter().collect();
            if matches!(word.as_str(), "TAU" | "ZPHASE" | "XPHASE") && chars.get(i) == Some(&'(') {
                let close = chars[i..].iter().position(|&c| c == ')').ok_or(ExprError {
                    column: col,
                    message: "missing `)`".into(),
                })?;
                word.extend(&chars[i..i + close + 1]);
                i += close + 1;
            }
            if word == "phase" && chars.get(i) == Some(&'=') {
                i += 1;
                let start = i;
                while i < chars.len() && !chars[i].is_whitespace() && chars[i] != ']' {
                    i += 1;
                }
                out.push((Tok::Phase(chars[start..i].iter().collect()), col));
            } else {
                out.push((Tok::Ident(word), col));
            }
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let v = s.parse().map_err(|_| ExprError {
                column: col,
                message: format!("bad integer `{s}`"),
            })?;
            out.push((Tok::Int(v), col));
        } else if "[]()*-^".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(ExprError {
                column: col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

enum Val {
    Scalar(Cyclo36),
    Mat(Matrix),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        let column = self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end);
        Err(ExprError {
            column,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Val, ExprError> {
        let mut acc = self.product()?;
        while matches!(self.peek(), Some(Tok::Ident(w)) if w == "x") {
            self.pos += 1;
            let rhs = self.product()?;
            let (Val::Mat(a), Val::Mat(b)) = (&acc, &rhs) else {
                return self.err("tensor product needs matrices on both sides");
            };
            if a.dim() * b.dim() > 3usize.pow(MAX_QUTRITS as u32) {
                return self.err(format!("more than {MAX_QUTRITS} qutrits"));
            }
            acc = Val::Mat(a.kron(b));
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Val, ExprError> {
        let mut acc = self.unary()?;
        while self.eat_sym('*') {
            let rhs = self.unary()?;
            acc = match (acc, rhs) {
                (Val::Scalar(a), Val::Scalar(b)) => Val::Scalar(a * b),
                (Val::Scalar(a), Val::Mat(m)) | (Val::Mat(m), Val::Scalar(a)) => {
                    Val::Mat(m.scale(&a))
                }
                (Val::Mat(a), Val::Mat(b)) => match a.mul(&b) {
                    Ok(m) => Val::Mat(m),
                    Err(e) => return self.err(e.to_string()),
                },
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Val, ExprError> {
        if self.eat_sym('-') {
            return Ok(match self.unary()? {
                Val::Scalar(s) => Val::Scalar(-s),
                Val::Mat(m) => Val::Mat(m.neg()),
            });
        }
        self.atom()
    }

    fn exponent(&mut self) -> Result<i64, ExprError> {
        if !self.eat_sym('^') {
            return Ok(1);
        }
        let neg = self.eat_sym('-');
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(if neg { -v } else { v })
            }
            _ => self.err("expected an integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Val, ExprError> {
        let Some(tok) = self.peek().cloned() else {
            return self.err("unexpected end of expression");
        };
        match tok {
            Tok::Sym('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat_sym(')') {
                    return self.err("expected `)`");
                }
                Ok(v)
            }
            Tok::Int(1) => {
                self.pos += 1;
                Ok(Val::Scalar(Cyclo36::one()))
            }
            Tok::Ident(word) => {
                self.pos += 1;
                self.ident(&word)
            }
            _ => self.err("expected a gate, scalar or `(`"),
        }
    }

    fn ident(&mut self, word: &str) -> Result<Val, ExprError> {
        let root = |k: i64| Val::Scalar(Cyclo36::root(k));
        match word {
            "I" => return Ok(Val::Mat(Matrix::identity(3))),
            "CX" => {
                return Ok(Val::Mat(
                    gate_matrix(&Gate::cx(0, 1), 2).expect("two qutrits"),
                ));
            }
            "zeta" => {
                let e = self.exponent()?;
                return Ok(root(4 * e));
            }
            "omega" => {
                let e = self.exponent()?;
                return Ok(root(12 * e));
            }
            "i" => {
                let e = self.exponent()?;
                return Ok(root(9 * e));
            }
            "z36" => {
                let e = self.exponent()?;
                return Ok(root(e));
            }
            "C2" => return self.controlled(),
            "P9" => {
                let m = single_gate_matrix(SingleGate::X)
                    .mul(&single_gate_matrix(SingleGate::T))
                    .and_then(|m| m.mul(&single_gate_matrix(SingleGate::Xdg)))
                    .expect("3x3 operands");
                return Ok(Val::Mat(m));
            }
            _ => {}
        }
        if let Some(g) = parse_single_gate(word) {
            return Ok(Val::Mat(single_gate_matrix(g)));
        }
        for (prefix, is_x) in [("ZPHASE(", false), ("XPHASE(", true)] {
            if let Some(args) = word.strip_prefix(prefix).and_then(|r| r.strip_suffix(')')) {
                let parts: Vec<&str> = args.split(',').map(str::trim).collect();
                let [a, b] = parts.as_slice() else {
                    return self.err_back(format!("`{word}` takes two parameters"));
                };
                let (Some(a), Some(b)) = (parse_thirds(a), parse_thirds(b)) else {
                    return self.err_back("parameters must be integers or n/3");
                };
                let g = if is_x {
                    SingleGate::XPhase(a, b)
                } else {
                    SingleGate::ZPhase(a, b)
                };
                return Ok(Val::Mat(single_gate_matrix(g)));
            }
        }
        self.err_back(format!("unknown name `{word}`"))
    }

    fn err_back<T>(&mut self, message: impl Into<String>) -> Result<T, ExprError> {
        self.pos -= 1;
        self.err(message)
    }

    fn controlled(&mut self) -> Result<Val, ExprError> {
        if !self.eat_sym('[') {
            return self.err("expected `[` after C2");
        }
        let inner = match self.expr()? {
            Val::Mat(m) if m.dim() == 3 => m,
            _ => return self.err("C2[...] needs a single-qutrit matrix"),
        };
        let mut phase = None;
        if let Some(Tok::Phase(p)) = self.peek().cloned() {
            let r: RootOfUnity = match p.parse() {
                Ok(r) => r,
                Err(e) => return self.err(format!("{e}")),
            };
            phase = Some(r.to_cyclo());
            self.pos += 1;
        }
        if !self.eat_sym(']') {
            return self.err("expected `]`");
        }
        Ok(Val::Mat(controlled_target(&inner, phase.as_ref())))
    }
}

fn parse_thirds(s: &str) -> Option<Thirds> {
    match s.split_once('/') {
        None => s.parse().ok().map(Thirds::integer),
        Some((n, "3")) => n.trim().parse().ok().map(Thirds),
        Some(_) => None,
    }
}

/// Evaluates a target expression to an exact matrix.
pub fn parse_target(src: &str) -> Result<Matrix, ExprError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.chars().count() + 1,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    match v {
        Val::Mat(m) => Ok(m),
        Val::Scalar(_) => Err(ExprError {
            column: 1,
            message: "expression is a bare scalar; multiply it with a gate such as I".into(),
        }),
    }
}
