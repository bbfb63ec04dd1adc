//! Line-oriented circuit text format.
//!
//! ```text
//! # comment
//! qutrits 2
//! H 1
//! CX 0 1
//! C2[-HDG 1] 0
//! C2[SDG 1 phase=zeta] 0
//! ```
//!
//! `C1[...]`/`C0[...]` (controls on `|1⟩`/`|0⟩`) and `P9 i` (`X·T·X†`) are
//! accepted and desugared, so they do not survive a round trip.

use std::fmt;

use crate::rings::RootOfUnity;

use super::gate::{Gate, SingleGate, Thirds};
use super::perm::Permutation;
use super::Circuit;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub token: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )?;
        if !self.token.is_empty() {
            write!(f, " at `{}`", self.token)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
struct Tok<'a> {
    text: &'a str,
    col: usize,
}

fn tokenize(line: &str) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    let indices: Vec<(usize, char)> = line.char_indices().collect();
    let col_of = |byte: usize| line[..byte].chars().count() + 1;
    for &(i, c) in &indices {
        if c.is_whitespace() || c == '[' || c == ']' {
            if let Some(s) = start.take() {
                out.push(Tok {
                    text: &line[s..i],
                    col: col_of(s),
                });
            }
            if c == '[' || c == ']' {
                out.push(Tok {
                    text: &line[i..i + 1],
                    col: col_of(i),
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Tok {
            text: &line[s..],
            col: col_of(s),
        });
    }
    out
}

/// Resolves a parameter-free mnemonic such as `SDG` or `TAU(12)`.
pub fn parse_single_gate(name: &str) -> Option<SingleGate> {
    use SingleGate::*;
    Some(match name {
        "X" => X,
        "XDG" => Xdg,
        "Z" => Z,
        "ZDG" => Zdg,
        "S" => S,
        "SDG" => Sdg,
        "H" => H,
        "HDG" => Hdg,
        "T" => T,
        "TDG" => Tdg,
        "R" => R,
        _ => {
            let inner = name.strip_prefix("TAU(")?.strip_suffix(')')?;
            if inner.is_empty() {
                return Some(Tau(Permutation::IDENTITY));
            }
            Tau(inner.parse().ok()?)
        }
    })
}

struct LineParser<'a> {
    line: usize,
    toks: Vec<Tok<'a>>,
    pos: usize,
    end_col: usize,
}

impl<'a> LineParser<'a> {
    fn err(&self, tok: Option<&Tok<'_>>, message: impl Into<String>) -> ParseError {
        match tok {
            Some(t) => ParseError {
                line: self.line,
                column: t.col,
                token: t.text.to_string(),
                message: message.into(),
            },
            None => ParseError {
                line: self.line,
                column: self.end_col,
                token: String::new(),
                message: message.into(),
            },
        }
    }

    fn peek(&self) -> Option<&Tok<'a>> {
        self.toks.get(self.pos)
    }

    fn next(&mut self, what: &str) -> Result<Tok<'a>, ParseError> {
        match self.toks.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.clone())
            }
            None => Err(self.err(None, format!("expected {what}"))),
        }
    }

    fn index(&mut self) -> Result<(usize, Tok<'a>), ParseError> {
        let t = self.next("qutrit index")?;
        let v = t
            .text
            .parse::<usize>()
            .map_err(|_| self.err(Some(&t), "expected a qutrit index"))?;
        Ok((v, t))
    }

    fn thirds(&mut self) -> Result<Thirds, ParseError> {
        let t = self.next("phase parameter")?;
        let bad = |p: &Self| p.err(Some(&t), "parameter must be an integer or n/3");
        match t.text.split_once('/') {
            None => t
                .text
                .parse::<i64>()
                .map(Thirds::integer)
                .map_err(|_| bad(self)),
            Some((n, "3")) => n.parse::<i64>().map(Thirds).map_err(|_| bad(self)),
            Some((n, "1")) => n.parse::<i64>().map(Thirds::integer).map_err(|_| bad(self)),
            Some(_) => Err(bad(self)),
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(self.err(Some(t), "unexpected trailing token")),
        }
    }

    /// `NAME [params] index`; returns the gate and its target.
    fn single(&mut self) -> Result<(SingleGate, usize), ParseError> {
        let t = self.next("gate name")?;
        let g = match t.text {
            "ZPHASE" => {
                let a = self.thirds()?;
                let b = self.thirds()?;
                SingleGate::ZPhase(a, b)
            }
            "XPHASE" => {
                let a = self.thirds()?;
                let b = self.thirds()?;
                SingleGate::XPhase(a, b)
            }
            name => parse_single_gate(name).ok_or_else(|| self.err(Some(&t), "unknown gate"))?,
        };
        let (q, _) = self.index()?;
        Ok((g, q))
    }

    fn controlled(&mut self, head: &Tok<'a>) -> Result<Vec<Gate>, ParseError> {
        let open = self.next("`[`")?;
        if open.text != "[" {
            return Err(self.err(Some(&open), "expected `[`"));
        }
        let close = self.toks[self.pos..]
            .iter()
            .position(|t| t.text == "]")
            .map(|k| k + self.pos)
            .ok_or_else(|| self.err(None, "missing `]`"))?;
        let lambda = head.text == "LAMBDA";
        let mut inner = LineParser {
            line: self.line,
            toks: self.toks[self.pos..close].to_vec(),
            pos: 0,
            end_col: self.toks[close].col,
        };
        let mut negate = false;
        if let Some(first) = inner.peek().cloned() {
            if first.text == "-" {
                negate = true;
                inner.pos += 1;
            } else if let Some(rest) = first.text.strip_prefix('-') {
                negate = true;
                inner.toks[0] = Tok {
                    text: rest,
                    col: first.col + 1,
                };
            }
        }
        if lambda && negate {
            return Err(self.err(Some(head), "LAMBDA does not take a sign"));
        }
        let (g, target) = inner.single()?;
        let mut phase = if negate {
            RootOfUnity::MINUS_ONE
        } else {
            RootOfUnity::ONE
        };
        if let Some(t) = inner.peek().cloned() {
            let Some(p) = t.text.strip_prefix("phase=") else {
                return Err(inner.err(Some(&t), "unexpected token in controlled gate"));
            };
            if lambda {
                return Err(inner.err(Some(&t), "LAMBDA does not take a phase"));
            }
            let r: RootOfUnity = p
                .parse()
                .map_err(|e: crate::rings::PhaseParseError| inner.err(Some(&t), e.to_string()))?;
            phase = phase * r;
            inner.pos += 1;
        }
        inner.expect_end()?;
        self.pos = close + 1;
        let (control, _) = self.index()?;
        self.expect_end()?;
        if lambda {
            return Ok(vec![Gate::Lambda {
                inner: g,
                control,
                target,
            }]);
        }
        let c2 = Gate::Ctrl2 {
            inner: g,
            phase,
            control,
            target,
        };
        let x = |gate| Gate::Single {
            gate,
            target: control,
        };
        Ok(match head.text {
            "C2" => vec![c2],
            // |1⟩ → |2⟩ under X, |0⟩ → |2⟩ under X†
            "C1" => vec![x(SingleGate::X), c2, x(SingleGate::Xdg)],
            _ => vec![x(SingleGate::Xdg), c2, x(SingleGate::X)],
        })
    }

    fn gate_line(&mut self) -> Result<Vec<Gate>, ParseError> {
        let head = self.next("gate")?;
        match head.text {
            "CX" => {
                let (c, _) = self.index()?;
                let (t, _) = self.index()?;
                self.expect_end()?;
                Ok(vec![Gate::Cx {
                    control: c,
                    target: t,
                }])
            }
            "C2" | "C1" | "C0" | "LAMBDA" => self.controlled(&head),
            "P9" => {
                let (q, _) = self.index()?;
                self.expect_end()?;
                Ok([SingleGate::Xdg, SingleGate::T, SingleGate::X]
                    .into_iter()
                    .map(|gate| Gate::Single { gate, target: q })
                    .collect())
            }
            _ => {
                self.pos -= 1;
                let (gate, target) = self.single()?;
                self.expect_end()?;
                Ok(vec![Gate::Single { gate, target }])
            }
        }
    }
}

/// Parses the circuit text format.
pub fn parse_circuit(text: &str) -> Result<Circuit, ParseError> {
    let mut circuit: Option<Circuit> = None;
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokenize(line);
        if toks.is_empty() {
            continue;
        }
        let end_col = line.chars().count() + 1;
        let mut p = LineParser {
            line: ln + 1,
            toks,
            pos: 0,
            end_col,
        };
        match circuit.as_mut() {
            None => {
                let head = p.next("`qutrits N`")?;
                if head.text != "qutrits" {
                    return Err(p.err(Some(&head), "expected `qutrits N` header"));
                }
                let t = p.next("qutrit count")?;
                let n = t
                    .text
                    .parse::<usize>()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| p.err(Some(&t), "expected a positive qutrit count"))?;
                p.expect_end()?;
                circuit = Some(Circuit::new(n).expect("n > 0"));
            }
            Some(c) => {
                let first = p.toks[0].clone();
                for g in p.gate_line()? {
                    c.push(g).map_err(|e| p.err(Some(&first), e.to_string()))?;
                }
            }
        }
    }
    circuit.ok_or(ParseError {
        line: text.lines().count().max(1),
        column: 1,
        token: String::new(),
        message: "missing `qutrits N` header".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_examples() {
        let c = parse_circuit("qutrits 1\nT 0").unwrap();
        assert_eq!(c.n_qutrits(), 1);
        assert_eq!(c.gates(), &[Gate::single(SingleGate::T, 0)]);
        let c = parse_circuit("qutrits 2\nCX 0 1\nTAU(12) 1").unwrap();
        assert_eq!(c.len(), 2);
        let e = parse_circuit("qutrits 1\nBOGUS 0").unwrap_err();
        assert_eq!((e.line, e.column, e.token.as_str()), (2, 1, "BOGUS"));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_circuit("qutrits 2\n  CX 0 7").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_circuit("qutrits 1\nZPHASE 1/2 0 0").unwrap_err();
        assert_eq!((e.line, e.column, e.token.as_str()), (2, 8, "1/2"));
        let e = parse_circuit("qutrits 2\nC2[X 1 0").unwrap_err();
        assert!(e.message.contains("]"));
        let e = parse_circuit("H 0").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(parse_circuit("qutrits 2\nCX 1 1").is_err());
        assert!(parse_circuit("qutrits 1\nT 0 0").is_err());
        assert!(parse_circuit("# nothing\n").is_err());
    }

    #[test]
    fn controlled_forms() {
        let c = parse_circuit("qutrits 2\nC2[-HDG 1] 0\nC2[SDG 1 phase=zeta] 0\nLAMBDA[Z 0] 1")
            .unwrap();
        assert_eq!(
            c.gates()[0],
            Gate::Ctrl2 {
                inner: SingleGate::Hdg,
                phase: RootOfUnity::MINUS_ONE,
                control: 0,
                target: 1
            }
        );
        assert_eq!(
            c.gates()[1],
            Gate::Ctrl2 {
                inner: SingleGate::Sdg,
                phase: RootOfUnity::zeta9(1),
                control: 0,
                target: 1
            }
        );
        assert_eq!(
            c.gates()[2],
            Gate::Lambda {
                inner: SingleGate::Z,
                control: 1,
                target: 0
            }
        );
        let c = parse_circuit("qutrits 2\nC1[X 1] 0\nP9 1").unwrap();
        assert_eq!(c.len(), 6);
    }

    #[test]
    fn canonical_roundtrip() {
        let text = "qutrits 3\nX 0\nXDG 1\nZ 2\nZDG 0\nS 0\nSDG 1\nH 2\nHDG 0\nT 1\nTDG 2\nR 0\n\
                    TAU(01) 1\nTAU(02) 2\nTAU(12) 0\nTAU(012) 1\nTAU(021) 2\nZPHASE 1/3 -1/3 0\n\
                    XPHASE 2 1 1\nCX 0 2\nC2[X 1] 0\nC2[-HDG 2] 1\nC2[ZPHASE 1 1 1 phase=zeta^7] 0\n\
                    LAMBDA[H 0] 2\n";
        let c = parse_circuit(text).unwrap();
        assert_eq!(c.to_string(), text);
        assert_eq!(parse_circuit(&c.to_string()).unwrap(), c);
    }
}
