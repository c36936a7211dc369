//! DIMACS-like instance files.
//!
//! ```text
//! c optional comments
//! p 1in3 <num_vars> <num_clauses>
//! 1 -2 3
//! ```
//!
//! Each clause line holds exactly three signed non-zero integers; variable
//! `k` is written `k + 1` and a minus sign negates it. The parity variant
//! uses the header `p parity1in3`.

use std::fmt;

use super::{Literal, OneInThreeInstance, ParityOneInThreeInstance, Problem, TripleClause};
use crate::certificate::{Alphabet, Symbol};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    OneInThree(OneInThreeInstance),
    Parity(ParityOneInThreeInstance),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::OneInThree(_) => "1in3",
            Instance::Parity(_) => "parity1in3",
        }
    }

    fn formula(&self) -> &OneInThreeInstance {
        match self {
            Instance::OneInThree(i) => i,
            Instance::Parity(p) => &p.inner,
        }
    }
}

impl Problem for Instance {
    fn alphabet(&self) -> Alphabet {
        Alphabet::binary()
    }

    fn certificate_length(&self) -> usize {
        match self {
            Instance::OneInThree(i) => i.certificate_length(),
            Instance::Parity(p) => p.certificate_length(),
        }
    }

    fn accepts(&self, cert: &[Symbol]) -> bool {
        match self {
            Instance::OneInThree(i) => i.accepts(cert),
            Instance::Parity(p) => p.accepts(cert),
        }
    }
}

impl From<OneInThreeInstance> for Instance {
    fn from(i: OneInThreeInstance) -> Self {
        Instance::OneInThree(i)
    }
}

impl From<ParityOneInThreeInstance> for Instance {
    fn from(p: ParityOneInThreeInstance) -> Self {
        Instance::Parity(p)
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let formula = self.formula();
        writeln!(
            f,
            "p {} {} {}",
            self.kind(),
            formula.num_vars(),
            formula.clauses().len()
        )?;
        for clause in formula.clauses() {
            let [a, b, c] = clause.literals();
            writeln!(f, "{} {} {}", a.to_dimacs(), b.to_dimacs(), c.to_dimacs())?;
        }
        Ok(())
    }
}

impl fmt::Display for OneInThreeInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Instance::OneInThree(self.clone()).fmt(f)
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses an instance file; line numbers in errors are 1-based.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut header: Option<(bool, usize, usize, usize)> = None;
    let mut clauses = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "p" {
            if header.is_some() {
                return Err(parse_err(line_no, "duplicate header"));
            }
            let [_, kind, vars, count] = tokens[..] else {
                return Err(parse_err(
                    line_no,
                    "header must be `p <1in3|parity1in3> <num_vars> <num_clauses>`",
                ));
            };
            let parity = match kind {
                "1in3" => false,
                "parity1in3" => true,
                other => {
                    return Err(parse_err(
                        line_no,
                        format!("unknown problem kind `{other}`"),
                    ))
                }
            };
            let vars = vars
                .parse()
                .map_err(|_| parse_err(line_no, format!("bad variable count `{vars}`")))?;
            let count = count
                .parse()
                .map_err(|_| parse_err(line_no, format!("bad clause count `{count}`")))?;
            header = Some((parity, vars, count, line_no));
            continue;
        }
        let Some((_, num_vars, _, _)) = header else {
            return Err(parse_err(line_no, "clause before `p` header"));
        };
        if tokens.len() != 3 {
            return Err(parse_err(
                line_no,
                format!("expected 3 literals, found {}", tokens.len()),
            ));
        }
        let mut lits = [Literal::pos(0); 3];
        for (slot, tok) in lits.iter_mut().zip(&tokens) {
            let value: i64 = tok
                .parse()
                .map_err(|_| parse_err(line_no, format!("bad literal `{tok}`")))?;
            let lit = Literal::from_dimacs(value)
                .ok_or_else(|| parse_err(line_no, "literal 0 is not allowed"))?;
            if lit.variable >= num_vars {
                return Err(parse_err(
                    line_no,
                    format!("literal {value} exceeds {num_vars} variables"),
                ));
            }
            *slot = lit;
        }
        clauses.push(TripleClause::new(lits));
    }

    let Some((parity, num_vars, count, header_line)) = header else {
        return Err(parse_err(text.lines().count().max(1), "missing `p` header"));
    };
    if clauses.len() != count {
        return Err(parse_err(
            header_line,
            format!("header declares {count} clauses, found {}", clauses.len()),
        ));
    }
    let formula = OneInThreeInstance::new(num_vars, clauses)?;
    Ok(if parity {
        Instance::Parity(ParityOneInThreeInstance::new(formula))
    } else {
        Instance::OneInThree(formula)
    })
}
