//! Finite kei tables on disk.
//!
//! ```text
//! @kei m=3 symbols=+,- tau=+:-
//! @act + 0 1 2
//! @act - 0 1 2
//! @op +
//! 0 2 1
//! 2 1 0
//! 1 0 2
//! @op -
//! ...
//! ```
//! Row `x` of an `@op a` block lists `x ∗_a y` for `y = 0, …, m-1`.

use nanoword::kei::FiniteKei;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum KeiFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing @kei header")]
    NoHeader,
    #[error("no {what} given for symbol `{symbol}`")]
    Incomplete { what: &'static str, symbol: String },
    #[error("{0}")]
    Kei(nanoword::kei::KeiError),
}

pub fn parse(input: &str) -> Result<FiniteKei, KeiFileError> {
    let mut header: Option<(usize, Vec<String>, Vec<usize>)> = None;
    let mut act: Vec<Option<Vec<usize>>> = Vec::new();
    let mut op: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut current_op: Option<usize> = None;

    for (i, raw) in input.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| KeiFileError::Syntax { line: line_no, message };
        let numbers = |tokens: &[&str]| -> Result<Vec<usize>, KeiFileError> {
            tokens.iter().map(|t| t.parse().map_err(|_| err(format!("`{t}` is not an element")))).collect()
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "@kei" {
            let mut m = None;
            let mut symbols = None;
            let mut tau_pairs = Vec::new();
            for t in &tokens[1..] {
                let (k, v) = t.split_once('=').ok_or_else(|| err(format!("expected key=value, found `{t}`")))?;
                match k {
                    "m" => m = Some(v.parse::<usize>().map_err(|_| err(format!("bad size `{v}`")))?),
                    "symbols" => symbols = Some(v.split(',').map(str::to_string).collect::<Vec<_>>()),
                    "tau" => {
                        for p in v.split(',').filter(|p| !p.is_empty()) {
                            let (a, b) = p.split_once(':').ok_or_else(|| err(format!("expected a:b, found `{p}`")))?;
                            tau_pairs.push((a.to_string(), b.to_string()));
                        }
                    }
                    other => return Err(err(format!("unknown header key `{other}`"))),
                }
            }
            let (m, symbols) = m.zip(symbols).ok_or_else(|| err("header needs m= and symbols=".into()))?;
            let index = |s: &str| symbols.iter().position(|x| x == s).ok_or_else(|| err(format!("unknown symbol `{s}`")));
            let mut tau: Vec<usize> = (0..symbols.len()).collect();
            for (a, b) in &tau_pairs {
                let (a, b) = (index(a)?, index(b)?);
                tau[a] = b;
                tau[b] = a;
            }
            act = vec![None; symbols.len()];
            op = vec![Vec::new(); symbols.len()];
            header = Some((m, symbols, tau));
            continue;
        }
        let (m, symbols, _) = header.as_ref().ok_or(KeiFileError::NoHeader)?;
        let index = |s: &str| symbols.iter().position(|x| x == s).ok_or_else(|| err(format!("unknown symbol `{s}`")));
        match tokens[0] {
            "@act" => {
                let a = index(tokens.get(1).copied().unwrap_or(""))?;
                let perm = numbers(&tokens[2..])?;
                if perm.len() != *m {
                    return Err(err(format!("an action lists {m} elements")));
                }
                act[a] = Some(perm);
                current_op = None;
            }
            "@op" => {
                let a = index(tokens.get(1).copied().unwrap_or(""))?;
                op[a].clear();
                current_op = Some(a);
            }
            _ => {
                let a = current_op.ok_or_else(|| err("table row outside an @op block".into()))?;
                let row = numbers(&tokens)?;
                if row.len() != *m || op[a].len() == *m {
                    return Err(err(format!("an @op block has {m} rows of {m} elements")));
                }
                op[a].push(row);
            }
        }
    }

    let (m, symbols, tau) = header.ok_or(KeiFileError::NoHeader)?;
    let mut acts = Vec::new();
    let mut ops = Vec::new();
    for (a, s) in symbols.iter().enumerate() {
        acts.push(act[a].clone().ok_or_else(|| KeiFileError::Incomplete { what: "@act", symbol: s.clone() })?);
        if op[a].len() != m {
            return Err(KeiFileError::Incomplete { what: "@op table", symbol: s.clone() });
        }
        ops.push(op[a].concat());
    }
    FiniteKei::new(m, symbols, tau, acts, ops).map_err(KeiFileError::Kei)
}

pub fn write(kei: &FiniteKei) -> String {
    let m = kei.size();
    let symbols = kei.symbols();
    let tau: Vec<String> = (0..symbols.len())
        .filter(|&a| a < kei.tau()[a])
        .map(|a| format!("{}:{}", symbols[a], symbols[kei.tau()[a]]))
        .collect();
    let mut out = format!("@kei m={m} symbols={}", symbols.join(","));
    if !tau.is_empty() {
        out.push_str(&format!(" tau={}", tau.join(",")));
    }
    out.push('\n');
    let row = |xs: &[usize]| xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    for (a, s) in symbols.iter().enumerate() {
        out.push_str(&format!("@act {s} {}\n", row(kei.act_table(a))));
    }
    for (a, s) in symbols.iter().enumerate() {
        out.push_str(&format!("@op {s}\n"));
        for chunk in kei.op_table(a).chunks(m.max(1)) {
            out.push_str(&row(chunk));
            out.push('\n');
        }
    }
    out
}
