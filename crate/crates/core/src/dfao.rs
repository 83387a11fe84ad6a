//! Deterministic finite automata with output reading base-k digits.
//!
//! Text format (UTF-8, line oriented, `#` starts a comment):
//!
//! ```text
//! base 2 order msd
//! state q0 output 0
//! on 0 -> q0
//! on 1 -> q1
//! state q1 output 1
//! on 0 -> q1
//! on 1 -> q0
//! ```
//!
//! The first declared state is the start state.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::source::tokens;

/// Bundled machines for the Thue-Morse word and two of its complexity
/// sequences.
pub mod fixtures {
    pub const THUE_MORSE: &str = include_str!("../data/thue_morse.dfao");
    /// Extended Lie complexity of the Thue-Morse word.
    pub const EL_TM: &str = include_str!("../data/el_tm.dfao");
    /// First difference of the prefix Lie complexity of the Thue-Morse word.
    pub const DPL_TM: &str = include_str!("../data/dpl_tm.dfao");

    pub fn by_name(name: &str) -> Option<&'static str> {
        match name {
            "thue_morse.dfao" => Some(THUE_MORSE),
            "el_tm.dfao" => Some(EL_TM),
            "dpl_tm.dfao" => Some(DPL_TM),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DigitOrder {
    #[default]
    MostSignificantFirst,
    LeastSignificantFirst,
}

/// Canonical base-`k` digits of `n` (no leading zeros; `0` has no digits).
pub fn digits(n: u64, k: u32, order: DigitOrder) -> Vec<u32> {
    assert!(k >= 2, "base must be at least 2");
    let mut out = Vec::new();
    let mut m = n;
    while m > 0 {
        out.push((m % k as u64) as u32);
        m /= k as u64;
    }
    if order == DigitOrder::MostSignificantFirst {
        out.reverse();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfao {
    base: u32,
    order: DigitOrder,
    names: Vec<String>,
    outputs: Vec<i64>,
    /// `delta[state * base + digit]`
    delta: Vec<usize>,
}

impl Dfao {
    /// Builds a machine from per-state transition rows; state 0 starts.
    pub fn new(
        base: u32,
        order: DigitOrder,
        outputs: Vec<i64>,
        transitions: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if base < 2 {
            return Err(Error::InvalidSpec("base must be at least 2".into()));
        }
        if outputs.is_empty() || outputs.len() != transitions.len() {
            return Err(Error::InvalidSpec(
                "one output and one row per state".into(),
            ));
        }
        let mut delta = Vec::with_capacity(outputs.len() * base as usize);
        for (state, row) in transitions.iter().enumerate() {
            for digit in 0..base {
                let target = *row.get(digit as usize).ok_or(Error::PartialTransition {
                    state: state.to_string(),
                    digit,
                })?;
                if target >= outputs.len() {
                    return Err(Error::InvalidSpec(format!("unknown target state {target}")));
                }
                delta.push(target);
            }
        }
        Ok(Dfao {
            base,
            order,
            names: (0..outputs.len()).map(|i| format!("q{i}")).collect(),
            outputs,
            delta,
        })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn order(&self) -> DigitOrder {
        self.order
    }

    pub fn state_count(&self) -> usize {
        self.outputs.len()
    }

    pub fn outputs(&self) -> &[i64] {
        &self.outputs
    }

    pub fn transition(&self, state: usize, digit: u32) -> usize {
        self.delta[state * self.base as usize + digit as usize]
    }

    /// Leading zeros (MSD) or trailing zeros (LSD) leave the result unchanged
    /// exactly when reading `0` from the start state stays there (MSD), or
    /// when every state is fixed by `0` (LSD). Evaluation always uses the
    /// canonical representation either way.
    pub fn is_zero_stable(&self) -> bool {
        match self.order {
            DigitOrder::MostSignificantFirst => self.transition(0, 0) == 0,
            DigitOrder::LeastSignificantFirst => {
                (0..self.state_count()).all(|s| self.transition(s, 0) == s)
            }
        }
    }

    pub fn eval(&self, n: u64) -> i64 {
        let state = digits(n, self.base, self.order)
            .into_iter()
            .fold(0, |s, d| self.transition(s, d));
        self.outputs[state]
    }

    /// Feeds an arbitrary digit string (possibly with padding zeros).
    pub fn eval_digits(&self, digits: &[u32]) -> i64 {
        let state = digits.iter().fold(0, |s, &d| self.transition(s, d));
        self.outputs[state]
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse(text)
    }

    pub fn to_text(&self) -> String {
        let order = match self.order {
            DigitOrder::MostSignificantFirst => "msd",
            DigitOrder::LeastSignificantFirst => "lsd",
        };
        let mut out = format!("base {} order {}\n", self.base, order);
        for (s, name) in self.names.iter().enumerate() {
            let _ = writeln!(out, "state {} output {}", name, self.outputs[s]);
            for d in 0..self.base {
                let _ = writeln!(out, "on {} -> {}", d, self.names[self.transition(s, d)]);
            }
        }
        out
    }
}

struct StateDraft {
    name: String,
    output: i64,
    on: Vec<Option<(String, usize, usize)>>,
}

fn parse(text: &str) -> Result<Dfao> {
    let mut header: Option<(u32, DigitOrder)> = None;
    let mut states: Vec<StateDraft> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        let Some(&(col, keyword)) = toks.first() else {
            continue;
        };
        let want = |n: usize, usage: &str| -> Result<()> {
            if toks.len() == n {
                Ok(())
            } else {
                let c = toks.get(n).map_or(content.chars().count() + 1, |t| t.0);
                Err(Error::parse(line, c, format!("expected `{usage}`")))
            }
        };
        match keyword {
            "base" => {
                if header.is_some() {
                    return Err(Error::parse(line, col, "duplicate base line"));
                }
                want(4, "base <k> order <msd|lsd>")?;
                let k: u32 = toks[1]
                    .1
                    .parse()
                    .map_err(|_| Error::parse(line, toks[1].0, "base must be an integer"))?;
                if k < 2 {
                    return Err(Error::parse(line, toks[1].0, "base must be at least 2"));
                }
                if toks[2].1 != "order" {
                    return Err(Error::parse(line, toks[2].0, "expected `order`"));
                }
                let order = match toks[3].1 {
                    "msd" => DigitOrder::MostSignificantFirst,
                    "lsd" => DigitOrder::LeastSignificantFirst,
                    _ => return Err(Error::parse(line, toks[3].0, "order must be msd or lsd")),
                };
                header = Some((k, order));
            }
            "state" => {
                let Some((k, _)) = header else {
                    return Err(Error::parse(line, col, "`base` line must come first"));
                };
                want(4, "state <id> output <int>")?;
                if toks[2].1 != "output" {
                    return Err(Error::parse(line, toks[2].0, "expected `output`"));
                }
                let name = toks[1].1.to_string();
                if index.contains_key(&name) {
                    return Err(Error::parse(
                        line,
                        toks[1].0,
                        format!("state {name} redeclared"),
                    ));
                }
                let output: i64 = toks[3]
                    .1
                    .parse()
                    .map_err(|_| Error::parse(line, toks[3].0, "output must be an integer"))?;
                index.insert(name.clone(), states.len());
                states.push(StateDraft {
                    name,
                    output,
                    on: vec![None; k as usize],
                });
            }
            "on" => {
                let Some(current) = states.last_mut() else {
                    return Err(Error::parse(line, col, "`on` before any `state`"));
                };
                want(4, "on <digit> -> <id>")?;
                let digit: usize = toks[1]
                    .1
                    .parse()
                    .ok()
                    .filter(|d| *d < current.on.len())
                    .ok_or_else(|| Error::parse(line, toks[1].0, "digit out of range"))?;
                if toks[2].1 != "->" {
                    return Err(Error::parse(line, toks[2].0, "expected `->`"));
                }
                if current.on[digit].is_some() {
                    return Err(Error::parse(line, col, "duplicate transition"));
                }
                current.on[digit] = Some((toks[3].1.to_string(), line, toks[3].0));
            }
            other => {
                return Err(Error::parse(
                    line,
                    col,
                    format!("unknown directive {other:?}"),
                ));
            }
        }
    }

    let Some((base, order)) = header else {
        return Err(Error::parse(
            1,
            1,
            "missing `base <k> order <msd|lsd>` line",
        ));
    };
    if states.is_empty() {
        return Err(Error::parse(
            text.lines().count().max(1),
            1,
            "no states declared",
        ));
    }
    let mut delta = Vec::with_capacity(states.len() * base as usize);
    for st in &states {
        for (digit, slot) in st.on.iter().enumerate() {
            let Some((target, tline, tcol)) = slot else {
                return Err(Error::PartialTransition {
                    state: st.name.clone(),
                    digit: digit as u32,
                });
            };
            let t = *index
                .get(target)
                .ok_or_else(|| Error::parse(*tline, *tcol, format!("unknown state {target}")))?;
            delta.push(t);
        }
    }
    Ok(Dfao {
        base,
        order,
        names: states.iter().map(|s| s.name.clone()).collect(),
        outputs: states.iter().map(|s| s.output).collect(),
        delta,
    })
}

/// Reads a machine from `path`; a bare bundled fixture name
/// (`thue_morse.dfao`, `el_tm.dfao`, `dpl_tm.dfao`) resolves to the bundled
/// copy when no such file exists.
pub fn load(path: &str) -> Result<Dfao> {
    let p = Path::new(path);
    if p.exists() {
        return parse(&std::fs::read_to_string(p)?);
    }
    let name = p.file_name().and_then(|s| s.to_str()).unwrap_or(path);
    match fixtures::by_name(name) {
        Some(text) => parse(text),
        None => Err(Error::Io(format!("cannot read DFAO file {path}"))),
    }
}
