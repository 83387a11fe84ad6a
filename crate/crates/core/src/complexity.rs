//! Factor, Lie, extended Lie and prefix Lie complexity.
//!
//! Classes are never found by enumerating all words of a length. Each
//! length-`n` factor is tested for being the least rotation of its class,
//! and a class counts once all of its rotations (or, for the extended
//! count, all of its length-`n` fractional powers) are present.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::{self, Strategy};
use crate::rauzy::{self, DEFAULT_CIRCUIT_CAP};
use crate::source::{choose_horizon, materialize_prefix, Horizon, HorizonPolicy, Prefix, WordSpec};
use crate::word::{
    canonical_rotation, class_contained, is_canonical, is_primitive, periods, FactorSet, Sym,
};

/// Every rotation of `u` is a member of `contains`.
fn all_rotations<F: Fn(&[Sym]) -> bool>(u: &[Sym], buf: &mut Vec<Sym>, contains: F) -> bool {
    (1..u.len()).all(|k| {
        buf.clear();
        buf.extend_from_slice(&u[k..]);
        buf.extend_from_slice(&u[..k]);
        contains(buf)
    })
}

/// `L_w(n)` from `F_w(n)`. The empty word forms one class.
pub fn count_lie(factors: &FactorSet) -> usize {
    if factors.n() == 0 {
        return 1;
    }
    let mut buf = Vec::new();
    factors
        .iter()
        .filter(|x| is_canonical(x) && all_rotations(x, &mut buf, |r| factors.contains(r)))
        .count()
}

/// `p(n)`: primitive classes of length `n` fully contained in `F_w(n)`.
/// `[ε]` is not primitive, so `p(0) = 0`.
pub fn count_primitive_lie(factors: &FactorSet) -> usize {
    if factors.n() == 0 {
        return 0;
    }
    let mut buf = Vec::new();
    factors
        .iter()
        .filter(|x| {
            is_canonical(x)
                && is_primitive(x).unwrap_or(false)
                && all_rotations(x, &mut buf, |r| factors.contains(r))
        })
        .count()
}

/// Canonical roots `q` (primitive, `|q| <= n`) with `[q]_n ⊆ F_w(n)`.
///
/// If `[q]_n` is contained then `q^{n/|q|}` is a factor with period `|q|`
/// whose prefix of that length is a rotation of `q`, so scanning the periods
/// of each factor finds every candidate.
pub fn extended_lie_roots(factors: &FactorSet) -> Vec<Vec<Sym>> {
    let n = factors.n();
    let mut found: HashSet<Vec<Sym>> = HashSet::new();
    let mut rejected: HashSet<Vec<Sym>> = HashSet::new();
    for x in factors.iter() {
        for d in periods(x) {
            let q = &x[..d];
            if !is_primitive(q).unwrap_or(false) {
                continue;
            }
            let root = canonical_rotation(q).expect("nonempty");
            if found.contains(&root) || rejected.contains(&root) {
                continue;
            }
            if class_contained(&root, n, factors) {
                found.insert(root);
            } else {
                rejected.insert(root);
            }
        }
    }
    let mut roots: Vec<Vec<Sym>> = found.into_iter().collect();
    roots.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    roots
}

/// `eL_w(n)`; `eL_w(0) = 1` by convention.
pub fn count_extended_lie(factors: &FactorSet) -> usize {
    if factors.n() == 0 {
        return 1;
    }
    extended_lie_roots(factors).len()
}

pub fn lie_complexity(spec: &WordSpec, n: usize, horizon: Horizon) -> Result<usize> {
    Ok(count_lie(&Prefix::new(spec, horizon)?.factors(n)?))
}

pub fn extended_lie_complexity(spec: &WordSpec, n: usize, horizon: Horizon) -> Result<usize> {
    Ok(count_extended_lie(&Prefix::new(spec, horizon)?.factors(n)?))
}

pub fn primitive_lie(spec: &WordSpec, n: usize, horizon: Horizon) -> Result<usize> {
    Ok(count_primitive_lie(
        &Prefix::new(spec, horizon)?.factors(n)?,
    ))
}

/// `pL(0), pL(1), …, pL(|word|)` for the prefixes of `word`, each counting
/// `[ε]`.
///
/// Incremental: the factors new to `w_i` are the suffixes of `w_i` longer
/// than its longest suffix occurring earlier, and a class can only become
/// contained at step `i` through one of those.
pub fn prefix_lie_sequence(word: &[Sym]) -> Vec<usize> {
    let mut seen: HashSet<&[Sym]> = HashSet::new();
    let mut classes: HashSet<Vec<Sym>> = HashSet::new();
    let mut out = Vec::with_capacity(word.len() + 1);
    out.push(1);
    let mut buf = Vec::new();
    for end in 1..=word.len() {
        let prefix = &word[..end];
        let mut first_new = 1;
        while first_new <= end && seen.contains(&prefix[end - first_new..]) {
            first_new += 1;
        }
        for m in first_new..=end {
            seen.insert(&prefix[end - m..]);
        }
        for m in first_new..=end {
            let f = &prefix[end - m..];
            if all_rotations(f, &mut buf, |r| seen.contains(r)) {
                classes.insert(canonical_rotation(f).expect("nonempty"));
            }
        }
        out.push(1 + classes.len());
    }
    out
}

/// `pL_w(i)`: classes (including `[ε]`) contained in the factors of `w_i`.
pub fn prefix_lie(spec: &WordSpec, i: usize) -> Result<usize> {
    let prefix = materialize_prefix(spec, i)?;
    Ok(*prefix_lie_sequence(&prefix)
        .last()
        .expect("pL(0) always present"))
}

/// `ΔpL_w(n) = pL_w(n+1) - pL_w(n)`.
pub fn delta_prefix_lie(spec: &WordSpec, n: usize) -> Result<usize> {
    let prefix = materialize_prefix(spec, n + 1)?;
    let seq = prefix_lie_sequence(&prefix);
    Ok(seq[n + 1] - seq[n])
}

/// One line of a complexity table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexityRow {
    pub n: usize,
    #[serde(rename = "C")]
    pub c: usize,
    #[serde(rename = "L")]
    pub l: usize,
    #[serde(rename = "eL")]
    pub el: usize,
    /// Undefined at `n = 0`.
    pub p: Option<usize>,
    /// Undefined past the end of a finite word.
    #[serde(rename = "pL")]
    pub pl: Option<usize>,
    #[serde(rename = "dpL")]
    pub dpl: Option<usize>,
    /// Rauzy graphs start at level 1.
    #[serde(rename = "Qs")]
    pub qs: Option<usize>,
    pub horizon: Horizon,
}

impl ComplexityRow {
    /// Values compared by the horizon-doubling check.
    fn values(&self) -> [(&'static str, Option<usize>); 7] {
        [
            ("C", Some(self.c)),
            ("L", Some(self.l)),
            ("eL", Some(self.el)),
            ("p", self.p),
            ("pL", self.pl),
            ("dpL", self.dpl),
            ("Qs", self.qs),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableOptions {
    pub policy: HorizonPolicy,
    pub circuit_cap: usize,
    pub strategy: Strategy,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            policy: HorizonPolicy::default(),
            circuit_cap: DEFAULT_CIRCUIT_CAP,
            strategy: Strategy::default(),
        }
    }
}

fn rows_at(
    spec: &WordSpec,
    n_max: usize,
    horizon: Horizon,
    prefix_lie: &[usize],
    options: &TableOptions,
) -> Result<Vec<ComplexityRow>> {
    let prefix = Prefix::new(spec, horizon)?;
    let horizon = prefix.horizon();
    let ns: Vec<usize> = (0..=n_max).collect();
    par::try_map(&ns, options.strategy, |&n| {
        let f = prefix.factors(n)?;
        let qs = if n == 0 {
            None
        } else {
            let graph = rauzy::RauzyGraph::from_factor_sets(&f, &prefix.factors(n + 1)?)?;
            Some(rauzy::count_quasi_small(
                &graph.elementary_circuits(options.circuit_cap)?,
            ))
        };
        Ok(ComplexityRow {
            n,
            c: f.len(),
            l: count_lie(&f),
            el: count_extended_lie(&f),
            p: (n > 0).then(|| count_primitive_lie(&f)),
            pl: prefix_lie.get(n).copied(),
            dpl: match (prefix_lie.get(n), prefix_lie.get(n + 1)) {
                (Some(a), Some(b)) => Some(b - a),
                _ => None,
            },
            qs,
            horizon,
        })
    })
}

/// Fails with [`Error::UnstableHorizon`] unless both row sets agree.
pub(crate) fn ensure_stable(rows: &[ComplexityRow], doubled: &[ComplexityRow]) -> Result<()> {
    for (a, b) in rows.iter().zip(doubled) {
        for ((name, x), (_, y)) in a.values().into_iter().zip(b.values()) {
            if x != y {
                let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
                return Err(Error::UnstableHorizon {
                    quantity: name,
                    n: a.n,
                    horizon: a.horizon.length,
                    at_horizon: show(x),
                    at_double: show(y),
                });
            }
        }
    }
    Ok(())
}

/// Rows `n = 0..=n_max`. Heuristic horizons are recomputed at twice the
/// length and must give identical values.
pub fn complexity_table(
    spec: &WordSpec,
    n_max: usize,
    options: &TableOptions,
) -> Result<Vec<ComplexityRow>> {
    let horizon = choose_horizon(spec, n_max + 1, &options.policy);
    let pl_len = match spec.finite_len() {
        Some(len) => len.min(n_max + 1),
        None => n_max + 1,
    };
    let pl = prefix_lie_sequence(&materialize_prefix(spec, pl_len)?);
    let rows = rows_at(spec, n_max, horizon, &pl, options)?;
    if !horizon.is_exact() {
        let doubled = rows_at(spec, n_max, horizon.doubled(), &pl, options)?;
        ensure_stable(&rows, &doubled)?;
    }
    Ok(rows)
}

/// Extended Lie values `eL(0..=n_max)` with the doubling check, without the
/// rest of the table.
pub fn extended_lie_series(
    spec: &WordSpec,
    n_max: usize,
    options: &TableOptions,
) -> Result<Vec<usize>> {
    let horizon = choose_horizon(spec, n_max, &options.policy);
    let series = |h: Horizon| -> Result<Vec<usize>> {
        let prefix = Prefix::new(spec, h)?;
        let ns: Vec<usize> = (0..=n_max).collect();
        par::try_map(&ns, options.strategy, |&n| {
            Ok(count_extended_lie(&prefix.factors(n)?))
        })
    };
    let values = series(horizon)?;
    if !horizon.is_exact() {
        let doubled = series(horizon.doubled())?;
        if let Some(n) = (0..=n_max).find(|&n| values[n] != doubled[n]) {
            return Err(Error::UnstableHorizon {
                quantity: "eL",
                n,
                horizon: horizon.length,
                at_horizon: values[n].to_string(),
                at_double: doubled[n].to_string(),
            });
        }
    }
    Ok(values)
}

fn cell(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub const TSV_HEADER: &str = "n\tC\tL\teL\tp\tpL\tdpL\tQs";

/// Tab-separated rendering; undefined cells print as `-`.
pub fn render_tsv(rows: &[ComplexityRow]) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for r in rows {
        let line = [
            r.n.to_string(),
            r.c.to_string(),
            r.l.to_string(),
            r.el.to_string(),
            cell(r.p),
            cell(r.pl),
            cell(r.dpl),
            cell(r.qs),
        ]
        .join("\t");
        out.push_str(&line);
        out.push('\n');
    }
    out
}
