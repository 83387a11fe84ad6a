//! Both sides of every bound, evaluated on concrete words.
//!
//! Margins are `rhs - lhs` and are reported even when large, so tight cases
//! (margin 0) stand out.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complexity::{
    complexity_table, extended_lie_series, prefix_lie_sequence, ComplexityRow, TableOptions,
};
use crate::dfao::{fixtures, Dfao};
use crate::error::Result;
use crate::par;
use crate::rauzy::RauzyGraph;
use crate::source::{choose_horizon, materialize_prefix, Horizon, Prefix, WordSpec};
use crate::word::{
    canonical_rotation, class_power_set, is_primitive, smallest_period, FactorSet, Sym,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TheoremId {
    #[serde(rename = "T1.1")]
    Lie,
    #[serde(rename = "T1.2")]
    QuasiSmall,
    #[serde(rename = "T1.3")]
    LiePair,
    #[serde(rename = "T1.4")]
    LieTriple,
    #[serde(rename = "T-eL")]
    ExtendedLie,
    #[serde(rename = "T-prefix")]
    Prefix,
    #[serde(rename = "L-size")]
    LemmaSize,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::Lie,
        TheoremId::QuasiSmall,
        TheoremId::LiePair,
        TheoremId::LieTriple,
        TheoremId::ExtendedLie,
        TheoremId::Prefix,
        TheoremId::LemmaSize,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Lie => "T1.1",
            TheoremId::QuasiSmall => "T1.2",
            TheoremId::LiePair => "T1.3",
            TheoremId::LieTriple => "T1.4",
            TheoremId::ExtendedLie => "T-eL",
            TheoremId::Prefix => "T-prefix",
            TheoremId::LemmaSize => "L-size",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub word_id: String,
    pub theorem_id: TheoremId,
    pub n: usize,
    pub lhs: i64,
    pub rhs: i64,
    pub margin: i64,
    pub holds: bool,
    /// `None` for checks that do not look at a word.
    pub horizon: Option<Horizon>,
    /// `false` for rows evaluated outside the stated range of the bound
    /// (T1.4 below `n = 6`); they never fail a run.
    pub asserted: bool,
}

impl TheoremReport {
    fn bound(
        word_id: &str,
        theorem_id: TheoremId,
        n: usize,
        lhs: i64,
        rhs: i64,
        horizon: Option<Horizon>,
    ) -> Self {
        TheoremReport {
            word_id: word_id.to_string(),
            theorem_id,
            n,
            lhs,
            rhs,
            margin: rhs - lhs,
            holds: lhs <= rhs,
            horizon,
            asserted: true,
        }
    }

    /// Counts against the run: asserted and violated.
    pub fn is_failure(&self) -> bool {
        self.asserted && !self.holds
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifyOptions {
    pub table: TableOptions,
    /// Test hook: added to every `L` value before the bounds are checked.
    pub lie_fault: i64,
}

/// The theorem rows for one word, `1 <= n <= n_max` (and `0 <= i <= n_max`
/// for the prefix bound, stopping at the end of a finite word).
pub fn check_theorems(
    spec: &WordSpec,
    word_id: &str,
    n_max: usize,
    options: &VerifyOptions,
) -> Result<Vec<TheoremReport>> {
    if n_max == 0 {
        return Ok(Vec::new());
    }
    let rows = complexity_table(spec, n_max + 2, &options.table)?;
    Ok(theorem_rows(&rows, word_id, n_max, options.lie_fault))
}

/// Theorem rows derived from an already computed table with at least
/// `n_max + 3` rows.
pub fn theorem_rows(
    rows: &[ComplexityRow],
    word_id: &str,
    n_max: usize,
    lie_fault: i64,
) -> Vec<TheoremReport> {
    assert!(rows.len() >= n_max + 3, "table too short for n_max");
    let c = |n: usize| rows[n].c as i64;
    let l = |n: usize| rows[n].l as i64 + lie_fault;
    let p = |n: usize| rows[n].p.unwrap_or(0) as i64;
    let alph = c(1);
    let base = |n: usize| c(n) - c(n - 1) + 1;
    let h = |n: usize| Some(rows[n].horizon);
    let qs = |n: usize| rows[n].qs.expect("defined for n >= 1") as i64;
    let el = |n: usize| rows[n].el as i64;

    let mut out = Vec::new();
    for n in 1..=n_max {
        out.push(TheoremReport::bound(
            word_id,
            TheoremId::Lie,
            n,
            l(n),
            base(n),
            h(n),
        ));
    }
    for n in 1..=n_max {
        let qs = qs(n);
        out.push(TheoremReport::bound(
            word_id,
            TheoremId::QuasiSmall,
            n,
            qs,
            base(n + 1),
            h(n + 1),
        ));
    }
    for n in 1..=n_max {
        let rhs = base(n) + alph + p(n + 1);
        out.push(TheoremReport::bound(
            word_id,
            TheoremId::LiePair,
            n,
            l(n) + l(n + 1),
            rhs,
            h(n + 1),
        ));
    }
    for n in 1..=n_max {
        let lhs = l(n) + l(n + 1) + l(n + 2);
        let rhs = base(n) + 3 * alph + alph * alph + p(n + 1) + p(n + 2);
        let mut r = TheoremReport::bound(word_id, TheoremId::LieTriple, n, lhs, rhs, h(n + 2));
        r.asserted = n >= 6;
        out.push(r);
    }
    for n in 1..=n_max {
        out.push(TheoremReport::bound(
            word_id,
            TheoremId::ExtendedLie,
            n,
            el(n),
            base(n),
            h(n),
        ));
    }
    for (i, row) in rows.iter().enumerate().take(n_max + 1) {
        let Some(d) = row.dpl else { break };
        let d = d as i64;
        let mut r = TheoremReport::bound(word_id, TheoremId::Prefix, i, d, 1, None);
        r.holds = (0..=1).contains(&d);
        out.push(r);
    }
    out
}

/// Named words: Thue-Morse, Fibonacci, period-doubling, three periodic words
/// and `random` seeded finite words over `{a,b}` or `{a,b,c}` of length 1 to 64.
pub fn corpus(seed: u64, random: usize) -> Vec<(String, WordSpec)> {
    let mut words = vec![
        ("thue-morse".to_string(), WordSpec::thue_morse()),
        ("fibonacci".to_string(), WordSpec::fibonacci()),
        ("period-doubling".to_string(), WordSpec::period_doubling()),
    ];
    for root in ["aba", "ab", "abaaabaaaaba"] {
        words.push((
            format!("power-{root}"),
            WordSpec::power(root).expect("valid root"),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..random {
        let word = random_word(&mut rng, 64);
        words.push((
            format!("random-{i}"),
            WordSpec::finite(&word).expect("nonempty"),
        ));
    }
    words
}

/// A word of length `1..=max_len` over two or three letters.
pub fn random_word(rng: &mut impl Rng, max_len: usize) -> String {
    let letters = if rng.gen_bool(0.5) { 2 } else { 3 };
    let len = rng.gen_range(1..=max_len);
    (0..len)
        .map(|_| (b'a' + rng.gen_range(0..letters)) as char)
        .collect()
}

/// [`check_theorems`] over many words, in input order.
pub fn check_corpus(
    words: &[(String, WordSpec)],
    n_max: usize,
    options: &VerifyOptions,
) -> Result<Vec<TheoremReport>> {
    let per_word = par::try_map(words, options.table.strategy, |(id, spec)| {
        check_theorems(spec, id, n_max, options)
    })?;
    Ok(per_word.into_iter().flatten().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaSizeReport {
    pub alphabet_size: usize,
    pub max_len: usize,
    /// Primitive words examined.
    pub words: usize,
    /// `(p, n)` pairs whose power-set size was compared with `|p|`.
    pub size_checks: usize,
    pub failures: Vec<String>,
}

impl LemmaSizeReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    /// One `L-size` row per word length: `lhs` is the number of failures at
    /// that length and `rhs` is 0.
    pub fn rows(&self) -> Vec<TheoremReport> {
        let id = format!("alphabet-{}", self.alphabet_size);
        (1..=self.max_len)
            .map(|len| {
                let prefix = format!("|p|={len} ");
                let bad = self
                    .failures
                    .iter()
                    .filter(|f| f.starts_with(&prefix))
                    .count();
                TheoremReport::bound(&id, TheoremId::LemmaSize, len, bad as i64, 0, None)
            })
            .collect()
    }
}

/// All words of length `len` over `0..k`, in lexicographic order.
fn all_words(k: usize, len: usize) -> Vec<Vec<Sym>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k as Sym).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

/// For every primitive `p` over `k` letters with `|p| <= max_len` and every
/// `n` in `|p|-1 ..= 2|p|`: `|[p]_n| = |p|`, and for `n >= 1` equal-length
/// primitive words share `[·]_n` exactly when they are conjugate.
pub fn check_lemma_size(k: usize, max_len: usize) -> LemmaSizeReport {
    assert!((1..=26).contains(&k));
    let render = |w: &[Sym]| -> String { w.iter().map(|&s| (b'a' + s) as char).collect() };
    let mut report = LemmaSizeReport {
        alphabet_size: k,
        max_len,
        words: 0,
        size_checks: 0,
        failures: Vec::new(),
    };
    for len in 1..=max_len {
        let prims: Vec<Vec<Sym>> = all_words(k, len)
            .into_iter()
            .filter(|w| is_primitive(w).unwrap_or(false))
            .collect();
        report.words += prims.len();
        for n in len - 1..=2 * len {
            let mut by_set: HashMap<BTreeSet<Vec<Sym>>, Vec<Sym>> = HashMap::new();
            let mut by_class: HashMap<Vec<Sym>, BTreeSet<Vec<Sym>>> = HashMap::new();
            for p in &prims {
                let set = class_power_set(p, n).expect("nonempty");
                report.size_checks += 1;
                if set.len() != len {
                    report.failures.push(format!(
                        "|p|={len} p={} n={n}: |[p]_n| = {}",
                        render(p),
                        set.len()
                    ));
                }
                if n == 0 {
                    continue;
                }
                let class = canonical_rotation(p).expect("nonempty");
                if let Some(other) = by_set.get(&set) {
                    if *other != class {
                        report.failures.push(format!(
                            "|p|={len} n={n}: [{}]_n = [{}]_n but not conjugate",
                            render(&class),
                            render(other)
                        ));
                    }
                } else {
                    by_set.insert(set.clone(), class.clone());
                }
                if let Some(other) = by_class.get(&class) {
                    if *other != set {
                        report.failures.push(format!(
                            "|p|={len} p={} n={n}: conjugates with different [p]_n",
                            render(p)
                        ));
                    }
                } else {
                    by_class.insert(class, set);
                }
            }
        }
    }
    report
}

/// `L_w(n)` counted through primitive roots: each contained class `[u]`
/// with `|u| = n` is `[q^{n/d}]` for one primitive class `[q]` with `d | n`,
/// and `[u] ⊆ F_w(n)` exactly when `[q]_n ⊆ F_w(n)`. Returns the count for
/// each divisor `d`.
pub fn lie_by_divisors(factors: &FactorSet) -> BTreeMap<usize, usize> {
    let n = factors.n();
    let mut roots: BTreeMap<usize, BTreeSet<Vec<Sym>>> = BTreeMap::new();
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        roots.insert(d, BTreeSet::new());
    }
    for u in factors.iter() {
        let d = smallest_period(u);
        if !n.is_multiple_of(d) {
            continue;
        }
        let q = canonical_rotation(&u[..d]).expect("nonempty");
        let contained = class_power_set(&q, n)
            .expect("nonempty")
            .iter()
            .all(|v| factors.contains(v));
        if contained {
            roots.get_mut(&d).expect("divisor").insert(q);
        }
    }
    roots.into_iter().map(|(d, qs)| (d, qs.len())).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorCheck {
    pub n: usize,
    pub root: String,
    /// Levels `n-2` and, from `n = 6`, `n-3` where a circuit `C(q, ·)` was
    /// required but missing.
    pub missing: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorReport {
    pub word_id: String,
    pub horizon: Horizon,
    /// Every `(n, q)` whose premise `C(q, n-1)` holds.
    pub checks: Vec<DivisorCheck>,
}

impl DivisorReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.missing.is_empty())
    }
}

/// For `4 <= n <= n_max` and primitive `q` with `|q|` a proper divisor of
/// `n`: if `Γ_{n-1}` has the circuit `C(q, n-1)` then `Γ_{n-2}` has
/// `C(q, n-2)`, and for `n >= 6` `Γ_{n-3}` has `C(q, n-3)`.
pub fn check_divisor_bijections(
    spec: &WordSpec,
    word_id: &str,
    n_max: usize,
    options: &TableOptions,
) -> Result<DivisorReport> {
    let horizon = choose_horizon(spec, n_max, &options.policy);
    let prefix = Prefix::new(spec, horizon)?;
    let levels: Vec<usize> = (1..n_max).collect();
    let roots = par::try_map(&levels, options.strategy, |&l| {
        let graph = RauzyGraph::from_factor_sets(&prefix.factors(l)?, &prefix.factors(l + 1)?)?;
        Ok(graph
            .elementary_circuits(options.circuit_cap)?
            .into_iter()
            .map(|c| c.root)
            .collect::<HashSet<Vec<Sym>>>())
    })?;
    let at = |l: usize| &roots[l - 1];
    let mut checks = Vec::new();
    for n in 4..=n_max {
        let mut premise: Vec<&Vec<Sym>> = at(n - 1)
            .iter()
            .filter(|q| q.len() < n && n % q.len() == 0)
            .collect();
        premise.sort();
        for q in premise {
            let mut missing = Vec::new();
            if !at(n - 2).contains(q) {
                missing.push(n - 2);
            }
            if n >= 6 && !at(n - 3).contains(q) {
                missing.push(n - 3);
            }
            checks.push(DivisorCheck {
                n,
                root: spec.alphabet().render(q),
                missing,
            });
        }
    }
    Ok(DivisorReport {
        word_id: word_id.to_string(),
        horizon: prefix.horizon(),
        checks,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrefixReport {
    pub words: usize,
    /// Words with a step outside `{0, 1}`, rendered.
    pub failures: Vec<String>,
}

/// The prefix bound on `count` seeded random words of length at most
/// `max_len`: every step of `pL` is 0 or 1.
pub fn check_prefix_random(
    count: usize,
    max_len: usize,
    seed: u64,
    strategy: par::Strategy,
) -> PrefixReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<String> = (0..count).map(|_| random_word(&mut rng, max_len)).collect();
    let bad = par::map(&words, strategy, |w| {
        let spec = WordSpec::finite(w).expect("nonempty");
        let symbols = materialize_prefix(&spec, w.chars().count()).expect("finite");
        let seq = prefix_lie_sequence(&symbols);
        seq.windows(2).any(|s| s[1] < s[0] || s[1] - s[0] > 1)
    });
    PrefixReport {
        words: count,
        failures: words
            .into_iter()
            .zip(bad)
            .filter_map(|(w, b)| b.then_some(w))
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureReport {
    pub n_max: usize,
    pub extended_lie: Vec<usize>,
    pub delta_prefix_lie: Vec<usize>,
    /// Indices where the bundled automaton disagrees with direct computation.
    pub extended_lie_mismatches: Vec<usize>,
    pub delta_prefix_lie_mismatches: Vec<usize>,
}

impl FixtureReport {
    pub fn holds(&self) -> bool {
        self.extended_lie_mismatches.is_empty() && self.delta_prefix_lie_mismatches.is_empty()
    }
}

/// Compares the bundled Thue-Morse automata for `eL` and `ΔpL` with direct
/// computation for `0 <= n <= n_max`.
pub fn check_fixtures(n_max: usize, options: &TableOptions) -> Result<FixtureReport> {
    let tm = WordSpec::thue_morse();
    let el = extended_lie_series(&tm, n_max, options)?;
    let pl = prefix_lie_sequence(&materialize_prefix(&tm, n_max + 1)?);
    let dpl: Vec<usize> = pl.windows(2).map(|s| s[1] - s[0]).collect();
    let el_machine = Dfao::parse(fixtures::EL_TM)?;
    let dpl_machine = Dfao::parse(fixtures::DPL_TM)?;
    let mismatches = |machine: &Dfao, values: &[usize]| -> Vec<usize> {
        (0..=n_max)
            .filter(|&n| machine.eval(n as u64) != values[n] as i64)
            .collect()
    };
    Ok(FixtureReport {
        n_max,
        extended_lie_mismatches: mismatches(&el_machine, &el),
        delta_prefix_lie_mismatches: mismatches(&dpl_machine, &dpl),
        extended_lie: el,
        delta_prefix_lie: dpl,
    })
}

/// `n` in `2..=n_max` where `eL(n) != Qs(n-1)`.
pub fn quasi_small_identity_failures(rows: &[ComplexityRow]) -> Vec<usize> {
    (2..rows.len())
        .filter(|&n| Some(rows[n].el) != rows[n - 1].qs)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexity::count_lie;
    use crate::word::factor_set;

    fn report(rs: &[TheoremReport], id: TheoremId, n: usize) -> &TheoremReport {
        rs.iter().find(|r| r.theorem_id == id && r.n == n).unwrap()
    }

    #[test]
    fn aba_tight_at_three() {
        let spec = WordSpec::power("aba").unwrap();
        let rs = check_theorems(&spec, "aba", 5, &VerifyOptions::default()).unwrap();
        let r = report(&rs, TheoremId::Lie, 3);
        assert_eq!((r.lhs, r.rhs, r.margin, r.holds), (1, 1, 0, true));
        assert!(rs.iter().all(|r| !r.is_failure()));
    }

    #[test]
    fn worked_example_margin_zero() {
        let spec = WordSpec::power("abaaabaaaaba").unwrap();
        let rs = check_theorems(&spec, "w", 4, &VerifyOptions::default()).unwrap();
        let r = report(&rs, TheoremId::QuasiSmall, 4);
        assert_eq!((r.lhs, r.rhs, r.margin), (3, 3, 0));
    }

    #[test]
    fn gates_and_fault() {
        let spec = WordSpec::thue_morse();
        assert!(check_theorems(&spec, "t", 0, &VerifyOptions::default())
            .unwrap()
            .is_empty());
        let rs = check_theorems(&spec, "t", 7, &VerifyOptions::default()).unwrap();
        for id in TheoremId::ALL {
            let ns: Vec<usize> = rs
                .iter()
                .filter(|r| r.theorem_id == id)
                .map(|r| r.n)
                .collect();
            let want: Vec<usize> = match id {
                TheoremId::Prefix => (0..=7).collect(),
                TheoremId::LemmaSize => vec![],
                _ => (1..=7).collect(),
            };
            assert_eq!(ns, want, "{id}");
        }
        assert!(rs
            .iter()
            .filter(|r| r.theorem_id == TheoremId::LieTriple)
            .all(|r| r.asserted == (r.n >= 6)));
        let faulty = VerifyOptions {
            lie_fault: 50,
            ..Default::default()
        };
        let rs = check_theorems(&spec, "t", 3, &faulty).unwrap();
        assert!(report(&rs, TheoremId::Lie, 1).is_failure());
    }

    #[test]
    fn finite_word_prefix_rows_stop_at_end() {
        let spec = WordSpec::finite("abba").unwrap();
        let rs = check_theorems(&spec, "f", 10, &VerifyOptions::default()).unwrap();
        let ns: Vec<usize> = rs
            .iter()
            .filter(|r| r.theorem_id == TheoremId::Prefix)
            .map(|r| r.n)
            .collect();
        assert_eq!(ns, vec![0, 1, 2, 3]);
    }

    #[test]
    fn lemma_size_small_cases() {
        let r = check_lemma_size(2, 6);
        assert!(r.holds(), "{:?}", r.failures);
        assert_eq!(r.words, 2 + 2 + 6 + 12 + 30 + 54);
        assert!(check_lemma_size(3, 4).holds());
        let aab = vec![0, 0, 1];
        assert_eq!(class_power_set(&aab, 2).unwrap().len(), 3);
        assert!(r.rows().iter().all(|row| row.holds && row.margin == 0));
    }

    #[test]
    fn divisors_match_direct_count() {
        for text in ["abaababaabaab", "aabbaabbab", "abcabcacb", "aaaa"] {
            let word: Vec<Sym> = text.bytes().map(|b| b - b'a').collect();
            for n in 1..=text.len() {
                let f = factor_set(&word, n).unwrap();
                let total: usize = lie_by_divisors(&f).values().sum();
                assert_eq!(total, count_lie(&f), "{text} n={n}");
            }
        }
    }

    #[test]
    fn divisor_bijection_examples() {
        let opts = TableOptions::default();
        let r =
            check_divisor_bijections(&WordSpec::power("aba").unwrap(), "aba", 6, &opts).unwrap();
        assert!(r.holds());
        assert!(r.checks.iter().any(|c| c.n == 6 && c.root == "aab"));
        let r = check_divisor_bijections(&WordSpec::thue_morse(), "t", 8, &opts).unwrap();
        assert!(r.holds());
    }

    #[test]
    fn fixtures_agree_early() {
        let r = check_fixtures(40, &TableOptions::default()).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(&r.extended_lie[..6], &[1, 2, 3, 3, 4, 1]);
    }

    #[test]
    fn prefix_random_small() {
        let r = check_prefix_random(200, 30, 7, par::Strategy::Parallel);
        assert_eq!(r.words, 200);
        assert!(r.failures.is_empty());
    }

    #[test]
    fn corpus_is_seeded() {
        assert_eq!(corpus(1, 5), corpus(1, 5));
        assert_ne!(corpus(1, 5), corpus(2, 5));
        assert_eq!(corpus(0, 200).len(), 206);
    }
}
