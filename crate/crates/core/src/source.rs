//! Declarative word specifications and their finite prefixes.
//!
//! A [`WordSpec`] describes a finite word, a periodic infinite word `u^ω`,
//! the fixed point of a prolongable morphism (optionally followed by a
//! letter-to-letter coding) or an automatic sequence given by a DFAO.
//!
//! Factor membership in an infinite word can only be read from a finite
//! prefix. [`choose_horizon`] picks that prefix length: exact for periodic
//! words, heuristic (and subject to the doubling check in
//! [`crate::complexity`]) for morphic and automatic words.

use std::fmt;

use serde::Serialize;

use crate::dfao::{self, Dfao};
use crate::error::{Error, Result};
use crate::word::{factor_set, FactorSet, Sym};

/// Ordered set of symbols. The order is the lexicographic order used by
/// canonical rotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: Vec<char>) -> Result<Self> {
        for (i, c) in symbols.iter().enumerate() {
            if symbols[..i].contains(c) {
                return Err(Error::InvalidSpec(format!("symbol {c:?} declared twice")));
            }
        }
        if symbols.len() > Sym::MAX as usize + 1 {
            return Err(Error::InvalidSpec("alphabet too large".into()));
        }
        Ok(Alphabet { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, s: Sym) -> char {
        self.symbols[s as usize]
    }

    pub fn rank(&self, c: char) -> Option<Sym> {
        self.symbols.iter().position(|&x| x == c).map(|i| i as Sym)
    }

    pub fn render(&self, word: &[Sym]) -> String {
        word.iter().map(|&s| self.symbol(s)).collect()
    }

    /// Translate a string over this alphabet into symbol ranks.
    pub fn encode(&self, text: &str) -> Result<Vec<Sym>> {
        text.chars()
            .map(|c| {
                self.rank(c)
                    .ok_or_else(|| Error::InvalidSpec(format!("symbol {c:?} not in alphabet")))
            })
            .collect()
    }
}

/// A prolongable morphism with an optional coding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    seed: char,
    rules: Vec<(char, Vec<char>)>,
    coding: Vec<(char, char)>,
}

impl Morphism {
    pub fn seed(&self) -> char {
        self.seed
    }

    pub fn rules(&self) -> &[(char, Vec<char>)] {
        &self.rules
    }

    pub fn coding(&self) -> &[(char, char)] {
        &self.coding
    }

    fn image(&self, c: char) -> &[char] {
        // validated: every reachable symbol has a rule
        &self.rules.iter().find(|(a, _)| *a == c).expect("rule").1
    }

    fn code(&self, c: char) -> char {
        self.coding
            .iter()
            .find(|(a, _)| *a == c)
            .map_or(c, |&(_, b)| b)
    }

    /// Applies the morphism letter by letter.
    pub fn apply(&self, word: &[char]) -> Vec<char> {
        word.iter()
            .flat_map(|&c| self.image(c).iter().copied())
            .collect()
    }

    /// First `length` letters of the fixed point, before coding.
    pub fn fixed_point_prefix(&self, length: usize) -> Vec<char> {
        let mut w = self.image(self.seed).to_vec();
        // x = φ(x) = φ(x0) φ(x1) ...; φ(x0) already starts the word.
        let mut next = 1;
        while w.len() < length {
            let c = w[next];
            w.extend_from_slice(self.image(c));
            next += 1;
        }
        w.truncate(length);
        w
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordKind {
    Finite(Vec<char>),
    PowerOmega(Vec<char>),
    Morphic(Morphism),
    Automatic {
        machine: Dfao,
        base: u32,
        source: String,
    },
}

/// A validated word specification together with its ordered alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSpec {
    kind: WordKind,
    alphabet: Alphabet,
}

/// Literal words order their symbols by code point.
fn literal_alphabet(word: &[char]) -> Result<Alphabet> {
    let mut symbols = word.to_vec();
    symbols.sort_unstable();
    symbols.dedup();
    Alphabet::new(symbols)
}

impl WordSpec {
    pub fn finite(word: &str) -> Result<Self> {
        let w: Vec<char> = word.chars().collect();
        if w.is_empty() {
            return Err(Error::InvalidSpec("finite word must be nonempty".into()));
        }
        Ok(WordSpec {
            alphabet: literal_alphabet(&w)?,
            kind: WordKind::Finite(w),
        })
    }

    pub fn power(root: &str) -> Result<Self> {
        let u: Vec<char> = root.chars().collect();
        if u.is_empty() {
            return Err(Error::EmptyRoot);
        }
        Ok(WordSpec {
            alphabet: literal_alphabet(&u)?,
            kind: WordKind::PowerOmega(u),
        })
    }

    /// Fixed point of `rules` starting from `seed`, then `coding` applied
    /// letter by letter (identity where unspecified).
    pub fn morphic(
        seed: char,
        rules: Vec<(char, Vec<char>)>,
        coding: Vec<(char, char)>,
    ) -> Result<Self> {
        let lhs: Vec<char> = rules.iter().map(|(a, _)| *a).collect();
        let declared = Alphabet::new(lhs)?;
        for (a, image) in &rules {
            if image.is_empty() {
                return Err(Error::InvalidSpec(format!("image of {a:?} is empty")));
            }
            if let Some(c) = image.iter().find(|c| declared.rank(**c).is_none()) {
                return Err(Error::InvalidSpec(format!("symbol {c:?} has no rule")));
            }
        }
        let seed_image = rules
            .iter()
            .find(|(a, _)| *a == seed)
            .map(|(_, img)| img)
            .ok_or_else(|| Error::InvalidSpec(format!("seed {seed:?} has no rule")))?;
        if seed_image.len() < 2 || seed_image[0] != seed {
            return Err(Error::InvalidSpec(format!(
                "morphism is not prolongable on {seed:?}"
            )));
        }
        for (i, (a, _)) in coding.iter().enumerate() {
            if declared.rank(*a).is_none() {
                return Err(Error::InvalidSpec(format!(
                    "coding of unknown symbol {a:?}"
                )));
            }
            if coding[..i].iter().any(|(b, _)| b == a) {
                return Err(Error::InvalidSpec(format!("symbol {a:?} coded twice")));
            }
        }
        let morphism = Morphism {
            seed,
            rules,
            coding,
        };
        // Coded alphabet in rule declaration order.
        let mut symbols = Vec::new();
        for c in declared.symbols() {
            let coded = morphism.code(*c);
            if !symbols.contains(&coded) {
                symbols.push(coded);
            }
        }
        Ok(WordSpec {
            alphabet: Alphabet::new(symbols)?,
            kind: WordKind::Morphic(morphism),
        })
    }

    /// The sequence `s_0 s_1 ...` produced by `machine`; outputs must lie in
    /// `0..36` and are written as base-36 digits.
    pub fn automatic(machine: Dfao, base: u32, source: impl Into<String>) -> Result<Self> {
        if base != machine.base() {
            return Err(Error::InvalidSpec(format!(
                "base {base} does not match the machine's base {}",
                machine.base()
            )));
        }
        let mut outputs: Vec<i64> = machine.outputs().to_vec();
        outputs.sort_unstable();
        outputs.dedup();
        let symbols = outputs
            .iter()
            .map(|&v| {
                u32::try_from(v)
                    .ok()
                    .and_then(|v| char::from_digit(v, 36))
                    .ok_or_else(|| Error::InvalidSpec(format!("output {v} is not a symbol")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WordSpec {
            alphabet: Alphabet::new(symbols)?,
            kind: WordKind::Automatic {
                machine,
                base,
                source: source.into(),
            },
        })
    }

    pub fn thue_morse() -> Self {
        Self::morphic(
            '0',
            vec![('0', vec!['0', '1']), ('1', vec!['1', '0'])],
            vec![],
        )
        .expect("valid morphism")
    }

    pub fn fibonacci() -> Self {
        Self::morphic('0', vec![('0', vec!['0', '1']), ('1', vec!['0'])], vec![])
            .expect("valid morphism")
    }

    pub fn period_doubling() -> Self {
        Self::morphic(
            '0',
            vec![('0', vec!['0', '1']), ('1', vec!['0', '0'])],
            vec![],
        )
        .expect("valid morphism")
    }

    pub fn kind(&self) -> &WordKind {
        &self.kind
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Length of a finite word; `None` for infinite words.
    pub fn finite_len(&self) -> Option<usize> {
        match &self.kind {
            WordKind::Finite(w) => Some(w.len()),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.finite_len().is_some()
    }

    /// Parse one line of the word-spec text format. `automatic` lines load
    /// their machine through [`dfao::load`].
    pub fn parse(line: &str) -> Result<Self> {
        parse_line(line, 1)
    }
}

impl fmt::Display for WordSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |w: &[char]| w.iter().collect::<String>();
        match &self.kind {
            WordKind::Finite(w) => write!(f, "finite {}", s(w)),
            WordKind::PowerOmega(u) => write!(f, "power {}", s(u)),
            WordKind::Morphic(m) => {
                write!(f, "morphic {}", m.seed)?;
                for (a, img) in &m.rules {
                    write!(f, " {a}->{}", s(img))?;
                }
                if !m.coding.is_empty() {
                    write!(f, " coding")?;
                    for (a, b) in &m.coding {
                        write!(f, " {a}->{b}")?;
                    }
                }
                Ok(())
            }
            WordKind::Automatic { base, source, .. } => write!(f, "automatic {base} {source}"),
        }
    }
}

/// Returns `w[1..length]`, the length-`length` prefix.
pub fn materialize_prefix(spec: &WordSpec, length: usize) -> Result<Vec<Sym>> {
    let alphabet = spec.alphabet();
    let encode = |c: char| alphabet.rank(c).expect("symbol in alphabet");
    Ok(match spec.kind() {
        WordKind::Finite(w) => {
            if length > w.len() {
                return Err(Error::RequestedBeyondFiniteWord {
                    requested: length,
                    available: w.len(),
                });
            }
            w[..length].iter().map(|&c| encode(c)).collect()
        }
        WordKind::PowerOmega(u) => u.iter().cycle().take(length).map(|&c| encode(c)).collect(),
        WordKind::Morphic(m) => m
            .fixed_point_prefix(length)
            .into_iter()
            .map(|c| encode(m.code(c)))
            .collect(),
        WordKind::Automatic { machine, .. } => (0..length as u64)
            .map(|i| {
                let v = machine.eval(i) as u32;
                encode(char::from_digit(v, 36).expect("validated output"))
            })
            .collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HorizonMode {
    /// The prefix provably contains every factor of the queried length.
    Exact,
    /// The prefix is assumed long enough; results must survive doubling.
    Heuristic,
}

/// Length of the prefix used to read factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Horizon {
    pub length: usize,
    pub mode: HorizonMode,
}

impl Horizon {
    pub fn exact(length: usize) -> Self {
        Horizon {
            length,
            mode: HorizonMode::Exact,
        }
    }

    pub fn heuristic(length: usize) -> Self {
        Horizon {
            length,
            mode: HorizonMode::Heuristic,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.mode == HorizonMode::Exact
    }

    pub fn doubled(&self) -> Self {
        Horizon {
            length: self.length * 2,
            mode: self.mode,
        }
    }
}

impl fmt::Display for Horizon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.mode {
            HorizonMode::Exact => "exact",
            HorizonMode::Heuristic => "heuristic",
        };
        write!(f, "{}:{}", self.length, mode)
    }
}

/// A materialized prefix together with the factor lengths it can answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prefix {
    symbols: Vec<Sym>,
    horizon: Horizon,
    /// The prefix is the whole (finite) word.
    complete: bool,
    /// Longest factor length answerable from this prefix.
    reach: usize,
}

impl Prefix {
    /// Materializes `spec` at `horizon`. A finite word is always read in full.
    pub fn new(spec: &WordSpec, horizon: Horizon) -> Result<Self> {
        if let Some(len) = spec.finite_len() {
            return Ok(Prefix {
                symbols: materialize_prefix(spec, len)?,
                horizon: Horizon::exact(len),
                complete: true,
                reach: usize::MAX,
            });
        }
        let reach = match spec.kind() {
            WordKind::PowerOmega(u) => (horizon.length + 1).saturating_sub(u.len()),
            _ => horizon.length,
        };
        Ok(Prefix {
            symbols: materialize_prefix(spec, horizon.length)?,
            horizon,
            complete: false,
            reach,
        })
    }

    pub fn symbols(&self) -> &[Sym] {
        &self.symbols
    }

    pub fn horizon(&self) -> Horizon {
        self.horizon
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// `F_w(n)` as seen through this prefix. Past the end of a finite word
    /// the set is empty.
    pub fn factors(&self, n: usize) -> Result<FactorSet> {
        if self.complete && n > self.symbols.len() {
            return Ok(FactorSet::from_members(n, Default::default()).with_horizon(self.horizon));
        }
        if n > self.reach {
            return Err(Error::HorizonTooSmall {
                n,
                horizon: self.horizon.length,
            });
        }
        Ok(factor_set(&self.symbols, n)?.with_horizon(self.horizon))
    }
}

/// Heuristic horizon parameters: `max(floor, multiplier * n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HorizonPolicy {
    pub floor: usize,
    pub multiplier: usize,
}

impl HorizonPolicy {
    pub const DEFAULT_FLOOR: usize = 4096;
    pub const DEFAULT_MULTIPLIER: usize = 64;
}

impl Default for HorizonPolicy {
    fn default() -> Self {
        HorizonPolicy {
            floor: Self::DEFAULT_FLOOR,
            multiplier: Self::DEFAULT_MULTIPLIER,
        }
    }
}

/// Prefix length sufficient (exactly or heuristically) for factors of
/// length up to `n`.
pub fn choose_horizon(spec: &WordSpec, n: usize, policy: &HorizonPolicy) -> Horizon {
    match spec.kind() {
        WordKind::Finite(w) => Horizon::exact(w.len()),
        // every length-n factor of u^ω starts within the first |u| positions
        WordKind::PowerOmega(u) => Horizon::exact((u.len() + n).saturating_sub(1).max(1)),
        WordKind::Morphic(_) | WordKind::Automatic { .. } => {
            Horizon::heuristic(policy.floor.max(policy.multiplier * n).max(1))
        }
    }
}

/// Parses a word-spec file: one spec per line; blank lines and `#` comments
/// are skipped.
pub fn parse_word_specs(text: &str) -> Result<Vec<WordSpec>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| parse_line(l, i + 1))
        .collect()
}

/// Whitespace-separated tokens with their 1-based starting columns.
pub(crate) fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (i, c)) in line.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, i)),
            (true, Some((scol, si))) => {
                out.push((scol, &line[si..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((scol, si)) = start {
        out.push((scol, &line[si..]));
    }
    out
}

fn single_char(tok: &str, line: usize, col: usize) -> Result<char> {
    let mut it = tok.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(Error::parse(
            line,
            col,
            format!("expected a single symbol, got {tok:?}"),
        )),
    }
}

fn parse_rule(tok: &str, line: usize, col: usize) -> Result<(char, Vec<char>)> {
    let (lhs, rhs) = tok
        .split_once("->")
        .ok_or_else(|| Error::parse(line, col, format!("expected <a>-><image>, got {tok:?}")))?;
    let a = single_char(lhs, line, col)?;
    if rhs.is_empty() {
        return Err(Error::parse(
            line,
            col + lhs.chars().count() + 2,
            "empty image",
        ));
    }
    Ok((a, rhs.chars().collect()))
}

fn parse_line(line: &str, lineno: usize) -> Result<WordSpec> {
    let toks = tokens(line);
    let Some(&(col, keyword)) = toks.first() else {
        return Err(Error::parse(lineno, 1, "empty word specification"));
    };
    let at = |e: Error, col: usize| match e {
        Error::InvalidSpec(m) | Error::Io(m) => Error::parse(lineno, col, m),
        Error::EmptyRoot => Error::parse(lineno, col, "power root must be nonempty"),
        other => other,
    };
    let arity = |want: usize| {
        if toks.len() != want {
            Err(Error::parse(
                lineno,
                toks.get(want).map_or(line.chars().count() + 1, |t| t.0),
                format!("{keyword} takes {} argument(s)", want - 1),
            ))
        } else {
            Ok(())
        }
    };
    match keyword {
        "finite" => {
            arity(2)?;
            WordSpec::finite(toks[1].1).map_err(|e| at(e, toks[1].0))
        }
        "power" => {
            arity(2)?;
            WordSpec::power(toks[1].1).map_err(|e| at(e, toks[1].0))
        }
        "morphic" => {
            if toks.len() < 3 {
                return Err(Error::parse(lineno, col, "morphic needs a seed and rules"));
            }
            let seed = single_char(toks[1].1, lineno, toks[1].0)?;
            let mut rules = Vec::new();
            let mut coding = Vec::new();
            let mut in_coding = false;
            for &(c, tok) in &toks[2..] {
                if tok == "coding" && !in_coding {
                    in_coding = true;
                    continue;
                }
                let (a, img) = parse_rule(tok, lineno, c)?;
                if in_coding {
                    if img.len() != 1 {
                        return Err(Error::parse(
                            lineno,
                            c,
                            "coding maps a symbol to one symbol",
                        ));
                    }
                    coding.push((a, img[0]));
                } else {
                    rules.push((a, img));
                }
            }
            WordSpec::morphic(seed, rules, coding).map_err(|e| at(e, toks[2].0))
        }
        "automatic" => {
            arity(3)?;
            let base: u32 = toks[1]
                .1
                .parse()
                .map_err(|_| Error::parse(lineno, toks[1].0, "base must be an integer"))?;
            if base < 2 {
                return Err(Error::parse(lineno, toks[1].0, "base must be at least 2"));
            }
            let machine = dfao::load(toks[2].1).map_err(|e| at(e, toks[2].0))?;
            WordSpec::automatic(machine, base, toks[2].1).map_err(|e| at(e, toks[1].0))
        }
        other => Err(Error::parse(
            lineno,
            col,
            format!("unknown word kind {other:?} (expected finite, power, morphic or automatic)"),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(spec: &WordSpec, n: usize) -> String {
        spec.alphabet()
            .render(&materialize_prefix(spec, n).unwrap())
    }

    #[test]
    fn power_prefix() {
        assert_eq!(render(&WordSpec::power("aba").unwrap(), 7), "abaabaa");
    }

    #[test]
    fn thue_morse_prefix_from_iterated_morphism() {
        // oracle: iterate the morphism from the seed until long enough
        let mut w = vec!['0'];
        while w.len() < 8 {
            w = w
                .iter()
                .flat_map(|&c| if c == '0' { ['0', '1'] } else { ['1', '0'] })
                .collect();
        }
        let expected: String = w[..8].iter().collect();
        assert_eq!(expected, "01101001");
        assert_eq!(render(&WordSpec::thue_morse(), 8), expected);
    }

    #[test]
    fn finite_prefix_exhausted() {
        let spec = WordSpec::finite("ab").unwrap();
        assert_eq!(
            materialize_prefix(&spec, 5),
            Err(Error::RequestedBeyondFiniteWord {
                requested: 5,
                available: 2
            })
        );
        assert_eq!(render(&spec, 2), "ab");
        assert_eq!(render(&spec, 0), "");
    }

    #[test]
    fn horizons() {
        let p = HorizonPolicy::default();
        assert_eq!(
            choose_horizon(&WordSpec::power("aba").unwrap(), 5, &p),
            Horizon::exact(7)
        );
        assert_eq!(
            choose_horizon(&WordSpec::finite("abc").unwrap(), 2, &p),
            Horizon::exact(3)
        );
        assert_eq!(
            choose_horizon(&WordSpec::thue_morse(), 10, &p),
            Horizon::heuristic(4096)
        );
        assert_eq!(
            choose_horizon(&WordSpec::thue_morse(), 100, &p),
            Horizon::heuristic(6400)
        );
        let custom = HorizonPolicy {
            floor: 10,
            multiplier: 3,
        };
        assert_eq!(
            choose_horizon(&WordSpec::fibonacci(), 5, &custom),
            Horizon::heuristic(15)
        );
    }

    #[test]
    fn fibonacci_and_period_doubling() {
        assert_eq!(render(&WordSpec::fibonacci(), 13), "0100101001001");
        assert_eq!(render(&WordSpec::period_doubling(), 12), "010001010100");
    }

    #[test]
    fn coding_is_applied() {
        let spec = WordSpec::parse("morphic a a->ab b->ca c->cc coding a->x b->y c->y").unwrap();
        assert_eq!(spec.alphabet().symbols(), &['x', 'y']);
        // fixed point abcaccab...
        assert_eq!(render(&spec, 8), "xyyxyyxy");
    }

    #[test]
    fn literal_alphabet_is_code_point_ordered() {
        let spec = WordSpec::finite("cab").unwrap();
        assert_eq!(spec.alphabet().symbols(), &['a', 'b', 'c']);
        assert_eq!(materialize_prefix(&spec, 3).unwrap(), vec![2, 0, 1]);
    }

    #[test]
    fn parse_round_trips_through_display() {
        for line in [
            "finite abba",
            "power aba",
            "morphic 0 0->01 1->10",
            "morphic a a->ab b->a coding a->0 b->1",
            "automatic 2 thue_morse.dfao",
        ] {
            assert_eq!(WordSpec::parse(line).unwrap().to_string(), line);
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = WordSpec::parse("powr aba").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 1,
                    column: 1,
                    ..
                }
            ),
            "{err}"
        );
        let err = WordSpec::parse("morphic 0 0->10 1->10").unwrap_err();
        assert!(matches!(err, Error::Parse { column: 11, .. }), "{err}");
        let err = WordSpec::parse("morphic 0 0->01 1->12").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err}");
        let err = WordSpec::parse("automatic 3 thue_morse.dfao").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err}");
        let err = WordSpec::parse("finite").unwrap_err();
        assert!(matches!(err, Error::Parse { column: 7, .. }), "{err}");
        let specs = parse_word_specs("# corpus\npower ab\n\nfinite xy z\n").unwrap_err();
        assert!(
            matches!(
                specs,
                Error::Parse {
                    line: 4,
                    column: 11,
                    ..
                }
            ),
            "{specs}"
        );
    }

    #[test]
    fn automatic_prefix_matches_morphic() {
        let auto = WordSpec::parse("automatic 2 thue_morse.dfao").unwrap();
        assert_eq!(
            materialize_prefix(&auto, 256).unwrap(),
            materialize_prefix(&WordSpec::thue_morse(), 256).unwrap()
        );
    }
}
