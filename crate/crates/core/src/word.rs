//! Factors, conjugacy, primitivity and fractional powers of finite words.
//!
//! Words are slices of symbols. Most functions are generic over the symbol
//! type; the analysis code works on [`Sym`], an index into an [`Alphabet`]
//! whose order is the lexicographic order used by canonical rotations.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::source::{Alphabet, Horizon};

/// A symbol, stored as its rank in the word's alphabet.
pub type Sym = u8;

/// Start index of the lexicographically least rotation (Booth's algorithm).
///
/// Runs in `O(|u|)`. For periodic words several indices give the same
/// rotation and any of them may be returned.
pub fn least_rotation<T: Ord>(u: &[T]) -> usize {
    let n = u.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| &u[i % n];
    let mut failure = vec![usize::MAX; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = failure[j - k - 1];
        while i != usize::MAX && *sj != *at(k + i + 1) {
            if *sj < *at(k + i + 1) {
                k = j - i - 1;
            }
            i = failure[i];
        }
        if i == usize::MAX && *sj != *at(k) {
            if *sj < *at(k) {
                k = j;
            }
            failure[j - k] = usize::MAX;
        } else {
            failure[j - k] = if i == usize::MAX { 0 } else { i + 1 };
        }
    }
    k % n
}

/// Rotation of `u` starting at `start`, i.e. `u[start..] u[..start]`.
pub fn rotate<T: Clone>(u: &[T], start: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(u.len());
    out.extend_from_slice(&u[start..]);
    out.extend_from_slice(&u[..start]);
    out
}

/// The lexicographically least rotation of `u`.
pub fn canonical_rotation<T: Ord + Clone>(u: &[T]) -> Result<Vec<T>> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(rotate(u, least_rotation(u)))
}

/// True when `u` equals its own least rotation. The empty word is canonical.
pub fn is_canonical<T: Ord>(u: &[T]) -> bool {
    let k = least_rotation(u);
    k == 0 || u[k..].iter().chain(&u[..k]).eq(u.iter())
}

/// KMP failure table: `table[i]` is the length of the longest proper border
/// of `u[..=i]`.
pub(crate) fn border_table<T: PartialEq>(u: &[T]) -> Vec<usize> {
    let mut table = vec![0; u.len()];
    let mut k = 0;
    for i in 1..u.len() {
        while k > 0 && u[i] != u[k] {
            k = table[k - 1];
        }
        if u[i] == u[k] {
            k += 1;
        }
        table[i] = k;
    }
    table
}

/// Smallest period of a nonempty word.
pub fn smallest_period<T: PartialEq>(u: &[T]) -> usize {
    match u.len() {
        0 => 0,
        n => n - border_table(u)[n - 1],
    }
}

/// All periods `d` with `1 <= d <= |u|` (so `|u|` itself is always included),
/// in increasing order.
pub fn periods<T: PartialEq>(u: &[T]) -> Vec<usize> {
    let n = u.len();
    if n == 0 {
        return Vec::new();
    }
    let table = border_table(u);
    let mut out = Vec::new();
    let mut border = table[n - 1];
    while border > 0 {
        out.push(n - border);
        border = table[border - 1];
    }
    out.push(n);
    out
}

/// Length of the primitive root of `u`: the number of distinct rotations.
fn root_length<T: PartialEq>(u: &[T]) -> usize {
    let n = u.len();
    let p = smallest_period(u);
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}

/// A word is primitive when it is not a proper power of a shorter word.
pub fn is_primitive<T: PartialEq>(u: &[T]) -> Result<bool> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(root_length(u) == u.len())
}

/// The length-`n` fractional power of `u`: `u` repeated and truncated.
pub fn power_to_length<T: Clone>(u: &[T], n: usize) -> Result<Vec<T>> {
    if u.is_empty() {
        return Err(Error::EmptyRoot);
    }
    Ok(u.iter().cycle().take(n).cloned().collect())
}

/// `{ power_to_length(v, n) : v a rotation of u }`, duplicates collapsed.
pub fn class_power_set<T: Ord + Clone>(u: &[T], n: usize) -> Result<BTreeSet<Vec<T>>> {
    if u.is_empty() {
        return Err(Error::EmptyRoot);
    }
    Ok((0..u.len())
        .map(|start| {
            u[start..]
                .iter()
                .chain(&u[..start])
                .cycle()
                .take(n)
                .cloned()
                .collect()
        })
        .collect())
}

/// A conjugacy class, identified by its least rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConjugacyClass<T = Sym> {
    canonical: Vec<T>,
    size: usize,
}

impl<T: Ord + Clone> ConjugacyClass<T> {
    pub fn canonical(&self) -> &[T] {
        &self.canonical
    }

    /// Number of distinct rotations.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_primitive(&self) -> bool {
        self.size == self.canonical.len()
    }

    /// Distinct rotations in increasing order; `[ε] = {ε}`.
    pub fn rotations(&self) -> Vec<Vec<T>> {
        if self.canonical.is_empty() {
            return vec![Vec::new()];
        }
        let set: BTreeSet<Vec<T>> = (0..self.size).map(|k| rotate(&self.canonical, k)).collect();
        set.into_iter().collect()
    }

    pub fn contains(&self, v: &[T]) -> bool {
        v.len() == self.canonical.len()
            && (v.is_empty() || rotate(v, least_rotation(v)) == self.canonical)
    }
}

/// The conjugacy class `[u]`.
pub fn conjugacy_class<T: Ord + Clone>(u: &[T]) -> ConjugacyClass<T> {
    if u.is_empty() {
        return ConjugacyClass {
            canonical: Vec::new(),
            size: 1,
        };
    }
    ConjugacyClass {
        canonical: rotate(u, least_rotation(u)),
        size: root_length(u),
    }
}

/// Distinct length-`n` windows of `text`, borrowed.
pub(crate) fn windows_set(text: &[Sym], n: usize) -> HashSet<&[Sym]> {
    if n == 0 {
        return std::iter::once(&text[..0]).collect();
    }
    text.windows(n).collect()
}

/// The set of length-`n` factors of some word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSet {
    n: usize,
    members: HashSet<Vec<Sym>>,
    horizon: Option<Horizon>,
}

impl FactorSet {
    pub(crate) fn from_members(n: usize, members: HashSet<Vec<Sym>>) -> Self {
        debug_assert!(members.iter().all(|m| m.len() == n));
        FactorSet {
            n,
            members,
            horizon: None,
        }
    }

    pub(crate) fn with_horizon(mut self, horizon: Horizon) -> Self {
        self.horizon = Some(horizon);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, word: &[Sym]) -> bool {
        self.members.contains(word)
    }

    /// Horizon of the prefix these factors were read from, when known.
    pub fn horizon(&self) -> Option<Horizon> {
        self.horizon
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Sym]> {
        self.members.iter().map(Vec::as_slice)
    }

    /// Members in increasing lexicographic order.
    pub fn sorted(&self) -> Vec<&[Sym]> {
        let mut v: Vec<&[Sym]> = self.iter().collect();
        v.sort_unstable();
        v
    }

    /// Sorted, newline-separated rendering.
    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        for m in self.sorted() {
            out.push_str(&alphabet.render(m));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for FactorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sorted: Vec<String> = self
            .sorted()
            .into_iter()
            .map(|m| {
                m.iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "F({}) = {{{}}}", self.n, sorted.join(" "))
    }
}

/// All distinct length-`n` factors of `prefix`; `n = 0` yields `{ε}`.
pub fn factor_set(prefix: &[Sym], n: usize) -> Result<FactorSet> {
    if n > prefix.len() {
        return Err(Error::LengthExceedsPrefix {
            n,
            prefix: prefix.len(),
        });
    }
    let members = windows_set(prefix, n)
        .into_iter()
        .map(<[Sym]>::to_vec)
        .collect();
    Ok(FactorSet::from_members(n, members))
}

/// True when every element of `[u]_n` is in `factors`.
pub fn class_contained(u: &[Sym], n: usize, factors: &FactorSet) -> bool {
    if factors.n() != n || u.is_empty() {
        return false;
    }
    let mut buf = Vec::with_capacity(n);
    (0..u.len()).all(|start| {
        buf.clear();
        buf.extend(u[start..].iter().chain(&u[..start]).cycle().take(n));
        factors.contains(&buf)
    })
}
