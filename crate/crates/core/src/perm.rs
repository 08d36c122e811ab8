//! The symmetric group `S_n`: one-line permutations, words in the simple
//! transpositions, reduced words and Bruhat order.
//!
//! Composition is `(u ∘ v)(k) = u(v(k))`, and the product of a word
//! `(j_1, …, j_m)` is `s_{j_1} ∘ … ∘ s_{j_m}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{one_line:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { one_line: (1..=n).collect() }
    }

    /// The simple transposition `s_i`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        let mut p = Self::identity(n);
        p.one_line.swap(i - 1, i);
        Ok(p)
    }

    /// The longest element `w0`, one-line `n … 2 1`.
    pub fn longest(n: usize) -> Self {
        Permutation { one_line: (1..=n).rev().collect() }
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            let n = used.len();
            if prefix.len() == n {
                out.push(Permutation { one_line: prefix.clone() });
                return;
            }
            for v in 1..=n {
                if !used[v - 1] {
                    used[v - 1] = true;
                    prefix.push(v);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[v - 1] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `w(k)` for `1 ≤ k ≤ n`.
    pub fn apply(&self, k: usize) -> usize {
        self.one_line[k - 1]
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(self.n(), other.n()));
        }
        Ok(Permutation { one_line: other.one_line.iter().map(|&k| self.apply(k)).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (idx, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = idx + 1;
        }
        Permutation { one_line: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self ∘ s_k`: swaps the values in positions `k` and `k+1`.
    fn times_simple(&mut self, k: usize) {
        self.one_line.swap(k - 1, k);
    }

    /// Product `s_{j_1} ∘ … ∘ s_{j_m}` of a word.
    pub fn from_word(n: usize, word: &Word) -> Result<Self> {
        let mut p = Self::identity(n);
        for &k in word.letters() {
            if k >= n {
                return Err(Error::IndexOutOfRange { index: k, max: n.saturating_sub(1) });
            }
            p.times_simple(k);
        }
        Ok(p)
    }

    /// Reduced word `B_{n−1} ⋯ B_2 B_1` with blocks `B_i = (i, i+1, …, i+r_i−1)`.
    ///
    /// `r_1 = w⁻¹(1) − 1`; the rest is computed on `w ∘ (s_{r_1} ∘ … ∘ s_1)`,
    /// which fixes 1.
    pub fn canonical_reduced_word(&self) -> Word {
        let n = self.n();
        let mut u = self.clone();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for i in 1..n {
            let pos = u.inverse().apply(i);
            let r = pos - i;
            blocks.push((i..i + r).collect());
            for k in (i..i + r).rev() {
                u.times_simple(k);
            }
            debug_assert_eq!(u.apply(i), i);
        }
        Word { letters: blocks.into_iter().rev().flatten().collect() }
    }

    /// `α` with `α_{w(i)} = λ_i`.
    pub fn apply_to_composition(&self, lambda: &[u32]) -> Result<Vec<u32>> {
        if lambda.len() != self.n() {
            return Err(Error::DimensionMismatch(self.n(), lambda.len()));
        }
        let mut alpha = vec![0; self.n()];
        for (i, &l) in lambda.iter().enumerate() {
            alpha[self.one_line[i] - 1] = l;
        }
        Ok(alpha)
    }

    /// JSON form: the one-line array.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.one_line)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() >= 10 { "," } else { "" };
        let s: Vec<String> = self.one_line.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", s.join(sep))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"321"` or `"3,2,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let vals: Option<Vec<usize>> = if s.contains([',', ' ']) {
            s.split([',', ' ']).filter(|t| !t.is_empty()).map(|t| t.parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        let vals = vals.ok_or_else(|| Error::Parse(format!("permutation {s:?}")))?;
        Permutation::new(vals)
    }
}

/// A word in the simple transpositions `s_1, s_2, …`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidWord(format!("{letters:?}")));
        }
        Ok(Word { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn product(&self, n: usize) -> Result<Permutation> {
        Permutation::from_word(n, self)
    }

    /// True iff the product has length equal to the number of letters.
    /// Letters out of range for `S_n` give `false`.
    pub fn is_reduced(&self, n: usize) -> bool {
        let mut p = Permutation::identity(n);
        for &k in &self.letters {
            if k >= n || p.apply(k) > p.apply(k + 1) {
                return false;
            }
            p.times_simple(k);
        }
        true
    }

    /// Reading word of the full dual Kogan diagram: rows `i = n−1, …, 1`,
    /// each contributing `(i, i+1, …, n−1)`.
    pub fn w0_word_reading(n: usize) -> Self {
        Word { letters: (1..n).rev().flat_map(|i| i..n).collect() }
    }

    /// `w0 = c_1 c_2 ⋯ c_{n−1}` with `c_k = s_k ⋯ s_1`, i.e. `(1, 2,1, 3,2,1, …)`.
    /// Under right-to-left application this runs `π_1, …, π_{n−1}`, then
    /// `π_1, …, π_{n−2}`, and so on down to `π_1`.
    pub fn w0_word_coxeter(n: usize) -> Self {
        Word { letters: (1..n).flat_map(|k| (1..=k).rev()).collect() }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(|k| format!("s{k}")).collect();
        write!(f, "{}", s.join(" "))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `"s1 s2 s1"` or `"1,2,1"`; the empty string is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(|t| t.trim_start_matches('s').parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("word {s:?}")))?;
        Word::new(letters)
    }
}

fn check_same_n(u: &Permutation, w: &Permutation) -> Result<()> {
    if u.n() != w.n() {
        Err(Error::DimensionMismatch(u.n(), w.n()))
    } else {
        Ok(())
    }
}

/// Bruhat order via rank matrices: `u ≤ w` iff
/// `#{a ≤ i : u(a) ≥ j} ≤ #{a ≤ i : w(a) ≥ j}` for all `i, j`.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    check_same_n(u, w)?;
    let n = u.n();
    let mut ok = true;
    'outer: for j in 1..=n {
        let (mut cu, mut cw) = (0, 0);
        for a in 1..=n {
            cu += (u.apply(a) >= j) as usize;
            cw += (w.apply(a) >= j) as usize;
            if cu > cw {
                ok = false;
                break 'outer;
            }
        }
    }
    if cfg!(debug_assertions) && n <= 4 {
        debug_assert_eq!(ok, bruhat_leq_subword(u, w)?, "Bruhat criteria disagree on {u} vs {w}");
    }
    Ok(ok)
}

/// Bruhat order via the subword property on the canonical reduced word of `w`.
pub fn bruhat_leq_subword(u: &Permutation, w: &Permutation) -> Result<bool> {
    check_same_n(u, w)?;
    let word = w.canonical_reduced_word();
    let letters = word.letters();
    let m = letters.len();
    for mask in 0u64..(1u64 << m) {
        let mut p = Permutation::identity(u.n());
        for (idx, &k) in letters.iter().enumerate() {
            if mask & (1 << idx) != 0 {
                p.times_simple(k);
            }
        }
        if &p == u {
            return Ok(true);
        }
    }
    Ok(false)
}
