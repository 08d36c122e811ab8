//! Partitions, Gelfand-Zetlin patterns and polytopes, the weight projection
//! and characters.
//!
//! Rows are indexed from 0. Row 0 is `(λ_n, …, λ_1)` and row `i` has `n − i`
//! entries constrained by `a_{i−1,j} ≤ a_{i,j} ≤ a_{i−1,j+1}`. Column indices
//! `j` are 1-based in every public accessor.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::algebra::{BetaPolynomial, Monomial};
use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Weakly decreasing sequence of nonnegative integers. Repeated parts are allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// `λ + (k, …, k)`.
    pub fn shift(&self, k: u32) -> Self {
        Partition { parts: self.parts.iter().map(|p| p + k).collect() }
    }

    /// Row 0 of every pattern: `(λ_n, …, λ_1)`.
    pub fn top_row(&self) -> Vec<i64> {
        self.parts.iter().rev().map(|&p| p as i64).collect()
    }

    /// All partitions with `n` parts and `λ_1 ≤ max_part`, in lexicographic order.
    pub fn all_bounded(n: usize, max_part: u32) -> Vec<Self> {
        fn rec(n: usize, bound: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if prefix.len() == n {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for v in 0..=bound {
                prefix.push(v);
                rec(n, v, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_part, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"3,2,0"`, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("partition {s:?}")))?;
        Partition::new(parts)
    }
}

fn check_triangle<T>(rows: &[Vec<T>], n: usize, first_row: usize) -> Result<()> {
    for (k, row) in rows.iter().enumerate() {
        let i = k + first_row;
        if row.len() != n - i {
            return Err(Error::Shape(format!("row {i} has {} entries, expected {}", row.len(), n - i)));
        }
    }
    Ok(())
}

/// An integer point of a Gelfand-Zetlin polytope, stored with its top row.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GZPattern {
    rows: Vec<Vec<i64>>,
}

impl GZPattern {
    /// `rows[0]` is the fixed top row.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        if rows.len() != n {
            return Err(Error::Shape(format!("{} rows for top row of length {n}", rows.len())));
        }
        check_triangle(&rows, n, 0)?;
        if rows[0].windows(2).any(|w| w[0] > w[1]) || rows[0].iter().any(|&v| v < 0) {
            return Err(Error::InvalidPartition(format!("top row {:?}", rows[0])));
        }
        for i in 1..n {
            for j in 0..n - i {
                let v = rows[i][j];
                if v < rows[i - 1][j] || v > rows[i - 1][j + 1] {
                    return Err(Error::Shape(format!(
                        "entry ({i},{}) = {v} breaks interlacing",
                        j + 1
                    )));
                }
            }
        }
        Ok(GZPattern { rows })
    }

    /// Builds a pattern from `λ` and rows `1..n−1`.
    pub fn from_free_rows(lambda: &Partition, free: Vec<Vec<i64>>) -> Result<Self> {
        let mut rows = vec![lambda.top_row()];
        rows.extend(free);
        Self::new(rows)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<i64>>) -> Self {
        GZPattern { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `a_{i,j}` with 1-based `j`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j - 1]
    }

    pub fn lambda(&self) -> Partition {
        Partition { parts: self.rows.first().map_or(vec![], |r| r.iter().rev().map(|&v| v as u32).collect()) }
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        self.rows[i].iter().sum()
    }

    /// The weight `π(z)`; see [`project_weight`].
    pub fn weight(&self) -> Vec<i64> {
        let n = self.n();
        let sums: Vec<i64> = (0..n).map(|i| self.row_sum(i)).collect();
        weight_from_sums(&sums)
    }

    pub fn to_json(&self) -> Value {
        json!({ "lambda": self.lambda().parts(), "rows": self.rows[1.min(self.rows.len())..] })
    }
}

/// `a_k = S_{n−k} − S_{n−k+1}` with `S_n = 0`.
fn weight_from_sums<T>(sums: &[T]) -> Vec<T>
where
    T: Clone + Zero + std::ops::Sub<Output = T>,
{
    let n = sums.len();
    let s = |i: usize| if i >= n { T::zero() } else { sums[i].clone() };
    (1..=n).map(|k| s(n - k) - s(n - k + 1)).collect()
}

impl fmt::Display for GZPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// A point of `R^{n(n−1)/2}` with exact rational coordinates `y_{i,j}`, `i ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalPoint {
    n: usize,
    rows: Vec<Vec<Rational>>,
}

impl RationalPoint {
    /// `rows[k]` holds row `k + 1` and must have `n − k − 1` entries.
    pub fn new(n: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        if rows.len() != n.saturating_sub(1) {
            return Err(Error::Shape(format!("{} free rows for n = {n}", rows.len())));
        }
        check_triangle(&rows, n, 1)?;
        Ok(RationalPoint { n, rows })
    }

    pub fn from_pattern(z: &GZPattern) -> Self {
        RationalPoint {
            n: z.n(),
            rows: z.rows[1..].iter().map(|r| r.iter().map(|&v| Rational::from(v)).collect()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rows `1..n−1`.
    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// `y_{i,j}` for `i ≥ 1` and 1-based `j`.
    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.rows[i - 1][j - 1]
    }

    /// All rows including row 0 taken from `λ`.
    pub fn full_rows(&self, lambda: &Partition) -> Vec<Vec<Rational>> {
        let mut out = vec![lambda.top_row().into_iter().map(Rational::from).collect()];
        out.extend(self.rows.iter().cloned());
        out
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(|v| v.is_integer())
    }

    /// The integer pattern at this point, if every coordinate is an integer.
    pub fn to_pattern(&self, lambda: &Partition) -> Option<GZPattern> {
        if !self.is_integral() {
            return None;
        }
        let rows = self.full_rows(lambda).iter().map(|r| r.iter().map(|v| v.to_integer()).collect()).collect();
        GZPattern::new(rows).ok()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rows": self.rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()
        })
    }

    /// Parses rows separated by `;` with entries like `5/2`, `3` or `2.5`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let rows = if s.trim().is_empty() {
            vec![]
        } else {
            s.split(';')
                .map(|row| row.split([',', ' ']).filter(|t| !t.is_empty()).map(parse_rational).collect())
                .collect::<Result<Vec<Vec<_>>>>()?
        };
        Self::new(n, rows)
    }
}

/// Parses `p/q`, an integer, or a finite decimal.
pub fn parse_rational(t: &str) -> Result<Rational> {
    let t = t.trim();
    let bad = || Error::Parse(format!("rational {t:?}"));
    if let Some((int, frac)) = t.split_once('.') {
        let neg = int.starts_with('-');
        let digits = frac.len() as u32;
        let den = 10i64.checked_pow(digits).ok_or_else(bad)?;
        let whole: i64 = if int.is_empty() || int == "-" { 0 } else { int.parse().map_err(|_| bad())? };
        let f: i64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        let num = whole.abs() * den + f;
        return Ok(Rational::new(if neg { -num } else { num }, den));
    }
    t.parse::<Rational>().map_err(|_| bad())
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "{}", rows.join("; "))
    }
}

/// Non-strict membership of `p` in `GZ(λ)`.
pub fn gz_contains(lambda: &Partition, p: &RationalPoint) -> Result<bool> {
    if p.n() != lambda.n() {
        return Err(Error::DimensionMismatch(lambda.n(), p.n()));
    }
    let rows = p.full_rows(lambda);
    let n = lambda.n();
    Ok((1..n).all(|i| (0..n - i).all(|j| rows[i - 1][j] <= rows[i][j] && rows[i][j] <= rows[i - 1][j + 1])))
}

/// All integer points of `GZ(λ)`, lexicographic by rows then entries.
pub fn enumerate_gz_patterns(lambda: &Partition) -> Vec<GZPattern> {
    fn rec(rows: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>, out: &mut Vec<GZPattern>) {
        let n = rows[0].len();
        let i = rows.len();
        if i == n {
            out.push(GZPattern::from_rows_unchecked(rows.clone()));
            return;
        }
        let j = cur.len();
        if j == n - i {
            let row = std::mem::take(cur);
            rows.push(row);
            rec(rows, &mut Vec::new(), out);
            *cur = rows.pop().unwrap();
            return;
        }
        let (lo, hi) = (rows[i - 1][j], rows[i - 1][j + 1]);
        for v in lo..=hi {
            cur.push(v);
            rec(rows, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lambda.n() == 0 {
        return out;
    }
    rec(&mut vec![lambda.top_row()], &mut Vec::new(), &mut out);
    out
}

/// `∏_{i<j} (λ_i − λ_j + j − i)/(j − i)`.
pub fn weyl_dimension(lambda: &Partition) -> BigUint {
    let l = lambda.parts();
    let (mut num, mut den) = (BigInt::one(), BigInt::one());
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            num *= BigInt::from(l[i] as i64 - l[j] as i64 + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "Weyl product is not an integer");
    q.to_biguint().expect("positive")
}

/// Weight of a point: `a_k = S_{n−k} − S_{n−k+1}` where `S_i` is the sum of
/// row `i`, `S_0 = |λ|` and `S_n = 0`.
pub fn project_weight(lambda: &Partition, p: &RationalPoint) -> Result<Vec<Rational>> {
    if p.n() != lambda.n() {
        return Err(Error::DimensionMismatch(lambda.n(), p.n()));
    }
    let sums: Vec<Rational> = p.full_rows(lambda).iter().map(|r| r.iter().sum()).collect();
    Ok(weight_from_sums(&sums))
}

/// `Σ_z x^{π(z)}` over the given integer points.
pub fn character_of_points(lambda: &Partition, pts: &[GZPattern]) -> BetaPolynomial {
    let mut out = BetaPolynomial::zero(lambda.n());
    for z in pts {
        let exps = z.weight().iter().map(|&v| v.to_u32().expect("weights are nonnegative")).collect();
        out.add_term(Monomial::new(0, exps), BigInt::one());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lascoux_w_lambda;
    use crate::perm::Permutation;
    use proptest::prelude::*;

    fn lam(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    /// Test-only oracle: all tableaux with entries in `[0, λ_1]`, filtered.
    fn brute_force_count(l: &Partition) -> usize {
        let n = l.n();
        let cells = n * (n - 1) / 2;
        let m = l.parts()[0] as usize + 1;
        let mut count = 0;
        for code in 0..m.pow(cells as u32) {
            let mut c = code;
            let mut rows = vec![l.top_row()];
            for i in 1..n {
                let mut row = Vec::new();
                for _ in 0..n - i {
                    row.push((c % m) as i64);
                    c /= m;
                }
                rows.push(row);
            }
            if GZPattern::new(rows).is_ok() {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!("3,2,0".parse::<Partition>().unwrap(), lam(&[3, 2, 0]));
        assert_eq!(Partition::all_bounded(2, 2).len(), 6);
        assert_eq!(lam(&[2, 1]).shift(3), lam(&[5, 4]));
    }

    #[test]
    fn containment() {
        let l = lam(&[3, 2, 0]);
        let top = RationalPoint::new(3, vec![vec![r(2, 1), r(3, 1)], vec![r(3, 1)]]).unwrap();
        assert!(gz_contains(&l, &top).unwrap());
        let l4 = lam(&[9, 7, 3, 1]);
        let bad = RationalPoint::parse(4, "2,3,9;2,3;4").unwrap();
        assert!(!gz_contains(&l4, &bad).unwrap());
        for z in enumerate_gz_patterns(&l) {
            assert!(gz_contains(&l, &RationalPoint::from_pattern(&z)).unwrap());
        }
        assert!(RationalPoint::parse(3, "1;2;3").is_err());
    }

    #[test]
    fn counts_and_oracle() {
        assert_eq!(enumerate_gz_patterns(&lam(&[1, 0])).len(), 2);
        assert_eq!(brute_force_count(&lam(&[2, 1, 0])), 8);
        assert_eq!(brute_force_count(&lam(&[3, 2, 0])), 15);
        assert_eq!(enumerate_gz_patterns(&lam(&[2, 1, 0])).len(), 8);
        assert_eq!(enumerate_gz_patterns(&lam(&[3, 2, 0])).len(), 15);
        assert_eq!(weyl_dimension(&lam(&[0, 0, 0, 0])), BigUint::one());
        assert_eq!(weyl_dimension(&lam(&[2, 1, 0])), BigUint::from(8u32));
        assert_eq!(weyl_dimension(&lam(&[3, 2, 0])), BigUint::from(15u32));
        for n in 1..=4 {
            for l in Partition::all_bounded(n, 5) {
                assert_eq!(BigUint::from(enumerate_gz_patterns(&l).len()), weyl_dimension(&l));
            }
        }
        for l in Partition::all_bounded(3, 3) {
            assert_eq!(brute_force_count(&l), enumerate_gz_patterns(&l).len());
        }
    }

    #[test]
    fn enumeration_is_sorted() {
        let pats = enumerate_gz_patterns(&lam(&[3, 1, 0]));
        assert!(pats.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn weights() {
        let l = lam(&[3, 2, 0]);
        let top = GZPattern::new(vec![vec![0, 2, 3], vec![2, 3], vec![3]]).unwrap();
        assert_eq!(top.weight(), vec![3, 2, 0]);
        let z = GZPattern::new(vec![vec![0, 2, 3], vec![2, 2], vec![2]]).unwrap();
        assert_eq!(z.weight(), vec![2, 2, 1]);
        let p = RationalPoint::from_pattern(&z);
        assert_eq!(project_weight(&l, &p).unwrap(), vec![r(2, 1), r(2, 1), r(1, 1)]);
        let zero = enumerate_gz_patterns(&lam(&[0, 0, 0]));
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].weight(), vec![0, 0, 0]);
    }

    #[test]
    fn characters() {
        let l = lam(&[1, 0, 0]);
        let ch = character_of_points(&l, &enumerate_gz_patterns(&l));
        assert_eq!(ch.to_string(), "x3 + x2 + x1");
        assert!(character_of_points(&l, &[]).is_zero());
        for l in Partition::all_bounded(3, 3) {
            let ch = character_of_points(&l, &enumerate_gz_patterns(&l));
            let schur = lascoux_w_lambda(&Permutation::longest(3), &l).unwrap().specialize_beta(&BigInt::zero());
            assert_eq!(ch, schur);
            for i in 1..3 {
                assert!(ch.is_symmetric_in(i).unwrap());
            }
        }
    }

    #[test]
    fn shift_invariance() {
        for l in Partition::all_bounded(3, 2) {
            let shifted = l.shift(2);
            let a = enumerate_gz_patterns(&l);
            let b = enumerate_gz_patterns(&shifted);
            assert_eq!(a.len(), b.len());
            for (x, y) in a.iter().zip(&b) {
                for (rx, ry) in x.rows().iter().zip(y.rows()) {
                    assert!(rx.iter().zip(ry).all(|(u, v)| u + 2 == *v));
                }
            }
            let ca = character_of_points(&l, &a);
            let cb = character_of_points(&shifted, &b);
            assert_eq!(&ca * &BetaPolynomial::x_pow(&[2, 2, 2]), cb);
        }
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("5/2").unwrap(), r(5, 2));
        assert_eq!(parse_rational("2.5").unwrap(), r(5, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), r(-1, 4));
        assert_eq!(parse_rational("9").unwrap(), r(9, 1));
        assert!(parse_rational("x").is_err());
        let p = RationalPoint::parse(4, "5/2, 31/10, 9; 5/2, 19/5; 37/10").unwrap();
        assert_eq!(p.get(3, 1), r(37, 10));
        assert_eq!(p.to_json()["rows"][0][1], "31/10");
    }

    proptest! {
        #[test]
        fn enumerated_patterns_are_members(parts in prop::collection::vec(0u32..4, 1..5)) {
            let mut parts = parts;
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let l = Partition::new(parts).unwrap();
            for z in enumerate_gz_patterns(&l) {
                prop_assert!(GZPattern::new(z.rows().to_vec()).is_ok());
                prop_assert_eq!(z.weight().iter().sum::<i64>() as u64, l.size());
            }
        }
    }
}
