//! Sparse polynomials in `β, x1..xn` with integer coefficients, divided
//! differences, Demazure-Lascoux operators and Lascoux polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gz::Partition;
use crate::perm::Permutation;

/// `β^beta_deg · x1^exps[0] ⋯ xn^exps[n-1]`.
///
/// The derived order compares `beta_deg` first and then `exps`
/// lexicographically; this is the canonical term order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub beta_deg: u32,
    pub exps: Vec<u32>,
}

impl Monomial {
    pub fn new(beta_deg: u32, exps: Vec<u32>) -> Self {
        Monomial { beta_deg, exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { beta_deg: 0, exps: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    /// Total degree in the `x` variables.
    pub fn x_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial {
            beta_deg: self.beta_deg + other.beta_deg,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    fn to_json(&self) -> Value {
        json!({ "beta": self.beta_deg, "exps": self.exps })
    }

    /// JSON form of a single term with the given coefficient.
    pub fn term_json(&self, coeff: &BigInt) -> Value {
        let mut v = self.to_json();
        v["coeff"] = Value::String(coeff.to_string());
        v
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        match self.beta_deg {
            0 => {}
            1 => factors.push("b".to_string()),
            k => factors.push(format!("b^{k}")),
        }
        for (idx, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(format!("x{}", idx + 1)),
                e => factors.push(format!("x{}^{}", idx + 1, e)),
            }
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// Element of `Z[β][x1, …, xn]`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaPolynomial {
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl BetaPolynomial {
    pub fn zero(n: usize) -> Self {
        BetaPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::term(Monomial::one(n), BigInt::one())
    }

    pub fn term(m: Monomial, coeff: BigInt) -> Self {
        let mut p = Self::zero(m.n());
        p.add_term(m, coeff);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigInt::one())
    }

    /// The variable `x_i` (1-based).
    pub fn x(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Ok(Self::monomial(Monomial::new(0, exps)))
    }

    pub fn beta(n: usize) -> Self {
        Self::monomial(Monomial::new(1, vec![0; n]))
    }

    /// `x^α` for an exponent vector.
    pub fn x_pow(exps: &[u32]) -> Self {
        Self::monomial(Monomial::new(0, exps.to_vec()))
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            if m.n() != n {
                return Err(Error::DimensionMismatch(n, m.n()));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Sum of all coefficients (the number of monomials counted with multiplicity
    /// when the coefficients are positive).
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::DimensionMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut out = Self::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.times(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    /// Substitutes `β = b`.
    pub fn specialize_beta(&self, b: &BigInt) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let factor = num_traits::pow(b.clone(), m.beta_deg as usize);
            out.add_term(Monomial::new(0, m.exps.clone()), c * factor);
        }
        out
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i + 1 > self.n {
            Err(Error::IndexOutOfRange { index: i, max: self.n.saturating_sub(1) })
        } else {
            Ok(())
        }
    }

    /// `s_i · p`: swaps `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let mut e = m.exps.clone();
            e.swap(i - 1, i);
            out.add_term(Monomial::new(m.beta_deg, e), c.clone());
        }
        Ok(out)
    }

    pub fn is_symmetric_in(&self, i: usize) -> Result<bool> {
        Ok(self.swap_vars(i)? == *self)
    }

    /// `∂_i p = (p − s_i p)/(x_i − x_{i+1})`, evaluated termwise via the
    /// geometric-series quotient of `x_i^a x_{i+1}^b − x_i^b x_{i+1}^a`.
    pub fn divided_difference(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let (p, q) = (i - 1, i);
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let (a, b) = (m.exps[p], m.exps[q]);
            if a == b {
                continue;
            }
            let (hi, lo, coeff) = if a > b { (a, b, c.clone()) } else { (b, a, -c.clone()) };
            for k in 0..(hi - lo) {
                let mut e = m.exps.clone();
                e[p] = hi - 1 - k;
                e[q] = lo + k;
                out.add_term(Monomial::new(m.beta_deg, e), coeff.clone());
            }
        }
        Ok(out)
    }

    /// `π_i p = ∂_i(x_i p + β x_i x_{i+1} p)`.
    pub fn demazure_lascoux(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let mut lifted = Self::zero(self.n);
        for (m, c) in &self.terms {
            let mut e = m.exps.clone();
            e[i - 1] += 1;
            lifted.add_term(Monomial::new(m.beta_deg, e.clone()), c.clone());
            e[i] += 1;
            lifted.add_term(Monomial::new(m.beta_deg + 1, e), c.clone());
        }
        lifted.divided_difference(i)
    }

    /// Applies `π_{w_1} ∘ … ∘ π_{w_k}`: the last letter acts first.
    pub fn apply_word(&self, word: &[usize]) -> Result<Self> {
        for &i in word {
            self.check_index(i)?;
        }
        let mut p = self.clone();
        for &i in word.iter().rev() {
            p = p.demazure_lascoux(i)?;
        }
        Ok(p)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|c| c.is_one())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// `[p]_λ`: the terms whose exponents do not interlace `λ`.
    pub fn nonalternating_part(&self, lambda: &Partition) -> Result<Self> {
        if lambda.n() != self.n {
            return Err(Error::DimensionMismatch(self.n, lambda.n()));
        }
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            if !is_alternating(&m.exps, lambda.parts()) {
                out.add_term(m.clone(), c.clone());
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "terms": self.terms.iter().map(|(m, c)| m.term_json(c)).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("polynomial json: {what}"));
        let n = v["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
        let mut p = Self::zero(n);
        for t in v["terms"].as_array().ok_or_else(|| bad("missing terms"))? {
            let beta = t["beta"].as_u64().ok_or_else(|| bad("beta"))? as u32;
            let exps = t["exps"]
                .as_array()
                .ok_or_else(|| bad("exps"))?
                .iter()
                .map(|e| e.as_u64().map(|e| e as u32))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| bad("exps"))?;
            if exps.len() != n {
                return Err(Error::DimensionMismatch(n, exps.len()));
            }
            let coeff: BigInt = t["coeff"]
                .as_str()
                .ok_or_else(|| bad("coeff"))?
                .parse()
                .map_err(|_| bad("coeff"))?;
            p.add_term(Monomial::new(beta, exps), coeff);
        }
        Ok(p)
    }
}

/// `λ_1 ≥ μ_1 ≥ λ_2 ≥ … ≥ μ_{k} ≥ λ_{k+1}` where `k = λ.len() − 1`.
pub(crate) fn is_alternating(mu: &[u32], lambda: &[u32]) -> bool {
    (0..lambda.len().saturating_sub(1)).all(|k| lambda[k] >= mu[k] && mu[k] >= lambda[k + 1])
}

impl fmt::Display for BetaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let is_const = m.beta_deg == 0 && m.exps.iter().all(|&e| e == 0);
            if is_const {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&BetaPolynomial> for &BetaPolynomial {
            type Output = BetaPolynomial;
            /// Panics when the variable counts differ.
            fn $method(self, rhs: &BetaPolynomial) -> BetaPolynomial {
                self.$inner(rhs).expect("polynomials with different variable counts")
            }
        }
        impl $tr for BetaPolynomial {
            type Output = BetaPolynomial;
            fn $method(self, rhs: BetaPolynomial) -> BetaPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);

impl Neg for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn neg(self) -> BetaPolynomial {
        self.scale(&-BigInt::one())
    }
}

#[derive(Clone, Copy)]
enum Pick {
    First,
    Last,
}

fn lascoux_rec(alpha: &[u32], pick: Pick) -> BetaPolynomial {
    let ascents = (0..alpha.len().saturating_sub(1)).filter(|&k| alpha[k] < alpha[k + 1]);
    let k = match pick {
        Pick::First => ascents.min(),
        Pick::Last => ascents.max(),
    };
    match k {
        None => BetaPolynomial::x_pow(alpha),
        Some(k) => {
            let mut swapped = alpha.to_vec();
            swapped.swap(k, k + 1);
            lascoux_rec(&swapped, pick)
                .demazure_lascoux(k + 1)
                .expect("ascent index is in range")
        }
    }
}

/// `𝓛_α` for a weak composition `α`: `x^α` if `α` is weakly decreasing,
/// otherwise `π_i 𝓛_{s_i α}` for an ascent `α_i < α_{i+1}`.
pub fn lascoux_of_composition(alpha: &[u32]) -> BetaPolynomial {
    let p = lascoux_rec(alpha, Pick::First);
    debug_assert_eq!(p, lascoux_rec(alpha, Pick::Last), "ascent choice changed 𝓛_{alpha:?}");
    p
}

/// `𝓛_{w,λ} = π_{j_1} ∘ … ∘ π_{j_m}(x^λ)` for a reduced word `w = s_{j_1} ∘ … ∘ s_{j_m}`.
pub fn lascoux_w_lambda(w: &Permutation, lambda: &Partition) -> Result<BetaPolynomial> {
    if w.n() != lambda.n() {
        return Err(Error::DimensionMismatch(w.n(), lambda.n()));
    }
    BetaPolynomial::x_pow(lambda.parts()).apply_word(w.canonical_reduced_word().letters())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(beta: u32, exps: &[u32]) -> Monomial {
        Monomial::new(beta, exps.to_vec())
    }

    fn poly(n: usize, terms: &[(u32, &[u32], i64)]) -> BetaPolynomial {
        BetaPolynomial::from_terms(n, terms.iter().map(|&(b, e, c)| (mono(b, e), BigInt::from(c))))
            .unwrap()
    }

    /// Test-only oracle: long division of `num` by `x_i − x_{i+1}`, eliminating
    /// the highest power of `x_i` each round.
    fn long_divide(num: &BetaPolynomial, i: usize) -> BetaPolynomial {
        let n = num.n();
        let mut rem = num.clone();
        let mut quot = BetaPolynomial::zero(n);
        while let Some((m, c)) = rem
            .terms()
            .max_by_key(|&(m, _)| (m.exps[i - 1], m.clone()))
            .map(|(m, c)| (m.clone(), c.clone()))
        {
            assert!(m.exps[i - 1] > 0, "not divisible: remainder {rem}");
            let mut qe = m.exps.clone();
            qe[i - 1] -= 1;
            let q = BetaPolynomial::term(Monomial::new(m.beta_deg, qe), c);
            let divisor = &BetaPolynomial::x(n, i).unwrap() - &BetaPolynomial::x(n, i + 1).unwrap();
            rem = &rem - &(&q * &divisor);
            quot = &quot + &q;
        }
        quot
    }

    #[test]
    fn add_and_mul_basics() {
        let x1 = BetaPolynomial::x(2, 1).unwrap();
        assert_eq!(&x1 + &BetaPolynomial::zero(2), x1);
        assert_eq!(&x1 + &x1, poly(2, &[(0, &[1, 0], 2)]));
        assert_eq!(&x1 * &BetaPolynomial::one(2), x1);
        let bx2 = &BetaPolynomial::beta(2) * &BetaPolynomial::x(2, 2).unwrap();
        assert_eq!(&x1 * &bx2, poly(2, &[(1, &[1, 1], 1)]));
        assert!(matches!(x1.try_add(&BetaPolynomial::one(3)), Err(Error::DimensionMismatch(2, 3))));
        assert!(x1.try_mul(&BetaPolynomial::one(3)).is_err());
    }

    #[test]
    fn s1_on_320() {
        let s1 = poly(3, &[(0, &[3, 2, 0], 1), (1, &[3, 3, 0], 1)]) + poly(3, &[(0, &[2, 3, 0], 1)]);
        assert_eq!(s1, lascoux_of_composition(&[2, 3, 0]));
    }

    #[test]
    fn specialize() {
        let bx1 = poly(2, &[(1, &[1, 0], 1)]);
        assert!(bx1.specialize_beta(&BigInt::zero()).is_zero());
        let s1 = lascoux_of_composition(&[2, 3, 0]);
        assert_eq!(
            s1.specialize_beta(&BigInt::zero()),
            poly(3, &[(0, &[3, 2, 0], 1), (0, &[2, 3, 0], 1)])
        );
        let bx1x2 = poly(2, &[(1, &[1, 1], 1)]);
        assert_eq!(bx1x2.specialize_beta(&BigInt::from(-1)), poly(2, &[(0, &[1, 1], -1)]));
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(poly(2, &[(0, &[1, 0], 1)]).divided_difference(1).unwrap(), BetaPolynomial::one(2));
        assert!(poly(2, &[(0, &[1, 1], 1)]).divided_difference(1).unwrap().is_zero());
        let p = poly(2, &[(0, &[4, 2], 1)]);
        let expect = poly(2, &[(0, &[3, 2], 1), (0, &[2, 3], 1)]);
        assert_eq!(p.divided_difference(1).unwrap(), expect);
        let numerator = &p - &p.swap_vars(1).unwrap();
        assert_eq!(long_divide(&numerator, 1), expect);
        assert!(p.divided_difference(2).is_err());
        assert!(p.divided_difference(0).is_err());
    }

    #[test]
    fn demazure_lascoux_examples() {
        assert_eq!(BetaPolynomial::one(2).demazure_lascoux(1).unwrap(), BetaPolynomial::one(2));
        let x = poly(3, &[(0, &[3, 2, 0], 1)]);
        assert_eq!(
            x.demazure_lascoux(1).unwrap(),
            poly(3, &[(0, &[3, 2, 0], 1), (0, &[2, 3, 0], 1), (1, &[3, 3, 0], 1)])
        );
        assert_eq!(
            x.demazure_lascoux(2).unwrap(),
            poly(
                3,
                &[
                    (0, &[3, 2, 0], 1),
                    (1, &[3, 2, 1], 1),
                    (0, &[3, 1, 1], 1),
                    (1, &[3, 1, 2], 1),
                    (0, &[3, 0, 2], 1)
                ]
            )
        );
    }

    #[test]
    fn apply_word_order() {
        let x = poly(3, &[(0, &[3, 2, 0], 1)]);
        assert_eq!(x.apply_word(&[]).unwrap(), x);
        assert_eq!(x.apply_word(&[1]).unwrap(), x.demazure_lascoux(1).unwrap());
        assert_eq!(x.apply_word(&[1, 1]).unwrap(), x.apply_word(&[1]).unwrap());
        // leftmost letter acts last
        let p21 = x.apply_word(&[2, 1]).unwrap();
        assert_eq!(p21, x.demazure_lascoux(1).unwrap().demazure_lascoux(2).unwrap());
        assert!(x.apply_word(&[3]).is_err());
    }

    #[test]
    fn lascoux_compositions() {
        assert_eq!(lascoux_of_composition(&[3, 2, 0]), poly(3, &[(0, &[3, 2, 0], 1)]));
        let s2 = BetaPolynomial::x_pow(&[3, 2, 0]).demazure_lascoux(2).unwrap();
        assert_eq!(lascoux_of_composition(&[3, 0, 2]), s2);
    }

    #[test]
    fn lascoux_w_lambda_examples() {
        let lam = Partition::new(vec![3, 2, 0]).unwrap();
        let id = Permutation::identity(3);
        assert_eq!(lascoux_w_lambda(&id, &lam).unwrap(), BetaPolynomial::x_pow(&[3, 2, 0]));
        let s1 = Permutation::simple(3, 1).unwrap();
        assert_eq!(
            lascoux_w_lambda(&s1, &lam).unwrap(),
            poly(3, &[(0, &[3, 2, 0], 1), (1, &[3, 3, 0], 1), (0, &[2, 3, 0], 1)])
        );
        let w0 = Permutation::longest(3);
        let g = lascoux_w_lambda(&w0, &Partition::new(vec![2, 1, 0]).unwrap()).unwrap();
        assert!(g.coeff(&mono(2, &[2, 1, 2])) >= BigInt::one());
    }

    #[test]
    fn shift_by_full_monomial() {
        for (a, b, c) in [(3u32, 2u32, 1u32), (2, 2, 1), (4, 1, 1), (3, 3, 2)] {
            let base = lascoux_of_composition(&[a - c, b - c, 0]);
            let shift = BetaPolynomial::x_pow(&[c, c, c]);
            for w in Permutation::all(3) {
                let lam = Partition::new(vec![a, b, c]).unwrap();
                let small = Partition::new(vec![a - c, b - c, 0]).unwrap();
                assert_eq!(
                    &shift * &lascoux_w_lambda(&w, &small).unwrap(),
                    lascoux_w_lambda(&w, &lam).unwrap()
                );
            }
            assert_eq!(&shift * &base, lascoux_of_composition(&[a, b, c]));
        }
    }

    #[test]
    fn multiplicity_free() {
        assert!(poly(2, &[(0, &[1, 0], 1), (0, &[0, 1], 1)]).is_multiplicity_free());
        assert!(!poly(2, &[(0, &[1, 0], 2)]).is_multiplicity_free());
        let x = BetaPolynomial::x_pow(&[3, 2, 0]);
        for i in 1..3 {
            assert!(x.demazure_lascoux(i).unwrap().is_multiplicity_free());
        }
        // π_2 π_1: β x1³x2²x3 comes from both π_2(x1³x2²) and π_2(β x1³x2³)
        let p = x.apply_word(&[2, 1]).unwrap();
        assert_eq!(p.coeff(&mono(1, &[3, 2, 1])), BigInt::from(2));
        assert!(!p.is_multiplicity_free());
        assert!(p.specialize_beta(&BigInt::from(0)).is_multiplicity_free());
    }

    #[test]
    fn nonalternating() {
        let lam = Partition::new(vec![4, 2, 0]).unwrap();
        assert!(BetaPolynomial::x_pow(&[4, 2, 0]).nonalternating_part(&lam).unwrap().is_zero());
        let p = BetaPolynomial::x_pow(&[4, 2, 0]).apply_word(&[2, 1]).unwrap();
        let np = p.nonalternating_part(&lam).unwrap();
        assert_eq!(np.coeff(&mono(0, &[3, 3, 0])), BigInt::one());
        assert_eq!(np.coeff(&mono(1, &[4, 3, 0])), BigInt::one());
        assert!(np.apply_word(&[1]).unwrap().is_zero());
    }

    #[test]
    fn minimal_permutation_matches_composition() {
        for n in 1..=4usize {
            for w in Permutation::all(n) {
                for lam in Partition::all_bounded(n, 3) {
                    let alpha = w.apply_to_composition(lam.parts()).unwrap();
                    // w is minimal iff it does not invert equal parts
                    let minimal = (0..n).all(|i| {
                        (i + 1..n).all(|j| {
                            lam.parts()[i] != lam.parts()[j] || w.apply(i + 1) < w.apply(j + 1)
                        })
                    });
                    if minimal {
                        assert_eq!(lascoux_of_composition(&alpha), lascoux_w_lambda(&w, &lam).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn text_and_json() {
        let p = poly(3, &[(0, &[0, 0, 0], 1), (0, &[1, 0, 0], -1), (2, &[2, 0, 1], 3)]);
        assert_eq!(p.to_string(), "1 - x1 + 3*b^2*x1^2*x3");
        assert_eq!((-&p).to_string(), "-1 + x1 - 3*b^2*x1^2*x3");
        assert_eq!(BetaPolynomial::zero(2).to_string(), "0");
        let v = p.to_json();
        assert_eq!(v["terms"][2]["coeff"], "3");
        assert_eq!(BetaPolynomial::from_json(&v).unwrap(), p);
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = BetaPolynomial> {
        prop::collection::vec(
            (0u32..2, prop::collection::vec(0u32..4, n), -3i64..4),
            0..5,
        )
        .prop_map(move |ts| {
            BetaPolynomial::from_terms(
                n,
                ts.into_iter().map(|(b, e, c)| (Monomial::new(b, e), BigInt::from(c))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn divided_difference_matches_long_division(p in arb_poly(3), i in 1usize..3) {
            let numerator = &p - &p.swap_vars(i).unwrap();
            prop_assert_eq!(p.divided_difference(i).unwrap(), long_divide(&numerator, i));
            prop_assert!(p.divided_difference(i).unwrap().divided_difference(i).unwrap().is_zero());
        }

        #[test]
        fn operator_identities(p in arb_poly(4), i in 1usize..4) {
            let pi = p.demazure_lascoux(i).unwrap();
            prop_assert_eq!(pi.demazure_lascoux(i).unwrap(), pi.clone());
            prop_assert!((&pi - &p).demazure_lascoux(i).unwrap().is_zero());
            if i + 1 < 4 {
                prop_assert_eq!(
                    p.apply_word(&[i, i + 1, i]).unwrap(),
                    p.apply_word(&[i + 1, i, i + 1]).unwrap()
                );
            }
        }

        #[test]
        fn json_roundtrip(p in arb_poly(3)) {
            prop_assert_eq!(BetaPolynomial::from_json(&p.to_json()).unwrap(), p);
        }
    }
}
