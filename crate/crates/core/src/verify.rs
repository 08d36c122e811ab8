//! Exhaustive verification suites over bounded ranges of `n` and `λ`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{lascoux_of_composition, lascoux_w_lambda, BetaPolynomial, Monomial};
use crate::cells::{filter_in_faces, sum_monomials, verify_cellular};
use crate::enhanced::{enumerate_efficient, grothendieck_via_patterns, EnhancedPattern};
use crate::error::Error;
use crate::gz::{character_of_points, enumerate_gz_patterns, weyl_dimension, Partition};
use crate::kogan::{
    applicable_moves, edge_move, empty_places_permutation, enumerate_reduced_faces, faces_by_permutation,
    key_polynomial, right_adjusted_of, MoveDirection,
};
use crate::perm::{bruhat_leq, Permutation, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    All,
    Operators,
    Main1,
    Main2,
    Key,
    Cellular,
    Kogan,
    Lemmas,
    Bruhat,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Operators,
        Suite::Main1,
        Suite::Main2,
        Suite::Key,
        Suite::Cellular,
        Suite::Kogan,
        Suite::Lemmas,
        Suite::Bruhat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Operators => "operators",
            Suite::Main1 => "main1",
            Suite::Main2 => "main2",
            Suite::Key => "key",
            Suite::Cellular => "cellular",
            Suite::Kogan => "kogan",
            Suite::Lemmas => "lemmas",
            Suite::Bruhat => "bruhat",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Ranges for a verification run. Suites cover `2 ≤ n ≤ max_n` and every
/// partition with parts at most `max_part`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyBounds {
    pub max_n: usize,
    pub max_part: u32,
    /// Largest grid denominator for the cellular suite; every `d` up to it is used.
    pub denominator: i64,
    pub seed: u64,
    /// Number of random polynomials for the operator suite.
    pub samples: usize,
}

impl Default for VerifyBounds {
    fn default() -> Self {
        VerifyBounds { max_n: 3, max_part: 3, denominator: 2, seed: 0, samples: 120 }
    }
}

impl VerifyBounds {
    pub fn partitions(&self) -> Vec<Partition> {
        (2..=self.max_n).flat_map(|n| Partition::all_bounded(n, self.max_part)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// Enough to reproduce the case.
    pub case: String,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub suite: Suite,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub wall_time: Duration,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "cases": self.cases,
            "failures": self.failures.iter().map(|f| json!({"case": f.case, "detail": f.detail})).collect::<Vec<_>>(),
            "wall_time_ms": self.wall_time.as_millis() as u64,
        })
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} cases, {} failures, {:.3}s",
            self.suite,
            self.cases,
            self.failures.len(),
            self.wall_time.as_secs_f64()
        )?;
        for x in &self.failures {
            write!(f, "\n  FAIL {}: {}", x.case, x.detail)?;
        }
        Ok(())
    }
}

/// Accumulates cases and failures for one suite.
#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn check(&mut self, ok: bool, case: impl FnOnce() -> String, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure { case: case(), detail: detail() });
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }
}

/// Runs `suite` (every suite for [`Suite::All`]). `progress` receives one line
/// per finished block of cases.
pub fn run(suite: Suite, bounds: &VerifyBounds, progress: &(dyn Fn(&str) + Sync)) -> Vec<VerifyReport> {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    suites.into_iter().map(|s| run_one(s, bounds, progress)).collect()
}

fn run_one(suite: Suite, bounds: &VerifyBounds, progress: &(dyn Fn(&str) + Sync)) -> VerifyReport {
    let start = Instant::now();
    let tally = match suite {
        Suite::All => unreachable!("expanded by run"),
        Suite::Operators => operators(bounds),
        Suite::Main1 => per_partition(bounds, suite, progress, main1),
        Suite::Main2 => per_partition(bounds, suite, progress, main2),
        Suite::Key => per_partition(bounds, suite, progress, key),
        Suite::Cellular => per_partition(bounds, suite, progress, |l, b| cellular(l, b.denominator)),
        Suite::Kogan => kogan(bounds, progress),
        Suite::Lemmas => lemmas(bounds),
        Suite::Bruhat => per_partition(bounds, suite, progress, bruhat),
    };
    let mut failures = tally.failures;
    failures.sort_by(|a, b| (&a.case, &a.detail).cmp(&(&b.case, &b.detail)));
    VerifyReport { suite, cases: tally.cases, failures, wall_time: start.elapsed() }
}

fn per_partition(
    bounds: &VerifyBounds,
    suite: Suite,
    progress: &(dyn Fn(&str) + Sync),
    f: impl Fn(&Partition, &VerifyBounds) -> Tally + Sync,
) -> Tally {
    bounds
        .partitions()
        .par_iter()
        .map(|l| {
            let t = f(l, bounds);
            progress(&format!("{suite} λ={l}: {} cases, {} failures", t.cases, t.failures.len()));
            t
        })
        .reduce(Tally::default, Tally::merge)
}

fn w0_operator(lambda: &Partition) -> BetaPolynomial {
    BetaPolynomial::x_pow(lambda.parts())
        .apply_word(Word::w0_word_reading(lambda.n()).letters())
        .expect("letters in range")
}

fn main1(lambda: &Partition, _: &VerifyBounds) -> Tally {
    let mut t = Tally::default();
    let (a, b) = (grothendieck_via_patterns(lambda), w0_operator(lambda));
    t.check(a == b, || format!("λ={lambda}"), || format!("patterns {a} vs operators {b}"));
    t
}

fn main2(lambda: &Partition, _: &VerifyBounds) -> Tally {
    let mut t = Tally::default();
    let n = lambda.n();
    let eff = enumerate_efficient(lambda);
    for (w, faces) in faces_by_permutation(n) {
        let cells = sum_monomials(n, &filter_in_faces(eff.clone(), &faces, lambda));
        let ops = lascoux_w_lambda(&w, lambda).expect("sizes agree");
        t.check(cells == ops, || format!("w={w} λ={lambda}"), || format!("cells {cells} vs operators {ops}"));
    }
    t
}

fn key(lambda: &Partition, _: &VerifyBounds) -> Tally {
    let mut t = Tally::default();
    let zero = BigInt::zero();
    for w in Permutation::all(lambda.n()) {
        let k = key_polynomial(&w, lambda).expect("sizes agree");
        let l = lascoux_w_lambda(&w, lambda).expect("sizes agree").specialize_beta(&zero);
        t.check(k == l, || format!("w={w} λ={lambda}"), || format!("faces {k} vs β=0 {l}"));
    }
    let pts = enumerate_gz_patterns(lambda);
    let ch = character_of_points(lambda, &pts);
    let schur = w0_operator(lambda).specialize_beta(&zero);
    t.check(ch == schur, || format!("schur λ={lambda}"), || format!("points {ch} vs operators {schur}"));
    let dim = weyl_dimension(lambda);
    t.check(
        BigInt::from(pts.len()) == BigInt::from(dim.clone()) && ch.coeff_sum() == BigInt::from(dim.clone()),
        || format!("weyl λ={lambda}"),
        || format!("{} points, character sum {}, dimension {dim}", pts.len(), ch.coeff_sum()),
    );
    t
}

fn cellular(lambda: &Partition, denominator: i64) -> Tally {
    let mut t = Tally::default();
    for d in 1..=denominator.max(1) {
        let r = verify_cellular(lambda, d);
        t.cases += r.points.max(1);
        t.failures.extend(r.failures.into_iter().map(|detail| Failure { case: format!("λ={lambda} d={d}"), detail }));
    }
    t
}

fn bruhat(lambda: &Partition, _: &VerifyBounds) -> Tally {
    let mut t = Tally::default();
    let n = lambda.n();
    let eff = enumerate_efficient(lambda);
    let by_perm: Vec<(Permutation, BTreeSet<EnhancedPattern>, BetaPolynomial)> = faces_by_permutation(n)
        .into_iter()
        .map(|(w, faces)| {
            let set: BTreeSet<EnhancedPattern> = filter_in_faces(eff.clone(), &faces, lambda).into_iter().collect();
            let poly = lascoux_w_lambda(&w, lambda).expect("sizes agree");
            (w, set, poly)
        })
        .collect();
    for (u, su, pu) in &by_perm {
        for (w, sw, pw) in &by_perm {
            if u == w || !bruhat_leq(u, w).expect("same n") {
                continue;
            }
            let diff = pw - pu;
            t.check(
                diff.has_nonnegative_coeffs() && su.is_subset(sw),
                || format!("u={u} w={w} λ={lambda}"),
                || format!("difference {diff}, pattern inclusion {}", su.is_subset(sw)),
            );
        }
    }
    t
}

fn kogan(bounds: &VerifyBounds, progress: &(dyn Fn(&str) + Sync)) -> Tally {
    (2..=bounds.max_n.max(2))
        .map(|n| {
            let t = kogan_n(n);
            progress(&format!("kogan n={n}: {} cases, {} failures", t.cases, t.failures.len()));
            t
        })
        .fold(Tally::default(), Tally::merge)
}

fn kogan_n(n: usize) -> Tally {
    let mut t = Tally::default();
    let faces = enumerate_reduced_faces(n, None);
    for f in &faces {
        let w = f.face_permutation();
        t.check(f.edges().len() + w.length() == n * (n - 1) / 2, || format!("face {:?}", f.edges()), || format!("dimension vs length of {w}"));
        for (e, dir, g) in applicable_moves(f) {
            let back = match dir {
                MoveDirection::Forward => MoveDirection::Backward,
                MoveDirection::Backward => MoveDirection::Forward,
            };
            let image = g.edges().iter().copied().find(|x| !f.edges().contains(x));
            let inverse = image.and_then(|e2| edge_move(&g, e2, back).ok());
            t.check(
                g.is_reduced() && g.face_permutation() == w && inverse.as_ref() == Some(f),
                || format!("face {:?} move {e:?} {dir:?}", f.edges()),
                || format!("gives {:?}", g.edges()),
            );
        }
    }
    for (w, group) in faces_by_permutation(n) {
        let adjusted: Vec<_> = group.iter().filter(|f| f.is_right_adjusted()).collect();
        let ra = right_adjusted_of(&w);
        t.check(
            adjusted.len() == 1 && adjusted[0] == &ra,
            || format!("right-adjusted w={w}"),
            || format!("{} right-adjusted faces", adjusted.len()),
        );
        let ep = empty_places_permutation(&ra);
        t.check(
            ep.as_ref().ok() == Some(&w),
            || format!("empty places w={w}"),
            || format!("got {ep:?}"),
        );
        // every face of w is reachable from the right-adjusted one
        let mut seen = BTreeSet::from([ra.clone()]);
        let mut stack = vec![ra];
        while let Some(f) = stack.pop() {
            for (_, _, g) in applicable_moves(&f) {
                if seen.insert(g.clone()) {
                    stack.push(g);
                }
            }
        }
        t.check(
            seen.len() == group.len(),
            || format!("move connectivity w={w}"),
            || format!("reached {} of {} faces", seen.len(), group.len()),
        );
    }
    t
}

/// A random sparse polynomial in `n` variables.
pub fn random_polynomial(rng: &mut impl Rng, n: usize) -> BetaPolynomial {
    let mut p = BetaPolynomial::zero(n);
    for _ in 0..rng.gen_range(1..=5) {
        let exps = (0..n).map(|_| rng.gen_range(0..=3)).collect();
        let c: i64 = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        p.add_term(Monomial::new(rng.gen_range(0..=2), exps), BigInt::from(c));
    }
    p
}

fn operators(bounds: &VerifyBounds) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    let max_n = bounds.max_n.clamp(2, 5);
    let mut t = Tally::default();
    for k in 0..bounds.samples {
        let n = rng.gen_range(2..=max_n);
        let p = random_polynomial(&mut rng, n);
        let q = random_polynomial(&mut rng, n);
        let case = || format!("seed={} sample={k} n={n} p={p}", bounds.seed);
        let pi = |f: &BetaPolynomial, i: usize| f.demazure_lascoux(i).expect("index in range");
        let dd = |f: &BetaPolynomial, i: usize| f.divided_difference(i).expect("index in range");
        for i in 1..n {
            let pp = pi(&p, i);
            t.check(dd(&dd(&p, i), i).is_zero(), case, || format!("∂{i}∂{i} ≠ 0"));
            t.check(pi(&pp, i) == pp, case, || format!("π{i} not idempotent"));
            t.check(pi(&(&pp - &p), i).is_zero(), case, || format!("π{i}(π{i}p − p) ≠ 0"));
            let sym = &q + &q.swap_vars(i).expect("index in range");
            t.check(
                pi(&(&sym * &p), i) == &sym * &pp,
                case,
                || format!("π{i} not linear over symmetric factor {sym}"),
            );
            for j in i + 2..n {
                t.check(pi(&pi(&p, j), i) == pi(&pp, j), case, || format!("π{i}, π{j} do not commute"));
            }
            if i + 1 < n {
                let lhs = pi(&pi(&pp, i + 1), i);
                let rhs = pi(&pi(&pi(&p, i + 1), i), i + 1);
                t.check(lhs == rhs, case, || format!("braid relation fails at {i}"));
            }
        }
    }
    t
}

/// Letters of `π_{c_k} = π_k ⋯ π_1`.
fn coxeter_letters(k: usize) -> Vec<usize> {
    (1..=k).rev().collect()
}

fn lemmas(bounds: &VerifyBounds) -> Tally {
    let mut t = Tally::default();
    for n in 2..=bounds.max_n.max(2) {
        for mu in Partition::all_bounded(n, bounds.max_part) {
            let x = BetaPolynomial::x_pow(mu.parts());
            for k in 1..n {
                let p = x.apply_word(&coxeter_letters(k)).expect("letters in range");
                t.check(p.is_multiplicity_free(), || format!("multiplicity μ={mu} k={k}"), || format!("{p}"));
            }
            if n >= 3 {
                let top = x.apply_word(&coxeter_letters(n - 1)).expect("letters in range");
                let rest = top.nonalternating_part(&mu).expect("sizes agree");
                let image = rest.apply_word(Word::w0_word_coxeter(n - 1).letters()).expect("letters in range");
                t.check(image.is_zero(), || format!("kernel λ={mu}"), || format!("image {image}"));
            }
        }
        // Lascoux polynomials of compositions against minimal permutations
        for l in Partition::all_bounded(n, bounds.max_part) {
            let mut seen = BTreeSet::new();
            for w in Permutation::all(n) {
                let alpha = w.apply_to_composition(l.parts()).expect("sizes agree");
                if !seen.insert(alpha.clone()) {
                    continue;
                }
                // Permutation::all is lexicographic, so the first w for alpha
                // is not necessarily minimal; pick the shortest explicitly.
                let w_min = Permutation::all(n)
                    .into_iter()
                    .filter(|v| v.apply_to_composition(l.parts()).ok().as_ref() == Some(&alpha))
                    .min_by_key(Permutation::length)
                    .expect("w itself qualifies");
                let a = lascoux_of_composition(&alpha);
                let b = lascoux_w_lambda(&w_min, &l).expect("sizes agree");
                t.check(a == b, || format!("composition α={alpha:?}"), || format!("{a} vs {b}"));
            }
        }
    }
    t
}
