//! Cells of the decomposition of `GZ(λ)` indexed by enhanced patterns, point
//! location, closures, cells in dual Kogan faces, tracks, and the two
//! pattern-side formulas for Lascoux polynomials.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{is_alternating, BetaPolynomial, Monomial};
use crate::enhanced::{
    enumerate_all, enumerate_efficient, flat_index, reconstruct_edges, triangle_size, EnhancedPattern, Node,
};
use crate::error::{Error, Result};
use crate::gz::{gz_contains, GZPattern, Partition, Rational, RationalPoint};
use crate::kogan::{enumerate_reduced_faces, FaceDiagram};
use crate::perm::{Permutation, Word};

pub type Coord = (usize, usize);

/// A constant or a free coordinate `y_{i,j}` with `i ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Const(i64),
    Coord(Coord),
}

impl Term {
    fn eval(&self, p: &RationalPoint) -> Rational {
        match *self {
            Term::Const(c) => Rational::from(c),
            Term::Coord((i, j)) => p.get(i, j),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Term::Const(c) => json!({ "const": c.to_string() }),
            Term::Coord((i, j)) => json!({ "coord": [i, j] }),
        }
    }
}

fn coord_name((i, j): Coord) -> String {
    if i < 10 && j < 10 {
        format!("y{i}{j}")
    } else {
        format!("y{i},{j}")
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Term::Const(c) => write!(f, "{c}"),
            Term::Coord(c) => write!(f, "{}", coord_name(c)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoordConstraint {
    EqualsCoordinate(Coord),
    EqualsConstant(i64),
    /// `max(lower) < y < min(upper)`.
    OpenInterval { lower: Vec<Term>, upper: Vec<Term> },
}

/// The system cutting out `C_P`.
///
/// `entries` is the per-coordinate display form, with refinement inequalities
/// already implied by the interval bounds removed. `contains` evaluates the
/// unreduced system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellConstraints {
    n: usize,
    entries: Vec<(Coord, CoordConstraint)>,
    equalities: Vec<(Coord, Term)>,
    strict: Vec<(Term, Term)>,
}

impl CellConstraints {
    pub fn entries(&self) -> &[(Coord, CoordConstraint)] {
        &self.entries
    }

    pub fn get(&self, c: Coord) -> Option<&CoordConstraint> {
        self.entries.iter().find(|(k, _)| *k == c).map(|(_, v)| v)
    }

    /// Exact membership of `p` in the cell.
    pub fn contains(&self, p: &RationalPoint) -> bool {
        p.n() == self.n
            && self.equalities.iter().all(|(c, t)| p.get(c.0, c.1) == t.eval(p))
            && self.strict.iter().all(|(a, b)| a.eval(p) < b.eval(p))
    }

    /// Membership in the closure: the same system with every strict
    /// inequality relaxed.
    pub fn closure_contains(&self, p: &RationalPoint) -> bool {
        p.n() == self.n
            && self.equalities.iter().all(|(c, t)| p.get(c.0, c.1) == t.eval(p))
            && self.strict.iter().all(|(a, b)| a.eval(p) <= b.eval(p))
    }

    /// Number of free coordinates, i.e. the dimension of the cell.
    pub fn dimension(&self) -> usize {
        self.entries.iter().filter(|(_, c)| matches!(c, CoordConstraint::OpenInterval { .. })).count()
    }

    pub fn to_json(&self) -> Value {
        let items: Vec<Value> = self
            .entries
            .iter()
            .map(|(c, k)| match k {
                CoordConstraint::EqualsCoordinate(t) => {
                    json!({ "coord": [c.0, c.1], "kind": "eq-coord", "value": [t.0, t.1] })
                }
                CoordConstraint::EqualsConstant(v) => {
                    json!({ "coord": [c.0, c.1], "kind": "eq-const", "value": v.to_string() })
                }
                CoordConstraint::OpenInterval { lower, upper } => json!({
                    "coord": [c.0, c.1],
                    "kind": "interval",
                    "lower": lower.iter().map(Term::to_json).collect::<Vec<_>>(),
                    "upper": upper.iter().map(Term::to_json).collect::<Vec<_>>(),
                }),
            })
            .collect();
        Value::Array(items)
    }
}

fn bound_list(name: &str, terms: &[Term]) -> String {
    let parts: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
    if parts.len() == 1 {
        parts[0].clone()
    } else {
        format!("{name}({})", parts.join(", "))
    }
}

impl fmt::Display for CellConstraints {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .entries
            .iter()
            .map(|&(c, ref k)| match k {
                CoordConstraint::EqualsCoordinate(t) => format!("{} = {}", coord_name(c), coord_name(*t)),
                CoordConstraint::EqualsConstant(v) => format!("{} = {v}", coord_name(c)),
                CoordConstraint::OpenInterval { lower, upper } => format!(
                    "{} < {} < {}",
                    bound_list("max", lower),
                    coord_name(c),
                    bound_list("min", upper)
                ),
            })
            .collect();
        write!(f, "{}", lines.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ClassVal {
    Const(i64),
    /// Free class, identified by its uncircled top entry.
    Var(Coord),
}

/// Value of each edge class: constant unless it has an uncircled member.
struct Classes {
    n: usize,
    root: Vec<usize>,
    val: BTreeMap<usize, ClassVal>,
}

impl Classes {
    fn new(p: &EnhancedPattern) -> Self {
        let n = p.n();
        let mut uf = p.edge_classes();
        let root: Vec<usize> = (0..triangle_size(n)).map(|k| uf.find(k)).collect();
        let mut val = BTreeMap::new();
        for i in 0..n {
            for j in 1..=n - i {
                let r = root[flat_index(n, i, j)];
                if i > 0 && !p.is_circled(i, j) {
                    val.insert(r, ClassVal::Var((i, j)));
                } else {
                    val.entry(r).or_insert(ClassVal::Const(p.value(i, j)));
                }
            }
        }
        Classes { n, root, val }
    }

    fn of(&self, (i, j): Coord) -> ClassVal {
        self.val[&self.root[flat_index(self.n, i, j)]]
    }
}

/// Row-0 coordinates become constants.
fn pos_term(p: &EnhancedPattern, (i, j): Coord) -> Term {
    if i == 0 {
        Term::Const(p.value(0, j))
    } else {
        Term::Coord((i, j))
    }
}

/// The constraint system of `C_P`: per-coordinate equalities and open
/// intervals, refined by the strict versions of the polytope inequalities
/// that are not identities on the affine span.
pub fn cell_constraints(p: &EnhancedPattern, lambda: &Partition) -> Result<CellConstraints> {
    let n = p.n();
    if lambda.n() != n || p.base().lambda() != *lambda {
        return Err(Error::Shape(format!("pattern {p} does not have top row {lambda}")));
    }
    let classes = Classes::new(p);
    let mut entries: Vec<(Coord, CoordConstraint)> = Vec::new();
    let mut equalities = Vec::new();
    let mut strict = Vec::new();

    for (i, j) in p.positions() {
        let node = p.node(i, j);
        let a = p.value(i, j);
        let (tl, tr) = ((i - 1, j), (i - 1, j + 1));
        let mut eqs = Vec::new();
        if node.left {
            eqs.push(pos_term(p, tl));
        }
        if node.right {
            eqs.push(pos_term(p, tr));
        }
        let entry = if let Some(first) = eqs.first() {
            match first {
                Term::Const(c) => CoordConstraint::EqualsConstant(*c),
                Term::Coord(c) => CoordConstraint::EqualsCoordinate(*c),
            }
        } else if node.circled {
            eqs.push(Term::Const(a));
            CoordConstraint::EqualsConstant(a)
        } else {
            let lower = if a - p.value(tl.0, tl.1) >= 2 { Term::Const(a - 1) } else { pos_term(p, tl) };
            let upper = if p.value(tr.0, tr.1) == a { pos_term(p, tr) } else { Term::Const(a) };
            strict.push((lower.clone(), Term::Coord((i, j))));
            strict.push((Term::Coord((i, j)), upper.clone()));
            CoordConstraint::OpenInterval { lower: vec![lower], upper: vec![upper] }
        };
        for t in eqs {
            equalities.push(((i, j), t));
        }
        entries.push(((i, j), entry));
    }

    // constant bounds of a class implied by its own interval
    let interval_of = |entries: &[(Coord, CoordConstraint)], c: Coord| -> (Vec<Term>, Vec<Term>) {
        match entries.iter().find(|(k, _)| *k == c).map(|(_, v)| v) {
            Some(CoordConstraint::OpenInterval { lower, upper }) => (lower.clone(), upper.clone()),
            _ => (vec![], vec![]),
        }
    };
    let const_of = |t: &Term| match t {
        Term::Const(c) => Some(*c),
        Term::Coord(c) => match classes.of(*c) {
            ClassVal::Const(v) => Some(v),
            ClassVal::Var(_) => None,
        },
    };
    let class_of_term = |t: &Term| match t {
        Term::Const(c) => ClassVal::Const(*c),
        Term::Coord(c) => classes.of(*c),
    };

    for (i, j) in p.positions() {
        for (upper_pos, x_is_hi) in [((i - 1, j), true), ((i - 1, j + 1), false)] {
            let x = (i, j);
            let (xv, tv) = (classes.of(x), classes.of(upper_pos));
            let trivial = match (xv, tv) {
                (ClassVal::Var(a), ClassVal::Var(b)) => a == b,
                (ClassVal::Const(_), ClassVal::Const(_)) => true,
                _ => false,
            };
            if trivial {
                continue;
            }
            let t_term = pos_term(p, upper_pos);
            let x_term = Term::Coord(x);
            let (lo, hi) = if x_is_hi { (t_term.clone(), x_term.clone()) } else { (x_term.clone(), t_term.clone()) };
            strict.push((lo.clone(), hi.clone()));

            // implied by the interval of the lower side's upper bound and the
            // higher side's lower bound
            let (lo_cls, hi_cls) = (class_of_term(&lo), class_of_term(&hi));
            let ub_lo: Vec<Term> = match lo_cls {
                ClassVal::Const(c) => vec![Term::Const(c)],
                ClassVal::Var(r) => interval_of(&entries, r).1,
            };
            let lb_hi: Vec<Term> = match hi_cls {
                ClassVal::Const(c) => vec![Term::Const(c)],
                ClassVal::Var(r) => interval_of(&entries, r).0,
            };
            let implied = ub_lo.iter().any(|u| {
                lb_hi.iter().any(|l| match (const_of(u), const_of(l)) {
                    (Some(u), Some(l)) => u <= l,
                    _ => false,
                })
            }) || lb_hi.iter().any(|l| class_of_term(l) == lo_cls)
                || ub_lo.iter().any(|u| class_of_term(u) == hi_cls);
            if implied {
                continue;
            }

            // attach to an uncircled entry, preferring the lower one
            let x_free = !p.is_circled(i, j);
            let t_free = upper_pos.0 > 0 && !p.is_circled(upper_pos.0, upper_pos.1);
            let (target, other, target_is_lo) = if x_free {
                (x, t_term, !x_is_hi)
            } else if t_free {
                (upper_pos, x_term, x_is_hi)
            } else if let ClassVal::Var(r) = xv {
                (r, t_term, !x_is_hi)
            } else if let ClassVal::Var(r) = tv {
                (r, x_term, x_is_hi)
            } else {
                unreachable!("nontrivial inequality has a free side")
            };
            if let Some((_, CoordConstraint::OpenInterval { lower, upper })) =
                entries.iter_mut().find(|(k, _)| *k == target)
            {
                let list = if target_is_lo { upper } else { lower };
                if !list.contains(&other) {
                    list.push(other);
                }
            }
        }
    }
    Ok(CellConstraints { n, entries, equalities, strict })
}

fn check_point(lambda: &Partition, pt: &RationalPoint) -> Result<()> {
    if !gz_contains(lambda, pt)? {
        return Err(Error::PointOutside);
    }
    Ok(())
}

/// Exact membership of `pt` in `C_P`.
pub fn cell_contains(p: &EnhancedPattern, lambda: &Partition, pt: &RationalPoint) -> Result<bool> {
    if pt.n() != p.n() {
        return Err(Error::DimensionMismatch(p.n(), pt.n()));
    }
    Ok(cell_constraints(p, lambda)?.contains(pt))
}

/// The pattern whose cell contains `pt`.
///
/// Equal neighbours are joined and circled. Otherwise, row by row: an
/// integer `y ≥ a_{i−1,j} + 1` is circled with `a = y`; `y < a_{i−1,j} + 1`
/// gives the uncircled value `min(a_{i−1,j} + 1, a_{i−1,j+1})`; any other
/// `y` gives the uncircled value `⌈y⌉`.
pub fn point_to_pattern(lambda: &Partition, pt: &RationalPoint) -> Result<EnhancedPattern> {
    check_point(lambda, pt)?;
    let n = lambda.n();
    let y = pt.full_rows(lambda);
    let mut a: Vec<Vec<i64>> = vec![lambda.top_row()];
    let mut nodes: Vec<Vec<Node>> = vec![vec![Node { circled: true, left: false, right: false }; n]];
    for i in 1..n {
        let mut row = Vec::with_capacity(n - i);
        let mut nrow = Vec::with_capacity(n - i);
        for k in 0..n - i {
            let v = y[i][k];
            let (ytl, ytr) = (y[i - 1][k], y[i - 1][k + 1]);
            let (atl, atr) = (a[i - 1][k], a[i - 1][k + 1]);
            let left = v == ytl;
            let right = v == ytr;
            let (val, node) = if left || right {
                (if left { atl } else { atr }, Node { circled: true, left, right })
            } else if v.is_integer() && Rational::from(atl + 1) <= v {
                (v.to_integer(), Node { circled: true, left: false, right: false })
            } else if v < Rational::from(atl + 1) {
                ((atl + 1).min(atr), Node::default())
            } else {
                (v.ceil().to_integer(), Node::default())
            };
            row.push(val);
            nrow.push(node);
        }
        a.push(row);
        nodes.push(nrow);
    }
    let base = GZPattern::new(a).map_err(|e| Error::Precondition(format!("point location produced {e}")))?;
    let p = EnhancedPattern::from_nodes(base, nodes);
    debug_assert!(p.is_valid(), "{p}: {:?}", p.validate());
    Ok(p)
}

/// Every `Q ∈ 𝒫(λ)` whose closed cell contains `pt`.
///
/// Row-major search over values and states; each coordinate is checked
/// against the closed constraint of its own state, the rest by `validate`.
pub fn closure_patterns(lambda: &Partition, pt: &RationalPoint) -> Result<Vec<EnhancedPattern>> {
    check_point(lambda, pt)?;
    let n = lambda.n();
    let y = pt.full_rows(lambda);
    let positions: Vec<Coord> = (1..n).flat_map(|i| (1..=n - i).map(move |j| (i, j))).collect();
    let mut a: Vec<Vec<i64>> = (0..n).map(|i| vec![0; n - i]).collect();
    a[0] = lambda.top_row();
    let mut nodes: Vec<Vec<Node>> =
        (0..n).map(|i| vec![Node { circled: i == 0, left: false, right: false }; n - i]).collect();
    let mut out = Vec::new();

    struct Ctx<'a> {
        y: &'a [Vec<Rational>],
        positions: &'a [Coord],
    }
    fn rec(ctx: &Ctx, k: usize, a: &mut Vec<Vec<i64>>, nodes: &mut Vec<Vec<Node>>, out: &mut Vec<EnhancedPattern>) {
        if k == ctx.positions.len() {
            let p = EnhancedPattern::from_nodes(GZPattern::from_rows_unchecked(a.clone()), nodes.clone());
            if p.is_valid() {
                out.push(p);
            }
            return;
        }
        let (i, j) = ctx.positions[k];
        let (c, v) = (j - 1, ctx.y[i][j - 1]);
        let (atl, atr) = (a[i - 1][c], a[i - 1][c + 1]);
        let (ytl, ytr) = (ctx.y[i - 1][c], ctx.y[i - 1][c + 1]);
        for val in atl..=atr {
            for &s in crate::enhanced::local_states(i, atl, val, atr) {
                let ok = if s.left || s.right {
                    (!s.left || v == ytl) && (!s.right || v == ytr)
                } else if s.circled {
                    v == Rational::from(val)
                } else {
                    let lo = if val - atl >= 2 { Rational::from(val - 1) } else { ytl };
                    let hi = if atr == val { ytr } else { Rational::from(val) };
                    lo <= v && v <= hi
                };
                if ok {
                    a[i][c] = val;
                    nodes[i][c] = s;
                    rec(ctx, k + 1, a, nodes, out);
                }
            }
        }
        nodes[i][c] = Node::default();
    }
    rec(&Ctx { y: &y, positions: &positions }, 0, &mut a, &mut nodes, &mut out);
    out.sort();
    Ok(out)
}

/// Whether every edge equality of `f` holds on all of `C_P`.
pub fn cell_in_face(p: &EnhancedPattern, f: &FaceDiagram, lambda: &Partition) -> Result<bool> {
    if f.n() != p.n() || lambda.n() != p.n() {
        return Err(Error::DimensionMismatch(p.n(), f.n()));
    }
    let classes = Classes::new(p);
    Ok(f.edges().iter().all(|&(i, j)| {
        let (x, t) = (classes.of((i, j)), classes.of((i - 1, j + 1)));
        x == t
    }))
}

/// `𝒫⁺(w, λ)`: efficient patterns whose cell lies in some reduced face with `w(F) = w`.
pub fn patterns_for_perm(w: &Permutation, lambda: &Partition) -> Result<Vec<EnhancedPattern>> {
    if w.n() != lambda.n() {
        return Err(Error::DimensionMismatch(w.n(), lambda.n()));
    }
    let faces = enumerate_reduced_faces(w.n(), Some(w));
    Ok(filter_in_faces(enumerate_efficient(lambda), &faces, lambda))
}

pub(crate) fn filter_in_faces(
    pats: Vec<EnhancedPattern>,
    faces: &[FaceDiagram],
    lambda: &Partition,
) -> Vec<EnhancedPattern> {
    pats.into_iter()
        .filter(|p| faces.iter().any(|f| cell_in_face(p, f, lambda).expect("shapes agree")))
        .collect()
}

pub(crate) fn sum_monomials<'a>(n: usize, pats: impl IntoIterator<Item = &'a EnhancedPattern>) -> BetaPolynomial {
    let mut out = BetaPolynomial::zero(n);
    for p in pats {
        if let Some(m) = p.monomial_term() {
            out.add_term(m, BigInt::one());
        }
    }
    out
}

/// `Σ_{P ∈ 𝒫⁺(w,λ)} x^P`.
pub fn lascoux_via_cells(w: &Permutation, lambda: &Partition) -> Result<BetaPolynomial> {
    Ok(sum_monomials(lambda.n(), &patterns_for_perm(w, lambda)?))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TrackStep {
    /// Stage `i` applies `π_1, …, π_{n−i}`.
    pub stage: usize,
    pub generator: usize,
    pub monomial: Monomial,
}

/// A chain of monomials, each a summand of `π` applied to the previous one,
/// along `π_1 ⋯ π_{n−1}`, then `π_1 ⋯ π_{n−2}`, …, then `π_1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Track {
    pub start: Monomial,
    pub steps: Vec<TrackStep>,
}

impl Track {
    pub fn end(&self) -> &Monomial {
        self.steps.last().map_or(&self.start, |s| &s.monomial)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "start": self.start.term_json(&BigInt::one()),
            "steps": self.steps.iter().map(|s| json!({
                "stage": s.stage,
                "generator": s.generator,
                "monomial": s.monomial.term_json(&BigInt::one()),
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Track {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start)?;
        for s in &self.steps {
            write!(f, " -{}-> {}", s.generator, s.monomial)?;
        }
        Ok(())
    }
}

/// All tracks of `x^λ`. A track survives a stage only if the first `n−i`
/// exponents interlace the first `n−i+1` exponents at the start of stage `i`.
pub fn enumerate_tracks(lambda: &Partition) -> Vec<Track> {
    let n = lambda.n();
    let start = Monomial::new(0, lambda.parts().to_vec());
    let mut out = Vec::new();
    fn rec(n: usize, stage: usize, k: usize, stage_start: &Monomial, steps: &mut Vec<TrackStep>, start: &Monomial, out: &mut Vec<Track>) {
        if stage >= n {
            out.push(Track { start: start.clone(), steps: steps.clone() });
            return;
        }
        let cur = steps.last().map_or(start, |s| &s.monomial).clone();
        if k > n - stage {
            let m = n - stage + 1;
            if is_alternating(&cur.exps[..m], &stage_start.exps[..m]) {
                rec(n, stage + 1, 1, &cur, steps, start, out);
            }
            return;
        }
        let image = BetaPolynomial::monomial(cur).demazure_lascoux(k).expect("generator in range");
        for (m, _) in image.terms() {
            steps.push(TrackStep { stage, generator: k, monomial: m.clone() });
            rec(n, stage, k + 1, stage_start, steps, start, out);
            steps.pop();
        }
    }
    if n <= 1 {
        return vec![Track { start, steps: vec![] }];
    }
    rec(n, 1, 1, &start.clone(), &mut Vec::new(), &start, &mut out);
    out
}

/// The efficient pattern of a track: row `i` holds the first `n−i` exponents
/// after stage `i` in increasing order; step `k` of stage `i` circles entry
/// `(i, n−i−k+1)` when it keeps the `β`-degree.
pub fn track_to_pattern(t: &Track, lambda: &Partition) -> Result<EnhancedPattern> {
    let n = lambda.n();
    let expected: Vec<(usize, usize)> = (1..n).flat_map(|i| (1..=n - i).map(move |k| (i, k))).collect();
    let shape: Vec<(usize, usize)> = t.steps.iter().map(|s| (s.stage, s.generator)).collect();
    if shape != expected || t.start.exps != lambda.parts() {
        return Err(Error::Precondition("track does not follow the stages of x^λ".into()));
    }
    let mut rows = vec![lambda.top_row()];
    let mut circled = Vec::new();
    let mut prev = &t.start;
    for i in 1..n {
        for s in t.steps.iter().filter(|s| s.stage == i) {
            if s.monomial.beta_deg == prev.beta_deg {
                circled.push((i, n - i - s.generator + 1));
            }
            prev = &s.monomial;
        }
        let mut row: Vec<i64> = prev.exps[..n - i].iter().map(|&e| e as i64).collect();
        row.sort_unstable();
        rows.push(row);
    }
    let base = GZPattern::new(rows)?;
    reconstruct_edges(&base, &circled)
}

/// Outcome of the exhaustive grid check of the decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellularReport {
    pub lambda: Partition,
    pub denominator: i64,
    pub points: usize,
    pub cells: usize,
    pub integer_points: usize,
    pub rank_zero_cells: usize,
    pub euler: i64,
    pub failures: Vec<String>,
}

impl CellularReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Points of `GZ(λ)` whose coordinates are multiples of `1/d`.
pub fn grid_points(lambda: &Partition, d: i64) -> Vec<RationalPoint> {
    let n = lambda.n();
    let top: Vec<i64> = lambda.top_row().iter().map(|v| v * d).collect();
    let mut out = Vec::new();
    fn rec(n: usize, d: i64, rows: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>, out: &mut Vec<RationalPoint>) {
        let i = rows.len();
        if i == n {
            let pr = rows[1..].iter().map(|r| r.iter().map(|&v| Rational::new(v, d)).collect()).collect();
            out.push(RationalPoint::new(n, pr).expect("triangular"));
            return;
        }
        if cur.len() == n - i {
            rows.push(std::mem::take(cur));
            rec(n, d, rows, &mut Vec::new(), out);
            *cur = rows.pop().unwrap();
            return;
        }
        let j = cur.len();
        for v in rows[i - 1][j]..=rows[i - 1][j + 1] {
            cur.push(v);
            rec(n, d, rows, cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        return out;
    }
    rec(n, d, &mut vec![top], &mut Vec::new(), &mut out);
    out
}

/// Checks on every grid point that exactly one cell contains it, that it is
/// the located one, and that the closed cells through it are the located
/// cell plus cells of larger rank. Also checks 0-cells against integer
/// points and the Euler characteristic.
pub fn verify_cellular(lambda: &Partition, denominator: i64) -> CellularReport {
    let all = enumerate_all(lambda);
    let systems: Vec<CellConstraints> =
        all.iter().map(|p| cell_constraints(p, lambda).expect("enumerated patterns match λ")).collect();
    let points = grid_points(lambda, denominator.max(1));
    let mut failures: Vec<String> = points
        .par_iter()
        .flat_map_iter(|pt| {
            let mut fails = Vec::new();
            let hits: Vec<usize> = (0..all.len()).filter(|&k| systems[k].contains(pt)).collect();
            let located = point_to_pattern(lambda, pt);
            match (&located, hits.as_slice()) {
                (Ok(p), [k]) if &all[*k] == p => {}
                (Ok(p), _) => fails.push(format!(
                    "λ={lambda} point [{pt}]: located {p}, containing cells {:?}",
                    hits.iter().map(|&k| all[k].to_string()).collect::<Vec<_>>()
                )),
                (Err(e), _) => fails.push(format!("λ={lambda} point [{pt}]: {e}")),
            }
            if let Ok(p) = &located {
                match closure_patterns(lambda, pt) {
                    Ok(cl) => {
                        let oracle: Vec<&EnhancedPattern> =
                            (0..all.len()).filter(|&k| systems[k].closure_contains(pt)).map(|k| &all[k]).collect();
                        let mut oracle_sorted = oracle.clone();
                        oracle_sorted.sort();
                        if cl.iter().collect::<Vec<_>>() != oracle_sorted {
                            fails.push(format!("λ={lambda} point [{pt}]: closure search disagrees with closed systems"));
                        }
                        if !cl.contains(p) || cl.iter().any(|q| q != p && q.rank() <= p.rank()) {
                            fails.push(format!("λ={lambda} point [{pt}]: closure ranks not above {p}"));
                        }
                    }
                    Err(e) => fails.push(format!("λ={lambda} point [{pt}]: {e}")),
                }
            }
            fails
        })
        .collect();

    let integer: BTreeSet<GZPattern> = crate::gz::enumerate_gz_patterns(lambda).into_iter().collect();
    let rank0: Vec<&EnhancedPattern> = all.iter().filter(|p| p.rank() == 0).collect();
    let rank0_bases: BTreeSet<GZPattern> = rank0.iter().map(|p| p.base().clone()).collect();
    if rank0.len() != integer.len() || rank0_bases != integer {
        failures.push(format!("λ={lambda}: {} rank-0 cells for {} integer points", rank0.len(), integer.len()));
    }
    for (k, p) in all.iter().enumerate() {
        if p.rank() == 0 && !systems[k].contains(&RationalPoint::from_pattern(p.base())) {
            failures.push(format!("λ={lambda}: 0-cell {p} misses its point"));
        }
        if systems[k].dimension() != p.rank() {
            failures.push(format!("λ={lambda}: cell {p} has dimension {} but rank {}", systems[k].dimension(), p.rank()));
        }
    }
    let euler = euler_characteristic_of(&all);
    if euler != 1 {
        failures.push(format!("λ={lambda}: Euler characteristic {euler}"));
    }
    CellularReport {
        lambda: lambda.clone(),
        denominator,
        points: points.len(),
        cells: all.len(),
        integer_points: integer.len(),
        rank_zero_cells: rank0.len(),
        euler,
        failures,
    }
}

fn euler_characteristic_of(all: &[EnhancedPattern]) -> i64 {
    all.iter().map(|p| if p.rank() % 2 == 0 { 1 } else { -1 }).sum()
}

/// `Σ_{P ∈ 𝒫(λ)} (−1)^{rk P}`.
pub fn euler_characteristic(lambda: &Partition) -> i64 {
    euler_characteristic_of(&enumerate_all(lambda))
}

/// The word along which tracks run.
pub fn track_word(n: usize) -> Word {
    Word::w0_word_coxeter(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lascoux_w_lambda;
    use crate::enhanced::{grothendieck_via_patterns, Direction};
    use num_traits::Zero;

    fn lam(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn base(rows: &[&[i64]]) -> GZPattern {
        GZPattern::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn four_row_pattern() -> EnhancedPattern {
        let b = base(&[&[1, 3, 7, 9], &[3, 4, 9], &[3, 5], &[4]]);
        EnhancedPattern::new(b, [(1, 3), (2, 1)], [((1, 3), Direction::Right), ((2, 1), Direction::Left)]).unwrap()
    }

    fn pt(n: usize, s: &str) -> RationalPoint {
        RationalPoint::parse(n, s).unwrap()
    }

    #[test]
    fn four_row_cell_constraints() {
        let l = lam(&[9, 7, 3, 1]);
        let c = cell_constraints(&four_row_pattern(), &l).unwrap();
        assert_eq!(
            c.to_string(),
            "2 < y11 < 3, 3 < y12 < 4, y13 = 9, y21 = y11, y12 < y22 < 5, y21 < y31 < min(4, y22)"
        );
        assert_eq!(c.dimension(), 4);
        let p = pt(4, "5/2, 31/10, 9; 5/2, 19/5; 37/10");
        assert!(c.contains(&p));
        assert!(!c.contains(&pt(4, "2,3,9;2,3;4")));
        assert!(c.closure_contains(&pt(4, "3,4,9;3,4;4")));
    }

    #[test]
    fn four_row_point_locates() {
        let l = lam(&[9, 7, 3, 1]);
        let p = pt(4, "2.5, 3.1, 9; 2.5, 3.8; 3.7");
        assert_eq!(point_to_pattern(&l, &p).unwrap(), four_row_pattern());
        assert!(cell_contains(&four_row_pattern(), &l, &p).unwrap());
        assert_eq!(point_to_pattern(&l, &pt(4, "2,3,9;2,3;4")), Err(Error::PointOutside));
    }

    #[test]
    fn segment_cells() {
        let l = lam(&[1, 0]);
        let half = pt(2, "1/2");
        let p = point_to_pattern(&l, &half).unwrap();
        assert_eq!(p.rank(), 1);
        assert_eq!(cell_constraints(&p, &l).unwrap().to_string(), "0 < y11 < 1");
        assert_eq!(closure_patterns(&l, &half).unwrap(), vec![p.clone()]);
        let one = closure_patterns(&l, &pt(2, "1")).unwrap();
        assert_eq!(one.len(), 2);
        assert!(one.contains(&p));
        assert!(!cell_in_face(&p, &FaceDiagram::full(2), &l).unwrap());
        let rep = verify_cellular(&l, 4);
        assert!(rep.ok(), "{:?}", rep.failures);
        assert_eq!(rep.points, 5);
        for (s, rank) in [("0", 0), ("1/4", 1), ("1/2", 1), ("3/4", 1), ("1", 0)] {
            assert_eq!(point_to_pattern(&l, &pt(2, s)).unwrap().rank(), rank);
        }
        assert_eq!(euler_characteristic(&l), 1);
    }

    #[test]
    fn integer_points_give_rank_zero() {
        let l = lam(&[3, 2, 0]);
        for z in crate::gz::enumerate_gz_patterns(&l) {
            let p = point_to_pattern(&l, &RationalPoint::from_pattern(&z)).unwrap();
            assert_eq!(p.rank(), 0);
            assert_eq!(p.base(), &z);
            let c = cell_constraints(&p, &l).unwrap();
            assert!(c.entries().iter().all(|(_, k)| !matches!(k, CoordConstraint::OpenInterval { .. })));
        }
    }

    #[test]
    fn cellular_small() {
        for l in [lam(&[2, 1, 0]), lam(&[3, 2, 0]), lam(&[2, 2, 0]), lam(&[1, 1, 0]), lam(&[2, 0, 0])] {
            for d in 1..=3 {
                let rep = verify_cellular(&l, d);
                assert!(rep.ok(), "{l} d={d}: {:?}", &rep.failures[..rep.failures.len().min(5)]);
            }
        }
    }

    #[test]
    fn four_rows_partition_but_closure_meets_equal_rank() {
        let l = lam(&[2, 1, 0, 0]);
        let rep = verify_cellular(&l, 2);
        assert!(!rep.failures.is_empty());
        assert!(rep.failures.iter().all(|f| f.contains("closure ranks")), "{:?}", rep.failures);
        // y31 = 1 < y22 has y22 = y31 = 1 in its closure, inside the cell y31 = y22
        let pt = pt(4, "0,1/2,2;0,1;1");
        let p = point_to_pattern(&l, &pt).unwrap();
        let q = closure_patterns(&l, &pt).unwrap().into_iter().find(|q| q != &p && q.rank() == p.rank()).unwrap();
        assert_eq!(q.value(3, 1), 1);
        assert!(q.is_circled(3, 1) && q.edges().iter().all(|(pos, _)| *pos != (3, 1)));
    }

    #[test]
    fn face_containment() {
        let l = lam(&[3, 2, 0]);
        let top = point_to_pattern(&l, &pt(3, "2,3;3")).unwrap();
        for f in enumerate_reduced_faces(3, None) {
            assert!(cell_in_face(&top, &f, &l).unwrap());
        }
        for p in enumerate_all(&l) {
            assert!(cell_in_face(&p, &FaceDiagram::empty(3), &l).unwrap());
        }
    }

    #[test]
    fn lascoux_small() {
        let l = lam(&[3, 2, 0]);
        let id = patterns_for_perm(&Permutation::identity(3), &l).unwrap();
        assert_eq!(id.len(), 1);
        assert_eq!(sum_monomials(3, &id), BetaPolynomial::x_pow(&[3, 2, 0]));
        let s1 = patterns_for_perm(&Permutation::simple(3, 1).unwrap(), &l).unwrap();
        assert_eq!(s1.len(), 3);
        assert_eq!(
            patterns_for_perm(&Permutation::longest(3), &l).unwrap(),
            enumerate_efficient(&l)
        );
        for l in Partition::all_bounded(3, 3) {
            for w in Permutation::all(3) {
                assert_eq!(lascoux_via_cells(&w, &l).unwrap(), lascoux_w_lambda(&w, &l).unwrap(), "w={w} λ={l}");
            }
        }
    }

    #[test]
    fn track_for_210() {
        let l = lam(&[2, 1, 0]);
        let tracks = enumerate_tracks(&l);
        let want = [
            Monomial::new(1, vec![2, 2, 0]),
            Monomial::new(2, vec![2, 1, 2]),
            Monomial::new(2, vec![2, 1, 2]),
        ];
        let t = tracks
            .iter()
            .find(|t| t.steps.iter().map(|s| s.monomial.clone()).collect::<Vec<_>>() == want)
            .expect("track x1^2x2, b x1^2x2^2, b^2 x1^2x2x3^2");
        let p = track_to_pattern(t, &l).unwrap();
        assert_eq!(p.base().rows(), &[vec![0, 1, 2], vec![1, 2], vec![2]]);
        assert_eq!(p.circled(), vec![(2, 1)]);
        assert_eq!(p.rank(), 2);
        assert_eq!(p.monomial_term(), Some(Monomial::new(2, vec![2, 1, 2])));
    }

    #[test]
    fn tracks_biject_with_efficient_patterns() {
        assert_eq!(enumerate_tracks(&lam(&[0, 0, 0])).len(), 1);
        for n in 1..=3 {
            for l in Partition::all_bounded(n, 3) {
                let tracks = enumerate_tracks(&l);
                let pats: BTreeSet<EnhancedPattern> =
                    tracks.iter().map(|t| track_to_pattern(t, &l).unwrap()).collect();
                assert_eq!(pats.len(), tracks.len(), "λ={l}");
                let eff: BTreeSet<EnhancedPattern> = enumerate_efficient(&l).into_iter().collect();
                assert_eq!(pats, eff, "λ={l}");
                let mut sum = BetaPolynomial::zero(n);
                for t in &tracks {
                    sum.add_term(t.end().clone(), BigInt::one());
                }
                assert_eq!(sum, grothendieck_via_patterns(&l));
            }
        }
    }

    #[test]
    fn max_vertex_track() {
        let l = lam(&[3, 2, 0]);
        let tracks = enumerate_tracks(&l);
        let flat = tracks
            .iter()
            .find(|t| t.steps.iter().all(|s| s.monomial.exps == vec![3, 2, 0] && s.monomial.beta_deg == 0))
            .unwrap();
        let p = track_to_pattern(flat, &l).unwrap();
        assert_eq!(p.rank(), 0);
        assert_eq!(p.base().rows(), &[vec![0, 2, 3], vec![2, 3], vec![3]]);
        assert!(BetaPolynomial::x_pow(&[1]).specialize_beta(&BigInt::zero()).len() == 1);
    }
}
