//! Dual Kogan faces of Gelfand-Zetlin polytopes.
//!
//! An edge at `(i, j)` (`1 ≤ i ≤ n−1`, `1 ≤ j ≤ n−i`) imposes
//! `y_{i,j} = y_{i−1,j+1}` and carries the label `s_{n−j}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde_json::{json, Value};

use crate::algebra::BetaPolynomial;
use crate::error::{Error, Result};
use crate::gz::{character_of_points, enumerate_gz_patterns, GZPattern, Partition};
use crate::perm::{Permutation, Word};

pub type Position = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceDiagram {
    n: usize,
    edges: BTreeSet<Position>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveDirection {
    /// From diagonal `i + j = D` to `D + 1`.
    Forward,
    /// From diagonal `D + 1` back to `D`.
    Backward,
}

fn in_range(n: usize, (i, j): Position) -> bool {
    i >= 1 && i < n && j >= 1 && j <= n - i
}

impl FaceDiagram {
    pub fn new<I: IntoIterator<Item = Position>>(n: usize, edges: I) -> Result<Self> {
        let edges: BTreeSet<Position> = edges.into_iter().collect();
        if let Some(&bad) = edges.iter().find(|&&e| !in_range(n, e)) {
            return Err(Error::Shape(format!("edge position {bad:?} outside the diagram for n = {n}")));
        }
        Ok(FaceDiagram { n, edges })
    }

    pub fn empty(n: usize) -> Self {
        FaceDiagram { n, edges: BTreeSet::new() }
    }

    pub fn full(n: usize) -> Self {
        FaceDiagram { n, edges: all_places(n).into_iter().collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<Position> {
        &self.edges
    }

    pub fn has_edge(&self, e: Position) -> bool {
        self.edges.contains(&e)
    }

    /// `w⁻(F)`: rows `n−1` down to 1, right to left within a row.
    pub fn face_word(&self) -> Word {
        let letters = reading_order(self.n)
            .into_iter()
            .filter(|e| self.edges.contains(e))
            .map(|(_, j)| self.n - j)
            .collect();
        Word::new(letters).expect("labels are positive")
    }

    pub fn is_reduced(&self) -> bool {
        self.face_word().is_reduced(self.n)
    }

    /// `w(F) = w0 ∘ w⁻(F)`. Computed for non-reduced faces too.
    pub fn face_permutation(&self) -> Permutation {
        let prod = self.face_word().product(self.n).expect("labels are in range");
        Permutation::longest(self.n).compose(&prod).expect("same n")
    }

    /// Every row's edges form a run ending at `j = n − i`.
    pub fn is_right_adjusted(&self) -> bool {
        (1..self.n).all(|i| {
            let k = self.edges.iter().filter(|e| e.0 == i).count();
            (self.n - i + 1 - k..=self.n - i).all(|j| self.edges.contains(&(i, j)))
        })
    }

    pub fn to_json(&self) -> Value {
        json!({ "n": self.n, "edges": self.edges.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>() })
    }

    /// Dots for entries, `/` for each edge to the upper-right neighbour.
    pub fn render_ascii(&self) -> String {
        let n = self.n;
        let mut lines = Vec::new();
        for i in 0..n {
            if i > 0 {
                let mut line = vec![' '; 2 * i + 4 * (n - i)];
                for j in 1..=n - i {
                    if self.edges.contains(&(i, j)) {
                        line[2 * i + 4 * (j - 1) + 1] = '/';
                    }
                }
                lines.push(line.into_iter().collect::<String>().trim_end().to_string());
            }
            let mut line = " ".repeat(2 * i);
            line.push_str(&vec!["o"; n - i].join("   "));
            lines.push(line);
        }
        lines.join("\n")
    }
}

impl fmt::Display for FaceDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.edges.iter().map(|(i, j)| format!("({i},{j})")).collect();
        write!(f, "{{{}}}", e.join(","))
    }
}

fn all_places(n: usize) -> Vec<Position> {
    (1..n).flat_map(|i| (1..=n - i).map(move |j| (i, j))).collect()
}

/// Places in reading order: rows `n−1` down to 1, `j` descending.
fn reading_order(n: usize) -> Vec<Position> {
    (1..n).rev().flat_map(|i| (1..=n - i).rev().map(move |j| (i, j))).collect()
}

/// All reduced faces, optionally only those with `w(F) = w`.
///
/// Backtracks over the places in reading order and prunes as soon as the
/// partial word stops being reduced.
pub fn enumerate_reduced_faces(n: usize, w: Option<&Permutation>) -> Vec<FaceDiagram> {
    let places = reading_order(n);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    // partial product as one-line vector
    let mut prod: Vec<usize> = (1..=n).collect();
    fn rec(
        n: usize,
        places: &[Position],
        idx: usize,
        chosen: &mut Vec<Position>,
        prod: &mut Vec<usize>,
        out: &mut Vec<FaceDiagram>,
    ) {
        if idx == places.len() {
            out.push(FaceDiagram { n, edges: chosen.iter().copied().collect() });
            return;
        }
        rec(n, places, idx + 1, chosen, prod, out);
        let k = n - places[idx].1;
        if prod[k - 1] < prod[k] {
            prod.swap(k - 1, k);
            chosen.push(places[idx]);
            rec(n, places, idx + 1, chosen, prod, out);
            chosen.pop();
            prod.swap(k - 1, k);
        }
    }
    rec(n, &places, 0, &mut chosen, &mut prod, &mut out);
    if let Some(w) = w {
        out.retain(|f| &f.face_permutation() == w);
    }
    out.sort();
    out
}

/// The right-adjusted face with `w(F) = w`, read off the canonical reduced
/// word of `w0 ∘ w`.
pub fn right_adjusted_of(w: &Permutation) -> FaceDiagram {
    let n = w.n();
    let target = Permutation::longest(n).compose(w).expect("same n");
    let word = target.canonical_reduced_word();
    let mut edges = BTreeSet::new();
    let letters = word.letters();
    // blocks (i, i+1, …) appear with strictly decreasing starts
    let mut idx = 0;
    while idx < letters.len() {
        let start = letters[idx];
        let mut len = 1;
        while idx + len < letters.len() && letters[idx + len] == start + len {
            len += 1;
        }
        for j in n - start + 1 - len..=n - start {
            edges.insert((start, j));
        }
        idx += len;
    }
    let f = FaceDiagram { n, edges };
    debug_assert_eq!(f.face_permutation(), *w);
    f
}

/// Places on the diagonal `i + j = d`, indexed by row.
fn diag_place(n: usize, d: usize, row: usize) -> Option<Position> {
    if row >= 1 && row < d {
        let p = (row, d - row);
        in_range(n, p).then_some(p)
    } else {
        None
    }
}

fn forward_target(f: &FaceDiagram, (r, c): Position) -> Option<Position> {
    let n = f.n;
    let d = r + c;
    let filled = |dd: usize, row: usize| diag_place(n, dd, row).is_some_and(|p| f.edges.contains(&p));
    let empty_or_missing = |dd: usize, row: usize| diag_place(n, dd, row).is_none_or(|p| !f.edges.contains(&p));
    if !f.edges.contains(&(r, c)) {
        return None;
    }
    let mut k = 0;
    while filled(d, r + k + 1) {
        k += 1;
    }
    let t = r + k + 1;
    let target = diag_place(n, d + 1, t)?;
    if f.edges.contains(&target) || !empty_or_missing(d + 1, r) {
        return None;
    }
    if !(r + 1..=r + k).all(|row| filled(d + 1, row)) {
        return None;
    }
    Some(target)
}

/// Moves the edge at `e` along its diagonal block to the neighbouring
/// diagonal.
///
/// Forward: the edge at row `r` of diagonal `D`, followed by filled rows
/// `r+1..r+k` and an empty row `r+k+1` on `D`, jumps to row `r+k+1` of
/// `D+1`, provided that on `D+1` row `r` is empty, rows `r+1..r+k` are filled
/// and row `r+k+1` is empty. Backward is the inverse.
pub fn edge_move(f: &FaceDiagram, e: Position, dir: MoveDirection) -> Result<FaceDiagram> {
    let not_applicable = || Error::MoveNotApplicable(format!("{dir:?} move of edge {e:?} in {f}"));
    if !f.edges.contains(&e) {
        return Err(not_applicable());
    }
    match dir {
        MoveDirection::Forward => {
            let t = forward_target(f, e).ok_or_else(not_applicable)?;
            let mut edges = f.edges.clone();
            edges.remove(&e);
            edges.insert(t);
            Ok(FaceDiagram { n: f.n, edges })
        }
        MoveDirection::Backward => {
            let (s, c) = e;
            let d = s + c - 1;
            for r in (1..s).rev() {
                let Some(src) = diag_place(f.n, d, r) else { continue };
                if f.edges.contains(&src) {
                    continue;
                }
                let mut edges = f.edges.clone();
                edges.remove(&e);
                edges.insert(src);
                let g = FaceDiagram { n: f.n, edges };
                if forward_target(&g, src) == Some(e) {
                    return Ok(g);
                }
            }
            Err(not_applicable())
        }
    }
}

/// All moves applicable to `f`, with their results.
pub fn applicable_moves(f: &FaceDiagram) -> Vec<(Position, MoveDirection, FaceDiagram)> {
    let mut out = Vec::new();
    for &e in &f.edges {
        for dir in [MoveDirection::Forward, MoveDirection::Backward] {
            if let Ok(g) = edge_move(f, e, dir) {
                out.push((e, dir, g));
            }
        }
    }
    out
}

/// Product over rows `n−1` up to 1, left to right, of `s_{n−i−j+1}` for
/// every empty place of a right-adjusted diagram.
pub fn empty_places_permutation(f: &FaceDiagram) -> Result<Permutation> {
    if !f.is_right_adjusted() {
        return Err(Error::Precondition(format!("{f} is not right-adjusted")));
    }
    let n = f.n;
    let letters: Vec<usize> = (1..n)
        .rev()
        .flat_map(|i| (1..=n - i).map(move |j| (i, j)))
        .filter(|e| !f.edges.contains(e))
        .map(|(i, j)| n - i - j + 1)
        .collect();
    Word::new(letters)?.product(n)
}

/// Integer points of `GZ(λ)` on the face.
pub fn face_integer_points(f: &FaceDiagram, lambda: &Partition) -> Result<Vec<GZPattern>> {
    if f.n != lambda.n() {
        return Err(Error::DimensionMismatch(f.n, lambda.n()));
    }
    Ok(enumerate_gz_patterns(lambda)
        .into_iter()
        .filter(|z| f.edges.iter().all(|&(i, j)| z.get(i, j) == z.get(i - 1, j + 1)))
        .collect())
}

/// Character of the union of integer points over the reduced faces with `w(F) = w`.
pub fn key_polynomial(w: &Permutation, lambda: &Partition) -> Result<BetaPolynomial> {
    if w.n() != lambda.n() {
        return Err(Error::DimensionMismatch(w.n(), lambda.n()));
    }
    let mut pts = BTreeSet::new();
    for f in enumerate_reduced_faces(w.n(), Some(w)) {
        pts.extend(face_integer_points(&f, lambda)?);
    }
    Ok(character_of_points(lambda, &pts.into_iter().collect::<Vec<_>>()))
}

/// Reduced faces grouped by `w(F)`.
pub fn faces_by_permutation(n: usize) -> BTreeMap<Permutation, Vec<FaceDiagram>> {
    let mut out: BTreeMap<Permutation, Vec<FaceDiagram>> = BTreeMap::new();
    for f in enumerate_reduced_faces(n, None) {
        out.entry(f.face_permutation()).or_default().push(f);
    }
    out
}
