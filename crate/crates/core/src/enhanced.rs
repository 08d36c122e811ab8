//! Enhanced Gelfand-Zetlin patterns: integer patterns with circled entries
//! and upward edges between equal neighbours.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{BetaPolynomial, Monomial};
use crate::error::{Error, Result};
use crate::gz::{enumerate_gz_patterns, GZPattern, Partition};
use crate::unionfind::UnionFind;

pub type Position = (usize, usize);

/// Direction of an upward edge from `a_{i,j}`: to `a_{i−1,j}` or `a_{i−1,j+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Left,
    Right,
}

impl Direction {
    pub fn letter(self) -> &'static str {
        match self {
            Direction::Left => "L",
            Direction::Right => "R",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Node {
    pub(crate) circled: bool,
    pub(crate) left: bool,
    pub(crate) right: bool,
}

impl Node {
    const U: Node = Node { circled: false, left: false, right: false };
    const C: Node = Node { circled: true, left: false, right: false };
    const CL: Node = Node { circled: true, left: true, right: false };
    const CR: Node = Node { circled: true, left: false, right: true };
    const CLR: Node = Node { circled: true, left: true, right: true };

    fn has_edge(self) -> bool {
        self.left || self.right
    }
}

/// Flat index of `(i, j)` in a triangle with `n` entries in row 0.
pub(crate) fn flat_index(n: usize, i: usize, j: usize) -> usize {
    i * n - i * (i.saturating_sub(1)) / 2 + (j - 1)
}

pub(crate) fn triangle_size(n: usize) -> usize {
    n * (n + 1) / 2
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EnhancedPattern {
    base: GZPattern,
    // nodes[i][j-1]; row 0 is circled and has no edges
    nodes: Vec<Vec<Node>>,
}

/// A failed condition of the definition, with the entry it concerns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: u8,
    pub position: Position,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition {} at {:?}: {}", self.condition, self.position, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    /// All coordinates are pinned to this value.
    Constant(i64),
    /// The coordinate of this uncircled highest vertex is free.
    Variable(Position),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub positions: Vec<Position>,
    pub kind: ComponentKind,
}

impl EnhancedPattern {
    /// Builds a pattern from circles and edges in rows `1..n−1`. Shape is
    /// checked here; the eight conditions are checked by [`validate`](Self::validate).
    pub fn new(
        base: GZPattern,
        circled: impl IntoIterator<Item = Position>,
        edges: impl IntoIterator<Item = (Position, Direction)>,
    ) -> Result<Self> {
        let n = base.n();
        let mut nodes = empty_nodes(n);
        let check = |(i, j): Position| -> Result<()> {
            if i == 0 || i >= n || j == 0 || j > n - i {
                Err(Error::Shape(format!("position ({i},{j}) is not in rows 1..{}", n.saturating_sub(1))))
            } else {
                Ok(())
            }
        };
        for p in circled {
            check(p)?;
            nodes[p.0][p.1 - 1].circled = true;
        }
        for (p, d) in edges {
            check(p)?;
            let node = &mut nodes[p.0][p.1 - 1];
            match d {
                Direction::Left => node.left = true,
                Direction::Right => node.right = true,
            }
        }
        Ok(EnhancedPattern { base, nodes })
    }

    pub(crate) fn from_nodes(base: GZPattern, nodes: Vec<Vec<Node>>) -> Self {
        EnhancedPattern { base, nodes }
    }

    pub fn base(&self) -> &GZPattern {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn value(&self, i: usize, j: usize) -> i64 {
        self.base.get(i, j)
    }

    pub(crate) fn node(&self, i: usize, j: usize) -> Node {
        self.nodes[i][j - 1]
    }

    pub fn is_circled(&self, i: usize, j: usize) -> bool {
        self.node(i, j).circled
    }

    pub fn has_edge(&self, i: usize, j: usize, d: Direction) -> bool {
        let node = self.node(i, j);
        match d {
            Direction::Left => node.left,
            Direction::Right => node.right,
        }
    }

    /// Circled positions in rows `1..n−1`, row-major.
    pub fn circled(&self) -> Vec<Position> {
        self.positions().filter(|&(i, j)| self.is_circled(i, j)).collect()
    }

    pub fn edges(&self) -> Vec<(Position, Direction)> {
        let mut out = Vec::new();
        for (i, j) in self.positions() {
            for d in [Direction::Left, Direction::Right] {
                if self.has_edge(i, j, d) {
                    out.push(((i, j), d));
                }
            }
        }
        out
    }

    /// Positions in rows `1..n−1`, row-major.
    pub fn positions(&self) -> impl Iterator<Item = Position> {
        let n = self.n();
        (1..n).flat_map(move |i| (1..=n - i).map(move |j| (i, j)))
    }

    /// Union-find over all entries, rows `0..n−1`, joined along edges.
    pub(crate) fn edge_classes(&self) -> UnionFind {
        let n = self.n();
        let mut uf = UnionFind::new(triangle_size(n));
        for (i, j) in self.positions() {
            let node = self.node(i, j);
            if node.left {
                uf.union(flat_index(n, i, j), flat_index(n, i - 1, j));
            }
            if node.right {
                uf.union(flat_index(n, i, j), flat_index(n, i - 1, j + 1));
            }
        }
        uf
    }

    /// Checks all eight conditions; an empty list means the pattern is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.n();
        let mut out = Vec::new();
        let mut push = |condition: u8, position: Position, message: String| {
            out.push(Violation { condition, position, message })
        };
        let mut uf = self.edge_classes();
        for (i, j) in self.positions() {
            let node = self.node(i, j);
            let a = self.value(i, j);
            let (tl, tr) = (self.value(i - 1, j), self.value(i - 1, j + 1));
            if node.left && (tl != a || !node.circled) {
                push(2, (i, j), "left edge needs equal entries and a circled lower end".into());
            }
            if node.right && (tr != a || !node.circled) {
                push(2, (i, j), "right edge needs equal entries and a circled lower end".into());
            }
            if i == 1 && tl == tr && node != Node::CLR {
                push(4, (i, j), "equal entries above in the top row force a circled, doubly joined entry".into());
            }
            if tl == a && tl < tr && !(node.circled && node.left) {
                push(5, (i, j), "triangle (a,b/a) needs the bottom circled and joined left".into());
            }
            if tr == a && tl < tr && node.circled && !node.right {
                push(6, (i, j), "triangle (a,b/b) with circled bottom needs the right edge".into());
            }
            if tl == a && tr == a {
                let joined_above = uf.same(flat_index(n, i - 1, j), flat_index(n, i - 1, j + 1));
                if joined_above && node != Node::CLR {
                    push(7, (i, j), "connected tops force a circled, doubly joined bottom".into());
                }
                if node.circled && !node.has_edge() {
                    push(8, (i, j), "circled bottom of (a,a/a) must be joined".into());
                }
            }
            // a_{i,j} joined right and a_{i,j+1} joined left iff a_{i+1,j} is joined on both sides
            if j < n - i {
                let above = node.right && self.node(i, j + 1).left;
                let below = i + 1 < n && {
                    let b = self.node(i + 1, j);
                    b.left && b.right
                };
                if above != below {
                    push(3, (i, j), "pair joined above iff joined below".into());
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Number of uncircled entries.
    pub fn rank(&self) -> usize {
        self.positions().filter(|&(i, j)| !self.is_circled(i, j)).count()
    }

    /// False iff some `(a,a/a)` triangle lacks the edge from its bottom to the right top.
    pub fn is_efficient(&self) -> bool {
        self.positions().all(|(i, j)| {
            let a = self.value(i, j);
            !(self.value(i - 1, j) == a && self.value(i - 1, j + 1) == a && !self.node(i, j).right)
        })
    }

    pub fn connected_components(&self) -> Vec<Component> {
        let n = self.n();
        let mut uf = self.edge_classes();
        let mut groups: BTreeMap<usize, Vec<Position>> = BTreeMap::new();
        for i in 0..n {
            for j in 1..=n - i {
                groups.entry(uf.find(flat_index(n, i, j))).or_default().push((i, j));
            }
        }
        groups
            .into_values()
            .map(|positions| {
                let free = positions.iter().find(|&&(i, j)| i > 0 && !self.is_circled(i, j)).copied();
                let kind = match free {
                    Some(p) => ComponentKind::Variable(p),
                    None => ComponentKind::Constant(self.value(positions[0].0, positions[0].1)),
                };
                Component { positions, kind }
            })
            .collect()
    }

    /// `β^{rk P} x^d`, or `None` for inefficient patterns.
    pub fn monomial_term(&self) -> Option<Monomial> {
        if !self.is_efficient() {
            return None;
        }
        let n = self.n();
        let s = |i: usize| if i >= n { 0 } else { self.base.row_sum(i) };
        let d = |i: usize| {
            if i == 0 || i >= n {
                0
            } else {
                (1..=n - i).filter(|&j| !self.is_circled(i, j)).count() as i64
            }
        };
        let mut exps = vec![0u32; n];
        for i in 1..=n {
            let e = s(i - 1) - s(i) + d(i);
            exps[n - i] = u32::try_from(e).expect("exponents are nonnegative");
        }
        Some(Monomial::new(self.rank() as u32, exps))
    }

    /// `x^P` as a polynomial (zero when inefficient).
    pub fn monomial(&self) -> BetaPolynomial {
        match self.monomial_term() {
            Some(m) => BetaPolynomial::monomial(m),
            None => BetaPolynomial::zero(self.n()),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "base": self.base.to_json(),
            "circled": self.circled().iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
            "edges": self.edges().iter().map(|&((i, j), d)| json!([i, j, d.letter()])).collect::<Vec<_>>(),
            "rank": self.rank(),
            "efficient": self.is_efficient(),
            "monomial": self.monomial_term().map(|m| m.term_json(&BigInt::one())),
        })
    }
}

/// Row-by-row text: circled entries in parentheses, edges as `\` (left) and `/` (right)
/// after the value.
impl fmt::Display for EnhancedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let mut rows = Vec::new();
        for i in 0..n {
            let mut cells = Vec::new();
            for j in 1..=n - i {
                let v = self.value(i, j);
                let mut s = if i == 0 || self.is_circled(i, j) { format!("({v})") } else { v.to_string() };
                if i > 0 {
                    let node = self.node(i, j);
                    if node.left {
                        s.push('\\');
                    }
                    if node.right {
                        s.push('/');
                    }
                }
                cells.push(s);
            }
            rows.push(cells.join(" "));
        }
        write!(f, "{}", rows.join(" | "))
    }
}

fn empty_nodes(n: usize) -> Vec<Vec<Node>> {
    (0..n).map(|i| vec![if i == 0 { Node::C } else { Node::U }; n - i]).collect()
}

/// States an entry can take given its value and the two entries above.
pub(crate) fn local_states(i: usize, tl: i64, a: i64, tr: i64) -> &'static [Node] {
    match (tl == a, tr == a) {
        (false, false) => &[Node::U, Node::C],
        (true, false) => &[Node::CL],
        (false, true) => &[Node::U, Node::CR],
        (true, true) if i == 1 => &[Node::CLR],
        (true, true) => &[Node::U, Node::CL, Node::CR, Node::CLR],
    }
}

/// All valid enhancements of one integer pattern.
///
/// Each entry ranges over the states allowed by its own triangle; the
/// conditions that couple entries are then checked by `validate`.
pub fn enumerate_enhancements(base: &GZPattern) -> Vec<EnhancedPattern> {
    let n = base.n();
    let positions: Vec<Position> = (1..n).flat_map(|i| (1..=n - i).map(move |j| (i, j))).collect();
    let choices: Vec<&[Node]> = positions
        .iter()
        .map(|&(i, j)| local_states(i, base.get(i - 1, j), base.get(i, j), base.get(i - 1, j + 1)))
        .collect();
    let mut out = Vec::new();
    let mut nodes = empty_nodes(n);
    fn rec(
        k: usize,
        positions: &[Position],
        choices: &[&[Node]],
        base: &GZPattern,
        nodes: &mut Vec<Vec<Node>>,
        out: &mut Vec<EnhancedPattern>,
    ) {
        if k == positions.len() {
            let p = EnhancedPattern::from_nodes(base.clone(), nodes.clone());
            if p.is_valid() {
                out.push(p);
            }
            return;
        }
        let (i, j) = positions[k];
        for &s in choices[k] {
            nodes[i][j - 1] = s;
            rec(k + 1, positions, choices, base, nodes, out);
        }
    }
    rec(0, &positions, &choices, base, &mut nodes, &mut out);
    out
}

/// `𝒫(λ)`: every valid enhancement of every integer point.
pub fn enumerate_all(lambda: &Partition) -> Vec<EnhancedPattern> {
    enumerate_gz_patterns(lambda).par_iter().flat_map_iter(enumerate_enhancements).collect()
}

/// `𝒫⁺(λ)`.
pub fn enumerate_efficient(lambda: &Partition) -> Vec<EnhancedPattern> {
    enumerate_all(lambda).into_iter().filter(EnhancedPattern::is_efficient).collect()
}

/// `Σ_{P ∈ 𝒫⁺(λ)} x^P`.
pub fn grothendieck_via_patterns(lambda: &Partition) -> BetaPolynomial {
    let mut out = BetaPolynomial::zero(lambda.n());
    for p in enumerate_efficient(lambda) {
        if let Some(m) = p.monomial_term() {
            out.add_term(m, BigInt::one());
        }
    }
    out
}

/// Recovers the edges of an efficient pattern from its circles, scanning
/// rows top to bottom.
pub fn reconstruct_edges(base: &GZPattern, circled: &[Position]) -> Result<EnhancedPattern> {
    let n = base.n();
    let mut p = EnhancedPattern::new(base.clone(), circled.iter().copied(), [])?;
    let mut uf = UnionFind::new(triangle_size(n));
    for i in 1..n {
        for j in 1..=n - i {
            if !p.is_circled(i, j) {
                continue;
            }
            let a = base.get(i, j);
            let (tl, tr) = (base.get(i - 1, j), base.get(i - 1, j + 1));
            let node = &mut p.nodes[i][j - 1];
            match (tl == a, tr == a) {
                (false, false) => {}
                (true, false) => node.left = true,
                (false, true) => node.right = true,
                (true, true) => {
                    node.right = true;
                    node.left = i == 1 || uf.same(flat_index(n, i - 1, j), flat_index(n, i - 1, j + 1));
                }
            }
        }
        for j in 1..=n - i {
            let node = p.node(i, j);
            if node.left {
                uf.union(flat_index(n, i, j), flat_index(n, i - 1, j));
            }
            if node.right {
                uf.union(flat_index(n, i, j), flat_index(n, i - 1, j + 1));
            }
        }
    }
    let violations = p.validate();
    if let Some(v) = violations.first() {
        return Err(Error::ReconstructionInvalid(v.to_string()));
    }
    if !p.is_efficient() {
        return Err(Error::ReconstructionInvalid(format!("{p} is inefficient")));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lascoux_w_lambda;
    use crate::gz::character_of_points;
    use crate::perm::{Permutation, Word};
    use num_traits::Zero;

    fn base(rows: &[&[i64]]) -> GZPattern {
        GZPattern::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn lam(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    use Direction::{Left as L, Right as R};

    #[test]
    fn flat_indices() {
        let n = 4;
        let mut seen = Vec::new();
        for i in 0..n {
            for j in 1..=n - i {
                seen.push(flat_index(n, i, j));
            }
        }
        assert_eq!(seen, (0..triangle_size(n)).collect::<Vec<_>>());
    }

    #[test]
    fn eight_enhancements_of_012_12_2() {
        let b = base(&[&[0, 1, 2], &[1, 2], &[2]]);
        let all = enumerate_enhancements(&b);
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(EnhancedPattern::is_efficient));
        let expected: Vec<(Vec<Position>, Vec<(Position, Direction)>)> = vec![
            (vec![], vec![]),
            (vec![(1, 1)], vec![((1, 1), R)]),
            (vec![(1, 2)], vec![((1, 2), R)]),
            (vec![(2, 1)], vec![((2, 1), R)]),
            (vec![(1, 1), (1, 2)], vec![((1, 1), R), ((1, 2), R)]),
            (vec![(1, 2), (2, 1)], vec![((1, 2), R), ((2, 1), R)]),
            (vec![(1, 1), (2, 1)], vec![((1, 1), R), ((2, 1), R)]),
            (vec![(1, 1), (1, 2), (2, 1)], vec![((1, 1), R), ((1, 2), R), ((2, 1), R)]),
        ];
        for (c, e) in expected {
            let p = EnhancedPattern::new(b.clone(), c, e).unwrap();
            assert!(p.is_valid(), "{p}: {:?}", p.validate());
            assert!(all.contains(&p), "{p} missing");
        }
        assert_eq!(all.iter().filter(|p| p.rank() == 3).count(), 1);
    }

    #[test]
    fn four_enhancements_of_012_11_1() {
        let b = base(&[&[0, 1, 2], &[1, 1], &[1]]);
        let all = enumerate_enhancements(&b);
        assert_eq!(all.len(), 4);
        assert_eq!(all.iter().filter(|p| p.is_efficient()).count(), 2);
        let ineff1 = EnhancedPattern::new(b.clone(), [(1, 2)], [((1, 2), L)]).unwrap();
        let ineff2 = EnhancedPattern::new(b.clone(), [(1, 2), (2, 1)], [((1, 2), L), ((2, 1), L)]).unwrap();
        let eff1 = EnhancedPattern::new(b.clone(), [(1, 2), (2, 1)], [((1, 2), L), ((2, 1), R)]).unwrap();
        let eff2 = EnhancedPattern::new(
            b.clone(),
            [(1, 1), (1, 2), (2, 1)],
            [((1, 1), R), ((1, 2), L), ((2, 1), L), ((2, 1), R)],
        )
        .unwrap();
        for p in [&ineff1, &ineff2, &eff1, &eff2] {
            assert!(all.contains(p), "{p} missing");
        }
        assert!(!ineff1.is_efficient() && !ineff2.is_efficient());
        assert!(eff1.is_efficient() && eff2.is_efficient());
        assert!(ineff1.monomial().is_zero());
        let unjoined = EnhancedPattern::new(b, [(1, 2), (2, 1)], [((1, 2), L)]).unwrap();
        assert!(unjoined.validate().iter().any(|v| v.condition == 8));
    }

    #[test]
    fn monomial_of_rank_two_210() {
        let b = base(&[&[0, 1, 2], &[1, 2], &[2]]);
        let p = EnhancedPattern::new(b, [(2, 1)], [((2, 1), R)]).unwrap();
        assert!(p.is_valid());
        assert_eq!(p.rank(), 2);
        assert_eq!(p.monomial_term(), Some(Monomial::new(2, vec![2, 1, 2])));
    }

    #[test]
    fn four_row_components() {
        let b = base(&[&[1, 3, 7, 9], &[3, 4, 9], &[3, 5], &[4]]);
        let p = EnhancedPattern::new(b.clone(), [(1, 3), (2, 1)], [((1, 3), R), ((2, 1), L)]).unwrap();
        assert!(p.is_valid(), "{:?}", p.validate());
        let comps = p.connected_components();
        let nine = comps.iter().find(|c| c.positions.contains(&(0, 4))).unwrap();
        assert_eq!(nine.positions, vec![(0, 4), (1, 3)]);
        assert_eq!(nine.kind, ComponentKind::Constant(9));
        let three = comps.iter().find(|c| c.positions.contains(&(1, 1))).unwrap();
        assert_eq!(three.positions, vec![(1, 1), (2, 1)]);
        assert_eq!(three.kind, ComponentKind::Variable((1, 1)));
        let vars = comps.iter().filter(|c| matches!(c.kind, ComponentKind::Variable(_))).count();
        assert_eq!(vars, p.rank());
        assert_eq!(reconstruct_edges(&b, &p.circled()).unwrap(), p);
    }

    #[test]
    fn segment() {
        let all = enumerate_all(&lam(&[1, 0]));
        assert_eq!(all.len(), 3);
        assert_eq!(all.iter().filter(|p| p.rank() == 0).count(), 2);
        let g = grothendieck_via_patterns(&lam(&[1, 0]));
        assert_eq!(g, BetaPolynomial::x_pow(&[1, 0]).demazure_lascoux(1).unwrap());
        assert_eq!(grothendieck_via_patterns(&lam(&[0, 0, 0])), BetaPolynomial::one(3));
    }

    #[test]
    fn two_row_closed_form() {
        for a in 0..5u32 {
            for b in 0..=a {
                let eff = enumerate_efficient(&lam(&[a, b]));
                let r0 = eff.iter().filter(|p| p.rank() == 0).count();
                let r1 = eff.iter().filter(|p| p.rank() == 1).count();
                assert_eq!((r0, r1), ((a - b + 1) as usize, (a - b) as usize));
                let op = BetaPolynomial::x_pow(&[a, b]).demazure_lascoux(1).unwrap();
                assert_eq!(op.len(), eff.len());
            }
        }
    }

    #[test]
    fn structural_properties() {
        for n in 1..=3 {
            for l in Partition::all_bounded(n, 3) {
                let all = enumerate_all(&l);
                let pts = enumerate_gz_patterns(&l);
                let rank0: Vec<_> = all.iter().filter(|p| p.rank() == 0).collect();
                assert_eq!(rank0.len(), pts.len());
                let mut seen = std::collections::BTreeSet::new();
                for p in &all {
                    assert!(p.is_valid());
                    if !p.is_efficient() {
                        assert!(p.rank() >= 1);
                    } else {
                        assert!(seen.insert((p.base().clone(), p.circled())), "circles do not determine {p}");
                        assert_eq!(reconstruct_edges(p.base(), &p.circled()).unwrap(), *p);
                        let m = p.monomial_term().unwrap();
                        assert_eq!(m.beta_deg as usize, p.rank());
                        assert_eq!(m.x_degree() as u64, l.size() + p.rank() as u64);
                    }
                    let vars = p
                        .connected_components()
                        .iter()
                        .filter(|c| matches!(c.kind, ComponentKind::Variable(_)))
                        .count();
                    assert_eq!(vars, p.rank());
                }
                let g = grothendieck_via_patterns(&l);
                assert_eq!(g.specialize_beta(&BigInt::zero()), character_of_points(&l, &pts));
            }
        }
    }

    #[test]
    fn pattern_sum_matches_operators_n3() {
        for l in Partition::all_bounded(3, 3) {
            let op = BetaPolynomial::x_pow(l.parts()).apply_word(Word::w0_word_reading(3).letters()).unwrap();
            assert_eq!(grothendieck_via_patterns(&l), op, "λ = {l}");
            assert_eq!(op, lascoux_w_lambda(&Permutation::longest(3), &l).unwrap());
        }
    }

    #[test]
    fn reconstruction_rejects_impossible_circles() {
        // bottom of an (a,a/a) triangle left uncircled above a circled entry that needs it
        let b = base(&[&[0, 1, 2], &[1, 1], &[1]]);
        assert!(reconstruct_edges(&b, &[(1, 2)]).is_err());
    }

    #[test]
    fn json_shape() {
        let b = base(&[&[0, 1, 2], &[1, 2], &[2]]);
        let p = EnhancedPattern::new(b, [(2, 1)], [((2, 1), R)]).unwrap();
        let v = p.to_json();
        assert_eq!(v["edges"][0], json!([2, 1, "R"]));
        assert_eq!(v["rank"], 2);
        assert_eq!(v["monomial"]["exps"], json!([2, 1, 2]));
        assert_eq!(v["base"]["rows"], json!([[1, 2], [2]]));
    }
}
