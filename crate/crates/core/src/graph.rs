//! The colored graph that carries every construction: vertices `1..=n`,
//! edges colored `1..=N` with a sign, and optional boson/fermion and height
//! data.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// 1-based vertex id.
pub type Vertex = usize;
/// 1-based color.
pub type Color = usize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn is_dashed(self) -> bool {
        self == Sign::Minus
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_dashed(dashed: bool) -> Sign {
        if dashed {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_dashed(self.is_dashed() != rhs.is_dashed())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Boson,
    Fermion,
}

impl Parity {
    pub fn opposite(self) -> Parity {
        match self {
            Parity::Boson => Parity::Fermion,
            Parity::Fermion => Parity::Boson,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub color: Color,
    pub sign: Sign,
}

impl Edge {
    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            debug_assert_eq!(x, self.v);
            self.u
        }
    }
}

/// A vertex meeting `count != 1` edges of `color`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorViolation {
    pub vertex: Vertex,
    pub color: Color,
    pub count: usize,
}

impl fmt::Display for ColorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertex {} meets {} edge(s) of color {}",
            self.vertex, self.count, self.color
        )
    }
}

/// Simple graph with an edge coloring. Edges are kept sorted by
/// `(color, u, v)` with `u < v`; vertex labels are display-only and do not
/// take part in equality.
#[derive(Clone, Debug)]
pub struct ColoredGraph {
    n: usize,
    colors: usize,
    labels: Vec<String>,
    edges: Vec<Edge>,
    parity: Option<Vec<Parity>>,
    heights: Option<Vec<i64>>,
    incidence: Vec<Vec<usize>>,
}

impl PartialEq for ColoredGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.colors == other.colors
            && self.edges == other.edges
            && self.parity == other.parity
            && self.heights == other.heights
    }
}

impl Eq for ColoredGraph {}

#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    colors: usize,
    labels: Option<Vec<String>>,
    edges: Vec<Edge>,
    parity: Option<Vec<Parity>>,
    heights: Option<Vec<i64>>,
}

impl GraphBuilder {
    pub fn new(n: usize, colors: usize) -> Self {
        Self {
            n,
            colors,
            labels: None,
            edges: Vec::new(),
            parity: None,
            heights: None,
        }
    }

    pub fn edge(self, u: Vertex, v: Vertex, color: Color) -> Self {
        self.signed_edge(u, v, color, Sign::Plus)
    }

    pub fn signed_edge(mut self, u: Vertex, v: Vertex, color: Color, sign: Sign) -> Self {
        self.push_edge(u, v, color, sign);
        self
    }

    pub fn push_edge(&mut self, u: Vertex, v: Vertex, color: Color, sign: Sign) {
        self.edges.push(Edge { u, v, color, sign });
    }

    pub fn labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn parity(mut self, parity: Option<Vec<Parity>>) -> Self {
        self.parity = parity;
        self
    }

    pub fn heights(mut self, heights: Option<Vec<i64>>) -> Self {
        self.heights = heights;
        self
    }

    pub fn build(self) -> Result<ColoredGraph> {
        let n = self.n;
        if n == 0 {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        if self.colors == 0 {
            return Err(Error::InvalidGraph("graph has no colors".into()));
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in self.edges {
            let (u, v) = (e.u.min(e.v), e.u.max(e.v));
            if u == 0 || v > n {
                return Err(Error::InvalidGraph(format!("edge {}-{} outside 1..={n}", e.u, e.v)));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if e.color == 0 || e.color > self.colors {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} has color {} outside 1..={}",
                    e.color, self.colors
                )));
            }
            edges.push(Edge { u, v, ..e });
        }
        edges.sort_by_key(|e| (e.color, e.u, e.v));
        let mut pairs: Vec<(Vertex, Vertex)> = edges.iter().map(|e| (e.u, e.v)).collect();
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "more than one edge between {} and {}",
                w[0].0, w[0].1
            )));
        }
        let labels = match self.labels {
            Some(l) if l.len() == n => l,
            Some(l) => {
                return Err(Error::InvalidGraph(format!("{} labels for {n} vertices", l.len())))
            }
            None => (1..=n).map(|i| i.to_string()).collect(),
        };
        if self.parity.as_ref().is_some_and(|p| p.len() != n) {
            return Err(Error::InvalidGraph("parity length differs from vertex count".into()));
        }
        if self.heights.as_ref().is_some_and(|h| h.len() != n) {
            return Err(Error::InvalidGraph("height count differs from vertex count".into()));
        }
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            incidence[e.u - 1].push(i);
            incidence[e.v - 1].push(i);
        }
        Ok(ColoredGraph {
            n,
            colors: self.colors,
            labels,
            edges,
            parity: self.parity,
            heights: self.heights,
            incidence,
        })
    }
}

impl ColoredGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        1..=self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v - 1]
    }

    pub fn parity(&self) -> Option<&[Parity]> {
        self.parity.as_deref()
    }

    pub fn parity_of(&self, v: Vertex) -> Option<Parity> {
        self.parity.as_ref().map(|p| p[v - 1])
    }

    pub fn heights(&self) -> Option<&[i64]> {
        self.heights.as_deref()
    }

    pub fn has_dashes(&self) -> bool {
        self.edges.iter().any(|e| e.sign.is_dashed())
    }

    /// Indices into [`edges`](Self::edges) of the edges at `v`.
    pub fn incident(&self, v: Vertex) -> &[usize] {
        &self.incidence[v - 1]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.incident(v).iter().map(move |&i| self.edges[i].other(v))
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.incident(u)
            .iter()
            .copied()
            .find(|&i| self.edges[i].other(u) == v)
    }

    fn rebuild(&self) -> GraphBuilder {
        GraphBuilder {
            n: self.n,
            colors: self.colors,
            labels: Some(self.labels.clone()),
            edges: self.edges.clone(),
            parity: self.parity.clone(),
            heights: self.heights.clone(),
        }
    }

    /// Copy with new edge signs, given in edge order.
    pub fn with_signs(&self, signs: &[Sign]) -> Result<ColoredGraph> {
        if signs.len() != self.edges.len() {
            return Err(Error::IncompleteAssignment {
                expected: self.edges.len(),
                got: signs.len(),
            });
        }
        let mut g = self.clone();
        for (e, &s) in g.edges.iter_mut().zip(signs) {
            e.sign = s;
        }
        Ok(g)
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.edges.iter().map(|e| e.sign).collect()
    }

    pub fn with_parity(&self, parity: Option<Vec<Parity>>) -> Result<ColoredGraph> {
        self.rebuild().parity(parity).build()
    }

    pub fn with_heights(&self, heights: Option<Vec<i64>>) -> Result<ColoredGraph> {
        self.rebuild().heights(heights).build()
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<ColoredGraph> {
        self.rebuild().labels(labels).build()
    }

    /// Every `(vertex, color)` whose incident edge count is not exactly one.
    pub fn validate_regular_coloring(&self) -> Vec<ColorViolation> {
        let mut out = Vec::new();
        for v in self.vertices() {
            let mut counts = vec![0usize; self.colors];
            for &i in self.incident(v) {
                counts[self.edges[i].color - 1] += 1;
            }
            for (c, &count) in counts.iter().enumerate() {
                if count != 1 {
                    out.push(ColorViolation {
                        vertex: v,
                        color: c + 1,
                        count,
                    });
                }
            }
        }
        out
    }

    pub fn is_regular_coloring(&self) -> bool {
        self.validate_regular_coloring().is_empty()
    }

    pub fn color_permutations(&self) -> Result<ColorPermutations> {
        let violations = self.validate_regular_coloring();
        if !violations.is_empty() {
            return Err(Error::NonRegular(violations));
        }
        let mut perms = vec![vec![0; self.n]; self.colors];
        let mut signs = vec![vec![Sign::Plus; self.n]; self.colors];
        let mut edge_ids = vec![vec![0; self.n]; self.colors];
        for (i, e) in self.edges.iter().enumerate() {
            let t = e.color - 1;
            perms[t][e.u - 1] = e.v;
            perms[t][e.v - 1] = e.u;
            signs[t][e.u - 1] = e.sign;
            signs[t][e.v - 1] = e.sign;
            edge_ids[t][e.u - 1] = i;
            edge_ids[t][e.v - 1] = i;
        }
        Ok(ColorPermutations {
            perms,
            signs,
            edge_ids,
        })
    }

    /// The color classes, each a perfect matching.
    pub fn perfect_matchings(&self) -> Result<Vec<Vec<Edge>>> {
        let violations = self.validate_regular_coloring();
        if !violations.is_empty() {
            return Err(Error::NonRegular(violations));
        }
        let mut classes = vec![Vec::new(); self.colors];
        for e in &self.edges {
            classes[e.color - 1].push(*e);
        }
        Ok(classes)
    }

    /// BFS 2-coloring; the first vertex of each component goes to the first
    /// part. `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        let side = self.two_coloring()?;
        let (a, b): (Vec<Vertex>, Vec<Vertex>) = self.vertices().partition(|&v| !side[v - 1]);
        Some((a, b))
    }

    fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for start in self.vertices() {
            if side[start - 1].is_some() {
                continue;
            }
            side[start - 1] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                let sx = side[x - 1].unwrap();
                for y in self.neighbors(x) {
                    match side[y - 1] {
                        None => {
                            side[y - 1] = Some(!sx);
                            queue.push_back(y);
                        }
                        Some(sy) if sy == sx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Bosons on the part containing the first vertex of each component.
    pub fn default_parity(&self) -> Result<Vec<Parity>> {
        let side = self.two_coloring().ok_or(Error::NotBipartite)?;
        Ok(side
            .into_iter()
            .map(|s| if s { Parity::Fermion } else { Parity::Boson })
            .collect())
    }

    /// Same graph with [`default_parity`](Self::default_parity) filled in when
    /// no parity is present.
    pub fn with_default_parity(&self) -> Result<ColoredGraph> {
        if self.parity.is_some() {
            return Ok(self.clone());
        }
        self.with_parity(Some(self.default_parity()?))
    }

    /// Indices of edges joining two vertices of the same parity.
    pub fn parity_violations(&self) -> Vec<usize> {
        let Some(p) = &self.parity else {
            return Vec::new();
        };
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| p[e.u - 1] == p[e.v - 1])
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut components = 0;
        for start in self.vertices() {
            if seen[start - 1] {
                continue;
            }
            components += 1;
            seen[start - 1] = true;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for y in self.neighbors(x) {
                    if !seen[y - 1] {
                        seen[y - 1] = true;
                        stack.push(y);
                    }
                }
            }
        }
        components
    }
}

/// The involutions `s_t` of a regular coloring, with the sign and edge index
/// of each step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorPermutations {
    perms: Vec<Vec<Vertex>>,
    signs: Vec<Vec<Sign>>,
    edge_ids: Vec<Vec<usize>>,
}

impl ColorPermutations {
    pub fn colors(&self) -> usize {
        self.perms.len()
    }

    pub fn n(&self) -> usize {
        self.perms.first().map_or(0, Vec::len)
    }

    /// `s_t(v)`.
    pub fn apply(&self, t: Color, v: Vertex) -> Vertex {
        self.perms[t - 1][v - 1]
    }

    pub fn sign(&self, t: Color, v: Vertex) -> Sign {
        self.signs[t - 1][v - 1]
    }

    pub fn edge_id(&self, t: Color, v: Vertex) -> usize {
        self.edge_ids[t - 1][v - 1]
    }

    /// `s_t` in one-line notation: entry `i - 1` is `s_t(i)`.
    pub fn one_line(&self, t: Color) -> &[Vertex] {
        &self.perms[t - 1]
    }

    /// Disjoint-cycle notation, e.g. `(14)(23)`; entries are space separated
    /// once vertex ids reach two digits.
    pub fn cycle_notation(&self, t: Color) -> String {
        let sep = if self.n() >= 10 { " " } else { "" };
        let mut out = String::new();
        for v in 1..=self.n() {
            let w = self.apply(t, v);
            if v < w {
                out.push_str(&format!("({v}{sep}{w})"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> ColoredGraph {
        GraphBuilder::new(4, 3)
            .edge(1, 4, 1)
            .edge(2, 3, 1)
            .edge(1, 3, 2)
            .edge(2, 4, 2)
            .edge(1, 2, 3)
            .edge(3, 4, 3)
            .build()
            .unwrap()
    }

    fn square(colors: [Color; 4]) -> ColoredGraph {
        GraphBuilder::new(4, 2)
            .edge(1, 2, colors[0])
            .edge(2, 3, colors[1])
            .edge(3, 4, colors[2])
            .edge(4, 1, colors[3])
            .build()
            .unwrap()
    }

    #[test]
    fn k4_permutations() {
        let g = k4();
        assert!(g.validate_regular_coloring().is_empty());
        let p = g.color_permutations().unwrap();
        assert_eq!(p.cycle_notation(1), "(14)(23)");
        assert_eq!(p.cycle_notation(2), "(13)(24)");
        assert_eq!(p.cycle_notation(3), "(12)(34)");
        for t in 1..=3 {
            for v in 1..=4 {
                assert_eq!(p.apply(t, p.apply(t, v)), v);
                assert_ne!(p.apply(t, v), v);
            }
        }
        assert_eq!(g.perfect_matchings().unwrap().iter().map(Vec::len).collect::<Vec<_>>(), [2, 2, 2]);
        assert!(g.bipartition().is_none());
        assert!(g.is_connected());
    }

    #[test]
    fn defective_square_reports_two_violations() {
        // both edges at vertex 1 colored 1, hence both edges at vertex 3 colored 2
        let g = square([1, 2, 2, 1]);
        let v = g.validate_regular_coloring();
        let mut bad: Vec<Vertex> = v.iter().map(|x| x.vertex).collect();
        bad.dedup();
        assert_eq!(bad, [1, 3]);
        assert!(v.contains(&ColorViolation { vertex: 1, color: 1, count: 2 }));
        assert!(v.contains(&ColorViolation { vertex: 3, color: 2, count: 2 }));
        assert!(matches!(g.color_permutations(), Err(Error::NonRegular(_))));
    }

    #[test]
    fn bicolor_square() {
        let g = square([1, 2, 1, 2]);
        assert!(g.is_regular_coloring());
        let (a, b) = g.bipartition().unwrap();
        assert_eq!((a, b), (vec![1, 3], vec![2, 4]));
        assert_eq!(g.perfect_matchings().unwrap().len(), 2);
        assert_eq!(
            g.default_parity().unwrap(),
            vec![Parity::Boson, Parity::Fermion, Parity::Boson, Parity::Fermion]
        );
    }

    #[test]
    fn disconnected_union() {
        let mut b = GraphBuilder::new(8, 2);
        for base in [0, 4] {
            b = b
                .edge(base + 1, base + 2, 1)
                .edge(base + 2, base + 3, 2)
                .edge(base + 3, base + 4, 1)
                .edge(base + 4, base + 1, 2);
        }
        let g = b.build().unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.component_count(), 2);
        let (a, _) = g.bipartition().unwrap();
        assert!(a.contains(&1) && a.contains(&5));
    }

    #[test]
    fn builder_rejects_bad_graphs() {
        assert!(GraphBuilder::new(3, 1).edge(3, 3, 1).build().is_err());
        assert!(GraphBuilder::new(3, 1).edge(1, 2, 1).edge(2, 1, 1).build().is_err());
        assert!(GraphBuilder::new(3, 1).edge(1, 4, 1).build().is_err());
        assert!(GraphBuilder::new(3, 1).edge(1, 2, 2).build().is_err());
    }

    #[test]
    fn equality_ignores_labels() {
        let g = k4();
        let relabeled = g.with_labels(vec!["a".into(), "b".into(), "c".into(), "d".into()]).unwrap();
        assert_eq!(g, relabeled);
        assert_eq!(relabeled.label(2), "b");
    }

    #[test]
    fn sign_algebra() {
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(Sign::Minus * Sign::Plus, Sign::Minus);
        assert_eq!(Sign::Minus.value(), -1);
    }
}
