//! Height functions on pre-Adinkras: every edge joins adjacent levels. The
//! orientation from lower to higher endpoint is the Hasse diagram of the
//! compatible partial order.

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Parity, Vertex};

/// Heights normalized so the lowest level is 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeightAssignment {
    heights: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Raise,
    Lower,
}

impl Direction {
    fn delta(self) -> i64 {
        match self {
            Direction::Raise => 2,
            Direction::Lower => -2,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Direction::Raise => "raise",
            Direction::Lower => "lower",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Movable {
    pub raisable: Vec<Vertex>,
    pub lowerable: Vec<Vertex>,
}

impl HeightAssignment {
    /// Validates `heights` (indexed by vertex - 1) against `g` and normalizes.
    pub fn new(g: &ColoredGraph, heights: Vec<i64>) -> Result<Self> {
        if heights.len() != g.n() {
            return Err(Error::IncompleteAssignment {
                expected: g.n(),
                got: heights.len(),
            });
        }
        for e in g.edges() {
            if (heights[e.u - 1] - heights[e.v - 1]).abs() != 1 {
                return Err(Error::HeightGap(e.u, e.v));
            }
        }
        if let Some(parity) = g.parity() {
            let mut level_parity: std::collections::HashMap<i64, Parity> = Default::default();
            for (i, (&h, &p)) in heights.iter().zip(parity).enumerate() {
                if *level_parity.entry(h).or_insert(p) != p {
                    return Err(Error::ParityLevelConflict(i + 1));
                }
            }
        }
        let min = heights.iter().copied().min().unwrap_or(0);
        Ok(Self {
            heights: heights.into_iter().map(|h| h - min).collect(),
        })
    }

    /// The heights stored on `g`.
    pub fn of_graph(g: &ColoredGraph) -> Result<Self> {
        let h = g.heights().ok_or(Error::MissingHeights)?;
        Self::new(g, h.to_vec())
    }

    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    pub fn height(&self, v: Vertex) -> i64 {
        self.heights[v - 1]
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.heights
    }

    pub fn max_height(&self) -> i64 {
        self.heights.iter().copied().max().unwrap_or(0)
    }

    /// Vertex counts per level, bottom-up.
    pub fn rank_sequence(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_height() as usize + 1];
        for &h in &self.heights {
            counts[h as usize] += 1;
        }
        counts
    }

    /// Vertices per level, bottom-up, ascending within a level.
    pub fn levels(&self) -> Vec<Vec<Vertex>> {
        let mut levels = vec![Vec::new(); self.max_height() as usize + 1];
        for (i, &h) in self.heights.iter().enumerate() {
            levels[h as usize].push(i + 1);
        }
        levels
    }

    /// Vertices sorted by `(height, id)`.
    pub fn lexicographic_order(&self) -> Vec<Vertex> {
        self.levels().concat()
    }

    pub fn apply(&self, g: &ColoredGraph) -> Result<ColoredGraph> {
        g.with_heights(Some(self.heights.clone()))
    }
}

/// Bosons at height 0, fermions at height 1.
pub fn valise(g: &ColoredGraph) -> Result<HeightAssignment> {
    let parity = g.parity().ok_or(Error::MissingParity)?;
    let h = parity
        .iter()
        .map(|p| match p {
            Parity::Boson => 0,
            Parity::Fermion => 1,
        })
        .collect();
    HeightAssignment::new(g, h)
}

/// Overrides the given vertices on top of the graph's own heights, or the
/// valise when the graph has none. Without heights or parity every vertex
/// must be given.
pub fn assign_heights(g: &ColoredGraph, partial: &[(Vertex, i64)]) -> Result<HeightAssignment> {
    let mut h: Vec<Option<i64>> = match (g.heights(), g.parity()) {
        (Some(h), _) => h.iter().copied().map(Some).collect(),
        (None, Some(_)) => valise(g)?.heights.into_iter().map(Some).collect(),
        (None, None) => vec![None; g.n()],
    };
    for &(v, value) in partial {
        if v == 0 || v > g.n() {
            return Err(Error::OutOfRange(format!("vertex {v} not in graph")));
        }
        h[v - 1] = Some(value);
    }
    let got = h.iter().filter(|x| x.is_some()).count();
    if got < g.n() {
        return Err(Error::IncompleteAssignment {
            expected: g.n(),
            got,
        });
    }
    HeightAssignment::new(g, h.into_iter().map(Option::unwrap).collect())
}

/// A vertex is raisable when all its neighbors sit one level above it, and
/// lowerable when all sit one level below.
pub fn movable_vertices(g: &ColoredGraph, h: &HeightAssignment) -> Movable {
    let mut out = Movable::default();
    for v in g.vertices() {
        let hv = h.height(v);
        if g.neighbors(v).all(|w| h.height(w) == hv + 1) {
            out.raisable.push(v);
        }
        if g.neighbors(v).all(|w| h.height(w) == hv - 1) {
            out.lowerable.push(v);
        }
    }
    out
}

/// Moves `v` two levels up or down across its neighbors.
pub fn move_vertex(
    g: &ColoredGraph,
    h: &HeightAssignment,
    v: Vertex,
    direction: Direction,
) -> Result<HeightAssignment> {
    if v == 0 || v > g.n() {
        return Err(Error::OutOfRange(format!("vertex {v} not in graph")));
    }
    let m = movable_vertices(g, h);
    let allowed = match direction {
        Direction::Raise => &m.raisable,
        Direction::Lower => &m.lowerable,
    };
    if !allowed.contains(&v) {
        return Err(Error::NotMovable(v, direction.name()));
    }
    let mut heights = h.heights.clone();
    heights[v - 1] += direction.delta();
    HeightAssignment::new(g, heights)
}
