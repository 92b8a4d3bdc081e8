//! Totally odd dashings: every bicolor 4-cycle carries an odd number of
//! dashed edges. Existence and the full solution space come from an affine
//! GF(2) system with one unknown per edge and one equation per square.

use crate::construct::build_hypercube;
use crate::error::{Error, Result};
use crate::graph::{Color, ColorPermutations, ColoredGraph, Sign, Vertex};
use crate::linalg::{solve_affine, AffineSolution, BitRow};
use crate::structure::bicolor_report_of;

/// Enumeration is refused above this many solutions.
pub const MAX_ENUMERATED_DASHINGS: u128 = 1 << 20;

/// A bicolor 4-cycle `v, s_i v, s_j s_i v, s_j v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Square {
    pub i: Color,
    pub j: Color,
    pub vertices: [Vertex; 4],
    /// Edge indices in cycle order, starting with the color-`i` edge at `vertices[0]`.
    pub edges: [usize; 4],
    pub dashes: usize,
}

fn quadrilateral_perms(g: &ColoredGraph) -> Result<ColorPermutations> {
    let perms = g.color_permutations()?;
    if !bicolor_report_of(&perms).is_quadrilateral() {
        return Err(Error::NotQuadrilateral);
    }
    Ok(perms)
}

fn collect_squares(g: &ColoredGraph, perms: &ColorPermutations) -> Vec<Square> {
    let mut out = Vec::new();
    for i in 1..=g.colors() {
        for j in i + 1..=g.colors() {
            let mut seen = vec![false; g.n()];
            for v in g.vertices() {
                if seen[v - 1] {
                    continue;
                }
                let a = perms.apply(i, v);
                let b = perms.apply(j, a);
                let c = perms.apply(j, v);
                for x in [v, a, b, c] {
                    seen[x - 1] = true;
                }
                let edges = [
                    perms.edge_id(i, v),
                    perms.edge_id(j, a),
                    perms.edge_id(i, c),
                    perms.edge_id(j, v),
                ];
                let dashes = edges.iter().filter(|&&e| g.edges()[e].sign.is_dashed()).count();
                out.push(Square {
                    i,
                    j,
                    vertices: [v, a, b, c],
                    edges,
                    dashes,
                });
            }
        }
    }
    out
}

/// All bicolor 4-cycles ordered by `(i, j, smallest vertex)`.
pub fn squares(g: &ColoredGraph) -> Result<Vec<Square>> {
    let perms = quadrilateral_perms(g)?;
    Ok(collect_squares(g, &perms))
}

/// The squares with an even number of dashed edges.
pub fn validate_totally_odd(g: &ColoredGraph) -> Result<Vec<Square>> {
    Ok(squares(g)?.into_iter().filter(|s| s.dashes % 2 == 0).collect())
}

pub fn is_totally_odd(g: &ColoredGraph) -> Result<bool> {
    Ok(validate_totally_odd(g)?.is_empty())
}

/// `Q_N` with edge `{g, g + e_i}` dashed iff an odd number of coordinates
/// `j < i` are set in `g`: the sign picked up when `e_i` is moved past
/// `g` in the Clifford product.
pub fn canonical_dashing_hypercube(dim: usize) -> Result<ColoredGraph> {
    let g = build_hypercube(dim)?;
    let signs: Vec<Sign> = g
        .edges()
        .iter()
        .map(|e| {
            let word = (e.u - 1) as u64;
            // coordinates 1..i-1 occupy the top i-1 bits
            let before = word >> (dim - e.color + 1);
            Sign::from_dashed(before.count_ones() % 2 == 1)
        })
        .collect();
    g.with_signs(&signs)
}

/// Solution space of the totally-odd constraints on a quadrilateral graph.
#[derive(Clone, Debug)]
pub struct DashingSystem {
    pub edges: usize,
    pub squares: Vec<Square>,
    pub solution: AffineSolution,
}

impl DashingSystem {
    pub fn consistent(&self) -> bool {
        self.solution.consistent
    }

    pub fn rank(&self) -> usize {
        self.solution.rank
    }

    /// `log2` of the number of totally odd dashings, `None` when there are none.
    pub fn log2_count(&self) -> Option<usize> {
        self.consistent().then(|| self.edges - self.rank())
    }

    /// Exact count when it fits in a `u128`.
    pub fn count(&self) -> Option<u128> {
        match self.log2_count() {
            Some(k) if k < 128 => Some(1u128 << k),
            _ => None,
        }
    }

    fn row_signs(row: &BitRow) -> Vec<Sign> {
        row.to_bools().into_iter().map(Sign::from_dashed).collect()
    }

    /// One dashing, free variables set to solid.
    pub fn particular(&self) -> Option<Vec<Sign>> {
        self.consistent().then(|| Self::row_signs(&self.solution.particular))
    }

    /// Basis of sign flips preserving total oddness.
    pub fn nullspace(&self) -> Vec<Vec<Sign>> {
        self.solution.nullspace.iter().map(Self::row_signs).collect()
    }

    /// Every totally odd dashing, in Gray-code order from the particular one.
    pub fn enumerate(&self) -> Result<Vec<Vec<Sign>>> {
        let Some(k) = self.log2_count() else {
            return Ok(Vec::new());
        };
        if k >= 128 || (1u128 << k) > MAX_ENUMERATED_DASHINGS {
            return Err(Error::OutOfRange(format!(
                "2^{k} totally odd dashings exceed the enumeration limit of 2^20"
            )));
        }
        let mut current = self.solution.particular.clone();
        let mut out = vec![Self::row_signs(&current)];
        for step in 1u64..(1u64 << k) {
            current.xor_assign(&self.solution.nullspace[step.trailing_zeros() as usize]);
            out.push(Self::row_signs(&current));
        }
        Ok(out)
    }
}

pub fn solve_dashings(g: &ColoredGraph) -> Result<DashingSystem> {
    let perms = quadrilateral_perms(g)?;
    let squares = collect_squares(g, &perms);
    let e = g.edges().len();
    let equations: Vec<(BitRow, bool)> = squares
        .iter()
        .map(|s| {
            let mut row = BitRow::new(e);
            for &id in &s.edges {
                row.set(id, true);
            }
            (row, true)
        })
        .collect();
    let solution = solve_affine(e, &equations);
    Ok(DashingSystem {
        edges: e,
        squares,
        solution,
    })
}

pub fn apply_dashing(g: &ColoredGraph, signs: &[Sign]) -> Result<ColoredGraph> {
    g.with_signs(signs)
}

/// The first totally odd dashing found, or `None` if none exists.
pub fn dash_one(g: &ColoredGraph) -> Result<Option<ColoredGraph>> {
    let sys = solve_dashings(g)?;
    sys.particular().map(|s| g.with_signs(&s)).transpose()
}

/// Triples `(i, j, v)` with `i < j` where the signed permutations fail
/// `S_i S_j v = -S_j S_i v`, plus `(t, t, v)` where `S_t^2 v != v`.
pub fn anticommutation_failures(g: &ColoredGraph) -> Result<Vec<(Color, Color, Vertex)>> {
    let p = g.color_permutations()?;
    let step = |t: Color, (v, s): (Vertex, Sign)| (p.apply(t, v), s * p.sign(t, v));
    let mut out = Vec::new();
    for v in g.vertices() {
        for i in 1..=g.colors() {
            if step(i, step(i, (v, Sign::Plus))) != (v, Sign::Plus) {
                out.push((i, i, v));
            }
            for j in i + 1..=g.colors() {
                let (a, sa) = step(i, step(j, (v, Sign::Plus)));
                let (b, sb) = step(j, step(i, (v, Sign::Plus)));
                if a != b || sa != sb.flipped() {
                    out.push((i, j, v));
                }
            }
        }
    }
    Ok(out)
}
