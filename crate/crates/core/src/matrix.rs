//! The color-weighted adjacency matrix `A_c = sum_t t * P_{s_t}`, a symmetric
//! semi-magic square with line sum `N(N+1)/2`. Dashed edges carry `-t`.

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, GraphBuilder, Parity, Sign, Vertex};
use crate::heights::HeightAssignment;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiMagicMatrix {
    pub colors: usize,
    /// Vertex for each row and column index.
    pub order: Vec<Vertex>,
    pub entries: Vec<Vec<i64>>,
    pub heights: Option<Vec<i64>>,
    pub parity: Option<Vec<Parity>>,
}

impl SemiMagicMatrix {
    pub fn n(&self) -> usize {
        self.order.len()
    }

    /// `N(N+1)/2`.
    pub fn line_sum(&self) -> i64 {
        (self.colors * (self.colors + 1) / 2) as i64
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|x| x.abs()).sum())
            .collect()
    }

    pub fn column_sums(&self) -> Vec<i64> {
        (0..self.n())
            .map(|c| self.entries.iter().map(|row| row[c].abs()).sum())
            .collect()
    }

    /// Every unsigned row and column sums to the line sum.
    pub fn is_semi_magic(&self) -> bool {
        let l = self.line_sum();
        self.row_sums().iter().chain(&self.column_sums()).all(|&s| s == l)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n()).all(|r| (0..self.n()).all(|c| self.entries[r][c] == self.entries[c][r]))
    }

    pub fn zero_diagonal(&self) -> bool {
        (0..self.n()).all(|i| self.entries[i][i] == 0)
    }

    /// Nonzero magnitudes set to 1.
    pub fn plain_adjacency(&self) -> Vec<Vec<u8>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|&x| (x != 0) as u8).collect())
            .collect()
    }

    /// The 0/1 permutation matrix of color `t`.
    pub fn color_class(&self, t: Color) -> Vec<Vec<u8>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|&x| (x.unsigned_abs() as usize == t) as u8).collect())
            .collect()
    }

    /// Block boundaries, as for the Latin rectangle.
    pub fn separators(&self) -> Vec<usize> {
        let keys: Vec<i64> = match (&self.heights, &self.parity) {
            (Some(h), _) => h.clone(),
            (None, Some(p)) => p.iter().map(|&x| (x == Parity::Fermion) as i64).collect(),
            (None, None) => return Vec::new(),
        };
        (1..keys.len()).filter(|&c| keys[c] != keys[c - 1]).collect()
    }

    fn cell(x: i64, symbolic: bool) -> String {
        match (symbolic, x) {
            (_, 0) | (false, _) => x.to_string(),
            (true, x) if x < 0 => format!("-x{}", -x),
            (true, x) => format!("x{x}"),
        }
    }

    /// Aligned text with block rules; `symbolic` writes colors as `x1, x2, ...`.
    pub fn render_text(&self, symbolic: bool) -> String {
        let seps = self.separators();
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|&x| Self::cell(x, symbolic)).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let mut lines: Vec<String> = Vec::new();
        for (r, row) in cells.iter().enumerate() {
            if seps.contains(&r) {
                let len = lines.last().map_or(0, String::len);
                lines.push("-".repeat(len));
            }
            let mut s = String::new();
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    s.push(' ');
                }
                if seps.contains(&c) {
                    s.push_str("| ");
                }
                s.push_str(&format!("{cell:>width$}"));
            }
            lines.push(s);
        }
        lines.iter().map(|l| format!("{l}\n")).collect()
    }

    pub fn render_csv(&self, symbolic: bool) -> String {
        self.entries
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|&x| Self::cell(x, symbolic)).collect();
                format!("{}\n", cells.join(","))
            })
            .collect()
    }

    pub fn to_graph(&self) -> Result<ColoredGraph> {
        let n = self.n();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.order.iter().enumerate() {
            if v == 0 || v > n || pos[v - 1] != usize::MAX {
                return Err(Error::MalformedRectangle(format!("row order must permute 1..={n}")));
            }
            pos[v - 1] = i;
        }
        let mut b = GraphBuilder::new(n, self.colors);
        for r in 0..n {
            for c in 0..n {
                let x = self.entries[r][c];
                if x != self.entries[c][r] {
                    return Err(Error::Asymmetric(format!(
                        "entry ({}, {}) is {x} but ({}, {}) is {}",
                        self.order[r], self.order[c], self.order[c], self.order[r], self.entries[c][r]
                    )));
                }
                if x != 0 && self.order[r] < self.order[c] {
                    b.push_edge(self.order[r], self.order[c], x.unsigned_abs() as usize, Sign::from_dashed(x < 0));
                }
            }
        }
        let by_vertex = |vals: &[i64]| (1..=n).map(|v| vals[pos[v - 1]]).collect::<Vec<_>>();
        let heights = self.heights.as_deref().map(by_vertex);
        let parity = self
            .parity
            .as_ref()
            .map(|p| (1..=n).map(|v| p[pos[v - 1]]).collect());
        b.parity(parity).heights(heights).build()
    }
}

/// Rows and columns in `(height, id)` order when heights exist, else by id.
pub fn to_matrix(g: &ColoredGraph) -> Result<SemiMagicMatrix> {
    let perms = g.color_permutations()?;
    let order: Vec<Vertex> = match g.heights() {
        Some(h) => HeightAssignment::new(g, h.to_vec())?.lexicographic_order(),
        None => g.vertices().collect(),
    };
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v - 1] = i;
    }
    let mut entries = vec![vec![0i64; g.n()]; g.n()];
    for (r, &v) in order.iter().enumerate() {
        for t in 1..=g.colors() {
            entries[r][pos[perms.apply(t, v) - 1]] = t as i64 * perms.sign(t, v).value();
        }
    }
    Ok(SemiMagicMatrix {
        colors: g.colors(),
        heights: g.heights().map(|h| order.iter().map(|&v| h[v - 1]).collect()),
        parity: g.parity().map(|p| order.iter().map(|&v| p[v - 1]).collect()),
        order,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::fixtures::*;

    #[test]
    fn k4_matrix() {
        let m = to_matrix(&build_complete_even(2).unwrap()).unwrap();
        assert_eq!(m.entries, [[0, 3, 2, 1], [3, 0, 1, 2], [2, 1, 0, 3], [1, 2, 3, 0]]);
        assert_eq!(m.line_sum(), 6);
        assert!(m.is_semi_magic() && m.is_symmetric() && m.zero_diagonal());
        assert_eq!(m.render_text(false), "0 3 2 1\n3 0 1 2\n2 1 0 3\n1 2 3 0\n");
    }

    #[test]
    fn twisted_cube_matrix_blocks() {
        let m = to_matrix(&q3_twisted()).unwrap();
        assert_eq!(m.entries[0], [0, 0, 0, 0, 2, 1, 3, 0]);
        assert_eq!(m.separators(), [4]);
        let text = m.render_text(false);
        assert_eq!(text.lines().next().unwrap(), "0 0 0 0 | 2 1 3 0");
        assert_eq!(text.lines().nth(4).unwrap(), "-".repeat(17));
    }

    #[test]
    fn symbolic_signed_matrix() {
        let m = to_matrix(&n4_with_heights(HEIGHTS_242)).unwrap();
        assert_eq!(m.entries[0], [0, 0, -3, 1, 2, -4, 0, 0]);
        assert_eq!(m.render_csv(true).lines().next().unwrap(), "0,0,-x3,x1,x2,-x4,0,0");
        assert!(m.is_semi_magic() && m.is_symmetric());
        assert_eq!(m.separators(), [2, 6]);
    }

    #[test]
    fn decompositions_and_round_trip() {
        for g in [
            build_hypercube(4).unwrap(),
            build_complete_even(4).unwrap(),
            build_complete_bipartite(5).unwrap(),
            n4_with_heights(HEIGHTS_341),
        ] {
            let m = to_matrix(&g).unwrap();
            assert!(m.is_semi_magic() && m.is_symmetric() && m.zero_diagonal());
            for t in 1..=g.colors() {
                let p = m.color_class(t);
                for r in 0..m.n() {
                    assert_eq!(p[r].iter().map(|&x| x as usize).sum::<usize>(), 1);
                    assert_eq!(p[r][r], 0);
                }
            }
            let plain = m.plain_adjacency();
            for e in g.edges() {
                let (r, c) = (m.order.iter().position(|&x| x == e.u).unwrap(), m.order.iter().position(|&x| x == e.v).unwrap());
                assert_eq!(plain[r][c], 1);
            }
            assert_eq!(m.to_graph().unwrap(), g);
        }
    }

    #[test]
    fn asymmetric_matrix_is_rejected() {
        let mut m = to_matrix(&build_hypercube(2).unwrap()).unwrap();
        m.entries[0][1] = -1;
        assert!(matches!(m.to_graph(), Err(Error::Asymmetric(_))));
    }
}
