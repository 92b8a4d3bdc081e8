//! Adjacency lists as Latin rectangles: one column per vertex, one row per
//! color, entry `(t, v)` is `s_t(v)`, negated when the edge is dashed.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, GraphBuilder, Parity, Sign, Vertex};
use crate::heights::HeightAssignment;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatinAdjacencyList {
    /// Column labels, in display order.
    pub columns: Vec<Vertex>,
    /// `rows[t - 1][c]`: signed neighbor of `columns[c]` along color `t`.
    pub rows: Vec<Vec<i64>>,
    /// Per-column height, when the graph has heights.
    pub heights: Option<Vec<i64>>,
    /// Per-column parity, when the graph has one.
    pub parity: Option<Vec<Parity>>,
}

/// Properties read directly off the rectangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatinProperties {
    /// Each row permutes the labels and each column has distinct entries.
    pub latin: bool,
    /// `w` in the column for `v` iff `v` in the column for `w`, same row and sign.
    pub adjacency_ok: bool,
    pub connected: bool,
    /// Column partition `C_1, C_2` where entries of one block are labels of the other.
    pub bipartite_blocks: Option<(Vec<Vertex>, Vec<Vertex>)>,
    /// Row pairs `(i, j)` whose entries close up into rectangles.
    pub quadrilateral_pairs: Vec<(usize, usize)>,
    pub quadrilateral: bool,
}

impl LatinAdjacencyList {
    pub fn colors(&self) -> usize {
        self.rows.len()
    }

    /// Column indices `c` where a vertical rule goes before column `c`:
    /// where the height changes, or the parity when there are no heights.
    pub fn separators(&self) -> Vec<usize> {
        let changes = |keys: &[i64]| -> Vec<usize> {
            (1..keys.len()).filter(|&c| keys[c] != keys[c - 1]).collect()
        };
        if let Some(h) = &self.heights {
            changes(h)
        } else if let Some(p) = &self.parity {
            let keys: Vec<i64> = p.iter().map(|&x| (x == Parity::Fermion) as i64).collect();
            changes(&keys)
        } else {
            Vec::new()
        }
    }

    fn column_index(&self) -> HashMap<Vertex, usize> {
        self.columns.iter().enumerate().map(|(c, &v)| (v, c)).collect()
    }

    fn check_shape(&self) -> Result<HashMap<Vertex, usize>> {
        let index = self.column_index();
        if index.len() != self.columns.len() {
            return Err(Error::MalformedRectangle("repeated column label".into()));
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.len() != self.columns.len() {
                return Err(Error::MalformedRectangle(format!(
                    "row {} has {} entries for {} columns",
                    r + 1,
                    row.len(),
                    self.columns.len()
                )));
            }
            if let Some(&x) = row.iter().find(|x| !index.contains_key(&(x.unsigned_abs() as usize))) {
                return Err(Error::MalformedRectangle(format!(
                    "row {} entry {x} is not a column label",
                    r + 1
                )));
            }
        }
        for (name, len) in [
            ("heights", self.heights.as_ref().map(Vec::len)),
            ("parity", self.parity.as_ref().map(Vec::len)),
        ] {
            if len.is_some_and(|l| l != self.columns.len()) {
                return Err(Error::MalformedRectangle(format!("{name} length differs from column count")));
            }
        }
        Ok(index)
    }

    /// Aligned plain text: a header of column labels, then one row per color,
    /// with `|` between level blocks.
    pub fn render_text(&self, row_names: &[String]) -> String {
        let seps = self.separators();
        let header_cells: Vec<String> = self.columns.iter().map(|v| v.to_string()).collect();
        let body: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect())
            .collect();
        let width = header_cells
            .iter()
            .chain(body.iter().flatten())
            .map(String::len)
            .max()
            .unwrap_or(1);
        let names: Vec<String> = (0..self.rows.len()).map(|r| row_name(row_names, r)).collect();
        let name_width = names.iter().map(String::len).chain([1]).max().unwrap();

        let line = |name: &str, cells: &[String]| {
            let mut s = format!("{name:<name_width$}");
            for (c, cell) in cells.iter().enumerate() {
                if seps.contains(&c) {
                    s.push_str(" |");
                }
                s.push_str(&format!(" {cell:>width$}"));
            }
            s.push('\n');
            s
        };
        let mut out = line("V", &header_cells);
        for (name, cells) in names.iter().zip(&body) {
            out.push_str(&line(name, cells));
        }
        out
    }

    pub fn render_csv(&self, row_names: &[String]) -> String {
        let mut out = String::from("V");
        for v in &self.columns {
            out.push_str(&format!(",{v}"));
        }
        out.push('\n');
        for (r, row) in self.rows.iter().enumerate() {
            out.push_str(&row_name(row_names, r));
            for x in row {
                out.push_str(&format!(",{x}"));
            }
            out.push('\n');
        }
        out
    }
}

fn row_name(names: &[String], r: usize) -> String {
    names.get(r).cloned().unwrap_or_else(|| (r + 1).to_string())
}

/// Columns in `(height, id)` order when heights exist, else by id.
pub fn to_latin(g: &ColoredGraph) -> Result<LatinAdjacencyList> {
    let perms = g.color_permutations()?;
    let columns: Vec<Vertex> = match g.heights() {
        Some(h) => HeightAssignment::new(g, h.to_vec())?.lexicographic_order(),
        None => g.vertices().collect(),
    };
    let rows = (1..=g.colors())
        .map(|t| {
            columns
                .iter()
                .map(|&v| perms.apply(t, v) as i64 * perms.sign(t, v).value())
                .collect()
        })
        .collect();
    Ok(LatinAdjacencyList {
        heights: g.heights().map(|h| columns.iter().map(|&v| h[v - 1]).collect()),
        parity: g.parity().map(|p| columns.iter().map(|&v| p[v - 1]).collect()),
        columns,
        rows,
    })
}

pub fn latin_properties(l: &LatinAdjacencyList) -> Result<LatinProperties> {
    let index = l.check_shape()?;
    let n = l.columns.len();
    let at = |r: usize, v: Vertex| l.rows[r][index[&v]];
    let mag = |x: i64| x.unsigned_abs() as usize;

    let rows_permute = l.rows.iter().all(|row| {
        let mut seen = vec![false; n];
        row.iter().all(|&x| !std::mem::replace(&mut seen[index[&mag(x)]], true))
    });
    let columns_distinct = (0..n).all(|c| {
        let mut col: Vec<usize> = l.rows.iter().map(|row| mag(row[c])).collect();
        col.push(l.columns[c]);
        col.sort_unstable();
        col.windows(2).all(|w| w[0] != w[1])
    });

    let adjacency_ok = (0..l.rows.len()).all(|r| {
        l.columns.iter().enumerate().all(|(c, &v)| {
            let x = l.rows[r][c];
            let back = at(r, mag(x));
            mag(back) == v && back.signum() == x.signum()
        })
    });

    let mut comp = vec![usize::MAX; n];
    let mut components = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = components;
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for row in &l.rows {
                let d = index[&mag(row[c])];
                if comp[d] == usize::MAX {
                    comp[d] = components;
                    queue.push_back(d);
                }
            }
        }
        components += 1;
    }
    let connected = components <= 1;

    let bipartite_blocks = {
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut ok = true;
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(c) = queue.pop_front() {
                let s = side[c].unwrap();
                for row in &l.rows {
                    let d = index[&mag(row[c])];
                    match side[d] {
                        None => {
                            side[d] = Some(!s);
                            queue.push_back(d);
                        }
                        Some(t) if t == s => ok = false,
                        _ => {}
                    }
                }
            }
        }
        ok.then(|| {
            let pick = |b: bool| {
                let mut v: Vec<Vertex> = (0..n).filter(|&c| side[c] == Some(b)).map(|c| l.columns[c]).collect();
                v.sort_unstable();
                v
            };
            (pick(false), pick(true))
        })
    };

    let mut quadrilateral_pairs = Vec::new();
    for i in 0..l.rows.len() {
        for j in i + 1..l.rows.len() {
            // s_j s_i v = s_i s_j v for every column v
            let closes = l.columns.iter().all(|&v| {
                let a = mag(at(i, v));
                let b = mag(at(j, v));
                mag(at(j, a)) == mag(at(i, b))
            });
            if closes {
                quadrilateral_pairs.push((i + 1, j + 1));
            }
        }
    }
    let pairs = l.rows.len() * l.rows.len().saturating_sub(1) / 2;
    let quadrilateral = quadrilateral_pairs.len() == pairs;

    Ok(LatinProperties {
        latin: rows_permute && columns_distinct,
        adjacency_ok,
        connected,
        bipartite_blocks,
        quadrilateral_pairs,
        quadrilateral,
    })
}

/// Rebuilds the graph; column labels must be exactly `1..=n`.
pub fn from_latin(l: &LatinAdjacencyList) -> Result<ColoredGraph> {
    let index = l.check_shape()?;
    let n = l.columns.len();
    if (1..=n).any(|v| !index.contains_key(&v)) {
        return Err(Error::MalformedRectangle(format!("column labels must be 1..={n}")));
    }
    let mut b = GraphBuilder::new(n, l.colors());
    for (r, row) in l.rows.iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            let v = l.columns[c];
            let w = x.unsigned_abs() as usize;
            let back = row[index[&w]];
            if back.unsigned_abs() as usize != v || back.signum() != x.signum() {
                return Err(Error::Asymmetric(format!(
                    "row {} has {x} in column {v} but {back} in column {w}",
                    r + 1
                )));
            }
            if v < w {
                b.push_edge(v, w, r + 1, Sign::from_dashed(x < 0));
            }
        }
    }
    let by_vertex = |values: &[i64]| {
        let mut out = vec![0; n];
        for (c, &v) in l.columns.iter().enumerate() {
            out[v - 1] = values[c];
        }
        out
    };
    let heights = l.heights.as_deref().map(by_vertex);
    let parity = l.parity.as_ref().map(|p| {
        let mut out = vec![Parity::Boson; n];
        for (c, &v) in l.columns.iter().enumerate() {
            out[v - 1] = p[c];
        }
        out
    });
    b.parity(parity).heights(heights).build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::fixtures::*;
    use crate::structure::is_quadrilateral;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn k4_table() {
        let g = build_complete_even(2).unwrap();
        let l = to_latin(&g).unwrap();
        assert_eq!(l.rows, [[4, 3, 2, 1], [3, 4, 1, 2], [2, 1, 4, 3]]);
        assert_eq!(
            l.render_text(&names(&["Black", "Blue", "Red"])),
            "V     1 2 3 4\nBlack 4 3 2 1\nBlue  3 4 1 2\nRed   2 1 4 3\n"
        );
        let p = latin_properties(&l).unwrap();
        assert!(p.latin && p.adjacency_ok && p.connected && p.quadrilateral);
        assert_eq!(p.bipartite_blocks, None);
        assert_eq!(from_latin(&l).unwrap(), g);
    }

    #[test]
    fn twisted_cube_table() {
        let l = to_latin(&q3_twisted()).unwrap();
        assert_eq!(l.rows[0], [6, 5, 7, 8, 2, 1, 3, 4]);
        assert_eq!(l.separators(), [4]);
        let p = latin_properties(&l).unwrap();
        assert_eq!(p.bipartite_blocks, Some((vec![1, 2, 3, 4], vec![5, 6, 7, 8])));
        assert_eq!(p.quadrilateral_pairs, [(1, 2)]);
        assert!(!p.quadrilateral);
        assert_eq!(
            l.render_csv(&[]),
            "V,1,2,3,4,5,6,7,8\n1,6,5,7,8,2,1,3,4\n2,5,6,8,7,1,2,4,3\n3,7,8,5,6,3,4,1,2\n"
        );
    }

    #[test]
    fn signed_table_with_levels() {
        let g = n4_with_heights(HEIGHTS_242);
        let l = to_latin(&g).unwrap();
        assert_eq!(l.rows[0], [4, -5, 7, 1, -2, -8, 3, -6]);
        assert_eq!(l.rows[3], [-6, 3, 2, -8, 7, -1, 5, -4]);
        assert_eq!(l.separators(), [2, 6]);
        let text = l.render_text(&names(&["Black", "Blue", "Red", "Green"]));
        assert_eq!(text.lines().nth(1).unwrap(), "Black  4 -5 |  7  1 -2 -8 |  3 -6");
        assert_eq!(from_latin(&l).unwrap(), g);
    }

    #[test]
    fn asymmetric_table_is_rejected() {
        let l = LatinAdjacencyList {
            columns: vec![1, 2, 3, 4],
            rows: vec![vec![3, 4, 2, 1]],
            heights: None,
            parity: None,
        };
        assert!(matches!(from_latin(&l), Err(Error::Asymmetric(_))));
        assert!(!latin_properties(&l).unwrap().adjacency_ok);
        let bad = LatinAdjacencyList {
            rows: vec![vec![9, 1, 1, 1]],
            ..l
        };
        assert!(matches!(latin_properties(&bad), Err(Error::MalformedRectangle(_))));
    }

    #[test]
    fn quadrilateral_agrees_with_structure() {
        let graphs = [
            build_complete_even(2).unwrap(),
            build_complete_even(3).unwrap(),
            build_complete_bipartite(4).unwrap(),
            build_hypercube(4).unwrap(),
            build_folded_cube(5).unwrap(),
            build_bicolor_cycle(5).unwrap(),
            q3_twisted(),
        ];
        for g in &graphs {
            let p = latin_properties(&to_latin(g).unwrap()).unwrap();
            assert_eq!(p.quadrilateral, is_quadrilateral(g).unwrap());
            assert!(p.latin && p.adjacency_ok);
            assert_eq!(p.connected, g.is_connected());
            assert_eq!(p.bipartite_blocks.is_some(), g.is_bipartite());
            assert_eq!(&from_latin(&to_latin(g).unwrap()).unwrap(), g);
        }
    }
}
