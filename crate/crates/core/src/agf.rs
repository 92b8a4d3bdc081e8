//! Adinkra Graph Format: a line-oriented text encoding of [`ColoredGraph`].
//!
//! ```text
//! # comment
//! n 4
//! colors 2
//! parity bfbf
//! height 1 0
//! height 2 1
//! height 3 0
//! height 4 1
//! e 1 2 1 +
//! e 3 4 1 -
//! e 1 4 2
//! e 2 3 2 +
//! ```
//!
//! `serialize` writes the canonical form: header lines, heights by vertex,
//! then edges sorted by `(color, u, v)` with an explicit sign.

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, GraphBuilder, Parity, Sign};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_num<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| perr(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| perr(line, format!("invalid {what} {tok:?}")))
}

pub fn parse(text: &str) -> Result<ColoredGraph> {
    let mut n: Option<usize> = None;
    let mut colors: Option<usize> = None;
    let mut parity: Option<Vec<Parity>> = None;
    let mut heights: Vec<(usize, usize, i64)> = Vec::new();
    let mut edges: Vec<(usize, usize, usize, usize, Sign)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        let key = toks.next().unwrap();
        match key {
            "n" => {
                if n.is_some() {
                    return Err(perr(lineno, "duplicate `n` line"));
                }
                n = Some(parse_num(toks.next(), lineno, "vertex count")?);
            }
            "colors" => {
                if colors.is_some() {
                    return Err(perr(lineno, "duplicate `colors` line"));
                }
                colors = Some(parse_num(toks.next(), lineno, "color count")?);
            }
            "parity" => {
                if parity.is_some() {
                    return Err(perr(lineno, "duplicate `parity` line"));
                }
                let word = toks.next().ok_or_else(|| perr(lineno, "missing parity string"))?;
                let p = word
                    .chars()
                    .map(|c| match c {
                        'b' => Ok(Parity::Boson),
                        'f' => Ok(Parity::Fermion),
                        _ => Err(perr(lineno, format!("parity character {c:?} is not b or f"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                parity = Some(p);
            }
            "height" => {
                let v = parse_num(toks.next(), lineno, "vertex")?;
                let h = parse_num(toks.next(), lineno, "height")?;
                heights.push((lineno, v, h));
            }
            "e" => {
                let u = parse_num(toks.next(), lineno, "vertex")?;
                let v = parse_num(toks.next(), lineno, "vertex")?;
                let c = parse_num(toks.next(), lineno, "color")?;
                let sign = match toks.next() {
                    None | Some("+") => Sign::Plus,
                    Some("-") => Sign::Minus,
                    Some(t) => return Err(perr(lineno, format!("invalid sign {t:?}"))),
                };
                if u == v {
                    return Err(perr(lineno, format!("loop at vertex {u}")));
                }
                edges.push((lineno, u, v, c, sign));
            }
            other => return Err(perr(lineno, format!("unknown directive {other:?}"))),
        }
        if let Some(extra) = toks.next() {
            return Err(perr(lineno, format!("unexpected token {extra:?}")));
        }
    }

    let n = n.ok_or_else(|| perr(0, "missing `n` line"))?;
    let colors = colors.ok_or_else(|| perr(0, "missing `colors` line"))?;
    if let Some(p) = &parity {
        if p.len() != n {
            return Err(perr(0, format!("parity string has {} entries, n = {n}", p.len())));
        }
    }
    let heights = if heights.is_empty() {
        None
    } else {
        let mut h: Vec<Option<i64>> = vec![None; n];
        for &(lineno, v, value) in &heights {
            if v == 0 || v > n {
                return Err(perr(lineno, format!("vertex {v} outside 1..={n}")));
            }
            if h[v - 1].replace(value).is_some() {
                return Err(perr(lineno, format!("second height for vertex {v}")));
            }
        }
        if let Some(missing) = h.iter().position(Option::is_none) {
            return Err(perr(0, format!("no height given for vertex {}", missing + 1)));
        }
        Some(h.into_iter().map(Option::unwrap).collect())
    };

    let mut b = GraphBuilder::new(n, colors).parity(parity).heights(heights);
    for &(lineno, u, v, c, sign) in &edges {
        if u == 0 || v == 0 || u > n || v > n {
            return Err(perr(lineno, format!("edge {u}-{v} outside 1..={n}")));
        }
        if c == 0 || c > colors {
            return Err(perr(lineno, format!("color {c} outside 1..={colors}")));
        }
        b.push_edge(u, v, c, sign);
    }
    b.build().map_err(|e| perr(0, e.to_string()))
}

pub fn serialize(g: &ColoredGraph) -> String {
    let mut s = String::new();
    s.push_str(&format!("n {}\ncolors {}\n", g.n(), g.colors()));
    if let Some(p) = g.parity() {
        let word: String = p
            .iter()
            .map(|x| match x {
                Parity::Boson => 'b',
                Parity::Fermion => 'f',
            })
            .collect();
        s.push_str(&format!("parity {word}\n"));
    }
    if let Some(h) = g.heights() {
        for (i, value) in h.iter().enumerate() {
            s.push_str(&format!("height {} {}\n", i + 1, value));
        }
    }
    for e in g.edges() {
        let sign = if e.sign.is_dashed() { '-' } else { '+' };
        s.push_str(&format!("e {} {} {} {}\n", e.u, e.v, e.color, sign));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQUARE: &str = "\
# bicolor square
n 4
colors 2
parity bfbf
e 2 1 1
e 3 4 1 -
e 1 4 2 +   # trailing comment
e 2 3 2
";

    #[test]
    fn parse_and_canonicalize() {
        let g = parse(SQUARE).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges().len(), 4);
        assert_eq!(
            serialize(&g),
            "n 4\ncolors 2\nparity bfbf\ne 1 2 1 +\ne 3 4 1 -\ne 1 4 2 +\ne 2 3 2 +\n"
        );
        assert_eq!(parse(&serialize(&g)).unwrap(), g);
    }

    #[test]
    fn heights_round_trip() {
        let text = "n 2\ncolors 1\nheight 2 1\nheight 1 0\ne 1 2 1\n";
        let g = parse(text).unwrap();
        assert_eq!(g.heights(), Some(&[0, 1][..]));
        assert_eq!(serialize(&g), "n 2\ncolors 1\nheight 1 0\nheight 2 1\ne 1 2 1 +\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let loop_line = "n 4\ncolors 1\ne 3 3 1\n";
        assert!(matches!(parse(loop_line), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse("n 4\ncolors 1\ne 1 2 2\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse("n 4\ncolors 1\ne 1 2 1 *\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse("n 4\nbogus\n"), Err(Error::Parse { line: 2, .. })));
        assert!(parse("colors 1\n").is_err());
        assert!(parse("n 2\ncolors 1\nparity bbb\n").is_err());
        assert!(parse("n 2\ncolors 1\nheight 1 0\n").is_err());
        assert!(parse("n 3\ncolors 1\ne 1 2 1\ne 2 1 1\n").is_err());
    }
}
