//! Bicolor-cycle structure of a regular coloring and what follows from it:
//! the `m_ij` table, the quadrilateral property, perfect 1-factorizations,
//! the exchange group generated by the color involutions, walk reduction and
//! recovery of the code `C` with `G = Q_N / C`.

use std::collections::{HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{rngs::StdRng, SeedableRng};

use crate::code::{BitVector, LinearCode, MAX_LENGTH};
use crate::error::{Error, Result};
use crate::graph::{Color, ColorPermutations, ColoredGraph, Vertex};

pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// Upper bound on stored permutation entries during group closure (4 bytes each).
const GROUP_ENTRY_BUDGET: usize = 1 << 28;

/// Cycles of the subgraph `G_ij` spanned by colors `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicolorPair {
    pub i: Color,
    pub j: Color,
    /// Cycle lengths `2 l_r`, ascending.
    pub cycle_lengths: Vec<usize>,
    /// `lcm(l_1, ..., l_t)`.
    pub m: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicolorReport {
    pub n: usize,
    pub colors: usize,
    pub pairs: Vec<BicolorPair>,
}

impl BicolorReport {
    pub fn pair(&self, i: Color, j: Color) -> &BicolorPair {
        let (i, j) = (i.min(j), i.max(j));
        self.pairs
            .iter()
            .find(|p| p.i == i && p.j == j)
            .expect("color pair out of range")
    }

    pub fn m(&self, i: Color, j: Color) -> usize {
        if i == j {
            1
        } else {
            self.pair(i, j).m
        }
    }

    pub fn is_quadrilateral(&self) -> bool {
        self.pairs.iter().all(|p| p.m == 2)
    }

    pub fn is_perfect_1factorization(&self) -> bool {
        self.pairs.iter().all(|p| p.cycle_lengths == [self.n])
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub fn bicolor_report(g: &ColoredGraph) -> Result<BicolorReport> {
    let perms = g.color_permutations()?;
    Ok(bicolor_report_of(&perms))
}

pub(crate) fn bicolor_report_of(perms: &ColorPermutations) -> BicolorReport {
    let n = perms.n();
    let colors = perms.colors();
    let mut pairs = Vec::new();
    for i in 1..=colors {
        for j in i + 1..=colors {
            let mut seen = vec![false; n];
            let mut lengths = Vec::new();
            for start in 1..=n {
                if seen[start - 1] {
                    continue;
                }
                let mut len = 0;
                let mut v = start;
                loop {
                    seen[v - 1] = true;
                    let w = perms.apply(i, v);
                    seen[w - 1] = true;
                    v = perms.apply(j, w);
                    len += 2;
                    if v == start {
                        break;
                    }
                }
                lengths.push(len);
            }
            lengths.sort_unstable();
            let m = lengths.iter().fold(1, |acc, &l| lcm(acc, l / 2));
            pairs.push(BicolorPair {
                i,
                j,
                cycle_lengths: lengths,
                m,
            });
        }
    }
    BicolorReport { n, colors, pairs }
}

/// Every two-color subgraph is a disjoint union of 4-cycles.
pub fn is_quadrilateral(g: &ColoredGraph) -> Result<bool> {
    Ok(bicolor_report(g)?.is_quadrilateral())
}

/// Every two-color subgraph is a single Hamiltonian cycle.
pub fn is_perfect_1factorization(g: &ColoredGraph) -> Result<bool> {
    Ok(bicolor_report(g)?.is_perfect_1factorization())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeGroupSummary {
    /// Group order, `None` when closure stopped at the cap.
    pub order: Option<usize>,
    pub cap: usize,
    pub abelian: bool,
    pub elementary_abelian_2: bool,
    /// Largest element order, known only when the closure completed.
    pub max_element_order: Option<usize>,
    /// Order `2m` with an element of order `m`; with involution generators
    /// this is the dihedral signature.
    pub dihedral: bool,
}

fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    // (a ∘ b)(x) = a(b(x)), zero-based
    b.iter().map(|&x| a[x as usize]).collect()
}

fn element_order(p: &[u32]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut order = 1;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        order = lcm(order, len);
    }
    order
}

/// Closure of `{s_t}` under composition by breadth-first products, stopping
/// after `cap` elements.
pub fn exchange_group(g: &ColoredGraph, cap: usize) -> Result<ExchangeGroupSummary> {
    let perms = g.color_permutations()?;
    let n = perms.n();
    let gens: Vec<Vec<u32>> = (1..=perms.colors())
        .map(|t| perms.one_line(t).iter().map(|&v| (v - 1) as u32).collect())
        .collect();

    let abelian = gens
        .iter()
        .enumerate()
        .all(|(a, x)| gens[a + 1..].iter().all(|y| compose(x, y) == compose(y, x)));
    let involutions = gens.iter().all(|x| compose(x, x).iter().enumerate().all(|(i, &v)| i as u32 == v));
    let elementary_abelian_2 = abelian && involutions;

    let limit = cap.min(GROUP_ENTRY_BUDGET / n.max(1)).max(1);
    let identity: Vec<u32> = (0..n as u32).collect();
    let mut elements: HashSet<Vec<u32>> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    let mut complete = true;
    'closure: while let Some(x) = queue.pop_front() {
        for s in &gens {
            let y = compose(s, &x);
            if !elements.contains(&y) {
                if elements.len() >= limit {
                    complete = false;
                    break 'closure;
                }
                elements.insert(y.clone());
                queue.push_back(y);
            }
        }
    }

    let (order, max_element_order, dihedral) = if complete {
        let order = elements.len();
        let orders: HashSet<usize> = elements.iter().map(|p| element_order(p)).collect();
        let max = orders.iter().copied().max();
        let dihedral = order.is_multiple_of(2) && involutions && orders.contains(&(order / 2));
        (Some(order), max, dihedral)
    } else {
        (None, None, false)
    };

    Ok(ExchangeGroupSummary {
        order,
        cap: limit,
        abelian,
        elementary_abelian_2,
        max_element_order,
        dihedral,
    })
}

/// Action of `s_t` on a labeling by positions: if `s_t(i) = j`, the label
/// at position `i` moves to position `j`.
pub fn act_on_labels<T: Clone>(perms: &ColorPermutations, t: Color, labels: &[T]) -> Vec<T> {
    let mut out = labels.to_vec();
    for (i, label) in labels.iter().enumerate() {
        out[perms.apply(t, i + 1) - 1] = label.clone();
    }
    out
}

fn require_quadrilateral(g: &ColoredGraph) -> Result<ColorPermutations> {
    let perms = g.color_permutations()?;
    if !bicolor_report_of(&perms).is_quadrilateral() {
        return Err(Error::NotQuadrilateral);
    }
    if g.colors() > MAX_LENGTH {
        return Err(Error::OutOfRange(format!("{} colors exceed 64", g.colors())));
    }
    Ok(perms)
}

/// Reduces a walk, given as its color sequence from `from`, to the set of
/// colors occurring an odd number of times.
pub fn reduce_walk(g: &ColoredGraph, walk: &[Color], from: Vertex) -> Result<BitVector> {
    let perms = require_quadrilateral(g)?;
    if from == 0 || from > g.n() {
        return Err(Error::InvalidWalk(format!("start vertex {from} not in graph")));
    }
    let mut reduced = BitVector::zero(g.colors())?;
    let mut end = from;
    for &t in walk {
        if t == 0 || t > g.colors() {
            return Err(Error::InvalidWalk(format!("color {t} outside 1..={}", g.colors())));
        }
        end = perms.apply(t, end);
        reduced = reduced.flip(t);
    }
    let short_end = reduced
        .support()
        .into_iter()
        .fold(from, |v, t| perms.apply(t, v));
    debug_assert_eq!(short_end, end);
    Ok(reduced)
}

/// The code `C` with `G = Q_N / C`, read off from cycles through `base`.
///
/// Each vertex is labeled by the colors of its BFS-tree path; every non-tree
/// edge closes a cycle whose reduced color word is a codeword.
pub fn extract_code(g: &ColoredGraph, base: Vertex) -> Result<LinearCode> {
    let perms = require_quadrilateral(g)?;
    if base == 0 || base > g.n() {
        return Err(Error::OutOfRange(format!("base vertex {base} not in graph")));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dim = g.colors();
    let mut label: Vec<Option<u64>> = vec![None; g.n()];
    let mut tree_edge = vec![false; g.edges().len()];
    label[base - 1] = Some(0);
    let mut queue = VecDeque::from([base]);
    while let Some(v) = queue.pop_front() {
        let lv = label[v - 1].unwrap();
        for t in 1..=dim {
            let w = perms.apply(t, v);
            if label[w - 1].is_none() {
                label[w - 1] = Some(lv ^ 1u64 << (dim - t));
                tree_edge[perms.edge_id(t, v)] = true;
                queue.push_back(w);
            }
        }
    }
    let mut words = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        if tree_edge[i] {
            continue;
        }
        let bits = label[e.u - 1].unwrap() ^ label[e.v - 1].unwrap() ^ 1u64 << (dim - e.color);
        words.push(BitVector::from_bits(dim, bits)?);
    }
    LinearCode::span(dim, &words)
}

/// [`extract_code`] from vertex 1 and three seeded random base points; errors
/// if the results disagree.
pub fn extract_code_checked(g: &ColoredGraph, seed: u64) -> Result<(LinearCode, Vec<Vertex>)> {
    let code = extract_code(g, 1)?;
    let mut rng = StdRng::seed_from_u64(seed);
    let all: Vec<Vertex> = g.vertices().collect();
    let bases: Vec<Vertex> = (0..3).map(|_| *all.choose(&mut rng).unwrap()).collect();
    for &b in &bases {
        if extract_code(g, b)? != code {
            return Err(Error::InvalidGraph(format!(
                "extracted code differs between base vertices 1 and {b}"
            )));
        }
    }
    Ok((code, bases))
}
