//! Builders for the colored-graph families: hypercubes with the parallel
//! coloring, their quotients by linear codes, folded cubes, complete graphs
//! `K_2m`, complete bipartite graphs `K_n,n` and bicolor cycles.

use crate::code::{BitVector, LinearCode};
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, GraphBuilder, Parity};

pub const MAX_HYPERCUBE_DIMENSION: usize = 16;
pub const MAX_QUOTIENT_LENGTH: usize = 32;
pub const MAX_QUOTIENT_VERTICES: usize = 1 << 16;

/// `Q_N`: vertices are the bitstrings of length `N` in ascending order
/// (vertex `x + 1` is the word with integer value `x`), an edge `v, v + e_i`
/// has color `i`, and even words are bosons.
pub fn build_hypercube(dim: usize) -> Result<ColoredGraph> {
    if !(1..=MAX_HYPERCUBE_DIMENSION).contains(&dim) {
        return Err(Error::OutOfRange(format!(
            "hypercube dimension must be in 1..={MAX_HYPERCUBE_DIMENSION}, got {dim}"
        )));
    }
    build_quotient(dim, &LinearCode::zero(dim)?)
}

/// Scatters the low bits of `index` into the set positions of `mask`, lowest first.
fn deposit(mut index: u64, mask: u64) -> u64 {
    let mut out = 0;
    let mut m = mask;
    while m != 0 {
        let low = m & m.wrapping_neg();
        if index & 1 == 1 {
            out |= low;
        }
        index >>= 1;
        m &= m - 1;
    }
    out
}

/// Inverse of [`deposit`] on words supported in `mask`.
fn extract(bits: u64, mask: u64) -> u64 {
    let mut out = 0;
    let mut pos = 0;
    let mut m = mask;
    while m != 0 {
        let low = m & m.wrapping_neg();
        if bits & low != 0 {
            out |= 1 << pos;
        }
        pos += 1;
        m &= m - 1;
    }
    out
}

/// `Q_N / C`. Each coset is represented by its lexicographically smallest
/// word; vertices are numbered in increasing order of representative.
/// The parity is set exactly when `C` is even.
pub fn build_quotient(dim: usize, code: &LinearCode) -> Result<ColoredGraph> {
    if !(1..=MAX_QUOTIENT_LENGTH).contains(&dim) {
        return Err(Error::OutOfRange(format!(
            "quotient length must be in 1..={MAX_QUOTIENT_LENGTH}, got {dim}"
        )));
    }
    if code.len() != dim {
        return Err(Error::LengthMismatch(dim, code.len()));
    }
    if let Some(w) = code.low_weight_codeword() {
        return Err(Error::LowWeightCodeword {
            codeword: w.to_string(),
            weight: w.weight(),
        });
    }
    let free_bits = dim - code.dimension();
    if free_bits > MAX_QUOTIENT_VERTICES.trailing_zeros() as usize {
        return Err(Error::OutOfRange(format!(
            "quotient would have 2^{free_bits} vertices (limit {MAX_QUOTIENT_VERTICES})"
        )));
    }
    let full = if dim == 64 { u64::MAX } else { (1u64 << dim) - 1 };
    let free_mask = full & !code.pivot_mask();
    let n = 1usize << free_bits;
    let reps: Vec<u64> = (0..n as u64).map(|i| deposit(i, free_mask)).collect();
    let even = code.classify_by_basis().even;

    let mut b = GraphBuilder::new(n, dim);
    for (idx, &rep) in reps.iter().enumerate() {
        for i in 1..=dim {
            let neighbor = code.reduce_bits(rep ^ (1u64 << (dim - i)));
            let j = extract(neighbor, free_mask) as usize;
            if idx < j {
                b = b.edge(idx + 1, j + 1, i);
            }
        }
    }
    let labels = reps
        .iter()
        .map(|&r| BitVector::from_bits(dim, r).map(|v| v.to_string()))
        .collect::<Result<Vec<_>>>()?;
    let parity = even.then(|| {
        reps.iter()
            .map(|r| {
                if r.count_ones() % 2 == 0 {
                    Parity::Boson
                } else {
                    Parity::Fermion
                }
            })
            .collect()
    });
    b.labels(labels).parity(parity).build()
}

/// `F_N = Q_N / {0...0, 1...1}`.
pub fn build_folded_cube(dim: usize) -> Result<ColoredGraph> {
    if dim < 3 {
        return Err(Error::OutOfRange(format!("folded cube needs N >= 3, got {dim}")));
    }
    build_quotient(dim, &LinearCode::span(dim, &[BitVector::ones(dim)?])?)
}

/// `K_2m` with the rotational 1-factorization.
///
/// Vertices `1..2m-1` sit on a regular `(2m-1)`-gon (polygon position
/// `a` is vertex `a + 1`) and vertex `2m` at the center. Color `t` holds the
/// radial edge to polygon position `t - 1` and every chord `{a, b}` with
/// `a + b = 2(t - 1) mod (2m - 1)`.
pub fn build_complete_even(m: usize) -> Result<ColoredGraph> {
    if m < 2 {
        return Err(Error::OutOfRange(format!("K_2m needs m >= 2, got {m}")));
    }
    let odd = 2 * m - 1;
    let center = 2 * m;
    let mut b = GraphBuilder::new(2 * m, odd);
    for t in 1..=odd {
        let apex = t - 1;
        b = b.edge(center, apex + 1, t);
        for a in 0..odd {
            let partner = (2 * apex + odd - a) % odd;
            if a < partner {
                b = b.edge(a + 1, partner + 1, t);
            }
        }
    }
    b.build()
}

/// `K_n,n`: `v_i` is vertex `i`, `w_j` is vertex `n + j`, and the edge
/// `v_i w_j` has color `((i + j - 2) mod n) + 1`. The `v` side are bosons.
pub fn build_complete_bipartite(n: usize) -> Result<ColoredGraph> {
    if n == 0 {
        return Err(Error::OutOfRange("K_n,n needs n >= 1".into()));
    }
    let mut b = GraphBuilder::new(2 * n, n);
    for i in 1..=n {
        for j in 1..=n {
            b = b.edge(i, n + j, (i + j - 2) % n + 1);
        }
    }
    let labels = (1..=n)
        .map(|i| format!("v{i}"))
        .chain((1..=n).map(|j| format!("w{j}")))
        .collect();
    let parity = (0..2 * n)
        .map(|k| if k < n { Parity::Boson } else { Parity::Fermion })
        .collect();
    b.labels(labels).parity(Some(parity)).build()
}

/// The `2m`-cycle `1, 2, ..., 2m` with `v_1 v_2` colored 1 and colors alternating.
pub fn build_bicolor_cycle(m: usize) -> Result<ColoredGraph> {
    if m < 2 {
        return Err(Error::OutOfRange(format!("bicolor cycle needs m >= 2, got {m}")));
    }
    let n = 2 * m;
    let mut b = GraphBuilder::new(n, 2);
    for i in 1..=n {
        let j = i % n + 1;
        b = b.edge(i, j, if i % 2 == 1 { 1 } else { 2 });
    }
    let parity = (1..=n)
        .map(|i| if i % 2 == 1 { Parity::Boson } else { Parity::Fermion })
        .collect();
    b.parity(Some(parity)).build()
}
