//! Dense GF(2) linear systems `A x = b` over bit-packed rows.

/// A row of bits packed into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut row = Self::new(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                row.set(i, true);
            }
        }
        row
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        let bit = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= bit;
        } else {
            self.words[i / 64] &= !bit;
        }
    }

    pub fn toggle(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

/// Solution set of an affine GF(2) system.
#[derive(Clone, Debug)]
pub struct AffineSolution {
    pub variables: usize,
    pub rank: usize,
    pub consistent: bool,
    /// Solution with every free variable set to zero (all zeros when inconsistent).
    pub particular: BitRow,
    /// One basis vector per free variable.
    pub nullspace: Vec<BitRow>,
}

impl AffineSolution {
    pub fn free_dimension(&self) -> usize {
        self.variables - self.rank
    }
}

/// Gauss-Jordan elimination of `equations`, each a coefficient row paired
/// with its right-hand side.
pub fn solve_affine(variables: usize, equations: &[(BitRow, bool)]) -> AffineSolution {
    // Augmented rows: coefficient bits then the rhs at index `variables`.
    let mut rows: Vec<BitRow> = equations
        .iter()
        .map(|(coeffs, rhs)| {
            debug_assert_eq!(coeffs.len(), variables);
            let mut row = BitRow::new(variables + 1);
            for i in coeffs.ones() {
                row.set(i, true);
            }
            row.set(variables, *rhs);
            row
        })
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    let mut next = 0;
    for col in 0..variables {
        let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(next, found);
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    let rank = pivots.len();
    let consistent = rows[rank..].iter().all(|r| !r.get(variables));

    let mut particular = BitRow::new(variables);
    if consistent {
        for (r, &col) in pivots.iter().enumerate() {
            particular.set(col, rows[r].get(variables));
        }
    }

    let mut is_pivot = vec![false; variables];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let nullspace = (0..variables)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = BitRow::new(variables);
            v.set(f, true);
            for (r, &col) in pivots.iter().enumerate() {
                if rows[r].get(f) {
                    v.set(col, true);
                }
            }
            v
        })
        .collect();

    AffineSolution {
        variables,
        rank,
        consistent,
        particular,
        nullspace,
    }
}
