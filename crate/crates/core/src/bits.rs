//! Dense matrices over GF(2), stored one row per `u32` word.
//!
//! Bit `j` of row word `i` is the entry in row `i`, column `j`. Matrices here
//! are at most 32 columns wide, which covers every representation the crate
//! needs (the widest is the 4x4 block matrix of a 2x2 matrix over `M2(GF(2))`).

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<Vec<u8>>", try_from = "Vec<Vec<u8>>")]
pub struct BitMatrix {
    rows: Vec<u32>,
    cols: usize,
}

impl BitMatrix {
    pub const MAX_COLS: usize = 32;

    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(cols <= Self::MAX_COLS, "at most {} columns", Self::MAX_COLS);
        Self {
            rows: vec![0; rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for (i, row) in m.rows.iter_mut().enumerate() {
            *row = 1 << i;
        }
        m
    }

    /// Builds a matrix from row words. Panics if a word has bits at or above `cols`.
    pub fn from_rows(rows: Vec<u32>, cols: usize) -> Self {
        assert!(cols <= Self::MAX_COLS, "at most {} columns", Self::MAX_COLS);
        let mask = Self::col_mask(cols);
        assert!(
            rows.iter().all(|r| r & !mask == 0),
            "row word wider than {cols} columns"
        );
        Self { rows, cols }
    }

    /// Builds a matrix from nested 0/1 entries.
    pub fn from_entries<R: AsRef<[u8]>>(entries: &[R]) -> Option<Self> {
        let cols = entries.first().map_or(0, |r| r.as_ref().len());
        if cols > Self::MAX_COLS {
            return None;
        }
        let mut rows = Vec::with_capacity(entries.len());
        for row in entries {
            let row = row.as_ref();
            if row.len() != cols {
                return None;
            }
            let mut word = 0u32;
            for (j, &bit) in row.iter().enumerate() {
                match bit {
                    0 => {}
                    1 => word |= 1 << j,
                    _ => return None,
                }
            }
            rows.push(word);
        }
        Some(Self { rows, cols })
    }

    fn col_mask(cols: usize) -> u32 {
        if cols == 32 {
            u32::MAX
        } else {
            (1u32 << cols) - 1
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row_words(&self) -> &[u32] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(j < self.cols);
        self.rows[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(j < self.cols);
        if value {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// Entrywise sum (XOR).
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.nrows(), self.cols), (other.nrows(), other.cols));
        Self {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a ^ b)
                .collect(),
            cols: self.cols,
        }
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.nrows(), "inner dimensions differ");
        let rows = self
            .rows
            .iter()
            .map(|&row| {
                let mut acc = 0u32;
                let mut bits = row;
                while bits != 0 {
                    let k = bits.trailing_zeros() as usize;
                    acc ^= other.rows[k];
                    bits &= bits - 1;
                }
                acc
            })
            .collect();
        Self {
            rows,
            cols: other.cols,
        }
    }

    /// Rank by Gaussian elimination on row words.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let bit = 1u32 << col;
            let Some(pivot) = (rank..rows.len()).find(|&i| rows[i] & bit != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let p = rows[rank];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && *row & bit != 0 {
                    *row ^= p;
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.nrows() == self.cols && self.rank() == self.cols
    }

    /// The block matrix `[[a, b], [c, d]]`; all four blocks must be k x k.
    pub fn block2x2(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let k = a.cols;
        for m in [a, b, c, d] {
            assert_eq!(
                (m.nrows(), m.cols),
                (k, k),
                "blocks must be square and equal"
            );
        }
        let mut rows = Vec::with_capacity(2 * k);
        for i in 0..k {
            rows.push(a.rows[i] | b.rows[i] << k);
        }
        for i in 0..k {
            rows.push(c.rows[i] | d.rows[i] << k);
        }
        Self::from_rows(rows, 2 * k)
    }

    pub fn entries(&self) -> Vec<Vec<u8>> {
        self.rows
            .iter()
            .map(|&r| (0..self.cols).map(|j| (r >> j & 1) as u8).collect())
            .collect()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries().iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            for bit in row {
                write!(f, "{bit}")?;
            }
        }
        write!(f, "]")
    }
}

impl From<BitMatrix> for Vec<Vec<u8>> {
    fn from(m: BitMatrix) -> Self {
        m.entries()
    }
}

impl TryFrom<Vec<Vec<u8>>> for BitMatrix {
    type Error = String;

    fn try_from(entries: Vec<Vec<u8>>) -> Result<Self, Self::Error> {
        BitMatrix::from_entries(&entries).ok_or_else(|| "ragged or non-binary bit matrix".into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_identity_and_zero() {
        assert_eq!(BitMatrix::identity(5).rank(), 5);
        assert_eq!(BitMatrix::zero(4, 4).rank(), 0);
    }

    #[test]
    fn rank_detects_dependent_rows() {
        let m = BitMatrix::from_entries(&[[1, 1, 0], [0, 1, 1], [1, 0, 1]]).unwrap();
        assert_eq!(m.rank(), 2);
        assert!(!m.is_invertible());
    }

    #[test]
    fn product_matches_hand_computation() {
        // [[0,1],[1,0]] * [[0,0],[1,1]] = [[1,1],[0,0]]
        let swap = BitMatrix::from_entries(&[[0, 1], [1, 0]]).unwrap();
        let low = BitMatrix::from_entries(&[[0, 0], [1, 1]]).unwrap();
        let expected = BitMatrix::from_entries(&[[1, 1], [0, 0]]).unwrap();
        assert_eq!(swap.mul(&low), expected);
    }

    #[test]
    fn block_layout() {
        let i = BitMatrix::identity(2);
        let z = BitMatrix::zero(2, 2);
        let b = BitMatrix::block2x2(&z, &i, &i, &z);
        assert_eq!(
            b.entries(),
            vec![
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1],
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0]
            ]
        );
        assert!(b.is_invertible());
    }

    #[test]
    fn count_invertible_4x4() {
        // |GL(4,2)| = (16-1)(16-2)(16-4)(16-8)
        let n = (0u32..1 << 16)
            .filter(|w| {
                let rows = (0..4).map(|i| w >> (4 * i) & 0xF).collect();
                BitMatrix::from_rows(rows, 4).is_invertible()
            })
            .count();
        assert_eq!(n, 15 * 14 * 12 * 8);
    }

    #[test]
    fn serde_round_trip() {
        let m = BitMatrix::from_entries(&[[1, 0], [1, 1]]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, "[[1,0],[1,1]]");
        assert_eq!(serde_json::from_str::<BitMatrix>(&s).unwrap(), m);
        assert!(serde_json::from_str::<BitMatrix>("[[1,2]]").is_err());
    }
}
