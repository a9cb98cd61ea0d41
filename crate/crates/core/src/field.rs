//! Small prime fields `F_p` for `p` in {2, 3, 5, 7} and matrix rank over
//! them by Gaussian elimination. Residues are canonical, `0..p-1`, stored
//! as bytes.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u8,
}

pub const SUPPORTED_PRIMES: [u8; 4] = [2, 3, 5, 7];

impl PrimeField {
    pub fn new(p: u8) -> Result<Self> {
        if !SUPPORTED_PRIMES.contains(&p) {
            return Err(Error::UnsupportedPrime { p });
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u8 {
        self.p
    }

    pub fn is_residue(&self, v: u8) -> bool {
        v < self.p
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        let s = a as u16 + b as u16;
        (s % self.p as u16) as u8
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        let s = a as i16 - b as i16;
        s.rem_euclid(self.p as i16) as u8
    }

    pub fn neg(&self, a: u8) -> u8 {
        if a == 0 { 0 } else { self.p - a }
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    /// Multiplicative inverse of a nonzero residue, via Fermat.
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "inverse of zero");
        let mut acc = 1u8;
        for _ in 0..(self.p - 2) {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn reduce(&self, v: i64) -> u8 {
        v.rem_euclid(self.p as i64) as u8
    }
}

/// Rank of a dense matrix over `F_p`; the matrix is consumed row by row.
#[allow(clippy::needless_range_loop)] // two rows are indexed at once
pub fn matrix_rank(field: &PrimeField, mut rows: Vec<Vec<u8>>) -> u32 {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]);
        for v in rows[rank].iter_mut() {
            *v = field.mul(*v, inv);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in col..ncols {
                    let delta = field.mul(factor, rows[rank][c]);
                    rows[r][c] = field.sub(rows[r][c], delta);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank as u32
}
