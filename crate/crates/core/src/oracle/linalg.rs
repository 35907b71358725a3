//! Exact rank over `Z/p` (sparse elimination) and over `Q` (dense, small only).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::ComputeError;

/// A prime modulus below `2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldPrime(u64);

impl FieldPrime {
    pub const DEFAULT: FieldPrime = FieldPrime(32003);

    pub fn new(p: u64) -> Result<Self, ComputeError> {
        if !(2..1 << 32).contains(&p) || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(ComputeError::NotPrime(p));
        }
        Ok(FieldPrime(p))
    }

    pub fn modulus(self) -> u64 {
        self.0
    }

    pub fn reduce(self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }

    fn inverse(self, a: u64) -> u64 {
        // Fermat: a^(p-2).
        let (mut base, mut exp, mut acc) = (a % self.0, self.0 - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.0;
            }
            base = base * base % self.0;
            exp >>= 1;
        }
        acc
    }
}

impl Default for FieldPrime {
    fn default() -> Self {
        FieldPrime::DEFAULT
    }
}

/// Coefficient field for homology computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Coefficients {
    Prime(FieldPrime),
    /// Exact rationals; only accepted below [`RATIONAL_COLUMN_CAP`].
    Rational,
}

impl Default for Coefficients {
    fn default() -> Self {
        Coefficients::Prime(FieldPrime::DEFAULT)
    }
}

pub const RATIONAL_COLUMN_CAP: usize = 400;

/// Sparse column vector: `(row, value)` sorted by row, values nonzero.
pub type SparseColumn = Vec<(u32, i64)>;

/// A matrix stored by sparse integer columns; reduced modulo the field on use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixModP {
    rows: usize,
    columns: Vec<SparseColumn>,
}

impl MatrixModP {
    pub fn new(rows: usize) -> Self {
        MatrixModP {
            rows,
            columns: Vec::new(),
        }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = MatrixModP::new(rows.len());
        for c in 0..cols {
            let col = rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r[c] != 0)
                .map(|(i, r)| (i as u32, r[c]))
                .collect();
            m.push_column(col);
        }
        m
    }

    /// # Panics
    /// Panics if a row index is out of range.
    pub fn push_column(&mut self, mut col: SparseColumn) {
        col.sort_unstable_by_key(|&(r, _)| r);
        assert!(
            col.iter().all(|&(r, _)| (r as usize) < self.rows),
            "row index out of range"
        );
        col.retain(|&(_, v)| v != 0);
        self.columns.push(col);
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[SparseColumn] {
        &self.columns
    }

    pub fn rank(&self, coefficients: Coefficients) -> Result<usize, ComputeError> {
        match coefficients {
            Coefficients::Prime(p) => Ok(rank_mod_p(self, p)),
            Coefficients::Rational => rank_rational(self),
        }
    }

    /// `self * other` over the integers, for composition checks.
    pub fn compose(&self, other: &MatrixModP) -> MatrixModP {
        assert_eq!(self.cols(), other.rows, "inner dimensions differ");
        let mut out = MatrixModP::new(self.rows);
        for col in &other.columns {
            let mut acc: HashMap<u32, i64> = HashMap::new();
            for &(k, v) in col {
                for &(r, w) in &self.columns[k as usize] {
                    *acc.entry(r).or_insert(0) += v * w;
                }
            }
            out.push_column(acc.into_iter().filter(|&(_, v)| v != 0).collect());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }
}

/// Rank over `Z/p` by incremental sparse column echelon form.
///
/// Each reduced column is stored under its smallest row index; a new column
/// is reduced against stored pivots until it vanishes or finds a free pivot.
pub fn rank_mod_p(m: &MatrixModP, p: FieldPrime) -> usize {
    let q = p.modulus();
    let mut pivots: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
    for col in &m.columns {
        let mut v: Vec<(u32, u64)> = col
            .iter()
            .map(|&(r, x)| (r, p.reduce(x)))
            .filter(|&(_, x)| x != 0)
            .collect();
        while let Some(&(lead_row, lead_val)) = v.first() {
            match pivots.get(&lead_row) {
                Some(pivot) => {
                    // v -= lead_val * pivot, pivot normalized to leading 1.
                    v = axpy(&v, pivot, q - lead_val, q);
                }
                None => {
                    let inv = p.inverse(lead_val);
                    let normalized = v.iter().map(|&(r, x)| (r, x * inv % q)).collect();
                    pivots.insert(lead_row, normalized);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `a + factor * b` over `Z/q`, both sorted by row.
fn axpy(a: &[(u32, u64)], b: &[(u32, u64)], factor: u64, q: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() || y < b.len() {
        let take_a = y >= b.len() || (x < a.len() && a[x].0 < b[y].0);
        let take_b = x >= a.len() || (y < b.len() && b[y].0 < a[x].0);
        if take_a {
            out.push(a[x]);
            x += 1;
        } else if take_b {
            out.push((b[y].0, b[y].1 * factor % q));
            y += 1;
        } else {
            let s = (a[x].1 + b[y].1 * factor) % q;
            if s != 0 {
                out.push((a[x].0, s));
            }
            x += 1;
            y += 1;
        }
    }
    out
}

/// Rank over `Q` by dense elimination with exact rationals.
pub fn rank_rational(m: &MatrixModP) -> Result<usize, ComputeError> {
    if m.cols() > RATIONAL_COLUMN_CAP || m.rows > RATIONAL_COLUMN_CAP {
        return Err(ComputeError::CapExceeded {
            what: "rational matrix".into(),
            size: m.cols().max(m.rows),
            cap: RATIONAL_COLUMN_CAP,
        });
    }
    let mut a = vec![vec![BigRational::zero(); m.cols()]; m.rows];
    for (c, col) in m.columns.iter().enumerate() {
        for &(r, v) in col {
            a[r as usize][c] = BigRational::from_integer(BigInt::from(v));
        }
    }
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(pivot) = (rank..m.rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = BigRational::one() / a[rank][c].clone();
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let factor = row[c].clone() * inv.clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x -= factor.clone() * p.clone();
                }
            }
        }
        rank += 1;
    }
    Ok(rank)
}
