//! Independent Betti computations: lcm-lattice homology for monomial ideals
//! and degreewise Koszul homology over a prime field.

mod koszul;
mod lcm;
mod linalg;

use serde::{Deserialize, Serialize};

pub use koszul::{
    koszul_betti, koszul_betti_at, koszul_betti_certified, koszul_differential, standard_monomials, KoszulOptions,
    QuotientRing,
};
pub use lcm::{lcm_lattice, lcm_lattice_betti, lcm_lattice_multigraded, IntervalComplex, LcmOptions};
pub use linalg::{rank_mod_p, rank_rational, Coefficients, FieldPrime, MatrixModP, SparseColumn, RATIONAL_COLUMN_CAP};

/// Size limits; an oracle that would exceed one refuses instead of guessing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Columns of any single matrix whose rank is taken.
    pub max_columns: usize,
    /// Basis size of one Koszul spot, or faces of one interval complex.
    pub max_spot: usize,
    /// Elements of the lcm lattice.
    pub max_lattice: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_columns: 20_000,
            max_spot: 2_000_000,
            max_lattice: 200_000,
        }
    }
}
