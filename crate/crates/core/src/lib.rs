//! Binomial edge ideals of graphs: lex Gröbner bases from admissible paths,
//! initial ideals, and graded Betti tables computed by closed formulas,
//! by mapping-cone induction, and by two independent homology oracles.

pub mod betti;
pub mod error;
pub mod graph;
pub mod groebner;
pub mod ideal;
pub mod oracle;
pub mod poly;

pub use error::{ComputeError, GraphError, PolyError};
pub use graph::Graph;
pub use groebner::{groebner_basis, initial_ideal, AdmissiblePath, GroebnerBasis};
pub use ideal::{LinearQuotientsProfile, MonomialIdeal};
pub use poly::{Binomial, Monomial, Polynomial, Variable};
