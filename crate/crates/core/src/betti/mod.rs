//! Betti tables and the closed-form routes to them.

mod corner;
mod formulas;
mod reference;
mod table;

pub use corner::{cycle_corner_betti, BaseCase, CornerCertificate, CornerStep};
pub use formulas::{betti_bnbers_closed_form, betti_complete_intersection, betti_from_linear_quotients, binomial};
pub use reference::{paper_reference_values, Family, ReferenceRecord};
pub use table::{BettiEntry, BettiTable, Completeness, ExtremalSet};
