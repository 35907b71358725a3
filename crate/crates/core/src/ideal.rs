//! Monomial ideals: minimal generators, colons by a monomial, regular
//! sequences and the linear-quotients procedure.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::Monomial;

/// A monomial ideal stored by its minimal generators.
///
/// Generators are kept in [`paper_generator_order`], which makes equality a
/// set comparison. The zero ideal has no generators.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    vertex_count: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            vertex_count: n,
            generators: Vec::new(),
        }
    }

    /// # Panics
    /// Panics if some generator does not live over `n` vertices.
    pub fn new(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            assert_eq!(g.vertex_count(), n, "generator {g} is not over {n} vertices");
        }
        MonomialIdeal {
            vertex_count: n,
            generators: paper_generator_order(minimal_subset(gens)),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides_unchecked(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    pub fn add(&self, m: Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.vertex_count, self.generators.iter().cloned().chain([m]))
    }

    /// `I : (v)`, generated by `u / gcd(u, v)` over the generators `u` of `I`.
    pub fn colon(&self, v: &Monomial) -> MonomialIdeal {
        let gens = self.generators.iter().map(|u| u.colon(v).expect("same ambient ring"));
        MonomialIdeal::new(self.vertex_count, gens)
    }

    /// Every minimal generator is a single variable.
    pub fn is_variable_generated(&self) -> bool {
        self.generators.iter().all(|g| g.degree() == 1)
    }

    pub fn degree_counts(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for g in &self.generators {
            *counts.entry(g.degree()).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn minimal_subset(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    // Sorting by degree means a divisor is always seen before its multiples.
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| k.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// Divisibility-minimal subset of `gens`.
pub fn minimal_generators(n: usize, gens: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
    MonomialIdeal::new(n, gens)
}

/// Degree ascending; within a degree, lex descending.
pub fn paper_generator_order(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| match a.degree().cmp(&b.degree()) {
        Ordering::Equal => b.cmp(a),
        other => other,
    });
    gens
}

/// Monomials with pairwise disjoint supports (after minimalization).
pub fn is_monomial_regular_sequence(gens: &[Monomial]) -> bool {
    let mut seen: Vec<usize> = Vec::new();
    for g in gens {
        if g.is_one() {
            return false;
        }
        for p in g.support() {
            if seen.contains(&p) {
                return false;
            }
            seen.push(p);
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProfileStatus {
    Success,
    /// The colon at `index` (0-based) is not generated by variables.
    Failure {
        index: usize,
        colon: Vec<Monomial>,
    },
}

/// The successive colons `(u_1..u_{l-1}) : (u_l)` of an ordered generator list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearQuotientsProfile {
    pub ordered_generators: Vec<Monomial>,
    /// Number of variables generating each colon, up to the failure point.
    pub q: Vec<usize>,
    pub status: ProfileStatus,
}

impl LinearQuotientsProfile {
    pub fn is_success(&self) -> bool {
        self.status == ProfileStatus::Success
    }

    /// Non-variable generators of the failing colon, if any.
    pub fn failure_evidence(&self) -> Option<Vec<&Monomial>> {
        match &self.status {
            ProfileStatus::Success => None,
            ProfileStatus::Failure { colon, .. } => Some(colon.iter().filter(|m| m.degree() != 1).collect()),
        }
    }
}

/// Runs the linear-quotients test on `ordered`, stopping at the first colon
/// that is not generated by variables.
pub fn linear_quotients_profile(ordered: &[Monomial]) -> LinearQuotientsProfile {
    let n = ordered.first().map_or(0, Monomial::vertex_count);
    let mut q = Vec::with_capacity(ordered.len());
    let mut status = ProfileStatus::Success;
    for (idx, u) in ordered.iter().enumerate() {
        let previous = MonomialIdeal::new(n, ordered[..idx].iter().cloned());
        let colon = previous.colon(u);
        if !colon.is_variable_generated() {
            status = ProfileStatus::Failure {
                index: idx,
                colon: colon.generators().to_vec(),
            };
            break;
        }
        q.push(colon.len());
    }
    LinearQuotientsProfile {
        ordered_generators: ordered.to_vec(),
        q,
        status,
    }
}
