//! Admissible paths, the lex Gröbner basis of a binomial edge ideal, its
//! initial ideal, and an S-pair based verifier.

use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{ComputeError, GraphError};
use crate::graph::Graph;
use crate::ideal::MonomialIdeal;
use crate::poly::{reduce, s_polynomial, Binomial, Monomial, Polynomial};

/// A path `i = i_0, ..., i_r = j` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AdmissiblePath {
    vertices: Vec<usize>,
}

impl AdmissiblePath {
    /// Wraps a vertex sequence without checking admissibility; see [`AdmissiblePath::is_admissible`].
    pub fn new(vertices: Vec<usize>) -> Self {
        assert!(vertices.len() >= 2, "a path needs two endpoints");
        assert!(
            vertices[0] < vertices[vertices.len() - 1],
            "endpoints must satisfy i < j"
        );
        AdmissiblePath { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    /// Product of `x_v` over interior `v > j` and `y_v` over interior `v < i`.
    pub fn monomial(&self, n: usize) -> Monomial {
        let (i, j) = (self.start(), self.end());
        let xs: Vec<usize> = self.interior().iter().copied().filter(|&v| v > j).collect();
        let ys: Vec<usize> = self.interior().iter().copied().filter(|&v| v < i).collect();
        Monomial::from_indices(n, &xs, &ys)
    }

    /// Checks the three admissibility conditions directly, the last one by
    /// trying every proper subset of the interior in its original order.
    pub fn is_admissible(&self, g: &Graph) -> bool {
        let (i, j) = (self.start(), self.end());
        let consecutive = self.vertices.windows(2).all(|w| g.has_edge(w[0], w[1]));
        let distinct = self.vertices.iter().all_unique();
        let outside = self.interior().iter().all(|&v| v < i || v > j);
        consecutive && distinct && outside && !self.has_shortcut(g)
    }

    fn has_shortcut(&self, g: &Graph) -> bool {
        let (i, j) = (self.start(), self.end());
        let interior = self.interior();
        let r = interior.len();
        (0u64..(1u64 << r)).filter(|&mask| mask != (1u64 << r) - 1).any(|mask| {
            let seq: Vec<usize> = std::iter::once(i)
                .chain((0..r).filter(|b| mask >> b & 1 == 1).map(|b| interior[b]))
                .chain(std::iter::once(j))
                .collect();
            seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
        })
    }
}

impl fmt::Display for AdmissiblePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.vertices.iter().join(","))
    }
}

/// Depth-first search for admissible paths from `i` to `j`.
///
/// Interior vertices strictly between `i` and `j` and revisits are pruned.
/// A vertex adjacent to some earlier path vertex other than its predecessor
/// would give a shortcut, so such extensions are pruned too; the
/// survivors are then re-checked against every proper interior subset.
fn paths_between(g: &Graph, adj: &[Vec<usize>], i: usize, j: usize) -> Vec<AdmissiblePath> {
    fn extend(g: &Graph, adj: &[Vec<usize>], j: usize, path: &mut Vec<usize>, out: &mut Vec<AdmissiblePath>) {
        let i = path[0];
        let last = *path.last().expect("path is never empty");
        for &w in &adj[last] {
            if path.contains(&w) {
                continue;
            }
            let chord = path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w));
            if chord {
                continue;
            }
            if w == j {
                path.push(w);
                out.push(AdmissiblePath::new(path.clone()));
                path.pop();
            } else if w < i || w > j {
                path.push(w);
                extend(g, adj, j, path, out);
                path.pop();
            }
        }
    }

    let mut out = Vec::new();
    let mut path = vec![i];
    extend(g, adj, j, &mut path, &mut out);
    out.retain(|p| !p.has_shortcut(g));
    out.sort();
    out
}

/// All admissible paths of `g`, sorted by `(i, j)` and then by vertex sequence.
pub fn enumerate_admissible_paths(g: &Graph) -> Vec<AdmissiblePath> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    pairs
        .par_iter()
        .map(|&(i, j)| paths_between(g, &adj, i, j))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// The binomials `u_π f_ij` with their source paths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerBasis {
    vertex_count: usize,
    elements: Vec<Binomial>,
    paths: Vec<AdmissiblePath>,
}

impl GroebnerBasis {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn paths(&self) -> &[AdmissiblePath] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leads(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().map(Binomial::lead)
    }
}

pub fn groebner_basis(g: &Graph) -> GroebnerBasis {
    let n = g.vertex_count();
    let paths = enumerate_admissible_paths(g);
    let elements = paths
        .iter()
        .map(|p| {
            Binomial::edge(n, p.start(), p.end())
                .scale(&p.monomial(n))
                .expect("same ambient ring")
        })
        .collect();
    GroebnerBasis {
        vertex_count: n,
        elements,
        paths,
    }
}

pub fn initial_ideal(g: &Graph) -> MonomialIdeal {
    let gb = groebner_basis(g);
    MonomialIdeal::new(g.vertex_count(), gb.leads().cloned())
}

/// Initial ideal of `J_{K_{m,n}}` written down from its three generator families.
pub fn closed_form_initial_kmn(m: usize, n: usize) -> Result<MonomialIdeal, GraphError> {
    if n < 1 || m < n {
        return Err(GraphError::InvalidFamily(format!("need m >= n >= 1, got ({m}, {n})")));
    }
    let v = m + n;
    let mut gens = Vec::new();
    for i in 1..=m {
        for j in m + 1..=m + n {
            gens.push(Monomial::from_indices(v, &[i], &[j]));
        }
    }
    for (i, j) in (1..=m).tuple_combinations() {
        for k in 1..=n {
            gens.push(Monomial::from_indices(v, &[i, m + k], &[j]));
        }
    }
    for (i, j) in (1..=n).tuple_combinations() {
        for k in 1..=m {
            gens.push(Monomial::from_indices(v, &[m + i], &[k, m + j]));
        }
    }
    Ok(MonomialIdeal::new(v, gens))
}

/// The non-edge generator `x_i x_{j+1}..x_n y_1..y_{i-1} y_j` of a cycle's initial ideal.
pub fn cycle_path_generator(n: usize, i: usize, j: usize) -> Monomial {
    let xs: Vec<usize> = std::iter::once(i).chain(j + 1..=n).collect();
    let ys: Vec<usize> = (1..i).chain(std::iter::once(j)).collect();
    Monomial::from_indices(n, &xs, &ys)
}

/// Initial ideal of `J_{C_n}` written down from its closed form.
pub fn closed_form_initial_cycle(n: usize) -> Result<MonomialIdeal, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidFamily(format!("cycle needs n >= 3, got {n}")));
    }
    let mut gens: Vec<Monomial> = (1..n).map(|i| Monomial::from_indices(n, &[i], &[i + 1])).collect();
    gens.push(Monomial::from_indices(n, &[1], &[n]));
    for i in 1..=n {
        for j in i + 2..=n {
            if j - i <= n - 2 {
                gens.push(cycle_path_generator(n, i, j));
            }
        }
    }
    Ok(MonomialIdeal::new(n, gens))
}

/// Outcome of checking a candidate basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbVerification {
    pub basis_size: usize,
    pub s_pairs_checked: usize,
    /// First S-pair `(a, b)` (basis indices) with a nonzero normal form.
    pub failing_pair: Option<(usize, usize, String)>,
    /// `(a, b)`: the lead of element `a` divides a term of element `b`.
    pub reducedness_violation: Option<(usize, usize)>,
    /// First edge whose binomial does not reduce to zero modulo the candidate.
    pub missing_edge: Option<(usize, usize)>,
    /// First candidate element that does not lie in the binomial edge ideal.
    pub foreign_element: Option<usize>,
}

impl GbVerification {
    pub fn passed(&self) -> bool {
        self.failing_pair.is_none()
            && self.reducedness_violation.is_none()
            && self.missing_edge.is_none()
            && self.foreign_element.is_none()
    }
}

/// Default cap on the number of S-pairs a verification may examine.
pub const DEFAULT_PAIR_CAP: usize = 500_000;

/// Verifies that the admissible-path basis of `g` is a reduced Gröbner basis of `J_G`.
pub fn verify_groebner(g: &Graph, pair_cap: usize) -> Result<GbVerification, ComputeError> {
    let gb = groebner_basis(g);
    verify_candidate(g, gb.elements(), pair_cap, None)
}

/// Verifies an arbitrary candidate basis of `J_G`.
///
/// Membership of candidate elements in `J_G` is checked against the
/// admissible-path basis, which must itself be verified first.
pub fn verify_basis(g: &Graph, candidate: &[Binomial], pair_cap: usize) -> Result<GbVerification, ComputeError> {
    let reference = groebner_basis(g);
    verify_candidate(g, candidate, pair_cap, Some(reference.elements()))
}

fn verify_candidate(
    g: &Graph,
    basis: &[Binomial],
    pair_cap: usize,
    reference: Option<&[Binomial]>,
) -> Result<GbVerification, ComputeError> {
    let n = g.vertex_count();
    let pair_count = basis.len() * basis.len().saturating_sub(1) / 2;
    if pair_count > pair_cap {
        return Err(ComputeError::CapExceeded {
            what: "S-pair count".into(),
            size: pair_count,
            cap: pair_cap,
        });
    }
    for b in basis {
        if b.lead().vertex_count() != n {
            return Err(crate::error::PolyError::Dimension(b.lead().var_count(), 2 * n).into());
        }
    }

    let pairs: Vec<(usize, usize)> = (0..basis.len()).tuple_combinations().collect();
    let normal_forms: Vec<Polynomial> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let s = s_polynomial(&basis[a], &basis[b]).expect("checked ambient");
            reduce(&s, basis).expect("checked ambient")
        })
        .collect();
    let failing_pair = pairs
        .iter()
        .zip(&normal_forms)
        .find(|(_, nf)| !nf.is_zero())
        .map(|(&(a, b), nf)| (a, b, nf.to_string()));

    let mut reducedness_violation = None;
    'outer: for (b, elem) in basis.iter().enumerate() {
        for (a, other) in basis.iter().enumerate() {
            let hits_lead = a != b && other.lead().divides_unchecked(elem.lead());
            if hits_lead || other.lead().divides_unchecked(elem.trail()) {
                reducedness_violation = Some((a, b));
                break 'outer;
            }
        }
    }

    let missing_edge = g.edges().find(|&(i, j)| {
        let f = Binomial::edge(n, i, j).to_polynomial();
        !reduce(&f, basis).expect("checked ambient").is_zero()
    });

    let foreign_element = reference.and_then(|gamma| {
        basis
            .iter()
            .position(|b| !reduce(&b.to_polynomial(), gamma).expect("checked ambient").is_zero())
    });

    Ok(GbVerification {
        basis_size: basis.len(),
        s_pairs_checked: pairs.len(),
        failing_pair,
        reducedness_violation,
        missing_edge,
        foreign_element,
    })
}
