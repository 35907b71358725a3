//! The corner `β_{n,2n-2}` of `S/in(J_{C_n})` by mapping-cone induction.
//!
//! Starting from `I = (x_1y_2, ..., x_{n-1}y_n, x_1y_n)` the non-edge
//! generators `v_1, ..., v_m` are added one at a time in generator order.
//! Each step's colon `I_{k-1} : (v_k)` must be a monomial regular sequence of
//! length `n - 1`; its top Koszul degree shifted by `deg v_k` must be
//! `2n - 2`, so the step raises `dim Tor_n(S/I_k)_{2n-2}` by exactly one.

use serde::{Deserialize, Serialize};

use crate::error::ComputeError;
use crate::graph::Graph;
use crate::groebner::{cycle_path_generator, initial_ideal};
use crate::ideal::{is_monomial_regular_sequence, MonomialIdeal};
use crate::poly::{Monomial, VarKind, Variable};

/// The two complete intersections behind `Tor_n(S/I)_{2n-2} = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseCase {
    /// `J = (x_1y_2, ..., x_{n-1}y_n)`.
    pub edge_path_ideal: MonomialIdeal,
    /// `J : (x_1 y_n)`.
    pub closing_colon: MonomialIdeal,
    pub edge_path_degrees: Vec<usize>,
    pub closing_colon_degrees: Vec<usize>,
    /// Both quotients have projective dimension `n - 1`, hence `projdim S/I <= n - 1`.
    pub projdim_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerStep {
    pub k: usize,
    pub generator: Monomial,
    /// Path endpoints `(i, j)` with `v_k = x_i x_{j+1}..x_n y_1..y_{i-1} y_j`.
    pub endpoints: (usize, usize),
    pub colon: MonomialIdeal,
    pub quadric_count: usize,
    pub variable_count: usize,
    /// Degree of `Tor_{n-1}` of the colon quotient (sum of generator degrees).
    pub colon_top_degree: usize,
    pub shift: usize,
    pub shifted_top_degree: usize,
    /// `reg(S/colon) + deg v_k`; equals `n - 1`.
    pub shifted_regularity: usize,
    /// Corner value after this step.
    pub running_total: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerCertificate {
    pub n: usize,
    pub base: BaseCase,
    pub steps: Vec<CornerStep>,
}

impl CornerCertificate {
    pub fn value(&self) -> u64 {
        self.steps.last().map_or(0, |s| s.running_total)
    }
}

fn degrees(ideal: &MonomialIdeal) -> Vec<usize> {
    ideal.generators().iter().map(Monomial::degree).collect()
}

fn endpoints_of(v: &Monomial, n: usize) -> (usize, usize) {
    let vars: Vec<Variable> = v.support().map(|p| Variable::from_position(p, n)).collect();
    let i = vars
        .iter()
        .filter(|x| x.kind == VarKind::X)
        .map(|x| x.index)
        .min()
        .unwrap_or(0);
    let j = vars
        .iter()
        .filter(|x| x.kind == VarKind::Y)
        .map(|x| x.index)
        .max()
        .unwrap_or(0);
    (i, j)
}

fn violation(k: usize, reason: impl Into<String>, colon: &MonomialIdeal) -> ComputeError {
    ComputeError::ShapeViolation {
        k,
        reason: reason.into(),
        colon: colon.to_string(),
    }
}

/// Computes `β_{n,2n-2}(S/in(J_{C_n}))` for `n >= 4` with a step-by-step certificate.
pub fn cycle_corner_betti(n: usize) -> Result<(u64, CornerCertificate), ComputeError> {
    if n < 4 {
        return Err(ComputeError::InvalidParameters(format!(
            "cycle corner needs n >= 4, got {n}"
        )));
    }
    let graph = Graph::cycle(n)?;
    let target = initial_ideal(&graph);

    let j_ideal = MonomialIdeal::new(n, (1..n).map(|i| Monomial::from_indices(n, &[i], &[i + 1])));
    let closing = Monomial::from_indices(n, &[1], &[n]);
    let closing_colon = j_ideal.colon(&closing);
    let base_ok = is_monomial_regular_sequence(j_ideal.generators())
        && is_monomial_regular_sequence(closing_colon.generators())
        && j_ideal.len() == n - 1
        && closing_colon.len() == n - 1
        && closing_colon.degree_counts() == vec![(1, 2), (2, n - 3)];
    if !base_ok {
        return Err(violation(
            0,
            "base ideals are not the expected complete intersections",
            &closing_colon,
        ));
    }
    let base = BaseCase {
        edge_path_degrees: degrees(&j_ideal),
        closing_colon_degrees: degrees(&closing_colon),
        edge_path_ideal: j_ideal.clone(),
        closing_colon,
        projdim_bound: n - 1,
    };

    let vs: Vec<Monomial> = target
        .generators()
        .iter()
        .filter(|g| g.degree() >= 3)
        .cloned()
        .collect();
    if vs.len() != n * (n - 3) / 2 {
        return Err(violation(
            0,
            format!("expected {} non-edge generators, found {}", n * (n - 3) / 2, vs.len()),
            &target,
        ));
    }

    let mut current = j_ideal.add(closing);
    let mut steps = Vec::with_capacity(vs.len());
    for (idx, v) in vs.iter().enumerate() {
        let k = idx + 1;
        let (i, j) = endpoints_of(v, n);
        let colon = current.colon(v);
        if *v != cycle_path_generator(n, i, j) || j < i + 2 || j - i > n - 2 {
            return Err(violation(k, format!("{v} is not a path generator"), &colon));
        }
        if v.degree() != n - j + i + 1 {
            return Err(violation(k, format!("deg {v} != n - j + i + 1"), &colon));
        }
        if !is_monomial_regular_sequence(colon.generators()) {
            return Err(violation(k, "colon is not a monomial regular sequence", &colon));
        }
        if colon.len() != n - 1 {
            return Err(violation(
                k,
                format!("colon has length {} instead of {}", colon.len(), n - 1),
                &colon,
            ));
        }
        let quadric_count = colon.generators().iter().filter(|g| g.degree() == 2).count();
        let variable_count = colon.generators().iter().filter(|g| g.degree() == 1).count();
        if quadric_count != j - i - 2 || variable_count != n - j + i + 1 {
            return Err(violation(
                k,
                format!("expected {} quadrics and {} variables", j - i - 2, n - j + i + 1),
                &colon,
            ));
        }
        let colon_top_degree: usize = degrees(&colon).iter().sum();
        let shifted_top_degree = colon_top_degree + v.degree();
        if shifted_top_degree != 2 * n - 2 {
            return Err(violation(
                k,
                format!("shifted top degree {shifted_top_degree} != {}", 2 * n - 2),
                &colon,
            ));
        }
        let colon_regularity: usize = degrees(&colon).iter().map(|d| d - 1).sum();
        let shifted_regularity = colon_regularity + v.degree();
        if shifted_regularity != n - 1 {
            return Err(violation(
                k,
                format!("shifted regularity {shifted_regularity} != {}", n - 1),
                &colon,
            ));
        }
        steps.push(CornerStep {
            k,
            generator: v.clone(),
            endpoints: (i, j),
            colon,
            quadric_count,
            variable_count,
            colon_top_degree,
            shift: v.degree(),
            shifted_top_degree,
            shifted_regularity,
            running_total: k as u64,
        });
        current = current.add(v.clone());
    }
    if current != target {
        return Err(violation(
            vs.len(),
            "final ideal differs from the initial ideal",
            &current,
        ));
    }
    let cert = CornerCertificate { n, base, steps };
    Ok((cert.value(), cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::formulas::binomial;

    #[test]
    fn corner_values() {
        assert_eq!(cycle_corner_betti(4).unwrap().0, 2);
        assert_eq!(cycle_corner_betti(5).unwrap().0, 5);
        assert_eq!(cycle_corner_betti(8).unwrap().0, 20);
        assert!(cycle_corner_betti(3).is_err());
    }

    #[test]
    fn generator_order_matches_listing() {
        let (_, cert) = cycle_corner_betti(5).unwrap();
        let gens: Vec<String> = cert.steps.iter().map(|s| s.generator.to_string()).collect();
        assert_eq!(
            gens[..5],
            ["x1*x5*y4", "x2*y1*y5", "x1*x4*x5*y3", "x2*x5*y1*y4", "x3*y1*y2*y5"]
        );
    }

    #[test]
    fn certificate_invariants() {
        for n in 4..=10 {
            let (value, cert) = cycle_corner_betti(n).unwrap();
            assert_eq!(value, binomial(n - 1, 2) - 1);
            assert_eq!(value as usize, n * (n - 3) / 2);
            for s in &cert.steps {
                let (i, j) = s.endpoints;
                assert_eq!(2 * (j - i - 2) + (n - j + i + 1) + s.shift, 2 * n - 2);
                assert_eq!(s.shift, n - j + i + 1);
            }
            assert_eq!(cert.base.edge_path_degrees, vec![2; n - 1]);
        }
    }
}
