//! Betti tables from closed formulas: linear quotients, the `K_{m,n}`
//! double sums, and complete intersections.

use std::collections::BTreeMap;

use itertools::Itertools;

use super::table::BettiTable;
use crate::error::ComputeError;
use crate::ideal::LinearQuotientsProfile;

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, t| acc * (n - t) as u64 / (t + 1) as u64)
}

/// `β_{t,t+d}(I) = Σ_{deg u_l = d} C(q_l, t)`, returned at the level of `S/I`.
pub fn betti_from_linear_quotients(
    profile: &LinearQuotientsProfile,
    subject: impl Into<String>,
) -> Result<BettiTable, ComputeError> {
    if let crate::ideal::ProfileStatus::Failure { index, .. } = profile.status {
        return Err(ComputeError::UnusableProfile(index));
    }
    let mut ideal = BTreeMap::new();
    for (u, &q) in profile.ordered_generators.iter().zip(&profile.q) {
        let d = u.degree();
        for t in 0..=q {
            *ideal.entry((t, t + d)).or_insert(0) += binomial(q, t);
        }
    }
    Ok(BettiTable::from_ideal_level(subject, &ideal))
}

/// The Betti table of `S/in(J_{K_{m,n}})` assembled from its double sums,
/// without computing any colon ideal.
pub fn betti_bnbers_closed_form(m: usize, n: usize) -> Result<BettiTable, ComputeError> {
    if n < 1 || m < n {
        return Err(ComputeError::InvalidParameters(format!(
            "need m >= n >= 1, got ({m}, {n})"
        )));
    }
    // Each sum contributes C(e, t) to β_{t,t+d}(I) for its exponent e.
    let mut exponents: Vec<(usize, usize)> = Vec::new();
    for i in 1..=m {
        for j in m + 1..=m + n {
            exponents.push((2, i + j - m - 2));
        }
    }
    for (_i, j) in (1..=m).tuple_combinations() {
        for k in 1..=n {
            exponents.push((3, n + k + j - 3));
        }
    }
    if n > 1 {
        for (_i, j) in (1..=n).tuple_combinations() {
            for k in 1..=m {
                exponents.push((3, m + k + j - 3));
            }
        }
    }
    let mut ideal = BTreeMap::new();
    for (d, e) in exponents {
        for t in 0..=e {
            *ideal.entry((t, t + d)).or_insert(0) += binomial(e, t);
        }
    }
    Ok(BettiTable::from_ideal_level(
        format!("S/in(J_K{{{m},{n}}}) [closed-form sums]"),
        &ideal,
    ))
}

/// Koszul complex of a regular sequence with the given degrees:
/// `β_{i,j}` counts the `i`-subsets whose degrees sum to `j`.
pub fn betti_complete_intersection(degrees: &[usize]) -> Result<BettiTable, ComputeError> {
    if degrees.is_empty() || degrees.contains(&0) {
        return Err(ComputeError::InvalidParameters(
            "degrees must be a nonempty list of positive integers".into(),
        ));
    }
    let mut t = BettiTable::total(format!("S/(regular sequence of degrees {degrees:?})"));
    // Subset-sum counts by dynamic programming over (size, total degree).
    let top: usize = degrees.iter().sum();
    let c = degrees.len();
    let mut counts = vec![vec![0u64; top + 1]; c + 1];
    counts[0][0] = 1;
    for &d in degrees {
        for size in (0..c).rev() {
            for s in (0..=top - d).rev() {
                let v = counts[size][s];
                if v > 0 {
                    counts[size + 1][s + d] += v;
                }
            }
        }
    }
    for (i, row) in counts.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            t.set(i, j, v);
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::table::BettiEntry;

    #[test]
    fn binomial_coefficients() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(20, 10), 184_756);
    }

    #[test]
    fn complete_intersection_examples() {
        let t = betti_complete_intersection(&[2, 2, 2]).unwrap();
        for i in 0..=3 {
            assert_eq!(t.get(i, 2 * i), binomial(3, i));
        }
        assert_eq!(t.entries().len(), 4);
        assert_eq!(t.extremal().unwrap(), vec![BettiEntry { i: 3, j: 6, value: 1 }]);
        assert_eq!(t.proj_dim().unwrap(), 3);
        assert_eq!(t.regularity().unwrap(), 3);

        for n in 4..9 {
            let mut degrees = vec![2; n - 3];
            degrees.extend([1, 1]);
            let t = betti_complete_intersection(&degrees).unwrap();
            assert_eq!(t.get(n - 1, 2 * n - 4), 1);
            assert_eq!(t.proj_dim().unwrap(), n - 1);
        }

        let t = betti_complete_intersection(&[1]).unwrap();
        assert_eq!(
            t.entries(),
            vec![BettiEntry { i: 0, j: 0, value: 1 }, BettiEntry { i: 1, j: 1, value: 1 }]
        );
        assert!(betti_complete_intersection(&[]).is_err());
    }

    #[test]
    fn complete_intersection_total_is_power_of_two() {
        for degrees in [vec![1, 2, 3], vec![2, 2, 2, 2, 2], vec![1, 1, 4, 3, 2, 2]] {
            let t = betti_complete_intersection(&degrees).unwrap();
            assert_eq!(t.total_rank(), 1 << degrees.len());
        }
    }

    #[test]
    fn closed_form_small_cases() {
        // K_{2,1}: β_{t,t+2}(I) = C(0,t) + C(1,t), β_{t,t+3}(I) = C(1,t).
        let t = betti_bnbers_closed_form(2, 1).unwrap();
        assert_eq!(t.ideal_level(0, 2), 2);
        assert_eq!(t.ideal_level(1, 3), 1);
        assert_eq!(t.ideal_level(0, 3), 1);
        assert_eq!(t.ideal_level(1, 4), 1);
        assert_eq!(t.entries().len(), 5);

        // K_{3,1}: cubic part C(1,t) + 2 C(2,t), corner 2 at t = 2.
        let t = betti_bnbers_closed_form(3, 1).unwrap();
        for tt in 0..=2 {
            assert_eq!(t.ideal_level(tt, tt + 3), binomial(1, tt) + 2 * binomial(2, tt));
        }
        assert_eq!(t.get(3, 5), 2);

        // K_{2,2}: cubic part 2 C(2,t) + 2 C(3,t).
        let t = betti_bnbers_closed_form(2, 2).unwrap();
        for tt in 0..=3 {
            assert_eq!(t.ideal_level(tt, tt + 3), 2 * binomial(2, tt) + 2 * binomial(3, tt));
        }
        assert_eq!(t.get(4, 6), 2);
        assert!(betti_bnbers_closed_form(1, 2).is_err());
    }
}
