use std::collections::BTreeSet;

use edgebetti::betti::{betti_bnbers_closed_form, betti_from_linear_quotients, binomial};
use edgebetti::groebner::{closed_form_initial_cycle, closed_form_initial_kmn, enumerate_admissible_paths};
use edgebetti::ideal::linear_quotients_profile;
use edgebetti::poly::VarKind;
use edgebetti::{initial_ideal, Graph, Monomial, Variable};

/// Every simple path from `i` to `j` meeting the definition, by exhaustion.
fn brute_force_paths(g: &Graph) -> BTreeSet<Vec<usize>> {
    let n = g.vertex_count();
    let is_path = |seq: &[usize]| seq.windows(2).all(|w| g.has_edge(w[0], w[1]));
    let mut out = BTreeSet::new();
    fn walk(g: &Graph, path: &mut Vec<usize>, target: usize, acc: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if last == target {
            acc.push(path.clone());
            return;
        }
        for v in 1..=g.vertex_count() {
            if !path.contains(&v) && g.has_edge(last, v) {
                path.push(v);
                walk(g, path, target, acc);
                path.pop();
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let mut all = Vec::new();
            walk(g, &mut vec![i], j, &mut all);
            for p in all {
                let interior = &p[1..p.len() - 1];
                if !interior.iter().all(|&v| v < i || v > j) {
                    continue;
                }
                let k = interior.len();
                let minimal = (0..(1u32 << k) - 1).all(|mask| {
                    let mut seq = vec![i];
                    seq.extend((0..k).filter(|b| mask >> b & 1 == 1).map(|b| interior[b]));
                    seq.push(j);
                    !is_path(&seq)
                });
                if minimal {
                    out.insert(p);
                }
            }
        }
    }
    out
}

fn sample_graphs() -> Vec<Graph> {
    let mut gs: Vec<Graph> = (3..=7).map(|n| Graph::cycle(n).unwrap()).collect();
    for m in 1..=4 {
        for n in 1..=m {
            gs.push(Graph::complete_bipartite(m, n).unwrap());
        }
    }
    gs.push(Graph::two_extremal_example());
    gs.push(Graph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 3), (2, 5)]).unwrap());
    gs
}

#[test]
fn admissible_paths_match_brute_force() {
    for g in sample_graphs() {
        let found: BTreeSet<Vec<usize>> = enumerate_admissible_paths(&g)
            .iter()
            .map(|p| p.vertices().to_vec())
            .collect();
        assert_eq!(found, brute_force_paths(&g), "graph {g}");
    }
}

#[test]
fn cycle_closed_form_and_counts() {
    for n in 4..=12 {
        let ini = initial_ideal(&Graph::cycle(n).unwrap());
        assert_eq!(ini, closed_form_initial_cycle(n).unwrap(), "C_{n}");
        assert_eq!(ini.len(), n + n * (n - 3) / 2);
    }
}

#[test]
fn bipartite_closed_form_and_counts() {
    for m in 1..=5 {
        for n in 1..=m {
            let ini = initial_ideal(&Graph::complete_bipartite(m, n).unwrap());
            assert_eq!(ini, closed_form_initial_kmn(m, n).unwrap(), "K_{m},{n}");
            let expected = m * n + binomial(m, 2) as usize * n + binomial(n, 2) as usize * m;
            assert_eq!(ini.len(), expected);
        }
    }
}

/// The variable count of each colon, read off the shape of the generator.
fn expected_q(u: &Monomial, m: usize, n: usize) -> usize {
    let vars: Vec<Variable> = u.support().map(|p| Variable::from_position(p, m + n)).collect();
    let xs: Vec<usize> = vars.iter().filter(|v| v.kind == VarKind::X).map(|v| v.index).collect();
    let ys: Vec<usize> = vars.iter().filter(|v| v.kind == VarKind::Y).map(|v| v.index).collect();
    match (xs.as_slice(), ys.as_slice()) {
        ([i], [j]) => i + j - m - 2,
        ([_, mk], [j]) => n + (mk - m) + j - 3,
        ([_], [k, mj]) => m + k + (mj - m) - 3,
        _ => panic!("unexpected generator {u}"),
    }
}

#[test]
fn bipartite_linear_quotients() {
    for m in 1..=5 {
        for n in 1..=m {
            let ini = initial_ideal(&Graph::complete_bipartite(m, n).unwrap());
            let profile = linear_quotients_profile(ini.generators());
            assert!(profile.is_success(), "K_{m},{n}");
            for (u, &q) in profile.ordered_generators.iter().zip(&profile.q) {
                assert_eq!(q, expected_q(u, m, n), "K_{m},{n} at {u}");
            }
            let from_profile = betti_from_linear_quotients(&profile, "profile").unwrap();
            assert!(from_profile.same_entries(&betti_bnbers_closed_form(m, n).unwrap()));
        }
    }
}

#[test]
fn cycle_five_has_no_linear_quotients() {
    let ini = initial_ideal(&Graph::cycle(5).unwrap());
    let profile = linear_quotients_profile(ini.generators());
    let evidence = profile.failure_evidence().expect("paper order fails");
    assert!(evidence.iter().any(|g| g.degree() > 1));
}
