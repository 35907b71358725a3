//! One line per acceptance criterion; exits nonzero if a gating criterion fails.

use std::io::Write;
use std::time::{Duration, Instant};

use edgebetti::betti::{
    betti_bnbers_closed_form, betti_from_linear_quotients, binomial, cycle_corner_betti, paper_reference_values,
    BettiEntry, BettiTable, Family,
};
use edgebetti::groebner::{closed_form_initial_cycle, closed_form_initial_kmn, verify_groebner, DEFAULT_PAIR_CAP};
use edgebetti::ideal::linear_quotients_profile;
use edgebetti::oracle::{koszul_betti_certified, lcm_lattice_betti, KoszulOptions, LcmOptions, QuotientRing};
use edgebetti::poly::VarKind;
use edgebetti::{groebner_basis, initial_ideal, Graph, Monomial, Variable};
use edgebetti_cli::{run, Exit};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bipartite_pairs(max_m: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=max_m).flat_map(|m| (1..=m).map(move |n| (m, n)))
}

fn kmn(m: usize, n: usize) -> Graph {
    Graph::complete_bipartite(m, n).unwrap()
}

fn ini_table(g: &Graph) -> Result<BettiTable, String> {
    lcm_lattice_betti(&initial_ideal(g), true, &LcmOptions::default()).map_err(|e| e.to_string())
}

fn binomial_table(g: &Graph) -> Result<BettiTable, String> {
    let ring = QuotientRing::binomial_edge(&groebner_basis(g));
    koszul_betti_certified(&ring, &ini_table(g)?, &KoszulOptions::default()).map_err(|e| e.to_string())
}

fn criterion_1() -> Check {
    let mut graphs: Vec<(String, Graph)> = (3..=7).map(|n| (format!("C_{n}"), Graph::cycle(n).unwrap())).collect();
    graphs.extend(bipartite_pairs(4).map(|(m, n)| (format!("K_{{{m},{n}}}"), kmn(m, n))));
    let mut pairs = 0;
    for (label, g) in &graphs {
        let v = verify_groebner(g, DEFAULT_PAIR_CAP).map_err(|e| format!("{label}: {e}"))?;
        ensure(v.passed(), || format!("{label}: {v:?}"))?;
        pairs += v.s_pairs_checked;
    }
    Ok(format!(
        "{} graphs, {pairs} S-pairs reduce to 0, all bases reduced",
        graphs.len()
    ))
}

fn criterion_2() -> Check {
    for n in 4..=12 {
        let ini = initial_ideal(&Graph::cycle(n).unwrap());
        ensure(ini == closed_form_initial_cycle(n).unwrap(), || {
            format!("C_{n} differs from closed form")
        })?;
        ensure(ini.len() == n + n * (n - 3) / 2, || {
            format!("C_{n} has {} generators", ini.len())
        })?;
    }
    for (m, n) in bipartite_pairs(5) {
        let ini = initial_ideal(&kmn(m, n));
        ensure(ini == closed_form_initial_kmn(m, n).unwrap(), || {
            format!("K_{{{m},{n}}} differs")
        })?;
        let count = m * n + binomial(m, 2) as usize * n + binomial(n, 2) as usize * m;
        ensure(ini.len() == count, || {
            format!("K_{{{m},{n}}} has {} generators", ini.len())
        })?;
    }
    Ok("cycles n = 4..12 and K_{m,n}, m <= 5".into())
}

fn expected_q(u: &Monomial, m: usize, n: usize) -> usize {
    let vars: Vec<Variable> = u.support().map(|p| Variable::from_position(p, m + n)).collect();
    let xs: Vec<usize> = vars.iter().filter(|v| v.kind == VarKind::X).map(|v| v.index).collect();
    let ys: Vec<usize> = vars.iter().filter(|v| v.kind == VarKind::Y).map(|v| v.index).collect();
    match (xs.as_slice(), ys.as_slice()) {
        ([i], [j]) => i + j - m - 2,
        ([_, mk], [j]) => n + (mk - m) + j - 3,
        ([_], [k, mj]) => m + k + (mj - m) - 3,
        _ => usize::MAX,
    }
}

fn criterion_3() -> Check {
    for (m, n) in bipartite_pairs(5) {
        let profile = linear_quotients_profile(initial_ideal(&kmn(m, n)).generators());
        ensure(profile.is_success(), || format!("K_{{{m},{n}}}: linear quotients fail"))?;
        for (u, &q) in profile.ordered_generators.iter().zip(&profile.q) {
            ensure(q == expected_q(u, m, n), || format!("K_{{{m},{n}}}: q({u}) = {q}"))?;
        }
        let t = betti_from_linear_quotients(&profile, "profile").map_err(|e| e.to_string())?;
        ensure(t.same_entries(&betti_bnbers_closed_form(m, n).unwrap()), || {
            format!("K_{{{m},{n}}}: profile table differs from closed-form sums")
        })?;
    }
    Ok("all K_{m,n}, m <= 5".into())
}

fn criterion_4() -> Check {
    for (m, n) in [(2, 1), (3, 1), (4, 1), (3, 2), (4, 2), (4, 3)] {
        let r = paper_reference_values(Family::CompleteBipartite { m, n }).map_err(|e| e.to_string())?;
        let p = if n == 1 { m } else { 2 * m + n - 2 };
        let value = if n == 1 { m - 1 } else { n - 1 } as u64;
        ensure(r.projdim == p && r.value == value, || {
            format!("reference record for K_{{{m},{n}}}")
        })?;
        let profile = linear_quotients_profile(initial_ideal(&kmn(m, n)).generators());
        let t = betti_from_linear_quotients(&profile, "profile").map_err(|e| e.to_string())?;
        let ex = t.extremal().map_err(|e| e.to_string())?;
        let want = vec![BettiEntry { i: p, j: p + 2, value }];
        ensure(ex == want, || {
            format!("K_{{{m},{n}}}: extremal {ex:?}, expected {want:?}")
        })?;
    }
    Ok("six bipartite graphs have the published singleton corner".into())
}

fn criterion_5() -> Check {
    for n in 4..=10 {
        let start = Instant::now();
        let (value, cert) = cycle_corner_betti(n).map_err(|e| format!("n = {n}: {e}"))?;
        let elapsed = start.elapsed();
        ensure(value == binomial(n - 1, 2) - 1, || format!("n = {n}: corner {value}"))?;
        ensure(cert.steps.len() == n * (n - 3) / 2, || {
            format!("n = {n}: {} steps", cert.steps.len())
        })?;
        for s in &cert.steps {
            let (i, j) = s.endpoints;
            ensure(
                s.colon.len() == n - 1
                    && s.quadric_count == j - i - 2
                    && s.variable_count == n - j + i + 1
                    && s.shifted_top_degree == 2 * n - 2,
                || format!("n = {n}, step {}: bad shape", s.k),
            )?;
        }
        ensure(elapsed < Duration::from_secs(1), || format!("n = {n} took {elapsed:?}"))?;
    }
    Ok("n = 4..10, every step certified".into())
}

fn criterion_6() -> Check {
    for n in 4..=6 {
        let t = ini_table(&Graph::cycle(n).unwrap())?;
        let (p, r) = (t.proj_dim().unwrap(), t.regularity().unwrap());
        let corner = t.get(n, 2 * n - 2);
        ensure(p == n && r == n - 2 && corner == binomial(n - 1, 2) - 1, || {
            format!("C_{n}: projdim {p}, reg {r}, corner {corner}")
        })?;
    }
    for (m, n) in bipartite_pairs(3) {
        let t = ini_table(&kmn(m, n))?;
        ensure(t.same_entries(&betti_bnbers_closed_form(m, n).unwrap()), || {
            format!("K_{{{m},{n}}}: lcm table differs from formula")
        })?;
    }
    Ok("C_4..C_6 invariants; K_{m,n} tables for m <= 3".into())
}

fn criterion_7() -> Check {
    let c4 = binomial_table(&Graph::cycle(4).unwrap())?;
    ensure(c4.get(1, 2) == 4 && c4.get(4, 6) == 2, || format!("C_4: {c4:?}"))?;
    let c5 = binomial_table(&Graph::cycle(5).unwrap())?;
    ensure(c5.get(1, 2) == 5 && c5.get(5, 8) == 5, || format!("C_5: {c5:?}"))?;
    for (m, n) in [(1, 1), (2, 1), (3, 1), (2, 2)] {
        let g = kmn(m, n);
        let t = binomial_table(&g)?;
        ensure(t.get(1, 2) == g.edge_count() as u64, || {
            format!("K_{{{m},{n}}}: beta(1,2)")
        })?;
        ensure(t.entries().iter().all(|e| e.j - e.i <= 2), || {
            format!("K_{{{m},{n}}}: rows beyond 2")
        })?;
        if m != n {
            let ex = t.extremal().map_err(|e| e.to_string())?;
            ensure(ex.len() == 1, || format!("K_{{{m},{n}}}: extremal {ex:?}"))?;
        }
    }
    Ok("beta(1,2) = |E|, two-row shape, C_4 and C_5 corners over Z/32003".into())
}

fn conjecture_json(args: &[&str]) -> Result<(serde_json::Value, Exit), String> {
    let out = run(["edgebetti", "conjecture", "--format", "json"].iter().chain(args));
    let v = serde_json::from_str(&out.stdout).map_err(|e| format!("{args:?}: {e}: {}", out.stderr))?;
    Ok((v, out.exit))
}

fn criterion_8() -> Check {
    for args in [
        vec!["--family", "cycle", "--n", "4"],
        vec!["--family", "cycle", "--n", "5"],
        vec!["--family", "kmn", "--m", "2", "--n", "1"],
        vec!["--family", "kmn", "--m", "3", "--n", "1"],
    ] {
        let (v, exit) = conjecture_json(&args)?;
        let a = &v["initial"]["extremal"];
        let b = &v["binomial"]["extremal"];
        ensure(v["verdict"] == "equal" && exit == Exit::Success, || {
            format!("{args:?}: {}", v["verdict"])
        })?;
        ensure(a == b && a.as_array().map_or(0, Vec::len) == 1, || {
            format!("{args:?}: {a} vs {b}")
        })?;
    }
    Ok("C_4, C_5, K_{2,1}, K_{3,1} equal with singleton extremal sets".into())
}

fn criterion_9() -> Check {
    let mut notes = Vec::new();
    for m in [2, 3] {
        let m_s = m.to_string();
        let (v, _) = conjecture_json(&["--family", "kmn", "--m", &m_s, "--n", &m_s])?;
        let c = &v["corner_candidates"];
        for key in ["closed_form_sums", "quoted", "initial_oracle", "binomial_oracle"] {
            ensure(c[key].is_u64(), || format!("K_{{{m},{m}}}: candidate {key} missing"))?;
        }
        ensure(v["semicontinuity"] == true, || format!("K_{{{m},{m}}}: semicontinuity"))?;
        notes.push(format!(
            "K_{{{m},{m}}}: sums {}, quoted {}, oracle {}",
            c["closed_form_sums"], c["quoted"], c["binomial_oracle"]
        ));
    }
    let c4 = binomial_table(&Graph::cycle(4).unwrap())?;
    let k22 = binomial_table(&kmn(2, 2))?;
    ensure(c4.same_entries(&k22), || "C_4 and K_{2,2} tables differ".into())?;
    Ok(notes.join("; ") + "; C_4 = K_{2,2} entrywise")
}

fn criterion_10() -> Check {
    let profile = linear_quotients_profile(initial_ideal(&Graph::cycle(5).unwrap()).generators());
    let evidence = profile.failure_evidence().ok_or("profile of C_5 succeeded")?;
    let bad = evidence
        .iter()
        .find(|g| g.degree() > 1)
        .ok_or("no non-variable colon generator")?;
    Ok(format!("colon generator {bad} exhibited"))
}

fn criterion_11() -> Check {
    let commands: [&[&str]; 4] = [
        &["betti", "--family", "cycle", "--n", "5", "--side", "both"],
        &["betti", "--family", "kmn", "--m", "3", "--n", "2", "--format", "json"],
        &[
            "conjecture",
            "--family",
            "kmn",
            "--m",
            "2",
            "--n",
            "2",
            "--format",
            "csv",
        ],
        &["verify-gb", "--family", "cycle", "--n", "6"],
    ];
    for cmd in commands {
        let base = run(std::iter::once("edgebetti").chain(cmd.iter().copied()));
        for threads in ["1", "2", "4"] {
            let again = run(["edgebetti", "--threads", threads]
                .into_iter()
                .chain(cmd.iter().copied()));
            ensure(again == base, || format!("{cmd:?} with --threads {threads} differs"))?;
        }
        ensure(
            run(std::iter::once("edgebetti").chain(cmd.iter().copied())) == base,
            || format!("{cmd:?} repeat differs"),
        )?;
    }
    Ok("4 commands, repeated and under 1, 2, 4 threads".into())
}

fn stretch() -> Check {
    let mut file = tempfile::NamedTempFile::new().map_err(|e| e.to_string())?;
    file.write_all(Graph::two_extremal_example().to_text().as_bytes())
        .map_err(|e| e.to_string())?;
    let path = file.path().to_str().ok_or("temp path")?.to_string();
    let (v, exit) = conjecture_json(&["--edges", &path])?;
    let ini = v["initial"]["extremal"].as_array().map_or(0, Vec::len);
    ensure(ini == 2, || {
        format!("initial extremal set {}", v["initial"]["extremal"])
    })?;
    ensure(v["verdict"] == "undecided" && exit == Exit::Undecided, || {
        format!("verdict {}", v["verdict"])
    })?;
    Ok(format!(
        "initial side extremal {}; binomial side: {}",
        v["initial"]["extremal"], v["reason"]
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("1 Groebner verification", criterion_1),
        ("2 closed-form initial ideals", criterion_2),
        ("3 linear quotients", criterion_3),
        ("4 bipartite corners", criterion_4),
        ("5 cycle corner certificate", criterion_5),
        ("6 lcm oracle, initial side", criterion_6),
        ("7 Koszul oracle, binomial side", criterion_7),
        ("8 conjecture checks", criterion_8),
        ("9 adjudication", criterion_9),
        ("10 negative control", criterion_10),
        ("11 determinism", criterion_11),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(msg) => println!("PASS criterion {name}: {msg} ({:.2?})", start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg}");
            }
        }
    }
    match stretch() {
        Ok(msg) => println!("PASS stretch (not gating): {msg}"),
        Err(msg) => println!("FAIL stretch (not gating): {msg}"),
    }
    if failed > 0 {
        println!("{failed} gating criteria failed");
        std::process::exit(1);
    }
    println!("all gating criteria passed");
}
