use std::path::Path;

use edgebetti::betti::{
    betti_bnbers_closed_form, cycle_corner_betti, paper_reference_values, BettiEntry, BettiTable, CornerCertificate,
    Family, ReferenceRecord,
};
use edgebetti::groebner::{verify_basis, verify_groebner, GbVerification, DEFAULT_PAIR_CAP};
use edgebetti::oracle::{
    koszul_betti, koszul_betti_certified, lcm_lattice_betti, Caps, Coefficients, FieldPrime, KoszulOptions, LcmOptions,
    QuotientRing,
};
use edgebetti::{groebner_basis, initial_ideal, Binomial, ComputeError, Graph};
use serde::Serialize;

use crate::args::{BettiArgs, ConjectureArgs, FamilyKind, Format, GraphSource, Method, OracleArgs, Side, VerifyArgs};
use crate::error::{CliError, Exit};
use crate::render::{entry_list, table_text, tables_csv, tables_json, TableJson};

pub struct GraphInput {
    pub graph: Graph,
    pub label: String,
    pub family: Option<Family>,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn resolve_graph(src: &GraphSource) -> Result<GraphInput, CliError> {
    let usage = |s: &str| Err(CliError::Usage(s.into()));
    match (src.family, &src.edges) {
        (Some(FamilyKind::Cycle), None) => {
            let (Some(n), None) = (src.n, src.m) else {
                return usage("--family cycle takes --n and no --m");
            };
            let family = Family::Cycle { n };
            Ok(GraphInput {
                graph: family.graph()?,
                label: family.label(),
                family: Some(family),
            })
        }
        (Some(FamilyKind::Kmn), None) => {
            let (Some(m), Some(n)) = (src.m, src.n) else {
                return usage("--family kmn needs --m and --n");
            };
            let family = Family::CompleteBipartite { m, n };
            Ok(GraphInput {
                graph: family.graph()?,
                label: family.label(),
                family: Some(family),
            })
        }
        (None, Some(path)) => {
            if src.n.is_some() || src.m.is_some() {
                return usage("--edges cannot be combined with --m or --n");
            }
            let graph = Graph::parse(&read(path)?)?;
            let name = path
                .file_name()
                .map_or_else(|| path.display().to_string(), |f| f.to_string_lossy().into_owned());
            Ok(GraphInput {
                graph,
                label: format!("G from {name}"),
                family: None,
            })
        }
        _ => usage("give either --family with its sizes, or --edges <file>"),
    }
}

struct Oracle {
    field: FieldPrime,
    caps: Caps,
    region: Option<(usize, usize)>,
}

impl Oracle {
    fn from_args(a: &OracleArgs) -> Result<Self, CliError> {
        let field = FieldPrime::new(a.field)?;
        let mut caps = Caps::default();
        if let Some(c) = a.caps {
            caps.max_columns = c;
        }
        let region = match (a.i_max, a.j_max) {
            (Some(i), Some(j)) => Some((i, j)),
            (None, None) => None,
            _ => return Err(CliError::Usage("--i-max and --j-max must be given together".into())),
        };
        Ok(Oracle { field, caps, region })
    }

    fn lcm(&self) -> LcmOptions {
        LcmOptions {
            coefficients: Coefficients::Prime(self.field),
            caps: self.caps,
            ..LcmOptions::default()
        }
    }

    fn koszul(&self) -> KoszulOptions {
        KoszulOptions {
            field: self.field,
            caps: self.caps,
        }
    }
}

fn initial_subject(input: &GraphInput, how: &str) -> String {
    format!("S/in(J_G), G = {} [{how}]", input.label)
}

fn binomial_subject(input: &GraphInput, how: &str) -> String {
    format!("S/J_G, G = {} [{how}]", input.label)
}

fn relabel(mut t: BettiTable, subject: String) -> BettiTable {
    t.subject = subject;
    t
}

fn initial_by_lcm(input: &GraphInput, oracle: &Oracle) -> Result<BettiTable, ComputeError> {
    let t = lcm_lattice_betti(&initial_ideal(&input.graph), true, &oracle.lcm())?;
    Ok(relabel(t, initial_subject(input, "lcm lattice")))
}

fn initial_by_formula(input: &GraphInput) -> Result<BettiTable, CliError> {
    match input.family {
        Some(Family::CompleteBipartite { m, n }) => Ok(relabel(
            betti_bnbers_closed_form(m, n)?,
            initial_subject(input, "closed-form sums"),
        )),
        _ => Err(CliError::Usage("--method formula applies to --family kmn only".into())),
    }
}

/// A total table of `S/in(J_G)`, by the lcm lattice or, past its caps, by formula.
fn initial_total(input: &GraphInput, oracle: &Oracle) -> Result<BettiTable, CliError> {
    match initial_by_lcm(input, oracle) {
        Err(e @ ComputeError::CapExceeded { .. }) => match input.family {
            Some(Family::CompleteBipartite { .. }) => initial_by_formula(input),
            _ => Err(e.into()),
        },
        other => Ok(other?),
    }
}

fn koszul_table(
    input: &GraphInput,
    ring: &QuotientRing,
    oracle: &Oracle,
    subject: impl Fn(&str) -> String,
) -> Result<BettiTable, CliError> {
    let p = oracle.field.modulus();
    Ok(match oracle.region {
        Some((i_max, j_max)) => relabel(
            koszul_betti(ring, i_max, j_max, &oracle.koszul())?,
            subject(&format!("Koszul over Z/{p}")),
        ),
        None => {
            let support = initial_total(input, oracle)?;
            relabel(
                koszul_betti_certified(ring, &support, &oracle.koszul())?,
                subject(&format!("Koszul over Z/{p} on the support of S/in(J_G)")),
            )
        }
    })
}

fn initial_table(input: &GraphInput, method: Method, oracle: &Oracle) -> Result<BettiTable, CliError> {
    match method {
        Method::Formula => initial_by_formula(input),
        Method::Lcm => Ok(initial_by_lcm(input, oracle)?),
        Method::Koszul => {
            let ring = QuotientRing::monomial(&initial_ideal(&input.graph));
            koszul_table(input, &ring, oracle, |how| initial_subject(input, how))
        }
        Method::MappingCone => Err(CliError::Usage(
            "--method mapping-cone produces a corner, not a table".into(),
        )),
    }
}

fn binomial_table(input: &GraphInput, method: Method, oracle: &Oracle) -> Result<BettiTable, CliError> {
    if method != Method::Koszul {
        return Err(CliError::Usage(
            "the binomial side is computed by --method koszul only".into(),
        ));
    }
    let ring = QuotientRing::binomial_edge(&groebner_basis(&input.graph));
    koszul_table(input, &ring, oracle, |how| binomial_subject(input, how))
}

#[derive(Debug, Serialize)]
struct StepJson {
    k: usize,
    generator: String,
    endpoints: (usize, usize),
    colon: String,
    quadrics: usize,
    variables: usize,
    shifted_top_degree: usize,
    running_total: u64,
}

#[derive(Debug, Serialize)]
struct CornerJson {
    subject: String,
    corner: BettiEntry,
    base: String,
    steps: Vec<StepJson>,
}

fn corner_json(input: &GraphInput, cert: &CornerCertificate) -> CornerJson {
    let n = cert.n;
    CornerJson {
        subject: initial_subject(input, "mapping cone"),
        corner: BettiEntry {
            i: n,
            j: 2 * n - 2,
            value: cert.value(),
        },
        base: format!(
            "J = {} and J : (x1*y{n}) = {} are complete intersections, so projdim S/I <= {}",
            cert.base.edge_path_ideal, cert.base.closing_colon, cert.base.projdim_bound
        ),
        steps: cert
            .steps
            .iter()
            .map(|s| StepJson {
                k: s.k,
                generator: s.generator.to_string(),
                endpoints: s.endpoints,
                colon: s.colon.to_string(),
                quadrics: s.quadric_count,
                variables: s.variable_count,
                shifted_top_degree: s.shifted_top_degree,
                running_total: s.running_total,
            })
            .collect(),
    }
}

fn render_corner(c: &CornerJson, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(c).expect("corner serializes") + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "k",
                "generator",
                "colon",
                "quadrics",
                "variables",
                "shifted_top_degree",
                "running_total",
            ])
            .expect("in-memory write");
            for s in &c.steps {
                w.serialize((
                    s.k,
                    &s.generator,
                    &s.colon,
                    s.quadrics,
                    s.variables,
                    s.shifted_top_degree,
                    s.running_total,
                ))
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
        }
        Format::Text => {
            let mut out = format!("{}\n{}\n", c.subject, c.base);
            for s in &c.steps {
                out.push_str(&format!(
                    "k = {:>2}  v = {:<24} colon = {}  ({} quadrics, {} variables, shifted top degree {})  total {}\n",
                    s.k, s.generator, s.colon, s.quadrics, s.variables, s.shifted_top_degree, s.running_total
                ));
            }
            out.push_str(&format!(
                "corner: beta({},{}) = {}\n",
                c.corner.i, c.corner.j, c.corner.value
            ));
            out
        }
    }
}

fn render_tables(tables: &[BettiTable], format: Format) -> String {
    match format {
        Format::Text => tables.iter().map(table_text).collect::<Vec<_>>().join("\n"),
        Format::Json => tables_json(tables),
        Format::Csv => tables_csv(tables),
    }
}

pub fn cmd_betti(a: &BettiArgs, format: Format) -> Result<(String, Exit), CliError> {
    let input = resolve_graph(&a.graph)?;
    let oracle = Oracle::from_args(&a.oracle)?;
    if a.method == Some(Method::MappingCone) {
        let Some(Family::Cycle { n }) = input.family else {
            return Err(CliError::Usage(
                "--method mapping-cone applies to --family cycle only".into(),
            ));
        };
        if a.side != Side::Initial {
            return Err(CliError::Usage(
                "--method mapping-cone computes the initial side only".into(),
            ));
        }
        let (_, cert) = cycle_corner_betti(n)?;
        return Ok((render_corner(&corner_json(&input, &cert), format), Exit::Success));
    }
    let tables = match a.side {
        Side::Initial => vec![initial_table(&input, a.method.unwrap_or(Method::Lcm), &oracle)?],
        Side::Binomial => vec![binomial_table(&input, a.method.unwrap_or(Method::Koszul), &oracle)?],
        Side::Both => vec![
            initial_table(&input, a.method.unwrap_or(Method::Lcm), &oracle)?,
            binomial_table(&input, a.method.unwrap_or(Method::Koszul), &oracle)?,
        ],
    };
    Ok((render_tables(&tables, format), Exit::Success))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Equal,
    Unequal,
    Undecided,
}

#[derive(Debug, Clone, Serialize)]
pub struct SideReport {
    pub provenance: String,
    pub table: Option<TableJson>,
    pub extremal: Option<Vec<BettiEntry>>,
    pub refusal: Option<String>,
}

impl SideReport {
    fn from_result(result: Result<BettiTable, CliError>) -> Result<(Self, Option<BettiTable>), CliError> {
        match result {
            Ok(t) => Ok((
                SideReport {
                    provenance: t.subject.clone(),
                    table: Some(TableJson::from(&t)),
                    extremal: t.extremal().ok(),
                    refusal: None,
                },
                Some(t),
            )),
            Err(e) if e.exit() == Exit::Undecided => Ok((
                SideReport {
                    provenance: "refused".into(),
                    table: None,
                    extremal: None,
                    refusal: Some(e.to_string()),
                },
                None,
            )),
            Err(e) => Err(e),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryComparison {
    pub i: usize,
    pub j: usize,
    pub initial: Option<u64>,
    pub binomial: Option<u64>,
}

/// Competing values for the corner `β_{p,p+2}` of `K_{m,n}`.
#[derive(Debug, Clone, Serialize)]
pub struct CornerCandidates {
    pub i: usize,
    pub j: usize,
    pub closed_form_sums: u64,
    /// `(m-1)+(n-1)`, the sums evaluated symbolically when `m = n`.
    pub symbolic: Option<u64>,
    pub quoted: u64,
    pub initial_oracle: Option<u64>,
    pub binomial_oracle: Option<u64>,
    pub supported: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub graph: String,
    pub vertices: usize,
    pub edges: usize,
    pub field: u64,
    pub initial: SideReport,
    pub binomial: SideReport,
    pub comparison: Vec<EntryComparison>,
    pub semicontinuity: Option<bool>,
    pub reference: Option<ReferenceRecord>,
    pub mapping_cone_corner: Option<u64>,
    pub corner_candidates: Option<CornerCandidates>,
    pub verdict: Verdict,
    pub reason: Option<String>,
}

impl ConjectureReport {
    pub fn exit(&self) -> Exit {
        match self.verdict {
            Verdict::Equal => Exit::Success,
            Verdict::Unequal => Exit::Failure,
            Verdict::Undecided => Exit::Undecided,
        }
    }
}

fn corner_candidates(
    family: Option<Family>,
    reference: Option<&ReferenceRecord>,
    ini: Option<&BettiTable>,
    bin: Option<&BettiTable>,
) -> Result<Option<CornerCandidates>, CliError> {
    let (Some(Family::CompleteBipartite { m, n }), Some(r)) = (family, reference) else {
        return Ok(None);
    };
    let (i, j) = r.corner;
    let closed_form_sums = betti_bnbers_closed_form(m, n)?.get(i, j);
    let symbolic = (m == n).then(|| (m - 1 + n - 1) as u64);
    let initial_oracle = ini.map(|t| t.get(i, j));
    let binomial_oracle = bin.filter(|t| t.covers(i, j)).map(|t| t.get(i, j));
    let mut supported = Vec::new();
    if let Some(truth) = binomial_oracle.or(initial_oracle) {
        if closed_form_sums == truth {
            supported.push("closed-form sums".to_string());
        }
        if symbolic == Some(truth) {
            supported.push("(m-1)+(n-1)".to_string());
        }
        if r.value == truth {
            supported.push("quoted".to_string());
        }
    }
    Ok(Some(CornerCandidates {
        i,
        j,
        closed_form_sums,
        symbolic,
        quoted: r.value,
        initial_oracle,
        binomial_oracle,
        supported,
    }))
}

pub fn conjecture_report(input: &GraphInput, oracle_args: &OracleArgs) -> Result<ConjectureReport, CliError> {
    let oracle = Oracle::from_args(oracle_args)?;
    let (initial, ini) = SideReport::from_result(initial_total(input, &oracle))?;
    let binomial_result = match &ini {
        Some(_) => binomial_table(input, Method::Koszul, &oracle),
        None => Err(CliError::Compute(ComputeError::Unsupported(
            "binomial side needs the initial table to certify its support".into(),
        ))),
    };
    let (binomial, bin) = match binomial_result {
        Err(CliError::Compute(ComputeError::Unsupported(msg))) if ini.is_none() => (
            SideReport {
                provenance: "not attempted".into(),
                table: None,
                extremal: None,
                refusal: Some(msg),
            },
            None,
        ),
        other => SideReport::from_result(other)?,
    };

    let mut positions: Vec<(usize, usize)> = initial
        .extremal
        .iter()
        .chain(binomial.extremal.iter())
        .flatten()
        .map(|e| (e.i, e.j))
        .collect();
    positions.sort_unstable();
    positions.dedup();
    let comparison = positions
        .into_iter()
        .map(|(i, j)| EntryComparison {
            i,
            j,
            initial: ini.as_ref().map(|t| t.get(i, j)),
            binomial: bin.as_ref().filter(|t| t.covers(i, j)).map(|t| t.get(i, j)),
        })
        .collect();
    let semicontinuity = match (&ini, &bin) {
        (Some(a), Some(b)) => Some(b.dominated_by(a).is_ok()),
        _ => None,
    };

    let reference = input.family.and_then(|f| paper_reference_values(f).ok());
    let mapping_cone_corner = match input.family {
        Some(Family::Cycle { n }) if n >= 4 => Some(cycle_corner_betti(n)?.0),
        _ => None,
    };
    let corner_candidates = corner_candidates(input.family, reference.as_ref(), ini.as_ref(), bin.as_ref())?;

    let (verdict, reason) = match (&initial.extremal, &binomial.extremal) {
        (Some(a), Some(b)) if a == b => (Verdict::Equal, None),
        (Some(_), Some(_)) => (Verdict::Unequal, Some("extremal sets differ".to_string())),
        _ => {
            let why = [&initial, &binomial]
                .iter()
                .find_map(|s| s.refusal.clone())
                .unwrap_or_else(|| "a table is bounded, so its extremal set is not certified".into());
            (Verdict::Undecided, Some(why))
        }
    };

    Ok(ConjectureReport {
        graph: input.label.clone(),
        vertices: input.graph.vertex_count(),
        edges: input.graph.edge_count(),
        field: oracle.field.modulus(),
        initial,
        binomial,
        comparison,
        semicontinuity,
        reference,
        mapping_cone_corner,
        corner_candidates,
        verdict,
        reason,
    })
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

fn side_text(name: &str, s: &SideReport) -> String {
    let mut out = format!("{name}:");
    match (&s.table, &s.refusal) {
        (Some(t), _) => out.push_str(&format!("\n{}", table_text(&t.to_table()))),
        (None, Some(r)) => out.push_str(&format!(" refused: {r}\n")),
        (None, None) => out.push_str(" not computed\n"),
    }
    out
}

pub fn render_conjecture(r: &ConjectureReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).expect("report serializes") + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["record", "i", "j", "value"]).expect("in-memory write");
            for (name, side) in [("initial", &r.initial), ("binomial", &r.binomial)] {
                for e in side.table.iter().flat_map(|t| &t.entries) {
                    w.serialize((name, e.i, e.j, e.value)).expect("in-memory write");
                }
                for e in side.extremal.iter().flatten() {
                    w.serialize((format!("{name} extremal"), e.i, e.j, e.value))
                        .expect("in-memory write");
                }
            }
            let verdict = serde_json::to_value(r.verdict).expect("verdict serializes");
            w.write_record(["verdict", "", "", verdict.as_str().unwrap_or_default()])
                .expect("in-memory write");
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
        }
        Format::Text => {
            let mut out = format!(
                "graph: {} ({} vertices, {} edges)\nfield: Z/{}\n",
                r.graph, r.vertices, r.edges, r.field
            );
            out.push_str(&side_text("initial side", &r.initial));
            out.push_str(&side_text("binomial side", &r.binomial));
            out.push_str("comparison at extremal positions:\n");
            for c in &r.comparison {
                out.push_str(&format!(
                    "  beta({},{}): initial {}, binomial {}\n",
                    c.i,
                    c.j,
                    opt(c.initial),
                    opt(c.binomial)
                ));
            }
            if let Some(s) = r.semicontinuity {
                out.push_str(&format!("semicontinuity: {}\n", if s { "holds" } else { "VIOLATED" }));
            }
            if let Some(rf) = &r.reference {
                out.push_str(&format!(
                    "published: projdim {}, reg {}, corner beta({},{}) = {}{}\n",
                    rf.projdim,
                    rf.reg,
                    rf.corner.0,
                    rf.corner.1,
                    rf.value,
                    if rf.disputed { " (disputed)" } else { "" }
                ));
            }
            if let Some(v) = r.mapping_cone_corner {
                out.push_str(&format!("mapping cone corner: {v}\n"));
            }
            if let Some(c) = &r.corner_candidates {
                out.push_str(&format!(
                    "corner beta({},{}): closed-form sums {}, (m-1)+(n-1) {}, quoted {}, initial oracle {}, binomial oracle {}; supported: {}\n",
                    c.i,
                    c.j,
                    c.closed_form_sums,
                    opt(c.symbolic),
                    c.quoted,
                    opt(c.initial_oracle),
                    opt(c.binomial_oracle),
                    if c.supported.is_empty() { "none".into() } else { c.supported.join(", ") }
                ));
            }
            let extremal = |s: &SideReport| s.extremal.as_deref().map_or_else(|| "-".into(), entry_list);
            out.push_str(&format!("extremal, initial: {}\n", extremal(&r.initial)));
            out.push_str(&format!("extremal, binomial: {}\n", extremal(&r.binomial)));
            let verdict = serde_json::to_value(r.verdict).expect("verdict serializes");
            out.push_str(&format!("verdict: {}", verdict.as_str().unwrap_or_default()));
            if let Some(why) = &r.reason {
                out.push_str(&format!(" ({why})"));
            }
            out.push('\n');
            out
        }
    }
}

pub fn cmd_conjecture(a: &ConjectureArgs, format: Format) -> Result<(String, Exit), CliError> {
    let input = resolve_graph(&a.graph)?;
    let report = conjecture_report(&input, &a.oracle)?;
    Ok((render_conjecture(&report, format), report.exit()))
}

#[derive(Debug, Serialize)]
struct VerifyJson<'a> {
    graph: &'a str,
    basis: &'a str,
    #[serde(flatten)]
    verification: &'a GbVerification,
    passed: bool,
}

fn parse_basis(text: &str, n: usize) -> Result<Vec<Binomial>, CliError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| Binomial::parse(l, n).map_err(|e| CliError::Compute(e.into())))
        .collect()
}

pub fn cmd_verify_gb(a: &VerifyArgs, format: Format) -> Result<(String, Exit), CliError> {
    let input = resolve_graph(&a.graph)?;
    let cap = a.pair_cap.unwrap_or(DEFAULT_PAIR_CAP);
    let (basis, v) = match &a.basis {
        Some(path) => {
            let candidate = parse_basis(&read(path)?, input.graph.vertex_count())?;
            (
                format!("file {}", path.display()),
                verify_basis(&input.graph, &candidate, cap)?,
            )
        }
        None => ("admissible paths".to_string(), verify_groebner(&input.graph, cap)?),
    };
    let exit = if v.passed() { Exit::Success } else { Exit::Failure };
    let out = match format {
        Format::Json => {
            let j = VerifyJson {
                graph: &input.label,
                basis: &basis,
                verification: &v,
                passed: v.passed(),
            };
            serde_json::to_string_pretty(&j).expect("report serializes") + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["field", "value"]).expect("in-memory write");
            for (k, val) in [
                ("graph", input.label.clone()),
                ("basis", basis),
                ("basis_size", v.basis_size.to_string()),
                ("s_pairs_checked", v.s_pairs_checked.to_string()),
                ("passed", v.passed().to_string()),
            ] {
                w.write_record([k, val.as_str()]).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
        }
        Format::Text => {
            let mut out = format!("graph: {}\nbasis: {} ({} elements)\n", input.label, basis, v.basis_size);
            out.push_str(&format!("S-pairs checked: {}\n", v.s_pairs_checked));
            match &v.failing_pair {
                None => out.push_str("S-polynomials: all reduce to 0\n"),
                Some((a, b, nf)) => out.push_str(&format!("S-polynomials: pair ({a}, {b}) leaves remainder {nf}\n")),
            }
            match v.reducedness_violation {
                None => out.push_str("reduced: yes\n"),
                Some((a, b)) => out.push_str(&format!(
                    "reduced: no, lead of element {a} divides a term of element {b}\n"
                )),
            }
            if let Some((i, j)) = v.missing_edge {
                out.push_str(&format!("generation: f_{{{i},{j}}} does not reduce to 0\n"));
            }
            if let Some(k) = v.foreign_element {
                out.push_str(&format!("membership: element {k} is not in J_G\n"));
            }
            out.push_str(&format!("result: {}\n", if v.passed() { "pass" } else { "fail" }));
            out
        }
    };
    Ok((out, exit))
}
