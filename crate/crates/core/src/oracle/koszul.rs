//! Graded Betti numbers `β_{i,j}(S/J) = dim H_i(K(x, y) ⊗ S/J)_j` over `Z/p`.
//!
//! The Koszul spot `K_{i,j}` has basis `e_F ⊗ u` with `F` an `i`-subset of
//! the `2n` variables and `u` a standard monomial of degree `j - i`. The
//! differential sends `e_F ⊗ u` to `Σ_t (-1)^t NF(x_{F_t} u) e_{F \ F_t}`.
//! Both input kinds admit a fine grading that the differential preserves,
//! so every rank is taken blockwise.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;

use super::linalg::{Coefficients, FieldPrime, MatrixModP};
use super::Caps;
use crate::betti::{BettiTable, Completeness};
use crate::error::ComputeError;
use crate::groebner::GroebnerBasis;
use crate::ideal::MonomialIdeal;
use crate::poly::{normal_form_monomial, Binomial, Monomial};

#[derive(Debug, Clone)]
enum Relations {
    /// Reduced Gröbner basis of pure-difference binomials `x_i y_j - x_j y_i`.
    Binomial(Vec<Binomial>),
    /// Minimal monomial generators; the normal form of a multiple is zero.
    Monomial(Vec<Monomial>),
}

/// `S/J` presented by a Gröbner basis of `J`.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    vertex_count: usize,
    relations: Relations,
    pub label: String,
}

impl QuotientRing {
    pub fn binomial_edge(gb: &GroebnerBasis) -> Self {
        QuotientRing {
            vertex_count: gb.vertex_count(),
            relations: Relations::Binomial(gb.elements().to_vec()),
            label: "S/J_G".into(),
        }
    }

    pub fn monomial(ideal: &MonomialIdeal) -> Self {
        QuotientRing {
            vertex_count: ideal.vertex_count(),
            relations: Relations::Monomial(ideal.generators().to_vec()),
            label: format!("S/{ideal}"),
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn leads(&self) -> Vec<Monomial> {
        match &self.relations {
            Relations::Binomial(b) => b.iter().map(|g| g.lead().clone()).collect(),
            Relations::Monomial(m) => m.clone(),
        }
    }

    fn normal_form(&self, m: &Monomial) -> Option<Monomial> {
        match &self.relations {
            Relations::Binomial(b) => Some(normal_form_monomial(m, b)),
            Relations::Monomial(gens) => (!gens.iter().any(|g| g.divides_unchecked(m))).then(|| m.clone()),
        }
    }

    /// Degree of `e_F ⊗ u` in the finest grading the relations respect:
    /// per-vertex counts plus x-degree for binomials, the full exponent for monomials.
    fn key(&self, mask: u64, u: &Monomial) -> Vec<u16> {
        let e = u.exponents();
        let n = self.vertex_count;
        let at = |p: usize| e[p] + ((mask >> p) & 1) as u16;
        match self.relations {
            Relations::Binomial(_) => {
                let mut key: Vec<u16> = (0..n).map(|v| at(v) + at(n + v)).collect();
                key.push((0..n).map(at).sum());
                key
            }
            Relations::Monomial(_) => (0..2 * n).map(at).collect(),
        }
    }
}

impl From<&GroebnerBasis> for QuotientRing {
    fn from(gb: &GroebnerBasis) -> Self {
        QuotientRing::binomial_edge(gb)
    }
}

impl From<&MonomialIdeal> for QuotientRing {
    fn from(ideal: &MonomialIdeal) -> Self {
        QuotientRing::monomial(ideal)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct KoszulOptions {
    pub field: FieldPrime,
    pub caps: Caps,
}

/// Degree-`d` monomials in `2n` variables divisible by no lead, lex descending.
pub fn standard_monomials(leads: &[Monomial], n: usize, d: usize) -> Vec<Monomial> {
    fn fill(pos: usize, left: u16, exps: &mut Vec<u16>, leads: &[Monomial], out: &mut Vec<Monomial>) {
        if pos + 1 == exps.len() {
            exps[pos] = left;
            let m = Monomial::new(exps.clone());
            if !leads.iter().any(|l| l.divides_unchecked(&m)) {
                out.push(m);
            }
            exps[pos] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[pos] = e;
            fill(pos + 1, left - e, exps, leads, out);
        }
        exps[pos] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    fill(0, d as u16, &mut vec![0; 2 * n], leads, &mut out);
    out
}

fn subsets_of_size(vars: usize, size: usize) -> Vec<u64> {
    use itertools::Itertools;
    (0..vars)
        .combinations(size)
        .map(|c| c.into_iter().fold(0u64, |acc, p| acc | (1 << p)))
        .collect()
}

/// Basis of one Koszul spot, grouped by fine degree.
type Spot = BTreeMap<Vec<u16>, Vec<(u64, u32)>>;

struct Engine<'a> {
    ring: &'a QuotientRing,
    opts: KoszulOptions,
    leads: Vec<Monomial>,
    standard: HashMap<usize, (Vec<Monomial>, HashMap<Monomial, u32>)>,
    spots: HashMap<(usize, usize), Spot>,
    ranks: HashMap<(usize, usize), usize>,
}

impl<'a> Engine<'a> {
    fn new(ring: &'a QuotientRing, opts: KoszulOptions) -> Result<Self, ComputeError> {
        if 2 * ring.vertex_count > 64 {
            return Err(ComputeError::Unsupported(format!(
                "Koszul oracle handles at most 32 vertices, got {}",
                ring.vertex_count
            )));
        }
        Ok(Engine {
            ring,
            opts,
            leads: ring.leads(),
            standard: HashMap::new(),
            spots: HashMap::new(),
            ranks: HashMap::new(),
        })
    }

    fn vars(&self) -> usize {
        2 * self.ring.vertex_count
    }

    fn standard(&mut self, d: usize) -> &(Vec<Monomial>, HashMap<Monomial, u32>) {
        let (leads, n) = (&self.leads, self.ring.vertex_count);
        self.standard.entry(d).or_insert_with(|| {
            let list = standard_monomials(leads, n, d);
            let index = list.iter().enumerate().map(|(k, m)| (m.clone(), k as u32)).collect();
            (list, index)
        })
    }

    fn spot_size(&mut self, i: usize, j: usize) -> usize {
        if i > self.vars() || i > j {
            return 0;
        }
        let subsets = crate::betti::binomial(self.vars(), i) as usize;
        subsets.saturating_mul(self.standard(j - i).0.len())
    }

    fn ensure_spot(&mut self, i: usize, j: usize) -> Result<(), ComputeError> {
        if self.spots.contains_key(&(i, j)) {
            return Ok(());
        }
        let size = self.spot_size(i, j);
        if size > self.opts.caps.max_spot {
            return Err(ComputeError::CapExceeded {
                what: format!("Koszul spot K_{{{i},{j}}} of {}", self.ring.label),
                size,
                cap: self.opts.caps.max_spot,
            });
        }
        let mut spot = Spot::new();
        if size > 0 {
            let vars = self.vars();
            let standard = &self.standard(j - i).0.clone();
            for mask in subsets_of_size(vars, i) {
                for (k, u) in standard.iter().enumerate() {
                    spot.entry(self.ring.key(mask, u)).or_default().push((mask, k as u32));
                }
            }
        }
        self.spots.insert((i, j), spot);
        Ok(())
    }

    /// The block of `d_i : K_{i,j} -> K_{i-1,j}` at one fine degree.
    fn block(&self, i: usize, j: usize, cols: &[(u64, u32)], rows: &[(u64, u32)]) -> MatrixModP {
        let row_index: HashMap<(u64, u32), u32> = rows.iter().enumerate().map(|(r, &b)| (b, r as u32)).collect();
        let (col_std, _) = &self.standard[&(j - i)];
        let (_, row_std) = &self.standard[&(j - i + 1)];
        let mut m = MatrixModP::new(rows.len());
        for &(mask, u) in cols {
            let u = &col_std[u as usize];
            let mut col = Vec::new();
            let mut t = 0;
            for pos in 0..self.vars() {
                if mask >> pos & 1 == 0 {
                    continue;
                }
                let mut e = u.exponents().to_vec();
                e[pos] += 1;
                if let Some(w) = self.ring.normal_form(&Monomial::new(e)) {
                    let w = row_std[&w];
                    let r = row_index[&(mask & !(1 << pos), w)];
                    col.push((r, if t % 2 == 0 { 1 } else { -1 }));
                }
                t += 1;
            }
            m.push_column(col);
        }
        m
    }

    /// Rank of `d_i` in internal degree `j`.
    fn rank(&mut self, i: usize, j: usize) -> Result<usize, ComputeError> {
        if i == 0 || i > self.vars() || i > j {
            return Ok(0);
        }
        if let Some(&r) = self.ranks.get(&(i, j)) {
            return Ok(r);
        }
        self.ensure_spot(i, j)?;
        self.ensure_spot(i - 1, j)?;
        self.standard(j - i + 1);
        let cap = self.opts.caps.max_columns;
        let coefficients = Coefficients::Prime(self.opts.field);
        let (cols, rows) = (&self.spots[&(i, j)], &self.spots[&(i - 1, j)]);
        let label = &self.ring.label;
        let this = &*self;
        let blocks: Vec<Result<usize, ComputeError>> = cols
            .par_iter()
            .map(|(key, c)| {
                let Some(r) = rows.get(key) else {
                    return Ok(0);
                };
                if c.len() > cap {
                    return Err(ComputeError::CapExceeded {
                        what: format!("Koszul block of d_{i} in degree {j} of {label}"),
                        size: c.len(),
                        cap,
                    });
                }
                this.block(i, j, c, r).rank(coefficients)
            })
            .collect();
        let mut total = 0;
        for b in blocks {
            total += b?;
        }
        self.ranks.insert((i, j), total);
        Ok(total)
    }

    fn betti(&mut self, i: usize, j: usize) -> Result<u64, ComputeError> {
        if i > self.vars() || i > j {
            return Ok(0);
        }
        self.ensure_spot(i, j)?;
        let dim: usize = self.spots[&(i, j)].values().map(Vec::len).sum();
        let out = dim - self.rank(i, j)? - self.rank(i + 1, j)?;
        Ok(out as u64)
    }
}

/// `β_{i,j}(S/J)` at the given positions; zero values are omitted.
pub fn koszul_betti_at(
    ring: &QuotientRing,
    positions: impl IntoIterator<Item = (usize, usize)>,
    opts: &KoszulOptions,
) -> Result<BTreeMap<(usize, usize), u64>, ComputeError> {
    let positions: BTreeSet<(usize, usize)> = positions.into_iter().collect();
    let mut engine = Engine::new(ring, *opts)?;
    for &(i, j) in &positions {
        for ii in i.saturating_sub(1)..=i + 1 {
            let size = engine.spot_size(ii, j);
            if size > opts.caps.max_spot {
                return Err(ComputeError::CapExceeded {
                    what: format!("Koszul spot K_{{{ii},{j}}} of {}", ring.label),
                    size,
                    cap: opts.caps.max_spot,
                });
            }
        }
    }
    let mut out = BTreeMap::new();
    // Degree-major order lets finished degrees drop their spots.
    let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(i, j) in &positions {
        by_degree.entry(j).or_default().push(i);
    }
    for (j, is) in by_degree {
        for i in is {
            let b = engine.betti(i, j)?;
            if b > 0 {
                out.insert((i, j), b);
            }
        }
        engine.spots.retain(|&(_, jj), _| jj > j);
    }
    Ok(out)
}

/// Bounded table: every `β_{i,j}` with `i <= i_max`, `j <= j_max`.
pub fn koszul_betti(
    ring: &QuotientRing,
    i_max: usize,
    j_max: usize,
    opts: &KoszulOptions,
) -> Result<BettiTable, ComputeError> {
    let positions = (0..=j_max).flat_map(|j| (0..=i_max.min(j)).map(move |i| (i, j)));
    let values = koszul_betti_at(ring, positions, opts)?;
    let mut table = BettiTable::new(
        format!("{} [Koszul, p = {}]", ring.label, opts.field.modulus()),
        Completeness::Bounded { i_max, j_max },
    );
    for ((i, j), v) in values {
        table.set(i, j, v);
    }
    Ok(table)
}

/// Total table of `S/J`, computed only where `dominating` is nonzero.
///
/// `dominating` must be the total table of `S/in(J)` for the order the
/// Gröbner basis was taken in; upper semicontinuity then forces every other
/// entry of `S/J` to vanish.
pub fn koszul_betti_certified(
    ring: &QuotientRing,
    dominating: &BettiTable,
    opts: &KoszulOptions,
) -> Result<BettiTable, ComputeError> {
    if !dominating.is_total() {
        return Err(ComputeError::InvalidParameters(
            "certification needs a total table of the initial ideal".into(),
        ));
    }
    let values = koszul_betti_at(ring, dominating.entries().iter().map(|e| (e.i, e.j)), opts)?;
    let mut table = BettiTable::total(format!(
        "{} [Koszul, p = {}, certified on the initial support]",
        ring.label,
        opts.field.modulus()
    ));
    for ((i, j), v) in values {
        table.set(i, j, v);
    }
    Ok(table)
}

/// The full matrix of `d_i : K_{i,j} -> K_{i-1,j}` in spot-basis order.
pub fn koszul_differential(
    ring: &QuotientRing,
    i: usize,
    j: usize,
    opts: &KoszulOptions,
) -> Result<MatrixModP, ComputeError> {
    if i == 0 || i > j {
        return Err(ComputeError::InvalidParameters(format!(
            "no differential d_{i} in degree {j}"
        )));
    }
    let mut engine = Engine::new(ring, *opts)?;
    engine.ensure_spot(i, j)?;
    engine.ensure_spot(i - 1, j)?;
    engine.standard(j - i + 1);
    let flat = |s: &Spot| -> Vec<(u64, u32)> {
        let mut v: Vec<(u64, u32)> = s.values().flatten().copied().collect();
        v.sort_unstable();
        v
    };
    let (cols, rows) = (flat(&engine.spots[&(i, j)]), flat(&engine.spots[&(i - 1, j)]));
    Ok(engine.block(i, j, &cols, &rows))
}
