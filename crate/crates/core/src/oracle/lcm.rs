//! Multigraded Betti numbers of a monomial ideal from its lcm lattice.
//!
//! For every `b` in the lcm lattice `L_I`, `β_{i,b}(S/I)` equals the reduced
//! homology `H̃_{i-2}` of the open interval `(1, b)` of `L_I`. Two complexes
//! with that homology are available: the order complex of the interval
//! itself, and the upper Koszul complex
//! `K^b = { F ⊆ supp(b) squarefree : x^b / x^F ∈ I }`, which is much smaller.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::linalg::{Coefficients, MatrixModP};
use super::Caps;
use crate::betti::BettiTable;
use crate::error::ComputeError;
use crate::ideal::MonomialIdeal;
use crate::poly::Monomial;

/// Which complex computes the interval homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum IntervalComplex {
    #[default]
    UpperKoszul,
    OrderComplex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LcmOptions {
    pub coefficients: Coefficients,
    pub caps: Caps,
    pub complex: IntervalComplex,
}

/// All lcms of nonempty generator subsets, sorted.
pub fn lcm_lattice(ideal: &MonomialIdeal, cap: usize) -> Result<Vec<Monomial>, ComputeError> {
    let gens = ideal.generators();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.to_vec();
    while let Some(e) = frontier.pop() {
        for g in gens {
            let l = e.lcm(g).expect("same ambient ring");
            if !seen.contains(&l) {
                seen.insert(l.clone());
                frontier.push(l);
                if seen.len() > cap {
                    return Err(ComputeError::CapExceeded {
                        what: "lcm lattice".into(),
                        size: seen.len(),
                        cap,
                    });
                }
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// A simplicial complex given by its faces, each face a sorted vertex list.
struct FaceComplex {
    /// `faces[d + 1]` holds the faces of dimension `d`; `faces[0]` is `[∅]`.
    faces: Vec<Vec<Vec<u32>>>,
}

impl FaceComplex {
    fn from_faces(mut all: Vec<Vec<u32>>) -> Self {
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let top = all.last().map_or(0, Vec::len);
        let mut faces = vec![Vec::new(); top + 1];
        for f in all {
            faces[f.len()].push(f);
        }
        FaceComplex { faces }
    }

    /// Dimensions of `H̃_d` for `d = -1, 0, 1, ...`, indexed by `d + 1`.
    fn reduced_homology(&self, coefficients: Coefficients, max_columns: usize) -> Result<Vec<u64>, ComputeError> {
        let levels = self.faces.len();
        // rank of ∂ from level l to level l-1, for l >= 1.
        let mut ranks = vec![0usize; levels + 1];
        for (l, cols) in self.faces.iter().enumerate().skip(1) {
            if cols.len() > max_columns {
                return Err(ComputeError::CapExceeded {
                    what: format!("boundary matrix in dimension {}", l as i64 - 1),
                    size: cols.len(),
                    cap: max_columns,
                });
            }
            let index: HashMap<&[u32], u32> = self.faces[l - 1]
                .iter()
                .enumerate()
                .map(|(k, f)| (f.as_slice(), k as u32))
                .collect();
            let mut m = MatrixModP::new(self.faces[l - 1].len());
            for f in cols {
                let col = (0..f.len())
                    .map(|drop| {
                        let facet: Vec<u32> = f
                            .iter()
                            .enumerate()
                            .filter(|&(k, _)| k != drop)
                            .map(|(_, &v)| v)
                            .collect();
                        let sign = if drop % 2 == 0 { 1 } else { -1 };
                        (index[facet.as_slice()], sign)
                    })
                    .collect();
                m.push_column(col);
            }
            ranks[l] = m.rank(coefficients)?;
        }
        Ok((0..levels)
            .map(|l| (self.faces[l].len() - ranks[l] - ranks[l + 1]) as u64)
            .collect())
    }
}

fn upper_koszul_faces(b: &Monomial, gens: &[&Monomial], face_cap: usize) -> Result<Vec<Vec<u32>>, ComputeError> {
    let support: Vec<usize> = b.support().collect();
    let full: u64 = (1u64 << support.len()) - 1;
    // F avoids every position where g already uses all of b's exponent.
    let mut maximal: Vec<u64> = gens
        .iter()
        .map(|g| {
            let tight = support
                .iter()
                .enumerate()
                .filter(|&(_, &p)| g.exponents()[p] == b.exponents()[p])
                .fold(0u64, |acc, (k, _)| acc | (1 << k));
            full & !tight
        })
        .collect();
    maximal.sort_unstable();
    maximal.dedup();
    let snapshot = maximal.clone();
    maximal.retain(|&m| !snapshot.iter().any(|&o| o != m && o & m == m));

    let mut faces: HashSet<u64> = HashSet::new();
    for &m in &maximal {
        let mut sub = m;
        loop {
            faces.insert(sub);
            if faces.len() > face_cap {
                return Err(ComputeError::CapExceeded {
                    what: format!("upper Koszul complex at {b}"),
                    size: faces.len(),
                    cap: face_cap,
                });
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & m;
        }
    }
    Ok(faces
        .into_iter()
        .map(|mask| (0..support.len() as u32).filter(|k| mask >> k & 1 == 1).collect())
        .collect())
}

fn order_complex_faces(b: &Monomial, lattice: &[Monomial], chain_cap: usize) -> Result<Vec<Vec<u32>>, ComputeError> {
    let mut below: Vec<&Monomial> = lattice.iter().filter(|e| *e != b && e.divides_unchecked(b)).collect();
    below.sort_by_key(|e| e.degree());
    let mut faces = vec![Vec::new()];
    let mut stack: Vec<Vec<u32>> = (0..below.len() as u32).map(|v| vec![v]).collect();
    while let Some(chain) = stack.pop() {
        let top = *chain.last().expect("chains are nonempty");
        for next in top + 1..below.len() as u32 {
            let (lo, hi) = (below[top as usize], below[next as usize]);
            if lo != hi && lo.divides_unchecked(hi) {
                let mut longer = chain.clone();
                longer.push(next);
                stack.push(longer);
            }
        }
        faces.push(chain);
        if faces.len() > chain_cap {
            return Err(ComputeError::CapExceeded {
                what: format!("order complex below {b}"),
                size: faces.len(),
                cap: chain_cap,
            });
        }
    }
    Ok(faces)
}

/// `(i, b, β_{i,b})` for one lattice element `b`.
type Contributions = Vec<(usize, Monomial, u64)>;

/// Multigraded Betti numbers `β_{i,b}(S/I)` for every lattice element `b`.
pub fn lcm_lattice_multigraded(
    ideal: &MonomialIdeal,
    opts: &LcmOptions,
) -> Result<BTreeMap<(usize, Monomial), u64>, ComputeError> {
    let lattice = lcm_lattice(ideal, opts.caps.max_lattice)?;
    let per_element: Vec<Result<Contributions, ComputeError>> = lattice
        .par_iter()
        .map(|b| {
            let faces = match opts.complex {
                IntervalComplex::UpperKoszul => {
                    let gens: Vec<&Monomial> = ideal.generators().iter().filter(|g| g.divides_unchecked(b)).collect();
                    upper_koszul_faces(b, &gens, opts.caps.max_spot)?
                }
                IntervalComplex::OrderComplex => order_complex_faces(b, &lattice, opts.caps.max_spot)?,
            };
            let homology = FaceComplex::from_faces(faces).reduced_homology(opts.coefficients, opts.caps.max_columns)?;
            // H̃_d sits at level d + 1 and contributes to β_{d+2}.
            Ok(homology
                .iter()
                .enumerate()
                .filter(|&(_, &h)| h > 0)
                .map(|(level, &h)| (level + 1, b.clone(), h))
                .collect())
        })
        .collect();
    let mut out = BTreeMap::new();
    for entry in per_element {
        for (i, b, h) in entry? {
            out.insert((i, b), h);
        }
    }
    Ok(out)
}

/// Total graded Betti table of `S/I` from lcm-lattice homology.
pub fn lcm_lattice_betti(
    ideal: &MonomialIdeal,
    squarefree_required: bool,
    opts: &LcmOptions,
) -> Result<BettiTable, ComputeError> {
    if squarefree_required && !ideal.is_squarefree() {
        return Err(ComputeError::InvalidParameters(format!("{ideal} is not squarefree")));
    }
    let mut table = BettiTable::total(format!("S/{ideal} [lcm lattice]"));
    if ideal.is_unit() {
        return Ok(table);
    }
    table.set(0, 0, 1);
    for ((i, b), h) in lcm_lattice_multigraded(ideal, opts)? {
        table.add(i, b.degree(), h);
    }
    Ok(table)
}
