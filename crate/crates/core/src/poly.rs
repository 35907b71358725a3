//! Monomials and pure-difference binomials in `K[x_1..x_n, y_1..y_n]`.
//!
//! Exponent vectors are dense with length `2n`: positions `0..n` hold
//! `x_1..x_n` and positions `n..2n` hold `y_1..y_n`. With that layout the
//! derived ordering on the exponent vector is exactly lex with
//! `x_1 > ... > x_n > y_1 > ... > y_n`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::PolyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VarKind {
    X,
    Y,
}

/// A variable `x_i` or `y_i` with `1 <= i <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Variable {
    pub kind: VarKind,
    pub index: usize,
}

impl Variable {
    pub fn x(index: usize) -> Self {
        Variable {
            kind: VarKind::X,
            index,
        }
    }

    pub fn y(index: usize) -> Self {
        Variable {
            kind: VarKind::Y,
            index,
        }
    }

    /// Position in an exponent vector over `n` vertices.
    pub fn position(self, n: usize) -> usize {
        assert!(
            self.index >= 1 && self.index <= n,
            "variable index {} outside 1..={n}",
            self.index
        );
        match self.kind {
            VarKind::X => self.index - 1,
            VarKind::Y => n + self.index - 1,
        }
    }

    pub fn from_position(pos: usize, n: usize) -> Self {
        if pos < n {
            Variable::x(pos + 1)
        } else {
            Variable::y(pos - n + 1)
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VarKind::X => write!(f, "x{}", self.index),
            VarKind::Y => write!(f, "y{}", self.index),
        }
    }
}

/// A monomial as a dense exponent vector of length `2n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    exponents: Vec<u16>,
}

impl Monomial {
    /// # Panics
    /// Panics if the length is odd.
    pub fn new(exponents: Vec<u16>) -> Self {
        assert!(
            exponents.len().is_multiple_of(2),
            "exponent vector must have even length 2n"
        );
        Monomial { exponents }
    }

    /// The constant monomial `1` over `n` vertices.
    pub fn one(n: usize) -> Self {
        Monomial {
            exponents: vec![0; 2 * n],
        }
    }

    pub fn var(n: usize, v: Variable) -> Self {
        let mut m = Monomial::one(n);
        m.exponents[v.position(n)] = 1;
        m
    }

    /// `prod x_i (i in xs) * prod y_j (j in ys)`, repeated indices raising the power.
    pub fn from_indices(n: usize, xs: &[usize], ys: &[usize]) -> Self {
        let mut m = Monomial::one(n);
        for &i in xs {
            m.exponents[Variable::x(i).position(n)] += 1;
        }
        for &j in ys {
            m.exponents[Variable::y(j).position(n)] += 1;
        }
        m
    }

    /// Squarefree monomial from a bitmask over variable positions.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let exponents = (0..2 * n).map(|p| ((mask >> p) & 1) as u16).collect();
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exponents
    }

    pub fn vertex_count(&self) -> usize {
        self.exponents.len() / 2
    }

    pub fn var_count(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Variable positions with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(p, _)| p)
    }

    /// Support as a bitmask; only meaningful for `2n <= 64`.
    pub fn support_mask(&self) -> u64 {
        debug_assert!(self.exponents.len() <= 64);
        self.support().fold(0u64, |acc, p| acc | (1 << p))
    }

    fn check(&self, other: &Monomial) -> Result<(), PolyError> {
        if self.exponents.len() != other.exponents.len() {
            return Err(PolyError::Dimension(self.exponents.len(), other.exponents.len()));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u16, u16) -> u16) -> Monomial {
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Monomial { exponents }
    }

    pub fn multiply(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool, PolyError> {
        self.check(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(&a, &b)| a <= b)
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        self.check(other)?;
        Ok(self.zip_with(other, u16::min))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        self.check(other)?;
        Ok(self.zip_with(other, u16::max))
    }

    /// `self / gcd(self, other)`: the least `u` with `self | u * other`.
    pub fn colon(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| a.saturating_sub(b)))
    }

    /// Exact quotient `self / other`, or `None` when `other` does not divide `self`.
    pub fn quotient(&self, other: &Monomial) -> Result<Option<Monomial>, PolyError> {
        self.check(other)?;
        if !other.divides_unchecked(self) {
            return Ok(None);
        }
        Ok(Some(self.zip_with(other, |a, b| a - b)))
    }

    /// Parses the display form (`x1*x4*y3`, `x2^2*y1`, `1`) over `n` vertices.
    pub fn parse(text: &str, n: usize) -> Result<Monomial, PolyError> {
        let err = |msg: &str| PolyError::Parse(text.to_string(), msg.to_string());
        let text_trim = text.trim();
        let mut m = Monomial::one(n);
        if text_trim == "1" {
            return Ok(m);
        }
        for factor in text_trim.split('*') {
            let factor = factor.trim();
            let (base, power) = match factor.split_once('^') {
                Some((b, p)) => (b, p.parse::<u16>().map_err(|_| err("bad exponent"))?),
                None => (factor, 1),
            };
            let kind = match base.chars().next() {
                Some('x') => VarKind::X,
                Some('y') => VarKind::Y,
                _ => return Err(err("factors must be x<i> or y<i>")),
            };
            let index: usize = base[1..].parse().map_err(|_| err("bad variable index"))?;
            if index == 0 || index > n {
                return Err(err("variable index out of range"));
            }
            m.exponents[Variable { kind, index }.position(n)] += power;
        }
        Ok(m)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let n = self.vertex_count();
        let mut first = true;
        for (pos, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", Variable::from_position(pos, n))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Lex comparison with an explicit ambient check.
pub fn lex_compare(a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
    a.check(b)?;
    Ok(a.cmp(b))
}

/// `lead - trail` with `lead > trail` in lex.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Binomial {
    lead: Monomial,
    trail: Monomial,
}

impl Binomial {
    pub fn new(lead: Monomial, trail: Monomial) -> Result<Self, PolyError> {
        if lex_compare(&lead, &trail)? != Ordering::Greater {
            return Err(PolyError::NotOrdered);
        }
        Ok(Binomial { lead, trail })
    }

    /// `f_ij = x_i y_j - x_j y_i` for `i < j`.
    pub fn edge(n: usize, i: usize, j: usize) -> Self {
        assert!(i < j, "edge binomial needs i < j");
        Binomial {
            lead: Monomial::from_indices(n, &[i], &[j]),
            trail: Monomial::from_indices(n, &[j], &[i]),
        }
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn trail(&self) -> &Monomial {
        &self.trail
    }

    pub fn scale(&self, m: &Monomial) -> Result<Binomial, PolyError> {
        Ok(Binomial {
            lead: self.lead.multiply(m)?,
            trail: self.trail.multiply(m)?,
        })
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut p = Polynomial::zero();
        p.add_term(self.lead.clone(), 1);
        p.add_term(self.trail.clone(), -1);
        p
    }

    /// Parses `lead - trail` in the monomial display form.
    pub fn parse(text: &str, n: usize) -> Result<Self, PolyError> {
        let (a, b) = text
            .split_once('-')
            .ok_or_else(|| PolyError::Parse(text.to_string(), "expected `lead - trail`".into()))?;
        Binomial::new(Monomial::parse(a, n)?, Monomial::parse(b, n)?)
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.trail)
    }
}

impl fmt::Debug for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A polynomial with exact integer coefficients; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, i64>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn monomial(m: Monomial) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, 1);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().checked_add(c).expect("coefficient overflow");
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Terms from lex-largest to smallest.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().rev().map(|(m, &c)| (m, c))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, i64)> {
        self.terms.iter().next_back().map(|(m, &c)| (m, c))
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Polynomial, PolyError> {
        let mut out = Polynomial::zero();
        for (t, &c) in &self.terms {
            out.add_term(t.multiply(m)?, c);
        }
        Ok(out)
    }

    fn pop_leading(&mut self) -> Option<(Monomial, i64)> {
        self.terms.pop_last()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// First element of `basis` whose lead divides `m`, with the cofactor.
fn find_reducer<'a>(m: &Monomial, basis: &'a [Binomial]) -> Option<(&'a Binomial, Monomial)> {
    basis.iter().find_map(|g| {
        if g.lead.divides_unchecked(m) {
            Some((g, m.zip_with(&g.lead, |a, b| a - b)))
        } else {
            None
        }
    })
}

/// Normal form of `f` modulo `basis`.
///
/// The lex-largest remaining term is processed first; a term `c * q * lead(g)`
/// is replaced by `c * q * trail(g)`, using the first `g` in list order whose
/// lead divides it. Terms that no lead divides move to the result.
pub fn reduce(f: &Polynomial, basis: &[Binomial]) -> Result<Polynomial, PolyError> {
    if let (Some((m, _)), Some(g)) = (f.leading_term(), basis.first()) {
        m.check(g.lead())?;
    }
    let mut pending = f.clone();
    let mut result = Polynomial::zero();
    while let Some((m, c)) = pending.pop_leading() {
        match find_reducer(&m, basis) {
            Some((g, cofactor)) => {
                pending.add_term(cofactor.zip_with(&g.trail, |a, b| a + b), c);
            }
            None => result.add_term(m, c),
        }
    }
    Ok(result)
}

/// Normal form of a single monomial modulo pure-difference binomials:
/// always a single monomial with coefficient `+1`.
pub fn normal_form_monomial(m: &Monomial, basis: &[Binomial]) -> Monomial {
    let mut current = m.clone();
    while let Some((g, cofactor)) = find_reducer(&current, basis) {
        current = cofactor.zip_with(&g.trail, |a, b| a + b);
    }
    current
}

/// `lcm/lead(g1) * g1 - lcm/lead(g2) * g2`.
pub fn s_polynomial(g1: &Binomial, g2: &Binomial) -> Result<Polynomial, PolyError> {
    let l = g1.lead.lcm(&g2.lead)?;
    let c1 = l.zip_with(&g1.lead, |a, b| a - b);
    let c2 = l.zip_with(&g2.lead, |a, b| a - b);
    let p1 = g1.to_polynomial().mul_monomial(&c1)?;
    let p2 = g2.to_polynomial().mul_monomial(&c2)?;
    Ok(p1.sub(&p2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(n: usize, s: &str) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    #[test]
    fn lex_examples() {
        let n = 4;
        assert_eq!(
            lex_compare(&mono(n, "x1*y2"), &mono(n, "x2*y1")).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            lex_compare(&mono(n, "x3*y1*y4"), &mono(n, "x3*y2*y4")).unwrap(),
            Ordering::Greater
        );
        let m = mono(n, "x2*y3");
        assert_eq!(lex_compare(&m, &m).unwrap(), Ordering::Equal);
        assert_eq!(
            lex_compare(&Monomial::one(3), &Monomial::one(4)),
            Err(PolyError::Dimension(6, 8))
        );
    }

    #[test]
    fn monomial_op_examples() {
        let n = 4;
        assert_eq!(mono(n, "x1*y2").colon(&mono(n, "x1*x4*y3")).unwrap(), mono(n, "y2"));
        let a = mono(n, "x2*y3^2");
        assert_eq!(a.colon(&Monomial::one(n)).unwrap(), a);
        assert_eq!(mono(n, "x1*y4").gcd(&mono(n, "x2*y4")).unwrap(), mono(n, "y4"));
        assert!(mono(n, "x1").divides(&mono(n, "x1*y2")).unwrap());
        assert!(!mono(n, "x1^2").divides(&mono(n, "x1*y2")).unwrap());
        assert!(Monomial::one(2).multiply(&Monomial::one(3)).is_err());
    }

    #[test]
    fn display_and_parse() {
        let n = 4;
        assert_eq!(mono(n, "x1*x4*y3").to_string(), "x1*x4*y3");
        assert_eq!(Monomial::one(n).to_string(), "1");
        assert_eq!(mono(n, "y3*x1^2").to_string(), "x1^2*y3");
        assert!(Monomial::parse("x5", 4).is_err());
        assert!(Monomial::parse("z1", 4).is_err());
        let b = Binomial::parse("x1*y2 - x2*y1", 2).unwrap();
        assert_eq!(b, Binomial::edge(2, 1, 2));
        assert_eq!(b.to_string(), "x1*y2 - x2*y1");
        assert_eq!(Binomial::parse("x2*y1 - x1*y2", 2), Err(PolyError::NotOrdered));
    }

    #[test]
    fn reduce_examples() {
        let f12 = Binomial::edge(3, 1, 2);
        let member = f12.to_polynomial().mul_monomial(&mono(3, "x2*y1")).unwrap();
        assert!(reduce(&member, std::slice::from_ref(&f12)).unwrap().is_zero());

        let p = Polynomial::monomial(mono(3, "x1*y3"));
        assert_eq!(reduce(&p, std::slice::from_ref(&f12)).unwrap(), p);
    }

    #[test]
    fn triangle_s_pair_reduces_to_zero() {
        // The triangle's reduced basis is just its three edge binomials.
        let gamma = vec![
            Binomial::edge(3, 1, 2),
            Binomial::edge(3, 1, 3),
            Binomial::edge(3, 2, 3),
        ];
        let s = s_polynomial(&gamma[0], &gamma[2]).unwrap();
        assert!(!s.is_zero());
        assert!(reduce(&s, &gamma).unwrap().is_zero());
    }

    #[test]
    fn s_polynomial_criteria() {
        let g = Binomial::edge(4, 1, 2);
        assert!(s_polynomial(&g, &g).unwrap().is_zero());
        let h = Binomial::edge(4, 3, 4);
        let s = s_polynomial(&g, &h).unwrap();
        // Coprime leads: x3y4*(-x2y1) + x1y2*x4y3, nonzero but reducible to 0.
        assert_eq!(s.terms().count(), 2);
        assert!(reduce(&s, &[g, h]).unwrap().is_zero());
    }

    #[test]
    fn normal_form_monomial_matches_reduce() {
        let basis = vec![Binomial::edge(3, 1, 2), Binomial::edge(3, 2, 3)];
        for s in ["x1*y2*y3", "x1*x2*y2*y3", "x1^2*y2^2", "y1*y2"] {
            let m = mono(3, s);
            let nf = normal_form_monomial(&m, &basis);
            assert_eq!(
                reduce(&Polynomial::monomial(m), &basis).unwrap(),
                Polynomial::monomial(nf)
            );
        }
    }

    fn arb_monomial(vars: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u16..3, vars).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn lex_is_multiplicative(a in arb_monomial(6), b in arb_monomial(6), c in arb_monomial(6)) {
            let ac = a.multiply(&c).unwrap();
            let bc = b.multiply(&c).unwrap();
            prop_assert_eq!(a.cmp(&b), ac.cmp(&bc));
        }

        #[test]
        fn reduce_is_idempotent_and_kills_multiples(m in arb_monomial(6), t in arb_monomial(6), k in 0usize..3) {
            let basis = vec![Binomial::edge(3, 1, 2), Binomial::edge(3, 1, 3), Binomial::edge(3, 2, 3)];
            let mut f = basis[k].to_polynomial().mul_monomial(&m).unwrap();
            prop_assert!(reduce(&f, &basis).unwrap().is_zero());
            f.add_term(t, 1);
            let once = reduce(&f, &basis).unwrap();
            prop_assert_eq!(reduce(&once, &basis).unwrap(), once);
        }
    }

    #[test]
    fn colon_is_minimal_multiplier() {
        // Exhaustive over exponent vectors in {0,1,2}^2 (one vertex).
        let all: Vec<Monomial> = (0..3u16)
            .flat_map(|a| (0..3u16).map(move |b| Monomial::new(vec![a, b])))
            .collect();
        for a in &all {
            for b in &all {
                let u = a.colon(b).unwrap();
                assert!(a.divides(&u.multiply(b).unwrap()).unwrap());
                for w in &all {
                    if a.divides(&w.multiply(b).unwrap()).unwrap() {
                        assert!(u.divides(w).unwrap(), "{u} should divide {w}");
                    }
                }
            }
        }
    }
}
