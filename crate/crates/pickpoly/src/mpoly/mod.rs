//! Sparse multivariate polynomials over the Gaussian rationals, with the
//! reflection/degree calculus used by rational inner functions: coefficient
//! conjugation, the reflection z^nu(Q) * conj(Q)(1/z), per-variable generic
//! degrees, degree deficiency, absolute irreducibility and factorization,
//! and a certified zero-free-on-polydisc semi-decision.

mod factor;
mod json;
mod linalg;
mod parse;
mod upoly;
mod zerofree;

pub use factor::{factor, factor_with_hints, is_irreducible, FactorOutcome, Factorization};
pub use json::{cpoly_from_json, cpoly_to_json};
pub use parse::{format_poly, parse_poly, ParseError};
pub use zerofree::{zero_free_on_polydisc, ZeroFreeVerdict};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

use crate::grat::GRat;

#[derive(Debug, Error, PartialEq)]
pub enum MpolyError {
    #[error("variable count mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("nu undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a nonconstant polynomial")]
    ConstantPolynomial,
    #[error("point dimension {0} does not match variable count {1}")]
    PointDimension(usize, usize),
}

/// Exponent vector alpha in N^n.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        assert!(!exponents.is_empty(), "ambient dimension must be >= 1");
        MultiIndex(exponents)
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex::new(vec![0; n])
    }

    pub fn unit(n: usize, var: usize) -> Self {
        assert!(var < n);
        let mut e = vec![0; n];
        e[var] = 1;
        MultiIndex(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, j: usize) -> u32 {
        self.0[j]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// |alpha| = sum of exponents.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise partial order: self <= other in every coordinate.
    pub fn le_componentwise(&self, other: &MultiIndex) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        assert_eq!(self.0.len(), other.0.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference; None when any coordinate would go negative.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        if !other.le_componentwise(self) {
            return None;
        }
        Some(MultiIndex(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }
}

impl Ord for MultiIndex {
    /// Graded lexicographic order with z1 < z2 < ... < zn.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Sparse multivariate polynomial with exact Gaussian-rational coefficients.
/// Invariant: no stored coefficient is zero, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq)]
pub struct CPoly {
    n: usize,
    terms: BTreeMap<MultiIndex, GRat>,
}

impl CPoly {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1);
        CPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: GRat) -> Self {
        let mut p = CPoly::zero(n);
        p.add_term(MultiIndex::zero(n), c);
        p
    }

    pub fn one(n: usize) -> Self {
        CPoly::constant(n, GRat::one())
    }

    /// The coordinate function z_{var+1} (0-based slot).
    pub fn coordinate(n: usize, var: usize) -> Self {
        let mut p = CPoly::zero(n);
        p.add_term(MultiIndex::unit(n, var), GRat::one());
        p
    }

    pub fn monomial(n: usize, alpha: MultiIndex, c: GRat) -> Self {
        assert_eq!(alpha.len(), n);
        let mut p = CPoly::zero(n);
        p.add_term(alpha, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_zero())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &GRat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, alpha: &MultiIndex) -> GRat {
        self.terms.get(alpha).cloned().unwrap_or_else(GRat::zero)
    }

    pub fn constant_term(&self) -> GRat {
        self.coefficient(&MultiIndex::zero(self.n))
    }

    /// Adds c * z^alpha, dropping the term if the sum cancels.
    pub fn add_term(&mut self, alpha: MultiIndex, c: GRat) {
        assert_eq!(alpha.len(), self.n, "exponent arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(alpha) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// The support: exponents with nonzero coefficient. For exact
    /// coefficients this coincides with the derivative criterion.
    pub fn support(&self) -> Vec<MultiIndex> {
        self.terms.keys().cloned().collect()
    }

    /// Total degree; None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|a| a.total()).max()
    }

    /// nu(Q): the vector of per-variable generic degrees. With exact
    /// coefficients this is the maximal exponent per variable over the
    /// support.
    pub fn nu(&self) -> Result<MultiIndex, MpolyError> {
        if self.is_zero() {
            return Err(MpolyError::ZeroPolynomial);
        }
        let mut nu = vec![0u32; self.n];
        for alpha in self.terms.keys() {
            for (j, e) in alpha.exponents().iter().enumerate() {
                nu[j] = nu[j].max(*e);
            }
        }
        Ok(MultiIndex::new(nu))
    }

    /// Degree deficiency: nu(Q) not in supp(Q). Equivalent to
    /// |nu(Q)| > deg(Q).
    pub fn is_deficient(&self) -> Result<bool, MpolyError> {
        if self.is_constant() {
            return Err(MpolyError::ConstantPolynomial);
        }
        let nu = self.nu()?;
        Ok(!self.terms.contains_key(&nu))
    }

    /// Coefficientwise complex conjugation.
    pub fn conj_coeffs(&self) -> CPoly {
        let mut p = CPoly::zero(self.n);
        for (alpha, c) in &self.terms {
            p.add_term(alpha.clone(), c.conj());
        }
        p
    }

    /// The reflection z^nu(Q) * conj(Q)(1/z): term a z^alpha maps to
    /// conj(a) z^(nu - alpha).
    pub fn reflect(&self) -> Result<CPoly, MpolyError> {
        let nu = self.nu()?;
        let mut p = CPoly::zero(self.n);
        for (alpha, c) in &self.terms {
            let beta = nu.checked_sub(alpha).expect("nu dominates support");
            p.add_term(beta, c.conj());
        }
        Ok(p)
    }

    pub fn neg(&self) -> CPoly {
        let mut p = CPoly::zero(self.n);
        for (alpha, c) in &self.terms {
            p.add_term(alpha.clone(), -c);
        }
        p
    }

    pub fn add(&self, other: &CPoly) -> Result<CPoly, MpolyError> {
        if self.n != other.n {
            return Err(MpolyError::DimensionMismatch(self.n, other.n));
        }
        let mut p = self.clone();
        for (alpha, c) in &other.terms {
            p.add_term(alpha.clone(), c.clone());
        }
        Ok(p)
    }

    pub fn sub(&self, other: &CPoly) -> Result<CPoly, MpolyError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &CPoly) -> Result<CPoly, MpolyError> {
        if self.n != other.n {
            return Err(MpolyError::DimensionMismatch(self.n, other.n));
        }
        let mut p = CPoly::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                p.add_term(a.add(b), ca * cb);
            }
        }
        Ok(p)
    }

    pub fn scale(&self, c: &GRat) -> CPoly {
        let mut p = CPoly::zero(self.n);
        if c.is_zero() {
            return p;
        }
        for (alpha, coeff) in &self.terms {
            p.add_term(alpha.clone(), coeff * c);
        }
        p
    }

    pub fn pow(&self, k: u32) -> CPoly {
        let mut acc = CPoly::one(self.n);
        for _ in 0..k {
            acc = acc.mul(self).expect("same arity");
        }
        acc
    }

    /// Partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> CPoly {
        assert!(var < self.n);
        let mut p = CPoly::zero(self.n);
        for (alpha, c) in &self.terms {
            let e = alpha.get(var);
            if e == 0 {
                continue;
            }
            let mut exps = alpha.exponents().to_vec();
            exps[var] = e - 1;
            p.add_term(MultiIndex::new(exps), c * &GRat::from_int(e as i64));
        }
        p
    }

    /// Exact evaluation at a Gaussian-rational point, Horner per variable
    /// in the fixed ordering z1, z2, ..., zn.
    pub fn eval_exact(&self, point: &[GRat]) -> Result<GRat, MpolyError> {
        if point.len() != self.n {
            return Err(MpolyError::PointDimension(point.len(), self.n));
        }
        let flat: Vec<(Vec<u32>, GRat)> = self
            .terms
            .iter()
            .map(|(a, c)| (a.exponents().to_vec(), c.clone()))
            .collect();
        Ok(horner_exact_rec(&flat, 0, point, self.n))
    }

    /// Floating evaluation at a complex point, same Horner ordering.
    pub fn eval_c64(&self, point: &[Complex64]) -> Result<Complex64, MpolyError> {
        if point.len() != self.n {
            return Err(MpolyError::PointDimension(point.len(), self.n));
        }
        let terms: Vec<(Vec<u32>, Complex64)> = self
            .terms
            .iter()
            .map(|(a, c)| (a.exponents().to_vec(), c.to_c64()))
            .collect();
        Ok(horner_c64(&terms, 0, point))
    }

    /// Substitutes each variable by the given polynomial (all images share
    /// one ambient arity). Exact; used for affine slicing.
    pub fn substitute(&self, images: &[CPoly]) -> Result<CPoly, MpolyError> {
        if images.len() != self.n {
            return Err(MpolyError::PointDimension(images.len(), self.n));
        }
        let m = images[0].nvars();
        for im in images {
            if im.nvars() != m {
                return Err(MpolyError::DimensionMismatch(im.nvars(), m));
            }
        }
        let mut acc = CPoly::zero(m);
        for (alpha, c) in &self.terms {
            let mut term = CPoly::constant(m, c.clone());
            for (j, e) in alpha.exponents().iter().enumerate() {
                if *e > 0 {
                    term = term.mul(&images[j].pow(*e))?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&MultiIndex, &GRat)> {
        self.terms.iter().next_back()
    }

    /// Divides self by the leading coefficient, returning (monic, lc).
    pub fn monic_graded_lex(&self) -> (CPoly, GRat) {
        match self.leading() {
            None => (self.clone(), GRat::one()),
            Some((_, lc)) => {
                let lc = lc.clone();
                let inv = lc.inv().expect("nonzero leading coefficient");
                (self.scale(&inv), lc)
            }
        }
    }

    /// Exact division: Some(q) with self = q * d, or None when d does not
    /// divide self. Long division on graded-lex leading terms.
    pub fn div_exact(&self, d: &CPoly) -> Option<CPoly> {
        assert_eq!(self.n, d.n, "arity mismatch");
        let (dl_alpha, dl_coef) = d.leading()?;
        let dl_alpha = dl_alpha.clone();
        let dl_inv = dl_coef.inv().expect("nonzero");
        let mut rem = self.clone();
        let mut quot = CPoly::zero(self.n);
        while !rem.is_zero() {
            let (ra, rc) = rem.leading().map(|(a, c)| (a.clone(), c.clone()))?;
            let shift = ra.checked_sub(&dl_alpha)?;
            let q = &rc * &dl_inv;
            quot.add_term(shift.clone(), q.clone());
            let sub = d.mul(&CPoly::monomial(self.n, shift, q)).expect("same arity");
            rem = rem.sub(&sub).expect("same arity");
        }
        Some(quot)
    }

    /// Minimal exponent per variable over the support (the monomial content).
    pub fn min_exponents(&self) -> Option<MultiIndex> {
        if self.is_zero() {
            return None;
        }
        let mut lo = vec![u32::MAX; self.n];
        for alpha in self.terms.keys() {
            for (j, e) in alpha.exponents().iter().enumerate() {
                lo[j] = lo[j].min(*e);
            }
        }
        Some(MultiIndex::new(lo))
    }

    /// Divides out z^shift; caller guarantees divisibility.
    pub fn shift_down(&self, shift: &MultiIndex) -> CPoly {
        let mut p = CPoly::zero(self.n);
        for (alpha, c) in &self.terms {
            p.add_term(
                alpha.checked_sub(shift).expect("monomial divides all terms"),
                c.clone(),
            );
        }
        p
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|a| a.get(var)).max()
    }

    /// Sum of |coefficient| upper bounds; crude sup bound on the closed
    /// unit polydisc.
    pub fn coeff_abs_sum_upper(&self) -> f64 {
        self.terms.values().map(|c| c.abs_upper()).sum()
    }
}

fn horner_exact_rec(terms: &[(Vec<u32>, GRat)], var: usize, point: &[GRat], n: usize) -> GRat {
    if terms.is_empty() {
        return GRat::zero();
    }
    if var == n {
        return terms.iter().fold(GRat::zero(), |acc, (_, c)| acc + c.clone());
    }
    let max_e = terms.iter().map(|(a, _)| a[var]).max().unwrap_or(0);
    let mut buckets: Vec<Vec<(Vec<u32>, GRat)>> = vec![Vec::new(); (max_e + 1) as usize];
    for (a, c) in terms {
        buckets[a[var] as usize].push((a.clone(), c.clone()));
    }
    let mut acc = GRat::zero();
    for e in (0..=max_e).rev() {
        acc = acc * point[var].clone();
        let part = horner_exact_rec(&buckets[e as usize], var + 1, point, n);
        acc = acc + part;
    }
    acc
}

fn horner_c64(terms: &[(Vec<u32>, Complex64)], var: usize, point: &[Complex64]) -> Complex64 {
    if terms.is_empty() {
        return Complex64::new(0.0, 0.0);
    }
    if var == point.len() {
        return terms.iter().map(|(_, c)| *c).sum();
    }
    let max_e = terms.iter().map(|(a, _)| a[var]).max().unwrap_or(0);
    let mut buckets: Vec<Vec<(Vec<u32>, Complex64)>> = vec![Vec::new(); (max_e + 1) as usize];
    for (a, c) in terms {
        buckets[a[var] as usize].push((a.clone(), *c));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for e in (0..=max_e).rev() {
        acc *= point[var];
        acc += horner_c64(&buckets[e as usize], var + 1, point);
    }
    acc
}

impl fmt::Debug for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_poly(self))
    }
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_poly(self))
    }
}

#[cfg(test)]
mod tests;
