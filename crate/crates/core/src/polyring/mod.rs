//! Multivariate polynomials over ℚ with weighted gradings.
//!
//! Everything the singularity and Hodge computations need reduces to one
//! question: what is the dimension of a graded piece of `ℚ[x]/I` when `I`
//! is generated by quasi-homogeneous polynomials? [`graded_quotient_dim`]
//! answers it with exact integer linear algebra.

pub(crate) mod graded;
pub mod linalg;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use graded::{
    graded_quotient_dim, is_quasi_homogeneous, monomials_of_weighted_degree, weighted_degree,
    IntegerGrading,
};
pub use parse::{parse_poly, parse_poly_infer, parse_rational};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exponent vector, one entry per variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The monomial `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Positive rational weights `w_i` together with a positive degree `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    weights: Vec<Rational>,
    degree: Rational,
}

impl WeightSystem {
    pub fn new(weights: Vec<Rational>, degree: Rational) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("no weights given".into()));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_positive()) {
            return Err(Error::InvalidWeights(format!("weight {w} is not positive")));
        }
        if !degree.is_positive() {
            return Err(Error::InvalidWeights(format!("degree {degree} is not positive")));
        }
        Ok(WeightSystem { weights, degree })
    }

    pub fn from_integers(weights: &[i64], degree: i64) -> Result<Self> {
        WeightSystem::new(weights.iter().map(|&w| rat(w)).collect(), rat(degree))
    }

    /// Standard grading: every variable has weight one.
    pub fn standard(nvars: usize, degree: i64) -> Result<Self> {
        WeightSystem::from_integers(&vec![1; nvars], degree)
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn degree(&self) -> &Rational {
        &self.degree
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    /// Same weights, different degree.
    pub fn with_degree(&self, degree: Rational) -> Result<Self> {
        WeightSystem::new(self.weights.clone(), degree)
    }

    /// Scale weights and degree by the lcm of their denominators, then divide
    /// by the gcd of the resulting integers.
    pub fn normalized(&self) -> IntegerGrading {
        let all = self.weights.iter().chain(std::iter::once(&self.degree));
        let lcm = all
            .clone()
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let scaled: Vec<BigInt> = all.map(|r| r.numer() * (&lcm / r.denom())).collect();
        let gcd = scaled.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        let ints: Vec<u64> = scaled
            .iter()
            .map(|v| (v / &gcd).to_u64().expect("normalized weight exceeds u64"))
            .collect();
        let (degree, weights) = ints.split_last().expect("weights are non-empty");
        IntegerGrading {
            weights: weights.to_vec(),
            degree: *degree,
            scale: Rational::new(lcm, gcd),
        }
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "w=({}), d={}", ws.join(","), self.degree)
    }
}

/// Polynomial with exact rational coefficients, optionally tagged with a
/// weight system for which it is quasi-homogeneous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
    weights: Option<WeightSystem>,
}

impl WeightedPoly {
    pub fn zero(nvars: usize) -> Self {
        WeightedPoly {
            nvars,
            terms: BTreeMap::new(),
            weights: None,
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        WeightedPoly::from_terms(nvars, [(Monomial::one(nvars), c)])
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        WeightedPoly::from_terms(m.nvars(), [(m, c)])
    }

    /// Builds a polynomial, merging repeated monomials and dropping zero
    /// coefficients.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial has wrong number of variables");
            *map.entry(m).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        WeightedPoly {
            nvars,
            terms: map,
            weights: None,
        }
    }

    /// Sum of `c * x_i^a` terms; the usual way to write Fermat-type examples.
    pub fn from_int_terms(nvars: usize, terms: &[(i64, &[u32])]) -> Self {
        WeightedPoly::from_terms(
            nvars,
            terms
                .iter()
                .map(|(c, e)| (Monomial::new(e.to_vec()), rat(*c))),
        )
    }

    /// `Σ x_i^{a_i}`.
    pub fn brieskorn_pham(exponents: &[u32]) -> Self {
        let n = exponents.len();
        WeightedPoly::from_terms(
            n,
            exponents.iter().enumerate().map(|(i, &a)| {
                let mut e = vec![0; n];
                e[i] = a;
                (Monomial::new(e), rat(1))
            }),
        )
    }

    /// Attaches `w`, failing unless every term has weighted degree `w.degree()`.
    pub fn with_weights(mut self, w: WeightSystem) -> Result<Self> {
        if w.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: w.nvars(),
            });
        }
        if !is_quasi_homogeneous(&self, &w) {
            return Err(Error::NotQuasiHomogeneous(format!("{self} for {w}")));
        }
        self.weights = Some(w);
        Ok(self)
    }

    pub fn weight_system(&self) -> Option<&WeightSystem> {
        self.weights.as_ref()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Smallest total degree among the terms (the order at the origin).
    pub fn order(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::total_degree).min()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = WeightedPoly::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, v)| (m.clone(), v * c)),
        );
        if !out.is_zero() {
            out.weights = self.weights.clone();
        }
        out
    }

    /// Formal partial derivative. The weight tag follows along with degree
    /// lowered by `w_i` when the result is non-zero and of positive degree.
    pub fn partial_derivative(&self, var: usize) -> Self {
        assert!(var < self.nvars, "variable index {var} out of range");
        let mut out = WeightedPoly::from_terms(
            self.nvars,
            self.terms.iter().filter(|(m, _)| m.0[var] > 0).map(|(m, c)| {
                let mut e = m.0.clone();
                let a = e[var];
                e[var] -= 1;
                (Monomial(e), c * rat(i64::from(a)))
            }),
        );
        if let Some(w) = &self.weights {
            let degree = w.degree() - &w.weights()[var];
            if !out.is_zero() && degree.is_positive() {
                out.weights = w.with_degree(degree).ok();
            }
        }
        out
    }

    /// Jacobian ideal generators `∂f/∂x_0, …, ∂f/∂x_{n-1}`.
    pub fn jacobian(&self) -> Vec<WeightedPoly> {
        (0..self.nvars).map(|i| self.partial_derivative(i)).collect()
    }

    /// Primitive integer multiple of the polynomial (content divided out,
    /// leading coefficient positive). Spans the same line over ℚ.
    pub(crate) fn integer_terms(&self) -> Vec<(Monomial, BigInt)> {
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<(Monomial, BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.numer() * (&lcm / c.denom())))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
        if !g.is_zero() {
            for (_, v) in &mut ints {
                *v /= &g;
            }
        }
        ints
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // Highest monomials (lex on exponents, descending) first.
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.total_degree() == 0 {
                factors.push(abs.to_string());
            }
            for (j, &e) in m.0.iter().enumerate() {
                let name = names.get(j).cloned().unwrap_or_else(|| format!("x{j}"));
                match e {
                    0 => {}
                    1 => factors.push(name),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for WeightedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}

impl Add for &WeightedPoly {
    type Output = WeightedPoly;
    fn add(self, rhs: &WeightedPoly) -> WeightedPoly {
        assert_eq!(self.nvars, rhs.nvars);
        WeightedPoly::from_terms(
            self.nvars,
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

impl Neg for &WeightedPoly {
    type Output = WeightedPoly;
    fn neg(self) -> WeightedPoly {
        self.scale(&rat(-1))
    }
}

impl Sub for &WeightedPoly {
    type Output = WeightedPoly;
    fn sub(self, rhs: &WeightedPoly) -> WeightedPoly {
        self + &(-rhs)
    }
}

impl Mul for &WeightedPoly {
    type Output = WeightedPoly;
    fn mul(self, rhs: &WeightedPoly) -> WeightedPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut terms = Vec::with_capacity(self.len() * rhs.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                terms.push((a.mul(b), ca * cb));
            }
        }
        WeightedPoly::from_terms(self.nvars, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy(terms: &[(i64, &[u32])]) -> WeightedPoly {
        WeightedPoly::from_int_terms(2, terms)
    }

    #[test]
    fn derivative_of_cusp() {
        let f = xy(&[(1, &[2, 0]), (1, &[0, 3])]);
        assert_eq!(f.partial_derivative(0), xy(&[(2, &[1, 0])]));
        assert_eq!(f.partial_derivative(1), xy(&[(3, &[0, 2])]));
    }

    #[test]
    fn derivative_of_fermat_quintic() {
        let f = WeightedPoly::brieskorn_pham(&[5; 5]);
        let d0 = f.partial_derivative(0);
        assert_eq!(d0, WeightedPoly::from_int_terms(5, &[(5, &[4, 0, 0, 0, 0])]));
    }

    #[test]
    fn derivative_lowers_weighted_degree() {
        let w = WeightSystem::from_integers(&[3, 2], 6).unwrap();
        let f = xy(&[(1, &[2, 0]), (1, &[0, 3])]).with_weights(w).unwrap();
        let dy = f.partial_derivative(1);
        assert_eq!(dy.weight_system().unwrap().degree(), &rat(4));
        let dx = f.partial_derivative(0);
        assert_eq!(dx.weight_system().unwrap().degree(), &rat(3));
    }

    #[test]
    fn normalization_clears_denominators_and_gcd() {
        let w = WeightSystem::new(vec![rat(1), rat(1), rat(2), ratio(4, 5)], rat(4)).unwrap();
        let g = w.normalized();
        assert_eq!(g.weights, vec![5, 5, 10, 4]);
        assert_eq!(g.degree, 20);

        let w = WeightSystem::from_integers(&[2, 4], 8).unwrap();
        let g = w.normalized();
        assert_eq!(g.weights, vec![1, 2]);
        assert_eq!(g.degree, 4);
    }

    #[test]
    fn weights_must_be_positive() {
        assert!(WeightSystem::from_integers(&[1, 0], 2).is_err());
        assert!(WeightSystem::from_integers(&[1, 1], 0).is_err());
        assert!(WeightSystem::from_integers(&[], 2).is_err());
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let f = xy(&[(1, &[1, 0]), (-1, &[1, 0]), (2, &[0, 1])]);
        assert_eq!(f.len(), 1);
        assert_eq!(f.coeff(&Monomial::new(vec![0, 1])), rat(2));
    }

    #[test]
    fn arithmetic_and_display() {
        let x = WeightedPoly::term(Monomial::var(2, 0), rat(1));
        let y = WeightedPoly::term(Monomial::var(2, 1), ratio(3, 2));
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p.to_string(), "x0^2 - 9/4*x1^2");
    }

    #[test]
    fn integer_terms_are_primitive() {
        let f = WeightedPoly::from_terms(
            1,
            [
                (Monomial::new(vec![2]), ratio(2, 3)),
                (Monomial::new(vec![1]), ratio(4, 9)),
            ],
        );
        let ints: Vec<i64> = f
            .integer_terms()
            .iter()
            .map(|(_, c)| c.to_i64().unwrap())
            .collect();
        assert_eq!(ints, vec![2, 3]);
    }
}
