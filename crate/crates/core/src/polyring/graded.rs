use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::linalg::{SparseEchelon, SparseRow};
use super::{Monomial, Rational, WeightSystem, WeightedPoly};
use crate::error::{Error, Result};

/// A weight system rescaled to coprime positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerGrading {
    pub weights: Vec<u64>,
    pub degree: u64,
    /// Factor taking rational degrees to integer ones.
    pub scale: Rational,
}

impl IntegerGrading {
    /// Integer image of a rational degree, if it has one.
    pub fn scale_degree(&self, t: &Rational) -> Option<i64> {
        let s = t * &self.scale;
        if s.is_integer() {
            i64::try_from(s.to_integer()).ok()
        } else {
            None
        }
    }

    pub fn degree_of(&self, m: &Monomial) -> u64 {
        m.exponents()
            .iter()
            .zip(&self.weights)
            .map(|(&e, &w)| u64::from(e) * w)
            .sum()
    }

    pub fn max_weight(&self) -> u64 {
        self.weights.iter().copied().max().unwrap_or(0)
    }

    /// Monomials of integer weighted degree `t`, lexicographically
    /// descending in the exponent vector (so `x², xy, y²`).
    pub fn monomials(&self, t: u64) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = vec![0u32; self.weights.len()];
        enumerate(&self.weights, t, 0, &mut current, &mut out);
        out
    }
}

fn enumerate(weights: &[u64], remaining: u64, i: usize, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if i == weights.len() {
        if remaining == 0 {
            out.push(Monomial::new(current.clone()));
        }
        return;
    }
    let w = weights[i];
    for e in (0..=remaining / w).rev() {
        current[i] = e as u32;
        enumerate(weights, remaining - e * w, i + 1, current, out);
    }
    current[i] = 0;
}

/// `Σ e_i · w_i`.
pub fn weighted_degree(m: &Monomial, w: &WeightSystem) -> Result<Rational> {
    if m.nvars() != w.nvars() {
        return Err(Error::DimensionMismatch {
            expected: w.nvars(),
            got: m.nvars(),
        });
    }
    Ok(m
        .exponents()
        .iter()
        .zip(w.weights())
        .map(|(&e, wi)| wi * Rational::from_integer(BigInt::from(e)))
        .fold(Rational::zero(), |acc, v| acc + v))
}

/// True iff every term of `f` has weighted degree `w.degree()`.
pub fn is_quasi_homogeneous(f: &WeightedPoly, w: &WeightSystem) -> bool {
    f.nvars() == w.nvars()
        && f
            .terms()
            .all(|(m, _)| weighted_degree(m, w).is_ok_and(|d| &d == w.degree()))
}

/// All monomials in `nvars` variables of weighted degree `target`,
/// lexicographically descending in the exponent vector.
pub fn monomials_of_weighted_degree(w: &WeightSystem, target: &Rational, nvars: usize) -> Result<Vec<Monomial>> {
    if nvars != w.nvars() {
        return Err(Error::DimensionMismatch {
            expected: w.nvars(),
            got: nvars,
        });
    }
    let grading = w.normalized();
    Ok(match grading.scale_degree(target) {
        Some(t) if t >= 0 => grading.monomials(t as u64),
        _ => Vec::new(),
    })
}

/// Weighted degree of a polynomial all of whose terms share one degree.
fn homogeneous_degree(f: &WeightedPoly, grading: &IntegerGrading) -> Result<Option<u64>> {
    let mut degrees = f.terms().map(|(m, _)| grading.degree_of(m));
    let Some(first) = degrees.next() else {
        return Ok(None);
    };
    if degrees.any(|d| d != first) {
        return Err(Error::NotQuasiHomogeneous(format!("generator {f} has terms of mixed weighted degree")));
    }
    Ok(Some(first))
}

/// Generators prepared for repeated graded-piece computations.
pub(crate) struct GradedIdeal {
    grading: IntegerGrading,
    generators: Vec<(u64, Vec<(Monomial, BigInt)>)>,
}

impl GradedIdeal {
    pub(crate) fn new(generators: &[WeightedPoly], w: &WeightSystem) -> Result<Self> {
        let grading = w.normalized();
        let mut gens = Vec::new();
        for g in generators {
            if g.nvars() != w.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: w.nvars(),
                    got: g.nvars(),
                });
            }
            if let Some(d) = homogeneous_degree(g, &grading)? {
                gens.push((d, g.integer_terms()));
            }
        }
        Ok(GradedIdeal {
            grading,
            generators: gens,
        })
    }

    pub(crate) fn grading(&self) -> &IntegerGrading {
        &self.grading
    }

    /// Dimension of the degree-`t` piece of the quotient, `t` in integer
    /// units.
    pub(crate) fn quotient_dim(&self, t: u64) -> usize {
        let columns = self.grading.monomials(t);
        if columns.is_empty() {
            return 0;
        }
        let index: HashMap<&Monomial, usize> = columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows: Vec<SparseRow> = Vec::new();
        for (d, terms) in &self.generators {
            if *d > t {
                continue;
            }
            for m in self.grading.monomials(t - d) {
                let mut row: SparseRow = terms
                    .iter()
                    .map(|(tm, c)| (index[&tm.mul(&m)], c.clone()))
                    .collect();
                row.sort_by_key(|e| e.0);
                rows.push(row);
            }
        }
        rows.sort_by_key(Vec::len);
        let mut echelon = SparseEchelon::new();
        for row in rows {
            echelon.insert(row);
            if echelon.rank() == columns.len() {
                break;
            }
        }
        columns.len() - echelon.rank()
    }
}

/// Dimension of the weighted-degree-`target` piece of `ℚ[x]/(generators)`.
///
/// Each generator must be quasi-homogeneous for the weights of `w` (the
/// degree of `w` itself is not used). The piece is the span of all monomials
/// of degree `target` modulo the span of `monomial · generator` products
/// landing in that degree.
pub fn graded_quotient_dim(generators: &[WeightedPoly], w: &WeightSystem, target: &Rational) -> Result<usize> {
    let ideal = GradedIdeal::new(generators, w)?;
    Ok(match ideal.grading().scale_degree(target) {
        Some(t) if t >= 0 => ideal.quotient_dim(t as u64),
        _ => 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{rat, ratio};

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn weighted_degree_examples() {
        let w = WeightSystem::from_integers(&[1, 2], 1).unwrap();
        assert_eq!(weighted_degree(&mono(&[3, 1]), &w).unwrap(), rat(5));
        assert_eq!(weighted_degree(&mono(&[0, 0]), &w).unwrap(), rat(0));
        // y² on P(1,1,1,2)
        let w = WeightSystem::from_integers(&[1, 1, 1, 2], 4).unwrap();
        assert_eq!(weighted_degree(&mono(&[0, 0, 0, 2]), &w).unwrap(), rat(4));
        assert!(weighted_degree(&mono(&[1]), &w).is_err());
    }

    #[test]
    fn quasi_homogeneity_examples() {
        // x² − u² − y³ + v³ in variable order (x, u, y, v)
        let f = WeightedPoly::from_int_terms(
            4,
            &[(1, &[2, 0, 0, 0]), (-1, &[0, 2, 0, 0]), (-1, &[0, 0, 3, 0]), (1, &[0, 0, 0, 3])],
        );
        let w = WeightSystem::from_integers(&[3, 3, 2, 2], 6).unwrap();
        assert!(is_quasi_homogeneous(&f, &w));

        let cusp = WeightedPoly::from_int_terms(2, &[(1, &[2, 0]), (1, &[0, 3])]);
        assert!(!is_quasi_homogeneous(&cusp, &WeightSystem::from_integers(&[1, 1], 2).unwrap()));

        let fermat = WeightedPoly::brieskorn_pham(&[5; 5]);
        assert!(is_quasi_homogeneous(&fermat, &WeightSystem::standard(5, 5).unwrap()));
    }

    #[test]
    fn monomial_enumeration_order() {
        let w = WeightSystem::from_integers(&[1, 1], 2).unwrap();
        let ms = monomials_of_weighted_degree(&w, &rat(2), 2).unwrap();
        assert_eq!(ms, vec![mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])]);

        let w = WeightSystem::from_integers(&[1, 2], 2).unwrap();
        let ms = monomials_of_weighted_degree(&w, &rat(2), 2).unwrap();
        assert_eq!(ms, vec![mono(&[2, 0]), mono(&[0, 1])]);
    }

    #[test]
    fn monomial_count_matches_binomial() {
        // C(5+4, 4) = 126, counted independently by brute force.
        let mut brute = 0;
        for a in 0..=5u32 {
            for b in 0..=5 - a {
                for c in 0..=5 - a - b {
                    for d in 0..=5 - a - b - c {
                        let _ = d;
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(brute, 126);
        let w = WeightSystem::standard(5, 5).unwrap();
        assert_eq!(monomials_of_weighted_degree(&w, &rat(5), 5).unwrap().len(), brute);
    }

    #[test]
    fn non_integral_target_has_no_monomials() {
        let w = WeightSystem::from_integers(&[1, 1], 2).unwrap();
        assert!(monomials_of_weighted_degree(&w, &ratio(1, 2), 2).unwrap().is_empty());
        assert!(monomials_of_weighted_degree(&w, &rat(-1), 2).unwrap().is_empty());
    }

    #[test]
    fn fermat_quintic_degree_five_piece() {
        let gens: Vec<WeightedPoly> = (0..5)
            .map(|i| {
                let mut e = vec![0; 5];
                e[i] = 4;
                WeightedPoly::term(Monomial::new(e), rat(1))
            })
            .collect();
        let w = WeightSystem::standard(5, 5).unwrap();
        assert_eq!(graded_quotient_dim(&gens, &w, &rat(5)).unwrap(), 101);
    }

    #[test]
    fn maximal_ideal_and_empty_ideal() {
        let w = WeightSystem::standard(2, 1).unwrap();
        let gens = vec![
            WeightedPoly::term(Monomial::var(2, 0), rat(1)),
            WeightedPoly::term(Monomial::var(2, 1), rat(1)),
        ];
        assert_eq!(graded_quotient_dim(&gens, &w, &rat(1)).unwrap(), 0);
        assert_eq!(graded_quotient_dim(&[], &w, &rat(2)).unwrap(), 3);
    }

    #[test]
    fn mixed_generator_is_rejected() {
        let w = WeightSystem::standard(2, 2).unwrap();
        let cusp = WeightedPoly::from_int_terms(2, &[(1, &[2, 0]), (1, &[0, 3])]);
        assert!(matches!(
            graded_quotient_dim(&[cusp], &w, &rat(2)),
            Err(Error::NotQuasiHomogeneous(_))
        ));
    }

    #[test]
    fn scaling_generators_does_not_change_dimension() {
        let w = WeightSystem::standard(3, 3).unwrap();
        let f = WeightedPoly::brieskorn_pham(&[3, 3, 3]);
        let jac = f.jacobian();
        let scaled: Vec<WeightedPoly> = jac.iter().map(|g| g.scale(&ratio(-7, 3))).collect();
        for t in 0..6 {
            assert_eq!(
                graded_quotient_dim(&jac, &w, &rat(t)).unwrap(),
                graded_quotient_dim(&scaled, &w, &rat(t)).unwrap()
            );
        }
    }
}
