//! Betti and Hodge numbers of the smooth Calabi–Yau corners.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::milnor::{milnor_oracle, milnor_orlik, HypersurfaceGerm};
use crate::polyring::{graded_quotient_dim, rat, Monomial, WeightSystem, WeightedPoly};

/// Betti numbers `b0..b6` of a compact threefold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BettiVector(pub [u64; 7]);

impl BettiVector {
    pub fn b(&self, i: usize) -> u64 {
        self.0[i]
    }

    pub fn is_poincare_dual(&self) -> bool {
        (0..7).all(|i| self.0[i] == self.0[6 - i])
    }

    /// Shape of a smooth Calabi–Yau threefold: `b0 = b6 = 1`, `b1 = b5 = 0`,
    /// Poincaré duality.
    pub fn check_smooth_cy(&self) -> Result<()> {
        if self.0[0] != 1 || self.0[6] != 1 {
            return Err(Error::InvalidBetti(format!("{self}: b0 and b6 must be 1")));
        }
        if self.0[1] != 0 || self.0[5] != 0 {
            return Err(Error::InvalidBetti(format!("{self}: b1 and b5 must vanish")));
        }
        if !self.is_poincare_dual() {
            return Err(Error::InvalidBetti(format!("{self}: violates Poincaré duality")));
        }
        Ok(())
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Alternating sum `Σ (−1)^i b_i`.
pub fn euler_from_betti(b: &BettiVector) -> i64 {
    b.0.iter()
        .enumerate()
        .map(|(i, &v)| if i % 2 == 0 { v as i64 } else { -(v as i64) })
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CY3Hodge {
    pub h11: u64,
    pub h21: u64,
}

impl CY3Hodge {
    pub fn euler(&self) -> i64 {
        2 * (self.h11 as i64 - self.h21 as i64)
    }

    /// Recovers `h21` from `h11` and the Euler characteristic.
    pub fn from_euler(h11: u64, euler: i64) -> Result<Self> {
        if euler % 2 != 0 {
            return Err(Error::Parity(format!("Euler characteristic {euler} of a Calabi-Yau threefold is odd")));
        }
        let h21 = h11 as i64 - euler / 2;
        if h21 < 0 {
            return Err(Error::InvalidBetti(format!("h11 = {h11}, chi = {euler} gives negative h21")));
        }
        Ok(CY3Hodge { h11, h21: h21 as u64 })
    }
}

pub fn cy_betti(h: &CY3Hodge) -> BettiVector {
    BettiVector([1, 0, h.h11, 2 + 2 * h.h21, h.h11, 0, 1])
}

/// Degree `Σ w_i` hypersurface in `ℙ(w_0, …, w_4)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WPSHypersurfaceSpec {
    weights: [u64; 5],
    degree: u64,
    defining_poly: Option<WeightedPoly>,
}

impl WPSHypersurfaceSpec {
    pub fn new(weights: [u64; 5], degree: u64, defining_poly: Option<WeightedPoly>) -> Result<Self> {
        if weights.contains(&0) {
            return Err(Error::InvalidWeights("weights must be positive".into()));
        }
        let sum: u64 = weights.iter().sum();
        if degree != sum {
            return Err(Error::InvalidModel(format!(
                "Calabi-Yau condition fails: degree {degree} != sum of weights {sum}"
            )));
        }
        if let Some(p) = &defining_poly {
            if p.nvars() != 5 {
                return Err(Error::DimensionMismatch { expected: 5, got: p.nvars() });
            }
        }
        Ok(WPSHypersurfaceSpec {
            weights,
            degree,
            defining_poly,
        })
    }

    pub fn weight_system(&self) -> WeightSystem {
        let w: Vec<i64> = self.weights.iter().map(|&w| w as i64).collect();
        WeightSystem::from_integers(&w, self.degree as i64).expect("validated weights")
    }

    /// The user polynomial if given, else [`default_representative`].
    pub fn defining_poly(&self) -> Result<WeightedPoly> {
        match &self.defining_poly {
            Some(p) => Ok(p.clone()),
            None => default_representative(&self.weights, self.degree),
        }
    }
}

/// A quasi-smooth member of the linear system.
///
/// Each variable contributes `x_i^{d/w_i}` when `w_i | d`; otherwise the
/// first `x_i^a·x_j` with `a·w_i + w_j = d` ("pointing" at `x_j`). For
/// `ℙ(1,1,1,2,3)` in degree 8, which has no Fermat member, the choice is
/// `x0⁸ + x1⁸ + x2⁸ + y⁴ + x0²z² + yz²`; the `yz²` term is the perturbation
/// that makes the critical locus of the cone isolated.
pub fn default_representative(weights: &[u64; 5], degree: u64) -> Result<WeightedPoly> {
    let n = weights.len();
    let mono = |pairs: &[(usize, u32)]| {
        let mut e = vec![0u32; n];
        for &(i, a) in pairs {
            e[i] += a;
        }
        (Monomial::new(e), rat(1))
    };
    if *weights == [1, 1, 1, 2, 3] && degree == 8 {
        let terms = [
            mono(&[(0, 8)]),
            mono(&[(1, 8)]),
            mono(&[(2, 8)]),
            mono(&[(3, 4)]),
            mono(&[(0, 2), (4, 2)]),
            mono(&[(3, 1), (4, 2)]),
        ];
        return Ok(WeightedPoly::from_terms(n, terms));
    }
    let mut terms = Vec::with_capacity(n);
    for (i, &w) in weights.iter().enumerate() {
        if degree.is_multiple_of(w) {
            terms.push(mono(&[(i, (degree / w) as u32)]));
            continue;
        }
        let pointing = (0..n).find(|&j| j != i && weights[j] < degree && (degree - weights[j]).is_multiple_of(w));
        match pointing {
            Some(j) => terms.push(mono(&[(i, ((degree - weights[j]) / w) as u32), (j, 1)])),
            None => {
                return Err(Error::InvalidModel(format!(
                    "no default quasi-smooth member for weights {weights:?} in degree {degree}; supply a polynomial"
                )))
            }
        }
    }
    Ok(WeightedPoly::from_terms(n, terms))
}

/// `h^{2,1}` as the degree-`d` piece of the Jacobian ring.
///
/// The Jacobian ring of the affine cone is first checked to be finite: its
/// total dimension (from the graded oracle) must equal the closed product
/// formula, which fails loudly for non-quasi-smooth polynomials.
pub fn griffiths_h21(spec: &WPSHypersurfaceSpec) -> Result<u64> {
    let w = spec.weight_system();
    let f = spec.defining_poly()?;
    let cone = HypersurfaceGerm::new(f, w.clone())?;
    let expected = milnor_orlik(&w)?;
    let total = milnor_oracle(&cone)?;
    if total != expected {
        return Err(Error::InvalidModel(format!(
            "Jacobian ring has dimension {total}, expected {expected}; the hypersurface is not quasi-smooth"
        )));
    }
    let dim = graded_quotient_dim(&cone.polynomial().jacobian(), &w, &rat(spec.degree as i64))?;
    Ok(dim as u64)
}

/// Smooth complete intersection of hypersurfaces of the given degrees in
/// `ℙ^n`, with `n − #degrees = 3` and `Σ degrees = n + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CISpec {
    ambient_dim: u32,
    degrees: Vec<u32>,
}

impl CISpec {
    pub fn new(ambient_dim: u32, degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() || degrees.contains(&0) {
            return Err(Error::InvalidModel("degrees must be positive and non-empty".into()));
        }
        if ambient_dim as usize != degrees.len() + 3 {
            return Err(Error::InvalidModel(format!(
                "ℙ^{ambient_dim} cut by {} equations is not a threefold",
                degrees.len()
            )));
        }
        let sum: u32 = degrees.iter().sum();
        if sum != ambient_dim + 1 {
            return Err(Error::InvalidModel(format!(
                "Calabi-Yau condition fails: sum of degrees {sum} != {}",
                ambient_dim + 1
            )));
        }
        Ok(CISpec { ambient_dim, degrees })
    }

    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }
}

/// `n:d1,d2,…`, e.g. `5:3,3`.
impl FromStr for CISpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse_at(s, 0, format!("'{s}' is not of the form n:d1,d2,..."));
        let (n, ds) = s.split_once(':').ok_or_else(bad)?;
        let n: u32 = n.trim().parse().map_err(|_| bad())?;
        let degrees = ds
            .split(',')
            .map(|d| d.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        CISpec::new(n, degrees)
    }
}

/// Truncated product of two power series.
fn series_mul(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order];
    for (i, x) in a.iter().enumerate().take(order) {
        for (j, y) in b.iter().enumerate().take(order - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Euler characteristic from the total Chern class: `∏ d_j` times the `H³`
/// coefficient of `(1+H)^{n+1} / ∏ (1 + d_j H)`.
pub fn ci_euler(spec: &CISpec) -> i64 {
    let order = spec.ambient_dim as usize + 1;
    let mut series = vec![BigInt::zero(); order];
    series[0] = BigInt::from(1);
    let one_plus_h = [BigInt::from(1), BigInt::from(1)];
    for _ in 0..=spec.ambient_dim {
        series = series_mul(&series, &one_plus_h, order);
    }
    for &d in &spec.degrees {
        // 1/(1 + dH) = Σ (−d)^k H^k
        let mut inverse = Vec::with_capacity(order);
        let mut term = BigInt::from(1);
        for _ in 0..order {
            inverse.push(term.clone());
            term *= -i64::from(d);
        }
        series = series_mul(&series, &inverse, order);
    }
    let product: BigInt = spec.degrees.iter().map(|&d| BigInt::from(d)).product();
    (product * &series[3]).to_i64().expect("Euler characteristic fits in i64")
}
