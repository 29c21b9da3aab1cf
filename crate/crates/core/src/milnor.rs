//! Milnor numbers of isolated singularities.
//!
//! Quasi-homogeneous hypersurface germs get two independent routes: the
//! closed product formula [`milnor_orlik`] and the dimension count of the
//! graded Jacobian algebra [`milnor_oracle`]. Complete intersection germs
//! come from a small table.

use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::graded::GradedIdeal;
use crate::polyring::{rat, Rational, WeightSystem, WeightedPoly};

/// `∏ (d/w_i − 1)`.
pub fn milnor_orlik(w: &WeightSystem) -> Result<u64> {
    let mut product = Rational::one();
    for wi in w.weights() {
        let ratio = w.degree() / wi;
        if ratio <= rat(1) {
            return Err(Error::InvalidWeights(format!(
                "d/w = {ratio} is not > 1 for {w}; the origin is not singular in that variable"
            )));
        }
        product *= ratio - rat(1);
    }
    if !product.is_integer() || product.is_negative() {
        return Err(Error::NonIntegralMilnor(product.to_string()));
    }
    product
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::NonIntegralMilnor(product.to_string()))
}

/// Isolated hypersurface germ `f = 0` at the origin, quasi-homogeneous for
/// its weight system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypersurfaceGerm {
    polynomial: WeightedPoly,
    weights: WeightSystem,
}

impl HypersurfaceGerm {
    pub fn new(polynomial: WeightedPoly, weights: WeightSystem) -> Result<Self> {
        let polynomial = polynomial.with_weights(weights.clone())?;
        match polynomial.order() {
            None => return Err(Error::InvalidModel("the zero polynomial is not a germ".into())),
            Some(o) if o < 2 => {
                return Err(Error::InvalidModel(format!(
                    "{polynomial} has a constant or linear part; the origin is not singular"
                )))
            }
            _ => {}
        }
        Ok(HypersurfaceGerm { polynomial, weights })
    }

    /// `x_1² + … + x_n²`.
    pub fn node(nvars: usize) -> Self {
        HypersurfaceGerm::new(
            WeightedPoly::brieskorn_pham(&vec![2; nvars]),
            WeightSystem::standard(nvars, 2).expect("valid"),
        )
        .expect("a sum of squares is a germ")
    }

    /// `x_1^{a_1} + … + x_n^{a_n}` with weights `lcm/a_i`.
    pub fn brieskorn_pham(exponents: &[u32]) -> Result<Self> {
        let l = exponents
            .iter()
            .fold(1i64, |acc, &a| num_integer::lcm(acc, i64::from(a)));
        let weights: Vec<i64> = exponents.iter().map(|&a| l / i64::from(a)).collect();
        HypersurfaceGerm::new(
            WeightedPoly::brieskorn_pham(exponents),
            WeightSystem::from_integers(&weights, l)?,
        )
    }

    pub fn polynomial(&self) -> &WeightedPoly {
        &self.polynomial
    }

    pub fn weight_system(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn ambient_dim(&self) -> usize {
        self.weights.nvars()
    }
}

/// Milnor number as `dim ℚ[x]/(∂f)`, summed over graded pieces.
///
/// The sum runs over weighted degrees `0..=Σ(d − 2w_i)`; the pieces in the
/// next `2·max w_i` degrees must vanish, otherwise the critical locus is
/// not isolated. The tail check is a heuristic: it catches degenerate
/// coefficient choices but is not a proof of finiteness.
pub fn milnor_oracle(g: &HypersurfaceGerm) -> Result<u64> {
    let ideal = GradedIdeal::new(&g.polynomial.jacobian(), &g.weights)?;
    let grading = ideal.grading().clone();
    let top: i64 = grading
        .weights
        .iter()
        .map(|&w| grading.degree as i64 - 2 * w as i64)
        .sum();
    let tail = 2 * grading.max_weight() as i64;
    let mut total = 0u64;
    for t in 0..=top.max(-1) {
        total += ideal.quotient_dim(t as u64) as u64;
    }
    for t in (top + 1).max(0)..=top + tail {
        let dim = ideal.quotient_dim(t as u64);
        if dim != 0 {
            return Err(Error::NonIsolated { degree: t, dim });
        }
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IcisKind {
    /// Two generic quadrics in ℂ⁵, a three-dimensional i.c.i.s.
    TwoGenericQuadricsDim3,
    /// Any germ whose Milnor number the caller supplies.
    CustomTabulated,
}

impl IcisKind {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "two_generic_quadrics_dim3" => Ok(IcisKind::TwoGenericQuadricsDim3),
            "custom_tabulated" => Ok(IcisKind::CustomTabulated),
            other => Err(Error::Untabulated(format!(
                "'{other}' is not a tabulated complete intersection"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteIntersectionGerm {
    kind: IcisKind,
    milnor_number: u64,
    ambient_dim: usize,
}

impl CompleteIntersectionGerm {
    pub fn two_generic_quadrics_dim3() -> Self {
        CompleteIntersectionGerm {
            kind: IcisKind::TwoGenericQuadricsDim3,
            milnor_number: 9,
            ambient_dim: 5,
        }
    }

    pub fn custom(milnor_number: u64, ambient_dim: usize) -> Result<Self> {
        if milnor_number == 0 {
            return Err(Error::OutOfRange("a singular point has Milnor number at least 1".into()));
        }
        Ok(CompleteIntersectionGerm {
            kind: IcisKind::CustomTabulated,
            milnor_number,
            ambient_dim,
        })
    }

    pub fn from_kind(kind: IcisKind) -> Result<Self> {
        match kind {
            IcisKind::TwoGenericQuadricsDim3 => Ok(Self::two_generic_quadrics_dim3()),
            IcisKind::CustomTabulated => Err(Error::MissingInput(
                "custom_tabulated germs need an explicit Milnor number".into(),
            )),
        }
    }

    pub fn kind(&self) -> IcisKind {
        self.kind
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
}

pub fn icis_milnor(g: &CompleteIntersectionGerm) -> u64 {
    g.milnor_number
}

/// Isolated singular point of a threefold, as far as the transition
/// formulas care about it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SingularityGerm {
    Hypersurface(HypersurfaceGerm),
    CompleteIntersection(CompleteIntersectionGerm),
}

impl SingularityGerm {
    pub fn node() -> Self {
        SingularityGerm::Hypersurface(HypersurfaceGerm::node(4))
    }

    /// Milnor number by the closed formula (hypersurfaces) or the table.
    pub fn milnor_number(&self) -> Result<u64> {
        match self {
            SingularityGerm::Hypersurface(h) => milnor_orlik(h.weight_system()),
            SingularityGerm::CompleteIntersection(c) => Ok(icis_milnor(c)),
        }
    }
}

/// Betti numbers of the Milnor fibre `B̃` in degrees 1, 2, 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MilnorFiberData {
    pub b1: u64,
    pub b2: u64,
    pub b3: u64,
}

impl MilnorFiberData {
    /// `χ(B̃) = 1 − b1 + b2 − b3`.
    pub fn euler(&self) -> i64 {
        1 - self.b1 as i64 + self.b2 as i64 - self.b3 as i64
    }

    pub fn milnor_number(&self) -> u64 {
        self.b3
    }
}

/// Milnor fibre Betti data. Complete intersections (hypersurfaces
/// included) have a bouquet of 3-spheres as fibre, so `b2 = 0`; for other
/// germs `b2` must be supplied.
pub fn milnor_fiber_betti(m_p: u64, is_icis: bool, b2_input: Option<u64>) -> Result<MilnorFiberData> {
    if m_p == 0 {
        return Err(Error::OutOfRange("a singular point has Milnor number at least 1".into()));
    }
    let b2 = if is_icis {
        match b2_input {
            None | Some(0) => 0,
            Some(b) => {
                return Err(Error::InvalidModel(format!(
                    "complete intersection fibres are bouquets of 3-spheres, got b2 = {b}"
                )))
            }
        }
    } else {
        b2_input.ok_or_else(|| Error::MissingInput("b2 of the Milnor fibre is required for a non-i.c.i.s. germ".into()))?
    };
    Ok(MilnorFiberData { b1: 0, b2, b3: m_p })
}
