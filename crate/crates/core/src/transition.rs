//! Homological types of geometric transitions and their Betti tables.
//!
//! A transition `T(Y, Ȳ, Ỹ)` of homological type `(k′, k″, c′, c″)` changes
//! Betti numbers by
//!
//! ```text
//! b2(Y) = b2(Ȳ) + k′ + k″ = b2(Ỹ) + k′ + k″
//! b3(Y) = b3(Ȳ) − c′      = b3(Ỹ) − c′ − c″
//! b4(Y) = b4(Ȳ) + k″      = b4(Ỹ) + k′ + k″
//! ```
//!
//! and leaves every other Betti number alone.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exceptional::{delpezzo_betti, small_locus_counts, DelPezzoModel, DelPezzoVariant, SmallExceptionalLocus};
use crate::hodge::{euler_from_betti, BettiVector};
use crate::milnor::MilnorFiberData;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologicalType {
    pub k1: u64,
    pub k2: u64,
    pub c1: i64,
    pub c2: i64,
}

impl HomologicalType {
    pub fn new(k1: u64, k2: u64, c1: i64, c2: i64) -> Result<Self> {
        if (c1 - c2).rem_euclid(2) != 0 {
            return Err(Error::Parity(format!("c' = {c1} and c'' = {c2} differ in parity")));
        }
        Ok(HomologicalType { k1, k2, c1, c2 })
    }

    /// `k = k′ + k″`, the drop in Kähler moduli.
    pub fn k(&self) -> u64 {
        self.k1 + self.k2
    }

    /// `c = (c′ + c″)/2`, the gain in complex moduli.
    pub fn c(&self) -> i64 {
        (self.c1 + self.c2) / 2
    }

    /// `c′ = c″ = 0`: `Ỹ` has the same `b3` as `Y`.
    pub fn is_trivial(&self) -> bool {
        self.c1 == 0 && self.c2 == 0
    }
}

impl fmt::Display for HomologicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.k1, self.k2, self.c1, self.c2)
    }
}

/// `N` nodes of which `k` span the exceptional curve classes: `(k, 0, N−k, N−k)`.
pub fn htype_conifold(nodes: u64, k: u64) -> Result<HomologicalType> {
    if k == 0 || k > nodes {
        return Err(Error::OutOfRange(format!("k = {k} must satisfy 1 <= k <= N = {nodes}")));
    }
    let c = (nodes - k) as i64;
    HomologicalType::new(k, 0, c, c)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallTransitionSpec {
    locus: SmallExceptionalLocus,
    k: u64,
    n: u64,
    m: u64,
}

impl SmallTransitionSpec {
    pub fn new(locus: SmallExceptionalLocus, k: u64) -> Result<Self> {
        let (n, m) = small_locus_counts(&locus)?;
        if k == 0 || k > n.min(m) {
            return Err(Error::OutOfRange(format!(
                "k = {k} must satisfy 1 <= k <= min(n, m) = min({n}, {m})"
            )));
        }
        Ok(SmallTransitionSpec { locus, k, n, m })
    }

    pub fn locus(&self) -> &SmallExceptionalLocus {
        &self.locus
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `(n, m)` of the exceptional locus.
    pub fn counts(&self) -> (u64, u64) {
        (self.n, self.m)
    }
}

/// `(k, 0, n − k, m − k)`.
pub fn htype_small(spec: &SmallTransitionSpec) -> Result<HomologicalType> {
    let c1 = (spec.n - spec.k) as i64;
    let c2 = (spec.m - spec.k) as i64;
    HomologicalType::new(spec.k, 0, c1, c2).map_err(|_| {
        Error::Parity(format!(
            "n - k = {c1} and m - k = {c2} differ in parity; no homological type exists"
        ))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeIITransitionSpec {
    model: DelPezzoModel,
    fiber: MilnorFiberData,
}

impl TypeIITransitionSpec {
    pub fn new(model: DelPezzoModel, fiber: MilnorFiberData) -> Result<Self> {
        if fiber.b1 != 0 {
            return Err(Error::InvalidModel(format!("b1 of the Milnor fibre must vanish, got {}", fiber.b1)));
        }
        if fiber.b3 == 0 {
            return Err(Error::OutOfRange("a singular point has Milnor number at least 1".into()));
        }
        match model.variant() {
            DelPezzoVariant::NormalRational if model.degree() <= 4 && fiber.b2 != 0 => {
                return Err(Error::InvalidModel(format!(
                    "for d = {} <= 4 the Milnor fibre is a bouquet of 3-spheres, but b2 = {}",
                    model.degree(),
                    fiber.b2
                )))
            }
            DelPezzoVariant::NormalElliptic => {
                if fiber.b2 != 0 {
                    return Err(Error::InvalidModel(format!(
                        "an elliptic exceptional divisor contracts to a hypersurface point, but b2 = {}",
                        fiber.b2
                    )));
                }
                if !fiber.b3.is_multiple_of(2) {
                    return Err(Error::Parity(format!(
                        "an elliptic exceptional divisor forces an even Milnor number, got {}",
                        fiber.b3
                    )));
                }
            }
            v if v.is_non_normal() => {
                let b2e = delpezzo_betti(&model).b2() as i64;
                if (fiber.euler() - b2e).rem_euclid(2) != 0 {
                    return Err(Error::Parity(format!(
                        "chi(B~) = {} and b2(E) = {b2e} differ mod 2",
                        fiber.euler()
                    )));
                }
            }
            _ => {}
        }
        Ok(TypeIITransitionSpec { model, fiber })
    }

    pub fn model(&self) -> &DelPezzoModel {
        &self.model
    }

    pub fn fiber(&self) -> &MilnorFiberData {
        &self.fiber
    }
}

/// `(0, 1, c′, c″)` with `c′ = −1 + b2(E) − b3(E)` and
/// `c″ = 1 − χ(B̃) = m_p − b2(B̃)`.
pub fn htype_type_ii(spec: &TypeIITransitionSpec) -> Result<HomologicalType> {
    let e = delpezzo_betti(&spec.model);
    let c1 = -1 + e.b2() as i64 - e.b3() as i64;
    let c2 = 1 - spec.fiber.euler();
    HomologicalType::new(0, 1, c1, c2)
}

/// Which smooth corner a table was filled from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Corner {
    Y,
    Ytilde,
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Corner::Y => "Y",
            Corner::Ytilde => "Ytilde",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionTable {
    pub y: BettiVector,
    pub ybar: BettiVector,
    pub ytilde: BettiVector,
    pub htype: HomologicalType,
    pub input_corner: Corner,
}

fn shifted(base: &BettiVector, d2: i64, d3: i64, d4: i64, row: &str) -> Result<BettiVector> {
    let mut out = base.0;
    for (i, delta) in [(2, d2), (3, d3), (4, d4)] {
        let v = base.0[i] as i64 + delta;
        if v < 0 {
            return Err(Error::NegativeBetti(format!(
                "b{i}({row}) = {v}; the homological type is inconsistent with the given corner"
            )));
        }
        out[i] = v as u64;
    }
    Ok(BettiVector(out))
}

/// Fills the Betti table from one smooth corner.
pub fn fill_table(h: &HomologicalType, corner: &BettiVector, which: Corner) -> Result<TransitionTable> {
    corner.check_smooth_cy()?;
    let k = h.k() as i64;
    let (k1, k2) = (h.k1 as i64, h.k2 as i64);
    let (y, ybar, ytilde) = match which {
        Corner::Y => {
            let ybar = shifted(corner, -k, h.c1, -k2, "Ybar")?;
            let ytilde = shifted(corner, -k, h.c1 + h.c2, -k, "Ytilde")?;
            (*corner, ybar, ytilde)
        }
        Corner::Ytilde => {
            let y = shifted(corner, k, -h.c1 - h.c2, k, "Y")?;
            let ybar = shifted(corner, 0, -h.c2, k1, "Ybar")?;
            (y, ybar, *corner)
        }
    };
    Ok(TransitionTable {
        y,
        ybar,
        ytilde,
        htype: *h,
        input_corner: which,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        CheckResult {
            name: name.to_string(),
            passed,
            detail,
        }
    }

    fn equality(name: &str, lhs: i64, rhs: i64, what: &str) -> Self {
        let rel = if lhs == rhs { "=" } else { "!=" };
        CheckResult::new(name, lhs == rhs, format!("{what}: {lhs} {rel} {rhs}"))
    }
}

/// `b4(Ȳ) − b2(Ȳ)`.
pub fn defect(t: &TransitionTable) -> i64 {
    t.ybar.b(4) as i64 - t.ybar.b(2) as i64
}

/// Re-derives every identity the table must satisfy.
pub fn verify_table(t: &TransitionTable) -> Vec<CheckResult> {
    let h = &t.htype;
    let (k, c) = (h.k() as i64, h.c());
    let (k1, k2) = (h.k1 as i64, h.k2 as i64);
    let (cy, cbar, ctilde) = (euler_from_betti(&t.y), euler_from_betti(&t.ybar), euler_from_betti(&t.ytilde));
    let b = |v: &BettiVector, i: usize| v.b(i) as i64;

    let mut out = vec![
        CheckResult::new(
            "parity",
            (h.c1 - h.c2).rem_euclid(2) == 0,
            format!("c' = {}, c'' = {}", h.c1, h.c2),
        ),
        CheckResult::new(
            "unchanged_betti",
            [0, 1, 5, 6]
                .iter()
                .all(|&i| t.y.b(i) == t.ybar.b(i) && t.ybar.b(i) == t.ytilde.b(i)),
            "b0, b1, b5, b6 agree on all rows".to_string(),
        ),
        CheckResult::equality("b2_relation", b(&t.y, 2) - b(&t.ybar, 2), k, "b2(Y) - b2(Ybar) vs k'+k''"),
        CheckResult::equality("b2_smoothing", b(&t.ybar, 2), b(&t.ytilde, 2), "b2(Ybar) vs b2(Ytilde)"),
        CheckResult::equality("b3_relation", b(&t.ybar, 3) - b(&t.y, 3), h.c1, "b3(Ybar) - b3(Y) vs c'"),
        CheckResult::equality(
            "b3_smoothing",
            b(&t.ytilde, 3) - b(&t.ybar, 3),
            h.c2,
            "b3(Ytilde) - b3(Ybar) vs c''",
        ),
        CheckResult::equality("b4_relation", b(&t.y, 4) - b(&t.ybar, 4), k2, "b4(Y) - b4(Ybar) vs k''"),
        CheckResult::equality("b4_total", b(&t.y, 4) - b(&t.ytilde, 4), k, "b4(Y) - b4(Ytilde) vs k"),
        CheckResult::equality("euler_contraction", cy - cbar, k + h.c1 + k2, "chi(Y) - chi(Ybar) vs k+c'+k''"),
        CheckResult::equality("euler_smoothing", cbar - ctilde, k1 + h.c2, "chi(Ybar) - chi(Ytilde) vs k'+c''"),
        CheckResult::equality("euler_total", cy - ctilde, 2 * (k + c), "chi(Y) - chi(Ytilde) vs 2(k+c)"),
        CheckResult::new("poincare_Y", t.y.is_poincare_dual(), format!("Y = {}", t.y)),
        CheckResult::new("poincare_Ytilde", t.ytilde.is_poincare_dual(), format!("Ytilde = {}", t.ytilde)),
        CheckResult::equality("defect", defect(t), k1, "b4(Ybar) - b2(Ybar) vs k'"),
    ];
    if h.k1 == 0 {
        out.push(CheckResult::equality(
            "q_factorial",
            b(&t.ybar, 4),
            b(&t.ybar, 2),
            "b4(Ybar) vs b2(Ybar)",
        ));
    }
    out
}

/// `(Δh11, Δh21)` going from `Y` to `Ỹ`: `(−k, +c)`.
pub fn moduli_change(h: &HomologicalType) -> (i64, i64) {
    (-(h.k() as i64), h.c())
}

/// Coxeter number matching `c + k` of a type II transition with smooth
/// exceptional del Pezzo surface of degree `d`; none for `d = 6, 7`.
pub fn coxeter_number(d: u32) -> Result<Option<u64>> {
    match d {
        1 => Ok(Some(30)), // E8
        2 => Ok(Some(18)), // E7
        3 => Ok(Some(12)), // E6
        4 => Ok(Some(8)),  // D5
        5 => Ok(Some(5)),  // A4
        6 | 7 => Ok(None),
        8 => Ok(Some(2)), // A1
        _ => Err(Error::OutOfRange(format!("del Pezzo degree {d} is not in 1..8"))),
    }
}

/// Admissible Milnor numbers of the singular point when the exceptional del
/// Pezzo surface is smooth of degree `d`, given `b2` of the Milnor fibre.
pub fn milnor_constraint(d: u32, b2_fiber: u64) -> Result<Vec<u64>> {
    let b = b2_fiber;
    match d {
        1..=4 => {
            if b != 0 {
                return Err(Error::InvalidModel(format!(
                    "for d = {d} the Milnor fibre is a bouquet of 3-spheres; b2 = {b} is impossible"
                )));
            }
            Ok(vec![[50, 27, 16, 9][d as usize - 1]])
        }
        5 => Ok(vec![b + 4]),
        6 => Ok(if b == 0 { vec![1] } else { vec![b - 1, b + 1] }),
        7 => {
            if b == 0 {
                return Err(Error::OutOfRange(
                    "for d = 7 the Milnor fibre has b2 > 0; it is never a bouquet of 3-spheres".into(),
                ));
            }
            Ok(vec![b])
        }
        8 => Ok(vec![b + 1]),
        _ => Err(Error::OutOfRange(format!("del Pezzo degree {d} is not in 1..8"))),
    }
}
