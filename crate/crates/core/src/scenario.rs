//! Scenario files: one transition per file, written as TOML.
//!
//! ```toml
//! name = "quintic-plane"
//! kind = "conifold"
//!
//! [corner]
//! which = "Y"
//! betti = [1, 0, 2, 174, 2, 0, 1]
//!
//! [conifold]
//! nodes = 16
//! k = 1
//! ```
//!
//! The full schema is documented in `docs/scenario-format.md`.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exceptional::{ade_configuration, DelPezzoModel, DelPezzoVariant, DualGraph, RootClass, SmallExceptionalLocus};
use crate::hodge::{ci_euler, cy_betti, griffiths_h21, BettiVector, CISpec, CY3Hodge, WPSHypersurfaceSpec};
use crate::milnor::{
    icis_milnor, milnor_fiber_betti, milnor_oracle, milnor_orlik, CompleteIntersectionGerm, HypersurfaceGerm, IcisKind,
    SingularityGerm,
};
use crate::polyring::{parse_poly, parse_poly_infer, parse_rational, rat, Rational, WeightSystem};
use crate::report::ReportRecord;
use crate::transition::{
    defect, fill_table, htype_conifold, htype_small, htype_type_ii, CheckResult, Corner, HomologicalType,
    SmallTransitionSpec, TypeIITransitionSpec,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScenarioKind {
    Conifold,
    Small,
    Type2,
}

impl fmt::Display for ScenarioKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScenarioKind::Conifold => "conifold",
            ScenarioKind::Small => "small",
            ScenarioKind::Type2 => "type2",
        })
    }
}

/// An integer or an exact rational written as a string, e.g. `"4/5"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    fn to_rational(&self) -> Result<Rational> {
        match self {
            Number::Int(n) => Ok(rat(*n)),
            Number::Text(s) => parse_rational(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub kind: ScenarioKind,
    pub corner: CornerSpec,
    pub conifold: Option<ConifoldSection>,
    pub small: Option<SmallSection>,
    pub type2: Option<Type2Section>,
    pub expect: Option<ExpectSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CornerSpec {
    pub which: Corner,
    pub betti: Option<BettiVector>,
    pub hodge: Option<HodgeInput>,
    pub wps: Option<WpsInput>,
    pub ci: Option<CiInput>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HodgeInput {
    pub h11: u64,
    pub h21: u64,
}

fn one() -> u64 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WpsInput {
    pub weights: [u64; 5],
    pub degree: u64,
    #[serde(default = "one")]
    pub h11: u64,
    pub poly: Option<String>,
    pub vars: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CiInput {
    pub ambient: u32,
    pub degrees: Vec<u32>,
    #[serde(default = "one")]
    pub h11: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConifoldSection {
    pub nodes: u64,
    pub k: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SmallSection {
    pub k: u64,
    pub points: Vec<PointGroup>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointGroup {
    pub tree: String,
    pub count: usize,
    pub germ: GermSpec,
}

/// Exactly one of: `node = true`; `weights` + `degree` (optionally `poly`);
/// `icis`; a bare `milnor` number.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GermSpec {
    pub node: Option<bool>,
    pub weights: Option<Vec<Number>>,
    pub degree: Option<Number>,
    pub poly: Option<String>,
    pub vars: Option<Vec<String>>,
    pub icis: Option<String>,
    pub milnor: Option<u64>,
    pub ambient: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Type2Section {
    pub delpezzo: DelPezzoSpec,
    pub germ: GermSpec,
    pub fiber_b2: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DelPezzoSpec {
    pub variant: DelPezzoVariant,
    pub degree: u32,
    pub singularities: Option<Vec<String>>,
    pub roots: Option<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectSection {
    pub htype: Option<[i64; 4]>,
    pub y: Option<BettiVector>,
    pub ybar: Option<BettiVector>,
    pub ytilde: Option<BettiVector>,
    pub defect: Option<i64>,
}

/// Parses scenario text; syntax and schema errors carry a line and column.
pub fn parse_scenario(text: &str) -> Result<Scenario> {
    toml::from_str(text).map_err(|e| {
        let offset = e.span().map(|s| s.start).unwrap_or(0);
        Error::parse_at(text, offset, e.message().to_string())
    })
}

pub fn load_scenario(path: &Path) -> Result<Scenario> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::MissingInput(format!("cannot read {}: {e}", path.display())))?;
    parse_scenario(&text)
}

/// Loads, evaluates and verifies a scenario file.
pub fn run_scenario(path: &Path) -> Result<ReportRecord> {
    evaluate(&load_scenario(path)?)
}

fn weight_system(weights: &[Number], degree: &Number) -> Result<WeightSystem> {
    let w = weights.iter().map(Number::to_rational).collect::<Result<Vec<_>>>()?;
    WeightSystem::new(w, degree.to_rational()?)
}

impl GermSpec {
    fn choices(&self) -> usize {
        [
            self.node == Some(true),
            self.weights.is_some() || self.degree.is_some() || self.poly.is_some(),
            self.icis.is_some(),
            self.milnor.is_some() && self.icis.is_none(),
        ]
        .iter()
        .filter(|b| **b)
        .count()
    }

    fn check_shape(&self) -> Result<()> {
        if self.choices() != 1 {
            return Err(Error::InvalidModel(
                "a germ needs exactly one of: node = true, weights + degree, icis, milnor".into(),
            ));
        }
        Ok(())
    }

    fn hypersurface(&self, notes: &mut Vec<String>) -> Result<Option<HypersurfaceGerm>> {
        if self.node == Some(true) {
            return Ok(Some(HypersurfaceGerm::node(4)));
        }
        let (Some(weights), Some(degree)) = (&self.weights, &self.degree) else {
            if self.weights.is_some() || self.degree.is_some() || self.poly.is_some() {
                return Err(Error::MissingInput("a hypersurface germ needs both weights and degree".into()));
            }
            return Ok(None);
        };
        let w = weight_system(weights, degree)?;
        let Some(text) = &self.poly else {
            return Ok(None);
        };
        let (f, names) = match &self.vars {
            Some(vars) => (parse_poly(text, vars)?, vars.clone()),
            None => parse_poly_infer(text)?,
        };
        if f.nvars() != w.nvars() {
            return Err(Error::DimensionMismatch {
                expected: w.nvars(),
                got: f.nvars(),
            });
        }
        let g = HypersurfaceGerm::new(f, w)?;
        let oracle = milnor_oracle(&g)?;
        let formula = milnor_orlik(g.weight_system())?;
        if oracle != formula {
            return Err(Error::InvalidModel(format!(
                "Jacobian algebra has dimension {oracle} but the weight formula gives {formula}"
            )));
        }
        notes.push(format!(
            "m_p = {formula} for {}, confirmed by the Jacobian algebra",
            g.polynomial().display_with(&names)
        ));
        Ok(Some(g))
    }

    /// `(m_p, is_icis)`.
    fn milnor(&self, notes: &mut Vec<String>) -> Result<(u64, bool)> {
        self.check_shape()?;
        if let Some(g) = self.hypersurface(notes)? {
            return Ok((milnor_orlik(g.weight_system())?, true));
        }
        if let (Some(weights), Some(degree)) = (&self.weights, &self.degree) {
            let w = weight_system(weights, degree)?;
            let m = milnor_orlik(&w)?;
            notes.push(format!("m_p = {m} from weights {w}"));
            return Ok((m, true));
        }
        if self.icis.is_some() {
            let m = icis_milnor(&self.icis_germ()?);
            notes.push(format!("m_p = {m} for the complete intersection germ"));
            return Ok((m, true));
        }
        Ok((self.milnor.unwrap_or(0), false))
    }

    fn icis_germ(&self) -> Result<CompleteIntersectionGerm> {
        let name = self.icis.as_deref().unwrap_or_default();
        match IcisKind::from_name(name)? {
            IcisKind::CustomTabulated => {
                let m = self
                    .milnor
                    .ok_or_else(|| Error::MissingInput("custom_tabulated needs milnor = <number>".into()))?;
                CompleteIntersectionGerm::custom(m, self.ambient.unwrap_or(5))
            }
            kind => CompleteIntersectionGerm::from_kind(kind),
        }
    }

    fn singularity(&self, notes: &mut Vec<String>) -> Result<SingularityGerm> {
        self.check_shape()?;
        if let Some(g) = self.hypersurface(notes)? {
            return Ok(SingularityGerm::Hypersurface(g));
        }
        if self.weights.is_some() {
            return Err(Error::MissingInput("a small-transition germ needs its polynomial".into()));
        }
        if self.icis.is_some() {
            return Ok(SingularityGerm::CompleteIntersection(self.icis_germ()?));
        }
        let m = self.milnor.unwrap_or(0);
        Ok(SingularityGerm::CompleteIntersection(CompleteIntersectionGerm::custom(
            m,
            self.ambient.unwrap_or(4),
        )?))
    }
}

fn joined<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn corner_betti(c: &CornerSpec, notes: &mut Vec<String>) -> Result<BettiVector> {
    let given = [c.betti.is_some(), c.hodge.is_some(), c.wps.is_some(), c.ci.is_some()];
    if given.iter().filter(|b| **b).count() != 1 {
        return Err(Error::InvalidModel("[corner] needs exactly one of betti, hodge, wps, ci".into()));
    }
    if let Some(b) = c.betti {
        notes.push(format!("{} row given as Betti numbers", c.which));
        return Ok(b);
    }
    if let Some(h) = &c.hodge {
        notes.push(format!("{} row from (h11, h21) = ({}, {})", c.which, h.h11, h.h21));
        return Ok(cy_betti(&CY3Hodge { h11: h.h11, h21: h.h21 }));
    }
    if let Some(w) = &c.wps {
        let poly = match &w.poly {
            None => None,
            Some(text) => Some(match &w.vars {
                Some(vars) => parse_poly(text, vars)?,
                None => parse_poly_infer(text)?.0,
            }),
        };
        let spec = WPSHypersurfaceSpec::new(w.weights, w.degree, poly)?;
        let h21 = griffiths_h21(&spec)?;
        notes.push(format!(
            "{} row: degree {} hypersurface in P({}), h21 = {h21} from the Jacobian ring",
            c.which,
            w.degree,
            joined(&w.weights)
        ));
        return Ok(cy_betti(&CY3Hodge { h11: w.h11, h21 }));
    }
    let ci = c.ci.as_ref().expect("one corner input present");
    let spec = CISpec::new(ci.ambient, ci.degrees.clone())?;
    let chi = ci_euler(&spec);
    let h = CY3Hodge::from_euler(ci.h11, chi)?;
    notes.push(format!(
        "{} row: complete intersection of degrees ({}) in P{}, euler = {chi}, h21 = {}",
        c.which,
        joined(&ci.degrees),
        ci.ambient,
        h.h21
    ));
    Ok(cy_betti(&h))
}

fn delpezzo_model(d: &DelPezzoSpec) -> Result<DelPezzoModel> {
    let roots = match (&d.singularities, &d.roots) {
        (Some(_), Some(_)) => {
            return Err(Error::InvalidModel("give either singularities or roots, not both".into()))
        }
        (Some(labels), None) => {
            let graphs = labels.iter().map(|s| s.parse::<DualGraph>()).collect::<Result<Vec<_>>>()?;
            ade_configuration(&graphs, d.degree)?
        }
        (None, Some(rows)) => rows.iter().cloned().map(RootClass::new).collect::<Result<Vec<_>>>()?,
        (None, None) => Vec::new(),
    };
    DelPezzoModel::new(d.variant, d.degree, roots)
}

fn htype_of(s: &Scenario, notes: &mut Vec<String>) -> Result<HomologicalType> {
    let sections = [s.conifold.is_some(), s.small.is_some(), s.type2.is_some()];
    if sections.iter().filter(|b| **b).count() > 1 {
        return Err(Error::InvalidModel(
            "mixed transitions carry no homological type; give exactly one of [conifold], [small], [type2]".into(),
        ));
    }
    let missing = |sec: &str| Error::MissingInput(format!("kind = \"{}\" needs a [{sec}] section", s.kind));
    match s.kind {
        ScenarioKind::Conifold => {
            let c = s.conifold.as_ref().ok_or_else(|| missing("conifold"))?;
            htype_conifold(c.nodes, c.k)
        }
        ScenarioKind::Small => {
            let sm = s.small.as_ref().ok_or_else(|| missing("small"))?;
            let mut points = Vec::new();
            for group in &sm.points {
                let tree: DualGraph = group.tree.parse()?;
                let germ = group.germ.singularity(notes)?;
                points.extend(std::iter::repeat_n((tree, germ), group.count));
            }
            let spec = SmallTransitionSpec::new(SmallExceptionalLocus::new(points)?, sm.k)?;
            let (n, m) = spec.counts();
            notes.push(format!("exceptional locus: n = {n} curves, global Milnor number m = {m}"));
            htype_small(&spec)
        }
        ScenarioKind::Type2 => {
            let t = s.type2.as_ref().ok_or_else(|| missing("type2"))?;
            let model = delpezzo_model(&t.delpezzo)?;
            let (m, is_icis) = t.germ.milnor(notes)?;
            let fiber = milnor_fiber_betti(m, is_icis, t.fiber_b2)?;
            htype_type_ii(&TypeIITransitionSpec::new(model, fiber)?)
        }
    }
}

fn expectation_checks(e: &ExpectSection, record: &ReportRecord) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        out.push(CheckResult {
            name: name.to_string(),
            passed,
            detail,
        })
    };
    if let Some([k1, k2, c1, c2]) = e.htype {
        let h = record.htype;
        let ok = (h.k1 as i64, h.k2 as i64, h.c1, h.c2) == (k1, k2, c1, c2);
        push("expected_htype", ok, format!("computed {h}, expected ({k1},{k2},{c1},{c2})"));
    }
    for (name, want, got) in [
        ("expected_Y", e.y, record.rows.y),
        ("expected_Ybar", e.ybar, record.rows.ybar),
        ("expected_Ytilde", e.ytilde, record.rows.ytilde),
    ] {
        if let Some(want) = want {
            push(name, want == got, format!("computed {got}, expected {want}"));
        }
    }
    if let Some(want) = e.defect {
        let got = defect(&record.table());
        push("expected_defect", want == got, format!("computed {got}, expected {want}"));
    }
    out
}

/// Computes the homological type, fills the table and verifies it.
pub fn evaluate(s: &Scenario) -> Result<ReportRecord> {
    let mut notes = Vec::new();
    let htype = htype_of(s, &mut notes)?;
    let corner = corner_betti(&s.corner, &mut notes)?;
    let table = fill_table(&htype, &corner, s.corner.which)?;
    let mut record = ReportRecord::from_table(&s.name, s.kind, &table, notes);
    if let Some(e) = &s.expect {
        record.checks.extend(expectation_checks(e, &record));
    }
    Ok(record)
}
