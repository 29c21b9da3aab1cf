//! Exceptional loci of the contraction `Y → Ȳ`.
//!
//! Small contractions collapse trees of rational curves whose dual graphs
//! are of A-D-E or affine D̃/Ẽ type. Type II contractions collapse a
//! generalised del Pezzo surface `E` to a point; its Betti numbers depend
//! on the variant and, in the normal rational case, on the lattice spanned
//! by the (−2)-curves of its minimal resolution.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::milnor::SingularityGerm;
use crate::polyring::linalg::bareiss_rank;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DualGraph {
    A(u32),
    D(u32),
    E(u32),
    DTilde(u32),
    ETilde(u32),
}

impl DualGraph {
    pub fn new_checked(self) -> Result<Self> {
        let ok = match self {
            DualGraph::A(n) => n >= 1,
            DualGraph::D(n) => n >= 4,
            DualGraph::E(n) => (6..=8).contains(&n),
            DualGraph::DTilde(n) => n >= 3,
            DualGraph::ETilde(n) => (5..=7).contains(&n),
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::OutOfRange(format!("{self} is not a valid dual graph")))
        }
    }

    /// Number of irreducible curves in the tree.
    pub fn vertex_count(&self) -> u32 {
        match *self {
            DualGraph::A(n) | DualGraph::D(n) | DualGraph::E(n) | DualGraph::DTilde(n) | DualGraph::ETilde(n) => n,
        }
    }
}

pub fn tree_vertex_count(g: &DualGraph) -> u32 {
    g.vertex_count()
}

impl fmt::Display for DualGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualGraph::A(n) => write!(f, "A{n}"),
            DualGraph::D(n) => write!(f, "D{n}"),
            DualGraph::E(n) => write!(f, "E{n}"),
            DualGraph::DTilde(n) => write!(f, "D~{n}"),
            DualGraph::ETilde(n) => write!(f, "E~{n}"),
        }
    }
}

/// Accepts `A2`, `D4`, `E6`, and `D~3` / `Dt3` / `E~6` / `Et6` for the
/// affine families.
impl FromStr for DualGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::OutOfRange(format!("'{s}' is not a dual graph label"));
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let (tilde, digits) = match rest.strip_prefix('~').or_else(|| rest.strip_prefix('t')) {
            Some(d) => (true, d),
            None => (false, rest),
        };
        let n: u32 = digits.parse().map_err(|_| bad())?;
        let g = match (family, tilde) {
            ('A', false) => DualGraph::A(n),
            ('D', false) => DualGraph::D(n),
            ('E', false) => DualGraph::E(n),
            ('D', true) => DualGraph::DTilde(n),
            ('E', true) => DualGraph::ETilde(n),
            _ => return Err(bad()),
        };
        g.new_checked()
    }
}

/// Exceptional trees of a small contraction, one per singular point of Ȳ.
/// Each point carries the (user-asserted cDV) germ of Ȳ there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallExceptionalLocus {
    points: Vec<(DualGraph, SingularityGerm)>,
}

impl SmallExceptionalLocus {
    pub fn new(points: Vec<(DualGraph, SingularityGerm)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidModel("a small exceptional locus needs at least one point".into()));
        }
        for (g, _) in &points {
            g.new_checked()?;
        }
        Ok(SmallExceptionalLocus { points })
    }

    /// `count` copies of the same tree and germ.
    pub fn uniform(count: usize, graph: DualGraph, germ: SingularityGerm) -> Result<Self> {
        SmallExceptionalLocus::new(vec![(graph, germ); count])
    }

    pub fn points(&self) -> &[(DualGraph, SingularityGerm)] {
        &self.points
    }
}

/// `(n, m)`: total number of exceptional curves and global Milnor number.
pub fn small_locus_counts(locus: &SmallExceptionalLocus) -> Result<(u64, u64)> {
    let mut n = 0u64;
    let mut m = 0u64;
    for (g, germ) in &locus.points {
        n += u64::from(g.vertex_count());
        m += germ.milnor_number()?;
    }
    Ok((n, m))
}

/// Class in `ℤ^{1,r}` with form `diag(+1, −1, …, −1)`, written in the basis
/// `e0` (pullback of a line) and `e1..er` (exceptional curves of the
/// blow-up of ℙ²).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootClass(Vec<i64>);

impl RootClass {
    /// Fails unless the class has self-intersection −2.
    pub fn new(coordinates: Vec<i64>) -> Result<Self> {
        let r = RootClass(coordinates);
        let s = r.dot(&r);
        if s != -2 {
            return Err(Error::InvalidModel(format!("{:?} has self-intersection {s}, not -2", r.0)));
        }
        Ok(r)
    }

    pub fn coordinates(&self) -> &[i64] {
        &self.0
    }

    pub fn dot(&self, other: &RootClass) -> i64 {
        self.0
            .iter()
            .zip(&other.0)
            .enumerate()
            .map(|(i, (a, b))| if i == 0 { a * b } else { -a * b })
            .sum()
    }

    fn from_terms(dim: usize, terms: &[(usize, i64)]) -> Self {
        let mut v = vec![0; dim];
        for &(i, c) in terms {
            v[i] += c;
        }
        RootClass(v)
    }
}

/// Simple roots of an A-D-E configuration inside the Picard lattice of a
/// degree-`d` del Pezzo surface, `ℤ^{1,9−d}`.
///
/// `A_n` occupies `e_first..e_{first+n}` as the chain `e_i − e_{i+1}`.
/// `D_n` is `{e0−e1−e2−e3, e2−e3, …, e_n−e_{n+1}}` and `E_n` is
/// `{e0−e1−e2−e3, e1−e2, …, e_{n−1}−e_n}`; both ignore `first` and start at
/// `e1`, so they must be placed before any `A_n` chain.
pub fn ade_roots(graph: DualGraph, degree: u32, first: usize) -> Result<Vec<RootClass>> {
    if !(1..=8).contains(&degree) {
        return Err(Error::OutOfRange(format!("del Pezzo degree {degree} is not in 1..8")));
    }
    let dim = 10 - degree as usize;
    let r = dim - 1;
    let chain = |from: usize, to: usize| -> Vec<RootClass> {
        (from..to).map(|i| RootClass::from_terms(dim, &[(i, 1), (i + 1, -1)])).collect()
    };
    let branch = RootClass::from_terms(dim, &[(0, 1), (1, -1), (2, -1), (3, -1)]);
    let graph = graph.new_checked()?;
    let needed = match graph {
        DualGraph::A(n) => {
            if first == 0 {
                return Err(Error::OutOfRange("A_n chains start at e1 or later".into()));
            }
            first + n as usize
        }
        DualGraph::D(n) => n as usize + 1,
        DualGraph::E(n) => n as usize,
        other => {
            return Err(Error::InvalidModel(format!(
                "{other} does not occur as a singularity of a del Pezzo surface"
            )))
        }
    };
    if needed > r {
        return Err(Error::OutOfRange(format!(
            "{graph} needs e1..e{needed} but a degree {degree} del Pezzo only has e1..e{r}"
        )));
    }
    let roots = match graph {
        DualGraph::A(n) => chain(first, first + n as usize),
        DualGraph::D(n) => {
            let mut v = vec![branch];
            v.extend(chain(2, n as usize + 1));
            v
        }
        _ => {
            let mut v = vec![branch];
            v.extend(chain(1, needed));
            v
        }
    };
    Ok(roots)
}

/// Root classes for several disjoint A-D-E configurations: D/E first, then
/// A-chains packed after it.
pub fn ade_configuration(graphs: &[DualGraph], degree: u32) -> Result<Vec<RootClass>> {
    let mut sorted: Vec<DualGraph> = graphs.to_vec();
    sorted.sort_by_key(|g| matches!(g, DualGraph::A(_)));
    let mut roots = Vec::new();
    let mut next = 1usize;
    let mut seen_de = false;
    for g in sorted {
        match g {
            DualGraph::A(n) => {
                roots.extend(ade_roots(g, degree, next)?);
                next += n as usize + 1;
            }
            DualGraph::D(n) | DualGraph::E(n) => {
                if seen_de {
                    return Err(Error::InvalidModel("at most one D/E configuration can be placed".into()));
                }
                seen_de = true;
                roots.extend(ade_roots(g, degree, 1)?);
                next = if matches!(g, DualGraph::D(_)) { n as usize + 2 } else { n as usize + 1 };
            }
            other => return ade_roots(other, degree, next),
        }
    }
    Ok(roots)
}

/// Rank of the integer span of the given classes.
pub fn lattice_rank(roots: &[RootClass]) -> Result<usize> {
    for r in roots {
        if r.dot(r) != -2 {
            return Err(Error::InvalidModel(format!("{:?} is not a (-2)-class", r.0)));
        }
    }
    let matrix: Vec<Vec<BigInt>> = roots
        .iter()
        .map(|r| r.0.iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    Ok(bareiss_rank(&matrix))
}

/// Connected components of the intersection graph of the classes.
fn component_count(roots: &[RootClass]) -> usize {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut i = i;
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if roots[i].dot(&roots[j]) != 0 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    (0..n).filter(|&i| find(&mut parent, i) == i).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DelPezzoVariant {
    NormalRational,
    NormalElliptic,
    /// Non-normal, first case of Reid's classification. Carries `b2(E) = 2`,
    /// a convention tied to the parity relation `χ(B̃) ≡ b2(E) mod 2`:
    /// case (i) is the one with `χ(B̃)` even.
    NonNormalI,
    /// Non-normal, second case; `b2(E) = 1`.
    NonNormalIi,
}

impl DelPezzoVariant {
    pub fn is_non_normal(self) -> bool {
        matches!(self, DelPezzoVariant::NonNormalI | DelPezzoVariant::NonNormalIi)
    }
}

/// Betti numbers `b0..b4` of a compact complex surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceBetti(pub [u64; 5]);

impl SurfaceBetti {
    pub fn euler(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn b2(&self) -> u64 {
        self.0[2]
    }

    pub fn b3(&self) -> u64 {
        self.0[3]
    }
}

/// Generalised del Pezzo surface contracted by a type II contraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DelPezzoModel {
    variant: DelPezzoVariant,
    degree: u32,
    contracted_roots: Vec<RootClass>,
}

impl DelPezzoModel {
    pub fn new(variant: DelPezzoVariant, degree: u32, contracted_roots: Vec<RootClass>) -> Result<Self> {
        if !(1..=8).contains(&degree) {
            return Err(Error::OutOfRange(format!("del Pezzo degree {degree} is not in 1..8")));
        }
        match variant {
            DelPezzoVariant::NormalElliptic if degree > 3 => {
                return Err(Error::InvalidModel(format!(
                    "an elliptic del Pezzo surface has degree at most 3, got {degree}"
                )))
            }
            v if v.is_non_normal() && degree != 7 => {
                return Err(Error::InvalidModel(format!(
                    "a non-normal del Pezzo surface has degree 7, got {degree}"
                )))
            }
            _ => {}
        }
        if variant != DelPezzoVariant::NormalRational && !contracted_roots.is_empty() {
            return Err(Error::InvalidModel("only normal rational models carry root classes".into()));
        }
        let dim = 10 - degree as usize;
        for r in &contracted_roots {
            if r.0.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: r.0.len(),
                });
            }
            if r.dot(r) != -2 {
                return Err(Error::InvalidModel(format!("{:?} is not a (-2)-class", r.0)));
            }
        }
        let components = component_count(&contracted_roots);
        if components > 6 {
            return Err(Error::InvalidModel(format!(
                "{components} singular points; a normal del Pezzo surface has at most 6"
            )));
        }
        Ok(DelPezzoModel {
            variant,
            degree,
            contracted_roots,
        })
    }

    pub fn smooth(degree: u32) -> Result<Self> {
        DelPezzoModel::new(DelPezzoVariant::NormalRational, degree, Vec::new())
    }

    pub fn elliptic(degree: u32) -> Result<Self> {
        DelPezzoModel::new(DelPezzoVariant::NormalElliptic, degree, Vec::new())
    }

    pub fn variant(&self) -> DelPezzoVariant {
        self.variant
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn contracted_roots(&self) -> &[RootClass] {
        &self.contracted_roots
    }

    /// `n_E`: number of exceptional curves of the minimal resolution.
    pub fn exceptional_curves(&self) -> usize {
        match self.variant {
            DelPezzoVariant::NormalRational => self.contracted_roots.len(),
            // a single elliptic curve
            DelPezzoVariant::NormalElliptic => 1,
            _ => 0,
        }
    }

    /// `(k_E, c_E)`: rank of the span of the contracted classes and the
    /// number of relations among them.
    pub fn lattice_invariants(&self) -> (usize, usize) {
        let k = lattice_rank(&self.contracted_roots).expect("validated on construction");
        (k, self.contracted_roots.len() - k)
    }
}

pub fn delpezzo_betti(model: &DelPezzoModel) -> SurfaceBetti {
    let (b2, b3) = match model.variant {
        DelPezzoVariant::NormalRational => {
            let (k, c) = model.lattice_invariants();
            (10 - u64::from(model.degree) - k as u64, c as u64)
        }
        DelPezzoVariant::NormalElliptic => (1, 2),
        DelPezzoVariant::NonNormalI => (2, 0),
        DelPezzoVariant::NonNormalIi => (1, 0),
    };
    SurfaceBetti([1, 0, b2, b3, 1])
}

fn elliptic_degree(d: u32) -> Result<()> {
    if (1..=3).contains(&d) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("elliptic del Pezzo degree must be 1..3, got {d}")))
    }
}

/// Minimal resolution of an elliptic del Pezzo surface: a ruled surface
/// over an elliptic curve.
pub fn elliptic_resolution_betti(d: u32) -> Result<SurfaceBetti> {
    elliptic_degree(d)?;
    Ok(SurfaceBetti([1, 2, 2, 2, 1]))
}

/// A smoothing of an elliptic del Pezzo surface is a smooth del Pezzo
/// surface of the same degree.
pub fn elliptic_smoothing_betti(d: u32) -> Result<SurfaceBetti> {
    elliptic_degree(d)?;
    Ok(SurfaceBetti([1, 0, 10 - u64::from(d), 0, 1]))
}

/// Milnor number of the elliptic singular point of the surface.
pub fn elliptic_surface_singularity_milnor(d: u32) -> Result<u64> {
    elliptic_degree(d)?;
    Ok(11 - u64::from(d))
}

/// Hirzebruch surface `𝔽_a` normalising a non-normal del Pezzo surface.
pub fn nonnormal_normalization_betti() -> SurfaceBetti {
    SurfaceBetti([1, 0, 2, 0, 1])
}

/// Both sides of Noether's formula `2 + h^{1,1} = 12χ(𝒪) − K²` for `𝔽_a`.
pub fn nonnormal_noether_check() -> (i64, i64) {
    let h11 = nonnormal_normalization_betti().b2() as i64;
    let chi_o = 1;
    let k_squared = 8;
    (2 + h11, 12 * chi_o - k_squared)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(v: &[i64]) -> RootClass {
        RootClass::new(v.to_vec()).unwrap()
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(tree_vertex_count(&"A1".parse().unwrap()), 1);
        assert_eq!(tree_vertex_count(&"A2".parse().unwrap()), 2);
        assert_eq!(tree_vertex_count(&"E~6".parse().unwrap()), 6);
        assert_eq!("Dt5".parse::<DualGraph>().unwrap(), DualGraph::DTilde(5));
    }

    #[test]
    fn illegal_graphs_are_rejected() {
        for bad in ["A0", "D3", "E5", "E9", "D~2", "E~8", "F4", "A", "Ax"] {
            assert!(bad.parse::<DualGraph>().is_err(), "{bad}");
        }
    }

    #[test]
    fn small_counts() {
        let nodes = SmallExceptionalLocus::uniform(16, DualGraph::A(1), SingularityGerm::node()).unwrap();
        assert_eq!(small_locus_counts(&nodes).unwrap(), (16, 16));
        let one = SmallExceptionalLocus::uniform(1, DualGraph::A(1), SingularityGerm::node()).unwrap();
        assert_eq!(small_locus_counts(&one).unwrap(), (1, 1));
        assert!(SmallExceptionalLocus::new(vec![]).is_err());
    }

    #[test]
    fn lattice_rank_examples() {
        assert_eq!(lattice_rank(&[root(&[0, 1, -1, 0, 0, 0, 0])]).unwrap(), 1);
        let roots = [
            root(&[0, 1, -1, 0, 0, 0, 0]),
            root(&[0, 0, 1, -1, 0, 0, 0]),
            root(&[0, 0, 0, 0, 1, -1, 0]),
        ];
        assert_eq!(lattice_rank(&roots).unwrap(), 3);
        assert_eq!(lattice_rank(&[]).unwrap(), 0);
        assert!(RootClass::new(vec![1, 0, 0]).is_err());
    }

    #[test]
    fn standard_embeddings_have_the_right_dynkin_diagram() {
        for (g, edges) in [
            (DualGraph::A(3), 2),
            (DualGraph::D(4), 3),
            (DualGraph::D(5), 4),
            (DualGraph::E(6), 5),
            (DualGraph::E(8), 7),
        ] {
            let roots = ade_roots(g, 1, 1).unwrap();
            assert_eq!(roots.len(), g.vertex_count() as usize);
            let mut count = 0;
            let mut max_degree = 0;
            for i in 0..roots.len() {
                let mut deg = 0;
                for j in 0..roots.len() {
                    if i != j {
                        let p = roots[i].dot(&roots[j]);
                        assert!(p == 0 || p == 1, "{g}: pairing {p}");
                        deg += p;
                        if j > i {
                            count += p;
                        }
                    }
                }
                max_degree = max_degree.max(deg);
            }
            // a tree, with a trivalent vertex exactly for D and E
            assert_eq!(count, edges, "{g}");
            assert_eq!(max_degree == 3, !matches!(g, DualGraph::A(_)), "{g}");
            assert_eq!(lattice_rank(&roots).unwrap(), roots.len());
        }
    }

    #[test]
    fn configuration_does_not_fit() {
        assert!(ade_roots(DualGraph::E(8), 2, 1).is_err());
        assert!(ade_configuration(&[DualGraph::A(4), DualGraph::A(4)], 3).is_err());
        let roots = ade_configuration(&[DualGraph::A(1), DualGraph::D(4)], 2).unwrap();
        assert!(ade_configuration(&[DualGraph::A(1), DualGraph::D(4)], 3).is_err());
        assert_eq!(roots.len(), 5);
        assert_eq!(lattice_rank(&roots).unwrap(), 5);
    }

    #[test]
    fn delpezzo_betti_variants() {
        assert_eq!(delpezzo_betti(&DelPezzoModel::smooth(3).unwrap()).0, [1, 0, 7, 0, 1]);
        assert_eq!(delpezzo_betti(&DelPezzoModel::elliptic(2).unwrap()).0, [1, 0, 1, 2, 1]);
        let nn = DelPezzoModel::new(DelPezzoVariant::NonNormalI, 7, vec![]).unwrap();
        assert_eq!(delpezzo_betti(&nn).0, [1, 0, 2, 0, 1]);
        let nn = DelPezzoModel::new(DelPezzoVariant::NonNormalIi, 7, vec![]).unwrap();
        assert_eq!(delpezzo_betti(&nn).0, [1, 0, 1, 0, 1]);
    }

    #[test]
    fn model_invariants() {
        assert!(DelPezzoModel::elliptic(4).is_err());
        assert!(DelPezzoModel::new(DelPezzoVariant::NonNormalI, 6, vec![]).is_err());
        assert!(DelPezzoModel::smooth(0).is_err());
        assert!(DelPezzoModel::smooth(9).is_err());
        // root of the wrong lattice
        assert!(DelPezzoModel::new(DelPezzoVariant::NormalRational, 3, vec![root(&[0, 1, -1])]).is_err());
        // seven disjoint A1's do not fit in any del Pezzo surface
        let seven: Vec<DualGraph> = vec![DualGraph::A(1); 7];
        assert!(ade_configuration(&seven, 1).is_err());
    }

    #[test]
    fn elliptic_resolution_and_smoothing() {
        for d in 1..=3 {
            assert_eq!(elliptic_resolution_betti(d).unwrap().0, [1, 2, 2, 2, 1]);
            assert_eq!(elliptic_smoothing_betti(d).unwrap().0, [1, 0, 10 - d as u64, 0, 1]);
        }
        assert_eq!(elliptic_surface_singularity_milnor(3).unwrap(), 8);
        assert_eq!(elliptic_surface_singularity_milnor(2).unwrap(), 9);
        assert_eq!(elliptic_surface_singularity_milnor(1).unwrap(), 10);
        assert!(elliptic_surface_singularity_milnor(4).is_err());
        assert!(elliptic_resolution_betti(0).is_err());
    }

    #[test]
    fn hirzebruch_normalization() {
        let b = nonnormal_normalization_betti();
        assert_eq!(b.0, [1, 0, 2, 0, 1]);
        assert_eq!(b.euler(), 4);
        assert_eq!(nonnormal_noether_check(), (4, 4));
    }
}
