//! Vertex-deletion differences `Delta_v(G) = W(G) - W(G - v)` and the ratios
//! `R_m(G)`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::family::{self, FamilyError, HGraph, Role};
use crate::graph::{Graph, GraphError, Vertex};

pub type Rational = Ratio<i64>;

/// Default order cap for brute-force verification.
pub const DEFAULT_CAP: usize = 5000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("removing vertex {0} disconnects the graph")]
    CutVertex(Vertex),
    #[error("role metadata does not match the graph: {0}")]
    Metadata(String),
    #[error("order {order} exceeds the verification cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Multiset of `Delta_v` over all vertices of a graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DeltaSpectrum {
    /// `m -> |{v : Delta_v = m}|`
    pub counts: BTreeMap<i64, usize>,
    /// Vertices whose removal disconnects the graph.
    pub disconnecting: usize,
    pub order: usize,
}

impl DeltaSpectrum {
    pub fn count(&self, m: i64) -> usize {
        self.counts.get(&m).copied().unwrap_or(0)
    }

    fn add(&mut self, delta: Option<i64>, times: usize) {
        match delta {
            Some(d) => *self.counts.entry(d).or_default() += times,
            None => self.disconnecting += times,
        }
    }
}

/// `R_m`: fraction of all vertices with `Delta_v = m`, in lowest terms.
pub fn r_m(spectrum: &DeltaSpectrum, m: i64) -> Rational {
    if spectrum.order == 0 {
        return Rational::zero();
    }
    Rational::new(spectrum.count(m) as i64, spectrum.order as i64)
}

/// Renders a non-negative rational to three decimals, rounding halves up.
pub fn decimal3(r: &Rational) -> String {
    let negative = r.is_negative();
    let r = r.abs();
    let (num, den) = (i128::from(*r.numer()), i128::from(*r.denom()));
    let thousandths = (2000 * num + den) / (2 * den);
    let sign = if negative && thousandths != 0 {
        "-"
    } else {
        ""
    };
    format!("{sign}{}.{:03}", thousandths / 1000, thousandths % 1000)
}

/// `p/q (0.ddd)`
pub fn show_ratio(r: &Rational) -> String {
    format!("{}/{} ({})", r.numer(), r.denom(), decimal3(r))
}

/// `W(G - v)`, or `None` when `G - v` is disconnected.
pub fn wiener_without(g: &Graph, v: Vertex) -> Result<Option<i64>, GraphError> {
    let rest = g.delete_vertex(v);
    if !rest.is_connected() {
        return Ok(None);
    }
    rest.wiener().map(Some)
}

pub fn delta_of_vertex(g: &Graph, v: Vertex) -> Result<i64, AnalysisError> {
    if v >= g.order() {
        return Err(GraphError::NoSuchVertex {
            vertex: v,
            order: g.order(),
        }
        .into());
    }
    let w = g.wiener()?;
    wiener_without(g, v)?
        .map(|rest| w - rest)
        .ok_or(AnalysisError::CutVertex(v))
}

/// `Delta_v` for every vertex by full recomputation of `W(G - v)`.
pub fn delta_spectrum(g: &Graph) -> Result<DeltaSpectrum, AnalysisError> {
    let w = g.wiener()?;
    let deltas: Vec<Option<i64>> = (0..g.order())
        .into_par_iter()
        .map(|v| wiener_without(g, v).map(|r| r.map(|rest| w - rest)))
        .collect::<Result<_, _>>()?;
    let mut spectrum = DeltaSpectrum {
        order: g.order(),
        ..Default::default()
    };
    for d in deltas {
        spectrum.add(d, 1);
    }
    Ok(spectrum)
}

/// Checks that the construction metadata describes `h.graph`: role layout,
/// edge count, and that rotating positions and swapping adjacent cycles are
/// automorphisms. Together these make `C` one orbit and every gadget index
/// an orbit of size `n`.
pub fn check_metadata(h: &HGraph) -> Result<(), AnalysisError> {
    let bad = |m: String| Err(AnalysisError::Metadata(m));
    let (n, k, n0) = (h.params.n, h.params.k, h.n0);
    let g = &h.graph;
    if g.order() != n * (k + n0) || h.roles().len() != g.order() {
        return bad(format!(
            "order {} is not n(k+n0) = {}",
            g.order(),
            n * (k + n0)
        ));
    }
    for (v, role) in h.roles().iter().enumerate() {
        let expect = match *role {
            Role::Cycle { cycle, position } if cycle < k && position < n => {
                h.cycle_vertex(cycle, position)
            }
            Role::Gadget { position, index } if position < n && index < n0 => {
                h.gadget_vertex(position, index)
            }
            _ => return bad(format!("vertex {v} has out-of-range role {role:?}")),
        };
        if expect != v {
            return bad(format!("vertex {v} role {role:?} maps to id {expect}"));
        }
    }
    let gadget = h.params.fspec.gadget();
    let expected_edges = k * n + n * (k * gadget.attachments.len()) + n * gadget.edges.len();
    if g.edge_count() != expected_edges {
        return bad(format!(
            "edge count {} differs from construction {}",
            g.edge_count(),
            expected_edges
        ));
    }
    let l = h.params.l();
    for v in h.cycle_vertices() {
        if g.degree(v) != l + 2 {
            return bad(format!(
                "cycle vertex {v} has degree {} instead of {}",
                g.degree(v),
                l + 2
            ));
        }
    }
    let rotate = h.permutation(|r| match r {
        Role::Cycle { cycle, position } => Role::Cycle {
            cycle,
            position: (position + 1) % n,
        },
        Role::Gadget { position, index } => Role::Gadget {
            position: (position + 1) % n,
            index,
        },
    });
    if !g.is_automorphism(&rotate) {
        return bad("position rotation is not an automorphism".into());
    }
    for c in 0..k - 1 {
        let swap = h.permutation(|r| match r {
            Role::Cycle { cycle, position } if cycle == c || cycle == c + 1 => Role::Cycle {
                cycle: 2 * c + 1 - cycle,
                position,
            },
            other => other,
        });
        if !g.is_automorphism(&swap) {
            return bad(format!(
                "swapping cycles {c} and {} is not an automorphism",
                c + 1
            ));
        }
    }
    Ok(())
}

/// Same result as [`delta_spectrum`] for an H-graph, computing `Delta` for
/// one cycle vertex (standing for all `kn`) and for each gadget vertex of
/// copy 0 (each standing for its `n` rotations).
pub fn delta_spectrum_orbit(h: &HGraph) -> Result<DeltaSpectrum, AnalysisError> {
    check_metadata(h)?;
    let w = h.graph.wiener()?;
    Ok(spectrum_from_orbits(h, &orbit_deltas(h, w)?))
}

/// `(representative, orbit size, Delta)`; the cycle representative is first.
fn orbit_deltas(h: &HGraph, w: i64) -> Result<Vec<(Vertex, usize, Option<i64>)>, AnalysisError> {
    let (n, k) = (h.params.n, h.params.k);
    let mut reps = vec![(h.cycle_vertex(0, 0), k * n)];
    reps.extend((0..h.n0).map(|j| (h.gadget_vertex(0, j), n)));
    reps.into_par_iter()
        .map(|(v, size)| Ok((v, size, wiener_without(&h.graph, v)?.map(|rest| w - rest))))
        .collect()
}

fn spectrum_from_orbits(h: &HGraph, orbits: &[(Vertex, usize, Option<i64>)]) -> DeltaSpectrum {
    let mut spectrum = DeltaSpectrum {
        order: h.graph.order(),
        ..Default::default()
    };
    for &(_, size, d) in orbits {
        spectrum.add(d, size);
    }
    spectrum
}

/// One named comparison in a verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn equal<T: PartialEq + fmt::Display>(
        name: impl Into<String>,
        expected: T,
        actual: T,
    ) -> Self {
        Self {
            name: name.into(),
            pass: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn holds(
        name: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
        pass: bool,
    ) -> Self {
        Self {
            name: name.into(),
            expected: expected.into(),
            actual: actual.into(),
            pass,
        }
    }
}

/// Closed forms checked against brute force for one H-graph.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub label: String,
    pub order: usize,
    pub wiener: i64,
    pub tr_bfs: i64,
    pub tr_closed: i64,
    pub delta_bfs: Option<i64>,
    pub delta_closed: Result<i64, FamilyError>,
    pub spectrum: DeltaSpectrum,
    /// `R_m` for `m` = the brute-force cycle-vertex delta.
    pub r_m: Rational,
    /// `k / (k + n0)`.
    pub bound: Rational,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

pub fn verify_instance(h: &HGraph, cap: usize) -> Result<VerifyReport, AnalysisError> {
    let order = h.graph.order();
    if order > cap {
        return Err(AnalysisError::CapExceeded { order, cap });
    }
    let (n, k, n0, t0) = (h.params.n as i64, h.params.k as i64, h.n0 as i64, h.t0);
    let g = &h.graph;
    let rep = h.cycle_vertex(0, 0);

    let trs = g.all_transmissions()?;
    let wiener = trs.iter().sum::<i64>() / 2;
    let tr_bfs = trs[rep];
    let tr_closed = family::tr_closed_form(n, k, n0, t0);
    check_metadata(h)?;
    let orbits = orbit_deltas(h, wiener)?;
    debug_assert_eq!(orbits[0].0, rep);
    let delta_bfs = orbits[0].2;
    let delta_closed = family::delta_closed_form(n, k, n0, t0);
    let spectrum = spectrum_from_orbits(h, &orbits);
    let bound = Rational::new(k, k + n0);

    let mut checks = vec![Check::equal("tr(v) bfs vs closed form", tr_closed, tr_bfs)];
    let trans_uniform = h.cycle_vertices().all(|v| trs[v] == tr_bfs);
    checks.push(Check::holds(
        "tr constant on C",
        "uniform",
        if trans_uniform { "uniform" } else { "varies" },
        trans_uniform,
    ));
    let fmt_opt = |d: Option<i64>| d.map_or("cut vertex".to_string(), |d| d.to_string());
    checks.push(Check::holds(
        "delta bfs vs closed form",
        delta_closed
            .as_ref()
            .map_or_else(|e| e.to_string(), |d| d.to_string()),
        fmt_opt(delta_bfs),
        matches!((&delta_closed, delta_bfs), (Ok(c), Some(b)) if *c == b),
    ));
    let r = delta_bfs
        .map(|m| r_m(&spectrum, m))
        .unwrap_or_else(Rational::zero);
    checks.push(Check::holds(
        "R_m >= k/(k+n0)",
        format!(">= {}", show_ratio(&bound)),
        show_ratio(&r),
        delta_bfs.is_some() && r >= bound,
    ));

    Ok(VerifyReport {
        label: h.describe(),
        order,
        wiener,
        tr_bfs,
        tr_closed,
        delta_bfs,
        delta_closed,
        spectrum,
        r_m: r,
        bound,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_h, FSpec, HParams};

    #[test]
    fn cycle11_is_all_soltes() {
        let c11 = Graph::cycle(11);
        for v in 0..11 {
            assert_eq!(delta_of_vertex(&c11, v), Ok(0));
        }
        let s = delta_spectrum(&c11).unwrap();
        assert_eq!(s.counts, BTreeMap::from([(0, 11)]));
        assert_eq!(s.disconnecting, 0);
        assert_eq!(r_m(&s, 0), Rational::from_integer(1));
        assert_eq!(r_m(&s, 3), Rational::zero());
    }

    #[test]
    fn k2_spectrum() {
        let s = delta_spectrum(&Graph::complete(2)).unwrap();
        assert_eq!(s.counts, BTreeMap::from([(1, 2)]));
        assert_eq!(s.disconnecting, 0);
    }

    #[test]
    fn cut_vertices_are_tallied() {
        let p3 = Graph::path(3);
        assert_eq!(delta_of_vertex(&p3, 1), Err(AnalysisError::CutVertex(1)));
        // W(P3) = 4, W(P2) = 1
        assert_eq!(delta_of_vertex(&p3, 0), Ok(3));
        let s = delta_spectrum(&p3).unwrap();
        assert_eq!(s.counts, BTreeMap::from([(3, 2)]));
        assert_eq!(s.disconnecting, 1);
    }

    #[test]
    fn disconnected_input_is_an_error() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(delta_spectrum(&g), Err(AnalysisError::Graph(_))));
        assert!(matches!(
            delta_of_vertex(&g, 0),
            Err(AnalysisError::Graph(_))
        ));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal3(&Rational::new(6, 11)), "0.545");
        assert_eq!(decimal3(&Rational::new(1, 6)), "0.167");
        assert_eq!(decimal3(&Rational::new(4, 7)), "0.571");
        assert_eq!(decimal3(&Rational::new(1, 2000)), "0.001");
        assert_eq!(decimal3(&Rational::new(1, 1)), "1.000");
        assert_eq!(decimal3(&Rational::new(0, 1)), "0.000");
        assert_eq!(show_ratio(&Rational::new(9, 17)), "9/17 (0.529)");
    }

    #[test]
    fn orbit_matches_brute_force_small() {
        let h = build_h(&HParams::new(7, 2, FSpec::Empty { l: 1 })).unwrap();
        assert_eq!(h.graph.order(), 21);
        assert_eq!(delta_spectrum_orbit(&h), delta_spectrum(&h.graph));
    }

    #[test]
    fn tampered_metadata_is_rejected() {
        let h = build_h(&HParams::new(7, 2, FSpec::Empty { l: 1 })).unwrap();
        let mut bent = h.clone();
        // Replace the graph with one where a single chord breaks the symmetry.
        let mut edges: Vec<_> = h.graph.edges().collect();
        edges.push((0, 2));
        bent.graph = Graph::from_edges(h.graph.order(), edges).unwrap();
        assert!(matches!(
            delta_spectrum_orbit(&bent),
            Err(AnalysisError::Metadata(_))
        ));
    }

    #[test]
    fn verify_respects_cap() {
        let h = build_h(&HParams::new(7, 2, FSpec::Empty { l: 1 })).unwrap();
        assert_eq!(
            verify_instance(&h, 20).unwrap_err(),
            AnalysisError::CapExceeded { order: 21, cap: 20 }
        );
        let report = verify_instance(&h, 21).unwrap();
        assert!(report.passed(), "{:?}", report.checks);
    }
}
