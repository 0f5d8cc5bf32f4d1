//! The graphs `H(n, k, l, n0, t0)` and their closed-form distance sums.
//!
//! `H` consists of `k` disjoint `n`-cycles. At every position `i` the `k`
//! cycle vertices at that position are joined to all `l` attachment
//! vertices of a copy `F_i` of a fixed gadget `F` of order `n0`. `t0` is the
//! transmission of a cycle vertex inside `F_i` plus that vertex.
//!
//! Vertex layout: cycle vertex `(c, i)` has id `c * n + i`; gadget vertex
//! `j` of copy `i` has id `k * n + i * n0 + j`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid gadget: {0}")]
    InvalidGadget(String),
    #[error("gadget plus apex is disconnected")]
    DisconnectedGadget,
    #[error("constructed graph is disconnected")]
    Disconnected,
    #[error("non-integral delta: 4*delta = {numerator} leaves residue {residue} mod 4")]
    NonIntegralDelta { numerator: i64, residue: i64 },
    #[error("bad selector `{selector}`: {reason}")]
    Selector { selector: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Where the pendant path of a broom hangs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Hang {
    Center,
    Leaf,
}

/// The gadget `F` replicated at every cycle position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FSpec {
    /// `l` isolated vertices, all attached.
    Empty { l: usize },
    /// `l` attached vertices with extra edges inserted among them.
    EmptyPlusEdges {
        l: usize,
        edges: Vec<(usize, usize)>,
    },
    /// `l` attached vertices matched `2i -- 2i+1`; `l` even.
    PerfectMatching { l: usize },
    /// Center with `k - 1` leaves and an 8-vertex path hanging from one
    /// leaf; attached at the center.
    StarPath { k: usize },
    /// Center with `k - 1` leaves, lying on a 14-cycle; attached at the
    /// center.
    StarCycle { k: usize },
    /// `P3` attached at its middle vertex.
    PathCenter3,
    /// Center with `leaves` pendant leaves and a pendant path of `path`
    /// further vertices hanging from the center or from leaf 1; attached
    /// at the center.
    Broom {
        leaves: usize,
        path: usize,
        hang: Hang,
    },
    Custom {
        order: usize,
        edges: Vec<(usize, usize)>,
        attachments: Vec<usize>,
    },
}

/// A gadget in local labels `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
    pub attachments: Vec<usize>,
}

impl FSpec {
    pub fn gadget(&self) -> Gadget {
        match self {
            FSpec::Empty { l } => Gadget {
                order: *l,
                edges: vec![],
                attachments: (0..*l).collect(),
            },
            FSpec::EmptyPlusEdges { l, edges } => Gadget {
                order: *l,
                edges: edges.clone(),
                attachments: (0..*l).collect(),
            },
            FSpec::PerfectMatching { l } => Gadget {
                order: *l,
                edges: (0..l / 2).map(|i| (2 * i, 2 * i + 1)).collect(),
                attachments: (0..*l).collect(),
            },
            FSpec::StarPath { k } => {
                let leaves = k.saturating_sub(1);
                broom(leaves, 8, Hang::Leaf)
            }
            FSpec::StarCycle { k } => {
                // center 0, leaves 1..k, cycle 0 - k - k+1 - ... - k+12 - 0
                let leaves = k.saturating_sub(1);
                let mut edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
                let ring: Vec<usize> = std::iter::once(0).chain(leaves + 1..leaves + 14).collect();
                for w in 0..ring.len() {
                    edges.push((ring[w], ring[(w + 1) % ring.len()]));
                }
                Gadget {
                    order: leaves + 14,
                    edges,
                    attachments: vec![0],
                }
            }
            FSpec::PathCenter3 => Gadget {
                order: 3,
                edges: vec![(0, 1), (0, 2)],
                attachments: vec![0],
            },
            FSpec::Broom { leaves, path, hang } => broom(*leaves, *path, *hang),
            FSpec::Custom {
                order,
                edges,
                attachments,
            } => Gadget {
                order: *order,
                edges: edges.clone(),
                attachments: attachments.clone(),
            },
        }
    }

    /// `n0`, the gadget order.
    pub fn order(&self) -> usize {
        self.gadget().order
    }

    /// `l`, the number of attachment vertices.
    pub fn attachment_count(&self) -> usize {
        self.gadget().attachments.len()
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let bad = |m: String| Err(FamilyError::InvalidGadget(m));
        match self {
            FSpec::PerfectMatching { l } if l % 2 != 0 => {
                return bad(format!("perfect matching needs even l, got {l}"))
            }
            FSpec::StarPath { k } | FSpec::StarCycle { k } if *k < 2 => {
                return bad(format!("star gadgets need k >= 2, got {k}"))
            }
            FSpec::Broom {
                leaves: 0,
                hang: Hang::Leaf,
                ..
            } => return bad("a broom hanging from a leaf needs a leaf".into()),
            _ => {}
        }
        let g = self.gadget();
        if g.attachments.is_empty() {
            return bad("no attachment vertices".into());
        }
        let mut seen = g.attachments.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != g.attachments.len() {
            return bad("attachment vertices are not distinct".into());
        }
        if seen.last().is_some_and(|&a| a >= g.order) {
            return bad("attachment vertex outside the gadget".into());
        }
        Graph::from_edges(g.order, g.edges.iter().copied())
            .map_err(|e| FamilyError::InvalidGadget(e.to_string()))?;
        Ok(())
    }
}

fn broom(leaves: usize, path: usize, hang: Hang) -> Gadget {
    let mut edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    let mut prev = match hang {
        Hang::Center => 0,
        Hang::Leaf => 1,
    };
    for v in leaves + 1..=leaves + path {
        edges.push((prev, v));
        prev = v;
    }
    Gadget {
        order: leaves + path + 1,
        edges,
        attachments: vec![0],
    }
}

impl fmt::Display for FSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FSpec::Empty { l } => write!(f, "empty({l})"),
            FSpec::EmptyPlusEdges { l, edges } => {
                write!(f, "empty({l})+edges(")?;
                for (i, (u, v)) in edges.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{u}-{v}")?;
                }
                write!(f, ")")
            }
            FSpec::PerfectMatching { l } => write!(f, "matching({l})"),
            FSpec::StarPath { k } => write!(f, "starpath({k})"),
            FSpec::StarCycle { k } => write!(f, "starcycle({k})"),
            FSpec::PathCenter3 => write!(f, "p3center"),
            FSpec::Broom { leaves, path, hang } => {
                let at = match hang {
                    Hang::Center => "center",
                    Hang::Leaf => "leaf",
                };
                write!(f, "broom({leaves};{path};{at})")
            }
            FSpec::Custom {
                order, attachments, ..
            } => write!(f, "custom(n0={order};l={})", attachments.len()),
        }
    }
}

impl FromStr for FSpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| FamilyError::Selector {
            selector: s.to_string(),
            reason: reason.to_string(),
        };
        let s = s.trim();
        if s == "p3center" {
            return Ok(FSpec::PathCenter3);
        }
        let (head, rest) = s
            .split_once('(')
            .ok_or_else(|| err("expected name(args)"))?;
        let (args, tail) = rest.split_once(')').ok_or_else(|| err("missing `)`"))?;
        let num = |a: &str| {
            a.trim()
                .parse::<usize>()
                .map_err(|_| err("expected an integer argument"))
        };
        let spec = match head {
            "empty" => FSpec::Empty { l: num(args)? },
            "matching" => FSpec::PerfectMatching { l: num(args)? },
            "starpath" => FSpec::StarPath { k: num(args)? },
            "starcycle" => FSpec::StarCycle { k: num(args)? },
            "broom" => {
                let parts: Vec<&str> = args.split(';').collect();
                let [a, b, at] = parts[..] else {
                    return Err(err("broom takes (leaves;path;center|leaf)"));
                };
                let hang = match at.trim() {
                    "center" => Hang::Center,
                    "leaf" => Hang::Leaf,
                    _ => return Err(err("broom hang must be `center` or `leaf`")),
                };
                FSpec::Broom {
                    leaves: num(a)?,
                    path: num(b)?,
                    hang,
                }
            }
            _ => return Err(err("unknown gadget")),
        };
        if tail.is_empty() {
            return Ok(spec);
        }
        // empty(l)+edges(u-v;u-v)
        let FSpec::Empty { l } = spec else {
            return Err(err("only empty(l) accepts +edges(...)"));
        };
        let list = tail
            .strip_prefix("+edges(")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| err("expected +edges(u-v;...)"))?;
        let edges = list
            .split(';')
            .filter(|p| !p.trim().is_empty())
            .map(|p| {
                let (u, v) = p.split_once('-').ok_or_else(|| err("edge must be u-v"))?;
                Ok((num(u)?, num(v)?))
            })
            .collect::<Result<Vec<_>, FamilyError>>()?;
        Ok(FSpec::EmptyPlusEdges { l, edges })
    }
}

/// Recipe for an H-graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HParams {
    pub n: usize,
    pub k: usize,
    pub fspec: FSpec,
}

impl HParams {
    pub fn new(n: usize, k: usize, fspec: FSpec) -> Self {
        Self { n, k, fspec }
    }

    pub fn n0(&self) -> usize {
        self.fspec.order()
    }

    pub fn l(&self) -> usize {
        self.fspec.attachment_count()
    }

    /// `n (k + n0)`.
    pub fn order(&self) -> usize {
        self.n * (self.k + self.n0())
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        if self.n < 3 {
            return Err(FamilyError::InvalidParams(format!("n = {} < 3", self.n)));
        }
        if self.k < 2 {
            return Err(FamilyError::InvalidParams(format!("k = {} < 2", self.k)));
        }
        self.fspec.validate()
    }
}

impl fmt::Display for HParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h:n={},k={},f={}", self.n, self.k, self.fspec)
    }
}

/// `t0`: transmission of an apex joined to the attachment vertices of `F`,
/// measured in `F` plus the apex.
pub fn t0_of(fspec: &FSpec) -> Result<i64, FamilyError> {
    fspec.validate()?;
    let g = fspec.gadget();
    let apex = g.order;
    let edges = g
        .edges
        .iter()
        .copied()
        .chain(g.attachments.iter().map(|&a| (a, apex)));
    let graph = Graph::from_edges(g.order + 1, edges)?;
    graph.transmission(apex).map_err(|e| match e {
        GraphError::Disconnected { .. } => FamilyError::DisconnectedGadget,
        other => other.into(),
    })
}

/// Structural role of a vertex of an H-graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Cycle { cycle: usize, position: usize },
    Gadget { position: usize, index: usize },
}

impl Role {
    pub fn position(&self) -> usize {
        match *self {
            Role::Cycle { position, .. } | Role::Gadget { position, .. } => position,
        }
    }
}

/// A constructed H-graph with its role metadata.
#[derive(Debug, Clone)]
pub struct HGraph {
    pub graph: Graph,
    pub params: HParams,
    pub n0: usize,
    pub t0: i64,
    roles: Vec<Role>,
}

impl HGraph {
    pub fn cycle_vertex(&self, cycle: usize, position: usize) -> Vertex {
        cycle * self.params.n + position
    }

    pub fn gadget_vertex(&self, position: usize, index: usize) -> Vertex {
        self.params.k * self.params.n + position * self.n0 + index
    }

    /// The `kn` vertices of the cycle union `C`.
    pub fn cycle_vertices(&self) -> std::ops::Range<Vertex> {
        0..self.params.k * self.params.n
    }

    pub fn role_of(&self, v: Vertex) -> Role {
        self.roles[v]
    }

    pub fn position_of(&self, v: Vertex) -> usize {
        self.roles[v].position()
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    /// Maps each vertex through `f` applied to its role.
    pub fn permutation(&self, f: impl Fn(Role) -> Role) -> Vec<Vertex> {
        self.roles
            .iter()
            .map(|&r| match f(r) {
                Role::Cycle { cycle, position } => self.cycle_vertex(cycle, position),
                Role::Gadget { position, index } => self.gadget_vertex(position, index),
            })
            .collect()
    }

    /// Label used in reports and file comments.
    pub fn describe(&self) -> String {
        format!(
            "H({},{},{},{},{}) f={}",
            self.params.n,
            self.params.k,
            self.params.l(),
            self.n0,
            self.t0,
            self.params.fspec
        )
    }
}

pub fn build_h(params: &HParams) -> Result<HGraph, FamilyError> {
    params.validate()?;
    let t0 = t0_of(&params.fspec)?;
    let gadget = params.fspec.gadget();
    let (n, k, n0) = (params.n, params.k, gadget.order);
    let order = n * (k + n0);
    let cyc = |c: usize, i: usize| c * n + i;
    let gad = |i: usize, j: usize| k * n + i * n0 + j;

    let mut edges =
        Vec::with_capacity(k * n + n * (k * gadget.attachments.len() + gadget.edges.len()));
    for c in 0..k {
        for i in 0..n {
            edges.push((cyc(c, i), cyc(c, (i + 1) % n)));
        }
    }
    for i in 0..n {
        for &a in &gadget.attachments {
            for c in 0..k {
                edges.push((cyc(c, i), gad(i, a)));
            }
        }
        for &(u, v) in &gadget.edges {
            edges.push((gad(i, u), gad(i, v)));
        }
    }
    let graph = Graph::from_edges(order, edges)?;
    if !graph.is_connected() {
        return Err(FamilyError::Disconnected);
    }

    let mut roles = Vec::with_capacity(order);
    for cycle in 0..k {
        roles.extend((0..n).map(|position| Role::Cycle { cycle, position }));
    }
    for position in 0..n {
        roles.extend((0..n0).map(|index| Role::Gadget { position, index }));
    }
    Ok(HGraph {
        graph,
        params: params.clone(),
        n0,
        t0,
        roles,
    })
}

/// Transmission of a cycle vertex of `H(n, k, l, n0, t0)`.
pub fn tr_closed_form(n: i64, k: i64, n0: i64, t0: i64) -> i64 {
    let quarter = if n % 2 == 0 {
        n * n / 4
    } else {
        (n * n - 1) / 4
    };
    quarter * (k + n0) + n * (2 * k + t0 - 2)
}

/// `4 * Delta_v(H)` for a cycle vertex, exact in integers.
pub fn delta_times_four(n: i64, k: i64, n0: i64, t0: i64) -> i64 {
    let tail = if n % 2 == 0 {
        4 * (2 * n0 + 8)
    } else {
        k + 11 * n0 + 34
    };
    4 * n * (2 * k + t0 + n0 + 2) - n * n * (n0 - k + 2) - tail
}

/// `Delta_v(H) = W(H) - W(H - v)` for a cycle vertex. Holds for `n >= 4`.
pub fn delta_closed_form(n: i64, k: i64, n0: i64, t0: i64) -> Result<i64, FamilyError> {
    exact_quarter(delta_times_four(n, k, n0, t0))
}

fn exact_quarter(numerator: i64) -> Result<i64, FamilyError> {
    let residue = numerator.rem_euclid(4);
    if residue != 0 {
        return Err(FamilyError::NonIntegralDelta { numerator, residue });
    }
    Ok(numerator.div_euclid(4))
}

/// Distance increases caused by deleting a cycle vertex `u0`, split by
/// vertex-pair class. `P` is the rest of `u0`'s cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseSums {
    /// Both ends on `P`.
    pub path_pairs: i64,
    /// One end on `P`, the other in the gadget copy at `u0`'s position.
    pub own_gadget: i64,
    /// One end on `P`, the other in any other gadget copy.
    pub other_gadgets: i64,
}

impl CaseSums {
    pub fn total(&self) -> i64 {
        self.path_pairs + self.own_gadget + self.other_gadgets
    }
}

/// Closed forms for the three pair classes; `None` for `n < 5`.
pub fn case_sums(n: i64, n0: i64) -> Option<CaseSums> {
    if n < 5 {
        return None;
    }
    let (path_pairs, other_gadgets) = if n % 2 == 0 {
        ((n * n - 8 * n + 16) / 2, n0 * (n * n - 6 * n + 8) / 2)
    } else {
        ((n * n - 8 * n + 17) / 2, n0 * (n * n - 6 * n + 9) / 2)
    };
    Some(CaseSums {
        path_pairs,
        own_gadget: 2 * n0 * (n - 1),
        other_gadgets,
    })
}

/// The parametrized families with known distance-difference behaviour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedFamily {
    /// `H(16m+95, m+6, m+5, m+5, m+5)` with edgeless `F`.
    Prop2 { m: usize },
    /// `Prop2` with the first `s` pairs of `F` (lexicographic) joined.
    Prop2Edges { m: usize, s: usize },
    /// `Prop2` with a perfect matching in `F`; `m` odd.
    Prop2Matching { m: usize },
    /// `H(2k+24, k, 1, k+8, 2k+51)`.
    Prop3 { k: usize },
    /// `H((4k+59)/3, k, 1, k+13, 2k+61)` for `k = 1 mod 3`.
    Prop4 { k: usize },
    /// `H(71, 4, 1, 3, 5)`.
    Example497,
    /// `Example497` with the two leaves of every `P3` joined.
    Example497Joined,
}

impl NamedFamily {
    pub fn params(&self) -> Result<HParams, FamilyError> {
        let bad = |m: String| Err(FamilyError::InvalidParams(m));
        Ok(match *self {
            NamedFamily::Prop2 { m } => HParams::new(16 * m + 95, m + 6, FSpec::Empty { l: m + 5 }),
            NamedFamily::Prop2Edges { m, s } => {
                let l = m + 5;
                let pairs: Vec<_> = (0..l)
                    .flat_map(|u| (u + 1..l).map(move |v| (u, v)))
                    .collect();
                if s > pairs.len() {
                    return bad(format!("s = {s} exceeds the {} pairs of F", pairs.len()));
                }
                HParams::new(
                    16 * m + 95,
                    m + 6,
                    FSpec::EmptyPlusEdges {
                        l,
                        edges: pairs[..s].to_vec(),
                    },
                )
            }
            NamedFamily::Prop2Matching { m } => {
                if m % 2 == 0 {
                    return bad(format!("matching family needs odd m, got {m}"));
                }
                HParams::new(16 * m + 95, m + 6, FSpec::PerfectMatching { l: m + 5 })
            }
            NamedFamily::Prop3 { k } => {
                if k < 2 {
                    return bad(format!("prop3 needs k >= 2, got {k}"));
                }
                HParams::new(2 * k + 24, k, FSpec::StarPath { k })
            }
            NamedFamily::Prop4 { k } => {
                if k < 4 || k % 3 != 1 {
                    return bad(format!("prop4 needs k >= 4 with k = 1 mod 3, got {k}"));
                }
                HParams::new((4 * k + 59) / 3, k, FSpec::StarCycle { k })
            }
            NamedFamily::Example497 => HParams::new(71, 4, FSpec::PathCenter3),
            NamedFamily::Example497Joined => HParams::new(
                71,
                4,
                FSpec::Custom {
                    order: 3,
                    edges: vec![(0, 1), (0, 2), (1, 2)],
                    attachments: vec![0],
                },
            ),
        })
    }
}

impl fmt::Display for NamedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedFamily::Prop2 { m } => write!(f, "prop2:m={m}"),
            NamedFamily::Prop2Edges { m, s } => write!(f, "prop2:m={m},s={s}"),
            NamedFamily::Prop2Matching { m } => write!(f, "prop2-matching:m={m}"),
            NamedFamily::Prop3 { k } => write!(f, "prop3:k={k}"),
            NamedFamily::Prop4 { k } => write!(f, "prop4:k={k}"),
            NamedFamily::Example497 => write!(f, "example497"),
            NamedFamily::Example497Joined => write!(f, "example497-joined"),
        }
    }
}

/// A graph source named on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selector {
    Named(NamedFamily),
    Explicit(HParams),
}

impl Selector {
    pub fn params(&self) -> Result<HParams, FamilyError> {
        match self {
            Selector::Named(f) => f.params(),
            Selector::Explicit(p) => Ok(p.clone()),
        }
    }

    pub fn build(&self) -> Result<HGraph, FamilyError> {
        build_h(&self.params()?)
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Named(n) => n.fmt(f),
            Selector::Explicit(p) => p.fmt(f),
        }
    }
}

impl FromStr for Selector {
    type Err = FamilyError;

    /// Accepts `prop2:m=N[,s=S]`, `prop2-matching:m=N`, `prop3:k=N`,
    /// `prop4:k=N`, `example497`, `example497-joined` and
    /// `h:n=N,k=K,f=GADGET`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: String| FamilyError::Selector {
            selector: s.to_string(),
            reason,
        };
        let s = s.trim();
        match s {
            "example497" => return Ok(Selector::Named(NamedFamily::Example497)),
            "example497-joined" => return Ok(Selector::Named(NamedFamily::Example497Joined)),
            _ => {}
        }
        let (head, body) = s
            .split_once(':')
            .ok_or_else(|| err("expected family:key=value,...".into()))?;

        let mut keys: Vec<(&str, &str)> = Vec::new();
        for part in body.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| err(format!("expected key=value, got `{part}`")))?;
            keys.push((key.trim(), value.trim()));
        }
        let get = |name: &str| keys.iter().find(|(k, _)| *k == name).map(|(_, v)| *v);
        let num = |name: &str| -> Result<usize, FamilyError> {
            let v = get(name).ok_or_else(|| err(format!("missing `{name}`")))?;
            v.parse()
                .map_err(|_| err(format!("`{name}` must be a non-negative integer")))
        };
        let allow = |names: &[&str]| -> Result<(), FamilyError> {
            match keys.iter().find(|(k, _)| !names.contains(k)) {
                Some((k, _)) => Err(err(format!("unexpected key `{k}`"))),
                None => Ok(()),
            }
        };

        let selector = match head {
            "prop2" => {
                allow(&["m", "s"])?;
                let m = num("m")?;
                match get("s") {
                    Some(_) => Selector::Named(NamedFamily::Prop2Edges { m, s: num("s")? }),
                    None => Selector::Named(NamedFamily::Prop2 { m }),
                }
            }
            "prop2-matching" => {
                allow(&["m"])?;
                Selector::Named(NamedFamily::Prop2Matching { m: num("m")? })
            }
            "prop3" => {
                allow(&["k"])?;
                Selector::Named(NamedFamily::Prop3 { k: num("k")? })
            }
            "prop4" => {
                allow(&["k"])?;
                Selector::Named(NamedFamily::Prop4 { k: num("k")? })
            }
            "h" => {
                // f=... may itself contain commas inside +edges(...); take the rest verbatim.
                let f_at = body.find("f=").ok_or_else(|| err("missing `f`".into()))?;
                let fspec: FSpec = body[f_at + 2..].parse()?;
                let head_keys = &body[..f_at];
                let mut n = None;
                let mut k = None;
                for part in head_keys.split(',').filter(|p| !p.is_empty()) {
                    let (key, value) = part
                        .split_once('=')
                        .ok_or_else(|| err(format!("expected key=value, got `{part}`")))?;
                    let value: usize = value
                        .trim()
                        .parse()
                        .map_err(|_| err(format!("`{key}` must be a non-negative integer")))?;
                    match key.trim() {
                        "n" => n = Some(value),
                        "k" => k = Some(value),
                        other => return Err(err(format!("unexpected key `{other}`"))),
                    }
                }
                let n = n.ok_or_else(|| err("missing `n`".into()))?;
                let k = k.ok_or_else(|| err("missing `k`".into()))?;
                Selector::Explicit(HParams::new(n, k, fspec))
            }
            other => return Err(err(format!("unknown family `{other}`"))),
        };
        // Surface parity / range violations at parse time.
        selector.params()?.validate()?;
        Ok(selector)
    }
}
