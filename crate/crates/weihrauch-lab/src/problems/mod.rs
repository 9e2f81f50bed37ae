//! The problem catalog: multi-valued specifications, instances with
//! certificates, candidate solutions, and checking/solving at finite budget.

mod check;
mod hat;
mod solve;
mod special;

pub use check::{check_solution, verify_certificate};
pub use hat::{hat_pack, hat_row};
pub use solve::solve_certified;
pub use special::{linear_graph, tagged_linear, tagged_linear_finite};

use std::fmt;
use std::sync::Arc;

use crate::encodings::{FiniteGraph, GraphCode, TreeCode};
use crate::error::{Error, Result};
use crate::oracle::OracleFn;

/// Identifier of a problem, with parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProblemId {
    /// Locate a function's first zero (0 when there is none, else index+1).
    Lpo,
    /// Parity class of the first nonzero position: 0 permitted iff it is
    /// odd, 1 iff even; both permitted when the function is all zero.
    Llpo,
    /// First initial subgraph with no k-coloring (0 when all are colorable).
    Lg(u64),
    /// Infinite k-coloring of a locally k-colorable graph.
    Gc(u64),
    /// Total k-coloring: either a coloring with f(0)=0, or f(0)=m>0 with
    /// G_m not k-colorable.
    Tc(u64),
    /// Infinite path through an infinite binary tree.
    Wkl,
    /// Infinite path through an infinite n-ary tree.
    Wkln(u64),
    /// Well-foundedness of a tree over ℕ: 0 if it has an infinite path,
    /// 1 if not.
    Wf,
    /// Is H isomorphic to a subgraph of G, for an input pair (G, H)?
    S,
    /// Does the infinite ray L embed into the input graph?
    SL,
    /// Characteristic function of { n | the tagged ray L_n embeds }.
    SVecL,
    /// Does the fixed finite pattern F embed into the input graph?
    Sf(FiniteGraph),
    /// Is there a coloring using one color infinitely often?
    Rc,
    /// Is there an infinite completely disconnected subgraph?
    D,
    /// Parallelization: an infinite sequence of instances of the base
    /// problem, solved row by row.
    Hat(Box<ProblemId>),
}

impl ProblemId {
    pub fn hat(base: ProblemId) -> ProblemId {
        ProblemId::Hat(Box::new(base))
    }

    /// Parameter range checks from the problem definitions.
    pub fn validate(&self) -> Result<()> {
        match self {
            ProblemId::Lg(k) if *k < 1 => Err(Error::Precondition("LG_k needs k >= 1".into())),
            ProblemId::Gc(k) | ProblemId::Tc(k) if *k < 2 => {
                Err(Error::Precondition("GC_k / TC_k need k >= 2".into()))
            }
            ProblemId::Wkln(n) if *n < 2 => Err(Error::Precondition("WKL_n needs n >= 2".into())),
            ProblemId::Sf(f) if f.num_vertices() < 2 => Err(Error::Precondition(
                "S_F needs a pattern with at least two vertices".into(),
            )),
            ProblemId::Hat(base) => base.validate(),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProblemId::Lpo => write!(f, "LPO"),
            ProblemId::Llpo => write!(f, "LLPO"),
            ProblemId::Lg(k) => write!(f, "LG{k}"),
            ProblemId::Gc(k) => write!(f, "GC{k}"),
            ProblemId::Tc(k) => write!(f, "TC{k}"),
            ProblemId::Wkl => write!(f, "WKL"),
            ProblemId::Wkln(n) => write!(f, "WKL{n}"),
            ProblemId::Wf => write!(f, "WF"),
            ProblemId::S => write!(f, "S"),
            ProblemId::SL => write!(f, "S_L"),
            ProblemId::SVecL => write!(f, "S_vecL"),
            ProblemId::Sf(g) => write!(f, "S_F[{}v,{}e]", g.num_vertices(), g.num_edges()),
            ProblemId::Rc => write!(f, "RC"),
            ProblemId::D => write!(f, "D"),
            ProblemId::Hat(base) => write!(f, "Hat({base})"),
        }
    }
}

/// Input object of an instance.
#[derive(Clone, Debug)]
pub enum Payload {
    Oracle(OracleFn),
    Graph(GraphCode),
    Tree(TreeCode),
    /// `(G, H)` for the isomorphic-subgraph problem: is `H` isomorphic to a
    /// subgraph of `G`?
    GraphPair(GraphCode, GraphCode),
    Hat(HatPayload),
}

impl Payload {
    pub fn as_oracle(&self) -> Result<&OracleFn> {
        match self {
            Payload::Oracle(p) => Ok(p),
            _ => Err(Error::ShapeMismatch("expected an oracle payload".into())),
        }
    }

    pub fn as_graph(&self) -> Result<&GraphCode> {
        match self {
            Payload::Graph(g) => Ok(g),
            _ => Err(Error::ShapeMismatch("expected a graph payload".into())),
        }
    }

    pub fn as_tree(&self) -> Result<&TreeCode> {
        match self {
            Payload::Tree(t) => Ok(t),
            _ => Err(Error::ShapeMismatch("expected a tree payload".into())),
        }
    }

    pub fn as_graph_pair(&self) -> Result<(&GraphCode, &GraphCode)> {
        match self {
            Payload::GraphPair(g, h) => Ok((g, h)),
            _ => Err(Error::ShapeMismatch("expected a graph pair payload".into())),
        }
    }

    pub fn as_hat(&self) -> Result<&HatPayload> {
        match self {
            Payload::Hat(h) => Ok(h),
            _ => Err(Error::ShapeMismatch("expected a hat payload".into())),
        }
    }
}

type RowPayloadFn = Arc<dyn Fn(u64) -> Result<Payload> + Send + Sync>;

/// An infinite sequence of base payloads.
#[derive(Clone)]
pub enum HatPayload {
    /// Listed rows followed by the tail payload repeated forever.
    Explicit {
        rows: Vec<Payload>,
        tail: Box<Payload>,
    },
    /// Rows produced on demand (forward transforms of hat problems).
    Computed(RowPayloadFn),
}

impl HatPayload {
    pub fn computed<F>(f: F) -> Self
    where
        F: Fn(u64) -> Result<Payload> + Send + Sync + 'static,
    {
        HatPayload::Computed(Arc::new(f))
    }

    pub fn row(&self, i: u64) -> Result<Payload> {
        match self {
            HatPayload::Explicit { rows, tail } => Ok(rows
                .get(i as usize)
                .cloned()
                .unwrap_or_else(|| (**tail).clone())),
            HatPayload::Computed(f) => f(i),
        }
    }

    /// View oracle rows as a single function over diagonal pair codes,
    /// f(pair(i, n)) = row_i(n).
    pub fn as_pair_oracle(&self) -> OracleFn {
        let rows = self.clone();
        // Pair codes grow quadratically; the row oracles enforce the real
        // per-row fuel, so the pair view itself is unbounded.
        OracleFn::computed(move |code| {
            let (i, n) = crate::encodings::diag_unpair(code);
            rows.row(i)?.as_oracle()?.eval(n)
        })
        .with_fuel(u64::MAX)
    }
}

impl fmt::Debug for HatPayload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HatPayload::Explicit { rows, .. } => {
                write!(f, "HatPayload::Explicit({} rows + tail)", rows.len())
            }
            HatPayload::Computed(_) => f.write_str("HatPayload::Computed(..)"),
        }
    }
}

type RowCertFn = Arc<dyn Fn(u64) -> Result<Certificate> + Send + Sync>;

/// Generator-supplied witness data making an otherwise undecidable answer
/// checkable at finite budget.
///
/// `FirstZero`/`NoZero` track the first *significant* index of an oracle:
/// for LPO inputs the first zero of a positive-by-default function, for LLPO
/// inputs the first nonzero of a zero-by-default one.
#[derive(Clone)]
pub enum Certificate {
    FirstZero(u64),
    NoZero,
    /// Generator of an infinite witness: a path through a tree, a ray in a
    /// graph, or an infinite independent set, depending on the problem.
    PathGen(OracleFn),
    /// The tree has no node at depth `d` (hence is finite).
    Finite(u64),
    KnownAnswer(u64),
    KnownColoring(OracleFn),
    /// Pattern vertex `i` maps to host vertex `map[i]`.
    EmbedsAt(Vec<u64>),
    /// The pattern never embeds; the bound records how far the generator
    /// justified the claim.
    NoEmbedding(u64),
    HatOf {
        rows: Vec<Certificate>,
        tail: Option<Box<Certificate>>,
    },
    /// Per-row certificates produced on demand.
    HatGen(RowCertFn),
}

impl Certificate {
    pub fn hat_gen<F>(f: F) -> Self
    where
        F: Fn(u64) -> Result<Certificate> + Send + Sync + 'static,
    {
        Certificate::HatGen(Arc::new(f))
    }

    pub fn hat_row(&self, i: u64) -> Result<Certificate> {
        match self {
            Certificate::HatOf { rows, tail } => rows
                .get(i as usize)
                .cloned()
                .or_else(|| tail.as_deref().cloned())
                .ok_or_else(|| {
                    Error::CertificateMismatch(format!("hat certificate has no row {i}"))
                }),
            Certificate::HatGen(f) => f(i),
            _ => Err(Error::CertificateMismatch(
                "expected a hat certificate".into(),
            )),
        }
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::FirstZero(j) => write!(f, "FirstZero({j})"),
            Certificate::NoZero => f.write_str("NoZero"),
            Certificate::PathGen(g) => write!(f, "PathGen({})", g.digest(8)),
            Certificate::Finite(d) => write!(f, "Finite({d})"),
            Certificate::KnownAnswer(v) => write!(f, "KnownAnswer({v})"),
            Certificate::KnownColoring(c) => write!(f, "KnownColoring({})", c.digest(8)),
            Certificate::EmbedsAt(m) => write!(f, "EmbedsAt({m:?})"),
            Certificate::NoEmbedding(b) => write!(f, "NoEmbedding({b})"),
            Certificate::HatOf { rows, tail } => write!(
                f,
                "HatOf({} rows{})",
                rows.len(),
                if tail.is_some() { " + tail" } else { "" }
            ),
            Certificate::HatGen(_) => f.write_str("HatGen(..)"),
        }
    }
}

/// An oracle-backed input for a problem, optionally carrying its answer
/// certificate.
#[derive(Clone, Debug)]
pub struct Instance {
    pub problem: ProblemId,
    pub payload: Payload,
    pub certificate: Option<Certificate>,
}

impl Instance {
    pub fn new(problem: ProblemId, payload: Payload) -> Self {
        Instance {
            problem,
            payload,
            certificate: None,
        }
    }

    pub fn certified(problem: ProblemId, payload: Payload, certificate: Certificate) -> Self {
        Instance {
            problem,
            payload,
            certificate: Some(certificate),
        }
    }

    pub fn require_certificate(&self) -> Result<&Certificate> {
        self.certificate
            .as_ref()
            .ok_or_else(|| Error::MissingCertificate(self.problem.to_string()))
    }
}

type RowSolutionFn = Arc<dyn Fn(u64) -> Result<Solution> + Send + Sync>;

/// A candidate output.
#[derive(Clone, Debug)]
pub enum Solution {
    Value(u64),
    Fn(OracleFn),
    Hat(HatSolution),
}

impl Solution {
    pub fn as_value(&self) -> Result<u64> {
        match self {
            Solution::Value(v) => Ok(*v),
            _ => Err(Error::SolutionShape("expected a numeric solution".into())),
        }
    }

    pub fn as_fn(&self) -> Result<&OracleFn> {
        match self {
            Solution::Fn(f) => Ok(f),
            _ => Err(Error::SolutionShape("expected a function solution".into())),
        }
    }

    pub fn as_hat(&self) -> Result<&HatSolution> {
        match self {
            Solution::Hat(h) => Ok(h),
            _ => Err(Error::SolutionShape("expected a hat solution".into())),
        }
    }

    pub fn digest(&self) -> String {
        match self {
            Solution::Value(v) => v.to_string(),
            Solution::Fn(f) => f.digest(8),
            Solution::Hat(h) => match h {
                HatSolution::Explicit { rows, .. } => format!("hat[{} rows]", rows.len()),
                HatSolution::Computed(_) => "hat[computed]".into(),
            },
        }
    }
}

/// Row-indexed solution of a hat problem.
#[derive(Clone)]
pub enum HatSolution {
    Explicit {
        rows: Vec<Solution>,
        tail: Option<Box<Solution>>,
    },
    Computed(RowSolutionFn),
}

impl HatSolution {
    pub fn computed<F>(f: F) -> Self
    where
        F: Fn(u64) -> Result<Solution> + Send + Sync + 'static,
    {
        HatSolution::Computed(Arc::new(f))
    }

    pub fn row(&self, i: u64) -> Result<Solution> {
        match self {
            HatSolution::Explicit { rows, tail } => rows
                .get(i as usize)
                .cloned()
                .or_else(|| tail.as_deref().cloned())
                .ok_or_else(|| Error::SolutionShape(format!("hat solution has no row {i}"))),
            HatSolution::Computed(f) => f(i),
        }
    }
}

impl fmt::Debug for HatSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HatSolution::Explicit { rows, .. } => {
                write!(f, "HatSolution::Explicit({} rows)", rows.len())
            }
            HatSolution::Computed(_) => f.write_str("HatSolution::Computed(..)"),
        }
    }
}

/// Evaluation budgets for checking and solving.
///
/// Defaults follow the harness conventions: 4096 oracle evaluations per
/// instance, tree depth 16, coloring truncation 40 vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Max oracle index scanned when discharging searches.
    pub fuel: u64,
    /// Depth to which tree paths and infinite witnesses are checked.
    pub depth: u64,
    /// Vertex bound for coloring truncation checks.
    pub coloring_bound: u64,
    /// Vertex/label window scanned in universes and embedding searches.
    pub scan_bound: u64,
    /// Number of hat rows checked.
    pub hat_rows: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            fuel: 4096,
            depth: 16,
            coloring_bound: 40,
            scan_bound: 64,
            hat_rows: 8,
        }
    }
}

impl Budget {
    /// Budget derived from a single fuel figure, scaling the secondary
    /// bounds proportionally (used by the CLI `--budget` flag).
    pub fn from_fuel(fuel: u64) -> Self {
        let d = Budget::default();
        let scale = |x: u64| ((x as u128 * fuel as u128) / d.fuel as u128).max(2) as u64;
        Budget {
            fuel,
            depth: scale(d.depth).min(64),
            coloring_bound: scale(d.coloring_bound).min(64),
            scan_bound: scale(d.scan_bound).min(256),
            hat_rows: scale(d.hat_rows).min(16),
        }
    }
}
