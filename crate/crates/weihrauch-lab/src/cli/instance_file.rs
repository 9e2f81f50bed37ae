//! Self-describing JSON documents for instances: finite descriptors only,
//! unknown fields rejected, and every file written by the tool re-parses to
//! an equal instance.

use serde::{Deserialize, Serialize};

use crate::encodings::{Branching, FiniteGraph, GraphCode, TreeCode, VertexUniverse};
use crate::error::{Error, Result};
use crate::oracle::OracleRepr;
use crate::problems::{Certificate, HatPayload, Instance, Payload, ProblemId};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub problem: ProblemRepr,
    pub payload: PayloadRepr,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateRepr>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum ProblemRepr {
    Lpo,
    Llpo,
    Lg { k: u64 },
    Gc { k: u64 },
    Tc { k: u64 },
    Wkl,
    Wkln { n: u64 },
    Wf,
    S,
    SL,
    SVecL,
    Sf { pattern: FiniteGraph },
    Rc,
    D,
    Hat { base: Box<ProblemRepr> },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PayloadRepr {
    Oracle {
        oracle: OracleRepr,
    },
    Graph {
        graph: GraphRepr,
    },
    Tree {
        tree: TreeRepr,
    },
    GraphPair {
        g: GraphRepr,
        h: GraphRepr,
    },
    Hat {
        rows: Vec<PayloadRepr>,
        tail: Box<PayloadRepr>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GraphRepr {
    pub edge_fn: OracleRepr,
    /// Strictly increasing vertex enumeration; absent means all of ℕ.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub universe: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct TreeRepr {
    pub branching: Branching,
    pub node_fn: OracleRepr,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CertificateRepr {
    FirstZero {
        index: u64,
    },
    NoZero,
    PathGen {
        gen: OracleRepr,
    },
    Finite {
        depth: u64,
    },
    KnownAnswer {
        value: u64,
    },
    KnownColoring {
        coloring: OracleRepr,
    },
    EmbedsAt {
        map: Vec<u64>,
    },
    NoEmbedding {
        bound: u64,
    },
    Hat {
        rows: Vec<CertificateRepr>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tail: Option<Box<CertificateRepr>>,
    },
}

impl ProblemRepr {
    pub fn to_problem(&self) -> ProblemId {
        match self {
            ProblemRepr::Lpo => ProblemId::Lpo,
            ProblemRepr::Llpo => ProblemId::Llpo,
            ProblemRepr::Lg { k } => ProblemId::Lg(*k),
            ProblemRepr::Gc { k } => ProblemId::Gc(*k),
            ProblemRepr::Tc { k } => ProblemId::Tc(*k),
            ProblemRepr::Wkl => ProblemId::Wkl,
            ProblemRepr::Wkln { n } => ProblemId::Wkln(*n),
            ProblemRepr::Wf => ProblemId::Wf,
            ProblemRepr::S => ProblemId::S,
            ProblemRepr::SL => ProblemId::SL,
            ProblemRepr::SVecL => ProblemId::SVecL,
            ProblemRepr::Sf { pattern } => ProblemId::Sf(pattern.clone()),
            ProblemRepr::Rc => ProblemId::Rc,
            ProblemRepr::D => ProblemId::D,
            ProblemRepr::Hat { base } => ProblemId::hat(base.to_problem()),
        }
    }

    pub fn from_problem(p: &ProblemId) -> ProblemRepr {
        match p {
            ProblemId::Lpo => ProblemRepr::Lpo,
            ProblemId::Llpo => ProblemRepr::Llpo,
            ProblemId::Lg(k) => ProblemRepr::Lg { k: *k },
            ProblemId::Gc(k) => ProblemRepr::Gc { k: *k },
            ProblemId::Tc(k) => ProblemRepr::Tc { k: *k },
            ProblemId::Wkl => ProblemRepr::Wkl,
            ProblemId::Wkln(n) => ProblemRepr::Wkln { n: *n },
            ProblemId::Wf => ProblemRepr::Wf,
            ProblemId::S => ProblemRepr::S,
            ProblemId::SL => ProblemRepr::SL,
            ProblemId::SVecL => ProblemRepr::SVecL,
            ProblemId::Sf(pattern) => ProblemRepr::Sf {
                pattern: pattern.clone(),
            },
            ProblemId::Rc => ProblemRepr::Rc,
            ProblemId::D => ProblemRepr::D,
            ProblemId::Hat(base) => ProblemRepr::Hat {
                base: Box::new(ProblemRepr::from_problem(base)),
            },
        }
    }
}

impl GraphRepr {
    pub fn to_graph(&self) -> Result<GraphCode> {
        let mut g = GraphCode::new(self.edge_fn.to_oracle());
        if let Some(list) = &self.universe {
            if !list.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::Precondition(
                    "graph universe must be strictly increasing".into(),
                ));
            }
            g = g.with_universe(VertexUniverse::Enumerated(list.clone()));
        }
        Ok(g)
    }

    pub fn from_graph(g: &GraphCode) -> Result<GraphRepr> {
        let universe = match &g.vertex_universe {
            VertexUniverse::All => None,
            VertexUniverse::Enumerated(list) => Some(list.clone()),
            VertexUniverse::Computed(_) => {
                return Err(Error::Unsupported(
                    "computed vertex universes have no serializable form".into(),
                ))
            }
        };
        Ok(GraphRepr {
            edge_fn: OracleRepr::from_oracle(&g.edge_fn)?,
            universe,
        })
    }
}

impl PayloadRepr {
    pub fn to_payload(&self) -> Result<Payload> {
        Ok(match self {
            PayloadRepr::Oracle { oracle } => Payload::Oracle(oracle.to_oracle()),
            PayloadRepr::Graph { graph } => Payload::Graph(graph.to_graph()?),
            PayloadRepr::Tree { tree } => {
                Payload::Tree(TreeCode::new(tree.branching, tree.node_fn.to_oracle()))
            }
            PayloadRepr::GraphPair { g, h } => Payload::GraphPair(g.to_graph()?, h.to_graph()?),
            PayloadRepr::Hat { rows, tail } => {
                let rows: Vec<Payload> =
                    rows.iter().map(|r| r.to_payload()).collect::<Result<_>>()?;
                Payload::Hat(HatPayload::Explicit {
                    rows,
                    tail: Box::new(tail.to_payload()?),
                })
            }
        })
    }

    pub fn from_payload(p: &Payload) -> Result<PayloadRepr> {
        Ok(match p {
            Payload::Oracle(f) => PayloadRepr::Oracle {
                oracle: OracleRepr::from_oracle(f)?,
            },
            Payload::Graph(g) => PayloadRepr::Graph {
                graph: GraphRepr::from_graph(g)?,
            },
            Payload::Tree(t) => PayloadRepr::Tree {
                tree: TreeRepr {
                    branching: t.branching,
                    node_fn: OracleRepr::from_oracle(&t.node_fn)?,
                },
            },
            Payload::GraphPair(g, h) => PayloadRepr::GraphPair {
                g: GraphRepr::from_graph(g)?,
                h: GraphRepr::from_graph(h)?,
            },
            Payload::Hat(HatPayload::Explicit { rows, tail }) => PayloadRepr::Hat {
                rows: rows
                    .iter()
                    .map(PayloadRepr::from_payload)
                    .collect::<Result<_>>()?,
                tail: Box::new(PayloadRepr::from_payload(tail)?),
            },
            Payload::Hat(HatPayload::Computed(_)) => {
                return Err(Error::Unsupported(
                    "computed hat payloads have no serializable form".into(),
                ))
            }
        })
    }
}

impl CertificateRepr {
    pub fn to_certificate(&self) -> Result<Certificate> {
        Ok(match self {
            CertificateRepr::FirstZero { index } => Certificate::FirstZero(*index),
            CertificateRepr::NoZero => Certificate::NoZero,
            CertificateRepr::PathGen { gen } => Certificate::PathGen(gen.to_oracle()),
            CertificateRepr::Finite { depth } => Certificate::Finite(*depth),
            CertificateRepr::KnownAnswer { value } => Certificate::KnownAnswer(*value),
            CertificateRepr::KnownColoring { coloring } => {
                Certificate::KnownColoring(coloring.to_oracle())
            }
            CertificateRepr::EmbedsAt { map } => Certificate::EmbedsAt(map.clone()),
            CertificateRepr::NoEmbedding { bound } => Certificate::NoEmbedding(*bound),
            CertificateRepr::Hat { rows, tail } => Certificate::HatOf {
                rows: rows
                    .iter()
                    .map(|r| r.to_certificate())
                    .collect::<Result<_>>()?,
                tail: match tail {
                    Some(t) => Some(Box::new(t.to_certificate()?)),
                    None => None,
                },
            },
        })
    }

    pub fn from_certificate(c: &Certificate) -> Result<CertificateRepr> {
        Ok(match c {
            Certificate::FirstZero(index) => CertificateRepr::FirstZero { index: *index },
            Certificate::NoZero => CertificateRepr::NoZero,
            Certificate::PathGen(gen) => CertificateRepr::PathGen {
                gen: OracleRepr::from_oracle(gen)?,
            },
            Certificate::Finite(depth) => CertificateRepr::Finite { depth: *depth },
            Certificate::KnownAnswer(value) => CertificateRepr::KnownAnswer { value: *value },
            Certificate::KnownColoring(coloring) => CertificateRepr::KnownColoring {
                coloring: OracleRepr::from_oracle(coloring)?,
            },
            Certificate::EmbedsAt(map) => CertificateRepr::EmbedsAt { map: map.clone() },
            Certificate::NoEmbedding(bound) => CertificateRepr::NoEmbedding { bound: *bound },
            Certificate::HatOf { rows, tail } => CertificateRepr::Hat {
                rows: rows
                    .iter()
                    .map(CertificateRepr::from_certificate)
                    .collect::<Result<_>>()?,
                tail: match tail {
                    Some(t) => Some(Box::new(CertificateRepr::from_certificate(t)?)),
                    None => None,
                },
            },
            Certificate::HatGen(_) => {
                return Err(Error::Unsupported(
                    "computed hat certificates have no serializable form".into(),
                ))
            }
        })
    }
}

impl InstanceFile {
    pub fn to_instance(&self) -> Result<Instance> {
        let problem = self.problem.to_problem();
        problem.validate()?;
        Ok(Instance {
            problem,
            payload: self.payload.to_payload()?,
            certificate: match &self.certificate {
                Some(c) => Some(c.to_certificate()?),
                None => None,
            },
        })
    }

    pub fn from_instance(inst: &Instance) -> Result<InstanceFile> {
        Ok(InstanceFile {
            problem: ProblemRepr::from_problem(&inst.problem),
            payload: PayloadRepr::from_payload(&inst.payload)?,
            certificate: match &inst.certificate {
                Some(c) => Some(CertificateRepr::from_certificate(c)?),
                None => None,
            },
        })
    }

    pub fn parse(text: &str) -> Result<InstanceFile> {
        serde_json::from_str(text).map_err(|e| Error::Precondition(format!("instance file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance files serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::OracleFn;

    fn lpo_file() -> InstanceFile {
        InstanceFile::from_instance(&Instance::certified(
            ProblemId::Lpo,
            Payload::Oracle(OracleFn::finite_support(vec![(3, 0)], 1)),
            Certificate::FirstZero(3),
        ))
        .unwrap()
    }

    #[test]
    fn round_trip_through_json() {
        let file = lpo_file();
        let text = file.to_json();
        let parsed = InstanceFile::parse(&text).unwrap();
        assert_eq!(file, parsed);
        let inst = parsed.to_instance().unwrap();
        assert_eq!(inst.problem, ProblemId::Lpo);
        assert_eq!(inst.payload.as_oracle().unwrap().eval(3).unwrap(), 0);
    }

    #[test]
    fn unknown_fields_rejected() {
        let mut v: serde_json::Value = serde_json::from_str(&lpo_file().to_json()).unwrap();
        v["surprise"] = serde_json::json!(1);
        assert!(InstanceFile::parse(&v.to_string()).is_err());
    }

    #[test]
    fn hat_files_round_trip() {
        let rows: Vec<Instance> = (0..3)
            .map(|j| {
                Instance::certified(
                    ProblemId::Llpo,
                    Payload::Oracle(OracleFn::finite_support(vec![(j, 1)], 0)),
                    Certificate::FirstZero(j),
                )
            })
            .collect();
        let packed = crate::problems::hat_pack(&rows).unwrap();
        let file = InstanceFile::from_instance(&packed).unwrap();
        let again = InstanceFile::parse(&file.to_json())
            .unwrap()
            .to_instance()
            .unwrap();
        assert_eq!(again.problem, ProblemId::hat(ProblemId::Llpo));
        let row1 = crate::problems::hat_row(&again, 1).unwrap();
        assert_eq!(row1.payload.as_oracle().unwrap().eval(1).unwrap(), 1);
    }
}
