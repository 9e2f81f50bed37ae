//! Fixed graphs used by the subgraph problems: the infinite ray `L` and the
//! tagged rays `L_n`.

use crate::encodings::{FiniteGraph, GraphCode};
use crate::oracle::OracleFn;

use crate::encodings::pairing::pair_decode;

/// The infinite ray `L`: vertices ℕ, edges `(v_i, v_{i+1})`.
pub fn linear_graph() -> GraphCode {
    GraphCode::new(OracleFn::computed(|code| {
        let (a, b) = pair_decode(code);
        Ok((b == a + 1) as u64)
    }))
}

/// The tagged ray `L_n`: the ray `L` with an `(n+3)`-cycle attached to its
/// first vertex.
///
/// Vertex layout: `0..=n+2` is the tag cycle (vertex 0 doubles as the first
/// ray vertex), and the ray continues `0, n+3, n+4, ...`.
pub fn tagged_linear(n: u64) -> GraphCode {
    GraphCode::new(OracleFn::computed(move |code| {
        let (a, b) = pair_decode(code);
        Ok(tagged_linear_edge(n, a, b) as u64)
    }))
}

fn tagged_linear_edge(n: u64, a: u64, b: u64) -> bool {
    let last_cycle = n + 2;
    // Tag cycle 0..=n+2.
    if b <= last_cycle {
        return b == a + 1 || (a == 0 && b == last_cycle);
    }
    // Ray: 0 - (n+3) - (n+4) - ...
    if a == 0 {
        b == last_cycle + 1
    } else {
        a > last_cycle && b == a + 1
    }
}

/// Finite truncation of `L_n` with the tag cycle and `ray_len` ray edges
/// past vertex 0. Used as an embedding pattern at desk scale.
pub fn tagged_linear_finite(n: u64, ray_len: u64) -> FiniteGraph {
    let last_cycle = n + 2;
    let num_vertices = last_cycle + 1 + ray_len;
    let mut edges = Vec::new();
    for v in 1..=last_cycle {
        edges.push((v - 1, v));
    }
    edges.push((0, last_cycle));
    if ray_len > 0 {
        edges.push((0, last_cycle + 1));
        for v in last_cycle + 2..num_vertices {
            edges.push((v - 1, v));
        }
    }
    FiniteGraph::new(num_vertices, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encodings::{embedding_exists, finite_subgraph, FiniteGraph};

    #[test]
    fn ray_edges() {
        let l = linear_graph();
        assert!(l.edge(2, 3).unwrap());
        assert!(l.edge(3, 2).unwrap());
        assert!(!l.edge(2, 4).unwrap());
    }

    #[test]
    fn l0_has_a_triangle_at_the_first_vertex() {
        let l0 = tagged_linear(0);
        assert!(l0.edge(0, 1).unwrap());
        assert!(l0.edge(1, 2).unwrap());
        assert!(l0.edge(0, 2).unwrap());
        let trunc = finite_subgraph(&l0, 8).unwrap();
        assert!(embedding_exists(&FiniteGraph::triangle(), &trunc));
    }

    #[test]
    fn l1_has_a_4_cycle_and_no_triangle() {
        let l1 = tagged_linear(1);
        let trunc = finite_subgraph(&l1, 10).unwrap();
        assert!(embedding_exists(&FiniteGraph::cycle(4), &trunc));
        assert!(!embedding_exists(&FiniteGraph::triangle(), &trunc));
    }

    #[test]
    fn tagged_ray_continues_past_the_tag() {
        let l2 = tagged_linear(2);
        // Cycle on 0..=4, ray 0-5-6-7-...
        assert!(l2.edge(0, 4).unwrap());
        assert!(l2.edge(0, 5).unwrap());
        assert!(l2.edge(5, 6).unwrap());
        assert!(!l2.edge(4, 5).unwrap());
        assert!(!l2.edge(0, 6).unwrap());
    }

    #[test]
    fn finite_truncation_matches_code() {
        for n in 0..3u64 {
            let fin = tagged_linear_finite(n, 4);
            let code = tagged_linear(n);
            for b in 0..fin.num_vertices() {
                for a in 0..b {
                    assert_eq!(
                        fin.has_edge(a, b),
                        code.edge(a, b).unwrap(),
                        "L_{n} edge ({a},{b})"
                    );
                }
            }
        }
    }
}
