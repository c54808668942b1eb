//! Maximal distance-3⁺ sets and the A/B/C partition they induce.
//!
//! A distance-3⁺ set has pairwise distance at least 3 between its members;
//! maximality means every other vertex is within distance 2 of a member.
//! Around such a set `A`, the rest of the graph splits into `B` (vertices
//! with a neighbor in `A`) and `C` (everything else), and maximality gives
//! the two structural facts this module checks:
//!
//! * every `B` vertex has exactly one neighbor in `A`, and
//! * every `C` vertex has no neighbor in `A` but at least one in `B`.
//!
//! Together with `A` being independent, those checks are not merely
//! necessary: a set passing all three is exactly a maximal distance-3⁺
//! set, so [`partition_abc`] fully re-verifies its precondition as a side
//! effect of validating the partition.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbcPartition {
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionError {
    /// A member id is not a vertex of the graph.
    InvalidVertex { vertex: Vertex },
    /// Two members of the supposed distance-3⁺ set are adjacent.
    AdjacentMembers { u: Vertex, v: Vertex },
    /// A vertex bordering the set sees more than one member.
    ExtraAnchor { vertex: Vertex, anchors: usize },
    /// A vertex two steps out has no bridge back to the set.
    Unreachable { vertex: Vertex },
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::InvalidVertex { vertex } => {
                write!(f, "set member {vertex} is not a vertex of the graph")
            }
            PartitionError::AdjacentMembers { u, v } => {
                write!(f, "set members {u} and {v} are adjacent")
            }
            PartitionError::ExtraAnchor { vertex, anchors } => {
                write!(
                    f,
                    "vertex {vertex} has {anchors} neighbors in the set, expected exactly 1"
                )
            }
            PartitionError::Unreachable { vertex } => {
                write!(
                    f,
                    "vertex {vertex} has no neighbor in the set or its border"
                )
            }
        }
    }
}

impl core::error::Error for PartitionError {}

/// Greedily builds a maximal distance-3⁺ set: scan vertices in ascending
/// order, admit any vertex not yet within distance 2 of an admitted one.
/// Vertices unreachable from the set (isolated ones included) always end
/// up admitted. Deterministic for a fixed graph.
pub fn maximal_distance3_set(g: &Graph) -> VertexSet {
    let n = g.vertex_count();
    let mut near = vec![false; n];
    let mut picked = Vec::new();
    for v in 0..n as Vertex {
        if near[v as usize] {
            continue;
        }
        picked.push(v);
        near[v as usize] = true;
        for &u in g.neighbors(v) {
            near[u as usize] = true;
            for &w in g.neighbors(u) {
                near[w as usize] = true;
            }
        }
    }
    VertexSet::from_sorted(picked)
}

/// Splits `V` into the set `a`, its border `b` (neighbors of `a`), and the
/// remainder `c`, verifying on the way that `a` really is a maximal
/// distance-3⁺ set (see the module notes). The offending vertex is named
/// when verification fails.
pub fn partition_abc(g: &Graph, a: &VertexSet) -> Result<AbcPartition, PartitionError> {
    let n = g.vertex_count();
    if let Some(v) = a.iter().find(|&v| v as usize >= n) {
        return Err(PartitionError::InvalidVertex { vertex: v });
    }

    const ROLE_A: u8 = 0;
    const ROLE_B: u8 = 1;
    const ROLE_C: u8 = 2;
    let mut role = vec![ROLE_C; n];
    for v in a.iter() {
        role[v as usize] = ROLE_A;
    }
    for v in a.iter() {
        for &u in g.neighbors(v) {
            if role[u as usize] == ROLE_A {
                return Err(PartitionError::AdjacentMembers {
                    u: v.min(u),
                    v: v.max(u),
                });
            }
            role[u as usize] = ROLE_B;
        }
    }

    for v in 0..n as Vertex {
        match role[v as usize] {
            ROLE_B => {
                let anchors = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| role[u as usize] == ROLE_A)
                    .count();
                if anchors != 1 {
                    return Err(PartitionError::ExtraAnchor { vertex: v, anchors });
                }
            }
            ROLE_C => {
                let bridged = g.neighbors(v).iter().any(|&u| role[u as usize] == ROLE_B);
                if !bridged {
                    return Err(PartitionError::Unreachable { vertex: v });
                }
            }
            _ => {}
        }
    }

    let collect = |want: u8| {
        VertexSet::from_sorted(
            (0..n as Vertex)
                .filter(|&v| role[v as usize] == want)
                .collect(),
        )
    };
    Ok(AbcPartition {
        a: collect(ROLE_A),
        b: collect(ROLE_B),
        c: collect(ROLE_C),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GraphKind};

    fn path(n: usize) -> Graph {
        generate(&GraphKind::Path { n })
    }

    #[test]
    fn greedy_on_path_five() {
        let a = maximal_distance3_set(&path(5));
        assert_eq!(a.as_slice(), &[0, 3]);
    }

    #[test]
    fn greedy_on_path_seven() {
        let a = maximal_distance3_set(&path(7));
        assert_eq!(a.as_slice(), &[0, 3, 6]);
    }

    #[test]
    fn greedy_on_complete_five() {
        let a = maximal_distance3_set(&generate(&GraphKind::Complete { n: 5 }));
        assert_eq!(a.as_slice(), &[0]);
    }

    #[test]
    fn greedy_takes_all_isolated_vertices() {
        let a = maximal_distance3_set(&Graph::edgeless(4));
        assert_eq!(a.as_slice(), &[0, 1, 2, 3]);
    }

    #[test]
    fn greedy_on_empty_graph() {
        assert!(maximal_distance3_set(&Graph::edgeless(0)).is_empty());
    }

    #[test]
    fn partition_path_five() {
        let g = path(5);
        let a = maximal_distance3_set(&g);
        let part = partition_abc(&g, &a).unwrap();
        assert_eq!(part.a.as_slice(), &[0, 3]);
        assert_eq!(part.b.as_slice(), &[1, 2, 4]);
        assert!(part.c.is_empty());
    }

    #[test]
    fn partition_leaves_distant_vertices_in_c() {
        // Path on 6 vertices with only vertex 0 in the set is not maximal:
        // vertex 3 sits at distance 3.
        let g = path(6);
        let a = VertexSet::from_sorted(alloc::vec![0]);
        assert_eq!(
            partition_abc(&g, &a),
            Err(PartitionError::Unreachable { vertex: 3 })
        );
    }

    #[test]
    fn partition_rejects_close_members() {
        // Vertices 0 and 2 of a path share the neighbor 1.
        let g = path(5);
        let a = VertexSet::from_sorted(alloc::vec![0, 2]);
        assert_eq!(
            partition_abc(&g, &a),
            Err(PartitionError::ExtraAnchor {
                vertex: 1,
                anchors: 2
            })
        );
    }

    #[test]
    fn partition_rejects_adjacent_members() {
        let g = path(5);
        let a = VertexSet::from_sorted(alloc::vec![0, 1]);
        assert_eq!(
            partition_abc(&g, &a),
            Err(PartitionError::AdjacentMembers { u: 0, v: 1 })
        );
    }

    #[test]
    fn partition_rejects_foreign_vertex() {
        let g = path(3);
        let a = VertexSet::from_sorted(alloc::vec![9]);
        assert_eq!(
            partition_abc(&g, &a),
            Err(PartitionError::InvalidVertex { vertex: 9 })
        );
    }

    #[test]
    fn partition_covers_star() {
        let g = generate(&GraphKind::Star { leaves: 5 });
        let a = maximal_distance3_set(&g);
        let part = partition_abc(&g, &a).unwrap();
        assert_eq!(part.a.as_slice(), &[0]);
        assert_eq!(part.b.len(), 5);
        assert!(part.c.is_empty());
    }

    #[test]
    fn partition_with_nonempty_c() {
        // Path on 6: greedy picks {0, 3}; vertex 5 is two steps from 3.
        let g = path(6);
        let a = maximal_distance3_set(&g);
        assert_eq!(a.as_slice(), &[0, 3]);
        let part = partition_abc(&g, &a).unwrap();
        assert_eq!(part.b.as_slice(), &[1, 2, 4]);
        assert_eq!(part.c.as_slice(), &[5]);
    }

    #[test]
    fn greedy_output_always_partitions_cleanly() {
        for seed in 0..30u64 {
            let g = generate(&GraphKind::Gnp {
                n: 60,
                p: 0.08,
                seed,
            });
            let a = maximal_distance3_set(&g);
            let part = partition_abc(&g, &a).unwrap();
            assert_eq!(part.a.len() + part.b.len() + part.c.len(), g.vertex_count());
        }
    }
}
