//! Small oriented graphs used as forbidden or counted patterns.

use crate::embed::{self, Plan};
use crate::error::{Error, Result};
use crate::graph::{make_transitive_tournament, OrientedGraph};

/// Largest pattern order accepted.
pub const MAX_PATTERN_ORDER: usize = 10;

/// Structural families that have dedicated fast counters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternKind {
    /// The transitive tournament on `r` vertices.
    Transitive(usize),
    /// `sources` vertices each sending an arc to every one of `sinks` vertices.
    CompleteBipartite {
        sources: usize,
        sinks: usize,
    },
    General,
}

#[derive(Clone, Debug)]
pub struct Pattern {
    graph: OrientedGraph,
    automorphism_count: u64,
    is_antidirected: bool,
    kind: PatternKind,
    count_plan: Plan,
    /// One plan per pattern arc, with that arc's endpoints placed first.
    arc_plans: Vec<Plan>,
}

impl Pattern {
    pub fn new(graph: OrientedGraph) -> Result<Self> {
        let h = graph.order();
        if h > MAX_PATTERN_ORDER {
            return Err(Error::Capacity {
                what: "pattern order",
                value: h,
                limit: MAX_PATTERN_ORDER,
            });
        }
        let count_plan = Plan::connected_first(&graph, &[most_connected(&graph)]);
        let automorphisms = embed::count_embeddings(&graph, &count_plan);
        let arc_plans = graph
            .arcs()
            .map(|(a, b)| Plan::connected_first(&graph, &[a, b]))
            .collect();
        Ok(Pattern {
            is_antidirected: graph.is_antidirected(),
            kind: classify(&graph),
            automorphism_count: automorphisms as u64,
            graph,
            count_plan,
            arc_plans,
        })
    }

    pub fn transitive(r: usize) -> Result<Self> {
        Pattern::new(make_transitive_tournament(r)?)
    }

    /// A single arc, i.e. `K_{1,1}`.
    pub fn single_arc() -> Self {
        Pattern::new(OrientedGraph::from_arcs(2, &[(0, 1)]).expect("valid arc"))
            .expect("order 2 fits")
    }

    pub fn graph(&self) -> &OrientedGraph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn arc_count(&self) -> usize {
        self.graph.arc_count()
    }

    pub fn automorphism_count(&self) -> u64 {
        self.automorphism_count
    }

    pub fn is_antidirected(&self) -> bool {
        self.is_antidirected
    }

    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    pub(crate) fn count_plan(&self) -> &Plan {
        &self.count_plan
    }

    /// Does `g` contain a copy of this pattern that uses the arc `u -> v`?
    pub fn has_copy_through_arc(&self, g: &OrientedGraph, u: usize, v: usize) -> bool {
        self.arc_plans
            .iter()
            .any(|plan| embed::embedding_extends(g, plan, &[u, v]))
    }

    pub fn occurs_in(&self, g: &OrientedGraph) -> bool {
        embed::embedding_extends(g, &self.count_plan, &[])
    }
}

/// The antidirected complete bipartite pattern with `s` sources and `t` sinks.
pub fn make_antidirected_complete_bipartite(s: usize, t: usize) -> Result<Pattern> {
    if s == 0 || t == 0 {
        return Err(Error::invalid("both sides of K_{s,t} must be non-empty"));
    }
    if s + t > MAX_PATTERN_ORDER {
        return Err(Error::Capacity {
            what: "pattern order",
            value: s + t,
            limit: MAX_PATTERN_ORDER,
        });
    }
    let arcs: Vec<_> = (0..s)
        .flat_map(|a| (s..s + t).map(move |b| (a, b)))
        .collect();
    Pattern::new(OrientedGraph::from_arcs(s + t, &arcs)?)
}

fn most_connected(g: &OrientedGraph) -> usize {
    (0..g.order())
        .max_by_key(|&v| (g.total_degree(v), std::cmp::Reverse(v)))
        .unwrap_or(0)
}

fn classify(g: &OrientedGraph) -> PatternKind {
    if g.is_tournament() && g.is_acyclic() {
        return PatternKind::Transitive(g.order());
    }
    if g.arc_count() > 0 && g.is_antidirected() {
        let sources = (0..g.order()).filter(|&v| g.out_degree(v) > 0).count();
        let sinks = (0..g.order()).filter(|&v| g.in_degree(v) > 0).count();
        if sources + sinks == g.order() && sources * sinks == g.arc_count() {
            return PatternKind::CompleteBipartite { sources, sinks };
        }
    }
    PatternKind::General
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_directed_cycle;

    /// Counts arc-preserving bijections by trying every permutation.
    fn brute_force_automorphisms(g: &OrientedGraph) -> u64 {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        permutations(g.order())
            .into_iter()
            .filter(|p| g.arcs().all(|(u, v)| g.has_arc(p[u], p[v])))
            .count() as u64
    }

    #[test]
    fn kst_examples() {
        let k11 = make_antidirected_complete_bipartite(1, 1).unwrap();
        assert_eq!(k11.arc_count(), 1);
        assert_eq!(k11.automorphism_count(), 1);

        let k22 = make_antidirected_complete_bipartite(2, 2).unwrap();
        assert_eq!(k22.arc_count(), 4);
        assert!(k22.is_antidirected());
        assert_eq!(brute_force_automorphisms(k22.graph()), 4);
        assert_eq!(k22.automorphism_count(), 4);

        let k12 = make_antidirected_complete_bipartite(1, 2).unwrap();
        assert_eq!(k12.graph().out_degree(0), 2);
        assert_eq!(
            k12.kind(),
            PatternKind::CompleteBipartite {
                sources: 1,
                sinks: 2
            }
        );

        assert!(matches!(
            make_antidirected_complete_bipartite(5, 6),
            Err(Error::Capacity { .. })
        ));
        assert!(make_antidirected_complete_bipartite(0, 2).is_err());
    }

    #[test]
    fn automorphisms_match_brute_force() {
        let cases = [
            make_directed_cycle(3).unwrap(),
            make_directed_cycle(5).unwrap(),
            make_transitive_tournament(4).unwrap(),
            make_antidirected_complete_bipartite(2, 3)
                .unwrap()
                .graph()
                .clone(),
            OrientedGraph::from_arcs(5, &[(0, 1), (2, 1), (3, 4)]).unwrap(),
            OrientedGraph::empty(4).unwrap(),
        ];
        for g in cases {
            let p = Pattern::new(g.clone()).unwrap();
            assert_eq!(
                p.automorphism_count(),
                brute_force_automorphisms(&g),
                "{g:?}"
            );
            let h_factorial: u64 = (1..=g.order() as u64).product();
            assert_eq!(h_factorial % p.automorphism_count(), 0);
        }
    }

    #[test]
    fn kinds() {
        assert_eq!(
            Pattern::transitive(4).unwrap().kind(),
            PatternKind::Transitive(4)
        );
        let c3 = Pattern::new(make_directed_cycle(3).unwrap()).unwrap();
        assert_eq!(c3.kind(), PatternKind::General);
        assert!(!c3.is_antidirected());
        assert_eq!(
            Pattern::single_arc().kind(),
            PatternKind::Transitive(2),
            "a single arc is TT_2"
        );
        assert!(Pattern::new(OrientedGraph::empty(11).unwrap()).is_err());
    }

    #[test]
    fn copy_through_arc() {
        let tt3 = Pattern::transitive(3).unwrap();
        let g = make_transitive_tournament(3).unwrap();
        assert!(tt3.has_copy_through_arc(&g, 0, 2));
        let c3 = make_directed_cycle(3).unwrap();
        assert!(!tt3.has_copy_through_arc(&c3, 0, 1));
        assert!(tt3.occurs_in(&g));
        assert!(!tt3.occurs_in(&c3));
    }
}
