//! The defining graph of the pure subgroup: vertices are the pair generators,
//! with an edge exactly when the index sets are disjoint. Everything the
//! automorphism analysis needs lives here: links, stars, domination, the
//! components left after deleting a star, chordality, and full enumeration of
//! graph automorphisms.

use crate::error::{Error, Result};
use crate::raag::{all_gens, LambdaGen};
use crate::word::check_strands;

/// Default ceiling for automorphism enumeration; factorial growth above.
pub const AUTS_DEFAULT_LIMIT: usize = 6;

#[derive(Debug, Clone)]
pub struct DefGraph {
    n: usize,
    verts: Vec<LambdaGen>,
    adj: Vec<Vec<bool>>,
}

/// Builds the graph for `n` strands: edge `(i,j)-(k,l)` iff all four indices
/// are distinct.
pub fn defining_graph(n: usize) -> Result<DefGraph> {
    check_strands(n)?;
    let verts = all_gens(n);
    let v = verts.len();
    let mut adj = vec![vec![false; v]; v];
    for a in 0..v {
        for b in 0..v {
            if a != b && verts[a].commutes_with(&verts[b]) {
                adj[a][b] = true;
            }
        }
    }
    Ok(DefGraph { n, verts, adj })
}

impl DefGraph {
    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[LambdaGen] {
        &self.verts
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn adjacent(&self, a: LambdaGen, b: LambdaGen) -> bool {
        self.adj[a.rank(self.n)][b.rank(self.n)]
    }

    pub fn degree(&self, v: LambdaGen) -> usize {
        self.adj[v.rank(self.n)].iter().filter(|&&e| e).count()
    }

    pub fn edge_count(&self) -> usize {
        self.verts.iter().map(|&v| self.degree(v)).sum::<usize>() / 2
    }

    /// Neighbours of `v`.
    pub fn link(&self, v: LambdaGen) -> Vec<LambdaGen> {
        let r = v.rank(self.n);
        self.verts
            .iter()
            .copied()
            .filter(|w| self.adj[r][w.rank(self.n)])
            .collect()
    }

    /// `link(v)` together with `v` itself.
    pub fn star(&self, v: LambdaGen) -> Vec<LambdaGen> {
        let mut out = self.link(v);
        out.push(v);
        out.sort_unstable();
        out
    }

    /// All vertices outside the star of `v`: the generators that fail to
    /// commute with `v`.
    pub fn non_neighbors(&self, v: LambdaGen) -> Vec<LambdaGen> {
        let star = self.star(v);
        self.verts
            .iter()
            .copied()
            .filter(|w| !star.contains(w))
            .collect()
    }

    /// Whether `w` dominates `v`: every neighbour of `v` lies in the star of
    /// `w`. Errors on `v == w`.
    pub fn dominates(&self, v: LambdaGen, w: LambdaGen) -> Result<bool> {
        if v == w {
            return Err(Error::EqualVertices);
        }
        let star_w = self.star(w);
        Ok(self.link(v).iter().all(|u| star_w.contains(u)))
    }

    /// All ordered pairs `(v, w)` with `v != w` and `w` dominating `v`.
    pub fn dominating_pairs(&self) -> Vec<(LambdaGen, LambdaGen)> {
        let mut out = Vec::new();
        for &v in &self.verts {
            for &w in &self.verts {
                if v != w && self.dominates(v, w).unwrap() {
                    out.push((v, w));
                }
            }
        }
        out
    }

    /// Connected components of the subgraph induced on the complement of the
    /// star of `v`, each sorted, ordered by least vertex.
    pub fn components_minus_star(&self, v: LambdaGen) -> Vec<Vec<LambdaGen>> {
        let pool = self.non_neighbors(v);
        let mut remaining: Vec<LambdaGen> = pool.clone();
        let mut comps = Vec::new();
        while let Some(&start) = remaining.first() {
            let mut comp = vec![start];
            remaining.retain(|&w| w != start);
            let mut frontier = vec![start];
            while let Some(u) = frontier.pop() {
                let joined: Vec<LambdaGen> = remaining
                    .iter()
                    .copied()
                    .filter(|&w| self.adjacent(u, w))
                    .collect();
                for w in joined {
                    remaining.retain(|&x| x != w);
                    comp.push(w);
                    frontier.push(w);
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps.sort();
        comps
    }

    /// Whether the complement graph (edges between non-disjoint pairs) is
    /// connected.
    #[allow(clippy::needless_range_loop)]
    pub fn complement_connected(&self) -> bool {
        let v = self.vertex_count();
        if v == 0 {
            return true;
        }
        let mut seen = vec![false; v];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(a) = stack.pop() {
            for b in 0..v {
                if a != b && !self.adj[a][b] && !seen[b] {
                    seen[b] = true;
                    count += 1;
                    stack.push(b);
                }
            }
        }
        count == v
    }

    /// Chordality via maximum-cardinality search: the reverse visit order is
    /// a perfect elimination ordering iff the graph is chordal, which is then
    /// verified directly against the clique condition.
    pub fn is_chordal(&self) -> bool {
        let v = self.vertex_count();
        let mut visited = vec![false; v];
        let mut weight = vec![0usize; v];
        let mut visit_order = Vec::with_capacity(v);
        for _ in 0..v {
            let next = (0..v)
                .filter(|&a| !visited[a])
                .max_by_key(|&a| weight[a])
                .unwrap();
            visited[next] = true;
            visit_order.push(next);
            for b in 0..v {
                if !visited[b] && self.adj[next][b] {
                    weight[b] += 1;
                }
            }
        }
        visit_order.reverse();
        let position: Vec<usize> = {
            let mut pos = vec![0; v];
            for (p, &a) in visit_order.iter().enumerate() {
                pos[a] = p;
            }
            pos
        };
        // perfect elimination: later neighbours of each vertex form a clique
        for (p, &a) in visit_order.iter().enumerate() {
            let later: Vec<usize> = (0..v)
                .filter(|&b| self.adj[a][b] && position[b] > p)
                .collect();
            for x in 0..later.len() {
                for y in x + 1..later.len() {
                    if !self.adj[later[x]][later[y]] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All adjacency-preserving vertex bijections, as image vectors over the
    /// vertex ranks, found by backtracking with degree pruning and adjacency
    /// consistency against the already-assigned prefix.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let v = self.vertex_count();
        let degrees: Vec<usize> = self.verts.iter().map(|&g| self.degree(g)).collect();
        let mut out = Vec::new();
        let mut image = vec![usize::MAX; v];
        let mut used = vec![false; v];
        self.search(0, &degrees, &mut image, &mut used, &mut out);
        out
    }

    #[allow(clippy::needless_range_loop)]
    fn search(
        &self,
        k: usize,
        degrees: &[usize],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let v = self.vertex_count();
        if k == v {
            out.push(image.clone());
            return;
        }
        'cand: for c in 0..v {
            if used[c] || degrees[c] != degrees[k] {
                continue;
            }
            for prev in 0..k {
                if self.adj[k][prev] != self.adj[c][image[prev]] {
                    continue 'cand;
                }
            }
            image[k] = c;
            used[c] = true;
            self.search(k + 1, degrees, image, used, out);
            used[c] = false;
            image[k] = usize::MAX;
        }
    }

    /// DOT rendering with vertices labelled `l_i_j`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph pvt {\n");
        for g in &self.verts {
            s.push_str(&format!("  l_{}_{};\n", g.i, g.j));
        }
        for (a, ga) in self.verts.iter().enumerate() {
            for (b, gb) in self.verts.iter().enumerate() {
                if a < b && self.adj[a][b] {
                    s.push_str(&format!("  l_{}_{} -- l_{}_{};\n", ga.i, ga.j, gb.i, gb.j));
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Enumeration guarded by a size limit; the graph on `n` strands has
/// `n(n-1)/2` vertices and the search is factorial in the worst case.
pub fn graph_automorphisms(n: usize) -> Result<Vec<Vec<usize>>> {
    graph_automorphisms_with_limit(n, AUTS_DEFAULT_LIMIT)
}

pub fn graph_automorphisms_with_limit(n: usize, limit: usize) -> Result<Vec<Vec<usize>>> {
    if n > limit {
        return Err(Error::ResourceLimit {
            what: "graph automorphism enumeration",
            n,
            limit,
        });
    }
    Ok(defining_graph(n)?.automorphisms())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: usize, j: usize) -> LambdaGen {
        LambdaGen::new(i, j)
    }

    #[test]
    fn small_graphs_match_known_shapes() {
        let g3 = defining_graph(3).unwrap();
        assert_eq!(g3.vertex_count(), 3);
        assert_eq!(g3.edge_count(), 0);

        let g4 = defining_graph(4).unwrap();
        assert_eq!(g4.edge_count(), 3);
        assert!(g4.adjacent(g(1, 2), g(3, 4)));
        assert!(g4.adjacent(g(1, 3), g(2, 4)));
        assert!(g4.adjacent(g(1, 4), g(2, 3)));
        assert!(!g4.adjacent(g(1, 2), g(1, 3)));

        let g5 = defining_graph(5).unwrap();
        assert_eq!(g5.vertex_count(), 10);
        assert!(g5.vertices().iter().all(|&v| g5.degree(v) == 3));
    }

    #[test]
    fn neighbourhood_sizes_follow_the_counting_rules() {
        for n in 4..=8 {
            let graph = defining_graph(n).unwrap();
            for &v in graph.vertices() {
                assert_eq!(graph.non_neighbors(v).len(), 2 * n - 4);
                assert_eq!(graph.star(v).len(), ((n - 2) * (n - 4) + n) / 2);
            }
        }
    }

    #[test]
    fn degree_regularity_over_the_supported_range() {
        for n in 2..=8usize {
            let expected = n.saturating_sub(2) * n.saturating_sub(3) / 2;
            let graph = defining_graph(n).unwrap();
            for &v in graph.vertices() {
                assert_eq!(graph.degree(v), expected, "n={n}");
            }
        }
    }

    #[test]
    fn domination_dichotomy() {
        let g4 = defining_graph(4).unwrap();
        assert!(g4.dominates(g(1, 2), g(3, 4)).unwrap());
        assert_eq!(g4.dominating_pairs().len(), 6);
        assert!(g4.dominates(g(1, 2), g(1, 2)).is_err());

        let g5 = defining_graph(5).unwrap();
        assert!(g5.dominating_pairs().is_empty());

        // links are empty on three strands, so everything dominates
        let g3 = defining_graph(3).unwrap();
        assert!(g3.dominates(g(1, 2), g(1, 3)).unwrap());
    }

    #[test]
    fn components_after_removing_a_star() {
        let g5 = defining_graph(5).unwrap();
        let comps = g5.components_minus_star(g(1, 2));
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 6);

        let g4 = defining_graph(4).unwrap();
        let comps = g4.components_minus_star(g(1, 2));
        assert_eq!(comps, vec![vec![g(1, 3), g(2, 4)], vec![g(1, 4), g(2, 3)]]);

        // edgeless case: two singletons
        let g3 = defining_graph(3).unwrap();
        assert_eq!(
            g3.components_minus_star(g(1, 2)),
            vec![vec![g(1, 3)], vec![g(2, 3)]]
        );
    }

    #[test]
    fn chordality_flips_at_five_strands() {
        assert!(defining_graph(2).unwrap().is_chordal());
        assert!(defining_graph(3).unwrap().is_chordal());
        assert!(defining_graph(4).unwrap().is_chordal());
        assert!(!defining_graph(5).unwrap().is_chordal());
        assert!(!defining_graph(6).unwrap().is_chordal());
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(graph_automorphisms(2).unwrap().len(), 1);
        assert_eq!(graph_automorphisms(3).unwrap().len(), 6);
        assert_eq!(graph_automorphisms(4).unwrap().len(), 48);
        assert_eq!(graph_automorphisms(5).unwrap().len(), 120);
        assert!(matches!(
            graph_automorphisms(7),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn automorphisms_preserve_adjacency() {
        let graph = defining_graph(4).unwrap();
        for auto in graph.automorphisms() {
            for a in 0..graph.vertex_count() {
                for b in 0..graph.vertex_count() {
                    assert_eq!(graph.adj[a][b], graph.adj[auto[a]][auto[b]]);
                }
            }
        }
    }

    #[test]
    fn complement_is_connected_up_to_six() {
        for n in 2..=6 {
            assert!(defining_graph(n).unwrap().complement_connected());
        }
    }

    #[test]
    fn dot_output_lists_vertices_and_edges() {
        let dot = defining_graph(4).unwrap().to_dot();
        assert!(dot.starts_with("graph pvt {"));
        assert!(dot.contains("l_1_2;"));
        assert!(dot.contains("l_1_2 -- l_3_4;"));
        assert!(dot.trim_end().ends_with('}'));
    }
}
