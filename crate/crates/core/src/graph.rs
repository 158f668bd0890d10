//! Simple undirected graphs on at most 32 vertices, stored as adjacency
//! bitmasks, with exhaustive isomorphism search.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::ops::ControlFlow;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallGraph {
    adj: Vec<u32>,
}

impl SmallGraph {
    pub const MAX_VERTICES: usize = 32;

    pub fn new(n: usize) -> Self {
        assert!(n <= Self::MAX_VERTICES);
        Self { adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in 0..u {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            g.add_edge(u, (u + 1) % n);
        }
        g
    }

    /// The Petersen graph as the Kneser graph on 2-subsets of a 5-set:
    /// two pairs are adjacent iff disjoint.
    pub fn petersen() -> Self {
        let pairs: Vec<u32> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (1u32 << a) | (1 << b)))
            .collect();
        let mut g = Self::new(pairs.len());
        for i in 0..pairs.len() {
            for j in 0..i {
                if pairs[i] & pairs[j] == 0 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbor_mask(&self, u: usize) -> u32 {
        self.adj[u]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[u])
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order() {
            for v in bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// `Some(k)` if every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        (0..self.order()).all(|u| self.degree(u) == k).then_some(k)
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        (self.adj[u] & self.adj[v]).count_ones() as usize
    }

    /// `(n, k, lambda, mu)` if the graph is strongly regular.
    pub fn strongly_regular_parameters(&self) -> Option<(usize, usize, usize, usize)> {
        let n = self.order();
        let k = self.regular_degree()?;
        let (mut lambda, mut mu) = (None, None);
        for u in 0..n {
            for v in 0..u {
                let slot = if self.has_edge(u, v) {
                    &mut lambda
                } else {
                    &mut mu
                };
                let c = self.common_neighbors(u, v);
                match *slot {
                    None => *slot = Some(c),
                    Some(x) if x != c => return None,
                    _ => {}
                }
            }
        }
        Some((n, k, lambda.unwrap_or(0), mu.unwrap_or(0)))
    }

    /// All triangles `[a, b, c]` with `a < b < c`, in lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            for c in bits(self.adj[a] & self.adj[b]) {
                if c > b {
                    out.push([a, b, c]);
                }
            }
        }
        out.sort();
        out
    }

    /// Length of a shortest cycle, `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Self::new(vertices.len());
        for i in 0..vertices.len() {
            for j in 0..i {
                if self.has_edge(vertices[i], vertices[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn complement(&self) -> Self {
        let n = self.order();
        let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        Self {
            adj: (0..n).map(|u| all & !self.adj[u] & !(1 << u)).collect(),
        }
    }

    /// A largest clique, found by exhaustive branch and bound.
    pub fn max_clique(&self) -> Vec<usize> {
        fn go(g: &SmallGraph, current: u32, candidates: u32, best: &mut u32) {
            if candidates == 0 {
                if current.count_ones() > best.count_ones() {
                    *best = current;
                }
                return;
            }
            if current.count_ones() + candidates.count_ones() <= best.count_ones() {
                return;
            }
            let v = candidates.trailing_zeros() as usize;
            go(g, current | 1 << v, candidates & g.adj[v], best);
            go(g, current, candidates & !(1 << v), best);
        }
        let n = self.order();
        let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut best = 0;
        go(self, 0, all, &mut best);
        bits(best).collect()
    }

    /// Some bijection `map` with `u ~ v` iff `map[u] ~ map[v]` in `other`.
    pub fn find_isomorphism(&self, other: &Self) -> Option<Vec<usize>> {
        let mut found = None;
        self.for_each_isomorphism(other, |m| {
            found = Some(m.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.find_isomorphism(other).is_some()
    }

    /// Calls `visit` with every isomorphism onto `other` until it breaks.
    pub fn for_each_isomorphism<F>(&self, other: &Self, mut visit: F)
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let n = self.order();
        if n != other.order() || self.edge_count() != other.edge_count() {
            return;
        }
        let sig_a: Vec<_> = (0..n).map(|u| self.signature(u)).collect();
        let sig_b: Vec<_> = (0..n).map(|u| other.signature(u)).collect();
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return;
        }
        let order = self.search_order();
        let mut search = IsoSearch {
            a: self,
            b: other,
            sig_a: &sig_a,
            sig_b: &sig_b,
            order: &order,
            map: vec![usize::MAX; n],
            used: 0,
        };
        let _ = search.extend(0, &mut visit);
    }

    /// Degree plus sorted neighbor degrees; preserved by isomorphisms.
    fn signature(&self, u: usize) -> (usize, Vec<usize>) {
        let mut nd: Vec<usize> = self.neighbors(u).map(|v| self.degree(v)).collect();
        nd.sort();
        (self.degree(u), nd)
    }

    /// BFS order from high-degree vertices so that each new vertex has
    /// already-mapped neighbors to constrain it.
    fn search_order(&self) -> Vec<usize> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut starts: Vec<usize> = (0..n).collect();
        starts.sort_by_key(|&u| std::cmp::Reverse(self.degree(u)));
        for s in starts {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        order
    }

    pub fn to_dot(&self, name: &str, labels: &[String]) -> String {
        assert_eq!(labels.len(), self.order());
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{name}\" {{");
        for l in labels {
            let _ = writeln!(out, "  \"{l}\";");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  \"{}\" -- \"{}\";", labels[u], labels[v]);
        }
        out.push_str("}\n");
        out
    }
}

struct IsoSearch<'a> {
    a: &'a SmallGraph,
    b: &'a SmallGraph,
    sig_a: &'a [(usize, Vec<usize>)],
    sig_b: &'a [(usize, Vec<usize>)],
    order: &'a [usize],
    map: Vec<usize>,
    used: u32,
}

impl IsoSearch<'_> {
    fn extend<F>(&mut self, depth: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if depth == self.order.len() {
            return visit(&self.map);
        }
        let u = self.order[depth];
        for w in 0..self.b.order() {
            if self.used >> w & 1 == 1 || self.sig_a[u] != self.sig_b[w] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&p| self.a.has_edge(u, p) == self.b.has_edge(w, self.map[p]));
            if !consistent {
                continue;
            }
            self.map[u] = w;
            self.used |= 1 << w;
            let flow = self.extend(depth + 1, visit);
            self.used &= !(1 << w);
            self.map[u] = usize::MAX;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Iterates over the set bits of a mask, lowest first.
pub fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Mask with the given bits set.
pub fn mask_of(items: impl IntoIterator<Item = usize>) -> u32 {
    items.into_iter().fold(0, |m, i| m | 1 << i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_valid_iso(a: &SmallGraph, b: &SmallGraph, map: &[usize]) -> bool {
        let n = a.order();
        let mut seen = vec![false; n];
        for &m in map {
            if seen[m] {
                return false;
            }
            seen[m] = true;
        }
        (0..n).all(|u| (0..n).all(|v| u == v || a.has_edge(u, v) == b.has_edge(map[u], map[v])))
    }

    #[test]
    fn petersen_invariants() {
        let p = SmallGraph::petersen();
        assert_eq!(p.order(), 10);
        assert_eq!(p.edge_count(), 15);
        assert_eq!(p.regular_degree(), Some(3));
        assert_eq!(p.girth(), Some(5));
        assert_eq!(p.strongly_regular_parameters(), Some((10, 3, 0, 1)));
    }

    #[test]
    fn girth_of_small_graphs() {
        assert_eq!(SmallGraph::cycle(10).girth(), Some(10));
        assert_eq!(SmallGraph::complete(4).girth(), Some(3));
        assert_eq!(SmallGraph::from_edges(3, &[(0, 1), (1, 2)]).girth(), None);
    }

    #[test]
    fn automorphism_count_of_petersen() {
        let p = SmallGraph::petersen();
        let mut count = 0;
        p.for_each_isomorphism(&p, |m| {
            assert!(is_valid_iso(&p, &p, m));
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 120);
    }

    #[test]
    fn relabelled_graph_is_isomorphic() {
        let p = SmallGraph::petersen();
        let perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
        let mut q = SmallGraph::new(10);
        for (u, v) in p.edges() {
            q.add_edge(perm[u], perm[v]);
        }
        let map = p.find_isomorphism(&q).unwrap();
        assert!(is_valid_iso(&p, &q, &map));
    }

    #[test]
    fn non_isomorphic_cubic_graphs() {
        // the 5-prism is cubic on 10 vertices but has girth 4
        let mut prism = SmallGraph::new(10);
        for i in 0..5 {
            prism.add_edge(i, (i + 1) % 5);
            prism.add_edge(5 + i, 5 + (i + 1) % 5);
            prism.add_edge(i, 5 + i);
        }
        assert_eq!(prism.regular_degree(), Some(3));
        assert!(!prism.is_isomorphic(&SmallGraph::petersen()));
        assert!(!SmallGraph::cycle(10).is_isomorphic(&SmallGraph::petersen()));
    }

    #[test]
    fn triangles_of_k4() {
        assert_eq!(
            SmallGraph::complete(4).triangles(),
            vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
        );
    }

    #[test]
    fn max_cliques() {
        assert_eq!(SmallGraph::complete(5).max_clique().len(), 5);
        assert_eq!(SmallGraph::petersen().max_clique().len(), 2);
        assert_eq!(SmallGraph::new(3).max_clique().len(), 1);
    }

    #[test]
    fn complement_of_complete_is_empty() {
        assert_eq!(SmallGraph::complete(6).complement().edge_count(), 0);
    }
}
