//! Simple undirected graphs with precomputed distances, plus the standard
//! families and graph-level invariants the rest of the crate consumes.

use crate::error::{Error, Result};
use std::collections::VecDeque;

/// Distance sentinel for unreachable pairs.
pub const INFINITY: u32 = u32::MAX;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is deduplicated and symmetric; the all-pairs hop-distance table
/// is computed eagerly at construction and shared by every later stage.
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    dist: Vec<Vec<u32>>,
}

impl Graph {
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edge_list {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            for &x in &[u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { index: x, n });
                }
            }
            if !adj[u].contains(&v) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for &v in &adj[u] {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        let dist = (0..n).map(|s| bfs_dist(&adj, s)).collect();
        Ok(Graph {
            n,
            adj,
            edges,
            dist,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Hop distance, `None` when unreachable.
    pub fn dist(&self, u: usize, v: usize) -> Option<usize> {
        match self.dist[u][v] {
            INFINITY => None,
            d => Some(d as usize),
        }
    }

    /// Directed edge pairs (u,v) and (v,u), in lexicographic order.
    pub fn directed_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(2 * self.edges.len());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.dist[0].iter().all(|&d| d != INFINITY)
    }

    pub fn diameter(&self) -> Option<usize> {
        if !self.is_connected() {
            return None;
        }
        let mut best = 0;
        for u in 0..self.n {
            for v in 0..self.n {
                best = best.max(self.dist[u][v]);
            }
        }
        Some(best as usize)
    }

    /// Vertices of degree exactly one.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.n
    }

    // ----- families -----

    /// Path on `n >= 2` vertices in natural order v_0 - v_1 - ... - v_{n-1}.
    pub fn path(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidFamily(format!("path needs n >= 2, got {n}")));
        }
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Self::new(n, &edges)
    }

    /// Cycle on `n >= 3` vertices in natural cyclic order.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidFamily(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges)
    }

    /// Complete graph on `n >= 1` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidFamily("complete needs n >= 1".into()));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::new(n, &edges)
    }

    /// Complete multipartite graph; parts occupy contiguous index ranges in
    /// the given order.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        if parts.len() < 2 || parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidFamily(
                "complete_multipartite needs >= 2 nonempty parts".into(),
            ));
        }
        let n: usize = parts.iter().sum();
        let mut part_of = vec![0usize; n];
        let mut idx = 0;
        for (p, &size) in parts.iter().enumerate() {
            for _ in 0..size {
                part_of[idx] = p;
                idx += 1;
            }
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    edges.push((u, v));
                }
            }
        }
        Self::new(n, &edges)
    }

    /// Star K_{1,k}: vertex 0 is the center.
    pub fn star(k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidFamily("star needs k >= 1".into()));
        }
        let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
        Self::new(k + 1, &edges)
    }

    // ----- invariants -----

    /// A proper 2-coloring when one exists; `None` exactly when the graph
    /// contains an odd cycle. Errors on disconnected input.
    pub fn bipartition(&self) -> Result<Option<Bipartition>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut side = vec![u8::MAX; self.n];
        if self.n == 0 {
            return Ok(Some(Bipartition { side }));
        }
        side[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if side[v] == u8::MAX {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    return Ok(None);
                }
            }
        }
        Ok(Some(Bipartition { side }))
    }

    /// Exact independence number of the subgraph induced by `subset`,
    /// by degree-ordered branch and bound.
    pub fn independence_number(&self, subset: &[usize]) -> usize {
        let mut verts: Vec<usize> = subset.to_vec();
        verts.sort_unstable();
        verts.dedup();
        // branch on the highest-degree remaining vertex: either exclude it,
        // or include it and drop its neighborhood
        fn go(g: &Graph, mut avail: Vec<usize>, current: usize, best: &mut usize) {
            if current + avail.len() <= *best {
                return;
            }
            if avail.is_empty() {
                *best = (*best).max(current);
                return;
            }
            let (pos, &v) = avail
                .iter()
                .enumerate()
                .max_by_key(|(_, &v)| {
                    avail.iter().filter(|&&u| g.has_edge(u, v)).count()
                })
                .unwrap();
            avail.swap_remove(pos);
            let reduced: Vec<usize> = avail
                .iter()
                .copied()
                .filter(|&u| !g.has_edge(u, v))
                .collect();
            go(g, reduced, current + 1, best);
            go(g, avail, current, best);
        }
        let mut best = 0;
        go(self, verts, 0, &mut best);
        best
    }

    /// Bipartite double cover invariants: per-vertex shortest odd closed walk
    /// length, the maximum `odd(G)` and the minimum `og(G)` (odd girth).
    /// Errors when the graph is bipartite or disconnected.
    pub fn odd_invariants(&self) -> Result<OddInvariants> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        // double cover on V x {0,1}: (u,i) ~ (v,1-i) for uv in E
        let nn = 2 * self.n;
        let mut cover = vec![Vec::new(); nn];
        for &(u, v) in &self.edges {
            cover[2 * u].push(2 * v + 1);
            cover[2 * v + 1].push(2 * u);
            cover[2 * v].push(2 * u + 1);
            cover[2 * u + 1].push(2 * v);
        }
        let mut per_vertex = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let d = bfs_dist(&cover, 2 * v);
            match d[2 * v + 1] {
                INFINITY => return Err(Error::Bipartite),
                k => per_vertex.push(k as usize),
            }
        }
        let odd = *per_vertex.iter().max().unwrap();
        let og = *per_vertex.iter().min().unwrap();
        debug_assert!(og <= odd && og % 2 == 1 && og >= 3);
        Ok(OddInvariants {
            per_vertex,
            odd,
            og,
        })
    }

    /// A shortest odd cycle, recovered from a shortest closed odd walk in the
    /// double cover at a vertex attaining the odd girth.
    pub fn find_odd_cycle(&self) -> Result<Vec<usize>> {
        let inv = self.odd_invariants()?;
        let v0 = (0..self.n).find(|&v| inv.per_vertex[v] == inv.og).unwrap();
        let nn = 2 * self.n;
        let mut cover = vec![Vec::new(); nn];
        for &(u, v) in &self.edges {
            cover[2 * u].push(2 * v + 1);
            cover[2 * v + 1].push(2 * u);
            cover[2 * v].push(2 * u + 1);
            cover[2 * u + 1].push(2 * v);
        }
        for list in &mut cover {
            list.sort_unstable();
        }
        let (dist, parent) = bfs_with_parents(&cover, 2 * v0);
        debug_assert_eq!(dist[2 * v0 + 1] as usize, inv.og);
        let mut walk = Vec::new();
        let mut cur = 2 * v0 + 1;
        while cur != 2 * v0 {
            walk.push(cur / 2);
            cur = parent[cur];
        }
        walk.push(v0);
        walk.reverse();
        // the walk starts at v0, has odd length og, and being a shortest odd
        // closed walk it is a simple cycle; drop the repeated endpoint
        walk.pop();
        debug_assert_eq!(walk.len(), inv.og);
        Ok(walk)
    }

    /// BFS spanning tree rooted at `root`, as a graph on the same vertices.
    pub fn spanning_tree(&self, root: usize) -> Result<Graph> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut seen = vec![false; self.n];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        let mut edges = Vec::new();
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    edges.push((u, v));
                    queue.push_back(v);
                }
            }
        }
        Graph::new(self.n, &edges)
    }

    /// Hamiltonian path starting at `v`, by backtracking; smallest-index
    /// neighbor explored first.
    pub fn hamiltonian_path_from(&self, v: usize) -> Option<Vec<usize>> {
        let mut used = vec![false; self.n];
        used[v] = true;
        let mut path = vec![v];
        if self.ham_path_rec(&mut path, &mut used) {
            Some(path)
        } else {
            None
        }
    }

    fn ham_path_rec(&self, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if path.len() == self.n {
            return true;
        }
        let last = *path.last().unwrap();
        for &w in &self.adj[last] {
            if !used[w] {
                used[w] = true;
                path.push(w);
                if self.ham_path_rec(path, used) {
                    return true;
                }
                path.pop();
                used[w] = false;
            }
        }
        false
    }

    /// Hamiltonian cycle by backtracking, or `None`.
    pub fn hamiltonian_cycle(&self) -> Option<Vec<usize>> {
        if self.n < 3 {
            return None;
        }
        let mut used = vec![false; self.n];
        used[0] = true;
        let mut path = vec![0];
        if self.ham_cycle_rec(&mut path, &mut used) {
            Some(path)
        } else {
            None
        }
    }

    fn ham_cycle_rec(&self, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if path.len() == self.n {
            return self.has_edge(*path.last().unwrap(), path[0]);
        }
        let last = *path.last().unwrap();
        for &w in &self.adj[last] {
            if !used[w] {
                used[w] = true;
                path.push(w);
                if self.ham_cycle_rec(path, used) {
                    return true;
                }
                path.pop();
                used[w] = false;
            }
        }
        false
    }

    /// The parts of a complete multipartite graph (components of the
    /// complement, in smallest-vertex order), or `None` if the graph is not
    /// complete multipartite. A complete graph yields all-singleton parts.
    pub fn multipartition(&self) -> Option<Vec<Vec<usize>>> {
        let n = self.n;
        let mut part_id = vec![usize::MAX; n];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            if part_id[v] != usize::MAX {
                continue;
            }
            // component of v in the complement graph
            let id = parts.len();
            let mut comp = vec![v];
            part_id[v] = id;
            let mut queue = VecDeque::from([v]);
            while let Some(u) = queue.pop_front() {
                for w in 0..n {
                    if w != u && part_id[w] == usize::MAX && !self.has_edge(u, w) {
                        part_id[w] = id;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            parts.push(comp);
        }
        // complete multipartite iff parts are independent and all cross
        // pairs are edges
        for u in 0..n {
            for v in u + 1..n {
                let adjacent = self.has_edge(u, v);
                if (part_id[u] == part_id[v]) == adjacent {
                    return None;
                }
            }
        }
        Some(parts)
    }

    /// Parse whitespace edge-list text: one `u v` pair per line, 0-indexed.
    /// Blank lines and `#` comment lines are skipped. Vertex count is
    /// 1 + the largest index mentioned unless `n` is given.
    pub fn from_edge_list_text(text: &str, n: Option<usize>) -> Result<Self> {
        let mut edges = Vec::new();
        let mut max_v = 0usize;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize> {
                tok.ok_or_else(|| Error::EdgeList(format!("line {}: expected two indices", lineno + 1)))?
                    .parse()
                    .map_err(|_| Error::EdgeList(format!("line {}: bad vertex index", lineno + 1)))
            };
            let u = parse(it.next())?;
            let v = parse(it.next())?;
            if it.next().is_some() {
                return Err(Error::EdgeList(format!(
                    "line {}: expected exactly two indices",
                    lineno + 1
                )));
            }
            max_v = max_v.max(u).max(v);
            edges.push((u, v));
        }
        let n = n.unwrap_or(if edges.is_empty() { 0 } else { max_v + 1 });
        Self::new(n, &edges)
    }
}

/// A fixed 2-coloring of a bipartite graph.
#[derive(Debug, Clone)]
pub struct Bipartition {
    side: Vec<u8>,
}

impl Bipartition {
    pub fn side(&self, v: usize) -> u8 {
        self.side[v]
    }

    pub fn len(&self) -> usize {
        self.side.len()
    }

    pub fn is_empty(&self) -> bool {
        self.side.is_empty()
    }

    /// Vertices on the given side.
    pub fn class(&self, s: u8) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| self.side[v] == s).collect()
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.side.len() == g.n() && g.edges().iter().all(|&(u, v)| self.side[u] != self.side[v])
    }
}

/// Output of [`Graph::odd_invariants`].
#[derive(Debug, Clone)]
pub struct OddInvariants {
    /// odd(v,G) per vertex: length of a shortest odd closed walk at v.
    pub per_vertex: Vec<usize>,
    /// odd(G) = max over vertices.
    pub odd: usize,
    /// og(G) = min over vertices (the odd girth).
    pub og: usize,
}

fn bfs_dist(adj: &[Vec<usize>], start: usize) -> Vec<u32> {
    let mut dist = vec![INFINITY; adj.len()];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if dist[v] == INFINITY {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

fn bfs_with_parents(adj: &[Vec<usize>], start: usize) -> (Vec<u32>, Vec<usize>) {
    let mut dist = vec![INFINITY; adj.len()];
    let mut parent = vec![usize::MAX; adj.len()];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if dist[v] == INFINITY {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    (dist, parent)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_single_edge() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.dist(0, 1), Some(1));
        assert!(g.is_connected());
    }

    #[test]
    fn build_c4_geometry() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.diameter(), Some(2));
        assert_eq!(g.dist(0, 2), Some(2));
    }

    #[test]
    fn build_disconnected_sentinel() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(g.dist(0, 2), None);
        assert!(!g.is_connected());
        assert_eq!(g.diameter(), None);
    }

    #[test]
    fn build_rejects_loop_and_range() {
        assert!(matches!(Graph::new(2, &[(1, 1)]), Err(Error::LoopEdge(1))));
        assert!(matches!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn build_dedupes_parallel_edges() {
        let g = Graph::new(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn family_path3() {
        let g = Graph::path(3).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn family_multipartite_singletons_is_complete() {
        let g = Graph::complete_multipartite(&[1, 1, 1]).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(g.edges(), k3.edges());
    }

    #[test]
    fn family_guards() {
        assert!(Graph::path(1).is_err());
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::complete_multipartite(&[2]).is_err());
        assert!(Graph::complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn bipartition_even_cycle() {
        let g = Graph::cycle(4).unwrap();
        let b = g.bipartition().unwrap().unwrap();
        assert_eq!(b.class(b.side(0)), vec![0, 2]);
        assert!(b.is_valid_for(&g));
    }

    #[test]
    fn bipartition_odd_cycle_none() {
        let g = Graph::cycle(5).unwrap();
        assert!(g.bipartition().unwrap().is_none());
    }

    #[test]
    fn bipartition_path_by_parity() {
        let g = Graph::path(4).unwrap();
        let b = g.bipartition().unwrap().unwrap();
        for v in 0..4 {
            assert_eq!(b.side(v), (v % 2) as u8);
        }
    }

    #[test]
    fn bipartition_disconnected_errors() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(matches!(g.bipartition(), Err(Error::Disconnected)));
    }

    #[test]
    fn independence_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.independence_number(&[0, 1, 2, 3]), 1);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.independence_number(&[0, 1, 2, 3, 4]), 2);
        let k33 = Graph::complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(k33.independence_number(&(0..6).collect::<Vec<_>>()), 3);
    }

    #[test]
    fn odd_invariants_k4() {
        let inv = Graph::complete(4).unwrap().odd_invariants().unwrap();
        assert_eq!(inv.per_vertex, vec![3, 3, 3, 3]);
        assert_eq!((inv.odd, inv.og), (3, 3));
    }

    #[test]
    fn odd_invariants_c5() {
        let inv = Graph::cycle(5).unwrap().odd_invariants().unwrap();
        assert_eq!((inv.odd, inv.og), (5, 5));
    }

    #[test]
    fn odd_invariants_triangle_with_pendant_path() {
        // triangle 0-1-2 plus path 2-3-4
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let inv = g.odd_invariants().unwrap();
        assert_eq!(inv.per_vertex[4], 7);
        assert_eq!((inv.odd, inv.og), (7, 3));
    }

    #[test]
    fn odd_invariants_bipartite_errors() {
        let g = Graph::cycle(4).unwrap();
        assert!(matches!(g.odd_invariants(), Err(Error::Bipartite)));
    }

    #[test]
    fn find_odd_cycle_c5() {
        let g = Graph::cycle(5).unwrap();
        let cyc = g.find_odd_cycle().unwrap();
        assert_eq!(cyc.len(), 5);
        let mut sorted = cyc.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn find_odd_cycle_is_simple_and_shortest() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let cyc = g.find_odd_cycle().unwrap();
        assert_eq!(cyc.len(), 3);
        for i in 0..cyc.len() {
            assert!(g.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]));
        }
    }

    #[test]
    fn hamiltonian_path_examples() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.hamiltonian_path_from(0), Some(vec![0, 1, 2]));
        assert_eq!(p3.hamiltonian_path_from(1), None);
        let k4 = Graph::complete(4).unwrap();
        for v in 0..4 {
            assert!(k4.hamiltonian_path_from(v).is_some());
        }
    }

    #[test]
    fn hamiltonian_cycle_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.hamiltonian_cycle().is_some());
        let star = Graph::star(3).unwrap();
        assert!(star.hamiltonian_cycle().is_none());
        let k33 = Graph::complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(k33.hamiltonian_cycle().unwrap().len(), 6);
    }

    #[test]
    fn leaves_and_diameter() {
        assert_eq!(Graph::path(4).unwrap().diameter(), Some(3));
        assert_eq!(Graph::star(3).unwrap().leaves(), vec![1, 2, 3]);
    }

    #[test]
    fn spanning_tree_is_tree() {
        let g = Graph::cycle(5).unwrap();
        let t = g.spanning_tree(0).unwrap();
        assert!(t.is_tree());
        for &(u, v) in t.edges() {
            assert!(g.has_edge(u, v));
        }
    }

    #[test]
    fn multipartition_detection() {
        let g = Graph::complete_multipartite(&[2, 2]).unwrap();
        assert_eq!(g.multipartition(), Some(vec![vec![0, 1], vec![2, 3]]));
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(
            k3.multipartition(),
            Some(vec![vec![0], vec![1], vec![2]])
        );
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.multipartition(), None);
    }

    #[test]
    fn edge_list_text_roundtrip() {
        let g = Graph::from_edge_list_text("0 1\n1 2\n\n# comment\n2 3\n", None).unwrap();
        assert_eq!(g.edges(), Graph::path(4).unwrap().edges());
        assert!(Graph::from_edge_list_text("0\n", None).is_err());
    }
}
