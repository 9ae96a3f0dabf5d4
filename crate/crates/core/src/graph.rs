//! Simple undirected graphs stored as one adjacency bitmask per vertex.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported order; a vertex subset always fits in one `u64`.
pub const MAX_ORDER: usize = 62;

/// A set of vertex indices packed into a machine word.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// An edge with canonically ordered endpoints, `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Orders the endpoints; `a != b` is the caller's responsibility.
    pub fn new(a: usize, b: usize) -> Self {
        debug_assert_ne!(a, b);
        Edge { u: a.min(b), v: a.max(b) }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.u, self.v)
    }
}

/// An element of `V(G) ∪ E(G)`.
///
/// The derived order puts every vertex before every edge, vertices by index
/// and edges lexicographically. This is the canonical element order used for
/// witnesses and certificates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MixedElement {
    Vertex { index: usize },
    Edge { u: usize, v: usize },
}

impl MixedElement {
    pub fn vertex(i: usize) -> Self {
        MixedElement::Vertex { index: i }
    }

    pub fn edge(e: Edge) -> Self {
        MixedElement::Edge { u: e.u, v: e.v }
    }
}

impl fmt::Display for MixedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MixedElement::Vertex { index } => write!(f, "v{index}"),
            MixedElement::Edge { u, v } => write!(f, "e({u},{v})"),
        }
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from adjacency rows, validating symmetry and loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let full = VertexSet::full(n).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            if row & !full != 0 {
                let u = (row & !full).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            for u in VertexSet::from_bits(row).iter() {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph { adj: rows })
    }

    /// Graph on `n` vertices whose edges are the set bits of `mask`, in the
    /// order (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
    pub fn from_upper_mask(n: usize, mask: u64) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if bit < 64 && mask >> bit & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                bit += 1;
            }
        }
        Ok(Graph { adj })
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let full = VertexSet::full(n).bits();
        Ok(Graph { adj: (0..n).map(|v| full & !(1 << v)).collect() })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.order()).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u) - 1)).iter().map(move |v| Edge { u, v })
        })
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges().map(|e| (e.u, e.v)).collect()
    }

    /// All of `V ∪ E` in canonical order.
    pub fn mixed_elements(&self) -> Vec<MixedElement> {
        (0..self.order())
            .map(MixedElement::vertex)
            .chain(self.edges().map(MixedElement::edge))
            .collect()
    }

    /// Vertices reachable from `start`.
    pub fn reachable(&self, start: usize) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier).iter() {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        VertexSet(seen)
    }

    /// Single component; the one-vertex graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.reachable(0) == VertexSet::full(self.order())
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Subgraph induced by the vertices of `keep`, relabelled in index order.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph> {
        let order: Vec<usize> = keep.iter().filter(|&v| v < self.order()).collect();
        let mut index = [usize::MAX; 64];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let rows = order
            .iter()
            .map(|&v| {
                VertexSet(self.adj[v] & keep.bits())
                    .iter()
                    .fold(0u64, |acc, u| acc | 1 << index[u])
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// Applies `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut rows = vec![0u64; self.order()];
        for e in self.edges() {
            rows[perm[e.u]] |= 1 << perm[e.v];
            rows[perm[e.v]] |= 1 << perm[e.u];
        }
        Graph { adj: rows }
    }
}

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange { n, min: 1, max: MAX_ORDER })
    }
}

/// All-pairs hop distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceData {
    n: usize,
    dist: Vec<u8>,
}

impl DistanceData {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u8 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u8] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u8 {
        self.dist.iter().copied().max().unwrap_or(0)
    }
}

/// Breadth-first search from every vertex, one bitmask frontier per level.
pub fn distance_matrix(g: &Graph) -> Result<DistanceData> {
    g.require_connected()?;
    let n = g.order();
    let mut dist = vec![0u8; n * n];
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        let mut level = 0u8;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier).iter() {
                row[v] = level;
                next |= g.row(v);
            }
            frontier = next & !seen;
            seen |= frontier;
            level += 1;
        }
    }
    Ok(DistanceData { n, dist })
}

/// Distance from a vertex or edge to the vertex `v`; an edge `ww'` is at
/// distance `min(d(w, v), d(w', v))`.
pub fn mixed_distance(d: &DistanceData, x: MixedElement, v: usize) -> u8 {
    match x {
        MixedElement::Vertex { index } => d.get(index, v),
        MixedElement::Edge { u, v: w } => d.get(u, v).min(d.get(w, v)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (2, 1)]).unwrap();
        assert_eq!(p4.edge_count(), 3);
        assert_eq!(p4.edge_pairs(), vec![(0, 1), (1, 2), (2, 3)]);
        let g6 = Graph::from_edge_list(
            6,
            &[(0, 1), (1, 3), (3, 5), (4, 5), (2, 4), (0, 2), (1, 2), (1, 4), (3, 4), (2, 3)],
        )
        .unwrap();
        assert_eq!(g6.degree_sequence(), vec![4, 4, 4, 4, 2, 2]);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(Graph::from_edge_list(3, &[(0, 3)]), Err(Error::VertexOutOfRange { v: 3, n: 3 }));
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(Graph::from_edge_list(0, &[]), Err(Error::OrderOutOfRange { .. })));
        assert!(matches!(Graph::from_edge_list(63, &[]), Err(Error::OrderOutOfRange { .. })));
        assert!(Graph::from_edge_list(62, &[(0, 61)]).is_ok());
    }

    #[test]
    fn connectivity() {
        assert!(path(2).is_connected());
        assert!(Graph::from_edge_list(1, &[]).unwrap().is_connected());
        assert!(!Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap().is_connected());
    }

    #[test]
    fn distances_on_small_graphs() {
        let d = distance_matrix(&path(3)).unwrap();
        assert_eq!(d.get(0, 2), 2);
        let d = distance_matrix(&Graph::complete(4).unwrap()).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(d.get(u, v), u8::from(u != v));
            }
        }
        let d = distance_matrix(&cycle(5)).unwrap();
        assert_eq!((d.get(0, 2), d.get(0, 3)), (2, 2));
        let disconnected = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(distance_matrix(&disconnected), Err(Error::Disconnected));
    }

    #[test]
    fn mixed_distances() {
        let d = distance_matrix(&path(3)).unwrap();
        let e01 = MixedElement::edge(Edge::new(0, 1));
        assert_eq!(mixed_distance(&d, e01, 0), 0);
        assert_eq!(mixed_distance(&d, e01, 2), 1);
        let d = distance_matrix(&path(4)).unwrap();
        assert_eq!(mixed_distance(&d, MixedElement::edge(Edge::new(2, 1)), 3), 1);
        assert_eq!(mixed_distance(&d, MixedElement::vertex(3), 3), 0);
    }

    #[test]
    fn canonical_element_order() {
        let g = cycle(4);
        let elems = g.mixed_elements();
        assert_eq!(elems.len(), 8);
        let mut sorted = elems.clone();
        sorted.sort();
        assert_eq!(elems, sorted);
        assert_eq!(elems[4], MixedElement::Edge { u: 0, v: 1 });
        assert_eq!(elems[7], MixedElement::Edge { u: 2, v: 3 });
    }

    #[test]
    fn upper_mask_order() {
        // bits: (0,1) (0,2) (1,2) (0,3) ...
        let g = Graph::from_upper_mask(4, 0b100_101).unwrap();
        assert_eq!(g.edge_pairs(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn induced_and_relabel() {
        let c5 = cycle(5);
        let p = c5.induced(VertexSet::full(5).without(0)).unwrap();
        assert_eq!(p.edge_pairs(), vec![(0, 1), (1, 2), (2, 3)]);
        let r = path(3).relabel(&[1, 0, 2]);
        assert_eq!(r.edge_pairs(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn vertex_set_ops() {
        let s: VertexSet = [3, 0, 5].into_iter().collect();
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
        assert_eq!(s.to_string(), "{0, 3, 5}");
        assert!(s.without(3).is_subset(s));
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,3,5]");
    }
}
