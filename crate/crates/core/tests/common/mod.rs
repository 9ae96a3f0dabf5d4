//! Slow, obviously-correct reference implementations used as oracles.
//! Nothing here calls library algorithms; graphs cross over only as plain
//! adjacency matrices.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::HashSet;

use mdim_core::Graph;

/// Adjacency-matrix graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Mat {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in edges {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Mat { n, adj }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let n = g.order();
        let adj = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
        Mat { n, adj }
    }

    /// Upper-triangle mask in the order (0,1), (0,2), (1,2), (0,3), ..
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut edges = Vec::new();
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        Mat::new(n, &edges)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&b| b).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edge_list(self.n, &self.edges()).unwrap()
    }
}

pub const INF: usize = usize::MAX / 4;

pub fn floyd_warshall(g: &Mat) -> Vec<Vec<usize>> {
    let n = g.n;
    let mut d = vec![vec![INF; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.adj[u][v] {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Connectivity by depth-first search, skipping `removed`.
pub fn connected_without(g: &Mat, removed: Option<usize>) -> bool {
    let alive: Vec<usize> = (0..g.n).filter(|&v| Some(v) != removed).collect();
    let Some(&start) = alive.first() else {
        return true;
    };
    let mut seen = vec![false; g.n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for v in 0..g.n {
            if g.adj[u][v] && !seen[v] && Some(v) != removed {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    alive.iter().all(|&v| seen[v])
}

pub fn is_connected(g: &Mat) -> bool {
    connected_without(g, None)
}

/// Vertices whose deletion disconnects the graph.
pub fn cut_vertices(g: &Mat) -> Vec<usize> {
    (0..g.n).filter(|&v| g.n > 2 && !connected_without(g, Some(v))).collect()
}

/// `N[x] ⊆ N[y]` for some neighbor `y`, straight from the definition.
pub fn has_maximal_neighbor(g: &Mat, x: usize) -> bool {
    (0..g.n).any(|y| g.adj[x][y] && (0..g.n).all(|z| !(z == x || g.adj[x][z]) || z == y || g.adj[y][z]))
}

pub fn every_vertex_has_maximal_neighbor(g: &Mat) -> bool {
    (0..g.n).all(|x| has_maximal_neighbor(g, x))
}

pub fn universal_count(g: &Mat) -> usize {
    (0..g.n).filter(|&v| g.degree(v) + 1 == g.n).count()
}

/// Distance vectors of every vertex and edge to `w`, vertices first.
pub fn mixed_vectors(g: &Mat, d: &[Vec<usize>], w: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for v in 0..g.n {
        out.push(w.iter().map(|&s| d[v][s]).collect());
    }
    for (a, b) in g.edges() {
        out.push(w.iter().map(|&s| d[a][s].min(d[b][s])).collect());
    }
    out
}

pub fn resolves(g: &Mat, d: &[Vec<usize>], w: &[usize]) -> bool {
    let vectors = mixed_vectors(g, d, w);
    let distinct: HashSet<&Vec<usize>> = vectors.iter().collect();
    distinct.len() == vectors.len()
}

/// The lexicographically smallest (as a sorted list) among the smallest
/// mixed resolving sets, trying subsets by increasing size.
pub fn brute_basis(g: &Mat) -> Vec<usize> {
    let d = floyd_warshall(g);
    for size in 0..=g.n {
        let best = (0u32..1 << g.n)
            .filter(|mask| mask.count_ones() as usize == size)
            .map(|mask| (0..g.n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<usize>>())
            .filter(|w| resolves(g, &d, w))
            .min();
        if let Some(w) = best {
            return w;
        }
    }
    unreachable!("the full vertex set resolves every connected graph")
}

pub fn brute_mdim(g: &Mat) -> usize {
    brute_basis(g).len()
}

/// `(g, a) ~ (g', b)` iff the pairs differ and each coordinate is equal or adjacent.
pub fn strong_product(g: &Mat, h: &Mat) -> Mat {
    let n = g.n * h.n;
    let mut adj = vec![vec![false; n]; n];
    for (x, row) in adj.iter_mut().enumerate() {
        for (y, cell) in row.iter_mut().enumerate() {
            let (a, b) = (x / h.n, x % h.n);
            let (c, e) = (y / h.n, y % h.n);
            let close_g = a == c || g.adj[a][c];
            let close_h = b == e || h.adj[b][e];
            *cell = x != y && close_g && close_h;
        }
    }
    Mat { n, adj }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying all `n!` relabellings.
pub fn isomorphic_by_permutation(g: &Mat, h: &Mat) -> bool {
    g.n == h.n
        && permutations(g.n)
            .iter()
            .any(|p| (0..g.n).all(|u| (0..g.n).all(|v| g.adj[u][v] == h.adj[p[u]][p[v]])))
}

/// graph6 following the format description bit by bit.
pub fn graph6_reference(g: &Mat) -> String {
    let mut bits = Vec::new();
    for j in 1..g.n {
        for i in 0..j {
            bits.push(g.adj[i][j]);
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut out = String::new();
    out.push((g.n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let value = chunk.iter().fold(0u8, |acc, &b| acc * 2 + u8::from(b));
        out.push((value + 63) as char);
    }
    out
}

/// Union-find connectivity of an upper-triangle mask.
pub fn mask_connected(n: usize, mask: u64) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut bit = 0;
    let mut components = n;
    for j in 1..n {
        for i in 0..j {
            if mask >> bit & 1 == 1 {
                let (a, b) = (root(&mut parent, i), root(&mut parent, j));
                if a != b {
                    parent[a] = b;
                    components -= 1;
                }
            }
            bit += 1;
        }
    }
    components == 1
}

/// Every connected labelled graph with `n` vertices, by ascending mask.
pub fn connected_graphs(n: usize) -> impl Iterator<Item = (u64, Mat)> {
    (0..1u64 << (n * (n - 1) / 2)).filter(move |&m| mask_connected(n, m)).map(move |m| (m, Mat::from_mask(n, m)))
}
