//! Structural predicates: maximal neighbors, universal vertices, cut
//! vertices, blocks, block graphs and chemical graphs.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// Smallest neighbor `y` of `v` with `N[v] ⊆ N[y]`, i.e. `y` is adjacent to
/// every other neighbor of `v`.
pub fn maximal_neighbor_witness(g: &Graph, v: usize) -> Option<usize> {
    let closed = g.closed_neighbors(v);
    g.neighbors(v).iter().find(|&y| closed.is_subset(g.closed_neighbors(y)))
}

/// Every vertex has a maximal neighbor; equivalent to `mdim(G) = n(G)`.
pub fn all_have_maximal_neighbor(g: &Graph) -> bool {
    (0..g.order()).all(|v| maximal_neighbor_witness(g, v).is_some())
}

/// Vertices of degree `n - 1`.
pub fn universal_vertices(g: &Graph) -> VertexSet {
    let n = g.order();
    (0..n).filter(|&v| g.degree(v) + 1 == n).collect()
}

/// Neighborhood induces a clique.
pub fn is_simplicial(g: &Graph, v: usize) -> bool {
    let nb = g.neighbors(v);
    nb.iter().all(|u| nb.without(u).is_subset(g.neighbors(u)))
}

pub fn is_chemical(g: &Graph) -> bool {
    g.max_degree() <= 4
}

/// Leaves, i.e. vertices of degree one.
pub fn pendant_vertices(g: &Graph) -> VertexSet {
    (0..g.order()).filter(|&v| g.degree(v) == 1).collect()
}

pub fn is_tree(g: &Graph) -> bool {
    g.edge_count() + 1 == g.order() && g.is_connected()
}

/// Cut vertices and blocks of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub cut_vertices: VertexSet,
    /// Blocks in the order the lowpoint pass closes them.
    pub blocks: Vec<VertexSet>,
}

/// Tarjan's lowpoint DFS with an edge stack.
pub fn cut_vertices_and_blocks(g: &Graph) -> Result<BlockDecomposition> {
    g.require_connected()?;
    let n = g.order();
    let mut state = Lowpoint {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        cut: VertexSet::empty(),
        blocks: Vec::new(),
    };
    state.visit(0, usize::MAX);
    Ok(BlockDecomposition { cut_vertices: state.cut, blocks: state.blocks })
}

struct Lowpoint<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    cut: VertexSet,
    blocks: Vec<VertexSet>,
}

impl Lowpoint<'_> {
    fn visit(&mut self, v: usize, parent: usize) {
        self.disc[v] = self.time;
        self.low[v] = self.time;
        self.time += 1;
        let mut children = 0;
        for u in self.g.neighbors(v).iter() {
            if self.disc[u] == usize::MAX {
                children += 1;
                self.stack.push((v, u));
                self.visit(u, v);
                self.low[v] = self.low[v].min(self.low[u]);
                if self.low[u] >= self.disc[v] {
                    if parent != usize::MAX || children > 1 {
                        self.cut.insert(v);
                    }
                    let mut block = VertexSet::empty();
                    while let Some((a, b)) = self.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (v, u) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if u != parent && self.disc[u] < self.disc[v] {
                self.stack.push((v, u));
                self.low[v] = self.low[v].min(self.disc[u]);
            }
        }
    }
}

/// Every block induces a complete subgraph.
pub fn is_block_graph(g: &Graph) -> Result<bool> {
    let dec = cut_vertices_and_blocks(g)?;
    Ok(dec.blocks.iter().all(|&b| is_clique(g, b)))
}

pub fn is_clique(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| s.without(v).is_subset(g.neighbors(v)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub universal: VertexSet,
    pub cut_vertices: VertexSet,
    pub zeta: usize,
    pub blocks: Vec<VertexSet>,
    pub is_block_graph: bool,
    pub is_chemical: bool,
    pub maximal_neighbor_of: Vec<Option<usize>>,
}

impl StructureReport {
    pub fn all_have_maximal_neighbor(&self) -> bool {
        self.maximal_neighbor_of.iter().all(Option::is_some)
    }
}

pub fn analyze(g: &Graph) -> Result<StructureReport> {
    let dec = cut_vertices_and_blocks(g)?;
    Ok(StructureReport {
        n: g.order(),
        m: g.edge_count(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        universal: universal_vertices(g),
        cut_vertices: dec.cut_vertices,
        zeta: dec.cut_vertices.len(),
        is_block_graph: dec.blocks.iter().all(|&b| is_clique(g, b)),
        blocks: dec.blocks,
        is_chemical: is_chemical(g),
        maximal_neighbor_of: (0..g.order()).map(|v| maximal_neighbor_witness(g, v)).collect(),
    })
}
