//! Graph builders: strong products, edge amalgamation, and the named
//! families (`H_r = P_r ⊠ K_2`, `H_r⁻`, `Λ_{k,r}`, `Λ⁻_{k,r}`, `G_6`, ...).

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet, MAX_ORDER};

/// `G ⊠ H`; vertex `(a, b)` gets index `a * n(H) + b`.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    if ng * nh > MAX_ORDER {
        return Err(Error::ProductTooLarge(ng, nh));
    }
    let mut edges = Vec::new();
    for a1 in 0..ng {
        for b1 in 0..nh {
            for a2 in 0..ng {
                for b2 in 0..nh {
                    let (i, j) = (a1 * nh + b1, a2 * nh + b2);
                    if i >= j {
                        continue;
                    }
                    let ga = a1 == a2 || g.has_edge(a1, a2);
                    let hb = b1 == b2 || h.has_edge(b1, b2);
                    if ga && hb {
                        edges.push((i, j));
                    }
                }
            }
        }
    }
    Graph::from_edge_list(ng * nh, &edges)
}

/// `A(G, e_G; H, e_H)`: disjoint union with `e_G` and `e_H` identified,
/// lower endpoint to lower endpoint. `G` keeps its labels; the remaining
/// vertices of `H` follow in index order.
pub fn amalgamate(g: &Graph, e_g: Edge, h: &Graph, e_h: Edge) -> Result<Graph> {
    for (gr, e) in [(g, e_g), (h, e_h)] {
        if !gr.has_edge(e.u, e.v) {
            return Err(Error::EdgeNotPresent { u: e.u, v: e.v });
        }
    }
    let n = g.order() + h.order() - 2;
    let mut map = vec![0; h.order()];
    let mut next = g.order();
    for (x, slot) in map.iter_mut().enumerate() {
        *slot = if x == e_h.u {
            e_g.u
        } else if x == e_h.v {
            e_g.v
        } else {
            next += 1;
            next - 1
        };
    }
    let mut edges = g.edge_pairs();
    edges.extend(h.edges().map(|e| (map[e.u], map[e.v])));
    Graph::from_edge_list(n, &edges)
}

/// Deletes `v`; higher indices shift down by one. The result may be
/// disconnected.
pub fn remove_vertex(g: &Graph, v: usize) -> Result<Graph> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange { v, n: g.order() });
    }
    g.induced(VertexSet::full(g.order()).without(v))
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidFamily(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

/// `K_{1,k}` with the hub at index 0.
pub fn star(leaves: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edge_list(leaves + 1, &edges)
}

/// `K_n` without the matching `{01, 23, .., (2m-2)(2m-1)}`.
pub fn complete_minus_matching(n: usize, m: usize) -> Result<Graph> {
    if 2 * m > n {
        return Err(Error::InvalidFamily(format!("a matching of {m} edges does not fit in {n} vertices")));
    }
    let mut rows = Graph::complete(n)?.rows().to_vec();
    for i in 0..m {
        let (a, b) = (2 * i, 2 * i + 1);
        rows[a] &= !(1 << b);
        rows[b] &= !(1 << a);
    }
    Graph::from_rows(rows)
}

/// `K_4` with two degree-2 vertices attached to disjoint edges: the only
/// 6-vertex graph of maximum degree 4 in which every vertex has a maximal
/// neighbor.
pub fn g6() -> Graph {
    Graph::from_edge_list(6, &[(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)])
        .expect("static edge list")
}

/// `H_r = P_r ⊠ K_2`; `(i, b)` has index `2i + b`.
pub fn h_graph(r: usize) -> Result<Graph> {
    if r < 2 {
        return Err(Error::InvalidFamily(format!("h_graph needs r >= 2, got {r}")));
    }
    strong_product(&path(r)?, &Graph::complete(2)?)
}

/// `H_r` without the far-end vertex `(r-1, 0)`, so the rung `01` survives.
pub fn h_minus(r: usize) -> Result<Graph> {
    remove_vertex(&h_graph(r)?, 2 * (r - 1))
}

/// The rung `(0,0)(0,1)` of `H_r` and `H_r⁻`, both endpoints of degree 3.
pub const RUNG: Edge = Edge { u: 0, v: 1 };

/// `Λ_{k,r} = A(H_r, rung; K_k, 01)`.
pub fn lambda(k: usize, r: usize) -> Result<Graph> {
    check_clique_size(k)?;
    amalgamate(&h_graph(r)?, RUNG, &Graph::complete(k)?, Edge::new(0, 1))
}

/// `Λ⁻_{k,r} = A(H_r⁻, rung; K_k, 01)`.
pub fn lambda_minus(k: usize, r: usize) -> Result<Graph> {
    check_clique_size(k)?;
    amalgamate(&h_minus(r)?, RUNG, &Graph::complete(k)?, Edge::new(0, 1))
}

fn check_clique_size(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::InvalidFamily(format!("lambda needs k >= 3, got {k}")));
    }
    Ok(())
}

/// Family member of order `n` and maximum degree `t` from the Λ recipe:
/// `Λ_{t-1,(n-t+3)/2}` when `n - t + 1` is even, else `Λ⁻_{t-1,(n-t+4)/2}`.
pub fn family_recipe(n: usize, t: usize) -> Result<(Graph, FamilySpec)> {
    if t < 5 || n < t {
        return Err(Error::InvalidFamily(format!("recipe needs n >= t >= 5, got n={n}, t={t}")));
    }
    let spec = if (n - t + 1).is_multiple_of(2) {
        FamilySpec::new(FamilyKind::Lambda, vec![t - 1, (n - t + 3) / 2])
    } else {
        FamilySpec::new(FamilyKind::LambdaMinus, vec![t - 1, (n - t + 4) / 2])
    };
    Ok((build_family(&spec)?, spec))
}

/// Uniform labelled tree by decoding a random Prüfer sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    if n <= 2 {
        return path(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(n, &code)
}

pub fn prufer_decode(n: usize, code: &[usize]) -> Result<Graph> {
    if n < 2 || code.len() + 2 != n {
        return Err(Error::InvalidFamily(format!("Prüfer code of length {} for {n} vertices", code.len())));
    }
    let mut degree = vec![1usize; n];
    for &c in code {
        if c >= n {
            return Err(Error::VertexOutOfRange { v: c, n });
        }
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a Prüfer code always leaves a leaf");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_list(n, &edges)
}

/// Tree of cliques: a first clique of 2..=4 vertices, then cliques of the
/// same size range glued at a uniformly chosen existing vertex until `n`
/// vertices exist.
pub fn random_block_graph<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::OrderOutOfRange { n, min: 1, max: MAX_ORDER });
    }
    let first = rng.gen_range(2..=4usize).min(n);
    let mut edges = Vec::new();
    clique_edges(&(0..first).collect::<Vec<_>>(), &mut edges);
    let mut size = first;
    while size < n {
        let attach = rng.gen_range(0..size);
        let grow = rng.gen_range(1..=3usize).min(n - size);
        let members: Vec<usize> = std::iter::once(attach).chain(size..size + grow).collect();
        clique_edges(&members, &mut edges);
        size += grow;
    }
    Graph::from_edge_list(n, &edges)
}

fn clique_edges(members: &[usize], out: &mut Vec<(usize, usize)>) {
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            out.push((a, b));
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    CompleteMinusMatching,
    Star,
    HGraph,
    HMinus,
    Lambda,
    LambdaMinus,
    G6,
    RandomTree,
    RandomBlockGraph,
}

const KINDS: [(FamilyKind, &str, usize); 12] = [
    (FamilyKind::Path, "path", 1),
    (FamilyKind::Cycle, "cycle", 1),
    (FamilyKind::Complete, "complete", 1),
    (FamilyKind::CompleteMinusMatching, "complete_minus_matching", 2),
    (FamilyKind::Star, "star", 1),
    (FamilyKind::HGraph, "h_graph", 1),
    (FamilyKind::HMinus, "h_minus", 1),
    (FamilyKind::Lambda, "lambda", 2),
    (FamilyKind::LambdaMinus, "lambda_minus", 2),
    (FamilyKind::G6, "g6", 0),
    (FamilyKind::RandomTree, "random_tree", 1),
    (FamilyKind::RandomBlockGraph, "random_block_graph", 1),
];

impl FamilyKind {
    pub fn name(self) -> &'static str {
        KINDS.iter().find(|k| k.0 == self).map(|k| k.1).unwrap_or_default()
    }

    pub fn arity(self) -> usize {
        KINDS.iter().find(|k| k.0 == self).map(|k| k.2).unwrap_or_default()
    }

    pub fn is_random(self) -> bool {
        matches!(self, FamilyKind::RandomTree | FamilyKind::RandomBlockGraph)
    }
}

/// A named family member, written `kind[:p1,p2,..][:seed=S]`, e.g.
/// `lambda:5,5`, `g6`, `random_tree:9:seed=42`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Vec<usize>,
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: Vec<usize>) -> Self {
        FamilySpec { kind, params, seed: None }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidFamily(msg);
        let mut parts = s.trim().split(':');
        let name = parts.next().unwrap_or_default();
        let kind = KINDS
            .iter()
            .find(|k| k.1 == name)
            .map(|k| k.0)
            .ok_or_else(|| bad(format!("unknown family `{name}`")))?;
        let mut params = None;
        let mut seed = None;
        for part in parts {
            if let Some(value) = part.strip_prefix("seed=") {
                if seed.is_some() {
                    return Err(bad("seed given twice".into()));
                }
                seed = Some(value.parse::<u64>().map_err(|e| bad(format!("seed `{value}`: {e}")))?);
            } else if params.is_none() && seed.is_none() {
                let list = part
                    .split(',')
                    .map(|p| p.trim().parse::<usize>().map_err(|e| bad(format!("parameter `{p}`: {e}"))))
                    .collect::<Result<Vec<_>>>()?;
                params = Some(list);
            } else {
                return Err(bad(format!("unexpected segment `{part}`")));
            }
        }
        let params = params.unwrap_or_default();
        if params.len() != kind.arity() {
            return Err(bad(format!("{name} takes {} parameter(s), got {}", kind.arity(), params.len())));
        }
        if seed.is_some() && !kind.is_random() {
            return Err(bad(format!("{name} is deterministic and takes no seed")));
        }
        Ok(FamilySpec { kind, params, seed })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.name())?;
        if !self.params.is_empty() {
            let list: Vec<String> = self.params.iter().map(ToString::to_string).collect();
            write!(f, ":{}", list.join(","))?;
        }
        if let Some(seed) = self.seed {
            write!(f, ":seed={seed}")?;
        }
        Ok(())
    }
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    let p = &spec.params;
    if p.len() != spec.kind.arity() {
        return Err(Error::InvalidFamily(format!(
            "{} takes {} parameter(s), got {}",
            spec.kind.name(),
            spec.kind.arity(),
            p.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed.unwrap_or(0));
    match spec.kind {
        FamilyKind::Path => path(p[0]),
        FamilyKind::Cycle => cycle(p[0]),
        FamilyKind::Complete => Graph::complete(p[0]),
        FamilyKind::CompleteMinusMatching => complete_minus_matching(p[0], p[1]),
        FamilyKind::Star => star(p[0]),
        FamilyKind::HGraph => h_graph(p[0]),
        FamilyKind::HMinus => h_minus(p[0]),
        FamilyKind::Lambda => lambda(p[0], p[1]),
        FamilyKind::LambdaMinus => lambda_minus(p[0], p[1]),
        FamilyKind::G6 => Ok(g6()),
        FamilyKind::RandomTree => random_tree(p[0], &mut rng),
        FamilyKind::RandomBlockGraph => random_block_graph(p[0], &mut rng),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{all_have_maximal_neighbor, is_block_graph, is_tree};

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn product_examples() {
        assert_eq!(strong_product(&path(2).unwrap(), &k(2)).unwrap(), k(4));
        let fig1 = strong_product(&path(3).unwrap(), &k(2)).unwrap();
        assert_eq!((fig1.order(), fig1.edge_count()), (6, 11));
        assert!(all_have_maximal_neighbor(&fig1));
        assert_eq!(strong_product(&path(8).unwrap(), &k(8)), Err(Error::ProductTooLarge(8, 8)));
    }

    #[test]
    fn amalgamation_examples() {
        // h's 1 and 2 land on g's 0 and 1; h's 0 becomes vertex 3
        let a = amalgamate(&k(3), Edge::new(0, 1), &k(3), Edge::new(1, 2)).unwrap();
        assert_eq!(a.edge_pairs(), vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(all_have_maximal_neighbor(&a));
        assert_eq!(
            amalgamate(&k(3), Edge::new(0, 1), &path(3).unwrap(), Edge::new(0, 2)),
            Err(Error::EdgeNotPresent { u: 0, v: 2 })
        );
    }

    #[test]
    fn lambda_5_5_shape() {
        let l = lambda(5, 5).unwrap();
        assert_eq!(l.order(), 13);
        assert_eq!(l.max_degree(), 6);
        assert!(all_have_maximal_neighbor(&l));
        let direct = amalgamate(&h_graph(5).unwrap(), RUNG, &k(5), Edge::new(0, 1)).unwrap();
        assert_eq!(l, direct);
        let lm = lambda_minus(5, 5).unwrap();
        assert_eq!(lm.order(), 12);
        let h5m = h_minus(5).unwrap();
        assert_eq!((h5m.order(), h5m.edge_count()), (9, 18));
    }

    #[test]
    fn remove_vertex_examples() {
        assert_eq!(remove_vertex(&k(3), 2).unwrap(), k(2));
        assert_eq!(h_minus(4).unwrap().order(), 7);
        let p = remove_vertex(&path(3).unwrap(), 1).unwrap();
        assert!(!p.is_connected());
        assert_eq!(remove_vertex(&k(3), 3), Err(Error::VertexOutOfRange { v: 3, n: 3 }));
    }

    #[test]
    fn g6_shape() {
        let g = g6();
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.degree_sequence(), vec![4, 4, 4, 4, 2, 2]);
        assert!(all_have_maximal_neighbor(&g));
    }

    #[test]
    fn complete_minus_matching_keeps_two_universal() {
        let g = complete_minus_matching(6, 2).unwrap();
        assert_eq!(crate::structure::universal_vertices(&g).to_vec(), vec![4, 5]);
        assert!(all_have_maximal_neighbor(&g));
        assert!(complete_minus_matching(5, 3).is_err());
    }

    #[test]
    fn family_orders_and_degrees() {
        for kk in 4..=8 {
            for r in 4..=8 {
                let l = lambda(kk, r).unwrap();
                let lm = lambda_minus(kk, r).unwrap();
                assert_eq!(l.order(), kk + 2 * (r - 1));
                assert_eq!(lm.order(), kk + 2 * (r - 1) - 1);
                assert_eq!(l.max_degree(), kk + 1);
                assert_eq!(lm.max_degree(), kk + 1);
                for gr in [&l, &lm, &h_graph(r).unwrap(), &h_minus(r).unwrap()] {
                    assert!(all_have_maximal_neighbor(gr));
                }
            }
        }
    }

    #[test]
    fn spec_parsing() {
        let s: FamilySpec = "lambda:5,5".parse().unwrap();
        assert_eq!(s, FamilySpec::new(FamilyKind::Lambda, vec![5, 5]));
        let s: FamilySpec = "random_tree:9:seed=42".parse().unwrap();
        assert_eq!(s.seed, Some(42));
        assert_eq!(s.to_string(), "random_tree:9:seed=42");
        assert_eq!("g6".parse::<FamilySpec>().unwrap().kind, FamilyKind::G6);
        for bad in ["lambda:5", "nope:3", "path:x", "g6:seed=1", "path:3:4", "random_tree:5:seed=1:seed=2"] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
        }
        assert!(build_family(&"lambda:2,5".parse().unwrap()).is_err());
        assert!(build_family(&"h_graph:1".parse().unwrap()).is_err());
    }

    #[test]
    fn random_families_are_seeded() {
        let a = build_family(&"random_tree:9:seed=7".parse().unwrap()).unwrap();
        let b = build_family(&"random_tree:9:seed=7".parse().unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(is_tree(&a));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=12 {
            let bg = random_block_graph(n, &mut rng).unwrap();
            assert_eq!(bg.order(), n);
            assert!(bg.is_connected());
            assert!(is_block_graph(&bg).unwrap());
        }
    }

    #[test]
    fn prufer_known_code() {
        // code (3,3,3,4) on 6 vertices: star at 3 plus edge 4-5
        let t = prufer_decode(6, &[3, 3, 3, 4]).unwrap();
        assert_eq!(t.edge_pairs(), vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn recipe_small_cases() {
        let (g, spec) = family_recipe(10, 5).unwrap();
        assert_eq!(spec.to_string(), "lambda:4,4");
        assert_eq!((g.order(), g.max_degree()), (10, 5));
        assert!(family_recipe(6, 4).is_err());
    }
}
