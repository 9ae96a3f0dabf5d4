//! Mixed resolving sets: verification, exact minimum search, a greedy upper
//! bound and closed forms for graph classes with known dimension.
//!
//! A vertex set `W` resolves the graph when the vectors
//! `(d(x, w))_{w ∈ W}` are pairwise distinct over all `x ∈ V ∪ E`. All checks
//! here work by partition refinement: the elements start in one class and
//! each vertex of `W` splits the classes by distance. `W` resolves iff every
//! class ends up a singleton.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{distance_matrix, mixed_distance, Graph, MixedElement, VertexSet};
use crate::structure::{
    all_have_maximal_neighbor, cut_vertices_and_blocks, is_clique, is_tree, maximal_neighbor_witness,
    pendant_vertices, universal_vertices,
};

/// Largest order accepted by [`mdim_exact`].
pub const MAX_EXACT_ORDER: usize = 16;

/// Distances from every mixed element to every vertex, stored per vertex.
#[derive(Debug, Clone)]
pub struct ElementTable {
    elements: Vec<MixedElement>,
    columns: Vec<Vec<u8>>,
    max_distance: u8,
}

impl ElementTable {
    /// Requires a connected graph on at least two vertices.
    pub fn new(g: &Graph) -> Result<Self> {
        if g.order() < 2 {
            return Err(Error::OrderOutOfRange { n: g.order(), min: 2, max: crate::graph::MAX_ORDER });
        }
        let d = distance_matrix(g)?;
        let elements = g.mixed_elements();
        let columns = (0..g.order())
            .map(|w| elements.iter().map(|&x| mixed_distance(&d, x, w)).collect())
            .collect();
        Ok(ElementTable { elements, columns, max_distance: d.diameter() })
    }

    pub fn elements(&self) -> &[MixedElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn column(&self, w: usize) -> &[u8] {
        &self.columns[w]
    }

    /// Distance vector of element `i` over `w`, in vertex index order.
    pub fn vector(&self, i: usize, w: VertexSet) -> Vec<u8> {
        w.iter().map(|v| self.columns[v][i]).collect()
    }

    /// Class labels and class count after refining by every vertex of `w`.
    pub fn partition(&self, w: VertexSet) -> (Vec<u16>, usize) {
        let mut refiner = Refiner::new(self.len());
        let mut classes = vec![0u16; self.len()];
        let mut next = vec![0u16; self.len()];
        let mut count = usize::from(!self.is_empty());
        for v in w.iter() {
            count = refiner.refine(&classes, &self.columns[v], &mut next);
            std::mem::swap(&mut classes, &mut next);
        }
        (classes, count)
    }

    pub fn resolves(&self, w: VertexSet) -> bool {
        self.partition(w).1 == self.len()
    }
}

/// Relabels `(class, distance)` pairs densely in first-seen order.
struct Refiner {
    label: Vec<u16>,
    stamp: Vec<u32>,
    generation: u32,
}

impl Refiner {
    fn new(elements: usize) -> Self {
        Refiner { label: vec![0; elements * 64], stamp: vec![0; elements * 64], generation: 0 }
    }

    fn refine(&mut self, classes: &[u16], column: &[u8], out: &mut [u16]) -> usize {
        self.generation += 1;
        let mut next = 0u16;
        for ((&c, &d), slot) in classes.iter().zip(column).zip(out.iter_mut()) {
            let key = usize::from(c) * 64 + usize::from(d);
            if self.stamp[key] != self.generation {
                self.stamp[key] = self.generation;
                self.label[key] = next;
                next += 1;
            }
            *slot = self.label[key];
        }
        usize::from(next)
    }
}

pub fn is_mixed_resolving_set(g: &Graph, w: VertexSet) -> Result<bool> {
    check_subset(g, w)?;
    Ok(ElementTable::new(g)?.resolves(w))
}

/// Two distinct elements with equal distance vectors over the tested set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WitnessPair {
    pub x: MixedElement,
    pub y: MixedElement,
}

impl fmt::Display for WitnessPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ~ {}", self.x, self.y)
    }
}

/// Lexicographically first unresolved pair under the canonical element
/// order, or `None` when `w` resolves `g`.
pub fn witness_failure(g: &Graph, w: VertexSet) -> Result<Option<WitnessPair>> {
    check_subset(g, w)?;
    let table = ElementTable::new(g)?;
    Ok(first_collision(&table, w))
}

pub(crate) fn first_collision(table: &ElementTable, w: VertexSet) -> Option<WitnessPair> {
    let (classes, count) = table.partition(w);
    let mut first = vec![usize::MAX; count];
    let mut second = vec![usize::MAX; count];
    for (i, &c) in classes.iter().enumerate() {
        let c = usize::from(c);
        if first[c] == usize::MAX {
            first[c] = i;
        } else if second[c] == usize::MAX {
            second[c] = i;
        }
    }
    (0..count)
        .filter(|&c| second[c] != usize::MAX)
        .map(|c| (first[c], second[c]))
        .min()
        .map(|(i, j)| WitnessPair { x: table.elements[i], y: table.elements[j] })
}

/// Each element with its distance vector over `w`.
pub fn element_vectors(g: &Graph, w: VertexSet) -> Result<Vec<(MixedElement, Vec<u8>)>> {
    check_subset(g, w)?;
    let table = ElementTable::new(g)?;
    Ok((0..table.len()).map(|i| (table.elements[i], table.vector(i, w))).collect())
}

/// Vertices with a maximal neighbor; they belong to every mixed resolving set.
pub fn forced_vertices(g: &Graph) -> VertexSet {
    (0..g.order()).filter(|&v| maximal_neighbor_witness(g, v).is_some()).collect()
}

/// Closed form that produced (or agrees with) a dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaTag {
    MaxMdim,
    OneUniversal,
    Tree,
    BlockGraph,
}

impl fmt::Display for FormulaTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormulaTag::MaxMdim => "max-mdim",
            FormulaTag::OneUniversal => "one-universal",
            FormulaTag::Tree => "tree",
            FormulaTag::BlockGraph => "block-graph",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MdimResult {
    pub dimension: usize,
    /// Lexicographically first basis within the searched space.
    pub basis: VertexSet,
    pub forced: VertexSet,
    /// Cut vertices left out of the search; empty without pruning.
    pub excluded: VertexSet,
    pub pruned: bool,
    pub nodes_searched: u64,
    /// Closed form that also applies to this graph, if any.
    pub formula_used: Option<FormulaTag>,
}

/// Minimum mixed resolving set by search in increasing cardinality.
///
/// With `use_pruning`, vertices with a maximal neighbor are fixed in the set
/// and cut vertices are never tried. Without it, every subset of `V` is a
/// candidate. Both report the same dimension.
pub fn mdim_exact(g: &Graph, use_pruning: bool) -> Result<MdimResult> {
    let n = g.order();
    if !(2..=MAX_EXACT_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange { n, min: 2, max: MAX_EXACT_ORDER });
    }
    let table = ElementTable::new(g)?;
    let forced = forced_vertices(g);
    let (fixed, excluded) = if use_pruning {
        (forced, cut_vertices_and_blocks(g)?.cut_vertices)
    } else {
        (VertexSet::empty(), VertexSet::empty())
    };
    let candidates: Vec<usize> = VertexSet::full(n).difference(fixed).difference(excluded).iter().collect();

    let mut search = Search::new(&table, candidates);
    let found = search.run(fixed);
    let nodes_searched = search.nodes;
    let basis = found.ok_or(Error::SearchExhausted)?;
    Ok(MdimResult {
        dimension: basis.len(),
        basis,
        forced,
        excluded,
        pruned: use_pruning,
        nodes_searched,
        formula_used: mdim_by_formula(g)?.map(|(_, tag)| tag),
    })
}

struct Search<'a> {
    table: &'a ElementTable,
    candidates: Vec<usize>,
    refiner: Refiner,
    /// Partition after each depth of the current branch.
    levels: Vec<Vec<u16>>,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(table: &'a ElementTable, candidates: Vec<usize>) -> Self {
        let levels = vec![vec![0u16; table.len()]; candidates.len() + 2];
        Search { refiner: Refiner::new(table.len()), table, candidates, levels, nodes: 0 }
    }

    fn run(&mut self, fixed: VertexSet) -> Option<VertexSet> {
        let m = self.table.len();
        let mut base_count = 1;
        for v in fixed.iter() {
            let (head, tail) = self.levels.split_at_mut(1);
            base_count = self.refiner.refine(&head[0], &self.table.columns[v], &mut tail[0]);
            head[0].copy_from_slice(&tail[0]);
            self.nodes += 1;
        }
        let start = fixed.len().max(1);
        for k in start..=fixed.len() + self.candidates.len() {
            let picks = k - fixed.len();
            if picks == 0 {
                if base_count == m {
                    return Some(fixed);
                }
                continue;
            }
            let mut chosen = Vec::with_capacity(picks);
            if self.extend(0, 0, base_count, picks, &mut chosen) {
                return Some(fixed.union(chosen.into_iter().collect()));
            }
        }
        None
    }

    /// Depth-first over `picks`-subsets of the remaining candidates in
    /// lexicographic order; `chosen` holds the branch on success.
    fn extend(&mut self, depth: usize, from: usize, count: usize, picks: usize, chosen: &mut Vec<usize>) -> bool {
        let m = self.table.len();
        if picks == 0 {
            return count == m;
        }
        // a column separates at most (max distance + 1) values per class
        let fanout = u64::from(self.table.max_distance) + 1;
        let reachable = (0..picks).fold(count as u64, |acc, _| acc.saturating_mul(fanout));
        if reachable < m as u64 {
            return false;
        }
        let last = self.candidates.len() - picks;
        for i in from..=last {
            let v = self.candidates[i];
            let (head, tail) = self.levels.split_at_mut(depth + 1);
            let next = self.refiner.refine(&head[depth], &self.table.columns[v], &mut tail[0]);
            self.nodes += 1;
            chosen.push(v);
            if self.extend(depth + 1, i + 1, next, picks - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// Greedy resolving set: repeatedly add the vertex leaving the fewest
/// unresolved pairs, ties to the smallest index.
pub fn mdim_upper_greedy(g: &Graph) -> Result<(usize, VertexSet)> {
    let table = ElementTable::new(g)?;
    let m = table.len();
    let mut refiner = Refiner::new(m);
    let mut classes = vec![0u16; m];
    let mut scratch = vec![0u16; m];
    let mut best_classes = vec![0u16; m];
    let mut chosen = VertexSet::empty();
    let mut unresolved = unresolved_pairs(&classes, 1);
    while unresolved > 0 {
        let mut best: Option<(u64, usize)> = None;
        for v in VertexSet::full(g.order()).difference(chosen).iter() {
            let count = refiner.refine(&classes, &table.columns[v], &mut scratch);
            let left = unresolved_pairs(&scratch, count);
            if best.is_none_or(|(b, _)| left < b) {
                best = Some((left, v));
                best_classes.copy_from_slice(&scratch);
            }
        }
        // V always resolves, so candidates never run out first
        let (left, v) = best.expect("vertex set exhausted before resolving");
        chosen.insert(v);
        std::mem::swap(&mut classes, &mut best_classes);
        unresolved = left;
    }
    Ok((chosen.len(), chosen))
}

fn unresolved_pairs(classes: &[u16], count: usize) -> u64 {
    let mut sizes = vec![0u64; count];
    for &c in classes {
        sizes[usize::from(c)] += 1;
    }
    sizes.iter().map(|&s| s * s.saturating_sub(1) / 2).sum()
}

/// Dimension from a closed form when `g` falls in a solved class.
///
/// Checked in order: every vertex has a maximal neighbor (`n`), tree (number
/// of leaves), block graph (`n - ζ`), exactly one universal vertex (`n - 1`).
pub fn mdim_by_formula(g: &Graph) -> Result<Option<(usize, FormulaTag)>> {
    let n = g.order();
    if n < 2 {
        return Err(Error::OrderOutOfRange { n, min: 2, max: crate::graph::MAX_ORDER });
    }
    g.require_connected()?;
    if all_have_maximal_neighbor(g) {
        return Ok(Some((n, FormulaTag::MaxMdim)));
    }
    if is_tree(g) {
        return Ok(Some((pendant_vertices(g).len(), FormulaTag::Tree)));
    }
    let dec = cut_vertices_and_blocks(g)?;
    if dec.blocks.iter().all(|&b| is_clique(g, b)) {
        return Ok(Some((n - dec.cut_vertices.len(), FormulaTag::BlockGraph)));
    }
    if universal_vertices(g).len() == 1 {
        return Ok(Some((n - 1, FormulaTag::OneUniversal)));
    }
    Ok(None)
}

fn check_subset(g: &Graph, w: VertexSet) -> Result<()> {
    match w.difference(VertexSet::full(g.order())).first() {
        Some(v) => Err(Error::VertexOutOfRange { v, n: g.order() }),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        g(n, &e)
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        g(n, &e)
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    fn g6() -> Graph {
        g(6, &[(0, 1), (1, 3), (3, 5), (4, 5), (2, 4), (0, 2), (1, 2), (1, 4), (3, 4), (2, 3)])
    }

    fn wheel6() -> Graph {
        let mut e: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, 5)));
        g(6, &e)
    }

    /// Pairwise comparison of full distance vectors, no refinement.
    fn naive_resolves(g: &Graph, w: VertexSet) -> bool {
        let d = distance_matrix(g).unwrap();
        let elems = g.mixed_elements();
        let vec_of = |x: MixedElement| w.iter().map(|v| mixed_distance(&d, x, v)).collect::<Vec<_>>();
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                if vec_of(elems[i]) == vec_of(elems[j]) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn resolving_set_examples() {
        assert!(naive_resolves(&path(3), set(&[0, 2])));
        assert!(is_mixed_resolving_set(&path(3), set(&[0, 2])).unwrap());
        assert!(!naive_resolves(&k(3), set(&[0, 1])));
        assert!(!is_mixed_resolving_set(&k(3), set(&[0, 1])).unwrap());
        for gr in [path(5), cycle(6), k(4), g6()] {
            assert!(is_mixed_resolving_set(&gr, VertexSet::full(gr.order())).unwrap());
        }
    }

    #[test]
    fn resolving_set_errors() {
        assert!(matches!(is_mixed_resolving_set(&path(3), set(&[3])), Err(Error::VertexOutOfRange { .. })));
        let disconnected = g(4, &[(0, 1), (2, 3)]);
        assert_eq!(is_mixed_resolving_set(&disconnected, set(&[0])), Err(Error::Disconnected));
        let single = Graph::from_edge_list(1, &[]).unwrap();
        assert!(matches!(mdim_exact(&single, true), Err(Error::OrderOutOfRange { .. })));
        assert!(matches!(mdim_exact(&path(17), true), Err(Error::OrderOutOfRange { .. })));
    }

    #[test]
    fn witnesses() {
        assert_eq!(witness_failure(&path(3), set(&[0, 2])).unwrap(), None);
        // v0 ~ e02 at (0, 1) and v1 ~ e12 at (1, 0); v2 and e01 differ
        assert_eq!(
            witness_failure(&k(3), set(&[0, 1])).unwrap(),
            Some(WitnessPair { x: MixedElement::vertex(0), y: MixedElement::Edge { u: 0, v: 2 } })
        );
        let vectors = element_vectors(&k(3), set(&[0, 1])).unwrap();
        assert_eq!((vectors[2].1.clone(), vectors[3].1.clone()), (vec![1, 1], vec![0, 0]));
        assert_eq!(vectors[1].1, vectors[5].1);
        assert_eq!(
            witness_failure(&path(3), VertexSet::empty()).unwrap(),
            Some(WitnessPair { x: MixedElement::vertex(0), y: MixedElement::vertex(1) })
        );
    }

    #[test]
    fn witness_is_lexicographically_first() {
        // brute force over all pairs for every subset of a few graphs
        for gr in [cycle(5), k(4), g6(), path(4)] {
            let d = distance_matrix(&gr).unwrap();
            let elems = gr.mixed_elements();
            for bits in 0..1u64 << gr.order() {
                let w = VertexSet::from_bits(bits);
                let vec_of = |x| w.iter().map(|v| mixed_distance(&d, x, v)).collect::<Vec<_>>();
                let mut expected = None;
                'outer: for i in 0..elems.len() {
                    for j in i + 1..elems.len() {
                        if vec_of(elems[i]) == vec_of(elems[j]) {
                            expected = Some(WitnessPair { x: elems[i], y: elems[j] });
                            break 'outer;
                        }
                    }
                }
                assert_eq!(witness_failure(&gr, w).unwrap(), expected);
            }
        }
    }

    #[test]
    fn forced() {
        assert_eq!(forced_vertices(&k(4)), VertexSet::full(4));
        assert_eq!(forced_vertices(&path(4)), set(&[0, 3]));
        assert!(forced_vertices(&cycle(5)).is_empty());
    }

    #[test]
    fn exact_examples() {
        assert_eq!(mdim_exact(&k(5), true).unwrap().dimension, 5);
        assert_eq!(mdim_exact(&g6(), true).unwrap().dimension, 6);
        let p4 = mdim_exact(&path(4), true).unwrap();
        assert_eq!((p4.dimension, p4.basis), (2, set(&[0, 3])));
        assert_eq!(mdim_exact(&path(4), false).unwrap().basis, set(&[0, 3]));
        // C4: no 2-subset resolves, {0,1,2} does (checked by naive_resolves)
        let c4 = cycle(4);
        let brute = (0..16u64)
            .map(VertexSet::from_bits)
            .filter(|&w| naive_resolves(&c4, w))
            .map(VertexSet::len)
            .min()
            .unwrap();
        assert_eq!(brute, 3);
        for prune in [true, false] {
            let r = mdim_exact(&c4, prune).unwrap();
            assert_eq!(r.dimension, 3);
            assert_eq!(r.basis, set(&[0, 1, 2]));
        }
    }

    #[test]
    fn exact_matches_naive_minimum() {
        for gr in [cycle(5), cycle(6), wheel6(), path(6), g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)])] {
            let n = gr.order();
            let best = (0..1u64 << n)
                .map(VertexSet::from_bits)
                .filter(|&w| naive_resolves(&gr, w))
                .min_by_key(|w| (w.len(), w.to_vec()))
                .unwrap();
            let unpruned = mdim_exact(&gr, false).unwrap();
            assert_eq!(unpruned.dimension, best.len());
            assert_eq!(unpruned.basis, best);
            let pruned = mdim_exact(&gr, true).unwrap();
            assert_eq!(pruned.dimension, best.len());
            assert!(pruned.forced.is_subset(pruned.basis));
            assert!(pruned.basis.intersection(pruned.excluded).is_empty());
        }
    }

    #[test]
    fn greedy() {
        assert_eq!(mdim_upper_greedy(&k(3)).unwrap(), (3, set(&[0, 1, 2])));
        let (size, w) = mdim_upper_greedy(&path(4)).unwrap();
        assert!(size >= 2);
        assert!(is_mixed_resolving_set(&path(4), w).unwrap());
        for gr in [cycle(7), wheel6(), g6()] {
            let (size, w) = mdim_upper_greedy(&gr).unwrap();
            assert!(naive_resolves(&gr, w));
            assert!(size >= mdim_exact(&gr, true).unwrap().dimension);
        }
    }

    #[test]
    fn formulas() {
        assert_eq!(mdim_by_formula(&wheel6()).unwrap(), Some((5, FormulaTag::OneUniversal)));
        let bowtie = g(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(mdim_by_formula(&bowtie).unwrap(), Some((4, FormulaTag::BlockGraph)));
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(mdim_by_formula(&star).unwrap(), Some((3, FormulaTag::Tree)));
        assert_eq!(mdim_by_formula(&k(4)).unwrap(), Some((4, FormulaTag::MaxMdim)));
        assert_eq!(mdim_by_formula(&cycle(5)).unwrap(), None);
        for gr in [wheel6(), bowtie, star, k(4), path(6)] {
            let (dim, _) = mdim_by_formula(&gr).unwrap().unwrap();
            assert_eq!(dim, mdim_exact(&gr, false).unwrap().dimension);
        }
    }

    #[test]
    fn tree_leaves_equal_n_minus_zeta() {
        let t = g(7, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (5, 6)]);
        let zeta = cut_vertices_and_blocks(&t).unwrap().cut_vertices.len();
        assert_eq!(pendant_vertices(&t).len(), t.order() - zeta);
    }

    #[test]
    fn certificate_vectors() {
        let rows = element_vectors(&path(3), set(&[0, 2])).unwrap();
        assert_eq!(rows.len(), 5);
        assert_eq!(rows[3], (MixedElement::Edge { u: 0, v: 1 }, vec![0, 1]));
    }
}
