//! Multi-hypergraphs under the polynomial encoding.
//!
//! An edge is a monomial: a multiset of vertex labels, each occurrence being
//! one *end* of the edge. An `A`-augmented edge additionally decorates every
//! end with a symbol from a finite alphabet; the only alphabet used here is
//! `{_, >}` (unlabelled end, arrow head). Plain graphs use `_` everywhere.
//!
//! Vertices are tracked explicitly so that isolated vertices (and the empty
//! graph on a vertex set) are representable.

mod enumerate;
mod shape;
mod substitute;
mod trees;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub use enumerate::{
    all_graphs, all_multigraphs, all_oriented_multigraphs, all_trees, multigraphs_with_edges,
};
pub use shape::{canonical_bytes, shape_key, ShapeKey, SHAPE_BOUND};
pub use substitute::{substitute, Replacement};
pub use trees::{
    forget_orientation, iota, orient_by_tree, orient_tree, spanning_trees, RootedGraph,
};

/// A vertex name. Labels are totally ordered by their numeric value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(pub u32);

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for Label {
    fn from(v: u32) -> Self {
        Label(v)
    }
}

/// Decoration of one end of an edge.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum EndSym {
    /// `_`: the unlabelled end.
    Plain,
    /// `>`: an arrow head.
    Arrow,
}

impl EndSym {
    pub fn symbol(self) -> &'static str {
        match self {
            EndSym::Plain => "_",
            EndSym::Arrow => ">",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Self> {
        match s {
            "_" => Some(EndSym::Plain),
            ">" => Some(EndSym::Arrow),
            _ => None,
        }
    }
}

/// One end of an edge.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct End {
    pub vertex: Label,
    pub sym: EndSym,
}

impl End {
    pub fn new(vertex: Label, sym: EndSym) -> Self {
        Self { vertex, sym }
    }

    pub fn plain(vertex: Label) -> Self {
        Self::new(vertex, EndSym::Plain)
    }
}

/// An edge: a nonempty multiset of ends, stored sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    ends: SmallVec<[End; 2]>,
}

impl Edge {
    pub fn new<I: IntoIterator<Item = End>>(ends: I) -> Self {
        let mut ends: SmallVec<[End; 2]> = ends.into_iter().collect();
        ends.sort_unstable();
        Self { ends }
    }

    /// The plain edge `uv` (a loop when `u == v`).
    pub fn pair(u: Label, v: Label) -> Self {
        Self::new([End::plain(u), End::plain(v)])
    }

    /// Oriented edge `u -> v`: unlabelled at `u`, arrow head at `v`.
    pub fn arc(u: Label, v: Label) -> Self {
        Self::new([End::plain(u), End::new(v, EndSym::Arrow)])
    }

    pub fn ends(&self) -> &[End] {
        &self.ends
    }

    /// Total multiplicity of the monomial.
    pub fn degree(&self) -> usize {
        self.ends.len()
    }

    pub fn is_loop(&self) -> bool {
        self.ends.len() == 2 && self.ends[0].vertex == self.ends[1].vertex
    }

    pub fn touches(&self, v: Label) -> bool {
        self.ends.iter().any(|e| e.vertex == v)
    }

    /// Exponents of the underlying monomial, forgetting end symbols.
    pub fn exponents(&self) -> Vec<(Label, u32)> {
        let mut out: Vec<(Label, u32)> = Vec::new();
        let mut labels: SmallVec<[Label; 4]> = self.ends.iter().map(|e| e.vertex).collect();
        labels.sort_unstable();
        for l in labels {
            match out.last_mut() {
                Some((last, m)) if *last == l => *m += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }

    pub fn is_plain(&self) -> bool {
        self.ends.iter().all(|e| e.sym == EndSym::Plain)
    }

    pub fn forget(&self) -> Edge {
        Edge::new(self.ends.iter().map(|e| End::plain(e.vertex)))
    }

    pub(crate) fn map_vertices<F: FnMut(Label) -> Label>(&self, mut f: F) -> Edge {
        Edge::new(self.ends.iter().map(|e| End::new(f(e.vertex), e.sym)))
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.ends.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            write!(f, "{}", e.vertex)?;
            if e.sym == EndSym::Arrow {
                f.write_str(">")?;
            }
        }
        Ok(())
    }
}

/// A vertex set together with a multiset of edges.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiHyperGraph {
    vertices: Vec<Label>,
    edges: Vec<Edge>,
}

impl MultiHyperGraph {
    /// Builds a graph, checking that every end lies on a vertex.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = Label>,
        E: IntoIterator<Item = Edge>,
    {
        let mut vertices: Vec<Label> = vertices.into_iter().collect();
        vertices.sort_unstable();
        let before = vertices.len();
        vertices.dedup();
        if vertices.len() != before {
            return Err(Error::Invalid("repeated vertex".into()));
        }
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        for e in &edges {
            if e.degree() == 0 {
                return Err(Error::Invalid("empty edge".into()));
            }
            for end in e.ends() {
                if vertices.binary_search(&end.vertex).is_err() {
                    return Err(Error::MissingLabel(end.vertex));
                }
            }
        }
        edges.sort_unstable();
        Ok(Self { vertices, edges })
    }

    /// Internal constructor for already validated parts.
    pub(crate) fn from_parts(mut vertices: Vec<Label>, mut edges: Vec<Edge>) -> Self {
        vertices.sort_unstable();
        edges.sort_unstable();
        Self { vertices, edges }
    }

    /// Plain multigraph from vertex labels and unordered pairs.
    pub fn multigraph(vertices: &[u32], pairs: &[(u32, u32)]) -> Result<Self> {
        Self::new(
            vertices.iter().map(|&v| Label(v)),
            pairs.iter().map(|&(u, v)| Edge::pair(Label(u), Label(v))),
        )
    }

    /// The empty graph on a vertex set.
    pub fn empty<V: IntoIterator<Item = Label>>(vertices: V) -> Self {
        let mut vertices: Vec<Label> = vertices.into_iter().collect();
        vertices.sort_unstable();
        vertices.dedup();
        Self {
            vertices,
            edges: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[Label] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: Label) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Every edge has exactly two ends.
    pub fn is_multigraph(&self) -> bool {
        self.edges.iter().all(|e| e.degree() == 2)
    }

    /// A multigraph without loops or repeated edges.
    pub fn is_graph(&self) -> bool {
        self.is_multigraph()
            && self.edges.iter().all(|e| !e.is_loop())
            && self
                .edges
                .windows(2)
                .all(|w| w[0].forget() != w[1].forget())
            && {
                let mut plain: Vec<Edge> = self.edges.iter().map(Edge::forget).collect();
                plain.sort_unstable();
                plain.windows(2).all(|w| w[0] != w[1])
            }
    }

    /// No end carries an arrow.
    pub fn is_plain(&self) -> bool {
        self.edges.iter().all(Edge::is_plain)
    }

    /// Vertices are connected when they share an edge; the graph is connected
    /// when this relation links every pair of vertices.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A graph with no cycle of distinct edges.
    pub fn is_forest(&self) -> bool {
        if !self.is_graph() {
            return false;
        }
        let mut uf = UnionFind::new(&self.vertices);
        for e in &self.edges {
            let (a, b) = (e.ends[0].vertex, e.ends[1].vertex);
            if !uf.union(a, b) {
                return false;
            }
        }
        true
    }

    pub fn is_tree(&self) -> bool {
        self.is_forest() && self.is_connected() && !self.vertices.is_empty()
    }

    /// Vertex sets of the connected components, each sorted, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<Label>> {
        let mut uf = UnionFind::new(&self.vertices);
        for e in &self.edges {
            let first = e.ends[0].vertex;
            for end in &e.ends[1..] {
                uf.union(first, end.vertex);
            }
        }
        let mut groups: BTreeMap<Label, Vec<Label>> = BTreeMap::new();
        for &v in &self.vertices {
            groups.entry(uf.find(v)).or_default().push(v);
        }
        let mut out: Vec<Vec<Label>> = groups.into_values().collect();
        out.sort();
        out
    }

    /// Other ends of the non-loop edges at `v`, with multiplicity.
    pub fn neighbors(&self, v: Label) -> Result<Vec<Label>> {
        if !self.has_vertex(v) {
            return Err(Error::MissingLabel(v));
        }
        let mut out = Vec::new();
        for e in &self.edges {
            if e.is_loop() || !e.touches(v) {
                continue;
            }
            for end in e.ends() {
                if end.vertex != v {
                    out.push(end.vertex);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Number of `v²` edges.
    pub fn loop_count(&self, v: Label) -> Result<usize> {
        if !self.has_vertex(v) {
            return Err(Error::MissingLabel(v));
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| e.is_loop() && e.ends[0].vertex == v)
            .count())
    }

    /// Transports the graph along a bijection given as a map on its vertices.
    pub fn relabel(&self, sigma: &BTreeMap<Label, Label>) -> Result<Self> {
        let mut image = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            image.push(*sigma.get(v).ok_or(Error::NotBijection)?);
        }
        let mut sorted = image.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != image.len() {
            return Err(Error::NotBijection);
        }
        Ok(self.relabel_with(|l| sigma[&l]))
    }

    /// Relabels with a function assumed injective on the vertex set.
    pub fn relabel_with<F: FnMut(Label) -> Label>(&self, mut f: F) -> Self {
        let vertices = self.vertices.iter().map(|&v| f(v)).collect();
        let edges = self.edges.iter().map(|e| e.map_vertices(&mut f)).collect();
        Self::from_parts(vertices, edges)
    }

    /// Disjoint union (polynomial sum) with a graph on a disjoint vertex set.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        for v in &other.vertices {
            if self.has_vertex(*v) {
                return Err(Error::Overlap(*v));
            }
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices);
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Ok(Self::from_parts(vertices, edges))
    }

    /// Drops every end symbol.
    pub fn forget_symbols(&self) -> Self {
        Self::from_parts(
            self.vertices.clone(),
            self.edges.iter().map(Edge::forget).collect(),
        )
    }

    /// Multiset difference of edges, keeping the vertex set.
    pub fn without_edges(&self, remove: &[Edge]) -> Result<Self> {
        let mut edges = self.edges.clone();
        for e in remove {
            let i = edges
                .iter()
                .position(|x| x == e)
                .ok_or_else(|| Error::Invalid("edge not present".into()))?;
            edges.remove(i);
        }
        Ok(Self::from_parts(self.vertices.clone(), edges))
    }

    /// Adds edges (multiset union), checking that their ends are vertices.
    pub fn with_edges<I: IntoIterator<Item = Edge>>(&self, extra: I) -> Result<Self> {
        let mut edges = self.edges.clone();
        for e in extra {
            for end in e.ends() {
                if !self.has_vertex(end.vertex) {
                    return Err(Error::MissingLabel(end.vertex));
                }
            }
            edges.push(e);
        }
        Ok(Self::from_parts(self.vertices.clone(), edges))
    }
}

impl fmt::Debug for MultiHyperGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{:?} | {:?}}}", self.vertices, self.edges)
    }
}

struct UnionFind {
    labels: Vec<Label>,
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(labels: &[Label]) -> Self {
        Self {
            labels: labels.to_vec(),
            parent: (0..labels.len()).collect(),
        }
    }

    fn idx(&self, l: Label) -> usize {
        self.labels.binary_search(&l).expect("vertex")
    }

    fn root(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn find(&mut self, l: Label) -> Label {
        let i = self.idx(l);
        let r = self.root(i);
        self.labels[r]
    }

    /// Returns `false` when `a` and `b` were already linked.
    fn union(&mut self, a: Label, b: Label) -> bool {
        let (ra, rb) = (self.root(self.idx(a)), self.root(self.idx(b)));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn l(v: u32) -> Label {
        Label(v)
    }

    #[test]
    fn predicates() {
        let tri = MultiHyperGraph::multigraph(&[1, 2, 3], &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(tri.is_graph() && tri.is_connected() && !tri.is_forest());
        let path = MultiHyperGraph::multigraph(&[1, 2, 3], &[(1, 2), (2, 3)]).unwrap();
        assert!(path.is_tree());
        let double = MultiHyperGraph::multigraph(&[1, 2], &[(1, 2), (1, 2)]).unwrap();
        assert!(double.is_multigraph() && !double.is_graph());
        let lp = MultiHyperGraph::multigraph(&[1], &[(1, 1)]).unwrap();
        assert!(!lp.is_graph());
        let pts = MultiHyperGraph::empty([l(1), l(2)]);
        assert!(pts.is_forest() && !pts.is_connected() && !pts.is_tree());
        assert!(MultiHyperGraph::empty([l(1)]).is_tree());
    }

    #[test]
    fn edge_ends_must_be_vertices() {
        assert_eq!(
            MultiHyperGraph::multigraph(&[1], &[(1, 2)]),
            Err(Error::MissingLabel(l(2)))
        );
    }

    #[test]
    fn neighbors_and_loops() {
        let g = MultiHyperGraph::multigraph(&[1, 2], &[(1, 2), (1, 2)]).unwrap();
        assert_eq!(g.neighbors(l(1)).unwrap(), vec![l(2), l(2)]);
        assert_eq!(g.loop_count(l(1)).unwrap(), 0);
        let lp = MultiHyperGraph::multigraph(&[1], &[(1, 1)]).unwrap();
        assert!(lp.neighbors(l(1)).unwrap().is_empty());
        assert_eq!(lp.loop_count(l(1)).unwrap(), 1);
        // double edge a–* plus a loop on *
        let (a, star) = (1, 9);
        let g =
            MultiHyperGraph::multigraph(&[a, star], &[(a, star), (a, star), (star, star)]).unwrap();
        assert_eq!(g.neighbors(l(star)).unwrap(), vec![l(a), l(a)]);
        assert_eq!(g.loop_count(l(star)).unwrap(), 1);
        assert_eq!(g.neighbors(l(5)), Err(Error::MissingLabel(l(5))));
    }

    #[test]
    fn relabel_basics() {
        let g = MultiHyperGraph::multigraph(&[1, 2], &[(1, 2)]).unwrap();
        let id: BTreeMap<Label, Label> = [(l(1), l(1)), (l(2), l(2))].into_iter().collect();
        assert_eq!(g.relabel(&id).unwrap(), g);
        let swap: BTreeMap<Label, Label> = [(l(1), l(2)), (l(2), l(1))].into_iter().collect();
        assert_eq!(g.relabel(&swap).unwrap(), g);
        let lp = MultiHyperGraph::multigraph(&[1], &[(1, 1)]).unwrap();
        let m: BTreeMap<Label, Label> = [(l(1), l(3))].into_iter().collect();
        assert_eq!(
            lp.relabel(&m).unwrap(),
            MultiHyperGraph::multigraph(&[3], &[(3, 3)]).unwrap()
        );
        let bad: BTreeMap<Label, Label> = [(l(1), l(3)), (l(2), l(3))].into_iter().collect();
        assert_eq!(g.relabel(&bad), Err(Error::NotBijection));
        let partial: BTreeMap<Label, Label> = [(l(1), l(3))].into_iter().collect();
        assert_eq!(g.relabel(&partial), Err(Error::NotBijection));
    }

    #[test]
    fn relabel_is_a_group_action() {
        // exhaustive on |V| = 4: σ∘τ acts as σ after τ
        use crate::perm::permutations;
        let g =
            MultiHyperGraph::multigraph(&[0, 1, 2, 3], &[(0, 1), (1, 2), (1, 1), (2, 3), (2, 3)])
                .unwrap();
        let perms = permutations(4);
        let as_map = |p: &Vec<usize>| -> BTreeMap<Label, Label> {
            (0..4).map(|i| (l(i as u32), l(p[i] as u32))).collect()
        };
        for s in &perms {
            for t in &perms {
                let st: Vec<usize> = (0..4).map(|i| s[t[i]]).collect();
                let lhs = g.relabel(&as_map(&st)).unwrap();
                let rhs = g.relabel(&as_map(t)).unwrap().relabel(&as_map(s)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn exponents_of_monomial() {
        let e = Edge::new([End::plain(l(1)), End::plain(l(1)), End::plain(l(2))]);
        assert_eq!(e.exponents(), vec![(l(1), 2), (l(2), 1)]);
        assert_eq!(e.degree(), 3);
    }
}
