//! Concrete graph insertion operads.
//!
//! Every instance composes by the same rule: the edges at the hole `∗` are
//! cut loose and each loose end is reconnected into the inserted structure.
//! Where an end goes is decided by its symbol: either to every vertex of the
//! inserted structure (summed) or to its root.

mod axioms;
mod plie;
mod sample;
mod spanning;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{substitute, EndSym, Label, MultiHyperGraph, Replacement};
use crate::linalg::{LinComb, Rational};

pub use axioms::{
    check_diagrams, check_units, default_edge_cap, random_case, AxiomReport, AxiomSuite, Triple,
};
pub use plie::{plie_compose, plie_compose_embedded, psi};
pub use sample::{carrier_elements, random_element};
pub use spanning::{forget_oriented, is_st, o1_element, o2_element, st_element};

/// A (possibly rooted) structure: the basis elements of every instance.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Structure {
    pub graph: MultiHyperGraph,
    pub root: Option<Label>,
}

impl Structure {
    pub fn unrooted(graph: MultiHyperGraph) -> Self {
        Self { graph, root: None }
    }

    pub fn rooted(graph: MultiHyperGraph, root: Label) -> Result<Self> {
        if !graph.has_vertex(root) {
            return Err(Error::MissingLabel(root));
        }
        Ok(Self {
            graph,
            root: Some(root),
        })
    }

    /// The one-vertex, edgeless structure.
    pub fn unit(v: Label, rooted: bool) -> Self {
        Self {
            graph: MultiHyperGraph::empty([v]),
            root: rooted.then_some(v),
        }
    }

    pub fn vertices(&self) -> &[Label] {
        self.graph.vertices()
    }

    pub fn arity(&self) -> usize {
        self.graph.order()
    }

    /// Edge count; every composition adds the grades of its operands.
    pub fn grade(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn relabel_with<F: FnMut(Label) -> Label>(&self, mut f: F) -> Self {
        Self {
            graph: self.graph.relabel_with(&mut f),
            root: self.root.map(f),
        }
    }
}

/// Which structures an instance is made of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Carrier {
    /// Edgeless graphs: one structure per vertex set.
    Sets,
    /// Only the single vertex.
    Identity,
    MultiGraphs,
    ConnectedMultiGraphs,
    Graphs,
    ConnectedGraphs,
    Trees,
    RootedGraphs,
    RootedOrientedMultiGraphs,
    RootedConnectedOrientedMultiGraphs,
    RootedTrees,
}

impl Carrier {
    pub fn rooted(self) -> bool {
        matches!(
            self,
            Carrier::RootedGraphs
                | Carrier::RootedOrientedMultiGraphs
                | Carrier::RootedConnectedOrientedMultiGraphs
                | Carrier::RootedTrees
        )
    }

    pub fn oriented(self) -> bool {
        matches!(
            self,
            Carrier::RootedOrientedMultiGraphs | Carrier::RootedConnectedOrientedMultiGraphs
        )
    }

    /// Why `s` is not in the carrier, if it is not.
    pub fn reject(self, s: &Structure) -> Option<String> {
        let g = &s.graph;
        if g.order() == 0 {
            return Some("empty vertex set".into());
        }
        if s.root.is_some() != self.rooted() {
            return Some(
                if self.rooted() {
                    "missing root"
                } else {
                    "unexpected root"
                }
                .into(),
            );
        }
        if !self.oriented() && !g.is_plain() {
            return Some("unexpected end labels".into());
        }
        let ok = match self {
            Carrier::Sets => g.edge_count() == 0,
            Carrier::Identity => g.edge_count() == 0 && g.order() == 1,
            Carrier::MultiGraphs | Carrier::RootedOrientedMultiGraphs => g.is_multigraph(),
            Carrier::ConnectedMultiGraphs | Carrier::RootedConnectedOrientedMultiGraphs => {
                g.is_multigraph() && g.is_connected()
            }
            Carrier::Graphs | Carrier::RootedGraphs => g.is_graph(),
            Carrier::ConnectedGraphs => g.is_graph() && g.is_connected(),
            Carrier::Trees | Carrier::RootedTrees => g.is_tree(),
        };
        (!ok).then(|| format!("{self:?} requirement fails"))
    }
}

/// Where a loose end with a given symbol is reconnected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndPolicy {
    /// To the formal sum of all vertices of the inserted structure.
    SumAllVertices,
    /// To the root of the inserted structure.
    RootVertex,
}

/// A named operad of graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Instance {
    pub name: &'static str,
    pub carrier: Carrier,
    pub plain: EndPolicy,
    pub arrow: EndPolicy,
}

impl Instance {
    const fn new(name: &'static str, carrier: Carrier, plain: EndPolicy, arrow: EndPolicy) -> Self {
        Self {
            name,
            carrier,
            plain,
            arrow,
        }
    }

    pub fn rooted(&self) -> bool {
        self.carrier.rooted()
    }

    pub fn policy(&self, s: EndSym) -> EndPolicy {
        match s {
            EndSym::Plain => self.plain,
            EndSym::Arrow => self.arrow,
        }
    }

    pub fn unit(&self, v: Label) -> Structure {
        Structure::unit(v, self.rooted())
    }

    pub fn check(&self, s: &Structure) -> Result<()> {
        match self.carrier.reject(s) {
            None => Ok(()),
            Some(reason) => Err(Error::Carrier {
                operad: self.name.to_string(),
                reason,
            }),
        }
    }

    /// Partial composition `x ∘_star y` on basis elements.
    pub fn compose_basis(
        &self,
        x: &Structure,
        star: Label,
        y: &Structure,
    ) -> Result<LinComb<Structure>> {
        if !x.graph.has_vertex(star) {
            return Err(Error::MissingLabel(star));
        }
        self.check(x)?;
        self.check(y)?;
        for &v in y.vertices() {
            if v != star && x.graph.has_vertex(v) {
                return Err(Error::Overlap(v));
            }
        }
        if self.carrier == Carrier::RootedTrees {
            return plie::direct(x, star, y);
        }
        // an unrooted single vertex is its own root
        let y_root = y.root.or_else(|| (y.arity() == 1).then(|| y.vertices()[0]));
        let target = |p: EndPolicy| -> Result<LinComb<Label>> {
            match p {
                EndPolicy::SumAllVertices => {
                    Ok(y.vertices().iter().map(|&v| (v, Rational::one())).collect())
                }
                EndPolicy::RootVertex => y_root
                    .map(LinComb::basis)
                    .ok_or_else(|| Error::Invalid("root policy needs a rooted operand".into())),
            }
        };
        let repl = Replacement::new(target(self.plain)?, target(self.arrow)?);
        let root = match x.root {
            Some(r) if r == star => y.root,
            r => r,
        };
        let graphs = substitute(&x.graph, star, &repl, &y.graph)?;
        let mut out = LinComb::zero();
        for (g, c) in graphs.into_terms() {
            let s = Structure { graph: g, root };
            self.check(&s)?;
            out.add_term(s, c);
        }
        Ok(out)
    }

    /// Bilinear partial composition.
    pub fn compose(
        &self,
        x: &LinComb<Structure>,
        star: Label,
        y: &LinComb<Structure>,
    ) -> Result<LinComb<Structure>> {
        x.bilinear(y, |a, b| self.compose_basis(a, star, b))
    }

    /// All named instances.
    pub fn all() -> &'static [Instance] {
        &ALL
    }

    pub fn by_name(name: &str) -> Option<Instance> {
        let lower = name.to_ascii_lowercase();
        ALL.iter().copied().find(|i| i.name == lower)
    }
}

use EndPolicy::{RootVertex, SumAllVertices};

/// Multigraphs with every end summed over the inserted vertices.
pub const MG: Instance = Instance::new("mg", Carrier::MultiGraphs, SumAllVertices, SumAllVertices);
pub const MGC: Instance = Instance::new(
    "mgc",
    Carrier::ConnectedMultiGraphs,
    SumAllVertices,
    SumAllVertices,
);
pub const G: Instance = Instance::new("g", Carrier::Graphs, SumAllVertices, SumAllVertices);
pub const GC: Instance = Instance::new(
    "gc",
    Carrier::ConnectedGraphs,
    SumAllVertices,
    SumAllVertices,
);
pub const T: Instance = Instance::new("t", Carrier::Trees, SumAllVertices, SumAllVertices);
pub const E: Instance = Instance::new("e", Carrier::Sets, SumAllVertices, SumAllVertices);
pub const ID: Instance = Instance::new("id", Carrier::Identity, RootVertex, RootVertex);
/// Rooted graphs with every end sent to the inserted root.
pub const G_POINTED: Instance =
    Instance::new("gpointed", Carrier::RootedGraphs, RootVertex, RootVertex);
/// Rooted oriented multigraphs: unlabelled ends go to the root, arrow heads
/// are summed.
pub const MG_OR: Instance = Instance::new(
    "mgor",
    Carrier::RootedOrientedMultiGraphs,
    RootVertex,
    SumAllVertices,
);
pub const MG_ORC: Instance = Instance::new(
    "mgorc",
    Carrier::RootedConnectedOrientedMultiGraphs,
    RootVertex,
    SumAllVertices,
);
/// Rooted trees under graft-and-redistribute insertion.
pub const PLIE: Instance = Instance::new("plie", Carrier::RootedTrees, RootVertex, SumAllVertices);

static ALL: [Instance; 11] = [MG, G, GC, MGC, T, G_POINTED, MG_OR, PLIE, E, ID, MG_ORC];

/// Drops end labels and keeps the root.
pub fn forget_ends(x: &LinComb<Structure>) -> LinComb<Structure> {
    x.map_keys(|s| Structure {
        graph: s.graph.forget_symbols(),
        root: s.root,
    })
}

/// Re-roots every term of an unrooted combination at `r`.
pub fn with_root(x: &LinComb<Structure>, r: Label) -> LinComb<Structure> {
    x.map_keys(|s| Structure {
        graph: s.graph.clone(),
        root: Some(r),
    })
}

/// Names accepted by [`Instance::by_name`].
pub fn names() -> Vec<&'static str> {
    ALL.iter().map(|i| i.name).collect()
}

#[cfg(test)]
mod tests;
