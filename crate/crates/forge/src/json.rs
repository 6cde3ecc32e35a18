//! File formats for graphs, combinations of graphs and enriched trees.
//!
//! A graph is `{"vertices": [...], "edges": [...], "root": "a"}` where the
//! root is optional. An edge is either `{"ends": [["a","_"],["b",">"]],
//! "mult": 1}` or, when every end is plain, a list of `[vertex, exponent]`
//! pairs. Writers always pick the plain form when it applies and group equal
//! marked edges into one entry with a multiplicity.

use std::collections::BTreeSet;
use std::str::FromStr;

use operad_forge_core::graph::{Edge, End, EndSym, Label, MultiHyperGraph};
use operad_forge_core::presentation::{EnrichedTree, Gen};
use operad_forge_core::{LinComb, Rational, Structure};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::names::Names;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EdgeJson {
    Marked(MarkedEdge),
    Plain(Vec<(String, u32)>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MarkedEdge {
    pub ends: Vec<(String, String)>,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffJson {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: CoeffJson,
    pub graph: GraphJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CombJson {
    pub terms: Vec<TermJson>,
}

/// A single graph or a combination.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementJson {
    Combination(CombJson),
    Single(GraphJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementsFile {
    Many(Vec<ElementJson>),
    One(ElementJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TreeJson {
    Leaf(LeafJson),
    Node(NodeJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LeafJson {
    pub leaf: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeJson {
    pub gen: String,
    pub children: Vec<TreeJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeTermJson {
    pub coeff: CoeffJson,
    pub tree: TreeJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TreeCombJson {
    Combination { terms: Vec<TreeTermJson> },
    Single(TreeJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TreesFile {
    Many(Vec<TreeCombJson>),
    One(TreeCombJson),
}

fn parse_coeff(c: &CoeffJson) -> CliResult<Rational> {
    match c {
        CoeffJson::Int(i) => Ok(Rational::from_integer((*i).into())),
        CoeffJson::Text(s) => Rational::from_str(s.trim())
            .map_err(|e| CliError::parse(format!("coefficient {s:?}: {e}"))),
    }
}

fn write_coeff(c: &Rational) -> CoeffJson {
    CoeffJson::Text(c.to_string())
}

pub fn structure_from_json(doc: &GraphJson, names: &mut Names) -> CliResult<Structure> {
    let mut seen = BTreeSet::new();
    for v in &doc.vertices {
        if !seen.insert(v.as_str()) {
            return Err(CliError::parse(format!("vertex {v:?} listed twice")));
        }
    }
    let vertices: Vec<Label> = doc.vertices.iter().map(|v| names.intern(v)).collect();
    let vertex = |name: &str| -> CliResult<Label> {
        if seen.contains(name) {
            Ok(names.get(name).expect("interned"))
        } else {
            Err(CliError::parse(format!(
                "edge end {name:?} is not a listed vertex"
            )))
        }
    };
    let mut edges = Vec::new();
    for e in &doc.edges {
        match e {
            EdgeJson::Marked(m) => {
                if m.ends.is_empty() || m.mult == 0 {
                    return Err(CliError::parse(
                        "marked edge needs ends and a positive mult",
                    ));
                }
                let ends = m
                    .ends
                    .iter()
                    .map(|(v, s)| {
                        let sym = EndSym::from_symbol(s)
                            .ok_or_else(|| CliError::parse(format!("unknown end symbol {s:?}")))?;
                        Ok(End::new(vertex(v)?, sym))
                    })
                    .collect::<CliResult<Vec<End>>>()?;
                let edge = Edge::new(ends);
                edges.extend(std::iter::repeat_n(edge, m.mult as usize));
            }
            EdgeJson::Plain(pairs) => {
                if pairs.is_empty() {
                    return Err(CliError::parse("edge without ends"));
                }
                let mut ends = Vec::new();
                for (v, k) in pairs {
                    if *k == 0 {
                        return Err(CliError::parse("exponents must be positive"));
                    }
                    let l = vertex(v)?;
                    ends.extend(std::iter::repeat_n(End::plain(l), *k as usize));
                }
                edges.push(Edge::new(ends));
            }
        }
    }
    let graph =
        MultiHyperGraph::new(vertices, edges).map_err(|e| CliError::parse(e.to_string()))?;
    match &doc.root {
        None => Ok(Structure::unrooted(graph)),
        Some(r) => {
            let r = vertex(r)?;
            Structure::rooted(graph, r).map_err(|e| CliError::parse(e.to_string()))
        }
    }
}

pub fn structure_to_json(s: &Structure, names: &Names) -> GraphJson {
    let g = &s.graph;
    let mut edges = Vec::new();
    if g.is_plain() {
        for e in g.edges() {
            edges.push(EdgeJson::Plain(
                e.exponents()
                    .into_iter()
                    .map(|(l, k)| (names.name(l), k))
                    .collect(),
            ));
        }
    } else {
        let mut i = 0;
        let all = g.edges();
        while i < all.len() {
            let mut j = i;
            while j < all.len() && all[j] == all[i] {
                j += 1;
            }
            edges.push(EdgeJson::Marked(MarkedEdge {
                ends: all[i]
                    .ends()
                    .iter()
                    .map(|e| (names.name(e.vertex), e.sym.symbol().to_string()))
                    .collect(),
                mult: (j - i) as u64,
            }));
            i = j;
        }
    }
    GraphJson {
        vertices: g.vertices().iter().map(|&v| names.name(v)).collect(),
        edges,
        root: s.root.map(|r| names.name(r)),
    }
}

pub fn element_from_json(doc: &ElementJson, names: &mut Names) -> CliResult<LinComb<Structure>> {
    match doc {
        ElementJson::Single(g) => Ok(LinComb::basis(structure_from_json(g, names)?)),
        ElementJson::Combination(c) => {
            let mut out = LinComb::zero();
            for t in &c.terms {
                out.add_term(
                    structure_from_json(&t.graph, names)?,
                    parse_coeff(&t.coeff)?,
                );
            }
            Ok(out)
        }
    }
}

pub fn comb_to_json(x: &LinComb<Structure>, names: &Names) -> CombJson {
    CombJson {
        terms: x
            .iter()
            .map(|(s, c)| TermJson {
                coeff: write_coeff(c),
                graph: structure_to_json(s, names),
            })
            .collect(),
    }
}

pub fn parse_elements(text: &str, names: &mut Names) -> CliResult<Vec<LinComb<Structure>>> {
    let doc: ElementsFile =
        serde_json::from_str(text).map_err(|e| CliError::parse(e.to_string()))?;
    match doc {
        ElementsFile::One(e) => Ok(vec![element_from_json(&e, names)?]),
        ElementsFile::Many(v) => v.iter().map(|e| element_from_json(e, names)).collect(),
    }
}

pub fn parse_element(text: &str, names: &mut Names) -> CliResult<LinComb<Structure>> {
    let doc: ElementJson =
        serde_json::from_str(text).map_err(|e| CliError::parse(e.to_string()))?;
    element_from_json(&doc, names)
}

/// A parsed tree together with the product of the signs on its nodes.
pub fn tree_from_json(doc: &TreeJson, names: &mut Names) -> CliResult<(EnrichedTree, i32)> {
    let (t, sign) = tree_rec(doc, names)?;
    let leaves = t.leaves();
    let distinct: BTreeSet<_> = leaves.iter().collect();
    if distinct.len() != leaves.len() {
        return Err(CliError::parse("tree repeats a leaf"));
    }
    if t.polarity().is_none() {
        return Err(CliError::parse("tree mixes primal and dual generators"));
    }
    Ok((t, sign))
}

fn tree_rec(doc: &TreeJson, names: &mut Names) -> CliResult<(EnrichedTree, i32)> {
    match doc {
        TreeJson::Leaf(l) => Ok((EnrichedTree::Leaf(names.intern(&l.leaf)), 1)),
        TreeJson::Node(n) => {
            let gen = Gen::from_name(&n.gen)
                .ok_or_else(|| CliError::parse(format!("unknown generator {:?}", n.gen)))?;
            let [a, b] = &n.children[..] else {
                return Err(CliError::parse("nodes have exactly two children"));
            };
            let sign = match n.sign {
                None => 1,
                Some(s @ (1 | -1)) if gen.is_dual() => s as i32,
                Some(_) => {
                    return Err(CliError::parse(
                        "sign must be 1 or -1 and only on dual nodes",
                    ))
                }
            };
            let (ta, sa) = tree_rec(a, names)?;
            let (tb, sb) = tree_rec(b, names)?;
            Ok((EnrichedTree::node(gen, ta, tb), sign * sa * sb))
        }
    }
}

pub fn tree_to_json(t: &EnrichedTree, names: &Names) -> TreeJson {
    match t {
        EnrichedTree::Leaf(l) => TreeJson::Leaf(LeafJson {
            leaf: names.name(*l),
        }),
        EnrichedTree::Node(g, c) => TreeJson::Node(NodeJson {
            gen: g.name().to_string(),
            children: vec![tree_to_json(&c[0], names), tree_to_json(&c[1], names)],
            sign: None,
        }),
    }
}

pub fn tree_comb_from_json(
    doc: &TreeCombJson,
    names: &mut Names,
) -> CliResult<LinComb<EnrichedTree>> {
    match doc {
        TreeCombJson::Single(t) => {
            let (t, s) = tree_from_json(t, names)?;
            Ok(LinComb::term(t, Rational::from_integer(s.into())))
        }
        TreeCombJson::Combination { terms } => {
            let mut out = LinComb::zero();
            for term in terms {
                let (t, s) = tree_from_json(&term.tree, names)?;
                out.add_term(
                    t,
                    parse_coeff(&term.coeff)? * Rational::from_integer(s.into()),
                );
            }
            Ok(out)
        }
    }
}

pub fn tree_comb_to_json(x: &LinComb<EnrichedTree>, names: &Names) -> TreeCombJson {
    TreeCombJson::Combination {
        terms: x
            .iter()
            .map(|(t, c)| TreeTermJson {
                coeff: write_coeff(c),
                tree: tree_to_json(t, names),
            })
            .collect(),
    }
}

pub fn parse_trees(text: &str, names: &mut Names) -> CliResult<Vec<LinComb<EnrichedTree>>> {
    let doc: TreesFile = serde_json::from_str(text).map_err(|e| CliError::parse(e.to_string()))?;
    match doc {
        TreesFile::One(c) => Ok(vec![tree_comb_from_json(&c, names)?]),
        TreesFile::Many(v) => v.iter().map(|c| tree_comb_from_json(c, names)).collect(),
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// One-line rendering: vertices, edges, and the root if any.
pub fn graph_line(s: &Structure, names: &Names) -> String {
    let vs: Vec<String> = s.graph.vertices().iter().map(|&v| names.name(v)).collect();
    let es: Vec<String> = s
        .graph
        .edges()
        .iter()
        .map(|e| {
            let plain = e.is_plain();
            e.ends()
                .iter()
                .map(|end| {
                    let n = names.name(end.vertex);
                    if plain {
                        n
                    } else {
                        format!("{n}{}", end.sym.symbol())
                    }
                })
                .collect::<Vec<_>>()
                .join("-")
        })
        .collect();
    let mut out = format!("{{{}}} [{}]", vs.join(","), es.join(" "));
    if let Some(r) = s.root {
        out.push_str(&format!(" root {}", names.name(r)));
    }
    out
}

/// Infix rendering of a tree, such as `s(a,p(b,c))`.
pub fn tree_line(t: &EnrichedTree, names: &Names) -> String {
    match t {
        EnrichedTree::Leaf(l) => names.name(*l),
        EnrichedTree::Node(g, c) => {
            format!(
                "{}({},{})",
                g.name(),
                tree_line(&c[0], names),
                tree_line(&c[1], names)
            )
        }
    }
}

#[cfg(test)]
mod tests;
