//! The computations behind each subcommand, returning rendered text.

use std::collections::{BTreeMap, BTreeSet};

use operad_forge_core::graph::Label;
use operad_forge_core::operad::{Instance, Structure};
use operad_forge_core::presentation::{koszul_pairing, relation_space, EnrichedTree};
use operad_forge_core::series::{hilbert_commag, hilbert_sp, hilbert_sp_dual, TruncEGF};
use operad_forge_core::span::{
    generator_tower, standardize, ClosureOptions, ClosureTable, Executor, GeneratorReport,
};
use operad_forge_core::{LinComb, Rational};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::json::{
    self, comb_to_json, graph_line, parse_element, parse_elements, parse_trees, to_text, tree_line,
};
use crate::names::Names;
use crate::report::Format;

pub fn instance(name: &str) -> CliResult<Instance> {
    Instance::by_name(&name.to_ascii_lowercase())
        .ok_or_else(|| CliError::parse(format!("unknown operad {name:?}")))
}

pub struct Composition {
    pub result: LinComb<Structure>,
    pub names: Names,
    /// Vertices of the right operand renamed to avoid the left one.
    pub notices: Vec<String>,
}

/// Parses both operands and composes them at the vertex named `star`.
pub fn compose_texts(
    inst: &Instance,
    left: &str,
    star: &str,
    right: &str,
) -> CliResult<Composition> {
    let mut names = Names::new();
    let x = parse_element(left, &mut names)?;
    let star_label = names
        .get(star)
        .filter(|&l| x.support().all(|s| s.graph.has_vertex(l)))
        .ok_or_else(|| CliError::parse(format!("{star:?} is not a vertex of the left operand")))?;
    let taken: BTreeSet<Label> = x
        .support()
        .flat_map(|s| s.vertices().iter().copied())
        .collect();
    let mut local = Names::new();
    let y = parse_element(right, &mut local)?;
    let mut map = BTreeMap::new();
    let mut notices = Vec::new();
    for l in y
        .support()
        .flat_map(|s| s.vertices().iter().copied())
        .collect::<BTreeSet<_>>()
    {
        let name = local.name(l);
        let target = match names.get(&name) {
            Some(g) if taken.contains(&g) && g != star_label => {
                let fresh = names.fresh(&name);
                notices.push(format!(
                    "renamed {name} to {} in the right operand",
                    names.name(fresh)
                ));
                fresh
            }
            _ => names.intern(&name),
        };
        map.insert(l, target);
    }
    let y = y.map_keys(|s| s.relabel_with(|l| map[&l]));
    let result = inst.compose(&x, star_label, &y)?;
    Ok(Composition {
        result,
        names,
        notices,
    })
}

pub fn render_comb(x: &LinComb<Structure>, names: &Names, format: Format) -> String {
    match format {
        Format::Json => to_text(&comb_to_json(x, names)),
        Format::Table => {
            if x.is_zero() {
                return "0\n".into();
            }
            x.iter()
                .map(|(s, c)| format!("{c}\t{}\n", graph_line(s, names)))
                .collect()
        }
    }
}

#[derive(Serialize)]
struct DimRow {
    arity: usize,
    dim: usize,
    by_edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct ClosureOut<'a> {
    operad: &'a str,
    generators: usize,
    dims: Vec<DimRow>,
}

fn read_generators(text: &str) -> CliResult<Vec<LinComb<Structure>>> {
    let gens = parse_elements(text, &mut Names::new())?;
    if gens.iter().any(LinComb::is_zero) {
        return Err(CliError::parse("a generator is the zero vector"));
    }
    Ok(gens)
}

pub fn closure(
    inst: Instance,
    gens_text: &str,
    max_arity: usize,
    options: ClosureOptions,
    exec: &dyn Executor,
    format: Format,
) -> CliResult<String> {
    let gens = read_generators(gens_text)?;
    let table = ClosureTable::closure_with(inst, &gens, max_arity, options, exec)?;
    let dims: Vec<DimRow> = (1..=table.depth())
        .map(|n| DimRow {
            arity: n,
            dim: table.dims()[n - 1],
            by_edges: table.dims_by_grade(n),
        })
        .collect();
    Ok(match format {
        Format::Json => to_text(&ClosureOut {
            operad: inst.name,
            generators: gens.len(),
            dims,
        }),
        Format::Table => {
            let mut out = format!("{:>5}  {:>8}  by edge count\n", "arity", "dim");
            for r in dims {
                let parts: Vec<String> =
                    r.by_edges.iter().map(|(g, d)| format!("{g}:{d}")).collect();
                out.push_str(&format!(
                    "{:>5}  {:>8}  {}\n",
                    r.arity,
                    r.dim,
                    parts.join(" ")
                ));
            }
            out
        }
    })
}

#[derive(Serialize)]
struct GeneratorOut {
    arity: usize,
    ambient_dim: usize,
    composable_rank: usize,
    generators: Vec<GeneratorEntry>,
}

#[derive(Serialize)]
struct GeneratorEntry {
    graph: json::GraphJson,
    edges: usize,
    orbit_gain: usize,
    needed: bool,
}

fn generator_entries(r: &GeneratorReport, names: &Names) -> Vec<GeneratorEntry> {
    let gains: Vec<usize> = r
        .grades
        .iter()
        .flat_map(|g| g.added.iter().map(|(_, k)| *k))
        .collect();
    r.representatives
        .iter()
        .zip(gains)
        .zip(&r.minimal)
        .map(|((s, gain), &needed)| GeneratorEntry {
            graph: json::structure_to_json(s, names),
            edges: s.grade(),
            orbit_gain: gain,
            needed,
        })
        .collect()
}

pub fn generators(
    inst: Instance,
    max_arity: usize,
    options: ClosureOptions,
    exec: &dyn Executor,
    format: Format,
) -> CliResult<String> {
    let (_, reports) = generator_tower(inst, max_arity, options, exec)?;
    let names = Names::new();
    Ok(match format {
        Format::Json => {
            let out: Vec<GeneratorOut> = reports
                .iter()
                .map(|r| GeneratorOut {
                    arity: r.arity,
                    ambient_dim: r.ambient_dim,
                    composable_rank: r.composable_rank,
                    generators: generator_entries(r, &names),
                })
                .collect();
            to_text(&out)
        }
        Format::Table => {
            let mut out = String::new();
            for r in &reports {
                out.push_str(&format!(
                    "arity {}: ambient {}, composites span {}, {} generator orbit(s)\n",
                    r.arity,
                    r.ambient_dim,
                    r.composable_rank,
                    r.representatives.len()
                ));
                for (s, e) in r.representatives.iter().zip(generator_entries(r, &names)) {
                    let tag = if e.needed { "needed" } else { "redundant" };
                    out.push_str(&format!(
                        "  +{:<4} {} ({tag})\n",
                        e.orbit_gain,
                        graph_line(s, &names)
                    ));
                }
            }
            out
        }
    })
}

#[derive(Serialize)]
struct MembershipOut {
    arity: usize,
    member: bool,
}

pub fn membership(
    inst: Instance,
    gens_text: &str,
    element_text: &str,
    options: ClosureOptions,
    exec: &dyn Executor,
    format: Format,
) -> CliResult<String> {
    let gens = read_generators(gens_text)?;
    let element = parse_element(element_text, &mut Names::new())?;
    for s in element.support() {
        inst.check(s)?;
    }
    let (n, _) = standardize(&element)?;
    let table = ClosureTable::closure_with(inst, &gens, n, options, exec)?;
    let member = table.contains(&element)?;
    Ok(match format {
        Format::Json => to_text(&MembershipOut { arity: n, member }),
        Format::Table => format!("arity {n}: member {member}\n"),
    })
}

#[derive(Serialize)]
struct PairingOut {
    rows: Vec<String>,
    cols: Vec<String>,
    matrix: Vec<Vec<String>>,
    zero: bool,
}

fn comb_line(x: &LinComb<EnrichedTree>, names: &Names) -> String {
    x.iter()
        .map(|(t, c)| format!("{c}*{}", tree_line(t, names)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Pairing matrix between two families of tree combinations; with `span`
/// the families are first closed under relabeling of leaves.
pub fn pairing(left_text: &str, right_text: &str, span: bool, format: Format) -> CliResult<String> {
    let mut names = Names::new();
    let mut left = parse_trees(left_text, &mut names)?;
    let mut right = parse_trees(right_text, &mut names)?;
    if span {
        left = relation_space(&left)?.basis();
        right = relation_space(&right)?.basis();
    }
    let matrix: Vec<Vec<Rational>> = left
        .iter()
        .map(|f| {
            right
                .iter()
                .map(|x| koszul_pairing(f, x))
                .collect::<Result<_, _>>()
        })
        .collect::<Result<_, _>>()?;
    let zero = matrix
        .iter()
        .flatten()
        .all(|c| *c == Rational::from_integer(0.into()));
    Ok(match format {
        Format::Json => to_text(&PairingOut {
            rows: left.iter().map(|x| comb_line(x, &names)).collect(),
            cols: right.iter().map(|x| comb_line(x, &names)).collect(),
            matrix: matrix
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
            zero,
        }),
        Format::Table => {
            let mut out = format!("{} x {} pairing matrix\n", left.len(), right.len());
            for r in &matrix {
                out.push_str(
                    &r.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" "),
                );
                out.push('\n');
            }
            out.push_str(&format!("zero: {zero}\n"));
            out
        }
    })
}

/// Named Hilbert series available from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SeriesName {
    Commag,
    Sp,
    SpDual,
}

pub fn series(name: SeriesName, order: usize) -> TruncEGF {
    match name {
        SeriesName::Commag => hilbert_commag(order),
        SeriesName::Sp => hilbert_sp(order),
        SeriesName::SpDual => hilbert_sp_dual(order),
    }
}

#[derive(Serialize)]
struct SeriesRow {
    n: usize,
    dim: String,
}

/// `(n, dim)` pairs as JSON or CSV.
pub fn hilbert(name: SeriesName, order: usize, format: Format) -> CliResult<String> {
    if order == 0 {
        return Err(CliError::Usage("order must be at least 1".into()));
    }
    let dims = series(name, order).dims()?;
    Ok(match format {
        Format::Json => {
            let rows: Vec<SeriesRow> = dims
                .iter()
                .enumerate()
                .map(|(i, d)| SeriesRow {
                    n: i + 1,
                    dim: d.to_string(),
                })
                .collect();
            to_text(&rows)
        }
        Format::Table => {
            let mut out = String::from("n,dim\n");
            for (i, d) in dims.iter().enumerate() {
                out.push_str(&format!("{},{d}\n", i + 1));
            }
            out
        }
    })
}
