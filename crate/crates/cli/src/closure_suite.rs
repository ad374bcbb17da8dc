//! Graph-level closedness criterion against the Newton-polyhedron oracle.

use edge_depth::closure::is_integrally_closed_ideal;
use edge_depth::{enumerate_weighted_graphs, WeightedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{CliError, CliResult, RunConfig};

pub const EXHAUSTIVE_MAX_N: usize = 5;
pub const EXHAUSTIVE_MAX_W: u32 = 2;
pub const SAMPLED_MAX_N: usize = 7;
pub const SAMPLED_MAX_W: u32 = 3;
/// Random graphs drawn per vertex count in sampled mode.
pub const SAMPLES_PER_N: usize = 300;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepMode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub n: usize,
    pub edges: Vec<(usize, usize, u32)>,
    pub criterion: bool,
    pub oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub mode: SweepMode,
    pub max_n: usize,
    pub max_w: u32,
    pub seed: u64,
    pub checked: usize,
    pub not_closed: usize,
    pub disagreements: Vec<Disagreement>,
}

/// `None` when both deciders agree.
pub fn check_graph(g: &WeightedGraph) -> CliResult<Option<Disagreement>> {
    if g.num_edges() == 0 {
        return Ok(None);
    }
    let criterion = g.is_integrally_closed();
    let oracle = is_integrally_closed_ideal(&g.edge_ideal())?;
    Ok((criterion != oracle).then(|| Disagreement {
        n: g.num_vertices(),
        edges: g.edges().collect(),
        criterion,
        oracle,
    }))
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, max_w: u32) -> WeightedGraph {
    let mut edges = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if rng.gen_bool(0.5) {
                edges.push((a, b, rng.gen_range(1..=max_w)));
            }
        }
    }
    WeightedGraph::new(n, edges).expect("simple by construction")
}

/// All cycles and paths on `n` vertices with weights in `1..=max_w`.
pub fn cycles_and_paths(n: usize, max_w: u32) -> CliResult<Vec<WeightedGraph>> {
    let mut out = Vec::new();
    let assignments = |len: usize| {
        (0..(max_w as usize).pow(len as u32)).map(move |code| {
            (0..len)
                .map(|k| (code / (max_w as usize).pow(k as u32) % max_w as usize) as u32 + 1)
                .collect::<Vec<u32>>()
        })
    };
    if n >= 3 {
        for w in assignments(n) {
            out.push(WeightedGraph::cycle(n, &w)?);
        }
    }
    for w in assignments(n.saturating_sub(1)) {
        out.push(WeightedGraph::path(n, &w)?);
    }
    Ok(out)
}

/// Exhaustive over every graph on `2..=max_n` vertices when within the
/// exhaustive limits, seeded sampling otherwise; `extra_n` adds all cycles
/// and paths on that many vertices.
pub fn cmd_closure_suite(
    max_n: usize,
    max_w: u32,
    extra_n: Option<usize>,
    cfg: &RunConfig,
) -> CliResult<ClosureReport> {
    cfg.validate()?;
    if max_n < 2 || max_w == 0 {
        return Err(CliError::Input("closure suite needs max_n >= 2 and max_w >= 1".into()));
    }
    if max_n > SAMPLED_MAX_N || max_w > SAMPLED_MAX_W {
        return Err(CliError::Input(format!(
            "closure suite supports max_n <= {SAMPLED_MAX_N}, max_w <= {SAMPLED_MAX_W}"
        )));
    }
    let mode = if max_n <= EXHAUSTIVE_MAX_N && max_w <= EXHAUSTIVE_MAX_W {
        SweepMode::Exhaustive
    } else {
        SweepMode::Sampled
    };
    let mut graphs: Vec<WeightedGraph> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for n in 2..=max_n {
        match mode {
            SweepMode::Exhaustive => graphs.extend(enumerate_weighted_graphs(n, max_w)?),
            SweepMode::Sampled => {
                graphs.extend((0..SAMPLES_PER_N).map(|_| random_graph(&mut rng, n, max_w)))
            }
        }
    }
    if let Some(k) = extra_n {
        if !(2..=8).contains(&k) {
            return Err(CliError::Input(format!("cycle/path sweep needs 2 <= n <= 8, got {k}")));
        }
        graphs.extend(cycles_and_paths(k, max_w)?);
    }
    let results: Vec<(bool, Option<Disagreement>)> = graphs
        .par_iter()
        .map(|g| Ok((g.num_edges() > 0 && !g.is_integrally_closed(), check_graph(g)?)))
        .collect::<CliResult<_>>()?;
    Ok(ClosureReport {
        mode,
        max_n,
        max_w,
        seed: cfg.seed,
        checked: graphs.len(),
        not_closed: results.iter().filter(|r| r.0).count(),
        disagreements: results.into_iter().filter_map(|r| r.1).collect(),
    })
}
