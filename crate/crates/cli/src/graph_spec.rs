//! JSON description of a weighted graph as accepted by `depth`.

use edge_depth::WeightedGraph;
use serde::{Deserialize, Serialize};

use crate::{CliError, CliResult};

/// `{"kind":"cycle","n":6,"weights":[2,1,2,1,2,1]}`, `{"kind":"path",...}`
/// (`n - 1` weights) or `{"kind":"general","n":4,"edges":[[1,2,3],...]}`.
/// Missing weights default to all ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GraphSpec {
    Cycle {
        n: usize,
        #[serde(default)]
        weights: Option<Vec<u32>>,
    },
    Path {
        n: usize,
        #[serde(default)]
        weights: Option<Vec<u32>>,
    },
    General {
        n: usize,
        edges: Vec<(usize, usize, u32)>,
    },
}

impl GraphSpec {
    pub fn parse(text: &str) -> CliResult<GraphSpec> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("graph JSON: {e}")))
    }

    pub fn to_graph(&self) -> CliResult<WeightedGraph> {
        let g = match self {
            GraphSpec::Cycle { n, weights } => {
                let w = weights.clone().unwrap_or_else(|| vec![1; *n]);
                WeightedGraph::cycle(*n, &w)
            }
            GraphSpec::Path { n, weights } => {
                let w = weights.clone().unwrap_or_else(|| vec![1; n.saturating_sub(1)]);
                WeightedGraph::path(*n, &w)
            }
            GraphSpec::General { n, edges } => WeightedGraph::new(*n, edges.iter().copied()),
        };
        g.map_err(|e| CliError::Input(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_kind() {
        let c = GraphSpec::parse(r#"{"kind":"cycle","n":6,"weights":[2,1,2,1,2,1]}"#).unwrap();
        assert_eq!(c.to_graph().unwrap().num_edges(), 6);
        let p = GraphSpec::parse(r#"{"kind":"path","n":2}"#).unwrap();
        assert_eq!(p.to_graph().unwrap().weight(1, 2), Some(1));
        let g = GraphSpec::parse(r#"{"kind":"general","n":3,"edges":[[1,3,2]]}"#).unwrap();
        assert_eq!(g.to_graph().unwrap().weight(1, 3), Some(2));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(GraphSpec::parse(r#"{"kind":"star","n":3}"#).is_err());
        assert!(GraphSpec::parse(r#"{"kind":"cycle","n":4,"weights":[1,1]}"#)
            .unwrap()
            .to_graph()
            .is_err());
        assert!(GraphSpec::parse("not json").is_err());
    }
}
