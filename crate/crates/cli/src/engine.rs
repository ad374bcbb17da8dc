//! Depth computations routed through the optional cache.

use edge_depth::depth::{depth_reports, DepthReport, Field};
use edge_depth::MonomialIdeal;

use crate::cache::ReportCache;
use crate::graph_spec::GraphSpec;
use crate::{CliError, CliResult, RunConfig};

/// Reports for `I` (already raised to the power `t`), one per configured
/// field, in field order.
pub fn depth_with_cache(i: &MonomialIdeal, t: u32, cfg: &RunConfig) -> CliResult<Vec<DepthReport>> {
    let fields = cfg.field.fields();
    let cache = cfg.cache_dir.as_deref().map(ReportCache::open).transpose()?;
    let mut found: Vec<Option<DepthReport>> = fields
        .iter()
        .map(|&f| cache.as_ref().and_then(|c| c.get(i, t, f)))
        .collect();
    let missing: Vec<Field> = fields
        .iter()
        .zip(&found)
        .filter(|(_, r)| r.is_none())
        .map(|(&f, _)| f)
        .collect();
    if !missing.is_empty() {
        let fresh = depth_reports(i, t, &missing, &cfg.engine())?;
        for report in fresh {
            if let Some(c) = &cache {
                c.put(i, &report)?;
            }
            let slot = fields.iter().position(|&f| f == report.field).expect("requested field");
            found[slot] = Some(report);
        }
    }
    Ok(found.into_iter().map(|r| r.expect("all fields filled")).collect())
}

/// Same mathematical content, ignoring timing.
pub fn same_result(a: &DepthReport, b: &DepthReport) -> bool {
    let mut b = b.clone();
    b.elapsed_ms = a.elapsed_ms;
    *a == b
}

pub fn cmd_depth(spec: &GraphSpec, t: u32, cfg: &RunConfig) -> CliResult<Vec<DepthReport>> {
    cfg.validate()?;
    if t == 0 {
        return Err(CliError::Input("t must be at least 1".into()));
    }
    let i = spec.to_graph()?.edge_ideal().power(t)?;
    depth_with_cache(&i, t, cfg)
}
