use edge_depth_cli::engine::{cmd_depth, same_result};
use edge_depth_cli::graph_spec::GraphSpec;
use edge_depth_cli::{FieldChoice, RunConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn instances() -> Vec<(GraphSpec, u32)> {
    let mut rng = ChaCha8Rng::seed_from_u64(edge_depth_cli::DEFAULT_SEED);
    (0..20)
        .map(|_| {
            let n = rng.gen_range(3..=5);
            let t = rng.gen_range(1..=2);
            let spec = if rng.gen_bool(0.5) {
                GraphSpec::Cycle {
                    n,
                    weights: Some((0..n).map(|_| rng.gen_range(1..=2)).collect()),
                }
            } else {
                GraphSpec::Path {
                    n,
                    weights: Some((1..n).map(|_| rng.gen_range(1..=3)).collect()),
                }
            };
            (spec, t)
        })
        .collect()
}

#[test]
fn replay_matches_fresh_computation() {
    let dir = tempfile::tempdir().unwrap();
    let cached = RunConfig {
        field: FieldChoice::Both,
        cache_dir: Some(dir.path().to_path_buf()),
        ..RunConfig::default()
    };
    let fresh = RunConfig {
        cache_dir: None,
        ..cached.clone()
    };
    for (spec, t) in instances() {
        let first = cmd_depth(&spec, t, &cached).unwrap();
        let replay = cmd_depth(&spec, t, &cached).unwrap();
        // a replay is the stored report, timing included
        assert_eq!(first, replay, "{spec:?}");
        let recomputed = cmd_depth(&spec, t, &fresh).unwrap();
        for (a, b) in replay.iter().zip(&recomputed) {
            assert!(same_result(a, b), "{spec:?} t={t}: {a:?} vs {b:?}");
        }
    }
    let files = std::fs::read_dir(dir.path()).unwrap().count();
    assert!((2..=40).contains(&files), "{files} cache files");
}

#[test]
fn single_field_hits_reuse_both_field_entries() {
    let dir = tempfile::tempdir().unwrap();
    let both = RunConfig {
        field: FieldChoice::Both,
        cache_dir: Some(dir.path().to_path_buf()),
        ..RunConfig::default()
    };
    let spec = GraphSpec::Cycle { n: 5, weights: None };
    let pair = cmd_depth(&spec, 2, &both).unwrap();
    let rational = cmd_depth(&spec, 2, &RunConfig { field: FieldChoice::Rational, ..both.clone() }).unwrap();
    assert_eq!(rational, vec![pair[1].clone()]);
}
