//! Seeded invariant checks for the depth engine.

use edge_depth::depth::{betti_tables, depth_reports, Field};
use edge_depth::{Monomial, MonomialIdeal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::oracle::{brute_force_betti, taylor_euler};
use crate::{CliError, CliResult, RunConfig};

pub const SUM_PAIRS: usize = 20;
pub const PRODUCT_PAIRS: usize = 10;
pub const COLON_PAIRS: usize = 100;
pub const BETTI_SAMPLES: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyCheck {
    pub name: String,
    pub instances: usize,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub seed: u64,
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn violations(&self) -> usize {
        self.checks.iter().map(|c| c.violations.len()).sum()
    }

    pub fn check(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn random_monomial(rng: &mut ChaCha8Rng, arity: usize, max_exp: u32) -> Monomial {
    loop {
        let e: Vec<u32> = (0..arity).map(|_| rng.gen_range(0..=max_exp)).collect();
        if e.iter().any(|&x| x > 0) {
            return Monomial::new(e).expect("arity >= 1");
        }
    }
}

/// A nonzero proper ideal with at most `max_gens` minimal generators.
pub fn random_ideal(rng: &mut ChaCha8Rng, arity: usize, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k).map(|_| random_monomial(rng, arity, max_exp)).collect();
    MonomialIdeal::minimalize(arity, gens).expect("nonunit generators")
}

/// Depth over both fields; a disagreement is logged to `mismatch`.
struct Depths<'a> {
    cfg: &'a RunConfig,
    disagreements: Vec<String>,
    instances: usize,
}

impl Depths<'_> {
    fn depth(&mut self, i: &MonomialIdeal) -> CliResult<usize> {
        let r = depth_reports(i, 1, &[Field::Gf2, Field::Rational], &self.cfg.engine())?;
        self.instances += 1;
        if r[0].depth != r[1].depth {
            self.disagreements
                .push(format!("{i}: gf2 depth {} vs rational {}", r[0].depth, r[1].depth));
        }
        Ok(r[0].depth)
    }
}

fn disjoint_pair(rng: &mut ChaCha8Rng) -> (MonomialIdeal, MonomialIdeal, MonomialIdeal, MonomialIdeal) {
    let k1 = rng.gen_range(2..=3);
    let k2 = rng.gen_range(2..=3);
    let i = random_ideal(rng, k1, 3, 2);
    let j = random_ideal(rng, k2, 3, 2);
    let n = k1 + k2;
    let left: Vec<usize> = (0..k1).collect();
    let right: Vec<usize> = (k1..n).collect();
    let ie = i.embed(n, &left).expect("fits");
    let je = j.embed(n, &right).expect("fits");
    (i, j, ie, je)
}

fn sum_rule(rng: &mut ChaCha8Rng, d: &mut Depths) -> CliResult<PropertyCheck> {
    let mut violations = Vec::new();
    for _ in 0..SUM_PAIRS {
        let (i, j, ie, je) = disjoint_pair(rng);
        let (a, b) = (d.depth(&i)?, d.depth(&j)?);
        let s = d.depth(&ie.sum(&je)?)?;
        if s != a + b {
            violations.push(format!("I = {i}, J = {j}: depth(I+J) = {s}, parts {a} + {b}"));
        }
    }
    Ok(PropertyCheck {
        name: "sum-rule".into(),
        instances: SUM_PAIRS,
        violations,
    })
}

fn product_rule(rng: &mut ChaCha8Rng, d: &mut Depths) -> CliResult<PropertyCheck> {
    let mut violations = Vec::new();
    for _ in 0..PRODUCT_PAIRS {
        let (i, j, ie, je) = disjoint_pair(rng);
        let (a, b) = (d.depth(&i)?, d.depth(&j)?);
        let p = d.depth(&ie.product(&je)?)?;
        if p != a + b + 1 {
            violations.push(format!("I = {i}, J = {j}: depth(IJ) = {p}, parts {a} + {b} + 1"));
        }
    }
    Ok(PropertyCheck {
        name: "product-rule".into(),
        instances: PRODUCT_PAIRS,
        violations,
    })
}

fn colon_rule(rng: &mut ChaCha8Rng, d: &mut Depths) -> CliResult<PropertyCheck> {
    let mut violations = Vec::new();
    let mut done = 0;
    while done < COLON_PAIRS {
        let arity = rng.gen_range(3..=4);
        let i = random_ideal(rng, arity, 5, 2);
        let f = random_monomial(rng, arity, 2);
        if i.contains(&f)? {
            continue;
        }
        done += 1;
        let colon = i.colon_monomial(&f)?;
        let (a, b) = (d.depth(&i)?, d.depth(&colon)?);
        if a > b {
            violations.push(format!("I = {i}, f = {f}: depth(I) = {a} > depth(I:f) = {b}"));
        }
    }
    Ok(PropertyCheck {
        name: "colon-inequality".into(),
        instances: COLON_PAIRS,
        violations,
    })
}

fn betti_checks(rng: &mut ChaCha8Rng, cfg: &RunConfig) -> CliResult<(PropertyCheck, PropertyCheck)> {
    let mut brute = Vec::new();
    let mut euler = Vec::new();
    for _ in 0..BETTI_SAMPLES {
        let arity = rng.gen_range(1..=4);
        let i = random_ideal(rng, arity, 6, 3);
        let tables = betti_tables(&i, &[Field::Gf2, Field::Rational], &cfg.engine())?;
        for t in &tables {
            if t.entries != brute_force_betti(&i, t.field) {
                brute.push(format!("{i} over {}", t.field.as_str()));
            }
            let mut alt: std::collections::BTreeMap<Vec<u32>, i64> = Default::default();
            for ((k, b), v) in &t.entries {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                *alt.entry(b.clone()).or_default() += sign * *v as i64;
            }
            alt.retain(|_, v| *v != 0);
            if alt != taylor_euler(&i) {
                euler.push(format!("{i} over {}", t.field.as_str()));
            }
        }
    }
    Ok((
        PropertyCheck {
            name: "betti-brute-force".into(),
            instances: BETTI_SAMPLES,
            violations: brute,
        },
        PropertyCheck {
            name: "euler-characteristic".into(),
            instances: BETTI_SAMPLES,
            violations: euler,
        },
    ))
}

fn fixed_examples(d: &mut Depths) -> CliResult<PropertyCheck> {
    let a = MonomialIdeal::principal(Monomial::new(vec![1, 1, 0, 0])?)?;
    let b = MonomialIdeal::principal(Monomial::new(vec![0, 0, 1, 1])?)?;
    let mut violations = Vec::new();
    let s = d.depth(&a.sum(&b)?)?;
    if s != 2 {
        violations.push(format!("depth(S/(x1x2, x3x4)) = {s}, expected 2"));
    }
    let p = d.depth(&a.product(&b)?)?;
    if p != 3 {
        violations.push(format!("depth(S/(x1x2x3x4)) = {p}, expected 3"));
    }
    Ok(PropertyCheck {
        name: "fixed-examples".into(),
        instances: 2,
        violations,
    })
}

/// Every suite draws from its own stream derived from `cfg.seed`.
pub fn cmd_property_suite(cfg: &RunConfig) -> CliResult<PropertyReport> {
    cfg.validate()?;
    let stream = |k: u64| ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(31).wrapping_add(k));
    let mut d = Depths {
        cfg,
        disagreements: Vec::new(),
        instances: 0,
    };
    let mut checks = vec![
        fixed_examples(&mut d)?,
        sum_rule(&mut stream(1), &mut d)?,
        product_rule(&mut stream(2), &mut d)?,
        colon_rule(&mut stream(3), &mut d)?,
    ];
    let (brute, euler) = betti_checks(&mut stream(4), cfg)?;
    checks.push(brute);
    checks.push(euler);
    checks.push(PropertyCheck {
        name: "field-agreement".into(),
        instances: d.instances,
        violations: d.disagreements,
    });
    if checks.iter().all(|c| c.instances == 0) {
        return Err(CliError::Input("empty property suite".into()));
    }
    Ok(PropertyReport {
        seed: cfg.seed,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_ideals_are_proper_and_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let i = random_ideal(&mut rng, 3, 6, 3);
            assert!(!i.is_zero() && i.num_generators() <= 6);
            assert!(i.generators().iter().all(|g| !g.is_one()));
        }
    }

    #[test]
    fn suite_is_deterministic() {
        let cfg = RunConfig::default();
        let a = cmd_property_suite(&cfg).unwrap();
        assert_eq!(a, cmd_property_suite(&cfg).unwrap());
        assert_eq!(a.violations(), 0, "{a:?}");
    }
}
