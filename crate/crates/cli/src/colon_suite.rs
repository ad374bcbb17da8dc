//! Replays colon, sum and deletion identities on weighted cycles and paths
//! by exact ideal equality.

use edge_depth::formulas::{build_witness, WitnessKind};
use edge_depth::{CycleFamily, Error, Monomial, MonomialIdeal, WeightedGraph};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{CliError, CliResult, RunConfig};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColonCheck {
    pub identity: String,
    pub n: usize,
    pub t: u32,
    pub weights: String,
    pub passed: bool,
    pub detail: String,
}

type Sides = edge_depth::Result<(MonomialIdeal, MonomialIdeal)>;
type Job = Box<dyn Fn() -> Sides + Send + Sync>;

struct Case {
    identity: String,
    n: usize,
    t: u32,
    weights: Vec<u32>,
    job: Job,
}

/// `x_k` with a 1-based index.
fn x(n: usize, k: usize) -> Monomial {
    Monomial::variable(n, k - 1)
}

fn xs(n: usize, ks: &[usize]) -> Monomial {
    let mut e = vec![0; n];
    for &k in ks {
        e[k - 1] += 1;
    }
    Monomial::new(e).expect("n >= 1")
}

fn plus(i: &MonomialIdeal, ks: &[usize]) -> MonomialIdeal {
    i.with_variables(ks.iter().map(|k| k - 1))
}

/// Edge ideal of the subgraph induced on all vertices except `drop`, in the full ring.
fn without(g: &WeightedGraph, drop: &[usize]) -> edge_depth::Result<MonomialIdeal> {
    let keep: Vec<usize> = (1..=g.num_vertices()).filter(|v| !drop.contains(v)).collect();
    on(g, &keep)
}

fn on(g: &WeightedGraph, keep: &[usize]) -> edge_depth::Result<MonomialIdeal> {
    if keep.is_empty() {
        return Ok(MonomialIdeal::zero(g.num_vertices()));
    }
    g.induced_edge_ideal(keep)
}

fn gens(n: usize, ms: Vec<Monomial>) -> edge_depth::Result<MonomialIdeal> {
    MonomialIdeal::minimalize(n, ms)
}

fn pow_or_zero(i: &MonomialIdeal, t: u32) -> edge_depth::Result<MonomialIdeal> {
    if i.is_zero() {
        Ok(i.clone())
    } else {
        i.power(t)
    }
}

struct Builder {
    cases: Vec<Case>,
}

impl Builder {
    fn push(
        &mut self,
        identity: &str,
        t: u32,
        weights: &[u32],
        n: usize,
        job: impl Fn() -> Sides + Send + Sync + 'static,
    ) {
        self.cases.push(Case {
            identity: identity.to_string(),
            n,
            t,
            weights: weights.to_vec(),
            job: Box::new(job),
        });
    }

    fn witnesses(&mut self) {
        let mut weightings: Vec<Vec<u32>> = Vec::new();
        for n in 3..=7 {
            weightings.push(vec![1; n]);
            for w1 in [2, 3] {
                let mut w = vec![1; n];
                w[0] = w1;
                weightings.push(w);
            }
            for (w1, w3) in [(2, 2), (3, 2)] {
                let mut w = vec![1; n];
                w[0] = w1;
                w[2] = w3;
                weightings.push(w);
            }
        }
        for w in weightings {
            let family = CycleFamily::from_weights(&w).expect("closed by construction");
            for kind in WitnessKind::ALL {
                for t in 1..=w.len() as u32 {
                    match build_witness(kind, &family, t) {
                        Err(Error::NotCovered(_)) => continue,
                        built => {
                            let label = format!("witness:{}", kind.as_str());
                            let n = family.n;
                            self.push(&label, t, &family.weights, n, move || {
                                let spec = built.clone()?;
                                Ok((spec.colon()?, spec.expected_colon))
                            });
                        }
                    }
                }
            }
        }
    }

    fn path_deletions(&mut self) {
        for n in 4..=6usize {
            for code in 0..3u32.pow(n as u32 - 2) {
                let mut w: Vec<u32> = (0..n - 2).map(|k| code / 3u32.pow(k as u32) % 3 + 1).collect();
                w.push(1);
                let g = WeightedGraph::path(n, &w).expect("valid path");
                for t in 2..=3 {
                    let i = g.edge_ideal();
                    let i1 = i.clone();
                    self.push("path:(I^t:x[n-1]x[n])=I^(t-1)", t, &w, n, move || {
                        Ok((i1.power(t)?.colon_monomial(&xs(n, &[n - 1, n]))?, i1.power(t - 1)?))
                    });
                    let (g2, i2) = (g.clone(), i.clone());
                    self.push("path:((I^t:x[n]),x[n-1])", t, &w, n, move || {
                        let lhs = plus(&i2.power(t)?.colon_monomial(&x(n, n))?, &[n - 1]);
                        Ok((lhs, plus(&pow_or_zero(&without(&g2, &[n - 1])?, t)?, &[n - 1])))
                    });
                    let (g3, i3) = (g.clone(), i.clone());
                    self.push("path:(I^t,x[n])", t, &w, n, move || {
                        Ok((plus(&i3.power(t)?, &[n]), plus(&pow_or_zero(&without(&g3, &[n])?, t)?, &[n])))
                    });
                    let (g4, i4) = (g.clone(), i.clone());
                    self.push("path:(I^t,x[n-1])", t, &w, n, move || {
                        Ok((
                            plus(&i4.power(t)?, &[n - 1]),
                            plus(&pow_or_zero(&without(&g4, &[n - 1])?, t)?, &[n - 1]),
                        ))
                    });
                    let (g5, i5) = (g.clone(), i.clone());
                    self.push("path:((I^t:x[n-1]),x[n])", t, &w, n, move || {
                        let lhs = plus(&i5.power(t)?.colon_monomial(&x(n, n - 1))?, &[n]);
                        let sub = pow_or_zero(&without(&g5, &[n])?, t)?;
                        Ok((lhs, plus(&sub.colon_monomial(&x(n, n - 1))?, &[n])))
                    });
                }
            }
        }
    }

    fn six_cycle(&mut self) {
        let n = 6;
        for w in [vec![2, 1, 2, 1, 2, 1], vec![3, 1, 2, 1, 2, 1]] {
            let g = WeightedGraph::cycle(n, &w).expect("valid cycle");
            for t in 2..=4u32 {
                let (g1, w1) = (g.clone(), w.clone());
                self.push("six-cycle:(I^t,x1)", t, &w1, n, move || {
                    let i = g1.edge_ideal();
                    Ok((plus(&i.power(t)?, &[1]), plus(&without(&g1, &[1])?.power(t)?, &[1])))
                });
                let g2 = g.clone();
                self.push("six-cycle:(I^t:x1x6)=I^(t-1)", t, &w, n, move || {
                    let i = g2.edge_ideal();
                    Ok((i.power(t)?.colon_monomial(&xs(n, &[1, 6]))?, i.power(t - 1)?))
                });
                let g3 = g.clone();
                self.push("six-cycle:((I^t:x1),x6)=((I^t,x6):x1)", t, &w, n, move || {
                    let p = g3.edge_ideal().power(t)?;
                    Ok((plus(&p.colon_monomial(&x(n, 1))?, &[6]), plus(&p, &[6]).colon_monomial(&x(n, 1))?))
                });
                let g4 = g.clone();
                self.push("six-cycle:(I^t,x6)", t, &w, n, move || {
                    let i = g4.edge_ideal();
                    Ok((plus(&i.power(t)?, &[6]), plus(&without(&g4, &[6])?.power(t)?, &[6])))
                });
                let g5 = g.clone();
                self.push("six-cycle:((I^t,x6),x1)", t, &w, n, move || {
                    let i = g5.edge_ideal();
                    Ok((plus(&i.power(t)?, &[6, 1]), plus(&on(&g5, &[2, 3, 4, 5])?.power(t)?, &[1, 6])))
                });
            }
            let (w1, w5) = (w[0], w[4]);
            let g6 = g.clone();
            self.push("six-cycle:(I:x2)", 1, &w, n, move || {
                let heavy = Monomial::new(vec![w1, w1 - 1, 0, 0, 0, 0])?;
                let rhs = on(&g6, &[1, 4, 5, 6])?.sum(&gens(n, vec![heavy, x(n, 3)])?)?;
                Ok((g6.edge_ideal().colon_monomial(&x(n, 2))?, rhs))
            });
            let g7 = g.clone();
            self.push("six-cycle:(I,x2)", 1, &w, n, move || {
                Ok((plus(&g7.edge_ideal(), &[2]), plus(&on(&g7, &[1, 3, 4, 5, 6])?, &[2])))
            });
            let g8 = g.clone();
            self.push("six-cycle:(I:x2x1)", 1, &w, n, move || {
                let rhs = gens(
                    n,
                    vec![
                        Monomial::new(vec![w1 - 1, w1 - 1, 0, 0, 0, 0])?,
                        x(n, 3),
                        xs(n, &[4, 5]),
                        x(n, 6),
                    ],
                )?;
                Ok((g8.edge_ideal().colon_monomial(&xs(n, &[1, 2]))?, rhs))
            });
            let g9 = g.clone();
            self.push("six-cycle:((I:x2),x1)", 1, &w, n, move || {
                let rhs = gens(
                    n,
                    vec![x(n, 1), x(n, 3), xs(n, &[4, 5]), Monomial::new(vec![0, 0, 0, 0, w5, w5])?],
                )?;
                Ok((plus(&g9.edge_ideal().colon_monomial(&x(n, 2))?, &[1]), rhs))
            });
        }
    }

    fn two_edge(&mut self) {
        for n in 4..=7usize {
            for (w1, w3) in [(2, 2), (3, 2)] {
                let mut w = vec![1; n];
                w[0] = w1;
                w[2] = w3;
                let g = WeightedGraph::cycle(n, &w).expect("valid cycle");
                for t in 2..=4u32 {
                    let g1 = g.clone();
                    self.push("two-edge:(I^t,x3)", t, &w, n, move || {
                        let p = g1.edge_ideal().power(t)?;
                        Ok((plus(&p, &[3]), plus(&without(&g1, &[3])?.power(t)?, &[3])))
                    });
                    let g2 = g.clone();
                    self.push("two-edge:(I^t:x3x2)=I^(t-1)", t, &w, n, move || {
                        let i = g2.edge_ideal();
                        Ok((i.power(t)?.colon_monomial(&xs(n, &[2, 3]))?, i.power(t - 1)?))
                    });
                    let g3 = g.clone();
                    self.push("two-edge:((I^t:x3),x2)=((I^t,x2):x3)", t, &w, n, move || {
                        let p = g3.edge_ideal().power(t)?;
                        Ok((plus(&p.colon_monomial(&x(n, 3))?, &[2]), plus(&p, &[2]).colon_monomial(&x(n, 3))?))
                    });
                    let g4 = g.clone();
                    self.push("two-edge:((I^t,x2),x3)", t, &w, n, move || {
                        let p = g4.edge_ideal().power(t)?;
                        Ok((plus(&p, &[2, 3]), plus(&without(&g4, &[2, 3])?.power(t)?, &[2, 3])))
                    });
                }
            }
        }
    }

    fn triangle(&mut self) {
        let n = 3;
        for (w1, w3) in [(2, 2), (3, 2), (3, 3)] {
            let w = vec![w1, 1, w3];
            let g = WeightedGraph::cycle(n, &w).expect("valid cycle");
            for t in 2..=4u32 {
                let g1 = g.clone();
                self.push("triangle:(I^t:x2x3)=I^(t-1)", t, &w, n, move || {
                    let i = g1.edge_ideal();
                    Ok((i.power(t)?.colon_monomial(&xs(n, &[2, 3]))?, i.power(t - 1)?))
                });
                let g2 = g.clone();
                self.push("triangle:((I^t:x2),x3)", t, &w, n, move || {
                    let p = g2.edge_ideal().power(t)?;
                    let rhs = gens(n, vec![Monomial::new(vec![w1 * t, w1 * t - 1, 0])?, x(n, 3)])?;
                    Ok((plus(&p.colon_monomial(&x(n, 2))?, &[3]), rhs))
                });
                let g3 = g.clone();
                self.push("triangle:(I^t,x2)", t, &w, n, move || {
                    let p = g3.edge_ideal().power(t)?;
                    let rhs = gens(n, vec![Monomial::new(vec![w3 * t, 0, w3 * t])?, x(n, 2)])?;
                    Ok((plus(&p, &[2]), rhs))
                });
            }
        }
    }

    /// First-power identities for at most two heavy edges `e1`, `e3`.
    fn first_power(&mut self) {
        for n in 4..=7usize {
            for w1 in [2, 3] {
                for w3 in [1, 2] {
                    if w3 > w1 {
                        continue;
                    }
                    let mut w = vec![1; n];
                    w[0] = w1;
                    w[2] = w3;
                    let g = WeightedGraph::cycle(n, &w).expect("valid cycle");
                    let g1 = g.clone();
                    self.push("first-power:(I,x2)", 1, &w, n, move || {
                        Ok((plus(&g1.edge_ideal(), &[2]), plus(&without(&g1, &[2])?, &[2])))
                    });
                    let g2 = g.clone();
                    self.push("first-power:(I:x2)", 1, &w, n, move || {
                        let mut e = vec![0; n];
                        e[0] = w1;
                        e[1] = w1 - 1;
                        let rhs = without(&g2, &[2, 3])?.sum(&gens(n, vec![Monomial::new(e)?, x(n, 3)])?)?;
                        Ok((g2.edge_ideal().colon_monomial(&x(n, 2))?, rhs))
                    });
                    let g3 = g.clone();
                    self.push("first-power:(I:x2x1)", 1, &w, n, move || {
                        let mut e = vec![0; n];
                        e[0] = w1 - 1;
                        e[1] = w1 - 1;
                        let mid: Vec<usize> = (4..n).collect();
                        let rhs = on(&g3, &mid)?.sum(&gens(n, vec![Monomial::new(e)?, x(n, 3), x(n, n)])?)?;
                        Ok((g3.edge_ideal().colon_monomial(&xs(n, &[1, 2]))?, rhs))
                    });
                    let g4 = g.clone();
                    self.push("first-power:((I:x2),x1)", 1, &w, n, move || {
                        let tail: Vec<usize> = (4..=n).collect();
                        let rhs = plus(&on(&g4, &tail)?, &[1, 3]);
                        Ok((plus(&g4.edge_ideal().colon_monomial(&x(n, 2))?, &[1]), rhs))
                    });
                }
            }
        }
    }
}

fn run(case: &Case) -> ColonCheck {
    let (passed, detail) = match (case.job)() {
        Ok((lhs, rhs)) => match lhs.equals(&rhs) {
            Ok(true) => (true, String::new()),
            Ok(false) => (false, format!("lhs {lhs} != rhs {rhs}")),
            Err(e) => (false, e.to_string()),
        },
        Err(e) => (false, e.to_string()),
    };
    ColonCheck {
        identity: case.identity.clone(),
        n: case.n,
        t: case.t,
        weights: case.weights.iter().map(u32::to_string).collect::<Vec<_>>().join("-"),
        passed,
        detail,
    }
}

fn all_cases() -> Vec<Case> {
    let mut b = Builder { cases: Vec::new() };
    b.witnesses();
    b.path_deletions();
    b.six_cycle();
    b.two_edge();
    b.triangle();
    b.first_power();
    b.cases
}

/// Every identity instance, in a fixed order.
pub fn cmd_colon_suite(cfg: &RunConfig) -> CliResult<Vec<ColonCheck>> {
    cfg.validate()?;
    let cases = all_cases();
    if cases.is_empty() {
        return Err(CliError::Input("no colon identities generated".into()));
    }
    Ok(cases.par_iter().map(run).collect())
}
