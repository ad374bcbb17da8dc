//! Closed-form depth values and bounds for powers of weighted path and cycle
//! edge ideals, and the witness monomials whose colon ideals pin the depth
//! from above.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CycleCase, CycleFamily, WeightedGraph};
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaKind {
    Exact,
    LowerBound,
    UpperBound,
}

impl FormulaKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FormulaKind::Exact => "exact",
            FormulaKind::LowerBound => "lower-bound",
            FormulaKind::UpperBound => "upper-bound",
        }
    }

    /// Whether an observed depth is consistent with a value of this kind.
    pub fn accepts(self, value: usize, depth: usize) -> bool {
        match self {
            FormulaKind::Exact => depth == value,
            FormulaKind::LowerBound => depth >= value,
            FormulaKind::UpperBound => depth <= value,
        }
    }
}

impl fmt::Display for FormulaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for FormulaKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(FormulaKind::Exact),
            "lower-bound" => Ok(FormulaKind::LowerBound),
            "upper-bound" => Ok(FormulaKind::UpperBound),
            other => Err(Error::Precondition(format!("unknown formula kind {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaResult {
    pub kind: FormulaKind,
    pub value: usize,
    /// Which branch of which statement produced the value.
    pub case: String,
    pub note: String,
}

impl FormulaResult {
    fn new(kind: FormulaKind, value: i64, case: &str, note: impl Into<String>) -> Self {
        assert!(value >= 0, "depth formulas are nonnegative");
        FormulaResult {
            kind,
            value: value as usize,
            case: case.to_string(),
            note: note.into(),
        }
    }

    pub fn accepts(&self, depth: usize) -> bool {
        self.kind.accepts(self.value, depth)
    }
}

/// Mathematical ceiling of `a / b` for `b > 0`, also for negative `a`.
pub fn ceil_div(a: i64, b: i64) -> i64 {
    assert!(b > 0);
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

fn c3(a: i64) -> i64 {
    ceil_div(a, 3)
}

/// `ceil((n + 1) / 2)`, the power where cycle depths stabilize.
pub fn stable_threshold(n: usize) -> usize {
    (n + 2) / 2
}

fn check_t(t: u32) -> Result<i64> {
    if t == 0 {
        return Err(Error::ZeroPower);
    }
    Ok(t as i64)
}

pub fn trivial_path_depth(n: usize, t: u32) -> Result<FormulaResult> {
    if n < 2 {
        return Err(Error::Precondition(format!("path needs n >= 2, got {n}")));
    }
    let t = check_t(t)?;
    let n = n as i64;
    Ok(FormulaResult::new(
        FormulaKind::Exact,
        c3(n - t + 1).max(1),
        "trivial-path",
        "max{ceil((n-t+1)/3), 1}",
    ))
}

pub fn trivial_cycle_depth(n: usize, t: u32) -> Result<FormulaResult> {
    if n < 3 {
        return Err(Error::Precondition(format!("cycle needs n >= 3, got {n}")));
    }
    let tt = check_t(t)?;
    let ni = n as i64;
    let r = if tt == 1 {
        FormulaResult::new(FormulaKind::Exact, c3(ni - 1), "trivial-cycle:t=1", "ceil((n-1)/3)")
    } else if (t as usize) < stable_threshold(n) {
        FormulaResult::new(
            FormulaKind::Exact,
            c3(ni - tt + 1),
            "trivial-cycle:below-threshold",
            "ceil((n-t+1)/3)",
        )
    } else if n.is_multiple_of(2) {
        FormulaResult::new(FormulaKind::Exact, 1, "trivial-cycle:even-stable", "n even, t >= n/2+1")
    } else {
        FormulaResult::new(FormulaKind::Exact, 0, "trivial-cycle:odd-stable", "n odd, t >= (n+1)/2")
    };
    Ok(r)
}

/// Weight facts about a weighted path around the governing edge `e_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PathFlags {
    /// `w_2 > 1`.
    pub a: bool,
    /// `e_{i+2}` exists and `w_{i+2} > 1`.
    pub b: bool,
    /// Four vertices with `w_1, w_3 > 1` and `w_2 = 1`.
    pub outer: bool,
}

impl PathFlags {
    /// Flags for the path with edge weights `weights` (`w_k = weights[k-1]`)
    /// around position `i`.
    pub fn at(weights: &[u32], i: usize) -> PathFlags {
        let w = |k: usize| weights.get(k.wrapping_sub(1)).copied();
        PathFlags {
            a: w(2).is_some_and(|x| x > 1),
            b: w(i + 2).is_some_and(|x| x > 1),
            outer: weights.len() == 3
                && w(1).is_some_and(|x| x > 1)
                && w(3).is_some_and(|x| x > 1)
                && w(2) == Some(1),
        }
    }
}

/// Positions `i` (1-based) of the left non-trivial edge of a weighted path:
/// `w_i >= 2`, no non-trivial edge at `i - 2`, and `w_i >= w_{i+2}` whenever
/// `e_{i+2}` exists. Empty if the heavier edge sits on the right; reverse
/// the weights in that case.
pub fn governing_positions(weights: &[u32]) -> Vec<usize> {
    (1..=weights.len())
        .filter(|&i| {
            let wi = weights[i - 1];
            let left_clear = i < 3 || weights[i - 3] == 1;
            wi >= 2 && left_clear && weights.get(i + 1).is_none_or(|&w2| wi >= w2)
        })
        .collect()
}

fn check_path_position(n: usize, i: usize) -> Result<()> {
    if n < 2 || i == 0 || i >= n {
        return Err(Error::Precondition(format!(
            "edge position {i} outside a path on {n} vertices"
        )));
    }
    Ok(())
}

pub fn weighted_path_depth_t1(n: usize, i: usize, flags: PathFlags) -> Result<FormulaResult> {
    check_path_position(n, i)?;
    let r = match n {
        2 | 3 => FormulaResult::new(FormulaKind::Exact, 1, "weighted-path-t1:n<=3", "1"),
        4 => FormulaResult::new(
            FormulaKind::Exact,
            2 - i64::from(flags.a),
            "weighted-path-t1:n=4",
            "2 - a",
        ),
        _ => {
            let (n, i, b) = (n as i64, i as i64, i64::from(flags.b));
            FormulaResult::new(
                FormulaKind::Exact,
                (c3(i) + c3(n - i - b)).min(c3(i - 2) + c3(n - i - 2) + 1),
                "weighted-path-t1:n>=5",
                "min{ceil(i/3)+ceil((n-i-b)/3), ceil((i-2)/3)+ceil((n-i-2)/3)+1}",
            )
        }
    };
    Ok(r)
}

pub fn weighted_path_depth_lower(
    n: usize,
    i: usize,
    t: u32,
    flags: PathFlags,
) -> Result<FormulaResult> {
    check_path_position(n, i)?;
    let tt = check_t(t)?;
    if t < 2 {
        return Err(Error::NotCovered(format!("power bound needs t >= 2, got {t}")));
    }
    let ni = n as i64;
    let r = match n {
        2 | 3 => FormulaResult::new(FormulaKind::Exact, 1, "weighted-path-power:n<=3", "1"),
        4 => FormulaResult::new(
            FormulaKind::LowerBound,
            if flags.outer { 2 } else { 1 },
            "weighted-path-power:n=4",
            "2 if w1, w3 > 1 and w2 = 1, else 1",
        ),
        _ if i == 1 => {
            let floor = if flags.b { 2 } else { 1 };
            FormulaResult::new(
                FormulaKind::LowerBound,
                c3(ni - tt + 1).max(floor),
                "weighted-path-power:n>=5,i=1",
                format!("max{{ceil((n-t+1)/3), {floor}}}"),
            )
        }
        _ => {
            if flags.b {
                FormulaResult::new(
                    FormulaKind::LowerBound,
                    c3(ni - tt).max(2),
                    "weighted-path-power:n>=5,i>1,heavy",
                    "max{ceil((n-t)/3), 2}",
                )
            } else if i % 3 == 1 && n % 3 == 2 && t == 2 {
                FormulaResult::new(
                    FormulaKind::LowerBound,
                    c3(ni - 1),
                    "weighted-path-power:n>=5,i>1,special",
                    "ceil((n-1)/3)",
                )
            } else {
                FormulaResult::new(
                    FormulaKind::LowerBound,
                    c3(ni - tt).max(1),
                    "weighted-path-power:n>=5,i>1",
                    "max{ceil((n-t)/3), 1}",
                )
            }
        }
    };
    Ok(r)
}

/// Checks the path is non-trivially weighted and integrally closed, picks
/// the first governing position, and dispatches on `t`.
pub fn weighted_path_depth(weights: &[u32], t: u32) -> Result<FormulaResult> {
    let n = weights.len() + 1;
    let g = WeightedGraph::path(n, weights)?;
    if let Some((pattern, vertices)) = g.integral_closure_certificate().violation {
        return Err(Error::NotIntegrallyClosed { pattern, vertices });
    }
    if g.is_trivially_weighted() {
        return trivial_path_depth(n, t);
    }
    let reversed: Vec<u32> = weights.iter().rev().copied().collect();
    let w = if governing_positions(weights).is_empty() {
        reversed.as_slice()
    } else {
        weights
    };
    let i = governing_positions(w)[0];
    let flags = PathFlags::at(w, i);
    if t == 1 {
        weighted_path_depth_t1(n, i, flags)
    } else {
        weighted_path_depth_lower(n, i, t, flags)
    }
}

/// Depth of `S/I(C)^t` for an integrally closed weighted cycle.
pub fn weighted_cycle_depth(family: &CycleFamily, t: u32) -> Result<FormulaResult> {
    let tt = check_t(t)?;
    let n = family.n;
    let ni = n as i64;
    let r = match family.case {
        CycleCase::Trivial => return trivial_cycle_depth(n, t),
        CycleCase::OneEdge => {
            if (t as usize) < stable_threshold(n) {
                FormulaResult::new(
                    FormulaKind::Exact,
                    c3(ni - tt),
                    "one-edge:below-threshold",
                    "ceil((n-t)/3)",
                )
            } else if n.is_multiple_of(2) {
                FormulaResult::new(FormulaKind::Exact, 1, "one-edge:even-stable", "n even")
            } else {
                FormulaResult::new(FormulaKind::Exact, 0, "one-edge:odd-stable", "n odd")
            }
        }
        CycleCase::TwoEdge => FormulaResult::new(
            FormulaKind::Exact,
            c3(ni - tt).max(1),
            "two-edge",
            "max{ceil((n-t)/3), 1}",
        ),
        CycleCase::ThreeEdgeN6 => FormulaResult::new(FormulaKind::Exact, 2, "three-edge-n6", "2"),
    };
    Ok(r)
}

/// Lower bound `max{ceil((n-t)/3), 1}` for two non-trivial edges, `n >= 4`.
pub fn two_edge_lower_bound(family: &CycleFamily, t: u32) -> Result<FormulaResult> {
    let tt = check_t(t)?;
    if family.case != CycleCase::TwoEdge || family.n < 4 {
        return Err(Error::NotCovered(format!(
            "two-edge bound needs a two-edge cycle with n >= 4, got {} with n = {}",
            family.case, family.n
        )));
    }
    Ok(FormulaResult::new(
        FormulaKind::LowerBound,
        c3(family.n as i64 - tt).max(1),
        "two-edge:lower",
        "max{ceil((n-t)/3), 1}",
    ))
}

fn check_one_edge_window(family: &CycleFamily, t: u32) -> Result<()> {
    let n = family.n;
    if family.case != CycleCase::OneEdge || n < 4 || t < 2 || t as usize >= stable_threshold(n) {
        return Err(Error::NotCovered(format!(
            "needs one non-trivial edge, n >= 4 and 2 <= t < {}; got {} with n = {n}, t = {t}",
            stable_threshold(n),
            family.case
        )));
    }
    Ok(())
}

/// Lower bound `ceil((n-t)/3)` on `depth(S/(I^t, g))`, where `g` is the
/// auxiliary monomial of [`WitnessKind::OneEdgeAuxiliary`].
pub fn one_edge_auxiliary_lower_bound(family: &CycleFamily, t: u32) -> Result<FormulaResult> {
    check_one_edge_window(family, t)?;
    Ok(FormulaResult::new(
        FormulaKind::LowerBound,
        c3(family.n as i64 - t as i64),
        "one-edge:auxiliary-lower",
        "ceil((n-t)/3) for S/(I^t, g)",
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// Two non-trivial edges on four vertices, `t >= 2`.
    FourCycle,
    /// Two non-trivial edges, `n >= 5`, `t >= 2`.
    TwoEdge,
    /// One non-trivial edge below the stable threshold.
    OneEdge,
    /// The auxiliary monomial `g` for one non-trivial edge.
    OneEdgeAuxiliary,
    /// Odd `n`, `t >= (n+1)/2`: the colon is the maximal ideal.
    OddStable,
    /// Even `n`, `t >= n/2 + 1`.
    EvenStable,
}

impl WitnessKind {
    pub const ALL: [WitnessKind; 6] = [
        WitnessKind::FourCycle,
        WitnessKind::TwoEdge,
        WitnessKind::OneEdge,
        WitnessKind::OneEdgeAuxiliary,
        WitnessKind::OddStable,
        WitnessKind::EvenStable,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            WitnessKind::FourCycle => "four-cycle",
            WitnessKind::TwoEdge => "two-edge",
            WitnessKind::OneEdge => "one-edge",
            WitnessKind::OneEdgeAuxiliary => "one-edge-aux",
            WitnessKind::OddStable => "odd-stable",
            WitnessKind::EvenStable => "even-stable",
        }
    }
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A monomial `f` outside `I^t` together with the colon `(I^t : f)` it is
/// expected to produce.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSpec {
    pub kind: WitnessKind,
    pub n: usize,
    pub t: u32,
    pub weights: Vec<u32>,
    pub f: Monomial,
    pub expected_colon: MonomialIdeal,
}

impl WitnessSpec {
    pub fn ideal(&self) -> MonomialIdeal {
        WeightedGraph::cycle(self.n, &self.weights)
            .expect("witness built from a valid cycle")
            .edge_ideal()
    }

    /// The actual colon `(I^t : f)`.
    pub fn colon(&self) -> Result<MonomialIdeal> {
        self.ideal().power(self.t)?.colon_monomial(&self.f)
    }
}

/// Exponent vector builder with 1-based, cyclically wrapped indices.
struct Exps {
    e: Vec<u32>,
}

impl Exps {
    fn new(n: usize) -> Self {
        Exps { e: vec![0; n] }
    }

    fn add(&mut self, k: usize, by: u32) -> &mut Self {
        let n = self.e.len();
        self.e[(k - 1) % n] += by;
        self
    }

    fn mono(&self) -> Monomial {
        Monomial::new(self.e.clone()).expect("n >= 3")
    }
}

fn var(n: usize, k: usize) -> Monomial {
    Monomial::variable(n, (k - 1) % n)
}

fn prod2(n: usize, a: usize, b: usize) -> Monomial {
    let mut e = Exps::new(n);
    e.add(a, 1).add(b, 1);
    e.mono()
}

fn out_of_window(kind: WitnessKind, family: &CycleFamily, t: u32, why: &str) -> Error {
    Error::NotCovered(format!(
        "{kind} witness needs {why}; got {} cycle with n = {}, t = {t}",
        family.case, family.n
    ))
}

/// Builds the witness of the given kind for a normalized cycle family
/// (`w_1 >= w_3` carry the weight, all other edges trivial).
pub fn build_witness(kind: WitnessKind, family: &CycleFamily, t: u32) -> Result<WitnessSpec> {
    let n = family.n;
    let w = &family.weights;
    let w1 = w[0];
    let i = family.ideal();
    let tu = t as usize;
    let (f, colon) = match kind {
        WitnessKind::FourCycle => {
            if family.case != CycleCase::TwoEdge || n != 4 || t < 2 {
                return Err(out_of_window(kind, family, t, "two non-trivial edges, n = 4, t >= 2"));
            }
            let mut f = Exps::new(n);
            f.add(1, 1).add(3, (t - 1) * w[2]).add(4, (t - 1) * w[2]);
            (f.mono(), MonomialIdeal::variables(n, [0, 1, 3]))
        }
        WitnessKind::TwoEdge => {
            if family.case != CycleCase::TwoEdge || n < 5 || t < 2 {
                return Err(out_of_window(kind, family, t, "two non-trivial edges, n >= 5, t >= 2"));
            }
            let w3 = w[2];
            let mut f = Exps::new(n);
            f.add(5, 1);
            if tu <= n - 3 {
                f.add(3, w3).add(4, w3);
                for k in 5..=tu + 2 {
                    f.add(k, 1).add(k + 1, 1);
                }
                let vars: Vec<usize> = std::iter::once(2)
                    .chain(4..=tu + 4)
                    .map(|k| (k - 1) % n)
                    .collect();
                (f.mono(), i.with_variables(vars))
            } else {
                let e = (t + 3 - n as u32) * w3;
                f.add(3, e).add(4, e);
                for k in 5..=n {
                    f.add(k, 1).add(k + 1, 1);
                }
                (f.mono(), MonomialIdeal::variables(n, (0..n).filter(|&j| j != 2)))
            }
        }
        WitnessKind::OneEdge => {
            check_one_edge_window(family, t).map_err(|_| {
                out_of_window(kind, family, t, "one non-trivial edge, n >= 4, 2 <= t < ceil((n+1)/2)")
            })?;
            let mut f = Exps::new(n);
            f.add(3, 1).add(1, w1).add(2, w1);
            for k in 3..=tu {
                f.add(k, 1).add(k + 1, 1);
            }
            let vars: Vec<usize> = (2..=tu + 2).chain(std::iter::once(n)).map(|k| k - 1).collect();
            (f.mono(), i.with_variables(vars))
        }
        WitnessKind::OneEdgeAuxiliary => {
            check_one_edge_window(family, t).map_err(|_| {
                out_of_window(kind, family, t, "one non-trivial edge, n >= 4, 2 <= t < ceil((n+1)/2)")
            })?;
            let f = one_edge_auxiliary(family, t)?;
            let mut gens: Vec<Monomial> = i.generators().to_vec();
            let mut sq = Exps::new(n);
            sq.add(n, 2);
            gens.push(sq.mono());
            for a in 0..=tu - 2 {
                gens.push(prod2(n, 3, 2 * a + 3));
            }
            for j in 1..tu {
                gens.push(prod2(n, 2 * j + 1, n));
            }
            for p in 1..=tu.saturating_sub(2) {
                for q in 0..=(tu - p - 2) {
                    gens.push(prod2(n, 2 * p, 2 * p + 2 * q + 3));
                }
            }
            (f, MonomialIdeal::minimalize(n, gens)?)
        }
        WitnessKind::OddStable => {
            let covered = matches!(family.case, CycleCase::OneEdge | CycleCase::Trivial);
            if !covered || n.is_multiple_of(2) || tu < n.div_ceil(2) {
                return Err(out_of_window(
                    kind,
                    family,
                    t,
                    "at most one non-trivial edge, n odd, t >= (n+1)/2",
                ));
            }
            let e = (t - (n as u32 - 1) / 2) * w1;
            let mut f = Exps::new(n);
            f.add(1, e).add(2, e);
            for j in 3..=n {
                f.add(j, 1);
            }
            (f.mono(), MonomialIdeal::maximal(n))
        }
        WitnessKind::EvenStable => {
            if family.case != CycleCase::OneEdge || n % 2 == 1 || tu < n / 2 + 1 {
                return Err(out_of_window(
                    kind,
                    family,
                    t,
                    "one non-trivial edge, n even, t >= n/2 + 1",
                ));
            }
            let e = (t - n as u32 / 2) * w1;
            let mut f = Exps::new(n);
            f.add(1, e).add(2, e);
            for k in 3..=n {
                f.add(k, 1);
            }
            let h = n / 2;
            let mut gens: Vec<Monomial> = (1..h).map(|k| prod2(n, 1, 2 * k)).collect();
            for a in 2..h {
                for b in 1..h {
                    gens.push(prod2(n, 2 * a + 1, 2 * b));
                }
            }
            gens.push(var(n, 3));
            gens.push(var(n, n));
            (f.mono(), MonomialIdeal::minimalize(n, gens)?)
        }
    };
    if i.power(t)?.contains(&f)? {
        return Err(Error::Precondition(format!("witness {f} lies in I^{t}")));
    }
    Ok(WitnessSpec {
        kind,
        n,
        t,
        weights: w.clone(),
        f,
        expected_colon: colon,
    })
}

/// `g = (x1 x2)^{w1} x3 x4 ... x_{2t-2}`.
pub fn one_edge_auxiliary(family: &CycleFamily, t: u32) -> Result<Monomial> {
    check_one_edge_window(family, t)?;
    let mut g = Exps::new(family.n);
    g.add(1, family.weights[0]).add(2, family.weights[0]);
    for k in 3..=(2 * t as usize - 2) {
        g.add(k, 1);
    }
    Ok(g.mono())
}
