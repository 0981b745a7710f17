//! A registry of partition and q-series identities together with an engine
//! that checks each one over a parameter grid, plus the explicit bijections
//! behind two of them.
//!
//! Countwise identities compare integers at every grid point. Serieswise
//! identities compare two truncated series on a coefficient window. Every
//! mismatch is collected; a refutation is an ordinary outcome, reported with
//! counterexamples in lexicographic parameter order.

pub mod bijections;
mod memo;
pub mod qhyper;
mod registry;

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::closed_forms::ClosedFormError;
use crate::qobjects::{Monomial, QError};
use crate::series::{LaurentSeries, SeriesError};

pub use registry::registry;

/// Most counterexamples kept in a report; the total is in `mismatches`.
pub const MAX_COUNTEREXAMPLES: usize = 25;

#[derive(Debug, Error)]
pub enum IdentityError {
    #[error("unknown identity `{0}`")]
    NotFound(String),
    #[error("{id} at {point}: {message}")]
    Evaluation { id: String, point: String, message: String },
    #[error("{0}")]
    Invalid(String),
}

/// Failure inside a single evaluator.
#[derive(Debug, Error)]
pub enum EvalError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Q(#[from] QError),
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Countwise,
    Serieswise,
}

/// How an axis value is interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisKind {
    Integer,
    /// `0 -> 0`, `e > 0 -> q^e`, `e < 0 -> -q^{-e}`.
    SignedPower,
}

/// Decodes a [`AxisKind::SignedPower`] value.
pub fn signed_power(code: i64) -> Monomial {
    match code {
        0 => Monomial::ZERO,
        e if e > 0 => Monomial::q(e),
        e => Monomial::neg_q(-e),
    }
}

#[derive(Debug, Clone)]
pub struct Axis {
    pub name: &'static str,
    pub kind: AxisKind,
    pub values: Vec<i64>,
}

impl Axis {
    pub fn range(name: &'static str, lo: i64, hi: i64) -> Self {
        Self {
            name,
            kind: AxisKind::Integer,
            values: (lo..=hi).collect(),
        }
    }

    pub fn powers(name: &'static str, codes: &[i64]) -> Self {
        let mut values = codes.to_vec();
        values.sort_unstable();
        Self {
            name,
            kind: AxisKind::SignedPower,
            values,
        }
    }

    fn render(&self, v: i64) -> String {
        match self.kind {
            AxisKind::Integer => v.to_string(),
            AxisKind::SignedPower => signed_power(v).to_string(),
        }
    }

    fn describe(&self) -> String {
        let contiguous = self.values.windows(2).all(|w| w[1] == w[0] + 1);
        match (self.kind, self.values.first(), self.values.last()) {
            (_, None, _) | (_, _, None) => format!("{}=∅", self.name),
            (AxisKind::Integer, Some(lo), Some(hi)) if contiguous && lo != hi => {
                format!("{}={lo}..{hi}", self.name)
            }
            _ => {
                let vals: Vec<String> = self.values.iter().map(|&v| self.render(v)).collect();
                format!("{}={{{}}}", self.name, vals.join(","))
            }
        }
    }
}

/// Coupling between axes that removes points from the Cartesian product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    None,
    /// `l` divides `n`.
    LDividesN,
    /// `l` does not divide `n`.
    LNotDividesN,
    OddN,
    /// `m < l`.
    MBelowL,
    /// The exponent of `c` exceeds that of `b`.
    CAboveB,
}

impl Constraint {
    fn holds(self, p: &Point) -> bool {
        match self {
            Constraint::None => true,
            Constraint::LDividesN => p.int("n") % p.int("l") == 0,
            Constraint::LNotDividesN => p.int("n") % p.int("l") != 0,
            Constraint::OddN => p.int("n") % 2 != 0,
            Constraint::MBelowL => p.int("m") < p.int("l"),
            Constraint::CAboveB => p.mono("c").exp > p.mono("b").exp,
        }
    }

    fn describe(self) -> Option<&'static str> {
        match self {
            Constraint::None => None,
            Constraint::LDividesN => Some("l | n"),
            Constraint::LNotDividesN => Some("l ∤ n"),
            Constraint::OddN => Some("n odd"),
            Constraint::MBelowL => Some("m < l"),
            Constraint::CAboveB => Some("deg c > deg b"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Grid {
    pub axes: Vec<Axis>,
    pub constraint: Constraint,
}

impl Grid {
    pub fn new(axes: Vec<Axis>, constraint: Constraint) -> Self {
        Self { axes, constraint }
    }

    fn describe(&self, constrained: bool) -> String {
        let axes: Vec<String> = self.axes.iter().map(Axis::describe).collect();
        let mut s = axes.join(", ");
        if constrained {
            if let Some(c) = self.constraint.describe() {
                s.push_str(&format!(" ({c})"));
            }
        }
        s
    }

    /// Grid points in lexicographic order of the axis values.
    pub fn points(&self, constrained: bool) -> Vec<Point> {
        let mut out = vec![Point::default()];
        for axis in &self.axes {
            out = out
                .into_iter()
                .flat_map(|p| {
                    axis.values.iter().map(move |&v| {
                        let mut p = p.clone();
                        p.params.push(Param {
                            name: axis.name,
                            kind: axis.kind,
                            value: v,
                        });
                        p
                    })
                })
                .collect();
        }
        if constrained {
            out.retain(|p| self.constraint.holds(p));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Param {
    name: &'static str,
    kind: AxisKind,
    value: i64,
}

/// One assignment of grid parameters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Point {
    params: Vec<Param>,
}

impl Point {
    fn raw(&self, name: &str) -> i64 {
        self.params
            .iter()
            .find(|p| p.name == name)
            .unwrap_or_else(|| panic!("grid point has no parameter `{name}`"))
            .value
    }

    /// Integer parameter. Panics if absent, which is a registry bug.
    pub fn int(&self, name: &str) -> i64 {
        self.raw(name)
    }

    /// Unsigned integer parameter (`m`, `l`, ...).
    pub fn small(&self, name: &str) -> u32 {
        u32::try_from(self.raw(name)).expect("parameter is a small non-negative integer")
    }

    /// Monomial parameter.
    pub fn mono(&self, name: &str) -> Monomial {
        signed_power(self.raw(name))
    }

    fn rendered(&self) -> Vec<(String, String)> {
        self.params
            .iter()
            .map(|p| {
                let v = match p.kind {
                    AxisKind::Integer => p.value.to_string(),
                    AxisKind::SignedPower => signed_power(p.value).to_string(),
                };
                (p.name.to_string(), v)
            })
            .collect()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.rendered().into_iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&s.join(", "))
    }
}

/// Output of an evaluator.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Count(BigInt),
    Series(LaurentSeries),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Count(c) => write!(f, "{c}"),
            Value::Series(s) => write!(f, "{s}"),
        }
    }
}

/// Evaluates one side at a grid point; the second argument is the series order.
pub type Evaluator = fn(&Point, i64) -> Result<Value, EvalError>;

pub struct Identity {
    pub id: &'static str,
    /// The identity in plain notation.
    pub statement: &'static str,
    pub kind: Kind,
    pub grid: Grid,
    /// Coefficient window for serieswise checks.
    pub order: Option<i64>,
    pub lhs: Evaluator,
    pub rhs: Evaluator,
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity")
            .field("id", &self.id)
            .field("statement", &self.statement)
            .field("kind", &self.kind)
            .finish_non_exhaustive()
    }
}

pub fn find(id: &str) -> Option<Identity> {
    registry().into_iter().find(|i| i.id == id)
}

/// Adjustments to an identity's default grid.
#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Replaces the upper end of the `n` axis. Serieswise identities without
    /// an `n` axis check coefficients up to `q^{n_max}` instead.
    pub n_max: Option<i64>,
    pub order: Option<i64>,
    /// Also evaluate points the grid constraint would drop.
    pub ignore_constraint: bool,
    /// Worker threads; 0 or 1 means sequential.
    pub jobs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamValue {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub params: Vec<ParamValue>,
    /// First differing exponent, for serieswise identities.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent: Option<i64>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.params.iter().map(|p| format!("{}={}", p.name, p.value)).collect();
        write!(f, "{}", ps.join(", "))?;
        if let Some(e) = self.exponent {
            write!(f, " at q^{e}")?;
        }
        write!(f, ": lhs={} rhs={}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub kind: Kind,
    pub grid: String,
    pub points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<i64>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<String>,
    pub mismatches: usize,
    pub counterexamples: Vec<Counterexample>,
    pub wall_time_ms: f64,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = if self.points == 1 { "point" } else { "points" };
        write!(f, "{}: {} ({} {unit}", self.id, self.status, self.points)?;
        if let Some(o) = self.order {
            write!(f, ", order {o}")?;
        }
        f.write_str(")")?;
        if let Some(r) = &self.skip_reason {
            write!(f, " {r}")?;
        }
        if self.status == Status::Refuted {
            write!(f, ", {} mismatches; first {}", self.mismatches, self.counterexamples[0])?;
        }
        Ok(())
    }
}

/// Checks a registered identity.
pub fn verify(id: &str, opts: &VerifyOptions) -> Result<VerificationReport, IdentityError> {
    let identity = find(id).ok_or_else(|| IdentityError::NotFound(id.to_string()))?;
    verify_identity(&identity, opts)
}

fn apply_overrides(identity: &Identity, opts: &VerifyOptions) -> Result<(Grid, Option<i64>), IdentityError> {
    let mut grid = identity.grid.clone();
    let mut order = identity.order;
    if let Some(n_max) = opts.n_max {
        match grid.axes.iter_mut().find(|a| a.name == "n") {
            Some(axis) => {
                let lo = axis.values.first().copied().unwrap_or(0);
                axis.values = (lo..=n_max).collect();
            }
            None if identity.kind == Kind::Serieswise => order = Some(n_max + 1),
            None => {
                return Err(IdentityError::Invalid(format!(
                    "{} has no n axis to override",
                    identity.id
                )))
            }
        }
    }
    if let Some(o) = opts.order {
        if identity.kind != Kind::Serieswise {
            return Err(IdentityError::Invalid(format!(
                "{} is countwise; an order override does not apply",
                identity.id
            )));
        }
        order = Some(o);
    }
    Ok((grid, order))
}

enum Outcome {
    Match,
    Mismatch(Counterexample),
}

fn check_point(identity: &Identity, point: &Point, order: i64) -> Result<Outcome, IdentityError> {
    let wrap = |e: EvalError| IdentityError::Evaluation {
        id: identity.id.to_string(),
        point: point.to_string(),
        message: e.to_string(),
    };
    let lhs = (identity.lhs)(point, order).map_err(wrap)?;
    let rhs = (identity.rhs)(point, order).map_err(wrap)?;
    let params = || {
        point
            .rendered()
            .into_iter()
            .map(|(name, value)| ParamValue { name, value })
            .collect()
    };
    match (&lhs, &rhs) {
        (Value::Count(a), Value::Count(b)) => Ok(if a == b {
            Outcome::Match
        } else {
            Outcome::Mismatch(Counterexample {
                params: params(),
                exponent: None,
                lhs: a.to_string(),
                rhs: b.to_string(),
            })
        }),
        (Value::Series(a), Value::Series(b)) => {
            a.eq_to(b, order).map_err(|e| wrap(e.into()))?;
            Ok(match a.first_difference(b, order) {
                None => Outcome::Match,
                Some(e) => Outcome::Mismatch(Counterexample {
                    params: params(),
                    exponent: Some(e),
                    lhs: a.coeff(e).map_err(|e| wrap(e.into()))?.to_string(),
                    rhs: b.coeff(e).map_err(|e| wrap(e.into()))?.to_string(),
                }),
            })
        }
        _ => Err(IdentityError::Invalid(format!(
            "{}: sides evaluate to different kinds",
            identity.id
        ))),
    }
}

fn run_points(identity: &Identity, points: &[Point], order: i64, jobs: usize) -> Vec<Result<Outcome, IdentityError>> {
    if jobs <= 1 || points.len() < 2 {
        return points.iter().map(|p| check_point(identity, p, order)).collect();
    }
    let next = AtomicUsize::new(0);
    let mut indexed: Vec<(usize, Result<Outcome, IdentityError>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs.min(points.len()))
            .map(|_| {
                scope.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(p) = points.get(i) else { break };
                        done.push((i, check_point(identity, p, order)));
                    }
                    done
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("verification worker panicked"))
            .collect()
    });
    indexed.sort_by_key(|(i, _)| *i);
    indexed.into_iter().map(|(_, r)| r).collect()
}

/// Checks `identity` on its grid as adjusted by `opts`. Results do not depend
/// on `opts.jobs`.
pub fn verify_identity(identity: &Identity, opts: &VerifyOptions) -> Result<VerificationReport, IdentityError> {
    let start = Instant::now();
    let (grid, order) = apply_overrides(identity, opts)?;
    let constrained = !opts.ignore_constraint;
    let points = grid.points(constrained);
    let mut report = VerificationReport {
        id: identity.id.to_string(),
        kind: identity.kind,
        grid: grid.describe(constrained),
        points: points.len(),
        order,
        status: Status::Verified,
        skip_reason: None,
        mismatches: 0,
        counterexamples: Vec::new(),
        wall_time_ms: 0.0,
    };
    if points.is_empty() {
        report.status = Status::Skipped;
        report.skip_reason = Some("empty grid".into());
    } else {
        for outcome in run_points(identity, &points, order.unwrap_or(0), opts.jobs) {
            if let Outcome::Mismatch(cx) = outcome? {
                report.mismatches += 1;
                if report.counterexamples.len() < MAX_COUNTEREXAMPLES {
                    report.counterexamples.push(cx);
                }
            }
        }
        if report.mismatches > 0 {
            report.status = Status::Refuted;
        }
    }
    report.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_points_are_lexicographic_and_constrained() {
        let g = Grid::new(
            vec![Axis::range("l", 2, 3), Axis::range("n", 1, 6)],
            Constraint::LDividesN,
        );
        let pts: Vec<String> = g.points(true).iter().map(Point::to_string).collect();
        assert_eq!(pts, ["l=2, n=2", "l=2, n=4", "l=2, n=6", "l=3, n=3", "l=3, n=6"]);
        assert_eq!(g.points(false).len(), 12);
        assert_eq!(g.describe(true), "l=2..3, n=1..6 (l | n)");
    }

    #[test]
    fn power_axes() {
        let a = Axis::powers("a", &[3, 0, -1, 1]);
        assert_eq!(a.values, [-1, 0, 1, 3]);
        assert_eq!(a.describe(), "a={-q,0,q,q^3}");
        assert_eq!(signed_power(-2), Monomial::neg_q(2));
    }

    #[test]
    fn unknown_identity() {
        assert!(matches!(
            verify("nope", &VerifyOptions::default()),
            Err(IdentityError::NotFound(_))
        ));
    }

    #[test]
    fn registry_shape() {
        let ids: Vec<&str> = registry().iter().map(|i| i.id).collect();
        assert_eq!(ids.len(), 23);
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 23);
        assert_eq!(ids[0], "prop1");
        assert_eq!(ids[22], "ubar_gf");
    }

    #[test]
    fn small_overrides_verify() {
        let opts = VerifyOptions {
            n_max: Some(12),
            ..Default::default()
        };
        for id in [
            "prop1", "prop2", "prop3", "thmG1", "thm_a3", "thm_a4", "reg_a2", "over1",
        ] {
            let r = verify(id, &opts).unwrap();
            assert_eq!(r.status, Status::Verified, "{r}");
            assert!(r.counterexamples.is_empty());
        }
    }

    #[test]
    fn refutation_collects_counterexamples() {
        let opts = VerifyOptions {
            n_max: Some(9),
            ignore_constraint: true,
            ..Default::default()
        };
        let r = verify("reg_div", &opts).unwrap();
        assert_eq!(r.status, Status::Refuted);
        assert!(!r.counterexamples.is_empty());
        assert!(r.mismatches >= r.counterexamples.len());
        let first = &r.counterexamples[0];
        assert_eq!(first.params[0].value, "2");
        assert_eq!(first.params[1].value, "2");
    }

    #[test]
    fn parallel_matches_sequential() {
        let base = VerifyOptions {
            n_max: Some(10),
            ignore_constraint: true,
            ..Default::default()
        };
        let seq = verify("reg_nondiv", &base).unwrap();
        let par = verify("reg_nondiv", &VerifyOptions { jobs: 4, ..base }).unwrap();
        assert_eq!(seq.status, par.status);
        assert_eq!(seq.counterexamples, par.counterexamples);
        assert_eq!(seq.mismatches, par.mismatches);
    }

    #[test]
    fn empty_grid_is_skipped() {
        let opts = VerifyOptions {
            n_max: Some(0),
            ..Default::default()
        };
        let r = verify("prop1", &opts).unwrap();
        assert_eq!(r.status, Status::Skipped);
    }

    #[test]
    fn order_override_rejected_for_counts() {
        let opts = VerifyOptions {
            order: Some(10),
            ..Default::default()
        };
        assert!(matches!(verify("prop1", &opts), Err(IdentityError::Invalid(_))));
    }
}
