//! Registry of upper bounds on `i(G)` and `i(G)/γ(G)`, evaluated exactly.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::canon::is_isomorphic;
use crate::discharging::is_balanced_complete_bipartite;
use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundName {
    /// `i <= n/2`, connected `k`-regular, `k >= 1`.
    Rosenfeld,
    /// `i <= 2n/5`, connected cubic other than `K_{3,3}`.
    ThmCubic,
    /// `i <= (k-1)n/(2k-1)`, connected `k`-regular, `k >= 3`, other than `K_{k,k}`.
    ThmKreg,
    /// `i/γ <= (k³-3k²+2)/(2k²-6k+2)`, connected `k`-regular, `k >= 4`, other than `K_{k,k}`.
    RatioKreg,
    /// `i/γ <= k/2`, connected `k`-regular, `k >= 2`.
    KnorRatio,
    /// `i/γ <= 4/3`, connected cubic other than `K_{3,3}`.
    SoutheyRatio,
    /// `9i <= 5n + 4n₀`, maximum degree at most 4.
    Maxdeg4,
    /// `i <= f(Δ)n`, isolate-free with `Δ >= 1`; proven for `Δ <= 4`.
    ConjGeneral,
    /// `i <= 3n/8`, connected cubic other than `K_{3,3}` and `C5□K2`.
    GhConjecture,
    /// `i/γ <= 5/4`, connected cubic.
    OwestQuestion,
    /// `i/γ <= 3/2`, connected 4-regular other than `K_{4,4}`.
    QRatio4reg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    Proven,
    Candidate,
}

impl BoundName {
    pub const ALL: [BoundName; 11] = [
        BoundName::Rosenfeld,
        BoundName::ThmCubic,
        BoundName::ThmKreg,
        BoundName::RatioKreg,
        BoundName::KnorRatio,
        BoundName::SoutheyRatio,
        BoundName::Maxdeg4,
        BoundName::ConjGeneral,
        BoundName::GhConjecture,
        BoundName::OwestQuestion,
        BoundName::QRatio4reg,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::Rosenfeld => "rosenfeld",
            BoundName::ThmCubic => "thm-cubic",
            BoundName::ThmKreg => "thm-kreg",
            BoundName::RatioKreg => "ratio-kreg",
            BoundName::KnorRatio => "knor-ratio",
            BoundName::SoutheyRatio => "southey-ratio",
            BoundName::Maxdeg4 => "maxdeg4",
            BoundName::ConjGeneral => "conj-general",
            BoundName::GhConjecture => "gh-conjecture",
            BoundName::OwestQuestion => "owest-question",
            BoundName::QRatio4reg => "q-ratio-4reg",
        }
    }

    /// Whether the left-hand side is `i/γ` rather than `i`.
    pub fn is_ratio(self) -> bool {
        matches!(
            self,
            BoundName::RatioKreg
                | BoundName::KnorRatio
                | BoundName::SoutheyRatio
                | BoundName::OwestQuestion
                | BoundName::QRatio4reg
        )
    }

    /// Kind for graphs of maximum degree `delta`.
    pub fn kind(self, delta: usize) -> BoundKind {
        match self {
            BoundName::GhConjecture | BoundName::OwestQuestion | BoundName::QRatio4reg => {
                BoundKind::Candidate
            }
            BoundName::ConjGeneral if delta >= 5 => BoundKind::Candidate,
            _ => BoundKind::Proven,
        }
    }

    /// Registry entries that are theorems for every graph.
    pub fn proven() -> Vec<BoundName> {
        Self::ALL
            .into_iter()
            .filter(|b| b.kind(0) == BoundKind::Proven && *b != BoundName::ConjGeneral)
            .collect()
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().replace('_', "-");
        Self::ALL
            .into_iter()
            .find(|b| b.as_str() == key)
            .ok_or_else(|| Error::UnknownBound(s.to_string()))
    }
}

impl Serialize for BoundName {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Parameters for [`bound_value`]; each bound reads the ones it needs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BoundParams {
    pub k: Option<usize>,
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub n0: Option<usize>,
}

impl BoundParams {
    pub fn k(k: usize) -> Self {
        BoundParams {
            k: Some(k),
            ..Self::default()
        }
    }

    pub fn d(d: usize) -> Self {
        BoundParams {
            d: Some(d),
            ..Self::default()
        }
    }

    pub fn with_n(self, n: usize) -> Self {
        BoundParams { n: Some(n), ..self }
    }

    pub fn with_n0(self, n0: usize) -> Self {
        BoundParams {
            n0: Some(n0),
            ..self
        }
    }
}

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

fn need(value: Option<usize>, bound: BoundName, what: &str) -> Result<i64> {
    value
        .map(|v| v as i64)
        .ok_or_else(|| Error::InvalidParameters(format!("{bound} needs {what}")))
}

fn at_least(value: i64, min: i64, bound: BoundName, what: &str) -> Result<i64> {
    if value < min {
        Err(Error::InvalidParameters(format!(
            "{bound} needs {what} >= {min}"
        )))
    } else {
        Ok(value)
    }
}

/// `(k³ - 3k² + 2) / (2k² - 6k + 2)`.
pub fn ratio_kreg(k: usize) -> Result<Rational> {
    bound_value(BoundName::RatioKreg, BoundParams::k(k))
}

/// `(D² + 4)/(D + 2)²` for even `D`, `(D² + 3)/((D + 1)(D + 3))` for odd `D`.
pub fn conj_general(d: usize) -> Result<Rational> {
    bound_value(BoundName::ConjGeneral, BoundParams::d(d))
}

/// `c_k = (k² - 4k + 2)/(k² - 2k)`.
pub fn c_k(k: usize) -> Result<Rational> {
    let k = at_least(k as i64, 3, BoundName::RatioKreg, "k")?;
    Ok(r(k * k - 4 * k + 2, k * k - 2 * k))
}

/// `1 + (k - 3)/(c_k + 1)` equals the `ratio-kreg` coefficient.
pub fn ck_identity_check(k: usize) -> bool {
    let (Ok(c), Ok(target)) = (c_k(k), ratio_kreg(k)) else {
        return false;
    };
    Rational::ONE + Rational::from(k as i64 - 3) / (c + Rational::ONE) == target
}

/// Exact right-hand side. Per-vertex bounds return the coefficient of `n`,
/// or the full value when `n` is supplied; ratio bounds return the ratio.
pub fn bound_value(name: BoundName, params: BoundParams) -> Result<Rational> {
    let coefficient = match name {
        BoundName::Rosenfeld => r(1, 2),
        BoundName::ThmCubic => r(2, 5),
        BoundName::ThmKreg => {
            let k = at_least(need(params.k, name, "k")?, 3, name, "k")?;
            r(k - 1, 2 * k - 1)
        }
        BoundName::RatioKreg => {
            let k = at_least(need(params.k, name, "k")?, 4, name, "k")?;
            return Ok(r(k * k * k - 3 * k * k + 2, 2 * k * k - 6 * k + 2));
        }
        BoundName::KnorRatio => {
            let k = at_least(need(params.k, name, "k")?, 2, name, "k")?;
            return Ok(r(k, 2));
        }
        BoundName::SoutheyRatio => return Ok(r(4, 3)),
        BoundName::OwestQuestion => return Ok(r(5, 4)),
        BoundName::QRatio4reg => return Ok(r(3, 2)),
        BoundName::Maxdeg4 => {
            return Ok(match params.n {
                Some(n) => r(5 * n as i64 + 4 * params.n0.unwrap_or(0) as i64, 9),
                None => r(5, 9),
            });
        }
        BoundName::ConjGeneral => {
            let d = at_least(need(params.d, name, "D")?, 1, name, "D")?;
            if d % 2 == 0 {
                r(d * d + 4, (d + 2) * (d + 2))
            } else {
                r(d * d + 3, (d + 1) * (d + 3))
            }
        }
        BoundName::GhConjecture => r(3, 8),
    };
    Ok(match params.n {
        Some(n) => coefficient * Rational::from(n),
        None => coefficient,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Tight,
    Violated,
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Tight => "tight",
            Status::Violated => "violated",
            Status::NotApplicable => "not-applicable",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One bound checked on one graph. `lhs` and `rhs` are filled whenever the
/// formula is defined for the graph, even if its hypotheses fail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundVerdict {
    pub graph6: String,
    pub bound: BoundName,
    pub kind: BoundKind,
    pub applicable: bool,
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
    pub status: Status,
}

impl BoundVerdict {
    /// `lhs <= rhs` irrespective of hypotheses; `None` if undefined.
    pub fn inequality_holds(&self) -> Option<bool> {
        Some(self.lhs? <= self.rhs?)
    }
}

/// Structural facts the hypotheses read.
#[derive(Debug, Clone, Copy)]
struct Facts {
    n: usize,
    connected: bool,
    regularity: Option<usize>,
    max_degree: usize,
    isolated: usize,
    balanced_complete_bipartite: bool,
    prism5: bool,
}

impl Facts {
    fn of(g: &Graph) -> Self {
        let regularity = g.regularity();
        let prism5 = g.n() == 10
            && regularity == Some(3)
            && is_isomorphic(g, &families::prism(5).expect("valid")).unwrap_or(false);
        Facts {
            n: g.n(),
            connected: g.is_connected(),
            regularity,
            max_degree: g.max_degree(),
            isolated: g.isolated_count(),
            balanced_complete_bipartite: is_balanced_complete_bipartite(g),
            prism5,
        }
    }

    fn connected_regular(&self, k: usize) -> bool {
        self.n > 0 && self.connected && self.regularity == Some(k)
    }

    fn applicable(&self, bound: BoundName) -> bool {
        let k = self.regularity.unwrap_or(0);
        let connected_reg = self.n > 0 && self.connected && self.regularity.is_some();
        match bound {
            BoundName::Rosenfeld => connected_reg && k >= 1,
            BoundName::ThmCubic | BoundName::SoutheyRatio => {
                self.connected_regular(3) && !self.balanced_complete_bipartite
            }
            BoundName::ThmKreg => connected_reg && k >= 3 && !self.balanced_complete_bipartite,
            BoundName::RatioKreg => connected_reg && k >= 4 && !self.balanced_complete_bipartite,
            BoundName::KnorRatio => connected_reg && k >= 2,
            BoundName::Maxdeg4 => self.max_degree <= 4,
            BoundName::ConjGeneral => self.n > 0 && self.isolated == 0,
            BoundName::GhConjecture => {
                self.connected_regular(3) && !self.balanced_complete_bipartite && !self.prism5
            }
            BoundName::OwestQuestion => self.connected_regular(3),
            BoundName::QRatio4reg => self.connected_regular(4) && !self.balanced_complete_bipartite,
        }
    }

    fn params(&self) -> BoundParams {
        BoundParams {
            k: self.regularity,
            n: Some(self.n),
            d: Some(self.max_degree),
            n0: Some(self.isolated),
        }
    }
}

fn verdict(g6: &str, facts: &Facts, bound: BoundName, i: usize, gamma: usize) -> BoundVerdict {
    let applicable = facts.applicable(bound);
    let lhs = if bound.is_ratio() {
        (gamma > 0).then(|| Rational::new(i as i64, gamma as i64))
    } else {
        Some(Rational::from(i))
    };
    let params = facts.params();
    let params = if bound.is_ratio() {
        BoundParams { n: None, ..params }
    } else {
        params
    };
    let rhs = bound_value(bound, params).ok();
    let status = match (applicable, lhs, rhs) {
        (true, Some(l), Some(r)) if l > r => Status::Violated,
        (true, Some(l), Some(r)) if l == r => Status::Tight,
        (true, Some(_), Some(_)) => Status::Holds,
        _ => Status::NotApplicable,
    };
    BoundVerdict {
        graph6: g6.to_string(),
        bound,
        kind: bound.kind(facts.max_degree),
        applicable: status != Status::NotApplicable,
        lhs,
        rhs,
        status,
    }
}

/// Verdicts for the listed bounds; `i` and `gamma` must be `i(g)` and `γ(g)`.
pub fn check_bounds(g: &Graph, i: usize, gamma: usize, bounds: &[BoundName]) -> Vec<BoundVerdict> {
    let facts = Facts::of(g);
    let g6 = g.to_graph6();
    bounds
        .iter()
        .map(|&b| verdict(&g6, &facts, b, i, gamma))
        .collect()
}

/// One verdict per registry entry.
pub fn check_graph(g: &Graph, i: usize, gamma: usize) -> Vec<BoundVerdict> {
    check_bounds(g, i, gamma, &BoundName::ALL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::{exact_domination_number, exact_independent_domination_number};

    fn verdicts(g: &Graph) -> Vec<BoundVerdict> {
        let i = exact_independent_domination_number(g).value;
        let gamma = exact_domination_number(g).value;
        check_graph(g, i, gamma)
    }

    fn status(vs: &[BoundVerdict], b: BoundName) -> Status {
        vs.iter().find(|v| v.bound == b).unwrap().status
    }

    #[test]
    fn names_round_trip() {
        for b in BoundName::ALL {
            assert_eq!(b.as_str().parse::<BoundName>().unwrap(), b);
        }
        assert_eq!(
            "ratio_kreg".parse::<BoundName>().unwrap(),
            BoundName::RatioKreg
        );
        assert!(matches!(
            "nope".parse::<BoundName>(),
            Err(Error::UnknownBound(_))
        ));
        assert_eq!(BoundName::proven().len(), 7);
    }

    #[test]
    fn registry_values() {
        assert_eq!(ratio_kreg(4).unwrap(), r(9, 5));
        assert_eq!(ratio_kreg(5).unwrap(), r(26, 11));
        assert_eq!(conj_general(3).unwrap(), r(1, 2));
        assert_eq!(conj_general(4).unwrap(), r(5, 9));
        assert_eq!(
            conj_general(4).unwrap(),
            bound_value(BoundName::Maxdeg4, BoundParams::default()).unwrap()
        );
        assert_eq!(conj_general(1).unwrap(), r(1, 2));
        assert_eq!(conj_general(2).unwrap(), r(1, 2));
        assert_eq!(
            bound_value(BoundName::ThmKreg, BoundParams::k(4).with_n(14)).unwrap(),
            Rational::from(6i64)
        );
        assert_eq!(
            bound_value(
                BoundName::Maxdeg4,
                BoundParams::default().with_n(9).with_n0(0)
            )
            .unwrap(),
            Rational::from(5i64)
        );
        assert!(ratio_kreg(3).is_err());
        assert!(conj_general(0).is_err());
        assert!(bound_value(BoundName::ThmKreg, BoundParams::default()).is_err());
    }

    #[test]
    fn ck_identity() {
        assert_eq!(c_k(4).unwrap(), r(1, 4));
        assert_eq!(c_k(5).unwrap(), r(7, 15));
        for k in 4..=20 {
            assert!(ck_identity_check(k), "k = {k}");
        }
        assert!(!ck_identity_check(2));
    }

    #[test]
    fn ratio_kreg_below_knor() {
        for k in 4..=64 {
            let knor = bound_value(BoundName::KnorRatio, BoundParams::k(k)).unwrap();
            assert!(ratio_kreg(k).unwrap() < knor, "k = {k}");
        }
    }

    #[test]
    fn extremal_family_meets_conjectured_coefficient() {
        for d in 1..=8 {
            let g = families::conjectured_extremal(d).unwrap();
            assert_eq!(g.max_degree(), d);
            let i = exact_independent_domination_number(&g).value;
            assert_eq!(
                Rational::new(i as i64, g.n() as i64),
                conj_general(d).unwrap(),
                "D = {d}"
            );
        }
    }

    #[test]
    fn prism5_verdicts() {
        let vs = verdicts(&families::prism(5).unwrap());
        assert_eq!(status(&vs, BoundName::ThmCubic), Status::Tight);
        assert_eq!(status(&vs, BoundName::SoutheyRatio), Status::Tight);
        assert_eq!(status(&vs, BoundName::GhConjecture), Status::NotApplicable);
        assert_eq!(status(&vs, BoundName::OwestQuestion), Status::Violated);
        assert_eq!(status(&vs, BoundName::ThmKreg), Status::Tight);
        assert_eq!(status(&vs, BoundName::RatioKreg), Status::NotApplicable);
    }

    #[test]
    fn blowup_and_k44_verdicts() {
        let vs = verdicts(&families::cycle_blowup(7, 2).unwrap());
        assert_eq!(status(&vs, BoundName::ThmKreg), Status::Tight);
        assert_eq!(status(&vs, BoundName::RatioKreg), Status::Holds);

        let vs = verdicts(&families::complete_bipartite(4, 4).unwrap());
        assert_eq!(status(&vs, BoundName::ThmKreg), Status::NotApplicable);
        assert_eq!(status(&vs, BoundName::KnorRatio), Status::Tight);
        assert_eq!(status(&vs, BoundName::Rosenfeld), Status::Tight);
        let thm = vs.iter().find(|v| v.bound == BoundName::ThmKreg).unwrap();
        assert_eq!(thm.inequality_holds(), Some(false));
    }

    #[test]
    fn pendant_clique_verdicts() {
        let vs = verdicts(&families::pendant_clique(3, 2).unwrap());
        assert_eq!(status(&vs, BoundName::Maxdeg4), Status::Tight);
        assert_eq!(status(&vs, BoundName::ConjGeneral), Status::Tight);
        let conj = vs
            .iter()
            .find(|v| v.bound == BoundName::ConjGeneral)
            .unwrap();
        assert_eq!(conj.kind, BoundKind::Proven);
        assert_eq!(status(&vs, BoundName::Rosenfeld), Status::NotApplicable);
    }

    #[test]
    fn conj_general_kind_depends_on_degree() {
        let vs = verdicts(&families::conjectured_extremal(5).unwrap());
        let conj = vs
            .iter()
            .find(|v| v.bound == BoundName::ConjGeneral)
            .unwrap();
        assert_eq!(conj.kind, BoundKind::Candidate);
        assert_eq!(conj.status, Status::Tight);
    }

    #[test]
    fn isolated_vertices() {
        let g = Graph::empty(3).unwrap();
        let vs = check_graph(&g, 3, 3);
        assert_eq!(status(&vs, BoundName::Maxdeg4), Status::Tight);
        assert_eq!(status(&vs, BoundName::ConjGeneral), Status::NotApplicable);
        let empty = Graph::empty(0).unwrap();
        assert!(check_graph(&empty, 0, 0)
            .iter()
            .filter(|v| v.bound != BoundName::Maxdeg4)
            .all(|v| v.status == Status::NotApplicable));
    }

    #[test]
    fn k33_is_excluded() {
        let vs = verdicts(&families::complete_bipartite(3, 3).unwrap());
        assert_eq!(status(&vs, BoundName::ThmCubic), Status::NotApplicable);
        assert_eq!(status(&vs, BoundName::OwestQuestion), Status::Violated);
        assert_eq!(status(&vs, BoundName::KnorRatio), Status::Tight);
    }
}
