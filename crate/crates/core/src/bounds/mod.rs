//! Checkers for inequalities on `h`, `b` and `w` vectors, each reporting exact sides and slack.

mod bc;
mod ind;
mod kcm;
mod macaulay;

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::arith::{json_int, Int};
use crate::error::MatxError;
use crate::matroid::Matroid;
use crate::tutte::{coefficient_families, CoefficientFamilies};

pub use bc::{
    check_brylawski_floor, check_eq1, check_eq2, check_eqdisc, check_three_regular_series, check_w_bound,
};
pub use ind::{
    check_brown_colbourn, check_chari, check_g_theorem, check_ij_bound, check_ind_by_r, check_max_h,
    check_stanley_product, check_wagner,
};
pub use kcm::{
    check_kcm_floor, check_kcm_floor_complex, check_long_term, check_long_term_relative, check_relative_kcm,
    check_relative_kcm_complex, check_relative_kcm_raw, hvec_mrnk, m_rnk, rank2_matroid, rank2_minimizer,
    uniform_h, MrnkParams, Rank2Minimizer,
};
pub use macaulay::{is_cm_hvector, macaulay_decomposition, macaulay_power, phi};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Holds,
    Equality,
    Violation,
    ExpectedBelowThreshold,
    Skipped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "opt_int")]
    pub lhs: Option<Int>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<Relation>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "opt_int")]
    pub rhs: Option<Int>,
    /// Nonnegative exactly when the inequality holds.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "opt_int")]
    pub slack: Option<Int>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_equality: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn opt_int<S: serde::Serializer>(v: &Option<Int>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => json_int::serialize(x, s),
        None => s.serialize_none(),
    }
}

impl CheckResult {
    pub fn compare(check: &'static str, lhs: Int, relation: Relation, rhs: Int) -> Self {
        let slack = match relation {
            Relation::Le => &rhs - &lhs,
            Relation::Ge => &lhs - &rhs,
        };
        let verdict = if slack.is_zero() {
            Verdict::Equality
        } else if slack > Int::zero() {
            Verdict::Holds
        } else {
            Verdict::Violation
        };
        CheckResult {
            check,
            i: None,
            j: None,
            k: None,
            n: None,
            lhs: Some(lhs),
            relation: Some(relation),
            rhs: Some(rhs),
            slack: Some(slack),
            verdict,
            predicted_equality: None,
            note: None,
        }
    }

    /// A yes/no property, recorded as `Holds` or `Violation`.
    pub fn flag(check: &'static str, ok: bool, note: impl Into<String>) -> Self {
        CheckResult {
            check,
            i: None,
            j: None,
            k: None,
            n: None,
            lhs: None,
            relation: None,
            rhs: None,
            slack: None,
            verdict: if ok { Verdict::Holds } else { Verdict::Violation },
            predicted_equality: None,
            note: Some(note.into()),
        }
    }

    pub fn skipped(check: &'static str, reason: impl Into<String>) -> Self {
        CheckResult { verdict: Verdict::Skipped, ..Self::flag(check, true, reason) }
    }

    pub fn at(mut self, i: i64) -> Self {
        self.i = Some(i);
        self
    }

    pub fn at_j(mut self, j: i64) -> Self {
        self.j = Some(j);
        self
    }

    pub fn with_k(mut self, k: i64) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn is_violation(&self) -> bool {
        self.verdict == Verdict::Violation
    }
}

/// Everything the matroid checkers read, computed once.
#[derive(Clone, Debug)]
pub struct Profile {
    pub matroid: Matroid,
    pub n: usize,
    pub r: usize,
    pub families: CoefficientFamilies,
    /// `I_0..I_r`.
    pub independent: Vec<Int>,
    pub components: usize,
    pub loopless: bool,
    pub coloop_free: bool,
    pub connected: bool,
    pub min_cocircuit: Option<usize>,
    /// Series class sizes, when there are no coloops.
    pub series_sizes: Option<Vec<usize>>,
}

impl Profile {
    pub fn new(m: &Matroid) -> Self {
        let series_sizes = m.series_classes().ok().map(|cs| cs.iter().map(|c| c.len()).collect());
        Profile {
            matroid: m.clone(),
            n: m.n(),
            r: m.rank(),
            families: coefficient_families(m),
            independent: m.independent_counts().into_iter().map(Int::from).collect(),
            components: m.num_components(),
            loopless: m.loops().is_empty(),
            coloop_free: m.coloops().is_empty(),
            connected: m.is_connected(),
            min_cocircuit: m.min_cocircuit_size(),
            series_sizes,
        }
    }

    pub fn h(&self) -> &[Int] {
        &self.families.h
    }

    /// `b`, present for loopless matroids.
    pub fn b(&self) -> Option<&[Int]> {
        self.families.b.as_deref()
    }
}

impl From<&Matroid> for Profile {
    fn from(m: &Matroid) -> Self {
        Profile::new(m)
    }
}

/// Named groups of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Brylawski,
    Eq1,
    Eqdisc,
    Whitney,
    Eq2,
    Series,
    Kcm,
    G,
    Chari,
    Bc,
    Wagner,
    Stanley,
    Maxh,
    Indr,
    Ij,
    Longterm,
}

impl Suite {
    pub const NAMES: [(&'static str, Suite); 17] = [
        ("all", Suite::All),
        ("brylawski", Suite::Brylawski),
        ("eq1", Suite::Eq1),
        ("eqdisc", Suite::Eqdisc),
        ("whitney", Suite::Whitney),
        ("eq2", Suite::Eq2),
        ("series", Suite::Series),
        ("kcm", Suite::Kcm),
        ("g", Suite::G),
        ("chari", Suite::Chari),
        ("bc", Suite::Bc),
        ("wagner", Suite::Wagner),
        ("stanley", Suite::Stanley),
        ("maxh", Suite::Maxh),
        ("indr", Suite::Indr),
        ("ij", Suite::Ij),
        ("longterm", Suite::Longterm),
    ];

    pub fn name(self) -> &'static str {
        Self::NAMES.iter().find(|(_, s)| *s == self).map(|(n, _)| *n).expect("every suite is named")
    }
}

impl FromStr for Suite {
    type Err = MatxError;

    fn from_str(s: &str) -> Result<Self, MatxError> {
        Self::NAMES
            .iter()
            .find(|(n, _)| n.eq_ignore_ascii_case(s))
            .map(|(_, v)| *v)
            .ok_or_else(|| MatxError::Input(format!("unknown suite '{s}'")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Runs one suite on a matroid.
pub fn run_suite(p: &Profile, suite: Suite) -> Vec<CheckResult> {
    use Suite::*;
    let one = |s: Suite| -> Vec<CheckResult> {
        match s {
            Brylawski => check_brylawski_floor(p),
            Eq1 => check_eq1(p),
            Eqdisc => check_eqdisc(p),
            Whitney => check_w_bound(p),
            Eq2 => check_eq2(p),
            Series => vec![check_three_regular_series(p)],
            Kcm => match p.min_cocircuit {
                Some(k) => {
                    let mut out = check_kcm_floor(p, k).unwrap_or_else(|e| vec![CheckResult::skipped("kcm_floor", e.to_string())]);
                    out.extend(
                        check_relative_kcm(p, k)
                            .unwrap_or_else(|e| vec![CheckResult::skipped("relative_kcm", e.to_string())]),
                    );
                    out
                }
                None => vec![CheckResult::skipped("kcm_floor", "no cocircuits")],
            },
            G => check_g_theorem(p),
            Chari => check_chari(p),
            Bc => check_brown_colbourn(p),
            Wagner => check_wagner(p),
            Stanley => check_stanley_product(p),
            Maxh => check_max_h(p),
            Indr => check_ind_by_r(p),
            Ij => check_ij_bound(p),
            Longterm => {
                let kmax = p.min_cocircuit.unwrap_or(0);
                if kmax < 3 {
                    return vec![CheckResult::skipped("long_term", "smallest cocircuit has fewer than 3 elements")];
                }
                (3..=kmax)
                    .flat_map(|k| {
                        let mut out = check_long_term(p, k);
                        out.extend(check_long_term_relative(p, k));
                        out
                    })
                    .collect()
            }
            All => unreachable!(),
        }
    };
    if suite == All {
        Suite::NAMES.iter().filter(|(_, s)| *s != All).flat_map(|(_, s)| one(*s)).collect()
    } else {
        one(suite)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn verdicts_follow_comparison() {
        assert_eq!(CheckResult::compare("x", int(1), Relation::Le, int(2)).verdict, Verdict::Holds);
        assert_eq!(CheckResult::compare("x", int(2), Relation::Le, int(2)).verdict, Verdict::Equality);
        assert_eq!(CheckResult::compare("x", int(3), Relation::Le, int(2)).verdict, Verdict::Violation);
        let r = CheckResult::compare("x", int(3), Relation::Ge, int(2));
        assert_eq!((r.verdict, r.slack), (Verdict::Holds, Some(int(1))));
    }

    #[test]
    fn suite_names_round_trip() {
        for (name, s) in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap(), s);
            assert_eq!(s.to_string(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
