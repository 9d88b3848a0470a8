//! Irreducibility decisions.
//!
//! Two independent deciders are compared:
//!
//! * the closed-form conditions. With `x1 = x2` the representation is
//!   irreducible iff `z1·y2 ≠ y1·z2` and `z1·y1 ≠ y2·z2`. With `x1 ≠ x2` it
//!   is irreducible iff `x1y2z2 ≠ x2y1z1`, `x1y1z2 ≠ x2y2z1`,
//!   `x1y2z1 ≠ x2y1z2` and `x1y1z1 ≠ x2y2z2`.
//! * a brute-force oracle: a 2-dimensional representation is reducible iff
//!   the three generator images share an eigendirection.
//!
//! The oracle makes no assumption about the branch of `r` and is treated as
//! the ground truth. The closed-form "if" directions only hold when `r`
//! equals a particular signed product (e.g. `+x2y1z1`); when the principal
//! root picks the other sign, the two deciders disagree and
//! [`branch_diagnosis`] shows that flipping `r` restores agreement.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::matrix2::{common_eigendirections, is_eigendirection, parallel, Mat2, Vec2};
use crate::numerics::{approx_eq, rel_eq, ComplexValue, DEFAULT_TOL};
use crate::params::Params;
use crate::representation::{
    build, conjugator_t, s1_offdiag_vanishes, GeneratorTriple, Regime, RootSign,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    Irreducible,
    Reducible,
}

/// Regime selection: by tolerance on `x1 ≈ x2`, or forced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegimeChoice {
    #[default]
    Auto,
    Equal,
    Distinct,
}

impl FromStr for RegimeChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(RegimeChoice::Auto),
            "equal" => Ok(RegimeChoice::Equal),
            "distinct" => Ok(RegimeChoice::Distinct),
            other => Err(format!("expected auto, equal or distinct, got {other:?}")),
        }
    }
}

/// One reducibility condition, identified by regime and case number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseId {
    /// `z1 = y1z2/y2`
    EqualCase1,
    /// `z1 = y2z2/y1`
    EqualCase2,
    /// `x1y2z2 = x2y1z1`
    DistinctI,
    /// `x1y1z2 = x2y2z1`
    DistinctIi,
    /// `x1y2z1 = x2y1z2`
    DistinctIii,
    /// `x1y1z1 = x2y2z2`
    DistinctIv,
}

impl CaseId {
    pub const EQUAL: [CaseId; 2] = [CaseId::EqualCase1, CaseId::EqualCase2];
    pub const DISTINCT: [CaseId; 4] = [
        CaseId::DistinctI,
        CaseId::DistinctIi,
        CaseId::DistinctIii,
        CaseId::DistinctIv,
    ];

    pub fn for_regime(regime: Regime) -> &'static [CaseId] {
        match regime {
            Regime::EqualX => &Self::EQUAL,
            Regime::DistinctX => &Self::DISTINCT,
        }
    }

    pub fn regime(self) -> Regime {
        match self {
            CaseId::EqualCase1 | CaseId::EqualCase2 => Regime::EqualX,
            _ => Regime::DistinctX,
        }
    }

    /// The condition in cross-multiplied form.
    pub fn equation(self) -> &'static str {
        match self {
            CaseId::EqualCase1 => "z1*y2 = y1*z2",
            CaseId::EqualCase2 => "z1*y1 = y2*z2",
            CaseId::DistinctI => "x1*y2*z2 = x2*y1*z1",
            CaseId::DistinctIi => "x1*y1*z2 = x2*y2*z1",
            CaseId::DistinctIii => "x1*y2*z1 = x2*y1*z2",
            CaseId::DistinctIv => "x1*y1*z1 = x2*y2*z2",
        }
    }

    /// Left and right side of [`CaseId::equation`] at `p`.
    pub fn sides(self, p: &Params) -> (ComplexValue, ComplexValue) {
        let Params {
            x1,
            x2,
            y1,
            y2,
            z1,
            z2,
            ..
        } = *p;
        match self {
            CaseId::EqualCase1 => (z1 * y2, y1 * z2),
            CaseId::EqualCase2 => (z1 * y1, y2 * z2),
            CaseId::DistinctI => (x1 * y2 * z2, x2 * y1 * z1),
            CaseId::DistinctIi => (x1 * y1 * z2, x2 * y2 * z1),
            CaseId::DistinctIii => (x1 * y2 * z1, x2 * y1 * z2),
            CaseId::DistinctIv => (x1 * y1 * z1, x2 * y2 * z2),
        }
    }

    /// Root value for which the condition makes the relevant off-diagonal
    /// entry vanish: under the condition `x1x2y1y2z1z2` is the square of
    /// this product, and only `r = +product` gives reducibility.
    pub fn implied_root(self, p: &Params) -> ComplexValue {
        let Params {
            x2, y1, y2, z1, z2, ..
        } = *p;
        match self {
            CaseId::EqualCase1 => x2 * y1 * z2,
            CaseId::EqualCase2 => x2 * y2 * z2,
            CaseId::DistinctI => x2 * y1 * z1,
            CaseId::DistinctIi => x2 * y2 * z1,
            CaseId::DistinctIii => x2 * y1 * z2,
            CaseId::DistinctIv => x2 * y2 * z2,
        }
    }

    /// `p` with one parameter solved so the condition holds exactly (up to
    /// floating-point rounding): `z1` for equal-x cases (and `x1 := x2`),
    /// `x1` for distinct-x cases.
    pub fn solve(self, p: &Params) -> Params {
        let mut q = *p;
        let Params {
            x2, y1, y2, z1, z2, ..
        } = *p;
        match self {
            CaseId::EqualCase1 => {
                q.x1 = x2;
                q.z1 = y1 * z2 / y2;
            }
            CaseId::EqualCase2 => {
                q.x1 = x2;
                q.z1 = y2 * z2 / y1;
            }
            CaseId::DistinctI => q.x1 = x2 * y1 * z1 / (y2 * z2),
            CaseId::DistinctIi => q.x1 = x2 * y2 * z1 / (y1 * z2),
            CaseId::DistinctIii => q.x1 = x2 * y1 * z2 / (y2 * z1),
            CaseId::DistinctIv => q.x1 = x2 * y2 * z2 / (y1 * z1),
        }
        q
    }
}

/// A condition evaluated at concrete parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionFlag {
    pub case: CaseId,
    pub equation: String,
    #[serde(with = "crate::io::complex")]
    pub lhs: ComplexValue,
    #[serde(with = "crate::io::complex")]
    pub rhs: ComplexValue,
    /// Whether the two sides agree within the relative tolerance.
    pub holds: bool,
}

impl ConditionFlag {
    pub fn evaluate(case: CaseId, p: &Params, tol: f64) -> Self {
        let (lhs, rhs) = case.sides(p);
        ConditionFlag {
            case,
            equation: case.equation().to_string(),
            lhs,
            rhs,
            holds: rel_eq(lhs, rhs, tol),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub regime: Regime,
    pub decision: Decision,
    pub conditions: Vec<ConditionFlag>,
}

impl TheoremVerdict {
    pub fn holding_cases(&self) -> impl Iterator<Item = CaseId> + '_ {
        self.conditions.iter().filter(|c| c.holds).map(|c| c.case)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleVerdict {
    pub decision: Decision,
    /// First common eigendirection found, normalized.
    pub witness: Option<Vec2>,
    /// Every distinct common eigendirection found.
    pub witnesses: Vec<Vec2>,
}

/// `EqualX` iff `x1 ≈ x2` within `tol`.
pub fn regime(p: &Params, tol: f64) -> Regime {
    if approx_eq(p.x1, p.x2, tol) {
        Regime::EqualX
    } else {
        Regime::DistinctX
    }
}

pub fn resolve_regime(p: &Params, choice: RegimeChoice, tol: f64) -> Regime {
    match choice {
        RegimeChoice::Auto => regime(p, tol),
        RegimeChoice::Equal => Regime::EqualX,
        RegimeChoice::Distinct => Regime::DistinctX,
    }
}

/// Closed-form decision: reducible iff one of the regime's conditions holds.
pub fn theorem_verdict(p: &Params, regime: Regime, tol: f64) -> TheoremVerdict {
    let conditions: Vec<ConditionFlag> = CaseId::for_regime(regime)
        .iter()
        .map(|&case| ConditionFlag::evaluate(case, p, tol))
        .collect();
    let decision = if conditions.iter().any(|c| c.holds) {
        Decision::Reducible
    } else {
        Decision::Irreducible
    };
    TheoremVerdict {
        regime,
        decision,
        conditions,
    }
}

/// Reducible iff `s1, s2, s3` share an eigendirection.
pub fn oracle_verdict(g: &GeneratorTriple, tol: f64) -> OracleVerdict {
    let witnesses = common_eigendirections(&g.generators(), tol);
    let decision = if witnesses.is_empty() {
        Decision::Irreducible
    } else {
        Decision::Reducible
    };
    OracleVerdict {
        decision,
        witness: witnesses.first().copied(),
        witnesses,
    }
}

/// The invariant line the closed-form argument exhibits for `case`:
/// `u = (−1/(x2y2), 1)` when `x1 = x2`, and `T·e2` otherwise.
pub fn invariant_vector_predicted(
    p: &Params,
    case: CaseId,
    r_sign: RootSign,
    tol: f64,
) -> Result<Vec2, Error> {
    if !ConditionFlag::evaluate(case, p, tol).holds {
        return Err(Error::ConditionNotSatisfied(case.equation().into()));
    }
    match case.regime() {
        Regime::EqualX => {
            let one = ComplexValue::new(1.0, 0.0);
            Ok(Vec2::new(-one / (p.x2 * p.y2), one).normalized())
        }
        Regime::DistinctX => {
            let g = build(p, Regime::DistinctX, r_sign)?;
            if s1_offdiag_vanishes(&g, tol) {
                return Err(Error::ContradictoryCase(case.equation().into()));
            }
            let t = conjugator_t(&g, tol)?;
            Ok(t.apply(Vec2::e2()).normalized())
        }
    }
}

/// How `r` compares with the root a holding condition needs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootCheck {
    pub case: CaseId,
    #[serde(with = "crate::io::complex")]
    pub implied_root: ComplexValue,
    /// `"r"`, `"-r"` or `"neither"`: which of `±r_used` equals the implied root.
    pub r_used_matches: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BranchDiagnosis {
    pub applicable: bool,
    pub r_sign_used: RootSign,
    #[serde(with = "crate::io::complex")]
    pub r_used: ComplexValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flipped_sign: Option<RootSign>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flipped_oracle: Option<OracleVerdict>,
    /// Whether the flipped branch brings the oracle in line with the
    /// closed-form decision.
    pub resolved: bool,
    pub conditions: Vec<ConditionFlag>,
    pub root_checks: Vec<RootCheck>,
}

/// Options shared by the single-parameter commands and the sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CheckOptions {
    pub tol: f64,
    pub r_sign: RootSign,
    pub regime: RegimeChoice,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            tol: DEFAULT_TOL,
            r_sign: RootSign::Plus,
            regime: RegimeChoice::Auto,
        }
    }
}

/// Re-run the oracle on the other branch of `r` when the two deciders
/// disagree; reports not-applicable otherwise.
pub fn branch_diagnosis(
    p: &Params,
    opts: &CheckOptions,
    theorem: &TheoremVerdict,
    oracle: &OracleVerdict,
) -> Result<BranchDiagnosis, Error> {
    let g = build(p, theorem.regime, opts.r_sign)?;
    let effective = g.params;
    let root_checks = theorem
        .holding_cases()
        .map(|case| {
            let implied = case.implied_root(&effective);
            let matches = if approx_eq(implied, g.r_used, opts.tol) {
                "r"
            } else if approx_eq(implied, -g.r_used, opts.tol) {
                "-r"
            } else {
                "neither"
            };
            RootCheck {
                case,
                implied_root: implied,
                r_used_matches: matches.to_string(),
            }
        })
        .collect();
    let mut diag = BranchDiagnosis {
        applicable: false,
        r_sign_used: opts.r_sign,
        r_used: g.r_used,
        flipped_sign: None,
        flipped_oracle: None,
        resolved: false,
        conditions: theorem.conditions.clone(),
        root_checks,
    };
    if theorem.decision == oracle.decision {
        return Ok(diag);
    }
    let flipped = opts.r_sign.flipped();
    let g_flipped = build(p, theorem.regime, flipped)?;
    let flipped_oracle = oracle_verdict(&g_flipped, opts.tol);
    diag.applicable = true;
    diag.resolved = flipped_oracle.decision == theorem.decision;
    diag.flipped_sign = Some(flipped);
    diag.flipped_oracle = Some(flipped_oracle);
    Ok(diag)
}

/// Closed-form prediction of the invariant line, and whether the built
/// generators actually preserve it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PredictedVector {
    pub case: CaseId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vector: Option<Vec2>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub is_invariant: bool,
}

/// Full decision for one parameter tuple.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub regime: Regime,
    pub r_sign: RootSign,
    #[serde(with = "crate::io::complex")]
    pub r_used: ComplexValue,
    pub theorem_decision: Decision,
    pub conditions: Vec<ConditionFlag>,
    pub oracle_decision: Decision,
    pub invariant_vector: Option<Vec2>,
    pub witnesses: Vec<Vec2>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_vector: Option<PredictedVector>,
    pub agreement: bool,
    pub branch_diagnosis: BranchDiagnosis,
}

/// Every generator maps `v` to a multiple of itself.
pub fn is_invariant_line(gens: &[Mat2], v: &Vec2, tol: f64) -> bool {
    gens.iter().all(|m| is_eigendirection(m, v, tol))
}

/// Run both deciders and, on disagreement, the branch diagnosis.
pub fn decide(p: &Params, opts: &CheckOptions) -> Result<Verdict, Error> {
    p.validate()?;
    let regime = resolve_regime(p, opts.regime, opts.tol);
    let g = build(p, regime, opts.r_sign)?;
    let effective = g.params;
    let theorem = theorem_verdict(&effective, regime, opts.tol);
    let oracle = oracle_verdict(&g, opts.tol);
    let predicted_vector = theorem.holding_cases().next().map(|case| {
        match invariant_vector_predicted(&effective, case, opts.r_sign, opts.tol) {
            Ok(v) => PredictedVector {
                case,
                vector: Some(v),
                error: None,
                is_invariant: is_invariant_line(&g.generators(), &v, opts.tol),
            },
            Err(e) => PredictedVector {
                case,
                vector: None,
                error: Some(e.to_string()),
                is_invariant: false,
            },
        }
    });
    let branch = branch_diagnosis(p, opts, &theorem, &oracle)?;
    let agreement = theorem.decision == oracle.decision;
    Ok(Verdict {
        regime,
        r_sign: opts.r_sign,
        r_used: g.r_used,
        theorem_decision: theorem.decision,
        conditions: theorem.conditions,
        oracle_decision: oracle.decision,
        invariant_vector: oracle.witness,
        witnesses: oracle.witnesses,
        predicted_vector,
        agreement,
        branch_diagnosis: branch,
    })
}

/// Whether `v` is parallel to one of `witnesses`.
pub fn witnesses_contain(witnesses: &[Vec2], v: &Vec2, tol: f64) -> bool {
    witnesses.iter().any(|w| parallel(w, v, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::c;
    use crate::representation::build_general;

    fn real(v: f64) -> ComplexValue {
        c(v, 0.0)
    }

    fn opts() -> CheckOptions {
        CheckOptions::default()
    }

    #[test]
    fn regime_examples() {
        let p = Params::from_real([1.0; 6]).unwrap();
        assert_eq!(regime(&p, DEFAULT_TOL), Regime::EqualX);
        let p = Params::from_real([1.0, 2.0, 1.0, 1.0, 1.0, 1.0]).unwrap();
        assert_eq!(regime(&p, DEFAULT_TOL), Regime::DistinctX);
        let p = Params::from_real([1.0, 1.0 + 1e-15, 1.0, 1.0, 1.0, 1.0]).unwrap();
        assert_eq!(regime(&p, DEFAULT_TOL), Regime::EqualX);
    }

    #[test]
    fn theorem_examples() {
        let p = Params::from_real([1.0, 1.0, 1.0, 2.0, 3.0, 6.0]).unwrap();
        let t = theorem_verdict(&p, Regime::EqualX, DEFAULT_TOL);
        assert_eq!(t.decision, Decision::Reducible);
        assert!(t.conditions[0].holds && !t.conditions[1].holds);

        let p = Params::from_real([1.0, 1.0, 2.0, 3.0, 5.0, 7.0]).unwrap();
        let t = theorem_verdict(&p, Regime::EqualX, DEFAULT_TOL);
        assert_eq!(t.decision, Decision::Irreducible);

        // x1y2z2 = 1 vs 4, x1y1z2 = 1 vs 4, x1y2z1 = 2 vs 2, x1y1z1 = 2 vs 2
        let p = Params::from_real([1.0, 2.0, 1.0, 1.0, 2.0, 1.0]).unwrap();
        let t = theorem_verdict(&p, Regime::DistinctX, DEFAULT_TOL);
        assert_eq!(t.decision, Decision::Reducible);
        let holds: Vec<bool> = t.conditions.iter().map(|c| c.holds).collect();
        assert_eq!(holds, vec![false, false, true, true]);
        assert_eq!(t.conditions[2].lhs, real(2.0));
        assert_eq!(t.conditions[2].rhs, real(2.0));
    }

    #[test]
    fn oracle_examples() {
        let p = Params::from_real([1.0; 6]).unwrap();
        let g = build_general(&p, RootSign::Plus).unwrap();
        let o = oracle_verdict(&g, DEFAULT_TOL);
        assert_eq!(o.decision, Decision::Reducible);
        assert!(is_invariant_line(
            &g.generators(),
            &o.witness.unwrap(),
            1e-9
        ));

        let p = Params::from_real([1.0, 1.0, 2.0, 3.0, 5.0, 7.0]).unwrap();
        let g = build(&p, Regime::EqualX, RootSign::Plus).unwrap();
        let o = oracle_verdict(&g, DEFAULT_TOL);
        assert_eq!(o.decision, Decision::Irreducible);
        assert!(o.witness.is_none());

        // equal-x case 1: x2 = 1, y = (1, 2), z2 = 4, z1 = 2 → u = (−1/2, 1)
        let p = Params::from_real([1.0, 1.0, 1.0, 2.0, 2.0, 4.0]).unwrap();
        let g = build(&p, Regime::EqualX, RootSign::Plus).unwrap();
        let o = oracle_verdict(&g, DEFAULT_TOL);
        assert_eq!(o.decision, Decision::Reducible);
        let u = Vec2::new(real(-0.5), real(1.0));
        assert!(witnesses_contain(&o.witnesses, &u, 1e-12));
    }

    #[test]
    fn predicted_vectors_equal_x() {
        // case 1: s3 u = z2 u
        let p = Params::from_real([1.5, 1.5, 2.0, 3.0, 2.0 * 5.0 / 3.0, 5.0]).unwrap();
        let g = build(&p, Regime::EqualX, RootSign::Plus).unwrap();
        let u = invariant_vector_predicted(&p, CaseId::EqualCase1, RootSign::Plus, 1e-9).unwrap();
        let s3u = g.s3.apply(u);
        assert!(approx_eq(s3u.v1, p.z2 * u.v1, 1e-12) && approx_eq(s3u.v2, p.z2 * u.v2, 1e-12));
        let s2u = g.s2.apply(u);
        assert!(approx_eq(s2u.v1, p.y1 * u.v1, 1e-12) && approx_eq(s2u.v2, p.y1 * u.v2, 1e-12));

        // case 2: s3 u = (z2 y2 / y1) u
        let p = Params::from_real([1.5, 1.5, 2.0, 3.0, 3.0 * 5.0 / 2.0, 5.0]).unwrap();
        let g = build(&p, Regime::EqualX, RootSign::Plus).unwrap();
        let u = invariant_vector_predicted(&p, CaseId::EqualCase2, RootSign::Plus, 1e-9).unwrap();
        let lambda = p.z2 * p.y2 / p.y1;
        let s3u = g.s3.apply(u);
        assert!(approx_eq(s3u.v1, lambda * u.v1, 1e-12) && approx_eq(s3u.v2, lambda * u.v2, 1e-12));

        assert!(matches!(
            invariant_vector_predicted(&p, CaseId::EqualCase1, RootSign::Plus, 1e-9),
            Err(Error::ConditionNotSatisfied(_))
        ));
    }

    #[test]
    fn predicted_vector_distinct_x() {
        // x1 y2 z2 = 1·2·2 = 4 = x2 y1 z1 = 4·1·1
        let p = Params::from_real([1.0, 4.0, 1.0, 2.0, 1.0, 2.0]).unwrap();
        let v = invariant_vector_predicted(&p, CaseId::DistinctI, RootSign::Plus, 1e-9).unwrap();
        let g = build_general(&p, RootSign::Plus).unwrap();
        assert!(is_invariant_line(&g.generators(), &v, 1e-9));
        let o = oracle_verdict(&g, 1e-9);
        assert_eq!(o.decision, Decision::Reducible);
        assert!(witnesses_contain(&o.witnesses, &v, 1e-9));
        // the other sign of r breaks it
        let g = build_general(&p, RootSign::Minus).unwrap();
        assert_eq!(oracle_verdict(&g, 1e-9).decision, Decision::Irreducible);
    }

    #[test]
    fn contradictory_case_is_reported() {
        // x = (−1, 3), y = (1, 1), z = (1, −3): x1y2z2 = 3 = x2y1z1 and Δ = 9.
        // With r = −3 (the non-implied root) s1(1,2) = 2 − (−2)(3)/(−3) = 0.
        let p = Params::from_real([-1.0, 3.0, 1.0, 1.0, 1.0, -3.0]).unwrap();
        let g = build_general(&p, RootSign::Minus).unwrap();
        assert_eq!(g.s1.b, real(0.0));
        assert!(matches!(
            invariant_vector_predicted(&p, CaseId::DistinctI, RootSign::Minus, 1e-9),
            Err(Error::ContradictoryCase(_))
        ));
        let v = invariant_vector_predicted(&p, CaseId::DistinctI, RootSign::Plus, 1e-9).unwrap();
        let g = build_general(&p, RootSign::Plus).unwrap();
        assert!(is_invariant_line(&g.generators(), &v, 1e-9));
    }

    #[test]
    fn decide_all_ones_agrees() {
        let p = Params::from_real([1.0; 6]).unwrap();
        let v = decide(&p, &opts()).unwrap();
        assert_eq!(v.theorem_decision, Decision::Reducible);
        assert_eq!(v.oracle_decision, Decision::Reducible);
        assert!(v.agreement);
        assert!(!v.branch_diagnosis.applicable);
        assert!(v.invariant_vector.is_some());
        assert!(v.predicted_vector.unwrap().is_invariant);
    }

    #[test]
    fn wrong_branch_disagreement_is_resolved_by_flip() {
        // equal-x case 1 with y1 z2 x2 having argument outside (−π/2, π/2]:
        // x2 = 1, y1 = e^{iπ·0.9}, y2 = 1, z2 = 1, z1 = y1 z2 / y2 = y1.
        // Then Δ = y1², principal r = −y1 ≠ +x2 y1 z2.
        let y1 = ComplexValue::from_polar(1.0, 0.9 * std::f64::consts::PI);
        let p = Params::new([real(1.0), real(1.0), y1, real(1.0), y1, real(1.0)]).unwrap();
        let v = decide(&p, &opts()).unwrap();
        assert_eq!(v.theorem_decision, Decision::Reducible);
        assert_eq!(v.oracle_decision, Decision::Irreducible);
        assert!(!v.agreement);
        let d = &v.branch_diagnosis;
        assert!(d.applicable && d.resolved);
        assert_eq!(d.root_checks[0].r_used_matches, "-r");
        assert_eq!(
            d.flipped_oracle.as_ref().unwrap().decision,
            Decision::Reducible
        );
    }

    #[test]
    fn theorem_conditions_are_scale_invariant() {
        let p = Params::from_real([1.0, 4.0, 1.0, 2.0, 1.0, 2.0]).unwrap();
        for lambda in [c(1e-3, 0.0), c(0.0, 1.0), c(-7.0, 3.0), c(1e3, -1e3)] {
            let q = p.scaled(lambda);
            let t = theorem_verdict(&q, Regime::DistinctX, DEFAULT_TOL);
            assert_eq!(t.decision, Decision::Reducible);
        }
    }
}
