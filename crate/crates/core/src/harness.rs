//! Batch verification of the algebra and representation identities for one
//! pair. Each check runs over every basis input first, then `trials` random
//! inputs; the first failing input is kept as a replayable counterexample.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::codec::{element_from_json, element_to_json, Codec};
use crate::cosets::Side;
use crate::error::{Error, Result};
use crate::hecke::{identity_element, oracle_group_convolve, HeckeElement};
use crate::pair::HeckePair;
use crate::repr::{apply_left_action, intertwiner_u, left_action_matrix, right_action_matrix, CosetVector, RepMatrix};
use crate::rule::{product_under, ConvolutionRule, RightCosetRule};
use crate::scalar::{from_parts, scale_by_count, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Closure,
    Associativity,
    IdentityLeft,
    IdentityRight,
    InvolutionInvolutive,
    AntiMultiplicative,
    OracleIdentity,
    LeftHomomorphism,
    RightHomomorphism,
    LeftStar,
    RightStar,
    UUnitary,
    Intertwining,
    UnitaryConjugation,
    Faithfulness,
    LeftActionConsistency,
    NormalBasisPermutation,
}

pub const ALGEBRA_CHECKS: [Check; 7] = [
    Check::Closure,
    Check::Associativity,
    Check::IdentityLeft,
    Check::IdentityRight,
    Check::InvolutionInvolutive,
    Check::AntiMultiplicative,
    Check::OracleIdentity,
];

pub const REPRESENTATION_CHECKS: [Check; 9] = [
    Check::LeftHomomorphism,
    Check::RightHomomorphism,
    Check::LeftStar,
    Check::RightStar,
    Check::UUnitary,
    Check::Intertwining,
    Check::UnitaryConjugation,
    Check::Faithfulness,
    Check::LeftActionConsistency,
];

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Closure => "closure",
            Check::Associativity => "associativity",
            Check::IdentityLeft => "identity_left",
            Check::IdentityRight => "identity_right",
            Check::InvolutionInvolutive => "involution_involutive",
            Check::AntiMultiplicative => "anti_multiplicative",
            Check::OracleIdentity => "oracle_identity",
            Check::LeftHomomorphism => "left_homomorphism",
            Check::RightHomomorphism => "right_homomorphism",
            Check::LeftStar => "left_star",
            Check::RightStar => "right_star",
            Check::UUnitary => "u_unitary",
            Check::Intertwining => "intertwining",
            Check::UnitaryConjugation => "unitary_conjugation",
            Check::Faithfulness => "faithfulness",
            Check::LeftActionConsistency => "left_action_consistency",
            Check::NormalBasisPermutation => "normal_basis_permutation",
        }
    }

    pub fn from_name(name: &str) -> Option<Check> {
        ALGEBRA_CHECKS
            .iter()
            .chain(REPRESENTATION_CHECKS.iter())
            .chain(std::iter::once(&Check::NormalBasisPermutation))
            .copied()
            .find(|c| c.name() == name)
    }

    /// Number of Hecke elements the check consumes.
    pub fn arity(self) -> usize {
        match self {
            Check::UUnitary => 0,
            Check::Associativity => 3,
            Check::Closure
            | Check::AntiMultiplicative
            | Check::OracleIdentity
            | Check::LeftHomomorphism
            | Check::RightHomomorphism => 2,
            _ => 1,
        }
    }

    /// Normal-subgroup check draws basis inputs only.
    fn basis_only(self) -> bool {
        matches!(self, Check::NormalBasisPermutation | Check::UUnitary)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub pair: String,
    pub rule: String,
    pub seed: u64,
    pub trials: usize,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    fn assemble(pair: &HeckePair, rule: &str, seed: u64, trials: usize, checks: Vec<CheckResult>) -> Self {
        VerificationReport {
            pair: pair.label().to_string(),
            rule: rule.to_string(),
            seed,
            trials,
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Random element with coefficients `a/b + i c/d`, `a, c` in `-9..=9` and
/// `b, d` in `{1, 2, 3}`.
pub fn random_element<S: Scalar>(pair: &Arc<HeckePair>, rng: &mut impl Rng) -> HeckeElement<S> {
    let dense = (0..pair.dimension())
        .map(|_| {
            let re = (rng.gen_range(-9..=9), rng.gen_range(1..=3));
            let im = (rng.gen_range(-9..=9), rng.gen_range(1..=3));
            from_parts::<S>(re, im)
        })
        .collect();
    HeckeElement::from_dense(pair, dense)
}

fn basis_tuples(dimension: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..dimension).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

fn product<S: Scalar>(rule: &dyn ConvolutionRule<S>, a: &HeckeElement<S>, b: &HeckeElement<S>) -> HeckeElement<S> {
    product_under(rule, a, b).element
}

fn matrix_of<S: Scalar>(side: Side, f: &HeckeElement<S>) -> RepMatrix<S> {
    match side {
        Side::Right => left_action_matrix(f),
        Side::Left => right_action_matrix(f),
    }
}

/// Runs one check on concrete inputs. Errors only on arity mismatch.
pub fn evaluate<S: Scalar>(
    check: Check,
    pair: &Arc<HeckePair>,
    rule: &dyn ConvolutionRule<S>,
    inputs: &[HeckeElement<S>],
) -> Result<bool> {
    if inputs.len() != check.arity() {
        return Err(Error::Codec(format!(
            "check {} takes {} inputs, got {}",
            check.name(),
            check.arity(),
            inputs.len()
        )));
    }
    if inputs.iter().any(|f| !f.pair().same_pair(pair)) {
        return Err(Error::PairMismatch);
    }
    let unit = || identity_element::<S>(pair);
    let ok = match check {
        Check::Closure => product_under(rule, &inputs[0], &inputs[1]).bi_invariant,
        Check::Associativity => {
            let (a, b, c) = (&inputs[0], &inputs[1], &inputs[2]);
            product(rule, &product(rule, a, b), c).tolerant_eq(&product(rule, a, &product(rule, b, c)))
        }
        Check::IdentityLeft => product(rule, &unit(), &inputs[0]).tolerant_eq(&inputs[0]),
        Check::IdentityRight => product(rule, &inputs[0], &unit()).tolerant_eq(&inputs[0]),
        Check::InvolutionInvolutive => inputs[0].involution().involution().tolerant_eq(&inputs[0]),
        Check::AntiMultiplicative => {
            let (a, b) = (&inputs[0], &inputs[1]);
            product(rule, a, b)
                .involution()
                .tolerant_eq(&product(rule, &b.involution(), &a.involution()))
        }
        Check::OracleIdentity => {
            let (a, b) = (&inputs[0], &inputs[1]);
            let h = pair.subgroup().order();
            let lhs = product_under(rule, a, b).values;
            let rhs = oracle_group_convolve(pair.group(), &a.lift(), &b.lift());
            lhs.iter().zip(&rhs).all(|(x, y)| scale_by_count(x, h).tolerant_eq(y))
        }
        Check::LeftHomomorphism | Check::RightHomomorphism => {
            let side = if check == Check::LeftHomomorphism { Side::Right } else { Side::Left };
            let (a, b) = (&inputs[0], &inputs[1]);
            let ab = a.convolve(b)?;
            matrix_of(side, &ab).tolerant_eq(&matrix_of(side, a).mul(&matrix_of(side, b))?)
        }
        Check::LeftStar | Check::RightStar => {
            let side = if check == Check::LeftStar { Side::Right } else { Side::Left };
            let f = &inputs[0];
            matrix_of(side, &f.involution()).tolerant_eq(&matrix_of(side, f).adjoint())
        }
        Check::UUnitary => {
            let u = intertwiner_u::<S>(pair);
            u.adjoint().mul(&u)?.tolerant_eq(&RepMatrix::identity(pair, Side::Right))
                && u.mul(&u.adjoint())?.tolerant_eq(&RepMatrix::identity(pair, Side::Left))
        }
        Check::Intertwining => crate::repr::check_intertwining(&inputs[0])?.holds,
        Check::UnitaryConjugation => {
            let u = intertwiner_u::<S>(pair);
            let f = &inputs[0];
            right_action_matrix(f).tolerant_eq(&u.mul(&left_action_matrix(f))?.mul(&u.adjoint())?)
        }
        Check::Faithfulness => {
            let f = &inputs[0];
            let right = pair.right_cosets();
            let image = apply_left_action(f, &CosetVector::delta(pair, Side::Right, 0))?;
            (0..pair.group().order()).all(|g| image.coords()[right.coset_of(g)].tolerant_eq(&f.eval(g)))
        }
        Check::LeftActionConsistency => {
            let f = &inputs[0];
            let m = left_action_matrix(f);
            (0..pair.right_cosets().len()).all(|c| {
                let delta = CosetVector::delta(pair, Side::Right, c);
                match (apply_left_action(f, &delta), m.apply(&delta)) {
                    (Ok(a), Ok(b)) => a.coords().iter().zip(b.coords()).all(|(x, y)| x.tolerant_eq(y)),
                    _ => false,
                }
            })
        }
        Check::NormalBasisPermutation => {
            left_action_matrix(&inputs[0]).is_permutation_matrix()
                && right_action_matrix(&inputs[0]).is_permutation_matrix()
        }
    };
    Ok(ok)
}

fn run_check<S: Scalar + Codec>(
    check: Check,
    pair: &Arc<HeckePair>,
    rule: &dyn ConvolutionRule<S>,
    trials: usize,
    seed: u64,
    stream: u64,
) -> CheckResult {
    let arity = check.arity();
    let mut cases: Vec<Vec<HeckeElement<S>>> = basis_tuples(pair.dimension(), arity)
        .into_iter()
        .map(|t| t.into_iter().map(|k| HeckeElement::basis(pair, k)).collect())
        .collect();
    if !check.basis_only() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        for _ in 0..trials {
            cases.push((0..arity).map(|_| random_element(pair, &mut rng)).collect());
        }
    }
    let total = cases.len();
    for inputs in cases {
        let passed = evaluate(check, pair, rule, &inputs).unwrap_or(false);
        if !passed {
            return CheckResult {
                name: check.name().to_string(),
                passed: false,
                cases: total,
                counterexample: Some(json!({
                    "inputs": inputs.iter().map(element_to_json).collect::<Vec<_>>()
                })),
            };
        }
    }
    CheckResult { name: check.name().to_string(), passed: true, cases: total, counterexample: None }
}

/// Runs the checks concurrently, one thread each; results keep `checks` order.
fn run_suite<S: Scalar + Codec>(
    pair: &Arc<HeckePair>,
    rule: &dyn ConvolutionRule<S>,
    checks: &[Check],
    trials: usize,
    seed: u64,
) -> Vec<CheckResult> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = checks
            .iter()
            .map(|&check| {
                let stream = check as u64;
                scope.spawn(move || run_check(check, pair, rule, trials, seed, stream))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("check thread panicked")).collect()
    })
}

/// Closure, associativity, identity, involution, anti-multiplicativity and
/// the `|H|` oracle identity under `rule` (the right-coset sum by default).
pub fn verify_star_algebra<S: Scalar + Codec>(
    pair: &Arc<HeckePair>,
    trials: usize,
    seed: u64,
    rule: Option<&dyn ConvolutionRule<S>>,
) -> VerificationReport {
    let rule = rule.unwrap_or(&RightCosetRule);
    let checks = run_suite(pair, rule, &ALGEBRA_CHECKS, trials, seed);
    VerificationReport::assemble(pair, rule.name(), seed, trials, checks)
}

/// Homomorphism, adjoint compatibility, unitarity of `U`, intertwining and
/// faithfulness for both regular representations.
pub fn verify_representation<S: Scalar + Codec>(pair: &Arc<HeckePair>, trials: usize, seed: u64) -> VerificationReport {
    let mut checks = REPRESENTATION_CHECKS.to_vec();
    if pair.subgroup().is_normal() {
        checks.push(Check::NormalBasisPermutation);
    }
    let rule: &dyn ConvolutionRule<S> = &RightCosetRule;
    let results = run_suite(pair, rule, &checks, trials, seed);
    VerificationReport::assemble(pair, rule.name(), seed, trials, results)
}

/// Both suites in one report; `rule` applies to the algebra checks.
pub fn verify_all<S: Scalar + Codec>(
    pair: &Arc<HeckePair>,
    trials: usize,
    seed: u64,
    rule: Option<&dyn ConvolutionRule<S>>,
) -> VerificationReport {
    let mut report = verify_star_algebra::<S>(pair, trials, seed, rule);
    let rep = verify_representation::<S>(pair, trials, seed);
    report.checks.extend(rep.checks);
    report.passed = report.checks.iter().all(|c| c.passed);
    report
}

/// Re-runs `check` on a recorded counterexample; `Ok(true)` means it passes.
pub fn replay<S: Scalar + Codec>(
    pair: &Arc<HeckePair>,
    rule: &dyn ConvolutionRule<S>,
    check: &str,
    counterexample: &Value,
) -> Result<bool> {
    let check = Check::from_name(check).ok_or_else(|| Error::Codec(format!("unknown check {check:?}")))?;
    let inputs = counterexample
        .get("inputs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Codec("counterexample has no \"inputs\" array".into()))?
        .iter()
        .map(|v| element_from_json(pair, v))
        .collect::<Result<Vec<_>>>()?;
    evaluate(check, pair, rule, &inputs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rule::LeftCosetRule;
    use crate::{roster, QComplex};

    #[test]
    fn default_rule_passes_on_s3_transposition() {
        let pair = roster::s3_transposition();
        let report = verify_star_algebra::<QComplex>(&pair, 50, 7, None);
        assert!(report.passed, "{:#?}", report.failures().collect::<Vec<_>>());
        assert_eq!(report.check("associativity").unwrap().cases, 8 + 50);
    }

    #[test]
    fn reports_are_deterministic() {
        let pair = roster::s4_cyclic();
        let a = verify_all::<QComplex>(&pair, 5, 11, None).to_json();
        let b = verify_all::<QComplex>(&pair, 5, 11, None).to_json();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn basis_tuples_enumerate_all() {
        assert_eq!(basis_tuples(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(basis_tuples(3, 2).len(), 9);
        assert_eq!(basis_tuples(2, 3)[5], vec![1, 0, 1]);
    }

    #[test]
    fn left_coset_rule_fails_somewhere_and_replays() {
        let mut found = false;
        for pair in roster::builtin() {
            let report = verify_star_algebra::<QComplex>(&pair, 10, 3, Some(&LeftCosetRule));
            for failure in report.failures() {
                found = true;
                let cx = failure.counterexample.as_ref().expect("failures carry a counterexample");
                assert_eq!(replay::<QComplex>(&pair, &LeftCosetRule, &failure.name, cx), Ok(false));
                assert_eq!(replay::<QComplex>(&pair, &RightCosetRule, &failure.name, cx), Ok(true));
            }
        }
        assert!(found);
    }

    #[test]
    fn evaluate_rejects_wrong_arity() {
        let pair = roster::s3_transposition();
        let f: HeckeElement<QComplex> = HeckeElement::basis(&pair, 0);
        assert!(evaluate(Check::Associativity, &pair, &RightCosetRule, &[f]).is_err());
    }

    #[test]
    fn check_names_round_trip() {
        for c in ALGEBRA_CHECKS.iter().chain(REPRESENTATION_CHECKS.iter()) {
            assert_eq!(Check::from_name(c.name()), Some(*c));
        }
        assert_eq!(Check::from_name("normal_basis_permutation"), Some(Check::NormalBasisPermutation));
        assert_eq!(Check::from_name("nope"), None);
    }
}
