//! Convolution rules the verification harness can be pointed at.

use crate::hecke::HeckeElement;
use crate::scalar::Scalar;

/// A candidate product on bi-invariant functions, given pointwise.
pub trait ConvolutionRule<S: Scalar>: Send + Sync {
    fn name(&self) -> &str;

    /// Value of the product of `f1` and `f2` at element id `g`.
    fn value_at(&self, f1: &HeckeElement<S>, f2: &HeckeElement<S>, g: usize) -> S;
}

/// Sum over canonical right-coset representatives `y` of `f1(g y^-1) f2(y)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct RightCosetRule;

impl<S: Scalar> ConvolutionRule<S> for RightCosetRule {
    fn name(&self) -> &str {
        "right-coset"
    }

    fn value_at(&self, f1: &HeckeElement<S>, f2: &HeckeElement<S>, g: usize) -> S {
        f1.convolve_at(f2, g)
    }
}

/// Same integrand summed over canonical left-coset representatives. Not
/// well defined for non-normal subgroups: the value depends on which
/// representative of each left coset is used.
#[derive(Debug, Clone, Copy, Default)]
pub struct LeftCosetRule;

impl<S: Scalar> ConvolutionRule<S> for LeftCosetRule {
    fn name(&self) -> &str {
        "left-coset"
    }

    fn value_at(&self, f1: &HeckeElement<S>, f2: &HeckeElement<S>, g: usize) -> S {
        let pair = f1.pair();
        let group = pair.group();
        pair.left_cosets().reps().iter().fold(S::zero(), |acc, &d| {
            acc + f1.eval(group.mul(g, group.inv(d))) * f2.eval(d)
        })
    }
}

/// Product of two elements under `rule`, evaluated on all of `G`.
#[derive(Debug, Clone)]
pub struct RuleProduct<S> {
    /// Values at every element id.
    pub values: Vec<S>,
    /// Built from the values at canonical class representatives.
    pub element: HeckeElement<S>,
    /// Whether the values are constant on every double coset.
    pub bi_invariant: bool,
}

pub fn product_under<S: Scalar>(
    rule: &dyn ConvolutionRule<S>,
    f1: &HeckeElement<S>,
    f2: &HeckeElement<S>,
) -> RuleProduct<S> {
    let pair = f1.pair();
    let double = pair.double_cosets();
    let values: Vec<S> = (0..pair.group().order()).map(|g| rule.value_at(f1, f2, g)).collect();
    let element = HeckeElement::from_coeffs(
        pair,
        double.reps().iter().enumerate().map(|(k, &g)| (k, values[g].clone())),
    );
    let bi_invariant = values
        .iter()
        .enumerate()
        .all(|(g, v)| v.tolerant_eq(&values[double.rep(double.class_of(g))]));
    RuleProduct { values, element, bi_invariant }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{roster, QComplex};

    #[test]
    fn right_coset_rule_matches_convolve() {
        let pair = roster::s4_cyclic();
        let n = pair.dimension();
        for i in 0..n {
            for j in 0..n {
                let a: HeckeElement<QComplex> = HeckeElement::basis(&pair, i);
                let b = HeckeElement::basis(&pair, j);
                let p = product_under(&RightCosetRule, &a, &b);
                assert!(p.bi_invariant);
                assert_eq!(p.element, a.convolve(&b).unwrap());
                assert_eq!(p.values, p.element.lift());
            }
        }
    }

    #[test]
    fn rules_agree_for_normal_subgroups() {
        let pair = roster::s3_alternating();
        for i in 0..2 {
            for j in 0..2 {
                let a: HeckeElement<QComplex> = HeckeElement::basis(&pair, i);
                let b = HeckeElement::basis(&pair, j);
                assert_eq!(
                    product_under(&LeftCosetRule, &a, &b).values,
                    product_under(&RightCosetRule, &a, &b).values
                );
            }
        }
    }
}
