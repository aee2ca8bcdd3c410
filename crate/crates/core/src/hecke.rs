//! The Hecke algebra of a finite pair: `H`-bi-invariant functions on `G`,
//! stored per double coset, with the product
//!
//! ```text
//! (f1 * f2)(g) = sum over right cosets Hy of f1(g y^-1) f2(y)
//! ```
//!
//! taken with counting measure, one term per right coset.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::pair::HeckePair;
use crate::scalar::{scale_by_count, Scalar};

/// A bi-invariant function on `G`, as a sparse map from double-coset class
/// to coefficient. Zero coefficients are never stored.
#[derive(Debug, Clone)]
pub struct HeckeElement<S> {
    pair: Arc<HeckePair>,
    coeffs: BTreeMap<usize, S>,
}

impl<S: Scalar> HeckeElement<S> {
    pub fn zero(pair: &Arc<HeckePair>) -> Self {
        HeckeElement { pair: pair.clone(), coeffs: BTreeMap::new() }
    }

    /// Characteristic function of double coset `class`.
    pub fn basis(pair: &Arc<HeckePair>, class: usize) -> Self {
        Self::from_coeffs(pair, [(class, S::one())])
    }

    /// Repeated classes are summed.
    pub fn from_coeffs(pair: &Arc<HeckePair>, coeffs: impl IntoIterator<Item = (usize, S)>) -> Self {
        let n = pair.dimension();
        let mut map: BTreeMap<usize, S> = BTreeMap::new();
        for (k, c) in coeffs {
            assert!(k < n, "class {k} out of range for {n} double cosets");
            let entry = map.entry(k).or_insert_with(S::zero);
            *entry = entry.clone() + c;
        }
        map.retain(|_, c| !c.is_zero());
        HeckeElement { pair: pair.clone(), coeffs: map }
    }

    /// Dense coefficient vector in class order.
    pub fn from_dense(pair: &Arc<HeckePair>, dense: Vec<S>) -> Self {
        assert_eq!(dense.len(), pair.dimension());
        Self::from_coeffs(pair, dense.into_iter().enumerate())
    }

    pub fn pair(&self) -> &Arc<HeckePair> {
        &self.pair
    }

    pub fn coeff(&self, class: usize) -> S {
        self.coeffs.get(&class).cloned().unwrap_or_else(S::zero)
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, S> {
        &self.coeffs
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_dense(&self) -> Vec<S> {
        (0..self.pair.dimension()).map(|k| self.coeff(k)).collect()
    }

    /// `f(g)` for an element id `g`.
    pub fn eval(&self, g: usize) -> S {
        self.coeff(self.pair.double_cosets().class_of(g))
    }

    /// Values on every element of `G`, indexed by element id.
    pub fn lift(&self) -> Vec<S> {
        (0..self.pair.group().order()).map(|g| self.eval(g)).collect()
    }

    fn check_pair(&self, other: &HeckeElement<S>) -> Result<()> {
        if self.pair.same_pair(&other.pair) {
            Ok(())
        } else {
            Err(Error::PairMismatch)
        }
    }

    pub fn add(&self, other: &HeckeElement<S>) -> Result<Self> {
        self.check_pair(other)?;
        let merged = self.coeffs.iter().chain(other.coeffs.iter()).map(|(&k, c)| (k, c.clone()));
        Ok(Self::from_coeffs(&self.pair, merged))
    }

    pub fn scale(&self, factor: &S) -> Self {
        let scaled = self.coeffs.iter().map(|(&k, c)| (k, c.clone() * factor.clone()));
        Self::from_coeffs(&self.pair, scaled)
    }

    /// Value of `self * other` at element `g`, summing over the canonical
    /// right-coset representatives.
    pub fn convolve_at(&self, other: &HeckeElement<S>, g: usize) -> S {
        let group = self.pair.group();
        let right = self.pair.right_cosets();
        let mut acc = S::zero();
        for &gamma in right.reps() {
            let second = other.eval(gamma);
            if second.is_zero() {
                continue;
            }
            let first = self.eval(group.mul(g, group.inv(gamma)));
            if !first.is_zero() {
                acc = acc + first * second;
            }
        }
        acc
    }

    pub fn convolve(&self, other: &HeckeElement<S>) -> Result<Self> {
        self.check_pair(other)?;
        let double = self.pair.double_cosets();
        let values = double.reps().iter().map(|&g| self.convolve_at(other, g));
        Ok(Self::from_coeffs(&self.pair, values.enumerate()))
    }

    /// `f*(g) = conj(f(g^-1))`.
    pub fn involution(&self) -> Self {
        let double = self.pair.double_cosets();
        let coeffs = self.coeffs.iter().map(|(&k, c)| (double.inverse_class(k), c.conj()));
        Self::from_coeffs(&self.pair, coeffs)
    }

    /// Exact equality for exact scalars; tolerance-based for floats.
    pub fn tolerant_eq(&self, other: &HeckeElement<S>) -> bool {
        self.pair.same_pair(&other.pair)
            && (0..self.pair.dimension()).all(|k| self.coeff(k).tolerant_eq(&other.coeff(k)))
    }
}

impl<S: Scalar> PartialEq for HeckeElement<S> {
    fn eq(&self, other: &Self) -> bool {
        self.pair.same_pair(&other.pair) && self.coeffs == other.coeffs
    }
}

pub fn convolve<S: Scalar>(f1: &HeckeElement<S>, f2: &HeckeElement<S>) -> Result<HeckeElement<S>> {
    f1.convolve(f2)
}

pub fn involution<S: Scalar>(f: &HeckeElement<S>) -> HeckeElement<S> {
    f.involution()
}

/// The unit of the algebra, the characteristic function of `H`.
pub fn identity_element<S: Scalar>(pair: &Arc<HeckePair>) -> HeckeElement<S> {
    HeckeElement::basis(pair, 0)
}

/// `e_i * e_j = sum_k c[i][j][k] e_k` for the double-coset basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    c: Vec<Vec<Vec<u64>>>,
}

impl StructureConstants {
    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.c[i][j][k]
    }

    pub fn dimension(&self) -> usize {
        self.c.len()
    }

    pub fn as_nested(&self) -> &Vec<Vec<Vec<u64>>> {
        &self.c
    }

    /// Product of basis elements expanded with these constants.
    pub fn basis_product<S: Scalar>(&self, pair: &Arc<HeckePair>, i: usize, j: usize) -> HeckeElement<S> {
        let coeffs = self.c[i][j]
            .iter()
            .enumerate()
            .map(|(k, &n)| (k, scale_by_count(&S::one(), n as usize)));
        HeckeElement::from_coeffs(pair, coeffs)
    }
}

/// Counts, for each class `k` with representative `g`, the right cosets `Hy`
/// with `y` in class `j` and `g y^-1` in class `i`.
pub fn structure_constants(pair: &HeckePair) -> StructureConstants {
    let group = pair.group();
    let double = pair.double_cosets();
    let right = pair.right_cosets();
    let n = double.len();
    let mut c = vec![vec![vec![0u64; n]; n]; n];
    for (k, &g) in double.reps().iter().enumerate() {
        for &gamma in right.reps() {
            let j = double.class_of(gamma);
            let i = double.class_of(group.mul(g, group.inv(gamma)));
            c[i][j][k] += 1;
        }
    }
    StructureConstants { c }
}

/// Plain convolution in the group algebra of `G`:
/// `(a * b)(g) = sum over x in G of a(g x^-1) b(x)`. Functions are indexed by
/// element id.
pub fn oracle_group_convolve<S: Scalar>(
    group: &crate::group::FiniteGroup,
    a: &[S],
    b: &[S],
) -> Vec<S> {
    let n = group.order();
    assert_eq!(a.len(), n);
    assert_eq!(b.len(), n);
    (0..n)
        .map(|g| {
            (0..n).fold(S::zero(), |acc, x| {
                acc + a[group.mul(g, group.inv(x))].clone() * b[x].clone()
            })
        })
        .collect()
}
