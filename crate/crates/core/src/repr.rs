//! Matrices of the left action on `l2(H\G)`, the right action on `l2(G/H)`,
//! and the unitary `U(xi)(gH) = xi(Hg^-1)` between them.
//!
//! Rows and columns follow the canonical coset ordering of [`CosetSpace`].
//!
//! [`CosetSpace`]: crate::cosets::CosetSpace

use std::sync::Arc;

use crate::cosets::{CosetSpace, Side};
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::pair::HeckePair;
use crate::scalar::Scalar;

fn space(pair: &HeckePair, side: Side) -> &CosetSpace {
    match side {
        Side::Right => pair.right_cosets(),
        Side::Left => pair.left_cosets(),
    }
}

/// A vector in `l2(H\G)` (side `Right`) or `l2(G/H)` (side `Left`).
#[derive(Debug, Clone)]
pub struct CosetVector<S> {
    pair: Arc<HeckePair>,
    side: Side,
    coords: Vec<S>,
}

impl<S: Scalar> CosetVector<S> {
    pub fn new(pair: &Arc<HeckePair>, side: Side, coords: Vec<S>) -> Result<Self> {
        let expected = space(pair, side).len();
        if coords.len() != expected {
            return Err(Error::Codec(format!(
                "vector has {} coordinates, the coset space has {expected}",
                coords.len()
            )));
        }
        Ok(CosetVector { pair: pair.clone(), side, coords })
    }

    pub fn delta(pair: &Arc<HeckePair>, side: Side, coset: usize) -> Self {
        let mut coords = vec![S::zero(); space(pair, side).len()];
        coords[coset] = S::one();
        CosetVector { pair: pair.clone(), side, coords }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn pair(&self) -> &Arc<HeckePair> {
        &self.pair
    }
}

impl<S: Scalar> PartialEq for CosetVector<S> {
    fn eq(&self, other: &Self) -> bool {
        self.side == other.side && self.pair.same_pair(&other.pair) && self.coords == other.coords
    }
}

/// Dense matrix whose rows are indexed by the cosets of `row_side` and
/// columns by those of `col_side`, row-major.
#[derive(Debug, Clone)]
pub struct RepMatrix<S> {
    pair: Arc<HeckePair>,
    row_side: Side,
    col_side: Side,
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Scalar> RepMatrix<S> {
    fn from_fn(
        pair: &Arc<HeckePair>,
        row_side: Side,
        col_side: Side,
        mut entry: impl FnMut(usize, usize) -> S,
    ) -> Self {
        let rows = space(pair, row_side).len();
        let cols = space(pair, col_side).len();
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(entry(r, c));
            }
        }
        RepMatrix { pair: pair.clone(), row_side, col_side, rows, cols, entries }
    }

    pub fn identity(pair: &Arc<HeckePair>, side: Side) -> Self {
        Self::from_fn(pair, side, side, |r, c| if r == c { S::one() } else { S::zero() })
    }

    pub fn zero(pair: &Arc<HeckePair>, row_side: Side, col_side: Side) -> Self {
        Self::from_fn(pair, row_side, col_side, |_, _| S::zero())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_side(&self) -> Side {
        self.row_side
    }

    pub fn col_side(&self) -> Side {
        self.col_side
    }

    pub fn entry(&self, r: usize, c: usize) -> &S {
        &self.entries[r * self.cols + c]
    }

    pub fn to_nested(&self) -> Vec<Vec<S>> {
        self.entries.chunks(self.cols.max(1)).take(self.rows).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &RepMatrix<S>) -> Result<Self> {
        if self.col_side != other.row_side || !self.pair.same_pair(&other.pair) {
            return Err(Error::PairMismatch);
        }
        Ok(Self::from_fn(&self.pair, self.row_side, other.col_side, |r, c| {
            (0..self.cols).fold(S::zero(), |acc, k| {
                acc + self.entry(r, k).clone() * other.entry(k, c).clone()
            })
        }))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(&self.pair, self.col_side, self.row_side, |r, c| self.entry(c, r).conj())
    }

    pub fn apply(&self, v: &CosetVector<S>) -> Result<CosetVector<S>> {
        if v.side != self.col_side || !self.pair.same_pair(&v.pair) {
            return Err(Error::PairMismatch);
        }
        let coords = (0..self.rows)
            .map(|r| {
                (0..self.cols).fold(S::zero(), |acc, c| {
                    acc + self.entry(r, c).clone() * v.coords[c].clone()
                })
            })
            .collect();
        Ok(CosetVector { pair: self.pair.clone(), side: self.row_side, coords })
    }

    /// Positions where the two matrices differ (under `tolerant_eq`).
    pub fn discrepancies(&self, other: &RepMatrix<S>) -> Vec<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return vec![(self.rows.max(other.rows), self.cols.max(other.cols))];
        }
        let mut out = Vec::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !self.entry(r, c).tolerant_eq(other.entry(r, c)) {
                    out.push((r, c));
                }
            }
        }
        out
    }

    pub fn tolerant_eq(&self, other: &RepMatrix<S>) -> bool {
        self.row_side == other.row_side
            && self.col_side == other.col_side
            && self.discrepancies(other).is_empty()
    }

    /// Exactly one `1` in every row and column, zeros elsewhere.
    pub fn is_permutation_matrix(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let mut col_hits = vec![0usize; self.cols];
        for r in 0..self.rows {
            let mut row_hits = 0;
            for (c, hits) in col_hits.iter_mut().enumerate() {
                let x = self.entry(r, c);
                if x.is_one() {
                    row_hits += 1;
                    *hits += 1;
                } else if !x.is_zero() {
                    return false;
                }
            }
            if row_hits != 1 {
                return false;
            }
        }
        col_hits.iter().all(|&h| h == 1)
    }
}

impl<S: Scalar> PartialEq for RepMatrix<S> {
    fn eq(&self, other: &Self) -> bool {
        self.row_side == other.row_side
            && self.col_side == other.col_side
            && self.pair.same_pair(&other.pair)
            && self.entries == other.entries
    }
}

/// `(f . xi)(Hg) = sum over right cosets Hy of f(g y^-1) xi(Hy)`.
pub fn apply_left_action<S: Scalar>(f: &HeckeElement<S>, xi: &CosetVector<S>) -> Result<CosetVector<S>> {
    if xi.side != Side::Right || !f.pair().same_pair(&xi.pair) {
        return Err(Error::PairMismatch);
    }
    let pair = f.pair();
    let group = pair.group();
    let right = pair.right_cosets();
    let coords = right
        .reps()
        .iter()
        .map(|&g| {
            right.reps().iter().zip(&xi.coords).fold(S::zero(), |acc, (&gamma, x)| {
                if x.is_zero() {
                    acc
                } else {
                    acc + f.eval(group.mul(g, group.inv(gamma))) * x.clone()
                }
            })
        })
        .collect();
    Ok(CosetVector { pair: pair.clone(), side: Side::Right, coords })
}

/// `M[Hx][Hy] = f(x y^-1)`.
pub fn left_action_matrix<S: Scalar>(f: &HeckeElement<S>) -> RepMatrix<S> {
    let pair = f.pair();
    let group = pair.group();
    let right = pair.right_cosets();
    RepMatrix::from_fn(pair, Side::Right, Side::Right, |r, c| {
        f.eval(group.mul(right.rep(r), group.inv(right.rep(c))))
    })
}

/// `N[gH][dH] = f(g^-1 d)`, the right convolution action on `l2(G/H)`.
/// Built directly from `f`, not by conjugating the left matrix.
pub fn right_action_matrix<S: Scalar>(f: &HeckeElement<S>) -> RepMatrix<S> {
    let pair = f.pair();
    let group = pair.group();
    let left = pair.left_cosets();
    RepMatrix::from_fn(pair, Side::Left, Side::Left, |r, c| {
        f.eval(group.mul(group.inv(left.rep(r)), left.rep(c)))
    })
}

/// The 0/1 matrix with `U[gH][Hy] = 1` iff `Hy = Hg^-1`.
pub fn intertwiner_u<S: Scalar>(pair: &Arc<HeckePair>) -> RepMatrix<S> {
    let group = pair.group();
    let left = pair.left_cosets();
    let right = pair.right_cosets();
    RepMatrix::from_fn(pair, Side::Left, Side::Right, |r, c| {
        if right.coset_of(group.inv(left.rep(r))) == c {
            S::one()
        } else {
            S::zero()
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntertwiningReport {
    pub holds: bool,
    /// `(row, col)` entries where `U M_f` and `N_f U` differ.
    pub max_discrepancy_entries: Vec<(usize, usize)>,
}

/// Compares `U * left_action_matrix(f)` with `right_action_matrix(f) * U`.
pub fn check_intertwining<S: Scalar>(f: &HeckeElement<S>) -> Result<IntertwiningReport> {
    let u = intertwiner_u::<S>(f.pair());
    let lhs = u.mul(&left_action_matrix(f))?;
    let rhs = right_action_matrix(f).mul(&u)?;
    let bad = lhs.discrepancies(&rhs);
    Ok(IntertwiningReport { holds: bad.is_empty(), max_discrepancy_entries: bad })
}
