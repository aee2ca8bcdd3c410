//! Right cosets `H\G`, left cosets `G/H`, double cosets `H\G/H`, and the
//! inversion bijection between right and left cosets.
//!
//! Every coset is represented by its minimal element id and cosets are
//! ordered by representative, so the coset containing the identity is
//! always index 0.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `Hg`, the index set of `l2(H\G)`.
    Right,
    /// `gH`, the index set of `l2(G/H)`.
    Left,
}

#[derive(Debug, Clone)]
pub struct CosetSpace {
    side: Side,
    subgroup: Arc<Subgroup>,
    reps: Vec<usize>,
    coset_of: Vec<usize>,
}

impl CosetSpace {
    pub fn new(subgroup: Arc<Subgroup>, side: Side) -> Self {
        let group = subgroup.parent().clone();
        let n = group.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::with_capacity(subgroup.index());
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(g);
            for &h in subgroup.member_ids() {
                let member = match side {
                    Side::Right => group.mul(h, g),
                    Side::Left => group.mul(g, h),
                };
                coset_of[member] = idx;
            }
        }
        CosetSpace { side, subgroup, reps, coset_of }
    }

    pub fn right(subgroup: Arc<Subgroup>) -> Self {
        Self::new(subgroup, Side::Right)
    }

    pub fn left(subgroup: Arc<Subgroup>) -> Self {
        Self::new(subgroup, Side::Left)
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.subgroup.parent()
    }

    pub fn subgroup(&self) -> &Arc<Subgroup> {
        &self.subgroup
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn rep(&self, coset: usize) -> usize {
        self.reps[coset]
    }

    pub fn coset_of(&self, element: usize) -> usize {
        self.coset_of[element]
    }

    /// Member ids of one coset, ascending.
    pub fn members(&self, coset: usize) -> Vec<usize> {
        (0..self.coset_of.len()).filter(|&g| self.coset_of[g] == coset).collect()
    }

    pub fn same_pair(&self, other: &CosetSpace) -> bool {
        self.subgroup.same_pair(&other.subgroup)
    }
}

/// Double cosets `HgH` with their left and right coset counts.
#[derive(Debug, Clone)]
pub struct DoubleCosetSpace {
    subgroup: Arc<Subgroup>,
    reps: Vec<usize>,
    class_of: Vec<usize>,
    sizes: Vec<usize>,
    left_count: Vec<usize>,
    right_count: Vec<usize>,
    inverse_class: Vec<usize>,
}

impl DoubleCosetSpace {
    pub fn new(subgroup: Arc<Subgroup>, right: &CosetSpace, left: &CosetSpace) -> Self {
        let group = subgroup.parent().clone();
        let n = group.order();
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(g);
            let mut size = 0;
            for &a in subgroup.member_ids() {
                let ag = group.mul(a, g);
                for &b in subgroup.member_ids() {
                    let x = group.mul(ag, b);
                    if class_of[x] == usize::MAX {
                        class_of[x] = idx;
                        size += 1;
                    }
                }
            }
            sizes.push(size);
        }

        let count_distinct = |space: &CosetSpace| {
            let mut seen = vec![false; space.len()];
            let mut counts = vec![0; reps.len()];
            for g in 0..n {
                let c = space.coset_of(g);
                if !seen[c] {
                    seen[c] = true;
                    counts[class_of[g]] += 1;
                }
            }
            counts
        };
        let right_count = count_distinct(right);
        let left_count = count_distinct(left);
        let inverse_class = reps.iter().map(|&r| class_of[group.inv(r)]).collect();

        DoubleCosetSpace {
            subgroup,
            reps,
            class_of,
            sizes,
            left_count,
            right_count,
            inverse_class,
        }
    }

    pub fn subgroup(&self) -> &Arc<Subgroup> {
        &self.subgroup
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn rep(&self, class: usize) -> usize {
        self.reps[class]
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn size(&self, class: usize) -> usize {
        self.sizes[class]
    }

    /// Number of left cosets `gH` inside the class.
    pub fn left_count(&self, class: usize) -> usize {
        self.left_count[class]
    }

    /// Number of right cosets `Hg` inside the class.
    pub fn right_count(&self, class: usize) -> usize {
        self.right_count[class]
    }

    /// Class of `g^-1` for any `g` in `class`.
    pub fn inverse_class(&self, class: usize) -> usize {
        self.inverse_class[class]
    }

    pub fn members(&self, class: usize) -> Vec<usize> {
        (0..self.class_of.len()).filter(|&g| self.class_of[g] == class).collect()
    }
}

/// `Hg <-> g^-1 H`, realized on coset indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetBijection {
    right_to_left: Vec<usize>,
    left_to_right: Vec<usize>,
}

impl CosetBijection {
    pub fn new(right: &CosetSpace, left: &CosetSpace) -> Result<Self> {
        if right.side() != Side::Right || left.side() != Side::Left || !right.same_pair(left) {
            return Err(Error::PairMismatch);
        }
        let group = right.group();
        let right_to_left: Vec<usize> = right
            .reps()
            .iter()
            .map(|&g| left.coset_of(group.inv(g)))
            .collect();
        let mut left_to_right = vec![usize::MAX; left.len()];
        for (r, &l) in right_to_left.iter().enumerate() {
            left_to_right[l] = r;
        }
        Ok(CosetBijection { right_to_left, left_to_right })
    }

    pub fn right_to_left(&self, right_coset: usize) -> usize {
        self.right_to_left[right_coset]
    }

    pub fn left_to_right(&self, left_coset: usize) -> usize {
        self.left_to_right[left_coset]
    }

    pub fn len(&self) -> usize {
        self.right_to_left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.right_to_left.is_empty()
    }
}
