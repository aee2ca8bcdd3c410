use std::fmt;
use std::sync::Arc;

use crate::cosets::{CosetBijection, CosetSpace, DoubleCosetSpace};
use crate::error::Result;
use crate::group::{FiniteGroup, GroupConfig, Subgroup};
use crate::perm::Permutation;

/// A finite pair `(G, H)` with all of its coset structure precomputed.
#[derive(Debug)]
pub struct HeckePair {
    subgroup: Arc<Subgroup>,
    right: CosetSpace,
    left: CosetSpace,
    double: DoubleCosetSpace,
    bijection: CosetBijection,
    label: String,
}

impl HeckePair {
    pub fn new(subgroup: Arc<Subgroup>) -> Arc<Self> {
        let right = CosetSpace::right(subgroup.clone());
        let left = CosetSpace::left(subgroup.clone());
        let double = DoubleCosetSpace::new(subgroup.clone(), &right, &left);
        let bijection = CosetBijection::new(&right, &left).expect("spaces share their subgroup");
        let label = default_label(&subgroup);
        Arc::new(HeckePair { subgroup, right, left, double, bijection, label })
    }

    pub fn from_generators(
        degree: usize,
        group_gens: &[Permutation],
        subgroup_gens: &[Permutation],
        config: GroupConfig,
    ) -> Result<Arc<Self>> {
        let group = Arc::new(FiniteGroup::from_generators_with(degree, group_gens, config)?);
        let subgroup = Arc::new(Subgroup::from_generators(group, subgroup_gens)?);
        Ok(Self::new(subgroup))
    }

    pub fn with_label(self: Arc<Self>, label: impl Into<String>) -> Arc<Self> {
        let mut pair = Arc::try_unwrap(self).unwrap_or_else(|shared| HeckePair {
            subgroup: shared.subgroup.clone(),
            right: shared.right.clone(),
            left: shared.left.clone(),
            double: shared.double.clone(),
            bijection: shared.bijection.clone(),
            label: shared.label.clone(),
        });
        pair.label = label.into();
        Arc::new(pair)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.subgroup.parent()
    }

    pub fn subgroup(&self) -> &Arc<Subgroup> {
        &self.subgroup
    }

    /// `H\G`.
    pub fn right_cosets(&self) -> &CosetSpace {
        &self.right
    }

    /// `G/H`.
    pub fn left_cosets(&self) -> &CosetSpace {
        &self.left
    }

    pub fn double_cosets(&self) -> &DoubleCosetSpace {
        &self.double
    }

    pub fn bijection(&self) -> &CosetBijection {
        &self.bijection
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dimension(&self) -> usize {
        self.double.len()
    }

    pub fn same_pair(&self, other: &HeckePair) -> bool {
        std::ptr::eq(self, other) || self.subgroup.same_pair(&other.subgroup)
    }
}

impl fmt::Display for HeckePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

fn default_label(subgroup: &Subgroup) -> String {
    format!(
        "|G| = {}, |H| = {}, degree {}",
        subgroup.parent().order(),
        subgroup.order(),
        subgroup.parent().degree()
    )
}
