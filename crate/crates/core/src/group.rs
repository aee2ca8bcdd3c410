//! Finite permutation groups enumerated by breadth-first closure.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_GROUP_CAP: usize = 10_000;

/// Above this order products are looked up on demand instead of tabulated.
pub const MUL_TABLE_LIMIT: usize = 1_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupConfig {
    pub cap: usize,
}

impl Default for GroupConfig {
    fn default() -> Self {
        GroupConfig { cap: DEFAULT_GROUP_CAP }
    }
}

#[derive(Debug, Clone)]
enum MulStrategy {
    Table(Vec<u32>),
    Oracle,
}

/// An enumerated finite group. Element ids are positions in the BFS closure
/// from the identity (id 0), with generators sorted by their image arrays and
/// each new element found as `x * s`.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inv: Vec<usize>,
    mul: MulStrategy,
}

impl FiniteGroup {
    pub fn from_generators(degree: usize, generators: &[Permutation]) -> Result<Self> {
        Self::from_generators_with(degree, generators, GroupConfig::default())
    }

    pub fn from_generators_with(
        degree: usize,
        generators: &[Permutation],
        config: GroupConfig,
    ) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let mut gens: Vec<Permutation> = generators.to_vec();
        gens.sort();
        gens.dedup();

        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for s in &gens {
                let y = elements[x].compose(s);
                if index.contains_key(&y) {
                    continue;
                }
                if elements.len() == config.cap {
                    return Err(Error::GroupTooLarge { cap: config.cap });
                }
                index.insert(y.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(y);
            }
        }

        let inv = elements.iter().map(|g| index[&g.inverse()]).collect();
        let n = elements.len();
        let mul = if n <= MUL_TABLE_LIMIT {
            let mut table = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    table.push(index[&a.compose(b)] as u32);
                }
            }
            MulStrategy::Table(table)
        } else {
            MulStrategy::Oracle
        };
        Ok(FiniteGroup { degree, elements, index, inv, mul })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn identity_id(&self) -> usize {
        0
    }

    pub fn element(&self, id: usize) -> &Permutation {
        &self.elements[id]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn id_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.mul {
            MulStrategy::Table(t) => t[a * self.order() + b] as usize,
            MulStrategy::Oracle => self.index[&self.elements[a].compose(&self.elements[b])],
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn uses_mul_table(&self) -> bool {
        matches!(self.mul, MulStrategy::Table(_))
    }

    /// Same degree and identical element enumeration.
    pub fn same_as(&self, other: &FiniteGroup) -> bool {
        std::ptr::eq(self, other) || (self.degree == other.degree && self.elements == other.elements)
    }
}

/// A subgroup of an enumerated group, stored as a sorted id set.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    member_ids: Vec<usize>,
    membership: Vec<bool>,
}

impl Subgroup {
    /// Smallest subgroup of `parent` containing `generators`.
    pub fn from_generators(parent: Arc<FiniteGroup>, generators: &[Permutation]) -> Result<Self> {
        let mut gen_ids = Vec::with_capacity(generators.len());
        for g in generators {
            let id = parent
                .id_of(g)
                .ok_or_else(|| Error::NotAMember(g.to_cycle_string()))?;
            gen_ids.push(id);
        }
        gen_ids.sort_unstable();
        gen_ids.dedup();
        let mut membership = vec![false; parent.order()];
        membership[parent.identity_id()] = true;
        let mut stack = vec![parent.identity_id()];
        while let Some(x) = stack.pop() {
            for &s in &gen_ids {
                let y = parent.mul(x, s);
                if !membership[y] {
                    membership[y] = true;
                    stack.push(y);
                }
            }
        }
        Ok(Self::from_membership(parent, membership))
    }

    pub fn trivial(parent: Arc<FiniteGroup>) -> Self {
        let mut membership = vec![false; parent.order()];
        membership[parent.identity_id()] = true;
        Self::from_membership(parent, membership)
    }

    pub fn whole(parent: Arc<FiniteGroup>) -> Self {
        let membership = vec![true; parent.order()];
        Self::from_membership(parent, membership)
    }

    fn from_membership(parent: Arc<FiniteGroup>, membership: Vec<bool>) -> Self {
        let member_ids = (0..membership.len()).filter(|&i| membership[i]).collect();
        Subgroup { parent, member_ids, membership }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.member_ids.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn member_ids(&self) -> &[usize] {
        &self.member_ids
    }

    pub fn contains(&self, id: usize) -> bool {
        self.membership[id]
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        (0..g.order()).all(|x| {
            self.member_ids
                .iter()
                .all(|&h| self.contains(g.mul(g.mul(x, h), g.inv(x))))
        })
    }

    /// True when both describe the same subgroup of the same group.
    pub fn same_pair(&self, other: &Subgroup) -> bool {
        self.parent.same_as(&other.parent) && self.member_ids == other.member_ids
    }
}
