//! Built-in pairs used by the verification suites.

use std::sync::Arc;

use crate::group::GroupConfig;
use crate::pair::HeckePair;
use crate::perm::Permutation;

/// Generators in 1-based cycle notation.
#[derive(Debug, Clone, Copy)]
pub struct RosterEntry {
    pub name: &'static str,
    pub degree: usize,
    pub group: &'static [&'static str],
    pub subgroup: &'static [&'static str],
}

impl RosterEntry {
    pub fn build(&self) -> Arc<HeckePair> {
        let parse = |gens: &[&str]| -> Vec<Permutation> {
            gens.iter()
                .map(|s| Permutation::parse_cycles(self.degree, s).expect("roster generator"))
                .collect()
        };
        HeckePair::from_generators(
            self.degree,
            &parse(self.group),
            &parse(self.subgroup),
            GroupConfig::default(),
        )
        .expect("roster pair")
        .with_label(self.name)
    }
}

const S3: &[&str] = &["(1 2)", "(1 2 3)"];
const S4: &[&str] = &["(1 2)", "(1 2 3 4)"];
const A4: &[&str] = &["(1 2 3)", "(2 3 4)"];

pub const ROSTER: [RosterEntry; 6] = [
    RosterEntry { name: "S3 / <(1 2)>", degree: 3, group: S3, subgroup: &["(1 2)"] },
    RosterEntry { name: "S3 / A3", degree: 3, group: S3, subgroup: &["(1 2 3)"] },
    RosterEntry { name: "S3 / {e}", degree: 3, group: S3, subgroup: &[] },
    RosterEntry { name: "S4 / <(1 2), (3 4)>", degree: 4, group: S4, subgroup: &["(1 2)", "(3 4)"] },
    RosterEntry { name: "S4 / <(1 2 3 4)>", degree: 4, group: S4, subgroup: &["(1 2 3 4)"] },
    RosterEntry { name: "A4 / <(1 2 3)>", degree: 4, group: A4, subgroup: &["(1 2 3)"] },
];

/// Point stabilizer of S3 inside S5; |G| = 120, 20 cosets.
pub const S5_EXTRA: RosterEntry = RosterEntry {
    name: "S5 / <(1 2), (1 2 3)>",
    degree: 5,
    group: &["(1 2)", "(1 2 3 4 5)"],
    subgroup: &["(1 2)", "(1 2 3)"],
};

pub fn builtin() -> Vec<Arc<HeckePair>> {
    ROSTER.iter().map(RosterEntry::build).collect()
}

pub fn s3_transposition() -> Arc<HeckePair> {
    ROSTER[0].build()
}

pub fn s3_alternating() -> Arc<HeckePair> {
    ROSTER[1].build()
}

pub fn s3_trivial() -> Arc<HeckePair> {
    ROSTER[2].build()
}

pub fn s4_klein() -> Arc<HeckePair> {
    ROSTER[3].build()
}

pub fn s4_cyclic() -> Arc<HeckePair> {
    ROSTER[4].build()
}

pub fn a4_three_cycle() -> Arc<HeckePair> {
    ROSTER[5].build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roster_orders() {
        let orders: Vec<(usize, usize, usize)> = builtin()
            .iter()
            .map(|p| (p.group().order(), p.subgroup().order(), p.dimension()))
            .collect();
        assert_eq!(orders[0], (6, 2, 2));
        assert_eq!(orders[1], (6, 3, 2));
        assert_eq!(orders[2], (6, 1, 6));
        assert_eq!(orders[3], (24, 4, 3));
        assert_eq!(orders[4].0, 24);
        assert_eq!(orders[4].1, 4);
        assert_eq!(orders[5].0, 12);
        assert_eq!(orders[5].1, 3);
    }
}
