//! Cross-checks against a naive model that works on raw image vectors: no
//! element ids, no BFS order, no coset tables.

use std::collections::BTreeSet;

use hecke_core::scalar::from_parts;
use hecke_core::*;

type P = Vec<usize>;

fn compose(a: &P, b: &P) -> P {
    b.iter().map(|&i| a[i]).collect()
}

fn inverse(a: &P) -> P {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j] = i;
    }
    out
}

/// Closure by repeated pairwise products until nothing new appears.
fn naive_closure(degree: usize, gens: &[P]) -> BTreeSet<P> {
    let mut set: BTreeSet<P> = BTreeSet::from([(0..degree).collect()]);
    set.extend(gens.iter().cloned());
    loop {
        let current: Vec<P> = set.iter().cloned().collect();
        let before = set.len();
        for a in &current {
            for b in &current {
                set.insert(compose(a, b));
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

fn images(degree: usize, cycles: &str) -> P {
    Permutation::parse_cycles(degree, cycles).unwrap().images().to_vec()
}

struct Naive {
    g: Vec<P>,
    h: BTreeSet<P>,
}

impl Naive {
    fn new(degree: usize, group: &[&str], sub: &[&str]) -> Self {
        let gg: Vec<P> = group.iter().map(|s| images(degree, s)).collect();
        let hg: Vec<P> = sub.iter().map(|s| images(degree, s)).collect();
        Naive { g: naive_closure(degree, &gg).into_iter().collect(), h: naive_closure(degree, &hg) }
    }

    fn right_coset(&self, x: &P) -> BTreeSet<P> {
        self.h.iter().map(|h| compose(h, x)).collect()
    }

    fn double_coset(&self, x: &P) -> BTreeSet<P> {
        let mut out = BTreeSet::new();
        for a in &self.h {
            for b in &self.h {
                out.insert(compose(&compose(a, x), b));
            }
        }
        out
    }

    fn double_cosets(&self) -> Vec<BTreeSet<P>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for x in &self.g {
            if seen.contains(x) {
                continue;
            }
            let d = self.double_coset(x);
            seen.extend(d.iter().cloned());
            out.push(d);
        }
        out
    }

    fn right_cosets(&self) -> Vec<BTreeSet<P>> {
        let mut out: Vec<BTreeSet<P>> = Vec::new();
        for x in &self.g {
            let c = self.right_coset(x);
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    /// sum over right cosets Hy of [g y^-1 in a] [y in b], counted directly.
    fn product_count(&self, a: &BTreeSet<P>, b: &BTreeSet<P>, g: &P) -> usize {
        self.right_cosets()
            .iter()
            .filter(|c| {
                let y = c.iter().next().unwrap();
                a.contains(&compose(g, &inverse(y))) && b.contains(y)
            })
            .count()
    }
}

fn sorted_sizes(classes: &[BTreeSet<P>]) -> Vec<usize> {
    let mut v: Vec<usize> = classes.iter().map(|c| c.len()).collect();
    v.sort();
    v
}

const S3: &[&str] = &["(1 2)", "(1 2 3)"];
const S4: &[&str] = &["(1 2)", "(1 2 3 4)"];

#[test]
fn orders_match_naive_closure() {
    let naive = Naive::new(4, &["(1 2)", "(3 4)"], &[]);
    assert_eq!(naive.g.len(), 4);
    for (deg, gens) in [(3, S3), (4, S4), (4, &["(1 2 3)", "(2 3 4)"][..])] {
        let naive = Naive::new(deg, gens, &[]);
        let perms: Vec<Permutation> = gens.iter().map(|s| Permutation::parse_cycles(deg, s).unwrap()).collect();
        let g = FiniteGroup::from_generators(deg, &perms).unwrap();
        let mut ours: Vec<P> = g.elements().iter().map(|p| p.images().to_vec()).collect();
        ours.sort();
        assert_eq!(ours, naive.g);
    }
}

#[test]
fn double_coset_data_matches_naive_model() {
    // frozen from the naive model: S3/<(1 2)> has classes of sizes 2 and 4,
    // S4/<(1 2),(3 4)> has three classes of sizes 4, 4, 16
    let naive = Naive::new(3, S3, &["(1 2)"]);
    let classes = naive.double_cosets();
    assert_eq!(sorted_sizes(&classes), vec![2, 4]);
    let right_counts: Vec<usize> = classes.iter().map(|c| c.len() / naive.h.len()).collect();
    assert_eq!(right_counts, vec![1, 2]);
    let naive4 = Naive::new(4, S4, &["(1 2)", "(3 4)"]);
    assert_eq!(sorted_sizes(&naive4.double_cosets()), vec![4, 4, 16]);

    for entry in roster::ROSTER.iter() {
        let naive = Naive::new(entry.degree, entry.group, entry.subgroup);
        let pair = entry.build();
        let d = pair.double_cosets();
        let g = pair.group();
        assert_eq!(d.len(), naive.double_cosets().len(), "{}", entry.name);
        for k in 0..d.len() {
            let rep = g.element(d.rep(k)).images().to_vec();
            let expected = naive.double_coset(&rep);
            let got: BTreeSet<P> = d.members(k).iter().map(|&x| g.element(x).images().to_vec()).collect();
            assert_eq!(got, expected);
            let distinct_right: BTreeSet<BTreeSet<P>> = expected.iter().map(|x| naive.right_coset(x)).collect();
            let distinct_left: BTreeSet<BTreeSet<P>> = expected
                .iter()
                .map(|x| naive.h.iter().map(|h| compose(x, h)).collect())
                .collect();
            assert_eq!(d.right_count(k), distinct_right.len());
            assert_eq!(d.left_count(k), distinct_left.len());
            assert_eq!(d.size(k), d.right_count(k) * naive.h.len());
            assert_eq!(d.size(k), d.left_count(k) * naive.h.len());
        }
    }
}

#[test]
fn structure_constants_match_naive_counting() {
    for entry in roster::ROSTER.iter() {
        let naive = Naive::new(entry.degree, entry.group, entry.subgroup);
        let pair = entry.build();
        let sc = structure_constants(&pair);
        let g = pair.group();
        let d = pair.double_cosets();
        let classes: Vec<BTreeSet<P>> =
            (0..d.len()).map(|k| d.members(k).iter().map(|&x| g.element(x).images().to_vec()).collect()).collect();
        for i in 0..d.len() {
            for j in 0..d.len() {
                for k in 0..d.len() {
                    let rep = g.element(d.rep(k)).images().to_vec();
                    let expected = naive.product_count(&classes[i], &classes[j], &rep) as u64;
                    assert_eq!(sc.get(i, j, k), expected, "{} c[{i}][{j}][{k}]", entry.name);
                }
            }
        }
    }
}

#[test]
fn left_matrix_of_big_class_is_triangle_adjacency() {
    // naive: M[Hx][Hy] = [x y^-1 in the size-4 class]
    let naive = Naive::new(3, S3, &["(1 2)"]);
    let big = naive.double_cosets().into_iter().find(|c| c.len() == 4).unwrap();
    let cosets = naive.right_cosets();
    for (r, cx) in cosets.iter().enumerate() {
        for (c, cy) in cosets.iter().enumerate() {
            let x = cx.iter().next().unwrap();
            let y = cy.iter().next().unwrap();
            let hit = big.contains(&compose(x, &inverse(y)));
            assert_eq!(hit, r != c);
        }
    }
    let pair = roster::s3_transposition();
    let e1 = ExactHeckeElement::basis(&pair, 1);
    let m = left_action_matrix(&e1);
    for r in 0..3 {
        for c in 0..3 {
            let expected: QComplex = from_parts((i64::from(r != c), 1), (0, 1));
            assert_eq!(m.entry(r, c), &expected);
        }
    }
}

#[test]
fn inverse_bijection_matches_naive_model() {
    let naive = Naive::new(3, S3, &["(1 2)"]);
    let pair = roster::s3_transposition();
    let g = pair.group();
    // H(1 2 3) -> (1 3 2)H
    let gamma = images(3, "(1 2 3)");
    let target: BTreeSet<P> = naive.h.iter().map(|h| compose(&inverse(&gamma), h)).collect();
    let gid = g.id_of(&Permutation::from_images(gamma).unwrap()).unwrap();
    let left_index = pair.bijection().right_to_left(pair.right_cosets().coset_of(gid));
    let got: BTreeSet<P> =
        pair.left_cosets().members(left_index).iter().map(|&x| g.element(x).images().to_vec()).collect();
    assert_eq!(got, target);
    assert!(target.contains(&images(3, "(1 3 2)")));
}
