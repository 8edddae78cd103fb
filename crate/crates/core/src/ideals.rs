//! Upper and abelian ideals of the positive root poset, their frontiers, and
//! the rootlet fibration of the nonzero abelian ideals.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};
use crate::sets::RootSet;
use crate::weyl::{self, InversionSet, WeylWord};

/// An upward-closed subset of `(Δ⁺, ≼)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpperIdeal(RootSet);

/// An upper ideal in which no two members sum to a root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianIdeal(RootSet);

impl UpperIdeal {
    pub fn new(rs: &RootSystem, set: RootSet) -> Result<Self> {
        if set.universe() != rs.num_pos() || !is_upper(rs, &set) {
            return Err(Error::NotUpperIdeal(format!("{set:?}")));
        }
        Ok(Self(set))
    }

    /// The smallest upper ideal containing `generators`.
    pub fn generated_by(rs: &RootSystem, generators: impl IntoIterator<Item = usize>) -> Self {
        Self(upward_closure(rs, generators))
    }

    pub fn empty(rs: &RootSystem) -> Self {
        Self(RootSet::empty(rs.num_pos()))
    }

    pub fn full(rs: &RootSystem) -> Self {
        Self(RootSet::full(rs.num_pos()))
    }

    pub fn roots(&self) -> &RootSet {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_abelian(&self, rs: &RootSystem) -> bool {
        is_abelian_set(rs, &self.0)
    }
}

impl AbelianIdeal {
    pub fn new(rs: &RootSystem, set: RootSet) -> Result<Self> {
        if set.universe() != rs.num_pos() || !is_upper(rs, &set) {
            return Err(Error::NotUpperIdeal(format!("{set:?}")));
        }
        if !is_abelian_set(rs, &set) {
            return Err(Error::NotAbelian(format!("{set:?}")));
        }
        Ok(Self(set))
    }

    pub fn empty(rs: &RootSystem) -> Self {
        Self(RootSet::empty(rs.num_pos()))
    }

    pub fn roots(&self) -> &RootSet {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn upper(&self) -> UpperIdeal {
        UpperIdeal(self.0.clone())
    }
}

impl TryFrom<(&RootSystem, UpperIdeal)> for AbelianIdeal {
    type Error = Error;

    fn try_from((rs, u): (&RootSystem, UpperIdeal)) -> Result<Self> {
        if is_abelian_set(rs, &u.0) {
            Ok(Self(u.0))
        } else {
            Err(Error::NotAbelian(format!("{:?}", u.0)))
        }
    }
}

pub fn is_upper(rs: &RootSystem, set: &RootSet) -> bool {
    set.iter()
        .all(|i| (0..rs.rank()).all(|k| rs.up(i, k).is_none_or(|j| set.contains(j))))
}

pub fn is_abelian_set(rs: &RootSystem, set: &RootSet) -> bool {
    let members = set.indices();
    members.iter().enumerate().all(|(a, &i)| {
        members[a..]
            .iter()
            .all(|&j| rs.sum_index(i, j).is_none())
    })
}

pub fn upward_closure(rs: &RootSystem, generators: impl IntoIterator<Item = usize>) -> RootSet {
    let mut set = RootSet::empty(rs.num_pos());
    let mut stack: Vec<usize> = generators.into_iter().collect();
    while let Some(i) = stack.pop() {
        if set.contains(i) {
            continue;
        }
        set.insert(i);
        stack.extend((0..rs.rank()).filter_map(|k| rs.up(i, k)));
    }
    set
}

/// Roots outside `set` whose every upward cover lies in `set`: exactly the roots
/// that can be adjoined while keeping an upper ideal.
fn addable(rs: &RootSystem, set: &RootSet) -> Vec<usize> {
    (0..rs.num_pos())
        .filter(|&i| {
            !set.contains(i)
                && (0..rs.rank()).all(|k| rs.up(i, k).is_none_or(|j| set.contains(j)))
        })
        .collect()
}

/// All abelian ideals, in canonical order (by dimension, then member indices).
///
/// Grows ideals one maximal complement root at a time from the empty ideal; the
/// result must have `2^rank` members.
pub fn enumerate_abelian(rs: &RootSystem) -> Result<Vec<AbelianIdeal>> {
    let empty = RootSet::empty(rs.num_pos());
    let mut seen: HashSet<RootSet> = HashSet::from([empty.clone()]);
    let mut frontier = vec![empty];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for set in &frontier {
            for g in addable(rs, set) {
                if rs.sum_index(g, g).is_some() || set.iter().any(|j| rs.sum_index(g, j).is_some()) {
                    continue;
                }
                let mut bigger = set.clone();
                bigger.insert(g);
                if seen.insert(bigger.clone()) {
                    next.push(bigger);
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<RootSet> = seen.into_iter().collect();
    all.sort();
    let expected = 1usize << rs.rank();
    if all.len() != expected {
        return Err(Error::Internal(format!(
            "{} has {} abelian ideals, expected {expected}",
            rs.type_id(),
            all.len()
        )));
    }
    Ok(all.into_iter().map(AbelianIdeal).collect())
}

/// Every upper ideal of `Δ⁺`, in canonical order. Exponential in the rank; meant for small ranks.
pub fn enumerate_upper(rs: &RootSystem) -> Vec<UpperIdeal> {
    let empty = RootSet::empty(rs.num_pos());
    let mut seen: HashSet<RootSet> = HashSet::from([empty.clone()]);
    let mut frontier = vec![empty];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for set in &frontier {
            for g in addable(rs, set) {
                let mut bigger = set.clone();
                bigger.insert(g);
                if seen.insert(bigger.clone()) {
                    next.push(bigger);
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<RootSet> = seen.into_iter().collect();
    all.sort();
    all.into_iter().map(UpperIdeal).collect()
}

/// `count` upper ideals drawn deterministically from `seed`: a uniform target size,
/// then that many random single-root growth steps from the empty ideal.
pub fn sample_upper(rs: &RootSystem, count: usize, seed: u64) -> Vec<UpperIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let np = rs.num_pos();
    let rank = rs.rank();
    let outside_covers: Vec<usize> = (0..np)
        .map(|i| (0..rank).filter(|&k| rs.up(i, k).is_some()).count())
        .collect();
    (0..count)
        .map(|_| {
            let size = rng.gen_range(0..=np);
            let mut set = RootSet::empty(np);
            // pending[i] = upward covers of i not yet in the set
            let mut pending = outside_covers.clone();
            let mut candidates = vec![rs.theta()];
            for _ in 0..size {
                if candidates.is_empty() {
                    break;
                }
                let g = candidates.swap_remove(rng.gen_range(0..candidates.len()));
                set.insert(g);
                for k in 0..rank {
                    if let Some(d) = rs.down(g, k) {
                        pending[d] -= 1;
                        if pending[d] == 0 {
                            candidates.push(d);
                        }
                    }
                }
            }
            UpperIdeal(set)
        })
        .collect()
}

/// Minimal members of an upper ideal and maximal members of its complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frontier {
    pub min_roots: RootSet,
    pub max_complement_roots: RootSet,
}

/// `≼`-minimal elements of an arbitrary subset of `Δ⁺`.
pub fn min_of(rs: &RootSystem, set: &RootSet) -> RootSet {
    RootSet::from_indices(
        set.universe(),
        set.iter()
            .filter(|&i| !set.iter().any(|j| j != i && rs.leq_idx(j, i))),
    )
}

/// `≼`-maximal elements of an arbitrary subset of `Δ⁺`.
pub fn max_of(rs: &RootSystem, set: &RootSet) -> RootSet {
    RootSet::from_indices(
        set.universe(),
        set.iter()
            .filter(|&i| !set.iter().any(|j| j != i && rs.leq_idx(i, j))),
    )
}

pub fn frontier(rs: &RootSystem, ideal: &UpperIdeal) -> Frontier {
    let set = ideal.roots();
    let np = rs.num_pos();
    // covers suffice: the poset is graded by height and I is upward closed
    let min_roots = RootSet::from_indices(
        np,
        set.iter()
            .filter(|&i| (0..rs.rank()).all(|k| rs.down(i, k).is_none_or(|j| !set.contains(j)))),
    );
    let max_complement_roots = RootSet::from_indices(
        np,
        (0..np).filter(|&i| {
            !set.contains(i) && (0..rs.rank()).all(|k| rs.up(i, k).is_none_or(|j| set.contains(j)))
        }),
    );
    Frontier {
        min_roots,
        max_complement_roots,
    }
}

/// One fibre `τ⁻¹(μ)` of the rootlet map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    /// Index of the rootlet `μ` among the positive roots.
    pub rootlet: usize,
    pub ideals: Vec<AbelianIdeal>,
    pub min_ideal: AbelianIdeal,
    pub max_ideal: AbelianIdeal,
}

/// All abelian ideals of one system together with their rootlets and fibres.
#[derive(Debug, Clone)]
pub struct AbelianCatalogue {
    pub ideals: Vec<AbelianIdeal>,
    /// Rootlet index per ideal; `None` only for the zero ideal.
    pub rootlets: Vec<Option<usize>>,
    pub words: Vec<WeylWord>,
    pub fibers: BTreeMap<usize, Fiber>,
}

impl AbelianCatalogue {
    pub fn build(rs: &RootSystem) -> Result<Self> {
        let ideals = enumerate_abelian(rs)?;
        let mut rootlets = Vec::with_capacity(ideals.len());
        let mut words = Vec::with_capacity(ideals.len());
        for ideal in &ideals {
            let w = weyl::minuscule_word(rs, ideal)?;
            if ideal.roots().is_empty() {
                rootlets.push(None);
            } else {
                let mu = weyl::rootlet(rs, ideal)?;
                rootlets.push(rs.index_of(&mu.coeffs));
            }
            words.push(w);
        }
        let mut grouped: BTreeMap<usize, Vec<AbelianIdeal>> = BTreeMap::new();
        for (ideal, r) in ideals.iter().zip(&rootlets) {
            if let Some(mu) = r {
                grouped.entry(*mu).or_default().push(ideal.clone());
            }
        }
        for mu in rs.long_roots() {
            if !grouped.contains_key(&mu) {
                return Err(Error::Internal(format!(
                    "long root {} is not a rootlet",
                    rs.root(mu)
                )));
            }
        }
        let mut fibers = BTreeMap::new();
        for (mu, members) in grouped {
            let min = members
                .iter()
                .find(|a| members.iter().all(|b| a.roots().is_subset(b.roots())));
            let max = members
                .iter()
                .find(|a| members.iter().all(|b| b.roots().is_subset(a.roots())));
            let (Some(min), Some(max)) = (min.cloned(), max.cloned()) else {
                return Err(Error::Internal(format!(
                    "fibre of {} lacks a unique minimum or maximum",
                    rs.root(mu)
                )));
            };
            fibers.insert(
                mu,
                Fiber {
                    rootlet: mu,
                    ideals: members,
                    min_ideal: min,
                    max_ideal: max,
                },
            );
        }
        Ok(Self {
            ideals,
            rootlets,
            words,
            fibers,
        })
    }

    pub fn fiber(&self, mu: usize) -> Option<&Fiber> {
        self.fibers.get(&mu)
    }

    pub fn position(&self, ideal: &AbelianIdeal) -> Option<usize> {
        self.ideals.binary_search(ideal).ok()
    }
}

/// Fibres of the rootlet map keyed by the index of the rootlet.
pub fn fibers(rs: &RootSystem) -> Result<BTreeMap<usize, Fiber>> {
    Ok(AbelianCatalogue::build(rs)?.fibers)
}

/// Read the abelian ideal off a minuscule inversion set `{δ − γ : γ ∈ I}`.
pub fn ideal_from_minuscule_set(rs: &RootSystem, set: &InversionSet) -> Result<AbelianIdeal> {
    let mut roots = RootSet::empty(rs.num_pos());
    for x in set.iter() {
        let gamma = x.neg();
        match rs.index_of(&gamma.coeffs) {
            Some(i) if x.level == 1 => roots.insert(i),
            _ => {
                return Err(Error::Internal(format!(
                    "{x} does not have the form δ − γ with γ positive"
                )))
            }
        }
    }
    AbelianIdeal::new(rs, roots)
}

/// `𝔞(μ)_min`, read off the inversion set of `w_μ s₀`.
pub fn ideal_min_from_mover(rs: &RootSystem, mu: &Root) -> Result<AbelianIdeal> {
    let w = weyl::minimal_mover(rs, mu)?;
    let n = weyl::inversion_set(rs, &w.then(&WeylWord(vec![0])))?;
    ideal_from_minuscule_set(rs, &n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap())
    }

    fn coeff_sets(rs: &RootSystem, ideals: &[AbelianIdeal]) -> Vec<Vec<Vec<i32>>> {
        ideals
            .iter()
            .map(|a| a.roots().iter().map(|i| rs.coeffs(i).to_vec()).collect())
            .collect()
    }

    /// Independent oracle: filter all subsets of Δ⁺ by the two defining conditions.
    fn brute_force_abelian(rs: &RootSystem) -> Vec<RootSet> {
        let np = rs.num_pos();
        let mut out: Vec<RootSet> = (0u32..1 << np)
            .map(|mask| RootSet::from_indices(np, (0..np).filter(|i| mask >> i & 1 == 1)))
            .filter(|s| {
                s.iter().all(|i| (0..np).all(|j| !rs.leq_idx(i, j) || s.contains(j)))
                    && s.iter().all(|i| {
                        s.iter().all(|j| {
                            let v: Vec<i32> =
                                rs.coeffs(i).iter().zip(rs.coeffs(j)).map(|(a, b)| a + b).collect();
                            !rs.is_root_coeffs(&v)
                        })
                    })
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn small_enumerations_match_subset_oracle() {
        for t in ["A1", "A2", "A3", "B2", "C2", "G2", "B3", "C3"] {
            let sys = rs(t);
            let got: Vec<RootSet> = enumerate_abelian(&sys)
                .unwrap()
                .into_iter()
                .map(|a| a.roots().clone())
                .collect();
            assert_eq!(got, brute_force_abelian(&sys), "{t}");
        }
    }

    #[test]
    fn enumeration_examples() {
        let a1 = rs("A1");
        assert_eq!(enumerate_abelian(&a1).unwrap().len(), 2);
        let a2 = rs("A2");
        assert_eq!(
            coeff_sets(&a2, &enumerate_abelian(&a2).unwrap()),
            vec![
                vec![],
                vec![vec![1, 1]],
                vec![vec![1, 0], vec![1, 1]],
                vec![vec![0, 1], vec![1, 1]],
            ]
        );
        let c2 = rs("C2");
        assert_eq!(
            coeff_sets(&c2, &enumerate_abelian(&c2).unwrap()),
            vec![
                vec![],
                vec![vec![2, 1]],
                vec![vec![1, 1], vec![2, 1]],
                vec![vec![0, 1], vec![1, 1], vec![2, 1]],
            ]
        );
        assert_eq!(enumerate_abelian(&rs("E8")).unwrap().len(), 256);
    }

    #[test]
    fn frontier_examples() {
        let d4 = rs("D4");
        let f = frontier(&d4, &UpperIdeal::empty(&d4));
        assert!(f.min_roots.is_empty());
        assert_eq!(f.max_complement_roots.indices(), vec![d4.theta()]);
        let f = frontier(&d4, &UpperIdeal::full(&d4));
        assert_eq!(f.min_roots.indices(), vec![0, 1, 2, 3]);
        assert!(f.max_complement_roots.is_empty());

        let gens = [[1, 1, 1, 0], [1, 1, 0, 1], [0, 1, 1, 1]];
        let ideal = UpperIdeal::generated_by(&d4, gens.iter().map(|c| d4.index_of(c).unwrap()));
        assert_eq!(ideal.len(), 5);
        let f = frontier(&d4, &ideal);
        let mins: Vec<Vec<i32>> = f.min_roots.iter().map(|i| d4.coeffs(i).to_vec()).collect();
        assert_eq!(mins, vec![vec![1, 1, 1, 0], vec![1, 1, 0, 1], vec![0, 1, 1, 1]]);
        assert_eq!(min_of(&d4, ideal.roots()), f.min_roots);
        assert_eq!(max_of(&d4, &ideal.roots().complement()), f.max_complement_roots);
    }

    #[test]
    fn fiber_examples() {
        let a2 = rs("A2");
        let fib = fibers(&a2).unwrap();
        assert_eq!(fib.len(), 3);
        assert!(fib.values().all(|f| f.ideals.len() == 1));

        let c2 = rs("C2");
        let fib = fibers(&c2).unwrap();
        let alpha2 = c2.index_of(&[0, 1]).unwrap();
        let f = &fib[&alpha2];
        assert_eq!(
            coeff_sets(&c2, &f.ideals),
            vec![vec![vec![1, 1], vec![2, 1]], vec![vec![0, 1], vec![1, 1], vec![2, 1]]]
        );
        assert_eq!(f.min_ideal, f.ideals[0]);
        assert_eq!(f.max_ideal, f.ideals[1]);
        assert_eq!(fib[&c2.theta()].ideals.len(), 1);
        for t in ["B3", "D4", "F4"] {
            let sys = rs(t);
            let fib = fibers(&sys).unwrap();
            assert_eq!(fib[&sys.theta()].min_ideal.roots().indices(), vec![sys.theta()]);
        }
    }

    #[test]
    fn min_from_mover_examples() {
        let c2 = rs("C2");
        let got = ideal_min_from_mover(&c2, &Root::simple(2, 1)).unwrap();
        assert_eq!(coeff_sets(&c2, &[got]), vec![vec![vec![1, 1], vec![2, 1]]]);
        let d4 = rs("D4");
        let got = ideal_min_from_mover(&d4, d4.theta_root()).unwrap();
        assert_eq!(got.roots().indices(), vec![d4.theta()]);
    }

    #[test]
    fn constructors_validate() {
        let a2 = rs("A2");
        let not_upper = RootSet::from_indices(3, [0]);
        assert!(matches!(UpperIdeal::new(&a2, not_upper), Err(Error::NotUpperIdeal(_))));
        let full = RootSet::full(3);
        assert!(matches!(AbelianIdeal::new(&a2, full), Err(Error::NotAbelian(_))));
    }

    #[test]
    fn samples_are_upper_and_reproducible() {
        let e6 = rs("E6");
        let a = sample_upper(&e6, 50, 7);
        assert_eq!(a, sample_upper(&e6, 50, 7));
        assert!(a.iter().all(|u| is_upper(&e6, u.roots())));
        assert_ne!(a, sample_upper(&e6, 50, 8));
    }
}
