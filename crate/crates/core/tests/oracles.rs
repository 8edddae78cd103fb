//! Independent recomputations from coefficient vectors alone.

use abnorm::gradings;
use abnorm::ideals::{self, UpperIdeal};
use abnorm::normalisers::{self, Method};
use abnorm::{build_root_system, RootSet, RootSystem, SimpleSubset};

fn rs(s: &str) -> RootSystem {
    build_root_system(s.parse().unwrap())
}

fn plus_simple(c: &[i32], k: usize, sign: i32) -> Vec<i32> {
    let mut v = c.to_vec();
    v[k] += sign;
    v
}

/// Subsets of `Δ⁺` closed under adding simple roots, by brute force over all subsets.
fn upper_by_subsets(rs: &RootSystem) -> Vec<Vec<usize>> {
    let n = rs.num_pos();
    (0u32..1 << n)
        .filter(|&mask| {
            (0..n).filter(|&i| mask >> i & 1 == 1).all(|i| {
                (0..rs.rank()).all(|k| match rs.index_of(&plus_simple(rs.coeffs(i), k, 1)) {
                    Some(j) => mask >> j & 1 == 1,
                    None => true,
                })
            })
        })
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
        .collect()
}

/// `g_{−α_k}` normalises `⊕_{γ∈I} g_γ` iff no `γ ∈ I` has `γ − α_k` zero or a root outside `I`.
fn levi_by_definition(rs: &RootSystem, ideal: &[usize]) -> u64 {
    (0..rs.rank())
        .filter(|&k| {
            ideal.iter().all(|&g| {
                let d = plus_simple(rs.coeffs(g), k, -1);
                if d.iter().all(|&x| x == 0) {
                    return false;
                }
                match rs.index_of(&d) {
                    Some(j) => ideal.contains(&j),
                    None => true,
                }
            })
        })
        .fold(0, |acc, k| acc | 1 << k)
}

#[test]
fn upper_ideals_match_brute_force() {
    for t in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A4"] {
        let rs = rs(t);
        let mut brute = upper_by_subsets(&rs);
        brute.sort();
        let mut ours: Vec<Vec<usize>> = ideals::enumerate_upper(&rs).iter().map(|u| u.roots().indices()).collect();
        ours.sort();
        assert_eq!(ours, brute, "{t}");
    }
}

#[test]
fn normalisers_match_the_definition() {
    for t in ["A2", "A3", "B2", "B3", "C3", "G2", "A4", "D4"] {
        let rs = rs(t);
        for u in ideals::enumerate_upper(&rs) {
            let oracle = levi_by_definition(&rs, &u.roots().indices());
            for m in [Method::Bracket, Method::ViaMin] {
                assert_eq!(normalisers::normaliser(&rs, &u, m).unwrap().levi_bits(), oracle, "{t} {m}");
            }
            if u.is_abelian(&rs) {
                let got = normalisers::normaliser(&rs, &u, Method::Minuscule).unwrap();
                assert_eq!(got.levi_bits(), oracle, "{t} minuscule");
            }
            // The max-side test only sees simple roots outside the ideal.
            let simple_in_ideal = (0..rs.rank()).any(|k| u.roots().contains(k));
            if !u.roots().is_full() && !simple_in_ideal {
                let got = normalisers::normaliser(&rs, &u, Method::ViaMax).unwrap();
                assert_eq!(got.levi_bits(), oracle, "{t} via_max");
            }
        }
    }
}

#[test]
fn max_side_counterexample_in_a3() {
    let a3 = rs("A3");
    // Δ⁺ ∖ {α₃}: g_{−α₁} hits g_{α₁} into 𝔱, yet no maximal complement root is α₁-adjacent.
    let u = UpperIdeal::new(&a3, RootSet::from_indices(6, [0, 1, 3, 4, 5])).unwrap();
    let oracle = levi_by_definition(&a3, &u.roots().indices());
    assert_eq!(oracle, 0b100);
    let via_max = normalisers::normaliser(&a3, &u, Method::ViaMax).unwrap().levi_bits();
    assert_eq!(via_max, 0b101);
}

#[test]
fn f2_matches_a_direct_grading() {
    for t in ["A3", "B3", "C3", "G2", "D4", "F4"] {
        let rs = rs(t);
        let theta = rs.coeffs(rs.theta()).to_vec();
        for bits in 0..1u64 << rs.rank() {
            let deg = |c: &[i32]| -> i32 { (0..rs.rank()).filter(|&k| bits >> k & 1 == 1).map(|k| c[k]).sum() };
            let h = deg(&theta);
            let expected: Vec<usize> = (0..rs.num_pos()).filter(|&i| deg(rs.coeffs(i)) >= h / 2 + 1).collect();
            let got = gradings::f2(&rs, &SimpleSubset::excluded(rs.rank(), bits)).unwrap();
            assert_eq!(got.roots().indices(), expected, "{t} {bits:b}");
        }
    }
}
