//! ℤ-gradings attached to subsets `S ⊆ Π`, their tails `𝔤(≥j)`, and the maps
//! `f₁: 𝔄𝔟 → 𝔓𝔞𝔯` (normaliser) and `f₂: 𝔓𝔞𝔯 → 𝔄𝔟` (upper half of the grading).
//!
//! A standard parabolic is identified with its set of excluded simples, so
//! `𝔓𝔞𝔯(𝔤)` is the power set of `Π`, indexed by bitmask.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ideals::{self, AbelianIdeal, UpperIdeal};
use crate::normalisers::{self, Method};
use crate::rootsys::{RootSystem, SimpleTypeId};
use crate::sets::{bit_indices, RootSet, SimpleSubset};

/// The grading `deg(α) = 1` on `S`, `0` on `Π ∖ S`, extended linearly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    pub support: SimpleSubset,
    /// Degree of each positive root, by index.
    pub degrees: Vec<i32>,
    pub height: i32,
}

impl Grading {
    pub fn degree(&self, root: usize) -> i32 {
        self.degrees[root]
    }

    /// Roots of `𝔤(0; S)` in `Δ⁺`, i.e. the positive roots of the Levi.
    pub fn levi_roots(&self) -> RootSet {
        RootSet::from_indices(
            self.degrees.len(),
            (0..self.degrees.len()).filter(|&i| self.degrees[i] == 0),
        )
    }

    /// Roots of the nilradical `𝔤(≥1; S)`.
    pub fn nilradical_roots(&self) -> RootSet {
        self.levi_roots().complement()
    }
}

pub fn grading(rs: &RootSystem, support: &SimpleSubset) -> Grading {
    let support = support.as_excluded();
    let bits = support.excluded_bits();
    let degrees: Vec<i32> = (0..rs.num_pos())
        .map(|i| {
            rs.coeffs(i)
                .iter()
                .enumerate()
                .filter(|(k, _)| bits >> k & 1 == 1)
                .map(|(_, c)| c)
                .sum()
        })
        .collect();
    let height = degrees[rs.theta()];
    Grading {
        support,
        degrees,
        height,
    }
}

/// `⌊ht/2⌋ + 1`, the first degree whose tail is guaranteed abelian.
pub fn abelian_threshold(height: i32) -> i32 {
    height / 2 + 1
}

/// `𝔤(≥j; S) ∩ 𝔲` as an upper ideal, for `j ≥ 1`.
pub fn tail(rs: &RootSystem, support: &SimpleSubset, j: i32) -> Result<UpperIdeal> {
    if j < 1 {
        return Err(Error::Domain(format!("tail index {j} must be at least 1")));
    }
    let g = grading(rs, support);
    tail_of(rs, &g, j)
}

fn tail_of(rs: &RootSystem, g: &Grading, j: i32) -> Result<UpperIdeal> {
    let set = RootSet::from_indices(
        rs.num_pos(),
        (0..rs.num_pos()).filter(|&i| g.degrees[i] >= j),
    );
    let ideal = UpperIdeal::new(rs, set)
        .map_err(|e| Error::Internal(format!("grading tail is not an upper ideal: {e}")))?;
    if j >= abelian_threshold(g.height) && !ideal.is_abelian(rs) {
        return Err(Error::Internal(format!(
            "tail 𝔤(≥{j}) of a height-{} grading is not abelian",
            g.height
        )));
    }
    Ok(ideal)
}

/// `f₂(𝔭(S)) = 𝔤(≥ ⌊ht/2⌋ + 1; S)`.
pub fn f2(rs: &RootSystem, support: &SimpleSubset) -> Result<AbelianIdeal> {
    let g = grading(rs, support);
    let t = tail_of(rs, &g, abelian_threshold(g.height))?;
    AbelianIdeal::try_from((rs, t)).map_err(|e| Error::Internal(e.to_string()))
}

/// `f₁(𝔞) = 𝔫_𝔤(𝔞)`, returned as excluded simples.
pub fn f1(rs: &RootSystem, ideal: &AbelianIdeal) -> Result<SimpleSubset> {
    let u = ideal.upper();
    let bracket = normalisers::normaliser(rs, &u, Method::Bracket)?;
    let via_min = normalisers::normaliser(rs, &u, Method::ViaMin)?;
    if bracket != via_min {
        return Err(Error::Internal(format!(
            "bracket and via_min normalisers disagree on {:?}",
            ideal.roots()
        )));
    }
    Ok(bracket.as_excluded())
}

/// Two distinct supports with the same `f₂` image: the simples adjacent to `α_θ`,
/// and those together with `α_θ`. Requires `θ` fundamental.
pub fn collision_pair(rs: &RootSystem) -> Result<(SimpleSubset, SimpleSubset)> {
    let at = rs.alpha_theta().ok_or_else(|| {
        Error::Domain(format!("θ is not fundamental in {}", rs.type_id()))
    })?;
    let rank = rs.rank();
    let s1_bits = rs.neighbours(at).into_iter().fold(0u64, |acc, j| acc | 1 << j);
    let s1 = SimpleSubset::excluded(rank, s1_bits);
    let s2 = SimpleSubset::excluded(rank, s1_bits | 1 << at);
    let a1 = f2(rs, &s1)?;
    let a2 = f2(rs, &s2)?;
    let expected = ideals::ideal_min_from_mover(rs, rs.root(at))?;
    if s1 == s2 || a1 != a2 || a1 != expected {
        return Err(Error::Internal(format!(
            "collision construction failed in {}",
            rs.type_id()
        )));
    }
    Ok((s1, s2))
}

/// One finding from [`scan_maps`], with the subject that exhibits it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanWitness {
    pub claim: String,
    pub detail: Value,
}

/// Exhaustive evaluation of `f₁`, `f₂`, `ℱ = f₁∘f₂` and `ℱ̃ = f₂∘f₁` on one system.
///
/// Parabolics are written as 1-based excluded simples and ideals as 0-based root
/// indices. Every `false` flag has at least one witness; every `true` flag was
/// checked over the whole domain (`num_ideals` or `num_parabolics` elements).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapScanReport {
    #[serde(rename = "type")]
    pub type_id: SimpleTypeId,
    pub num_ideals: usize,
    pub num_parabolics: usize,
    pub image_f1_size: usize,
    pub image_f2_size: usize,
    #[serde(rename = "image_F_size")]
    pub image_f_size: usize,
    #[serde(rename = "image_Ftilde_size")]
    pub image_ftilde_size: usize,
    pub reflexive_ideals: Vec<Vec<usize>>,
    pub reflexive_parabolics: Vec<Vec<usize>>,
    #[serde(rename = "F_idempotent")]
    pub f_idempotent: bool,
    #[serde(rename = "Ftilde_idempotent")]
    pub ftilde_idempotent: bool,
    pub images_mutually_bijective: bool,
    #[serde(rename = "F_extensive")]
    pub f_extensive: bool,
    #[serde(rename = "Ftilde_extensive")]
    pub ftilde_extensive: bool,
    pub witnesses: Vec<ScanWitness>,
}

fn parabolic_label(bits: u64) -> Vec<usize> {
    bit_indices(bits).into_iter().map(|k| k + 1).collect()
}

pub fn scan_maps(rs: &RootSystem) -> Result<MapScanReport> {
    let ideals = ideals::enumerate_abelian(rs)?;
    let rank = rs.rank();
    let n_par = 1usize << rank;
    let position = |a: &AbelianIdeal| -> Result<usize> {
        ideals
            .binary_search(a)
            .map_err(|_| Error::Internal("f₂ produced an unlisted ideal".into()))
    };
    let f1_of: Vec<u64> = ideals
        .iter()
        .map(|a| f1(rs, a).map(|s| s.excluded_bits()))
        .collect::<Result<_>>()?;
    let f2_of: Vec<usize> = (0..n_par as u64)
        .map(|bits| f2(rs, &SimpleSubset::excluded(rank, bits)).and_then(|a| position(&a)))
        .collect::<Result<_>>()?;
    let big_f = |s: u64| f1_of[f2_of[s as usize]];
    let big_ft = |a: usize| f2_of[f1_of[a] as usize];
    let ideal_label = |a: usize| ideals[a].roots().indices();

    let image_f1: BTreeSet<u64> = f1_of.iter().copied().collect();
    let image_f2: BTreeSet<usize> = f2_of.iter().copied().collect();
    let image_f: BTreeSet<u64> = (0..n_par as u64).map(big_f).collect();
    let image_ft: BTreeSet<usize> = (0..ideals.len()).map(big_ft).collect();

    let mut witnesses = Vec::new();

    let reflexive_parabolics: Vec<Vec<usize>> = (0..n_par as u64)
        .filter(|&s| big_f(s) == s)
        .map(parabolic_label)
        .collect();
    let reflexive_ideals: Vec<Vec<usize>> = (0..ideals.len())
        .filter(|&a| big_ft(a) == a)
        .map(ideal_label)
        .collect();

    let f_bad = (0..n_par as u64).find(|&s| big_f(big_f(s)) != big_f(s));
    if let Some(s) = f_bad {
        witnesses.push(ScanWitness {
            claim: "F_idempotent".into(),
            detail: json!({
                "parabolic": parabolic_label(s),
                "F": parabolic_label(big_f(s)),
                "F2": parabolic_label(big_f(big_f(s))),
            }),
        });
    }
    let ft_bad = (0..ideals.len()).find(|&a| big_ft(big_ft(a)) != big_ft(a));
    if let Some(a) = ft_bad {
        witnesses.push(ScanWitness {
            claim: "Ftilde_idempotent".into(),
            detail: json!({
                "ideal": ideal_label(a),
                "Ftilde": ideal_label(big_ft(a)),
                "Ftilde2": ideal_label(big_ft(big_ft(a))),
            }),
        });
    }

    let mut bijective = true;
    for &a in &image_ft {
        let p = f1_of[a];
        if !image_f.contains(&p) || f2_of[p as usize] != a {
            bijective = false;
            witnesses.push(ScanWitness {
                claim: "images_mutually_bijective".into(),
                detail: json!({
                    "ideal_in_image_Ftilde": ideal_label(a),
                    "f1": parabolic_label(p),
                    "f2_f1": ideal_label(f2_of[p as usize]),
                }),
            });
            break;
        }
    }
    if bijective {
        for &p in &image_f {
            let a = f2_of[p as usize];
            if !image_ft.contains(&a) || f1_of[a] != p {
                bijective = false;
                witnesses.push(ScanWitness {
                    claim: "images_mutually_bijective".into(),
                    detail: json!({
                        "parabolic_in_image_F": parabolic_label(p),
                        "f2": ideal_label(a),
                        "f1_f2": parabolic_label(f1_of[a]),
                    }),
                });
                break;
            }
        }
    }

    // 𝔭 ⊆ 𝔭' ⟺ S(𝔭') ⊆ S(𝔭)
    let f_ext_bad = (0..n_par as u64).find(|&s| big_f(s) & !s != 0);
    if let Some(s) = f_ext_bad {
        witnesses.push(ScanWitness {
            claim: "F_extensive".into(),
            detail: json!({ "parabolic": parabolic_label(s), "F": parabolic_label(big_f(s)) }),
        });
    }
    let ft_ext_bad =
        (0..ideals.len()).find(|&a| !ideals[a].roots().is_subset(ideals[big_ft(a)].roots()));
    if let Some(a) = ft_ext_bad {
        witnesses.push(ScanWitness {
            claim: "Ftilde_extensive".into(),
            detail: json!({ "ideal": ideal_label(a), "Ftilde": ideal_label(big_ft(a)) }),
        });
    }
    if image_f1.len() != image_f2.len() {
        witnesses.push(ScanWitness {
            claim: "image_f1_size != image_f2_size".into(),
            detail: json!({ "image_f1_size": image_f1.len(), "image_f2_size": image_f2.len() }),
        });
    }

    Ok(MapScanReport {
        type_id: rs.type_id(),
        num_ideals: ideals.len(),
        num_parabolics: n_par,
        image_f1_size: image_f1.len(),
        image_f2_size: image_f2.len(),
        image_f_size: image_f.len(),
        image_ftilde_size: image_ft.len(),
        reflexive_ideals,
        reflexive_parabolics,
        f_idempotent: f_bad.is_none(),
        ftilde_idempotent: ft_bad.is_none(),
        images_mutually_bijective: bijective,
        f_extensive: f_ext_bad.is_none(),
        ftilde_extensive: ft_ext_bad.is_none(),
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;
    use crate::sets::SubsetRole;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap())
    }

    fn excl(rank: usize, one_based: &[usize]) -> SimpleSubset {
        SimpleSubset::from_indices(rank, one_based.iter().map(|k| k - 1), SubsetRole::Excluded)
    }

    fn coeffs(rs: &RootSystem, set: &RootSet) -> Vec<Vec<i32>> {
        set.iter().map(|i| rs.coeffs(i).to_vec()).collect()
    }

    #[test]
    fn grading_examples() {
        let d4 = rs("D4");
        let g = grading(&d4, &excl(4, &[]));
        assert_eq!(g.height, 0);
        assert!(g.degrees.iter().all(|&d| d == 0));
        assert_eq!(grading(&d4, &excl(4, &[1, 3, 4])).height, 3);
        assert_eq!(grading(&d4, &excl(4, &[1, 2, 3, 4])).height, 5);
        assert_eq!(g.levi_roots().len(), 12);
    }

    #[test]
    fn tail_examples() {
        let d4 = rs("D4");
        let s = excl(4, &[1, 3, 4]);
        assert!(tail(&d4, &s, 4).unwrap().is_empty());
        let t = tail(&d4, &s, 2).unwrap();
        assert_eq!(
            coeffs(&d4, t.roots()),
            vec![
                vec![1, 1, 1, 0],
                vec![1, 1, 0, 1],
                vec![0, 1, 1, 1],
                vec![1, 1, 1, 1],
                vec![1, 2, 1, 1]
            ]
        );
        let c2 = rs("C2");
        let t = tail(&c2, &excl(2, &[1, 2]), 2).unwrap();
        assert_eq!(coeffs(&c2, t.roots()), vec![vec![1, 1], vec![2, 1]]);
        assert!(tail(&c2, &excl(2, &[1]), 0).is_err());
    }

    #[test]
    fn f2_examples() {
        let d4 = rs("D4");
        assert!(f2(&d4, &excl(4, &[])).unwrap().roots().is_empty());
        let a = f2(&d4, &excl(4, &[1, 3, 4])).unwrap();
        let b = f2(&d4, &excl(4, &[1, 2, 3, 4])).unwrap();
        assert_eq!(a.dim(), 5);
        assert_eq!(a, b);
    }

    #[test]
    fn f1_examples() {
        let a2 = rs("A2");
        let all = ideals::enumerate_abelian(&a2).unwrap();
        assert_eq!(f1(&a2, &all[0]).unwrap(), excl(2, &[]));
        assert_eq!(f1(&a2, &all[1]).unwrap(), excl(2, &[1, 2]));
        // all[2] = {α1, θ}
        assert_eq!(f1(&a2, &all[2]).unwrap(), excl(2, &[1]));
    }

    #[test]
    fn collision_examples() {
        let d4 = rs("D4");
        let (s1, s2) = collision_pair(&d4).unwrap();
        assert_eq!(s1, excl(4, &[1, 3, 4]));
        assert_eq!(s2, excl(4, &[1, 2, 3, 4]));
        assert!(matches!(collision_pair(&rs("A5")), Err(Error::Domain(_))));
        assert!(matches!(collision_pair(&rs("C3")), Err(Error::Domain(_))));
    }

    #[test]
    fn scan_type_a_is_bijective() {
        let r = scan_maps(&rs("A4")).unwrap();
        assert_eq!(r.image_f1_size, 16);
        assert_eq!(r.image_f2_size, 16);
        assert_eq!(r.reflexive_ideals.len(), 16);
        assert!(r.f_idempotent && r.ftilde_idempotent && r.images_mutually_bijective);
        assert!(r.witnesses.is_empty());
    }
}
