//! Normalisers of `𝔟`-stable subspaces of `𝔲`, decided on roots.
//!
//! A standard parabolic is recorded by its Levi simple roots. A simple root `α`
//! is *excluded* (i.e. `𝔤_{−α}` does not normalise) when bracketing with
//! `𝔤_{−α}` leaves the subspace; four independent tests of this are provided,
//! along with closed-form predictions for the root-minimal ideals and for the
//! maximal abelian ideals with a long simple rootlet.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::{self, UpperIdeal};
use crate::rootsys::{Family, Root, RootSystem};
use crate::sets::SimpleSubset;
use crate::weyl::{self, WeylWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// `α` excluded iff `α ∈ I` or some `γ ∈ I` has `γ − α ∈ Δ⁺ ∖ I`.
    Bracket,
    /// Test only the minimal roots of `I`: `γ − α ∈ Δ⁺ ∪ {0}`.
    ViaMin,
    /// Test only the maximal roots `γ` of `Δ⁺ ∖ I`: `γ + α ∈ Δ`. Undefined for `I = Δ⁺`.
    ViaMax,
    /// `α` is a Levi simple iff `w_𝔞(α)` is an affine simple root. Abelian ideals only.
    Minuscule,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Bracket,
        Method::ViaMin,
        Method::ViaMax,
        Method::Minuscule,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Bracket => "bracket",
            Method::ViaMin => "via_min",
            Method::ViaMax => "via_max",
            Method::Minuscule => "minuscule",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s || m.name().replace('_', "-") == s)
            .ok_or_else(|| Error::Parse(format!("unknown normaliser method '{s}'")))
    }
}

/// Levi simple roots of `𝔫_𝔤(𝔠)` for the subspace with root set `ideal`.
pub fn normaliser(rs: &RootSystem, ideal: &UpperIdeal, method: Method) -> Result<SimpleSubset> {
    let rank = rs.rank();
    let set = ideal.roots();
    let excluded: u64 = match method {
        Method::Bracket => (0..rank)
            .filter(|&k| {
                set.contains(rs.simple_index(k))
                    || set
                        .iter()
                        .any(|g| rs.down(g, k).is_some_and(|d| !set.contains(d)))
            })
            .fold(0, |acc, k| acc | 1 << k),
        Method::ViaMin => {
            let mins = ideals::frontier(rs, ideal).min_roots;
            (0..rank)
                .filter(|&k| {
                    mins.iter()
                        .any(|g| g == rs.simple_index(k) || rs.down(g, k).is_some())
                })
                .fold(0, |acc, k| acc | 1 << k)
        }
        Method::ViaMax => {
            if set.is_full() {
                return Err(Error::Domain(
                    "via_max needs a proper subspace of 𝔲 (I ≠ Δ⁺)".into(),
                ));
            }
            let maxes = ideals::frontier(rs, ideal).max_complement_roots;
            (0..rank)
                .filter(|&k| maxes.iter().any(|g| rs.up(g, k).is_some()))
                .fold(0, |acc, k| acc | 1 << k)
        }
        Method::Minuscule => {
            let abelian = ideals::AbelianIdeal::try_from((rs, ideal.clone())).map_err(|_| {
                Error::Domain("minuscule method applies to abelian ideals only".into())
            })?;
            let w = weyl::minuscule_word(rs, &abelian)?;
            let levi = (0..rank)
                .filter(|&k| {
                    let image = weyl::act(rs, &w, &Root::simple(rank, k)).expect("simple root");
                    weyl::is_affine_simple(rs, &image)
                })
                .fold(0u64, |acc, k| acc | 1 << k);
            return Ok(SimpleSubset::levi(rank, levi));
        }
    };
    Ok(SimpleSubset::excluded(rank, excluded))
}

/// Runs every applicable method and returns the common answer, or an internal
/// error naming the first disagreement.
pub fn normaliser_all_methods(rs: &RootSystem, ideal: &UpperIdeal) -> Result<SimpleSubset> {
    let reference = normaliser(rs, ideal, Method::Bracket)?;
    for m in [Method::ViaMin, Method::ViaMax, Method::Minuscule] {
        let got = match normaliser(rs, ideal, m) {
            Ok(s) => s,
            Err(Error::Domain(_)) => continue,
            Err(e) => return Err(e),
        };
        if got != reference {
            return Err(Error::Internal(format!(
                "normaliser methods disagree on {:?}: bracket {:?}, {m} {:?}",
                ideal.roots(),
                reference,
                got
            )));
        }
    }
    Ok(reference)
}

/// `{w_μ⁻¹(β) : β ∈ Π, (β, μ) = 0}` as a bitmask; each image must be simple.
pub(crate) fn transported_orthogonal_simples(rs: &RootSystem, mu: usize, w_mu: &WeylWord) -> Result<u64> {
    let rank = rs.rank();
    let inv = w_mu.inverse();
    let mut bits = 0u64;
    for k in (0..rank).filter(|&k| rs.inner_idx(k, mu) == 0) {
        let image = weyl::act(rs, &inv, &Root::simple(rank, k))?;
        match rs.index_of(&image.coeffs) {
            Some(j) if j < rank && image.level == 0 => bits |= 1 << j,
            _ => {
                return Err(Error::Internal(format!(
                    "w_μ⁻¹(α{}) = {image} is not simple for μ = {}",
                    k + 1,
                    rs.root(mu)
                )))
            }
        }
    }
    Ok(bits)
}

fn theta_orthogonal_simples(rs: &RootSystem) -> u64 {
    (0..rs.rank())
        .filter(|&k| rs.inner_idx(k, rs.theta()) == 0)
        .fold(0, |acc, k| acc | 1 << k)
}

/// Closed-form `Π[μ]_min` for a long positive root `μ`.
pub fn predicted_levi_min(rs: &RootSystem, mu: &Root) -> Result<SimpleSubset> {
    let idx = weyl::positive_index(rs, mu)?;
    predicted_levi_min_idx(rs, idx)
}

pub fn predicted_levi_min_idx(rs: &RootSystem, mu: usize) -> Result<SimpleSubset> {
    let rank = rs.rank();
    if !rs.is_long(mu) {
        return Err(Error::NotLong(rs.root(mu).to_string()));
    }
    let theta = rs.theta();
    if mu == theta {
        return Ok(SimpleSubset::levi(rank, theta_orthogonal_simples(rs)));
    }
    let w_mu = weyl::minimal_mover_idx(rs, mu)?;
    let transported = transported_orthogonal_simples(rs, mu, &w_mu)?;
    if rs.inner_idx(mu, theta) == 0 {
        return Ok(SimpleSubset::levi(rank, transported));
    }
    if let Some(at) = rs.alpha_theta() {
        return Ok(SimpleSubset::levi(rank, transported | 1 << at));
    }
    match rs.type_id().family() {
        Family::A => {
            let c = rs.coeffs(mu);
            let full = crate::sets::full_mask(rank);
            // μ = α₁ + ⋯ + α_i or α_j + ⋯ + α_n
            if c[0] == 1 {
                let i = c.iter().rposition(|&x| x == 1).expect("nonzero root");
                Ok(SimpleSubset::levi(rank, full & !(1 | 1 << i)))
            } else {
                let j = c.iter().position(|&x| x == 1).expect("nonzero root");
                Ok(SimpleSubset::levi(rank, full & !(1 << j | 1 << (rank - 1))))
            }
        }
        _ => Err(Error::Internal(format!(
            "{} has a long root {} in ℋ ∖ {{θ}} although θ is not fundamental",
            rs.type_id(),
            rs.root(mu)
        ))),
    }
}

/// Closed-form `Π[α̃]_max` for a long simple root `α̃` (0-based simple index `k`).
pub fn predicted_levi_max(rs: &RootSystem, alpha: &Root) -> Result<SimpleSubset> {
    let idx = weyl::positive_index(rs, alpha)?;
    if idx >= rs.rank() || !rs.is_long(idx) {
        return Err(Error::NotLongSimple(alpha.to_string()));
    }
    predicted_levi_max_simple(rs, idx)
}

pub fn predicted_levi_max_simple(rs: &RootSystem, k: usize) -> Result<SimpleSubset> {
    let rank = rs.rank();
    if k >= rank || !rs.is_long(k) {
        return Err(Error::NotLongSimple(format!("α{}", k + 1)));
    }
    if is_a_endpoint(rs, k) {
        // here 𝔞(α̃)_min = 𝔞(α̃)_max
        return predicted_levi_min_idx(rs, k);
    }
    let w = weyl::minimal_mover_idx(rs, k)?;
    let transported = transported_orthogonal_simples(rs, k, &w)?;
    let heis = rs.heis_simples().into_iter().fold(0u64, |acc, j| acc | 1 << j);
    if heis & transported != 0 {
        return Err(Error::Internal(format!(
            "Π ∩ ℋ meets the transported simples for α{}",
            k + 1
        )));
    }
    Ok(SimpleSubset::levi(rank, heis | transported))
}

/// Type `A_n` with `α̃ ∈ {α₁, α_n}`, the case excluded from the max-side formulas.
pub fn is_a_endpoint(rs: &RootSystem, k: usize) -> bool {
    rs.type_id().family() == Family::A && (k == 0 || k == rs.rank() - 1)
}

/// JSON normaliser record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormaliserRecord {
    pub ideal: Vec<usize>,
    pub levi_simples: Vec<usize>,
    pub excluded_simples: Vec<usize>,
    pub methods_agreed: bool,
}

impl NormaliserRecord {
    /// Simple roots are reported 1-based, positive roots by 0-based index.
    pub fn compute(rs: &RootSystem, ideal: &UpperIdeal) -> Result<Self> {
        let bracket = normaliser(rs, ideal, Method::Bracket)?;
        let methods_agreed = normaliser_all_methods(rs, ideal).is_ok();
        Ok(Self {
            ideal: ideal.roots().indices(),
            levi_simples: bracket.levi_indices().iter().map(|k| k + 1).collect(),
            excluded_simples: bracket.excluded_indices().iter().map(|k| k + 1).collect(),
            methods_agreed,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{enumerate_abelian, AbelianCatalogue};
    use crate::rootsys::build_root_system;
    use crate::sets::{RootSet, SubsetRole};

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap())
    }

    fn excl(rank: usize, one_based: &[usize]) -> SimpleSubset {
        SimpleSubset::from_indices(rank, one_based.iter().map(|k| k - 1), SubsetRole::Excluded)
    }

    #[test]
    fn empty_and_theta_ideals() {
        for t in ["A3", "B3", "D4", "G2"] {
            let sys = rs(t);
            for m in Method::ALL {
                let s = normaliser(&sys, &UpperIdeal::empty(&sys), m).unwrap();
                assert_eq!(s.excluded_bits(), 0, "{t} {m}");
                let top = UpperIdeal::generated_by(&sys, [sys.theta()]);
                let s = normaliser(&sys, &top, m).unwrap();
                assert_eq!(s.levi_bits(), theta_orthogonal_simples(&sys), "{t} {m}");
            }
        }
    }

    #[test]
    fn d4_example_2b() {
        let d4 = rs("D4");
        let gens = [[1, 1, 1, 0], [1, 1, 0, 1], [0, 1, 1, 1]];
        let ideal = UpperIdeal::generated_by(&d4, gens.iter().map(|c| d4.index_of(c).unwrap()));
        for m in Method::ALL {
            assert_eq!(normaliser(&d4, &ideal, m).unwrap(), excl(4, &[1, 3, 4]), "{m}");
        }
    }

    #[test]
    fn c_n_example_3_max() {
        for n in 2..=6 {
            let sys = build_root_system(format!("C{n}").parse().unwrap());
            let cat = AbelianCatalogue::build(&sys).unwrap();
            let alpha_n = n - 1;
            let max = &cat.fiber(alpha_n).unwrap().max_ideal;
            for m in Method::ALL {
                assert_eq!(normaliser(&sys, &max.upper(), m).unwrap(), excl(n, &[n]), "C{n} {m}");
            }
            let min = &cat.fiber(alpha_n).unwrap().min_ideal;
            assert_eq!(
                normaliser(&sys, &min.upper(), Method::Bracket).unwrap(),
                excl(n, &[1, n])
            );
        }
    }

    #[test]
    fn domain_errors() {
        let a3 = rs("A3");
        assert!(matches!(
            normaliser(&a3, &UpperIdeal::full(&a3), Method::ViaMax),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            normaliser(&a3, &UpperIdeal::full(&a3), Method::Minuscule),
            Err(Error::Domain(_))
        ));
        assert!(normaliser(&a3, &UpperIdeal::full(&a3), Method::Bracket).is_ok());
        assert!(matches!(
            predicted_levi_max(&rs("B3"), &Root::simple(3, 2)),
            Err(Error::NotLongSimple(_))
        ));
    }

    #[test]
    fn predictions_a_n() {
        for n in 3..=7 {
            let sys = build_root_system(format!("A{n}").parse().unwrap());
            for i in 2..n {
                let a = Root::simple(n, i - 1);
                let min = predicted_levi_min(&sys, &a).unwrap();
                assert_eq!(min, excl(n, &[1, i, n]), "A{n} α{i} min");
                let max = predicted_levi_max(&sys, &a).unwrap();
                assert_eq!(max, excl(n, &[i]), "A{n} α{i} max");
            }
        }
    }

    #[test]
    fn prediction_alpha_theta_adjacent() {
        for t in ["B4", "D5", "E6", "E8", "F4", "G2"] {
            let sys = rs(t);
            let at = sys.alpha_theta().unwrap();
            let p = predicted_levi_min_idx(&sys, at).unwrap();
            let adjacent: u64 = sys.neighbours(at).into_iter().fold(0, |acc, j| acc | 1 << j);
            assert_eq!(p.excluded_bits(), adjacent, "{t}");
        }
    }

    #[test]
    fn all_methods_agree_on_small_abelian_ideals() {
        for t in ["A4", "B3", "C3", "D4", "G2", "F4"] {
            let sys = rs(t);
            for a in enumerate_abelian(&sys).unwrap() {
                normaliser_all_methods(&sys, &a.upper()).unwrap();
            }
        }
    }

    #[test]
    fn record_uses_one_based_simples() {
        let a2 = rs("A2");
        let ideal = UpperIdeal::new(&a2, RootSet::from_indices(3, [0, 2])).unwrap();
        let rec = NormaliserRecord::compute(&a2, &ideal).unwrap();
        assert_eq!(rec.excluded_simples, vec![1]);
        assert_eq!(rec.levi_simples, vec![2]);
        assert!(rec.methods_agreed);
    }
}
