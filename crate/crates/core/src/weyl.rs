//! Finite and affine Weyl group actions, inversion sets and reduced words.
//!
//! A word `[i₁, i₂, …, i_k]` denotes `s_{i₁} s_{i₂} ⋯ s_{i_k}` and acts right to left:
//! `s_{i_k}` is applied first. Letter `0` is the affine reflection in `α₀ = δ − θ`.
//! Group elements are compared through their inversion sets, never by spelling.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::AbelianIdeal;
use crate::rootsys::{Root, RootSystem};

/// A word in the affine simple reflections `s₀, …, s_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Word for the inverse element.
    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// `self · other` (apply `other` first).
    pub fn then(&self, other: &WeylWord) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }

    pub fn is_finite(&self) -> bool {
        !self.0.contains(&0)
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for WeylWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad letter '{t}' in word")))
            })
            .collect::<Result<Vec<_>>>()
            .map(WeylWord)
    }
}

impl Serialize for WeylWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for WeylWord {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Finite set of positive affine roots, canonically ordered.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct InversionSet(pub BTreeSet<Root>);

impl InversionSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: &Root) -> bool {
        self.0.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Root> {
        self.0.iter()
    }
}

/// The affine simple root `α_i` (`α₀ = δ − θ`).
pub fn affine_simple(rs: &RootSystem, i: usize) -> Root {
    if i == 0 {
        Root::affine(rs.theta_root().neg().coeffs, 1)
    } else {
        Root::simple(rs.rank(), i - 1)
    }
}

/// Whether `x` is one of `α₀, …, α_n`.
pub fn is_affine_simple(rs: &RootSystem, x: &Root) -> bool {
    match x.level {
        0 => x.coeffs.iter().sum::<i32>() == 1 && x.coeffs.iter().all(|&c| c >= 0),
        1 => x.coeffs == rs.theta_root().neg().coeffs,
        _ => false,
    }
}

/// Apply one reflection `s_i` to `x`; `x` is assumed to be a root.
pub fn reflect(rs: &RootSystem, i: usize, x: &Root) -> Root {
    let mut y = x.clone();
    if i == 0 {
        // s₀(x) = x + (x, θ^∨)(δ − θ)
        let c = rs.pairing_theta(&x.coeffs);
        for (yc, tc) in y.coeffs.iter_mut().zip(&rs.theta_root().coeffs) {
            *yc -= c * tc;
        }
        y.level += c;
    } else {
        let c = rs.pairing_simple(&x.coeffs, i - 1);
        y.coeffs[i - 1] -= c;
    }
    y
}

fn check_letters(rs: &RootSystem, w: &WeylWord) -> Result<()> {
    match w.0.iter().find(|&&l| l > rs.rank()) {
        Some(l) => Err(Error::Domain(format!(
            "letter {l} out of range for rank {}",
            rs.rank()
        ))),
        None => Ok(()),
    }
}

fn apply_unchecked(rs: &RootSystem, w: &WeylWord, x: &Root) -> Root {
    w.0.iter().rev().fold(x.clone(), |acc, &i| reflect(rs, i, &acc))
}

/// `w(x)` for an affine root `x`.
pub fn act(rs: &RootSystem, w: &WeylWord, x: &Root) -> Result<Root> {
    if !rs.is_root(x) {
        return Err(Error::NotARoot {
            system: rs.type_id().to_string(),
            root: x.to_string(),
        });
    }
    check_letters(rs, w)?;
    Ok(apply_unchecked(rs, w, x))
}

/// `𝒩(w)`, accumulated letter by letter with
/// `𝒩(w s_i) = s_i(𝒩(w) ∖ {α_i}) ∪ ({α_i} if α_i ∉ 𝒩(w))`.
pub fn inversion_set(rs: &RootSystem, w: &WeylWord) -> Result<InversionSet> {
    check_letters(rs, w)?;
    let mut n: BTreeSet<Root> = BTreeSet::new();
    for &i in &w.0 {
        let a = affine_simple(rs, i);
        let had = n.remove(&a);
        let mut next: BTreeSet<Root> = n.iter().map(|x| reflect(rs, i, x)).collect();
        if !had {
            next.insert(a);
        }
        n = next;
    }
    Ok(InversionSet(n))
}

/// Reduced word whose inversion set is exactly `set`.
///
/// Peels off the least-index affine simple root present at each step.
pub fn word_from_inversion_set(rs: &RootSystem, set: &InversionSet) -> Result<WeylWord> {
    let fail = || Error::NotBiconvex(format_roots(set));
    if set.iter().any(|x| !x.is_positive() || !rs.is_root(x)) {
        return Err(fail());
    }
    let mut cur: BTreeSet<Root> = set.0.clone();
    let mut peeled = Vec::with_capacity(cur.len());
    while !cur.is_empty() {
        let i = (0..=rs.rank())
            .find(|&i| cur.contains(&affine_simple(rs, i)))
            .ok_or_else(fail)?;
        cur.remove(&affine_simple(rs, i));
        cur = cur.iter().map(|x| reflect(rs, i, x)).collect();
        if cur.iter().any(|x| !x.is_positive()) {
            return Err(fail());
        }
        peeled.push(i);
    }
    peeled.reverse();
    let word = WeylWord(peeled);
    if inversion_set(rs, &word)? != *set {
        return Err(fail());
    }
    Ok(word)
}

fn format_roots(set: &InversionSet) -> String {
    let parts: Vec<String> = set.iter().map(|r| r.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

/// `{δ − γ : γ ∈ I}`, the inversion set a minuscule element must have.
pub fn minuscule_inversion_set(rs: &RootSystem, ideal: &AbelianIdeal) -> InversionSet {
    InversionSet(
        ideal
            .roots()
            .iter()
            .map(|i| Root::affine(rs.root(i).neg().coeffs, 1))
            .collect(),
    )
}

/// The minuscule element `w_𝔞` of an abelian ideal.
pub fn minuscule_word(rs: &RootSystem, ideal: &AbelianIdeal) -> Result<WeylWord> {
    let target = minuscule_inversion_set(rs, ideal);
    word_from_inversion_set(rs, &target)
        .map_err(|_| Error::NotAbelian(format!("{:?}", ideal.roots())))
}

/// `{γ ∈ Δ⁺ : (γ, μ^∨) = −1}`, the inversion set of `w_μ⁻¹`.
pub fn mover_inverse_inversion_set(rs: &RootSystem, mu: usize) -> InversionSet {
    InversionSet(
        (0..rs.num_pos())
            .filter(|&g| rs.pairing_idx(g, mu) == -1)
            .map(|g| rs.root(g).clone())
            .collect(),
    )
}

/// `w_μ`: the minimal-length element of `W` taking `θ` to the long root `μ`.
pub fn minimal_mover(rs: &RootSystem, mu: &Root) -> Result<WeylWord> {
    let idx = positive_index(rs, mu)?;
    minimal_mover_idx(rs, idx)
}

pub fn minimal_mover_idx(rs: &RootSystem, mu: usize) -> Result<WeylWord> {
    if !rs.is_long(mu) {
        return Err(Error::NotLong(rs.root(mu).to_string()));
    }
    let n = mover_inverse_inversion_set(rs, mu);
    let inverse = word_from_inversion_set(rs, &n)?;
    let w = inverse.inverse();
    if apply_unchecked(rs, &w, rs.theta_root()) != *rs.root(mu) || w.len() != n.len() {
        return Err(Error::Internal(format!(
            "w_μ for μ = {} fails its postconditions",
            rs.root(mu)
        )));
    }
    Ok(w)
}

/// `τ(𝔞) = w_𝔞(α₀) + δ`.
pub fn rootlet(rs: &RootSystem, ideal: &AbelianIdeal) -> Result<Root> {
    if ideal.roots().is_empty() {
        return Err(Error::EmptyIdeal);
    }
    let w = minuscule_word(rs, ideal)?;
    let mut r = apply_unchecked(rs, &w, &affine_simple(rs, 0));
    r.level += 1;
    match rs.index_of(&r.coeffs) {
        Some(i) if r.level == 0 && rs.is_long(i) => Ok(r),
        _ => Err(Error::Internal(format!(
            "rootlet {r} is not a long positive root"
        ))),
    }
}

pub(crate) fn positive_index(rs: &RootSystem, x: &Root) -> Result<usize> {
    match rs.index_of(&x.coeffs) {
        Some(i) if x.level == 0 => Ok(i),
        _ => Err(Error::NotARoot {
            system: rs.type_id().to_string(),
            root: x.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;
    use crate::sets::RootSet;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap())
    }

    fn w(s: &str) -> WeylWord {
        s.parse().unwrap()
    }

    fn ideal(rs: &RootSystem, coeffs: &[&[i32]]) -> AbelianIdeal {
        let set = RootSet::from_indices(
            rs.num_pos(),
            coeffs.iter().map(|c| rs.index_of(c).unwrap()),
        );
        AbelianIdeal::new(rs, set).unwrap()
    }

    #[test]
    fn act_examples() {
        let a2 = rs("A2");
        let x = Root::simple(2, 0);
        assert_eq!(act(&a2, &WeylWord::identity(), &x).unwrap(), x);
        let a0 = affine_simple(&a2, 0);
        assert_eq!(act(&a2, &w("0"), &a0).unwrap(), a0.neg());
        assert_eq!(act(&a2, &w("0"), &x).unwrap(), Root::affine(vec![0, -1], 1));
        assert!(act(&a2, &w("0"), &Root::finite(vec![2, 0])).is_err());
    }

    #[test]
    fn composition_convention() {
        // s₁s₀ applies s₀ first: α₀ ↦ −α₀ ↦ −s₁(α₀) = −(δ − θ + α₁)
        let a2 = rs("A2");
        let got = act(&a2, &w("1 0"), &affine_simple(&a2, 0)).unwrap();
        assert_eq!(got, Root::affine(vec![0, 1], -1));
    }

    #[test]
    fn inversion_set_examples() {
        let a2 = rs("A2");
        let n = inversion_set(&a2, &w("1")).unwrap();
        assert_eq!(n.0.into_iter().collect::<Vec<_>>(), vec![Root::simple(2, 0)]);
        let n = inversion_set(&a2, &w("1 0")).unwrap();
        let expect: BTreeSet<Root> = [Root::affine(vec![-1, -1], 1), Root::affine(vec![0, -1], 1)]
            .into_iter()
            .collect();
        assert_eq!(n.0, expect);
        assert_eq!(inversion_set(&a2, &w("1 2 1")).unwrap().len(), 3);
        assert!(inversion_set(&a2, &w("3")).is_err());
    }

    #[test]
    fn word_reconstruction_examples() {
        let a2 = rs("A2");
        assert_eq!(
            word_from_inversion_set(&a2, &InversionSet::default()).unwrap(),
            WeylWord::identity()
        );
        let one = InversionSet([Root::simple(2, 0)].into_iter().collect());
        assert_eq!(word_from_inversion_set(&a2, &one).unwrap(), w("1"));
        let n = inversion_set(&a2, &w("1 0")).unwrap();
        let word = word_from_inversion_set(&a2, &n).unwrap();
        assert_eq!(word.len(), 2);
        assert_eq!(inversion_set(&a2, &word).unwrap(), n);
        // {α₁+α₂} alone is not biconvex
        let bad = InversionSet([Root::finite(vec![1, 1])].into_iter().collect());
        assert!(matches!(
            word_from_inversion_set(&a2, &bad),
            Err(Error::NotBiconvex(_))
        ));
    }

    #[test]
    fn minuscule_examples() {
        let a2 = rs("A2");
        let empty = ideal(&a2, &[]);
        assert_eq!(minuscule_word(&a2, &empty).unwrap(), WeylWord::identity());
        let top = ideal(&a2, &[&[1, 1]]);
        assert_eq!(minuscule_word(&a2, &top).unwrap(), w("0"));
        let i2 = ideal(&a2, &[&[1, 1], &[0, 1]]);
        let word = minuscule_word(&a2, &i2).unwrap();
        assert_eq!(
            inversion_set(&a2, &word).unwrap(),
            inversion_set(&a2, &w("1 0")).unwrap()
        );
    }

    #[test]
    fn mover_examples() {
        let d4 = rs("D4");
        assert_eq!(minimal_mover(&d4, d4.theta_root()).unwrap(), WeylWord::identity());
        assert_eq!(minimal_mover(&d4, &Root::simple(4, 0)).unwrap(), w("2 3 4 2"));
        for n in 3..=8 {
            let a = build_root_system(format!("A{n}").parse().unwrap());
            let got = minimal_mover(&a, &Root::simple(n, 1)).unwrap();
            let expect = WeylWord(std::iter::once(1).chain(3..=n).collect());
            assert_eq!(
                inversion_set(&a, &got).unwrap(),
                inversion_set(&a, &expect).unwrap(),
                "A{n}"
            );
        }
        for n in 2..=8 {
            let c = build_root_system(format!("C{n}").parse().unwrap());
            let got = minimal_mover(&c, &Root::simple(n, n - 1)).unwrap();
            let expect = WeylWord((1..n).rev().collect());
            assert_eq!(
                inversion_set(&c, &got).unwrap(),
                inversion_set(&c, &expect).unwrap(),
                "C{n}"
            );
        }
        let b2 = rs("B2");
        assert!(matches!(
            minimal_mover(&b2, &Root::simple(2, 1)),
            Err(Error::NotLong(_))
        ));
    }

    #[test]
    fn rootlet_examples() {
        let a2 = rs("A2");
        assert_eq!(rootlet(&a2, &ideal(&a2, &[&[1, 1]])).unwrap(), Root::finite(vec![1, 1]));
        assert_eq!(
            rootlet(&a2, &ideal(&a2, &[&[1, 1], &[1, 0]])).unwrap(),
            Root::simple(2, 0)
        );
        assert_eq!(
            rootlet(&a2, &ideal(&a2, &[&[1, 1], &[0, 1]])).unwrap(),
            Root::simple(2, 1)
        );
        assert_eq!(rootlet(&a2, &ideal(&a2, &[])), Err(Error::EmptyIdeal));
    }

    #[test]
    fn word_text_form() {
        let word: WeylWord = "6 4 2 5 3 1 2 4 3 6".parse().unwrap();
        assert_eq!(word.to_string(), "6 4 2 5 3 1 2 4 3 6");
        assert!("1 x".parse::<WeylWord>().is_err());
    }
}
