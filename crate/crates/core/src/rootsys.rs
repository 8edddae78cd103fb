//! Finite simple root systems over exact integers.
//!
//! Simple roots use Bourbaki numbering. The invariant form is the symmetrised
//! Cartan form scaled so that every inner product is an integer: long roots
//! have squared length `2u` with `u = 1` (simply laced), `2` (B, C, F) or `3` (G).
//! Positive roots are indexed by height and then by descending lexicographic
//! order on coefficients, so the simple root `α_k` always has index `k - 1`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sets::RootSet;

/// Largest rank accepted by [`SimpleTypeId::new`].
pub const MAX_RANK: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A simple type such as `E6`; validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleTypeId {
    family: Family,
    rank: usize,
}

impl SimpleTypeId {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok || rank > MAX_RANK {
            return Err(Error::InvalidType(format!(
                "rank {rank} is not valid for family {}",
                family.letter()
            )));
        }
        Ok(Self { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every simple type of rank at most `max_rank`, in the order
    /// A, B, C, D (from D4), E, F, G and by increasing rank within a family.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleTypeId> {
        let max_rank = max_rank.min(MAX_RANK);
        let mut out = Vec::new();
        for (family, lo) in [
            (Family::A, 1),
            (Family::B, 2),
            (Family::C, 2),
            (Family::D, 4),
            (Family::E, 6),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            for rank in lo..=max_rank {
                if let Ok(t) = SimpleTypeId::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for SimpleTypeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleTypeId {
    type Err = Error;

    /// Accepts `E6`, `e6` and the long form `Dn4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::InvalidType(s.to_string())),
        };
        let rest = chars.as_str();
        let rest = rest.strip_prefix(['n', 'N']).unwrap_or(rest);
        let rank = rest
            .parse::<usize>()
            .map_err(|_| Error::InvalidType(s.to_string()))?;
        SimpleTypeId::new(family, rank)
    }
}

impl Serialize for SimpleTypeId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SimpleTypeId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An (affine) root `Σ c_i α_i + level·δ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub coeffs: Vec<i32>,
    #[serde(default)]
    pub level: i32,
}

impl Root {
    pub fn finite(coeffs: Vec<i32>) -> Self {
        Self { coeffs, level: 0 }
    }

    pub fn affine(coeffs: Vec<i32>, level: i32) -> Self {
        Self { coeffs, level }
    }

    pub fn simple(rank: usize, k: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[k] = 1;
        Self::finite(coeffs)
    }

    pub fn is_finite(&self) -> bool {
        self.level == 0
    }

    /// Positivity in the affine sense: positive level, or level 0 with a positive finite part.
    pub fn is_positive(&self) -> bool {
        self.level > 0
            || (self.level == 0
                && self.coeffs.iter().all(|&c| c >= 0)
                && self.coeffs.iter().any(|&c| c > 0))
    }

    pub fn neg(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            level: -self.level,
        }
    }

    pub fn height(&self) -> i32 {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.coeffs.iter().all(|c| (0..=9).contains(c));
        if compact {
            for c in &self.coeffs {
                write!(f, "{c}")?;
            }
        } else {
            write!(f, "[")?;
            for (i, c) in self.coeffs.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, "]")?;
        }
        if self.level != 0 {
            write!(f, "{:+}δ", self.level)?;
        }
        Ok(())
    }
}

/// Immutable catalogue of one simple root system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    type_id: SimpleTypeId,
    /// Symmetric invariant form on the simple roots.
    form: Vec<Vec<i32>>,
    /// `cartan[i][j] = (α_i, α_j^∨)`.
    cartan: Vec<Vec<i32>>,
    pos_roots: Vec<Root>,
    index: HashMap<Vec<i32>, usize>,
    norms: Vec<i32>,
    theta: usize,
    long_mask: RootSet,
    adjacency: Vec<Vec<bool>>,
    /// `(lower, upper, k)` with `upper = lower + α_k`.
    covers: Vec<(usize, usize, usize)>,
    up: Vec<Vec<Option<usize>>>,
    down: Vec<Vec<Option<usize>>>,
    sum: Vec<Option<usize>>,
    inner: Vec<i32>,
}

impl RootSystem {
    pub fn type_id(&self) -> SimpleTypeId {
        self.type_id
    }

    pub fn rank(&self) -> usize {
        self.type_id.rank
    }

    pub fn num_pos(&self) -> usize {
        self.pos_roots.len()
    }

    pub fn pos_roots(&self) -> &[Root] {
        &self.pos_roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.pos_roots[i]
    }

    pub fn coeffs(&self, i: usize) -> &[i32] {
        &self.pos_roots[i].coeffs
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn form(&self) -> &[Vec<i32>] {
        &self.form
    }

    /// Index of the simple root `α_{k+1}` (0-based `k`).
    pub fn simple_index(&self, k: usize) -> usize {
        debug_assert_eq!(self.pos_roots[k].height(), 1);
        k
    }

    pub fn theta(&self) -> usize {
        self.theta
    }

    pub fn theta_root(&self) -> &Root {
        &self.pos_roots[self.theta]
    }

    pub fn index_of(&self, coeffs: &[i32]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// Whether `coeffs` is a (finite) root, of either sign.
    pub fn is_root_coeffs(&self, coeffs: &[i32]) -> bool {
        if coeffs.len() != self.rank() {
            return false;
        }
        if self.index.contains_key(coeffs) {
            return true;
        }
        let neg: Vec<i32> = coeffs.iter().map(|c| -c).collect();
        self.index.contains_key(&neg)
    }

    /// Whether `x` is a real affine root: its finite part is a root.
    pub fn is_root(&self, x: &Root) -> bool {
        self.is_root_coeffs(&x.coeffs)
    }

    pub fn norm(&self, i: usize) -> i32 {
        self.norms[i]
    }

    pub fn long_mask(&self) -> &RootSet {
        &self.long_mask
    }

    pub fn is_long(&self, i: usize) -> bool {
        self.long_mask.contains(i)
    }

    pub fn long_roots(&self) -> Vec<usize> {
        self.long_mask.indices()
    }

    /// 0-based indices `k` of the long simple roots.
    pub fn long_simples(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&k| self.is_long(k)).collect()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    pub fn neighbours(&self, k: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&j| self.adjacency[k][j]).collect()
    }

    pub fn covers(&self) -> &[(usize, usize, usize)] {
        &self.covers
    }

    /// `γ_i + α_k` when it is a positive root.
    pub fn up(&self, i: usize, k: usize) -> Option<usize> {
        self.up[i][k]
    }

    /// `γ_i − α_k` when it is a positive root.
    pub fn down(&self, i: usize, k: usize) -> Option<usize> {
        self.down[i][k]
    }

    /// `γ_i + γ_j` when it is a (necessarily positive) root.
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        self.sum[i * self.num_pos() + j]
    }

    /// `γ_i − γ_j` when it is a positive root.
    pub fn diff_index(&self, i: usize, j: usize) -> Option<usize> {
        let d: Vec<i32> = self
            .coeffs(i)
            .iter()
            .zip(self.coeffs(j))
            .map(|(a, b)| a - b)
            .collect();
        self.index_of(&d)
    }

    /// Inner product of two positive roots by index.
    pub fn inner_idx(&self, i: usize, j: usize) -> i32 {
        self.inner[i * self.num_pos() + j]
    }

    /// Inner product of two coefficient vectors.
    pub fn inner(&self, x: &[i32], y: &[i32]) -> i32 {
        let mut acc = 0;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                acc += xi * self.form[i][j] * yj;
            }
        }
        acc
    }

    /// `(x, α_k)` for a coefficient vector `x`.
    pub fn inner_simple(&self, x: &[i32], k: usize) -> i32 {
        x.iter().zip(&self.form).map(|(&c, row)| c * row[k]).sum()
    }

    /// `(x, α_k^∨)`.
    pub fn pairing_simple(&self, x: &[i32], k: usize) -> i32 {
        2 * self.inner_simple(x, k) / self.form[k][k]
    }

    /// `(x, θ^∨)`.
    pub fn pairing_theta(&self, x: &[i32]) -> i32 {
        let theta = &self.pos_roots[self.theta];
        2 * self.inner(x, &theta.coeffs) / self.norms[self.theta]
    }

    /// `(γ_i, γ_j^∨)` for positive roots by index.
    pub fn pairing_idx(&self, i: usize, j: usize) -> i32 {
        2 * self.inner_idx(i, j) / self.norms[j]
    }

    fn check_root(&self, x: &Root) -> Result<()> {
        if self.is_root(x) {
            Ok(())
        } else {
            Err(Error::NotARoot {
                system: self.type_id.to_string(),
                root: x.to_string(),
            })
        }
    }

    /// Cartan pairing `(γ, μ^∨) = 2(γ, μ)/(μ, μ)`. Levels are ignored, since `δ` is isotropic
    /// and orthogonal to the finite part.
    pub fn pairing(&self, gamma: &Root, mu: &Root) -> Result<i32> {
        self.check_root(gamma)?;
        self.check_root(mu)?;
        let ip = self.inner(&gamma.coeffs, &mu.coeffs);
        let nn = self.inner(&mu.coeffs, &mu.coeffs);
        debug_assert_eq!((2 * ip) % nn, 0);
        Ok(2 * ip / nn)
    }

    /// `γ + μ` if the finite part of the sum is a root.
    pub fn root_sum(&self, gamma: &Root, mu: &Root) -> Result<Option<Root>> {
        self.check_root(gamma)?;
        self.check_root(mu)?;
        let coeffs: Vec<i32> = gamma.coeffs.iter().zip(&mu.coeffs).map(|(a, b)| a + b).collect();
        Ok(self
            .is_root_coeffs(&coeffs)
            .then(|| Root::affine(coeffs, gamma.level + mu.level)))
    }

    /// `γ ≼ μ`: `μ − γ` is a non-negative combination of simple roots.
    pub fn leq(&self, gamma: &Root, mu: &Root) -> bool {
        gamma.coeffs.iter().zip(&mu.coeffs).all(|(a, b)| a <= b)
    }

    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.coeffs(i).iter().zip(self.coeffs(j)).all(|(a, b)| a <= b)
    }

    /// `ℋ = {γ ∈ Δ⁺ : (γ, θ) ≠ 0}`.
    pub fn heis_set(&self) -> RootSet {
        RootSet::from_indices(
            self.num_pos(),
            (0..self.num_pos()).filter(|&i| self.inner_idx(i, self.theta) != 0),
        )
    }

    /// 0-based simple indices in `Π ∩ ℋ`.
    pub fn heis_simples(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&k| self.inner_idx(k, self.theta) != 0)
            .collect()
    }

    /// `θ` is a fundamental weight: it pairs to 1 with exactly one simple coroot and to 0 with the rest.
    pub fn theta_fundamental(&self) -> bool {
        let theta = &self.pos_roots[self.theta].coeffs;
        let pairings: Vec<i32> = (0..self.rank()).map(|k| self.pairing_simple(theta, k)).collect();
        pairings.iter().filter(|&&p| p != 0).count() == 1 && pairings.iter().any(|&p| p == 1)
    }

    /// The unique simple root not orthogonal to `θ`, when `θ` is fundamental.
    pub fn alpha_theta(&self) -> Option<usize> {
        if !self.theta_fundamental() {
            return None;
        }
        self.heis_simples().first().copied()
    }

    /// `[γ_i : α_k]`.
    pub fn coefficient(&self, i: usize, k: usize) -> i32 {
        self.pos_roots[i].coeffs[k]
    }

    /// Root catalogue in its exported form.
    pub fn catalogue(&self) -> RootCatalogue {
        RootCatalogue {
            type_id: self.type_id,
            rank: self.rank(),
            positive_roots: self.pos_roots.iter().map(|r| r.coeffs.clone()).collect(),
            theta_index: self.theta,
            long_indices: self.long_roots(),
            cartan: self.cartan.clone(),
        }
    }
}

/// JSON export of a root system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCatalogue {
    #[serde(rename = "type")]
    pub type_id: SimpleTypeId,
    pub rank: usize,
    pub positive_roots: Vec<Vec<i32>>,
    pub theta_index: usize,
    pub long_indices: Vec<usize>,
    pub cartan: Vec<Vec<i32>>,
}

fn simple_form(t: SimpleTypeId) -> Vec<Vec<i32>> {
    let n = t.rank;
    let mut b = vec![vec![0i32; n]; n];
    let edge = |b: &mut Vec<Vec<i32>>, i: usize, j: usize, v: i32| {
        b[i - 1][j - 1] = v;
        b[j - 1][i - 1] = v;
    };
    match t.family {
        Family::A => {
            for i in 0..n {
                b[i][i] = 2;
            }
            for i in 1..n {
                edge(&mut b, i, i + 1, -1);
            }
        }
        Family::B => {
            for i in 0..n {
                b[i][i] = 4;
            }
            b[n - 1][n - 1] = 2;
            for i in 1..n {
                edge(&mut b, i, i + 1, -2);
            }
        }
        Family::C => {
            for i in 0..n {
                b[i][i] = 2;
            }
            b[n - 1][n - 1] = 4;
            for i in 1..n - 1 {
                edge(&mut b, i, i + 1, -1);
            }
            edge(&mut b, n - 1, n, -2);
        }
        Family::D => {
            for i in 0..n {
                b[i][i] = 2;
            }
            for i in 1..n - 1 {
                edge(&mut b, i, i + 1, -1);
            }
            // for n = 3 the edge (1,2) above and (1,3) here give A3 with α1 central
            edge(&mut b, n - 2, n, -1);
        }
        Family::E => {
            for i in 0..n {
                b[i][i] = 2;
            }
            edge(&mut b, 1, 3, -1);
            edge(&mut b, 2, 4, -1);
            for i in 3..n {
                edge(&mut b, i, i + 1, -1);
            }
        }
        Family::F => {
            b[0][0] = 4;
            b[1][1] = 4;
            b[2][2] = 2;
            b[3][3] = 2;
            edge(&mut b, 1, 2, -2);
            edge(&mut b, 2, 3, -2);
            edge(&mut b, 3, 4, -1);
        }
        Family::G => {
            b[0][0] = 2;
            b[1][1] = 6;
            edge(&mut b, 1, 2, -3);
        }
    }
    b
}

/// Build the positive system by closing the simple roots under root strings.
pub fn build_root_system(type_id: SimpleTypeId) -> RootSystem {
    let n = type_id.rank;
    let form = simple_form(type_id);
    let cartan: Vec<Vec<i32>> = (0..n)
        .map(|i| (0..n).map(|j| 2 * form[i][j] / form[j][j]).collect())
        .collect();
    let inner_simple = |x: &[i32], k: usize| -> i32 { x.iter().zip(&form).map(|(&c, row)| c * row[k]).sum() };

    let mut known: HashMap<Vec<i32>, ()> = HashMap::new();
    let mut all: Vec<Vec<i32>> = Vec::new();
    let mut layer: Vec<Vec<i32>> = (0..n)
        .map(|k| {
            let mut v = vec![0; n];
            v[k] = 1;
            v
        })
        .collect();
    while !layer.is_empty() {
        for r in &layer {
            known.insert(r.clone(), ());
        }
        all.extend(layer.iter().cloned());
        let mut next: Vec<Vec<i32>> = Vec::new();
        for beta in &layer {
            for k in 0..n {
                // p = length of the α_k-string below β
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[k] -= 1;
                    if known.contains_key(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - 2 * inner_simple(beta, k) / form[k][k];
                if q >= 1 {
                    let mut up = beta.clone();
                    up[k] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }

    all.sort_by(|a, b| {
        let ha: i32 = a.iter().sum();
        let hb: i32 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    let pos_roots: Vec<Root> = all.into_iter().map(Root::finite).collect();
    let np = pos_roots.len();
    let index: HashMap<Vec<i32>, usize> = pos_roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.coeffs.clone(), i))
        .collect();

    let inner_full = |x: &[i32], y: &[i32]| -> i32 {
        let mut acc = 0;
        for (i, &xi) in x.iter().enumerate() {
            for (j, &yj) in y.iter().enumerate() {
                acc += xi * form[i][j] * yj;
            }
        }
        acc
    };
    let mut inner = vec![0; np * np];
    for i in 0..np {
        for j in 0..np {
            inner[i * np + j] = inner_full(&pos_roots[i].coeffs, &pos_roots[j].coeffs);
        }
    }
    let norms: Vec<i32> = (0..np).map(|i| inner[i * np + i]).collect();
    let max_norm = *norms.iter().max().expect("nonempty root system");
    let long_mask = RootSet::from_indices(np, (0..np).filter(|&i| norms[i] == max_norm));

    let mut up = vec![vec![None; n]; np];
    let mut down = vec![vec![None; n]; np];
    let mut covers = Vec::new();
    for (i, r) in pos_roots.iter().enumerate() {
        for k in 0..n {
            let mut v = r.coeffs.clone();
            v[k] += 1;
            if let Some(&j) = index.get(&v) {
                up[i][k] = Some(j);
                down[j][k] = Some(i);
                covers.push((i, j, k));
            }
        }
    }
    let mut sum = vec![None; np * np];
    for i in 0..np {
        for j in 0..np {
            let v: Vec<i32> = pos_roots[i]
                .coeffs
                .iter()
                .zip(&pos_roots[j].coeffs)
                .map(|(a, b)| a + b)
                .collect();
            sum[i * np + j] = index.get(&v).copied();
        }
    }
    // θ: the unique root with no upward cover
    let maximal: Vec<usize> = (0..np).filter(|&i| up[i].iter().all(Option::is_none)).collect();
    assert_eq!(maximal.len(), 1, "root poset of {type_id} must have a unique maximum");
    let adjacency = (0..n)
        .map(|i| (0..n).map(|j| i != j && form[i][j] != 0).collect())
        .collect();

    RootSystem {
        type_id,
        form,
        cartan,
        pos_roots,
        index,
        norms,
        theta: maximal[0],
        long_mask,
        adjacency,
        covers,
        up,
        down,
        sum,
        inner,
    }
}

/// Relabelling between Bourbaki numbering and the E6 numbering in which the
/// nodes form the chain 1–2–3–4–5 with node 6 attached to node 3.
pub mod paper_e6 {
    /// `TO_BOURBAKI[p - 1] = b`: `paper-e6` label `p` is Bourbaki node `b` (both 1-based).
    pub const TO_BOURBAKI: [usize; 6] = [1, 3, 4, 5, 6, 2];

    pub fn to_bourbaki(label: usize) -> usize {
        TO_BOURBAKI[label - 1]
    }

    pub fn from_bourbaki(node: usize) -> usize {
        TO_BOURBAKI.iter().position(|&b| b == node).expect("E6 node") + 1
    }

    /// Reorder a coefficient vector written in `paper-e6` labels into Bourbaki order.
    pub fn coeffs_to_bourbaki(paper: &[i32]) -> Vec<i32> {
        let mut out = vec![0; 6];
        for (p, &c) in paper.iter().enumerate() {
            out[to_bourbaki(p + 1) - 1] = c;
        }
        out
    }

    pub fn coeffs_from_bourbaki(bourbaki: &[i32]) -> Vec<i32> {
        let mut out = vec![0; 6];
        for (b, &c) in bourbaki.iter().enumerate() {
            out[from_bourbaki(b + 1) - 1] = c;
        }
        out
    }
}
