//! Numerical semigroups and their canonical value sets.
//!
//! A numerical semigroup `S ⊆ ℕ` is the value semigroup of a unibranch
//! monomial singularity `k[[t^{n_1}, …, t^{n_r}]]`. Besides gaps and
//! Frobenius data this module computes the canonical set
//! `K = {a : γ − a ∉ S}`, its truncation `K* = K ∩ [0, γ]` (the exponents
//! of the canonical model), the local invariants `η = #(K ∖ S)` and
//! `μ = #(T ∖ K)` where `T` is the value semigroup of the blowup along the
//! dualizing module, and the block decomposition used by the pencil
//! arguments.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::valueset::ValueSet;

/// Largest genus [`enumerate_genus`] accepts.
pub const DEFAULT_MAX_GENUS: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("no positive generators given")]
    EmptyGenerators,
    #[error("generators have gcd {0}, expected 1")]
    GcdNotOne(u32),
    #[error("gap set {0:?} does not bound a numerical semigroup")]
    NotClosed(Vec<u32>),
    #[error("{0:?} is not the canonical set of a numerical semigroup")]
    NotAValidKappaStar(Vec<u32>),
    #[error("genus {requested} exceeds the configured bound {bound}")]
    BoundExceeded { requested: u32, bound: u32 },
}

/// A numerical semigroup, stored by its gaps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u32>,
    gaps: Vec<u32>,
    conductor: u32,
    multiplicity: u32,
    below_conductor: Vec<bool>,
}

impl NumericalSemigroup {
    /// The semigroup generated by `generators`. Zeros are ignored.
    pub fn new(generators: &[u32]) -> Result<Self, SemigroupError> {
        let mut gens: Vec<u32> = generators.iter().copied().filter(|&g| g > 0).collect();
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        gens.sort_unstable();
        gens.dedup();
        let gcd = gens.iter().fold(0u32, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(SemigroupError::GcdNotOne(gcd));
        }
        // the conductor of <n_1, ..., n_r> is below n_1 * n_r
        let max = *gens.last().unwrap() as usize;
        let bound = 2 * max * max + 1;
        let mut reach = vec![false; bound];
        reach[0] = true;
        for x in 1..bound {
            reach[x] = gens.iter().any(|&g| g as usize <= x && reach[x - g as usize]);
        }
        let gaps: Vec<u32> = (0..bound).filter(|&x| !reach[x]).map(|x| x as u32).collect();
        Ok(Self::from_gaps_unchecked(gaps))
    }

    /// The semigroup `ℕ ∖ gaps`, checking that the complement is closed
    /// under addition.
    pub fn from_gaps(gaps: &[u32]) -> Result<Self, SemigroupError> {
        let mut gaps = gaps.to_vec();
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.first() == Some(&0) {
            return Err(SemigroupError::NotClosed(gaps));
        }
        let conductor = gaps.last().map_or(0, |&g| g + 1) as usize;
        let mut member = vec![true; conductor];
        for &g in &gaps {
            member[g as usize] = false;
        }
        for a in 1..conductor {
            if !member[a] {
                continue;
            }
            for b in a..conductor - a {
                if member[b] && !member[a + b] {
                    return Err(SemigroupError::NotClosed(gaps));
                }
            }
        }
        Ok(Self::from_gaps_unchecked(gaps))
    }

    fn from_gaps_unchecked(gaps: Vec<u32>) -> Self {
        let conductor = gaps.last().map_or(0, |&g| g + 1);
        let mut below_conductor = vec![true; conductor as usize];
        for &g in &gaps {
            below_conductor[g as usize] = false;
        }
        let member = |x: u32| x >= conductor || below_conductor[x as usize];
        let multiplicity = (1..).find(|&x| member(x)).unwrap();
        // minimal generators are bounded by the Frobenius number plus the multiplicity
        let generators = (1..=conductor + multiplicity)
            .filter(|&x| member(x))
            .filter(|&x| !(multiplicity..=x / 2).any(|a| member(a) && member(x - a)))
            .collect();
        NumericalSemigroup { generators, gaps, conductor, multiplicity, below_conductor }
    }

    /// The trivial semigroup `ℕ`, value semigroup of a smooth point.
    pub fn natural() -> Self {
        Self::from_gaps_unchecked(Vec::new())
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && (x >= self.conductor as i64 || self.below_conductor[x as usize])
    }

    /// Minimal generating set.
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    /// Number of gaps; the singularity degree `δ`.
    pub fn genus(&self) -> u32 {
        self.gaps.len() as u32
    }

    /// `β`, the least `c` with `[c, ∞) ⊆ S`.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// `γ = β − 1`; `−1` for `ℕ`.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    /// `α = min(S ∖ {0})`.
    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn is_natural(&self) -> bool {
        self.gaps.is_empty()
    }

    /// Elements of `S` in `[0, β)`.
    pub fn elements_below_conductor(&self) -> Vec<u32> {
        (0..self.conductor).filter(|&x| self.below_conductor[x as usize]).collect()
    }

    pub fn value_set(&self) -> ValueSet {
        ValueSet::new(self.elements_below_conductor().into_iter().map(i64::from), self.conductor as i64)
    }

    /// The canonical sets `K`, `K*` and `S*`.
    pub fn kappa_sets(&self) -> KappaSets {
        let gamma = self.frobenius();
        let k_star: Vec<u32> = (0..=gamma).filter(|&a| !self.contains(gamma - a)).map(|a| a as u32).collect();
        let k = ValueSet::new(k_star.iter().map(|&a| i64::from(a)), self.conductor as i64);
        let s_star = (0..=self.conductor).filter(|&a| self.contains(a as i64)).collect();
        KappaSets { k, k_star, s_star }
    }

    /// `K` alone.
    pub fn canonical_set(&self) -> ValueSet {
        self.kappa_sets().k
    }

    /// Gorenstein test: `a ∈ S ⇔ γ − a ∉ S` on `[0, γ]`.
    pub fn is_symmetric(&self) -> bool {
        let gamma = self.frobenius();
        (0..=gamma).all(|a| self.contains(a) != self.contains(gamma - a))
    }

    /// `η_P = dim V_P / O_P = #(K ∖ S)`.
    pub fn eta(&self) -> u32 {
        self.canonical_set().count_not_in(&self.value_set()) as u32
    }

    /// `μ_P = dim Ô_P / V_P` together with the value set of `Ô_P`.
    pub fn mu(&self) -> (u32, ValueSet) {
        let blowup = self.blowup();
        let mu = blowup.values.count_not_in(&self.canonical_set()) as u32;
        (mu, blowup.values)
    }

    /// Blowup along the dualizing module: the Minkowski powers `Kⁿ`
    /// stabilize at a set `K^∞`, and `T = {a ≥ 0 : a + K^∞ ⊆ K^∞}`.
    pub fn blowup(&self) -> Blowup {
        let k = self.canonical_set();
        let mut power = k.clone();
        let mut steps = 1;
        loop {
            let next = power.minkowski_sum(&k);
            if next == power {
                break;
            }
            power = next;
            steps += 1;
        }
        let upper = power.tail_start().max(0);
        let finite: Vec<i64> = power.elements_below(upper).collect();
        let values = ValueSet::from_predicate(0, upper, |a| finite.iter().all(|&x| power.contains(a + x)));
        Blowup { stable_power: power, values, steps }
    }

    /// Maximal runs of consecutive integers in `S ∩ (0, β)`.
    pub fn block_decomposition(&self) -> BlockDecomposition {
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        for x in 1..self.conductor {
            if !self.below_conductor[x as usize] {
                continue;
            }
            match blocks.last_mut() {
                Some(run) if *run.last().unwrap() + 1 == x => run.push(x),
                _ => blocks.push(vec![x]),
            }
        }
        BlockDecomposition { blocks }
    }

    /// Inverts `S ↦ K*`: with `γ = max(K*) + 1`, `S = {s ≥ 0 : γ − s ∉ K}`.
    ///
    /// The empty set is the canonical set of `ℕ`.
    pub fn from_kappa_star(kstar: &[u32]) -> Result<Self, SemigroupError> {
        let mut set = kstar.to_vec();
        set.sort_unstable();
        set.dedup();
        if set.is_empty() {
            return Ok(Self::natural());
        }
        let invalid = || SemigroupError::NotAValidKappaStar(set.clone());
        if set[0] != 0 {
            return Err(invalid());
        }
        let gamma = *set.last().unwrap() + 1;
        let gaps: Vec<u32> = (0..=gamma).filter(|&s| set.binary_search(&(gamma - s)).is_ok()).collect();
        let semigroup = Self::from_gaps(&gaps).map_err(|_| invalid())?;
        if semigroup.kappa_sets().k_star != set {
            return Err(invalid());
        }
        Ok(semigroup)
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on sorted gap sets.
impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gaps.cmp(&other.gaps)
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(u32::to_string).collect();
        write!(f, "<{}>", gens.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct SemigroupRepr {
    generators: Vec<u32>,
    gaps: Vec<u32>,
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SemigroupRepr { generators: self.generators.clone(), gaps: self.gaps.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = SemigroupRepr::deserialize(deserializer)?;
        let s = NumericalSemigroup::new(&repr.generators).map_err(D::Error::custom)?;
        if s.gaps != repr.gaps {
            return Err(D::Error::custom(format!(
                "gaps {:?} do not match generators {:?}",
                repr.gaps, repr.generators
            )));
        }
        Ok(s)
    }
}

/// `K = {a : γ − a ∉ S}`, `K* = K ∩ [0, γ]` and `S* = {a ∈ S : a ≤ β}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaSets {
    pub k: ValueSet,
    pub k_star: Vec<u32>,
    pub s_star: Vec<u32>,
}

/// Result of blowing up a semigroup along its canonical module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blowup {
    /// `K^∞`, the stable Minkowski power.
    pub stable_power: ValueSet,
    /// Value semigroup `T` of the blown-up local ring.
    pub values: ValueSet,
    /// Number of powers computed before stabilizing.
    pub steps: u32,
}

impl Blowup {
    pub fn semigroup(&self) -> NumericalSemigroup {
        let gaps: Vec<u32> =
            (0..self.values.tail_start()).filter(|&x| !self.values.contains(x)).map(|x| x as u32).collect();
        NumericalSemigroup::from_gaps_unchecked(gaps)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<u32>>,
}

impl BlockDecomposition {
    pub fn count(&self) -> usize {
        self.blocks.len()
    }
}

/// All numerical semigroups of genus `g`, ordered lexicographically by gap
/// set. Refuses `g > DEFAULT_MAX_GENUS`.
pub fn enumerate_genus(g: u32) -> Result<impl Iterator<Item = NumericalSemigroup>, SemigroupError> {
    enumerate_genus_bounded(g, DEFAULT_MAX_GENUS)
}

/// [`enumerate_genus`] with an explicit genus bound.
pub fn enumerate_genus_bounded(g: u32, bound: u32) -> Result<impl Iterator<Item = NumericalSemigroup>, SemigroupError> {
    if g > bound {
        return Err(SemigroupError::BoundExceeded { requested: g, bound });
    }
    // Walk the semigroup tree: children of S remove a minimal generator
    // larger than the Frobenius number.
    let mut level = vec![Vec::<u32>::new()];
    for _ in 0..g {
        let mut next = Vec::new();
        for gaps in &level {
            let s = NumericalSemigroup::from_gaps_unchecked(gaps.clone());
            for &x in s.generators() {
                if i64::from(x) > s.frobenius() {
                    let mut child = gaps.clone();
                    child.push(x);
                    next.push(child);
                }
            }
        }
        level = next;
    }
    level.sort();
    Ok(level.into_iter().map(NumericalSemigroup::from_gaps_unchecked))
}
