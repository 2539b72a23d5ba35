//! Rational monomial curves `t ↦ (1 : t^{a_1} : … : t^{a_n})`.
//!
//! The only possible singularities sit over `t = 0` and `t = ∞`; each is
//! unibranch and monomial, with value semigroups generated by the `a_i`
//! and by the `a_n − a_i` respectively. Everything here is computed from
//! those two semigroups by counting exponents: a monomial sheaf
//! `O⟨t^b : b ∈ B⟩` has stalk value set `⋃ (b + S_0)` at `0` and
//! `⋃ (−b + S_∞)` at `∞`, and its global sections are spanned by the
//! monomials lying in both.

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::semigroup::{NumericalSemigroup, SemigroupError};
use crate::valueset::ValueSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("exponents must be strictly increasing positive integers, got {0:?}")]
    NotIncreasing(Vec<u32>),
    #[error("exponents have gcd {0}, expected 1")]
    GcdNotOne(u32),
    #[error("curve has genus 0")]
    GenusZero,
    #[error("generator set of a monomial sheaf is empty")]
    EmptyGenerators,
    #[error("pencil exponent must be nonzero")]
    ZeroExponent,
    #[error("curve {0:?} has singular points at both 0 and ∞")]
    NotUnibranchSingle(Vec<u32>),
    #[error("genus identity violated: g = {g}, g' = {g_prime}, eta = {eta}, mu = {mu}")]
    GenusIdentity { g: u32, g_prime: u32, eta: u32, mu: u32 },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// Value semigroups of the two branches at `0` and `∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchData {
    pub at_zero: NumericalSemigroup,
    pub at_infinity: NumericalSemigroup,
}

impl BranchData {
    pub fn delta_zero(&self) -> u32 {
        self.at_zero.genus()
    }

    pub fn delta_infinity(&self) -> u32 {
        self.at_infinity.genus()
    }

    fn branches(&self) -> [&NumericalSemigroup; 2] {
        [&self.at_zero, &self.at_infinity]
    }
}

/// Which points of the curve are singular.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SingularLocus {
    Smooth,
    AtZero,
    AtInfinity,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialCurve {
    exponents: Vec<u32>,
    branches: BranchData,
}

impl MonomialCurve {
    pub fn new(exponents: &[u32]) -> Result<Self, CurveError> {
        let increasing = exponents.first().is_some_and(|&a| a > 0) && exponents.windows(2).all(|w| w[0] < w[1]);
        if !increasing {
            return Err(CurveError::NotIncreasing(exponents.to_vec()));
        }
        let gcd = exponents.iter().fold(0u32, |acc, &a| acc.gcd(&a));
        if gcd != 1 {
            return Err(CurveError::GcdNotOne(gcd));
        }
        let top = *exponents.last().unwrap();
        let at_zero = NumericalSemigroup::new(exponents)?;
        let at_infinity_gens: Vec<u32> = std::iter::once(0).chain(exponents.iter().copied()).map(|a| top - a).collect();
        let at_infinity = NumericalSemigroup::new(&at_infinity_gens)?;
        Ok(MonomialCurve { exponents: exponents.to_vec(), branches: BranchData { at_zero, at_infinity } })
    }

    /// Representative curve with a single singular point at `0` whose
    /// branch semigroup is `s`: the minimal generators, completed so that
    /// the top two exponents are consecutive.
    pub fn one_point(s: &NumericalSemigroup) -> Self {
        let mut exps = s.generators().to_vec();
        let top = *exps.last().unwrap();
        let consecutive = exps.len() >= 2 && exps[exps.len() - 2] + 1 == top;
        if !consecutive && top > 1 {
            if s.contains(i64::from(top) - 1) {
                exps.push(top - 1);
            } else if s.contains(i64::from(top) + 1) {
                exps.push(top + 1);
            } else {
                exps.extend([s.conductor(), s.conductor() + 1]);
            }
            exps.sort_unstable();
            exps.dedup();
        }
        MonomialCurve::new(&exps).expect("generators of a numerical semigroup have gcd 1")
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn branches(&self) -> &BranchData {
        &self.branches
    }

    /// Arithmetic genus `δ_0 + δ_∞`.
    pub fn genus(&self) -> u32 {
        self.branches.delta_zero() + self.branches.delta_infinity()
    }

    pub fn singular_locus(&self) -> SingularLocus {
        match (self.branches.delta_zero() > 0, self.branches.delta_infinity() > 0) {
            (false, false) => SingularLocus::Smooth,
            (true, false) => SingularLocus::AtZero,
            (false, true) => SingularLocus::AtInfinity,
            (true, true) => SingularLocus::Both,
        }
    }

    /// Exponents `c` of the global differentials `t^c dt` of the dualizing
    /// sheaf: those with zero residue against `O` at both branches, i.e.
    /// `−c − 1 ∉ S_0` and `c + 1 ∉ S_∞`. Exactly `g` of them.
    pub fn canonical_differential_exponents(&self) -> Vec<i64> {
        let s0 = &self.branches.at_zero;
        let sinf = &self.branches.at_infinity;
        let low = -(s0.conductor() as i64) - 1;
        let high = sinf.conductor() as i64;
        (low..=high).filter(|&c| !s0.contains(-c - 1) && !sinf.contains(c + 1)).collect()
    }

    /// Exponents of the canonical model `C′ ⊂ P^{g−1}`, shifted to start
    /// at `0`.
    pub fn canonical_exponents(&self) -> Result<Vec<u32>, CurveError> {
        let raw = self.canonical_differential_exponents();
        let min = *raw.first().ok_or(CurveError::GenusZero)?;
        Ok(raw.iter().map(|&c| (c - min) as u32).collect())
    }

    /// Stalk value sets of `O⟨t^b : b ∈ gens⟩` at `0` and `∞`.
    pub fn sheaf_stalks(&self, gens: &[i64]) -> Result<(ValueSet, ValueSet), CurveError> {
        let (first, rest) = gens.split_first().ok_or(CurveError::EmptyGenerators)?;
        let s0 = self.branches.at_zero.value_set();
        let sinf = self.branches.at_infinity.value_set();
        let mut v0 = s0.shift(*first);
        let mut vinf = sinf.shift(-*first);
        for &b in rest {
            v0 = v0.union(&s0.shift(b));
            vinf = vinf.union(&sinf.shift(-b));
        }
        Ok((v0, vinf))
    }

    /// Degree and `h⁰` of the monomial sheaf `O⟨t^b : b ∈ gens⟩`.
    pub fn sheaf_degree_h0(&self, gens: &[i64]) -> Result<SheafData, CurveError> {
        let (v0, vinf) = self.sheaf_stalks(gens)?;
        let degree_zero = v0.relative_size(&self.branches.at_zero.value_set());
        let degree_infinity = vinf.relative_size(&self.branches.at_infinity.value_set());
        // t^c is a global section iff c ∈ V_0 and −c ∈ V_∞
        let upper = -vinf.min() + 1;
        let h0 = v0.elements_below(upper).filter(|&c| vinf.contains(-c)).count() as u64;
        Ok(SheafData { degree: degree_zero + degree_infinity, degree_zero, degree_infinity, h0 })
    }

    /// Degree of the pencil `O⟨1, tⁿ⟩`.
    pub fn pencil_degree(&self, n: i64) -> Result<u64, CurveError> {
        if n == 0 {
            return Err(CurveError::ZeroExponent);
        }
        let data = self.sheaf_degree_h0(&[0, n])?;
        Ok(data.degree as u64)
    }

    /// Half-width of the pencil search window.
    pub fn pencil_window(&self) -> i64 {
        2 * (i64::from(self.branches.at_zero.conductor()) + i64::from(self.branches.at_infinity.conductor()) + 1)
    }

    /// Least degree of a monomial pencil `O⟨1, tⁿ⟩`, with the smallest `|n|`
    /// (positive first) realizing it.
    pub fn gonality_witness(&self) -> (u32, i64) {
        let w = self.pencil_window();
        (1..=w)
            .flat_map(|n| [n, -n])
            .map(|n| (self.pencil_degree(n).unwrap() as u32, n))
            .min_by_key(|&(deg, _)| deg)
            .unwrap()
    }

    pub fn gonality(&self) -> u32 {
        self.gonality_witness().0
    }

    /// True iff `O⟨t^b : b ∈ gens⟩` has degree `2g − 2` and `h⁰ = g`, which
    /// forces it to be isomorphic to the dualizing sheaf.
    pub fn verify_dualizing_candidate(&self, gens: &[i64]) -> bool {
        let g = self.genus();
        if g == 0 {
            return false;
        }
        match self.sheaf_degree_h0(gens) {
            Ok(data) => data.degree == 2 * i64::from(g) - 2 && data.h0 == u64::from(g),
            Err(_) => false,
        }
    }

    /// The canonical model as a monomial curve (exponents divided by their
    /// gcd), or `None` when `g ≤ 1`.
    pub fn canonical_model(&self) -> Result<Option<CanonicalModel>, CurveError> {
        let exps = self.canonical_exponents()?;
        if exps.len() < 2 {
            return Ok(None);
        }
        let degree_of_map = exps.iter().fold(0u32, |acc, &a| acc.gcd(&a));
        let reduced: Vec<u32> = exps[1..].iter().map(|&a| a / degree_of_map).collect();
        let curve = MonomialCurve::new(&reduced)?;
        Ok(Some(CanonicalModel { exponents: exps, degree_of_map, curve }))
    }

    /// Full classification of the curve.
    pub fn analyze(&self) -> Result<CurveAnalysis, CurveError> {
        let g = self.genus();
        if g == 0 {
            return Err(CurveError::GenusZero);
        }
        let canonical = self.canonical_exponents()?;
        let local: Vec<(u32, u32, u32)> = self
            .branches
            .branches()
            .iter()
            .map(|s| {
                let (mu, t) = s.mu();
                let blowup_delta = ValueSet::from_start(0).count_not_in(&t) as u32;
                (s.eta(), mu, blowup_delta)
            })
            .collect();
        let eta: u32 = local.iter().map(|l| l.0).sum();
        let mu: u32 = local.iter().map(|l| l.1).sum();
        let blowup_genus: u32 = local.iter().map(|l| l.2).sum();

        let model = self.canonical_model()?;
        let hyperelliptic = model.as_ref().is_some_and(|m| m.degree_of_map > 1);
        // the canonical map is birational unless hyperelliptic; then C is
        // Gorenstein and its blowup along ω is C itself
        let g_prime = match &model {
            Some(m) if m.degree_of_map == 1 => m.curve.genus(),
            Some(_) => g,
            None => blowup_genus,
        };
        if g != g_prime + eta + mu || g_prime != blowup_genus {
            return Err(CurveError::GenusIdentity { g, g_prime, eta, mu });
        }

        let non_gorenstein: Vec<_> = local.iter().filter(|l| l.0 > 0).collect();
        let nearly_normal_sum: i64 =
            self.branches.branches().iter().map(|s| i64::from(s.conductor()) - i64::from(s.genus())).sum();
        let flags = Flags {
            gorenstein: eta == 0,
            kunz: non_gorenstein.iter().all(|l| l.0 == 1),
            almost_gorenstein: non_gorenstein.iter().all(|l| l.1 == 1),
            nearly_gorenstein: mu == 1,
            nearly_normal: nearly_normal_sum == 1,
        };
        let (gonality, pencil) = self.gonality_witness();
        Ok(CurveAnalysis {
            exponents: self.exponents.clone(),
            genus: g,
            g_prime,
            eta,
            mu,
            gonality,
            gonality_pencil: pencil,
            canonical,
            hyperelliptic,
            non_gorenstein_points: non_gorenstein.len() as u32,
            singular_locus: self.singular_locus(),
            flags,
        })
    }
}

/// Isomorphism test for curves with one singular point: two
/// such curves are isomorphic iff their canonical models coincide, i.e.
/// the canonical exponent sets agree up to `b ↦ max − b`.
pub fn isomorphic_via_canonical(c1: &MonomialCurve, c2: &MonomialCurve) -> Result<bool, CurveError> {
    for c in [c1, c2] {
        if c.singular_locus() == SingularLocus::Both {
            return Err(CurveError::NotUnibranchSingle(c.exponents.clone()));
        }
    }
    let a = c1.canonical_exponents()?;
    let b = c2.canonical_exponents()?;
    Ok(same_up_to_reversal(&a, &b))
}

/// Equality of normalized exponent sets up to shift and `b ↦ max − b`.
pub fn same_up_to_reversal(a: &[u32], b: &[u32]) -> bool {
    let a = normalize(a.iter().map(|&x| i64::from(x)));
    let b = normalize(b.iter().map(|&x| i64::from(x)));
    a == b || a == reverse(&b)
}

/// Sorts, dedups and shifts a set of exponents to start at `0`.
pub fn normalize(set: impl IntoIterator<Item = i64>) -> Vec<u32> {
    let mut v: Vec<i64> = set.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    let min = v.first().copied().unwrap_or(0);
    v.iter().map(|&x| (x - min) as u32).collect()
}

/// `b ↦ max − b` on a normalized set.
pub fn reverse(set: &[u32]) -> Vec<u32> {
    let max = set.iter().copied().max().unwrap_or(0);
    let mut v: Vec<u32> = set.iter().map(|&x| max - x).collect();
    v.sort_unstable();
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SheafData {
    pub degree: i64,
    pub degree_zero: i64,
    pub degree_infinity: i64,
    pub h0: u64,
}

/// The canonical model `C′` as a curve in its own right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalModel {
    /// Normalized canonical exponents (starting at `0`).
    pub exponents: Vec<u32>,
    /// Degree of `C → C′`: the gcd of the exponents; `> 1` exactly for
    /// hyperelliptic curves.
    pub degree_of_map: u32,
    pub curve: MonomialCurve,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub gorenstein: bool,
    pub kunz: bool,
    pub almost_gorenstein: bool,
    pub nearly_gorenstein: bool,
    pub nearly_normal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveAnalysis {
    pub exponents: Vec<u32>,
    pub genus: u32,
    pub g_prime: u32,
    pub eta: u32,
    pub mu: u32,
    pub gonality: u32,
    /// The `n` of a pencil `O⟨1, tⁿ⟩` realizing the gonality.
    pub gonality_pencil: i64,
    pub canonical: Vec<u32>,
    pub hyperelliptic: bool,
    pub non_gorenstein_points: u32,
    pub singular_locus: SingularLocus,
    pub flags: Flags,
}

impl CurveAnalysis {
    /// Short class label: `NN`, `K`, `NG`, `G` (Gorenstein) or `--`.
    pub fn class_label(&self) -> &'static str {
        if self.flags.gorenstein {
            "G"
        } else if self.flags.nearly_normal {
            "NN"
        } else if self.flags.kunz {
            "K"
        } else if self.flags.nearly_gorenstein {
            "NG"
        } else {
            "--"
        }
    }
}
