//! Intersection theory on smooth rational normal scrolls.
//!
//! The Chow ring of a smooth `d`-fold scroll of degree `e` is
//! `Z[H, F] / (F², H^{d+1}, H^d F, H^d − e·H^{d−1}F)`, with `H^{d−1}F` the
//! class of a point. Euler characteristics of line bundles follow from
//! Hirzebruch–Riemann–Roch with the tangent Chern classes `c₁ = −K_S` and
//! `c₂`; genera of curves on the scroll follow from their resolutions.
//! Every closed form here has an independent route through the ring.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChowError {
    #[error("scroll dimensions must be positive for a smooth scroll, got {0:?}")]
    NotSmooth(Vec<u32>),
    #[error("degree requested on a class that is not top-dimensional")]
    NotTopDimensional,
    #[error("closed form not available in dimension {0}")]
    UnsupportedDimension(u32),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("non-integral genus: 2·p_a − 2 = {0}")]
    NonIntegralGenus(BigInt),
    #[error("genus computations disagree: {0:?}")]
    PathsDisagree(Vec<BigRational>),
}

/// A smooth scroll `S_{m_1…m_d}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambient {
    dims: Vec<u32>,
}

impl Ambient {
    pub fn new(dims: &[u32]) -> Result<Self, ChowError> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(ChowError::NotSmooth(dims.to_vec()));
        }
        let mut dims = dims.to_vec();
        dims.sort_unstable();
        Ok(Ambient { dims })
    }

    /// The balanced scroll of dimension `d` and degree `e` (the `m_i` differ
    /// by at most one). Ring structure and Euler characteristics depend only
    /// on `d` and `e`.
    pub fn balanced(d: u32, e: u32) -> Result<Self, ChowError> {
        if d == 0 || e < d {
            return Err(ChowError::InvalidInput(format!("no smooth scroll with d = {d}, e = {e}")));
        }
        let dims = (0..d).map(|i| e / d + u32::from(i >= d - e % d)).collect::<Vec<_>>();
        Ambient::new(&dims)
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn d(&self) -> u32 {
        self.dims.len() as u32
    }

    pub fn e(&self) -> u32 {
        self.dims.iter().sum()
    }

    /// `N = e + d − 1`.
    pub fn n(&self) -> u32 {
        self.e() + self.d() - 1
    }

    /// Zero element of the Chow ring.
    pub fn zero(&self) -> ChowElement {
        ChowElement { d: self.d(), coeffs: vec![[BigInt::zero(), BigInt::zero()]; self.d() as usize + 1] }
    }

    /// The monomial `c · H^i F^j`, reduced.
    pub fn monomial(&self, c: impl Into<BigInt>, i: u32, j: u32) -> ChowElement {
        let mut x = self.zero();
        self.add_monomial(&mut x, c.into(), i, j);
        x
    }

    pub fn one(&self) -> ChowElement {
        self.monomial(1, 0, 0)
    }

    pub fn divisor(&self, c: DivisorClass) -> ChowElement {
        self.monomial(c.h, 1, 0).add(&self.monomial(c.f, 0, 1))
    }

    fn add_monomial(&self, x: &mut ChowElement, c: BigInt, i: u32, j: u32) {
        let d = self.d();
        if c.is_zero() || j >= 2 || i + j > d {
            return;
        }
        if j == 0 && i == d {
            // H^d = e H^{d−1} F
            x.coeffs[d as usize][1] += c * self.e();
        } else {
            x.coeffs[(i + j) as usize][j as usize] += c;
        }
    }

    pub fn mul(&self, x: &ChowElement, y: &ChowElement) -> ChowElement {
        let mut out = self.zero();
        for (a, ca) in x.monomials() {
            for (b, cb) in y.monomials() {
                self.add_monomial(&mut out, ca * cb, a.0 + b.0, a.1 + b.1);
            }
        }
        out
    }

    /// Product of `x` and `y` together with its degree.
    pub fn mul_degree(&self, x: &ChowElement, y: &ChowElement) -> Result<(ChowElement, BigInt), ChowError> {
        let p = self.mul(x, y);
        let deg = p.degree()?;
        Ok((p, deg))
    }

    /// `K_S = −d·H + (e − 2)·F`.
    pub fn canonical_class(&self) -> DivisorClass {
        DivisorClass::new(-i64::from(self.d()), i64::from(self.e()) - 2)
    }

    /// Tangent Chern classes `c₁ = −K_S` and `c₂`, for `d ∈ {2, 3}`.
    pub fn tangent_chern(&self) -> Result<(ChowElement, ChowElement), ChowError> {
        let c1 = self.divisor(-self.canonical_class());
        let e = i64::from(self.e());
        let c2 = match self.d() {
            2 => self.monomial(4, 1, 1),
            3 => self.monomial(3, 2, 0).add(&self.monomial(6 - 2 * e, 1, 1)),
            d => return Err(ChowError::UnsupportedDimension(d)),
        };
        Ok((c1, c2))
    }

    /// `h⁰(O_S(aH + bF))` and whether all higher cohomology vanishes.
    ///
    /// Sections are spanned by `s^k t^c` with `|k| = a` and
    /// `0 ≤ c ≤ Σ k_i m_i + b`; once every exponent range is nonempty or
    /// empty by one (`b ≥ −a·m_1 − 1`) this sums to the closed form
    /// `(b+1)·C(a+d−1, d−1) + e·C(a+d−1, d)`.
    pub fn h0_class(&self, c: DivisorClass) -> H0 {
        let (a, b) = (c.h, c.f);
        let m1 = i64::from(self.dims[0]);
        let higher_vanishing = a >= 0 && b >= -(a * m1 + 1);
        if a < 0 {
            return H0 { h0: BigInt::zero(), higher_vanishing };
        }
        let h0 = if b >= -(a * m1 + 1) {
            let d = u64::from(self.d());
            let a = a as u64;
            (BigInt::from(b) + 1) * binomial(a + d - 1, d - 1) + BigInt::from(self.e()) * binomial(a + d - 1, d)
        } else {
            self.h0_by_monomials(a as u32, b)
        };
        H0 { h0, higher_vanishing }
    }

    fn h0_by_monomials(&self, a: u32, b: i64) -> BigInt {
        fn walk(dims: &[u32], left: u32, acc: i64, b: i64, total: &mut BigInt) {
            match dims {
                [] => {}
                [m] => *total += (acc + i64::from(left) * i64::from(*m) + b + 1).max(0),
                [m, rest @ ..] => {
                    for k in 0..=left {
                        walk(rest, left - k, acc + i64::from(k) * i64::from(*m), b, total);
                    }
                }
            }
        }
        let mut total = BigInt::zero();
        walk(&self.dims, a, 0, b, &mut total);
        total
    }

    /// `χ(O_S(hH + fF))` in closed form, `d ∈ {2, 3}`.
    pub fn euler_characteristic(&self, c: DivisorClass) -> Result<BigInt, ChowError> {
        integral(self.chi_value(c)?)
    }

    fn chi_value(&self, c: DivisorClass) -> Result<BigRational, ChowError> {
        let (h, f) = (rat(c.h), rat(c.f));
        let e = rat(i64::from(self.e()));
        let one = BigRational::one();
        let value = match self.d() {
            2 => &one + &h + &f + &h * &f + &h * &e / rat(2) + &h * &h * &e / rat(2),
            3 => {
                &one + (rat(2) * &e + rat(9)) / rat(6) * &h
                    + &f
                    + (&e + &one) / rat(2) * &h * &h
                    + rat(3) / rat(2) * &h * &f
                    + &e / rat(6) * &h * &h * &h
                    + &h * &h * &f / rat(2)
            }
            d => return Err(ChowError::UnsupportedDimension(d)),
        };
        Ok(value)
    }

    /// `χ(O_S(D))` by Hirzebruch–Riemann–Roch evaluated in the Chow ring.
    pub fn euler_characteristic_rr(&self, c: DivisorClass) -> Result<BigInt, ChowError> {
        let (c1, c2) = self.tangent_chern()?;
        let dv = self.divisor(c);
        let deg = |x: &ChowElement| -> Result<BigRational, ChowError> { Ok(BigRational::from_integer(x.degree()?)) };
        let c1sq = self.mul(&c1, &c1);
        let value = match self.d() {
            2 => {
                deg(&c1sq.add(&c2))? / rat(12) + deg(&self.mul(&c1, &dv))? / rat(2) + deg(&self.mul(&dv, &dv))? / rat(2)
            }
            3 => {
                let d2 = self.mul(&dv, &dv);
                deg(&self.mul(&c1, &c2))? / rat(24)
                    + deg(&self.mul(&dv, &c1sq.add(&c2)))? / rat(12)
                    + deg(&self.mul(&d2, &c1))? / rat(4)
                    + deg(&self.mul(&d2, &dv))? / rat(6)
            }
            d => return Err(ChowError::UnsupportedDimension(d)),
        };
        integral(value)
    }

    /// `χ(E^∨)` for a rank-two bundle on a threefold scroll.
    pub fn bundle_chi_dual(&self, b: &RankTwoBundleClass) -> Result<BigInt, ChowError> {
        integral(self.chi_dual_value(b)?)
    }

    fn chi_dual_value(&self, b: &RankTwoBundleClass) -> Result<BigRational, ChowError> {
        if self.d() != 3 {
            return Err(ChowError::UnsupportedDimension(self.d()));
        }
        let e = rat(i64::from(self.e()));
        let (u, v, w, z) = (rat(b.u), rat(b.v), rat(b.w), rat(b.z));
        let half = rat(1) / rat(2);
        let value = rat(2) - (rat(2) * &e + rat(9)) / rat(6) * &u - &v - (&e + rat(1)) * &w - rat(3) / rat(2) * &z
            + (&e + rat(1)) / rat(2) * &u * &u
            + rat(3) / rat(2) * &u * &v
            + &e / rat(2) * &u * &w
            + &half * &u * &z
            + &half * &v * &w
            - &e / rat(6) * &u * &u * &u
            - &half * &u * &u * &v;
        Ok(value)
    }

    /// Arithmetic genus of the zero locus of a section of `E` on a threefold
    /// scroll, computed four ways:
    ///
    /// 1. `χ(E^∨) − χ(Λ²E^∨)` from the Koszul resolution;
    /// 2. `1 + ((e(u−2) + v − 2)·w + (u − 3)·z) / 2`;
    /// 3. `2p_a − 2 = (u − 3)·deg + ℓ·(v + N − 4)` with `ℓ = w`, `deg = we + z`;
    /// 4. `1 + c₂(E)·(K_S + c₁(E)) / 2` in the Chow ring.
    pub fn pa_paths(&self, b: &RankTwoBundleClass) -> Result<[BigRational; 4], ChowError> {
        if self.d() != 3 {
            return Err(ChowError::UnsupportedDimension(self.d()));
        }
        if b.w < 1 {
            return Err(ChowError::InvalidInput(format!("w = {} must be positive", b.w)));
        }
        let e = i64::from(self.e());
        let n = i64::from(self.n());
        let (u, v, w, z) = (b.u, b.v, b.w, b.z);

        let resolution = self.chi_dual_value(b)? - self.chi_value(DivisorClass::new(-u, -v))?;
        let closed = rat(1) + rat((e * (u - 2) + v - 2) * w + (u - 3) * z) / rat(2);
        let deg = w * e + z;
        let linear = rat(1) + rat((u - 3) * deg + w * (v + n - 4)) / rat(2);
        let c2 = self.monomial(w, 2, 0).add(&self.monomial(z, 1, 1));
        let twist = self.divisor(self.canonical_class() + DivisorClass::new(u, v));
        let ring = rat(1) + BigRational::from_integer(self.mul(&c2, &twist).degree()?) / rat(2);
        Ok([resolution, closed, linear, ring])
    }

    pub fn pa_from_bundle(&self, b: &RankTwoBundleClass) -> Result<BigInt, ChowError> {
        let paths = self.pa_paths(b)?;
        if paths.iter().any(|p| p != &paths[0]) {
            return Err(ChowError::PathsDisagree(paths.to_vec()));
        }
        let pa = &paths[0];
        if !pa.is_integer() {
            return Err(ChowError::NonIntegralGenus((pa * rat(2) - rat(2)).to_integer()));
        }
        Ok(pa.to_integer())
    }

    /// Genus of the complete intersection `(aH + bF)(cH + dF)` by the split
    /// resolution: `2p_a − 2 = (a + c − 3)·deg + ℓ·(b + d + N − 4)`.
    pub fn pa_split(&self, a: i64, b: i64, c: i64, d: i64) -> Result<BigInt, ChowError> {
        let bundle = RankTwoBundleClass::split(a, b, c, d);
        let deg = bundle.w * i64::from(self.e()) + bundle.z;
        let twice = (a + c - 3) * deg + bundle.w * (b + d + i64::from(self.n()) - 4);
        if twice.is_odd() {
            return Err(ChowError::NonIntegralGenus(BigInt::from(twice)));
        }
        Ok(BigInt::from(twice / 2 + 1))
    }
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn integral(x: BigRational) -> Result<BigInt, ChowError> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(ChowError::InvalidInput(format!("non-integral value {x}")))
    }
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `h⁰` of a line bundle together with vanishing of higher cohomology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H0 {
    pub h0: BigInt,
    pub higher_vanishing: bool,
}

/// The divisor class `h·H + f·F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DivisorClass {
    pub h: i64,
    pub f: i64,
}

impl DivisorClass {
    pub fn new(h: i64, f: i64) -> Self {
        DivisorClass { h, f }
    }
}

impl std::ops::Add for DivisorClass {
    type Output = DivisorClass;

    fn add(self, other: DivisorClass) -> Self {
        DivisorClass::new(self.h + other.h, self.f + other.f)
    }
}

impl std::ops::Neg for DivisorClass {
    type Output = DivisorClass;

    fn neg(self) -> Self {
        DivisorClass::new(-self.h, -self.f)
    }
}

/// Chern data `c₁ = uH + vF`, `c₂ = wH² + zHF` of a rank-two bundle on a
/// threefold scroll.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RankTwoBundleClass {
    pub u: i64,
    pub v: i64,
    pub w: i64,
    pub z: i64,
}

impl RankTwoBundleClass {
    pub fn new(u: i64, v: i64, w: i64, z: i64) -> Self {
        RankTwoBundleClass { u, v, w, z }
    }

    /// `O(aH + bF) ⊕ O(cH + dF)`.
    pub fn split(a: i64, b: i64, c: i64, d: i64) -> Self {
        RankTwoBundleClass { u: a + c, v: b + d, w: a * c, z: a * d + b * c }
    }

    /// Chern data of a bundle whose section cuts out a curve of degree `deg`
    /// meeting a fiber `ell` times in `P^N`.
    pub fn for_curve(u: i64, v: i64, ell: i64, deg: i64, n: i64) -> Self {
        RankTwoBundleClass { u, v, w: ell, z: deg - ell * (n - 2) }
    }
}

/// An element of the Chow ring in normal form: `coeffs[k][0]` multiplies
/// `H^k` (`k < d`) and `coeffs[k][1]` multiplies `H^{k−1}F` (`k ≥ 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowElement {
    d: u32,
    coeffs: Vec<[BigInt; 2]>,
}

impl ChowElement {
    fn monomials(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.coeffs.iter().enumerate().flat_map(|(k, pair)| {
            let k = k as u32;
            [((k, 0), &pair[0]), ((k.wrapping_sub(1), 1), &pair[1])].into_iter().filter(|(_, c)| !c.is_zero())
        })
    }

    /// Coefficient of `H^i F^j` in normal form.
    pub fn coefficient(&self, i: u32, j: u32) -> BigInt {
        match j {
            0 if i < self.d => self.coeffs[i as usize][0].clone(),
            1 if i < self.d => self.coeffs[i as usize + 1][1].clone(),
            _ => BigInt::zero(),
        }
    }

    pub fn add(&self, other: &ChowElement) -> ChowElement {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| [&a[0] + &b[0], &a[1] + &b[1]]).collect();
        ChowElement { d: self.d, coeffs }
    }

    /// Degree of a zero-cycle: the coefficient of the point class `H^{d−1}F`.
    pub fn degree(&self) -> Result<BigInt, ChowError> {
        let d = self.d as usize;
        let lower = self.coeffs[..d].iter().flatten().any(|c| !c.is_zero());
        if lower {
            return Err(ChowError::NotTopDimensional);
        }
        Ok(self.coeffs[d][1].clone())
    }
}

/// Ambient type for the genus formulas of curves on surface scrolls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceMode {
    Smooth,
    Cone,
}

/// Arithmetic genus of a curve of degree `deg` in `P^N` on a surface scroll:
/// `2p_a − 2 = (2ℓ − 2)·deg − (N − 1)ℓ² + (N − 3)ℓ` on a smooth scroll, and
/// `(q − 1)(deg − 1) − q(q − 1)(N − 1)/2` with `q = ⌈deg/(N − 1)⌉` on a cone.
pub fn genus_on_surface(deg: i64, n: i64, ell: i64, mode: SurfaceMode) -> Result<BigInt, ChowError> {
    if deg < 1 || n < 3 {
        return Err(ChowError::InvalidInput(format!("need deg ≥ 1 and N ≥ 3, got deg = {deg}, N = {n}")));
    }
    let (deg, n, ell) = (BigInt::from(deg), BigInt::from(n), BigInt::from(ell));
    match mode {
        SurfaceMode::Smooth => {
            if ell < BigInt::one() {
                return Err(ChowError::InvalidInput("ℓ must be positive".into()));
            }
            // ℓ(ℓ(N − 1) − (N − 3)) is always even
            let twice: BigInt = (&ell * 2 - 2) * &deg - (&n - 1) * &ell * &ell + (&n - 3) * &ell;
            Ok(twice / 2 + 1)
        }
        SurfaceMode::Cone => {
            let q = Integer::div_ceil(&deg, &(&n - 1));
            Ok((&q - 1) * (&deg - 1) - &q * (&q - 1) * (&n - 1) / 2)
        }
    }
}

/// Cone genus formula.
pub fn genus_on_cone(deg: i64, n: i64) -> Result<BigInt, ChowError> {
    genus_on_surface(deg, n, 0, SurfaceMode::Cone)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub item: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct TheoremReport {
    pub findings: Vec<Finding>,
}

impl TheoremReport {
    fn push(&mut self, item: &str, verdict: Verdict, detail: impl Into<String>) {
        self.findings.push(Finding { item: item.to_string(), verdict, detail: detail.into() });
    }

    fn check(&mut self, item: &str, ok: bool, detail: impl Into<String>) {
        self.push(item, if ok { Verdict::Pass } else { Verdict::Fail }, detail);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| f.verdict == Verdict::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn verdict(&self, item: &str) -> Option<Verdict> {
        let mut relevant = self.findings.iter().filter(|f| f.item == item).map(|f| f.verdict).peekable();
        relevant.peek()?;
        let all: Vec<Verdict> = relevant.collect();
        Some(if all.contains(&Verdict::Fail) {
            Verdict::Fail
        } else if all.contains(&Verdict::Pass) {
            Verdict::Pass
        } else {
            Verdict::NotApplicable
        })
    }
}

/// A surface scroll containing the canonical model: smallest dimension `m`
/// and ruling number `ℓ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceStructure {
    pub m: u32,
    pub ell: u32,
}

/// Invariants of a curve whose canonical model lies on surface scrolls.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceRecord {
    pub g: u32,
    pub g_prime: u32,
    pub eta: u32,
    pub mu: u32,
    pub kunz: bool,
    pub almost_gorenstein: bool,
    pub non_gorenstein_points: u32,
    pub gonality: u32,
    pub gonality_canonical: u32,
    pub structures: Vec<SurfaceStructure>,
}

/// Checks the statements about curves whose canonical model lies on a
/// surface scroll against one record.
pub fn check_theorem21(r: &SurfaceRecord) -> TheoremReport {
    let mut rep = TheoremReport::default();
    if r.eta == 0 || r.g < 4 || r.structures.is_empty() {
        for item in ["i", "iv", "v", "vi", "viii", "ix", "surface-genus", "cone-bound"] {
            rep.push(item, Verdict::NotApplicable, "requires a non-Gorenstein curve of genus ≥ 4 on a surface scroll");
        }
        return rep;
    }
    let (g, gp, eta) = (i64::from(r.g), i64::from(r.g_prime), i64::from(r.eta));
    for s in &r.structures {
        let (m, ell) = (i64::from(s.m), i64::from(s.ell));
        let tag = format!("m = {m}, ℓ = {ell}");
        let bound = if m > 0 { 3 } else { 2 };
        rep.check("i", ell <= bound, format!("{tag}: ℓ ≤ {bound}"));
        if ell == 1 && m > 0 {
            rep.check("iv", gp == 0, format!("{tag}: g′ = {gp}"));
        }
        if ell == 2 {
            let ok = r.mu == 1 && (m > 0 || g - gp <= 3);
            rep.check("v", ok, format!("{tag}: μ = {}, g − g′ = {}", r.mu, g - gp));
        }
        if ell == 3 {
            rep.check("vi", r.almost_gorenstein == r.kunz, format!("{tag}: almost Gorenstein ⇔ Kunz"));
            let one_point_kunz = r.kunz && r.non_gorenstein_points == 1;
            let ok = 3 * m >= g - 3 && ((3 * m == g - 3) == one_point_kunz);
            rep.check("vi", ok, format!("{tag}: 3m = {} vs g − 3 = {}", 3 * m, g - 3));
        }
        if m > 0 {
            rep.check("ix", r.gonality_canonical <= s.ell, format!("{tag}: gon(C′) = {}", r.gonality_canonical));
            let twice = (ell - 1) * ((2 - g) * ell + 2 * (2 * g - eta - 3));
            rep.check("surface-genus", 2 * gp == twice, format!("{tag}: 2g′ = {}, formula gives {twice}", 2 * gp));
        } else {
            rep.check("cone-bound", (ell - 1) * (g - 2) <= g - eta, format!("{tag}: ℓ ≤ 1 + (g − η)/(g − 2)"));
        }
    }
    let bound = r.gonality_canonical + r.g - r.g_prime;
    rep.check("viii", r.gonality <= bound, format!("gon(C) = {} ≤ gon(C′) + g − g′ = {bound}", r.gonality));
    rep
}

/// Invariants of a curve whose canonical model is a local complete
/// intersection of `(u, v)`-type on a smooth threefold scroll.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThreefoldRecord {
    pub g: u32,
    pub g_prime: u32,
    pub eta: u32,
    pub mu: u32,
    pub ell: u32,
    pub m: Option<u32>,
}

/// `(u − 4)(2g − 2 − η) + η + 2μ + ℓ(v + g − 5)`.
pub fn theorem41_residual(r: &ThreefoldRecord, u: i64, v: i64) -> i64 {
    let (g, eta, mu, ell) = (i64::from(r.g), i64::from(r.eta), i64::from(r.mu), i64::from(r.ell));
    (u - 4) * (2 * g - 2 - eta) + eta + 2 * mu + ell * (v + g - 5)
}

/// The `v` forced by the genus relation, if integral.
pub fn theorem41_forced_v(r: &ThreefoldRecord, u: i64) -> Option<BigRational> {
    if r.ell == 0 {
        return None;
    }
    let at_zero = theorem41_residual(r, u, 0);
    Some(-rat(at_zero) / rat(i64::from(r.ell)))
}

/// Checks the statements about `(u, v)`-type canonical models on threefold
/// scrolls against one record.
pub fn check_theorem41(r: &ThreefoldRecord, u: i64, v: i64) -> TheoremReport {
    let mut rep = TheoremReport::default();
    let (g, gp, eta, mu, ell) =
        (i64::from(r.g), i64::from(r.g_prime), i64::from(r.eta), i64::from(r.mu), i64::from(r.ell));
    let residual = theorem41_residual(r, u, v);
    let forced = theorem41_forced_v(r, u).map(|x| x.to_string()).unwrap_or_else(|| "-".into());
    rep.check("residual", residual == 0, format!("residual {residual}; forced v = {forced}"));
    if residual != 0 || r.g < 6 || ell < 1 || r.eta == 0 {
        return rep;
    }
    let base = -(g - 5);
    let vr = rat(v);
    rep.check("i", (v == base) == (ell == 2 && gp == 1), format!("v = {v}, ℓ = {ell}, g′ = {gp}"));
    match ell {
        1 => rep.check("ii", (mu == 1) == (v == 2), format!("μ = {mu}, v = {v}")),
        2 => rep.check("iii", (mu == 1) == (v == 3 - eta), format!("μ = {mu}, v = {v}, η = {eta}")),
        3 => {
            let expected = rat(base) - rat(eta + 2 * mu) / rat(3);
            rep.check("iv", vr == expected, format!("v = {v}, expected {expected}"));
        }
        4 => {
            let first = rat(base) - rat(eta + 2 * mu) / rat(4);
            let second = rat(base) - rat(g - 1 + mu) / rat(2);
            rep.check("v", vr == first || vr == second, format!("v = {v}, expected {first} or {second}"));
        }
        _ => match r.m {
            Some(m) => {
                // m·ℓ(ℓ+1) ≥ ℓ(g−5) + (√(2ℓ) − 4)(2g−2−η) + η + 2μ
                let lhs = f64::from(m) * (ell * (ell + 1)) as f64;
                let rhs = (ell * (g - 5)) as f64
                    + ((2.0 * ell as f64).sqrt() - 4.0) * (2 * g - 2 - eta) as f64
                    + (eta + 2 * mu) as f64;
                rep.check("vi", lhs + 1e-9 >= rhs, format!("m·ℓ(ℓ+1) = {lhs} ≥ {rhs:.3}"))
            }
            None => rep.push("vi", Verdict::NotApplicable, "m unknown"),
        },
    }
    rep
}

/// Closed-form Euler characteristic helper usable without building an
/// [`Ambient`] by hand.
pub fn euler_characteristic(d: u32, e: u32, c: DivisorClass) -> Result<BigInt, ChowError> {
    Ambient::balanced(d, e)?.euler_characteristic(c)
}

/// `p_a` for `(u, v, w, z)` on the threefold scroll of degree `e`.
pub fn pa_from_bundle(e: u32, b: &RankTwoBundleClass) -> Result<BigInt, ChowError> {
    Ambient::balanced(3, e)?.pa_from_bundle(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn ring_relations() {
        let a = Ambient::balanced(3, 3).unwrap();
        let h = a.monomial(1, 1, 0);
        let f = a.monomial(1, 0, 1);
        assert_eq!(a.mul(&a.mul(&h, &h), &h).degree().unwrap(), big(3));
        assert_eq!(a.mul(&a.mul(&h, &h), &f).degree().unwrap(), big(1));
        assert_eq!(a.mul(&f, &f), a.zero());
        assert_eq!(a.mul(&h, &h).degree(), Err(ChowError::NotTopDimensional));

        let s = Ambient::balanced(2, 4).unwrap();
        let x = s.divisor(DivisorClass::new(2, 3));
        let (_, deg) = s.mul_degree(&x, &s.monomial(1, 1, 0)).unwrap();
        assert_eq!(deg, big(11));
    }

    #[test]
    fn balanced_dims() {
        assert_eq!(Ambient::balanced(3, 7).unwrap().dims(), &[2, 2, 3]);
        assert_eq!(Ambient::balanced(2, 4).unwrap().dims(), &[2, 2]);
        assert!(Ambient::balanced(3, 2).is_err());
        assert!(Ambient::new(&[0, 2]).is_err());
    }

    #[test]
    fn sections() {
        let s = Ambient::new(&[1, 2]).unwrap();
        assert_eq!(s.h0_class(DivisorClass::new(1, 0)).h0, big(5));
        assert_eq!(s.h0_class(DivisorClass::new(0, 0)).h0, big(1));
        let t = Ambient::new(&[1, 1, 1]).unwrap();
        let h = t.h0_class(DivisorClass::new(1, 1));
        assert_eq!(h.h0, big(9));
        assert!(h.higher_vanishing);
        assert_eq!(t.h0_class(DivisorClass::new(-1, 4)).h0, big(0));
        // only the m = 5 summand has sections
        let u = Ambient::new(&[1, 5]).unwrap();
        assert_eq!(u.h0_class(DivisorClass::new(1, -3)).h0, big(3));
    }

    #[test]
    fn canonical_classes() {
        assert_eq!(Ambient::balanced(2, 3).unwrap().canonical_class(), DivisorClass::new(-2, 1));
        assert_eq!(Ambient::balanced(3, 3).unwrap().canonical_class(), DivisorClass::new(-3, 1));
        assert_eq!(Ambient::balanced(2, 2).unwrap().canonical_class(), DivisorClass::new(-2, 0));
    }

    #[test]
    fn euler_characteristics() {
        let s = Ambient::balanced(2, 5).unwrap();
        assert_eq!(s.euler_characteristic(DivisorClass::new(0, 0)).unwrap(), big(1));
        assert_eq!(s.euler_characteristic(DivisorClass::new(1, 0)).unwrap(), big(7));
        let t = Ambient::balanced(3, 3).unwrap();
        assert_eq!(t.euler_characteristic(DivisorClass::new(1, 0)).unwrap(), big(6));
        let q = Ambient::balanced(4, 4).unwrap();
        assert_eq!(q.euler_characteristic(DivisorClass::new(1, 0)), Err(ChowError::UnsupportedDimension(4)));
    }

    #[test]
    fn bundles() {
        let t = Ambient::balanced(3, 3).unwrap();
        assert_eq!(t.bundle_chi_dual(&RankTwoBundleClass::new(0, 0, 0, 0)).unwrap(), big(2));
        // complete intersection H · (H + F)
        for e in 3..8 {
            let t = Ambient::balanced(3, e).unwrap();
            assert_eq!(t.pa_from_bundle(&RankTwoBundleClass::new(2, 1, 1, 1)).unwrap(), big(0));
            assert!(matches!(
                t.pa_from_bundle(&RankTwoBundleClass::new(2, 1, 1, 0)),
                Err(ChowError::NonIntegralGenus(_))
            ));
        }
        let s = Ambient::balanced(2, 3).unwrap();
        assert_eq!(s.bundle_chi_dual(&RankTwoBundleClass::new(0, 0, 0, 0)), Err(ChowError::UnsupportedDimension(2)));
    }

    #[test]
    fn surface_genus() {
        assert_eq!(genus_on_surface(3, 3, 1, SurfaceMode::Smooth).unwrap(), big(0));
        assert_eq!(genus_on_cone(4, 3).unwrap(), big(1));
        for g in 4..30 {
            assert_eq!(genus_on_surface(2 * g - 2, g - 1, 3, SurfaceMode::Smooth).unwrap(), big(g));
        }
        assert!(genus_on_surface(0, 3, 1, SurfaceMode::Smooth).is_err());
    }

    #[test]
    fn theorem21_examples() {
        // <5,7,8,9,11>: g = 5, η = 3, g′ = 1, smooth structure with ℓ = 2
        let r = SurfaceRecord {
            g: 5,
            g_prime: 1,
            eta: 3,
            mu: 1,
            kunz: false,
            almost_gorenstein: true,
            non_gorenstein_points: 1,
            gonality: 3,
            gonality_canonical: 2,
            structures: vec![SurfaceStructure { m: 1, ell: 2 }],
        };
        let rep = check_theorem21(&r);
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.verdict("surface-genus"), Some(Verdict::Pass));
        assert_eq!(rep.verdict("v"), Some(Verdict::Pass));

        let r = SurfaceRecord {
            g: 4,
            g_prime: 1,
            eta: 2,
            mu: 1,
            kunz: false,
            almost_gorenstein: true,
            non_gorenstein_points: 1,
            gonality: 3,
            gonality_canonical: 2,
            structures: vec![SurfaceStructure { m: 0, ell: 2 }],
        };
        assert_eq!(check_theorem21(&r).verdict("v"), Some(Verdict::Pass));

        let gorenstein = SurfaceRecord { eta: 0, mu: 0, ..r };
        let rep = check_theorem21(&gorenstein);
        assert!(rep.findings.iter().all(|f| f.verdict == Verdict::NotApplicable));
    }

    #[test]
    fn theorem41_examples() {
        // ℓ = 1, u = 2, g′ = 0: residual is v − μ − 1
        let r = ThreefoldRecord { g: 7, g_prime: 0, eta: 4, mu: 3, ell: 1, m: None };
        assert_eq!(theorem41_residual(&r, 2, 4), 0);
        assert_eq!(theorem41_residual(&r, 2, 5), 1);

        let r = ThreefoldRecord { g: 9, g_prime: 7, eta: 1, mu: 1, ell: 3, m: None };
        let rep = check_theorem41(&r, 4, -5);
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.verdict("iv"), Some(Verdict::Pass));

        let r = ThreefoldRecord { g: 10, g_prime: 10, eta: 0, mu: 0, ell: 4, m: Some(2) };
        assert_eq!(theorem41_residual(&r, 4, -5), 0);
        assert!(check_theorem41(&r, 4, -5).passed());
    }

    proptest! {
        #[test]
        fn closed_form_matches_riemann_roch(d in 2u32..4, e in 0u32..9, h in -5i64..6, f in -5i64..6) {
            prop_assume!(e >= d);
            let a = Ambient::balanced(d, e).unwrap();
            let c = DivisorClass::new(h, f);
            prop_assert_eq!(a.euler_characteristic(c).unwrap(), a.euler_characteristic_rr(c).unwrap());
        }

        #[test]
        fn h0_is_chi_when_higher_cohomology_vanishes(dims in prop::collection::vec(1u32..5, 2..4), h in 0i64..5, f in -6i64..6) {
            let a = Ambient::new(&dims).unwrap();
            let c = DivisorClass::new(h, f);
            let h0 = a.h0_class(c);
            if h0.higher_vanishing {
                prop_assert_eq!(h0.h0, a.euler_characteristic(c).unwrap());
            }
        }

        #[test]
        fn split_bundles(e in 3u32..9, a in 1i64..5, b in -5i64..6, c in 1i64..5, d in -5i64..6) {
            let t = Ambient::balanced(3, e).unwrap();
            let bundle = RankTwoBundleClass::split(a, b, c, d);
            let split_chi = t.euler_characteristic(DivisorClass::new(-a, -b)).unwrap()
                + t.euler_characteristic(DivisorClass::new(-c, -d)).unwrap();
            prop_assert_eq!(t.bundle_chi_dual(&bundle).unwrap(), split_chi);
            let pa = t.pa_from_bundle(&bundle).unwrap();
            prop_assert_eq!(pa, t.pa_split(a, b, c, d).unwrap());
        }
    }
}
