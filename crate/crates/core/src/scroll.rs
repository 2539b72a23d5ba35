//! Rational normal scrolls containing a monomial curve.
//!
//! A monomial curve `(t^{b_0} : … : t^{b_k})` lies on a scroll
//! `S_{m_1…m_d}` exactly when its exponent set splits into `d` arithmetic
//! progressions sharing one common difference `r`: each progression of
//! length `m_i + 1` fills one block of the `2 × e` determinantal matrix.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

/// Type `S_{m_1…m_d}` of a rational normal scroll.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ScrollType {
    dims: Vec<u32>,
}

impl ScrollType {
    pub fn new(mut dims: Vec<u32>) -> Self {
        dims.sort_unstable();
        ScrollType { dims }
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    /// Degree `e = Σ m_i`.
    pub fn degree(&self) -> u32 {
        self.dims.iter().sum()
    }

    pub fn dimension(&self) -> u32 {
        self.dims.len() as u32
    }

    /// Dimension `N = e + d − 1` of the ambient projective space.
    pub fn ambient_dimension(&self) -> u32 {
        self.degree() + self.dimension() - 1
    }

    /// Smooth iff no `m_i` vanishes; otherwise a cone.
    pub fn is_smooth(&self) -> bool {
        self.dims.iter().all(|&m| m >= 1)
    }

    /// Smallest `m_i`.
    pub fn min_dim(&self) -> u32 {
        self.dims.first().copied().unwrap_or(0)
    }
}

impl fmt::Display for ScrollType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.dims.iter().map(u32::to_string).collect();
        write!(f, "S({})", dims.join(","))
    }
}

/// A partition of an exponent set into arithmetic progressions of common
/// difference `step`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScrollStructure {
    step: u32,
    blocks: Vec<Vec<u32>>,
    kappa: u32,
}

impl ScrollStructure {
    pub fn step(&self) -> u32 {
        self.step
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// gcd of all differences of the underlying exponent set.
    pub fn kappa(&self) -> u32 {
        self.kappa
    }

    /// Intersection number of the curve with a ruling of the scroll.
    pub fn ell(&self) -> u32 {
        structure_ell(self)
    }

    pub fn scroll_type(&self) -> ScrollType {
        ScrollType::new(self.blocks.iter().map(|b| b.len() as u32 - 1).collect())
    }
}

/// gcd of all pairwise differences.
pub fn kappa(set: &[u32]) -> u32 {
    let min = set.iter().copied().min().unwrap_or(0);
    set.iter().fold(0u32, |acc, &x| acc.gcd(&(x - min)))
}

/// Maximal arithmetic progressions of difference `step`, ordered by their
/// first element.
pub fn run_decomposition(set: &[u32], step: u32) -> Vec<Vec<u32>> {
    assert!(step >= 1, "step must be positive");
    let sorted: BTreeSet<u32> = set.iter().copied().collect();
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    for &x in &sorted {
        if x >= step && sorted.contains(&(x - step)) {
            continue;
        }
        let block: Vec<u32> =
            std::iter::successors(Some(x), |&y| Some(y + step)).take_while(|y| sorted.contains(y)).collect();
        blocks.push(block);
    }
    blocks
}

/// Steps that can carry a structure: positive multiples of `κ` up to the
/// diameter of the set.
fn candidate_steps(set: &[u32]) -> Vec<u32> {
    let min = set.iter().copied().min().unwrap_or(0);
    let max = set.iter().copied().max().unwrap_or(0);
    let k = kappa(set);
    if k == 0 {
        return vec![1];
    }
    (1..=(max - min) / k).map(|i| i * k).collect()
}

/// Least number of arithmetic progressions with a common difference that
/// cover the set.
pub fn min_scroll_dimension(set: &[u32]) -> u32 {
    candidate_steps(set).into_iter().map(|r| run_decomposition(set, r).len() as u32).min().unwrap_or(1)
}

/// Every way to place the set on a `d`-dimensional scroll, one structure per
/// step and scroll type. Runs may be cut into consecutive pieces to reach
/// `d` blocks.
pub fn scroll_structures(set: &[u32], d: u32) -> Vec<ScrollStructure> {
    let mut distinct: BTreeSet<u32> = BTreeSet::new();
    distinct.extend(set.iter().copied());
    if d == 0 || d as usize > distinct.len() {
        return Vec::new();
    }
    let k = kappa(set);
    let mut out = Vec::new();
    for step in candidate_steps(set) {
        let runs = run_decomposition(set, step);
        if runs.len() > d as usize {
            continue;
        }
        let mut seen: BTreeSet<ScrollType> = BTreeSet::new();
        let mut pieces = Vec::new();
        split_runs(&runs, d as usize - runs.len(), &mut pieces, &mut |blocks| {
            let structure = ScrollStructure { step, blocks: blocks.to_vec(), kappa: k.max(1) };
            if seen.insert(structure.scroll_type()) {
                out.push(structure);
            }
        });
    }
    out
}

/// Enumerates every cut of `runs` into consecutive pieces using exactly
/// `extra` additional cuts.
fn split_runs(runs: &[Vec<u32>], extra: usize, acc: &mut Vec<Vec<u32>>, emit: &mut impl FnMut(&[Vec<u32>])) {
    let Some((run, rest)) = runs.split_first() else {
        if extra == 0 {
            let mut blocks = acc.clone();
            blocks.sort();
            emit(&blocks);
        }
        return;
    };
    let max_cuts = extra.min(run.len() - 1);
    for cuts in 0..=max_cuts {
        for_each_cut(run, cuts, 0, acc, &mut |acc| split_runs(rest, extra - cuts, acc, emit));
    }
}

/// Cuts `run[start..]` into `cuts + 1` consecutive nonempty pieces.
fn for_each_cut(
    run: &[u32],
    cuts: usize,
    start: usize,
    acc: &mut Vec<Vec<u32>>,
    k: &mut impl FnMut(&mut Vec<Vec<u32>>),
) {
    if cuts == 0 {
        acc.push(run[start..].to_vec());
        k(acc);
        acc.pop();
        return;
    }
    // leave room for `cuts` more nonempty pieces
    for end in (start + 1)..=(run.len() - cuts) {
        acc.push(run[start..end].to_vec());
        for_each_cut(run, cuts - 1, end, acc, k);
        acc.pop();
    }
}

/// `ℓ = step / κ`.
pub fn structure_ell(s: &ScrollStructure) -> u32 {
    s.step / s.kappa
}

/// True iff the blocks partition `exponents` and every 2×2 minor of the
/// associated monomial matrix vanishes identically.
///
/// Each block `{x_0 < x_1 < … < x_m}` contributes the columns
/// `(t^{x_i}, t^{x_{i+1}})`; a minor vanishes iff its exponent sums agree.
pub fn minor_check(exponents: &[u32], s: &ScrollStructure) -> bool {
    let mut covered: Vec<u32> = s.blocks.iter().flatten().copied().collect();
    covered.sort_unstable();
    let mut expected = exponents.to_vec();
    expected.sort_unstable();
    expected.dedup();
    if covered != expected {
        return false;
    }
    let columns: Vec<(i64, i64)> = s
        .blocks
        .iter()
        .flat_map(|b| {
            let mut b = b.clone();
            b.sort_unstable();
            b.windows(2).map(|w| (i64::from(w[0]), i64::from(w[1]))).collect::<Vec<_>>()
        })
        .collect();
    columns.iter().enumerate().all(|(i, &(p11, p21))| columns[i + 1..].iter().all(|&(p12, p22)| p11 + p22 == p12 + p21))
}
