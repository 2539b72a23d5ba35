//! Brute-force oracles shared by the integration tests. Everything here is
//! written from the definitions, without touching the library's algorithms.

#![allow(dead_code)]

/// All gap sets of numerical semigroups of genus `g`, by walking every
/// `g`-subset of `[1, 2g − 1]` and keeping the ones whose complement is
/// additively closed.
pub fn gap_sets(g: u32) -> Vec<Vec<u32>> {
    if g == 0 {
        return vec![Vec::new()];
    }
    let top = 2 * g - 1;
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    subsets(1, top, g as usize, &mut chosen, &mut out);
    out.retain(|gaps| closed(gaps, top));
    out
}

fn subsets(from: u32, top: u32, k: usize, chosen: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if chosen.len() == k {
        out.push(chosen.clone());
        return;
    }
    for x in from..=top {
        if top - x + 1 < (k - chosen.len()) as u32 {
            break;
        }
        chosen.push(x);
        subsets(x + 1, top, k, chosen, out);
        chosen.pop();
    }
}

fn closed(gaps: &[u32], top: u32) -> bool {
    let member = |x: u32| x > top || !gaps.contains(&x);
    (1..=top).filter(|&a| member(a)).all(|a| (a..=top).filter(|&b| member(b)).all(|b| member(a + b)))
}

/// Membership in the semigroup with the given gaps.
pub fn in_semigroup(gaps: &[u32], x: i64) -> bool {
    x >= 0 && !gaps.contains(&(x as u32))
}

/// `{a ∈ [0, γ] : γ − a ∉ S}` straight from the definition.
pub fn kappa_star(gaps: &[u32]) -> Vec<u32> {
    let Some(&gamma) = gaps.iter().max() else {
        return Vec::new();
    };
    (0..=gamma).filter(|&a| !in_semigroup(gaps, i64::from(gamma - a))).collect()
}

/// Semigroup generated by `gens`, as a membership table on `[0, bound)`.
pub fn generated(gens: &[u32], bound: usize) -> Vec<bool> {
    let mut t = vec![false; bound];
    t[0] = true;
    for x in 1..bound {
        t[x] = gens.iter().any(|&a| (a as usize) <= x && t[x - a as usize]);
    }
    t
}

/// Number of gaps of `⟨gens⟩`, assuming its conductor is below `bound`.
pub fn gap_count(gens: &[u32], bound: usize) -> u32 {
    generated(gens, bound).iter().filter(|&&b| !b).count() as u32
}

/// Degree of `O⟨1, tⁿ⟩` on the one-point curve with semigroup `gaps`:
/// `#{x ∉ S : x − n ∈ S}` at `0` plus the pole order `max(n, 0)` at `∞`.
pub fn pencil_degree_one_point(gaps: &[u32], n: i64) -> i64 {
    let conductor = gaps.iter().max().map_or(0, |&x| i64::from(x) + 1);
    let local = (n..conductor).filter(|&x| !in_semigroup(gaps, x) && in_semigroup(gaps, x - n)).count();
    local as i64 + n.max(0)
}
