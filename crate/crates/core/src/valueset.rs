//! Cofinite sets of integers that are bounded below.
//!
//! Every value set handled by this crate (semigroups, the canonical module
//! `K`, its Minkowski powers, stalks of monomial sheaves) has the shape
//! "finitely many integers, then everything from some point on". A
//! [`ValueSet`] stores exactly that: a sorted finite part and a tail start
//! `b` with `[b, ∞)` contained in the set. The representation is canonical
//! (the tail start is minimal), so structural equality is set equality.

use std::fmt;

/// A cofinite set of integers bounded below.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ValueSet {
    finite: Vec<i64>,
    tail: i64,
}

impl ValueSet {
    /// Builds the set `finite ∪ [tail, ∞)` and normalizes it.
    pub fn new<I: IntoIterator<Item = i64>>(finite: I, tail: i64) -> Self {
        let mut finite: Vec<i64> = finite.into_iter().filter(|&x| x < tail).collect();
        finite.sort_unstable();
        finite.dedup();
        let mut tail = tail;
        while finite.last() == Some(&(tail - 1)) {
            finite.pop();
            tail -= 1;
        }
        ValueSet { finite, tail }
    }

    /// All integers `>= start`.
    pub fn from_start(start: i64) -> Self {
        ValueSet { finite: Vec::new(), tail: start }
    }

    /// Builds a set from a membership predicate.
    ///
    /// `lower` must be a lower bound of the set and `[upper, ∞)` must be
    /// contained in it; only `[lower, upper)` is scanned.
    pub fn from_predicate(lower: i64, upper: i64, mut member: impl FnMut(i64) -> bool) -> Self {
        let finite = (lower..upper).filter(|&x| member(x));
        ValueSet::new(finite, upper.max(lower))
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.tail || self.finite.binary_search(&x).is_ok()
    }

    /// Least element.
    pub fn min(&self) -> i64 {
        self.finite.first().copied().unwrap_or(self.tail)
    }

    /// Least `b` with `[b, ∞)` contained in the set.
    pub fn tail_start(&self) -> i64 {
        self.tail
    }

    /// Elements strictly below the tail start, in increasing order.
    pub fn finite_part(&self) -> &[i64] {
        &self.finite
    }

    /// Elements of the set that are `< bound`, in increasing order.
    pub fn elements_below(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        let from_finite = self.finite.iter().copied().take_while(move |&x| x < bound);
        let from_tail = self.tail..bound.max(self.tail);
        from_finite.chain(from_tail)
    }

    /// The translate `self + k`.
    pub fn shift(&self, k: i64) -> Self {
        ValueSet { finite: self.finite.iter().map(|x| x + k).collect(), tail: self.tail + k }
    }

    pub fn union(&self, other: &ValueSet) -> Self {
        let upper = self.tail.min(other.tail);
        let finite = self.elements_below(upper).chain(other.elements_below(upper));
        ValueSet::new(finite, upper)
    }

    /// Minkowski sum `{a + b : a ∈ self, b ∈ other}`.
    pub fn minkowski_sum(&self, other: &ValueSet) -> Self {
        let lower = self.min() + other.min();
        let upper = (self.min() + other.tail).min(self.tail + other.min());
        let left: Vec<i64> = self.elements_below(upper - other.min()).collect();
        ValueSet::from_predicate(lower, upper, |x| {
            left.iter().take_while(|&&a| a + other.min() <= x).any(|&a| other.contains(x - a))
        })
    }

    /// `#(self ∖ other)`. Finite because `other` is cofinite.
    pub fn count_not_in(&self, other: &ValueSet) -> usize {
        let upper = self.tail.max(other.tail);
        self.elements_below(upper).filter(|&x| !other.contains(x)).count()
    }

    pub fn is_subset(&self, other: &ValueSet) -> bool {
        self.count_not_in(other) == 0
    }

    /// `#(self ∖ other) − #(other ∖ self)`: the colength of `other` in `self`
    /// when one contains the other, and the signed degree in general.
    pub fn relative_size(&self, other: &ValueSet) -> i64 {
        self.count_not_in(other) as i64 - other.count_not_in(self) as i64
    }
}

impl fmt::Debug for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for x in &self.finite {
            write!(f, "{x}, ")?;
        }
        write!(f, "[{}, ∞)}}", self.tail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalizes_tail() {
        let v = ValueSet::new([0, 3, 4, 5, 6], 7);
        assert_eq!(v.tail_start(), 3);
        assert_eq!(v.finite_part(), &[0]);
    }

    #[test]
    fn minkowski_square_of_canonical_module() {
        // K for <4,5,7>
        let k = ValueSet::new([0, 3, 4, 5], 7);
        let k2 = k.minkowski_sum(&k);
        assert_eq!(k2, ValueSet::new([0], 3));
    }

    #[test]
    fn union_and_difference() {
        let s = ValueSet::new([0, 4, 5], 7);
        let v = s.union(&s.shift(1));
        assert_eq!(v, ValueSet::new([0, 1], 4));
        assert_eq!(v.count_not_in(&s), 2);
        assert_eq!(v.relative_size(&s), 2);
        assert_eq!(s.relative_size(&v), -2);
    }

    fn arb_set() -> impl Strategy<Value = ValueSet> {
        (prop::collection::vec(-6i64..10, 0..8), -4i64..12).prop_map(|(f, t)| ValueSet::new(f, t))
    }

    proptest! {
        #[test]
        fn sum_agrees_with_pairwise(a in arb_set(), b in arb_set()) {
            let sum = a.minkowski_sum(&b);
            let bound = a.tail_start().max(b.tail_start()) + 30;
            for x in (a.min() + b.min() - 2)..bound {
                let brute = a.elements_below(bound).any(|p| b.contains(x - p));
                prop_assert_eq!(sum.contains(x), brute, "x = {}", x);
            }
        }

        #[test]
        fn union_is_pointwise(a in arb_set(), b in arb_set()) {
            let u = a.union(&b);
            for x in -10..20 {
                prop_assert_eq!(u.contains(x), a.contains(x) || b.contains(x));
            }
        }
    }
}
