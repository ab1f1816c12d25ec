//! Permutations of player indices.
//!
//! A [`Permutation`] stores the images of `0..n`. Composition follows the
//! function convention `(σ·τ)(i) = σ(τ(i))`, so `τ` is applied first. With
//! this convention the profile action `(a·σ)_i = a_{σ(i)}` is a right action:
//! `(a·σ)·τ = a·(σ·τ)`.
//!
//! Textual forms use 1-based cycle notation, e.g. `(1 2)(3 4)`; the identity
//! prints as `()`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection on `{0, .., n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

/// Disjoint-cycle form with fixed points omitted.
///
/// Each cycle starts at its smallest element and cycles are sorted by that
/// element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleForm {
    degree: usize,
    cycles: Vec<Vec<usize>>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image vector, `images[i] = σ(i)`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition exchanging `i` and `j`; the identity when `i == j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        for x in [i, j] {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, bound: n });
            }
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Ok(Permutation { images })
    }

    /// Builds a permutation from 0-based cycles. Cycles must be disjoint.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (pos, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, bound: n });
                }
                if used[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} appears in more than one cycle",
                        x + 1
                    )));
                }
                used[x] = true;
                images[x] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `(1 2)(3 4)` or `()`.
    ///
    /// Commas are accepted as separators inside a cycle.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self> {
        let bad = || Error::InvalidPermutation(format!("cannot parse cycle notation {text:?}"));
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let inner = &body[..close];
            let mut cycle = Vec::new();
            for tok in inner
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
            {
                let label: usize = tok.parse().map_err(|_| bad())?;
                if label == 0 {
                    return Err(bad());
                }
                cycle.push(label - 1);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        Permutation::from_cycles(n, &cycles)
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `σ(i)`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self · other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::SizeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    /// Left-to-right product `p_0 · p_1 · … · p_k` of a non-empty sequence.
    pub fn product<'a, I>(perms: I) -> Result<Permutation>
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut it = perms.into_iter();
        let first = it
            .next()
            .ok_or_else(|| Error::InvalidPermutation("empty product".into()))?;
        it.try_fold(first.clone(), |acc, p| acc.compose(p))
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn cycle_decomposition(&self) -> CycleForm {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        CycleForm { degree: n, cycles }
    }

    /// Order of the permutation in its symmetric group.
    pub fn order(&self) -> usize {
        self.cycle_decomposition()
            .cycles
            .iter()
            .fold(1, |acc, c| num_integer::lcm(acc, c.len()))
    }
}

impl CycleForm {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// 0-based cycles in canonical order.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_cycles(self.degree, &self.cycles)
            .expect("canonical cycle form is always valid")
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in &self.cycles {
            f.write_str("(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.cycle_decomposition().fmt(f)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{{{}; n={}}}", self, self.degree())
    }
}

/// Parses cycle notation; the degree is the largest label mentioned.
///
/// Prefer [`Permutation::parse_cycles`] when the degree is known, since
/// trailing fixed points cannot be inferred from the text.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n = s
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0);
        Permutation::parse_cycles(s, n)
    }
}

/// Permutations of degree `n` satisfying a set of pins `σ(k) = v`, in
/// lexicographic order of their image vectors.
///
/// Pinned positions are fixed, so lexicographic order on the whole image
/// vector coincides with lexicographic order on the free positions; the
/// iterator walks the free values with the classic next-permutation step.
#[derive(Clone, Debug)]
pub struct ConstrainedPermutations {
    template: Vec<usize>,
    free_positions: Vec<usize>,
    free_values: Vec<usize>,
    done: bool,
}

/// Enumerates every `σ ∈ S_n` with `σ(k) = v` for each pin `(k, v)`.
///
/// Yields `(n - |pins|)!` permutations. Repeating an identical pin is allowed;
/// conflicting or non-injective pins are rejected.
pub fn enumerate_constrained(n: usize, pins: &[(usize, usize)]) -> Result<ConstrainedPermutations> {
    let mut template = vec![usize::MAX; n];
    let mut value_used = vec![false; n];
    for &(k, v) in pins {
        if k >= n {
            return Err(Error::IndexOutOfRange { index: k, bound: n });
        }
        if v >= n {
            return Err(Error::IndexOutOfRange { index: v, bound: n });
        }
        if template[k] == v {
            continue;
        }
        if template[k] != usize::MAX {
            return Err(Error::InvalidConstraint(format!(
                "player {} pinned to both {} and {}",
                k + 1,
                template[k] + 1,
                v + 1
            )));
        }
        if value_used[v] {
            return Err(Error::InvalidConstraint(format!(
                "two players pinned to the same image {}",
                v + 1
            )));
        }
        template[k] = v;
        value_used[v] = true;
    }
    let free_positions: Vec<usize> = (0..n).filter(|&k| template[k] == usize::MAX).collect();
    let free_values: Vec<usize> = (0..n).filter(|&v| !value_used[v]).collect();
    Ok(ConstrainedPermutations {
        template,
        free_positions,
        free_values,
        done: false,
    })
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> ConstrainedPermutations {
    enumerate_constrained(n, &[]).expect("no pins cannot conflict")
}

impl Iterator for ConstrainedPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let mut images = self.template.clone();
        for (&pos, &val) in self.free_positions.iter().zip(&self.free_values) {
            images[pos] = val;
        }
        self.done = !next_permutation(&mut self.free_values);
        Some(Permutation { images })
    }
}

/// Advances `v` to its lexicographic successor; false when `v` was the last.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(pivot) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let succ = (pivot + 1..v.len()).rev().find(|&j| v[j] > v[pivot]).unwrap();
    v.swap(pivot, succ);
    v[pivot + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    #[test]
    fn product_of_two_transpositions_is_three_cycle() {
        assert_eq!(p("(1 3)", 3).compose(&p("(1 2)", 3)).unwrap(), p("(1 2 3)", 3));
    }

    #[test]
    fn long_factorization_collapses_to_transposition() {
        // (i j)(j k)(i l)(j k)(i j)(k l)(i j)(j k)(i l) with i,j,k,l = 1,2,3,4
        let factors: Vec<Permutation> = [
            "(1 2)", "(2 3)", "(1 4)", "(2 3)", "(1 2)", "(3 4)", "(1 2)", "(2 3)", "(1 4)",
        ]
        .iter()
        .map(|t| p(t, 4))
        .collect();
        assert_eq!(Permutation::product(&factors).unwrap(), p("(1 3)", 4));
    }

    #[test]
    fn compose_rejects_mismatched_degrees() {
        let err = Permutation::identity(3).compose(&Permutation::identity(4));
        assert!(matches!(err, Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn inverses() {
        assert_eq!(p("(1 2 3)", 3).inverse(), p("(1 3 2)", 3));
        assert_eq!(Permutation::identity(5).inverse(), Permutation::identity(5));
        assert_eq!(p("(1 2)", 4).inverse(), p("(1 2)", 4));
    }

    #[test]
    fn cycle_form_is_canonical() {
        assert!(Permutation::identity(4).cycle_decomposition().cycles().is_empty());
        let sigma = Permutation::from_images(vec![1, 0, 3, 2]).unwrap();
        assert_eq!(sigma.cycle_decomposition().cycles(), &[vec![0, 1], vec![2, 3]]);
        assert_eq!(sigma.to_string(), "(1 2)(3 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(p("(3 1 2)", 3).to_string(), "(1 2 3)");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 4)", 3).is_err());
        assert!(Permutation::parse_cycles("(0 1)", 3).is_err());
        assert!(Permutation::parse_cycles("1 2", 3).is_err());
    }

    #[test]
    fn from_str_infers_degree() {
        let sigma: Permutation = "(1 3)(2 4)".parse().unwrap();
        assert_eq!(sigma.degree(), 4);
        assert_eq!(sigma.images(), &[2, 3, 0, 1]);
    }

    #[test]
    fn constrained_enumeration_examples() {
        let three: Vec<_> = enumerate_constrained(3, &[(0, 1), (1, 0)]).unwrap().collect();
        assert_eq!(three, vec![p("(1 2)", 3)]);

        let four: Vec<_> = enumerate_constrained(4, &[(0, 1), (1, 0)]).unwrap().collect();
        assert_eq!(four, vec![p("(1 2)", 4), p("(1 2)(3 4)", 4)]);

        let all: Vec<_> = enumerate_constrained(5, &[]).unwrap().collect();
        assert_eq!(all.len(), 120);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, all, "distinct and already lexicographic");
    }

    #[test]
    fn constrained_enumeration_rejects_bad_pins() {
        assert!(matches!(
            enumerate_constrained(3, &[(0, 1), (2, 1)]),
            Err(Error::InvalidConstraint(_))
        ));
        assert!(matches!(
            enumerate_constrained(3, &[(0, 1), (0, 2)]),
            Err(Error::InvalidConstraint(_))
        ));
        assert!(enumerate_constrained(3, &[(0, 3)]).is_err());
        assert_eq!(enumerate_constrained(3, &[(0, 1), (0, 1)]).unwrap().count(), 2);
    }

    #[test]
    fn degenerate_degrees() {
        assert_eq!(all_permutations(0).count(), 1);
        assert_eq!(all_permutations(1).count(), 1);
        assert_eq!(enumerate_constrained(2, &[(0, 0), (1, 1)]).unwrap().count(), 1);
    }

    #[test]
    fn group_laws_exhaustive_s4() {
        let s4: Vec<_> = all_permutations(4).collect();
        let e = Permutation::identity(4);
        for a in &s4 {
            assert_eq!(&a.compose(&e).unwrap(), a);
            assert_eq!(&e.compose(a).unwrap(), a);
            assert!(a.compose(&a.inverse()).unwrap().is_identity());
            for b in &s4 {
                let ab = a.compose(b).unwrap();
                for c in &s4 {
                    assert_eq!(
                        ab.compose(c).unwrap(),
                        a.compose(&b.compose(c).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn order_matches_power_to_identity() {
        for sigma in all_permutations(5) {
            let k = sigma.order();
            let mut acc = sigma.clone();
            for _ in 1..k {
                acc = acc.compose(&sigma).unwrap();
            }
            assert!(acc.is_identity());
        }
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..9)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    fn arb_triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
        (1usize..9).prop_flat_map(|n| {
            let one = move || {
                Just((0..n).collect::<Vec<_>>())
                    .prop_shuffle()
                    .prop_map(|v| Permutation::from_images(v).unwrap())
            };
            (one(), one(), one())
        })
    }

    proptest! {
        #[test]
        fn cycle_round_trip(sigma in arb_perm()) {
            let form = sigma.cycle_decomposition();
            prop_assert_eq!(&form.to_permutation(), &sigma);
            prop_assert_eq!(form.to_permutation().cycle_decomposition(), form.clone());
            let reparsed = Permutation::parse_cycles(&form.to_string(), sigma.degree()).unwrap();
            prop_assert_eq!(&reparsed, &sigma);
            // left-to-right product of the cycles reproduces sigma
            let n = sigma.degree();
            let factors: Vec<Permutation> = form
                .cycles()
                .iter()
                .map(|c| Permutation::from_cycles(n, std::slice::from_ref(c)).unwrap())
                .collect();
            let prod = factors
                .iter()
                .try_fold(Permutation::identity(n), |acc, f| acc.compose(f))
                .unwrap();
            prop_assert_eq!(prod, sigma);
        }

        #[test]
        fn associativity_and_inverse((a, b, c) in arb_triple()) {
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
            let ab_inv = a.compose(&b).unwrap().inverse();
            prop_assert_eq!(ab_inv, b.inverse().compose(&a.inverse()).unwrap());
        }

        #[test]
        fn pinned_enumeration_counts(n in 1usize..7, seed in any::<u64>()) {
            // derive an injective pin set from the seed
            let target: Vec<usize> = {
                let mut v: Vec<usize> = (0..n).collect();
                let mut s = seed;
                for i in (1..n).rev() {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    v.swap(i, (s >> 33) as usize % (i + 1));
                }
                v
            };
            let k = (seed % (n as u64 + 1)) as usize;
            let pins: Vec<(usize, usize)> = (0..k).map(|x| (x, target[x])).collect();
            let got: Vec<Permutation> = enumerate_constrained(n, &pins).unwrap().collect();
            let expected = (1..=(n - k)).product::<usize>();
            prop_assert_eq!(got.len(), expected);
            for w in got.windows(2) {
                prop_assert!(w[0] < w[1]);
            }
            for sigma in &got {
                for &(a, b) in &pins {
                    prop_assert_eq!(sigma.apply(a), b);
                }
            }
        }
    }
}
