use std::fmt;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// An action profile: `coords[i]` is the index of the action chosen by player `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile(Vec<usize>);

/// A profile with one or more player coordinates projected away.
///
/// `coords` lists the remaining coordinates in increasing player order;
/// `removed` is sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedProfile {
    coords: Vec<usize>,
    removed: Vec<usize>,
}

/// Occupancy counts per action.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CommutativeImage(Vec<usize>);

impl Profile {
    pub fn new(coords: Vec<usize>) -> Self {
        Profile(coords)
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Profile{:?}", self.0)
    }
}

impl From<Vec<usize>> for Profile {
    fn from(v: Vec<usize>) -> Self {
        Profile(v)
    }
}

/// The right action `(a·σ)_i = a_{σ(i)}`.
pub fn act(a: &Profile, sigma: &Permutation) -> Result<Profile> {
    if a.len() != sigma.degree() {
        return Err(Error::SizeMismatch {
            expected: a.len(),
            found: sigma.degree(),
        });
    }
    Ok(Profile(
        (0..a.len()).map(|i| a.0[sigma.apply(i)]).collect(),
    ))
}

impl CommutativeImage {
    /// Counts over `num_actions` actions. Coordinates must be `< num_actions`.
    pub fn of(coords: &[usize], num_actions: usize) -> Self {
        let mut counts = vec![0; num_actions];
        for &x in coords {
            counts[x] += 1;
        }
        CommutativeImage(counts)
    }

    pub fn from_counts(counts: Vec<usize>) -> Self {
        CommutativeImage(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

pub fn commutative_image(a: &Profile, num_actions: usize) -> CommutativeImage {
    CommutativeImage::of(a.coords(), num_actions)
}

/// A permutation `σ` with `a = b·σ`, if one exists.
///
/// The witness is canonical: scanning `i` upward, `σ(i)` is the smallest
/// unused `k` with `b_k = a_i`. Returns `None` when the commutative images
/// differ or the lengths disagree.
pub fn witness_permutation(a: &Profile, b: &Profile) -> Option<Permutation> {
    if a.len() != b.len() {
        return None;
    }
    let mut used = vec![false; b.len()];
    let mut images = Vec::with_capacity(a.len());
    for &x in a.coords() {
        let k = (0..b.len()).find(|&k| !used[k] && b.0[k] == x)?;
        used[k] = true;
        images.push(k);
    }
    Some(Permutation::from_images(images).expect("scan assigns each index once"))
}

impl ReducedProfile {
    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    pub fn removed(&self) -> &[usize] {
        &self.removed
    }

    /// Length of the full profile this was projected from.
    pub fn full_len(&self) -> usize {
        self.coords.len() + self.removed.len()
    }

    pub fn commutative_image(&self, num_actions: usize) -> CommutativeImage {
        CommutativeImage::of(&self.coords, num_actions)
    }
}

/// Projects away the coordinates of the players in `remove`.
pub fn restrict(a: &Profile, remove: &[usize]) -> Result<ReducedProfile> {
    let n = a.len();
    let mut removed = remove.to_vec();
    removed.sort_unstable();
    for w in removed.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateIndex(w[0]));
        }
    }
    if let Some(&bad) = removed.iter().find(|&&x| x >= n) {
        return Err(Error::IndexOutOfRange { index: bad, bound: n });
    }
    let coords = (0..n)
        .filter(|k| removed.binary_search(k).is_err())
        .map(|k| a.0[k])
        .collect();
    Ok(ReducedProfile { coords, removed })
}

/// Reinserts `values` at the removed positions (given in `r.removed()` order).
pub fn extend(r: &ReducedProfile, values: &[usize]) -> Result<Profile> {
    if values.len() != r.removed.len() {
        return Err(Error::SizeMismatch {
            expected: r.removed.len(),
            found: values.len(),
        });
    }
    let n = r.full_len();
    let mut out = Vec::with_capacity(n);
    let mut rest = r.coords.iter();
    let mut next_removed = 0;
    for k in 0..n {
        if next_removed < r.removed.len() && r.removed[next_removed] == k {
            out.push(values[next_removed]);
            next_removed += 1;
        } else {
            out.push(*rest.next().expect("coordinate count matches"));
        }
    }
    Ok(Profile(out))
}
