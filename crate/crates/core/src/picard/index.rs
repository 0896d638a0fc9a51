//! Spaces, label sets and canonical boundary indices.
//!
//! A boundary divisor is named by a pair `(i, S)`: a genus-`i` component
//! carrying the marked labels in `S`, glued to a genus-`(g - i)` component
//! carrying the complement. The pairs `(i, S)` and `(g - i, S^c)` name the same
//! divisor. The canonical representative has `2i < g`; when `2i == g` it is the
//! one whose subset contains label 1 (or `S = {}` on unmarked spaces).

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported number of marked labels (subsets are bitmasks).
pub const MAX_LABELS: u32 = 64;

/// The moduli space of stable genus-`g` curves with `n` labelled points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SpaceDoc", into = "SpaceDoc")]
pub struct Space {
    g: u32,
    n: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceDoc {
    g: u32,
    n: u32,
}

impl TryFrom<SpaceDoc> for Space {
    type Error = Error;
    fn try_from(doc: SpaceDoc) -> Result<Self> {
        Space::new(doc.g, doc.n)
    }
}

impl From<Space> for SpaceDoc {
    fn from(s: Space) -> Self {
        SpaceDoc { g: s.g, n: s.n }
    }
}

impl Space {
    /// Requires `3g - 3 + n > 0` and at most [`MAX_LABELS`] labels.
    pub fn new(g: u32, n: u32) -> Result<Self> {
        if 3 * g as i64 - 3 + n as i64 <= 0 {
            return Err(Error::UnstableSpace { g, n });
        }
        if n > MAX_LABELS {
            return Err(Error::TooManyLabels { n, max: MAX_LABELS });
        }
        Ok(Space { g, n })
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn labels(&self) -> impl Iterator<Item = u32> {
        1..=self.n
    }

    pub fn all_labels(&self) -> LabelSet {
        LabelSet::full(self.n)
    }

    pub fn check_label(&self, label: u32) -> Result<()> {
        if label == 0 || label > self.n {
            return Err(Error::LabelOutOfRange { label, n: self.n });
        }
        Ok(())
    }

    pub fn check_same(&self, other: &Space) -> Result<()> {
        if self != other {
            return Err(Error::SpaceMismatch(self.g, self.n, other.g, other.n));
        }
        Ok(())
    }

    /// Whether `(i, s)` describes a stable splitting: both sides, with the
    /// node counted as a point, satisfy `2h - 2 + points > 0`.
    pub fn is_stable_split(&self, i: u32, s: u32) -> bool {
        i <= self.g && s <= self.n && 2 * i + s >= 2 && 2 * (self.g - i) + (self.n - s) >= 2
    }

    /// All canonical `(i, |S|)` size classes present on this space.
    pub fn size_classes(&self) -> Vec<SizeClass> {
        let mut out = Vec::new();
        for i in 0..=self.g / 2 {
            for s in 0..=self.n {
                let class = SizeClass { i, s };
                if class.count(self) > 0 {
                    out.push(class);
                }
            }
        }
        out
    }

    /// Every canonical boundary index. Exponential in `n`; meant for small
    /// spaces and exhaustive tests.
    pub fn boundary_indices(&self) -> Vec<BoundaryIndex> {
        let mut out = Vec::new();
        for class in self.size_classes() {
            out.extend(class.members(self));
        }
        out.sort();
        out
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.g, self.n)
    }
}

/// A subset of the marked labels `1..=64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LabelSet(u64);

impl LabelSet {
    pub fn empty() -> Self {
        LabelSet(0)
    }

    pub fn full(n: u32) -> Self {
        if n >= 64 {
            LabelSet(u64::MAX)
        } else {
            LabelSet((1u64 << n) - 1)
        }
    }

    /// Labels must lie in `1..=64`.
    pub fn from_labels(labels: &[u32]) -> Result<Self> {
        let mut set = LabelSet::empty();
        for &l in labels {
            if l == 0 || l > MAX_LABELS {
                return Err(Error::LabelOutOfRange { label: l, n: MAX_LABELS });
            }
            set = set.with(l);
        }
        Ok(set)
    }

    pub fn bits(&self) -> u64 {
        self.0
    }

    pub fn contains(&self, label: u32) -> bool {
        (1..=64).contains(&label) && self.0 & (1u64 << (label - 1)) != 0
    }

    pub fn with(&self, label: u32) -> Self {
        LabelSet(self.0 | (1u64 << (label - 1)))
    }

    pub fn without(&self, label: u32) -> Self {
        LabelSet(self.0 & !(1u64 << (label - 1)))
    }

    pub fn len(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn complement(&self, n: u32) -> Self {
        LabelSet(!self.0 & LabelSet::full(n).0)
    }

    pub fn is_subset_of(&self, other: &LabelSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn max_label(&self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        let bits = self.0;
        (1..=64u32).filter(move |&l| bits & (1u64 << (l - 1)) != 0)
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }
}

impl Ord for LabelSet {
    /// Smaller sets first, then lexicographic on the sorted label lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.to_vec().cmp(&other.to_vec()))
    }
}

impl PartialOrd for LabelSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.iter().map(|l| l.to_string()).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A boundary divisor `δ_{i:S}` in canonical form. Only obtainable through
/// [`canonical_index`], so every value is stable and canonical for the space
/// it was built against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryIndex {
    i: u32,
    set: LabelSet,
}

impl BoundaryIndex {
    pub fn genus(&self) -> u32 {
        self.i
    }

    pub fn set(&self) -> LabelSet {
        self.set
    }

    pub fn size_class(&self) -> SizeClass {
        SizeClass {
            i: self.i,
            s: self.set.len(),
        }
    }
}

impl fmt::Display for BoundaryIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "δ_{{{}:{}}}", self.i, self.set)
    }
}

/// Maps `(i, S)` to the canonical representative of `{(i, S), (g - i, S^c)}`.
pub fn canonical_index(space: &Space, i: u32, set: LabelSet) -> Result<BoundaryIndex> {
    let (g, n) = (space.g(), space.n());
    if let Some(max) = set.max_label() {
        if max > n {
            return Err(Error::LabelOutOfRange { label: max, n });
        }
    }
    if i > g || !space.is_stable_split(i, set.len()) {
        return Err(Error::UnstableIndex {
            g,
            n,
            i,
            subset: set.to_string(),
        });
    }
    let mirrored = BoundaryIndex {
        i: g - i,
        set: set.complement(n),
    };
    let direct = BoundaryIndex { i, set };
    let pick = match (2 * i).cmp(&g) {
        Ordering::Less => direct,
        Ordering::Greater => mirrored,
        Ordering::Equal if n == 0 => direct,
        Ordering::Equal => {
            if set.contains(1) {
                direct
            } else {
                mirrored
            }
        }
    };
    Ok(pick)
}

/// Checks that `(i, S)` is already canonical, as required for stored data.
pub fn require_canonical(space: &Space, i: u32, set: LabelSet) -> Result<BoundaryIndex> {
    let idx = canonical_index(space, i, set)?;
    if idx.i != i || idx.set != set {
        return Err(Error::NonCanonicalIndex {
            g: space.g(),
            n: space.n(),
            i,
            subset: set.to_string(),
        });
    }
    Ok(idx)
}

/// The family of canonical boundary indices sharing a genus `i` and subset
/// size `s`. Symmetric classes store one coefficient per size class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SizeClass {
    pub i: u32,
    pub s: u32,
}

impl SizeClass {
    pub fn new(i: u32, s: u32) -> Self {
        SizeClass { i, s }
    }

    /// Number of canonical indices in this class on `space` (zero if none).
    pub fn count(&self, space: &Space) -> u128 {
        let (g, n) = (space.g(), space.n());
        if 2 * self.i > g || !space.is_stable_split(self.i, self.s) {
            return 0;
        }
        if 2 * self.i < g {
            binomial(n, self.s)
        } else if n == 0 {
            u128::from(self.s == 0)
        } else if self.s == 0 {
            0
        } else {
            binomial(n - 1, self.s - 1)
        }
    }

    pub fn contains(&self, idx: &BoundaryIndex) -> bool {
        idx.size_class() == *self
    }

    /// Enumerates the members. Exponential in `n`.
    pub fn members(&self, space: &Space) -> Vec<BoundaryIndex> {
        if self.count(space) == 0 {
            return Vec::new();
        }
        subsets_of_size(space.n(), self.s)
            .into_iter()
            .filter_map(|set| {
                let idx = canonical_index(space, self.i, set).ok()?;
                (idx.i == self.i && idx.set == set).then_some(idx)
            })
            .collect()
    }
}

impl fmt::Display for SizeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ_{{|S|={}}} δ_{{{}:S}}", self.s, self.i)
    }
}

pub fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * u128::from(n - j) / u128::from(j + 1);
    }
    acc
}

/// All subsets of `{1..n}` with exactly `k` elements, in increasing bit order.
pub fn subsets_of_size(n: u32, k: u32) -> Vec<LabelSet> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(LabelSet::empty());
        return out;
    }
    // Gosper's hack over n-bit masks
    let limit: u128 = 1u128 << n;
    let mut x: u128 = (1u128 << k) - 1;
    while x < limit {
        out.push(LabelSet(x as u64));
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(labels: &[u32]) -> LabelSet {
        LabelSet::from_labels(labels).unwrap()
    }

    #[test]
    fn space_stability() {
        assert!(Space::new(5, 1).is_ok());
        assert!(Space::new(1, 0).is_err());
        assert!(Space::new(0, 3).is_err());
        assert!(Space::new(0, 4).is_ok());
        assert!(Space::new(2, 65).is_err());
    }

    #[test]
    fn mirror_of_genus_four_tail_on_m51() {
        let m = Space::new(5, 1).unwrap();
        let idx = canonical_index(&m, 4, set(&[1])).unwrap();
        assert_eq!((idx.genus(), idx.set()), (1, LabelSet::empty()));
    }

    #[test]
    fn already_canonical_is_fixed() {
        let m = Space::new(5, 1).unwrap();
        let idx = canonical_index(&m, 1, LabelSet::empty()).unwrap();
        assert_eq!((idx.genus(), idx.set()), (1, LabelSet::empty()));
        assert_eq!(canonical_index(&m, idx.genus(), idx.set()).unwrap(), idx);
    }

    #[test]
    fn mirror_on_m83() {
        let m = Space::new(8, 3).unwrap();
        let idx = canonical_index(&m, 6, set(&[1, 2])).unwrap();
        assert_eq!((idx.genus(), idx.set()), (2, set(&[3])));
    }

    #[test]
    fn tie_break_requires_label_one() {
        let m = Space::new(8, 3).unwrap();
        let idx = canonical_index(&m, 4, set(&[2, 3])).unwrap();
        assert_eq!((idx.genus(), idx.set()), (4, set(&[1])));
        let idx = canonical_index(&m, 4, set(&[1])).unwrap();
        assert_eq!(idx.set(), set(&[1]));
    }

    #[test]
    fn unstable_indices_are_rejected() {
        let m = Space::new(5, 1).unwrap();
        assert!(matches!(
            canonical_index(&m, 0, set(&[1])),
            Err(Error::UnstableIndex { .. })
        ));
        assert!(canonical_index(&m, 5, LabelSet::empty()).is_err());
        assert!(canonical_index(&m, 6, LabelSet::empty()).is_err());
        assert!(matches!(
            canonical_index(&m, 1, set(&[2])),
            Err(Error::LabelOutOfRange { .. })
        ));
    }

    #[test]
    fn require_canonical_flags_mirrors() {
        let m = Space::new(5, 1).unwrap();
        assert!(matches!(
            require_canonical(&m, 4, set(&[1])),
            Err(Error::NonCanonicalIndex { .. })
        ));
        assert!(require_canonical(&m, 1, LabelSet::empty()).is_ok());
    }

    #[test]
    fn class_counts_match_enumeration() {
        for (g, n) in [(5, 1), (8, 3), (4, 3), (2, 2), (6, 0), (3, 4), (0, 5)] {
            let m = Space::new(g, n).unwrap();
            let total: u128 = m.size_classes().iter().map(|c| c.count(&m)).sum();
            assert_eq!(total as usize, m.boundary_indices().len(), "{m}");
            for c in m.size_classes() {
                assert_eq!(c.members(&m).len() as u128, c.count(&m));
            }
        }
    }

    #[test]
    fn m51_has_four_boundary_divisors() {
        let m = Space::new(5, 1).unwrap();
        assert_eq!(m.boundary_indices().len(), 4);
    }

    #[test]
    fn subsets_and_binomials() {
        assert_eq!(subsets_of_size(5, 2).len(), 10);
        assert_eq!(subsets_of_size(3, 0), vec![LabelSet::empty()]);
        assert_eq!(binomial(45, 22), 4116715363800);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn label_set_order_and_display() {
        assert!(set(&[3]) < set(&[1, 2]));
        assert!(set(&[1, 3]) < set(&[2, 3]));
        assert_eq!(set(&[2, 7]).to_string(), "{2,7}");
        assert_eq!(set(&[1, 2]).complement(4), set(&[3, 4]));
    }
}
