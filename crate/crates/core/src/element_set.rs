//! Subsets of a matroid ground set packed into a machine word.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest label space an [`ElementSet`] can address.
pub const MAX_ELEMENTS: usize = 32;

/// A subset of `{1, .., n}` with element `i` stored in bit `i - 1`.
///
/// Ordering is by raw bit pattern, which is what the enumeration code wants;
/// use [`ElementSet::canonical_cmp`] when a size-then-lexicographic order is
/// needed for output.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u32);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// `{1, .., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS, "label space {n} exceeds {MAX_ELEMENTS}");
        if n == MAX_ELEMENTS {
            ElementSet(u32::MAX)
        } else {
            ElementSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(element: usize) -> Self {
        assert!((1..=MAX_ELEMENTS).contains(&element), "element {element} out of range");
        ElementSet(1 << (element - 1))
    }

    /// Builds a set from 1-based labels. Returns `None` on a label outside `1..=32`.
    pub fn try_from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Option<Self> {
        let mut bits = 0u32;
        for e in elements {
            if !(1..=MAX_ELEMENTS).contains(&e) {
                return None;
            }
            bits |= 1 << (e - 1);
        }
        Some(ElementSet(bits))
    }

    /// Panicking variant of [`ElementSet::try_from_elements`].
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        Self::try_from_elements(elements).expect("element label out of range")
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, element: usize) -> bool {
        (1..=MAX_ELEMENTS).contains(&element) && self.0 & (1 << (element - 1)) != 0
    }

    pub fn with(self, element: usize) -> Self {
        self | Self::singleton(element)
    }

    pub fn without(self, element: usize) -> Self {
        ElementSet(self.0 & !Self::singleton(element).0)
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ElementSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: ElementSet) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElementSet) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElementSet) -> Self {
        ElementSet(self.0 & !other.0)
    }

    /// Largest label present, 0 for the empty set.
    pub fn max_element(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// Labels in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing bit order starting with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Size first, then lexicographic on the sorted label lists.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl std::ops::BitOr for ElementSet {
    type Output = ElementSet;

    fn bitor(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 | rhs.0)
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_elements(iter)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, e) in self.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(deserializer)?;
        ElementSet::try_from_elements(labels.iter().copied())
            .ok_or_else(|| serde::de::Error::custom("element label out of range 1..=32"))
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz as usize + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let current = self.next?;
        // Standard submask walk: (current - mask) & mask enumerates submasks upward.
        let following = current.wrapping_sub(self.mask) & self.mask;
        self.next = if following == 0 { None } else { Some(following) };
        Some(ElementSet(current))
    }
}
