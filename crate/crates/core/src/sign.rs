//! Signed subsets of `±E` and the sign-vector calculus.
//!
//! Elements are 1-based throughout: the ground set is `{1, ..., n}` and the
//! barred copy `{1̄, ..., n̄}` is represented by the negative mask of a
//! [`SignedVector`] or [`SignedElementSet`]. Internally every set is a
//! 64-bit mask with bit `e - 1` standing for element `e`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest ground set accepted by oriented-matroid constructors (3ⁿ enumeration bound).
pub const MAX_GROUND: usize = 24;

/// Largest element index an [`ElementSet`] can hold.
pub const MAX_ELEMENTS: usize = 64;

/// A finite subset of `{1, ..., 64}`.
///
/// Ordering is graded lexicographic: smaller sets first, ties broken by
/// comparing the sorted element lists.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!((1..=MAX_ELEMENTS).contains(&e));
        ElementSet(1u64 << (e - 1))
    }

    /// Builds a set from 1-based elements, rejecting anything outside `1..=n`.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I, n: usize) -> Result<Self> {
        let mut bits = 0u64;
        for e in elements {
            if e == 0 || e > n || e > MAX_ELEMENTS {
                return Err(Error::argument(format!("element {e} outside 1..={n}")));
            }
            bits |= 1u64 << (e - 1);
        }
        Ok(ElementSet(bits))
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_ELEMENTS).contains(&e) && self.0 & (1u64 << (e - 1)) != 0
    }

    pub fn with(self, e: usize) -> Self {
        self | ElementSet::singleton(e)
    }

    pub fn without(self, e: usize) -> Self {
        self - ElementSet::singleton(e)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ElementSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Largest element, or 0 for the empty set.
    pub fn max_element(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> ElementIter {
        ElementIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `self`, in increasing bit order.
    pub fn subsets(self) -> impl Iterator<Item = ElementSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(ElementSet(cur))
        })
    }
}

impl std::ops::BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: Self) -> Self {
        ElementSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: Self) -> Self {
        ElementSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: Self) -> Self {
        ElementSet(self.0 & !rhs.0)
    }
}

impl std::ops::BitOrAssign for ElementSet {
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        iter.into_iter()
            .fold(ElementSet::EMPTY, |acc, e| acc.with(e))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Compact codeword notation: `∅`, `13`, or `1,12` when an element exceeds 9.
impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let sep = if self.max_element() > 9 { "," } else { "" };
        let parts: Vec<String> = self.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

pub struct ElementIter(u64);

impl Iterator for ElementIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

/// A ground set `E = {1, ..., n}` with `1 ≤ n ≤ 24`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet(usize);

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::argument("ground set must be nonempty"));
        }
        Error::check_capacity("ground set size", n, MAX_GROUND)?;
        Ok(GroundSet(n))
    }

    pub fn size(self) -> usize {
        self.0
    }

    pub fn elements(self) -> ElementSet {
        ElementSet::full(self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Zero,
    Minus,
}

impl Sign {
    pub fn negate(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Zero => Sign::Zero,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Zero => '0',
            Sign::Minus => '-',
        }
    }

    /// Rank in the canonical text ordering (`'+' < '-' < '0'` in ASCII).
    fn text_rank(self) -> u8 {
        match self {
            Sign::Plus => 0,
            Sign::Minus => 1,
            Sign::Zero => 2,
        }
    }
}

/// An element of `{+, 0, −}^n`.
///
/// Stored as disjoint positive and negative masks. Text form is a string of
/// `+`, `0`, `-`; ordering is lexicographic in that text form.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedVector {
    n: u8,
    pos: ElementSet,
    neg: ElementSet,
}

impl SignedVector {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS, "signed vector length {n} exceeds {MAX_ELEMENTS}");
        SignedVector {
            n: n as u8,
            pos: ElementSet::EMPTY,
            neg: ElementSet::EMPTY,
        }
    }

    /// Builds a vector from its positive and negative parts.
    pub fn from_parts(n: usize, pos: ElementSet, neg: ElementSet) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::Capacity {
                what: "signed vector length",
                limit: MAX_ELEMENTS,
                actual: n,
            });
        }
        if !pos.is_disjoint(neg) {
            return Err(Error::argument("positive and negative parts overlap"));
        }
        let full = ElementSet::full(n);
        if !(pos | neg).is_subset(full) {
            return Err(Error::argument(format!("support exceeds ground set of size {n}")));
        }
        Ok(SignedVector { n: n as u8, pos, neg })
    }

    pub(crate) fn from_parts_unchecked(n: usize, pos: ElementSet, neg: ElementSet) -> Self {
        debug_assert!(pos.is_disjoint(neg));
        SignedVector { n: n as u8, pos, neg }
    }

    pub fn from_signs(signs: &[Sign]) -> Result<Self> {
        let mut pos = ElementSet::EMPTY;
        let mut neg = ElementSet::EMPTY;
        for (i, s) in signs.iter().enumerate() {
            match s {
                Sign::Plus => pos = pos.with(i + 1),
                Sign::Minus => neg = neg.with(i + 1),
                Sign::Zero => {}
            }
        }
        SignedVector::from_parts(signs.len(), pos, neg)
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn positive(&self) -> ElementSet {
        self.pos
    }

    pub fn negative(&self) -> ElementSet {
        self.neg
    }

    pub fn support(&self) -> ElementSet {
        self.pos | self.neg
    }

    pub fn zero_set(&self) -> ElementSet {
        ElementSet::full(self.len()) - self.support()
    }

    pub fn is_zero(&self) -> bool {
        self.support().is_empty()
    }

    /// `(X⁺, X⁻, X̲)`.
    pub fn parts(&self) -> (ElementSet, ElementSet, ElementSet) {
        (self.pos, self.neg, self.support())
    }

    pub fn get(&self, e: usize) -> Sign {
        if self.pos.contains(e) {
            Sign::Plus
        } else if self.neg.contains(e) {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn with_sign(&self, e: usize, s: Sign) -> Self {
        let mut pos = self.pos.without(e);
        let mut neg = self.neg.without(e);
        match s {
            Sign::Plus => pos = pos.with(e),
            Sign::Minus => neg = neg.with(e),
            Sign::Zero => {}
        }
        SignedVector { n: self.n, pos, neg }
    }

    pub fn signs(&self) -> impl Iterator<Item = Sign> + '_ {
        (1..=self.len()).map(move |e| self.get(e))
    }

    pub fn negate(&self) -> Self {
        SignedVector {
            n: self.n,
            pos: self.neg,
            neg: self.pos,
        }
    }

    fn check_len(&self, other: &SignedVector) -> Result<()> {
        if self.n != other.n {
            Err(Error::Dimension {
                expected: self.len(),
                found: other.len(),
            })
        } else {
            Ok(())
        }
    }

    /// `(X∘Y)ₑ = Xₑ` if `Xₑ ≠ 0`, else `Yₑ`.
    pub fn compose(&self, other: &SignedVector) -> Result<Self> {
        self.check_len(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &SignedVector) -> Self {
        let free = !self.support().bits();
        SignedVector {
            n: self.n,
            pos: ElementSet::from_bits(self.pos.bits() | (other.pos.bits() & free)),
            neg: ElementSet::from_bits(self.neg.bits() | (other.neg.bits() & free)),
        }
    }

    /// `{e | Xₑ = −Yₑ ≠ 0}`.
    pub fn separator(&self, other: &SignedVector) -> Result<ElementSet> {
        self.check_len(other)?;
        Ok(self.separator_unchecked(other))
    }

    pub(crate) fn separator_unchecked(&self, other: &SignedVector) -> ElementSet {
        (self.pos & other.neg) | (self.neg & other.pos)
    }

    pub fn is_orthogonal(&self, other: &SignedVector) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.is_orthogonal_unchecked(other))
    }

    /// Supports disjoint, or the common support holds both an agreeing and
    /// an opposing coordinate (equivalently `XₑX_f = −YₑY_f` for some `e, f`).
    pub(crate) fn is_orthogonal_unchecked(&self, other: &SignedVector) -> bool {
        let agree = (self.pos & other.pos) | (self.neg & other.neg);
        let oppose = self.separator_unchecked(other);
        agree.is_empty() == oppose.is_empty()
    }

    /// Face order: `self ≤ other` iff `other` agrees with `self` on `self`'s support.
    pub fn conforms_to(&self, other: &SignedVector) -> bool {
        self.pos.is_subset(other.pos) && self.neg.is_subset(other.neg)
    }

    /// Restricts to the coordinates in `keep`, renumbering them in increasing order.
    pub fn restrict(&self, keep: ElementSet) -> SignedVector {
        let mut pos = ElementSet::EMPTY;
        let mut neg = ElementSet::EMPTY;
        for (i, e) in keep.iter().enumerate() {
            match self.get(e) {
                Sign::Plus => pos = pos.with(i + 1),
                Sign::Minus => neg = neg.with(i + 1),
                Sign::Zero => {}
            }
        }
        SignedVector {
            n: keep.len() as u8,
            pos,
            neg,
        }
    }

    /// All `3ⁿ` sign vectors of length `n`.
    pub fn all(n: usize) -> impl Iterator<Item = SignedVector> {
        let full = ElementSet::full(n);
        full.subsets().flat_map(move |support| {
            support.subsets().map(move |pos| {
                SignedVector::from_parts_unchecked(n, pos, support - pos)
            })
        })
    }
}

impl Ord for SignedVector {
    fn cmp(&self, other: &Self) -> Ordering {
        let common = self.len().min(other.len());
        for e in 1..=common {
            let ord = self.get(e).text_rank().cmp(&other.get(e).text_rank());
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.len().cmp(&other.len())
    }
}

impl PartialOrd for SignedVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.signs().map(Sign::as_char).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for SignedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for SignedVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '0' => Ok(Sign::Zero),
                '-' | '−' => Ok(Sign::Minus),
                other => Err(Error::parse(format!("invalid sign character {other:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        SignedVector::from_signs(&signs)
    }
}

/// An arbitrary subset of `±E`, not necessarily a signed set.
///
/// Used for matroid convexity, where `{i, ī}` may both be present.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignedElementSet {
    n: u8,
    pos: ElementSet,
    neg: ElementSet,
}

impl SignedElementSet {
    pub fn empty(n: usize) -> Self {
        SignedElementSet {
            n: n as u8,
            pos: ElementSet::EMPTY,
            neg: ElementSet::EMPTY,
        }
    }

    pub fn full(n: usize) -> Self {
        SignedElementSet {
            n: n as u8,
            pos: ElementSet::full(n),
            neg: ElementSet::full(n),
        }
    }

    pub fn new(n: usize, pos: ElementSet, neg: ElementSet) -> Result<Self> {
        let full = ElementSet::full(n);
        if !(pos | neg).is_subset(full) {
            return Err(Error::argument(format!("signed elements exceed ground set of size {n}")));
        }
        Ok(SignedElementSet { n: n as u8, pos, neg })
    }

    /// Parses signed integers: `3` is the element 3 and `-3` is 3̄.
    pub fn from_signed_ints(n: usize, items: &[i64]) -> Result<Self> {
        let mut pos = ElementSet::EMPTY;
        let mut neg = ElementSet::EMPTY;
        for &v in items {
            let e = v.unsigned_abs() as usize;
            if e == 0 || e > n {
                return Err(Error::argument(format!("signed element {v} outside ±[{n}]")));
            }
            if v > 0 {
                pos = pos.with(e);
            } else {
                neg = neg.with(e);
            }
        }
        Ok(SignedElementSet { n: n as u8, pos, neg })
    }

    pub fn to_signed_ints(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.pos.iter().map(|e| e as i64).collect();
        out.extend(self.neg.iter().map(|e| -(e as i64)));
        out.sort_by_key(|v| (v.unsigned_abs(), *v < 0));
        out
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.pos.is_empty() && self.neg.is_empty()
    }

    pub fn positive(&self) -> ElementSet {
        self.pos
    }

    pub fn negative(&self) -> ElementSet {
        self.neg
    }

    pub fn is_signed(&self) -> bool {
        self.pos.is_disjoint(self.neg)
    }

    pub fn contains_vector(&self, x: &SignedVector) -> bool {
        x.positive().is_subset(self.pos) && x.negative().is_subset(self.neg)
    }

    pub fn union(&self, other: &SignedElementSet) -> Self {
        SignedElementSet {
            n: self.n,
            pos: self.pos | other.pos,
            neg: self.neg | other.neg,
        }
    }

    pub fn is_subset(&self, other: &SignedElementSet) -> bool {
        self.pos.is_subset(other.pos) && self.neg.is_subset(other.neg)
    }

    /// All `2^(2n)` subsets of `±E`.
    pub fn all(n: usize) -> impl Iterator<Item = SignedElementSet> {
        let full = ElementSet::full(n);
        full.subsets().flat_map(move |pos| {
            full.subsets()
                .map(move |neg| SignedElementSet { n: n as u8, pos, neg })
        })
    }
}

impl From<SignedVector> for SignedElementSet {
    fn from(x: SignedVector) -> Self {
        SignedElementSet {
            n: x.n,
            pos: x.pos,
            neg: x.neg,
        }
    }
}
