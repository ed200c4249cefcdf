//! Set representations and exact additive convolutions.
//!
//! Everything here counts *ordered* tuples: a diagonal representation s+s
//! contributes 1 to the sum count at 2s, an off-diagonal pair {a,b}
//! contributes 2. With that convention a Sidon set is exactly a set whose
//! g-value is at most 2. Counting is done by direct accumulation into dense
//! arrays (or hash maps for sparse large domains); no floating point, no FFT.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Upper limit on moduli and integer elements; keeps any sum of three
/// elements comfortably inside u64/i64.
pub const MAX_MAGNITUDE: u64 = 1 << 40;

/// Largest domain for which a full [`ConvProfile`] is materialized.
const MAX_PROFILE_DOMAIN: u64 = 1 << 22;

/// Domain size cutoff between dense-array and hash-map counting.
const DENSE_LIMIT: u64 = 1 << 24;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn check_sorted_distinct(sorted: &[u64]) -> Result<()> {
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::InvalidInput(format!("duplicate element {}", w[0])));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// set types
// ---------------------------------------------------------------------------

/// A subset of Z_n: distinct residues in [0, n), kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSet {
    modulus: u64,
    elements: Vec<u64>,
}

/// A finite set of distinct nonnegative integers, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSet {
    elements: Vec<u64>,
}

impl CyclicSet {
    /// Elements may arrive in any order but must be distinct residues in
    /// [0, modulus); the modulus must be in [1, 2^40].
    pub fn new(modulus: u64, elements: &[u64]) -> Result<CyclicSet> {
        if modulus == 0 {
            return Err(Error::InvalidInput("modulus must be positive".into()));
        }
        if modulus > MAX_MAGNITUDE {
            return Err(Error::InvalidInput(format!(
                "modulus {modulus} exceeds the supported maximum 2^40"
            )));
        }
        let mut v = elements.to_vec();
        v.sort_unstable();
        check_sorted_distinct(&v)?;
        if let Some(&last) = v.last() {
            if last >= modulus {
                return Err(Error::InvalidInput(format!(
                    "element {last} is not a residue mod {modulus}"
                )));
            }
        }
        Ok(CyclicSet {
            modulus,
            elements: v,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, r: u64) -> bool {
        self.elements.binary_search(&r).is_ok()
    }

    pub fn translate(&self, c: u64) -> CyclicSet {
        let n = self.modulus;
        let mut v: Vec<u64> = self.elements.iter().map(|&x| (x + c % n) % n).collect();
        v.sort_unstable();
        CyclicSet {
            modulus: n,
            elements: v,
        }
    }

    /// Multiplies every element by c; c must be a unit of Z_n.
    pub fn dilate(&self, c: u64) -> Result<CyclicSet> {
        let n = self.modulus;
        let c = c % n;
        if gcd(c, n) != 1 {
            return Err(Error::NotCoprime(c, n));
        }
        let mut v: Vec<u64> = self
            .elements
            .iter()
            .map(|&x| ((x as u128 * c as u128) % n as u128) as u64)
            .collect();
        v.sort_unstable();
        Ok(CyclicSet {
            modulus: n,
            elements: v,
        })
    }

    pub fn reflect(&self) -> CyclicSet {
        let n = self.modulus;
        let mut v: Vec<u64> = self.elements.iter().map(|&x| (n - x) % n).collect();
        v.sort_unstable();
        CyclicSet {
            modulus: n,
            elements: v,
        }
    }

    pub fn union(&self, other: &CyclicSet) -> Result<CyclicSet> {
        if self.modulus != other.modulus {
            return Err(Error::ContextMismatch(format!(
                "cannot union sets mod {} and mod {}",
                self.modulus, other.modulus
            )));
        }
        let mut v = self.elements.clone();
        v.extend_from_slice(&other.elements);
        v.sort_unstable();
        v.dedup();
        Ok(CyclicSet {
            modulus: self.modulus,
            elements: v,
        })
    }

    /// Lexicographically least element vector over all translations and
    /// the reflection's translations. The result always contains 0 when the
    /// set is nonempty.
    pub fn canonical(&self) -> CyclicSet {
        if self.is_empty() {
            return self.clone();
        }
        let n = self.modulus;
        let mut best: Option<Vec<u64>> = None;
        for base in [self.elements.clone(), self.reflect().elements] {
            for &anchor in &base {
                let mut cand: Vec<u64> =
                    base.iter().map(|&x| (x + n - anchor) % n).collect();
                cand.sort_unstable();
                if best.as_ref().map_or(true, |b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        CyclicSet {
            modulus: n,
            elements: best.unwrap(),
        }
    }

    pub fn g_value(&self) -> u64 {
        let n = self.modulus;
        let k = self.elements.len();
        if k == 0 {
            return 0;
        }
        if n <= DENSE_LIMIT {
            let mut counts = vec![0u32; n as usize];
            let mut max = 0u32;
            for i in 0..k {
                for j in i..k {
                    let s = ((self.elements[i] + self.elements[j]) % n) as usize;
                    counts[s] += if i == j { 1 } else { 2 };
                    max = max.max(counts[s]);
                }
            }
            max as u64
        } else {
            let mut counts: HashMap<u64, u64> = HashMap::new();
            let mut max = 0u64;
            for i in 0..k {
                for j in i..k {
                    let s = (self.elements[i] + self.elements[j]) % n;
                    let e = counts.entry(s).or_insert(0);
                    *e += if i == j { 1 } else { 2 };
                    max = max.max(*e);
                }
            }
            max
        }
    }

    pub fn is_b2g(&self, g: u64) -> bool {
        self.g_value() <= g
    }

    pub fn sum_convolution(&self) -> Result<ConvProfile> {
        let n = self.modulus;
        if self.is_empty() {
            return Ok(ConvProfile::empty(ProfileKind::Sum, ProfileDomain::Cyclic(n)));
        }
        check_profile_domain(n)?;
        let mut counts = vec![0u64; n as usize];
        let k = self.elements.len();
        for i in 0..k {
            for j in i..k {
                let s = ((self.elements[i] + self.elements[j]) % n) as usize;
                counts[s] += if i == j { 1 } else { 2 };
            }
        }
        Ok(ConvProfile::from_dense(
            ProfileKind::Sum,
            ProfileDomain::Cyclic(n),
            0,
            &counts,
        ))
    }

    pub fn diff_correlation(&self) -> Result<ConvProfile> {
        let n = self.modulus;
        if self.is_empty() {
            return Ok(ConvProfile::empty(
                ProfileKind::Difference,
                ProfileDomain::Cyclic(n),
            ));
        }
        check_profile_domain(n)?;
        let mut counts = vec![0u64; n as usize];
        for &a in &self.elements {
            for &b in &self.elements {
                counts[((a + n - b) % n) as usize] += 1;
            }
        }
        Ok(ConvProfile::from_dense(
            ProfileKind::Difference,
            ProfileDomain::Cyclic(n),
            0,
            &counts,
        ))
    }

    /// Full profile of three-fold sums s1+s2+s3 mod n over ordered triples.
    pub fn triple_convolution(&self) -> Result<ConvProfile> {
        let n = self.modulus;
        if self.is_empty() {
            return Ok(ConvProfile::empty(
                ProfileKind::Triple,
                ProfileDomain::Cyclic(n),
            ));
        }
        check_profile_domain(n)?;
        let mut pair = vec![0u64; n as usize];
        let k = self.elements.len();
        for i in 0..k {
            for j in i..k {
                let s = ((self.elements[i] + self.elements[j]) % n) as usize;
                pair[s] += if i == j { 1 } else { 2 };
            }
        }
        let mut counts = vec![0u64; n as usize];
        for (s, c) in counts.iter_mut().enumerate() {
            for &a in &self.elements {
                *c += pair[((s as u64 + n - a) % n) as usize];
            }
        }
        Ok(ConvProfile::from_dense(
            ProfileKind::Triple,
            ProfileDomain::Cyclic(n),
            0,
            &counts,
        ))
    }

    pub fn triple_convolution_max(&self) -> Result<u64> {
        Ok(self.triple_convolution()?.max_count())
    }
}

impl IntegerSet {
    /// Elements may arrive in any order but must be distinct and at most 2^40.
    pub fn new(elements: &[u64]) -> Result<IntegerSet> {
        let mut v = elements.to_vec();
        v.sort_unstable();
        check_sorted_distinct(&v)?;
        if let Some(&last) = v.last() {
            if last > MAX_MAGNITUDE {
                return Err(Error::InvalidInput(format!(
                    "element {last} exceeds the supported maximum 2^40"
                )));
            }
        }
        Ok(IntegerSet { elements: v })
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn min(&self) -> Option<u64> {
        self.elements.first().copied()
    }

    pub fn max(&self) -> Option<u64> {
        self.elements.last().copied()
    }

    /// max - min; 0 for sets with fewer than two elements.
    pub fn span(&self) -> u64 {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    /// Shifts every element by c; fails if any element would leave
    /// [0, 2^40].
    pub fn translate(&self, c: i64) -> Result<IntegerSet> {
        let mut v = Vec::with_capacity(self.elements.len());
        for &x in &self.elements {
            let shifted = x as i64 + c;
            if shifted < 0 {
                return Err(Error::InvalidInput(format!(
                    "translating {x} by {c} leaves the nonnegative integers"
                )));
            }
            v.push(shifted as u64);
        }
        IntegerSet::new(&v)
    }

    /// Maps s to max - s; the canonical mirror image.
    pub fn reflect(&self) -> IntegerSet {
        match self.max() {
            None => self.clone(),
            Some(hi) => {
                let v: Vec<u64> = self.elements.iter().rev().map(|&x| hi - x).collect();
                IntegerSet { elements: v }
            }
        }
    }

    pub fn union(&self, other: &IntegerSet) -> IntegerSet {
        let mut v = self.elements.clone();
        v.extend_from_slice(&other.elements);
        v.sort_unstable();
        v.dedup();
        IntegerSet { elements: v }
    }

    /// The lexicographically least of the translate-to-zero form and its
    /// reflection; idempotent. The empty set is its own canonical form.
    pub fn canonicalize(&self) -> IntegerSet {
        let Some(lo) = self.min() else {
            return self.clone();
        };
        let a: Vec<u64> = self.elements.iter().map(|&x| x - lo).collect();
        let b = self.reflect().elements;
        IntegerSet {
            elements: if b < a { b } else { a },
        }
    }

    pub fn g_value(&self) -> u64 {
        let k = self.elements.len();
        if k == 0 {
            return 0;
        }
        let lo = self.elements[0];
        let width = 2 * self.span() + 1;
        if width <= DENSE_LIMIT {
            let mut counts = vec![0u32; width as usize];
            let mut max = 0u32;
            for i in 0..k {
                for j in i..k {
                    let s = (self.elements[i] + self.elements[j] - 2 * lo) as usize;
                    counts[s] += if i == j { 1 } else { 2 };
                    max = max.max(counts[s]);
                }
            }
            max as u64
        } else {
            let mut counts: HashMap<u64, u64> = HashMap::new();
            let mut max = 0u64;
            for i in 0..k {
                for j in i..k {
                    let s = self.elements[i] + self.elements[j];
                    let e = counts.entry(s).or_insert(0);
                    *e += if i == j { 1 } else { 2 };
                    max = max.max(*e);
                }
            }
            max
        }
    }

    pub fn is_b2g(&self, g: u64) -> bool {
        self.g_value() <= g
    }

    pub fn sum_convolution(&self) -> Result<ConvProfile> {
        let Some(lo) = self.min() else {
            return Ok(ConvProfile::empty(
                ProfileKind::Sum,
                ProfileDomain::IntegerRange(0, 0),
            ));
        };
        let width = 2 * self.span() + 1;
        check_profile_domain(width)?;
        let mut counts = vec![0u64; width as usize];
        let k = self.elements.len();
        for i in 0..k {
            for j in i..k {
                let s = (self.elements[i] + self.elements[j] - 2 * lo) as usize;
                counts[s] += if i == j { 1 } else { 2 };
            }
        }
        let base = 2 * lo as i64;
        Ok(ConvProfile::from_dense(
            ProfileKind::Sum,
            ProfileDomain::IntegerRange(base, base + width as i64 - 1),
            base,
            &counts,
        ))
    }

    pub fn diff_correlation(&self) -> Result<ConvProfile> {
        if self.is_empty() {
            return Ok(ConvProfile::empty(
                ProfileKind::Difference,
                ProfileDomain::IntegerRange(0, 0),
            ));
        }
        let span = self.span() as i64;
        let width = 2 * span as u64 + 1;
        check_profile_domain(width)?;
        let mut counts = vec![0u64; width as usize];
        for &a in &self.elements {
            for &b in &self.elements {
                counts[(a as i64 - b as i64 + span) as usize] += 1;
            }
        }
        Ok(ConvProfile::from_dense(
            ProfileKind::Difference,
            ProfileDomain::IntegerRange(-span, span),
            -span,
            &counts,
        ))
    }
}

// ---------------------------------------------------------------------------
// convolution profiles
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileKind {
    Sum,
    Difference,
    Triple,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileDomain {
    /// Residues 0..n.
    Cyclic(u64),
    /// Inclusive integer interval.
    IntegerRange(i64, i64),
}

/// Exact counts of an additive convolution over its full domain
/// (zero counts included), together with their maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvProfile {
    kind: ProfileKind,
    domain: ProfileDomain,
    counts: BTreeMap<i64, u64>,
    max_count: u64,
}

fn check_profile_domain(width: u64) -> Result<()> {
    if width > MAX_PROFILE_DOMAIN {
        return Err(Error::InvalidInput(format!(
            "profile domain of size {width} is too large to materialize; use g_value"
        )));
    }
    Ok(())
}

impl ConvProfile {
    fn empty(kind: ProfileKind, domain: ProfileDomain) -> ConvProfile {
        ConvProfile {
            kind,
            domain,
            counts: BTreeMap::new(),
            max_count: 0,
        }
    }

    fn from_dense(kind: ProfileKind, domain: ProfileDomain, base: i64, dense: &[u64]) -> ConvProfile {
        let counts: BTreeMap<i64, u64> = dense
            .iter()
            .enumerate()
            .map(|(i, &c)| (base + i as i64, c))
            .collect();
        let max_count = dense.iter().copied().max().unwrap_or(0);
        ConvProfile {
            kind,
            domain,
            counts,
            max_count,
        }
    }

    pub fn kind(&self) -> ProfileKind {
        self.kind
    }

    pub fn domain(&self) -> ProfileDomain {
        self.domain
    }

    /// Count at a given sum/difference value; 0 outside the domain.
    pub fn count(&self, k: i64) -> u64 {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<i64, u64> {
        &self.counts
    }

    pub fn max_count(&self) -> u64 {
        self.max_count
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

// ---------------------------------------------------------------------------
// text form: "{1, 2, 4} mod 7" and "{0, 1, 4, 6}"
// ---------------------------------------------------------------------------

/// Either kind of set, for interfaces that accept both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnySet {
    Cyclic(CyclicSet),
    Integer(IntegerSet),
}

impl AnySet {
    pub fn g_value(&self) -> u64 {
        match self {
            AnySet::Cyclic(s) => s.g_value(),
            AnySet::Integer(s) => s.g_value(),
        }
    }

    pub fn sum_convolution(&self) -> Result<ConvProfile> {
        match self {
            AnySet::Cyclic(s) => s.sum_convolution(),
            AnySet::Integer(s) => s.sum_convolution(),
        }
    }

    pub fn diff_correlation(&self) -> Result<ConvProfile> {
        match self {
            AnySet::Cyclic(s) => s.diff_correlation(),
            AnySet::Integer(s) => s.diff_correlation(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AnySet::Cyclic(s) => s.len(),
            AnySet::Integer(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn write_elements(f: &mut fmt::Formatter<'_>, elems: &[u64]) -> fmt::Result {
    write!(f, "{{")?;
    for (i, e) in elems.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{e}")?;
    }
    write!(f, "}}")
}

impl fmt::Display for CyclicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_elements(f, &self.elements)?;
        write!(f, " mod {}", self.modulus)
    }
}

impl fmt::Display for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_elements(f, &self.elements)
    }
}

impl fmt::Display for AnySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnySet::Cyclic(s) => s.fmt(f),
            AnySet::Integer(s) => s.fmt(f),
        }
    }
}

// Sets serialize as their display form, which parses back via FromStr.
impl serde::Serialize for CyclicSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl serde::Serialize for IntegerSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl serde::Serialize for AnySet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_braced_elements(text: &str) -> Result<Vec<u64>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('{')
        .and_then(|rest| rest.strip_suffix('}'))
        .ok_or_else(|| Error::ParseError(format!("expected {{...}}, got {text:?}")))?;
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| Error::ParseError(format!("bad element {:?}", part.trim())))
        })
        .collect()
}

impl FromStr for IntegerSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<IntegerSet> {
        IntegerSet::new(&parse_braced_elements(s)?)
    }
}

impl FromStr for CyclicSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<CyclicSet> {
        let close = s
            .rfind('}')
            .ok_or_else(|| Error::ParseError(format!("expected {{...}} mod n, got {s:?}")))?;
        let (braces, tail) = s.split_at(close + 1);
        let tail = tail.trim();
        let modulus_text = tail
            .strip_prefix("mod")
            .ok_or_else(|| Error::ParseError(format!("expected `mod n` after the set in {s:?}")))?
            .trim();
        let modulus = modulus_text
            .parse::<u64>()
            .map_err(|_| Error::ParseError(format!("bad modulus {modulus_text:?}")))?;
        CyclicSet::new(modulus, &parse_braced_elements(braces)?)
    }
}

impl FromStr for AnySet {
    type Err = Error;

    fn from_str(s: &str) -> Result<AnySet> {
        if s.contains("mod") {
            Ok(AnySet::Cyclic(s.parse()?))
        } else {
            Ok(AnySet::Integer(s.parse()?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cyc(n: u64, elems: &[u64]) -> CyclicSet {
        CyclicSet::new(n, elems).unwrap()
    }

    fn int(elems: &[u64]) -> IntegerSet {
        IntegerSet::new(elems).unwrap()
    }

    #[test]
    fn constructors_are_strict() {
        assert!(CyclicSet::new(0, &[]).is_err());
        assert!(CyclicSet::new(5, &[5]).is_err());
        assert!(CyclicSet::new(5, &[1, 1]).is_err());
        assert!(IntegerSet::new(&[3, 3]).is_err());
        assert!(CyclicSet::new(7, &[3, 1]).is_ok());
        assert_eq!(cyc(7, &[3, 1]).elements(), &[1, 3]);
    }

    #[test]
    fn sum_profiles_match_enumeration() {
        let p = int(&[0, 1]).sum_convolution().unwrap();
        assert_eq!(p.count(0), 1);
        assert_eq!(p.count(1), 2);
        assert_eq!(p.count(2), 1);
        assert_eq!(p.max_count(), 2);
        assert_eq!(p.total(), 4);

        assert_eq!(int(&[1, 2, 5, 7]).sum_convolution().unwrap().max_count(), 2);

        let p = cyc(6, &[0, 1, 3]).sum_convolution().unwrap();
        let expect: Vec<(i64, u64)> = vec![(0, 2), (1, 2), (2, 1), (3, 2), (4, 2), (5, 0)];
        assert_eq!(p.counts().iter().map(|(&k, &v)| (k, v)).collect::<Vec<_>>(), expect);
        assert_eq!(p.total(), 9);
    }

    #[test]
    fn g_values() {
        assert_eq!(int(&[0, 1]).g_value(), 2);
        assert_eq!(int(&[1, 2, 3, 5]).g_value(), 3);
        assert_eq!(int(&[]).g_value(), 0);
        assert_eq!(int(&[4]).g_value(), 1);
        assert_eq!(cyc(6, &[0, 1, 3]).g_value(), 2);
        assert!(int(&[1, 2, 5, 7]).is_b2g(2));
        assert!(!int(&[1, 2, 3, 5]).is_b2g(2));
    }

    #[test]
    fn difference_profiles() {
        // {0,1,3} mod 7 is a perfect difference set
        let p = cyc(7, &[0, 1, 3]).diff_correlation().unwrap();
        assert_eq!(p.count(0), 3);
        for k in 1..7 {
            assert_eq!(p.count(k), 1, "difference {k}");
        }

        let p = int(&[0, 1]).diff_correlation().unwrap();
        assert_eq!(p.count(-1), 1);
        assert_eq!(p.count(0), 2);
        assert_eq!(p.count(1), 1);

        let p = int(&[0, 1, 3]).diff_correlation().unwrap();
        for k in [1i64, 2, 3] {
            assert_eq!(p.count(k), 1);
            assert_eq!(p.count(-k), 1);
        }
        assert_eq!(p.count(0), 3);
    }

    #[test]
    fn triple_convolutions() {
        assert_eq!(cyc(5, &[0]).triple_convolution_max().unwrap(), 1);
        let p = cyc(100, &[0, 1]).triple_convolution().unwrap();
        assert_eq!(p.max_count(), 3);
        assert_eq!(p.count(1), 3);
        assert_eq!(p.count(2), 3);
        assert_eq!(p.count(0), 1);
        assert_eq!(p.count(3), 1);
        assert_eq!(p.total(), 8);
    }

    #[test]
    fn canonical_integer_forms() {
        assert_eq!(int(&[1, 2, 5, 7]).canonicalize(), int(&[0, 1, 4, 6]));
        assert_eq!(int(&[0]).canonicalize(), int(&[0]));
        assert_eq!(int(&[0, 2, 7, 8, 11]).canonicalize(), int(&[0, 2, 7, 8, 11]));
        // reflection of the above, must map back
        assert_eq!(int(&[0, 3, 4, 9, 11]).canonicalize(), int(&[0, 2, 7, 8, 11]));
        let c = int(&[5, 9, 12, 20]).canonicalize();
        assert_eq!(c.canonicalize(), c, "idempotent");
    }

    #[test]
    fn canonical_cyclic_forms() {
        let s = cyc(12, &[3, 4, 7]);
        let c = s.canonical();
        assert_eq!(c, s.translate(5).canonical());
        assert_eq!(c, s.reflect().canonical());
        assert_eq!(c.elements()[0], 0);
        assert_eq!(c, c.canonical());
    }

    #[test]
    fn text_round_trips() {
        for text in ["{7, 39, 58} mod 110", "{} mod 5", "{0} mod 1"] {
            let s: CyclicSet = text.parse().unwrap();
            assert_eq!(s.to_string(), text);
        }
        for text in ["{0, 1, 4, 6}", "{}", "{12}"] {
            let s: IntegerSet = text.parse().unwrap();
            assert_eq!(s.to_string(), text);
        }
        let s: AnySet = "{1,2,5,7}".parse().unwrap();
        assert_eq!(s, AnySet::Integer(int(&[1, 2, 5, 7])));
        let s: AnySet = "{0,1,3} mod 6".parse().unwrap();
        assert_eq!(s, AnySet::Cyclic(cyc(6, &[0, 1, 3])));
        assert!("{1,2".parse::<IntegerSet>().is_err());
        assert!("{1,2} mod".parse::<CyclicSet>().is_err());
        assert!("{1,x} mod 5".parse::<CyclicSet>().is_err());
    }

    #[test]
    fn unions_and_dilations() {
        let a = cyc(10, &[1, 3]);
        let b = cyc(10, &[3, 7]);
        assert_eq!(a.union(&b).unwrap(), cyc(10, &[1, 3, 7]));
        assert!(a.union(&cyc(11, &[1])).is_err());
        assert!(a.dilate(5).is_err());
        assert_eq!(a.dilate(3).unwrap(), cyc(10, &[3, 9]));
        assert_eq!(int(&[0, 5]).union(&int(&[5, 6])), int(&[0, 5, 6]));
    }

    #[test]
    fn sidon_sets_have_small_differences() {
        // g <= 2 forces every nonzero ordered difference count to be 1,
        // except at k = n/2 where the two orderings of one pair coincide.
        for (n, elems) in [
            (7u64, vec![0u64, 1, 3]),
            (13, vec![0, 1, 4, 6]),
            (6, vec![0, 1, 3]),
            (13, vec![0, 1, 3, 9]),
            (8, vec![0, 1, 3]),
        ] {
            let s = cyc(n, &elems);
            assert!(s.g_value() <= 2, "{s}");
            let p = s.diff_correlation().unwrap();
            for k in 1..n {
                let cap = if (2 * k) % n == 0 { 2 } else { 1 };
                assert!(p.count(k as i64) <= cap, "{s}, difference {k}");
            }
        }
    }

    proptest! {
        #[test]
        fn translation_reflection_invariance(
            elems in proptest::collection::btree_set(0u64..200, 1..12),
            c in 0u64..300,
        ) {
            let v: Vec<u64> = elems.into_iter().collect();
            let s = IntegerSet::new(&v).unwrap();
            let g = s.g_value();
            prop_assert_eq!(s.translate(c as i64).unwrap().g_value(), g);
            prop_assert_eq!(s.reflect().g_value(), g);
            prop_assert_eq!(s.canonicalize().g_value(), g);
            let total = s.sum_convolution().unwrap().total();
            prop_assert_eq!(total, (v.len() * v.len()) as u64);
            prop_assert_eq!(s.diff_correlation().unwrap().total(), total);
        }

        #[test]
        fn cyclic_invariances(
            n in 2u64..60,
            seed in proptest::collection::vec(0u64..1000, 1..10),
            c in 0u64..1000,
        ) {
            let elems: std::collections::BTreeSet<u64> = seed.iter().map(|&x| x % n).collect();
            let v: Vec<u64> = elems.into_iter().collect();
            let s = CyclicSet::new(n, &v).unwrap();
            let g = s.g_value();
            prop_assert_eq!(s.translate(c).g_value(), g);
            prop_assert_eq!(s.reflect().g_value(), g);
            prop_assert_eq!(s.canonical().g_value(), g);
            // dilation by any unit preserves g
            for u in 1..n {
                if gcd(u, n) == 1 {
                    prop_assert_eq!(s.dilate(u).unwrap().g_value(), g);
                }
            }
            // pigeonhole lower bound
            let k = v.len() as u64;
            prop_assert!(g >= (k * k).div_ceil(n));
            prop_assert_eq!(s.sum_convolution().unwrap().total(), k * k);
        }

        #[test]
        fn profile_matches_naive_triple(
            n in 2u64..40,
            seed in proptest::collection::vec(0u64..1000, 1..7),
        ) {
            let elems: std::collections::BTreeSet<u64> = seed.iter().map(|&x| x % n).collect();
            let v: Vec<u64> = elems.into_iter().collect();
            let s = CyclicSet::new(n, &v).unwrap();
            let p = s.triple_convolution().unwrap();
            let mut naive = vec![0u64; n as usize];
            for &a in &v {
                for &b in &v {
                    for &c in &v {
                        naive[((a + b + c) % n) as usize] += 1;
                    }
                }
            }
            for (i, &cnt) in naive.iter().enumerate() {
                prop_assert_eq!(p.count(i as i64), cnt);
            }
            prop_assert_eq!(p.total(), (v.len() as u64).pow(3));
        }
    }
}
