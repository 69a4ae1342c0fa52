//! Brute-force checkers for the AG-groupoid property vocabulary.
//!
//! Every checker scans operands in lexicographic order and stops at the
//! first violation, so the reported counterexample is the lexicographically
//! least one. [`classify`] runs all of them and records every witness.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::groupoid::Magma;

/// Outcome of a universally quantified check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn counterexample(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// How a triple law is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scan {
    /// Every ordered triple; reports the lexicographically least violation.
    Exhaustive,
    /// `samples` uniform random triples drawn from a ChaCha8 stream seeded
    /// with `seed`. A pass is evidence, not proof.
    Sampled { samples: u64, seed: u64 },
}

/// Laws quantified over ordered triples. Witnesses are `[a, b, c]` in the
/// variable order of the law's statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TripleLaw {
    /// `(a*b)*c = (c*b)*a`
    LeftInvertive,
    /// `(a*b)*c = a*(b*c)`
    Associative,
    /// `a*b = a*c  =>  b*a = c*a`
    T3Left,
    /// `b*a = c*a  =>  a*b = a*c`
    T3Right,
    /// `a*b = b*a  and  b*c = c*b  =>  a*c = c*a`
    TransitivelyCommutative,
    /// `a*x = a*y  =>  x = y`, witness `[a, x, y]`
    LeftCancellative,
    /// `x*a = y*a  =>  x = y`, witness `[a, x, y]`
    RightCancellative,
}

impl TripleLaw {
    pub const ALL: [TripleLaw; 7] = [
        TripleLaw::LeftInvertive,
        TripleLaw::Associative,
        TripleLaw::T3Left,
        TripleLaw::T3Right,
        TripleLaw::TransitivelyCommutative,
        TripleLaw::LeftCancellative,
        TripleLaw::RightCancellative,
    ];

    pub fn property(self) -> Property {
        match self {
            TripleLaw::LeftInvertive => Property::LeftInvertive,
            TripleLaw::Associative => Property::Associative,
            TripleLaw::T3Left => Property::T3Left,
            TripleLaw::T3Right => Property::T3Right,
            TripleLaw::TransitivelyCommutative => Property::TransitivelyCommutative,
            TripleLaw::LeftCancellative => Property::LeftCancellative,
            TripleLaw::RightCancellative => Property::RightCancellative,
        }
    }

    /// Whether the law holds at one triple.
    #[inline]
    pub fn holds_at<M: Magma + ?Sized>(self, m: &M, a: usize, b: usize, c: usize) -> bool {
        match self {
            TripleLaw::LeftInvertive => m.op(m.op(a, b), c) == m.op(m.op(c, b), a),
            TripleLaw::Associative => m.op(m.op(a, b), c) == m.op(a, m.op(b, c)),
            TripleLaw::T3Left => m.op(a, b) != m.op(a, c) || m.op(b, a) == m.op(c, a),
            TripleLaw::T3Right => m.op(b, a) != m.op(c, a) || m.op(a, b) == m.op(a, c),
            TripleLaw::TransitivelyCommutative => {
                m.op(a, b) != m.op(b, a) || m.op(b, c) != m.op(c, b) || m.op(a, c) == m.op(c, a)
            }
            TripleLaw::LeftCancellative => b == c || m.op(a, b) != m.op(a, c),
            TripleLaw::RightCancellative => b == c || m.op(b, a) != m.op(c, a),
        }
    }

    pub fn check<M: Magma + ?Sized>(self, m: &M, scan: Scan) -> Verdict<[usize; 3]> {
        match scan {
            Scan::Exhaustive => self.scan(m),
            Scan::Sampled { samples, seed } => self.sample(m, samples, seed),
        }
    }

    /// Exhaustive scan. The per-law loops keep the `(a, b)` prefix products
    /// out of the innermost loop.
    pub fn scan<M: Magma + ?Sized>(self, m: &M) -> Verdict<[usize; 3]> {
        let n = m.order();
        let found = match self {
            TripleLaw::LeftInvertive => scan_pairs(n, |a, b| {
                let ab = m.op(a, b);
                (0..n).find(|&c| m.op(ab, c) != m.op(m.op(c, b), a))
            }),
            TripleLaw::Associative => scan_pairs(n, |a, b| {
                let ab = m.op(a, b);
                (0..n).find(|&c| m.op(ab, c) != m.op(a, m.op(b, c)))
            }),
            TripleLaw::T3Left => scan_pairs(n, |a, b| {
                let (ab, ba) = (m.op(a, b), m.op(b, a));
                (0..n).find(|&c| ab == m.op(a, c) && ba != m.op(c, a))
            }),
            TripleLaw::T3Right => scan_pairs(n, |a, b| {
                let (ab, ba) = (m.op(a, b), m.op(b, a));
                (0..n).find(|&c| ba == m.op(c, a) && ab != m.op(a, c))
            }),
            TripleLaw::TransitivelyCommutative => scan_pairs(n, |a, b| {
                if m.op(a, b) != m.op(b, a) {
                    return None;
                }
                (0..n).find(|&c| m.op(b, c) == m.op(c, b) && m.op(a, c) != m.op(c, a))
            }),
            TripleLaw::LeftCancellative => scan_pairs(n, |a, x| {
                let ax = m.op(a, x);
                (0..n).find(|&y| y != x && ax == m.op(a, y))
            }),
            TripleLaw::RightCancellative => scan_pairs(n, |a, x| {
                let xa = m.op(x, a);
                (0..n).find(|&y| y != x && xa == m.op(y, a))
            }),
        };
        match found {
            Some(w) => Verdict::Fails(w),
            None => Verdict::Holds,
        }
    }

    /// Random-triple probe for orders where the cubic scan is too slow.
    /// Deterministic for a fixed seed.
    pub fn sample<M: Magma + ?Sized>(self, m: &M, samples: u64, seed: u64) -> Verdict<[usize; 3]> {
        let n = m.order();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let (a, b, c) = (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            );
            if !self.holds_at(m, a, b, c) {
                return Verdict::Fails([a, b, c]);
            }
        }
        Verdict::Holds
    }
}

#[inline]
fn scan_pairs(
    n: usize,
    mut inner: impl FnMut(usize, usize) -> Option<usize>,
) -> Option<[usize; 3]> {
    for a in 0..n {
        for b in 0..n {
            if let Some(c) = inner(a, b) {
                return Some([a, b, c]);
            }
        }
    }
    None
}

pub fn is_left_invertive<M: Magma + ?Sized>(m: &M) -> Verdict<[usize; 3]> {
    TripleLaw::LeftInvertive.scan(m)
}

pub fn is_associative<M: Magma + ?Sized>(m: &M) -> Verdict<[usize; 3]> {
    TripleLaw::Associative.scan(m)
}

pub fn is_commutative<M: Magma + ?Sized>(m: &M) -> Verdict<[usize; 2]> {
    let n = m.order();
    for a in 0..n {
        for b in a + 1..n {
            if m.op(a, b) != m.op(b, a) {
                return Verdict::Fails([a, b]);
            }
        }
    }
    Verdict::Holds
}

/// Idempotence `a*a = a` for every `a`. Whether the table is also left
/// invertive (and so an AG-band proper) is reported separately.
pub fn is_ag_band<M: Magma + ?Sized>(m: &M) -> Verdict<usize> {
    match (0..m.order()).find(|&a| m.op(a, a) != a) {
        Some(a) => Verdict::Fails(a),
        None => Verdict::Holds,
    }
}

pub fn is_t3_left<M: Magma + ?Sized>(m: &M) -> Verdict<[usize; 3]> {
    TripleLaw::T3Left.scan(m)
}

pub fn is_t3_right<M: Magma + ?Sized>(m: &M) -> Verdict<[usize; 3]> {
    TripleLaw::T3Right.scan(m)
}

pub fn is_transitively_commutative<M: Magma + ?Sized>(m: &M) -> Verdict<[usize; 3]> {
    TripleLaw::TransitivelyCommutative.scan(m)
}

pub fn is_left_cancellative<M: Magma + ?Sized>(m: &M) -> Verdict<[usize; 3]> {
    TripleLaw::LeftCancellative.scan(m)
}

pub fn is_right_cancellative<M: Magma + ?Sized>(m: &M) -> Verdict<[usize; 3]> {
    TripleLaw::RightCancellative.scan(m)
}

/// Least `e` with `e*x = x` for all `x`, or for every candidate `e` the
/// least `x` with `e*x != x`.
pub fn left_identity_search<M: Magma + ?Sized>(m: &M) -> Result<usize, Vec<usize>> {
    let n = m.order();
    let mut refutation = Vec::with_capacity(n);
    for e in 0..n {
        match (0..n).find(|&x| m.op(e, x) != x) {
            None => return Ok(e),
            Some(x) => refutation.push(x),
        }
    }
    Err(refutation)
}

pub fn find_left_identity<M: Magma + ?Sized>(m: &M) -> Option<usize> {
    left_identity_search(m).ok()
}

/// Result of the AG-group check: left invertive, a left identity `e`, and
/// for every `x` some `y` with `y*x = x*y = e`. Failures report the first
/// obligation that breaks, in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AgGroupVerdict {
    AgGroup {
        identity: usize,
        inverses: Vec<usize>,
    },
    NotLeftInvertive([usize; 3]),
    NoLeftIdentity(Vec<usize>),
    NoInverse {
        identity: usize,
        element: usize,
    },
}

impl AgGroupVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, AgGroupVerdict::AgGroup { .. })
    }

    /// Flat witness tuple: the left-invertive triple, the per-candidate
    /// left-identity refutation, or `[x]` for an element without inverse.
    pub fn counterexample(&self) -> Option<Vec<usize>> {
        match self {
            AgGroupVerdict::AgGroup { .. } => None,
            AgGroupVerdict::NotLeftInvertive(w) => Some(w.to_vec()),
            AgGroupVerdict::NoLeftIdentity(r) => Some(r.clone()),
            AgGroupVerdict::NoInverse { element, .. } => Some(vec![*element]),
        }
    }
}

pub fn is_ag_group<M: Magma + ?Sized>(m: &M) -> AgGroupVerdict {
    is_ag_group_with(m, Scan::Exhaustive)
}

/// [`is_ag_group`] with the cubic left-invertive obligation checked per
/// `scan`; identity and inverse searches are always exhaustive.
pub fn is_ag_group_with<M: Magma + ?Sized>(m: &M, scan: Scan) -> AgGroupVerdict {
    if let Verdict::Fails(w) = TripleLaw::LeftInvertive.check(m, scan) {
        return AgGroupVerdict::NotLeftInvertive(w);
    }
    let identity = match left_identity_search(m) {
        Ok(e) => e,
        Err(refutation) => return AgGroupVerdict::NoLeftIdentity(refutation),
    };
    let n = m.order();
    let mut inverses = Vec::with_capacity(n);
    for x in 0..n {
        match (0..n).find(|&y| m.op(y, x) == identity && m.op(x, y) == identity) {
            Some(y) => inverses.push(y),
            None => {
                return AgGroupVerdict::NoInverse {
                    identity,
                    element: x,
                }
            }
        }
    }
    AgGroupVerdict::AgGroup { identity, inverses }
}

/// Names of the boolean properties in a [`PropertyProfile`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    LeftInvertive,
    Associative,
    Commutative,
    AgBand,
    T3Left,
    T3Right,
    T3,
    TransitivelyCommutative,
    LeftCancellative,
    RightCancellative,
    Cancellative,
    AgGroup,
    AbelianGroup,
}

impl Property {
    pub const ALL: [Property; 13] = [
        Property::LeftInvertive,
        Property::Associative,
        Property::Commutative,
        Property::AgBand,
        Property::T3Left,
        Property::T3Right,
        Property::T3,
        Property::TransitivelyCommutative,
        Property::LeftCancellative,
        Property::RightCancellative,
        Property::Cancellative,
        Property::AgGroup,
        Property::AbelianGroup,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::LeftInvertive => "left_invertive",
            Property::Associative => "associative",
            Property::Commutative => "commutative",
            Property::AgBand => "ag_band",
            Property::T3Left => "t3_left",
            Property::T3Right => "t3_right",
            Property::T3 => "t3",
            Property::TransitivelyCommutative => "transitively_commutative",
            Property::LeftCancellative => "left_cancellative",
            Property::RightCancellative => "right_cancellative",
            Property::Cancellative => "cancellative",
            Property::AgGroup => "ag_group",
            Property::AbelianGroup => "abelian_group",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown property `{s}`"))
    }
}

/// Every property verdict for one table, with witnesses.
///
/// `counterexamples` holds an entry for each false property. Aggregate
/// properties (`t3`, `cancellative`, `abelian_group`) carry the witness of
/// their first failing component; `ag_group` carries the flat tuple from
/// [`AgGroupVerdict::counterexample`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyProfile {
    pub n: usize,
    pub left_invertive: bool,
    pub associative: bool,
    pub commutative: bool,
    pub ag_band: bool,
    pub t3_left: bool,
    pub t3_right: bool,
    pub t3: bool,
    pub transitively_commutative: bool,
    pub left_cancellative: bool,
    pub right_cancellative: bool,
    pub cancellative: bool,
    pub left_identity: Option<usize>,
    /// For each candidate `e`, the least `x` with `e*x != x`; set when no
    /// left identity exists.
    pub left_identity_refutation: Option<Vec<usize>>,
    pub ag_group: bool,
    /// `inverses[x]` is the least two-sided inverse of `x`; set when
    /// `ag_group` holds.
    pub inverses: Option<Vec<usize>>,
    pub abelian_group: bool,
    pub counterexamples: BTreeMap<Property, Vec<usize>>,
}

impl PropertyProfile {
    pub fn get(&self, p: Property) -> bool {
        match p {
            Property::LeftInvertive => self.left_invertive,
            Property::Associative => self.associative,
            Property::Commutative => self.commutative,
            Property::AgBand => self.ag_band,
            Property::T3Left => self.t3_left,
            Property::T3Right => self.t3_right,
            Property::T3 => self.t3,
            Property::TransitivelyCommutative => self.transitively_commutative,
            Property::LeftCancellative => self.left_cancellative,
            Property::RightCancellative => self.right_cancellative,
            Property::Cancellative => self.cancellative,
            Property::AgGroup => self.ag_group,
            Property::AbelianGroup => self.abelian_group,
        }
    }

    pub fn counterexample(&self, p: Property) -> Option<&[usize]> {
        self.counterexamples.get(&p).map(Vec::as_slice)
    }
}

/// Runs every checker once and assembles the profile.
pub fn classify<M: Magma + ?Sized>(m: &M) -> PropertyProfile {
    let mut counterexamples = BTreeMap::new();
    let mut record = |p: Property, w: Option<Vec<usize>>| -> bool {
        match w {
            Some(w) => {
                counterexamples.insert(p, w);
                false
            }
            None => true,
        }
    };
    let triple = |v: Verdict<[usize; 3]>| v.counterexample().map(|w| w.to_vec());

    let left_invertive = record(Property::LeftInvertive, triple(is_left_invertive(m)));
    let associative = record(Property::Associative, triple(is_associative(m)));
    let commutative = record(
        Property::Commutative,
        is_commutative(m).counterexample().map(|w| w.to_vec()),
    );
    let ag_band = record(
        Property::AgBand,
        is_ag_band(m).counterexample().map(|&a| vec![a]),
    );
    let t3_left = record(Property::T3Left, triple(is_t3_left(m)));
    let t3_right = record(Property::T3Right, triple(is_t3_right(m)));
    let transitively_commutative = record(
        Property::TransitivelyCommutative,
        triple(is_transitively_commutative(m)),
    );
    let left_cancellative = record(Property::LeftCancellative, triple(is_left_cancellative(m)));
    let right_cancellative = record(
        Property::RightCancellative,
        triple(is_right_cancellative(m)),
    );

    let (left_identity, left_identity_refutation) = match left_identity_search(m) {
        Ok(e) => (Some(e), None),
        Err(r) => (None, Some(r)),
    };
    let ag = is_ag_group(m);
    let ag_group = record(Property::AgGroup, ag.counterexample());
    let inverses = match ag {
        AgGroupVerdict::AgGroup { inverses, .. } => Some(inverses),
        _ => None,
    };

    let first_failure = |parts: &[Property], map: &BTreeMap<Property, Vec<usize>>| {
        parts.iter().find_map(|p| map.get(p).cloned())
    };
    for (aggregate, parts) in [
        (Property::T3, &[Property::T3Left, Property::T3Right][..]),
        (
            Property::Cancellative,
            &[Property::LeftCancellative, Property::RightCancellative][..],
        ),
        (
            Property::AbelianGroup,
            &[
                Property::AgGroup,
                Property::Commutative,
                Property::Associative,
            ][..],
        ),
    ] {
        if let Some(w) = first_failure(parts, &counterexamples) {
            counterexamples.insert(aggregate, w);
        }
    }

    PropertyProfile {
        n: m.order(),
        left_invertive,
        associative,
        commutative,
        ag_band,
        t3_left,
        t3_right,
        t3: t3_left && t3_right,
        transitively_commutative,
        left_cancellative,
        right_cancellative,
        cancellative: left_cancellative && right_cancellative,
        left_identity,
        left_identity_refutation,
        ag_group,
        inverses,
        abelian_group: ag_group && commutative && associative,
        counterexamples,
    }
}
