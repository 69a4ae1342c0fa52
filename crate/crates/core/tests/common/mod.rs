//! Test-only oracle: law definitions evaluated directly on a row list,
//! written independently of the library's scan loops.

#![allow(dead_code)]

use zn_ag::{Property, PropertyProfile};

pub struct Oracle {
    pub rows: Vec<Vec<usize>>,
}

impl Oracle {
    pub fn modular(n: usize, t: usize, u: usize) -> Self {
        let rows = (0..n)
            .map(|a| (0..n).map(|b| (t * a + u * b) % n).collect())
            .collect();
        Oracle { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.rows[a][b]
    }

    /// Whether the named law holds at the given tuple. Panics on a tuple of
    /// the wrong arity.
    pub fn law_at(&self, p: Property, w: &[usize]) -> bool {
        let m = |a, b| self.op(a, b);
        match (p, w) {
            (Property::LeftInvertive, &[a, b, c]) => m(m(a, b), c) == m(m(c, b), a),
            (Property::Associative, &[a, b, c]) => m(m(a, b), c) == m(a, m(b, c)),
            (Property::Commutative, &[a, b]) => m(a, b) == m(b, a),
            (Property::AgBand, &[a]) => m(a, a) == a,
            (Property::T3Left, &[a, b, c]) => !(m(a, b) == m(a, c)) || m(b, a) == m(c, a),
            (Property::T3Right, &[a, b, c]) => !(m(b, a) == m(c, a)) || m(a, b) == m(a, c),
            (Property::TransitivelyCommutative, &[a, b, c]) => {
                !(m(a, b) == m(b, a) && m(b, c) == m(c, b)) || m(a, c) == m(c, a)
            }
            (Property::LeftCancellative, &[a, x, y]) => !(m(a, x) == m(a, y)) || x == y,
            (Property::RightCancellative, &[a, x, y]) => !(m(x, a) == m(y, a)) || x == y,
            _ => panic!("tuple {w:?} does not fit {p}"),
        }
    }

    fn arity(p: Property) -> usize {
        match p {
            Property::AgBand => 1,
            Property::Commutative => 2,
            _ => 3,
        }
    }

    /// Verdict for a simple (non-aggregate) law by full enumeration.
    pub fn law_holds(&self, p: Property) -> bool {
        let n = self.n();
        match Self::arity(p) {
            1 => (0..n).all(|a| self.law_at(p, &[a])),
            2 => (0..n).all(|a| (0..n).all(|b| self.law_at(p, &[a, b]))),
            _ => (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.law_at(p, &[a, b, c])))),
        }
    }

    pub fn left_identities(&self) -> Vec<usize> {
        let n = self.n();
        (0..n)
            .filter(|&e| (0..n).all(|x| self.op(e, x) == x))
            .collect()
    }

    pub fn has_inverse(&self, e: usize, x: usize) -> bool {
        (0..self.n()).any(|y| self.op(y, x) == e && self.op(x, y) == e)
    }

    pub fn ag_group(&self) -> bool {
        if !self.law_holds(Property::LeftInvertive) {
            return false;
        }
        match self.left_identities().first() {
            Some(&e) => (0..self.n()).all(|x| self.has_inverse(e, x)),
            None => false,
        }
    }
}

const SIMPLE: [Property; 9] = [
    Property::LeftInvertive,
    Property::Associative,
    Property::Commutative,
    Property::AgBand,
    Property::T3Left,
    Property::T3Right,
    Property::TransitivelyCommutative,
    Property::LeftCancellative,
    Property::RightCancellative,
];

/// Checks every verdict of `profile` against the oracle and replays every
/// witness and counterexample. Returns a description of the first mismatch.
pub fn replay_profile(profile: &PropertyProfile, oracle: &Oracle) -> Result<(), String> {
    let n = oracle.n();
    if profile.n != n {
        return Err(format!("profile order {} vs table order {n}", profile.n));
    }
    for p in Property::ALL {
        let holds = profile.get(p);
        let cx = profile.counterexample(p);
        if holds == cx.is_some() {
            return Err(format!("{p}: verdict {holds} but counterexample {cx:?}"));
        }
    }
    for p in SIMPLE {
        if profile.get(p) != oracle.law_holds(p) {
            return Err(format!("{p}: verdict disagrees with enumeration"));
        }
        if let Some(w) = profile.counterexample(p) {
            if oracle.law_at(p, w) {
                return Err(format!(
                    "{p}: counterexample {w:?} does not violate the law"
                ));
            }
        }
    }
    for (aggregate, parts) in [
        (Property::T3, &[Property::T3Left, Property::T3Right][..]),
        (
            Property::Cancellative,
            &[Property::LeftCancellative, Property::RightCancellative][..],
        ),
    ] {
        let expected = parts.iter().all(|&q| profile.get(q));
        if profile.get(aggregate) != expected {
            return Err(format!("{aggregate}: not the conjunction of its parts"));
        }
        if let Some(w) = profile.counterexample(aggregate) {
            let first = parts.iter().find(|&&q| !profile.get(q)).unwrap();
            if oracle.law_at(*first, w) {
                return Err(format!(
                    "{aggregate}: counterexample {w:?} does not refute {first}"
                ));
            }
        }
    }

    let identities = oracle.left_identities();
    if profile.left_identity != identities.first().copied() {
        return Err(format!(
            "left identity {:?} vs {identities:?}",
            profile.left_identity
        ));
    }
    match (&profile.left_identity_refutation, profile.left_identity) {
        (Some(r), None) => {
            if r.len() != n || (0..n).any(|e| oracle.op(e, r[e]) == r[e]) {
                return Err(format!("left identity refutation {r:?} is not valid"));
            }
        }
        (None, Some(_)) => {}
        other => return Err(format!("left identity fields inconsistent: {other:?}")),
    }

    if profile.ag_group != oracle.ag_group() {
        return Err("ag_group verdict disagrees with enumeration".into());
    }
    match (&profile.inverses, profile.ag_group) {
        (Some(inv), true) => {
            let e = profile.left_identity.ok_or("ag_group without identity")?;
            for (x, &y) in inv.iter().enumerate() {
                if oracle.op(y, x) != e || oracle.op(x, y) != e {
                    return Err(format!("inverse {y} of {x} is not two-sided"));
                }
            }
        }
        (None, false) => {
            let w = profile.counterexample(Property::AgGroup).unwrap();
            if !profile.left_invertive {
                if oracle.law_at(Property::LeftInvertive, w) {
                    return Err(format!("ag_group counterexample {w:?} is left invertive"));
                }
            } else if profile.left_identity.is_none() {
                if w != profile.left_identity_refutation.as_deref().unwrap() {
                    return Err("ag_group counterexample is not the identity refutation".into());
                }
            } else if w.len() != 1 || oracle.has_inverse(profile.left_identity.unwrap(), w[0]) {
                return Err(format!("ag_group counterexample {w:?} has an inverse"));
            }
        }
        other => return Err(format!("inverse map inconsistent with ag_group: {other:?}")),
    }

    let abelian = profile.ag_group && profile.commutative && profile.associative;
    if profile.abelian_group != abelian {
        return Err("abelian_group is not the conjunction of its parts".into());
    }
    if let Some(w) = profile.counterexample(Property::AbelianGroup) {
        let first = [
            Property::AgGroup,
            Property::Commutative,
            Property::Associative,
        ]
        .into_iter()
        .find(|&q| !profile.get(q))
        .unwrap();
        if profile.counterexample(first) != Some(w) {
            return Err(format!(
                "abelian_group counterexample does not come from {first}"
            ));
        }
    }
    Ok(())
}
