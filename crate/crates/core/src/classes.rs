//! Parameter classes `Z(n) ⊆ Z*(n) ⊆ Z**(n) ⊆ Z***(n)` and their AG
//! subclasses.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::groupoid::ModGroupoid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassVariant {
    /// `t, u` nonzero, distinct and coprime.
    Z,
    /// `t, u` nonzero and distinct.
    ZStar,
    /// `t, u` nonzero.
    ZStarStar,
    /// Unrestricted; the pair `(0, 0)` is excluded unless asked for.
    ZStarStarStar,
}

impl ClassVariant {
    pub const ALL: [ClassVariant; 4] = [
        ClassVariant::Z,
        ClassVariant::ZStar,
        ClassVariant::ZStarStar,
        ClassVariant::ZStarStarStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassVariant::Z => "z",
            ClassVariant::ZStar => "zstar",
            ClassVariant::ZStarStar => "zstarstar",
            ClassVariant::ZStarStarStar => "zstarstarstar",
        }
    }

    /// Membership of reduced coefficients `t, u < n`. `(0, 0)` counts as a
    /// member of `Z***` here; the enumerators drop it by default.
    pub fn contains(self, t: usize, u: usize) -> bool {
        let nonzero = t != 0 && u != 0;
        match self {
            ClassVariant::Z => nonzero && t != u && gcd(t, u) == 1,
            ClassVariant::ZStar => nonzero && t != u,
            ClassVariant::ZStarStar => nonzero,
            ClassVariant::ZStarStarStar => true,
        }
    }
}

impl fmt::Display for ClassVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::UnknownVariant(s.to_string()))
    }
}

/// The `(t, u)` pairs of one class at one modulus, sorted, no duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassListing {
    pub n: usize,
    pub variant: ClassVariant,
    pub pairs: Vec<(usize, usize)>,
    /// Every pair satisfies `t^2 ≡ u (mod n)`.
    pub ag_filtered: bool,
}

impl ClassListing {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, t: usize, u: usize) -> bool {
        self.pairs.binary_search(&(t, u)).is_ok()
    }

    pub fn groupoids(&self) -> impl Iterator<Item = ModGroupoid> + '_ {
        self.pairs.iter().map(move |&(t, u)| {
            ModGroupoid::new(self.n as i128, t as i128, u as i128)
                .expect("listing modulus is valid")
        })
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_modulus(n: usize) -> Result<()> {
    if n < ModGroupoid::MIN_ORDER {
        return Err(Error::ModulusTooSmall(n as i128));
    }
    if n > ModGroupoid::MAX_ORDER {
        return Err(Error::ModulusTooLarge(n as i128));
    }
    Ok(())
}

pub fn enumerate_class(n: usize, variant: ClassVariant) -> Result<ClassListing> {
    enumerate_class_with(n, variant, false)
}

/// [`enumerate_class`] with the degenerate pair `(0, 0)` optionally kept in
/// `Z***(n)`.
pub fn enumerate_class_with(
    n: usize,
    variant: ClassVariant,
    include_zero_pair: bool,
) -> Result<ClassListing> {
    check_modulus(n)?;
    let pairs = (0..n)
        .flat_map(|t| (0..n).map(move |u| (t, u)))
        .filter(|&(t, u)| variant.contains(t, u))
        .filter(|&pair| include_zero_pair || pair != (0, 0))
        .collect();
    Ok(ClassListing {
        n,
        variant,
        pairs,
        ag_filtered: false,
    })
}

/// `Z_AG^variant(n)`: class members with `t^2 ≡ u (mod n)`.
///
/// Each `t` admits exactly one `u`, so this walks `t` and keeps the pair if
/// it belongs to the class; the listing comes out sorted.
pub fn ag_members(n: usize, variant: ClassVariant) -> Result<ClassListing> {
    ag_members_with(n, variant, false)
}

pub fn ag_members_with(
    n: usize,
    variant: ClassVariant,
    include_zero_pair: bool,
) -> Result<ClassListing> {
    check_modulus(n)?;
    let pairs = (0..n)
        .map(|t| (t, square_mod(t, n)))
        .filter(|&(t, u)| variant.contains(t, u))
        .filter(|&pair| include_zero_pair || pair != (0, 0))
        .collect();
    Ok(ClassListing {
        n,
        variant,
        pairs,
        ag_filtered: true,
    })
}

/// Pairs `(t, 1)` with `t` nonzero and `t^2 ≡ 1 (mod n)`.
pub fn ag_group_members(n: usize) -> Result<ClassListing> {
    check_modulus(n)?;
    let pairs = (1..n)
        .filter(|&t| square_mod(t, n) == 1)
        .map(|t| (t, 1))
        .collect();
    Ok(ClassListing {
        n,
        variant: ClassVariant::ZStarStar,
        pairs,
        ag_filtered: true,
    })
}

pub(crate) fn square_mod(t: usize, n: usize) -> usize {
    ((t as u128 * t as u128) % n as u128) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z5_coprime_distinct() {
        let z = enumerate_class(5, ClassVariant::Z).unwrap();
        assert!(z.contains(2, 3));
        assert!(!z.contains(2, 4));
        assert!(!z.contains(2, 2));
        assert!(!z.contains(0, 1));
    }

    #[test]
    fn z4_unrestricted_includes_zero_coefficients() {
        let z = enumerate_class(4, ClassVariant::ZStarStarStar).unwrap();
        assert!(z.contains(2, 0));
        assert!(z.contains(3, 1));
        assert!(!z.contains(0, 0));
        assert_eq!(z.len(), 15);
        let with_zero = enumerate_class_with(4, ClassVariant::ZStarStarStar, true).unwrap();
        assert!(with_zero.contains(0, 0));
    }

    #[test]
    fn z3_nonzero_pairs() {
        let z = enumerate_class(3, ClassVariant::ZStarStar).unwrap();
        assert_eq!(z.pairs, vec![(1, 1), (1, 2), (2, 1), (2, 2)]);
    }

    #[test]
    fn ag_member_listings() {
        assert_eq!(
            ag_members(3, ClassVariant::ZStarStar).unwrap().pairs,
            vec![(1, 1), (2, 1)]
        );
        assert_eq!(
            ag_members(5, ClassVariant::ZStarStar).unwrap().pairs,
            vec![(1, 1), (2, 4), (3, 4), (4, 1)]
        );
        assert_eq!(
            ag_members(6, ClassVariant::ZStarStar).unwrap().pairs,
            vec![(1, 1), (2, 4), (3, 3), (4, 4), (5, 1)]
        );
        assert_eq!(
            ag_members(4, ClassVariant::ZStarStarStar).unwrap().pairs,
            vec![(1, 1), (2, 0), (3, 1)]
        );
        // Z₆(4,4) has t = u, so it is not in Z*.
        assert!(!ag_members(6, ClassVariant::ZStar).unwrap().contains(4, 4));
    }

    #[test]
    fn ag_group_listings() {
        assert_eq!(ag_group_members(3).unwrap().pairs, vec![(1, 1), (2, 1)]);
        assert_eq!(
            ag_group_members(8).unwrap().pairs,
            vec![(1, 1), (3, 1), (5, 1), (7, 1)]
        );
        assert_eq!(ag_group_members(5).unwrap().pairs, vec![(1, 1), (4, 1)]);
    }

    #[test]
    fn rejects_small_modulus() {
        assert!(enumerate_class(2, ClassVariant::Z).is_err());
        assert!(ag_members(1, ClassVariant::ZStar).is_err());
        assert!(ag_group_members(0).is_err());
    }

    #[test]
    fn variant_names_parse() {
        for v in ClassVariant::ALL {
            assert_eq!(v.name().parse::<ClassVariant>(), Ok(v));
        }
        assert_eq!(
            "zz".parse::<ClassVariant>(),
            Err(Error::UnknownVariant("zz".into()))
        );
    }

    #[test]
    fn chain_inclusion_and_cardinality() {
        for n in 3..=40 {
            let listings: Vec<_> = ClassVariant::ALL
                .iter()
                .map(|&v| enumerate_class(n, v).unwrap())
                .collect();
            for pair in listings.windows(2) {
                assert!(pair[0].pairs.iter().all(|&(t, u)| pair[1].contains(t, u)));
            }
            for l in &listings {
                assert!(l.pairs.windows(2).all(|w| w[0] < w[1]));
            }
            let expected = (1..n).filter(|&t| (t * t) % n != 0).count();
            assert_eq!(
                ag_members(n, ClassVariant::ZStarStar).unwrap().len(),
                expected
            );
            let ag_group = ag_group_members(n).unwrap();
            assert!(ag_group.contains(1, 1) && ag_group.contains(n - 1, 1));
        }
    }
}
