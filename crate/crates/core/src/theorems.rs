//! Registry of the construction theorems for `Z_n(t,u)` and the harness that
//! checks them by finite instantiation.
//!
//! For every modulus in a range, [`verify`] enumerates the pairs meeting a
//! theorem's hypothesis and runs the brute-force checker for its conclusion
//! on each one. Cubic checks run exhaustively up to
//! [`VerifyConfig::exhaustive_cap`] and by seeded random sampling above it.
//! [`falsify_converse`] searches outside the hypothesis, to show that a
//! hypothesis is not vacuous or that a conclusion does not hold beyond it.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::classes::{ag_group_members, ag_members, enumerate_class, ClassVariant};
use crate::error::{Error, Result};
use crate::groupoid::{Magma, ModGroupoid};
use crate::properties::{
    is_ag_band, is_ag_group_with, is_commutative, AgGroupVerdict, Property, Scan, TripleLaw,
    Verdict,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// `t^2 ≡ u` makes `Z_n(t,u)` left invertive.
    ConstructAg,
    /// In `Z***_AG(n)`, `t = u` gives a commutative semigroup.
    TuEqualCommSemigroup,
    /// In `Z**_AG(n)`, `t = u` gives a T³-AG-groupoid.
    TuEqualT3,
    /// For prime `n`, every member of `Z*_AG(n)` is T³.
    PrimeT3,
    /// Every member of `Z*_AG(n)` is transitively commutative.
    TransComm,
    /// For prime `n`, every member of `Z*_AG(n)` is cancellative.
    PrimeCancellative,
    /// In `Z***_AG(n)`, `t + u ≡ 1` gives an AG-band.
    SumOneAgBand,
    /// `Z_n(t,1)` with `t^2 ≡ 1` is an AG-group with left identity 0 and
    /// inverse `x -> -t*x`.
    ConstructAgGroup,
    /// `Z_n(1,1)` is an abelian group.
    TOneAbelian,
    /// `Z_n(n-1,1)` is an AG-group.
    NMinus1AgGroup,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::ConstructAg,
        TheoremId::TuEqualCommSemigroup,
        TheoremId::TuEqualT3,
        TheoremId::PrimeT3,
        TheoremId::TransComm,
        TheoremId::PrimeCancellative,
        TheoremId::SumOneAgBand,
        TheoremId::ConstructAgGroup,
        TheoremId::TOneAbelian,
        TheoremId::NMinus1AgGroup,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::ConstructAg => "construct_ag",
            TheoremId::TuEqualCommSemigroup => "tu_equal_comm_semigroup",
            TheoremId::TuEqualT3 => "tu_equal_t3",
            TheoremId::PrimeT3 => "prime_t3",
            TheoremId::TransComm => "trans_comm",
            TheoremId::PrimeCancellative => "prime_cancellative",
            TheoremId::SumOneAgBand => "sum_one_agband",
            TheoremId::ConstructAgGroup => "construct_aggroup",
            TheoremId::TOneAbelian => "t_one_abelian",
            TheoremId::NMinus1AgGroup => "nminus1_aggroup",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::ConstructAg => "Z_n(t,u) in Z***(n) with t^2 = u (mod n) is an AG-groupoid",
            TheoremId::TuEqualCommSemigroup => {
                "members of Z***_AG(n) with t = u are commutative semigroups"
            }
            TheoremId::TuEqualT3 => "members of Z**_AG(n) with t = u are T3-AG-groupoids",
            TheoremId::PrimeT3 => "for prime n, members of Z*_AG(n) are T3-AG-groupoids",
            TheoremId::TransComm => "members of Z*_AG(n) are transitively commutative",
            TheoremId::PrimeCancellative => "for prime n, members of Z*_AG(n) are cancellative",
            TheoremId::SumOneAgBand => "members of Z***_AG(n) with t + u = 1 (mod n) are AG-bands",
            TheoremId::ConstructAgGroup => {
                "Z_n(t,1) with t^2 = 1 (mod n) is an AG-group, left identity 0, inverse -t*x"
            }
            TheoremId::TOneAbelian => "Z_n(1,1) is an abelian group",
            TheoremId::NMinus1AgGroup => "Z_n(n-1,1) is an AG-group",
        }
    }

    /// Pairs `(t, u)` meeting the hypothesis at modulus `n`, sorted.
    pub fn hypothesis(self, n: usize) -> Result<Vec<(usize, usize)>> {
        let pairs = match self {
            TheoremId::ConstructAg => ag_members(n, ClassVariant::ZStarStarStar)?.pairs,
            TheoremId::TuEqualCommSemigroup => {
                retain(ag_members(n, ClassVariant::ZStarStarStar)?.pairs, |t, u| {
                    t == u
                })
            }
            TheoremId::TuEqualT3 => {
                retain(ag_members(n, ClassVariant::ZStarStar)?.pairs, |t, u| t == u)
            }
            TheoremId::PrimeT3 | TheoremId::PrimeCancellative => {
                let members = ag_members(n, ClassVariant::ZStar)?.pairs;
                if is_prime(n) {
                    members
                } else {
                    Vec::new()
                }
            }
            TheoremId::TransComm => ag_members(n, ClassVariant::ZStar)?.pairs,
            TheoremId::SumOneAgBand => {
                retain(ag_members(n, ClassVariant::ZStarStarStar)?.pairs, |t, u| {
                    (t + u) % n == 1
                })
            }
            TheoremId::ConstructAgGroup => ag_group_members(n)?.pairs,
            TheoremId::TOneAbelian => vec![(1, 1)],
            TheoremId::NMinus1AgGroup => vec![(n - 1, 1)],
        };
        Ok(pairs)
    }

    /// Checks the conclusion on one instance. Returns the first broken
    /// obligation with its witness.
    fn conclusion<M: Magma + ?Sized>(
        self,
        g: &ModGroupoid,
        m: &M,
        scan: Scan,
    ) -> Option<(Obligation, Vec<usize>)> {
        match self {
            TheoremId::ConstructAg => law(m, TripleLaw::LeftInvertive, scan),
            TheoremId::TuEqualCommSemigroup => {
                commutative(m).or_else(|| law(m, TripleLaw::Associative, scan))
            }
            TheoremId::TuEqualT3 | TheoremId::PrimeT3 => {
                law(m, TripleLaw::T3Left, scan).or_else(|| law(m, TripleLaw::T3Right, scan))
            }
            TheoremId::TransComm => law(m, TripleLaw::TransitivelyCommutative, scan),
            TheoremId::PrimeCancellative => law(m, TripleLaw::LeftCancellative, scan)
                .or_else(|| law(m, TripleLaw::RightCancellative, scan)),
            TheoremId::SumOneAgBand => law(m, TripleLaw::LeftInvertive, scan).or_else(|| {
                is_ag_band(m)
                    .counterexample()
                    .map(|&a| (Obligation::Law(Property::AgBand), vec![a]))
            }),
            TheoremId::ConstructAgGroup => ag_group_with_formula(g, m, scan),
            TheoremId::TOneAbelian => ag_group(m, scan)
                .or_else(|| commutative(m))
                .or_else(|| law(m, TripleLaw::Associative, scan)),
            TheoremId::NMinus1AgGroup => ag_group(m, scan),
        }
    }

    /// Instances searched by [`falsify_converse`], and whether a finding is
    /// an instance where the conclusion fails (a weakened hypothesis) or
    /// one where it holds anyway (the converse).
    fn converse_probe(self, n: usize) -> Result<(Probe, Vec<(usize, usize)>)> {
        let not_ag_group_form = |t: usize, u: usize| !(u == 1 && t != 0 && (t * t) % n == 1);
        let probe = match self {
            TheoremId::ConstructAg | TheoremId::NMinus1AgGroup => {
                return Err(Error::NoConverse(self.name()))
            }
            TheoremId::TuEqualCommSemigroup => (
                Probe::Converse,
                retain(ag_members(n, ClassVariant::ZStarStarStar)?.pairs, |t, u| {
                    t != u
                }),
            ),
            TheoremId::TuEqualT3 => (
                Probe::Weakened,
                retain(ag_members(n, ClassVariant::ZStarStar)?.pairs, |t, u| t != u),
            ),
            TheoremId::PrimeT3 | TheoremId::PrimeCancellative => {
                let pairs = if is_prime(n) {
                    Vec::new()
                } else {
                    ag_members(n, ClassVariant::ZStar)?.pairs
                };
                (Probe::Weakened, pairs)
            }
            TheoremId::TransComm => (
                Probe::Weakened,
                retain(
                    enumerate_class(n, ClassVariant::ZStarStarStar)?.pairs,
                    |t, u| (t * t) % n != u,
                ),
            ),
            TheoremId::SumOneAgBand => (
                Probe::Converse,
                retain(ag_members(n, ClassVariant::ZStarStarStar)?.pairs, |t, u| {
                    (t + u) % n != 1
                }),
            ),
            TheoremId::ConstructAgGroup => (
                Probe::Converse,
                retain(
                    ag_members(n, ClassVariant::ZStarStarStar)?.pairs,
                    not_ag_group_form,
                ),
            ),
            TheoremId::TOneAbelian => (
                Probe::Converse,
                retain(ag_members(n, ClassVariant::ZStarStarStar)?.pairs, |t, _| {
                    t != 1
                }),
            ),
        };
        Ok(probe)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Probe {
    Weakened,
    Converse,
}

fn retain(
    mut pairs: Vec<(usize, usize)>,
    keep: impl Fn(usize, usize) -> bool,
) -> Vec<(usize, usize)> {
    pairs.retain(|&(t, u)| keep(t, u));
    pairs
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    (2..)
        .take_while(|d| d * d <= n)
        .all(|d| !n.is_multiple_of(d))
}

fn law<M: Magma + ?Sized>(m: &M, law: TripleLaw, scan: Scan) -> Option<(Obligation, Vec<usize>)> {
    match law.check(m, scan) {
        Verdict::Holds => None,
        Verdict::Fails(w) => Some((Obligation::Law(law.property()), w.to_vec())),
    }
}

fn commutative<M: Magma + ?Sized>(m: &M) -> Option<(Obligation, Vec<usize>)> {
    is_commutative(m)
        .counterexample()
        .map(|w| (Obligation::Law(Property::Commutative), w.to_vec()))
}

fn ag_group<M: Magma + ?Sized>(m: &M, scan: Scan) -> Option<(Obligation, Vec<usize>)> {
    let verdict = is_ag_group_with(m, scan);
    verdict
        .counterexample()
        .map(|w| (Obligation::Law(Property::AgGroup), w))
}

fn ag_group_with_formula<M: Magma + ?Sized>(
    g: &ModGroupoid,
    m: &M,
    scan: Scan,
) -> Option<(Obligation, Vec<usize>)> {
    let (identity, inverses) = match is_ag_group_with(m, scan) {
        AgGroupVerdict::AgGroup { identity, inverses } => (identity, inverses),
        other => {
            return other
                .counterexample()
                .map(|w| (Obligation::Law(Property::AgGroup), w))
        }
    };
    if identity != 0 {
        return Some((Obligation::LeftIdentityIsZero, vec![identity]));
    }
    let n = g.n();
    for (x, &found) in inverses.iter().enumerate() {
        let formula = (n - (g.t() * x) % n) % n;
        if found != formula || m.op(formula, x) != 0 || m.op(x, formula) != 0 {
            return Some((Obligation::InverseFormula, vec![x, found]));
        }
    }
    None
}

/// Inclusive range of moduli.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl NRange {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidRange {
                lo,
                hi,
                reason: "empty",
            });
        }
        if lo < ModGroupoid::MIN_ORDER {
            return Err(Error::InvalidRange {
                lo,
                hi,
                reason: "moduli start at 3",
            });
        }
        Ok(NRange { lo, hi })
    }

    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest modulus at which cubic checks are exhaustive.
    pub exhaustive_cap: usize,
    /// Random triples per cubic check above the cap.
    pub samples: u64,
    pub seed: u64,
    /// Violations kept per report; `instances_checked` still counts all.
    pub max_violations: usize,
    /// Upper bound accepted for any range.
    pub max_n: usize,
    pub parallel: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            exhaustive_cap: 128,
            samples: 1_000_000,
            seed: 0x5eed_a6a6_0001,
            max_violations: 10,
            max_n: 1 << 16,
            parallel: true,
        }
    }
}

impl VerifyConfig {
    fn check_range(&self, range: NRange) -> Result<()> {
        if range.hi > self.max_n {
            return Err(Error::InvalidRange {
                lo: range.lo,
                hi: range.hi,
                reason: "exceeds the configured maximum modulus",
            });
        }
        Ok(())
    }

    fn scan_for(&self, g: &ModGroupoid) -> Scan {
        if g.n() <= self.exhaustive_cap {
            Scan::Exhaustive
        } else {
            Scan::Sampled {
                samples: self.samples,
                seed: instance_seed(self.seed, g),
            }
        }
    }
}

fn instance_seed(seed: u64, g: &ModGroupoid) -> u64 {
    [g.n(), g.t(), g.u()]
        .into_iter()
        .fold(seed, |acc, x| splitmix64(acc ^ x as u64))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d4_9bb1_1331_11eb);
    z ^ (z >> 31)
}

/// What a violation broke.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obligation {
    /// A property checker failed; the witness is that checker's
    /// counterexample.
    Law(Property),
    /// The AG-group's left identity was not 0; witness `[identity]`.
    LeftIdentityIsZero,
    /// The inverse of `x` was not `-t*x mod n`; witness `[x, found]`.
    InverseFormula,
    /// Converse search: the conclusion held without the hypothesis.
    /// Witness is empty.
    ConclusionWithoutHypothesis,
}

impl fmt::Display for Obligation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obligation::Law(p) => f.write_str(p.name()),
            Obligation::LeftIdentityIsZero => f.write_str("left_identity_is_zero"),
            Obligation::InverseFormula => f.write_str("inverse_formula"),
            Obligation::ConclusionWithoutHypothesis => f.write_str("conclusion_without_hypothesis"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub n: usize,
    pub t: usize,
    pub u: usize,
    pub obligation: Obligation,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub id: TheoremId,
    pub n_range: NRange,
    /// Set for reports produced by [`falsify_converse`].
    pub converse: bool,
    pub instances_checked: u64,
    /// Instances whose cubic checks were sampled rather than exhaustive.
    pub instances_sampled: u64,
    pub violations: Vec<Violation>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

struct Cell {
    checked: u64,
    sampled: u64,
    violations: Vec<Violation>,
}

fn run_cell(id: TheoremId, n: usize, config: &VerifyConfig, converse: bool) -> Result<Cell> {
    let (probe, pairs) = if converse {
        id.converse_probe(n)?
    } else {
        (Probe::Weakened, id.hypothesis(n)?)
    };
    let mut cell = Cell {
        checked: 0,
        sampled: 0,
        violations: Vec::new(),
    };
    for (t, u) in pairs {
        let g = ModGroupoid::new(n as i128, t as i128, u as i128)?;
        let scan = config.scan_for(&g);
        let failure = match scan {
            Scan::Exhaustive => id.conclusion(&g, &g.cayley_table(), scan),
            Scan::Sampled { .. } => {
                cell.sampled += 1;
                id.conclusion(&g, &g, scan)
            }
        };
        cell.checked += 1;
        let found = match (probe, failure) {
            (Probe::Weakened, Some((obligation, witness))) => Some((obligation, witness)),
            (Probe::Converse, None) => Some((Obligation::ConclusionWithoutHypothesis, Vec::new())),
            _ => None,
        };
        if let Some((obligation, witness)) = found {
            if cell.violations.len() < config.max_violations {
                cell.violations.push(Violation {
                    n,
                    t,
                    u,
                    obligation,
                    witness,
                });
            }
        }
    }
    Ok(cell)
}

fn run(
    ids: &[TheoremId],
    range: NRange,
    config: &VerifyConfig,
    converse: bool,
) -> Result<Vec<TheoremReport>> {
    config.check_range(range)?;
    if converse {
        for &id in ids {
            id.converse_probe(range.lo)?;
        }
    }
    let cells: Vec<(TheoremId, usize)> = ids
        .iter()
        .flat_map(|&id| range.iter().map(move |n| (id, n)))
        .collect();
    let results: Vec<Result<Cell>> = if config.parallel {
        cells
            .par_iter()
            .map(|&(id, n)| run_cell(id, n, config, converse))
            .collect()
    } else {
        cells
            .iter()
            .map(|&(id, n)| run_cell(id, n, config, converse))
            .collect()
    };

    let mut reports: Vec<TheoremReport> = ids
        .iter()
        .map(|&id| TheoremReport {
            id,
            n_range: range,
            converse,
            instances_checked: 0,
            instances_sampled: 0,
            violations: Vec::new(),
        })
        .collect();
    for ((id, _), cell) in cells.iter().zip(results) {
        let cell = cell?;
        let report = reports
            .iter_mut()
            .find(|r| r.id == *id)
            .expect("report per id");
        report.instances_checked += cell.checked;
        report.instances_sampled += cell.sampled;
        let room = config
            .max_violations
            .saturating_sub(report.violations.len());
        report
            .violations
            .extend(cell.violations.into_iter().take(room));
    }
    Ok(reports)
}

/// Instantiates `id`'s hypothesis for every modulus in `range` and checks
/// its conclusion on each instance.
pub fn verify(id: TheoremId, range: NRange, config: &VerifyConfig) -> Result<TheoremReport> {
    Ok(run(&[id], range, config, false)?.remove(0))
}

/// Searches outside `id`'s hypothesis.
///
/// For `tu_equal_t3`, `prime_t3`, `prime_cancellative` and `trans_comm` the
/// hypothesis is weakened (drop `t = u`, drop primality, drop `t^2 ≡ u`) and
/// each instance whose conclusion fails is reported. For
/// `tu_equal_comm_semigroup`, `sum_one_agband`, `construct_aggroup` and
/// `t_one_abelian` the search runs over AG members violating the hypothesis
/// and reports those where the conclusion still holds. `construct_ag` and
/// `nminus1_aggroup` have no converse search.
pub fn falsify_converse(
    id: TheoremId,
    range: NRange,
    config: &VerifyConfig,
) -> Result<TheoremReport> {
    Ok(run(&[id], range, config, true)?.remove(0))
}

/// [`verify`] for every registered theorem, in registry order.
pub fn verify_all(range: NRange, config: &VerifyConfig) -> Result<Vec<TheoremReport>> {
    run(&TheoremId::ALL, range, config, false)
}
