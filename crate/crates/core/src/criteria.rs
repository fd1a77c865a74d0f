//! Sufficient conditions for solvability expressed through `ψ_k`.
//!
//! Each checker compares two exact rationals and either certifies the group
//! solvable or reports that the condition failed (which proves nothing).
//! [`run_all`] evaluates every checker and, for groups small enough, compares
//! the outcome against the derived-series oracle.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;

use crate::group::FiniteGroup;
use crate::psi::{
    self, d_k, euler_phi, integer, largest_prime_divisor, order_spectrum, prime_divisors,
    psi_k_cyclic, ratio, smallest_prime_divisor, ExactRational, OrderSpectrum,
};

/// Default `k` window scanned by the `ψ_k` criteria.
pub const DEFAULT_K_WINDOW: RangeInclusive<u32> = 4..=32;

/// Groups up to this order get the derived-series cross-check by default.
pub const DEFAULT_ORACLE_CAP: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CriterionId {
    /// `ψ(G) > ψ(Z_n) / 6.68`
    Hlm2018,
    /// `ψ(G) > (211/1617)·ψ(Z_n)`
    AzadKhosravi,
    /// `ψ(G) < n·ψ(A_5)/60`
    AverageOrder,
    /// `ψ(G)/n² > 211/3600`
    Tarnauceanu,
    /// `ψ_k(G) > D_k·ψ_k(Z_n)` for some admissible `k`
    MainPsiK,
    /// `ψ(G) ≥ (3n/5)·φ(n)`
    PhiBound,
    /// `ψ_k(G) ≥ (3n^k / 5q^(k−1))·φ(n)`
    PhiBoundK,
    /// `|G|` has at most two prime divisors
    Burnside,
    /// `ψ_k(G)` above the largest value a non-cyclic group can reach
    CyclicDetect,
}

impl CriterionId {
    pub const ALL: [CriterionId; 9] = [
        CriterionId::Hlm2018,
        CriterionId::AzadKhosravi,
        CriterionId::AverageOrder,
        CriterionId::Tarnauceanu,
        CriterionId::MainPsiK,
        CriterionId::PhiBound,
        CriterionId::PhiBoundK,
        CriterionId::Burnside,
        CriterionId::CyclicDetect,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CriterionId::Hlm2018 => "HLM2018",
            CriterionId::AzadKhosravi => "AzadKhosravi",
            CriterionId::AverageOrder => "AverageOrder",
            CriterionId::Tarnauceanu => "Tarnauceanu",
            CriterionId::MainPsiK => "MainPsiK",
            CriterionId::PhiBound => "PhiBound",
            CriterionId::PhiBoundK => "PhiBoundK",
            CriterionId::Burnside => "Burnside",
            CriterionId::CyclicDetect => "CyclicDetect",
        }
    }
}

impl fmt::Display for CriterionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Relation `lhs ? rhs` that certifies solvability.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    StrictlyGreater,
    StrictlyLess,
    AtLeast,
}

impl Relation {
    pub fn holds(self, lhs: &ExactRational, rhs: &ExactRational) -> bool {
        use std::cmp::Ordering::*;
        matches!(
            (self, psi::compare(lhs, rhs)),
            (Relation::StrictlyGreater, Greater)
                | (Relation::StrictlyLess, Less)
                | (Relation::AtLeast, Greater | Equal)
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Relation::StrictlyGreater => "strictly_greater",
            Relation::StrictlyLess => "strictly_less",
            Relation::AtLeast => "at_least",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    SolvableCertified,
    /// Hypotheses met, inequality failed.
    Inconclusive,
    /// Hypotheses not met (or nothing left to scan).
    Inapplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::SolvableCertified => "SolvableCertified",
            Verdict::Inconclusive => "Inconclusive",
            Verdict::Inapplicable => "Inapplicable",
        }
    }

    pub fn is_certified(self) -> bool {
        self == Verdict::SolvableCertified
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One criterion applied to one group.
///
/// `k_used` is the exponent at which `lhs` and `rhs` were evaluated. For an
/// [`Verdict::Inapplicable`] outcome both sides are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionVerdict {
    pub criterion: CriterionId,
    pub group_name: String,
    pub n: u64,
    pub k_used: Option<u32>,
    pub lhs: ExactRational,
    pub rhs: ExactRational,
    pub relation: Relation,
    pub verdict: Verdict,
    pub note: Option<String>,
}

/// What the checkers need to know about a group: its name and order spectrum.
#[derive(Clone, Debug)]
pub struct GroupProfile {
    pub name: String,
    pub spectrum: OrderSpectrum,
}

impl GroupProfile {
    pub fn new(name: impl Into<String>, spectrum: OrderSpectrum) -> Self {
        Self {
            name: name.into(),
            spectrum,
        }
    }

    pub fn of(group: &FiniteGroup) -> Self {
        Self::new(group.name(), order_spectrum(group))
    }

    pub fn n(&self) -> u64 {
        self.spectrum.group_order()
    }

    fn psi_k(&self, k: u32) -> ExactRational {
        integer(BigInt::from(self.spectrum.psi_k(k).expect("k >= 1")))
    }

    fn psi_cyclic(&self, k: u32) -> ExactRational {
        integer(BigInt::from(
            psi_k_cyclic(self.n(), k).expect("k >= 1, n >= 1"),
        ))
    }

    fn decide(
        &self,
        criterion: CriterionId,
        k_used: Option<u32>,
        lhs: ExactRational,
        rhs: ExactRational,
        relation: Relation,
    ) -> CriterionVerdict {
        let verdict = if relation.holds(&lhs, &rhs) {
            Verdict::SolvableCertified
        } else {
            Verdict::Inconclusive
        };
        CriterionVerdict {
            criterion,
            group_name: self.name.clone(),
            n: self.n(),
            k_used,
            lhs,
            rhs,
            relation,
            verdict,
            note: None,
        }
    }

    fn inapplicable(
        &self,
        criterion: CriterionId,
        relation: Relation,
        note: String,
    ) -> CriterionVerdict {
        CriterionVerdict {
            criterion,
            group_name: self.name.clone(),
            n: self.n(),
            k_used: None,
            lhs: psi::zero(),
            rhs: psi::zero(),
            relation,
            verdict: Verdict::Inapplicable,
            note: Some(note),
        }
    }
}

/// `ψ`-thresholds of the four first-power criteria for a group of order `n`,
/// i.e. the value `ψ(G)` is compared against.
pub fn psi_threshold(criterion: CriterionId, n: u64) -> Option<ExactRational> {
    let psi_zn = || integer(BigInt::from(psi_k_cyclic(n, 1).expect("n >= 1")));
    let n = integer(n);
    Some(match criterion {
        CriterionId::Hlm2018 => psi_zn() * ratio(25, 167),
        CriterionId::AzadKhosravi => psi_zn() * ratio(211, 1617),
        CriterionId::AverageOrder => n * ratio(211, 60),
        CriterionId::Tarnauceanu => n.clone() * n * ratio(211, 3600),
        _ => return None,
    })
}

fn first_power(
    profile: &GroupProfile,
    criterion: CriterionId,
    relation: Relation,
) -> CriterionVerdict {
    let threshold = psi_threshold(criterion, profile.n()).expect("first-power criterion");
    profile.decide(criterion, Some(1), profile.psi_k(1), threshold, relation)
}

/// `ψ(G)·167 > 25·ψ(Z_n)`; the constant 6.68 is taken as exactly 167/25.
pub fn crit_hlm_2018(profile: &GroupProfile) -> CriterionVerdict {
    first_power(profile, CriterionId::Hlm2018, Relation::StrictlyGreater)
}

pub fn crit_azad_khosravi(profile: &GroupProfile) -> CriterionVerdict {
    first_power(
        profile,
        CriterionId::AzadKhosravi,
        Relation::StrictlyGreater,
    )
}

pub fn crit_average_order(profile: &GroupProfile) -> CriterionVerdict {
    first_power(profile, CriterionId::AverageOrder, Relation::StrictlyLess)
}

/// Compared in `ψ`-space: `ψ(G) > 211·n²/3600`.
pub fn crit_tarnauceanu(profile: &GroupProfile) -> CriterionVerdict {
    first_power(profile, CriterionId::Tarnauceanu, Relation::StrictlyGreater)
}

/// Smallest `k` the main criterion admits for largest prime divisor `p`.
pub fn main_psi_k_min_k(p: u64) -> Option<u32> {
    match p {
        p if p > 7 => Some(4),
        7 => Some(13),
        _ => None,
    }
}

/// Scans `window` for the first `k` at which `certify` holds; reports the
/// first `k` if none does.
fn scan(
    profile: &GroupProfile,
    criterion: CriterionId,
    relation: Relation,
    window: RangeInclusive<u32>,
    sides: impl Fn(u32) -> (ExactRational, ExactRational),
) -> CriterionVerdict {
    let mut first = None;
    for k in window {
        let (lhs, rhs) = sides(k);
        let v = profile.decide(criterion, Some(k), lhs, rhs, relation);
        if v.verdict.is_certified() {
            return v;
        }
        first.get_or_insert(v);
    }
    first.unwrap_or_else(|| profile.inapplicable(criterion, relation, "empty k window".into()))
}

/// `ψ_k(G) > D_k·ψ_k(Z_n)` for the first `k` in `k_window` that is at least 4
/// (largest prime `p > 7`) or 13 (`p = 7`). Inapplicable when `p ≤ 5`.
pub fn crit_main_psi_k(profile: &GroupProfile, k_window: RangeInclusive<u32>) -> CriterionVerdict {
    let relation = Relation::StrictlyGreater;
    let id = CriterionId::MainPsiK;
    let Some(p) = largest_prime_divisor(profile.n()) else {
        return profile.inapplicable(id, relation, "trivial group has no prime divisor".into());
    };
    let Some(min_k) = main_psi_k_min_k(p) else {
        return profile.inapplicable(
            id,
            relation,
            format!("largest prime divisor {p} is at most 5"),
        );
    };
    let effective = (*k_window.start()).max(min_k)..=*k_window.end();
    if effective.is_empty() {
        return profile.inapplicable(
            id,
            relation,
            format!(
                "k window {}..{} contains no k >= {min_k}",
                k_window.start(),
                k_window.end()
            ),
        );
    }
    scan(profile, id, relation, effective, |k| {
        let d = d_k(k).expect("k >= 1");
        (profile.psi_k(k), d * profile.psi_cyclic(k))
    })
}

/// `5·ψ(G) ≥ 3n·φ(n)`.
pub fn crit_phi_bound(profile: &GroupProfile) -> CriterionVerdict {
    let n = profile.n();
    let rhs = integer(3 * n) * integer(euler_phi(n)) * ratio(1, 5);
    profile.decide(
        CriterionId::PhiBound,
        Some(1),
        profile.psi_k(1),
        rhs,
        Relation::AtLeast,
    )
}

/// `ψ_k(G) ≥ 3·n^k·φ(n) / (5·q^(k−1))`, `q` the smallest prime divisor of `n`.
/// For the trivial group `q` is taken as 1.
pub fn crit_phi_bound_k(profile: &GroupProfile, k: u32) -> CriterionVerdict {
    let k = k.max(1);
    let n = profile.n();
    let q = smallest_prime_divisor(n).unwrap_or(1);
    let rhs = ratio(
        BigInt::from(3u32) * BigInt::from(n).pow(k) * BigInt::from(euler_phi(n)),
        BigInt::from(5u32) * BigInt::from(q).pow(k - 1),
    );
    profile.decide(
        CriterionId::PhiBoundK,
        Some(k),
        profile.psi_k(k),
        rhs,
        Relation::AtLeast,
    )
}

/// Fewer than three distinct prime divisors.
pub fn crit_burnside(profile: &GroupProfile) -> CriterionVerdict {
    let primes = prime_divisors(profile.n()).len();
    profile.decide(
        CriterionId::Burnside,
        None,
        integer(primes as u64),
        integer(3),
        Relation::StrictlyLess,
    )
}

/// `ψ_k(G)·(1 + 2^k + 2·4^k) > (1 + 3·2^k)·ψ_k(Z_n)`: no non-cyclic group
/// gets this far, so the group is cyclic.
pub fn crit_cyclic_detect(profile: &GroupProfile, k: u32) -> CriterionVerdict {
    let k = k.max(1);
    let pow = |b: u32| BigInt::from(b).pow(k);
    let bound = ratio(1 + pow(2) * 3, 1 + pow(2) + pow(4) * 2);
    profile.decide(
        CriterionId::CyclicDetect,
        Some(k),
        profile.psi_k(k),
        bound * profile.psi_cyclic(k),
        Relation::StrictlyGreater,
    )
}

/// Knobs for [`run_all`].
#[derive(Clone, Debug)]
pub struct RunOptions {
    /// Window for MainPsiK; PhiBoundK and CyclicDetect scan it too.
    pub k_window: RangeInclusive<u32>,
    /// Run the derived-series oracle for groups up to this order.
    pub oracle_cap: usize,
    /// Run the oracle regardless of size.
    pub force_oracle: bool,
    /// Never run the oracle.
    pub skip_oracle: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            k_window: DEFAULT_K_WINDOW,
            oracle_cap: DEFAULT_ORACLE_CAP,
            force_oracle: false,
            skip_oracle: false,
        }
    }
}

/// All verdicts for one group plus the oracle cross-check.
#[derive(Clone, Debug)]
pub struct CriteriaReport {
    pub group_name: String,
    pub order: u64,
    pub spectrum: OrderSpectrum,
    pub k_window: RangeInclusive<u32>,
    pub verdicts: Vec<CriterionVerdict>,
    pub oracle_solvable: Option<bool>,
    /// False iff some criterion certified a group the oracle calls non-solvable.
    pub consistency: bool,
}

impl CriteriaReport {
    pub fn verdict(&self, id: CriterionId) -> &CriterionVerdict {
        self.verdicts
            .iter()
            .find(|v| v.criterion == id)
            .expect("every criterion is reported")
    }

    pub fn certified_by(&self) -> impl Iterator<Item = CriterionId> + '_ {
        self.verdicts
            .iter()
            .filter(|v| v.verdict.is_certified())
            .map(|v| v.criterion)
    }
}

/// Every checker in [`CriterionId::ALL`] order, for a precomputed profile.
pub fn evaluate(profile: &GroupProfile, k_window: RangeInclusive<u32>) -> Vec<CriterionVerdict> {
    let lo = (*k_window.start()).max(1);
    let aux_window = lo..=*k_window.end();
    CriterionId::ALL
        .iter()
        .map(|id| match id {
            CriterionId::Hlm2018 => crit_hlm_2018(profile),
            CriterionId::AzadKhosravi => crit_azad_khosravi(profile),
            CriterionId::AverageOrder => crit_average_order(profile),
            CriterionId::Tarnauceanu => crit_tarnauceanu(profile),
            CriterionId::MainPsiK => crit_main_psi_k(profile, k_window.clone()),
            CriterionId::PhiBound => crit_phi_bound(profile),
            CriterionId::PhiBoundK => scan(
                profile,
                CriterionId::PhiBoundK,
                Relation::AtLeast,
                aux_window.clone(),
                |k| {
                    let v = crit_phi_bound_k(profile, k);
                    (v.lhs, v.rhs)
                },
            ),
            CriterionId::Burnside => crit_burnside(profile),
            CriterionId::CyclicDetect => scan(
                profile,
                CriterionId::CyclicDetect,
                Relation::StrictlyGreater,
                aux_window.clone(),
                |k| {
                    let v = crit_cyclic_detect(profile, k);
                    (v.lhs, v.rhs)
                },
            ),
        })
        .collect()
}

pub fn run_all(group: &FiniteGroup, options: &RunOptions) -> CriteriaReport {
    let profile = GroupProfile::of(group);
    let verdicts = evaluate(&profile, options.k_window.clone());
    let run_oracle =
        !options.skip_oracle && (options.force_oracle || group.order() <= options.oracle_cap);
    let oracle_solvable = run_oracle.then(|| group.is_solvable());
    let consistency =
        oracle_solvable != Some(false) || verdicts.iter().all(|v| !v.verdict.is_certified());
    CriteriaReport {
        group_name: profile.name,
        order: group.order() as u64,
        spectrum: profile.spectrum,
        k_window: options.k_window.clone(),
        verdicts,
        oracle_solvable,
        consistency,
    }
}
