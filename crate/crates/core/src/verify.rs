//! Regression harness behind `psik verify-paper`.
//!
//! Every published number and every property the engine promises is one
//! entry in [`MANIFEST`]: an id, where the expected value comes from, the
//! expected value as text, and a check that recomputes it. An entry passes
//! when the recomputed text equals the expected text.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::catalog::{catalog, corpus_names, CatalogError};
use crate::criteria::{self, CriterionId, GroupProfile, RunOptions, Verdict};
use crate::group::{direct_product, FiniteGroup, DEFAULT_CAP};
use crate::psi::{
    self, d_k, euler_phi, fraction_text, largest_prime_divisor, order_spectrum, psi_k_a5,
    psi_k_cyclic, psi_k_z60, ratio, smallest_prime_divisor, BigNat, ExactRational,
};
use crate::report;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    /// Stated in the literature this engine reproduces.
    Literature,
    /// Computed independently (enumeration, exact arithmetic) from stated values.
    Derived,
    /// Holds by definition.
    Trivial,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Origin::Literature => "literature",
            Origin::Derived => "derived",
            Origin::Trivial => "trivial",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The configured `k` window excludes the exponent the entry is about.
    WindowLimited,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::WindowLimited => "LIMITED",
        })
    }
}

/// Recomputed value of one entry.
pub enum Actual {
    Value(String),
    WindowLimited(String),
}

impl<T: fmt::Display> From<T> for Actual {
    fn from(v: T) -> Self {
        Actual::Value(v.to_string())
    }
}

pub struct Entry {
    pub id: &'static str,
    pub origin: Origin,
    pub claim: &'static str,
    pub expected: &'static str,
    check: fn(&Context) -> Actual,
}

pub struct Outcome {
    pub id: &'static str,
    pub origin: Origin,
    pub claim: &'static str,
    pub expected: &'static str,
    pub actual: String,
    pub status: Status,
}

type Resolver = Box<dyn Fn(&str) -> Result<FiniteGroup, CatalogError>>;

/// Group source and `k` window the checks run against.
pub struct Context {
    pub k_window: RangeInclusive<u32>,
    resolve: Resolver,
}

impl Context {
    pub fn new(k_window: RangeInclusive<u32>) -> Self {
        Self {
            k_window,
            resolve: Box::new(catalog),
        }
    }

    /// Uses `resolve` instead of the built-in catalog.
    pub fn with_resolver(
        k_window: RangeInclusive<u32>,
        resolve: impl Fn(&str) -> Result<FiniteGroup, CatalogError> + 'static,
    ) -> Self {
        Self {
            k_window,
            resolve: Box::new(resolve),
        }
    }

    /// A catalog in which A5 and H1 are replaced by cyclic groups of the same
    /// order. Every sensitive entry must fail against it.
    pub fn corrupted(k_window: RangeInclusive<u32>) -> Self {
        Self::with_resolver(k_window, |name| match name {
            "A5" => catalog("Z60").map(|g| g.with_name("A5")),
            "H1" => catalog("Z156").map(|g| g.with_name("H1")),
            other => catalog(other),
        })
    }

    fn group(&self, name: &str) -> FiniteGroup {
        (self.resolve)(name).unwrap_or_else(|e| panic!("harness group {name}: {e}"))
    }

    fn corpus(&self) -> Vec<FiniteGroup> {
        corpus_names().iter().map(|n| self.group(n)).collect()
    }

    fn options(&self) -> RunOptions {
        RunOptions {
            k_window: self.k_window.clone(),
            ..RunOptions::default()
        }
    }
}

impl Default for Context {
    fn default() -> Self {
        Self::new(criteria::DEFAULT_K_WINDOW)
    }
}

fn psi(g: &FiniteGroup, k: u32) -> BigNat {
    order_spectrum(g).psi_k(k).expect("k >= 1")
}

fn holds(ok: bool) -> Actual {
    if ok { "holds" } else { "violated" }.into()
}

fn frac(v: &ExactRational) -> Actual {
    fraction_text(v).into()
}

fn threshold(criterion: CriterionId) -> ExactRational {
    criteria::psi_threshold(criterion, 156).expect("first-power criterion")
}

/// Largest integer `ψ` that does not certify under a strict `>` threshold.
fn largest_not_above(t: &ExactRational) -> BigInt {
    t.numer().div_floor(t.denom())
}

/// Largest integer `ψ` that certifies under a strict `<` threshold.
fn largest_below(t: &ExactRational) -> BigInt {
    let q = t.numer().div_floor(t.denom());
    if t.is_integer() {
        q - 1
    } else {
        q
    }
}

fn psi_window(ctx: &Context, name: &str) -> Actual {
    let p = psi(&ctx.group(name), 1);
    if p > BigNat::from(549u32) && p < BigNat::from(1426u32) {
        "inside (549, 1426)".into()
    } else {
        format!("outside (549, 1426): psi = {p}").into()
    }
}

fn main_at_4(ctx: &Context, name: &str) -> Actual {
    if !ctx.k_window.contains(&4) {
        return Actual::WindowLimited(format!(
            "k window {}..{} excludes 4",
            ctx.k_window.start(),
            ctx.k_window.end()
        ));
    }
    let v = criteria::crit_main_psi_k(&GroupProfile::of(&ctx.group(name)), ctx.k_window.clone());
    match (v.verdict, v.k_used) {
        (Verdict::SolvableCertified, Some(k)) => format!("certified at k={k}").into(),
        (verdict, _) => format!("{verdict}").into(),
    }
}

fn oracle(ctx: &Context, name: &str) -> Actual {
    let g = ctx.group(name);
    if g.is_solvable() {
        "solvable"
    } else {
        "non-solvable"
    }
    .into()
}

fn order_of(ctx: &Context, name: &str) -> Actual {
    ctx.group(name).order().into()
}

fn small_factors(ctx: &Context) -> Vec<FiniteGroup> {
    ["Z2", "Z3", "Z4", "Z5", "S3", "Z2xZ2", "A4"]
        .iter()
        .map(|n| ctx.group(n))
        .collect()
}

fn soundness(ctx: &Context) -> Actual {
    let options = RunOptions {
        force_oracle: true,
        ..ctx.options()
    };
    let unsound: Vec<String> = ctx
        .corpus()
        .iter()
        .map(|g| criteria::run_all(g, &options))
        .filter(|r| !r.consistency)
        .map(|r| r.group_name)
        .collect();
    if unsound.is_empty() {
        "no unsound certification".into()
    } else {
        format!("unsound on {}", unsound.join(",")).into()
    }
}

fn nonsolvable_certifications(ctx: &Context) -> Actual {
    let count: usize = ["A5", "S5"]
        .iter()
        .map(|n| {
            criteria::run_all(&ctx.group(n), &ctx.options())
                .certified_by()
                .count()
        })
        .sum();
    count.into()
}

fn maximality(ctx: &Context) -> Actual {
    holds(ctx.corpus().iter().all(|g| {
        let n = g.order() as u64;
        let cyclic = g.is_cyclic();
        (1..=8).all(|k| {
            let (a, b) = (psi(g, k), psi_k_cyclic(n, k).expect("k >= 1"));
            a <= b && ((a == b) == cyclic)
        })
    }))
}

fn coprime_product(ctx: &Context) -> Actual {
    let factors = small_factors(ctx);
    holds(factors.iter().all(|a| {
        factors.iter().all(|b| {
            let ab = direct_product(a, b, DEFAULT_CAP).expect("small product");
            let coprime = a.order().gcd(&b.order()) == 1;
            (1..=5).all(|k| {
                let (lhs, rhs) = (psi(&ab, k), psi(a, k) * psi(b, k));
                if coprime {
                    lhs == rhs
                } else {
                    lhs < rhs
                }
            })
        })
    }))
}

fn normal_cyclic_sylow(ctx: &Context) -> Actual {
    let check = |name: &str, p: u64, expect_central: bool| {
        let g = ctx.group(name);
        let Ok(Some(sylow)) = g.cyclic_normal_sylow(p) else {
            return false;
        };
        let central = sylow.is_subset_of(&g.center());
        let quotient = g.quotient(&sylow).expect("normal");
        let sylow_group = ctx.group(&format!("Z{}", sylow.order()));
        central == expect_central
            && (1..=6).all(|k| {
                let (lhs, rhs) = (psi(&g, k), psi(&sylow_group, k) * psi(&quotient, k));
                if central {
                    lhs == rhs
                } else {
                    lhs < rhs
                }
            })
    };
    holds(check("Z6", 3, true) && check("S3", 3, false))
}

fn psi_k_vs_psi(ctx: &Context) -> Actual {
    holds(ctx.corpus().iter().filter(|g| !g.is_cyclic()).all(|g| {
        let n = BigNat::from(g.order());
        let q = BigNat::from(smallest_prime_divisor(g.order() as u64).expect("n > 1"));
        let psi1 = psi(g, 1);
        (2..=6u32).all(|k| psi(g, k) * q.pow(k - 1) <= n.pow(k - 1) * &psi1)
    }))
}

fn non_cyclic_bound(ctx: &Context) -> Actual {
    holds(ctx.corpus().iter().filter(|g| !g.is_cyclic()).all(|g| {
        (1..=8u32).all(|k| {
            let two = BigNat::from(2u32).pow(k);
            let four = BigNat::from(4u32).pow(k);
            psi(g, k) * (BigNat::from(1u32) + &two + four * 2u32)
                <= (BigNat::from(1u32) + two * 3u32) * psi_k_cyclic(g.order() as u64, k).unwrap()
        })
    }))
}

fn phi_lower_bound(_: &Context) -> Actual {
    holds((2..=100_000u64).all(|n| euler_phi(n) * largest_prime_divisor(n).expect("n >= 2") >= n))
}

fn k_reduction(ctx: &Context) -> Actual {
    holds(ctx.corpus().iter().all(|g| {
        let p = GroupProfile::of(g);
        criteria::crit_phi_bound_k(&p, 1).verdict == criteria::crit_phi_bound(&p).verdict
    }))
}

fn determinism(ctx: &Context) -> Actual {
    let render = || {
        let reports: Vec<_> = ctx
            .corpus()
            .iter()
            .map(|g| criteria::run_all(g, &ctx.options()))
            .collect();
        report::render(&reports)
    };
    if render() == render() {
        "identical".into()
    } else {
        "differs".into()
    }
}

fn closed_form(ctx: &Context, name: &str, formula: fn(u32) -> BigNat) -> Actual {
    let g = ctx.group(name);
    holds((1..=10).all(|k| psi(&g, k) == formula(k)))
}

fn claim_grid(primes: RangeInclusive<u64>, ks: RangeInclusive<u32>) -> bool {
    primes.filter(|&p| psi::is_prime(p)).all(|p| {
        ks.clone()
            .all(|k| psi::claim_inequality_holds(p, k).expect("prime"))
    })
}

pub static MANIFEST: &[Entry] = &[
    Entry {
        id: "psi.A5",
        origin: Origin::Literature,
        claim: "psi(A5)",
        expected: "211",
        check: |c| psi(&c.group("A5"), 1).into(),
    },
    Entry {
        id: "psi.Z60",
        origin: Origin::Literature,
        claim: "psi(Z60)",
        expected: "1617",
        check: |c| psi(&c.group("Z60"), 1).into(),
    },
    Entry {
        id: "spectrum.A5",
        origin: Origin::Literature,
        claim: "element orders of A5 (order:count)",
        expected: "1:1 2:15 3:20 5:24",
        check: |c| order_spectrum(&c.group("A5")).summary().into(),
    },
    Entry {
        id: "psi_k.A5.closed_form",
        origin: Origin::Literature,
        claim: "psi_k(A5) = 1 + 15*2^k + 20*3^k + 24*5^k for k = 1..10",
        expected: "holds",
        check: |c| closed_form(c, "A5", psi_k_a5),
    },
    Entry {
        id: "psi_k.Z60.closed_form",
        origin: Origin::Literature,
        claim: "psi_k(Z60) = (1 + 2^k + 2*4^k)(1 + 2*3^k)(1 + 4*5^k) for k = 1..10",
        expected: "holds",
        check: |c| closed_form(c, "Z60", psi_k_z60),
    },
    Entry {
        id: "d_k.1",
        origin: Origin::Literature,
        claim: "D_1",
        expected: "211/1617",
        check: |_| frac(&d_k(1).unwrap()),
    },
    Entry {
        id: "d_k.4",
        origin: Origin::Derived,
        claim: "D_4 = 16861 / (529*163*2501)",
        expected: "16861/215653727",
        check: |_| frac(&d_k(4).unwrap()),
    },
    Entry {
        id: "d_k.ratio",
        origin: Origin::Literature,
        claim: "D_k = psi_k(A5)/psi_k(Z60) from the groups, k = 1..20",
        expected: "holds",
        check: |c| {
            let (a5, z60) = (c.group("A5"), c.group("Z60"));
            holds((1..=20).all(|k| d_k(k).unwrap() == ratio(psi(&a5, k), psi(&z60, k))))
        },
    },
    Entry {
        id: "claim.p_above_7",
        origin: Origin::Literature,
        claim: "D_k > 1/(2^k p^(k-1)) for primes 11..199, k = 4..25",
        expected: "holds",
        check: |_| holds(claim_grid(11..=199, 4..=25)),
    },
    Entry {
        id: "claim.p7_k13",
        origin: Origin::Literature,
        claim: "D_k > 1/(2^k 7^(k-1)) for k = 13..25",
        expected: "holds",
        check: |_| holds(claim_grid(7..=7, 13..=25)),
    },
    Entry {
        id: "claim.p7_k4",
        origin: Origin::Derived,
        claim: "D_4 > 1/(2^4 7^3)",
        expected: "fails",
        check: |_| {
            if psi::claim_inequality_holds(7, 4).unwrap() {
                "holds".into()
            } else {
                "fails".into()
            }
        },
    },
    Entry {
        id: "n156.psi_cyclic",
        origin: Origin::Derived,
        claim: "psi(Z156)",
        expected: "12089",
        check: |c| psi(&c.group("Z156"), 1).into(),
    },
    Entry {
        id: "n156.HLM2018.threshold",
        origin: Origin::Derived,
        claim: "psi(Z156)/6.68",
        expected: "302225/167",
        check: |_| frac(&threshold(CriterionId::Hlm2018)),
    },
    Entry {
        id: "n156.HLM2018.largest_unusable",
        origin: Origin::Literature,
        claim: "largest psi for which HLM2018 cannot certify",
        expected: "1809",
        check: |_| largest_not_above(&threshold(CriterionId::Hlm2018)).into(),
    },
    Entry {
        id: "n156.AzadKhosravi.threshold",
        origin: Origin::Derived,
        claim: "(211/1617)*psi(Z156) = 2550779/1617",
        expected: "33127/21",
        check: |_| frac(&threshold(CriterionId::AzadKhosravi)),
    },
    Entry {
        id: "n156.AzadKhosravi.largest_unusable",
        origin: Origin::Literature,
        claim: "largest psi for which AzadKhosravi cannot certify",
        expected: "1577",
        check: |_| largest_not_above(&threshold(CriterionId::AzadKhosravi)).into(),
    },
    Entry {
        id: "n156.AverageOrder.threshold",
        origin: Origin::Derived,
        claim: "156*211/60",
        expected: "2743/5",
        check: |_| frac(&threshold(CriterionId::AverageOrder)),
    },
    Entry {
        id: "n156.AverageOrder.largest_certified",
        origin: Origin::Literature,
        claim: "largest psi certified by AverageOrder",
        expected: "548",
        check: |_| largest_below(&threshold(CriterionId::AverageOrder)).into(),
    },
    Entry {
        id: "n156.Tarnauceanu.threshold",
        origin: Origin::Derived,
        claim: "211*156^2/3600 = 5134896/3600",
        expected: "35659/25",
        check: |_| frac(&threshold(CriterionId::Tarnauceanu)),
    },
    Entry {
        id: "n156.Tarnauceanu.largest_unusable",
        origin: Origin::Literature,
        claim: "largest psi for which Tarnauceanu cannot certify",
        expected: "1426",
        check: |_| largest_not_above(&threshold(CriterionId::Tarnauceanu)).into(),
    },
    Entry {
        id: "H1.order",
        origin: Origin::Literature,
        claim: "|Z2 x (Z13 : Z6)|",
        expected: "156",
        check: |c| order_of(c, "H1"),
    },
    Entry {
        id: "H1.psi_window",
        origin: Origin::Literature,
        claim: "549 < psi(H1) < 1426",
        expected: "inside (549, 1426)",
        check: |c| psi_window(c, "H1"),
    },
    Entry {
        id: "H1.MainPsiK",
        origin: Origin::Literature,
        claim: "MainPsiK certifies H1 at k = 4",
        expected: "certified at k=4",
        check: |c| main_at_4(c, "H1"),
    },
    Entry {
        id: "H1.oracle",
        origin: Origin::Literature,
        claim: "derived series of H1 reaches 1",
        expected: "solvable",
        check: |c| oracle(c, "H1"),
    },
    Entry {
        id: "H2.order",
        origin: Origin::Literature,
        claim: "|(Z2 x Z2) : (Z13 : Z3)|",
        expected: "156",
        check: |c| order_of(c, "H2"),
    },
    Entry {
        id: "H2.psi_window",
        origin: Origin::Literature,
        claim: "549 < psi(H2) < 1426",
        expected: "inside (549, 1426)",
        check: |c| psi_window(c, "H2"),
    },
    Entry {
        id: "H2.MainPsiK",
        origin: Origin::Literature,
        claim: "MainPsiK certifies H2 at k = 4",
        expected: "certified at k=4",
        check: |c| main_at_4(c, "H2"),
    },
    Entry {
        id: "H2.oracle",
        origin: Origin::Literature,
        claim: "derived series of H2 reaches 1",
        expected: "solvable",
        check: |c| oracle(c, "H2"),
    },
    Entry {
        id: "A5.oracle",
        origin: Origin::Literature,
        claim: "A5 is not solvable",
        expected: "non-solvable",
        check: |c| oracle(c, "A5"),
    },
    Entry {
        id: "soundness.corpus",
        origin: Origin::Derived,
        claim: "no criterion certifies a non-solvable corpus group",
        expected: "no unsound certification",
        check: soundness,
    },
    Entry {
        id: "soundness.A5_S5",
        origin: Origin::Derived,
        claim: "certifications received by A5 and S5",
        expected: "0",
        check: nonsolvable_certifications,
    },
    Entry {
        id: "lemma.maximality",
        origin: Origin::Literature,
        claim: "psi_k(G) <= psi_k(Z_n), equality iff cyclic, k = 1..8",
        expected: "holds",
        check: maximality,
    },
    Entry {
        id: "lemma.coprime_product",
        origin: Origin::Literature,
        claim: "psi_k(AxB) <= psi_k(A)psi_k(B), equality iff coprime orders",
        expected: "holds",
        check: coprime_product,
    },
    Entry {
        id: "lemma.normal_cyclic_sylow",
        origin: Origin::Literature,
        claim: "psi_k(G) <= psi_k(P)psi_k(G/P), equality iff P central (Z6, S3)",
        expected: "holds",
        check: normal_cyclic_sylow,
    },
    Entry {
        id: "lemma.psi_k_vs_psi",
        origin: Origin::Literature,
        claim: "psi_k(G) q^(k-1) <= n^(k-1) psi(G) for non-cyclic G, k = 2..6",
        expected: "holds",
        check: psi_k_vs_psi,
    },
    Entry {
        id: "bound.non_cyclic",
        origin: Origin::Literature,
        claim: "psi_k(G) <= (1+3*2^k)/(1+2^k+2*4^k) psi_k(Z_n) for non-cyclic G",
        expected: "holds",
        check: non_cyclic_bound,
    },
    Entry {
        id: "phi.lower_bound",
        origin: Origin::Literature,
        claim: "phi(n) * p >= n for n <= 100000, p the largest prime divisor",
        expected: "holds",
        check: phi_lower_bound,
    },
    Entry {
        id: "k_reduction",
        origin: Origin::Trivial,
        claim: "PhiBoundK at k = 1 agrees with PhiBound on the corpus",
        expected: "holds",
        check: k_reduction,
    },
    Entry {
        id: "determinism.criteria_report",
        origin: Origin::Trivial,
        claim: "two criteria runs over the corpus render byte-identical reports",
        expected: "identical",
        check: determinism,
    },
];

pub fn run(ctx: &Context) -> Vec<Outcome> {
    MANIFEST
        .iter()
        .map(|e| {
            let (actual, status) = match (e.check)(ctx) {
                Actual::Value(v) => {
                    let status = if v == e.expected {
                        Status::Pass
                    } else {
                        Status::Fail
                    };
                    (v, status)
                }
                Actual::WindowLimited(why) => (why, Status::WindowLimited),
            };
            Outcome {
                id: e.id,
                origin: e.origin,
                claim: e.claim,
                expected: e.expected,
                actual,
                status,
            }
        })
        .collect()
}
