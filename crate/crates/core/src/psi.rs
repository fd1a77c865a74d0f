//! Exact arithmetic over element-order statistics.
//!
//! `ψ_k(G) = Σ_{g∈G} o(g)^k` depends only on how many elements have each
//! order, so everything here works from an [`OrderSpectrum`]. Integers are
//! arbitrary precision and every threshold is an exact rational.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Arbitrary-precision natural number.
pub type BigNat = BigUint;

/// Reduced fraction with a positive denominator.
pub type ExactRational = BigRational;

/// How many elements of a group have each order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderSpectrum {
    group_order: u64,
    counts: BTreeMap<u64, u64>,
}

impl OrderSpectrum {
    /// Builds a spectrum from explicit counts, checking that it could belong
    /// to a group: counts sum to `n`, every order divides `n`, exactly one
    /// element of order 1, and `φ(d)` divides the number of elements of order `d`.
    pub fn from_counts(group_order: u64, counts: BTreeMap<u64, u64>) -> Result<Self> {
        let bad = |why: String| Err(Error::InvalidTable(format!("order spectrum: {why}")));
        if counts.values().sum::<u64>() != group_order {
            return bad(format!("counts do not sum to {group_order}"));
        }
        if counts.get(&1) != Some(&1) {
            return bad("there must be exactly one element of order 1".into());
        }
        for (&d, &c) in &counts {
            if d == 0 || !group_order.is_multiple_of(d) {
                return bad(format!("order {d} does not divide {group_order}"));
            }
            if c % euler_phi(d) != 0 {
                return bad(format!(
                    "{c} elements of order {d} is not a multiple of φ({d})"
                ));
            }
        }
        Ok(Self {
            group_order,
            counts,
        })
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    /// `(order, count)` pairs in increasing order.
    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    pub fn count(&self, order: u64) -> u64 {
        self.counts.get(&order).copied().unwrap_or(0)
    }

    pub fn max_order(&self) -> u64 {
        self.counts.keys().next_back().copied().unwrap_or(1)
    }

    pub fn is_cyclic(&self) -> bool {
        self.max_order() == self.group_order
    }

    /// `ψ_k` of the group this spectrum came from.
    pub fn psi_k(&self, k: u32) -> Result<BigNat> {
        psi_k(self, k)
    }

    /// Compact text form, e.g. `1:1 2:15 3:20 5:24`.
    pub fn summary(&self) -> String {
        self.counts
            .iter()
            .map(|(d, c)| format!("{d}:{c}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Exact count of elements of each order.
pub fn order_spectrum(group: &FiniteGroup) -> OrderSpectrum {
    let mut counts = BTreeMap::new();
    for o in group.element_orders() {
        *counts.entry(o as u64).or_insert(0) += 1;
    }
    OrderSpectrum {
        group_order: group.order() as u64,
        counts,
    }
}

/// `Σ_d c_d · d^k`.
pub fn psi_k(spectrum: &OrderSpectrum, k: u32) -> Result<BigNat> {
    if k == 0 {
        return Err(Error::ZeroExponent);
    }
    Ok(spectrum
        .counts
        .iter()
        .map(|(&d, &c)| BigNat::from(c) * BigNat::from(d).pow(k))
        .sum())
}

/// `ψ_k(Z_n) = Σ_{d | n} φ(d)·d^k`, without building the group.
pub fn psi_k_cyclic(n: u64, k: u32) -> Result<BigNat> {
    if k == 0 {
        return Err(Error::ZeroExponent);
    }
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    Ok(divisors(n)
        .into_iter()
        .map(|d| BigNat::from(euler_phi(d)) * BigNat::from(d).pow(k))
        .sum())
}

/// Prime factorization by trial division, as `(prime, exponent)` ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// Distinct prime divisors, ascending. Empty for `n = 1`.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn smallest_prime_divisor(n: u64) -> Option<u64> {
    prime_divisors(n).first().copied()
}

pub fn largest_prime_divisor(n: u64) -> Option<u64> {
    prime_divisors(n).last().copied()
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// All positive divisors, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let current = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..current {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// `ψ_k(A_5) = 1 + 15·2^k + 20·3^k + 24·5^k`.
pub fn psi_k_a5(k: u32) -> BigNat {
    let p = |b: u32| BigNat::from(b).pow(k);
    BigNat::one() + p(2) * 15u32 + p(3) * 20u32 + p(5) * 24u32
}

/// `ψ_k(Z_60) = (1 + 2^k + 2·4^k)(1 + 2·3^k)(1 + 4·5^k)`.
pub fn psi_k_z60(k: u32) -> BigNat {
    let p = |b: u32| BigNat::from(b).pow(k);
    (BigNat::one() + p(2) + p(4) * 2u32)
        * (BigNat::one() + p(3) * 2u32)
        * (BigNat::one() + p(5) * 4u32)
}

/// The threshold constant `D_k = ψ_k(A_5) / ψ_k(Z_60)`, reduced.
pub fn d_k(k: u32) -> Result<ExactRational> {
    if k == 0 {
        return Err(Error::ZeroExponent);
    }
    Ok(ratio(psi_k_a5(k), psi_k_z60(k)))
}

/// `D_k > 1 / (2^k · p^(k−1))`, compared exactly.
pub fn claim_inequality_holds(p: u64, k: u32) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let bound = ratio(
        BigNat::one(),
        BigNat::from(2u32).pow(k) * BigNat::from(p).pow(k.saturating_sub(1)),
    );
    Ok(d_k(k)? > bound)
}

/// Exact three-way comparison.
pub fn compare(a: &ExactRational, b: &ExactRational) -> Ordering {
    // cross-multiplication; denominators are positive
    (a.numer() * b.denom()).cmp(&(b.numer() * a.denom()))
}

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> ExactRational {
    ExactRational::new(num.into(), den.into())
}

pub fn integer(value: impl Into<BigInt>) -> ExactRational {
    ExactRational::from_integer(value.into())
}

/// Canonical `num/den` text, always with the denominator, e.g. `211/1`.
pub fn fraction_text(value: &ExactRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Decimal approximation for human-facing output only.
pub fn approx(value: &ExactRational) -> f64 {
    use num_traits::ToPrimitive;
    value.to_f64().unwrap_or(f64::NAN)
}

pub(crate) fn zero() -> ExactRational {
    ExactRational::zero()
}
