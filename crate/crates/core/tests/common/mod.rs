//! Oracles shared by the integration tests, written from first principles
//! rather than through the library's arithmetic.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::Pow;

use psik::criteria::{run_all, RunOptions};
use psik::psi::ExactRational;
use psik::FiniteGroup;

pub type Check = Result<(), String>;

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Order of `a` by repeated multiplication.
pub fn brute_order(g: &FiniteGroup, a: usize) -> u64 {
    let (mut x, mut m) = (a, 1u64);
    while x != 0 {
        x = g.mul(x, a);
        m += 1;
    }
    m
}

pub fn brute_psi_k(g: &FiniteGroup, k: u32) -> BigUint {
    g.elements()
        .map(|a| BigUint::from(brute_order(g, a)).pow(k))
        .sum()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `ψ_k(Z_n)` by summing `gcd(i, n)`-derived orders over all residues.
pub fn brute_psi_k_cyclic(n: u64, k: u32) -> BigUint {
    (0..n).map(|i| BigUint::from(n / gcd(i, n)).pow(k)).sum()
}

pub fn totients(limit: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=limit as u64).collect();
    for p in 2..=limit {
        if phi[p] == p as u64 {
            for m in (p..=limit).step_by(p) {
                phi[m] -= phi[m] / p as u64;
            }
        }
    }
    phi
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == [n]
}

/// Closure of `gens` under multiplication.
pub fn closure(g: &FiniteGroup, gens: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::from([0]);
    let mut frontier = vec![0];
    while let Some(x) = frontier.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

pub fn brute_solvable(g: &FiniteGroup) -> bool {
    let mut current: BTreeSet<usize> = g.elements().collect();
    loop {
        if current.len() == 1 {
            return true;
        }
        let mut comms = BTreeSet::new();
        for &a in &current {
            for &b in &current {
                let ab = g.mul(a, b);
                let ba = g.mul(b, a);
                comms.insert(g.mul(g.inv(ba), ab));
            }
        }
        let next = closure(g, &comms);
        if next.len() == current.len() {
            return false;
        }
        current = next;
    }
}

pub fn brute_is_cyclic(g: &FiniteGroup) -> bool {
    g.elements().any(|a| brute_order(g, a) == g.order() as u64)
}

pub fn frac(num: impl Into<BigInt>, den: impl Into<BigInt>) -> ExactRational {
    ExactRational::new(num.into(), den.into())
}

pub fn bigint(v: BigUint) -> BigInt {
    BigInt::from(v)
}

pub fn closed_a5(k: u32) -> BigUint {
    let p = |b: u32| BigUint::from(b).pow(k);
    1u32 + p(2) * 15u32 + p(3) * 20u32 + p(5) * 24u32
}

pub fn closed_z60(k: u32) -> BigUint {
    let p = |b: u32| BigUint::from(b).pow(k);
    (1u32 + p(2) + p(4) * 2u32) * (1u32 + p(3) * 2u32) * (1u32 + p(5) * 4u32)
}

pub fn check_soundness(g: &FiniteGroup) -> Check {
    let options = RunOptions {
        force_oracle: true,
        ..RunOptions::default()
    };
    let report = run_all(g, &options);
    let solvable = brute_solvable(g);
    let certified: Vec<_> = report.certified_by().collect();
    ensure(solvable || certified.is_empty(), || {
        format!("{}: non-solvable but certified by {certified:?}", g.name())
    })?;
    ensure(report.oracle_solvable == Some(solvable), || {
        format!("{}: library oracle disagrees with brute oracle", g.name())
    })
}
