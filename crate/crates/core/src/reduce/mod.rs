//! Exact verification of the reduction to prime-power degrees: the
//! x_{kp^t} recursion with positivity and integrality, the wreath-product
//! dimension identity, and the predicted vertex subgroups E_{p^d}^♯.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::chartab::factorial_big;
use crate::symgrp::{regular_elementary_generators, sharp_map, PGroup, Perm, SymError};

use core::fmt;

#[derive(Clone, Debug)]
pub enum ReduceError {
    /// k must exceed 1 and be coprime to p.
    BadParameters { p: u8, k: u64 },
    /// x_{kp^t} ≤ 0: contradicts the established positivity bound.
    PositivityViolated { t: usize },
    /// dim X_{kp^t} is not an integer: contradicts projectivity.
    IntegralityViolated { t: usize },
}

impl fmt::Display for ReduceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReduceError::BadParameters { p, k } => write!(f, "need k > 1 with p ∤ k, got p={p} k={k}"),
            ReduceError::PositivityViolated { t } => write!(f, "x at level {t} not positive"),
            ReduceError::IntegralityViolated { t } => write!(f, "dim X at level {t} not integral"),
        }
    }
}

impl core::error::Error for ReduceError {}

/// The exact ratios x_{kp^t} = dim(X_{kp^t})/(kp^t−1)! and the dimensions
/// themselves, for t ≤ d_max.  Dimensions are materialized only while the
/// factorial stays moderate (kp^t ≤ 5000); integrality is always verified,
/// by prime-valuation bookkeeping when the factorial is out of reach.
pub struct ReductionTable {
    pub p: u8,
    pub k: u64,
    pub d_max: usize,
    pub x: Vec<BigRational>,
    pub dim_x: Vec<Option<BigUint>>,
}

const MATERIALIZE_LIMIT: u64 = 5000;

/// q-adic valuation of a positive integer, by binary chunking.
fn valuation(n: &BigUint, q: u64) -> (u64, BigUint) {
    let mut rest = n.clone();
    let mut nu = 0u64;
    let big_q = BigUint::from(q);
    // Strip q^{2^j} greedily from the largest chunk downward.
    let mut powers = alloc::vec![(1u64, big_q.clone())];
    loop {
        let (e, last) = powers.last().unwrap();
        let next = last * last;
        if next.bits() > rest.bits() {
            break;
        }
        powers.push((e * 2, next));
    }
    for (e, qe) in powers.iter().rev() {
        loop {
            let (quot, rem) = num_integer::Integer::div_rem(&rest, qe);
            if rem.is_zero() {
                nu += e;
                rest = quot;
            } else {
                break;
            }
        }
    }
    (nu, rest)
}

/// ν_q(n!) by Legendre's formula.
fn legendre_nu(q: u64, n: u64) -> u64 {
    let mut nu = 0u64;
    let mut qq = q;
    while qq <= n {
        nu += n / qq;
        match qq.checked_mul(q) {
            Some(next) => qq = next,
            None => break,
        }
    }
    nu
}

/// The primes dividing m (m ≤ small), by trial division.
fn small_prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while q * q <= m {
        if m % q == 0 {
            out.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn pow_rat(base: &BigRational, e: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut b = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    acc
}

fn big_rat(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// x_{kp^t} = 1 − Σ_{i=1}^t a_i'·(x_{kp^{t−i}})^{p^i} with
/// a_i' = (kp^{t−i})^{−(p^i − 1)}; the empty sum gives x_k = 1.
/// Verifies positivity, the geometric bound Σ < (k−1)^{-1}, integrality
/// of dim X, and divisibility of dim X by the p-part of (kp^t)!.
pub fn x_recursion(p: u8, k: u64, d_max: usize) -> Result<ReductionTable, ReduceError> {
    if k <= 1 || k % p as u64 == 0 {
        return Err(ReduceError::BadParameters { p, k });
    }
    let mut x: Vec<BigRational> = Vec::with_capacity(d_max + 1);
    let mut dim_x: Vec<Option<BigUint>> = Vec::with_capacity(d_max + 1);
    for t in 0..=d_max {
        let mut sum = BigRational::zero();
        for i in 1..=t {
            let pi = (p as u64).pow(i as u32);
            let base = k * (p as u64).pow((t - i) as u32);
            let a_i = pow_rat(&big_rat(base), pi - 1).recip();
            sum += a_i * pow_rat(&x[t - i], pi);
        }
        // Geometric bound from the proof: Σ a_i'(x)^{p^i} < (k−1)^{-1}.
        if t > 0 && sum >= big_rat(k - 1).recip() {
            return Err(ReduceError::PositivityViolated { t });
        }
        let xt = BigRational::one() - sum;
        if !xt.is_positive() {
            return Err(ReduceError::PositivityViolated { t });
        }
        let n_t = k * (p as u64).pow(t as u32);
        // Integrality of dim X = x_t·(n_t−1)! via valuations: the reduced
        // denominator of x_t can only involve primes dividing k·p, and
        // each must appear in (n_t−1)! at least as often.  Divisibility of
        // dim X by the p-part of n_t! (projectivity) rides along.
        let num = xt.numer().to_biguint().expect("positive");
        let den = xt.denom().to_biguint().expect("positive");
        let mut rest = den.clone();
        for q in small_prime_factors(k * p as u64) {
            let (nu_den, r) = valuation(&rest, q);
            rest = r;
            let (nu_num, _) = valuation(&num, q);
            let nu_fact = legendre_nu(q, n_t - 1);
            if nu_num + nu_fact < nu_den {
                return Err(ReduceError::IntegralityViolated { t });
            }
            if q == p as u64 {
                // ν_p(dim X) ≥ ν_p(n_t!)
                if nu_num + nu_fact < nu_den + legendre_nu(q, n_t) {
                    return Err(ReduceError::IntegralityViolated { t });
                }
            }
        }
        if !rest.is_one() {
            // A denominator prime outside k·p cannot cancel.
            return Err(ReduceError::IntegralityViolated { t });
        }
        let dim_int = if n_t <= MATERIALIZE_LIMIT {
            let dim = &xt * BigRational::from_integer(BigInt::from(factorial_big(n_t as usize - 1)));
            if !dim.is_integer() {
                return Err(ReduceError::IntegralityViolated { t });
            }
            Some(dim.to_integer().to_biguint().expect("positive"))
        } else {
            None
        };
        x.push(xt);
        dim_x.push(dim_int);
    }
    Ok(ReductionTable { p, k, d_max, x, dim_x })
}

/// The dimension identity of the decomposition theorem:
/// (kp^d−1)! = Σ_{t=0}^d [S_{kp^d} : S_{kp^t}≀S_{p^{d−t}}] ·
///             (dim X_{kp^t})^{p^{d−t}} · (p^{d−t}−1)!,
/// with index (kp^d)! / ((kp^t)!^{p^{d−t}} · (p^{d−t})!).
pub fn dim_identity(p: u8, k: u64, d: usize, table: &ReductionTable) -> bool {
    assert!(table.d_max >= d);
    let n = (k * (p as u64).pow(d as u32)) as usize;
    let lhs = factorial_big(n - 1);
    let mut rhs = BigUint::zero();
    for t in 0..=d {
        let m = (k * (p as u64).pow(t as u32)) as usize;
        let q = (p as u64).pow((d - t) as u32) as usize;
        // index of the wreath subgroup
        let mut denom = factorial_big(q);
        for _ in 0..q {
            denom *= factorial_big(m);
        }
        let index = factorial_big(n) / denom;
        let mut term = index;
        let dim_t = table.dim_x[t].as_ref().expect("materialized for identity grid");
        for _ in 0..q {
            term *= dim_t;
        }
        term *= factorial_big(q - 1);
        rhs += term;
    }
    lhs == rhs
}

/// The predicted maximal vertex E_{p^d}^♯ ≤ S_k ≀ S_{p^d} ≤ S_{kp^d}:
/// the block image of the regular elementary abelian subgroup.
pub fn predicted_vertex(p: u8, k: usize, d: usize) -> Result<PGroup, SymError> {
    let gens: Vec<Perm> = regular_elementary_generators(p, d)
        .iter()
        .map(|g| sharp_map(k, g))
        .collect();
    let degree = k * (p as usize).pow(d as u32);
    PGroup::generate(degree.max(1), gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_case_x_k_is_one() {
        let t = x_recursion(2, 3, 0).unwrap();
        assert!(t.x[0].is_one());
        assert_eq!(t.dim_x[0], Some(factorial_big(2))); // (k−1)! = 2
    }

    #[test]
    fn hand_value_x6() {
        // p=2, k=3, t=1: x_6 = 1 − 3^{-1}·1² = 2/3; dim X_6 = (2/3)·120 = 80.
        let t = x_recursion(2, 3, 1).unwrap();
        assert_eq!(t.x[1], BigRational::new(BigInt::from(2), BigInt::from(3)));
        assert_eq!(t.dim_x[1], Some(BigUint::from(80u32)));
    }

    #[test]
    fn k_must_be_coprime_and_bigger_than_one() {
        assert!(x_recursion(2, 1, 3).is_err());
        assert!(x_recursion(2, 4, 3).is_err());
        assert!(x_recursion(3, 6, 2).is_err());
    }

    #[test]
    fn identity_small_hand_check() {
        // p=2, k=3, d=1: 120 = 10·2²·1 + 1·80·1.
        let t = x_recursion(2, 3, 1).unwrap();
        assert!(dim_identity(2, 3, 0, &t));
        assert!(dim_identity(2, 3, 1, &t));
    }

    #[test]
    fn positivity_and_integrality_grid() {
        for p in [2u8, 3, 5, 7] {
            for k in 2..=10u64 {
                if k % p as u64 == 0 {
                    continue;
                }
                let t = x_recursion(p, k, 4).unwrap();
                for xt in &t.x {
                    assert!(xt.is_positive());
                    assert!(*xt <= BigRational::one());
                }
            }
        }
    }

    #[test]
    fn predicted_vertex_structure() {
        // k=1: E itself.
        let e = predicted_vertex(2, 1, 2).unwrap();
        assert_eq!(e.order(), 4);
        // k=3, p=2, d=2: listed generators.
        let v = predicted_vertex(2, 3, 2).unwrap();
        assert_eq!(v.order(), 4);
        assert!(v.is_abelian());
        assert!(v.exponent_divides(2));
        let cyc: Vec<alloc::string::String> =
            v.gens().iter().map(|g| g.to_cycles()).collect();
        assert_eq!(cyc[0], "(1,4)(2,5)(3,6)(7,10)(8,11)(9,12)");
        assert_eq!(cyc[1], "(1,7)(2,8)(3,9)(4,10)(5,11)(6,12)");
        // semiregular with k orbits of size p^d
        let orbits = v.orbits();
        assert_eq!(orbits.len(), 3);
        assert!(orbits.iter().all(|o| o.len() == 4));
    }
}
