//! Exact integer helpers: factorization, totient, radical, the Burnside test,
//! CRT projection/recombination and the geometric sum `f_γ(δ) = Σ_{i<δ} γ^i`.
//!
//! Everything here is integer-only. Residue arithmetic goes through `u128`
//! intermediates so that moduli up to `u64::MAX` never overflow.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Prime-power decomposition of a positive integer, ascending by prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    /// `p^α` for every listed prime.
    pub fn prime_powers(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, a)| p.pow(a))
    }

    pub fn value(&self) -> u64 {
        self.prime_powers().product()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Trial-division factorization.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut pairs = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            pairs.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(Factorization { pairs })
}

/// `π(n)`: the set of primes dividing `n`.
pub fn prime_support(n: u64) -> Result<BTreeSet<u64>> {
    Ok(factorize(n)?.primes().collect())
}

/// `|π(n)|`, the number of distinct prime divisors.
pub fn omega(n: u64) -> Result<u32> {
    Ok(factorize(n)?.len() as u32)
}

/// Product of the distinct primes dividing `n`.
pub fn radical(n: u64) -> Result<u64> {
    Ok(factorize(n)?.primes().product())
}

pub fn totient(n: u64) -> Result<u64> {
    Ok(factorize(n)?
        .pairs()
        .iter()
        .map(|&(p, a)| (p - 1) * p.pow(a - 1))
        .product())
}

pub fn p_valuation(n: u64, p: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut e = 0;
    let mut rest = n;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    Ok(e)
}

/// `gcd(n, φ(n)) = 1`.
pub fn is_burnside(n: u64) -> Result<bool> {
    Ok(gcd(n, totient(n)?) == 1)
}

/// Every ordered pair `(k, l)` with `k·l = n` and `gcd(k, l) = 1`, ascending by `k`.
/// Each prime power of `n` goes wholly to one side, so there are `2^{|π(n)|}` pairs.
pub fn coprime_factorizations(n: u64) -> Result<Vec<(u64, u64)>> {
    let powers: Vec<u64> = factorize(n)?.prime_powers().collect();
    let mut out: Vec<(u64, u64)> = (0u64..1 << powers.len())
        .map(|mask| {
            let k: u64 = powers
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &q)| q)
                .product();
            (k, n / k)
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1 % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    acc
}

/// Canonical representative of `x` in `[0, m)`.
pub fn reduce(x: i128, m: u64) -> u64 {
    x.rem_euclid(m as i128) as u64
}

/// `f_γ(δ) = 1 + γ + … + γ^{δ-1} mod m`, with `f_γ(0) = 0`.
///
/// Uses `f(2d) = f(d)·(1 + γ^d)` so the cost is logarithmic in `δ`.
pub fn geometric_sum(gamma: i128, delta: u64, modulus: u64) -> u64 {
    assert!(modulus >= 1, "modulus must be positive");
    let g = reduce(gamma, modulus);
    geometric_sum_with_power(g, delta, modulus).0
}

// Returns (f_γ(δ), γ^δ) mod m.
fn geometric_sum_with_power(g: u64, delta: u64, m: u64) -> (u64, u64) {
    if delta == 0 {
        return (0, 1 % m);
    }
    let (half_sum, half_pow) = geometric_sum_with_power(g, delta / 2, m);
    let factor = ((half_pow as u128 + 1) % m as u128) as u64;
    let doubled_sum = mul_mod(half_sum, factor, m);
    let doubled_pow = mul_mod(half_pow, half_pow, m);
    if delta.is_multiple_of(2) {
        (doubled_sum, doubled_pow)
    } else {
        (
            ((doubled_sum as u128 + doubled_pow as u128) % m as u128) as u64,
            mul_mod(doubled_pow, g, m),
        )
    }
}

/// Image of `x ∈ Z_n` in the `p`-primary component `Z_{p^{v_p(n)}}`.
pub fn crt_project(x: u64, n: u64, p: u64) -> Result<u64> {
    let v = p_valuation(n, p)?;
    if v == 0 {
        return Err(Error::PrimeNotInSupport { p, n });
    }
    Ok(x % p.pow(v))
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd(a as i128 % m as i128, m as i128);
    (g == 1).then(|| reduce(x, m))
}

/// Reassembles a residue from `(residue, modulus)` components with pairwise
/// coprime moduli. Returns `(x, product of moduli)`.
pub fn crt_combine(components: &[(u64, u64)]) -> Result<(u64, u64)> {
    let mut acc = (0u64, 1u64);
    for &(r, m) in components {
        if m == 0 {
            return Err(Error::Zero);
        }
        let (x, big) = acc;
        if gcd(big, m) != 1 {
            return Err(Error::NonCoprimeModuli(big, m));
        }
        let product = big.checked_mul(m).ok_or(Error::Overflow("crt_combine"))?;
        // x + big·t ≡ r (mod m)
        let inv = inverse_mod(big % m, m).expect("coprime moduli");
        let diff = reduce(r as i128 - x as i128, m);
        let t = mul_mod(diff, inv, m);
        let combined = (x as u128 + big as u128 * t as u128) % product as u128;
        acc = (combined as u64, product);
    }
    Ok(acc)
}

/// Coefficients of `∏_{p ∈ π(n)} (x + p^{v_p(n)})`, indexed by the power of `x`.
pub fn chi_coefficients(n: u64) -> Result<Vec<u128>> {
    let mut coeffs: Vec<u128> = vec![1];
    for q in factorize(n)?.prime_powers() {
        let mut next = vec![0u128; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] += c * q as u128;
        }
        coeffs = next;
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().is_empty());
        assert_eq!(factorize(45).unwrap().pairs(), &[(3, 2), (5, 1)]);
        assert_eq!(factorize(15).unwrap().pairs(), &[(3, 1), (5, 1)]);
        assert_eq!(factorize(0), Err(Error::Zero));
        assert_eq!(
            factorize(2 * 2 * 7 * 97).unwrap().pairs(),
            &[(2, 2), (7, 1), (97, 1)]
        );
    }

    #[test]
    fn support_radical_totient() {
        assert!(prime_support(1).unwrap().is_empty());
        assert_eq!(prime_support(45).unwrap(), BTreeSet::from([3, 5]));
        assert_eq!(prime_support(30).unwrap(), BTreeSet::from([2, 3, 5]));
        assert_eq!(radical(1).unwrap(), 1);
        assert_eq!(radical(45).unwrap(), 15);
        assert_eq!(radical(15).unwrap(), 15);
        assert_eq!(totient(1).unwrap(), 1);
        assert_eq!(totient(15).unwrap(), 8);
        assert_eq!(totient(21).unwrap(), 12);
    }

    #[test]
    fn totient_matches_unit_count() {
        for n in 1..200u64 {
            let units = (0..n).filter(|&a| gcd(a, n) == 1).count() as u64;
            assert_eq!(totient(n).unwrap(), units, "n = {n}");
        }
    }

    #[test]
    fn valuation() {
        assert_eq!(p_valuation(45, 3).unwrap(), 2);
        assert_eq!(p_valuation(45, 7).unwrap(), 0);
        assert_eq!(p_valuation(8, 2).unwrap(), 3);
        assert_eq!(p_valuation(45, 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn burnside() {
        assert!(is_burnside(15).unwrap());
        assert!(!is_burnside(21).unwrap());
        assert!(is_burnside(1).unwrap());
    }

    #[test]
    fn coprime_pairs() {
        assert_eq!(coprime_factorizations(1).unwrap(), vec![(1, 1)]);
        assert_eq!(
            coprime_factorizations(15).unwrap(),
            vec![(1, 15), (3, 5), (5, 3), (15, 1)]
        );
        assert_eq!(coprime_factorizations(9).unwrap(), vec![(1, 9), (9, 1)]);
        assert_eq!(coprime_factorizations(45).unwrap().len(), 4);
    }

    #[test]
    fn geometric_sum_examples() {
        assert_eq!(geometric_sum(4, 3, 9), 3);
        assert_eq!(geometric_sum(12345, 0, 7), 0);
        assert_eq!(geometric_sum(1, 5, 25), 5);
        assert_eq!(geometric_sum(-1, 3, 7), 1);
        assert_eq!(geometric_sum(5, 1, 1), 0);
    }

    #[test]
    fn geometric_sum_matches_naive_loop() {
        for m in 1..30u64 {
            for g in -5i128..12 {
                let mut naive = 0u64;
                let mut power = 1 % m;
                for delta in 0..60u64 {
                    assert_eq!(geometric_sum(g, delta, m), naive, "g={g} d={delta} m={m}");
                    naive = (naive + power) % m;
                    power = reduce(power as i128 * g, m);
                }
            }
        }
    }

    #[test]
    fn geometric_sum_large_delta() {
        // γ = 1 gives δ mod m
        assert_eq!(geometric_sum(1, 1_000_000, 1_000_003), 1_000_000);
        // (2^δ - 1) mod m
        let m = 1_000_000_007u64;
        assert_eq!(
            geometric_sum(2, 1_000_000, m),
            (pow_mod(2, 1_000_000, m) + m - 1) % m
        );
    }

    #[test]
    fn crt_examples() {
        assert_eq!(crt_project(7, 15, 3).unwrap(), 1);
        assert_eq!(crt_project(7, 15, 5).unwrap(), 2);
        assert_eq!(crt_project(0, 45, 3).unwrap(), 0);
        assert_eq!(
            crt_project(7, 15, 7),
            Err(Error::PrimeNotInSupport { p: 7, n: 15 })
        );
        assert_eq!(crt_combine(&[(1, 3), (2, 5)]).unwrap(), (7, 15));
        assert_eq!(crt_combine(&[(0, 3), (0, 5)]).unwrap(), (0, 15));
        let (x, m) = crt_combine(&[(2, 9), (3, 5)]).unwrap();
        assert_eq!((x, m), (38, 45));
        assert_eq!((x % 9, x % 5), (2, 3));
        assert_eq!(
            crt_combine(&[(1, 3), (2, 9)]),
            Err(Error::NonCoprimeModuli(3, 9))
        );
    }

    #[test]
    fn crt_round_trip() {
        for n in [1u64, 15, 45, 105, 225, 1001] {
            let f = factorize(n).unwrap();
            for x in 0..n {
                let parts: Vec<(u64, u64)> = f
                    .pairs()
                    .iter()
                    .map(|&(p, a)| (crt_project(x, n, p).unwrap(), p.pow(a)))
                    .collect();
                assert_eq!(crt_combine(&parts).unwrap(), (x, n));
            }
        }
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_coefficients(15).unwrap(), vec![15, 8, 1]);
        assert_eq!(chi_coefficients(9).unwrap(), vec![9, 1]);
        assert_eq!(chi_coefficients(1).unwrap(), vec![1]);
    }

    #[test]
    fn chi_weighted_sum_matches_direct_type_sum() {
        for n in (1..400u64).step_by(2) {
            let chi = chi_coefficients(n).unwrap();
            let lhs: u128 = chi.iter().enumerate().map(|(l, &c)| (1u128 << l) * c).sum();
            let rhs: u128 = coprime_factorizations(n)
                .unwrap()
                .into_iter()
                .map(|(k, l)| l as u128 * (1u128 << omega(k).unwrap()))
                .sum();
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn radical_divides_and_inverse() {
        for n in 1..300u64 {
            assert_eq!(n % radical(n).unwrap(), 0);
        }
        assert_eq!(inverse_mod(2, 9), Some(5));
        assert_eq!(inverse_mod(3, 9), None);
    }
}
