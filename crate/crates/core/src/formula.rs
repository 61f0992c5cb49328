//! Closed-form counts for `Γ = M(k₁,l₁)`, `G = M(k₂,l₂)`, `k₁l₁ = k₂l₂ = N` odd:
//!
//! ```text
//! e′(Γ, G) = l₁N / (k₁ (l₁,l₂) R(l₁)) · 2^{|π(k₂)|}
//! e(Γ, G)  = l₁l₂ / ((l₁,l₂) R(l₁))  · 2^{|π(k₂)|}
//! ```
//!
//! where `R` is the radical. They are asserted only when both pairs are
//! coprime and `R(N)` is a Burnside number; the Burnside hypothesis is not
//! needed for dihedral `Γ` (`l₁ = 1`). Outside these hypotheses the functions
//! return a [`PreconditionViolation`] rather than a number.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, PreconditionViolation, Result};
use crate::group::MklParams;
use crate::numtheory::{
    chi_coefficients, coprime_factorizations, gcd, is_burnside, omega, radical, totient,
};
use crate::oracle::convert_to_e;

/// A hypothesis a closed-form count relied on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Precondition {
    OddOrder,
    CoprimeGamma,
    CoprimeType,
    BurnsideRadical,
    /// `l₁ = 1`: the Burnside hypothesis is dropped.
    DihedralGamma,
}

impl fmt::Display for Precondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Precondition::OddOrder => "odd-order",
            Precondition::CoprimeGamma => "coprime-gamma",
            Precondition::CoprimeType => "coprime-type",
            Precondition::BurnsideRadical => "burnside-radical",
            Precondition::DihedralGamma => "dihedral-gamma",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub gamma: MklParams,
    pub g: MklParams,
    pub e_prime: u128,
    pub e: u128,
    pub preconditions_used: Vec<Precondition>,
}

fn coprime(p: MklParams) -> std::result::Result<(), PreconditionViolation> {
    let d = gcd(p.k(), p.l());
    if d == 1 {
        Ok(())
    } else {
        Err(PreconditionViolation::Coprimality {
            k: p.k(),
            l: p.l(),
            gcd: d,
        })
    }
}

/// Validates the hypotheses and lists the ones used.
pub fn check_preconditions(gamma: MklParams, g: MklParams) -> Result<Vec<Precondition>> {
    if gamma.n() != g.n() {
        return Err(Error::OrderMismatch { gamma, g });
    }
    let n = gamma.n();
    if n.is_multiple_of(2) {
        return Err(PreconditionViolation::OddOrder { n }.into());
    }
    coprime(gamma)?;
    coprime(g)?;
    let mut used = vec![
        Precondition::OddOrder,
        Precondition::CoprimeGamma,
        Precondition::CoprimeType,
    ];
    if gamma.l() == 1 {
        used.push(Precondition::DihedralGamma);
    } else {
        let rad = radical(n)?;
        if !is_burnside(rad)? {
            let d = gcd(rad, totient(rad)?);
            return Err(PreconditionViolation::Burnside {
                n,
                radical: rad,
                gcd: d,
            }
            .into());
        }
        used.push(Precondition::BurnsideRadical);
    }
    Ok(used)
}

fn exact_div(num: u128, den: u128, what: &str) -> Result<u128> {
    if den == 0 || !num.is_multiple_of(den) {
        return Err(Error::Internal(format!(
            "{what}: {num} / {den} is not exact"
        )));
    }
    Ok(num / den)
}

fn pow2(e: u32) -> Result<u128> {
    1u128.checked_shl(e).ok_or(Error::Overflow("2^|π(k₂)|"))
}

fn mul(a: u128, b: u128) -> Result<u128> {
    a.checked_mul(b).ok_or(Error::Overflow("closed-form count"))
}

/// Number of regular subgroups of `Hol(G)` isomorphic to `Γ`.
pub fn e_prime_formula(gamma: MklParams, g: MklParams) -> Result<u128> {
    check_preconditions(gamma, g)?;
    e_prime_unchecked(gamma, g)
}

fn e_prime_unchecked(gamma: MklParams, g: MklParams) -> Result<u128> {
    let (k1, l1) = (gamma.k() as u128, gamma.l() as u128);
    let n = gamma.n() as u128;
    let num = mul(mul(l1, n)?, pow2(omega(g.k())?)?)?;
    let den = mul(
        mul(k1, gcd(gamma.l(), g.l()) as u128)?,
        radical(gamma.l())? as u128,
    )?;
    exact_div(num, den, "e′ formula")
}

/// Number of Hopf–Galois structures of type `G` on a Galois extension with group `Γ`.
pub fn e_formula(gamma: MklParams, g: MklParams) -> Result<u128> {
    Ok(count(gamma, g)?.e)
}

/// Both counts, with the conversion `e = |Aut Γ|/|Aut G| · e′` checked.
pub fn count(gamma: MklParams, g: MklParams) -> Result<CountReport> {
    let preconditions_used = check_preconditions(gamma, g)?;
    let e_prime = e_prime_unchecked(gamma, g)?;
    let (l1, l2) = (gamma.l() as u128, g.l() as u128);
    let num = mul(mul(l1, l2)?, pow2(omega(g.k())?)?)?;
    let den = mul(gcd(gamma.l(), g.l()) as u128, radical(gamma.l())? as u128)?;
    let e = exact_div(num, den, "e formula")?;
    let converted = convert_to_e(gamma, g, e_prime)?;
    if converted != e {
        return Err(Error::Internal(format!(
            "e = {e} disagrees with |Aut Γ|/|Aut G|·e′ = {converted} for ({gamma}, {g})"
        )));
    }
    Ok(CountReport {
        gamma,
        g,
        e_prime,
        e,
        preconditions_used,
    })
}

/// `e(D_2N, D_2k × C_l) = 0` when `gcd(k, l) ≠ 1`.
pub fn e_dihedral_noncoprime(n: u64, k: u64, l: u64) -> Result<u128> {
    if n.is_multiple_of(2) {
        return Err(PreconditionViolation::OddOrder { n }.into());
    }
    let g = MklParams::new(k, l)?;
    if g.n() != n {
        return Err(Error::OrderMismatch {
            gamma: MklParams::dihedral(n)?,
            g,
        });
    }
    if g.is_coprime() {
        return Err(Error::CoprimeInput { k, l });
    }
    Ok(0)
}

/// Lower bound for the number of Hopf–Galois structures on a `D_2N`-extension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DihedralLowerBound {
    pub n: u64,
    /// `Σ e(D_2N, M(k,l))` over coprime `k·l = N`, i.e. `Σ l·2^{|π(k)|}`.
    pub authoritative: u128,
    /// `Σ_L 2^L χ(L)` with `χ(L)` the coefficient of `x^L` in `∏ (x + p^{v_p(N)})`.
    pub chi_weighted: u128,
    /// `Σ_{M=0}^{N} 2^M χ(N − M)` evaluated literally, `χ` vanishing past its
    /// degree; `None` when it exceeds `u128`.
    pub printed: Option<u128>,
}

fn printed_bound(n: u64, chi: &[u128]) -> Option<u128> {
    let mut total = 0u128;
    for m in 0..=n {
        if let Some(&c) = chi.get((n - m) as usize) {
            let power = 1u128.checked_shl(u32::try_from(m).ok()?)?;
            total = total.checked_add(power.checked_mul(c)?)?;
        }
    }
    Some(total)
}

pub fn dihedral_total_lower_bound(n: u64) -> Result<DihedralLowerBound> {
    if n.is_multiple_of(2) {
        return Err(PreconditionViolation::OddOrder { n }.into());
    }
    let gamma = MklParams::dihedral(n)?;
    let mut authoritative = 0u128;
    for (k, l) in coprime_factorizations(n)? {
        authoritative += e_formula(gamma, MklParams::new(k, l)?)?;
    }
    let chi = chi_coefficients(n)?;
    let mut chi_weighted = 0u128;
    for (power, &c) in chi.iter().enumerate() {
        chi_weighted += mul(pow2(power as u32)?, c)?;
    }
    let printed = printed_bound(n, &chi);
    Ok(DihedralLowerBound {
        n,
        authoritative,
        chi_weighted,
        printed,
    })
}

/// Skew braces with additive group `additive` and multiplicative group
/// `multiplicative`, as the closed form assigns them: the `e′` expression with
/// `Γ` the additive and `G` the multiplicative group.
pub fn skew_brace_formula(additive: MklParams, multiplicative: MklParams) -> Result<u128> {
    e_prime_formula(additive, multiplicative)
}
