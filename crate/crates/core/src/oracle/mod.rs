//! Brute-force ground truth over explicit holomorphs.
//!
//! `e′(Γ, G)` is the number of regular subgroups of `Hol(G)` isomorphic to
//! `Γ`, and `e(Γ, G) = |Aut Γ| / |Aut G| · e′(Γ, G)`. Both are computed here
//! by enumeration, independently of the closed forms in [`crate::formula`].

mod appendix;
mod braces;
mod embedding;
pub mod search;

use std::collections::BTreeMap;

use serde::Serialize;

pub use appendix::{verify_appendix_equations, AppendixReport, EquationCheck, JPrimeCase};
pub use braces::{skew_brace_classes, BraceCount};
pub use embedding::{enumerate_regular_embeddings, EmbeddingRecord};

use crate::error::{Error, Result};
use crate::group::{classify_order_2n_group, MklParams, SizeGuard, TypeTag};
use crate::holomorph::{HolElement, HolTable};

/// A regular subgroup of `Hol(G)` together with its isomorphism type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularSubgroup {
    pub params: MklParams,
    pub type_tag: TypeTag,
    /// Sorted by the canonical order `(code(g), b, d, c)`.
    pub elements: Vec<HolElement>,
    /// Holomorph indices of `elements` (see [`HolTable`]).
    #[serde(skip)]
    pub signature: Vec<u32>,
}

fn classify_signature(table: &HolTable, signature: &[u32]) -> TypeTag {
    classify_order_2n_group(signature, |x, y| table.mul(*x, *y))
        .expect("regular subgroups have order 2N")
}

fn build(table: &HolTable, signature: Vec<u32>) -> RegularSubgroup {
    RegularSubgroup {
        params: table.params(),
        type_tag: classify_signature(table, &signature),
        elements: signature.iter().map(|&x| table.element(x)).collect(),
        signature,
    }
}

/// Every regular subgroup of `Hol(g)`, sorted by signature.
pub fn find_regular_subgroups(g: MklParams, guard: &SizeGuard) -> Result<Vec<RegularSubgroup>> {
    let table = HolTable::new(g, guard)?;
    Ok(regular_subgroups_in(&table))
}

pub fn regular_subgroups_in(table: &HolTable) -> Vec<RegularSubgroup> {
    use rayon::prelude::*;
    search::transversal_backtrack(table)
        .into_par_iter()
        .map(|sig| build(table, sig))
        .collect()
}

/// Same set via the slower closure-join search.
pub fn find_regular_subgroups_by_closure(
    g: MklParams,
    guard: &SizeGuard,
) -> Result<Vec<RegularSubgroup>> {
    let table = HolTable::new(g, guard)?;
    Ok(search::closure_join(&table)
        .into_iter()
        .map(|sig| build(&table, sig))
        .collect())
}

/// Per-type counts of the regular subgroups of one holomorph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Inventory {
    pub g: MklParams,
    pub hol_size: u128,
    pub total: usize,
    pub by_type: BTreeMap<TypeTag, usize>,
}

impl Inventory {
    pub fn from_subgroups(g: MklParams, subgroups: &[RegularSubgroup]) -> Self {
        let mut by_type = BTreeMap::new();
        for h in subgroups {
            *by_type.entry(h.type_tag.clone()).or_insert(0) += 1;
        }
        Self {
            g,
            hol_size: g.hol_size(),
            total: subgroups.len(),
            by_type,
        }
    }

    pub fn compute(g: MklParams, guard: &SizeGuard) -> Result<Self> {
        Ok(Self::from_subgroups(g, &find_regular_subgroups(g, guard)?))
    }

    pub fn count(&self, tag: &TypeTag) -> usize {
        self.by_type.get(tag).copied().unwrap_or(0)
    }

    /// `e′(Γ, G)` read off the inventory.
    pub fn e_prime(&self, gamma: MklParams) -> Result<u128> {
        check_orders(gamma, self.g)?;
        Ok(self.count(&gamma.type_tag()) as u128)
    }

    /// `e(Γ, G) = |Aut Γ| / |Aut G| · e′(Γ, G)`, required to be an integer.
    pub fn e(&self, gamma: MklParams) -> Result<u128> {
        convert_to_e(gamma, self.g, self.e_prime(gamma)?)
    }
}

fn check_orders(gamma: MklParams, g: MklParams) -> Result<()> {
    if gamma.order() != g.order() {
        return Err(Error::OrderMismatch { gamma, g });
    }
    Ok(())
}

pub(crate) fn convert_to_e(gamma: MklParams, g: MklParams, e_prime: u128) -> Result<u128> {
    let num = gamma
        .automorphism_count()
        .checked_mul(e_prime)
        .ok_or(Error::Overflow("|Aut Γ|·e′"))?;
    let den = g.automorphism_count();
    if num % den != 0 {
        return Err(Error::Internal(format!(
            "|Aut {gamma}|·e′ = {num} is not divisible by |Aut {g}| = {den}"
        )));
    }
    Ok(num / den)
}

/// Number of regular subgroups of `Hol(g)` isomorphic to `gamma`.
pub fn e_prime_oracle(gamma: MklParams, g: MklParams, guard: &SizeGuard) -> Result<u128> {
    check_orders(gamma, g)?;
    Inventory::compute(g, guard)?.e_prime(gamma)
}

/// Number of Hopf–Galois structures of type `g` on a `gamma`-extension.
pub fn e_oracle(gamma: MklParams, g: MklParams, guard: &SizeGuard) -> Result<u128> {
    check_orders(gamma, g)?;
    Inventory::compute(g, guard)?.e(gamma)
}
