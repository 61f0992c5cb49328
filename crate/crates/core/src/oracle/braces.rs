use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::regular_subgroups_in;
use crate::error::Result;
use crate::group::{MklParams, SizeGuard, TypeTag};
use crate::holomorph::HolTable;

/// Regular subgroups of `Hol(Γ)` of one type, and their classes under
/// conjugation by `Aut(Γ)` (that is, skew braces with additive group `Γ`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BraceCount {
    pub subgroup_count: usize,
    pub orbit_count: usize,
}

/// `(e, f)·H·(e, f)⁻¹` has elements `(f(g), f∘φ∘f⁻¹)` for `(g, φ) ∈ H`.
fn conjugate(table: &HolTable, f: u32, signature: &[u32]) -> Vec<u32> {
    let finv = table.aut_inverse(f);
    let mut out: Vec<u32> = signature
        .iter()
        .map(|&x| {
            let g = table.aut_apply(f, table.g_of(x));
            let phi = table.aut_compose(table.aut_compose(f, table.f_of(x)), finv);
            table.pack(g, phi)
        })
        .collect();
    out.sort_unstable();
    out
}

/// Per multiplicative type: subgroup count and `Aut(Γ)`-orbit count.
pub fn skew_brace_classes(
    gamma: MklParams,
    guard: &SizeGuard,
) -> Result<BTreeMap<TypeTag, BraceCount>> {
    let table = HolTable::new(gamma, guard)?;
    let subgroups = regular_subgroups_in(&table);
    let position: HashMap<&[u32], usize> = subgroups
        .iter()
        .enumerate()
        .map(|(i, h)| (h.signature.as_slice(), i))
        .collect();

    let mut orbit_of = vec![usize::MAX; subgroups.len()];
    let mut result: BTreeMap<TypeTag, BraceCount> = BTreeMap::new();
    for (i, h) in subgroups.iter().enumerate() {
        let entry = result.entry(h.type_tag.clone()).or_insert(BraceCount {
            subgroup_count: 0,
            orbit_count: 0,
        });
        entry.subgroup_count += 1;
        if orbit_of[i] != usize::MAX {
            continue;
        }
        entry.orbit_count += 1;
        for f in 0..table.aut_count() as u32 {
            let image = conjugate(&table, f, &h.signature);
            let j = *position
                .get(image.as_slice())
                .expect("conjugates of regular subgroups are regular");
            debug_assert_eq!(subgroups[j].type_tag, h.type_tag);
            orbit_of[j] = i;
        }
    }
    Ok(result)
}
