use rayon::prelude::*;
use serde::Serialize;

use super::check_orders;
use super::search::semiregular_closure;
use crate::error::Result;
use crate::group::{MklParams, SizeGuard};
use crate::holomorph::{HolElement, HolTable};

/// Images of the generators `r₁, s₁, t₁` of `Γ` under a regular embedding
/// `Γ → Hol(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EmbeddingRecord {
    pub gamma: MklParams,
    pub g: MklParams,
    pub image_r: HolElement,
    pub image_s: HolElement,
    pub image_t: HolElement,
}

/// Orders of every holomorph element, with `0` marking elements whose cyclic
/// subgroup already fails to be semiregular.
fn semiregular_orders(table: &HolTable) -> Vec<u64> {
    let e = table.identity();
    (0..table.size() as u32)
        .into_par_iter()
        .map(|x| {
            let mut acc = x;
            let mut n = 1u64;
            while acc != e {
                if table.g_of(acc) == 0 {
                    return 0;
                }
                acc = table.mul(acc, x);
                n += 1;
            }
            n
        })
        .collect()
}

/// All triples `(Φ(r₁), Φ(s₁), Φ(t₁))` in `Hol(g)` satisfying the defining
/// relations of `gamma = M(k₁,l₁)` whose generated subgroup is regular.
///
/// Candidates are filtered by element order (`| k₁`, `| 2`, `| l₁`) before the
/// relations `(s₁r₁)² = e`, `r₁t₁ = t₁r₁`, `s₁t₁ = t₁s₁` are tested.
pub fn enumerate_regular_embeddings(
    gamma: MklParams,
    g: MklParams,
    guard: &SizeGuard,
) -> Result<Vec<EmbeddingRecord>> {
    check_orders(gamma, g)?;
    let table = HolTable::new(g, guard)?;
    let orders = semiregular_orders(&table);
    let pick = |modulus: u64| -> Vec<u32> {
        (0..table.size() as u32)
            .filter(|&x| orders[x as usize] != 0 && modulus.is_multiple_of(orders[x as usize]))
            .collect()
    };
    let (rs, ss, ts) = (pick(gamma.k()), pick(2), pick(gamma.l()));
    let e = table.identity();
    let full = table.group_order();

    let mut found: Vec<(u32, u32, u32)> = rs
        .par_iter()
        .flat_map_iter(|&r| {
            let mut out = Vec::new();
            for &s in &ss {
                let sr = table.mul(s, r);
                if table.mul(sr, sr) != e {
                    continue;
                }
                if semiregular_closure(&table, &[r, s]).is_none() {
                    continue;
                }
                for &t in &ts {
                    if table.mul(r, t) != table.mul(t, r) || table.mul(s, t) != table.mul(t, s) {
                        continue;
                    }
                    if let Some(h) = semiregular_closure(&table, &[r, s, t]) {
                        if h.len() == full {
                            out.push((r, s, t));
                        }
                    }
                }
            }
            out
        })
        .collect();
    found.sort_unstable();
    Ok(found
        .into_iter()
        .map(|(r, s, t)| EmbeddingRecord {
            gamma,
            g,
            image_r: table.element(r),
            image_s: table.element(s),
            image_t: table.element(t),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(k: u64, l: u64) -> MklParams {
        MklParams::new(k, l).unwrap()
    }

    #[test]
    fn s3_into_hol_s3() {
        let recs = enumerate_regular_embeddings(m(3, 1), m(3, 1), &SizeGuard::default()).unwrap();
        assert_eq!(recs.len(), 12);
        assert!(recs.iter().all(|r| r.image_s.g.s == 1));
        assert!(recs
            .iter()
            .all(|r| r.image_r.g.s == 0 && r.image_t.g.s == 0));
    }

    #[test]
    fn generated_subgroups_are_regular_subgroups_of_the_right_type() {
        let g = m(5, 1);
        let gamma = m(1, 5);
        let recs = enumerate_regular_embeddings(gamma, g, &SizeGuard::default()).unwrap();
        let table = HolTable::new(g, &SizeGuard::default()).unwrap();
        let subgroups = super::super::find_regular_subgroups(g, &SizeGuard::default()).unwrap();
        for rec in &recs {
            let gens: Vec<u32> = [rec.image_r, rec.image_s, rec.image_t]
                .iter()
                .map(|h| table.index(h).unwrap())
                .collect();
            let sig = semiregular_closure(&table, &gens).unwrap();
            let h = subgroups
                .iter()
                .find(|h| h.signature == sig)
                .expect("listed");
            assert_eq!(h.type_tag, gamma.type_tag());
        }
    }
}
