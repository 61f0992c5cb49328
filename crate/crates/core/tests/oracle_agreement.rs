use hgcount::formula::{e_formula, e_prime_formula};
use hgcount::numtheory::coprime_factorizations;
use hgcount::oracle::{find_regular_subgroups, find_regular_subgroups_by_closure, Inventory};
use hgcount::{MklParams, SizeGuard, TypeTag};

fn types(n: u64) -> Vec<MklParams> {
    coprime_factorizations(n)
        .unwrap()
        .into_iter()
        .map(|(k, l)| MklParams::new(k, l).unwrap())
        .collect()
}

#[test]
fn both_searches_find_the_same_subgroups() {
    for (k, l) in [(3, 1), (1, 3), (5, 1), (3, 3), (9, 1)] {
        let g = MklParams::new(k, l).unwrap();
        let a = find_regular_subgroups(g, &SizeGuard::default()).unwrap();
        let b = find_regular_subgroups_by_closure(g, &SizeGuard::default()).unwrap();
        assert_eq!(a, b, "{g}");
    }
}

#[test]
fn formula_matches_oracle_for_small_orders() {
    for n in [3u64, 5, 9, 11, 15] {
        for g in types(n) {
            let inv = Inventory::compute(g, &SizeGuard::default()).unwrap();
            for gamma in types(n) {
                assert_eq!(
                    e_prime_formula(gamma, g).unwrap(),
                    inv.e_prime(gamma).unwrap()
                );
                assert_eq!(e_formula(gamma, g).unwrap(), inv.e(gamma).unwrap());
            }
        }
    }
}

#[test]
fn n9_other_bucket_is_separate() {
    // Hol(D18) and Hol(C18) also contain regular subgroups with odd part C3 × C3.
    for g in types(9) {
        let inv = Inventory::compute(g, &SizeGuard::default()).unwrap();
        let m_total: usize = types(9).iter().map(|t| inv.count(&t.type_tag())).sum();
        let other: usize = inv
            .by_type
            .iter()
            .filter(|(t, _)| matches!(t, TypeTag::Other { .. }))
            .map(|(_, c)| c)
            .sum();
        assert_eq!(m_total + other, inv.total);
    }
}

#[test]
fn regular_subgroups_act_regularly() {
    let g = MklParams::new(5, 3).unwrap();
    let elements = g.all_elements(&SizeGuard::default()).unwrap();
    for h in find_regular_subgroups(g, &SizeGuard::default()).unwrap() {
        assert_eq!(h.elements.len(), elements.len());
        let mut images: Vec<u64> = h
            .elements
            .iter()
            .map(|x| g.encode(&g.hol_act(x, &g.identity())))
            .collect();
        images.sort_unstable();
        assert_eq!(images, (0..g.order()).collect::<Vec<_>>());
    }
}
