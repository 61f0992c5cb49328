use hgcount::formula::{count, dihedral_total_lower_bound};
use hgcount::numtheory::{
    coprime_factorizations, crt_combine, crt_project, factorize, gcd, geometric_sum, p_valuation,
    pow_mod, radical,
};
use hgcount::{MklParams, PaperTriple, SizeGuard};
use proptest::prelude::*;

fn odd(max: u64) -> impl Strategy<Value = u64> {
    (0..max / 2).prop_map(|x| 2 * x + 1)
}

fn params(max: u64) -> impl Strategy<Value = MklParams> {
    (odd(max), odd(max)).prop_map(|(k, l)| MklParams::new(k, l).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn geometric_sum_is_periodic(
        p in prop::sample::select(vec![3u64, 5, 7, 11]),
        n in 1u32..=3,
        gamma_step in 0u64..1000,
        d1 in 0u64..3000,
        d2 in 0u64..3000,
    ) {
        let q = p.pow(n);
        let gamma = 1 + p * (gamma_step % (q / p).max(1));
        let same = geometric_sum(gamma as i128, d1, q) == geometric_sum(gamma as i128, d2, q);
        prop_assert_eq!(same, d1 % q == d2 % q);
    }

    #[test]
    fn geometric_sum_matches_naive(gamma in -50i128..50, delta in 0u64..200, modulus in 1u64..500) {
        let mut acc = 0i128;
        let mut power = 1i128;
        let m = modulus as i128;
        for _ in 0..delta {
            acc = (acc + power).rem_euclid(m);
            power = (power * gamma).rem_euclid(m);
        }
        prop_assert_eq!(geometric_sum(gamma, delta, modulus) as i128, acc);
    }

    #[test]
    fn valuation_of_prime_power_sums(
        p in prop::sample::select(vec![3u64, 5, 7]),
        n in 1u32..=3,
        m in 0u32..=3,
        x in 0u64..343,
    ) {
        let q = p.pow(n);
        prop_assume!(q <= 343);
        let m = m % (n + 1);
        // b^{p^m} ≡ 1 (mod p^n) iff b ≡ 1 (mod p^{max(n-m,1)}) for odd p.
        let b = (1 + p.pow((n - m).max(1)) * x) % q;
        let pm = p.pow(m);
        prop_assert_eq!(pow_mod(b, pm, q), 1);
        let v = geometric_sum(b as i128, pm, p.pow(n + m + 1));
        prop_assert_eq!(p_valuation(v, p).unwrap(), m);
    }

    #[test]
    fn crt_round_trip(n in 1u64..5000, x in 0u64..1_000_000) {
        let x = x % n;
        let components: Vec<(u64, u64)> = factorize(n).unwrap().pairs().iter()
            .map(|&(p, a)| (crt_project(x, n, p).unwrap(), p.pow(a)))
            .collect();
        let (y, modulus) = crt_combine(&components).unwrap();
        prop_assert_eq!(modulus, n);
        prop_assert_eq!(y, x);
    }

    #[test]
    fn radical_divides(n in 1u64..100_000) {
        let r = radical(n).unwrap();
        prop_assert_eq!(n % r, 0);
        prop_assert_eq!(radical(r).unwrap(), r);
    }

    #[test]
    fn group_axioms_hold(p in params(12), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let size = p.order();
        let [x, y, z] = [a, b, c].map(|v| p.decode(v % size));
        prop_assert_eq!(p.mul(&p.mul(&x, &y), &z), p.mul(&x, &p.mul(&y, &z)));
        prop_assert_eq!(p.mul(&x, &p.inverse(&x)), p.identity());
        prop_assert_eq!(p.element_order(&x), p.element_order_by_iteration(&x));
        prop_assert_eq!(p.decode(p.encode(&x)), x);
    }

    #[test]
    fn automorphisms_act_as_homomorphisms(p in params(10), seed in any::<u64>(), a in any::<u64>(), b in any::<u64>()) {
        let auts = p.all_automorphisms(&SizeGuard::default()).unwrap();
        let f = auts[(seed % auts.len() as u64) as usize];
        let size = p.order();
        let (x, y) = (p.decode(a % size), p.decode(b % size));
        prop_assert_eq!(p.aut_apply(&f, &p.mul(&x, &y)), p.mul(&p.aut_apply(&f, &x), &p.aut_apply(&f, &y)));
        let g = p.aut_inverse(&f);
        prop_assert_eq!(p.aut_compose(&f, &g), p.aut_identity());
    }

    #[test]
    fn holomorph_order_and_triples(p in params(8), seed in any::<u64>()) {
        let elements = p.all_hol_elements(&SizeGuard::default()).unwrap();
        let h = elements[(seed % elements.len() as u64) as usize];
        prop_assert_eq!(p.hol_order(&h), p.hol_order_by_iteration(&h));
        let triple = p.to_paper_triple(&h);
        prop_assert_eq!(p.from_paper_triple(&triple).unwrap(), h);
        let text = triple.to_string();
        let parsed: PaperTriple = text.parse().unwrap();
        prop_assert_eq!(p.from_paper_triple(&parsed).unwrap(), h);
    }

    #[test]
    fn closed_forms_are_consistent(n in odd(400)) {
        let types = coprime_factorizations(n).unwrap();
        for &(k1, l1) in &types {
            for &(k2, l2) in &types {
                let (gamma, g) = (MklParams::new(k1, l1).unwrap(), MklParams::new(k2, l2).unwrap());
                if let Ok(report) = count(gamma, g) {
                    prop_assert!(report.e >= 1);
                    prop_assert_eq!(report.e * k2 as u128, report.e_prime * k1 as u128);
                    prop_assert_eq!(report.e % (l1 * l2 / gcd(l1, l2) / radical(l1).unwrap()) as u128, 0);
                }
            }
        }
        let bound = dihedral_total_lower_bound(n).unwrap();
        prop_assert_eq!(bound.authoritative, bound.chi_weighted);
    }
}
