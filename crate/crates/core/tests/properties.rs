use hadamard_schemes::actions::{
    aut_group, iso_group, k_orbits, lower_bound, similar_check, OrbitOptions,
};
use hadamard_schemes::builder::build_sh;
use hadamard_schemes::hadamard::{order_four, sylvester, HadamardMatrix, MonomialPair, Signs};
use hadamard_schemes::perm::Perm;
use hadamard_schemes::scheme::{catalog, thin_group, trivial, wreath_product, AssociationScheme, GroupTable};
use proptest::prelude::*;
use proptest::strategy::ValueTree;

fn small_scheme(index: usize) -> AssociationScheme {
    match index {
        0..=3 => catalog::as4(index + 1),
        4 => trivial(2),
        5 => thin_group(&GroupTable::cyclic(3)).unwrap(),
        6 => thin_group(&GroupTable::cyclic(5)).unwrap(),
        7 => thin_group(&GroupTable::dihedral(3)).unwrap(),
        _ => trivial(3),
    }
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::new(v).unwrap())
}

fn signs(n: usize) -> impl Strategy<Value = Signs> {
    prop::collection::vec(any::<bool>(), n).prop_map(|v| Signs(v.into_iter().map(|b| if b { -1 } else { 1 }).collect()))
}

fn pair(n: usize) -> impl Strategy<Value = MonomialPair> {
    (perm(n), signs(n), perm(n), signs(n)).prop_map(|(row_perm, row_signs, col_perm, col_signs)| MonomialPair {
        row_perm,
        row_signs,
        col_perm,
        col_signs,
    })
}

fn scheme() -> impl Strategy<Value = AssociationScheme> {
    (0usize..9, 0usize..9, any::<bool>()).prop_flat_map(|(a, b, wreath)| {
        let s = if wreath {
            wreath_product(&small_scheme(a), &small_scheme(b % 5))
        } else {
            small_scheme(a)
        };
        let n = s.order();
        perm(n).prop_map(move |p| s.relabel_points(&p))
    })
}

fn equivalent(base: HadamardMatrix) -> impl Strategy<Value = HadamardMatrix> {
    let n = base.order();
    pair(n).prop_map(move |p| p.apply(&base))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn valencies_sum_to_order(s in scheme()) {
        prop_assert_eq!(s.valencies().iter().sum::<usize>(), s.order());
    }

    #[test]
    fn intersection_number_identities(s in scheme()) {
        let r = s.rank();
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    prop_assert_eq!(s.c(a, b, c), s.c(s.star(b), s.star(a), s.star(c)));
                    prop_assert_eq!(s.valency(c) * s.c(a, b, c), s.valency(a) * s.c(c, s.star(b), a));
                }
            }
        }
    }

    #[test]
    fn wreath_products_are_schemes(a in 0usize..9, b in 0usize..9) {
        let (x, y) = (small_scheme(a), small_scheme(b));
        let w = wreath_product(&x, &y);
        prop_assert_eq!(w.order(), x.order() * y.order());
        prop_assert_eq!(w.rank(), x.rank() + y.rank() - 1);
    }

    #[test]
    fn normalize_ignores_signs(h in equivalent(sylvester(3)), r in signs(8), c in signs(8)) {
        let moved = MonomialPair::signs(r, c).apply(&h);
        prop_assert_eq!(moved.normalize().matrix, h.normalize().matrix);
    }

    #[test]
    fn built_schemes_have_the_stated_valencies(i in 0usize..4, h in equivalent(order_four(0))) {
        let base = catalog::as4(i + 1);
        let built = build_sh(&base, &h).unwrap();
        let s = &built.scheme;
        prop_assert_eq!(s.rank(), base.rank() + 3);
        prop_assert_eq!(s.valency(built.t_tilde()), 1);
        prop_assert_eq!(s.valency(built.r_plus()), 4);
        prop_assert_eq!(s.valency(built.r_minus()), 4);
        for t in 1..base.rank() {
            prop_assert_eq!(s.valency(built.s_tilde(t)), 2 * base.valency(t));
        }
    }

    #[test]
    fn built_schemes_over_order_eight_bases(name in prop::sample::select(catalog::THIN_8.to_vec()), h in equivalent(sylvester(3))) {
        let base = catalog::thin8(name).unwrap();
        let built = build_sh(&base, &h).unwrap();
        prop_assert_eq!(built.scheme.order(), 32);
    }

    #[test]
    fn aut_is_normal_in_iso(s in scheme().prop_filter("degree cap", |s| s.order() <= 8)) {
        let aut = aut_group(&s).unwrap();
        let iso = iso_group(&s).unwrap();
        prop_assert!(aut.is_normal_in(&iso));
    }
}

#[test]
fn similarity_agrees_with_orbit_partition() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let sample: Vec<HadamardMatrix> = (0..20)
        .map(|_| equivalent(order_four(0)).new_tree(&mut runner).unwrap().current())
        .collect();
    for i in 1..=4 {
        let s = catalog::as4(i);
        let partition = k_orbits(&s, &order_four(0), &OrbitOptions::default()).unwrap();
        for a in &sample {
            for b in &sample {
                let same = partition.similarity_class_of(a) == partition.similarity_class_of(b);
                assert_eq!(similar_check(a, b, &s).unwrap(), same, "AS(4,{i})");
            }
        }
    }
}

#[test]
fn bound_never_exceeds_class_count() {
    let mut cases: Vec<(AssociationScheme, HadamardMatrix, u64)> =
        (1..=4).map(|i| (catalog::as4(i), order_four(0), 6)).collect();
    for name in ["C8", "Q8"] {
        cases.push((catalog::thin8(name).unwrap(), sylvester(3), 168));
    }
    cases.push((catalog::as8(5).unwrap(), sylvester(3), 168));
    for (s, h, aut_x0) in cases {
        let n = s.order() as u64;
        let aut = aut_group(&s).unwrap().order() as u64;
        let iso = iso_group(&s).unwrap().order() as u64;
        let classes = k_orbits(&s, &h, &OrbitOptions::default()).unwrap().similarity_class_count() as u64;
        assert!(lower_bound(aut, iso, aut_x0, n).ceiling_u64().unwrap() <= classes);
    }
}
