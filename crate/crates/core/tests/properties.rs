use minorbit::hwmod::{secant_defect, HWModule};
use minorbit::involutions::{catalog, omin_intersections};
use minorbit::matrixlab::checks::classical_minimal;
use minorbit::matrixlab::sample::{random_element, rng_for};
use minorbit::matrixlab::{is_minimal_nilpotent, min_orbit_sample, realize_pair, PairKind};
use minorbit::orbits::{
    diagram_from_partition, grading_summary, minimal_orbit_diagram, partition_orbit_dim,
    sl2_decomposition, transpose_partition, validate_partition, Classical,
};
use minorbit::rootsys::{Letter, RootSystem, SimpleType, Weight};
use proptest::prelude::*;

fn simple_types() -> impl Strategy<Value = SimpleType> {
    prop_oneof![
        (1usize..=7).prop_map(|n| SimpleType::new(Letter::A, n)),
        (2usize..=7).prop_map(|n| SimpleType::new(Letter::B, n)),
        (2usize..=7).prop_map(|n| SimpleType::new(Letter::C, n)),
        (4usize..=7).prop_map(|n| SimpleType::new(Letter::D, n)),
        (6usize..=8).prop_map(|n| SimpleType::new(Letter::E, n)),
        Just(SimpleType::new(Letter::F, 4)),
        Just(SimpleType::new(Letter::G, 2)),
    ]
}

/// A partition of `n` as a non-increasing list.
fn partition_of(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(1usize..=n, 1..=n).prop_map(move |cuts| {
        let mut rest = n;
        let mut out = Vec::new();
        for c in cuts {
            if rest == 0 {
                break;
            }
            let p = c.min(rest);
            out.push(p);
            rest -= p;
        }
        if rest > 0 {
            out.push(rest);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    })
}

fn classical_partition() -> impl Strategy<Value = (Classical, Vec<usize>)> {
    let alg = prop_oneof![
        (2usize..=9).prop_map(Classical::Sl),
        (2usize..=5).prop_map(|k| Classical::Sp(2 * k)),
        (7usize..=11).prop_map(Classical::So),
    ];
    alg.prop_flat_map(|a| (Just(a), partition_of(a.size())))
        .prop_filter("valid Jordan type", |(a, p)| {
            validate_partition(*a, p).is_ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn numbering_maps_are_inverse(t in simple_types()) {
        let rs = RootSystem::from_type(t).unwrap();
        for i in 0..rs.rank() {
            prop_assert_eq!(rs.native_index(rs.bourbaki_index(i)), i);
        }
    }

    #[test]
    fn duality_is_an_involution(t in simple_types()) {
        let rs = RootSystem::from_type(t).unwrap();
        let p = rs.duality_permutation();
        for i in 0..rs.rank() {
            prop_assert_eq!(p[p[i]], i);
            let w = Weight::fundamental(rs.rank(), i);
            prop_assert_eq!(rs.weyl_dim(&w).unwrap(), rs.weyl_dim(&rs.dual_weight(&w).unwrap()).unwrap());
        }
    }

    #[test]
    fn minimal_grading_is_symmetric_and_sums_to_dim(t in simple_types()) {
        let rs = RootSystem::from_type(t).unwrap();
        let s = grading_summary(&rs, &minimal_orbit_diagram(&rs));
        for (&i, &d) in &s.dims {
            prop_assert_eq!(s.dim(-i), d);
        }
        prop_assert_eq!(s.total(), rs.dim());
        prop_assert_eq!(s.dim(2), 1);
        prop_assert_eq!(s.orbit_dim, s.dim(1) + 2);
        prop_assert_eq!(s.height, 2);
        let m = sl2_decomposition(&s).unwrap();
        prop_assert_eq!(m.iter().enumerate().map(|(j, k)| k * (j + 1)).sum::<usize>(), rs.dim());
    }

    #[test]
    fn catalog_pairs_split_g(t in simple_types()) {
        let rs = RootSystem::from_type(t).unwrap();
        for p in catalog(&rs).unwrap() {
            prop_assert_eq!(p.dim_g0 + p.dim_g1, rs.dim(), "{}", &p.id);
            // rank bound, with equality exactly when dim g1 = (dim g + rank) / 2
            prop_assert!(p.symmetric_rank() <= rs.rank());
            prop_assert_eq!(p.symmetric_rank() == rs.rank(), 2 * p.dim_g1 == rs.dim() + rs.rank(), "{}", &p.id);
            let x = omin_intersections(&rs, &p);
            prop_assert!(x.meets_g0 || x.meets_g1, "{}", &p.id);
        }
    }

    #[test]
    fn partition_and_diagram_dimensions_agree((alg, p) in classical_partition()) {
        let (rs, d) = diagram_from_partition(alg, &p).unwrap();
        let s = grading_summary(&rs, &d);
        prop_assert_eq!(partition_orbit_dim(alg, &p).unwrap(), s.orbit_dim);
        prop_assert_eq!(s.total(), alg.dim());
        for (&i, &k) in &s.dims {
            prop_assert_eq!(s.dim(-i), k);
        }
        let m = sl2_decomposition(&s).unwrap();
        prop_assert_eq!(m.iter().enumerate().map(|(j, k)| k * (j + 1)).sum::<usize>(), alg.dim());
        prop_assert_eq!(transpose_partition(&transpose_partition(&p)), p);
    }

    #[test]
    fn orbit_dims_are_monotone_in_dominance((alg, p) in classical_partition()) {
        // merging two parts of sl Jordan type moves up in the closure order
        prop_assume!(matches!(alg, Classical::Sl(_)) && p.len() >= 2);
        let mut q = p.clone();
        let last = q.pop().unwrap();
        q[0] += last;
        q.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert!(partition_orbit_dim(alg, &q).unwrap() > partition_orbit_dim(alg, &p).unwrap());
    }
}

fn small_weights() -> impl Strategy<Value = (SimpleType, Vec<i64>)> {
    let t = prop_oneof![
        Just(SimpleType::new(Letter::A, 2)),
        Just(SimpleType::new(Letter::A, 3)),
        Just(SimpleType::new(Letter::B, 2)),
        Just(SimpleType::new(Letter::C, 3)),
        Just(SimpleType::new(Letter::G, 2)),
    ];
    t.prop_flat_map(|t| (Just(t), proptest::collection::vec(0i64..=2, t.rank)))
        .prop_filter("nonzero", |(_, w)| w.iter().any(|&x| x > 0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn modules_match_weyl_and_both_defects_agree((t, w) in small_weights()) {
        let rs = RootSystem::from_type(t).unwrap();
        let w = Weight(w);
        let weyl = rs.weyl_dim(&w).unwrap();
        prop_assume!(weyl <= 200);
        let m = HWModule::build(&rs, &w, 200).unwrap();
        prop_assert_eq!(m.dim() as u128, weyl);
        prop_assert!(m.check_relations().is_ok());
        let d = secant_defect(&m);
        prop_assert_eq!(d.delta, d.delta_by_rank);
        prop_assert_eq!(d.orbit_dim, rs.min_orbit_dim(&w).unwrap());
    }
}

fn symmetric_pairs() -> impl Strategy<Value = PairKind> {
    prop_oneof![
        (2usize..=4).prop_map(|n| PairKind::SlSo { n }),
        (2usize..=3).prop_map(|n| PairKind::SlSp { n }),
        (2usize..=3).prop_map(|n| PairKind::SpGl { n }),
        Just(PairKind::SoEvenOdd { n: 3 }),
        Just(PairKind::SoOddEven { n: 3 }),
        Just(PairKind::SpSp { n: 3, k: 1 }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn projections_respect_sigma(kind in symmetric_pairs(), seed in any::<u64>()) {
        let r = realize_pair(kind).unwrap();
        let mut rng = rng_for(seed);
        let x = random_element(&r.g, &mut rng);
        let y = random_element(&r.g, &mut rng);
        let sx = r.sigma(&x);
        // φ∘σ = φ and ψ∘σ = -ψ
        prop_assert_eq!(r.p0(&sx), r.p0(&x));
        prop_assert_eq!(r.p1(&sx), r.p1(&x).neg());
        prop_assert_eq!(r.p0(&x).add(&r.p1(&x)), x.clone());
        prop_assert_eq!(r.sigma(&sx), x.clone());
        prop_assert_eq!(r.sigma(&x.commutator(&y)), sx.commutator(&r.sigma(&y)));
        prop_assert!(r.in_g1(&r.p0(&x).commutator(&r.p1(&y))));
        prop_assert!(r.in_g0(&r.p1(&x).commutator(&r.p1(&y))));
    }

    #[test]
    fn samples_are_minimal(kind in symmetric_pairs(), seed in any::<u64>()) {
        let r = realize_pair(kind).unwrap();
        let e = min_orbit_sample(&r, seed);
        prop_assert!(is_minimal_nilpotent(&r, &e));
        prop_assert!(classical_minimal(&r, &e));
    }
}
