//! Exact matrix models of classical symmetric pairs and sampled checks of the projection,
//! fiber and component statements on them. Arithmetic is over Q(i); nothing is toleranced.

pub mod checks;
pub mod realize;
pub mod sample;
pub mod suite;

use crate::linalg::{Mat, Qi};

/// A matrix over Q(i).
pub type M = Mat<Qi>;

pub use checks::{
    complete_normal_triple, component_properties, image_checks, is_minimal_nilpotent,
    projection_rank, verify_fibers, Check, NormalTriple, Projection,
};
pub use realize::{realize_pair, PairKind, PairRealization};
pub use sample::min_orbit_sample;
pub use suite::{default_pairs, run_suite, sample_checks, SuiteReport};

#[cfg(test)]
mod tests {
    use super::checks::*;
    use super::realize::*;
    use super::sample::*;
    use super::M;
    use crate::exec::Mode;
    use crate::linalg::{ci, imag_unit, jordan_partition, Mat, Qi};
    use num_traits::One;

    fn units(n: usize, entries: &[(usize, usize, i64)]) -> M {
        entries.iter().fold(Mat::zeros(n, n), |acc, &(i, j, c)| {
            acc.add(&Mat::unit(n, i, j).scale(&ci(c)))
        })
    }

    #[test]
    fn realizations_match_catalog_dims() {
        let cases = [
            ("sl3-so3", (8, 3, 5), "A2/A1"),
            ("sp4-gl2", (10, 4, 6), "C2/A1+T1"),
            ("so8-so7", (28, 21, 7), "D4/B3"),
            ("so7-so6", (21, 15, 6), "B3/A3"),
            ("sl4-sp4", (15, 10, 5), "A3/C2"),
            ("sp6-sp2+sp4", (21, 13, 8), "C3/A1+C2"),
        ];
        for (name, dims, id) in cases {
            let r = realize_pair(PairKind::parse(name).unwrap()).unwrap();
            assert_eq!((r.g.len(), r.g0.len(), r.g1.len()), dims, "{name}");
            assert_eq!(r.pair.as_ref().unwrap().id, id, "{name}");
            assert_eq!(r.kind.to_string(), name);
        }
        let lr = realize_pair(PairKind::LongRoot { n: 3 }).unwrap();
        assert_eq!((lr.g0.len(), lr.g1.len()), (9, 12));
        assert!(lr.pair.is_none() && !lr.is_symmetric());
    }

    #[test]
    fn exceptional_and_bad_names_are_rejected() {
        assert!(matches!(
            PairKind::parse("e6-f4"),
            Err(crate::Error::Unsupported(..))
        ));
        assert!(PairKind::parse("sl3-sp3").is_err());
        assert!(realize_pair(PairKind::SoOddEven { n: 2 }).is_err());
    }

    #[test]
    fn sl3_so3_sigma_is_negative_transpose() {
        let r = realize_pair(PairKind::SlSo { n: 3 }).unwrap();
        let x = units(
            3,
            &[(0, 1, 2), (1, 2, -1), (2, 0, 5), (0, 0, 1), (1, 1, -1)],
        );
        assert_eq!(r.sigma(&x), x.transpose().neg());
        assert_eq!(r.p0(&x).add(&r.p1(&x)), x);
    }

    #[test]
    fn sp4_gl2_block_form() {
        let r = realize_pair(PairKind::SpGl { n: 2 }).unwrap();
        for x in &r.g0 {
            for (i, j) in [(0, 2), (0, 3), (1, 2), (1, 3), (2, 0), (3, 1)] {
                assert!(x.get(i, j) == &ci(0));
            }
        }
    }

    #[test]
    fn minimal_nilpotent_test() {
        let sl3 = realize_pair(PairKind::SlSo { n: 3 }).unwrap();
        assert!(is_minimal_nilpotent(&sl3, &units(3, &[(0, 2, 1)])));
        assert!(!is_minimal_nilpotent(&sl3, &Mat::zeros(3, 3)));
        assert!(!is_minimal_nilpotent(
            &sl3,
            &units(3, &[(0, 1, 1), (1, 2, 1)])
        ));
        assert!(!is_minimal_nilpotent(
            &sl3,
            &units(3, &[(0, 0, 1), (1, 1, -1)])
        ));
        for seed in 0..3 {
            let x = min_orbit_sample(&sl3, seed);
            assert!(is_minimal_nilpotent(&sl3, &x) && x.rank() == 1 && x.mul(&x).is_zero());
        }
        let so7 = realize_pair(PairKind::SoOddEven { n: 3 }).unwrap();
        let x = min_orbit_sample(&so7, 11);
        assert!(is_minimal_nilpotent(&so7, &x) && x.rank() == 2 && x.mul(&x).is_zero());
        let sp4 = realize_pair(PairKind::SpGl { n: 2 }).unwrap();
        let x = min_orbit_sample(&sp4, 5);
        assert!(is_minimal_nilpotent(&sp4, &x) && x.rank() == 1);
        assert_eq!(min_orbit_sample(&sp4, 5), x);
    }

    #[test]
    fn sl2_so2_triple() {
        let r = realize_pair(PairKind::SlSo { n: 2 }).unwrap();
        let half = Qi::one() / ci(2);
        let i = imag_unit();
        let e = Mat::from_fn(2, 2, |a, b| match (a, b) {
            (0, 0) => half.clone(),
            (1, 1) => -half.clone(),
            _ => half.clone() * i.clone(),
        });
        let t = complete_normal_triple(&r, &e).unwrap();
        assert!(t.0.holds() && r.in_g0(&t.0.h) && r.in_g1(&t.0.f));
        let not_g1 = units(2, &[(0, 1, 1), (1, 0, -1)]);
        assert!(matches!(
            complete_normal_triple(&r, &not_g1),
            Err(crate::Error::Precondition(_))
        ));
    }

    #[test]
    fn sl4_sp4_components() {
        let r = realize_pair(PairKind::SlSp { n: 2 }).unwrap();
        let report = super::sample_checks(&r, 3);
        assert!(report.passed(), "{report:?}");
        let e = min_orbit_sample(&r, 3);
        let (a, b) = split(&r, &e);
        assert!(a.commutator(&b).is_zero());
        assert_eq!(jordan_partition(&b), Some(vec![2, 2]));
    }

    #[test]
    fn so8_so7_fibers_and_partitions() {
        let r = realize_pair(PairKind::SoEvenOdd { n: 3 }).unwrap();
        let report = super::sample_checks(&r, 7);
        assert!(report.passed(), "{report:?}");
        let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
        for want in [
            "partition(a) = co0",
            "partition(b) = tilde",
            "phi-fiber a+b",
            "three-lines exclusion",
        ] {
            assert!(names.contains(&want), "{want}");
        }
    }

    #[test]
    fn sl3_so3_fibers_images_and_ranks() {
        let r = realize_pair(PairKind::SlSo { n: 3 }).unwrap();
        let report = super::sample_checks(&r, 1);
        assert!(report.passed(), "{report:?}");
        assert_eq!(
            report
                .checks
                .iter()
                .filter(|c| c.name == "phi-fiber family")
                .count(),
            4
        );
        let x = min_orbit_sample(&r, 1);
        assert_eq!(projection_rank(&r, &x, Projection::Psi), 4);
    }

    #[test]
    fn projection_ranks_of_examples() {
        let lr = realize_pair(PairKind::LongRoot { n: 2 }).unwrap();
        let x = min_orbit_sample(&lr, 2);
        assert_eq!(projection_rank(&lr, &x, Projection::Phi), 4);
        // the (2,2) orbit of sl4 under the maximal-rank involution
        let r = realize_pair(PairKind::SlSo { n: 4 }).unwrap();
        let mut rng = rng_for(4);
        let x = conjugate_random(&units(4, &[(0, 1, 1), (2, 3, 1)]), &r.g, 8, &mut rng);
        assert_eq!(bracket_dim(&r, &r.g, &x), 8);
        assert_eq!(projection_rank(&r, &x, Projection::Psi), 8);
    }

    #[test]
    fn e_theta_orbit_is_not_conical_for_maximal_rank() {
        for k in [
            PairKind::SlSo { n: 3 },
            PairKind::SlSo { n: 4 },
            PairKind::SpGl { n: 2 },
            PairKind::SpGl { n: 3 },
        ] {
            let r = realize_pair(k).unwrap();
            let checks = e_theta_checks(&r);
            assert_eq!(checks.len(), 3, "{k}");
            assert!(checks.iter().all(|c| c.passed), "{k}: {checks:?}");
        }
        assert!(e_theta(&realize_pair(PairKind::SoEvenOdd { n: 3 }).unwrap()).is_none());
    }

    #[test]
    fn meets_g0_by_rank() {
        for (k, want) in [
            (PairKind::SlSo { n: 4 }, false),
            (PairKind::SlSp { n: 2 }, true),
            (PairKind::SoEvenOdd { n: 3 }, true),
        ] {
            let r = realize_pair(k).unwrap();
            let ev = meets_g0_evidence(&r);
            assert_eq!((ev.computed, ev.curated), (want, Some(want)), "{k}");
        }
    }

    #[test]
    fn suite_is_deterministic_and_green() {
        let kinds = [PairKind::SlSo { n: 3 }, PairKind::SpSp { n: 2, k: 1 }];
        let a = super::run_suite(&kinds, 2, 40, Mode::Parallel).unwrap();
        let b = super::run_suite(&kinds, 2, 40, Mode::Sequential).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        assert_eq!(a.failures(), 0, "{:?}", a.tally());
    }
}
