use cohrep::autdegrees::{
    degree_support, divisors, lemc_bruteforce, li_coverage, n_bound, relth_coverage, CoverageLevel,
};
use cohrep::cohomreps::enumerate;
use cohrep::{Family, FamilyKind};
use proptest::prelude::*;

#[test]
fn lemc_oracle_matches_closed_form() {
    for n in 1..=12u64 {
        for b in divisors(n) {
            for p in 0..=n {
                let out = lemc_bruteforce(n / b, b, p).unwrap();
                assert_eq!(out.max, n_bound(b, n, p).unwrap(), "n={n} b={b} p={p}");
                assert!(out.parity_uniform, "n={n} b={b} p={p}");
            }
        }
    }
}

#[test]
fn coverage_tags_depend_on_representation_only() {
    for n in 2..=7u32 {
        for p in 1..n {
            for kind in [FamilyKind::U, FamilyKind::O, FamilyKind::Sp] {
                for rep in enumerate(Family::new(kind, p, n - p).unwrap()) {
                    let li = li_coverage(&rep);
                    let rel = relth_coverage(&rep);
                    assert_eq!(li.level == CoverageLevel::None, li.source.is_none());
                    assert_eq!(rel.level == CoverageLevel::None, rel.source.is_none());
                    if kind == FamilyKind::U {
                        assert_ne!(li.level, CoverageLevel::Q1, "{rep}");
                        assert_ne!(rel.level, CoverageLevel::Q1, "{rep}");
                    }
                    assert_eq!(li, li_coverage(&rep.clone()));
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn support_is_symmetric_about_pq(n in 2u64..40, seed in 0u64..1000) {
        let p = 1 + seed % (n / 2);
        let q = n - p;
        let s = degree_support(n, p, q).unwrap();
        let pq = p * q;
        prop_assert!(s.contains(pq));
        for iv in &s.intervals {
            prop_assert_eq!(iv.lo + iv.hi, 2 * pq);
        }
        for &d in &s.degrees {
            prop_assert!(d <= 2 * pq);
            prop_assert!(s.contains(2 * pq - d));
            if let Some(par) = s.parity {
                prop_assert_eq!((d % 2) as u8, par);
            }
        }
    }

    #[test]
    fn n_bound_is_at_most_the_full_range(n in 1u64..60, p_seed in 0u64..1000, b_seed in 0usize..100) {
        let p = p_seed % (n + 1);
        let ds = divisors(n);
        let b = ds[b_seed % ds.len()];
        let v = n_bound(b, n, p).unwrap();
        prop_assert!(v <= p * (n - p));
    }
}
