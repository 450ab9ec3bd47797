use cohrep::cohomreps::{enumerate, CohRep};
use cohrep::isolation::{
    isolated, isolated_d0, isolated_u_explicit, isolated_u_search, t1intro_inequalities,
};
use cohrep::partitions::{is_compatible, is_orthogonal};
use cohrep::{Family, FamilyKind, Partition};

fn families(max_sum: u32, kinds: &'static [FamilyKind]) -> impl Iterator<Item = Family> {
    (2..=max_sum).flat_map(move |n| {
        (1..n).flat_map(move |p| {
            kinds
                .iter()
                .map(move |&k| Family::new(k, p, n - p).unwrap())
        })
    })
}

const ALL: &[FamilyKind] = &[FamilyKind::U, FamilyKind::O, FamilyKind::Sp];

#[test]
fn explicit_and_search_agree_for_unitary_groups() {
    for fam in families(7, &[FamilyKind::U]) {
        for rep in enumerate(fam) {
            let e = isolated_u_explicit(&rep).unwrap();
            let s = isolated_u_search(&rep).unwrap();
            assert_eq!(e.isolated, s.isolated, "{rep}");
        }
    }
}

#[test]
fn witnesses_are_valid_representations() {
    for fam in families(6, ALL) {
        for rep in enumerate(fam) {
            for v in [isolated(&rep), isolated_d0(&rep)] {
                assert_eq!(v.isolated, v.witnesses.is_empty());
                for w in &v.witnesses {
                    assert_eq!(w.family, fam);
                    match fam.kind {
                        FamilyKind::O => assert!(is_orthogonal(&w.lambda, fam.p, fam.q)),
                        _ => assert!(is_compatible(&w.lambda, &w.mu, fam.p, fam.q)),
                    }
                    let rebuilt =
                        CohRep::new(fam, w.lambda.clone(), Some(w.mu.clone()), w.flag).unwrap();
                    assert_eq!(&rebuilt, w);
                }
            }
        }
    }
}

#[test]
fn isolation_implies_isolation_under_d0() {
    for fam in families(7, ALL) {
        for rep in enumerate(fam) {
            if isolated(&rep).isolated {
                assert!(isolated_d0(&rep).isolated, "{rep}");
            }
        }
    }
}

#[test]
fn discrete_series_are_never_isolated() {
    for fam in families(7, ALL) {
        for rep in enumerate(fam)
            .into_iter()
            .filter(CohRep::is_discrete_series)
        {
            assert!(!isolated(&rep).isolated, "{rep}");
        }
    }
}

#[test]
fn rectangular_orthogonal_partitions_follow_the_inequalities() {
    // Excludes O(1,1), whose identity component is abelian.
    for n in 3..=9u32 {
        for p in 1..n {
            let q = n - p;
            for r in 0..=q / 2 {
                let rep = CohRep::orthogonal(p, q, Partition::rectangle(p, r)).unwrap();
                assert_eq!(
                    isolated(&rep).isolated,
                    t1intro_inequalities(p, q, r),
                    "{rep}"
                );
            }
        }
    }
}

#[test]
fn trivial_representation_isolated_iff_property_t() {
    // SU(1,q) and SO(1,q) lack property (T); Sp(p,q) with p + q >= 3 has it.
    for n in 3..=7u32 {
        for p in 1..n {
            let q = n - p;
            let u = CohRep::unitary(p, q, Partition::empty(), Partition::rectangle(p, q)).unwrap();
            assert_eq!(isolated(&u).isolated, p >= 2 && q >= 2, "{u}");
            let o = CohRep::orthogonal(p, q, Partition::empty()).unwrap();
            assert_eq!(isolated(&o).isolated, p >= 2 && q >= 2 && p + q >= 5, "{o}");
            let sp = CohRep::symplectic(p, q, Partition::empty(), Partition::rectangle(p, q), 0)
                .unwrap();
            assert!(isolated(&sp).isolated, "{sp}");
        }
    }
}
