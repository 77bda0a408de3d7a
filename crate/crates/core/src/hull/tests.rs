use super::*;
use crate::extrat::{rat, ExtRat};
use crate::qcat::{
    enumerate_symmetric_categories, one_point_extensions, symmetric_categories_up_to, validate_functor, QFunctor,
};
use crate::qrel::TypedSet;
use crate::quantale::{boolean, lukasiewicz, FiniteQuantale, Lawvere, Quantale};

fn named<E: Clone + Eq>(types: Vec<E>) -> TypedSet<E> {
    let names = (0..types.len()).map(|i| ["a", "b", "c", "d"][i].to_string()).collect();
    TypedSet::from_parts(names, types)
}

fn two_points(dist: &str) -> (DiagonalQuantaloid<Lawvere>, QCategory<ExtRat>) {
    let d = DiagonalQuantaloid::new(Lawvere);
    let c = QCategory::from_rows(
        &d,
        named(vec![rat("0"), rat("0")]),
        vec![vec![rat("0"), rat(dist)], vec![rat(dist), rat("0")]],
    )
    .unwrap();
    (d, c)
}

fn col(ty: &str, vals: &[&str]) -> Presheaf<ExtRat> {
    Presheaf::new(rat(ty), vals.iter().map(|v| rat(v)).collect())
}

fn boolean_pair(related: bool) -> (DiagonalQuantaloid<FiniteQuantale>, QCategory<usize>) {
    let d = DiagonalQuantaloid::new(boolean());
    let r = related as usize;
    let c = QCategory::from_rows(&d, named(vec![1, 1]), vec![vec![1, r], vec![r, 1]]).unwrap();
    (d, c)
}

#[test]
fn lawvere_tight_and_loose_columns() {
    let (d, x) = two_points("4");
    let tight = col("0", &["1", "3"]);
    assert!(in_lx(&d, &x, &tight) && in_tx(&d, &x, &tight));
    let loose = col("0", &["2", "3"]);
    assert!(in_lx(&d, &x, &loose));
    assert!(!in_tx(&d, &x, &loose));
    assert!(!in_lx(&d, &x, &col("0", &["1", "2"])));
}

#[test]
fn lawvere_tighten_depends_on_order() {
    let (d, x) = two_points("4");
    assert_eq!(tighten(&d, &x, &col("0", &["3", "3"])).unwrap(), col("0", &["1", "3"]));
    let (d, x) = two_points("4");
    let swapped = x.restrict(&[1, 0]);
    assert_eq!(tighten(&d, &swapped, &col("0", &["3", "3"])).unwrap(), col("0", &["1", "3"]));
    assert!(matches!(
        tighten(&d, &x, &col("0", &["1", "1"])),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn lawvere_yoneda_columns_are_tight() {
    let (d, x) = two_points("4");
    for a in 0..2 {
        assert!(in_tx(&d, &x, &crate::qcat::yoneda(&x, a)));
    }
}

#[test]
fn boolean_setoid_tightens_to_top() {
    let (d, x) = boolean_pair(true);
    let t = tighten(&d, &x, &Presheaf::new(1, vec![0, 0])).unwrap();
    assert_eq!(t, Presheaf::new(1, vec![1, 1]));
    let tx = enumerate_tx(&d, &x).unwrap();
    assert_eq!(tx.members.len(), 2);
}

#[test]
fn boolean_discrete_pair_tightens_first_point() {
    let (d, x) = boolean_pair(false);
    let t = tighten(&d, &x, &Presheaf::new(1, vec![0, 0])).unwrap();
    assert_eq!(t, Presheaf::new(1, vec![1, 0]));
}

#[test]
fn tighten_dominates_and_is_tight() {
    for d in [DiagonalQuantaloid::new(boolean()), DiagonalQuantaloid::new(lukasiewicz(3))] {
        for x in symmetric_categories_up_to(&d, 2).unwrap() {
            for mu in enumerate_lx(&d, &x).unwrap() {
                let t = tighten(&d, &x, &mu).unwrap();
                assert!(in_tx(&d, &x, &t));
                assert!(mu.values.iter().zip(&t.values).all(|(a, b)| d.quantale().leq(a, b)));
            }
        }
    }
}

#[test]
fn empty_category_is_not_hypercomplete() {
    let d = DiagonalQuantaloid::new(boolean());
    let h = is_hypercomplete(&d, &QCategory::empty(), Typing::Strict).unwrap();
    assert!(!h.hypercomplete);
    assert!(h.witness.unwrap().values.is_empty());
}

#[test]
fn boolean_hypercompleteness_needs_every_type() {
    let d = DiagonalQuantaloid::new(boolean());
    // the bottom column of type 0 has nothing of type 0 above it
    let p = QCategory::point("p", 1);
    let h = is_hypercomplete(&d, &p, Typing::Strict).unwrap();
    assert_eq!(h.witness, Some(Presheaf::new(0, vec![0])));
    assert!(is_hypercomplete(&d, &p, Typing::Lax).unwrap().hypercomplete);
    let pe = QCategory::from_rows(&d, named(vec![1, 0]), vec![vec![1, 0], vec![0, 0]]).unwrap();
    assert!(is_hypercomplete(&d, &pe, Typing::Strict).unwrap().hypercomplete);
}

#[test]
fn lax_typing_is_weaker() {
    let d = DiagonalQuantaloid::new(lukasiewicz(3));
    for x in symmetric_categories_up_to(&d, 2).unwrap() {
        let strict = is_hypercomplete(&d, &x, Typing::Strict).unwrap().hypercomplete;
        let lax = is_hypercomplete(&d, &x, Typing::Lax).unwrap().hypercomplete;
        assert!(!strict || lax);
    }
}

#[test]
fn tight_spans_are_hypercomplete_and_maximal() {
    for d in [DiagonalQuantaloid::new(boolean()), DiagonalQuantaloid::new(lukasiewicz(3))] {
        for x in symmetric_categories_up_to(&d, 2).unwrap() {
            let tx = enumerate_tx(&d, &x).unwrap();
            assert!(is_hypercomplete(&d, &tx.category, Typing::Strict).unwrap().hypercomplete);
            assert!(check_maximality(&d, &x).unwrap().is_none());
            assert!(check_retraction_functor(&d, &x).unwrap().is_none());
            let y = yoneda_map(&x, &tx).unwrap();
            let f = QFunctor::new(&x, &tx.category, &y);
            assert!(crate::qcat::is_fully_faithful(&d, &f));
            assert!(is_dense(&d, &f) && is_codense(&d, &f));
            assert!(is_essential_bruteforce(&d, &f).unwrap().essential);
        }
    }
}

#[test]
fn extend_along_identity_returns_f() {
    let d = DiagonalQuantaloid::new(lukasiewicz(3));
    let cats = enumerate_symmetric_categories(&d, 2).unwrap();
    for x in &cats {
        for z in &cats {
            for f in verify::typed_maps(x, z) {
                let ff = QFunctor::new(x, z, &f);
                if !validate_functor(&d, &ff).is_functor() {
                    continue;
                }
                let id: Vec<usize> = (0..x.len()).collect();
                let h = extend_along(&d, &ff, &QFunctor::new(x, x, &id)).unwrap().unwrap();
                assert!(ff.isomorphic_to(&h));
            }
        }
    }
}

#[test]
fn extension_into_empty_fails() {
    let d = DiagonalQuantaloid::new(boolean());
    let (x, z) = (QCategory::empty(), QCategory::empty());
    let y = QCategory::point("p", 1);
    let h = extend_along(&d, &QFunctor::new(&x, &z, &[]), &QFunctor::new(&x, &y, &[])).unwrap();
    assert!(h.is_none());
}

#[test]
fn extend_along_rejects_non_full_g() {
    let (d, discrete) = boolean_pair(false);
    let (_, setoid) = boolean_pair(true);
    let id = [0, 1];
    let f = QFunctor::new(&discrete, &discrete, &id);
    let g = QFunctor::new(&discrete, &setoid, &id);
    assert!(matches!(extend_along(&d, &f, &g), Err(Error::Precondition(_))));
}

#[test]
fn retraction_matches_hypercompleteness() {
    let d = DiagonalQuantaloid::new(lukasiewicz(3));
    for z in symmetric_categories_up_to(&d, 2).unwrap() {
        let hc = is_hypercomplete(&d, &z, Typing::Strict).unwrap();
        let all = one_point_extensions(&d, &z)
            .unwrap()
            .iter()
            .all(|e| find_one_point_retraction(&d, &z, e).unwrap().is_some());
        assert_eq!(hc.hypercomplete, all);
        if let Some(w) = hc.witness {
            let e = extension_from_witness(&d, &z, &w, "w").unwrap();
            assert!(find_one_point_retraction(&d, &z, &e).unwrap().is_none());
        }
    }
}

#[test]
fn setoid_inclusion_is_dense_discrete_is_not() {
    let d = DiagonalQuantaloid::new(boolean());
    let p = QCategory::point("a", 1);
    let (_, setoid) = boolean_pair(true);
    let (_, discrete) = boolean_pair(false);
    let f = QFunctor::new(&p, &setoid, &[0]);
    assert!(is_dense(&d, &f) && is_codense(&d, &f));
    assert!(is_essential_bruteforce(&d, &f).unwrap().essential);
    let g = QFunctor::new(&p, &discrete, &[0]);
    assert!(!is_dense(&d, &g) && !is_codense(&d, &g));
    let e = is_essential_bruteforce(&d, &g).unwrap();
    assert!(!e.essential);
    assert_eq!(e.witness.unwrap().hom().rows(), setoid.hom().rows());
}

#[test]
fn essential_budget_refuses() {
    let (d, x) = boolean_pair(false);
    let y = QCategory::point("a", 1);
    let f = QFunctor::new(&y, &x, &[0]);
    assert!(matches!(essential_bruteforce(&d, &f, 1), Err(Error::BoundExceeded(_))));
}

#[test]
fn identity_transport_is_isomorphism() {
    let d = DiagonalQuantaloid::new(lukasiewicz(3));
    for x in symmetric_categories_up_to(&d, 2).unwrap() {
        let id: Vec<usize> = (0..x.len()).collect();
        let r = tx_transport(&d, &QFunctor::new(&x, &x, &id)).unwrap();
        assert!(r.is_isomorphism());
    }
}

#[test]
fn suites_pass_on_small_bounds() {
    let d = DiagonalQuantaloid::new(boolean());
    for suite in Suite::ALL {
        let out = run_suite(&d, suite, 2, Typing::Strict, 1).unwrap();
        assert!(out.passed(), "{suite:?}: {:?}", out.first_counterexample);
        assert!(out.cases > 0);
    }
}

#[test]
fn suite_outcome_independent_of_workers() {
    let d = DiagonalQuantaloid::new(lukasiewicz(3));
    let one = run_suite(&d, Suite::TightSpanHypercomplete, 2, Typing::Strict, 1).unwrap();
    let four = run_suite(&d, Suite::TightSpanHypercomplete, 2, Typing::Strict, 4).unwrap();
    assert_eq!(one, four);
}

#[test]
fn suite_bound_is_enforced() {
    let d = DiagonalQuantaloid::new(boolean());
    assert!(matches!(
        run_suite(&d, Suite::Injectivity, MAX_BOUND + 1, Typing::Strict, 1),
        Err(Error::BoundExceeded(_))
    ));
    assert_eq!(Suite::from_name("t54"), Some(Suite::DenseEssential));
    assert_eq!(Suite::from_name("x"), None);
}
