use planar_lie::catalog::{
    abstract_table, canonical_form, grid, present_eigenvalues, realize, verify_realization, Sl2Variant, TheoremType,
};
use planar_lie::polyrat::{q, Q};
use planar_lie::structure::{LieAlgebra, DEFAULT_DIM_CAP};
use planar_lie::{Error, Exec};

fn expected_dim(t: &TheoremType) -> usize {
    match t {
        TheoremType::T1 { n } => *n,
        TheoremType::T2 { n } => n + 1,
        TheoremType::T3 { n, .. } | TheoremType::T4 { n, .. } => n + 2,
        TheoremType::T5 { n, .. } | TheoremType::T6 { n } | TheoremType::T7 { n, .. } => n + 3,
        TheoremType::T8 { n, .. } => n + 4,
        TheoremType::T9 { variant: Sl2Variant::Sl2 } => 3,
        TheoremType::T9 { .. } => 6,
        TheoremType::T10 => 8,
        TheoremType::T11 { m } => m + 4,
        TheoremType::T12 { m } => m + 5,
    }
}

#[test]
fn grid_is_large_and_covers_every_type() {
    let g = grid();
    assert!(g.len() >= 150, "{}", g.len());
    let mut seen: Vec<u8> = g.iter().map(TheoremType::index).collect();
    seen.dedup();
    assert_eq!(seen, (1..=12).collect::<Vec<u8>>());
}

#[test]
fn realizations_close_to_the_declared_dimension() {
    for t in grid() {
        let fields = realize(&t).unwrap();
        assert_eq!(fields.len(), expected_dim(&t), "{t}");
        let alg = LieAlgebra::close(&fields, DEFAULT_DIM_CAP, Exec::Sequential).unwrap();
        assert_eq!(alg.dim(), expected_dim(&t), "{t}");
        assert_eq!(t.dim(), expected_dim(&t), "{t}");
    }
}

#[test]
fn tables_satisfy_jacobi() {
    for t in grid() {
        let sc = abstract_table(&t).unwrap();
        assert!(sc.is_antisymmetric() && sc.satisfies_jacobi(), "{t}");
    }
}

#[test]
fn eigenvalues_of_ad_f_on_the_ideal_are_distinct() {
    for t in grid() {
        let (n, f) = match &t {
            TheoremType::T4 { n, .. } => (*n, n + 1),
            TheoremType::T7 { n, .. } => (*n, n + 2),
            _ => continue,
        };
        let alg = LieAlgebra::from_basis(&realize(&t).unwrap(), Exec::Sequential).unwrap();
        let dim = alg.dim();
        let space: Vec<Vec<Q>> = (0..=n).map(|i| (0..dim).map(|k| q((k == i) as i64)).collect()).collect();
        let mut fv = vec![q(0); dim];
        fv[f] = q(1);
        let ad = alg.sc().ad_on(&fv, &space).unwrap();
        let spec = ad.rational_eigen().unwrap();
        assert!(spec.split, "{t}");
        let eigs: Vec<Q> = spec.eigen.iter().map(|e| e.value.clone()).collect();
        assert_eq!(eigs.len(), n + 1, "{t}");
        // differences are integer multiples of a single step
        assert!(present_eigenvalues(&eigs).is_some(), "{t}");
    }
}

#[test]
fn verification_passes_on_the_grid() {
    for t in grid() {
        let r = verify_realization(&t).unwrap();
        assert!(r.matched, "{t}");
        assert_eq!(r.adjustment.len(), t.dim());
    }
}

#[test]
fn bad_parameters_are_rejected() {
    let bad = [
        TheoremType::T1 { n: 0 },
        TheoremType::T3 { n: 1, lambda: 2 },
        TheoremType::T4 { n: 1, beta: q(0), m: vec![0, 1] },
        TheoremType::T4 { n: 1, beta: q(1), m: vec![2, 2] },
        TheoremType::T7 { n: 2, beta: q(1), m: vec![0, 1] },
    ];
    for t in bad {
        assert!(matches!(abstract_table(&t), Err(Error::BadParameters(_))), "{t}");
        assert!(matches!(realize(&t), Err(Error::BadParameters(_))), "{t}");
    }
}

#[test]
fn overlapping_forms_canonicalize_downwards() {
    assert_eq!(canonical_form(&TheoremType::T3 { n: 0, lambda: 1 }), TheoremType::T2 { n: 1 });
    assert_eq!(canonical_form(&TheoremType::T3 { n: 0, lambda: 0 }), TheoremType::T1 { n: 2 });
    for t in grid() {
        let c = canonical_form(&t);
        assert!(c.index() <= t.index(), "{t}");
        assert_eq!(c.dim(), t.dim(), "{t}");
    }
}
