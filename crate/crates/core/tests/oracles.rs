//! Worked values checked against independent reference computations.

#![allow(clippy::needless_range_loop)]

mod common;

use common::oracle::{self, closure, det, from_derivation, killing, poly, rank, Closure, Echelon, F};
use num_traits::{One, Zero};
use planar_lie::catalog::{realize, verify_realization, TheoremType};
use planar_lie::classify::round_trip;
use planar_lie::cli::{parse_derivation, parse_generators, parse_ratfunc};
use planar_lie::linalg::QMatrix;
use planar_lie::polyrat::{factor_univariate, q, qr, Poly, RatFunc, Var, Q};
use planar_lie::ratlemma::{log_derivative_obstruction, power_decompose, proportionality_ratio};
use planar_lie::structure::LieAlgebra;
use planar_lie::vectorfield::{rank_over_r, Derivation};
use planar_lie::{Error, Exec};

fn d(s: &str) -> Derivation {
    parse_derivation(s).unwrap()
}

fn gens(s: &str) -> Vec<Derivation> {
    parse_generators(s).unwrap()
}

fn p(s: &str) -> Poly {
    parse_ratfunc(s).unwrap().num().clone()
}

fn of(alg: &LieAlgebra) -> Vec<F> {
    alg.basis().iter().map(from_derivation).collect()
}

#[test]
fn cancelling_a_common_factor() {
    // (x - y)(x + y) expands to x^2 - y^2
    let lhs = oracle::pmul(&poly(&[(q(1), 1, 0), (q(-1), 0, 1)]), &poly(&[(q(1), 1, 0), (q(1), 0, 1)]));
    assert_eq!(lhs, poly(&[(q(1), 2, 0), (q(-1), 0, 2)]));
    let quotient = parse_ratfunc("(x^2 - y^2)/(x - y)").unwrap();
    assert_eq!(quotient, parse_ratfunc("x + y").unwrap());
    assert!(quotient.is_polynomial());
}

#[test]
fn gcd_of_difference_of_squares() {
    let g = p("x^2 - y^2").gcd(&p("x - y"));
    assert_eq!(g, p("x - y"));
    // the cofactors x + y and 1 share nothing, so x - y is the whole gcd
    assert_eq!(p("x^2 - y^2").div_exact(&g), Some(p("x + y")));
    assert_eq!(p("x - y").div_exact(&g), Some(Poly::one()));
}

#[test]
fn t_squared_minus_two_is_irreducible() {
    let f = p("t^2 - 2");
    // a rational root would be one of 1, -1, 2, -2
    for r in [1, -1, 2, -2] {
        assert!(!f.eval(&q(r), &q(0)).is_zero());
    }
    let fac = factor_univariate(&f, 12).unwrap();
    assert_eq!(fac.unit, q(1));
    assert_eq!(fac.factors, vec![(f, 1)]);
}

#[test]
fn t_fourth_minus_one() {
    let parts = [p("t - 1"), p("t + 1"), p("t^2 + 1")];
    let product = parts.iter().fold(Poly::one(), |acc, f| &acc * f);
    assert_eq!(product, p("t^4 - 1"));
    for r in [1, -1] {
        assert!(!parts[2].eval(&q(r), &q(0)).is_zero());
    }
    let fac = factor_univariate(&p("t^4 - 1"), 12).unwrap();
    assert_eq!(fac.unit, q(1));
    let mut got: Vec<(Poly, u32)> = fac.factors;
    got.sort_by_key(|f| f.0.to_string());
    let mut want: Vec<(Poly, u32)> = parts.iter().map(|f| (f.clone(), 1)).collect();
    want.sort_by_key(|f| f.0.to_string());
    assert_eq!(got, want);
}

#[test]
fn invertible_four_by_four_reduces_to_identity() {
    let v = [2, -1, 0, 3, 1, 1, 4, -2, 0, 5, -3, 1, 7, 0, 2, 2];
    let m = QMatrix::from_i64(4, 4, &v);
    let rows: Vec<Vec<Q>> = (0..4).map(|i| (0..4).map(|j| q(v[4 * i + j])).collect()).collect();
    let dv = det(&rows);
    assert!(!dv.is_zero());
    assert_eq!(m.determinant().unwrap(), dv);
    let (r, pivots) = m.rref();
    assert_eq!(r, QMatrix::identity(4));
    assert_eq!(pivots, vec![0, 1, 2, 3]);
}

#[test]
fn euler_field_and_its_multiple_have_rank_one() {
    // x * xy - y * x^2 vanishes identically
    let cross = oracle::padd(&poly(&[(q(1), 2, 1)]), &poly(&[(q(1), 2, 1)]), &q(-1));
    assert!(cross.is_empty());
    assert_eq!(rank_over_r(&gens("x dx + y dy; x^2 dx + x*y dy")), 1);
}

#[test]
fn closure_of_x_dy_and_y_dx() {
    let g = gens("x dy; y dx");
    let Closure::Basis(basis) = closure(&g.iter().map(from_derivation).collect::<Vec<_>>(), 16) else {
        panic!("oracle closure is finite")
    };
    assert_eq!(basis.len(), 3);
    let alg = LieAlgebra::close(&g, 16, Exec::Sequential).unwrap();
    assert_eq!(alg.dim(), 3);
    let h = d("x dx - y dy");
    let mut span = Echelon::default();
    for b in &basis {
        span.push(b);
    }
    assert!(span.coords(&from_derivation(&h)).is_some());
    let c = alg.coordinates(&h).unwrap();
    assert_eq!(alg.element(&c), h);
    assert_eq!(oracle::combo(&of(&alg), &c), from_derivation(&h));
}

#[test]
fn closure_of_dx_and_x_cubed_dx_runs_away() {
    let g = gens("dx; x^3 dx");
    let og: Vec<F> = g.iter().map(from_derivation).collect();
    assert!(matches!(closure(&og, 10), Closure::TooBig(_)));
    assert!(matches!(closure(&og, 40), Closure::TooBig(_)));
    assert!(matches!(LieAlgebra::close(&g, 10, Exec::Sequential), Err(Error::DimensionCapExceeded { .. })));
}

fn sl2() -> LieAlgebra {
    LieAlgebra::from_basis(
        &realize(&TheoremType::T9 { variant: planar_lie::catalog::Sl2Variant::Sl2 }).unwrap(),
        Exec::Sequential,
    )
    .unwrap()
}

#[test]
fn ad_h_is_diagonal_on_sl2() {
    let alg = sl2();
    let ad = oracle::ads(&of(&alg));
    let want = [q(2), q(-2), q(0)];
    for r in 0..3 {
        for c in 0..3 {
            let v = if r == c { want[r].clone() } else { q(0) };
            assert_eq!(ad[2][r][c], v);
        }
    }
    assert_eq!(alg.ad_matrix(&[q(0), q(0), q(1)]), QMatrix::diagonal(&want));
}

#[test]
fn killing_form_of_sl2() {
    let alg = sl2();
    let k = killing(&of(&alg));
    assert_eq!(k[2][2], q(8));
    assert_eq!(k[0][1], q(4));
    for (i, j) in [(0, 0), (1, 1), (2, 0), (2, 1)] {
        assert_eq!(k[i][j], q(0));
    }
    let lib = alg.killing_form(Exec::Sequential);
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(lib.get(i, j), &k[i][j]);
        }
    }
}

#[test]
fn killing_form_of_sl3_is_nondegenerate() {
    let alg = LieAlgebra::from_basis(&realize(&TheoremType::T10).unwrap(), Exec::Sequential).unwrap();
    let k = killing(&of(&alg));
    let dv = det(&k);
    assert!(!dv.is_zero());
    assert_eq!(alg.killing_form(Exec::Sequential).determinant().unwrap(), dv);
}

#[test]
fn radical_of_type_twelve_with_m_zero() {
    let alg = LieAlgebra::from_basis(&realize(&TheoremType::T12 { m: 0 }).unwrap(), Exec::Sequential).unwrap();
    let basis = of(&alg);
    let n = basis.len();
    let k = killing(&basis);
    let mut derived = Echelon::default();
    let mut dvecs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let w = oracle::bracket(&basis[i], &basis[j]);
            if derived.push(&w) {
                dvecs.push(w);
            }
        }
    }
    let mut span = Echelon::default();
    for b in &basis {
        span.push(b);
    }
    // x lies in the radical iff k(x, w) = 0 for every w in L'
    let rows: Vec<Vec<Q>> = dvecs
        .iter()
        .map(|w| {
            let c = span.coords(w).unwrap();
            (0..n).map(|i| (0..n).map(|j| &k[i][j] * &c[j]).sum()).collect()
        })
        .collect();
    let dim = n - rank(&rows);
    assert_eq!(dim, 2);
    let r = alg.radical(Exec::Sequential);
    assert_eq!(r.dim(), dim);
    for v in &r.basis {
        for row in &rows {
            assert!(row.iter().zip(v).map(|(a, b)| a * b).sum::<Q>().is_zero());
        }
    }
    let (u, v) = (oracle::combo(&basis, &r.basis[0]), oracle::combo(&basis, &r.basis[1]));
    assert_ne!(oracle::bracket(&u, &v), F { a: Default::default(), b: Default::default() });
}

#[test]
fn single_ideal_line_of_the_affine_plane_algebra() {
    let g = gens("dx; dy - x dx");
    let basis: Vec<F> = g.iter().map(from_derivation).collect();
    let mut found = Vec::new();
    for a in -2i64..=2 {
        for b in -2i64..=2 {
            if a == 0 && b == 0 {
                continue;
            }
            let v = oracle::combo(&basis, &[q(a), q(b)]);
            let mut line = Echelon::default();
            line.push(&v);
            if basis.iter().all(|x| line.coords(&oracle::bracket(x, &v)).is_some()) {
                found.push((a, b));
            }
        }
    }
    assert!(found.iter().all(|&(_, b)| b == 0));
    let alg = LieAlgebra::from_basis(&g, Exec::Sequential).unwrap();
    let lines = alg.one_dim_ideals().unwrap();
    assert!(!lines.all_lines);
    assert_eq!(lines.eigenspaces.len(), 1);
    assert_eq!(lines.eigenspaces[0].dim(), 1);
    let e = alg.element(&lines.eigenspaces[0].basis[0]);
    assert_eq!(rank_over_r(&[e.clone(), Derivation::dx()]), 1);
    assert!(e.coef(Var::Y).is_zero() && e.coef(Var::X).is_constant());
}

#[test]
fn sl2_has_no_ideal_lines() {
    // a line ideal is central in a perfect algebra; sl2 is perfect with no center
    let alg = sl2();
    let basis = of(&alg);
    let ad = oracle::ads(&basis);
    let mut derived = Echelon::default();
    for i in 0..3 {
        for j in 0..3 {
            derived.push(&oracle::bracket(&basis[i], &basis[j]));
        }
    }
    assert_eq!(derived.dim(), 3);
    let stacked: Vec<Vec<Q>> = ad.iter().flat_map(|m| m.iter().cloned()).collect();
    assert_eq!(rank(&stacked), 3);
    assert!(alg.one_dim_ideals().unwrap().eigenspaces.is_empty());
}

#[test]
fn r_multiple_ideal_of_type_five() {
    let alg =
        LieAlgebra::from_basis(&realize(&TheoremType::T5 { n: 1, beta: q(1), gamma: q(0) }).unwrap(), Exec::Sequential)
            .unwrap();
    let basis = of(&alg);
    // multiples of dx are the elements with vanishing dy component
    let rows: Vec<Vec<Q>> = {
        let mut keys: Vec<(u32, u32)> = basis.iter().flat_map(|f| f.b.keys().copied()).collect();
        keys.sort();
        keys.dedup();
        keys.iter().map(|k| basis.iter().map(|f| f.b.get(k).cloned().unwrap_or_else(Q::zero)).collect()).collect()
    };
    let dim = basis.len() - rank(&rows);
    assert_eq!(dim, 2);
    let i = alg.r_multiple_ideal(&Derivation::dx()).unwrap();
    assert_eq!(i.dim(), dim);
    assert_eq!(alg.dim() - i.dim(), 2);
    let mut want = Echelon::default();
    want.push(&from_derivation(&d("dx")));
    want.push(&from_derivation(&d("y dx")));
    for v in &i.basis {
        assert!(want.coords(&oracle::combo(&basis, v)).is_some());
    }
}

fn t(s: &str) -> RatFunc {
    parse_ratfunc(s).unwrap()
}

#[test]
fn ratio_of_cube_and_square() {
    // mu * 3t^2 * t^2 = t^3 * 2t at every t
    for x in 1..5 {
        let x = q(x);
        let lhs = q(3) * &x * &x * &x * &x;
        let rhs = q(2) * &x * &x * &x * &x;
        assert_eq!(rhs / lhs, qr(2, 3));
    }
    assert_eq!(proportionality_ratio(&t("t^3"), &t("t^2")).unwrap(), qr(2, 3));
}

#[test]
fn t_and_t_plus_one_are_not_proportional() {
    // phi psi' / (phi' psi) = t / (t + 1) takes different values at 1 and 2
    let ratio = |x: i64| qr(x, x + 1);
    assert_ne!(ratio(1), ratio(2));
    assert_eq!(proportionality_ratio(&t("t"), &t("t + 1")), Err(Error::NotProportional));
}

#[test]
fn decomposition_of_shared_powers() {
    let r = power_decompose(&t("t^4*(t+1)^2"), &t("t^6*(t+1)^3")).unwrap();
    assert_eq!(r.theta, t("t^2*(t+1)"));
    assert_eq!((r.s, r.t), (2, 3));
    assert_eq!((r.c1.clone(), r.c2.clone()), (q(1), q(1)));
    assert_eq!(r.mu, qr(3, 2));
    // psi'/psi = 6/t + 3/(t+1) and phi'/phi = 4/t + 2/(t+1) at sample points
    for x in 1..6 {
        let x = q(x);
        let lpsi = q(6) / &x + q(3) / (&x + q(1));
        let lphi = q(4) / &x + q(2) / (&x + q(1));
        assert_eq!(lpsi, qr(3, 2) * lphi);
        let theta = &x * &x * (&x + q(1));
        assert_eq!(r.theta.eval(&x, &q(0)), Some(theta));
    }
    let r = power_decompose(&t("t^3"), &t("t^2")).unwrap();
    assert_eq!(r.theta, t("t"));
    assert_eq!((r.s, r.t, r.mu), (3, 2, qr(2, 3)));
}

#[test]
fn obstruction_for_a_quotient_of_linears() {
    let (w, o) = log_derivative_obstruction(&t("(t+1)/t")).unwrap();
    assert_eq!(o, -1);
    assert!(w == p("t") || w == p("t + 1"));
    // phi'/phi = 1/(t+1) - 1/t; times p it is finite and nonzero at the root
    let root = if w == p("t") { q(0) } else { q(-1) };
    let near = |x: &Q| -> Q {
        if root.is_zero() {
            x / (x + q(1)) - q(1)
        } else {
            q(1) - (x + q(1)) / x.clone()
        }
    };
    assert!(!near(&root).is_zero());
}

#[test]
fn verification_examples() {
    let r = verify_realization(&TheoremType::T3 { n: 1, lambda: 0 }).unwrap();
    assert!(r.matched);
    assert!(r.adjustment.iter().all(|a| a == "1"));
    assert!(verify_realization(&TheoremType::T12 { m: 1 }).unwrap().matched);
    let r = verify_realization(&TheoremType::T5 { n: 0, beta: q(1), gamma: q(1) }).unwrap();
    assert!(r.matched);
    assert!(r.adjustment.iter().any(|a| a != "1"));
}

#[test]
fn round_trip_examples() {
    for t in [TheoremType::T6 { n: 2 }, TheoremType::T12 { m: 2 }] {
        let r = round_trip(&t).unwrap();
        assert!(r.matched && !r.equivalent, "{t}");
    }
    let r = round_trip(&TheoremType::T3 { n: 0, lambda: 1 }).unwrap();
    assert!(r.matched && r.equivalent);
    assert_eq!(r.found, TheoremType::T2 { n: 1 });
}

#[test]
fn closure_of_sl2_and_sl3_fields_agrees_with_oracle() {
    for s in ["dx; x dx; x^2 dx", "dx; dy; x dx; y dx; x dy; y dy; x^2 dx + x*y dy; x*y dx + y^2 dy", "dx; y dx; dy"] {
        let g = gens(s);
        let Closure::Basis(b) = closure(&g.iter().map(from_derivation).collect::<Vec<_>>(), 16) else { panic!() };
        assert_eq!(LieAlgebra::close(&g, 16, Exec::Sequential).unwrap().dim(), b.len(), "{s}");
    }
}

#[test]
fn oracle_determinant_sanity() {
    let m = vec![vec![q(1), q(2)], vec![q(3), q(4)]];
    assert_eq!(det(&m), q(-2));
    let i3: Vec<Vec<Q>> = (0..3).map(|i| (0..3).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect();
    assert_eq!(det(&i3), q(1));
}
