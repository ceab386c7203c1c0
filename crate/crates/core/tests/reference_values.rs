//! Known values: standard realizations together with the small computations
//! the classification relies on.

use planar_lie::catalog::{abstract_table, realize, uncorrected_table, Sl2Variant, TheoremType};
use planar_lie::classify::classify;
use planar_lie::cli::{parse_derivation, parse_generators, parse_ratfunc, run_args};
use planar_lie::polyrat::{q, qr, Poly, RatFunc, Var, Q};
use planar_lie::ratlemma::log_derivative_obstruction;
use planar_lie::structure::{LieAlgebra, SeriesKind, StructureConstants, DEFAULT_DIM_CAP};
use planar_lie::vectorfield::{rank_over_r, Derivation};
use planar_lie::Exec;

fn d(s: &str) -> Derivation {
    parse_derivation(s).unwrap()
}

fn f(s: &str) -> RatFunc {
    parse_ratfunc(s).unwrap()
}

fn close(s: &str) -> LieAlgebra {
    LieAlgebra::close(&parse_generators(s).unwrap(), DEFAULT_DIM_CAP, Exec::Sequential).unwrap()
}

fn unit(n: usize, i: usize, c: Q) -> Vec<Q> {
    let mut v = vec![q(0); n];
    v[i] = c;
    v
}

fn br(sc: &StructureConstants, i: usize, j: usize) -> Vec<Q> {
    sc.basis_bracket(i, j)
}

#[test]
fn applying_fields_to_functions() {
    // D2(a_i) = beta m_i a_i with a_i = y^m_i
    assert_eq!(d("2*y dy - x dx").apply(&f("y^3")), f("6*y^3"));
    // D1(b) = -1 with b = -x
    assert_eq!(d("dx").apply(&f("-x")), f("-1"));
}

#[test]
fn brackets_of_small_fields() {
    // [D2, D1] = lambda D1 with lambda = 1
    assert_eq!(d("dy - x dx").bracket(&d("dx")), d("dx"));
    // D1, -a^2 D1, -2a D1 with a = x
    assert_eq!(d("dx").bracket(&d("-x^2 dx")), d("-2*x dx"));
    assert_eq!(Derivation::dx().scale(&f("-x^2/4")), d("-1/4*x^2 dx"));
}

#[test]
fn rank_one_family() {
    assert_eq!(rank_over_r(&parse_generators("dx; y dx; y^2 dx").unwrap()), 1);
}

#[test]
fn metabelian_affine_line() {
    let alg = close("dx; -x dx");
    let x = alg.coordinates(&d("-x dx")).unwrap();
    let a = alg.coordinates(&d("dx")).unwrap();
    // [b, a] = a
    assert_eq!(alg.ad_matrix(&x).mul_vec(&a), a);
    let series = alg.series(SeriesKind::Derived);
    assert_eq!(series.iter().map(|s| s.dim()).collect::<Vec<_>>(), [2, 1, 0]);
    let p = alg.predicates();
    assert!(p.solvable && !p.nilpotent);
    let lower = alg.series(SeriesKind::LowerCentral);
    assert_eq!(lower.last().unwrap().dim(), 1);
}

#[test]
fn sl2_realization_is_perfect() {
    let alg = close("dx; -x^2 dx; -2*x dx");
    assert_eq!(alg.series(SeriesKind::Derived).len(), 1);
    let p = alg.predicates();
    assert!(!p.solvable && p.perfect);
}

#[test]
fn abelian_rank_one_algebra() {
    let p = close("dx; y dx; y^2 dx").predicates();
    assert!(p.abelian && p.solvable && p.nilpotent && !p.perfect);
    assert_eq!(p.center_dim, 3);
}

#[test]
fn sl3_is_semisimple() {
    let alg = LieAlgebra::from_basis(&realize(&TheoremType::T10).unwrap(), Exec::Sequential).unwrap();
    assert_eq!(alg.radical(Exec::Sequential).dim(), 0);
}

#[test]
fn r_multiple_ideal_of_the_affine_algebra() {
    let alg = close("dx; y dx; dy");
    let i = alg.r_multiple_ideal(&Derivation::dx()).unwrap();
    assert_eq!(i.dim(), 2);
    assert_eq!(alg.dim() - i.dim(), 1);
    for v in &i.basis {
        assert!(alg.element(v).coef(Var::Y).is_zero());
    }
}

#[test]
fn obstruction_for_a_square() {
    let (p, o) = log_derivative_obstruction(&f("t^2")).unwrap();
    assert_eq!(p, Poly::var(Var::X));
    assert_eq!(o, -1);
}

#[test]
fn type_four_relations() {
    let t = TheoremType::T4 { n: 1, beta: q(1), m: vec![0, 2] };
    let sc = abstract_table(&t).unwrap();
    assert_eq!(br(&sc, 2, 0), unit(3, 0, q(1)));
    assert_eq!(br(&sc, 2, 1), unit(3, 1, q(3)));
}

#[test]
fn uncorrected_type_eight_fails_jacobi() {
    // gamma = alpha (beta - n) = -1, so [h, f] = f + e_1
    let t = TheoremType::T8 { n: 1, alpha: q(1), beta: q(0) };
    let uncorrected = uncorrected_table(&t).unwrap();
    let mut hf = unit(5, 2, q(1));
    hf[1] = q(1);
    assert_eq!(br(&uncorrected, 4, 2), hf);
    assert!(!uncorrected.satisfies_jacobi());
    let fixed = abstract_table(&t).unwrap();
    assert!(fixed.satisfies_jacobi());
    assert_eq!(TheoremType::t8_gamma(1, &q(1), &q(0)), q(2));
}

#[test]
fn uncorrected_type_five_fails_jacobi() {
    let t = TheoremType::T5 { n: 1, beta: qr(1, 2), gamma: q(1) };
    assert!(!uncorrected_table(&t).unwrap().satisfies_jacobi());
    assert!(abstract_table(&t).unwrap().satisfies_jacobi());
}

#[test]
fn standard_realizations() {
    assert_eq!(realize(&TheoremType::T3 { n: 1, lambda: 0 }).unwrap(), parse_generators("dx; y dx; dy").unwrap());
    assert_eq!(
        realize(&TheoremType::T9 { variant: Sl2Variant::Sl2 }).unwrap(),
        parse_generators("dx; -x^2 dx; -2*x dx").unwrap()
    );
    assert_eq!(
        realize(&TheoremType::T11 { m: 0 }).unwrap(),
        parse_generators("x dy; y dx; x dx - y dy; x dx + y dy").unwrap()
    );
}

#[test]
fn classification_of_standard_algebras() {
    let c = classify(&close("dx; y dx; y^2 dx")).unwrap();
    assert_eq!(c.ttype, TheoremType::T1 { n: 3 });
    let c = classify(&close("dx; x dx; x^2 dx")).unwrap();
    assert_eq!(c.ttype, TheoremType::T9 { variant: Sl2Variant::Sl2 });
    let c = classify(&close("dx; dy; x dx; y dx; x dy; y dy; x^2 dx + x*y dy; x*y dx + y^2 dy")).unwrap();
    assert_eq!(c.ttype, TheoremType::T10);
    let c = classify(&close("dx; y dx; dy")).unwrap();
    assert_eq!(c.ttype, TheoremType::T3 { n: 1, lambda: 0 });
}

#[test]
fn cli_examples() {
    let out = run_args(["planar-lie", "bracket", "dy - x dx", "dx"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "dx\n"));
    let out = run_args(["planar-lie", "classify", "dx; y dx; dy", "--json"]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["type"], "T3");
    assert_eq!(v["params"], serde_json::json!({"n": 1, "lambda": 0}));
    let out = run_args(["planar-lie", "closure", "dx; x^3 dx", "--cap", "10"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.starts_with("DimensionCapExceeded"));
}
