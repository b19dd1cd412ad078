use qheis_core::exprio::parse;
use qheis_core::identities::*;
use qheis_core::ncalg::AlgebraSpec;
use qheis_core::scalars::{Assignment, Rational, Symbol};
use qheis_core::NCPoly;

fn expand(id: IdentityId, params: Params) -> (NCPoly, NCPoly) {
    let ident = build(id, &params).unwrap();
    (ident.lhs.expand(), ident.rhs.expand())
}

#[test]
fn e2_sides_at_n2() {
    let h = AlgebraSpec::heisenberg();
    let ident = build(IdentityId::E2, &Params::n(2)).unwrap();
    let lhs_raw = parse("b*a*(b*a-1)*(b*a-2)", &h).unwrap();
    assert_eq!(ident.lhs.expand(), lhs_raw);
    assert_eq!(ident.rhs.expand(), parse("b^3*a^3", &h).unwrap());
}

#[test]
fn e13_with_symbolic_central_element() {
    let alg = AlgebraSpec::classical_central(1).unwrap();
    let (lhs, rhs) = expand(IdentityId::E13, Params::n(1));
    let expected = parse("b^2*a^4 + 4*c*b*a^3 + 2*c^2*a^2", &alg).unwrap();
    assert_eq!(lhs, expected);
    assert_eq!(rhs, expected);
    // commuting operators: c = 0
    let zero = Assignment::new().set(Symbol::C, Rational::from_integer(0.into()));
    for n in 0..4 {
        let (lhs, rhs) = expand(IdentityId::E13, Params::n(n));
        assert_eq!(lhs.substitute(&zero).unwrap(), rhs.substitute(&zero).unwrap());
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn e19_at_n1() {
    let q = AlgebraSpec::q_deformed();
    let (lhs, rhs) = expand(IdentityId::E19, Params::n(1));
    let expected = parse("q*b^2*a^2", &q).unwrap();
    assert_eq!(lhs, expected);
    assert_eq!(rhs, expected);
}

#[test]
fn e2eps_residual_at_n1() {
    let res = verify(IdentityId::E2EPS, &Params::n(1)).unwrap();
    assert_eq!(res.status, Status::Fail);
    // the only residual term is proportional to eps and sits on b*a
    let h = AlgebraSpec::heisenberg();
    assert_eq!(res.residual, parse("-eps*b*a", &h).unwrap());
    assert_eq!(res.outcome(), Outcome::ExpectedFail);
}

#[test]
fn e15_at_one_pair_is_e2() {
    for n in 0..5 {
        assert_eq!(expand(IdentityId::E15, Params::n(n).with_p(1)), expand(IdentityId::E2, Params::n(n)));
    }
}

#[test]
fn e9_at_alpha_zero_is_the_undeformed_embedding() {
    let h = AlgebraSpec::heisenberg();
    let zero = Assignment::new().set(Symbol::Alpha, Rational::from_integer(0.into()));
    let jp = parse("b^2*a", &h).unwrap();
    let j0 = parse("b*a", &h).unwrap();
    let jm = parse("a", &h).unwrap();
    let comm = |x: &NCPoly, y: &NCPoly| x.nc_mul(y).unwrap().nc_sub(&y.nc_mul(x).unwrap()).unwrap();
    let direct = [(comm(&jp, &j0), -&jp), (comm(&jm, &j0), jm.clone()), (comm(&jp, &jm), j0.scale(&(-2).into()))];
    for (r, (lhs0, rhs0)) in (1..=3).zip(direct) {
        let ident = build(IdentityId::E9, &Params::none().with_r(r)).unwrap();
        assert_eq!(ident.lhs.expand().substitute(&zero).unwrap(), lhs0, "r={r}");
        assert_eq!(ident.rhs.expand().substitute(&zero).unwrap(), rhs0, "r={r}");
        assert_eq!(lhs0, rhs0);
    }
}

#[test]
fn e26_adjoint_spot_check() {
    let e26 = build(IdentityId::E26, &Params::n(2)).unwrap();
    let e28 = build(IdentityId::E28, &Params::n(2)).unwrap();
    assert!(e26.lhs.adjoint().unwrap().expand().nc_equal(&e28.lhs.expand()).unwrap());
}

#[test]
fn f3alt_small_cases() {
    let alg = AlgebraSpec::classical_central(1).unwrap();
    // m = 1 is the trivial a^n = a^n
    let (lhs, rhs) = expand(IdentityId::F3ALT, Params::n(3).with_m(1));
    assert_eq!(lhs, parse("a^3", &alg).unwrap());
    assert_eq!(lhs, rhs);
    // m = 2 coincides with E13
    for n in 1..4 {
        assert_eq!(expand(IdentityId::F3ALT, Params::n(n).with_m(2)), expand(IdentityId::E13, Params::n(n - 1)));
    }
}

#[test]
fn basic_commutators() {
    let h = AlgebraSpec::heisenberg();
    let (lhs, rhs) = expand(IdentityId::F3BASIC, Params::n(3).with_r(1));
    assert_eq!(lhs, parse("3*a^2", &h).unwrap());
    assert_eq!(lhs, rhs);
    let q = AlgebraSpec::q_deformed();
    let (lhs, rhs) = expand(IdentityId::F5BASIC, Params::n(2).with_r(2));
    assert_eq!(lhs, parse("-(1+q)*q^(-2)*b", &q).unwrap());
    assert_eq!(lhs, rhs);
}

#[test]
fn suite_grid_small_run() {
    let grid = suite_grid(2, 2, 2);
    for (res, (id, params)) in verify_suite(&grid).into_iter().zip(&grid) {
        let res = res.unwrap();
        assert_eq!((res.id, res.params), (*id, *params));
        let expected = if id.expects_failure() { Outcome::ExpectedFail } else { Outcome::Pass };
        assert_eq!(res.outcome(), expected, "{id} {params}");
    }
}

#[test]
fn degenerate_grid_passes() {
    let grid = suite_grid(0, 1, 1);
    assert!(grid.iter().all(|(id, _)| *id != IdentityId::E2EPS));
    for res in verify_suite(&grid) {
        assert_eq!(res.unwrap().status, Status::Pass);
    }
}

#[test]
fn out_of_range_parameters_are_rejected() {
    assert!(matches!(build(IdentityId::E16, &Params::n(1).with_p(2)), Err(IdentityError::MissingParam { .. })));
    assert!(matches!(build(IdentityId::F3ALT, &Params::n(1).with_m(0)), Err(IdentityError::OutOfRange { .. })));
    assert!(matches!(build(IdentityId::E15, &Params::n(1).with_p(10)), Err(IdentityError::OutOfRange { .. })));
}
