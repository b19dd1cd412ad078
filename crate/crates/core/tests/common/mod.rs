//! Random generators and algebraic law checks shared by the property tests
//! and the acceptance runner.

#![allow(dead_code)]

use qheis_core::exprio::{parse, print};
use qheis_core::ncalg::{reset_rewrite_steps, rewrite_steps, AlgebraSpec, Deformation, Gen, NCPoly, Word};
use qheis_core::scalars::{Assignment, CoeffPoly, Monomial, Rational};
use rand::Rng;

pub fn all_algebras() -> Vec<AlgebraSpec> {
    vec![
        AlgebraSpec::heisenberg(),
        AlgebraSpec::classical(2).unwrap(),
        AlgebraSpec::classical_central(1).unwrap(),
        AlgebraSpec::q_deformed(),
        AlgebraSpec::quantum_plane(),
        AlgebraSpec::borel_a(Deformation::Symbolic),
        AlgebraSpec::borel_a(Deformation::Unit),
        AlgebraSpec::borel_b(),
    ]
}

/// q-deformed algebras paired with their `q = 1` counterparts.
pub fn degeneration_pairs() -> Vec<(AlgebraSpec, AlgebraSpec)> {
    vec![
        (AlgebraSpec::q_deformed(), AlgebraSpec::heisenberg()),
        (AlgebraSpec::quantum_plane(), AlgebraSpec::classical(2).unwrap()),
        (AlgebraSpec::borel_a(Deformation::Symbolic), AlgebraSpec::borel_a(Deformation::Unit)),
    ]
}

pub fn random_coeff<R: Rng>(rng: &mut R) -> CoeffPoly {
    let mut c = CoeffPoly::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let num = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let r = Rational::new(num.into(), rng.gen_range(1..=2).into());
        let m = Monomial {
            v: rng.gen_range(-2..=2),
            alpha: rng.gen_range(0..=1),
            eps: u32::from(rng.gen_bool(0.1)),
            c: u32::from(rng.gen_bool(0.1)),
        };
        c = &c + &CoeffPoly::monomial(r, m);
    }
    c
}

pub fn random_word<R: Rng>(rng: &mut R, alg: &AlgebraSpec, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let n = alg.num_generators() as u8;
    Word::from_letters((0..len).map(|_| Gen(rng.gen_range(0..n))))
}

/// A raw (generally not normal-ordered) polynomial.
pub fn random_poly<R: Rng>(rng: &mut R, alg: &AlgebraSpec, max_terms: usize, max_len: usize) -> NCPoly {
    let terms: Vec<_> =
        (0..rng.gen_range(1..=max_terms)).map(|_| (random_word(rng, alg, max_len), random_coeff(rng))).collect();
    NCPoly::from_terms(*alg, terms)
}

pub fn canonical_poly<R: Rng>(rng: &mut R, alg: &AlgebraSpec) -> NCPoly {
    random_poly(rng, alg, 3, 3).normal_order()
}

const SCALAR_LEAVES: &[&str] = &["2", "-1", "1/2", "q", "v", "alpha", "eps", "c", "{2}", "q^(-1)", "q^(3/2)"];

/// A random expression string together with its value, computed without
/// the parser: raw products, then a single normal ordering.
pub fn random_expr<R: Rng>(rng: &mut R, alg: &AlgebraSpec, depth: u32) -> (String, NCPoly) {
    let (s, raw) = random_expr_raw(rng, alg, depth);
    (s, raw.normal_order())
}

fn random_expr_raw<R: Rng>(rng: &mut R, alg: &AlgebraSpec, depth: u32) -> (String, NCPoly) {
    let choice = if depth == 0 { rng.gen_range(0..2) } else { rng.gen_range(0..5) };
    match choice {
        0 => {
            let g = Gen(rng.gen_range(0..alg.num_generators() as u8));
            (alg.generator_name(g), NCPoly::generator(*alg, g))
        }
        1 => {
            let leaf = SCALAR_LEAVES[rng.gen_range(0..SCALAR_LEAVES.len())];
            let value = qheis_core::exprio::parse_scalar(leaf).expect("leaf literals parse");
            let text = if leaf.starts_with('-') { format!("({leaf})") } else { leaf.to_string() };
            (text, NCPoly::scalar(*alg, value))
        }
        2 => {
            let (sa, a) = random_expr_raw(rng, alg, depth - 1);
            let (sb, b) = random_expr_raw(rng, alg, depth - 1);
            if rng.gen_bool(0.5) {
                (format!("({sa} + {sb})"), a.add_raw(&b).unwrap())
            } else {
                (format!("({sa} - {sb})"), a.add_raw(&b.scale(&CoeffPoly::from_int(-1))).unwrap())
            }
        }
        3 => {
            let (sa, a) = random_expr_raw(rng, alg, depth - 1);
            let (sb, b) = random_expr_raw(rng, alg, depth - 1);
            (format!("{sa}*{sb}"), a.mul_raw(&b).unwrap())
        }
        _ => {
            let (sa, a) = random_expr_raw(rng, alg, depth - 1);
            let k = rng.gen_range(0..=2);
            let mut value = NCPoly::one(*alg);
            for _ in 0..k {
                value = value.mul_raw(&a).unwrap();
            }
            (format!("({sa})^{k}"), value)
        }
    }
}

pub type LawResult = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> LawResult {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

/// Associativity of the normal-ordered product plus both distributive laws.
pub fn check_ring_laws(x: &NCPoly, y: &NCPoly, z: &NCPoly) -> LawResult {
    let xy_z = x.nc_mul(y).unwrap().nc_mul(z).unwrap();
    let x_yz = x.nc_mul(&y.nc_mul(z).unwrap()).unwrap();
    ensure(xy_z == x_yz, || {
        format!("associativity fails in {}: {}", x.algebra(), print(&xy_z.nc_sub(&x_yz).unwrap()))
    })?;
    let left = x.nc_mul(&y.nc_add(z).unwrap()).unwrap();
    let left_expected = x.nc_mul(y).unwrap().nc_add(&x.nc_mul(z).unwrap()).unwrap();
    ensure(left == left_expected, || format!("left distributivity fails in {}", x.algebra()))?;
    let right = x.nc_add(y).unwrap().nc_mul(z).unwrap();
    let right_expected = x.nc_mul(z).unwrap().nc_add(&y.nc_mul(z).unwrap()).unwrap();
    ensure(right == right_expected, || format!("right distributivity fails in {}", x.algebra()))
}

pub fn check_idempotence(raw: &NCPoly) -> LawResult {
    let once = raw.normal_order();
    ensure(once.is_canonical(), || format!("normal form not canonical in {}", raw.algebra()))?;
    ensure(once.normal_order() == once, || format!("normal ordering not idempotent in {}", raw.algebra()))
}

/// `star(star(x)) = x` on raw polynomials and `star(xy) = star(y) star(x)`
/// up to normal ordering.
pub fn check_adjoint(x: &NCPoly, y: &NCPoly) -> LawResult {
    if !x.algebra().supports_adjoint() {
        return Ok(());
    }
    ensure(x.adjoint().unwrap().adjoint().unwrap() == *x, || {
        format!("adjoint is not an involution in {}", x.algebra())
    })?;
    let lhs = x.mul_raw(y).unwrap().adjoint().unwrap().normal_order();
    let rhs = y.adjoint().unwrap().nc_mul(&x.adjoint().unwrap()).unwrap();
    ensure(lhs == rhs, || format!("adjoint is not an anti-homomorphism in {}", x.algebra()))
}

/// Substituting `q = 1` commutes with multiplication.
pub fn check_degeneration(x: &NCPoly, y: &NCPoly, target: AlgebraSpec) -> LawResult {
    let down = |p: &NCPoly| p.substitute(&Assignment::q_to_one()).unwrap().relabel(target).unwrap();
    let lhs = down(&x.nc_mul(y).unwrap());
    let rhs = down(x).nc_mul(&down(y)).unwrap();
    ensure(lhs == rhs, || format!("q = 1 specialization of {} does not match {target}", x.algebra()))
}

pub fn check_print_parse(p: &NCPoly) -> LawResult {
    let alg = p.algebra();
    let text = print(p);
    match parse(&text, &alg) {
        Ok(back) => ensure(back == *p, || format!("parse(print(p)) != p for {text:?} in {alg}")),
        Err(e) => Err(format!("printed form {text:?} does not parse in {alg}: {e}")),
    }
}

pub fn check_parse_print(text: &str, value: &NCPoly) -> LawResult {
    let alg = value.algebra();
    match parse(text, &alg) {
        Ok(p) => ensure(print(&p) == print(value), || {
            format!("{text:?} in {alg}: parsed to {}, expected {}", print(&p), print(value))
        }),
        Err(e) => Err(format!("{text:?} fails to parse in {alg}: {e}")),
    }
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Each distinct pending word is rewritten at most once, so for a one-pair
/// algebra the step count is bounded by the number of words with at most as
/// many lowering and raising letters as the input.
pub fn check_step_bound(alg: &AlgebraSpec, w: &Word) -> LawResult {
    if alg.pairs() != 1 {
        return Ok(());
    }
    let k = w.count(|g| alg.is_lowering(g)) as u64;
    let m = w.degree() as u64 - k;
    let bound: u64 = (0..=k).flat_map(|i| (0..=m).map(move |j| binom(i + j, i))).sum();
    reset_rewrite_steps();
    NCPoly::word(*alg, w.clone()).normal_order();
    let steps = rewrite_steps();
    ensure(steps <= bound, || format!("{steps} steps exceed bound {bound} in {alg}"))
}
