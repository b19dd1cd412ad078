use std::sync::OnceLock;

use crate::ncalg::{AlgebraSpec, Deformation, Gen, NCPoly, Word};
use crate::scalars::{multinomial, qbinomial, qnum, CoeffPoly};

use super::{IdentityError, IdentityId, Params, Side};

/// A built identity instance; neither side is normal-ordered yet.
#[derive(Clone, Debug)]
pub struct Identity {
    pub id: IdentityId,
    pub params: Params,
    pub lhs: Side,
    pub rhs: Side,
}

fn w(alg: AlgebraSpec, runs: &[(Gen, u32)]) -> NCPoly {
    NCPoly::word(alg, Word::from_runs(runs.iter().copied()))
}

fn scalar(alg: AlgebraSpec, c: CoeffPoly) -> NCPoly {
    NCPoly::scalar(alg, c)
}

fn int(k: i64) -> CoeffPoly {
    CoeffPoly::from_int(k)
}

fn commutator(x: &NCPoly, y: &NCPoly) -> Side {
    let alg = x.algebra();
    Side::product(alg, vec![x.clone(), y.clone()]).minus(Side::product(alg, vec![y.clone(), x.clone()]))
}

/// All vectors of `parts` non-negative integers summing to `total`, in
/// lexicographically decreasing order.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `sum_j C(total; j) * prefix * b_1^j1 ... b_p^jp a_1^j1 ... a_p^jp * suffix`.
fn multinomial_sum(alg: AlgebraSpec, total: u32, prefix: &[(Gen, u32)], suffix: &[(Gen, u32)]) -> NCPoly {
    let p = alg.pairs() as usize;
    let mut out = NCPoly::zero(alg);
    for j in compositions(total, p) {
        let mut runs: Vec<(Gen, u32)> = prefix.to_vec();
        runs.extend((0..p).map(|i| (alg.b(i as u8 + 1), j[i])));
        runs.extend((0..p).map(|i| (alg.a(i as u8 + 1), j[i])));
        runs.extend_from_slice(suffix);
        let c = CoeffPoly::constant(multinomial(total, &j).expect("composition sums to total"));
        out = &out + &w(alg, &runs).scale(&c);
    }
    out
}

/// `sum_i b_i a_i`.
fn number_operator(alg: AlgebraSpec) -> NCPoly {
    (1..=alg.pairs()).fold(NCPoly::zero(alg), |acc, i| &acc + &w(alg, &[(alg.b(i), 1), (alg.a(i), 1)]))
}

/// q-binomial sum shared by the quantum-plane identities:
/// `sum_l v^(shift + l(l-n-1)) [n+1, l] * word(l)`.
fn qplane_sum(n: u32, v_shift: i32, word: impl Fn(u32) -> Vec<(Gen, u32)>) -> NCPoly {
    let qp = AlgebraSpec::quantum_plane();
    let mut out = NCPoly::zero(qp);
    for l in 0..=n + 1 {
        let (li, ni) = (l as i32, n as i32);
        let c = &CoeffPoly::v_pow(v_shift + li * (li - ni - 1)) * &qbinomial(n + 1, l).expect("l <= n+1");
        out = &out + &w(qp, &word(l)).scale(&c);
    }
    out
}

/// Builds both sides of an identity instance.
pub fn build(id: IdentityId, params: &Params) -> Result<Identity, IdentityError> {
    use IdentityId::*;
    params.validate(id)?;
    let n = params.n.unwrap_or(0);
    let r = params.r.unwrap_or(1);
    let ni = n as i64;

    let (lhs, rhs) = match id {
        E2 | E2EPS => {
            let h = AlgebraSpec::heisenberg();
            let (b, a) = (h.b(1), h.a(1));
            let ba = w(h, &[(b, 1), (a, 1)]);
            let factors = (0..=ni)
                .map(|m| {
                    let shift = if id == E2EPS && m == 1 { &int(1) * &CoeffPoly::eps() } else { CoeffPoly::zero() };
                    &ba - &scalar(h, &int(m) + &shift)
                })
                .collect();
            (Side::product(h, factors), Side::poly(w(h, &[(b, n + 1), (a, n + 1)])))
        }
        E5 => {
            let h = AlgebraSpec::heisenberg();
            let (b, a) = (h.b(1), h.a(1));
            let diff_sq = &w(h, &[(a, 2)]) - &w(h, &[(b, 2)]);
            let factors = (0..=ni).map(|k| &diff_sq - &scalar(h, int(2 * k + 1))).collect();
            let plus = &w(h, &[(a, 1)]) + &w(h, &[(b, 1)]);
            let minus = &w(h, &[(a, 1)]) - &w(h, &[(b, 1)]);
            let mut rhs = vec![plus; n as usize + 1];
            rhs.extend(vec![minus; n as usize + 1]);
            (Side::product(h, factors), Side::product(h, rhs))
        }
        E7 | E8 => {
            let alg = AlgebraSpec::borel_a(Deformation::Unit);
            let (bb, aa) = (alg.b(1), alg.a(1));
            let shifted: Vec<NCPoly> = (0..=ni)
                .map(|k| {
                    let k = if id == E7 { k } else { -k };
                    &w(alg, &[(bb, 1)]) + &scalar(alg, int(k))
                })
                .collect();
            let a_pow = w(alg, &[(aa, n + 1)]);
            if id == E7 {
                let mut rhs = shifted;
                rhs.push(a_pow);
                (Side::power(&w(alg, &[(bb, 1), (aa, 1)]), n + 1), Side::product(alg, rhs))
            } else {
                let mut rhs = vec![a_pow];
                rhs.extend(shifted);
                (Side::power(&w(alg, &[(aa, 1), (bb, 1)]), n + 1), Side::product(alg, rhs))
            }
        }
        E9 => {
            let h = AlgebraSpec::heisenberg();
            let (b, a) = (h.b(1), h.a(1));
            let alpha = CoeffPoly::alpha();
            let j_plus = &w(h, &[(b, 2), (a, 1)]) - &w(h, &[(b, 1)]).scale(&(&int(2) * &alpha));
            let j_zero = &w(h, &[(b, 1), (a, 1)]) - &scalar(h, alpha.clone());
            let j_minus = w(h, &[(a, 1)]);
            match r {
                1 => (commutator(&j_plus, &j_zero), Side::poly(-&j_plus)),
                2 => (commutator(&j_minus, &j_zero), Side::poly(j_minus)),
                _ => (commutator(&j_plus, &j_minus), Side::poly(j_zero.scale(&int(-2)))),
            }
        }
        E10 | E11 | E26 | E28 => {
            let deformed = matches!(id, E26 | E28);
            let alg = if deformed { AlgebraSpec::q_deformed() } else { AlgebraSpec::heisenberg() };
            let (b, a) = (alg.b(1), alg.a(1));
            let shift = if deformed { qnum(n) } else { int(ni) };
            let prefactor = if deformed { CoeffPoly::q_pow((n * (n + 1)) as i32) } else { int(1) };
            let (x, rhs_word) = if matches!(id, E10 | E26) {
                (&w(alg, &[(b, 1), (a, 2)]) - &w(alg, &[(a, 1)]).scale(&shift), w(alg, &[(b, n + 1), (a, 2 * n + 2)]))
            } else {
                (&w(alg, &[(b, 2), (a, 1)]) - &w(alg, &[(b, 1)]).scale(&shift), w(alg, &[(b, 2 * n + 2), (a, n + 1)]))
            };
            (Side::power(&x, n + 1), Side::poly(rhs_word.scale(&prefactor)))
        }
        E13 | E13Q => {
            let alg = if id == E13 { AlgebraSpec::classical_central(1)? } else { AlgebraSpec::q_deformed() };
            let (b, a) = (alg.b(1), alg.a(1));
            let aba = w(alg, &[(a, 1), (b, 1), (a, 1)]);
            (Side::power(&aba, n + 1), Side::poly(w(alg, &[(a, n + 1), (b, n + 1), (a, n + 1)])))
        }
        F3ALT => {
            let m = params.m.expect("validated");
            let alg = AlgebraSpec::classical_central(1)?;
            let (b, a) = (alg.b(1), alg.a(1));
            let mut base = vec![(a, 1)];
            let mut rhs = vec![(a, n)];
            for _ in 1..m {
                base.extend([(b, 1), (a, 1)]);
                rhs.extend([(b, n), (a, n)]);
            }
            (Side::power(&w(alg, &base), n), Side::poly(w(alg, &rhs)))
        }
        F3BASIC | F5BASIC => {
            let deformed = id == F5BASIC;
            let alg = if deformed { AlgebraSpec::q_deformed() } else { AlgebraSpec::heisenberg() };
            let (b, a) = (alg.b(1), alg.a(1));
            let count = if deformed { qnum(n) } else { int(ni) };
            let lower = n.saturating_sub(1);
            if r == 1 {
                // a^n b - q^n b a^n = {n} a^(n-1)
                let twist = if deformed { CoeffPoly::q_pow(n as i32) } else { int(1) };
                let lhs = &w(alg, &[(a, n), (b, 1)]) - &w(alg, &[(b, 1), (a, n)]).scale(&twist);
                (Side::poly(lhs), Side::poly(w(alg, &[(a, lower)]).scale(&count)))
            } else {
                // b^n a - q^-n a b^n = -{n} q^-n b^(n-1)
                let twist = if deformed { CoeffPoly::q_pow(-(n as i32)) } else { int(1) };
                let lhs = &w(alg, &[(b, n), (a, 1)]) - &w(alg, &[(a, 1), (b, n)]).scale(&twist);
                let c = -(&count * &twist);
                (Side::poly(lhs), Side::poly(w(alg, &[(b, lower)]).scale(&c)))
            }
        }
        E15 => {
            let alg = AlgebraSpec::classical(params.p.expect("validated") as u8)?;
            let s = number_operator(alg);
            let factors = (0..=ni).map(|l| &s - &scalar(alg, int(l))).collect();
            (Side::product(alg, factors), Side::poly(multinomial_sum(alg, n + 1, &[], &[])))
        }
        E16 | E17 => {
            let alg = AlgebraSpec::classical(params.p.expect("validated") as u8)?;
            let l = params.l.expect("validated") as u8;
            let shifted = &number_operator(alg) - &scalar(alg, int(ni));
            if id == E16 {
                let bl = w(alg, &[(alg.b(l), 1)]);
                let x = bl.mul_raw(&shifted)?;
                let rhs = multinomial_sum(alg, n + 1, &[(alg.b(l), n + 1)], &[]);
                (Side::power(&x, n + 1), Side::poly(rhs))
            } else {
                let al = w(alg, &[(alg.a(l), 1)]);
                let x = shifted.mul_raw(&al)?;
                let rhs = multinomial_sum(alg, n + 1, &[], &[(alg.a(l), n + 1)]);
                (Side::power(&x, n + 1), Side::poly(rhs))
            }
        }
        E19 => {
            let alg = AlgebraSpec::q_deformed();
            let (b, a) = (alg.b(1), alg.a(1));
            let ba = w(alg, &[(b, 1), (a, 1)]);
            let factors = (0..=n).map(|m| &ba - &scalar(alg, qnum(m))).collect();
            let c = CoeffPoly::v_pow((n * (n + 1)) as i32);
            (Side::product(alg, factors), Side::poly(w(alg, &[(b, n + 1), (a, n + 1)]).scale(&c)))
        }
        E22 | BB => {
            // (BA)^(n+1) = B (qB + 1) ... (q^n B + {n}) A^(n+1)
            // or, for BB, (BA)^(n+1) = B^(n+1) A (qA + 1) ... (q^n A + {n})
            let (alg, bb, aa) = if id == E22 && r == 2 {
                let alg = AlgebraSpec::q_deformed();
                let big_b = (&w(alg, &[(alg.b(1), 1), (alg.a(1), 1)]) - &scalar(alg, qnum(n)))
                    .scale(&CoeffPoly::q_pow(-(n as i32)));
                (alg, big_b, w(alg, &[(alg.a(1), 1)]))
            } else {
                let alg = if id == BB { AlgebraSpec::borel_b() } else { AlgebraSpec::borel_a(Deformation::Symbolic) };
                (alg, w(alg, &[(alg.b(1), 1)]), w(alg, &[(alg.a(1), 1)]))
            };
            if id == BB {
                bb_bootstrap()?;
            }
            let ladder_of = |x: &NCPoly| -> Vec<NCPoly> {
                (0..=n).map(|k| &x.scale(&CoeffPoly::q_pow(k as i32)) + &scalar(alg, qnum(k))).collect()
            };
            let lhs = Side::power(&bb.mul_raw(&aa)?, n + 1);
            let rhs = if id == BB {
                let mut f = vec![bb.clone(); n as usize + 1];
                f.extend(ladder_of(&aa));
                f
            } else {
                let mut f = ladder_of(&bb);
                f.extend(vec![aa.clone(); n as usize + 1]);
                f
            };
            (lhs, Side::product(alg, rhs))
        }
        E23 => {
            let alg = AlgebraSpec::borel_a(Deformation::Symbolic);
            let (bb, aa) = (alg.b(1), alg.a(1));
            let mut rhs = vec![w(alg, &[(aa, n + 1)])];
            rhs.extend((0..=n).map(|k| {
                let inv = CoeffPoly::q_pow(-(k as i32));
                &w(alg, &[(bb, 1)]).scale(&inv) - &scalar(alg, &qnum(k) * &inv)
            }));
            (Side::power(&w(alg, &[(aa, 1), (bb, 1)]), n + 1), Side::product(alg, rhs))
        }
        E25 => {
            let alg = AlgebraSpec::q_deformed();
            let (b, a) = (alg.b(1), alg.a(1));
            let q = CoeffPoly::q();
            let two_alpha = &int(2) * &CoeffPoly::alpha();
            let one_plus_q = &int(1) + &q;
            let sigma = &int(1) - &(&two_alpha * &(&int(1) - &q));
            let m_plus = &w(alg, &[(b, 2), (a, 1)]) - &w(alg, &[(b, 1)]).scale(&two_alpha);
            let n_zero_coeff = &one_plus_q + &(&two_alpha * &(&CoeffPoly::q_pow(2) - &q));
            let n_zero = &w(alg, &[(b, 1), (a, 1)]).scale(&n_zero_coeff) - &scalar(alg, two_alpha.clone());
            let a1 = w(alg, &[(a, 1)]);
            let prod = |x: &NCPoly, y: &NCPoly| Side::product(alg, vec![x.clone(), y.clone()]);
            match r {
                1 => (
                    prod(&n_zero, &a1).scaled(&q).minus(prod(&a1, &n_zero)),
                    Side::poly(a1.scale(&-(&one_plus_q * &sigma))),
                ),
                2 => (
                    prod(&n_zero, &m_plus).minus(prod(&m_plus, &n_zero).scaled(&q)),
                    Side::poly(m_plus.scale(&(&one_plus_q * &sigma))),
                ),
                _ => (prod(&m_plus, &a1).scaled(&CoeffPoly::q_pow(2)).minus(prod(&a1, &m_plus)), Side::poly(-&n_zero)),
            }
        }
        E30 => {
            let qp = AlgebraSpec::quantum_plane();
            let (b1, b2, a1, a2) = (qp.b(1), qp.b(2), qp.a(1), qp.a(2));
            let s = number_operator(qp);
            let factors = (0..=n).map(|l| &s - &scalar(qp, qnum(l))).collect();
            let rhs = qplane_sum(n, (n * (n + 1)) as i32, |l| vec![(b1, n + 1 - l), (b2, l), (a1, n + 1 - l), (a2, l)]);
            (Side::product(qp, factors), Side::poly(rhs))
        }
        E31 => {
            let qp = AlgebraSpec::quantum_plane();
            let alpha = CoeffPoly::alpha();
            let x = &number_operator(qp) - &scalar(qp, alpha.clone());
            let a1 = w(qp, &[(qp.a(1), 1)]);
            let lhs = Side::product(qp, vec![a1.clone(), x.clone()])
                .minus(Side::product(qp, vec![x, a1.clone()]).scaled(&CoeffPoly::q()));
            let c = &(&int(1) - &alpha) + &(&alpha * &CoeffPoly::q());
            (lhs, Side::poly(a1.scale(&c)))
        }
        E32 | E33 => {
            let qp = AlgebraSpec::quantum_plane();
            let (b1, b2, a1, a2) = (qp.b(1), qp.b(2), qp.a(1), qp.a(2));
            let shift = 2 * (n * (n + 1)) as i32;
            if id == E32 {
                let x = &(&w(qp, &[(b1, 1), (a1, 2)]) + &w(qp, &[(b2, 1), (a2, 1), (a1, 1)]))
                    - &w(qp, &[(a1, 1)]).scale(&qnum(n));
                let rhs =
                    qplane_sum(n, shift, |l| vec![(b1, n + 1 - l), (b2, l), (a1, n + 1 - l), (a2, l), (a1, n + 1)]);
                (Side::power(&x, n + 1), Side::poly(rhs))
            } else {
                let x = &(&w(qp, &[(b1, 2), (a1, 1)]) + &w(qp, &[(b1, 1), (b2, 1), (a2, 1)]))
                    - &w(qp, &[(b1, 1)]).scale(&qnum(n));
                let rhs = qplane_sum(n, shift, |l| vec![(b1, 2 * n + 2 - l), (b2, l), (a1, n + 1 - l), (a2, l)]);
                (Side::power(&x, n + 1), Side::poly(rhs))
            }
        }
    };
    Ok(Identity { id, params: *params, lhs, rhs })
}

/// Largest `n` checked by the BB bootstrap before the builder is enabled.
pub const BB_BOOTSTRAP_MAX_N: u32 = 3;

/// Coefficients `f_j` with `(BA)^(n+1) = B^(n+1) sum_j f_j A^j` in the
/// `AB - qBA = B` algebra, obtained by brute-force normal ordering.
pub fn derive_bb_factor(n: u32) -> Result<Vec<CoeffPoly>, IdentityError> {
    let alg = AlgebraSpec::borel_b();
    let (bb, aa) = (alg.b(1), alg.a(1));
    let nf = w(alg, &[(bb, 1), (aa, 1)]).nc_pow(n + 1);
    let mut coeffs = vec![CoeffPoly::zero(); n as usize + 2];
    for (word, c) in nf.terms() {
        let b_exp = word.count(|g| g == bb);
        let a_exp = word.count(|g| g == aa);
        if b_exp != n + 1 || a_exp as usize >= coeffs.len() {
            return Err(IdentityError::BootstrapFailed(format!(
                "normal form of (BA)^{} has a term outside B^{} * A^j",
                n + 1,
                n + 1
            )));
        }
        coeffs[a_exp as usize] = c.clone();
    }
    Ok(coeffs)
}

/// Coefficients of `A (qA + 1)(q^2 A + {2}) ... (q^n A + {n})`, multiplied
/// out as a commutative polynomial in `A`.
fn closed_form_bb_factor(n: u32) -> Vec<CoeffPoly> {
    let mut coeffs = vec![CoeffPoly::one()];
    for k in 0..=n {
        let (lin, cst) = (CoeffPoly::q_pow(k as i32), qnum(k));
        let mut next = vec![CoeffPoly::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += &(c * &lin);
            next[j] += &(c * &cst);
        }
        coeffs = next;
    }
    coeffs
}

/// Confirms the closed form of `A_{n+1,q}` against brute force for
/// `n = 0..=3`; the BB builder refuses to run otherwise.
pub fn bb_bootstrap() -> Result<(), IdentityError> {
    static CHECK: OnceLock<Result<(), String>> = OnceLock::new();
    CHECK
        .get_or_init(|| {
            for n in 0..=BB_BOOTSTRAP_MAX_N {
                let derived = derive_bb_factor(n).map_err(|e| e.to_string())?;
                if derived != closed_form_bb_factor(n) {
                    return Err(format!("closed form of A_(n+1,q) disagrees with brute force at n={n}"));
                }
            }
            Ok(())
        })
        .clone()
        .map_err(IdentityError::BootstrapFailed)
}
