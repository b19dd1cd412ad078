//! Concrete actions of the algebras on commutative polynomial spaces.
//!
//! These are the independent oracles for the rewrite engine: an operator
//! expression is applied letter by letter to basis monomials, without ever
//! normal-ordering it.
//!
//! - `diff`: `b_i = x_i`, `a_i = d/dx_i` on `x_1^k1 ... x_p^kp`.
//! - `jackson`: `b = x`, `a = D` with `D x^k = {k} x^(k-1)`.
//! - `qplane-fock`: the vacuum module of the two-pair q-deformed algebra,
//!   with basis `|i, j> = b1^i b2^j |0>` and `a1 |0> = a2 |0> = 0`.

use std::collections::BTreeMap;

use crate::ncalg::{AlgebraSpec, Gen, NCPoly, Word};
use crate::scalars::{qnum, CoeffPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealizationError {
    #[error("realization {realization} cannot act with operators of {algebra}")]
    Mismatch { realization: String, algebra: String },
    #[error("module vector has {got} variables, realization {realization} expects {expected}")]
    Arity { realization: String, expected: usize, got: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Realization {
    /// Multiplication and differentiation in `p` variables.
    Diff(u8),
    Jackson,
    QPlaneFock,
}

impl Realization {
    pub fn name(&self) -> &'static str {
        match self {
            Realization::Diff(_) => "diff",
            Realization::Jackson => "jackson",
            Realization::QPlaneFock => "qplane-fock",
        }
    }

    /// The algebra whose operators this realization acts with.
    pub fn algebra(&self) -> AlgebraSpec {
        match *self {
            Realization::Diff(p) => AlgebraSpec::classical(p).expect("valid pair count"),
            Realization::Jackson => AlgebraSpec::q_deformed(),
            Realization::QPlaneFock => AlgebraSpec::quantum_plane(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.algebra().pairs() as usize
    }

    /// Action of one generator on a basis monomial. Every generator maps a
    /// basis monomial to a multiple of a basis monomial (or to zero).
    pub fn act(&self, g: Gen, exps: &[u32]) -> Option<(CoeffPoly, Vec<u32>)> {
        let alg = self.algebra();
        let i = alg.pair_index(g) as usize - 1;
        let raising = !alg.is_lowering(g);
        let mut out = exps.to_vec();
        if raising {
            out[i] += 1;
        } else if exps[i] == 0 {
            return None;
        } else {
            out[i] -= 1;
        }
        let k = exps[i];
        let coeff = match (self, raising) {
            (Realization::Diff(_), true) | (Realization::Jackson, true) => CoeffPoly::one(),
            (Realization::Diff(_), false) => CoeffPoly::from_int(k as i64),
            (Realization::Jackson, false) => qnum(k),
            // b1 |i,j> = |i+1,j>,  b2 |i,j> = q^(-i/2) |i,j+1>
            (Realization::QPlaneFock, true) => {
                if i == 0 {
                    CoeffPoly::one()
                } else {
                    CoeffPoly::v_pow(-(exps[0] as i32))
                }
            }
            // a1 |i,j> = q^j {i} |i-1,j>,  a2 |i,j> = q^(i/2) {j} |i,j-1>
            (Realization::QPlaneFock, false) => {
                if i == 0 {
                    &CoeffPoly::q_pow(exps[1] as i32) * &qnum(k)
                } else {
                    &CoeffPoly::v_pow(exps[0] as i32) * &qnum(k)
                }
            }
        };
        Some((coeff, out))
    }

    /// Applies a word (rightmost letter first) to a basis monomial.
    pub fn act_word(&self, w: &Word, exps: &[u32]) -> Option<(CoeffPoly, Vec<u32>)> {
        let letters: Vec<Gen> = w.letters().collect();
        let mut coeff = CoeffPoly::one();
        let mut cur = exps.to_vec();
        for &g in letters.iter().rev() {
            let (c, next) = self.act(g, &cur)?;
            coeff = &coeff * &c;
            cur = next;
        }
        Some((coeff, cur))
    }

    fn check(&self, op: &NCPoly) -> Result<(), RealizationError> {
        if op.algebra() != self.algebra() {
            return Err(RealizationError::Mismatch {
                realization: self.name().to_string(),
                algebra: op.algebra().to_string(),
            });
        }
        Ok(())
    }
}

/// A commutative polynomial in the module variables with `CoeffPoly`
/// coefficients. Monomials are exponent vectors (`[i, j]` is `x^i y^j`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModulePoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, CoeffPoly>,
}

impl ModulePoly {
    pub fn zero(nvars: usize) -> Self {
        ModulePoly { nvars, terms: BTreeMap::new() }
    }

    pub fn monomial(exps: Vec<u32>) -> Self {
        Self::term(exps, CoeffPoly::one())
    }

    pub fn term(exps: Vec<u32>, c: CoeffPoly) -> Self {
        let mut out = ModulePoly::zero(exps.len());
        out.add_term(exps, c);
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &CoeffPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: CoeffPoly) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &ModulePoly) -> ModulePoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ModulePoly) -> ModulePoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &CoeffPoly) -> ModulePoly {
        let mut out = ModulePoly::zero(self.nvars);
        for (e, k) in &self.terms {
            out.add_term(e.clone(), k * c);
        }
        out
    }
}

/// Applies an operator expression (in any word order) to a module vector.
pub fn apply(op: &NCPoly, v: &ModulePoly, r: Realization) -> Result<ModulePoly, RealizationError> {
    r.check(op)?;
    if v.nvars != r.num_vars() {
        return Err(RealizationError::Arity {
            realization: r.name().to_string(),
            expected: r.num_vars(),
            got: v.nvars,
        });
    }
    let mut out = ModulePoly::zero(v.nvars);
    for (w, c) in op.terms() {
        for (exps, k) in &v.terms {
            if let Some((wc, target)) = r.act_word(w, exps) {
                out.add_term(target, &(c * k) * &wc);
            }
        }
    }
    Ok(out)
}

/// Applies `f_1 f_2 ... f_k` (rightmost factor first).
pub fn apply_product(factors: &[NCPoly], v: &ModulePoly, r: Realization) -> Result<ModulePoly, RealizationError> {
    let mut cur = v.clone();
    for f in factors.iter().rev() {
        cur = apply(f, &cur, r)?;
        if cur.is_zero() {
            break;
        }
    }
    Ok(cur)
}

/// Applies a sum of products.
pub fn apply_sum_of_products(
    products: &[Vec<NCPoly>],
    v: &ModulePoly,
    r: Realization,
) -> Result<ModulePoly, RealizationError> {
    let mut out = ModulePoly::zero(v.nvars);
    for prod in products {
        out = out.add(&apply_product(prod, v, r)?);
    }
    Ok(out)
}

/// `J` = maximal total lowering degree over the words of a canonical
/// polynomial (0 for zero). A normal-ordered element whose lowering part has
/// degree at most `J` in every variable and which kills every basis monomial
/// with exponents up to `J` is zero: evaluating on `x^g` for a minimal
/// lowering exponent `g` isolates its coefficient with a nonzero factor
/// `g!` (or `{g}!` for generic `q`).
pub fn sufficiency_bound(diff: &NCPoly) -> u32 {
    diff.max_lowering_degree()
}

/// All exponent vectors in `nvars` variables with every entry `<= max_exp`.
pub fn basis_monomials(nvars: usize, max_exp: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..nvars {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=max_exp).map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out
}

/// Compares two sums of products on every basis monomial with per-variable
/// exponent at most `bound + 2`.
pub fn agree_on_basis(
    lhs: &[Vec<NCPoly>],
    rhs: &[Vec<NCPoly>],
    r: Realization,
    bound: u32,
) -> Result<bool, RealizationError> {
    for exps in basis_monomials(r.num_vars(), bound + 2) {
        let v = ModulePoly::monomial(exps);
        let left = apply_sum_of_products(lhs, &v, r)?;
        let right = apply_sum_of_products(rhs, &v, r)?;
        if left != right {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Raw lowering-degree bound of a sum of products, computed without any
/// normal ordering (rewriting never raises the lowering degree).
pub fn products_lowering_bound(products: &[Vec<NCPoly>]) -> u32 {
    products.iter().map(|p| p.iter().map(NCPoly::max_lowering_degree).sum::<u32>()).max().unwrap_or(0)
}

/// True iff `lhs` and `rhs` act identically on the realization.
///
/// The tested exponent range uses the larger of the sufficiency bound of the
/// normal-ordered difference and the raw lowering degree of both inputs, so a
/// wrong normal form cannot shrink the range.
pub fn oracle_equal(lhs: &NCPoly, rhs: &NCPoly, r: Realization) -> Result<bool, RealizationError> {
    r.check(lhs)?;
    r.check(rhs)?;
    let diff = lhs.nc_sub(rhs).expect("same algebra checked");
    let bound = sufficiency_bound(&diff).max(lhs.max_lowering_degree()).max(rhs.max_lowering_degree());
    agree_on_basis(&[vec![lhs.clone()]], &[vec![rhs.clone()]], r, bound)
}

/// Precomputed action of each quantum-plane generator on the basis
/// monomials `|i, j>` with `i + j <= max_degree`.
pub fn fock_action_table(max_degree: u32) -> BTreeMap<(Gen, Vec<u32>), ModulePoly> {
    let r = Realization::QPlaneFock;
    let alg = r.algebra();
    let mut table = BTreeMap::new();
    for g in (0..alg.num_generators() as u8).map(Gen) {
        for i in 0..=max_degree {
            for j in 0..=max_degree - i {
                let exps = vec![i, j];
                let image = match r.act(g, &exps) {
                    Some((c, target)) => ModulePoly::term(target, c),
                    None => ModulePoly::zero(2),
                };
                table.insert((g, exps), image);
            }
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Assignment, Monomial, Rational};
    use num_traits::Zero;

    fn gen_poly(alg: AlgebraSpec, g: Gen) -> NCPoly {
        NCPoly::generator(alg, g)
    }

    #[test]
    fn euler_operator() {
        let r = Realization::Diff(1);
        let h = r.algebra();
        let ba = NCPoly::word(h, Word::from_letters([h.b(1), h.a(1)]));
        let got = apply(&ba, &ModulePoly::monomial(vec![3]), r).unwrap();
        assert_eq!(got, ModulePoly::term(vec![3], CoeffPoly::from_int(3)));
    }

    #[test]
    fn jackson_euler_operator() {
        let r = Realization::Jackson;
        let q = r.algebra();
        let ba = NCPoly::word(q, Word::from_letters([q.b(1), q.a(1)]));
        let got = apply(&ba, &ModulePoly::monomial(vec![3]), r).unwrap();
        assert_eq!(got, ModulePoly::term(vec![3], qnum(3)));
    }

    /// Exact division of a Laurent polynomial in `v` (only even powers, no
    /// other symbols) by `1 - q`.
    fn divide_by_one_minus_q(p: &CoeffPoly) -> CoeffPoly {
        // coefficients indexed by q-power
        let mut coeffs: BTreeMap<i32, Rational> = BTreeMap::new();
        for (m, r) in p.terms() {
            assert!(m.v % 2 == 0 && m.alpha == 0 && m.eps == 0 && m.c == 0);
            coeffs.insert(m.v / 2, r.clone());
        }
        // (1 - q) * sum s_k q^k = p  =>  s_k = p_k + s_{k-1}
        let lo = *coeffs.keys().next().unwrap_or(&0);
        let hi = *coeffs.keys().last().unwrap_or(&0);
        let mut out = Vec::new();
        let mut prev = Rational::zero();
        for k in lo..hi {
            let s = coeffs.get(&k).cloned().unwrap_or_else(Rational::zero) + &prev;
            out.push((Monomial::v_pow(2 * k), s.clone()));
            prev = s;
        }
        assert_eq!(coeffs.get(&hi).cloned().unwrap_or_else(Rational::zero), -prev, "not divisible");
        CoeffPoly::from_terms(out)
    }

    #[test]
    fn jackson_action_matches_quotient_definition() {
        // D x^k = (x^k - (qx)^k) / (x (1 - q))
        let r = Realization::Jackson;
        let a = r.algebra().a(1);
        for k in 1..10u32 {
            let numerator = CoeffPoly::one() - CoeffPoly::q_pow(k as i32);
            let expected = divide_by_one_minus_q(&numerator);
            let (c, e) = r.act(a, &[k]).unwrap();
            assert_eq!(e, vec![k - 1]);
            assert_eq!(c, expected);
        }
        assert!(r.act(a, &[0]).is_none());
    }

    #[test]
    fn jackson_degenerates_to_derivative() {
        let a = Realization::Jackson.algebra().a(1);
        for k in 0..8u32 {
            let j = Realization::Jackson.act(a, &[k]);
            let d = Realization::Diff(1).act(AlgebraSpec::heisenberg().a(1), &[k]);
            match (j, d) {
                (None, None) => {}
                (Some((cj, ej)), Some((cd, ed))) => {
                    assert_eq!(ej, ed);
                    assert_eq!(cj.substitute(&Assignment::q_to_one()).unwrap(), cd);
                }
                _ => panic!("mismatched support at k={k}"),
            }
        }
    }

    #[test]
    fn defining_relations_hold_on_monomials() {
        let r = Realization::Diff(1);
        let h = r.algebra();
        let (b, a) = (gen_poly(h, h.b(1)), gen_poly(h, h.a(1)));
        let comm = &a.mul_raw(&b).unwrap() - &b.mul_raw(&a).unwrap();
        for k in 0..=6 {
            let x = ModulePoly::monomial(vec![k]);
            assert_eq!(apply(&comm, &x, r).unwrap(), x);
        }
        let r = Realization::Jackson;
        let q = r.algebra();
        let (b, a) = (gen_poly(q, q.b(1)), gen_poly(q, q.a(1)));
        let comm = &a.mul_raw(&b).unwrap() - &b.mul_raw(&a).unwrap().scale(&CoeffPoly::q());
        for k in 0..=6 {
            let x = ModulePoly::monomial(vec![k]);
            assert_eq!(apply(&comm, &x, r).unwrap(), x);
        }
    }

    #[test]
    fn quantum_plane_examples() {
        let r = Realization::QPlaneFock;
        let qp = r.algebra();
        let got = apply(&gen_poly(qp, qp.a(2)), &ModulePoly::monomial(vec![1, 1]), r).unwrap();
        assert_eq!(got, ModulePoly::term(vec![1, 0], CoeffPoly::v_pow(1)));
        let table = fock_action_table(3);
        assert!(table[&(qp.a(1), vec![0, 0])].is_zero());
        assert_eq!(table[&(qp.b(2), vec![1, 0])], ModulePoly::term(vec![1, 1], CoeffPoly::v_pow(-1)));
        assert_eq!(table[&(qp.a(2), vec![0, 2])], ModulePoly::term(vec![0, 1], qnum(2)));
    }

    /// The closed-form Fock action agrees with normal-ordering
    /// `g * b1^i b2^j` in the algebra and discarding words that end in a
    /// lowering generator (they annihilate the vacuum).
    #[test]
    fn fock_table_matches_rewrite_rules() {
        let qp = AlgebraSpec::quantum_plane();
        let table = fock_action_table(4);
        for ((g, exps), image) in &table {
            let state = Word::from_runs([(qp.b(1), exps[0]), (qp.b(2), exps[1])]);
            let op = NCPoly::word(qp, Word::letter(*g).concat(&state)).normal_order();
            let mut derived = ModulePoly::zero(2);
            for (w, c) in op.terms() {
                if w.count(|x| qp.is_lowering(x)) > 0 {
                    continue;
                }
                let i = w.count(|x| x == qp.b(1));
                let j = w.count(|x| x == qp.b(2));
                derived.add_term(vec![i, j], c.clone());
            }
            assert_eq!(&derived, image, "{g:?} on {exps:?}");
        }
    }

    #[test]
    fn oracle_equal_examples() {
        let r = Realization::Diff(1);
        let h = r.algebra();
        let ba = NCPoly::word(h, Word::from_letters([h.b(1), h.a(1)]));
        let lhs = ba.mul_raw(&(&ba - &NCPoly::one(h))).unwrap();
        let rhs = NCPoly::word(h, Word::from_runs([(h.b(1), 2), (h.a(1), 2)]));
        assert!(oracle_equal(&lhs, &rhs, r).unwrap());
        assert!(!oracle_equal(&lhs, &ba, r).unwrap());
        assert!(oracle_equal(&NCPoly::zero(h), &NCPoly::zero(h), r).unwrap());

        let r = Realization::Jackson;
        let q = r.algebra();
        let ba = NCPoly::word(q, Word::from_letters([q.b(1), q.a(1)]));
        let lhs = ba.mul_raw(&(&ba - &NCPoly::one(q))).unwrap();
        let rhs = NCPoly::word(q, Word::from_runs([(q.b(1), 2), (q.a(1), 2)])).scale(&CoeffPoly::q());
        assert!(oracle_equal(&lhs, &rhs, r).unwrap());

        let err = oracle_equal(&lhs, &rhs, Realization::Diff(1)).unwrap_err();
        assert!(matches!(err, RealizationError::Mismatch { .. }));
    }

    #[test]
    fn sufficiency_bound_reads_lowering_degree() {
        let h = AlgebraSpec::heisenberg();
        let p = &NCPoly::word(h, Word::from_runs([(h.b(1), 2), (h.a(1), 4)]))
            + &NCPoly::word(h, Word::from_runs([(h.b(1), 1), (h.a(1), 3)])).scale(&CoeffPoly::from_int(4));
        assert_eq!(sufficiency_bound(&p), 4);
        assert_eq!(sufficiency_bound(&NCPoly::zero(h)), 0);
    }

    #[test]
    fn basis_enumeration() {
        let b = basis_monomials(2, 2);
        assert_eq!(b.len(), 9);
        assert_eq!(b[0], vec![0, 0]);
        assert_eq!(b[8], vec![2, 2]);
    }
}
