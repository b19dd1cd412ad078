use serde::Serialize;

use crate::ncalg::{AlgebraSpec, Deformation, NCPoly, Word};
use crate::realizations::{agree_on_basis, basis_monomials, sufficiency_bound, Realization};
use crate::scalars::{Assignment, Rational, Symbol};

use super::{build, IdentityError, IdentityId, Params};

/// Realization used as an independent oracle for a tag, together with the
/// scalar specialization needed to land in its algebra (if any).
pub fn realization_for(id: IdentityId, params: &Params) -> Option<(Realization, Option<Assignment>)> {
    use IdentityId::*;
    let c_to_one = || Some(Assignment::new().set(Symbol::C, Rational::from_integer(1.into())));
    match id {
        E2 | E5 | E9 | E10 | E11 | F3BASIC | E2EPS => Some((Realization::Diff(1), None)),
        E13 | F3ALT => Some((Realization::Diff(1), c_to_one())),
        E15 | E16 | E17 => Some((Realization::Diff(params.p? as u8), None)),
        E19 | E26 | E28 | E13Q | F5BASIC | E25 => Some((Realization::Jackson, None)),
        E22 if params.r == Some(2) => Some((Realization::Jackson, None)),
        E30 | E31 | E32 | E33 => Some((Realization::QPlaneFock, None)),
        E7 | E8 | E22 | E23 | BB => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub realization: &'static str,
    pub agree: bool,
    /// Per-variable exponent bound of the tested basis monomials.
    pub max_exponent: u32,
    pub basis_size: usize,
}

/// Applies both sides factor by factor to basis monomials of the tag's
/// realization and compares. `Ok(None)` when no realization applies.
pub fn oracle_check(id: IdentityId, params: &Params) -> Result<Option<OracleVerdict>, IdentityError> {
    let Some((r, assign)) = realization_for(id, params) else {
        return Ok(None);
    };
    let ident = build(id, params)?;
    let (lhs, rhs) = match assign {
        Some(a) => (ident.lhs.specialize(&a, r.algebra())?, ident.rhs.specialize(&a, r.algebra())?),
        None => (ident.lhs, ident.rhs),
    };
    let diff = lhs.expand().nc_sub(&rhs.expand())?;
    let bound = sufficiency_bound(&diff).max(lhs.lowering_bound()).max(rhs.lowering_bound());
    let agree = agree_on_basis(lhs.products(), rhs.products(), r, bound)?;
    Ok(Some(OracleVerdict {
        realization: r.name(),
        agree,
        max_exponent: bound + 2,
        basis_size: basis_monomials(r.num_vars(), bound + 2).len(),
    }))
}

/// Pairs of tags exchanged by the star anti-involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualPair {
    E10E11,
    E26E28,
    E32E33,
}

impl DualPair {
    pub const ALL: [DualPair; 3] = [DualPair::E10E11, DualPair::E26E28, DualPair::E32E33];

    pub fn tags(&self) -> (IdentityId, IdentityId) {
        match self {
            DualPair::E10E11 => (IdentityId::E10, IdentityId::E11),
            DualPair::E26E28 => (IdentityId::E26, IdentityId::E28),
            DualPair::E32E33 => (IdentityId::E32, IdentityId::E33),
        }
    }
}

/// True iff the star image of each side of the first identity normal-orders
/// to the corresponding side of the second.
pub fn duality_check(pair: DualPair, n: u32) -> Result<bool, IdentityError> {
    let (src, dst) = pair.tags();
    let a = build(src, &Params::n(n))?;
    let b = build(dst, &Params::n(n))?;
    Ok(a.lhs.adjoint()?.expand() == b.lhs.expand() && a.rhs.adjoint()?.expand() == b.rhs.expand())
}

/// q-deformed tags paired with the classical tag they reduce to at `q = 1`.
pub fn degeneration_target(id: IdentityId) -> Option<(Params, IdentityId, Params, AlgebraSpec)> {
    use IdentityId::*;
    let base = Params::none();
    match id {
        E19 => Some((base, E2, base, AlgebraSpec::heisenberg())),
        E22 => Some((base.with_r(1), E7, base, AlgebraSpec::borel_a(Deformation::Unit))),
        E23 => Some((base, E8, base, AlgebraSpec::borel_a(Deformation::Unit))),
        E30 => Some((base, E15, base.with_p(2), AlgebraSpec::classical(2).expect("p=2 is valid"))),
        _ => None,
    }
}

/// Normal-orders both sides of a q-deformed identity, substitutes `q = 1`
/// and compares with the normal forms of its classical counterpart.
pub fn degeneration_check(id: IdentityId, n: u32) -> Result<bool, IdentityError> {
    let (src_params, dst, dst_params, target) =
        degeneration_target(id).ok_or_else(|| IdentityError::UnknownTag(format!("{id} has no q = 1 counterpart")))?;
    let src = build(id, &src_params.with_n(n))?;
    let dst = build(dst, &dst_params.with_n(n))?;
    let down =
        |p: NCPoly| -> Result<NCPoly, IdentityError> { Ok(p.substitute(&Assignment::q_to_one())?.relabel(target)?) };
    Ok(down(src.lhs.expand())? == dst.lhs.expand() && down(src.rhs.expand())? == dst.rhs.expand())
}

/// Number of residual terms when the residual has the shape predicted for
/// the epsilon-perturbed falling product: nonzero, every coefficient a
/// multiple of `eps`, and every word `b^k a^k` with `k <= n`.
pub fn eps_residual_shape(residual: &NCPoly, n: u32) -> Option<usize> {
    let alg = residual.algebra();
    if residual.is_zero() || alg != AlgebraSpec::heisenberg() {
        return None;
    }
    let (b, a) = (alg.b(1), alg.a(1));
    for (w, c) in residual.terms() {
        let k = w.count(|g| g == b);
        let expected = Word::from_runs([(b, k), (a, k)]);
        if !c.is_eps_proportional() || *w != expected || k > n {
            return None;
        }
    }
    Some(residual.len())
}
