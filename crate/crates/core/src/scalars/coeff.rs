use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Rational, ScalarError};

/// Exponent vector of a coefficient monomial `v^v * alpha^alpha * eps^eps * c^c`.
///
/// Field order fixes the canonical term order `(e_v, e_alpha, e_eps, e_c)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub v: i32,
    pub alpha: u32,
    pub eps: u32,
    pub c: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { v: 0, alpha: 0, eps: 0, c: 0 };

    pub fn v_pow(k: i32) -> Self {
        Monomial { v: k, ..Self::ONE }
    }

    fn mul(self, other: Monomial) -> Monomial {
        Monomial {
            v: self.v + other.v,
            alpha: self.alpha + other.alpha,
            eps: self.eps + other.eps,
            c: self.c + other.c,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }
}

/// A symbol of the coefficient ring that can be assigned a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    /// `v = q^(1/2)`.
    V,
    Alpha,
    Eps,
    C,
}

/// Partial assignment of rational values to coefficient symbols.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Assignment {
    pub v: Option<Rational>,
    pub alpha: Option<Rational>,
    pub eps: Option<Rational>,
    pub c: Option<Rational>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, symbol: Symbol, value: Rational) -> Self {
        match symbol {
            Symbol::V => self.v = Some(value),
            Symbol::Alpha => self.alpha = Some(value),
            Symbol::Eps => self.eps = Some(value),
            Symbol::C => self.c = Some(value),
        }
        self
    }

    /// The classical limit `q = 1`, realized as `v = 1`.
    pub fn q_to_one() -> Self {
        Self::new().set(Symbol::V, Rational::one())
    }
}

/// Laurent polynomial in `v` (with `q = v^2`) and polynomial in the auxiliary
/// commuting symbols `alpha`, `eps`, `c`, over exact rationals.
///
/// Terms with zero coefficient are never stored, so structural equality is
/// ring equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CoeffPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl CoeffPoly {
    pub fn zero() -> Self {
        CoeffPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(r: Rational) -> Self {
        Self::monomial(r, Monomial::ONE)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::constant(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn monomial(r: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(m, r);
        }
        CoeffPoly { terms }
    }

    /// `v^k = q^(k/2)`.
    pub fn v_pow(k: i32) -> Self {
        Self::monomial(Rational::one(), Monomial::v_pow(k))
    }

    /// `q^k = v^(2k)`.
    pub fn q_pow(k: i32) -> Self {
        Self::v_pow(2 * k)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn alpha() -> Self {
        Self::monomial(Rational::one(), Monomial { alpha: 1, ..Monomial::ONE })
    }

    pub fn eps() -> Self {
        Self::monomial(Rational::one(), Monomial { eps: 1, ..Monomial::ONE })
    }

    pub fn central() -> Self {
        Self::monomial(Rational::one(), Monomial { c: 1, ..Monomial::ONE })
    }

    pub fn symbol(s: Symbol) -> Self {
        match s {
            Symbol::V => Self::v_pow(1),
            Symbol::Alpha => Self::alpha(),
            Symbol::Eps => Self::eps(),
            Symbol::C => Self::central(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(m, r)| m.is_one() && r.is_one())
    }

    /// Number of stored monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// The value as a rational constant, if no symbol occurs.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.iter().next().filter(|(m, _)| m.is_one()).map(|(_, r)| r.clone()),
            _ => None,
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut out = CoeffPoly::zero();
        for (m, r) in iter {
            out.add_term(m, r);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, r: Rational) {
        if r.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(r);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += r;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiplies every coefficient by `v^k`.
    pub fn shift_v(&self, k: i32) -> Self {
        CoeffPoly { terms: self.terms.iter().map(|(m, r)| (Monomial { v: m.v + k, ..*m }, r.clone())).collect() }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return CoeffPoly::zero();
        }
        CoeffPoly { terms: self.terms.iter().map(|(m, c)| (*m, c * r)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = CoeffPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Maximal exponent of `symbol` over stored terms (for `v`, the maximal
    /// absolute exponent).
    pub fn degree_in(&self, symbol: Symbol) -> u32 {
        self.terms
            .keys()
            .map(|m| match symbol {
                Symbol::V => m.v.unsigned_abs(),
                Symbol::Alpha => m.alpha,
                Symbol::Eps => m.eps,
                Symbol::C => m.c,
            })
            .max()
            .unwrap_or(0)
    }

    /// True when every stored monomial carries at least one factor of `eps`.
    pub fn is_eps_proportional(&self) -> bool {
        !self.is_zero() && self.terms.keys().all(|m| m.eps >= 1)
    }

    /// Exact evaluation of the assigned symbols; unassigned symbols remain.
    pub fn substitute(&self, assign: &Assignment) -> Result<CoeffPoly, ScalarError> {
        if let Some(v) = &assign.v {
            if v.is_zero() && self.terms.keys().any(|m| m.v < 0) {
                return Err(ScalarError::DivisionByZero);
            }
        }
        let mut out = CoeffPoly::zero();
        for (m, r) in &self.terms {
            let mut coeff = r.clone();
            let mut mono = *m;
            if let Some(v) = &assign.v {
                coeff *= rational_pow(v, m.v);
                mono.v = 0;
            }
            if let Some(a) = &assign.alpha {
                coeff *= rational_pow(a, m.alpha as i32);
                mono.alpha = 0;
            }
            if let Some(e) = &assign.eps {
                coeff *= rational_pow(e, m.eps as i32);
                mono.eps = 0;
            }
            if let Some(c) = &assign.c {
                coeff *= rational_pow(c, m.c as i32);
                mono.c = 0;
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}

fn rational_pow(base: &Rational, exp: i32) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    let r = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp < 0 {
        r.recip()
    } else {
        r
    }
}

impl From<i64> for CoeffPoly {
    fn from(n: i64) -> Self {
        CoeffPoly::from_int(n)
    }
}

impl From<Rational> for CoeffPoly {
    fn from(r: Rational) -> Self {
        CoeffPoly::constant(r)
    }
}

impl Add<&CoeffPoly> for &CoeffPoly {
    type Output = CoeffPoly;
    fn add(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for CoeffPoly {
    type Output = CoeffPoly;
    fn add(mut self, rhs: CoeffPoly) -> CoeffPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&CoeffPoly> for CoeffPoly {
    fn add_assign(&mut self, rhs: &CoeffPoly) {
        for (m, r) in &rhs.terms {
            self.add_term(*m, r.clone());
        }
    }
}

impl SubAssign<&CoeffPoly> for CoeffPoly {
    fn sub_assign(&mut self, rhs: &CoeffPoly) {
        for (m, r) in &rhs.terms {
            self.add_term(*m, -r);
        }
    }
}

impl Sub<&CoeffPoly> for &CoeffPoly {
    type Output = CoeffPoly;
    fn sub(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for CoeffPoly {
    type Output = CoeffPoly;
    fn sub(mut self, rhs: CoeffPoly) -> CoeffPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        CoeffPoly { terms: self.terms.iter().map(|(m, r)| (*m, -r)).collect() }
    }
}

impl Neg for CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        -&self
    }
}

impl Mul<&CoeffPoly> for &CoeffPoly {
    type Output = CoeffPoly;
    fn mul(self, rhs: &CoeffPoly) -> CoeffPoly {
        if self.is_zero() || rhs.is_zero() {
            return CoeffPoly::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let mut out = CoeffPoly::zero();
        for (ma, ra) in &self.terms {
            for (mb, rb) in &rhs.terms {
                out.add_term(ma.mul(*mb), ra * rb);
            }
        }
        out
    }
}

impl Mul for CoeffPoly {
    type Output = CoeffPoly;
    fn mul(self, rhs: CoeffPoly) -> CoeffPoly {
        &self * &rhs
    }
}

/// Renders `v^k` in terms of `q`: `q`, `q^3`, `q^(-1)`, `q^(1/2)`, `q^(-3/2)`.
fn render_v_power(k: i32) -> Option<String> {
    if k == 0 {
        return None;
    }
    Some(if k % 2 == 0 {
        match k / 2 {
            1 => "q".to_string(),
            e if e > 0 => format!("q^{e}"),
            e => format!("q^({e})"),
        }
    } else {
        format!("q^({k}/2)")
    })
}

fn render_monomial_body(m: &Monomial) -> Vec<String> {
    let mut parts = Vec::new();
    if let Some(s) = render_v_power(m.v) {
        parts.push(s);
    }
    for (name, e) in [("alpha", m.alpha), ("eps", m.eps), ("c", m.c)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    parts
}

/// Writes `|r| * body` with the coefficient omitted when it is 1.
fn write_unsigned_term(f: &mut fmt::Formatter<'_>, r: &Rational, m: &Monomial) -> fmt::Result {
    let abs = r.abs();
    let body = render_monomial_body(m);
    if body.is_empty() {
        return write!(f, "{abs}");
    }
    if !abs.is_one() {
        write!(f, "{abs}*")?;
    }
    write!(f, "{}", body.join("*"))
}

impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, r)) in self.terms.iter().enumerate() {
            if r.is_negative() {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            write_unsigned_term(f, r, m)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> CoeffPoly {
        CoeffPoly::q()
    }

    #[test]
    fn difference_of_squares() {
        let a = &q() + &CoeffPoly::one();
        let b = &q() - &CoeffPoly::one();
        assert_eq!(&a * &b, &CoeffPoly::q_pow(2) - &CoeffPoly::one());
    }

    #[test]
    fn additive_inverse() {
        let x = &(&CoeffPoly::alpha() * &q()) + &CoeffPoly::from_ratio(3, 7);
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn substitute_negative_power() {
        let p = CoeffPoly::v_pow(-2);
        let two = Rational::from_integer(2.into());
        let got = p.substitute(&Assignment::new().set(Symbol::V, two)).unwrap();
        assert_eq!(got, CoeffPoly::from_ratio(1, 4));
    }

    #[test]
    fn substitute_zero_into_negative_power_fails() {
        let p = &CoeffPoly::v_pow(-1) + &CoeffPoly::one();
        let err = p.substitute(&Assignment::new().set(Symbol::V, Rational::zero())).unwrap_err();
        assert_eq!(err, ScalarError::DivisionByZero);
    }

    #[test]
    fn substitute_leaves_unassigned_symbols() {
        let p = &(&CoeffPoly::alpha() * &q()) + &CoeffPoly::eps();
        let got = p.substitute(&Assignment::q_to_one()).unwrap();
        assert_eq!(got, &CoeffPoly::alpha() + &CoeffPoly::eps());
    }

    #[test]
    fn rendering() {
        let p = &(&CoeffPoly::one() + &q()) + &CoeffPoly::q_pow(2);
        assert_eq!(p.to_string(), "1+q+q^2");
        let p = &CoeffPoly::v_pow(-1) - &(&CoeffPoly::v_pow(3) * &CoeffPoly::alpha());
        assert_eq!(p.to_string(), "q^(-1/2)-q^(3/2)*alpha");
        let p = &CoeffPoly::from_ratio(-2, 3) * &CoeffPoly::q_pow(-2);
        assert_eq!(p.to_string(), "-2/3*q^(-2)");
        assert_eq!(CoeffPoly::zero().to_string(), "0");
        let p = &CoeffPoly::central().pow(2) * &CoeffPoly::from_int(4);
        assert_eq!(p.to_string(), "4*c^2");
    }
}
