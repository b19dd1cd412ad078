use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalars::{Assignment, CoeffPoly, ScalarError};

use super::algebra::{AlgebraSpec, Gen};
use super::rewrite::{accumulate, normalize};
use super::word::Word;
use super::AlgebraError;

/// A finite linear combination of words over one algebra.
///
/// Linear operations (`+`, `-`, scaling) keep words as they are; products and
/// [`NCPoly::normal_order`] produce the canonical form in which every stored
/// word is normal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCPoly {
    algebra: AlgebraSpec,
    terms: BTreeMap<Word, CoeffPoly>,
}

impl NCPoly {
    pub fn zero(algebra: AlgebraSpec) -> Self {
        NCPoly { algebra, terms: BTreeMap::new() }
    }

    pub fn one(algebra: AlgebraSpec) -> Self {
        Self::scalar(algebra, CoeffPoly::one())
    }

    pub fn scalar(algebra: AlgebraSpec, c: CoeffPoly) -> Self {
        Self::term(algebra, Word::empty(), c)
    }

    pub fn constant(algebra: AlgebraSpec, n: i64) -> Self {
        Self::scalar(algebra, CoeffPoly::from_int(n))
    }

    pub fn generator(algebra: AlgebraSpec, g: Gen) -> Self {
        Self::word(algebra, Word::letter(g))
    }

    pub fn word(algebra: AlgebraSpec, w: Word) -> Self {
        Self::term(algebra, w, CoeffPoly::one())
    }

    pub fn term(algebra: AlgebraSpec, w: Word, c: CoeffPoly) -> Self {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, w, c);
        NCPoly { algebra, terms }
    }

    /// Builds a polynomial from raw terms without reordering any word.
    pub fn from_terms<I: IntoIterator<Item = (Word, CoeffPoly)>>(algebra: AlgebraSpec, iter: I) -> Self {
        let mut terms = BTreeMap::new();
        for (w, c) in iter {
            accumulate(&mut terms, w, c);
        }
        NCPoly { algebra, terms }
    }

    pub fn algebra(&self) -> AlgebraSpec {
        self.algebra
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &CoeffPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Option<&CoeffPoly> {
        self.terms.get(w)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff every stored word is normal.
    pub fn is_canonical(&self) -> bool {
        self.terms.keys().all(Word::is_normal)
    }

    /// Maximal total degree in the lowering generators over stored words.
    pub fn max_lowering_degree(&self) -> u32 {
        let alg = self.algebra;
        self.terms.keys().map(|w| w.count(|g| alg.is_lowering(g))).max().unwrap_or(0)
    }

    fn check_same(&self, other: &NCPoly) -> Result<(), AlgebraError> {
        if self.algebra != other.algebra {
            return Err(AlgebraError::Mismatch { left: self.algebra.to_string(), right: other.algebra.to_string() });
        }
        Ok(())
    }

    /// Coefficientwise sum without reordering.
    pub fn add_raw(&self, other: &NCPoly) -> Result<NCPoly, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            accumulate(&mut out.terms, w.clone(), c.clone());
        }
        Ok(out)
    }

    /// Canonical sum.
    pub fn nc_add(&self, other: &NCPoly) -> Result<NCPoly, AlgebraError> {
        Ok(self.add_raw(other)?.normal_order())
    }

    pub fn nc_sub(&self, other: &NCPoly) -> Result<NCPoly, AlgebraError> {
        Ok(self.add_raw(&other.neg_ref())?.normal_order())
    }

    /// Product with words concatenated but not reordered.
    pub fn mul_raw(&self, other: &NCPoly) -> Result<NCPoly, AlgebraError> {
        self.check_same(other)?;
        let mut terms = BTreeMap::new();
        for (u, cu) in &self.terms {
            for (w, cw) in &other.terms {
                accumulate(&mut terms, u.concat(w), cu * cw);
            }
        }
        Ok(NCPoly { algebra: self.algebra, terms })
    }

    /// Canonical product.
    pub fn nc_mul(&self, other: &NCPoly) -> Result<NCPoly, AlgebraError> {
        self.check_same(other)?;
        let products =
            self.terms.iter().flat_map(|(u, cu)| other.terms.iter().map(move |(w, cw)| (u.concat(w), cu * cw)));
        Ok(NCPoly { algebra: self.algebra, terms: normalize(&self.algebra, products) })
    }

    /// `self^k` by repeated canonical multiplication; `self^0 = 1`.
    pub fn nc_pow(&self, k: u32) -> NCPoly {
        let mut out = NCPoly::one(self.algebra);
        for _ in 0..k {
            out = out.nc_mul(self).expect("same algebra");
        }
        out
    }

    pub fn normal_order(&self) -> NCPoly {
        if self.is_canonical() {
            return self.clone();
        }
        NCPoly {
            algebra: self.algebra,
            terms: normalize(&self.algebra, self.terms.iter().map(|(w, c)| (w.clone(), c.clone()))),
        }
    }

    /// True iff `self - other` normal-orders to zero.
    pub fn nc_equal(&self, other: &NCPoly) -> Result<bool, AlgebraError> {
        Ok(self.nc_sub(other)?.is_zero())
    }

    /// The anti-automorphism reversing words and swapping `a_i <-> b_i`.
    /// Coefficients are fixed. The result is not reordered.
    pub fn adjoint(&self) -> Result<NCPoly, AlgebraError> {
        let alg = self.algebra;
        if !alg.supports_adjoint() {
            return Err(AlgebraError::AdjointUnsupported(alg.to_string()));
        }
        let swap = |g: Gen| alg.adjoint_gen(g).expect("adjoint supported");
        Ok(NCPoly::from_terms(alg, self.terms.iter().map(|(w, c)| (w.reverse_map(swap), c.clone()))))
    }

    pub fn scale(&self, c: &CoeffPoly) -> NCPoly {
        NCPoly::from_terms(self.algebra, self.terms.iter().map(|(w, k)| (w.clone(), k * c)))
    }

    fn neg_ref(&self) -> NCPoly {
        NCPoly { algebra: self.algebra, terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }

    /// Substitutes values into every coefficient. Words are untouched.
    pub fn substitute(&self, assign: &Assignment) -> Result<NCPoly, ScalarError> {
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            accumulate(&mut terms, w.clone(), c.substitute(assign)?);
        }
        Ok(NCPoly { algebra: self.algebra, terms })
    }

    /// Reinterprets the same words in another algebra with the same generator
    /// layout (for instance `q -> classical(1)` after substituting `q = 1`).
    pub fn relabel(&self, target: AlgebraSpec) -> Result<NCPoly, AlgebraError> {
        if target.num_generators() != self.algebra.num_generators() {
            return Err(AlgebraError::Mismatch { left: self.algebra.to_string(), right: target.to_string() });
        }
        Ok(NCPoly { algebra: target, terms: self.terms.clone() })
    }
}

impl Add<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    /// Raw sum; panics on algebra mismatch.
    fn add(self, rhs: &NCPoly) -> NCPoly {
        self.add_raw(rhs).expect("algebra mismatch in NCPoly addition")
    }
}

impl Sub<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        self.add_raw(&rhs.neg_ref()).expect("algebra mismatch in NCPoly subtraction")
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.neg_ref()
    }
}

impl Mul<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    /// Canonical product; panics on algebra mismatch.
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        self.nc_mul(rhs).expect("algebra mismatch in NCPoly product")
    }
}
