use crate::ncalg::{AlgebraError, AlgebraSpec, NCPoly};
use crate::realizations::{self, ModulePoly, Realization, RealizationError};
use crate::scalars::{Assignment, CoeffPoly, ScalarError};

/// One side of an identity: a sum of products of raw operator polynomials.
///
/// The product structure is kept so that realizations can act factor by
/// factor without going through the rewrite engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side {
    algebra: AlgebraSpec,
    products: Vec<Vec<NCPoly>>,
}

impl Side {
    pub fn zero(algebra: AlgebraSpec) -> Self {
        Side { algebra, products: Vec::new() }
    }

    pub fn product(algebra: AlgebraSpec, factors: Vec<NCPoly>) -> Self {
        debug_assert!(factors.iter().all(|f| f.algebra() == algebra));
        Side { algebra, products: vec![factors] }
    }

    pub fn poly(p: NCPoly) -> Self {
        Side::product(p.algebra(), vec![p])
    }

    /// `x^k` as `k` explicit factors.
    pub fn power(x: &NCPoly, k: u32) -> Self {
        Side::product(x.algebra(), vec![x.clone(); k as usize])
    }

    pub fn algebra(&self) -> AlgebraSpec {
        self.algebra
    }

    pub fn products(&self) -> &[Vec<NCPoly>] {
        &self.products
    }

    pub fn plus(mut self, other: Side) -> Side {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch in Side::plus");
        self.products.extend(other.products);
        self
    }

    pub fn minus(self, other: Side) -> Side {
        self.plus(other.scaled(&CoeffPoly::from_int(-1)))
    }

    /// Multiplies every product by a scalar (prepended as a factor).
    pub fn scaled(self, c: &CoeffPoly) -> Side {
        let alg = self.algebra;
        let products = self
            .products
            .into_iter()
            .map(|mut factors| {
                factors.insert(0, NCPoly::scalar(alg, c.clone()));
                factors
            })
            .collect();
        Side { algebra: alg, products }
    }

    /// Normal-ordered value of the side.
    pub fn expand(&self) -> NCPoly {
        let mut total = NCPoly::zero(self.algebra);
        for factors in &self.products {
            let mut acc = NCPoly::one(self.algebra);
            for f in factors {
                acc = acc.nc_mul(f).expect("side factors share the algebra");
                if acc.is_zero() {
                    break;
                }
            }
            total = total.add_raw(&acc).expect("same algebra");
        }
        total
    }

    /// Star image: factor order reversed, each factor mapped by the adjoint.
    pub fn adjoint(&self) -> Result<Side, AlgebraError> {
        let mut products = Vec::with_capacity(self.products.len());
        for factors in &self.products {
            let mut mapped = factors.iter().map(NCPoly::adjoint).collect::<Result<Vec<_>, _>>()?;
            mapped.reverse();
            products.push(mapped);
        }
        Ok(Side { algebra: self.algebra, products })
    }

    /// Substitutes into every factor's coefficients and moves the side to
    /// `target`, which must share the generator layout.
    pub fn specialize(&self, assign: &Assignment, target: AlgebraSpec) -> Result<Side, SpecializeError> {
        let mut products = Vec::with_capacity(self.products.len());
        for factors in &self.products {
            let mut mapped = Vec::with_capacity(factors.len());
            for f in factors {
                mapped.push(f.substitute(assign)?.relabel(target)?);
            }
            products.push(mapped);
        }
        Ok(Side { algebra: target, products })
    }

    pub fn apply(&self, v: &ModulePoly, r: Realization) -> Result<ModulePoly, RealizationError> {
        realizations::apply_sum_of_products(&self.products, v, r)
    }

    /// Lowering-degree bound computed from the raw factors.
    pub fn lowering_bound(&self) -> u32 {
        realizations::products_lowering_bound(&self.products)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecializeError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl From<SpecializeError> for super::IdentityError {
    fn from(e: SpecializeError) -> Self {
        match e {
            SpecializeError::Scalar(s) => s.into(),
            SpecializeError::Algebra(a) => a.into(),
        }
    }
}
