use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::ncalg::{reset_rewrite_steps, rewrite_steps, NCPoly};

use super::{build, eps_residual_shape, IdentityError, IdentityId, Params};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
}

/// Status reconciled with the tag's expectation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    ExpectedFail,
}

impl Outcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::ExpectedFail => "expected-fail",
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationResult {
    pub id: IdentityId,
    pub params: Params,
    pub status: Status,
    /// Normal form of `lhs - rhs`.
    pub residual: NCPoly,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub rewrite_steps: u64,
    pub elapsed: Duration,
}

impl VerificationResult {
    pub fn outcome(&self) -> Outcome {
        if !self.id.expects_failure() {
            return match self.status {
                Status::Pass => Outcome::Pass,
                Status::Fail => Outcome::Fail,
            };
        }
        match eps_residual_shape(&self.residual, self.params.n.unwrap_or(0)) {
            Some(_) => Outcome::ExpectedFail,
            None => Outcome::Fail,
        }
    }
}

/// Normal-orders both sides and records the residual.
pub fn verify(id: IdentityId, params: &Params) -> Result<VerificationResult, IdentityError> {
    let ident = build(id, params)?;
    let start = Instant::now();
    reset_rewrite_steps();
    let lhs = ident.lhs.expand();
    let rhs = ident.rhs.expand();
    let residual = lhs.nc_sub(&rhs)?;
    let steps = rewrite_steps();
    Ok(VerificationResult {
        id,
        params: *params,
        status: if residual.is_zero() { Status::Pass } else { Status::Fail },
        lhs_terms: lhs.len(),
        rhs_terms: rhs.len(),
        residual,
        rewrite_steps: steps,
        elapsed: start.elapsed(),
    })
}

/// Verifies every relation of a bundled tag (E9 or E25).
pub fn verify_embedding(id: IdentityId) -> Result<Vec<VerificationResult>, IdentityError> {
    let relations = id.signature().relations;
    (1..=relations)
        .map(|r| {
            let params = if relations > 1 { Params::none().with_r(r) } else { Params::none() };
            verify(id, &params)
        })
        .collect()
}

/// All parameter assignments of the suite, in tag order then parameter
/// order.
pub fn suite_grid(max_n: u32, max_p: u32, max_m: u32) -> Vec<(IdentityId, Params)> {
    let mut out = Vec::new();
    for &id in IdentityId::ALL {
        let sig = id.signature();
        let mut grid = vec![Params::none()];
        let expand = |grid: Vec<Params>, values: Vec<u32>, set: fn(Params, u32) -> Params| -> Vec<Params> {
            grid.into_iter().flat_map(|p| values.iter().map(move |&v| set(p, v))).collect()
        };
        if sig.p {
            grid = expand(grid, (1..=max_p).collect(), Params::with_p);
        }
        if sig.l {
            grid = grid.into_iter().flat_map(|p| (1..=p.p.unwrap_or(1)).map(move |l| p.with_l(l))).collect();
        }
        if sig.m {
            grid = expand(grid, (1..=max_m).collect(), Params::with_m);
        }
        if sig.n {
            if id.min_n() > max_n {
                continue;
            }
            grid = expand(grid, (id.min_n()..=max_n).collect(), Params::with_n);
        }
        if sig.relations > 1 {
            grid = expand(grid, (1..=sig.relations).collect(), Params::with_r);
        }
        grid.sort();
        out.extend(grid.into_iter().map(|p| (id, p)));
    }
    out
}

/// Runs `verify` over a grid in parallel; results keep the grid order.
pub fn verify_suite(grid: &[(IdentityId, Params)]) -> Vec<Result<VerificationResult, IdentityError>> {
    grid.par_iter().map(|(id, p)| verify(*id, p)).collect()
}
