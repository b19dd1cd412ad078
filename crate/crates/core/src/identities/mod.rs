//! Builders for the ordering identities and the verification driver.
//!
//! Every identity is a pair of [`Side`]s: unevaluated sums of products of
//! small operator polynomials. Expanding a side normal-orders it through the
//! rewrite engine; applying it to a realization walks the factors directly,
//! which keeps the two checks independent.

mod builders;
mod checks;
mod side;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use builders::{bb_bootstrap, build, derive_bb_factor, Identity, BB_BOOTSTRAP_MAX_N};
pub use checks::{
    degeneration_check, degeneration_target, duality_check, eps_residual_shape, oracle_check, realization_for,
    DualPair, OracleVerdict,
};
pub use side::Side;
pub use verify::{suite_grid, verify, verify_embedding, verify_suite, Outcome, Status, VerificationResult};

use crate::ncalg::AlgebraError;
use crate::realizations::RealizationError;
use crate::scalars::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdentityError {
    #[error("unknown identity tag '{0}'")]
    UnknownTag(String),
    #[error("{tag} requires parameter '{param}'")]
    MissingParam { tag: IdentityId, param: &'static str },
    #[error("{tag} does not take parameter '{param}'")]
    UnexpectedParam { tag: IdentityId, param: &'static str },
    #[error("{tag}: parameter {param}={value} out of range ({range})")]
    OutOfRange { tag: IdentityId, param: &'static str, value: u32, range: String },
    #[error("BB builder disabled: {0}")]
    BootstrapFailed(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Realization(#[from] RealizationError),
}

macro_rules! identity_ids {
    ($($v:ident),* $(,)?) => {
        /// Stable identity tags, in report order.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
        pub enum IdentityId { $($v),* }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$v),*];

            pub fn as_str(&self) -> &'static str {
                match self { $(IdentityId::$v => stringify!($v)),* }
            }
        }

        impl FromStr for IdentityId {
            type Err = IdentityError;
            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $(stringify!($v) => Ok(IdentityId::$v),)*
                    _ => Err(IdentityError::UnknownTag(s.to_string())),
                }
            }
        }
    };
}

identity_ids!(
    E2, E5, E7, E8, E9, E10, E11, E13, E13Q, F3ALT, F3BASIC, F5BASIC, E15, E16, E17, E19, E22, E23, E25, E26, E28, E30,
    E31, E32, E33, BB, E2EPS,
);

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which parameters a tag takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub n: bool,
    pub p: bool,
    pub l: bool,
    pub m: bool,
    /// Number of relations selected by `r` (1 means `r` is not taken).
    pub relations: u32,
}

impl IdentityId {
    pub fn signature(&self) -> Signature {
        use IdentityId::*;
        let base = Signature { n: true, p: false, l: false, m: false, relations: 1 };
        match self {
            E9 | E25 => Signature { n: false, relations: 3, ..base },
            E31 => Signature { n: false, ..base },
            F3ALT => Signature { m: true, ..base },
            F3BASIC | F5BASIC | E22 => Signature { relations: 2, ..base },
            E15 => Signature { p: true, ..base },
            E16 | E17 => Signature { p: true, l: true, ..base },
            _ => base,
        }
    }

    /// Tags whose residual is expected to be nonzero.
    pub fn expects_failure(&self) -> bool {
        matches!(self, IdentityId::E2EPS)
    }

    /// Smallest admissible `n`.
    pub fn min_n(&self) -> u32 {
        match self {
            IdentityId::E2EPS => 1,
            _ => 0,
        }
    }
}

/// Parameter assignment for one identity instance.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    /// Relation index for tags that bundle several relations.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
}

impl Params {
    pub fn none() -> Self {
        Params::default()
    }

    pub fn n(n: u32) -> Self {
        Params { n: Some(n), ..Params::default() }
    }

    pub fn with_n(mut self, n: u32) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_p(mut self, p: u32) -> Self {
        self.p = Some(p);
        self
    }

    pub fn with_l(mut self, l: u32) -> Self {
        self.l = Some(l);
        self
    }

    pub fn with_m(mut self, m: u32) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_r(mut self, r: u32) -> Self {
        self.r = Some(r);
        self
    }

    /// Checks the assignment against a tag's signature and ranges.
    pub fn validate(&self, tag: IdentityId) -> Result<(), IdentityError> {
        let sig = tag.signature();
        let check = |param: &'static str, wanted: bool, value: Option<u32>| match (wanted, value) {
            (true, None) => Err(IdentityError::MissingParam { tag, param }),
            (false, Some(_)) => Err(IdentityError::UnexpectedParam { tag, param }),
            _ => Ok(()),
        };
        check("n", sig.n, self.n)?;
        check("p", sig.p, self.p)?;
        check("l", sig.l, self.l)?;
        check("m", sig.m, self.m)?;
        check("r", sig.relations > 1, self.r)?;
        let range = |param: &'static str, value: u32, lo: u32, hi: u32| {
            if value < lo || value > hi {
                Err(IdentityError::OutOfRange { tag, param, value, range: format!("{lo}..={hi}") })
            } else {
                Ok(())
            }
        };
        if let Some(n) = self.n {
            range("n", n, tag.min_n(), u32::MAX)?;
        }
        if let Some(p) = self.p {
            range("p", p, 1, crate::ncalg::MAX_PAIRS as u32)?;
        }
        if let (Some(l), Some(p)) = (self.l, self.p) {
            range("l", l, 1, p)?;
        }
        if let Some(m) = self.m {
            range("m", m, 1, u32::MAX)?;
        }
        if let Some(r) = self.r {
            range("r", r, 1, sig.relations)?;
        }
        Ok(())
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [("p", self.p), ("l", self.l), ("m", self.m), ("n", self.n), ("r", self.r)]
            .iter()
            .filter_map(|(k, v)| v.map(|v| format!("{k}={v}")))
            .collect();
        if parts.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_round_trip_through_strings() {
        for &id in IdentityId::ALL {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
        }
        assert_eq!(IdentityId::ALL.len(), 27);
        assert!(matches!("E99".parse::<IdentityId>(), Err(IdentityError::UnknownTag(_))));
    }

    #[test]
    fn parameter_validation() {
        assert!(Params::n(2).validate(IdentityId::E2).is_ok());
        assert!(matches!(Params::none().validate(IdentityId::E2), Err(IdentityError::MissingParam { param: "n", .. })));
        assert!(matches!(
            Params::n(2).with_p(1).validate(IdentityId::E10),
            Err(IdentityError::UnexpectedParam { param: "p", .. })
        ));
        assert!(matches!(
            Params::n(1).with_p(2).with_l(3).validate(IdentityId::E16),
            Err(IdentityError::OutOfRange { param: "l", .. })
        ));
        assert!(matches!(Params::n(0).validate(IdentityId::E2EPS), Err(IdentityError::OutOfRange { param: "n", .. })));
        assert!(Params::none().with_r(3).validate(IdentityId::E9).is_ok());
        assert!(Params::none().with_r(4).validate(IdentityId::E9).is_err());
        assert!(Params::none().validate(IdentityId::E31).is_ok());
    }

    #[test]
    fn params_display() {
        assert_eq!(Params::n(3).with_p(2).with_l(1).to_string(), "p=2 l=1 n=3");
        assert_eq!(Params::none().to_string(), "-");
    }
}
