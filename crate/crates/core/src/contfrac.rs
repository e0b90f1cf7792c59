//! The ordered-tree continued fraction
//!
//! ```text
//!                 1
//! T = ---------------------
//!       1 -      w_1
//!            -------------
//!             1 -   w_2
//!                 --------
//!                  1 - ...
//! ```
//!
//! where `w_l` is the weight of a vertex at level `l`. With `w_l = v_l` it
//! counts ordered trees by level profile; the presets below specialise it to
//! the Catalan, area and increasing-pattern generating functions.

use std::fmt;
use std::str::FromStr;

use crate::series::{Monomial, TruncSeries};
use crate::trees::binomial;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LevelWeights {
    /// `w_l = z`.
    Catalan,
    /// `w_l = z q^C(l-1, 2)`: 132-avoiders by number of 123 patterns.
    Eq1,
    /// `w_l = z q^l`: trees by level sum (reversed Dyck path area).
    Eq2,
    /// `w_l = z q^C(l-1, k-1)`: 132-avoiders by increasing patterns of length k.
    GeneralK(u32),
    /// `w_l = v_l`.
    Multivariate,
    /// Explicit weights for levels `1..=len`; deeper levels weigh zero.
    Custom(Vec<Monomial>),
}

impl LevelWeights {
    pub fn general_k(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Weights("k must be at least 1".into()));
        }
        Ok(LevelWeights::GeneralK(k))
    }

    pub fn custom(weights: Vec<Monomial>) -> Result<Self> {
        if let Some((i, w)) = weights.iter().enumerate().find(|(_, w)| w.z_deg() == 0) {
            return Err(Error::Weights(format!(
                "weight {w} at level {} carries no z",
                i + 1
            )));
        }
        Ok(LevelWeights::Custom(weights))
    }

    /// Weight of a vertex at `level` (1-based); `None` means zero.
    pub fn weight(&self, level: usize) -> Option<Monomial> {
        assert!(level >= 1, "levels start at 1");
        let l = level as u64;
        let qpow = |e: u64| Some(Monomial::zq(1, e));
        match self {
            LevelWeights::Catalan => qpow(0),
            LevelWeights::Eq1 => qpow(binomial(l - 1, 2)),
            LevelWeights::Eq2 => qpow(l),
            LevelWeights::GeneralK(k) => qpow(binomial(l - 1, u64::from(*k) - 1)),
            LevelWeights::Multivariate => Some(Monomial::v(level)),
            LevelWeights::Custom(ws) => ws.get(level - 1).cloned(),
        }
    }
}

impl fmt::Display for LevelWeights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelWeights::Catalan => f.write_str("catalan"),
            LevelWeights::Eq1 => f.write_str("eq1"),
            LevelWeights::Eq2 => f.write_str("eq2"),
            LevelWeights::GeneralK(k) => write!(f, "k={k}"),
            LevelWeights::Multivariate => f.write_str("multivariate"),
            LevelWeights::Custom(ws) => {
                let parts: Vec<String> = ws.iter().map(Monomial::to_string).collect();
                write!(f, "custom[{}]", parts.join(", "))
            }
        }
    }
}

impl FromStr for LevelWeights {
    type Err = Error;

    /// `catalan`, `eq1`, `eq2`, `k=<int>` or `multivariate`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "catalan" => Ok(LevelWeights::Catalan),
            "eq1" => Ok(LevelWeights::Eq1),
            "eq2" => Ok(LevelWeights::Eq2),
            "multivariate" => Ok(LevelWeights::Multivariate),
            _ => match s.strip_prefix("k=") {
                Some(k) => {
                    let k = k
                        .parse::<u32>()
                        .map_err(|e| Error::Weights(format!("bad k in {s:?}: {e}")))?;
                    LevelWeights::general_k(k)
                }
                None => Err(Error::Weights(format!(
                    "unknown weights {s:?}; expected catalan, eq1, eq2, k=<int> or multivariate"
                ))),
            },
        }
    }
}

/// Evaluates the continued fraction bottom-up to the given depth.
///
/// The tail below `depth` is replaced by 1. Every weight carries a factor of
/// `z`, so any `depth >= order_z` is exact through `z^order_z`.
pub fn eval_cf(weights: &LevelWeights, depth: usize, order_z: u32) -> Result<TruncSeries> {
    if depth == 0 {
        return Err(Error::ZeroDepth);
    }
    let mut tail = TruncSeries::one(order_z);
    for level in (1..=depth).rev() {
        let numerator = match weights.weight(level) {
            Some(w) => TruncSeries::monomial(order_z, w, 1),
            None => TruncSeries::zero(order_z),
        };
        tail = numerator.mul(&tail)?.geom_inverse()?;
    }
    Ok(tail)
}

/// Evaluates at the default depth, `max(order_z, 1)`.
pub fn eval_cf_default(weights: &LevelWeights, order_z: u32) -> Result<TruncSeries> {
    eval_cf(weights, (order_z as usize).max(1), order_z)
}

/// True iff depths `order_z` and `order_z + 3` agree through `z^order_z`.
pub fn cf_stability_check(weights: &LevelWeights, order_z: u32) -> Result<bool> {
    let shallow = eval_cf_default(weights, order_z)?;
    let deep = eval_cf(weights, order_z as usize + 3, order_z)?;
    Ok(shallow == deep)
}

/// True iff the multivariate series satisfies `T(v1, v2, ...) =
/// 1 / (1 - v1 T(v2, v3, ...))` through `z^order_z`.
pub fn fixed_point_check(order_z: u32) -> Result<bool> {
    let t = eval_cf_default(&LevelWeights::Multivariate, order_z)?;
    let v1 = TruncSeries::monomial(order_z, Monomial::v(1), 1);
    let rhs = v1.mul(&t.shift_levels())?.geom_inverse()?;
    Ok(t == rhs)
}

/// Substitutes `v_l -> w_l` in a multivariate series.
pub fn specialize(multivariate: &TruncSeries, weights: &LevelWeights) -> TruncSeries {
    multivariate.substitute_levels(|l| weights.weight(l))
}
