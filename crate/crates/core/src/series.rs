//! Truncated exact polynomials in `z`, `q` and the level indeterminates
//! `v1, v2, ...`.
//!
//! A [`TruncSeries`] keeps every term whose `z`-degree is at most its
//! truncation order. Terms beyond the order are *unknown*, not zero, which is
//! why [`TruncSeries::coeff`] refuses to answer for them.
//!
//! In multivariate mode each level indeterminate `v_l` stands for one vertex
//! at level `l` and therefore also carries one power of `z`; a monomial
//! `v1^2*v2` is stored with `z_deg = 3`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::{Error, Result};

/// Exponent vector `z^z_deg * q^q_deg * v1^v[0] * v2^v[1] * ...`.
///
/// `v_degs` never has trailing zeros, so equal monomials compare equal
/// regardless of how many levels were in play when they were built. The
/// derived ordering is lexicographic in `(z_deg, q_deg, v_degs)`; dropping
/// trailing zeros does not change it.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    z_deg: u32,
    q_deg: u64,
    v_degs: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn zq(z_deg: u32, q_deg: u64) -> Self {
        Monomial {
            z_deg,
            q_deg,
            v_degs: Vec::new(),
        }
    }

    /// The indeterminate `v_level` (levels start at 1). Carries one `z`.
    pub fn v(level: usize) -> Self {
        assert!(level >= 1, "levels start at 1");
        let mut v_degs = vec![0; level];
        v_degs[level - 1] = 1;
        Monomial {
            z_deg: 1,
            q_deg: 0,
            v_degs,
        }
    }

    /// Builds `v1^e1 * v2^e2 * ...` with the matching power of `z`.
    pub fn from_level_profile(counts: &[u32]) -> Self {
        let mut m = Monomial {
            z_deg: counts.iter().sum(),
            q_deg: 0,
            v_degs: counts.to_vec(),
        };
        m.trim();
        m
    }

    pub fn z_deg(&self) -> u32 {
        self.z_deg
    }

    pub fn q_deg(&self) -> u64 {
        self.q_deg
    }

    pub fn v_degs(&self) -> &[u32] {
        &self.v_degs
    }

    pub fn is_one(&self) -> bool {
        self.z_deg == 0 && self.q_deg == 0 && self.v_degs.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.v_degs.len().max(other.v_degs.len());
        let v_degs = (0..len)
            .map(|i| {
                self.v_degs.get(i).copied().unwrap_or(0) + other.v_degs.get(i).copied().unwrap_or(0)
            })
            .collect();
        Monomial {
            z_deg: self.z_deg + other.z_deg,
            q_deg: self.q_deg + other.q_deg,
            v_degs,
        }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let mut m = Monomial {
            z_deg: self.z_deg * e,
            q_deg: self.q_deg * u64::from(e),
            v_degs: self.v_degs.iter().map(|d| d * e).collect(),
        };
        m.trim();
        m
    }

    /// `v_l -> v_{l+1}` for every level.
    pub fn shift_levels(&self) -> Monomial {
        if self.v_degs.is_empty() {
            return self.clone();
        }
        let mut v_degs = Vec::with_capacity(self.v_degs.len() + 1);
        v_degs.push(0);
        v_degs.extend_from_slice(&self.v_degs);
        Monomial {
            z_deg: self.z_deg,
            q_deg: self.q_deg,
            v_degs,
        }
    }

    fn trim(&mut self) {
        while self.v_degs.last() == Some(&0) {
            self.v_degs.pop();
        }
    }

    /// Writes the monomial in the flat canonical form, e.g. `z^3*q^1*v1^2`.
    /// Returns false (and writes nothing) for the unit monomial.
    fn write_explicit(&self, out: &mut String) -> bool {
        let mut factors = Vec::new();
        if self.z_deg > 0 {
            factors.push(format!("z^{}", self.z_deg));
        }
        if self.q_deg > 0 {
            factors.push(format!("q^{}", self.q_deg));
        }
        for (i, d) in self.v_degs.iter().enumerate() {
            if *d > 0 {
                factors.push(format!("v{}^{}", i + 1, d));
            }
        }
        out.push_str(&factors.join("*"));
        !factors.is_empty()
    }

    /// Compact factors, e.g. `z^2*q`, `v1^2*v2`. The `z` carried by level
    /// indeterminates is left implicit; only the free power of `z` prints.
    fn compact_factors(&self, with_z: bool) -> Vec<String> {
        fn pow(base: &str, e: u64) -> String {
            if e == 1 {
                base.to_string()
            } else {
                format!("{base}^{e}")
            }
        }
        let mut factors = Vec::new();
        let free_z = self.z_deg - self.v_degs.iter().sum::<u32>();
        if with_z && free_z > 0 {
            factors.push(pow("z", u64::from(free_z)));
        }
        if self.q_deg > 0 {
            factors.push(pow("q", self.q_deg));
        }
        for (i, d) in self.v_degs.iter().enumerate() {
            if *d > 0 {
                factors.push(pow(&format!("v{}", i + 1), u64::from(*d)));
            }
        }
        factors
    }
}

/// One record of the JSON rendering. Coefficients are decimal strings since
/// they outgrow 64 bits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermRecord {
    pub z: u32,
    pub q: u64,
    pub v: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    order_z: u32,
    terms: BTreeMap<Monomial, BigInt>,
}

impl TruncSeries {
    pub fn zero(order_z: u32) -> Self {
        TruncSeries {
            order_z,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order_z: u32) -> Self {
        Self::monomial(order_z, Monomial::one(), BigInt::one())
    }

    /// A single term; dropped if it lies beyond the truncation order or the
    /// coefficient is zero.
    pub fn monomial(order_z: u32, m: Monomial, coeff: impl Into<BigInt>) -> Self {
        let mut s = Self::zero(order_z);
        s.add_term(m, coeff.into());
        s
    }

    /// Collects terms, summing repeated monomials.
    pub fn from_terms<I, C>(order_z: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero(order_z);
        for (m, c) in terms {
            s.add_term(m, c.into());
        }
        s
    }

    pub fn order_z(&self) -> u32 {
        self.order_z
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if m.z_deg > self.order_z || c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_order(&self, other: &TruncSeries) -> Result<()> {
        if self.order_z != other.order_z {
            return Err(Error::OrderMismatch {
                left: self.order_z,
                right: other.order_z,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries {
            order_z: self.order_z,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_order(other)?;
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.z_deg + mb.z_deg > self.order_z {
                    continue;
                }
                *acc.entry(ma.mul(mb)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(TruncSeries {
            order_z: self.order_z,
            terms: acc,
        })
    }

    /// `1 / (1 - self)`, expanded as `1 + s + s^2 + ...` through the
    /// truncation order.
    ///
    /// Requires every term to carry at least one `z`; otherwise the geometric
    /// expansion never terminates under truncation.
    pub fn geom_inverse(&self) -> Result<TruncSeries> {
        if let Some((m, _)) = self.terms.iter().find(|(m, _)| m.z_deg == 0) {
            return Err(Error::NonZeroConstant {
                monomial: m.to_string(),
            });
        }
        let order = self.order_z as usize;
        let by_deg = self.split_by_z();
        // r_d = sum_{j=1..d} s_j * r_{d-j}, r_0 = 1
        let mut result: Vec<BTreeMap<Monomial, BigInt>> = Vec::with_capacity(order + 1);
        result.push(BTreeMap::from([(Monomial::one(), BigInt::one())]));
        for d in 1..=order {
            let mut part: BTreeMap<Monomial, BigInt> = BTreeMap::new();
            for j in 1..=d {
                for (ma, ca) in &by_deg[j] {
                    for (mb, cb) in &result[d - j] {
                        *part.entry(ma.mul(mb)).or_insert_with(BigInt::zero) += *ca * cb;
                    }
                }
            }
            part.retain(|_, c| !c.is_zero());
            result.push(part);
        }
        Ok(TruncSeries {
            order_z: self.order_z,
            terms: result.into_iter().flatten().collect(),
        })
    }

    fn split_by_z(&self) -> Vec<Vec<(&Monomial, &BigInt)>> {
        let mut parts = vec![Vec::new(); self.order_z as usize + 1];
        for (m, c) in &self.terms {
            parts[m.z_deg as usize].push((m, c));
        }
        parts
    }

    /// Exact coefficient of `m`. Asking past the truncation order is an
    /// error: that coefficient is unknown rather than zero.
    pub fn coeff(&self, m: &Monomial) -> Result<BigInt> {
        if m.z_deg > self.order_z {
            return Err(Error::OutOfTruncation {
                z_deg: m.z_deg,
                order_z: self.order_z,
            });
        }
        Ok(self.terms.get(m).cloned().unwrap_or_else(BigInt::zero))
    }

    /// Coefficient of `z^n` as a polynomial in `q`: `(q exponent, coeff)`
    /// pairs in increasing exponent order. Multivariate terms are included
    /// by their `q` exponent only.
    pub fn z_coeff_q_poly(&self, n: u32) -> Result<BTreeMap<u64, BigInt>> {
        if n > self.order_z {
            return Err(Error::OutOfTruncation {
                z_deg: n,
                order_z: self.order_z,
            });
        }
        let mut poly = BTreeMap::new();
        for (m, c) in self.terms.iter().filter(|(m, _)| m.z_deg == n) {
            *poly.entry(m.q_deg).or_insert_with(BigInt::zero) += c;
        }
        poly.retain(|_, c: &mut BigInt| !c.is_zero());
        Ok(poly)
    }

    /// Drops every term above `order_z`. Lowering only; the truncation
    /// cannot be recovered upwards.
    pub fn truncate(&self, order_z: u32) -> TruncSeries {
        assert!(order_z <= self.order_z, "cannot raise a truncation order");
        TruncSeries {
            order_z,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.z_deg <= order_z)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `T(v1, v2, ...) -> T(v2, v3, ...)`.
    pub fn shift_levels(&self) -> TruncSeries {
        TruncSeries {
            order_z: self.order_z,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.shift_levels(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes a monomial for every level indeterminate `v_l`.
    ///
    /// The `z` carried by each `v_l` is replaced together with it, so the
    /// substitute supplies its own power of `z`. `None` substitutes zero.
    pub fn substitute_levels<F>(&self, weight: F) -> TruncSeries
    where
        F: Fn(usize) -> Option<Monomial>,
    {
        let mut out = TruncSeries::zero(self.order_z);
        'terms: for (m, c) in &self.terms {
            let carried: u32 = m.v_degs.iter().sum();
            let mut image = Monomial::zq(m.z_deg - carried, m.q_deg);
            for (i, &d) in m.v_degs.iter().enumerate() {
                if d == 0 {
                    continue;
                }
                match weight(i + 1) {
                    Some(w) => image = image.mul(&w.pow(d)),
                    None => continue 'terms,
                }
            }
            out.add_term(image, c.clone());
        }
        out
    }

    /// Flat canonical rendering: `1 + 4*z^3 + 1*z^3*q^1`.
    pub fn to_canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            } else if c.is_negative() {
                out.push('-');
            }
            let abs = c.abs();
            let mut mono = String::new();
            if m.write_explicit(&mut mono) {
                out.push_str(&format!("{abs}*{mono}"));
            } else {
                out.push_str(&abs.to_string());
            }
        }
        out
    }

    /// JSON-ready records, one per term, in canonical order.
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(m, c)| TermRecord {
                z: m.z_deg,
                q: m.q_deg,
                v: m.v_degs.clone(),
                coeff: c.to_string(),
            })
            .collect()
    }
}

fn push_term(out: &mut String, first: bool, c: &BigInt, factors: &[String]) {
    if !first {
        out.push_str(if c.is_negative() { " - " } else { " + " });
    } else if c.is_negative() {
        out.push('-');
    }
    let abs = c.abs();
    if factors.is_empty() {
        out.push_str(&abs.to_string());
    } else {
        if !abs.is_one() {
            out.push_str(&format!("{abs}*"));
        }
        out.push_str(&factors.join("*"));
    }
}

/// Human-oriented rendering, grouped by power of `z`:
/// `1 + z + 2*z^2 + z^3*(4 + q)`. Multivariate terms print their level
/// indeterminates directly since the `z` is implied: `1 + v1 + v1*v2 + v1^2`.
impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        let mut first = true;
        for part in self.split_by_z() {
            if part.is_empty() {
                continue;
            }
            let m0 = part[0].0;
            let has_levels = part.iter().any(|(m, _)| !m.v_degs.is_empty());
            if m0.z_deg == 0 || has_levels || part.len() == 1 {
                for (m, c) in part {
                    push_term(&mut out, first, c, &m.compact_factors(true));
                    first = false;
                }
            } else {
                let z = Monomial::zq(m0.z_deg, 0).compact_factors(true).join("");
                let mut inner = String::new();
                for (i, (m, c)) in part.iter().enumerate() {
                    push_term(&mut inner, i == 0, c, &m.compact_factors(false));
                }
                if !first {
                    out.push_str(" + ");
                }
                out.push_str(&format!("{z}*({inner})"));
                first = false;
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = self.compact_factors(true);
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}
