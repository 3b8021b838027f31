//! Exact truncated q-series and eta-quotient expansion.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Coefficients `c_0..c_N` of a formal power series in `q`, exact up to `q^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedIntSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedIntSeries {
    pub fn zero(truncation: usize) -> Self {
        TruncatedIntSeries {
            coeffs: vec![BigInt::zero(); truncation + 1],
        }
    }

    pub fn one(truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Takes `coeffs` as `c_0..c_N`; an empty vector is rejected.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("a truncated series needs at least c_0".into()));
        }
        Ok(TruncatedIntSeries { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&BigInt> {
        self.coeffs.get(i)
    }

    /// Coefficient at `i` as `u64`; panics if it is negative or too large.
    pub fn coeff_u64(&self, i: usize) -> u64 {
        self.coeffs[i].to_u64().expect("coefficient does not fit in u64")
    }

    pub fn truncate(&self, truncation: usize) -> Self {
        let n = truncation.min(self.truncation());
        TruncatedIntSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    /// Multiplies by `q^k`, keeping the truncation.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.truncation());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k > self.truncation() {
                break;
            }
            out.coeffs[i + k] = c.clone();
        }
        out
    }

    /// Substitutes `q -> q^m`, keeping the truncation.
    pub fn dilate(&self, m: usize) -> Self {
        assert!(m >= 1);
        let mut out = Self::zero(self.truncation());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * m > self.truncation() {
                break;
            }
            out.coeffs[i * m] = c.clone();
        }
        out
    }

    fn nonzero_terms(&self) -> Vec<(usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Multiplicative inverse; needs `c_0 = +-1`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let sign = if c0.is_one() {
            BigInt::one()
        } else if *c0 == -BigInt::one() {
            -BigInt::one()
        } else {
            return Err(Error::NotUnitLeading);
        };
        let n = self.truncation();
        let terms: Vec<(usize, &BigInt)> = self.nonzero_terms().into_iter().filter(|(i, _)| *i > 0).collect();
        let mut out = Self::zero(n);
        out.coeffs[0] = sign.clone();
        for k in 1..=n {
            let mut s = BigInt::zero();
            for &(i, c) in &terms {
                if i > k {
                    break;
                }
                s += c * &out.coeffs[k - i];
            }
            out.coeffs[k] = -(s * &sign);
        }
        Ok(out)
    }

    /// Integer power; negative exponents go through [`Self::inverse`].
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.truncation());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }
}

impl Add for &TruncatedIntSeries {
    type Output = TruncatedIntSeries;

    fn add(self, rhs: Self) -> TruncatedIntSeries {
        let n = self.truncation().min(rhs.truncation());
        TruncatedIntSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &TruncatedIntSeries {
    type Output = TruncatedIntSeries;

    fn sub(self, rhs: Self) -> TruncatedIntSeries {
        let n = self.truncation().min(rhs.truncation());
        TruncatedIntSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Neg for &TruncatedIntSeries {
    type Output = TruncatedIntSeries;

    fn neg(self) -> TruncatedIntSeries {
        TruncatedIntSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedIntSeries {
    type Output = TruncatedIntSeries;

    fn mul(self, rhs: Self) -> TruncatedIntSeries {
        let n = self.truncation().min(rhs.truncation());
        let (a, b) = (self.nonzero_terms(), rhs.nonzero_terms());
        let (sparse, dense) = if a.len() <= b.len() { (a, rhs) } else { (b, self) };
        let mut out = TruncatedIntSeries::zero(n);
        for (i, c) in sparse {
            if i > n {
                break;
            }
            for j in 0..=n - i {
                let d = &dense.coeffs[j];
                if !d.is_zero() {
                    out.coeffs[i + j] += c * d;
                }
            }
        }
        out
    }
}

/// `prod_{k>=1} (1 - q^{mk})` up to `q^N`, from the pentagonal number theorem.
pub fn eta_factor_series(m: u64, truncation: usize) -> TruncatedIntSeries {
    assert!(m >= 1, "eta multiplier must be positive");
    let mut s = TruncatedIntSeries::zero(truncation);
    s.coeffs[0] = BigInt::one();
    let n = truncation as u64;
    for j in 1u64.. {
        let sign = if j % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        let (p1, p2) = (j * (3 * j - 1) / 2, j * (3 * j + 1) / 2);
        if p1 * m > n {
            break;
        }
        s.coeffs[(p1 * m) as usize] = sign.clone();
        if p2 * m <= n {
            s.coeffs[(p2 * m) as usize] = sign;
        }
    }
    s
}

/// A finite product `prod_m eta(m z)^{a_m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaQuotient {
    factors: BTreeMap<u64, i64>,
    offset24: i64,
}

impl EtaQuotient {
    pub fn new(factors: impl IntoIterator<Item = (u64, i64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (m, a) in factors {
            if m == 0 {
                return Err(Error::InvalidArgument("eta multiplier must be positive".into()));
            }
            *map.entry(m).or_insert(0) += a;
        }
        map.retain(|_, a| *a != 0);
        let offset24 = map.iter().map(|(&m, &a)| m as i64 * a).sum();
        Ok(EtaQuotient { factors: map, offset24 })
    }

    pub fn factors(&self) -> &BTreeMap<u64, i64> {
        &self.factors
    }

    /// Net power of `q` in units of `1/24`.
    pub fn offset24(&self) -> i64 {
        self.offset24
    }

    /// Weight `sum a_m / 2`.
    pub fn weight(&self) -> Ratio<i64> {
        Ratio::new(self.factors.values().sum(), 2)
    }

    pub fn level_lcm(&self) -> u64 {
        self.factors.keys().fold(1, |l, &m| l.lcm(&m))
    }
}

/// Expands `q^{external_shift24/24} * prod eta(mz)^{a_m}` as an integral
/// q-series up to `q^N`.
pub fn expand_eta_quotient(eq: &EtaQuotient, external_shift24: i64, truncation: usize) -> Result<TruncatedIntSeries> {
    let net = eq.offset24 + external_shift24;
    if net % 24 != 0 || net < 0 {
        return Err(Error::NonIntegralShift {
            offset24: eq.offset24,
            shift24: external_shift24,
        });
    }
    let mut pieces = Vec::with_capacity(eq.factors.len());
    for (&m, &a) in &eq.factors {
        pieces.push(eta_factor_series(m, truncation).pow(a)?);
    }
    let mut acc = balanced_product(pieces, truncation);
    let e = (net / 24) as usize;
    if e > 0 {
        acc = acc.shift(e);
    }
    Ok(acc)
}

fn balanced_product(mut v: Vec<TruncatedIntSeries>, truncation: usize) -> TruncatedIntSeries {
    if v.is_empty() {
        return TruncatedIntSeries::one(truncation);
    }
    while v.len() > 1 {
        let mut next = Vec::with_capacity(v.len().div_ceil(2));
        let mut it = v.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(&a * &b),
                None => next.push(a),
            }
        }
        v = next;
    }
    v.pop().unwrap()
}

/// Eta quotient whose expansion (after shifting by `-(t^2-1)/24`) is the
/// generating function of `sc_t(n)`.
pub fn sct_eta_quotient(t: u32) -> Result<EtaQuotient> {
    if t < 4 {
        return Err(Error::InvalidArgument(format!("sct_series needs t >= 4, got {t}")));
    }
    let t64 = t as u64;
    let ti = t as i64;
    if t.is_multiple_of(2) {
        EtaQuotient::new([(2, 2), (2 * t64, ti / 2), (1, -1), (4, -1)])
    } else {
        EtaQuotient::new([(2, 2), (2 * t64, (ti - 5) / 2), (t64, 1), (4 * t64, 1), (1, -1), (4, -1)])
    }
}

/// `sc_t(0..=N)`.
pub fn sct_series(t: u32, truncation: usize) -> Result<TruncatedIntSeries> {
    let eq = sct_eta_quotient(t)?;
    let t = t as i64;
    expand_eta_quotient(&eq, -(t * t - 1), truncation)
}

/// `eta(2z)^2 / (eta(z) eta(4z))`, which is `q^{-1/24} prod (1 + q^{2n+1})`.
pub fn sc_eta_quotient() -> EtaQuotient {
    EtaQuotient::new([(2, 2), (1, -1), (4, -1)]).unwrap()
}

/// `sc(0..=N)`: all self-conjugate partitions.
pub fn sc_series(truncation: usize) -> TruncatedIntSeries {
    expand_eta_quotient(&sc_eta_quotient(), 1, truncation).unwrap()
}

/// `c_t(0..=N)`, counts of all `t`-cores: `prod (1-q^{tk})^t / prod (1-q^k)`.
pub fn core_series(t: u32, truncation: usize) -> Result<TruncatedIntSeries> {
    if t < 1 {
        return Err(Error::InvalidArgument("core_series needs t >= 1".into()));
    }
    let ti = t as i64;
    let eq = EtaQuotient::new([(t as u64, ti), (1, -1)])?;
    expand_eta_quotient(&eq, -(ti * ti - 1), truncation)
}

/// `prod (1 - q^k)^{-t}`, whose coefficients are `hat_p(t, x)`.
pub fn hat_p_series(t: u32, truncation: usize) -> TruncatedIntSeries {
    eta_factor_series(1, truncation).pow(-(t as i64)).unwrap()
}

/// Result of the cusp-order holomorphy test for an eta quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HolomorphyReport {
    /// Smallest value of `sum_m (gcd(c, m)^2 / m) a_m` over the scanned `c`.
    pub minimum: Ratio<i64>,
    /// A `c` attaining the minimum.
    pub witness: u64,
    pub holomorphic: bool,
}

fn cusp_order(eq: &EtaQuotient, c: u64) -> Ratio<i64> {
    eq.factors
        .iter()
        .map(|(&m, &a)| {
            let g = c.gcd(&m) as i64;
            Ratio::new(g * g * a, m as i64)
        })
        .sum()
}

fn holomorphy_over(eq: &EtaQuotient, cs: impl Iterator<Item = u64>) -> HolomorphyReport {
    let mut best: Option<(Ratio<i64>, u64)> = None;
    for c in cs {
        let v = cusp_order(eq, c);
        if best.as_ref().is_none_or(|(b, _)| v < *b) {
            best = Some((v, c));
        }
    }
    let (minimum, witness) = best.unwrap_or((Ratio::zero(), 1));
    HolomorphyReport {
        holomorphic: !minimum.is_negative(),
        minimum,
        witness,
    }
}

/// Evaluates the cusp-order sum at every divisor of the lcm of multipliers.
pub fn holomorphy_certificate(eq: &EtaQuotient) -> HolomorphyReport {
    let l = eq.level_lcm();
    holomorphy_over(eq, (1..=l).filter(|c| l.is_multiple_of(*c)))
}

/// Same test scanning every `c` in `1..=lcm`; used to validate the divisor scan.
pub fn holomorphy_full_scan(eq: &EtaQuotient) -> HolomorphyReport {
    holomorphy_over(eq, 1..=eq.level_lcm())
}
