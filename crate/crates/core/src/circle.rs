//! Dedekind sums, eta and theta multipliers, Gauss sums and the singular
//! series `C_t(n)` of the circle-method main term.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::{factorize, jacobi, jacobi_star_lower, jacobi_star_upper, kronecker};
use crate::qseries::sct_eta_quotient;
use crate::{Error, Limits, Result};

/// A rational `x` mod 1, standing for `e(x) = exp(2 pi i x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnitPhase {
    num: i64,
    den: i64,
}

impl UnitPhase {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "phase denominator must be nonzero");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = num.gcd(&den);
        let (num, den) = (num / g, den / g);
        UnitPhase {
            num: num.rem_euclid(den),
            den,
        }
    }

    pub fn zero() -> Self {
        UnitPhase { num: 0, den: 1 }
    }

    pub fn from_ratio(r: Ratio<i64>) -> Self {
        Self::new(*r.numer(), *r.denom())
    }

    /// `+1 -> 0`, `-1 -> 1/2`.
    pub fn from_sign(s: i32) -> Self {
        match s {
            1 => Self::zero(),
            -1 => Self::new(1, 2),
            _ => panic!("sign must be +-1, got {s}"),
        }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn ratio(&self) -> Ratio<i64> {
        Ratio::new(self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn to_complex(&self) -> Complex64 {
        let x = 2.0 * PI * self.num as f64 / self.den as f64;
        Complex64::new(x.cos(), x.sin())
    }
}

impl Add for UnitPhase {
    type Output = UnitPhase;

    fn add(self, o: UnitPhase) -> UnitPhase {
        let l = self.den.lcm(&o.den);
        UnitPhase::new(self.num * (l / self.den) + o.num * (l / o.den), l)
    }
}

impl Neg for UnitPhase {
    type Output = UnitPhase;

    fn neg(self) -> UnitPhase {
        UnitPhase::new(-self.num, self.den)
    }
}

impl Mul<i64> for UnitPhase {
    type Output = UnitPhase;

    fn mul(self, k: i64) -> UnitPhase {
        UnitPhase::new((self.num as i128 * k as i128).rem_euclid(self.den as i128) as i64, self.den)
    }
}

impl fmt::Display for UnitPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({}/{})", self.num, self.den)
    }
}

fn check_coprime(h: i64, k: i64) -> Result<()> {
    if k < 1 || h.gcd(&k) != 1 {
        return Err(Error::NotCoprime { h, k });
    }
    Ok(())
}

/// `s(h, k)` by the reciprocity recursion.
pub fn dedekind_sum(h: i64, k: i64) -> Result<Ratio<i64>> {
    check_coprime(h, k)?;
    Ok(dedekind_rec(h.rem_euclid(k), k))
}

fn dedekind_rec(h: i64, k: i64) -> Ratio<i64> {
    if k == 1 || h == 0 {
        return Ratio::zero();
    }
    if h == 1 {
        return Ratio::new((k - 1) * (k - 2), 12 * k);
    }
    let r = Ratio::new(h as i128 * h as i128 + k as i128 * k as i128 + 1, 12 * h as i128 * k as i128);
    let r = Ratio::new(r.numer().to_i64().unwrap(), r.denom().to_i64().unwrap());
    -dedekind_rec(k % h, h) - Ratio::new(1, 4) + r
}

/// `s(h, k)` from the defining sum over `r = 1..k-1`.
pub fn dedekind_sum_direct(h: i64, k: i64) -> Result<Ratio<i64>> {
    check_coprime(h, k)?;
    let mut s: i128 = 0;
    for r in 1..k {
        let m = (h as i128 * r as i128).rem_euclid(k as i128);
        s += r as i128 * (2 * m - k as i128);
    }
    let v = Ratio::new(s, 2 * k as i128 * k as i128);
    Ok(Ratio::new(v.numer().to_i64().unwrap(), v.denom().to_i64().unwrap()))
}

/// `omega_{h,k} = e(s(h, k) / 2)`.
pub fn omega(h: i64, k: i64) -> Result<UnitPhase> {
    Ok(UnitPhase::from_ratio(dedekind_sum(h, k)? / 2))
}

/// An element of `SL_2(Z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sl2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Sl2 {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if a as i128 * d as i128 - b as i128 * c as i128 != 1 {
            return Err(Error::NotUnimodular { a, b, c, d });
        }
        Ok(Sl2 { a, b, c, d })
    }

    pub fn identity() -> Self {
        Sl2 { a: 1, b: 0, c: 0, d: 1 }
    }

    /// Some matrix with bottom row `(c, d)`.
    pub fn from_bottom_row(c: i64, d: i64) -> Result<Self> {
        let e = d.extended_gcd(&c);
        let (x, y) = match e.gcd {
            1 => (e.x, e.y),
            -1 => (-e.x, -e.y),
            _ => return Err(Error::NotCoprime { h: c, k: d }),
        };
        Self::new(x, -y, c, d)
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        (z * self.a as f64 + self.b as f64) / (z * self.c as f64 + self.d as f64)
    }

    pub fn compose(&self, o: &Sl2) -> Result<Sl2> {
        Sl2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

/// `v_eta(gamma)` with `eta(gamma z) = v_eta(gamma) (cz + d)^{1/2} eta(z)`, principal
/// square root.
pub fn eta_multiplier(g: &Sl2) -> Result<UnitPhase> {
    let Sl2 { a, b, c, d } = *g;
    Sl2::new(a, b, c, d)?;
    let c2m1 = c as i128 * c as i128 - 1;
    let base = (a + d) as i128 * c as i128 - b as i128 * d as i128 * c2m1;
    let (sign, num) = if c % 2 == 0 {
        let s = jacobi_star_lower(c, d)?;
        (s, base + 3 * d as i128 - 3 - 3 * c as i128 * d as i128)
    } else {
        let s = jacobi_star_upper(c, d)?;
        (s, base - 3 * c as i128)
    };
    let phase = UnitPhase::new(num.rem_euclid(24) as i64, 24);
    Ok(phase + UnitPhase::from_sign(sign))
}

/// `v_theta(gamma) = (2c/d)_* e((d - 1)/8)` for `4 | c`.
pub fn theta_multiplier(g: &Sl2) -> Result<UnitPhase> {
    let Sl2 { a, b, c, d } = *g;
    Sl2::new(a, b, c, d)?;
    if c % 4 != 0 {
        return Err(Error::InvalidArgument(format!("theta multiplier needs 4 | c, got c = {c}")));
    }
    let s = jacobi_star_lower(2 * c, d)?;
    Ok(UnitPhase::new(d - 1, 8) + UnitPhase::from_sign(s))
}

fn q_power(x: f64, z: Complex64) -> Complex64 {
    (Complex64::new(0.0, 2.0 * PI * x) * z).exp()
}

/// `eta(z) = q^{1/24} sum_j (-1)^j q^{j(3j-1)/2}` for `Im z > 0`.
pub fn eta(z: Complex64) -> Complex64 {
    assert!(z.im > 0.0);
    let mut s = Complex64::new(1.0, 0.0);
    for j in 1i64.. {
        let e1 = (j * (3 * j - 1) / 2) as f64;
        if (-2.0 * PI * z.im * e1).exp() < 1e-22 {
            break;
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let e2 = (j * (3 * j + 1) / 2) as f64;
        s += (q_power(e1, z) + q_power(e2, z)) * sign;
    }
    q_power(1.0 / 24.0, z) * s
}

/// `theta(z) = sum_{n in Z} q^{n^2}`.
pub fn theta(z: Complex64) -> Complex64 {
    assert!(z.im > 0.0);
    let mut s = Complex64::new(1.0, 0.0);
    for n in 1i64.. {
        let e = (n * n) as f64;
        if (-2.0 * PI * z.im * e).exp() < 1e-22 {
            break;
        }
        s += q_power(e, z) * 2.0;
    }
    s
}

/// `|eta(gamma z) - v_eta(gamma) (cz+d)^{1/2} eta(z)|`.
pub fn eta_residual(g: &Sl2, z: Complex64) -> Result<f64> {
    let v = eta_multiplier(g)?.to_complex();
    let j = (z * g.c as f64 + g.d as f64).sqrt();
    Ok((eta(g.apply(z)) - v * j * eta(z)).norm())
}

/// `|theta(gamma z) - v_theta(gamma) (cz+d)^{1/2} theta(z)|`.
pub fn theta_residual(g: &Sl2, z: Complex64) -> Result<f64> {
    let v = theta_multiplier(g)?.to_complex();
    let j = (z * g.c as f64 + g.d as f64).sqrt();
    Ok((theta(g.apply(z)) - v * j * theta(z)).norm())
}

fn phi(n: u64) -> u64 {
    let f = factorize(n, &Limits::default()).expect("phi argument within cap");
    f.factors.iter().map(|&(p, e)| (p - 1) * p.pow(e - 1)).product()
}

fn mobius(n: u64) -> i64 {
    let f = factorize(n, &Limits::default()).expect("mobius argument within cap");
    if f.factors.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.factors.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Real Dirichlet characters used by the Gauss-sum evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharacterSpec {
    /// The principal character mod `q`.
    Principal,
    /// `a -> (a/k)` for odd `k | q`.
    Jacobi(u64),
    /// `a -> (m/a)` for a discriminant `m` (`0` or `1 mod 4`) with `|m| | q`.
    Kronecker(i64),
}

impl fmt::Display for CharacterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterSpec::Principal => write!(f, "principal"),
            CharacterSpec::Jacobi(k) => write!(f, "(./{k})"),
            CharacterSpec::Kronecker(m) => write!(f, "({m}/.)"),
        }
    }
}

fn squarefree_part(m: i64) -> i64 {
    let f = factorize(m.unsigned_abs(), &Limits::default()).expect("character modulus within cap");
    let s: i64 = f.factors.iter().filter(|x| x.1 % 2 == 1).map(|x| x.0 as i64).product();
    if m < 0 {
        -s
    } else {
        s
    }
}

impl CharacterSpec {
    pub fn validate(&self, q: u64) -> Result<()> {
        let bad = || Error::UnsupportedCharacter {
            spec: self.to_string(),
            modulus: q,
        };
        if q == 0 {
            return Err(bad());
        }
        match *self {
            CharacterSpec::Principal => Ok(()),
            CharacterSpec::Jacobi(k) => {
                if k % 2 == 1 && q.is_multiple_of(k) {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
            CharacterSpec::Kronecker(m) => {
                if m != 0 && matches!(m.rem_euclid(4), 0 | 1) && q.is_multiple_of(m.unsigned_abs()) {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
        }
    }

    /// Value at `a` as a character mod `q`.
    pub fn eval(&self, a: i64, q: u64) -> i32 {
        let r = a.rem_euclid(q as i64);
        if (r as u64).gcd(&q) != 1 {
            return 0;
        }
        match *self {
            CharacterSpec::Principal => 1,
            CharacterSpec::Jacobi(k) => jacobi(r, k as i64).unwrap(),
            CharacterSpec::Kronecker(m) => kronecker(m, r as u64),
        }
    }

    /// Discriminant `D` of the inducing primitive character (`1` if principal).
    pub fn primitive_discriminant(&self) -> i64 {
        match *self {
            CharacterSpec::Principal => 1,
            CharacterSpec::Jacobi(k) => {
                let k0 = squarefree_part(k as i64);
                if k0 % 4 == 1 {
                    k0
                } else {
                    -k0
                }
            }
            CharacterSpec::Kronecker(m) => {
                let s = squarefree_part(m);
                if s.rem_euclid(4) == 1 {
                    s
                } else {
                    4 * s
                }
            }
        }
    }
}

fn primitive_eval(disc: i64, x: i64) -> i32 {
    let d = disc.unsigned_abs();
    if d == 1 {
        return 1;
    }
    let r = x.rem_euclid(d as i64);
    if r == 0 {
        0
    } else {
        kronecker(disc, r as u64)
    }
}

/// `sum_{a mod q} chi(a) e(an/q)`, accumulated by exact residue counts.
pub fn gauss_sum_direct(q: u64, chi: CharacterSpec, n: i64) -> Result<Complex64> {
    chi.validate(q)?;
    let qi = q as i64;
    let mut counts = vec![0i64; q as usize];
    let nr = n.rem_euclid(qi);
    for a in 0..qi {
        let c = chi.eval(a, q);
        if c != 0 {
            counts[((a as i128 * nr as i128) % qi as i128) as usize] += c as i64;
        }
    }
    Ok(counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(r, &c)| UnitPhase::new(r as i64, qi).to_complex() * c as f64)
        .sum())
}

/// Closed form for a character induced by a real primitive `chi*` mod `d`:
/// `chi*(n/(q,n)) chi*(q/((q,n)d)) mu(q/((q,n)d)) phi(q)/phi(q/(q,n)) tau(chi*)`
/// when `d | q/(q,n)`, else 0.
pub fn gauss_sum_closed(q: u64, chi: CharacterSpec, n: i64) -> Result<Complex64> {
    chi.validate(q)?;
    let disc = chi.primitive_discriminant();
    let d = disc.unsigned_abs();
    let g = (n.unsigned_abs()).gcd(&q);
    let q1 = q / g;
    if !q1.is_multiple_of(d) {
        return Ok(Complex64::zero());
    }
    let r = q1 / d;
    let tau = if d == 1 {
        Complex64::new(1.0, 0.0)
    } else if disc > 0 {
        Complex64::new((d as f64).sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (d as f64).sqrt())
    };
    let v = primitive_eval(disc, n / g as i64) as f64
        * primitive_eval(disc, r as i64) as f64
        * mobius(r) as f64
        * phi(q) as f64
        / phi(q1) as f64;
    Ok(tau * v)
}

fn check_t(t: u32) -> Result<()> {
    if t < 10 {
        return Err(Error::InvalidArgument(format!(
            "the circle-method main term needs t >= 10, got {t}"
        )));
    }
    Ok(())
}

/// Exponent `g` of the main term: `t/4` for even `t`, `(t-1)/4` for odd `t`.
pub fn gamma_exponent(t: u32) -> f64 {
    if t.is_multiple_of(2) {
        t as f64 / 4.0
    } else {
        (t as f64 - 1.0) / 4.0
    }
}

/// Denominators `k` that enter `C_t(n)`.
pub fn admissible_k(t: u32, k: u64) -> bool {
    k.gcd(&(t as u64)) == 1 && (t.is_multiple_of(2) || k % 4 != 2)
}

fn k_weight(t: u32, k: u64) -> f64 {
    let g = gamma_exponent(t);
    if t.is_multiple_of(2) {
        (k as f64).powf(-g)
    } else {
        (k.gcd(&2) as f64 / k as f64).powf(g)
    }
}

/// `omega~_{h,k} = prod_m omega_{m h / g_m, k / g_m}^{-a_m}`, `g_m = (m, k)`,
/// over the factors of the `sc_t` eta quotient.
pub fn omega_tilde(t: u32, h: i64, k: i64) -> Result<UnitPhase> {
    check_coprime(h, k)?;
    let eq = sct_eta_quotient(t)?;
    let mut acc = UnitPhase::zero();
    for (&m, &a) in eq.factors() {
        let m = m as i64;
        let g = m.gcd(&k);
        acc = acc + omega(m / g * h, k / g)? * (-a);
    }
    Ok(acc)
}

/// `sum_{h mod k, (h,k)=1} e(-hn/k) omega~_{h,k}` from the definition, with
/// phases accumulated exactly mod `24k`.
pub fn inner_sum_direct(t: u32, n: u64, k: u64) -> Result<Complex64> {
    let eq = sct_eta_quotient(t)?;
    let ki = k as i64;
    let modulus = 24 * ki;
    let mut counts = vec![0i64; modulus as usize];
    let nr = (n % k) as i64;
    let factors: Vec<(i64, i64, i64)> = eq
        .factors()
        .iter()
        .map(|(&m, &a)| {
            let m = m as i64;
            (m, a, m.gcd(&ki))
        })
        .collect();
    for h in 0..ki.max(1) {
        if h.gcd(&ki) != 1 {
            continue;
        }
        let mut phase = Ratio::new(-(h * nr), ki);
        for &(m, a, g) in &factors {
            phase -= dedekind_sum(m / g * h, ki / g)? * a / 2;
        }
        let scaled = phase * modulus;
        if !scaled.is_integer() {
            return Err(Error::InvariantViolation(format!(
                "phase {phase} at (h, k) = ({h}, {k}) is not a 24k-th root of unity"
            )));
        }
        counts[scaled.to_integer().rem_euclid(modulus) as usize] += 1;
    }
    Ok(counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(r, &c)| UnitPhase::new(r as i64, modulus).to_complex() * c as f64)
        .sum())
}

/// The `t = 11` inner sum through quadratic Gauss sums.
pub fn inner_sum_c11_gauss(n: u64, k: u64) -> Result<Complex64> {
    if !admissible_k(11, k) {
        return Err(Error::InvalidArgument(format!("k = {k} does not enter C_11")));
    }
    let n5 = n as i64 + 5;
    let ki = k as i64;
    if k % 2 == 1 {
        let pre = UnitPhase::new(3 + 5 * ki.rem_euclid(8), 8).to_complex() * jacobi(-22, ki)? as f64;
        return Ok(pre * gauss_sum_closed(k, CharacterSpec::Jacobi(k), -n5)?);
    }
    let j = ki / 4;
    let (cc, f) = if !k.is_multiple_of(8) {
        (jacobi(11, j)?, -16 * n5 + 10 * ki + ki * ki)
    } else {
        (jacobi(j, 11)?, -16 * n5 + 14 * ki)
    };
    let g = gauss_sum_closed(16 * k, CharacterSpec::Kronecker(2 * ki), f)?;
    Ok(g * (-(cc as f64) / 16.0))
}

/// How the inner `h`-sum is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerSum {
    Direct,
    /// Closed-form Gauss sums; only available for `t = 11`.
    Gauss,
}

/// Truncated singular series with its tail bound.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularSeriesEstimate {
    pub t: u32,
    pub n: u64,
    pub k_max: u64,
    pub value: Complex64,
    pub tail_bound: f64,
    pub gamma_exponent: f64,
}

/// Bound on `sum_{k>K} |weight(k) inner(k)|` using `|inner(k)| <= k`.
pub fn tail_bound(t: u32, k_max: u64) -> f64 {
    let g = gamma_exponent(t);
    let k = k_max as f64;
    let mut b = k.powf(2.0 - g) / (g - 2.0);
    if t % 2 == 1 {
        let j = k_max / 4;
        let s = if j == 0 {
            1.0 + 1.0 / (g - 2.0)
        } else {
            (j as f64).powf(2.0 - g) / (g - 2.0)
        };
        b += 2f64.powf(g) * 4f64.powf(1.0 - g) * s;
    }
    b
}

const BLOCK: u64 = 16;

/// `C_t(n)` summed over admissible `k <= K`.
pub fn singular_series(t: u32, n: u64, k_max: u64) -> Result<SingularSeriesEstimate> {
    singular_series_with(t, n, k_max, InnerSum::Direct)
}

pub fn singular_series_with(t: u32, n: u64, k_max: u64, method: InnerSum) -> Result<SingularSeriesEstimate> {
    check_t(t)?;
    if k_max < 1 {
        return Err(Error::InvalidArgument("singular series needs K >= 1".into()));
    }
    if method == InnerSum::Gauss && t != 11 {
        return Err(Error::InvalidArgument(format!("the Gauss-sum inner sum is implemented for t = 11, got {t}")));
    }
    let blocks: Vec<u64> = (0..k_max.div_ceil(BLOCK)).collect();
    let partials: Vec<Result<Complex64>> = blocks
        .par_iter()
        .map(|&b| {
            let mut s = Complex64::zero();
            for k in (b * BLOCK + 1)..=((b + 1) * BLOCK).min(k_max) {
                if !admissible_k(t, k) {
                    continue;
                }
                let inner = match method {
                    InnerSum::Direct => inner_sum_direct(t, n, k)?,
                    InnerSum::Gauss => {
                        if k == 1 {
                            inner_sum_direct(t, n, k)?
                        } else {
                            inner_sum_c11_gauss(n, k)?
                        }
                    }
                };
                s += inner * k_weight(t, k);
            }
            Ok(s)
        })
        .collect();
    let mut value = Complex64::zero();
    for p in partials {
        value += p?;
    }
    Ok(SingularSeriesEstimate {
        t,
        n,
        k_max,
        value,
        tail_bound: tail_bound(t, k_max),
        gamma_exponent: gamma_exponent(t),
    })
}

/// Which Gamma factor the main-term prefactor uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaConvention {
    /// `Gamma(g)` with `g = t/4` or `(t-1)/4`.
    Exponent,
    /// `Gamma(t/2)`.
    HalfT,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MainTerm {
    pub t: u32,
    pub n: u64,
    pub prefactor: f64,
    pub singular: SingularSeriesEstimate,
    pub value: f64,
    /// `n^{t/8}`, the size of the error term.
    pub error_order: f64,
}

/// `(2 pi)^g / ((2t)^g Gamma(g)) (n + (t^2-1)/24)^{g-1}` without the singular series.
pub fn main_term_prefactor(t: u32, n: u64, convention: GammaConvention) -> f64 {
    let g = gamma_exponent(t);
    let gamma_arg = match convention {
        GammaConvention::Exponent => g,
        GammaConvention::HalfT => t as f64 / 2.0,
    };
    let x = n as f64 + (t as f64 * t as f64 - 1.0) / 24.0;
    (2.0 * PI / (2.0 * t as f64)).powf(g) / statrs::function::gamma::gamma(gamma_arg) * x.powf(g - 1.0)
}

pub fn main_term(t: u32, n: u64, k_max: u64) -> Result<MainTerm> {
    main_term_with(t, n, k_max, GammaConvention::Exponent)
}

pub fn main_term_with(t: u32, n: u64, k_max: u64, convention: GammaConvention) -> Result<MainTerm> {
    let singular = singular_series(t, n, k_max)?;
    let prefactor = main_term_prefactor(t, n, convention);
    Ok(MainTerm {
        t,
        n,
        prefactor,
        value: prefactor * singular.value.re,
        singular,
        error_order: (n as f64).powf(t as f64 / 8.0),
    })
}

/// Riemann zeta for real `s > 1` by Euler-Maclaurin summation.
pub fn zeta(s: f64) -> f64 {
    assert!(s > 1.0, "zeta is only implemented for s > 1");
    const N: usize = 20;
    const B2K: [f64; 6] = [1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0];
    let nf = N as f64;
    let mut sum: f64 = (1..N).map(|k| (k as f64).powf(-s)).sum();
    sum += nf.powf(1.0 - s) / (s - 1.0) + 0.5 * nf.powf(-s);
    let mut rising = s;
    let mut fact = 2.0;
    let mut pow = nf.powf(-s - 1.0);
    for (j, b) in B2K.iter().enumerate() {
        sum += b / fact * rising * pow;
        let k = 2 * j as u32 + 2;
        rising *= (s + k as f64 - 1.0) * (s + k as f64);
        fact *= (k as f64 + 1.0) * (k as f64 + 2.0);
        pow /= nf * nf;
    }
    sum
}

/// `(1 - 2^{1 - t/4}) zeta(t/4 - 1) - 1`, the even-`t` bound on `|C_t - 1|`.
pub fn even_t_bound(t: u32) -> f64 {
    let g = t as f64 / 4.0;
    (1.0 - 2f64.powf(1.0 - g)) * zeta(g - 1.0) - 1.0
}

/// `zeta((t-1)/4 - 1) - 1`, the odd-`t` bound on `|C_t - 1|` for `t >= 13`.
pub fn odd_t_bound(t: u32) -> f64 {
    zeta((t as f64 - 1.0) / 4.0 - 1.0) - 1.0
}

/// Certified bound on `|C_t(n) - 1|` for `t >= 10`: the even-`t` zeta bound,
/// the universal `t = 11` constant, or the odd-`t` zeta bound for `t >= 13`.
pub fn deviation_bound(t: u32) -> Option<f64> {
    match t {
        0..=9 => None,
        11 => Some(c11_universal_bound()),
        t if t % 2 == 0 => Some(even_t_bound(t)),
        t => Some(odd_t_bound(t)),
    }
}

/// `prod_{p != 2, 11} (1 + p^{-2}) = 726 / (61 pi^2)`.
pub fn c11_universal_d() -> f64 {
    726.0 / (61.0 * PI * PI)
}

/// `15609 / (854 pi^2) - 1`.
pub fn c11_universal_bound() -> f64 {
    15609.0 / (854.0 * PI * PI) - 1.0
}

/// The printed closed form `zeta(2)/zeta(4) (1-2^-4)(1-11^-4) / ((1-2^-2)(1-11^-2))`.
pub fn c11_printed_closed_form() -> f64 {
    let z2 = PI * PI / 6.0;
    let z4 = PI.powi(4) / 90.0;
    z2 / z4 * (1.0 - 2f64.powi(-4)) * (1.0 - 11f64.powi(-4)) / ((1.0 - 2f64.powi(-2)) * (1.0 - 11f64.powi(-2)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct C11Certificate {
    pub n: u64,
    /// Truncated Euler product for `D(n)` over `p <= euler_cutoff`.
    pub d_lower: f64,
    /// `d_lower` times the tail factor `exp(1.05 / P^2)`.
    pub d_upper: f64,
    pub euler_cutoff: u64,
    /// `d_upper (9/7 + 1/4) - 1`.
    pub bound: f64,
    pub universal_bound: f64,
    pub within_universal: bool,
    pub series: SingularSeriesEstimate,
    pub deviation: f64,
    pub series_within_bound: bool,
}

/// `D(n)`, the bound `D(n)(9/7 + 1/4) - 1`, and the check of `C_11(n, K)`
/// against it.
pub fn c11_certificate(n: u64, k_max: u64, limits: &Limits) -> Result<C11Certificate> {
    const P: u64 = 2000;
    let f = factorize(n + 5, limits)?;
    let mut d = 1.0f64;
    for p in crate::arith::primes_up_to(P).into_iter().filter(|&p| p != 2 && p != 11) {
        let pf = p as f64;
        let v = f.exponent(p) as i32;
        let e = -2 - 3 * (v / 2);
        d *= (1.0 - pf.powi(-4)) / (1.0 - pf.powi(-3)) * (1.0 + pf.powi(e) / (1.0 + pf));
    }
    let d_upper = d * (1.05 / (P as f64 * P as f64)).exp();
    let bound = d_upper * (9.0 / 7.0 + 0.25) - 1.0;
    let universal_bound = c11_universal_bound();
    let series = singular_series_with(11, n, k_max, InnerSum::Direct)?;
    let deviation = (series.value - 1.0).norm();
    Ok(C11Certificate {
        n,
        d_lower: d,
        d_upper,
        euler_cutoff: P,
        bound,
        universal_bound,
        within_universal: bound <= universal_bound + 1e-12,
        series_within_bound: deviation <= bound + series.tail_bound,
        deviation,
        series,
    })
}
