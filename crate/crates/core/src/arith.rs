//! Factorization, divisor sums, Jacobi symbols, elliptic curve coefficients
//! and the `sc_9` evaluator built on them.

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::qseries::{core_series, sct_series};
use crate::{Error, Limits, Result};

/// Prime factorization as strictly increasing `(prime, exponent)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn value(&self) -> u128 {
        self.factors.iter().map(|&(p, e)| (p as u128).pow(e)).product()
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.factors.iter().find(|f| f.0 == p).map_or(0, |f| f.1)
    }
}

/// Trial division by 2, 3, 5 and then a mod-30 wheel.
pub fn factorize(n: u64, limits: &Limits) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::InvalidArgument("cannot factor 0".into()));
    }
    limits.check("factorization input", n as u128, limits.factorization)?;
    let mut n = n;
    let mut factors = Vec::new();
    let mut take = |n: &mut u64, p: u64| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    for p in [2, 3, 5] {
        take(&mut n, p);
    }
    const WHEEL: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];
    let mut p = 7u64;
    let mut i = 0;
    while p * p <= n {
        take(&mut n, p);
        p += WHEEL[i];
        i = (i + 1) % 8;
    }
    if n > 1 {
        factors.push((n, 1));
    }
    Ok(Factorization { factors })
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = 17;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            for j in (i * i..=n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    (0..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

/// Sum of divisors.
pub fn sigma(n: u64, limits: &Limits) -> Result<u64> {
    let f = factorize(n, limits)?;
    Ok(sigma_of(&f))
}

pub fn sigma_of(f: &Factorization) -> u64 {
    f.factors
        .iter()
        .map(|&(p, e)| (0..=e).map(|i| p.pow(i)).sum::<u64>())
        .product()
}

/// Jacobi symbol `(a/n)` for odd `n > 0`.
pub fn jacobi(a: i64, n: i64) -> Result<i32> {
    if n <= 0 || n % 2 == 0 {
        return Err(Error::InvalidArgument(format!("Jacobi symbol needs an odd positive modulus, got {n}")));
    }
    let mut a = a.rem_euclid(n);
    let mut n = n;
    let mut result = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    Ok(if n == 1 { result } else { 0 })
}

fn sgn(x: i64) -> i64 {
    if x < 0 {
        -1
    } else {
        1
    }
}

/// `(c/d)_* = (-1)^{((sgn c - 1)/2)((sgn d - 1)/2)} (c/|d|)` for odd `d`, with
/// `sgn 0 = 1`.
pub fn jacobi_star_lower(c: i64, d: i64) -> Result<i32> {
    if d % 2 == 0 {
        return Err(Error::InvalidArgument(format!("(c/d)_* needs odd d, got {d}")));
    }
    let j = jacobi(c, d.abs())?;
    Ok(if sgn(c) < 0 && sgn(d) < 0 { -j } else { j })
}

/// `(c/d)^* = (d/|c|)` for odd `c`.
pub fn jacobi_star_upper(c: i64, d: i64) -> Result<i32> {
    if c % 2 == 0 {
        return Err(Error::InvalidArgument(format!("(c/d)^* needs odd c, got {c}")));
    }
    jacobi(d, c.abs())
}

/// Kronecker symbol `(a/n)` for `n >= 1`.
pub fn kronecker(a: i64, n: u64) -> i32 {
    assert!(n >= 1);
    let mut n = n;
    let mut r = 1;
    while n.is_multiple_of(2) {
        n /= 2;
        r *= match a.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => return 0,
        };
    }
    r * jacobi(a, n as i64).unwrap()
}

/// `chi_3(n) = (n/3)`.
pub fn chi3(n: i64) -> i32 {
    match n.rem_euclid(3) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reduction {
    Good,
    Split,
    NonSplit,
    Additive,
}

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticCurve {
    pub a: [i64; 5],
    pub label: String,
}

impl EllipticCurve {
    pub fn new(a: [i64; 5], label: impl Into<String>) -> Result<Self> {
        let e = EllipticCurve { a, label: label.into() };
        if e.discriminant() == 0 {
            return Err(Error::InvalidArgument(format!("curve {:?} is singular", e.a)));
        }
        Ok(e)
    }

    pub fn c36a() -> Self {
        Self::new([0, 0, 0, 0, 1], "36a").unwrap()
    }

    pub fn c54a() -> Self {
        Self::new([1, -1, 0, 12, 8], "54a").unwrap()
    }

    pub fn c54b() -> Self {
        Self::new([1, -1, 1, 1, -1], "54b").unwrap()
    }

    pub fn c108a() -> Self {
        Self::new([0, 0, 0, 0, 4], "108a").unwrap()
    }

    pub fn by_label(label: &str) -> Result<Self> {
        match label {
            "36a" => Ok(Self::c36a()),
            "54a" => Ok(Self::c54a()),
            "54b" => Ok(Self::c54b()),
            "108a" => Ok(Self::c108a()),
            _ => Err(Error::InvalidArgument(format!("unknown curve label {label:?}"))),
        }
    }

    fn b_invariants(&self) -> [i128; 4] {
        let [a1, a2, a3, a4, a6] = self.a.map(|x| x as i128);
        let b2 = a1 * a1 + 4 * a2;
        let b4 = a1 * a3 + 2 * a4;
        let b6 = a3 * a3 + 4 * a6;
        let b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        [b2, b4, b6, b8]
    }

    pub fn discriminant(&self) -> i128 {
        let [b2, b4, b6, b8] = self.b_invariants();
        -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    }

    /// Primes dividing the discriminant of this model.
    pub fn bad_primes(&self) -> Vec<u64> {
        let d = self.discriminant().unsigned_abs();
        let mut out = Vec::new();
        let mut m = d;
        let mut p = 2u128;
        while p * p <= m {
            if m.is_multiple_of(p) {
                out.push(p as u64);
                while m.is_multiple_of(p) {
                    m /= p;
                }
            }
            p += 1;
        }
        if m > 1 {
            out.push(m as u64);
        }
        out
    }

    pub fn is_bad(&self, p: u64) -> bool {
        self.discriminant() % p as i128 == 0
    }

    fn coeffs_mod(&self, p: u64) -> [u64; 5] {
        self.a.map(|x| x.rem_euclid(p as i64) as u64)
    }

    /// Projective point count of the reduction mod `p`, singular point included.
    pub fn count_points(&self, p: u64, limits: &Limits) -> Result<u64> {
        limits.check("point-count prime", p as u128, limits.point_count)?;
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if p == 2 {
            let [a1, a2, a3, a4, a6] = self.coeffs_mod(p);
            let mut count = 1;
            for x in 0..2u64 {
                for y in 0..2u64 {
                    let lhs = y * y + a1 * x * y + a3 * y;
                    let rhs = x * x * x + a2 * x * x + a4 * x + a6;
                    if (lhs + rhs) % 2 == 0 {
                        count += 1;
                    }
                }
            }
            return Ok(count);
        }
        // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
        let [b2, b4, b6, _] = self.b_invariants();
        let pm = p as i128;
        let (b2, b4, b6) = (
            b2.rem_euclid(pm) as u64,
            (2 * b4).rem_euclid(pm) as u64,
            b6.rem_euclid(pm) as u64,
        );
        let mut square = vec![false; p as usize];
        for y in 0..p {
            square[((y * y) % p) as usize] = true;
        }
        let mut count = 1u64;
        for x in 0..p {
            let v = ((((4 * x % p + b2) % p * x % p + b4) % p) * x % p + b6) % p;
            count += if v == 0 {
                1
            } else if square[v as usize] {
                2
            } else {
                0
            };
        }
        Ok(count)
    }

    /// Reduction type at `p`, from the tangent cone at the singular point.
    pub fn reduction(&self, p: u64) -> Result<Reduction> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if !self.is_bad(p) {
            return Ok(Reduction::Good);
        }
        let [a1, a2, a3, a4, a6] = self.coeffs_mod(p);
        let f = |x: u64, y: u64| -> u64 {
            let lhs = (y * y + a1 * x % p * y + a3 * y) % p;
            let rhs = (x * x % p * x + a2 * x % p * x + a4 * x + a6) % p;
            (lhs + p - rhs) % p
        };
        let singular_x = if p == 2 {
            let mut found = None;
            for x in 0..2 {
                for y in 0..2 {
                    let fx = (a1 * y + x * x + a4) % 2;
                    let fy = (a1 * x + a3) % 2;
                    if f(x, y) == 0 && fx == 0 && fy == 0 {
                        found = Some(x);
                    }
                }
            }
            found
        } else {
            let [b2, b4, b6, _] = self.b_invariants();
            let pm = p as i128;
            let g = |x: u64| -> (u64, u64) {
                let x = x as i128;
                let v = (4 * x * x * x + b2 * x * x + 2 * b4 * x + b6).rem_euclid(pm);
                let d = (12 * x * x + 2 * b2 * x + 2 * b4).rem_euclid(pm);
                (v as u64, d as u64)
            };
            (0..p).find(|&x| g(x) == (0, 0))
        };
        let x0 = singular_x.ok_or_else(|| {
            Error::InvariantViolation(format!("no singular point found for {} at p = {p}", self.label))
        })?;
        // v^2 + a1 uv - (3 x0 + a2) u^2
        let c = (p * 3 - (3 * x0 + a2) % p) % p;
        if p == 2 {
            return Ok(match (a1 % 2, c % 2) {
                (0, _) => Reduction::Additive,
                (1, 0) => Reduction::Split,
                _ => Reduction::NonSplit,
            });
        }
        let disc = ((a1 * a1) % p + 4 * ((p - c) % p)) % p;
        if disc == 0 {
            Ok(Reduction::Additive)
        } else if jacobi(disc as i64, p as i64)? == 1 {
            Ok(Reduction::Split)
        } else {
            Ok(Reduction::NonSplit)
        }
    }

    /// `a_p = p + 1 - #E(F_p)` at good primes, `p - #E_ns(F_p)` at bad ones.
    pub fn ap(&self, p: u64, limits: &Limits) -> Result<i64> {
        let n = self.count_points(p, limits)? as i64;
        let p = p as i64;
        if !self.is_bad(p as u64) {
            return Ok(p + 1 - n);
        }
        let ap = p - (n - 1);
        let expected = match self.reduction(p as u64)? {
            Reduction::Additive => 0,
            Reduction::Split => 1,
            Reduction::NonSplit => -1,
            Reduction::Good => unreachable!(),
        };
        if ap != expected {
            return Err(Error::InvariantViolation(format!(
                "{}: nonsingular count gives a_{p} = {ap}, tangent cone gives {expected}",
                self.label
            )));
        }
        Ok(ap)
    }

    /// L-series coefficient `a_n`.
    pub fn an(&self, n: u64, limits: &Limits) -> Result<i64> {
        if n == 0 {
            return Err(Error::InvalidArgument("a_n needs n >= 1".into()));
        }
        let f = factorize(n, limits)?;
        let mut out = 1i64;
        for &(p, e) in &f.factors {
            let ap = self.ap(p, limits)?;
            let ape = if self.is_bad(p) {
                ap.pow(e)
            } else {
                let (mut prev, mut cur) = (1i64, ap);
                for _ in 1..e {
                    let next = ap * cur - p as i64 * prev;
                    prev = cur;
                    cur = next;
                }
                cur
            };
            out *= ape;
        }
        Ok(out)
    }
}

/// Every coefficient of the Eisenstein and cusp parts of the weight-2
/// decomposition at `q^N`, `N = 3n + 10`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sc9Decomposition {
    pub n: u64,
    pub big_n: u64,
    pub eisenstein: Ratio<i64>,
    pub cusp: Ratio<i64>,
    pub a36: i64,
    pub a54: i64,
    pub a54b: i64,
    pub a54_half: i64,
    pub a54b_half: i64,
    pub a108: i64,
}

impl Sc9Decomposition {
    pub fn value(&self) -> Ratio<i64> {
        self.eisenstein + self.cusp
    }

    /// `27 * sc_9(n)`.
    pub fn numerator(&self) -> Ratio<i64> {
        self.value() * 27
    }
}

fn e_chi3(n: u64, limits: &Limits) -> Result<i64> {
    if n == 0 {
        return Ok(0);
    }
    let f = factorize(n, limits)?;
    let mut divs = vec![1u64];
    for &(p, e) in &f.factors {
        let cur = divs.clone();
        for k in 1..=e {
            divs.extend(cur.iter().map(|d| d * p.pow(k)));
        }
    }
    Ok(divs
        .iter()
        .map(|&d| chi3(d as i64) as i64 * chi3((n / d) as i64) as i64 * d as i64)
        .sum())
}

fn e_tilde(t: u64, n: u64, limits: &Limits) -> Result<i64> {
    let mut v = sigma(n, limits)? as i64;
    if n.is_multiple_of(t) {
        v -= t as i64 * sigma(n / t, limits)? as i64;
    }
    Ok(v)
}

/// Evaluates the Eisenstein plus cusp-form decomposition at `q^{3n+10}` term by term.
pub fn sc9_decomposition(n: u64, limits: &Limits) -> Result<Sc9Decomposition> {
    let big_n = 3 * n + 10;
    let r = |a: i64, b: i64| Ratio::new(a, b);
    let quarter = if big_n.is_multiple_of(4) { e_chi3(big_n / 4, limits)? } else { 0 };
    let eisenstein = r(-2, 27) * quarter
        + r(1, 54) * e_chi3(big_n, limits)?
        + r(2, 81) * e_tilde(3, big_n, limits)?
        + r(1, 54) * e_tilde(4, big_n, limits)?
        - r(1, 162) * e_tilde(9, big_n, limits)?
        - r(2, 81) * e_tilde(12, big_n, limits)?
        + r(1, 162) * e_tilde(36, big_n, limits)?;
    let (e36, e54, e54b, e108) = (
        EllipticCurve::c36a(),
        EllipticCurve::c54a(),
        EllipticCurve::c54b(),
        EllipticCurve::c108a(),
    );
    let a36 = e36.an(big_n, limits)?;
    let a54 = e54.an(big_n, limits)?;
    let a54b = e54b.an(big_n, limits)?;
    let a108 = e108.an(big_n, limits)?;
    let (a54_half, a54b_half) = if big_n.is_multiple_of(2) {
        (e54.an(big_n / 2, limits)?, e54b.an(big_n / 2, limits)?)
    } else {
        (0, 0)
    };
    let cusp = r(1, 27) * a36 - r(1, 54) * (a54 + a54b) + r(1, 27) * (a54_half - a54b_half) - r(1, 27) * a108;
    Ok(Sc9Decomposition {
        n,
        big_n,
        eisenstein,
        cusp,
        a36,
        a54,
        a54b,
        a54_half,
        a54b_half,
        a108,
    })
}

/// `sc_9(n)` from the modular decomposition.
pub fn sc9(n: u64, limits: &Limits) -> Result<u64> {
    let v = sc9_decomposition(n, limits)?.value();
    if !v.is_integer() || v < Ratio::zero() {
        return Err(Error::InvariantViolation(format!("sc_9({n}) decomposition gave {v}")));
    }
    Ok(v.to_integer() as u64)
}

/// The three compiled cases exactly as printed, and the same cases with the
/// `n = 2 mod 4` Eisenstein term corrected to `3 sigma(m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sc9CaseAudit {
    pub n: u64,
    pub printed: Ratio<i64>,
    pub derived: Ratio<i64>,
}

pub fn sc9_case_audit(n: u64, limits: &Limits) -> Result<Sc9CaseAudit> {
    let big_n = 3 * n + 10;
    let a36 = EllipticCurve::c36a().an(big_n, limits)?;
    let a54 = EllipticCurve::c54a().an(big_n, limits)?;
    let a108 = EllipticCurve::c108a().an(big_n, limits)?;
    let s = sigma(big_n, limits)? as i64;
    let (printed, derived) = if n % 2 == 1 {
        let v = s + a36 - a54 - a108;
        (v, v)
    } else if n.is_multiple_of(4) {
        let v = s + a36 - 3 * a54 - a108;
        (v, v)
    } else {
        let m = big_n >> big_n.trailing_zeros();
        let sm = sigma(m, limits)? as i64;
        (sm + a36 - 3 * a54 - a108, 3 * sm + a36 - 3 * a54 - a108)
    };
    Ok(Sc9CaseAudit {
        n,
        printed: Ratio::new(printed, 27),
        derived: Ratio::new(derived, 27),
    })
}

/// `n + 2 = 4^k (8m + 1)`.
pub fn sc7_zero_set(n: u64) -> bool {
    let mut m = n + 2;
    while m.is_multiple_of(4) {
        m /= 4;
    }
    m % 8 == 1
}

/// `3n + 10 = 4^k`.
pub fn sc9_zero_set(n: u64) -> bool {
    let m = 3 * n + 10;
    m.is_power_of_two() && m.trailing_zeros().is_multiple_of(2)
}

#[derive(Debug, Clone, PartialEq)]
pub struct WitnessRatio {
    pub k: u64,
    pub denominator_n: u64,
    pub sc9_denominator: u64,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Conjecture45Witness {
    pub x: u64,
    pub n_prime: u64,
    pub doubled: bool,
    pub big_n: u64,
    pub n_x: u64,
    pub sc9_n_x: u64,
    pub sigma_ratio: Ratio<u128>,
    pub ratios: Vec<WitnessRatio>,
}

impl Conjecture45Witness {
    pub fn all_ratios_exceed_one(&self) -> bool {
        self.ratios.iter().all(|r| r.ratio > 1.0)
    }
}

/// Builds `N_X = 1225 prod_{7<p<=X} p` (doubled when it is `2 mod 3`),
/// `n_X = (N_X - 10)/3`, and the ratios `sc_9(n_X)/sc_9(4 n_X + k)`.
pub fn conjecture45_witness(x: u64, limits: &Limits) -> Result<Conjecture45Witness> {
    if x <= 11 {
        return Err(Error::InvalidArgument(format!("witness construction needs X > 11, got {x}")));
    }
    let mut n_prime: u128 = 1225;
    for p in primes_up_to(x).into_iter().filter(|&p| p > 7) {
        n_prime *= p as u128;
        limits.check("N_X", n_prime, limits.factorization)?;
    }
    let doubled = n_prime % 3 == 2;
    let big_n = if doubled { 2 * n_prime } else { n_prime };
    limits.check("4 N_X", 4 * big_n, limits.factorization)?;
    let (n_prime, big_n) = (n_prime as u64, big_n as u64);
    if (big_n - 10) % 3 != 0 {
        return Err(Error::InvariantViolation(format!("N_X = {big_n} is not 1 mod 3")));
    }
    let n_x = (big_n - 10) / 3;
    let sigma_ratio = Ratio::new(sigma(big_n, limits)? as u128, big_n as u128);
    let sc9_n_x = sc9(n_x, limits)?;
    let mut ratios = Vec::new();
    for k in [0u64, 1, 3, 4] {
        let m = 4 * n_x + k;
        let d = sc9(m, limits)?;
        ratios.push(WitnessRatio {
            k,
            denominator_n: m,
            sc9_denominator: d,
            ratio: if d == 0 { f64::INFINITY } else { sc9_n_x as f64 / d as f64 },
        });
    }
    Ok(Conjecture45Witness {
        x,
        n_prime,
        doubled,
        big_n,
        n_x,
        sc9_n_x,
        sigma_ratio,
        ratios,
    })
}

/// `c_p(n)/2 + 3 sc_p(n)/2` for `p` in `{7, 11, 13}`.
pub fn defect_zero_blocks(p: u32, n: u64, limits: &Limits) -> Result<u64> {
    if ![7, 11, 13].contains(&p) {
        return Err(Error::InvalidArgument(format!("defect-zero blocks are tabulated for p = 7, 11, 13, got {p}")));
    }
    limits.check("enumeration n", n as u128, limits.enumeration)?;
    let c = core_series(p, n as usize)?.coeffs()[n as usize].to_u64().unwrap();
    let s = sct_series(p, n as usize)?.coeffs()[n as usize].to_u64().unwrap();
    if (c + 3 * s) % 2 != 0 {
        return Err(Error::InvariantViolation(format!("c_{p}({n}) and sc_{p}({n}) have different parity")));
    }
    Ok((c + 3 * s) / 2)
}

/// Largest `|sc_9(n) - sigma(3n+10)/27| / (3n+10)^{0.6}` over `n <= n_max`,
/// `n != 2 mod 4`.
pub fn sc9_remainder_constant(n_max: u64, limits: &Limits) -> Result<f64> {
    let mut c: f64 = 0.0;
    for n in (0..=n_max).filter(|n| n % 4 != 2) {
        let big_n = 3 * n + 10;
        let main = sigma(big_n, limits)? as f64 / 27.0;
        let v = sc9(n, limits)? as f64;
        c = c.max((v - main).abs() / (big_n as f64).powf(0.6));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::oracle_count;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi(2, 15).unwrap(), 1);
        assert_eq!(jacobi(2, 3).unwrap(), -1);
        for c in -5..5 {
            assert_eq!(jacobi(c, 1).unwrap(), 1);
        }
        assert!(jacobi(1, 4).is_err());
    }

    #[test]
    fn starred_symbols() {
        assert_eq!(jacobi_star_lower(-1, -3).unwrap(), 1);
        assert_eq!(jacobi_star_lower(-1, 3).unwrap(), -1);
        assert_eq!(jacobi_star_lower(0, -1).unwrap(), 1);
        assert!(jacobi_star_lower(1, 2).is_err());
        assert_eq!(jacobi_star_upper(-3, 2).unwrap(), -1);
        assert!(jacobi_star_upper(2, 3).is_err());
    }

    #[test]
    fn jacobi_against_euler_criterion() {
        for p in primes_up_to(60).into_iter().filter(|&p| p > 2) {
            for a in 0..p {
                let e = mod_pow(a, (p - 1) / 2, p);
                let want = if e == 0 { 0 } else if e == 1 { 1 } else { -1 };
                assert_eq!(jacobi(a as i64, p as i64).unwrap(), want);
            }
        }
    }

    fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
        let mut r = 1 % m;
        b %= m;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % m;
            }
            b = b * b % m;
            e >>= 1;
        }
        r
    }

    #[test]
    fn kronecker_at_two() {
        assert_eq!(kronecker(1, 2), 1);
        assert_eq!(kronecker(5, 2), -1);
        assert_eq!(kronecker(4, 2), 0);
        assert_eq!(kronecker(-3, 8), -1);
    }

    #[test]
    fn factorization_round_trip() {
        for n in 1..2000u64 {
            let f = factorize(n, &l()).unwrap();
            assert_eq!(f.value(), n as u128);
            assert!(f.factors.windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.factors.iter().all(|&(p, e)| is_prime(p) && e >= 1));
        }
        let err = factorize(2_000_000_000_000, &l()).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn curve_point_counts() {
        let l = l();
        assert_eq!(EllipticCurve::c36a().count_points(13, &l).unwrap(), 12);
        assert_eq!(EllipticCurve::c36a().ap(13, &l).unwrap(), 2);
        assert_eq!(EllipticCurve::c36a().ap(2, &l).unwrap(), 0);
        assert_eq!(EllipticCurve::c54a().ap(13, &l).unwrap(), -4);
        assert_eq!(EllipticCurve::c108a().ap(13, &l).unwrap(), -7);
        assert_eq!(EllipticCurve::c54b().ap(13, &l).unwrap(), -4);
        assert_eq!(EllipticCurve::c54a().ap(2, &l).unwrap(), -1);
        assert_eq!(EllipticCurve::c54b().ap(2, &l).unwrap(), 1);
        assert_eq!(EllipticCurve::c54a().ap(3, &l).unwrap(), 0);
        assert_eq!(EllipticCurve::c54a().reduction(2).unwrap(), Reduction::NonSplit);
        assert!(EllipticCurve::c36a().ap(1_000_003, &l).is_err());
    }

    #[test]
    fn an_examples() {
        let l = l();
        assert_eq!(EllipticCurve::c36a().an(1, &l).unwrap(), 1);
        assert_eq!(EllipticCurve::c54a().an(16, &l).unwrap(), 1);
        let a19 = EllipticCurve::c36a().an(19, &l).unwrap();
        assert_eq!(a19 * a19, 64);
        assert_eq!(a19, 8);
        assert_eq!(EllipticCurve::c54a().an(28, &l).unwrap(), -1);
    }

    #[test]
    fn bad_primes_are_two_and_three() {
        for e in [EllipticCurve::c36a(), EllipticCurve::c54a(), EllipticCurve::c54b(), EllipticCurve::c108a()] {
            assert_eq!(e.bad_primes(), vec![2, 3], "{}", e.label);
        }
        assert!(EllipticCurve::new([0, 0, 0, 0, 0], "cusp").is_err());
    }

    #[test]
    fn hasse_bound() {
        let l = l();
        let curves = [EllipticCurve::c36a(), EllipticCurve::c54a(), EllipticCurve::c54b(), EllipticCurve::c108a()];
        for p in primes_up_to(10_000) {
            for e in &curves {
                let ap = e.ap(p, &l).unwrap();
                assert!((ap * ap) as u64 <= 4 * p, "{} p = {p}: a_p = {ap}", e.label);
            }
        }
    }

    #[test]
    fn twist_identity() {
        let l = l();
        let (a, b) = (EllipticCurve::c54a(), EllipticCurve::c54b());
        for n in (1..=500u64).filter(|n| n.gcd(&6) == 1) {
            assert_eq!(b.an(n, &l).unwrap(), chi3(n as i64) as i64 * a.an(n, &l).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn sc9_examples() {
        let l = l();
        assert_eq!(sc9(1, &l).unwrap(), 1);
        assert_eq!(sc9(2, &l).unwrap(), 0);
        assert_eq!(sc9(6, &l).unwrap(), 1);
        let d = sc9_decomposition(2, &l).unwrap();
        assert_eq!(d.eisenstein, Ratio::new(1, 9));
        assert_eq!(d.cusp, Ratio::new(-1, 9));
    }

    #[test]
    fn sc9_matches_oracle() {
        let l = l();
        let s = sct_series(9, 60).unwrap();
        for n in 0..=60u64 {
            let want = oracle_count(n, Some(9), true, &l).unwrap();
            assert_eq!(sc9(n, &l).unwrap(), want, "n = {n}");
            assert_eq!(s.coeff_u64(n as usize), want);
        }
    }

    #[test]
    fn printed_case_fails_at_two() {
        let l = l();
        let a = sc9_case_audit(2, &l).unwrap();
        assert_eq!(a.printed, Ratio::new(-2, 27));
        assert_eq!(a.derived, Ratio::from_integer(0));
    }

    #[test]
    fn odd_case_integrality() {
        let l = l();
        for n in (1..=60u64).step_by(2) {
            let big_n = 3 * n + 10;
            let v = sigma(big_n, &l).unwrap() as i64 + EllipticCurve::c36a().an(big_n, &l).unwrap()
                - EllipticCurve::c54a().an(big_n, &l).unwrap()
                - EllipticCurve::c108a().an(big_n, &l).unwrap();
            assert_eq!(v % 27, 0, "n = {n}");
        }
    }

    #[test]
    fn zero_sets() {
        assert!(sc7_zero_set(2));
        assert!(sc9_zero_set(2));
        assert!(!sc7_zero_set(18));
        assert!(sc9_zero_set(18));
        assert!(!sc9_zero_set(6));
    }

    #[test]
    fn witness_at_13() {
        let l = l();
        let w = conjecture45_witness(13, &l).unwrap();
        assert_eq!(w.n_prime, 1225 * 11 * 13);
        assert!(w.doubled);
        assert_eq!(3 * w.n_x + 10, w.big_n);
        assert_eq!(w.n_x, 116_780);
        assert!(w.sigma_ratio >= Ratio::new(1767, 1225));
        assert!(conjecture45_witness(11, &l).is_err());
    }

    #[test]
    fn defect_zero_examples() {
        let l = l();
        assert_eq!(defect_zero_blocks(11, 0, &l).unwrap(), 2);
        assert_eq!(defect_zero_blocks(7, 2, &l).unwrap(), 1);
        assert_eq!(defect_zero_blocks(11, 2, &l).unwrap(), 1);
        assert!(defect_zero_blocks(5, 2, &l).is_err());
        for p in [7, 11, 13] {
            for n in 0..=60 {
                defect_zero_blocks(p, n, &l).unwrap();
            }
        }
    }

    #[test]
    fn remainder_constant_is_finite() {
        let c = sc9_remainder_constant(200, &l()).unwrap();
        assert!(c.is_finite() && c > 0.0);
    }

    proptest! {
        #[test]
        fn sigma_is_multiplicative(a in 1u64..5000, b in 1u64..5000) {
            prop_assume!(a.gcd(&b) == 1);
            let l = Limits::default();
            prop_assert_eq!(sigma(a * b, &l).unwrap(), sigma(a, &l).unwrap() * sigma(b, &l).unwrap());
        }

        #[test]
        fn jacobi_is_multiplicative_in_top(a in -200i64..200, b in -200i64..200, n in 0i64..200) {
            let n = 2 * n + 1;
            prop_assert_eq!(jacobi(a * b, n).unwrap(), jacobi(a, n).unwrap() * jacobi(b, n).unwrap());
        }
    }
}
