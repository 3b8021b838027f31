//! Representation counts of positive-definite integral quadratic forms and the
//! closed-form evaluators for `sc_4`, `sc_6`, `sc_7` and `sc_8`.

use num_integer::Roots;
use num_rational::Ratio;

use crate::arith::{factorize, jacobi};
use crate::{Error, Limits, Result};

/// `sum_{i<=j} q_ij x_i x_j` in at most four variables.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticForm {
    dim: usize,
    /// Gram matrix `G` with `Q(v) = v^T G v / 2`.
    gram: [[i64; 4]; 4],
    ldl: Vec<(f64, Vec<f64>)>,
}

impl QuadraticForm {
    /// `coeffs` lists `q_11, q_12, .., q_1k, q_22, .., q_kk`.
    pub fn new(dim: usize, coeffs: &[i64]) -> Result<Self> {
        if !(1..=4).contains(&dim) {
            return Err(Error::InvalidArgument(format!("form dimension {dim} not in 1..=4")));
        }
        if coeffs.len() != dim * (dim + 1) / 2 {
            return Err(Error::InvalidArgument(format!(
                "a {dim}-variable form needs {} coefficients, got {}",
                dim * (dim + 1) / 2,
                coeffs.len()
            )));
        }
        let mut gram = [[0i64; 4]; 4];
        let mut it = coeffs.iter();
        for i in 0..dim {
            for j in i..dim {
                let q = *it.next().unwrap();
                if i == j {
                    gram[i][i] = 2 * q;
                } else {
                    gram[i][j] = q;
                    gram[j][i] = q;
                }
            }
        }
        for k in 1..=dim {
            if det(&gram, &(0..k).collect::<Vec<_>>()) <= 0 {
                return Err(Error::NotPositiveDefinite);
            }
        }
        let ldl = ldl(&gram, dim);
        Ok(QuadraticForm { dim, gram, ldl })
    }

    /// Diagonal form `sum a_i x_i^2`.
    pub fn diagonal(a: &[i64]) -> Result<Self> {
        let k = a.len();
        let mut coeffs = Vec::new();
        for i in 0..k {
            for j in i..k {
                coeffs.push(if i == j { a[i] } else { 0 });
            }
        }
        Self::new(k, &coeffs)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eval(&self, v: &[i64]) -> i64 {
        let mut s = 0i64;
        for i in 0..self.dim {
            for j in 0..self.dim {
                s += self.gram[i][j] * v[i] * v[j];
            }
        }
        s / 2
    }

    /// Determinant of the Gram matrix `2A`.
    pub fn gram_det(&self) -> i64 {
        det(&self.gram, &(0..self.dim).collect::<Vec<_>>())
    }

    /// Exact per-coordinate bounds: `|x_i| <= isqrt(2N cof_ii(G) / det G)` on
    /// `Q(v) <= N`.
    pub fn coordinate_bounds(&self, target: u64) -> Vec<u64> {
        let d = self.gram_det() as i128;
        (0..self.dim)
            .map(|i| {
                let rest: Vec<usize> = (0..self.dim).filter(|&j| j != i).collect();
                let cof = if rest.is_empty() { 1 } else { det(&self.gram, &rest) } as i128;
                ((2 * target as i128 * cof / d) as u128).sqrt() as u64
            })
            .collect()
    }
}

fn det(g: &[[i64; 4]; 4], idx: &[usize]) -> i64 {
    minor_det(g, idx, idx)
}

fn minor_det(g: &[[i64; 4]; 4], rows: &[usize], cols: &[usize]) -> i64 {
    if rows.is_empty() {
        return 1;
    }
    let mut s = 0i64;
    for (c, &col) in cols.iter().enumerate() {
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != col).collect();
        let sign = if c % 2 == 0 { 1 } else { -1 };
        s += sign * g[rows[0]][col] * minor_det(g, &rows[1..], &rest);
    }
    s
}

/// `Q(v) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2`.
fn ldl(g: &[[i64; 4]; 4], dim: usize) -> Vec<(f64, Vec<f64>)> {
    let mut a = [[0f64; 4]; 4];
    for i in 0..dim {
        for j in 0..dim {
            a[i][j] = g[i][j] as f64 / 2.0;
        }
    }
    let mut out = Vec::with_capacity(dim);
    for i in 0..dim {
        let d = a[i][i];
        let mu: Vec<f64> = (0..dim).map(|j| if j > i { a[i][j] / d } else { 0.0 }).collect();
        for r in i + 1..dim {
            for c in i + 1..dim {
                a[r][c] -= a[i][r] * a[i][c] / d;
            }
        }
        out.push((d, mu));
    }
    out
}

/// Allowed values of one coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    All,
    NonNegative,
    PositiveOdd,
    Even,
    Odd,
}

impl Domain {
    pub fn admits(self, x: i64) -> bool {
        match self {
            Domain::All => true,
            Domain::NonNegative => x >= 0,
            Domain::PositiveOdd => x > 0 && x % 2 != 0,
            Domain::Even => x % 2 == 0,
            Domain::Odd => x % 2 != 0,
        }
    }
}

/// Independent per-coordinate restrictions on a representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeConstraint {
    pub domains: Vec<Domain>,
}

impl LatticeConstraint {
    pub fn all(dim: usize) -> Self {
        LatticeConstraint {
            domains: vec![Domain::All; dim],
        }
    }

    pub fn uniform(dim: usize, d: Domain) -> Self {
        LatticeConstraint { domains: vec![d; dim] }
    }

    pub fn admits(&self, v: &[i64]) -> bool {
        self.domains.iter().zip(v).all(|(d, &x)| d.admits(x))
    }
}

/// Calls `f` on every `v` with `Q(v) = N` admitted by `c`.
pub fn for_each_representation(q: &QuadraticForm, target: u64, c: &LatticeConstraint, mut f: impl FnMut(&[i64])) {
    assert_eq!(c.domains.len(), q.dim, "constraint dimension mismatch");
    let mut v = vec![0i64; q.dim];
    search(q, target as i64, c, q.dim - 1, target as f64, &mut v, &mut f);
}

fn search(
    q: &QuadraticForm,
    target: i64,
    c: &LatticeConstraint,
    level: usize,
    budget: f64,
    v: &mut [i64],
    f: &mut impl FnMut(&[i64]),
) {
    if level == 0 {
        solve_first(q, target, c, v, f);
        return;
    }
    let (d, mu) = &q.ldl[level];
    let center: f64 = -(level + 1..q.dim).map(|j| mu[j] * v[j] as f64).sum::<f64>();
    let r = (budget.max(0.0) / d).sqrt() + 1e-6;
    let lo = (center - r).ceil() as i64;
    let hi = (center + r).floor() as i64;
    for x in lo..=hi {
        if !c.domains[level].admits(x) {
            continue;
        }
        v[level] = x;
        let y = x as f64 - center;
        let rest = budget - d * y * y;
        if rest < -1e-6 * (1.0 + budget.abs()) {
            continue;
        }
        search(q, target, c, level - 1, rest, v, f);
    }
    v[level] = 0;
}

/// With `x_2..x_k` fixed, `Q = a x_1^2 + b x_1 + c0`; solve `Q = N` exactly.
fn solve_first(q: &QuadraticForm, target: i64, c: &LatticeConstraint, v: &mut [i64], f: &mut impl FnMut(&[i64])) {
    v[0] = 0;
    let a = q.gram[0][0] / 2;
    let b: i64 = (1..q.dim).map(|j| q.gram[0][j] * v[j]).sum();
    let c0 = q.eval(v) - target;
    let disc = b as i128 * b as i128 - 4 * a as i128 * c0 as i128;
    if disc < 0 {
        return;
    }
    let s = disc.sqrt();
    if s * s != disc {
        return;
    }
    let s = s as i64;
    let mut roots = vec![];
    for num in [-b + s, -b - s] {
        if num % (2 * a) == 0 {
            roots.push(num / (2 * a));
        }
    }
    roots.dedup();
    for x in roots {
        if c.domains[0].admits(x) {
            v[0] = x;
            f(v);
        }
    }
    v[0] = 0;
}

/// Number of `v` with `Q(v) = N` admitted by `c`.
pub fn count_representations(q: &QuadraticForm, target: u64, c: &LatticeConstraint) -> u64 {
    let mut n = 0u64;
    for_each_representation(q, target, c, |_| n += 1);
    n
}

/// Same count by scanning the box `|x_i| <= bounds[i]`; the slow reference.
pub fn count_in_box(q: &QuadraticForm, target: u64, c: &LatticeConstraint, bounds: &[u64]) -> u64 {
    let mut v = vec![0i64; q.dim];
    let mut n = 0;
    fn rec(q: &QuadraticForm, t: i64, c: &LatticeConstraint, b: &[u64], i: usize, v: &mut [i64], n: &mut u64) {
        if i == v.len() {
            if q.eval(v) == t && c.admits(v) {
                *n += 1;
            }
            return;
        }
        let r = b[i] as i64;
        for x in -r..=r {
            v[i] = x;
            rec(q, t, c, b, i + 1, v, n);
        }
    }
    rec(q, target as i64, c, bounds, 0, &mut v, &mut n);
    n
}

pub fn form_sc6() -> QuadraticForm {
    QuadraticForm::diagonal(&[3, 32, 96]).unwrap()
}

/// The three ternary forms of the `sc_7` identity.
pub fn forms_sc7() -> [QuadraticForm; 3] {
    [
        QuadraticForm::new(3, &[1, 0, 0, 1, -1, 2]).unwrap(),
        QuadraticForm::new(3, &[1, 0, 0, 4, -4, 8]).unwrap(),
        QuadraticForm::new(3, &[2, 2, 2, 2, 2, 3]).unwrap(),
    ]
}

/// `X^2 + 4Y^2 + 8Z^2 + 8W^2`.
pub fn form_sc8() -> QuadraticForm {
    QuadraticForm::diagonal(&[1, 4, 8, 8]).unwrap()
}

/// `sc_4(n) = #{(x, y) in N^2 : 8n + 5 = x^2 + y^2} / 2`, checked against the
/// divisor formula.
pub fn sc4(n: u64, limits: &Limits) -> Result<u64> {
    let target = 8 * n + 5;
    let q = QuadraticForm::diagonal(&[1, 1])?;
    let count = count_representations(&q, target, &LatticeConstraint::uniform(2, Domain::NonNegative));
    let divisor = sc4_divisor(n, limits)?;
    if !count.is_multiple_of(2) || count / 2 != divisor {
        return Err(Error::InvariantViolation(format!(
            "sc_4({n}): two-squares count {count} vs divisor formula {divisor}"
        )));
    }
    Ok(divisor)
}

/// `prod_{p = 1 mod 4} (e_p + 1) / 2` over `8n + 5`, or 0 when a prime
/// `3 mod 4` has odd exponent.
pub fn sc4_divisor(n: u64, limits: &Limits) -> Result<u64> {
    let f = factorize(8 * n + 5, limits)?;
    let mut prod = 1u64;
    for &(p, e) in &f.factors {
        match p % 4 {
            1 => prod *= e as u64 + 1,
            3 if e % 2 == 1 => return Ok(0),
            _ => {}
        }
    }
    Ok(prod / 2)
}

/// Representations of `24n + 35` by `3x^2 + 32y^2 + 96z^2` over `Z^3`, split by
/// the parity of `y + z`.
fn sc6_counts(n: u64) -> (u64, u64) {
    let (mut odd, mut even) = (0, 0);
    for_each_representation(&form_sc6(), 24 * n + 35, &LatticeConstraint::all(3), |v| {
        if (v[1] + v[2]) % 2 != 0 {
            odd += 1
        } else {
            even += 1
        }
    });
    (odd, even)
}

/// `sc_6(n)`: representations of `24n + 35` by `3x^2 + 32y^2 + 96z^2`, each
/// weighted `1/4` when `y + z` is odd and `1/12` when it is even.
pub fn sc6(n: u64) -> Result<u64> {
    let (odd, even) = sc6_counts(n);
    let num = 3 * odd + even;
    if num % 12 != 0 {
        return Err(Error::InvariantViolation(format!("sc_6({n}): weighted count {num}/12 is not integral")));
    }
    Ok(num / 12)
}

/// `#{Z^3 representations} / 4`.
pub fn sc6_quarter_z3(n: u64) -> Ratio<u64> {
    let (odd, even) = sc6_counts(n);
    Ratio::new(odd + even, 4)
}

/// `#{N^3 representations} / 4`.
pub fn sc6_quarter_n3(n: u64) -> Ratio<u64> {
    Ratio::new(
        count_representations(&form_sc6(), 24 * n + 35, &LatticeConstraint::uniform(3, Domain::NonNegative)),
        4,
    )
}

/// `c_3(n) = sum_{d | 3n+1} (d/3)`.
pub fn c3_divisor(n: u64, limits: &Limits) -> Result<i64> {
    let m = 3 * n + 1;
    let f = factorize(m, limits)?;
    let mut prod = 1i64;
    for &(p, e) in &f.factors {
        prod *= match p % 3 {
            1 => e as i64 + 1,
            2 => (e % 2 == 0) as i64,
            _ => unreachable!(),
        };
    }
    Ok(prod)
}

/// Direct divisor sum, for checking [`c3_divisor`].
pub fn c3_divisor_direct(n: u64) -> i64 {
    let m = 3 * n + 1;
    (1..=m).filter(|d| m.is_multiple_of(*d)).map(|d| jacobi(d as i64, 3).unwrap() as i64).sum()
}

/// `#{3n + 1 = x^2 + 3y^2}` over `Z^2`.
pub fn c3_form_count(n: u64) -> u64 {
    count_representations(&QuadraticForm::diagonal(&[1, 3]).unwrap(), 3 * n + 1, &LatticeConstraint::all(2))
}

/// `x^2 + 3y^2` representations scaled by `1/2` (odd `3n+1`) or `1/6` (even).
pub fn c3_from_form(n: u64) -> Ratio<u64> {
    let r = c3_form_count(n);
    if (3 * n + 1) % 2 == 1 {
        Ratio::new(r, 2)
    } else {
        Ratio::new(r, 6)
    }
}

/// `sc_6(n) = sum_{a >= 0} c_3(m)` over `24n + 35 = 3(2a+1)^2 + 96m + 32`.
pub fn sc6_via_c3(n: u64, limits: &Limits) -> Result<u64> {
    let target = 24 * n + 35;
    let mut total = 0i64;
    let mut x = 1u64;
    while 3 * x * x + 32 <= target {
        let r = target - 3 * x * x - 32;
        if r.is_multiple_of(96) {
            total += c3_divisor(r / 96, limits)?;
        }
        x += 2;
    }
    Ok(total as u64)
}

/// `(r_1 - 2 r_2 + r_3)` at `n + 2` for the three `sc_7` forms.
pub fn sc7_numerator(n: u64) -> i64 {
    let [f1, f2, f3] = forms_sc7();
    let c = LatticeConstraint::all(3);
    let r = |f: &QuadraticForm| count_representations(f, n + 2, &c) as i64;
    r(&f1) - 2 * r(&f2) + r(&f3)
}

/// `sc_7(n) = (r_1 - 2 r_2 + r_3) / 14`.
pub fn sc7(n: u64) -> Result<u64> {
    let num = sc7_numerator(n);
    if num % 14 != 0 || num < 0 {
        return Err(Error::InvariantViolation(format!("sc_7({n}): numerator {num} is not a nonnegative multiple of 14")));
    }
    Ok((num / 14) as u64)
}

/// `sc_8(n)`: representations of `8n + 21` by `X^2 + 4Y^2 + 8Z^2 + 8W^2` with
/// every coordinate positive and odd.
pub fn sc8(n: u64) -> u64 {
    count_representations(&form_sc8(), 8 * n + 21, &LatticeConstraint::uniform(4, Domain::PositiveOdd))
}

/// `#{(x,y,z,w) in N^4 : 8n + 21 = x^2 + y^2 + 2z^2 + 2w^2} / 2`.
pub fn sc8_statement_n4(n: u64) -> Ratio<u64> {
    let q = QuadraticForm::diagonal(&[1, 1, 2, 2]).unwrap();
    Ratio::new(
        count_representations(&q, 8 * n + 21, &LatticeConstraint::uniform(4, Domain::NonNegative)),
        2,
    )
}

/// One row of statement-versus-proof normalizations, compared against a
/// reference count supplied by the caller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizationRow {
    pub n: u64,
    pub reference: u64,
    pub value: Ratio<u64>,
    pub agrees: bool,
}

/// Which displayed normalization to audit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    Sc6QuarterN3,
    Sc6QuarterZ3,
    Sc6Weighted,
    Sc8HalfN4,
    Sc8PositiveOdd,
}

pub fn normalization_audit(which: Normalization, reference: &[u64]) -> Result<Vec<NormalizationRow>> {
    let mut rows = Vec::with_capacity(reference.len());
    for (n, &r) in reference.iter().enumerate() {
        let n = n as u64;
        let value = match which {
            Normalization::Sc6QuarterN3 => sc6_quarter_n3(n),
            Normalization::Sc6QuarterZ3 => sc6_quarter_z3(n),
            Normalization::Sc6Weighted => Ratio::from_integer(sc6(n)?),
            Normalization::Sc8HalfN4 => sc8_statement_n4(n),
            Normalization::Sc8PositiveOdd => Ratio::from_integer(sc8(n)),
        };
        rows.push(NormalizationRow {
            n,
            reference: r,
            agrees: value == Ratio::from_integer(r),
            value,
        });
    }
    Ok(rows)
}

/// Every `N = 24n + 35 <= bound` not represented by `3x^2 + 32y^2 + 96z^2`.
pub fn exceptional_search(bound: u64, limits: &Limits) -> Result<Vec<u64>> {
    limits.check("exceptional search bound", bound as u128, limits.exceptional)?;
    let b = bound as usize;
    let mut hit = vec![false; b + 1];
    let mut x = 0usize;
    while 3 * x * x <= b {
        let mut y = 0usize;
        while 3 * x * x + 32 * y * y <= b {
            let mut z = 0usize;
            loop {
                let v = 3 * x * x + 32 * y * y + 96 * z * z;
                if v > b {
                    break;
                }
                hit[v] = true;
                z += 1;
            }
            y += 1;
        }
        x += 1;
    }
    let q = form_sc6();
    let all = LatticeConstraint::all(3);
    let mut out = Vec::new();
    for m in (35..=b).step_by(24) {
        if !hit[m] {
            if count_representations(&q, m as u64, &all) != 0 {
                return Err(Error::InvariantViolation(format!("{m} flagged unrepresented but has representations")));
            }
            out.push(m as u64);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::sc7_zero_set;
    use crate::combinatorics::oracle_count;
    use crate::qseries::sct_series;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn rejects_indefinite_forms() {
        assert_eq!(QuadraticForm::new(2, &[1, 3, 1]).unwrap_err(), Error::NotPositiveDefinite);
        assert_eq!(QuadraticForm::diagonal(&[1, -1]).unwrap_err(), Error::NotPositiveDefinite);
        assert!(QuadraticForm::new(2, &[1, 1]).is_err());
        assert!(QuadraticForm::new(5, &[1; 15]).is_err());
    }

    #[test]
    fn representation_examples() {
        let all = LatticeConstraint::all(3);
        assert_eq!(count_representations(&form_sc6(), 35, &all), 4);
        let [f1, _, _] = forms_sc7();
        assert_eq!(count_representations(&f1, 2, &all), 8);
        for f in forms_sc7() {
            assert_eq!(count_representations(&f, 0, &all), 1);
        }
        assert_eq!(count_representations(&form_sc8(), 0, &LatticeConstraint::all(4)), 1);
    }

    #[test]
    fn sc7_form_counts_at_small_targets() {
        let all = LatticeConstraint::all(3);
        let [f1, f2, f3] = forms_sc7();
        let r = |f: &QuadraticForm, n| count_representations(f, n, &all);
        assert_eq!((r(&f1, 2), r(&f2, 2), r(&f3, 2)), (8, 0, 6));
        assert_eq!((r(&f1, 4), r(&f2, 4), r(&f3, 4)), (8, 4, 0));
    }

    #[test]
    fn evaluator_examples() {
        let l = l();
        assert_eq!(sc4(0, &l).unwrap(), 1);
        assert_eq!(sc4(2, &l).unwrap(), 0);
        assert_eq!(sc4(5, &l).unwrap(), 1);
        assert_eq!(sc6(0).unwrap(), 1);
        assert_eq!(sc6(1).unwrap(), 1);
        assert_eq!(sc6(2).unwrap(), 0);
        assert_eq!(sc7(0).unwrap(), 1);
        assert_eq!(sc7(1).unwrap(), 1);
        assert_eq!(sc7(2).unwrap(), 0);
        assert_eq!(sc8(0), 1);
        assert_eq!(sc8(1), 1);
        assert_eq!(sc8(2), 0);
    }

    #[test]
    fn evaluators_match_oracle_and_series() {
        let l = l();
        let s: Vec<_> = [4, 6, 7, 8].iter().map(|&t| sct_series(t, 40).unwrap()).collect();
        for n in 0..=40u64 {
            let i = n as usize;
            let got = [sc4(n, &l).unwrap(), sc6(n).unwrap(), sc7(n).unwrap(), sc8(n)];
            for (k, &t) in [4u32, 6, 7, 8].iter().enumerate() {
                let o = oracle_count(n, Some(t), true, &l).unwrap();
                assert_eq!(got[k], o, "t = {t}, n = {n}");
                assert_eq!(s[k].coeff_u64(i), o);
            }
        }
    }

    #[test]
    fn sc6_literal_normalizations_fail() {
        assert_eq!(sc6_quarter_n3(0), Ratio::new(1, 4));
        assert_eq!(sc6_quarter_z3(4), Ratio::from_integer(3));
        assert_eq!(sc6(4).unwrap(), 1);
    }

    #[test]
    fn sc8_statement_fails_at_zero() {
        assert_eq!(sc8_statement_n4(0), Ratio::from_integer(6));
        assert_eq!(sc8(0), 1);
    }

    #[test]
    fn normalization_audit_splits() {
        let reference: Vec<u64> = (0..=10).map(|n| sct_series(6, 10).unwrap().coeff_u64(n)).collect();
        let rows = normalization_audit(Normalization::Sc6Weighted, &reference).unwrap();
        assert!(rows.iter().all(|r| r.agrees));
        let rows = normalization_audit(Normalization::Sc6QuarterN3, &reference).unwrap();
        assert!(!rows[0].agrees);
    }

    #[test]
    fn sc6_weighted_matches_series_to_200() {
        let l = l();
        let s = sct_series(6, 200).unwrap();
        for n in 0..200u64 {
            assert_eq!(sc6(n).unwrap(), s.coeff_u64(n as usize), "n = {n}");
            assert_eq!(sc6_via_c3(n, &l).unwrap(), s.coeff_u64(n as usize), "n = {n}");
        }
    }

    #[test]
    fn sc4_routes_agree_to_200() {
        let l = l();
        let q = QuadraticForm::diagonal(&[1, 1]).unwrap();
        for n in 0..=200u64 {
            let c = count_representations(&q, 8 * n + 5, &LatticeConstraint::uniform(2, Domain::NonNegative));
            assert_eq!(c / 2, sc4_divisor(n, &l).unwrap());
        }
    }

    #[test]
    fn c3_identity_with_parity_factor() {
        let l = l();
        for n in 0..=200u64 {
            let d = c3_divisor(n, &l).unwrap();
            assert_eq!(d, c3_divisor_direct(n));
            assert_eq!(Ratio::from_integer(d as u64), c3_from_form(n), "n = {n}");
        }
    }

    #[test]
    fn c3_half_count_fails_for_even_argument() {
        let l = l();
        assert_eq!(c3_divisor(1, &l).unwrap(), 1);
        assert_eq!(Ratio::new(c3_form_count(1), 2), Ratio::from_integer(3));
    }

    #[test]
    fn sc7_numerator_divisible_and_zero_set() {
        for n in 0..=300u64 {
            let num = sc7_numerator(n);
            assert_eq!(num % 14, 0, "n = {n}");
            assert_eq!(num == 0, sc7_zero_set(n), "n = {n}");
        }
    }

    #[test]
    fn exceptional_search_examples() {
        let l = l();
        let small = exceptional_search(35, &l).unwrap();
        assert!(small.is_empty());
        let found = exceptional_search(20_000, &l).unwrap();
        for &m in &found {
            assert_eq!(m % 24, 11);
            assert_eq!(count_representations(&form_sc6(), m, &LatticeConstraint::all(3)), 0);
        }
        assert!(exceptional_search(2_000_000, &l).is_err());
    }

    #[test]
    fn bounds_are_sound_when_doubled() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let forms = [form_sc6(), forms_sc7()[0].clone(), forms_sc7()[1].clone(), forms_sc7()[2].clone(), form_sc8()];
        for _ in 0..20 {
            let q = &forms[rng.gen_range(0..forms.len())];
            let target = rng.gen_range(0..400u64);
            let c = LatticeConstraint::all(q.dim());
            let b = q.coordinate_bounds(target);
            let doubled: Vec<u64> = b.iter().map(|x| 2 * x + 1).collect();
            let fast = count_representations(q, target, &c);
            assert_eq!(fast, count_in_box(q, target, &c, &b));
            assert_eq!(fast, count_in_box(q, target, &c, &doubled));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn enumeration_matches_box_scan(
            a in 1i64..5, b in -2i64..3, c in 1i64..5, d in -2i64..3, e in -2i64..3, f in 1i64..6,
            target in 0u64..60,
        ) {
            if let Ok(q) = QuadraticForm::new(3, &[a, b, d, c, e, f]) {
                let all = LatticeConstraint::all(3);
                let bounds = q.coordinate_bounds(target);
                prop_assert_eq!(count_representations(&q, target, &all), count_in_box(&q, target, &all, &bounds));
            }
        }
    }
}
