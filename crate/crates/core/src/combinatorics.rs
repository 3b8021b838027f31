//! Partitions, hook lengths, conjugation and brute-force core counts.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Limits, Result};

/// An integer partition stored as weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument("partition parts must be weakly decreasing".into()));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_self_conjugate(&self) -> bool {
        conjugate(self) == *self
    }

    /// True when no hook length is divisible by `t`.
    pub fn is_core(&self, t: u32) -> bool {
        let t = t as u64;
        hook_lengths(self).iter().all(|h| h % t != 0)
    }

    /// Builds the self-conjugate partition whose diagonal hooks are the given
    /// distinct odd integers (in any order).
    pub fn from_diagonal_hooks(hooks: &[u32]) -> Result<Self> {
        let mut h: Vec<u32> = hooks.to_vec();
        h.sort_unstable_by(|a, b| b.cmp(a));
        if h.iter().any(|&x| x % 2 == 0) || h.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("diagonal hooks must be distinct odd integers".into()));
        }
        Ok(Partition {
            parts: rows_from_hooks(&h),
        })
    }
}

fn rows_from_hooks(h: &[u32]) -> Vec<u32> {
    let d = h.len();
    if d == 0 {
        return Vec::new();
    }
    let mut rows: Vec<u32> = (0..d).map(|r| r as u32 + h[r].div_ceil(2)).collect();
    let top = rows.clone();
    let mut r = d as u32;
    loop {
        let len = top.iter().filter(|&&x| x > r).count() as u32;
        if len == 0 {
            break;
        }
        rows.push(len);
        r += 1;
    }
    rows
}

/// Column lengths of the Young diagram.
pub fn conjugate(p: &Partition) -> Partition {
    let parts = &p.parts;
    let width = parts.first().copied().unwrap_or(0);
    let mut cols = Vec::with_capacity(width as usize);
    for j in 0..width {
        cols.push(parts.iter().take_while(|&&r| r > j).count() as u32);
    }
    Partition { parts: cols }
}

/// Hook lengths of every box, listed row by row.
pub fn hook_lengths(p: &Partition) -> Vec<u64> {
    let conj = conjugate(p);
    let mut out = Vec::with_capacity(p.n() as usize);
    for (i, &row) in p.parts.iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as u64 - j as u64 - 1;
            let leg = conj.parts[j] as u64 - i as u64 - 1;
            out.push(arm + leg + 1);
        }
    }
    out
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions(n: u64, limits: &Limits) -> Result<Vec<Partition>> {
    limits.check("enumeration n", n as u128, limits.enumeration)?;
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen_partitions(n as u32, n as u32, &mut cur, &mut |parts| {
        out.push(Partition { parts: parts.to_vec() })
    });
    Ok(out)
}

fn gen_partitions(rest: u32, max: u32, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if rest == 0 {
        f(cur);
        return;
    }
    for part in (1..=max.min(rest)).rev() {
        cur.push(part);
        gen_partitions(rest - part, part, cur, f);
        cur.pop();
    }
}

/// All self-conjugate partitions of `n`, via partitions of `n` into distinct
/// odd parts (the diagonal hooks).
pub fn self_conjugate_partitions(n: u64, limits: &Limits) -> Result<Vec<Partition>> {
    limits.check("enumeration n", n as u128, limits.enumeration)?;
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let top = if n % 2 == 1 { n as u32 } else { (n as u32).saturating_sub(1) };
    gen_distinct_odd(n as u32, top, &mut cur, &mut |hooks| {
        out.push(Partition {
            parts: rows_from_hooks(hooks),
        })
    });
    Ok(out)
}

fn gen_distinct_odd(rest: u32, max: u32, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if rest == 0 {
        f(cur);
        return;
    }
    let mut h = max.min(rest);
    if h.is_multiple_of(2) {
        h = h.saturating_sub(1);
    }
    while h >= 1 {
        cur.push(h);
        gen_distinct_odd(rest - h, h.saturating_sub(2), cur, f);
        cur.pop();
        if h < 3 {
            break;
        }
        h -= 2;
    }
}

/// Counts partitions of `n` by enumeration, optionally restricted to
/// `t`-cores and/or self-conjugate partitions. With neither filter this is
/// `p(n)`, computed by the memoized recurrence instead.
pub fn oracle_count(n: u64, t: Option<u32>, self_conjugate: bool, limits: &Limits) -> Result<u64> {
    limits.check("enumeration n", n as u128, limits.enumeration)?;
    if let Some(t) = t {
        if t < 2 {
            return Err(Error::InvalidArgument(format!("core parameter t = {t} must be at least 2")));
        }
    }
    match (t, self_conjugate) {
        (None, false) => Ok(partition_numbers(n as usize)[n as usize]),
        (None, true) => Ok(distinct_odd_counts(n as usize)[n as usize]),
        (Some(t), true) => Ok(self_conjugate_partitions(n, limits)?
            .iter()
            .filter(|p| p.is_core(t))
            .count() as u64),
        (Some(t), false) => {
            let mut count = 0u64;
            let mut cur = Vec::new();
            gen_partitions(n as u32, n as u32, &mut cur, &mut |parts| {
                let p = Partition { parts: parts.to_vec() };
                if p.is_core(t) {
                    count += 1;
                }
            });
            Ok(count)
        }
    }
}

/// `p(0..=n)` by the bounded-part recurrence.
pub fn partition_numbers(n: usize) -> Vec<u64> {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            p[m] += p[m - part];
        }
    }
    p
}

/// `sc(0..=n)`: partitions into distinct odd parts.
pub fn distinct_odd_counts(n: usize) -> Vec<u64> {
    let mut s = vec![0u64; n + 1];
    s[0] = 1;
    for part in (1..=n).step_by(2) {
        for m in (part..=n).rev() {
            s[m] += s[m - part];
        }
    }
    s
}

fn hat_p_table(t: u32, x: usize) -> Vec<BigInt> {
    let p: Vec<BigInt> = partition_numbers(x).into_iter().map(BigInt::from).collect();
    let mut acc = vec![BigInt::zero(); x + 1];
    acc[0] = BigInt::one();
    for _ in 0..t {
        let mut next = vec![BigInt::zero(); x + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..=x - i {
                next[i + j] += a * &p[j];
            }
        }
        acc = next;
    }
    acc
}

/// Number of ordered `t`-tuples of partitions with total size `x`.
pub fn hat_p(t: u32, x: u64, limits: &Limits) -> Result<BigInt> {
    limits.check("hat_p x", x as u128, limits.enumeration)?;
    if t == 0 {
        return Err(Error::InvalidArgument("hat_p needs t >= 1".into()));
    }
    Ok(hat_p_table(t, x as usize).swap_remove(x as usize))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Coefficients of `1 / (1 + sum_{j>=1} a_j x^j)` up to `x^len`, i.e. the sum
/// over compositions of `(-1)^{parts}` times the product of the `a`'s.
fn signed_composition_sum(a: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); len + 1];
    c[0] = BigInt::one();
    for k in 1..=len {
        let mut s = BigInt::zero();
        for i in 1..=k.min(a.len().saturating_sub(1)) {
            s += &a[i] * &c[k - i];
        }
        c[k] = -s;
    }
    c
}

/// `sc_{2t}(n)` or `sc_{2t+1}(n)` from the alternating-composition recursions in
/// `sc(.)` and `hat_p_t(.)`.
pub fn hn_recursion_sc(t_param: u32, parity: Parity, n: u64, limits: &Limits) -> Result<BigInt> {
    limits.check("enumeration n", n as u128, limits.enumeration)?;
    if t_param == 0 {
        return Err(Error::InvalidArgument("recursion needs t >= 1".into()));
    }
    let n = n as usize;
    let sc: Vec<BigInt> = distinct_odd_counts(n).into_iter().map(BigInt::from).collect();
    let hp = hat_p_table(t_param, n);
    let mut total = BigInt::zero();
    match parity {
        Parity::Even => {
            let step = 4 * t_param as usize;
            let kmax = n / step;
            let c = signed_composition_sum(&hp, kmax);
            for (k, ck) in c.iter().enumerate() {
                total += ck * &sc[n - step * k];
            }
        }
        Parity::Odd => {
            let step = 2 * t_param as usize + 1;
            let wmax = n / step;
            let ci = signed_composition_sum(&hp, wmax / 2);
            let cj = signed_composition_sum(&sc, wmax);
            for (k, ck) in ci.iter().enumerate() {
                if ck.is_zero() {
                    continue;
                }
                for l in 0..=wmax - 2 * k {
                    total += ck * &cj[l] * &sc[n - step * (2 * k + l)];
                }
            }
        }
    }
    if total.is_negative() {
        return Err(Error::InvariantViolation(format!("recursion produced a negative count at n = {n}")));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sorted(mut v: Vec<u64>) -> Vec<u64> {
        v.sort_unstable();
        v
    }

    #[test]
    fn hooks_of_small_diagrams() {
        assert_eq!(hook_lengths(&part(&[1])), vec![1]);
        assert_eq!(sorted(hook_lengths(&part(&[2, 1]))), vec![1, 1, 3]);
        assert_eq!(sorted(hook_lengths(&part(&[3, 1, 1]))), vec![1, 1, 2, 2, 5]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&part(&[2, 1])), part(&[2, 1]));
        assert_eq!(conjugate(&part(&[3])), part(&[1, 1, 1]));
        assert_eq!(conjugate(&part(&[3, 1, 1])), part(&[3, 1, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::from_diagonal_hooks(&[3, 3]).is_err());
    }

    #[test]
    fn oracle_examples() {
        let l = Limits::default();
        assert_eq!(oracle_count(0, Some(9), true, &l).unwrap(), 1);
        assert_eq!(oracle_count(2, Some(5), true, &l).unwrap(), 0);
        assert_eq!(oracle_count(2, Some(100), true, &l).unwrap(), 0);
        assert_eq!(oracle_count(6, Some(9), true, &l).unwrap(), 1);
        assert_eq!(oracle_count(8, None, true, &l).unwrap(), 2);
        assert_eq!(oracle_count(10, None, false, &l).unwrap(), 42);
    }

    #[test]
    fn oracle_respects_cap() {
        let l = Limits::default();
        let err = oracle_count(121, Some(9), true, &l).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 120, .. }));
        assert!(oracle_count(3, Some(1), false, &l).is_err());
    }

    #[test]
    fn self_conjugate_fast_path_matches_filter() {
        let l = Limits::default();
        for n in 0..=16 {
            let slow: Vec<Partition> = partitions(n, &l)
                .unwrap()
                .into_iter()
                .filter(|p| p.is_self_conjugate())
                .collect();
            let mut fast = self_conjugate_partitions(n, &l).unwrap();
            let mut slow = slow;
            fast.sort();
            slow.sort();
            assert_eq!(fast, slow, "n = {n}");
        }
    }

    #[test]
    fn hat_p_examples() {
        let l = Limits::default();
        for t in 1..5 {
            assert_eq!(hat_p(t, 0, &l).unwrap(), BigInt::from(1));
        }
        assert_eq!(hat_p(1, 4, &l).unwrap(), BigInt::from(5));
        assert_eq!(hat_p(2, 2, &l).unwrap(), BigInt::from(5));
    }

    #[test]
    fn hat_p_brute_force_pairs() {
        let l = Limits::default();
        for x in 0..=8u64 {
            let mut count = 0u64;
            for a in 0..=x {
                count += partitions(a, &l).unwrap().len() as u64 * partitions(x - a, &l).unwrap().len() as u64;
            }
            assert_eq!(hat_p(2, x, &l).unwrap(), BigInt::from(count));
        }
    }

    #[test]
    fn recursion_examples() {
        let l = Limits::default();
        assert_eq!(hn_recursion_sc(3, Parity::Even, 0, &l).unwrap(), BigInt::from(1));
        assert_eq!(hn_recursion_sc(3, Parity::Even, 1, &l).unwrap(), BigInt::from(1));
        assert_eq!(hn_recursion_sc(4, Parity::Odd, 6, &l).unwrap(), BigInt::from(1));
    }

    #[test]
    fn recursion_matches_oracle() {
        let l = Limits::default();
        for t in 4u32..=13 {
            let (tp, parity) = if t % 2 == 0 { (t / 2, Parity::Even) } else { ((t - 1) / 2, Parity::Odd) };
            for n in 0..=40 {
                let want = oracle_count(n, Some(t), true, &l).unwrap();
                let got = hn_recursion_sc(tp, parity, n, &l).unwrap();
                assert_eq!(got, BigInt::from(want), "t = {t}, n = {n}");
            }
        }
    }

    #[test]
    fn hook_length_formula() {
        let l = Limits::default();
        for n in 0..=8u64 {
            let fact: u64 = (1..=n).product();
            let mut sum_sq = 0u64;
            for p in partitions(n, &l).unwrap() {
                let prod: u64 = hook_lengths(&p).iter().product();
                assert_eq!(fact % prod, 0);
                let dim = fact / prod;
                assert!(dim > 0);
                sum_sq += dim * dim;
            }
            assert_eq!(sum_sq, fact);
        }
    }

    #[test]
    fn conjugation_involution_and_hooks_up_to_20() {
        let l = Limits::default();
        for n in 0..=20 {
            for p in partitions(n, &l).unwrap() {
                let c = conjugate(&p);
                assert_eq!(conjugate(&c), p);
                assert_eq!(sorted(hook_lengths(&p)), sorted(hook_lengths(&c)));
            }
        }
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1u32..12, 0..10).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(p in arb_partition()) {
            prop_assert_eq!(conjugate(&conjugate(&p)), p.clone());
            prop_assert_eq!(conjugate(&p).n(), p.n());
        }

        #[test]
        fn hook_multiset_is_conjugation_invariant(p in arb_partition()) {
            prop_assert_eq!(sorted(hook_lengths(&p)), sorted(hook_lengths(&conjugate(&p))));
            prop_assert_eq!(hook_lengths(&p).len() as u64, p.n());
        }

        #[test]
        fn diagonal_hooks_round_trip(mask in 0u32..(1 << 9)) {
            let hooks: Vec<u32> = (0..9).filter(|i| mask & (1 << i) != 0).map(|i| 2 * i + 1).collect();
            let p = Partition::from_diagonal_hooks(&hooks).unwrap();
            prop_assert!(p.is_self_conjugate());
            prop_assert_eq!(p.n(), hooks.iter().map(|&h| h as u64).sum::<u64>());
        }
    }
}
