use num_bigint::BigInt;
use num_rational::Ratio;

use sccore::arith::{conjecture45_witness, defect_zero_blocks, sc9};
use sccore::circle::{
    c11_certificate, c11_universal_bound, deviation_bound, odd_t_bound, singular_series, singular_series_with,
    tail_bound, InnerSum,
};
use sccore::combinatorics::{hn_recursion_sc, oracle_count, Parity};
use sccore::qseries::{core_series, sct_series};
use sccore::quadforms::{sc4, sc6, sc6_via_c3, sc7, sc8};
use sccore::Limits;

fn wide() -> Limits {
    Limits {
        enumeration: 200,
        ..Limits::default()
    }
}

#[test]
fn series_matches_recursion_to_150() {
    let l = wide();
    for t in 4..=13u32 {
        let s = sct_series(t, 151).unwrap();
        let parity = if t % 2 == 0 { Parity::Even } else { Parity::Odd };
        for n in 0..=150u64 {
            let r = hn_recursion_sc(t / 2, parity, n, &l).unwrap();
            assert_eq!(&r, s.coeff(n as usize).unwrap(), "t={t} n={n}");
        }
    }
}

#[test]
fn formulas_match_series_to_300() {
    let l = Limits::default();
    let series: Vec<_> = [4u32, 6, 7, 8, 9].iter().map(|&t| sct_series(t, 301).unwrap()).collect();
    for n in 0..=300u64 {
        let i = n as usize;
        assert_eq!(sc4(n, &l).unwrap(), series[0].coeff_u64(i), "sc4({n})");
        assert_eq!(sc6(n).unwrap(), series[1].coeff_u64(i), "sc6({n})");
        assert_eq!(sc6_via_c3(n, &l).unwrap(), series[1].coeff_u64(i), "sc6 via c3 ({n})");
        assert_eq!(sc7(n).unwrap(), series[2].coeff_u64(i), "sc7({n})");
        assert_eq!(sc8(n), series[3].coeff_u64(i), "sc8({n})");
        assert_eq!(sc9(n, &l).unwrap(), series[4].coeff_u64(i), "sc9({n})");
    }
}

#[test]
fn defect_zero_blocks_examples_and_integrality() {
    let l = Limits::default();
    assert_eq!(defect_zero_blocks(11, 0, &l).unwrap(), 2);
    assert_eq!(defect_zero_blocks(7, 2, &l).unwrap(), 1);
    assert_eq!(defect_zero_blocks(11, 2, &l).unwrap(), 1);
    for p in [7u32, 11, 13] {
        let c = core_series(p, 61).unwrap();
        let s = sct_series(p, 61).unwrap();
        for n in 0..=60u64 {
            let (cp, scp) = (c.coeff_u64(n as usize), s.coeff_u64(n as usize));
            assert_eq!((cp + scp) % 2, 0, "p={p} n={n}");
            assert_eq!(defect_zero_blocks(p, n, &l).unwrap(), (cp + 3 * scp) / 2);
        }
    }
    assert!(defect_zero_blocks(5, 0, &l).is_err());
}

#[test]
fn oracle_core_counts_match_series() {
    let l = Limits::default();
    for t in [2u32, 3, 5] {
        let c = core_series(t, 21).unwrap();
        for n in 0..=20u64 {
            assert_eq!(oracle_count(n, Some(t), false, &l).unwrap(), c.coeff_u64(n as usize), "c_{t}({n})");
        }
    }
}

#[test]
fn singular_series_partial_sums_are_cauchy() {
    for t in 10..=13u32 {
        for n in [0u64, 17, 100] {
            let a = singular_series(t, n, 200).unwrap();
            let b = singular_series(t, n, 400).unwrap();
            assert!(
                (a.value - b.value).norm() <= tail_bound(t, 200),
                "t={t} n={n}: {} vs {}",
                a.value,
                b.value
            );
        }
    }
}

#[test]
fn odd_t_zeta_bound() {
    for t in [13u32, 15, 17] {
        for n in 0..=30u64 {
            let s = singular_series(t, n, 150).unwrap();
            assert!((s.value - 1.0).norm() <= odd_t_bound(t) + s.tail_bound, "t={t} n={n}");
            assert_eq!(deviation_bound(t), Some(odd_t_bound(t)));
        }
    }
}

#[test]
fn c11_gauss_path_and_certificate() {
    let l = Limits::default();
    for n in 0..=60u64 {
        let direct = singular_series_with(11, n, 120, InnerSum::Direct).unwrap();
        let gauss = singular_series_with(11, n, 120, InnerSum::Gauss).unwrap();
        assert!((direct.value - gauss.value).norm() < 1e-9, "n={n}");
        let c = c11_certificate(n, 120, &l).unwrap();
        assert!(c.within_universal, "n={n} bound {}", c.bound);
        assert!(c.series_within_bound, "n={n} deviation {}", c.deviation);
        assert!(c.bound <= c11_universal_bound() + 1e-12);
    }
}

#[test]
fn witness_sigma_ratio_floor() {
    let l = Limits {
        point_count: 50_000_000,
        ..Limits::default()
    };
    for x in [13u64, 17] {
        let w = conjecture45_witness(x, &l).unwrap();
        assert_eq!(3 * w.n_x + 10, w.big_n);
        assert!(w.sigma_ratio >= Ratio::new(1767, 1225), "X={x}");
        assert_eq!(w.ratios.len(), 4);
    }
    let w = conjecture45_witness(13, &l).unwrap();
    assert_eq!(w.n_prime, 1225 * 11 * 13);
    assert!(w.doubled);
    assert!(matches!(
        conjecture45_witness(17, &Limits::default()),
        Err(sccore::Error::CapExceeded { .. })
    ));
}

#[test]
fn recursion_small_values() {
    let l = Limits::default();
    assert_eq!(hn_recursion_sc(4, Parity::Even, 0, &l).unwrap(), BigInt::from(1));
    assert!(hn_recursion_sc(4, Parity::Even, 500, &l).is_err());
}
