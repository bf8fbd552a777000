//! Acceptance suite: one test per criterion, every check exact (integer or
//! rational equality, never a floating-point tolerance). Each test prints a
//! single pass line; run with `--nocapture` to see them all:
//!
//! ```text
//! cargo test -p chebfrac-core --test acceptance -- --nocapture
//! ```

use std::time::Instant;

use chebfrac_core::{
    cheb, cheb_coeffs_binomial, cheb_eval_big, cheb_eval_elem, convergents, f_eval,
    gap_certificate, identity_sweep, lu_check, params, quadratic_residual_sides, rat, s_closed,
    s_eval, s_recursive, s_series, sequences, surd_expand, triangle, u_ratio_expansion, ChebKind,
    CountingRing, FParams, IdentityTag, Int, ModRing, Params, Rat, Ring, SeqName,
};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pass(n: u32, what: &str) {
    println!("[PASS] criterion {n}: {what}");
}

/// Criterion 1: the first nine triangle rows, 45 integers, exactly.
#[test]
fn criterion_01_triangle_golden_rows() {
    let golden: [&[i64]; 9] = [
        &[1],
        &[-1, 1],
        &[1, 0, 1],
        &[-1, 1, 1, 1],
        &[1, 0, 2, 2, 1],
        &[-1, 1, 2, 4, 3, 1],
        &[1, 0, 3, 6, 7, 4, 1],
        &[-1, 1, 3, 9, 13, 11, 5, 1],
        &[1, 0, 4, 12, 22, 24, 16, 6, 1],
    ];
    let tri = triangle(9);
    assert_eq!(tri.num_rows(), 9);
    let mut checked = 0usize;
    for (i, row) in golden.iter().enumerate() {
        let want: Vec<Int> = row.iter().map(|&v| Int::from(v)).collect();
        assert_eq!(tri.rows()[i], want, "row {i}");
        checked += row.len();
    }
    assert_eq!(checked, 45);
    pass(1, "triangle(9) reproduces all 45 golden entries");
}

/// Criterion 2: the five derived sequences, exactly.
#[test]
fn criterion_02_sequence_golden_values() {
    let cases: [(SeqName, &[i64]); 5] = [
        (SeqName::RowSums, &[1, 0, 2, 2, 6, 10, 22]),
        (SeqName::Central, &[1, 0, 2, 6, 22, 80, 296, 1106]),
        (SeqName::WeightKPlus1, &[1, 1, 4, 8, 20, 44, 100]),
        (
            SeqName::WeightKMinus1,
            &[0, 0, 1, 3, 9, 23, 57, 135, 313, 711],
        ),
        (SeqName::Weight2KPlus1, &[1, 2, 6, 14, 34, 78, 178]),
    ];
    for (name, want) in cases {
        let got = sequences(name, want.len() as i64).unwrap();
        let want: Vec<Int> = want.iter().map(|&v| Int::from(v)).collect();
        assert_eq!(got, want, "{name}");
    }
    pass(2, "all five sequence prefixes match their golden values");
}

/// Criterion 3: exhaustive identity sweeps over all ten tags, ~500 tuples,
/// zero counterexamples, exact polynomial equality.
#[test]
fn criterion_03_identity_sweeps_clean() {
    let boxes: [(IdentityTag, Params); 10] = [
        (
            IdentityTag::VajdaUU,
            params(&[("n", 5), ("i", 3), ("j", 3)]),
        ),
        (
            IdentityTag::VajdaTT,
            params(&[("n", 5), ("i", 3), ("j", 3)]),
        ),
        (
            IdentityTag::VajdaTUU,
            params(&[("n", 5), ("i", 3), ("j", 3)]),
        ),
        (
            IdentityTag::VajdaTUT,
            params(&[("n", 5), ("i", 3), ("j", 3)]),
        ),
        (
            IdentityTag::VajdaPell,
            params(&[("n", 5), ("i", 3), ("j", 3)]),
        ),
        (IdentityTag::LemUT, params(&[("d", 10)])),
        (IdentityTag::LemUU, params(&[("d", 10)])),
        (IdentityTag::Lem2TU, params(&[("n", 8), ("d", 8)])),
        (IdentityTag::LemDouble, params(&[("n", 12)])),
        (IdentityTag::LemCompose, params(&[("n", 6), ("d", 5)])),
    ];
    let mut total = 0u64;
    for (tag, bounds) in &boxes {
        let report = identity_sweep(*tag, bounds).unwrap();
        assert!(
            report.is_clean(),
            "{}",
            report
                .counterexamples
                .iter()
                .map(|c| c.line(*tag))
                .collect::<Vec<_>>()
                .join("\n")
        );
        total += report.tuples_checked;
    }
    assert_eq!(total, 502);
    pass(3, "10 identity sweeps clean over 502 tuples");
}

fn desk_scale_pairs() -> Vec<(i64, i64)> {
    let mut pairs = Vec::new();
    for d in 1i64..=63 {
        let mut n = 0i64;
        loop {
            let exponent = (d + 1).checked_pow((n + 1) as u32);
            match exponent {
                Some(e) if e <= 64 => pairs.push((n, d)),
                _ => break,
            }
            n += 1;
        }
    }
    pairs
}

/// Criterion 4: the cleared quadratic identity for every pair at desk scale.
#[test]
fn criterion_04_quadratic_identity_desk_scale() {
    let pairs = desk_scale_pairs();
    assert!(pairs.contains(&(5, 1)) && pairs.contains(&(0, 63)));
    for &(n, d) in &pairs {
        let (lhs, rhs) = quadratic_residual_sides(n, d).unwrap();
        assert_eq!(lhs, rhs, "cleared sides differ at n={n} d={d}");
    }
    pass(
        4,
        "quadratic residual identity holds (cleared sides equal) on the desk-scale grid",
    );
}

/// Criterion 5: the three construction routes agree as canonical
/// rational functions on the same grid.
#[test]
fn criterion_05_route_equivalence() {
    for (n, d) in desk_scale_pairs() {
        let series = s_series(n, d).unwrap();
        let recursive = s_recursive(n, d).unwrap();
        let closed = s_closed(n, d).unwrap();
        assert_eq!(series, recursive, "series vs recursive at n={n} d={d}");
        assert_eq!(recursive, closed, "recursive vs closed at n={n} d={d}");
    }
    pass(
        5,
        "sum, recursion, and closed-form routes agree on the desk-scale grid",
    );
}

/// Criterion 6: the structured expansion evaluates to U_n(x)/U_{n+1}(x).
#[test]
fn criterion_06_structured_expansion_values() {
    for x in 2i64..=10 {
        for n in 0i64..=40 {
            let cf = u_ratio_expansion(n, x).unwrap();
            let num = cheb_eval_big(ChebKind::SecondKind, &Int::from(n), &rat(x, 1)).unwrap();
            let den = cheb_eval_big(ChebKind::SecondKind, &Int::from(n + 1), &rat(x, 1)).unwrap();
            assert_eq!(cf.eval(), num / den, "n={n} x={x}");
        }
    }
    pass(
        6,
        "structured expansion equals the second-kind ratio for n <= 40, x <= 10",
    );
}

/// Criterion 7: every evaluated approximant appears among the surd's
/// convergents — exact membership.
#[test]
fn criterion_07_convergent_membership() {
    for x in 2i64..=6 {
        let cf = surd_expand(x, 64).unwrap();
        let convs = convergents(&cf);
        for d in 1i64..=2 {
            for n in 0i64..=2 {
                let value = s_eval(n, d, &rat(x, 1)).unwrap();
                assert!(
                    convs.contains(&value),
                    "S_({n},{d})({x}) = {value} missing from convergents"
                );
            }
        }
    }
    pass(
        7,
        "evaluated approximants are convergents of the surd expansion",
    );
}

/// Criterion 8: the gap certificate is positive and strictly shrinks along
/// both parameters — exact rational comparisons.
#[test]
fn criterion_08_gap_monotone() {
    for x in [rat(2, 1), rat(3, 1), rat(5, 2), rat(-3, 1)] {
        let along_n: Vec<Rat> = (0..=2)
            .map(|n| gap_certificate(n, 1, &x).unwrap())
            .collect();
        let along_d: Vec<Rat> = (1..=3)
            .map(|d| gap_certificate(0, d, &x).unwrap())
            .collect();
        for g in along_n.iter().chain(&along_d) {
            assert!(g.is_positive(), "gap must be positive at x={x}");
        }
        assert!(
            along_n[0] > along_n[1] && along_n[1] > along_n[2],
            "gap not strictly decreasing in n at x={x}"
        );
        assert!(
            along_d[0] > along_d[1] && along_d[1] > along_d[2],
            "gap not strictly decreasing in d at x={x}"
        );
    }
    pass(
        8,
        "gap certificates positive and strictly decreasing in n and d",
    );
}

/// Criterion 9: the two-binomial sum is constant in x — 50 random
/// parameter triples, five x values each, exact equality.
#[test]
fn criterion_09_constant_in_x() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let random_rat =
        |rng: &mut ChaCha8Rng| -> Rat { rat(rng.gen_range(-24i64..=24), rng.gen_range(1i64..=6)) };
    for trial in 0..50 {
        let a = random_rat(&mut rng);
        let d = random_rat(&mut rng);
        let m = rng.gen_range(0u32..=8);
        let reference = f_eval(&FParams::new(a.clone(), d.clone(), m, Rat::zero()));
        let mut seen = vec![Rat::zero()];
        for _ in 0..5 {
            let mut x = random_rat(&mut rng);
            while seen.contains(&x) {
                x = random_rat(&mut rng);
            }
            seen.push(x.clone());
            let value = f_eval(&FParams::new(a.clone(), d.clone(), m, x.clone()));
            assert_eq!(
                value, reference,
                "trial {trial}: f moved under x -> {x} (a={a}, d={d}, m={m})"
            );
        }
    }
    pass(
        9,
        "sum constant in x across 50 random triples, 5 points each",
    );
}

/// Criterion 10: M = LU entrywise and unit leading determinants, for the
/// alternating seed plus five random seeds, size 12.
#[test]
fn criterion_10_lu_factorization() {
    let size = 12;
    let alternating: Vec<Int> = (0..size)
        .map(|i| Int::from(if i % 2 == 0 { 1 } else { -1 }))
        .collect();
    let mut seeds = vec![alternating];
    let mut rng = ChaCha8Rng::seed_from_u64(0xa1fa);
    for _ in 0..5 {
        let mut alpha = vec![Int::one()];
        alpha.extend((1..size).map(|_| Int::from(rng.gen_range(-9i64..=9))));
        seeds.push(alpha);
    }
    for alpha in &seeds {
        let report = lu_check(alpha, size).unwrap();
        assert!(
            report.holds(),
            "M != LU at entries {:?} for alpha = {alpha:?}",
            report.mismatches
        );
        assert_eq!(report.dets, vec![Int::one(); size]);
    }
    pass(
        10,
        "M = LU with unit leading determinants for 6 seeds at size 12",
    );
}

/// Criterion 11: the closed-form coefficient expansions reproduce the
/// recurrence polynomials for n <= 200, both kinds.
#[test]
fn criterion_11_coefficient_formulas() {
    for kind in [ChebKind::FirstKind, ChebKind::SecondKind] {
        for n in 0..=200 {
            assert_eq!(
                cheb_coeffs_binomial(kind, n).unwrap(),
                cheb(kind, n).unwrap(),
                "{kind}_{n}"
            );
        }
    }
    pass(
        11,
        "binomial-coefficient expansions equal recurrence output for n <= 200",
    );
}

/// Criterion 12: scale check at n = 10^9. The transfer-matrix evaluator
/// runs in O(log n) ring operations; with unit-cost ring operations
/// (several prime moduli, so every step is exact machine arithmetic) the
/// evaluation of U_n(3) completes far inside one second, and the doubling
/// identity U_{2n-1} = 2 T_n U_{n-1} holds exactly in every ring. A smaller
/// huge index cross-checks the modular images against the exact integer
/// route computed by the same powering code.
#[test]
fn criterion_12_scale_check() {
    let n: u64 = 1_000_000_000;
    let moduli: [u64; 3] = [
        (1 << 61) - 1,
        999_999_999_999_999_989,
        9_223_372_036_854_775_783,
    ];

    let started = Instant::now();
    let mut ops_seen = 0u64;
    for &m in &moduli {
        let ring = ModRing::new(m);
        let counting = CountingRing::new(&ring);
        let x = counting.embed(&Int::from(3));

        let u_n = cheb_eval_elem(&counting, ChebKind::SecondKind, &Int::from(n), &x);
        ops_seen = counting.ops();

        // doubling identity, every operand from an independent powering run
        let u_2nm1 = cheb_eval_elem(&ring, ChebKind::SecondKind, &Int::from(2 * n - 1), &x);
        let t_n = cheb_eval_elem(&ring, ChebKind::FirstKind, &Int::from(n), &x);
        let u_nm1 = cheb_eval_elem(&ring, ChebKind::SecondKind, &Int::from(n - 1), &x);
        assert_eq!(
            u_2nm1,
            ring.mul(&ring.add(&t_n, &t_n), &u_nm1),
            "doubling identity failed mod {m}"
        );

        // and U_n itself agrees with the recurrence one step up:
        // U_{n+1} = 6 U_n - U_{n-1} at x = 3
        let u_np1 = cheb_eval_elem(&ring, ChebKind::SecondKind, &Int::from(n + 1), &x);
        let six = ring.embed(&Int::from(6));
        assert_eq!(u_np1, ring.sub(&ring.mul(&six, &u_n), &u_nm1));
    }
    let elapsed = started.elapsed();

    // ~30 squarings of a 2x2 matrix: comfortably below 2^11 ring operations
    assert!(
        ops_seen <= 2048,
        "expected O(log n) ring operations, saw {ops_seen}"
    );
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "scale check took {elapsed:?}, the budget is one second"
    );

    // exact-integer route at a smaller huge index, cross-checked mod p
    let small_huge = Int::from(100_000u64);
    let exact = cheb_eval_big(ChebKind::SecondKind, &small_huge, &rat(3, 1)).unwrap();
    assert!(exact.is_integer());
    for &m in &moduli {
        let ring = ModRing::new(m);
        let x = ring.embed(&Int::from(3));
        assert_eq!(
            cheb_eval_elem(&ring, ChebKind::SecondKind, &small_huge, &x),
            ring.embed(&exact.to_integer()),
            "modular image disagrees with the exact route mod {m}"
        );
    }

    pass(
        12,
        &format!(
            "U_1e9(3): {ops_seen} ring ops per modulus, 3 moduli in {elapsed:?}; doubling identity exact"
        ),
    );
}
