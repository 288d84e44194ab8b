//! Independent oracles: Hermite coefficients from the explicit sum, matrix
//! entries from `H_n^{(d)} = 2^d n!/(n-d)! H_{n-d}`, and determinants by
//! permutation expansion.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use hermite_pw::exactpoly::{IntPoly, PolyMatrix};
use hermite_pw::hermite::{
    conj_hermite_poly, equivalence_constant, hermite_poly, is_scalar_multiple, pseudo_wronskian,
};
use hermite_pw::MayaDiagram;

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `H_n = n! Σ_m (-1)^m (2x)^{n-2m} / (m! (n-2m)!)`; the conjugate drops the sign.
fn hermite_sum(n: usize, conjugate: bool) -> IntPoly {
    let mut c = vec![BigInt::zero(); n + 1];
    for m in 0..=n / 2 {
        let k = n - 2 * m;
        let mut v = factorial(n) * (BigInt::one() << k) / (factorial(m) * factorial(k));
        if m % 2 == 1 && !conjugate {
            v = -v;
        }
        c[k] = v;
    }
    IntPoly::from_coeffs(c)
}

fn hermite_derivative(n: usize, d: usize) -> IntPoly {
    if d > n {
        return IntPoly::zero();
    }
    let c = (BigInt::one() << d) * factorial(n) / factorial(n - d);
    hermite_sum(n - d, false).scale(&c)
}

fn leibniz(rows: &[Vec<IntPoly>]) -> IntPoly {
    let n = rows.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = IntPoly::zero();
    permute(&mut perm, 0, rows, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, start: usize, rows: &[Vec<IntPoly>], total: &mut IntPoly) {
    if start == perm.len() {
        let inversions = (0..perm.len())
            .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let mut term = IntPoly::one();
        for (i, &j) in perm.iter().enumerate() {
            term = &term * &rows[i][j];
        }
        *total = if inversions % 2 == 0 { &*total + &term } else { &*total - &term };
        return;
    }
    for i in start..perm.len() {
        perm.swap(start, i);
        permute(perm, start + 1, rows, total);
        perm.swap(start, i);
    }
}

fn oracle_rows(s: &[i64], t: &[i64]) -> Vec<Vec<IntPoly>> {
    let n = s.len() + t.len();
    let mut s = s.to_vec();
    let mut t = t.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    t.sort_unstable();
    let mut rows: Vec<Vec<IntPoly>> = s
        .iter()
        .map(|&si| (0..n).map(|j| hermite_sum(si as usize + j, true)).collect())
        .collect();
    rows.extend(t.iter().map(|&ti| (0..n).map(|d| hermite_derivative(ti as usize, d)).collect()));
    rows
}

fn subset(max: i64) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::btree_set(0..max, 0..4).prop_map(|s| s.into_iter().collect())
}

#[test]
fn hermite_tables_match_explicit_sum() {
    for n in 0..30 {
        assert_eq!(hermite_poly(n), hermite_sum(n, false), "H_{n}");
        assert_eq!(conj_hermite_poly(n), hermite_sum(n, true), "conjugate H_{n}");
        assert_eq!(hermite_poly(n).derivative(2), hermite_derivative(n, 2));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fraction_free_matches_permutation_expansion(
        n in 1usize..6,
        entries in proptest::collection::vec(proptest::collection::vec(-5i64..6, 0..4), 36),
    ) {
        let rows: Vec<Vec<IntPoly>> = (0..n)
            .map(|i| (0..n).map(|j| IntPoly::from_i64s(&entries[i * 6 + j])).collect())
            .collect();
        let m = PolyMatrix::from_rows(rows.clone()).unwrap();
        let expected = leibniz(&rows);
        prop_assert_eq!(m.det_fraction_free().unwrap(), expected.clone());
        prop_assert_eq!(m.det_bareiss().unwrap(), expected);
    }

    #[test]
    fn pseudo_wronskian_matches_oracle(s in subset(7), t in subset(7)) {
        let m = MayaDiagram::from_frobenius(s.clone(), t.clone()).unwrap();
        prop_assert_eq!(pseudo_wronskian(&m), leibniz(&oracle_rows(&s, &t)));
    }

    #[test]
    fn equivalence_constant_matches_direct_ratio(s in subset(8), t in subset(8), k in -8i64..=8) {
        let m = MayaDiagram::from_frobenius(s.clone(), t.clone()).unwrap();
        prop_assume!(m.shift(-k).girth() <= 7);
        let lhs = leibniz(&oracle_rows(&s, &t));
        let shifted = m.shift(-k);
        let rhs = leibniz(&oracle_rows(shifted.s_list(), shifted.t_list()));
        let c = equivalence_constant(&m, k);
        prop_assert!(is_scalar_multiple(&lhs, &c, &rhs), "{} k={} c={}", m, k, c);
    }
}
