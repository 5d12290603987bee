//! Normal forms checked against independent oracles.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use symcanon::matrix::IntMatrix;
use symcanon::normal_forms::{gcd_row_completion, skew_frobenius, smith_normal_form, symplectic_gcd_completion};
use symcanon::matrix::is_symplectic;

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

// Cofactor expansion, independent of the Bareiss routine.
fn det_cofactor(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = &m[0][j] * det_cofactor(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `dᵢ = Δᵢ / Δᵢ₋₁` where `Δᵢ` is the gcd of all `i × i` minors.
fn smith_divisors_by_minors(a: &IntMatrix) -> Vec<BigInt> {
    let rows = a.to_rows();
    let r = a.rows().min(a.cols());
    let mut prev = BigInt::from(1);
    let mut out = Vec::new();
    for k in 1..=r {
        let mut g = BigInt::zero();
        for rs in combinations(a.rows(), k) {
            for cs in combinations(a.cols(), k) {
                let sub: Vec<Vec<BigInt>> =
                    rs.iter().map(|&i| cs.iter().map(|&j| rows[i][j].clone()).collect()).collect();
                g = g.gcd(&det_cofactor(&sub));
            }
        }
        if g.is_zero() {
            out.push(BigInt::zero());
            prev = BigInt::zero();
        } else {
            out.push(&g / &prev);
            prev = g;
        }
    }
    out
}

fn matrix_strategy(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c)
            .prop_map(move |v| IntMatrix::new(r, c, v.into_iter().map(BigInt::from).collect()).unwrap())
    })
}

fn skew_strategy(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim).prop_flat_map(move |n| {
        prop::collection::vec(-bound..=bound, n * n).prop_map(move |v| {
            let mut m = IntMatrix::zeros(n, n);
            for i in 0..n {
                for j in i + 1..n {
                    m[(i, j)] = BigInt::from(v[i * n + j]);
                    m[(j, i)] = -BigInt::from(v[i * n + j]);
                }
            }
            m
        })
    })
}

#[test]
fn minor_oracle_frozen_values() {
    assert_eq!(smith_divisors_by_minors(&IntMatrix::diagonal([2, 3])), vec![BigInt::from(1), BigInt::from(6)]);
    assert_eq!(
        smith_divisors_by_minors(&IntMatrix::from_rows([[2, 4], [6, 8]])),
        vec![BigInt::from(2), BigInt::from(4)]
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_matches_minor_oracle(a in matrix_strategy(4, 20)) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(&(&s.u * &a) * &s.v, s.d.clone());
        prop_assert!(s.u.is_unimodular() && s.v.is_unimodular());
        prop_assert_eq!(s.divisors(), smith_divisors_by_minors(&a));
    }

    #[test]
    fn skew_frobenius_reconstructs(c in skew_strategy(8, 9)) {
        let f = skew_frobenius(&c).unwrap();
        prop_assert_eq!(&(&f.u.transpose() * &f.d) * &f.u, c.clone());
        prop_assert!(f.u.is_unimodular());
        prop_assert_eq!(f.rank(), smith_normal_form(&c).rank());
        let content = c.entries().iter().fold(BigInt::zero(), |g, e| g.gcd(e));
        if let Some(d1) = f.divisors.first() {
            prop_assert_eq!(d1, &content);
        }
        for w in f.divisors.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
    }

    #[test]
    fn gcd_completions(x in prop::collection::vec(-50i64..=50, 1..8)) {
        let x: Vec<BigInt> = x.into_iter().map(BigInt::from).collect();
        let expect = x.iter().fold(BigInt::zero(), |g, e| g.gcd(e));
        let (u, d) = gcd_row_completion(&x);
        prop_assert_eq!(&d, &expect);
        prop_assert!(u.is_unimodular());
        let row = &IntMatrix::from_rows([x.clone()]) * &u;
        prop_assert_eq!(&row[(0, 0)], &d);
        prop_assert!(row.row(0)[1..].iter().all(Zero::is_zero));

        if x.len() % 2 == 0 {
            let (s, d) = symplectic_gcd_completion(&x).unwrap();
            prop_assert_eq!(&d, &expect);
            prop_assert!(is_symplectic(&s, x.len() / 2).unwrap());
            let row = &IntMatrix::from_rows([x.clone()]) * &s;
            prop_assert_eq!(&row[(0, 0)], &d);
            prop_assert!(row.row(0)[1..].iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn unimodular_inverse_round_trip(seed in any::<u64>(), n in 1usize..7) {
        let cfg = symcanon::testgen::GenConfig::with_seed(seed);
        let u = symcanon::testgen::random_unimodular(n, &cfg);
        let inv = u.inverse_unimodular().unwrap();
        prop_assert!((&inv * &u).is_identity());
        prop_assert!(u.determinant().unwrap().abs() == BigInt::from(1));
    }

    #[test]
    fn symplectic_closed_under_products(s1 in any::<u64>(), s2 in any::<u64>(), g in 1usize..5) {
        let a = symcanon::testgen::random_symplectic(g, &symcanon::testgen::GenConfig::with_seed(s1));
        let b = symcanon::testgen::random_symplectic(g, &symcanon::testgen::GenConfig::with_seed(s2));
        prop_assert!(is_symplectic(&(&a * &b), g).unwrap());
        prop_assert!(is_symplectic(&a.inverse_unimodular().unwrap(), g).unwrap());
    }
}
