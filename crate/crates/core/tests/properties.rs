//! Randomized invariants for the exact linear algebra, the lattice maps and
//! the counting strategies.

use ivpoly::ehrhart::{CountStrategy, FixedBasis, LatticeCounter};
use ivpoly::family::{apply_t, lattice_bijection, Direction};
use ivpoly::lattice::{self, elementary_divisors, IntVec, RatMat};
use ivpoly::LatticePolytope;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn cofactor_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != c)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let term = BigInt::from(m[0][c]) * cofactor_det(&minor);
            if c % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

fn square(max_n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_n).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-9i64..=9, n), n))
}

fn rect() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=4usize, 1..=4usize)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

fn points(n: usize, max_m: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), 1..=max_m)
}

fn polytope(rows: &[Vec<i64>]) -> LatticePolytope {
    let n = rows[0].len();
    LatticePolytope::from_generators(n, rows.iter().map(|r| IntVec::from_i64s(r)).collect())
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn det_matches_cofactor_expansion(m in square(5)) {
        let d = RatMat::from_int_rows(&m).unwrap().det().unwrap();
        prop_assert!(d.is_integer());
        prop_assert_eq!(d.to_integer(), cofactor_det(&m));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn elementary_divisors_form_a_chain(m in rect()) {
        let mat = RatMat::from_int_rows(&m).unwrap();
        let ds = elementary_divisors(&mat).unwrap();
        let nonzero: Vec<&BigInt> = ds.iter().filter(|d| !d.is_zero()).collect();
        prop_assert_eq!(nonzero.len(), mat.rank());
        prop_assert!(ds.iter().all(|d| !d.is_negative()));
        for w in nonzero.windows(2) {
            prop_assert!(w[1].is_multiple_of(w[0]));
        }
        let g = m.iter().flatten().fold(BigInt::zero(), |acc, &x| acc.gcd(&BigInt::from(x)));
        if !g.is_zero() {
            prop_assert_eq!(nonzero[0], &g);
        }
        if mat.is_square() {
            let prod: BigInt = ds.iter().product();
            prop_assert_eq!(prod, cofactor_det(&m).abs());
        }
    }

    #[test]
    fn affine_dim_ignores_point_order(rows in points(4, 7), seed in any::<u64>()) {
        let pts: Vec<IntVec> = rows.iter().map(|r| IntVec::from_i64s(r)).collect();
        let mut shuffled = pts.clone();
        let len = shuffled.len();
        let mut s = seed;
        for k in (1..len).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(k, (s >> 33) as usize % (k + 1));
        }
        let d = lattice::affine_dim(&pts).unwrap();
        prop_assert_eq!(d, lattice::affine_dim(&shuffled).unwrap());
        let diffs: Vec<Vec<i64>> = rows[1..]
            .iter()
            .map(|r| r.iter().zip(&rows[0]).map(|(a, b)| a - b).collect())
            .collect();
        let rank = if diffs.is_empty() { 0 } else { RatMat::from_int_rows(&diffs).unwrap().rank() };
        prop_assert_eq!(d, rank);
    }

    #[test]
    fn prefix_sum_transform_round_trips(x in prop::collection::vec(-50i64..=50, 1..=8)) {
        let v = IntVec::from_i64s(&x);
        let f = apply_t(&v, Direction::Forward).unwrap();
        let mut acc = 0;
        for (k, c) in x.iter().enumerate() {
            acc += c;
            prop_assert_eq!(&f[k], &BigInt::from(acc));
        }
        prop_assert_eq!(apply_t(&f, Direction::Inverse).unwrap(), v);
    }

    #[test]
    fn zero_sum_bijection_round_trips(x in prop::collection::vec(-50i64..=50, 1..=8)) {
        let mut z = x.clone();
        z.push(-x.iter().sum::<i64>());
        let v = IntVec::from_i64s(&z);
        let img = lattice_bijection(&v, Direction::Forward).unwrap();
        prop_assert_eq!(img.n(), x.len());
        prop_assert_eq!(lattice_bijection(&img, Direction::Inverse).unwrap(), v.clone());
        let back = lattice_bijection(&IntVec::from_i64s(&x), Direction::Inverse).unwrap();
        prop_assert!(back.sum().is_zero());
        prop_assert_eq!(lattice_bijection(&back, Direction::Forward).unwrap(), IntVec::from_i64s(&x));
    }

    #[test]
    fn counting_strategies_agree(rows in points(3, 6), t in 0u64..=3) {
        let p = polytope(&rows);
        let c = LatticeCounter::new(&p).unwrap();
        prop_assert_eq!(c.count(t, CountStrategy::BoundingBox), c.count(t, CountStrategy::FiberPruned));
    }

    #[test]
    fn hrep_contains_exactly_the_hull(rows in points(3, 6), x in prop::collection::vec(-3i64..=3, 3)) {
        let p = polytope(&rows);
        let target = IntVec::from_i64s(&x);
        let inside = lattice::convex_combination(p.vertices(), &target).unwrap().is_some();
        prop_assert_eq!(p.hrep().unwrap().contains(&target), inside);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn fixed_basis_round_trips(y in prop::collection::vec(-20i64..=20, 5)) {
        let fb = FixedBasis::new(7, 2).unwrap();
        let coeffs: Vec<BigInt> = y.iter().map(|&c| BigInt::from(c)).collect();
        let p = fb.reconstruct(&coeffs);
        prop_assert!(fb.contains(&p));
        prop_assert_eq!(fb.decompose(&p).unwrap(), coeffs);
    }

    #[test]
    fn fixed_basis_rejects_off_residue_points(x in prop::collection::vec(-3i64..=3, 7)) {
        let fb = FixedBasis::new(7, 2).unwrap();
        let p = IntVec::from_i64s(&x);
        let odd: i64 = x.iter().step_by(2).sum();
        let even: i64 = x.iter().skip(1).step_by(2).sum();
        prop_assert_eq!(fb.contains(&p), odd == 1 && even == 1);
        prop_assert_eq!(fb.decompose(&p).is_ok(), odd == 1 && even == 1);
    }
}
