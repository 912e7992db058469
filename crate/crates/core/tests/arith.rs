use mq_core::arith::{
    reduce_mod_p, subspace_intersection_dim, CycNum, Cyclotomic3, ExactMatrix, Field, PrimeField, Rational, Rationals,
};
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn cyc() -> impl Strategy<Value = CycNum> {
    (rat(), rat()).prop_map(|(a, b)| CycNum::new(a, b))
}

// Denominators avoid 7, 13 and 31.
fn cyc_reducible() -> impl Strategy<Value = CycNum> {
    let r = (-40i64..=40, 1i64..=6).prop_map(|(n, d)| Rational::new(n.into(), d.into()));
    (r.clone(), r).prop_map(|(a, b)| CycNum::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn cyclotomic_field_axioms(a in cyc(), b in cyc(), c in cyc()) {
        let f = Cyclotomic3;
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.add(&a, &f.zero()), a.clone());
        prop_assert_eq!(f.mul(&a, &f.one()), a.clone());
        prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        if !a.is_zero() {
            let inv = f.inv(&a).unwrap();
            prop_assert!(f.is_one(&f.mul(&a, &inv)));
        } else {
            prop_assert!(f.inv(&a).is_err());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn norm_is_multiplicative(a in cyc(), b in cyc()) {
        let f = Cyclotomic3;
        prop_assert_eq!(f.mul(&a, &b).norm(), a.norm() * b.norm());
        prop_assert!(a.norm() >= Rational::zero());
    }

    #[test]
    fn reduction_is_a_ring_map(a in cyc_reducible(), b in cyc_reducible(), idx in 0usize..3) {
        let (p, z) = [(7u64, 2u64), (13, 3), (31, 5)][idx];
        let fp = PrimeField::cyclotomic(p).unwrap();
        let f = Cyclotomic3;
        let ra = reduce_mod_p(&a, p, z).unwrap();
        let rb = reduce_mod_p(&b, p, z).unwrap();
        prop_assert_eq!(reduce_mod_p(&f.add(&a, &b), p, z).unwrap(), fp.add(&ra, &rb));
        prop_assert_eq!(reduce_mod_p(&f.mul(&a, &b), p, z).unwrap(), fp.mul(&ra, &rb));
        prop_assert_eq!(reduce_mod_p(&CycNum::zeta(), p, z).unwrap(), fp.elem(z));
    }
}

#[test]
fn zeta_relations() {
    let f = Cyclotomic3;
    let z = CycNum::zeta();
    assert!(f.is_one(&f.pow(&z, 3)));
    assert!(f.is_zero(&f.add(&f.add(&f.one(), &z), &f.mul(&z, &z))));
    for (p, z) in [(7u64, 2u64), (13, 3), (31, 5)] {
        let fp = PrimeField::cyclotomic(p).unwrap();
        assert_eq!(fp.smallest_cube_root().unwrap().value(), z);
        assert!(fp.is_primitive_cube_root(fp.elem(z)));
    }
    assert!(PrimeField::cyclotomic(11).is_err());
    assert!(PrimeField::new(15).is_err());
}

fn int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

fn to_exact(rows: &[Vec<i64>]) -> ExactMatrix<Rationals> {
    ExactMatrix::from_rows(
        Rationals,
        rows[0].len(),
        rows.iter().map(|r| r.iter().map(|&x| Rationals.from_i64(x)).collect()).collect(),
    )
    .unwrap()
}

// Textbook Gauss-Jordan on BigRational, independent of the crate.
fn gauss_jordan_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let (nr, nc) = (m.len(), m[0].len());
    let mut rank = 0;
    for col in 0..nc {
        let Some(piv) = (rank..nr).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(rank, piv);
        let lead = m[rank][col].clone();
        for x in m[rank].iter_mut() {
            *x = &*x / &lead;
        }
        for i in 0..nr {
            if i != rank && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for j in 0..nc {
                    let v = &m[rank][j] * &factor;
                    m[i][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn laplace_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0] as i128;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] as i128 * laplace_det(&minor)
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bareiss_rank_matches_gauss_jordan(rows in int_matrix()) {
        let m = to_exact(&rows);
        prop_assert_eq!(m.rank(), gauss_jordan_rank(&rows));
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(m.rank() + m.kernel_dim(), rows[0].len());
    }

    #[test]
    fn rank_invariant_under_row_operations(rows in int_matrix(), a in 0usize..5, b in 0usize..5, k in -4i64..=4, s in 1i64..=5) {
        let n = rows.len();
        let (a, b) = (a % n, b % n);
        let before = to_exact(&rows).rank();
        let mut swapped = rows.clone();
        swapped.swap(a, b);
        prop_assert_eq!(to_exact(&swapped).rank(), before);
        let mut scaled = rows.clone();
        scaled[a].iter_mut().for_each(|x| *x *= -s);
        prop_assert_eq!(to_exact(&scaled).rank(), before);
        if a != b {
            let mut sheared = rows.clone();
            let src = rows[b].clone();
            sheared[a].iter_mut().zip(src).for_each(|(x, y)| *x += k * y);
            prop_assert_eq!(to_exact(&sheared).rank(), before);
        }
    }

    #[test]
    fn determinant_matches_laplace(n in 1usize..=5, seed in prop::collection::vec(-5i64..=5, 25)) {
        let rows: Vec<Vec<i64>> = (0..n).map(|i| seed[i * n..(i + 1) * n].to_vec()).collect();
        let det = to_exact(&rows).determinant().unwrap();
        prop_assert_eq!(det, BigRational::from_integer(laplace_det(&rows).into()));
    }

    #[test]
    fn intersection_dim_bounds(u in int_matrix(), extra in prop::collection::vec(-3i64..=3, 5)) {
        let cols = u[0].len();
        let w_rows = vec![extra[..cols].to_vec(), u[0].clone()];
        let (um, wm) = (to_exact(&u), to_exact(&w_rows));
        let d = subspace_intersection_dim(&um, &wm).unwrap();
        prop_assert!(d <= um.rank().min(wm.rank()));
        // W contains the first row of U.
        if u[0].iter().any(|&x| x != 0) {
            prop_assert!(d >= 1);
        }
        prop_assert_eq!(subspace_intersection_dim(&um, &um).unwrap(), um.rank());
    }
}

#[test]
fn kernel_basis_vectors_are_in_kernel() {
    let rows = vec![vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 1, 1]];
    let m = to_exact(&rows);
    let basis = m.kernel_basis();
    assert_eq!(basis.len(), 2);
    for v in basis {
        assert!(m.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
    }
}
