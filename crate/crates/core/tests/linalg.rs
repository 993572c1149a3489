use proptest::prelude::*;

use polycat::linalg::{hermite_columns, snf_unipoly, Matrix, UniPoly, UniPolyMatrix};
use polycat::random::SplitMix64;
use polycat::FieldSpec;

const P: u64 = 32003;
const F: FieldSpec = FieldSpec::Prime(P);

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

/// Rank by elimination on plain residues.
fn oracle_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = pow_mod(rows[rank][c], P - 2);
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let f = rows[i][c] * inv % P;
                for j in 0..cols {
                    rows[i][j] = (rows[i][j] + P - f * rows[rank][j] % P) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn random_matrix(rng: &mut SplitMix64, rows: usize, cols: usize, dependent: bool) -> Vec<Vec<u64>> {
    let mut m: Vec<Vec<u64>> = (0..rows)
        .map(|_| (0..cols).map(|_| if rng.chance(1, 4) { 0 } else { rng.below(P) }).collect())
        .collect();
    if dependent && rows >= 3 {
        m[rows - 1] = (0..cols).map(|j| (m[0][j] + 2 * m[1][j]) % P).collect();
    }
    m
}

fn to_matrix(rows: &[Vec<u64>]) -> Matrix {
    Matrix::from_rows(
        F,
        rows.iter()
            .map(|r| r.iter().map(|&v| F.from_i64(v as i64)).collect())
            .collect(),
    )
}

#[test]
fn rank_and_kernel_of_random_matrices() {
    let mut rng = SplitMix64::new(42);
    for k in 0..20 {
        let rows = random_matrix(&mut rng, 5, 7, k % 2 == 0);
        let m = to_matrix(&rows);
        let r = m.rref();
        assert_eq!(r.rank, oracle_rank(rows));
        assert_eq!(r.rank + r.kernel_basis.cols(), 7);
        assert!(m.mul(&r.kernel_basis).is_zero());
    }
}

#[test]
fn trivial_ranks() {
    assert_eq!(Matrix::identity(F, 2).rank(), 2);
    let z = Matrix::zeros(F, 2, 3).rref();
    assert_eq!((z.rank, z.kernel_basis.cols()), (0, 3));
}

fn p(c: &[i64]) -> UniPoly {
    UniPoly::from_i64(F, c)
}

#[test]
fn jordan_block_smith_form() {
    let m = UniPolyMatrix::from_rows(F, vec![vec![p(&[0, 1]), p(&[1])], vec![p(&[]), p(&[0, 1])]]);
    let s = snf_unipoly(&m);
    assert_eq!(s.diagonal(), vec![p(&[1]), p(&[0, 0, 1])]);
    assert_eq!(s.u.mul(&m).mul(&s.v), s.d);
}

#[test]
fn one_minus_t_has_one_dimensional_cokernel() {
    let m = UniPolyMatrix::from_rows(F, vec![vec![p(&[1, -1])]]);
    let d = snf_unipoly(&m).diagonal();
    assert_eq!(d, vec![p(&[-1, 1])]);
    // k[t]/(f) has dimension deg f; f vanishes at t = 1
    assert_eq!(d[0].degree(), Some(1));
    assert!(d[0].eval(&F.one()).is_zero());
}

fn random_poly(rng: &mut SplitMix64) -> UniPoly {
    let deg = rng.range(-1, 2);
    if deg < 0 {
        return UniPoly::zero(F);
    }
    UniPoly::from_coeffs(F, (0..=deg).map(|_| rng.coefficient(F)).collect())
}

fn random_poly_matrix(seed: u64, rows: usize, cols: usize) -> UniPolyMatrix {
    let mut rng = SplitMix64::new(seed);
    UniPolyMatrix::from_rows(
        F,
        (0..rows)
            .map(|_| (0..cols).map(|_| random_poly(&mut rng)).collect())
            .collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rref_is_idempotent(seed in any::<u64>(), rows in 1usize..6, cols in 1usize..7) {
        let m = to_matrix(&random_matrix(&mut SplitMix64::new(seed), rows, cols, seed % 3 == 0));
        let once = m.rref();
        let twice = once.reduced.rref();
        prop_assert_eq!(&twice.reduced, &once.reduced);
        prop_assert_eq!(twice.rank, once.rank);
    }

    #[test]
    fn smith_form_reconstructs_and_divides(seed in any::<u64>(), rows in 1usize..4, cols in 1usize..4) {
        let m = random_poly_matrix(seed, rows, cols);
        let s = snf_unipoly(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            prop_assert!(w[0].divides(&w[1]));
        }
        for f in &diag {
            prop_assert!(f.leading().unwrap().is_one());
        }
    }

    #[test]
    fn smith_invariants_survive_unimodular_changes(seed in any::<u64>(), c in -3i64..4) {
        let m = random_poly_matrix(seed, 3, 3);
        // add c*t times row 0 to row 2 and swap columns 0 and 1
        let mut rows: Vec<Vec<UniPoly>> = (0..3).map(|i| (0..3).map(|j| m[(i, j)].clone()).collect()).collect();
        let f = p(&[0, c]);
        for j in 0..3 {
            rows[2][j] = rows[2][j].add(&f.mul(&rows[0][j]));
        }
        for r in rows.iter_mut() {
            r.swap(0, 1);
        }
        let changed = UniPolyMatrix::from_rows(F, rows);
        prop_assert_eq!(snf_unipoly(&changed).diagonal(), snf_unipoly(&m).diagonal());
    }

    #[test]
    fn hermite_form_spans_the_same_module(seed in any::<u64>(), cols in 0usize..5) {
        let m = random_poly_matrix(seed, 3, cols);
        let original = m.columns();
        let h = hermite_columns(3, &original);
        let span_h = snf_unipoly(&UniPolyMatrix::from_columns(F, 3, &h));
        let span_o = snf_unipoly(&UniPolyMatrix::from_columns(F, 3, &original));
        for c in &original {
            prop_assert!(span_h.solve(c).is_some());
        }
        for c in &h {
            prop_assert!(span_o.solve(c).is_some());
        }
        prop_assert!(h.len() <= 3);
        prop_assert_eq!(hermite_columns(3, &h), h.clone());
    }
}
