//! Largest singular value by power iteration on `M^† M`, in `f64`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::repr::RepMatrix;
use crate::scalar::Scalar;

pub const DEFAULT_TOL: f64 = 1e-9;
pub const MAX_ITERATIONS: usize = 10_000;

type C64 = Complex<f64>;

struct Gram {
    n: usize,
    a: Vec<C64>,
}

impl Gram {
    fn new<S: Scalar>(rows: usize, n: usize, entries: &[S]) -> Self {
        let dense: Vec<C64> = entries.iter().map(Scalar::to_c64).collect();
        let mut a = vec![C64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = (0..rows).map(|k| dense[k * n + i].conj() * dense[k * n + j]).sum();
            }
        }
        Gram { n, a }
    }

    fn apply(&self, v: &[C64]) -> Vec<C64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.a[i * self.n + j] * v[j]).sum())
            .collect()
    }
}

fn norm2(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Dominant eigenvalue of the Gram matrix reached from `start`. `None` when
/// the start vector is annihilated.
fn power_iterate(gram: &Gram, start: Vec<C64>, tol: f64) -> Result<Option<f64>> {
    let mut v = start;
    let len = norm2(&v);
    v.iter_mut().for_each(|z| *z /= len);
    let mut lambda = 0.0;
    for _ in 0..MAX_ITERATIONS {
        let w = gram.apply(&v);
        let next: f64 = v.iter().zip(&w).map(|(a, b)| (a.conj() * b).re).sum();
        let wn = norm2(&w);
        if wn == 0.0 {
            return Ok(None);
        }
        if (next - lambda).abs() <= tol * next.abs() {
            return Ok(Some(next));
        }
        lambda = next;
        v = w.into_iter().map(|z| z / wn).collect();
    }
    Err(Error::NoConvergence { iterations: MAX_ITERATIONS })
}

/// Operator norm of a square matrix, to relative tolerance `tol`.
pub fn operator_norm<S: Scalar>(m: &RepMatrix<S>, tol: f64) -> Result<f64> {
    let entries: Vec<S> = m.to_nested().into_iter().flatten().collect();
    operator_norm_dense(m.rows(), m.cols(), &entries, tol)
}

/// Same as [`operator_norm`] for a row-major `rows x cols` slice.
///
/// Starts from the all-ones vector and from a fixed second vector with
/// unequal entries; the larger estimate wins, which covers matrices whose
/// top singular vector is orthogonal to one of the starts.
pub fn operator_norm_dense<S: Scalar>(rows: usize, cols: usize, entries: &[S], tol: f64) -> Result<f64> {
    if rows != cols {
        return Err(Error::NonSquare { rows, cols });
    }
    assert_eq!(entries.len(), rows * cols);
    assert!(tol > 0.0, "tolerance must be positive");
    let n = cols;
    if n == 0 {
        return Ok(0.0);
    }
    let gram = Gram::new(rows, n, entries);
    let ones = vec![C64::new(1.0, 0.0); n];
    let second = (0..n)
        .map(|i| C64::new(1.0 / (i as f64 + 1.0), 0.5 - (i % 3) as f64 * 0.25))
        .collect();
    let a = power_iterate(&gram, ones, tol)?;
    let b = power_iterate(&gram, second, tol)?;
    let lambda = a.unwrap_or(0.0).max(b.unwrap_or(0.0));
    Ok(lambda.max(0.0).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cosets::Side;
    use crate::hecke::HeckeElement;
    use crate::repr::{left_action_matrix, right_action_matrix};
    use crate::scalar::from_parts;
    use crate::{roster, QComplex};

    #[test]
    fn identity_and_zero() {
        let pair = roster::s4_klein();
        let id: RepMatrix<QComplex> = RepMatrix::identity(&pair, Side::Right);
        assert!((operator_norm(&id, DEFAULT_TOL).unwrap() - 1.0).abs() < 1e-9);
        let z: RepMatrix<QComplex> = RepMatrix::zero(&pair, Side::Left, Side::Left);
        assert_eq!(operator_norm(&z, DEFAULT_TOL).unwrap(), 0.0);
    }

    #[test]
    fn triangle_adjacency_has_norm_two() {
        let pair = roster::s3_transposition();
        let e1: HeckeElement<QComplex> = HeckeElement::basis(&pair, 1);
        let n = operator_norm(&left_action_matrix(&e1), DEFAULT_TOL).unwrap();
        assert!((n - 2.0).abs() < 1e-6, "{n}");
    }

    #[test]
    fn top_vector_orthogonal_to_ones() {
        // e0 - e1 on S3/<(1 2)>: matrix 2I - J, norm 2 with all-ones in the kernel
        let pair = roster::s3_transposition();
        let f: HeckeElement<QComplex> =
            HeckeElement::from_coeffs(&pair, [(0, from_parts((1, 1), (0, 1))), (1, from_parts((-1, 1), (0, 1)))]);
        let n = operator_norm(&left_action_matrix(&f), DEFAULT_TOL).unwrap();
        assert!((n - 2.0).abs() < 1e-6, "{n}");
    }

    #[test]
    fn non_square_rejected() {
        let entries = vec![1.0_f64; 6];
        assert_eq!(
            operator_norm_dense(2, 3, &entries, DEFAULT_TOL),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn diagonal_matrix() {
        let entries = [3.0_f64, 0.0, 0.0, 0.0, -5.0, 0.0, 0.0, 0.0, 1.0];
        let n = operator_norm_dense(3, 3, &entries, DEFAULT_TOL).unwrap();
        assert!((n - 5.0).abs() < 1e-6);
    }

    #[test]
    fn unitary_has_norm_one() {
        let pair = roster::s4_cyclic();
        let u: RepMatrix<QComplex> = crate::repr::intertwiner_u(&pair);
        assert!((operator_norm(&u, DEFAULT_TOL).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn left_and_right_norms_agree() {
        for pair in roster::builtin() {
            let n = pair.dimension();
            let f: HeckeElement<QComplex> = HeckeElement::from_dense(
                &pair,
                (0..n).map(|k| from_parts((k as i64 * 2 - 3, 2), (1 - k as i64, 3))).collect(),
            );
            let l = operator_norm(&left_action_matrix(&f), DEFAULT_TOL).unwrap();
            let r = operator_norm(&right_action_matrix(&f), DEFAULT_TOL).unwrap();
            assert!((l - r).abs() <= 10.0 * DEFAULT_TOL * l.max(1.0), "{l} vs {r}");
        }
    }
}
