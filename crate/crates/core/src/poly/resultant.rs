use crate::arith::{ExactMatrix, Field};

use super::{Form, Monomial, PolyError};

fn binary_coeffs<F: Field>(f: &Form<F>) -> Result<(u32, Vec<F::Elem>), PolyError> {
    if f.num_vars() != 2 {
        return Err(PolyError::ArityMismatch { expected: 2, got: f.num_vars() });
    }
    let d = f.degree().ok_or(PolyError::ZeroForm)?;
    // aₖ is the coefficient of x₀^(d−k) x₁^k
    let coeffs = (0..=d).map(|k| f.coeff(&Monomial::new(vec![d - k, k]))).collect();
    Ok((d, coeffs))
}

/// Sylvester matrix of two binary forms of degrees m and n, size m + n.
///
/// The first n rows carry the coefficients of `r`, the last m those of `s`.
pub fn sylvester_matrix<F: Field>(r: &Form<F>, s: &Form<F>) -> Result<ExactMatrix<F>, PolyError> {
    let (m, a) = binary_coeffs(r)?;
    let (n, b) = binary_coeffs(s)?;
    let size = (m + n) as usize;
    let field = r.field().clone();
    let mut mat = ExactMatrix::zeros(field, size, size);
    for i in 0..n as usize {
        for (k, c) in a.iter().enumerate() {
            mat.set(i, i + k, c.clone());
        }
    }
    for i in 0..m as usize {
        for (k, c) in b.iter().enumerate() {
            mat.set(n as usize + i, i + k, c.clone());
        }
    }
    Ok(mat)
}

/// Resultant of two binary forms; zero iff they share a projective root
/// over the algebraic closure.
pub fn resultant_binary<F: Field>(r: &Form<F>, s: &Form<F>) -> Result<F::Elem, PolyError> {
    let syl = sylvester_matrix(r, s)?;
    Ok(syl.determinant()?)
}

/// A binary form has no repeated projective root iff its two partials have
/// no common root (Euler's relation), valid when the characteristic does not
/// divide the degree. Forms of degree ≤ 1 are squarefree.
pub fn is_squarefree_binary<F: Field>(f: &Form<F>) -> Result<bool, PolyError> {
    let (d, _) = binary_coeffs(f)?;
    if d <= 1 {
        return Ok(true);
    }
    let d0 = f.partial(0)?;
    let d1 = f.partial(1)?;
    if d0.is_zero() || d1.is_zero() {
        return Ok(false);
    }
    Ok(!f.field().is_zero(&resultant_binary(&d0, &d1)?))
}
