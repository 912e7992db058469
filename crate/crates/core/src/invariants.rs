//! Dimensions of ⟨ξ⟩-invariant subspaces of Sym^d of the coordinate space
//! and of the graded slices of the ideal of C₄.
//!
//! ξ acts diagonally, so a monomial is invariant iff its weight Σ eᵢwᵢ is
//! 0 mod 3. The invariant dimension is computed twice: by counting such
//! monomials, and by averaging traces over the group, where the trace of g on
//! Sym^d is the complete homogeneous symmetric polynomial h_d of the
//! eigenvalues, obtained from power sums by Newton's identities.

use serde::Serialize;
use thiserror::Error;

use crate::arith::{subspace_intersection_dim, ArithError, CycNum, ExactMatrix, Field, Rational};
use crate::curve::{h0_of_dk, CurveError};
use crate::poly::{monomials_of_degree, Form, Monomial, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("ideal slices are only available in degrees 2 and 3, got {0}")]
    DegreeUnsupported(u32),
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("group average {0} is not a nonnegative integer")]
    NonIntegralAverage(String),
    #[error("generator of degree {got:?} in a degree-{expected} slice")]
    SliceDegree { expected: u32, got: Option<u32> },
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// Exponent of the ξ-eigenvalue of each coordinate, mod 3.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WeightVector(Vec<u32>);

impl WeightVector {
    pub fn new(weights: Vec<u32>) -> Self {
        Self(weights.into_iter().map(|w| w % 3).collect())
    }

    /// (0, 0, 1, 2): the action [x₀:x₁:ζx₂:ζ²x₃].
    pub fn xi() -> Self {
        Self(vec![0, 0, 1, 2])
    }

    pub fn trivial(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// All 3ⁿ weight vectors of length n.
    pub fn all(n: usize) -> Vec<WeightVector> {
        (0..3u32.pow(n as u32))
            .map(|mut code| {
                Self(
                    (0..n)
                        .map(|_| {
                            let w = code % 3;
                            code /= 3;
                            w
                        })
                        .collect(),
                )
            })
            .collect()
    }

    pub fn weights(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn monomial_weight(&self, m: &Monomial) -> u32 {
        m.weight(&self.0, 3)
    }
}

/// Number of coordinates of weight 0, 1 and 2.
pub fn eigenspace_dims(w: &WeightVector) -> [usize; 3] {
    let mut dims = [0; 3];
    for &x in w.weights() {
        dims[x as usize] += 1;
    }
    dims
}

/// The monomial basis of Sym^d in graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSlice {
    pub degree: u32,
    pub basis: Vec<Monomial>,
}

impl GradedSlice {
    pub fn new(num_vars: usize, degree: u32) -> Self {
        Self { degree, basis: monomials_of_degree(num_vars, degree) }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.basis.iter().position(|b| b == m)
    }

    /// Coordinates of a degree-d form in this basis.
    pub fn coordinates<F: Field>(&self, form: &Form<F>) -> Result<Vec<F::Elem>, InvariantError> {
        if !form.is_zero() && form.degree() != Some(self.degree) {
            return Err(InvariantError::SliceDegree { expected: self.degree, got: form.degree() });
        }
        let f = form.field();
        let mut v = vec![f.zero(); self.dimension()];
        for (m, c) in form.terms() {
            let idx = self.index_of(m).ok_or(PolyError::ArityMismatch {
                expected: self.basis[0].num_vars(),
                got: m.num_vars(),
            })?;
            v[idx] = c.clone();
        }
        Ok(v)
    }
}

/// Counts of degree-d monomials in each weight class 0, 1, 2.
pub fn character_dims(w: &WeightVector, d: u32) -> [usize; 3] {
    let mut dims = [0; 3];
    for m in monomials_of_degree(w.num_vars(), d) {
        dims[w.monomial_weight(&m) as usize] += 1;
    }
    dims
}

pub fn list_invariant_monomials(w: &WeightVector, d: u32) -> Vec<Monomial> {
    monomials_of_degree(w.num_vars(), d)
        .into_iter()
        .filter(|m| w.monomial_weight(m) == 0)
        .collect()
}

/// Number of invariant monomials of degree d.
pub fn invariant_dim(w: &WeightVector, d: u32) -> Result<usize, InvariantError> {
    if d == 0 {
        return Err(InvariantError::ZeroDegree);
    }
    Ok(list_invariant_monomials(w, d).len())
}

/// trace(Sym^d g) = h_d(λ₁, …, λₙ), via d·h_d = Σ_{i=1..d} pᵢ h_{d−i}.
fn sym_power_trace(eigenvalues: &[CycNum], d: u32) -> CycNum {
    let d = d as usize;
    let mut power_sums = Vec::with_capacity(d + 1);
    power_sums.push(CycNum::from_i64(eigenvalues.len() as i64));
    let mut powers: Vec<CycNum> = eigenvalues.to_vec();
    for _ in 1..=d {
        power_sums.push(powers.iter().fold(CycNum::zero(), |acc, x| &acc + x));
        powers = powers.iter().zip(eigenvalues).map(|(p, l)| p * l).collect();
    }
    let mut h = vec![CycNum::one()];
    for k in 1..=d {
        let s = (1..=k).fold(CycNum::zero(), |acc, i| &acc + &(&power_sums[i] * &h[k - i]));
        h.push(s.scale(&Rational::new(1.into(), (k as i64).into())));
    }
    h.pop().expect("nonempty")
}

/// Group average (1/3) Σ_{k=0..2} trace(Sym^d ξᵏ).
pub fn burnside_invariant_dim(w: &WeightVector, d: u32) -> Result<usize, InvariantError> {
    if d == 0 {
        return Err(InvariantError::ZeroDegree);
    }
    let mut total = CycNum::zero();
    for k in 0..3 {
        let eig: Vec<CycNum> = w.weights().iter().map(|&x| CycNum::zeta_pow((k * x) as i64)).collect();
        total = &total + &sym_power_trace(&eig, d);
    }
    let avg = total.scale(&Rational::new(1.into(), 3.into()));
    avg.as_integer()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| InvariantError::NonIntegralAverage(avg.to_string()))
}

/// dim(span(generators) ∩ invariant monomial subspace) inside Sym^d.
pub fn slice_invariant_dim<F: Field>(
    generators: &[Form<F>],
    w: &WeightVector,
    d: u32,
) -> Result<usize, InvariantError> {
    let first = generators.first().ok_or(PolyError::EmptyInput)?;
    let field = first.field().clone();
    let slice = GradedSlice::new(w.num_vars(), d);
    let rows = generators
        .iter()
        .map(|g| slice.coordinates(g))
        .collect::<Result<Vec<_>, _>>()?;
    let span = ExactMatrix::from_rows(field.clone(), slice.dimension(), rows)?;
    let unit_rows = slice
        .basis
        .iter()
        .enumerate()
        .filter(|(_, m)| w.monomial_weight(m) == 0)
        .map(|(idx, _)| {
            let mut row = vec![field.zero(); slice.dimension()];
            row[idx] = field.one();
            row
        })
        .collect();
    let invariant = ExactMatrix::from_rows(field, slice.dimension(), unit_rows)?;
    Ok(subspace_intersection_dim(&span, &invariant)?)
}

/// Spanning set of the degree-d part of the ideal (V₂, V₃):
/// {V₂} for d = 2 and {x₀V₂, …, x₃V₂, V₃} for d = 3.
pub fn ideal_slice_generators<F: Field>(
    v2: &Form<F>,
    v3: &Form<F>,
    d: u32,
) -> Result<Vec<Form<F>>, InvariantError> {
    match d {
        2 => Ok(vec![v2.clone()]),
        3 => {
            let mut gens = (0..v2.num_vars())
                .map(|i| Form::var(v2.field().clone(), v2.num_vars(), i).mul(v2))
                .collect::<Result<Vec<_>, _>>()?;
            gens.push(v3.clone());
            Ok(gens)
        }
        d => Err(InvariantError::DegreeUnsupported(d)),
    }
}

/// Dimension of the degree-d slice of the ideal (generically 1 and 5).
pub fn ideal_slice_rank<F: Field>(v2: &Form<F>, v3: &Form<F>, d: u32) -> Result<usize, InvariantError> {
    let gens = ideal_slice_generators(v2, v3, d)?;
    let slice = GradedSlice::new(v2.num_vars(), d);
    let rows = gens.iter().map(|g| slice.coordinates(g)).collect::<Result<Vec<_>, _>>()?;
    Ok(ExactMatrix::from_rows(v2.field().clone(), slice.dimension(), rows)?.rank())
}

/// Dimension of the ξ-invariant forms of degree d vanishing on C₄.
pub fn ideal_slice_invariant_dim<F: Field>(
    v2: &Form<F>,
    v3: &Form<F>,
    d: u32,
) -> Result<usize, InvariantError> {
    ideal_slice_invariant_dim_for(v2, v3, &WeightVector::xi(), d)
}

pub fn ideal_slice_invariant_dim_for<F: Field>(
    v2: &Form<F>,
    v3: &Form<F>,
    w: &WeightVector,
    d: u32,
) -> Result<usize, InvariantError> {
    slice_invariant_dim(&ideal_slice_generators(v2, v3, d)?, w, d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurjectivityCheck {
    pub invariant_sym_dim: usize,
    pub invariant_ideal_dim: usize,
    pub image_dim: usize,
    pub expected_image_dim: usize,
}

impl SurjectivityCheck {
    pub fn consistent(&self) -> bool {
        self.image_dim == self.expected_image_dim
    }
}

/// invariant Sym^d minus invariant ideal slice, against h⁰(dK) of the
/// quotient curve of genus `quotient_genus`.
pub fn surjectivity_consistency<F: Field>(
    w: &WeightVector,
    v2: &Form<F>,
    v3: &Form<F>,
    d: u32,
    quotient_genus: i64,
) -> Result<SurjectivityCheck, InvariantError> {
    let invariant_sym_dim = invariant_dim(w, d)?;
    let invariant_ideal_dim = ideal_slice_invariant_dim_for(v2, v3, w, d)?;
    let expected = h0_of_dk(quotient_genus, d as i64)?;
    Ok(SurjectivityCheck {
        invariant_sym_dim,
        invariant_ideal_dim,
        image_dim: invariant_sym_dim - invariant_ideal_dim,
        expected_image_dim: expected as usize,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Cyclotomic3;
    use crate::poly::{build_curve_forms, io};

    fn curve() -> (Form<Cyclotomic3>, Form<Cyclotomic3>) {
        let r = io::parse_text("2*x0^2 + 3*x0*x1 + x1^2", 2).unwrap();
        let s = io::parse_text("x0^3 - x1^3", 2).unwrap();
        let (v2, v3) = build_curve_forms(&r, &s).unwrap();
        (io::to_cyclotomic(&v2), io::to_cyclotomic(&v3))
    }

    fn mono(e: [u32; 4]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn eigenspaces() {
        assert_eq!(eigenspace_dims(&WeightVector::xi()), [2, 1, 1]);
        assert_eq!(eigenspace_dims(&WeightVector::trivial(4)), [4, 0, 0]);
        assert_eq!(eigenspace_dims(&WeightVector::new(vec![1, 1, 2, 2])), [0, 2, 2]);
    }

    #[test]
    fn invariant_counts() {
        let w = WeightVector::xi();
        assert_eq!(invariant_dim(&w, 1).unwrap(), 2);
        assert_eq!(invariant_dim(&w, 2).unwrap(), 4);
        assert_eq!(invariant_dim(&w, 3).unwrap(), 8);
        assert_eq!(invariant_dim(&w, 0), Err(InvariantError::ZeroDegree));
    }

    #[test]
    fn invariant_monomial_lists() {
        let w = WeightVector::xi();
        assert_eq!(
            list_invariant_monomials(&w, 2),
            vec![mono([2, 0, 0, 0]), mono([1, 1, 0, 0]), mono([0, 2, 0, 0]), mono([0, 0, 1, 1])]
        );
        assert_eq!(
            list_invariant_monomials(&w, 3),
            vec![
                mono([3, 0, 0, 0]),
                mono([2, 1, 0, 0]),
                mono([1, 2, 0, 0]),
                mono([1, 0, 1, 1]),
                mono([0, 3, 0, 0]),
                mono([0, 1, 1, 1]),
                mono([0, 0, 3, 0]),
                mono([0, 0, 0, 3]),
            ]
        );
        assert_eq!(list_invariant_monomials(&w, 1), vec![mono([1, 0, 0, 0]), mono([0, 1, 0, 0])]);
    }

    #[test]
    fn burnside_matches_counting() {
        for w in WeightVector::all(4) {
            for d in 1..=6 {
                assert_eq!(burnside_invariant_dim(&w, d).unwrap(), invariant_dim(&w, d).unwrap());
            }
        }
    }

    #[test]
    fn kernel_dims() {
        let (v2, v3) = curve();
        assert_eq!(ideal_slice_invariant_dim(&v2, &v3, 2).unwrap(), 1);
        assert_eq!(ideal_slice_invariant_dim(&v2, &v3, 3).unwrap(), 3);
        assert_eq!(ideal_slice_rank(&v2, &v3, 3).unwrap(), 5);
        assert_eq!(
            ideal_slice_invariant_dim(&v2, &v3, 4),
            Err(InvariantError::DegreeUnsupported(4))
        );
    }

    #[test]
    fn multiples_of_quadric_only() {
        let (v2, v3) = curve();
        let gens = ideal_slice_generators(&v2, &v3, 3).unwrap();
        let quadric_multiples = &gens[..4];
        assert_eq!(slice_invariant_dim(quadric_multiples, &WeightVector::xi(), 3).unwrap(), 2);
    }

    #[test]
    fn surjectivity_triples() {
        let (v2, v3) = curve();
        let w = WeightVector::xi();
        let c2 = surjectivity_consistency(&w, &v2, &v3, 2, 2).unwrap();
        assert_eq!((c2.invariant_sym_dim, c2.invariant_ideal_dim, c2.image_dim), (4, 1, 3));
        assert!(c2.consistent());
        let c3 = surjectivity_consistency(&w, &v2, &v3, 3, 2).unwrap();
        assert_eq!((c3.invariant_sym_dim, c3.invariant_ideal_dim, c3.image_dim), (8, 3, 5));
        assert!(c3.consistent());
        let t = surjectivity_consistency(&WeightVector::trivial(4), &v2, &v3, 2, 4).unwrap();
        assert_eq!((t.invariant_sym_dim, t.invariant_ideal_dim, t.image_dim), (10, 1, 9));
        assert!(t.consistent());
    }
}
