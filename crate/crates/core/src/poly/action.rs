use std::collections::BTreeMap;

use crate::arith::{CycNum, Cyclotomic3, Field};

use super::{Form, PolyError};

/// A monomial coordinate map: `(g·p)[perm[i]] = scalings[i] · p[i]`.
///
/// Forms transform contravariantly, `(g·f)(p) = f(g⁻¹·p)`, so a form is
/// fixed by `g` exactly when `apply_action(f, g) == f`, and
/// `apply(f, g·h) = apply(apply(f, h), g)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoordinateAction<F: Field> {
    field: F,
    perm: Vec<usize>,
    scalings: Vec<F::Elem>,
}

impl<F: Field> CoordinateAction<F> {
    pub fn new(field: F, perm: Vec<usize>, scalings: Vec<F::Elem>) -> Result<Self, PolyError> {
        let n = perm.len();
        if scalings.len() != n {
            return Err(PolyError::ArityMismatch { expected: n, got: scalings.len() });
        }
        let mut seen = vec![false; n];
        for &t in &perm {
            if t >= n || std::mem::replace(&mut seen[t], true) {
                return Err(PolyError::NotAPermutation);
            }
        }
        if scalings.iter().any(|s| field.is_zero(s)) {
            return Err(PolyError::SingularScaling);
        }
        Ok(Self { field, perm, scalings })
    }

    pub fn identity(field: F, n: usize) -> Self {
        let scalings = vec![field.one(); n];
        Self { field, perm: (0..n).collect(), scalings }
    }

    pub fn diagonal(field: F, scalings: Vec<F::Elem>) -> Result<Self, PolyError> {
        let perm = (0..scalings.len()).collect();
        Self::new(field, perm, scalings)
    }

    pub fn num_vars(&self) -> usize {
        self.perm.len()
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn scalings(&self) -> &[F::Elem] {
        &self.scalings
    }

    /// `self · other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self, PolyError> {
        if self.num_vars() != other.num_vars() {
            return Err(PolyError::ArityMismatch { expected: self.num_vars(), got: other.num_vars() });
        }
        let f = &self.field;
        let perm = other.perm.iter().map(|&j| self.perm[j]).collect();
        let scalings = (0..self.num_vars())
            .map(|i| f.mul(&self.scalings[other.perm[i]], &other.scalings[i]))
            .collect();
        Ok(Self { field: f.clone(), perm, scalings })
    }

    pub fn inverse(&self) -> Self {
        let f = &self.field;
        let n = self.num_vars();
        let mut perm = vec![0; n];
        let mut scalings = vec![f.one(); n];
        for i in 0..n {
            let t = self.perm[i];
            perm[t] = i;
            scalings[t] = f.inv(&self.scalings[i]).expect("scalings are nonzero");
        }
        Self { field: f.clone(), perm, scalings }
    }

    pub fn act_on_point(&self, point: &[F::Elem]) -> Result<Vec<F::Elem>, PolyError> {
        if point.len() != self.num_vars() {
            return Err(PolyError::ArityMismatch { expected: self.num_vars(), got: point.len() });
        }
        let mut out = vec![self.field.zero(); point.len()];
        for (i, x) in point.iter().enumerate() {
            out[self.perm[i]] = self.field.mul(&self.scalings[i], x);
        }
        Ok(out)
    }

    /// `f ∘ g⁻¹`: substitutes xᵢ ↦ sᵢ⁻¹ x_{perm[i]}.
    pub fn apply(&self, form: &Form<F>) -> Result<Form<F>, PolyError> {
        let n = self.num_vars();
        if form.num_vars() != n {
            return Err(PolyError::ArityMismatch { expected: n, got: form.num_vars() });
        }
        let f = &self.field;
        let inv: Vec<F::Elem> = self
            .scalings
            .iter()
            .map(|s| f.inv(s).expect("scalings are nonzero"))
            .collect();
        let mut terms: BTreeMap<Vec<u32>, F::Elem> = BTreeMap::new();
        for (m, c) in form.terms() {
            let mut exps = vec![0; n];
            let mut coeff = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[self.perm[i]] = e;
                if e > 0 {
                    coeff = f.mul(&coeff, &f.pow(&inv[i], e));
                }
            }
            terms.insert(exps, coeff);
        }
        Form::from_terms(f.clone(), n, terms)
    }
}

impl CoordinateAction<Cyclotomic3> {
    /// ξ·[x₀:x₁:x₂:x₃] = [x₀:x₁:ζx₂:ζ²x₃].
    pub fn xi() -> Self {
        Self::diagonal(
            Cyclotomic3,
            vec![CycNum::one(), CycNum::one(), CycNum::zeta(), CycNum::zeta_sq()],
        )
        .expect("valid scalings")
    }

    /// ξᵏ, for any integer k.
    pub fn xi_pow(k: i64) -> Self {
        Self::diagonal(
            Cyclotomic3,
            vec![CycNum::one(), CycNum::one(), CycNum::zeta_pow(k), CycNum::zeta_pow(2 * k)],
        )
        .expect("valid scalings")
    }

    /// Whether every scaling is one of 1, ζ, ζ².
    pub fn has_order_three_scalings(&self) -> bool {
        self.scalings.iter().all(CycNum::is_cube_root_of_unity)
    }
}

pub fn apply_action<F: Field>(form: &Form<F>, g: &CoordinateAction<F>) -> Result<Form<F>, PolyError> {
    g.apply(form)
}
