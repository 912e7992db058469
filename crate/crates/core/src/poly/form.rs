use std::collections::BTreeMap;

use crate::arith::{ExactMatrix, Field};

use super::{Monomial, PolyError};

/// A homogeneous polynomial with sparse coefficients.
///
/// Invariants: every stored monomial has `num_vars` exponents and the same
/// total degree; no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Form<F: Field> {
    field: F,
    num_vars: usize,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> Form<F> {
    pub fn zero(field: F, num_vars: usize) -> Self {
        Self { field, num_vars, terms: BTreeMap::new() }
    }

    /// Sums the given terms; duplicates are combined and zeros dropped.
    pub fn from_terms<I>(field: F, num_vars: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Vec<u32>, F::Elem)>,
    {
        let mut map: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        let mut degree = None;
        for (exps, c) in terms {
            if exps.len() != num_vars {
                return Err(PolyError::ArityMismatch { expected: num_vars, got: exps.len() });
            }
            let m = Monomial::new(exps);
            match degree {
                None => degree = Some(m.degree()),
                Some(d) if d != m.degree() => {
                    return Err(PolyError::NotHomogeneous { first: d, other: m.degree() })
                }
                _ => {}
            }
            let entry = map.entry(m).or_insert_with(|| field.zero());
            *entry = field.add(entry, &c);
        }
        map.retain(|_, c| !field.is_zero(c));
        Ok(Self { field, num_vars, terms: map })
    }

    pub fn monomial(field: F, m: Monomial, c: F::Elem) -> Self {
        let num_vars = m.num_vars();
        let mut terms = BTreeMap::new();
        if !field.is_zero(&c) {
            terms.insert(m, c);
        }
        Self { field, num_vars, terms }
    }

    pub fn var(field: F, num_vars: usize, i: usize) -> Self {
        let one = field.one();
        Self::monomial(field, Monomial::var(num_vars, i), one)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, `None` for the zero form.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn check_compatible(&self, other: &Self) -> Result<(), PolyError> {
        if self.num_vars != other.num_vars {
            return Err(PolyError::ArityMismatch { expected: self.num_vars, got: other.num_vars });
        }
        match (self.degree(), other.degree()) {
            (Some(a), Some(b)) if a != b => Err(PolyError::NotHomogeneous { first: a, other: b }),
            _ => Ok(()),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let f = &self.field;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(|| f.zero());
            *entry = f.add(entry, c);
        }
        terms.retain(|_, c| !f.is_zero(c));
        Ok(Self { field: f.clone(), num_vars: self.num_vars, terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, k: &F::Elem) -> Self {
        let f = &self.field;
        let terms = if f.is_zero(k) {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(m, c)| (m.clone(), f.mul(c, k))).collect()
        };
        Self { field: f.clone(), num_vars: self.num_vars, terms }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        if self.num_vars != other.num_vars {
            return Err(PolyError::ArityMismatch { expected: self.num_vars, got: other.num_vars });
        }
        let f = &self.field;
        let mut terms: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let entry = terms.entry(m1.mul(m2)).or_insert_with(|| f.zero());
                *entry = f.add(entry, &f.mul(c1, c2));
            }
        }
        terms.retain(|_, c| !f.is_zero(c));
        Ok(Self { field: f.clone(), num_vars: self.num_vars, terms })
    }

    /// Re-reads the form in `n ≥ num_vars` variables, the new ones unused.
    pub fn extend_vars(&self, n: usize) -> Result<Self, PolyError> {
        if n < self.num_vars {
            return Err(PolyError::ArityMismatch { expected: self.num_vars, got: n });
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e.resize(n, 0);
                (Monomial::new(e), c.clone())
            })
            .collect();
        Ok(Self { field: self.field.clone(), num_vars: n, terms })
    }

    /// Coefficient-wise image under a map into another field.
    pub fn map_coeffs<G, E, M>(&self, target: G, mut map: M) -> Result<Form<G>, E>
    where
        G: Field,
        M: FnMut(&F::Elem) -> Result<G::Elem, E>,
    {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = map(c)?;
            if !target.is_zero(&v) {
                terms.insert(m.clone(), v);
            }
        }
        Ok(Form { field: target, num_vars: self.num_vars, terms })
    }

    pub fn evaluate(&self, point: &[F::Elem]) -> Result<F::Elem, PolyError> {
        if point.len() != self.num_vars {
            return Err(PolyError::ArityMismatch { expected: self.num_vars, got: point.len() });
        }
        let f = &self.field;
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t = f.mul(&t, &f.pow(x, e));
                }
            }
            acc = f.add(&acc, &t);
        }
        Ok(acc)
    }

    /// ∂/∂xᵢ.
    pub fn partial(&self, i: usize) -> Result<Self, PolyError> {
        if i >= self.num_vars {
            return Err(PolyError::VariableOutOfRange { index: i, num_vars: self.num_vars });
        }
        let f = &self.field;
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            let v = f.mul(c, &f.from_i64(e as i64));
            if !f.is_zero(&v) {
                terms.insert(Monomial::new(exps), v);
            }
        }
        Ok(Self { field: f.clone(), num_vars: self.num_vars, terms })
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.num_vars)
            .map(|i| self.partial(i).expect("index in range"))
            .collect()
    }
}

/// Matrix of first partials at `point`, one row per form.
pub fn jacobian_at<F: Field>(forms: &[Form<F>], point: &[F::Elem]) -> Result<ExactMatrix<F>, PolyError> {
    let first = forms.first().ok_or(PolyError::EmptyInput)?;
    let n = first.num_vars();
    let mut rows = Vec::with_capacity(forms.len());
    for form in forms {
        if form.num_vars() != n {
            return Err(PolyError::ArityMismatch { expected: n, got: form.num_vars() });
        }
        let row = form
            .gradient()
            .iter()
            .map(|d| d.evaluate(point))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(ExactMatrix::from_rows(first.field().clone(), n, rows)?)
}

/// V₂ = x₂x₃ + r(x₀, x₁) and V₃ = x₂³ + x₃³ + s(x₀, x₁) in ℙ³.
pub fn build_curve_forms<F: Field>(r: &Form<F>, s: &Form<F>) -> Result<(Form<F>, Form<F>), PolyError> {
    for (form, expected) in [(r, 2u32), (s, 3u32)] {
        if form.num_vars() != 2 {
            return Err(PolyError::ArityMismatch { expected: 2, got: form.num_vars() });
        }
        if let Some(d) = form.degree() {
            if d != expected {
                return Err(PolyError::DegreeMismatch { expected, got: d });
            }
        }
    }
    let f = r.field().clone();
    let one = f.one();
    let x2x3 = Form::monomial(f.clone(), Monomial::new(vec![0, 0, 1, 1]), one.clone());
    let x2_3 = Form::monomial(f.clone(), Monomial::new(vec![0, 0, 3, 0]), one.clone());
    let x3_3 = Form::monomial(f, Monomial::new(vec![0, 0, 0, 3]), one);
    let v2 = x2x3.add(&r.extend_vars(4)?)?;
    let v3 = x2_3.add(&x3_3)?.add(&s.extend_vars(4)?)?;
    Ok((v2, v3))
}
