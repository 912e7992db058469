use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a monomial.
///
/// Ordered graded-lexicographically with x₀ > x₁ > x₂ > …: higher total
/// degree first, then the larger exponent of the earliest variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(num_vars: usize) -> Self {
        Self(vec![0; num_vars])
    }

    /// The variable xᵢ among `num_vars` variables.
    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Weighted sum Σ eᵢwᵢ reduced mod `modulus`.
    pub fn weight(&self, weights: &[u32], modulus: u32) -> u32 {
        self.0
            .iter()
            .zip(weights)
            .fold(0u64, |acc, (&e, &w)| (acc + e as u64 * w as u64) % modulus as u64) as u32
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .map(|(i, e)| format!("x{i}^{e}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All monomials of degree `d` in `n` variables, leading (largest) first.
///
/// There are C(n + d − 1, d) of them.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn fill(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i == n - 1 {
            cur[i] = left;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            fill(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        return if d == 0 { vec![Monomial(Vec::new())] } else { Vec::new() };
    }
    let mut out = Vec::new();
    fill(0, d, &mut vec![0; n], &mut out);
    out
}
