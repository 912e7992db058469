use std::fmt;
use std::sync::Arc;

use super::LedgerError;

/// A finite-rank integer lattice with a symmetric Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    name: String,
    basis_labels: Vec<String>,
    gram: Vec<Vec<i64>>,
}

impl Lattice {
    pub fn new(name: &str, basis_labels: &[&str], gram: Vec<Vec<i64>>) -> Result<Self, LedgerError> {
        let n = basis_labels.len();
        if gram.len() != n || gram.iter().any(|row| row.len() != n) {
            return Err(LedgerError::BadGram(format!("{name}: expected a {n}x{n} matrix")));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(LedgerError::BadGram(format!("{name}: entry ({i}, {j}) is not symmetric")));
                }
            }
        }
        Ok(Self {
            name: name.to_string(),
            basis_labels: basis_labels.iter().map(|s| s.to_string()).collect(),
            gram,
        })
    }

    /// NS(A) = ⟨Θ⟩ for a principally polarized abelian surface.
    pub fn principal_polarization() -> Self {
        Self::new("NS(A)", &["Theta"], vec![vec![2]]).expect("valid gram")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.basis_labels.iter().position(|l| l == label)
    }
}

/// An integer class on a lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivClass {
    lattice: Arc<Lattice>,
    coords: Vec<i64>,
}

impl DivClass {
    pub fn new(lattice: &Arc<Lattice>, coords: Vec<i64>) -> Result<Self, LedgerError> {
        if coords.len() != lattice.rank() {
            return Err(LedgerError::BadCoordinates { expected: lattice.rank(), got: coords.len() });
        }
        Ok(Self { lattice: Arc::clone(lattice), coords })
    }

    pub fn zero(lattice: &Arc<Lattice>) -> Self {
        Self { lattice: Arc::clone(lattice), coords: vec![0; lattice.rank()] }
    }

    pub fn basis(lattice: &Arc<Lattice>, label: &str) -> Result<Self, LedgerError> {
        let idx = lattice
            .label_index(label)
            .ok_or_else(|| LedgerError::UnknownLabel(label.to_string()))?;
        let mut c = Self::zero(lattice);
        c.coords[idx] = 1;
        Ok(c)
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    fn same_lattice(&self, other: &Self) -> Result<(), LedgerError> {
        if Arc::ptr_eq(&self.lattice, &other.lattice) || self.lattice == other.lattice {
            Ok(())
        } else {
            Err(LedgerError::LatticeMismatch {
                left: self.lattice.name.clone(),
                right: other.lattice.name.clone(),
            })
        }
    }

    /// coordsᵀ · gram · coords'.
    pub fn pair(&self, other: &Self) -> Result<i64, LedgerError> {
        self.same_lattice(other)?;
        let g = &self.lattice.gram;
        let mut total = 0;
        for (i, a) in self.coords.iter().enumerate() {
            for (j, b) in other.coords.iter().enumerate() {
                total += a * g[i][j] * b;
            }
        }
        Ok(total)
    }

    pub fn self_intersection(&self) -> i64 {
        self.pair(self).expect("same lattice")
    }

    pub fn add(&self, other: &Self) -> Result<Self, LedgerError> {
        self.same_lattice(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(Self { lattice: Arc::clone(&self.lattice), coords })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LedgerError> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        Self { lattice: Arc::clone(&self.lattice), coords: self.coords.iter().map(|a| k * a).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, label) in self.coords.iter().zip(&self.lattice.basis_labels) {
            if *c == 0 {
                continue;
            }
            let sign = if *c < 0 { "-" } else { "+" };
            if first {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match c.abs() {
                1 => write!(f, "{label}")?,
                k => write!(f, "{k}{label}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Blow-up of a surface at one point: the pulled-back lattice plus an
/// orthogonal exceptional class of square −1.
#[derive(Debug, Clone)]
pub struct BlowUp {
    base: Arc<Lattice>,
    blown: Arc<Lattice>,
}

impl BlowUp {
    pub fn new(base: &Arc<Lattice>, name: &str, pulled_labels: &[&str], exceptional: &str) -> Result<Self, LedgerError> {
        if pulled_labels.len() != base.rank() {
            return Err(LedgerError::BadCoordinates { expected: base.rank(), got: pulled_labels.len() });
        }
        let n = base.rank();
        let mut gram = vec![vec![0; n + 1]; n + 1];
        for i in 0..n {
            gram[i][..n].copy_from_slice(&base.gram[i]);
        }
        gram[n][n] = -1;
        let mut labels = pulled_labels.to_vec();
        labels.push(exceptional);
        let blown = Lattice::new(name, &labels, gram)?;
        Ok(Self { base: Arc::clone(base), blown: Arc::new(blown) })
    }

    pub fn base(&self) -> &Arc<Lattice> {
        &self.base
    }

    pub fn blown_up(&self) -> &Arc<Lattice> {
        &self.blown
    }

    pub fn exceptional(&self) -> DivClass {
        let mut c = DivClass::zero(&self.blown);
        c.coords[self.base.rank()] = 1;
        c
    }

    pub fn pullback(&self, c: &DivClass) -> Result<DivClass, LedgerError> {
        c.same_lattice(&DivClass::zero(&self.base))?;
        let mut coords = c.coords.clone();
        coords.push(0);
        DivClass::new(&self.blown, coords)
    }

    /// Pulled-back generators map to themselves, the exceptional class to 0.
    pub fn pushforward(&self, c: &DivClass) -> Result<DivClass, LedgerError> {
        c.same_lattice(&DivClass::zero(&self.blown))?;
        DivClass::new(&self.base, c.coords[..self.base.rank()].to_vec())
    }
}

pub fn blowdown_pushforward(blowup: &BlowUp, c: &DivClass) -> Result<DivClass, LedgerError> {
    blowup.pushforward(c)
}

/// The classes on B = Sym²(C₂) used by the ledger.
#[derive(Debug, Clone)]
pub struct SymmetricSquareClasses {
    pub blowup: BlowUp,
    pub theta: DivClass,
    pub theta_b: DivClass,
    pub e: DivClass,
    /// x = Θ_B − E
    pub x: DivClass,
    /// D_B = 4Θ_B − 6E
    pub d_b: DivClass,
}

impl SymmetricSquareClasses {
    pub fn new() -> Self {
        let a = Arc::new(Lattice::principal_polarization());
        let blowup = BlowUp::new(&a, "NS(B)", &["Theta_B"], "E").expect("rank matches");
        let theta = DivClass::basis(&a, "Theta").expect("label exists");
        let theta_b = blowup.pullback(&theta).expect("same lattice");
        let e = blowup.exceptional();
        let x = theta_b.sub(&e).expect("same lattice");
        let d_b = theta_b.scale(4).sub(&e.scale(6)).expect("same lattice");
        Self { blowup, theta, theta_b, e, x, d_b }
    }

    /// 2E + D_B − 4x, which is zero when the two descriptions of D_B agree.
    pub fn relation_defect(&self) -> DivClass {
        self.e
            .scale(2)
            .add(&self.d_b)
            .and_then(|c| c.sub(&self.x.scale(4)))
            .expect("same lattice")
    }
}

impl Default for SymmetricSquareClasses {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tracked_pairings() {
        let b = SymmetricSquareClasses::new();
        assert_eq!(b.e.self_intersection(), -1);
        assert_eq!(b.d_b.pair(&b.e).unwrap(), 6);
        assert_eq!(b.d_b.self_intersection(), -4);
        assert_eq!(b.x.self_intersection(), 1);
        assert_eq!(b.x.pair(&b.e).unwrap(), 1);
        assert_eq!(b.theta.self_intersection(), 2);
        assert!(b.relation_defect().is_zero());
    }

    #[test]
    fn pushforward_to_abelian_surface() {
        let b = SymmetricSquareClasses::new();
        assert_eq!(blowdown_pushforward(&b.blowup, &b.d_b).unwrap(), b.theta.scale(4));
        assert!(blowdown_pushforward(&b.blowup, &b.e).unwrap().is_zero());
        assert_eq!(blowdown_pushforward(&b.blowup, &b.theta_b).unwrap(), b.theta);
    }

    #[test]
    fn mismatched_lattices() {
        let b = SymmetricSquareClasses::new();
        assert!(matches!(b.theta.pair(&b.e), Err(LedgerError::LatticeMismatch { .. })));
        assert!(matches!(b.blowup.pushforward(&b.theta), Err(LedgerError::LatticeMismatch { .. })));
    }

    #[test]
    fn gram_validation() {
        assert!(matches!(
            Lattice::new("bad", &["a", "b"], vec![vec![1, 2], vec![3, 1]]),
            Err(LedgerError::BadGram(_))
        ));
        assert!(matches!(Lattice::new("bad", &["a"], vec![vec![1, 2]]), Err(LedgerError::BadGram(_))));
    }

    #[test]
    fn display() {
        let b = SymmetricSquareClasses::new();
        assert_eq!(b.d_b.to_string(), "4Theta_B - 6E");
        assert_eq!(b.e.scale(-1).to_string(), "-E");
        assert_eq!(DivClass::zero(b.blowup.base()).to_string(), "0");
    }
}
