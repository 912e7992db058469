use super::{ArithError, Field};

/// Dense row-major matrix over a single exact field.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn new(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self, ArithError> {
        if data.len() != rows * cols {
            return Err(ArithError::ShapeMismatch { expected: rows * cols, got: data.len() });
        }
        Ok(Self { field, rows, cols, data })
    }

    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Self { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(field: F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self, ArithError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(ArithError::DimensionMismatch { left: cols, right: row.len() });
            }
            data.extend(row);
        }
        Ok(Self { field, rows: n, cols, data })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Self { field: self.field.clone(), rows: self.cols, cols: self.rows, data }
    }

    /// `self` on top of `other`.
    pub fn stack(&self, other: &Self) -> Result<Self, ArithError> {
        if self.cols != other.cols {
            return Err(ArithError::DimensionMismatch { left: self.cols, right: other.cols });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>, ArithError> {
        if v.len() != self.cols {
            return Err(ArithError::DimensionMismatch { left: self.cols, right: v.len() });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect())
    }

    /// Fraction-free (Bareiss) forward elimination with column skipping.
    ///
    /// Returns the echelon grid, the pivot columns and the number of row
    /// swaps performed. Every division is by the previous nonzero pivot.
    fn bareiss(&self) -> (Vec<Vec<F::Elem>>, Vec<usize>, usize) {
        let f = &self.field;
        let mut a = self.to_rows();
        let mut prev = f.one();
        let mut pivots = Vec::new();
        let mut swaps = 0;
        for col in 0..self.cols {
            let r = pivots.len();
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !f.is_zero(&a[i][col])) else {
                continue;
            };
            if p != r {
                a.swap(p, r);
                swaps += 1;
            }
            let (top, bottom) = a.split_at_mut(r + 1);
            let pivot_row = &top[r];
            let pivot = pivot_row[col].clone();
            for row in bottom.iter_mut() {
                let lead = row[col].clone();
                for j in col + 1..self.cols {
                    let t = f.sub(&f.mul(&pivot, &row[j]), &f.mul(&lead, &pivot_row[j]));
                    row[j] = f.div(&t, &prev).expect("Bareiss pivots are nonzero");
                }
                row[col] = f.zero();
            }
            prev = pivot;
            pivots.push(col);
        }
        (a, pivots, swaps)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().1.len()
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn determinant(&self) -> Result<F::Elem, ArithError> {
        if self.rows != self.cols {
            return Err(ArithError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let f = &self.field;
        if self.rows == 0 {
            return Ok(f.one());
        }
        let (a, pivots, swaps) = self.bareiss();
        if pivots.len() < self.rows {
            return Ok(f.zero());
        }
        // Without column skipping the last Bareiss pivot is the determinant.
        let det = a[self.rows - 1][self.cols - 1].clone();
        Ok(if swaps % 2 == 1 { f.neg(&det) } else { det })
    }

    /// Basis of the right null space `{v : M v = 0}` via reduced row echelon
    /// form over the field.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let mut a = self.to_rows();
        let mut pivots: Vec<usize> = Vec::new();
        for col in 0..self.cols {
            let r = pivots.len();
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !f.is_zero(&a[i][col])) else {
                continue;
            };
            a.swap(p, r);
            let inv = f.inv(&a[r][col]).expect("nonzero pivot");
            for x in a[r].iter_mut() {
                *x = f.mul(x, &inv);
            }
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == r || f.is_zero(&row[col]) {
                    continue;
                }
                let factor = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(x, &f.mul(&factor, y));
                }
            }
            pivots.push(col);
        }
        let free = (0..self.cols).filter(|c| !pivots.contains(c));
        free.map(|fc| {
            let mut v = vec![f.zero(); self.cols];
            v[fc] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&a[r][fc]);
            }
            v
        })
        .collect()
    }
}

pub fn matrix_rank<F: Field>(m: &ExactMatrix<F>) -> usize {
    m.rank()
}

/// dim(span U ∩ span W) = rank U + rank W − rank [U; W], for row spans.
pub fn subspace_intersection_dim<F: Field>(
    u: &ExactMatrix<F>,
    w: &ExactMatrix<F>,
) -> Result<usize, ArithError> {
    let stacked = u.stack(w)?;
    Ok(u.rank() + w.rank() - stacked.rank())
}
