use std::fmt;

use crate::rings::{Cyclo36, RootOfUnity};

use super::SimError;

/// Dense square matrix over `Q(z₃₆)`, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    dim: usize,
    data: Vec<Cyclo36>,
}

/// Matrices produced from circuits are unitary; the alias documents intent.
pub type UnitaryMatrix = Matrix;

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![Cyclo36::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Cyclo36::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Cyclo36>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Matrix {
            dim,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn diagonal(entries: Vec<Cyclo36>) -> Self {
        let dim = entries.len();
        let mut m = Self::zeros(dim);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * dim + i] = e;
        }
        m
    }

    /// The permutation matrix of `k ↦ images[k]` with phases, i.e.
    /// `M|k⟩ = phases[k]·|images[k]⟩`.
    pub fn monomial(images: &[usize], phases: &[RootOfUnity]) -> Self {
        let dim = images.len();
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            m.data[images[k] * dim + k] = phases[k].to_cyclo();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of qutrits when the dimension is a power of three.
    pub fn qutrits(&self) -> Option<usize> {
        let mut d = self.dim;
        let mut n = 0;
        while d > 1 && d % 3 == 0 {
            d /= 3;
            n += 1;
        }
        (d == 1).then_some(n)
    }

    pub fn get(&self, r: usize, c: usize) -> &Cyclo36 {
        &self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Cyclo36) {
        self.data[r * self.dim + c] = v;
    }

    pub fn entries(&self) -> &[Cyclo36] {
        &self.data
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [Cyclo36] {
        &mut self.data
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Cyclo36]> {
        self.data.chunks(self.dim)
    }

    fn check_dims(&self, other: &Matrix) -> Result<(), SimError> {
        if self.dim != other.dim {
            return Err(SimError::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, SimError> {
        self.check_dims(other)?;
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.data[k * n + j];
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (a, b) = (self.dim, other.dim);
        let n = a * b;
        let mut out = Matrix::zeros(n);
        for i in 0..a {
            for j in 0..a {
                let x = self.get(i, j);
                if x.is_zero() {
                    continue;
                }
                for k in 0..b {
                    for l in 0..b {
                        let y = other.get(k, l);
                        if !y.is_zero() {
                            out.data[(i * b + k) * n + j * b + l] = x * y;
                        }
                    }
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix {
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].conj();
            }
        }
        out
    }

    pub fn scale(&self, c: &Cyclo36) -> Matrix {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn trace(&self) -> Cyclo36 {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.dim)
    }

    pub fn is_unitary(&self) -> bool {
        self.adjoint()
            .mul(self)
            .map(|m| m.is_identity())
            .unwrap_or(false)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Cyclo36::is_zero)
    }

    /// The `3×3` block in block-row `i`, block-column `j` of a `9×9` matrix
    /// (blocks indexed by the value of qutrit 0).
    pub fn block3(&self, i: usize, j: usize) -> Matrix {
        assert_eq!(self.dim, 9, "block3 needs a 9x9 matrix");
        let mut out = Matrix::zeros(3);
        for r in 0..3 {
            for c in 0..3 {
                out.set(r, c, self.get(3 * i + r, 3 * j + c).clone());
            }
        }
        out
    }

    /// Multi-line rendering of exact entries, one row per line.
    pub fn symbolic(&self) -> String {
        self.render(|c| c.symbolic())
    }

    /// Decimal approximation, for display only.
    pub fn decimal(&self) -> String {
        self.render(|c| c.decimal())
    }

    fn render(&self, f: impl Fn(&Cyclo36) -> String) -> String {
        let cells: Vec<String> = self.data.iter().map(f).collect();
        let width = cells.iter().map(|s| s.chars().count()).max().unwrap_or(1);
        let mut out = String::new();
        for row in cells.chunks(self.dim) {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            out.push_str("[ ");
            out.push_str(&line.join("  "));
            out.push_str(" ]\n");
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{}", self.dim, self.dim, self.symbolic())
    }
}

pub fn equal_exact(a: &Matrix, b: &Matrix) -> Result<bool, SimError> {
    a.check_dims(b)?;
    Ok(a == b)
}

/// Some unit `c` with `a = c·b`, found from the first nonzero entry of `b`.
pub fn equal_up_to_phase(a: &Matrix, b: &Matrix) -> Result<Option<Cyclo36>, SimError> {
    a.check_dims(b)?;
    let Some(k) = b.data.iter().position(|x| !x.is_zero()) else {
        return Ok(None);
    };
    let c = a.data[k].checked_div(&b.data[k]).expect("nonzero divisor");
    if !c.norm_sq().is_one() {
        return Ok(None);
    }
    let holds = a.data.iter().zip(b.data.iter()).all(|(x, y)| *x == &c * y);
    Ok(holds.then_some(c))
}

/// `block-diag(𝕀, 𝕀, phase·inner)` on control ⊗ target.
pub fn controlled_target(inner: &Matrix, phase: Option<&Cyclo36>) -> Matrix {
    assert_eq!(inner.dim, 3, "controlled_target takes a 3x3 matrix");
    let mut out = Matrix::identity(9);
    for r in 0..3 {
        for c in 0..3 {
            let v = inner.get(r, c);
            let v = match phase {
                Some(p) => v * p,
                None => v.clone(),
            };
            out.set(6 + r, 6 + c, v);
        }
    }
    out
}

/// `true` when `a = (diag(1, 1, phase) ⊗ 𝕀)·b` for `9×9` matrices, i.e. `a`
/// matches `b` up to a phase controlled on qutrit 0 being `|2⟩`.
pub fn equal_up_to_controlled_phase(
    a: &Matrix,
    b: &Matrix,
    phase: &Cyclo36,
) -> Result<bool, SimError> {
    a.check_dims(b)?;
    if a.dim != 9 {
        return Err(SimError::DimMismatch {
            left: a.dim,
            right: 9,
        });
    }
    let mut adjusted = b.clone();
    for r in 6..9 {
        for c in 0..9 {
            let v = b.get(r, c) * phase;
            adjusted.set(r, c, v);
        }
    }
    Ok(*a == adjusted)
}
