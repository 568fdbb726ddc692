//! Dense matrices over `F_q`, semilinear maps and their action on row
//! vectors and projective points.
//!
//! Vectors are rows and groups act on the right. A semilinear map `(A, i)`
//! sends `v` to `v^(p^i) · A`: the Frobenius twist is applied entrywise
//! before the matrix. With this convention
//! `(A, i) · (B, j) = (A^(p^j) · B, i + j)`.

use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::gfield::{Field, FieldElement, FieldError};

/// Largest supported vector space dimension.
pub const MAX_DIM: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular matrix")]
    Singular,
    #[error("matrix over F_{left} combined with F_{right}")]
    FieldMismatch { left: u32, right: u32 },
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone)]
pub struct Matrix {
    field: Field,
    n: usize,
    entries: Vec<FieldElement>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.entries == other.entries
    }
}

impl Eq for Matrix {}

impl Hash for Matrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        for e in &self.entries {
            e.index().hash(state);
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn new(field: &Field, n: usize, entries: Vec<FieldElement>) -> Result<Matrix, MatrixError> {
        if n == 0 || n > MAX_DIM || entries.len() != n * n {
            return Err(MatrixError::DimensionMismatch(format!(
                "{} entries for a {n}x{n} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| !field.contains(**e)) {
            return Err(MatrixError::FieldMismatch {
                left: field.q(),
                right: bad.field_order(),
            });
        }
        Ok(Matrix {
            field: field.clone(),
            n,
            entries,
        })
    }

    /// Matrix from integer rows, reduced into the prime field.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Result<Matrix, MatrixError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(MatrixError::DimensionMismatch("ragged rows".into()));
        }
        let entries = rows.iter().flat_map(|r| r.iter().map(|&x| field.from_int(x))).collect();
        Matrix::new(field, n, entries)
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        Matrix::scalar(field, n, field.one())
    }

    pub fn scalar(field: &Field, n: usize, lambda: FieldElement) -> Matrix {
        Matrix::diagonal(field, &vec![lambda; n])
    }

    pub fn diagonal(field: &Field, diag: &[FieldElement]) -> Matrix {
        let n = diag.len();
        let mut entries = vec![field.zero(); n * n];
        for (i, &d) in diag.iter().enumerate() {
            entries[i * n + i] = d;
        }
        Matrix {
            field: field.clone(),
            n,
            entries,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    fn same_shape(&self, other: &Matrix) -> Result<(), MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch {
                left: self.field.q(),
                right: other.field.q(),
            });
        }
        if self.n != other.n {
            return Err(MatrixError::DimensionMismatch(format!(
                "{}x{} against {}x{}",
                self.n, self.n, other.n, other.n
            )));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.same_shape(other)?;
        Ok(self.mul(other))
    }

    /// Product; panics in debug builds on shape mismatch.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        debug_assert!(self.n == other.n && self.field == other.field);
        let f = &self.field;
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = f.zero();
                for k in 0..n {
                    acc = f.add(acc, f.mul(self.entries[i * n + k], other.entries[k * n + j]));
                }
                entries.push(acc);
            }
        }
        Matrix {
            field: f.clone(),
            n,
            entries,
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.same_shape(other)?;
        let f = &self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&x, &y)| f.add(x, y))
            .collect();
        Ok(Matrix {
            field: f.clone(),
            n: self.n,
            entries,
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.same_shape(other)?;
        let f = &self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&x, &y)| f.sub(x, y))
            .collect();
        Ok(Matrix {
            field: f.clone(),
            n: self.n,
            entries,
        })
    }

    pub fn scale(&self, lambda: FieldElement) -> Matrix {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            n: self.n,
            entries: self.entries.iter().map(|&x| f.mul(lambda, x)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let entries = (0..n * n).map(|k| self.entries[(k % n) * n + k / n]).collect();
        Matrix {
            field: self.field.clone(),
            n,
            entries,
        }
    }

    pub fn trace(&self) -> FieldElement {
        (0..self.n).fold(self.field.zero(), |acc, i| self.field.add(acc, self.get(i, i)))
    }

    /// Entrywise `x -> x^(p^i)`.
    pub fn frobenius(&self, i: u32) -> Matrix {
        if i % self.field.a() == 0 {
            return self.clone();
        }
        let f = &self.field;
        Matrix {
            field: f.clone(),
            n: self.n,
            entries: self.entries.iter().map(|&x| f.frobenius(x, i)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        let (zero, one) = (self.field.zero(), self.field.one());
        self.entries
            .iter()
            .enumerate()
            .all(|(k, &x)| x == if k % (self.n + 1) == 0 { one } else { zero })
    }

    /// Scalar multiple of the identity?
    pub fn as_scalar(&self) -> Option<FieldElement> {
        let lambda = self.entries[0];
        let zero = self.field.zero();
        self.entries
            .iter()
            .enumerate()
            .all(|(k, &x)| x == if k % (self.n + 1) == 0 { lambda } else { zero })
            .then_some(lambda)
    }

    pub fn det(&self) -> FieldElement {
        let f = &self.field;
        let n = self.n;
        let mut m = self.entries.clone();
        let mut det = f.one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !m[r * n + col].is_zero()) else {
                return f.zero();
            };
            if piv != col {
                for j in 0..n {
                    m.swap(piv * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let pv = m[col * n + col];
            det = f.mul(det, pv);
            let pinv = f.inv(pv).expect("pivot nonzero");
            for r in col + 1..n {
                let factor = f.mul(m[r * n + col], pinv);
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    m[r * n + j] = f.sub(m[r * n + j], f.mul(factor, m[col * n + j]));
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Matrix, MatrixError> {
        let f = &self.field;
        let n = self.n;
        let w = 2 * n;
        let mut m = vec![f.zero(); n * w];
        for i in 0..n {
            for j in 0..n {
                m[i * w + j] = self.get(i, j);
            }
            m[i * w + n + i] = f.one();
        }
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !m[r * w + col].is_zero())
                .ok_or(MatrixError::Singular)?;
            if piv != col {
                for j in 0..w {
                    m.swap(piv * w + j, col * w + j);
                }
            }
            let pinv = f.inv(m[col * w + col])?;
            for j in 0..w {
                m[col * w + j] = f.mul(m[col * w + j], pinv);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = m[r * w + col];
                if factor.is_zero() {
                    continue;
                }
                for j in 0..w {
                    m[r * w + j] = f.sub(m[r * w + j], f.mul(factor, m[col * w + j]));
                }
            }
        }
        let entries = (0..n).flat_map(|i| m[i * w + n..i * w + w].to_vec()).collect();
        Ok(Matrix {
            field: f.clone(),
            n,
            entries,
        })
    }

    /// Kronecker product; row index of the result is `i * other.n + k`.
    pub fn tensor(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch {
                left: self.field.q(),
                right: other.field.q(),
            });
        }
        let (a, b) = (self.n, other.n);
        let n = a * b;
        if n > MAX_DIM {
            return Err(MatrixError::DimensionMismatch(format!(
                "tensor product of dimension {n}"
            )));
        }
        let f = &self.field;
        let mut entries = vec![f.zero(); n * n];
        for i in 0..a {
            for j in 0..a {
                let x = self.get(i, j);
                for k in 0..b {
                    for l in 0..b {
                        entries[(i * b + k) * n + j * b + l] = f.mul(x, other.get(k, l));
                    }
                }
            }
        }
        Ok(Matrix {
            field: f.clone(),
            n,
            entries,
        })
    }

    /// Row-major packed entries, four little-endian bytes each.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut key = Vec::with_capacity(1 + 4 * self.entries.len());
        key.push(self.n as u8);
        for e in &self.entries {
            key.extend_from_slice(&e.index().to_le_bytes());
        }
        key
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SemilinearMap {
    mat: Matrix,
    frob: u32,
}

impl fmt::Debug for SemilinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, σ^{})", self.mat, self.frob)
    }
}

impl SemilinearMap {
    pub fn new(mat: Matrix, frob: u32) -> Result<SemilinearMap, MatrixError> {
        if mat.det().is_zero() {
            return Err(MatrixError::Singular);
        }
        let frob = frob % mat.field().a();
        Ok(SemilinearMap { mat, frob })
    }

    pub fn linear(mat: Matrix) -> Result<SemilinearMap, MatrixError> {
        SemilinearMap::new(mat, 0)
    }

    pub fn identity(field: &Field, n: usize) -> SemilinearMap {
        SemilinearMap {
            mat: Matrix::identity(field, n),
            frob: 0,
        }
    }

    /// The field automorphism `v -> v^(p^i)` as a semilinear map.
    pub fn field_automorphism(field: &Field, n: usize, i: u32) -> SemilinearMap {
        SemilinearMap {
            mat: Matrix::identity(field, n),
            frob: i % field.a(),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn frob(&self) -> u32 {
        self.frob
    }

    pub fn n(&self) -> usize {
        self.mat.n
    }

    pub fn field(&self) -> &Field {
        &self.mat.field
    }

    pub fn try_compose(&self, other: &SemilinearMap) -> Result<SemilinearMap, MatrixError> {
        self.mat.same_shape(&other.mat)?;
        Ok(self.compose(other))
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &SemilinearMap) -> SemilinearMap {
        let a = self.field().a();
        SemilinearMap {
            mat: self.mat.frobenius(other.frob).mul(&other.mat),
            frob: (self.frob + other.frob) % a,
        }
    }

    pub fn inverse(&self) -> SemilinearMap {
        // (A, i)^-1 = ((A^-1)^(p^(a-i)), a - i)
        let a = self.field().a();
        let back = (a - self.frob) % a;
        SemilinearMap {
            mat: self
                .mat
                .inverse()
                .expect("semilinear maps are invertible")
                .frobenius(back),
            frob: back,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.frob == 0 && self.mat.is_identity()
    }

    pub fn canonical_key(&self) -> Vec<u8> {
        let mut key = self.mat.canonical_key();
        key.push(self.frob as u8);
        key
    }

    pub fn apply(&self, v: &VectorPoint) -> Result<VectorPoint, MatrixError> {
        if v.dim() != self.n() {
            return Err(MatrixError::DimensionMismatch(format!(
                "vector of length {} under a {}x{} map",
                v.dim(),
                self.n(),
                self.n()
            )));
        }
        let mut buf = [self.field().zero(); MAX_DIM];
        self.apply_slice(&v.coords, &mut buf[..self.n()]);
        Ok(VectorPoint::new(buf[..self.n()].to_vec()))
    }

    pub fn apply_proj(&self, pt: &ProjectivePoint) -> Result<ProjectivePoint, MatrixError> {
        let image = self.apply(&pt.0)?;
        Ok(ProjectivePoint::normalize(self.field(), &image).expect("nonzero image"))
    }

    /// `out = in^(p^frob) · A` without allocation.
    pub fn apply_slice(&self, input: &[FieldElement], out: &mut [FieldElement]) {
        let f = self.field();
        let mut twisted = [f.zero(); MAX_DIM];
        for (t, &x) in twisted.iter_mut().zip(input) {
            *t = f.frobenius(x, self.frob);
        }
        RowAction::apply_slice(&self.mat, &twisted[..self.n()], out);
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VectorPoint {
    coords: Vec<FieldElement>,
}

impl VectorPoint {
    pub fn new(coords: Vec<FieldElement>) -> VectorPoint {
        VectorPoint { coords }
    }

    pub fn from_ints(field: &Field, coords: &[i64]) -> VectorPoint {
        VectorPoint::new(coords.iter().map(|&x| field.from_int(x)).collect())
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Kronecker product `u ⊗ w` with basis order `u_i ⊗ w_k -> i * dim(w) + k`.
    pub fn tensor(&self, other: &VectorPoint, field: &Field) -> Result<VectorPoint, MatrixError> {
        if self.dim() * other.dim() > MAX_DIM {
            return Err(MatrixError::DimensionMismatch("tensor too large".into()));
        }
        let coords = self
            .coords
            .iter()
            .flat_map(|&x| other.coords.iter().map(move |&y| field.mul(x, y)))
            .collect();
        Ok(VectorPoint::new(coords))
    }

    pub fn apply_matrix(&self, m: &Matrix) -> Result<VectorPoint, MatrixError> {
        SemilinearMap {
            mat: m.clone(),
            frob: 0,
        }
        .apply(self)
    }
}

/// A 1-space, stored as its spanning vector with first nonzero entry 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjectivePoint(VectorPoint);

impl ProjectivePoint {
    pub fn normalize(field: &Field, v: &VectorPoint) -> Option<ProjectivePoint> {
        let lead = *v.coords.iter().find(|c| !c.is_zero())?;
        let inv = field.inv(lead).ok()?;
        Some(ProjectivePoint(VectorPoint::new(
            v.coords.iter().map(|&c| field.mul(c, inv)).collect(),
        )))
    }

    pub fn vector(&self) -> &VectorPoint {
        &self.0
    }
}

/// Anything that acts on row vectors of `F_q^n`.
pub trait RowAction {
    fn dim(&self) -> usize;
    fn field(&self) -> &Field;
    /// `out = input · self`, no allocation.
    fn apply_slice(&self, input: &[FieldElement], out: &mut [FieldElement]);
}

impl RowAction for Matrix {
    fn dim(&self) -> usize {
        self.n
    }

    fn field(&self) -> &Field {
        &self.field
    }

    fn apply_slice(&self, input: &[FieldElement], out: &mut [FieldElement]) {
        let f = &self.field;
        let n = self.n;
        for (j, o) in out.iter_mut().enumerate().take(n) {
            let mut acc = f.zero();
            for (k, &t) in input.iter().enumerate().take(n) {
                if !t.is_zero() {
                    acc = f.add(acc, f.mul(t, self.entries[k * n + j]));
                }
            }
            *o = acc;
        }
    }
}

impl RowAction for SemilinearMap {
    fn dim(&self) -> usize {
        self.mat.n
    }

    fn field(&self) -> &Field {
        &self.mat.field
    }

    fn apply_slice(&self, input: &[FieldElement], out: &mut [FieldElement]) {
        SemilinearMap::apply_slice(self, input, out)
    }
}

/// `F_q^n` with index maps for `V^♯` and `P_1(V)`.
///
/// Vectors are indexed by their packed value `Σ x_i q^(n-1-i)`, which is
/// lexicographic order with coordinate 0 most significant; `V^♯` drops the
/// zero vector so `index = packed - 1`. Projective points are ordered by the
/// packed value of their normalized representative.
#[derive(Clone, Debug)]
pub struct VectorSpace {
    field: Field,
    n: usize,
}

impl VectorSpace {
    pub fn new(field: &Field, n: usize) -> VectorSpace {
        assert!(n >= 1 && n <= MAX_DIM);
        VectorSpace {
            field: field.clone(),
            n,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn nonzero_count(&self) -> usize {
        (self.field.q() as usize).pow(self.n as u32) - 1
    }

    pub fn projective_count(&self) -> usize {
        self.nonzero_count() / (self.field.q() as usize - 1)
    }

    fn pack(&self, coords: &[FieldElement]) -> usize {
        let q = self.field.q() as usize;
        coords.iter().fold(0, |acc, c| acc * q + c.index() as usize)
    }

    fn unpack(&self, mut packed: usize, out: &mut [FieldElement]) {
        let q = self.field.q() as usize;
        for slot in out.iter_mut().rev() {
            *slot = self.field.from_index_unchecked((packed % q) as u32);
            packed /= q;
        }
    }

    /// Index of a nonzero vector in `V^♯`.
    pub fn vector_index(&self, v: &VectorPoint) -> Option<usize> {
        if v.dim() != self.n || v.is_zero() {
            return None;
        }
        Some(self.pack(&v.coords) - 1)
    }

    pub fn vector_at(&self, index: usize) -> VectorPoint {
        let mut buf = vec![self.field.zero(); self.n];
        self.unpack(index + 1, &mut buf);
        VectorPoint::new(buf)
    }

    pub fn projective_index(&self, pt: &ProjectivePoint) -> Option<usize> {
        self.projective_index_of(&pt.0.coords)
    }

    /// Index of the normalized vector `coords`, which must be normalized.
    fn projective_index_of(&self, coords: &[FieldElement]) -> Option<usize> {
        let q = self.field.q() as usize;
        let lead = coords.iter().position(|c| !c.is_zero())?;
        if coords[lead] != self.field.one() {
            return None;
        }
        let free = self.n - 1 - lead;
        let offset = (q.pow(free as u32) - 1) / (q - 1);
        Some(offset + self.pack(&coords[lead + 1..]))
    }

    pub fn projective_at(&self, index: usize) -> ProjectivePoint {
        let q = self.field.q() as usize;
        let mut free = 0;
        let mut offset = 0;
        while offset + q.pow(free as u32) <= index {
            offset += q.pow(free as u32);
            free += 1;
        }
        let lead = self.n - 1 - free;
        let mut buf = vec![self.field.zero(); self.n];
        buf[lead] = self.field.one();
        self.unpack(index - offset, &mut buf[lead + 1..]);
        ProjectivePoint(VectorPoint::new(buf))
    }

    /// Image of the `V^♯` point `index` under `g`.
    pub fn act_vector<G: RowAction>(&self, g: &G, index: usize) -> usize {
        let n = self.n;
        let mut v = [self.field.zero(); MAX_DIM];
        let mut w = [self.field.zero(); MAX_DIM];
        self.unpack(index + 1, &mut v[..n]);
        g.apply_slice(&v[..n], &mut w[..n]);
        self.pack(&w[..n]) - 1
    }

    /// Image of the `P_1(V)` point `index` under `g`.
    pub fn act_projective<G: RowAction>(&self, g: &G, index: usize) -> usize {
        let n = self.n;
        let f = &self.field;
        let pt = self.projective_at(index);
        let mut w = [f.zero(); MAX_DIM];
        g.apply_slice(pt.0.coords(), &mut w[..n]);
        let lead = w[..n].iter().position(|c| !c.is_zero()).expect("invertible");
        let inv = f.inv(w[lead]).expect("nonzero");
        for x in w[..n].iter_mut() {
            *x = f.mul(*x, inv);
        }
        self.projective_index_of(&w[..n]).expect("normalized")
    }
}

/// Basis of the right kernel `{x : M x = 0}` of an `m x cols` system.
pub fn nullspace(field: &Field, rows: &[Vec<FieldElement>], cols: usize) -> Vec<Vec<FieldElement>> {
    let f = field;
    let mut m: Vec<Vec<FieldElement>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = f.inv(m[r][c]).expect("pivot");
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..m.len() {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let factor = m[i][c];
            for j in 0..cols {
                let t = f.mul(factor, m[r][j]);
                m[i][j] = f.sub(m[i][j], t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut x = vec![f.zero(); cols];
            x[fc] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = f.neg(m[row][fc]);
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u32) -> Field {
        Field::of_order(q).unwrap()
    }

    fn all_matrices(field: &Field, n: usize) -> impl Iterator<Item = Matrix> + '_ {
        let q = field.q() as usize;
        let total = q.pow((n * n) as u32);
        (0..total).map(move |mut code| {
            let mut entries = vec![field.zero(); n * n];
            for e in entries.iter_mut() {
                *e = field.from_index(( code % q) as u32).unwrap();
                code /= q;
            }
            Matrix::new(field, n, entries).unwrap()
        })
    }

    #[test]
    fn det_examples() {
        let k = f(11);
        assert_eq!(Matrix::identity(&k, 3).det(), k.one());
        let d = Matrix::from_ints(&k, &[&[2, 0], &[0, 6]]).unwrap();
        assert_eq!(d.det(), k.one());
    }

    #[test]
    fn singular_inverse_errors() {
        let k = f(7);
        let m = Matrix::from_ints(&k, &[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(m.inverse(), Err(MatrixError::Singular));
        assert_eq!(SemilinearMap::linear(m).unwrap_err(), MatrixError::Singular);
    }

    #[test]
    fn inverse_and_transpose_commute() {
        let k = f(5);
        for m in all_matrices(&k, 2).filter(|m| !m.det().is_zero()) {
            let inv = m.inverse().unwrap();
            assert!(m.mul(&inv).is_identity());
            assert_eq!(m.transpose().inverse().unwrap(), inv.transpose());
            assert_eq!(m.transpose().transpose(), m);
        }
    }

    #[test]
    fn det_multiplicative_exhaustive_f3() {
        let k = f(3);
        let all: Vec<Matrix> = all_matrices(&k, 2).collect();
        for a in &all {
            for b in &all {
                assert_eq!(a.mul(b).det(), k.mul(a.det(), b.det()));
            }
        }
    }

    #[test]
    fn tensor_examples() {
        let k = f(7);
        let i2 = Matrix::identity(&k, 2);
        assert!(i2.tensor(&i2).unwrap().is_identity());
        let l = Matrix::scalar(&k, 2, k.from_int(3));
        let m = Matrix::scalar(&k, 2, k.from_int(5));
        assert_eq!(l.tensor(&m).unwrap(), Matrix::scalar(&k, 4, k.from_int(15)));
        let minus = Matrix::scalar(&k, 2, k.from_int(-1));
        assert!(minus.tensor(&minus).unwrap().is_identity());
    }

    #[test]
    fn tensor_det_and_mixed_product() {
        // det(A ⊗ B) = det(A)^2 det(B)^2 over all of GL_2(3), and a sample in GL_2(7)
        let k = f(3);
        let gl: Vec<Matrix> = all_matrices(&k, 2).filter(|m| !m.det().is_zero()).collect();
        for a in &gl {
            for b in &gl {
                let t = a.tensor(b).unwrap();
                let expect = k.mul(k.pow(a.det(), 2), k.pow(b.det(), 2));
                assert_eq!(t.det(), expect);
            }
        }
        let k7 = f(7);
        let a = Matrix::from_ints(&k7, &[&[1, 2], &[3, 5]]).unwrap();
        let b = Matrix::from_ints(&k7, &[&[0, 6], &[1, 4]]).unwrap();
        let c = Matrix::from_ints(&k7, &[&[2, 2], &[1, 3]]).unwrap();
        let d = Matrix::from_ints(&k7, &[&[5, 1], &[1, 1]]).unwrap();
        let lhs = a.tensor(&b).unwrap().mul(&c.tensor(&d).unwrap());
        assert_eq!(lhs, a.mul(&c).tensor(&b.mul(&d)).unwrap());
        assert_eq!(
            a.tensor(&b).unwrap().det(),
            k7.mul(k7.pow(a.det(), 2), k7.pow(b.det(), 2))
        );
        let u = VectorPoint::from_ints(&k7, &[1, 4]);
        let w = VectorPoint::from_ints(&k7, &[3, 6]);
        let lhs = u.tensor(&w, &k7).unwrap().apply_matrix(&a.tensor(&b).unwrap()).unwrap();
        let rhs = u
            .apply_matrix(&a)
            .unwrap()
            .tensor(&w.apply_matrix(&b).unwrap(), &k7)
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn semilinear_group_law() {
        let k = f(169);
        let a = Matrix::new(&k, 2, vec![k.from_index(14).unwrap(), k.one(), k.from_index(5).unwrap(), k.from_index(100).unwrap()]).unwrap();
        let g = SemilinearMap::new(a.clone(), 1).unwrap();
        let id = SemilinearMap::identity(&k, 2);
        let b = SemilinearMap::new(a.transpose(), 1).unwrap();
        assert_eq!(id.compose(&b), b);
        assert!(g.compose(&g.inverse()).is_identity());
        assert!(g.inverse().compose(&g).is_identity());
        assert_eq!(g.compose(&g).frob(), 0);
        let v = VectorPoint::new(vec![k.from_index(17).unwrap(), k.from_index(3).unwrap()]);
        let lhs = g.compose(&b).apply(&v).unwrap();
        let rhs = b.apply(&g.apply(&v).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn right_action_exhaustive_on_small_semilinear_group() {
        let k = f(4);
        let space = VectorSpace::new(&k, 2);
        let maps: Vec<SemilinearMap> = all_matrices(&k, 2)
            .filter(|m| !m.det().is_zero())
            .step_by(7)
            .flat_map(|m| [SemilinearMap::new(m.clone(), 0).unwrap(), SemilinearMap::new(m, 1).unwrap()])
            .collect();
        for g in &maps {
            for h in &maps {
                let gh = g.compose(h);
                for idx in 0..space.nonzero_count() {
                    let v = space.vector_at(idx);
                    assert_eq!(gh.apply(&v).unwrap(), h.apply(&g.apply(&v).unwrap()).unwrap());
                    assert_eq!(space.act_vector(&gh, idx), space.act_vector(h, space.act_vector(g, idx)));
                }
                for idx in 0..space.projective_count() {
                    assert_eq!(
                        space.act_projective(&gh, idx),
                        space.act_projective(h, space.act_projective(g, idx))
                    );
                }
            }
        }
    }

    #[test]
    fn zero_vector_maps_to_zero() {
        let k = f(7);
        let g = SemilinearMap::linear(Matrix::from_ints(&k, &[&[1, 2], &[3, 5]]).unwrap()).unwrap();
        assert!(g.apply(&VectorPoint::from_ints(&k, &[0, 0])).unwrap().is_zero());
        assert!(g.apply(&VectorPoint::from_ints(&k, &[0, 0, 1])).is_err());
    }

    #[test]
    fn point_indexing_roundtrips() {
        for (q, n) in [(7, 2), (4, 3), (3, 4), (9, 2)] {
            let k = f(q);
            let space = VectorSpace::new(&k, n);
            let q = q as usize;
            assert_eq!(space.projective_count(), (q.pow(n as u32) - 1) / (q - 1));
            for i in 0..space.nonzero_count() {
                assert_eq!(space.vector_index(&space.vector_at(i)), Some(i));
            }
            let mut prev = None;
            for i in 0..space.projective_count() {
                let pt = space.projective_at(i);
                assert_eq!(space.projective_index(&pt), Some(i));
                let again = ProjectivePoint::normalize(&k, pt.vector()).unwrap();
                assert_eq!(again, pt);
                if let Some(prev) = prev {
                    assert!(prev < pt);
                }
                prev = Some(pt);
            }
        }
    }

    #[test]
    fn scalars_fix_every_projective_point() {
        let k = f(9);
        let space = VectorSpace::new(&k, 2);
        for lambda in k.elements().skip(1) {
            let s = SemilinearMap::linear(Matrix::scalar(&k, 2, lambda)).unwrap();
            for i in 0..space.projective_count() {
                assert_eq!(space.act_projective(&s, i), i);
            }
        }
    }

    #[test]
    fn nullspace_of_rank_one_system() {
        let k = f(7);
        let rows = vec![vec![k.from_int(1), k.from_int(2), k.from_int(3)]];
        let basis = nullspace(&k, &rows, 3);
        assert_eq!(basis.len(), 2);
        for x in basis {
            let dot = (0..3).fold(k.zero(), |acc, j| k.add(acc, k.mul(rows[0][j], x[j])));
            assert!(dot.is_zero());
        }
    }
}
