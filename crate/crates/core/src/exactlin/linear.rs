use super::{Scalar, Vector};
use crate::error::{ensure_dim, Error, Result};

/// A linear map `k^{dim_in} -> k^{dim_out}`.
///
/// Column convention: the image of `e_j` is `Σ_i entry(i, j) e_i`, so the
/// matrix acts on column vectors from the left.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearMap {
    dim_in: usize,
    dim_out: usize,
    // row-major, dim_out rows of dim_in entries
    entries: Vec<Scalar>,
}

impl LinearMap {
    pub fn from_fn(
        dim_out: usize,
        dim_in: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(dim_out * dim_in);
        for i in 0..dim_out {
            for j in 0..dim_in {
                entries.push(f(i, j));
            }
        }
        LinearMap {
            dim_in,
            dim_out,
            entries,
        }
    }

    /// Builds a map from its rows. All rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim_out = rows.len();
        let dim_in = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(dim_out * dim_in);
        for row in rows {
            ensure_dim("matrix row", dim_in, row.len())?;
            entries.extend(row);
        }
        Ok(LinearMap {
            dim_in,
            dim_out,
            entries,
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
    }

    /// Builds a map from the images of the basis vectors.
    pub fn from_columns(columns: &[Vector]) -> Result<Self> {
        let dim_in = columns.len();
        let dim_out = columns.first().map_or(0, Vector::dim);
        for c in columns {
            ensure_dim("matrix column", dim_out, c.dim())?;
        }
        Ok(Self::from_fn(dim_out, dim_in, |i, j| columns[j][i].clone()))
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, dim, |i, j| {
            if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    pub fn zero(dim_out: usize, dim_in: usize) -> Self {
        Self::from_fn(dim_out, dim_in, |_, _| Scalar::zero())
    }

    pub fn diagonal(diag: &[Scalar]) -> Self {
        let d = diag.len();
        Self::from_fn(d, d, |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                Scalar::zero()
            }
        })
    }

    pub fn diagonal_ints(diag: &[i64]) -> Self {
        Self::diagonal(
            &diag
                .iter()
                .map(|&x| Scalar::from_int(x))
                .collect::<Vec<_>>(),
        )
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn is_square(&self) -> bool {
        self.dim_in == self.dim_out
    }

    /// Coefficient of `e_i` in the image of `e_j`.
    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.dim_in + j]
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.entries
            .chunks(self.dim_in.max(1))
            .take(self.dim_out)
            .map(<[Scalar]>::to_vec)
            .collect()
    }

    /// Image of the basis vector `e_j`.
    pub fn column(&self, j: usize) -> Vector {
        Vector::new(
            (0..self.dim_out)
                .map(|i| self.entry(i, j).clone())
                .collect(),
        )
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.dim_in).map(|j| self.column(j)).collect()
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        ensure_dim("linear map argument", self.dim_in, v.dim())?;
        Ok(self.apply_coords(v.coords()))
    }

    pub(crate) fn apply_coords(&self, v: &[Scalar]) -> Vector {
        let mut out = vec![Scalar::zero(); self.dim_out];
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, slot) in out.iter_mut().enumerate() {
                let e = self.entry(i, j);
                if !e.is_zero() {
                    *slot += c * e;
                }
            }
        }
        Vector::new(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.dim_in)
    }

    pub fn is_invertible(&self) -> bool {
        self.invert().is_ok()
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.same_shape(other, "map addition")?;
        Ok(LinearMap {
            dim_in: self.dim_in,
            dim_out: self.dim_out,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.same_shape(other, "map subtraction")?;
        Ok(LinearMap {
            dim_in: self.dim_in,
            dim_out: self.dim_out,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            dim_in: self.dim_in,
            dim_out: self.dim_out,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    fn same_shape(&self, other: &LinearMap, context: &'static str) -> Result<()> {
        ensure_dim(context, self.dim_in, other.dim_in)?;
        ensure_dim(context, self.dim_out, other.dim_out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        ensure_dim("composition", self.dim_in, other.dim_out)?;
        let mut out = LinearMap::zero(self.dim_out, other.dim_in);
        for i in 0..self.dim_out {
            for k in 0..self.dim_in {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.dim_in {
                    let b = other.entry(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.dim_in + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self^k`, with `self^0` the identity.
    pub fn pow(&self, k: u32) -> Result<LinearMap> {
        ensure_dim("power of a map", self.dim_out, self.dim_in)?;
        let mut acc = LinearMap::identity(self.dim_in);
        for _ in 0..k {
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }

    pub fn commutes_with(&self, other: &LinearMap) -> Result<bool> {
        Ok(self.compose(other)? == other.compose(self)?)
    }

    /// Inverse by Gauss-Jordan elimination over the rationals.
    pub fn invert(&self) -> Result<LinearMap> {
        ensure_dim("inversion", self.dim_out, self.dim_in)?;
        let n = self.dim_in;
        let mut a: Vec<Vec<Scalar>> = self.rows();
        let mut inv: Vec<Vec<Scalar>> = LinearMap::identity(n).rows();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::NotInvertible)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].recip().expect("nonzero pivot");
            for j in 0..n {
                a[col][j] = &a[col][j] * &p;
                inv[col][j] = &inv[col][j] * &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for j in 0..n {
                    let da = &factor * &a[col][j];
                    let di = &factor * &inv[col][j];
                    a[r][j] -= da;
                    inv[r][j] -= di;
                }
            }
        }
        LinearMap::from_rows(inv)
    }

    /// Row-major coefficient list, used as a search coordinate vector.
    pub(crate) fn from_flat(dim_out: usize, dim_in: usize, entries: Vec<Scalar>) -> Self {
        debug_assert_eq!(entries.len(), dim_out * dim_in);
        LinearMap {
            dim_in,
            dim_out,
            entries,
        }
    }
}
