use super::{LinearMap, Scalar, Vector};
use crate::error::{ensure_dim, Result};

/// A bilinear product given by structure constants:
/// `e_i · e_j = Σ_k c[i][j][k] e_k`. No symmetry is assumed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BilinearOp {
    dim: usize,
    // flat index (i * dim + j) * dim + k, so each product e_i e_j is contiguous
    cube: Vec<Scalar>,
}

impl BilinearOp {
    pub fn zero(dim: usize) -> Self {
        BilinearOp {
            dim,
            cube: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut cube = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    cube.push(f(i, j, k));
                }
            }
        }
        BilinearOp { dim, cube }
    }

    /// Builds the product from the vectors `e_i · e_j`.
    pub fn from_products(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Result<Self> {
        let mut cube = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                ensure_dim("structure constants", dim, v.dim())?;
                cube.extend(v.into_coords());
            }
        }
        Ok(BilinearOp { dim, cube })
    }

    /// Builds the product from a nested `[i][j][k]` array.
    pub fn from_nested(cube: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let dim = cube.len();
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for plane in cube {
            ensure_dim("structure constants", dim, plane.len())?;
            for row in plane {
                ensure_dim("structure constants", dim, row.len())?;
                flat.extend(row);
            }
        }
        Ok(BilinearOp { dim, cube: flat })
    }

    /// Sparse constructor from `(i, j, k, c)` entries.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let mut op = Self::zero(dim);
        for &(i, j, k, c) in entries {
            op.cube[(i * dim + j) * dim + k] = Scalar::from_int(c);
        }
        op
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.cube[(i * self.dim + j) * self.dim + k]
    }

    pub fn nested(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.basis_product(i, j).to_vec())
                    .collect()
            })
            .collect()
    }

    /// Coordinates of `e_i · e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.cube[start..start + self.dim]
    }

    pub fn apply(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        ensure_dim("left factor", self.dim, u.dim())?;
        ensure_dim("right factor", self.dim, v.dim())?;
        Ok(self.mul(u.coords(), v.coords()))
    }

    /// Unchecked bilinear extension on coordinate slices of length `dim`.
    pub(crate) fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = Vector::zeros(self.dim);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.axpy(&(a * b), self.basis_product(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cube.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &BilinearOp) -> Result<BilinearOp> {
        ensure_dim("sum of products", self.dim, other.dim)?;
        Ok(BilinearOp {
            dim: self.dim,
            cube: self
                .cube
                .iter()
                .zip(&other.cube)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &BilinearOp) -> Result<BilinearOp> {
        ensure_dim("difference of products", self.dim, other.dim)?;
        Ok(BilinearOp {
            dim: self.dim,
            cube: self
                .cube
                .iter()
                .zip(&other.cube)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> BilinearOp {
        BilinearOp {
            dim: self.dim,
            cube: self.cube.iter().map(|a| a * c).collect(),
        }
    }

    /// The opposite product `x ·op y = y · x`.
    pub fn opposite(&self) -> BilinearOp {
        BilinearOp::from_fn(self.dim, |i, j, k| self.get(j, i, k).clone())
    }

    /// The commutator `[x, y] = xy - yx`.
    pub fn commutator(&self) -> BilinearOp {
        BilinearOp::from_fn(self.dim, |i, j, k| self.get(i, j, k) - self.get(j, i, k))
    }

    /// `f ∘ μ`.
    pub fn then_map(&self, f: &LinearMap) -> Result<BilinearOp> {
        ensure_dim("post-composed map", self.dim, f.dim_in())?;
        ensure_dim("post-composed map", self.dim, f.dim_out())?;
        BilinearOp::from_products(self.dim, |i, j| f.apply_coords(self.basis_product(i, j)))
    }

    /// `μ ∘ (f ⊗ g)`.
    pub fn precompose(&self, f: &LinearMap, g: &LinearMap) -> Result<BilinearOp> {
        for m in [f, g] {
            ensure_dim("pre-composed map", self.dim, m.dim_in())?;
            ensure_dim("pre-composed map", self.dim, m.dim_out())?;
        }
        let fc = f.columns();
        let gc = g.columns();
        BilinearOp::from_products(self.dim, |i, j| self.mul(fc[i].coords(), gc[j].coords()))
    }
}
