use super::{BilinearOp, LinearMap, Scalar, Vector};
use crate::error::{ensure_dim, Result};

/// An element of `A ⊗ A`: `Σ coeffs[i][j] e_i ⊗ e_j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor2 {
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl Tensor2 {
    pub fn zero(dim: usize) -> Self {
        Tensor2 {
            dim,
            coeffs: vec![Scalar::zero(); dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut coeffs = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                coeffs.push(f(i, j));
            }
        }
        Tensor2 { dim, coeffs }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = rows.len();
        let mut coeffs = Vec::with_capacity(dim * dim);
        for row in rows {
            ensure_dim("tensor row", dim, row.len())?;
            coeffs.extend(row);
        }
        Ok(Tensor2 { dim, coeffs })
    }

    /// `c · e_i ⊗ e_j`.
    pub fn elementary(dim: usize, i: usize, j: usize, c: Scalar) -> Self {
        let mut t = Self::zero(dim);
        t.coeffs[i * dim + j] = c;
        t
    }

    /// `u ⊗ v`.
    pub fn outer(u: &Vector, v: &Vector) -> Result<Self> {
        ensure_dim("tensor factor", u.dim(), v.dim())?;
        Ok(Tensor2::from_fn(u.dim(), |i, j| &u[i] * &v[j]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.coeffs[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim)
            .map(|i| self.coeffs[i * self.dim..(i + 1) * self.dim].to_vec())
            .collect()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Nonzero terms `(i, j, c)` in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(n, c)| (n / self.dim, n % self.dim, c))
    }

    pub fn add(&self, other: &Tensor2) -> Result<Tensor2> {
        ensure_dim("tensor sum", self.dim, other.dim)?;
        Ok(Tensor2 {
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Tensor2) -> Result<Tensor2> {
        ensure_dim("tensor difference", self.dim, other.dim)?;
        Ok(Tensor2 {
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Tensor2 {
        Tensor2 {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Tensor2 {
        self.scale(&-Scalar::one())
    }

    /// `self += c · u ⊗ v` on raw coordinates.
    pub(crate) fn add_outer(&mut self, c: &Scalar, u: &[Scalar], v: &[Scalar]) {
        if c.is_zero() {
            return;
        }
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ca = c * a;
            for (j, b) in v.iter().enumerate() {
                if !b.is_zero() {
                    self.coeffs[i * self.dim + j] += &ca * b;
                }
            }
        }
    }

    pub(crate) fn from_flat(dim: usize, coeffs: Vec<Scalar>) -> Self {
        debug_assert_eq!(coeffs.len(), dim * dim);
        Tensor2 { dim, coeffs }
    }

    /// Multiplies out the two tensor factors: `Σ c_ij e_i · e_j`.
    pub fn contract(&self, mu: &BilinearOp) -> Result<Vector> {
        ensure_dim("tensor contraction", mu.dim(), self.dim)?;
        let mut out = Vector::zeros(self.dim);
        for (i, j, c) in self.terms() {
            out.axpy(c, mu.basis_product(i, j));
        }
        Ok(out)
    }
}

/// `(f ⊗ g)(t)`.
pub fn map_tensor2(f: &LinearMap, g: &LinearMap, t: &Tensor2) -> Result<Tensor2> {
    for m in [f, g] {
        ensure_dim("tensor map", t.dim(), m.dim_in())?;
        ensure_dim("tensor map", t.dim(), m.dim_out())?;
    }
    let fc = f.columns();
    let gc = g.columns();
    let mut out = Tensor2::zero(t.dim());
    for (a, b, c) in t.terms() {
        out.add_outer(c, fc[a].coords(), gc[b].coords());
    }
    Ok(out)
}

/// An element of `A ⊗ A ⊗ A`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor3 {
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zero(dim: usize) -> Self {
        Tensor3 {
            dim,
            coeffs: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut coeffs = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    coeffs.push(f(i, j, k));
                }
            }
        }
        Tensor3 { dim, coeffs }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[(i * self.dim + j) * self.dim + k]
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// `self += c · u ⊗ v ⊗ w` on raw coordinates.
    pub(crate) fn add_outer(&mut self, c: &Scalar, u: &[Scalar], v: &[Scalar], w: &[Scalar]) {
        if c.is_zero() {
            return;
        }
        let d = self.dim;
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ca = c * a;
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let cab = &ca * b;
                for (k, e) in w.iter().enumerate() {
                    if !e.is_zero() {
                        self.coeffs[(i * d + j) * d + k] += &cab * e;
                    }
                }
            }
        }
    }

    pub fn add(&self, other: &Tensor3) -> Result<Tensor3> {
        ensure_dim("tensor sum", self.dim, other.dim)?;
        Ok(Tensor3 {
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Tensor3) -> Result<Tensor3> {
        ensure_dim("tensor difference", self.dim, other.dim)?;
        Ok(Tensor3 {
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }
}

/// A comultiplication `Δ(e_i) = Σ cube[i][j][k] e_j ⊗ e_k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Comultiplication {
    dim: usize,
    cube: Vec<Scalar>,
}

impl Comultiplication {
    pub fn zero(dim: usize) -> Self {
        Comultiplication {
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
        Comultiplication { dim, cube }
    }

    /// Builds `Δ` from the tensors `Δ(e_i)`.
    pub fn from_images(images: &[Tensor2]) -> Result<Self> {
        let dim = images.len();
        let mut cube = Vec::with_capacity(dim * dim * dim);
        for t in images {
            ensure_dim("comultiplication image", dim, t.dim())?;
            cube.extend_from_slice(t.coeffs());
        }
        Ok(Comultiplication { dim, cube })
    }

    pub fn from_nested(cube: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let dim = cube.len();
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for plane in cube {
            ensure_dim("comultiplication constants", dim, plane.len())?;
            for row in plane {
                ensure_dim("comultiplication constants", dim, row.len())?;
                flat.extend(row);
            }
        }
        Ok(Comultiplication { dim, cube: flat })
    }

    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let mut d = Self::zero(dim);
        for &(i, j, k, c) in entries {
            d.cube[(i * dim + j) * dim + k] = Scalar::from_int(c);
        }
        d
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.cube[(i * self.dim + j) * self.dim + k]
    }

    pub fn nested(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dim).map(|i| self.image(i).rows()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.cube.iter().all(Scalar::is_zero)
    }

    /// `Δ(e_i)`.
    pub fn image(&self, i: usize) -> Tensor2 {
        let n = self.dim * self.dim;
        Tensor2::from_flat(self.dim, self.cube[i * n..(i + 1) * n].to_vec())
    }

    pub fn apply(&self, v: &Vector) -> Result<Tensor2> {
        ensure_dim("comultiplication argument", self.dim, v.dim())?;
        Ok(self.apply_coords(v.coords()))
    }

    pub(crate) fn apply_coords(&self, v: &[Scalar]) -> Tensor2 {
        let n = self.dim * self.dim;
        let mut out = vec![Scalar::zero(); n];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, e) in out.iter_mut().zip(&self.cube[i * n..(i + 1) * n]) {
                if !e.is_zero() {
                    *slot += c * e;
                }
            }
        }
        Tensor2::from_flat(self.dim, out)
    }

    /// `Δ ∘ f`.
    pub fn after_map(&self, f: &LinearMap) -> Result<Comultiplication> {
        ensure_dim("comultiplication precomposition", self.dim, f.dim_out())?;
        ensure_dim("comultiplication precomposition", self.dim, f.dim_in())?;
        let images: Vec<Tensor2> = f
            .columns()
            .iter()
            .map(|c| self.apply_coords(c.coords()))
            .collect();
        Comultiplication::from_images(&images)
    }

    /// `(f ⊗ g) ∘ Δ`.
    pub fn then_maps(&self, f: &LinearMap, g: &LinearMap) -> Result<Comultiplication> {
        let images = (0..self.dim)
            .map(|i| map_tensor2(f, g, &self.image(i)))
            .collect::<Result<Vec<_>>>()?;
        Comultiplication::from_images(&images)
    }

    /// `(Δ ⊗ g)(Δ(v))`, i.e. the first leg comultiplied and `g` on the second.
    pub(crate) fn left_iterate(&self, g: &LinearMap, v: &[Scalar]) -> Tensor3 {
        let t = self.apply_coords(v);
        let gc = g.columns();
        let mut out = Tensor3::zero(self.dim);
        for (a, b, c) in t.terms() {
            let da = self.image(a);
            for (p, q, e) in da.terms() {
                out.add_outer(
                    &(c * e),
                    Vector::basis(self.dim, p).coords(),
                    Vector::basis(self.dim, q).coords(),
                    gc[b].coords(),
                );
            }
        }
        out
    }

    /// `(f ⊗ Δ)(Δ(v))`.
    pub(crate) fn right_iterate(&self, f: &LinearMap, v: &[Scalar]) -> Tensor3 {
        let t = self.apply_coords(v);
        let fc = f.columns();
        let mut out = Tensor3::zero(self.dim);
        for (a, b, c) in t.terms() {
            let db = self.image(b);
            for (p, q, e) in db.terms() {
                out.add_outer(
                    &(c * e),
                    fc[a].coords(),
                    Vector::basis(self.dim, p).coords(),
                    Vector::basis(self.dim, q).coords(),
                );
            }
        }
        out
    }

    /// `μ ∘ Δ` as a linear map.
    pub fn contract(&self, mu: &BilinearOp) -> Result<LinearMap> {
        ensure_dim("μ∘Δ", mu.dim(), self.dim)?;
        let cols = (0..self.dim)
            .map(|i| self.image(i).contract(mu))
            .collect::<Result<Vec<_>>>()?;
        LinearMap::from_columns(&cols)
    }
}
