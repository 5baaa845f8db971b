use crate::error::{ensure_dim, Result};
use crate::exactlin::{
    commute_law, ensure_endo, multiplicative_law, BilinearOp, LinearMap, Vector,
};
use crate::verdict::{check_laws, CheckVerdict, Law};

/// `(A, μ, α, β)` with an optional unit. Invariants are not enforced on
/// construction; use [`check_bihom_associative`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiHomAlgebra {
    pub mu: BilinearOp,
    pub alpha: LinearMap,
    pub beta: LinearMap,
    pub unit: Option<Vector>,
}

impl BiHomAlgebra {
    pub fn new(mu: BilinearOp, alpha: LinearMap, beta: LinearMap) -> Self {
        BiHomAlgebra {
            mu,
            alpha,
            beta,
            unit: None,
        }
    }

    /// `α = β = id`.
    pub fn classical(mu: BilinearOp) -> Self {
        let id = LinearMap::identity(mu.dim());
        Self::new(mu, id.clone(), id)
    }

    /// `α = β`.
    pub fn hom(mu: BilinearOp, alpha: LinearMap) -> Self {
        Self::new(mu, alpha.clone(), alpha)
    }

    pub fn with_unit(mut self, unit: Vector) -> Self {
        self.unit = Some(unit);
        self
    }

    pub fn dim(&self) -> usize {
        self.mu.dim()
    }

    pub fn is_hom(&self) -> bool {
        self.alpha == self.beta
    }

    pub fn is_classical(&self) -> bool {
        self.alpha.is_identity() && self.beta.is_identity()
    }

    /// The Hom-algebra `(μ, α)`, if `α = β`.
    pub fn as_hom(&self) -> Option<HomAlgebra> {
        self.is_hom()
            .then(|| HomAlgebra::new(self.mu.clone(), self.alpha.clone()))
    }

    pub fn check_shapes(&self) -> Result<()> {
        let d = self.dim();
        ensure_endo("structure map α", &self.alpha, d)?;
        ensure_endo("structure map β", &self.beta, d)?;
        if let Some(u) = &self.unit {
            ensure_dim("unit", d, u.dim())?;
        }
        Ok(())
    }

    /// Laws in validation order: commutation, multiplicativity, BiHom-
    /// associativity, unit laws.
    pub fn laws(&self) -> Result<Vec<Law<'_>>> {
        self.check_shapes()?;
        let mut laws = vec![
            commute_law("structure-maps-commute", &self.alpha, &self.beta),
            multiplicative_law("alpha-multiplicative", &self.alpha, &self.mu),
            multiplicative_law("beta-multiplicative", &self.beta, &self.mu),
            bihom_associativity_law(&self.mu, &self.alpha, &self.beta),
        ];
        if let Some(unit) = &self.unit {
            laws.extend(unit_laws(&self.mu, &self.alpha, &self.beta, unit));
        }
        Ok(laws)
    }
}

/// `(A, μ, α)`: a BiHom-algebra with `α = β`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomAlgebra {
    pub mu: BilinearOp,
    pub alpha: LinearMap,
}

impl HomAlgebra {
    pub fn new(mu: BilinearOp, alpha: LinearMap) -> Self {
        HomAlgebra { mu, alpha }
    }

    pub fn classical(mu: BilinearOp) -> Self {
        let id = LinearMap::identity(mu.dim());
        Self::new(mu, id)
    }

    pub fn dim(&self) -> usize {
        self.mu.dim()
    }

    pub fn to_bihom(&self) -> BiHomAlgebra {
        BiHomAlgebra::hom(self.mu.clone(), self.alpha.clone())
    }

    pub fn laws(&self) -> Result<Vec<Law<'_>>> {
        ensure_endo("structure map α", &self.alpha, self.dim())?;
        Ok(vec![
            multiplicative_law("alpha-multiplicative", &self.alpha, &self.mu),
            bihom_associativity_law(&self.mu, &self.alpha, &self.alpha),
        ])
    }
}

/// `α(x)(yz) = (xy)β(z)`.
pub(crate) fn bihom_associativity_law<'a>(
    mu: &'a BilinearOp,
    alpha: &LinearMap,
    beta: &LinearMap,
) -> Law<'a> {
    let ac = alpha.columns();
    let bc = beta.columns();
    Law::new("bihom-associativity", mu.dim(), 3, move |t| {
        let yz = mu.basis_product(t[1], t[2]);
        let lhs = mu.mul(ac[t[0]].coords(), yz);
        let xy = mu.basis_product(t[0], t[1]);
        let rhs = mu.mul(xy, bc[t[2]].coords());
        (lhs.into_coords(), rhs.into_coords())
    })
}

fn unit_laws<'a>(
    mu: &'a BilinearOp,
    alpha: &'a LinearMap,
    beta: &'a LinearMap,
    unit: &'a Vector,
) -> Vec<Law<'a>> {
    let d = mu.dim();
    vec![
        Law::new("unit-fixed-by-alpha", d, 0, move |_| {
            (
                alpha.apply_coords(unit.coords()).into_coords(),
                unit.coords().to_vec(),
            )
        }),
        Law::new("unit-fixed-by-beta", d, 0, move |_| {
            (
                beta.apply_coords(unit.coords()).into_coords(),
                unit.coords().to_vec(),
            )
        }),
        Law::new("right-unit", d, 1, move |t| {
            let e = Vector::basis(d, t[0]);
            (
                mu.mul(e.coords(), unit.coords()).into_coords(),
                alpha.column(t[0]).into_coords(),
            )
        }),
        Law::new("left-unit", d, 1, move |t| {
            let e = Vector::basis(d, t[0]);
            (
                mu.mul(unit.coords(), e.coords()).into_coords(),
                beta.column(t[0]).into_coords(),
            )
        }),
    ]
}

/// `xy = yx`.
pub(crate) fn commutativity_law(mu: &BilinearOp) -> Law<'_> {
    Law::new("commutative", mu.dim(), 2, move |t| {
        (
            mu.basis_product(t[0], t[1]).to_vec(),
            mu.basis_product(t[1], t[0]).to_vec(),
        )
    })
}

/// Validates commutation of the structure maps, their multiplicativity,
/// BiHom-associativity and, when a unit is present, the unit laws. With
/// `α = β` this is the Hom-associative check, with `α = β = id` the
/// classical one.
pub fn check_bihom_associative(a: &BiHomAlgebra) -> Result<CheckVerdict> {
    Ok(check_laws(&a.laws()?))
}

pub fn check_hom_associative(h: &HomAlgebra) -> Result<CheckVerdict> {
    Ok(check_laws(&h.laws()?))
}

/// Classical associativity of a bare product.
pub fn check_associative(mu: &BilinearOp) -> Result<CheckVerdict> {
    check_hom_associative(&HomAlgebra::classical(mu.clone()))
}

pub fn check_commutative(mu: &BilinearOp) -> CheckVerdict {
    commutativity_law(mu).check()
}
