use super::algebra::{bihom_associativity_law, HomAlgebra};
use crate::error::{ensure_dim, Result};
use crate::exactlin::{
    ensure_endo, map_tensor2, multiplicative_law, BilinearOp, Comultiplication, LinearMap, Tensor2,
};
use crate::verdict::{check_laws, CheckVerdict, Law};

/// `(C, Δ, α)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomCoalgebra {
    pub delta: Comultiplication,
    pub alpha: LinearMap,
}

impl HomCoalgebra {
    pub fn new(delta: Comultiplication, alpha: LinearMap) -> Self {
        HomCoalgebra { delta, alpha }
    }

    pub fn dim(&self) -> usize {
        self.delta.dim()
    }

    pub fn laws(&self) -> Result<Vec<Law<'_>>> {
        ensure_endo("structure map α", &self.alpha, self.dim())?;
        Ok(coalgebra_laws(&self.delta, &self.alpha))
    }
}

fn coalgebra_laws<'a>(delta: &'a Comultiplication, alpha: &'a LinearMap) -> Vec<Law<'a>> {
    let d = delta.dim();
    vec![
        Law::new("alpha-comultiplicative", d, 1, move |t| {
            let lhs = map_tensor2(alpha, alpha, &delta.image(t[0])).expect("shapes checked");
            let rhs = delta.apply_coords(alpha.column(t[0]).coords());
            (lhs.coeffs().to_vec(), rhs.coeffs().to_vec())
        }),
        Law::new("hom-coassociativity", d, 1, move |t| {
            let e = crate::exactlin::Vector::basis(d, t[0]);
            let lhs = delta.left_iterate(alpha, e.coords());
            let rhs = delta.right_iterate(alpha, e.coords());
            (lhs.coeffs().to_vec(), rhs.coeffs().to_vec())
        }),
    ]
}

/// `(A, μ, Δ, α)`: Hom-associative algebra, Hom-coassociative coalgebra and
/// the infinitesimal compatibility
/// `Δ(ab) = α(a)b₁ ⊗ α(b₂) + α(a₁) ⊗ a₂α(b)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InfHomBialgebra {
    pub mu: BilinearOp,
    pub delta: Comultiplication,
    pub alpha: LinearMap,
}

impl InfHomBialgebra {
    pub fn new(mu: BilinearOp, delta: Comultiplication, alpha: LinearMap) -> Self {
        InfHomBialgebra { mu, delta, alpha }
    }

    /// `α = id`.
    pub fn classical(mu: BilinearOp, delta: Comultiplication) -> Self {
        let id = LinearMap::identity(mu.dim());
        Self::new(mu, delta, id)
    }

    pub fn dim(&self) -> usize {
        self.mu.dim()
    }

    pub fn algebra(&self) -> HomAlgebra {
        HomAlgebra::new(self.mu.clone(), self.alpha.clone())
    }

    pub fn coalgebra(&self) -> HomCoalgebra {
        HomCoalgebra::new(self.delta.clone(), self.alpha.clone())
    }

    pub fn check_shapes(&self) -> Result<()> {
        ensure_dim("comultiplication", self.dim(), self.delta.dim())?;
        ensure_endo("structure map α", &self.alpha, self.dim())
    }

    /// Algebra laws, then coalgebra laws, then compatibility.
    pub fn laws(&self) -> Result<Vec<Law<'_>>> {
        self.check_shapes()?;
        let mut laws = vec![
            multiplicative_law("alpha-multiplicative", &self.alpha, &self.mu),
            bihom_associativity_law(&self.mu, &self.alpha, &self.alpha),
        ];
        laws.extend(coalgebra_laws(&self.delta, &self.alpha));
        laws.push(compatibility_law(&self.mu, &self.delta, &self.alpha));
        Ok(laws)
    }
}

fn compatibility_law<'a>(
    mu: &'a BilinearOp,
    delta: &'a Comultiplication,
    alpha: &'a LinearMap,
) -> Law<'a> {
    let d = mu.dim();
    let ac = alpha.columns();
    Law::new("infinitesimal-compatibility", d, 2, move |t| {
        let (a, b) = (t[0], t[1]);
        let lhs = delta.apply_coords(mu.basis_product(a, b));
        let mut rhs = Tensor2::zero(d);
        // α(a) b₁ ⊗ α(b₂)
        for (p, q, c) in delta.image(b).terms() {
            let left = mu.mul(
                ac[a].coords(),
                crate::exactlin::Vector::basis(d, p).coords(),
            );
            rhs.add_outer(c, left.coords(), ac[q].coords());
        }
        // α(a₁) ⊗ a₂ α(b)
        for (p, q, c) in delta.image(a).terms() {
            let right = mu.mul(
                crate::exactlin::Vector::basis(d, q).coords(),
                ac[b].coords(),
            );
            rhs.add_outer(c, ac[p].coords(), right.coords());
        }
        (lhs.coeffs().to_vec(), rhs.coeffs().to_vec())
    })
}

/// Comultiplicativity of α and Hom-coassociativity.
pub fn check_hom_coassociative(c: &HomCoalgebra) -> Result<CheckVerdict> {
    Ok(check_laws(&c.laws()?))
}

/// Only the compatibility identity between `μ` and `Δ`.
pub fn check_infinitesimal_compat(b: &InfHomBialgebra) -> Result<CheckVerdict> {
    b.check_shapes()?;
    Ok(compatibility_law(&b.mu, &b.delta, &b.alpha).check())
}

/// Every law of an infinitesimal Hom-bialgebra.
pub fn check_inf_hom_bialgebra(b: &InfHomBialgebra) -> Result<CheckVerdict> {
    Ok(check_laws(&b.laws()?))
}
