use crate::error::{ensure_dim, Result};
use crate::exactlin::{commute_law, ensure_endo, multiplicative_law, BilinearOp, LinearMap};
use crate::verdict::{check_laws, CheckVerdict, Law};

/// `(A, ≺, ≻, α, β)`. The classical case is `α = β = id`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiHomDendriform {
    pub prec: BilinearOp,
    pub succ: BilinearOp,
    pub alpha: LinearMap,
    pub beta: LinearMap,
}

impl BiHomDendriform {
    pub fn new(prec: BilinearOp, succ: BilinearOp, alpha: LinearMap, beta: LinearMap) -> Self {
        BiHomDendriform {
            prec,
            succ,
            alpha,
            beta,
        }
    }

    pub fn classical(prec: BilinearOp, succ: BilinearOp) -> Self {
        let id = LinearMap::identity(prec.dim());
        Self::new(prec, succ, id.clone(), id)
    }

    pub fn dim(&self) -> usize {
        self.prec.dim()
    }

    pub fn check_shapes(&self) -> Result<()> {
        let d = self.dim();
        ensure_dim("second dendriform operation", d, self.succ.dim())?;
        ensure_endo("structure map α", &self.alpha, d)?;
        ensure_endo("structure map β", &self.beta, d)
    }

    pub fn laws(&self) -> Result<Vec<Law<'_>>> {
        self.check_shapes()?;
        let d = self.dim();
        let (p, s) = (&self.prec, &self.succ);
        let ac = self.alpha.columns();
        let bc = self.beta.columns();
        let (ac2, bc2) = (ac.clone(), bc.clone());
        let (ac3, bc3) = (ac.clone(), bc.clone());
        Ok(vec![
            commute_law("structure-maps-commute", &self.alpha, &self.beta),
            multiplicative_law("alpha-multiplicative-prec", &self.alpha, p),
            multiplicative_law("alpha-multiplicative-succ", &self.alpha, s),
            multiplicative_law("beta-multiplicative-prec", &self.beta, p),
            multiplicative_law("beta-multiplicative-succ", &self.beta, s),
            // (x ≺ y) ≺ β(z) = α(x) ≺ (y ≺ z + y ≻ z)
            Law::new("dendriform-left", d, 3, move |t| {
                let lhs = p.mul(p.basis_product(t[0], t[1]), bc[t[2]].coords());
                let yz = sum(p.basis_product(t[1], t[2]), s.basis_product(t[1], t[2]));
                let rhs = p.mul(ac[t[0]].coords(), &yz);
                (lhs.into_coords(), rhs.into_coords())
            }),
            // (x ≻ y) ≺ β(z) = α(x) ≻ (y ≺ z)
            Law::new("dendriform-middle", d, 3, move |t| {
                let lhs = p.mul(s.basis_product(t[0], t[1]), bc2[t[2]].coords());
                let rhs = s.mul(ac2[t[0]].coords(), p.basis_product(t[1], t[2]));
                (lhs.into_coords(), rhs.into_coords())
            }),
            // α(x) ≻ (y ≻ z) = (x ≺ y + x ≻ y) ≻ β(z)
            Law::new("dendriform-right", d, 3, move |t| {
                let lhs = s.mul(ac3[t[0]].coords(), s.basis_product(t[1], t[2]));
                let xy = sum(p.basis_product(t[0], t[1]), s.basis_product(t[0], t[1]));
                let rhs = s.mul(&xy, bc3[t[2]].coords());
                (lhs.into_coords(), rhs.into_coords())
            }),
        ])
    }
}

fn sum(
    a: &[crate::exactlin::Scalar],
    b: &[crate::exactlin::Scalar],
) -> Vec<crate::exactlin::Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Commutation and multiplicativity of the structure maps, then the three
/// dendriform axioms.
pub fn check_bihom_dendriform(d: &BiHomDendriform) -> Result<CheckVerdict> {
    Ok(check_laws(&d.laws()?))
}
