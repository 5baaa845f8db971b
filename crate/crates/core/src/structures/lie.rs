use crate::error::Result;
use crate::exactlin::{ensure_endo, multiplicative_law, BilinearOp, LinearMap, Scalar};
use crate::verdict::{check_laws, CheckVerdict, Law};

/// `(L, [·,·], α)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomLie {
    pub bracket: BilinearOp,
    pub alpha: LinearMap,
}

impl HomLie {
    pub fn new(bracket: BilinearOp, alpha: LinearMap) -> Self {
        HomLie { bracket, alpha }
    }

    pub fn classical(bracket: BilinearOp) -> Self {
        let id = LinearMap::identity(bracket.dim());
        Self::new(bracket, id)
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn laws(&self) -> Result<Vec<Law<'_>>> {
        ensure_endo("structure map α", &self.alpha, self.dim())?;
        let b = &self.bracket;
        let ac = self.alpha.columns();
        Ok(vec![
            multiplicative_law("alpha-multiplicative", &self.alpha, b),
            Law::new("skew-symmetry", b.dim(), 2, move |t| {
                let lhs = b.basis_product(t[0], t[1]).to_vec();
                let rhs = b.basis_product(t[1], t[0]).iter().map(|c| -c).collect();
                (lhs, rhs)
            }),
            Law::new("hom-jacobi", b.dim(), 3, move |t| {
                let (x, y, z) = (t[0], t[1], t[2]);
                let total = b
                    .mul(ac[x].coords(), b.basis_product(y, z))
                    .add(&b.mul(ac[y].coords(), b.basis_product(z, x)))
                    .and_then(|s| s.add(&b.mul(ac[z].coords(), b.basis_product(x, y))))
                    .expect("same dimension");
                (total.into_coords(), vec![Scalar::zero(); b.dim()])
            }),
        ])
    }
}

/// Multiplicativity of α, skew-symmetry, then the Hom-Jacobi identity.
pub fn check_hom_lie(l: &HomLie) -> Result<CheckVerdict> {
    Ok(check_laws(&l.laws()?))
}

/// `[α(a), [b, c]] = [[a, b], α(c)] + [α(b), [a, c]]`, a consequence of
/// skew-symmetry and Hom-Jacobi.
pub fn hom_lie_derivation_law(l: &HomLie) -> Result<Law<'_>> {
    ensure_endo("structure map α", &l.alpha, l.dim())?;
    let b = &l.bracket;
    let ac = l.alpha.columns();
    Ok(Law::new(
        "hom-lie-derivation-identity",
        b.dim(),
        3,
        move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let lhs = b.mul(ac[x].coords(), b.basis_product(y, z));
            let rhs = b
                .mul(b.basis_product(x, y), ac[z].coords())
                .add(&b.mul(ac[y].coords(), b.basis_product(x, z)))
                .expect("same dimension");
            (lhs.into_coords(), rhs.into_coords())
        },
    ))
}
