use crate::error::Result;
use crate::exactlin::{ensure_endo, multiplicative_law, BilinearOp, LinearMap};
use crate::verdict::{check_laws, CheckVerdict, Law};

/// `(A, μ, α)` meant to be a left Hom-pre-Lie (or Hom-Novikov) algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomPreLie {
    pub mu: BilinearOp,
    pub alpha: LinearMap,
}

impl HomPreLie {
    pub fn new(mu: BilinearOp, alpha: LinearMap) -> Self {
        HomPreLie { mu, alpha }
    }

    pub fn classical(mu: BilinearOp) -> Self {
        let id = LinearMap::identity(mu.dim());
        Self::new(mu, id)
    }

    pub fn dim(&self) -> usize {
        self.mu.dim()
    }

    pub fn laws(&self) -> Result<Vec<Law<'_>>> {
        ensure_endo("structure map α", &self.alpha, self.dim())?;
        Ok(vec![
            multiplicative_law("alpha-multiplicative", &self.alpha, &self.mu),
            pre_lie_law(&self.mu, &self.alpha),
        ])
    }

    pub fn novikov_laws(&self) -> Result<Vec<Law<'_>>> {
        let mut laws = self.laws()?;
        laws.push(novikov_law(&self.mu, &self.alpha));
        Ok(laws)
    }
}

/// `α(x)(yz) − (xy)α(z) = α(y)(xz) − (yx)α(z)`.
fn pre_lie_law<'a>(mu: &'a BilinearOp, alpha: &LinearMap) -> Law<'a> {
    let ac = alpha.columns();
    Law::new("hom-pre-lie", mu.dim(), 3, move |t| {
        let hom_assoc = |x: usize, y: usize, z: usize| {
            let a = mu.mul(ac[x].coords(), mu.basis_product(y, z));
            let b = mu.mul(mu.basis_product(x, y), ac[z].coords());
            a.sub(&b).expect("same dimension").into_coords()
        };
        (hom_assoc(t[0], t[1], t[2]), hom_assoc(t[1], t[0], t[2]))
    })
}

/// `(xy)α(z) = (xz)α(y)`.
fn novikov_law<'a>(mu: &'a BilinearOp, alpha: &LinearMap) -> Law<'a> {
    let ac = alpha.columns();
    Law::new("hom-novikov", mu.dim(), 3, move |t| {
        let lhs = mu.mul(mu.basis_product(t[0], t[1]), ac[t[2]].coords());
        let rhs = mu.mul(mu.basis_product(t[0], t[2]), ac[t[1]].coords());
        (lhs.into_coords(), rhs.into_coords())
    })
}

pub fn check_hom_prelie(p: &HomPreLie) -> Result<CheckVerdict> {
    Ok(check_laws(&p.laws()?))
}

/// Hom-pre-Lie laws followed by the Hom-Novikov identity.
pub fn check_hom_novikov(p: &HomPreLie) -> Result<CheckVerdict> {
    Ok(check_laws(&p.novikov_laws()?))
}
