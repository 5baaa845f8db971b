//! Twisted derivations and the Rota-Baxter family of operators (weight zero).

use crate::error::{Error, Result};
use crate::exactlin::{commute_law, ensure_endo, is_algebra_map, BilinearOp, LinearMap};
use crate::verdict::{check_laws, CheckVerdict, Law};

/// Which Leibniz rule a derivation is checked against.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DerivationKind {
    /// `D(ab) = D(a)τ(b) + σ(a)D(b)`, a (τ,σ)-derivation.
    Twisted { tau: LinearMap, sigma: LinearMap },
    /// `D(ab) = D(a)α^k(b) + α^k(a)D(b)` with `D∘α = α∘D`.
    AlphaPower { alpha: LinearMap, k: u32 },
}

impl DerivationKind {
    /// The usual derivation.
    pub fn ordinary(dim: usize) -> Self {
        DerivationKind::AlphaPower {
            alpha: LinearMap::identity(dim),
            k: 0,
        }
    }
}

/// Which Rota-Baxter identity an operator is checked against.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RotaBaxterKind {
    /// `R(a)R(b) = R(σ(R(a))b + aτ(R(b)))`.
    Paren { sigma: LinearMap, tau: LinearMap },
    /// `R(σ(a))R(τ(b)) = R(σ(a)R(b) + R(a)τ(b))`.
    Brace { sigma: LinearMap, tau: LinearMap },
    /// `{α^n, α^n}` with `R∘α = α∘R`.
    AlphaPower { alpha: LinearMap, n: u32 },
    /// `{αβ, αβ}` with `R` commuting with α and β.
    AlphaBeta { alpha: LinearMap, beta: LinearMap },
    /// `[R(α^n a), R(α^n b)] = R([α^n a, R b] + [R a, α^n b])` on a bracket,
    /// with `R∘α = α∘R`.
    LieAlphaPower { alpha: LinearMap, n: u32 },
}

impl RotaBaxterKind {
    /// Ordinary weight-zero Rota-Baxter operator.
    pub fn ordinary(dim: usize) -> Self {
        RotaBaxterKind::AlphaPower {
            alpha: LinearMap::identity(dim),
            n: 0,
        }
    }
}

pub(crate) fn require_algebra_map(name: &str, f: &LinearMap, m: &BilinearOp) -> Result<()> {
    ensure_endo("parameter map", f, m.dim())?;
    let v = is_algebra_map(f, m)?;
    if v.passed {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{name} is not an algebra map ({v})"
        )))
    }
}

/// Leibniz rule `D(ab) = D(a)right(b) + left(a)D(b)`.
fn leibniz_law<'a>(
    name: &str,
    d: &'a LinearMap,
    m: &'a BilinearOp,
    right: &LinearMap,
    left: &LinearMap,
) -> Law<'a> {
    let dc = d.columns();
    let rc = right.columns();
    let lc = left.columns();
    Law::new(name, m.dim(), 2, move |t| {
        let (a, b) = (t[0], t[1]);
        let lhs = d.apply_coords(m.basis_product(a, b));
        let rhs = m
            .mul(dc[a].coords(), rc[b].coords())
            .add(&m.mul(lc[a].coords(), dc[b].coords()))
            .expect("same dimension");
        (lhs.into_coords(), rhs.into_coords())
    })
}

/// `R(σ(a))R(τ(b)) = R(σ(a)R(b) + R(a)τ(b))`.
fn brace_law<'a>(
    name: &str,
    r: &'a LinearMap,
    m: &'a BilinearOp,
    sigma: &LinearMap,
    tau: &LinearMap,
) -> Law<'a> {
    let rc = r.columns();
    let sc = sigma.columns();
    let tc = tau.columns();
    Law::new(name, m.dim(), 2, move |t| {
        let (a, b) = (t[0], t[1]);
        let r_sa = r.apply_coords(sc[a].coords());
        let r_tb = r.apply_coords(tc[b].coords());
        let lhs = m.mul(r_sa.coords(), r_tb.coords());
        let inner = m
            .mul(sc[a].coords(), rc[b].coords())
            .add(&m.mul(rc[a].coords(), tc[b].coords()))
            .expect("same dimension");
        let rhs = r.apply_coords(inner.coords());
        (lhs.into_coords(), rhs.into_coords())
    })
}

/// `R(a)R(b) = R(σ(R(a))b + aτ(R(b)))`.
fn paren_law<'a>(
    r: &'a LinearMap,
    m: &'a BilinearOp,
    sigma: &LinearMap,
    tau: &LinearMap,
) -> Result<Law<'a>> {
    let rc = r.columns();
    let s_r = sigma.compose(r)?.columns();
    let t_r = tau.compose(r)?.columns();
    Ok(Law::new("paren-rota-baxter", m.dim(), 2, move |t| {
        let (a, b) = (t[0], t[1]);
        let lhs = m.mul(rc[a].coords(), rc[b].coords());
        let e = |i| crate::exactlin::Vector::basis(m.dim(), i);
        let inner = m
            .mul(s_r[a].coords(), e(b).coords())
            .add(&m.mul(e(a).coords(), t_r[b].coords()))
            .expect("same dimension");
        (
            lhs.into_coords(),
            r.apply_coords(inner.coords()).into_coords(),
        )
    }))
}

/// Checks the Leibniz rule selected by `kind` on all basis pairs. Twisting
/// maps must be algebra maps of `m`; otherwise this is an
/// [`Error::InvalidParameter`], not a failed verdict.
pub fn check_derivation(
    d: &LinearMap,
    m: &BilinearOp,
    kind: &DerivationKind,
) -> Result<CheckVerdict> {
    ensure_endo("derivation", d, m.dim())?;
    match kind {
        DerivationKind::Twisted { tau, sigma } => {
            require_algebra_map("τ", tau, m)?;
            require_algebra_map("σ", sigma, m)?;
            Ok(leibniz_law("twisted-leibniz", d, m, tau, sigma).check())
        }
        DerivationKind::AlphaPower { alpha, k } => {
            require_algebra_map("α", alpha, m)?;
            let ak = alpha.pow(*k)?;
            Ok(check_laws(&[
                commute_law("commutes-with-alpha", d, alpha),
                leibniz_law("alpha-power-leibniz", d, m, &ak, &ak),
            ]))
        }
    }
}

/// Checks the Rota-Baxter identity selected by `kind` on all basis pairs,
/// after the commutation requirements of that kind.
pub fn check_rota_baxter(
    r: &LinearMap,
    m: &BilinearOp,
    kind: &RotaBaxterKind,
) -> Result<CheckVerdict> {
    ensure_endo("Rota-Baxter operator", r, m.dim())?;
    match kind {
        RotaBaxterKind::Paren { sigma, tau } => {
            require_algebra_map("σ", sigma, m)?;
            require_algebra_map("τ", tau, m)?;
            Ok(paren_law(r, m, sigma, tau)?.check())
        }
        RotaBaxterKind::Brace { sigma, tau } => {
            require_algebra_map("σ", sigma, m)?;
            require_algebra_map("τ", tau, m)?;
            Ok(brace_law("brace-rota-baxter", r, m, sigma, tau).check())
        }
        RotaBaxterKind::AlphaPower { alpha, n } | RotaBaxterKind::LieAlphaPower { alpha, n } => {
            require_algebra_map("α", alpha, m)?;
            let an = alpha.pow(*n)?;
            Ok(check_laws(&[
                commute_law("commutes-with-alpha", r, alpha),
                brace_law("alpha-power-rota-baxter", r, m, &an, &an),
            ]))
        }
        RotaBaxterKind::AlphaBeta { alpha, beta } => {
            require_algebra_map("α", alpha, m)?;
            require_algebra_map("β", beta, m)?;
            let ab = alpha.compose(beta)?;
            Ok(check_laws(&[
                commute_law("commutes-with-alpha", r, alpha),
                commute_law("commutes-with-beta", r, beta),
                brace_law("alpha-beta-rota-baxter", r, m, &ab, &ab),
            ]))
        }
    }
}
