//! Exact rational linear and multilinear algebra.
//!
//! Everything here is dense and exact: vectors, matrices, structure-constant
//! cubes and tensors over the rationals, in a fixed basis `e_0, …, e_{d-1}`.

mod bilinear;
mod linear;
mod scalar;
mod tensor;
mod vector;

pub use bilinear::BilinearOp;
pub use linear::LinearMap;
pub use scalar::{q, s, Scalar, ScalarParseError};
pub use tensor::{map_tensor2, Comultiplication, Tensor2, Tensor3};
pub use vector::Vector;

use crate::error::{ensure_dim, Result};
use crate::verdict::{CheckVerdict, Law};

/// `f ∘ g`.
pub fn compose(f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
    f.compose(g)
}

/// `f⁻¹`, or [`Error::NotInvertible`](crate::Error::NotInvertible).
pub fn invert(f: &LinearMap) -> Result<LinearMap> {
    f.invert()
}

/// `m(u, v)`.
pub fn apply_bilinear(m: &BilinearOp, u: &Vector, v: &Vector) -> Result<Vector> {
    m.apply(u, v)
}

pub(crate) fn ensure_endo(context: &'static str, f: &LinearMap, dim: usize) -> Result<()> {
    ensure_dim(context, dim, f.dim_in())?;
    ensure_dim(context, dim, f.dim_out())
}

/// The law `f(e_i e_j) = f(e_i) f(e_j)`.
pub(crate) fn multiplicative_law<'a>(
    name: impl Into<String>,
    f: &'a LinearMap,
    m: &'a BilinearOp,
) -> Law<'a> {
    let cols = f.columns();
    Law::new(name, m.dim(), 2, move |t| {
        let lhs = f.apply_coords(m.basis_product(t[0], t[1]));
        let rhs = m.mul(cols[t[0]].coords(), cols[t[1]].coords());
        (lhs.into_coords(), rhs.into_coords())
    })
}

/// The law `f(g(e_i)) = g(f(e_i))`.
pub(crate) fn commute_law<'a>(
    name: impl Into<String>,
    f: &'a LinearMap,
    g: &'a LinearMap,
) -> Law<'a> {
    Law::new(name, f.dim_in(), 1, move |t| {
        let lhs = f.apply_coords(g.column(t[0]).coords());
        let rhs = g.apply_coords(f.column(t[0]).coords());
        (lhs.into_coords(), rhs.into_coords())
    })
}

/// Passes iff `f` is multiplicative for `m`; otherwise reports the smallest
/// failing basis pair.
pub fn is_algebra_map(f: &LinearMap, m: &BilinearOp) -> Result<CheckVerdict> {
    ensure_endo("algebra map", f, m.dim())?;
    Ok(multiplicative_law("multiplicative", f, m).check())
}

/// Passes iff `f(x ∗ y) = f(x) · f(y)` for the source product `∗` and the
/// target product `·`.
pub fn is_morphism(
    f: &LinearMap,
    source: &BilinearOp,
    target: &BilinearOp,
) -> Result<CheckVerdict> {
    ensure_endo("morphism", f, source.dim())?;
    ensure_dim("morphism target", source.dim(), target.dim())?;
    let cols = f.columns();
    Ok(Law::new("morphism", source.dim(), 2, move |t| {
        let lhs = f.apply_coords(source.basis_product(t[0], t[1]));
        let rhs = target.mul(cols[t[0]].coords(), cols[t[1]].coords());
        (lhs.into_coords(), rhs.into_coords())
    })
    .check())
}

/// Passes iff both products have identical structure constants; otherwise
/// reports the first differing index triple.
pub fn bilinear_equal(m1: &BilinearOp, m2: &BilinearOp) -> Result<CheckVerdict> {
    ensure_dim("bilinear comparison", m1.dim(), m2.dim())?;
    Ok(Law::new("equal-structure-constants", m1.dim(), 3, |t| {
        (
            vec![m1.get(t[0], t[1], t[2]).clone()],
            vec![m2.get(t[0], t[1], t[2]).clone()],
        )
    })
    .check())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;
    use proptest::prelude::*;

    fn n2() -> BilinearOp {
        // uu = v
        BilinearOp::from_entries(2, &[(0, 0, 1, 1)])
    }

    fn m2() -> BilinearOp {
        // basis e11, e12, e21, e22 at indices 2a + b
        let mut entries = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for d in 0..2 {
                    entries.push((2 * a + b, 2 * b + d, 2 * a + d, 1));
                }
            }
        }
        BilinearOp::from_entries(4, &entries)
    }

    #[test]
    fn compose_examples() {
        let id2 = LinearMap::identity(2);
        assert_eq!(compose(&id2, &id2).unwrap(), id2);
        let sgn = LinearMap::diagonal_ints(&[-1, 1]);
        assert_eq!(compose(&sgn, &sgn).unwrap(), id2);
        let d = LinearMap::diagonal_ints(&[1, 2]);
        assert_eq!(compose(&d, &d).unwrap(), LinearMap::diagonal_ints(&[1, 4]));
        let tall = LinearMap::zero(3, 2);
        assert!(matches!(compose(&tall, &tall), Err(Error::Shape { .. })));
    }

    #[test]
    fn compose_is_not_commutative_in_general() {
        let f = LinearMap::from_int_rows(&[&[0, 1], &[0, 0]]).unwrap();
        let g = LinearMap::from_int_rows(&[&[0, 0], &[1, 0]]).unwrap();
        assert_ne!(compose(&f, &g).unwrap(), compose(&g, &f).unwrap());
        // column convention: f sends e_1 to e_0
        assert_eq!(f.apply(&Vector::basis(2, 1)).unwrap(), Vector::basis(2, 0));
    }

    #[test]
    fn invert_examples() {
        let id2 = LinearMap::identity(2);
        assert_eq!(invert(&id2).unwrap(), id2);
        let d = LinearMap::diagonal_ints(&[1, 2]);
        assert_eq!(invert(&d).unwrap(), LinearMap::diagonal(&[s(1), q(1, 2)]));
        assert_eq!(invert(&LinearMap::zero(2, 2)), Err(Error::NotInvertible));
        let needs_pivoting = LinearMap::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(invert(&needs_pivoting).unwrap(), needs_pivoting);
        assert!(matches!(
            invert(&LinearMap::zero(2, 3)),
            Err(Error::Shape { .. })
        ));
    }

    #[test]
    fn apply_bilinear_examples() {
        let u = Vector::basis(2, 0);
        let v = Vector::basis(2, 1);
        assert_eq!(apply_bilinear(&n2(), &u, &u).unwrap(), v);
        assert!(apply_bilinear(&n2(), &Vector::zeros(2), &v)
            .unwrap()
            .is_zero());
        let e = |i| Vector::basis(4, i);
        assert_eq!(apply_bilinear(&m2(), &e(1), &e(2)).unwrap(), e(0));
        assert!(matches!(
            apply_bilinear(&n2(), &e(0), &u),
            Err(Error::Shape { .. })
        ));
    }

    #[test]
    fn map_tensor2_examples() {
        let r = Tensor2::from_fn(2, |i, j| s((i + 2 * j) as i64));
        let id = LinearMap::identity(2);
        assert_eq!(map_tensor2(&id, &id, &r).unwrap(), r);

        let conj_d = LinearMap::diagonal_ints(&[1, -1, -1, 1]);
        let e12 = Tensor2::elementary(4, 1, 1, s(1));
        assert_eq!(map_tensor2(&conj_d, &conj_d, &e12).unwrap(), e12);

        let sgn = LinearMap::diagonal_ints(&[-1, 1]);
        let uv = Tensor2::elementary(2, 0, 1, s(1));
        assert_eq!(
            map_tensor2(&sgn, &sgn, &uv).unwrap(),
            Tensor2::elementary(2, 0, 1, s(-1))
        );
    }

    #[test]
    fn algebra_map_examples() {
        assert!(
            is_algebra_map(&LinearMap::identity(4), &m2())
                .unwrap()
                .passed
        );
        assert!(
            is_algebra_map(&LinearMap::diagonal_ints(&[-1, 1]), &n2())
                .unwrap()
                .passed
        );
        let f = LinearMap::diagonal_ints(&[1, 2]);
        let v = is_algebra_map(&f, &n2()).unwrap();
        assert_eq!(v.failed_indices(), Some(&[0, 0][..]));
        let w = v.witness.unwrap();
        assert_eq!(w.lhs, vec![s(0), s(2)]);
        assert_eq!(w.rhs, vec![s(0), s(1)]);
    }

    #[test]
    fn bilinear_equal_examples() {
        assert!(bilinear_equal(&n2(), &n2()).unwrap().passed);
        let v = bilinear_equal(&n2(), &BilinearOp::zero(2)).unwrap();
        assert_eq!(v.failed_indices(), Some(&[0, 0, 1][..]));
        assert!(bilinear_equal(&n2(), &m2()).is_err());
    }

    #[test]
    fn twisted_products() {
        let sgn = LinearMap::diagonal_ints(&[-1, 1]);
        let twisted = n2().precompose(&sgn, &sgn).unwrap();
        assert_eq!(twisted, n2());
        assert_eq!(n2().then_map(&sgn).unwrap(), n2());
        assert_eq!(
            m2().commutator().opposite(),
            m2().commutator().scale(&s(-1))
        );
    }

    fn small_map(dim: usize) -> impl Strategy<Value = LinearMap> {
        proptest::collection::vec(-3i64..=3, dim * dim)
            .prop_map(move |e| LinearMap::from_fn(dim, dim, |i, j| s(e[i * dim + j])))
    }

    proptest! {
        #[test]
        fn compose_is_associative(f in small_map(3), g in small_map(3), h in small_map(3)) {
            let left = compose(&f, &compose(&g, &h).unwrap()).unwrap();
            let right = compose(&compose(&f, &g).unwrap(), &h).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn invert_is_two_sided(f in small_map(3)) {
            if let Ok(inv) = invert(&f) {
                prop_assert!(compose(&inv, &f).unwrap().is_identity());
                prop_assert!(compose(&f, &inv).unwrap().is_identity());
            }
        }

        #[test]
        fn map_tensor2_is_linear(
            f in small_map(2),
            g in small_map(2),
            a in proptest::collection::vec(-3i64..=3, 4),
            b in proptest::collection::vec(-3i64..=3, 4),
        ) {
            let t1 = Tensor2::from_fn(2, |i, j| s(a[2 * i + j]));
            let t2 = Tensor2::from_fn(2, |i, j| s(b[2 * i + j]));
            let whole = map_tensor2(&f, &g, &t1.add(&t2).unwrap()).unwrap();
            let parts = map_tensor2(&f, &g, &t1).unwrap().add(&map_tensor2(&f, &g, &t2).unwrap()).unwrap();
            prop_assert_eq!(whole, parts);
        }

        #[test]
        fn computations_are_repeatable(f in small_map(3)) {
            prop_assert_eq!(f.pow(3).unwrap(), f.pow(3).unwrap());
            prop_assert_eq!(invert(&f), invert(&f));
        }
    }
}
