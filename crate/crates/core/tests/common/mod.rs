//! Naive oracles evaluated directly on vectors, independent of the law
//! framework, plus random generators and basis transport.

#![allow(dead_code)]

use bihom_core::exactlin::{s, BilinearOp, Comultiplication, LinearMap, Scalar, Tensor2, Vector};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn e(d: usize, i: usize) -> Vector {
    Vector::basis(d, i)
}

pub fn mul(mu: &BilinearOp, u: &Vector, v: &Vector) -> Vector {
    mu.apply(u, v).unwrap()
}

pub fn ap(f: &LinearMap, v: &Vector) -> Vector {
    f.apply(v).unwrap()
}

pub fn sub(u: &Vector, v: &Vector) -> Vector {
    u.sub(v).unwrap()
}

pub fn add(u: &Vector, v: &Vector) -> Vector {
    u.add(v).unwrap()
}

/// All basis triples in lexicographic order.
pub fn triples(d: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..d).flat_map(move |i| (0..d).flat_map(move |j| (0..d).map(move |k| (i, j, k))))
}

/// First basis vector where `fg ≠ gf`.
pub fn commute_witness(f: &LinearMap, g: &LinearMap) -> Option<usize> {
    let d = f.dim_in();
    (0..d).find(|&i| ap(f, &ap(g, &e(d, i))) != ap(g, &ap(f, &e(d, i))))
}

/// First basis pair where `f(xy) ≠ f(x)f(y)`.
pub fn multiplicative_witness(f: &LinearMap, mu: &BilinearOp) -> Option<[usize; 2]> {
    let d = mu.dim();
    (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .find(|&(i, j)| {
            let (x, y) = (e(d, i), e(d, j));
            ap(f, &mul(mu, &x, &y)) != mul(mu, &ap(f, &x), &ap(f, &y))
        })
        .map(|(i, j)| [i, j])
}

/// The first failure of a BiHom-algebra, as a law name and basis indices:
/// commuting structure maps, multiplicativity of α then β, then
/// BiHom-associativity.
pub fn bihom_algebra_witness(
    mu: &BilinearOp,
    alpha: &LinearMap,
    beta: &LinearMap,
) -> Option<(&'static str, Vec<usize>)> {
    if let Some(i) = commute_witness(alpha, beta) {
        return Some(("structure-maps-commute", vec![i]));
    }
    for (name, f) in [
        ("alpha-multiplicative", alpha),
        ("beta-multiplicative", beta),
    ] {
        if let Some(w) = multiplicative_witness(f, mu) {
            return Some((name, w.to_vec()));
        }
    }
    bihom_assoc_witness(mu, alpha, beta).map(|w| ("bihom-associativity", w.to_vec()))
}

/// First triple where `α(x)(yz) ≠ (xy)β(z)`.
pub fn bihom_assoc_witness(
    mu: &BilinearOp,
    alpha: &LinearMap,
    beta: &LinearMap,
) -> Option<[usize; 3]> {
    let d = mu.dim();
    triples(d)
        .find(|&(i, j, k)| {
            let (x, y, z) = (e(d, i), e(d, j), e(d, k));
            let lhs = mul(mu, &ap(alpha, &x), &mul(mu, &y, &z));
            let rhs = mul(mu, &mul(mu, &x, &y), &ap(beta, &z));
            lhs != rhs
        })
        .map(|(i, j, k)| [i, j, k])
}

pub fn assoc_witness(mu: &BilinearOp) -> Option<[usize; 3]> {
    let id = LinearMap::identity(mu.dim());
    bihom_assoc_witness(mu, &id, &id)
}

/// `(xy)α(z) − α(x)(yz)`.
pub fn hom_associator(
    mu: &BilinearOp,
    alpha: &LinearMap,
    x: &Vector,
    y: &Vector,
    z: &Vector,
) -> Vector {
    sub(
        &mul(mu, &mul(mu, x, y), &ap(alpha, z)),
        &mul(mu, &ap(alpha, x), &mul(mu, y, z)),
    )
}

/// Multiplicative α and a symmetric Hom-associator in its first two slots.
pub fn prelie_holds(mu: &BilinearOp, alpha: &LinearMap) -> bool {
    let d = mu.dim();
    multiplicative_witness(alpha, mu).is_none()
        && triples(d).all(|(i, j, k)| {
            let (x, y, z) = (e(d, i), e(d, j), e(d, k));
            hom_associator(mu, alpha, &x, &y, &z) == hom_associator(mu, alpha, &y, &x, &z)
        })
}

/// Hom-pre-Lie plus `(xy)α(z) = (xz)α(y)`.
pub fn novikov_holds(mu: &BilinearOp, alpha: &LinearMap) -> bool {
    let d = mu.dim();
    prelie_holds(mu, alpha)
        && triples(d).all(|(i, j, k)| {
            let (x, y, z) = (e(d, i), e(d, j), e(d, k));
            mul(mu, &mul(mu, &x, &y), &ap(alpha, &z)) == mul(mu, &mul(mu, &x, &z), &ap(alpha, &y))
        })
}

/// Antisymmetry and `[α(x),[y,z]] + [α(y),[z,x]] + [α(z),[x,y]] = 0`.
pub fn lie_holds(b: &BilinearOp, alpha: &LinearMap) -> bool {
    let d = b.dim();
    let anti = (0..d).all(|i| {
        (0..d).all(|j| {
            let (x, y) = (e(d, i), e(d, j));
            add(&mul(b, &x, &y), &mul(b, &y, &x)).is_zero()
        })
    });
    anti && triples(d).all(|(i, j, k)| {
        let (x, y, z) = (e(d, i), e(d, j), e(d, k));
        let t1 = mul(b, &ap(alpha, &x), &mul(b, &y, &z));
        let t2 = mul(b, &ap(alpha, &y), &mul(b, &z, &x));
        let t3 = mul(b, &ap(alpha, &z), &mul(b, &x, &y));
        add(&add(&t1, &t2), &t3).is_zero()
    })
}

/// The product `P⁻¹ μ(Px, Py)` in the basis given by the columns of `P`.
pub fn transport_product(mu: &BilinearOp, p: &LinearMap) -> BilinearOp {
    mu.precompose(p, p)
        .unwrap()
        .then_map(&p.invert().unwrap())
        .unwrap()
}

/// `P⁻¹ f P`.
pub fn transport_map(f: &LinearMap, p: &LinearMap) -> LinearMap {
    p.invert().unwrap().compose(&f.compose(p).unwrap()).unwrap()
}

/// `(P⁻¹ ⊗ P⁻¹) Δ(P e_i)`.
pub fn transport_coproduct(delta: &Comultiplication, p: &LinearMap) -> Comultiplication {
    let pinv = p.invert().unwrap();
    let images: Vec<Tensor2> = (0..delta.dim())
        .map(|i| {
            let t = delta.apply(&p.column(i)).unwrap();
            bihom_core::exactlin::map_tensor2(&pinv, &pinv, &t).unwrap()
        })
        .collect();
    Comultiplication::from_images(&images).unwrap()
}

pub fn small_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    s(rng.gen_range(-1..=1))
}

pub fn random_map(rng: &mut ChaCha8Rng, d: usize) -> LinearMap {
    LinearMap::from_fn(d, d, |_, _| small_scalar(rng))
}

pub fn random_invertible(rng: &mut ChaCha8Rng, d: usize) -> LinearMap {
    loop {
        let p = random_map(rng, d);
        if p.is_invertible() {
            return p;
        }
    }
}

/// A random cube with roughly a third of its entries nonzero.
pub fn random_cube(rng: &mut ChaCha8Rng, d: usize) -> BilinearOp {
    BilinearOp::from_fn(d, |_, _, _| {
        if rng.gen_bool(0.35) {
            small_scalar(rng)
        } else {
            Scalar::zero()
        }
    })
}

/// Every `d×d` matrix with entries in `coeffs`.
pub fn all_maps(d: usize, coeffs: &[i64]) -> Vec<LinearMap> {
    let n = d * d;
    let base = coeffs.len();
    (0..base.pow(n as u32))
        .map(|mut idx| {
            let mut flat = vec![0i64; n];
            for slot in (0..n).rev() {
                flat[slot] = coeffs[idx % base];
                idx /= base;
            }
            LinearMap::from_fn(d, d, |i, j| s(flat[i * d + j]))
        })
        .collect()
}

/// The direct sum `A ⊕ 𝕜e` with `e·e = e`.
pub fn with_idempotent(mu: &BilinearOp) -> BilinearOp {
    let d = mu.dim();
    BilinearOp::from_fn(d + 1, |i, j, k| {
        if i < d && j < d && k < d {
            mu.get(i, j, k).clone()
        } else if i == d && j == d && k == d {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

/// `R(a) = Σ αβ³(x)(a α³(y))` and `R(a) = Σ (β³(x) a) α³β(y)` evaluated
/// term by term.
pub fn yang_baxter_forms(
    mu: &BilinearOp,
    alpha: &LinearMap,
    beta: &LinearMap,
    r: &Tensor2,
) -> (LinearMap, LinearMap) {
    let d = mu.dim();
    let pw = |f: &LinearMap, k: u32| f.pow(k).unwrap();
    let (a3, b3) = (pw(alpha, 3), pw(beta, 3));
    let ab3 = alpha.compose(&b3).unwrap();
    let a3b = a3.compose(beta).unwrap();
    let mut first = Vec::new();
    let mut second = Vec::new();
    for k in 0..d {
        let a = e(d, k);
        let mut v1 = Vector::zeros(d);
        let mut v2 = Vector::zeros(d);
        for i in 0..d {
            for j in 0..d {
                let c = r.get(i, j);
                if c.is_zero() {
                    continue;
                }
                let (x, y) = (e(d, i), e(d, j));
                let t1 = mul(mu, &ap(&ab3, &x), &mul(mu, &a, &ap(&a3, &y)));
                let t2 = mul(mu, &mul(mu, &ap(&b3, &x), &a), &ap(&a3b, &y));
                v1 = add(&v1, &t1.scale(c));
                v2 = add(&v2, &t2.scale(c));
            }
        }
        first.push(v1);
        second.push(v2);
    }
    (
        LinearMap::from_columns(&first).unwrap(),
        LinearMap::from_columns(&second).unwrap(),
    )
}

/// `x•y = Σ α(y₁)(α(x)y₂)` and `Σ (y₁α(x))α(y₂)` evaluated term by term.
pub fn bullet_forms(
    mu: &BilinearOp,
    delta: &Comultiplication,
    alpha: &LinearMap,
) -> (BilinearOp, BilinearOp) {
    let d = mu.dim();
    let form = |left: bool| {
        BilinearOp::from_products(d, |i, j| {
            let ax = ap(alpha, &e(d, i));
            let dy = delta.image(j);
            let mut v = Vector::zeros(d);
            for p in 0..d {
                for q in 0..d {
                    let c = dy.get(p, q);
                    if c.is_zero() {
                        continue;
                    }
                    let (y1, y2) = (e(d, p), e(d, q));
                    let t = if left {
                        mul(mu, &ap(alpha, &y1), &mul(mu, &ax, &y2))
                    } else {
                        mul(mu, &mul(mu, &y1, &ax), &ap(alpha, &y2))
                    };
                    v = add(&v, &t.scale(c));
                }
            }
            v
        })
        .unwrap()
    };
    (form(true), form(false))
}
