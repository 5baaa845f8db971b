//! Exhaustive, deterministic search over bounded coefficient grids.
//!
//! Candidates are numbered `0..|C|^slots` and decoded most significant slot
//! first, so candidate order is lexicographic over the coefficient list.
//! Chunks of consecutive candidates are checked in parallel and merged in
//! order, so results never depend on scheduling.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactlin::{commute_law, is_algebra_map, LinearMap, Scalar, Tensor2};
use crate::structures::{
    check_aybe, check_bihom_associative, check_derivation, check_rota_baxter, BiHomAlgebra,
    DerivationKind, RotaBaxterKind,
};
use crate::verdict::CheckVerdict;

pub const DEFAULT_BUDGET: u128 = 100_000_000;
pub const MAX_DIM: usize = 4;

const CHUNK: u128 = 2048;
const CHUNKS_PER_BATCH: u128 = 64;

/// What a search looks for.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SearchTarget {
    /// Tensors `r` passing [`check_aybe`].
    Aybe,
    /// Operators passing [`check_rota_baxter`] of the given kind.
    RotaBaxter(RotaBaxterKind),
    /// Maps passing [`check_derivation`] of the given kind.
    Derivation(DerivationKind),
    /// Commuting pairs `(f, g)` of algebra maps, `f` and `g` drawn from the
    /// algebra maps on the grid.
    AlgebraMapPair,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchSpec {
    pub target: SearchTarget,
    /// Values each free coefficient ranges over, in enumeration order.
    pub coefficients: Vec<Scalar>,
    pub max_dim: usize,
    /// Index pairs allowed to be nonzero: `(row, column)` of a map or
    /// `(i, j)` of a tensor `Σ c_ij e_i ⊗ e_j`. `None` frees every entry.
    pub support: Option<Vec<(usize, usize)>>,
    /// Largest number of candidates the search may enumerate.
    pub budget: u128,
}

impl SearchSpec {
    /// Coefficients `−1, 0, 1`, dimension cap 4, no support restriction and
    /// the default budget.
    pub fn new(target: SearchTarget) -> Self {
        SearchSpec {
            target,
            coefficients: vec![Scalar::from_int(-1), Scalar::zero(), Scalar::one()],
            max_dim: MAX_DIM,
            support: None,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_coefficients(mut self, coefficients: Vec<Scalar>) -> Self {
        self.coefficients = coefficients;
        self
    }

    pub fn with_support(mut self, support: Vec<(usize, usize)>) -> Self {
        self.support = Some(support);
        self
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    pub fn validate(&self, dim: usize) -> Result<()> {
        if self.coefficients.is_empty() {
            return Err(Error::InvalidSearch("coefficient set is empty".into()));
        }
        for (i, c) in self.coefficients.iter().enumerate() {
            if self.coefficients[..i].contains(c) {
                return Err(Error::InvalidSearch(format!(
                    "coefficient {c} is listed twice"
                )));
            }
        }
        if self.max_dim > MAX_DIM {
            return Err(Error::InvalidSearch(format!(
                "dimension cap {} exceeds {MAX_DIM}",
                self.max_dim
            )));
        }
        if dim > self.max_dim {
            return Err(Error::InvalidSearch(format!(
                "ambient dimension {dim} exceeds the cap {}",
                self.max_dim
            )));
        }
        if let Some(support) = &self.support {
            for (i, &(a, b)) in support.iter().enumerate() {
                if a >= dim || b >= dim {
                    return Err(Error::InvalidSearch(format!(
                        "support entry ({a}, {b}) is out of range"
                    )));
                }
                if support[..i].contains(&(a, b)) {
                    return Err(Error::InvalidSearch(format!(
                        "support entry ({a}, {b}) is listed twice"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Free positions in flat row-major order.
    fn slots(&self, dim: usize) -> Vec<usize> {
        match &self.support {
            None => (0..dim * dim).collect(),
            Some(support) => {
                let mut slots: Vec<usize> = support.iter().map(|&(a, b)| a * dim + b).collect();
                slots.sort_unstable();
                slots
            }
        }
    }

    /// Number of candidates enumerated on a `dim`-dimensional ambient.
    pub fn candidate_count(&self, dim: usize) -> u128 {
        let base = self.coefficients.len() as u128;
        let n = self.slots(dim).len() as u32;
        base.checked_pow(n).unwrap_or(u128::MAX)
    }
}

/// A certified search result.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Found {
    Tensor(Tensor2),
    Map(LinearMap),
    MapPair(LinearMap, LinearMap),
}

impl Found {
    pub fn as_tensor(&self) -> Option<&Tensor2> {
        match self {
            Found::Tensor(t) => Some(t),
            _ => None,
        }
    }

    pub fn as_map(&self) -> Option<&LinearMap> {
        match self {
            Found::Map(f) => Some(f),
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<(&LinearMap, &LinearMap)> {
        match self {
            Found::MapPair(f, g) => Some((f, g)),
            _ => None,
        }
    }
}

/// Decodes candidate `index` into a flat row-major coefficient list.
fn decode(index: u128, dim: usize, slots: &[usize], coefficients: &[Scalar]) -> Vec<Scalar> {
    let base = coefficients.len() as u128;
    let mut flat = vec![Scalar::zero(); dim * dim];
    let mut rest = index;
    for &slot in slots.iter().rev() {
        flat[slot] = coefficients[(rest % base) as usize].clone();
        rest /= base;
    }
    flat
}

fn to_map(dim: usize, flat: &[Scalar]) -> LinearMap {
    LinearMap::from_flat(dim, dim, flat.to_vec())
}

fn to_tensor(dim: usize, flat: &[Scalar]) -> Tensor2 {
    Tensor2::from_fn(dim, |i, j| flat[i * dim + j].clone())
}

/// Runs `accept` on every candidate, in order, streaming accepted ones to
/// `emit` batch by batch.
fn enumerate<T: Send>(
    total: u128,
    accept: impl Fn(u128) -> Option<T> + Sync,
    mut emit: impl FnMut(T) -> Result<()>,
) -> Result<()> {
    let chunks = total.div_ceil(CHUNK);
    let mut start = 0;
    while start < chunks {
        let end = (start + CHUNKS_PER_BATCH).min(chunks);
        let batch: Vec<Vec<T>> = (0..(end - start) as usize)
            .into_par_iter()
            .map(|offset| {
                let lo = (start + offset as u128) * CHUNK;
                let hi = (lo + CHUNK).min(total);
                (lo..hi).filter_map(&accept).collect()
            })
            .collect();
        for item in batch.into_iter().flatten() {
            emit(item)?;
        }
        start = end;
    }
    Ok(())
}

/// The checker that certifies a candidate for `target`.
fn certify(target: &SearchTarget, ambient: &BiHomAlgebra, found: &Found) -> Result<CheckVerdict> {
    let mu = &ambient.mu;
    match (target, found) {
        (SearchTarget::Aybe, Found::Tensor(r)) => check_aybe(ambient, r),
        (SearchTarget::RotaBaxter(kind), Found::Map(f)) => check_rota_baxter(f, mu, kind),
        (SearchTarget::Derivation(kind), Found::Map(f)) => check_derivation(f, mu, kind),
        (SearchTarget::AlgebraMapPair, Found::MapPair(f, g)) => is_algebra_map(f, mu)?
            .and_then(|| is_algebra_map(g, mu))?
            .and_then(|| Ok::<_, Error>(commute_law("commute", f, g).check())),
        _ => Err(Error::InvalidSearch(
            "result does not match the search target".into(),
        )),
    }
}

/// Streams every certified object to `on_found` in candidate order. Each
/// object is re-verified by its checker before being emitted.
pub fn search_streaming(
    spec: &SearchSpec,
    ambient: &BiHomAlgebra,
    mut on_found: impl FnMut(&Found),
) -> Result<()> {
    let dim = ambient.dim();
    ambient.check_shapes()?;
    spec.validate(dim)?;
    let total = spec.candidate_count(dim);
    if total > spec.budget {
        return Err(Error::SearchTooLarge {
            candidates: total,
            budget: spec.budget,
        });
    }
    if spec.target == SearchTarget::Aybe {
        let v = check_bihom_associative(ambient)?;
        if !v.passed {
            return Err(Error::precondition("BiHom-associative ambient", v));
        }
    }
    // surfaces invalid twisting maps once, before enumeration
    let zero = Found::Map(LinearMap::zero(dim, dim));
    match &spec.target {
        SearchTarget::RotaBaxter(_) | SearchTarget::Derivation(_) => {
            certify(&spec.target, ambient, &zero)?;
        }
        _ => {}
    }

    let slots = spec.slots(dim);
    let coefficients = &spec.coefficients;
    let mut emit = |found: Found| -> Result<()> {
        if !certify(&spec.target, ambient, &found)?.passed {
            return Err(Error::Inconsistent(
                "a search result failed re-verification".into(),
            ));
        }
        on_found(&found);
        Ok(())
    };

    match &spec.target {
        SearchTarget::AlgebraMapPair => {
            let mut maps = Vec::new();
            enumerate(
                total,
                |i| {
                    let f = to_map(dim, &decode(i, dim, &slots, coefficients));
                    is_algebra_map(&f, &ambient.mu).ok()?.passed.then_some(f)
                },
                |f| {
                    maps.push(f);
                    Ok(())
                },
            )?;
            for f in &maps {
                for g in &maps {
                    if f.commutes_with(g)? {
                        emit(Found::MapPair(f.clone(), g.clone()))?;
                    }
                }
            }
            Ok(())
        }
        target => enumerate(
            total,
            |i| {
                let flat = decode(i, dim, &slots, coefficients);
                let found = match target {
                    SearchTarget::Aybe => Found::Tensor(to_tensor(dim, &flat)),
                    _ => Found::Map(to_map(dim, &flat)),
                };
                certify(target, ambient, &found)
                    .ok()?
                    .passed
                    .then_some(found)
            },
            &mut emit,
        ),
    }
}

/// Every certified object in candidate order.
pub fn search(spec: &SearchSpec, ambient: &BiHomAlgebra) -> Result<Vec<Found>> {
    let mut out = Vec::new();
    search_streaming(spec, ambient, |f| out.push(f.clone()))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discovery::catalogue::*;
    use crate::exactlin::s;

    #[test]
    fn aybe_on_dx2_finds_planted_solutions() {
        let found = search(&SearchSpec::new(SearchTarget::Aybe), &dx2()).unwrap();
        let tensors: Vec<&Tensor2> = found.iter().filter_map(Found::as_tensor).collect();
        for c in [-1, 0, 1] {
            assert!(
                tensors.contains(&&Tensor2::elementary(2, 1, 1, s(c))),
                "{c} x⊗x"
            );
        }
    }

    #[test]
    fn rota_baxter_on_n2_over_zero_one() {
        let spec = SearchSpec::new(SearchTarget::RotaBaxter(RotaBaxterKind::ordinary(2)))
            .with_coefficients(vec![s(0), s(1)]);
        assert_eq!(spec.candidate_count(2), 16);
        let found = search(&spec, &n2()).unwrap();
        assert!(found.contains(&Found::Map(r_n2())));
    }

    #[test]
    fn algebra_map_pairs_on_n2() {
        let found = search(&SearchSpec::new(SearchTarget::AlgebraMapPair), &n2()).unwrap();
        assert!(found.contains(&Found::MapPair(LinearMap::identity(2), sgn())));
        // algebra maps of N2 over {−1,0,1} are [[a,0],[b,a²]]
        let singles = found
            .iter()
            .filter(|f| matches!(f, Found::MapPair(a, b) if a == b))
            .count();
        assert_eq!(singles, 9);
    }

    #[test]
    fn search_is_deterministic() {
        let spec = SearchSpec::new(SearchTarget::Derivation(DerivationKind::ordinary(2)));
        assert_eq!(
            search(&spec, &dx2()).unwrap(),
            search(&spec, &dx2()).unwrap()
        );
    }

    #[test]
    fn budget_and_validation() {
        let spec = SearchSpec::new(SearchTarget::Aybe).with_budget(80);
        assert!(matches!(
            search(&spec, &dx2()),
            Err(Error::SearchTooLarge {
                candidates: 81,
                budget: 80
            })
        ));
        let spec = SearchSpec::new(SearchTarget::Aybe).with_coefficients(vec![]);
        assert!(matches!(
            search(&spec, &dx2()),
            Err(Error::InvalidSearch(_))
        ));
        let spec = SearchSpec::new(SearchTarget::Aybe).with_support(vec![(0, 5)]);
        assert!(matches!(
            search(&spec, &dx2()),
            Err(Error::InvalidSearch(_))
        ));
        assert!(matches!(
            search(&SearchSpec::new(SearchTarget::Aybe), &na2()),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn support_restricts_free_entries() {
        let spec = SearchSpec::new(SearchTarget::Aybe).with_support(vec![(E12, E12)]);
        let found = search(&spec, &m2()).unwrap();
        let expected: Vec<Found> = [-1, 0, 1]
            .iter()
            .map(|&c| Found::Tensor(Tensor2::elementary(4, E12, E12, s(c))))
            .collect();
        assert_eq!(found, expected);
    }
}
