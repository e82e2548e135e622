//! Krull–Schmidt decomposition through primitive idempotents of `End(M)`,
//! and exact isomorphism testing.
//!
//! For indecomposable `X`, `Y` with local endomorphism rings, `X ≅ Y` iff
//! `g ∘ f` is invertible for some basis maps `f: X → Y`, `g: Y → X`: the
//! products span the ideal `Hom(Y,X)·Hom(X,Y)` of `End(X)`, which is proper
//! exactly when it lies in the radical.

use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{hom_space, ModuleMap, Representation};
use crate::algebra::{lift_primitive_idempotents, Algebra, Element};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Span};

const RANDOM_ISO_TRIALS: usize = 32;

/// An indecomposable summand with its inclusion and projection matrices;
/// summing `inclusion · projection` over a decomposition gives the identity.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Representation,
    pub inclusion: Matrix,
    pub projection: Matrix,
}

/// The endomorphism algebra on the given basis of maps.
fn endomorphism_algebra(m: &Representation, basis: &[Matrix]) -> Result<Algebra> {
    let field = m.field();
    let d = m.dim();
    let vecs: Vec<Vec<_>> = basis.iter().map(Matrix::vectorize).collect();
    let span = Span::from_vectors(field, d * d, &vecs);
    let coords = |x: &Matrix| {
        span.coordinates(&x.vectorize())
            .ok_or_else(|| Error::Internal("endomorphisms not closed under composition".into()))
    };
    let products: Vec<Vec<Element>> = basis
        .iter()
        .map(|x| {
            basis
                .iter()
                .map(|y| coords(&x.mul(y)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let unit = coords(&Matrix::identity(field, d))?;
    let labels = (0..basis.len()).map(|i| alloc::format!("f{i}")).collect();
    Ok(
        Algebra::from_structure_constants(field, labels, &products, unit)?
            .with_seed(m.algebra().seed()),
    )
}

/// A basis of `rad End(m)`, as matrices.
pub fn radical_endomorphisms(m: &Representation) -> Result<Vec<Matrix>> {
    let field = m.field();
    let d = m.dim();
    if d == 0 {
        return Ok(Vec::new());
    }
    let basis: Vec<Matrix> = hom_space(m, m).into_iter().map(|f| f.matrix).collect();
    let end = endomorphism_algebra(m, &basis)?;
    Ok(end
        .radical()
        .iter()
        .map(|c| Matrix::combination(field, d, d, c, &basis))
        .collect())
}

/// Indecomposable summands, ordered by dimension vector.
pub fn decompose(m: &Representation) -> Result<Vec<Summand>> {
    let field = m.field();
    let d = m.dim();
    if d == 0 {
        return Ok(Vec::new());
    }
    let basis: Vec<Matrix> = hom_space(m, m).into_iter().map(|f| f.matrix).collect();
    let end = endomorphism_algebra(m, &basis)?;
    let idems = if basis.len() - end.radical().len() == 1 {
        alloc::vec![end.unit().clone()]
    } else {
        lift_primitive_idempotents(&end)?
    };
    let mut out = Vec::with_capacity(idems.len());
    for e in idems {
        let eps = Matrix::combination(field, d, d, &e, &basis);
        let (module, inclusion) = m.submodule(&eps.column_basis().columns());
        let left = inclusion
            .left_inverse()
            .ok_or_else(|| Error::Internal("summand inclusion is not injective".into()))?;
        out.push(Summand {
            module,
            inclusion,
            projection: left.mul(&eps),
        });
    }
    out.sort_by(|a, b| a.module.dim_vector().cmp(&b.module.dim_vector()));
    Ok(out)
}

/// Whether `m` is indecomposable (nonzero with local endomorphism ring).
pub fn is_indecomposable(m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let basis: Vec<Matrix> = hom_space(m, m).into_iter().map(|f| f.matrix).collect();
    let end = endomorphism_algebra(m, &basis)?;
    Ok(basis.len() - end.radical().len() == 1)
}

pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<bool> {
    Ok(find_isomorphism(m, n)?.is_some())
}

/// An isomorphism `m → n` if one exists.
pub fn find_isomorphism(m: &Representation, n: &Representation) -> Result<Option<ModuleMap>> {
    m.check_same_algebra(n)?;
    if m.dim_vector() != n.dim_vector() {
        return Ok(None);
    }
    if let Some(f) = quick_isomorphism(m, n) {
        return Ok(Some(f));
    }
    exact_isomorphism(m, n)
}

fn quick_isomorphism(m: &Representation, n: &Representation) -> Option<ModuleMap> {
    let field = m.field();
    let d = m.dim();
    if d == 0 {
        return Some(ModuleMap::unchecked(
            m.clone(),
            n.clone(),
            Matrix::zeros(field, 0, 0),
        ));
    }
    let homs: Vec<Matrix> = hom_space(m, n).into_iter().map(|f| f.matrix).collect();
    if homs.is_empty() {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(m.algebra().seed());
    let candidates = homs.iter().cloned().chain((0..RANDOM_ISO_TRIALS).map(|_| {
        let c = crate::algebra::random_element(field, homs.len(), &mut rng);
        Matrix::combination(field, d, d, &c, &homs)
    }));
    for f in candidates {
        if f.is_invertible() {
            return Some(ModuleMap::unchecked(m.clone(), n.clone(), f));
        }
    }
    None
}

/// An isomorphism between indecomposables, decided exactly.
fn indecomposable_isomorphism(x: &Representation, y: &Representation) -> Option<Matrix> {
    if x.dim_vector() != y.dim_vector() {
        return None;
    }
    let fs = hom_space(x, y);
    let gs = hom_space(y, x);
    for f in &fs {
        for g in &gs {
            if g.matrix.mul(&f.matrix).is_invertible() {
                return Some(f.matrix.clone());
            }
        }
    }
    None
}

fn exact_isomorphism(m: &Representation, n: &Representation) -> Result<Option<ModuleMap>> {
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    if dm.len() != dn.len() {
        return Ok(None);
    }
    let mut used = alloc::vec![false; dn.len()];
    let mut total = Matrix::zeros(m.field(), n.dim(), m.dim());
    for s in &dm {
        let mut found = false;
        for (k, t) in dn.iter().enumerate() {
            if used[k] {
                continue;
            }
            if let Some(f) = indecomposable_isomorphism(&s.module, &t.module) {
                used[k] = true;
                total = total.add(&t.inclusion.mul(&f).mul(&s.projection));
                found = true;
                break;
            }
        }
        if !found {
            return Ok(None);
        }
    }
    debug_assert!(total.is_invertible());
    Ok(Some(ModuleMap::unchecked(m.clone(), n.clone(), total)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::fixtures;
    use crate::rep::{direct_sum, projective, regular, simple};

    #[test]
    fn regular_module_splits_into_projectives() {
        let a = fixtures::a2(FieldSpec::Rationals).algebra;
        let parts = decompose(&regular(&a)).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(is_isomorphic(&parts[0].module, &projective(&a, 1)).unwrap());
        assert!(is_isomorphic(&parts[1].module, &projective(&a, 0)).unwrap());
        let sum = parts.iter().fold(Matrix::zeros(a.field(), 3, 3), |acc, s| {
            acc.add(&s.inclusion.mul(&s.projection))
        });
        assert!(sum.is_identity());
    }

    #[test]
    fn indecomposable_is_its_own_decomposition() {
        let a = fixtures::fork(FieldSpec::Rationals).algebra;
        let p = projective(&a, 0);
        assert_eq!(decompose(&p).unwrap().len(), 1);
        assert!(is_indecomposable(&p).unwrap());
    }

    #[test]
    fn exact_path_matches_random_path() {
        for field in [FieldSpec::Rationals, FieldSpec::prime(2).unwrap()] {
            let a = fixtures::fork(field).algebra;
            let m = direct_sum(&a, &[simple(&a, 1), projective(&a, 0), simple(&a, 1)]).0;
            let n = direct_sum(&a, &[projective(&a, 0), simple(&a, 1), simple(&a, 1)]).0;
            let f = exact_isomorphism(&m, &n).unwrap().unwrap();
            assert!(ModuleMap::new(m.clone(), n.clone(), f.matrix.clone()).is_ok());
            assert!(f.is_isomorphism());
            let bad = direct_sum(&a, &[projective(&a, 0), simple(&a, 2), simple(&a, 1)]).0;
            assert!(exact_isomorphism(&m, &bad).unwrap().is_none());
        }
    }
}
