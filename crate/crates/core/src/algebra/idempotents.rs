//! Refining a complete set of orthogonal idempotents into primitive ones.
//!
//! Each idempotent `f` is tested through its corner algebra `fAf`: it is
//! primitive exactly when `fAf / rad(fAf)` is one-dimensional (split local).
//! Otherwise some element `x ∈ fAf` has a minimal polynomial
//! `(t-λ)^a q(t)` with `q(λ) ≠ 0` and `q` non-constant; the polynomial
//! projector onto the generalized `λ`-eigenspace evaluated at `x` is an
//! idempotent of `fAf` strictly between `0` and `f`.

use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{vec_sub, Span};
use crate::poly::{eigen_projector, minimal_polynomial, Poly};

const RANDOM_TRIALS: usize = 64;

/// Complete set of primitive orthogonal idempotents refining the attached
/// idempotents (or the unit, if none are attached).
pub fn lift_primitive_idempotents(a: &Algebra) -> Result<Vec<Element>> {
    let mut work: Vec<Element> = if a.idempotents().is_empty() {
        alloc::vec![a.unit().clone()]
    } else {
        a.idempotents().to_vec()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed());
    let mut i = 0;
    while i < work.len() {
        match split_idempotent(a, &work[i], &mut rng)? {
            Some((e1, e2)) => {
                work[i] = e1;
                work.insert(i + 1, e2);
            }
            None => i += 1,
        }
    }
    Ok(work)
}

fn split_idempotent(
    a: &Algebra,
    f: &Element,
    rng: &mut ChaCha8Rng,
) -> Result<Option<(Element, Element)>> {
    let field = a.field();
    let n = a.dim();
    let lf = a.left_mul_matrix(f);
    let rf = a.right_mul_matrix(f);
    let proj = lf.mul(&rf);
    let spanning: Vec<Element> = (0..n).map(|k| proj.column(k)).collect();
    let basis = Span::from_vectors(field, n, &spanning).basis().to_vec();
    let (corner, span) = a.corner(&basis, f)?;
    let d = corner.dim();
    if d - corner.radical().len() == 1 {
        return Ok(None);
    }
    if d == 0 {
        return Err(Error::Internal("zero idempotent in refinement".into()));
    }
    let mut candidates: Vec<Element> = (0..d).map(|k| corner.basis_element(k)).collect();
    for i in 0..d {
        for j in (i + 1)..d {
            let mut v = corner.basis_element(i);
            v[j] = field.one();
            candidates.push(v);
        }
    }
    candidates.reverse();
    let mut tried = 0;
    loop {
        let x = if let Some(c) = candidates.pop() {
            c
        } else if tried < RANDOM_TRIALS {
            tried += 1;
            random_element(field, d, rng)
        } else {
            return Err(Error::NotSplit(format!(
                "could not split an idempotent whose corner has semisimple dimension {}",
                d - corner.radical().len()
            )));
        };
        if let Some(e) = splitting_idempotent(&corner, &x) {
            let e_a = combine(field, n, &e, span.basis());
            let rest = vec_sub(f, &e_a);
            debug_assert!(a.mul(&e_a, &e_a) == e_a);
            return Ok(Some((e_a, rest)));
        }
    }
}

/// An idempotent of `c` different from `0` and `1` built from `x`, if `x`
/// has a usable eigenvalue in the field.
pub(crate) fn splitting_idempotent(c: &Algebra, x: &Element) -> Option<Element> {
    let d = c.dim();
    let mut powers: Vec<Element> = alloc::vec![c.unit().clone()];
    let m = minimal_polynomial(c.field(), d, |k| {
        while powers.len() <= k {
            let next = c.mul(powers.last().expect("nonempty"), x);
            powers.push(next);
        }
        powers[k].clone()
    });
    let roots = m.roots()?;
    for r in roots {
        if let Some(p) = eigen_projector(&m, &r) {
            let e = eval_poly(c, &p, x);
            if e.iter().any(|s| !s.is_zero()) && e != *c.unit() {
                return Some(e);
            }
        }
    }
    None
}

pub(crate) fn eval_poly(c: &Algebra, p: &Poly, x: &Element) -> Element {
    let mut acc = c.zero_element();
    for coeff in p.coeffs().iter().rev() {
        acc = c.mul(&acc, x);
        for (a, u) in acc.iter_mut().zip(c.unit()) {
            if !u.is_zero() {
                *a += &(coeff * u);
            }
        }
    }
    acc
}

fn combine(field: FieldSpec, n: usize, coords: &[Scalar], basis: &[Element]) -> Element {
    let mut out = crate::matrix::zero_vec(field, n);
    for (c, b) in coords.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            *o += &(c * x);
        }
    }
    out
}

pub(crate) fn random_element(field: FieldSpec, d: usize, rng: &mut ChaCha8Rng) -> Element {
    (0..d)
        .map(|_| match field {
            FieldSpec::Rationals => field.from_i64(rng.gen_range(-9..=9)),
            FieldSpec::Prime(p) => field.from_i64(rng.gen_range(0..p) as i64),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix_algebra, split_semisimple};

    #[test]
    fn k_times_k_from_unit() {
        let q = FieldSpec::Rationals;
        let a = split_semisimple(q, 2).unwrap();
        let bare = Algebra::from_structure_constants(
            q,
            a.labels().to_vec(),
            &a.structure_constants(),
            a.unit().clone(),
        )
        .unwrap();
        let mut idems = lift_primitive_idempotents(&bare).unwrap();
        idems.sort_by_key(|e| e.iter().position(|x| !x.is_zero()));
        assert_eq!(
            idems,
            alloc::vec![
                alloc::vec![q.one(), q.zero()],
                alloc::vec![q.zero(), q.one()]
            ]
        );
    }

    #[test]
    fn matrix_algebra_from_unit() {
        for field in [FieldSpec::Rationals, FieldSpec::prime(2).unwrap()] {
            let a = matrix_algebra(field, 2).unwrap();
            let bare = Algebra::from_structure_constants(
                field,
                a.labels().to_vec(),
                &a.structure_constants(),
                a.unit().clone(),
            )
            .unwrap();
            let idems = lift_primitive_idempotents(&bare).unwrap();
            assert_eq!(idems.len(), 2);
            let refined = bare
                .with_idempotents(idems, alloc::vec!["1".into(), "2".into()])
                .unwrap();
            assert_eq!(refined.simple_count(), 1);
        }
    }
}
