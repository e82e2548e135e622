use std::sync::Arc;

use proptest::prelude::*;
use sttilt_core::algebra::Algebra;
use sttilt_core::fixtures;
use sttilt_core::group::{twist_module, GroupAction};
use sttilt_core::rep::{
    decompose, direct_sum, fac_contains, hom_dim, is_indecomposable, is_isomorphic, projective,
    simple, Representation,
};
use sttilt_core::skew::SkewAlgebra;
use sttilt_core::{FieldSpec, Matrix, Scalar};

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rationals),
        Just(FieldSpec::Prime(5)),
        Just(FieldSpec::Prime(7))
    ]
}

fn scalar(f: FieldSpec) -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4)
        .prop_map(move |(n, d)| f.from_ratio(n, d).unwrap_or_else(|| f.from_i64(n)))
}

fn matrix(f: FieldSpec, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
        let rows: Vec<Vec<Scalar>> = v
            .chunks(cols.max(1))
            .take(rows)
            .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(f, rows)
    })
}

/// Indecomposable modules of the fork: the simples, the projectives and the
/// two proper quotients of `P(1)`.
fn fork_modules(a: &Arc<Algebra>) -> Vec<Representation> {
    let mut out: Vec<Representation> = (0..3).map(|i| simple(a, i)).collect();
    out.extend((0..3).map(|i| projective(a, i)));
    let p1 = projective(a, 0);
    for v in [1, 2] {
        let vecs: Vec<Vec<Scalar>> = p1
            .block(v)
            .map(|i| {
                let mut x = vec![a.field().zero(); p1.dim()];
                x[i] = a.field().one();
                x
            })
            .collect();
        out.push(p1.quotient(&vecs).0);
    }
    out
}

fn sum_of(a: &Arc<Algebra>, mods: &[Representation], picks: &[usize]) -> Representation {
    let parts: Vec<Representation> = picks
        .iter()
        .map(|&i| mods[i % mods.len()].clone())
        .collect();
    direct_sum(a, &parts).0
}

/// `U·P` with `U` unit upper triangular and `P` a permutation.
fn basis_change(f: FieldSpec, d: usize, upper: &[i64], perm_seed: usize) -> Matrix {
    let mut u = Matrix::identity(f, d);
    let mut k = 0;
    for i in 0..d {
        for j in i + 1..d {
            u.set(i, j, f.from_i64(upper[k % upper.len().max(1)]));
            k += 1;
        }
    }
    let mut perm: Vec<usize> = (0..d).collect();
    if d > 1 {
        perm.rotate_left(perm_seed % d);
    }
    let mut p = Matrix::zeros(f, d, d);
    for (i, &j) in perm.iter().enumerate() {
        p.set(i, j, f.one());
    }
    u.mul(&p)
}

fn conjugate(m: &Representation, b: &Matrix) -> Representation {
    let inv = b.invert().unwrap().unwrap();
    let action = m.actions().iter().map(|x| inv.mul(x).mul(b)).collect();
    Representation::new(m.algebra().clone(), action).unwrap().0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(f in fields(), seed in any::<u64>()) {
        let mut vals = Vec::new();
        let mut s = seed;
        for _ in 0..3 {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            vals.push(f.from_ratio(((s >> 33) % 13) as i64 - 6, ((s >> 20) % 4 + 1) as i64).unwrap_or_else(|| f.one()));
        }
        let (a, b, c) = (&vals[0], &vals[1], &vals[2]);
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(&(a + b) + c, a + &(b + c));
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert_eq!(a + &-a, f.zero());
        if let Some(i) = a.inv() {
            prop_assert_eq!(a * &i, f.one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn scalar_inverse(x in fields().prop_flat_map(scalar)) {
        if !x.is_zero() {
            prop_assert!(x.inv().unwrap().inv().unwrap() == x);
        }
    }

    #[test]
    fn rank_nullity((_f, m) in (fields(), 1usize..5, 1usize..5).prop_flat_map(|(f, r, c)| (Just(f), matrix(f, r, c)))) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn inverse_is_two_sided((f, m) in (fields(), 1usize..5).prop_flat_map(|(f, n)| (Just(f), matrix(f, n, n)))) {
        match m.invert().unwrap() {
            Some(inv) => {
                let n = m.rows();
                prop_assert!(m.mul(&inv) == Matrix::identity(f, n));
                prop_assert!(inv.mul(&m) == Matrix::identity(f, n));
            }
            None => prop_assert!(m.rank() < m.rows()),
        }
    }

    #[test]
    fn hom_dim_ignores_basis(picks in proptest::collection::vec(0usize..8, 1..3),
                             other in 0usize..8,
                             upper in proptest::collection::vec(-2i64..=2, 1..8),
                             rot in 0usize..5) {
        let a = fixtures::fork(FieldSpec::Rationals).algebra;
        let mods = fork_modules(&a);
        let m = sum_of(&a, &mods, &picks);
        let n = &mods[other];
        let m2 = conjugate(&m, &basis_change(a.field(), m.dim(), &upper, rot));
        prop_assert!(is_isomorphic(&m, &m2).unwrap());
        prop_assert_eq!(hom_dim(&m, n), hom_dim(&m2, n));
        prop_assert_eq!(hom_dim(n, &m), hom_dim(n, &m2));
    }

    #[test]
    fn fac_is_closed_under_quotients(picks in proptest::collection::vec(0usize..8, 1..3),
                                     coeffs in proptest::collection::vec(-2i64..=2, 8)) {
        let a = fixtures::fork(FieldSpec::Rationals).algebra;
        let m = sum_of(&a, &fork_modules(&a), &picks);
        let f = a.field();
        let v: Vec<Scalar> = (0..m.dim()).map(|i| f.from_i64(coeffs[i % coeffs.len()])).collect();
        let (_, inc) = m.generated_submodule(&[v]);
        let q = m.quotient(&inc.columns()).0;
        prop_assert!(fac_contains(&m, &q).unwrap());
    }

    #[test]
    fn faithful_iff_action_injective(picks in proptest::collection::vec(0usize..8, 1..4)) {
        let a = fixtures::fork(FieldSpec::Rationals).algebra;
        let m = sum_of(&a, &fork_modules(&a), &picks);
        let cols: Vec<Vec<Scalar>> = m.actions().iter().map(Matrix::vectorize).collect();
        let injective = Matrix::from_columns(a.field(), m.dim() * m.dim(), &cols).rank() == a.dim();
        prop_assert_eq!(m.annihilator().is_empty(), injective);
        prop_assert_eq!(m.is_faithful(), injective);
    }

    #[test]
    fn decomposition_idempotents_sum_to_identity(picks in proptest::collection::vec(0usize..8, 1..4)) {
        let a = fixtures::fork(FieldSpec::Rationals).algebra;
        let m = sum_of(&a, &fork_modules(&a), &picks);
        let parts = decompose(&m).unwrap();
        prop_assert_eq!(parts.len(), picks.len());
        let mut total = Matrix::zeros(a.field(), m.dim(), m.dim());
        for s in &parts {
            prop_assert!(s.projection.mul(&s.inclusion) == Matrix::identity(a.field(), s.module.dim()));
            total = total.add(&s.inclusion.mul(&s.projection));
        }
        prop_assert!(total == Matrix::identity(a.field(), m.dim()));
    }

    #[test]
    fn twist_commutes_with_sums(picks in proptest::collection::vec(0usize..8, 1..4)) {
        let act: GroupAction = fixtures::fork_action(FieldSpec::Rationals);
        let a = act.algebra.clone();
        let mods = fork_modules(&a);
        let parts: Vec<Representation> = picks.iter().map(|&i| mods[i].clone()).collect();
        let whole = twist_module(&direct_sum(&a, &parts).0, &act, 1);
        let twisted: Vec<Representation> = parts.iter().map(|p| twist_module(p, &act, 1)).collect();
        prop_assert!(is_isomorphic(&whole, &direct_sum(&a, &twisted).0).unwrap());
        for (p, t) in parts.iter().zip(&twisted) {
            prop_assert_eq!(p.dim(), t.dim());
            prop_assert_eq!(is_indecomposable(p).unwrap(), is_indecomposable(t).unwrap());
            prop_assert!(is_isomorphic(&twist_module(t, &act, 1), p).unwrap());
        }
    }

    #[test]
    fn induction_restriction_adjunction(left in proptest::collection::vec(0usize..8, 1..3),
                                         right in proptest::collection::vec(0usize..8, 1..3)) {
        let act = fixtures::fork_action(FieldSpec::Rationals);
        let s = SkewAlgebra::new(&act).unwrap();
        let a = act.algebra.clone();
        let mods = fork_modules(&a);
        let m = sum_of(&a, &mods, &left);
        let n = s.induce(&sum_of(&a, &mods, &right));
        // Hom(F M, N) = Hom(M, H N) and Hom(N, F M) = Hom(H N, M)
        let hn = s.restrict(&n);
        prop_assert_eq!(hom_dim(&s.induce(&m), &n), hom_dim(&m, &hn));
        prop_assert_eq!(hom_dim(&n, &s.induce(&m)), hom_dim(&hn, &m));
        prop_assert_eq!(s.induce(&m).dim(), 2 * m.dim());
    }
}
