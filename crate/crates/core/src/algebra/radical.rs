//! Jacobson radical via trace forms.
//!
//! Characteristic zero: `rad A = {x : tr(L_{xy}) = 0 for all y}`.
//!
//! Prime fields: the trace form only gives an upper bound, so we refine it
//! through the chain `I_{-1} = A ⊇ I_0 ⊇ ... ⊇ I_l`, `l = ⌊log_p n⌋`, with
//! `I_i = {x ∈ I_{i-1} : g_i(xy) = 0 ∀y}` and
//! `g_i(a) = tr(ã^{p^i}) / p^i mod p` for an integer lift `ã` of `L_a`.
//! `g_i` is linear on `I_{i-1}` and `I_l` is the radical.

use alloc::vec::Vec;

use super::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{Matrix, Span};

pub(super) fn radical_basis(a: &Algebra) -> Result<Vec<Element>> {
    let n = a.dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    match a.field() {
        FieldSpec::Rationals => {
            let traces: Vec<Scalar> = a.left.iter().map(Matrix::trace).collect();
            let mut gram = Matrix::zeros(a.field(), n, n);
            for i in 0..n {
                for j in 0..n {
                    let bij = a.product_of_basis(i, j);
                    let mut t = a.field().zero();
                    for (c, tr) in bij.iter().zip(&traces) {
                        if !c.is_zero() {
                            t += &(c * tr);
                        }
                    }
                    gram.set(i, j, t);
                }
            }
            Ok(gram.transpose().kernel_basis().columns())
        }
        FieldSpec::Prime(p) => prime_radical(a, p),
    }
}

fn prime_radical(a: &Algebra, p: u64) -> Result<Vec<Element>> {
    let n = a.dim();
    let field = a.field();
    let mut levels = 0u32;
    let mut pk = p;
    while pk <= n as u64 {
        levels += 1;
        pk = pk.saturating_mul(p);
    }
    let mut current: Vec<Element> = (0..n).map(|i| a.basis_element(i)).collect();
    for i in 0..=levels {
        if current.is_empty() {
            break;
        }
        let modulus = p
            .checked_pow(i + 1)
            .ok_or_else(|| Error::Internal("modulus overflow".into()))?;
        let divisor = p.pow(i);
        let exponent = p.pow(i);
        // values[k][j] = g_i(current_k * b_j)
        let mut form = Matrix::zeros(field, current.len(), n);
        for (k, x) in current.iter().enumerate() {
            for j in 0..n {
                let xy = a.mul(x, &a.basis_element(j));
                let lifted = lift(&a.left_mul_matrix(&xy), modulus);
                let t = trace_of_power(&lifted, exponent, modulus);
                if t % divisor != 0 {
                    return Err(Error::Internal(
                        "p-power trace is not divisible as expected".into(),
                    ));
                }
                form.set(k, j, field.from_i64(((t / divisor) % p) as i64));
            }
        }
        let kernel = form.transpose().kernel_basis();
        let mut span = Span::new(field, n);
        for c in kernel.columns() {
            let mut v = a.zero_element();
            for (coef, x) in c.iter().zip(&current) {
                if coef.is_zero() {
                    continue;
                }
                for (vi, xi) in v.iter_mut().zip(x) {
                    *vi += &(coef * xi);
                }
            }
            span.insert(&v);
        }
        current = span.basis().to_vec();
    }
    Ok(current)
}

fn lift(m: &Matrix, modulus: u64) -> Vec<Vec<u64>> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| m.get(i, j).residue().unwrap_or(0) % modulus)
                .collect()
        })
        .collect()
}

fn mat_mul_mod(a: &[Vec<u64>], b: &[Vec<u64>], m: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut out = alloc::vec![alloc::vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i][k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                let y = b[k][j];
                if y != 0 {
                    out[i][j] = ((out[i][j] as u128 + x as u128 * y as u128) % m as u128) as u64;
                }
            }
        }
    }
    out
}

fn trace_of_power(m: &[Vec<u64>], mut exp: u64, modulus: u64) -> u64 {
    let n = m.len();
    let mut acc: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j) % modulus).collect())
        .collect();
    let mut base = m.to_vec();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mat_mul_mod(&acc, &base, modulus);
        }
        exp >>= 1;
        if exp > 0 {
            base = mat_mul_mod(&base, &base, modulus);
        }
    }
    (0..n).fold(0u64, |t, i| (t + acc[i][i]) % modulus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    /// Group algebra of Z/n over the field, basis g^0..g^{n-1}.
    fn cyclic_group_algebra(field: FieldSpec, n: usize) -> Algebra {
        let products: Vec<Vec<Element>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| crate::matrix::unit_vec(field, n, (i + j) % n))
                    .collect()
            })
            .collect();
        Algebra::from_structure_constants(
            field,
            (0..n).map(|i| format!("g{i}")).collect(),
            &products,
            crate::matrix::unit_vec(field, n, 0),
        )
        .unwrap()
    }

    #[test]
    fn modular_group_algebra_radical_is_augmentation_ideal() {
        for p in [2u64, 3, 5] {
            let f = FieldSpec::prime(p).unwrap();
            let a = cyclic_group_algebra(f, p as usize);
            assert_eq!(a.radical().len(), p as usize - 1, "p = {p}");
            assert!(a.is_nilpotent_ideal(a.radical()));
        }
    }

    #[test]
    fn semisimple_group_algebra_in_coprime_characteristic() {
        let f = FieldSpec::prime(7).unwrap();
        assert!(cyclic_group_algebra(f, 3).radical().is_empty());
        assert!(cyclic_group_algebra(FieldSpec::Rationals, 4)
            .radical()
            .is_empty());
    }

    #[test]
    fn matrix_algebra_over_f2_is_semisimple() {
        let f = FieldSpec::prime(2).unwrap();
        let a = crate::algebra::matrix_algebra(f, 2).unwrap();
        assert!(a.radical().is_empty());
        let a = crate::algebra::matrix_algebra(f, 3).unwrap();
        assert!(a.radical().is_empty());
    }

    #[test]
    fn trace_power_helper() {
        let m = vec![vec![1u64, 1], vec![0, 1]];
        // [[1,1],[0,1]]^4 has trace 2
        assert_eq!(trace_of_power(&m, 4, 1000), 2);
    }
}
