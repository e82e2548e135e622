//! Hom spaces from the intertwiner equations on generators.

use alloc::vec::Vec;

use super::{ModuleMap, Representation};
use crate::matrix::Matrix;

/// Basis of `Hom_A(m, n)`.
pub fn hom_space(m: &Representation, n: &Representation) -> Vec<ModuleMap> {
    assert!(
        m.same_algebra(n),
        "hom_space needs modules over one algebra"
    );
    let field = m.field();
    let a = m.algebra();
    let r = a.vertex_count();
    // unknown f_i : e_i m -> e_i n, stored column-major at unknown_offset[i]
    let mut unknown_offset = Vec::with_capacity(r + 1);
    let mut total = 0;
    for i in 0..r {
        unknown_offset.push(total);
        total += m.block_dim(i) * n.block_dim(i);
    }
    if total == 0 {
        return Vec::new();
    }
    let var = |i: usize, row: usize, col: usize| unknown_offset[i] + col * n.block_dim(i) + row;
    let mut rows: Vec<Vec<crate::field::Scalar>> = Vec::new();
    for g in a.generators() {
        let (s, t) = (g.source, g.target);
        let (nt, ms) = (n.block_dim(t), m.block_dim(s));
        if nt == 0 || ms == 0 {
            continue;
        }
        let mg = m.sub_block(&m.act(&g.element), t, s);
        let ng = n.sub_block(&n.act(&g.element), t, s);
        for row in 0..nt {
            for col in 0..ms {
                let mut eq = alloc::vec![field.zero(); total];
                // (f_t · Mg)[row][col] - (Ng · f_s)[row][col]
                for p in 0..m.block_dim(t) {
                    let x = mg.get(p, col);
                    if !x.is_zero() {
                        eq[var(t, row, p)] += x;
                    }
                }
                for q in 0..n.block_dim(s) {
                    let x = ng.get(row, q);
                    if !x.is_zero() {
                        eq[var(s, q, col)] -= x;
                    }
                }
                if eq.iter().any(|x| !x.is_zero()) {
                    rows.push(eq);
                }
            }
        }
    }
    let system = if rows.is_empty() {
        Matrix::zeros(field, 0, total)
    } else {
        Matrix::from_rows(field, rows)
    };
    let kernel = system.kernel_basis();
    (0..kernel.cols())
        .map(|c| {
            let v = kernel.column(c);
            let mut f = Matrix::zeros(field, n.dim(), m.dim());
            for i in 0..r {
                let (rn, rm) = (n.block(i), m.block(i));
                for col in 0..rm.len() {
                    for row in 0..rn.len() {
                        let x = &v[var(i, row, col)];
                        if !x.is_zero() {
                            f.set(rn.start + row, rm.start + col, x.clone());
                        }
                    }
                }
            }
            ModuleMap::unchecked(m.clone(), n.clone(), f)
        })
        .collect()
}

pub fn hom_dim(m: &Representation, n: &Representation) -> usize {
    hom_space(m, n).len()
}
