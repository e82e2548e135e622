//! Left modules as matrix representations.
//!
//! Every [`Representation`] is kept in an idempotent-adapted basis: the
//! coordinates are grouped by the attached idempotents `e_0, e_1, ...` so
//! that `e_i` acts as the projection onto the `i`-th coordinate block. Module
//! maps are then block diagonal, and the intertwiner equations only need the
//! algebra's Peirce-homogeneous generators.

mod decompose;
mod hom;
mod registry;

pub use decompose::{
    decompose, find_isomorphism, is_indecomposable, is_isomorphic, radical_endomorphisms, Summand,
};
pub use hom::{hom_dim, hom_space};
pub use registry::IsoRegistry;

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{Matrix, Span};

/// `dim e_i M` for each attached idempotent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

struct RepData {
    algebra: Arc<Algebra>,
    offsets: Vec<usize>,
    action: Vec<Matrix>,
}

/// A finite-dimensional left module. Cheap to clone.
#[derive(Clone)]
pub struct Representation(Arc<RepData>);

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation{}", self.dim_vector())
    }
}

impl Representation {
    /// Validates an action (one matrix per basis element) and changes to an
    /// adapted basis. Returns the module and the basis change `B`, whose
    /// columns are the new basis vectors in the old coordinates.
    pub fn new(algebra: Arc<Algebra>, action: Vec<Matrix>) -> Result<(Self, Matrix)> {
        let n = algebra.dim();
        if algebra.vertex_count() == 0 {
            return Err(Error::Input("algebra has no idempotents attached".into()));
        }
        if action.len() != n {
            return Err(Error::Dimension(format!(
                "expected {n} action matrices, got {}",
                action.len()
            )));
        }
        let d = action.first().map_or(0, Matrix::rows);
        if action.iter().any(|m| m.rows() != d || m.cols() != d) {
            return Err(Error::Dimension(
                "action matrices must be square of one size".into(),
            ));
        }
        let field = algebra.field();
        let act = |x: &[Scalar]| Matrix::combination(field, d, d, x, &action);
        if act(algebra.unit()) != Matrix::identity(field, d) {
            return Err(Error::Input("the unit does not act as the identity".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = action[i].mul(&action[j]);
                let rhs = act(&algebra.product_of_basis(i, j));
                if lhs != rhs {
                    return Err(Error::Input(format!(
                        "action is not multiplicative on ({}, {})",
                        algebra.labels()[i],
                        algebra.labels()[j]
                    )));
                }
            }
        }
        Ok(Self::adapt(algebra, &action))
    }

    /// Changes an already validated action to an adapted basis.
    pub(crate) fn adapt(algebra: Arc<Algebra>, action: &[Matrix]) -> (Self, Matrix) {
        let field = algebra.field();
        let d = action.first().map_or(0, Matrix::rows);
        let mut offsets = vec![0];
        let mut cols: Vec<Vec<Scalar>> = Vec::new();
        for e in algebra.idempotents() {
            let p = Matrix::combination(field, d, d, e, action);
            cols.extend(p.column_basis().columns());
            offsets.push(cols.len());
        }
        let b = Matrix::from_columns(field, d, &cols);
        let inv = b
            .invert()
            .ok()
            .flatten()
            .expect("idempotents decompose the module");
        let new_action = action.iter().map(|m| inv.mul(m).mul(&b)).collect();
        (Self::from_parts(algebra, offsets, new_action), b)
    }

    pub(crate) fn from_parts(
        algebra: Arc<Algebra>,
        offsets: Vec<usize>,
        action: Vec<Matrix>,
    ) -> Self {
        debug_assert_eq!(offsets.len(), algebra.vertex_count() + 1);
        Representation(Arc::new(RepData {
            algebra,
            offsets,
            action,
        }))
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let field = algebra.field();
        let offsets = vec![0; algebra.vertex_count() + 1];
        let action = (0..algebra.dim())
            .map(|_| Matrix::zeros(field, 0, 0))
            .collect();
        Self::from_parts(algebra, offsets, action)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.0.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.0.algebra.field()
    }

    pub fn dim(&self) -> usize {
        *self.0.offsets.last().expect("offsets")
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Action matrix of the `k`-th basis element.
    pub fn action(&self, k: usize) -> &Matrix {
        &self.0.action[k]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.0.action
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        Matrix::combination(self.field(), self.dim(), self.dim(), x, &self.0.action)
    }

    pub fn offsets(&self) -> &[usize] {
        &self.0.offsets
    }

    /// Coordinates spanning `e_i M`.
    pub fn block(&self, i: usize) -> Range<usize> {
        self.0.offsets[i]..self.0.offsets[i + 1]
    }

    pub fn block_dim(&self, i: usize) -> usize {
        self.0.offsets[i + 1] - self.0.offsets[i]
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector(self.0.offsets.windows(2).map(|w| w[1] - w[0]).collect())
    }

    pub fn same_algebra(&self, other: &Representation) -> bool {
        Arc::ptr_eq(self.algebra(), other.algebra()) || **self.algebra() == **other.algebra()
    }

    pub(crate) fn check_same_algebra(&self, other: &Representation) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::Input("modules over different algebras".into()))
        }
    }

    /// Block `(target, source)` of a matrix acting on this module.
    pub(crate) fn sub_block(&self, m: &Matrix, target: usize, source: usize) -> Matrix {
        let (r, c) = (self.block(target), self.block(source));
        m.block(r.start, c.start, r.len(), c.len())
    }

    /// Submodule spanned by `vectors`, which must span an `A`-stable
    /// subspace. Returns it with its inclusion matrix.
    pub fn submodule(&self, vectors: &[Vec<Scalar>]) -> (Representation, Matrix) {
        let field = self.field();
        let d = self.dim();
        let mut offsets = vec![0];
        let mut cols = Vec::new();
        for i in 0..self.algebra().vertex_count() {
            let r = self.block(i);
            let mut span = Span::new(field, d);
            for v in vectors {
                let mut w = vec![field.zero(); d];
                w[r.clone()].clone_from_slice(&v[r.clone()]);
                span.insert(&w);
            }
            cols.extend(span.basis().iter().cloned());
            offsets.push(cols.len());
        }
        let incl = Matrix::from_columns(field, d, &cols);
        let left = incl
            .left_inverse()
            .unwrap_or_else(|| Matrix::zeros(field, 0, d));
        let action = self
            .0
            .action
            .iter()
            .map(|m| left.mul(m).mul(&incl))
            .collect();
        let sub = Self::from_parts(self.algebra().clone(), offsets, action);
        debug_assert!(self
            .0
            .action
            .iter()
            .zip(sub.actions())
            .all(|(m, s)| m.mul(&incl) == incl.mul(s)));
        (sub, incl)
    }

    /// The submodule `A·vectors`.
    pub fn generated_submodule(&self, vectors: &[Vec<Scalar>]) -> (Representation, Matrix) {
        let mut span = Span::new(self.field(), self.dim());
        for v in vectors {
            for m in &self.0.action {
                span.insert(&m.mul_vec(v));
            }
        }
        self.submodule(span.basis())
    }

    /// Quotient by the submodule spanned by `vectors`. Returns the quotient,
    /// the projection `M → M/U` and a linear section `M/U → M`.
    pub fn quotient(&self, vectors: &[Vec<Scalar>]) -> (Representation, Matrix, Matrix) {
        let field = self.field();
        let d = self.dim();
        let mut offsets = vec![0];
        let mut proj_rows: Vec<Vec<Scalar>> = Vec::new();
        let mut section_cols: Vec<Vec<Scalar>> = Vec::new();
        for i in 0..self.algebra().vertex_count() {
            let r = self.block(i);
            let k = r.len();
            let mut span = Span::new(field, k);
            for v in vectors {
                span.insert(&v[r.clone()].to_vec());
            }
            let sub_rank = span.rank();
            let mut basis: Vec<Vec<Scalar>> = span.basis().to_vec();
            let mut complement = Vec::new();
            for c in 0..k {
                let u = crate::matrix::unit_vec(field, k, c);
                if span.insert(&u) {
                    basis.push(u);
                    complement.push(c);
                }
            }
            let inv = Matrix::from_columns(field, k, &basis)
                .invert()
                .ok()
                .flatten()
                .expect("completed basis");
            for row in sub_rank..k {
                let mut full = vec![field.zero(); d];
                full[r.clone()].clone_from_slice(inv.row(row));
                proj_rows.push(full);
            }
            for c in complement {
                section_cols.push(crate::matrix::unit_vec(field, d, r.start + c));
            }
            offsets.push(proj_rows.len());
        }
        let q = proj_rows.len();
        let mut proj = Matrix::zeros(field, q, d);
        for (i, row) in proj_rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    proj.set(i, j, x.clone());
                }
            }
        }
        let section = Matrix::from_columns(field, d, &section_cols);
        let action = self
            .0
            .action
            .iter()
            .map(|m| proj.mul(m).mul(&section))
            .collect();
        (
            Self::from_parts(self.algebra().clone(), offsets, action),
            proj,
            section,
        )
    }

    /// Basis of `rad(A)·M`.
    pub fn radical_vectors(&self) -> Vec<Vec<Scalar>> {
        let mut span = Span::new(self.field(), self.dim());
        for r in self.algebra().radical() {
            let m = self.act(r);
            for c in m.column_basis().columns() {
                span.insert(&c);
            }
        }
        span.basis().to_vec()
    }

    /// `rad(A)·M` with its inclusion.
    pub fn radical_submodule(&self) -> (Representation, Matrix) {
        self.submodule(&self.radical_vectors())
    }

    /// `M / rad(A)·M` with projection and section.
    pub fn top(&self) -> (Representation, Matrix, Matrix) {
        self.quotient(&self.radical_vectors())
    }

    /// Kernel of the representation map `λ ↦ action(λ)`.
    pub fn annihilator(&self) -> Vec<Element> {
        let n = self.algebra().dim();
        let cols: Vec<Vec<Scalar>> = self.0.action.iter().map(Matrix::vectorize).collect();
        let d2 = self.dim() * self.dim();
        if d2 == 0 {
            return (0..n).map(|k| self.algebra().basis_element(k)).collect();
        }
        Matrix::from_columns(self.field(), d2, &cols)
            .kernel_basis()
            .columns()
    }

    pub fn is_faithful(&self) -> bool {
        self.annihilator().is_empty()
    }

    /// Every simple module is a composition factor, i.e. `e_i M ≠ 0` for all `i`.
    pub fn is_sincere(&self) -> bool {
        self.dim_vector().0.iter().all(|&d| d > 0)
    }

    /// Radical layers as vertex labels, e.g. `1/2 2'`; `0` for the zero module.
    pub fn radical_layers_label(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let a = self.algebra().clone();
        let mut layers = Vec::new();
        let mut current = self.clone();
        while !current.is_zero() {
            let (top, _, _) = current.top();
            let mut names = Vec::new();
            for (i, d) in top.dim_vector().0.iter().enumerate() {
                if a.iso_class_of(i) != i {
                    continue;
                }
                for _ in 0..*d {
                    names.push(a.vertex_labels()[i].clone());
                }
            }
            layers.push(names.join(" "));
            current = current.radical_submodule().0;
        }
        layers.join("/")
    }

    /// The module with every action matrix transposed, over `algebra`
    /// (meant to be the opposite algebra): the `k`-dual `D M`.
    pub fn dual_over(&self, algebra: Arc<Algebra>) -> Representation {
        let action = self.0.action.iter().map(Matrix::transpose).collect();
        Self::from_parts(algebra, self.0.offsets.clone(), action)
    }

    /// Same action, reinterpreted over an equal algebra value.
    pub fn rebind(&self, algebra: Arc<Algebra>) -> Representation {
        Self::from_parts(algebra, self.0.offsets.clone(), self.0.action.clone())
    }
}

/// The indecomposable projective `A e_i` together with the algebra elements
/// forming its basis (in the order of the module coordinates).
pub fn projective_with_basis(algebra: &Arc<Algebra>, i: usize) -> (Representation, Vec<Element>) {
    let a = algebra;
    let field = a.field();
    let mut basis: Vec<Element> = Vec::new();
    let mut offsets = vec![0];
    for j in 0..a.vertex_count() {
        basis.extend(a.peirce_basis(j, i, false));
        offsets.push(basis.len());
    }
    let span = Span::from_vectors(field, a.dim(), &basis);
    let d = basis.len();
    let action = (0..a.dim())
        .map(|k| {
            let bk = a.basis_element(k);
            let cols: Vec<Vec<Scalar>> = basis
                .iter()
                .map(|p| {
                    span.coordinates(&a.mul(&bk, p))
                        .expect("A e_i is a left ideal")
                })
                .collect();
            Matrix::from_columns(field, d, &cols)
        })
        .collect();
    (
        Representation::from_parts(algebra.clone(), offsets, action),
        basis,
    )
}

pub fn projective(algebra: &Arc<Algebra>, i: usize) -> Representation {
    projective_with_basis(algebra, i).0
}

/// Top of the `i`-th indecomposable projective.
pub fn simple(algebra: &Arc<Algebra>, i: usize) -> Representation {
    projective(algebra, i).top().0
}

/// The regular module as the sum of the `A e_i`.
pub fn regular(algebra: &Arc<Algebra>) -> Representation {
    let ps: Vec<Representation> = (0..algebra.vertex_count())
        .map(|i| projective(algebra, i))
        .collect();
    direct_sum(algebra, &ps).0
}

/// Direct sum with the injections of the summands.
pub fn direct_sum(
    algebra: &Arc<Algebra>,
    parts: &[Representation],
) -> (Representation, Vec<Matrix>) {
    let field = algebra.field();
    let r = algebra.vertex_count();
    let total: usize = parts.iter().map(Representation::dim).sum();
    let mut offsets = vec![0];
    // position[k][i] = start of summand k's block i in the sum
    let mut position = vec![vec![0; r]; parts.len()];
    let mut pos = 0;
    for i in 0..r {
        for (k, p) in parts.iter().enumerate() {
            position[k][i] = pos;
            pos += p.block_dim(i);
        }
        offsets.push(pos);
    }
    let injections: Vec<Matrix> = parts
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let mut m = Matrix::zeros(field, total, p.dim());
            for i in 0..r {
                for (t, c) in p.block(i).enumerate() {
                    m.set(position[k][i] + t, c, field.one());
                }
            }
            m
        })
        .collect();
    let action = (0..algebra.dim())
        .map(|b| {
            let mut m = Matrix::zeros(field, total, total);
            for (k, p) in parts.iter().enumerate() {
                m = m.add(
                    &injections[k]
                        .mul(p.action(b))
                        .mul(&injections[k].transpose()),
                );
            }
            m
        })
        .collect();
    (
        Representation::from_parts(algebra.clone(), offsets, action),
        injections,
    )
}

/// `M^{⊕ n}`.
pub fn power(m: &Representation, n: usize) -> Representation {
    let parts = vec![m.clone(); n];
    direct_sum(m.algebra(), &parts).0
}

/// A homomorphism of left modules.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: Representation,
    pub target: Representation,
    pub matrix: Matrix,
}

impl ModuleMap {
    /// Checks the intertwining condition on every basis element.
    pub fn new(source: Representation, target: Representation, matrix: Matrix) -> Result<Self> {
        source.check_same_algebra(&target)?;
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Dimension("map matrix has the wrong shape".into()));
        }
        for k in 0..source.algebra().dim() {
            if matrix.mul(source.action(k)) != target.action(k).mul(&matrix) {
                return Err(Error::Input(format!(
                    "matrix does not commute with {}",
                    source.algebra().labels()[k]
                )));
            }
        }
        Ok(ModuleMap {
            source,
            target,
            matrix,
        })
    }

    pub(crate) fn unchecked(
        source: Representation,
        target: Representation,
        matrix: Matrix,
    ) -> Self {
        debug_assert_eq!((matrix.rows(), matrix.cols()), (target.dim(), source.dim()));
        ModuleMap {
            source,
            target,
            matrix,
        }
    }

    pub fn identity(m: &Representation) -> Self {
        Self::unchecked(m.clone(), m.clone(), Matrix::identity(m.field(), m.dim()))
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        Self::unchecked(
            source.clone(),
            target.clone(),
            Matrix::zeros(source.field(), target.dim(), source.dim()),
        )
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModuleMap) -> ModuleMap {
        Self::unchecked(
            first.source.clone(),
            self.target.clone(),
            self.matrix.mul(&first.matrix),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    /// Kernel with its inclusion into the source.
    pub fn kernel(&self) -> (Representation, ModuleMap) {
        let vs = self.matrix.kernel_basis().columns();
        let (k, incl) = self.source.submodule(&vs);
        let map = Self::unchecked(k.clone(), self.source.clone(), incl);
        (k, map)
    }

    /// Image with its inclusion into the target.
    pub fn image(&self) -> (Representation, ModuleMap) {
        let vs = self.matrix.column_basis().columns();
        let (im, incl) = self.target.submodule(&vs);
        let map = Self::unchecked(im.clone(), self.target.clone(), incl);
        (im, map)
    }

    /// Cokernel with the projection from the target.
    pub fn cokernel(&self) -> (Representation, ModuleMap) {
        let vs = self.matrix.column_basis().columns();
        let (c, proj, _) = self.target.quotient(&vs);
        let map = Self::unchecked(self.target.clone(), c.clone(), proj);
        (c, map)
    }
}

/// A direct sum of indecomposable projectives `A e_v`, remembering the
/// algebra elements that form the basis of each summand.
#[derive(Clone, Debug)]
pub struct ProjectiveSum {
    pub vertices: Vec<usize>,
    pub module: Representation,
    pub injections: Vec<Matrix>,
    pub bases: Vec<Vec<Element>>,
}

impl ProjectiveSum {
    pub fn new(algebra: &Arc<Algebra>, vertices: Vec<usize>) -> Self {
        let mut parts = Vec::with_capacity(vertices.len());
        let mut bases = Vec::with_capacity(vertices.len());
        for &v in &vertices {
            let (p, b) = projective_with_basis(algebra, v);
            parts.push(p);
            bases.push(b);
        }
        let (module, injections) = direct_sum(algebra, &parts);
        ProjectiveSum {
            vertices,
            module,
            injections,
            bases,
        }
    }

    /// The vector of the generator `e_v` of the `k`-th summand.
    pub fn generator(&self, k: usize) -> Vec<Scalar> {
        let a = self.module.algebra();
        let span = Span::from_vectors(a.field(), a.dim(), &self.bases[k]);
        let c = span
            .coordinates(a.idempotent(self.vertices[k]))
            .expect("e_v lies in A e_v");
        self.injections[k].mul_vec(&c)
    }

    /// The `k`-th component of a vector, as an algebra element of `A e_v`.
    pub fn component(&self, k: usize, v: &[Scalar]) -> Element {
        let a = self.module.algebra();
        let c = self.injections[k].transpose().mul_vec(v);
        let mut out = a.zero_element();
        for (x, b) in c.iter().zip(&self.bases[k]) {
            if !x.is_zero() {
                for (o, y) in out.iter_mut().zip(b) {
                    *o += &(x * y);
                }
            }
        }
        out
    }

    /// The map to `m` sending the generator of summand `k` to `images[k]`.
    pub fn map_to(&self, m: &Representation, images: &[Vec<Scalar>]) -> ModuleMap {
        let field = m.field();
        let mut matrix = Matrix::zeros(field, m.dim(), self.module.dim());
        for (k, x) in images.iter().enumerate() {
            let cols: Vec<Vec<Scalar>> =
                self.bases[k].iter().map(|b| m.act(b).mul_vec(x)).collect();
            let img = Matrix::from_columns(field, m.dim(), &cols);
            matrix = matrix.add(&img.mul(&self.injections[k].transpose()));
        }
        ModuleMap::unchecked(self.module.clone(), m.clone(), matrix)
    }
}

/// Projective cover `P(M) ↠ M`: one copy of `A e_j` for each composition
/// factor of `top M` (one representative vertex per iso class of simples).
pub fn projective_cover_sum(m: &Representation) -> (ProjectiveSum, ModuleMap) {
    let a = m.algebra().clone();
    let (top, _, section) = m.top();
    let mut vertices = Vec::new();
    let mut images = Vec::new();
    for j in a.iso_class_representatives() {
        for t in top.block(j) {
            vertices.push(j);
            images.push(section.column(t));
        }
    }
    let sum = ProjectiveSum::new(&a, vertices);
    let map = sum.map_to(m, &images);
    (sum, map)
}

pub fn projective_cover(m: &Representation) -> ModuleMap {
    projective_cover_sum(m).1
}

/// Whether every vector of `z` lies in the trace of `t` (sum of images of
/// maps `t → z`), i.e. `z ∈ Fac t`.
pub fn fac_contains(t: &Representation, z: &Representation) -> Result<bool> {
    t.check_same_algebra(z)?;
    if z.is_zero() {
        return Ok(true);
    }
    Ok(trace_rank(t, z) == z.dim())
}

/// Dimension of the trace of `t` in `z`.
pub(crate) fn trace_rank(t: &Representation, z: &Representation) -> usize {
    let mut span = Span::new(z.field(), z.dim());
    for f in hom_space(t, z) {
        for c in f.matrix.columns() {
            span.insert(&c);
            if span.rank() == z.dim() {
                return span.rank();
            }
        }
    }
    span.rank()
}
