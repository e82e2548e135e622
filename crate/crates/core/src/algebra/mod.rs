//! Finite-dimensional algebras given by structure constants.

mod idempotents;
mod quiver;
mod radical;

pub use idempotents::lift_primitive_idempotents;
pub(crate) use idempotents::random_element;
pub use quiver::{
    automorphism_from_quiver_map, gabriel_quiver, Arrow, BoundQuiverAlgebra, QuiverPresentation,
    Relation,
};

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{is_zero_vec, vec_sub, zero_vec, Matrix, Span};

/// Coefficient vector of an algebra element over the basis.
pub type Element = Vec<Scalar>;

/// Default seed for the randomized (but reproducible) searches.
pub const DEFAULT_SEED: u64 = 0xA1;

/// A generator `g ∈ e_target · A · e_source` used to write down module
/// homomorphism equations.
#[derive(Clone, Debug)]
pub struct Generator {
    pub source: usize,
    pub target: usize,
    pub element: Element,
}

/// A finite-dimensional associative unital algebra.
///
/// `left[i]` is the matrix of left multiplication by the `i`-th basis
/// element, so the coefficient vector of `b_i * b_j` is column `j` of it.
#[derive(Clone)]
pub struct Algebra {
    field: FieldSpec,
    labels: Vec<String>,
    left: Vec<Matrix>,
    unit: Element,
    radical: Vec<Element>,
    idempotents: Vec<Element>,
    vertex_labels: Vec<String>,
    iso_class: Vec<usize>,
    generators: Vec<Generator>,
    split_basic: bool,
    seed: u64,
}

impl core::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Algebra")
            .field("field", &self.field)
            .field("dim", &self.dim())
            .field("labels", &self.labels)
            .field("vertices", &self.vertex_labels)
            .finish()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.left == other.left
            && self.unit == other.unit
            && self.idempotents == other.idempotents
    }
}

impl Algebra {
    /// Builds an algebra from `products[i][j]` = coefficients of `b_i b_j`,
    /// checking associativity and the unit law. No idempotents are attached.
    pub fn from_structure_constants(
        field: FieldSpec,
        labels: Vec<String>,
        products: &[Vec<Element>],
        unit: Element,
    ) -> Result<Self> {
        let n = labels.len();
        if products.len() != n
            || products
                .iter()
                .any(|r| r.len() != n || r.iter().any(|v| v.len() != n))
        {
            return Err(Error::Dimension(
                "structure constant table has the wrong shape".into(),
            ));
        }
        if unit.len() != n {
            return Err(Error::Dimension("unit vector has the wrong length".into()));
        }
        let left = (0..n)
            .map(|i| Matrix::from_columns(field, n, &products[i]))
            .collect();
        let mut alg = Algebra {
            field,
            labels,
            left,
            unit,
            radical: Vec::new(),
            idempotents: Vec::new(),
            vertex_labels: Vec::new(),
            iso_class: Vec::new(),
            generators: Vec::new(),
            split_basic: false,
            seed: DEFAULT_SEED,
        };
        alg.check_laws()?;
        alg.radical = radical::radical_basis(&alg)?;
        Ok(alg)
    }

    /// Subalgebra-with-its-own-unit spanned by `basis` (elements of `self`).
    /// Used for corner algebras `fAf` and endomorphism algebras.
    pub fn corner(&self, basis: &[Element], unit: &Element) -> Result<(Self, Span)> {
        let span = Span::from_vectors(self.field, self.dim(), basis);
        if span.rank() != basis.len() {
            return Err(Error::Internal("corner basis is dependent".into()));
        }
        let products: Vec<Vec<Element>> = basis
            .iter()
            .map(|x| {
                basis
                    .iter()
                    .map(|y| {
                        span.coordinates(&self.mul(x, y)).ok_or_else(|| {
                            Error::Internal("corner is not closed under products".into())
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let u = span
            .coordinates(unit)
            .ok_or_else(|| Error::Internal("corner unit outside corner".into()))?;
        let labels = (0..basis.len()).map(|i| format!("c{i}")).collect();
        let mut c = Algebra::from_structure_constants(self.field, labels, &products, u)?;
        c.seed = self.seed;
        Ok((c, span))
    }

    /// Attaches a complete set of orthogonal idempotents (with vertex labels)
    /// and derives the generator set and iso-class data.
    pub fn with_idempotents(
        mut self,
        idempotents: Vec<Element>,
        vertex_labels: Vec<String>,
    ) -> Result<Self> {
        if idempotents.len() != vertex_labels.len() {
            return Err(Error::Dimension("one label per idempotent required".into()));
        }
        let mut sum = zero_vec(self.field, self.dim());
        for (i, e) in idempotents.iter().enumerate() {
            if e.len() != self.dim() {
                return Err(Error::Dimension("idempotent has the wrong length".into()));
            }
            for (j, f) in idempotents.iter().enumerate() {
                let p = self.mul(e, f);
                let expect = if i == j {
                    e.clone()
                } else {
                    zero_vec(self.field, self.dim())
                };
                if p != expect {
                    return Err(Error::Input(format!(
                        "idempotents {i} and {j} are not orthogonal idempotents"
                    )));
                }
            }
            sum = sum.iter().zip(e).map(|(a, b)| a + b).collect();
        }
        if sum != self.unit {
            return Err(Error::Input("idempotents do not sum to the unit".into()));
        }
        self.idempotents = idempotents;
        self.vertex_labels = vertex_labels;
        self.derive_vertex_data();
        Ok(self)
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    fn check_laws(&self) -> Result<()> {
        let n = self.dim();
        let one = &self.unit;
        for i in 0..n {
            let b = crate::matrix::unit_vec(self.field, n, i);
            if self.mul(one, &b) != b || self.mul(&b, one) != b {
                return Err(Error::Input(format!("unit law fails on basis element {i}")));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let bij = self.left[i].column(j);
                let lhs_left = self.left_mul_matrix(&bij);
                let rhs_left = self.left[i].mul(&self.left[j]);
                if lhs_left != rhs_left {
                    return Err(Error::Input(format!(
                        "associativity fails on basis elements ({i}, {j}, -)"
                    )));
                }
            }
        }
        Ok(())
    }

    fn derive_vertex_data(&mut self) {
        let r = self.idempotents.len();
        let mut iso_class = (0..r).collect::<Vec<_>>();
        let mut local_ok = true;
        let mut basic = true;
        for i in 0..r {
            for j in 0..r {
                // dim e_j (A/rad A) e_i
                let top = self.peirce_dim(j, i, false) - self.peirce_dim(j, i, true);
                if i == j {
                    local_ok &= top == 1;
                } else if top > 0 {
                    basic = false;
                    iso_class[i] = iso_class[i].min(j);
                }
            }
        }
        self.iso_class = iso_class;
        self.split_basic = local_ok && basic;
        self.generators = self.compute_generators();
    }

    fn compute_generators(&self) -> Vec<Generator> {
        let n = self.dim();
        let r = self.idempotents.len();
        let mut chosen: Vec<Element> = self.idempotents.clone();
        let mut gens = Vec::new();
        let mut closure = self.subalgebra_closure(&chosen);
        for i in 0..r {
            for j in 0..r {
                let peirce = self.peirce_basis(j, i, false);
                for c in peirce {
                    if closure.contains(&c) {
                        continue;
                    }
                    chosen.push(c.clone());
                    gens.push(Generator {
                        source: i,
                        target: j,
                        element: c,
                    });
                    closure = self.subalgebra_closure(&chosen);
                    if closure.rank() == n {
                        return gens;
                    }
                }
            }
        }
        gens
    }

    fn subalgebra_closure(&self, gens: &[Element]) -> Span {
        let mut span = Span::new(self.field, self.dim());
        let mut queue: VecDeque<Element> = VecDeque::new();
        for g in gens {
            if span.insert(g) {
                queue.push_back(g.clone());
            }
        }
        while let Some(w) = queue.pop_front() {
            for g in gens {
                for p in [self.mul(g, &w), self.mul(&w, g)] {
                    if span.insert(&p) {
                        queue.push_back(p);
                    }
                }
            }
        }
        span
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.left.len()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn unit(&self) -> &Element {
        &self.unit
    }
    pub fn idempotents(&self) -> &[Element] {
        &self.idempotents
    }
    pub fn idempotent(&self, i: usize) -> &Element {
        &self.idempotents[i]
    }
    pub fn vertex_count(&self) -> usize {
        self.idempotents.len()
    }
    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }
    pub fn radical(&self) -> &[Element] {
        &self.radical
    }
    pub fn seed(&self) -> u64 {
        self.seed
    }
    /// Whether the attached idempotents are primitive, pairwise
    /// non-equivalent and split (every `e_i (A/rad A) e_i` is the field).
    pub fn is_split_basic(&self) -> bool {
        self.split_basic
    }
    /// Index of the first idempotent whose projective is isomorphic to `Ae_i`.
    pub fn iso_class_of(&self, i: usize) -> usize {
        self.iso_class[i]
    }
    /// One idempotent index per isomorphism class of indecomposable projectives.
    pub fn iso_class_representatives(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&i| self.iso_class[i] == i)
            .collect()
    }
    /// Number of isomorphism classes of simple modules.
    pub fn simple_count(&self) -> usize {
        self.iso_class_representatives().len()
    }

    pub fn basis_element(&self, i: usize) -> Element {
        crate::matrix::unit_vec(self.field, self.dim(), i)
    }

    pub fn zero_element(&self) -> Element {
        zero_vec(self.field, self.dim())
    }

    /// Structure constants of `b_i b_j`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> Element {
        self.left[i].column(j)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Element {
        self.left_mul_matrix(x).mul_vec(y)
    }

    /// Matrix of `y ↦ x y` on the basis.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for (c, l) in x.iter().zip(&self.left) {
            m.add_scaled(c, l);
        }
        m
    }

    /// Matrix of `y ↦ y x` on the basis.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for j in 0..n {
            let col = self.left[j].mul_vec(x);
            for i in 0..n {
                m.set(i, j, col[i].clone());
            }
        }
        m
    }

    pub fn pow(&self, x: &[Scalar], k: usize) -> Element {
        let mut acc = self.unit.clone();
        for _ in 0..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Basis of `e_target · X · e_source` where `X` is `A` or its radical.
    pub fn peirce_basis(&self, target: usize, source: usize, radical_only: bool) -> Vec<Element> {
        let et = &self.idempotents[target];
        let es = &self.idempotents[source];
        let lt = self.left_mul_matrix(et);
        let rs = self.right_mul_matrix(es);
        let proj = lt.mul(&rs);
        let spanning: Vec<Element> = if radical_only {
            self.radical.iter().map(|r| proj.mul_vec(r)).collect()
        } else {
            (0..self.dim()).map(|k| proj.column(k)).collect()
        };
        Span::from_vectors(self.field, self.dim(), &spanning)
            .basis()
            .to_vec()
    }

    pub fn peirce_dim(&self, target: usize, source: usize, radical_only: bool) -> usize {
        self.peirce_basis(target, source, radical_only).len()
    }

    /// Basis of `rad^2 A`.
    pub fn radical_square(&self) -> Vec<Element> {
        let mut span = Span::new(self.field, self.dim());
        for x in &self.radical {
            for y in &self.radical {
                span.insert(&self.mul(x, y));
            }
        }
        span.basis().to_vec()
    }

    /// The opposite algebra: same basis, `b_i ∘ b_j = b_j b_i`.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim();
        let left: Vec<Matrix> = (0..n)
            .map(|i| self.right_mul_matrix(&self.basis_element(i)))
            .collect();
        let generators = self
            .generators
            .iter()
            .map(|g| Generator {
                source: g.target,
                target: g.source,
                element: g.element.clone(),
            })
            .collect();
        Algebra {
            field: self.field,
            labels: self.labels.clone(),
            left,
            unit: self.unit.clone(),
            radical: self.radical.clone(),
            idempotents: self.idempotents.clone(),
            vertex_labels: self.vertex_labels.clone(),
            iso_class: self.iso_class.clone(),
            generators,
            split_basic: self.split_basic,
            seed: self.seed,
        }
    }

    /// Structure constants as a nested table (row `i`, column `j` = `b_i b_j`).
    pub fn structure_constants(&self) -> Vec<Vec<Element>> {
        (0..self.dim()).map(|i| self.left[i].columns()).collect()
    }

    /// Whether every element of `X` is nilpotent of index at most `dim A`.
    pub fn is_nilpotent_ideal(&self, basis: &[Element]) -> bool {
        let mut power: Vec<Element> = basis.to_vec();
        for _ in 0..self.dim() {
            let mut span = Span::new(self.field, self.dim());
            for x in &power {
                for y in basis {
                    span.insert(&self.mul(x, y));
                }
            }
            power = span.basis().to_vec();
            if power.is_empty() {
                return true;
            }
        }
        false
    }

    /// Checks `phi(x y) = phi(x) phi(y)` on basis pairs, `phi(1) = 1`, and
    /// invertibility. Columns of `phi` are images of basis elements.
    pub fn check_automorphism(&self, phi: &Matrix) -> Result<()> {
        let n = self.dim();
        if phi.rows() != n || phi.cols() != n {
            return Err(Error::Automorphism("matrix has the wrong shape".into()));
        }
        if phi.mul_vec(&self.unit) != self.unit {
            return Err(Error::Automorphism("unit is not preserved".into()));
        }
        let images: Vec<Element> = phi.columns();
        for i in 0..n {
            for j in 0..n {
                let lhs = phi.mul_vec(&self.product_of_basis(i, j));
                let rhs = self.mul(&images[i], &images[j]);
                if !is_zero_vec(&vec_sub(&lhs, &rhs)) {
                    return Err(Error::Automorphism(format!(
                        "not multiplicative on ({}, {})",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        if !phi.is_invertible() {
            return Err(Error::Automorphism("map is not invertible".into()));
        }
        Ok(())
    }

    /// Permutation of idempotent indices induced by an automorphism, when it
    /// maps each attached idempotent to another one.
    pub fn idempotent_permutation(&self, phi: &Matrix) -> Option<Vec<usize>> {
        self.idempotents
            .iter()
            .map(|e| {
                let img = phi.mul_vec(e);
                self.idempotents.iter().position(|f| *f == img)
            })
            .collect()
    }

    pub fn format_element(&self, x: &[Scalar]) -> String {
        let mut out = String::new();
        for (c, l) in x.iter().zip(&self.labels) {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            if c.is_one() {
                out.push_str(l);
            } else {
                out.push_str(&format!("({c}){l}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// `A ⊗ B` on the basis `a_i ⊗ b_j` (index `i * dim B + j`), with the
/// idempotents `e_i ⊗ f_j` attached and labelled `"{A label},{B label}"`.
pub fn tensor_product(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    let field = a.field;
    let (n, m) = (a.dim(), b.dim());
    let d = n * m;
    let pair = |x: &[Scalar], y: &[Scalar]| -> Element {
        let mut v = zero_vec(field, d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    v[i * m + j] = xi * yj;
                }
            }
        }
        v
    };
    let mut products = vec![vec![Vec::new(); d]; d];
    for i1 in 0..n {
        for j1 in 0..m {
            for i2 in 0..n {
                for j2 in 0..m {
                    products[i1 * m + j1][i2 * m + j2] =
                        pair(&a.product_of_basis(i1, i2), &b.product_of_basis(j1, j2));
                }
            }
        }
    }
    let labels = (0..d)
        .map(|k| format!("{}(x){}", a.labels[k / m], b.labels[k % m]))
        .collect();
    let mut idems = Vec::new();
    let mut vlabels = Vec::new();
    for (e, el) in a.idempotents.iter().zip(&a.vertex_labels) {
        for (f, fl) in b.idempotents.iter().zip(&b.vertex_labels) {
            idems.push(pair(e, f));
            vlabels.push(format!("{el},{fl}"));
        }
    }
    Algebra::from_structure_constants(field, labels, &products, pair(&a.unit, &b.unit))?
        .with_seed(a.seed)
        .with_idempotents(idems, vlabels)
}

/// The semisimple algebra `k × k × ... × k` (`n` factors) with its coordinate
/// idempotents; handy in tests.
pub fn split_semisimple(field: FieldSpec, n: usize) -> Result<Algebra> {
    let products: Vec<Vec<Element>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut v = zero_vec(field, n);
                    if i == j {
                        v[i] = field.one();
                    }
                    v
                })
                .collect()
        })
        .collect();
    let unit = vec![field.one(); n];
    let labels: Vec<String> = (0..n).map(|i| format!("e{}", i + 1)).collect();
    let idems = (0..n)
        .map(|i| crate::matrix::unit_vec(field, n, i))
        .collect();
    Algebra::from_structure_constants(field, labels.clone(), &products, unit)?
        .with_idempotents(idems, (1..=n).map(|i| format!("{i}")).collect())
}

/// The full matrix algebra `M_n(k)` on the basis `E_ij` (row-major), with
/// the diagonal idempotents attached.
pub fn matrix_algebra(field: FieldSpec, n: usize) -> Result<Algebra> {
    let d = n * n;
    let idx = |i: usize, j: usize| i * n + j;
    let mut products = vec![vec![zero_vec(field, d); d]; d];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                products[idx(i, j)][idx(j, l)][idx(i, l)] = field.one();
            }
        }
    }
    let mut unit = zero_vec(field, d);
    for i in 0..n {
        unit[idx(i, i)] = field.one();
    }
    let labels = (0..d)
        .map(|k| format!("E{}{}", k / n + 1, k % n + 1))
        .collect();
    let idems = (0..n)
        .map(|i| crate::matrix::unit_vec(field, d, idx(i, i)))
        .collect();
    Algebra::from_structure_constants(field, labels, &products, unit)?
        .with_idempotents(idems, (1..=n).map(|i| format!("{i}")).collect())
}
