//! Bound quiver algebras `kQ/I` for homogeneous relations.
//!
//! Paths are stored as arrow sequences in traversal order; the algebra
//! product composes right to left, so for arrows `a: 1→2` and `b: 2→3` the
//! path "a then b" is the element `b·a`, labelled `b*a`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{is_zero_vec, rref_rows, unit_vec, zero_vec, Matrix, Span};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// A linear combination of parallel paths (arrow indices, traversal order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    pub nilpotency_bound: usize,
}

pub const DEFAULT_NILPOTENCY_BOUND: usize = 20;

impl QuiverPresentation {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Self {
        QuiverPresentation {
            vertices,
            arrows,
            relations: Vec::new(),
            nilpotency_bound: DEFAULT_NILPOTENCY_BOUND,
        }
    }

    pub fn with_relations(mut self, relations: Vec<Relation>) -> Self {
        self.relations = relations;
        self
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Number of arrows from `source` to `target`.
    pub fn arrow_count(&self, source: usize, target: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| a.source == source && a.target == target)
            .count()
    }

    fn path_endpoints(&self, path: &[usize]) -> Result<(usize, usize)> {
        let (first, last) = match (path.first(), path.last()) {
            (Some(f), Some(l)) => (*f, *l),
            _ => return Err(Error::Input("empty path in relation".into())),
        };
        for &a in path {
            if a >= self.arrows.len() {
                return Err(Error::Input(format!("unknown arrow index {a}")));
            }
        }
        for w in path.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return Err(Error::Input(format!(
                    "arrows {} and {} do not compose",
                    self.arrows[w[0]].label, self.arrows[w[1]].label
                )));
            }
        }
        Ok((self.arrows[first].source, self.arrows[last].target))
    }
}

/// A basis path: `arrows` empty means the trivial path at `source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisPath {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

/// `kQ/I` together with the path basis it was built on.
#[derive(Clone, Debug)]
pub struct BoundQuiverAlgebra {
    pub quiver: QuiverPresentation,
    pub algebra: Arc<Algebra>,
    pub basis_paths: Vec<BasisPath>,
}

struct Degree {
    index: BTreeMap<Vec<usize>, usize>,
    // normal form of each path in terms of global basis indices
    normal: Vec<Vec<(usize, Scalar)>>,
}

impl BoundQuiverAlgebra {
    /// Builds `kQ/I`. The basis consists of the trivial paths in vertex
    /// order followed by residues of paths ordered by length, then
    /// lexicographically by arrow index.
    pub fn from_bound_quiver(field: FieldSpec, q: QuiverPresentation) -> Result<Self> {
        let nv = q.vertices.len();
        if nv == 0 {
            return Err(Error::Input("quiver has no vertices".into()));
        }
        for a in &q.arrows {
            if a.source >= nv || a.target >= nv {
                return Err(Error::Input(format!(
                    "arrow {} has an unknown endpoint",
                    a.label
                )));
            }
        }
        let mut rel_by_degree: BTreeMap<usize, Vec<&Relation>> = BTreeMap::new();
        for r in &q.relations {
            let mut ends = None;
            let mut len = None;
            for (_, p) in &r.terms {
                let e = q.path_endpoints(p)?;
                if p.len() < 2 {
                    return Err(Error::Input(
                        "relations must involve paths of length at least 2".into(),
                    ));
                }
                if *ends.get_or_insert(e) != e {
                    return Err(Error::Input("relation terms are not parallel paths".into()));
                }
                if *len.get_or_insert(p.len()) != p.len() {
                    return Err(Error::Unsupported(
                        "relations must be homogeneous (all terms of equal length)".into(),
                    ));
                }
            }
            if let Some(l) = len {
                rel_by_degree.entry(l).or_default().push(r);
            }
        }

        let mut basis_paths: Vec<BasisPath> = (0..nv)
            .map(|v| BasisPath {
                source: v,
                target: v,
                arrows: Vec::new(),
            })
            .collect();
        let mut degrees: Vec<Degree> = Vec::new();
        let mut prev_paths: Vec<Vec<usize>> = vec![Vec::new()];
        let mut prev_ideal: Vec<Vec<Scalar>> = Vec::new();
        let mut length = 1;
        loop {
            let paths: Vec<Vec<usize>> = if length == 1 {
                (0..q.arrows.len()).map(|a| vec![a]).collect()
            } else {
                let mut out = Vec::new();
                for p in &prev_paths {
                    let end = q.arrows[*p.last().expect("nonempty")].target;
                    for (a, arrow) in q.arrows.iter().enumerate() {
                        if arrow.source == end {
                            let mut np = p.clone();
                            np.push(a);
                            out.push(np);
                        }
                    }
                }
                out
            };
            if paths.is_empty() {
                break;
            }
            let index: BTreeMap<Vec<usize>, usize> = paths
                .iter()
                .enumerate()
                .map(|(i, p)| (p.clone(), i))
                .collect();
            let np = paths.len();
            let mut gens: Vec<Vec<Scalar>> = Vec::new();
            if let Some(rs) = rel_by_degree.get(&length) {
                for r in rs {
                    let mut v = zero_vec(field, np);
                    for (c, p) in &r.terms {
                        v[index[p]] += c;
                    }
                    gens.push(v);
                }
            }
            for row in &prev_ideal {
                for (a, arrow) in q.arrows.iter().enumerate() {
                    let mut right = zero_vec(field, np);
                    let mut left = zero_vec(field, np);
                    for (i, c) in row.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let p = &prev_paths[i];
                        let (s, t) = (
                            q.arrows[p[0]].source,
                            q.arrows[*p.last().expect("nonempty")].target,
                        );
                        if t == arrow.source {
                            let mut ext = p.clone();
                            ext.push(a);
                            right[index[&ext]] += c;
                        }
                        if arrow.target == s {
                            let mut ext = vec![a];
                            ext.extend_from_slice(p);
                            left[index[&ext]] += c;
                        }
                    }
                    for v in [right, left] {
                        if !is_zero_vec(&v) {
                            gens.push(v);
                        }
                    }
                }
            }
            // Eliminate with the largest paths first so that the standard
            // (non-pivot) paths are the lexicographically smallest ones.
            let mut permuted: Vec<Vec<Scalar>> = gens
                .iter()
                .map(|g| g.iter().rev().cloned().collect())
                .collect();
            let pivots_rev = rref_rows(&mut permuted, np);
            let pivots: Vec<usize> = pivots_rev.iter().map(|&c| np - 1 - c).collect();
            let ideal: Vec<Vec<Scalar>> = permuted
                .iter()
                .map(|r| r.iter().rev().cloned().collect())
                .collect();
            let mut global = vec![usize::MAX; np];
            for i in 0..np {
                if !pivots.contains(&i) {
                    global[i] = basis_paths.len();
                    let p = &paths[i];
                    basis_paths.push(BasisPath {
                        source: q.arrows[p[0]].source,
                        target: q.arrows[*p.last().expect("nonempty")].target,
                        arrows: p.clone(),
                    });
                }
            }
            let mut normal = vec![Vec::new(); np];
            for i in 0..np {
                if global[i] != usize::MAX {
                    normal[i] = vec![(i, field.one())];
                }
            }
            for (row, &p) in ideal.iter().zip(&pivots) {
                normal[p] = (0..np)
                    .filter(|&j| global[j] != usize::MAX && !row[j].is_zero())
                    .map(|j| (j, -&row[j]))
                    .collect();
            }
            for nf in normal.iter_mut() {
                for (j, _) in nf.iter_mut() {
                    *j = global[*j];
                }
            }
            let survivors = global.iter().filter(|&&g| g != usize::MAX).count();
            degrees.push(Degree { index, normal });
            if survivors == 0 {
                break;
            }
            if length >= q.nilpotency_bound {
                return Err(Error::NotAdmissible(format!(
                    "paths of length {length} survive modulo the relations (nilpotency bound {})",
                    q.nilpotency_bound
                )));
            }
            prev_paths = paths;
            prev_ideal = ideal;
            length += 1;
        }

        let n = basis_paths.len();
        let normal_form = |seq: &[usize]| -> Element {
            let mut v = zero_vec(field, n);
            if let Some(d) = degrees.get(seq.len() - 1) {
                if let Some(&i) = d.index.get(seq) {
                    for (g, c) in &d.normal[i] {
                        v[*g] += c;
                    }
                }
            }
            v
        };
        let mut products = vec![vec![zero_vec(field, n); n]; n];
        for (i, pi) in basis_paths.iter().enumerate() {
            for (j, pj) in basis_paths.iter().enumerate() {
                if pj.target != pi.source {
                    continue;
                }
                products[i][j] = if pi.arrows.is_empty() {
                    unit_vec(field, n, j)
                } else if pj.arrows.is_empty() {
                    unit_vec(field, n, i)
                } else {
                    let mut seq = pj.arrows.clone();
                    seq.extend_from_slice(&pi.arrows);
                    normal_form(&seq)
                };
            }
        }
        let mut unit = zero_vec(field, n);
        for v in 0..nv {
            unit[v] = field.one();
        }
        let labels: Vec<String> = basis_paths
            .iter()
            .map(|p| {
                if p.arrows.is_empty() {
                    format!("e{}", q.vertices[p.source])
                } else {
                    let parts: Vec<&str> = p
                        .arrows
                        .iter()
                        .rev()
                        .map(|&a| q.arrows[a].label.as_str())
                        .collect();
                    parts.join("*")
                }
            })
            .collect();
        let idems = (0..nv).map(|v| unit_vec(field, n, v)).collect();
        let algebra = Algebra::from_structure_constants(field, labels, &products, unit)?
            .with_idempotents(idems, q.vertices.clone())?;
        Ok(BoundQuiverAlgebra {
            quiver: q,
            algebra: Arc::new(algebra),
            basis_paths,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    /// Basis index of an arrow (arrows are never killed by relations).
    pub fn arrow_element(&self, a: usize) -> Element {
        let idx = self
            .basis_paths
            .iter()
            .position(|p| p.arrows.len() == 1 && p.arrows[0] == a)
            .expect("arrows are basis elements");
        self.algebra.basis_element(idx)
    }

    /// The element represented by a path (traversal order).
    pub fn path_element(&self, source: usize, arrows: &[usize]) -> Element {
        let mut acc = self.algebra.idempotent(source).clone();
        for &a in arrows {
            acc = self.algebra.mul(&self.arrow_element(a), &acc);
        }
        acc
    }
}

/// The Gabriel quiver: one vertex per idempotent, `dim e_j (rad/rad²) e_i`
/// arrows `i → j`. Relations are not recovered.
pub fn gabriel_quiver(a: &Algebra) -> Result<QuiverPresentation> {
    if !a.is_split_basic() {
        return Err(Error::NotBasic(
            "the Gabriel quiver needs a split basic algebra".into(),
        ));
    }
    let n = a.dim();
    let rad = a.radical().to_vec();
    let rad2 = a.radical_square();
    let mut arrows = Vec::new();
    for i in 0..a.vertex_count() {
        for j in 0..a.vertex_count() {
            let proj = a
                .left_mul_matrix(a.idempotent(j))
                .mul(&a.right_mul_matrix(a.idempotent(i)));
            let d1 = Span::from_vectors(
                a.field(),
                n,
                &rad.iter().map(|x| proj.mul_vec(x)).collect::<Vec<_>>(),
            )
            .rank();
            let d2 = Span::from_vectors(
                a.field(),
                n,
                &rad2.iter().map(|x| proj.mul_vec(x)).collect::<Vec<_>>(),
            )
            .rank();
            for k in 0..(d1 - d2) {
                arrows.push(Arrow {
                    label: format!("{}->{}#{}", a.vertex_labels()[i], a.vertex_labels()[j], k),
                    source: i,
                    target: j,
                });
            }
        }
    }
    Ok(QuiverPresentation::new(a.vertex_labels().to_vec(), arrows))
}

/// The automorphism of `kQ/I` induced by a vertex permutation and arrow
/// images (each arrow sent to a combination of arrows between the image
/// vertices). Columns of the result are images of the path basis.
pub fn automorphism_from_quiver_map(
    bq: &BoundQuiverAlgebra,
    vertex_map: &[usize],
    arrow_images: &[Vec<(Scalar, usize)>],
) -> Result<Matrix> {
    let q = &bq.quiver;
    let a = &bq.algebra;
    let nv = q.vertices.len();
    if vertex_map.len() != nv {
        return Err(Error::Automorphism(
            "vertex map has the wrong length".into(),
        ));
    }
    let mut seen = vec![false; nv];
    for &v in vertex_map {
        if v >= nv || core::mem::replace(&mut seen[v], true) {
            return Err(Error::Automorphism(
                "vertex map is not a permutation".into(),
            ));
        }
    }
    if arrow_images.len() != q.arrows.len() {
        return Err(Error::Automorphism("one image per arrow required".into()));
    }
    let mut images: Vec<Element> = Vec::with_capacity(q.arrows.len());
    for (arrow, img) in q.arrows.iter().zip(arrow_images) {
        let mut v = a.zero_element();
        for (c, b) in img {
            let target = q
                .arrows
                .get(*b)
                .ok_or_else(|| Error::Automorphism(format!("unknown arrow index {b}")))?;
            if target.source != vertex_map[arrow.source]
                || target.target != vertex_map[arrow.target]
            {
                return Err(Error::Automorphism(format!(
                    "image of {} is not parallel to the mapped endpoints",
                    arrow.label
                )));
            }
            let e = bq.arrow_element(*b);
            for (x, y) in v.iter_mut().zip(&e) {
                *x += &(c * y);
            }
        }
        images.push(v);
    }
    let map_path = |source: usize, arrows: &[usize]| -> Element {
        let mut acc = a.idempotent(vertex_map[source]).clone();
        for &x in arrows {
            acc = a.mul(&images[x], &acc);
        }
        acc
    };
    for (k, r) in q.relations.iter().enumerate() {
        let mut total = a.zero_element();
        for (c, p) in &r.terms {
            let s = q.arrows[p[0]].source;
            let img = map_path(s, p);
            for (x, y) in total.iter_mut().zip(&img) {
                *x += &(c * y);
            }
        }
        if !is_zero_vec(&total) {
            return Err(Error::Automorphism(format!(
                "relation {k} is not preserved"
            )));
        }
    }
    let columns: Vec<Element> = bq
        .basis_paths
        .iter()
        .map(|p| map_path(p.source, &p.arrows))
        .collect();
    let phi = Matrix::from_columns(a.field(), a.dim(), &columns);
    a.check_automorphism(&phi)?;
    Ok(phi)
}
