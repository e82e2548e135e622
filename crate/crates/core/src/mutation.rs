//! Left approximations, left mutation, the exchange quiver of support
//! τ-tilting pairs, and two-term complexes of projectives.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Span};
use crate::rep::{
    decompose, direct_sum, fac_contains, hom_space, radical_endomorphisms, IsoRegistry, ModuleMap,
    ProjectiveSum, Representation,
};
use crate::tau::{
    check_via_approximation, is_classical_tilting, minimal_presentation, projective_complement,
    validate_stt_pair, SttPair,
};

pub const DEFAULT_MAX_VERTICES: usize = 10_000;

/// `X → U'` with `U'` a sum of copies of the given indecomposables;
/// `copies[k]` names the part used by the `k`-th summand of `U'`.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub map: ModuleMap,
    pub copies: Vec<usize>,
}

/// Minimal left `add(⊕ parts)`-approximation of `x`. The parts must be
/// pairwise non-isomorphic indecomposables.
///
/// The copies of `U_a` correspond to a basis of `Hom(X, U_a)` modulo the
/// maps factoring through radical morphisms `U_b → U_a`.
pub fn minimal_left_approximation(
    x: &Representation,
    parts: &[Representation],
) -> Result<Approximation> {
    let field = x.field();
    let homs: Vec<Vec<Matrix>> = parts
        .iter()
        .map(|u| hom_space(x, u).into_iter().map(|f| f.matrix).collect())
        .collect();
    let mut images = Vec::new();
    let mut copies = Vec::new();
    for (a, ua) in parts.iter().enumerate() {
        if homs[a].is_empty() {
            continue;
        }
        let mut span = Span::new(field, ua.dim() * x.dim());
        for (b, ub) in parts.iter().enumerate() {
            let radical: Vec<Matrix> = if a == b {
                radical_endomorphisms(ua)?
            } else {
                hom_space(ub, ua).into_iter().map(|f| f.matrix).collect()
            };
            for r in &radical {
                for h in &homs[b] {
                    span.insert(&r.mul(h).vectorize());
                }
            }
        }
        for h in &homs[a] {
            if span.insert(&h.vectorize()) {
                images.push(h.clone());
                copies.push(a);
            }
        }
    }
    let targets: Vec<Representation> = copies.iter().map(|&a| parts[a].clone()).collect();
    let (sum, inj) = direct_sum(x.algebra(), &targets);
    let mut matrix = Matrix::zeros(field, sum.dim(), x.dim());
    for (h, i) in images.iter().zip(&inj) {
        matrix = matrix.add(&i.mul(h));
    }
    Ok(Approximation {
        map: ModuleMap::unchecked(x.clone(), sum, matrix),
        copies,
    })
}

/// Adds the indecomposable summands of `m` not already present.
fn extend_basic(parts: &mut Vec<Representation>, m: &Representation) -> Result<()> {
    for s in decompose(m)? {
        let mut present = false;
        for p in parts.iter() {
            if crate::rep::is_isomorphic(p, &s.module)? {
                present = true;
                break;
            }
        }
        if !present {
            parts.push(s.module);
        }
    }
    Ok(())
}

/// Left mutation at the `x`-th module summand, or `None` when that summand
/// lies in `Fac` of the others (the mutation would go upward).
pub fn left_mutation(pair: &SttPair, x: usize) -> Result<Option<SttPair>> {
    let a = &pair.algebra;
    let target = pair
        .t_parts
        .get(x)
        .ok_or_else(|| Error::Input(format!("no module summand with index {x}")))?;
    let rest: Vec<Representation> = pair
        .t_parts
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != x)
        .map(|(_, t)| t.clone())
        .collect();
    let u = direct_sum(a, &rest).0;
    if fac_contains(&u, target)? {
        return Ok(None);
    }
    let approx = minimal_left_approximation(target, &rest)?;
    let (coker, _) = approx.map.cokernel();
    let mut parts = rest;
    extend_basic(&mut parts, &coker)?;
    parts.sort_by_key(Representation::dim_vector);
    let module = direct_sum(a, &parts).0;
    let p_parts = projective_complement(a, &module);
    let result = SttPair::new(a.clone(), parts, p_parts);
    if !validate_stt_pair(&result)? {
        return Err(Error::Internal(
            "left mutation produced an invalid pair".into(),
        ));
    }
    Ok(Some(result))
}

/// How a vertex sits among the support τ-tilting pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Classification {
    /// Faithful: a classical tilting module.
    Tilting,
    /// Sincere but not faithful.
    TauTilting,
    /// Nonzero projective part.
    Support,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Tilting => "tilting",
            Classification::TauTilting => "tau-tilting",
            Classification::Support => "support",
        }
    }
}

#[derive(Clone, Debug)]
pub struct VertexInfo {
    pub sincere: bool,
    pub faithful: bool,
    pub tilting: bool,
    pub classification: Classification,
    /// Radical-layer labels of the module summands.
    pub labels: Vec<alloc::string::String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExchangeArrow {
    pub from: usize,
    pub to: usize,
    /// Index of the mutated summand in the source's module part.
    pub summand: usize,
}

/// The support τ-tilting quiver, arrows pointing along left mutation.
#[derive(Clone, Debug)]
pub struct ExchangeQuiver {
    pub algebra: Arc<Algebra>,
    pub vertices: Vec<SttPair>,
    /// Registry ids of the module summands of each vertex, sorted.
    pub keys: Vec<(Vec<usize>, Vec<usize>)>,
    pub arrows: Vec<ExchangeArrow>,
    pub info: Vec<VertexInfo>,
    /// `(vertex, summand)` pairs skipped because the summand lies in `Fac`
    /// of the rest.
    pub skipped: Vec<(usize, usize)>,
    pub registry: IsoRegistry,
    pub source: usize,
    pub sink: Option<usize>,
}

impl ExchangeQuiver {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.from == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.to == v).count()
    }

    /// Vertex whose pair is equivalent to `pair`, if any.
    pub fn find(&self, pair: &SttPair) -> Result<Option<usize>> {
        let mut ids = Vec::new();
        for t in &pair.t_parts {
            match self.registry.lookup(t)? {
                Some(id) => ids.push(id),
                None => return Ok(None),
            }
        }
        ids.sort_unstable();
        let key = (ids, pair.p_parts.clone());
        Ok(self.keys.iter().position(|k| *k == key))
    }
}

fn annotate(pair: &SttPair) -> Result<VertexInfo> {
    let m = pair.module();
    let sincere = !m.is_zero() && m.is_sincere();
    let faithful = !m.is_zero() && m.is_faithful();
    let tilting = !m.is_zero() && is_classical_tilting(&m)?;
    let classification = if !pair.p_parts.is_empty() {
        Classification::Support
    } else if faithful {
        Classification::Tilting
    } else {
        Classification::TauTilting
    };
    let labels = pair
        .t_parts
        .iter()
        .map(Representation::radical_layers_label)
        .collect();
    Ok(VertexInfo {
        sincere,
        faithful,
        tilting,
        classification,
        labels,
    })
}

/// Breadth-first closure of `(A, 0)` under left mutation.
pub fn enumerate(algebra: &Arc<Algebra>, max_vertices: usize) -> Result<ExchangeQuiver> {
    if !algebra.is_split_basic() {
        return Err(Error::NotBasic(
            "enumeration needs a split basic algebra".into(),
        ));
    }
    let mut q = ExchangeQuiver {
        algebra: algebra.clone(),
        vertices: Vec::new(),
        keys: Vec::new(),
        arrows: Vec::new(),
        info: Vec::new(),
        skipped: Vec::new(),
        registry: IsoRegistry::new(),
        source: 0,
        sink: None,
    };
    let mut index: BTreeMap<(Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    let start = SttPair::regular(algebra);
    let mut add = |q: &mut ExchangeQuiver, pair: SttPair| -> Result<(usize, bool)> {
        let mut ids = Vec::new();
        for t in &pair.t_parts {
            ids.push(q.registry.register(t)?);
        }
        ids.sort_unstable();
        let key = (ids, pair.p_parts.clone());
        if let Some(&v) = index.get(&key) {
            return Ok((v, false));
        }
        if q.vertices.len() >= max_vertices {
            return Err(Error::Resource(format!(
                "more than {max_vertices} support τ-tilting pairs; the algebra is possibly τ-tilting infinite"
            )));
        }
        let v = q.vertices.len();
        index.insert(key.clone(), v);
        q.keys.push(key);
        q.info.push(annotate(&pair)?);
        q.vertices.push(pair);
        Ok((v, true))
    };
    let (s, _) = add(&mut q, start)?;
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        let pair = q.vertices[v].clone();
        for x in 0..pair.t_parts.len() {
            match left_mutation(&pair, x)? {
                None => q.skipped.push((v, x)),
                Some(next) => {
                    let (w, fresh) = add(&mut q, next)?;
                    q.arrows.push(ExchangeArrow {
                        from: v,
                        to: w,
                        summand: x,
                    });
                    if fresh {
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    q.sink = q.vertices.iter().position(|p| p.t_parts.is_empty());
    Ok(q)
}

/// Checks every vertex with the approximation criterion.
pub fn verify_by_approximation(q: &ExchangeQuiver) -> Result<bool> {
    for p in &q.vertices {
        if !check_via_approximation(p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `P1 --d--> P0`, concentrated in degrees −1 and 0.
#[derive(Clone, Debug)]
pub struct TwoTermComplex {
    pub p1: ProjectiveSum,
    pub p0: ProjectiveSum,
    pub d: ModuleMap,
}

impl TwoTermComplex {
    pub fn new(p1: ProjectiveSum, p0: ProjectiveSum, matrix: Matrix) -> Result<Self> {
        let d = ModuleMap::new(p1.module.clone(), p0.module.clone(), matrix)?;
        Ok(TwoTermComplex { p1, p0, d })
    }
}

/// `(M, P) ↦ (P1 ⊕ P --(f,0)--> P0)` for a minimal presentation `f` of `M`.
pub fn pair_to_silting(pair: &SttPair) -> TwoTermComplex {
    let a = &pair.algebra;
    let pres = minimal_presentation(&pair.module());
    let mut vertices = pres.p1.vertices.clone();
    vertices.extend_from_slice(&pair.p_parts);
    let p1 = ProjectiveSum::new(a, vertices);
    let mut back = Matrix::zeros(a.field(), pres.p1.module.dim(), p1.module.dim());
    for k in 0..pres.p1.vertices.len() {
        back = back.add(&pres.p1.injections[k].mul(&p1.injections[k].transpose()));
    }
    let matrix = pres.d.matrix.mul(&back);
    let d = ModuleMap::unchecked(p1.module.clone(), pres.p0.module.clone(), matrix);
    TwoTermComplex { p1, p0: pres.p0, d }
}

/// `H^0 = coker d`.
pub fn h0(c: &TwoTermComplex) -> Representation {
    c.d.cokernel().0
}

/// `dim Hom_K(c, c[1])`: maps `P1 → P0` modulo `h∘d + d∘h'`.
pub fn hom_k_shift(c: &TwoTermComplex) -> usize {
    let p1 = &c.p1.module;
    let p0 = &c.p0.module;
    let total = hom_space(p1, p0).len();
    if total == 0 {
        return 0;
    }
    let mut span = Span::new(p1.field(), p0.dim() * p1.dim());
    for h in hom_space(p0, p0) {
        span.insert(&h.matrix.mul(&c.d.matrix).vectorize());
    }
    for h in hom_space(p1, p1) {
        span.insert(&c.d.matrix.mul(&h.matrix).vectorize());
    }
    total - span.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::fixtures;
    use crate::rep::{is_isomorphic, projective, simple, DimVector};
    use alloc::vec;

    #[test]
    fn approximations_in_a2() {
        let a = fixtures::a2(FieldSpec::Rationals).algebra;
        let p1 = projective(&a, 0);
        let p2 = projective(&a, 1);
        let f = minimal_left_approximation(&p2, &[p1.clone()]).unwrap();
        assert_eq!(f.copies, [0]);
        assert!(f.map.is_injective());
        let f = minimal_left_approximation(&p1, &[simple(&a, 1)]).unwrap();
        assert!(f.map.target.is_zero());
        let f = minimal_left_approximation(&p1, &[p1.clone()]).unwrap();
        assert!(f.map.is_isomorphism());
    }

    #[test]
    fn mutations_in_a2() {
        let a = fixtures::a2(FieldSpec::Rationals).algebra;
        let start = SttPair::regular(&a);
        // summand order is P1, P2
        let m = left_mutation(&start, 1).unwrap().unwrap();
        assert!(m.p_parts.is_empty());
        assert!(m
            .t_parts
            .iter()
            .any(|t| is_isomorphic(t, &simple(&a, 0)).unwrap()));
        let at_p1 = m
            .t_parts
            .iter()
            .position(|t| t.dim_vector() == DimVector(vec![1, 1]))
            .unwrap();
        let m2 = left_mutation(&m, at_p1).unwrap().unwrap();
        assert_eq!(m2.p_parts, [1]);
        assert!(is_isomorphic(&m2.t_parts[0], &simple(&a, 0)).unwrap());
        // P2 lies in Fac of nothing, P1 is not in Fac P2
        assert!(left_mutation(&start, 0).unwrap().is_some());
    }

    #[test]
    fn fork_mutation_at_top_projective() {
        let b = fixtures::fork(FieldSpec::Rationals).algebra;
        let m = left_mutation(&SttPair::regular(&b), 0).unwrap().unwrap();
        assert_eq!(m.p_parts, [0]);
        assert_eq!(m.t_parts.len(), 2);
    }

    #[test]
    fn enumeration_counts() {
        let a = fixtures::a2(FieldSpec::Rationals).algebra;
        let q = enumerate(&a, DEFAULT_MAX_VERTICES).unwrap();
        assert_eq!(q.len(), 5);
        assert!(q.sink.is_some());
        let b = fixtures::fork(FieldSpec::Rationals).algebra;
        let q = enumerate(&b, DEFAULT_MAX_VERTICES).unwrap();
        assert_eq!(q.len(), 14);
        for v in 0..q.len() {
            assert_eq!(q.in_degree(v) + q.out_degree(v), 3);
        }
        assert!(matches!(enumerate(&b, 3), Err(Error::Resource(_))));
    }

    #[test]
    fn silting_roundtrip() {
        let a = fixtures::a2(FieldSpec::Rationals).algebra;
        let q = enumerate(&a, DEFAULT_MAX_VERTICES).unwrap();
        for p in &q.vertices {
            let c = pair_to_silting(p);
            assert_eq!(hom_k_shift(&c), 0);
            let h = h0(&c);
            assert!(is_isomorphic(&h, &p.module()).unwrap());
        }
        let s1p2 = SttPair::new(a.clone(), vec![simple(&a, 0)], vec![1]);
        let c = pair_to_silting(&s1p2);
        assert_eq!(c.p1.vertices, [1, 1]);
        assert_eq!(c.p0.vertices, [0]);
    }

    #[test]
    fn zero_differential_is_not_presilting() {
        let a = fixtures::a2(FieldSpec::Rationals).algebra;
        let p = ProjectiveSum::new(&a, vec![0]);
        let z = Matrix::zeros(a.field(), 2, 2);
        let c = TwoTermComplex::new(p.clone(), p, z).unwrap();
        assert_eq!(hom_k_shift(&c), 1);
    }
}
