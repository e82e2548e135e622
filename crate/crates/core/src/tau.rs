//! Minimal projective presentations, the transpose, `τ = D Tr`, and the
//! τ-rigidity and support τ-tilting predicates.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::matrix::{Matrix, Span};
use crate::mutation::minimal_left_approximation;
use crate::rep::{
    decompose, direct_sum, hom_dim, hom_space, is_isomorphic, projective_cover_sum, IsoRegistry,
    ModuleMap, ProjectiveSum, Representation,
};

/// `P1 --d--> P0 --cover--> M → 0`, minimal.
#[derive(Clone, Debug)]
pub struct ProjPresentation {
    pub p1: ProjectiveSum,
    pub p0: ProjectiveSum,
    pub d: ModuleMap,
    pub cover: ModuleMap,
}

impl ProjPresentation {
    pub fn target(&self) -> &Representation {
        &self.cover.target
    }
}

pub fn minimal_presentation(m: &Representation) -> ProjPresentation {
    let (p0, cover) = projective_cover_sum(m);
    let (_, incl) = cover.kernel();
    let (p1, cover1) = projective_cover_sum(&incl.source);
    let d = incl.compose(&cover1);
    ProjPresentation { p1, p0, d, cover }
}

/// `Tr M` as a module over the opposite algebra.
pub fn transpose(m: &Representation) -> Representation {
    let a = m.algebra();
    let op = Arc::new(a.opposite());
    transpose_over(m, &op)
}

fn transpose_over(m: &Representation, op: &Arc<Algebra>) -> Representation {
    let a = m.algebra();
    let field = a.field();
    let pres = minimal_presentation(m);
    // Hom(A e_v, A) ≅ e_v A = A^op e_v; Hom(d, A) has components
    // z ↦ y_ts z for d(e_{b_s}) = (y_ts)_t.
    let q0 = ProjectiveSum::new(op, pres.p0.vertices.clone());
    let q1 = ProjectiveSum::new(op, pres.p1.vertices.clone());
    let mut matrix = Matrix::zeros(field, q1.module.dim(), q0.module.dim());
    for s in 0..pres.p1.vertices.len() {
        let image = pres.d.matrix.mul_vec(&pres.p1.generator(s));
        let span = Span::from_vectors(field, a.dim(), &q1.bases[s]);
        for t in 0..pres.p0.vertices.len() {
            let y = pres.p0.component(t, &image);
            if y.iter().all(|x| x.is_zero()) {
                continue;
            }
            let cols: Vec<Vec<_>> = q0.bases[t]
                .iter()
                .map(|z| span.coordinates(&a.mul(&y, z)).expect("y z lies in e_b A"))
                .collect();
            let block = Matrix::from_columns(field, q1.bases[s].len(), &cols);
            matrix = matrix.add(
                &q1.injections[s]
                    .mul(&block)
                    .mul(&q0.injections[t].transpose()),
            );
        }
    }
    let map = ModuleMap::unchecked(q0.module.clone(), q1.module.clone(), matrix);
    debug_assert!(
        ModuleMap::new(map.source.clone(), map.target.clone(), map.matrix.clone()).is_ok()
    );
    map.cokernel().0
}

/// `D N` for a module over the opposite algebra, as a module over `algebra`.
pub fn dual(n: &Representation, algebra: &Arc<Algebra>) -> Representation {
    n.dual_over(algebra.clone())
}

/// The Auslander–Reiten translate `D Tr M`.
pub fn tau(m: &Representation) -> Representation {
    let a = m.algebra().clone();
    dual(&transpose(m), &a)
}

pub fn is_tau_rigid(m: &Representation) -> bool {
    m.is_zero() || hom_dim(m, &tau(m)) == 0
}

/// `X` τ-rigid and `Hom(A e_i, X) = e_i X = 0` for every `i` in `p`.
pub fn is_tau_rigid_pair(x: &Representation, p: &[usize]) -> bool {
    p.iter().all(|&i| x.block_dim(i) == 0) && is_tau_rigid(x)
}

/// A candidate support τ-tilting pair `(T, P)`: indecomposable summands of
/// the module part and vertex indices of the projective part.
#[derive(Clone, Debug)]
pub struct SttPair {
    pub algebra: Arc<Algebra>,
    pub t_parts: Vec<Representation>,
    pub p_parts: Vec<usize>,
}

impl SttPair {
    pub fn new(
        algebra: Arc<Algebra>,
        t_parts: Vec<Representation>,
        mut p_parts: Vec<usize>,
    ) -> Self {
        p_parts.sort_unstable();
        SttPair {
            algebra,
            t_parts,
            p_parts,
        }
    }

    /// `(A, 0)` with the indecomposable projectives as summands.
    pub fn regular(algebra: &Arc<Algebra>) -> Self {
        let t = algebra
            .iso_class_representatives()
            .into_iter()
            .map(|i| crate::rep::projective(algebra, i))
            .collect();
        Self::new(algebra.clone(), t, Vec::new())
    }

    /// `(0, A)`.
    pub fn shifted_regular(algebra: &Arc<Algebra>) -> Self {
        Self::new(
            algebra.clone(),
            Vec::new(),
            algebra.iso_class_representatives(),
        )
    }

    pub fn module(&self) -> Representation {
        direct_sum(&self.algebra, &self.t_parts).0
    }

    pub fn size(&self) -> usize {
        self.t_parts.len() + self.p_parts.len()
    }
}

/// Basic + τ-rigid pair + `|T| + |P| = |A|`.
pub fn validate_stt_pair(pair: &SttPair) -> Result<bool> {
    let a = &pair.algebra;
    let reps = a.iso_class_representatives();
    if pair.p_parts.iter().any(|p| !reps.contains(p)) {
        return Ok(false);
    }
    if pair.p_parts.windows(2).any(|w| w[0] == w[1]) {
        return Ok(false);
    }
    let mut registry = IsoRegistry::new();
    for t in &pair.t_parts {
        if t.is_zero() || decompose(t)?.len() != 1 {
            return Ok(false);
        }
        let before = registry.len();
        registry.register(t)?;
        if registry.len() == before {
            return Ok(false);
        }
    }
    if pair.size() != a.simple_count() {
        return Ok(false);
    }
    Ok(is_tau_rigid_pair(&pair.module(), &pair.p_parts))
}

/// Builds `A → T' → T'' → 0` with the first map a minimal left
/// `add T`-approximation and checks `T'' ∈ add T` (`T'` is in `add T` by
/// construction). Requires the pair to be τ-rigid.
pub fn check_via_approximation(pair: &SttPair) -> Result<bool> {
    let a = &pair.algebra;
    if !is_tau_rigid_pair(&pair.module(), &pair.p_parts) {
        return Ok(false);
    }
    let regular = crate::rep::regular(a);
    let approx = minimal_left_approximation(&regular, &pair.t_parts)?;
    let (coker, _) = approx.map.cokernel();
    for s in decompose(&coker)? {
        let mut found = false;
        for t in &pair.t_parts {
            if is_isomorphic(&s.module, t)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of pairwise non-isomorphic indecomposable summands.
pub fn count_summand_classes(m: &Representation) -> Result<usize> {
    let mut registry = IsoRegistry::new();
    for s in decompose(m)? {
        registry.register(&s.module)?;
    }
    Ok(registry.len())
}

/// Projective dimension at most one.
pub fn has_pd_at_most_one(m: &Representation) -> bool {
    let pres = minimal_presentation(m);
    let (_, incl) = pres.cover.kernel();
    let (_, cover) = projective_cover_sum(&incl.source);
    cover.is_isomorphism()
}

/// `dim Ext¹(M, N)` for `M` of projective dimension at most one, as the
/// cokernel of `Hom(P0, N) → Hom(ΩM, N)`.
pub fn ext1_dim(m: &Representation, n: &Representation) -> usize {
    let pres = minimal_presentation(m);
    let (omega, incl) = pres.cover.kernel();
    let total = hom_dim(&omega, n);
    let mut span = Span::new(m.field(), n.dim() * omega.dim());
    for h in hom_space(&pres.p0.module, n) {
        span.insert(&h.matrix.mul(&incl.matrix).vectorize());
    }
    total - span.rank()
}

/// `pd T ≤ 1`, `Ext¹(T,T) = 0` and `|T| = |A|`.
pub fn is_classical_tilting(t: &Representation) -> Result<bool> {
    if !has_pd_at_most_one(t) {
        return Ok(false);
    }
    if ext1_dim(t, t) != 0 {
        return Ok(false);
    }
    Ok(count_summand_classes(t)? == t.algebra().simple_count())
}

/// All indecomposable projectives `A e_i` (representative vertices) with
/// `Hom(A e_i, T) = 0`.
pub fn projective_complement(algebra: &Algebra, t: &Representation) -> Vec<usize> {
    algebra
        .iso_class_representatives()
        .into_iter()
        .filter(|&i| t.block_dim(i) == 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::fixtures;
    use crate::matrix::unit_vec;
    use crate::rep::{projective, simple, DimVector};
    use alloc::vec;

    #[test]
    fn presentations() {
        let a = fixtures::a2(FieldSpec::Rationals).algebra;
        let p = minimal_presentation(&projective(&a, 0));
        assert!(p.p1.vertices.is_empty());
        let p = minimal_presentation(&simple(&a, 0));
        assert_eq!(p.p0.vertices, [0]);
        assert_eq!(p.p1.vertices, [1]);
        let b = fixtures::fork(FieldSpec::Rationals).algebra;
        let q = projective(&b, 0).quotient(&[unit_vec(b.field(), 3, 1)]).0;
        let p = minimal_presentation(&q);
        assert_eq!(p.p0.vertices, [0]);
        assert_eq!(p.p1.vertices, [1]);
        assert!(p.d.is_injective());
    }

    #[test]
    fn transpose_of_simple_in_a2() {
        let a = fixtures::a2(FieldSpec::Rationals).algebra;
        let tr = transpose(&simple(&a, 0));
        assert_eq!(tr.dim_vector(), DimVector(vec![0, 1]));
        assert!(transpose(&projective(&a, 0)).is_zero());
    }

    #[test]
    fn tau_examples() {
        let a = fixtures::a2(FieldSpec::Rationals).algebra;
        assert!(is_isomorphic(&tau(&simple(&a, 0)), &simple(&a, 1)).unwrap());
        assert!(tau(&projective(&a, 0)).is_zero());
        let b = fixtures::fork(FieldSpec::Rationals).algebra;
        let q = projective(&b, 0).quotient(&[unit_vec(b.field(), 3, 1)]).0;
        assert_eq!(q.radical_layers_label(), "1/2'");
        assert!(is_isomorphic(&tau(&q), &simple(&b, 1)).unwrap());
    }

    #[test]
    fn rigidity() {
        let a = fixtures::a2(FieldSpec::Rationals).algebra;
        assert!(is_tau_rigid(&simple(&a, 0)));
        let s = direct_sum(&a, &[simple(&a, 0), simple(&a, 1)]).0;
        assert!(!is_tau_rigid(&s));
        assert!(!is_tau_rigid_pair(&simple(&a, 0), &[0]));
        let b = fixtures::fork(FieldSpec::Rationals).algebra;
        let t = direct_sum(&b, &[simple(&b, 1), simple(&b, 2)]).0;
        assert!(is_tau_rigid(&t));
        assert!(is_tau_rigid_pair(&t, &[0]));
    }

    #[test]
    fn pair_validation() {
        let b = fixtures::fork(FieldSpec::Rationals).algebra;
        assert!(validate_stt_pair(&SttPair::regular(&b)).unwrap());
        assert!(validate_stt_pair(&SttPair::shifted_regular(&b)).unwrap());
        let p = SttPair::new(b.clone(), vec![simple(&b, 0)], vec![1, 2]);
        assert!(validate_stt_pair(&p).unwrap());
        let dup = SttPair::new(b.clone(), vec![simple(&b, 1), simple(&b, 1)], vec![0]);
        assert!(!validate_stt_pair(&dup).unwrap());
    }

    #[test]
    fn approximation_check() {
        let a = fixtures::a2(FieldSpec::Rationals).algebra;
        assert!(check_via_approximation(&SttPair::regular(&a)).unwrap());
        let p = SttPair::new(a.clone(), vec![projective(&a, 0), simple(&a, 0)], vec![]);
        assert!(check_via_approximation(&p).unwrap());
        let bad = SttPair::new(a.clone(), vec![simple(&a, 0), simple(&a, 1)], vec![]);
        assert!(!check_via_approximation(&bad).unwrap());
    }

    #[test]
    fn classical_tilting() {
        let a = fixtures::a2(FieldSpec::Rationals).algebra;
        assert!(is_classical_tilting(&crate::rep::regular(&a)).unwrap());
        // the APR tilting module of A2
        let t = direct_sum(&a, &[simple(&a, 0), projective(&a, 0)]).0;
        assert!(is_classical_tilting(&t).unwrap());
        assert!(t.is_faithful());
        let b = fixtures::fork(FieldSpec::Rationals).algebra;
        let p1 = projective(&b, 0);
        let q12 = p1.quotient(&[unit_vec(b.field(), 3, 2)]).0;
        let q13 = p1.quotient(&[unit_vec(b.field(), 3, 1)]).0;
        let t = direct_sum(&b, &[simple(&b, 0), q13, q12]).0;
        assert!(is_classical_tilting(&t).unwrap());
        let s = direct_sum(&b, &[simple(&b, 1), simple(&b, 2)]).0;
        assert!(!is_classical_tilting(&s).unwrap());
    }
}
