//! Skew group algebras `ΛG`, induction and restriction, characters, and the
//! comparison of stable pairs on both sides.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{lift_primitive_idempotents, Algebra, Element};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::group::{stable_filter, twist_module, FiniteGroup, GroupAction, StableFilter};
use crate::matrix::{zero_vec, Matrix, Span};
use crate::mutation::{enumerate, ExchangeQuiver};
use crate::rep::{
    decompose, direct_sum, find_isomorphism, is_isomorphic, projective, IsoRegistry, Representation,
};
use crate::tau::SttPair;

/// `B = eΛGe` for `e` the sum of one primitive idempotent per iso class.
#[derive(Clone, Debug)]
pub struct BasicReduction {
    pub algebra: Arc<Algebra>,
    /// Carrier vertex behind each vertex of `B`.
    pub vertices: Vec<usize>,
    /// Carrier coordinates of the basis of `B`.
    pub embedding: Vec<Element>,
    pub idempotent: Element,
}

/// `ΛG` on the basis `(b_k, g)`, index `k + dim Λ · g`.
#[derive(Clone, Debug)]
pub struct SkewAlgebra {
    pub action: GroupAction,
    pub carrier: Arc<Algebra>,
    /// Base vertex whose idempotent `(e_v, 1)` each carrier vertex refines.
    pub parents: Vec<usize>,
    pub basic: BasicReduction,
}

impl SkewAlgebra {
    pub fn new(action: &GroupAction) -> Result<Self> {
        let base = &action.algebra;
        let group = &action.group;
        let field = base.field();
        let order = group.order();
        if field.characteristic() != 0 && (order as u64) % field.characteristic() == 0 {
            return Err(Error::GroupOrderNotInvertible(order));
        }
        let n = base.dim();
        let d = n * order;
        let idx = |k: usize, g: usize| k + n * g;
        let mut products = vec![vec![Vec::new(); d]; d];
        for g in 0..order {
            for h in 0..order {
                let gh = group.mul(g, h);
                for i in 0..n {
                    for j in 0..n {
                        let moved = action.apply(g, &base.basis_element(j));
                        let prod = base.mul(&base.basis_element(i), &moved);
                        let mut v = zero_vec(field, d);
                        for (k, c) in prod.into_iter().enumerate() {
                            v[idx(k, gh)] = c;
                        }
                        products[idx(i, g)][idx(j, h)] = v;
                    }
                }
            }
        }
        let labels = (0..d)
            .map(|x| format!("{}|{}", base.labels()[x % n], group.name(x / n)))
            .collect();
        let embed = |x: &[Scalar]| -> Element {
            let mut v = zero_vec(field, d);
            let e = group.identity();
            v[n * e..n * (e + 1)].clone_from_slice(x);
            v
        };
        let initial: Vec<Element> = base.idempotents().iter().map(|e| embed(e)).collect();
        let plain =
            Algebra::from_structure_constants(field, labels, &products, embed(base.unit()))?
                .with_seed(base.seed())
                .with_idempotents(initial.clone(), base.vertex_labels().to_vec())?;
        let refined = lift_primitive_idempotents(&plain)?;
        let parents: Vec<usize> = refined
            .iter()
            .map(|p| {
                initial
                    .iter()
                    .position(|f| plain.mul(f, p) == *p)
                    .ok_or_else(|| Error::Internal("refined idempotent has no parent".into()))
            })
            .collect::<Result<_>>()?;
        let vlabels = refined_labels(base.vertex_labels(), &parents);
        let carrier = Arc::new(plain.with_idempotents(refined, vlabels)?);
        let basic = basic_reduction(&carrier)?;
        Ok(SkewAlgebra {
            action: action.clone(),
            carrier,
            parents,
            basic,
        })
    }

    pub fn base(&self) -> &Arc<Algebra> {
        &self.action.algebra
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.action.group
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// `(x, g)` as a carrier element.
    pub fn element(&self, x: &[Scalar], g: usize) -> Element {
        let n = self.base().dim();
        let mut v = self.carrier.zero_element();
        v[n * g..n * (g + 1)].clone_from_slice(x);
        v
    }

    /// The `F M` action in the coordinates `⊕_g (1, g) ⊗ M`: block `hg ← g`
    /// of `(b_i, h)` is `M((hg)⁻¹(b_i))`.
    pub fn induce_raw(&self, m: &Representation) -> Vec<Matrix> {
        let base = self.base();
        let group = self.group();
        let field = base.field();
        let n = base.dim();
        let order = group.order();
        let dm = m.dim();
        let mut out = Vec::with_capacity(self.dim());
        for h in 0..order {
            for i in 0..n {
                let mut mat = Matrix::zeros(field, dm * order, dm * order);
                for g in 0..order {
                    let hg = group.mul(h, g);
                    let x = self.action.apply(group.inverse(hg), &base.basis_element(i));
                    mat.set_block(dm * hg, dm * g, &m.act(&x));
                }
                out.push(mat);
            }
        }
        out
    }

    /// `F M = ΛG ⊗_Λ M` with the basis change from the raw coordinates.
    pub fn induce_with_basis(&self, m: &Representation) -> (Representation, Matrix) {
        Representation::adapt(self.carrier.clone(), &self.induce_raw(m))
    }

    pub fn induce(&self, m: &Representation) -> Representation {
        self.induce_with_basis(m).0
    }

    /// `H N`: the `Λ`-module through `λ ↦ (λ, 1)`.
    pub fn restrict(&self, n: &Representation) -> Representation {
        let base = self.base().clone();
        let e = self.group().identity();
        let action: Vec<Matrix> = (0..base.dim())
            .map(|k| n.act(&self.element(&base.basis_element(k), e)))
            .collect();
        Representation::adapt(base, &action).0
    }

    /// `e N` as a `B`-module.
    pub fn reduce(&self, n: &Representation) -> Representation {
        let b = &self.basic;
        let mut rows = Vec::new();
        let mut offsets = vec![0];
        for &v in &b.vertices {
            rows.extend(n.block(v));
            offsets.push(rows.len());
        }
        let action = b
            .embedding
            .iter()
            .map(|s| n.act(s).select_rows(&rows).select_cols(&rows))
            .collect();
        Representation::from_parts(b.algebra.clone(), offsets, action)
    }

    /// `ΛG e ⊗_B N`, built as `ΛG e ⊗_k N` modulo `xβ ⊗ n − x ⊗ βn`.
    pub fn expand(&self, n: &Representation) -> Result<Representation> {
        let c = &self.carrier;
        let field = c.field();
        let e = &self.basic.idempotent;
        let left_ideal: Vec<Element> = (0..c.dim())
            .map(|k| c.mul(&c.basis_element(k), e))
            .collect();
        let span = Span::from_vectors(field, c.dim(), &left_ideal);
        let basis = span.basis().to_vec();
        let m = basis.len();
        let dn = n.dim();
        let coords = |x: &Element| {
            span.coordinates(x)
                .ok_or_else(|| Error::Internal("ΛGe is not a left ideal".into()))
        };
        let identity_n = Matrix::identity(field, dn);
        let mut action = Vec::with_capacity(c.dim());
        for k in 0..c.dim() {
            let bk = c.basis_element(k);
            let cols = basis
                .iter()
                .map(|x| coords(&c.mul(&bk, x)))
                .collect::<Result<Vec<_>>>()?;
            action.push(kron(&Matrix::from_columns(field, m, &cols), &identity_n));
        }
        let (v, change) = Representation::adapt(c.clone(), &action);
        let back = change
            .invert()?
            .ok_or_else(|| Error::Internal("singular basis change".into()))?;
        let identity_m = Matrix::identity(field, m);
        let mut relations = Vec::new();
        for (beta, s) in self.basic.embedding.iter().enumerate() {
            let cols = basis
                .iter()
                .map(|x| coords(&c.mul(x, s)))
                .collect::<Result<Vec<_>>>()?;
            let right = Matrix::from_columns(field, m, &cols);
            let r = kron(&right, &identity_n).sub(&kron(&identity_m, n.action(beta)));
            relations.extend(back.mul(&r).column_basis().columns());
        }
        Ok(v.quotient(&relations).0)
    }

    /// The vertex of `B` whose projective is isomorphic to `p`, for an
    /// indecomposable projective `B`-module `p`.
    fn basic_projective_index(&self, p: &Representation) -> Result<usize> {
        let b = &self.basic.algebra;
        for w in 0..b.vertex_count() {
            if is_isomorphic(p, &projective(b, w))? {
                return Ok(w);
            }
        }
        Err(Error::Internal(
            "reduced projective matches no projective of B".into(),
        ))
    }

    /// `(T, P) ↦ (F T, F P)`, Morita-reduced to `B` and made basic.
    pub fn induce_pair(&self, pair: &SttPair) -> Result<SttPair> {
        let b = &self.basic.algebra;
        let mut registry = IsoRegistry::new();
        let mut parts = Vec::new();
        for t in &pair.t_parts {
            for s in decompose(&self.reduce(&self.induce(t)))? {
                let before = registry.len();
                registry.register(&s.module)?;
                if registry.len() > before {
                    parts.push(s.module);
                }
            }
        }
        parts.sort_by_key(Representation::dim_vector);
        let mut p_parts = Vec::new();
        for &v in &pair.p_parts {
            let fp = self.reduce(&self.induce(&projective(self.base(), v)));
            for s in decompose(&fp)? {
                let w = self.basic_projective_index(&s.module)?;
                if !p_parts.contains(&w) {
                    p_parts.push(w);
                }
            }
        }
        Ok(SttPair::new(b.clone(), parts, p_parts))
    }
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let field = a.field();
    let mut out = Matrix::zeros(field, a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = a.get(i, j);
            if !x.is_zero() {
                out.set_block(i * b.rows(), j * b.cols(), &b.scale(x));
            }
        }
    }
    out
}

/// Pieces of base vertex `v` are labelled `v`, `v'`, `v''`, …, falling back
/// to `v#k` when that collides with another label.
fn refined_labels(base: &[String], parents: &[usize]) -> Vec<String> {
    let mut seen = vec![0usize; base.len()];
    let mut out: Vec<String> = Vec::with_capacity(parents.len());
    for &p in parents {
        let k = seen[p];
        seen[p] += 1;
        let mut label = base[p].clone();
        for _ in 0..k {
            label.push('\'');
        }
        let clash = k > 0 && (base.contains(&label) || out.contains(&label));
        out.push(if clash {
            format!("{}#{k}", base[p])
        } else {
            label
        });
    }
    out
}

fn basic_reduction(carrier: &Arc<Algebra>) -> Result<BasicReduction> {
    let field = carrier.field();
    let vertices = carrier.iso_class_representatives();
    let mut e = carrier.zero_element();
    for &v in &vertices {
        for (x, y) in e.iter_mut().zip(carrier.idempotent(v)) {
            *x += y;
        }
    }
    let proj = carrier
        .left_mul_matrix(&e)
        .mul(&carrier.right_mul_matrix(&e));
    let spanning = proj.columns();
    let basis = Span::from_vectors(field, carrier.dim(), &spanning)
        .basis()
        .to_vec();
    let (corner, span) = carrier.corner(&basis, &e)?;
    let embedding = span.basis().to_vec();
    let idems = vertices
        .iter()
        .map(|&v| {
            span.coordinates(carrier.idempotent(v))
                .ok_or_else(|| Error::Internal("idempotent outside the corner".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let labels = vertices
        .iter()
        .map(|&v| carrier.vertex_labels()[v].clone())
        .collect();
    let algebra = Arc::new(corner.with_idempotents(idems, labels)?);
    Ok(BasicReduction {
        algebra,
        vertices,
        embedding,
        idempotent: e,
    })
}

/// Characters `G → k*` with values in the field.
#[derive(Clone, Debug)]
pub struct CharacterGroup {
    pub group: FiniteGroup,
    /// `characters[c][g] = χ_c(g)`; the trivial character comes first.
    pub characters: Vec<Vec<Scalar>>,
    pub complete: bool,
}

impl CharacterGroup {
    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    /// Index of the pointwise inverse of character `c`.
    pub fn inverse(&self, c: usize) -> usize {
        let inv: Vec<Scalar> = self.characters[c]
            .iter()
            .map(|x| x.inv().expect("nonzero"))
            .collect();
        self.characters
            .iter()
            .position(|d| *d == inv)
            .expect("closed under inverses")
    }

    /// The characters as an abstract group under pointwise products.
    pub fn as_group(&self) -> FiniteGroup {
        let m = self.len();
        let table = (0..m)
            .map(|a| {
                (0..m)
                    .map(|b| {
                        let prod: Vec<Scalar> = self.characters[a]
                            .iter()
                            .zip(&self.characters[b])
                            .map(|(x, y)| x * y)
                            .collect();
                        self.characters
                            .iter()
                            .position(|c| *c == prod)
                            .expect("closed under products")
                    })
                    .collect()
            })
            .collect();
        let names = (0..m).map(|c| format!("chi{c}")).collect();
        FiniteGroup::from_table(table, (1..m).collect(), names).expect("character table is a group")
    }
}

/// All characters over the field: generator images range over roots of
/// unity of the generator orders and are kept when they extend to a
/// homomorphism. Complete when their number is `|G / [G, G]|`.
pub fn character_group(group: &FiniteGroup, field: crate::field::FieldSpec) -> CharacterGroup {
    let gens = group.generators();
    let roots: Vec<Vec<Scalar>> = gens
        .iter()
        .map(|&g| field.roots_of_unity(group.element_order(g) as u64))
        .collect();
    let mut characters = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        if let Some(chi) = extend_character(group, field.one(), &roots, &choice) {
            if !characters.contains(&chi) {
                characters.push(chi);
            }
        }
        let mut k = 0;
        while k < choice.len() {
            choice[k] += 1;
            if choice[k] < roots[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == choice.len() {
            break;
        }
    }
    let complete = characters.len() == group.abelianization_order();
    CharacterGroup {
        group: group.clone(),
        characters,
        complete,
    }
}

fn extend_character(
    group: &FiniteGroup,
    one: Scalar,
    roots: &[Vec<Scalar>],
    choice: &[usize],
) -> Option<Vec<Scalar>> {
    let n = group.order();
    let mut chi: Vec<Option<Scalar>> = vec![None; n];
    chi[group.identity()] = Some(one);
    let mut queue = alloc::collections::VecDeque::from([group.identity()]);
    while let Some(x) = queue.pop_front() {
        let cx = chi[x].clone().expect("visited");
        for (k, &g) in group.generators().iter().enumerate() {
            let y = group.mul(x, g);
            let cy = &cx * &roots[k][choice[k]];
            match &chi[y] {
                Some(c) if *c != cy => return None,
                Some(_) => {}
                None => {
                    chi[y] = Some(cy);
                    queue.push_back(y);
                }
            }
        }
    }
    let chi: Vec<Scalar> = chi.into_iter().collect::<Option<_>>()?;
    for x in 0..n {
        for y in 0..n {
            if chi[group.mul(x, y)] != &chi[x] * &chi[y] {
                return None;
            }
        }
    }
    Some(chi)
}

/// The automorphism `(λ, g) ↦ χ(g)(λ, g)` of `ΛG`.
pub fn chi_action(s: &SkewAlgebra, chi: &[Scalar]) -> Result<Matrix> {
    let n = s.base().dim();
    let mut m = Matrix::zeros(s.carrier.field(), s.dim(), s.dim());
    for x in 0..s.dim() {
        m.set(x, x, chi[x / n].clone());
    }
    s.carrier.check_automorphism(&m)?;
    Ok(m)
}

/// The character group acting on `ΛG` and, restricted, on `B` (each
/// `χ` fixes every `(e, 1)`).
#[derive(Clone, Debug)]
pub struct CharacterAction {
    pub characters: CharacterGroup,
    pub on_carrier: GroupAction,
    pub on_basic: GroupAction,
}

pub fn character_action(s: &SkewAlgebra, characters: &CharacterGroup) -> Result<CharacterAction> {
    let group = characters.as_group();
    let mut carrier_maps = Vec::new();
    let mut basic_maps = Vec::new();
    let b = &s.basic;
    let span = Span::from_vectors(s.carrier.field(), s.dim(), &b.embedding);
    for &c in group.generators() {
        let m = chi_action(s, &characters.characters[c])?;
        let cols = b
            .embedding
            .iter()
            .map(|x| {
                span.coordinates(&m.mul_vec(x))
                    .ok_or_else(|| Error::Internal("χ does not preserve B".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        basic_maps.push(Matrix::from_columns(
            s.carrier.field(),
            b.embedding.len(),
            &cols,
        ));
        carrier_maps.push(m);
    }
    Ok(CharacterAction {
        characters: characters.clone(),
        on_carrier: GroupAction::from_generator_maps(
            s.carrier.clone(),
            group.clone(),
            carrier_maps,
        )?,
        on_basic: GroupAction::from_generator_maps(b.algebra.clone(), group, basic_maps)?,
    })
}

/// `𝕏`-stability of a `B`-module checked on `ΛG`: `e · ^χ(ΛGe ⊗_B N) ≅ N`.
pub fn is_x_stable_via_expansion(
    s: &SkewAlgebra,
    xa: &CharacterAction,
    n: &Representation,
) -> Result<bool> {
    let big = s.expand(n)?;
    for &c in xa.on_carrier.group.generators() {
        let back = s.reduce(&twist_module(&big, &xa.on_carrier, c));
        if !is_isomorphic(&back, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For each character, `θ = ⊕_g χ(g)⁻¹` on `⊕_g (1, g) ⊗ T` is an invertible
/// map `F T → ^χ F T`.
pub fn verify_induction_stability(
    t: &Representation,
    s: &SkewAlgebra,
    characters: &CharacterGroup,
) -> Result<bool> {
    let raw = s.induce_raw(t);
    let field = s.carrier.field();
    let order = s.group().order();
    let dt = t.dim();
    let size = dt * order;
    for chi in &characters.characters {
        let inv: Vec<Scalar> = chi.iter().map(|x| x.inv().expect("nonzero")).collect();
        let mut theta = Matrix::zeros(field, size, size);
        for g in 0..order {
            for i in 0..dt {
                theta.set(g * dt + i, g * dt + i, inv[g].clone());
            }
        }
        if !theta.is_invertible() {
            return Ok(false);
        }
        // ^χ acts by χ⁻¹ applied to the algebra element
        let twisted: Vec<Matrix> = raw
            .iter()
            .enumerate()
            .map(|(x, m)| m.scale(&inv[x / s.base().dim()]))
            .collect();
        for (m, tm) in raw.iter().zip(&twisted) {
            if tm.mul(&theta) != theta.mul(m) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For a `ΛG`-module `N` and each `g`, `y ↦ (1, g) y` intertwines
/// `^g(HN) → HN`.
pub fn verify_restriction_stability(n: &Representation, s: &SkewAlgebra) -> Result<bool> {
    let base = s.base();
    let group = s.group();
    let e = group.identity();
    let one = base.unit();
    for g in 0..group.order() {
        let f = n.act(&s.element(one, g));
        if !f.is_invertible() {
            return Ok(false);
        }
        for k in 0..base.dim() {
            let b = base.basis_element(k);
            let moved = s.action.apply(group.inverse(g), &b);
            let lhs = f.mul(&n.act(&s.element(&moved, e)));
            let rhs = n.act(&s.element(&b, e)).mul(&f);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `H F M ≅ ⊕_g ^g M`.
pub fn check_hf_twists(m: &Representation, s: &SkewAlgebra) -> Result<bool> {
    let hf = s.restrict(&s.induce(m));
    let twists: Vec<Representation> = (0..s.group().order())
        .map(|g| twist_module(m, &s.action, g))
        .collect();
    let sum = direct_sum(s.base(), &twists).0;
    Ok(find_isomorphism(&hf, &sum)?.is_some())
}

/// Outcome of comparing stable pairs over `Λ` and over `ΛG`.
#[derive(Clone, Debug)]
pub struct BijectionReport {
    pub lambda: ExchangeQuiver,
    pub lambda_stable: StableFilter,
    pub skew: SkewAlgebra,
    pub characters: CharacterGroup,
    pub basic: ExchangeQuiver,
    pub basic_stable: StableFilter,
    /// Image vertex in `basic` of each stable `Λ`-vertex.
    pub mapping: Vec<(usize, Option<usize>)>,
    pub injective: bool,
    pub surjective: bool,
    pub images_stable: bool,
    pub tilting_preserved: bool,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.mapping.iter().all(|(_, w)| w.is_some())
            && self.injective
            && self.surjective
            && self.images_stable
            && self.tilting_preserved
    }
}

/// Suggests a prime `p ≡ 1 (mod e)` not dividing `|G|`.
pub fn suggested_prime(group: &FiniteGroup) -> u64 {
    let e = group.exponent() as u64;
    let order = group.order() as u64;
    (2..)
        .find(|&p| crate::field::is_prime(p) && (p - 1) % e == 0 && order % p != 0)
        .expect("infinitely many primes")
}

/// Enumerates both sides, maps each `G`-stable pair over `Λ` to the
/// reduced induced pair over `B`, and checks it is a bijection onto the
/// `𝕏`-stable pairs that sends tilting pairs to tilting pairs.
pub fn verify_bijection(act: &GroupAction, max_vertices: usize) -> Result<BijectionReport> {
    let group = &act.group;
    let field = act.algebra.field();
    if !group.is_abelian() {
        return Err(Error::IncompleteCharacters(format!(
            "G is not abelian, so the characters do not determine the correspondence; \
             only {} of {} elements are seen by characters",
            group.abelianization_order(),
            group.order()
        )));
    }
    let characters = character_group(group, field);
    if !characters.complete {
        return Err(Error::IncompleteCharacters(format!(
            "found {} of {} characters over {field}; use F_p with p ≡ 1 (mod {}), e.g. F_{}",
            characters.len(),
            group.abelianization_order(),
            group.exponent(),
            suggested_prime(group)
        )));
    }
    let lambda = enumerate(&act.algebra, max_vertices)?;
    let lambda_stable = stable_filter(&lambda, act)?;
    let skew = SkewAlgebra::new(act)?;
    let xa = character_action(&skew, &characters)?;
    let basic = enumerate(&skew.basic.algebra, max_vertices)?;
    let basic_stable = stable_filter(&basic, &xa.on_basic)?;
    let mut mapping = Vec::new();
    for &v in &lambda_stable.vertices {
        let image = skew.induce_pair(&lambda.vertices[v])?;
        mapping.push((v, basic.find(&image)?));
    }
    let mut images: Vec<usize> = mapping.iter().filter_map(|(_, w)| *w).collect();
    let images_stable = images.iter().all(|&w| basic_stable.stable[w]);
    images.sort_unstable();
    let count = images.len();
    images.dedup();
    let injective = images.len() == count && count == mapping.len();
    let surjective = images == basic_stable.vertices;
    let tilting_preserved = mapping
        .iter()
        .all(|&(v, w)| !lambda.info[v].tilting || w.is_some_and(|w| basic.info[w].tilting));
    Ok(BijectionReport {
        lambda,
        lambda_stable,
        skew,
        characters,
        basic,
        basic_stable,
        mapping,
        injective,
        surjective,
        images_stable,
        tilting_preserved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gabriel_quiver;
    use crate::field::FieldSpec;
    use crate::fixtures;
    use crate::mutation::DEFAULT_MAX_VERTICES;
    use crate::rep::{regular, simple};
    use crate::tau::tau;

    fn fork_skew() -> SkewAlgebra {
        SkewAlgebra::new(&fixtures::fork_action(FieldSpec::Rationals)).unwrap()
    }

    #[test]
    fn fork_skew_algebra_shape() {
        let s = fork_skew();
        assert_eq!(s.dim(), 10);
        assert_eq!(s.carrier.vertex_count(), 4);
        assert_eq!(s.carrier.vertex_labels(), ["1", "1'", "2", "2'"]);
        assert_eq!(s.carrier.simple_count(), 3);
        let b = &s.basic.algebra;
        assert_eq!(b.dim(), 5);
        assert!(b.is_split_basic());
        let q = gabriel_quiver(b).unwrap();
        assert_eq!(q.vertices.len(), 3);
        assert_eq!(q.arrows.len(), 2);
        let sinks: Vec<usize> = (0..3)
            .filter(|&v| q.arrows.iter().all(|a| a.source != v))
            .collect();
        assert_eq!(sinks.len(), 1);
        assert!(q.arrows.iter().all(|a| a.target == sinks[0]));
    }

    #[test]
    fn trivial_group_gives_the_base() {
        let a = fixtures::fork(FieldSpec::Rationals).algebra;
        let s = SkewAlgebra::new(&GroupAction::trivial(a.clone())).unwrap();
        assert_eq!(s.dim(), 5);
        assert_eq!(s.basic.algebra.dim(), 5);
        let m = simple(&a, 1);
        assert!(is_isomorphic(&s.restrict(&s.induce(&m)), &m).unwrap());
    }

    #[test]
    fn group_order_must_be_invertible() {
        let act = fixtures::fork_action(FieldSpec::prime(2).unwrap());
        assert!(matches!(
            SkewAlgebra::new(&act),
            Err(Error::GroupOrderNotInvertible(2))
        ));
    }

    #[test]
    fn induction_of_simples() {
        let s = fork_skew();
        let a = s.base().clone();
        let c = &s.carrier;
        let f1 = s.induce(&simple(&a, 0));
        let expect = direct_sum(c, &[simple(c, 0), simple(c, 1)]).0;
        assert!(is_isomorphic(&f1, &expect).unwrap());
        let f2 = s.induce(&simple(&a, 1));
        let f2p = s.induce(&simple(&a, 2));
        assert!(is_isomorphic(&f2, &f2p).unwrap());
        let r2 = s.reduce(&f2);
        assert_eq!(decompose(&r2).unwrap().len(), 1);
        assert!(is_isomorphic(&r2, &simple(&s.basic.algebra, 2)).unwrap());
        assert!(s.induce(&Representation::zero(a.clone())).is_zero());
    }

    #[test]
    fn restriction_of_induced_modules() {
        let s = fork_skew();
        let a = s.base().clone();
        let h1 = s.restrict(&s.induce(&simple(&a, 0)));
        assert!(is_isomorphic(&h1, &direct_sum(&a, &[simple(&a, 0), simple(&a, 0)]).0).unwrap());
        let h2 = s.restrict(&s.induce(&simple(&a, 1)));
        assert!(is_isomorphic(&h2, &direct_sum(&a, &[simple(&a, 1), simple(&a, 2)]).0).unwrap());
        let hreg = s.restrict(&regular(&s.carrier));
        assert!(is_isomorphic(&hreg, &direct_sum(&a, &[regular(&a), regular(&a)]).0).unwrap());
        for v in 0..3 {
            assert!(check_hf_twists(&projective(&a, v), &s).unwrap());
        }
    }

    #[test]
    fn characters_over_small_fields() {
        let z2 = FiniteGroup::cyclic(2);
        let z3 = FiniteGroup::cyclic(3);
        let x = character_group(&z2, FieldSpec::Rationals);
        assert_eq!(x.len(), 2);
        assert!(x.complete);
        let x = character_group(&z3, FieldSpec::Rationals);
        assert_eq!(x.len(), 1);
        assert!(!x.complete);
        let f7 = FieldSpec::prime(7).unwrap();
        let x = character_group(&z3, f7);
        assert_eq!(x.len(), 3);
        assert!(x.complete);
        let values: Vec<u64> = x
            .characters
            .iter()
            .map(|c| c[1].residue().unwrap())
            .collect();
        assert_eq!(values, [1, 2, 4]);
        assert_eq!(suggested_prime(&z3), 7);
        let x = character_group(&FiniteGroup::trivial(), FieldSpec::Rationals);
        assert_eq!(x.len(), 1);
        assert!(x.complete);
    }

    #[test]
    fn sign_character_negates_the_odd_layer() {
        let s = fork_skew();
        let x = character_group(s.group(), FieldSpec::Rationals);
        let triv = chi_action(&s, &x.characters[0]).unwrap();
        assert!(triv.is_identity());
        let sign = chi_action(&s, &x.characters[1]).unwrap();
        for k in 0..10 {
            let expect = if k < 5 { 1 } else { -1 };
            assert_eq!(*sign.get(k, k), FieldSpec::Rationals.from_i64(expect));
        }
        assert!(sign.mul(&sign).is_identity());
    }

    #[test]
    fn induced_modules_are_character_stable() {
        let s = fork_skew();
        let a = s.base().clone();
        let x = character_group(s.group(), FieldSpec::Rationals);
        let t = direct_sum(&a, &[simple(&a, 1), simple(&a, 2)]).0;
        assert!(verify_induction_stability(&t, &s, &x).unwrap());
        assert!(verify_induction_stability(&regular(&a), &s, &x).unwrap());
        for v in 0..4 {
            assert!(verify_restriction_stability(&projective(&s.carrier, v), &s).unwrap());
        }
    }

    #[test]
    fn expansion_inverts_reduction() {
        let s = fork_skew();
        let b = &s.basic.algebra;
        for w in 0..b.vertex_count() {
            for m in [projective(b, w), simple(b, w)] {
                let big = s.expand(&m).unwrap();
                assert!(is_isomorphic(&s.reduce(&big), &m).unwrap());
            }
        }
        let x = character_group(s.group(), FieldSpec::Rationals);
        let xa = character_action(&s, &x).unwrap();
        assert!(is_x_stable_via_expansion(&s, &xa, &simple(b, 2)).unwrap());
        assert!(!is_x_stable_via_expansion(&s, &xa, &simple(b, 0)).unwrap());
        assert!(!crate::group::is_g_stable_module(&simple(b, 0), &xa.on_basic).unwrap());
    }

    #[test]
    fn induction_commutes_with_tau() {
        let s = fork_skew();
        let a = s.base().clone();
        for v in 0..3 {
            let m = simple(&a, v);
            assert!(is_isomorphic(&tau(&s.induce(&m)), &s.induce(&tau(&m))).unwrap());
        }
    }

    #[test]
    fn fork_bijection() {
        let act = fixtures::fork_action(FieldSpec::Rationals);
        let r = verify_bijection(&act, DEFAULT_MAX_VERTICES).unwrap();
        assert_eq!(r.lambda.len(), 14);
        assert_eq!(r.basic.len(), 14);
        assert_eq!(r.lambda_stable.vertices.len(), 6);
        assert_eq!(r.basic_stable.vertices.len(), 6);
        assert!(r.passed(), "{:?}", r.mapping);
        let (v, w) = r.mapping[0];
        assert_eq!(v, r.lambda.source);
        assert_eq!(w, Some(r.basic.source));
        let tilting = r
            .mapping
            .iter()
            .filter(|(v, _)| r.lambda.info[*v].tilting)
            .count();
        assert_eq!(tilting, 3);
    }

    #[test]
    fn incomplete_characters_are_refused() {
        let act = fixtures::cyclic_a2_action(FieldSpec::Rationals);
        let err = verify_bijection(&act, DEFAULT_MAX_VERTICES).unwrap_err();
        assert!(matches!(err, Error::IncompleteCharacters(_)), "{err}");
        let act = fixtures::cyclic_a2_action(FieldSpec::prime(7).unwrap());
        let r = verify_bijection(&act, DEFAULT_MAX_VERTICES).unwrap();
        assert!(r.passed());
        assert_eq!(
            r.lambda_stable.vertices.len(),
            r.basic_stable.vertices.len()
        );
    }
}
