//! Finite groups acting on algebras, the twist functor, and G-stability of
//! modules, pairs, torsion classes and two-term complexes.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{tensor_product, Algebra, Element};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::mutation::{ExchangeQuiver, TwoTermComplex};
use crate::rep::{
    decompose, direct_sum, fac_contains, is_isomorphic, projective, projective_cover_sum,
    projective_with_basis, ModuleMap, Representation,
};
use crate::tau::SttPair;

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    generators: Vec<usize>,
    names: Vec<String>,
}

impl FiniteGroup {
    /// Validates the table (closure, associativity, identity, inverses) and
    /// checks that `generators` generate.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        generators: Vec<usize>,
        names: Vec<String>,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Input("group table is empty".into()));
        }
        if names.len() != n {
            return Err(Error::Input("one name per group element required".into()));
        }
        if table
            .iter()
            .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
        {
            return Err(Error::Input(
                "group table is not an n x n table over 0..n".into(),
            ));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::Input("group table has no identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for x in 0..n {
            let y = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| Error::Input(format!("element {} has no inverse", names[x])))?;
            inverse.push(y);
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if table[table[x][y]][z] != table[x][table[y][z]] {
                        return Err(Error::Input("group table is not associative".into()));
                    }
                }
            }
        }
        if generators.iter().any(|&g| g >= n) {
            return Err(Error::Input("generator index out of range".into()));
        }
        let g = FiniteGroup {
            table,
            identity,
            inverse,
            generators,
            names,
        };
        if g.closure(&g.generators).len() != n {
            return Err(Error::Input(
                "the listed generators do not generate the group".into(),
            ));
        }
        Ok(g)
    }

    /// `Z/n` with generator `g`.
    pub fn cyclic(n: usize) -> Self {
        Self::abelian(&[n], &[String::from("g")]).expect("cyclic group")
    }

    /// `Z/n_1 × … × Z/n_r`, elements indexed in mixed radix with the first
    /// factor varying fastest.
    pub fn abelian(orders: &[usize], generator_names: &[String]) -> Result<Self> {
        if orders.len() != generator_names.len() {
            return Err(Error::Input("one name per generator required".into()));
        }
        if orders.iter().any(|&o| o == 0) {
            return Err(Error::Input("generator order must be positive".into()));
        }
        let n: usize = orders.iter().product();
        let digits = |mut x: usize| -> Vec<usize> {
            orders
                .iter()
                .map(|&o| {
                    let d = x % o;
                    x /= o;
                    d
                })
                .collect()
        };
        let index = |ds: &[usize]| -> usize {
            let mut x = 0;
            for (d, o) in ds.iter().zip(orders).rev() {
                x = x * o + d;
            }
            x
        };
        let table = (0..n)
            .map(|x| {
                let dx = digits(x);
                (0..n)
                    .map(|y| {
                        let dy = digits(y);
                        let s: Vec<usize> = dx
                            .iter()
                            .zip(&dy)
                            .zip(orders)
                            .map(|((a, b), o)| (a + b) % o)
                            .collect();
                        index(&s)
                    })
                    .collect()
            })
            .collect();
        let names = (0..n)
            .map(|x| {
                let mut s = String::new();
                for (d, name) in digits(x).iter().zip(generator_names) {
                    match d {
                        0 => {}
                        1 => s.push_str(name),
                        _ => s.push_str(&format!("{name}^{d}")),
                    }
                }
                if s.is_empty() {
                    s.push('1');
                }
                s
            })
            .collect();
        let mut generators = Vec::new();
        let mut stride = 1;
        for &o in orders {
            if o > 1 {
                generators.push(stride);
            }
            stride *= o;
        }
        Self::from_table(table, generators, names)
    }

    pub fn trivial() -> Self {
        Self::abelian(&[], &[]).expect("trivial group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (0..n).all(|y| self.table[x][y] == self.table[y][x]))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order())
            .map(|x| self.element_order(x))
            .fold(1, num_integer::lcm)
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|&x| seen[x]).collect()
    }

    /// The commutator subgroup `[G, G]`.
    pub fn derived_subgroup(&self) -> Vec<usize> {
        let n = self.order();
        let mut comms = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let c = self.mul(self.mul(x, y), self.mul(self.inverse(x), self.inverse(y)));
                comms.push(c);
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.closure(&comms)
    }

    /// `|G / [G, G]|`.
    pub fn abelianization_order(&self) -> usize {
        self.order() / self.derived_subgroup().len()
    }
}

/// A group acting on an algebra by automorphisms: `maps[g]` has the images
/// of the basis elements as columns.
#[derive(Clone, Debug)]
pub struct GroupAction {
    pub algebra: Arc<Algebra>,
    pub group: FiniteGroup,
    maps: Vec<Matrix>,
}

impl GroupAction {
    /// Extends automorphisms given on the generators to the whole group,
    /// checking `maps(gh) = maps(g) maps(h)` on every product.
    pub fn from_generator_maps(
        algebra: Arc<Algebra>,
        group: FiniteGroup,
        generator_maps: Vec<Matrix>,
    ) -> Result<Self> {
        if generator_maps.len() != group.generators().len() {
            return Err(Error::Automorphism(format!(
                "expected {} generator maps, got {}",
                group.generators().len(),
                generator_maps.len()
            )));
        }
        for m in &generator_maps {
            algebra.check_automorphism(m)?;
        }
        let field = algebra.field();
        let n = group.order();
        let mut maps: Vec<Option<Matrix>> = vec![None; n];
        maps[group.identity()] = Some(Matrix::identity(field, algebra.dim()));
        let mut queue = VecDeque::from([group.identity()]);
        while let Some(x) = queue.pop_front() {
            let mx = maps[x].clone().expect("visited");
            for (&g, mg) in group.generators().iter().zip(&generator_maps) {
                let y = group.mul(x, g);
                let my = mx.mul(mg);
                match &maps[y] {
                    Some(existing) if *existing != my => {
                        return Err(Error::Automorphism(format!(
                            "generator maps do not respect the group law at {}",
                            group.name(y)
                        )));
                    }
                    Some(_) => {}
                    None => {
                        maps[y] = Some(my);
                        queue.push_back(y);
                    }
                }
            }
        }
        let maps: Vec<Matrix> = maps
            .into_iter()
            .map(|m| m.ok_or_else(|| Error::Input("generators do not reach every element".into())))
            .collect::<Result<_>>()?;
        Ok(GroupAction {
            algebra,
            group,
            maps,
        })
    }

    /// The trivial group acting trivially.
    pub fn trivial(algebra: Arc<Algebra>) -> Self {
        let id = Matrix::identity(algebra.field(), algebra.dim());
        GroupAction {
            algebra,
            group: FiniteGroup::trivial(),
            maps: vec![id],
        }
    }

    pub fn map(&self, g: usize) -> &Matrix {
        &self.maps[g]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// `g(x)` for an algebra element.
    pub fn apply(&self, g: usize, x: &[crate::field::Scalar]) -> Element {
        self.maps[g].mul_vec(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.maps.iter().all(Matrix::is_identity)
    }

    /// For each vertex `v`, the iso-class representative `w` with
    /// `^g P_v ≅ P_w`.
    pub fn projective_permutation(&self, g: usize) -> Result<Vec<usize>> {
        let a = &self.algebra;
        let reps = a.iso_class_representatives();
        let ps: Vec<Representation> = reps.iter().map(|&w| projective(a, w)).collect();
        let mut out = Vec::with_capacity(a.vertex_count());
        for v in 0..a.vertex_count() {
            let t = twist_module(&projective(a, v), self, g);
            let mut found = None;
            for (p, &w) in ps.iter().zip(&reps) {
                if is_isomorphic(&t, p)? {
                    found = Some(w);
                    break;
                }
            }
            out.push(found.ok_or_else(|| {
                Error::Internal("twist of a projective is not projective".into())
            })?);
        }
        Ok(out)
    }
}

/// `^σ M` for an automorphism given by the matrix of `σ⁻¹`, re-adapted to the
/// idempotent blocks. Returns the module and the basis change.
pub fn twist_by_inverse(m: &Representation, sigma_inverse: &Matrix) -> (Representation, Matrix) {
    let a = m.algebra().clone();
    let action: Vec<Matrix> = (0..a.dim())
        .map(|k| m.act(&sigma_inverse.column(k)))
        .collect();
    Representation::adapt(a, &action)
}

/// `^σ M`: the same space with `λ · x = σ⁻¹(λ) x`.
pub fn twist_module(m: &Representation, act: &GroupAction, sigma: usize) -> Representation {
    twist_module_with_basis(m, act, sigma).0
}

/// `^σ M` with the basis change `B` from `M`'s coordinates: a `Λ`-map
/// `f: M → N` becomes `B_N⁻¹ f B_M` between the twists.
pub fn twist_module_with_basis(
    m: &Representation,
    act: &GroupAction,
    sigma: usize,
) -> (Representation, Matrix) {
    twist_by_inverse(m, act.map(act.group.inverse(sigma)))
}

/// `^σ` applied to a pair: twisted summands, permuted projective part.
pub fn twist_pair(pair: &SttPair, act: &GroupAction, sigma: usize) -> Result<SttPair> {
    let perm = act.projective_permutation(sigma)?;
    let t = pair
        .t_parts
        .iter()
        .map(|t| twist_module(t, act, sigma))
        .collect();
    let p = pair.p_parts.iter().map(|&v| perm[v]).collect();
    Ok(SttPair::new(pair.algebra.clone(), t, p))
}

/// `^σ c`, with both terms re-expressed as standard projective sums.
pub fn twist_complex(
    c: &TwoTermComplex,
    act: &GroupAction,
    sigma: usize,
) -> Result<TwoTermComplex> {
    let (t1, b1) = twist_module_with_basis(&c.p1.module, act, sigma);
    let (t0, b0) = twist_module_with_basis(&c.p0.module, act, sigma);
    let inv = |m: &Matrix| {
        m.invert()
            .ok()
            .flatten()
            .ok_or_else(|| Error::Internal("singular basis change".into()))
    };
    let d = inv(&b0)?.mul(&c.d.matrix).mul(&b1);
    let (q1, cover1) = projective_cover_sum(&t1);
    let (q0, cover0) = projective_cover_sum(&t0);
    if !cover1.is_isomorphism() || !cover0.is_isomorphism() {
        return Err(Error::Internal("twisted term is not projective".into()));
    }
    let matrix = inv(&cover0.matrix)?.mul(&d).mul(&cover1.matrix);
    TwoTermComplex::new(q1, q0, matrix)
}

pub fn is_g_stable_module(m: &Representation, act: &GroupAction) -> Result<bool> {
    for &g in act.group.generators() {
        if !is_isomorphic(&twist_module(m, act, g), m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `^σ T ≅ T` and `^σ P ≅ P` for every generator.
pub fn is_g_stable_pair(pair: &SttPair, act: &GroupAction) -> Result<bool> {
    let t = pair.module();
    for &g in act.group.generators() {
        let perm = act.projective_permutation(g)?;
        let mut moved: Vec<usize> = pair.p_parts.iter().map(|&v| perm[v]).collect();
        moved.sort_unstable();
        if moved != pair.p_parts {
            return Ok(false);
        }
        if !is_isomorphic(&twist_module(&t, act, g), &t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Fac T` compared with `^σ Fac T` on the probe modules: for each
/// generator `σ` and probe `Z`, `Z ∈ Fac T ⇔ ^σ Z ∈ Fac T`. Exact when the
/// probes contain every indecomposable of both torsion classes.
pub fn is_g_stable_torsion(
    t: &Representation,
    act: &GroupAction,
    probes: &[Representation],
) -> Result<bool> {
    for &g in act.group.generators() {
        for z in probes {
            if fac_contains(t, z)? != fac_contains(t, &twist_module(z, act, g))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Two-term complexes of `A`-projectives as modules over `A ⊗ k(• → •)`:
/// the first vertex carries `P1`, the second `P0`, and the arrow acts by `d`.
#[derive(Clone, Debug)]
pub struct ComplexModel {
    base: Arc<Algebra>,
    gamma: Arc<Algebra>,
    /// Matrix of each basis element of `k(• → •)` on `k --1--> k`.
    pattern: Vec<Matrix>,
    arrow: Element,
}

impl ComplexModel {
    pub fn new(base: &Arc<Algebra>) -> Result<Self> {
        let field = base.field();
        let a2 = crate::fixtures::a2(field).algebra;
        let gamma = tensor_product(base, &a2)?;
        let (w, _) = projective_with_basis(&a2, 0);
        let pattern = w.actions().to_vec();
        let mut arrow = gamma.zero_element();
        let a_index = a2
            .labels()
            .iter()
            .position(|l| l == "a")
            .expect("arrow label");
        let m = a2.dim();
        for (i, c) in base.unit().iter().enumerate() {
            arrow[i * m + a_index] = c.clone();
        }
        Ok(ComplexModel {
            base: base.clone(),
            gamma: Arc::new(gamma),
            pattern,
            arrow,
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.gamma
    }

    pub fn to_module(&self, c: &TwoTermComplex) -> Result<Representation> {
        let field = self.base.field();
        let x1 = &c.p1.module;
        let x0 = &c.p0.module;
        let (d1, d0) = (x1.dim(), x0.dim());
        let m = self.pattern.len();
        let mut action = Vec::with_capacity(self.gamma.dim());
        for i in 0..self.base.dim() {
            let (a1, a0) = (x1.action(i), x0.action(i));
            let da1 = c.d.matrix.mul(a1);
            for j in 0..m {
                let p = &self.pattern[j];
                let mut mat = Matrix::zeros(field, d1 + d0, d1 + d0);
                mat.set_block(0, 0, &a1.scale(p.get(0, 0)));
                mat.set_block(d1, d1, &a0.scale(p.get(1, 1)));
                mat.set_block(d1, 0, &da1.scale(p.get(1, 0)));
                action.push(mat);
            }
        }
        Ok(Representation::adapt(self.gamma.clone(), &action).0)
    }

    /// The complex with its contractible summands `P --≅--> P` removed.
    pub fn minimal_part(&self, c: &TwoTermComplex) -> Result<Representation> {
        let m = self.to_module(c)?;
        let r = self.base.vertex_count();
        let mut keep = Vec::new();
        for s in decompose(&m)? {
            let x = &s.module;
            let first: usize = (0..r).map(|v| x.block_dim(2 * v)).sum();
            let second: usize = (0..r).map(|v| x.block_dim(2 * v + 1)).sum();
            let contractible = first == second && x.act(&self.arrow).rank() == first;
            if !contractible {
                keep.push(s.module);
            }
        }
        Ok(direct_sum(&self.gamma, &keep).0)
    }

    /// Isomorphism in the homotopy category.
    pub fn homotopy_equivalent(&self, c: &TwoTermComplex, c2: &TwoTermComplex) -> Result<bool> {
        is_isomorphic(&self.minimal_part(c)?, &self.minimal_part(c2)?)
    }
}

/// `^σ c ≃ c` in the homotopy category for every generator.
pub fn is_g_stable_complex(
    c: &TwoTermComplex,
    act: &GroupAction,
    model: &ComplexModel,
) -> Result<bool> {
    for &g in act.group.generators() {
        if !model.homotopy_equivalent(&twist_complex(c, act, g)?, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Stability flags for every vertex and the stable vertices in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableFilter {
    pub stable: Vec<bool>,
    pub vertices: Vec<usize>,
}

pub fn stable_filter(q: &ExchangeQuiver, act: &GroupAction) -> Result<StableFilter> {
    let mut stable = Vec::with_capacity(q.len());
    for p in &q.vertices {
        stable.push(is_g_stable_pair(p, act)?);
    }
    let vertices = (0..q.len()).filter(|&v| stable[v]).collect();
    Ok(StableFilter { stable, vertices })
}

/// `^σ f` for a module map given the twisted endpoints' basis changes.
pub fn twist_map(f: &ModuleMap, act: &GroupAction, sigma: usize) -> Result<ModuleMap> {
    let (s, bs) = twist_module_with_basis(&f.source, act, sigma);
    let (t, bt) = twist_module_with_basis(&f.target, act, sigma);
    let inv = bt
        .invert()?
        .ok_or_else(|| Error::Internal("singular basis change".into()))?;
    Ok(ModuleMap::unchecked(s, t, inv.mul(&f.matrix).mul(&bs)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::automorphism_from_quiver_map;
    use crate::field::FieldSpec;
    use crate::fixtures;
    use crate::mutation::{enumerate, h0, pair_to_silting, DEFAULT_MAX_VERTICES};
    use crate::rep::{direct_sum, regular, simple};
    use crate::tau::minimal_presentation;

    fn fork_action() -> GroupAction {
        fixtures::fork_action(FieldSpec::Rationals)
    }

    #[test]
    fn abelian_group_tables() {
        let g = FiniteGroup::abelian(&[2, 3], &[String::from("a"), String::from("b")]).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
        assert_eq!(g.exponent(), 6);
        assert_eq!(g.abelianization_order(), 6);
        assert_eq!(g.name(5), "ab^2");
        assert_eq!(FiniteGroup::cyclic(4).element_order(2), 2);
    }

    #[test]
    fn symmetric_group_is_not_abelian() {
        // S3 as permutations of {0,1,2}
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| idx([p[q[0]], p[q[1]], p[q[2]]]))
                    .collect()
            })
            .collect();
        let names = (0..6).map(|i| format!("s{i}")).collect();
        let g = FiniteGroup::from_table(table, vec![1, 4], names).unwrap();
        assert!(!g.is_abelian());
        assert_eq!(g.derived_subgroup().len(), 3);
        assert_eq!(g.abelianization_order(), 2);
    }

    #[test]
    fn bad_tables_are_rejected() {
        let names = vec![String::from("x"), String::from("y")];
        assert!(
            FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]], vec![1], names.clone()).is_err()
        );
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]], vec![], names).is_err());
    }

    #[test]
    fn inconsistent_generator_map_is_rejected() {
        let bq = fixtures::fork(FieldSpec::Rationals);
        let (vm, am) = fixtures::fork_swap();
        let one = FieldSpec::Rationals.one();
        let images: Vec<Vec<_>> = am.iter().map(|&b| vec![(one.clone(), b)]).collect();
        let swap = automorphism_from_quiver_map(&bq, &vm, &images).unwrap();
        // the swap has order 2, not 3
        let err = GroupAction::from_generator_maps(
            bq.algebra.clone(),
            FiniteGroup::cyclic(3),
            vec![swap],
        );
        assert!(matches!(err, Err(Error::Automorphism(_))));
    }

    #[test]
    fn twist_swaps_the_arms() {
        let act = fork_action();
        let a = &act.algebra;
        let g = act.group.generators()[0];
        let s2 = simple(a, 1);
        let s2p = simple(a, 2);
        assert!(is_isomorphic(&twist_module(&s2, &act, g), &s2p).unwrap());
        assert!(is_isomorphic(&twist_module(&s2, &act, act.group.identity()), &s2).unwrap());
        let back = twist_module(&twist_module(&s2, &act, g), &act, act.group.inverse(g));
        assert!(is_isomorphic(&back, &s2).unwrap());
        assert_eq!(act.projective_permutation(g).unwrap(), vec![0, 2, 1]);
    }

    #[test]
    fn stable_modules_on_the_fork() {
        let act = fork_action();
        let a = &act.algebra;
        assert!(is_g_stable_module(&regular(a), &act).unwrap());
        assert!(is_g_stable_module(&projective(a, 0), &act).unwrap());
        assert!(!is_g_stable_module(&simple(a, 1), &act).unwrap());
        let both = direct_sum(a, &[simple(a, 1), simple(a, 2)]).0;
        assert!(is_g_stable_module(&both, &act).unwrap());
    }

    #[test]
    fn torsion_stability_on_probes() {
        let act = fork_action();
        let a = &act.algebra;
        let q = enumerate(a, DEFAULT_MAX_VERTICES).unwrap();
        let probes: Vec<Representation> = (0..q.registry.len())
            .map(|i| q.registry.get(i).clone())
            .collect();
        assert_eq!(probes.len(), 6);
        let both = direct_sum(a, &[simple(a, 1), simple(a, 2)]).0;
        assert!(is_g_stable_torsion(&both, &act, &probes).unwrap());
        assert!(!is_g_stable_torsion(&simple(a, 1), &act, &probes).unwrap());
        assert!(is_g_stable_torsion(&regular(a), &act, &probes).unwrap());
    }

    #[test]
    fn fork_has_six_stable_pairs() {
        let act = fork_action();
        let q = enumerate(&act.algebra, DEFAULT_MAX_VERTICES).unwrap();
        let f = stable_filter(&q, &act).unwrap();
        assert_eq!(f.vertices.len(), 6);
        assert!(f.stable[q.source]);
        assert!(f.stable[q.sink.unwrap()]);
        let faithful = f.vertices.iter().filter(|&&v| q.info[v].faithful).count();
        assert_eq!(faithful, 3);
        let triv = GroupAction::trivial(act.algebra.clone());
        assert_eq!(stable_filter(&q, &triv).unwrap().vertices.len(), 14);
    }

    #[test]
    fn twisted_complex_has_twisted_cohomology() {
        let act = fork_action();
        let a = &act.algebra;
        let g = act.group.generators()[0];
        let q12p = {
            // 1/2' = P1 / (its vector at vertex 2)
            let p = projective(a, 0);
            let v: Vec<_> = p
                .block(1)
                .map(|i| crate::matrix::unit_vec(a.field(), p.dim(), i))
                .collect();
            p.quotient(&v).0
        };
        let pres = minimal_presentation(&q12p);
        let c =
            TwoTermComplex::new(pres.p1.clone(), pres.p0.clone(), pres.d.matrix.clone()).unwrap();
        let tc = twist_complex(&c, &act, g).unwrap();
        assert!(is_isomorphic(&h0(&tc), &twist_module(&h0(&c), &act, g)).unwrap());
        assert!(!is_isomorphic(&h0(&tc), &h0(&c)).unwrap());
        let model = ComplexModel::new(a).unwrap();
        assert!(model
            .homotopy_equivalent(&twist_complex(&c, &act, act.group.identity()).unwrap(), &c)
            .unwrap());
        assert!(!is_g_stable_complex(&c, &act, &model).unwrap());
    }

    #[test]
    fn complex_stability_matches_pair_stability() {
        let act = fork_action();
        let q = enumerate(&act.algebra, DEFAULT_MAX_VERTICES).unwrap();
        let model = ComplexModel::new(&act.algebra).unwrap();
        for p in &q.vertices {
            let c = pair_to_silting(p);
            assert_eq!(
                is_g_stable_complex(&c, &act, &model).unwrap(),
                is_g_stable_pair(p, &act).unwrap()
            );
        }
    }

    #[test]
    fn contractible_summands_are_ignored() {
        let a = fixtures::a2(FieldSpec::Rationals).algebra;
        let model = ComplexModel::new(&a).unwrap();
        let p = crate::rep::ProjectiveSum::new(&a, vec![0]);
        let empty = crate::rep::ProjectiveSum::new(&a, vec![]);
        let id = TwoTermComplex::new(
            p.clone(),
            p.clone(),
            Matrix::identity(a.field(), p.module.dim()),
        )
        .unwrap();
        let zero =
            TwoTermComplex::new(empty.clone(), empty, Matrix::zeros(a.field(), 0, 0)).unwrap();
        assert!(model.homotopy_equivalent(&id, &zero).unwrap());
        let stalk = TwoTermComplex::new(
            crate::rep::ProjectiveSum::new(&a, vec![]),
            p.clone(),
            Matrix::zeros(a.field(), p.module.dim(), 0),
        )
        .unwrap();
        assert!(!model.homotopy_equivalent(&stalk, &zero).unwrap());
    }
}
