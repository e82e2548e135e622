//! Named property suites run over enumerated data. Each check reports a
//! pass/fail flag and, on failure, the first counterexample found.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Result;
use crate::group::{
    is_g_stable_complex, is_g_stable_module, is_g_stable_pair, is_g_stable_torsion, twist_module,
    twist_pair, ComplexModel, GroupAction,
};
use crate::mutation::{h0, hom_k_shift, pair_to_silting, verify_by_approximation, ExchangeQuiver};
use crate::rep::{fac_contains, hom_dim, is_isomorphic, power, projective, simple, Representation};
use crate::skew::{
    character_action, check_hf_twists, is_x_stable_via_expansion, verify_induction_stability,
    verify_restriction_stability, BijectionReport,
};
use crate::tau::{is_tau_rigid_pair, projective_complement, tau, validate_stt_pair};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn outcome(name: &'static str, failure: Option<String>) -> CheckResult {
    match failure {
        None => CheckResult {
            name,
            passed: true,
            detail: String::new(),
        },
        Some(detail) => CheckResult {
            name,
            passed: false,
            detail,
        },
    }
}

fn first_failure<I: IntoIterator<Item = usize>>(
    items: I,
    mut ok: impl FnMut(usize) -> Result<bool>,
    describe: impl Fn(usize) -> String,
) -> Result<Option<String>> {
    for i in items {
        if !ok(i)? {
            return Ok(Some(describe(i)));
        }
    }
    Ok(None)
}

fn registry_modules(q: &ExchangeQuiver) -> Vec<Representation> {
    (0..q.registry.len())
        .map(|i| q.registry.get(i).clone())
        .collect()
}

/// Checks on one side: the exchange quiver of an algebra with a group
/// acting on it.
pub fn quiver_checks(q: &ExchangeQuiver, act: &GroupAction) -> Result<Vec<CheckResult>> {
    let a = &q.algebra;
    let mods = registry_modules(q);
    let gens = act.group.generators().to_vec();
    let vertex = |v: usize| format!("vertex {v} ({})", q.info[v].labels.join(" + "));
    let module = |i: usize| format!("module {}", mods[i].radical_layers_label());
    let mut out = Vec::new();

    let f = first_failure(
        0..mods.len(),
        |i| {
            for &g in &gens {
                let lhs = tau(&twist_module(&mods[i], act, g));
                let rhs = twist_module(&tau(&mods[i]), act, g);
                if !is_isomorphic(&lhs, &rhs)? {
                    return Ok(false);
                }
            }
            Ok(true)
        },
        module,
    )?;
    out.push(outcome("tau-twist-commutation", f));

    let f = first_failure(
        0..q.len(),
        |v| Ok(q.info[v].sincere == q.vertices[v].p_parts.is_empty()),
        vertex,
    )?;
    out.push(outcome("sincere-iff-no-projective-part", f));

    let f = first_failure(
        0..q.len(),
        |v| Ok(q.info[v].faithful == q.info[v].tilting),
        vertex,
    )?;
    out.push(outcome("faithful-iff-tilting", f));

    let f = first_failure(
        0..q.len(),
        |v| {
            let p = &q.vertices[v];
            Ok(projective_complement(a, &p.module()) == p.p_parts)
        },
        vertex,
    )?;
    out.push(outcome("projective-part-unique", f));

    let mut stable = Vec::with_capacity(q.len());
    for p in &q.vertices {
        stable.push(is_g_stable_pair(p, act)?);
    }

    let f = first_failure(
        0..q.len(),
        |v| {
            for &g in &gens {
                if !validate_stt_pair(&twist_pair(&q.vertices[v], act, g)?)? {
                    return Ok(false);
                }
            }
            Ok(true)
        },
        vertex,
    )?;
    out.push(outcome("pair-transport", f));

    let f = first_failure(
        0..q.len(),
        |v| {
            let p = &q.vertices[v];
            if !is_g_stable_module(&p.module(), act)? {
                return Ok(true);
            }
            Ok(stable[v])
        },
        vertex,
    )?;
    out.push(outcome("stable-module-has-stable-projective-part", f));

    let f = first_failure(
        0..q.len(),
        |v| Ok(is_g_stable_torsion(&q.vertices[v].module(), act, &mods)? == stable[v]),
        vertex,
    )?;
    out.push(outcome("pair-stability-iff-torsion-stability", f));

    let model = ComplexModel::new(a)?;
    let f = first_failure(
        0..q.len(),
        |v| Ok(is_g_stable_complex(&pair_to_silting(&q.vertices[v]), act, &model)? == stable[v]),
        vertex,
    )?;
    out.push(outcome("pair-stability-iff-complex-stability", f));

    let f = first_failure(
        0..q.len(),
        |v| {
            let p = &q.vertices[v];
            let c = pair_to_silting(p);
            Ok(is_isomorphic(&h0(&c), &p.module())? && hom_k_shift(&c) == 0)
        },
        vertex,
    )?;
    out.push(outcome("silting-roundtrip", f));

    let f = first_failure(
        0..q.arrows.len(),
        |k| {
            let arrow = q.arrows[k];
            let from = q.vertices[arrow.from].module();
            let to = q.vertices[arrow.to].module();
            Ok(fac_contains(&from, &to)? && !fac_contains(&to, &from)?)
        },
        |k| format!("arrow {} -> {}", q.arrows[k].from, q.arrows[k].to),
    )?;
    out.push(outcome("mutation-shrinks-torsion-class", f));

    let approx = verify_by_approximation(q)?;
    out.push(outcome(
        "approximation-criterion",
        (!approx).then(|| String::from("some vertex fails")),
    ));
    Ok(out)
}

/// Checks relating `Λ` and `ΛG` on the data of a bijection report.
pub fn skew_checks(r: &BijectionReport) -> Result<Vec<CheckResult>> {
    let s = &r.skew;
    let base = s.base();
    let carrier = &s.carrier;
    let lambda_mods = registry_modules(&r.lambda);
    let basic_mods = registry_modules(&r.basic);
    let xa = character_action(s, &r.characters)?;
    let mut skew_mods: Vec<Representation> = Vec::new();
    for v in 0..carrier.vertex_count() {
        skew_mods.push(projective(carrier, v));
        skew_mods.push(simple(carrier, v));
    }
    for m in &basic_mods {
        skew_mods.push(s.expand(m)?);
    }
    let lmod = |i: usize| format!("module {}", lambda_mods[i].radical_layers_label());
    let mut out = Vec::new();

    let f = first_failure(
        0..lambda_mods.len(),
        |i| {
            let m = &lambda_mods[i];
            let fm = s.induce(m);
            for n in &skew_mods {
                let hn = s.restrict(n);
                if hom_dim(&fm, n) != hom_dim(m, &hn) || hom_dim(n, &fm) != hom_dim(&hn, m) {
                    return Ok(false);
                }
            }
            Ok(true)
        },
        lmod,
    )?;
    out.push(outcome("adjunction-dimensions", f));

    let f = first_failure(
        0..lambda_mods.len(),
        |i| check_hf_twists(&lambda_mods[i], s),
        lmod,
    )?;
    out.push(outcome("restriction-of-induction-is-sum-of-twists", f));

    let f = first_failure(
        0..lambda_mods.len(),
        |i| {
            let m = &lambda_mods[i];
            let pres = crate::tau::minimal_presentation(m);
            let raw1 = s.induce_raw(&pres.p1.module);
            let raw0 = s.induce_raw(&pres.p0.module);
            let order = s.group().order();
            let mut fd = crate::matrix::Matrix::zeros(base.field(), 0, 0);
            for _ in 0..order {
                fd = fd.block_diag(&pres.d.matrix);
            }
            let intertwines = raw1
                .iter()
                .zip(&raw0)
                .all(|(x1, x0)| fd.mul(x1) == x0.mul(&fd));
            let (k, _) = pres.d.kernel();
            let exact = s.induce(&k).dim() + fd.rank() == s.induce(&pres.p1.module).dim();
            Ok(intertwines && exact && s.restrict(&s.induce(m)).dim() == order * m.dim())
        },
        lmod,
    )?;
    out.push(outcome("induction-and-restriction-exact", f));

    let f = first_failure(
        0..lambda_mods.len(),
        |i| {
            let m = &lambda_mods[i];
            is_isomorphic(&tau(&s.induce(m)), &s.induce(&tau(m)))
        },
        lmod,
    )?;
    out.push(outcome("induction-commutes-with-tau", f));

    let stable_modules: Vec<Representation> = r
        .lambda_stable
        .vertices
        .iter()
        .map(|&v| r.lambda.vertices[v].module())
        .collect();
    let smod = |i: usize| format!("stable vertex {}", r.lambda_stable.vertices[i]);
    let f = first_failure(
        0..stable_modules.len(),
        |i| {
            let t = &stable_modules[i];
            is_isomorphic(&s.restrict(&s.induce(t)), &power(t, s.group().order()))
        },
        smod,
    )?;
    out.push(outcome("restriction-of-induced-stable-is-power", f));

    let f = first_failure(
        0..stable_modules.len(),
        |i| verify_induction_stability(&stable_modules[i], s, &r.characters),
        smod,
    )?;
    out.push(outcome("induced-stable-is-character-stable", f));

    let f = first_failure(
        0..stable_modules.len(),
        |i| {
            let v = r.lambda_stable.vertices[i];
            let image = s.induce_pair(&r.lambda.vertices[v])?;
            Ok(is_tau_rigid_pair(&image.module(), &image.p_parts))
        },
        smod,
    )?;
    out.push(outcome("induction-preserves-tau-rigid-pairs", f));

    let f = first_failure(
        0..skew_mods.len(),
        |i| verify_restriction_stability(&skew_mods[i], s),
        |i| format!("ΛG-module {}", skew_mods[i].dim_vector()),
    )?;
    out.push(outcome("restriction-is-group-stable", f));

    let f = first_failure(
        0..r.basic.len(),
        |w| {
            let m = r.basic.vertices[w].module();
            Ok(is_x_stable_via_expansion(s, &xa, &m)? == is_g_stable_module(&m, &xa.on_basic)?)
        },
        |w| format!("basic vertex {w}"),
    )?;
    out.push(outcome("character-stability-through-expansion", f));

    let unmatched: Vec<usize> = r
        .mapping
        .iter()
        .filter(|(_, w)| w.is_none())
        .map(|(v, _)| *v)
        .collect();
    let bij = if !unmatched.is_empty() {
        Some(format!("no image for stable vertices {unmatched:?}"))
    } else if !r.images_stable {
        Some(String::from("an image is not character-stable"))
    } else if !r.injective {
        Some(String::from("two stable pairs share an image"))
    } else if !r.surjective {
        Some(format!(
            "{} stable pairs over Λ but {} over ΛG",
            r.lambda_stable.vertices.len(),
            r.basic_stable.vertices.len()
        ))
    } else {
        None
    };
    out.push(outcome("induction-bijection", bij));
    let tilt =
        (!r.tilting_preserved).then(|| String::from("a tilting pair maps to a non-tilting pair"));
    out.push(outcome("induction-preserves-tilting", tilt));

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::fixtures;
    use crate::mutation::{enumerate, DEFAULT_MAX_VERTICES};
    use crate::skew::verify_bijection;

    fn assert_all(results: &[CheckResult]) {
        for r in results {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn a2_with_trivial_group() {
        let a = fixtures::a2(FieldSpec::Rationals).algebra;
        let q = enumerate(&a, DEFAULT_MAX_VERTICES).unwrap();
        assert_all(&quiver_checks(&q, &GroupAction::trivial(a)).unwrap());
    }

    #[test]
    fn fork_both_sides() {
        let act = fixtures::fork_action(FieldSpec::Rationals);
        let r = verify_bijection(&act, DEFAULT_MAX_VERTICES).unwrap();
        assert_all(&quiver_checks(&r.lambda, &act).unwrap());
        let xa = character_action(&r.skew, &r.characters).unwrap();
        assert_all(&quiver_checks(&r.basic, &xa.on_basic).unwrap());
        let results = skew_checks(&r).unwrap();
        assert_eq!(results.len(), 11);
        assert_all(&results);
    }

    #[test]
    fn cyclic_action_over_f7() {
        let act = fixtures::cyclic_a2_action(FieldSpec::prime(7).unwrap());
        let r = verify_bijection(&act, DEFAULT_MAX_VERTICES).unwrap();
        assert_all(&skew_checks(&r).unwrap());
    }
}
