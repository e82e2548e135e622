//! Acceptance criteria, one line each. Runs without the test harness so the
//! lines print in order; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use sttilt_core::algebra::{gabriel_quiver, Algebra};
use sttilt_core::checks::{quiver_checks, skew_checks, CheckResult};
use sttilt_core::fixtures;
use sttilt_core::group::{stable_filter, GroupAction};
use sttilt_core::mutation::{
    enumerate, hom_k_shift, ExchangeQuiver, TwoTermComplex, DEFAULT_MAX_VERTICES,
};
use sttilt_core::rep::{
    decompose, direct_sum, hom_dim, is_isomorphic, projective, simple, ProjectiveSum,
    Representation,
};
use sttilt_core::skew::{character_action, verify_bijection, SkewAlgebra};
use sttilt_core::tau::{is_classical_tilting, is_tau_rigid};
use sttilt_core::{Error, FieldSpec, Matrix, Result};

type Outcome = std::result::Result<(), String>;

fn ensure(cond: bool, what: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

/// A module given by explicit matrices for the basis elements, looked up by
/// label.
fn module(a: &Arc<Algebra>, dim: usize, entries: &[(&str, &[&[i64]])]) -> Representation {
    let action = a
        .labels()
        .iter()
        .map(|l| match entries.iter().find(|(k, _)| k == l) {
            Some((_, rows)) => Matrix::from_i64(a.field(), rows),
            None => Matrix::zeros(a.field(), dim, dim),
        })
        .collect();
    Representation::new(a.clone(), action)
        .expect("oracle module")
        .0
}

/// Every pair `(T, P)` built from the three indecomposables of `A2` and
/// the two projective vertices that is τ-rigid, kept when maximal under
/// inclusion. `τ` is taken from the Auslander–Reiten quiver `2 → 1/2 → 1`:
/// `τ 1 = 2` and the projectives have `τ = 0`.
fn a2_oracle(a: &Arc<Algebra>) -> (Vec<Representation>, Vec<(Vec<usize>, Vec<usize>)>) {
    let s1 = module(a, 1, &[("e1", &[&[1]])]);
    let s2 = module(a, 1, &[("e2", &[&[1]])]);
    let p1 = module(
        a,
        2,
        &[
            ("e1", &[&[1, 0], &[0, 0]]),
            ("e2", &[&[0, 0], &[0, 1]]),
            ("a", &[&[0, 0], &[1, 0]]),
        ],
    );
    let tau_of: [Option<usize>; 3] = [Some(1), None, None];
    let inds = vec![s1, s2, p1];
    let rigid = |t: &[usize], p: &[usize]| {
        for &x in t {
            for &y in t {
                if let Some(z) = tau_of[y] {
                    if hom_dim(&inds[x], &inds[z]) != 0 {
                        return false;
                    }
                }
            }
            for &v in p {
                if inds[x].block_dim(v) != 0 {
                    return false;
                }
            }
        }
        true
    };
    let mut candidates = Vec::new();
    for tm in 0u32..8 {
        for pm in 0u32..4 {
            let t: Vec<usize> = (0..3).filter(|i| tm & (1 << i) != 0).collect();
            let p: Vec<usize> = (0..2).filter(|i| pm & (1 << i) != 0).collect();
            if rigid(&t, &p) {
                candidates.push((tm, pm, t, p));
            }
        }
    }
    let maximal = candidates
        .iter()
        .filter(|(tm, pm, _, _)| {
            !candidates.iter().any(|(tm2, pm2, _, _)| {
                (tm2 | tm) == *tm2 && (pm2 | pm) == *pm2 && (tm2, pm2) != (tm, pm)
            })
        })
        .map(|(_, _, t, p)| (t.clone(), p.clone()))
        .collect();
    (inds, maximal)
}

fn criterion_1() -> Outcome {
    let a = fixtures::a2(q()).algebra;
    let (inds, oracle) = a2_oracle(&a);
    ensure(
        oracle.len() == 5,
        format!("oracle found {} maximal pairs", oracle.len()),
    )?;
    let qv = lift(enumerate(&a, DEFAULT_MAX_VERTICES))?;
    ensure(
        qv.len() == 5,
        format!("enumeration found {} pairs", qv.len()),
    )?;
    let mut found = Vec::new();
    for p in &qv.vertices {
        let mut t = Vec::new();
        for m in &p.t_parts {
            let idx = inds
                .iter()
                .position(|x| is_isomorphic(x, m).unwrap_or(false));
            t.push(idx.ok_or("enumerated summand is not one of the three indecomposables")?);
        }
        t.sort_unstable();
        found.push((t, p.p_parts.clone()));
    }
    let mut want = oracle.clone();
    want.sort();
    found.sort();
    ensure(
        found == want,
        format!("enumerated {found:?}, oracle {want:?}"),
    )?;
    ensure(qv.arrows.len() == 5, "pentagon has 5 arrows")?;
    ensure(
        (0..5).all(|v| qv.in_degree(v) + qv.out_degree(v) == 2),
        "every vertex has degree 2",
    )?;
    let sources: Vec<usize> = (0..5).filter(|&v| qv.in_degree(v) == 0).collect();
    let sinks: Vec<usize> = (0..5).filter(|&v| qv.out_degree(v) == 0).collect();
    ensure(
        sources == [qv.source] && sinks.len() == 1 && Some(sinks[0]) == qv.sink,
        "unique source and sink",
    )
}

/// The six stable pairs of the fork as (module summands, projective part).
fn fork_expected(a: &Arc<Algebra>) -> Vec<(Vec<Representation>, Vec<usize>)> {
    let p1 = projective(a, 0);
    let quotient_by = |v: usize| {
        let vecs: Vec<_> = p1
            .block(v)
            .map(|i| {
                let mut x = vec![a.field().zero(); p1.dim()];
                x[i] = a.field().one();
                x
            })
            .collect();
        p1.quotient(&vecs).0
    };
    let one_two = quotient_by(2);
    let one_two_prime = quotient_by(1);
    let (s1, s2, s2p) = (simple(a, 0), simple(a, 1), simple(a, 2));
    vec![
        (vec![p1.clone(), s2.clone(), s2p.clone()], vec![]),
        (vec![s2, s2p], vec![0]),
        (vec![p1, one_two_prime.clone(), one_two.clone()], vec![]),
        (vec![s1.clone(), one_two_prime, one_two], vec![]),
        (vec![s1], vec![1, 2]),
        (vec![], vec![0, 1, 2]),
    ]
}

fn same_pair(q: &ExchangeQuiver, v: usize, t: &[Representation], p: &[usize]) -> bool {
    let pair = &q.vertices[v];
    if pair.p_parts != p || pair.t_parts.len() != t.len() {
        return false;
    }
    let m = direct_sum(&q.algebra, t).0;
    is_isomorphic(&pair.module(), &m).unwrap_or(false)
}

fn criterion_2() -> Outcome {
    let act = fixtures::fork_action(q());
    let a = act.algebra.clone();
    let qv = lift(enumerate(&a, DEFAULT_MAX_VERTICES))?;
    ensure(qv.len() == 14, format!("{} pairs", qv.len()))?;
    let sources: Vec<usize> = (0..14).filter(|&v| qv.in_degree(v) == 0).collect();
    let sinks: Vec<usize> = (0..14).filter(|&v| qv.out_degree(v) == 0).collect();
    ensure(
        sources == [qv.source] && qv.vertices[qv.source].p_parts.is_empty(),
        "unique source (Λ,0)",
    )?;
    let regular = direct_sum(
        &a,
        &[projective(&a, 0), projective(&a, 1), projective(&a, 2)],
    )
    .0;
    ensure(
        lift(is_isomorphic(&qv.vertices[qv.source].module(), &regular))?,
        "source module is Λ",
    )?;
    ensure(
        sinks.len() == 1 && qv.vertices[sinks[0]].t_parts.is_empty(),
        "unique sink (0,Λ)",
    )?;
    ensure(
        (0..14).all(|v| qv.in_degree(v) + qv.out_degree(v) == 3),
        "every vertex has degree 3",
    )?;
    let f = lift(stable_filter(&qv, &act))?;
    ensure(
        f.vertices.len() == 6,
        format!("{} stable pairs", f.vertices.len()),
    )?;
    for (t, p) in fork_expected(&a) {
        let hit = f
            .vertices
            .iter()
            .filter(|&&v| same_pair(&qv, v, &t, &p))
            .count();
        ensure(
            hit == 1,
            format!("expected stable pair with P-part {p:?} not found once"),
        )?;
    }
    let faithful: Vec<usize> = f
        .vertices
        .iter()
        .copied()
        .filter(|&v| qv.info[v].faithful)
        .collect();
    ensure(
        faithful.len() == 3,
        format!("{} faithful stable pairs", faithful.len()),
    )?;
    for v in faithful {
        ensure(
            lift(is_classical_tilting(&qv.vertices[v].module()))?,
            "faithful stable pair is not tilting",
        )?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let act = fixtures::fork_action(q());
    let s = lift(SkewAlgebra::new(&act))?;
    ensure(s.dim() == 10, format!("dim ΛG = {}", s.dim()))?;
    let b = &s.basic.algebra;
    ensure(
        b.vertex_count() == 3 && s.carrier.simple_count() == 3,
        "basic reduction has 3 simples",
    )?;
    let g = lift(gabriel_quiver(b))?;
    ensure(g.arrows.len() == 2, format!("{} arrows", g.arrows.len()))?;
    let sources = (0..3)
        .filter(|&v| g.arrows.iter().all(|a| a.target != v))
        .count();
    let sinks: Vec<usize> = (0..3)
        .filter(|&v| g.arrows.iter().all(|a| a.source != v))
        .collect();
    ensure(sources == 2 && sinks.len() == 1, "two sources and one sink")?;
    ensure(
        g.arrows.iter().all(|a| a.target == sinks[0]),
        "both arrows end at the sink",
    )?;
    // paths of the quiver: 3 vertices + 2 arrows; any relation would lower this
    ensure(
        b.dim() == 5,
        format!("dim B = {}, so relations are present", b.dim()),
    )?;
    let qv = lift(enumerate(b, DEFAULT_MAX_VERTICES))?;
    ensure(qv.len() == 14, format!("{} pairs over B", qv.len()))?;
    let x = sttilt_core::skew::character_group(s.group(), q());
    let xa = lift(character_action(&s, &x))?;
    let f = lift(stable_filter(&qv, &xa.on_basic))?;
    ensure(
        f.vertices.len() == 6,
        format!("{} character-stable pairs", f.vertices.len()),
    )
}

fn criterion_4() -> Outcome {
    let act = fixtures::fork_action(q());
    let r = lift(verify_bijection(&act, DEFAULT_MAX_VERTICES))?;
    ensure(
        r.mapping.len() == 6 && r.basic_stable.vertices.len() == 6,
        "6 stable pairs on each side",
    )?;
    ensure(
        r.injective && r.surjective && r.images_stable,
        "induction is a bijection onto the stable pairs",
    )?;
    let tilting: Vec<_> = r
        .mapping
        .iter()
        .filter(|(v, _)| r.lambda.info[*v].tilting)
        .collect();
    ensure(tilting.len() == 3, "3 tilting pairs")?;
    ensure(
        tilting
            .iter()
            .all(|(_, w)| w.is_some_and(|w| r.basic.info[w].tilting)),
        "tilting pairs map to tilting pairs",
    )?;
    let s = &r.skew;
    let a = s.base().clone();
    let c = &s.carrier;
    let f1 = s.induce(&simple(&a, 0));
    let one_plus = direct_sum(c, &[simple(c, 0), simple(c, 1)]).0;
    ensure(lift(is_isomorphic(&f1, &one_plus))?, "F(1) ≅ 1 ⊕ 1'")?;
    let f2 = s.induce(&simple(&a, 1));
    let f2p = s.induce(&simple(&a, 2));
    ensure(lift(is_isomorphic(&f2, &f2p))?, "F(2) ≅ F(2')")?;
    let r2 = lift(decompose(&s.reduce(&f2)))?;
    let r2p = lift(decompose(&s.reduce(&f2p)))?;
    ensure(
        r2.len() == 1 && r2p.len() == 1,
        "reduced images are indecomposable",
    )?;
    ensure(
        lift(is_isomorphic(&r2[0].module, &r2p[0].module))?,
        "common basic image",
    )
}

fn failed(results: &[CheckResult], suite: &str) -> Vec<String> {
    results
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{suite}/{}: {}", c.name, c.detail))
        .collect()
}

fn criterion_5() -> Outcome {
    let mut bad = Vec::new();
    let a2 = fixtures::a2(q()).algebra;
    let qa = lift(enumerate(&a2, DEFAULT_MAX_VERTICES))?;
    bad.extend(failed(
        &lift(quiver_checks(&qa, &GroupAction::trivial(a2)))?,
        "a2",
    ));
    let act = fixtures::fork_action(q());
    let r = lift(verify_bijection(&act, DEFAULT_MAX_VERTICES))?;
    bad.extend(failed(&lift(quiver_checks(&r.lambda, &act))?, "base"));
    let xa = lift(character_action(&r.skew, &r.characters))?;
    bad.extend(failed(
        &lift(quiver_checks(&r.basic, &xa.on_basic))?,
        "skew",
    ));
    bad.extend(failed(&lift(skew_checks(&r))?, "functors"));
    ensure(bad.is_empty(), bad.join("; "))
}

fn criterion_6() -> Outcome {
    let a = fixtures::a2(q()).algebra;
    let s12 = direct_sum(&a, &[simple(&a, 0), simple(&a, 1)]).0;
    ensure(!is_tau_rigid(&s12), "S1 ⊕ S2 accepted as τ-rigid")?;
    let p = ProjectiveSum::new(&a, vec![0]);
    let zero = lift(TwoTermComplex::new(
        p.clone(),
        p.clone(),
        Matrix::zeros(a.field(), p.module.dim(), p.module.dim()),
    ))?;
    ensure(
        hom_k_shift(&zero) != 0,
        "zero differential accepted as presilting",
    )?;
    match verify_bijection(&fixtures::cyclic_a2_action(q()), DEFAULT_MAX_VERTICES) {
        Err(Error::IncompleteCharacters(_)) => {}
        Err(e) => return Err(format!("wrong refusal over Q: {e}")),
        Ok(_) => return Err("Z/3 over Q was not refused".into()),
    }
    let f7 = FieldSpec::prime(7).map_err(|e| e.to_string())?;
    let r = lift(verify_bijection(
        &fixtures::cyclic_a2_action(f7),
        DEFAULT_MAX_VERTICES,
    ))?;
    ensure(r.passed(), "Z/3 over F7 rejected")
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, u64); 6] = [
        ("A2 mutation matches the brute-force oracle", criterion_1, 1),
        (
            "fork: 14 pairs, 6 stable, 3 stable tilting",
            criterion_2,
            10,
        ),
        (
            "skew side: dim 10, two sources into one sink, 6 of 14 stable",
            criterion_3,
            30,
        ),
        ("induction is a bijection on stable pairs", criterion_4, 60),
        ("property suites", criterion_5, 60),
        ("negative controls", criterion_6, 60),
    ];
    let mut all = true;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let slow = took > Duration::from_secs(*limit);
        let ok = result.is_ok() && !slow;
        all &= ok;
        let status = if ok { "PASS" } else { "FAIL" };
        let mut line = format!(
            "criterion {}: {status} {name} ({:.2}s, limit {limit}s)",
            i + 1,
            took.as_secs_f64()
        );
        if let Err(e) = &result {
            line.push_str(&format!(": {e}"));
        } else if slow {
            line.push_str(": too slow");
        }
        println!("{line}");
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
