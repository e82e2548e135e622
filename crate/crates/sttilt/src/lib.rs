//! Command-line front end for `sttilt-core`: input documents, reports and
//! DOT export.

pub mod dot;
pub mod input;
pub mod report;

use sttilt_core::algebra::gabriel_quiver;
use sttilt_core::checks::{quiver_checks, skew_checks};
use sttilt_core::group::stable_filter;
use sttilt_core::mutation::enumerate;
use sttilt_core::skew::{character_action, character_group, verify_bijection, SkewAlgebra};
use sttilt_core::{Error, Result};

use input::Problem;
use report::*;

/// Output of `enumerate`: the report and the DOT rendering.
pub struct EnumerateOutput {
    pub report: EnumerateReport,
    pub dot: String,
}

pub fn cmd_enumerate(p: &Problem) -> Result<EnumerateOutput> {
    let a = &p.quiver.algebra;
    let q = enumerate(a, p.max_vertices)?;
    let stable = stable_filter(&q, &p.action)?;
    let dot = dot::to_dot(&q, &stable);
    let report = EnumerateReport {
        command: "enumerate",
        field: p.field.to_string(),
        seed: seed_string(p.seed),
        algebra_dim: a.dim(),
        algebra_vertices: a.vertex_labels().to_vec(),
        group: GroupSummary::new(&p.action),
        quiver: QuiverReport::new(&q, &stable),
    };
    Ok(EnumerateOutput { report, dot })
}

pub fn cmd_skew(p: &Problem) -> Result<SkewReport> {
    if !p.has_group {
        return Err(Error::Input("the skew command needs a group block".into()));
    }
    let s = SkewAlgebra::new(&p.action)?;
    let b = &s.basic.algebra;
    let gq = gabriel_quiver(b)?;
    let mut edges: Vec<EdgeReport> = Vec::new();
    for arrow in &gq.arrows {
        let (source, target) = (
            gq.vertices[arrow.source].clone(),
            gq.vertices[arrow.target].clone(),
        );
        match edges
            .iter_mut()
            .find(|e| e.source == source && e.target == target)
        {
            Some(e) => e.multiplicity += 1,
            None => edges.push(EdgeReport {
                source,
                target,
                multiplicity: 1,
            }),
        }
    }
    let x = character_group(s.group(), p.field);
    Ok(SkewReport {
        command: "skew",
        field: p.field.to_string(),
        seed: seed_string(p.seed),
        group: GroupSummary::new(&p.action),
        base_dim: s.base().dim(),
        skew_dim: s.dim(),
        idempotents: s.carrier.vertex_labels().to_vec(),
        simple_count: s.carrier.simple_count(),
        basic_dim: b.dim(),
        basic_vertices: b.vertex_labels().to_vec(),
        basic_quiver: edges,
        characters: CharacterSummary {
            found: x.len(),
            expected: s.group().abelianization_order(),
            complete: x.complete,
            values: x
                .characters
                .iter()
                .map(|c| c.iter().map(|v| v.to_string()).collect())
                .collect(),
        },
    })
}

pub fn cmd_verify(p: &Problem) -> Result<VerifyReport> {
    let r = verify_bijection(&p.action, p.max_vertices)?;
    let xa = character_action(&r.skew, &r.characters)?;
    let mut checks = Vec::new();
    for c in quiver_checks(&r.lambda, &p.action)? {
        checks.push(CheckReport::new("base", c));
    }
    for c in quiver_checks(&r.basic, &xa.on_basic)? {
        checks.push(CheckReport::new("skew", c));
    }
    for c in skew_checks(&r)? {
        checks.push(CheckReport::new("functors", c));
    }
    let matching = r
        .mapping
        .iter()
        .map(|&(v, w)| MatchReport {
            lambda_vertex: v,
            lambda_label: vertex_label(&r.lambda, v),
            skew_vertex: w,
            skew_label: w.map(|w| vertex_label(&r.basic, w)),
            tilting: r.lambda.info[v].tilting,
        })
        .collect();
    let bijection = BijectionSummary {
        lambda_pairs: r.lambda.len(),
        lambda_stable: r.lambda_stable.vertices.len(),
        skew_pairs: r.basic.len(),
        skew_stable: r.basic_stable.vertices.len(),
        injective: r.injective,
        surjective: r.surjective,
        images_stable: r.images_stable,
        tilting_preserved: r.tilting_preserved,
        matching,
    };
    let passed = r.passed() && checks.iter().all(|c| c.passed);
    Ok(VerifyReport {
        command: "verify",
        field: p.field.to_string(),
        seed: seed_string(p.seed),
        group: GroupSummary::new(&p.action),
        passed,
        bijection,
        checks,
    })
}

pub fn to_json<T: serde::Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}
