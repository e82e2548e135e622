//! Report documents. Field order is the serialization order.

use serde::Serialize;
use sttilt_core::checks::CheckResult;
use sttilt_core::group::{GroupAction, StableFilter};
use sttilt_core::mutation::ExchangeQuiver;
use sttilt_core::Error;

#[derive(Clone, Debug, Serialize)]
pub struct GroupSummary {
    pub order: usize,
    pub abelian: bool,
    pub elements: Vec<String>,
    pub generators: Vec<String>,
}

impl GroupSummary {
    pub fn new(act: &GroupAction) -> Self {
        let g = &act.group;
        GroupSummary {
            order: g.order(),
            abelian: g.is_abelian(),
            elements: g.names().to_vec(),
            generators: g
                .generators()
                .iter()
                .map(|&x| g.name(x).to_string())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexReport {
    pub id: usize,
    pub label: String,
    pub modules: Vec<String>,
    pub dim_vectors: Vec<String>,
    pub projective_part: Vec<String>,
    pub classification: &'static str,
    pub sincere: bool,
    pub faithful: bool,
    pub tilting: bool,
    pub stable: bool,
    pub in_degree: usize,
    pub out_degree: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ArrowReport {
    pub from: usize,
    pub to: usize,
    pub summand: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuiverReport {
    pub vertex_count: usize,
    pub arrow_count: usize,
    pub stable_count: usize,
    pub stable_tilting_count: usize,
    pub source: usize,
    pub sink: Option<usize>,
    pub vertices: Vec<VertexReport>,
    pub arrows: Vec<ArrowReport>,
}

/// `T_1 ⊕ T_2 [P_i, P_j]`, with `0` for an empty module part.
pub fn vertex_label(q: &ExchangeQuiver, v: usize) -> String {
    let info = &q.info[v];
    let mut s = if info.labels.is_empty() {
        String::from("0")
    } else {
        info.labels.join(" ⊕ ")
    };
    let p = &q.vertices[v].p_parts;
    if !p.is_empty() {
        let names: Vec<String> = p
            .iter()
            .map(|&i| format!("P{}", q.algebra.vertex_labels()[i]))
            .collect();
        s.push_str(&format!(" [{}]", names.join(", ")));
    }
    s
}

impl QuiverReport {
    pub fn new(q: &ExchangeQuiver, stable: &StableFilter) -> Self {
        let vertices = (0..q.len())
            .map(|v| {
                let p = &q.vertices[v];
                let info = &q.info[v];
                VertexReport {
                    id: v,
                    label: vertex_label(q, v),
                    modules: info.labels.clone(),
                    dim_vectors: p
                        .t_parts
                        .iter()
                        .map(|t| t.dim_vector().to_string())
                        .collect(),
                    projective_part: p
                        .p_parts
                        .iter()
                        .map(|&i| q.algebra.vertex_labels()[i].clone())
                        .collect(),
                    classification: info.classification.as_str(),
                    sincere: info.sincere,
                    faithful: info.faithful,
                    tilting: info.tilting,
                    stable: stable.stable[v],
                    in_degree: q.in_degree(v),
                    out_degree: q.out_degree(v),
                }
            })
            .collect();
        let arrows = q
            .arrows
            .iter()
            .map(|a| ArrowReport {
                from: a.from,
                to: a.to,
                summand: a.summand,
            })
            .collect();
        QuiverReport {
            vertex_count: q.len(),
            arrow_count: q.arrows.len(),
            stable_count: stable.vertices.len(),
            stable_tilting_count: stable
                .vertices
                .iter()
                .filter(|&&v| q.info[v].tilting)
                .count(),
            source: q.source,
            sink: q.sink,
            vertices,
            arrows,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerateReport {
    pub command: &'static str,
    pub field: String,
    pub seed: String,
    pub algebra_dim: usize,
    pub algebra_vertices: Vec<String>,
    pub group: GroupSummary,
    pub quiver: QuiverReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeReport {
    pub source: String,
    pub target: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterSummary {
    pub found: usize,
    pub expected: usize,
    pub complete: bool,
    pub values: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SkewReport {
    pub command: &'static str,
    pub field: String,
    pub seed: String,
    pub group: GroupSummary,
    pub base_dim: usize,
    pub skew_dim: usize,
    pub idempotents: Vec<String>,
    pub simple_count: usize,
    pub basic_dim: usize,
    pub basic_vertices: Vec<String>,
    pub basic_quiver: Vec<EdgeReport>,
    pub characters: CharacterSummary,
}

#[derive(Clone, Debug, Serialize)]
pub struct MatchReport {
    pub lambda_vertex: usize,
    pub lambda_label: String,
    pub skew_vertex: Option<usize>,
    pub skew_label: Option<String>,
    pub tilting: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionSummary {
    pub lambda_pairs: usize,
    pub lambda_stable: usize,
    pub skew_pairs: usize,
    pub skew_stable: usize,
    pub injective: bool,
    pub surjective: bool,
    pub images_stable: bool,
    pub tilting_preserved: bool,
    pub matching: Vec<MatchReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl CheckReport {
    pub fn new(suite: &'static str, r: CheckResult) -> Self {
        CheckReport {
            suite,
            name: r.name,
            passed: r.passed,
            detail: r.detail,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub command: &'static str,
    pub field: String,
    pub seed: String,
    pub group: GroupSummary,
    pub passed: bool,
    pub bijection: BijectionSummary,
    pub checks: Vec<CheckReport>,
}

/// Exit status for an error: 2 for bad or refused input, 3 for resource
/// aborts, 1 for internal check failures.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Resource(_) => 3,
        Error::Internal(_) => 1,
        _ => 2,
    }
}

pub fn seed_string(seed: u64) -> String {
    format!("0x{seed:x}")
}
