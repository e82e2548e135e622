//! The JSON input document: field, bound quiver, optional group action.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;
use sttilt_core::algebra::{
    automorphism_from_quiver_map, Arrow, BoundQuiverAlgebra, QuiverPresentation, Relation,
};
use sttilt_core::group::{FiniteGroup, GroupAction};
use sttilt_core::{Error, FieldSpec, Scalar};

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default = "default_field")]
    pub field: String,
    pub quiver: QuiverInput,
    #[serde(default)]
    pub group: Option<GroupInput>,
    #[serde(default)]
    pub options: Options,
}

fn default_field() -> String {
    "Q".into()
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverInput {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowInput>,
    #[serde(default)]
    pub relations: Vec<RelationInput>,
    #[serde(default)]
    pub nilpotency_bound: Option<usize>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowInput {
    pub label: String,
    pub source: String,
    pub target: String,
}

/// A linear combination of paths; each path lists arrow labels in
/// traversal order.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationInput {
    pub terms: Vec<TermInput>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermInput {
    #[serde(default = "one")]
    pub coeff: String,
    pub path: Vec<String>,
}

fn one() -> String {
    "1".into()
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupInput {
    /// `Z/n_1 × … × Z/n_r`, one automorphism per cyclic factor.
    Abelian { generators: Vec<AbelianGenerator> },
    /// An explicit multiplication table over element indices.
    Table {
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
        generators: Vec<TableGenerator>,
    },
}

#[derive(Clone, Debug, Deserialize)]
pub struct AbelianGenerator {
    pub name: String,
    pub order: usize,
    #[serde(flatten)]
    pub map: QuiverMap,
}

#[derive(Clone, Debug, Deserialize)]
pub struct TableGenerator {
    pub element: String,
    #[serde(flatten)]
    pub map: QuiverMap,
}

#[derive(Clone, Debug, Deserialize)]
pub struct QuiverMap {
    pub vertex_map: BTreeMap<String, String>,
    pub arrow_map: BTreeMap<String, ArrowImage>,
}

/// Either a single arrow label or a linear combination of parallel arrows.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ArrowImage {
    Arrow(String),
    Combination(Vec<ArrowTerm>),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowTerm {
    #[serde(default = "one")]
    pub coeff: String,
    pub arrow: String,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default)]
    pub max_vertices: Option<usize>,
    /// Hexadecimal, with or without `0x`.
    #[serde(default)]
    pub seed: Option<String>,
}

/// A parsed document: the algebra and the acting group.
#[derive(Clone, Debug)]
pub struct Problem {
    pub field: FieldSpec,
    pub seed: u64,
    pub max_vertices: usize,
    pub quiver: BoundQuiverAlgebra,
    pub action: GroupAction,
    pub has_group: bool,
}

#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub field: Option<FieldSpec>,
    pub seed: Option<u64>,
    pub max_vertices: Option<usize>,
}

pub fn parse_seed(text: &str) -> Result<u64, Error> {
    let t = text.trim();
    let t = t
        .strip_prefix("0x")
        .or_else(|| t.strip_prefix("0X"))
        .unwrap_or(t);
    u64::from_str_radix(t, 16)
        .map_err(|_| Error::Input(format!("seed `{text}` is not hexadecimal")))
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text)
            .map_err(|e| Error::Input(format!("malformed input document: {e}")))
    }

    pub fn build(&self, overrides: &Overrides) -> Result<Problem, Error> {
        let field = match overrides.field {
            Some(f) => f,
            None => self.field.parse()?,
        };
        let seed = match (overrides.seed, &self.options.seed) {
            (Some(s), _) => s,
            (None, Some(s)) => parse_seed(s)?,
            (None, None) => sttilt_core::algebra::DEFAULT_SEED,
        };
        let max_vertices = overrides
            .max_vertices
            .or(self.options.max_vertices)
            .unwrap_or(sttilt_core::mutation::DEFAULT_MAX_VERTICES);
        let presentation = self.presentation(field)?;
        let mut quiver = BoundQuiverAlgebra::from_bound_quiver(field, presentation)?;
        quiver.algebra = Arc::new((*quiver.algebra).clone().with_seed(seed));
        let (action, has_group) = match &self.group {
            None => (GroupAction::trivial(quiver.algebra.clone()), false),
            Some(g) => (build_action(&quiver, g, field)?, true),
        };
        Ok(Problem {
            field,
            seed,
            max_vertices,
            quiver,
            action,
            has_group,
        })
    }

    fn presentation(&self, field: FieldSpec) -> Result<QuiverPresentation, Error> {
        let q = &self.quiver;
        let vertex = |label: &str| {
            q.vertices
                .iter()
                .position(|v| v == label)
                .ok_or_else(|| Error::Input(format!("unknown vertex `{label}`")))
        };
        for (i, v) in q.vertices.iter().enumerate() {
            if q.vertices[..i].contains(v) {
                return Err(Error::Input(format!("duplicate vertex `{v}`")));
            }
        }
        let mut arrows = Vec::new();
        for a in &q.arrows {
            if arrows.iter().any(|b: &Arrow| b.label == a.label) {
                return Err(Error::Input(format!("duplicate arrow `{}`", a.label)));
            }
            arrows.push(Arrow {
                label: a.label.clone(),
                source: vertex(&a.source)?,
                target: vertex(&a.target)?,
            });
        }
        let mut p = QuiverPresentation::new(q.vertices.clone(), arrows);
        let mut relations = Vec::new();
        for r in &q.relations {
            let mut terms = Vec::new();
            for t in &r.terms {
                let path = t
                    .path
                    .iter()
                    .map(|l| {
                        p.arrow_index(l)
                            .ok_or_else(|| Error::Input(format!("unknown arrow `{l}`")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                terms.push((field.parse(&t.coeff)?, path));
            }
            relations.push(Relation { terms });
        }
        p = p.with_relations(relations);
        if let Some(n) = q.nilpotency_bound {
            p.nilpotency_bound = n;
        }
        Ok(p)
    }
}

fn build_action(
    bq: &BoundQuiverAlgebra,
    g: &GroupInput,
    field: FieldSpec,
) -> Result<GroupAction, Error> {
    let (group, maps) = match g {
        GroupInput::Abelian { generators } => {
            if let Some(bad) = generators.iter().find(|x| x.order < 2) {
                return Err(Error::Input(format!(
                    "generator `{}` must have order at least 2",
                    bad.name
                )));
            }
            let orders: Vec<usize> = generators.iter().map(|x| x.order).collect();
            let names: Vec<String> = generators.iter().map(|x| x.name.clone()).collect();
            let group = FiniteGroup::abelian(&orders, &names)?;
            let maps: Vec<&QuiverMap> = generators.iter().map(|x| &x.map).collect();
            (group, maps)
        }
        GroupInput::Table {
            elements,
            table,
            generators,
        } => {
            let index = |name: &str| {
                elements
                    .iter()
                    .position(|e| e == name)
                    .ok_or_else(|| Error::Input(format!("unknown group element `{name}`")))
            };
            let gens = generators
                .iter()
                .map(|x| index(&x.element))
                .collect::<Result<Vec<_>, _>>()?;
            let group = FiniteGroup::from_table(table.clone(), gens, elements.clone())?;
            let maps: Vec<&QuiverMap> = generators.iter().map(|x| &x.map).collect();
            (group, maps)
        }
    };
    let matrices = maps
        .into_iter()
        .map(|m| quiver_map_matrix(bq, m, field))
        .collect::<Result<Vec<_>, _>>()?;
    GroupAction::from_generator_maps(bq.algebra.clone(), group, matrices)
}

fn quiver_map_matrix(
    bq: &BoundQuiverAlgebra,
    m: &QuiverMap,
    field: FieldSpec,
) -> Result<sttilt_core::Matrix, Error> {
    let q = &bq.quiver;
    let vertex = |label: &str| {
        q.vertex_index(label)
            .ok_or_else(|| Error::Automorphism(format!("unknown vertex `{label}` in vertex map")))
    };
    let arrow = |label: &str| {
        q.arrow_index(label)
            .ok_or_else(|| Error::Automorphism(format!("unknown arrow `{label}` in arrow map")))
    };
    let mut vertex_map: Vec<Option<usize>> = vec![None; q.vertices.len()];
    for (from, to) in &m.vertex_map {
        vertex_map[vertex(from)?] = Some(vertex(to)?);
    }
    let vertex_map = vertex_map
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| Error::Automorphism(format!("vertex `{}` has no image", q.vertices[i])))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut images: Vec<Option<Vec<(Scalar, usize)>>> = vec![None; q.arrows.len()];
    for (from, to) in &m.arrow_map {
        let terms = match to {
            ArrowImage::Arrow(l) => vec![(field.one(), arrow(l)?)],
            ArrowImage::Combination(ts) => ts
                .iter()
                .map(|t| Ok((field.parse(&t.coeff)?, arrow(&t.arrow)?)))
                .collect::<Result<Vec<_>, Error>>()?,
        };
        images[arrow(from)?] = Some(terms);
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| {
                Error::Automorphism(format!("arrow `{}` has no image", q.arrows[i].label))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    automorphism_from_quiver_map(bq, &vertex_map, &images)
}
