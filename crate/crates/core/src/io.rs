//! JSON reading and writing.
//!
//! Every structure is an object with a `"type"` tag and an `"elements"` list of
//! labels. Subsets are arrays of labels. The remaining keys depend on the type:
//!
//! | type               | keys                                                     |
//! |--------------------|----------------------------------------------------------|
//! | `coloring-problem` | `family`, `ideal` (pairs, or `{"generators": [...]}`)    |
//! | `graph`            | `edges` (label pairs)                                    |
//! | `hypergraph`       | `edges`, optional `allow_singletons`                     |
//! | `poset`            | `relations` (`[lower, upper]` pairs, closed on load)     |
//! | `matroid`          | `bases`                                                  |
//! | `antimatroid`      | `feasible`                                               |
//!
//! Rendering is canonical: keys and labels sorted, subsets sorted, so equal
//! structures render to identical bytes.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::problem::{
    ClosureCheck, ColoringProblem, IntervalIdeal, RawColoringProblem, SubsetFamily, Violation,
};
use crate::species::{Antimatroid, Graph, HopfMonoid, HopfStructure, Hypergraph, Matroid, Poset, SpeciesTag};
use crate::subset::{GroundSet, Subset};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| parse_err(format!("missing key {key:?}")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("{what} must be an array")))
}

fn subset(ground: &GroundSet, v: &Value) -> Result<Subset> {
    let labels = array(v, "a subset")?
        .iter()
        .map(|l| l.as_str().ok_or_else(|| parse_err("labels must be strings")))
        .collect::<Result<Vec<&str>>>()?;
    ground.subset_of(&labels)
}

fn subsets(ground: &GroundSet, v: &Value, what: &str) -> Result<Vec<Subset>> {
    array(v, what)?.iter().map(|s| subset(ground, s)).collect()
}

fn pairs(ground: &GroundSet, v: &Value, what: &str) -> Result<Vec<(Subset, Subset)>> {
    array(v, what)?
        .iter()
        .map(|p| match p.as_array().map(Vec::as_slice) {
            Some([s, t]) => Ok((subset(ground, s)?, subset(ground, t)?)),
            _ => Err(parse_err(format!("{what} entries must be two-element arrays"))),
        })
        .collect()
}

fn elements(obj: &Map<String, Value>) -> Result<GroundSet> {
    let labels = array(field(obj, "elements")?, "elements")?
        .iter()
        .map(|l| l.as_str().map(String::from).ok_or_else(|| parse_err("labels must be strings")))
        .collect::<Result<Vec<String>>>()?;
    GroundSet::new(labels)
}

fn object(text: &str) -> Result<Map<String, Value>> {
    match serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))? {
        Value::Object(obj) => Ok(obj),
        _ => Err(parse_err("top-level value must be an object")),
    }
}

fn type_tag(obj: &Map<String, Value>) -> Result<SpeciesTag> {
    field(obj, "type")?
        .as_str()
        .ok_or_else(|| parse_err("\"type\" must be a string"))?
        .parse()
}

/// Reads a coloring problem without validating it.
pub fn parse_raw_problem(text: &str) -> Result<RawColoringProblem> {
    let obj = object(text)?;
    if type_tag(&obj)? != SpeciesTag::ColoringProblem {
        return Err(parse_err("expected a coloring-problem"));
    }
    raw_problem(&obj)
}

fn raw_problem(obj: &Map<String, Value>) -> Result<RawColoringProblem> {
    let ground = elements(obj)?;
    let family = subsets(&ground, field(obj, "family")?, "family")?;
    let ideal = match field(obj, "ideal")? {
        Value::Object(g) => {
            let generators = pairs(&ground, field(g, "generators")?, "generators")?;
            let fam = SubsetFamily::new(family.iter().copied());
            for &(s, t) in &generators {
                if !s.is_subset_of(t) || !fam.contains(s) || !fam.contains(t) {
                    return Err(Error::InvalidProblem(vec![if s.is_subset_of(t) {
                        Violation::EndpointOutsideFamily(s, t)
                    } else {
                        Violation::PairNotNested(s, t)
                    }]));
                }
            }
            IntervalIdeal::generated_by(&fam, &generators).sorted()
        }
        v => pairs(&ground, v, "ideal")?,
    };
    Ok(RawColoringProblem {
        labels: ground.labels().to_vec(),
        family,
        ideal,
    })
}

/// Reads any structure, validating coloring problems with `mode`.
pub fn parse_structure_with(text: &str, mode: ClosureCheck) -> Result<HopfStructure> {
    let obj = object(text)?;
    let tag = type_tag(&obj)?;
    if tag == SpeciesTag::ColoringProblem {
        return ColoringProblem::from_raw(raw_problem(&obj)?, mode).map(HopfStructure::ColoringProblem);
    }
    let ground = elements(&obj)?;
    Ok(match tag {
        SpeciesTag::ColoringProblem => unreachable!(),
        SpeciesTag::Graph => {
            let edges = label_pairs(&ground, field(&obj, "edges")?, "edges")?;
            HopfStructure::Graph(Graph::new(ground, edges)?)
        }
        SpeciesTag::Hypergraph => {
            let edges = subsets(&ground, field(&obj, "edges")?, "edges")?;
            let allow = obj.get("allow_singletons").and_then(Value::as_bool).unwrap_or(false);
            HopfStructure::Hypergraph(Hypergraph::with_singletons(ground, edges, allow)?)
        }
        SpeciesTag::Poset => {
            let rels = label_pairs(&ground, field(&obj, "relations")?, "relations")?;
            HopfStructure::Poset(Poset::from_relations(ground, rels)?)
        }
        SpeciesTag::Matroid => {
            let bases = subsets(&ground, field(&obj, "bases")?, "bases")?;
            HopfStructure::Matroid(Matroid::new(ground, bases)?)
        }
        SpeciesTag::Antimatroid => {
            let feasible = subsets(&ground, field(&obj, "feasible")?, "feasible")?;
            HopfStructure::Antimatroid(Antimatroid::new(ground, feasible)?)
        }
    })
}

fn label_pairs(ground: &GroundSet, v: &Value, what: &str) -> Result<Vec<(usize, usize)>> {
    let index = |l: &str| ground.index_of(l).ok_or_else(|| Error::UnknownLabel(l.to_string()));
    array(v, what)?
        .iter()
        .map(|p| match p.as_array().map(Vec::as_slice) {
            Some([Value::String(a), Value::String(b)]) => Ok((index(a)?, index(b)?)),
            _ => Err(parse_err(format!("{what} must be pairs of labels"))),
        })
        .collect()
}

pub fn parse_structure(text: &str) -> Result<HopfStructure> {
    parse_structure_with(text, ClosureCheck::Covers)
}

pub fn parse_coloring_problem(text: &str) -> Result<ColoringProblem> {
    match parse_structure(text)? {
        HopfStructure::ColoringProblem(c) => Ok(c),
        other => Err(parse_err(format!("expected a coloring-problem, found {}", other.tag()))),
    }
}

/// Sorted-label coordinates of a ground set.
struct Canon {
    labels: Vec<String>,
    map: Vec<usize>,
}

impl Canon {
    fn new(ground: &GroundSet) -> Self {
        Canon {
            labels: ground.sorted_labels(),
            map: ground.sorting_map(),
        }
    }

    fn set(&self, s: Subset) -> Subset {
        s.permute(&self.map)
    }

    fn show(&self, s: Subset) -> Value {
        Value::Array(s.iter().map(|i| Value::String(self.labels[i].clone())).collect())
    }

    fn sets(&self, it: impl IntoIterator<Item = Subset>) -> Value {
        let mut v: Vec<Subset> = it.into_iter().map(|s| self.set(s)).collect();
        v.sort_unstable();
        Value::Array(v.into_iter().map(|s| self.show(s)).collect())
    }

    fn pairs(&self, it: impl IntoIterator<Item = (Subset, Subset)>) -> Value {
        let mut v: Vec<(Subset, Subset)> = it.into_iter().map(|(s, t)| (self.set(s), self.set(t))).collect();
        v.sort_unstable();
        Value::Array(v.into_iter().map(|(s, t)| json!([self.show(s), self.show(t)])).collect())
    }
}

pub fn to_json(x: &HopfStructure) -> Value {
    let ground = x.ground();
    let canon = Canon::new(ground);
    let mut obj = Map::new();
    obj.insert("type".into(), x.tag().name().into());
    obj.insert("elements".into(), json!(canon.labels));
    match x {
        HopfStructure::ColoringProblem(c) => {
            obj.insert("family".into(), canon.sets(c.family().iter()));
            obj.insert("ideal".into(), canon.pairs(c.ideal().iter()));
        }
        HopfStructure::Graph(g) => {
            let mut edges: Vec<(String, String)> = g
                .edges()
                .map(|(u, v)| {
                    let (a, b) = (&ground.labels()[u], &ground.labels()[v]);
                    if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) }
                })
                .collect();
            edges.sort();
            obj.insert("edges".into(), json!(edges.into_iter().map(|(a, b)| [a, b]).collect::<Vec<_>>()));
        }
        HopfStructure::Hypergraph(h) => {
            obj.insert("edges".into(), canon.sets(h.edges()));
            if h.edges().any(|e| e.len() == 1) {
                obj.insert("allow_singletons".into(), true.into());
            }
        }
        HopfStructure::Poset(p) => {
            let l = ground.labels();
            let mut rels: Vec<[String; 2]> =
                p.covers().into_iter().map(|(a, b)| [l[a].clone(), l[b].clone()]).collect();
            rels.sort();
            obj.insert("relations".into(), json!(rels));
        }
        HopfStructure::Matroid(m) => {
            obj.insert("bases".into(), canon.sets(m.bases().iter().copied()));
        }
        HopfStructure::Antimatroid(a) => {
            obj.insert("feasible".into(), canon.sets(a.feasible().iter()));
        }
    }
    Value::Object(obj)
}

/// Canonical single-line JSON.
pub fn render_structure(x: &HopfStructure) -> String {
    to_json(x).to_string()
}

pub fn render_coloring_problem(c: &ColoringProblem) -> String {
    render_structure(&HopfStructure::ColoringProblem(c.clone()))
}
