//! Finite pieces of the Seifert surgery network around the trefoil.
//!
//! Vertices are integral surgeries, edges single twists along seiferters.
//! The network is infinite, so [`build`] stops after `radius` twists and
//! marks the vertices on the boundary as frontier.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classify::canonical_knot;
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::seiferter::{
    annular_pairs, seiferter_c, cm_family, twist, twisted_orbifold, AnnularPairInfo, KnotDesc,
    SeiferterDesc, SeiferterRole, SurgeryVertex,
};
use crate::sfs::{classify_triple, OrbifoldTriple, SfsClass};
use crate::sweep::map_ordered;
use crate::torus_surgery::{basic_seiferter_data, moser_classify, BasicSeiferterKind, TorusKnot};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    Seiferter,
    /// Registered for completeness; no annulus twists are generated.
    AnnularPair,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkVertex {
    pub id: String,
    pub knot: KnotDesc,
    pub slope: Fraction,
    /// False for twisted knots that no known result names.
    pub identity_known: bool,
    pub distance: u32,
    pub frontier: bool,
    pub class: Option<SfsClass>,
    pub orbifold: Option<OrbifoldTriple>,
    /// Every twisted description that reached this vertex.
    pub forms: Vec<KnotDesc>,
    /// Shortest twist word from a seed, one per form.
    pub provenance: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub annular_pairs: Vec<AnnularPairInfo>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NetworkEdge {
    pub from: String,
    pub to: String,
    pub seiferter: String,
    pub sign: i8,
    pub kind: EdgeKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkGraph {
    pub radius: u32,
    pub vertices: Vec<NetworkVertex>,
    pub edges: Vec<NetworkEdge>,
    pub warnings: Vec<String>,
}

impl NetworkGraph {
    pub fn vertex(&self, id: &str) -> Option<&NetworkVertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    /// Whether an edge along `seiferter` joins the two vertices.
    pub fn has_edge(&self, a: &str, b: &str, seiferter: &str) -> bool {
        self.edges.iter().any(|e| {
            e.seiferter == seiferter
                && ((e.from == a && e.to == b) || (e.from == b && e.to == a))
        })
    }

    /// Whether some vertex has this knot and integral slope.
    pub fn contains(&self, knot: &KnotDesc, slope: i64) -> bool {
        self.vertices
            .iter()
            .any(|v| v.knot == *knot && v.slope == Fraction::integer(slope))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Key {
    knot: KnotDesc,
    slope: i64,
}

impl Key {
    fn id(&self) -> String {
        format!("{}({})", self.knot, self.slope)
    }
}

/// Where a seiferter may be twisted along from the given form, and how many
/// twists along it the form already carries.
fn role_for(
    s: &SeiferterDesc,
    form: &KnotDesc,
    slope: i64,
) -> Result<Option<(SeiferterRole, i64)>> {
    match form {
        KnotDesc::Torus(_) => {
            let v = SurgeryVertex::integral(form.clone(), slope);
            Ok(s.role_at(&v)?.map(|r| (r, 0)))
        }
        KnotDesc::Twisted { base, seiferter, n } if *seiferter == s.name => {
            let lk2 = s
                .lk_with_knot
                .checked_mul(s.lk_with_knot)
                .ok_or(Error::Overflow("lk squared"))?;
            let base_slope = n
                .checked_mul(lk2)
                .and_then(|d| slope.checked_sub(d))
                .ok_or(Error::Overflow("untwisted slope"))?;
            let v = SurgeryVertex::integral((**base).clone(), base_slope);
            Ok(s.role_at(&v)?.map(|r| (r, *n)))
        }
        _ => Ok(None),
    }
}

struct Candidate {
    from: Key,
    to: Key,
    form: KnotDesc,
    word: String,
    seiferter: String,
    sign: i8,
}

struct Pending {
    distance: u32,
    forms: BTreeMap<KnotDesc, String>,
}

fn expand(
    key: &Key,
    forms: &BTreeMap<KnotDesc, String>,
    seiferters: &[SeiferterDesc],
) -> Result<(Vec<Candidate>, Vec<usize>)> {
    let mut out = Vec::new();
    let mut used = Vec::new();
    for (form, word) in forms {
        for (i, s) in seiferters.iter().enumerate() {
            if role_for(s, form, key.slope)?.is_none() {
                continue;
            }
            used.push(i);
            for sign in [1i8, -1] {
                let v = twist(&SurgeryVertex::integral(form.clone(), key.slope), s, sign as i64)?;
                let slope = v.integer_slope()?;
                let to = Key {
                    knot: canonical_knot(&v),
                    slope,
                };
                out.push(Candidate {
                    from: key.clone(),
                    to,
                    form: v.knot,
                    word: format!("{word} {}:{sign:+}", s.name),
                    seiferter: s.name.clone(),
                    sign,
                });
            }
        }
    }
    Ok((out, used))
}

fn annotate(
    forms: &BTreeMap<KnotDesc, String>,
    slope: i64,
    seiferters: &[SeiferterDesc],
) -> Result<(Option<SfsClass>, Option<OrbifoldTriple>)> {
    for form in forms.keys() {
        if let KnotDesc::Torus(k) = form {
            let (tri, class) = moser_classify(k, Fraction::integer(slope))?;
            return Ok((Some(class), Some(tri)));
        }
        for s in seiferters {
            if let Some((role, n)) = role_for(s, form, slope)? {
                let tri = twisted_orbifold(&role, n)?;
                let class = classify_triple(&tri)?;
                return Ok((Some(class), Some(tri)));
            }
        }
    }
    Ok((None, None))
}

/// Breadth-first closure of `seeds` under `±1` twists along `seiferters`,
/// up to `radius` twists. A seiferter is only used at surgeries for which it
/// is a seiferter: its recorded ambient surgeries (all slopes, for basic
/// ones) and the surgeries reached by twisting along it.
pub fn build(
    seeds: &[SurgeryVertex],
    seiferters: &[SeiferterDesc],
    radius: u32,
) -> Result<NetworkGraph> {
    if radius == 0 {
        return Err(Error::Network("radius must be at least 1".into()));
    }
    let mut seen: BTreeMap<Key, Pending> = BTreeMap::new();
    let mut frontier: BTreeSet<Key> = BTreeSet::new();
    for s in seeds {
        let slope = s.integer_slope()?;
        let key = Key {
            knot: canonical_knot(s),
            slope,
        };
        let entry = seen.entry(key.clone()).or_insert_with(|| Pending {
            distance: 0,
            forms: BTreeMap::new(),
        });
        entry.forms.entry(s.knot.clone()).or_insert_with(|| key.id());
        frontier.insert(key);
    }

    let mut edges: BTreeSet<NetworkEdge> = BTreeSet::new();
    let mut used = vec![false; seiferters.len()];
    for depth in 1..=radius {
        let layer: Vec<(Key, BTreeMap<KnotDesc, String>)> = frontier
            .iter()
            .map(|k| (k.clone(), seen[k].forms.clone()))
            .collect();
        let expanded = map_ordered(&layer, |(k, f)| expand(k, f, seiferters));
        let mut next = BTreeSet::new();
        for result in expanded {
            let (cands, hits) = result?;
            for i in hits {
                used[i] = true;
            }
            for c in cands {
                if c.from == c.to {
                    continue;
                }
                let (from, to, sign) = if c.from < c.to {
                    (&c.from, &c.to, c.sign)
                } else {
                    (&c.to, &c.from, -c.sign)
                };
                edges.insert(NetworkEdge {
                    from: from.id(),
                    to: to.id(),
                    seiferter: c.seiferter.clone(),
                    sign,
                    kind: EdgeKind::Seiferter,
                });
                let entry = seen.entry(c.to.clone()).or_insert_with(|| {
                    next.insert(c.to.clone());
                    Pending {
                        distance: depth,
                        forms: BTreeMap::new(),
                    }
                });
                if entry.distance == depth {
                    let w = entry.forms.entry(c.form).or_insert_with(|| c.word.clone());
                    if c.word < *w {
                        *w = c.word;
                    }
                }
            }
        }
        frontier = next;
    }

    let mut warnings = Vec::new();
    for (s, hit) in seiferters.iter().zip(&used) {
        if !hit {
            warnings.push(format!(
                "skipped {}: not a seiferter for any reached surgery",
                s.name
            ));
        }
    }

    let mut vertices = Vec::with_capacity(seen.len());
    for (key, p) in &seen {
        let (class, orbifold) = annotate(&p.forms, key.slope, seiferters)?;
        let annular = match key.knot {
            KnotDesc::Torus(k) if k == TorusKnot::trefoil() => annular_pairs(key.slope)?,
            _ => Vec::new(),
        };
        vertices.push(NetworkVertex {
            id: key.id(),
            knot: key.knot.clone(),
            slope: Fraction::integer(key.slope),
            identity_known: !matches!(key.knot, KnotDesc::Twisted { .. }),
            distance: p.distance,
            frontier: p.distance == radius,
            class,
            orbifold,
            forms: p.forms.keys().cloned().collect(),
            provenance: p.forms.values().cloned().collect(),
            annular_pairs: annular,
        });
    }
    Ok(NetworkGraph {
        radius,
        vertices,
        edges: edges.into_iter().collect(),
        warnings,
    })
}

/// Looks up `c_mu`, `c` or `c^k` for the trefoil.
pub fn seiferter_by_name(name: &str) -> Result<SeiferterDesc> {
    match name {
        "c_mu" => basic_seiferter_data(&TorusKnot::trefoil(), 0, BasicSeiferterKind::CMu),
        "c" => seiferter_c(),
        _ => {
            let k = name
                .strip_prefix("c^")
                .and_then(|e| e.parse::<i64>().ok())
                .ok_or_else(|| Error::UnknownSeiferter(name.to_string()))?;
            cm_family(k)
        }
    }
}

/// Seeds, seiferters and radius for one build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preset {
    pub seeds: Vec<SurgeryVertex>,
    pub seiferters: Vec<SeiferterDesc>,
    pub radius: u32,
}

impl Preset {
    pub fn build(&self) -> Result<NetworkGraph> {
        build(&self.seeds, &self.seiferters, self.radius)
    }
}

/// Twist-knot line through `(T, -1)` and the pretzel line through `(T, -6)`.
pub fn named_knots() -> Result<Preset> {
    let t = TorusKnot::trefoil();
    Ok(Preset {
        seeds: vec![SurgeryVertex::torus(t, -1), SurgeryVertex::torus(t, -6)],
        seiferters: ["c_mu", "c^-1", "c^-6", "c"]
            .iter()
            .map(|s| seiferter_by_name(s))
            .collect::<Result<_>>()?,
        radius: 2,
    })
}

/// The lines generated by `c^m`, `c^{m+1}`, `c^{m+2}` and `c_mu` around
/// `(T, m)`, `(T, m-1)`, `(T, m-2)`.
pub fn cm_lines(m: i64, radius: u32) -> Result<Preset> {
    let t = TorusKnot::trefoil();
    let ovf = || Error::Overflow("preset slope");
    let mut seiferters = vec![seiferter_by_name("c_mu")?];
    for j in 0..3 {
        seiferters.push(cm_family(m.checked_add(j).ok_or_else(ovf)?)?);
    }
    let seeds = (0..3)
        .map(|j| Ok(SurgeryVertex::torus(t, m.checked_sub(j).ok_or_else(ovf)?)))
        .collect::<Result<_>>()?;
    Ok(Preset {
        seeds,
        seiferters,
        radius,
    })
}

/// A network description as read from a config file.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkConfig {
    pub preset: Option<String>,
    pub m: Option<i64>,
    pub radius: Option<u32>,
    #[serde(default)]
    pub seeds: Vec<i64>,
    #[serde(default)]
    pub seiferters: Vec<String>,
}

impl NetworkConfig {
    /// Seeds are integral slopes on the trefoil.
    pub fn to_preset(&self) -> Result<Preset> {
        let mut preset = match self.preset.as_deref() {
            Some("named-knots") => named_knots()?,
            Some("cm-lines") => cm_lines(self.m.unwrap_or(0), 2)?,
            Some(other) => return Err(Error::Network(format!("unknown preset `{other}`"))),
            None => Preset {
                seeds: Vec::new(),
                seiferters: Vec::new(),
                radius: 2,
            },
        };
        let t = TorusKnot::trefoil();
        preset
            .seeds
            .extend(self.seeds.iter().map(|&s| SurgeryVertex::torus(t, s)));
        for name in &self.seiferters {
            let s = seiferter_by_name(name)?;
            if !preset.seiferters.iter().any(|x| x.name == s.name) {
                preset.seiferters.push(s);
            }
        }
        if let Some(r) = self.radius {
            preset.radius = r;
        }
        if preset.seeds.is_empty() {
            return Err(Error::Network("no seed surgeries".into()));
        }
        Ok(preset)
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz text, in the graph's canonical order.
pub fn export_dot(g: &NetworkGraph) -> String {
    let mut out = String::from("digraph ssn {\n");
    for v in &g.vertices {
        let style = if v.frontier { ", style=dashed" } else { "" };
        let _ = writeln!(
            out,
            "  \"{}\" [label=\"{}\"{style}];",
            dot_escape(&v.id),
            dot_escape(&v.id)
        );
    }
    for e in &g.edges {
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{},{:+}\"];",
            dot_escape(&e.from),
            dot_escape(&e.to),
            dot_escape(&e.seiferter),
            e.sign
        );
    }
    out.push_str("}\n");
    out
}

/// Pretty JSON with object keys sorted.
pub fn export_json(g: &NetworkGraph) -> Result<String> {
    let value = serde_json::to_value(g).map_err(|e| Error::Network(e.to_string()))?;
    let mut s = serde_json::to_string_pretty(&value).map_err(|e| Error::Network(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn load_json(text: &str) -> Result<NetworkGraph> {
    serde_json::from_str(text).map_err(|e| Error::Network(e.to_string()))
}
