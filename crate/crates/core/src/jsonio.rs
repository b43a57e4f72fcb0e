//! Stable JSON shapes for diagrams, catalog entries, verdicts and
//! realizations. Rationals are serialized as `"p/q"` strings (plain `"p"`
//! when integral) so nothing is lost to floating point.

use std::collections::BTreeMap;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::classify::{SphericalCheck, SphericalDiagram, Verdict};
use crate::error::Error;
use crate::grammar::format_diagram;
use crate::linalg::Q;
use crate::localmodels::LocalEntry;
use crate::realize::Realization;
use crate::rootsys::{ComponentKind, DynkinDiagram};

pub fn q_to_string(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn q_from_string(s: &str) -> Result<Q, Error> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<num_bigint::BigInt>()
            .map_err(|_| Error::Parse(format!("bad rational {s:?}")))
    };
    match s.split_once('/') {
        Some((p, q)) => Ok(Q::new(parse_int(p)?, parse_int(q)?)),
        None => Ok(Q::from_integer(parse_int(s)?)),
    }
}

fn coords_map(coords: &[Q]) -> BTreeMap<String, String> {
    coords
        .iter()
        .enumerate()
        .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
        .map(|(i, x)| (i.to_string(), q_to_string(x)))
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagramJson {
    pub family: String,
    pub rank: u32,
    pub twist: u8,
    pub cartan: Vec<Vec<i64>>,
}

pub fn host_json(d: &DynkinDiagram) -> DiagramJson {
    let (rank, twist) = if d.components().len() == 1 {
        match d.components()[0].kind {
            ComponentKind::Finite(_, r) => (r, 0),
            ComponentKind::Affine(_, r, t) => (r, t),
        }
    } else {
        (d.n() as u32, 0)
    };
    DiagramJson { family: d.name(), rank, twist, cartan: d.cartan().to_vec() }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogEntryJson {
    pub name: String,
    pub rank: u32,
    pub support: String,
    pub homogeneous: bool,
    pub factor: String,
    pub omega: Option<BTreeMap<String, String>>,
    pub decorated: Vec<usize>,
    #[serde(rename = "nD")]
    pub n_d: u32,
}

pub fn catalog_entry_json(e: &LocalEntry) -> CatalogEntryJson {
    CatalogEntryJson {
        name: e.name.to_string(),
        rank: e.support.n() as u32,
        support: e.support.name(),
        homogeneous: e.homogeneous,
        factor: e.factor.to_string(),
        omega: e.omega.as_deref().map(coords_map),
        decorated: e.decorated.clone(),
        n_d: e.n_d,
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerdictJson {
    pub valid: bool,
    pub failed_condition: Option<String>,
    pub witness: String,
}

pub fn verdict_json(v: &Verdict) -> VerdictJson {
    VerdictJson {
        valid: v.valid,
        failed_condition: v.failed.map(|f| f.to_string()),
        witness: v.witness.clone(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SideJson {
    pub nodes: Vec<usize>,
    pub factor: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagramSpecJson {
    pub spec: String,
    pub host: DiagramJson,
    pub circled: Vec<usize>,
    pub side1: SideJson,
    pub side2: SideJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictJson>,
}

pub fn diagram_json(d: &SphericalDiagram, check: Option<&SphericalCheck>) -> DiagramSpecJson {
    DiagramSpecJson {
        spec: format_diagram(d),
        host: host_json(&d.host),
        circled: d.circled.clone(),
        side1: SideJson { nodes: d.side1.nodes.clone(), factor: d.side1.factor.to_string() },
        side2: SideJson { nodes: d.side2.nodes.clone(), factor: d.side2.factor.to_string() },
        verdict: check.map(|c| verdict_json(&c.verdict)),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RealizationJson {
    #[serde(rename = "X1")]
    pub x1: BTreeMap<String, String>,
    #[serde(rename = "X2")]
    pub x2: BTreeMap<String, String>,
    pub c: String,
    pub omega_pairings: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_roots: Option<BTreeMap<String, String>>,
}

pub fn realization_json(r: &Realization) -> RealizationJson {
    RealizationJson {
        x1: coords_map(&r.x1.coords),
        x2: coords_map(&r.x2.coords),
        c: q_to_string(&r.c),
        omega_pairings: coords_map(&r.omega_pairings),
        omega_roots: r.omega_roots.as_deref().map(coords_map),
    }
}
