//! Constructive generation of candidate quintuples by gluing two local
//! models: along a shared undecorated subdiagram (minimal gluing), by
//! stitching disjoint supports with up to four edges between decorated
//! nodes, or by closing two inhomogeneous chains into a cycle. Candidates
//! are filtered through `check_primitive`; the resulting valid set is an
//! independent route to everything the exhaustive enumerator finds.

use std::collections::BTreeMap;
use std::sync::Arc;

use itertools::Itertools;

use crate::classify::{canonicalize_primitive, check_primitive, PrimitiveDiagram, Side, Verdict};
use crate::localmodels::{catalog, LocalEntry};
use crate::rootsys::{iso, DynkinDiagram};

/// Bond types occurring between adjacent nodes of finite and affine
/// diagrams, as `(a[i][j], a[j][i])` pairs.
const BONDS: [(i64, i64); 8] =
    [(-1, -1), (-1, -2), (-2, -1), (-1, -3), (-3, -1), (-2, -2), (-1, -4), (-4, -1)];

/// One raw gluing outcome: the glued matrix, the decorated sides on it, and
/// (when the matrix is a genuine finite/affine diagram) the checked verdict.
#[derive(Debug, Clone)]
pub struct GlueCandidate {
    pub label: String,
    pub gcm: Vec<Vec<i64>>,
    pub side1: Side,
    pub side2: Side,
    /// Classified host, when the glued matrix is finite or affine type.
    pub host: Option<Arc<DynkinDiagram>>,
    /// Checker verdict; absent when the host itself is invalid or out of scope.
    pub verdict: Option<Verdict>,
}

impl GlueCandidate {
    pub fn is_valid(&self) -> bool {
        self.verdict.as_ref().map(|v| v.valid).unwrap_or(false)
    }

    /// The valid quintuple, when there is one.
    pub fn diagram(&self) -> Option<PrimitiveDiagram> {
        let host = self.host.clone()?;
        Some(PrimitiveDiagram::new(host, self.side1.clone(), self.side2.clone()))
    }
}

fn finish(label: String, gcm: Vec<Vec<i64>>, side1: Side, side2: Side) -> GlueCandidate {
    let host = DynkinDiagram::from_cartan(gcm.clone()).ok().map(Arc::new);
    let verdict = host.as_ref().and_then(|h| {
        let d = PrimitiveDiagram::new(h.clone(), side1.clone(), side2.clone());
        check_primitive(&d).ok().map(|c| c.verdict)
    });
    GlueCandidate { label, gcm, side1, side2, host, verdict }
}

/// Two raw candidates are the same gluing when some matrix isomorphism
/// matches the decorated sides (in order or swapped).
fn same_candidate(a: &GlueCandidate, b: &GlueCandidate) -> bool {
    if a.gcm.len() != b.gcm.len() {
        return false;
    }
    let sorted = |nodes: &[usize], m: &[usize]| {
        let mut v: Vec<usize> = nodes.iter().map(|&x| m[x]).collect();
        v.sort_unstable();
        v
    };
    for m in iso::isomorphisms(&a.gcm, &b.gcm, false) {
        let s1 = sorted(&a.side1.nodes, &m);
        let s2 = sorted(&a.side2.nodes, &m);
        if a.side1.factor == b.side1.factor
            && a.side2.factor == b.side2.factor
            && s1 == b.side1.nodes
            && s2 == b.side2.nodes
        {
            return true;
        }
        if a.side1.factor == b.side2.factor
            && a.side2.factor == b.side1.factor
            && s1 == b.side2.nodes
            && s2 == b.side1.nodes
        {
            return true;
        }
    }
    false
}

fn dedup(cands: Vec<GlueCandidate>) -> Vec<GlueCandidate> {
    let mut kept: Vec<GlueCandidate> = Vec::new();
    for c in cands {
        if !kept.iter().any(|k| same_candidate(k, &c)) {
            kept.push(c);
        }
    }
    kept
}

/// Nonempty unions of connected components of `support ∖ decorated`,
/// returned as sorted node lists in support-local indices.
fn undecorated_unions(e: &LocalEntry) -> Vec<Vec<usize>> {
    let ambient: Vec<usize> =
        (0..e.support.n()).filter(|i| !e.decorated.contains(i)).collect();
    if ambient.is_empty() {
        return vec![];
    }
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; e.support.n()];
    for &s in &ambient {
        if seen[s] {
            continue;
        }
        let comp = e.support.connected_closure(&[s], &ambient);
        for &x in &comp {
            seen[x] = true;
        }
        comps.push(comp);
    }
    let mut unions = Vec::new();
    for k in 1..=comps.len() {
        for subset in comps.iter().combinations(k) {
            let mut u: Vec<usize> = subset.into_iter().flatten().copied().collect();
            u.sort_unstable();
            unions.push(u);
        }
    }
    unions
}

/// Glue `e1` and `e2` along identifications `u1 ↔ u2` via `phi`
/// (sub1-local → sub2-local), optionally adding `extra` bonds between
/// decorated nodes `(e1-local, e2-local, aij, aji)`.
fn glue_matrices(
    e1: &LocalEntry,
    e2: &LocalEntry,
    u1: &[usize],
    u2: &[usize],
    phi: &[usize],
    extra: &[(usize, usize, i64, i64)],
) -> Option<(Vec<Vec<i64>>, Vec<usize>)> {
    let n1 = e1.support.n();
    let a1 = e1.support.cartan();
    let a2 = e2.support.cartan();
    // map2: e2-local → glued index
    let mut map2 = vec![usize::MAX; e2.support.n()];
    for (sub_local, &x2) in u2.iter().enumerate() {
        let sub1_local = phi.iter().position(|&y| y == sub_local).expect("phi is a bijection");
        map2[x2] = u1[sub1_local];
    }
    let mut next = n1;
    for x2 in 0..e2.support.n() {
        if map2[x2] == usize::MAX {
            map2[x2] = next;
            next += 1;
        }
    }
    let total = next;
    let mut g = vec![vec![0i64; total]; total];
    for (i, gi) in g.iter_mut().enumerate() {
        gi[i] = 2;
    }
    for i in 0..n1 {
        for j in 0..n1 {
            if i != j {
                g[i][j] = a1[i][j];
            }
        }
    }
    for i in 0..e2.support.n() {
        for j in 0..e2.support.n() {
            if i == j {
                continue;
            }
            let (gi, gj) = (map2[i], map2[j]);
            if gi < n1 && gj < n1 {
                // overlap block: must agree with side 1
                if g[gi][gj] != a2[i][j] {
                    return None;
                }
            } else {
                g[gi][gj] = a2[i][j];
            }
        }
    }
    for &(d1, d2, aij, aji) in extra {
        let (i, j) = (d1, map2[d2]);
        if g[i][j] != 0 || i == j {
            return None;
        }
        g[i][j] = aij;
        g[j][i] = aji;
    }
    Some((g, map2))
}

fn sides_of(e1: &LocalEntry, e2: &LocalEntry, map2: &[usize]) -> (Side, Side) {
    let s1 = Side::new(e1.decorated.clone(), e1.factor);
    let s2 = Side::new(e2.decorated.iter().map(|&x| map2[x]).collect(), e2.factor);
    (s1, s2)
}

/// More than two multiple bonds never occur in a finite or affine diagram.
fn too_many_multibonds(g: &[Vec<i64>]) -> bool {
    let mut count = 0;
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            if g[i][j] != 0 && (g[i][j], g[j][i]) != (-1, -1) {
                count += 1;
            }
        }
    }
    count > 2
}

/// Minimal gluings of the two entries along a common copy of `s0p`.
/// Returns the empty list (with no candidates) when either entry has no
/// undecorated component union of that type.
pub fn glue_along(s0p: &DynkinDiagram, e1: &LocalEntry, e2: &LocalEntry) -> Vec<GlueCandidate> {
    let mut out = Vec::new();
    for u1 in undecorated_unions(e1) {
        let (sub1, emb1) = e1.support.induced(&u1).expect("subdiagram");
        if !sub1.is_isomorphic(s0p) {
            continue;
        }
        for u2 in undecorated_unions(e2) {
            let (sub2, emb2) = e2.support.induced(&u2).expect("subdiagram");
            for phi in sub1.isomorphisms_to(&sub2) {
                if let Some((g, map2)) = glue_matrices(e1, e2, &emb1, &emb2, &phi, &[]) {
                    let (s1, s2) = sides_of(e1, e2, &map2);
                    let label = format!("{} ∪ {} along {}", e1.name, e2.name, s0p.name());
                    out.push(finish(label, g, s1, s2));
                }
            }
        }
    }
    dedup(out)
}

/// Disjoint supports stitched with exactly `n_edges` bonds between decorated
/// nodes (the `N = 0..4` subcases).
pub fn glue_edges(n_edges: usize, e1: &LocalEntry, e2: &LocalEntry) -> Vec<GlueCandidate> {
    if n_edges > 4 {
        return vec![];
    }
    let pairs: Vec<(usize, usize)> = e1
        .decorated
        .iter()
        .flat_map(|&a| e2.decorated.iter().map(move |&b| (a, b)))
        .collect();
    if n_edges > pairs.len() {
        return vec![];
    }
    let mut out = Vec::new();
    for chosen in pairs.iter().combinations(n_edges) {
        let mut assignments: Vec<Vec<(i64, i64)>> = vec![vec![]];
        for _ in 0..n_edges {
            assignments = assignments
                .into_iter()
                .flat_map(|base| {
                    BONDS.iter().map(move |&b| {
                        let mut v = base.clone();
                        v.push(b);
                        v
                    })
                })
                .collect();
        }
        for bonds in assignments {
            let extra: Vec<(usize, usize, i64, i64)> = chosen
                .iter()
                .zip(&bonds)
                .map(|(&&(a, b), &(x, y))| (a, b, x, y))
                .collect();
            if let Some((g, map2)) = glue_matrices(e1, e2, &[], &[], &[], &extra) {
                if too_many_multibonds(&g) {
                    continue;
                }
                let (s1, s2) = sides_of(e1, e2, &map2);
                let label = format!("{} ∪ {} with {} edge(s)", e1.name, e2.name, n_edges);
                out.push(finish(label, g, s1, s2));
            }
        }
    }
    dedup(out)
}

/// Gluings along the full undecorated parts with one closing bond between
/// decorated nodes (the cycle-producing case).
pub fn glue_cycle(e1: &LocalEntry, e2: &LocalEntry) -> Vec<GlueCandidate> {
    if e1.decorated.is_empty() || e2.decorated.is_empty() {
        return vec![];
    }
    let full1: Vec<usize> = (0..e1.support.n()).filter(|i| !e1.decorated.contains(i)).collect();
    let full2: Vec<usize> = (0..e2.support.n()).filter(|i| !e2.decorated.contains(i)).collect();
    if full1.is_empty() || full2.is_empty() {
        return vec![];
    }
    let (sub1, emb1) = e1.support.induced(&full1).expect("subdiagram");
    let (sub2, emb2) = e2.support.induced(&full2).expect("subdiagram");
    let mut out = Vec::new();
    for phi in sub1.isomorphisms_to(&sub2) {
        for &a in &e1.decorated {
            for &b in &e2.decorated {
                for &(x, y) in &BONDS {
                    if let Some((g, map2)) = glue_matrices(e1, e2, &emb1, &emb2, &phi, &[(a, b, x, y)]) {
                        if too_many_multibonds(&g) {
                            continue;
                        }
                        let (s1, s2) = sides_of(e1, e2, &map2);
                        let label = format!("{} ∪ {} closed into a cycle", e1.name, e2.name);
                        out.push(finish(label, g, s1, s2));
                    }
                }
            }
        }
    }
    dedup(out)
}

/// The gluing-data table: isomorphism type of the shared part → families of
/// local models that can contribute, with factors suppressed. Keys and
/// values are family strings at suppressed factor (`b` covers `2b`, `d`
/// covers `1/2d`, `b3'` covers `1/2b3'`).
pub fn gluing_table(max_rank: u32) -> BTreeMap<String, Vec<String>> {
    let mut t: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut put = |k: &str, v: Vec<String>| {
        t.insert(k.to_string(), v);
    };
    let mut a1_row: Vec<String> = vec!["a3".into(), "a2*".into(), "b2".into()];
    for n in 3..=max_rank {
        a1_row.push(format!("c{n}"));
    }
    a1_row.push("d3".into());
    a1_row.push("g2".into());
    a1_row.push("c2*".into());
    put("A1", a1_row);
    put("A2", vec!["a4".into(), "a3*".into(), "b3'".into()]);
    put("A3", vec!["a5".into(), "a4*".into(), "d4".into()]);
    for m in 4..=max_rank {
        put(&format!("A{m}"), vec![format!("a{}", m + 2), format!("a{}*", m + 1)]);
    }
    put("B2", vec!["b3".into(), "c4".into(), "c3*".into()]);
    put("B3", vec!["b4".into(), "f4".into()]);
    for m in 4..=max_rank {
        put(&format!("B{m}"), vec![format!("b{}", m + 1)]);
    }
    for m in 3..=max_rank {
        put(&format!("C{m}"), vec![format!("c{}", m + 2), format!("c{}*", m + 1)]);
    }
    put("D4", vec!["d5".into()]);
    for m in 5..=max_rank {
        put(&format!("D{m}"), vec![format!("d{}", m + 1)]);
    }
    put("A1xA1", vec!["c3".into(), "d3".into()]);
    put("A1xB2", vec!["c4".into()]);
    for m in 3..=max_rank {
        put(&format!("A1xC{m}"), vec![format!("c{}", m + 2)]);
    }
    t
}

/// Canonical type names of every undecorated component union of an entry
/// (the shared parts the entry can be glued along).
pub fn undecorated_types(e: &LocalEntry) -> Vec<String> {
    let mut out: Vec<String> = undecorated_unions(e)
        .into_iter()
        .map(|u| e.support.induced(&u).expect("subdiagram").0.canonical_name())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Family string of an entry with the factor suppressed, for comparison
/// against the gluing-data table.
pub fn suppressed_family(e: &LocalEntry) -> String {
    use crate::localmodels::LocalName as N;
    match e.name {
        N::A1 | N::TwoA1 => "a1".into(),
        N::A(n) => format!("a{n}"),
        N::B(n) | N::TwoB(n) => format!("b{n}"),
        N::C(n) => format!("c{n}"),
        N::HalfD(n) | N::D(n) => format!("d{n}"),
        N::HalfD2 | N::D2 => "d2".into(),
        N::HalfD3 | N::D3 => "d3".into(),
        N::F4 => "f4".into(),
        N::G2 | N::TwoG2 => "g2".into(),
        N::HalfB3Prime | N::B3Prime => "b3'".into(),
        N::BoldA0 => "a0*".into(),
        N::BoldA(n) => format!("a{n}*"),
        N::BoldC(n) => format!("c{n}*"),
    }
}

/// Every valid quintuple obtainable by gluing, grouped by the canonical name
/// of the glued host and mapped onto the standard instance of that host.
/// This is the full oracle union: minimal gluings over every shared type,
/// the `N = 0..4` edge stitchings, and the cycle closures.
pub fn oracle_by_host(max_support_rank: u32) -> BTreeMap<String, Vec<PrimitiveDiagram>> {
    let entries = catalog(max_support_rank);
    let mut candidates: Vec<GlueCandidate> = Vec::new();
    for (i, e1) in entries.iter().enumerate() {
        for e2 in entries.iter().skip(i) {
            // minimal gluings along every shared type the pair admits
            for u1 in undecorated_unions(e1) {
                let (sub1, _) = e1.support.induced(&u1).expect("subdiagram");
                candidates.extend(glue_along(&sub1, e1, e2));
            }
            for n_edges in 0..=4 {
                candidates.extend(glue_edges(n_edges, e1, e2));
            }
            candidates.extend(glue_cycle(e1, e2));
        }
    }
    let mut by_host: BTreeMap<String, Vec<PrimitiveDiagram>> = BTreeMap::new();
    let mut standard: BTreeMap<String, (Arc<DynkinDiagram>, Vec<Vec<usize>>)> = BTreeMap::new();
    for c in candidates.into_iter().filter(|c| c.is_valid()) {
        let host = c.host.clone().expect("valid candidate has a host");
        let key = host.canonical_name();
        let (std_host, auts) = standard
            .entry(key.clone())
            .or_insert_with(|| {
                let h = Arc::new(crate::rootsys::canonical_instance(&host));
                let a = h.automorphisms();
                (h, a)
            })
            .clone();
        let m = host
            .isomorphisms_to(&std_host)
            .into_iter()
            .next()
            .expect("same canonical name implies isomorphic");
        let remap = |s: &Side| Side::new(s.nodes.iter().map(|&x| m[x]).collect(), s.factor);
        let d = PrimitiveDiagram::new(std_host.clone(), remap(&c.side1), remap(&c.side2));
        let d = canonicalize_primitive(&d, &auts);
        let list = by_host.entry(key).or_default();
        if !list.contains(&d) {
            list.push(d);
        }
    }
    for list in by_host.values_mut() {
        list.sort();
    }
    by_host
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localmodels::{catalog, LocalName};
    use crate::rootsys::Series;

    fn entry(name: LocalName) -> LocalEntry {
        catalog(8).into_iter().find(|e| e.name == name).unwrap()
    }

    #[test]
    fn four_edges_give_the_four_cycle() {
        let d2 = entry(LocalName::D2);
        let cands = glue_edges(4, &d2, &d2);
        let valid: Vec<&GlueCandidate> = cands.iter().filter(|c| c.is_valid()).collect();
        assert_eq!(valid.len(), 1);
        assert_eq!(valid[0].host.as_ref().unwrap().name(), "A3~1");
    }

    #[test]
    fn three_edges_give_the_twisted_string() {
        let d2 = entry(LocalName::D2);
        let cands = glue_edges(3, &d2, &d2);
        let valid: Vec<&GlueCandidate> = cands.iter().filter(|c| c.is_valid()).collect();
        assert_eq!(valid.len(), 1);
        assert_eq!(valid[0].host.as_ref().unwrap().name(), "D4~2");
    }

    #[test]
    fn cycle_closure_gives_bold_pairs() {
        let a3 = entry(LocalName::BoldA(3));
        let cands = glue_cycle(&a3, &a3);
        let valid: Vec<&GlueCandidate> = cands.iter().filter(|c| c.is_valid()).collect();
        assert_eq!(valid.len(), 1);
        // two a3* chains share their full A2 tails; the closing edge makes the 4-cycle
        assert_eq!(valid[0].host.as_ref().unwrap().name(), "A3~1");
    }

    #[test]
    fn a2_gluing_episode_counts() {
        let a4 = entry(LocalName::A(4));
        let ba3 = entry(LocalName::BoldA(3));
        let b3p = entry(LocalName::B3Prime);
        let s0p = DynkinDiagram::host(Series::A, 2, None).unwrap();
        let counts: Vec<(&str, usize, usize)> = vec![
            ("a4+a4", glue_along(&s0p, &a4, &a4).len(), 1),
            ("a4+a3*", glue_along(&s0p, &a4, &ba3).len(), 1),
            ("a3*+a3*", glue_along(&s0p, &ba3, &ba3).len(), 2),
            ("a4+b3'", glue_along(&s0p, &a4, &b3p).len(), 1),
            ("a3*+b3'", glue_along(&s0p, &ba3, &b3p).len(), 2),
            ("b3'+b3'", glue_along(&s0p, &b3p, &b3p).len(), 2),
        ];
        for (label, got, want) in counts {
            assert_eq!(got, want, "{label}");
        }
    }
}
