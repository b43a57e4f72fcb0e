//! Decision procedures for primitive and general spherical diagrams: the
//! checkers, the reduction to a primitive core, and canonical forms under
//! host automorphisms and the side swap.

pub mod enumerate;
pub mod glue;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::linalg::{mat_vec, qi, Q};
use crate::localmodels::{self, Factor, Recognition};
use crate::rootsys::DynkinDiagram;

/// One side of a diagram: its decorated node set and factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Side {
    pub nodes: Vec<usize>,
    pub factor: Factor,
}

impl Side {
    pub fn new(mut nodes: Vec<usize>, factor: Factor) -> Side {
        nodes.sort_unstable();
        nodes.dedup();
        Side { nodes, factor }
    }

    pub fn empty() -> Side {
        Side { nodes: vec![], factor: Factor::Inhom }
    }
}

/// The quintuple `(S, S1', c1, S2', c2)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimitiveDiagram {
    pub host: Arc<DynkinDiagram>,
    pub side1: Side,
    pub side2: Side,
}

/// The sextuple `(S, S^c, S1', c1, S2', c2)`; circled nodes are the roots
/// positive on the whole momentum segment.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SphericalDiagram {
    pub host: Arc<DynkinDiagram>,
    pub circled: Vec<usize>,
    pub side1: Side,
    pub side2: Side,
}

impl PrimitiveDiagram {
    pub fn new(host: Arc<DynkinDiagram>, side1: Side, side2: Side) -> PrimitiveDiagram {
        PrimitiveDiagram { host, side1, side2 }
    }

    pub fn swapped(&self) -> PrimitiveDiagram {
        PrimitiveDiagram {
            host: self.host.clone(),
            side1: self.side2.clone(),
            side2: self.side1.clone(),
        }
    }
}

impl SphericalDiagram {
    pub fn new(host: Arc<DynkinDiagram>, circled: Vec<usize>, side1: Side, side2: Side) -> SphericalDiagram {
        let mut circled = circled;
        circled.sort_unstable();
        circled.dedup();
        SphericalDiagram { host, circled, side1, side2 }
    }

    pub fn primitive_part(&self) -> PrimitiveDiagram {
        PrimitiveDiagram {
            host: self.host.clone(),
            side1: self.side1.clone(),
            side2: self.side2.clone(),
        }
    }
}

/// Which condition a rejected diagram failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum FailCode {
    ClosureCover,
    LocalRecognition,
    WeightSum3a,
    Pairing3b,
    Colabel3c,
    Integrality,
    Divisibility,
}

impl fmt::Display for FailCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FailCode::ClosureCover => "closure-cover",
            FailCode::LocalRecognition => "local-recognition",
            FailCode::WeightSum3a => "3a-weight-sum",
            FailCode::Pairing3b => "3b-pairing",
            FailCode::Colabel3c => "3c-colabel",
            FailCode::Integrality => "integrality",
            FailCode::Divisibility => "divisibility",
        };
        write!(f, "{s}")
    }
}

/// Outcome of a check: valid, or the first violated condition with a
/// human-readable witness.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub valid: bool,
    pub failed: Option<FailCode>,
    pub witness: String,
}

impl Verdict {
    fn ok(witness: impl Into<String>) -> Verdict {
        Verdict { valid: true, failed: None, witness: witness.into() }
    }

    fn fail(code: FailCode, witness: impl Into<String>) -> Verdict {
        Verdict { valid: false, failed: Some(code), witness: witness.into() }
    }
}

/// A recognized side: its full support in host indices, the catalog entry,
/// and the embedding (entry-local index → host index).
#[derive(Debug, Clone)]
pub struct RecognizedSide {
    pub support: Vec<usize>,
    pub recognition: Recognition,
}

impl RecognizedSide {
    pub fn entry(&self) -> &localmodels::LocalEntry {
        &self.recognition.entry
    }

    /// Embedding entry-local index → host index.
    pub fn host_embedding(&self) -> Vec<usize> {
        self.recognition.embedding.iter().map(|&local| self.support[local]).collect()
    }

    /// Weight in host root coordinates (homogeneous entries).
    pub fn omega_host(&self, host_n: usize) -> Option<Vec<Q>> {
        localmodels::omega_in_host(self.entry(), &self.host_embedding(), host_n)
    }

    /// Host index of the unique decorated node (inhomogeneous, nonempty).
    pub fn alpha_host(&self) -> Option<usize> {
        self.entry().single_decorated().map(|d| self.host_embedding()[d])
    }
}

/// Result of `check_primitive`: the verdict plus, whenever recognition got
/// that far, the recognized sides for reuse by the realization step.
#[derive(Debug, Clone)]
pub struct PrimitiveCheck {
    pub verdict: Verdict,
    pub sides: Option<(RecognizedSide, RecognizedSide)>,
}

fn validate_host_scope(host: &DynkinDiagram) -> Result<(), Error> {
    let affine = host.components().iter().filter(|c| c.kind.is_affine()).count();
    let finite = host.components().len() - affine;
    if affine > 0 && finite > 0 {
        return Err(Error::HostScope("mixed finite x affine products are out of scope".into()));
    }
    if affine > 2 {
        return Err(Error::HostScope("products of more than two affine factors are out of scope".into()));
    }
    Ok(())
}

fn validate_sides(host: &DynkinDiagram, sides: &[&Side], circled: &[usize]) -> Result<(), Error> {
    let n = host.n();
    let mut seen = vec![false; n];
    for &x in circled {
        if x >= n {
            return Err(Error::BadInput(format!("node {x} out of range")));
        }
        if seen[x] {
            return Err(Error::BadInput(format!("node {x} listed twice")));
        }
        seen[x] = true;
    }
    for side in sides {
        if side.nodes.len() > 2 {
            return Err(Error::BadInput("a decorated set has more than two nodes".into()));
        }
        for &x in &side.nodes {
            if x >= n {
                return Err(Error::BadInput(format!("node {x} out of range")));
            }
            if seen[x] {
                return Err(Error::BadInput(format!("node {x} appears in two parts of the diagram")));
            }
            seen[x] = true;
        }
        if side.nodes.is_empty() && side.factor != Factor::Inhom {
            return Err(Error::BadInput("an empty side must carry factor i".into()));
        }
    }
    Ok(())
}

fn complement(n: usize, drop: &[usize]) -> Vec<usize> {
    (0..n).filter(|x| !drop.contains(x)).collect()
}

fn recognize_side(host: &DynkinDiagram, side: &Side, other: &Side) -> Result<RecognizedSide, Verdict> {
    let ambient = complement(host.n(), &other.nodes);
    let support = host.connected_closure(&side.nodes, &ambient);
    let (sub, emb) = host
        .induced(&support)
        .map_err(|_| Verdict::fail(FailCode::LocalRecognition, "support is not a Dynkin diagram"))?;
    let local_sprime: Vec<usize> = side
        .nodes
        .iter()
        .map(|&g| emb.iter().position(|&x| x == g).expect("decorated node lies in its closure"))
        .collect();
    match localmodels::recognize(&sub, &local_sprime, side.factor) {
        Some(recognition) => Ok(RecognizedSide { support: emb, recognition }),
        None => Err(Verdict::fail(
            FailCode::LocalRecognition,
            format!(
                "({}, {{{}}}, c={}) is not a local diagram",
                sub.name(),
                side.nodes.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                side.factor
            ),
        )),
    }
}

fn fmt_q(x: &Q) -> String {
    x.to_string()
}

/// Core of the primitive check, also usable on the (possibly empty) core of
/// a spherical diagram. `host` must already be scope-validated.
fn check_primitive_core(host: &DynkinDiagram, side1: &Side, side2: &Side) -> PrimitiveCheck {
    // (1) cover: S1 ∪ S2 = S
    let s1 = host.connected_closure(&side1.nodes, &complement(host.n(), &side2.nodes));
    let s2 = host.connected_closure(&side2.nodes, &complement(host.n(), &side1.nodes));
    let mut union: Vec<usize> = s1.iter().chain(s2.iter()).copied().collect();
    union.sort_unstable();
    union.dedup();
    if union.len() != host.n() {
        return PrimitiveCheck {
            verdict: Verdict::fail(
                FailCode::ClosureCover,
                format!("S1 ∪ S2 covers only {} of {} nodes", union.len(), host.n()),
            ),
            sides: None,
        };
    }

    // (2) both sides must be local diagrams
    let r1 = match recognize_side(host, side1, side2) {
        Ok(r) => r,
        Err(v) => return PrimitiveCheck { verdict: v, sides: None },
    };
    let r2 = match recognize_side(host, side2, side1) {
        Ok(r) => r,
        Err(v) => return PrimitiveCheck { verdict: v, sides: None },
    };

    // (3) the weight condition, by homogeneity pattern
    let verdict = match (r1.entry().homogeneous, r2.entry().homogeneous) {
        (true, true) => {
            let w1 = r1.omega_host(host.n()).expect("homogeneous side has a weight");
            let w2 = r2.omega_host(host.n()).expect("homogeneous side has a weight");
            let sum: Vec<Q> = w1.iter().zip(&w2).map(|(a, b)| a + b).collect();
            if mat_vec(host.cartan(), &sum).iter().all(|x| x.is_zero()) {
                Verdict::ok(format!("{} + {}", r1.entry().name, r2.entry().name))
            } else {
                Verdict::fail(
                    FailCode::WeightSum3a,
                    format!(
                        "ω({}) + ω({}) = ({}) is no multiple of the label relation",
                        r1.entry().name,
                        r2.entry().name,
                        sum.iter().map(fmt_q).collect::<Vec<_>>().join(", ")
                    ),
                )
            }
        }
        (true, false) | (false, true) => {
            let (hom, inhom) = if r1.entry().homogeneous { (&r1, &r2) } else { (&r2, &r1) };
            match inhom.alpha_host() {
                None => Verdict::ok(format!("{} paired with a0* imposes no condition", hom.entry().name)),
                Some(alpha) => {
                    let w = hom.omega_host(host.n()).expect("homogeneous side has a weight");
                    let p = host.pairing(&w, alpha);
                    if p == -qi(1) {
                        Verdict::ok(format!("⟨ω({}), node {alpha}∨⟩ = -1", hom.entry().name))
                    } else {
                        Verdict::fail(
                            FailCode::Pairing3b,
                            format!("⟨ω({}), node {alpha}∨⟩ = {}, need -1", hom.entry().name, fmt_q(&p)),
                        )
                    }
                }
            }
        }
        (false, false) => match (r1.alpha_host(), r2.alpha_host()) {
            (Some(a1), Some(a2)) if host.is_affine_irreducible() => {
                let kv = host.colabels().expect("affine irreducible host has colabels");
                if kv[a1] == kv[a2] {
                    Verdict::ok(format!("colabels at nodes {a1}, {a2} agree"))
                } else {
                    Verdict::fail(
                        FailCode::Colabel3c,
                        format!("colabel {} at node {a1} != colabel {} at node {a2}", kv[a1], kv[a2]),
                    )
                }
            }
            _ => Verdict::ok("bi-inhomogeneous with no colabel condition in scope"),
        },
    };
    PrimitiveCheck { verdict, sides: Some((r1, r2)) }
}

/// Check the quintuple conditions. Malformed input (overlapping sides,
/// out-of-range nodes, unsupported hosts) is an error, distinct from a
/// "not primitive spherical" verdict.
pub fn check_primitive(d: &PrimitiveDiagram) -> Result<PrimitiveCheck, Error> {
    validate_host_scope(&d.host)?;
    validate_sides(&d.host, &[&d.side1, &d.side2], &[])?;
    if d.side1.nodes.is_empty() && d.side2.nodes.is_empty() {
        return Err(Error::BadInput("the empty diagram is excluded".into()));
    }
    if d.host.is_empty() {
        return Err(Error::BadInput("empty host".into()));
    }
    Ok(check_primitive_core(&d.host, &d.side1, &d.side2))
}

/// Result of `check_spherical`: verdict plus the primitive core (host nodes
/// of `S12`, the core diagram, and the recognized sides when present).
#[derive(Debug, Clone)]
pub struct SphericalCheck {
    pub verdict: Verdict,
    /// Host nodes of the connected closure `S12` of the decorated sets.
    pub s12: Vec<usize>,
    pub core: Option<PrimitiveCheck>,
}

/// Check the sextuple conditions.
pub fn check_spherical(d: &SphericalDiagram) -> Result<SphericalCheck, Error> {
    let host = &*d.host;
    if host.is_empty() {
        return Err(Error::BadInput("empty host".into()));
    }
    validate_host_scope(host)?;
    if !(host.is_finite_type() || host.is_affine_irreducible()) && !d.circled.is_empty() {
        return Err(Error::HostScope(
            "circled nodes on reducible affine hosts are out of scope".into(),
        ));
    }
    validate_sides(host, &[&d.side1, &d.side2], &d.circled)?;

    // On a product of affine factors no component may stay undecorated, so
    // the sextuple is exactly the quintuple.
    if host.is_affine_product() && host.components().len() > 1 {
        if d.side1.nodes.is_empty() && d.side2.nodes.is_empty() {
            return Ok(SphericalCheck {
                verdict: Verdict::fail(FailCode::WeightSum3a, "no nonzero weight on a bare product host".into()),
                s12: vec![],
                core: None,
            });
        }
        let core = check_primitive_core(host, &d.side1, &d.side2);
        return Ok(SphericalCheck {
            verdict: core.verdict.clone(),
            s12: (0..host.n()).collect(),
            core: Some(core),
        });
    }

    let decorated: Vec<usize> = d.side1.nodes.iter().chain(&d.side2.nodes).copied().collect();
    let ambient = complement(host.n(), &d.circled);
    let s12 = host.connected_closure(&decorated, &ambient);

    if s12.is_empty() {
        // Both local models degenerate to a0*; a nonzero weight vanishing on
        // every uncircled coroot exists only with enough circled nodes.
        let enough = if host.is_affine_irreducible() { d.circled.len() >= 2 } else { !d.circled.is_empty() };
        let verdict = if enough {
            Verdict::ok("empty core; weight supported on the circled nodes")
        } else {
            Verdict::fail(
                FailCode::WeightSum3a,
                "no nonzero weight exists: empty core with too few circled nodes".to_string(),
            )
        };
        return Ok(SphericalCheck { verdict, s12, core: None });
    }

    let (core_host, emb) = host.induced(&s12).expect("S12 is a subdiagram");
    let to_local = |nodes: &[usize]| -> Vec<usize> {
        nodes.iter().map(|g| emb.iter().position(|x| x == g).expect("decorated node lies in S12")).collect()
    };
    let core_side1 = Side::new(to_local(&d.side1.nodes), d.side1.factor);
    let core_side2 = Side::new(to_local(&d.side2.nodes), d.side2.factor);
    let core = check_primitive_core(&core_host, &core_side1, &core_side2);
    if !core.verdict.valid {
        let verdict = Verdict {
            valid: false,
            failed: core.verdict.failed,
            witness: format!("core: {}", core.verdict.witness),
        };
        return Ok(SphericalCheck { verdict, s12, core: Some(core) });
    }

    // (3) integrality of homogeneous weights over the circled nodes
    let mut failure: Option<Verdict> = None;
    {
        let sides = core.sides.as_ref().expect("valid core has recognized sides");
        'outer: for (label, r) in [("side 1", &sides.0), ("side 2", &sides.1)] {
            if !r.entry().homogeneous {
                continue;
            }
            let w_core = r.omega_host(core_host.n()).expect("homogeneous weight");
            let mut w_host = vec![Q::zero(); host.n()];
            for (local, coeff) in w_core.iter().enumerate() {
                w_host[emb[local]] = coeff.clone();
            }
            for &gamma in &d.circled {
                let p = host.pairing(&w_host, gamma);
                if !p.denom().is_one() {
                    failure = Some(Verdict::fail(
                        FailCode::Integrality,
                        format!(
                            "⟨ω({}) of {label}, node {gamma}∨⟩ = {} is not integral",
                            r.entry().name,
                            fmt_q(&p)
                        ),
                    ));
                    break 'outer;
                }
            }
        }
    }
    if let Some(verdict) = failure {
        return Ok(SphericalCheck { verdict, s12, core: Some(core) });
    }

    // (4) colabel-gcd divisibility for the bi-inhomogeneous affine case
    if host.is_affine_irreducible() && !d.circled.is_empty() {
        let sides = core.sides.as_ref().expect("valid core has recognized sides");
        let (r1, r2) = (&sides.0, &sides.1);
        if !r1.entry().homogeneous && !r2.entry().homogeneous {
            if let (Some(c1), Some(c2)) = (r1.alpha_host(), r2.alpha_host()) {
                let kv = host.colabels().expect("colabels");
                let (a1, a2) = (emb[c1], emb[c2]);
                let g = d.circled.iter().fold(BigInt::zero(), |acc, &x| acc.gcd(&kv[x]));
                let diff: BigInt = kv[a1].clone() - kv[a2].clone();
                failure = (!(diff.clone() % &g).is_zero()).then(|| {
                    Verdict::fail(
                        FailCode::Divisibility,
                        format!("gcd of circled colabels {g} does not divide k∨({a1}) - k∨({a2}) = {diff}"),
                    )
                });
            }
        }
    }
    if let Some(verdict) = failure {
        return Ok(SphericalCheck { verdict, s12, core: Some(core) });
    }

    Ok(SphericalCheck { verdict: Verdict::ok("all spherical conditions hold"), s12, core: Some(core) })
}

/// Strip the circled nodes and the undecorated components: returns the core
/// host, the embedding of its nodes into the original host, and the core
/// quintuple.
pub fn reduce_to_primitive(d: &SphericalDiagram) -> Result<(DynkinDiagram, Vec<usize>, PrimitiveDiagram), Error> {
    let host = &*d.host;
    let decorated: Vec<usize> = d.side1.nodes.iter().chain(&d.side2.nodes).copied().collect();
    let ambient = complement(host.n(), &d.circled);
    let s12 = host.connected_closure(&decorated, &ambient);
    let (core_host, emb) = host.induced(&s12)?;
    let to_local = |nodes: &[usize]| -> Vec<usize> {
        nodes.iter().map(|g| emb.iter().position(|x| x == g).unwrap()).collect()
    };
    let core = PrimitiveDiagram::new(
        Arc::new(core_host.clone()),
        Side::new(to_local(&d.side1.nodes), d.side1.factor),
        Side::new(to_local(&d.side2.nodes), d.side2.factor),
    );
    Ok((core_host, emb, core))
}

fn apply_perm(perm: &[usize], nodes: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = nodes.iter().map(|&x| perm[x]).collect();
    v.sort_unstable();
    v
}

type SphericalKey = (Vec<usize>, Vec<usize>, Factor, Vec<usize>, Factor);

fn spherical_key(circled: &[usize], s1: &Side, s2: &Side) -> SphericalKey {
    (circled.to_vec(), s1.nodes.clone(), s1.factor, s2.nodes.clone(), s2.factor)
}

/// Canonical representative of a quintuple under `Aut(host) × side swap`:
/// the minimum of the sorted encodings, factors ordered `1/2 < 1 < 2 < i`.
pub fn canonicalize_primitive(d: &PrimitiveDiagram, auts: &[Vec<usize>]) -> PrimitiveDiagram {
    let mut best: Option<(SphericalKey, PrimitiveDiagram)> = None;
    for perm in auts {
        for swap in [false, true] {
            let (a, b) = if swap { (&d.side2, &d.side1) } else { (&d.side1, &d.side2) };
            let s1 = Side { nodes: apply_perm(perm, &a.nodes), factor: a.factor };
            let s2 = Side { nodes: apply_perm(perm, &b.nodes), factor: b.factor };
            let key = spherical_key(&[], &s1, &s2);
            if best.as_ref().map_or(true, |(k, _)| key < *k) {
                best = Some((key, PrimitiveDiagram::new(d.host.clone(), s1, s2)));
            }
        }
    }
    best.expect("automorphism list contains the identity").1
}

/// Canonical representative of a sextuple, as above.
pub fn canonicalize_spherical(d: &SphericalDiagram, auts: &[Vec<usize>]) -> SphericalDiagram {
    let mut best: Option<(SphericalKey, SphericalDiagram)> = None;
    for perm in auts {
        for swap in [false, true] {
            let (a, b) = if swap { (&d.side2, &d.side1) } else { (&d.side1, &d.side2) };
            let circled = apply_perm(perm, &d.circled);
            let s1 = Side { nodes: apply_perm(perm, &a.nodes), factor: a.factor };
            let s2 = Side { nodes: apply_perm(perm, &b.nodes), factor: b.factor };
            let key = spherical_key(&circled, &s1, &s2);
            if best.as_ref().map_or(true, |(k, _)| key < *k) {
                best = Some((key, SphericalDiagram::new(d.host.clone(), circled, s1, s2)));
            }
        }
    }
    best.expect("automorphism list contains the identity").1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Series;

    fn arc_host(s: Series, r: u32, t: Option<u8>) -> Arc<DynkinDiagram> {
        Arc::new(DynkinDiagram::host(s, r, t).unwrap())
    }

    fn prim(host: &Arc<DynkinDiagram>, s1: &[usize], c1: Factor, s2: &[usize], c2: Factor) -> PrimitiveDiagram {
        PrimitiveDiagram::new(host.clone(), Side::new(s1.to_vec(), c1), Side::new(s2.to_vec(), c2))
    }

    #[test]
    fn f4_affine_half_d3_plus_c3_is_valid() {
        let host = arc_host(Series::F, 4, Some(1));
        let d = prim(&host, &[1], Factor::Half, &[3], Factor::One);
        let check = check_primitive(&d).unwrap();
        assert!(check.verdict.valid, "{}", check.verdict.witness);
        let (r1, r2) = check.sides.unwrap();
        assert_eq!(r1.support, vec![0, 1, 2]);
        assert_eq!(r2.support, vec![2, 3, 4]);
    }

    #[test]
    fn f4_affine_one_edge_candidates() {
        // the four candidates obtained by cutting the middle edge of F4~1,
        // in the drawn order: fails 3c, valid, fails 3b, fails 3a
        let host = arc_host(Series::F, 4, Some(1));
        let cases: Vec<(PrimitiveDiagram, Option<FailCode>)> = vec![
            (prim(&host, &[2], Factor::Inhom, &[3], Factor::Inhom), Some(FailCode::Colabel3c)),
            (prim(&host, &[2], Factor::Inhom, &[3, 4], Factor::One), None),
            (prim(&host, &[0, 2], Factor::One, &[3], Factor::Inhom), Some(FailCode::Pairing3b)),
            (prim(&host, &[0, 2], Factor::One, &[3, 4], Factor::One), Some(FailCode::WeightSum3a)),
        ];
        for (d, expect) in cases {
            let check = check_primitive(&d).unwrap();
            assert_eq!(check.verdict.failed, expect, "{:?}: {}", d, check.verdict.witness);
        }
    }

    #[test]
    fn a1_affine_bold_pair_is_valid() {
        let host = arc_host(Series::A, 1, Some(1));
        let d = prim(&host, &[0], Factor::Inhom, &[1], Factor::Inhom);
        assert!(check_primitive(&d).unwrap().verdict.valid);
        // mismatched homogeneous pair fails the weight sum
        let d = prim(&host, &[0], Factor::One, &[1], Factor::Two);
        assert_eq!(check_primitive(&d).unwrap().verdict.failed, Some(FailCode::WeightSum3a));
    }

    #[test]
    fn malformed_input_is_an_error_not_a_verdict() {
        let host = arc_host(Series::A, 2, Some(1));
        let overlapping = prim(&host, &[0], Factor::One, &[0], Factor::One);
        assert!(check_primitive(&overlapping).is_err());
        let empty = prim(&host, &[], Factor::Inhom, &[], Factor::Inhom);
        assert!(check_primitive(&empty).is_err());
    }

    #[test]
    fn d7_spherical_example() {
        // circled α3, ends of the fork decorated with c = 1, a4 marked inhomogeneous
        let host = arc_host(Series::D, 7, None);
        let d = SphericalDiagram::new(
            host.clone(),
            vec![2],
            Side::new(vec![5, 6], Factor::One),
            Side::new(vec![3], Factor::Inhom),
        );
        let check = check_spherical(&d).unwrap();
        assert!(check.verdict.valid, "{}", check.verdict.witness);
        assert_eq!(check.s12, vec![3, 4, 5, 6]);
        let (core_host, emb, core) = reduce_to_primitive(&d).unwrap();
        assert_eq!(core_host.name(), "D4");
        assert_eq!(emb, vec![3, 4, 5, 6]);
        assert!(check_primitive(&core).unwrap().verdict.valid);
        // the side supports: S1 = {α5, α6, α7}, S2 = {α4, α5} in Bourbaki labels
        let sides = check.core.unwrap().sides.unwrap();
        let to_host: Vec<usize> = sides.0.support.iter().map(|&l| emb[l]).collect();
        assert_eq!(to_host, vec![4, 5, 6]);
        let to_host: Vec<usize> = sides.1.support.iter().map(|&l| emb[l]).collect();
        assert_eq!(to_host, vec![3, 4]);
    }

    #[test]
    fn two_circles_and_one_decoration_reduce_to_a_single_node() {
        let host = arc_host(Series::A, 2, Some(1));
        let d = SphericalDiagram::new(host.clone(), vec![0, 1], Side::new(vec![2], Factor::Two), Side::empty());
        assert!(check_spherical(&d).unwrap().verdict.valid);
        let (core_host, emb, core) = reduce_to_primitive(&d).unwrap();
        assert_eq!(core_host.name(), "A1");
        assert_eq!(emb, vec![2]);
        assert!(check_primitive(&core).unwrap().verdict.valid);
    }

    #[test]
    fn spherical_with_empty_circled_matches_primitive() {
        let host = arc_host(Series::F, 4, Some(1));
        let s = SphericalDiagram::new(
            host.clone(),
            vec![],
            Side::new(vec![1], Factor::Half),
            Side::new(vec![3], Factor::One),
        );
        assert!(check_spherical(&s).unwrap().verdict.valid);
    }

    #[test]
    fn empty_core_needs_enough_circles_on_affine_hosts() {
        let host = arc_host(Series::A, 1, Some(1));
        let just_one = SphericalDiagram::new(host.clone(), vec![0], Side::empty(), Side::empty());
        assert!(!check_spherical(&just_one).unwrap().verdict.valid);
        let both = SphericalDiagram::new(host.clone(), vec![0, 1], Side::empty(), Side::empty());
        assert!(check_spherical(&both).unwrap().verdict.valid);
    }

    #[test]
    fn canonical_form_is_swap_and_automorphism_stable() {
        let host = arc_host(Series::A, 1, Some(1));
        let auts = host.automorphisms();
        let d = prim(&host, &[0], Factor::Inhom, &[1], Factor::Inhom);
        let c1 = canonicalize_primitive(&d, &auts);
        let c2 = canonicalize_primitive(&d.swapped(), &auts);
        assert_eq!(c1, c2);
        let c3 = canonicalize_primitive(&c1, &auts);
        assert_eq!(c1, c3);
    }
}
