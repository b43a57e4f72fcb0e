//! Exhaustive enumeration of valid diagrams on a host, up to host
//! automorphism and side swap. Candidate checking is embarrassingly parallel;
//! results are merged through an order-independent canonical-form set.

use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;

use crate::classify::{
    canonicalize_primitive, canonicalize_spherical, check_primitive, check_spherical, PrimitiveDiagram, Side,
    SphericalDiagram,
};
use crate::error::Error;
use crate::localmodels::Factor;
use crate::rootsys::DynkinDiagram;

const FACTORS: [Factor; 4] = [Factor::Half, Factor::One, Factor::Two, Factor::Inhom];

fn subsets_up_to(pool: &[usize], max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    if max >= 1 {
        for &x in pool {
            out.push(vec![x]);
        }
    }
    if max >= 2 {
        for (i, &x) in pool.iter().enumerate() {
            for &y in &pool[i + 1..] {
                out.push(vec![x, y]);
            }
        }
    }
    out
}

fn side_candidates(pool: &[usize], allow_empty: bool) -> Vec<Side> {
    let mut out = Vec::new();
    for nodes in subsets_up_to(pool, 2) {
        if nodes.is_empty() {
            if allow_empty {
                out.push(Side::empty());
            }
            continue;
        }
        for f in FACTORS {
            out.push(Side::new(nodes.clone(), f));
        }
    }
    out
}

fn enumeration_scope(host: &DynkinDiagram) -> Result<(), Error> {
    if host.is_empty() {
        return Ok(());
    }
    if host.components().len() > 2 {
        return Err(Error::HostScope(
            "enumeration covers products of at most two irreducible factors".into(),
        ));
    }
    let affine = host.components().iter().filter(|c| c.kind.is_affine()).count();
    if affine > 0 && affine < host.components().len() {
        return Err(Error::HostScope("mixed finite x affine products are out of scope".into()));
    }
    if affine == 2 {
        let names: BTreeSet<String> = host.components().iter().map(|c| c.kind.name()).collect();
        let ok = names.len() == 1 && (names.contains("A1~1") || names.contains("A2~2"));
        if !ok {
            return Err(Error::HostScope(
                "affine products are enumerated only for A1~1xA1~1 and A2~2xA2~2".into(),
            ));
        }
    }
    Ok(())
}

/// All valid quintuples on `host`, canonicalized and sorted.
pub fn enumerate_primitive(host: &Arc<DynkinDiagram>) -> Result<Vec<PrimitiveDiagram>, Error> {
    enumeration_scope(host)?;
    if host.is_empty() {
        return Ok(vec![]);
    }
    let auts = host.automorphisms();
    let all: Vec<usize> = (0..host.n()).collect();
    let mut candidates = Vec::new();
    for s1 in side_candidates(&all, false) {
        let rest: Vec<usize> = all.iter().copied().filter(|x| !s1.nodes.contains(x)).collect();
        for s2 in side_candidates(&rest, true) {
            candidates.push(PrimitiveDiagram::new(host.clone(), s1.clone(), s2));
        }
    }
    let set: BTreeSet<PrimitiveDiagram> = candidates
        .into_par_iter()
        .filter(|d| check_primitive(d).map(|c| c.verdict.valid).unwrap_or(false))
        .map(|d| canonicalize_primitive(&d, &auts))
        .collect();
    Ok(set.into_iter().collect())
}

/// All valid sextuples on `host` (circled set possibly empty), canonicalized
/// and sorted.
pub fn enumerate_spherical(host: &Arc<DynkinDiagram>) -> Result<Vec<SphericalDiagram>, Error> {
    enumeration_scope(host)?;
    if host.is_empty() {
        return Ok(vec![]);
    }
    if host.is_affine_product() && host.components().len() > 1 {
        // circled nodes on reducible affine hosts are out of scope; the
        // spherical list is exactly the primitive one
        return Ok(enumerate_primitive(host)?
            .into_iter()
            .map(|d| SphericalDiagram::new(host.clone(), vec![], d.side1, d.side2))
            .collect());
    }
    let auts = host.automorphisms();
    let all: Vec<usize> = (0..host.n()).collect();
    let mut candidates = Vec::new();
    for circled in all_subsets(&all) {
        let pool: Vec<usize> = all.iter().copied().filter(|x| !circled.contains(x)).collect();
        for s1 in side_candidates(&pool, true) {
            let rest: Vec<usize> = pool.iter().copied().filter(|x| !s1.nodes.contains(x)).collect();
            for s2 in side_candidates(&rest, true) {
                candidates.push(SphericalDiagram::new(host.clone(), circled.clone(), s1.clone(), s2));
            }
        }
    }
    let set: BTreeSet<SphericalDiagram> = candidates
        .into_par_iter()
        .filter(|d| check_spherical(d).map(|c| c.verdict.valid).unwrap_or(false))
        .map(|d| canonicalize_spherical(&d, &auts))
        .collect();
    Ok(set.into_iter().collect())
}

fn all_subsets(pool: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &x in pool {
        let mut more: Vec<Vec<usize>> = out
            .iter()
            .map(|s| {
                let mut t = s.clone();
                t.push(x);
                t
            })
            .collect();
        out.append(&mut more);
    }
    out
}
