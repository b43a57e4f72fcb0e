//! Structural invariants: closure laws, automorphism-group axioms, checker
//! equivariance and swap symmetry, the three-part partition of valid
//! diagrams, colabel orthogonality, reduction consistency, and realization
//! symmetries.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

use alcove::classify::enumerate::{enumerate_primitive, enumerate_spherical};
use alcove::classify::{
    check_primitive, check_spherical, reduce_to_primitive, PrimitiveDiagram, Side, SphericalDiagram,
};
use alcove::grammar::parse_host;
use alcove::linalg::Q;
use alcove::localmodels::Factor;
use alcove::realize::{realize_primitive, verify_primitive_realization, verify_realization, Realization};
use alcove::rootsys::DynkinDiagram;

const HOSTS: &[&str] = &[
    "A3", "B3", "C4", "D5", "F4", "G2", "A2xA1", "A1~1", "A3~1", "B3~1", "C3~1", "D4~1", "F4~1",
    "G2~1", "A2~2", "A4~2", "A5~2", "D4~2", "D4~3", "E6~2",
];

fn pick_host(idx: usize) -> Arc<DynkinDiagram> {
    Arc::new(parse_host(HOSTS[idx % HOSTS.len()]).unwrap())
}

fn factor_of(idx: usize) -> Factor {
    [Factor::Half, Factor::One, Factor::Two, Factor::Inhom][idx % 4]
}

proptest! {
    #[test]
    fn closure_is_idempotent_and_monotone(
        host_idx in 0usize..20,
        seed in proptest::collection::vec(0usize..12, 0..6),
        ambient_seed in proptest::collection::vec(0usize..12, 0..10),
    ) {
        let host = pick_host(host_idx);
        let n = host.n();
        let sp: Vec<usize> = seed.iter().map(|x| x % n).collect();
        let mut ambient: Vec<usize> = ambient_seed.iter().map(|x| x % n).collect();
        ambient.extend(sp.iter().copied());
        ambient.sort_unstable();
        ambient.dedup();
        let once = host.connected_closure(&sp, &ambient);
        let twice = host.connected_closure(&once, &ambient);
        prop_assert_eq!(&once, &twice);
        // monotone: dropping decorated nodes shrinks the closure
        if !sp.is_empty() {
            let smaller = host.connected_closure(&sp[1..], &ambient);
            prop_assert!(smaller.iter().all(|x| once.contains(x)));
        }
    }

    #[test]
    fn checker_is_equivariant_and_swap_symmetric(
        host_idx in 0usize..20,
        s1 in proptest::collection::vec(0usize..12, 1..3),
        s2 in proptest::collection::vec(0usize..12, 0..3),
        c1 in 0usize..4,
        c2 in 0usize..4,
        aut_idx in 0usize..48,
    ) {
        let host = pick_host(host_idx);
        let n = host.n();
        let side1 = Side::new(s1.iter().map(|x| x % n).collect(), factor_of(c1));
        let mut side2 = Side::new(s2.iter().map(|x| x % n).collect(), factor_of(c2));
        if side2.nodes.is_empty() {
            side2 = Side::empty();
        }
        if side1.nodes.iter().any(|x| side2.nodes.contains(x)) {
            return Ok(());
        }
        let d = PrimitiveDiagram::new(host.clone(), side1.clone(), side2.clone());
        let verdict = match check_primitive(&d) {
            Ok(c) => c.verdict,
            Err(_) => return Ok(()),
        };
        // swap symmetry
        let swapped = check_primitive(&d.swapped()).unwrap().verdict;
        prop_assert_eq!(verdict.valid, swapped.valid);
        // automorphism equivariance
        let auts = host.automorphisms();
        let p = &auts[aut_idx % auts.len()];
        let image = PrimitiveDiagram::new(
            host.clone(),
            Side::new(side1.nodes.iter().map(|&x| p[x]).collect(), side1.factor),
            Side::new(side2.nodes.iter().map(|&x| p[x]).collect(), side2.factor),
        );
        let moved = check_primitive(&image).unwrap().verdict;
        prop_assert_eq!(verdict.valid, moved.valid);
        prop_assert_eq!(verdict.failed, moved.failed);
    }

    #[test]
    fn spherical_checker_is_equivariant(
        host_idx in 0usize..20,
        circled in proptest::collection::vec(0usize..12, 0..3),
        s1 in proptest::collection::vec(0usize..12, 0..3),
        c1 in 0usize..4,
        aut_idx in 0usize..48,
    ) {
        let host = pick_host(host_idx);
        let n = host.n();
        let circled: Vec<usize> = circled.iter().map(|x| x % n).collect();
        let side1 = {
            let nodes: Vec<usize> = s1.iter().map(|x| x % n).collect();
            if nodes.is_empty() { Side::empty() } else { Side::new(nodes, factor_of(c1)) }
        };
        let d = SphericalDiagram::new(host.clone(), circled.clone(), side1.clone(), Side::empty());
        let verdict = match check_spherical(&d) {
            Ok(c) => c.verdict,
            Err(_) => return Ok(()),
        };
        let auts = host.automorphisms();
        let p = &auts[aut_idx % auts.len()];
        let image = SphericalDiagram::new(
            host.clone(),
            circled.iter().map(|&x| p[x]).collect(),
            Side::new(side1.nodes.iter().map(|&x| p[x]).collect(), side1.factor),
            Side::empty(),
        );
        let moved = check_spherical(&image).unwrap().verdict;
        prop_assert_eq!(verdict.valid, moved.valid);
    }

    #[test]
    fn induced_pairing_agrees_with_ambient(
        host_idx in 0usize..20,
        keep in proptest::collection::vec(0usize..12, 1..6),
        coeffs in proptest::collection::vec(-3i64..4, 6),
    ) {
        let host = pick_host(host_idx);
        let n = host.n();
        let mut nodes: Vec<usize> = keep.iter().map(|x| x % n).collect();
        nodes.sort_unstable();
        nodes.dedup();
        let (sub, emb) = host.induced(&nodes).unwrap();
        // weight supported on the subdiagram
        let mut w_host = vec![Q::zero(); n];
        let mut w_sub = vec![Q::zero(); sub.n()];
        for (local, &global) in emb.iter().enumerate() {
            let c = Q::from_integer(BigInt::from(coeffs[local % coeffs.len()]));
            w_host[global] = c.clone();
            w_sub[local] = c;
        }
        for (local, &global) in emb.iter().enumerate() {
            prop_assert_eq!(sub.pairing(&w_sub, local), host.pairing(&w_host, global));
        }
    }
}

#[test]
fn automorphisms_form_a_group_and_preserve_labels() {
    for name in ["A3~1", "D4~1", "A1~1xA1~1", "D4~3", "F4~1", "A2xA1"] {
        let host = parse_host(name).unwrap();
        let auts = host.automorphisms();
        let contains = |p: &Vec<usize>| auts.contains(p);
        for a in &auts {
            // inverse
            let mut inv = vec![0usize; a.len()];
            for (i, &ai) in a.iter().enumerate() {
                inv[ai] = i;
            }
            assert!(contains(&inv), "{name}: inverse missing");
            for b in &auts {
                let comp: Vec<usize> = (0..a.len()).map(|i| b[a[i]]).collect();
                assert!(contains(&comp), "{name}: composition missing");
            }
        }
        if host.is_affine_irreducible() {
            let labels = host.labels().unwrap();
            let colabels = host.colabels().unwrap();
            for p in &auts {
                for i in 0..host.n() {
                    assert_eq!(labels[i], labels[p[i]], "{name}: labels not preserved");
                    assert_eq!(colabels[i], colabels[p[i]], "{name}: colabels not preserved");
                }
            }
        }
    }
}

#[test]
fn labels_are_positive_coprime_null_vectors() {
    for (name, _, _) in alcove::selftest::expected_label_table(8) {
        let host = parse_host(&name).unwrap();
        let labels = host.labels().unwrap();
        let colabels = host.colabels().unwrap();
        for k in [&labels, &colabels] {
            assert!(k.iter().all(|x| x > &BigInt::zero()), "{name}: not strictly positive");
            let g = k.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            assert_eq!(g, BigInt::from(1), "{name}: not coprime");
        }
        let a = host.cartan();
        for i in 0..host.n() {
            let row: BigInt = (0..host.n()).map(|j| BigInt::from(a[i][j]) * &labels[j]).sum();
            assert!(row.is_zero(), "{name}: A·k != 0 at row {i}");
            let col: BigInt = (0..host.n()).map(|j| BigInt::from(a[j][i]) * &colabels[j]).sum();
            assert!(col.is_zero(), "{name}: k∨·A != 0 at column {i}");
        }
    }
}

/// Every valid quintuple splits the host into side 1, the zero-pairing part,
/// and side 2; and on affine hosts the colabel-weighted pairings cancel.
#[test]
fn valid_diagrams_partition_and_cancel()  {
    for name in ["A1~1", "A2~1", "A4~1", "C3~1", "B3~1", "D4~2", "F4~1", "G2~1", "A5~2", "D4~3"] {
        let host = Arc::new(parse_host(name).unwrap());
        for d in enumerate_primitive(&host).unwrap() {
            let (pairings, _) = alcove::realize::reconstruct_weight(&d).unwrap();
            let mut zero_part = Vec::new();
            for i in 0..host.n() {
                if pairings[i].is_zero() {
                    zero_part.push(i);
                    assert!(
                        !d.side1.nodes.contains(&i) && !d.side2.nodes.contains(&i),
                        "{name}: decorated node pairs to zero"
                    );
                } else {
                    assert!(
                        d.side1.nodes.contains(&i) || d.side2.nodes.contains(&i),
                        "{name}: undecorated node {i} pairs to {}",
                        pairings[i]
                    );
                }
            }
            assert_eq!(
                zero_part.len() + d.side1.nodes.len() + d.side2.nodes.len(),
                host.n(),
                "{name}: partition sizes"
            );
            let colabels = host.colabels().unwrap();
            let total: Q = (0..host.n())
                .map(|i| Q::from_integer(colabels[i].clone()) * &pairings[i])
                .fold(Q::zero(), |a, b| a + b);
            assert!(total.is_zero(), "{name}: colabel-weighted pairings sum to {total}");
        }
    }
}

#[test]
fn reduction_is_consistent_with_the_spherical_verdict() {
    for name in ["A1~1", "A2~1", "C2~1", "A4", "D5", "B4"] {
        let host = Arc::new(parse_host(name).unwrap());
        for d in enumerate_spherical(&host).unwrap() {
            let (_, _, core) = reduce_to_primitive(&d).unwrap();
            if core.side1.nodes.is_empty() && core.side2.nodes.is_empty() {
                continue; // circles-only diagram, no primitive core
            }
            let core_check = check_primitive(&core).unwrap();
            assert!(
                core_check.verdict.valid,
                "{name}: valid spherical diagram with invalid core {:?}",
                core
            );
        }
        // spot-check the converse on a corrupted diagram: an invalid sextuple
        // fails either at the core or at a circled-side condition
        if host.is_affine_irreducible() && host.n() >= 2 {
            let bad = SphericalDiagram::new(
                host.clone(),
                vec![0],
                Side::new(vec![1], Factor::Two),
                Side::empty(),
            );
            if let Ok(check) = check_spherical(&bad) {
                if !check.verdict.valid {
                    assert!(check.verdict.failed.is_some());
                }
            }
        }
    }
}

#[test]
fn realization_swap_consistency_on_affine_hosts() {
    for name in ["A1~1", "A2~1", "A3~1", "C2~1", "D4~2", "F4~1", "A2~2"] {
        let host = Arc::new(parse_host(name).unwrap());
        for d in enumerate_primitive(&host).unwrap() {
            let r = realize_primitive(&d).unwrap();
            let s = realize_primitive(&d.swapped()).unwrap();
            assert_eq!(r.x1, s.x2, "{name}: swap must exchange the endpoints");
            assert_eq!(r.x2, s.x1, "{name}: swap must exchange the endpoints");
            assert_eq!(r.c, s.c, "{name}: the segment scale is swap-invariant");
            for i in 0..host.n() {
                assert_eq!(r.omega_pairings[i], -s.omega_pairings[i].clone(), "{name}: weight negates");
            }
        }
    }
}

#[test]
fn realization_automorphism_equivariance() {
    for name in ["A3~1", "D4~2", "C3~1"] {
        let host = Arc::new(parse_host(name).unwrap());
        let auts = host.automorphisms();
        for d in enumerate_primitive(&host).unwrap() {
            let r = realize_primitive(&d).unwrap();
            for p in auts.iter().take(4) {
                let image = PrimitiveDiagram::new(
                    host.clone(),
                    Side::new(d.side1.nodes.iter().map(|&x| p[x]).collect(), d.side1.factor),
                    Side::new(d.side2.nodes.iter().map(|&x| p[x]).collect(), d.side2.factor),
                );
                let ri = realize_primitive(&image).unwrap();
                for i in 0..host.n() {
                    assert_eq!(ri.x1.coords[p[i]], r.x1.coords[i], "{name}: X1 equivariance");
                    assert_eq!(ri.x2.coords[p[i]], r.x2.coords[i], "{name}: X2 equivariance");
                    assert_eq!(ri.omega_pairings[p[i]], r.omega_pairings[i], "{name}: ω equivariance");
                }
                assert_eq!(ri.c, r.c);
            }
        }
    }
}

#[test]
fn finite_host_realizations_scale() {
    let host = Arc::new(parse_host("B4").unwrap());
    for d in enumerate_primitive(&host).unwrap() {
        let r = realize_primitive(&d).unwrap();
        for lambda in [Q::new(BigInt::from(3), BigInt::from(2)), Q::from_integer(BigInt::from(5))] {
            let scaled = Realization {
                x1: alcove::realize::AlcovePoint {
                    coords: r.x1.coords.iter().map(|x| x * &lambda).collect(),
                },
                x2: alcove::realize::AlcovePoint {
                    coords: r.x2.coords.iter().map(|x| x * &lambda).collect(),
                },
                c: &r.c * &lambda,
                omega_pairings: r.omega_pairings.clone(),
                omega_roots: r.omega_roots.clone(),
            };
            assert!(
                verify_primitive_realization(&d, &scaled).ok(),
                "scaling by {lambda} must preserve the verdict"
            );
        }
    }
}

#[test]
fn spherical_witnesses_verify_on_small_hosts() {
    for name in ["A1~1", "A2~1", "A3", "B3", "C2~1", "A2xA1"] {
        let host = Arc::new(parse_host(name).unwrap());
        for d in enumerate_spherical(&host).unwrap() {
            let r = alcove::realize::realize_spherical(&d).unwrap();
            let report = verify_realization(&d, &r);
            assert!(report.ok(), "{name} {:?}: {:?}", d, report.violations);
        }
    }
}

#[test]
fn enumeration_is_deterministic_across_runs() {
    let host = Arc::new(parse_host("C4~1").unwrap());
    let a = enumerate_primitive(&host).unwrap();
    let b = enumerate_primitive(&host).unwrap();
    assert_eq!(a, b);
}

proptest! {
    #[test]
    fn spec_strings_round_trip_for_enumerated_diagrams(host_idx in 0usize..20) {
        let host = pick_host(host_idx);
        if let Ok(list) = enumerate_spherical(&host) {
            for d in list.iter().take(12) {
                let s = alcove::grammar::format_diagram(d);
                let back = alcove::grammar::parse_diagram(&s).unwrap();
                prop_assert_eq!(&back, d);
                // text rendering embeds the spec line
                let text = alcove::render::render_text(d);
                let first = text.lines().next().unwrap();
                prop_assert_eq!(alcove::grammar::parse_diagram(first).unwrap(), back);
            }
        }
    }
}
