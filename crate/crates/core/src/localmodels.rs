//! The catalog of rank-one local models: each entry is a decorated finite
//! Dynkin diagram `(S, S', c)` together with its weight. Decorated sets are
//! stored *and* re-derived from the weight (the positive-pairing rule), and a
//! self-check cross-validates them against the common pairing value `n_D`.

use std::fmt;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::linalg::{qi, qr, Q};
use crate::rootsys::{DynkinDiagram, Series};

/// The factor `c` attached to a local diagram. `Inhom` is the formal symbol
/// `i` marking inhomogeneous entries. Ordering is the documented tie-break
/// `1/2 < 1 < 2 < i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub enum Factor {
    Half,
    One,
    Two,
    Inhom,
}

impl Factor {
    pub fn parse(s: &str) -> Result<Factor, Error> {
        match s.trim() {
            "1/2" | "½" => Ok(Factor::Half),
            "1" => Ok(Factor::One),
            "2" => Ok(Factor::Two),
            "i" => Ok(Factor::Inhom),
            other => Err(Error::Parse(format!("factor must be 1/2, 1, 2 or i (got {other:?})"))),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Half => write!(f, "1/2"),
            Factor::One => write!(f, "1"),
            Factor::Two => write!(f, "2"),
            Factor::Inhom => write!(f, "i"),
        }
    }
}

/// Catalog entry names. Inhomogeneous families carry a `Bold` prefix and are
/// rendered with a trailing `*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LocalName {
    A1,
    TwoA1,
    A(u32),
    B(u32),
    TwoB(u32),
    C(u32),
    HalfD(u32),
    D(u32),
    HalfD2,
    D2,
    HalfD3,
    D3,
    F4,
    G2,
    TwoG2,
    HalfB3Prime,
    B3Prime,
    BoldA0,
    BoldA(u32),
    BoldC(u32),
}

impl fmt::Display for LocalName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalName::A1 => write!(f, "a1"),
            LocalName::TwoA1 => write!(f, "2a1"),
            LocalName::A(n) => write!(f, "a{n}"),
            LocalName::B(n) => write!(f, "b{n}"),
            LocalName::TwoB(n) => write!(f, "2b{n}"),
            LocalName::C(n) => write!(f, "c{n}"),
            LocalName::HalfD(n) => write!(f, "1/2d{n}"),
            LocalName::D(n) => write!(f, "d{n}"),
            LocalName::HalfD2 => write!(f, "1/2d2"),
            LocalName::D2 => write!(f, "d2"),
            LocalName::HalfD3 => write!(f, "1/2d3"),
            LocalName::D3 => write!(f, "d3"),
            LocalName::F4 => write!(f, "f4"),
            LocalName::G2 => write!(f, "g2"),
            LocalName::TwoG2 => write!(f, "2g2"),
            LocalName::HalfB3Prime => write!(f, "1/2b3'"),
            LocalName::B3Prime => write!(f, "b3'"),
            LocalName::BoldA0 => write!(f, "a0*"),
            LocalName::BoldA(n) => write!(f, "a{n}*"),
            LocalName::BoldC(n) => write!(f, "c{n}*"),
        }
    }
}

/// One instantiated catalog entry.
#[derive(Debug, Clone)]
pub struct LocalEntry {
    pub name: LocalName,
    /// Support diagram on local indices `0..k` (empty for `a0*`).
    pub support: DynkinDiagram,
    pub factor: Factor,
    pub homogeneous: bool,
    /// The two-node disconnected entries form one local model, not two.
    pub tied: bool,
    /// Weight in simple-root coordinates of the support (homogeneous only).
    pub omega: Option<Vec<Q>>,
    /// Decorated node set `S'` (local indices, sorted).
    pub decorated: Vec<usize>,
    /// Common pairing value on the decorated set; 0 only for `a0*`.
    pub n_d: u32,
}

impl LocalEntry {
    fn homogeneous(name: LocalName, support: DynkinDiagram, factor: Factor, omega: Vec<Q>, n_d: u32) -> Self {
        let decorated: Vec<usize> = (0..support.n())
            .filter(|&i| support.pairing(&omega, i).is_positive())
            .collect();
        let tied = matches!(name, LocalName::HalfD2 | LocalName::D2);
        LocalEntry {
            name,
            support,
            factor,
            homogeneous: true,
            tied,
            omega: Some(omega),
            decorated,
            n_d,
        }
    }

    fn inhomogeneous(name: LocalName, support: DynkinDiagram, decorated: Vec<usize>, n_d: u32) -> Self {
        LocalEntry {
            name,
            support,
            factor: Factor::Inhom,
            homogeneous: false,
            tied: false,
            omega: None,
            decorated,
            n_d,
        }
    }

    /// The unique decorated node of a nonempty inhomogeneous entry.
    pub fn single_decorated(&self) -> Option<usize> {
        if self.decorated.len() == 1 {
            Some(self.decorated[0])
        } else {
            None
        }
    }
}

fn fin(series: Series, rank: u32) -> DynkinDiagram {
    DynkinDiagram::host(series, rank, None).expect("catalog support")
}

/// All catalog entries with parametric families instantiated up to
/// `max_rank`. Boundary identifications (`b1 = a1`, `2b1 = 2a1`, `c2 = b2`,
/// `c1* = a1*`) are built into the rank ranges, so every isomorphism class
/// appears exactly once.
pub fn catalog(max_rank: u32) -> Vec<LocalEntry> {
    use LocalName as N;
    let mut v = Vec::new();
    let ones = |n: u32| vec![qi(1); n as usize];
    let twos = |n: u32| vec![qi(2); n as usize];

    v.push(LocalEntry::homogeneous(N::A1, fin(Series::A, 1), Factor::One, vec![qi(1)], 2));
    v.push(LocalEntry::homogeneous(N::TwoA1, fin(Series::A, 1), Factor::Two, vec![qi(2)], 4));
    for n in 2..=max_rank {
        v.push(LocalEntry::homogeneous(N::A(n), fin(Series::A, n), Factor::One, ones(n), 1));
    }
    for n in 2..=max_rank {
        v.push(LocalEntry::homogeneous(N::B(n), fin(Series::B, n), Factor::One, ones(n), 1));
        v.push(LocalEntry::homogeneous(N::TwoB(n), fin(Series::B, n), Factor::Two, twos(n), 2));
    }
    for n in 3..=max_rank {
        let mut w = vec![qi(2); n as usize];
        w[0] = qi(1);
        w[n as usize - 1] = qi(1);
        v.push(LocalEntry::homogeneous(N::C(n), fin(Series::C, n), Factor::One, w, 1));
    }
    for n in 4..=max_rank {
        let mut half = vec![qi(1); n as usize];
        half[n as usize - 2] = qr(1, 2);
        half[n as usize - 1] = qr(1, 2);
        let full: Vec<Q> = half.iter().map(|x| x * qi(2)).collect();
        v.push(LocalEntry::homogeneous(N::HalfD(n), fin(Series::D, n), Factor::Half, half, 1));
        v.push(LocalEntry::homogeneous(N::D(n), fin(Series::D, n), Factor::One, full, 2));
    }
    let a1xa1 = fin(Series::A, 1).product(&fin(Series::A, 1));
    v.push(LocalEntry::homogeneous(N::HalfD2, a1xa1.clone(), Factor::Half, vec![qr(1, 2), qr(1, 2)], 1));
    v.push(LocalEntry::homogeneous(N::D2, a1xa1, Factor::One, vec![qi(1), qi(1)], 2));
    v.push(LocalEntry::homogeneous(
        N::HalfD3,
        fin(Series::A, 3),
        Factor::Half,
        vec![qr(1, 2), qi(1), qr(1, 2)],
        1,
    ));
    v.push(LocalEntry::homogeneous(N::D3, fin(Series::A, 3), Factor::One, vec![qi(1), qi(2), qi(1)], 2));
    v.push(LocalEntry::homogeneous(
        N::F4,
        fin(Series::F, 4),
        Factor::One,
        vec![qi(1), qi(2), qi(3), qi(2)],
        1,
    ));
    v.push(LocalEntry::homogeneous(N::G2, fin(Series::G, 2), Factor::One, vec![qi(2), qi(1)], 1));
    v.push(LocalEntry::homogeneous(N::TwoG2, fin(Series::G, 2), Factor::Two, vec![qi(4), qi(2)], 2));
    v.push(LocalEntry::homogeneous(
        N::HalfB3Prime,
        fin(Series::B, 3),
        Factor::Half,
        vec![qr(1, 2), qi(1), qr(3, 2)],
        1,
    ));
    v.push(LocalEntry::homogeneous(
        N::B3Prime,
        fin(Series::B, 3),
        Factor::One,
        vec![qi(1), qi(2), qi(3)],
        2,
    ));

    v.push(LocalEntry::inhomogeneous(N::BoldA0, DynkinDiagram::empty(), vec![], 0));
    for n in 1..=max_rank {
        v.push(LocalEntry::inhomogeneous(N::BoldA(n), fin(Series::A, n), vec![0], 1));
    }
    // c2* lives on the two-node double edge with the short end decorated;
    // that diagram is tagged B2, with the short root at index 1.
    v.push(LocalEntry::inhomogeneous(N::BoldC(2), fin(Series::B, 2), vec![1], 1));
    for n in 3..=max_rank {
        v.push(LocalEntry::inhomogeneous(N::BoldC(n), fin(Series::C, n), vec![0], 1));
    }
    v
}

/// Largest support rank the shared catalog instantiates.
pub const CATALOG_MAX_RANK: u32 = 24;

fn shared_catalog() -> &'static [LocalEntry] {
    static CAT: OnceLock<Vec<LocalEntry>> = OnceLock::new();
    CAT.get_or_init(|| catalog(CATALOG_MAX_RANK))
}

/// Catalog self-test: re-derive every decorated set from the weight and check
/// the common pairing value against the stored `n_D`. Returns the offending
/// entry name on failure.
pub fn self_check(entries: &[LocalEntry]) -> Result<(), String> {
    for e in entries {
        if !e.homogeneous {
            if e.support.is_empty() != e.decorated.is_empty() {
                return Err(format!("{}: empty/decorated mismatch", e.name));
            }
            continue;
        }
        let omega = e.omega.as_ref().ok_or_else(|| format!("{}: missing weight", e.name))?;
        let mut derived = Vec::new();
        for i in 0..e.support.n() {
            let p = e.support.pairing(omega, i);
            if p.is_positive() {
                derived.push(i);
                if p != qi(e.n_d as i64) {
                    return Err(format!("{}: pairing at node {i} is {p}, expected n_D = {}", e.name, e.n_d));
                }
            } else if !p.is_zero() {
                return Err(format!("{}: negative pairing at node {i}", e.name));
            }
        }
        if derived != e.decorated {
            return Err(format!("{}: derived decorated set {derived:?} != stored {:?}", e.name, e.decorated));
        }
        // support is the connected closure of the decorated set
        let closure = e.support.connected_closure(&e.decorated, &(0..e.support.n()).collect::<Vec<_>>());
        if closure.len() != e.support.n() {
            return Err(format!("{}: support is not the closure of the decorated set", e.name));
        }
    }
    // pairwise distinctness as decorated, factored diagrams
    for (i, a) in entries.iter().enumerate() {
        for b in entries.iter().skip(i + 1) {
            if a.factor != b.factor || a.support.n() != b.support.n() || a.decorated.len() != b.decorated.len() {
                continue;
            }
            let same = a
                .support
                .isomorphisms_to(&b.support)
                .iter()
                .any(|m| {
                    let mut img: Vec<usize> = a.decorated.iter().map(|&x| m[x]).collect();
                    img.sort_unstable();
                    img == b.decorated
                });
            if same {
                return Err(format!("catalog ambiguity: {} vs {}", a.name, b.name));
            }
        }
    }
    Ok(())
}

/// A successful recognition: the catalog entry and the embedding of its
/// support into the candidate diagram (entry-local index → candidate-local
/// index).
#[derive(Debug, Clone)]
pub struct Recognition {
    pub entry: LocalEntry,
    pub embedding: Vec<usize>,
}

/// Recognize `(sub, sprime, c)` as a catalog entry, i.e. find an isomorphism
/// of `sub` onto an entry's support carrying `sprime` onto its decorated set
/// with matching factor.
pub fn recognize(sub: &DynkinDiagram, sprime: &[usize], c: Factor) -> Option<Recognition> {
    if sub.is_empty() {
        return if sprime.is_empty() && c == Factor::Inhom {
            Some(Recognition {
                entry: shared_catalog().iter().find(|e| e.name == LocalName::BoldA0).unwrap().clone(),
                embedding: vec![],
            })
        } else {
            None
        };
    }
    if sub.n() > CATALOG_MAX_RANK as usize {
        return None;
    }
    let mut target: Vec<usize> = sprime.to_vec();
    target.sort_unstable();
    target.dedup();
    for e in shared_catalog() {
        if e.factor != c || e.support.n() != sub.n() || e.decorated.len() != target.len() {
            continue;
        }
        for m in e.support.isomorphisms_to(sub) {
            let mut img: Vec<usize> = e.decorated.iter().map(|&x| m[x]).collect();
            img.sort_unstable();
            if img == target {
                return Some(Recognition { entry: e.clone(), embedding: m });
            }
        }
    }
    None
}

/// Pairing data of an entry's weight pushed into a host diagram.
#[derive(Debug, Clone)]
pub enum WeightPairings {
    /// Pairings of the pushed-forward weight against every host coroot.
    Full(Vec<Q>),
    /// Partial specification of an inhomogeneous weight: `+1` on the
    /// decorated node (when there is one), `0` on the other support nodes,
    /// unconstrained elsewhere.
    Partial { plus_one: Option<usize>, zero: Vec<usize> },
}

/// Push the entry's weight along `embedding` (entry-local → host-global) and
/// pair against every host node.
pub fn weight_pairings(entry: &LocalEntry, embedding: &[usize], host: &DynkinDiagram) -> WeightPairings {
    match &entry.omega {
        Some(w) => {
            let mut host_w = vec![Q::zero(); host.n()];
            for (local, coeff) in w.iter().enumerate() {
                host_w[embedding[local]] = coeff.clone();
            }
            WeightPairings::Full(host.pairing_vector(&host_w))
        }
        None => {
            let plus_one = entry.single_decorated().map(|d| embedding[d]);
            let zero = (0..entry.support.n())
                .filter(|i| !entry.decorated.contains(i))
                .map(|i| embedding[i])
                .collect();
            WeightPairings::Partial { plus_one, zero }
        }
    }
}

/// Weight of a homogeneous entry in host root coordinates.
pub fn omega_in_host(entry: &LocalEntry, embedding: &[usize], host_n: usize) -> Option<Vec<Q>> {
    entry.omega.as_ref().map(|w| {
        let mut host_w = vec![Q::zero(); host_n];
        for (local, coeff) in w.iter().enumerate() {
            host_w[embedding[local]] = coeff.clone();
        }
        host_w
    })
}
