//! Finite and affine Dynkin diagrams as generalized Cartan matrices, with
//! the exact combinatorics the classification needs: labels and colabels,
//! pairings, connected closures, induced subdiagrams, automorphisms and
//! products.

pub mod build;
pub mod iso;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::linalg::{self, Q};

pub use build::Series;

/// Classified type of one connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub enum ComponentKind {
    /// Irreducible finite type of the given rank.
    Finite(Series, u32),
    /// Irreducible affine type `X_rank^(twist)`.
    Affine(Series, u32, u8),
}

impl ComponentKind {
    pub fn is_affine(self) -> bool {
        matches!(self, ComponentKind::Affine(..))
    }

    pub fn name(self) -> String {
        match self {
            ComponentKind::Finite(s, r) => format!("{}{}", s.letter(), r),
            ComponentKind::Affine(s, r, t) => format!("{}{}~{}", s.letter(), r, t),
        }
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// One connected component: its (sorted) node set and classified kind.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Component {
    pub nodes: Vec<usize>,
    pub kind: ComponentKind,
}

/// A finite or affine Dynkin diagram, possibly a product of irreducible
/// pieces. Immutable after construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DynkinDiagram {
    cartan: Vec<Vec<i64>>,
    components: Vec<Component>,
}

impl DynkinDiagram {
    /// Build the irreducible host `X_rank` (finite, `twist = None`) or
    /// `X_rank^(twist)` (affine).
    pub fn host(series: Series, rank: u32, twist: Option<u8>) -> Result<Self, Error> {
        let cartan = match twist {
            None => build::finite_cartan(series, rank)?,
            Some(t) => build::affine_cartan(series, rank, t)?,
        };
        // The builders produce exactly the advertised type; classification
        // is re-run anyway as a self-check.
        Self::from_cartan(cartan)
    }

    /// Classify an arbitrary generalized Cartan matrix. Fails unless every
    /// connected component is of finite or affine type.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<Self, Error> {
        validate_gcm(&cartan)?;
        let comps = connected_components(&cartan);
        let mut components = Vec::new();
        for nodes in comps {
            let block = submatrix(&cartan, &nodes);
            let kind = classify_component(&block)
                .ok_or_else(|| Error::NotDynkin("component is neither finite nor affine type".into()))?;
            components.push(Component { nodes, kind });
        }
        Ok(DynkinDiagram { cartan, components })
    }

    /// Block-diagonal product of two diagrams.
    pub fn product(&self, other: &DynkinDiagram) -> DynkinDiagram {
        let n = self.n();
        let m = other.n();
        let mut cartan = vec![vec![0i64; n + m]; n + m];
        for i in 0..n {
            for j in 0..n {
                cartan[i][j] = self.cartan[i][j];
            }
        }
        for i in 0..m {
            for j in 0..m {
                cartan[n + i][n + j] = other.cartan[i][j];
            }
        }
        let mut components = self.components.clone();
        for c in &other.components {
            components.push(Component {
                nodes: c.nodes.iter().map(|&x| x + n).collect(),
                kind: c.kind,
            });
        }
        DynkinDiagram { cartan, components }
    }

    pub fn empty() -> DynkinDiagram {
        DynkinDiagram { cartan: vec![], components: vec![] }
    }

    pub fn n(&self) -> usize {
        self.cartan.len()
    }

    pub fn is_empty(&self) -> bool {
        self.n() == 0
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&j| self.adjacent(i, j))
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn is_finite_type(&self) -> bool {
        self.components.iter().all(|c| !c.kind.is_affine())
    }

    pub fn is_affine_irreducible(&self) -> bool {
        self.components.len() == 1 && self.components[0].kind.is_affine()
    }

    /// Every component affine (a "properly affine" host).
    pub fn is_affine_product(&self) -> bool {
        !self.components.is_empty() && self.components.iter().all(|c| c.kind.is_affine())
    }

    /// Canonical family tag, product factors joined by `x` (e.g. `A2xA1`,
    /// `A1~1xA1~1`).
    pub fn name(&self) -> String {
        if self.components.is_empty() {
            return "empty".to_string();
        }
        self.components.iter().map(|c| c.kind.name()).collect::<Vec<_>>().join("x")
    }

    /// Family tag with product factors sorted, so isomorphic hosts share one
    /// key (`A2xA1` and `A1xA2` both become `A1xA2`).
    pub fn canonical_name(&self) -> String {
        if self.components.is_empty() {
            return "empty".to_string();
        }
        let mut names: Vec<String> = self.components.iter().map(|c| c.kind.name()).collect();
        names.sort();
        names.join("x")
    }

    /// Arrow-reversed diagram (transposed Cartan matrix).
    pub fn transpose(&self) -> DynkinDiagram {
        let n = self.n();
        let mut t = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                t[i][j] = self.cartan[j][i];
            }
        }
        DynkinDiagram::from_cartan(t).expect("transpose of a Dynkin diagram is one")
    }

    /// Dynkin labels of an irreducible affine diagram: the unique coprime
    /// positive integer vector `k` with `A·k = 0`.
    pub fn labels(&self) -> Result<Vec<BigInt>, Error> {
        if !self.is_affine_irreducible() {
            return Err(Error::LabelsScope);
        }
        Ok(right_null_labels(&self.cartan))
    }

    /// Colabels: the unique coprime positive integer vector `k∨` with
    /// `k∨·A = 0`; equals the labels of the arrow-reversed diagram.
    pub fn colabels(&self) -> Result<Vec<BigInt>, Error> {
        if !self.is_affine_irreducible() {
            return Err(Error::LabelsScope);
        }
        Ok(self.colabels_unchecked())
    }

    /// Colabels of the whole diagram without the irreducibility guard; only
    /// meaningful entries are those of affine components (used for products
    /// of affines, where each factor carries its own colabels).
    pub(crate) fn colabels_unchecked(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.n()];
        for comp in &self.components {
            if !comp.kind.is_affine() {
                continue;
            }
            let block = submatrix(&self.cartan, &comp.nodes);
            let t: Vec<Vec<i64>> = (0..block.len())
                .map(|i| (0..block.len()).map(|j| block[j][i]).collect())
                .collect();
            let k = right_null_labels(&t);
            for (local, &global) in comp.nodes.iter().enumerate() {
                out[global] = k[local].clone();
            }
        }
        out
    }

    /// `⟨w̄, ᾱ_i∨⟩` for `w` given in simple-root coordinates.
    pub fn pairing(&self, w: &[Q], i: usize) -> Q {
        let mut acc = Q::zero();
        for (j, c) in w.iter().enumerate() {
            if !c.is_zero() && self.cartan[i][j] != 0 {
                acc += linalg::qi(self.cartan[i][j]) * c;
            }
        }
        acc
    }

    /// Full pairing vector of `w` against every simple coroot.
    pub fn pairing_vector(&self, w: &[Q]) -> Vec<Q> {
        (0..self.n()).map(|i| self.pairing(w, i)).collect()
    }

    /// Union of the connected components of the induced subgraph on
    /// `ambient` that meet `sp`. Returned sorted.
    pub fn connected_closure(&self, sp: &[usize], ambient: &[usize]) -> Vec<usize> {
        let ambient_set: Vec<bool> = {
            let mut v = vec![false; self.n()];
            for &x in ambient {
                v[x] = true;
            }
            v
        };
        let mut seen = vec![false; self.n()];
        let mut stack: Vec<usize> = sp.iter().copied().filter(|&x| ambient_set[x]).collect();
        for &x in &stack {
            seen[x] = true;
        }
        while let Some(x) = stack.pop() {
            for y in self.neighbors(x) {
                if ambient_set[y] && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.n()).filter(|&x| seen[x]).collect()
    }

    /// Induced subdiagram on `nodes` plus the embedding (new index → old
    /// index, ascending in the old order).
    pub fn induced(&self, nodes: &[usize]) -> Result<(DynkinDiagram, Vec<usize>), Error> {
        let mut emb: Vec<usize> = nodes.to_vec();
        emb.sort_unstable();
        emb.dedup();
        if emb.iter().any(|&x| x >= self.n()) {
            return Err(Error::BadInput("node index out of range".into()));
        }
        let sub = DynkinDiagram::from_cartan(submatrix(&self.cartan, &emb))?;
        Ok((sub, emb))
    }

    /// All node permutations preserving the Cartan matrix. Block swaps
    /// between isomorphic components come out of the same search.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        iso::isomorphisms(&self.cartan, &self.cartan, false)
    }

    /// All isomorphisms onto `other` (as node maps `self → other`).
    pub fn isomorphisms_to(&self, other: &DynkinDiagram) -> Vec<Vec<usize>> {
        iso::isomorphisms(&self.cartan, &other.cartan, false)
    }

    pub fn is_isomorphic(&self, other: &DynkinDiagram) -> bool {
        !iso::isomorphisms(&self.cartan, &other.cartan, true).is_empty()
    }
}

fn validate_gcm(a: &[Vec<i64>]) -> Result<(), Error> {
    let n = a.len();
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotDynkin("matrix is not square".into()));
        }
        if row[i] != 2 {
            return Err(Error::NotDynkin(format!("diagonal entry a[{i}][{i}] != 2")));
        }
        for (j, &x) in row.iter().enumerate() {
            if i == j {
                continue;
            }
            if x > 0 {
                return Err(Error::NotDynkin(format!("positive off-diagonal entry a[{i}][{j}]")));
            }
            if (x == 0) != (a[j][i] == 0) {
                return Err(Error::NotDynkin(format!("asymmetric zero pattern at ({i},{j})")));
            }
        }
    }
    Ok(())
}

fn connected_components(a: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut stack = vec![s];
        seen[s] = true;
        let mut comp = Vec::new();
        while let Some(x) = stack.pop() {
            comp.push(x);
            for y in 0..n {
                if y != x && a[x][y] != 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

pub(crate) fn submatrix(a: &[Vec<i64>], nodes: &[usize]) -> Vec<Vec<i64>> {
    nodes.iter().map(|&i| nodes.iter().map(|&j| a[i][j]).collect()).collect()
}

/// Coprime positive right null vector of an irreducible affine block.
fn right_null_labels(a: &[Vec<i64>]) -> Vec<BigInt> {
    let ns = linalg::null_space(a);
    assert_eq!(ns.len(), 1, "affine block must have corank exactly 1");
    let k = linalg::primitive_integer(&ns[0]);
    assert!(
        k.iter().all(|x| x > &BigInt::zero()),
        "affine null vector must be strictly positive"
    );
    k
}

/// Candidate types with the given node count, in canonical order. Finite
/// candidates come first so that e.g. a two-node double-edge block is tagged
/// `B2` (never `C2`) and a three-node path `A3` (never `D3`).
fn candidate_kinds(m: usize) -> Vec<ComponentKind> {
    use ComponentKind::{Affine, Finite};
    let mut v = Vec::new();
    let mu = m as u32;
    if m >= 1 {
        v.push(Finite(Series::A, mu));
    }
    if m >= 2 {
        v.push(Finite(Series::B, mu));
    }
    if m >= 3 {
        v.push(Finite(Series::C, mu));
    }
    if m >= 4 {
        v.push(Finite(Series::D, mu));
    }
    if (6..=8).contains(&m) {
        v.push(Finite(Series::E, mu));
    }
    if m == 4 {
        v.push(Finite(Series::F, 4));
    }
    if m == 2 {
        v.push(Finite(Series::G, 2));
    }
    // affine: m nodes = rank n + 1 for the untwisted series
    if m == 2 {
        v.push(Affine(Series::A, 1, 1));
        v.push(Affine(Series::A, 2, 2));
    }
    if m >= 3 {
        v.push(Affine(Series::A, mu - 1, 1));
        v.push(Affine(Series::C, mu - 1, 1));
        v.push(Affine(Series::D, mu, 2));
        v.push(Affine(Series::A, 2 * (mu - 1), 2));
    }
    if m >= 4 {
        v.push(Affine(Series::B, mu - 1, 1));
        v.push(Affine(Series::A, 2 * mu - 3, 2));
    }
    if m >= 5 {
        v.push(Affine(Series::D, mu - 1, 1));
    }
    if m == 7 {
        v.push(Affine(Series::E, 6, 1));
    }
    if m == 8 {
        v.push(Affine(Series::E, 7, 1));
    }
    if m == 9 {
        v.push(Affine(Series::E, 8, 1));
    }
    if m == 5 {
        v.push(Affine(Series::F, 4, 1));
        v.push(Affine(Series::E, 6, 2));
    }
    if m == 3 {
        v.push(Affine(Series::G, 2, 1));
        v.push(Affine(Series::D, 4, 3));
    }
    v
}

fn build_kind(kind: ComponentKind) -> Option<Vec<Vec<i64>>> {
    match kind {
        ComponentKind::Finite(s, r) => build::finite_cartan(s, r).ok(),
        ComponentKind::Affine(s, r, t) => build::affine_cartan(s, r, t).ok(),
    }
}

fn classify_component(block: &[Vec<i64>]) -> Option<ComponentKind> {
    for kind in candidate_kinds(block.len()) {
        if let Some(reference) = build_kind(kind) {
            if iso::is_isomorphic(block, &reference) {
                return Some(kind);
            }
        }
    }
    None
}

/// The standard-numbered instance isomorphic to `d`: each component rebuilt
/// through its family constructor, factors sorted by name.
pub fn canonical_instance(d: &DynkinDiagram) -> DynkinDiagram {
    let mut kinds: Vec<ComponentKind> = d.components().iter().map(|c| c.kind).collect();
    kinds.sort_by_key(|k| k.name());
    let mut out: Option<DynkinDiagram> = None;
    for kind in kinds {
        let piece = DynkinDiagram::from_cartan(build_kind(kind).expect("classified kind rebuilds"))
            .expect("standard instance");
        out = Some(match out {
            None => piece,
            Some(acc) => acc.product(&piece),
        });
    }
    out.unwrap_or_else(DynkinDiagram::empty)
}
