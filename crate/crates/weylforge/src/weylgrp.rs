//! Weyl groups as exact matrix reflection groups.
//!
//! Elements are enumerated as permutations of the root set (a group element
//! is determined by its action on the roots, since it fixes the orthogonal
//! complement of their span pointwise); exact matrices are materialized on
//! demand. Enumeration is a deterministic breadth-first closure with the
//! generators taken in simple-root order, so element lists are reproducible.

use crate::exact::{self, dot, neg, q, reflect, Q, QMatrix};
use crate::rootsys::{RootSystem, TypeLabel};
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use thiserror::Error;

/// Abstract isomorphism classes of the irreducible Weyl groups.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum AbstractLabel {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl AbstractLabel {
    /// B_l, C_l and BC_l all determine the group B_l.
    pub fn from_system(label: TypeLabel, rank: usize) -> AbstractLabel {
        match label {
            TypeLabel::A => AbstractLabel::A(rank),
            TypeLabel::B | TypeLabel::C | TypeLabel::BC => AbstractLabel::B(rank),
            TypeLabel::D => AbstractLabel::D(rank),
            TypeLabel::E6 => AbstractLabel::E6,
            TypeLabel::E7 => AbstractLabel::E7,
            TypeLabel::E8 => AbstractLabel::E8,
            TypeLabel::F4 => AbstractLabel::F4,
            TypeLabel::G2 => AbstractLabel::G2,
        }
    }

    pub fn rank(self) -> usize {
        match self {
            AbstractLabel::A(l) | AbstractLabel::B(l) | AbstractLabel::D(l) => l,
            AbstractLabel::E6 => 6,
            AbstractLabel::E7 => 7,
            AbstractLabel::E8 => 8,
            AbstractLabel::F4 => 4,
            AbstractLabel::G2 => 2,
        }
    }

    /// Classical group order: |A_l| = (l+1)!, |B_l| = 2^l l!,
    /// |D_l| = 2^(l-1) l!, plus the exceptional constants.
    pub fn order(self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self {
            AbstractLabel::A(l) => fact(l + 1),
            AbstractLabel::B(l) => (1u128 << l) * fact(l),
            AbstractLabel::D(l) => (1u128 << (l - 1)) * fact(l),
            AbstractLabel::E6 => 51_840,
            AbstractLabel::E7 => 2_903_040,
            AbstractLabel::E8 => 696_729_600,
            AbstractLabel::F4 => 1_152,
            AbstractLabel::G2 => 12,
        }
    }

    /// Whether -id belongs to the group. False exactly for A_{l>=2},
    /// D_l with l odd, and E6; true for every other irreducible class.
    pub fn contains_minus_id(self) -> bool {
        match self {
            AbstractLabel::A(l) => l == 1,
            AbstractLabel::D(l) => l % 2 == 0,
            AbstractLabel::E6 => false,
            _ => true,
        }
    }
}

impl fmt::Display for AbstractLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbstractLabel::A(l) => write!(f, "A{l}"),
            AbstractLabel::B(l) => write!(f, "B{l}"),
            AbstractLabel::D(l) => write!(f, "D{l}"),
            AbstractLabel::E6 => write!(f, "E6"),
            AbstractLabel::E7 => write!(f, "E7"),
            AbstractLabel::E8 => write!(f, "E8"),
            AbstractLabel::F4 => write!(f, "F4"),
            AbstractLabel::G2 => write!(f, "G2"),
        }
    }
}

#[derive(Debug, Error)]
pub enum WeylError {
    #[error("root system failed validation: {0}")]
    InvalidSystem(String),
    #[error("orbit exceeded the cap of {0} points")]
    OrbitCapExceeded(usize),
}

/// How `contains_minus_id` was decided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinusIdEvidence {
    /// The root permutation of -I is among the enumerated elements.
    EnumeratedMember,
    /// A probe vector's orbit does not contain its negation.
    ProbeRefuted { probe: Vec<Q> },
    /// A word in the generators was found whose exact matrix product is -I.
    WordCertificate { word: Vec<usize> },
    /// Group too large to enumerate or orbit; decided by the classification
    /// of irreducible Weyl groups.
    TableLookup,
}

/// The Weyl group of a root system.
pub struct WeylGroup {
    pub system: RootSystem,
    /// One exact reflection matrix per simple root, in Dynkin order.
    pub generators: Vec<QMatrix>,
    /// Root-set permutations of the generators (same order).
    gen_perms: Vec<Vec<u16>>,
    /// Full element list as root permutations, present when the group order
    /// is within the enumeration cap. Index 0 is the identity; the order is
    /// the deterministic BFS discovery order.
    elements: Option<Vec<Box<[u16]>>>,
    pub order: u128,
    pub abstract_label: AbstractLabel,
    pub contains_minus_id: bool,
    pub minus_id_evidence: MinusIdEvidence,
    /// Exact rational basis of the span of the roots.
    span_basis: Vec<Vec<Q>>,
    /// Exact rational basis of the orthogonal complement of the span.
    complement_basis: Vec<Vec<Q>>,
    /// Inverse of the column matrix [span_basis | complement_basis].
    basis_inverse: QMatrix,
}

/// A Weyl orbit with back-pointers for word reconstruction.
pub struct Orbit {
    pub seed: Vec<Q>,
    pub points: Vec<Vec<Q>>,
    /// |W| / |orbit| when the group order is known.
    pub stabilizer_order: u128,
    /// (parent point index, generator index) per point; the seed has no parent.
    back: Vec<Option<(usize, usize)>>,
    index: BTreeMap<Vec<Q>, usize>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.index.contains_key(v)
    }

    pub fn position(&self, v: &[Q]) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Word in the generators mapping the seed to `points[target]`, in
    /// application order: the first entry is applied first.
    pub fn word_to(&self, target: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = target;
        while let Some((parent, g)) = self.back[cur] {
            word.push(g);
            cur = parent;
        }
        word.reverse();
        word
    }
}

const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// Generate the Weyl group of a validated root system, enumerating elements
/// when the classical order fits within `enumeration_cap`. Exceeding the cap
/// is not an error: the group degrades to generator-only mode and takes its
/// order from the classification.
pub fn generate_weyl_group(system: RootSystem, enumeration_cap: usize) -> Result<WeylGroup, WeylError> {
    let report = crate::rootsys::validate(&system);
    if !report.passed() {
        let failed: Vec<String> = report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.clone())
            .collect();
        return Err(WeylError::InvalidSystem(failed.join(", ")));
    }

    let label = AbstractLabel::from_system(system.type_label, system.rank);
    let order = label.order();

    let simple_vecs: Vec<Vec<Q>> = system.simple_roots().iter().map(|s| s.to_vec()).collect();
    let generators: Vec<QMatrix> = simple_vecs.iter().map(|a| system.reflection_matrix(a)).collect();

    // Generator action on the root list.
    let gen_perms: Vec<Vec<u16>> = simple_vecs
        .iter()
        .map(|a| {
            system
                .roots
                .iter()
                .map(|r| {
                    let image = reflect(r, a);
                    system.root_index(&image).expect("axiom (ii) holds") as u16
                })
                .collect()
        })
        .collect();

    let elements = if order <= enumeration_cap as u128 {
        Some(enumerate_permutations(&gen_perms, system.roots.len()))
    } else {
        None
    };
    if let Some(elems) = &elements {
        // The closure of a valid irreducible system must reproduce the
        // classical order exactly.
        assert_eq!(elems.len() as u128, order, "closure disagrees with classical order");
    }

    // Span and complement bases for matrix reconstruction.
    let span_basis = simple_vecs.clone();
    let simple_matrix_rows = QMatrix::from_rows(&simple_vecs);
    let complement_basis = exact::null_space(&simple_matrix_rows);
    let mut cols: Vec<Vec<Q>> = span_basis.clone();
    cols.extend(complement_basis.iter().cloned());
    let basis = QMatrix::from_cols(&cols);
    let basis_inverse = basis.inverse().expect("basis of the ambient space");

    let mut group = WeylGroup {
        system,
        generators,
        gen_perms,
        elements,
        order,
        abstract_label: label,
        contains_minus_id: false,
        minus_id_evidence: MinusIdEvidence::TableLookup,
        span_basis,
        complement_basis,
        basis_inverse,
    };
    let (flag, evidence) = decide_minus_id(&group);
    group.contains_minus_id = flag;
    group.minus_id_evidence = evidence;
    Ok(group)
}

fn enumerate_permutations(gen_perms: &[Vec<u16>], n_roots: usize) -> Vec<Box<[u16]>> {
    let identity: Box<[u16]> = (0..n_roots as u16).collect();
    let mut seen: HashMap<Box<[u16]>, usize> = HashMap::new();
    let mut list: Vec<Box<[u16]>> = Vec::new();
    seen.insert(identity.clone(), 0);
    list.push(identity);
    let mut queue: VecDeque<usize> = VecDeque::new();
    queue.push_back(0);
    while let Some(idx) = queue.pop_front() {
        let current = list[idx].clone();
        for g in gen_perms {
            // (g . w)(r) = g(w(r))
            let image: Box<[u16]> = current.iter().map(|&r| g[r as usize]).collect();
            let next_id = list.len();
            if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(image) {
                let key = e.key().clone();
                e.insert(next_id);
                list.push(key);
                queue.push_back(next_id);
            }
        }
    }
    list
}

/// Probe vectors for the -id test: generic rational combinations of the
/// fundamental weights with strictly decreasing, non-symmetric coefficients.
fn probe_vectors(system: &RootSystem) -> Vec<Vec<Q>> {
    let l = system.rank;
    let mut probes = Vec::new();
    for (p0, p1) in [(2i64, 3i64), (3, 5), (5, 7)] {
        let mut v = vec![Q::zero(); system.ambient_dim];
        let mut c = q(p0, p1);
        for w in &system.fundamental_weights {
            for (t, vt) in v.iter_mut().enumerate() {
                *vt += &c * &w[t];
            }
            c = &c * &q(p0, p1) + q(1, p1 * p1);
        }
        let _ = l;
        probes.push(v);
    }
    probes
}

fn decide_minus_id(group: &WeylGroup) -> (bool, MinusIdEvidence) {
    if let Some(elements) = &group.elements {
        // -I preserves the root set; it is in W iff its root permutation is.
        let negation: Box<[u16]> = (0..group.system.roots.len())
            .map(|i| group.system.negation_index(i) as u16)
            .collect();
        let found = elements.iter().any(|e| **e == *negation);
        if found {
            return (true, MinusIdEvidence::EnumeratedMember);
        }
        return (false, MinusIdEvidence::TableLookup);
    }
    // Generator-only mode: probe orbits, then confirm by an exact word
    // certificate; fall back to the classification when orbits are too big.
    // A generic regular orbit has |W| points, so groups past the cap go
    // straight to the table.
    if group.order > DEFAULT_ORBIT_CAP as u128 {
        return (group.abstract_label.contains_minus_id(), MinusIdEvidence::TableLookup);
    }
    for probe in probe_vectors(&group.system) {
        if !is_regular(&group.system, &probe) {
            continue;
        }
        match group.orbit_capped(&probe, DEFAULT_ORBIT_CAP) {
            Ok(orbit) => {
                let negated = neg(&probe);
                match orbit.position(&negated) {
                    None => return (false, MinusIdEvidence::ProbeRefuted { probe }),
                    Some(pos) => {
                        let word = orbit.word_to(pos);
                        let m = group.word_matrix(&word);
                        if m.is_neg_identity() {
                            return (true, MinusIdEvidence::WordCertificate { word });
                        }
                        // A regular vector can be reversed by an element other
                        // than -id; this probe is inconclusive, try the next.
                    }
                }
            }
            Err(_) => break,
        }
    }
    (group.abstract_label.contains_minus_id(), MinusIdEvidence::TableLookup)
}

fn is_regular(system: &RootSystem, v: &[Q]) -> bool {
    system.roots.iter().all(|r| !dot(r, v).is_zero())
}

impl WeylGroup {
    pub fn is_enumerated(&self) -> bool {
        self.elements.is_some()
    }

    /// Root-permutation form of the generators, in Dynkin order.
    pub fn generator_permutations(&self) -> &[Vec<u16>] {
        &self.gen_perms
    }

    /// Exact rational basis of the span of the roots (the simple roots).
    pub fn span_basis(&self) -> &[Vec<Q>] {
        &self.span_basis
    }

    pub fn element_count(&self) -> Option<usize> {
        self.elements.as_ref().map(|e| e.len())
    }

    /// Root permutation of element `idx` (enumerated mode only).
    pub fn element_permutation(&self, idx: usize) -> Option<&[u16]> {
        self.elements.as_ref().map(|e| &*e[idx])
    }

    /// Materialize the exact ambient matrix of enumerated element `idx`.
    ///
    /// The element is pinned down by its images of the simple roots together
    /// with fixing the orthogonal complement of the root span pointwise.
    pub fn element_matrix(&self, idx: usize) -> QMatrix {
        let elements = self.elements.as_ref().expect("enumerated mode");
        let perm = &elements[idx];
        let mut image_cols: Vec<Vec<Q>> = Vec::with_capacity(self.system.ambient_dim);
        for &si in &self.system.simple {
            image_cols.push(self.system.roots[perm[si] as usize].clone());
        }
        image_cols.extend(self.complement_basis.iter().cloned());
        QMatrix::from_cols(&image_cols).mul(&self.basis_inverse)
    }

    /// Exact matrix of a word in the generators, first entry applied first.
    pub fn word_matrix(&self, word: &[usize]) -> QMatrix {
        let n = self.system.ambient_dim;
        let mut m = QMatrix::identity(n);
        for &g in word {
            m = self.generators[g].mul(&m);
        }
        m
    }

    /// Apply generator `g` to a vector, exactly.
    pub fn apply_generator(&self, g: usize, v: &[Q]) -> Vec<Q> {
        let alpha = &self.system.roots[self.system.simple[g]];
        reflect(v, alpha)
    }

    /// Orbit of `v` under the group, via the orbit algorithm over the
    /// generators (no full enumeration needed).
    pub fn orbit(&self, v: &[Q]) -> Result<Orbit, WeylError> {
        self.orbit_capped(v, DEFAULT_ORBIT_CAP)
    }

    pub fn orbit_capped(&self, v: &[Q], cap: usize) -> Result<Orbit, WeylError> {
        let mut index: BTreeMap<Vec<Q>, usize> = BTreeMap::new();
        let mut points: Vec<Vec<Q>> = Vec::new();
        let mut back: Vec<Option<(usize, usize)>> = Vec::new();
        index.insert(v.to_vec(), 0);
        points.push(v.to_vec());
        back.push(None);
        let mut head = 0;
        while head < points.len() {
            for g in 0..self.generators.len() {
                let image = self.apply_generator(g, &points[head]);
                if !index.contains_key(&image) {
                    if points.len() >= cap {
                        return Err(WeylError::OrbitCapExceeded(cap));
                    }
                    index.insert(image.clone(), points.len());
                    points.push(image);
                    back.push(Some((head, g)));
                }
            }
            head += 1;
        }
        let stabilizer_order = if points.is_empty() {
            1
        } else {
            self.order / points.len() as u128
        };
        Ok(Orbit {
            seed: v.to_vec(),
            points,
            stabilizer_order,
            back,
            index,
        })
    }

    /// The unique orbit point in the closed dominant chamber (all pairings
    /// with the simple roots non-negative). Deterministic: always reflects
    /// at the smallest offending simple root.
    pub fn chamber_representative(&self, v: &[Q]) -> Vec<Q> {
        let simple: Vec<&[Q]> = self.system.simple_roots();
        let mut cur = v.to_vec();
        loop {
            let mut moved = false;
            for alpha in &simple {
                if dot(&cur, alpha) < Q::zero() {
                    cur = reflect(&cur, alpha);
                    moved = true;
                    break;
                }
            }
            if !moved {
                return cur;
            }
        }
    }
}
