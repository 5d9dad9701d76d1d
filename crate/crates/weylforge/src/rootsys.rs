//! Irreducible (restricted) root systems in exact rational coordinates.
//!
//! Supported families: A_l (l>=1), B_l (l>=2), C_l (l>=3), BC_l (l>=1),
//! D_l (l>=4), E6, E7, E8, F4, G2. Coordinates follow the standard
//! realizations: A_l lives in the trace-zero hyperplane of l+1 coordinates,
//! B/C/D/BC in l coordinates, F4 in 4, G2 in the trace-zero hyperplane of 3,
//! and the E series in 8 (half-integer entries are exact rationals).
//!
//! Simple roots are ordered by the conventional Dynkin-diagram numbering,
//! which fixes the indexing of the fundamental weights:
//! A_l: a_i = e_i - e_{i+1};
//! B_l: e_1-e_2, ..., e_{l-1}-e_l, e_l;
//! C_l: e_1-e_2, ..., e_{l-1}-e_l, 2e_l;
//! BC_l: the B_l simple system (same Weyl group);
//! D_l: e_1-e_2, ..., e_{l-1}-e_l, e_{l-1}+e_l;
//! G2: e_1-e_2, -2e_1+e_2+e_3;
//! F4: e_2-e_3, e_3-e_4, e_4, (e_1-e_2-e_3-e_4)/2;
//! E6/E7/E8: the standard numbering with the branch node fourth.

use crate::exact::{
    self, dot, format_q, is_integer, neg, parse_q, q, qi, reflect, Q, QMatrix,
};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Root-system type labels.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum TypeLabel {
    A,
    B,
    C,
    BC,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl TypeLabel {
    pub fn parse(s: &str) -> Option<TypeLabel> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Some(TypeLabel::A),
            "B" => Some(TypeLabel::B),
            "C" => Some(TypeLabel::C),
            "BC" => Some(TypeLabel::BC),
            "D" => Some(TypeLabel::D),
            "E" => None, // E needs an explicit rank suffix or a separate rank argument
            "E6" => Some(TypeLabel::E6),
            "E7" => Some(TypeLabel::E7),
            "E8" => Some(TypeLabel::E8),
            "F4" => Some(TypeLabel::F4),
            "G2" => Some(TypeLabel::G2),
            _ => None,
        }
    }

    /// Parse a type given separately from a rank, accepting "E" + rank 6/7/8,
    /// "F" + 4 and "G" + 2 spellings.
    pub fn parse_with_rank(s: &str, rank: usize) -> Option<TypeLabel> {
        match s.to_ascii_uppercase().as_str() {
            "E" => match rank {
                6 => Some(TypeLabel::E6),
                7 => Some(TypeLabel::E7),
                8 => Some(TypeLabel::E8),
                _ => None,
            },
            "F" if rank == 4 => Some(TypeLabel::F4),
            "G" if rank == 2 => Some(TypeLabel::G2),
            _ => TypeLabel::parse(s),
        }
    }

    pub fn admissible_rank(self, rank: usize) -> bool {
        match self {
            TypeLabel::A => rank >= 1,
            TypeLabel::B => rank >= 2,
            TypeLabel::C => rank >= 3,
            TypeLabel::BC => rank >= 1,
            TypeLabel::D => rank >= 4,
            TypeLabel::E6 => rank == 6,
            TypeLabel::E7 => rank == 7,
            TypeLabel::E8 => rank == 8,
            TypeLabel::F4 => rank == 4,
            TypeLabel::G2 => rank == 2,
        }
    }

    pub fn is_reduced(self) -> bool {
        !matches!(self, TypeLabel::BC)
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeLabel::A => "A",
            TypeLabel::B => "B",
            TypeLabel::C => "C",
            TypeLabel::BC => "BC",
            TypeLabel::D => "D",
            TypeLabel::E6 => "E6",
            TypeLabel::E7 => "E7",
            TypeLabel::E8 => "E8",
            TypeLabel::F4 => "F4",
            TypeLabel::G2 => "G2",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootSysError {
    #[error("unknown root-system type `{0}`")]
    UnknownType(String),
    #[error("rank {rank} out of range for type {label}")]
    RankOutOfRange { label: TypeLabel, rank: usize },
}

/// An irreducible root system with exact rational data.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub type_label: TypeLabel,
    pub rank: usize,
    pub ambient_dim: usize,
    /// All roots, in a fixed deterministic order.
    pub roots: Vec<Vec<Q>>,
    /// Indices into `roots` of the simple roots, in Dynkin order.
    pub simple: Vec<usize>,
    /// Indices into `roots` of the positive roots.
    pub positive: Vec<usize>,
    /// Fundamental weights, dual to the simple coroots.
    pub fundamental_weights: Vec<Vec<Q>>,
    /// The ambient inner product (standard Euclidean: the identity Gram matrix).
    pub inner_product: QMatrix,
    index: BTreeMap<Vec<Q>, usize>,
}

impl RootSystem {
    pub fn simple_roots(&self) -> Vec<&[Q]> {
        self.simple.iter().map(|&i| self.roots[i].as_slice()).collect()
    }

    pub fn positive_roots(&self) -> Vec<&[Q]> {
        self.positive.iter().map(|&i| self.roots[i].as_slice()).collect()
    }

    pub fn root_index(&self, v: &[Q]) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Index of `-roots[i]`.
    pub fn negation_index(&self, i: usize) -> usize {
        self.root_index(&neg(&self.roots[i]))
            .expect("root set is closed under negation")
    }

    /// Exact reflection matrix for root `alpha` on the ambient space.
    pub fn reflection_matrix(&self, alpha: &[Q]) -> QMatrix {
        let n = self.ambient_dim;
        let norm2 = dot(alpha, alpha);
        let mut m = QMatrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                let t = qi(2) * &alpha[i] * &alpha[j] / &norm2;
                m[(i, j)] -= t;
            }
        }
        m
    }
}

fn basis_vec(n: usize, i: usize, c: Q) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = c;
    v
}

fn e_minus_e(n: usize, i: usize, j: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = qi(1);
    v[j] = qi(-1);
    v
}

fn generate_roots(label: TypeLabel, l: usize) -> (usize, Vec<Vec<Q>>, Vec<Vec<Q>>) {
    // returns (ambient_dim, roots, simple_roots)
    match label {
        TypeLabel::A => {
            let n = l + 1;
            let mut roots = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        roots.push(e_minus_e(n, i, j));
                    }
                }
            }
            let simple = (0..l).map(|i| e_minus_e(n, i, i + 1)).collect();
            (n, roots, simple)
        }
        TypeLabel::B | TypeLabel::C | TypeLabel::BC => {
            let n = l;
            let mut roots = Vec::new();
            // long/short pair roots +-e_i +- e_j
            for i in 0..n {
                for j in i + 1..n {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        let mut v = vec![Q::zero(); n];
                        v[i] = qi(si);
                        v[j] = qi(sj);
                        roots.push(v);
                    }
                }
            }
            let with_short = matches!(label, TypeLabel::B | TypeLabel::BC);
            let with_long2 = matches!(label, TypeLabel::C | TypeLabel::BC);
            for i in 0..n {
                if with_short {
                    roots.push(basis_vec(n, i, qi(1)));
                    roots.push(basis_vec(n, i, qi(-1)));
                }
                if with_long2 {
                    roots.push(basis_vec(n, i, qi(2)));
                    roots.push(basis_vec(n, i, qi(-2)));
                }
            }
            let mut simple: Vec<Vec<Q>> = (0..l - 1).map(|i| e_minus_e(n, i, i + 1)).collect();
            match label {
                TypeLabel::C => simple.push(basis_vec(n, l - 1, qi(2))),
                _ => simple.push(basis_vec(n, l - 1, qi(1))),
            }
            (n, roots, simple)
        }
        TypeLabel::D => {
            let n = l;
            let mut roots = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        let mut v = vec![Q::zero(); n];
                        v[i] = qi(si);
                        v[j] = qi(sj);
                        roots.push(v);
                    }
                }
            }
            let mut simple: Vec<Vec<Q>> = (0..l - 1).map(|i| e_minus_e(n, i, i + 1)).collect();
            let mut last = vec![Q::zero(); n];
            last[l - 2] = qi(1);
            last[l - 1] = qi(1);
            simple.push(last);
            (n, roots, simple)
        }
        TypeLabel::G2 => {
            let n = 3;
            let mut roots = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        roots.push(e_minus_e(n, i, j));
                    }
                }
            }
            // long roots 2e_i - e_j - e_k
            for i in 0..3 {
                for sign in [1i64, -1] {
                    let mut v = vec![qi(-sign); 3];
                    v[i] = qi(2 * sign);
                    roots.push(v);
                }
            }
            let a1 = e_minus_e(n, 0, 1);
            let a2 = vec![qi(-2), qi(1), qi(1)];
            (n, roots, vec![a1, a2])
        }
        TypeLabel::F4 => {
            let n = 4;
            let mut roots = Vec::new();
            for i in 0..4 {
                roots.push(basis_vec(n, i, qi(1)));
                roots.push(basis_vec(n, i, qi(-1)));
            }
            for i in 0..4 {
                for j in i + 1..4 {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        let mut v = vec![Q::zero(); n];
                        v[i] = qi(si);
                        v[j] = qi(sj);
                        roots.push(v);
                    }
                }
            }
            for mask in 0..16u32 {
                let v: Vec<Q> = (0..4)
                    .map(|i| if mask >> i & 1 == 1 { q(-1, 2) } else { q(1, 2) })
                    .collect();
                roots.push(v);
            }
            let simple = vec![
                e_minus_e(n, 1, 2),
                e_minus_e(n, 2, 3),
                basis_vec(n, 3, qi(1)),
                vec![q(1, 2), q(-1, 2), q(-1, 2), q(-1, 2)],
            ];
            (n, roots, simple)
        }
        TypeLabel::E6 | TypeLabel::E7 | TypeLabel::E8 => {
            let n = 8;
            let mut roots = Vec::new();
            let pair_limit = match label {
                TypeLabel::E6 => 5,
                TypeLabel::E7 => 6,
                _ => 8,
            };
            for i in 0..pair_limit {
                for j in i + 1..pair_limit {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        let mut v = vec![Q::zero(); n];
                        v[i] = qi(si);
                        v[j] = qi(sj);
                        roots.push(v);
                    }
                }
            }
            match label {
                TypeLabel::E8 => {
                    // (1/2) sum(+-e_i) with an even number of minus signs
                    for mask in 0..256u32 {
                        if mask.count_ones() % 2 != 0 {
                            continue;
                        }
                        let v: Vec<Q> = (0..8)
                            .map(|i| if mask >> i & 1 == 1 { q(-1, 2) } else { q(1, 2) })
                            .collect();
                        roots.push(v);
                    }
                }
                TypeLabel::E7 => {
                    roots.push(e_minus_e(n, 6, 7));
                    roots.push(e_minus_e(n, 7, 6));
                    // +-(1/2)(e8 - e7 + sum_{i<6} (-1)^v e_i), odd number of minus signs
                    for mask in 0..64u32 {
                        if mask.count_ones() % 2 != 1 {
                            continue;
                        }
                        for sign in [1i64, -1] {
                            let mut v: Vec<Q> = (0..6)
                                .map(|i| {
                                    if mask >> i & 1 == 1 {
                                        q(-sign, 2)
                                    } else {
                                        q(sign, 2)
                                    }
                                })
                                .collect();
                            v.push(q(-sign, 2));
                            v.push(q(sign, 2));
                            roots.push(v);
                        }
                    }
                }
                _ => {
                    // E6: +-(1/2)(e8 - e7 - e6 + sum_{i<5} (-1)^v e_i), even minus count
                    for mask in 0..32u32 {
                        if mask.count_ones() % 2 != 0 {
                            continue;
                        }
                        for sign in [1i64, -1] {
                            let mut v: Vec<Q> = (0..5)
                                .map(|i| {
                                    if mask >> i & 1 == 1 {
                                        q(-sign, 2)
                                    } else {
                                        q(sign, 2)
                                    }
                                })
                                .collect();
                            v.push(q(-sign, 2));
                            v.push(q(-sign, 2));
                            v.push(q(sign, 2));
                            roots.push(v);
                        }
                    }
                }
            }
            // Common simple-root prefix of the E series.
            let mut simple: Vec<Vec<Q>> = Vec::new();
            let mut a1 = vec![q(-1, 2); 8];
            a1[0] = q(1, 2);
            a1[7] = q(1, 2);
            simple.push(a1);
            let mut a2 = vec![Q::zero(); 8];
            a2[0] = qi(1);
            a2[1] = qi(1);
            simple.push(a2);
            simple.push(e_minus_e(n, 1, 0));
            let l = match label {
                TypeLabel::E6 => 6,
                TypeLabel::E7 => 7,
                _ => 8,
            };
            for k in 4..=l {
                simple.push(e_minus_e(n, k - 2, k - 3));
            }
            (n, roots, simple)
        }
    }
}

/// Build the standard realization of an irreducible root system.
pub fn build_root_system(label: TypeLabel, rank: usize) -> Result<RootSystem, RootSysError> {
    if !label.admissible_rank(rank) {
        return Err(RootSysError::RankOutOfRange { label, rank });
    }
    let (ambient_dim, roots, simple_vecs) = generate_roots(label, rank);
    let mut roots = roots;
    roots.sort();
    roots.dedup();
    let index: BTreeMap<Vec<Q>, usize> =
        roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
    let simple: Vec<usize> = simple_vecs
        .iter()
        .map(|s| *index.get(s).expect("simple root must be a root"))
        .collect();

    // Positive roots: positive first nonzero coefficient in the simple-root
    // basis expansion. Solve through the Gram matrix of the simple roots,
    // which is invertible on the span.
    let gram = QMatrix::from_rows(
        &simple_vecs
            .iter()
            .map(|a| simple_vecs.iter().map(|b| dot(a, b)).collect::<Vec<Q>>())
            .collect::<Vec<_>>(),
    );
    let gram_inv = gram.inverse().expect("simple roots are independent");
    let expand = |v: &[Q]| -> Vec<Q> {
        let rhs: Vec<Q> = simple_vecs.iter().map(|a| dot(a, v)).collect();
        gram_inv.mul_vec(&rhs)
    };
    let mut positive = Vec::new();
    for (i, r) in roots.iter().enumerate() {
        let coeffs = expand(r);
        let first = coeffs.iter().find(|c| !c.is_zero());
        if let Some(c) = first {
            if c > &Q::zero() {
                positive.push(i);
            }
        }
    }

    // Fundamental weights: lambda_i = sum_k C_{ik} alpha_k where C = M^{-1}
    // and M_{kj} = 2<alpha_k, alpha_j>/<alpha_j, alpha_j>.
    let l = rank;
    let mut m = QMatrix::zeros(l, l);
    for k in 0..l {
        for j in 0..l {
            m[(k, j)] = qi(2) * dot(&simple_vecs[k], &simple_vecs[j])
                / dot(&simple_vecs[j], &simple_vecs[j]);
        }
    }
    let c = m.inverse().expect("Cartan matrix is invertible");
    let mut fundamental_weights = Vec::with_capacity(l);
    for i in 0..l {
        let mut w = vec![Q::zero(); ambient_dim];
        for k in 0..l {
            for (t, wt) in w.iter_mut().enumerate() {
                *wt += &c[(i, k)] * &simple_vecs[k][t];
            }
        }
        fundamental_weights.push(w);
    }

    Ok(RootSystem {
        type_label: label,
        rank,
        ambient_dim,
        roots,
        simple,
        positive,
        fundamental_weights,
        inner_product: QMatrix::identity(ambient_dim),
        index,
    })
}

/// One named check in a validation report.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of validating a root system. Failures are data, not errors.
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            passed,
            detail,
        });
    }
}

/// Validate the Bourbaki axioms on a bare root set, exactly.
pub fn validate_root_set(roots: &[Vec<Q>]) -> ValidationReport {
    let mut report = ValidationReport { checks: Vec::new() };
    let set: BTreeMap<&[Q], ()> = roots.iter().map(|r| (r.as_slice(), ())).collect();

    let mut nonzero_ok = true;
    let mut nonzero_detail = String::new();
    for r in roots {
        if exact::is_zero_vec(r) {
            nonzero_ok = false;
            nonzero_detail = "zero vector present".to_string();
            break;
        }
        if !set.contains_key(neg(r).as_slice()) {
            nonzero_ok = false;
            nonzero_detail = format!("negative of {} missing", fmt_vec(r));
            break;
        }
    }
    report.push("nonzero_and_negation_closed", nonzero_ok, nonzero_detail);

    // Axiom (ii): every reflection s_alpha maps the set onto itself.
    let mut stable_ok = true;
    let mut stable_detail = String::new();
    'outer: for alpha in roots {
        for beta in roots {
            let image = reflect(beta, alpha);
            if !set.contains_key(image.as_slice()) {
                stable_ok = false;
                stable_detail = format!(
                    "s_{}({}) = {} is not a root",
                    fmt_vec(alpha),
                    fmt_vec(beta),
                    fmt_vec(&image)
                );
                break 'outer;
            }
        }
    }
    report.push("axiom_ii_reflection_stable", stable_ok, stable_detail);

    // Axiom (iii): Cartan numbers are integers.
    let mut cartan_ok = true;
    let mut cartan_detail = String::new();
    'outer2: for alpha in roots {
        let norm2 = dot(alpha, alpha);
        for beta in roots {
            let c = qi(2) * dot(beta, alpha) / &norm2;
            if !is_integer(&c) {
                cartan_ok = false;
                cartan_detail = format!(
                    "2<{},{}>/|.|^2 = {}",
                    fmt_vec(beta),
                    fmt_vec(alpha),
                    format_q(&c)
                );
                break 'outer2;
            }
        }
    }
    report.push("axiom_iii_integrality", cartan_ok, cartan_detail);

    report
}

/// Validate a constructed root system against all its type invariants.
pub fn validate(system: &RootSystem) -> ValidationReport {
    let mut report = validate_root_set(&system.roots);

    // Simple roots: l of them, independent, spanning the span of all roots.
    let simple_vecs: Vec<Vec<Q>> = system.simple_roots().iter().map(|s| s.to_vec()).collect();
    let count_ok = simple_vecs.len() == system.rank;
    report.push(
        "simple_count_is_rank",
        count_ok,
        if count_ok {
            String::new()
        } else {
            format!("{} simple roots, rank {}", simple_vecs.len(), system.rank)
        },
    );
    let simple_rank = exact::rank(&QMatrix::from_rows(&simple_vecs));
    let all_rank = exact::rank(&QMatrix::from_rows(&system.roots));
    let span_ok = simple_rank == system.rank && all_rank == system.rank;
    report.push(
        "simple_roots_span",
        span_ok,
        format!("rank(simple) = {simple_rank}, rank(all) = {all_rank}"),
    );

    // Reducedness per type.
    let mut doubled = Vec::new();
    for r in &system.roots {
        let twice = exact::scale(&qi(2), r);
        if system.root_index(&twice).is_some() {
            doubled.push(fmt_vec(r));
        }
    }
    let reduced_ok = if system.type_label.is_reduced() {
        doubled.is_empty()
    } else {
        !doubled.is_empty()
    };
    report.push(
        "reducedness_matches_type",
        reduced_ok,
        format!("{} roots with 2a also a root", doubled.len()),
    );

    // Positive roots split the set in half.
    let half_ok = 2 * system.positive.len() == system.roots.len();
    report.push(
        "positive_half",
        half_ok,
        format!("{} of {}", system.positive.len(), system.roots.len()),
    );
    let partition_ok = system.positive.iter().all(|&i| {
        let neg_i = system.negation_index(i);
        !system.positive.contains(&neg_i)
    });
    report.push("positive_partition", partition_ok, String::new());

    // Fundamental weights satisfy 2<l_i, a_j>/<a_j, a_j> = delta_ij.
    let mut weights_ok = true;
    let mut weights_detail = String::new();
    'w: for (i, w) in system.fundamental_weights.iter().enumerate() {
        for (j, a) in simple_vecs.iter().enumerate() {
            let pairing = qi(2) * dot(w, a) / dot(a, a);
            let expected = if i == j { qi(1) } else { qi(0) };
            if pairing != expected {
                weights_ok = false;
                weights_detail = format!("<lambda_{}, alpha_{}^v> = {}", i + 1, j + 1, format_q(&pairing));
                break 'w;
            }
        }
    }
    report.push("fundamental_weight_duality", weights_ok, weights_detail);

    report
}

fn fmt_vec(v: &[Q]) -> String {
    let parts: Vec<String> = v.iter().map(format_q).collect();
    format!("({})", parts.join(","))
}

/// JSON-facing form of a root system, with exact `"p/q"` coordinates.
#[derive(Serialize, Deserialize)]
pub struct RootSystemJson {
    pub type_label: String,
    pub rank: usize,
    pub ambient_dim: usize,
    pub roots: Vec<Vec<String>>,
    pub simple_indices: Vec<usize>,
    pub positive_indices: Vec<usize>,
    pub fundamental_weights: Vec<Vec<String>>,
}

impl RootSystem {
    pub fn to_json_value(&self) -> RootSystemJson {
        RootSystemJson {
            type_label: self.type_label.to_string(),
            rank: self.rank,
            ambient_dim: self.ambient_dim,
            roots: self
                .roots
                .iter()
                .map(|r| r.iter().map(format_q).collect())
                .collect(),
            simple_indices: self.simple.clone(),
            positive_indices: self.positive.clone(),
            fundamental_weights: self
                .fundamental_weights
                .iter()
                .map(|w| w.iter().map(format_q).collect())
                .collect(),
        }
    }

    pub fn from_json_value(j: &RootSystemJson) -> Option<RootSystem> {
        let label = TypeLabel::parse(&j.type_label)?;
        let parse_vec = |v: &Vec<String>| -> Option<Vec<Q>> { v.iter().map(|s| parse_q(s)).collect() };
        let roots: Option<Vec<Vec<Q>>> = j.roots.iter().map(parse_vec).collect();
        let roots = roots?;
        let weights: Option<Vec<Vec<Q>>> = j.fundamental_weights.iter().map(parse_vec).collect();
        let index: BTreeMap<Vec<Q>, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        Some(RootSystem {
            type_label: label,
            rank: j.rank,
            ambient_dim: j.ambient_dim,
            roots,
            simple: j.simple_indices.clone(),
            positive: j.positive_indices.clone(),
            fundamental_weights: weights?,
            inner_product: QMatrix::identity(j.ambient_dim),
            index,
        })
    }
}

/// Counterexample factory used in tests: a set violating axiom (ii).
pub fn example_axiom_ii_failure() -> Vec<Vec<Q>> {
    vec![
        exact::qvec_from_i64(&[1, 0]),
        exact::qvec_from_i64(&[-1, 0]),
        exact::qvec_from_i64(&[1, 1]),
        exact::qvec_from_i64(&[-1, -1]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qvec_from_i64;

    /// Enumeration oracle: count roots of the classical families directly
    /// from their combinatorial descriptions, independent of `generate_roots`.
    fn oracle_count(label: TypeLabel, l: usize) -> usize {
        match label {
            TypeLabel::A => l * (l + 1),
            TypeLabel::B | TypeLabel::C => 2 * l * l,
            TypeLabel::BC => 2 * l * l + 2 * l,
            TypeLabel::D => 2 * l * (l - 1),
            TypeLabel::G2 => 12,
            TypeLabel::F4 => 48,
            TypeLabel::E6 => 72,
            TypeLabel::E7 => 126,
            TypeLabel::E8 => 240,
        }
    }

    #[test]
    fn a2_counts() {
        let rs = build_root_system(TypeLabel::A, 2).unwrap();
        assert_eq!(rs.roots.len(), 6);
        assert_eq!(rs.positive.len(), 3);
    }

    #[test]
    fn g2_counts() {
        let rs = build_root_system(TypeLabel::G2, 2).unwrap();
        assert_eq!(rs.roots.len(), 12);
        assert_eq!(rs.positive.len(), 6);
    }

    #[test]
    fn bc1_is_pm_alpha_pm_2alpha() {
        let rs = build_root_system(TypeLabel::BC, 1).unwrap();
        let mut expect = vec![
            qvec_from_i64(&[1]),
            qvec_from_i64(&[-1]),
            qvec_from_i64(&[2]),
            qvec_from_i64(&[-2]),
        ];
        expect.sort();
        assert_eq!(rs.roots, expect);
    }

    #[test]
    fn counts_match_enumeration_oracle() {
        let cases = [
            (TypeLabel::A, 1),
            (TypeLabel::A, 3),
            (TypeLabel::A, 5),
            (TypeLabel::B, 2),
            (TypeLabel::B, 4),
            (TypeLabel::C, 3),
            (TypeLabel::BC, 2),
            (TypeLabel::D, 4),
            (TypeLabel::D, 6),
            (TypeLabel::G2, 2),
            (TypeLabel::F4, 4),
            (TypeLabel::E6, 6),
            (TypeLabel::E7, 7),
            (TypeLabel::E8, 8),
        ];
        for (label, l) in cases {
            let rs = build_root_system(label, l).unwrap();
            assert_eq!(rs.roots.len(), oracle_count(label, l), "{label}_{l}");
            assert_eq!(2 * rs.positive.len(), rs.roots.len(), "{label}_{l}");
        }
    }

    #[test]
    fn constructed_systems_validate() {
        let cases = [
            (TypeLabel::A, 1),
            (TypeLabel::A, 2),
            (TypeLabel::A, 4),
            (TypeLabel::B, 2),
            (TypeLabel::B, 3),
            (TypeLabel::C, 3),
            (TypeLabel::BC, 1),
            (TypeLabel::BC, 3),
            (TypeLabel::D, 4),
            (TypeLabel::D, 5),
            (TypeLabel::G2, 2),
            (TypeLabel::F4, 4),
            (TypeLabel::E6, 6),
            (TypeLabel::E7, 7),
            (TypeLabel::E8, 8),
        ];
        for (label, l) in cases {
            let rs = build_root_system(label, l).unwrap();
            let report = validate(&rs);
            assert!(
                report.passed(),
                "{label}_{l}: {:?}",
                report.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn axiom_ii_failure_detected() {
        // s_{e1} maps e1+e2 to -e1+e2, which is missing.
        let report = validate_root_set(&example_axiom_ii_failure());
        let check = report
            .checks
            .iter()
            .find(|c| c.name == "axiom_ii_reflection_stable")
            .unwrap();
        assert!(!check.passed);
        assert!(check.detail.contains("not a root"));
    }

    #[test]
    fn axiom_iii_failure_detected() {
        // 2<(1/3)e1, e1>/1 = 2/3 is not an integer.
        let roots = vec![
            qvec_from_i64(&[1]),
            qvec_from_i64(&[-1]),
            vec![q(1, 3)],
            vec![q(-1, 3)],
        ];
        let report = validate_root_set(&roots);
        let ii = report.checks.iter().find(|c| c.name == "axiom_ii_reflection_stable").unwrap();
        assert!(ii.passed);
        let iii = report.checks.iter().find(|c| c.name == "axiom_iii_integrality").unwrap();
        assert!(!iii.passed);
        assert!(iii.detail.contains("2/3"));
    }

    #[test]
    fn rejects_bad_ranks() {
        assert!(matches!(
            build_root_system(TypeLabel::B, 1),
            Err(RootSysError::RankOutOfRange { .. })
        ));
        assert!(build_root_system(TypeLabel::C, 2).is_err());
        assert!(build_root_system(TypeLabel::D, 3).is_err());
        assert!(build_root_system(TypeLabel::A, 0).is_err());
        assert!(TypeLabel::parse("H").is_none());
        assert!(TypeLabel::parse_with_rank("E", 5).is_none());
    }

    #[test]
    fn reflection_matrix_is_orthogonal_involution() {
        let rs = build_root_system(TypeLabel::F4, 4).unwrap();
        for &si in &rs.simple {
            let m = rs.reflection_matrix(&rs.roots[si]);
            assert!(m.mul(&m).is_identity());
            assert!(m.mul(&m.transpose()).is_identity());
        }
    }

    #[test]
    fn json_round_trip_is_exact() {
        for (label, l) in [(TypeLabel::A, 2), (TypeLabel::F4, 4), (TypeLabel::BC, 2)] {
            let rs = build_root_system(label, l).unwrap();
            let json = serde_json::to_string(&rs.to_json_value()).unwrap();
            let parsed: RootSystemJson = serde_json::from_str(&json).unwrap();
            let back = RootSystem::from_json_value(&parsed).unwrap();
            assert_eq!(back.roots, rs.roots);
            assert_eq!(back.fundamental_weights, rs.fundamental_weights);
            assert_eq!(back.simple, rs.simple);
            assert_eq!(back.positive, rs.positive);
        }
    }
}
