//! Construction and certification of Minkowski (Finsler) norms from
//! Weyl-group invariant polynomials.
//!
//! Three constructions are supported, all of the shape
//! `L(X) = (gamma |X|^2 + F(X))^(1/2)`:
//!
//! * absolute mode: `F = sum_i c_i Q_i^(1/k_i)` with even, strictly
//!   positive invariant polynomials `Q_i` of degree `2 k_i`;
//! * positive mode: one extra summand `Q^(1/k)` with
//!   `Q = d |X|^(2k) + (R^(1/2) + P_k)^2`, `R = c |X|^(2k) + P_2k`,
//!   where `P_k` is an odd invariant of odd degree k. The result is
//!   positive-homogeneous but not absolute-homogeneous;
//! * product mode: `L = (c1 |X|^2 + c2 (sum_b s_b |X_b|^(2p))^(1/p))^(1/2)`
//!   over a direct sum of coordinate blocks, invariant under block-wise
//!   orthogonal maps.
//!
//! Correction constants (strict positivity `c`, shift `d`, convexity
//! `gamma`) are computed by sphere sampling with local refinement and
//! recorded in the resolved description, never assumed.

pub mod certify;
pub mod eigen;
pub mod expr;
pub mod sampling;

use crate::invariants::{self, InvariantError, InvariantPolynomial};
use crate::rootsys::{RootSysError, TypeLabel};
use crate::weylgrp::{WeylError, WeylGroup};
use certify::{
    certify_l2, gamma_for_convexity, strict_positivity_constant, CertifyOptions,
    ConvexityCertificate,
};
use expr::{Node, OrbitPoly};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum NormError {
    #[error("polynomial not strictly positive: value {value} at {worst:?}")]
    NotPositive { worst: Vec<f64>, value: f64 },
    #[error("convexity certification failed: min eigenvalue {}", .0.min_eigenvalue)]
    ConvexityFail(Box<ConvexityCertificate>),
    #[error("group contains -id: no skew invariants, only reversible norms exist")]
    SkewUnavailable,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("Hessian undefined (origin or singular direction)")]
    NonFiniteHessian,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not traceless")]
    NotTraceless,
    #[error("restricted norm is not permutation invariant")]
    NotPermutationInvariant,
    #[error("power sum of degree {degree} over weight {weight_index} is identically zero")]
    ZeroInvariant { degree: u32, weight_index: usize },
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    RootSys(#[from] RootSysError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormMode {
    Absolute,
    Positive,
    Product,
}

/// `"auto"` or an explicit number, for constants the builder can compute.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AutoOrValue {
    Value(f64),
    Auto(AutoKeyword),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AutoKeyword {
    #[serde(rename = "auto")]
    Auto,
}

impl Default for AutoOrValue {
    fn default() -> Self {
        AutoOrValue::Auto(AutoKeyword::Auto)
    }
}

impl AutoOrValue {
    pub fn resolve(self, auto: impl FnOnce() -> f64) -> f64 {
        match self {
            AutoOrValue::Value(v) => v,
            AutoOrValue::Auto(_) => auto(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupRef {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
}

impl GroupRef {
    pub fn parse_label(&self) -> Result<TypeLabel, RootSysError> {
        TypeLabel::parse_with_rank(&self.type_label, self.rank)
            .ok_or_else(|| RootSysError::UnknownType(self.type_label.clone()))
    }
}

/// One even term `c * Q^(1/k)` with `Q = positivity_c |X|^(2k) + P` and
/// `P` the orbit power sum of the given degree (= 2k).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermSpec {
    pub degree: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight_index: Option<usize>,
    pub k: u32,
    pub c: f64,
    #[serde(default)]
    pub positivity_c: AutoOrValue,
}

/// The odd (irreversible) part of the positive-homogeneous construction.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OddSpec {
    /// Odd degree k of the skew invariant P_k; P_2k defaults to P_k^2.
    pub degree_k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight_index: Option<usize>,
    /// Strict-positivity constant for R = c |X|^(2k) + P_2k.
    #[serde(default)]
    pub c: AutoOrValue,
    /// Shift constant for Q = d |X|^(2k) + (R^(1/2) + P_k)^2.
    #[serde(default)]
    pub d: AutoOrValue,
    /// Scale on P_k; 0 degenerates to an absolute-homogeneous norm.
    #[serde(default = "one")]
    pub coefficient: f64,
}

fn one() -> f64 {
    1.0
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductSpec {
    pub c1: f64,
    pub c2: f64,
    pub p: f64,
    pub dims: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scales: Option<Vec<f64>>,
}

/// Declarative norm recipe (the norm-spec file schema).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NormSpec {
    pub mode: NormMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupRef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub terms: Vec<TermSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub odd: Option<OddSpec>,
    #[serde(default)]
    pub gamma: AutoOrValue,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product: Option<ProductSpec>,
}

/// Fully resolved recipe: every `"auto"` replaced by the computed constant.
/// This is the norm-file schema; compiling it is deterministic and cheap.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NormDescription {
    pub mode: NormMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupRef>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub terms: Vec<ResolvedTerm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub odd: Option<ResolvedOdd>,
    pub gamma: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product: Option<ProductSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResolvedTerm {
    pub degree: u32,
    pub weight_index: usize,
    pub k: u32,
    pub c: f64,
    pub positivity_c: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResolvedOdd {
    pub degree_k: u32,
    pub weight_index: usize,
    pub c: f64,
    pub d: f64,
    pub coefficient: f64,
}

/// A compiled, evaluable, differentiable norm.
pub struct NormExpression {
    pub dim: usize,
    pub mode: NormMode,
    /// Expression tree of L^2.
    l2: Node,
    pub description: NormDescription,
}

impl NormExpression {
    /// L(x); 0 at (numerically) zero vectors.
    pub fn evaluate(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.dim);
        if x.iter().all(|v| v.abs() < 1e-300) {
            return 0.0;
        }
        self.l2.value(x).max(0.0).sqrt()
    }

    /// Gradient of L at x (away from the origin).
    pub fn gradient(&self, x: &[f64]) -> Result<Vec<f64>, NormError> {
        let l = self.evaluate(x);
        if l < 1e-300 {
            return Err(NormError::NonFiniteHessian);
        }
        let jet = self.l2.jet(x);
        if !jet.is_finite() {
            return Err(NormError::NonFiniteHessian);
        }
        Ok(jet.g.iter().map(|g| g / (2.0 * l)).collect())
    }

    /// Fundamental tensor g_ij = (1/2) d_i d_j L^2, row-major. The norm is
    /// smooth only on the punctured space; the origin is refused.
    pub fn fundamental_tensor(&self, x: &[f64]) -> Result<Vec<f64>, NormError> {
        if x.iter().all(|v| v.abs() < 1e-300) {
            return Err(NormError::NonFiniteHessian);
        }
        let jet = self.l2.jet(x);
        if !jet.is_finite() {
            return Err(NormError::NonFiniteHessian);
        }
        Ok(jet.h.iter().map(|h| 0.5 * h).collect())
    }

    pub fn l2_node(&self) -> &Node {
        &self.l2
    }

    /// Re-certify this norm at its recorded gamma.
    pub fn certify(&self, opts: &CertifyOptions) -> ConvexityCertificate {
        certify_l2(&self.l2, self.dim, self.description.gamma, opts)
    }
}

pub struct BuildOutcome {
    pub norm: NormExpression,
    pub certificate: ConvexityCertificate,
}

fn poly_node(p: &InvariantPolynomial) -> Node {
    Node::Poly(OrbitPoly {
        points: p.orbit_f64().to_vec(),
        multiplicity: p.multiplicity as f64,
        degree: p.degree,
    })
}

/// Pick the smallest weight index whose power sum of the given degree is not
/// identically zero (exact check at deterministic rational points).
fn find_weight(group: &WeylGroup, degree: u32) -> Result<(usize, InvariantPolynomial), NormError> {
    let probes = invariants::rational_span_points(group, 8, 0xabcd);
    for w in 1..=group.system.rank {
        let p = invariants::power_sum(group, w, degree)?;
        if probes.iter().any(|h| !p.eval_q(h).is_zero()) {
            return Ok((w, p));
        }
    }
    Err(NormError::ZeroInvariant {
        degree,
        weight_index: 0,
    })
}

fn resolve_poly(
    group: &WeylGroup,
    degree: u32,
    weight_index: Option<usize>,
) -> Result<(usize, InvariantPolynomial), NormError> {
    match weight_index {
        Some(w) => {
            let p = invariants::power_sum(group, w, degree)?;
            let probes = invariants::rational_span_points(group, 8, 0xabcd);
            if probes.iter().all(|h| p.eval_q(h).is_zero()) {
                return Err(NormError::ZeroInvariant {
                    degree,
                    weight_index: w,
                });
            }
            Ok((w, p))
        }
        None => find_weight(group, degree),
    }
}

/// Reduced-size options for the interior positivity probes.
fn probe_opts(opts: &CertifyOptions) -> CertifyOptions {
    CertifyOptions {
        per_pair: opts.per_pair.min(512),
        random: opts.random.min(2048),
        ..*opts
    }
}

fn check_strictly_positive(node: &Node, dim: usize, opts: &CertifyOptions) -> Result<(), NormError> {
    let popts = probe_opts(opts);
    let samples = sampling::sphere_samples(dim, popts.per_pair, popts.random, popts.seed);
    let (idx, min) = sampling::indexed_min(samples.len(), popts.parallelism.is_parallel(), |i| {
        node.value(&samples[i])
    });
    if min <= 0.0 {
        return Err(NormError::NotPositive {
            worst: samples[idx].clone(),
            value: min,
        });
    }
    Ok(())
}

fn sphere_max_abs(node: &Node, dim: usize, opts: &CertifyOptions) -> f64 {
    let popts = probe_opts(opts);
    let samples = sampling::sphere_samples(dim, popts.per_pair, popts.random, popts.seed);
    let (_, max) = sampling::indexed_max(samples.len(), popts.parallelism.is_parallel(), |i| {
        node.value(&samples[i]).abs()
    });
    max
}

fn sphere_min(node: &Node, dim: usize, opts: &CertifyOptions) -> f64 {
    let popts = probe_opts(opts);
    let samples = sampling::sphere_samples(dim, popts.per_pair, popts.random, popts.seed);
    let (_, min) = sampling::indexed_min(samples.len(), popts.parallelism.is_parallel(), |i| {
        node.value(&samples[i])
    });
    min
}

/// Margin applied on top of computed positivity constants.
pub const POSITIVITY_MARGIN: f64 = 0.1;
/// Margin applied on top of the computed convexity constant.
pub const GAMMA_MARGIN: f64 = 0.05;

/// Strict-positivity constant for an invariant polynomial: the constant c
/// making `c <H,H>^(deg/2) + P` strictly positive off the origin, found by
/// sphere sampling with local refinement and a margin. Odd-degree input is
/// rejected (such polynomials change sign along every line).
pub fn strict_positivity_constant_for(
    poly: &InvariantPolynomial,
    opts: &CertifyOptions,
) -> Result<f64, NormError> {
    if poly.degree % 2 != 0 {
        return Err(NormError::BadParams(format!(
            "degree {} polynomial cannot be corrected to positivity",
            poly.degree
        )));
    }
    Ok(strict_positivity_constant(
        &poly_node(poly),
        poly.ambient_dim(),
        POSITIVITY_MARGIN,
        opts,
    ))
}

/// Build one even term: returns (resolved term, Q node with exponent applied).
fn build_term(
    group: &WeylGroup,
    term: &TermSpec,
    dim: usize,
    opts: &CertifyOptions,
) -> Result<(ResolvedTerm, Node), NormError> {
    if term.degree == 0 || term.degree % 2 != 0 {
        return Err(NormError::BadParams(format!(
            "term degree {} must be a positive even integer",
            term.degree
        )));
    }
    if term.degree != 2 * term.k {
        return Err(NormError::BadParams(format!(
            "term degree {} must equal 2k (k = {})",
            term.degree, term.k
        )));
    }
    let (w, poly) = resolve_poly(group, term.degree, term.weight_index)?;
    let p_node = poly_node(&poly);
    let positivity_c = term
        .positivity_c
        .resolve(|| strict_positivity_constant(&p_node, dim, POSITIVITY_MARGIN, opts));
    if positivity_c < 0.0 {
        return Err(NormError::BadParams("positivity_c must be >= 0".into()));
    }
    let q = Node::Sum(vec![
        (positivity_c, Node::IntPow(Box::new(Node::quad(dim)), term.k)),
        (1.0, p_node),
    ]);
    check_strictly_positive(&q, dim, opts)?;
    let with_exp = if term.k == 1 {
        q
    } else {
        Node::Pow(Box::new(q), 1.0 / term.k as f64)
    };
    Ok((
        ResolvedTerm {
            degree: term.degree,
            weight_index: w,
            k: term.k,
            c: term.c,
            positivity_c,
        },
        with_exp,
    ))
}

/// Absolute-homogeneous (reversible) norm from even invariant terms.
pub fn build_absolute_norm(
    group: &WeylGroup,
    spec: &NormSpec,
    opts: &CertifyOptions,
) -> Result<BuildOutcome, NormError> {
    if spec.mode != NormMode::Absolute {
        return Err(NormError::BadParams("mode must be absolute".into()));
    }
    if spec.odd.is_some() {
        return Err(NormError::BadParams("absolute mode admits no odd part".into()));
    }
    if spec.terms.is_empty() {
        return Err(NormError::BadParams("at least one term required".into()));
    }
    let dim = group.system.ambient_dim;
    let mut resolved_terms = Vec::new();
    let mut f_terms = Vec::new();
    for term in &spec.terms {
        let (resolved, node) = build_term(group, term, dim, opts)?;
        f_terms.push((term.c, node));
        resolved_terms.push(resolved);
    }
    let f = Node::Sum(f_terms);
    finish_build(
        spec,
        f,
        dim,
        NormDescription {
            mode: NormMode::Absolute,
            group: spec.group.clone(),
            dim,
            terms: resolved_terms,
            odd: None,
            gamma: f64::NAN,
            product: None,
        },
        opts,
    )
}

/// Positive-homogeneous (irreversible) norm with an odd invariant part.
/// Requires the group to admit skew invariants (-id absent).
pub fn build_positive_norm(
    group: &WeylGroup,
    spec: &NormSpec,
    opts: &CertifyOptions,
) -> Result<BuildOutcome, NormError> {
    if spec.mode != NormMode::Positive {
        return Err(NormError::BadParams("mode must be positive".into()));
    }
    let odd = spec
        .odd
        .as_ref()
        .ok_or_else(|| NormError::BadParams("positive mode requires an odd part".into()))?;
    if group.contains_minus_id {
        return Err(NormError::SkewUnavailable);
    }
    if odd.degree_k % 2 == 0 {
        return Err(NormError::BadParams(format!(
            "odd degree k = {} must be odd",
            odd.degree_k
        )));
    }
    let dim = group.system.ambient_dim;
    let k = odd.degree_k;

    let (w, p_k) = resolve_poly(group, k, odd.weight_index)?;
    let p_k_node = Node::Sum(vec![(odd.coefficient, poly_node(&p_k))]);
    // P_2k = P_k^2 (including the user scale).
    let p_2k = Node::IntPow(Box::new(p_k_node.clone()), 2);

    // R = c |X|^(2k) + P_2k, strictly positive with a floor so R^(1/2)
    // stays smooth near the zero set of P_k.
    let c = odd.c.resolve(|| {
        let from_negativity = strict_positivity_constant(&p_2k, dim, POSITIVITY_MARGIN, opts);
        let floor = POSITIVITY_MARGIN * sphere_max_abs(&p_2k, dim, opts).max(1.0);
        from_negativity.max(floor)
    });
    if c < 0.0 {
        return Err(NormError::BadParams("odd.c must be >= 0".into()));
    }
    let r = Node::Sum(vec![
        (c, Node::IntPow(Box::new(Node::quad(dim)), k)),
        (1.0, p_2k),
    ]);
    check_strictly_positive(&r, dim, opts)?;

    // Q* = (R^(1/2) + P_k)^2, then Q = d |X|^(2k) + Q*.
    let q_star = Node::IntPow(
        Box::new(Node::Sum(vec![
            (1.0, Node::Sqrt(Box::new(r))),
            (1.0, p_k_node),
        ])),
        2,
    );
    let d = odd.d.resolve(|| {
        let min_qstar = sphere_min(&q_star, dim, opts);
        if min_qstar <= opts.tolerance.max(1e-6) {
            POSITIVITY_MARGIN
        } else {
            0.0
        }
    });
    if d < 0.0 {
        return Err(NormError::BadParams("odd.d must be >= 0".into()));
    }
    let q = Node::Sum(vec![
        (d, Node::IntPow(Box::new(Node::quad(dim)), k)),
        (1.0, q_star),
    ]);
    check_strictly_positive(&q, dim, opts)?;
    let q_pow = if k == 1 {
        q
    } else {
        Node::Pow(Box::new(q), 1.0 / k as f64)
    };

    // Optional even terms on top.
    let mut resolved_terms = Vec::new();
    let mut f_terms = vec![(1.0, q_pow)];
    for term in &spec.terms {
        let (resolved, node) = build_term(group, term, dim, opts)?;
        f_terms.push((term.c, node));
        resolved_terms.push(resolved);
    }
    let f = Node::Sum(f_terms);
    finish_build(
        spec,
        f,
        dim,
        NormDescription {
            mode: NormMode::Positive,
            group: spec.group.clone(),
            dim,
            terms: resolved_terms,
            odd: Some(ResolvedOdd {
                degree_k: k,
                weight_index: w,
                c,
                d,
                coefficient: odd.coefficient,
            }),
            gamma: f64::NAN,
            product: None,
        },
        opts,
    )
}

fn finish_build(
    spec: &NormSpec,
    f: Node,
    dim: usize,
    mut desc: NormDescription,
    opts: &CertifyOptions,
) -> Result<BuildOutcome, NormError> {
    let (gamma, certificate) = match spec.gamma {
        AutoOrValue::Value(g) => {
            let l2 = Node::Sum(vec![(g, Node::quad(dim)), (1.0, f.clone())]);
            (g, certify_l2(&l2, dim, g, opts))
        }
        AutoOrValue::Auto(_) => gamma_for_convexity(&f, dim, GAMMA_MARGIN, opts),
    };
    if !certificate.passed() {
        return Err(NormError::ConvexityFail(Box::new(certificate)));
    }
    desc.gamma = gamma;
    let l2 = Node::Sum(vec![(gamma, Node::quad(dim)), (1.0, f)]);
    Ok(BuildOutcome {
        norm: NormExpression {
            dim,
            mode: desc.mode,
            l2,
            description: desc,
        },
        certificate,
    })
}

/// Block product norm `L = (c1 |X|^2 + c2 (sum_b s_b |X_b|^(2p))^(1/p))^(1/2)`.
pub fn build_product_norm(spec: &ProductSpec) -> Result<NormExpression, NormError> {
    if spec.dims.len() < 2 {
        return Err(NormError::BadParams("need at least two factors".into()));
    }
    if spec.dims.iter().any(|&d| d == 0) {
        return Err(NormError::BadParams("factor dims must be positive".into()));
    }
    if !(spec.c1 > 0.0) || !(spec.c2 > 0.0) {
        return Err(NormError::BadParams("c1 and c2 must be positive".into()));
    }
    if !(spec.p > 1.0) {
        return Err(NormError::BadParams("p must exceed 1".into()));
    }
    if let Some(scales) = &spec.scales {
        if scales.len() != spec.dims.len() {
            return Err(NormError::BadParams("scales must match dims".into()));
        }
        if scales.iter().any(|&s| !(s > 0.0)) {
            return Err(NormError::BadParams("scales must be positive".into()));
        }
    }
    let dim: usize = spec.dims.iter().sum();
    let mut blocks = Vec::new();
    let mut start = 0;
    for (b, &d) in spec.dims.iter().enumerate() {
        let scale = spec.scales.as_ref().map_or(1.0, |s| s[b]);
        blocks.push((
            scale,
            Node::Pow(Box::new(Node::Quad { start, end: start + d }), spec.p),
        ));
        start += d;
    }
    let block_sum = Node::Sum(blocks);
    let l2 = Node::Sum(vec![
        (spec.c1, Node::quad(dim)),
        (spec.c2, Node::Pow(Box::new(block_sum), 1.0 / spec.p)),
    ]);
    Ok(NormExpression {
        dim,
        mode: NormMode::Product,
        l2,
        description: NormDescription {
            mode: NormMode::Product,
            group: None,
            dim,
            terms: Vec::new(),
            odd: None,
            gamma: spec.c1,
            product: Some(spec.clone()),
        },
    })
}

/// Build from a declarative spec, dispatching on mode. Group-based modes
/// construct the Weyl group internally.
pub fn build_from_spec(
    spec: &NormSpec,
    enumeration_cap: usize,
    opts: &CertifyOptions,
) -> Result<BuildOutcome, NormError> {
    match spec.mode {
        NormMode::Product => {
            let pspec = spec
                .product
                .as_ref()
                .ok_or_else(|| NormError::BadParams("product mode requires product params".into()))?;
            let norm = build_product_norm(pspec)?;
            let certificate = norm.certify(opts);
            if !certificate.passed() {
                return Err(NormError::ConvexityFail(Box::new(certificate)));
            }
            Ok(BuildOutcome { norm, certificate })
        }
        NormMode::Absolute | NormMode::Positive => {
            let group_ref = spec
                .group
                .as_ref()
                .ok_or_else(|| NormError::BadParams("group required".into()))?;
            let label = group_ref.parse_label()?;
            let system = crate::rootsys::build_root_system(label, group_ref.rank)?;
            let group = crate::weylgrp::generate_weyl_group(system, enumeration_cap)?;
            match spec.mode {
                NormMode::Absolute => build_absolute_norm(&group, spec, opts),
                _ => build_positive_norm(&group, spec, opts),
            }
        }
    }
}

/// Recompile a resolved description into an evaluable norm. Deterministic:
/// no searches, no certification.
pub fn compile_description(
    desc: &NormDescription,
    enumeration_cap: usize,
) -> Result<NormExpression, NormError> {
    match desc.mode {
        NormMode::Product => {
            let pspec = desc
                .product
                .as_ref()
                .ok_or_else(|| NormError::BadParams("missing product params".into()))?;
            let mut norm = build_product_norm(pspec)?;
            norm.description = desc.clone();
            Ok(norm)
        }
        NormMode::Absolute | NormMode::Positive => {
            let group_ref = desc
                .group
                .as_ref()
                .ok_or_else(|| NormError::BadParams("group required".into()))?;
            let label = group_ref.parse_label()?;
            let system = crate::rootsys::build_root_system(label, group_ref.rank)?;
            let group = crate::weylgrp::generate_weyl_group(system, enumeration_cap)?;
            let dim = desc.dim;
            if dim != group.system.ambient_dim {
                return Err(NormError::BadParams("dim mismatch with group".into()));
            }
            let mut f_terms = Vec::new();
            if let Some(odd) = &desc.odd {
                let p_k = invariants::power_sum(&group, odd.weight_index, odd.degree_k)?;
                let p_k_node = Node::Sum(vec![(odd.coefficient, poly_node(&p_k))]);
                let p_2k = Node::IntPow(Box::new(p_k_node.clone()), 2);
                let r = Node::Sum(vec![
                    (odd.c, Node::IntPow(Box::new(Node::quad(dim)), odd.degree_k)),
                    (1.0, p_2k),
                ]);
                let q_star = Node::IntPow(
                    Box::new(Node::Sum(vec![
                        (1.0, Node::Sqrt(Box::new(r))),
                        (1.0, p_k_node),
                    ])),
                    2,
                );
                let q = Node::Sum(vec![
                    (odd.d, Node::IntPow(Box::new(Node::quad(dim)), odd.degree_k)),
                    (1.0, q_star),
                ]);
                let q_pow = if odd.degree_k == 1 {
                    q
                } else {
                    Node::Pow(Box::new(q), 1.0 / odd.degree_k as f64)
                };
                f_terms.push((1.0, q_pow));
            }
            for term in &desc.terms {
                let poly = invariants::power_sum(&group, term.weight_index, term.degree)?;
                let q = Node::Sum(vec![
                    (
                        term.positivity_c,
                        Node::IntPow(Box::new(Node::quad(dim)), term.k),
                    ),
                    (1.0, poly_node(&poly)),
                ]);
                let node = if term.k == 1 {
                    q
                } else {
                    Node::Pow(Box::new(q), 1.0 / term.k as f64)
                };
                f_terms.push((term.c, node));
            }
            let l2 = Node::Sum(vec![
                (desc.gamma, Node::quad(dim)),
                (1.0, Node::Sum(f_terms)),
            ]);
            Ok(NormExpression {
                dim,
                mode: desc.mode,
                l2,
                description: desc.clone(),
            })
        }
    }
}

/// Asymmetric distance in a Cartan flat: d(x, y) = L(y - x).
pub fn flat_distance(norm: &NormExpression, x: &[f64], y: &[f64]) -> f64 {
    let diff: Vec<f64> = y.iter().zip(x).map(|(a, b)| a - b).collect();
    norm.evaluate(&diff)
}

/// Does the linear map `g` (row-major dim x dim) preserve the norm on all
/// sphere samples within `tol`?
pub fn flat_isometry_check(
    norm: &NormExpression,
    g: &[f64],
    samples: usize,
    tol: f64,
    seed: u64,
) -> bool {
    let dim = norm.dim;
    assert_eq!(g.len(), dim * dim);
    let pts = sampling::sphere_samples(dim, (samples / 2).max(8) / dim.max(1), samples / 2, seed);
    pts.iter().all(|v| {
        let gv: Vec<f64> = (0..dim)
            .map(|i| (0..dim).map(|j| g[i * dim + j] * v[j]).sum())
            .collect();
        (norm.evaluate(&gv) - norm.evaluate(v)).abs() <= tol
    })
}

/// Max |L(X) - L(-X)| over sampled unit vectors.
pub fn reversibility_defect(norm: &NormExpression, opts: &CertifyOptions) -> f64 {
    certify::reversibility_defect(|x| norm.evaluate(x), norm.dim, opts)
}

/// Extend a permutation-invariant norm on R^n to symmetric traceless n x n
/// matrices through the descending eigenvalue spectrum (the dominant-chamber
/// representative of the conjugation orbit). Exact on diagonal input.
pub fn spectral_extension(norm: &NormExpression, mat: &[f64], n: usize) -> Result<f64, NormError> {
    if norm.dim != n {
        return Err(NormError::BadParams(format!(
            "norm dimension {} does not match matrix size {n}",
            norm.dim
        )));
    }
    if mat.len() != n * n {
        return Err(NormError::BadParams("matrix shape mismatch".into()));
    }
    let scale = mat.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    for i in 0..n {
        for j in i + 1..n {
            if (mat[i * n + j] - mat[j * n + i]).abs() > 1e-10 * scale {
                return Err(NormError::NotSymmetric);
            }
        }
    }
    let trace: f64 = (0..n).map(|i| mat[i * n + i]).sum();
    if trace.abs() > 1e-10 * scale {
        return Err(NormError::NotTraceless);
    }
    check_permutation_invariant(norm)?;
    let mut eigs = eigen::symmetric_eigenvalues(mat, n);
    eigs.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
    Ok(norm.evaluate(&eigs))
}

fn check_permutation_invariant(norm: &NormExpression) -> Result<(), NormError> {
    let n = norm.dim;
    // probe vectors with distinct entries, against a rotation and a
    // transposition of the coordinates
    let probe: Vec<f64> = (0..n)
        .map(|i| 0.7 - 0.41 * i as f64 + 0.013 * (i * i) as f64)
        .collect();
    let mut rotated = probe.clone();
    rotated.rotate_left(1);
    let mut swapped = probe.clone();
    swapped.swap(0, n - 1);
    let l0 = norm.evaluate(&probe);
    for other in [&rotated, &swapped] {
        if (norm.evaluate(other) - l0).abs() > 1e-10 * l0.max(1.0) {
            return Err(NormError::NotPermutationInvariant);
        }
    }
    Ok(())
}
