//! Generators of the invariant polynomial ring of a Weyl group.
//!
//! A homogeneous invariant is stored as an orbit power sum: for a weight
//! orbit O with stabilizer order s, `P(H) = s * sum_{mu in O} <mu,H>^m`,
//! which equals the full group sum over all images of the weight. This keeps
//! the cost at orbit size instead of group order. Evaluation, gradients,
//! and Hessians are exact at rational points.

use crate::exact::{self, dot, q, q_pow, qi, Q, QMatrix};
use crate::rootsys::TypeLabel;
use crate::weylgrp::WeylGroup;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("rank {rank} out of range for type {label}")]
    RankOutOfRange { label: TypeLabel, rank: usize },
    #[error("orbit cap exceeded while building invariants")]
    OrbitCapExceeded,
    #[error("no weight assignment yields independent generators; failing degrees: {degrees:?}")]
    NoValidAssignment { degrees: Vec<u32> },
    #[error("all sampled points landed on root hyperplanes")]
    DegenerateSample,
}

/// Chevalley degrees of the generators, per irreducible class.
pub fn chevalley_degrees(label: TypeLabel, rank: usize) -> Result<Vec<u32>, InvariantError> {
    if !label.admissible_rank(rank) {
        return Err(InvariantError::RankOutOfRange { label, rank });
    }
    let l = rank as u32;
    Ok(match label {
        TypeLabel::A => (2..=l + 1).collect(),
        TypeLabel::B | TypeLabel::C | TypeLabel::BC => (1..=l).map(|i| 2 * i).collect(),
        TypeLabel::D => {
            let mut v: Vec<u32> = (1..l).map(|i| 2 * i).collect();
            v.push(l);
            v
        }
        TypeLabel::E6 => vec![2, 5, 6, 8, 9, 12],
        TypeLabel::E7 => vec![2, 6, 8, 10, 12, 14, 18],
        TypeLabel::E8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
        TypeLabel::F4 => vec![2, 6, 8, 12],
        TypeLabel::G2 => vec![2, 6],
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// A W-invariant homogeneous polynomial in orbit power-sum form.
#[derive(Clone)]
pub struct InvariantPolynomial {
    /// 1-based index of the fundamental weight whose orbit is summed.
    pub weight_index: usize,
    /// Homogeneity degree m.
    pub degree: u32,
    /// The weight orbit.
    pub orbit_points: Vec<Vec<Q>>,
    /// Stabilizer order: the multiplicity making the orbit sum equal the
    /// full sum over the group.
    pub multiplicity: u128,
    pub parity: Parity,
    cached_f64: Vec<Vec<f64>>,
}

impl InvariantPolynomial {
    fn new(weight_index: usize, degree: u32, orbit_points: Vec<Vec<Q>>, multiplicity: u128) -> Self {
        let cached_f64 = orbit_points.iter().map(|p| exact::qvec_to_f64(p)).collect();
        InvariantPolynomial {
            weight_index,
            degree,
            orbit_points,
            multiplicity,
            parity: if degree % 2 == 0 { Parity::Even } else { Parity::Odd },
            cached_f64,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.orbit_points[0].len()
    }

    pub fn orbit_size(&self) -> usize {
        self.orbit_points.len()
    }

    /// The orbit directions as f64 rows (used by the norm expression tree).
    pub fn orbit_f64(&self) -> &[Vec<f64>] {
        &self.cached_f64
    }

    /// Exact evaluation at a rational point.
    pub fn eval_q(&self, h: &[Q]) -> Q {
        let mult = Q::from_integer(BigInt::from(self.multiplicity));
        let mut acc = Q::zero();
        for mu in &self.orbit_points {
            acc += q_pow(&dot(mu, h), self.degree);
        }
        acc * mult
    }

    /// Exact gradient at a rational point.
    pub fn grad_q(&self, h: &[Q]) -> Vec<Q> {
        let n = h.len();
        let mult = Q::from_integer(BigInt::from(self.multiplicity));
        let m = self.degree;
        let mut grad = vec![Q::zero(); n];
        for mu in &self.orbit_points {
            let c = qi(m as i64) * q_pow(&dot(mu, h), m - 1);
            for (g, mu_t) in grad.iter_mut().zip(mu) {
                *g += &c * mu_t;
            }
        }
        for g in grad.iter_mut() {
            *g *= &mult;
        }
        grad
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        let m = self.degree as i32;
        let mut acc = 0.0;
        for mu in &self.cached_f64 {
            let d: f64 = mu.iter().zip(x).map(|(a, b)| a * b).sum();
            acc += d.powi(m);
        }
        acc * self.multiplicity as f64
    }

    pub fn grad_f64(&self, x: &[f64]) -> Vec<f64> {
        let m = self.degree as i32;
        let mut grad = vec![0.0; x.len()];
        for mu in &self.cached_f64 {
            let d: f64 = mu.iter().zip(x).map(|(a, b)| a * b).sum();
            let c = m as f64 * d.powi(m - 1);
            for (g, mu_t) in grad.iter_mut().zip(mu) {
                *g += c * mu_t;
            }
        }
        let mult = self.multiplicity as f64;
        grad.iter_mut().for_each(|g| *g *= mult);
        grad
    }

    /// Hessian at `x`, row-major full storage.
    pub fn hess_f64(&self, x: &[f64]) -> Vec<f64> {
        let n = x.len();
        let m = self.degree as i32;
        let mut hess = vec![0.0; n * n];
        if m < 2 {
            return hess;
        }
        for mu in &self.cached_f64 {
            let d: f64 = mu.iter().zip(x).map(|(a, b)| a * b).sum();
            let c = (m * (m - 1)) as f64 * d.powi(m - 2);
            for i in 0..n {
                let ci = c * mu[i];
                for j in 0..n {
                    hess[i * n + j] += ci * mu[j];
                }
            }
        }
        let mult = self.multiplicity as f64;
        hess.iter_mut().for_each(|h| *h *= mult);
        hess
    }
}

/// Orbit power sum of an arbitrary degree over a fundamental-weight orbit.
/// Degrees outside the Chevalley list are legitimate invariants too (used
/// by norm construction); the result may be identically zero for odd
/// degrees on centrally symmetric orbits.
pub fn power_sum(
    group: &WeylGroup,
    weight_index: usize,
    degree: u32,
) -> Result<InvariantPolynomial, InvariantError> {
    if weight_index == 0 || weight_index > group.system.rank {
        return Err(InvariantError::RankOutOfRange {
            label: group.system.type_label,
            rank: weight_index,
        });
    }
    let weight = group.system.fundamental_weights[weight_index - 1].clone();
    let orbit = group
        .orbit(&weight)
        .map_err(|_| InvariantError::OrbitCapExceeded)?;
    let mult = orbit.stabilizer_order;
    Ok(InvariantPolynomial::new(weight_index, degree, orbit.points, mult))
}

/// Deterministic rational sample points in the span of the roots.
///
/// Coordinates are built from simple-root coefficients with small random
/// numerators and denominators, so all downstream arithmetic stays exact.
pub fn rational_span_points(group: &WeylGroup, count: usize, seed: u64) -> Vec<Vec<Q>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let simple: Vec<Vec<Q>> = group.system.simple_roots().iter().map(|s| s.to_vec()).collect();
    let n = group.system.ambient_dim;
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut h = vec![Q::zero(); n];
        for alpha in &simple {
            let num = rng.gen_range(-9i64..=9);
            let den = rng.gen_range(1i64..=4);
            let c = q(num, den);
            for (ht, at) in h.iter_mut().zip(alpha) {
                *ht += &c * at;
            }
        }
        if !exact::is_zero_vec(&h) {
            out.push(h);
        }
    }
    out
}

fn regular_point(group: &WeylGroup, seed: u64) -> Result<Vec<Q>, InvariantError> {
    for h in rational_span_points(group, 64, seed) {
        if group.system.roots.iter().all(|r| !dot(r, &h).is_zero()) {
            return Ok(h);
        }
    }
    Err(InvariantError::DegenerateSample)
}

/// The Chevalley generators: one invariant per table degree, with the
/// weight-to-degree pairing found by deterministic search (smallest weight
/// index first, backtracking) validated by exact gradient independence at
/// a regular rational point.
pub fn homogeneous_generators(group: &WeylGroup) -> Result<Vec<InvariantPolynomial>, InvariantError> {
    let degrees = chevalley_degrees(group.system.type_label, group.system.rank)?;
    let l = group.system.rank;
    let h0 = regular_point(group, 0x5eed)?;

    // Candidate polynomials and their exact gradients at h0, cached per
    // (degree, weight).
    let mut candidates: Vec<Vec<Option<(InvariantPolynomial, Vec<Q>)>>> = Vec::new();
    for &m in &degrees {
        let mut row = Vec::with_capacity(l);
        for w in 1..=l {
            let p = power_sum(group, w, m)?;
            // Identically-zero power sums (odd degree on a centrally
            // symmetric orbit) are unusable; a nonzero value or gradient at
            // a generic point certifies the polynomial is nonzero.
            let grad = p.grad_q(&h0);
            if grad.iter().all(Zero::is_zero) && p.eval_q(&h0).is_zero() {
                row.push(None);
            } else {
                row.push(Some((p, grad)));
            }
        }
        candidates.push(row);
    }

    // Depth-first search over weight assignments; prune on exact rank
    // deficiency of the chosen gradient rows.
    fn search(
        depth: usize,
        degrees: &[u32],
        candidates: &[Vec<Option<(InvariantPolynomial, Vec<Q>)>>],
        chosen: &mut Vec<usize>,
        rows: &mut Vec<Vec<Q>>,
    ) -> bool {
        if depth == degrees.len() {
            return true;
        }
        for (w, cand) in candidates[depth].iter().enumerate() {
            let Some((_, grad)) = cand else { continue };
            rows.push(grad.clone());
            if exact::rank(&QMatrix::from_rows(rows)) == rows.len() {
                chosen.push(w);
                if search(depth + 1, degrees, candidates, chosen, rows) {
                    return true;
                }
                chosen.pop();
            }
            rows.pop();
        }
        false
    }

    let mut chosen = Vec::new();
    let mut rows = Vec::new();
    if !search(0, &degrees, &candidates, &mut chosen, &mut rows) {
        return Err(InvariantError::NoValidAssignment { degrees });
    }
    Ok(chosen
        .iter()
        .zip(candidates)
        .map(|(&w, row)| row.into_iter().nth(w).unwrap().unwrap().0)
        .collect())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TrigKind {
    RealPart,
    ImaginaryPart,
}

/// Trigonometric invariant: real or imaginary part of
/// `sum_{mu in orbit} e^{i <mu, H>}`, scaled by the stabilizer order.
/// Real parts are even functions, imaginary parts odd.
#[derive(Clone)]
pub struct TrigInvariant {
    pub weight_index: usize,
    pub kind: TrigKind,
    pub orbit_points: Vec<Vec<Q>>,
    pub multiplicity: u128,
    cached_f64: Vec<Vec<f64>>,
}

impl TrigInvariant {
    pub fn eval(&self, x: &[f64]) -> f64 {
        let mut acc = 0.0;
        for mu in &self.cached_f64 {
            let d: f64 = mu.iter().zip(x).map(|(a, b)| a * b).sum();
            acc += match self.kind {
                TrigKind::RealPart => d.cos(),
                TrigKind::ImaginaryPart => d.sin(),
            };
        }
        acc * self.multiplicity as f64
    }
}

/// Real and imaginary parts of the exponential orbit sums. Imaginary parts
/// are omitted when -id is in the group: the orbit is then centrally
/// symmetric and the sine terms cancel identically.
pub fn trigonometric_generators(group: &WeylGroup) -> Result<Vec<TrigInvariant>, InvariantError> {
    let mut out = Vec::new();
    for w in 1..=group.system.rank {
        let weight = group.system.fundamental_weights[w - 1].clone();
        let orbit = group
            .orbit(&weight)
            .map_err(|_| InvariantError::OrbitCapExceeded)?;
        let mult = orbit.stabilizer_order;
        let cached: Vec<Vec<f64>> = orbit.points.iter().map(|p| exact::qvec_to_f64(p)).collect();
        out.push(TrigInvariant {
            weight_index: w,
            kind: TrigKind::RealPart,
            orbit_points: orbit.points.clone(),
            multiplicity: mult,
            cached_f64: cached.clone(),
        });
        if !group.contains_minus_id {
            out.push(TrigInvariant {
                weight_index: w,
                kind: TrigKind::ImaginaryPart,
                orbit_points: orbit.points,
                multiplicity: mult,
                cached_f64: cached,
            });
        }
    }
    Ok(out)
}

/// Non-trivial odd invariants exist exactly when -id is missing.
pub fn skew_invariants_exist(group: &WeylGroup) -> bool {
    !group.contains_minus_id
}

/// Report of the Jacobian independence test.
#[derive(Debug, Serialize)]
pub struct JacobianReport {
    pub pass: bool,
    pub regular_samples: usize,
    /// Jacobian determinant nonzero at every regular sample.
    pub nonzero_at_regular: bool,
    /// Jacobian vanishes exactly at points projected onto each root hyperplane.
    pub vanishes_on_hyperplanes: bool,
    /// Max relative deviation of J(H) / prod_{a>0} a(H) across samples.
    pub ratio_relative_deviation: f64,
    pub notes: Vec<String>,
}

/// Jacobian criterion: with the simple roots as a basis of the span,
/// J(H) = det <grad P_i(H), alpha_j> must be nonzero at regular points,
/// vanish on every root hyperplane, and be a constant multiple of
/// prod_{alpha > 0} alpha(H). All checks are exact; the ratio constancy is
/// also reported as a float deviation.
pub fn jacobian_independence_test(
    group: &WeylGroup,
    polys: &[InvariantPolynomial],
    trials: usize,
    seed: u64,
) -> Result<JacobianReport, InvariantError> {
    let l = group.system.rank;
    assert_eq!(polys.len(), l, "need exactly rank-many polynomials");
    let simple: Vec<Vec<Q>> = group.system.simple_roots().iter().map(|s| s.to_vec()).collect();
    // One linear form per reflection wall: proportional positive roots
    // (alpha and 2 alpha in a non-reduced system) share their wall, so only
    // the shorter representative enters the product.
    let positive: Vec<Vec<Q>> = {
        let all: Vec<Vec<Q>> = group.system.positive_roots().iter().map(|s| s.to_vec()).collect();
        all.iter()
            .filter(|a| {
                let half = exact::scale(&q(1, 2), a);
                !all.contains(&half)
            })
            .cloned()
            .collect()
    };

    let jac = |h: &[Q]| -> Q {
        let rows: Vec<Vec<Q>> = polys
            .iter()
            .map(|p| {
                let g = p.grad_q(h);
                simple.iter().map(|a| dot(&g, a)).collect()
            })
            .collect();
        QMatrix::from_rows(&rows).determinant()
    };
    let root_product = |h: &[Q]| -> Q {
        let mut acc = Q::from_integer(BigInt::from(1));
        for a in &positive {
            acc *= dot(a, h);
        }
        acc
    };

    let mut notes = Vec::new();
    let mut regular: Vec<Vec<Q>> = Vec::new();
    let mut attempts = 0;
    for h in rational_span_points(group, trials * 8, seed) {
        if regular.len() == trials {
            break;
        }
        attempts += 1;
        if group.system.roots.iter().all(|r| !dot(r, &h).is_zero()) {
            regular.push(h);
        }
    }
    if regular.is_empty() {
        return Err(InvariantError::DegenerateSample);
    }
    if regular.len() < trials {
        notes.push(format!(
            "only {} regular samples out of {} attempts",
            regular.len(),
            attempts
        ));
    }

    let mut nonzero_at_regular = true;
    let mut ratios: Vec<Q> = Vec::new();
    for h in &regular {
        let j = jac(h);
        if j.is_zero() {
            nonzero_at_regular = false;
            notes.push("Jacobian vanished at a regular point".to_string());
            break;
        }
        ratios.push(j / root_product(h));
    }

    // Exact vanishing on each root hyperplane: project a generic point onto
    // alpha(H) = 0 and evaluate.
    let mut vanishes_on_hyperplanes = true;
    if nonzero_at_regular {
        let base = &regular[0];
        for a in &positive {
            let c = dot(base, a) / dot(a, a);
            let projected = exact::sub(base, &exact::scale(&c, a));
            if !jac(&projected).is_zero() {
                vanishes_on_hyperplanes = false;
                notes.push("Jacobian nonzero on a root hyperplane".to_string());
                break;
            }
        }
    }

    let mut ratio_relative_deviation = 0.0;
    if nonzero_at_regular && !ratios.is_empty() {
        let first = ratios[0].clone();
        for r in &ratios[1..] {
            let dev = (r - &first).abs() / first.abs();
            let dev = dev.to_f64().unwrap_or(f64::INFINITY);
            if dev > ratio_relative_deviation {
                ratio_relative_deviation = dev;
            }
        }
    }

    let pass = nonzero_at_regular && vanishes_on_hyperplanes && ratio_relative_deviation <= 1e-8;
    Ok(JacobianReport {
        pass,
        regular_samples: regular.len(),
        nonzero_at_regular,
        vanishes_on_hyperplanes,
        ratio_relative_deviation,
        notes,
    })
}

/// Sum rule tying the degree table to the root count:
/// sum (m_i - 1) equals the number of positive roots of the corresponding
/// reduced system.
pub fn degree_sum_rule_holds(label: TypeLabel, rank: usize, positive_count: usize) -> bool {
    match chevalley_degrees(label, rank) {
        Ok(degrees) => {
            let sum: u32 = degrees.iter().map(|m| m - 1).sum();
            sum as usize == positive_count
        }
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q_to_f64, qvec_from_i64};
    use crate::rootsys::build_root_system;
    use crate::weylgrp::generate_weyl_group;

    fn group(label: TypeLabel, rank: usize) -> WeylGroup {
        generate_weyl_group(build_root_system(label, rank).unwrap(), 10_000_000).unwrap()
    }

    #[test]
    fn degree_table_rows() {
        assert_eq!(chevalley_degrees(TypeLabel::A, 2).unwrap(), vec![2, 3]);
        assert_eq!(chevalley_degrees(TypeLabel::G2, 2).unwrap(), vec![2, 6]);
        assert_eq!(chevalley_degrees(TypeLabel::D, 4).unwrap(), vec![2, 4, 6, 4]);
        assert_eq!(chevalley_degrees(TypeLabel::B, 3).unwrap(), vec![2, 4, 6]);
        assert_eq!(chevalley_degrees(TypeLabel::C, 3).unwrap(), vec![2, 4, 6]);
        assert_eq!(chevalley_degrees(TypeLabel::E6, 6).unwrap(), vec![2, 5, 6, 8, 9, 12]);
        assert_eq!(
            chevalley_degrees(TypeLabel::E8, 8).unwrap(),
            vec![2, 8, 12, 14, 18, 20, 24, 30]
        );
        assert!(chevalley_degrees(TypeLabel::B, 1).is_err());
    }

    #[test]
    fn degree_sum_rule() {
        for (label, rank) in [
            (TypeLabel::A, 3),
            (TypeLabel::B, 4),
            (TypeLabel::D, 5),
            (TypeLabel::G2, 2),
            (TypeLabel::F4, 4),
            (TypeLabel::E6, 6),
            (TypeLabel::E7, 7),
            (TypeLabel::E8, 8),
        ] {
            let rs = build_root_system(label, rank).unwrap();
            assert!(degree_sum_rule_holds(label, rank, rs.positive.len()), "{label}_{rank}");
        }
    }

    #[test]
    fn a2_generators_are_power_sums_on_trace_zero() {
        // Orbit of lambda_1 consists of e_i - (1/3)(1,1,1), so on trace-zero
        // points <mu_i, H> = H_i and the generators are proportional to the
        // coordinate power sums x^m + y^m + z^m.
        let a2 = group(TypeLabel::A, 2);
        let gens = homogeneous_generators(&a2).unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0].degree, 2);
        assert_eq!(gens[1].degree, 3);
        for h in [qvec_from_i64(&[1, 2, -3]), qvec_from_i64(&[5, -1, -4])] {
            let p2 = q_to_f64(&gens[0].eval_q(&h));
            let p3 = q_to_f64(&gens[1].eval_q(&h));
            let x: Vec<f64> = h.iter().map(q_to_f64).collect();
            let s2: f64 = x.iter().map(|v| v * v).sum();
            let s3: f64 = x.iter().map(|v| v * v * v).sum();
            let m2 = gens[0].multiplicity as f64;
            let m3 = gens[1].multiplicity as f64;
            assert!((p2 - m2 * s2).abs() < 1e-9, "{p2} vs {s2}");
            assert!((p3 - m3 * s3).abs() < 1e-9, "{p3} vs {s3}");
        }
        assert_eq!(gens[0].parity, Parity::Even);
        assert_eq!(gens[1].parity, Parity::Odd);
    }

    #[test]
    fn a1_single_even_generator() {
        let a1 = group(TypeLabel::A, 1);
        let gens = homogeneous_generators(&a1).unwrap();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].degree, 2);
        // quadratic in the single span coordinate: P(tH) = t^2 P(H)
        let h = vec![q(1, 2), q(-1, 2)];
        let th = exact::scale(&qi(3), &h);
        assert_eq!(gens[0].eval_q(&th), qi(9) * gens[0].eval_q(&h));
    }

    #[test]
    fn b2_generators_even() {
        let b2 = group(TypeLabel::B, 2);
        let gens = homogeneous_generators(&b2).unwrap();
        assert_eq!(gens.iter().map(|g| g.degree).collect::<Vec<_>>(), vec![2, 4]);
        for g in &gens {
            assert_eq!(g.parity, Parity::Even);
            // evenness: P(-H) = P(H) exactly
            let h = qvec_from_i64(&[3, -5]);
            assert_eq!(g.eval_q(&h), g.eval_q(&exact::neg(&h)));
        }
    }

    #[test]
    fn invariance_exact_under_generators() {
        for (label, rank) in [(TypeLabel::A, 3), (TypeLabel::B, 3), (TypeLabel::G2, 2)] {
            let w = group(label, rank);
            let gens = homogeneous_generators(&w).unwrap();
            let points = rational_span_points(&w, 20, 7);
            for p in &gens {
                for h in &points {
                    let val = p.eval_q(h);
                    for g in 0..w.generators.len() {
                        let gh = w.apply_generator(g, h);
                        assert_eq!(p.eval_q(&gh), val, "{label}_{rank} deg {}", p.degree);
                    }
                }
            }
        }
    }

    #[test]
    fn homogeneity_exact() {
        let g2 = group(TypeLabel::G2, 2);
        let gens = homogeneous_generators(&g2).unwrap();
        let h = qvec_from_i64(&[2, -1, -1]);
        for p in &gens {
            let t = q(3, 2);
            let th = exact::scale(&t, &h);
            assert_eq!(p.eval_q(&th), q_pow(&t, p.degree) * p.eval_q(&h));
        }
    }

    #[test]
    fn jacobian_pass_and_fail() {
        let a2 = group(TypeLabel::A, 2);
        let gens = homogeneous_generators(&a2).unwrap();
        let report = jacobian_independence_test(&a2, &gens, 12, 99).unwrap();
        assert!(report.pass, "{report:?}");
        assert_eq!(report.ratio_relative_deviation, 0.0);

        // duplicated generator: dependent rows, J identically zero
        let dup = vec![gens[0].clone(), gens[0].clone()];
        let report = jacobian_independence_test(&a2, &dup, 6, 99).unwrap();
        assert!(!report.pass);
        assert!(!report.nonzero_at_regular);

        let g2 = group(TypeLabel::G2, 2);
        let gens = homogeneous_generators(&g2).unwrap();
        let report = jacobian_independence_test(&g2, &gens, 8, 5).unwrap();
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn trig_generators() {
        // W(A_1) = {+-1}: single weight, q(H) = 2 cos(lambda(H)), no imaginary part.
        let a1 = group(TypeLabel::A, 1);
        let trig = trigonometric_generators(&a1).unwrap();
        assert_eq!(trig.len(), 1);
        assert_eq!(trig[0].kind, TrigKind::RealPart);
        let h = [0.3, -0.3];
        let lam = exact::qvec_to_f64(&a1.system.fundamental_weights[0]);
        let expect = (lam[0] * h[0] + lam[1] * h[1]).cos() * 2.0;
        assert!((trig[0].eval(&h) - expect).abs() < 1e-12);

        // A_2 has odd imaginary parts.
        let a2 = group(TypeLabel::A, 2);
        let trig = trigonometric_generators(&a2).unwrap();
        let imag: Vec<&TrigInvariant> =
            trig.iter().filter(|t| t.kind == TrigKind::ImaginaryPart).collect();
        assert_eq!(imag.len(), 2);
        let x = [0.7, -0.2, -0.5];
        let neg_x = [-0.7, 0.2, 0.5];
        let v = imag[0].eval(&x);
        assert!(v.abs() > 1e-6);
        assert!((imag[0].eval(&neg_x) + v).abs() < 1e-12);

        // numeric invariance under a generator
        let g = a2.generators[0].to_f64();
        let gx: Vec<f64> = (0..3).map(|i| (0..3).map(|j| g[i][j] * x[j]).sum()).collect();
        for t in &trig {
            assert!((t.eval(&gx) - t.eval(&x)).abs() <= 1e-12);
        }
    }

    #[test]
    fn skew_existence() {
        assert!(skew_invariants_exist(&group(TypeLabel::A, 2)));
        assert!(!skew_invariants_exist(&group(TypeLabel::F4, 4)));
        assert!(!skew_invariants_exist(&group(TypeLabel::B, 2)));
    }

    #[test]
    fn d4_has_two_independent_degree_four_generators() {
        let d4 = group(TypeLabel::D, 4);
        let gens = homogeneous_generators(&d4).unwrap();
        assert_eq!(gens.iter().map(|g| g.degree).collect::<Vec<_>>(), vec![2, 4, 6, 4]);
        let report = jacobian_independence_test(&d4, &gens, 6, 11).unwrap();
        assert!(report.pass, "{report:?}");
    }
}
