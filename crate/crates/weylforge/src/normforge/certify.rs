//! Sampling-based certification of norm properties: strong convexity of the
//! fundamental tensor, strict-positivity correction constants, and the
//! convexity margin gamma. Certificates are evidence from a deterministic
//! sample set plus local refinement, not proofs, and they record exactly
//! what was searched.

use super::eigen::min_eigenvalue;
use super::expr::Node;
use super::sampling::{indexed_min, sphere_samples};
use serde::{Deserialize, Serialize};

/// Execution mode for the sampling loops.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parallelism {
    Sequential,
    #[cfg(feature = "parallel")]
    Rayon,
}

impl Default for Parallelism {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        Parallelism::Rayon
    }
    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        Parallelism::Sequential
    }
}

impl Parallelism {
    pub fn is_parallel(self) -> bool {
        #[cfg(feature = "parallel")]
        {
            self == Parallelism::Rayon
        }
        #[cfg(not(feature = "parallel"))]
        {
            false
        }
    }
}

/// Knobs for certification runs. `per_pair` points are placed on each 2-D
/// coordinate circle and `random` generic points on top of those.
#[derive(Clone, Copy, Debug)]
pub struct CertifyOptions {
    pub per_pair: usize,
    pub random: usize,
    pub tolerance: f64,
    pub seed: u64,
    /// Analytic-vs-finite-difference cross-checks on this many leading samples.
    pub fd_checks: usize,
    pub parallelism: Parallelism,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            per_pair: 1 << 14,
            random: 1 << 14,
            tolerance: 1e-8,
            seed: 42,
            fd_checks: 128,
            parallelism: Parallelism::default(),
        }
    }
}

impl CertifyOptions {
    /// Scale the per-pair count so the total stays near `total` samples for
    /// the given dimension.
    pub fn with_total(total: usize, dim: usize) -> Self {
        let pairs = if dim >= 2 { dim * (dim - 1) / 2 } else { 1 };
        CertifyOptions {
            per_pair: (total / 2 / pairs).max(64),
            random: (total / 2).max(64),
            ..Default::default()
        }
    }
}

/// Outcome of a convexity certification run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConvexityCertificate {
    pub sample_count: usize,
    pub min_eigenvalue: f64,
    pub gamma_used: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
    pub worst_point: Vec<f64>,
    pub seed: u64,
    /// Max relative disagreement between the analytic Hessian and central
    /// finite differences over the cross-checked samples.
    pub fd_max_relative_error: f64,
    /// Samples skipped because the Hessian was non-finite there (singular
    /// directions of a merely C^1 locus).
    pub skipped_nonfinite: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl ConvexityCertificate {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Minimum eigenvalue of (1/2) Hess(node) over the sphere sample set, with
/// local descent refinement from the worst sample. Returns
/// (min_eig, worst_point, fd_error, skipped).
fn min_hessian_eig(node: &Node, dim: usize, opts: &CertifyOptions) -> (f64, Vec<f64>, f64, usize) {
    let samples = sphere_samples(dim, opts.per_pair, opts.random, opts.seed);
    let n = samples.len();
    let eig_at = |x: &[f64]| -> f64 {
        let jet = node.jet(x);
        if !jet.is_finite() {
            return f64::INFINITY; // skipped: reported separately
        }
        let half_h: Vec<f64> = jet.h.iter().map(|v| 0.5 * v).collect();
        min_eigenvalue(&half_h, dim)
    };
    let (worst_idx, mut min_eig) = indexed_min(n, opts.parallelism.is_parallel(), |i| eig_at(&samples[i]));
    let skipped = samples
        .iter()
        .filter(|x| !node.jet(x).is_finite())
        .count();
    let mut worst = samples[worst_idx].clone();

    // Local projected descent from the worst sample: nudge along the sphere
    // in the direction that decreases the minimum eigenvalue.
    let mut step = 0.05;
    for _ in 0..60 {
        let mut improved = false;
        for axis in 0..dim {
            for sign in [1.0, -1.0] {
                let mut cand = worst.clone();
                cand[axis] += sign * step;
                let norm: f64 = cand.iter().map(|v| v * v).sum::<f64>().sqrt();
                if norm < 1e-9 {
                    continue;
                }
                cand.iter_mut().for_each(|v| *v /= norm);
                let e = eig_at(&cand);
                if e < min_eig {
                    min_eig = e;
                    worst = cand;
                    improved = true;
                }
            }
        }
        if !improved {
            step *= 0.5;
            if step < 1e-6 {
                break;
            }
        }
    }

    // Central-difference cross-check (step 1e-5) on the leading samples:
    // the analytic gradient against value differences, and the analytic
    // Hessian against differences of the analytic gradient.
    let mut fd_err = 0.0f64;
    for x in samples.iter().take(opts.fd_checks) {
        fd_err = fd_err.max(fd_cross_check(node, x));
    }

    (min_eig, worst, fd_err, skipped)
}

/// Max relative disagreement at `x` between the analytic derivatives of
/// `node` and central differences with step 1e-5. Returns 0 for samples
/// where the jet is non-finite (handled by the skip accounting).
pub fn fd_cross_check(node: &Node, x: &[f64]) -> f64 {
    let jet = node.jet(x);
    if !jet.is_finite() {
        return 0.0;
    }
    let h = 1e-5;
    let g_fd = super::expr::fd_gradient(node, x, h);
    let gscale = jet.g.iter().map(|v| v.abs()).fold(1.0f64, f64::max);
    let g_err = jet
        .g
        .iter()
        .zip(&g_fd)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max)
        / gscale;
    let h_fd = super::expr::fd_hessian_of_gradient(node, x, h);
    let hscale = jet.h.iter().map(|v| v.abs()).fold(1.0f64, f64::max);
    let h_err = jet
        .h
        .iter()
        .zip(&h_fd)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max)
        / hscale;
    g_err.max(h_err)
}

/// Certify that (1/2) Hess of the given L^2 expression is positive definite
/// on the sphere (hence everywhere off the origin, by 0-homogeneity).
pub fn certify_l2(l2: &Node, dim: usize, gamma_used: f64, opts: &CertifyOptions) -> ConvexityCertificate {
    let (min_eig, worst, fd_err, skipped) = min_hessian_eig(l2, dim, opts);
    ConvexityCertificate {
        sample_count: sphere_sample_count(dim, opts),
        min_eigenvalue: min_eig,
        gamma_used,
        tolerance: opts.tolerance,
        verdict: if min_eig > opts.tolerance {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        worst_point: worst,
        seed: opts.seed,
        fd_max_relative_error: fd_err,
        skipped_nonfinite: skipped,
    }
}

fn sphere_sample_count(dim: usize, opts: &CertifyOptions) -> usize {
    let pair_points = if dim >= 2 {
        dim * (dim - 1) / 2 * opts.per_pair
    } else {
        2
    };
    pair_points + opts.random
}

/// Convexity margin for a 2-homogeneous function F: delta is the sampled
/// minimum eigenvalue of (1/2) Hess F on the sphere; the returned gamma is
/// max(0, -delta) plus a margin, and the accompanying certificate is for
/// gamma |X|^2 + F.
pub fn gamma_for_convexity(
    f: &Node,
    dim: usize,
    margin: f64,
    opts: &CertifyOptions,
) -> (f64, ConvexityCertificate) {
    let (delta, _, _, _) = min_hessian_eig(f, dim, opts);
    let base = if delta < 0.0 { -delta } else { 0.0 };
    let gamma = base + margin * base.max(1.0);
    let l2 = Node::Sum(vec![(gamma, Node::quad(dim)), (1.0, f.clone())]);
    let cert = certify_l2(&l2, dim, gamma, opts);
    (gamma, cert)
}

/// Strict-positivity constant for an even-degree homogeneous polynomial:
/// the maximum of the negative part over the unit sphere, inflated by the
/// margin, so that c <H,H>^k + P(H) is strictly positive at all samples.
/// Returns 0 when P is non-negative at every sample.
pub fn strict_positivity_constant(
    poly: &Node,
    dim: usize,
    margin: f64,
    opts: &CertifyOptions,
) -> f64 {
    let samples = sphere_samples(dim, opts.per_pair, opts.random, opts.seed);
    let (worst_idx, min_val) =
        indexed_min(samples.len(), opts.parallelism.is_parallel(), |i| poly.value(&samples[i]));
    if min_val >= 0.0 {
        return 0.0;
    }
    // Refine the minimum locally on the sphere.
    let mut worst = samples[worst_idx].clone();
    let mut best = min_val;
    let mut step = 0.05;
    for _ in 0..80 {
        let mut improved = false;
        for axis in 0..dim {
            for sign in [1.0, -1.0] {
                let mut cand = worst.clone();
                cand[axis] += sign * step;
                let norm: f64 = cand.iter().map(|v| v * v).sum::<f64>().sqrt();
                if norm < 1e-9 {
                    continue;
                }
                cand.iter_mut().for_each(|v| *v /= norm);
                let v = poly.value(&cand);
                if v < best {
                    best = v;
                    worst = cand;
                    improved = true;
                }
            }
        }
        if !improved {
            step *= 0.5;
            if step < 1e-7 {
                break;
            }
        }
    }
    (-best) * (1.0 + margin)
}

/// Max over sampled unit vectors of |L(X) - L(-X)|.
pub fn reversibility_defect(l: impl Fn(&[f64]) -> f64 + Sync, dim: usize, opts: &CertifyOptions) -> f64 {
    let samples = sphere_samples(dim, opts.per_pair.min(1024), opts.random.min(4096), opts.seed);
    let (_, max_neg) = indexed_min(samples.len(), opts.parallelism.is_parallel(), |i| {
        let x = &samples[i];
        let neg: Vec<f64> = x.iter().map(|v| -v).collect();
        -(l(x) - l(&neg)).abs()
    });
    -max_neg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normforge::expr::OrbitPoly;

    #[test]
    fn euclidean_certifies_with_unit_eigenvalue() {
        let l2 = Node::quad(3);
        let opts = CertifyOptions {
            per_pair: 64,
            random: 256,
            ..Default::default()
        };
        let cert = certify_l2(&l2, 3, 1.0, &opts);
        assert!(cert.passed());
        assert!((cert.min_eigenvalue - 1.0).abs() < 1e-9);
        assert!(cert.fd_max_relative_error < 1e-6);
    }

    #[test]
    fn gamma_for_euclidean_is_margin_only() {
        let f = Node::quad(2);
        let opts = CertifyOptions {
            per_pair: 128,
            random: 128,
            ..Default::default()
        };
        let (gamma, cert) = gamma_for_convexity(&f, 2, 0.05, &opts);
        // delta = 1 > 0 already, so gamma is the margin alone
        assert!((gamma - 0.05).abs() < 1e-12);
        assert!(cert.passed());
    }

    #[test]
    fn quartic_needs_gamma() {
        // F = (x^4 + y^4)^{1/2}: (1/2) Hess has a zero eigenvalue on the
        // axes, so certification at gamma = 0 must fail and the computed
        // gamma must rescue it.
        let p4 = Node::Poly(OrbitPoly {
            points: vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![-1.0, 0.0], vec![0.0, -1.0]],
            multiplicity: 0.5,
            degree: 4,
        });
        let f = Node::Pow(Box::new(p4), 0.5);
        let opts = CertifyOptions {
            per_pair: 4096,
            random: 1024,
            ..Default::default()
        };
        let bare = certify_l2(&f, 2, 0.0, &opts);
        assert!(!bare.passed(), "min eig {}", bare.min_eigenvalue);
        let (gamma, cert) = gamma_for_convexity(&f, 2, 0.05, &opts);
        assert!(gamma > 0.0);
        assert!(cert.passed(), "{cert:?}");
        assert!(cert.min_eigenvalue > 1e-8);
    }

    #[test]
    fn positivity_constant_on_known_quartic() {
        // P = x^4 - 3 x^2 y^2 on the circle: with u = cos^2 t the value is
        // 4u^2 - 3u, minimized at u = 3/8 with value -9/16.
        let xxxx = OrbitPoly {
            points: vec![vec![1.0, 0.0]],
            multiplicity: 1.0,
            degree: 4,
        };
        // x^2 y^2 = ((x^2+y^2)^2 - x^4 - y^4)/2
        let x4y4 = OrbitPoly {
            points: vec![vec![1.0, 0.0], vec![0.0, 1.0]],
            multiplicity: 1.0,
            degree: 4,
        };
        let p = Node::Sum(vec![
            (1.0, Node::Poly(xxxx)),
            (-1.5, Node::IntPow(Box::new(Node::quad(2)), 2)),
            (1.5, Node::Poly(x4y4)),
        ]);
        // sanity: P(1,1) = 1 - 3 = -2
        assert!((p.value(&[1.0, 1.0]) + 2.0).abs() < 1e-12);
        let opts = CertifyOptions {
            per_pair: 1 << 14,
            random: 1024,
            ..Default::default()
        };
        let c = strict_positivity_constant(&p, 2, 0.1, &opts);
        let expect = 9.0 / 16.0 * 1.1;
        assert!((c - expect).abs() < 1e-4, "c = {c}, expect {expect}");

        // non-negative polynomial: constant is zero
        let nonneg = Node::IntPow(Box::new(Node::quad(2)), 2);
        assert_eq!(strict_positivity_constant(&nonneg, 2, 0.1, &opts), 0.0);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let f = Node::Pow(
            Box::new(Node::Sum(vec![
                (0.4, Node::IntPow(Box::new(Node::quad(3)), 2)),
                (
                    1.0,
                    Node::Poly(OrbitPoly {
                        points: vec![
                            vec![1.0, 0.0, 0.0],
                            vec![0.0, 1.0, 0.0],
                            vec![0.0, 0.0, 1.0],
                        ],
                        multiplicity: 2.0,
                        degree: 4,
                    }),
                ),
            ])),
            0.5,
        );
        let seq = CertifyOptions {
            per_pair: 256,
            random: 256,
            parallelism: Parallelism::Sequential,
            ..Default::default()
        };
        let cert_seq = certify_l2(&f, 3, 0.0, &seq);
        #[cfg(feature = "parallel")]
        {
            let par = CertifyOptions {
                parallelism: Parallelism::Rayon,
                ..seq
            };
            let cert_par = certify_l2(&f, 3, 0.0, &par);
            assert_eq!(cert_seq.min_eigenvalue, cert_par.min_eigenvalue);
            assert_eq!(cert_seq.worst_point, cert_par.worst_point);
        }
        let _ = cert_seq;
    }
}
