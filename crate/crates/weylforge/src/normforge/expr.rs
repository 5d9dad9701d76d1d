//! Differentiable expression trees for the norm constructions.
//!
//! A node evaluates to a scalar together with its analytic gradient and
//! Hessian (a "jet"), composed by the chain rule through sums, products,
//! integer powers, real powers, and square roots. The leaves are the
//! squared Euclidean norm of a coordinate block and invariant orbit power
//! sums. Everything here is plain f64; exact checks live upstream.

use serde::{Deserialize, Serialize};

/// Value, gradient, and Hessian (row-major, full storage) at a point.
#[derive(Clone, Debug)]
pub struct Jet {
    pub v: f64,
    pub g: Vec<f64>,
    pub h: Vec<f64>,
}

impl Jet {
    fn zero(n: usize) -> Jet {
        Jet {
            v: 0.0,
            g: vec![0.0; n],
            h: vec![0.0; n * n],
        }
    }

    pub fn is_finite(&self) -> bool {
        self.v.is_finite()
            && self.g.iter().all(|x| x.is_finite())
            && self.h.iter().all(|x| x.is_finite())
    }
}

/// An orbit power sum `mult * sum_mu <mu, x>^degree` with f64 orbit data.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrbitPoly {
    pub points: Vec<Vec<f64>>,
    pub multiplicity: f64,
    pub degree: u32,
}

impl OrbitPoly {
    fn value(&self, x: &[f64]) -> f64 {
        let m = self.degree as i32;
        let mut acc = 0.0;
        for mu in &self.points {
            let d: f64 = mu.iter().zip(x).map(|(a, b)| a * b).sum();
            acc += d.powi(m);
        }
        acc * self.multiplicity
    }

    fn jet(&self, x: &[f64]) -> Jet {
        let n = x.len();
        let m = self.degree as i32;
        let mut out = Jet::zero(n);
        for mu in &self.points {
            let d: f64 = mu.iter().zip(x).map(|(a, b)| a * b).sum();
            out.v += d.powi(m);
            let gc = m as f64 * d.powi(m - 1);
            let hc = if m >= 2 { (m * (m - 1)) as f64 * d.powi(m - 2) } else { 0.0 };
            for i in 0..n {
                out.g[i] += gc * mu[i];
                if hc != 0.0 {
                    // upper triangle only; mirrored below for bitwise symmetry
                    let ci = hc * mu[i];
                    for j in i..n {
                        out.h[i * n + j] += ci * mu[j];
                    }
                }
            }
        }
        out.v *= self.multiplicity;
        out.g.iter_mut().for_each(|g| *g *= self.multiplicity);
        for i in 0..n {
            for j in i..n {
                out.h[i * n + j] *= self.multiplicity;
                out.h[j * n + i] = out.h[i * n + j];
            }
        }
        out
    }
}

/// Expression tree node.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum Node {
    /// |x[start..end]|^2.
    Quad { start: usize, end: usize },
    Poly(OrbitPoly),
    /// Linear combination sum_i c_i n_i.
    Sum(Vec<(f64, Node)>),
    Prod(Box<Node>, Box<Node>),
    /// u^k for integer k >= 1 (valid for any sign of u).
    IntPow(Box<Node>, u32),
    /// u^s for real s; requires u > 0.
    Pow(Box<Node>, f64),
    /// u^(1/2); requires u > 0.
    Sqrt(Box<Node>),
}

impl Node {
    pub fn quad(dim: usize) -> Node {
        Node::Quad { start: 0, end: dim }
    }

    pub fn value(&self, x: &[f64]) -> f64 {
        match self {
            Node::Quad { start, end } => x[*start..*end].iter().map(|v| v * v).sum(),
            Node::Poly(p) => p.value(x),
            Node::Sum(terms) => terms.iter().map(|(c, n)| c * n.value(x)).sum(),
            Node::Prod(a, b) => a.value(x) * b.value(x),
            Node::IntPow(u, k) => u.value(x).powi(*k as i32),
            Node::Pow(u, s) => u.value(x).powf(*s),
            Node::Sqrt(u) => u.value(x).sqrt(),
        }
    }

    /// Value, gradient and Hessian by the chain rule.
    pub fn jet(&self, x: &[f64]) -> Jet {
        let n = x.len();
        match self {
            Node::Quad { start, end } => {
                let mut out = Jet::zero(n);
                for i in *start..*end {
                    out.v += x[i] * x[i];
                    out.g[i] = 2.0 * x[i];
                    out.h[i * n + i] = 2.0;
                }
                out
            }
            Node::Poly(p) => p.jet(x),
            Node::Sum(terms) => {
                let mut out = Jet::zero(n);
                for (c, node) in terms {
                    let j = node.jet(x);
                    out.v += c * j.v;
                    for i in 0..n {
                        out.g[i] += c * j.g[i];
                    }
                    for i in 0..n * n {
                        out.h[i] += c * j.h[i];
                    }
                }
                out
            }
            Node::Prod(a, b) => {
                let ja = a.jet(x);
                let jb = b.jet(x);
                let mut out = Jet::zero(n);
                out.v = ja.v * jb.v;
                for i in 0..n {
                    out.g[i] = ja.g[i] * jb.v + ja.v * jb.g[i];
                }
                for i in 0..n {
                    for j in i..n {
                        let v = ja.h[i * n + j] * jb.v
                            + ja.g[i] * jb.g[j]
                            + ja.g[j] * jb.g[i]
                            + ja.v * jb.h[i * n + j];
                        out.h[i * n + j] = v;
                        out.h[j * n + i] = v;
                    }
                }
                out
            }
            Node::IntPow(u, k) => {
                let ju = u.jet(x);
                let k = *k as i32;
                let f2 = if k >= 2 {
                    (k * (k - 1)) as f64 * ju.v.powi(k - 2)
                } else {
                    0.0
                };
                chain(&ju, ju.v.powi(k), k as f64 * ju.v.powi(k - 1), f2, n)
            }
            Node::Pow(u, s) => {
                let ju = u.jet(x);
                let s = *s;
                // u^s with s > 1 flattens to zero where u does (e.g. a block
                // norm vanishing on a sample); the limit jet is zero there.
                if ju.v == 0.0 && s > 1.0 {
                    return Jet::zero(n);
                }
                chain(&ju, ju.v.powf(s), s * ju.v.powf(s - 1.0), s * (s - 1.0) * ju.v.powf(s - 2.0), n)
            }
            Node::Sqrt(u) => {
                let ju = u.jet(x);
                let r = ju.v.sqrt();
                chain(&ju, r, 0.5 / r, -0.25 / (r * ju.v), n)
            }
        }
    }
}

/// Chain rule for f(u): f' u' and f'' u'u'^T + f' u''. The Hessian is
/// assembled on the upper triangle and mirrored, keeping it bitwise
/// symmetric through arbitrary composition.
fn chain(ju: &Jet, f: f64, f1: f64, f2: f64, n: usize) -> Jet {
    let mut out = Jet::zero(n);
    out.v = f;
    for i in 0..n {
        out.g[i] = f1 * ju.g[i];
    }
    for i in 0..n {
        for j in i..n {
            let v = f2 * ju.g[i] * ju.g[j] + f1 * ju.h[i * n + j];
            out.h[i * n + j] = v;
            out.h[j * n + i] = v;
        }
    }
    out
}

/// Central finite-difference gradient of `node`, step `h`.
pub fn fd_gradient(node: &Node, x: &[f64], h: f64) -> Vec<f64> {
    let n = x.len();
    let mut out = vec![0.0; n];
    let mut xp = x.to_vec();
    for i in 0..n {
        xp.copy_from_slice(x);
        xp[i] = x[i] + h;
        let fp = node.value(&xp);
        xp[i] = x[i] - h;
        let fm = node.value(&xp);
        out[i] = (fp - fm) / (2.0 * h);
    }
    out
}

/// Hessian by central differences of the analytic gradient, step `h`.
/// First differences of the gradient avoid the rounding floor that second
/// differences of values hit near machine precision.
pub fn fd_hessian_of_gradient(node: &Node, x: &[f64], h: f64) -> Vec<f64> {
    let n = x.len();
    let mut out = vec![0.0; n * n];
    let mut xp = x.to_vec();
    for j in 0..n {
        xp.copy_from_slice(x);
        xp[j] = x[j] + h;
        let gp = node.jet(&xp).g;
        xp[j] = x[j] - h;
        let gm = node.jet(&xp).g;
        for i in 0..n {
            out[i * n + j] = (gp[i] - gm[i]) / (2.0 * h);
        }
    }
    out
}

/// Central finite-difference Hessian of `node`, step `h`.
pub fn fd_hessian(node: &Node, x: &[f64], h: f64) -> Vec<f64> {
    let n = x.len();
    let mut out = vec![0.0; n * n];
    let mut xp = x.to_vec();
    for i in 0..n {
        for j in 0..=i {
            let val = if i == j {
                let f0 = node.value(x);
                xp.copy_from_slice(x);
                xp[i] = x[i] + h;
                let fp = node.value(&xp);
                xp[i] = x[i] - h;
                let fm = node.value(&xp);
                (fp - 2.0 * f0 + fm) / (h * h)
            } else {
                xp.copy_from_slice(x);
                xp[i] = x[i] + h;
                xp[j] = x[j] + h;
                let fpp = node.value(&xp);
                xp[j] = x[j] - h;
                let fpm = node.value(&xp);
                xp[i] = x[i] - h;
                xp[j] = x[j] + h;
                let fmp = node.value(&xp);
                xp[j] = x[j] - h;
                let fmm = node.value(&xp);
                (fpp - fpm - fmp + fmm) / (4.0 * h * h)
            };
            out[i * n + j] = val;
            out[j * n + i] = val;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    }

    #[test]
    fn quad_jet() {
        let node = Node::quad(3);
        let x = [1.0, -2.0, 0.5];
        let j = node.jet(&x);
        assert!((j.v - 5.25).abs() < 1e-15);
        assert_eq!(j.g, vec![2.0, -4.0, 1.0]);
        assert_eq!(j.h[0], 2.0);
        assert_eq!(j.h[1], 0.0);
    }

    #[test]
    fn analytic_matches_finite_differences() {
        // L^2-shaped composite: 0.7 |x|^2 + (|x|^4 + P)^{1/2} with a quartic
        // orbit sum.
        let poly = OrbitPoly {
            points: vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![-1.0, 0.0], vec![0.0, -1.0]],
            multiplicity: 1.0,
            degree: 4,
        };
        let q4 = Node::Sum(vec![
            (0.3, Node::IntPow(Box::new(Node::quad(2)), 2)),
            (1.0, Node::Poly(poly)),
        ]);
        let node = Node::Sum(vec![
            (0.7, Node::quad(2)),
            (1.0, Node::Pow(Box::new(q4), 0.5)),
        ]);
        for x in [[0.8, 0.6], [1.0, 0.0], [-0.3, 1.1]] {
            let j = node.jet(&x);
            let scale = j.h.iter().map(|v| v.abs()).fold(1.0, f64::max);
            // second differences of values: rounding-limited, coarse bound
            let fd = fd_hessian(&node, &x, 1e-5);
            assert!(max_abs_diff(&j.h, &fd) / scale < 1e-4, "{x:?}");
            // first differences of the analytic gradient: tight bound
            let fdg = fd_hessian_of_gradient(&node, &x, 1e-5);
            assert!(max_abs_diff(&j.h, &fdg) / scale < 1e-8, "{x:?}");
            // gradient against value differences
            let g_fd = fd_gradient(&node, &x, 1e-5);
            let gscale = j.g.iter().map(|v| v.abs()).fold(1.0, f64::max);
            assert!(max_abs_diff(&j.g, &g_fd) / gscale < 1e-8, "{x:?}");
        }
    }

    #[test]
    fn sqrt_prod_intpow_consistency() {
        // (sqrt(R) + P)^2 built two ways: IntPow vs Prod of the same base.
        let r = Node::Sum(vec![(1.0, Node::IntPow(Box::new(Node::quad(2)), 3))]);
        let p = Node::Poly(OrbitPoly {
            points: vec![vec![1.0, 0.5], vec![-0.5, 1.0]],
            multiplicity: 2.0,
            degree: 3,
        });
        let base = Node::Sum(vec![(1.0, Node::Sqrt(Box::new(r))), (1.0, p)]);
        let a = Node::IntPow(Box::new(base.clone()), 2);
        let b = Node::Prod(Box::new(base.clone()), Box::new(base));
        let x = [0.9, -0.4];
        let ja = a.jet(&x);
        let jb = b.jet(&x);
        assert!((ja.v - jb.v).abs() < 1e-12);
        assert!(max_abs_diff(&ja.g, &jb.g) < 1e-10);
        assert!(max_abs_diff(&ja.h, &jb.h) < 1e-9);
    }

    #[test]
    fn hessian_is_symmetric() {
        let node = Node::Pow(
            Box::new(Node::Sum(vec![
                (1.0, Node::IntPow(Box::new(Node::quad(3)), 2)),
                (
                    0.5,
                    Node::Poly(OrbitPoly {
                        points: vec![vec![1.0, -0.5, 0.25], vec![0.0, 1.0, -1.0]],
                        multiplicity: 3.0,
                        degree: 4,
                    }),
                ),
            ])),
            0.5,
        );
        let x = [0.4, -0.8, 0.3];
        let j = node.jet(&x);
        for i in 0..3 {
            for k in 0..3 {
                assert_eq!(j.h[i * 3 + k], j.h[k * 3 + i]);
            }
        }
    }
}
