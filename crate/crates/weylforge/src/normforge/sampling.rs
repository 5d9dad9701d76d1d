//! Deterministic sphere sampling for certification.
//!
//! The sample set is the union of (a) evenly spaced points on every
//! 2-D coordinate-pair great circle, (b) a Halton low-discrepancy set pushed
//! to the sphere through Box-Muller, and (c) seeded ChaCha Gaussian points.
//! Given the same dimension, counts, and seed the set is identical run to
//! run, so certificates are reproducible.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const PRIMES: [u64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// i-th element of the van der Corput sequence in the given base.
fn halton(mut i: u64, base: u64) -> f64 {
    let mut f = 1.0;
    let mut r = 0.0;
    while i > 0 {
        f /= base as f64;
        r += f * (i % base) as f64;
        i /= base;
    }
    r
}

fn normalize(v: &mut [f64]) -> bool {
    let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm < 1e-12 {
        return false;
    }
    v.iter_mut().for_each(|x| *x /= norm);
    true
}

/// Box-Muller on a Halton pair.
fn gauss_pair(u1: f64, u2: f64) -> (f64, f64) {
    let u1 = u1.max(1e-16);
    let r = (-2.0 * u1.ln()).sqrt();
    let t = 2.0 * std::f64::consts::PI * u2;
    (r * t.cos(), r * t.sin())
}

/// Deterministic unit-sphere sample set in `dim` dimensions:
/// `per_pair` points per coordinate 2-plane plus `random_count` generic
/// points (half Halton-driven, half from the seeded generator).
pub fn sphere_samples(dim: usize, per_pair: usize, random_count: usize, seed: u64) -> Vec<Vec<f64>> {
    assert!(dim >= 1);
    let mut out = Vec::new();
    if dim == 1 {
        out.push(vec![1.0]);
        out.push(vec![-1.0]);
    } else {
        for i in 0..dim {
            for j in i + 1..dim {
                for k in 0..per_pair {
                    let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.5) / per_pair as f64;
                    let mut v = vec![0.0; dim];
                    v[i] = theta.cos();
                    v[j] = theta.sin();
                    out.push(v);
                }
            }
        }
    }
    let n_halton = random_count / 2;
    let mut idx = 1u64;
    let mut added = 0;
    while added < n_halton {
        let mut v = vec![0.0; dim];
        let mut d = 0;
        let mut b = 0;
        while d < dim {
            let (g1, g2) = gauss_pair(halton(idx, PRIMES[b % PRIMES.len()]), halton(idx, PRIMES[(b + 1) % PRIMES.len()]));
            v[d] = g1;
            d += 1;
            if d < dim {
                v[d] = g2;
                d += 1;
            }
            b += 2;
        }
        idx += 1;
        if normalize(&mut v) {
            out.push(v);
            added += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut added = 0;
    while added < random_count - n_halton {
        let mut v: Vec<f64> = (0..dim)
            .map(|_| {
                let (g, _) = gauss_pair(rng.gen::<f64>(), rng.gen::<f64>());
                g
            })
            .collect();
        if normalize(&mut v) {
            out.push(v);
            added += 1;
        }
    }
    out
}

/// Seeded Gaussian points in the ball of radius `radius` (not normalized).
pub fn ball_samples(dim: usize, count: usize, radius: f64, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..dim)
                .map(|_| {
                    let (g, _) = gauss_pair(rng.gen::<f64>(), rng.gen::<f64>());
                    g * radius * 0.4
                })
                .collect()
        })
        .collect()
}

/// Minimum of `eval` over indices `0..n` together with the argmin,
/// data-parallel when the `parallel` feature is active. Ties resolve to the
/// lowest index, so the result does not depend on thread scheduling.
pub fn indexed_min<F>(n: usize, parallel: bool, eval: F) -> (usize, f64)
where
    F: Fn(usize) -> f64 + Sync,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return (0..n)
            .into_par_iter()
            .map(|i| (i, eval(i)))
            .reduce(
                || (usize::MAX, f64::INFINITY),
                |a, b| {
                    if b.1 < a.1 || (b.1 == a.1 && b.0 < a.0) {
                        b
                    } else {
                        a
                    }
                },
            );
    }
    let _ = parallel;
    let mut best = (usize::MAX, f64::INFINITY);
    for i in 0..n {
        let v = eval(i);
        if v < best.1 {
            best = (i, v);
        }
    }
    best
}

/// Maximum counterpart of `indexed_min`.
pub fn indexed_max<F>(n: usize, parallel: bool, eval: F) -> (usize, f64)
where
    F: Fn(usize) -> f64 + Sync,
{
    let (i, v) = indexed_min(n, parallel, |i| -eval(i));
    (i, -v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_unit_and_deterministic() {
        let a = sphere_samples(3, 8, 16, 42);
        let b = sphere_samples(3, 8, 16, 42);
        assert_eq!(a.len(), 3 * 8 + 16);
        assert_eq!(a, b);
        for v in &a {
            let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() < 1e-12);
        }
        let c = sphere_samples(3, 8, 16, 43);
        assert_ne!(a, c);
    }

    #[test]
    fn one_dimensional_sphere() {
        let s = sphere_samples(1, 4, 2, 1);
        assert!(s.contains(&vec![1.0]));
        assert!(s.contains(&vec![-1.0]));
    }

    #[test]
    fn indexed_min_matches_sequential() {
        let vals: Vec<f64> = (0..1000).map(|i| ((i * 37 % 101) as f64) - 50.0).collect();
        let (i_seq, v_seq) = indexed_min(vals.len(), false, |i| vals[i]);
        let (i_par, v_par) = indexed_min(vals.len(), true, |i| vals[i]);
        assert_eq!(i_seq, i_par);
        assert_eq!(v_seq, v_par);
    }
}
