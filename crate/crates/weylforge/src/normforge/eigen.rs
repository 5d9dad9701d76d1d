//! Symmetric eigenvalues by cyclic Jacobi rotations.
//!
//! Dimensions here are small (at most the ambient dimension of a root
//! system or a product of a few blocks), where Jacobi is simple, accurate,
//! and deterministic.

/// Eigenvalues of a symmetric matrix (row-major, full storage), sorted
/// descending. The input is copied; symmetry is assumed, only the upper
/// triangle of each rotation target is maintained explicitly.
pub fn symmetric_eigenvalues(mat: &[f64], n: usize) -> Vec<f64> {
    debug_assert_eq!(mat.len(), n * n);
    let mut a = mat.to_vec();
    if n == 1 {
        return vec![a[0]];
    }
    let scale = a.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
    let tol = 1e-15 * scale;
    for _sweep in 0..64 {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                off = off.max(a[i * n + j].abs());
            }
        }
        if off <= tol {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= tol * 1e-2 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigs.sort_by(|x, y| y.partial_cmp(x).expect("finite eigenvalues"));
    eigs
}

/// Smallest eigenvalue of a symmetric matrix.
pub fn min_eigenvalue(mat: &[f64], n: usize) -> f64 {
    *symmetric_eigenvalues(mat, n)
        .last()
        .expect("non-empty matrix")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_passthrough() {
        let m = [3.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 2.0];
        assert_eq!(symmetric_eigenvalues(&m, 3), vec![3.0, 2.0, -1.0]);
    }

    #[test]
    fn off_diagonal_swap() {
        // [[0,1],[1,0]] has spectrum {1, -1}
        let m = [0.0, 1.0, 1.0, 0.0];
        let e = symmetric_eigenvalues(&m, 2);
        assert!((e[0] - 1.0).abs() < 1e-12);
        assert!((e[1] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn known_3x3() {
        // eigenvalues of [[2,1,0],[1,2,1],[0,1,2]] are 2 and 2 +- sqrt(2)
        let m = [2.0, 1.0, 0.0, 1.0, 2.0, 1.0, 0.0, 1.0, 2.0];
        let e = symmetric_eigenvalues(&m, 3);
        let s = 2.0f64.sqrt();
        assert!((e[0] - (2.0 + s)).abs() < 1e-12);
        assert!((e[1] - 2.0).abs() < 1e-12);
        assert!((e[2] - (2.0 - s)).abs() < 1e-12);
        assert!((min_eigenvalue(&m, 3) - (2.0 - s)).abs() < 1e-12);
    }

    #[test]
    fn trace_and_frobenius_preserved() {
        let m = [
            4.0, 1.0, -2.0, 0.5, 1.0, 3.0, 0.0, -1.0, -2.0, 0.0, 1.0, 2.0, 0.5, -1.0, 2.0, -3.0,
        ];
        let e = symmetric_eigenvalues(&m, 4);
        let trace: f64 = (0..4).map(|i| m[i * 4 + i]).sum();
        assert!((e.iter().sum::<f64>() - trace).abs() < 1e-10);
        let frob: f64 = m.iter().map(|v| v * v).sum();
        let sum_sq: f64 = e.iter().map(|v| v * v).sum();
        assert!((frob - sum_sq).abs() < 1e-9);
    }
}
