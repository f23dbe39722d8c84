use crate::linalg::{self, Matrix, Scalar};
use crate::quiver::Quiver;

/// `Φ = −Cᵀ C⁻¹`, so that `dim τX = Φ · dim X` for non-projective `X`.
pub fn coxeter_matrix(quiver: &Quiver) -> Matrix {
    let c = quiver.cartan_matrix();
    let inv = linalg::inverse(&c).expect("Cartan matrix of an acyclic quiver is unimodular");
    c.transpose().mul(&inv).scale(&Scalar::from_int(-1))
}

/// Integer Coxeter matrix and its inverse, applied to dimension vectors.
#[derive(Clone, Debug)]
pub struct Coxeter {
    forward: Vec<Vec<i64>>,
    backward: Vec<Vec<i64>>,
}

fn to_int_rows(m: &Matrix) -> Vec<Vec<i64>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.to_i64().expect("integral Coxeter matrix")).collect())
        .collect()
}

fn apply(rows: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    rows.iter().map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

impl Coxeter {
    pub fn new(quiver: &Quiver) -> Self {
        let phi = coxeter_matrix(quiver);
        let inv = linalg::inverse(&phi).expect("Coxeter matrix is invertible");
        Coxeter { forward: to_int_rows(&phi), backward: to_int_rows(&inv) }
    }

    /// `Φ x`: the dimension vector of `τX`.
    pub fn tau(&self, x: &[i64]) -> Vec<i64> {
        apply(&self.forward, x)
    }

    /// `Φ⁻¹ x`: the dimension vector of `τ⁻¹X`.
    pub fn tau_inverse(&self, x: &[i64]) -> Vec<i64> {
        apply(&self.backward, x)
    }

    pub fn power(&self, x: &[i64], k: i64) -> Vec<i64> {
        let mut y = x.to_vec();
        for _ in 0..k.unsigned_abs() {
            y = if k > 0 { self.tau(&y) } else { self.tau_inverse(&y) };
        }
        y
    }

    pub fn matrix(&self) -> Matrix {
        let n = self.forward.len();
        Matrix::from_i64(n, n, &self.forward.iter().flatten().copied().collect::<Vec<_>>())
    }
}

/// The defect form, normalized so that `Φ^h x = x + defect(x) · δ` where
/// `h` is the Coxeter period of the type.
#[derive(Clone, Debug)]
pub struct Defect {
    coefficients: Vec<i64>,
    period: usize,
}

impl Defect {
    pub fn new(quiver: &Quiver, coxeter: &Coxeter, null_root: &[i64], period: usize) -> Self {
        let n = quiver.vertex_count();
        // column j of Φ^h − 1 is (defect of e_j) · δ
        let coefficients = (0..n)
            .map(|j| {
                let mut e = vec![0i64; n];
                e[j] = 1;
                let shifted = coxeter.power(&e, period as i64);
                let diff: Vec<i64> = shifted.iter().zip(&e).map(|(a, b)| a - b).collect();
                let v = (0..n).find(|&v| null_root[v] != 0).expect("nonzero null root");
                let c = diff[v] / null_root[v];
                debug_assert!(diff.iter().zip(null_root).all(|(d, r)| *d == c * r));
                c
            })
            .collect();
        Defect { coefficients, period }
    }

    pub fn of(&self, x: &[i64]) -> i64 {
        self.coefficients.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_coxeter() {
        let q = Quiver::kronecker();
        let c = Coxeter::new(&q);
        assert_eq!(c.tau(&[1, 0]), vec![3, 2]);
        assert_eq!(c.tau(&[2, 1]), vec![4, 3]);
        assert_eq!(c.tau(&[1, 1]), vec![1, 1]);
        assert_eq!(c.tau_inverse(&[3, 2]), vec![1, 0]);
    }

    #[test]
    fn kronecker_defect() {
        let q = Quiver::kronecker();
        let c = Coxeter::new(&q);
        let d = Defect::new(&q, &c, &[1, 1], 1);
        assert_eq!(d.of(&[1, 1]), 0);
        assert!(d.of(&[1, 2]) < 0);
        assert!(d.of(&[1, 0]) > 0);
        assert!(d.of(&[2, 1]) > 0);
    }
}
