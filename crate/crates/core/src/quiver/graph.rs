use std::collections::VecDeque;
use std::fmt;

use crate::linalg::{self, Matrix, Scalar};

use super::QuiverError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
}

/// Type of an extended Dynkin diagram.
///
/// `A { p, q }` is a cycle with `p` arrows in one direction and `q` in the
/// other, `p >= q >= 1`. `D(n)` has `n + 1` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EuclideanType {
    A { p: usize, q: usize },
    D(usize),
    E6,
    E7,
    E8,
}

impl EuclideanType {
    /// Ranks of the exceptional tubes (those of rank at least 2).
    pub fn tube_ranks(&self) -> Vec<usize> {
        let ranks = match *self {
            EuclideanType::A { p, q } => vec![p, q],
            EuclideanType::D(n) => vec![2, 2, n - 2],
            EuclideanType::E6 => vec![2, 3, 3],
            EuclideanType::E7 => vec![2, 3, 4],
            EuclideanType::E8 => vec![2, 3, 5],
        };
        let mut ranks: Vec<usize> = ranks.into_iter().filter(|&r| r >= 2).collect();
        ranks.sort_unstable_by(|a, b| b.cmp(a));
        ranks
    }

    /// Least common multiple of all tube ranks: the period after which the
    /// Coxeter transformation acts on roots by a shift along the null root.
    pub fn coxeter_period(&self) -> usize {
        self.tube_ranks().into_iter().fold(1, lcm)
    }
}

impl fmt::Display for EuclideanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EuclideanType::A { p, q } => write!(f, "A~({p},{q})"),
            EuclideanType::D(n) => write!(f, "D~{n}"),
            EuclideanType::E6 => write!(f, "E~6"),
            EuclideanType::E7 => write!(f, "E~7"),
            EuclideanType::E8 => write!(f, "E~8"),
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// A finite acyclic quiver with vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
    kind: Option<EuclideanType>,
}

impl Quiver {
    /// Any acyclic quiver. The Euclidean type is recorded when the
    /// underlying graph happens to be extended Dynkin.
    pub fn acyclic(vertex_count: usize, arrows: &[(usize, usize)]) -> Result<Self, QuiverError> {
        let arrows: Vec<Arrow> = arrows.iter().map(|&(source, target)| Arrow { source, target }).collect();
        for a in &arrows {
            for v in [a.source, a.target] {
                if v >= vertex_count {
                    return Err(QuiverError::VertexOutOfRange(v));
                }
            }
            if a.source == a.target {
                return Err(QuiverError::Loop(a.source));
            }
        }
        let mut q = Quiver { vertex_count, arrows, kind: None };
        if q.topological_order().is_none() {
            return Err(QuiverError::Cyclic);
        }
        q.kind = q.classify();
        Ok(q)
    }

    /// An acyclic quiver whose underlying graph must be extended Dynkin.
    pub fn euclidean(vertex_count: usize, arrows: &[(usize, usize)]) -> Result<Self, QuiverError> {
        let q = Quiver::acyclic(vertex_count, arrows)?;
        if q.kind.is_none() {
            return Err(QuiverError::NotEuclidean);
        }
        Ok(q)
    }

    /// The Kronecker quiver `0 ⇉ 1`.
    pub fn kronecker() -> Self {
        Quiver::euclidean(2, &[(0, 1), (0, 1)]).expect("Kronecker quiver is Euclidean")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> Arrow {
        self.arrows[a]
    }

    pub fn euclidean_type(&self) -> Option<EuclideanType> {
        self.kind
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertex_count: self.vertex_count,
            arrows: self.arrows.iter().map(|a| Arrow { source: a.target, target: a.source }).collect(),
            kind: self.kind,
        }
    }

    /// Reverses every arrow incident to `v`; arrow indices are preserved.
    pub fn reflect_at(&self, v: usize) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| {
                if a.source == v || a.target == v {
                    Arrow { source: a.target, target: a.source }
                } else {
                    *a
                }
            })
            .collect();
        Quiver { vertex_count: self.vertex_count, arrows, kind: self.kind }
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.source != v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.target != v)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    /// Vertices ordered so that every arrow goes forward.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.vertex_count];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut queue: VecDeque<usize> = (0..self.vertex_count).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.vertex_count);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for a in &self.arrows {
                if a.source == v {
                    indeg[a.target] -= 1;
                    if indeg[a.target] == 0 {
                        queue.push_back(a.target);
                    }
                }
            }
        }
        (order.len() == self.vertex_count).then_some(order)
    }

    /// `paths[i][j]` = number of paths from `i` to `j` (including the trivial one).
    pub fn path_counts(&self) -> Vec<Vec<usize>> {
        let order = self.topological_order().expect("acyclic");
        let n = self.vertex_count;
        let mut paths = vec![vec![0usize; n]; n];
        for i in 0..n {
            paths[i][i] = 1;
            for &v in &order {
                if paths[i][v] == 0 {
                    continue;
                }
                for a in &self.arrows {
                    if a.source == v {
                        paths[i][a.target] += paths[i][v];
                    }
                }
            }
        }
        paths
    }

    /// Cartan matrix whose `j`-th column is the dimension vector of the
    /// projective at `j`.
    pub fn cartan_matrix(&self) -> Matrix {
        let p = self.path_counts();
        let n = self.vertex_count;
        let mut c = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                c[(j, i)] = Scalar::from_int(p[i][j] as i64);
            }
        }
        c
    }

    /// `⟨x, y⟩ = Σ x_v y_v − Σ_a x_{s(a)} y_{t(a)}`.
    pub fn euler_form(&self, x: &[i64], y: &[i64]) -> i64 {
        assert_eq!(x.len(), self.vertex_count);
        assert_eq!(y.len(), self.vertex_count);
        let diag: i64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
        let off: i64 = self.arrows.iter().map(|a| x[a.source] * y[a.target]).sum();
        diag - off
    }

    /// The symmetrized form `q(x) = ⟨x, x⟩`.
    pub fn quadratic_form(&self, x: &[i64]) -> i64 {
        self.euler_form(x, x)
    }

    /// Minimal positive radical vector of the quadratic form.
    pub fn null_root(&self) -> Option<Vec<i64>> {
        let n = self.vertex_count;
        let mut sym = Matrix::zero(n, n);
        for v in 0..n {
            sym[(v, v)] = Scalar::from_int(2);
        }
        for a in &self.arrows {
            sym[(a.source, a.target)] -= &Scalar::one();
            sym[(a.target, a.source)] -= &Scalar::one();
        }
        let ker = linalg::kernel_basis(&sym);
        if ker.len() != 1 {
            return None;
        }
        integral_primitive(&ker[0])
    }

    fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for a in &self.arrows {
            if a.source == v {
                out.push(a.target);
            } else if a.target == v {
                out.push(a.source);
            }
        }
        out
    }

    fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn classify(&self) -> Option<EuclideanType> {
        let n = self.vertex_count;
        if n < 2 || !self.is_connected() {
            return None;
        }
        let degree: Vec<usize> = (0..n).map(|v| self.neighbours(v).len()).collect();
        if self.arrows.len() == n {
            // one cycle through every vertex
            if degree.iter().any(|&d| d != 2) {
                return None;
            }
            let (mut forward, mut backward) = (0, 0);
            let mut prev_arrow = usize::MAX;
            let mut v = 0;
            for _ in 0..n {
                let a = (0..self.arrows.len())
                    .find(|&a| a != prev_arrow && (self.arrows[a].source == v || self.arrows[a].target == v))
                    .expect("cycle arrow");
                let arr = self.arrows[a];
                if arr.source == v {
                    forward += 1;
                    v = arr.target;
                } else {
                    backward += 1;
                    v = arr.source;
                }
                prev_arrow = a;
            }
            let (p, q) = if forward >= backward { (forward, backward) } else { (backward, forward) };
            return (q >= 1).then_some(EuclideanType::A { p, q });
        }
        if self.arrows.len() + 1 != n {
            return None;
        }
        // trees
        let branch: Vec<usize> = (0..n).filter(|&v| degree[v] >= 3).collect();
        if degree.iter().any(|&d| d > 4) {
            return None;
        }
        if branch.len() == 1 && degree[branch[0]] == 4 {
            return (n == 5).then_some(EuclideanType::D(4));
        }
        if branch.len() == 2 && branch.iter().all(|&b| degree[b] == 3) {
            // every arm hanging off a branch point away from the other must be a single leaf
            let arms = |b: usize| -> Vec<usize> {
                self.neighbours(b).into_iter().map(|w| self.arm_length(b, w)).collect()
            };
            let leaves = arms(branch[0]).into_iter().chain(arms(branch[1])).filter(|&l| l == 1).count();
            return (leaves == 4).then_some(EuclideanType::D(n - 1));
        }
        if branch.len() == 1 && degree[branch[0]] == 3 {
            let b = branch[0];
            let mut arms: Vec<usize> = self.neighbours(b).into_iter().map(|w| self.arm_length(b, w)).collect();
            arms.sort_unstable();
            return match arms.as_slice() {
                [2, 2, 2] => Some(EuclideanType::E6),
                [1, 3, 3] => Some(EuclideanType::E7),
                [1, 2, 5] => Some(EuclideanType::E8),
                _ => None,
            };
        }
        None
    }

    /// Number of vertices on the arm starting at `start` and leaving `from`,
    /// or `usize::MAX` if the arm branches again.
    fn arm_length(&self, from: usize, start: usize) -> usize {
        let (mut prev, mut cur, mut len) = (from, start, 1);
        loop {
            let next: Vec<usize> = self.neighbours(cur).into_iter().filter(|&w| w != prev).collect();
            match next.len() {
                0 => return len,
                1 => {
                    prev = cur;
                    cur = next[0];
                    len += 1;
                }
                _ => return usize::MAX,
            }
        }
    }
}

/// Rescales a rational vector to the primitive integer vector with
/// non-negative leading sign.
fn integral_primitive(v: &[Scalar]) -> Option<Vec<i64>> {
    let mut den: i64 = 1;
    for x in v {
        let d: i64 = x.denom_string().parse().ok()?;
        den = den / gcd(den as usize, d as usize) as i64 * d;
    }
    let scaled: Vec<i64> = v
        .iter()
        .map(|x| (x * &Scalar::from_int(den)).to_i64())
        .collect::<Option<Vec<_>>>()?;
    let g = scaled.iter().fold(0usize, |g, &x| gcd(g, x.unsigned_abs() as usize)) as i64;
    if g == 0 {
        return None;
    }
    let sign = if scaled.iter().any(|&x| x < 0) { -1 } else { 1 };
    Some(scaled.into_iter().map(|x| sign * x / g).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification() {
        assert_eq!(Quiver::kronecker().euclidean_type(), Some(EuclideanType::A { p: 1, q: 1 }));
        let d4 = Quiver::euclidean(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(d4.euclidean_type(), Some(EuclideanType::D(4)));
        let d5 = Quiver::euclidean(6, &[(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(d5.euclidean_type(), Some(EuclideanType::D(5)));
        let a22 = Quiver::euclidean(4, &[(0, 1), (1, 2), (0, 3), (3, 2)]).unwrap();
        assert_eq!(a22.euclidean_type(), Some(EuclideanType::A { p: 2, q: 2 }));
        let e6 = Quiver::euclidean(7, &[(0, 1), (1, 2), (3, 4), (4, 2), (5, 6), (6, 2)]).unwrap();
        assert_eq!(e6.euclidean_type(), Some(EuclideanType::E6));
        assert!(matches!(Quiver::euclidean(3, &[(0, 1), (1, 2)]), Err(QuiverError::NotEuclidean)));
        assert!(matches!(Quiver::acyclic(2, &[(0, 1), (1, 0)]), Err(QuiverError::Cyclic)));
    }

    #[test]
    fn null_roots() {
        assert_eq!(Quiver::kronecker().null_root(), Some(vec![1, 1]));
        let d4 = Quiver::euclidean(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(d4.null_root(), Some(vec![1, 1, 2, 1, 1]));
    }

    #[test]
    fn euler_form_examples() {
        let k = Quiver::kronecker();
        assert_eq!(k.euler_form(&[1, 0], &[0, 1]), -2);
        assert_eq!(k.euler_form(&[0, 1], &[1, 2]), 2);
        assert_eq!(k.quadratic_form(&[1, 1]), 0);
    }

    #[test]
    fn periods() {
        assert_eq!(EuclideanType::D(12).coxeter_period(), 10);
        assert_eq!(EuclideanType::D(4).tube_ranks(), vec![2, 2, 2]);
        assert_eq!(EuclideanType::A { p: 1, q: 1 }.coxeter_period(), 1);
    }
}
