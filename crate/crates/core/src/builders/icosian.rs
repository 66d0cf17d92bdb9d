//! The 600-cell and 120-cell, assembled from the 120 icosian unit quaternions
//! with exact arithmetic in Q(√5).

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::kernel::{dual, f_vector, IncidenceComplex};

type Q = Ratio<i64>;

/// An element `a + b√5` of Q(√5).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QSqrt5 {
    pub a: Q,
    pub b: Q,
}

impl QSqrt5 {
    pub fn new(a: Q, b: Q) -> Self {
        QSqrt5 { a, b }
    }

    pub fn rational(a: Q) -> Self {
        QSqrt5 { a, b: Q::zero() }
    }

    pub fn zero() -> Self {
        QSqrt5::rational(Q::zero())
    }

    /// Sign as -1, 0 or 1, decided exactly.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        // a and b√5 have opposite signs: compare a² with 5b²
        let lhs = self.a * self.a;
        let rhs = self.b * self.b * Q::from_integer(5);
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }
}

fn sign(q: &Q) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

impl Add for QSqrt5 {
    type Output = QSqrt5;
    fn add(self, o: QSqrt5) -> QSqrt5 {
        QSqrt5::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for QSqrt5 {
    type Output = QSqrt5;
    fn sub(self, o: QSqrt5) -> QSqrt5 {
        QSqrt5::new(self.a - o.a, self.b - o.b)
    }
}

impl Mul for QSqrt5 {
    type Output = QSqrt5;
    fn mul(self, o: QSqrt5) -> QSqrt5 {
        QSqrt5::new(
            self.a * o.a + self.b * o.b * Q::from_integer(5),
            self.a * o.b + self.b * o.a,
        )
    }
}

impl Neg for QSqrt5 {
    type Output = QSqrt5;
    fn neg(self) -> QSqrt5 {
        QSqrt5::new(-self.a, -self.b)
    }
}

impl PartialOrd for QSqrt5 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt5 {
    fn cmp(&self, other: &Self) -> Ordering {
        (*self - *other).signum().cmp(&0)
    }
}

pub type Quaternion = [QSqrt5; 4];

fn dot(p: &Quaternion, q: &Quaternion) -> QSqrt5 {
    (0..4).fold(QSqrt5::zero(), |acc, i| acc + p[i] * q[i])
}

fn is_even(perm: &[usize; 4]) -> bool {
    let mut inversions = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// The 120 unit icosians, in a fixed order.
pub fn icosians() -> Vec<Quaternion> {
    let r = |n: i64, d: i64| QSqrt5::rational(Q::new(n, d));
    let zero = QSqrt5::zero();
    let mut out: Vec<Quaternion> = Vec::with_capacity(120);
    for pos in 0..4 {
        for s in [1, -1] {
            let mut q = [zero; 4];
            q[pos] = r(s, 1);
            out.push(q);
        }
    }
    for signs in 0..16 {
        let q: Quaternion = std::array::from_fn(|i| r(if signs >> i & 1 == 1 { -1 } else { 1 }, 2));
        out.push(q);
    }
    // even permutations of (φ, 1, φ⁻¹, 0) / 2 with all sign choices
    let half_phi = QSqrt5::new(Q::new(1, 4), Q::new(1, 4));
    let half_inv_phi = QSqrt5::new(Q::new(-1, 4), Q::new(1, 4));
    let base = [half_phi, r(1, 2), half_inv_phi, zero];
    let mut perms = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut s = p;
                    s.sort_unstable();
                    if s == [0, 1, 2, 3] && is_even(&p) {
                        perms.push(p);
                    }
                }
            }
        }
    }
    for p in &perms {
        for signs in 0..8 {
            let mut q = [zero; 4];
            for slot in 0..3 {
                let v = if signs >> slot & 1 == 1 { -base[slot] } else { base[slot] };
                q[p[slot]] = v;
            }
            out.push(q);
        }
    }
    out
}

/// The 600-cell boundary as a simplicial 3-complex. Vertices are the icosians
/// in [`icosians`] order; edges join nearest neighbours; triangles and
/// tetrahedra are the 3- and 4-cliques of that graph.
pub fn build_600cell() -> Result<IncidenceComplex> {
    let qs = icosians();
    let n = qs.len();
    let one = QSqrt5::rational(Q::from_integer(1));
    let mut best = QSqrt5::rational(Q::from_integer(-2));
    for i in 0..n {
        let norm = dot(&qs[i], &qs[i]);
        if norm != one {
            return Err(Error::Construction(format!("icosian {i} is not a unit")));
        }
        for j in i + 1..n {
            let d = dot(&qs[i], &qs[j]);
            if d < one && d > best {
                best = d;
            }
        }
    }
    let half_phi = QSqrt5::new(Q::new(1, 4), Q::new(1, 4));
    if best != half_phi {
        return Err(Error::Construction("nearest-neighbour inner product is not φ/2".into()));
    }
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if dot(&qs[i], &qs[j]) == best {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }
    if (0..n).any(|i| adj[i].iter().filter(|&&b| b).count() != 12) {
        return Err(Error::Construction("icosian graph is not 12-regular".into()));
    }
    let mut tets = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !adj[a][b] {
                continue;
            }
            for c in b + 1..n {
                if !(adj[a][c] && adj[b][c]) {
                    continue;
                }
                for d in c + 1..n {
                    if adj[a][d] && adj[b][d] && adj[c][d] {
                        tets.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let x = IncidenceComplex::from_tetrahedra(n, &tets)?;
    if x.counts() != [120, 720, 1200, 600] {
        return Err(Error::Construction(format!("600-cell has f-vector {:?}", x.counts())));
    }
    Ok(x)
}

/// The 120-cell, as the dual of the 600-cell.
pub fn build_120cell() -> Result<IncidenceComplex> {
    let x = dual(&build_600cell()?)?;
    let fv = f_vector(&x);
    if fv.counts != [600, 1200, 720, 120] || fv.p5 != 720 {
        return Err(Error::Construction(format!("120-cell has f-vector {fv}")));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_sign_of_quadratic_irrationals() {
        let phi = QSqrt5::new(Q::new(1, 2), Q::new(1, 2));
        assert_eq!(phi.signum(), 1);
        // φ² - φ - 1 = 0
        let one = QSqrt5::rational(Q::from_integer(1));
        assert_eq!((phi * phi - phi - one).signum(), 0);
        // 2 - √5 < 0, 3 - √5 > 0
        assert_eq!(QSqrt5::new(Q::from_integer(2), Q::from_integer(-1)).signum(), -1);
        assert_eq!(QSqrt5::new(Q::from_integer(3), Q::from_integer(-1)).signum(), 1);
        assert!(phi > one);
    }

    #[test]
    fn icosians_are_distinct_units() {
        let qs = icosians();
        assert_eq!(qs.len(), 120);
        let mut sorted = qs.clone();
        sorted.sort_by(|p, q| p.iter().cmp(q.iter()));
        sorted.dedup();
        assert_eq!(sorted.len(), 120);
    }

    #[test]
    fn six_hundred_cell_counts() {
        let x = build_600cell().unwrap();
        assert_eq!(x.counts(), vec![120, 720, 1200, 600]);
    }
}
