//! Coefficient fields for multivariate polynomials, behind one trait.
//!
//! Two implementations matter here: `CycField` (a cyclotomic field Q(zeta_n),
//! characteristic zero) and `ResidueField` (F_p[x]/(g), characteristic p).
//! Field elements carry no pointer back to their field, so every operation
//! goes through the field object.  The module also provides generic exact
//! linear algebra (reduced row echelon form, kernels, solving) used for
//! invariant-space computation and membership tests.

use std::fmt;
use std::hash::Hash;

use num::bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::cyclo::{CycNum, FqElem, ResidueField};
use crate::{Error, Result};

/// A field that can serve as the coefficient domain of a polynomial ring.
pub trait CoeffField: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, k: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn characteristic(&self) -> u64;
    fn elem_string(&self, a: &Self::Elem) -> String;
    fn elem_json(&self, a: &Self::Elem) -> serde_json::Value;
    fn rand_elem(&self, rng: &mut ChaCha8Rng) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }
}

/// The cyclotomic field Q(zeta_n) as a coefficient field.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CycField {
    conductor: u32,
}

impl CycField {
    pub fn new(conductor: u32) -> CycField {
        CycField { conductor }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }
}

impl fmt::Debug for CycField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.conductor)
    }
}

impl CoeffField for CycField {
    type Elem = CycNum;

    fn zero(&self) -> CycNum {
        CycNum::zero(self.conductor)
    }

    fn one(&self) -> CycNum {
        CycNum::one(self.conductor)
    }

    fn from_int(&self, k: i64) -> CycNum {
        CycNum::from_int(self.conductor, k)
    }

    fn add(&self, a: &CycNum, b: &CycNum) -> CycNum {
        a.add(b).expect("conductor invariant violated")
    }

    fn sub(&self, a: &CycNum, b: &CycNum) -> CycNum {
        a.sub(b).expect("conductor invariant violated")
    }

    fn neg(&self, a: &CycNum) -> CycNum {
        a.neg()
    }

    fn mul(&self, a: &CycNum, b: &CycNum) -> CycNum {
        a.mul(b).expect("conductor invariant violated")
    }

    fn inv(&self, a: &CycNum) -> Result<CycNum> {
        a.inv()
    }

    fn is_zero(&self, a: &CycNum) -> bool {
        a.is_zero()
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn elem_string(&self, a: &CycNum) -> String {
        a.to_string()
    }

    fn elem_json(&self, a: &CycNum) -> serde_json::Value {
        a.to_json()
    }

    fn rand_elem(&self, rng: &mut ChaCha8Rng) -> CycNum {
        let phi = crate::cyclo::euler_phi(self.conductor);
        CycNum::new(
            self.conductor,
            (0..phi).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect(),
            BigInt::from(rng.gen_range(1i64..=4)),
        )
        .unwrap()
    }
}

impl CoeffField for ResidueField {
    type Elem = FqElem;

    fn zero(&self) -> FqElem {
        ResidueField::zero(self)
    }

    fn one(&self) -> FqElem {
        ResidueField::one(self)
    }

    fn from_int(&self, k: i64) -> FqElem {
        let p = self.p() as i64;
        self.from_u64(k.rem_euclid(p) as u64)
    }

    fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        ResidueField::add(self, a, b)
    }

    fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        ResidueField::sub(self, a, b)
    }

    fn neg(&self, a: &FqElem) -> FqElem {
        ResidueField::neg(self, a)
    }

    fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        ResidueField::mul(self, a, b)
    }

    fn inv(&self, a: &FqElem) -> Result<FqElem> {
        ResidueField::inv(self, a)
    }

    fn is_zero(&self, a: &FqElem) -> bool {
        ResidueField::is_zero(self, a)
    }

    fn characteristic(&self) -> u64 {
        self.p()
    }

    fn elem_string(&self, a: &FqElem) -> String {
        ResidueField::elem_string(self, a)
    }

    fn elem_json(&self, a: &FqElem) -> serde_json::Value {
        serde_json::json!(a)
    }

    fn rand_elem(&self, rng: &mut ChaCha8Rng) -> FqElem {
        ResidueField::rand_elem(self, rng)
    }
}

// ---------------------------------------------------------------------------
// generic exact linear algebra
// ---------------------------------------------------------------------------

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.  Zero rows are removed.
pub fn rref<F: CoeffField>(field: &F, rows: &mut Vec<Vec<F::Elem>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = field.inv(&rows[rank][col]).expect("pivot is nonzero");
        for c in col..ncols {
            rows[rank][c] = field.mul(&rows[rank][c], &inv);
        }
        for r in 0..rows.len() {
            if r != rank && !field.is_zero(&rows[r][col]) {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let t = field.mul(&factor, &rows[rank][c]);
                    rows[r][c] = field.sub(&rows[r][c], &t);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

/// Rank of a matrix.
pub fn rank<F: CoeffField>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m).len()
}

/// Basis of the right kernel of the matrix (rows x cols).
pub fn kernel_basis<F: CoeffField>(field: &F, rows: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut m = rows.to_vec();
    let pivots = rref(field, &mut m);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(&m[r][free]);
        }
        basis.push(v);
    }
    basis
}

/// One solution x of A x = b, or None when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve<F: CoeffField>(
    field: &F,
    a: &[Vec<F::Elem>],
    b: &[F::Elem],
) -> Option<Vec<F::Elem>> {
    let ncols = a.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<F::Elem>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(field, &mut aug);
    if pivots.last() == Some(&ncols) {
        return None; // pivot in the augmented column
    }
    let mut x = vec![field.zero(); ncols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][ncols].clone();
    }
    Some(x)
}

/// Determinant of a square matrix over the field (Gaussian elimination).
pub fn det<F: CoeffField>(field: &F, rows: &[Vec<F::Elem>]) -> F::Elem {
    let n = rows.len();
    let mut m = rows.to_vec();
    let mut acc = field.one();
    for k in 0..n {
        let Some(pr) = (k..n).find(|&r| !field.is_zero(&m[r][k])) else {
            return field.zero();
        };
        if pr != k {
            m.swap(k, pr);
            acc = field.neg(&acc);
        }
        acc = field.mul(&acc, &m[k][k]);
        let inv = field.inv(&m[k][k]).expect("pivot is nonzero");
        for r in k + 1..n {
            if field.is_zero(&m[r][k]) {
                continue;
            }
            let factor = field.mul(&m[r][k], &inv);
            for c in k..n {
                let t = field.mul(&factor, &m[k][c]);
                m[r][c] = field.sub(&m[r][c], &t);
            }
        }
    }
    acc
}

/// Matrix inverse over the field; errors when singular.
pub fn mat_inv<F: CoeffField>(field: &F, rows: &[Vec<F::Elem>]) -> Result<Vec<Vec<F::Elem>>> {
    let n = rows.len();
    let mut aug: Vec<Vec<F::Elem>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { field.one() } else { field.zero() });
            }
            r
        })
        .collect();
    let pivots = rref(field, &mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return Err(Error::SingularMatrix);
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::primes_above;
    use rand::SeedableRng;

    #[test]
    fn rref_and_kernel_over_cyclotomic() {
        let f = CycField::new(4);
        let i = CycNum::root_of_unity(4, 1);
        // rows: [1, i], [i, -1] are proportional -> rank 1, kernel dim 1
        let rows = vec![
            vec![f.one(), i.clone()],
            vec![i.clone(), f.from_int(-1)],
        ];
        assert_eq!(rank(&f, &rows), 1);
        let ker = kernel_basis(&f, &rows);
        assert_eq!(ker.len(), 1);
        // check A v = 0
        for row in &rows {
            let dot = f.add(&f.mul(&row[0], &ker[0][0]), &f.mul(&row[1], &ker[0][1]));
            assert!(f.is_zero(&dot));
        }
    }

    #[test]
    fn solve_and_det() {
        let f = CycField::new(3);
        let a = vec![
            vec![f.from_int(2), f.from_int(1)],
            vec![f.from_int(1), f.from_int(3)],
        ];
        let b = vec![f.from_int(5), f.from_int(10)];
        let x = solve(&f, &a, &b).unwrap();
        assert_eq!(x, vec![f.from_int(1), f.from_int(3)]);
        assert_eq!(det(&f, &a), f.from_int(5));
        let inv = mat_inv(&f, &a).unwrap();
        // A * A^-1 = I
        for i in 0..2 {
            for j in 0..2 {
                let mut s = f.zero();
                for k in 0..2 {
                    s = f.add(&s, &f.mul(&a[i][k], &inv[k][j]));
                }
                assert_eq!(s, if i == j { f.one() } else { f.zero() });
            }
        }
        // inconsistent system
        let a2 = vec![vec![f.one(), f.one()], vec![f.one(), f.one()]];
        let b2 = vec![f.zero(), f.one()];
        assert!(solve(&f, &a2, &b2).is_none());
    }

    #[test]
    fn linear_algebra_over_residue_field() {
        let ideal = primes_above(12, 7).unwrap().into_iter().next().unwrap();
        let f = ResidueField::new(ideal);
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..30 {
            let n = 4usize;
            let a: Vec<Vec<FqElem>> = (0..n)
                .map(|_| (0..n).map(|_| f.rand_elem(&mut rng)).collect())
                .collect();
            let d = det(&f, &a);
            let r = rank(&f, &a);
            assert_eq!(r == n, !f.is_zero(&d));
            let ker = kernel_basis(&f, &a);
            assert_eq!(ker.len(), n - r);
        }
    }
}
