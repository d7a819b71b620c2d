//! Matrices over cyclotomic fields and the finite groups they generate.
//!
//! Groups are materialized explicitly by breadth-first closure of the
//! generating set (with a configurable size bound), deduplicating elements
//! through a canonical byte encoding of their entries.  The module also
//! classifies pseudo-reflections, conjugates generating sets, and reduces
//! matrix groups modulo prime ideals to test faithfulness of the reduction.

use std::collections::HashMap;
use std::fmt;

use crate::cyclo::{cyc_reduce, CycNum, FqElem, PrimeIdeal, ResidueField};
use crate::field::{det, mat_inv, rank, CoeffField, CycField};
use crate::polyring::Poly;
use crate::{Error, Result};

/// A square matrix over a cyclotomic field.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: CycField,
    rows: Vec<Vec<CycNum>>,
}

impl Mat {
    pub fn new(field: CycField, rows: Vec<Vec<CycNum>>) -> Result<Mat> {
        let n = rows.len();
        for row in &rows {
            if row.len() != n {
                return Err(Error::Precondition("matrix must be square".into()));
            }
            for e in row {
                if e.conductor() != field.conductor() {
                    return Err(Error::ConductorMismatch(
                        e.conductor(),
                        field.conductor(),
                    ));
                }
            }
        }
        Ok(Mat { field, rows })
    }

    pub fn identity(field: CycField, size: usize) -> Mat {
        let rows = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        Mat { field, rows }
    }

    pub fn scalar(field: CycField, size: usize, c: &CycNum) -> Mat {
        let rows = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| if i == j { c.clone() } else { field.zero() })
                    .collect()
            })
            .collect();
        Mat { field, rows }
    }

    /// Convenience constructor from integer entries.
    pub fn from_int_rows(field: CycField, rows: &[Vec<i64>]) -> Mat {
        Mat {
            field,
            rows: rows
                .iter()
                .map(|r| r.iter().map(|&k| field.from_int(k)).collect())
                .collect(),
        }
    }

    pub fn field(&self) -> &CycField {
        &self.field
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<CycNum>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &CycNum {
        &self.rows[i][j]
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.field != other.field || self.size() != other.size() {
            return Err(Error::DomainMismatch("matrix domains differ".into()));
        }
        let n = self.size();
        let f = &self.field;
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut s = f.zero();
                        for k in 0..n {
                            s = f.add(&s, &f.mul(&self.rows[i][k], &other.rows[k][j]));
                        }
                        s
                    })
                    .collect()
            })
            .collect();
        Ok(Mat {
            field: self.field,
            rows,
        })
    }

    pub fn scale(&self, c: &CycNum) -> Mat {
        Mat {
            field: self.field,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|e| self.field.mul(e, c)).collect())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        if self.field != other.field || self.size() != other.size() {
            return Err(Error::DomainMismatch("matrix domains differ".into()));
        }
        Ok(Mat {
            field: self.field,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| {
                    a.iter()
                        .zip(b)
                        .map(|(x, y)| self.field.sub(x, y))
                        .collect()
                })
                .collect(),
        })
    }

    pub fn inverse(&self) -> Result<Mat> {
        let rows = mat_inv(&self.field, &self.rows)?;
        Ok(Mat {
            field: self.field,
            rows,
        })
    }

    pub fn det(&self) -> CycNum {
        det(&self.field, &self.rows)
    }

    pub fn rank(&self) -> usize {
        rank(&self.field, &self.rows)
    }

    pub fn is_identity(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| {
            (0..n).all(|j| {
                if i == j {
                    self.rows[i][j].is_one()
                } else {
                    self.rows[i][j].is_zero()
                }
            })
        })
    }

    /// Order of the matrix in GL_n, or an error past the cap.
    pub fn element_order(&self, cap: usize) -> Result<usize> {
        let mut m = self.clone();
        for k in 1..=cap {
            if m.is_identity() {
                return Ok(k);
            }
            m = m.mul(self)?;
        }
        Err(Error::ClosureExceeded(cap))
    }

    /// True when the matrix fixes a hyperplane pointwise: rank(M - I) == 1.
    pub fn is_pseudo_reflection(&self) -> bool {
        let id = Mat::identity(self.field, self.size());
        let d = self.sub(&id).expect("same shape");
        d.rank() == 1
    }

    /// True when some root of unity c makes M/c a pseudo-reflection, i.e.
    /// rank(M - cI) == 1.  The roots of unity of Q(zeta_n) are +-zeta_n^k.
    pub fn is_scalar_twist_of_reflection(&self) -> bool {
        let n = self.field.conductor();
        for k in 0..n {
            for sign in [1i64, -1] {
                let c = CycNum::root_of_unity(n, k as i64).scale_int(sign);
                let twisted = self.sub(&Mat::scalar(self.field, self.size(), &c));
                if twisted.expect("same shape").rank() == 1 {
                    return true;
                }
            }
        }
        false
    }

    /// Coefficientwise embedding into a larger cyclotomic field.
    pub fn coerce(&self, m: u32) -> Result<Mat> {
        let field = CycField::new(m);
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.coerce(m)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Mat { field, rows })
    }

    fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for row in &self.rows {
            for e in row {
                let b = e.canonical_bytes();
                out.extend_from_slice(&(b.len() as u32).to_le_bytes());
                out.extend_from_slice(&b);
            }
        }
        out
    }

    /// Reduce all entries modulo a prime ideal.
    pub fn reduce_mod(&self, ideal: &PrimeIdeal) -> Result<Vec<Vec<FqElem>>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|e| cyc_reduce(e, ideal)).collect())
            .collect()
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat[n={}] [", self.field.conductor())?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A finite matrix group, materialized as an explicit element list.
/// Element 0 is the identity; the generator images are tracked by index.
pub struct MatGroup {
    field: CycField,
    size: usize,
    generators: Vec<Mat>,
    elements: Vec<Mat>,
    index: HashMap<Vec<u8>, usize>,
}

impl MatGroup {
    /// Breadth-first closure of the generating set, failing past `max_order`.
    pub fn generate(generators: Vec<Mat>, max_order: usize) -> Result<MatGroup> {
        let first = generators
            .first()
            .ok_or_else(|| Error::Precondition("no generators".into()))?;
        let field = *first.field();
        let size = first.size();
        for g in &generators {
            if *g.field() != field || g.size() != size {
                return Err(Error::DomainMismatch(
                    "generators live in different matrix rings".into(),
                ));
            }
        }
        let id = Mat::identity(field, size);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id.canonical_bytes(), 0usize);
        let mut frontier = std::collections::VecDeque::from([0usize]);
        while let Some(at) = frontier.pop_front() {
            for g in &generators {
                let next = elements[at].mul(g)?;
                let key = next.canonical_bytes();
                if !index.contains_key(&key) {
                    if elements.len() >= max_order {
                        return Err(Error::ClosureExceeded(max_order));
                    }
                    index.insert(key, elements.len());
                    frontier.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        Ok(MatGroup {
            field,
            size,
            generators,
            elements,
            index,
        })
    }

    pub fn field(&self) -> &CycField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.size
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    pub fn generators(&self) -> &[Mat] {
        &self.generators
    }

    pub fn contains(&self, m: &Mat) -> bool {
        self.index.contains_key(&m.canonical_bytes())
    }

    /// All pseudo-reflections in the group.
    pub fn reflections(&self) -> Vec<&Mat> {
        self.elements
            .iter()
            .filter(|m| m.is_pseudo_reflection())
            .collect()
    }

    /// True when the group is generated by its pseudo-reflections
    /// (checked by regenerating the closure from them).
    pub fn is_reflection_group(&self, max_order: usize) -> Result<bool> {
        let refl: Vec<Mat> = self
            .elements
            .iter()
            .filter(|m| m.is_pseudo_reflection())
            .cloned()
            .collect();
        if refl.is_empty() {
            return Ok(false);
        }
        let sub = MatGroup::generate(refl, max_order)?;
        Ok(sub.order() == self.order())
    }

    /// The conjugate group U^-1 G U as a fresh generating set.
    pub fn conjugate_generators(&self, u: &Mat) -> Result<Vec<Mat>> {
        let uinv = u.inverse()?;
        self.generators
            .iter()
            .map(|g| uinv.mul(g)?.mul(u))
            .collect()
    }

    /// Reduce every element modulo the ideal; errors when a denominator
    /// collides with p.
    pub fn reduce_mod(&self, ideal: &PrimeIdeal) -> Result<Vec<Vec<Vec<FqElem>>>> {
        self.elements.iter().map(|m| m.reduce_mod(ideal)).collect()
    }

    /// True when reduction modulo the ideal is injective on the group.
    pub fn is_faithful_mod(&self, ideal: &PrimeIdeal) -> Result<bool> {
        let field = ResidueField::new(ideal.clone());
        let _ = &field;
        let mut seen = std::collections::HashSet::new();
        for m in &self.elements {
            let r = m.reduce_mod(ideal)?;
            let mut key = Vec::new();
            for row in &r {
                for e in row {
                    for &c in e {
                        key.extend_from_slice(&c.to_le_bytes());
                    }
                }
            }
            if !seen.insert(key) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Apply a group element to a polynomial: f goes to f(g x).
    pub fn act(&self, g: usize, f: &Poly<CycField>) -> Result<Poly<CycField>> {
        f.substitute_linear(self.elements[g].rows())
    }
}

impl fmt::Debug for MatGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MatGroup(order={}, dim={}, n={})",
            self.order(),
            self.size,
            self.field.conductor()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group_closure() {
        let f = CycField::new(4);
        let i = CycNum::root_of_unity(4, 1);
        // [[0, -1], [1, 0]] has order 4
        let r = Mat::from_int_rows(f, &[vec![0, -1], vec![1, 0]]);
        let g = MatGroup::generate(vec![r.clone()], 100).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(r.element_order(10).unwrap(), 4);
        assert!(g.contains(&Mat::identity(f, 2)));
        assert!(g.contains(&r.mul(&r).unwrap()));
        // scalar i*I has order 4 as well
        let s = Mat::scalar(f, 2, &i);
        let g2 = MatGroup::generate(vec![s], 100).unwrap();
        assert_eq!(g2.order(), 4);
        // closure bound trips
        assert!(matches!(
            MatGroup::generate(vec![r], 3),
            Err(Error::ClosureExceeded(3))
        ));
    }

    #[test]
    fn symmetric_group_on_three_points() {
        let f = CycField::new(4);
        let swap = Mat::from_int_rows(f, &[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        let cycle = Mat::from_int_rows(f, &[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
        let g = MatGroup::generate(vec![swap, cycle], 100).unwrap();
        assert_eq!(g.order(), 6);
        // transpositions are the only pseudo-reflections: 3 of them
        assert_eq!(g.reflections().len(), 3);
        assert!(g.is_reflection_group(100).unwrap());
    }

    #[test]
    fn reflection_classification() {
        let f = CycField::new(4);
        let i = CycNum::root_of_unity(4, 1);
        let refl = Mat::from_int_rows(f, &[vec![1, 0], vec![0, -1]]);
        assert!(refl.is_pseudo_reflection());
        let id = Mat::identity(f, 2);
        assert!(!id.is_pseudo_reflection());
        // i * reflection is not a reflection but is a scalar twist of one
        let twisted = refl.scale(&i);
        assert!(!twisted.is_pseudo_reflection());
        assert!(twisted.is_scalar_twist_of_reflection());
        // a diagonal matrix with distinct non-unit eigenvalues is neither
        let diag = Mat::from_int_rows(f, &[vec![2, 0], vec![0, 3]]);
        assert!(!diag.is_scalar_twist_of_reflection());
    }

    #[test]
    fn conjugation_preserves_order() {
        let f = CycField::new(4);
        let swap = Mat::from_int_rows(f, &[vec![0, 1], vec![1, 0]]);
        let rot = Mat::from_int_rows(f, &[vec![0, -1], vec![1, 0]]);
        let g = MatGroup::generate(vec![swap, rot], 100).unwrap();
        assert_eq!(g.order(), 8);
        let u = Mat::from_int_rows(f, &[vec![1, 1], vec![0, 1]]);
        let conj = g.conjugate_generators(&u).unwrap();
        let g2 = MatGroup::generate(conj, 100).unwrap();
        assert_eq!(g2.order(), 8);
    }

    #[test]
    fn inverse_and_det() {
        let f = CycField::new(8);
        let z = CycNum::root_of_unity(8, 1);
        let m = Mat::new(
            f,
            vec![
                vec![z.clone(), f.one()],
                vec![f.zero(), z.pow(2).unwrap()],
            ],
        )
        .unwrap();
        let minv = m.inverse().unwrap();
        assert!(m.mul(&minv).unwrap().is_identity());
        assert_eq!(m.det(), z.pow(3).unwrap());
        let sing = Mat::from_int_rows(f, &[vec![1, 1], vec![1, 1]]);
        assert!(sing.inverse().is_err());
    }

    #[test]
    fn faithful_reduction() {
        use crate::cyclo::primes_above;
        let f = CycField::new(4);
        let rot = Mat::from_int_rows(f, &[vec![0, -1], vec![1, 0]]);
        let g = MatGroup::generate(vec![rot], 100).unwrap();
        // mod 5 (split) the four rotations stay distinct
        let over5 = primes_above(4, 5).unwrap();
        assert!(g.is_faithful_mod(&over5[0]).unwrap());
        // mod 2 the reduction collapses: [[0,-1],[1,0]] = [[0,1],[1,0]] mod 2
        let over2 = primes_above(4, 2).unwrap();
        assert!(!g.is_faithful_mod(&over2[0]).unwrap());
    }

    #[test]
    fn action_on_polynomials() {
        let f = CycField::new(4);
        let x = Poly::var(f, 2, 0);
        let y = Poly::var(f, 2, 1);
        let rot = Mat::from_int_rows(f, &[vec![0, -1], vec![1, 0]]);
        let g = MatGroup::generate(vec![rot], 100).unwrap();
        // x^2 + y^2 is invariant under the rotation group
        let p = x.pow(2).add(&y.pow(2)).unwrap();
        for k in 0..g.order() {
            assert_eq!(g.act(k, &p).unwrap(), p);
        }
        // x alone is not
        assert_ne!(g.act(1, &x).unwrap(), x);
    }
}
