//! Sparse multivariate polynomials over an exact coefficient field.
//!
//! Terms are kept sorted (descending, graded lexicographic in the natural
//! variable order) with no zero coefficients, so equality is structural.
//! Leading terms with respect to a caller-supplied monomial order are found
//! by scanning, which is cheap at the term counts that appear here.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::cyclo::{cyc_reduce, CycNum, PrimeIdeal, ResidueField};
use crate::field::{CoeffField, CycField};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// monomials and orders
// ---------------------------------------------------------------------------

/// Exponent vector of a monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// other / self when self divides other.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(
                other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// The fixed internal order used for term storage: graded lexicographic
    /// in the natural variable order.
    pub fn internal_cmp(&self, other: &Monomial) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Comparison kind for a monomial order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderKind {
    Lex,
    GradedLex,
}

/// A monomial order: lexicographic or graded lexicographic, refined by a
/// priority permutation listing variables from most to least significant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex(nvars: usize) -> MonomialOrder {
        MonomialOrder {
            kind: OrderKind::Lex,
            priority: (0..nvars).collect(),
        }
    }

    pub fn graded_lex(nvars: usize) -> MonomialOrder {
        MonomialOrder {
            kind: OrderKind::GradedLex,
            priority: (0..nvars).collect(),
        }
    }

    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> MonomialOrder {
        MonomialOrder { kind, priority }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.kind == OrderKind::GradedLex {
            match a.total_degree().cmp(&b.total_degree()) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        for &v in &self.priority {
            match a.0[v].cmp(&b.0[v]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

/// Rank over Q of a set of exponent vectors (exact).
pub fn exponent_rank(rows: &[Vec<u32>]) -> usize {
    use num::rational::BigRational;
    if rows.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&e| BigRational::from(BigInt::from(e)))
                .collect()
        })
        .collect();
    let ncols = m[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let pv = m[rank][col].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let factor = &m[r][col] / &pv;
                for c in 0..ncols {
                    let t = &factor * &m[rank][c];
                    m[r][c] = &m[r][c] - t;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// All exponent vectors in `nvars` variables of total degree exactly `d`.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fn rec(out: &mut Vec<Monomial>, current: &mut Vec<u32>, pos: usize, left: u32) {
        if pos + 1 == current.len() {
            current[pos] = left;
            out.push(Monomial(current.clone()));
            return;
        }
        for e in (0..=left).rev() {
            current[pos] = e;
            rec(out, current, pos + 1, left - e);
        }
        current[pos] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial(vec![]));
        }
        return out;
    }
    rec(&mut out, &mut current, 0, d);
    out
}

// ---------------------------------------------------------------------------
// polynomials
// ---------------------------------------------------------------------------

/// A polynomial in `nvars` variables over the field `F`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<F: CoeffField> {
    field: F,
    nvars: usize,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: CoeffField> Poly<F> {
    pub fn zero(field: F, nvars: usize) -> Poly<F> {
        Poly {
            field,
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: F, nvars: usize, c: F::Elem) -> Poly<F> {
        let mut p = Poly::zero(field, nvars);
        if !p.field.is_zero(&c) {
            p.terms.push((Monomial::one(nvars), c));
        }
        p
    }

    pub fn var(field: F, nvars: usize, i: usize) -> Poly<F> {
        let mut exps = vec![0u32; nvars];
        exps[i] = 1;
        let one = field.one();
        Poly {
            field,
            nvars,
            terms: vec![(Monomial(exps), one)],
        }
    }

    pub fn monomial(field: F, nvars: usize, exps: Vec<u32>, coeff: F::Elem) -> Poly<F> {
        assert_eq!(exps.len(), nvars);
        let mut p = Poly::zero(field, nvars);
        if !p.field.is_zero(&coeff) {
            p.terms.push((Monomial(exps), coeff));
        }
        p
    }

    /// Build from unsorted terms, merging duplicates.
    pub fn from_terms(field: F, nvars: usize, terms: Vec<(Monomial, F::Elem)>) -> Poly<F> {
        let mut map: BTreeMap<Vec<u32>, F::Elem> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.0.len(), nvars);
            match map.entry(m.0) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = field.add(e.get(), &c);
                    *e.get_mut() = s;
                }
            }
        }
        let mut terms: Vec<(Monomial, F::Elem)> = map
            .into_iter()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(e, c)| (Monomial(e), c))
            .collect();
        terms.sort_by(|a, b| b.0.internal_cmp(&a.0));
        Poly {
            field,
            nvars,
            terms,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.total_degree();
                self.terms.iter().all(|(m, _)| m.total_degree() == d)
            }
        }
    }

    pub fn coeff_of(&self, m: &Monomial) -> F::Elem {
        self.terms
            .iter()
            .find(|(mm, _)| mm == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut seen = vec![false; self.nvars];
        for (m, _) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    seen[i] = true;
                }
            }
        }
        (0..self.nvars).filter(|&i| seen[i]).collect()
    }

    fn check_compatible(&self, other: &Poly<F>) -> Result<()> {
        if self.field != other.field || self.nvars != other.nvars {
            return Err(Error::DomainMismatch(format!(
                "cannot combine polynomials over {:?} in {} vars and {:?} in {} vars",
                self.field, self.nvars, other.field, other.nvars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly<F>) -> Result<Poly<F>> {
        self.check_compatible(other)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(Poly::from_terms(self.field.clone(), self.nvars, terms))
    }

    pub fn sub(&self, other: &Poly<F>) -> Result<Poly<F>> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly<F> {
        Poly {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.field.neg(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly<F>) -> Result<Poly<F>> {
        self.check_compatible(other)?;
        let mut map: BTreeMap<Vec<u32>, F::Elem> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let prod = self.field.mul(ca, cb);
                match map.entry(m.0) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = self.field.add(e.get(), &prod);
                        *e.get_mut() = s;
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, F::Elem)> = map
            .into_iter()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(e, c)| (Monomial(e), c))
            .collect();
        terms.sort_by(|a, b| b.0.internal_cmp(&a.0));
        Ok(Poly {
            field: self.field.clone(),
            nvars: self.nvars,
            terms,
        })
    }

    pub fn pow(&self, e: u32) -> Poly<F> {
        let mut acc = Poly::constant(self.field.clone(), self.nvars, self.field.one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    pub fn scale(&self, c: &F::Elem) -> Poly<F> {
        if self.field.is_zero(c) {
            return Poly::zero(self.field.clone(), self.nvars);
        }
        Poly {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), self.field.mul(k, c)))
                .collect(),
        }
    }

    pub fn eval(&self, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.nvars);
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = self.field.mul(&t, &self.field.pow(&point[i], e));
                }
            }
            acc = self.field.add(&acc, &t);
        }
        acc
    }

    /// Partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Poly<F> {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let coeff = self.field.mul(c, &self.field.from_int(e as i64));
            if self.field.is_zero(&coeff) {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] -= 1;
            terms.push((Monomial(exps), coeff));
        }
        Poly::from_terms(self.field.clone(), self.nvars, terms)
    }

    /// Leading term with respect to the given order.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &F::Elem)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<Monomial> {
        self.leading_term(order).map(|(m, _)| m.clone())
    }

    pub fn leading_coeff(&self, order: &MonomialOrder) -> Option<F::Elem> {
        self.leading_term(order).map(|(_, c)| c.clone())
    }

    /// Substitute each variable x_i by the linear form given by row i of the
    /// matrix: the result is f(M y) where y has `m[0].len()` variables.
    /// Composition is contravariant:
    /// substitute_linear(A, substitute_linear(B, f)) = substitute_linear(B A, f).
    pub fn substitute_linear(&self, m: &[Vec<F::Elem>]) -> Result<Poly<F>> {
        if m.len() != self.nvars {
            return Err(Error::DomainMismatch(format!(
                "substitution matrix has {} rows for {} variables",
                m.len(),
                self.nvars
            )));
        }
        let new_nvars = m.first().map_or(0, |r| r.len());
        // linear forms L_i and a cache of their powers
        let forms: Vec<Poly<F>> = m
            .iter()
            .map(|row| {
                let terms = row
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !self.field.is_zero(c))
                    .map(|(j, c)| {
                        let mut exps = vec![0u32; new_nvars];
                        exps[j] = 1;
                        (Monomial(exps), c.clone())
                    })
                    .collect();
                Poly::from_terms(self.field.clone(), new_nvars, terms)
            })
            .collect();
        let mut powers: Vec<Vec<Poly<F>>> = forms
            .iter()
            .map(|f| vec![Poly::constant(self.field.clone(), new_nvars, self.field.one()), f.clone()])
            .collect();
        let power = |powers: &mut Vec<Vec<Poly<F>>>, i: usize, e: usize| -> Poly<F> {
            while powers[i].len() <= e {
                let last = powers[i].last().unwrap().clone();
                let next = last.mul(&powers[i][1]).expect("same ring");
                powers[i].push(next);
            }
            powers[i][e].clone()
        };
        let mut acc = Poly::zero(self.field.clone(), new_nvars);
        for (mono, c) in &self.terms {
            let mut t = Poly::constant(self.field.clone(), new_nvars, c.clone());
            for (i, &e) in mono.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&power(&mut powers, i, e as usize))?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{}", names[i], e)
                    }
                })
                .collect();
            let cs = self.field.elem_string(c);
            let part = if mono.is_empty() {
                format!("({cs})")
            } else if cs == "1" {
                mono.join("*")
            } else if cs == "-1" {
                format!("-{}", mono.join("*"))
            } else {
                format!("({cs})*{}", mono.join("*"))
            };
            if idx == 0 {
                out.push_str(&part);
            } else if let Some(rest) = part.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&part);
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "nvars": self.nvars,
            "terms": self
                .terms
                .iter()
                .map(|(m, c)| serde_json::json!({
                    "exps": m.0,
                    "coeff": self.field.elem_json(c),
                }))
                .collect::<Vec<_>>(),
        })
    }
}

impl<F: CoeffField> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&default_var_names(self.nvars)))
    }
}

/// Default variable names: x, y, z for up to three variables, x1..xn beyond.
pub fn default_var_names(nvars: usize) -> Vec<String> {
    match nvars {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        _ => (1..=nvars).map(|i| format!("x{i}")).collect(),
    }
}

/// Jacobian determinant of n polynomials in n variables, computed by
/// column-subset dynamic programming over the matrix of partial derivatives.
pub fn jacobian_det<F: CoeffField>(polys: &[Poly<F>]) -> Result<Poly<F>> {
    let n = polys.len();
    if n == 0 {
        return Err(Error::Precondition("empty polynomial list".into()));
    }
    let field = polys[0].field().clone();
    let nvars = polys[0].nvars();
    if nvars != n {
        return Err(Error::Precondition(format!(
            "jacobian needs {nvars} polynomials for {nvars} variables, got {n}"
        )));
    }
    for p in polys {
        polys[0].check_compatible(p)?;
    }
    let mat: Vec<Vec<Poly<F>>> = polys
        .iter()
        .map(|p| (0..n).map(|v| p.derivative(v)).collect())
        .collect();
    // dp maps a bitmask of used columns to the signed minor over processed rows
    let mut dp: std::collections::HashMap<u64, Poly<F>> = std::collections::HashMap::new();
    dp.insert(0, Poly::constant(field.clone(), nvars, field.one()));
    for row in &mat {
        let mut next: std::collections::HashMap<u64, Poly<F>> =
            std::collections::HashMap::new();
        for (mask, acc) in dp {
            if acc.is_zero() {
                continue;
            }
            let used = mask.count_ones() as usize;
            for col in 0..n {
                if mask & (1 << col) != 0 {
                    continue;
                }
                let entry = &row[col];
                if entry.is_zero() {
                    continue;
                }
                // sign from the number of used columns to the right of col
                let inversions = (col + 1..n).filter(|&c| mask & (1 << c) != 0).count();
                let _ = used;
                let mut term = acc.mul(entry)?;
                if inversions % 2 == 1 {
                    term = term.neg();
                }
                let key = mask | (1 << col);
                match next.entry(key) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(term);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = e.get().add(&term)?;
                        *e.get_mut() = s;
                    }
                }
            }
        }
        dp = next;
    }
    let full = (1u64 << n) - 1;
    Ok(dp
        .remove(&full)
        .unwrap_or_else(|| Poly::zero(field, nvars)))
}

// ---------------------------------------------------------------------------
// operations specific to cyclotomic coefficients
// ---------------------------------------------------------------------------

impl Poly<CycField> {
    /// Multiply by the lcm of coefficient denominators; returns the integral
    /// polynomial and the multiplier used.
    pub fn clear_denominators(&self) -> (Poly<CycField>, BigInt) {
        let mut l = BigInt::one();
        for (_, c) in &self.terms {
            l = l.lcm(c.denom());
        }
        let mult = CycNum::new(
            self.field.conductor(),
            vec![l.clone()],
            BigInt::one(),
        )
        .unwrap();
        (self.scale(&mult), l)
    }

    /// Gcd of all integer coordinates of all (integral) coefficients.
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            debug_assert!(c.is_integral());
            for coord in c.coords() {
                g = g.gcd(coord);
                if g.is_one() {
                    return g;
                }
            }
        }
        if g.is_zero() {
            BigInt::one()
        } else {
            g
        }
    }

    /// Clear denominators, divide by the integer content, and fix the sign so
    /// the first nonzero coordinate of the internally-leading coefficient is
    /// positive.  The result generates the same rank-one lattice of
    /// polynomials and is deterministic.
    pub fn primitive_part(&self) -> Poly<CycField> {
        if self.is_zero() {
            return self.clone();
        }
        let (cleared, _) = self.clear_denominators();
        let content = cleared.integer_content();
        let inv = CycNum::new(
            self.field.conductor(),
            vec![BigInt::one()],
            content,
        )
        .unwrap();
        let mut out = cleared.scale(&inv);
        let lead = &out.terms[0].1;
        let negative = lead
            .coords()
            .iter()
            .find(|c| !c.is_zero())
            .map_or(false, |c| c.is_negative());
        if negative {
            out = out.neg();
        }
        out
    }

    /// True when every coefficient lies in Z[zeta_n].
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integral())
    }

    /// Embed the coefficients into Q(zeta_m).
    pub fn coerce(&self, m: u32) -> Result<Poly<CycField>> {
        let field = CycField::new(m);
        let terms = self
            .terms
            .iter()
            .map(|(mono, c)| Ok((mono.clone(), c.coerce(m)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_terms(field, self.nvars, terms))
    }
}

/// Reduce a cyclotomic polynomial modulo a prime ideal, coefficientwise.
pub fn reduce_poly_mod(
    f: &Poly<CycField>,
    ideal: &PrimeIdeal,
) -> Result<Poly<ResidueField>> {
    let field = ResidueField::new(ideal.clone());
    let terms = f
        .terms()
        .iter()
        .map(|(m, c)| Ok((m.clone(), cyc_reduce(c, ideal)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_terms(field, f.nvars(), terms))
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::primes_above;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn qf() -> CycField {
        CycField::new(4)
    }

    fn xy(field: CycField) -> (Poly<CycField>, Poly<CycField>) {
        (Poly::var(field, 2, 0), Poly::var(field, 2, 1))
    }

    #[test]
    fn arithmetic_and_display() {
        let f = qf();
        let (x, y) = xy(f);
        let p = x.add(&y).unwrap();
        let sq = p.mul(&p).unwrap();
        // (x+y)^2 = x^2 + 2xy + y^2
        let expect = Poly::from_terms(
            f,
            2,
            vec![
                (Monomial(vec![2, 0]), f.one()),
                (Monomial(vec![1, 1]), f.from_int(2)),
                (Monomial(vec![0, 2]), f.one()),
            ],
        );
        assert_eq!(sq, expect);
        assert_eq!(sq, p.pow(2));
        assert_eq!(sq.to_string(), "x^2 + (2)*x*y + y^2");
        assert!(sq.is_homogeneous());
        assert_eq!(sq.total_degree(), Some(2));
        // domain mismatch is an error
        let other = Poly::var(CycField::new(3), 2, 0);
        assert!(x.add(&other).is_err());
        let three_vars = Poly::var(f, 3, 0);
        assert!(x.add(&three_vars).is_err());
    }

    #[test]
    fn monomial_orders() {
        // x^2 y vs x y^3: graded-lex picks the higher total degree
        let a = Monomial(vec![2, 1]);
        let b = Monomial(vec![1, 3]);
        let grlex = MonomialOrder::graded_lex(2);
        assert_eq!(grlex.cmp(&a, &b), Ordering::Less);
        let lex = MonomialOrder::lex(2);
        assert_eq!(lex.cmp(&a, &b), Ordering::Greater);
        // y-before-x priority flips lex
        let lex_y = MonomialOrder::with_priority(OrderKind::Lex, vec![1, 0]);
        assert_eq!(lex_y.cmp(&a, &b), Ordering::Less);
        let f = qf();
        let (x, y) = xy(f);
        let p = x.pow(2).mul(&y).unwrap().add(&x.mul(&y.pow(3)).unwrap()).unwrap();
        assert_eq!(p.leading_monomial(&grlex), Some(b.clone()));
        assert_eq!(p.leading_monomial(&lex), Some(a.clone()));
    }

    #[test]
    fn substitution_is_contravariant() {
        let f = qf();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let rand_mat = |rng: &mut ChaCha8Rng| -> Vec<Vec<CycNum>> {
            (0..2)
                .map(|_| (0..2).map(|_| f.from_int(rng.gen_range(-3i64..=3))).collect())
                .collect()
        };
        let rand_poly = |rng: &mut ChaCha8Rng| -> Poly<CycField> {
            let mut terms = Vec::new();
            for _ in 0..5 {
                let e1 = rng.gen_range(0..4u32);
                let e2 = rng.gen_range(0..4u32);
                terms.push((
                    Monomial(vec![e1, e2]),
                    f.from_int(rng.gen_range(-4i64..=4)),
                ));
            }
            Poly::from_terms(f, 2, terms)
        };
        for _ in 0..25 {
            let a = rand_mat(&mut rng);
            let b = rand_mat(&mut rng);
            let p = rand_poly(&mut rng);
            let lhs = p.substitute_linear(&b).unwrap().substitute_linear(&a).unwrap();
            // B*A
            let mut ba = vec![vec![f.zero(); 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        let t = f.mul(&b[i][k], &a[k][j]);
                        ba[i][j] = f.add(&ba[i][j], &t);
                    }
                }
            }
            let rhs = p.substitute_linear(&ba).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn substitution_into_fewer_variables() {
        // f(x, y) = x^2 + y^2 with x -> u, y -> -u gives 2u^2
        let f = qf();
        let (x, y) = xy(f);
        let p = x.pow(2).add(&y.pow(2)).unwrap();
        let m = vec![vec![f.one()], vec![f.from_int(-1)]];
        let q = p.substitute_linear(&m).unwrap();
        assert_eq!(q.nvars(), 1);
        assert_eq!(
            q,
            Poly::monomial(f, 1, vec![2], f.from_int(2))
        );
    }

    #[test]
    fn leading_term_is_multiplicative() {
        let f = qf();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let orders = [
            MonomialOrder::lex(2),
            MonomialOrder::graded_lex(2),
            MonomialOrder::with_priority(OrderKind::GradedLex, vec![1, 0]),
        ];
        for _ in 0..40 {
            let mk = |rng: &mut ChaCha8Rng| {
                let mut terms = Vec::new();
                for _ in 0..4 {
                    terms.push((
                        Monomial(vec![rng.gen_range(0..5u32), rng.gen_range(0..5u32)]),
                        f.from_int(rng.gen_range(1i64..=5)),
                    ));
                }
                Poly::from_terms(f, 2, terms)
            };
            let a = mk(&mut rng);
            let b = mk(&mut rng);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            for ord in &orders {
                let lm_ab = a.mul(&b).unwrap().leading_monomial(ord).unwrap();
                let lm = a
                    .leading_monomial(ord)
                    .unwrap()
                    .mul(&b.leading_monomial(ord).unwrap());
                assert_eq!(lm_ab, lm);
            }
        }
    }

    #[test]
    fn derivatives_and_jacobian() {
        let f = qf();
        let (x, y) = xy(f);
        // jac(x^2, y^3) = diag(2x, 3y^2) -> 6 x y^2
        let j = jacobian_det(&[x.pow(2), y.pow(3)]).unwrap();
        let expect = Poly::monomial(f, 2, vec![1, 2], f.from_int(6));
        assert_eq!(j, expect);
        // swapping rows flips the sign
        let j2 = jacobian_det(&[y.pow(3), x.pow(2)]).unwrap();
        assert_eq!(j2, expect.neg());
        // repeated rows vanish
        let j3 = jacobian_det(&[x.pow(2), x.pow(2)]).unwrap();
        assert!(j3.is_zero());
        // wrong shape
        assert!(jacobian_det(&[x.clone()]).is_err());
        // derivative in characteristic p kills p-th powers
        let ideal = primes_above(4, 3).unwrap().into_iter().next().unwrap();
        let rf = ResidueField::new(ideal);
        let cube = Poly::monomial(rf.clone(), 1, vec![3], rf.one());
        assert!(cube.derivative(0).is_zero());
    }

    #[test]
    fn jacobian_alternating_random() {
        let f = CycField::new(3);
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..10 {
            let mk = |rng: &mut ChaCha8Rng| {
                let mut terms = Vec::new();
                for _ in 0..3 {
                    terms.push((
                        Monomial(vec![
                            rng.gen_range(0..3u32),
                            rng.gen_range(0..3u32),
                            rng.gen_range(0..3u32),
                        ]),
                        f.from_int(rng.gen_range(-3i64..=3)),
                    ));
                }
                Poly::from_terms(f, 3, terms)
            };
            let a = mk(&mut rng);
            let b = mk(&mut rng);
            let c = mk(&mut rng);
            let j = jacobian_det(&[a.clone(), b.clone(), c.clone()]).unwrap();
            let j_swapped = jacobian_det(&[b.clone(), a.clone(), c.clone()]).unwrap();
            assert_eq!(j, j_swapped.neg());
            // linearity in the first argument
            let sum = a.add(&b).unwrap();
            let j_sum = jacobian_det(&[sum, b.clone(), c.clone()]).unwrap();
            let j_b = jacobian_det(&[b.clone(), b.clone(), c.clone()]).unwrap();
            assert_eq!(j_sum, j.add(&j_b).unwrap());
        }
    }

    #[test]
    fn reduction_and_primitive_part() {
        let f = qf();
        let (x, y) = xy(f);
        // (2/3) x^2 + 4 i y^2 -> primitive part x^2 + 6 i y^2
        let i = CycNum::root_of_unity(4, 1);
        let p = x
            .pow(2)
            .scale(&CycNum::from_ratio(4, 2, 3).unwrap())
            .add(&y.pow(2).scale(&i.scale_int(4)))
            .unwrap();
        let prim = p.primitive_part();
        let expect = x
            .pow(2)
            .add(&y.pow(2).scale(&i.scale_int(6)))
            .unwrap();
        assert_eq!(prim, expect);
        assert!(prim.is_integral());
        // reduce x^2 - i y^2 mod the ideal (5, x-2): i -> 2
        let ideal = primes_above(4, 5).unwrap().remove(1);
        let q = x.pow(2).sub(&y.pow(2).scale(&i)).unwrap();
        let qbar = reduce_poly_mod(&q, &ideal).unwrap();
        let rf = ResidueField::new(ideal);
        let expect = Poly::from_terms(
            rf.clone(),
            2,
            vec![
                (Monomial(vec![2, 0]), rf.one()),
                (Monomial(vec![0, 2]), rf.from_u64(3)),
            ],
        );
        assert_eq!(qbar, expect);
        // reduction fails on denominators divisible by p
        let bad = x.scale(&CycNum::from_ratio(4, 1, 5).unwrap());
        let ideal5 = primes_above(4, 5).unwrap().remove(0);
        assert!(reduce_poly_mod(&bad, &ideal5).is_err());
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(2, 3).len(), 4);
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_of_degree(1, 7), vec![Monomial(vec![7])]);
        let all = monomials_of_degree(4, 6);
        assert!(all.iter().all(|m| m.total_degree() == 6));
        let unique: std::collections::HashSet<Vec<u32>> =
            all.iter().map(|m| m.0.clone()).collect();
        assert_eq!(unique.len(), all.len());
    }

    #[test]
    fn json_round_shape() {
        let f = qf();
        let (x, y) = xy(f);
        let p = x.mul(&y).unwrap().scale(&CycNum::from_ratio(4, 1, 2).unwrap());
        let v = p.to_json();
        assert_eq!(v["nvars"], 2);
        assert_eq!(v["terms"][0]["exps"], serde_json::json!([1, 1]));
        assert_eq!(v["terms"][0]["coeff"]["den"], 2);
    }
}
