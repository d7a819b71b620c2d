//! Invariant theory of finite matrix groups: Reynolds averaging, bases of
//! homogeneous invariant spaces, rewriting invariants in terms of a chosen
//! generating set, and a leading-term membership test for subrings.
//!
//! Everything is exact.  The invariant-space routine works monomial by
//! monomial, caching powers of the linear forms coming from each group
//! element's rows so the same group element is never expanded twice.

use num::bigint::BigInt;
use num::One;

use crate::cyclo::CycNum;
use crate::field::{rref, CoeffField, CycField};
use crate::matgroup::MatGroup;
use crate::polyring::{monomials_of_degree, Monomial, MonomialOrder, Poly};
use crate::{Error, Result};

/// Average of f over the group: (1/|G|) sum of f(g x).
pub fn reynolds(group: &MatGroup, f: &Poly<CycField>) -> Result<Poly<CycField>> {
    if f.nvars() != group.dim() {
        return Err(Error::DomainMismatch(format!(
            "polynomial in {} vars under a {}-dimensional group",
            f.nvars(),
            group.dim()
        )));
    }
    let field = *group.field();
    let mut acc = Poly::zero(field, group.dim());
    for g in group.elements() {
        acc = acc.add(&f.substitute_linear(g.rows())?)?;
    }
    let scale = CycNum::new(
        field.conductor(),
        vec![BigInt::one()],
        BigInt::from(group.order()),
    )?;
    Ok(acc.scale(&scale))
}

/// True when f is fixed by every generator (hence by the whole group).
pub fn is_invariant(group: &MatGroup, f: &Poly<CycField>) -> Result<bool> {
    for g in group.generators() {
        if f.substitute_linear(g.rows())? != *f {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Basis of the space of homogeneous invariants of the given degree,
/// echelonized and normalized to primitive integral polynomials, in a
/// deterministic order.
pub fn invariant_space(group: &MatGroup, degree: u32) -> Result<Vec<Poly<CycField>>> {
    let field = *group.field();
    let nvars = group.dim();
    let monos = monomials_of_degree(nvars, degree);
    let col_of: std::collections::HashMap<Vec<u32>, usize> = monos
        .iter()
        .enumerate()
        .map(|(i, m)| (m.0.clone(), i))
        .collect();
    // accumulate sum over the group of (g x)^a for every degree-d monomial a
    let mut rows: Vec<Vec<CycNum>> =
        vec![vec![field.zero(); monos.len()]; monos.len()];
    for g in group.elements() {
        // cache powers of each row's linear form up to the degree
        let mut powers: Vec<Vec<Poly<CycField>>> = Vec::with_capacity(nvars);
        for i in 0..nvars {
            let form_terms = g
                .rows()[i]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| {
                    let mut exps = vec![0u32; nvars];
                    exps[j] = 1;
                    (Monomial(exps), c.clone())
                })
                .collect();
            let form = Poly::from_terms(field, nvars, form_terms);
            let mut p = Vec::with_capacity(degree as usize + 1);
            p.push(Poly::constant(field, nvars, field.one()));
            for k in 1..=degree as usize {
                let next = p[k - 1].mul(&form)?;
                p.push(next);
            }
            powers.push(p);
        }
        for (row_idx, a) in monos.iter().enumerate() {
            let mut img = Poly::constant(field, nvars, field.one());
            for (i, &e) in a.0.iter().enumerate() {
                if e > 0 {
                    img = img.mul(&powers[i][e as usize])?;
                }
            }
            for (m, c) in img.terms() {
                let col = col_of[&m.0];
                rows[row_idx][col] = field.add(&rows[row_idx][col], c);
            }
        }
    }
    rref(&field, &mut rows);
    let mut basis: Vec<Poly<CycField>> = rows
        .into_iter()
        .map(|row| {
            let terms = row
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (monos[i].clone(), c))
                .collect();
            Poly::from_terms(field, nvars, terms).primitive_part()
        })
        .collect();
    basis.sort_by(|a, b| {
        b.terms()[0]
            .0
            .internal_cmp(&a.terms()[0].0)
            .then(std::cmp::Ordering::Equal)
    });
    Ok(basis)
}

/// True when f lies in the linear span of the given polynomials.
pub fn space_contains(space: &[Poly<CycField>], f: &Poly<CycField>) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let Some(first) = space.first() else {
        return Ok(false);
    };
    let field = *first.field();
    // columns: union of monomials
    let mut cols: Vec<Monomial> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for p in space.iter().chain(std::iter::once(f)) {
        for (m, _) in p.terms() {
            if seen.insert(m.0.clone()) {
                cols.push(m.clone());
            }
        }
    }
    let col_of: std::collections::HashMap<Vec<u32>, usize> = cols
        .iter()
        .enumerate()
        .map(|(i, m)| (m.0.clone(), i))
        .collect();
    // solve space^T c = f
    let mut a = vec![vec![field.zero(); space.len()]; cols.len()];
    for (j, p) in space.iter().enumerate() {
        for (m, c) in p.terms() {
            a[col_of[&m.0]][j] = c.clone();
        }
    }
    let mut b = vec![field.zero(); cols.len()];
    for (m, c) in f.terms() {
        b[col_of[&m.0]] = c.clone();
    }
    Ok(crate::field::solve(&field, &a, &b).is_some())
}

/// Verify the characteristic-zero preconditions for a candidate system of
/// basic invariants: each polynomial is invariant, they are algebraically
/// independent (nonzero Jacobian), and the degree product equals the group
/// order.  Any failure is an error describing what broke.
pub fn kemper_check(group: &MatGroup, polys: &[Poly<CycField>]) -> Result<()> {
    for p in polys {
        if !is_invariant(group, p)? {
            return Err(Error::NotInvariant(p.to_string()));
        }
    }
    let jac = crate::polyring::jacobian_det(polys)?;
    if jac.is_zero() {
        return Err(Error::DependentGenerators);
    }
    let mut product: u64 = 1;
    for p in polys {
        let d = p
            .total_degree()
            .ok_or_else(|| Error::Precondition("zero polynomial among candidates".into()))?;
        product *= d as u64;
    }
    if product != group.order() as u64 {
        return Err(Error::Precondition(format!(
            "degree product {product} does not match the group order {}",
            group.order()
        )));
    }
    Ok(())
}

/// All exponent tuples e with sum e_i * weights_i = total.
pub fn weighted_tuples(weights: &[u32], total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; weights.len()];
    fn rec(
        weights: &[u32],
        current: &mut Vec<u32>,
        pos: usize,
        left: u32,
        out: &mut Vec<Vec<u32>>,
    ) {
        if pos == weights.len() {
            if left == 0 {
                out.push(current.clone());
            }
            return;
        }
        let w = weights[pos];
        let max = if w == 0 { 0 } else { left / w };
        for e in 0..=max {
            current[pos] = e;
            rec(weights, current, pos + 1, left - e * w, out);
        }
        current[pos] = 0;
    }
    rec(weights, &mut current, 0, total, &mut out);
    out
}

/// Write `target` as a polynomial in `gens`, when possible: returns the list
/// of (exponent tuple over gens, coefficient) pairs, or None when the target
/// is not in the subalgebra generated by `gens` (searched degree by degree;
/// inputs must be homogeneous so the weighted-degree bound is exact).
pub fn express_in_subalgebra(
    target: &Poly<CycField>,
    gens: &[Poly<CycField>],
) -> Result<Option<Vec<(Vec<u32>, CycNum)>>> {
    if target.is_zero() {
        return Ok(Some(Vec::new()));
    }
    let field = *target.field();
    for g in gens {
        if !g.is_homogeneous() || g.is_zero() {
            return Err(Error::Precondition(
                "subalgebra generators must be nonzero homogeneous".into(),
            ));
        }
    }
    if !target.is_homogeneous() {
        return Err(Error::Precondition("target must be homogeneous".into()));
    }
    let weights: Vec<u32> = gens.iter().map(|g| g.total_degree().unwrap()).collect();
    let total = target.total_degree().unwrap();
    let tuples = weighted_tuples(&weights, total);
    if tuples.is_empty() {
        return Ok(None);
    }
    // cache powers of each generator
    let mut powcache: Vec<Vec<Poly<CycField>>> = gens
        .iter()
        .map(|g| vec![Poly::constant(field, g.nvars(), field.one()), g.clone()])
        .collect();
    let mut products: Vec<Poly<CycField>> = Vec::with_capacity(tuples.len());
    for t in &tuples {
        let mut prod = Poly::constant(field, target.nvars(), field.one());
        for (i, &e) in t.iter().enumerate() {
            while powcache[i].len() <= e as usize {
                let next = powcache[i].last().unwrap().mul(&gens[i])?;
                powcache[i].push(next);
            }
            if e > 0 {
                prod = prod.mul(&powcache[i][e as usize])?;
            }
        }
        products.push(prod);
    }
    // linear system over the union of monomials
    let mut cols: Vec<Monomial> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for p in products.iter().chain(std::iter::once(target)) {
        for (m, _) in p.terms() {
            if seen.insert(m.0.clone()) {
                cols.push(m.clone());
            }
        }
    }
    let col_of: std::collections::HashMap<Vec<u32>, usize> = cols
        .iter()
        .enumerate()
        .map(|(i, m)| (m.0.clone(), i))
        .collect();
    let mut a = vec![vec![field.zero(); products.len()]; cols.len()];
    for (j, p) in products.iter().enumerate() {
        for (m, c) in p.terms() {
            a[col_of[&m.0]][j] = c.clone();
        }
    }
    let mut b = vec![field.zero(); cols.len()];
    for (m, c) in target.terms() {
        b[col_of[&m.0]] = c.clone();
    }
    match crate::field::solve(&field, &a, &b) {
        None => Ok(None),
        Some(x) => Ok(Some(
            tuples
                .into_iter()
                .zip(x)
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        )),
    }
}

/// Outcome of the leading-term membership test over the ring of integers.
#[derive(Clone, Debug)]
pub enum SagbiOutcome {
    /// The target reduced to zero; the representation lists
    /// (exponent tuple over gens, integral coefficient) steps.
    Member(Vec<(Vec<u32>, CycNum)>),
    /// Reduction got stuck at a nonzero remainder whose leading monomial is
    /// not a product of generator leading monomials.
    NotMember { remainder: Box<Poly<CycField>> },
    /// Preconditions failed; the reasons say which ones.
    NotApplicable { reasons: Vec<String> },
}

/// Greedy leading-term reduction of `target` against the subring generated
/// by `gens` over Z[zeta_n], under the given monomial order.
///
/// Preconditions checked: every generator must have a unit leading
/// coefficient (so the division stays inside the ring of integers) and the
/// leading-monomial exponent vectors must be linearly independent (so
/// exponent equations have at most one solution).  When they fail the test
/// refuses to certify rather than guessing.
pub fn sagbi_membership(
    target: &Poly<CycField>,
    gens: &[Poly<CycField>],
    order: &MonomialOrder,
) -> Result<SagbiOutcome> {
    let field = *target.field();
    let mut reasons = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            reasons.push(format!("generator {i} is zero"));
            continue;
        }
        let lc = g.leading_coeff(order).unwrap();
        if !lc.is_integral() || !lc.is_unit()? {
            reasons.push(format!(
                "generator {i} has non-unit leading coefficient {lc}"
            ));
        }
    }
    let lms: Vec<Vec<u32>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.leading_monomial(order).unwrap().0)
        .collect();
    if crate::polyring::exponent_rank(&lms) < lms.len() {
        reasons.push("leading-monomial exponents are linearly dependent".into());
    }
    if !reasons.is_empty() {
        return Ok(SagbiOutcome::NotApplicable { reasons });
    }
    let mut work = target.clone();
    let mut rep = Vec::new();
    let mut guard = 0usize;
    while !work.is_zero() {
        guard += 1;
        if guard > 10_000 {
            return Err(Error::ResourceLimit(
                "leading-term reduction did not terminate".into(),
            ));
        }
        let (lm, lc) = {
            let (m, c) = work.leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        // solve for exponents e with sum e_i * lm_i = lm over the rationals
        let Some(exps) = solve_exponents(&lms, &lm.0) else {
            return Ok(SagbiOutcome::NotMember {
                remainder: Box::new(work),
            });
        };
        let mut coeff = lc.clone();
        let mut prod = Poly::constant(field, target.nvars(), field.one());
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                prod = prod.mul(&gens[i].pow(e))?;
            }
        }
        let plc = prod.leading_coeff(order).unwrap();
        coeff = coeff.div(&plc)?;
        if !coeff.is_integral() {
            // cannot happen when the leading coefficients are units, but
            // keep the refusal path honest
            return Ok(SagbiOutcome::NotApplicable {
                reasons: vec![format!("division produced non-integral {coeff}")],
            });
        }
        work = work.sub(&prod.scale(&coeff))?;
        rep.push((exps, coeff));
    }
    Ok(SagbiOutcome::Member(rep))
}

/// Nonnegative integer solution e of sum e_i * rows_i = rhs, when the rows
/// are independent (so the solution is unique if it exists).
fn solve_exponents(rows: &[Vec<u32>], rhs: &[u32]) -> Option<Vec<u32>> {
    // rational solve via exact integer Gaussian elimination on the transpose
    use num::rational::BigRational;
    use num::Zero;
    let k = rows.len();
    let n = rhs.len();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|c| {
            (0..k)
                .map(|i| BigRational::from(BigInt::from(rows[i][c])))
                .collect()
        })
        .collect();
    let mut b: Vec<BigRational> = rhs
        .iter()
        .map(|&v| BigRational::from(BigInt::from(v)))
        .collect();
    let mut pivot_rows = Vec::new();
    let mut rank = 0;
    for col in 0..k {
        let Some(pr) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pr);
        b.swap(rank, pr);
        let pv = a[rank][col].clone();
        for c in 0..k {
            a[rank][c] = &a[rank][c] / &pv;
        }
        b[rank] = &b[rank] / &pv;
        for r in 0..n {
            if r != rank && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..k {
                    let t = &f * &a[rank][c];
                    a[r][c] = &a[r][c] - t;
                }
                let t = &f * &b[rank];
                b[r] = &b[r] - t;
            }
        }
        pivot_rows.push((rank, col));
        rank += 1;
    }
    // consistency: rows past the rank must have zero rhs
    for r in rank..n {
        if !b[r].is_zero() {
            return None;
        }
    }
    let mut e = vec![BigRational::zero(); k];
    for &(r, c) in &pivot_rows {
        e[c] = b[r].clone();
    }
    let mut out = Vec::with_capacity(k);
    for v in e {
        if !v.is_integer() {
            return None;
        }
        let vi = v.to_integer();
        if vi < BigInt::zero() {
            return None;
        }
        use num::ToPrimitive;
        out.push(vi.to_u32()?);
    }
    Some(out)
}
