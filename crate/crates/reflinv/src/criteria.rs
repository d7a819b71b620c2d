//! Certification of invariant rings over rings of cyclotomic integers.
//!
//! The central question: given a reflection group G over R = Z[zeta_n] and a
//! system of fundamental invariants, is R[V]^G a polynomial ring over R?
//! The answer reduces to checking, prime ideal by prime ideal, whether the
//! reductions of the invariants stay algebraically independent.  Candidate
//! ideals are cut down by an exact norm-gcd computation on the Jacobian
//! before any reduction happens.
//!
//! Algebraic independence over a residue field is decided by a ladder of
//! certificates ordered by cost; the last rung (a Groebner elimination) is a
//! decision procedure, so the ladder never guesses.

use std::collections::BTreeSet;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};

use crate::cyclo::{factor_u64, primes_above, CycNum, PrimeIdeal, ResidueField};
use crate::field::CycField;
use crate::groebner::{
    buchberger, has_pure_power_leads, supported_only_on, GroebnerLimits, TermOrder,
};
use crate::invariants::{express_in_subalgebra, kemper_check, weighted_tuples};
use crate::matgroup::MatGroup;
use crate::polyring::{
    exponent_rank, jacobian_det, reduce_poly_mod, Monomial, MonomialOrder, Poly,
};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// algebraic independence over residue fields
// ---------------------------------------------------------------------------

/// Outcome of an independence test, with a human-readable certificate of the
/// rung that decided it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Independence {
    Independent { certificate: String },
    Dependent { certificate: String },
}

impl Independence {
    pub fn is_independent(&self) -> bool {
        matches!(self, Independence::Independent { .. })
    }

    pub fn certificate(&self) -> &str {
        match self {
            Independence::Independent { certificate } => certificate,
            Independence::Dependent { certificate } => certificate,
        }
    }
}

/// Resource knobs for the independence ladder.
#[derive(Clone, Debug)]
pub struct IndepLimits {
    /// Cap on the weighted degree searched for annihilating relations.
    pub annihilator_weight_cap: u32,
    pub groebner: GroebnerLimits,
}

impl Default for IndepLimits {
    fn default() -> Self {
        IndepLimits {
            annihilator_weight_cap: 130,
            groebner: GroebnerLimits::default(),
        }
    }
}

/// Decide algebraic independence of polynomials over a residue field.
pub fn alg_indep_mod(
    polys: &[Poly<ResidueField>],
    limits: &IndepLimits,
) -> Result<Independence> {
    if polys.is_empty() {
        return Ok(Independence::Independent {
            certificate: "empty system".into(),
        });
    }
    let field = polys[0].field().clone();
    let p = field.p();
    let mut sys: Vec<Poly<ResidueField>> = polys.to_vec();

    // cheap dependence certificates
    if let Some(dep) = trivial_dependence(&sys) {
        return Ok(dep);
    }

    // replace any polynomial that is a perfect p-th power by its root; the
    // residue field is perfect, so this preserves independence both ways
    let mut rooted = true;
    while rooted {
        rooted = false;
        for f in sys.iter_mut() {
            if f.total_degree().unwrap_or(0) == 0 {
                continue;
            }
            if f.terms()
                .iter()
                .all(|(m, _)| m.0.iter().all(|&e| e % (p as u32) == 0))
            {
                let terms = f
                    .terms()
                    .iter()
                    .map(|(m, c)| {
                        (
                            Monomial(m.0.iter().map(|&e| e / p as u32).collect()),
                            field.pth_root(c),
                        )
                    })
                    .collect();
                *f = Poly::from_terms(field.clone(), f.nvars(), terms);
                rooted = true;
            }
        }
    }
    if let Some(dep) = trivial_dependence(&sys) {
        return Ok(dep);
    }

    // leading-monomial exponents of full rank certify independence
    let order = MonomialOrder::graded_lex(sys[0].nvars());
    let lms: Vec<Vec<u32>> = sys
        .iter()
        .map(|f| f.leading_monomial(&order).unwrap().0)
        .collect();
    if exponent_rank(&lms) == sys.len() {
        return Ok(Independence::Independent {
            certificate: "leading-monomial exponents have full rank".into(),
        });
    }

    // a nonvanishing Jacobian minor certifies independence in any
    // characteristic
    if jacobian_minor_nonzero(&sys)? {
        return Ok(Independence::Independent {
            certificate: "nonzero jacobian minor".into(),
        });
    }

    let homogeneous = sys.iter().all(|f| f.is_homogeneous());

    // homogeneous system of parameters: as many polynomials as occurring
    // variables, with a pure power of each among the Groebner leading terms
    if homogeneous {
        let occupied: BTreeSet<usize> =
            sys.iter().flat_map(|f| f.support_vars()).collect();
        if occupied.len() == sys.len() {
            let ord = TermOrder::Simple(order.clone());
            if let Ok(gb) = buchberger(&sys, &ord, limits.groebner) {
                let vars: Vec<usize> = occupied.into_iter().collect();
                if has_pure_power_leads(&gb, &ord, &vars) {
                    return Ok(Independence::Independent {
                        certificate: "homogeneous system of parameters".into(),
                    });
                }
            }
        }
    }

    // bounded search for an annihilating relation, weight by weight
    if homogeneous {
        let weights: Vec<u32> = sys.iter().map(|f| f.total_degree().unwrap()).collect();
        let lcm = weights
            .iter()
            .fold(1u64, |acc, &w| acc.lcm(&(w as u64)));
        let cap = (2 * lcm).min(limits.annihilator_weight_cap as u64) as u32;
        if let Some(dep) = annihilator_search(&sys, &weights, cap)? {
            return Ok(dep);
        }
    }

    // the decision procedure: eliminate the original variables from the
    // ideal (t_i - f_i) and look for relations among the t's
    alg_indep_by_elimination(&sys, limits.groebner)
}

fn trivial_dependence(sys: &[Poly<ResidueField>]) -> Option<Independence> {
    for (i, f) in sys.iter().enumerate() {
        if f.is_zero() {
            return Some(Independence::Dependent {
                certificate: format!("polynomial {i} is zero"),
            });
        }
        if f.total_degree() == Some(0) {
            return Some(Independence::Dependent {
                certificate: format!("polynomial {i} reduced to a constant"),
            });
        }
        for (j, g) in sys.iter().enumerate().take(i) {
            if f == g {
                return Some(Independence::Dependent {
                    certificate: format!("polynomials {j} and {i} coincide"),
                });
            }
        }
    }
    let occupied: BTreeSet<usize> = sys.iter().flat_map(|f| f.support_vars()).collect();
    if occupied.len() < sys.len() {
        return Some(Independence::Dependent {
            certificate: format!(
                "{} polynomials involve only {} variables",
                sys.len(),
                occupied.len()
            ),
        });
    }
    None
}

/// True when some maximal minor of the Jacobian matrix is nonzero.
fn jacobian_minor_nonzero(sys: &[Poly<ResidueField>]) -> Result<bool> {
    let k = sys.len();
    let n = sys[0].nvars();
    if k > n {
        return Ok(false);
    }
    if k == n {
        return Ok(!jacobian_det(sys)?.is_zero());
    }
    // all k-subsets of columns
    let mut cols: Vec<usize> = (0..k).collect();
    loop {
        // restrict each polynomial's derivative to the chosen columns by
        // treating the minor as a jacobian in the surviving variables
        let minor = minor_det(sys, &cols)?;
        if !minor.is_zero() {
            return Ok(true);
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(false);
            }
            i -= 1;
            if cols[i] != i + n - k {
                cols[i] += 1;
                for j in i + 1..k {
                    cols[j] = cols[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn minor_det(
    sys: &[Poly<ResidueField>],
    cols: &[usize],
) -> Result<Poly<ResidueField>> {
    let field = sys[0].field().clone();
    let nvars = sys[0].nvars();
    let k = sys.len();
    let mat: Vec<Vec<Poly<ResidueField>>> = sys
        .iter()
        .map(|f| cols.iter().map(|&c| f.derivative(c)).collect())
        .collect();
    let mut dp: std::collections::HashMap<u64, Poly<ResidueField>> =
        std::collections::HashMap::new();
    dp.insert(
        0,
        Poly::constant(field.clone(), nvars, field.one()),
    );
    for row in &mat {
        let mut next: std::collections::HashMap<u64, Poly<ResidueField>> =
            std::collections::HashMap::new();
        for (mask, acc) in dp {
            for col in 0..k {
                if mask & (1 << col) != 0 {
                    continue;
                }
                if row[col].is_zero() {
                    continue;
                }
                let inversions = (col + 1..k).filter(|&c| mask & (1 << c) != 0).count();
                let mut term = acc.mul(&row[col])?;
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
    Ok(dp
        .remove(&((1u64 << k) - 1))
        .unwrap_or_else(|| Poly::zero(field, nvars)))
}

/// Search for a weighted-homogeneous annihilating relation of weight at most
/// `cap`.  Complete for homogeneous inputs up to that weight.
fn annihilator_search(
    sys: &[Poly<ResidueField>],
    weights: &[u32],
    cap: u32,
) -> Result<Option<Independence>> {
    let field = sys[0].field().clone();
    let nvars = sys[0].nvars();
    // powers cache per generator
    let mut powcache: Vec<Vec<Poly<ResidueField>>> = sys
        .iter()
        .map(|f| {
            vec![
                Poly::constant(field.clone(), nvars, field.one()),
                f.clone(),
            ]
        })
        .collect();
    for w in 1..=cap {
        let tuples = weighted_tuples(weights, w);
        if tuples.len() < 2 {
            continue;
        }
        let mut products: Vec<Poly<ResidueField>> = Vec::with_capacity(tuples.len());
        for t in &tuples {
            let mut prod = Poly::constant(field.clone(), nvars, field.one());
            for (i, &e) in t.iter().enumerate() {
                while powcache[i].len() <= e as usize {
                    let next = powcache[i].last().unwrap().mul(&sys[i])?;
                    powcache[i].push(next);
                }
                if e > 0 {
                    prod = prod.mul(&powcache[i][e as usize])?;
                }
            }
            products.push(prod);
        }
        // kernel of the coefficient matrix = linear relations among products
        let mut cols: Vec<Monomial> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for p in &products {
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
        let mut mat = vec![vec![field.zero(); products.len()]; cols.len()];
        for (j, p) in products.iter().enumerate() {
            for (m, c) in p.terms() {
                mat[col_of[&m.0]][j] = c.clone();
            }
        }
        let kernel = crate::field::kernel_basis(&field, &mat);
        if let Some(v) = kernel.first() {
            let rel: Vec<String> = tuples
                .iter()
                .zip(v)
                .filter(|(_, c)| !field.is_zero(c))
                .map(|(t, c)| format!("{}*T^{t:?}", field.elem_string(c)))
                .collect();
            return Ok(Some(Independence::Dependent {
                certificate: format!(
                    "annihilating relation of weighted degree {w}: {}",
                    rel.join(" + ")
                ),
            }));
        }
    }
    Ok(None)
}

/// Decide independence by Groebner elimination: introduce one tag variable
/// per polynomial and intersect the ideal (t_i - f_i) with the tag block.
pub fn alg_indep_by_elimination(
    polys: &[Poly<ResidueField>],
    limits: GroebnerLimits,
) -> Result<Independence> {
    let field = polys[0].field().clone();
    let n = polys[0].nvars();
    let k = polys.len();
    let total = n + k;
    let gens: Vec<Poly<ResidueField>> = polys
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let embedded_terms = f
                .terms()
                .iter()
                .map(|(m, c)| {
                    let mut exps = vec![0u32; total];
                    exps[..n].copy_from_slice(&m.0);
                    (Monomial(exps), field.neg(c))
                })
                .collect();
            let mut tag = vec![0u32; total];
            tag[n + i] = 1;
            let embedded = Poly::from_terms(field.clone(), total, embedded_terms);
            let t = Poly::monomial(field.clone(), total, tag, field.one());
            t.add(&embedded).expect("same ring")
        })
        .collect();
    let order = TermOrder::Elimination(vec![(0..n).collect(), (n..total).collect()]);
    let gb = buchberger(&gens, &order, limits)?;
    let tags: Vec<usize> = (n..total).collect();
    let relations = supported_only_on(&gb, &tags);
    match relations.first() {
        Some(rel) => Ok(Independence::Dependent {
            certificate: format!(
                "elimination ideal contains {}",
                rel.to_string_with(
                    &(0..total)
                        .map(|i| {
                            if i < n {
                                format!("x{}", i + 1)
                            } else {
                                format!("t{}", i - n + 1)
                            }
                        })
                        .collect::<Vec<_>>()
                )
            ),
        }),
        None => Ok(Independence::Independent {
            certificate: "elimination ideal contains no relation".into(),
        }),
    }
}

// ---------------------------------------------------------------------------
// candidate bad primes
// ---------------------------------------------------------------------------

/// A prime ideal at which the invariant system might degenerate, and why it
/// was kept as a candidate.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub ideal: PrimeIdeal,
    pub reason: String,
}

/// Rational primes worth examining: divisors of the group order together
/// with divisors of the gcd of the coefficient norms of the Jacobian.  Each
/// prime ideal above them is then kept only when the Jacobian actually dies
/// (or cannot be reduced) there.
pub fn candidate_bad_primes(
    group: &MatGroup,
    polys: &[Poly<CycField>],
) -> Result<Vec<Candidate>> {
    let jac = jacobian_det(polys)?;
    if jac.is_zero() {
        return Err(Error::DependentGenerators);
    }
    let conductor = group.field().conductor();
    let mut primes: BTreeSet<u64> = factor_u64(group.order() as u64)
        .into_keys()
        .collect();
    // primes dividing a canonical coefficient denominator make reduction
    // impossible, so their ideals are candidates outright
    for poly in polys.iter().chain(std::iter::once(&jac)) {
        for (_, c) in poly.terms() {
            for p in factor_bigint(&c.denom().abs())? {
                primes.insert(p);
            }
        }
    }
    // the jacobian can only vanish modulo an ideal whose rational prime
    // divides every coefficient norm numerator
    let mut g = BigInt::zero();
    for (_, c) in jac.terms() {
        g = g.gcd(c.norm().numer());
    }
    for p in factor_bigint(&g.abs())? {
        primes.insert(p);
    }
    let mut out = Vec::new();
    for p in primes {
        for ideal in primes_above(conductor, p)? {
            // reduction of the system itself must exist
            let system_reduces = polys
                .iter()
                .all(|f| reduce_poly_mod(f, &ideal).is_ok());
            if !system_reduces {
                out.push(Candidate {
                    ideal,
                    reason: format!("a coefficient denominator is divisible by {p}"),
                });
                continue;
            }
            match reduce_poly_mod(&jac, &ideal) {
                Err(_) => out.push(Candidate {
                    ideal,
                    reason: format!("the jacobian cannot be reduced modulo {p}"),
                }),
                Ok(jbar) => {
                    if jbar.is_zero() {
                        out.push(Candidate {
                            ideal,
                            reason: "the jacobian vanishes".into(),
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Factor a nonnegative BigInt completely, failing loudly when a cofactor
/// exceeds the 64-bit factorization range.
fn factor_bigint(n: &BigInt) -> Result<Vec<u64>> {
    if n.is_zero() || n.is_one() {
        return Ok(Vec::new());
    }
    let mut n = n.clone();
    let mut out = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13] {
        let pb = BigInt::from(p);
        if (&n % &pb).is_zero() {
            out.push(p);
            while (&n % &pb).is_zero() {
                n = &n / &pb;
            }
        }
    }
    match n.to_u64() {
        Some(rest) => {
            out.extend(factor_u64(rest).into_keys());
            out.sort_unstable();
            out.dedup();
            Ok(out)
        }
        None => Err(Error::ResourceLimit(format!(
            "cannot factor {n}: beyond 64-bit range"
        ))),
    }
}

// ---------------------------------------------------------------------------
// the polynomial-ring verdict
// ---------------------------------------------------------------------------

/// Final status for an invariant ring over R (or a localization of R).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    PolynomialRing,
    NotPolynomialRing,
    PolynomialAfterLocalizing,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::PolynomialRing => "POLYNOMIAL_RING",
            Status::NotPolynomialRing => "NOT_POLYNOMIAL_RING",
            Status::PolynomialAfterLocalizing => "POLYNOMIAL_AFTER_LOCALIZING",
        }
    }
}

/// The verdict, with the failing ideals and optional witness explanation.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub status: Status,
    pub bad_primes: Vec<PrimeIdeal>,
    pub witness: Option<String>,
    pub checked_ideals: usize,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "status": self.status.as_str(),
            "bad_primes": self
                .bad_primes
                .iter()
                .map(|i| i.to_json())
                .collect::<Vec<_>>(),
            "witness": self.witness,
            "checked_ideals": self.checked_ideals,
        })
    }
}

/// Options for `polynomial_ring_test`.
#[derive(Clone, Debug, Default)]
pub struct TestOptions {
    /// Rational primes already inverted in the base ring.
    pub inverted: Vec<u64>,
    /// A monomial order under which unit leading coefficients plus
    /// independent leading monomials certify the ring directly.
    pub direct_order: Option<MonomialOrder>,
    /// An invariant expected to expose a genuine failure: when the per-ideal
    /// checks fail and this invariant is not integrally expressible in the
    /// candidates, the verdict hardens to NOT_POLYNOMIAL_RING.
    pub witness: Option<Poly<crate::field::CycField>>,
    pub indep_limits: IndepLimits,
}

/// True when c is a unit of Z[zeta_n] localized at the given primes.
fn is_unit_localized(c: &CycNum, inverted: &[u64]) -> bool {
    if c.is_zero() {
        return false;
    }
    let norm: BigRational = c.norm();
    let mut num = norm.numer().abs();
    let mut den = norm.denom().abs();
    for &p in inverted {
        let pb = BigInt::from(p);
        while (&num % &pb).is_zero() {
            num = &num / &pb;
        }
        while (&den % &pb).is_zero() {
            den = &den / &pb;
        }
    }
    num.is_one() && den.is_one()
}

/// Decide whether the R-algebra of invariants generated by `polys` is a
/// polynomial ring over R = Z[zeta_n] (with the listed primes inverted).
///
/// Characteristic-zero preconditions (invariance, independence, degree
/// product) are enforced first and their failure is an error, not a verdict.
pub fn polynomial_ring_test(
    group: &MatGroup,
    polys: &[Poly<crate::field::CycField>],
    opts: &TestOptions,
) -> Result<Verdict> {
    kemper_check(group, polys)?;
    let mut notes = Vec::new();

    // direct certificate: unit leading coefficients and independent leading
    // monomials under a supplied order already force a polynomial ring
    if let Some(order) = &opts.direct_order {
        let unit_lcs = polys.iter().all(|f| {
            f.leading_coeff(order)
                .map_or(false, |lc| is_unit_localized(&lc, &opts.inverted))
        });
        let lms: Vec<Vec<u32>> = polys
            .iter()
            .filter_map(|f| f.leading_monomial(order).map(|m| m.0))
            .collect();
        if unit_lcs && lms.len() == polys.len() && exponent_rank(&lms) == polys.len() {
            notes.push(
                "unit leading coefficients with independent leading monomials".into(),
            );
            return Ok(Verdict {
                status: Status::PolynomialRing,
                bad_primes: Vec::new(),
                witness: None,
                checked_ideals: 0,
                notes,
            });
        }
        notes.push("direct leading-term certificate did not apply".into());
    }

    let candidates = candidate_bad_primes(group, polys)?;
    let candidates: Vec<Candidate> = candidates
        .into_iter()
        .filter(|c| !opts.inverted.contains(&c.ideal.p()))
        .collect();
    let mut failures: Vec<PrimeIdeal> = Vec::new();
    let checked = candidates.len();
    for cand in candidates {
        let reduced: Result<Vec<Poly<ResidueField>>> = polys
            .iter()
            .map(|f| reduce_poly_mod(f, &cand.ideal))
            .collect();
        match reduced {
            Err(_) => {
                notes.push(format!(
                    "p={}: system cannot be reduced ({})",
                    cand.ideal.p(),
                    cand.reason
                ));
                failures.push(cand.ideal);
            }
            Ok(sys) => match alg_indep_mod(&sys, &opts.indep_limits)? {
                Independence::Independent { certificate } => {
                    notes.push(format!(
                        "p={}: reductions stay independent ({certificate})",
                        cand.ideal.p()
                    ));
                }
                Independence::Dependent { certificate } => {
                    notes.push(format!(
                        "p={}: reductions become dependent ({certificate})",
                        cand.ideal.p()
                    ));
                    failures.push(cand.ideal);
                }
            },
        }
    }
    if failures.is_empty() {
        return Ok(Verdict {
            status: Status::PolynomialRing,
            bad_primes: Vec::new(),
            witness: None,
            checked_ideals: checked,
            notes,
        });
    }
    if let Some(w) = &opts.witness {
        if !crate::invariants::is_invariant(group, w)? {
            return Err(Error::NotInvariant(format!("witness {w}")));
        }
        let failing_primes: BTreeSet<u64> = failures.iter().map(|i| i.p()).collect();
        match express_in_subalgebra(w, polys)? {
            None => {
                return Ok(Verdict {
                    status: Status::NotPolynomialRing,
                    bad_primes: failures,
                    witness: Some(format!(
                        "invariant {w} is not generated by the candidates"
                    )),
                    checked_ideals: checked,
                    notes,
                });
            }
            Some(rep) => {
                let offending: Vec<String> = rep
                    .iter()
                    .filter(|(_, c)| {
                        !c.is_integral()
                            && failing_primes.iter().any(|p| {
                                (c.denom() % BigInt::from(*p)).is_zero()
                            })
                    })
                    .map(|(e, c)| format!("coefficient {c} at exponent {e:?}"))
                    .collect();
                if offending.is_empty() {
                    return Err(Error::Precondition(
                        "witness is integrally expressible; it does not witness a failure"
                            .into(),
                    ));
                }
                return Ok(Verdict {
                    status: Status::NotPolynomialRing,
                    bad_primes: failures,
                    witness: Some(format!(
                        "expressing the invariant {w} requires {}",
                        offending.join(", ")
                    )),
                    checked_ideals: checked,
                    notes,
                });
            }
        }
    }
    Ok(Verdict {
        status: Status::PolynomialAfterLocalizing,
        bad_primes: failures,
        witness: None,
        checked_ideals: checked,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{CoeffField, CycField};
    use crate::matgroup::Mat;

    fn rf(p: u64) -> ResidueField {
        ResidueField::new(primes_above(4, p).unwrap().remove(0))
    }

    fn limits() -> IndepLimits {
        IndepLimits::default()
    }

    #[test]
    fn trivial_dependence_rungs() {
        let f = rf(3);
        let x = Poly::var(f.clone(), 2, 0);
        let y = Poly::var(f.clone(), 2, 1);
        // zero polynomial
        let z = Poly::zero(f.clone(), 2);
        assert!(!alg_indep_mod(&[x.clone(), z], &limits())
            .unwrap()
            .is_independent());
        // duplicates
        assert!(!alg_indep_mod(&[x.clone(), x.clone()], &limits())
            .unwrap()
            .is_independent());
        // constants
        let c = Poly::constant(f.clone(), 2, f.from_u64(2));
        assert!(!alg_indep_mod(&[c, y.clone()], &limits())
            .unwrap()
            .is_independent());
        // three polynomials in two variables
        assert!(!alg_indep_mod(
            &[x.clone(), y.clone(), x.mul(&y).unwrap()],
            &limits()
        )
        .unwrap()
        .is_independent());
        // fewer occurring variables than polynomials
        assert!(!alg_indep_mod(&[x.clone(), x.pow(2)], &limits())
            .unwrap()
            .is_independent());
    }

    #[test]
    fn independence_fast_paths() {
        let f = rf(5);
        let x = Poly::var(f.clone(), 2, 0);
        let y = Poly::var(f.clone(), 2, 1);
        // leading monomials independent
        let v = alg_indep_mod(&[x.clone(), y.clone()], &limits()).unwrap();
        assert!(v.is_independent());
        assert!(v.certificate().contains("leading-monomial"));
        // x+y, xy: LMs x and xy are independent as well
        let e1 = x.add(&y).unwrap();
        let e2 = x.mul(&y).unwrap();
        assert!(alg_indep_mod(&[e1, e2], &limits()).unwrap().is_independent());
    }

    #[test]
    fn frobenius_dependence_is_found() {
        // over F_2: x+y and x^2+y^2 are dependent (t1^2 = t2)
        let f = rf(2);
        let x = Poly::var(f.clone(), 2, 0);
        let y = Poly::var(f.clone(), 2, 1);
        let s = x.add(&y).unwrap();
        let q = x.pow(2).add(&y.pow(2)).unwrap();
        let v = alg_indep_mod(&[s, q], &limits()).unwrap();
        assert!(!v.is_independent());
        // over F_3 the same pair is independent (jacobian -2x+2y)
        let f3 = rf(3);
        let x = Poly::var(f3.clone(), 2, 0);
        let y = Poly::var(f3.clone(), 2, 1);
        let s = x.add(&y).unwrap();
        let q = x.pow(2).add(&y.pow(2)).unwrap();
        assert!(alg_indep_mod(&[s, q], &limits()).unwrap().is_independent());
    }

    #[test]
    fn pth_root_preprocessing() {
        // (x+y)^3 and xy over F_3: the first is a perfect cube
        let f = rf(3);
        let x = Poly::var(f.clone(), 2, 0);
        let y = Poly::var(f.clone(), 2, 1);
        let cube = x.add(&y).unwrap().pow(3);
        let prod = x.mul(&y).unwrap();
        let v = alg_indep_mod(&[cube, prod], &limits()).unwrap();
        assert!(v.is_independent());
        // (xy)^2 and x^2 y^2 over F_2 collapse to the same root
        let f2 = rf(2);
        let x = Poly::var(f2.clone(), 2, 0);
        let y = Poly::var(f2.clone(), 2, 1);
        let a = x.mul(&y).unwrap().pow(2);
        let b = x.pow(2).mul(&y.pow(2)).unwrap();
        assert!(!alg_indep_mod(&[a, b], &limits()).unwrap().is_independent());
    }

    #[test]
    fn elimination_agrees_with_the_ladder() {
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for p in [2u64, 3] {
            let f = rf(p);
            for _ in 0..25 {
                let mk = |rng: &mut ChaCha8Rng| {
                    let mut terms = Vec::new();
                    for _ in 0..3 {
                        terms.push((
                            Monomial(vec![
                                rng.gen_range(0..3u32),
                                rng.gen_range(0..3u32),
                            ]),
                            f.from_u64(rng.gen_range(0..p)),
                        ));
                    }
                    Poly::from_terms(f.clone(), 2, terms)
                };
                let a = mk(&mut rng);
                let b = mk(&mut rng);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let ladder = alg_indep_mod(&[a.clone(), b.clone()], &limits()).unwrap();
                let elim =
                    alg_indep_by_elimination(&[a, b], GroebnerLimits::default())
                        .unwrap();
                assert_eq!(ladder.is_independent(), elim.is_independent());
            }
        }
    }

    fn s2_group() -> MatGroup {
        let f = CycField::new(4);
        let swap = Mat::from_int_rows(f, &[vec![0, 1], vec![1, 0]]);
        MatGroup::generate(vec![swap], 10).unwrap()
    }

    fn s2_invariants() -> (Poly<CycField>, Poly<CycField>) {
        let f = CycField::new(4);
        let x = Poly::var(f, 2, 0);
        let y = Poly::var(f, 2, 1);
        (x.add(&y).unwrap(), x.mul(&y).unwrap())
    }

    #[test]
    fn symmetric_invariants_form_a_polynomial_ring() {
        let g = s2_group();
        let (e1, e2) = s2_invariants();
        let verdict =
            polynomial_ring_test(&g, &[e1, e2], &TestOptions::default()).unwrap();
        assert_eq!(verdict.status, Status::PolynomialRing);
        assert!(verdict.bad_primes.is_empty());
    }

    #[test]
    fn direct_leading_term_certificate() {
        let g = s2_group();
        let (e1, e2) = s2_invariants();
        let opts = TestOptions {
            direct_order: Some(MonomialOrder::lex(2)),
            ..Default::default()
        };
        let verdict = polynomial_ring_test(&g, &[e1, e2], &opts).unwrap();
        assert_eq!(verdict.status, Status::PolynomialRing);
        assert_eq!(verdict.checked_ideals, 0);
    }

    #[test]
    fn scaled_generator_needs_localization() {
        // x+y and 2xy generate the full invariant ring only once 2 is
        // inverted; mod 2 the second generator dies
        let g = s2_group();
        let (e1, e2) = s2_invariants();
        let f = *e1.field();
        let scaled = e2.scale(&f.from_int(2));
        let verdict = polynomial_ring_test(
            &g,
            &[e1.clone(), scaled.clone()],
            &TestOptions::default(),
        )
        .unwrap();
        assert_eq!(verdict.status, Status::PolynomialAfterLocalizing);
        assert_eq!(verdict.bad_primes.len(), 1);
        assert_eq!(verdict.bad_primes[0].p(), 2);
        // witness xy hardens the verdict
        let opts = TestOptions {
            witness: Some(e2.clone()),
            ..Default::default()
        };
        let verdict =
            polynomial_ring_test(&g, &[e1.clone(), scaled.clone()], &opts).unwrap();
        assert_eq!(verdict.status, Status::NotPolynomialRing);
        assert!(verdict.witness.unwrap().contains("1/2"));
        // inverting 2 heals it: verdicts are monotone in the inverted set
        let opts = TestOptions {
            inverted: vec![2],
            ..Default::default()
        };
        let verdict = polynomial_ring_test(&g, &[e1, scaled], &opts).unwrap();
        assert_eq!(verdict.status, Status::PolynomialRing);
    }

    #[test]
    fn char_zero_preconditions_are_errors() {
        let g = s2_group();
        let (e1, e2) = s2_invariants();
        let f = *e1.field();
        let x = Poly::var(f, 2, 0);
        // non-invariant
        assert!(matches!(
            polynomial_ring_test(&g, &[e1.clone(), x], &TestOptions::default()),
            Err(Error::NotInvariant(_))
        ));
        // dependent
        assert!(matches!(
            polynomial_ring_test(
                &g,
                &[e1.clone(), e1.pow(2)],
                &TestOptions::default()
            ),
            Err(Error::DependentGenerators)
        ));
        // wrong degree product
        assert!(matches!(
            polynomial_ring_test(
                &g,
                &[e1.clone(), e2.pow(2)],
                &TestOptions::default()
            ),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn candidate_primes_are_filtered() {
        let g = s2_group();
        let (e1, e2) = s2_invariants();
        // jacobian of (e1, e2) is y - x with unit content: only group-order
        // primes are examined and the jacobian survives mod 2
        let c = candidate_bad_primes(&g, &[e1.clone(), e2.clone()]).unwrap();
        assert!(c.is_empty());
        // scaling by 6 puts 2 and 3 into the jacobian content
        let f = *e1.field();
        let c = candidate_bad_primes(&g, &[e1, e2.scale(&f.from_int(6))]).unwrap();
        let ps: BTreeSet<u64> = c.iter().map(|c| c.ideal.p()).collect();
        assert!(ps.contains(&2) && ps.contains(&3));
    }

    #[test]
    fn verdict_json_shape() {
        let g = s2_group();
        let (e1, e2) = s2_invariants();
        let f = *e1.field();
        let verdict = polynomial_ring_test(
            &g,
            &[e1, e2.scale(&f.from_int(2))],
            &TestOptions::default(),
        )
        .unwrap();
        let v = verdict.to_json();
        assert_eq!(v["status"], "POLYNOMIAL_AFTER_LOCALIZING");
        assert_eq!(v["bad_primes"][0]["p"], 2);
        assert!(v["checked_ideals"].as_u64().unwrap() >= 1);
    }
}
