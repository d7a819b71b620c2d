//! Groebner bases via Buchberger's algorithm, with elimination orders.
//!
//! This is deliberately plain: the inputs that reach it are small (two or
//! three generators in a handful of variables over a small finite field or a
//! cyclotomic field), and everything upstream tries cheaper certificates
//! first.  Resource limits guard against runaway pair explosions.

use std::cmp::Ordering;

use crate::field::CoeffField;
use crate::polyring::{Monomial, MonomialOrder, Poly};
use crate::{Error, Result};

/// A term order for Groebner computations: either a plain monomial order or
/// a two-block elimination order (every monomial containing a variable of
/// the first block exceeds every monomial in later-block variables only;
/// ties fall through graded-lex within each block).
#[derive(Clone, Debug)]
pub enum TermOrder {
    Simple(MonomialOrder),
    /// Blocks of variable indices, most significant first.
    Elimination(Vec<Vec<usize>>),
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Simple(ord) => ord.cmp(a, b),
            TermOrder::Elimination(blocks) => {
                for block in blocks {
                    let da: u32 = block.iter().map(|&v| a.0[v]).sum();
                    let db: u32 = block.iter().map(|&v| b.0[v]).sum();
                    match da.cmp(&db) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                    for &v in block {
                        match a.0[v].cmp(&b.0[v]) {
                            Ordering::Equal => {}
                            ord => return ord,
                        }
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Leading (monomial, coefficient) under the given term order.
pub fn leading<F: CoeffField>(
    f: &Poly<F>,
    order: &TermOrder,
) -> Option<(Monomial, F::Elem)> {
    f.terms()
        .iter()
        .max_by(|a, b| order.cmp(&a.0, &b.0))
        .map(|(m, c)| (m.clone(), c.clone()))
}

fn mul_term<F: CoeffField>(f: &Poly<F>, m: &Monomial, c: &F::Elem) -> Poly<F> {
    let field = f.field().clone();
    let terms = f
        .terms()
        .iter()
        .map(|(mm, cc)| (mm.mul(m), field.mul(cc, c)))
        .collect();
    Poly::from_terms(field, f.nvars(), terms)
}

/// Remainder of f on division by the basis, under the given order.
pub fn normal_form<F: CoeffField>(
    f: &Poly<F>,
    basis: &[Poly<F>],
    order: &TermOrder,
) -> Poly<F> {
    let field = f.field().clone();
    let leads: Vec<(Monomial, F::Elem)> = basis
        .iter()
        .map(|g| leading(g, order).expect("basis elements are nonzero"))
        .collect();
    let mut work = f.clone();
    let mut remainder = Poly::zero(field.clone(), f.nvars());
    while let Some((lm, lc)) = leading(&work, order) {
        match leads
            .iter()
            .enumerate()
            .find(|(_, (gm, _))| gm.divides(&lm))
        {
            Some((i, (gm, gc))) => {
                let q = gm.div_into(&lm).expect("divides");
                let scale = field
                    .div(&lc, gc)
                    .expect("leading coefficients are invertible");
                let sub = mul_term(&basis[i], &q, &scale);
                work = work.sub(&sub).expect("same ring");
            }
            None => {
                let t = Poly::monomial(field.clone(), f.nvars(), lm.0.clone(), lc);
                remainder = remainder.add(&t).expect("same ring");
                work = work.sub(&t).expect("same ring");
            }
        }
    }
    remainder
}

/// Caps for Buchberger's algorithm.
#[derive(Clone, Copy, Debug)]
pub struct GroebnerLimits {
    pub max_basis: usize,
    pub max_pairs: usize,
}

impl Default for GroebnerLimits {
    fn default() -> Self {
        GroebnerLimits {
            max_basis: 200,
            max_pairs: 20_000,
        }
    }
}

/// Buchberger's algorithm with the coprime-leading-monomial criterion.
/// Returns a reduced Groebner basis with unit leading coefficients.
pub fn buchberger<F: CoeffField>(
    gens: &[Poly<F>],
    order: &TermOrder,
    limits: GroebnerLimits,
) -> Result<Vec<Poly<F>>> {
    let nonzero: Vec<Poly<F>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(Vec::new());
    }
    let field = nonzero[0].field().clone();
    let mut basis = nonzero;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    let mut processed = 0usize;
    while let Some((i, j)) = pairs.pop() {
        processed += 1;
        if processed > limits.max_pairs {
            return Err(Error::ResourceLimit(format!(
                "groebner pair budget of {} exhausted",
                limits.max_pairs
            )));
        }
        let (lmi, lci) = leading(&basis[i], order).expect("nonzero");
        let (lmj, lcj) = leading(&basis[j], order).expect("nonzero");
        // product criterion: coprime leading monomials reduce to zero
        if lmi.0.iter().zip(&lmj.0).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let l = lmi.lcm(&lmj);
        let qi = lmi.div_into(&l).expect("lcm");
        let qj = lmj.div_into(&l).expect("lcm");
        let si = mul_term(&basis[i], &qi, &field.inv(&lci)?);
        let sj = mul_term(&basis[j], &qj, &field.inv(&lcj)?);
        let s = si.sub(&sj).expect("same ring");
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            if basis.len() >= limits.max_basis {
                return Err(Error::ResourceLimit(format!(
                    "groebner basis budget of {} exhausted",
                    limits.max_basis
                )));
            }
            let k = basis.len();
            for idx in 0..k {
                pairs.push((idx, k));
            }
            basis.push(r);
        }
    }
    // interreduce and normalize leading coefficients
    let mut reduced: Vec<Poly<F>> = Vec::new();
    for i in 0..basis.len() {
        let (lmi, _) = leading(&basis[i], order).expect("nonzero");
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, g)| {
                if i == j {
                    return false;
                }
                let (lmj, _) = leading(g, order).expect("nonzero");
                lmj.divides(&lmi) && (lmj != lmi || j < i)
            });
        if redundant {
            continue;
        }
        reduced.push(basis[i].clone());
    }
    let snapshot = reduced.clone();
    let mut out = Vec::new();
    for (i, g) in snapshot.iter().enumerate() {
        let others: Vec<Poly<F>> = snapshot
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let mut r = if others.is_empty() {
            g.clone()
        } else {
            normal_form(g, &others, order)
        };
        if r.is_zero() {
            continue;
        }
        let (_, lc) = leading(&r, order).expect("nonzero");
        r = r.scale(&field.inv(&lc)?);
        out.push(r);
    }
    out.sort_by(|a, b| {
        let (ma, _) = leading(a, order).expect("nonzero");
        let (mb, _) = leading(b, order).expect("nonzero");
        order.cmp(&ma, &mb)
    });
    Ok(out)
}

/// Members of the basis supported entirely on the given variable set.
pub fn supported_only_on<F: CoeffField>(
    basis: &[Poly<F>],
    vars: &[usize],
) -> Vec<Poly<F>> {
    let keep: std::collections::HashSet<usize> = vars.iter().copied().collect();
    basis
        .iter()
        .filter(|g| g.support_vars().iter().all(|v| keep.contains(v)))
        .cloned()
        .collect()
}

/// True when for every variable in `vars` some leading monomial of the basis
/// is a pure power of it — the standard zero-dimensionality test restricted
/// to those variables.
pub fn has_pure_power_leads<F: CoeffField>(
    basis: &[Poly<F>],
    order: &TermOrder,
    vars: &[usize],
) -> bool {
    vars.iter().all(|&v| {
        basis.iter().any(|g| {
            let (lm, _) = leading(g, order).expect("nonzero");
            lm.0[v] > 0 && lm.0.iter().enumerate().all(|(i, &e)| i == v || e == 0)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CycField;

    fn gb_q(
        gens: &[Poly<CycField>],
        order: &TermOrder,
    ) -> Vec<Poly<CycField>> {
        buchberger(gens, order, GroebnerLimits::default()).unwrap()
    }

    #[test]
    fn division_leaves_irreducible_remainder() {
        let f = CycField::new(4);
        let x = Poly::var(f, 2, 0);
        let y = Poly::var(f, 2, 1);
        let order = TermOrder::Simple(MonomialOrder::graded_lex(2));
        // divide x^2 y + x y^2 + y^2 by {xy - 1, y^2 - 1}
        let dividend = x
            .pow(2)
            .mul(&y)
            .unwrap()
            .add(&x.mul(&y.pow(2)).unwrap())
            .unwrap()
            .add(&y.pow(2))
            .unwrap();
        let d1 = x.mul(&y).unwrap().sub(&Poly::constant(f, 2, f.one())).unwrap();
        let d2 = y.pow(2).sub(&Poly::constant(f, 2, f.one())).unwrap();
        let r = normal_form(&dividend, &[d1.clone(), d2.clone()], &order);
        // classical result: remainder x + y + 1
        let expect = x
            .add(&y)
            .unwrap()
            .add(&Poly::constant(f, 2, f.one()))
            .unwrap();
        assert_eq!(r, expect);
    }

    #[test]
    fn groebner_basis_closes_s_polynomials() {
        let f = CycField::new(4);
        let x = Poly::var(f, 3, 0);
        let y = Poly::var(f, 3, 1);
        let z = Poly::var(f, 3, 2);
        let order = TermOrder::Simple(MonomialOrder::graded_lex(3));
        let gens = vec![
            x.pow(2).sub(&y).unwrap(),
            x.pow(3).sub(&z).unwrap(),
        ];
        let gb = gb_q(&gens, &order);
        // every S-polynomial of the basis reduces to zero
        for i in 0..gb.len() {
            for j in 0..i {
                let (lmi, _) = leading(&gb[i], &order).unwrap();
                let (lmj, _) = leading(&gb[j], &order).unwrap();
                let l = lmi.lcm(&lmj);
                let si = mul_term(&gb[i], &lmi.div_into(&l).unwrap(), &f.one());
                let sj = mul_term(&gb[j], &lmj.div_into(&l).unwrap(), &f.one());
                let s = si.sub(&sj).unwrap();
                assert!(normal_form(&s, &gb, &order).is_zero());
            }
        }
        // the original generators reduce to zero
        for g in &gens {
            assert!(normal_form(g, &gb, &order).is_zero());
        }
    }

    #[test]
    fn elimination_finds_the_relation_between_powers() {
        // t1 = x^2, t2 = x^3 satisfy t1^3 = t2^2
        let f = CycField::new(4);
        let nv = 3; // x, t1, t2
        let x = Poly::var(f, nv, 0);
        let t1 = Poly::var(f, nv, 1);
        let t2 = Poly::var(f, nv, 2);
        let order = TermOrder::Elimination(vec![vec![0], vec![1, 2]]);
        let gens = vec![
            t1.sub(&x.pow(2)).unwrap(),
            t2.sub(&x.pow(3)).unwrap(),
        ];
        let gb = buchberger(&gens, &order, GroebnerLimits::default()).unwrap();
        let rel = supported_only_on(&gb, &[1, 2]);
        assert_eq!(rel.len(), 1);
        let expect = t1.pow(3).sub(&t2.pow(2)).unwrap();
        // equal up to the unit leading coefficient normalization
        let (_, lc) = leading(&expect, &order).unwrap();
        let expect = expect.scale(&f.inv(&lc).unwrap());
        assert_eq!(rel[0], expect);
    }

    #[test]
    fn elimination_sees_independence() {
        let f = CycField::new(4);
        let nv = 4; // x, y, t1, t2
        let x = Poly::var(f, nv, 0);
        let y = Poly::var(f, nv, 1);
        let t1 = Poly::var(f, nv, 2);
        let t2 = Poly::var(f, nv, 3);
        let order = TermOrder::Elimination(vec![vec![0, 1], vec![2, 3]]);
        // x + y and x y are independent
        let gens = vec![
            t1.sub(&x.add(&y).unwrap()).unwrap(),
            t2.sub(&x.mul(&y).unwrap()).unwrap(),
        ];
        let gb = buchberger(&gens, &order, GroebnerLimits::default()).unwrap();
        assert!(supported_only_on(&gb, &[2, 3]).is_empty());
    }

    #[test]
    fn frobenius_relation_over_f2() {
        use crate::cyclo::{primes_above, ResidueField};
        // over F_2, x+y and x^2+y^2 are dependent: t2 = t1^2
        let ideal = primes_above(4, 2).unwrap().remove(0);
        let rf = ResidueField::new(ideal);
        let nv = 4;
        let x = Poly::var(rf.clone(), nv, 0);
        let y = Poly::var(rf.clone(), nv, 1);
        let t1 = Poly::var(rf.clone(), nv, 2);
        let t2 = Poly::var(rf.clone(), nv, 3);
        let order = TermOrder::Elimination(vec![vec![0, 1], vec![2, 3]]);
        let gens = vec![
            t1.sub(&x.add(&y).unwrap()).unwrap(),
            t2.sub(&x.pow(2).add(&y.pow(2)).unwrap()).unwrap(),
        ];
        let gb = buchberger(&gens, &order, GroebnerLimits::default()).unwrap();
        let rel = supported_only_on(&gb, &[2, 3]);
        assert_eq!(rel.len(), 1);
        let expect = t1.pow(2).add(&t2).unwrap(); // -1 = 1 mod 2
        assert_eq!(rel[0], expect);
    }

    #[test]
    fn pure_power_leads_detect_zero_dimensionality() {
        let f = CycField::new(4);
        let x = Poly::var(f, 2, 0);
        let y = Poly::var(f, 2, 1);
        let order = TermOrder::Simple(MonomialOrder::graded_lex(2));
        // {x^2 + y^2, xy}: radical contains x and y, GB has pure powers
        let gb = gb_q(
            &[x.pow(2).add(&y.pow(2)).unwrap(), x.mul(&y).unwrap()],
            &order,
        );
        assert!(has_pure_power_leads(&gb, &order, &[0, 1]));
        // {xy}: not zero-dimensional
        let gb2 = gb_q(&[x.mul(&y).unwrap()], &order);
        assert!(!has_pure_power_leads(&gb2, &order, &[0, 1]));
    }

    #[test]
    fn budget_is_enforced() {
        let f = CycField::new(4);
        let x = Poly::var(f, 2, 0);
        let y = Poly::var(f, 2, 1);
        let order = TermOrder::Simple(MonomialOrder::graded_lex(2));
        let gens = vec![
            x.pow(3).sub(&y).unwrap(),
            y.pow(3).sub(&x).unwrap(),
            x.pow(2).mul(&y.pow(2)).unwrap().sub(&x.mul(&y).unwrap()).unwrap(),
        ];
        let tight = GroebnerLimits {
            max_basis: 2,
            max_pairs: 1,
        };
        assert!(matches!(
            buchberger(&gens, &order, tight),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn elimination_order_ranks_blocks_first() {
        let order = TermOrder::Elimination(vec![vec![0], vec![1]]);
        // x beats any power of t
        let a = Monomial(vec![1, 0]);
        let b = Monomial(vec![0, 9]);
        assert_eq!(order.cmp(&a, &b), Ordering::Greater);
        let ga = Monomial(vec![2, 1]);
        let gb = Monomial(vec![2, 3]);
        assert_eq!(order.cmp(&ga, &gb), Ordering::Less);
    }
}
