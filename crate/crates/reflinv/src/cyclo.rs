//! Exact arithmetic in cyclotomic fields Q(zeta_n) and their residue fields.
//!
//! Elements are stored as integer coordinate vectors with respect to the
//! power basis 1, zeta, ..., zeta^(phi(n)-1) together with a positive common
//! denominator, always in lowest terms.  The module also computes norms (as
//! resultants), splits rational primes into prime ideals of Z[zeta_n] by
//! factoring the cyclotomic polynomial modulo p, and reduces elements into
//! the finite residue fields F_p[x]/(g).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num::bigint::{BigInt, BigUint, Sign};
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

// ---------------------------------------------------------------------------
// small number-theory helpers
// ---------------------------------------------------------------------------

/// Euler totient of n.
pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// All positive divisors of n, ascending.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod_u64(acc, b, m);
        }
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64, seed: u64) -> u64 {
    // Brent's variant; n must be odd composite.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let c = rng.gen_range(1..n);
        let f = |x: u64| (mulmod_u64(x, x, n) + c) % n;
        let (mut x, mut d) = (rng.gen_range(0..n), 1u64);
        let mut y = x;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = num::integer::gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
}

/// Full factorization of a u64 into prime -> multiplicity.
pub fn factor_u64(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    for p in [2u64, 3, 5] {
        while n % p == 0 {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
    }
    let mut d = 7u64;
    let inc = [4u64, 2, 4, 2, 4, 6, 2, 6];
    let mut i = 0;
    while d * d <= n && d < 1_000_000 {
        while n % d == 0 {
            *out.entry(d).or_insert(0) += 1;
            n /= d;
        }
        d += inc[i];
        i = (i + 1) % 8;
    }
    // remaining cofactor: prime, or composite handled by rho
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            *out.entry(m).or_insert(0) += 1;
        } else {
            let d = pollard_rho(m, m ^ 0x9e3779b97f4a7c15);
            stack.push(d);
            stack.push(m / d);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// dense integer polynomials (little-endian coefficient vectors)
// ---------------------------------------------------------------------------

fn zp_trim(v: &mut Vec<BigInt>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn zp_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    zp_trim(&mut out);
    out
}

/// Remainder of a modulo the monic polynomial m.
fn zp_rem_monic(mut a: Vec<BigInt>, m: &[BigInt]) -> Vec<BigInt> {
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let shift = a.len() - dm;
        for k in 0..dm {
            let t = &m[k] * &lead;
            a[shift + k] -= t;
        }
    }
    zp_trim(&mut a);
    a
}

/// Exact quotient a / b where the division is known to be exact and b is monic.
fn zp_exact_div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = a.to_vec();
    zp_trim(&mut rem);
    let db = b.len() - 1;
    if rem.is_empty() {
        return Vec::new();
    }
    let dq = rem.len() - 1 - db;
    let mut quot = vec![BigInt::zero(); dq + 1];
    for qi in (0..=dq).rev() {
        let c = rem[qi + db].clone();
        if !c.is_zero() {
            quot[qi] = c.clone();
            for k in 0..=db {
                let t = &b[k] * &c;
                rem[qi + k] -= t;
            }
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// Coefficients of the n-th cyclotomic polynomial (little-endian, monic).
pub fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let result = if n == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // (x^n - 1) divided by the product of Phi_d over proper divisors d.
        let mut num = vec![BigInt::zero(); n as usize + 1];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::from(1);
        let mut den = vec![BigInt::one()];
        for d in divisors(n) {
            if d < n {
                den = zp_mul(&den, &cyclotomic_poly(d));
            }
        }
        zp_exact_div_monic(&num, &den)
    };
    cache.lock().unwrap().insert(n, result.clone());
    result
}

/// Resultant of f and g via fraction-free Gaussian elimination (Bareiss)
/// of the Sylvester matrix.  Exact over the integers.
pub fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let mut fv = f.to_vec();
    let mut gv = g.to_vec();
    zp_trim(&mut fv);
    zp_trim(&mut gv);
    if fv.is_empty() || gv.is_empty() {
        return BigInt::zero();
    }
    let m = fv.len() - 1;
    let k = gv.len() - 1;
    if m == 0 && k == 0 {
        return BigInt::one();
    }
    let s = m + k;
    let mut mat = vec![vec![BigInt::zero(); s]; s];
    // k rows of f, m rows of g, coefficients in descending degree
    for r in 0..k {
        for (idx, c) in fv.iter().rev().enumerate() {
            mat[r][r + idx] = c.clone();
        }
    }
    for r in 0..m {
        for (idx, c) in gv.iter().rev().enumerate() {
            mat[k + r][r + idx] = c.clone();
        }
    }
    bareiss_det(mat)
}

fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

// ---------------------------------------------------------------------------
// CycNum: elements of Q(zeta_n)
// ---------------------------------------------------------------------------

/// An element of Q(zeta_n), in lowest terms over the power basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    conductor: u32,
    coords: Vec<BigInt>,
    denom: BigInt,
}

impl CycNum {
    /// Build an element from raw power-basis coordinates (any length; the
    /// vector is reduced modulo Phi_n) over the given denominator.
    pub fn new(conductor: u32, coords: Vec<BigInt>, denom: BigInt) -> Result<CycNum> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let phi = cyclotomic_poly(conductor);
        let mut c = zp_rem_monic(coords, &phi);
        c.resize(phi.len() - 1, BigInt::zero());
        let mut out = CycNum {
            conductor,
            coords: c,
            denom,
        };
        out.canonicalize();
        Ok(out)
    }

    fn canonicalize(&mut self) {
        if self.denom.is_negative() {
            self.denom = -self.denom.clone();
            for c in &mut self.coords {
                *c = -c.clone();
            }
        }
        let mut g = self.denom.clone();
        for c in &self.coords {
            g = g.gcd(c);
            if g.is_one() {
                return;
            }
        }
        if !g.is_one() && !g.is_zero() {
            self.denom = &self.denom / &g;
            for c in &mut self.coords {
                *c = &*c / &g;
            }
        }
    }

    pub fn zero(conductor: u32) -> CycNum {
        CycNum {
            conductor,
            coords: vec![BigInt::zero(); euler_phi(conductor)],
            denom: BigInt::one(),
        }
    }

    pub fn one(conductor: u32) -> CycNum {
        Self::from_int(conductor, 1)
    }

    pub fn from_int(conductor: u32, k: i64) -> CycNum {
        Self::from_bigint(conductor, BigInt::from(k))
    }

    pub fn from_bigint(conductor: u32, k: BigInt) -> CycNum {
        let mut coords = vec![BigInt::zero(); euler_phi(conductor)];
        coords[0] = k;
        CycNum {
            conductor,
            coords,
            denom: BigInt::one(),
        }
    }

    pub fn from_ratio(conductor: u32, num: i64, den: i64) -> Result<CycNum> {
        Self::new(
            conductor,
            vec![BigInt::from(num)],
            BigInt::from(den),
        )
    }

    /// zeta_n^k (k may be negative).
    pub fn root_of_unity(conductor: u32, k: i64) -> CycNum {
        let n = conductor as i64;
        let k = k.rem_euclid(n) as usize;
        let mut coords = vec![BigInt::zero(); k + 1];
        coords[k] = BigInt::one();
        CycNum::new(conductor, coords, BigInt::one()).unwrap()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.denom.is_one()
            && self.coords[0].is_one()
            && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// True when the element lies in Z[zeta_n].
    pub fn is_integral(&self) -> bool {
        self.denom.is_one()
    }

    /// Some(q) when the element is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(BigRational::new(self.coords[0].clone(), self.denom.clone()))
        } else {
            None
        }
    }

    fn check_same(&self, other: &CycNum) -> Result<()> {
        if self.conductor != other.conductor {
            return Err(Error::ConductorMismatch(self.conductor, other.conductor));
        }
        Ok(())
    }

    pub fn add(&self, other: &CycNum) -> Result<CycNum> {
        self.check_same(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * &other.denom + b * &self.denom)
            .collect();
        CycNum::new(self.conductor, coords, &self.denom * &other.denom)
    }

    pub fn sub(&self, other: &CycNum) -> Result<CycNum> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coords: self.coords.iter().map(|c| -c.clone()).collect(),
            denom: self.denom.clone(),
        }
    }

    pub fn mul(&self, other: &CycNum) -> Result<CycNum> {
        self.check_same(other)?;
        let prod = zp_mul(&self.coords, &other.coords);
        CycNum::new(self.conductor, prod, &self.denom * &other.denom)
    }

    pub fn div(&self, other: &CycNum) -> Result<CycNum> {
        self.mul(&other.inv()?)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]
    /// modulo Phi_n.
    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let phi = cyclotomic_poly(self.conductor);
        let m: Vec<BigRational> = phi.iter().map(|c| BigRational::from(c.clone())).collect();
        let f: Vec<BigRational> = self
            .coords
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        let u = qp_inverse_mod(&f, &m).ok_or(Error::DivisionByZero)?;
        // (f/d)^(-1) = d * f^(-1); clear the rational coefficients of u
        let mut den = BigInt::one();
        for c in &u {
            den = den.lcm(c.denom());
        }
        let coords: Vec<BigInt> = u
            .iter()
            .map(|c| c.numer() * (&den / c.denom()) * &self.denom)
            .collect();
        CycNum::new(self.conductor, coords, den)
    }

    pub fn pow(&self, e: i64) -> Result<CycNum> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = CycNum::one(self.conductor);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Scale by a rational integer.
    pub fn scale_int(&self, k: i64) -> CycNum {
        let mut out = CycNum {
            conductor: self.conductor,
            coords: self.coords.iter().map(|c| c * k).collect(),
            denom: self.denom.clone(),
        };
        out.canonicalize();
        out
    }

    /// Embed into Q(zeta_m) for a multiple m of the conductor
    /// (zeta_n maps to zeta_m^(m/n)).
    pub fn coerce(&self, m: u32) -> Result<CycNum> {
        if m == self.conductor {
            return Ok(self.clone());
        }
        if m % self.conductor != 0 {
            return Err(Error::NotASubfield(self.conductor, m));
        }
        let step = (m / self.conductor) as usize;
        let mut coords = vec![BigInt::zero(); (self.coords.len() - 1) * step + 1];
        for (i, c) in self.coords.iter().enumerate() {
            coords[i * step] = c.clone();
        }
        CycNum::new(m, coords, self.denom.clone())
    }

    /// Field norm down to Q: the resultant of Phi_n with the numerator
    /// polynomial, divided by denom^phi(n).
    pub fn norm(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let phi = cyclotomic_poly(self.conductor);
        let mut f = self.coords.clone();
        zp_trim(&mut f);
        let res = if f.len() == 1 {
            // constant c: product over all conjugates is c^phi(n)
            num::pow::pow(f[0].clone(), phi.len() - 1)
        } else {
            resultant(&phi, &f)
        };
        let dpow = num::pow::pow(self.denom.clone(), phi.len() - 1);
        BigRational::new(res, dpow)
    }

    /// True when the element is a unit of Z[zeta_n].
    pub fn is_unit(&self) -> Result<bool> {
        if !self.is_integral() {
            return Err(Error::NonIntegral(self.to_string()));
        }
        let n = self.norm();
        Ok(n.is_integer() && n.numer().abs().is_one())
    }

    /// Stable byte encoding of the canonical form, used as a hash-map key.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for c in &self.coords {
            let (sign, bytes) = c.to_bytes_le();
            out.push(match sign {
                Sign::Minus => 0u8,
                Sign::NoSign => 1,
                Sign::Plus => 2,
            });
            out.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
            out.extend_from_slice(&bytes);
        }
        let (_, bytes) = self.denom.to_bytes_le();
        out.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
        out.extend_from_slice(&bytes);
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.conductor,
            "coords": self.coords.iter().map(bigint_json).collect::<Vec<_>>(),
            "den": bigint_json(&self.denom),
        })
    }
}

pub fn bigint_json(b: &BigInt) -> serde_json::Value {
    match b.to_i64() {
        Some(v) => serde_json::json!(v),
        None => serde_json::json!(b.to_string()),
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = match i {
                0 => format!("{c}"),
                1 => {
                    if c.is_one() {
                        "z".into()
                    } else if (-c).is_one() {
                        "-z".into()
                    } else {
                        format!("{c}*z")
                    }
                }
                _ => {
                    if c.is_one() {
                        format!("z^{i}")
                    } else if (-c).is_one() {
                        format!("-z^{i}")
                    } else {
                        format!("{c}*z^{i}")
                    }
                }
            };
            if parts.is_empty() {
                parts.push(term);
            } else if term.starts_with('-') {
                parts.push(format!(" - {}", &term[1..]));
            } else {
                parts.push(format!(" + {term}"));
            }
        }
        let body = parts.concat();
        if self.denom.is_one() {
            write!(f, "{body}")
        } else if self.coords.iter().filter(|c| !c.is_zero()).count() > 1 {
            write!(f, "({body})/{}", self.denom)
        } else {
            write!(f, "{body}/{}", self.denom)
        }
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum[n={}]({})", self.conductor, self)
    }
}

/// Inverse of f modulo the monic polynomial m over Q, or None when f is
/// divisible by m.
fn qp_inverse_mod(f: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    fn trim(v: &mut Vec<BigRational>) {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
    }
    fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead = &b[db];
        let mut q = vec![BigRational::zero(); r.len().saturating_sub(db)];
        while r.len() > db {
            let c = r.last().unwrap() / lead;
            let pos = r.len() - 1 - db;
            q[pos] = c.clone();
            for k in 0..=db {
                let t = &b[k] * &c;
                r[pos + k] -= t;
            }
            trim(&mut r);
            if r.len() <= pos + db {
                // leading term eliminated; loop re-checks length
            }
        }
        (q, r)
    }
    let mut r0 = m.to_vec();
    let mut r1 = f.to_vec();
    trim(&mut r1);
    if r1.is_empty() {
        return None;
    }
    let mut t0: Vec<BigRational> = vec![];
    let mut t1: Vec<BigRational> = vec![BigRational::one()];
    while r1.len() > 1 {
        let (q, r) = divrem(&r0, &r1);
        // tnew = t0 - q*t1
        let qt = qp_mul(&q, &t1);
        let tnew = qp_sub(&t0, &qt);
        r0 = r1;
        r1 = r;
        trim(&mut r1);
        if r1.is_empty() {
            return None; // f shares a factor with m (impossible for irreducible m, f != 0)
        }
        t0 = t1;
        t1 = tnew;
    }
    let c = r1[0].clone();
    Some(t1.iter().map(|t| t / &c).collect())
}

fn qp_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn qp_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    while out.last().map_or(false, |c| c.is_zero()) {
        out.pop();
    }
    out
}

// ---------------------------------------------------------------------------
// univariate polynomials over F_p (little-endian Vec<u64>)
// ---------------------------------------------------------------------------

mod fp {
    use super::*;

    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn deg(v: &[u64]) -> isize {
        v.len() as isize - 1
    }

    pub fn inv_u64(a: u64, p: u64) -> u64 {
        powmod_u64(a, p - 2, p)
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u128; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai as u128 * bj as u128) % p as u128;
            }
        }
        let mut v: Vec<u64> = out.into_iter().map(|c| c as u64).collect();
        trim(&mut v);
        v
    }

    pub fn add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0u64; a.len().max(b.len())];
        for (i, &c) in a.iter().enumerate() {
            out[i] = c % p;
        }
        for (i, &c) in b.iter().enumerate() {
            out[i] = (out[i] + c) % p;
        }
        trim(&mut out);
        out
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0u64; a.len().max(b.len())];
        for (i, &c) in a.iter().enumerate() {
            out[i] = c % p;
        }
        for (i, &c) in b.iter().enumerate() {
            out[i] = (out[i] + p - c % p) % p;
        }
        trim(&mut out);
        out
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lc_inv = inv_u64(m[dm], p);
        while r.len() > dm {
            let lead = mulmod_u64(*r.last().unwrap(), lc_inv, p);
            let pos = r.len() - 1 - dm;
            r.pop();
            if lead != 0 {
                for k in 0..dm {
                    let t = mulmod_u64(m[k], lead, p);
                    r[pos + k] = (r[pos + k] + p - t) % p;
                }
            }
            trim(&mut r);
        }
        r
    }

    pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lc_inv = inv_u64(b[db], p);
        let mut q = vec![0u64; r.len().saturating_sub(db)];
        while r.len() > db {
            let lead = mulmod_u64(*r.last().unwrap(), lc_inv, p);
            let pos = r.len() - 1 - db;
            r.pop();
            q[pos] = lead;
            if lead != 0 {
                for k in 0..db {
                    let t = mulmod_u64(b[k], lead, p);
                    r[pos + k] = (r[pos + k] + p - t) % p;
                }
            }
            trim(&mut r);
        }
        (q, r)
    }

    pub fn monic(mut a: Vec<u64>, p: u64) -> Vec<u64> {
        trim(&mut a);
        if let Some(&lc) = a.last() {
            if lc != 1 {
                let inv = inv_u64(lc, p);
                for c in &mut a {
                    *c = mulmod_u64(*c, inv, p);
                }
            }
        }
        a
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        monic(x, p)
    }

    /// base^e mod m, with an arbitrary-precision exponent.
    pub fn powmod(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> Vec<u64> {
        let mut result = vec![1u64];
        let base = rem(base, m, p);
        let bits = e.bits();
        for i in (0..bits).rev() {
            result = rem(&mul(&result, &result, p), m, p);
            if e.bit(i) {
                result = rem(&mul(&result, &base, p), m, p);
            }
        }
        result
    }

    /// Inverse of a modulo m (m need not be irreducible as long as gcd=1).
    pub fn inv_mod(a: &[u64], m: &[u64], p: u64) -> Option<Vec<u64>> {
        let mut r0 = m.to_vec();
        let mut r1 = rem(a, m, p);
        let mut t0: Vec<u64> = vec![];
        let mut t1: Vec<u64> = vec![1];
        while !r1.is_empty() && deg(&r1) > 0 {
            let (q, r) = divrem(&r0, &r1, p);
            let qt = mul(&q, &t1, p);
            let tn = sub(&t0, &qt, p);
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = tn;
        }
        if r1.is_empty() {
            return None;
        }
        let c = inv_u64(r1[0], p);
        Some(
            t1.iter()
                .map(|&t| mulmod_u64(t, c, p))
                .collect::<Vec<_>>(),
        )
        .map(|mut v| {
            trim(&mut v);
            v
        })
    }
}

// ---------------------------------------------------------------------------
// prime ideals and factorization of Phi_n mod p
// ---------------------------------------------------------------------------

/// A prime ideal of Z[zeta_n] above the rational prime p, identified by an
/// irreducible factor of Phi_n modulo p.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeIdeal {
    conductor: u32,
    p: u64,
    factor: Vec<u64>,
}

impl PrimeIdeal {
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// The irreducible factor of Phi_n mod p, little-endian, monic.
    pub fn factor(&self) -> &[u64] {
        &self.factor
    }

    /// Degree of the residue field over F_p.
    pub fn residue_degree(&self) -> usize {
        self.factor.len() - 1
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "p": self.p, "factor": self.factor })
    }
}

impl fmt::Debug for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PrimeIdeal(n={}, p={}, factor={:?})",
            self.conductor, self.p, self.factor
        )
    }
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, deg {} factor)", self.p, self.residue_degree())
    }
}

/// Squarefree part of n after removing every factor of p.
fn p_free_part(n: u32, p: u64) -> u32 {
    let mut m = n;
    while m as u64 % p == 0 {
        m /= p as u32;
    }
    m
}

/// Multiplicity with which each prime ideal above p divides (p) — equals
/// phi(n)/phi(m) where m is the p-free part of n.
pub fn ramification_multiplicity(n: u32, p: u64) -> usize {
    euler_phi(n) / euler_phi(p_free_part(n, p))
}

/// All prime ideals of Z[zeta_n] above p, in a deterministic order.
///
/// For ramified p (p | n) the distinct factors of Phi_n mod p are exactly
/// the irreducible factors of Phi_m mod p for the p-free part m of n; each
/// is listed once (multiplicity is not tracked on the ideal).
pub fn primes_above(n: u32, p: u64) -> Result<Vec<PrimeIdeal>> {
    if !is_prime_u64(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    let m = p_free_part(n, p);
    let phim: Vec<u64> = cyclotomic_poly(m)
        .iter()
        .map(|c| bigint_mod_u64(c, p))
        .collect();
    let mut factors = factor_squarefree_fp(&phim, p, (n as u64) << 32 | p);
    factors.sort();
    Ok(factors
        .into_iter()
        .map(|factor| PrimeIdeal {
            conductor: n,
            p,
            factor,
        })
        .collect())
}

fn bigint_mod_u64(c: &BigInt, p: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(p));
    r.to_u64().unwrap()
}

/// Distinct-degree then equal-degree factorization of a squarefree monic
/// polynomial over F_p.  Randomized splitting uses a fixed seed derived from
/// the caller; retries increment the stream deterministically.
fn factor_squarefree_fp(f: &[u64], p: u64, seed: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut f = fp::monic(f.to_vec(), p);
    if fp::deg(&f) <= 0 {
        return out;
    }
    // h tracks x^(p^d) mod f
    let mut h = fp::rem(&[0, 1], &f, p);
    let mut d = 0usize;
    let mut chunks: Vec<(Vec<u64>, usize)> = Vec::new();
    while fp::deg(&f) > 0 {
        d += 1;
        if 2 * d > fp::deg(&f) as usize {
            let deg = fp::deg(&f) as usize;
            chunks.push((f.clone(), deg));
            break;
        }
        h = fp::powmod(&h, &BigUint::from(p), &f, p);
        let hx = fp::sub(&h, &[0, 1], p);
        let g = fp::gcd(&hx, &f, p);
        if fp::deg(&g) > 0 {
            chunks.push((g.clone(), d));
            let (q, r) = fp::divrem(&f, &g, p);
            debug_assert!(r.is_empty());
            f = fp::monic(q, p);
            if fp::deg(&f) > 0 {
                h = fp::rem(&h, &f, p);
            }
        }
    }
    for (i, (g, d)) in chunks.into_iter().enumerate() {
        equal_degree_factor(&g, d, p, seed.wrapping_add(i as u64), &mut out);
    }
    out
}

fn equal_degree_factor(g: &[u64], d: usize, p: u64, seed: u64, out: &mut Vec<Vec<u64>>) {
    let degg = fp::deg(g) as usize;
    if degg == d {
        out.push(fp::monic(g.to_vec(), p));
        return;
    }
    let mut attempt = 0u64;
    loop {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt));
        attempt += 1;
        let r: Vec<u64> = (0..degg).map(|_| rng.gen_range(0..p)).collect();
        let mut r = r;
        fp::trim(&mut r);
        if fp::deg(&r) < 1 {
            continue;
        }
        let split = if p == 2 {
            // trace map over F_2: r + r^2 + r^4 + ... (d terms)
            let mut t = r.clone();
            let mut acc = r.clone();
            for _ in 1..d {
                t = fp::rem(&fp::mul(&t, &t, p), g, p);
                acc = fp::add(&acc, &t, p);
            }
            fp::gcd(&acc, g, p)
        } else {
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let s = fp::powmod(&r, &e, g, p);
            let s1 = fp::sub(&s, &[1], p);
            fp::gcd(&s1, g, p)
        };
        let ds = fp::deg(&split);
        if ds > 0 && (ds as usize) < degg {
            let (q, rr) = fp::divrem(g, &split, p);
            debug_assert!(rr.is_empty());
            equal_degree_factor(&split, d, p, seed.wrapping_mul(0x100000001b3).wrapping_add(1), out);
            equal_degree_factor(&fp::monic(q, p), d, p, seed.wrapping_mul(0x100000001b3).wrapping_add(2), out);
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// residue fields F_p[x]/(factor)
// ---------------------------------------------------------------------------

/// The residue field of a prime ideal: F_p[x]/(factor).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResidueField {
    ideal: PrimeIdeal,
}

/// Residue-field element: coordinates in F_p[x]/(factor), fixed length equal
/// to the residue degree.
pub type FqElem = Vec<u64>;

impl ResidueField {
    pub fn new(ideal: PrimeIdeal) -> ResidueField {
        ResidueField { ideal }
    }

    pub fn ideal(&self) -> &PrimeIdeal {
        &self.ideal
    }

    pub fn p(&self) -> u64 {
        self.ideal.p
    }

    pub fn deg(&self) -> usize {
        self.ideal.residue_degree()
    }

    /// Number of elements, p^deg.
    pub fn order(&self) -> u128 {
        let mut o = 1u128;
        for _ in 0..self.deg() {
            o *= self.ideal.p as u128;
        }
        o
    }

    fn pad(&self, mut v: Vec<u64>) -> FqElem {
        v.resize(self.deg(), 0);
        v
    }

    pub fn zero(&self) -> FqElem {
        vec![0; self.deg()]
    }

    pub fn one(&self) -> FqElem {
        self.from_u64(1)
    }

    pub fn from_u64(&self, c: u64) -> FqElem {
        let mut v = self.zero();
        if self.deg() > 0 {
            v[0] = c % self.ideal.p;
        }
        v
    }

    pub fn is_zero(&self, a: &FqElem) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        self.pad(fp::add(a, b, self.ideal.p))
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        self.pad(fp::sub(a, b, self.ideal.p))
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let prod = fp::mul(a, b, self.ideal.p);
        self.pad(fp::rem(&prod, &self.ideal.factor, self.ideal.p))
    }

    pub fn inv(&self, a: &FqElem) -> Result<FqElem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        let v = fp::inv_mod(a, &self.ideal.factor, self.ideal.p)
            .ok_or(Error::DivisionByZero)?;
        Ok(self.pad(v))
    }

    pub fn pow(&self, a: &FqElem, e: u64) -> FqElem {
        self.pad(fp::powmod(a, &BigUint::from(e), &self.ideal.factor, self.ideal.p))
    }

    /// The unique p-th root (inverse Frobenius): a^(p^(d-1)).
    pub fn pth_root(&self, a: &FqElem) -> FqElem {
        let e = BigUint::from(self.ideal.p).pow(self.deg() as u32 - 1);
        self.pad(fp::powmod(a, &e, &self.ideal.factor, self.ideal.p))
    }

    pub fn rand_elem(&self, rng: &mut impl Rng) -> FqElem {
        (0..self.deg()).map(|_| rng.gen_range(0..self.ideal.p)).collect()
    }

    pub fn elem_string(&self, a: &FqElem) -> String {
        let mut parts = Vec::new();
        for (i, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            parts.push(match i {
                0 => format!("{c}"),
                1 => format!("{c}x"),
                _ => format!("{c}x^{i}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

impl fmt::Debug for ResidueField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.ideal.p, self.deg())
    }
}

/// Reduce an element of Q(zeta_n) modulo a prime ideal, landing in the
/// residue field.  Fails when the denominator is divisible by p.
pub fn cyc_reduce(a: &CycNum, ideal: &PrimeIdeal) -> Result<FqElem> {
    if a.conductor() != ideal.conductor {
        return Err(Error::ConductorMismatch(a.conductor(), ideal.conductor));
    }
    let p = ideal.p;
    let den = bigint_mod_u64(a.denom(), p);
    if den == 0 {
        return Err(Error::BadDenominator {
            elem: a.to_string(),
            p,
        });
    }
    let num: Vec<u64> = a.coords().iter().map(|c| bigint_mod_u64(c, p)).collect();
    let field = ResidueField::new(ideal.clone());
    let reduced = fp::rem(&num, &ideal.factor, p);
    let dinv = fp::inv_u64(den, p);
    let mut v: Vec<u64> = reduced.iter().map(|&c| mulmod_u64(c, dinv, p)).collect();
    v.resize(field.deg(), 0);
    Ok(v)
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: u32, coords: &[i64], den: i64) -> CycNum {
        CycNum::new(
            n,
            coords.iter().map(|&c| BigInt::from(c)).collect(),
            BigInt::from(den),
        )
        .unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |n: u32| -> Vec<i64> {
            cyclotomic_poly(n).iter().map(|c| c.to_i64().unwrap()).collect()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(as_i64(24), vec![1, 0, 0, 0, -1, 0, 0, 0, 1]);
        assert_eq!(
            as_i64(60),
            vec![1, 0, 1, 0, 0, 0, -1, 0, -1, 0, -1, 0, 0, 0, 1, 0, 1]
        );
        assert_eq!(euler_phi(60), 16);
    }

    #[test]
    fn basic_arithmetic_identities() {
        // i^2 = -1
        let i = CycNum::root_of_unity(4, 1);
        assert_eq!(i.mul(&i).unwrap(), CycNum::from_int(4, -1));
        // zeta_8^4 = -1
        let z8 = CycNum::root_of_unity(8, 1);
        assert_eq!(z8.pow(4).unwrap(), CycNum::from_int(8, -1));
        // sqrt(2) = zeta_8 + zeta_8^7
        let sqrt2 = z8.add(&CycNum::root_of_unity(8, 7)).unwrap();
        assert_eq!(sqrt2.mul(&sqrt2).unwrap(), CycNum::from_int(8, 2));
        // (1+i)(1-i) = 2
        let one_plus_i = cyc(4, &[1, 1], 1);
        let one_minus_i = cyc(4, &[1, -1], 1);
        assert_eq!(
            one_plus_i.mul(&one_minus_i).unwrap(),
            CycNum::from_int(4, 2)
        );
        // p = 2*omega + 1 has p^2 = -3 (omega = zeta_3)
        let p = cyc(3, &[1, 2], 1);
        assert_eq!(p.mul(&p).unwrap(), CycNum::from_int(3, -3));
    }

    #[test]
    fn quartic_unit_identity() {
        // q = 3 eta^3 - eta^2 + 2 eta + 1 over Q(zeta_5): q^4 / 5 is the unit
        // 55 eta^3 + 55 eta^2 + 89.
        let q = cyc(5, &[1, 2, -1, 3], 1);
        let q4 = q.pow(4).unwrap();
        let alpha = q4.div(&CycNum::from_int(5, 5)).unwrap();
        assert_eq!(alpha, cyc(5, &[89, 0, 55, 55], 1));
        assert!(alpha.is_unit().unwrap());
        assert!(!q.is_unit().unwrap());
        // the same identity after coercion into Q(zeta_60)
        let q60 = q.coerce(60).unwrap();
        let alpha60 = q60.pow(4).unwrap().div(&CycNum::from_int(60, 5)).unwrap();
        assert_eq!(alpha60, alpha.coerce(60).unwrap());
        assert!(alpha60.is_unit().unwrap());
    }

    #[test]
    fn norms() {
        let one_plus_i = cyc(4, &[1, 1], 1);
        assert_eq!(one_plus_i.norm(), BigRational::from(BigInt::from(2)));
        let q = cyc(5, &[1, 2, -1, 3], 1);
        assert_eq!(q.norm().abs(), BigRational::from(BigInt::from(5)));
        // multiplicativity on a few fixed cases at conductor 12
        let a = cyc(12, &[1, -2, 0, 1], 3);
        let b = cyc(12, &[0, 1, 1, -1], 2);
        assert_eq!(a.mul(&b).unwrap().norm(), a.norm() * b.norm());
        // norm of a rational integer c is c^phi(n)
        assert_eq!(
            CycNum::from_int(12, -2).norm(),
            BigRational::from(BigInt::from(16))
        );
        // units of Z[zeta_8]
        assert!(CycNum::root_of_unity(8, 3).is_unit().unwrap());
        assert!(!CycNum::from_int(8, 2).is_unit().unwrap());
        assert!(CycNum::from_int(8, 1).is_unit().unwrap());
        // non-integral elements are rejected
        assert!(cyc(4, &[1], 2).is_unit().is_err());
    }

    #[test]
    fn canonical_form() {
        let a = cyc(4, &[2, 2], 4);
        assert_eq!(a.coords(), &[BigInt::from(1), BigInt::from(1)]);
        assert_eq!(a.denom(), &BigInt::from(2));
        // negative denominators are normalized away
        let b = CycNum::new(4, vec![BigInt::from(1)], BigInt::from(-3)).unwrap();
        assert_eq!(b.denom(), &BigInt::from(3));
        assert_eq!(b.coords()[0], BigInt::from(-1));
        // zeta_4^2 reduces to -1 through Phi_4
        let c = cyc(4, &[0, 0, 1], 1);
        assert_eq!(c, CycNum::from_int(4, -1));
    }

    #[test]
    fn division_and_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [3u32, 4, 8, 12, 24, 60] {
            for _ in 0..25 {
                let phi = euler_phi(n);
                let a = CycNum::new(
                    n,
                    (0..phi).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect(),
                    BigInt::from(rng.gen_range(1i64..=9)),
                )
                .unwrap();
                if a.is_zero() {
                    continue;
                }
                let inv = a.inv().unwrap();
                assert_eq!(a.mul(&inv).unwrap(), CycNum::one(n));
                assert_eq!(a.div(&a).unwrap(), CycNum::one(n));
            }
        }
        assert!(CycNum::zero(8).inv().is_err());
    }

    #[test]
    fn ring_laws_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for n in [3u32, 4, 8, 12, 24, 60] {
            let phi = euler_phi(n);
            let sample = |rng: &mut ChaCha8Rng| {
                CycNum::new(
                    n,
                    (0..phi).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect(),
                    BigInt::from(rng.gen_range(1i64..=9)),
                )
                .unwrap()
            };
            for _ in 0..500 {
                let a = sample(&mut rng);
                let b = sample(&mut rng);
                let c = sample(&mut rng);
                let ab_c = a.add(&b).unwrap().add(&c).unwrap();
                let a_bc = a.add(&b.add(&c).unwrap()).unwrap();
                assert_eq!(ab_c, a_bc);
                let m1 = a.mul(&b).unwrap().mul(&c).unwrap();
                let m2 = a.mul(&b.mul(&c).unwrap()).unwrap();
                assert_eq!(m1, m2);
                let d1 = a.mul(&b.add(&c).unwrap()).unwrap();
                let d2 = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
                assert_eq!(d1, d2);
                assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
                assert_eq!(a.sub(&a).unwrap(), CycNum::zero(n));
            }
        }
    }

    #[test]
    fn coercion_is_a_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (n, m) in [(3u32, 12u32), (4, 24), (12, 60), (5, 60), (8, 24)] {
            let phi = euler_phi(n);
            for _ in 0..40 {
                let a = CycNum::new(
                    n,
                    (0..phi).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect(),
                    BigInt::from(rng.gen_range(1i64..=5)),
                )
                .unwrap();
                let b = CycNum::new(
                    n,
                    (0..phi).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect(),
                    BigInt::from(rng.gen_range(1i64..=5)),
                )
                .unwrap();
                assert_eq!(
                    a.add(&b).unwrap().coerce(m).unwrap(),
                    a.coerce(m).unwrap().add(&b.coerce(m).unwrap()).unwrap()
                );
                assert_eq!(
                    a.mul(&b).unwrap().coerce(m).unwrap(),
                    a.coerce(m).unwrap().mul(&b.coerce(m).unwrap()).unwrap()
                );
            }
        }
        // zeta_4 -> zeta_24^6
        assert_eq!(
            CycNum::root_of_unity(4, 1).coerce(24).unwrap(),
            CycNum::root_of_unity(24, 6)
        );
        assert!(CycNum::one(8).coerce(12).is_err());
        assert!(CycNum::one(4).add(&CycNum::one(8)).is_err());
    }

    #[test]
    fn prime_splitting() {
        // 5 = 1 mod 4 splits into two linear factors x-2, x-3
        let ideals = primes_above(4, 5).unwrap();
        assert_eq!(ideals.len(), 2);
        let factors: Vec<Vec<u64>> = ideals.iter().map(|i| i.factor().to_vec()).collect();
        assert_eq!(factors, vec![vec![2, 1], vec![3, 1]]);
        // 3 = 3 mod 4 stays inert: x^2 + 1
        let inert = primes_above(4, 3).unwrap();
        assert_eq!(inert.len(), 1);
        assert_eq!(inert[0].factor(), &[1, 0, 1]);
        assert_eq!(inert[0].residue_degree(), 2);
        // 3 ramifies in Q(zeta_3): single ideal with factor x - 1
        let ram = primes_above(3, 3).unwrap();
        assert_eq!(ram.len(), 1);
        assert_eq!(ram[0].factor(), &[2, 1]);
        assert_eq!(ramification_multiplicity(3, 3), 2);
        assert!(primes_above(4, 6).is_err());
    }

    #[test]
    fn factor_product_recovers_phi_mod_p() {
        for n in [3u32, 4, 8, 12, 24, 60] {
            for p in [2u64, 3, 5, 7, 11, 13] {
                let ideals = primes_above(n, p).unwrap();
                let mult = ramification_multiplicity(n, p);
                let mut prod = vec![1u64];
                for ideal in &ideals {
                    for _ in 0..mult {
                        prod = fp::mul(&prod, ideal.factor(), p);
                    }
                }
                let phin: Vec<u64> = cyclotomic_poly(n)
                    .iter()
                    .map(|c| bigint_mod_u64(c, p))
                    .collect();
                let mut phin = phin;
                fp::trim(&mut phin);
                assert_eq!(prod, phin, "n={n} p={p}");
            }
        }
    }

    #[test]
    fn reduction_to_residue_fields() {
        // i maps to 2 under the ideal over 5 with factor x-2 at conductor 4
        let ideals = primes_above(4, 5).unwrap();
        let i = CycNum::root_of_unity(4, 1);
        let im = cyc_reduce(&i, &ideals[1]).unwrap(); // factor [3,1] = x-2 => i -> 2
        assert_eq!(im, vec![2]);
        let im = cyc_reduce(&i, &ideals[0]).unwrap(); // factor [2,1] = x-3 => i -> 3
        assert_eq!(im, vec![3]);
        // 1/3 cannot be reduced modulo an ideal over 3
        let third = cyc(4, &[1], 3);
        let over3 = primes_above(4, 3).unwrap();
        assert!(matches!(
            cyc_reduce(&third, &over3[0]),
            Err(Error::BadDenominator { .. })
        ));
        // p = 2*omega+1 dies in the ramified residue field over 3 (conductor 12)
        let p12 = cyc(12, &[1, 0, 0, 0, 2], 1); // 1 + 2*zeta_12^4
        let over3 = primes_above(12, 3).unwrap();
        assert_eq!(over3.len(), 1);
        let r = cyc_reduce(&p12, &over3[0]).unwrap();
        assert!(r.iter().all(|&c| c == 0));
    }

    #[test]
    fn reduction_is_a_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for n in [4u32, 12, 24, 60] {
            for p in [2u64, 3, 5, 7, 11] {
                let ideals = primes_above(n, p).unwrap();
                let ideal = &ideals[0];
                let field = ResidueField::new(ideal.clone());
                let phi = euler_phi(n);
                for _ in 0..20 {
                    let a = CycNum::new(
                        n,
                        (0..phi).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect(),
                        BigInt::one(),
                    )
                    .unwrap();
                    let b = CycNum::new(
                        n,
                        (0..phi).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect(),
                        BigInt::one(),
                    )
                    .unwrap();
                    let ra = cyc_reduce(&a, ideal).unwrap();
                    let rb = cyc_reduce(&b, ideal).unwrap();
                    assert_eq!(
                        cyc_reduce(&a.add(&b).unwrap(), ideal).unwrap(),
                        field.add(&ra, &rb)
                    );
                    assert_eq!(
                        cyc_reduce(&a.mul(&b).unwrap(), ideal).unwrap(),
                        field.mul(&ra, &rb)
                    );
                }
            }
        }
    }

    #[test]
    fn residue_field_arithmetic() {
        let ideal = primes_above(12, 7).unwrap().into_iter().next().unwrap();
        let field = ResidueField::new(ideal);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let a = field.rand_elem(&mut rng);
            let b = field.rand_elem(&mut rng);
            let c = field.rand_elem(&mut rng);
            let l = field.mul(&a, &field.add(&b, &c));
            let r = field.add(&field.mul(&a, &b), &field.mul(&a, &c));
            assert_eq!(l, r);
            if !field.is_zero(&a) {
                let inv = field.inv(&a).unwrap();
                assert_eq!(field.mul(&a, &inv), field.one());
                // Frobenius root inverts the p-th power map
                let root = field.pth_root(&a);
                assert_eq!(field.pow(&root, field.p()), a);
            }
        }
    }

    #[test]
    fn integer_factorization() {
        assert_eq!(
            factor_u64(1728),
            BTreeMap::from([(2u64, 6u32), (3, 3)])
        );
        assert_eq!(factor_u64(1), BTreeMap::new());
        assert_eq!(
            factor_u64(600851475143),
            BTreeMap::from([(71u64, 1u32), (839, 1), (1471, 1), (6857, 1)])
        );
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1_000_000_011));
    }
}
