//! Exact arithmetic in F_{q^r} (q = p^e) with trace and norm down to F_q.
//!
//! The extension is built directly as F_p[t]/(modulus) of degree e*r; the
//! intermediate field F_q is realized as the fixed set of the map a -> a^q.
//! Elements are canonical indices in [0, Q): the base-p digit expansion of an
//! index is the coefficient vector of the residue polynomial, constant term
//! least significant.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported field size (table-backed representation).
pub const MAX_FIELD_SIZE: u64 = 1 << 24;

/// Fields up to this order carry log/antilog tables for O(1) multiplication.
const LOG_TABLE_LIMIT: u64 = 1 << 16;

/// A field element, stored as its canonical index in [0, Q).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Felt(pub u32);

impl Felt {
    pub const ZERO: Felt = Felt(0);
    pub const ONE: Felt = Felt(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.0)
    }
}

impl fmt::Display for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Arithmetic context for F_{q^r} with the distinguished subfield F_q.
pub struct Field {
    pub p: u64,
    pub e: u32,
    pub r: u32,
    /// q = p^e, the order of the base subfield.
    pub q: u64,
    /// Q = q^r = p^(e*r), the order of the field.
    pub order: u64,
    /// Degree of the extension over F_p.
    deg: u32,
    /// Monic irreducible modulus, coefficients over F_p, length deg+1.
    modulus: Vec<u32>,
    /// c = (q^r - 1)/(q - 1), the norm exponent.
    pub c: u64,
    log: Vec<u32>,
    exp: Vec<u32>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Split a prime power q into (p, e). Errors if q is not a prime power.
pub fn split_prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let mut p = 2u64;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut n = q;
            let mut e = 0u32;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            if n == 1 {
                return Ok((p, e));
            }
            return Err(Error::NotPrimePower(q));
        }
        p += 1;
    }
    Ok((q, 1))
}

// ---- dense polynomial helpers over F_p (little-endian coefficient vectors) ----

fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_mul(a: &[u32], b: &[u32], p: u64) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai as u64 * bj as u64) % p;
        }
    }
    let mut out: Vec<u32> = out.into_iter().map(|x| x as u32).collect();
    poly_trim(&mut out);
    out
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0.
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

/// Remainder of a modulo the monic polynomial m.
fn poly_rem(a: &[u32], m: &[u32], p: u64) -> Vec<u32> {
    debug_assert_eq!(*m.last().unwrap(), 1);
    let mut a = a.to_vec();
    poly_trim(&mut a);
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = *a.last().unwrap() as u64;
        let shift = a.len() - 1 - dm;
        if lead != 0 {
            for (k, &mk) in m.iter().enumerate() {
                let idx = shift + k;
                let v = (a[idx] as u64 + p - lead * mk as u64 % p) % p;
                a[idx] = v as u32;
            }
        }
        a.pop();
        poly_trim(&mut a);
    }
    a
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u64) -> Vec<u32> {
    poly_rem(&poly_mul(a, b, p), m, p)
}

fn poly_gcd(a: &[u32], b: &[u32], p: u64) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        // rem(a, b) with b made monic on the fly
        let lead_inv = inv_mod_p(*b.last().unwrap() as u64, p);
        let monic: Vec<u32> = b
            .iter()
            .map(|&x| (x as u64 * lead_inv % p) as u32)
            .collect();
        let r = poly_rem(&a, &monic, p);
        a = b;
        b = r;
    }
    a
}

/// Irreducibility over F_p: a degree-n polynomial is irreducible iff it shares
/// no factor with x^(p^k) - x for any k <= n/2.
fn is_irreducible(f: &[u32], p: u64) -> bool {
    let n = f.len() - 1;
    let mut xpk = vec![0u32, 1]; // x
    for _ in 0..n / 2 {
        // raise to the p-th power mod f
        let mut acc = vec![1u32];
        let mut base = xpk.clone();
        let mut exp = p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = poly_mulmod(&acc, &base, f, p);
            }
            base = poly_mulmod(&base, &base, f, p);
            exp >>= 1;
        }
        xpk = acc;
        // g = x^(p^k) - x mod f
        let mut g = xpk.clone();
        if g.len() < 2 {
            g.resize(2, 0);
        }
        g[1] = ((g[1] as u64 + p - 1) % p) as u32;
        poly_trim(&mut g);
        let gcd = poly_gcd(f, &g, p);
        if gcd.len() != 1 {
            return false;
        }
    }
    true
}

/// The deterministic modulus: among monic irreducible polynomials of degree n
/// over F_p, the one whose non-leading coefficient vector, read as a base-p
/// integer with the constant term least significant, is minimal.
fn choose_modulus(p: u64, n: u32) -> Vec<u32> {
    let count = (p as u128).pow(n);
    for v in 0..count {
        let mut coeffs = Vec::with_capacity(n as usize + 1);
        let mut rest = v;
        for _ in 0..n {
            coeffs.push((rest % p as u128) as u32);
            rest /= p as u128;
        }
        coeffs.push(1);
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}

impl Field {
    /// Build the arithmetic context for F_{(p^e)^r}.
    pub fn build(p: u64, e: u32, r: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if e == 0 {
            return Err(Error::OutOfRange {
                name: "e",
                value: 0,
                range: ">= 1".into(),
            });
        }
        if r < 2 {
            return Err(Error::BadExtensionDegree(r as u64));
        }
        let deg = e * r;
        let order = (p as u128).checked_pow(deg).filter(|&o| o <= MAX_FIELD_SIZE as u128);
        let order = match order {
            Some(o) => o as u64,
            None => return Err(Error::FieldTooLarge(u64::MAX)),
        };
        let q = p.pow(e);
        let c = (order - 1) / (q - 1);
        let modulus = choose_modulus(p, deg);
        let mut field = Field {
            p,
            e,
            r,
            q,
            order,
            deg,
            modulus,
            c,
            log: Vec::new(),
            exp: Vec::new(),
        };
        if order <= LOG_TABLE_LIMIT {
            field.build_tables();
        }
        Ok(field)
    }

    /// Convenience constructor from a prime power q and extension degree r.
    pub fn from_q(q: u64, r: u32) -> Result<Field> {
        let (p, e) = split_prime_power(q)?;
        Field::build(p, e, r)
    }

    fn index_to_poly(&self, a: Felt) -> Vec<u32> {
        let mut v = a.0 as u64;
        let mut out = Vec::with_capacity(self.deg as usize);
        while v > 0 {
            out.push((v % self.p) as u32);
            v /= self.p;
        }
        out
    }

    fn poly_to_index(&self, poly: &[u32]) -> Felt {
        let mut idx = 0u64;
        for &c in poly.iter().rev() {
            idx = idx * self.p + c as u64;
        }
        Felt(idx as u32)
    }

    fn mul_poly(&self, a: Felt, b: Felt) -> Felt {
        let pa = self.index_to_poly(a);
        let pb = self.index_to_poly(b);
        self.poly_to_index(&poly_mulmod(&pa, &pb, &self.modulus, self.p))
    }

    fn build_tables(&mut self) {
        let q1 = (self.order - 1) as usize;
        // find a multiplicative generator by direct order check
        'cand: for g in 2..self.order {
            let g = Felt(g as u32);
            let mut x = Felt::ONE;
            for step in 1..=q1 {
                x = self.mul_poly(x, g);
                if x == Felt::ONE {
                    if step == q1 {
                        // build tables from this generator
                        let mut log = vec![u32::MAX; self.order as usize];
                        let mut exp = vec![0u32; 2 * q1];
                        let mut y = Felt::ONE;
                        for i in 0..q1 {
                            exp[i] = y.0;
                            exp[i + q1] = y.0;
                            log[y.index()] = i as u32;
                            y = self.mul_poly(y, g);
                        }
                        self.log = log;
                        self.exp = exp;
                        return;
                    }
                    continue 'cand;
                }
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    pub fn has_tables(&self) -> bool {
        !self.log.is_empty()
    }

    /// Modulus coefficients over F_p, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Felt> {
        (0..self.order as u32).map(Felt)
    }

    /// Element as a polynomial in t over F_p, for human-readable tables.
    pub fn poly_string(&self, a: Felt) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut v = a.0 as u64;
        let mut terms = Vec::new();
        let mut deg = 0u32;
        while v > 0 {
            let digit = v % self.p;
            if digit != 0 {
                let coeff = if digit == 1 && deg > 0 {
                    String::new()
                } else {
                    digit.to_string()
                };
                let var = match deg {
                    0 => String::new(),
                    1 => "t".to_string(),
                    k => format!("t^{}", k),
                };
                terms.push(format!("{}{}", coeff, var));
            }
            v /= self.p;
            deg += 1;
        }
        terms.reverse();
        terms.join("+")
    }

    pub fn add(&self, a: Felt, b: Felt) -> Felt {
        if self.p == 2 {
            return Felt(a.0 ^ b.0);
        }
        let mut va = a.0 as u64;
        let mut vb = b.0 as u64;
        let mut out = 0u64;
        let mut place = 1u64;
        while va > 0 || vb > 0 {
            let d = (va % self.p + vb % self.p) % self.p;
            out += d * place;
            place *= self.p;
            va /= self.p;
            vb /= self.p;
        }
        Felt(out as u32)
    }

    pub fn neg(&self, a: Felt) -> Felt {
        if self.p == 2 {
            return a;
        }
        let mut va = a.0 as u64;
        let mut out = 0u64;
        let mut place = 1u64;
        while va > 0 {
            let d = (self.p - va % self.p) % self.p;
            out += d * place;
            place *= self.p;
            va /= self.p;
        }
        Felt(out as u32)
    }

    pub fn sub(&self, a: Felt, b: Felt) -> Felt {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Felt, b: Felt) -> Felt {
        if a.is_zero() || b.is_zero() {
            return Felt::ZERO;
        }
        if self.has_tables() {
            let la = self.log[a.index()] as usize;
            let lb = self.log[b.index()] as usize;
            Felt(self.exp[la + lb])
        } else {
            self.mul_poly(a, b)
        }
    }

    pub fn inv(&self, a: Felt) -> Felt {
        debug_assert!(!a.is_zero(), "inverse of zero");
        if self.has_tables() {
            let q1 = (self.order - 1) as usize;
            let la = self.log[a.index()] as usize;
            Felt(self.exp[(q1 - la) % q1])
        } else {
            self.pow(a, self.order - 2)
        }
    }

    pub fn div(&self, a: Felt, b: Felt) -> Felt {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Felt, k: u64) -> Felt {
        if a.is_zero() {
            return if k == 0 { Felt::ONE } else { Felt::ZERO };
        }
        if self.has_tables() {
            let q1 = self.order - 1;
            let la = self.log[a.index()] as u64;
            let l = la * (k % q1) % q1;
            Felt(self.exp[l as usize])
        } else {
            let mut acc = Felt::ONE;
            let mut base = a;
            let mut k = k % (self.order - 1);
            if k == 0 {
                return Felt::ONE;
            }
            while k > 0 {
                if k & 1 == 1 {
                    acc = self.mul_poly(acc, base);
                }
                base = self.mul_poly(base, base);
                k >>= 1;
            }
            acc
        }
    }

    /// Image of a scalar residue mod p under the canonical embedding F_p -> F_{q^r}.
    pub fn from_prime_residue(&self, v: u64) -> Felt {
        Felt((v % self.p) as u32)
    }

    /// Tr(a) = a + a^q + ... + a^(q^(r-1)), landing in F_q.
    pub fn trace_to_base(&self, a: Felt) -> Felt {
        let mut acc = Felt::ZERO;
        let mut x = a;
        for _ in 0..self.r {
            acc = self.add(acc, x);
            x = self.pow(x, self.q);
        }
        acc
    }

    /// N(a) = a^c with c = (q^r - 1)/(q - 1), landing in F_q.
    pub fn norm_to_base(&self, a: Felt) -> Felt {
        self.pow(a, self.c)
    }

    pub fn in_subfield(&self, a: Felt) -> bool {
        self.pow(a, self.q) == a
    }

    /// The q elements of F_q, in canonical index order.
    pub fn subfield_elements(&self) -> Vec<Felt> {
        self.elements().filter(|&a| self.in_subfield(a)).collect()
    }

    /// All y with Tr(y) = v, in canonical index order. Always q^(r-1) of them.
    pub fn trace_fiber(&self, v: Felt) -> Result<Vec<Felt>> {
        if !self.in_subfield(v) {
            return Err(Error::NotInSubfield(v.0));
        }
        Ok(self
            .elements()
            .filter(|&y| self.trace_to_base(y) == v)
            .collect())
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("r", &self.r)
            .field("order", &self.order)
            .field("modulus", &self.modulus)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn build_f8() {
        let f = Field::build(2, 1, 3).unwrap();
        assert_eq!(f.order, 8);
        // t^3 + t + 1: coefficient vector [1, 1, 0, 1]
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
        assert_eq!(f.c, 7);
    }

    #[test]
    fn build_f27() {
        let f = Field::build(3, 1, 3).unwrap();
        assert_eq!(f.order, 27);
        assert_eq!(f.c, 13);
    }

    #[test]
    fn reject_non_prime() {
        assert!(matches!(Field::build(4, 1, 3), Err(Error::NonPrime(4))));
    }

    #[test]
    fn reject_oversize() {
        assert!(matches!(
            Field::build(2, 1, 30),
            Err(Error::FieldTooLarge(_))
        ));
    }

    #[test]
    fn group_laws_exhaustive_f8() {
        let f = Field::build(2, 1, 3).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in f.elements() {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
            assert_eq!(f.add(a, f.neg(a)), Felt::ZERO);
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a)), Felt::ONE);
            }
        }
    }

    #[test]
    fn group_laws_sampled_f27() {
        let f = Field::build(3, 1, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10_000 {
            let a = Felt(rng.gen_range(0..27));
            let b = Felt(rng.gen_range(0..27));
            let c = Felt(rng.gen_range(0..27));
            assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            assert_eq!(f.add(a, f.neg(a)), Felt::ZERO);
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a)), Felt::ONE);
            }
        }
    }

    #[test]
    fn trace_of_generator_class_f8() {
        let f = Field::build(2, 1, 3).unwrap();
        // g is the class of t, index 2; g^4 + g^2 + g = 0 under g^3 = g + 1
        assert_eq!(f.trace_to_base(Felt(2)), Felt::ZERO);
        assert_eq!(f.trace_to_base(Felt::ZERO), Felt::ZERO);
    }

    #[test]
    fn trace_fibers_f8() {
        let f = Field::build(2, 1, 3).unwrap();
        let fiber0 = f.trace_fiber(Felt::ZERO).unwrap();
        assert_eq!(fiber0.len(), 4);
        // {0, g, g^2, g^4} = indices {0, 2, 4, 6} under t^3 + t + 1
        assert_eq!(fiber0, vec![Felt(0), Felt(2), Felt(4), Felt(6)]);
        let fiber1 = f.trace_fiber(Felt::ONE).unwrap();
        assert_eq!(fiber1.len(), 4);
        let mut all: Vec<Felt> = fiber0.into_iter().chain(fiber1).collect();
        all.sort();
        assert_eq!(all, f.elements().collect::<Vec<_>>());
    }

    #[test]
    fn trace_fiber_rejects_outsider() {
        let f = Field::build(2, 1, 3).unwrap();
        assert!(f.trace_fiber(Felt(2)).is_err());
    }

    #[test]
    fn norm_f8_all_nonzero_to_one() {
        let f = Field::build(2, 1, 3).unwrap();
        // c = 7 is the full group order
        for a in f.elements().skip(1) {
            assert_eq!(f.norm_to_base(a), Felt::ONE);
        }
        assert_eq!(f.norm_to_base(Felt::ZERO), Felt::ZERO);
    }

    #[test]
    fn norm_fibers_f27() {
        let f = Field::build(3, 1, 3).unwrap();
        for v in f.subfield_elements() {
            if v.is_zero() {
                continue;
            }
            let fiber: Vec<Felt> = f
                .elements()
                .filter(|&a| !a.is_zero() && f.norm_to_base(a) == v)
                .collect();
            assert_eq!(fiber.len(), 13);
        }
    }

    #[test]
    fn subfield_f8_f27() {
        let f = Field::build(2, 1, 3).unwrap();
        assert_eq!(f.subfield_elements(), vec![Felt(0), Felt(1)]);
        let f = Field::build(3, 1, 3).unwrap();
        let sub = f.subfield_elements();
        assert_eq!(sub.len(), 3);
        for &a in &sub {
            for &b in &sub {
                assert!(sub.contains(&f.mul(a, b)));
                assert!(sub.contains(&f.add(a, b)));
            }
        }
    }

    #[test]
    fn trace_linear_norm_multiplicative() {
        for (p, e, r) in [(2u64, 1u32, 3u32), (3, 1, 3)] {
            let f = Field::build(p, e, r).unwrap();
            let lambdas = f.subfield_elements();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(
                        f.norm_to_base(f.mul(a, b)),
                        f.mul(f.norm_to_base(a), f.norm_to_base(b))
                    );
                    for &l in &lambdas {
                        let lhs = f.trace_to_base(f.add(f.mul(l, a), b));
                        let rhs = f.add(f.mul(l, f.trace_to_base(a)), f.trace_to_base(b));
                        assert_eq!(lhs, rhs);
                    }
                }
                // results land in the subfield; Frobenius invariance
                assert!(f.in_subfield(f.trace_to_base(a)));
                assert!(f.in_subfield(f.norm_to_base(a)));
                assert_eq!(f.trace_to_base(f.pow(a, f.q)), f.trace_to_base(a));
            }
        }
    }

    #[test]
    fn big_field_path_matches_tables() {
        // F_{2^18} exceeds the log-table limit; check basic laws on samples.
        let f = Field::build(2, 1, 18).unwrap();
        assert!(!f.has_tables());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let a = Felt(rng.gen_range(0..f.order as u32));
            let b = Felt(rng.gen_range(0..f.order as u32));
            assert_eq!(f.mul(a, b), f.mul(b, a));
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a)), Felt::ONE);
                assert_eq!(f.pow(a, f.order - 1), Felt::ONE);
            }
        }
    }
}
