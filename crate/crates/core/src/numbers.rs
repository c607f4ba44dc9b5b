//! Number-theoretic tables and the cyclotomic field Q(zeta_12).
//!
//! The tables (Mobius function, divisor lists, factorials) are memoized up
//! to a bound (default 64) and extended on demand behind a lock, so reads
//! are safe from concurrent callers. [`CycloNum`] models `Q[t]/(t^4 - t^2 + 1)`,
//! the field generated by a primitive twelfth root of unity; it is the only
//! number field the residue verification needs, since all eight pole
//! locations of the Euler-characteristic integrand lie in it.

use crate::ring::{int, rat_int, rat_to_string, Error, Int, Rat, Result};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

const DEFAULT_TABLE_BOUND: usize = 64;

struct Tables {
    /// mobius[n] for n <= bound; mobius[0] unused.
    mobius: Vec<i64>,
    /// divisors[n] sorted ascending; divisors[0] empty.
    divisors: Vec<Vec<u32>>,
    factorial: Vec<Int>,
}

impl Tables {
    fn with_bound(bound: usize) -> Self {
        let mut mobius = vec![0i64; bound + 1];
        mobius[1] = 1;
        // Sieve: mu(n) via smallest prime factor decomposition.
        let mut spf = vec![0usize; bound + 1];
        for i in 2..=bound {
            if spf[i] == 0 {
                let mut j = i;
                while j <= bound {
                    if spf[j] == 0 {
                        spf[j] = i;
                    }
                    j += i;
                }
            }
        }
        for n in 2..=bound {
            let p = spf[n];
            let m = n / p;
            mobius[n] = if m % p == 0 { 0 } else { -mobius[m] };
        }
        let mut divisors = vec![Vec::new(); bound + 1];
        for d in 1..=bound {
            let mut m = d;
            while m <= bound {
                divisors[m].push(d as u32);
                m += d;
            }
        }
        let mut factorial = Vec::with_capacity(bound + 1);
        factorial.push(Int::one());
        for n in 1..=bound {
            let prev = factorial[n - 1].clone();
            factorial.push(prev * int(n as i64));
        }
        Tables {
            mobius,
            divisors,
            factorial,
        }
    }
}

fn tables() -> &'static Mutex<Tables> {
    static TABLES: OnceLock<Mutex<Tables>> = OnceLock::new();
    TABLES.get_or_init(|| Mutex::new(Tables::with_bound(DEFAULT_TABLE_BOUND)))
}

fn with_tables<T>(n: usize, f: impl FnOnce(&Tables) -> T) -> T {
    let mut guard = tables().lock().unwrap();
    if n >= guard.mobius.len() {
        *guard = Tables::with_bound(n.next_power_of_two().max(DEFAULT_TABLE_BOUND));
    }
    f(&guard)
}

/// Mobius function mu(n). Requires n >= 1.
pub fn mobius(n: u32) -> Int {
    assert!(n >= 1, "mobius requires n >= 1");
    with_tables(n as usize, |t| int(t.mobius[n as usize]))
}

/// Sorted list of positive divisors of n. Requires n >= 1.
pub fn divisors(n: u32) -> Vec<u32> {
    assert!(n >= 1, "divisors requires n >= 1");
    with_tables(n as usize, |t| t.divisors[n as usize].clone())
}

/// n! as an exact integer.
pub fn factorial(n: u32) -> Int {
    with_tables(n as usize, |t| t.factorial[n as usize].clone())
}

/// An element of Q(zeta_12), stored as c0 + c1 t + c2 t^2 + c3 t^3 in
/// `Q[t]/(t^4 - t^2 + 1)`. The class of t is a primitive twelfth root of
/// unity: t^12 = 1 and t^6 = -1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycloNum {
    coeffs: [Rat; 4],
}

impl CycloNum {
    pub fn new(coeffs: [Rat; 4]) -> Self {
        CycloNum { coeffs }
    }

    pub fn zero() -> Self {
        CycloNum::new([Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()])
    }

    pub fn one() -> Self {
        CycloNum::from_rat(Rat::one())
    }

    pub fn from_rat(q: Rat) -> Self {
        CycloNum::new([q, Rat::zero(), Rat::zero(), Rat::zero()])
    }

    pub fn from_int(n: i64) -> Self {
        CycloNum::from_rat(rat_int(n))
    }

    /// The generator zeta = class of t.
    pub fn zeta() -> Self {
        CycloNum::new([Rat::zero(), Rat::one(), Rat::zero(), Rat::zero()])
    }

    /// zeta^k for any integer k (k may be negative).
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(12) as u32;
        let mut acc = CycloNum::one();
        for _ in 0..k {
            acc = acc.mul(&CycloNum::zeta());
        }
        acc
    }

    pub fn coeffs(&self) -> &[Rat; 4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational part, if the element is rational.
    pub fn to_rat(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for i in 0..4 {
            out.coeffs[i] = &out.coeffs[i] + &other.coeffs[i];
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for i in 0..4 {
            out.coeffs[i] = &out.coeffs[i] - &other.coeffs[i];
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        // Multiply in Q[t], then rewrite t^4 -> t^2 - 1 (twice for t^5, t^6).
        let mut raw = [
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
        ];
        for i in 0..4 {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                raw[i + j] = &raw[i + j] + &(&self.coeffs[i] * &other.coeffs[j]);
            }
        }
        for k in (4..=6).rev() {
            let c = std::mem::replace(&mut raw[k], Rat::zero());
            if c.is_zero() {
                continue;
            }
            raw[k - 2] = &raw[k - 2] + &c;
            raw[k - 4] = &raw[k - 4] - &c;
        }
        CycloNum::new([
            raw[0].clone(),
            raw[1].clone(),
            raw[2].clone(),
            raw[3].clone(),
        ])
    }

    pub fn scale(&self, q: &Rat) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = &*c * q;
        }
        out
    }

    /// Multiplicative inverse via extended Euclid in `Q[t]` against t^4 - t^2 + 1.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Polynomials as coefficient vectors, lowest degree first.
        type Poly = Vec<Rat>;
        fn deg(p: &Poly) -> Option<usize> {
            p.iter().rposition(|c| !c.is_zero())
        }
        fn poly_sub(a: &Poly, b: &Poly) -> Poly {
            let n = a.len().max(b.len());
            (0..n)
                .map(|i| {
                    let x = a.get(i).cloned().unwrap_or_else(Rat::zero);
                    let y = b.get(i).cloned().unwrap_or_else(Rat::zero);
                    x - y
                })
                .collect()
        }
        fn poly_shift_mul(p: &Poly, sh: usize, q: &Rat) -> Poly {
            let mut out = vec![Rat::zero(); sh];
            out.extend(p.iter().map(|c| c * q));
            out
        }
        // Euclid: r0 = modulus, r1 = self; track s so that s * self = r (mod r0).
        let modulus: Poly = vec![
            rat_int(1),
            Rat::zero(),
            rat_int(-1),
            Rat::zero(),
            rat_int(1),
        ];
        let mut r0 = modulus;
        let mut r1: Poly = self.coeffs.to_vec();
        let mut s0: Poly = vec![Rat::zero()];
        let mut s1: Poly = vec![Rat::one()];
        while let Some(d1) = deg(&r1) {
            let d0 = match deg(&r0) {
                Some(d) => d,
                None => break,
            };
            if d0 < d1 {
                std::mem::swap(&mut r0, &mut r1);
                std::mem::swap(&mut s0, &mut s1);
                continue;
            }
            let q = &r0[d0] / &r1[d1];
            r0 = poly_sub(&r0, &poly_shift_mul(&r1, d0 - d1, &q));
            s0 = poly_sub(&s0, &poly_shift_mul(&s1, d0 - d1, &q));
            if deg(&r0).map_or(true, |d| d < d1) {
                std::mem::swap(&mut r0, &mut r1);
                std::mem::swap(&mut s0, &mut s1);
            }
        }
        // r0 is now the gcd (a nonzero constant, since the modulus is irreducible).
        let c = r0
            .iter()
            .rposition(|c| !c.is_zero())
            .map(|d| r0[d].clone())
            .expect("gcd of nonzero element with irreducible modulus is a unit");
        let inv_c = Rat::one() / c;
        let mut coeffs = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
        // Reduce s0 mod t^4 = t^2 - 1 into the canonical representative.
        let mut reduced = s0;
        let mut k = reduced.len();
        while k > 4 {
            k -= 1;
            let c = std::mem::replace(&mut reduced[k], Rat::zero());
            if !c.is_zero() {
                reduced[k - 2] = &reduced[k - 2] + &c;
                reduced[k - 4] = &reduced[k - 4] - &c;
            }
        }
        for (i, c) in reduced.into_iter().take(4).enumerate() {
            coeffs[i] = c * &inv_c;
        }
        let inv = CycloNum::new(coeffs);
        debug_assert_eq!(inv.mul(self), CycloNum::one());
        Ok(inv)
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "t", "t^2", "t^3"];
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = rat_to_string(&c.abs());
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if i == 0 {
                write!(f, "{s}")?;
            } else if s == "1" {
                write!(f, "{}", names[i])?;
            } else {
                write!(f, "{s}*{}", names[i])?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Evaluate a rational polynomial (coefficients lowest-first) at a point of
/// Q(zeta_12).
pub fn cyclo_eval(poly: &[Rat], z: &CycloNum) -> CycloNum {
    let mut acc = CycloNum::zero();
    for c in poly.iter().rev() {
        acc = acc.mul(z);
        acc = acc.add(&CycloNum::from_rat(c.clone()));
    }
    acc
}

/// Evaluate a Laurent polynomial given as (exponent, coefficient) pairs at a
/// nonzero point of Q(zeta_12).
pub fn cyclo_eval_laurent(terms: &[(i64, Rat)], z: &CycloNum) -> Result<CycloNum> {
    let zinv = z.invert()?;
    let mut acc = CycloNum::zero();
    for (e, c) in terms {
        let base = if *e >= 0 { z.clone() } else { zinv.clone() };
        let mut p = CycloNum::one();
        for _ in 0..e.unsigned_abs() {
            p = p.mul(&base);
        }
        acc = acc.add(&p.scale(c));
    }
    Ok(acc)
}
