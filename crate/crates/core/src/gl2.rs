//! The coefficient ring generated by the rank-two local system class H and
//! the Tate class L: Laurent polynomials in w over `Q[L]`, with the Weyl
//! symmetry w -> L/w cutting out the representation ring.
//!
//! H = w + L/w and L generate the symmetric subring (a polynomial ring
//! `Z[H, L]`); H_n, the n-th symmetric power with determinant twists, is
//! defined by the root formula H_n = sum_{j=0}^{n} w^{n-2j} L^j, equivalently
//! (w^{n+1} - (L/w)^{n+1})/(w - L/w). General (asymmetric) elements serve as
//! workspace for residue integrands.

use crate::ring::{is_integer, rat_int, rat_to_string, CoeffRing, Error, LambdaRing, Rat, Result};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Dense polynomial in L over Q; trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LPoly {
    coeffs: Vec<Rat>,
}

impl LPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        LPoly { coeffs }
    }

    pub fn zero() -> Self {
        LPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        LPoly::new(vec![c])
    }

    /// L^k.
    pub fn l_power(k: u32) -> Self {
        let mut coeffs = vec![Rat::zero(); k as usize + 1];
        coeffs[k as usize] = Rat::one();
        LPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        LPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        LPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        LPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return LPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        LPoly::new(out)
    }

    pub fn scale(&self, q: &Rat) -> Self {
        if q.is_zero() {
            return LPoly::zero();
        }
        LPoly {
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiply by L^k.
    pub fn shift(&self, k: u32) -> Self {
        if self.is_zero() {
            return LPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        LPoly { coeffs }
    }

    /// Substitute L -> L^d.
    pub fn stretch(&self, d: u32) -> Self {
        let mut coeffs = vec![Rat::zero(); self.coeffs.len().saturating_sub(1) * d as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * d as usize] = c.clone();
            }
        }
        LPoly::new(coeffs)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(is_integer)
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact division in `Q[L]`; None if the remainder is nonzero.
    pub fn div_exact(&self, den: &Self) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LPoly::zero());
        }
        let dd = den.degree().unwrap();
        let lead = den.coeff(dd);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len()];
        while rem.len() >= dd + 1 {
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() < dd + 1 {
                break;
            }
            let top = rem.len() - 1;
            let q = &rem[top] / &lead;
            quot[top - dd] = q.clone();
            for i in 0..=dd {
                let delta = &q * &den.coeff(i);
                rem[top - dd + i] = &rem[top - dd + i] - &delta;
            }
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(LPoly::new(quot))
        } else {
            None
        }
    }
}

impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = rat_to_string(&c.abs());
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (k, mag.as_str()) {
                (0, m) => write!(f, "{m}")?,
                (1, "1") => write!(f, "L")?,
                (1, m) => write!(f, "{m}*L")?,
                (k, "1") => write!(f, "L^{k}")?,
                (k, m) => write!(f, "{m}*L^{k}")?,
            }
        }
        Ok(())
    }
}

/// Laurent polynomial in w over `Q[L]`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Gl2 {
    terms: BTreeMap<i64, LPoly>,
}

impl Gl2 {
    pub fn new(terms: BTreeMap<i64, LPoly>) -> Self {
        let mut out = Gl2 { terms };
        out.terms.retain(|_, p| !p.is_zero());
        out
    }

    pub fn terms(&self) -> &BTreeMap<i64, LPoly> {
        &self.terms
    }

    pub fn coeff(&self, w_exp: i64) -> LPoly {
        self.terms.get(&w_exp).cloned().unwrap_or_else(LPoly::zero)
    }

    fn set(&mut self, w_exp: i64, p: LPoly) {
        if p.is_zero() {
            self.terms.remove(&w_exp);
        } else {
            self.terms.insert(w_exp, p);
        }
    }

    fn accumulate(&mut self, w_exp: i64, p: &LPoly) {
        if p.is_zero() {
            return;
        }
        let cur = self.coeff(w_exp);
        self.set(w_exp, cur.add(p));
    }

    /// A single term c(L) * w^e.
    pub fn term(w_exp: i64, p: LPoly) -> Self {
        let mut out = Gl2::default();
        out.set(w_exp, p);
        out
    }

    /// The class L.
    pub fn l_class() -> Self {
        Gl2::term(0, LPoly::l_power(1))
    }

    /// The class H = w + L/w.
    pub fn h_class() -> Self {
        Gl2::h_n(1)
    }

    /// H_n = sum_{j=0}^{n} w^{n-2j} L^j.
    pub fn h_n(n: u32) -> Self {
        let mut out = Gl2::default();
        for j in 0..=n {
            out.set(n as i64 - 2 * j as i64, LPoly::l_power(j));
        }
        out
    }

    /// The torsor class 1 - H + L.
    pub fn torsor_class() -> Self {
        Gl2::one().sub(&Gl2::h_class()).add(&Gl2::l_class())
    }

    /// Coefficient of w^{-1}, as used for residues of f dw.
    pub fn res0(&self) -> LPoly {
        self.coeff(-1)
    }

    /// Multiply by w^k.
    pub fn mul_w(&self, k: i64) -> Self {
        Gl2 {
            terms: self.terms.iter().map(|(e, p)| (e + k, p.clone())).collect(),
        }
    }

    /// Invariance under w -> L/w: the coefficient of w^e L^a must equal the
    /// coefficient of w^{-e} L^{a+e}.
    pub fn is_weyl_symmetric(&self) -> bool {
        for (&e, p) in &self.terms {
            if e < 0 {
                continue;
            }
            let mirror = self.coeff(-e);
            // p at L^a should equal mirror at L^{a+e}.
            let len = p.coeffs().len().max(mirror.coeffs().len());
            for a in 0..len {
                let lhs = p.coeff(a);
                let rhs = if e >= 0 {
                    mirror.coeff(a + e as usize)
                } else {
                    Rat::zero()
                };
                if lhs != rhs {
                    return false;
                }
            }
            // Mirror entries below L^e must vanish.
            for a in 0..e as usize {
                if !mirror.coeff(a).is_zero() {
                    return false;
                }
            }
        }
        // Any negative exponent must have shown up as a mirror of a
        // nonnegative one.
        for (&e, p) in &self.terms {
            if e >= 0 {
                continue;
            }
            let mirror = self.coeff(-e);
            let shift = (-e) as usize;
            let len = p.coeffs().len().max(mirror.coeffs().len() + shift);
            for a in 0..len {
                let lhs = p.coeff(a);
                let rhs = if a >= shift {
                    mirror.coeff(a - shift)
                } else {
                    Rat::zero()
                };
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Expand in the H-basis: the unique L-polynomial combination
    /// sum c_n(L) H_n equal to a Weyl-symmetric element, by greedy peeling of
    /// the top w-power. Errors on asymmetric input.
    pub fn h_basis(&self) -> Result<HPoly> {
        if !self.is_weyl_symmetric() {
            return Err(Error::AsymmetricInput);
        }
        let mut rem = self.clone();
        let mut out = BTreeMap::new();
        while let Some((&top, _)) = rem.terms.iter().next_back() {
            debug_assert!(top >= 0, "symmetric element has nonneg top degree");
            let c = rem.coeff(top);
            rem = rem.sub(&Gl2::h_n(top as u32).scale_lpoly(&c));
            out.insert(top as u32, c);
        }
        Ok(HPoly::new(out))
    }

    pub fn scale_lpoly(&self, p: &LPoly) -> Self {
        if p.is_zero() {
            return Gl2::default();
        }
        Gl2 {
            terms: self.terms.iter().map(|(e, q)| (*e, q.mul(p))).collect(),
        }
    }

    /// Exact division: num = den * result with no remainder, via long
    /// division in w over `Q[L]`. Each leading-coefficient step must divide
    /// exactly in `Q[L]`; a nonzero remainder is an error, never a rounding.
    pub fn div_exact(&self, den: &Gl2) -> Result<Gl2> {
        if den.terms.is_empty() {
            return Err(Error::DivisionByZero);
        }
        if self.terms.is_empty() {
            return Ok(Gl2::default());
        }
        let den_top = *den.terms.keys().next_back().unwrap();
        let den_lead = den.coeff(den_top);
        let mut rem = self.clone();
        let mut quot = Gl2::default();
        loop {
            let Some((&top, _)) = rem.terms.iter().next_back() else {
                return Ok(quot);
            };
            let rem_bottom = *rem.terms.keys().next().unwrap();
            let den_bottom = *den.terms.keys().next().unwrap();
            if top - den_top < rem_bottom - den_bottom {
                // Degree window exhausted; anything left is a remainder.
                return Err(Error::NotDivisible {
                    context: "Laurent division in w",
                });
            }
            let q = rem
                .coeff(top)
                .div_exact(&den_lead)
                .ok_or(Error::NotDivisible {
                    context: "leading coefficient in Q[L]",
                })?;
            let shift = top - den_top;
            let piece = Gl2::term(shift, q);
            rem = rem.sub(&den.mul(&piece));
            quot = quot.add(&piece);
        }
    }
}

impl Gl2 {
    pub fn one() -> Self {
        Gl2::term(0, LPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_int(n: i64) -> Self {
        if n == 0 {
            return Gl2::default();
        }
        Gl2::term(0, LPoly::constant(rat_int(n)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, p) in &other.terms {
            out.accumulate(e, p);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, p) in &other.terms {
            out.accumulate(e, &p.neg());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Gl2::default();
        for (&e1, p1) in &self.terms {
            for (&e2, p2) in &other.terms {
                out.accumulate(e1 + e2, &p1.mul(p2));
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        Gl2 {
            terms: self.terms.iter().map(|(e, p)| (*e, p.neg())).collect(),
        }
    }

    pub fn scale(&self, q: &Rat) -> Self {
        if q.is_zero() {
            return Gl2::default();
        }
        Gl2 {
            terms: self.terms.iter().map(|(e, p)| (*e, p.scale(q))).collect(),
        }
    }
}

impl std::ops::Add<&Gl2> for Gl2 {
    type Output = Gl2;
    fn add(self, rhs: &Gl2) -> Gl2 {
        Gl2::add(&self, rhs)
    }
}

impl std::ops::Add for Gl2 {
    type Output = Gl2;
    fn add(self, rhs: Gl2) -> Gl2 {
        Gl2::add(&self, &rhs)
    }
}

impl std::ops::Sub<&Gl2> for Gl2 {
    type Output = Gl2;
    fn sub(self, rhs: &Gl2) -> Gl2 {
        Gl2::sub(&self, rhs)
    }
}

impl std::ops::Mul<&Gl2> for Gl2 {
    type Output = Gl2;
    fn mul(self, rhs: &Gl2) -> Gl2 {
        Gl2::mul(&self, rhs)
    }
}

impl std::ops::Mul for Gl2 {
    type Output = Gl2;
    fn mul(self, rhs: Gl2) -> Gl2 {
        Gl2::mul(&self, &rhs)
    }
}

impl std::ops::Neg for Gl2 {
    type Output = Gl2;
    fn neg(self) -> Gl2 {
        Gl2::neg(&self)
    }
}

impl Zero for Gl2 {
    fn zero() -> Self {
        Gl2::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Gl2 {
    fn one() -> Self {
        Gl2::one()
    }
}

impl CoeffRing for Gl2 {
    fn from_int(n: i64) -> Self {
        Gl2::from_int(n)
    }
    fn scale(&self, q: &Rat) -> Self {
        Gl2::scale(self, q)
    }
    fn is_integral(&self) -> bool {
        self.terms.values().all(LPoly::is_integral)
    }
}

impl LambdaRing for Gl2 {
    /// psi_d: w -> w^d, L -> L^d (the Adams operation on the character ring).
    fn adams(&self, d: u32) -> Self {
        let mut out = Gl2::default();
        for (&e, p) in &self.terms {
            out.accumulate(e * d as i64, &p.stretch(d));
        }
        out
    }
}

impl crate::ring::ExactDiv for Gl2 {
    fn exact_div(&self, den: &Self) -> Result<Self> {
        self.div_exact(den)
    }
}

impl fmt::Display for Gl2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, p) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e == 0 {
                write!(f, "({p})")?;
            } else {
                write!(f, "({p})*w^{e}")?;
            }
        }
        Ok(())
    }
}

/// Element of the representation ring presented on the H_n basis:
/// sum c_n(L) H_n.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HPoly {
    terms: BTreeMap<u32, LPoly>,
}

impl HPoly {
    pub fn new(terms: BTreeMap<u32, LPoly>) -> Self {
        let mut out = HPoly { terms };
        out.terms.retain(|_, p| !p.is_zero());
        out
    }

    pub fn terms(&self) -> &BTreeMap<u32, LPoly> {
        &self.terms
    }

    pub fn coeff(&self, n: u32) -> LPoly {
        self.terms.get(&n).cloned().unwrap_or_else(LPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(LPoly::is_integral)
    }

    /// Back to the Laurent presentation.
    pub fn expand(&self) -> Gl2 {
        let mut out = Gl2::default();
        for (&n, c) in &self.terms {
            out = out.add(&Gl2::h_n(n).scale_lpoly(c));
        }
        out
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&n, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*H_{n}")?;
        }
        Ok(())
    }
}

/// The Weyl pairing: -1/2 Res_0 [ H_k H_l (w - L/w)^2 dw/w ] = L^{k+1} delta_{kl},
/// asserted exactly; returns the diagonal value.
pub fn weyl_pair(k: u32, l: u32) -> LPoly {
    let kernel = Gl2::term(1, LPoly::one()).sub(&Gl2::term(-1, LPoly::l_power(1)));
    let integrand = Gl2::h_n(k)
        .mul(&Gl2::h_n(l))
        .mul(&kernel)
        .mul(&kernel)
        .mul_w(-1);
    let res = integrand.res0().scale(&crate::ring::rat(-1, 2));
    let expect = if k == l {
        LPoly::l_power(k + 1)
    } else {
        LPoly::zero()
    };
    assert_eq!(res, expect, "Weyl pairing identity failed at ({k},{l})");
    res
}

/// binom(x, n) = x(x-1)...(x-n+1)/n! over `Q[L][w^(+-1)]`.
pub fn binom_series(n: u32, x: &Gl2) -> Gl2 {
    let mut acc = Gl2::one();
    for i in 0..n {
        let shifted = x.sub(&Gl2::from_int(i as i64));
        acc = acc.mul(&shifted);
    }
    acc.scale(&Rat::new(1.into(), crate::numbers::factorial(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn lp(coeffs: &[i64]) -> LPoly {
        LPoly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn h_n_root_formula() {
        // H_2 = w^2 + L + L^2/w^2.
        let h2 = Gl2::h_n(2);
        assert_eq!(h2.coeff(2), lp(&[1]));
        assert_eq!(h2.coeff(0), lp(&[0, 1]));
        assert_eq!(h2.coeff(-2), lp(&[0, 0, 1]));
        assert!(h2.is_weyl_symmetric());
        // Ratio form: H_n (w - L/w) = w^{n+1} - (L/w)^{n+1}.
        for n in 0..=8u32 {
            let kernel = Gl2::term(1, LPoly::one()).sub(&Gl2::term(-1, LPoly::l_power(1)));
            let lhs = Gl2::h_n(n).mul(&kernel);
            let mut expect = Gl2::term(n as i64 + 1, LPoly::one());
            expect = expect.sub(&Gl2::term(-(n as i64) - 1, LPoly::l_power(n + 1)));
            assert_eq!(lhs, expect, "n = {n}");
        }
    }

    #[test]
    fn symmetry_detection() {
        assert!(Gl2::h_class().is_weyl_symmetric());
        assert!(Gl2::l_class().is_weyl_symmetric());
        assert!(Gl2::torsor_class().is_weyl_symmetric());
        // w alone is not symmetric.
        assert!(!Gl2::term(1, LPoly::one()).is_weyl_symmetric());
        // w + 1/w is not symmetric (needs the L twist).
        let bad = Gl2::term(1, LPoly::one()).add(&Gl2::term(-1, LPoly::one()));
        assert!(!bad.is_weyl_symmetric());
        assert!(bad.h_basis().is_err());
    }

    #[test]
    fn h_basis_examples() {
        // 1 - w - L/w + L = (1+L) H_0 - H_1.
        let e = Gl2::torsor_class();
        let h = e.h_basis().unwrap();
        assert_eq!(h.coeff(0), lp(&[1, 1]));
        assert_eq!(h.coeff(1), lp(&[-1]));
        // L = L H_0.
        let h = Gl2::l_class().h_basis().unwrap();
        assert_eq!(h.coeff(0), lp(&[0, 1]));
        // w^2 + L + L^2/w^2 = H_2.
        let x = Gl2::term(2, LPoly::one())
            .add(&Gl2::term(0, LPoly::l_power(1)))
            .add(&Gl2::term(-2, LPoly::l_power(2)));
        let h = x.h_basis().unwrap();
        assert_eq!(h.coeff(2), lp(&[1]));
        assert_eq!(h.terms().len(), 1);
    }

    #[test]
    fn h_basis_roundtrip_random() {
        // from_h . h_basis = id and h_basis . from_h = id on pseudorandom
        // inputs (degree up to 30 in L across terms).
        let mut state = 0x5a5a5a5au64;
        let mut rnd = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let mut terms = BTreeMap::new();
            for n in 0..=10u32 {
                if rnd() % 3 == 0 {
                    let c = LPoly::new(
                        (0..=(rnd() % 20) as usize)
                            .map(|_| rat_int((rnd() % 15) as i64 - 7))
                            .collect(),
                    );
                    if !c.is_zero() {
                        terms.insert(n, c);
                    }
                }
            }
            let hp = HPoly::new(terms);
            let back = hp.expand().h_basis().unwrap();
            assert_eq!(back, hp);
        }
    }

    #[test]
    fn clebsch_gordan_products() {
        // H_m H_n = sum_{j=0}^{min(m,n)} L^j H_{m+n-2j}, by direct expansion.
        for m in 0..=10u32 {
            for n in 0..=10u32 {
                let prod = Gl2::h_n(m).mul(&Gl2::h_n(n)).h_basis().unwrap();
                for j in 0..=m.min(n) {
                    assert_eq!(
                        prod.coeff(m + n - 2 * j),
                        LPoly::l_power(j),
                        "({m},{n},{j})"
                    );
                }
                assert_eq!(prod.terms().len() as u32, m.min(n) + 1);
            }
        }
    }

    #[test]
    fn adams_examples() {
        // psi_2(H) = w^2 + L^2/w^2 = H^2 - 2L = H_2 - L.
        let psi2h = Gl2::h_class().adams(2);
        let h2 = Gl2::h_class().mul(&Gl2::h_class());
        let expect = h2.sub(&Gl2::l_class().scale(&rat_int(2)));
        assert_eq!(psi2h, expect);
        assert_eq!(psi2h.h_basis().unwrap().coeff(2), lp(&[1]));
        assert_eq!(psi2h.h_basis().unwrap().coeff(0), lp(&[0, -1]));
        // psi_d(L) = L^d.
        assert_eq!(Gl2::l_class().adams(3), Gl2::term(0, LPoly::l_power(3)));
        // psi_3(1 - H + L) = 1 - w^3 - L^3/w^3 + L^3.
        let e3 = Gl2::torsor_class().adams(3);
        assert_eq!(e3.coeff(0), lp(&[1, 0, 0, 1]));
        assert_eq!(e3.coeff(3), lp(&[-1]));
        assert_eq!(
            e3.coeff(-3),
            LPoly::new(vec![rat_int(0), rat_int(0), rat_int(0), rat_int(-1)])
        );
        // Multiplicativity and symmetry preservation.
        let x = Gl2::h_n(3).add(&Gl2::l_class());
        assert_eq!(x.adams(2).adams(3), x.adams(6));
        assert!(x.adams(5).is_weyl_symmetric());
        let y = Gl2::h_n(2);
        assert_eq!(x.mul(&y).adams(4), x.adams(4).mul(&y.adams(4)));
    }

    #[test]
    fn adams_commutes_with_h_basis_roundtrip() {
        let x = Gl2::h_n(4)
            .scale_lpoly(&lp(&[1, 2]))
            .add(&Gl2::h_n(1).scale_lpoly(&lp(&[0, 0, 3])));
        let d = 3;
        let via_expand = x.adams(d).h_basis().unwrap().expand();
        assert_eq!(via_expand, x.adams(d));
    }

    #[test]
    fn res0_examples() {
        assert_eq!(Gl2::term(-1, LPoly::one()).res0(), LPoly::one());
        // res0(w - L/w) = -L.
        let kernel = Gl2::term(1, LPoly::one()).sub(&Gl2::term(-1, LPoly::l_power(1)));
        assert_eq!(kernel.res0(), LPoly::l_power(1).neg());
        assert_eq!(Gl2::h_n(4).res0(), LPoly::zero());
    }

    #[test]
    fn weyl_pairing_identity() {
        for k in 0..=10u32 {
            for l in 0..=10u32 {
                let v = weyl_pair(k, l);
                if k == l {
                    assert_eq!(v, LPoly::l_power(k + 1));
                } else {
                    assert!(v.is_zero());
                }
            }
        }
    }

    #[test]
    fn chebyshev_at_l_equal_one() {
        // At L = 1, H_n equals U_n(H/2): both satisfy the recurrence
        // X_{n+1} = H X_n - X_{n-1} with X_0 = 1, X_1 = H. Verify the
        // recurrence for the root formula at L = 1, n <= 10.
        for n in 1..=10u32 {
            let lhs = Gl2::h_n(n + 1);
            let rhs = Gl2::h_class()
                .mul(&Gl2::h_n(n))
                .sub(&Gl2::h_n(n - 1).scale_lpoly(&LPoly::l_power(1)));
            // H H_n - L H_{n-1} = H_{n+1} identically (Clebsch-Gordan), and
            // at L = 1 this is the Chebyshev recurrence.
            assert_eq!(lhs, rhs, "n = {n}");
            // Specialize L -> 1 and compare coefficient sums per w power.
            let spec = |g: &Gl2| -> BTreeMap<i64, Rat> {
                g.terms()
                    .iter()
                    .map(|(&e, p)| (e, p.eval(&Rat::one())))
                    .collect()
            };
            assert_eq!(spec(&lhs), spec(&rhs));
        }
    }

    #[test]
    fn binom_series_examples() {
        assert_eq!(binom_series(0, &Gl2::torsor_class()), Gl2::one());
        let x = Gl2::h_n(2);
        assert_eq!(binom_series(1, &x), x);
        // n=2 at the point w=1, L=1: 1 - w - L/w evaluates to -1 and
        // binom(-1,2) = 1.
        let arg = Gl2::one()
            .sub(&Gl2::term(1, LPoly::one()))
            .sub(&Gl2::term(-1, LPoly::l_power(1)));
        let b = binom_series(2, &arg);
        let total: Rat = b.terms().values().map(|p| p.eval(&Rat::one())).sum();
        assert_eq!(total, rat_int(1));
    }

    #[test]
    fn exact_division_examples() {
        let e = Gl2::torsor_class();
        // (L(1+L) - L*H_1) / (1 + L - H_1) = L.
        let num = Gl2::l_class()
            .mul(&Gl2::one().add(&Gl2::l_class()))
            .sub(&Gl2::l_class().mul(&Gl2::h_class()));
        let q = num.div_exact(&e).unwrap();
        assert_eq!(q, Gl2::l_class());
        // x / 1 = x.
        let x = Gl2::h_n(3).scale_lpoly(&lp(&[2, 0, 1]));
        assert_eq!(x.div_exact(&Gl2::one()).unwrap(), x);
        // (H_2 + L - (1+L) H_1) / (1 + L - H_1) = -H_1.
        let num = Gl2::h_n(2)
            .add(&Gl2::l_class())
            .sub(&Gl2::one().add(&Gl2::l_class()).mul(&Gl2::h_class()));
        let q = num.div_exact(&e).unwrap();
        assert_eq!(q, Gl2::h_class().neg());
        // Non-divisible input errors.
        assert!(Gl2::h_class().div_exact(&e).is_err());
        assert!(Gl2::one().div_exact(&Gl2::default()).is_err());
    }

    #[test]
    fn exact_division_roundtrip_random() {
        let mut state = 0x77777777u64;
        let mut rnd = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let e = Gl2::torsor_class();
        for _ in 0..200 {
            let mut q = Gl2::default();
            for exp in -3i64..=3 {
                if rnd() % 2 == 0 {
                    let c = LPoly::new(
                        (0..=(rnd() % 4) as usize)
                            .map(|_| rat((rnd() % 9) as i64 - 4, 1))
                            .collect(),
                    );
                    q = q.add(&Gl2::term(exp, c));
                }
            }
            let num = q.mul(&e);
            let back = num.div_exact(&e).unwrap();
            assert_eq!(back, q);
        }
    }
}
