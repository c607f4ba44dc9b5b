//! The target ring of the level-one answers: `Z[L]` plus formal cusp symbols
//! S_l of weight l - 1, together with the substitution computing compactly
//! supported cohomology of symmetric powers of the rank-two local system,
//! the level-one augmentation, and the Euler / weight specializations.

use crate::gl2::{HPoly, LPoly};
use crate::numbers::factorial;
use crate::ring::{int, is_integer, Error, Int, Rat, Result};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Dimension of the space of level-one cusp forms of weight l.
pub fn cusp_dim(l: u32) -> u32 {
    if l % 2 == 1 || l < 12 || l == 14 {
        return 0;
    }
    let q = l / 12;
    if l % 12 == 2 {
        q - 1
    } else {
        q
    }
}

/// Formal symbol appearing after the cohomology substitution, before the
/// level-one augmentation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum EsSym {
    /// No symbol: the `Z[L]` part.
    One,
    /// Eisenstein part of weight l.
    Eisenstein(u32),
    /// Cusp part of weight l.
    Cusp(u32),
}

/// `Z[L]`-linear combination of the symbols.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EsClass {
    terms: BTreeMap<(u32, EsSym), Int>,
}

impl EsClass {
    fn insert(&mut self, key: (u32, EsSym), c: Int) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, EsSym), Int> {
        &self.terms
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(*k, c.clone());
        }
        out
    }
}

/// The substitution H_n -> delta_{n,0}(L + 1) - Sigma_{n+2} - S_{n+2},
/// extended `Z[L]`-linearly over an H-basis element. The coefficients must be
/// integral.
pub fn es_substitute(h: &HPoly) -> Result<EsClass> {
    let mut out = EsClass::default();
    for (&n, c) in h.terms() {
        if !c.is_integral() {
            return Err(Error::IntegralityFailure {
                context: format!("H_{n} coefficient {c} is not in Z[L]"),
            });
        }
        for (a, q) in c.coeffs().iter().enumerate() {
            let v = q.numer().clone();
            if v.is_zero() {
                continue;
            }
            let a = a as u32;
            if n == 0 {
                out.insert((a + 1, EsSym::One), v.clone());
                out.insert((a, EsSym::One), v.clone());
            }
            out.insert((a, EsSym::Eisenstein(n + 2)), -v.clone());
            out.insert((a, EsSym::Cusp(n + 2)), -v);
        }
    }
    Ok(out)
}

/// A monomial of the level-one ring: a power of L carrying at most one cusp
/// symbol. The degree <= 1 restriction on cusp symbols is structural here; a
/// pipeline that tried to multiply two cusp-bearing classes fails loudly.
pub type MotiveKey = (u32, Option<u32>);

/// Element of `Z[L] + sum_l Z[L] S_l`, with S_l of vanishing cusp dimension
/// normalized away.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MotiveClass {
    terms: BTreeMap<MotiveKey, Int>,
}

impl MotiveClass {
    pub fn zero() -> Self {
        MotiveClass::default()
    }

    pub fn one() -> Self {
        MotiveClass::from_l_power(0)
    }

    pub fn from_l_power(k: u32) -> Self {
        let mut out = MotiveClass::default();
        out.insert((k, None), Int::one());
        out
    }

    pub fn from_int(n: i64) -> Self {
        let mut out = MotiveClass::default();
        out.insert((0, None), int(n));
        out
    }

    /// The cusp symbol S_l (zero when dim S_l = 0).
    pub fn cusp_symbol(l: u32) -> Self {
        let mut out = MotiveClass::default();
        out.insert((0, Some(l)), Int::one());
        out
    }

    /// Integral polynomial part of `Z[L]` as a class.
    pub fn from_lpoly(p: &LPoly) -> Result<Self> {
        if !p.is_integral() {
            return Err(Error::IntegralityFailure {
                context: format!("{p} is not in Z[L]"),
            });
        }
        let mut out = MotiveClass::default();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.insert((k as u32, None), c.numer().clone());
        }
        Ok(out)
    }

    fn insert(&mut self, key: MotiveKey, c: Int) {
        if c.is_zero() {
            return;
        }
        if let Some(l) = key.1 {
            // Weight-l cusp symbols with no cusp forms are zero.
            if cusp_dim(l) == 0 {
                return;
            }
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<MotiveKey, Int> {
        &self.terms
    }

    pub fn coefficient(&self, key: &MotiveKey) -> Int {
        self.terms.get(key).cloned().unwrap_or_else(Int::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(*k, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MotiveClass {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Int) -> Self {
        if c.is_zero() {
            return MotiveClass::default();
        }
        MotiveClass {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Product; panics if both factors carry cusp symbols (no output of the
    /// pipelines does, so this signals an upstream bug, not bad user input).
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MotiveClass::default();
        for ((l1, s1), c1) in &self.terms {
            for ((l2, s2), c2) in &other.terms {
                let sym = match (s1, s2) {
                    (None, None) => None,
                    (Some(l), None) | (None, Some(l)) => Some(*l),
                    (Some(_), Some(_)) => {
                        panic!("product of two cusp-bearing classes: pipeline bug")
                    }
                };
                out.insert((l1 + l2, sym), c1 * c2);
            }
        }
        out
    }

    /// Does the class lie in `Z[L]` (no cusp symbols)?
    pub fn is_tate(&self) -> bool {
        self.terms.keys().all(|(_, s)| s.is_none())
    }
}

impl fmt::Display for MotiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Pure powers of L in descending degree, then cusp terms.
        let mut keys: Vec<&MotiveKey> = self.terms.keys().collect();
        keys.sort_by(|a, b| (a.1, std::cmp::Reverse(a.0)).cmp(&(b.1, std::cmp::Reverse(b.0))));
        let mut first = true;
        for key in keys {
            let c = &self.terms[key];
            let mag = c.abs();
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
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || (key.0 == 0 && key.1.is_none()) {
                parts.push(mag.to_string());
            }
            match key.0 {
                0 => {}
                1 => parts.push("L".to_string()),
                k => parts.push(format!("L^{k}")),
            }
            if let Some(l) = key.1 {
                parts.push(format!("S{l}"));
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// The level-one augmentation: Eisenstein symbols of even weight map to 1,
/// odd weight to 0; cusp symbols survive as S_l (and vanish when
/// dim S_l = 0).
pub fn augment_level1(x: &EsClass) -> MotiveClass {
    let mut out = MotiveClass::default();
    for ((l_exp, sym), c) in x.terms() {
        match sym {
            EsSym::One => out.insert((*l_exp, None), c.clone()),
            EsSym::Eisenstein(l) => {
                if l % 2 == 0 {
                    out.insert((*l_exp, None), c.clone());
                }
            }
            EsSym::Cusp(l) => out.insert((*l_exp, Some(*l)), c.clone()),
        }
    }
    out
}

/// Substitute and augment in one step.
pub fn level_one_class(h: &HPoly) -> Result<MotiveClass> {
    Ok(augment_level1(&es_substitute(h)?))
}

/// Euler specialization: L -> 1 and S_l -> 2 dim S_l.
pub fn euler_specialize(x: &MotiveClass) -> Int {
    let mut acc = Int::zero();
    for ((_, sym), c) in x.terms() {
        match sym {
            None => acc += c,
            Some(l) => acc += c * int(2 * cusp_dim(*l) as i64),
        }
    }
    acc
}

/// Weight polynomial: L -> t^2 and S_l -> 2 dim S_l t^{l-1}; returns dense
/// coefficients of 1, t, t^2, ...
pub fn hodge_specialize(x: &MotiveClass) -> Vec<Int> {
    let mut out: Vec<Int> = Vec::new();
    let mut bump = |deg: usize, c: Int| {
        if out.len() <= deg {
            out.resize(deg + 1, Int::zero());
        }
        out[deg] += c;
    };
    for ((l_exp, sym), c) in x.terms() {
        match sym {
            None => bump(2 * *l_exp as usize, c.clone()),
            Some(l) => bump(
                2 * *l_exp as usize + (*l as usize - 1),
                c * int(2 * cusp_dim(*l) as i64),
            ),
        }
    }
    while out.last().map_or(false, |c| c.is_zero()) {
        out.pop();
    }
    out
}

/// Workspace ring for residue integrands: Laurent polynomials in L with at
/// most one cusp symbol per monomial and rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MotiveLaurent {
    terms: BTreeMap<(i64, Option<u32>), Rat>,
}

impl MotiveLaurent {
    pub fn zero() -> Self {
        MotiveLaurent::default()
    }

    pub fn one() -> Self {
        MotiveLaurent::l_power(0)
    }

    /// L^k for any integer k.
    pub fn l_power(k: i64) -> Self {
        let mut out = MotiveLaurent::default();
        out.insert((k, None), Rat::one());
        out
    }

    /// S_l L^k (kept formal; not normalized here, so the kernel can carry
    /// every symbol and the final conversion performs the dimension check).
    pub fn cusp_l_power(l: u32, k: i64) -> Self {
        let mut out = MotiveLaurent::default();
        out.insert((k, Some(l)), Rat::one());
        out
    }

    pub fn from_lpoly(p: &LPoly) -> Self {
        let mut out = MotiveLaurent::default();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.insert((k as i64, None), c.clone());
        }
        out
    }

    fn insert(&mut self, key: (i64, Option<u32>), c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<(i64, Option<u32>), Rat> {
        &self.terms
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MotiveLaurent {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MotiveLaurent::default();
        for ((l1, s1), c1) in &self.terms {
            for ((l2, s2), c2) in &other.terms {
                let sym = match (s1, s2) {
                    (None, None) => None,
                    (Some(l), None) | (None, Some(l)) => Some(*l),
                    (Some(_), Some(_)) => {
                        panic!("product of two cusp-bearing classes: pipeline bug")
                    }
                };
                out.insert((l1 + l2, sym), c1 * c2);
            }
        }
        out
    }

    /// Materialize as an element of the level-one ring: requires nonnegative
    /// L powers and integer coefficients; applies the cusp-dimension
    /// normalization.
    pub fn into_motive_class(&self) -> Result<MotiveClass> {
        let mut out = MotiveClass::default();
        for ((l_exp, sym), c) in &self.terms {
            if *l_exp < 0 {
                return Err(Error::IntegralityFailure {
                    context: format!("negative power L^{l_exp} in residue output"),
                });
            }
            if !is_integer(c) {
                return Err(Error::IntegralityFailure {
                    context: format!("non-integer coefficient {c} in residue output"),
                });
            }
            out.insert((*l_exp as u32, *sym), c.numer().clone());
        }
        Ok(out)
    }

    pub fn scale(&self, q: &Rat) -> Self {
        if q.is_zero() {
            return MotiveLaurent::default();
        }
        MotiveLaurent {
            terms: self.terms.iter().map(|(k, c)| (*k, c * q)).collect(),
        }
    }
}

/// chi of the base level-one curve with coefficients in H_{2k}:
/// 2 delta_{k,0} - 1 - 2 dim S_{2k+2}; handy for the quotient Euler series.
pub fn euler_of_even_symmetric_power(k: u32) -> Int {
    let base = if k == 0 { 2 } else { 0 };
    int(base - 1 - 2 * cusp_dim(2 * k + 2) as i64)
}

/// n!-normalized Euler value (-1)^n (n-1)!/12 as an exact integer, defined
/// for n >= 5 where the division is exact... and asserted exact.
pub fn expected_euler_law(n: u32) -> Int {
    assert!(n >= 5);
    let num = factorial(n - 1);
    let (q, r) = num_integer::Integer::div_rem(&num, &int(12));
    assert!(r.is_zero(), "(n-1)! not divisible by 12 for n = {n}");
    if n % 2 == 0 {
        q
    } else {
        -q
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl2::Gl2;
    use crate::ring::rat_int;

    #[test]
    fn cusp_dimensions() {
        assert_eq!(cusp_dim(12), 1);
        assert_eq!(cusp_dim(10), 0);
        assert_eq!(cusp_dim(14), 0);
        assert_eq!(cusp_dim(16), 1);
        assert_eq!(cusp_dim(18), 1);
        assert_eq!(cusp_dim(20), 1);
        assert_eq!(cusp_dim(22), 1);
        assert_eq!(cusp_dim(24), 2);
        assert_eq!(cusp_dim(26), 1);
        for l in (1..60).step_by(2) {
            assert_eq!(cusp_dim(l), 0, "odd weight {l}");
        }
        // Structure oracle: cusp forms are Delta times modular forms of
        // weight l - 12, and the form ring is free on the weight-4 and
        // weight-6 generators, so dim S_l = #{(a,b) >= 0 : 4a + 6b = l-12}.
        for l in (4..=60u32).step_by(2) {
            let mut count = 0u32;
            if l >= 12 {
                let target = l - 12;
                for b in 0..=(target / 6) {
                    if (target - 6 * b) % 4 == 0 {
                        count += 1;
                    }
                }
            }
            assert_eq!(cusp_dim(l), count, "weight {l}");
        }
    }

    #[test]
    fn substitution_examples() {
        // H_0 -> (L+1) - Sigma_2 - S_2.
        let h0 = Gl2::h_n(0).h_basis().unwrap();
        let es = es_substitute(&h0).unwrap();
        assert_eq!(es.terms()[&(1, EsSym::One)], int(1));
        assert_eq!(es.terms()[&(0, EsSym::One)], int(1));
        assert_eq!(es.terms()[&(0, EsSym::Eisenstein(2))], int(-1));
        assert_eq!(es.terms()[&(0, EsSym::Cusp(2))], int(-1));
        // H_1 -> -Sigma_3 - S_3.
        let h1 = Gl2::h_n(1).h_basis().unwrap();
        let es = es_substitute(&h1).unwrap();
        assert_eq!(es.terms().len(), 2);
        assert_eq!(es.terms()[&(0, EsSym::Eisenstein(3))], int(-1));
        // L H_0 -> L(L+1) - L Sigma_2 - L S_2.
        let lh0 = Gl2::l_class().h_basis().unwrap();
        let es = es_substitute(&lh0).unwrap();
        assert_eq!(es.terms()[&(2, EsSym::One)], int(1));
        assert_eq!(es.terms()[&(1, EsSym::One)], int(1));
        assert_eq!(es.terms()[&(1, EsSym::Eisenstein(2))], int(-1));
    }

    #[test]
    fn augmentation_examples() {
        // H_0 augments to L.
        let m = level_one_class(&Gl2::h_n(0).h_basis().unwrap()).unwrap();
        assert_eq!(m, MotiveClass::from_l_power(1));
        // Odd weights die.
        let m = level_one_class(&Gl2::h_n(1).h_basis().unwrap()).unwrap();
        assert!(m.is_zero());
        // H_10 -> -1 - S_12.
        let m = level_one_class(&Gl2::h_n(10).h_basis().unwrap()).unwrap();
        let expect = MotiveClass::from_int(-1).sub(&MotiveClass::cusp_symbol(12));
        assert_eq!(m, expect);
        // H_2 -> -1 - S_4 = -1 since dim S_4 = 0.
        let m = level_one_class(&Gl2::h_n(2).h_basis().unwrap()).unwrap();
        assert_eq!(m, MotiveClass::from_int(-1));
        // Unit-section sanity: L^k H_0 -> L^{k+1}.
        for k in 0..6u32 {
            let x = Gl2::h_n(0).scale_lpoly(&LPoly::l_power(k));
            let m = level_one_class(&x.h_basis().unwrap()).unwrap();
            assert_eq!(m, MotiveClass::from_l_power(k + 1), "k = {k}");
        }
    }

    #[test]
    fn euler_specialization_examples() {
        // Row five of the table: L^5 - 5 L^3 - L^2 + 15 L - 12 -> -2.
        let mut m = MotiveClass::from_l_power(5);
        m = m.sub(&MotiveClass::from_l_power(3).scale(&int(5)));
        m = m.sub(&MotiveClass::from_l_power(2));
        m = m.add(&MotiveClass::from_l_power(1).scale(&int(15)));
        m = m.sub(&MotiveClass::from_int(12));
        assert_eq!(euler_specialize(&m), int(-2));
        assert_eq!(euler_specialize(&MotiveClass::from_l_power(1)), int(1));
        let x = MotiveClass::from_int(-1).sub(&MotiveClass::cusp_symbol(12));
        assert_eq!(euler_specialize(&x), int(-3));
    }

    #[test]
    fn hodge_specialization_examples() {
        assert_eq!(
            hodge_specialize(&MotiveClass::from_l_power(1)),
            vec![int(0), int(0), int(1)]
        );
        let s12 = MotiveClass::cusp_symbol(12);
        let mut expect = vec![int(0); 12];
        expect[11] = int(2);
        assert_eq!(hodge_specialize(&s12), expect);
        let x = MotiveClass::from_l_power(2).add(&MotiveClass::from_int(3));
        assert_eq!(
            hodge_specialize(&x),
            vec![int(3), int(0), int(0), int(0), int(1)]
        );
        // t = 1 recovers the Euler specialization.
        let y = MotiveClass::from_l_power(4)
            .scale(&int(7))
            .sub(&MotiveClass::cusp_symbol(16).scale(&int(3)))
            .add(&MotiveClass::from_int(-5));
        let at_one: Int = hodge_specialize(&y).into_iter().sum();
        assert_eq!(at_one, euler_specialize(&y));
    }

    #[test]
    fn substitution_is_linear_and_injective_on_distinct_indices() {
        use crate::gl2::LPoly;
        use std::collections::BTreeMap;
        // Z[L]-linearity: es(a H_m + b H_n) = es(a H_m) + es(b H_n).
        let mut terms = BTreeMap::new();
        terms.insert(3u32, LPoly::l_power(2));
        terms.insert(6u32, LPoly::new(vec![rat_int(-4), rat_int(1)]));
        let combined = es_substitute(&HPoly::new(terms.clone())).unwrap();
        let mut separate = EsClass::default();
        for (n, c) in terms {
            let mut single = BTreeMap::new();
            single.insert(n, c);
            separate = separate.add(&es_substitute(&HPoly::new(single)).unwrap());
        }
        assert_eq!(combined, separate);
        // Distinct H-indices produce independent symbol markers.
        for a in 0..8u32 {
            for b in 0..a {
                let ea = es_substitute(&Gl2::h_n(a).h_basis().unwrap()).unwrap();
                let eb = es_substitute(&Gl2::h_n(b).h_basis().unwrap()).unwrap();
                assert_ne!(ea, eb, "H_{a} vs H_{b}");
                assert!(ea.terms().contains_key(&(0, EsSym::Cusp(a + 2))));
                assert!(!eb.terms().contains_key(&(0, EsSym::Cusp(a + 2))));
            }
        }
    }

    #[test]
    fn hodge_equals_euler_at_t_one_randomized() {
        let mut state = 0x51ed_2706u64;
        let mut rnd = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let mut x = MotiveClass::zero();
            for k in 0..6u32 {
                let c = (rnd() % 21) as i64 - 10;
                x = x.add(&MotiveClass::from_l_power(k).scale(&int(c)));
            }
            for l in [12u32, 16, 18] {
                if rnd() % 2 == 0 {
                    let c = (rnd() % 7) as i64 - 3;
                    x = x.add(&MotiveClass::cusp_symbol(l).scale(&int(c)));
                }
            }
            let at_one: Int = hodge_specialize(&x).into_iter().sum();
            assert_eq!(at_one, euler_specialize(&x));
        }
    }

    #[test]
    fn cusp_normalization_is_structural() {
        // S_4 has dimension zero and vanishes on construction.
        assert!(MotiveClass::cusp_symbol(4).is_zero());
        assert!(!MotiveClass::cusp_symbol(12).is_zero());
    }

    #[test]
    fn motive_laurent_roundtrip() {
        let x = MotiveLaurent::l_power(-3)
            .mul(&MotiveLaurent::l_power(5))
            .add(&MotiveLaurent::cusp_l_power(12, 0).scale(&rat_int(-1)));
        let m = x.into_motive_class().unwrap();
        let expect = MotiveClass::from_l_power(2).sub(&MotiveClass::cusp_symbol(12));
        assert_eq!(m, expect);
        // Negative powers refuse to materialize.
        assert!(MotiveLaurent::l_power(-1).into_motive_class().is_err());
        // Non-integer coefficients refuse to materialize.
        let bad = MotiveLaurent::l_power(0).scale(&crate::ring::rat(1, 2));
        assert!(bad.into_motive_class().is_err());
    }

    #[test]
    fn euler_law_values() {
        assert_eq!(expected_euler_law(5), int(-2));
        assert_eq!(expected_euler_law(6), int(10));
        assert_eq!(expected_euler_law(11), int(-302_400));
        assert_eq!(expected_euler_law(12), int(3_326_400));
    }

    #[test]
    fn display_format() {
        let x = MotiveClass::from_l_power(2).sub(&MotiveClass::from_int(1));
        assert_eq!(x.to_string(), "L^2 - 1");
        let y = MotiveClass::from_int(-1).sub(&MotiveClass::cusp_symbol(12));
        assert_eq!(y.to_string(), "-1 - S12");
    }
}
