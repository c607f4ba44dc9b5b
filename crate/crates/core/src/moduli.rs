//! End-to-end computation of the equivariant characteristics of the moduli
//! spaces of n-pointed genus-one curves: the level-N table over the
//! representation ring, the level-one table with its Euler column, the
//! closed residue form, the non-equivariant residue form, the residue
//! verification over Q(zeta_12), and the symmetric-quotient series.
//!
//! Three independent routes to the same classes are computed and compared
//! exactly: substitution through the H-basis, residue extraction against the
//! weight kernel, and (for the non-equivariant column) the binomial residue
//! formula. All comparisons are exact equality of canonical forms.

use crate::configspace::torsor_serre;
use crate::gl2::{binom_series, Gl2, HPoly, LPoly};
use crate::motive::{
    augment_level1, es_substitute, euler_of_even_symmetric_power, euler_specialize,
    expected_euler_law, level_one_class, MotiveClass, MotiveLaurent,
};
use crate::numbers::{cyclo_eval, divisors, factorial, mobius, CycloNum};
use crate::partitions::IntPartition;
use crate::ring::{int, rat, rat_int, CoeffRing, Error, Int, LambdaRing, Rat, Result};
use crate::symfun::SymSeries;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Default truncation: keeps the largest Schur decomposition within the
/// 77 partitions of 12, and includes the first cusp-form-bearing case.
pub const DEFAULT_BOUND: u32 = 12;

/// One degree of the level-N series, Schur-indexed with H-basis entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelRow {
    pub n: u32,
    pub entries: BTreeMap<IntPartition, HPoly>,
}

/// One degree of the level-one table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct M1nRow {
    pub n: u32,
    pub equivariant: BTreeMap<IntPartition, MotiveClass>,
    pub nonequivariant: MotiveClass,
    pub euler: Int,
}

/// The shared torsor series over the representation ring, with both
/// assemblies cross-checked: the Exp/Log torsor route and the displayed
/// Adams-weighted product route.
pub fn torsor_series_gl2(n_max: u32) -> Result<Arc<SymSeries<Gl2>>> {
    if n_max > DEFAULT_BOUND {
        return Err(Error::SizeLimit {
            what: "table truncation degree",
            requested: n_max as usize,
            max: DEFAULT_BOUND as usize,
        });
    }
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<SymSeries<Gl2>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = cache.lock().unwrap().get(&n_max) {
        return Ok(found.clone());
    }
    let e = Gl2::torsor_class();
    // Route one: (Exp(Log(1+p1) e) - 1)/e.
    let route1 = torsor_serre(&e, n_max)?;
    // Route two: { prod_k (1+p_k)^{(1/k) sum_{d|k} mu(k/d) psi_d(e)} - 1 }/e,
    // assembled as exp of Adams-weighted logarithms.
    let mut arg = SymSeries::<Gl2>::zero(n_max);
    for k in 1..=n_max {
        let mut exponent = Gl2::default();
        for d in divisors(k) {
            let mu = mobius(k / d);
            if mu.is_zero() {
                continue;
            }
            exponent = exponent.add(&e.adams(d).scale(&Rat::from_integer(mu)));
        }
        let exponent = exponent.scale(&rat(1, k as i64));
        if exponent.is_zero() {
            continue;
        }
        // log(1 + p_k) = sum_l (-1)^{l-1} p_k^l / l.
        let mut l = 1u32;
        while k * l <= n_max {
            let c = rat(if l % 2 == 1 { 1 } else { -1 }, l as i64);
            let lambda = IntPartition::new(vec![k; l as usize]);
            arg = arg.add(&SymSeries::monomial(lambda, exponent.scale(&c), n_max));
            l += 1;
        }
    }
    let numerator = arg.exp_op()?.sub(&SymSeries::one(n_max));
    let mut route2 = SymSeries::zero(n_max);
    for (lambda, c) in numerator.terms() {
        route2 = route2.add(&SymSeries::monomial(
            lambda.clone(),
            c.div_exact(&e)?,
            n_max,
        ));
    }
    if route1 != route2 {
        return Err(Error::CrossCheckFailure {
            context: "torsor route vs Adams-product route for the level-N series".into(),
        });
    }
    let arc = Arc::new(route1);
    cache.lock().unwrap().insert(n_max, arc.clone());
    Ok(arc)
}

/// The level-N table: for each n, the Schur decomposition of the degree-n
/// part with every coefficient expanded in the H-basis over `Z[L]`.
pub fn level_n_series(n_max: u32) -> Result<Vec<LevelRow>> {
    let series = torsor_series_gl2(n_max)?;
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let mut entries = BTreeMap::new();
        for (lambda, c) in series.schur_coefficients(n) {
            let h = c.h_basis()?;
            if !h.is_integral() {
                return Err(Error::IntegralityFailure {
                    context: format!("level-N row {n}, Schur coefficient {lambda}"),
                });
            }
            entries.insert(lambda, h);
        }
        rows.push(LevelRow { n, entries });
    }
    Ok(rows)
}

/// The level-one table: substitution then augmentation applied to the
/// level-N rows; the non-equivariant column is computed both from the
/// dimension-weighted Schur sum and from the p_1-power coefficient, and the
/// two must agree.
pub fn m1n_table(n_max: u32) -> Result<Vec<M1nRow>> {
    let series = torsor_series_gl2(n_max)?;
    let level = level_n_series(n_max)?;
    let table = |n: u32| crate::characters::char_table(n);
    let mut rows = Vec::new();
    for row in &level {
        let n = row.n;
        let mut equivariant = BTreeMap::new();
        for (lambda, h) in &row.entries {
            let m = augment_level1(&es_substitute(h)?);
            if !m.is_zero() {
                equivariant.insert(lambda.clone(), m);
            }
        }
        // Dimension-weighted sum.
        let t = table(n);
        let mut nonequivariant = MotiveClass::zero();
        for (lambda, m) in &equivariant {
            nonequivariant = nonequivariant.add(&m.scale(t.dimension(lambda)));
        }
        // Independent extraction: n! times the p_1^n coefficient.
        let direct = series
            .p1_power_coefficient(n)
            .scale(&Rat::from_integer(factorial(n)));
        let direct = level_one_class(&direct.h_basis()?)?;
        if direct != nonequivariant {
            return Err(Error::CrossCheckFailure {
                context: format!("non-equivariant column at n = {n}"),
            });
        }
        let euler = euler_specialize(&nonequivariant);
        rows.push(M1nRow {
            n,
            equivariant,
            nonequivariant,
            euler,
        });
    }
    Ok(rows)
}

/// Laurent polynomial in w with mixed L/cusp coefficients; the residue
/// workspace for the closed form.
#[derive(Clone, Debug, Default)]
struct OmegaMotive {
    terms: BTreeMap<i64, MotiveLaurent>,
}

impl OmegaMotive {
    fn from_gl2(x: &Gl2) -> Self {
        OmegaMotive {
            terms: x
                .terms()
                .iter()
                .map(|(&e, p)| (e, MotiveLaurent::from_lpoly(p)))
                .collect(),
        }
    }

    fn term(w_exp: i64, c: MotiveLaurent) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w_exp, c);
        }
        OmegaMotive { terms }
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            let cur = out.terms.remove(&e).unwrap_or_default();
            let sum = cur.add(c);
            if !sum.is_zero() {
                out.terms.insert(e, sum);
            }
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = OmegaMotive::default();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out = out.add(&OmegaMotive::term(e1 + e2, c1.mul(c2)));
            }
        }
        out
    }

    fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    fn res0(&self) -> MotiveLaurent {
        self.terms.get(&-1).cloned().unwrap_or_default()
    }
}

/// The weight kernel sum_{k=1}^{k_max} (S_{2k+2} + 1) L^{-(2k+1)} w^{2k} - 1.
fn es_kernel(k_max: u32) -> OmegaMotive {
    let mut out = OmegaMotive::term(0, MotiveLaurent::one().neg());
    for k in 1..=k_max {
        let weight = 2 * k + 2;
        let c = MotiveLaurent::cusp_l_power(weight, -(2 * k as i64 + 1))
            .add(&MotiveLaurent::l_power(-(2 * k as i64 + 1)));
        out = out.add(&OmegaMotive::term(2 * k as i64, c));
    }
    out
}

/// Residue of f against the weight kernel: Res_0 [ f (kernel) (w - L/w) dw ],
/// materialized in the level-one ring.
fn kernel_residue(f: &Gl2) -> Result<MotiveClass> {
    kernel_residue_rational(f)?.into_motive_class()
}

/// One degree of the closed-form series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormRow {
    pub n: u32,
    pub entries: BTreeMap<IntPartition, MotiveClass>,
}

/// The closed residue form of the level-one series: residues of the torsor
/// series' Schur coefficients against the weight kernel. Independent of the
/// H-basis substitution route from the Laurent coefficients onward.
pub fn closed_form_series(n_max: u32) -> Result<Vec<ClosedFormRow>> {
    let series = torsor_series_gl2(n_max)?;
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let mut entries = BTreeMap::new();
        for (lambda, c) in series.schur_coefficients(n) {
            let m = kernel_residue(&c)?;
            if !m.is_zero() {
                entries.insert(lambda, m);
            }
        }
        rows.push(ClosedFormRow { n, entries });
    }
    Ok(rows)
}

/// The non-equivariant residue formula: the class of the (m+1)-pointed space
/// is m! Res_0 [ binom(L - w - L/w, m) (kernel) (w - L/w) dw ]. Returns the
/// classes for n = 1..=n_max.
pub fn nonequi_series(n_max: u32) -> Result<Vec<MotiveClass>> {
    let arg = Gl2::l_class().sub(&Gl2::h_class());
    let mut out = Vec::new();
    for n in 1..=n_max {
        let m = n - 1;
        let b = binom_series(m, &arg);
        let res = kernel_residue_rational(&b)?;
        let scaled = res.scale(&Rat::from_integer(factorial(m)));
        out.push(scaled.into_motive_class()?);
    }
    Ok(out)
}

/// Residue against the weight kernel in the rational workspace (integrands
/// may carry factorial denominators mid-flight). The kernel power w^{2k}
/// pairs only with w^{-2k-1}, so the truncation bound comes from the lowest
/// w-exponent actually present in the integrand.
fn kernel_residue_rational(f: &Gl2) -> Result<MotiveLaurent> {
    let pairing = Gl2::term(1, LPoly::one()).sub(&Gl2::term(-1, LPoly::l_power(1)));
    let base = OmegaMotive::from_gl2(&f.mul(&pairing));
    let k_max = match base.min_exp() {
        Some(m) if m < -2 => ((-m - 1) / 2) as u32,
        _ => 0,
    };
    Ok(base.mul(&es_kernel(k_max)).res0())
}

/// A rational function in one variable over Q, reduced to lowest terms on
/// construction (monic gcd divided out of both sides). Coefficient vectors
/// are dense, constant term first. This is the container for the Euler
/// integrand whose circle residues are verified exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalForm {
    num: Vec<Rat>,
    den: Vec<Rat>,
}

fn poly_trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_rem(mut a: Vec<Rat>, b: &[Rat]) -> Vec<Rat> {
    let db = b.len() - 1;
    let lead = b[db].clone();
    while a.len() > db {
        let top = a.len() - 1;
        let q = &a[top] / &lead;
        for i in 0..=db {
            let delta = &q * &b[i];
            a[top - db + i] = &a[top - db + i] - &delta;
        }
        a = poly_trim(a);
        if a.is_empty() {
            break;
        }
    }
    a
}

fn poly_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut x = poly_trim(a.to_vec());
    let mut y = poly_trim(b.to_vec());
    while !y.is_empty() {
        let r = poly_rem(x, &y);
        x = y;
        y = r;
    }
    // Normalize monic.
    if let Some(lead) = x.last().cloned() {
        for c in x.iter_mut() {
            *c = &*c / &lead;
        }
    }
    x
}

fn poly_div_exact(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut rem = poly_trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut quot = vec![Rat::zero(); rem.len()];
    while rem.len() > db {
        let top = rem.len() - 1;
        let q = &rem[top] / &lead;
        quot[top - db] = q.clone();
        for i in 0..=db {
            let delta = &q * &b[i];
            rem[top - db + i] = &rem[top - db + i] - &delta;
        }
        rem = poly_trim(rem);
        if rem.is_empty() {
            break;
        }
    }
    assert!(rem.is_empty(), "gcd division must be exact");
    poly_trim(quot)
}

impl RationalForm {
    pub fn new(num: Vec<Rat>, den: Vec<Rat>) -> Self {
        let num = poly_trim(num);
        let den = poly_trim(den);
        assert!(!den.is_empty(), "denominator must be nonzero");
        if num.is_empty() {
            return RationalForm { num, den: vec![Rat::one()] };
        }
        let g = poly_gcd(&num, &den);
        if g.len() > 1 {
            RationalForm { num: poly_div_exact(&num, &g), den: poly_div_exact(&den, &g) }
        } else {
            RationalForm { num, den }
        }
    }

    pub fn numerator(&self) -> &[Rat] {
        &self.num
    }

    pub fn denominator(&self) -> &[Rat] {
        &self.den
    }

    fn den_derivative(&self) -> Vec<Rat> {
        self.den
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat_int(k as i64))
            .collect()
    }

    /// Is z a simple pole: den(z) = 0 with den'(z) != 0 and num(z) given a
    /// reduced representative (so no cancellation hides a higher order)?
    pub fn is_simple_pole(&self, z: &CycloNum) -> bool {
        cyclo_eval(&self.den, z).is_zero() && !cyclo_eval(&self.den_derivative(), z).is_zero()
    }

    /// Residue at a verified simple pole: num(z)/den'(z).
    pub fn residue_at_simple_pole(&self, z: &CycloNum) -> Result<CycloNum> {
        if !self.is_simple_pole(z) {
            return Err(Error::CrossCheckFailure {
                context: "residue requested at a non-simple pole".into(),
            });
        }
        let dd = cyclo_eval(&self.den_derivative(), z);
        Ok(cyclo_eval(&self.num, z).mul(&dd.invert()?))
    }
}

/// The Euler integrand as a single reduced rational form:
/// (1 - w^2 - 2w^4 - w^6 + w^8) / (w (1 + w^2)(1 - w^6)).
pub fn euler_integrand() -> RationalForm {
    let num: Vec<Rat> = [1i64, 0, -1, 0, -2, 0, -1, 0, 1]
        .iter()
        .map(|&c| rat_int(c))
        .collect();
    // w (1 + w^2)(1 - w^6) = w + w^3 - w^7 - w^9.
    let den: Vec<Rat> = [0i64, 1, 0, 1, 0, 0, 0, -1, 0, -1]
        .iter()
        .map(|&c| rat_int(c))
        .collect();
    RationalForm::new(num, den)
}

/// Report of the residue verification and the Euler-characteristic law.
#[derive(Clone, Debug)]
pub struct DonReport {
    /// (zeta-power of the pole, residue, expected residue).
    pub residues: Vec<(i64, Rat, Rat)>,
    pub poles_simple: bool,
    /// Binomial factor vanishes at every listed pole except 1 for n >= 4,
    /// and is nonzero at 1.
    pub binomial_vanishing: bool,
    /// (n, computed Euler number, expected).
    pub euler_column: Vec<(u32, Int, Int)>,
}

impl DonReport {
    pub fn is_ok(&self) -> bool {
        self.poles_simple
            && self.binomial_vanishing
            && self.residues.iter().all(|(_, got, want)| got == want)
            && self.euler_column.iter().all(|(_, got, want)| got == want)
    }
}

/// Verify the residue values of the Euler integrand at the eight poles on
/// the unit circle, the vanishing of the binomial factor away from 1, and
/// the factorial law for the Euler column of the level-one table.
pub fn verify_don(n_max: u32) -> Result<DonReport> {
    assert!(n_max >= 5, "the Euler law starts at n = 5");
    let form = euler_integrand();
    // The eight poles as powers of a primitive twelfth root of unity:
    // +-1, +-i, +-rho, +-rho^2 with i = zeta^3, rho = zeta^2.
    let pole_exponents: [i64; 8] = [0, 6, 2, 8, 3, 9, 4, 10];
    let mut residues = Vec::new();
    let mut poles_simple = true;
    for &e in &pole_exponents {
        let z = CycloNum::zeta_pow(e);
        if !form.is_simple_pole(&z) {
            poles_simple = false;
        }
        let value = form.residue_at_simple_pole(&z)?;
        let got = value.to_rat().unwrap_or_else(|| rat(i64::MAX, 1));
        // Classify by (z + 1/z)^2 in {4, 1, 0}.
        let trace = z.add(&z.invert()?);
        let t2 = trace
            .mul(&trace)
            .to_rat()
            .expect("trace squared is rational");
        let want = if t2 == rat_int(4) {
            rat(1, 6)
        } else if t2 == rat_int(1) {
            rat(-1, 3)
        } else if t2.is_zero() {
            rat(-1, 2)
        } else {
            unreachable!("pole off the classified circle values")
        };
        residues.push((e, got, want));
    }
    // Binomial factor binom(1 - z - 1/z, n).
    let mut binomial_vanishing = true;
    for n in 4..=n_max {
        for &e in &pole_exponents {
            let z = CycloNum::zeta_pow(e);
            let x = CycloNum::one().sub(&z).sub(&z.invert()?);
            let mut prod = CycloNum::one();
            for i in 0..n {
                prod = prod.mul(&x.sub(&CycloNum::from_int(i as i64)));
            }
            let vanishes = prod.is_zero();
            if e == 0 {
                // z = 1: the factor is binom(-1, n) = (-1)^n, never zero.
                if vanishes {
                    binomial_vanishing = false;
                }
            } else if !vanishes {
                binomial_vanishing = false;
            }
        }
    }
    // Euler column of the level-one table.
    let rows = m1n_table(n_max)?;
    let mut euler_column = Vec::new();
    for row in &rows {
        let expect = match row.n {
            1 | 2 => int(1),
            3 | 4 => int(0),
            n => expected_euler_law(n),
        };
        euler_column.push((row.n, row.euler.clone(), expect));
    }
    Ok(DonReport {
        residues,
        poles_simple,
        binomial_vanishing,
        euler_column,
    })
}

/// Dense polynomial multiplication over any coefficient ring, truncated.
fn xmul<C: CoeffRing>(a: &[C], b: &[C], cap: usize) -> Vec<C> {
    let mut out = vec![C::zero(); cap + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() || i > cap {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j > cap {
                break;
            }
            out[i + j] = out[i + j].clone() + &(x.clone() * y);
        }
    }
    out
}

/// The quotient-by-the-symmetric-group series: invariants, their level-one
/// classes, and the Euler numbers, with every displayed closed form checked
/// exactly along the way.
#[derive(Clone, Debug)]
pub struct QuotientReport {
    pub n_max: u32,
    /// Coefficient of x^m (index m; index 0 is zero).
    pub invariants: Vec<Gl2>,
    pub serre: Vec<MotiveClass>,
    pub euler: Vec<Int>,
}

pub fn quotient_series(n_max: u32) -> Result<QuotientReport> {
    let cap = n_max as usize;
    let series = torsor_series_gl2(n_max)?;
    // Invariants: substitute p_n -> x^n, i.e. sum the power-sum coefficients
    // degree by degree.
    let invariants: Vec<Gl2> = series.specialize(|k| {
        let mut v = vec![Gl2::default(); k as usize + 1];
        v[k as usize] = Gl2::one();
        v
    });

    // Displayed closed form: x (1 - L x^3)/(1 - L x) sum_k H_k x^{2k}.
    let e = Gl2::torsor_class();
    let l = Gl2::l_class();
    let mut prefactor = vec![Gl2::default(); cap + 1];
    if cap >= 1 {
        prefactor[1] = Gl2::one();
    }
    if cap >= 4 {
        prefactor[4] = l.neg();
    }
    let mut geo = vec![Gl2::default(); cap + 1];
    let mut pow = Gl2::one();
    for slot in geo.iter_mut() {
        *slot = pow.clone();
        pow = pow.mul(&l);
    }
    let mut h_series = vec![Gl2::default(); cap + 1];
    for k in 0..=(cap / 2) {
        h_series[2 * k] = Gl2::h_n(k as u32);
    }
    let closed = xmul(&xmul(&prefactor, &geo, cap), &h_series, cap);
    if invariants != closed {
        return Err(Error::CrossCheckFailure {
            context: "invariants series vs displayed closed form".into(),
        });
    }

    // Intermediate displayed identities.
    // N(x) = (1-wx)(1-Lx/w)(1-x^2)(1-Lx^2),
    // D(x) = (1-x)(1-Lx)(1-wx^2)(1-Lx^2/w).
    let wcls = Gl2::term(1, LPoly::one());
    let lw = Gl2::term(-1, LPoly::l_power(1));
    let lin = |c: &Gl2, deg: usize| -> Vec<Gl2> {
        let mut v = vec![Gl2::default(); deg.max(1) + 1];
        v[0] = Gl2::one();
        v[deg] = c.neg();
        v
    };
    let big = cap.max(8);
    let n_poly = xmul(
        &xmul(&lin(&wcls, 1), &lin(&lw, 1), big),
        &xmul(&lin(&Gl2::one(), 2), &lin(&l, 2), big),
        big,
    );
    let d_poly = xmul(
        &xmul(&lin(&Gl2::one(), 1), &lin(&l, 1), big),
        &xmul(&lin(&wcls, 2), &lin(&lw, 2), big),
        big,
    );
    // (i) S e D = N - D through x^{n_max}.
    let mut e_vec = vec![Gl2::default(); 1];
    e_vec[0] = e.clone();
    let lhs = xmul(&xmul(&invariants, &e_vec, cap), &d_poly, cap);
    let mut rhs: Vec<Gl2> = n_poly.iter().zip(&d_poly).map(|(a, b)| a.sub(b)).collect();
    rhs.truncate(cap + 1);
    if lhs != rhs {
        return Err(Error::CrossCheckFailure {
            context: "quotient series vs product form".into(),
        });
    }
    // (ii) N - D = x (1 - L x^3)(1 - x) e exactly.
    let nd: Vec<Gl2> = n_poly.iter().zip(&d_poly).map(|(a, b)| a.sub(b)).collect();
    let mut rhs2 = vec![Gl2::default(); big + 1];
    rhs2[1] = e.clone();
    rhs2[2] = e.neg();
    rhs2[4] = l.mul(&e).neg();
    rhs2[5] = l.mul(&e);
    if nd != rhs2 {
        return Err(Error::CrossCheckFailure {
            context: "middle identity for the quotient series".into(),
        });
    }
    // (iii) (sum H_k x^{2k}) (1 - H x^2 + L x^4) = 1 through x^{n_max}.
    let mut hx = vec![Gl2::default(); cap + 1];
    hx[0] = Gl2::one();
    if cap >= 2 {
        hx[2] = Gl2::h_class().neg();
    }
    if cap >= 4 {
        hx[4] = l.clone();
    }
    let prod = xmul(&h_series, &hx, cap);
    let mut unit = vec![Gl2::default(); cap + 1];
    unit[0] = Gl2::one();
    if prod != unit {
        return Err(Error::CrossCheckFailure {
            context: "generating identity for the H-classes".into(),
        });
    }

    // Level-one classes of the invariants and the displayed closed form
    // x (1 - L x^3)/(1 - L x) sum_k (level-one class of H_{2k}) x^{4k}.
    let mut serre = Vec::with_capacity(cap + 1);
    for inv in &invariants {
        serre.push(level_one_class(&inv.h_basis()?)?);
    }
    let m_l = MotiveClass::from_l_power(1);
    let mut m_pref = vec![MotiveClass::zero(); cap + 1];
    if cap >= 1 {
        m_pref[1] = MotiveClass::one();
    }
    if cap >= 4 {
        m_pref[4] = m_l.neg();
    }
    let mut m_geo = vec![MotiveClass::zero(); cap + 1];
    let mut mpow = MotiveClass::one();
    for slot in m_geo.iter_mut() {
        *slot = mpow.clone();
        mpow = mpow.mul(&m_l);
    }
    let mut m_h = vec![MotiveClass::zero(); cap + 1];
    for k in 0..=(cap / 4) {
        m_h[4 * k] = level_one_class(&Gl2::h_n(2 * k as u32).h_basis()?)?;
    }
    let closed_serre = xmul_motive(&xmul_motive(&m_pref, &m_geo, cap), &m_h, cap);
    if serre != closed_serre {
        return Err(Error::CrossCheckFailure {
            context: "quotient classes vs displayed closed form".into(),
        });
    }

    // Euler numbers and the displayed rational function
    // (x + x^2 + x^3)(1 - x^4 - 2x^8 - x^12 + x^16)/((1-x^8)(1-x^12)).
    let euler: Vec<Int> = serre.iter().map(euler_specialize).collect();
    let oracle = quotient_euler_oracle(cap);
    if euler != oracle {
        return Err(Error::CrossCheckFailure {
            context: "quotient Euler series vs displayed rational function".into(),
        });
    }
    // Direct consistency with the even symmetric-power Euler numbers.
    let mut direct = vec![Int::zero(); cap + 1];
    for m in 1..=cap {
        let mut acc = Int::zero();
        for lead in 1..=3usize {
            if m >= lead && (m - lead) % 4 == 0 {
                let k = ((m - lead) / 4) as u32;
                acc += euler_of_even_symmetric_power(k);
            }
        }
        direct[m] = acc;
    }
    if euler != direct {
        return Err(Error::CrossCheckFailure {
            context: "quotient Euler series vs symmetric-power Euler numbers".into(),
        });
    }

    Ok(QuotientReport {
        n_max,
        invariants,
        serre,
        euler,
    })
}

fn xmul_motive(a: &[MotiveClass], b: &[MotiveClass], cap: usize) -> Vec<MotiveClass> {
    let mut out = vec![MotiveClass::zero(); cap + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() || i > cap {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j > cap {
                break;
            }
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

/// Expansion of (x + x^2 + x^3)(1 - x^4 - 2x^8 - x^12 + x^16) /
/// ((1 - x^8)(1 - x^12)) by long division.
pub fn quotient_euler_oracle(cap: usize) -> Vec<Int> {
    // Numerator coefficients.
    let mut num = vec![Int::zero(); cap.max(20) + 1];
    for lead in [1usize, 2, 3] {
        for (shift, c) in [(0usize, 1i64), (4, -1), (8, -2), (12, -1), (16, 1)] {
            if lead + shift < num.len() {
                num[lead + shift] += int(c);
            }
        }
    }
    // Denominator (1 - x^8)(1 - x^12) = 1 - x^8 - x^12 + x^20:
    // c_m = num_m + c_{m-8} + c_{m-12} - c_{m-20}.
    let mut c = vec![Int::zero(); cap + 1];
    for m in 0..=cap {
        let mut v = num[m].clone();
        if m >= 8 {
            v += c[m - 8].clone();
        }
        if m >= 12 {
            v += c[m - 12].clone();
        }
        if m >= 20 {
            v -= c[m - 20].clone();
        }
        c[m] = v;
    }
    c
}

/// The non-equivariant class and Euler number at a single n, straight from
/// the table pipeline.
pub fn m1n_row(n: u32, n_max: u32) -> Result<M1nRow> {
    let rows = m1n_table(n_max.max(n))?;
    Ok(rows[n as usize - 1].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> IntPartition {
        IntPartition::new(parts.to_vec())
    }

    fn lp(coeffs: &[i64]) -> LPoly {
        LPoly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn level_rows_small() {
        let rows = level_n_series(3).unwrap();
        // n = 1: H_0 s_1.
        assert_eq!(rows[0].entries.len(), 1);
        let h = &rows[0].entries[&p(&[1])];
        assert_eq!(h.coeff(0), lp(&[1]));
        // n = 2: H_0 L s_2 - H_1 s_{1^2}.
        let r2 = &rows[1].entries;
        assert_eq!(r2[&p(&[2])].coeff(0), lp(&[0, 1]));
        assert_eq!(r2[&p(&[2])].terms().len(), 1);
        assert_eq!(r2[&p(&[1, 1])].coeff(1), lp(&[-1]));
        assert_eq!(r2[&p(&[1, 1])].terms().len(), 1);
        // n = 3: H_0 L^2 s_3 - H_1 (L s_21 - s_3) + H_2 s_{1^3}.
        let r3 = &rows[2].entries;
        assert_eq!(r3[&p(&[3])].coeff(0), lp(&[0, 0, 1]));
        assert_eq!(r3[&p(&[3])].coeff(1), lp(&[1]));
        assert_eq!(r3[&p(&[2, 1])].coeff(1), lp(&[0, -1]));
        assert_eq!(r3[&p(&[1, 1, 1])].coeff(2), lp(&[1]));
    }

    #[test]
    fn m1n_rows_small() {
        let rows = m1n_table(4).unwrap();
        // n = 1: L s_1, L, 1.
        assert_eq!(rows[0].equivariant[&p(&[1])], MotiveClass::from_l_power(1));
        assert_eq!(rows[0].nonequivariant, MotiveClass::from_l_power(1));
        assert_eq!(rows[0].euler, int(1));
        // n = 2: s_2 L^2.
        assert_eq!(rows[1].equivariant[&p(&[2])], MotiveClass::from_l_power(2));
        assert!(rows[1].equivariant.get(&p(&[1, 1])).is_none());
        assert_eq!(rows[1].euler, int(1));
        // n = 3: s_3 L^3 - s_{1^3}.
        assert_eq!(rows[2].equivariant[&p(&[3])], MotiveClass::from_l_power(3));
        assert_eq!(
            rows[2].equivariant[&p(&[1, 1, 1])],
            MotiveClass::from_int(-1)
        );
        assert_eq!(rows[2].euler, int(0));
        // n = 4 non-equivariant: L^4 - L^2 - 3L + 3.
        let expect = MotiveClass::from_l_power(4)
            .sub(&MotiveClass::from_l_power(2))
            .sub(&MotiveClass::from_l_power(1).scale(&int(3)))
            .add(&MotiveClass::from_int(3));
        assert_eq!(rows[3].nonequivariant, expect);
        assert_eq!(rows[3].euler, int(0));
    }

    #[test]
    fn closed_form_matches_substitution_route() {
        let n = 6;
        let closed = closed_form_series(n).unwrap();
        let table = m1n_table(n).unwrap();
        for (c, t) in closed.iter().zip(&table) {
            assert_eq!(c.entries, t.equivariant, "n = {}", c.n);
        }
    }

    #[test]
    fn nonequi_matches_table() {
        let n = 7;
        let list = nonequi_series(n).unwrap();
        let table = m1n_table(n).unwrap();
        for (m, row) in list.iter().zip(&table) {
            assert_eq!(m, &row.nonequivariant, "n = {}", row.n);
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            torsor_series_gl2(13),
            Err(Error::SizeLimit { requested: 13, .. })
        ));
        assert!(m1n_table(13).is_err());
        assert!(quotient_series(13).is_err());
    }

    #[test]
    fn rational_form_reduces_and_takes_residues() {
        // (w^2 - 1)/(w - 1) reduces to w + 1.
        let f = RationalForm::new(
            vec![rat_int(-1), rat_int(0), rat_int(1)],
            vec![rat_int(-1), rat_int(1)],
        );
        assert_eq!(f.numerator(), &[rat_int(1), rat_int(1)][..]);
        assert_eq!(f.denominator(), &[rat_int(1)][..]);
        // 1/(w - 1) has residue 1 at the simple pole w = 1.
        let g = RationalForm::new(vec![rat_int(1)], vec![rat_int(-1), rat_int(1)]);
        let z = CycloNum::one();
        assert!(g.is_simple_pole(&z));
        assert_eq!(g.residue_at_simple_pole(&z).unwrap(), CycloNum::one());
        // Residue request away from a pole fails loudly.
        assert!(g.residue_at_simple_pole(&CycloNum::zeta()).is_err());
        // The Euler integrand is already reduced and has residue 1/6 at 1.
        let form = euler_integrand();
        assert_eq!(form.numerator().len(), 9);
        assert_eq!(form.denominator().len(), 10);
        let r = form.residue_at_simple_pole(&CycloNum::one()).unwrap();
        assert_eq!(r.to_rat(), Some(rat(1, 6)));
    }

    #[test]
    fn don_report_small() {
        let report = verify_don(6).unwrap();
        assert!(report.poles_simple);
        assert!(report.binomial_vanishing);
        for (e, got, want) in &report.residues {
            assert_eq!(got, want, "pole zeta^{e}");
        }
        for (n, got, want) in &report.euler_column {
            assert_eq!(got, want, "Euler at n = {n}");
        }
        // Spot values: residue 1/6 at zeta^0, -1/2 at zeta^3 = i.
        assert_eq!(report.residues[0].1, rat(1, 6));
        assert_eq!(report.residues[4].1, rat(-1, 2));
    }

    #[test]
    fn quotient_small() {
        let q = quotient_series(8).unwrap();
        // Coefficient of x^1 is H_0 = 1.
        assert_eq!(q.invariants[1], Gl2::one());
        // chi of the three-point quotient is 1.
        assert_eq!(q.euler[3], int(1));
        // Euler oracle expansion begins x + x^2 + x^3 + 0 x^4 - x^5 ...
        let oracle = quotient_euler_oracle(8);
        assert_eq!(&oracle[..4], &[int(0), int(1), int(1), int(1)]);
        assert_eq!(q.euler, oracle);
    }
}
