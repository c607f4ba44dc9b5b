//! Equivariant characteristic series of configuration spaces: the general
//! coefficient pipeline, the universal polynomials attached to each
//! partition, and the torsor quotient.
//!
//! The generating series of the symmetric-group-equivariant classes of the
//! n-point configuration spaces of X/S with coefficients twisted by tensor
//! powers E(n) is
//!
//!   Exp( sum_d mu(d)/d sum_l (-1)^{l-1}/l p_d^l E(dl) ),
//!
//! computed here over any lambda-coefficient ring. A second assembly of the
//! same series through exp of Adams-weighted logs is computed independently
//! and the two are compared term by term on every call.

use crate::numbers::{divisors, mobius};
use crate::partitions::IntPartition;
use crate::ring::{rat, Error, ExactDiv, LambdaRing, Rat, Result};
use crate::symfun::{FreeKey, FreeLambda, SymSeries};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Default cap for the universal-polynomial table.
pub const DEFAULT_PHI_BOUND: u32 = 6;

/// Coefficient input: the classes E(n) for 1 <= n <= N.
#[derive(Clone, Debug)]
pub struct SerreInput<R> {
    values: Vec<R>,
}

impl<R: LambdaRing> SerreInput<R> {
    /// Explicit values, E(1) first.
    pub fn new(values: Vec<R>) -> Self {
        assert!(!values.is_empty());
        SerreInput { values }
    }

    /// The unit-coefficient case: E(n) = e for all n.
    pub fn constant(e: R, n_max: u32) -> Self {
        SerreInput {
            values: vec![e; n_max as usize],
        }
    }

    pub fn n_max(&self) -> u32 {
        self.values.len() as u32
    }

    pub fn value(&self, n: u32) -> &R {
        assert!(n >= 1 && n <= self.n_max(), "E({n}) not supplied");
        &self.values[n as usize - 1]
    }
}

/// The full equivariant series truncated at degree N, via the Exp form;
/// asserted equal to the exp-of-Adams form. When all inputs are integral,
/// every degree part is checked integral.
pub fn config_serre<R: LambdaRing>(input: &SerreInput<R>, n_max: u32) -> Result<SymSeries<R>> {
    assert!(input.n_max() >= n_max, "inputs must cover E(1)..E(N)");
    // Route one: Exp( sum_d mu(d)/d log(1 + p_d E^d) ).
    let mut arg = SymSeries::zero(n_max);
    for d in 1..=n_max {
        let mu = Rat::new(mobius(d), d.into());
        if mu.is_zero() {
            continue;
        }
        let mut l = 1u32;
        while d * l <= n_max {
            let sign = rat(if l % 2 == 1 { 1 } else { -1 }, l as i64);
            let lambda = IntPartition::new(vec![d; l as usize]);
            let coeff = input.value(d * l).scale(&(&mu * &sign));
            arg = arg.add(&SymSeries::monomial(lambda, coeff, n_max));
            l += 1;
        }
    }
    let series = arg.cap_exp()?;

    // Route two: exp( sum_n 1/n sum_l (-1)^{l-1}/l p_n^l
    //                 sum_{d|n} mu(n/d) psi_d(E(l n / d)) ).
    let mut arg2 = SymSeries::zero(n_max);
    for n in 1..=n_max {
        let mut l = 1u32;
        while n * l <= n_max {
            let mut coeff = R::zero();
            for d in divisors(n) {
                let mu = mobius(n / d);
                if mu.is_zero() {
                    continue;
                }
                let v = input.value(l * n / d).adams(d);
                coeff = coeff + &v.scale(&Rat::from_integer(mu));
            }
            let sign = rat(if l % 2 == 1 { 1 } else { -1 }, (n * l) as i64);
            let lambda = IntPartition::new(vec![n; l as usize]);
            arg2 = arg2.add(&SymSeries::monomial(lambda, coeff.scale(&sign), n_max));
            l += 1;
        }
    }
    let series2 = arg2.exp_op()?;
    if series != series2 {
        return Err(Error::CrossCheckFailure {
            context: "Exp form and exp-of-Adams form of the configuration series".into(),
        });
    }

    let inputs_integral = (1..=n_max).all(|n| input.value(n).is_integral());
    if inputs_integral && !series.is_integral() {
        return Err(Error::IntegralityFailure {
            context: "configuration series with integral inputs".into(),
        });
    }
    Ok(series)
}

/// The torsor quotient series sum_{n>=1} of the classes of the quotients of
/// the n-point configuration spaces of a group object with class e:
/// (Exp(Log(1+p1) e) - 1) / e, with the division performed exactly
/// coefficient by coefficient.
pub fn torsor_serre<R: LambdaRing + ExactDiv>(e: &R, n_max: u32) -> Result<SymSeries<R>> {
    let one_plus_p1 = SymSeries::<R>::one(n_max).add(&SymSeries::p(1, n_max));
    let log = one_plus_p1.cap_log()?;
    let numerator = log.scale_coeff(e).cap_exp()?.sub(&SymSeries::one(n_max));
    let mut out = SymSeries::zero(n_max);
    for (lambda, c) in numerator.terms() {
        let q = c.exact_div(e)?;
        out = out.add(&SymSeries::monomial(lambda.clone(), q, n_max));
    }
    Ok(out)
}

/// A universal polynomial: integer combination of monomials
/// prod_k sigma_{mu_k}(E(k)), keyed by the (alphabet, partition) pairs.
pub type PhiPolynomial = BTreeMap<FreeKey, crate::ring::Int>;

/// The table of universal polynomials Phi_lambda for |lambda| <= max_n,
/// computed over the free lambda-ring on E(1), E(2), ... and presented in
/// the sigma-monomial basis.
pub fn phi_polynomials(max_n: u32) -> Result<BTreeMap<IntPartition, PhiPolynomial>> {
    if max_n > DEFAULT_PHI_BOUND {
        return Err(Error::SizeLimit {
            what: "universal polynomial weight",
            requested: max_n as usize,
            max: DEFAULT_PHI_BOUND as usize,
        });
    }
    if max_n == 0 {
        return Ok(BTreeMap::new());
    }
    let input = SerreInput::new((1..=max_n).map(FreeLambda::generator).collect());
    let series = config_serre(&input, max_n)?;
    let mut out = BTreeMap::new();
    for n in 1..=max_n {
        for (lambda, coeff) in series.schur_coefficients(n) {
            let mut poly = PhiPolynomial::new();
            for (key, c) in coeff.to_schur_tuples() {
                if c.is_zero() {
                    continue;
                }
                let int = crate::ring::to_int(&c).ok_or_else(|| Error::IntegralityFailure {
                    context: format!("Phi_{lambda} coefficient {c} at {key:?}"),
                })?;
                poly.insert(key, int);
            }
            out.insert(lambda, poly);
        }
    }
    Ok(out)
}
