//! Cycle indices of the permutation groups acting on cycles of a C-tree,
//! and the substitution `t_i -> f(x^i)` that turns them into counting series.
//!
//! Three families are provided: the order-two "palindromic" group that flips
//! a cycle about its entry node ([`z_s2`]), the cyclic groups
//! ([`z_cyclic`]) and the dihedral groups ([`z_dihedral`]).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::PowerSeries;

/// A product `prod t_i^{e_i}`, stored as `(i, e_i)` pairs sorted by index
/// with every exponent positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn from_powers<I: IntoIterator<Item = (u32, u32)>>(powers: I) -> Self {
        let mut exps: BTreeMap<u32, u32> = BTreeMap::new();
        for (index, exp) in powers {
            assert!(index >= 1, "cycle-index variables start at t_1");
            *exps.entry(index).or_default() += exp;
        }
        Self(exps.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    /// `t_i^e`
    pub fn power(index: u32, exp: u32) -> Self {
        Self::from_powers([(index, exp)])
    }

    pub fn powers(&self) -> &[(u32, u32)] {
        &self.0
    }

    /// Number of permuted points, `sum i * e_i`.
    pub fn weight(&self) -> u64 {
        self.0
            .iter()
            .map(|&(i, e)| u64::from(i) * u64::from(e))
            .sum()
    }

    fn mul(&self, other: &Self) -> Self {
        Self::from_powers(self.0.iter().chain(other.0.iter()).copied())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, &(i, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "t{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial in `t_1, t_2, ...` with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycleIndexPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl CycleIndexPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(BigRational::one(), Monomial::one())
    }

    pub fn term(coeff: BigRational, monomial: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff, monomial);
        p
    }

    fn add_term(&mut self, coeff: BigRational, monomial: Monomial) {
        let slot = self.terms.entry(monomial).or_insert_with(BigRational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(c * factor, m.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ca * cb, ma.mul(mb));
            }
        }
        out
    }

    /// Evaluates with `t_i -> value(i)`.
    pub fn evaluate(&self, value: impl Fn(u32) -> BigRational) -> BigRational {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.powers().iter().fold(c.clone(), |acc, &(i, e)| {
                    acc * num_traits::pow(value(i), e as usize)
                })
            })
            .fold(BigRational::zero(), |a, b| a + b)
    }
}

impl Add for &CycleIndexPoly {
    type Output = CycleIndexPoly;
    fn add(self, rhs: &CycleIndexPoly) -> CycleIndexPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }
}

impl fmt::Display for CycleIndexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{m}")?;
        }
        Ok(())
    }
}

fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn half() -> BigRational {
    ratio(1, 2)
}

fn to_u32(n: usize) -> u32 {
    u32::try_from(n).expect("cycle length fits in u32")
}

pub(crate) fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Cycle index of the flip that fixes the entry node of a cycle of length
/// `c` hanging below a root. `c = 0` stands for the empty branch.
pub fn z_s2(c: usize) -> CycleIndexPoly {
    if c == 0 {
        return CycleIndexPoly::one();
    }
    let c32 = to_u32(c);
    let identity = Monomial::power(1, c32);
    let flip = if c % 2 == 1 {
        // entry node fixed, the other c-1 nodes swap in pairs
        Monomial::from_powers([(1, 1), (2, (c32 - 1) / 2)])
    } else {
        // entry node and its antipode fixed
        Monomial::from_powers([(1, 2), (2, (c32 - 2) / 2)])
    };
    &CycleIndexPoly::term(half(), identity) + &CycleIndexPoly::term(half(), flip)
}

/// Cycle index of the cyclic group of order `n`,
/// `(1/n) sum_{d | n} phi(d) t_d^{n/d}`.
pub fn z_cyclic(n: usize) -> CycleIndexPoly {
    assert!(n >= 1, "cyclic group needs n >= 1");
    let n64 = n as u64;
    let mut out = CycleIndexPoly::zero();
    for d in (1..=n64).filter(|d| n64.is_multiple_of(*d)) {
        out.add_term(
            ratio(totient(d), n64),
            Monomial::power(d as u32, (n64 / d) as u32),
        );
    }
    out
}

/// Cycle index of the dihedral group acting on the `n` nodes of a cycle.
pub fn z_dihedral(n: usize) -> CycleIndexPoly {
    let rotations = z_cyclic(n).scale(&half());
    let n32 = to_u32(n);
    let reflections = if n % 2 == 1 {
        CycleIndexPoly::term(half(), Monomial::from_powers([(1, 1), (2, n32 / 2)]))
    } else {
        let quarter = ratio(1, 4);
        &CycleIndexPoly::term(
            quarter.clone(),
            Monomial::from_powers([(1, 2), (2, n32 / 2 - 1)]),
        ) + &CycleIndexPoly::term(quarter, Monomial::power(2, n32 / 2))
    };
    &rotations + &reflections
}

/// Evaluates cycle indices at `t_i -> f(x^i)` for a fixed series `f`,
/// caching the powers of `f` between calls.
#[derive(Debug, Clone)]
pub struct Substituter {
    order: usize,
    powers: Vec<PowerSeries>,
}

impl Substituter {
    /// `f` must have zero constant term; results are truncated at
    /// `min(order, f.order())`.
    pub fn new(f: &PowerSeries, order: usize) -> Result<Self> {
        if !f.coeff(0).is_zero() {
            return Err(Error::NonZeroConstant(f.coeff(0).clone()));
        }
        let order = order.min(f.order());
        Ok(Self {
            order,
            powers: vec![PowerSeries::one(order), f.truncate(order)],
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn power(&mut self, e: usize) -> &PowerSeries {
        while self.powers.len() <= e {
            let next = &self.powers[self.powers.len() - 1] * &self.powers[1];
            self.powers.push(next);
        }
        &self.powers[e]
    }

    /// `prod f(x^i)^{e_i}`, or `None` when the monomial vanishes below the
    /// truncation order.
    fn monomial_series(&mut self, m: &Monomial) -> Option<PowerSeries> {
        if m.weight() > self.order as u64 {
            return None;
        }
        let order = self.order;
        let mut acc: Option<PowerSeries> = None;
        for &(i, e) in m.powers() {
            let factor = self
                .power(e as usize)
                .substitute_power_to(i as usize, order);
            acc = Some(match acc {
                None => factor,
                Some(a) => &a * &factor,
            });
        }
        Some(acc.unwrap_or_else(|| PowerSeries::one(order)))
    }

    /// Substitutes without any integrality requirement.
    pub fn substitute_rational(&mut self, z: &CycleIndexPoly) -> Vec<BigRational> {
        let mut acc = vec![BigRational::zero(); self.order + 1];
        self.accumulate(z, &mut acc);
        acc
    }

    /// Adds the substitution of `z` into `acc`, which must have length
    /// `order + 1`.
    pub fn accumulate(&mut self, z: &CycleIndexPoly, acc: &mut [BigRational]) {
        assert_eq!(acc.len(), self.order + 1);
        for (m, c) in z.terms() {
            if let Some(s) = self.monomial_series(m) {
                for (slot, v) in acc.iter_mut().zip(s.coeffs()) {
                    if !v.is_zero() {
                        *slot += c * BigRational::from_integer(v.clone());
                    }
                }
            }
        }
    }

    /// Substitutes and requires every coefficient of the result to be an
    /// integer. Works over the common denominator of `z`, so only the
    /// totals need to be integral.
    pub fn substitute(&mut self, z: &CycleIndexPoly) -> Result<PowerSeries> {
        let denom = z
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut acc = PowerSeries::zero(self.order);
        for (m, c) in z.terms() {
            if let Some(s) = self.monomial_series(m) {
                let weight = c.numer() * (&denom / c.denom());
                acc = &acc + &s.scale(&weight);
            }
        }
        acc.div_exact(&denom)
    }
}

/// Converts rational coefficients to an integer series, failing on the
/// first fraction.
pub fn integral_series(coeffs: Vec<BigRational>) -> Result<PowerSeries> {
    let ints = coeffs
        .into_iter()
        .enumerate()
        .map(|(degree, value)| {
            if value.denom().is_one() {
                Ok(value.numer().clone())
            } else if value.numer().is_multiple_of(value.denom()) {
                Ok(value.to_integer())
            } else {
                Err(Error::NonIntegral { degree, value })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PowerSeries::new(ints))
}

/// `z` with `t_i -> f(x^i)`, truncated at `order`.
pub fn substitute(z: &CycleIndexPoly, f: &PowerSeries, order: usize) -> Result<PowerSeries> {
    Substituter::new(f, order)?.substitute(z)
}
