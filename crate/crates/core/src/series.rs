//! Truncated formal power series over arbitrary-precision integers.
//!
//! A [`PowerSeries`] of order `N` stores the exact coefficients of
//! `x^0 ..= x^N`; nothing is known about higher powers. Binary operations
//! truncate to the smaller order of their operands so that no result ever
//! carries a coefficient that is not exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    ///
    /// Panics if `coeffs` is empty.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a power series needs at least one coefficient"
        );
        Self { coeffs }
    }

    pub fn from_ints<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::new(coeffs.into_iter().map(Into::into).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, order)
    }

    /// `x^k` truncated at `order`; the zero series when `k > order`.
    pub fn monomial(k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = BigInt::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^n`. Panics if `n` exceeds the truncation order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, value: BigInt) {
        self.coeffs[n] = value;
    }

    /// Drops every coefficient above `order`. Orders above the current one
    /// are clamped, since the missing coefficients are unknown.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check_zero_constant(&self) -> Result<()> {
        if self.coeffs[0].is_zero() {
            Ok(())
        } else {
            Err(Error::NonZeroConstant(self.coeffs[0].clone()))
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Divides every coefficient by `divisor`, failing on the first
    /// coefficient that is not a multiple of it.
    pub fn div_exact(&self, divisor: &BigInt) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(degree, c)| {
                let (q, r) = c.div_rem(divisor);
                if r.is_zero() {
                    Ok(q)
                } else {
                    Err(Error::NonIntegral {
                        degree,
                        value: BigRational::new(c.clone(), divisor.clone()),
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { coeffs })
    }

    /// Multiplies by `x^k`; the order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divides by `x^k`; the order shrinks by `k`.
    ///
    /// Panics if `k > order` or any of the low `k` coefficients is nonzero.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(
            k <= self.order(),
            "cannot divide an order-{} series by x^{k}",
            self.order()
        );
        assert!(
            self.coeffs[..k].iter().all(Zero::is_zero),
            "series is not divisible by x^{k}"
        );
        Self {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// `a(x^k)`, keeping every coefficient that is exact (order `N·k`).
    pub fn substitute_power(&self, k: usize) -> Self {
        self.substitute_power_to(k, self.order() * k)
    }

    /// `a(x^k)` truncated at `order`, which may be anything up to `N·k`.
    pub fn substitute_power_to(&self, k: usize, order: usize) -> Self {
        assert!(k >= 1, "substitution x -> x^k needs k >= 1");
        let order = order.min(self.order() * k);
        let mut out = Self::zero(order);
        for (n, c) in self.coeffs.iter().enumerate() {
            let target = n * k;
            if target > order {
                break;
            }
            out.coeffs[target] = c.clone();
        }
        out
    }

    /// `1 / (1 - g)` for a series `g` without constant term.
    pub fn geometric_inverse(&self) -> Result<Self> {
        self.check_zero_constant()?;
        let order = self.order();
        let mut h = Vec::with_capacity(order + 1);
        h.push(BigInt::one());
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                let g = &self.coeffs[k];
                if !g.is_zero() {
                    acc += g * &h[n - k];
                }
            }
            h.push(acc);
        }
        Ok(Self { coeffs: h })
    }

    /// Multiset construction: with `a(n)` atoms of size `n`, returns the
    /// series counting multisets of atoms by total size,
    /// `prod_{n >= 1} (1 - x^n)^(-a(n))`.
    ///
    /// Each factor is expanded as a binomial series and multiplied in place.
    pub fn euler_transform(&self) -> Result<Self> {
        self.check_zero_constant()?;
        let order = self.order();
        let mut out = Self::one(order);
        let mut factor: Vec<BigInt> = Vec::with_capacity(order + 1);
        for n in 1..=order {
            let a = &self.coeffs[n];
            if a.is_zero() {
                continue;
            }
            // factor[j] = binomial(a + j - 1, j), the coefficient of x^(n j)
            factor.clear();
            factor.push(BigInt::one());
            for j in 1..=order / n {
                let next = &factor[j - 1] * (a + BigInt::from(j - 1));
                factor.push(next / BigInt::from(j));
            }
            for m in (n..=order).rev() {
                let mut acc = BigInt::zero();
                for (j, f) in factor.iter().enumerate().skip(1) {
                    if n * j > m {
                        break;
                    }
                    acc += f * &out.coeffs[m - n * j];
                }
                out.coeffs[m] += acc;
            }
        }
        Ok(out)
    }

    /// The same transform via `exp(sum_{k >= 1} a(x^k) / k)`, evaluated in
    /// exact rationals. Every resulting coefficient must be an integer.
    pub fn euler_transform_exp(&self) -> Result<Self> {
        self.check_zero_constant()?;
        let order = self.order();
        let mut log = vec![BigRational::zero(); order + 1];
        for k in 1..=order {
            let inv_k = BigRational::new(BigInt::one(), BigInt::from(k));
            for n in 1..=order / k {
                let a = &self.coeffs[n];
                if !a.is_zero() {
                    log[n * k] += &inv_k * BigRational::from_integer(a.clone());
                }
            }
        }
        // E' = L' E  =>  n e(n) = sum_{k=1}^{n} k l(k) e(n-k)
        let mut exp = Vec::with_capacity(order + 1);
        exp.push(BigRational::one());
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if !log[k].is_zero() {
                    acc += &log[k] * BigRational::from_integer(BigInt::from(k)) * &exp[n - k];
                }
            }
            exp.push(acc / BigRational::from_integer(BigInt::from(n)));
        }
        let coeffs = exp
            .into_iter()
            .enumerate()
            .map(|(degree, value)| {
                if value.is_integer() {
                    Ok(value.to_integer())
                } else {
                    Err(Error::NonIntegral { degree, value })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { coeffs })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..=order)
                .map(|n| f(&self.coeffs[n], &other.coeffs[n]))
                .collect(),
        }
    }

    fn cauchy(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self { coeffs: out }
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        self.cauchy(rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for PowerSeries {
            type Output = PowerSeries;
            fn $method(self, rhs: PowerSeries) -> PowerSeries {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&PowerSeries> for PowerSeries {
            type Output = PowerSeries;
            fn $method(self, rhs: &PowerSeries) -> PowerSeries {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match n {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if n == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{n}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(coeffs: &[i64]) -> PowerSeries {
        PowerSeries::from_ints(coeffs.iter().copied())
    }

    #[test]
    fn add_truncates_to_smaller_order() {
        assert_eq!(&s(&[1, 1, 0, 0]) + &s(&[1, 0, 2]), s(&[2, 1, 2]));
        assert_eq!(&s(&[1, 5, 3]) + &PowerSeries::zero(2), s(&[1, 5, 3]));
    }

    #[test]
    fn doubling_decapitated_series() {
        let cp = s(&[0, 1, 2, 6, 19]);
        assert_eq!(&cp + &cp, s(&[0, 2, 4, 12, 38]));
    }

    #[test]
    fn mul_examples() {
        let a = s(&[0, 1, 1, 0, 0]);
        assert_eq!(&a * &a, s(&[0, 0, 1, 2, 1]));
        assert_eq!(&a * &PowerSeries::one(4), a);
        let cp = s(&[0, 1, 2, 6, 19, 67]);
        assert_eq!(&cp * &cp, s(&[0, 0, 1, 4, 16, 62]));
    }

    #[test]
    fn substitute_power_dilates() {
        assert_eq!(s(&[0, 1, 3]).substitute_power(2), s(&[0, 0, 1, 0, 3]));
        let f = s(&[0, 1, 1, 3, 9]);
        assert_eq!(f.substitute_power(1), f);
        assert_eq!(f.substitute_power(2), s(&[0, 0, 1, 0, 1, 0, 3, 0, 9]));
        assert_eq!(f.substitute_power_to(3, 7), s(&[0, 0, 0, 1, 0, 0, 1, 0]));
    }

    #[test]
    fn geometric_inverse_examples() {
        assert_eq!(
            s(&[0, 1, 0, 0, 0]).geometric_inverse().unwrap(),
            s(&[1, 1, 1, 1, 1])
        );
        assert_eq!(
            PowerSeries::zero(3).geometric_inverse().unwrap(),
            PowerSeries::one(3)
        );
        let f = s(&[0, 1, 1, 3, 9, 31]);
        let h = f.geometric_inverse().unwrap();
        // multiply back: h (1 - f) = 1
        assert_eq!(&h * &(&PowerSeries::one(5) - &f), PowerSeries::one(5));
        assert_eq!(h, s(&[1, 1, 2, 6, 20, 72]));
    }

    #[test]
    fn geometric_inverse_rejects_constant_term() {
        let err = s(&[3, 1]).geometric_inverse().unwrap_err();
        assert_eq!(err, Error::NonZeroConstant(BigInt::from(3)));
        assert!(err.to_string().contains('3'));
    }

    #[test]
    fn euler_transform_examples() {
        assert_eq!(
            s(&[0, 1, 0, 0, 0, 0]).euler_transform().unwrap(),
            s(&[1; 6])
        );
        assert_eq!(
            PowerSeries::zero(4).euler_transform().unwrap(),
            PowerSeries::one(4)
        );
        let atoms = s(&[0, 1, 2, 6, 19]);
        assert_eq!(atoms.euler_transform().unwrap(), s(&[1, 1, 3, 9, 31]));
        assert!(s(&[1, 1]).euler_transform().is_err());
        assert!(s(&[1, 1]).euler_transform_exp().is_err());
    }

    #[test]
    fn euler_transform_counts_partitions() {
        // all parts allowed once each: the partition numbers
        let atoms = PowerSeries::from_ints((0..=12).map(|n| i64::from(n > 0)));
        let p = atoms.euler_transform().unwrap();
        let partitions = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        assert_eq!(p, s(&partitions));
    }

    #[test]
    fn div_exact_reports_non_integral() {
        let err = s(&[0, 1, 3]).div_exact(&BigInt::from(2)).unwrap_err();
        assert!(matches!(err, Error::NonIntegral { degree: 1, .. }));
    }

    #[test]
    fn shifts() {
        let p = s(&[0, 1, 1, 2]);
        assert_eq!(p.shift_down(1), s(&[1, 1, 2]));
        assert_eq!(p.shift_down(1).shift_up(1), p);
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, -2, 0, 1]).to_string(), "1 - 2x + x^3 + O(x^4)");
        assert_eq!(PowerSeries::zero(1).to_string(), "0 + O(x^2)");
    }

    fn series(order: usize) -> impl Strategy<Value = PowerSeries> {
        prop::collection::vec(-20i64..20, order + 1).prop_map(PowerSeries::from_ints)
    }

    fn atom_series(order: usize) -> impl Strategy<Value = PowerSeries> {
        prop::collection::vec(0i64..6, order)
            .prop_map(|v| PowerSeries::from_ints(std::iter::once(0).chain(v)))
    }

    proptest! {
        #[test]
        fn ring_laws(a in series(8), b in series(8), c in series(8)) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn geometric_inverse_identity(mut g in series(10)) {
            g.set_coeff(0, BigInt::zero());
            let h = g.geometric_inverse().unwrap();
            prop_assert_eq!(&h * &(&PowerSeries::one(10) - &g), PowerSeries::one(10));
        }

        #[test]
        fn substitution_composes(a in series(6), j in 1usize..4, k in 1usize..4) {
            let direct = a.substitute_power(j * k);
            let nested = a.substitute_power(j).substitute_power(k);
            prop_assert_eq!(direct, nested);
        }

        #[test]
        fn euler_forms_agree(a in atom_series(12)) {
            prop_assert_eq!(a.euler_transform().unwrap(), a.euler_transform_exp().unwrap());
        }
    }
}
