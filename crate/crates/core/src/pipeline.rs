//! Generating-function pipeline for C-trees.
//!
//! The planted series `P` and the planted-forest series `F` are bootstrapped
//! together from `P = x`: `F/x` is the multiset transform of `P/x - 1`, and
//! `P` sums the flip-symmetric cycle shapes hanging below the root with a
//! forest at every cycle node. From `F` the skeleton-rooted series sums
//! bracelet-symmetric root cycles, and the dissimilarity identity
//! `C + C'^2 = C. + E2(C')` yields the unrooted count `C`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cycle_index::{z_dihedral, z_s2, Substituter};
use crate::error::{Error, Result};
use crate::series::PowerSeries;

/// Which cycle lengths a C-tree may contain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariantFlag {
    /// `true` admits cycles of length 2 (double edges).
    pub allow_two_cycles: bool,
}

impl VariantFlag {
    pub const ALL: Self = Self {
        allow_two_cycles: true,
    };
    pub const NO_TWO_CYCLES: Self = Self {
        allow_two_cycles: false,
    };

    pub fn name(self) -> &'static str {
        if self.allow_two_cycles {
            "all"
        } else {
            "no-two-cycles"
        }
    }

    pub(crate) fn lengths(self) -> CycleLengths {
        if self.allow_two_cycles {
            CycleLengths::Any
        } else {
            CycleLengths::NoTwo
        }
    }
}

impl Default for VariantFlag {
    fn default() -> Self {
        Self::ALL
    }
}

impl fmt::Display for VariantFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Admissible cycle lengths. `OnlyOne` degenerates C-trees to ordinary trees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum CycleLengths {
    Any,
    NoTwo,
    OnlyOne,
}

impl CycleLengths {
    fn allows(self, c: usize) -> bool {
        match self {
            Self::Any => true,
            Self::NoTwo => c != 2,
            Self::OnlyOne => c == 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Route {
    /// Geometric-series closed form in `F(x)` and `F(x^2)`.
    ClosedForm,
    /// Explicit sum of the palindromic cycle indices over cycle lengths.
    Termwise,
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::TooSmall {
            what: "order",
            min: 1,
            got: 0,
        });
    }
    Ok(())
}

/// `C'(x) = P(x)/x - 1`: C-trees with a marked entry node. The result has
/// order one less than `planted`.
pub fn decapitated(planted: &PowerSeries) -> PowerSeries {
    assert!(planted.order() >= 1, "planted series needs order >= 1");
    let mut out = planted.shift_down(1);
    let c0 = out.coeff(0) - BigInt::one();
    out.set_coeff(0, c0);
    out
}

/// `F = x * EulerTransform(P/x - 1)`, exact to the order of `planted`.
fn forest_from_planted(planted: &PowerSeries) -> Result<PowerSeries> {
    Ok(decapitated(planted).euler_transform()?.shift_up(1))
}

/// `P / x` from the closed form
/// `1/2 + F(1+F) / (2(1 - F(x^2))) + 1 / (2(1 - F))`, minus `F^2` when
/// two-cycles are excluded.
fn planted_over_x_closed(forest: &PowerSeries, lengths: CycleLengths) -> Result<PowerSeries> {
    let order = forest.order();
    let one = PowerSeries::one(order);
    let forest_sq = forest.substitute_power_to(2, order);
    let numerator = forest * &(&one + forest);
    let mut doubled =
        &(&one + &(&numerator * &forest_sq.geometric_inverse()?)) + &forest.geometric_inverse()?;
    match lengths {
        CycleLengths::Any => {}
        CycleLengths::NoTwo => {
            let square = forest * forest;
            doubled = &doubled - &(&square + &square);
        }
        CycleLengths::OnlyOne => unreachable!("closed form covers the two public variants"),
    }
    doubled.div_exact(&BigInt::from(2))
}

/// `P / x` as `sum_c Z(S2, c)` with `t_i -> F(x^i)`, over admissible `c`.
fn planted_over_x_termwise(forest: &PowerSeries, lengths: CycleLengths) -> Result<PowerSeries> {
    let mut sub = Substituter::new(forest, forest.order())?;
    let mut acc = PowerSeries::zero(sub.order());
    for c in (0..=sub.order()).filter(|&c| c == 0 || lengths.allows(c)) {
        acc = &acc + &sub.substitute(&z_s2(c))?;
    }
    Ok(acc)
}

fn step_with(
    planted: &PowerSeries,
    lengths: CycleLengths,
    route: Route,
) -> Result<(PowerSeries, PowerSeries)> {
    let forest = forest_from_planted(planted)?;
    let over_x = match route {
        Route::ClosedForm => planted_over_x_closed(&forest, lengths)?,
        Route::Termwise => planted_over_x_termwise(&forest, lengths)?,
    };
    Ok((forest, over_x.shift_up(1)))
}

/// One bootstrap iteration. Given `P` exact to order `m`, returns `F` exact
/// to order `m` and the next planted estimate exact to order `m + 1`.
pub fn bootstrap_step(
    planted: &PowerSeries,
    variant: VariantFlag,
) -> Result<(PowerSeries, PowerSeries)> {
    step_with(planted, variant.lengths(), Route::ClosedForm)
}

fn bootstrap_with(
    order: usize,
    lengths: CycleLengths,
    route: Route,
) -> Result<(PowerSeries, PowerSeries)> {
    check_order(order)?;
    let cap = order + 2;
    // P = x is exact to order 1; every step adds one exact coefficient
    let mut planted = PowerSeries::from_ints([0, 1]);
    let mut iterations = 0;
    while planted.order() < order {
        planted = step_with(&planted, lengths, route)?.1;
        iterations += 1;
    }
    // one more pass at full order must reproduce the same coefficients
    let (forest, next) = step_with(&planted, lengths, route)?;
    iterations += 1;
    if next.truncate(order) != planted || iterations > cap {
        return Err(Error::NoFixedPoint(iterations));
    }
    Ok((planted, forest))
}

/// Planted series `P` and planted-forest series `F`, both exact to `order`.
pub fn bootstrap_planted(order: usize, variant: VariantFlag) -> Result<(PowerSeries, PowerSeries)> {
    bootstrap_with(order, variant.lengths(), Route::ClosedForm)
}

/// Same as [`bootstrap_planted`] but summing the cycle indices cycle length
/// by cycle length instead of using the geometric closed form. Kept as an
/// independent cross-check.
pub fn bootstrap_planted_termwise(
    order: usize,
    variant: VariantFlag,
) -> Result<(PowerSeries, PowerSeries)> {
    bootstrap_with(order, variant.lengths(), Route::Termwise)
}

fn skeleton_rooted_with(
    forest: &PowerSeries,
    lengths: CycleLengths,
    order: usize,
) -> Result<PowerSeries> {
    let mut sub = Substituter::new(forest, order)?;
    let order = sub.order();
    let mut acc = PowerSeries::zero(order);
    // Z(D_c) with t_i -> F(x^i) has valuation c, so c <= order is exact;
    // each group average is integral on its own
    for c in (1..=order).filter(|&c| lengths.allows(c)) {
        acc = &acc + &sub.substitute(&z_dihedral(c))?;
    }
    Ok(acc)
}

/// `C.(x) = sum_c Z(D_c)` with `t_i -> F(x^i)`: C-trees with one marked
/// cycle, cycles of length 1 included.
pub fn skeleton_rooted(
    forest: &PowerSeries,
    variant: VariantFlag,
    order: usize,
) -> Result<PowerSeries> {
    skeleton_rooted_with(forest, variant.lengths(), order)
}

/// Bridge-rooted series from `C'`: `(E2(C'), C'^2)`, i.e. marked bridges
/// and marked oriented bridges.
pub fn pair_series(decapitated: &PowerSeries) -> Result<(PowerSeries, PowerSeries)> {
    if !decapitated.coeff(0).is_zero() {
        return Err(Error::NonZeroConstant(decapitated.coeff(0).clone()));
    }
    let order = decapitated.order();
    let ordered = decapitated * decapitated;
    let unordered =
        (&ordered + &decapitated.substitute_power_to(2, order)).div_exact(&BigInt::from(2))?;
    Ok((unordered, ordered))
}

/// `C = C. + E2(C') - C'^2` for `n >= 1`; the constant term is 1.
pub fn otter_synthesis(
    skeleton_rooted: &PowerSeries,
    decapitated: &PowerSeries,
) -> Result<PowerSeries> {
    let (unordered, ordered) = pair_series(decapitated)?;
    let mut out = &(skeleton_rooted + &unordered) - &ordered;
    out.set_coeff(0, BigInt::one());
    Ok(out)
}

/// Ordinary trees, counted by running the same pipeline with every cycle
/// of length 1. Constant term 1, then `T(1), T(2), ...`.
pub fn tree_series_check(order: usize) -> Result<PowerSeries> {
    let (planted, forest) = bootstrap_with(order + 1, CycleLengths::OnlyOne, Route::Termwise)?;
    let cp = decapitated(&planted);
    let cdot = skeleton_rooted_with(&forest.truncate(order), CycleLengths::OnlyOne, order)?;
    otter_synthesis(&cdot, &cp)
}

/// Every series of the pipeline for one variant at a common order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesBundle {
    pub variant: VariantFlag,
    pub order: usize,
    /// `P`, planted C-trees.
    pub planted: PowerSeries,
    /// `F`, planted C-forests.
    pub forest: PowerSeries,
    /// `C'`, C-trees with a marked node.
    pub decapitated: PowerSeries,
    /// `C.`, C-trees with a marked cycle.
    pub skeleton_rooted: PowerSeries,
    /// `C`, unrooted C-trees.
    pub ctree: PowerSeries,
}

impl SeriesBundle {
    pub fn compute(order: usize, variant: VariantFlag) -> Result<Self> {
        check_order(order)?;
        // C' loses one order to the division by x
        let (planted, forest) = bootstrap_planted(order + 1, variant)?;
        let decapitated = decapitated(&planted);
        let planted = planted.truncate(order);
        let forest = forest.truncate(order);
        let skeleton_rooted = skeleton_rooted(&forest, variant, order)?;
        let ctree = otter_synthesis(&skeleton_rooted, &decapitated)?;
        Ok(Self {
            variant,
            order,
            planted,
            forest,
            decapitated,
            skeleton_rooted,
            ctree,
        })
    }

    /// `(E2(C'), C'^2)`, the unoriented and oriented bridge-rooted counts.
    pub fn bridge_rooted(&self) -> Result<(PowerSeries, PowerSeries)> {
        pair_series(&self.decapitated)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(coeffs: &[i64]) -> PowerSeries {
        PowerSeries::from_ints(coeffs.iter().copied())
    }

    #[test]
    fn bootstrap_examples() {
        let (p, f) = bootstrap_planted(6, VariantFlag::ALL).unwrap();
        assert_eq!(p, s(&[0, 1, 1, 2, 6, 19, 67]));
        assert_eq!(f, s(&[0, 1, 1, 3, 9, 31, 110]));

        let (p, f) = bootstrap_planted(6, VariantFlag::NO_TWO_CYCLES).unwrap();
        assert_eq!(p, s(&[0, 1, 1, 1, 3, 8, 24]));
        assert_eq!(f, s(&[0, 1, 1, 2, 5, 14, 41]));

        for v in [VariantFlag::ALL, VariantFlag::NO_TWO_CYCLES] {
            let (p, f) = bootstrap_planted(1, v).unwrap();
            assert_eq!(p, s(&[0, 1]));
            assert_eq!(f, s(&[0, 1]));
        }
        assert!(matches!(
            bootstrap_planted(0, VariantFlag::ALL),
            Err(Error::TooSmall { .. })
        ));
    }

    #[test]
    fn decapitated_examples() {
        let (p, _) = bootstrap_planted(5, VariantFlag::ALL).unwrap();
        assert_eq!(decapitated(&p), s(&[0, 1, 2, 6, 19]));
        assert_eq!(decapitated(&s(&[0, 1])), s(&[0]));
        let (p, _) = bootstrap_planted(5, VariantFlag::NO_TWO_CYCLES).unwrap();
        assert_eq!(decapitated(&p), s(&[0, 1, 1, 3, 8]));
    }

    #[test]
    fn skeleton_rooted_examples() {
        let (_, f) = bootstrap_planted(6, VariantFlag::ALL).unwrap();
        let cdot = skeleton_rooted(&f, VariantFlag::ALL, 6).unwrap();
        assert_eq!(cdot, s(&[0, 1, 2, 5, 15, 49, 176]));

        let (_, f) = bootstrap_planted(6, VariantFlag::NO_TWO_CYCLES).unwrap();
        let cdot = skeleton_rooted(&f, VariantFlag::NO_TWO_CYCLES, 6).unwrap();
        assert_eq!(cdot, s(&[0, 1, 1, 3, 7, 19, 55]));

        let cdot = skeleton_rooted(&s(&[0, 1]), VariantFlag::ALL, 1).unwrap();
        assert_eq!(cdot, s(&[0, 1]));
    }

    #[test]
    fn pair_series_examples() {
        let (p, _) = bootstrap_planted(7, VariantFlag::ALL).unwrap();
        let cp = decapitated(&p);
        let (unordered, ordered) = pair_series(&cp).unwrap();
        assert_eq!(unordered, s(&[0, 0, 1, 2, 9, 31, 126]));
        assert_eq!(ordered, s(&[0, 0, 1, 4, 16, 62, 246]));

        let (u, o) = pair_series(&s(&[0, 1, 0])).unwrap();
        assert_eq!(u, s(&[0, 0, 1]));
        assert_eq!(o, s(&[0, 0, 1]));
        assert!(pair_series(&s(&[1, 1])).is_err());
    }

    #[test]
    fn otter_examples() {
        let c = SeriesBundle::compute(8, VariantFlag::ALL).unwrap().ctree;
        assert_eq!(c, s(&[1, 1, 2, 3, 8, 18, 56, 165, 563]));
        let c = SeriesBundle::compute(8, VariantFlag::NO_TWO_CYCLES)
            .unwrap()
            .ctree;
        assert_eq!(c, s(&[1, 1, 1, 2, 4, 8, 20, 48, 133]));
        let c = otter_synthesis(&s(&[0, 1]), &s(&[0, 1])).unwrap();
        assert_eq!(c, s(&[1, 1]));
    }

    #[test]
    fn trees() {
        assert_eq!(
            tree_series_check(11).unwrap(),
            s(&[1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235])
        );
        assert_eq!(tree_series_check(1).unwrap(), s(&[1, 1]));
        assert_eq!(tree_series_check(4).unwrap().coeff(4), &BigInt::from(2));
    }

    #[test]
    fn bundle_shapes() {
        for v in [VariantFlag::ALL, VariantFlag::NO_TWO_CYCLES] {
            let b = SeriesBundle::compute(12, v).unwrap();
            for series in [
                &b.planted,
                &b.forest,
                &b.decapitated,
                &b.skeleton_rooted,
                &b.ctree,
            ] {
                assert_eq!(series.order(), 12);
            }
            assert!(b.planted.coeff(0).is_zero());
            assert!(b.forest.coeff(0).is_zero());
            assert!(b.ctree.coeff(0).is_one());
            assert_eq!(b.variant, v);
        }
    }

    #[test]
    fn otter_identity_balances() {
        for v in [VariantFlag::ALL, VariantFlag::NO_TWO_CYCLES] {
            let b = SeriesBundle::compute(25, v).unwrap();
            let (unordered, ordered) = b.bridge_rooted().unwrap();
            for n in 1..=25 {
                assert_eq!(
                    b.ctree.coeff(n) + ordered.coeff(n),
                    b.skeleton_rooted.coeff(n) + unordered.coeff(n),
                    "n = {n}"
                );
            }
        }
    }

    #[test]
    fn fixed_order_iteration_gains_one_coefficient_per_step() {
        let order = 15;
        for v in [VariantFlag::ALL, VariantFlag::NO_TWO_CYCLES] {
            let (target, _) = bootstrap_planted(order, v).unwrap();
            let mut p = PowerSeries::monomial(1, order);
            for k in 0..=order + 2 {
                // after k steps coefficients up to k + 1 are final
                let settled = (k + 1).min(order);
                assert_eq!(p.truncate(settled), target.truncate(settled), "k = {k}");
                p = bootstrap_step(&p, v).unwrap().1.truncate(order);
            }
            assert_eq!(p, target);
            // one more step changes nothing
            assert_eq!(bootstrap_step(&p, v).unwrap().1.truncate(order), p);
        }
    }

    #[test]
    fn closed_form_agrees_with_termwise() {
        for v in [VariantFlag::ALL, VariantFlag::NO_TWO_CYCLES] {
            assert_eq!(
                bootstrap_planted(20, v).unwrap(),
                bootstrap_planted_termwise(20, v).unwrap()
            );
        }
    }

    #[test]
    fn variant_labels() {
        assert_eq!(VariantFlag::ALL.to_string(), "all");
        assert_eq!(VariantFlag::NO_TWO_CYCLES.to_string(), "no-two-cycles");
        assert_eq!(VariantFlag::default(), VariantFlag::ALL);
    }
}
