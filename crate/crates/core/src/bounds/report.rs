use std::fmt;

use serde::Serialize;

use super::expr::{Direction, Expr};
use crate::numeric::{fmt_rational, Rational};

/// Quantity a bound constrains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quantity {
    /// Product of `ell` pairwise root distances.
    Product,
    /// Magnitude of a nonzero root coordinate.
    Coordinate,
    /// Minimum distance between distinct roots.
    Separation,
    /// Minimum of a positive polynomial on the simplex.
    MinimumValue,
    /// Number of subdivision steps.
    StepCount,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundName {
    Dmm1Upper,
    Dmm1Lower,
    Dmm1CoarseUpper,
    Dmm1CoarseLower,
    Dmm1CoarseLowerUniform,
    DmmProductUpper,
    DmmProductLower,
    DmmCoordinateLower,
    DmmCoordinateUpper,
    DmmSeparation,
    MixedVolProductUpper,
    MixedVolProductLower,
    MixedVolCoordinateLower,
    MixedVolCoordinateUpper,
    MixedVolSeparation,
    DenseProductLower,
    DenseCoordinateLower,
    DenseCoordinateUpper,
    DenseSeparation,
    ExcessProductUpper,
    ExcessProductLower,
    ExcessCoordinateLower,
    ExcessCoordinateUpper,
    ExcessSeparation,
    ExcessDenseProductLower,
    ExcessDenseCoordinateLower,
    ExcessDenseCoordinateUpper,
    ExcessDenseSeparation,
    GapTheorem,
    ProjectionCoordinate,
    ProjectionCoordinateSimplified,
    EigenMagnitude,
    EigenSeparation,
    EigenGap,
    PosMinDmmP,
    PosMinDmm,
    PosMinJp,
    PosMinBlr,
    PosMinBy,
    SubdivisionPruned,
    SubdivisionTotal,
}

impl BoundName {
    pub fn as_str(self) -> &'static str {
        use BoundName::*;
        match self {
            Dmm1Upper => "dmm1-product-upper",
            Dmm1Lower => "dmm1-product-lower",
            Dmm1CoarseUpper => "dmm1-coarse-upper",
            Dmm1CoarseLower => "dmm1-coarse-lower",
            Dmm1CoarseLowerUniform => "dmm1-coarse-lower-uniform",
            DmmProductUpper => "dmm-product-upper",
            DmmProductLower => "dmm-product-lower",
            DmmCoordinateLower => "dmm-coordinate-lower",
            DmmCoordinateUpper => "dmm-coordinate-upper",
            DmmSeparation => "dmm-sep",
            MixedVolProductUpper => "mv-product-upper",
            MixedVolProductLower => "mv-product-lower",
            MixedVolCoordinateLower => "mv-coordinate-lower",
            MixedVolCoordinateUpper => "mv-coordinate-upper",
            MixedVolSeparation => "mv-sep",
            DenseProductLower => "dense-product-lower",
            DenseCoordinateLower => "dense-coordinate-lower",
            DenseCoordinateUpper => "dense-coordinate-upper",
            DenseSeparation => "dense-sep",
            ExcessProductUpper => "excess-product-upper",
            ExcessProductLower => "excess-product-lower",
            ExcessCoordinateLower => "excess-coordinate-lower",
            ExcessCoordinateUpper => "excess-coordinate-upper",
            ExcessSeparation => "excess-sep",
            ExcessDenseProductLower => "excess-dense-product-lower",
            ExcessDenseCoordinateLower => "excess-dense-coordinate-lower",
            ExcessDenseCoordinateUpper => "excess-dense-coordinate-upper",
            ExcessDenseSeparation => "excess-dense-sep",
            GapTheorem => "gap-theorem",
            ProjectionCoordinate => "projection-coordinate",
            ProjectionCoordinateSimplified => "projection-coordinate-simplified",
            EigenMagnitude => "eigen-magnitude",
            EigenSeparation => "eigen-sep",
            EigenGap => "eigen-gap",
            PosMinDmmP => "posmin-dmmp",
            PosMinDmm => "posmin-dmm",
            PosMinJp => "posmin-jp",
            PosMinBlr => "posmin-blr",
            PosMinBy => "posmin-by",
            SubdivisionPruned => "subdivision-pruned",
            SubdivisionTotal => "subdivision-total",
        }
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Lower => "lower",
            Direction::Upper => "upper",
        })
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::Product => "product",
            Quantity::Coordinate => "coordinate",
            Quantity::Separation => "separation",
            Quantity::MinimumValue => "minimum",
            Quantity::StepCount => "steps",
        })
    }
}

/// A bound `quantity >= 2^log2_value` (lower) or `<= 2^log2_value` (upper).
///
/// `log2_value` is the formula's value rounded outward to a multiple of
/// `2^-32`; `exponent` is its outward integer rounding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub name: BoundName,
    pub direction: Direction,
    pub quantity: Quantity,
    pub log2_value: Rational,
    pub exponent: i64,
    pub citation: String,
}

/// Serializable row form of a [`BoundReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub name: String,
    pub direction: String,
    pub quantity: String,
    pub log2_value: String,
    pub exponent: i64,
    pub citation: String,
}

impl BoundReport {
    pub fn from_expr(
        name: BoundName,
        direction: Direction,
        quantity: Quantity,
        expr: &Expr,
        citation: &str,
    ) -> Self {
        let (log2_value, exponent) = expr.resolve(direction);
        BoundReport { name, direction, quantity, log2_value, exponent, citation: citation.to_string() }
    }

    pub fn row(&self) -> BoundRow {
        BoundRow {
            name: self.name.to_string(),
            direction: self.direction.to_string(),
            quantity: self.quantity.to_string(),
            log2_value: fmt_rational(&self.log2_value),
            exponent: self.exponent,
            citation: self.citation.clone(),
        }
    }

    /// Whether a quantity with `lg` bracketed by `[lo, hi]` certainly
    /// satisfies the bound (`Some(true)`), certainly violates it
    /// (`Some(false)`), or is undecided at this precision.
    pub fn check(&self, lo: &Rational, hi: &Rational) -> Option<bool> {
        match self.direction {
            Direction::Lower if *lo >= self.log2_value => Some(true),
            Direction::Lower if *hi < self.log2_value => Some(false),
            Direction::Upper if *hi <= self.log2_value => Some(true),
            Direction::Upper if *lo > self.log2_value => Some(false),
            _ => None,
        }
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.direction {
            Direction::Lower => ">=",
            Direction::Upper => "<=",
        };
        write!(
            f,
            "{:<34} {} {op} 2^{} ({})",
            self.name.as_str(),
            self.quantity,
            self.exponent,
            self.citation
        )
    }
}
