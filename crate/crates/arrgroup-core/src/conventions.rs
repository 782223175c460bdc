//! Frozen orientation conventions for virtual crossings.
//!
//! These constants were calibrated, not derived: with them the computed
//! diagram of the didactic arrangement at shear `−i/100`
//! reproduces its reference diagram event for event, and the MacLane
//! reference diagram yields over-arc signs `(−1, +1, +1)` for the cycle
//! `ξ₄,₅`. The `conventions` tests of the `arrgroup` crate pin both facts.

/// Which strand is drawn over at a virtual crossing of a computed diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverRule {
    /// The strand with the smaller imaginary `y`-coordinate is over.
    LesserImaginary,
    /// The strand with the greater imaginary `y`-coordinate is over.
    GreaterImaginary,
}

/// Over-strand rule used by the geometric wiring computation.
pub const OVER_RULE: OverRule = OverRule::LesserImaginary;

/// A virtual crossing is positive exactly when its over strand moves from the
/// upper position to the lower one (left to right). Arvola's rule (B) then
/// conjugates the under strand by the over strand's label.
pub const POSITIVE_WHEN_OVER_DESCENDS: bool = true;

/// Sign factor for an over arc met on the left leg of a cycle (traversed
/// rightwards): the crossing sign is used as is.
pub const MU_LEFT_LEG_SIGN: i8 = 1;

/// Sign factor for an over arc met on the right leg of a cycle (traversed
/// leftwards): the orientation flips, so the crossing sign is negated.
pub const MU_RIGHT_LEG_SIGN: i8 = -1;
