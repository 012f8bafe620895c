//! Process-wide numeric settings.
//!
//! The approximate engine reads its working precision, the default series
//! truncation order and the relative zero threshold from here. The CLI sets
//! them once at startup from `--digits`, `--trunc` and `--zero-threshold`;
//! library users may do the same. Values are atomics so concurrent readers
//! are safe.

use core::sync::atomic::{AtomicU32, AtomicU64, AtomicUsize, Ordering};

/// Default precision of the approximate engine, in decimal digits.
pub const DEFAULT_DIGITS: u32 = 34;

/// Default truncation order for series built without an explicit order.
pub const DEFAULT_TRUNC: u32 = 200;

/// Truncation orders are doubled on indeterminate outcomes up to this cap.
pub const TRUNC_CAP: u32 = 1600;

/// Default relative zero threshold of the approximate engine.
pub const DEFAULT_ZERO_THRESHOLD: f64 = 1e-10;

static PRECISION_BITS: AtomicUsize = AtomicUsize::new(bits_for_digits(DEFAULT_DIGITS));
static TRUNC_ORDER: AtomicU32 = AtomicU32::new(DEFAULT_TRUNC);
static ZERO_THRESHOLD_BITS: AtomicU64 = AtomicU64::new(0);

/// Binary precision needed for `digits` significant decimal digits, plus
/// guard bits. 3322/1000 over-approximates log2(10).
pub const fn bits_for_digits(digits: u32) -> usize {
    (digits as usize) * 3322 / 1000 + 32
}

/// Working precision of the approximate engine in bits.
pub fn precision_bits() -> usize {
    PRECISION_BITS.load(Ordering::Relaxed)
}

/// Set the approximate-engine precision in decimal digits.
pub fn set_precision_digits(digits: u32) {
    PRECISION_BITS.store(bits_for_digits(digits.max(1)), Ordering::Relaxed);
}

/// Default truncation order for new series and arcs.
pub fn default_trunc() -> u32 {
    TRUNC_ORDER.load(Ordering::Relaxed)
}

/// Set the default truncation order.
pub fn set_default_trunc(trunc: u32) {
    TRUNC_ORDER.store(trunc.max(1), Ordering::Relaxed);
}

/// Relative zero threshold: approximate coefficients whose modulus falls
/// below `threshold * scale` of the data they were cancelled from are
/// treated as noise and dropped.
pub fn zero_threshold() -> f64 {
    let bits = ZERO_THRESHOLD_BITS.load(Ordering::Relaxed);
    if bits == 0 {
        DEFAULT_ZERO_THRESHOLD
    } else {
        f64::from_bits(bits)
    }
}

/// Set the relative zero threshold (must be positive and < 1).
pub fn set_zero_threshold(threshold: f64) {
    let t = if threshold > 0.0 && threshold < 1.0 {
        threshold
    } else {
        DEFAULT_ZERO_THRESHOLD
    };
    ZERO_THRESHOLD_BITS.store(t.to_bits(), Ordering::Relaxed);
}
