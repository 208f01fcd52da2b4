use crate::error::{Error, Result};

/// Largest step for which the closed-form counts fit in `u64`.
pub const MAX_COUNT_STEP: u32 = 30;

pub(crate) fn pow4(e: u32) -> u64 {
    1u64 << (2 * e)
}

pub(crate) fn check_step(step: u32, min: u32) -> Result<()> {
    if step < min || step > MAX_COUNT_STEP {
        return Err(Error::StepOutOfRange {
            step,
            min,
            max: MAX_COUNT_STEP,
        });
    }
    Ok(())
}

pub(crate) fn check_index(index: u64, len: u64) -> Result<()> {
    if index == 0 || index > len {
        return Err(Error::IndexOutOfRange { index, len });
    }
    Ok(())
}

/// Splits `idx > 0` as `4^e · m` with `4 ∤ m`.
pub(crate) fn strip_fours(mut idx: u64) -> (u32, u64) {
    let mut e = 0;
    while idx % 4 == 0 {
        idx /= 4;
        e += 1;
    }
    (e, idx)
}

/// Renders a bit code as a `0`/`1` string.
pub(crate) fn fmt_bits(bits: &[bool], f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
    for &b in bits {
        f.write_str(if b { "1" } else { "0" })?;
    }
    Ok(())
}
