//! How many a³b quadrilaterals on the earth map curve admit flips.

use crate::error::{Error, Result};
use crate::trig::check_tile_count;

fn check_flip_f(f: u32) -> Result<()> {
    check_tile_count(f)?;
    if f < 8 {
        return Err(Error::InvalidParameter(format!(
            "no flip modifications exist for f = {f} < 8"
        )));
    }
    Ok(())
}

/// Number of quadrilaterals admitting flips: `2 floor((f - 4)/8) + 1`.
pub fn q1(f: u32) -> Result<u32> {
    check_flip_f(f)?;
    Ok(2 * ((f - 4) / 8) + 1)
}

/// How many of them are rational, looked up by the residue of `f` mod 24.
fn q2(f: u32) -> u32 {
    match (f, f % 24) {
        (8, _) => 0,
        (18, _) => 1,
        (_, 8 | 16 | 20 | 4) => 2,
        (_, 10 | 12 | 14 | 22 | 0 | 2) => 1,
        (_, 18 | 6) => 0,
        _ => unreachable!("even f"),
    }
}

/// `(Q1, Q2, Q3)`: all, rational and general quadrilaterals admitting flips.
pub fn q_table(f: u32) -> Result<(u32, u32, u32)> {
    let all = q1(f)?;
    let rational = q2(f);
    Ok((all, rational, all - rational))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_columns() {
        assert_eq!(q_table(8).unwrap(), (1, 0, 1));
        assert_eq!(q_table(18).unwrap(), (3, 1, 2));
        assert_eq!(q_table(16).unwrap(), (3, 2, 1));
        assert!(q1(6).is_err());
        assert!(q1(9).is_err());
    }
}
