//! Parallel/sequential execution of indexed scans.
//!
//! The verifiers scan an index range and report the first index that yields
//! a finding (or an error). With the `parallel` feature the scan is split
//! across the current rayon pool; the reported finding is always the one at
//! the least index, so verdicts and witnesses do not depend on worker count.

use crate::Result;

/// Returns the finding with the least index, scanning in parallel when the
/// `parallel` feature is enabled.
#[cfg(feature = "parallel")]
pub fn find_first_finding<T, F>(count: u64, check: F) -> Result<Option<T>>
where
    T: Send,
    F: Fn(u64) -> Result<Option<T>> + Sync,
{
    use rayon::prelude::*;
    match (0..count)
        .into_par_iter()
        .find_map_first(|idx| check(idx).transpose())
    {
        Some(Ok(found)) => Ok(Some(found)),
        Some(Err(e)) => Err(e),
        None => Ok(None),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn find_first_finding<T, F>(count: u64, check: F) -> Result<Option<T>>
where
    T: Send,
    F: Fn(u64) -> Result<Option<T>> + Sync,
{
    find_first_finding_seq(count, check)
}

/// Sequential scan with the same contract as [`find_first_finding`]; the
/// whole story when the `parallel` feature is off.
#[cfg_attr(feature = "parallel", allow(dead_code))]
pub fn find_first_finding_seq<T, F>(count: u64, check: F) -> Result<Option<T>>
where
    F: Fn(u64) -> Result<Option<T>>,
{
    for idx in 0..count {
        if let Some(found) = check(idx)? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}
