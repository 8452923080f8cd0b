use std::ops::RangeInclusive;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("--jobs must be at least 1")]
    ZeroJobs,
    #[error("empty range {lo}..={hi}")]
    EmptyRange { lo: u64, hi: u64 },
}

/// Splits `lo..=hi` into at most `jobs` contiguous, disjoint, non-empty
/// sub-ranges in ascending order. The first `len % k` chunks are one longer.
pub fn partition_range(
    lo: u64,
    hi: u64,
    jobs: usize,
) -> Result<Vec<RangeInclusive<u64>>, PartitionError> {
    if jobs == 0 {
        return Err(PartitionError::ZeroJobs);
    }
    if lo > hi {
        return Err(PartitionError::EmptyRange { lo, hi });
    }
    let len = (hi - lo) as u128 + 1;
    let parts = len.min(jobs as u128);
    let (base, extra) = (len / parts, len % parts);
    let mut start = lo as u128;
    Ok((0..parts)
        .map(|i| {
            let size = base + u128::from(i < extra);
            let range = start as u64..=(start + size - 1) as u64;
            start += size;
            range
        })
        .collect())
}
