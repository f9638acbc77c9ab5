use super::{SeriesError, TruncatedSeries};

/// Largest supported determinant size (`r <= 8`).
pub const MAX_DET_SIZE: usize = 9;

/// Exact determinant of a square matrix of truncated series.
///
/// Uses Laplace expansion along the rows with the minors memoised by column
/// subset, so an `n x n` matrix costs `O(n 2^n)` series products and never
/// divides. The result precision is the minimum precision of the entries.
pub fn series_det(m: &[Vec<TruncatedSeries>]) -> Result<TruncatedSeries, SeriesError> {
    let n = m.len();
    if n == 0 || m.iter().any(|row| row.len() != n) {
        return Err(SeriesError::NotSquare {
            rows: n,
            cols: m.first().map_or(0, Vec::len),
        });
    }
    if n > MAX_DET_SIZE {
        return Err(SeriesError::TooLarge(n));
    }
    let precision = m
        .iter()
        .flatten()
        .map(TruncatedSeries::precision)
        .min()
        .unwrap_or(0);

    // minors[mask] = det of rows 0..popcount(mask) restricted to the columns in mask
    let mut minors: Vec<Option<TruncatedSeries>> = vec![None; 1 << n];
    minors[0] = Some(TruncatedSeries::one(precision));
    for mask in 1usize..(1 << n) {
        let row = mask.count_ones() as usize - 1;
        let mut acc = TruncatedSeries::zero(precision);
        for (pos, col) in (0..n).filter(|c| mask & (1 << c) != 0).enumerate() {
            let entry = &m[row][col];
            if entry.is_identically_zero() {
                continue;
            }
            let sub = minors[mask & !(1 << col)]
                .as_ref()
                .expect("smaller minors are filled first");
            let term = entry * sub;
            // entry sits at (row, pos) of this minor
            acc = if (row + pos).is_multiple_of(2) {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        minors[mask] = Some(acc);
    }
    Ok(minors[(1 << n) - 1].take().expect("full minor computed"))
}
