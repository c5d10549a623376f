//! Bit-sliced kernels for GF(3) rows.
//!
//! A row of `c` entries is stored as two planes of `words_per_row(c)` u64
//! words each, concatenated: `[lo | hi]`.  Entry encoding: 0 = (0,0),
//! 1 = (lo), 2 = (hi); the pair (1,1) never occurs.  Negation is a plane
//! swap, addition is a fixed boolean circuit on plane words.

/// Pointwise sum of encoded (lo,hi) word pairs.
#[inline(always)]
pub fn add_words(al: u64, ah: u64, bl: u64, bh: u64) -> (u64, u64) {
    let anz = al | ah;
    let bnz = bl | bh;
    let lo = (al & !bnz) | (bl & !anz) | (ah & bh);
    let hi = (ah & !bnz) | (bh & !anz) | (al & bl);
    (lo, hi)
}

#[inline]
pub fn get(row: &[u64], wpr: usize, j: usize) -> u8 {
    let (w, b) = (j >> 6, j & 63);
    let lo = (row[w] >> b) & 1;
    let hi = (row[wpr + w] >> b) & 1;
    (lo + 2 * hi) as u8
}

#[inline]
pub fn set(row: &mut [u64], wpr: usize, j: usize, v: u8) {
    let (w, b) = (j >> 6, j & 63);
    let m = 1u64 << b;
    row[w] &= !m;
    row[wpr + w] &= !m;
    match v % 3 {
        1 => row[w] |= m,
        2 => row[wpr + w] |= m,
        _ => {}
    }
}

/// dst += c*src for c in {1,2}; c = 2 swaps the source planes.
#[inline]
pub fn axpy(dst: &mut [u64], src: &[u64], wpr: usize, c: u8) {
    debug_assert!(c == 1 || c == 2);
    let (dlo, dhi) = dst.split_at_mut(wpr);
    let (slo, shi) = src.split_at(wpr);
    let (slo, shi) = if c == 1 { (slo, shi) } else { (shi, slo) };
    for w in 0..wpr {
        let (l, h) = add_words(dlo[w], dhi[w], slo[w], shi[w]);
        dlo[w] = l;
        dhi[w] = h;
    }
}

/// Scale a row by 2 in place (swap planes).
#[inline]
pub fn double(row: &mut [u64], wpr: usize) {
    let (lo, hi) = row.split_at_mut(wpr);
    lo.swap_with_slice(hi);
}

#[inline]
pub fn leading(row: &[u64], wpr: usize, cols: usize) -> Option<usize> {
    for w in 0..wpr {
        let nz = row[w] | row[wpr + w];
        if nz != 0 {
            let j = (w << 6) + nz.trailing_zeros() as usize;
            return (j < cols).then_some(j);
        }
    }
    None
}

#[inline]
pub fn is_zero(row: &[u64], wpr: usize) -> bool {
    row[..wpr].iter().zip(&row[wpr..2 * wpr]).all(|(&l, &h)| l | h == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn addition_table_exhaustive() {
        // Encodings of 0,1,2 in a single bit position.
        let enc = [(0u64, 0u64), (1, 0), (0, 1)];
        for a in 0..3u64 {
            for b in 0..3u64 {
                let (al, ah) = enc[a as usize];
                let (bl, bh) = enc[b as usize];
                let (l, h) = add_words(al, ah, bl, bh);
                let want = enc[((a + b) % 3) as usize];
                assert_eq!((l & 1, h & 1), want, "{a}+{b}");
            }
        }
    }

    #[test]
    fn get_set_roundtrip() {
        let wpr = 2;
        let mut row = [0u64; 4];
        for j in 0..100 {
            set(&mut row, wpr, j, (j % 3) as u8);
        }
        for j in 0..100 {
            assert_eq!(get(&row, wpr, j), (j % 3) as u8);
        }
    }
}
