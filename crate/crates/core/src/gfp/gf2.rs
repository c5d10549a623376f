//! Word kernels for GF(2) rows: 64 entries per u64, XOR arithmetic.

#[inline]
pub fn get(row: &[u64], j: usize) -> u8 {
    ((row[j >> 6] >> (j & 63)) & 1) as u8
}

#[inline]
pub fn set(row: &mut [u64], j: usize, v: u8) {
    let m = 1u64 << (j & 63);
    if v & 1 != 0 {
        row[j >> 6] |= m;
    } else {
        row[j >> 6] &= !m;
    }
}

/// dst += src (the only nontrivial scalar is 1).
#[inline]
pub fn xor_into(dst: &mut [u64], src: &[u64]) {
    debug_assert_eq!(dst.len(), src.len());
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

/// Column index of the first nonzero entry, if any.
#[inline]
pub fn leading(row: &[u64], cols: usize) -> Option<usize> {
    for (w, &x) in row.iter().enumerate() {
        if x != 0 {
            let j = (w << 6) + x.trailing_zeros() as usize;
            return (j < cols).then_some(j);
        }
    }
    None
}

#[inline]
pub fn is_zero(row: &[u64]) -> bool {
    row.iter().all(|&x| x == 0)
}
