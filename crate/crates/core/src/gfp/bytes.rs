//! Byte-per-entry kernels for the small primes beyond 3.  Also serves as
//! the unpacked reference implementation the packed backends are tested
//! against.

#[inline]
pub fn axpy(dst: &mut [u8], src: &[u8], c: u8, p: u8) {
    debug_assert_eq!(dst.len(), src.len());
    for (d, s) in dst.iter_mut().zip(src) {
        *d = ((*d as u16 + c as u16 * *s as u16) % p as u16) as u8;
    }
}

#[inline]
pub fn scale(row: &mut [u8], c: u8, p: u8) {
    for d in row.iter_mut() {
        *d = ((*d as u16 * c as u16) % p as u16) as u8;
    }
}

#[inline]
pub fn leading(row: &[u8]) -> Option<usize> {
    row.iter().position(|&x| x != 0)
}
