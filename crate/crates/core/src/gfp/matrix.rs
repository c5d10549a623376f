//! The packed dense matrix type and its arithmetic.

use alloc::vec;
use alloc::vec::Vec;

use super::{bytes, gf2, gf3, is_supported_prime, words_per_row, Echelon, Fed, GfError};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Dense matrix over GF(p), immutable in spirit: the mutating methods are
/// crate-internal building blocks.  Rows are vectors; the product `v·m`
/// realizes the action of `m` on the row vector `v`.
#[derive(Clone, PartialEq, Eq)]
pub struct GFMatrix {
    p: u8,
    rows: usize,
    cols: usize,
    store: Store,
}

#[derive(Clone, PartialEq, Eq)]
enum Store {
    /// GF(2): one u64 plane, `words_per_row(cols)` words per row.
    B1(Vec<u64>),
    /// GF(3): per row `[lo-plane | hi-plane]`, each `words_per_row(cols)` words.
    B2(Vec<u64>),
    /// Byte per entry, residues < p.
    By(Vec<u8>),
}

impl GFMatrix {
    pub fn zeros(p: u8, rows: usize, cols: usize) -> Self {
        assert!(is_supported_prime(p), "unsupported prime {p}");
        let store = match p {
            2 => Store::B1(vec![0; rows * words_per_row(cols)]),
            3 => Store::B2(vec![0; rows * 2 * words_per_row(cols)]),
            _ => Store::By(vec![0; rows * cols]),
        };
        GFMatrix { p, rows, cols, store }
    }

    pub fn identity(p: u8, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_entries(p: u8, rows: usize, cols: usize, entries: &[u8]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        let mut m = Self::zeros(p, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, entries[i * cols + j] % p);
            }
        }
        m
    }

    /// Signed-entry constructor; negative values wrap mod p.
    pub fn from_i64(p: u8, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        let mut m = Self::zeros(p, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, entries[i * cols + j].rem_euclid(p as i64) as u8);
            }
        }
        m
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Words (B1/B2) or bytes (By) per row.
    pub(crate) fn stride(&self) -> usize {
        match &self.store {
            Store::B1(_) => words_per_row(self.cols),
            Store::B2(_) => 2 * words_per_row(self.cols),
            Store::By(_) => self.cols,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        debug_assert!(i < self.rows && j < self.cols);
        let s = self.stride();
        match &self.store {
            Store::B1(d) => gf2::get(&d[i * s..(i + 1) * s], j),
            Store::B2(d) => gf3::get(&d[i * s..(i + 1) * s], s / 2, j),
            Store::By(d) => d[i * s + j],
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        debug_assert!(i < self.rows && j < self.cols);
        let s = self.stride();
        match &mut self.store {
            Store::B1(d) => gf2::set(&mut d[i * s..(i + 1) * s], j, v),
            Store::B2(d) => gf3::set(&mut d[i * s..(i + 1) * s], s / 2, j, v),
            Store::By(d) => d[i * s + j] = v % self.p,
        }
    }

    pub fn row_entries(&self, i: usize) -> Vec<u8> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    pub fn push_zero_row(&mut self) {
        let s = self.stride();
        match &mut self.store {
            Store::B1(d) => d.resize(d.len() + s, 0),
            Store::B2(d) => d.resize(d.len() + s, 0),
            Store::By(d) => d.resize(d.len() + s, 0),
        }
        self.rows += 1;
    }

    pub fn copy_row_from(&mut self, i: usize, src: &GFMatrix, si: usize) {
        assert_eq!(self.p, src.p);
        assert_eq!(self.cols, src.cols);
        let s = self.stride();
        match (&mut self.store, &src.store) {
            (Store::B1(d), Store::B1(e)) => d[i * s..(i + 1) * s].copy_from_slice(&e[si * s..(si + 1) * s]),
            (Store::B2(d), Store::B2(e)) => d[i * s..(i + 1) * s].copy_from_slice(&e[si * s..(si + 1) * s]),
            (Store::By(d), Store::By(e)) => d[i * s..(i + 1) * s].copy_from_slice(&e[si * s..(si + 1) * s]),
            _ => unreachable!("same p implies same backend"),
        }
    }

    /// row_i += c * row_j of `src` (which may not alias `self`).
    pub fn axpy_row_from(&mut self, i: usize, src: &GFMatrix, j: usize, c: u8) {
        debug_assert_eq!(self.p, src.p);
        debug_assert_eq!(self.cols, src.cols);
        let c = c % self.p;
        if c == 0 {
            return;
        }
        let s = self.stride();
        match (&mut self.store, &src.store) {
            (Store::B1(d), Store::B1(e)) => gf2::xor_into(&mut d[i * s..(i + 1) * s], &e[j * s..(j + 1) * s]),
            (Store::B2(d), Store::B2(e)) => gf3::axpy(&mut d[i * s..(i + 1) * s], &e[j * s..(j + 1) * s], s / 2, c),
            (Store::By(d), Store::By(e)) => bytes::axpy(&mut d[i * s..(i + 1) * s], &e[j * s..(j + 1) * s], c, self.p),
            _ => unreachable!(),
        }
    }

    /// row_i += c * row_j within the same matrix; i != j.
    pub fn axpy_row(&mut self, i: usize, j: usize, c: u8) {
        assert_ne!(i, j);
        let c = c % self.p;
        if c == 0 {
            return;
        }
        let s = self.stride();
        let (lo, hi, flip) = if i < j { (i, j, false) } else { (j, i, true) };
        match &mut self.store {
            Store::B1(d) => {
                let (a, b) = d[lo * s..].split_at_mut((hi - lo) * s);
                let (dst, src) = if flip { (&mut b[..s], &a[..s]) } else { (&mut a[..s], &b[..s]) };
                gf2::xor_into(dst, src);
            }
            Store::B2(d) => {
                let (a, b) = d[lo * s..].split_at_mut((hi - lo) * s);
                let (dst, src) = if flip { (&mut b[..s], &a[..s]) } else { (&mut a[..s], &b[..s]) };
                gf3::axpy(dst, src, s / 2, c);
            }
            Store::By(d) => {
                let (a, b) = d[lo * s..].split_at_mut((hi - lo) * s);
                let (dst, src) = if flip { (&mut b[..s], &a[..s]) } else { (&mut a[..s], &b[..s]) };
                bytes::axpy(dst, src, c, self.p);
            }
        }
    }

    pub fn scale_row(&mut self, i: usize, c: u8) {
        let c = c % self.p;
        if c == 1 {
            return;
        }
        let s = self.stride();
        match &mut self.store {
            Store::B1(d) => {
                if c == 0 {
                    d[i * s..(i + 1) * s].fill(0);
                }
            }
            Store::B2(d) => match c {
                0 => d[i * s..(i + 1) * s].fill(0),
                2 => gf3::double(&mut d[i * s..(i + 1) * s], s / 2),
                _ => {}
            },
            Store::By(d) => bytes::scale(&mut d[i * s..(i + 1) * s], c, self.p),
        }
    }

    pub fn leading_in_row(&self, i: usize) -> Option<usize> {
        let s = self.stride();
        match &self.store {
            Store::B1(d) => gf2::leading(&d[i * s..(i + 1) * s], self.cols),
            Store::B2(d) => gf3::leading(&d[i * s..(i + 1) * s], s / 2, self.cols),
            Store::By(d) => bytes::leading(&d[i * s..(i + 1) * s]),
        }
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        let s = self.stride();
        match &self.store {
            Store::B1(d) => gf2::is_zero(&d[i * s..(i + 1) * s]),
            Store::B2(d) => gf3::is_zero(&d[i * s..(i + 1) * s], s / 2),
            Store::By(d) => d[i * s..(i + 1) * s].iter().all(|&x| x == 0),
        }
    }

    pub fn is_zero(&self) -> bool {
        (0..self.rows).all(|i| self.row_is_zero(i))
    }

    /// Iterate the nonzero entries `(j, c)` of row `i`, ascending in `j`.
    pub fn row_nonzeros(&self, i: usize) -> Vec<(usize, u8)> {
        let s = self.stride();
        let mut out = Vec::new();
        match &self.store {
            Store::B1(d) => {
                let r = &d[i * s..(i + 1) * s];
                for (w, &x) in r.iter().enumerate() {
                    let mut x = x;
                    while x != 0 {
                        let b = x.trailing_zeros() as usize;
                        let j = (w << 6) + b;
                        if j < self.cols {
                            out.push((j, 1));
                        }
                        x &= x - 1;
                    }
                }
            }
            Store::B2(d) => {
                let wpr = s / 2;
                let r = &d[i * s..(i + 1) * s];
                for w in 0..wpr {
                    let mut nz = r[w] | r[wpr + w];
                    while nz != 0 {
                        let b = nz.trailing_zeros() as usize;
                        let j = (w << 6) + b;
                        if j < self.cols {
                            let c = if (r[w] >> b) & 1 == 1 { 1 } else { 2 };
                            out.push((j, c));
                        }
                        nz &= nz - 1;
                    }
                }
            }
            Store::By(d) => {
                for (j, &c) in d[i * s..(i + 1) * s].iter().enumerate() {
                    if c != 0 {
                        out.push((j, c));
                    }
                }
            }
        }
        out
    }

    pub fn mat_mul(&self, other: &GFMatrix) -> Result<GFMatrix, GfError> {
        if self.p != other.p {
            return Err(GfError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(GfError::DimMismatch);
        }
        let mut out = GFMatrix::zeros(self.p, self.rows, other.cols);
        let s_out = out.stride();
        let mul_row = |i: usize, out_row: &mut [u64], out_row_by: &mut [u8]| {
            // out_row is used by packed backends, out_row_by by the byte one.
            match (&self.store, &other.store) {
                (Store::B1(a), Store::B1(b)) => {
                    let sa = words_per_row(self.cols);
                    let sb = words_per_row(other.cols);
                    let ar = &a[i * sa..(i + 1) * sa];
                    for (w, &x) in ar.iter().enumerate() {
                        let mut x = x;
                        while x != 0 {
                            let k = (w << 6) + x.trailing_zeros() as usize;
                            if k < self.cols {
                                gf2::xor_into(out_row, &b[k * sb..(k + 1) * sb]);
                            }
                            x &= x - 1;
                        }
                    }
                }
                (Store::B2(a), Store::B2(b)) => {
                    let sa = 2 * words_per_row(self.cols);
                    let sb = 2 * words_per_row(other.cols);
                    let wpra = sa / 2;
                    let ar = &a[i * sa..(i + 1) * sa];
                    for w in 0..wpra {
                        let mut nz = ar[w] | ar[wpra + w];
                        while nz != 0 {
                            let bit = nz.trailing_zeros() as usize;
                            let k = (w << 6) + bit;
                            if k < self.cols {
                                let c = if (ar[w] >> bit) & 1 == 1 { 1 } else { 2 };
                                gf3::axpy(out_row, &b[k * sb..(k + 1) * sb], sb / 2, c);
                            }
                            nz &= nz - 1;
                        }
                    }
                }
                (Store::By(a), Store::By(b)) => {
                    let sa = self.cols;
                    let sb = other.cols;
                    let mut acc = vec![0u32; sb];
                    for k in 0..self.cols {
                        let c = a[i * sa + k];
                        if c != 0 {
                            let br = &b[k * sb..(k + 1) * sb];
                            for (t, &v) in acc.iter_mut().zip(br) {
                                *t += c as u32 * v as u32;
                            }
                        }
                    }
                    for (t, &v) in out_row_by.iter_mut().zip(&acc) {
                        *t = (v % self.p as u32) as u8;
                    }
                }
                _ => unreachable!(),
            }
        };

        match &mut out.store {
            Store::B1(d) | Store::B2(d) => {
                #[cfg(feature = "parallel")]
                {
                    d.par_chunks_mut(s_out)
                        .enumerate()
                        .for_each(|(i, row)| mul_row(i, row, &mut []));
                }
                #[cfg(not(feature = "parallel"))]
                {
                    for (i, row) in d.chunks_mut(s_out).enumerate() {
                        mul_row(i, row, &mut []);
                    }
                }
            }
            Store::By(d) => {
                #[cfg(feature = "parallel")]
                {
                    d.par_chunks_mut(s_out)
                        .enumerate()
                        .for_each(|(i, row)| mul_row(i, &mut [], row));
                }
                #[cfg(not(feature = "parallel"))]
                {
                    for (i, row) in d.chunks_mut(s_out).enumerate() {
                        mul_row(i, &mut [], row);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &GFMatrix) -> Result<GFMatrix, GfError> {
        if self.p != other.p {
            return Err(GfError::FieldMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(GfError::DimMismatch);
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            out.axpy_row_from(i, other, i, 1);
        }
        Ok(out)
    }

    pub fn neg(&self) -> GFMatrix {
        let mut out = self.clone();
        for i in 0..self.rows {
            out.scale_row(i, self.p - 1);
        }
        out
    }

    pub fn sub(&self, other: &GFMatrix) -> Result<GFMatrix, GfError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u8) -> GFMatrix {
        let mut out = self.clone();
        for i in 0..self.rows {
            out.scale_row(i, c);
        }
        out
    }

    pub fn transpose(&self) -> GFMatrix {
        let mut out = GFMatrix::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for (j, c) in self.row_nonzeros(i) {
                out.set(j, i, c);
            }
        }
        out
    }

    /// Kronecker product, row-major index convention:
    /// `(i1*b.rows + i2, j1*b.cols + j2) -> a[i1,j1]*b[i2,j2]`.
    pub fn kronecker(&self, b: &GFMatrix) -> Result<GFMatrix, GfError> {
        if self.p != b.p {
            return Err(GfError::FieldMismatch);
        }
        let mut out = GFMatrix::zeros(self.p, self.rows * b.rows, self.cols * b.cols);
        for i1 in 0..self.rows {
            for (j1, c1) in self.row_nonzeros(i1) {
                for i2 in 0..b.rows {
                    for (j2, c2) in b.row_nonzeros(i2) {
                        out.set(
                            i1 * b.rows + i2,
                            j1 * b.cols + j2,
                            ((c1 as u16 * c2 as u16) % self.p as u16) as u8,
                        );
                    }
                }
            }
        }
        Ok(out)
    }

    /// New matrix from a subset of rows, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> GFMatrix {
        let mut out = GFMatrix::zeros(self.p, idx.len(), self.cols);
        for (i, &r) in idx.iter().enumerate() {
            out.copy_row_from(i, self, r);
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &GFMatrix) -> Result<GFMatrix, GfError> {
        if self.p != other.p {
            return Err(GfError::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(GfError::DimMismatch);
        }
        let mut out = GFMatrix::zeros(self.p, self.rows + other.rows, self.cols);
        for i in 0..self.rows {
            out.copy_row_from(i, self, i);
        }
        for i in 0..other.rows {
            out.copy_row_from(self.rows + i, other, i);
        }
        Ok(out)
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &GFMatrix) -> Result<GFMatrix, GfError> {
        if self.p != other.p {
            return Err(GfError::FieldMismatch);
        }
        if self.rows != other.rows {
            return Err(GfError::DimMismatch);
        }
        let mut out = GFMatrix::zeros(self.p, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for (j, c) in self.row_nonzeros(i) {
                out.set(i, j, c);
            }
            for (j, c) in other.row_nonzeros(i) {
                out.set(i, self.cols + j, c);
            }
        }
        Ok(out)
    }

    /// Reshape a 1×(r·c) or (r·c)×1 vector view: interpret row `i` of self as
    /// an r×c matrix (used to flatten/unflatten endomorphisms).
    pub fn row_as_matrix(&self, i: usize, r: usize, c: usize) -> GFMatrix {
        assert_eq!(self.cols, r * c);
        let mut out = GFMatrix::zeros(self.p, r, c);
        for (j, v) in self.row_nonzeros(i) {
            out.set(j / c, j % c, v);
        }
        out
    }

    /// Flatten to a single row, row-major.
    pub fn flatten(&self) -> GFMatrix {
        let mut out = GFMatrix::zeros(self.p, 1, self.rows * self.cols);
        for i in 0..self.rows {
            for (j, v) in self.row_nonzeros(i) {
                out.set(0, i * self.cols + j, v);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut eng = Echelon::new(self.p, self.cols, self.rows.min(self.cols));
        for i in 0..self.rows {
            eng.feed_row_of(self, i).unwrap();
        }
        eng.rank()
    }

    pub fn inverse(&self) -> Option<GFMatrix> {
        if self.rows != self.cols {
            return None;
        }
        solve(self, &GFMatrix::identity(self.p, self.rows))
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            let nz = self.row_nonzeros(i);
            if nz.len() != 1 || nz[0] != (i, 1) {
                return false;
            }
        }
        true
    }

    pub fn trace(&self) -> u8 {
        assert_eq!(self.rows, self.cols);
        let mut t = 0u16;
        for i in 0..self.rows {
            t = (t + self.get(i, i) as u16) % self.p as u16;
        }
        t as u8
    }

    /// Gather row `i` through an index table: out[j] = self[i][table[j]].
    pub fn gathered_row(&self, i: usize, table: &[u32]) -> GFMatrix {
        let mut out = GFMatrix::zeros(self.p, 1, table.len());
        // Iterate over the nonzeros of an inverse map instead when sparse;
        // dense gather is fine at the widths used here.
        for (j, &src) in table.iter().enumerate() {
            let v = self.get(i, src as usize);
            if v != 0 {
                out.set(0, j, v);
            }
        }
        out
    }

    /// Dot product of row `i` of self with row `j` of `other`.
    pub fn row_dot(&self, i: usize, other: &GFMatrix, j: usize) -> u8 {
        debug_assert_eq!(self.p, other.p);
        debug_assert_eq!(self.cols, other.cols);
        let s = self.stride();
        let t = other.stride();
        match (&self.store, &other.store) {
            (Store::B1(a), Store::B1(b)) => {
                let ar = &a[i * s..(i + 1) * s];
                let br = &b[j * t..(j + 1) * t];
                let mut acc = 0u32;
                for (x, y) in ar.iter().zip(br) {
                    acc ^= (x & y).count_ones() & 1;
                }
                (acc & 1) as u8
            }
            (Store::B2(a), Store::B2(b)) => {
                let wpr = s / 2;
                let ar = &a[i * s..(i + 1) * s];
                let br = &b[j * t..(j + 1) * t];
                let mut ones = 0u64;
                let mut twos = 0u64;
                for w in 0..wpr {
                    let (al, ah) = (ar[w], ar[wpr + w]);
                    let (bl, bh) = (br[w], br[wpr + w]);
                    let m_lo = (al & bl) | (ah & bh);
                    let m_hi = (al & bh) | (ah & bl);
                    ones += m_lo.count_ones() as u64;
                    twos += m_hi.count_ones() as u64;
                }
                ((ones + 2 * twos) % 3) as u8
            }
            (Store::By(a), Store::By(b)) => {
                let ar = &a[i * s..(i + 1) * s];
                let br = &b[j * t..(j + 1) * t];
                let mut acc = 0u32;
                for (x, y) in ar.iter().zip(br) {
                    acc += *x as u32 * *y as u32;
                }
                (acc % self.p as u32) as u8
            }
            _ => unreachable!(),
        }
    }

    /// Packed data as little-endian u64 words (B1/B2) or raw bytes (By),
    /// for the binary file format.
    pub fn raw_words(&self) -> (&'static str, Vec<u8>) {
        match &self.store {
            Store::B1(d) => ("b1", d.iter().flat_map(|w| w.to_le_bytes()).collect()),
            Store::B2(d) => ("b2", d.iter().flat_map(|w| w.to_le_bytes()).collect()),
            Store::By(d) => ("by", d.clone()),
        }
    }

    /// `self[i] -= Σ_{j<upto} coeffs[i][j] · basis[j]` for every row i,
    /// parallel over rows.  The rank-k update behind batched echelonization.
    pub(crate) fn sub_row_combinations(&mut self, coeffs: &GFMatrix, basis: &GFMatrix, upto: usize) {
        debug_assert_eq!(self.p, basis.p());
        debug_assert_eq!(self.cols, basis.cols());
        let p = self.p;
        let s = self.stride();
        let bs = basis.stride();
        let update_b1 = |i: usize, row: &mut [u64]| {
            if let Store::B1(bd) = &basis.store {
                for j in 0..upto {
                    if coeffs.get(i, j) != 0 {
                        gf2::xor_into(row, &bd[j * bs..(j + 1) * bs]);
                    }
                }
            }
        };
        let update_b2 = |i: usize, row: &mut [u64]| {
            if let Store::B2(bd) = &basis.store {
                for j in 0..upto {
                    let c = coeffs.get(i, j);
                    if c != 0 {
                        gf3::axpy(row, &bd[j * bs..(j + 1) * bs], bs / 2, p - c);
                    }
                }
            }
        };
        let update_by = |i: usize, row: &mut [u8]| {
            if let Store::By(bd) = &basis.store {
                for j in 0..upto {
                    let c = coeffs.get(i, j);
                    if c != 0 {
                        bytes::axpy(row, &bd[j * bs..(j + 1) * bs], p - c, p);
                    }
                }
            }
        };
        match &mut self.store {
            Store::B1(d) => {
                #[cfg(feature = "parallel")]
                d.par_chunks_mut(s).enumerate().for_each(|(i, row)| update_b1(i, row));
                #[cfg(not(feature = "parallel"))]
                d.chunks_mut(s).enumerate().for_each(|(i, row)| update_b1(i, row));
            }
            Store::B2(d) => {
                #[cfg(feature = "parallel")]
                d.par_chunks_mut(s).enumerate().for_each(|(i, row)| update_b2(i, row));
                #[cfg(not(feature = "parallel"))]
                d.chunks_mut(s).enumerate().for_each(|(i, row)| update_b2(i, row));
            }
            Store::By(d) => {
                #[cfg(feature = "parallel")]
                d.par_chunks_mut(s).enumerate().for_each(|(i, row)| update_by(i, row));
                #[cfg(not(feature = "parallel"))]
                d.chunks_mut(s).enumerate().for_each(|(i, row)| update_by(i, row));
            }
        }
    }
}

impl core::fmt::Debug for GFMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(f, "GFMatrix p={} {}x{}", self.p, self.rows, self.cols)?;
        if self.rows <= 16 && self.cols <= 40 {
            for i in 0..self.rows {
                for j in 0..self.cols {
                    write!(f, "{}", self.get(i, j))?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Result of full echelonization with recorded transform.
pub struct EchelonForm {
    pub rank: usize,
    /// Pivot columns, ascending.
    pub pivots: Vec<usize>,
    /// Reduced row-echelon form, same shape as the input, zero rows last.
    pub reduced: GFMatrix,
    /// Invertible square matrix with `transform · m = reduced`.
    pub transform: GFMatrix,
}

/// Reduced row echelon form with transform.  `transform` rows beyond
/// `rank` span the left kernel of `m`.
pub fn echelonize(m: &GFMatrix) -> EchelonForm {
    let p = m.p();
    let (rows, cols) = (m.rows(), m.cols());
    let cap = rows.min(cols);
    let mut eng = Echelon::new(p, cols, cap);
    let mut feeds = Vec::with_capacity(rows);
    let mut kept = Vec::new();
    for i in 0..rows {
        let fed = eng.feed_row_of(m, i).unwrap();
        if let Fed::Kept { .. } = fed {
            kept.push(i);
        }
        feeds.push(fed);
    }
    let (e, t, pivots) = eng.into_rref();
    let rank = pivots.len();

    // Order pivot rows by pivot column.
    let mut order: Vec<usize> = (0..rank).collect();
    order.sort_by_key(|&j| pivots[j]);

    let mut reduced = GFMatrix::zeros(p, rows, cols);
    let mut transform = GFMatrix::zeros(p, rows, rows);
    for (out_i, &j) in order.iter().enumerate() {
        reduced.copy_row_from(out_i, &e, j);
        for (k, c) in t.row_nonzeros(j) {
            transform.set(out_i, kept[k], c);
        }
    }
    // Dependent rows: unit at own index minus expression over kept rows.
    let mut out_i = rank;
    for (orig, fed) in feeds.iter().enumerate() {
        if let Fed::Dependent { coeffs } = fed {
            transform.set(out_i, orig, 1);
            for (k, &c) in coeffs.iter().enumerate() {
                if c != 0 {
                    let cur = transform.get(out_i, kept[k]);
                    transform.set(out_i, kept[k], (cur + p - c) % p);
                }
            }
            out_i += 1;
        }
    }
    let sorted_pivots: Vec<usize> = order.iter().map(|&j| pivots[j]).collect();
    EchelonForm {
        rank,
        pivots: sorted_pivots,
        reduced,
        transform,
    }
}

/// Basis of the right null space: rows x with `m·xᵀ = 0`.
pub fn kernel(m: &GFMatrix) -> GFMatrix {
    left_kernel(&m.transpose())
}

/// Basis of the left null space: rows x with `x·m = 0`.
pub fn left_kernel(m: &GFMatrix) -> GFMatrix {
    let ef = echelonize(m);
    let n = m.rows() - ef.rank;
    let mut out = GFMatrix::zeros(m.p(), n, m.rows());
    for i in 0..n {
        out.copy_row_from(i, &ef.transform, ef.rank + i);
    }
    out
}

/// Solve `x·a = b` (row-vector convention).  `None` when inconsistent.
pub fn solve(a: &GFMatrix, b: &GFMatrix) -> Option<GFMatrix> {
    assert_eq!(a.p(), b.p());
    assert_eq!(a.cols(), b.cols(), "solve: column mismatch");
    let mut eng = Echelon::new(a.p(), a.cols(), a.rows().min(a.cols()));
    let mut kept_orig = Vec::new();
    for i in 0..a.rows() {
        if let Fed::Kept { .. } = eng.feed_row_of(a, i).unwrap() {
            kept_orig.push(i);
        }
    }
    let mut x = GFMatrix::zeros(a.p(), b.rows(), a.rows());
    for i in 0..b.rows() {
        match eng.express_row_of(b, i) {
            Some(coeffs) => {
                for (k, &c) in coeffs.iter().enumerate() {
                    if c != 0 {
                        x.set(i, kept_orig[k], c);
                    }
                }
            }
            None => return None,
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn random_matrix(p: u8, rows: usize, cols: usize, rng: &mut SplitMix64) -> GFMatrix {
        let mut m = GFMatrix::zeros(p, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, rng.below(p as u64) as u8);
            }
        }
        m
    }

    /// Schoolbook product on unpacked entries: the independent oracle.
    fn schoolbook(a: &GFMatrix, b: &GFMatrix) -> GFMatrix {
        let p = a.p() as u32;
        let mut out = GFMatrix::zeros(a.p(), a.rows(), b.cols());
        for i in 0..a.rows() {
            for j in 0..b.cols() {
                let mut acc = 0u32;
                for k in 0..a.cols() {
                    acc += a.get(i, k) as u32 * b.get(k, j) as u32;
                }
                out.set(i, j, (acc % p) as u8);
            }
        }
        out
    }

    #[test]
    fn identity_times_m_is_m() {
        let mut rng = SplitMix64::new(1);
        for p in [2u8, 3, 5] {
            let m = random_matrix(p, 7, 11, &mut rng);
            let id = GFMatrix::identity(p, 7);
            assert_eq!(id.mat_mul(&m).unwrap(), m);
        }
    }

    #[test]
    fn two_by_two_gf2_hand_check() {
        // [[1,1],[0,1]]·[[1,0],[1,1]] = [[0,1],[1,1]] over GF(2)
        let a = GFMatrix::from_entries(2, 2, 2, &[1, 1, 0, 1]);
        let b = GFMatrix::from_entries(2, 2, 2, &[1, 0, 1, 1]);
        let want = GFMatrix::from_entries(2, 2, 2, &[0, 1, 1, 1]);
        assert_eq!(a.mat_mul(&b).unwrap(), want);
    }

    #[test]
    fn random_gf3_product_matches_schoolbook() {
        let mut rng = SplitMix64::new(2);
        let a = random_matrix(3, 100, 100, &mut rng);
        let b = random_matrix(3, 100, 100, &mut rng);
        assert_eq!(a.mat_mul(&b).unwrap(), schoolbook(&a, &b));
    }

    #[test]
    fn products_match_schoolbook_all_backends() {
        let mut rng = SplitMix64::new(3);
        for p in [2u8, 3, 5, 7] {
            let a = random_matrix(p, 33, 65, &mut rng);
            let b = random_matrix(p, 65, 40, &mut rng);
            assert_eq!(a.mat_mul(&b).unwrap(), schoolbook(&a, &b), "p={p}");
        }
    }

    #[test]
    fn dimension_mismatch_is_error() {
        let a = GFMatrix::zeros(2, 2, 3);
        let b = GFMatrix::zeros(2, 2, 3);
        assert_eq!(a.mat_mul(&b).unwrap_err(), GfError::DimMismatch);
        let c = GFMatrix::zeros(3, 3, 3);
        assert_eq!(a.mat_mul(&c).unwrap_err(), GfError::FieldMismatch);
    }

    #[test]
    fn associativity_and_distributivity_randomized() {
        let mut rng = SplitMix64::new(4);
        for p in [2u8, 3, 5] {
            for _ in 0..3 {
                let a = random_matrix(p, 20, 30, &mut rng);
                let b = random_matrix(p, 30, 25, &mut rng);
                let c = random_matrix(p, 25, 20, &mut rng);
                let ab_c = a.mat_mul(&b).unwrap().mat_mul(&c).unwrap();
                let a_bc = a.mat_mul(&b.mat_mul(&c).unwrap()).unwrap();
                assert_eq!(ab_c, a_bc);
                let d = random_matrix(p, 30, 25, &mut rng);
                let lhs = a.mat_mul(&b.add(&d).unwrap()).unwrap();
                let rhs = a.mat_mul(&b).unwrap().add(&a.mat_mul(&d).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn echelonize_zero_and_identity() {
        let z = GFMatrix::zeros(3, 4, 5);
        let ef = echelonize(&z);
        assert_eq!(ef.rank, 0);
        let id = GFMatrix::identity(2, 6);
        let ef = echelonize(&id);
        assert_eq!(ef.rank, 6);
        assert_eq!(ef.pivots, alloc::vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn rank_one_gf2() {
        let m = GFMatrix::from_entries(2, 2, 2, &[1, 1, 1, 1]);
        assert_eq!(echelonize(&m).rank, 1);
    }

    #[test]
    fn transform_times_m_is_reduced() {
        let mut rng = SplitMix64::new(5);
        for p in [2u8, 3, 5] {
            let m = random_matrix(p, 18, 12, &mut rng);
            let ef = echelonize(&m);
            assert_eq!(ef.transform.mat_mul(&m).unwrap(), ef.reduced);
            assert!(ef.transform.inverse().is_some(), "transform invertible");
            // Idempotence: echelonizing the reduced form reproduces it.
            let ef2 = echelonize(&ef.reduced);
            assert_eq!(ef2.reduced, ef.reduced);
        }
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        let id = GFMatrix::identity(3, 5);
        assert_eq!(kernel(&id).rows(), 0);
        let z = GFMatrix::zeros(3, 4, 4);
        let k = kernel(&z);
        assert_eq!(k.rows(), 4);
    }

    #[test]
    fn rank_nullity_random_gf3() {
        let mut rng = SplitMix64::new(6);
        let m = random_matrix(3, 23, 31, &mut rng);
        let k = kernel(&m);
        assert_eq!(echelonize(&m).rank + k.rows(), m.cols());
        // Every kernel row maps to zero.
        let prod = m.mat_mul(&k.transpose()).unwrap();
        assert!(prod.is_zero());
        assert_eq!(k.rank(), k.rows());
    }

    #[test]
    fn solve_row_of_a_and_inverse() {
        let mut rng = SplitMix64::new(7);
        for p in [2u8, 3, 5] {
            let a = random_matrix(p, 9, 9, &mut rng);
            let b = a.select_rows(&[3]);
            let x = solve(&a, &b).unwrap();
            assert_eq!(x.mat_mul(&a).unwrap(), b);
            if let Some(ainv) = a.inverse() {
                assert!(ainv.mat_mul(&a).unwrap().is_identity());
                assert!(a.mat_mul(&ainv).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn solve_inconsistent_is_none() {
        let a = GFMatrix::zeros(2, 3, 4);
        let mut b = GFMatrix::zeros(2, 1, 4);
        b.set(0, 2, 1);
        assert!(solve(&a, &b).is_none());
    }

    #[test]
    fn kron_mixed_product_property() {
        let mut rng = SplitMix64::new(8);
        for p in [2u8, 3] {
            let a = random_matrix(p, 4, 5, &mut rng);
            let b = random_matrix(p, 3, 2, &mut rng);
            let c = random_matrix(p, 5, 4, &mut rng);
            let d = random_matrix(p, 2, 3, &mut rng);
            // (A⊗B)(C⊗D) = AC ⊗ BD
            let lhs = a.kronecker(&b).unwrap().mat_mul(&c.kronecker(&d).unwrap()).unwrap();
            let rhs = a.mat_mul(&c).unwrap().kronecker(&b.mat_mul(&d).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn left_kernel_annihilates() {
        let mut rng = SplitMix64::new(9);
        let m = random_matrix(2, 30, 18, &mut rng);
        let lk = left_kernel(&m);
        assert!(lk.mat_mul(&m).unwrap().is_zero());
        assert_eq!(lk.rows() + echelonize(&m).rank, m.rows());
    }
}
