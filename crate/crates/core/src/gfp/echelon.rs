//! Streaming echelonization with recorded transform.
//!
//! Rows are fed one at a time or in batches; independent rows are kept
//! (normalized, leading entry 1) and dependent rows are returned expressed
//! over the kept originals.  The transform matrix `t` maintains
//! `e = t · kept`, so expressions never refer to internal echelon rows.
//! This is the streamed path used for spanning-set bases whose full matrix
//! would not fit in memory: only the rank many rows are ever held.

use alloc::vec;
use alloc::vec::Vec;

use super::{GFMatrix, GfError};

/// Outcome of feeding one row.
#[derive(Clone, Debug)]
pub enum Fed {
    /// The row was independent and became kept original number `index`.
    Kept { index: usize },
    /// The row is a linear combination of the kept originals with these
    /// coefficients (length = number kept at the time of feeding).
    Dependent { coeffs: Vec<u8> },
}

#[derive(Clone)]
pub struct Echelon {
    p: u8,
    width: usize,
    cap: usize,
    /// Echelon rows, leading entry 1, zero at all earlier pivots.
    e: GFMatrix,
    /// Pivot column of each echelon row, in discovery order.
    pivots: Vec<usize>,
    /// Expression of echelon rows over kept originals (rank × cap).
    t: GFMatrix,
    /// Values of echelon rows at the pivot columns (rank × cap);
    /// row j is zero in slots < j and 1 in slot j.
    narrow: GFMatrix,
    scratch: GFMatrix,
    scratch_t: GFMatrix,
    budget: Option<u64>,
}

impl Echelon {
    pub fn new(p: u8, width: usize, cap: usize) -> Self {
        Echelon {
            p,
            width,
            cap,
            e: GFMatrix::zeros(p, 0, width),
            pivots: Vec::new(),
            t: GFMatrix::zeros(p, 0, cap.max(1)),
            narrow: GFMatrix::zeros(p, 0, cap.max(1)),
            scratch: GFMatrix::zeros(p, 1, width),
            scratch_t: GFMatrix::zeros(p, 1, cap.max(1)),
            budget: None,
        }
    }

    pub fn with_budget(p: u8, width: usize, cap: usize, budget_bytes: u64) -> Self {
        let mut s = Self::new(p, width, cap);
        s.budget = Some(budget_bytes);
        s
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// Current storage footprint in bytes (echelon + bookkeeping).
    pub fn bytes_used(&self) -> u64 {
        let per_row = (self.e.stride() * 8 + self.t.stride() * 8 + self.narrow.stride() * 8) as u64;
        self.rank() as u64 * per_row
    }

    fn load_scratch(&mut self, m: &GFMatrix, i: usize) {
        debug_assert_eq!(m.cols(), self.width);
        debug_assert_eq!(m.p(), self.p);
        self.scratch.scale_row(0, 0);
        self.scratch.axpy_row_from(0, m, i, 1);
    }

    /// Reduce the scratch row against the echelon, returning the
    /// coefficients over echelon slots `from..rank`.
    fn reduce_scratch(&mut self, from: usize) -> Vec<u8> {
        let r = self.rank();
        let mut cs = vec![0u8; r - from];
        for j in from..r {
            let c = self.scratch.get(0, self.pivots[j]);
            if c != 0 {
                cs[j - from] = c;
                self.scratch.axpy_row_from(0, &self.e, j, self.p - c);
            }
        }
        cs
    }

    /// Expression over kept originals from coefficients over echelon slots.
    fn expand_over_kept(&mut self, cs: &[u8], from: usize) -> Vec<u8> {
        self.scratch_t.scale_row(0, 0);
        for (k, &c) in cs.iter().enumerate() {
            if c != 0 {
                self.scratch_t.axpy_row_from(0, &self.t, from + k, c);
            }
        }
        (0..self.rank()).map(|k| self.scratch_t.get(0, k)).collect()
    }

    fn append_scratch(&mut self, cs_full: &[u8]) -> Result<usize, GfError> {
        let rank = self.rank();
        if rank >= self.cap {
            return Err(GfError::RankCapExceeded);
        }
        if let Some(budget) = self.budget {
            if self.bytes_used() > budget {
                return Err(GfError::MemoryBudget { needed: self.bytes_used(), budget });
            }
        }
        let lead = self.scratch.leading_in_row(0).expect("nonzero row");
        let v = self.scratch.get(0, lead);
        let s = super::scalar::inv_mod(v, self.p);
        self.scratch.scale_row(0, s);

        // Transform row: s·unit(new kept) − s·(cs over kept).
        self.scratch_t.scale_row(0, 0);
        for (j, &c) in cs_full.iter().enumerate() {
            if c != 0 {
                self.scratch_t.axpy_row_from(0, &self.t, j, c);
            }
        }
        self.scratch_t.scale_row(0, ((self.p - 1) as u16 * s as u16 % self.p as u16) as u8);
        self.scratch_t.set(0, rank, s);

        self.e.push_zero_row();
        self.e.copy_row_from(rank, &self.scratch, 0);
        self.t.push_zero_row();
        self.t.copy_row_from(rank, &self.scratch_t, 0);

        // Narrow bookkeeping: new row is a unit in its own slot; older rows
        // may be nonzero at the new pivot column.
        self.narrow.push_zero_row();
        self.narrow.set(rank, rank, 1);
        for j in 0..rank {
            let c = self.e.get(j, lead);
            if c != 0 {
                self.narrow.set(j, rank, c);
            }
        }
        self.pivots.push(lead);
        Ok(rank)
    }

    /// Feed row `i` of `m`.
    pub fn feed_row_of(&mut self, m: &GFMatrix, i: usize) -> Result<Fed, GfError> {
        self.load_scratch(m, i);
        let cs = self.reduce_scratch(0);
        if self.scratch.row_is_zero(0) {
            let coeffs = self.expand_over_kept(&cs, 0);
            Ok(Fed::Dependent { coeffs })
        } else {
            let index = self.append_scratch(&cs)?;
            Ok(Fed::Kept { index })
        }
    }

    /// Express row `i` of `m` over the kept originals without ever keeping
    /// it; `None` if it is independent of them.
    pub fn express_row_of(&mut self, m: &GFMatrix, i: usize) -> Option<Vec<u8>> {
        self.load_scratch(m, i);
        let cs = self.reduce_scratch(0);
        if self.scratch.row_is_zero(0) {
            Some(self.expand_over_kept(&cs, 0))
        } else {
            None
        }
    }

    /// Feed all rows of `batch` (consumed as workspace).  Equivalent to
    /// feeding each row in order, but reduces against the pre-existing
    /// echelon via a narrow coefficient solve followed by one combined wide
    /// update, which is the fast path for large widths.
    pub fn feed_batch(&mut self, batch: &mut GFMatrix) -> Result<Vec<Fed>, GfError> {
        let b = batch.rows();
        let r0 = self.rank();
        let mut coeff = GFMatrix::zeros(self.p, b, self.cap.max(1));
        if r0 > 0 {
            // Narrow gather of the batch at the pivot columns.
            let mut n = GFMatrix::zeros(self.p, b, self.cap.max(1));
            for i in 0..b {
                for j in 0..r0 {
                    n.set(i, j, batch.get(i, self.pivots[j]));
                }
            }
            // Forward solve against the narrow echelon view.
            for j in 0..r0 {
                for i in 0..b {
                    let c = n.get(i, j);
                    if c != 0 {
                        coeff.set(i, j, c);
                        n.axpy_row_from(i, &self.narrow, j, self.p - c);
                    }
                }
            }
            // One wide update: batch_i -= Σ_j coeff[i][j] · e_j.
            batch.sub_row_combinations(&coeff, &self.e, r0);
        }
        let mut out = Vec::with_capacity(b);
        for i in 0..b {
            // Residual reduction against rows appended during this batch.
            self.load_scratch(batch, i);
            let cs2 = self.reduce_scratch(r0);
            let mut cs_full: Vec<u8> = (0..r0).map(|j| coeff.get(i, j)).collect();
            cs_full.extend_from_slice(&cs2);
            if self.scratch.row_is_zero(0) {
                let coeffs = self.expand_over_kept(&cs_full, 0);
                out.push(Fed::Dependent { coeffs });
            } else {
                let index = self.append_scratch(&cs_full)?;
                out.push(Fed::Kept { index });
            }
        }
        Ok(out)
    }

    /// Expression over kept originals of a row KNOWN to lie in the span,
    /// given only its values at the pivot columns (in slot order).  The
    /// caller is responsible for the spanning guarantee; nothing here can
    /// detect a residual outside the pivot columns.
    pub fn express_from_pivot_values(&mut self, vals: &[u8]) -> Vec<u8> {
        let r = self.rank();
        debug_assert_eq!(vals.len(), r);
        let p = self.p;
        let mut cur: Vec<u8> = vals.to_vec();
        let mut cs = vec![0u8; r];
        for j in 0..r {
            let c = cur[j];
            if c != 0 {
                cs[j] = c;
                // cur -= c * narrow_j on the remaining slots
                for k in j + 1..r {
                    let nv = self.narrow.get(j, k);
                    if nv != 0 {
                        let sub = (c as u16 * nv as u16 % p as u16) as u8;
                        cur[k] = ((cur[k] + p - sub) % p) as u8;
                    }
                }
            }
        }
        self.expand_over_kept(&cs, 0)
    }

    /// Finish: back-eliminate to reduced echelon form.  Returns
    /// `(rref_rows, transform_over_kept, pivot_columns)`, rows still in
    /// discovery order.
    pub fn into_rref(mut self) -> (GFMatrix, GFMatrix, Vec<usize>) {
        let r = self.rank();
        for i in 0..r {
            for k in i + 1..r {
                let c = self.e.get(i, self.pivots[k]);
                if c != 0 {
                    self.e.axpy_row(i, k, self.p - c);
                    self.t.axpy_row(i, k, self.p - c);
                }
            }
        }
        (self.e, self.t, self.pivots)
    }

    /// The kept echelon rows (not reduced), in discovery order.
    pub fn echelon_rows(&self) -> &GFMatrix {
        &self.e
    }

    /// Expression of echelon rows over kept originals.
    pub fn transform_rows(&self) -> &GFMatrix {
        &self.t
    }
}
