//! Partition combinatorics, ordinary characters of S_n, p-blocks via
//! p-cores, and the principal-block central idempotent mod p.

mod blocks;
mod characters;
mod partition;

pub use blocks::{count_principal_simples, principal_block_idempotent, BlockData, BlockError};
pub use characters::{centralizer_order, class_size, factorial_big, CharTable};
pub use partition::{p_core, partitions, remove_rim_hooks_literal, Partition};

use crate::symgrp::Perm;

/// Cycle type of a permutation as a partition.
pub fn cycle_type_partition(p: &Perm) -> Partition {
    Partition::new(p.cycle_type().iter().map(|&x| x as u8).collect())
}
