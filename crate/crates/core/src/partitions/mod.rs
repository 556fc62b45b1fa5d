//! Partitions, multipartitions, their statistics and orders.

mod multipartition;
mod order;
mod partition;

pub use multipartition::{multi, multi_comp_le, multi_partial_le, MultiPartition};
pub use order::{enumerate_multipartitions, enumerate_multipartitions_in, total_order_cmp, TotalOrder};
pub use partition::{dominance_le, part, Composition, Partition};
