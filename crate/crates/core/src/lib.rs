pub mod classify;
pub mod error;
pub mod expansion;
pub mod hive;
pub mod partition;
pub mod skew;
pub mod sweep;
pub mod tableau;
pub mod witness;

pub use error::{Error, Result};
pub use expansion::{Expansion, Method};
pub use hive::{Hive, HiveBoundary, ScanOrder};
pub use partition::{Partition, SegmentSeq, ShapeClass};
pub use skew::SkewShape;
