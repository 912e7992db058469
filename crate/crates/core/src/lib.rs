pub mod arith;
pub mod poly;
pub mod curve;
pub mod group;
pub mod invariants;
pub mod ledger;
pub mod report;
