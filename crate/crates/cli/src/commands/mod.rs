pub mod bench;
pub mod cheb;
pub mod seq;
pub mod surd;
pub mod verify;
