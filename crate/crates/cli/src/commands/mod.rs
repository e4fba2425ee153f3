pub mod demo;
pub mod optimize;
pub mod propagate;
pub mod verify;
