pub mod analysis;
pub mod cli;
pub mod graph;
pub mod ideal;
pub mod io;
pub mod oracle;
pub mod verify;
