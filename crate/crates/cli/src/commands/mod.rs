pub mod absorbers;
pub mod checks;
pub mod experiments;
