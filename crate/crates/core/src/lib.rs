pub mod limits;
pub mod model;
pub mod observables;
pub mod oracle;
pub mod phase_shifts;
pub mod report;
pub mod special_fn;
