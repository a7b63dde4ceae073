pub mod algebras;
pub mod hopf;
pub mod ncalg;
pub mod par;
pub mod qcalc;
pub mod reps;
pub mod scalars;
pub mod twists;
