//! JSON formats, the fixture corpus, DOT export and the claim suite behind
//! the `twistlab` command.

pub mod corpus;
pub mod dot;
pub mod io;
pub mod suite;
