//! Instance generators and brute-force enumerators that supply ground truth
//! for the equivalence checks.

mod compare;
mod enumerate;
mod instances;

pub use compare::{compare_distlaws, compare_monad_forms, compare_morphisms, compare_poset_laws, Comparison};
pub use enumerate::{
    enumerate_2cells, enumerate_algebra_op_tables, enumerate_alpha_candidates,
    enumerate_distlaw_candidates, enumerate_endofunctors, enumerate_families, enumerate_functors,
    enumerate_monads, enumerate_monads_extensive, enumerate_monads_monoidal, Limits,
    CAP_ENV_VAR, DEFAULT_MAX_CANDIDATES,
};
pub use instances::{
    chain_category, closure_monad, closure_operators, cyclic_table, monoid_category,
    monoid_tables, parallel_pair, poset_category, posets, Poset,
};
