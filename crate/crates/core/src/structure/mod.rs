//! Gluings, complete intersections, free semigroups and named families.

mod families;
mod free;
mod gluing;

pub use families::{
    binomial_depth_audit, binomial_predicted_factorization, binomial_semigroup, family_sym1,
    family_sym2, BinomialDepthAudit, BinomialMember, FamilyMember,
};
pub use free::{free_arrangements, is_free_arrangement, SmoothSequence};
pub use gluing::{
    gluing_decompositions, is_complete_intersection, representable, verify_gluing, GluingSplit,
    GluingTree,
};
