//! Symmetric groups over ℚ: partitions, permutations, characters, Specht
//! modules and isotypic multiplicities.

mod characters;
mod partition;
mod perm;
mod rep;
mod specht;
mod tableaux;

pub use characters::{character_table, conjugacy_classes, mn_character, CharVector};
pub use partition::Partition;
pub use perm::{next_permutation, Perm};
pub use rep::{multiplicities, regular_representation, SymRep};
pub use specht::specht_representation;
pub use tableaux::{hook_dimension, semistandard_tableaux, ssyt_count, standard_tableaux, Tableau};
