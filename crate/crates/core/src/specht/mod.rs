//! Symmetric group machinery: partitions, standard tableaux, Specht modules
//! in Young's seminormal form, characters, and Witt indices over `Q`.

mod characters;
mod partition;
mod rep;
mod witt;

pub use characters::{
    alt_square_contains_sign, character, class_representative, class_size, inner_product, sign_of_type,
    square_type, sym_square_contains_sign,
};
pub use partition::{partitions, standard_tableaux, Partition, Tableau};
pub use rep::{adjacent_factors, specht_reps, SpechtRep, SPECHT_BOUND};
pub use witt::{diagonalize, hilbert_symbol, is_hyperbolic, sign_twisted_form, witt_index};
