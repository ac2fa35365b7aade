//! Partitions and symmetric-group representation data.

mod characters;
mod partition;

pub use characters::{character_table, mn_character, strip_removals};
pub use partition::{partitions_of, partitions_up_to, Cell, HookContent, Partition};

pub(crate) use partition::factorial;

use num_bigint::BigInt;

use crate::ring::Rat;

/// `sum_{mu |- n} chi_nu(mu) / z_mu`, evaluated term by term.
pub fn class_average(nu: &Partition) -> Rat {
    partitions_of(nu.size())
        .iter()
        .map(|mu| {
            let chi = mn_character(nu, mu).expect("same size");
            Rat::new(chi.into(), BigInt::from(mu.z()))
        })
        .sum()
}

/// `z_mu` as a rational.
pub fn z_rat(mu: &Partition) -> Rat {
    Rat::from_integer(BigInt::from(mu.z()))
}
