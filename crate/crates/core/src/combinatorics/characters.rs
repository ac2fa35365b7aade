//! Irreducible characters of the symmetric group by the Murnaghan–Nakayama
//! rule, computed on beta-sets: removing a border strip of length `k` is
//! moving one bead `b -> b - k` onto an empty position, with sign given by
//! the parity of the beads jumped over.

use std::cell::RefCell;
use std::collections::HashMap;

use super::partition::{partitions_of, Partition};
use crate::error::AlgebraError;

thread_local! {
    static MEMO: RefCell<HashMap<(Partition, Partition), i64>> = RefCell::new(HashMap::new());
}

/// `chi_nu(mu)`: the character of `R_nu` on the class of cycle type `mu`.
pub fn mn_character(nu: &Partition, mu: &Partition) -> Result<i64, AlgebraError> {
    if nu.size() != mu.size() {
        return Err(AlgebraError::SizeMismatch(nu.to_string(), mu.to_string()));
    }
    Ok(character(nu, mu))
}

fn character(nu: &Partition, mu: &Partition) -> i64 {
    let Some(&k) = mu.parts().first() else {
        return 1;
    };
    let key = (nu.clone(), mu.clone());
    if let Some(v) = MEMO.with(|m| m.borrow().get(&key).copied()) {
        return v;
    }
    let rest = mu.tail();
    let value = strip_removals(nu, k)
        .into_iter()
        .map(|(sign, smaller)| sign * character(&smaller, &rest))
        .sum();
    MEMO.with(|m| m.borrow_mut().insert(key, value));
    value
}

/// Every way to remove a border strip of length `k` from `nu`, as
/// `(sign, remaining partition)` with `sign = (-1)^{height}`.
pub fn strip_removals(nu: &Partition, k: usize) -> Vec<(i64, Partition)> {
    let len = nu.len();
    let beta: Vec<usize> = nu
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&c| target < c && c < b).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts = nb
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (len - 1 - j))
            .collect();
        out.push((sign, Partition::from_unsorted(parts)));
    }
    out
}

/// Character table of `S_n`: rows indexed by `nu`, columns by `mu`, both in
/// [`partitions_of`] order.
pub fn character_table(n: usize) -> (Vec<Partition>, Vec<Vec<i64>>) {
    let parts = partitions_of(n);
    let table = parts
        .iter()
        .map(|nu| parts.iter().map(|mu| character(nu, mu)).collect())
        .collect();
    (parts, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rat;
    use num_bigint::BigInt;
    use num_traits::{One, Zero};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trivial_and_identity_class() {
        for n in 1..=8 {
            for mu in partitions_of(n) {
                assert_eq!(mn_character(&Partition::row(n), &mu).unwrap(), 1);
            }
            for nu in partitions_of(n) {
                let d: i64 = nu.dim().try_into().unwrap();
                assert_eq!(mn_character(&nu, &Partition::column(n)).unwrap(), d);
            }
        }
    }

    #[test]
    fn sign_representation() {
        assert_eq!(mn_character(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        // sign character is (-1)^{n - l(mu)}
        for mu in partitions_of(6) {
            let expect = if (6 - mu.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(mn_character(&Partition::column(6), &mu).unwrap(), expect);
        }
    }

    #[test]
    fn size_mismatch() {
        assert!(matches!(
            mn_character(&p(&[2]), &p(&[1])),
            Err(AlgebraError::SizeMismatch(..))
        ));
    }

    #[test]
    fn s4_table() {
        // rows (4),(3,1),(2,2),(2,1,1),(1^4); columns in the same order
        let (_, t) = character_table(4);
        assert_eq!(
            t,
            vec![
                vec![1, 1, 1, 1, 1],
                vec![-1, 0, -1, 1, 3],
                vec![0, -1, 2, 0, 2],
                vec![1, 0, -1, -1, 3],
                vec![-1, 1, 1, -1, 1],
            ]
        );
    }

    #[test]
    fn row_orthogonality() {
        for n in 0..=8 {
            let (parts, t) = character_table(n);
            let z: Vec<Rat> = parts
                .iter()
                .map(|m| Rat::from_integer(BigInt::from(m.z())))
                .collect();
            for i in 0..parts.len() {
                for j in 0..parts.len() {
                    let s: Rat = (0..parts.len())
                        .map(|k| Rat::from_integer((t[i][k] * t[j][k]).into()) / &z[k])
                        .sum();
                    let expect = if i == j { Rat::one() } else { Rat::zero() };
                    assert_eq!(s, expect, "n={n} {} {}", parts[i], parts[j]);
                }
            }
        }
    }
}
