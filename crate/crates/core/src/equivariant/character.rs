use num_bigint::BigInt;
use rayon::prelude::*;

use super::{ClassFunctionTable, PermGroup};
use crate::klz::enumerate_index_tuples;
use crate::matroid::{ElementSet, FlatLattice, WhitneyCounter};
use crate::{Error, Result};

/// For each group element, the flats it fixes; fails if some element moves a
/// flat to a non-flat.
fn fixed_flats(lat: &FlatLattice, group: &PermGroup) -> Result<Vec<Vec<bool>>> {
    let n = group.degree();
    if ElementSet::full(n)? != lat.ground() {
        return Err(Error::InvalidPermutation(format!(
            "group acts on {n} points but the ground set is {:?}",
            lat.ground()
        )));
    }
    group
        .elements()
        .par_iter()
        .map(|g| {
            lat.flats()
                .iter()
                .map(|&flat| {
                    let image = flat.permuted(g);
                    if lat.id_of(image).is_none() {
                        return Err(Error::NotFlatPreserving(format!(
                            "{g:?} sends the flat {flat:?} to {image:?}"
                        )));
                    }
                    Ok(image == flat)
                })
                .collect()
        })
        .collect()
}

/// Permutation character of the multichains with corank profile `[i_r, ..., i_1]`:
/// the value at `g` is the number of such chains fixed by `g`.
pub fn equivariant_whitney_character(
    lat: &FlatLattice,
    group: &PermGroup,
    profile: &[i64],
) -> Result<ClassFunctionTable> {
    let fixed = fixed_flats(lat, group)?;
    let values = fixed
        .into_par_iter()
        .map(|mask| WhitneyCounter::restricted(lat, mask).count(profile))
        .collect();
    Ok(ClassFunctionTable { values })
}

/// Virtual character of the `i`-th Kazhdan-Lusztig coefficient, as the signed sum
/// of Whitney permutation characters over the index tuples.
pub fn equivariant_c_character(lat: &FlatLattice, group: &PermGroup, i: i64) -> Result<ClassFunctionTable> {
    if i < 0 {
        return Err(Error::NegativeIndex(i));
    }
    let fixed = fixed_flats(lat, group)?;
    if i == 0 {
        return Ok(ClassFunctionTable {
            values: vec![BigInt::from(1); group.order()],
        });
    }
    let tuples = enumerate_index_tuples(i as usize, lat.rk());
    let values = fixed
        .into_par_iter()
        .map(|mask| {
            let mut counter = WhitneyCounter::restricted(lat, mask);
            tuples
                .iter()
                .map(|t| counter.count(&t.profile()) * t.sign())
                .sum()
        })
        .collect();
    Ok(ClassFunctionTable { values })
}
