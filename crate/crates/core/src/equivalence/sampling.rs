//! Seeded random test data: integer matrices and polynomial matrices.

use rand::Rng;

use crate::exactmath::{Assignment, MPoly, Matrix, Monomial, PolyMatrix, QMatrix, Rat};

/// Range of the integer entries of random maps.
pub const ENTRY_RANGE: std::ops::RangeInclusive<i64> = -3..=3;

/// An `rows × cols` matrix with integer entries in `[-3, 3]`.
pub fn random_map<G: Rng>(rng: &mut G, rows: usize, cols: usize) -> QMatrix {
    QMatrix::from_fn(rows, cols, |_, _| {
        Rat::from_int(rng.random_range(ENTRY_RANGE))
    })
}

/// A random polynomial of total degree at most `max_degree` in `nvars`
/// variables with integer coefficients in `[-3, 3]`.
pub fn random_poly<G: Rng>(rng: &mut G, nvars: usize, max_degree: u32) -> MPoly {
    let mut terms = Vec::new();
    let mut exps = vec![0u32; nvars];
    loop {
        if exps.iter().sum::<u32>() <= max_degree {
            let c = rng.random_range(ENTRY_RANGE);
            if c != 0 {
                terms.push((Monomial::new(exps.clone()), Rat::from_int(c)));
            }
        }
        let Some(k) = (0..nvars).find(|&k| exps[k] < max_degree) else {
            break;
        };
        exps[k] += 1;
        for e in &mut exps[..k] {
            *e = 0;
        }
    }
    MPoly::from_terms(nvars, terms)
}

pub fn random_poly_matrix<G: Rng>(
    rng: &mut G,
    rows: usize,
    cols: usize,
    nvars: usize,
    max_degree: u32,
) -> PolyMatrix {
    Matrix::from_fn(rows, cols, |_, _| random_poly(rng, nvars, max_degree))
}

/// Integer values in `[-3, 3]` for the variables `T1, ..., T_nvars`.
pub fn random_assignment<G: Rng>(rng: &mut G, nvars: usize) -> Assignment {
    (0..nvars)
        .map(|i| (i, Rat::from_int(rng.random_range(ENTRY_RANGE))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_data_is_reproducible_and_bounded() {
        let mut a = ChaCha8Rng::seed_from_u64(42);
        let mut b = ChaCha8Rng::seed_from_u64(42);
        assert_eq!(random_map(&mut a, 3, 2), random_map(&mut b, 3, 2));
        for _ in 0..20 {
            let p = random_poly(&mut a, 2, 2);
            assert!(p.total_degree().unwrap_or(0) <= 2);
            assert!(p.nvars() <= 2);
        }
        let m = random_poly_matrix(&mut a, 2, 2, 2, 2);
        assert_eq!((m.rows(), m.cols()), (2, 2));
        assert_eq!(random_assignment(&mut a, 2).len(), 2);
    }
}
