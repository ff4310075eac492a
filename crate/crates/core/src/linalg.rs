//! Exact fraction-free row echelon forms over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Row echelon form with distinct pivots, grown one row at a time.
///
/// Rows are primitive integer vectors with a positive pivot entry.
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    width: usize,
    /// Sorted by pivot column.
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl Echelon {
    pub(crate) fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    pub(crate) fn rows(&self) -> impl Iterator<Item = &[BigInt]> + '_ {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    /// Reduce `row` and keep it if independent. Returns whether the rank grew.
    pub(crate) fn insert(&mut self, mut row: Vec<BigInt>) -> bool {
        debug_assert_eq!(row.len(), self.width);
        for (p, pivot_row) in &self.rows {
            if row[*p].is_zero() {
                continue;
            }
            let a = &pivot_row[*p];
            let c = row[*p].clone();
            let g = a.gcd(&c);
            let (fa, fc) = (a / &g, &c / &g);
            for (x, y) in row.iter_mut().zip(pivot_row) {
                *x = &*x * &fa - y * &fc;
            }
            make_primitive(&mut row);
        }
        let Some(pivot) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if row[pivot].is_negative() {
            row.iter_mut().for_each(|x| *x = -&*x);
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, row));
        true
    }

    /// Reduced row echelon form with unit pivots.
    pub(crate) fn reduced(&self) -> Vec<(usize, Vec<BigRational>)> {
        let mut rows: Vec<(usize, Vec<BigInt>)> = self.rows.clone();
        for k in (0..rows.len()).rev() {
            let (p, pivot_row) = rows[k].clone();
            for (_, row) in rows.iter_mut().take(k) {
                if row[p].is_zero() {
                    continue;
                }
                let a = &pivot_row[p];
                let c = row[p].clone();
                let g = a.gcd(&c);
                let (fa, fc) = (a / &g, &c / &g);
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x * &fa - y * &fc;
                }
                make_primitive(row);
            }
        }
        rows.into_iter()
            .map(|(p, row)| {
                let lead = row[p].clone();
                let r = row
                    .into_iter()
                    .map(|x| BigRational::new(x, lead.clone()))
                    .collect();
                (p, r)
            })
            .collect()
    }
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        row.iter_mut().for_each(|x| *x = &*x / &g);
    }
}

/// Scale a rational vector to a primitive integer vector.
pub(crate) fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    make_primitive(&mut out);
    out
}
