//! Linearization coefficients of products, all nonnegative.

use qaskey::identities::linearization::{gegenbauer_coefficient, legendre_coefficient, rogers_coefficient};
use qaskey::{rat, QParams};

fn main() {
    let qp = QParams::new(rat(1, 2), rat(2, 3)).unwrap();
    let (l, m) = (3, 2);
    for j in 0..=m {
        println!(
            "j = {j}: q {}   Gegenbauer(1/2) {}   Legendre {}",
            rogers_coefficient(&qp, l, m, j),
            gegenbauer_coefficient(&rat(1, 2), l, m, j),
            legendre_coefficient(l, m, j)
        );
    }
}
