//! Terminating hypergeometric sums in exact arithmetic, checked against the
//! Chu-Vandermonde evaluations.

use qaskey::series::{pochhammer, qpochhammer, terminating_hyper, Base, HyperSeriesSpec};
use qaskey::{rat, Rat};

fn main() -> qaskey::Result<()> {
    let (b, c) = (rat(2, 3), rat(7, 4));
    for n in 0..=5 {
        let spec = HyperSeriesSpec::new(vec![Rat::from_int(-n), b.clone()], vec![c.clone()], Rat::one(), Base::Unit, n as usize)?;
        let sum = terminating_hyper(&spec)?;
        let closed = pochhammer(&(&c - &b), n as usize) / pochhammer(&c, n as usize);
        println!("2F1(-{n}, {b}; {c}; 1) = {sum}  (closed form {closed})");
    }

    let q = rat(1, 3);
    for n in 0..=4usize {
        let spec = HyperSeriesSpec::new(vec![q.pow(-(n as i64)), b.clone()], vec![c.clone()], q.clone(), Base::Q(q.clone()), n)?;
        let sum = terminating_hyper(&spec)?;
        let closed = qpochhammer(&(&c / &b), &q, n) / qpochhammer(&c, &q, n) * b.pow(n as i64);
        println!("2phi1(q^-{n}, {b}; {c}; q, q) = {sum}  (closed form {closed})");
    }
    Ok(())
}
