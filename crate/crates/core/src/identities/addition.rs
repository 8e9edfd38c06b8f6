//! Addition and product formulas: the q-side expansion in Askey-Wilson
//! kernels, and the classical ultraspherical and Legendre formulas at
//! Pythagorean points.

use crate::error::{Error, Result};
use crate::families::{
    askey_wilson_r, cqu_at, jacobi_p_poly, legendre_poly, ultraspherical_poly, ultraspherical_r,
    AWParams, JacobiParams,
};
use crate::laurent::{qpoch_laurent_pair, LaurentPoly};
use crate::params::QParams;
use crate::rat::Rat;
use crate::series::{pochhammer, qpochhammer, qpochhammer_many};

use super::theorem::CquTable;
use super::{Checker, Pythagorean};

/// Scalar coefficient of the `k`-th term, without the `u, v` factors:
/// `(-1)^k q^{k(k+1)/2} (q^{-n}, a², q^n a⁴; q)_k / ((q, ±q^{1/2}a², -a²; q)_k (q^{k-1}a⁴; q)_k)`.
/// The last factor is `(q^{-1}a⁴; q)_{2k} / (q^{-1}a⁴; q)_k` cancelled.
pub fn rv_coefficient(qp: &QParams, n: usize, k: usize) -> Rat {
    let q = qp.q();
    let a2 = qp.a().pow(2);
    let a4 = a2.pow(2);
    let sign = if k.is_multiple_of(2) { Rat::one() } else { Rat::from_int(-1) };
    let qh = qp.qhalf();
    sign * q.pow((k * (k + 1) / 2) as i64)
        * qpochhammer_many(&[q.pow(-(n as i64)), a2.clone(), q.pow(n as i64) * &a4], &q, k)
        / (qpochhammer_many(&[q.clone(), &qh * &a2, -(&qh * &a2), -a2], &q, k)
            * qpochhammer(&(q.pow(k as i64 - 1) * a4), &q, k))
}

/// `(AC; q)_k (AD; q)_k R_k[z; A, B, C, D]` with `A = auv`, `B = a/(uv)`,
/// `C = au/v`, `D = av/u`, expanded so that no `(a²u²; q)_i` or
/// `(a²v²; q)_i` denominator appears. Stays finite when `a²u²` or `a²v²`
/// is a power of `q^{-1}`.
pub fn cleared_kernel(qp: &QParams, k: usize, u: &Rat, v: &Rat) -> LaurentPoly {
    let q = qp.q();
    let a = qp.a();
    let a2 = a.pow(2);
    let au2 = &a2 * u * u;
    let av2 = &a2 * v * v;
    let big_a = &a * u * v;
    let mut acc = LaurentPoly::zero();
    for i in 0..=k {
        let qi = q.pow(i as i64);
        let scalar = qpochhammer_many(&[q.pow(-(k as i64)), q.pow(k as i64 - 1) * a2.pow(2)], &q, i)
            * &qi
            / qpochhammer_many(&[q.clone(), a2.clone()], &q, i)
            * qpochhammer(&(&au2 * &qi), &q, k - i)
            * qpochhammer(&(&av2 * &qi), &q, k - i);
        if scalar.is_zero() {
            continue;
        }
        acc = &acc + &qpoch_laurent_pair(&big_a, &q, i).as_poly().scale(&scalar);
    }
    acc
}

/// The q-addition formula as a Laurent identity in `z` at fixed `u, v`.
pub fn q_addition(ck: &mut Checker, table: &mut CquTable, n: usize, u: &Rat, v: &Rat) -> Result<()> {
    if u.is_zero() || v.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let qp = table.qparams().clone();
    let q = qp.q();
    let a = qp.a();
    let lhs = table.get(0, n)?.as_poly().clone();
    let mut rhs = LaurentPoly::zero();
    for k in 0..=n {
        let shifted = qp.shifted(k);
        let scalar = rv_coefficient(&qp, n, k)
            * (u * v).pow(-(k as i64))
            * cqu_at(n - k, &shifted, u)?
            * cqu_at(n - k, &shifted, v)?;
        let kernel = cleared_kernel(&qp, k, u, v);
        // where the Askey-Wilson kernel itself is defined, compare with it
        let (ac, ad) = (&a * &a * u * u, &a * &a * v * v);
        let clear = qpochhammer(&ac, &q, k) * qpochhammer(&ad, &q, k);
        if !clear.is_zero() {
            if let Ok(awp) = AWParams::new(&a * u * v, &a / (u * v), &a * u / v, &a * v / u, q.clone()) {
                let direct = askey_wilson_r(k, &awp)?.as_poly().scale(&clear);
                ck.eq_poly(format!("kernel k = {k}"), &kernel, &direct);
            }
        }
        rhs = &rhs + &kernel.scale(&scalar);
    }
    ck.eq_poly(format!("n = {n}"), &lhs, &rhs);
    Ok(())
}

/// `C(n,k) (α+k)/(α+k/2) (n+2α+1)_k (2α+1)_k / (2^{2k} (α+1)_k²)`; the
/// ratio `(α+k)/(α+k/2)` is 1 at `k = 0`.
pub fn gegenbauer_addition_coefficient(alpha: &Rat, n: usize, k: usize) -> Rat {
    let fact = |j: usize| pochhammer(&Rat::one(), j);
    let binom = fact(n) / (fact(k) * fact(n - k));
    let kk = Rat::from_int(k as i64);
    let ratio = if k == 0 { Rat::one() } else { (alpha + &kk) / (alpha + &kk / 2) };
    let a2 = alpha * Rat::from_int(2) + 1;
    binom * ratio * pochhammer(&(&a2 + Rat::from_int(n as i64)), k) * pochhammer(&a2, k)
        / (Rat::from_int(4).pow(k as i64) * pochhammer(&(alpha + 1), k).pow(2))
}

fn linear(c0: Rat, c1: Rat) -> LaurentPoly {
    LaurentPoly::from_terms([(0, c0), (1, c1)])
}

fn check_alpha(alpha: &Rat) -> Result<()> {
    if *alpha <= Rat::new(-1, 2) {
        return Err(Error::InvalidParams(format!("needs α > -1/2 (got {alpha})")));
    }
    Ok(())
}

/// Gegenbauer addition formula in `t`, its rewritten form in `z`, and a
/// scalar instance at `t = tp.cos`.
pub fn classical_addition(
    ck: &mut Checker,
    alpha: &Rat,
    n: usize,
    xp: &Pythagorean,
    yp: &Pythagorean,
    tp: &Pythagorean,
) -> Result<()> {
    check_alpha(alpha)?;
    let (x, rx, y, ry) = (&xp.cos, &xp.sin, &yp.cos, &yp.sin);
    let rr = rx * ry;
    let half = Rat::new(1, 2);
    let lhs_t = ultraspherical_poly(n, alpha)?.compose(&linear(x * y, rr.clone()))?;
    let lhs_z = ultraspherical_poly(n, alpha)?;
    let inner_z = linear(-(x * y) / &rr, rr.recip());
    let mut rhs_t = LaurentPoly::zero();
    let mut rhs_z = LaurentPoly::zero();
    let mut rhs_scalar = Rat::zero();
    for k in 0..=n {
        let ak = alpha + Rat::from_int(k as i64);
        let c = gegenbauer_addition_coefficient(alpha, n, k)
            * rr.pow(k as i64)
            * ultraspherical_r(n - k, &ak, x)?
            * ultraspherical_r(n - k, &ak, y)?;
        let kernel = ultraspherical_poly(k, &(alpha - &half))?;
        rhs_t = &rhs_t + &kernel.scale(&c);
        rhs_z = &rhs_z + &kernel.compose(&inner_z)?.scale(&c);
        rhs_scalar += &c * ultraspherical_r(k, &(alpha - &half), &tp.cos)?;
    }
    ck.eq_poly("addition formula in t", &lhs_t, &rhs_t);
    ck.eq_poly("rewritten form in z", &lhs_z, &rhs_z);
    let lhs_scalar = ultraspherical_r(n, alpha, &(x * y + &rr * &tp.cos))?;
    ck.eq_rat(format!("at t = {}", tp.cos), &lhs_scalar, &rhs_scalar);
    Ok(())
}

/// Chebyshev polynomials `T_0..=T_n` in the variable `c`.
pub fn chebyshev_t(n: usize) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::one(), LaurentPoly::var()];
    let two_c = LaurentPoly::monomial(Rat::from_int(2), 1);
    while out.len() <= n {
        let k = out.len();
        let next = &(&two_c * &out[k - 1]) - &out[k - 2];
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

/// Legendre addition formula as a polynomial in `cos φ`, and at `cos φ = cp.cos`.
pub fn legendre_addition(
    ck: &mut Checker,
    n: usize,
    xp: &Pythagorean,
    yp: &Pythagorean,
    cp: &Pythagorean,
) -> Result<()> {
    let (x, rx, y, ry) = (&xp.cos, &xp.sin, &yp.cos, &yp.sin);
    let lhs = legendre_poly(n).compose(&linear(x * y, rx * ry))?;
    let cheb = chebyshev_t(n);
    let fact = |j: usize| pochhammer(&Rat::one(), j);
    let mut rhs = LaurentPoly::constant(legendre_poly(n).eval_at(x)? * legendre_poly(n).eval_at(y)?);
    for k in 1..=n {
        let jp = JacobiParams::new(Rat::from_int(k as i64), Rat::from_int(k as i64))?;
        let p = jacobi_p_poly(n - k, &jp);
        let c = Rat::from_int(2) * fact(n - k) * fact(n + k)
            / (Rat::from_int(4).pow(k as i64) * fact(n).pow(2))
            * (rx * ry).pow(k as i64)
            * p.eval_at(x)?
            * p.eval_at(y)?;
        rhs = &rhs + &cheb[k].scale(&c);
    }
    ck.eq_poly("expansion in cos φ", &lhs, &rhs);
    ck.eq_rat(format!("at cos φ = {}", cp.cos), &lhs.eval_at(&cp.cos)?, &rhs.eval_at(&cp.cos)?);
    Ok(())
}

/// Normalized moment `∫ t^i (1-t²)^{α-1/2} dt / ∫ (1-t²)^{α-1/2} dt`.
pub fn moment(alpha: &Rat, i: usize) -> Rat {
    if i % 2 == 1 {
        return Rat::zero();
    }
    (1..=i / 2).fold(Rat::one(), |mu, k| {
        mu * Rat::from_int(2 * k as i64 - 1) / (alpha * Rat::from_int(2) + Rat::from_int(2 * k as i64))
    })
}

/// `∫_0^π cos^i φ dφ / π = C(i, i/2) / 2^i` for even `i`.
pub fn cosine_moment(i: usize) -> Rat {
    if i % 2 == 1 {
        return Rat::zero();
    }
    let fact = |j: usize| pochhammer(&Rat::one(), j);
    fact(i) / (fact(i / 2).pow(2) * Rat::from_int(2).pow(i as i64))
}

fn apply_functional(p: &LaurentPoly, mu: impl Fn(usize) -> Rat) -> Rat {
    p.terms().map(|(e, c)| c * mu(e as usize)).sum()
}

/// Product formula through the moment functional; for `α = 0` also the
/// Legendre form with the cosine moments.
pub fn product_formula(
    ck: &mut Checker,
    alpha: &Rat,
    n: usize,
    xp: &Pythagorean,
    yp: &Pythagorean,
) -> Result<()> {
    check_alpha(alpha)?;
    let (x, rx, y, ry) = (&xp.cos, &xp.sin, &yp.cos, &yp.sin);
    let inner = linear(x * y, rx * ry);
    let p = ultraspherical_poly(n, alpha)?.compose(&inner)?;
    let product = ultraspherical_r(n, alpha, x)? * ultraspherical_r(n, alpha, y)?;
    ck.eq_rat("ultraspherical", &apply_functional(&p, |i| moment(alpha, i)), &product);
    if alpha.is_zero() {
        let p = legendre_poly(n).compose(&inner)?;
        ck.eq_rat("legendre", &apply_functional(&p, cosine_moment), &product);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::run_check;
    use crate::rat::rat;

    fn triples() -> Vec<Pythagorean> {
        Pythagorean::standard()
    }

    #[test]
    fn q_addition_small() {
        let qp = QParams::new(rat(1, 2), rat(2, 3)).unwrap();
        let mut table = CquTable::new(&qp);
        for (u, v) in [(rat(2, 1), rat(3, 2)), (rat(2, 1), rat(3, 1))] {
            for n in 0..=3 {
                let r = run_check("a", Default::default(), None, |ck| q_addition(ck, &mut table, n, &u, &v));
                assert!(r.passed(), "{u} {v} {n}: {r:?}");
            }
        }
    }

    #[test]
    fn classical_examples() {
        let t = triples();
        let r = run_check("l", Default::default(), None, |ck| legendre_addition(ck, 2, &t[0], &t[1], &t[2]));
        assert!(r.passed(), "{r:?}");
        for alpha in [rat(0, 1), rat(1, 2), rat(1, 1)] {
            let r = run_check("c", Default::default(), None, |ck| {
                classical_addition(ck, &alpha, 4, &t[0], &t[1], &t[2])
            });
            assert!(r.passed(), "{alpha}: {r:?}");
            let r = run_check("p", Default::default(), None, |ck| product_formula(ck, &alpha, 5, &t[0], &t[1]));
            assert!(r.passed(), "{alpha}: {r:?}");
        }
    }

    #[test]
    fn moments() {
        assert_eq!(moment(&Rat::zero(), 2), rat(1, 2));
        assert_eq!(cosine_moment(4), rat(3, 8));
        for i in 0..10 {
            assert_eq!(moment(&Rat::zero(), i), cosine_moment(i));
        }
        assert_eq!(chebyshev_t(3)[3], LaurentPoly::from_terms([(3, rat(4, 1)), (1, rat(-3, 1))]));
    }
}
