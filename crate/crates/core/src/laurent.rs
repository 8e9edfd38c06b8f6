//! Sparse Laurent polynomials in one variable over [`Rat`].
//!
//! Ordinary polynomials (in `x` or `t`) are represented by the same type with
//! nonnegative exponents only.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rat::Rat;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    pub fn monomial(c: Rat, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// The variable itself.
    pub fn var() -> Self {
        LaurentPoly::monomial(Rat::one(), 1)
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, Rat)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            p.add_term(e, &c);
        }
        p
    }

    /// Ordinary polynomial from coefficients, lowest degree first.
    pub fn from_coeffs(coeffs: &[Rat]) -> Self {
        LaurentPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, c.clone())),
        )
    }

    fn add_term(&mut self, exp: i64, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        self.terms.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    /// Highest exponent with nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent with nonzero coefficient.
    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.terms
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// `Σ c_k z0^k`; fails for `z0 = 0`.
    pub fn eval_at(&self, z0: &Rat) -> Result<Rat> {
        if z0.is_zero() {
            if self.low_degree().is_none_or(|e| e >= 0) {
                return Ok(self.coeff(0));
            }
            return Err(Error::ZeroArgument);
        }
        Ok(self.terms.iter().map(|(e, c)| c * z0.pow(*e)).sum())
    }

    /// Floating-point evaluation.
    pub fn eval_f64(&self, z0: f64) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| c.to_f64() * z0.powi(*e as i32))
            .sum()
    }

    /// `p(z) ↦ p(1/z)`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-*e, c.clone())).collect(),
        }
    }

    /// `p(z) ↦ p(-z)`.
    pub fn negate_variable(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, if e % 2 == 0 { c.clone() } else { -c }))
                .collect(),
        }
    }

    /// `p(z) ↦ p(c z)`.
    pub fn scale_variable(&self, c: &Rat) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, v * c.pow(*e)))
                .collect(),
        }
    }

    /// Composition `p(inner)` for an ordinary polynomial `p` (Horner).
    pub fn compose(&self, inner: &LaurentPoly) -> Result<Self> {
        let Some(top) = self.degree() else {
            return Ok(LaurentPoly::zero());
        };
        if self.low_degree().is_some_and(|e| e < 0) {
            return Err(Error::InvalidParams(
                "composition needs an ordinary polynomial".into(),
            ));
        }
        let mut acc = LaurentPoly::zero();
        for e in (0..=top).rev() {
            acc = &(&acc * inner) + &LaurentPoly::constant(self.coeff(e));
        }
        Ok(acc)
    }

    /// Coefficients `[c_0, ..., c_deg]` of an ordinary polynomial.
    pub fn to_coeffs(&self) -> Vec<Rat> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d.max(0)).map(|e| self.coeff(e)).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| self.terms.get(&-e).is_some_and(|d| d == c))
    }

    /// Renders with the given variable name, exponents descending.
    pub fn render(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if i == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push(' ');
                out.push_str(sign);
                out.push(' ');
            }
            match *e {
                0 => out.push_str(&mag.to_string()),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&mag.to_string());
                        out.push(' ');
                    }
                    out.push_str(var);
                    if *e != 1 {
                        out.push('^');
                        out.push_str(&e.to_string());
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("z"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl<'a> Add<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl<'a> Sub<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&Rat::from_int(-1))
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// A Laurent polynomial invariant under `z ↦ 1/z`; equivalently an ordinary
/// polynomial in `x = (z + 1/z)/2`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SymmetricLaurent(LaurentPoly);

impl SymmetricLaurent {
    /// Checks the symmetry invariant.
    pub fn new(p: LaurentPoly) -> Result<Self> {
        for (e, c) in p.terms() {
            if p.coeff(-e) != *c {
                return Err(Error::NotSymmetric(e));
            }
        }
        Ok(SymmetricLaurent(p))
    }

    pub fn one() -> Self {
        SymmetricLaurent(LaurentPoly::one())
    }

    pub fn zero() -> Self {
        SymmetricLaurent(LaurentPoly::zero())
    }

    pub fn constant(c: Rat) -> Self {
        SymmetricLaurent(LaurentPoly::constant(c))
    }

    /// `x = (z + 1/z)/2`.
    pub fn x() -> Self {
        let half = Rat::new(1, 2);
        SymmetricLaurent(LaurentPoly::from_terms([(1, half.clone()), (-1, half)]))
    }

    pub fn as_poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.0
    }

    pub fn degree(&self) -> Option<i64> {
        self.0.degree()
    }

    pub fn eval_at(&self, z0: &Rat) -> Result<Rat> {
        self.0.eval_at(z0)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        SymmetricLaurent(self.0.scale(c))
    }

    /// Value at `z = e^{iθ}`, i.e. `c_0 + 2 Σ_{k>0} c_k cos(kθ)`, from the
    /// exact coefficients.
    pub fn eval_cos(&self, theta: f64) -> f64 {
        self.0
            .terms()
            .filter(|(e, _)| *e >= 0)
            .map(|(e, c)| {
                let w = if e == 0 { 1.0 } else { 2.0 };
                w * c.to_f64() * (e as f64 * theta).cos()
            })
            .sum()
    }

    /// Coefficients in `x`, lowest first (inverse of [`x_embed`]).
    pub fn to_x_coeffs(&self) -> Vec<Rat> {
        let Some(deg) = self.0.degree() else {
            return Vec::new();
        };
        let mut rest = self.0.clone();
        let mut coeffs = vec![Rat::zero(); deg as usize + 1];
        for d in (0..=deg).rev() {
            let c = rest.coeff(d);
            if c.is_zero() {
                continue;
            }
            // x^d contributes 2^{-d} z^d
            let cx = &c * Rat::from_int(2).pow(d);
            let sub = x_embed_monomial(d as u32).scale(&cx);
            rest = &rest - &sub;
            coeffs[d as usize] = cx;
        }
        coeffs
    }
}

fn x_embed_monomial(d: u32) -> LaurentPoly {
    SymmetricLaurent::x().0.pow(d)
}

impl fmt::Display for SymmetricLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for SymmetricLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymmetricLaurent({})", self.0)
    }
}

impl<'a> Add<&'a SymmetricLaurent> for &SymmetricLaurent {
    type Output = SymmetricLaurent;
    fn add(self, rhs: &'a SymmetricLaurent) -> SymmetricLaurent {
        SymmetricLaurent(&self.0 + &rhs.0)
    }
}

impl<'a> Sub<&'a SymmetricLaurent> for &SymmetricLaurent {
    type Output = SymmetricLaurent;
    fn sub(self, rhs: &'a SymmetricLaurent) -> SymmetricLaurent {
        SymmetricLaurent(&self.0 - &rhs.0)
    }
}

impl<'a> Mul<&'a SymmetricLaurent> for &SymmetricLaurent {
    type Output = SymmetricLaurent;
    fn mul(self, rhs: &'a SymmetricLaurent) -> SymmetricLaurent {
        SymmetricLaurent(&self.0 * &rhs.0)
    }
}

impl AsRef<LaurentPoly> for SymmetricLaurent {
    fn as_ref(&self) -> &LaurentPoly {
        &self.0
    }
}

/// `Σ coeffs[k] · ((z + 1/z)/2)^k`.
pub fn x_embed(coeffs: &[Rat]) -> SymmetricLaurent {
    let x = SymmetricLaurent::x().0;
    let mut acc = LaurentPoly::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * &x) + &LaurentPoly::constant(c.clone());
    }
    SymmetricLaurent(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// factors in `z`
    Up,
    /// factors in `1/z`
    Down,
}

impl Direction {
    fn exponent(self) -> i64 {
        match self {
            Direction::Up => 1,
            Direction::Down => -1,
        }
    }
}

/// `∏_{j<k} (1 - qbase^j · a · z^{±1})`.
pub fn qpoch_laurent(a: &Rat, direction: Direction, qbase: &Rat, k: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    let mut coef = a.clone();
    for _ in 0..k {
        let factor = LaurentPoly::from_terms([(0, Rat::one()), (direction.exponent(), -&coef)]);
        acc = &acc * &factor;
        coef = &coef * qbase;
    }
    acc
}

/// `(a z, a/z; qbase)_k`, always symmetric.
pub fn qpoch_laurent_pair(a: &Rat, qbase: &Rat, k: usize) -> SymmetricLaurent {
    let mut acc = LaurentPoly::one();
    let mut coef = a.clone();
    for _ in 0..k {
        // (1 - c z)(1 - c/z) = 1 + c^2 - c z - c/z
        let factor = LaurentPoly::from_terms([
            (0, Rat::one() + &coef * &coef),
            (1, -&coef),
            (-1, -&coef),
        ]);
        acc = &acc * &factor;
        coef = &coef * qbase;
    }
    SymmetricLaurent(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use crate::series::qpochhammer;

    fn zpz() -> LaurentPoly {
        LaurentPoly::from_terms([(1, Rat::one()), (-1, Rat::one())])
    }

    #[test]
    fn ring_examples() {
        let sq = &zpz() * &zpz();
        assert_eq!(
            sq,
            LaurentPoly::from_terms([(2, Rat::one()), (0, Rat::from_int(2)), (-2, Rat::one())])
        );
        let p = LaurentPoly::from_terms([(3, rat(2, 5)), (-2, rat(-1, 7))]);
        assert_eq!(&p * &LaurentPoly::one(), p);
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).len(), 0);
    }

    #[test]
    fn eval_examples() {
        let half = SymmetricLaurent::x();
        assert_eq!(half.eval_at(&Rat::from_int(2)).unwrap(), rat(5, 4));
        assert_eq!(LaurentPoly::one().eval_at(&rat(-3, 7)).unwrap(), Rat::one());
        assert_eq!(
            LaurentPoly::monomial(Rat::one(), 3).eval_at(&rat(1, 2)).unwrap(),
            rat(1, 8)
        );
        assert_eq!(
            LaurentPoly::monomial(Rat::one(), -1).eval_at(&Rat::zero()),
            Err(Error::ZeroArgument)
        );
    }

    #[test]
    fn invert_examples() {
        let p = LaurentPoly::from_terms([(2, Rat::one()), (-1, Rat::from_int(3))]);
        assert_eq!(
            p.invert_variable(),
            LaurentPoly::from_terms([(-2, Rat::one()), (1, Rat::from_int(3))])
        );
        let s = &zpz() * &zpz();
        assert_eq!(s.invert_variable(), s);
        let c = LaurentPoly::constant(rat(4, 9));
        assert_eq!(c.invert_variable(), c);
    }

    #[test]
    fn x_embed_examples() {
        assert_eq!(
            x_embed(&[Rat::zero(), Rat::one()]).into_poly(),
            LaurentPoly::from_terms([(1, rat(1, 2)), (-1, rat(1, 2))])
        );
        assert_eq!(x_embed(&[Rat::one()]).into_poly(), LaurentPoly::one());
        // (x^2 - 1) by hand: (z^2 + 2 + z^-2)/4 - 1
        assert_eq!(
            x_embed(&[Rat::from_int(-1), Rat::zero(), Rat::one()]).into_poly(),
            LaurentPoly::from_terms([(2, rat(1, 4)), (0, rat(-1, 2)), (-2, rat(1, 4))])
        );
    }

    #[test]
    fn x_coeffs_roundtrip() {
        let c = vec![rat(1, 3), rat(-2, 5), Rat::zero(), rat(7, 2)];
        assert_eq!(x_embed(&c).to_x_coeffs(), c);
    }

    #[test]
    fn qpoch_laurent_examples() {
        let a = rat(2, 3);
        let q = rat(1, 5);
        assert_eq!(qpoch_laurent(&a, Direction::Up, &q, 0), LaurentPoly::one());
        assert_eq!(
            qpoch_laurent(&a, Direction::Up, &q, 1),
            LaurentPoly::from_terms([(0, Rat::one()), (1, -a.clone())])
        );
        let prod = &qpoch_laurent(&a, Direction::Up, &q, 2) * &qpoch_laurent(&a, Direction::Down, &q, 2);
        assert!(prod.eval_at(&a).unwrap().is_zero());
        assert_eq!(prod, qpoch_laurent_pair(&a, &q, 2).into_poly());
        let z0 = rat(-5, 4);
        assert_eq!(
            qpoch_laurent(&a, Direction::Up, &q, 3).eval_at(&z0).unwrap(),
            qpochhammer(&(&a * &z0), &q, 3)
        );
    }

    #[test]
    fn symmetric_constructor_rejects() {
        let p = LaurentPoly::from_terms([(1, Rat::one()), (-1, Rat::from_int(2))]);
        assert!(matches!(SymmetricLaurent::new(p), Err(Error::NotSymmetric(_))));
        assert!(SymmetricLaurent::new(&zpz() * &zpz()).is_ok());
    }

    #[test]
    fn rendering() {
        let p = LaurentPoly::from_terms([(2, rat(1, 4)), (0, rat(-1, 2)), (-2, rat(1, 4))]);
        assert_eq!(p.to_string(), "1/4 z^2 - 1/2 + 1/4 z^-2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(
            LaurentPoly::from_terms([(1, Rat::from_int(-1))]).render("x"),
            "-x"
        );
    }

    #[test]
    fn compose_linear() {
        // (x^2)(1 + 2t) = 1 + 4t + 4t^2
        let p = LaurentPoly::monomial(Rat::one(), 2);
        let inner = LaurentPoly::from_coeffs(&[Rat::one(), Rat::from_int(2)]);
        assert_eq!(
            p.compose(&inner).unwrap().to_coeffs(),
            vec![Rat::one(), Rat::from_int(4), Rat::from_int(4)]
        );
    }

    #[test]
    fn eval_on_unit_circle() {
        let p = x_embed(&[rat(1, 3), Rat::zero(), rat(-5, 2)]);
        let theta: f64 = 0.7;
        let x = theta.cos();
        assert!((p.eval_cos(theta) - (1.0 / 3.0 - 2.5 * x * x)).abs() < 1e-14);
    }
}
