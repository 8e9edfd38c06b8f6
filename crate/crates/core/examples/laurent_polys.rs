//! Sparse Laurent polynomials and the symmetric subring in `x = (z + 1/z)/2`.

use qaskey::{rat, x_embed, LaurentPoly, SymmetricLaurent};

fn main() -> qaskey::Result<()> {
    let p = LaurentPoly::from_terms([(-2, rat(1, 2)), (0, rat(-3, 1)), (3, rat(5, 7))]);
    let r = LaurentPoly::from_terms([(1, rat(1, 1)), (-1, rat(2, 1))]);
    println!("p     = {p}");
    println!("r     = {r}");
    println!("p * r = {}", &p * &r);
    println!("p(2/3) = {}", p.eval_at(&rat(2, 3))?);

    // 1 - 2x^2 embedded in z is -(z^2 + z^-2)/2
    let s = x_embed(&[rat(1, 1), rat(0, 1), rat(-2, 1)]);
    println!("x-embedding of 1 - 2x^2: {}", s.as_poly());
    println!("back in x: {:?}", s.to_x_coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    let squared = &s * &s;
    println!("its square has degree {:?}", squared.degree());
    println!("x itself: {}", SymmetricLaurent::x().as_poly());
    Ok(())
}
