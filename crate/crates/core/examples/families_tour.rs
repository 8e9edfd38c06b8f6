//! One value from each family, all exact.

use qaskey::families::{
    cqu_r, hahn, krawtchouk, qracah, qracah_at_top, racah, ultraspherical_r, HahnParams, KrawtchoukParams,
    QRacahParams, RacahParams,
};
use qaskey::{rat, QParams};

fn main() -> qaskey::Result<()> {
    let qp = QParams::new(rat(1, 2), rat(2, 3))?;
    let r2 = cqu_r(2, &qp)?;
    println!("continuous q-ultraspherical R_2 in z: {}", r2.as_poly());
    println!("  at z = 7/5: {}", r2.eval_at(&rat(7, 5))?);
    println!("ultraspherical R_3^(1/2)(1/3) = {}", ultraspherical_r(3, &rat(1, 2), &rat(1, 3))?);

    let kp = KrawtchoukParams::new(rat(1, 3), 5)?;
    println!("Krawtchouk K_2(3; 1/3, 5) = {}", krawtchouk(2, 3, &kp)?);
    let hp = HahnParams::new(rat(1, 2), rat(3, 2), 4)?;
    println!("Hahn Q_2(1; 1/2, 3/2, 4) = {}", hahn(2, 1, &hp)?);
    let rp = RacahParams::finite(rat(1, 2), rat(1, 3), 4, rat(11, 2));
    println!("Racah R_2(lambda(3)) = {}", racah(2, 3, &rp)?);

    let qrp = QRacahParams::new(rat(1, 3), rat(1, 2), 3, rat(-4, 1), rat(1, 4))?;
    println!("q-Racah R_2 at x = N: {} (closed form {})", qracah(2, 3, &qrp)?, qracah_at_top(2, &qrp)?);
    Ok(())
}
