//! `eval` and `table`.

use std::io::Write;

use clap::Args;

use crate::families::{
    askey_wilson_at, askey_wilson_r, cqu_r, cqu_r_alt, dual_hahn, hahn, hahn_weight, jacobi_poly, jacobi_r,
    krawtchouk, krawtchouk_norm, krawtchouk_weight, qracah, qracah_at_top, qracah_norms, qracah_weight, racah,
    racah_norms, racah_weight, ultraspherical_poly, ultraspherical_r, wilson_dual_phi, AWParams, FamilyId,
    HahnParams, JacobiParams, KrawtchoukParams, QRacahParams, RacahParams, WilsonParams,
};
use crate::laurent::SymmetricLaurent;
use crate::params::QParams;
use crate::rat::Rat;

use super::ConfigError;

#[derive(Clone, Debug, Default, Args)]
pub struct FamilyArgs {
    /// Family identifier, e.g. `cqu`, `q-racah`, `ultraspherical`.
    #[arg(long)]
    pub family: String,
    /// Degree.
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    /// `t,s` with `t = q^(1/4)`, `s = β^(1/2)`.
    #[arg(long)]
    pub qparams: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<String>,
    #[arg(long)]
    pub p: Option<String>,
    /// Base of a q-family given directly (q-racah, askey-wilson).
    #[arg(long)]
    pub q: Option<String>,
    /// Lattice size.
    #[arg(long = "N")]
    pub big_n: Option<usize>,
    /// Askey-Wilson or Wilson parameters `a,b,c,d`.
    #[arg(long, allow_hyphen_values = true)]
    pub abcd: Option<String>,
    /// Point `x` for polynomials in `x`.
    #[arg(long, allow_hyphen_values = true)]
    pub at: Option<String>,
    /// Point `z` for Laurent polynomials in `z`.
    #[arg(long = "at-z", allow_hyphen_values = true)]
    pub at_z: Option<String>,
    /// Lattice index, or `N` for the top of the lattice.
    #[arg(long)]
    pub x: Option<String>,
    /// Second index of the Wilson duality form.
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// First index (default 0).
    #[arg(long)]
    pub from: Option<usize>,
    /// Last index (default `N` for weights and norms, `n` for values).
    #[arg(long)]
    pub to: Option<usize>,
}

fn need<'a>(v: &'a Option<String>, name: &str, family: &str) -> Result<&'a str, ConfigError> {
    v.as_deref().ok_or_else(|| ConfigError(format!("{family} needs --{name}")))
}

fn rat_arg(v: &Option<String>, name: &str, family: &str) -> Result<Rat, ConfigError> {
    let s = need(v, name, family)?;
    s.parse().map_err(|e| ConfigError(format!("--{name}: {e}")))
}

fn big_n(a: &FamilyArgs) -> Result<usize, ConfigError> {
    a.big_n.ok_or_else(|| ConfigError(format!("{} needs --N", a.family)))
}

fn four(a: &FamilyArgs) -> Result<[Rat; 4], ConfigError> {
    let s = need(&a.abcd, "abcd", &a.family)?;
    let parts: Vec<Rat> = s
        .split(',')
        .map(|p| p.parse::<Rat>())
        .collect::<Result<_, _>>()
        .map_err(|e| ConfigError(format!("--abcd: {e}")))?;
    parts
        .try_into()
        .map_err(|_| ConfigError("--abcd needs four comma-separated rationals".into()))
}

/// `--x`, where `N` stands for the top index.
fn lattice_x(a: &FamilyArgs, top: usize) -> Result<usize, ConfigError> {
    match need(&a.x, "x", &a.family)? {
        "N" => Ok(top),
        s => s.parse().map_err(|_| ConfigError(format!("--x: expected a natural number or N, got {s:?}"))),
    }
}

fn horner(coeffs: &[Rat], x: &Rat) -> Rat {
    coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
}

fn family_id(name: &str) -> Result<FamilyId, ConfigError> {
    name.parse::<FamilyId>().map_err(ConfigError::from)
}

fn qracah_params(a: &FamilyArgs) -> Result<QRacahParams, ConfigError> {
    let f = &a.family;
    Ok(QRacahParams::new(
        rat_arg(&a.alpha, "alpha", f)?,
        rat_arg(&a.beta, "beta", f)?,
        big_n(a)?,
        rat_arg(&a.delta, "delta", f)?,
        rat_arg(&a.q, "q", f)?,
    )?)
}

fn racah_params(a: &FamilyArgs) -> Result<RacahParams, ConfigError> {
    let f = &a.family;
    Ok(RacahParams::finite(
        rat_arg(&a.alpha, "alpha", f)?,
        rat_arg(&a.beta, "beta", f)?,
        big_n(a)?,
        rat_arg(&a.delta, "delta", f)?,
    ))
}

fn hahn_params(a: &FamilyArgs) -> Result<HahnParams, ConfigError> {
    let f = &a.family;
    Ok(HahnParams::new(rat_arg(&a.alpha, "alpha", f)?, rat_arg(&a.beta, "beta", f)?, big_n(a)?)?)
}

fn krawtchouk_params(a: &FamilyArgs) -> Result<KrawtchoukParams, ConfigError> {
    Ok(KrawtchoukParams::new(rat_arg(&a.p, "p", &a.family)?, big_n(a)?)?)
}

/// An evaluated family member: a number, or a polynomial when no point was given.
enum Evaluated {
    Number(Rat),
    Poly(String),
}

fn symmetric_at(p: SymmetricLaurent, a: &FamilyArgs) -> Result<Evaluated, ConfigError> {
    if let Some(z) = &a.at_z {
        let z: Rat = z.parse().map_err(|e| ConfigError(format!("--at-z: {e}")))?;
        return Ok(Evaluated::Number(p.eval_at(&z)?));
    }
    if let Some(x) = &a.at {
        let x: Rat = x.parse().map_err(|e| ConfigError(format!("--at: {e}")))?;
        return Ok(Evaluated::Number(horner(&p.to_x_coeffs(), &x)));
    }
    Ok(Evaluated::Poly(p.to_string()))
}

fn evaluate(a: &FamilyArgs, n: usize) -> Result<Evaluated, ConfigError> {
    let f = a.family.as_str();
    let id = family_id(f)?;
    let num = |r: crate::error::Result<Rat>| -> Result<Evaluated, ConfigError> { Ok(Evaluated::Number(r?)) };
    match id {
        FamilyId::Jacobi => {
            let jp = JacobiParams::new(rat_arg(&a.alpha, "alpha", f)?, rat_arg(&a.beta, "beta", f)?)?;
            match &a.at {
                Some(_) => num(jacobi_r(n, &jp, &rat_arg(&a.at, "at", f)?)),
                None => Ok(Evaluated::Poly(jacobi_poly(n, &jp).render("x"))),
            }
        }
        FamilyId::Ultraspherical => {
            let alpha = rat_arg(&a.alpha, "alpha", f)?;
            JacobiParams::ultraspherical(alpha.clone())?;
            match &a.at {
                Some(_) => num(ultraspherical_r(n, &alpha, &rat_arg(&a.at, "at", f)?)),
                None => Ok(Evaluated::Poly(ultraspherical_poly(n, &alpha)?.render("x"))),
            }
        }
        FamilyId::Krawtchouk => {
            let kp = krawtchouk_params(a)?;
            num(krawtchouk(n, lattice_x(a, kp.n_max)?, &kp))
        }
        FamilyId::Hahn | FamilyId::DualHahn => {
            let hp = hahn_params(a)?;
            let x = lattice_x(a, hp.n_max)?;
            num(if id == FamilyId::Hahn { hahn(n, x, &hp) } else { dual_hahn(n, x, &hp) })
        }
        FamilyId::Racah => {
            let rp = racah_params(a)?;
            num(racah(n, lattice_x(a, big_n(a)?)?, &rp))
        }
        FamilyId::WilsonDual => {
            let [pa, pb, pc, pd] = four(a)?;
            let m = a.m.ok_or_else(|| ConfigError("wilson-dual needs --m".into()))?;
            num(wilson_dual_phi(n, m, &WilsonParams::new(pa, pb, pc, pd)))
        }
        FamilyId::AskeyWilson => {
            let [pa, pb, pc, pd] = four(a)?;
            let awp = AWParams::new(pa, pb, pc, pd, rat_arg(&a.q, "q", f)?)?;
            match &a.at_z {
                Some(_) => num(askey_wilson_at(n, &awp, &rat_arg(&a.at_z, "at-z", f)?)),
                None => symmetric_at(askey_wilson_r(n, &awp)?, a),
            }
        }
        FamilyId::Cqu | FamilyId::CquAlt => {
            let qp: QParams = need(&a.qparams, "qparams", f)?.parse()?;
            let p = if id == FamilyId::Cqu { cqu_r(n, &qp)? } else { cqu_r_alt(n, &qp)? };
            symmetric_at(p, a)
        }
        FamilyId::QRacah => {
            let qrp = qracah_params(a)?;
            num(qracah(n, lattice_x(a, qrp.n_max)?, &qrp))
        }
    }
}

pub fn cmd_eval(a: &FamilyArgs, out: &mut dyn Write) -> Result<(), ConfigError> {
    match evaluate(a, a.n)? {
        Evaluated::Number(v) => {
            writeln!(out, "{v}")?;
            writeln!(out, "{}", v.to_f64())?;
        }
        Evaluated::Poly(p) => writeln!(out, "{p}")?,
    }
    if a.family == "q-racah" && a.x.as_deref() == Some("N") {
        let top = qracah_at_top(a.n, &qracah_params(a)?)?;
        writeln!(out, "closed form at x = N: {top}")?;
    }
    Ok(())
}

pub fn cmd_table(a: &TableArgs, out: &mut dyn Write) -> Result<(), ConfigError> {
    let fa = &a.family;
    let name = fa.family.as_str();
    type Row = Box<dyn Fn(usize) -> crate::error::Result<Rat>>;
    let (default_to, row): (usize, Row) = if let Some(base) = name.strip_suffix("-weights") {
        match base {
            "krawtchouk" => {
                let kp = krawtchouk_params(fa)?;
                (kp.n_max, Box::new(move |x| krawtchouk_weight(x, &kp)))
            }
            "hahn" => {
                let hp = hahn_params(fa)?;
                (hp.n_max, Box::new(move |x| hahn_weight(x, &hp)))
            }
            "racah" => {
                let rp = racah_params(fa)?;
                (big_n(fa)?, Box::new(move |x| racah_weight(x, &rp)))
            }
            "q-racah" => {
                let qrp = qracah_params(fa)?;
                (qrp.n_max, Box::new(move |x| qracah_weight(x, &qrp)))
            }
            _ => return Err(ConfigError(format!("no weights for family {base:?}"))),
        }
    } else if let Some(base) = name.strip_suffix("-norms") {
        match base {
            "krawtchouk" => {
                let kp = krawtchouk_params(fa)?;
                (kp.n_max, Box::new(move |n| krawtchouk_norm(n, &kp)))
            }
            "racah" => {
                let rp = racah_params(fa)?;
                (big_n(fa)?, Box::new(move |n| Ok(racah_norms(n, &rp)?.hn())))
            }
            "q-racah" => {
                let qrp = qracah_params(fa)?;
                (qrp.n_max, Box::new(move |n| Ok(qracah_norms(n, &qrp)?.hn())))
            }
            _ => return Err(ConfigError(format!("no norms for family {base:?}"))),
        }
    } else {
        family_id(name)?;
        // values over the degree, at the point given by the other flags
        let probe = fa.clone();
        if let Evaluated::Poly(_) = evaluate(&probe, 0)? {
            return Err(ConfigError("value tables need a point (--at, --at-z or --x)".into()));
        }
        (
            fa.n,
            Box::new(move |n| match evaluate(&probe, n) {
                Ok(Evaluated::Number(v)) => Ok(v),
                Ok(Evaluated::Poly(_)) => unreachable!("point checked above"),
                Err(ConfigError(msg)) => Err(crate::error::Error::InvalidParams(msg)),
            }),
        )
    };
    let from = a.from.unwrap_or(0);
    let to = a.to.unwrap_or(default_to);
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| ConfigError(e.to_string());
    w.write_record(["index", "exact", "float"]).map_err(csv_err)?;
    for i in from..=to {
        let v = row(i)?;
        w.write_record([i.to_string(), v.to_string(), v.to_f64().to_string()]).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| ConfigError(e.to_string()))?;
    out.write_all(&bytes)?;
    Ok(())
}
