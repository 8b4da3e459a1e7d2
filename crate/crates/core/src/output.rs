//! CSV emission in positional decimal notation with 12 significant digits.

use std::io::{BufRead, Write};

use crate::dispersion::{ModeStatus, SweepRow};
use crate::error::{Error, Result};

pub const SIGNIFICANT_DIGITS: usize = 12;

pub const SWEEP_HEADER: &str =
    "omega_norm,k_parallel,kappa,zeta1_over_lambda,Lz_over_lambda,frac_dielectric,frac_nimm,status";

/// Format `x` with 12 significant digits without an exponent.
pub fn format_number(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return format!("{:.*}", SIGNIFICANT_DIGITS - 1, 0.0);
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exponent) = sci.split_once('e').expect("scientific format");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let point = exponent + 1;
    let body = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), digits)
    } else if point as usize >= digits.len() {
        format!("{}{}", digits, "0".repeat(point as usize - digits.len()))
    } else {
        let (int, frac) = digits.split_at(point as usize);
        format!("{int}.{frac}")
    };
    format!("{sign}{body}")
}

pub fn parse_number(s: &str) -> Result<f64> {
    match s {
        "nan" => Ok(f64::NAN),
        "inf" => Ok(f64::INFINITY),
        "-inf" => Ok(f64::NEG_INFINITY),
        _ => s.parse().map_err(|_| Error::Config(format!("not a number: '{s}'"))),
    }
}

pub fn write_sweep_csv<W: Write>(out: &mut W, rows: &[SweepRow]) -> std::io::Result<()> {
    writeln!(out, "{SWEEP_HEADER}")?;
    for r in rows {
        let numbers = [
            r.omega_norm,
            r.k_parallel,
            r.kappa,
            r.zeta1_over_lambda,
            r.lz_over_lambda,
            r.frac_dielectric,
            r.frac_nimm,
        ];
        for x in numbers {
            write!(out, "{},", format_number(x))?;
        }
        writeln!(out, "{}", r.status.as_str())?;
    }
    Ok(())
}

pub fn read_sweep_csv<R: BufRead>(input: R) -> Result<Vec<SweepRow>> {
    let mut lines = input.lines();
    let header = lines.next().transpose().map_err(|e| Error::Config(e.to_string()))?.unwrap_or_default();
    if header != SWEEP_HEADER {
        return Err(Error::Config(format!("unexpected sweep header '{header}'")));
    }
    let mut rows = Vec::new();
    for line in lines {
        let line = line.map_err(|e| Error::Config(e.to_string()))?;
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 8 {
            return Err(Error::Config(format!("expected 8 fields, got {}: '{line}'", fields.len())));
        }
        let n = |i: usize| parse_number(fields[i]);
        rows.push(SweepRow {
            omega_norm: n(0)?,
            k_parallel: n(1)?,
            kappa: n(2)?,
            zeta1_over_lambda: n(3)?,
            lz_over_lambda: n(4)?,
            frac_dielectric: n(5)?,
            frac_nimm: n(6)?,
            status: fields[7].parse::<ModeStatus>()?,
        });
    }
    Ok(rows)
}
