//! Browser bindings: pyramids, spectrum tables and ladder walks.
//!
//! Each export has a plain-Rust twin returning `Result<String, String>` so
//! the native test suite exercises the same code the page calls.

use serde_json::json;
use wasm_bindgen::prelude::*;

use qsp4::algebras::{Casimir, Family, GeneratorSet};
use qsp4::fock::{FockSpace, FockState, Parity, Sector};
use qsp4::ops::gram;
use qsp4::qnum::Deformation;
use qsp4::render::{pyramid, LabelStyle};
use qsp4::verify::spectra::{casimir_table, named_table, TABLE_NAMES};

/// Largest cutoff the page may request; keeps a click well under a second.
pub const MAX_CUTOFF: u32 = 14;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

pub fn pyramid_text_native(labels: &str, sector: &str, rows: u32) -> Result<String, String> {
    let style: LabelStyle = labels.parse().map_err(err)?;
    let parity = match sector {
        "even" => Parity::Even,
        "odd" => Parity::Odd,
        _ => return Err(format!("sector must be even or odd, got '{sector}'")),
    };
    if rows > 12 {
        return Err("at most 12 rows".into());
    }
    pyramid(style, parity, rows).map_err(err)
}

/// A Casimir by name (`L2`, `J2`, `S2(1,0,0,0)`, ...) or a series table
/// (`phi1`, `alpha+even`, ...), eigenvalues evaluated at `q`.
pub fn spectrum_json_native(name: &str, cutoff: u32, q: f64) -> Result<String, String> {
    if !(4..=MAX_CUTOFF).contains(&cutoff) {
        return Err(format!("cutoff must be in 4..={MAX_CUTOFF}"));
    }
    if !(q > 0.0 && q.is_finite()) {
        return Err("q must be positive".into());
    }
    let table = if TABLE_NAMES.contains(&name) {
        named_table(name, cutoff, &[q])
    } else {
        name.parse::<Casimir>().and_then(|c| casimir_table(&c, cutoff, Sector::All, &[q]))
    }
    .map_err(err)?;
    let rows: Vec<_> = table
        .rows
        .iter()
        .map(|r| {
            let value = r.numeric.first().copied().or_else(|| r.exact.eval(q).ok());
            json!({"key": r.key, "label": r.value, "exact": r.exact.to_string(), "value": value, "series": r.series})
        })
        .collect();
    Ok(json!({"label": table.label, "key_name": table.key_name, "value_name": table.value_name, "q": q, "rows": rows}).to_string())
}

/// Repeated `L_{dir}` on `|nu1, nu_-1>`: every intermediate state with its
/// monomial coefficient and normalized amplitude at `q`.
pub fn ladder_json_native(nu1: u32, num1: u32, dir: i32, q: f64) -> Result<String, String> {
    let nu = nu1 + num1;
    if nu > MAX_CUTOFF || nu == 0 {
        return Err(format!("need 0 < nu1 + nu_-1 <= {MAX_CUTOFF}"));
    }
    if !(q > 0.0 && q.is_finite()) {
        return Err("q must be positive".into());
    }
    let op_name = match dir {
        1 => "L_1",
        -1 => "L_-1",
        _ => return Err("direction must be 1 or -1".into()),
    };
    let gens = GeneratorSet::build(Family::TensorSp4, FockSpace::full(nu.max(4))).map_err(err)?;
    let op = gens.get(op_name).map_err(err)?;
    let start = FockState::new(nu1, num1);
    let d = Deformation::Quantum;
    let g0 = gram(start, d).eval(q).map_err(err)?;
    let mut steps = vec![json!({"k": 0, "state": [nu1, num1], "coefficient": "1", "amplitude": 1.0})];
    let (mut cur, mut c) = (start, qsp4::qnum::QRationalFn::one());
    for k in 1..=nu {
        let next = op.apply(cur);
        let Some((dst, v)) = next.into_iter().next() else { break };
        c = &c * &v;
        cur = dst;
        let amp = c.eval(q).map_err(err)? * (gram(dst, d).eval(q).map_err(err)? / g0).sqrt();
        steps.push(json!({"k": k, "state": [dst.nu1, dst.num1], "coefficient": c.to_string(), "amplitude": amp}));
    }
    Ok(json!({"op": op_name, "start": [nu1, num1], "q": q, "steps": steps}).to_string())
}

#[wasm_bindgen]
pub fn pyramid_text(labels: &str, sector: &str, rows: u32) -> Result<String, JsValue> {
    pyramid_text_native(labels, sector, rows).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn spectrum_json(name: &str, cutoff: u32, q: f64) -> Result<String, JsValue> {
    spectrum_json_native(name, cutoff, q).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn ladder_json(nu1: u32, num1: u32, dir: i32, q: f64) -> Result<String, JsValue> {
    ladder_json_native(nu1, num1, dir, q).map_err(|e| JsValue::from_str(&e))
}
