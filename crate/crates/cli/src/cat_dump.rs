//! The `cat` command: dump one entangled-cat state as JSON together with
//! its norm, Gram-engine entropy and Schmidt spectrum.

use num_complex::Complex64 as C64;
use serde::Serialize;

use kerrcat_core::{entanglement_of_cat, make_entangled_cat, CoherentSuperposition, Method};

use crate::error::{CliError, Result};

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CatDump {
    pub alpha: [f64; 2],
    pub m: usize,
    pub state: CoherentSuperposition,
    pub norm: f64,
    pub entropy_bits: f64,
    pub schmidt_spectrum: Vec<f64>,
    pub certified_error: f64,
}

pub fn run_cat(alpha: C64, m: usize) -> Result<CatDump> {
    if m == 0 {
        return Err(CliError::Config("m must be at least 1".into()));
    }
    let state = make_entangled_cat(alpha, m);
    let norm = state.norm_squared()?.sqrt();
    let result = entanglement_of_cat(alpha, m, Method::Gram)?;
    Ok(CatDump {
        alpha: [alpha.re, alpha.im],
        m,
        state,
        norm,
        entropy_bits: result.entropy_bits,
        schmidt_spectrum: result.spectrum.probs().to_vec(),
        certified_error: result.certified_error,
    })
}

/// Parse a complex amplitude like `1`, `-2.5`, `1+2i`, `0.3-0.7i`, `2i`, `-i`.
pub fn parse_complex(s: &str) -> Result<C64> {
    let raw = s.trim().replace(' ', "");
    if raw.is_empty() {
        return Err(CliError::Config("empty complex number".into()));
    }
    let err = || CliError::Config(format!("cannot parse complex number '{s}'"));

    if !raw.ends_with('i') && !raw.ends_with('I') {
        return raw.parse::<f64>().map(|re| C64::new(re, 0.0)).map_err(|_| err());
    }

    let body = &raw[..raw.len() - 1];
    // split before the sign of the imaginary part, skipping exponent signs
    // and a leading sign
    let split = body
        .char_indices()
        .rev()
        .find(|(idx, ch)| {
            (*ch == '+' || *ch == '-')
                && *idx > 0
                && !matches!(body.as_bytes()[idx - 1], b'e' | b'E')
        })
        .map(|(idx, _)| idx);

    let (re_str, im_str) = match split {
        Some(idx) => (&body[..idx], &body[idx..]),
        None => ("", body),
    };
    let re = if re_str.is_empty() {
        0.0
    } else {
        re_str.parse::<f64>().map_err(|_| err())?
    };
    let im = match im_str {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().map_err(|_| err())?,
    };
    Ok(C64::new(re, im))
}
