use serde_json::{json, Value};

use symcanon::canonical::{canonicalize, invariants_from_gl, stable_lagrangians};
use symcanon::cohomology::cohomology_ranks;
use symcanon::comessatti::{comessatti_canonicalize, GlInvolution};
use symcanon::matrix::{is_involution, is_symplectic, SymplecticInvolution};
use symcanon::normal_forms::{skew_frobenius, smith_normal_form};
use symcanon::surface::{admissible_involutions, quotient_data, QuotientData};
use symcanon::testgen::{random_symplectic_involution, GenConfig};

use crate::document::{entry_value, matrix_value, MatrixDocument};
use crate::error::CliError;

fn invariants_value((p, m, t): (usize, usize, usize)) -> Value {
    json!({ "p": p, "m": m, "t": t })
}

fn quotient_value(q: &QuotientData) -> Value {
    json!({
        "genus": q.g,
        "fixed_points": q.k,
        "quotient_genus": q.g_quotient,
        "invariants": invariants_value((q.p, q.m, q.t)),
    })
}

/// Genus of a square even-dimensional input.
fn genus_of(doc: &MatrixDocument) -> Result<usize, CliError> {
    let m = &doc.matrix;
    if !m.is_square() {
        return Err(CliError::Input(format!("expected a square matrix, got {}x{}", m.rows(), m.cols())));
    }
    if m.rows() % 2 != 0 {
        return Err(CliError::Input(format!("expected an even dimension, got {}", m.rows())));
    }
    Ok(m.rows() / 2)
}

pub fn verify(doc: &MatrixDocument) -> Result<Value, CliError> {
    let g = genus_of(doc)?;
    let symplectic = is_symplectic(&doc.matrix, g)?;
    let involution = is_involution(&doc.matrix);
    let invariants = if symplectic && involution {
        let s = SymplecticInvolution::new(doc.matrix.clone())?;
        invariants_value(invariants_from_gl(&s)?)
    } else {
        Value::Null
    };
    Ok(json!({
        "genus": g,
        "symplectic": symplectic,
        "involution": involution,
        "symplectic_involution": symplectic && involution,
        "invariants": invariants,
    }))
}

pub fn canonicalize_cmd(doc: &MatrixDocument) -> Result<Value, CliError> {
    genus_of(doc)?;
    let s = SymplecticInvolution::new(doc.matrix.clone())?;
    let rep = canonicalize(&s)?;
    let (l1, l2) = stable_lagrangians(&rep);
    let stages: Vec<Value> = rep
        .stage_log
        .iter()
        .map(|r| json!({ "stage": r.stage, "identities_hold": r.identities_hold }))
        .collect();
    Ok(json!({
        "genus": s.genus(),
        "invariants": invariants_value(rep.canonical.invariants()),
        "transform": matrix_value(&rep.transform),
        "canonical": matrix_value(&rep.canonical.matrix),
        "transform_is_symplectic": rep.transform_is_symplectic,
        "conjugation_verified": rep.conjugation_verified,
        "stages": stages,
        "lagrangians": [matrix_value(&l1), matrix_value(&l2)],
    }))
}

pub fn invariants(doc: &MatrixDocument) -> Result<Value, CliError> {
    let gl = GlInvolution::new(doc.matrix.clone())?;
    let dec = comessatti_canonicalize(&gl)?;
    let coh = cohomology_ranks(&gl)?;
    let n = gl.dim();
    let symplectic = if n % 2 == 0 && is_symplectic(gl.matrix(), n / 2)? {
        invariants_value(invariants_from_gl(&SymplecticInvolution::new(gl.matrix().clone())?)?)
    } else {
        Value::Null
    };
    Ok(json!({
        "dimension": n,
        "s_plus": dec.s_plus,
        "s_minus": dec.s_minus,
        "lambda": dec.lambda,
        "cohomology": {
            "h0_rank": coh.h0_rank,
            "h_odd_rank": coh.h_odd_rank,
            "h_even_rank": coh.h_even_rank,
        },
        "symplectic_invariants": symplectic,
    }))
}

pub fn smith(doc: &MatrixDocument) -> Result<Value, CliError> {
    let s = smith_normal_form(&doc.matrix);
    Ok(json!({
        "u": matrix_value(&s.u),
        "v": matrix_value(&s.v),
        "d": matrix_value(&s.d),
        "divisors": s.divisors().iter().map(entry_value).collect::<Vec<_>>(),
        "rank": s.rank(),
    }))
}

pub fn skew_frobenius_cmd(doc: &MatrixDocument) -> Result<Value, CliError> {
    let f = skew_frobenius(&doc.matrix)?;
    Ok(json!({
        "u": matrix_value(&f.u),
        "d": matrix_value(&f.d),
        "divisors": f.divisors.iter().map(entry_value).collect::<Vec<_>>(),
        "rank": f.rank(),
    }))
}

pub fn comessatti(doc: &MatrixDocument) -> Result<Value, CliError> {
    let dec = comessatti_canonicalize(&GlInvolution::new(doc.matrix.clone())?)?;
    Ok(json!({
        "s_plus": dec.s_plus,
        "s_minus": dec.s_minus,
        "lambda": dec.lambda,
        "basis": matrix_value(&dec.basis),
        "canonical": matrix_value(&dec.canonical),
    }))
}

pub fn generate(p: usize, m: usize, t: usize, cfg: GenConfig) -> Result<Value, CliError> {
    let s = random_symplectic_involution(p, m, t, &cfg)?;
    Ok(json!({
        "genus": s.genus(),
        "invariants": invariants_value((p, m, t)),
        "seed": cfg.seed,
        "num_factors": cfg.num_factors,
        "entry_bound": cfg.entry_bound,
        "matrix": matrix_value(s.matrix()),
    }))
}

pub fn riemann(genus: usize, fixed_points: Option<usize>) -> Result<Value, CliError> {
    match fixed_points {
        Some(k) => Ok(quotient_value(&quotient_data(genus, k)?)),
        None => {
            if genus == 0 {
                return Err(CliError::Input("genus must be at least 1".into()));
            }
            let all: Vec<Value> = admissible_involutions(genus).iter().map(quotient_value).collect();
            Ok(json!({ "genus": genus, "admissible": all }))
        }
    }
}
