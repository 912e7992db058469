//! Genus formulas and finite-field certification of the curve C₄ = V₂ ∩ V₃.
//!
//! Certification is per instance and per prime: every 𝔽ₚ-point of ℙ³ is
//! enumerated (representatives with first nonzero coordinate 1), the points
//! on both reduced forms are checked for Jacobian rank 2, the ⟨ξ⟩-orbits are
//! checked to have size 3, and the point count is checked against the
//! Hasse–Weil window for genus 4.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{reduce_mod_p, ArithError, CycNum, Cyclotomic3, ExactMatrix, Field, PrimeField, PrimeFieldElem};
use crate::poly::{resultant_binary, Form, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("degrees must be positive, got ({0}, {1})")]
    InvalidDegree(i64, i64),
    #[error("no genus g with 2·{g_top} − 2 = {n}(2g − 2)")]
    NotDivisible { g_top: i64, n: i64 },
    #[error("h0(dK) formula needs genus ≥ 2, got {0}")]
    UnsupportedGenus(i64),
    #[error("multiple of K must be positive, got {0}")]
    NonPositiveMultiple(i64),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Genus of a smooth complete intersection of degrees (d₁, d₂) in ℙ³.
pub fn ci_genus(d1: i64, d2: i64) -> Result<i64, CurveError> {
    if d1 < 1 || d2 < 1 {
        return Err(CurveError::InvalidDegree(d1, d2));
    }
    // d₁d₂(d₁ + d₂ − 4) is always even
    Ok(1 + d1 * d2 * (d1 + d2 - 4) / 2)
}

/// Genus of the base of an étale degree-n cover of a genus-`g_top` curve.
pub fn etale_quotient_genus(g_top: i64, n: i64) -> Result<i64, CurveError> {
    let chi = 2 * g_top - 2;
    if n < 1 || chi % n != 0 || (chi / n) % 2 != 0 {
        return Err(CurveError::NotDivisible { g_top, n });
    }
    Ok((chi / n + 2) / 2)
}

/// h⁰(C, dK_C) for a curve of genus g ≥ 2.
pub fn h0_of_dk(g: i64, d: i64) -> Result<i64, CurveError> {
    if g <= 1 {
        return Err(CurveError::UnsupportedGenus(g));
    }
    match d {
        d if d < 1 => Err(CurveError::NonPositiveMultiple(d)),
        1 => Ok(g),
        d => Ok((2 * d - 1) * (g - 1)),
    }
}

/// Witness that the ⟨ξ⟩-action on C₄ has been checked to be free.
///
/// Only [`FreeActionFlags::certificate`] can produce one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreeActionCertificate {
    _private: (),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FreeActionFlags {
    /// r and s share no root, so no fixed point lies on the line x₂ = x₃ = 0.
    pub resultant_nonzero: bool,
    /// V₃ does not vanish at [0:0:1:0] or [0:0:0:1].
    pub coordinate_points_excluded: bool,
}

impl FreeActionFlags {
    pub fn is_free(&self) -> bool {
        self.resultant_nonzero && self.coordinate_points_excluded
    }

    pub fn certificate(&self) -> Option<FreeActionCertificate> {
        self.is_free().then_some(FreeActionCertificate { _private: () })
    }
}

/// The part of a four-variable form involving only x₀, x₁, as a binary form.
pub fn binary_part<F: Field>(form: &Form<F>) -> Result<Form<F>, PolyError> {
    let terms = form
        .terms()
        .filter(|(m, _)| m.exponents()[2..].iter().all(|&e| e == 0))
        .map(|(m, c)| (m.exponents()[..2].to_vec(), c.clone()))
        .collect::<Vec<_>>();
    Form::from_terms(form.field().clone(), 2, terms)
}

fn flags_from_curve<F: Field>(v2: &Form<F>, v3: &Form<F>) -> Result<FreeActionFlags, CurveError> {
    let f = v3.field();
    let r = binary_part(v2)?;
    let s = binary_part(v3)?;
    let resultant_nonzero = match resultant_binary(&r, &s) {
        Ok(res) => !f.is_zero(&res),
        Err(PolyError::ZeroForm) => false,
        Err(e) => return Err(e.into()),
    };
    let e2 = [f.zero(), f.zero(), f.one(), f.zero()];
    let e3 = [f.zero(), f.zero(), f.zero(), f.one()];
    let coordinate_points_excluded =
        !f.is_zero(&v3.evaluate(&e2)?) && !f.is_zero(&v3.evaluate(&e3)?);
    Ok(FreeActionFlags { resultant_nonzero, coordinate_points_excluded })
}

/// Fixed points of ξ in ℙ³ lie on the line x₂ = x₃ = 0 or are [0:0:1:0],
/// [0:0:0:1]; both families are excluded from C₄ iff both flags hold.
pub fn free_action_check<F: Field>(r: &Form<F>, s: &Form<F>) -> Result<FreeActionFlags, CurveError> {
    let (v2, v3) = crate::poly::build_curve_forms(r, s)?;
    flags_from_curve(&v2, &v3)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveCertificate {
    pub prime: u64,
    pub zeta_image: u64,
    pub points_enumerated: u64,
    pub points_found: u64,
    pub singular_points: u64,
    pub all_smooth: bool,
    pub free_orbits: bool,
    pub orbit_count: u64,
    pub hasse_weil_ok: bool,
    pub resultant_nonzero: bool,
    pub coordinate_points_excluded: bool,
}

impl CurveCertificate {
    pub fn is_valid(&self) -> bool {
        self.all_smooth
            && self.free_orbits
            && self.hasse_weil_ok
            && self.resultant_nonzero
            && self.coordinate_points_excluded
    }
}

/// The canonical projective representative: first nonzero coordinate 1.
pub fn normalize_point(field: &PrimeField, p: &[PrimeFieldElem]) -> Option<Vec<PrimeFieldElem>> {
    let lead = p.iter().find(|x| !field.is_zero(x))?;
    let inv = field.inv(lead).ok()?;
    Some(p.iter().map(|x| field.mul(x, &inv)).collect())
}

/// All of ℙ³(𝔽ₚ), in a fixed order, as canonical representatives.
pub fn projective_points(field: &PrimeField) -> Vec<[PrimeFieldElem; 4]> {
    projective_chunks(field).into_iter().flat_map(|chunk| expand_chunk(field, chunk)).collect()
}

// A chunk fixes the leading coordinate index and the coordinate after it.
type Chunk = (usize, Option<u64>);

fn projective_chunks(field: &PrimeField) -> Vec<Chunk> {
    let p = field.modulus();
    let mut chunks = Vec::new();
    for lead in 0..4 {
        if lead == 3 {
            chunks.push((lead, None));
        } else {
            chunks.extend((0..p).map(|v| (lead, Some(v))));
        }
    }
    chunks
}

fn expand_chunk(field: &PrimeField, (lead, next): Chunk) -> Vec<[PrimeFieldElem; 4]> {
    let p = field.modulus();
    let free = 3 - lead;
    let rest = free.saturating_sub(1);
    let count = p.pow(rest as u32);
    let mut out = Vec::with_capacity(count as usize);
    for idx in 0..count {
        let mut pt = [field.zero(); 4];
        pt[lead] = field.one();
        if let Some(v) = next {
            pt[lead + 1] = field.elem(v);
        }
        let mut k = idx;
        for slot in pt.iter_mut().skip(lead + 2) {
            *slot = field.elem(k % p);
            k /= p;
        }
        out.push(pt);
    }
    out
}

/// Reduces a form over ℚ(ζ₃) to 𝔽ₚ with ζ ↦ `zeta_image`.
pub fn reduce_form(form: &Form<Cyclotomic3>, p: u64, zeta_image: u64) -> Result<Form<PrimeField>, CurveError> {
    let field = PrimeField::cyclotomic(p)?;
    Ok(form.map_coeffs(field, |c: &CycNum| reduce_mod_p(c, p, zeta_image))?)
}

/// ξᵉ·[x₀:x₁:x₂:x₃] = [x₀:x₁:zᵉx₂:z²ᵉx₃], normalized, with z the image of ζ.
pub fn xi_on_fp_point(field: &PrimeField, zeta_image: u64, pt: &[PrimeFieldElem; 4], e: u8) -> [PrimeFieldElem; 4] {
    let z = field.pow(&field.elem(zeta_image), e as u32);
    let moved = [pt[0], pt[1], field.mul(&z, &pt[2]), field.mul(&field.mul(&z, &z), &pt[3])];
    let n = normalize_point(field, &moved).expect("nonzero point");
    [n[0], n[1], n[2], n[3]]
}

/// 𝔽ₚ-points of V₂ ∩ V₃, in enumeration order.
pub fn curve_points(
    v2: &Form<PrimeField>,
    v3: &Form<PrimeField>,
) -> Result<Vec<[PrimeFieldElem; 4]>, CurveError> {
    let field = *v2.field();
    let chunks = projective_chunks(&field);
    let found: Vec<Vec<[PrimeFieldElem; 4]>> = chunks
        .into_par_iter()
        .map(|chunk| {
            let mut on = Vec::new();
            for pt in expand_chunk(&field, chunk) {
                if field.is_zero(&v2.evaluate(&pt)?) && field.is_zero(&v3.evaluate(&pt)?) {
                    on.push(pt);
                }
            }
            Ok(on)
        })
        .collect::<Result<_, CurveError>>()?;
    Ok(found.into_iter().flatten().collect())
}

/// Certifies smoothness, freeness of ⟨ξ⟩ and the Hasse–Weil window over 𝔽ₚ.
pub fn certify_over_fp(
    v2: &Form<Cyclotomic3>,
    v3: &Form<Cyclotomic3>,
    p: u64,
    zeta_image: u64,
) -> Result<CurveCertificate, CurveError> {
    let field = PrimeField::cyclotomic(p)?;
    let v2p = reduce_form(v2, p, zeta_image)?;
    let v3p = reduce_form(v3, p, zeta_image)?;
    let genus = ci_genus(2, 3)?;

    let points = curve_points(&v2p, &v3p)?;
    let grads = [v2p.gradient(), v3p.gradient()];
    let singular_points = points
        .par_iter()
        .map(|pt| -> Result<bool, CurveError> {
            let rows = grads
                .iter()
                .map(|g| g.iter().map(|d| d.evaluate(pt)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            Ok(ExactMatrix::from_rows(field, 4, rows)?.rank() < 2)
        })
        .collect::<Result<Vec<bool>, _>>()?
        .into_iter()
        .filter(|&singular| singular)
        .count() as u64;

    let on_curve: std::collections::HashSet<[PrimeFieldElem; 4]> = points.iter().copied().collect();
    let free_orbits = points.iter().all(|pt| {
        let once = xi_on_fp_point(&field, zeta_image, pt, 1);
        once != *pt && on_curve.contains(&once)
    });

    let n = points.len() as i64;
    let deviation = n - (p as i64 + 1);
    let hasse_weil_ok = (deviation as i128).pow(2) <= 4 * (genus as i128).pow(2) * p as i128;

    let flags = flags_from_curve(&v2p, &v3p)?;
    let points_enumerated = projective_chunks(&field)
        .into_iter()
        .map(|chunk| expand_chunk(&field, chunk).len() as u64)
        .sum();

    Ok(CurveCertificate {
        prime: p,
        zeta_image,
        points_enumerated,
        points_found: n as u64,
        singular_points,
        all_smooth: singular_points == 0,
        free_orbits,
        orbit_count: if free_orbits { n as u64 / 3 } else { 0 },
        hasse_weil_ok,
        resultant_nonzero: flags.resultant_nonzero,
        coordinate_points_excluded: flags.coordinate_points_excluded,
    })
}
