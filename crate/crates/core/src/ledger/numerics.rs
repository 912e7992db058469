use serde::Serialize;

use crate::curve::etale_quotient_genus;

use super::LedgerError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceInvariants {
    pub k2: i64,
    pub c2: i64,
    pub chi: i64,
    pub p_g: i64,
    pub q: i64,
}

impl SurfaceInvariants {
    /// 12χ = K² + c₂.
    pub fn satisfies_noether(&self) -> bool {
        12 * self.chi == self.k2 + self.c2
    }

    /// χ = 1 − q + p_g.
    pub fn chi_consistent(&self) -> bool {
        self.chi == 1 - self.q + self.p_g
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CoverKind {
    Etale,
    DoubleBranched,
    TripleSimplyBranched,
    BlowDown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverMap {
    pub name: String,
    pub degree: u32,
    pub kind: CoverKind,
    pub ramification: Vec<(String, u32)>,
}

impl CoverMap {
    pub fn new(name: &str, degree: u32, kind: CoverKind, ramification: &[(&str, u32)]) -> Result<Self, LedgerError> {
        if degree == 0 {
            return Err(LedgerError::NonPositive { what: "cover degree", value: 0 });
        }
        Ok(Self {
            name: name.to_string(),
            degree,
            kind,
            ramification: ramification.iter().map(|(d, e)| (d.to_string(), *e)).collect(),
        })
    }

    /// Checks β⁎D · C = D · β⁎C given both sides.
    pub fn projection_formula_holds(&self, upstairs: i64, downstairs: i64) -> bool {
        upstairs == downstairs
    }
}

fn exact_div(what: &'static str, num: i64, den: i64) -> Result<i64, LedgerError> {
    if den == 0 || num % den != 0 {
        return Err(LedgerError::NonInteger { what, num, den });
    }
    Ok(num / den)
}

fn positive(what: &'static str, value: i64) -> Result<i64, LedgerError> {
    if value <= 0 {
        return Err(LedgerError::NonPositive { what, value });
    }
    Ok(value)
}

/// Invariants of (C_g × C_g)/G for a group of order n acting freely and
/// diagonally, with the same free action on each factor.
pub fn free_quotient_invariants(g: i64, n: i64) -> Result<SurfaceInvariants, LedgerError> {
    positive("group order", n)?;
    if g < 2 {
        return Err(LedgerError::NonPositive { what: "genus - 1", value: g - 1 });
    }
    let k2 = exact_div("K^2 / n", 8 * (g - 1) * (g - 1), n)?;
    let chi = exact_div("chi / n", (g - 1) * (g - 1), n)?;
    let q = 2 * etale_quotient_genus(g, n)?;
    let p_g = chi - 1 + q;
    Ok(SurfaceInvariants { k2, c2: 12 * chi - k2, chi, p_g, q })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PushPullMode {
    /// D is the image of an étale degree-n cover; D² = Σ²/n.
    Etale,
    /// D is a branch curve with u*D = 2Σ; D² = 4Σ²/n.
    Branch,
    /// u*D is a disjoint union of curves; D² = (Σ Σᵢ²)/n.
    UnramifiedImage,
}

/// Self-intersection downstairs from the self-intersection of the preimage
/// (for `UnramifiedImage`, the sum over the disjoint components).
pub fn pushpull_selfint(upstairs_selfint: i64, cover_degree: i64, mode: PushPullMode) -> Result<i64, LedgerError> {
    positive("cover degree", cover_degree)?;
    match mode {
        PushPullMode::Etale | PushPullMode::UnramifiedImage => {
            exact_div("pushed self-intersection", upstairs_selfint, cover_degree)
        }
        PushPullMode::Branch => exact_div("pushed self-intersection", 4 * upstairs_selfint, cover_degree),
    }
}

/// K·D = 2g − 2 − D².
pub fn adjunction_kd(genus: i64, d2: i64) -> i64 {
    2 * genus - 2 - d2
}

/// K² from 2(K + D/2)² = K_T², i.e. K² = K_T²/2 − K·D − D²/4.
pub fn double_cover_k2(k_t2: i64, d2: i64, kd: i64) -> Result<i64, LedgerError> {
    let half = exact_div("K_T^2 / 2", k_t2, 2)?;
    let quarter = exact_div("D^2 / 4", d2, 4)?;
    Ok(half - kd - quarter)
}

/// c₂ of a double-type cover's base by stratification:
/// (c₂_T − Σ χ(branch curves))/n + Σ χ(image curves).
pub fn stratified_euler(c2_t: i64, branch_curves: &[i64], image_curves: &[i64], n: i64) -> Result<i64, LedgerError> {
    positive("cover degree", n)?;
    let open = exact_div("open stratum", c2_t - branch_curves.iter().sum::<i64>(), n)?;
    Ok(open + image_curves.iter().sum::<i64>())
}

/// χ(𝒪) = (K² + c₂)/12.
pub fn noether_chi(k2: i64, c2: i64) -> Result<i64, LedgerError> {
    if (k2 + c2) % 12 != 0 {
        return Err(LedgerError::NoetherFailure { k2, c2 });
    }
    Ok((k2 + c2) / 12)
}

/// Z² from K = Z + R: Z² = K² − 2ZR − R².
pub fn solve_z2(k2: i64, zr: i64, r2: i64) -> i64 {
    k2 - 2 * zr - r2
}

/// Topological Euler characteristic of a smooth curve of genus g.
pub fn chi_top(genus: i64) -> i64 {
    2 - 2 * genus
}
