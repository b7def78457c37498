//! Parsers for module labels, coupon labels and exact scalar literals.
//!
//! A scalar literal is either a plain rational (`2`, `-3/4`) or a
//! parenthesised coefficient 4-tuple `(c0,c1,c2,c3)` over the basis
//! `1, z, z^2, z^3` with `z = zeta8`. A parameter matrix is four scalar
//! literals `a-,a+,b-,b+` separated by top-level commas.

use sfq::reps::{MuMatrix, SimpleLabel};
use sfq::{Algebra, AlgebraElement, CycScalar};

pub fn parse_scalar(s: &str) -> Result<CycScalar, String> {
    CycScalar::parse(s)
}

/// Split on commas that are not nested inside parentheses.
fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
            }
            _ => cur.push(ch),
        }
    }
    out.push(cur);
    out
}

pub fn parse_mu(s: &str) -> Result<MuMatrix, String> {
    let parts = split_top_level(s);
    if parts.len() != 4 {
        return Err(format!(
            "parameter matrix needs 4 entries a-,a+,b-,b+, got {}",
            parts.len()
        ));
    }
    Ok(MuMatrix::new(
        parse_scalar(&parts[0])?,
        parse_scalar(&parts[1])?,
        parse_scalar(&parts[2])?,
        parse_scalar(&parts[3])?,
    ))
}

/// Module labels: `X0+`, `X0-`, `X1+`, `X1-`, `P0+`, `P0-`, `Pmu:<matrix>`.
#[derive(Clone, Debug)]
pub enum ModuleLabel {
    Simple(SimpleLabel),
    Cover(i64),
    Mu(Box<MuMatrix>),
}

impl ModuleLabel {
    pub fn parse(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("Pmu:") {
            return Ok(ModuleLabel::Mu(Box::new(parse_mu(rest)?)));
        }
        match s {
            "X0+" => Ok(ModuleLabel::Simple(SimpleLabel::X0(1))),
            "X0-" => Ok(ModuleLabel::Simple(SimpleLabel::X0(-1))),
            "X1+" => Ok(ModuleLabel::Simple(SimpleLabel::X1(1))),
            "X1-" => Ok(ModuleLabel::Simple(SimpleLabel::X1(-1))),
            "P0+" => Ok(ModuleLabel::Cover(1)),
            "P0-" => Ok(ModuleLabel::Cover(-1)),
            _ => Err(format!(
                "unknown module label '{s}' (expected X0+-, X1+-, P0+-, Pmu:a-,a+,b-,b+)"
            )),
        }
    }

    pub fn render(&self) -> String {
        match self {
            ModuleLabel::Simple(l) => l.render(),
            ModuleLabel::Cover(e) => format!("P0{}", if *e >= 0 { "+" } else { "-" }),
            ModuleLabel::Mu(mu) => format!(
                "Pmu[{},{};{},{}]",
                mu.a_minus, mu.a_plus, mu.b_minus, mu.b_plus
            ),
        }
    }
}

/// Central coupon labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaLabel {
    Id,
    E0,
    /// `e0 prod_{j in t} f_j^+ f_j^-` with `t` a bit string, lowest index first.
    T(u32),
    Top,
    PhiP0Plus,
    PhiX1(i64),
    /// `e0 f_1^gamma f_2^eps`.
    Mixed {
        gamma: i64,
        eps: i64,
    },
    /// The signed recovery coupons indexed like matrix entries.
    Recovery {
        j: usize,
        l: usize,
    },
}

impl AlphaLabel {
    pub fn parse(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if let Some(bits) = s.strip_prefix("t:") {
            let mut mask = 0u32;
            for (i, ch) in bits.chars().enumerate() {
                match ch {
                    '1' => mask |= 1 << i,
                    '0' => {}
                    _ => return Err(format!("bad bit string '{bits}'")),
                }
            }
            return Ok(AlphaLabel::T(mask));
        }
        match s {
            "id" => Ok(AlphaLabel::Id),
            "e0" => Ok(AlphaLabel::E0),
            "top" => Ok(AlphaLabel::Top),
            "phiP0+" => Ok(AlphaLabel::PhiP0Plus),
            "phiX1+" => Ok(AlphaLabel::PhiX1(1)),
            "phiX1-" => Ok(AlphaLabel::PhiX1(-1)),
            "e0f1+f2+" => Ok(AlphaLabel::Mixed { gamma: 1, eps: 1 }),
            "e0f1+f2-" => Ok(AlphaLabel::Mixed { gamma: 1, eps: -1 }),
            "e0f1-f2+" => Ok(AlphaLabel::Mixed { gamma: -1, eps: 1 }),
            "e0f1-f2-" => Ok(AlphaLabel::Mixed { gamma: -1, eps: -1 }),
            "a11" => Ok(AlphaLabel::Recovery { j: 1, l: 1 }),
            "a12" => Ok(AlphaLabel::Recovery { j: 1, l: 2 }),
            "a21" => Ok(AlphaLabel::Recovery { j: 2, l: 1 }),
            "a22" => Ok(AlphaLabel::Recovery { j: 2, l: 2 }),
            _ => Err(format!("unknown coupon label '{s}'")),
        }
    }

    pub fn element(&self, alg: &Algebra) -> Result<AlgebraElement, String> {
        let need_two = |what: &str| -> Result<(), String> {
            if alg.n() < 2 {
                Err(format!("coupon '{what}' needs at least two fermion pairs"))
            } else {
                Ok(())
            }
        };
        Ok(match self {
            AlphaLabel::Id => alg.unit(),
            AlphaLabel::E0 => alg.e0(),
            AlphaLabel::T(mask) => {
                if *mask >= (1 << alg.n()) {
                    return Err("bit string longer than the fermion count".into());
                }
                alg.alpha_t(*mask)
            }
            AlphaLabel::Top => alg.e0_top(),
            AlphaLabel::PhiP0Plus => alg.phi_p0_plus(),
            AlphaLabel::PhiX1(eps) => alg.phi_x1(*eps),
            AlphaLabel::Mixed { gamma, eps } => {
                need_two("e0 f1 f2")?;
                &(&alg.e0() * &alg.f(1, *gamma)) * &alg.f(2, *eps)
            }
            AlphaLabel::Recovery { j, l } => {
                need_two("recovery")?;
                // row j = 1 uses f1^+ with sign +, row j = 2 uses f1^- with
                // sign -; column l = 1 pairs with f2^-, column l = 2 with f2^+
                let gamma = if *j == 1 { 1 } else { -1 };
                let eps = if *l == 1 { -1 } else { 1 };
                let sign = if *j == 1 { 1 } else { -1 };
                (&(&alg.e0() * &alg.f(1, gamma)) * &alg.f(2, eps)).scale(&CycScalar::from_int(sign))
            }
        })
    }

    pub fn render(&self) -> String {
        match self {
            AlphaLabel::Id => "id".into(),
            AlphaLabel::E0 => "e0".into(),
            AlphaLabel::T(mask) => format!("t:{mask:b}"),
            AlphaLabel::Top => "top".into(),
            AlphaLabel::PhiP0Plus => "phiP0+".into(),
            AlphaLabel::PhiX1(e) => format!("phiX1{}", if *e >= 0 { "+" } else { "-" }),
            AlphaLabel::Mixed { gamma, eps } => format!(
                "e0f1{}f2{}",
                if *gamma >= 0 { "+" } else { "-" },
                if *eps >= 0 { "+" } else { "-" }
            ),
            AlphaLabel::Recovery { j, l } => format!("a{j}{l}"),
        }
    }
}
