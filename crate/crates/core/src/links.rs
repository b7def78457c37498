//! Evaluators for the three link families: the n-framed unknot, the framed
//! Hopf link, and the (2,m)-torus knots, under any trace regime.
//!
//! The torus-knot endomorphism is built by an exact tensor contraction of
//! the braiding data; the Hopf link is evaluated through the central
//! open-Hopf-link characters.

use crate::algebra::{Algebra, AlgebraElement, TensorElement};
use crate::reps::{grothendieck_class, Rep, SimpleLabel};
use crate::scalars::CycScalar;
use crate::traces::BoundTrace;
use crate::{Error, Result};

/// The scalar by which the ribbon twist (the action of `v^{-1}`) acts on a
/// simple module.
pub fn twist_scalar(rep: &Rep, alg: &Algebra) -> Result<CycScalar> {
    let m = rep.act(&alg.ribbon_inv())?;
    let c = m[(0, 0)].clone();
    let expect = crate::linalg::Matrix::identity(rep.dim).scale(&c);
    if m != expect {
        return Err(Error::NotScalarAction);
    }
    Ok(c)
}

/// Invariant of the `n`-framed unknot coloured by the trace's module:
/// the trace of `v^{-n}`.
pub fn unknot_invariant(trace: &BoundTrace, n: i64) -> Result<CycScalar> {
    let v = trace.alg.ribbon_power(-n);
    trace.eval(&trace.rep.act(&v)?)
}

/// Open-Hopf-link character of a simple module.
pub fn simple_character(alg: &Algebra, label: SimpleLabel) -> AlgebraElement {
    match label {
        SimpleLabel::X0(eps) => alg.chi_x0(eps),
        SimpleLabel::X1(eps) => alg.chi_x1(eps),
    }
}

/// Twist eigenvalue of a simple module, from the label.
pub fn simple_twist(alg: &Algebra, label: SimpleLabel) -> CycScalar {
    match label {
        SimpleLabel::X0(_) => CycScalar::one(),
        SimpleLabel::X1(eps) => alg.beta().pow(-1).unwrap().scale_int(eps),
    }
}

/// Invariant of the Hopf link with the cut component carried by the trace's
/// module (framing `a`) and the other component coloured by a simple module
/// (framing `b`): `twist(U)^b * trace(v^{-a} chi_U)`.
pub fn hopf_invariant(trace: &BoundTrace, a: i64, u: SimpleLabel, b: i64) -> Result<CycScalar> {
    let alg = trace.alg;
    let z = &alg.ribbon_power(-a) * &simple_character(alg, u);
    let tr = trace.eval(&trace.rep.act(&z)?)?;
    Ok(&simple_twist(alg, u).pow(b)? * &tr)
}

/// Hopf link against an arbitrary second colour, expanded through its
/// Grothendieck class: the invariant only depends on the class of the
/// non-cut knot colour.
pub fn hopf_invariant_general(trace: &BoundTrace, a: i64, u: &Rep, b: i64) -> Result<CycScalar> {
    let class = grothendieck_class(trace.alg, u)?;
    let mut out = CycScalar::zero();
    for (mult, label) in class.into_iter().zip(SimpleLabel::all()) {
        if mult == 0 {
            continue;
        }
        let v = hopf_invariant(trace, a, label, b)?;
        out += &v.scale_int(mult as i64);
    }
    Ok(out)
}

/// The central element whose action, closed up by the trace, gives the
/// `(2, m)`-torus knot. `m` must be odd; positive `m` uses the braiding,
/// negative `m` its inverse.
pub struct XiElement {
    pub m: i64,
    pub value: AlgebraElement,
}

pub fn xi_element(alg: &Algebra, m: i64) -> Result<XiElement> {
    if m.rem_euclid(2) == 0 {
        return Err(Error::EvenM(m));
    }
    let n = (m.abs() - 1) / 2;
    // W = p^L (g^{-1} (x) 1): shared tail of both contractions
    let g_inv = alg.pivot(); // g has order two
    let w = &alg.p_l() * &TensorElement::outer(&g_inv, &alg.unit());
    let value = if m > 0 {
        // xi_n^+ = qL_2 R_1 (M^n)_1 pL_1 g^{-1} qL_1 R_2 (M^n)_2 pL_2
        let mut a = alg.r_matrix();
        let mono = alg.monodromy();
        for _ in 0..n {
            a = &a * &mono;
        }
        let s = &(&alg.q_l().swap() * &a) * &w;
        s.multiply_legs()
    } else {
        // xi_n^- = qL_2 (Mbar^n)_2 Rbar_2 pL_1 g^{-1} qL_1 (Mbar^n)_1 Rbar_1 pL_2
        let mut b = TensorElement::unit(alg.id(), 2);
        let mono_inv = alg.monodromy_inv();
        for _ in 0..n {
            b = &b * &mono_inv;
        }
        b = &b * &alg.r_matrix_inv();
        let s = &(&alg.q_l().swap() * &b.swap()) * &w;
        s.multiply_legs()
    };
    if !alg.is_central(&value) {
        return Err(Error::NotCentral);
    }
    Ok(XiElement { m, value })
}

/// Invariant of the `(2, m)`-torus knot coloured by the trace's module.
pub fn torus_invariant(trace: &BoundTrace, m: i64) -> Result<CycScalar> {
    let xi = xi_element(trace.alg, m)?;
    trace.eval(&trace.rep.act(&xi.value)?)
}

/// CLI-facing description of one link evaluation.
#[derive(Clone, Debug)]
pub enum LinkSpec {
    FramedUnknot { n: i64 },
    TorusKnot { m: i64 },
    HopfLink { a: i64, u: SimpleLabel, b: i64 },
}

impl LinkSpec {
    pub fn evaluate(&self, trace: &BoundTrace) -> Result<CycScalar> {
        match self {
            LinkSpec::FramedUnknot { n } => unknot_invariant(trace, *n),
            LinkSpec::TorusKnot { m } => torus_invariant(trace, *m),
            LinkSpec::HopfLink { a, u, b } => hopf_invariant(trace, *a, *u, *b),
        }
    }
}
