//! The distinguished quasi-Hopf subalgebra of `Q(2, beta)` generated by `K`
//! and the first fermion pair, together with its symmetrised cointegrals.
//!
//! The coassociator, evaluation elements and pivot of the ambient algebra
//! all lie in this subalgebra, so it is quasi-Hopf in its own right; it is
//! pivotal and unimodular, but admits no ribbon structure (its left and
//! right modified traces are not proportional).

use super::forms::Side;
use super::{Algebra, AlgebraElement, BasisWord, LinearForm};
use crate::scalars::CycScalar;
use crate::{Error, Result};

/// The 16-dimensional subalgebra `A` spanned by `K^m (f_1^+)^a (f_1^-)^b`
/// inside the ambient `Q(2, beta)`.
pub struct SubalgebraA<'a> {
    ambient: &'a Algebra,
    basis: Vec<BasisWord>,
}

impl<'a> SubalgebraA<'a> {
    pub fn new(ambient: &'a Algebra) -> Result<Self> {
        if ambient.n() != 2 {
            return Err(Error::Unsupported(
                "the distinguished subalgebra lives inside Q(2, beta)".into(),
            ));
        }
        let mut basis = Vec::with_capacity(16);
        for k in 0..4u8 {
            for plus in 0..2u32 {
                for minus in 0..2u32 {
                    basis.push(BasisWord { k, plus, minus });
                }
            }
        }
        Ok(SubalgebraA { ambient, basis })
    }

    pub fn ambient(&self) -> &Algebra {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisWord] {
        &self.basis
    }

    /// Supported only on words in `K` and the first fermion pair.
    pub fn contains_word(&self, w: &BasisWord) -> bool {
        w.plus | w.minus <= 1
    }

    pub fn contains(&self, x: &AlgebraElement) -> bool {
        x.terms().all(|(w, _)| self.contains_word(w))
    }

    /// Closure checks: products, coproducts and antipodes of basis words stay
    /// inside, and the ambient structure constants lie inside as well.
    pub fn is_closed(&self) -> bool {
        let a = self.ambient;
        for w in &self.basis {
            let x = AlgebraElement::from_word(a.id(), *w, CycScalar::one());
            if !self.contains(&a.antipode(&x)) {
                return false;
            }
            if !a
                .coproduct(&x)
                .terms()
                .all(|(legs, _)| legs.iter().all(|l| self.contains_word(l)))
            {
                return false;
            }
            for v in &self.basis {
                let y = AlgebraElement::from_word(a.id(), *v, CycScalar::one());
                if !self.contains(&(&x * &y)) {
                    return false;
                }
            }
        }
        let structural = [a.alpha_elt(), a.beta_elt(), a.pivot()];
        if !structural.iter().all(|x| self.contains(x)) {
            return false;
        }
        a.coassociator(1)
            .terms()
            .all(|(legs, _)| legs.iter().all(|l| self.contains_word(l)))
    }

    /// Odd central idempotents of the subalgebra, cutting out two copies of
    /// each two-dimensional simple projective.
    pub fn e1_sign(&self, eps: i64) -> AlgebraElement {
        let a = self.ambient;
        let ff2 = (&a.f(1, 1) * &a.f(1, -1)).scale(&CycScalar::from_int(2));
        let ik = a.k().scale(&CycScalar::i().scale_int(eps.signum()));
        let inner = &a.unit() - &(&ik * &(&a.unit() - &ff2));
        (&a.e1() * &inner).scale(&CycScalar::from_ratio(1, 2))
    }

    /// Symmetrised cointegral of the subalgebra (closed form): supported on
    /// `K^m f_1^+ f_1^-` with value `delta_{m,1} -/+ i beta^2 delta_{m,3}`
    /// for the right resp. left side.
    pub fn symmetrised_cointegral(&self, side: Side) -> LinearForm {
        let a = self.ambient;
        let i_beta2 = &CycScalar::i() * &a.beta().pow(2).unwrap();
        let sign = match side {
            Side::Right => -1i64,
            Side::Left => 1,
        };
        LinearForm::from_fn(a, |w| {
            if w.plus == 1 && w.minus == 1 {
                match w.k {
                    1 => CycScalar::one(),
                    3 => i_beta2.scale_int(sign),
                    _ => CycScalar::zero(),
                }
            } else {
                CycScalar::zero()
            }
        })
    }

    /// Solve the symmetrised-cointegral equation restricted to the
    /// subalgebra; the solution space must be one-dimensional per side.
    /// Normalised so the value on `K f_1^+ f_1^-` is 1.
    pub fn solve_symmetrised_cointegral(&self, side: Side) -> Result<LinearForm> {
        let a = self.ambient;
        let col_of: Vec<usize> = (0..self.basis.len()).collect();
        let sol =
            a.solve_symmetrised_cointegral_on(side, &self.basis, &col_of, self.basis.len())?;
        let probe = BasisWord {
            k: 1,
            plus: 1,
            minus: 1,
        };
        let lead = sol.eval_word(a, &probe);
        if lead.is_zero() {
            return Err(Error::Unsupported(
                "subalgebra cointegral vanishes on the normalisation probe".into(),
            ));
        }
        Ok(sol.scale(&lead.inv()?))
    }

    /// The defining equation of the symmetrised cointegral, restricted to
    /// subalgebra inputs.
    pub fn symmetrised_equation_holds(&self, side: Side, form: &LinearForm) -> bool {
        let a = self.ambient;
        let (q, p) = match side {
            Side::Right => (a.q_r(), a.p_r()),
            Side::Left => (a.q_l(), a.p_l()),
        };
        let g = a.pivot();
        for h in &self.basis {
            let delta = a.coproduct(&AlgebraElement::from_word(a.id(), *h, CycScalar::one()));
            let x = &(&q * &delta) * &p;
            let contracted = match side {
                Side::Right => x.contract_form_leg(0, |w| form.eval_word(a, w)),
                Side::Left => x.contract_form_leg(1, |w| form.eval_word(a, w)),
            };
            if contracted.into_algebra() != g.scale(&form.eval_word(a, h)) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BasisWord;

    #[test]
    fn closure_and_cointegral_values() {
        for k in [0u8, 2, 4, 6] {
            let a = Algebra::new(2, k).unwrap();
            let sub = SubalgebraA::new(&a).unwrap();
            assert!(sub.is_closed());
            let lam_r = sub.symmetrised_cointegral(Side::Right);
            let w = |m: u8| BasisWord {
                k: m,
                plus: 1,
                minus: 1,
            };
            assert_eq!(lam_r.eval_word(&a, &w(1)), CycScalar::one());
            let i_beta2 = &CycScalar::i() * &a.beta().pow(2).unwrap();
            assert_eq!(lam_r.eval_word(&a, &w(3)), -&i_beta2);
            assert!(lam_r.eval_word(&a, &w(0)).is_zero());
            let lam_l = sub.symmetrised_cointegral(Side::Left);
            assert_eq!(lam_l.eval_word(&a, &w(3)), i_beta2);
            // the solver reproduces both, and the defining equations hold
            for side in [Side::Right, Side::Left] {
                let solved = sub.solve_symmetrised_cointegral(side).unwrap();
                let closed = sub.symmetrised_cointegral(side);
                assert!(solved == closed);
                assert!(sub.symmetrised_equation_holds(side, &closed));
            }
            // the even primitive idempotent pairs the top word to (1 - i b^2)/4
            let e0p_top = &a.e0_sign(1) * &(&a.f(1, 1) * &a.f(1, -1));
            let want = (&CycScalar::one() - &i_beta2).scale_int(1) * CycScalar::from_ratio(1, 4);
            assert_eq!(lam_r.eval(&a, &e0p_top), want);
        }
    }

    #[test]
    fn rejects_wrong_rank() {
        let a = Algebra::new(1, 1).unwrap();
        assert!(SubalgebraA::new(&a).is_err());
    }
}
