//! Distinguished elements of `Q(N, beta)`: idempotents, coassociator,
//! R-matrix, monodromy, ribbon element, pivot, canonical elements of the
//! (co)integral calculus, and the central characters.

use super::{Algebra, AlgebraElement, BasisWord, TensorElement};
use crate::scalars::CycScalar;

impl Algebra {
    /// 2^e as an exact scalar, for any integer e.
    pub fn two_pow(&self, e: i64) -> CycScalar {
        CycScalar::from_int(2).pow(e).expect("2 is invertible")
    }

    /// Central idempotent `e0 = (1 + K^2)/2`.
    pub fn e0(&self) -> AlgebraElement {
        let half = CycScalar::from_ratio(1, 2);
        &self.unit().scale(&half) + &self.k_pow(2).scale(&half)
    }

    /// Central idempotent `e1 = (1 - K^2)/2`.
    pub fn e1(&self) -> AlgebraElement {
        let half = CycScalar::from_ratio(1, 2);
        &self.unit().scale(&half) - &self.k_pow(2).scale(&half)
    }

    /// Primitive idempotent `e0^{eps} = (1 + eps K) e0 / 2` cutting out the
    /// projective cover of the one-dimensional module with `K = eps`.
    pub fn e0_sign(&self, eps: i64) -> AlgebraElement {
        let half = CycScalar::from_ratio(1, 2);
        let inner = &self.unit().scale(&half) + &self.k().scale(&half.scale_int(eps.signum()));
        &inner * &self.e0()
    }

    /// Central idempotent `e1^{eps} = e1 (1 -/+ i K prod_j (1 - 2 f_j^+ f_j^-)) / 2`
    /// cutting out the `2^N`-fold sum of the simple projective `X_1^{eps}`.
    pub fn e1_sign(&self, eps: i64) -> AlgebraElement {
        let mut prod = self.unit();
        for j in 1..=self.n() {
            let two_ff = (&self.f(j, 1) * &self.f(j, -1)).scale(&CycScalar::from_int(2));
            prod = &prod * &(&self.unit() - &two_ff);
        }
        let ik = self.k().scale(&CycScalar::i().scale_int(eps.signum()));
        let inner = &self.unit() - &(&ik * &prod);
        (&self.e1() * &inner).scale(&CycScalar::from_ratio(1, 2))
    }

    /// `omega_{\pm} = (e0 \pm i e1) K`.
    pub fn omega(&self, sign: i64) -> AlgebraElement {
        let inner = &self.e0() + &self.e1().scale(&CycScalar::i().scale_int(sign.signum()));
        &inner * &self.k()
    }

    /// `beta_{\pm} = e0 + beta^2 (\pm i K)^N e1`.
    pub fn beta_pm(&self, sign: i64) -> AlgebraElement {
        let n = self.n() as i64;
        let c =
            &self.beta().pow(2).unwrap() * &CycScalar::i().scale_int(sign.signum()).pow(n).unwrap();
        &self.e0() + &(&self.k_pow(n) * &self.e1()).scale(&c)
    }

    /// Evaluation element `alpha = 1`.
    pub fn alpha_elt(&self) -> AlgebraElement {
        self.unit()
    }

    /// Coevaluation element `beta = beta_+`.
    pub fn beta_elt(&self) -> AlgebraElement {
        self.beta_pm(1)
    }

    /// The coassociator (sign = +1) or its inverse (sign = -1):
    /// `1x1x1 + e1 (x) e1 (x) { e0 (K^N - 1) + e1 (beta_{\pm} - 1) }`.
    pub fn coassociator(&self, sign: i64) -> TensorElement {
        let n = self.n() as i64;
        let third = &(&self.e0() * &(&self.k_pow(n) - &self.unit()))
            + &(&self.e1() * &(&self.beta_pm(sign) - &self.unit()));
        &TensorElement::unit(self.id(), 3) + &TensorElement::outer3(&self.e1(), &self.e1(), &third)
    }

    /// R-matrix of the quasi-triangular structure.
    pub fn r_matrix(&self) -> TensorElement {
        &self.r_prefactor(1) * &self.r_fermion_factor(-2)
    }

    /// Multiplicative inverse of the R-matrix.
    pub fn r_matrix_inv(&self) -> TensorElement {
        &self.r_fermion_factor(2) * &self.r_prefactor(-1)
    }

    /// `sum_{n,m} beta^{(sign) n m} rho_{n,m} e_n (x) e_m` with
    /// `rho_{n,m} = (1/2) sum_{k,l} (-1)^{kl} i^{-kn+lm} K^k (x) K^l`.
    fn r_prefactor(&self, sign: i64) -> TensorElement {
        let mut out = TensorElement::zero(self.id(), 2);
        let half = CycScalar::from_ratio(1, 2);
        for n in 0..2i64 {
            for m in 0..2i64 {
                let e_n = if n == 0 { self.e0() } else { self.e1() };
                let e_m = if m == 0 { self.e0() } else { self.e1() };
                let beta_pow = self.beta().pow(sign * n * m).unwrap();
                let mut rho = TensorElement::zero(self.id(), 2);
                for k in 0..2i64 {
                    for l in 0..2i64 {
                        let mut c = &half * &CycScalar::i().pow(-k * n + l * m).unwrap();
                        if k * l % 2 == 1 {
                            c = -&c;
                        }
                        rho = &rho
                            + &TensorElement::pure(
                                self.id(),
                                vec![BasisWord::k_power(k as u8), BasisWord::k_power(l as u8)],
                                c,
                            );
                    }
                }
                out = &out + &(&rho * &TensorElement::outer(&e_n, &e_m)).scale(&beta_pow);
            }
        }
        out
    }

    /// `prod_j (1 (x) 1 + coeff * f_j^- omega_- (x) f_j^+)`.
    fn r_fermion_factor(&self, coeff: i64) -> TensorElement {
        let mut out = TensorElement::unit(self.id(), 2);
        let c = CycScalar::from_int(coeff);
        for j in 1..=self.n() {
            let left = &self.f(j, -1) * &self.omega(-1);
            let factor = &TensorElement::unit(self.id(), 2)
                + &TensorElement::outer(&left, &self.f(j, 1)).scale(&c);
            out = &out * &factor;
        }
        out
    }

    /// Double braiding `M = R_{21} R`.
    pub fn monodromy(&self) -> TensorElement {
        let r = self.r_matrix();
        &r.swap() * &r
    }

    pub fn monodromy_inv(&self) -> TensorElement {
        let rinv = self.r_matrix_inv();
        &rinv * &rinv.swap()
    }

    /// Monodromy as an explicit sum over basis labels `(a, b, c, d)`; agrees
    /// with `monodromy()` and is the cheaper form for contractions.
    pub fn monodromy_basis_form(&self) -> TensorElement {
        let n = self.n();
        let mut out = TensorElement::zero(self.id(), 2);
        let beta2 = self.beta().pow(2).unwrap();
        for a in 0..2u8 {
            for b in 0..2u8 {
                for c_mask in 0..(1u32 << n) {
                    for d_mask in 0..(1u32 << n) {
                        let csz = c_mask.count_ones() as i64;
                        let dsz = d_mask.count_ones() as i64;
                        // f_I = K^a e_b prod_k (f_k^-)^{d_k} (f_k^+)^{c_k}
                        let mut f_i =
                            &self.k_pow(a as i64) * &(if b == 0 { self.e0() } else { self.e1() });
                        for k in 1..=n {
                            if d_mask >> (k - 1) & 1 == 1 {
                                f_i = &f_i * &self.f(k, -1);
                            }
                            if c_mask >> (k - 1) & 1 == 1 {
                                f_i = &f_i * &self.f(k, 1);
                            }
                        }
                        if f_i.is_zero() {
                            continue;
                        }
                        // g_I = (-beta^2)^{ab} 2^{|c|+|d|} (-1)^{|c|+b|d|}
                        //        K^b e_a prod_k (f_k^+ w_-)^{d_k} (f_k^- w_-)^{c_k}
                        let mut coeff = self.two_pow(csz + dsz);
                        if (a & b) == 1 {
                            coeff = &coeff * &(-&beta2);
                        }
                        if (csz + (b as i64) * dsz) % 2 == 1 {
                            coeff = -&coeff;
                        }
                        let mut g_i =
                            &self.k_pow(b as i64) * &(if a == 0 { self.e0() } else { self.e1() });
                        let om = self.omega(-1);
                        for k in 1..=n {
                            if d_mask >> (k - 1) & 1 == 1 {
                                g_i = &g_i * &(&self.f(k, 1) * &om);
                            }
                            if c_mask >> (k - 1) & 1 == 1 {
                                g_i = &g_i * &(&self.f(k, -1) * &om);
                            }
                        }
                        out = &out + &TensorElement::outer(&g_i, &f_i).scale(&coeff);
                    }
                }
            }
        }
        out
    }

    /// `v^{m}` for any integer m, via the closed form
    /// `v^{\pm m} = (e0 + (-beta^{\pm1} i K)^m e1) prod_j (1 -/+ 2 (m e0 \pm [m odd] e1) f_j^+ f_j^-)`
    /// valid for m >= 0.
    pub fn ribbon_power(&self, power: i64) -> AlgebraElement {
        let (sign, m) = if power >= 0 { (1, power) } else { (-1, -power) };
        // (-beta^{sign} i K)^m = (-1)^m beta^{sign*m} i^m K^m
        let mut c = &self.beta().pow(sign * m).unwrap() * &CycScalar::i().pow(m).unwrap();
        if m % 2 == 1 {
            c = -&c;
        }
        let head = &self.e0() + &(&self.k_pow(m) * &self.e1()).scale(&c);
        let m_odd = m % 2;
        let inner = &self.e0().scale(&CycScalar::from_int(m))
            + &self.e1().scale(&CycScalar::from_int(sign * m_odd));
        let mut out = head;
        for j in 1..=self.n() {
            let ff = &self.f(j, 1) * &self.f(j, -1);
            let term = (&inner * &ff).scale(&CycScalar::from_int(-2 * sign));
            out = &out * &(&self.unit() + &term);
        }
        out
    }

    /// Ribbon element `v` and inverse `v^{-1}`.
    pub fn ribbon(&self) -> AlgebraElement {
        self.ribbon_power(1)
    }

    pub fn ribbon_inv(&self) -> AlgebraElement {
        self.ribbon_power(-1)
    }

    /// `v^{m}` by iterated multiplication of `v^{\pm 1}`; cross-check route.
    pub fn ribbon_power_by_products(&self, power: i64) -> AlgebraElement {
        let base = if power >= 0 {
            self.ribbon()
        } else {
            self.ribbon_inv()
        };
        let mut out = self.unit();
        for _ in 0..power.abs() {
            out = &out * &base;
        }
        out
    }

    /// Pivot `g = (e0 + (-i)^{N+1} e1 K^N) K`; satisfies `g^2 = 1`.
    pub fn pivot(&self) -> AlgebraElement {
        let n = self.n() as i64;
        let c = CycScalar::i().scale_int(-1).pow(n + 1).unwrap();
        let inner = &self.e0() + &(&self.e1() * &self.k_pow(n)).scale(&c);
        &inner * &self.k()
    }

    /// `TOP = prod_j f_j^+ f_j^-`, the socle direction of the even block.
    pub fn top(&self) -> AlgebraElement {
        let ones = (1u32 << self.n()) - 1;
        AlgebraElement::from_word(
            self.id(),
            BasisWord {
                k: 0,
                plus: ones,
                minus: ones,
            },
            CycScalar::one(),
        )
    }

    pub fn e0_top(&self) -> AlgebraElement {
        &self.e0() * &self.top()
    }

    /// Two-sided integral `sum_m K^m TOP` (unnormalised).
    pub fn integral(&self) -> AlgebraElement {
        let mut out = self.zero();
        for m in 0..4 {
            out = &out + &(&self.k_pow(m) * &self.top());
        }
        out
    }

    /// The integral normalised against the coend cointegral:
    /// `2^{N+1} beta^2 e0^+ TOP`; its image under the canonical modified
    /// trace on the projective cover of the unit is 1.
    pub fn integral_phi1(&self) -> AlgebraElement {
        let c = &self.two_pow(self.n() as i64 + 1) * &self.beta().pow(2).unwrap();
        (&self.e0_sign(1) * &self.top()).scale(&c)
    }

    // ---- canonical elements of the (co)integral calculus ----

    /// `q^R = 1x1 + e1 (x) e1 (beta - 1)` (closed form).
    pub fn q_r(&self) -> TensorElement {
        let tail = &self.e1() * &(&self.beta_elt() - &self.unit());
        &TensorElement::unit(self.id(), 2) + &TensorElement::outer(&self.e1(), &tail)
    }

    /// `p^R = 1x1 + e0 (x) e1 (beta - 1)` (closed form).
    pub fn p_r(&self) -> TensorElement {
        let tail = &self.e1() * &(&self.beta_elt() - &self.unit());
        &TensorElement::unit(self.id(), 2) + &TensorElement::outer(&self.e0(), &tail)
    }

    /// `q^L = 1x1 + e1 (x) { e0 (K^N - 1) + e1 (beta - 1) }` (closed form).
    pub fn q_l(&self) -> TensorElement {
        let n = self.n() as i64;
        let tail = &(&self.e0() * &(&self.k_pow(n) - &self.unit()))
            + &(&self.e1() * &(&self.beta_elt() - &self.unit()));
        &TensorElement::unit(self.id(), 2) + &TensorElement::outer(&self.e1(), &tail)
    }

    /// `p^L = beta_- (x) 1 + e1 beta_- (x) { e0 (K^N - 1) + e1 (beta_- - 1) }` (closed form).
    pub fn p_l(&self) -> TensorElement {
        let n = self.n() as i64;
        let bm = self.beta_pm(-1);
        let tail = &(&self.e0() * &(&self.k_pow(n) - &self.unit()))
            + &(&self.e1() * &(&bm - &self.unit()));
        &TensorElement::outer(&bm, &self.unit()) + &TensorElement::outer(&(&self.e1() * &bm), &tail)
    }

    /// `q^R` from its defining contraction of the inverse coassociator:
    /// `sum Phibar_1 (x) S^{-1}(alpha Phibar_3) Phibar_2`.
    pub fn q_r_from_definition(&self) -> TensorElement {
        let phibar = self.coassociator(-1);
        let mut out = TensorElement::zero(self.id(), 2);
        for (legs, c) in phibar.terms() {
            let w3 = AlgebraElement::from_word(self.id(), legs[2], CycScalar::one());
            let w2 = AlgebraElement::from_word(self.id(), legs[1], CycScalar::one());
            let right = &self.antipode_inv(&(&self.alpha_elt() * &w3)) * &w2;
            let left = AlgebraElement::from_word(self.id(), legs[0], c.clone());
            out = &out + &TensorElement::outer(&left, &right);
        }
        out
    }

    /// `p^R = sum Phi_1 (x) Phi_2 beta S(Phi_3)`.
    pub fn p_r_from_definition(&self) -> TensorElement {
        let phi = self.coassociator(1);
        let mut out = TensorElement::zero(self.id(), 2);
        for (legs, c) in phi.terms() {
            let w3 = AlgebraElement::from_word(self.id(), legs[2], CycScalar::one());
            let w2 = AlgebraElement::from_word(self.id(), legs[1], CycScalar::one());
            let right = &(&w2 * &self.beta_elt()) * &self.antipode(&w3);
            let left = AlgebraElement::from_word(self.id(), legs[0], c.clone());
            out = &out + &TensorElement::outer(&left, &right);
        }
        out
    }

    /// `q^L = sum S(Phi_1) alpha Phi_2 (x) Phi_3`.
    pub fn q_l_from_definition(&self) -> TensorElement {
        let phi = self.coassociator(1);
        let mut out = TensorElement::zero(self.id(), 2);
        for (legs, c) in phi.terms() {
            let w1 = AlgebraElement::from_word(self.id(), legs[0], CycScalar::one());
            let w2 = AlgebraElement::from_word(self.id(), legs[1], CycScalar::one());
            let left = &(&self.antipode(&w1) * &self.alpha_elt()) * &w2;
            let right = AlgebraElement::from_word(self.id(), legs[2], c.clone());
            out = &out + &TensorElement::outer(&left, &right);
        }
        out
    }

    /// `p^L = sum Phibar_2 S^{-1}(Phibar_1 beta) (x) Phibar_3`.
    pub fn p_l_from_definition(&self) -> TensorElement {
        let phibar = self.coassociator(-1);
        let mut out = TensorElement::zero(self.id(), 2);
        for (legs, c) in phibar.terms() {
            let w1 = AlgebraElement::from_word(self.id(), legs[0], CycScalar::one());
            let w2 = AlgebraElement::from_word(self.id(), legs[1], CycScalar::one());
            let left = &w2 * &self.antipode_inv(&(&w1 * &self.beta_elt()));
            let right = AlgebraElement::from_word(self.id(), legs[2], c.clone());
            out = &out + &TensorElement::outer(&left, &right);
        }
        out
    }

    /// Drinfeld twist `f^{\pm 1} = e0 (x) 1 + e1 (x) e0 K^N + e1 beta_{-/+} (x) e1`.
    pub fn drinfeld_twist(&self, sign: i64) -> TensorElement {
        let n = self.n() as i64;
        let mid = &self.e0() * &self.k_pow(n);
        &(&TensorElement::outer(&self.e0(), &self.unit()) + &TensorElement::outer(&self.e1(), &mid))
            + &TensorElement::outer(&(&self.e1() * &self.beta_pm(-sign.signum())), &self.e1())
    }

    /// `U = f^{-1} (S x S)(q^R_{21})`.
    pub fn u_elt(&self) -> TensorElement {
        let q21 = self.q_r().swap();
        let s_both = q21.apply_leg(self, 0, super::LegMap::Antipode).apply_leg(
            self,
            1,
            super::LegMap::Antipode,
        );
        &self.drinfeld_twist(-1) * &s_both
    }

    /// `V = (S^{-1} x S^{-1})(f_{21} p^R_{21})`.
    pub fn v_elt(&self) -> TensorElement {
        let prod = &self.drinfeld_twist(1).swap() * &self.p_r().swap();
        prod.apply_leg(self, 0, super::LegMap::AntipodeInv)
            .apply_leg(self, 1, super::LegMap::AntipodeInv)
    }

    /// `U^{cop} = f (S^{-1} x S^{-1})(q^L_{21})`: the q-element of the
    /// co-opposite algebra, whose Drinfeld twist is `f^{-1}_{21}`.
    pub fn u_cop(&self) -> TensorElement {
        let s_both = self
            .q_l()
            .swap()
            .apply_leg(self, 0, super::LegMap::AntipodeInv)
            .apply_leg(self, 1, super::LegMap::AntipodeInv);
        &self.drinfeld_twist(1) * &s_both
    }

    /// `V^{cop} = (S x S)(f^{-1}_{21} p^L_{21})`: the p-element of the
    /// co-opposite algebra.
    pub fn v_cop(&self) -> TensorElement {
        let prod = &self.drinfeld_twist(-1).swap() * &self.p_l().swap();
        prod.apply_leg(self, 0, super::LegMap::Antipode)
            .apply_leg(self, 1, super::LegMap::Antipode)
    }

    // ---- central characters ----

    /// `phi_{X_0^{eps}} = eps 2^{N+1} beta^2 e0^{eps} TOP`.
    pub fn phi_x0(&self, eps: i64) -> AlgebraElement {
        let c = &self.two_pow(self.n() as i64 + 1) * &self.beta().pow(2).unwrap();
        (&self.e0_sign(eps) * &self.top()).scale(&c.scale_int(eps.signum()))
    }

    /// `phi_{X_1^{eps}} = eps 2^{N+1} e1^{eps}`.
    pub fn phi_x1(&self, eps: i64) -> AlgebraElement {
        self.e1_sign(eps)
            .scale(&self.two_pow(self.n() as i64 + 1).scale_int(eps.signum()))
    }

    /// `phi_{P_0^+} = 2^{2N-1} (phi_{X_0^+} + phi_{X_0^-}) = 2^{3N} beta^2 K e0 TOP`.
    pub fn phi_p0_plus(&self) -> AlgebraElement {
        let c = &self.two_pow(3 * self.n() as i64) * &self.beta().pow(2).unwrap();
        (&(&self.k() * &self.e0()) * &self.top()).scale(&c)
    }

    /// Open-Hopf-link character `chi_{X_0^{eps}} = e1 + eps e0`.
    pub fn chi_x0(&self, eps: i64) -> AlgebraElement {
        &self.e1() + &self.e0().scale(&CycScalar::from_int(eps.signum()))
    }

    /// `chi_{X_1^{eps}} = eps beta^2 4^N e0 K TOP + 2^N (e1^+ - e1^-)`.
    pub fn chi_x1(&self, eps: i64) -> AlgebraElement {
        let c = &self.beta().pow(2).unwrap() * &self.two_pow(2 * self.n() as i64);
        let even = (&(&self.e0() * &self.k()) * &self.top()).scale(&c.scale_int(eps.signum()));
        let odd = (&self.e1_sign(1) - &self.e1_sign(-1)).scale(&self.two_pow(self.n() as i64));
        &even + &odd
    }

    /// `chi` for the projective cover class: `2^{2N} e1`.
    pub fn chi_p0(&self, _eps: i64) -> AlgebraElement {
        self.e1().scale(&self.two_pow(2 * self.n() as i64))
    }

    /// `e0 prod_{j in t} f_j^+ f_j^-`: the even central words used as
    /// coupon labels (t is a bit mask over fermion indices).
    pub fn alpha_t(&self, t: u32) -> AlgebraElement {
        let mut out = self.e0();
        for j in 1..=self.n() {
            if t >> (j - 1) & 1 == 1 {
                out = &out * &(&self.f(j, 1) * &self.f(j, -1));
            }
        }
        out
    }

    /// Basis of the non-projective part of the centre:
    /// `e0 prod_j (f_j^+)^{s_j} (f_j^-)^{t_j}` with `|s| + |t|` even.
    pub fn central_lambda_basis(&self) -> Vec<AlgebraElement> {
        let n = self.n();
        let mut out = Vec::new();
        for s in 0..(1u32 << n) {
            for t in 0..(1u32 << n) {
                if (s.count_ones() + t.count_ones()) % 2 != 0 {
                    continue;
                }
                let w = BasisWord {
                    k: 0,
                    plus: s,
                    minus: t,
                };
                out.push(&self.e0() * &AlgebraElement::from_word(self.id(), w, CycScalar::one()));
            }
        }
        out
    }
}
