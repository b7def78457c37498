//! The symplectic-fermion quasi-Hopf algebras `Q(N, beta)`.
//!
//! As an algebra, `Q(N, beta)` is generated by an order-4 group-like `K` and
//! fermions `f_j^+`, `f_j^-` (j = 1..N) subject to
//!
//! ```text
//! {f_j^e, K} = 0,   {f_i^+, f_j^-} = delta_ij * e1,   {f_i^e, f_j^e} = 0,   K^4 = 1,
//! ```
//!
//! where `e1 = (1 - K^2)/2`. Elements are stored as sparse linear
//! combinations of the normal-ordered basis words
//! `K^m  f_1^+{s_1} f_1^-{t_1} ... f_N^+{s_N} f_N^-{t_N}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::Matrix;
use crate::scalars::{make_beta, BetaChoice, CycScalar};
use crate::{Error, Result};

mod axioms;
mod elements;
mod forms;
mod subalgebra;
mod tensor;

pub use axioms::{AxiomCheck, AxiomReport};
pub use forms::{LinearForm, Side};
pub use subalgebra::SubalgebraA;
pub use tensor::{LegMap, TensorElement};

/// Identifies which algebra an element belongs to.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AlgebraId {
    pub n: usize,
    pub beta_exp: u8,
}

/// A normal-ordered basis word `K^k * prod_j (f_j^+)^{s_j} (f_j^-)^{t_j}`.
///
/// `plus` and `minus` are bit vectors over the fermion index j (bit 0 = j=1).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BasisWord {
    pub k: u8,
    pub plus: u32,
    pub minus: u32,
}

impl BasisWord {
    pub fn unit() -> Self {
        BasisWord {
            k: 0,
            plus: 0,
            minus: 0,
        }
    }

    pub fn k_power(k: u8) -> Self {
        BasisWord {
            k: k % 4,
            plus: 0,
            minus: 0,
        }
    }

    pub fn fermion_count(&self) -> u32 {
        self.plus.count_ones() + self.minus.count_ones()
    }

    pub fn is_fermion_free(&self) -> bool {
        self.plus == 0 && self.minus == 0
    }

    /// Generators in normal order: per index j ascending, `f_j^+` before `f_j^-`.
    fn gens(&self) -> Vec<Gen> {
        let mut out = Vec::with_capacity(self.fermion_count() as usize);
        let max = 32 - (self.plus | self.minus).leading_zeros();
        for j in 0..max {
            if self.plus >> j & 1 == 1 {
                out.push(Gen { j, minus: false });
            }
            if self.minus >> j & 1 == 1 {
                out.push(Gen { j, minus: true });
            }
        }
        out
    }

    fn from_gens(k: u8, gens: &[Gen]) -> Self {
        let mut w = BasisWord {
            k: k % 4,
            plus: 0,
            minus: 0,
        };
        for g in gens {
            if g.minus {
                w.minus |= 1 << g.j;
            } else {
                w.plus |= 1 << g.j;
            }
        }
        w
    }

    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        match self.k {
            0 => {}
            1 => parts.push("K".to_string()),
            k => parts.push(format!("K^{k}")),
        }
        for g in self.gens() {
            parts.push(format!("f{}{}", g.j + 1, if g.minus { "-" } else { "+" }));
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Gen {
    j: u32,
    minus: bool,
}

/// Multiply two normal-ordered words; the result is a short linear
/// combination of normal-ordered words with dyadic coefficients.
///
/// Sign bookkeeping: moving `K^m` from the right factor across the left
/// factor's fermions gives `(-1)^{m * #fermions}`; each fermion transposition
/// gives `-1`; an anticommutator `{f_j^+, f_j^-}` emits the central idempotent
/// `e1 = (1 - K^2)/2`, which is expanded eagerly.
pub fn word_mul(a: &BasisWord, b: &BasisWord) -> Vec<(BasisWord, CycScalar)> {
    let mut sign = if (b.k & 1 == 1) && (a.fermion_count() & 1 == 1) {
        -1i32
    } else {
        1
    };
    let k = (a.k + b.k) % 4;

    // Fast path: disjoint fermion supports never branch.
    let mut gens = a.gens();
    gens.extend(b.gens());

    // Rewriting stack: (gens, pending e1 factors, sign).
    let mut out: Vec<(BasisWord, CycScalar)> = Vec::new();
    let mut stack: Vec<(Vec<Gen>, bool, i32)> = Vec::new();
    stack.push((std::mem::take(&mut gens), false, std::mem::take(&mut sign)));

    'outer: while let Some((word, has_e1, sgn)) = stack.pop() {
        for i in 1..word.len() {
            let (x, y) = (word[i - 1], word[i]);
            if x == y {
                continue 'outer; // squares to zero
            }
            if x > y {
                // swap, and branch on the same-index anticommutator
                let mut swapped = word.clone();
                swapped.swap(i - 1, i);
                stack.push((swapped, has_e1, -sgn));
                if x.j == y.j {
                    let mut shorter = word.clone();
                    shorter.drain(i - 1..=i);
                    stack.push((shorter, true, sgn));
                }
                continue 'outer;
            }
        }
        // normal ordered
        let w = BasisWord::from_gens(k, &word);
        if has_e1 {
            // e1 = (1 - K^2)/2
            let half = CycScalar::from_ratio(sgn as i64, 2);
            push_term(&mut out, w, half.clone());
            let mut w2 = w;
            w2.k = (w2.k + 2) % 4;
            push_term(&mut out, w2, -&half);
        } else {
            push_term(&mut out, w, CycScalar::from_int(sgn as i64));
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

fn push_term(out: &mut Vec<(BasisWord, CycScalar)>, w: BasisWord, c: CycScalar) {
    if let Some((_, acc)) = out.iter_mut().find(|(ow, _)| *ow == w) {
        *acc += &c;
    } else {
        out.push((w, c));
    }
}

/// Sparse linear combination of basis words of one algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    pub id: AlgebraId,
    terms: BTreeMap<BasisWord, CycScalar>,
}

impl AlgebraElement {
    pub fn zero(id: AlgebraId) -> Self {
        AlgebraElement {
            id,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_word(id: AlgebraId, w: BasisWord, c: CycScalar) -> Self {
        let mut e = Self::zero(id);
        e.add_term(w, c);
        e
    }

    pub fn from_terms(
        id: AlgebraId,
        terms: impl IntoIterator<Item = (BasisWord, CycScalar)>,
    ) -> Self {
        let mut e = Self::zero(id);
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn add_term(&mut self, w: BasisWord, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisWord, &CycScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &BasisWord) -> CycScalar {
        self.terms.get(w).cloned().unwrap_or_else(CycScalar::zero)
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.id);
        }
        let mut out = Self::zero(self.id);
        for (w, c) in &self.terms {
            out.terms.insert(*w, c * s);
        }
        out
    }

    /// Coefficient vector in the canonical basis enumeration of the algebra.
    pub fn to_dense(&self, alg: &Algebra) -> Vec<CycScalar> {
        assert_eq!(self.id, alg.id());
        let mut v = vec![CycScalar::zero(); alg.dim()];
        for (w, c) in &self.terms {
            v[alg.word_index(w)] = c.clone();
        }
        v
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(w, c)| serde_json::json!([w.render(), c.to_json()]))
            .collect();
        serde_json::Value::Array(terms)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({}) {}", c, w.render()))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::ops::Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.id, rhs.id, "algebra mismatch");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, c.clone());
        }
        out
    }
}

impl std::ops::Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.id, rhs.id, "algebra mismatch");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, -c);
        }
        out
    }
}

impl std::ops::Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&CycScalar::from_int(-1))
    }
}

impl std::ops::Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.id, rhs.id, "algebra mismatch");
        let mut out = AlgebraElement::zero(self.id);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                let c = ca * cb;
                for (w, branch) in word_mul(wa, wb) {
                    out.add_term(w, &branch * &c);
                }
            }
        }
        out
    }
}

/// The algebra `Q(N, beta)` with its quasi-Hopf structure maps.
///
/// Immutable after construction; generator images under the coproduct and
/// (inverse) antipode are precomputed so element-level maps are table-driven.
pub struct Algebra {
    id: AlgebraId,
    beta: CycScalar,
    delta_k: TensorElement,
    delta_f: Vec<[TensorElement; 2]>,
    s_k: AlgebraElement,
    s_f: Vec<[AlgebraElement; 2]>,
    sinv_k: AlgebraElement,
    sinv_f: Vec<[AlgebraElement; 2]>,
}

impl Algebra {
    pub fn new(n: usize, beta_exp: u8) -> Result<Self> {
        let choice = BetaChoice::new(n, beta_exp)?;
        let beta = make_beta(choice);
        let id = AlgebraId { n, beta_exp };

        // Temporary shell so the structure elements below can be built with
        // ordinary element arithmetic.
        let unit = AlgebraElement::from_word(id, BasisWord::unit(), CycScalar::one());
        let kw = |m: u8| AlgebraElement::from_word(id, BasisWord::k_power(m), CycScalar::one());
        let half = CycScalar::from_ratio(1, 2);
        let e0 = &kw(0).scale(&half) + &kw(2).scale(&half);
        let e1 = &kw(0).scale(&half) - &kw(2).scale(&half);
        let i_sc = CycScalar::i();
        let sign_n = if n.is_multiple_of(2) { 1 } else { -1 };

        // omega_{\pm} = (e0 \pm i e1) K
        let omega = |s: i64| -> AlgebraElement {
            let inner = &e0 + &e1.scale(&CycScalar::i().scale_int(s));
            &inner * &kw(1)
        };

        // Coproduct on generators.
        let dk = {
            let kk = TensorElement::pure(id, vec![BasisWord::k_power(1); 2], CycScalar::one());
            let e1k = &e1 * &kw(1);
            let corr = TensorElement::outer(&e1k, &e1k).scale(&CycScalar::from_int(1 + sign_n));
            &kk - &corr
        };
        let mut delta_f = Vec::with_capacity(n);
        let mut s_f = Vec::with_capacity(n);
        let mut sinv_f = Vec::with_capacity(n);
        for j in 0..n {
            let fp = AlgebraElement::from_word(
                id,
                BasisWord {
                    k: 0,
                    plus: 1 << j,
                    minus: 0,
                },
                CycScalar::one(),
            );
            let fm = AlgebraElement::from_word(
                id,
                BasisWord {
                    k: 0,
                    plus: 0,
                    minus: 1 << j,
                },
                CycScalar::one(),
            );
            let dp = &TensorElement::outer(&fp, &unit) + &TensorElement::outer(&omega(1), &fp);
            let dm = &TensorElement::outer(&fm, &unit) + &TensorElement::outer(&omega(-1), &fm);
            delta_f.push([dp, dm]);

            // S(f_j^{\pm}) = f_j^{\pm} (e0 \pm (-1)^N i e1) K
            let sp = &fp * &(&(&e0 + &e1.scale(&i_sc.scale_int(sign_n))) * &kw(1));
            let sm = &fm * &(&(&e0 - &e1.scale(&i_sc.scale_int(sign_n))) * &kw(1));
            s_f.push([sp, sm]);

            // S^{-1}(f_j^{\pm}) = omega_{\pm} f_j^{\pm}
            sinv_f.push([&omega(1) * &fp, &omega(-1) * &fm]);
        }
        // S(K) = S^{-1}(K) = (e0 + (-1)^N e1) K
        let sk = &(&e0 + &e1.scale(&CycScalar::from_int(sign_n))) * &kw(1);

        Ok(Algebra {
            id,
            beta,
            delta_k: dk,
            delta_f,
            s_k: sk.clone(),
            s_f,
            sinv_k: sk,
            sinv_f,
        })
    }

    pub fn id(&self) -> AlgebraId {
        self.id
    }

    pub fn n(&self) -> usize {
        self.id.n
    }

    pub fn beta(&self) -> &CycScalar {
        &self.beta
    }

    pub fn dim(&self) -> usize {
        4 << (2 * self.id.n)
    }

    /// Canonical enumeration: index = (k * 2^N + plus) * 2^N + minus.
    pub fn word_index(&self, w: &BasisWord) -> usize {
        let n = self.id.n;
        ((w.k as usize) << (2 * n)) | ((w.plus as usize) << n) | w.minus as usize
    }

    pub fn word_at(&self, idx: usize) -> BasisWord {
        let n = self.id.n;
        let mask = (1usize << n) - 1;
        BasisWord {
            k: (idx >> (2 * n)) as u8,
            plus: ((idx >> n) & mask) as u32,
            minus: (idx & mask) as u32,
        }
    }

    pub fn basis_words(&self) -> impl Iterator<Item = BasisWord> + '_ {
        (0..self.dim()).map(|i| self.word_at(i))
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.id)
    }

    pub fn unit(&self) -> AlgebraElement {
        AlgebraElement::from_word(self.id, BasisWord::unit(), CycScalar::one())
    }

    pub fn scalar(&self, c: CycScalar) -> AlgebraElement {
        AlgebraElement::from_word(self.id, BasisWord::unit(), c)
    }

    pub fn k(&self) -> AlgebraElement {
        AlgebraElement::from_word(self.id, BasisWord::k_power(1), CycScalar::one())
    }

    pub fn k_pow(&self, m: i64) -> AlgebraElement {
        AlgebraElement::from_word(
            self.id,
            BasisWord::k_power(m.rem_euclid(4) as u8),
            CycScalar::one(),
        )
    }

    /// `f_j^+` (sign = +1) or `f_j^-` (sign = -1); j is 1-based.
    pub fn f(&self, j: usize, sign: i64) -> AlgebraElement {
        assert!(j >= 1 && j <= self.id.n, "fermion index out of range");
        let (plus, minus) = if sign >= 0 {
            (1 << (j - 1), 0)
        } else {
            (0, 1 << (j - 1))
        };
        AlgebraElement::from_word(self.id, BasisWord { k: 0, plus, minus }, CycScalar::one())
    }

    pub fn check_member(&self, x: &AlgebraElement) -> Result<()> {
        if x.id == self.id {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_member(x)?;
        self.check_member(y)?;
        Ok(x * y)
    }

    /// Counit: algebra map with `eps(K) = 1`, `eps(f) = 0`.
    pub fn counit(&self, x: &AlgebraElement) -> CycScalar {
        let mut out = CycScalar::zero();
        for (w, c) in x.terms() {
            if w.is_fermion_free() {
                out += c;
            }
        }
        out
    }

    /// Coproduct, extended from the generators as an algebra map.
    pub fn coproduct(&self, x: &AlgebraElement) -> TensorElement {
        let mut out = TensorElement::zero(self.id, 2);
        for (w, c) in x.terms() {
            let mut acc = TensorElement::unit(self.id, 2);
            for _ in 0..w.k {
                acc = &acc * &self.delta_k;
            }
            for g in w.gens() {
                acc = &acc * &self.delta_f[g.j as usize][g.minus as usize];
            }
            out = &out + &acc.scale(c);
        }
        out
    }

    /// Antipode, extended from the generators as an anti-algebra map.
    pub fn antipode(&self, x: &AlgebraElement) -> AlgebraElement {
        self.anti_extend(x, &self.s_k, &self.s_f)
    }

    pub fn antipode_inv(&self, x: &AlgebraElement) -> AlgebraElement {
        self.anti_extend(x, &self.sinv_k, &self.sinv_f)
    }

    fn anti_extend(
        &self,
        x: &AlgebraElement,
        img_k: &AlgebraElement,
        img_f: &[[AlgebraElement; 2]],
    ) -> AlgebraElement {
        let mut out = self.zero();
        for (w, c) in x.terms() {
            let mut acc = self.unit();
            // reverse the word, then apply the generator images left to right
            for g in w.gens().into_iter().rev() {
                acc = &acc * &img_f[g.j as usize][g.minus as usize];
            }
            for _ in 0..w.k {
                acc = &acc * img_k;
            }
            out = &out + &acc.scale(c);
        }
        out
    }

    /// Commutes with `K` and every fermion generator.
    pub fn is_central(&self, x: &AlgebraElement) -> bool {
        let mut gens = vec![self.k()];
        for j in 1..=self.id.n {
            gens.push(self.f(j, 1));
            gens.push(self.f(j, -1));
        }
        gens.iter().all(|g| &(x * g) - &(g * x) == self.zero())
    }

    /// Left multiplication matrix in the canonical basis.
    pub fn left_mul_matrix(&self, x: &AlgebraElement) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zero(d, d);
        for col in 0..d {
            let b = AlgebraElement::from_word(self.id, self.word_at(col), CycScalar::one());
            let prod = x * &b;
            for (w, c) in prod.terms() {
                m[(self.word_index(w), col)] = c.clone();
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: usize, k: u8) -> Algebra {
        Algebra::new(n, k).unwrap()
    }

    #[test]
    fn defining_relations() {
        let a = q(2, 2);
        let fp = a.f(1, 1);
        let fm = a.f(1, -1);
        let e1 = &a.unit().scale(&CycScalar::from_ratio(1, 2))
            - &a.k_pow(2).scale(&CycScalar::from_ratio(1, 2));
        // {f1+, f1-} = e1
        assert_eq!(&(&fp * &fm) + &(&fm * &fp), e1);
        // K^4 = 1
        let k = a.k();
        assert_eq!(&(&(&k * &k) * &k) * &k, a.unit());
        // {f+, f+} = 0
        assert!((&fp * &fp).is_zero());
        // {f1+, f2-} = 0
        let f2m = a.f(2, -1);
        assert!((&(&fp * &f2m) + &(&f2m * &fp)).is_zero());
        // {f, K} = 0
        assert!((&(&fp * &k) + &(&k * &fp)).is_zero());
    }

    #[test]
    fn word_mul_sign_conventions() {
        let a = q(2, 2);
        // f2+ * f1+ = - f1+ f2+
        let p = &a.f(2, 1) * &a.f(1, 1);
        let expect = AlgebraElement::from_word(
            a.id(),
            BasisWord {
                k: 0,
                plus: 0b11,
                minus: 0,
            },
            CycScalar::from_int(-1),
        );
        assert_eq!(p, expect);
        // f1+ * K = - K f1+
        let p = &a.f(1, 1) * &a.k();
        let expect = AlgebraElement::from_word(
            a.id(),
            BasisWord {
                k: 1,
                plus: 1,
                minus: 0,
            },
            CycScalar::from_int(-1),
        );
        assert_eq!(p, expect);
    }

    #[test]
    fn coproduct_counit_antipode_on_generators() {
        for (n, k) in [(1usize, 1u8), (2, 2), (2, 0)] {
            let a = q(n, k);
            // counitality on every basis word
            for w in a.basis_words() {
                let x = AlgebraElement::from_word(a.id(), w, CycScalar::one());
                let d = a.coproduct(&x);
                assert_eq!(d.contract_counit_leg(&a, 0), x, "left counit, N={n}");
                assert_eq!(d.contract_counit_leg(&a, 1), x, "right counit, N={n}");
            }
            // Delta(1) = 1 (x) 1, eps(1) = 1
            assert_eq!(a.coproduct(&a.unit()), TensorElement::unit(a.id(), 2));
            assert_eq!(a.counit(&a.unit()), CycScalar::one());
            // S . S^{-1} = id on all basis words
            for w in a.basis_words() {
                let x = AlgebraElement::from_word(a.id(), w, CycScalar::one());
                assert_eq!(a.antipode(&a.antipode_inv(&x)), x);
                assert_eq!(a.antipode_inv(&a.antipode(&x)), x);
            }
        }
    }

    #[test]
    fn antipode_is_anti_algebra_map() {
        let a = q(2, 2);
        let words: Vec<BasisWord> = a.basis_words().collect();
        for (i, wa) in words.iter().enumerate().step_by(7) {
            for wb in words.iter().skip(i % 3).step_by(11) {
                let x = AlgebraElement::from_word(a.id(), *wa, CycScalar::one());
                let y = AlgebraElement::from_word(a.id(), *wb, CycScalar::one());
                assert_eq!(a.antipode(&(&x * &y)), &a.antipode(&y) * &a.antipode(&x));
            }
        }
    }

    #[test]
    fn multiplication_is_associative_on_sampled_words() {
        let a = q(2, 2);
        let words: Vec<BasisWord> = a.basis_words().collect();
        let pick =
            |s: usize| AlgebraElement::from_word(a.id(), words[s % words.len()], CycScalar::one());
        for s in 0..40 {
            let (x, y, z) = (pick(5 * s + 1), pick(11 * s + 3), pick(17 * s + 7));
            assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        }
    }

    #[test]
    fn algebra_mismatch_is_rejected() {
        let a1 = q(1, 1);
        let a2 = q(2, 2);
        let err = a1.multiply(&a1.unit(), &a2.unit());
        assert!(matches!(err, Err(Error::AlgebraMismatch)));
    }
}
