//! Lens-space invariants: continued fractions and linking matrices, the
//! centre of the algebra with its modular S/T-action, the surgery element
//! built from that action, and the final invariants for all three trace
//! regimes.

use crate::algebra::{Algebra, AlgebraElement, BasisWord};
use crate::scalars::CycScalar;
use crate::traces::{pairing, BoundTrace};
use crate::{Error, Result};

/// A continued fraction expansion `p/q = [a_n; a_{n-1}, ..., a_1]`
/// (each step subtracts the reciprocal of the previous), subject to the
/// positivity assumption that every prefix value `[a_i; a_{i-1}, ..., a_1]`
/// is positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFraction {
    pub p: i64,
    pub q: i64,
    pub a: Vec<i64>,
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

impl ContinuedFraction {
    /// Ceiling algorithm: `a_n = ceil(p/q)`, recurse on the reciprocal of
    /// the remainder. Produces entries satisfying the positivity assumption.
    pub fn expand(p: i64, q: i64) -> Result<Self> {
        if p <= 0 || q <= 0 || gcd(p, q) != 1 {
            return Err(Error::NotCoprime(p, q));
        }
        let mut rev = Vec::new();
        let (mut num, mut den) = (p, q);
        loop {
            // ceil(num/den) for positive den
            let ceil = (num + den - 1).div_euclid(den);
            rev.push(ceil);
            let rem_num = ceil * den - num; // ceil - num/den = rem_num/den >= 0
            if rem_num == 0 {
                break;
            }
            (num, den) = (den, rem_num);
        }
        rev.reverse();
        Self::from_parts(p, q, rev)
    }

    /// Accept an arbitrary expansion, validating exact value and positivity.
    pub fn from_parts(p: i64, q: i64, a: Vec<i64>) -> Result<Self> {
        if p <= 0 || q <= 0 || gcd(p, q) != 1 {
            return Err(Error::NotCoprime(p, q));
        }
        let cf = ContinuedFraction { p, q, a };
        let prefix = cf.prefix_convergents();
        if prefix.is_empty() {
            return Err(Error::Unsupported("empty continued fraction".into()));
        }
        for &(pi, qi) in &prefix {
            if pi <= 0 || qi <= 0 {
                return Err(Error::Unsupported(
                    "continued fraction violates the positivity assumption".into(),
                ));
            }
        }
        let (pn, qn) = *prefix.last().unwrap();
        if (pn, qn) != (p, q) {
            return Err(Error::Unsupported(format!(
                "continued fraction evaluates to {pn}/{qn}, expected {p}/{q}"
            )));
        }
        Ok(cf)
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// Reduced fractions `p_i/q_i = [a_i; a_{i-1}, ..., a_1]`, i = 1..n.
    /// They satisfy `q_i = p_{i-1}`.
    pub fn prefix_convergents(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::with_capacity(self.a.len());
        let (mut prev_p, mut prev_q) = (1i64, 0i64);
        for &ai in &self.a {
            // [a_i; rest] = a_i - q_{i-1}/p_{i-1}
            let p = ai * prev_p - prev_q;
            let q = prev_p;
            let g = gcd(p, q).max(1);
            out.push((p / g, q / g));
            (prev_p, prev_q) = (p / g, q / g);
        }
        out
    }

    /// Reduced fractions `p_i/q_i = [a_i; a_{i+1}, ..., a_n]`, i = 1..n.
    /// They satisfy `q_j = p_{j+1}` and `p_1 = p`.
    pub fn suffix_convergents(&self) -> Vec<(i64, i64)> {
        let mut out = vec![(0i64, 0i64); self.a.len()];
        let (mut prev_p, mut prev_q) = (1i64, 0i64);
        for (i, &ai) in self.a.iter().enumerate().rev() {
            let p = ai * prev_p - prev_q;
            let q = prev_p;
            let g = gcd(p, q).max(1);
            out[i] = (p / g, q / g);
            (prev_p, prev_q) = (p / g, q / g);
        }
        out
    }

    /// Tridiagonal linking matrix of the surgery chain: diagonal `a`,
    /// off-diagonal 1.
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.a.len();
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][i] = self.a[i];
            if i + 1 < n {
                m[i][i + 1] = 1;
                m[i + 1][i] = 1;
            }
        }
        m
    }

    /// Leading principal minors of the linking matrix via the tridiagonal
    /// recurrence `d_k = a_k d_{k-1} - d_{k-2}`; the determinant is the last
    /// entry and equals `p`.
    pub fn leading_minors(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.a.len());
        let (mut d2, mut d1) = (0i64, 1i64);
        for &ai in &self.a {
            let d = ai * d1 - d2;
            out.push(d);
            (d2, d1) = (d1, d);
        }
        out
    }

    pub fn lk_det(&self) -> i64 {
        *self.leading_minors().last().unwrap()
    }

    /// Signature of the linking matrix: all leading minors are positive
    /// under the positivity assumption, so the matrix is positive definite
    /// and the signature equals the number of link components.
    pub fn lk_signature(&self) -> Result<i64> {
        if self.leading_minors().iter().any(|&d| d <= 0) {
            return Err(Error::Unsupported(
                "linking matrix is not positive definite".into(),
            ));
        }
        Ok(self.a.len() as i64)
    }
}

/// The centre of the algebra, split into the block spanned by the three
/// projective-class characters and the block of even fermion words.
pub struct CenterData {
    /// `phi_{P0+}`, `phi_{X1+}`, `phi_{X1-}`.
    pub zp: [AlgebraElement; 3],
    /// `e0 (f^+)^s (f^-)^t` with `|s| + |t|` even.
    pub z_lambda: Vec<AlgebraElement>,
}

impl CenterData {
    pub fn dim(&self) -> usize {
        3 + self.z_lambda.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &AlgebraElement> {
        self.zp.iter().chain(self.z_lambda.iter())
    }
}

/// Solve for the centre as the kernel of all generator commutators, verify
/// its dimension `3 + 2^{2N-1}`, and return the structured basis (checked
/// to be independent, central, and of the right cardinality).
pub fn compute_center(alg: &Algebra) -> Result<CenterData> {
    let d = alg.dim();
    let mut gens = vec![alg.k()];
    for j in 1..=alg.n() {
        gens.push(alg.f(j, 1));
        gens.push(alg.f(j, -1));
    }
    let mut reducer = crate::linalg::SparseReducer::new(d);
    for g in &gens {
        // rows are indexed by the product word; one row block per generator
        let mut rows: std::collections::BTreeMap<BasisWord, Vec<(usize, CycScalar)>> =
            std::collections::BTreeMap::new();
        for col in 0..d {
            let b = AlgebraElement::from_word(alg.id(), alg.word_at(col), CycScalar::one());
            let comm = &(&b * g) - &(g * &b);
            for (w, c) in comm.terms() {
                rows.entry(*w).or_default().push((col, c.clone()));
            }
        }
        for (_, row) in rows {
            reducer.add_row(row);
        }
    }
    let kernel = reducer.kernel_basis();
    let expected = 3 + (1usize << (2 * alg.n() - 1));
    if kernel.len() != expected {
        return Err(Error::DimensionMismatch {
            what: "centre".into(),
            expected,
            found: kernel.len(),
        });
    }
    let zp = [alg.phi_p0_plus(), alg.phi_x1(1), alg.phi_x1(-1)];
    let z_lambda = alg.central_lambda_basis();
    if z_lambda.len() + 3 != expected {
        return Err(Error::DimensionMismatch {
            what: "structured centre basis".into(),
            expected,
            found: z_lambda.len() + 3,
        });
    }
    // all structured elements central and jointly independent
    let mut indep = crate::linalg::SparseReducer::new(d);
    for z in zp.iter().chain(z_lambda.iter()) {
        if !alg.is_central(z) {
            return Err(Error::NotCentral);
        }
        let row: Vec<(usize, CycScalar)> = z
            .terms()
            .map(|(w, c)| (alg.word_index(w), c.clone()))
            .collect();
        if !indep.add_row(row) {
            return Err(Error::Unsupported(
                "structured centre basis is dependent".into(),
            ));
        }
    }
    // the unit-class character decomposes across the two blocks
    let phi1 = alg.integral_phi1();
    let decomposed = &zp[0].scale(&alg.two_pow(-2 * alg.n() as i64))
        + &alg
            .e0_top()
            .scale(&(&alg.two_pow(alg.n() as i64) * &alg.beta().pow(2).unwrap()));
    if phi1 != decomposed {
        return Err(Error::Unsupported(
            "unit character does not split across the centre blocks".into(),
        ));
    }
    Ok(CenterData { zp, z_lambda })
}

/// Coordinates on the projective block of the centre, in the ordered basis
/// `phi_{P0+}, phi_{X1+}, phi_{X1-}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coefficients3 {
    pub c0: CycScalar,
    pub cp: CycScalar,
    pub cm: CycScalar,
}

impl Coefficients3 {
    pub fn initial() -> Self {
        Coefficients3 {
            c0: CycScalar::one(),
            cp: CycScalar::zero(),
            cm: CycScalar::zero(),
        }
    }
}

/// One S/T-word letter acting on the centre.
#[derive(Clone, Copy, Debug)]
pub enum StLetter {
    S,
    T(i64),
}

/// Action of an S/T-word on the projective block, letters applied left to
/// right.
pub fn st_on_zp(alg: &Algebra, coords: &Coefficients3, word: &[StLetter]) -> Coefficients3 {
    let n = alg.n() as i64;
    let mut c = coords.clone();
    for letter in word {
        c = match letter {
            StLetter::S => {
                let half = CycScalar::from_ratio(1, 2);
                Coefficients3 {
                    c0: &alg.two_pow(-n) * &(&c.cp - &c.cm),
                    cp: &(&alg.two_pow(n - 1) * &c.c0) + &(&half * &(&c.cp + &c.cm)),
                    cm: &(&-&alg.two_pow(n - 1) * &c.c0) + &(&half * &(&c.cp + &c.cm)),
                }
            }
            StLetter::T(e) => {
                let b = alg.beta().pow(-e).unwrap();
                let sign = if e.rem_euclid(2) == 1 { -1 } else { 1 };
                Coefficients3 {
                    c0: c.c0,
                    cp: &c.cp * &b,
                    cm: (&c.cm * &b).scale_int(sign),
                }
            }
        };
    }
    c
}

/// Even-block coefficient vector: index `s` (bit mask over fermion indices)
/// holds the coefficient of `e0 prod_j (f_j^+ f_j^-)^{s_j}`.
pub type ZevVector = Vec<CycScalar>;

/// Action of an S/T-word on the even block: tensor-factorised 2x2 matrices
/// per fermion index, with a global `beta^2` for each S.
pub fn st_on_zev(alg: &Algebra, vec: &ZevVector, word: &[StLetter]) -> ZevVector {
    let n = alg.n();
    assert_eq!(vec.len(), 1 << n);
    let mut v = vec.clone();
    for letter in word {
        // per-factor matrix in the basis (pair present, pair absent)
        let (m_pp, m_pa, m_ap, m_aa, global) = match letter {
            StLetter::S => (
                CycScalar::zero(),
                CycScalar::from_int(2),
                CycScalar::from_ratio(-1, 2),
                CycScalar::zero(),
                alg.beta().pow(2).unwrap(),
            ),
            StLetter::T(e) => {
                // T^e = [[1, 2e], [0, 1]]
                (
                    CycScalar::one(),
                    CycScalar::from_int(2 * e),
                    CycScalar::zero(),
                    CycScalar::one(),
                    CycScalar::one(),
                )
            }
        };
        for j in 0..n {
            let bit = 1usize << j;
            let mut next = vec![CycScalar::zero(); 1 << n];
            for s in 0..(1usize << n) {
                if s & bit != 0 {
                    // present component
                    let a = &v[s];
                    let b = &v[s ^ bit];
                    next[s] = &(&m_pp * a) + &(&m_pa * b);
                } else {
                    let a = &v[s | bit];
                    let b = &v[s];
                    next[s] = &(&m_ap * a) + &(&m_aa * b);
                }
            }
            v = next;
        }
        if !global.is_one() {
            for c in v.iter_mut() {
                *c = &*c * &global;
            }
        }
    }
    v
}

/// Convert an even-block vector into the corresponding central element.
pub fn zev_to_element(alg: &Algebra, vec: &ZevVector) -> AlgebraElement {
    let mut out = alg.zero();
    for (s, c) in vec.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out = &out + &alg.alpha_t(s as u32).scale(c);
    }
    out
}

/// Extract the even-block vector of a central element supported on the even
/// words; errors if the element is not in that span.
pub fn element_to_zev(alg: &Algebra, z: &AlgebraElement) -> Result<ZevVector> {
    let n = alg.n();
    let mut vec = vec![CycScalar::zero(); 1 << n];
    for (s, slot) in vec.iter_mut().enumerate() {
        let w = BasisWord {
            k: 0,
            plus: s as u32,
            minus: s as u32,
        };
        *slot = z.coeff(&w).scale_int(2);
    }
    if &zev_to_element(alg, &vec) != z {
        return Err(Error::Unsupported(
            "element is not in the even centre block".into(),
        ));
    }
    Ok(vec)
}

/// The recursion for the projective-block coefficients of the surgery
/// element; `extend` appends the closing step with exponent zero.
pub fn coefficients(alg: &Algebra, cf: &ContinuedFraction, extend: bool) -> Coefficients3 {
    let mut word = Vec::new();
    for &ai in &cf.a {
        word.push(StLetter::S);
        word.push(StLetter::T(ai));
    }
    if extend {
        word.push(StLetter::S);
        word.push(StLetter::T(0));
    }
    st_on_zp(alg, &Coefficients3::initial(), &word)
}

/// The central surgery element, via the closed form: the projective block
/// carries the recursion coefficients, the even block carries
/// `2^N beta^{6n+2} sum_s p^{|s|} (q/2)^{N-|s|} e0 prod (f^+f^-)^s`.
pub fn f_hat(alg: &Algebra, cf: &ContinuedFraction) -> AlgebraElement {
    let n = alg.n() as i64;
    let c = coefficients(alg, cf, false);
    let scale = alg.two_pow(-2 * n);
    let zp_part = &(&alg.phi_p0_plus().scale(&(&c.c0 * &scale))
        + &alg.phi_x1(1).scale(&(&c.cp * &scale)))
        + &alg.phi_x1(-1).scale(&(&c.cm * &scale));

    let steps = cf.n() as i64;
    let head = &alg.two_pow(n) * &alg.beta().pow(6 * steps + 2).unwrap();
    let mut lambda_part = alg.zero();
    for s in 0..(1u32 << alg.n()) {
        let sz = s.count_ones() as i64;
        let coeff = &(&CycScalar::from_int(cf.p).pow(sz).unwrap()
            * &CycScalar::from_ratio(cf.q, 2).pow(n - sz).unwrap())
            * &head;
        lambda_part = &lambda_part + &alg.alpha_t(s).scale(&coeff);
    }
    &zp_part + &lambda_part
}

/// The same element computed by applying the S/T-matrix action to the
/// unit-class character, block by block.
pub fn f_hat_via_st(alg: &Algebra, cf: &ContinuedFraction) -> AlgebraElement {
    let n = alg.n() as i64;
    let mut word = Vec::new();
    for &ai in &cf.a {
        word.push(StLetter::S);
        word.push(StLetter::T(ai));
    }
    // phi_1 = 2^{-2N} phi_{P0+} + 2^N beta^2 e0 TOP
    let zp0 = Coefficients3 {
        c0: alg.two_pow(-2 * n),
        cp: CycScalar::zero(),
        cm: CycScalar::zero(),
    };
    let mut ev0 = vec![CycScalar::zero(); 1 << alg.n()];
    let ones = (1usize << alg.n()) - 1;
    ev0[ones] = &alg.two_pow(n) * &alg.beta().pow(2).unwrap();

    let zp = st_on_zp(alg, &zp0, &word);
    let ev = st_on_zev(alg, &ev0, &word);
    let zp_part = &(&alg.phi_p0_plus().scale(&zp.c0) + &alg.phi_x1(1).scale(&zp.cp))
        + &alg.phi_x1(-1).scale(&zp.cm);
    &zp_part + &zev_to_element(alg, &ev)
}

/// `F(z) = <Lambda | z M_1> M_2`, the central transform implementing the
/// surgery handle around the non-contractible loop.
pub fn f_transform(alg: &Algebra, z: &AlgebraElement) -> Result<AlgebraElement> {
    if !alg.is_central(z) {
        return Err(Error::NotCentral);
    }
    let lambda = alg.lyubashenko_integral();
    let mono = alg.monodromy_basis_form();
    let mut out = alg.zero();
    for (legs, c) in mono.terms() {
        let m1 = AlgebraElement::from_word(alg.id(), legs[0], CycScalar::one());
        let v = lambda.eval(alg, &(z * &m1));
        if v.is_zero() {
            continue;
        }
        out.add_term(legs[1], &v * c);
    }
    Ok(out)
}

/// The associator-dressed form of the same transform:
/// `<Lambda| S^{sign}(Phi_1 Phibar_1) alpha z Phi_2 M_1 Phibar_2> Phi_3 M_2 Phibar_3`.
/// Both antipode directions give the same result here.
pub fn f_transform_general(
    alg: &Algebra,
    z: &AlgebraElement,
    antipode_sign: i64,
) -> Result<AlgebraElement> {
    if !alg.is_central(z) {
        return Err(Error::NotCentral);
    }
    let lambda = alg.lyubashenko_integral();
    let u = &(&alg.coassociator(1) * &alg.monodromy_basis_form().subscript(&[2, 3], 3))
        * &alg.coassociator(-1);
    let mut out = alg.zero();
    for (legs, c) in u.terms() {
        let u1 = AlgebraElement::from_word(alg.id(), legs[0], CycScalar::one());
        let s_u1 = if antipode_sign >= 0 {
            alg.antipode(&u1)
        } else {
            alg.antipode_inv(&u1)
        };
        let u2 = AlgebraElement::from_word(alg.id(), legs[1], CycScalar::one());
        let v = lambda.eval(alg, &(&(&s_u1 * z) * &u2));
        if v.is_zero() {
            continue;
        }
        out.add_term(legs[2], &v * c);
    }
    Ok(out)
}

/// Which of the two admissible graph embeddings is evaluated: the loop in a
/// ball (`Star`) or the loop around the non-contractible cycle (`Circ`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LensKind {
    Star,
    Circ,
}

/// The central element paired against the coupon label:
/// `Star` gives a scalar multiple of the unit, `Circ` the transform of the
/// surgery element.
pub fn zeta(alg: &Algebra, kind: LensKind, cf: &ContinuedFraction) -> Result<AlgebraElement> {
    let fh = f_hat(alg, cf);
    match kind {
        LensKind::Star => {
            let lambda = alg.lyubashenko_integral();
            let v = lambda.eval(alg, &(&alg.alpha_elt() * &fh));
            Ok(alg.scalar(v))
        }
        LensKind::Circ => f_transform(alg, &fh),
    }
}

/// Closed form for the `Circ` element: extended recursion coefficients on
/// the projective block, `beta^{6n} p^N sum_s (-2q/p)^{|s|} ...` on the
/// even block.
pub fn zeta_circ_closed(alg: &Algebra, cf: &ContinuedFraction) -> AlgebraElement {
    let n = alg.n() as i64;
    let c = coefficients(alg, cf, true);
    let scale = alg.two_pow(-2 * n);
    let zp_part = &(&alg.phi_p0_plus().scale(&(&c.c0 * &scale))
        + &alg.phi_x1(1).scale(&(&c.cp * &scale)))
        + &alg.phi_x1(-1).scale(&(&c.cm * &scale));
    let steps = cf.n() as i64;
    let head = &alg.beta().pow(6 * steps).unwrap() * &CycScalar::from_int(cf.p).pow(n).unwrap();
    let mut ev = alg.zero();
    for s in 0..(1u32 << alg.n()) {
        let sz = s.count_ones() as i64;
        let coeff = &CycScalar::from_ratio(-2 * cf.q, cf.p).pow(sz).unwrap() * &head;
        ev = &ev + &alg.alpha_t(s).scale(&coeff);
    }
    &zp_part + &ev
}

/// The lens-space invariant for a coupon label `alpha_hat` (central), a
/// module bound to a trace regime, and surgery data `cf`:
/// `beta^{2n} * (alpha_hat, zeta_kind)_P`.
pub fn lens_invariant(
    trace: &BoundTrace,
    kind: LensKind,
    alpha_hat: &AlgebraElement,
    cf: &ContinuedFraction,
) -> Result<CycScalar> {
    let alg = trace.alg;
    let z = zeta(alg, kind, cf)?;
    let surgery = alg.beta().pow(2 * cf.n() as i64).unwrap();
    Ok(&surgery * &pairing(trace, alpha_hat, &z)?)
}

/// The invariant of the bare lens space (categorical regime, empty coupon):
/// `beta^{2n} <Lambda | f_hat>`; equals `p^N`.
pub fn lyu_lens(alg: &Algebra, p: i64, q: i64) -> Result<CycScalar> {
    let cf = ContinuedFraction::expand(p, q)?;
    let lambda = alg.lyubashenko_integral();
    let fh = f_hat(alg, &cf);
    let surgery = alg.beta().pow(2 * cf.n() as i64).unwrap();
    Ok(&surgery * &lambda.eval(alg, &fh))
}
