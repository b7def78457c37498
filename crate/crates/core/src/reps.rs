//! Finite-dimensional modules as exact matrix representations: simples,
//! projective covers, the four-dimensional lift family over `Q(2, beta)`,
//! tensor products, restriction to the subalgebra, Hom spaces and
//! Grothendieck multiplicities.

use crate::algebra::{Algebra, AlgebraElement, AlgebraId, BasisWord};
use crate::linalg::{Matrix, SparseReducer};
use crate::scalars::CycScalar;
use crate::{Error, Result};

/// Which algebra acts: the full `Q(N, beta)` or the distinguished
/// subalgebra (generated by `K` and the first fermion pair) of `Q(2, beta)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraTag {
    Full,
    Sub,
}

/// The four simple modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimpleLabel {
    X0(i64),
    X1(i64),
}

impl SimpleLabel {
    pub fn all() -> [SimpleLabel; 4] {
        [
            SimpleLabel::X0(1),
            SimpleLabel::X0(-1),
            SimpleLabel::X1(1),
            SimpleLabel::X1(-1),
        ]
    }

    pub fn render(&self) -> String {
        match self {
            SimpleLabel::X0(e) => format!("X0{}", if *e >= 0 { "+" } else { "-" }),
            SimpleLabel::X1(e) => format!("X1{}", if *e >= 0 { "+" } else { "-" }),
        }
    }
}

/// Parameter matrix `[[a-, a+], [b-, b+]]` of the lift family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuMatrix {
    pub a_minus: CycScalar,
    pub a_plus: CycScalar,
    pub b_minus: CycScalar,
    pub b_plus: CycScalar,
}

impl MuMatrix {
    pub fn new(
        a_minus: CycScalar,
        a_plus: CycScalar,
        b_minus: CycScalar,
        b_plus: CycScalar,
    ) -> Self {
        MuMatrix {
            a_minus,
            a_plus,
            b_minus,
            b_plus,
        }
    }

    pub fn from_ints(a_minus: i64, a_plus: i64, b_minus: i64, b_plus: i64) -> Self {
        Self::new(
            CycScalar::from_int(a_minus),
            CycScalar::from_int(a_plus),
            CycScalar::from_int(b_minus),
            CycScalar::from_int(b_plus),
        )
    }

    pub fn det(&self) -> CycScalar {
        &(&self.a_minus * &self.b_plus) - &(&self.a_plus * &self.b_minus)
    }

    pub fn entry(&self, row: usize, col: usize) -> &CycScalar {
        match (row, col) {
            (1, 1) => &self.a_minus,
            (1, 2) => &self.a_plus,
            (2, 1) => &self.b_minus,
            (2, 2) => &self.b_plus,
            _ => panic!("mu entries are indexed 1..=2"),
        }
    }
}

/// A module given by generator matrices over the exact scalar field.
#[derive(Clone, PartialEq, Eq)]
pub struct Rep {
    pub id: AlgebraId,
    pub tag: AlgebraTag,
    pub dim: usize,
    k: Matrix,
    f: Vec<[Matrix; 2]>,
}

impl Rep {
    /// Build a representation and audit the defining relations.
    pub fn new(id: AlgebraId, tag: AlgebraTag, k: Matrix, f: Vec<[Matrix; 2]>) -> Result<Self> {
        let expected = match tag {
            AlgebraTag::Full => id.n,
            AlgebraTag::Sub => 1,
        };
        if f.len() != expected {
            return Err(Error::DimensionMismatch {
                what: "fermion generator count".into(),
                expected,
                found: f.len(),
            });
        }
        let rep = Rep {
            id,
            tag,
            dim: k.rows,
            k,
            f,
        };
        rep.audit_relations()?;
        Ok(rep)
    }

    fn audit_relations(&self) -> Result<()> {
        let d = self.dim;
        let idm = Matrix::identity(d);
        let k2 = self.k.mul(&self.k);
        if k2.mul(&k2) != idm {
            return Err(Error::RelationViolation("K^4 = 1".into()));
        }
        // e1 = (1 - K^2)/2
        let e1 = idm.sub(&k2).scale(&CycScalar::from_ratio(1, 2));
        for (i, fi) in self.f.iter().enumerate() {
            for m in fi {
                if m.rows != d || m.cols != d {
                    return Err(Error::DimensionMismatch {
                        what: "generator matrix size".into(),
                        expected: d,
                        found: m.rows,
                    });
                }
                let anti = m.mul(&self.k).add(&self.k.mul(m));
                if !anti.is_zero() {
                    return Err(Error::RelationViolation("{f, K} = 0".into()));
                }
            }
            for (j, fj) in self.f.iter().enumerate() {
                for (si, a) in fi.iter().enumerate() {
                    for (sj, b) in fj.iter().enumerate() {
                        let anti = a.mul(b).add(&b.mul(a));
                        let expect = if i == j && si != sj {
                            e1.clone()
                        } else {
                            Matrix::zero(d, d)
                        };
                        if anti != expect {
                            return Err(Error::RelationViolation("fermion anticommutators".into()));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Number of fermion pairs the acting algebra provides.
    pub fn fermion_range(&self) -> usize {
        self.f.len()
    }

    pub fn k_matrix(&self) -> &Matrix {
        &self.k
    }

    pub fn f_matrix(&self, j: usize, sign: i64) -> &Matrix {
        &self.f[j - 1][if sign >= 0 { 0 } else { 1 }]
    }

    /// Action of a normal-ordered basis word.
    pub fn act_word(&self, w: &BasisWord) -> Result<Matrix> {
        let max_mask = (1u32 << self.f.len()) - 1;
        if w.plus & !max_mask != 0 || w.minus & !max_mask != 0 {
            return Err(Error::Unsupported(
                "word uses fermions outside the acting algebra".into(),
            ));
        }
        let mut m = Matrix::identity(self.dim);
        for _ in 0..w.k {
            m = m.mul(&self.k);
        }
        for j in 0..self.f.len() {
            if w.plus >> j & 1 == 1 {
                m = m.mul(&self.f[j][0]);
            }
            if w.minus >> j & 1 == 1 {
                m = m.mul(&self.f[j][1]);
            }
        }
        Ok(m)
    }

    /// Action of a general algebra element.
    pub fn act(&self, x: &AlgebraElement) -> Result<Matrix> {
        if x.id != self.id {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = Matrix::zero(self.dim, self.dim);
        for (w, c) in x.terms() {
            out = out.add(&self.act_word(w)?.scale(c));
        }
        Ok(out)
    }

    /// Generator matrices, `K` first then the fermion pairs.
    pub fn generator_matrices(&self) -> Vec<Matrix> {
        let mut gens = vec![self.k.clone()];
        for fi in &self.f {
            gens.push(fi[0].clone());
            gens.push(fi[1].clone());
        }
        gens
    }

    /// Whether `t` commutes with the whole action.
    pub fn intertwines(&self, t: &Matrix) -> bool {
        t.rows == self.dim
            && t.cols == self.dim
            && self
                .generator_matrices()
                .iter()
                .all(|g| t.mul(g) == g.mul(t))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut gens = serde_json::Map::new();
        gens.insert("K".to_string(), self.k.to_json());
        for (j, fi) in self.f.iter().enumerate() {
            gens.insert(format!("f{}+", j + 1), fi[0].to_json());
            gens.insert(format!("f{}-", j + 1), fi[1].to_json());
        }
        serde_json::json!({
            "dim": self.dim,
            "generators": serde_json::Value::Object(gens),
        })
    }
}

/// Echelonised spanning data for submodules of the regular module.
pub struct IdealBasis {
    /// Reduced basis elements, each an element of the algebra.
    pub elements: Vec<AlgebraElement>,
    pivots: Vec<usize>,
}

impl IdealBasis {
    fn from_spanning(alg: &Algebra, spanning: impl Iterator<Item = AlgebraElement>) -> Self {
        let dim = alg.dim();
        let mut reducer = SparseReducer::new(dim);
        let mut rows: Vec<Vec<(usize, CycScalar)>> = Vec::new();
        for x in spanning {
            let row: Vec<(usize, CycScalar)> = x
                .terms()
                .map(|(w, c)| (alg.word_index(w), c.clone()))
                .collect();
            if reducer.add_row(row.clone()) {
                rows.push(row);
            }
        }
        // Re-reduce the independent rows into a clean RREF basis.
        let mut mat = Matrix::zero(rows.len(), dim);
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row {
                mat[(r, *c)] = v.clone();
            }
        }
        let pivots = mat.rref();
        let elements = (0..pivots.len())
            .map(|r| {
                AlgebraElement::from_terms(
                    alg.id(),
                    (0..dim).filter_map(|c| {
                        let v = mat[(r, c)].clone();
                        if v.is_zero() {
                            None
                        } else {
                            Some((alg.word_at(c), v))
                        }
                    }),
                )
            })
            .collect();
        IdealBasis { elements, pivots }
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// Coordinates of an element in this basis; error if outside the span.
    pub fn coords(&self, alg: &Algebra, x: &AlgebraElement) -> Result<Vec<CycScalar>> {
        let mut coords = Vec::with_capacity(self.elements.len());
        let mut residual = x.clone();
        for (i, _) in self.elements.iter().enumerate() {
            let c = residual.coeff(&alg.word_at(self.pivots[i]));
            if !c.is_zero() {
                residual = &residual - &self.elements[i].scale(&c);
            }
            coords.push(c);
        }
        if residual.is_zero() {
            Ok(coords)
        } else {
            Err(Error::Unsupported(
                "element outside the submodule span".into(),
            ))
        }
    }
}

/// The left ideal generated by an idempotent, as a representation together
/// with its echelonised basis inside the regular module.
pub fn left_ideal_rep(alg: &Algebra, e: &AlgebraElement) -> Result<(Rep, IdealBasis)> {
    if &(e * e) != e {
        return Err(Error::NotIdempotent);
    }
    let spanning = alg
        .basis_words()
        .map(|w| &AlgebraElement::from_word(alg.id(), w, CycScalar::one()) * e);
    let basis = IdealBasis::from_spanning(alg, spanning);
    let rep = rep_on_basis(alg, AlgebraTag::Full, &basis)?;
    Ok((rep, basis))
}

/// Left ideal of the distinguished subalgebra generated by an idempotent of
/// the subalgebra, as a module over the subalgebra.
pub fn sub_left_ideal_rep(
    alg: &Algebra,
    sub: &crate::algebra::SubalgebraA,
    e: &AlgebraElement,
) -> Result<(Rep, IdealBasis)> {
    if &(e * e) != e {
        return Err(Error::NotIdempotent);
    }
    if !sub.contains(e) {
        return Err(Error::Unsupported(
            "idempotent is not in the subalgebra".into(),
        ));
    }
    let spanning = sub
        .basis()
        .iter()
        .map(|w| &AlgebraElement::from_word(alg.id(), *w, CycScalar::one()) * e);
    let basis = IdealBasis::from_spanning(alg, spanning);
    let rep = rep_on_basis(alg, AlgebraTag::Sub, &basis)?;
    Ok((rep, basis))
}

/// The simple modules of the distinguished subalgebra: the one-dimensional
/// `K = +-1` modules and the two-dimensional odd simples extracted from the
/// odd idempotent ideals.
pub fn sub_simple_module(
    alg: &Algebra,
    sub: &crate::algebra::SubalgebraA,
    label: SimpleLabel,
) -> Result<Rep> {
    match label {
        SimpleLabel::X0(eps) => {
            let mut k = Matrix::identity(1);
            k[(0, 0)] = CycScalar::from_int(eps.signum());
            Rep::new(
                alg.id(),
                AlgebraTag::Sub,
                k,
                vec![[Matrix::zero(1, 1), Matrix::zero(1, 1)]],
            )
        }
        SimpleLabel::X1(eps) => {
            let (_, ideal) = sub_left_ideal_rep(alg, sub, &sub.e1_sign(eps))?;
            for v0 in &ideal.elements {
                let spanning = sub
                    .basis()
                    .iter()
                    .map(|w| &AlgebraElement::from_word(alg.id(), *w, CycScalar::one()) * v0);
                let basis = IdealBasis::from_spanning(alg, spanning);
                if basis.dim() == 2 {
                    return rep_on_basis(alg, AlgebraTag::Sub, &basis);
                }
            }
            Err(Error::DimensionMismatch {
                what: "odd simple of the subalgebra".into(),
                expected: 2,
                found: 0,
            })
        }
    }
}

/// Projective cover over the subalgebra.
pub fn sub_projective_cover(
    alg: &Algebra,
    sub: &crate::algebra::SubalgebraA,
    label: SimpleLabel,
) -> Result<Rep> {
    match label {
        SimpleLabel::X0(eps) => Ok(sub_left_ideal_rep(alg, sub, &alg.e0_sign(eps))?.0),
        SimpleLabel::X1(_) => sub_simple_module(alg, sub, label),
    }
}

/// Composition multiplicities over the subalgebra, in the order
/// `X0+(A), X0-(A), X1+(A), X1-(A)`.
pub fn sub_grothendieck_class(
    alg: &Algebra,
    sub: &crate::algebra::SubalgebraA,
    x: &Rep,
) -> Result<[usize; 4]> {
    let mut out = [0usize; 4];
    for (i, label) in SimpleLabel::all().into_iter().enumerate() {
        let cover = sub_projective_cover(alg, sub, label)?;
        out[i] = hom_dim(&cover, x)?;
    }
    Ok(out)
}

/// Same, returning only the representation.
pub fn rep_from_idempotent(alg: &Algebra, e: &AlgebraElement) -> Result<Rep> {
    Ok(left_ideal_rep(alg, e)?.0)
}

/// Cyclic submodule of the regular module generated by one element.
pub fn cyclic_submodule(alg: &Algebra, v0: &AlgebraElement) -> Result<(Rep, IdealBasis)> {
    let spanning = alg
        .basis_words()
        .map(|w| &AlgebraElement::from_word(alg.id(), w, CycScalar::one()) * v0);
    let basis = IdealBasis::from_spanning(alg, spanning);
    let rep = rep_on_basis(alg, AlgebraTag::Full, &basis)?;
    Ok((rep, basis))
}

fn rep_on_basis(alg: &Algebra, tag: AlgebraTag, basis: &IdealBasis) -> Result<Rep> {
    let d = basis.dim();
    let gen_matrix = |g: &AlgebraElement| -> Result<Matrix> {
        let mut m = Matrix::zero(d, d);
        for (col, b) in basis.elements.iter().enumerate() {
            let coords = basis.coords(alg, &(g * b))?;
            for (row, c) in coords.into_iter().enumerate() {
                m[(row, col)] = c;
            }
        }
        Ok(m)
    };
    let k = gen_matrix(&alg.k())?;
    let range = match tag {
        AlgebraTag::Full => alg.n(),
        AlgebraTag::Sub => 1,
    };
    let mut f = Vec::with_capacity(range);
    for j in 1..=range {
        f.push([gen_matrix(&alg.f(j, 1))?, gen_matrix(&alg.f(j, -1))?]);
    }
    Rep::new(alg.id(), tag, k, f)
}

/// The four simple modules of `Q(N, beta)`.
pub fn simple_module(alg: &Algebra, label: SimpleLabel) -> Result<Rep> {
    match label {
        SimpleLabel::X0(eps) => {
            let mut k = Matrix::identity(1);
            k[(0, 0)] = CycScalar::from_int(eps.signum());
            let f = (0..alg.n())
                .map(|_| [Matrix::zero(1, 1), Matrix::zero(1, 1)])
                .collect();
            Rep::new(alg.id(), AlgebraTag::Full, k, f)
        }
        SimpleLabel::X1(eps) => {
            // One copy inside the isotypic ideal cut out by the odd central
            // idempotent: take the first echelon basis vector whose cyclic
            // span has the dimension of a single copy (a generic vector of
            // the ideal generates several copies at once).
            let want = 1 << alg.n();
            let (_, ideal) = left_ideal_rep(alg, &alg.e1_sign(eps))?;
            for v0 in &ideal.elements {
                let (rep, basis) = cyclic_submodule(alg, v0)?;
                if basis.dim() == want {
                    return Ok(rep);
                }
            }
            Err(Error::DimensionMismatch {
                what: "single odd simple inside its isotypic ideal".into(),
                expected: want,
                found: 0,
            })
        }
    }
}

/// Projective cover of a simple module, realised inside the regular module.
pub fn projective_cover(alg: &Algebra, label: SimpleLabel) -> Result<Rep> {
    match label {
        SimpleLabel::X0(eps) => rep_from_idempotent(alg, &alg.e0_sign(eps)),
        SimpleLabel::X1(_) => simple_module(alg, label),
    }
}

/// The lift `P_mu` of the subalgebra's projective cover of the unit, an
/// `H = Q(2, beta)`-module on the basis `{v0, v1-, v1+, v2}`.
pub fn p_mu(alg: &Algebra, mu: &MuMatrix) -> Result<Rep> {
    if alg.n() != 2 {
        return Err(Error::Unsupported(
            "the lift family lives over Q(2, beta)".into(),
        ));
    }
    let z = CycScalar::zero;
    let one = CycScalar::one;
    let k = Matrix::from_rows(vec![
        vec![one(), z(), z(), z()],
        vec![z(), -&one(), z(), z()],
        vec![z(), z(), -&one(), z()],
        vec![z(), z(), z(), one()],
    ]);
    let f1m = Matrix::from_rows(vec![
        vec![z(), z(), z(), z()],
        vec![one(), z(), z(), z()],
        vec![z(), z(), z(), z()],
        vec![z(), z(), one(), z()],
    ]);
    let f1p = Matrix::from_rows(vec![
        vec![z(), z(), z(), z()],
        vec![z(), z(), z(), z()],
        vec![one(), z(), z(), z()],
        vec![z(), -&one(), z(), z()],
    ]);
    let f2p = f1m.scale(&mu.a_plus).add(&f1p.scale(&mu.b_plus));
    let f2m = f1m.scale(&mu.a_minus).add(&f1p.scale(&mu.b_minus));
    Rep::new(alg.id(), AlgebraTag::Full, k, vec![[f1p, f1m], [f2p, f2m]])
}

/// Diagonal-action tensor product.
pub fn tensor_rep(alg: &Algebra, v: &Rep, w: &Rep) -> Result<Rep> {
    if v.id != alg.id() || w.id != alg.id() {
        return Err(Error::AlgebraMismatch);
    }
    if v.tag != w.tag {
        return Err(Error::Unsupported(
            "tensor factors over different algebras".into(),
        ));
    }
    let act_pair = |g: &AlgebraElement| -> Result<Matrix> {
        let delta = alg.coproduct(g);
        let mut out = Matrix::zero(v.dim * w.dim, v.dim * w.dim);
        for (legs, c) in delta.terms() {
            let a = v.act_word(&legs[0])?;
            let b = w.act_word(&legs[1])?;
            out = out.add(&a.kron(&b).scale(c));
        }
        Ok(out)
    };
    let k = act_pair(&alg.k())?;
    let range = v.fermion_range();
    let mut f = Vec::with_capacity(range);
    for j in 1..=range {
        f.push([act_pair(&alg.f(j, 1))?, act_pair(&alg.f(j, -1))?]);
    }
    Rep::new(alg.id(), v.tag, k, f)
}

/// Restriction of a `Q(2, beta)`-module to the distinguished subalgebra:
/// same matrices, smaller generator set.
pub fn restrict(alg: &Algebra, v: &Rep) -> Result<Rep> {
    if alg.n() != 2 || v.tag != AlgebraTag::Full {
        return Err(Error::Unsupported(
            "restriction goes from Q(2, beta) to its distinguished subalgebra".into(),
        ));
    }
    Rep::new(v.id, AlgebraTag::Sub, v.k.clone(), vec![v.f[0].clone()])
}

/// Exact basis of the intertwiner space `Hom(V, W)`.
pub fn hom_space(v: &Rep, w: &Rep) -> Result<Vec<Matrix>> {
    if v.id != w.id || v.tag != w.tag {
        return Err(Error::AlgebraMismatch);
    }
    let (dv, dw) = (v.dim, w.dim);
    let unknowns = dv * dw;
    let mut reducer = SparseReducer::new(unknowns);
    // T rho_V(g) = rho_W(g) T, unknown T is dw x dv; column index = r * dv + c.
    for (a, b) in v
        .generator_matrices()
        .iter()
        .zip(w.generator_matrices().iter())
    {
        for r in 0..dw {
            for c in 0..dv {
                let mut row: Vec<(usize, CycScalar)> = Vec::new();
                for kk in 0..dv {
                    let coeff = &a[(kk, c)];
                    if !coeff.is_zero() {
                        row.push((r * dv + kk, coeff.clone()));
                    }
                }
                for kk in 0..dw {
                    let coeff = &b[(r, kk)];
                    if !coeff.is_zero() {
                        row.push((kk * dv + c, -coeff));
                    }
                }
                row.sort_by_key(|&(i, _)| i);
                let mut merged: Vec<(usize, CycScalar)> = Vec::new();
                for (i, val) in row {
                    if let Some(last) = merged.last_mut() {
                        if last.0 == i {
                            last.1 += &val;
                            continue;
                        }
                    }
                    merged.push((i, val));
                }
                reducer.add_row(merged);
            }
        }
    }
    Ok(reducer
        .kernel_basis()
        .into_iter()
        .map(|vec| Matrix::from_fn(dw, dv, |r, c| vec[r * dv + c].clone()))
        .collect())
}

pub fn hom_dim(v: &Rep, w: &Rep) -> Result<usize> {
    Ok(hom_space(v, w)?.len())
}

/// Composition multiplicity `[X : U] = dim Hom(P_U, X)`.
pub fn multiplicity(alg: &Algebra, x: &Rep, u: SimpleLabel) -> Result<usize> {
    let cover = projective_cover(alg, u)?;
    hom_dim(&cover, x)
}

/// Class of a module in the Grothendieck ring, as multiplicities over the
/// simples in the order `X0+, X0-, X1+, X1-`.
pub fn grothendieck_class(alg: &Algebra, x: &Rep) -> Result<[usize; 4]> {
    let mut out = [0usize; 4];
    for (i, label) in SimpleLabel::all().into_iter().enumerate() {
        out[i] = multiplicity(alg, x, label)?;
    }
    Ok(out)
}

/// Whether the span of `homs` contains an invertible matrix, decided exactly
/// by evaluating the determinant polynomial on a large enough grid.
pub fn contains_invertible(homs: &[Matrix]) -> Result<bool> {
    let Some(first) = homs.first() else {
        return Ok(false);
    };
    if first.rows != first.cols {
        return Ok(false);
    }
    if homs.len() > 4 {
        return Err(Error::Unsupported(
            "invertibility scan limited to Hom spaces of dimension <= 4".into(),
        ));
    }
    // det of a linear combination has degree <= dim in each coefficient, so a
    // grid with dim+1 points per variable decides identical vanishing.
    let points = first.rows + 1;
    let r = homs.len();
    let mut counters = vec![0usize; r];
    loop {
        let mut m = Matrix::zero(first.rows, first.cols);
        for (i, h) in homs.iter().enumerate() {
            if counters[i] > 0 {
                m = m.add(&h.scale(&CycScalar::from_int(counters[i] as i64)));
            }
        }
        if m.is_invertible() {
            return Ok(true);
        }
        let mut i = 0;
        loop {
            if i == r {
                return Ok(false);
            }
            counters[i] += 1;
            if counters[i] < points {
                break;
            }
            counters[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: usize, k: u8) -> Algebra {
        Algebra::new(n, k).unwrap()
    }

    #[test]
    fn regular_rep_dimension() {
        let a = q(1, 1);
        let rep = rep_from_idempotent(&a, &a.unit()).unwrap();
        assert_eq!(rep.dim, 16);
    }

    #[test]
    fn projective_cover_dimensions() {
        for (n, k) in [(1usize, 1u8), (2, 2)] {
            let a = q(n, k);
            for eps in [1i64, -1] {
                let p0 = rep_from_idempotent(&a, &a.e0_sign(eps)).unwrap();
                assert_eq!(p0.dim, 1 << (2 * n), "P0 dim at N={n}");
                let odd = rep_from_idempotent(&a, &a.e1_sign(eps)).unwrap();
                assert_eq!(odd.dim, (1 << n) * (1 << n), "odd ideal dim at N={n}");
                let x1 = simple_module(&a, SimpleLabel::X1(eps)).unwrap();
                assert_eq!(x1.dim, 1 << n, "X1 dim at N={n}");
            }
        }
    }

    #[test]
    fn simple_k_actions() {
        let a = q(2, 2);
        let x0m = simple_module(&a, SimpleLabel::X0(-1)).unwrap();
        assert_eq!(x0m.k_matrix()[(0, 0)], CycScalar::from_int(-1));
        let x0p = simple_module(&a, SimpleLabel::X0(1)).unwrap();
        assert!(x0p.f_matrix(1, 1).is_zero());
        // K acts with eigenvalues +-i on the odd simples
        let x1p = simple_module(&a, SimpleLabel::X1(1)).unwrap();
        let k2 = x1p.k_matrix().mul(x1p.k_matrix());
        assert_eq!(
            k2,
            Matrix::identity(x1p.dim).scale(&CycScalar::from_int(-1))
        );
    }

    #[test]
    fn non_idempotent_rejected() {
        let a = q(1, 1);
        assert!(matches!(
            rep_from_idempotent(&a, &a.k()),
            Err(Error::NotIdempotent)
        ));
    }

    #[test]
    fn unit_ideal_is_regular_rep() {
        let a = q(1, 1);
        let (rep, basis) = left_ideal_rep(&a, &a.unit()).unwrap();
        assert_eq!(rep.dim, a.dim());
        assert_eq!(basis.dim(), a.dim());
    }

    #[test]
    fn p_mu_relations_and_det_action() {
        let a = q(2, 2);
        for (am, ap, bm, bp) in [(1i64, 0, 0, 1), (2, 1, 1, 1), (0, 0, 0, 0), (3, 1, 2, 1)] {
            let mu = MuMatrix::from_ints(am, ap, bm, bp);
            let rep = p_mu(&a, &mu).unwrap();
            // f2+ f2- acts as det(mu) * f1+ f1-
            let lhs = rep.f_matrix(2, 1).mul(rep.f_matrix(2, -1));
            let rhs = rep.f_matrix(1, 1).mul(rep.f_matrix(1, -1)).scale(&mu.det());
            assert_eq!(lhs, rhs);
        }
        // mu = 0: f2 acts as zero
        let rep = p_mu(&a, &MuMatrix::from_ints(0, 0, 0, 0)).unwrap();
        assert!(rep.f_matrix(2, 1).is_zero() && rep.f_matrix(2, -1).is_zero());
    }

    #[test]
    fn p_mu_isomorphism_detection() {
        let a = q(2, 2);
        let pairs = [
            ((1, 0, 0, 1), (1, 0, 0, 1), true),
            ((1, 0, 0, 1), (2, 0, 0, 1), false),
            ((0, 1, 1, 0), (0, 1, 1, 0), true),
            ((0, 1, 1, 0), (1, 1, 1, 0), false),
            ((2, 1, 1, 1), (2, 1, 1, 2), false),
            ((0, 0, 0, 0), (1, 0, 0, 0), false),
        ];
        for ((a1, a2, a3, a4), (b1, b2, b3, b4), expect) in pairs {
            let p1 = p_mu(&a, &MuMatrix::from_ints(a1, a2, a3, a4)).unwrap();
            let p2 = p_mu(&a, &MuMatrix::from_ints(b1, b2, b3, b4)).unwrap();
            let homs = hom_space(&p1, &p2).unwrap();
            assert_eq!(
                contains_invertible(&homs).unwrap(),
                expect,
                "mu = {:?} vs {:?}",
                (a1, a2, a3, a4),
                (b1, b2, b3, b4)
            );
        }
    }

    #[test]
    fn hom_dimensions() {
        for (n, k) in [(1usize, 1u8), (2, 2)] {
            let a = q(n, k);
            for eps in [1i64, -1] {
                for delta in [1i64, -1] {
                    let pe = projective_cover(&a, SimpleLabel::X0(eps)).unwrap();
                    let pd = projective_cover(&a, SimpleLabel::X0(delta)).unwrap();
                    assert_eq!(hom_dim(&pe, &pd).unwrap(), 1 << (2 * n - 1));
                }
            }
            let x0p = simple_module(&a, SimpleLabel::X0(1)).unwrap();
            let x0m = simple_module(&a, SimpleLabel::X0(-1)).unwrap();
            assert_eq!(hom_dim(&x0p, &x0m).unwrap(), 0);
            let x1p = simple_module(&a, SimpleLabel::X1(1)).unwrap();
            assert_eq!(hom_dim(&x1p, &x1p).unwrap(), 1);
        }
    }

    #[test]
    fn grothendieck_classes() {
        let a = q(1, 1);
        // X0- (x) X0- has the class of the unit
        let x0m = simple_module(&a, SimpleLabel::X0(-1)).unwrap();
        let t = tensor_rep(&a, &x0m, &x0m).unwrap();
        assert_eq!(grothendieck_class(&a, &t).unwrap(), [1, 0, 0, 0]);
        // X1^nu (x) X1^rho has the class of P0^{nu rho}
        for nu in [1i64, -1] {
            for rho in [1i64, -1] {
                let xn = simple_module(&a, SimpleLabel::X1(nu)).unwrap();
                let xr = simple_module(&a, SimpleLabel::X1(rho)).unwrap();
                let t = tensor_rep(&a, &xn, &xr).unwrap();
                let half = 1usize << (2 * a.n() - 1);
                assert_eq!(grothendieck_class(&a, &t).unwrap(), [half, half, 0, 0]);
                let p = projective_cover(&a, SimpleLabel::X0(nu * rho)).unwrap();
                assert_eq!(
                    grothendieck_class(&a, &t).unwrap(),
                    grothendieck_class(&a, &p).unwrap()
                );
            }
        }
        // V (x) X0+ keeps the class of V
        let x1p = simple_module(&a, SimpleLabel::X1(1)).unwrap();
        let x0p = simple_module(&a, SimpleLabel::X0(1)).unwrap();
        let t = tensor_rep(&a, &x1p, &x0p).unwrap();
        assert_eq!(grothendieck_class(&a, &t).unwrap(), [0, 0, 1, 0]);
    }

    #[test]
    fn mu_lift_composition_series() {
        let a = q(2, 2);
        let rep = p_mu(&a, &MuMatrix::from_ints(1, 0, 0, 1)).unwrap();
        assert_eq!(multiplicity(&a, &rep, SimpleLabel::X0(1)).unwrap(), 2);
        assert_eq!(multiplicity(&a, &rep, SimpleLabel::X0(-1)).unwrap(), 2);
        assert_eq!(multiplicity(&a, &rep, SimpleLabel::X1(1)).unwrap(), 0);
    }

    #[test]
    fn restriction_of_trivial() {
        let a = q(2, 2);
        let x0p = simple_module(&a, SimpleLabel::X0(1)).unwrap();
        let r = restrict(&a, &x0p).unwrap();
        assert_eq!(r.dim, 1);
        assert_eq!(r.tag, AlgebraTag::Sub);
    }
}
