//! Sparse elements of tensor powers of the algebra, with leg-wise operations.

use std::collections::BTreeMap;
use std::fmt;

use super::{word_mul, Algebra, AlgebraElement, AlgebraId, BasisWord};
use crate::scalars::CycScalar;
use crate::{Error, Result};

/// Structure map applied to a single tensor leg.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LegMap {
    Antipode,
    AntipodeInv,
    Coproduct,
    Counit,
}

/// Sparse element of the `arity`-fold tensor power of one algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    pub id: AlgebraId,
    arity: usize,
    terms: BTreeMap<Vec<BasisWord>, CycScalar>,
}

impl TensorElement {
    pub fn zero(id: AlgebraId, arity: usize) -> Self {
        assert!(arity >= 1);
        TensorElement {
            id,
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(id: AlgebraId, arity: usize) -> Self {
        Self::pure(id, vec![BasisWord::unit(); arity], CycScalar::one())
    }

    pub fn pure(id: AlgebraId, legs: Vec<BasisWord>, c: CycScalar) -> Self {
        let arity = legs.len();
        let mut t = Self::zero(id, arity);
        t.add_term(legs, c);
        t
    }

    /// Outer product of algebra elements, one per leg.
    pub fn outer(a: &AlgebraElement, b: &AlgebraElement) -> Self {
        assert_eq!(a.id, b.id, "algebra mismatch");
        let mut t = Self::zero(a.id, 2);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                t.add_term(vec![*wa, *wb], ca * cb);
            }
        }
        t
    }

    pub fn outer3(a: &AlgebraElement, b: &AlgebraElement, c: &AlgebraElement) -> Self {
        assert_eq!(a.id, b.id);
        assert_eq!(a.id, c.id);
        let mut t = Self::zero(a.id, 3);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                let cab = ca * cb;
                for (wc, cc) in c.terms() {
                    t.add_term(vec![*wa, *wb, *wc], &cab * cc);
                }
            }
        }
        t
    }

    pub fn from_algebra(a: &AlgebraElement) -> Self {
        let mut t = Self::zero(a.id, 1);
        for (w, c) in a.terms() {
            t.add_term(vec![*w], c.clone());
        }
        t
    }

    pub fn into_algebra(&self) -> AlgebraElement {
        assert_eq!(self.arity, 1);
        let mut out = AlgebraElement::zero(self.id);
        for (legs, c) in &self.terms {
            out.add_term(legs[0], c.clone());
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<BasisWord>, &CycScalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, legs: Vec<BasisWord>, c: CycScalar) {
        assert_eq!(legs.len(), self.arity, "arity mismatch");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(legs) {
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

    pub fn scale(&self, s: &CycScalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.id, self.arity);
        }
        let mut out = Self::zero(self.id, self.arity);
        for (legs, c) in &self.terms {
            out.terms.insert(legs.clone(), c * s);
        }
        out
    }

    pub fn checked_mul(&self, rhs: &TensorElement) -> Result<TensorElement> {
        if self.id != rhs.id {
            return Err(Error::AlgebraMismatch);
        }
        if self.arity != rhs.arity {
            return Err(Error::ArityMismatch(self.arity, rhs.arity));
        }
        Ok(self * rhs)
    }

    /// Swap the two legs of an arity-2 element.
    pub fn swap(&self) -> Self {
        assert_eq!(self.arity, 2);
        let mut out = Self::zero(self.id, 2);
        for (legs, c) in &self.terms {
            out.add_term(vec![legs[1], legs[0]], c.clone());
        }
        out
    }

    /// Leg subscript notation `X_{i1 i2 ...}` for increasing subscripts and
    /// for permutations alike: slot `s` of the result holds the component
    /// whose subscript is listed at position `s`; slots not listed hold the
    /// unit. `subscript(&[1,3], 3)` is `X_{13}`, `subscript(&[2,3,1], 3)`
    /// puts component 2 in slot 1, component 3 in slot 2 and component 1 in
    /// slot 3.
    pub fn subscript(&self, subs: &[usize], arity: usize) -> Self {
        assert_eq!(subs.len(), self.arity);
        if self.arity == arity {
            // permutation: slot s holds component subs[s], i.e. component a
            // goes to the slot where a is listed
            let mut to_slot = vec![0usize; self.arity];
            for (slot, &comp) in subs.iter().enumerate() {
                to_slot[comp - 1] = slot + 1;
            }
            self.place_legs(&to_slot, arity)
        } else {
            // embedding with increasing subscripts: component a -> slot subs[a]
            debug_assert!(subs.windows(2).all(|w| w[0] < w[1]));
            self.place_legs(subs, arity)
        }
    }

    /// Embed into a larger tensor power: component `a` of `self` goes to leg
    /// `positions[a]` (1-based), all other legs are units.
    pub fn place_legs(&self, positions: &[usize], arity: usize) -> Self {
        assert_eq!(positions.len(), self.arity);
        assert!(positions.iter().all(|&p| p >= 1 && p <= arity));
        let mut out = Self::zero(self.id, arity);
        for (legs, c) in &self.terms {
            let mut new_legs = vec![BasisWord::unit(); arity];
            for (a, &p) in positions.iter().enumerate() {
                new_legs[p - 1] = legs[a];
            }
            out.add_term(new_legs, c.clone());
        }
        out
    }

    /// Apply a structure map to one leg (0-based). `Coproduct` raises the
    /// arity by one (splicing in place), `Counit` lowers it.
    pub fn apply_leg(&self, alg: &Algebra, leg: usize, map: LegMap) -> TensorElement {
        assert_eq!(self.id, alg.id());
        assert!(leg < self.arity);
        match map {
            LegMap::Counit => {
                assert!(self.arity >= 2, "counit would empty the tensor");
                let mut out = Self::zero(self.id, self.arity - 1);
                for (legs, c) in &self.terms {
                    if legs[leg].is_fermion_free() {
                        let mut new_legs = legs.clone();
                        new_legs.remove(leg);
                        out.add_term(new_legs, c.clone());
                    }
                }
                out
            }
            LegMap::Coproduct => {
                let mut out = Self::zero(self.id, self.arity + 1);
                let mut cache: BTreeMap<BasisWord, TensorElement> = BTreeMap::new();
                for (legs, c) in &self.terms {
                    let image = cache.entry(legs[leg]).or_insert_with(|| {
                        alg.coproduct(&AlgebraElement::from_word(
                            self.id,
                            legs[leg],
                            CycScalar::one(),
                        ))
                    });
                    for (im_legs, ic) in image.terms() {
                        let mut new_legs = Vec::with_capacity(self.arity + 1);
                        new_legs.extend_from_slice(&legs[..leg]);
                        new_legs.extend_from_slice(im_legs);
                        new_legs.extend_from_slice(&legs[leg + 1..]);
                        out.add_term(new_legs, c * ic);
                    }
                }
                out
            }
            LegMap::Antipode | LegMap::AntipodeInv => {
                let mut out = Self::zero(self.id, self.arity);
                let mut cache: BTreeMap<BasisWord, AlgebraElement> = BTreeMap::new();
                for (legs, c) in &self.terms {
                    let image = cache.entry(legs[leg]).or_insert_with(|| {
                        let x = AlgebraElement::from_word(self.id, legs[leg], CycScalar::one());
                        match map {
                            LegMap::Antipode => alg.antipode(&x),
                            _ => alg.antipode_inv(&x),
                        }
                    });
                    for (w, ic) in image.terms() {
                        let mut new_legs = legs.clone();
                        new_legs[leg] = *w;
                        out.add_term(new_legs, c * ic);
                    }
                }
                out
            }
        }
    }

    /// Apply an arbitrary linear word map to one leg, keeping the arity.
    pub fn map_leg(&self, leg: usize, f: impl Fn(&BasisWord) -> AlgebraElement) -> TensorElement {
        assert!(leg < self.arity);
        let mut out = Self::zero(self.id, self.arity);
        let mut cache: BTreeMap<BasisWord, AlgebraElement> = BTreeMap::new();
        for (legs, c) in &self.terms {
            let image = cache.entry(legs[leg]).or_insert_with(|| f(&legs[leg]));
            for (w, ic) in image.terms() {
                let mut new_legs = legs.clone();
                new_legs[leg] = *w;
                out.add_term(new_legs, c * ic);
            }
        }
        out
    }

    /// Contract one leg against a linear form, lowering the arity.
    pub fn contract_form_leg(
        &self,
        leg: usize,
        form: impl Fn(&BasisWord) -> CycScalar,
    ) -> TensorElement {
        assert!(self.arity >= 2 && leg < self.arity);
        let mut out = Self::zero(self.id, self.arity - 1);
        for (legs, c) in &self.terms {
            let v = form(&legs[leg]);
            if v.is_zero() {
                continue;
            }
            let mut new_legs = legs.clone();
            new_legs.remove(leg);
            out.add_term(new_legs, c * &v);
        }
        out
    }

    /// Counit on a leg of an arity-2 element, returning an algebra element.
    pub fn contract_counit_leg(&self, _alg: &Algebra, leg: usize) -> AlgebraElement {
        assert_eq!(self.arity, 2);
        let mut out = AlgebraElement::zero(self.id);
        for (legs, c) in &self.terms {
            if legs[leg].is_fermion_free() {
                out.add_term(legs[1 - leg], c.clone());
            }
        }
        out
    }

    /// Multiply all legs together left-to-right inside the algebra.
    pub fn multiply_legs(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.id);
        for (legs, c) in &self.terms {
            let mut acc: Vec<(BasisWord, CycScalar)> = vec![(legs[0], c.clone())];
            for w in &legs[1..] {
                let mut next = Vec::new();
                for (aw, ac) in &acc {
                    for (rw, rc) in word_mul(aw, w) {
                        next.push((rw, &rc * ac));
                    }
                }
                acc = next;
            }
            for (w, c) in acc {
                out.add_term(w, c);
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(legs, c)| {
                let words: Vec<serde_json::Value> = legs
                    .iter()
                    .map(|w| serde_json::Value::String(w.render()))
                    .collect();
                serde_json::json!([words, c.to_json()])
            })
            .collect();
        serde_json::Value::Array(terms)
    }
}

impl std::ops::Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        assert_eq!(self.id, rhs.id, "algebra mismatch");
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = self.clone();
        for (legs, c) in &rhs.terms {
            out.add_term(legs.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        assert_eq!(self.id, rhs.id, "algebra mismatch");
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = self.clone();
        for (legs, c) in &rhs.terms {
            out.add_term(legs.clone(), -c);
        }
        out
    }
}

impl std::ops::Mul for &TensorElement {
    type Output = TensorElement;
    /// Component-wise product: `(a (x) b)(c (x) d) = ac (x) bd`.
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        assert_eq!(self.id, rhs.id, "algebra mismatch");
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = TensorElement::zero(self.id, self.arity);
        for (la, ca) in &self.terms {
            for (lb, cb) in &rhs.terms {
                // expand the per-leg word products
                let mut partial: Vec<(Vec<BasisWord>, CycScalar)> =
                    vec![(Vec::with_capacity(self.arity), ca * cb)];
                for leg in 0..self.arity {
                    let branches = word_mul(&la[leg], &lb[leg]);
                    if branches.is_empty() {
                        partial.clear();
                        break;
                    }
                    let mut next = Vec::with_capacity(partial.len() * branches.len());
                    for (legs, c) in &partial {
                        for (w, bc) in &branches {
                            let mut nl = legs.clone();
                            nl.push(*w);
                            next.push((nl, c * bc));
                        }
                    }
                    partial = next;
                }
                for (legs, c) in partial {
                    out.add_term(legs, c);
                }
            }
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(legs, c)| {
                let legs: Vec<String> = legs.iter().map(|w| w.render()).collect();
                format!("({}) {}", c, legs.join(" (x) "))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
