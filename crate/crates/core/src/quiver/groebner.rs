//! Noncommutative Gröbner bases for two-sided ideals of a path algebra,
//! under the length-then-lexicographic order on arrow words.
//!
//! Relations are parallel combinations of nonempty words, so a polynomial
//! here is a map from words to coefficients and the constant paths never
//! appear.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::linalg::Field;

use super::presentation::Relation;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Word(pub Vec<usize>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) type Poly<E> = BTreeMap<Word, E>;

pub(crate) struct GroebnerBasis<F: Field> {
    field: F,
    elems: Vec<Poly<F::Elem>>,
    tips: HashMap<Vec<usize>, usize>,
}

impl<F: Field> GroebnerBasis<F> {
    /// Whether some tip occurs as a suffix of `word`.
    pub fn has_tip_suffix(&self, word: &[usize]) -> bool {
        (0..word.len()).any(|s| self.tips.contains_key(&word[s..]))
    }

    fn find_tip(&self, word: &[usize]) -> Option<(usize, usize)> {
        for start in 0..word.len() {
            for end in start + 1..=word.len() {
                if let Some(&g) = self.tips.get(&word[start..end]) {
                    return Some((g, start));
                }
            }
        }
        None
    }

    /// Full reduction to a combination of normal words.
    pub fn reduce(&self, mut p: Poly<F::Elem>) -> Poly<F::Elem> {
        let f = &self.field;
        let mut out = Poly::new();
        while let Some((w, c)) = p.pop_last() {
            let Some((g, start)) = self.find_tip(&w.0) else {
                out.insert(w, c);
                continue;
            };
            let g = &self.elems[g];
            let tip_len = g.last_key_value().unwrap().0 .0.len();
            let (prefix, suffix) = (&w.0[..start], &w.0[start + tip_len..]);
            for (gw, gc) in g.iter().rev().skip(1) {
                let mut word = prefix.to_vec();
                word.extend_from_slice(&gw.0);
                word.extend_from_slice(suffix);
                add_term(f, &mut p, Word(word), &f.neg(&f.mul(&c, gc)));
            }
        }
        out
    }

    fn insert(&mut self, g: Poly<F::Elem>) {
        let tip = g.last_key_value().unwrap().0 .0.clone();
        self.tips.insert(tip, self.elems.len());
        self.elems.push(g);
    }

    fn rebuild_tips(&mut self) {
        self.tips = self
            .elems
            .iter()
            .enumerate()
            .map(|(i, g)| (g.last_key_value().unwrap().0 .0.clone(), i))
            .collect();
    }
}

fn add_term<F: Field>(f: &F, p: &mut Poly<F::Elem>, w: Word, c: &F::Elem) {
    if f.is_zero(c) {
        return;
    }
    match p.get_mut(&w) {
        Some(v) => {
            *v = f.add(v, c);
            if f.is_zero(v) {
                p.remove(&w);
            }
        }
        None => {
            p.insert(w, c.clone());
        }
    }
}

fn monic<F: Field>(f: &F, p: Poly<F::Elem>) -> Poly<F::Elem> {
    let lead = p.last_key_value().unwrap().1.clone();
    let inv = f.inv(&lead).unwrap();
    p.into_iter().map(|(w, c)| (w, f.mul(&c, &inv))).collect()
}

fn multiply<F: Field>(f: &F, left: &[usize], p: &Poly<F::Elem>, right: &[usize], c: &F::Elem, out: &mut Poly<F::Elem>) {
    for (w, x) in p {
        let mut word = left.to_vec();
        word.extend_from_slice(&w.0);
        word.extend_from_slice(right);
        add_term(f, out, Word(word), &f.mul(c, x));
    }
}

/// S-polynomials from proper overlaps where a suffix of tip(g) is a prefix of tip(h).
fn overlaps<F: Field>(f: &F, g: &Poly<F::Elem>, h: &Poly<F::Elem>) -> Vec<Poly<F::Elem>> {
    let u = &g.last_key_value().unwrap().0 .0;
    let v = &h.last_key_value().unwrap().0 .0;
    let mut out = Vec::new();
    for k in 1..u.len().min(v.len()) {
        if u[u.len() - k..] == v[..k] {
            let mut s = Poly::new();
            multiply(f, &[], g, &v[k..], &f.one(), &mut s);
            multiply(f, &u[..u.len() - k], h, &[], &f.neg(&f.one()), &mut s);
            if !s.is_empty() {
                out.push(s);
            }
        }
    }
    out
}

pub(crate) fn relation_poly<F: Field>(f: &F, rel: &Relation) -> Poly<F::Elem> {
    let mut p = Poly::new();
    for (c, w) in &rel.terms {
        add_term(f, &mut p, Word(w.clone()), &f.from_i64(*c));
    }
    p
}

/// Buchberger completion. Fails once a tip longer than `cap` appears.
pub(crate) fn groebner_basis<F: Field>(
    field: &F,
    relations: &[Relation],
    cap: usize,
) -> Result<GroebnerBasis<F>> {
    let mut gb = GroebnerBasis { field: field.clone(), elems: Vec::new(), tips: HashMap::new() };
    let mut queue: VecDeque<Poly<F::Elem>> = relations.iter().map(|r| relation_poly(field, r)).collect();
    loop {
        while let Some(p) = queue.pop_front() {
            let r = gb.reduce(p);
            if r.is_empty() {
                continue;
            }
            let r = monic(field, r);
            let tip = r.last_key_value().unwrap().0 .0.clone();
            if tip.len() > cap {
                return Err(Error::NonAdmissible { cap });
            }
            // Elements whose tip is now reducible go back through the queue.
            let (keep, redo): (Vec<_>, Vec<_>) = std::mem::take(&mut gb.elems)
                .into_iter()
                .partition(|g| !contains(&g.last_key_value().unwrap().0 .0, &tip));
            gb.elems = keep;
            gb.rebuild_tips();
            queue.extend(redo);
            for g in &gb.elems {
                queue.extend(overlaps(field, g, &r));
                queue.extend(overlaps(field, &r, g));
            }
            queue.extend(overlaps(field, &r, &r));
            gb.insert(r);
        }
        // Confirm the overlap criterion on the final set.
        for i in 0..gb.elems.len() {
            for j in 0..gb.elems.len() {
                for s in overlaps(field, &gb.elems[i], &gb.elems[j]) {
                    if !gb.reduce(s.clone()).is_empty() {
                        queue.push_back(s);
                    }
                }
            }
        }
        if queue.is_empty() {
            break;
        }
    }
    interreduce(&mut gb);
    Ok(gb)
}

fn contains(haystack: &[usize], needle: &[usize]) -> bool {
    needle.len() <= haystack.len() && haystack.windows(needle.len()).any(|w| w == needle)
}

/// Reduce every non-leading part, giving the reduced basis.
fn interreduce<F: Field>(gb: &mut GroebnerBasis<F>) {
    for i in 0..gb.elems.len() {
        let mut g = gb.elems[i].clone();
        let (tip, c) = g.pop_last().unwrap();
        let mut rest = gb.reduce(g);
        rest.insert(tip, c);
        gb.elems[i] = rest;
    }
}
