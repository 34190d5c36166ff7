//! Fixpoint word rewriting for `U_q(sl2)`.
//!
//! Independent of [`AlgElement`] multiplication: words are rewritten one
//! redex at a time until none remain. Two redex-selection strategies exist so
//! the normal form can be checked for independence of rewrite order.

use std::collections::BTreeMap;

use super::element::{AlgElement, Monomial};
use crate::scalar::ExtScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    F,
    K,
    KInv,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

type Word = Vec<Letter>;

/// One rewrite step for an adjacent pair, or `None` if the pair is in order.
fn rewrite_pair(x: Letter, y: Letter) -> Option<Vec<(ExtScalar, Word)>> {
    use Letter::*;
    let q = |e| ExtScalar::q_pow(e);
    let out = match (x, y) {
        (E, F) => {
            let t = (&q(1) - &q(-1)).inv().expect("nonzero");
            vec![(ExtScalar::one(), vec![F, E]), (t.clone(), vec![K, K]), (-t, vec![KInv, KInv])]
        }
        (E, K) => vec![(q(-1), vec![K, E])],
        (E, KInv) => vec![(q(1), vec![KInv, E])],
        (K, F) => vec![(q(-1), vec![F, K])],
        (KInv, F) => vec![(q(1), vec![F, KInv])],
        (K, KInv) | (KInv, K) => vec![(ExtScalar::one(), vec![])],
        _ => return None,
    };
    Some(out)
}

fn find_redex(w: &[Letter], strategy: Strategy) -> Option<usize> {
    let is_redex = |i: &usize| rewrite_pair(w[*i], w[*i + 1]).is_some();
    let n = w.len().saturating_sub(1);
    match strategy {
        Strategy::Leftmost => (0..n).find(is_redex),
        Strategy::Rightmost => (0..n).rev().find(is_redex),
    }
}

/// Normal form of a linear combination of words.
pub fn normalize_words(input: &[(ExtScalar, Vec<Letter>)], strategy: Strategy) -> AlgElement {
    let mut pending: BTreeMap<Word, ExtScalar> = BTreeMap::new();
    let push = |map: &mut BTreeMap<Word, ExtScalar>, w: Word, c: ExtScalar| {
        let entry = map.entry(w).or_default();
        *entry = &*entry + &c;
    };
    for (c, w) in input {
        push(&mut pending, w.clone(), c.clone());
    }
    let mut out = AlgElement::zero();
    while let Some((w, c)) = pending.pop_first() {
        if c.is_zero() {
            continue;
        }
        match find_redex(&w, strategy) {
            None => out.add_term(to_monomial(&w), c),
            Some(i) => {
                for (x, mid) in rewrite_pair(w[i], w[i + 1]).unwrap() {
                    let mut nw = w[..i].to_vec();
                    nw.extend(mid);
                    nw.extend_from_slice(&w[i + 2..]);
                    push(&mut pending, nw, &c * &x);
                }
            }
        }
    }
    out
}

pub fn normalize_word(w: &[Letter], strategy: Strategy) -> AlgElement {
    normalize_words(&[(ExtScalar::one(), w.to_vec())], strategy)
}

fn to_monomial(w: &[Letter]) -> Monomial {
    let mut m = Monomial::ONE;
    for l in w {
        match l {
            Letter::F => m.f += 1,
            Letter::K => m.k += 1,
            Letter::KInv => m.k -= 1,
            Letter::E => m.e += 1,
        }
    }
    m
}

/// Product of the letters computed through [`AlgElement`] multiplication.
pub fn multiply_letters(w: &[Letter]) -> AlgElement {
    w.iter().fold(AlgElement::one(), |acc, l| {
        let g = match l {
            Letter::F => AlgElement::f(),
            Letter::K => AlgElement::k(),
            Letter::KInv => AlgElement::k_inv(),
            Letter::E => AlgElement::e(),
        };
        &acc * &g
    })
}
