//! Sparse contraction of braid words.
//!
//! A basis state of `V^{⊗n}` is packed into a `u64`, one fixed-width digit per
//! strand position.  Applying a crossing only touches two digits, so a
//! state vector is pushed through the word one gate at a time; the full
//! `d^n × d^n` operator is never formed.  For a diagonal entry, once a strand
//! is no longer touched by any remaining gate its digit must already agree
//! with the target, which prunes most of the branching near the end of the
//! word.

use rayon::prelude::*;

use super::{RMatrixDatum, StateSumError};
use crate::braid::BraidWord;
use crate::laurent::{ChargedLaurent, LaurentPoly};

pub(crate) struct Gate {
    d: usize,
    cols: Vec<Vec<(u64, u64, LaurentPoly)>>,
}

impl Gate {
    pub(crate) fn new(op: &super::SparseOperator, d: usize) -> Gate {
        let cols = (0..d * d)
            .map(|c| {
                op.column(c)
                    .iter()
                    .map(|(r, v)| ((*r as usize / d) as u64, (*r as usize % d) as u64, v.poly.clone()))
                    .collect()
            })
            .collect();
        Gate { d, cols }
    }
}

pub(crate) struct Layout {
    bits: u32,
    mask: u64,
}

impl Layout {
    pub(crate) fn new(d: usize, strands: usize) -> Result<Layout, StateSumError> {
        let bits = usize::BITS - (d.max(2) - 1).leading_zeros();
        if bits as usize * strands > 64 {
            return Err(StateSumError::TooLarge { strands, dim: d });
        }
        Ok(Layout { bits, mask: (1u64 << bits) - 1 })
    }

    #[inline]
    fn digit(&self, state: u64, p: usize) -> usize {
        ((state >> (self.bits as usize * p)) & self.mask) as usize
    }

    pub(crate) fn encode(&self, digits: &[usize]) -> u64 {
        digits
            .iter()
            .enumerate()
            .fold(0u64, |acc, (p, &x)| acc | ((x as u64) << (self.bits as usize * p)))
    }

    fn strand_mask(&self, p: usize) -> u64 {
        self.mask << (self.bits as usize * p)
    }
}

fn merge_runs(mut v: Vec<(u64, LaurentPoly)>) -> Vec<(u64, LaurentPoly)> {
    v.sort_unstable_by_key(|e| e.0);
    let mut out: Vec<(u64, LaurentPoly)> = Vec::with_capacity(v.len());
    for (k, p) in v {
        match out.last_mut() {
            Some((lk, lp)) if *lk == k => lp.add_assign_ref(&p),
            _ => out.push((k, p)),
        }
    }
    out.retain(|(_, p)| !p.is_zero());
    out
}

/// A braid word compiled against one datum.
pub(crate) struct Program<'a> {
    layout: Layout,
    steps: Vec<(usize, &'a Gate)>,
    /// After step `t`, digits under `frozen[t]` can no longer change.
    frozen: Vec<u64>,
}

impl<'a> Program<'a> {
    pub(crate) fn new(b: &BraidWord, pos: &'a Gate, neg: &'a Gate) -> Result<Self, StateSumError> {
        let d = pos.d;
        let n = b.strands();
        let layout = Layout::new(d, n)?;
        let steps: Vec<(usize, &Gate)> = b
            .word()
            .iter()
            .map(|&g| (g.unsigned_abs() as usize - 1, if g > 0 { pos } else { neg }))
            .collect();
        let all: u64 = (0..n).fold(0, |m, p| m | layout.strand_mask(p));
        let mut frozen = vec![0u64; steps.len()];
        let mut live = 0u64;
        for t in (0..steps.len()).rev() {
            frozen[t] = all & !live;
            let p = steps[t].0;
            live |= layout.strand_mask(p) | layout.strand_mask(p + 1);
        }
        Ok(Program { layout, steps, frozen })
    }

    fn apply(&self, cur: Vec<(u64, LaurentPoly)>, t: usize, target: Option<u64>) -> Vec<(u64, LaurentPoly)> {
        let (p, gate) = self.steps[t];
        let d = gate.d;
        let bits = self.layout.bits as usize;
        let shift = bits * p;
        let clear = !(self.layout.strand_mask(p) | self.layout.strand_mask(p + 1));
        let mut next = Vec::with_capacity(cur.len() * 2);
        for (x, amp) in cur {
            let a = self.layout.digit(x, p);
            let b = self.layout.digit(x, p + 1);
            let base = x & clear;
            for (a2, b2, c) in &gate.cols[a * d + b] {
                let y = base | (a2 << shift) | (b2 << (shift + bits));
                if let Some(s) = target {
                    if (y ^ s) & self.frozen[t] != 0 {
                        continue;
                    }
                }
                next.push((y, &amp * c));
            }
        }
        merge_runs(next)
    }

    /// `⟨x| ρ(b) |x⟩`
    pub(crate) fn diagonal(&self, x: u64) -> LaurentPoly {
        let mut cur = vec![(x, LaurentPoly::one())];
        for t in 0..self.steps.len() {
            cur = self.apply(cur, t, Some(x));
            if cur.is_empty() {
                return LaurentPoly::zero();
            }
        }
        cur.into_iter().find(|(k, _)| *k == x).map(|(_, p)| p).unwrap_or_default()
    }

    /// `ρ(b) |x⟩` as a sparse vector.
    pub(crate) fn column(&self, x: u64) -> Vec<(u64, LaurentPoly)> {
        let mut cur = vec![(x, LaurentPoly::one())];
        for t in 0..self.steps.len() {
            cur = self.apply(cur, t, None);
        }
        cur
    }

    pub(crate) fn layout(&self) -> &Layout {
        &self.layout
    }
}

/// Enumerates all digit vectors of length `n` over `0..d` with position
/// `fixed.0` pinned to `fixed.1` (if any).
fn basis_states(layout: &Layout, d: usize, n: usize, fixed: Option<(usize, usize)>) -> Vec<(u64, Vec<usize>)> {
    let free: Vec<usize> = (0..n).filter(|&p| fixed.map_or(true, |f| f.0 != p)).collect();
    let total = d.pow(free.len() as u32);
    (0..total)
        .map(|mut k| {
            let mut digits = vec![0usize; n];
            if let Some((p, v)) = fixed {
                digits[p] = v;
            }
            for &p in &free {
                digits[p] = k % d;
                k /= d;
            }
            (layout.encode(&digits), digits)
        })
        .collect()
}

fn closure_sum(
    datum: &RMatrixDatum,
    b: &BraidWord,
    fixed: Option<(usize, usize)>,
) -> Result<LaurentPoly, StateSumError> {
    let prog = Program::new(b, &datum.pos_gate, &datum.neg_gate)?;
    let n = b.strands();
    let d = datum.dim();
    let states = basis_states(prog.layout(), d, n, fixed);
    let mu = datum.mu_polys();
    let parts: Vec<LaurentPoly> = states
        .par_iter()
        .map(|(x, digits)| {
            let amp = prog.diagonal(*x);
            if amp.is_zero() {
                return amp;
            }
            let weight = digits
                .iter()
                .enumerate()
                .filter(|(p, _)| fixed.map_or(true, |f| f.0 != *p))
                .fold(LaurentPoly::one(), |acc, (_, &j)| &acc * &mu[j]);
            &amp * &weight
        })
        .collect();
    Ok(parts.into_iter().sum())
}

fn word_charge(datum: &RMatrixDatum, b: &BraidWord) -> i32 {
    b.word()
        .iter()
        .map(|&g| if g > 0 { datum.r_charge } else { -datum.r_charge })
        .sum()
}

/// The (1,1)-tangle scalar with strand position `open` (0-based, at the
/// bottom of the braid) left open and every other strand closed through the
/// enhancement.  The open strand carries basis label 0; by simplicity of the
/// color every label gives the same scalar.  Blackboard framings are removed
/// with the twist.
pub fn eval_link(b: &BraidWord, datum: &RMatrixDatum, open: usize) -> Result<ChargedLaurent, StateSumError> {
    if open >= b.strands() {
        return Err(StateSumError::OpenStrand { open, strands: b.strands() });
    }
    let raw = closure_sum(datum, b, Some((open, 0)))?;
    if debug_simple_check(b, datum) {
        let other = closure_sum(datum, b, Some((open, 1)))?;
        if other != raw {
            return Err(StateSumError::InvariantViolation(format!(
                "open-strand labels 0 and 1 disagree on {b}: {raw} vs {other}"
            )));
        }
    }
    let framing: i32 = b.self_framings().iter().sum();
    let correction = datum.twist.pow(-framing).map_err(|_| StateSumError::NonUnitTwist)?;
    Ok(&ChargedLaurent::new(word_charge(datum, b), raw) * &correction)
}

/// [`eval_link`] with the first strand open.
pub fn eval_tangle(b: &BraidWord, datum: &RMatrixDatum) -> Result<ChargedLaurent, StateSumError> {
    eval_link(b, datum, 0)
}

/// Whether closing every strand gives zero.
pub fn full_closure_is_zero(b: &BraidWord, datum: &RMatrixDatum) -> Result<bool, StateSumError> {
    Ok(closure_sum(datum, b, None)?.is_zero())
}

fn debug_simple_check(b: &BraidWord, datum: &RMatrixDatum) -> bool {
    std::env::var_os("LG_DEBUG_SIMPLE_CHECK").is_some()
        && datum.dim() > 1
        && (datum.dim() as f64).powi(b.strands() as i32 - 1) <= 1e5
}

/// The operator of a braid word on `V^{⊗n}`, one column per basis state.
/// Intended for identity checks on few strands.
pub fn braid_operator(b: &BraidWord, datum: &RMatrixDatum) -> Result<Vec<Vec<(u64, LaurentPoly)>>, StateSumError> {
    let prog = Program::new(b, &datum.pos_gate, &datum.neg_gate)?;
    let states = basis_states(prog.layout(), datum.dim(), b.strands(), None);
    Ok(states.iter().map(|(x, _)| prog.column(*x)).collect())
}
