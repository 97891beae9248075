//! Tensor product decompositions of typical modules, read off from characters.
//!
//! A weight `(λ₁, α·x + a)` is recorded as the monomial `t^{xα} X^{λ₁ + a} Y^a`
//! (stored in a [`LaurentPoly`] with `X` in the `s` slot and `Y` in the `q`
//! slot, the `α`-multiple `x` kept separately).  In these variables
//!
//! ```text
//! ch V(n, α + r) = t^α (XY)^r s_n(X, Y) (1 + X)(1 + Y),   s_n = Σ_{i=0}^{n} X^{n-i} Y^i,
//! ```
//!
//! and distinct typical modules have linearly independent characters, so a
//! product decomposes greedily from its highest term.

use std::collections::BTreeMap;

use super::module::WeightModule;
use super::RepError;
use crate::laurent::{Coeff, LaurentPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    /// The multiple of `α` shared by every weight.
    pub alpha_multiple: i32,
    pub poly: LaurentPoly,
}

impl Character {
    /// The closed-form character of `V(n, xα + r)`.
    pub fn typical(n: u32, alpha_multiple: i32, offset: i32) -> Character {
        let schur: LaurentPoly = (0..=n as i32).map(|i| LaurentPoly::mono(1, n as i32 - i, i)).sum();
        let one = LaurentPoly::one();
        let factor = &(&one + &LaurentPoly::mono(1, 1, 0)) * &(&one + &LaurentPoly::mono(1, 0, 1));
        Character { alpha_multiple, poly: (&schur * &factor).mul_mono(crate::laurent::Mono::new(offset, offset)) }
    }

    /// The character read off the weights of a constructed module.
    pub fn of_module(v: &WeightModule) -> Character {
        let poly = (0..v.dim())
            .map(|idx| {
                let (l1, a) = v.weight(idx);
                LaurentPoly::mono(1, l1 + a, a)
            })
            .sum();
        Character { alpha_multiple: 1, poly }
    }

    pub fn product(&self, other: &Character) -> Character {
        Character { alpha_multiple: self.alpha_multiple + other.alpha_multiple, poly: &self.poly * &other.poly }
    }
}

/// Summands `V(k, xα + r)` with multiplicities, keyed by `(k, r)`.
pub type Decomposition = BTreeMap<(u32, i32), u32>;

/// Greedy subtraction of typical characters, highest `X`-degree (then lowest
/// `Y`-degree) first.
pub fn decompose(ch: &Character) -> Result<Decomposition, RepError> {
    let mut rest = ch.poly.clone();
    let mut out = Decomposition::new();
    while !rest.is_zero() {
        let (m, c) = rest
            .terms()
            .iter()
            .max_by_key(|(m, _)| (m.s(), -m.q()))
            .cloned()
            .expect("non-empty remainder");
        let (u, v) = (m.s(), m.q());
        let k = u - v - 1;
        let mult = c.to_i64().filter(|&x| x > 0);
        let (Some(mult), true) = (mult, k >= 0) else {
            return Err(RepError::CharacterResidue(format!("cannot peel {c}·X^{u}Y^{v} from {rest}")));
        };
        let summand = Character::typical(k as u32, ch.alpha_multiple, v);
        rest = &rest - &summand.poly.scale(&Coeff::from(mult));
        *out.entry((k as u32, v)).or_default() += mult as u32;
    }
    Ok(out)
}

/// `V(n, α + i) ⊗ V(m, α + j)` (or, with distinct generic parameters, any
/// two colors whose generic parts add): summands keyed by `(k, r)` meaning
/// `V(k, γ + r)` with `γ` the sum of the generic parts and `i + j` folded into `r`.
pub fn fuse(v: (u32, i32), w: (u32, i32)) -> Result<Decomposition, RepError> {
    let ch = Character::typical(v.0, 1, v.1).product(&Character::typical(w.0, 1, w.1));
    decompose(&ch)
}

/// Decomposition of `V(0, α)^{⊗n}`.
pub fn tensor_power_of_generator(n: u32) -> Result<Decomposition, RepError> {
    let base = Character::typical(0, 1, 0);
    let ch = (1..n).fold(base.clone(), |acc, _| acc.product(&base));
    decompose(&ch)
}

/// The closed fusion rule for `V(n, α) ⊗ V(m, β)`, `γ = α + β`:
///
/// ```text
/// V(n+m+1, γ) ⊕ ⊕_{k=|n-m|}^{n+m} [ V(k, γ+μ+⌊(2+|n-m|-k)/2⌋) ⊕ V(k, γ+μ+⌊(1+|n-m|-k)/2⌋) ]
///             ⊕ (1 - δ_{n,m}) V(|n-m|-1, γ+1+μ),      μ = min(n, m).
/// ```
pub fn fusion_rule(n: u32, m: u32) -> Decomposition {
    let (n, m) = (n as i32, m as i32);
    let d = (n - m).abs();
    let mu = n.min(m);
    let mut out = Decomposition::new();
    let mut add = |k: i32, r: i32| *out.entry((k as u32, r)).or_default() += 1;
    add(n + m + 1, 0);
    for k in d..=n + m {
        add(k, mu + (2 + d - k).div_euclid(2));
        add(k, mu + (1 + d - k).div_euclid(2));
    }
    if n != m {
        add(d - 1, 1 + mu);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_square() {
        let d = fuse((0, 0), (0, 0)).unwrap();
        assert_eq!(d, [((0, 0), 1), ((0, 1), 1), ((1, 0), 1)].into());
    }

    #[test]
    fn rule_matches_characters() {
        for n in 0..=4 {
            for m in 0..=4 {
                assert_eq!(fuse((n, 0), (m, 0)).unwrap(), fusion_rule(n, m), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn residue_is_reported() {
        let ch = Character { alpha_multiple: 1, poly: LaurentPoly::one() };
        assert!(matches!(decompose(&ch), Err(RepError::CharacterResidue(_))));
    }
}
