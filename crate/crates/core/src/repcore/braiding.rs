//! The braiding `c_{V,W} = τ ∘ Υ ∘ Ř₂ Ř₁₂ Ř₁` and the scalars built from it.
//!
//! `Ř` is applied vector by vector over the rational functions; only its
//! output is required to be Laurent.  `Υ` carries the `q^{-2 α²}` factor as
//! charge.

use std::collections::BTreeMap;

use super::module::{scale, WeightModule};
use super::RepError;
use crate::laurent::{curly, curly_rat, mono_rat, qint, ChargedLaurent, LaurentPoly, RatFunc};
use crate::linalg::{self, RatMatrix};
use crate::statesum::{RMatrixDatum, SparseOperator};

type Vector = BTreeMap<(usize, usize), RatFunc>;

/// One summand `X ⊗ Y` of a quasi-R-matrix factor, with `Y`'s parity.
struct Term {
    x: RatMatrix,
    y: RatMatrix,
    odd: bool,
}

fn apply(terms: &[Term], v: &WeightModule, vec: &Vector) -> Vector {
    let mut out = Vector::new();
    for ((a, b), amp) in vec {
        for t in terms {
            let sign = t.odd && v.parity_of(*a) == 1;
            for (ra, row) in t.x.iter().enumerate() {
                if row[*a].is_zero() {
                    continue;
                }
                let xa = &row[*a] * amp;
                for (rb, yrow) in t.y.iter().enumerate() {
                    if yrow[*b].is_zero() {
                        continue;
                    }
                    let mut c = &xa * &yrow[*b];
                    if sign {
                        c = -c;
                    }
                    let slot = out.entry((ra, rb)).or_insert_with(RatFunc::zero);
                    *slot = &*slot + &c;
                }
            }
        }
    }
    out.retain(|_, x| !x.is_zero());
    out
}

fn identity_term(v: &WeightModule, w: &WeightModule) -> Term {
    Term { x: linalg::identity(v.dim()), y: linalg::identity(w.dim()), odd: false }
}

fn is_zero_matrix(m: &RatMatrix) -> bool {
    m.iter().all(|r| r.iter().all(RatFunc::is_zero))
}

/// `Ř₁ = Σ_i q^{i(i-1)/2} (q - q^{-1})^i / [i]! · E₁^i ⊗ F₁^i`, truncated at
/// the first power of `E₁` that vanishes on `V`.
fn r1_terms(v: &WeightModule, w: &WeightModule) -> Vec<Term> {
    let mut terms = vec![identity_term(v, w)];
    let qm = curly_rat(0, 1);
    let (mut ei, mut fi) = (linalg::identity(v.dim()), linalg::identity(w.dim()));
    let mut factorial = RatFunc::one();
    for i in 1.. {
        ei = linalg::matmul(&ei, &v.e1);
        fi = linalg::matmul(&fi, &w.f1);
        if is_zero_matrix(&ei) {
            break;
        }
        factorial = &factorial * &qint(0, i);
        let coeff = &(&mono_rat(0, i * (i - 1) / 2) * &qm.pow(i).unwrap()) / &factorial;
        terms.push(Term { x: scale(&ei, &coeff), y: fi.clone(), odd: false });
    }
    terms
}

fn odd_factor(v: &WeightModule, w: &WeightModule, x: RatMatrix, y: RatMatrix) -> Vec<Term> {
    let minus_qm = -curly_rat(0, 1);
    vec![identity_term(v, w), Term { x: scale(&x, &minus_qm), y, odd: true }]
}

/// `Υ(v ⊗ w) = q^{-(λ₁μ₂ + λ₂μ₁ + 2λ₂μ₂)}` with `λ₂ = α + a`, `μ₂ = α + b`.
fn upsilon(v: &WeightModule, w: &WeightModule, a: usize, b: usize) -> ChargedLaurent {
    let (l1, la) = v.weight(a);
    let (m1, mb) = w.weight(b);
    ChargedLaurent::new(-2, LaurentPoly::mono(1, -(l1 + m1) - 2 * (la + mb), -(l1 * mb + la * m1 + 2 * la * mb)))
}

/// `c_{V,W} : V ⊗ W → W ⊗ V`.  Both modules share the symbolic `α`; their
/// offsets may differ.
pub fn build_braiding(v: &WeightModule, w: &WeightModule) -> Result<SparseOperator, RepError> {
    let r1 = r1_terms(v, w);
    let r12 = odd_factor(v, w, v.e12(), w.f12());
    let r2 = odd_factor(v, w, v.e2.clone(), w.f2.clone());
    let (dv, dw) = (v.dim(), w.dim());
    let mut entries = Vec::new();
    for a in 0..dv {
        for b in 0..dw {
            let start: Vector = [((a, b), RatFunc::one())].into();
            let out = apply(&r2, v, &apply(&r12, v, &apply(&r1, v, &start)));
            for ((ra, rb), x) in out {
                let p = x.to_laurent().ok_or_else(|| RepError::NonLaurent(format!("Ř entry {x}")))?;
                let mut val = &upsilon(v, w, ra, rb) * &ChargedLaurent::uncharged(p);
                if v.parity_of(ra) == 1 && w.parity_of(rb) == 1 {
                    val = -&val;
                }
                entries.push((a * dw + b, rb * dv + ra, val));
            }
        }
    }
    Ok(SparseOperator::from_entries(dw * dv, dv * dw, entries)?)
}

/// The ribbon scalar `⟨θ_V⟩ = q^{-2(α+j)(n+α+j+1)}` for `V(n, α+j)`.
pub fn twist_scalar(v: &WeightModule) -> ChargedLaurent {
    let (n, j) = (v.n as i32, v.offset);
    ChargedLaurent::new(-2, LaurentPoly::mono(1, -2 * (n + 2 * j + 1), -2 * j * (n + j + 1)))
}

/// `μ_v = (-1)^{|v|} q^{-2λ₂(v)}`, the action of `K₂^{-2}` with the parity
/// sign from the right duality maps.
pub fn pivotal_enhancement(v: &WeightModule) -> Vec<ChargedLaurent> {
    (0..v.dim())
        .map(|idx| {
            let sign = if v.parity_of(idx) == 1 { -1 } else { 1 };
            ChargedLaurent::uncharged(LaurentPoly::mono(sign, -2, -2 * v.weight(idx).1))
        })
        .collect()
}

/// `ptr_2((1 ⊗ μ_W) op)` for `op ∈ End(V ⊗ W)`, as a `dim V × dim V` matrix.
fn partial_trace(op: &SparseOperator, mu: &[ChargedLaurent], dv: usize, dw: usize) -> Result<Vec<Vec<ChargedLaurent>>, RepError> {
    let mut out = vec![vec![ChargedLaurent::zero(); dv]; dv];
    for (c, r, x) in op.entries() {
        let (i, j) = (r / dw, r % dw);
        let (k, l) = (c / dw, c % dw);
        if j == l {
            out[i][k] = out[i][k].try_add(&(&mu[j] * x))?;
        }
    }
    Ok(out)
}

fn as_scalar(m: &[Vec<ChargedLaurent>]) -> Option<ChargedLaurent> {
    let x = m[0][0].clone();
    let ok = m.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(k, y)| if i == k { *y == x } else { y.is_zero() })
    });
    ok.then_some(x)
}

/// `θ_V = tr_R(c_{V,V})` with the pivotal enhancement, compared with
/// [`twist_scalar`].
pub fn twist_via_trace(v: &WeightModule) -> Result<ChargedLaurent, RepError> {
    let c = build_braiding(v, v)?;
    let t = partial_trace(&c, &pivotal_enhancement(v), v.dim(), v.dim())?;
    let got = as_scalar(&t).ok_or_else(|| RepError::TwistMismatch("tr_R(c) is not scalar".into()))?;
    let want = twist_scalar(v);
    if got != want {
        return Err(RepError::TwistMismatch(format!("trace {got} vs formula {want}")));
    }
    Ok(got)
}

/// The crossing datum of `V`: `c_{V,V} θ_V^{-1}` with the pivotal
/// enhancement, so that the twist is 1.
pub fn colored_datum(v: &WeightModule) -> Result<RMatrixDatum, RepError> {
    let theta_inv = twist_scalar(v).unit_inverse().expect("twist is a monomial");
    let r = build_braiding(v, v)?.scale(&theta_inv);
    let label = format!("V({},α{:+})", v.n, v.offset);
    Ok(RMatrixDatum::with_enhancement(label, v.dim(), r, pivotal_enhancement(v), ChargedLaurent::one())?)
}

/// `d(V_p(k, xα + r)) = (-1)^p {k+1} / ({xα + r}{xα + r + k + 1})`, with `p`
/// the absolute parity of the highest-weight vector.
pub fn modified_dimension(k: u32, alpha_multiple: i32, offset: i32, parity: u8) -> RatFunc {
    let k = k as i32;
    let sign = if parity % 2 == 1 { -1 } else { 1 };
    let num = &RatFunc::constant(sign) * &curly_rat(0, k + 1);
    &num / &(&curly_rat(alpha_multiple, offset) * &curly_rat(alpha_multiple, offset + k + 1))
}

/// `⟨Φ_{W,V}⟩`: the open Hopf link with `V` open and `W` closed, as the
/// double braiding traced over `W`.
pub fn open_hopf(v: &WeightModule, w: &WeightModule) -> Result<ChargedLaurent, RepError> {
    let double = build_braiding(w, v)?.compose(&build_braiding(v, w)?)?;
    let t = partial_trace(&double, &pivotal_enhancement(w), v.dim(), w.dim())?;
    as_scalar(&t).ok_or_else(|| RepError::HopfMismatch("double braiding trace is not scalar".into()))
}

/// The closed formula
/// `(-1)^{p'} q^{-(n+2α'+1)(m+2β+1)} {α'}{n+α'+1} {(n+1)(m+1)}/{n+1}`
/// for `V = V(n, α')`, `W = V_{p'}(m, β)`, `α', β ∈ α + ℤ`.
pub fn open_hopf_formula(v: &WeightModule, w: &WeightModule) -> ChargedLaurent {
    let (n, i) = (v.n as i32, v.offset);
    let (m, j) = (w.n as i32, w.offset);
    let sign = if w.parity == 1 { -1 } else { 1 };
    let prefactor = LaurentPoly::mono(sign, -2 * (n + m + 2 + 2 * i + 2 * j), -(n + 1 + 2 * i) * (m + 1 + 2 * j));
    let ratio = curly(0, (n + 1) * (m + 1)).exact_div(&curly(0, n + 1)).expect("{ab}/{a} is a polynomial");
    let poly = &(&(&prefactor * &curly(1, i)) * &curly(1, n + 1 + i)) * &ratio;
    ChargedLaurent::new(-4, poly)
}

/// [`open_hopf`] checked against [`open_hopf_formula`].
pub fn check_open_hopf(v: &WeightModule, w: &WeightModule) -> Result<ChargedLaurent, RepError> {
    let got = open_hopf(v, w)?;
    let want = open_hopf_formula(v, w);
    if got != want {
        return Err(RepError::HopfMismatch(format!("state sum {got} vs formula {want}")));
    }
    Ok(got)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcore::build_module;

    #[test]
    fn twist_of_smallest_module() {
        let v = build_module(0, 0, 0);
        assert_eq!(twist_scalar(&v), ChargedLaurent::new(-2, LaurentPoly::mono(1, -2, 0)));
        assert_eq!(twist_via_trace(&v).unwrap(), twist_scalar(&v));
    }

    #[test]
    fn pivotal_signs() {
        let v = build_module(0, 0, 0);
        let mu: Vec<LaurentPoly> = pivotal_enhancement(&v).into_iter().map(|m| m.poly).collect();
        assert_eq!(
            mu,
            vec![
                LaurentPoly::mono(1, -2, 0),
                LaurentPoly::mono(-1, -2, 0),
                LaurentPoly::mono(-1, -2, -2),
                LaurentPoly::mono(1, -2, -2)
            ]
        );
        assert!(mu.into_iter().sum::<LaurentPoly>().is_zero());
    }

    #[test]
    fn modified_dimension_of_generator() {
        let d = modified_dimension(0, 1, 0, 0);
        assert_eq!(d, &curly_rat(0, 1) / &(&curly_rat(1, 0) * &curly_rat(1, 1)));
        assert_eq!(modified_dimension(2, 1, 3, 1), -modified_dimension(2, 1, 3, 0));
    }
}
