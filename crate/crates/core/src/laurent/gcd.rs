//! Greatest common divisors in `Z[s^±, q^±]`.
//!
//! A Laurent polynomial is shifted to an ordinary polynomial, viewed as a
//! polynomial in `s` over `Z[q]`, and reduced with a primitive pseudo-remainder
//! sequence.  Contents in `Z[q]` are handled by the same method one level down.
//! The result is normalised to have no monomial factor and a positive
//! lexicographically leading coefficient, so it is canonical.

use super::coeff::Coeff;
use super::poly::{LaurentPoly, Mono};

type UPoly = Vec<Coeff>;
type BPoly = Vec<UPoly>;

fn utrim(a: &mut UPoly) {
    while matches!(a.last(), Some(c) if c.is_zero()) {
        a.pop();
    }
}

fn umul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Coeff::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    utrim(&mut out);
    out
}

fn usub_shifted_scaled(r: &mut UPoly, b: &UPoly, c: &Coeff, shift: usize) {
    if r.len() < b.len() + shift {
        r.resize(b.len() + shift, Coeff::ZERO);
    }
    for (i, y) in b.iter().enumerate() {
        r[i + shift] = &r[i + shift] - &(c * y);
    }
    utrim(r);
}

fn ucontent(a: &UPoly) -> Coeff {
    a.iter().fold(Coeff::ZERO, |g, c| g.gcd(c))
}

fn udiv_coeff(a: &UPoly, c: &Coeff) -> UPoly {
    a.iter().map(|x| x.div_exact(c).expect("content divides")).collect()
}

fn upp(a: &UPoly) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = ucontent(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    udiv_coeff(a, &c)
}

fn uprem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    let db = b.len() - 1;
    while !r.is_empty() && r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for x in r.iter_mut() {
            *x = &*x * &lb;
        }
        usub_shifted_scaled(&mut r, b, &lr, shift);
    }
    r
}

fn ugcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return upp(b).pipe_scale(ucontent(b));
    }
    if b.is_empty() {
        return upp(a).pipe_scale(ucontent(a));
    }
    let g = ucontent(a).gcd(&ucontent(b));
    let (mut x, mut y) = (upp(a), upp(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = uprem(&x, &y);
        x = y;
        y = upp(&r);
    }
    upp(&x).pipe_scale(g)
}

trait PipeScale {
    fn pipe_scale(self, c: Coeff) -> Self;
}

impl PipeScale for UPoly {
    fn pipe_scale(self, c: Coeff) -> Self {
        self.into_iter().map(|x| &x * &c).collect()
    }
}

/// Exact division in `Z[q]`.
fn udiv_exact(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut quot = vec![Coeff::ZERO; a.len().saturating_sub(db).max(1)];
    while !r.is_empty() {
        assert!(r.len() > db, "inexact division in Z[q]");
        let shift = r.len() - 1 - db;
        let c = r.last().unwrap().div_exact(lb).expect("inexact division in Z[q]");
        usub_shifted_scaled(&mut r, b, &c, shift);
        quot[shift] = c;
    }
    utrim(&mut quot);
    quot
}

fn btrim(a: &mut BPoly) {
    while matches!(a.last(), Some(c) if c.is_empty()) {
        a.pop();
    }
}

fn bcontent(a: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in a {
        g = ugcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn bpp(a: &BPoly) -> BPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let c = bcontent(a);
    a.iter().map(|x| udiv_exact(x, &c)).collect()
}

fn bprem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    let db = b.len() - 1;
    while !r.is_empty() && r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for x in r.iter_mut() {
            *x = umul(x, &lb);
        }
        for (i, y) in b.iter().enumerate() {
            let t = umul(&lr, y);
            let slot = &mut r[i + shift];
            if slot.len() < t.len() {
                slot.resize(t.len(), Coeff::ZERO);
            }
            for (k, v) in t.iter().enumerate() {
                slot[k] = &slot[k] - v;
            }
            utrim(slot);
        }
        btrim(&mut r);
    }
    r
}

fn to_dense(p: &LaurentPoly) -> BPoly {
    let (s0, s1) = p.s_range().unwrap();
    let (q0, _) = p.q_range().unwrap();
    let mut out: BPoly = vec![Vec::new(); (s1 - s0 + 1) as usize];
    for (m, c) in p.terms() {
        let row = &mut out[(m.s() - s0) as usize];
        let k = (m.q() - q0) as usize;
        if row.len() <= k {
            row.resize(k + 1, Coeff::ZERO);
        }
        row[k] = c.clone();
    }
    out
}

fn from_dense(b: &BPoly) -> LaurentPoly {
    let mut terms = Vec::new();
    for (i, row) in b.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                terms.push((Mono::new(i as i32, j as i32), c.clone()));
            }
        }
    }
    LaurentPoly::from_terms(terms)
}

fn ueval(a: &UPoly, at: &Coeff) -> Coeff {
    a.iter().rev().fold(Coeff::ZERO, |acc, c| &(&acc * at) + c)
}

/// A sufficient test for coprimality of two polynomials that are primitive
/// over `Z[q]`.  At a point `q = c` where neither leading coefficient
/// vanishes, the image of the gcd divides the gcd of the images; a constant
/// gcd of the images therefore forces `deg_s gcd = 0`, and primitivity
/// forces the gcd to be a unit.  This avoids the coefficient growth of the
/// remainder sequence in the common coprime case.
fn coprime_by_evaluation(x: &BPoly, y: &BPoly) -> bool {
    if x.len() == 1 || y.len() == 1 {
        return false;
    }
    let (lx, ly) = (x.last().unwrap(), y.last().unwrap());
    (2..12i64)
        .map(Coeff::from)
        .find(|c| !ueval(lx, c).is_zero() && !ueval(ly, c).is_zero())
        .is_some_and(|c| {
            let xi: UPoly = x.iter().map(|u| ueval(u, &c)).collect();
            let yi: UPoly = y.iter().map(|u| ueval(u, &c)).collect();
            ugcd(&xi, &yi).len() == 1
        })
}

/// Canonical gcd: no monomial factor, positive leading coefficient.  The gcd
/// of zero and zero is zero.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() && b.is_zero() {
        return LaurentPoly::zero();
    }
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    if a.len() == 1 || b.len() == 1 {
        let g = a.content().gcd(&b.content());
        return LaurentPoly::constant(g);
    }
    let (da, db) = (to_dense(a), to_dense(b));
    let cont = ugcd(&bcontent(&da), &bcontent(&db));
    let (mut x, mut y) = (bpp(&da), bpp(&db));
    if coprime_by_evaluation(&x, &y) {
        return normalize(&from_dense(&vec![cont]));
    }
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            // y is a unit once its Z[q]-content is removed
            x = vec![vec![Coeff::ONE]];
            break;
        }
        let r = bprem(&x, &y);
        x = y;
        y = bpp(&r);
    }
    let g: BPoly = bpp(&x).iter().map(|c| umul(c, &cont)).collect();
    normalize(&from_dense(&g))
}

/// Strips monomial factors and makes the leading coefficient positive.
pub fn normalize(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return p.clone();
    }
    let s0 = p.s_range().unwrap().0;
    let q0 = p.q_range().unwrap().0;
    let shifted = p.mul_mono(Mono::new(-s0, -q0));
    if shifted.leading().unwrap().1.is_negative() {
        -shifted
    } else {
        shifted
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_common_factor() {
        let f = LaurentPoly::from_triples([(1, 1, 1), (0, 0, -2), (2, -1, 3)]);
        let a = &f * &LaurentPoly::from_triples([(1, 0, 1), (0, 1, 1)]);
        let b = &f * &LaurentPoly::from_triples([(1, 0, 1), (0, 2, -1), (-3, 0, 7)]);
        let g = gcd(&a, &b);
        assert_eq!(g, normalize(&f));
    }

    #[test]
    fn coprime_gives_one() {
        let a = LaurentPoly::from_triples([(1, 0, 1), (0, 0, 1)]);
        let b = LaurentPoly::from_triples([(0, 1, 1), (0, 0, 1)]);
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn integer_content_is_kept() {
        let a = LaurentPoly::from_triples([(1, 0, 6), (0, 0, 6)]);
        let b = LaurentPoly::from_triples([(1, 0, 4), (0, 0, 4)]);
        assert_eq!(gcd(&a, &b), LaurentPoly::from_triples([(1, 0, 2), (0, 0, 2)]));
    }
}
