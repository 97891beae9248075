use crate::laurent::{mono_rat, qint, RatFunc};
use crate::linalg::{self, RatMatrix};

/// Shift of `(λ₁, integer part of λ₂)` and of the parity for the four
/// vectors `v_{i,k}` relative to `F_1^i v_0`.
const K_SHIFT_L1: [i32; 4] = [0, 1, -1, 0];
const K_SHIFT_L2: [i32; 4] = [0, 0, 1, 1];
const K_PARITY: [u8; 4] = [0, 1, 1, 0];

/// The typical module `V(n, α + offset)` with highest-weight vector of the
/// given parity, in the basis `v_{i,k}`, `0 ≤ i ≤ n`, `0 ≤ k ≤ 3`, stored
/// at index `4i + k`.
#[derive(Clone, Debug)]
pub struct WeightModule {
    pub n: u32,
    pub offset: i32,
    pub parity: u8,
    pub e1: RatMatrix,
    pub e2: RatMatrix,
    pub f1: RatMatrix,
    pub f2: RatMatrix,
}

impl WeightModule {
    pub fn dim(&self) -> usize {
        4 * (self.n as usize + 1)
    }

    pub fn index(&self, i: usize, k: usize) -> usize {
        4 * i + k
    }

    pub fn label(&self, idx: usize) -> (usize, usize) {
        (idx / 4, idx % 4)
    }

    /// `(λ₁, a)` where the second weight is `α + a`.
    pub fn weight(&self, idx: usize) -> (i32, i32) {
        let (i, k) = self.label(idx);
        let i = i as i32;
        (self.n as i32 - 2 * i + K_SHIFT_L1[k], self.offset + i + K_SHIFT_L2[k])
    }

    pub fn parity_of(&self, idx: usize) -> u8 {
        (self.parity + K_PARITY[idx % 4]) % 2
    }

    /// `K_1 = q^{λ₁}` as a diagonal matrix.
    pub fn k1(&self) -> RatMatrix {
        self.diagonal(|(l1, _)| mono_rat(0, l1))
    }

    /// `K_2 = q^{α + a} = s q^a` as a diagonal matrix.
    pub fn k2(&self) -> RatMatrix {
        self.diagonal(|(_, a)| mono_rat(1, a))
    }

    pub fn k1_inv(&self) -> RatMatrix {
        self.diagonal(|(l1, _)| mono_rat(0, -l1))
    }

    pub fn k2_inv(&self) -> RatMatrix {
        self.diagonal(|(_, a)| mono_rat(-1, -a))
    }

    fn diagonal(&self, f: impl Fn((i32, i32)) -> RatFunc) -> RatMatrix {
        let mut m = linalg::zeros(self.dim(), self.dim());
        for (idx, row) in m.iter_mut().enumerate() {
            row[idx] = f(self.weight(idx));
        }
        m
    }

    /// `E_{12} = E_1 E_2 - q E_2 E_1`
    pub fn e12(&self) -> RatMatrix {
        sub(&linalg::matmul(&self.e1, &self.e2), &scale(&linalg::matmul(&self.e2, &self.e1), &mono_rat(0, 1)))
    }

    /// `F_{12} = F_2 F_1 - q^{-1} F_1 F_2`
    pub fn f12(&self) -> RatMatrix {
        sub(&linalg::matmul(&self.f2, &self.f1), &scale(&linalg::matmul(&self.f1, &self.f2), &mono_rat(0, -1)))
    }

    /// Every defining relation of the quantum supergroup, as exact matrix
    /// identities.  Returns the names of the relations that fail.
    pub fn relation_failures(&self) -> Vec<String> {
        let mut fails = Vec::new();
        let mut check = |name: &str, ok: bool| {
            if !ok {
                fails.push(name.to_string());
            }
        };
        let mm = linalg::matmul;
        let d = self.dim();
        let zero = linalg::zeros(d, d);
        let (k1, k2, k1i, k2i) = (self.k1(), self.k2(), self.k1_inv(), self.k2_inv());
        // K_i E_j K_i^{-1} = q^{a_ij} E_j,  K_i F_j K_i^{-1} = q^{-a_ij} F_j
        let cartan = [[2, -1], [-1, 0]];
        let ks = [(&k1, &k1i), (&k2, &k2i)];
        let es = [&self.e1, &self.e2];
        let fs = [&self.f1, &self.f2];
        for (i, (k, ki)) in ks.iter().enumerate() {
            for j in 0..2 {
                let a = cartan[i][j];
                check(
                    &format!("K{} E{} K{}^-1", i + 1, j + 1, i + 1),
                    mm(&mm(k, es[j]), ki) == scale(es[j], &mono_rat(0, a)),
                );
                check(
                    &format!("K{} F{} K{}^-1", i + 1, j + 1, i + 1),
                    mm(&mm(k, fs[j]), ki) == scale(fs[j], &mono_rat(0, -a)),
                );
            }
        }
        let q_minus = RatFunc::from_poly(crate::laurent::curly(0, 1));
        let qdiff = |k: &RatMatrix, ki: &RatMatrix| scale(&sub(k, ki), &q_minus.inv().unwrap());
        check("[E1,F1]", sub(&mm(&self.e1, &self.f1), &mm(&self.f1, &self.e1)) == qdiff(&k1, &k1i));
        check("[E2,F2]", add(&mm(&self.e2, &self.f2), &mm(&self.f2, &self.e2)) == qdiff(&k2, &k2i));
        check("[E1,F2]", mm(&self.e1, &self.f2) == mm(&self.f2, &self.e1));
        check("[E2,F1]", mm(&self.e2, &self.f1) == mm(&self.f1, &self.e2));
        check("E2^2", mm(&self.e2, &self.e2) == zero);
        check("F2^2", mm(&self.f2, &self.f2) == zero);
        let two = qint(0, 2);
        for (name, x, y) in [("E", &self.e1, &self.e2), ("F", &self.f1, &self.f2)] {
            let xx = mm(x, x);
            let serre = add(&sub(&mm(&xx, y), &scale(&mm(&mm(x, y), x), &two)), &mm(y, &xx));
            check(&format!("Serre {name}"), serre == zero);
        }
        // odd generators flip parity, all generators shift weights as prescribed
        for (name, m, shift, odd) in [
            ("E1", &self.e1, (2, -1), false),
            ("E2", &self.e2, (-1, 0), true),
            ("F1", &self.f1, (-2, 1), false),
            ("F2", &self.f2, (1, 0), true),
        ] {
            let ok = (0..d).all(|c| {
                (0..d).filter(|&r| !m[r][c].is_zero()).all(|r| {
                    let (wc, wr) = (self.weight(c), self.weight(r));
                    let flips = self.parity_of(c) != self.parity_of(r);
                    (wr.0 - wc.0, wr.1 - wc.1) == shift && flips == odd
                })
            });
            check(&format!("{name} grading"), ok);
        }
        fails
    }
}

pub(crate) fn scale(m: &RatMatrix, x: &RatFunc) -> RatMatrix {
    m.iter().map(|row| row.iter().map(|y| y * x).collect()).collect()
}

pub(crate) fn add(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
}

pub(crate) fn sub(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
}

/// Builds `V(n, α + offset)`.  The generator actions are
///
/// ```text
/// F1 v_{i,0} = v_{i+1,0}          E1 v_{i,0} = [i][n-i+1] v_{i-1,0}
/// F1 v_{i,1} = v_{i,2}            E1 v_{i,1} = [i][n-i+1] v_{i-1,1}
/// F1 v_{i,2} = [2] v_{i+1,2}      E1 v_{i,2} = [n+1-2i] v_{i,1}
///              - v_{i+2,1}                     + [i][n-i+1] v_{i-1,2}
/// F1 v_{i,3} = v_{i+1,3}          E1 v_{i,3} = [i][n-i+1] v_{i-1,3}
///
/// F2 v_{i,0} = v_{i,1}            E2 v_{i,1} = [α+i] v_{i,0}
/// F2 v_{i,2} = v_{i,3}            E2 v_{i,2} = [α+i] v_{i+1,0}
///                                 E2 v_{i,3} = [α+i+1] v_{i,2} - [α+i] v_{i+1,1}
/// ```
///
/// with `v_{i,k} = 0` outside `0 ≤ i ≤ n` and `α` shifted by `offset`.
pub fn build_module(n: u32, offset: i32, parity: u8) -> WeightModule {
    let dim = 4 * (n as usize + 1);
    let nn = n as i32;
    let mut e1 = linalg::zeros(dim, dim);
    let mut e2 = linalg::zeros(dim, dim);
    let mut f1 = linalg::zeros(dim, dim);
    let mut f2 = linalg::zeros(dim, dim);
    let idx = |i: i32, k: usize| -> Option<usize> { (0..=nn).contains(&i).then(|| 4 * i as usize + k) };
    let put = |m: &mut RatMatrix, from: usize, to: Option<usize>, x: RatFunc| {
        if let Some(to) = to {
            m[to][from] = &m[to][from] + &x;
        }
    };
    let one = RatFunc::one;
    for i in 0..=nn {
        let c = |k| 4 * i as usize + k;
        let ei = &qint(0, i) * &qint(0, nn - i + 1);
        let alpha_i = qint(1, offset + i);
        put(&mut f1, c(0), idx(i + 1, 0), one());
        put(&mut f1, c(1), idx(i, 2), one());
        put(&mut f1, c(2), idx(i + 1, 2), qint(0, 2));
        put(&mut f1, c(2), idx(i + 2, 1), -one());
        put(&mut f1, c(3), idx(i + 1, 3), one());

        put(&mut e1, c(0), idx(i - 1, 0), ei.clone());
        put(&mut e1, c(1), idx(i - 1, 1), ei.clone());
        put(&mut e1, c(2), idx(i, 1), qint(0, nn + 1 - 2 * i));
        put(&mut e1, c(2), idx(i - 1, 2), ei.clone());
        put(&mut e1, c(3), idx(i - 1, 3), ei);

        put(&mut f2, c(0), idx(i, 1), one());
        put(&mut f2, c(2), idx(i, 3), one());

        put(&mut e2, c(1), idx(i, 0), alpha_i.clone());
        put(&mut e2, c(2), idx(i + 1, 0), alpha_i.clone());
        put(&mut e2, c(3), idx(i, 2), qint(1, offset + i + 1));
        put(&mut e2, c(3), idx(i + 1, 1), -alpha_i);
    }
    WeightModule { n, offset, parity, e1, e2, f1, f2 }
}
