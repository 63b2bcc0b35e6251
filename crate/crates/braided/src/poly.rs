//! Commutative polynomials in finitely many variables, used for the divided-difference
//! side of Dunkl-type formulas.

use std::collections::BTreeMap;
use std::fmt;

use exact_linalg::{Field, Matrix, Scalar};

use crate::BraidedError;

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(field: Field, nvars: usize) -> Poly {
        Poly { field, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: Field, nvars: usize, c: Scalar) -> Poly {
        let mut p = Poly::zero(field, nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn variable(field: Field, nvars: usize, i: usize) -> Poly {
        let mut m = vec![0; nvars];
        m[i] = 1;
        let mut p = Poly::zero(field, nvars);
        p.add_term(m, field.one());
        p
    }

    /// `sum_i coeffs[i] x_i`.
    pub fn linear(field: Field, coeffs: &[Scalar]) -> Poly {
        let n = coeffs.len();
        let mut p = Poly::zero(field, n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut m = vec![0; n];
            m[i] = 1;
            p.add_term(m, c.clone());
        }
        p
    }

    /// The commutative image of a word: letter `i` becomes `x_i`.
    pub fn from_word(field: Field, nvars: usize, w: &[u8]) -> Poly {
        let mut m = vec![0; nvars];
        for &x in w {
            m[x as usize] += 1;
        }
        let mut p = Poly::zero(field, nvars);
        p.add_term(m, field.one());
        p
    }

    /// The nondecreasing word of a monomial.
    pub fn monomial_word(m: &[u32]) -> Vec<u8> {
        let mut w = Vec::new();
        for (i, &e) in m.iter().enumerate() {
            w.extend(std::iter::repeat(i as u8).take(e as usize));
        }
        w
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot += &c;
                slot.is_zero()
            }
            None => {
                self.terms.insert(m.clone(), c);
                false
            }
        };
        if remove {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        let mut out = Poly::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            for (m2, c2) in &other.terms {
                let e: Monomial = m.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(e, c * c2);
            }
        }
        out
    }

    pub fn partial(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            if m[i] == 0 {
                continue;
            }
            let mut e = m.clone();
            e[i] -= 1;
            out.add_term(e, c * &self.field.int(m[i] as i64));
        }
        out
    }

    /// `sum_i v_i d/dx_i`.
    pub fn directional(&self, v: &[Scalar]) -> Poly {
        let mut out = Poly::zero(self.field, self.nvars);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.partial(i).scale(c));
            }
        }
        out
    }

    /// Substitution `x_i -> sum_j m[j][i] x_j`: column `i` of `m` is the image of `x_i`.
    pub fn substitute(&self, m: &Matrix) -> Poly {
        let images: Vec<Poly> = (0..self.nvars).map(|i| Poly::linear(self.field, &m.column(i))).collect();
        let mut out = Poly::zero(self.field, self.nvars);
        for (mono, c) in &self.terms {
            let mut t = Poly::constant(self.field, self.nvars, c.clone());
            for (i, &e) in mono.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&images[i]);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Exact quotient by a nonzero linear form; a nonzero remainder is an error.
    pub fn divide_linear(&self, linear: &[Scalar]) -> Result<Poly, BraidedError> {
        let lead = linear
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| BraidedError::Input("division by the zero form".into()))?;
        let inv = linear[lead].inv().expect("nonzero");
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.field, self.nvars);
        // Repeatedly cancel the largest monomial divisible by the leading variable.
        loop {
            let Some((m, c)) = rem.terms.iter().rev().find(|(m, _)| m[lead] > 0).map(|(m, c)| (m.clone(), c.clone())) else {
                break;
            };
            let mut q = m.clone();
            q[lead] -= 1;
            let coeff = &c * &inv;
            let mut step = Poly::zero(self.field, self.nvars);
            step.add_term(q.clone(), coeff.clone());
            quot.add_term(q, coeff);
            rem = rem.sub(&step.mul(&Poly::linear(self.field, linear)));
        }
        if !rem.is_zero() {
            return Err(BraidedError::Check(format!("division by a linear form left remainder {rem}")));
        }
        Ok(quot)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let vars: Vec<String> = m
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
                    .collect();
                if vars.is_empty() {
                    c.to_string()
                } else {
                    format!("{}*{}", c, vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
