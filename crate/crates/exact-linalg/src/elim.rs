//! Row reduction: Gauss-Jordan over prime fields, fraction-free Bareiss over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::field::{Field, Scalar};
use crate::matrix::Rref;

pub(crate) fn rref(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Rref {
    for r in &rows {
        assert_eq!(r.len(), cols, "row length");
    }
    match field {
        Field::Prime(p) => rref_mod(p, cols, rows),
        Field::Rationals => rref_rational(cols, rows),
    }
}

fn residue(x: &Scalar) -> u64 {
    match x {
        Scalar::P(v, _) => *v,
        Scalar::Q(_) => unreachable!("rational entry in prime-field elimination"),
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    Scalar::P(a, p).inv().map(|s| residue(&s)).expect("nonzero pivot")
}

fn rref_mod(p: u64, cols: usize, rows: Vec<Vec<Scalar>>) -> Rref {
    let mut a: Vec<Vec<u64>> = rows
        .into_iter()
        .map(|r| r.iter().map(residue).collect::<Vec<_>>())
        .filter(|r| r.iter().any(|&x| x != 0))
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == a.len() {
            break;
        }
        let Some(k) = (rank..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(rank, k);
        let inv = inv_mod(a[rank][c], p);
        for x in a[rank][c..].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == rank || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if y != 0 {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    a.truncate(rank);
    Rref {
        field: Field::Prime(p),
        cols,
        pivots,
        rows: a.into_iter().map(|r| r.into_iter().map(|v| Scalar::P(v, p)).collect()).collect(),
    }
}

/// Clears denominators row by row so elimination can run over the integers.
fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let qs: Vec<&BigRational> = row.iter().map(|x| x.as_rational().expect("rational entry")).collect();
    let mut lcm = BigInt::one();
    for q in &qs {
        if !q.is_zero() {
            lcm = lcm.lcm(q.denom());
        }
    }
    qs.iter().map(|q| (*q * BigRational::from_integer(lcm.clone())).to_integer()).collect()
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x /= &g;
        }
    }
}

fn rref_rational(cols: usize, rows: Vec<Vec<Scalar>>) -> Rref {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| integer_row(r))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    for r in a.iter_mut() {
        make_primitive(r);
    }

    // Bareiss forward pass: every entry stays an integer minor of the input.
    let mut pivots = Vec::new();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == a.len() {
            break;
        }
        let Some(k) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, k);
        let (head, tail) = a.split_at_mut(rank + 1);
        let pr = &head[rank];
        let pv = pr[c].clone();
        for row in tail.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                let updated = &pv * &row[j] - &f * &pr[j];
                row[j] = if prev.is_one() { updated } else { updated / &prev };
            }
            row[c] = BigInt::zero();
        }
        prev = pv;
        pivots.push(c);
        rank += 1;
    }
    a.truncate(rank);

    // Back substitution, keeping rows primitive.
    for k in (0..rank).rev() {
        make_primitive(&mut a[k]);
        let c = pivots[k];
        let (upper, lower) = a.split_at_mut(k);
        let pr = &lower[0];
        for row in upper.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            let pv = &pr[c];
            for j in 0..cols {
                if pr[j].is_zero() {
                    if !row[j].is_zero() {
                        row[j] = pv * &row[j];
                    }
                } else {
                    row[j] = pv * &row[j] - &f * &pr[j];
                }
            }
            make_primitive(row);
        }
    }

    let rows = a
        .into_iter()
        .zip(&pivots)
        .map(|(r, &c)| {
            let mut d = r[c].clone();
            if d.is_negative() {
                d = -d;
            }
            let sign = if r[c].is_negative() { -BigInt::one() } else { BigInt::one() };
            r.into_iter()
                .map(|x| Scalar::Q(BigRational::new(x * &sign, d.clone())))
                .collect()
        })
        .collect();
    Rref { field: Field::Rationals, cols, pivots, rows }
}
