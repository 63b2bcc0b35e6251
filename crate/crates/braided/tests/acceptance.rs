use std::process::ExitCode;
use std::time::Instant;

use braided::catalog::*;
use braided::cherednik::*;
use braided::double::{CentralLineDouble, DoubleSpec};
use braided::nichols::{kaplansky, nichols_hilbert};
use braided::ops::{braided_factorial, minimal_left_quotient, minimal_right_quotient, quasibraided_factorial, woronowicz_oracle};
use braided::qyd::QydStructure;
use braided::suite::{all_pass, property_suite};
use braided::{BraidedError, Field, Matrix, Scalar};

type Outcome = Result<(bool, String), BraidedError>;

fn classical() -> Outcome {
    let mut ok = true;
    let mut seen = Vec::new();
    for field in [Field::Rationals, Field::prime(5)?] {
        let plus = nichols_hilbert(&flip_yd(field, 3), 4)?;
        let minus = nichols_hilbert(&minus_flip_yd(field, 3)?, 4)?;
        ok &= plus == [1, 3, 6, 10, 15] && minus == [1, 3, 3, 1, 0];
        seen.push(format!("{field}: {plus:?} {minus:?}"));
    }
    Ok((ok, seen.join("; ")))
}

fn q_line_case() -> Outcome {
    let y = q_line()?;
    let psi = y.braiding()?;
    let scalars: Vec<Scalar> = (1..=3).map(|n| braided_factorial(&psi, n).map(|op| op.matrix.get(0, 0).clone())).collect::<Result<_, _>>()?;
    let f = y.field();
    let dims = nichols_hilbert(&y, 3)?;
    let ok = scalars == [f.int(1), f.int(3), f.int(0)] && dims == [1, 1, 1, 0];
    let shown: Vec<String> = scalars.iter().map(|s| s.to_string()).collect();
    Ok((ok, format!("factorials {shown:?}, dims {dims:?}")))
}

fn fomin_kirillov_case() -> Outcome {
    let y = y_s3(Field::Rationals)?;
    let dims = nichols_hilbert(&y, 5)?;
    let psi = y.braiding()?;
    let mut agree = true;
    for n in 1..=4 {
        agree &= braided_factorial(&psi, n)?.matrix == woronowicz_oracle(&psi, n, 6)?.matrix;
    }
    let ok = dims == [1, 3, 4, 3, 1, 0] && dims.iter().sum::<usize>() == 12 && agree;
    Ok((ok, format!("dims {dims:?}, factorial = symmetriser for n <= 4: {agree}")))
}

fn pathological_case() -> Outcome {
    let f = Field::Rationals;
    let q = pathological(f)?;
    let left = minimal_left_quotient(&q, 4)?;
    let right = minimal_right_quotient(&q, 4)?;
    let left_rel = left.relations_full(1).rank();
    let right_rel = right.relations_full(1);
    let right_ok = right_rel.rank() == 1 && right_rel.contains(&[f.zero(), f.one()]);
    // Rows encode (group leg, vector) pairs as `position * 2 + index`, listed from the first leg.
    let fact = quasibraided_factorial(&q, 2)?.matrix;
    let mut expected = Matrix::zeros(f, 16, 4);
    expected.set(2, 1, f.one());
    expected.set(8, 1, f.one());
    expected.set(8, 2, f.one());
    expected.set(2, 2, f.int(-1));
    let cols_ok = fact.column(1) == expected.column(1) && fact.column(2) == expected.column(2);
    let v1v2 = left.relations_full(2).contains(&[f.zero(), f.one(), f.int(-1), f.zero()]);
    let rdims = right.dims();
    let ok = left_rel == 0 && right_ok && cols_ok && !v1v2 && rdims == [1, 1, 1, 1, 1];
    Ok((ok, format!("left ker_1 dim {left_rel}, right ker_1 = span(f2): {right_ok}, [2]! values: {cols_ok}, U(V*) dims {rdims:?}")))
}

fn pbw_case() -> Outcome {
    let mut ok = true;
    let mut seen = Vec::new();
    for field in [Field::Rationals, Field::prime(5)?, Field::prime(3)?] {
        let (m, p) = s3_cherednik(field, 1, 1)?;
        let alg = cherednik_algebra(&m, &p, 4)?;
        let r = alg.pbw_report(4)?;
        ok &= r.pass();
        seen.push(format!("{field}: {}", if r.pass() { "all slices" } else { "mismatch" }));
    }
    Ok((ok, seen.join("; ")))
}

fn commutator_case() -> Outcome {
    let (m, p) = s3_cherednik(Field::Rationals, 1, 1)?;
    let s3 = cherednik_algebra(&m, &p, 4)?;
    let (m, p) = c4_cherednik(1, 1)?;
    let c4 = cherednik_algebra(&m, &p, 4)?;
    let formula = s3.commutator_check()?.pass && c4.commutator_check()?.pass;
    let dunkl = s3.dunkl_check(3)?.pass && c4.dunkl_check(3)?.pass;
    Ok((formula && dunkl, format!("closed form {formula}, Dunkl dual route {dunkl}")))
}

fn minimality_case() -> Outcome {
    let (m, p) = s3_cherednik(Field::Rationals, 1, 1)?;
    let q_report = cherednik_algebra(&m, &p, 4)?.spec.minimality_check(4)?;
    let gf3 = Field::prime(3)?;
    let (m3, p3) = s3_cherednik(gf3, 1, 1)?;
    let gf3_report = cherednik_algebra(&m3, &p3, 4)?.spec.minimality_check(4)?;
    let predicted = predicted_violation_degree(&m3, 4)?;
    let (m0, p0) = s3_cherednik(Field::Rationals, 0, 1)?;
    let restricted = restricted_dims(&m0, &p0, 4, 3)?;
    let ok = q_report.minimal() && predicted.is_some() && gf3_report.first_violation == predicted && restricted.minimal;
    Ok((
        ok,
        format!(
            "Q minimal to 4: {}, GF(3) first violation {:?} predicted {:?}, restricted minimal to 3: {}",
            q_report.minimal(),
            gf3_report.first_violation,
            predicted,
            restricted.minimal
        ),
    ))
}

fn restricted_case() -> Outcome {
    let (m, p) = s3_cherednik(Field::Rationals, 0, 1)?;
    let r = restricted_dims(&m, &p, 4, 1)?;
    let ok = r.coinvariant_dims == [1, 2, 2, 1, 0]
        && r.coinvariant_total == Some(6)
        && r.coinvariant_total == Some(r.group_order)
        && r.restricted_dim == Some(216)
        && r.averaging_agrees;
    Ok((ok, format!("coinvariants {:?}, total {:?}, restricted {:?}", r.coinvariant_dims, r.coinvariant_total, r.restricted_dim)))
}

fn harish_chandra_case() -> Outcome {
    let f = Field::Rationals;
    let spec = DoubleSpec::minimal(QydStructure::from_yd(&y_s3(f)?), 3)?;
    let mut gram_ok = true;
    for n in 0..=3 {
        gram_ok &= spec.harish_chandra_gram(n)?.scalar_nondegenerate();
    }
    let (_, smash) = kaplansky(f, 2)?;
    let alg = smash.finite_algebra()?;
    let a = smash.coordinates(&smash.word(&[0, 1], 0)?);
    let lambda = f.int(3);
    let line = CentralLineDouble::new(alg.clone(), a.clone(), lambda.clone())?;
    let mut closed_ok = true;
    let mut power = alg.unit();
    let mut coeff = f.one();
    for n in 1..=4 {
        power = alg.mul(&power, &a);
        coeff = &(&coeff * &f.int(n as i64)) * &lambda;
        let expected: Vec<Scalar> = power.iter().map(|x| x * &coeff).collect();
        closed_ok &= line.hc_straighten(n) == expected && line.hc_factorial(n) == expected;
    }
    Ok((gram_ok && closed_ok, format!("Gram nondegenerate to 3: {gram_ok}, nilpotent closed form to 4: {closed_ok}")))
}

fn kaplansky_case() -> Outcome {
    let (r, _) = kaplansky(Field::Rationals, 2)?;
    Ok((
        r.pass() && r.total_dim == Some(8),
        format!("dim {:?}, omega central {}, omega^2 = 0 {}, coproduct {}", r.total_dim, r.omega_central, r.omega_square_zero, r.bosonisation.pass()),
    ))
}

fn embed_case() -> Outcome {
    let mut ok = true;
    let mut seen = Vec::new();
    for t in [0, 1] {
        let (m, p) = s3_cherednik(Field::Rationals, t, 1)?;
        let r = embed_mc_check(&m, &p, 3)?;
        ok &= r.pass();
        seen.push(format!("t={t}: {} (t'={})", r.pass(), r.t_prime.clone().unwrap_or_else(|| "-".into())));
    }
    Ok((ok, seen.join("; ")))
}

fn suite_case() -> Outcome {
    let entries = property_suite(7)?;
    let failed: Vec<String> = entries.iter().filter(|e| !e.pass).map(|e| format!("{}/{}", e.family, e.example)).collect();
    Ok((all_pass(&entries), format!("{} checks, failed {:?}", entries.len(), failed)))
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("classical symmetric and exterior algebras", classical),
        ("q-line factorials", q_line_case),
        ("Fomin-Kirillov algebra of S3", fomin_kirillov_case),
        ("pathological Z2 example", pathological_case),
        ("Cherednik PBW slices", pbw_case),
        ("commutator closed form and Dunkl route", commutator_case),
        ("minimality criterion", minimality_case),
        ("restricted dimensions", restricted_case),
        ("Harish-Chandra pairing", harish_chandra_case),
        ("Kaplansky example", kaplansky_case),
        ("embedding into the double of Y_G", embed_case),
        ("property suite", suite_case),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (pass, detail) = match run() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failures += 1;
        }
        println!(
            "{} criterion {:>2} {name}: {detail} [{:.1}s]",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            start.elapsed().as_secs_f64()
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
