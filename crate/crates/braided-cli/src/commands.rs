//! The dispatch table and one function per command.

use braided::cherednik::{
    build_reflection_yd, cherednik_algebra, commutativity_classification_check, embed_mc_check, find_reflections,
    fomin_kirillov_dims, predicted_violation_degree, reflection_covariance_check, restricted_dims, CherednikAlgebra,
};
use braided::double::{hc_formula, quadratic_double_dims, yd_pairing_check, DoubleSpec};
use braided::generic::GenericParams;
use braided::gmodule::Irreducibility;
use braided::nichols::{
    bosonisation_check, deformed_nichols_hilbert, kaplansky as kaplansky_example, nichols_hilbert, nichols_product,
    TruncatedGradedAlgebra,
};
use braided::ops::{
    braided_factorial, minimal_left_quotient, minimal_right_quotient, quasibraided_factorial, right_quasibraided_factorial,
    woronowicz_oracle,
};
use braided::qyd::{braid_equation_check, CompatibleFamily, QydStructure};
use braided::suite::ideal_grows;
use braided::{Matrix, Rref};
use serde_json::{json, Value};

use crate::config::{resolve_module, DoubleKind, GroupSpec, ModuleSpec, Structure};
use crate::{CliError, Context, Outcome, Table};

pub struct Command {
    pub name: &'static str,
    pub summary: &'static str,
    /// Library operations the command exercises.
    pub operations: &'static [&'static str],
    pub run: fn(&Context) -> Result<Outcome, CliError>,
}

pub static COMMANDS: &[Command] = &[
    Command {
        name: "check-qyd",
        summary: "validate a quasi-YD structure and classify it",
        operations: &[
            "group_from_generators",
            "conjugacy_classes",
            "qyd_check",
            "yd_pairing_check",
            "yd_module_check",
            "dual_module",
            "tensor_module",
            "kron",
            "braiding_from_yd",
            "braid_equation_check",
            "semibraiding_from_compatible",
            "build_YV",
            "induce_subquotient",
            "mix_structures",
            "classify_1dim_check",
            "commutativity_classification_check",
            "find_reflections",
            "delta_tc",
            "build_reflection_yd",
        ],
        run: check_qyd,
    },
    Command {
        name: "free-double-pbw",
        summary: "normal-form ranks of the free braided double",
        operations: &["straighten"],
        run: free_double_pbw,
    },
    Command {
        name: "minimal-relations",
        summary: "relations of the minimal quotients, degree by degree",
        operations: &["quasibraided_factorial", "right_quasibraided_factorial", "minimal_relations", "quadratic_double_dims", "kernel_basis"],
        run: minimal_relations,
    },
    Command {
        name: "nichols-hilbert",
        summary: "Hilbert series of a Nichols algebra",
        operations: &["braided_integer", "braided_factorial", "woronowicz_oracle", "nichols_hilbert", "nichols_product", "bosonisation_check"],
        run: nichols,
    },
    Command {
        name: "deformed-hilbert",
        summary: "Hilbert series at a generic point of the deformed factorials",
        operations: &["deformed_factorial", "deformed_nichols_hilbert"],
        run: deformed,
    },
    Command {
        name: "hc-gram",
        summary: "Harish-Chandra pairing matrices",
        operations: &["harish_chandra_gram", "straighten"],
        run: hc_gram,
    },
    Command {
        name: "minimality",
        summary: "search for central elements of positive degree",
        operations: &["minimality_check", "cherednik_algebra"],
        run: minimality,
    },
    Command {
        name: "cherednik-pbw",
        summary: "PBW slice dimensions of a rational Cherednik algebra",
        operations: &["cherednik_algebra", "delta_tc", "straighten"],
        run: cherednik_pbw,
    },
    Command {
        name: "dunkl-check",
        summary: "commutator formula and Dunkl operators on polynomials",
        operations: &["dunkl_commutator", "cherednik_algebra"],
        run: dunkl,
    },
    Command {
        name: "restricted-dims",
        summary: "coinvariant and restricted Cherednik dimensions",
        operations: &["restricted_dims"],
        run: restricted,
    },
    Command {
        name: "embed-check",
        summary: "the map from the Cherednik algebra into the double of Y_G",
        operations: &["embed_Mc_check", "build_reflection_yd"],
        run: embed,
    },
    Command {
        name: "fomin-kirillov",
        summary: "Fomin-Kirillov algebra against the Nichols algebra of Y_{S_n}",
        operations: &["fomin_kirillov_dims"],
        run: fomin_kirillov,
    },
    Command {
        name: "kaplansky",
        summary: "the exterior algebra bosonised over Z_2",
        operations: &["bosonisation_check"],
        run: kaplansky,
    },
    Command {
        name: "standard-module",
        summary: "matrices of a standard module of a braided double",
        operations: &["standard_module_matrices"],
        run: standard_module,
    },
];

fn dims_table(dims: &[usize]) -> Table {
    Table {
        header: vec!["degree".into(), "dim".into()],
        rows: dims.iter().enumerate().map(|(n, d)| vec![n.to_string(), d.to_string()]).collect(),
    }
}

fn matrix_text(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(|x| x.to_string()).collect()).collect()
}

fn same_space(a: &Rref, b: &Rref) -> bool {
    a.contains_space(b) && b.contains_space(a)
}

fn irreducibility(ctx: &Context, found: &Irreducibility) -> Value {
    if ctx.config.assume_irreducible {
        json!("assumed")
    } else {
        json!(found)
    }
}

fn qyd_of(ctx: &Context) -> Result<(Structure, QydStructure), CliError> {
    let module = ctx.module()?;
    let s = ctx.structure(&module)?;
    let q = s.qyd()?;
    Ok((s, q))
}

fn cherednik_of(ctx: &Context) -> Result<CherednikAlgebra, CliError> {
    let module = ctx.module()?;
    let s = ctx.structure(&module)?;
    let (m, p) = s.cherednik()?;
    ctx.check_size(m.dim(), ctx.n(), m.group().order())?;
    Ok(cherednik_algebra(m, p, ctx.n())?)
}

fn check_qyd(ctx: &Context) -> Result<Outcome, CliError> {
    let (s, q) = qyd_of(ctx)?;
    let m = q.module().clone();
    let g = q.group().clone();
    let d = q.dim();
    ctx.check_size(d, 2, g.order())?;
    let qyd = q.check();
    let pairing = yd_pairing_check(&q);
    let refl = find_reflections(&m);
    let covariance = reflection_covariance_check(&m, &refl);
    let classes = g.class_index();
    let reflections: Vec<Value> = refl
        .iter()
        .map(|r| {
            json!({
                "element": g.label(r.element),
                "class": classes[r.element as usize],
                "root": r.root.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "coroot": r.coroot.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let classification = commutativity_classification_check(&m, &q);
    let mut pass = qyd.pass && pairing.pass && covariance.pass;

    // L_h is recovered from Y(V) along (delta, epsilon ⊗ id).
    let yv_roundtrip = if qyd.pass {
        let (yv, pair) = q.build_yv()?;
        let back = yv.check().pass && QydStructure::from_yd(&yv).induce_subquotient(&m, &pair)?.family() == q.family();
        pass &= back;
        Some(back)
    } else {
        None
    };

    let one_dim = if d == 1 {
        let f = q.field();
        let alpha: Vec<_> = g.elements().map(|x| m.act(x).get(0, 0).clone()).collect();
        let p: Vec<_> = g.elements().map(|h| q.l(h).map(|l| l.get(0, 0).clone()).unwrap_or_else(|| f.zero())).collect();
        let r = braided::qyd::classify_1dim_check(&g, &alpha, &p)?;
        pass &= r.pass == qyd.pass;
        Some(r)
    } else {
        None
    };

    let yd = match &s {
        Structure::Yd(y) => {
            let module_ok = y.check();
            let dual_ok = y.dual().check();
            let psi = y.braiding()?;
            let braid = braid_equation_check(&psi, d);
            let square = m.tensor(&m)?;
            let equivariant = square.is_intertwiner(&square, &psi);
            let family = CompatibleFamily::new(d, vec![psi.clone()]).map(|f| f.psi(1, 1) == psi).unwrap_or(false);
            let ok = module_ok.pass && dual_ok.pass && braid.braid_equation && braid.invertible && equivariant && family;
            pass &= ok;
            Some(json!({
                "yd_module": module_ok,
                "dual_yd_module": dual_ok,
                "braid_equation": braid,
                "braiding_equivariant": equivariant,
                "semibraiding_matches": family,
            }))
        }
        _ => None,
    };

    Ok(Outcome {
        pass,
        result: json!({
            "dim": d,
            "support": q.support().iter().map(|&h| g.label(h)).collect::<Vec<_>>(),
            "qyd": qyd,
            "pairing": pairing,
            "reflections": reflections,
            "reflection_covariance": covariance,
            "classification": classification,
            "irreducibility": irreducibility(ctx, &classification.irreducibility),
            "yv_roundtrip": yv_roundtrip,
            "one_dim": one_dim,
            "yd": yd,
        }),
        table: None,
    })
}

fn double_spec(ctx: &Context, q: QydStructure, default: DoubleKind) -> Result<DoubleSpec, CliError> {
    let n = ctx.n();
    Ok(match ctx.config.double.unwrap_or(default) {
        DoubleKind::Free => DoubleSpec::free(q, n)?,
        DoubleKind::Minimal => DoubleSpec::minimal(q, n)?,
        DoubleKind::Symmetric => DoubleSpec::symmetric(q, n)?,
    })
}

fn free_double_pbw(ctx: &Context) -> Result<Outcome, CliError> {
    let (_, q) = qyd_of(ctx)?;
    let n = ctx.n();
    ctx.check_size(q.dim(), n, q.group().order())?;
    let spec = DoubleSpec::free(q, n)?;
    let slices = spec.pbw_slices(n)?;
    let ranks_ok = slices.iter().all(|s| s.normal_monomials == s.straightened_rank);
    let assoc = spec.associativity_random(ctx.config.trials, n.min(3), ctx.config.seed)?;
    let table = Table {
        header: vec!["left_degree".into(), "right_degree".into(), "normal_monomials".into(), "straightened_rank".into()],
        rows: slices
            .iter()
            .map(|s| vec![s.left_degree.to_string(), s.right_degree.to_string(), s.normal_monomials.to_string(), s.straightened_rank.to_string()])
            .collect(),
    };
    Ok(Outcome { pass: ranks_ok && assoc.pass, result: json!({ "slices": slices, "associativity": assoc }), table: Some(table) })
}

fn minimal_relations(ctx: &Context) -> Result<Outcome, CliError> {
    let (_, q) = qyd_of(ctx)?;
    let n = ctx.n();
    let d = q.dim();
    ctx.check_size(d, n, q.support().len())?;
    let left = minimal_left_quotient(&q, n)?;
    let right = minimal_right_quotient(&q, n)?;
    let mut degrees = Vec::new();
    let mut agree = true;
    for k in 1..=n {
        // The recursive construction must reproduce the kernel of the full factorial.
        let check = if k <= 3 {
            let l = same_space(&quasibraided_factorial(&q, k)?.kernel(), &left.relations_full(k));
            let r = same_space(&right_quasibraided_factorial(&q, k)?.kernel(), &right.relations_full(k));
            agree &= l && r;
            Some(json!({ "left": l, "right": r }))
        } else {
            None
        };
        degrees.push(json!({
            "degree": k,
            "left_dim": left.dim(k),
            "right_dim": right.dim(k),
            "left_relations": left.relations_full(k).rank(),
            "right_relations": right.relations_full(k).rank(),
            "left_new_relations": left.new_relations(k).len(),
            "right_new_relations": right.new_relations(k).len(),
            "factorial_kernel_agrees": check,
        }));
    }
    let left_growth = ideal_grows(&left);
    let right_growth = ideal_grows(&right);
    let quadratic = quadratic_double_dims(&q, n)?;
    let table = Table {
        header: vec!["degree".into(), "left_dim".into(), "right_dim".into(), "quadratic_dim".into()],
        rows: (0..=n).map(|k| vec![k.to_string(), left.dim(k).to_string(), right.dim(k).to_string(), quadratic[k].to_string()]).collect(),
    };
    Ok(Outcome {
        pass: agree && left_growth.is_none() && right_growth.is_none(),
        result: json!({
            "left_dims": left.dims(),
            "right_dims": right.dims(),
            "quadratic_dims": quadratic,
            "degrees": degrees,
            "left_ideal_failure": left_growth,
            "right_ideal_failure": right_growth,
        }),
        table: Some(table),
    })
}

fn nichols(ctx: &Context) -> Result<Outcome, CliError> {
    let module = ctx.module()?;
    let s = ctx.structure(&module)?;
    let y = s.yd()?;
    let n = ctx.n();
    let d = y.dim();
    ctx.check_size(d, n, 1)?;
    let dims = nichols_hilbert(y, n)?;
    let psi = y.braiding()?;
    let mut oracle = Vec::new();
    for k in 1..=n.min(4) {
        if d.saturating_pow(k as u32) > ctx.options.max_matrix_dim {
            break;
        }
        let a = braided_factorial(&psi, k)?;
        let b = woronowicz_oracle(&psi, k, 6)?;
        oracle.push(json!({ "degree": k, "agree": a.matrix == b.matrix, "rank": a.rank() }));
    }
    let oracle_ok = oracle.iter().all(|o| o["agree"] == json!(true));
    let low = n.min(3);
    let alg = TruncatedGradedAlgebra::nichols(y, low)?;
    let associative = alg.associative()?;
    let mut squares_vanish = Vec::new();
    if low >= 2 {
        for i in 0..d as u8 {
            let x = alg.element(&[i])?;
            squares_vanish.push(nichols_product(&alg, 1, &x, 1, &x)?.iter().all(|c| c.is_zero()));
        }
    }
    let boson = if y.group().order() * d.saturating_pow(low as u32) <= ctx.options.max_matrix_dim {
        Some(bosonisation_check(y, low)?)
    } else {
        None
    };
    let boson_ok = boson.as_ref().map(|b| b.pass()).unwrap_or(true);
    Ok(Outcome {
        pass: oracle_ok && associative && boson_ok,
        result: json!({
            "dims": dims,
            "total": dims.iter().sum::<usize>(),
            "shuffle_oracle": oracle,
            "associative": associative,
            "generator_squares_vanish": squares_vanish,
            "bosonisation": boson,
        }),
        table: Some(dims_table(&dims)),
    })
}

fn deformed(ctx: &Context) -> Result<Outcome, CliError> {
    let module = ctx.module()?;
    let s = ctx.structure(&module)?;
    let y = s.yd()?;
    let n = ctx.n();
    if n < 2 {
        return Err(CliError::Input("deformed-hilbert needs truncation at least 2".into()));
    }
    ctx.check_size(y.dim(), n, 1)?;
    let params = GenericParams::indexed("u", 2..=n, ctx.config.trials, ctx.config.seed)?;
    let generic = deformed_nichols_hilbert(y, n, &params)?;
    let plain = nichols_hilbert(y, n)?;
    let bounded = generic.iter().zip(&plain).all(|(a, b)| a >= b);
    let table = Table {
        header: vec!["degree".into(), "nichols_dim".into(), "deformed_dim".into()],
        rows: (0..=n).map(|k| vec![k.to_string(), plain[k].to_string(), generic[k].to_string()]).collect(),
    };
    Ok(Outcome { pass: bounded, result: json!({ "deformed_dims": generic, "nichols_dims": plain, "trials": ctx.config.trials }), table: Some(table) })
}

fn hc_gram(ctx: &Context) -> Result<Outcome, CliError> {
    let (_, q) = qyd_of(ctx)?;
    let n = ctx.n();
    ctx.check_size(q.dim(), n, q.group().order())?;
    let spec = DoubleSpec::minimal(q.clone(), n)?;
    let mut degrees = Vec::new();
    let mut agree = true;
    for k in 0..=n {
        let g = spec.harish_chandra_gram(k)?;
        let mut formula_ok = true;
        for (i, phi) in spec.right().basis(k).iter().enumerate() {
            for (j, b) in spec.left().basis(k).iter().enumerate() {
                let formula = hc_formula(&q, phi, b)?;
                formula_ok &= formula.iter().enumerate().all(|(h, c)| g.per_element[h].get(i, j) == c);
            }
        }
        agree &= formula_ok;
        degrees.push(json!({
            "degree": k,
            "size": [g.scalar.rows(), g.scalar.cols()],
            "scalar_rank": g.scalar_rank,
            "nondegenerate": g.scalar_nondegenerate(),
            "formula_agrees": formula_ok,
            "scalar": matrix_text(&g.scalar),
        }));
    }
    Ok(Outcome { pass: agree, result: json!({ "degrees": degrees }), table: None })
}

fn minimality(ctx: &Context) -> Result<Outcome, CliError> {
    let module = ctx.module()?;
    let s = ctx.structure(&module)?;
    let n = ctx.n();
    let (spec, predicted) = match &s {
        Structure::Cherednik(m, p) if ctx.config.double.is_none() => {
            ctx.check_size(m.dim(), n, m.group().order())?;
            (cherednik_algebra(m, p, n)?.spec, Some(predicted_violation_degree(m, n)?))
        }
        _ => {
            let q = s.qyd()?;
            ctx.check_size(q.dim(), n, q.group().order())?;
            (double_spec(ctx, q, DoubleKind::Minimal)?, None)
        }
    };
    let report = spec.minimality_check(n)?;
    // With a prediction, pass means the first violation is where the invariants say.
    let pass = match predicted {
        Some(p) => report.first_violation == p.filter(|&k| k <= n),
        None => report.minimal(),
    };
    Ok(Outcome {
        pass,
        result: json!({
            "minimal": report.minimal(),
            "first_violation": report.first_violation,
            "predicted_violation": predicted.flatten(),
            "left_violations": report.left_violations,
            "right_violations": report.right_violations,
        }),
        table: None,
    })
}

fn cherednik_pbw(ctx: &Context) -> Result<Outcome, CliError> {
    let alg = cherednik_of(ctx)?;
    let r = alg.pbw_report(ctx.n())?;
    let table = Table {
        header: vec!["left_degree".into(), "right_degree".into(), "expected".into(), "normal_monomials".into(), "straightened_rank".into()],
        rows: r
            .slices
            .iter()
            .zip(&r.expected)
            .map(|(s, e)| {
                vec![s.left_degree.to_string(), s.right_degree.to_string(), e.to_string(), s.normal_monomials.to_string(), s.straightened_rank.to_string()]
            })
            .collect(),
    };
    Ok(Outcome { pass: r.pass(), result: json!(r), table: Some(table) })
}

fn dunkl(ctx: &Context) -> Result<Outcome, CliError> {
    let n = ctx.n();
    if n < 2 {
        return Err(CliError::Input("dunkl-check needs truncation at least 2".into()));
    }
    let alg = cherednik_of(ctx)?;
    let formula = alg.commutator_check()?;
    let dunkl = alg.dunkl_check(n - 1)?;
    Ok(Outcome {
        pass: formula.pass && dunkl.pass,
        result: json!({ "commutator_formula": formula, "dunkl": dunkl, "max_polynomial_degree": n - 1 }),
        table: None,
    })
}

fn restricted(ctx: &Context) -> Result<Outcome, CliError> {
    let module = ctx.module()?;
    let s = ctx.structure(&module)?;
    let (m, p) = s.cherednik()?;
    let n = ctx.n();
    ctx.check_size(m.dim(), n, m.group().order())?;
    let r = restricted_dims(m, p, n, n.min(3))?;
    let table = Table {
        header: vec!["degree".into(), "coinvariant_dim".into(), "dual_coinvariant_dim".into()],
        rows: (0..=n).map(|k| vec![k.to_string(), r.coinvariant_dims[k].to_string(), r.dual_coinvariant_dims[k].to_string()]).collect(),
    };
    Ok(Outcome { pass: r.averaging_agrees && r.triangular && r.minimal, result: json!(r), table: Some(table) })
}

fn embed(ctx: &Context) -> Result<Outcome, CliError> {
    let module = ctx.module()?;
    let s = ctx.structure(&module)?;
    let (m, p) = s.cherednik()?;
    let n = ctx.n();
    let r = find_reflections(m).len();
    ctx.check_size(r, n, m.group().order())?;
    let yd = build_reflection_yd(m)?;
    let report = embed_mc_check(m, p, n)?;
    Ok(Outcome { pass: report.pass() && yd.cocycle_ok, result: json!({ "cocycle": yd.cocycle_ok, "embedding": report }), table: None })
}

fn fomin_kirillov(ctx: &Context) -> Result<Outcome, CliError> {
    let k = match &ctx.config.group {
        Some(GroupSpec::Symmetric(k)) => *k,
        _ => return Err(CliError::Input("fomin-kirillov needs a symmetric group".into())),
    };
    ctx.check_size(k * k.saturating_sub(1) / 2, ctx.n(), 1)?;
    let r = fomin_kirillov_dims(k, ctx.n())?;
    let table = Table {
        header: vec!["degree".into(), "en_dim".into(), "utr_dim".into(), "nichols_dim".into()],
        rows: (0..r.en_dims.len())
            .map(|i| vec![i.to_string(), r.en_dims[i].to_string(), r.utr_dims[i].to_string(), r.nichols_dims[i].to_string()])
            .collect(),
    };
    Ok(Outcome { pass: r.en_matches_nichols && r.listed_relations_match && r.u_zero_matches, result: json!(r), table: Some(table) })
}

fn kaplansky(ctx: &Context) -> Result<Outcome, CliError> {
    let dim = ctx.config.dim.unwrap_or(2);
    ctx.check_size(2, dim, 2)?;
    let (r, _) = kaplansky_example(ctx.field, dim)?;
    Ok(Outcome { pass: r.pass(), result: json!(r), table: None })
}

fn standard_module(ctx: &Context) -> Result<Outcome, CliError> {
    let module = ctx.module()?;
    let s = ctx.structure(&module)?;
    let n = ctx.n();
    let group = module.group().clone();
    let rho_spec = ctx.config.rho.clone().unwrap_or(ModuleSpec::Trivial(1));
    let rho = resolve_module(&rho_spec, ctx.config.group.as_ref(), &group, ctx.field)?;
    let spec = match &s {
        Structure::Cherednik(m, p) if ctx.config.double.is_none() => {
            ctx.check_size(m.dim(), n, rho.dim())?;
            cherednik_algebra(m, p, n)?.spec
        }
        _ => {
            let q = s.qyd()?;
            ctx.check_size(q.dim(), n, rho.dim())?;
            double_spec(ctx, q, DoubleKind::Minimal)?
        }
    };
    let std = spec.standard_module(&rho, n)?;
    let relations = std.check_relations(spec.qyd());
    let dims: Vec<usize> = std.offsets.windows(2).map(|w| w[1] - w[0]).collect();
    let matrices = json!({
        "v": std.v.iter().map(matrix_text).collect::<Vec<_>>(),
        "g": std.g.iter().map(matrix_text).collect::<Vec<_>>(),
        "f": std.f.iter().map(matrix_text).collect::<Vec<_>>(),
    });
    Ok(Outcome {
        pass: relations.pass,
        result: json!({ "dim": std.dim(), "degree_dims": dims, "offsets": std.offsets, "relations": relations, "matrices": matrices }),
        table: Some(dims_table(&dims)),
    })
}
