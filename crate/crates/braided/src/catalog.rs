//! Built-in examples used by the test suite and the command-line tool.

use std::collections::BTreeMap;
use std::sync::Arc;

use exact_linalg::{Field, Matrix, Scalar};

use crate::cherednik::{build_reflection_yd, delta_tc, CherednikParams};
use crate::gmodule::{GModule, YDModule};
use crate::group::FinGroup;
use crate::qyd::QydStructure;
use crate::BraidedError;

/// `V` of dimension `dim` over the trivial group, all in degree `e`: the braiding is the flip.
pub fn flip_yd(field: Field, dim: usize) -> YDModule {
    let g = Arc::new(FinGroup::trivial());
    YDModule::trivially_graded(GModule::trivial(g, field, dim))
}

/// `Z_2 = {1, s}` acting by `-1`, all in degree `s`: the braiding is `-flip`.
pub fn minus_flip_yd(field: Field, dim: usize) -> Result<YDModule, BraidedError> {
    crate::nichols::exterior_yd(field, dim)
}

/// The line over `C_3` in `GF(7)` with generator acting by `q = 2` and degree the generator.
pub fn q_line() -> Result<YDModule, BraidedError> {
    let field = Field::prime(7)?;
    let g = Arc::new(FinGroup::cyclic(3)?);
    let m = GModule::cyclic_character(g.clone(), field.int(2))?;
    Ok(YDModule::from_basis_degrees(m, &[g.generators()[0]]))
}

pub fn s3_reflection(field: Field) -> Result<GModule, BraidedError> {
    GModule::symmetric_reflection(Arc::new(FinGroup::symmetric(3)?), field)
}

/// `Y_{S_3}`, spanned by the three transpositions.
pub fn y_s3(field: Field) -> Result<YDModule, BraidedError> {
    Ok(build_reflection_yd(&s3_reflection(field)?)?.y_g)
}

/// Two-dimensional `Z_2`-module with `s = -1`, `L_1 = E_11`, `L_s = E_12`.
pub fn pathological(field: Field) -> Result<QydStructure, BraidedError> {
    let g = Arc::new(FinGroup::cyclic(2)?);
    let s = g.generators()[0];
    let m = GModule::from_generator_images(g.clone(), field, &[Matrix::identity(field, 2).scale(&field.int(-1))])?;
    let e11 = Matrix::from_i64(field, 2, 2, &[1, 0, 0, 0]);
    let e12 = Matrix::from_i64(field, 2, 2, &[0, 1, 0, 0]);
    QydStructure::new(m, BTreeMap::from([(g.identity(), e11), (s, e12)]))
}

/// The reflection representation of `S_3` with uniform parameters.
pub fn s3_cherednik(field: Field, t: i64, c: i64) -> Result<(GModule, CherednikParams), BraidedError> {
    let m = s3_reflection(field)?;
    let p = CherednikParams::uniform(&m, field.int(t), field.int(c));
    Ok((m, p))
}

/// `C_4` acting on a line by `2`, a primitive fourth root of unity in `GF(5)`.
pub fn c4_line() -> Result<GModule, BraidedError> {
    let field = Field::prime(5)?;
    GModule::cyclic_character(Arc::new(FinGroup::cyclic(4)?), field.int(2))
}

pub fn c4_cherednik(t: i64, c: i64) -> Result<(GModule, CherednikParams), BraidedError> {
    let m = c4_line()?;
    let f = m.field();
    let p = CherednikParams::uniform(&m, f.int(t), f.int(c));
    Ok((m, p))
}

/// `[f, v] = t`: the Weyl algebra on a line over the trivial group.
pub fn weyl(field: Field, t: Scalar) -> Result<QydStructure, BraidedError> {
    let g = Arc::new(FinGroup::trivial());
    let m = GModule::trivial(g.clone(), field, 1);
    QydStructure::new(m, BTreeMap::from([(g.identity(), Matrix::identity(field, 1).scale(&t))]))
}

/// Named Yetter-Drinfeld modules of the catalog.
pub fn yd_examples() -> Result<Vec<(String, YDModule)>, BraidedError> {
    let q = Field::Rationals;
    let gf5 = Field::prime(5)?;
    Ok(vec![
        ("flip-3-Q".into(), flip_yd(q, 3)),
        ("flip-3-GF5".into(), flip_yd(gf5, 3)),
        ("minus-flip-3-Q".into(), minus_flip_yd(q, 3)?),
        ("minus-flip-2-Q".into(), minus_flip_yd(q, 2)?),
        ("q-line-GF7".into(), q_line()?),
        ("Y-S3-Q".into(), y_s3(q)?),
        ("Y-Pi-S3-Q".into(), build_reflection_yd(&s3_reflection(q)?)?.y_pi),
    ])
}

/// Named quasi-YD structures of the catalog.
pub fn qyd_examples() -> Result<Vec<(String, QydStructure)>, BraidedError> {
    let q = Field::Rationals;
    let mut out: Vec<(String, QydStructure)> = yd_examples()?
        .into_iter()
        .map(|(name, y)| (name, QydStructure::from_yd(&y)))
        .collect();
    out.push(("pathological-Q".into(), pathological(q)?));
    let (m, p) = s3_cherednik(q, 1, 1)?;
    out.push(("cherednik-S3-t1-c1-Q".into(), delta_tc(&m, &p)?));
    let (m, p) = s3_cherednik(Field::prime(3)?, 1, 1)?;
    out.push(("cherednik-S3-t1-c1-GF3".into(), delta_tc(&m, &p)?));
    let (m, p) = c4_cherednik(1, 1)?;
    out.push(("cherednik-C4-t1-c1-GF5".into(), delta_tc(&m, &p)?));
    out.push(("weyl-Q".into(), weyl(q, q.one())?));
    Ok(out)
}
