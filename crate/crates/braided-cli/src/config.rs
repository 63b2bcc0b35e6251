//! Run configuration read from JSON, and its resolution into library objects.

use std::collections::BTreeMap;
use std::sync::Arc;

use braided::cherednik::{build_reflection_yd, find_reflections, CherednikParams};
use braided::gmodule::{GModule, YDModule};
use braided::group::{parse_cycles, Elem, FinGroup};
use braided::qyd::QydStructure;
use braided::{Field, Matrix, Scalar};

use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum FieldSpec {
    #[default]
    Rationals,
    Prime(u64),
}

/// A scalar written either as a JSON integer or as text such as `"-3/4"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarText {
    Int(i64),
    Text(String),
}

impl ScalarText {
    pub fn resolve(&self, field: Field) -> Result<Scalar, CliError> {
        match self {
            ScalarText::Int(n) => Ok(field.int(*n)),
            ScalarText::Text(s) => field.parse(s).map_err(|e| CliError::Input(format!("scalar {s:?}: {e}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupSpec {
    Trivial,
    Symmetric(usize),
    Cyclic(usize),
    Dihedral(usize),
    /// Generators in cycle notation on the points `1..=degree`.
    Permutations { degree: usize, generators: Vec<String> },
}

type MatrixText = Vec<Vec<ScalarText>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleSpec {
    Reflection,
    Permutation,
    Sign,
    Trivial(usize),
    /// A cyclic group's generator acting on a line by this scalar.
    Character(ScalarText),
    /// One matrix per group generator, in generator order.
    Matrices(Vec<MatrixText>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClassValues {
    ByClass { by_class: BTreeMap<String, ScalarText> },
    ByElement { by_element: BTreeMap<String, ScalarText> },
    Uniform(ScalarText),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureSpec {
    Zero,
    /// `L_e = t`, `L_s = c_s (1 - s)` on the module's reflections.
    Cherednik { t: ScalarText, c: ClassValues },
    /// A Yetter-Drinfeld grading: the degree of each basis vector.
    Yd { degrees: Vec<String> },
    /// The module spanned by the reflections of the configured module.
    ReflectionYd,
    ReflectionYdPi,
    /// `L_h` for each listed group element; unlisted elements get zero.
    Explicit(BTreeMap<String, MatrixText>),
    Mixture(Vec<(ScalarText, StructureSpec)>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DoubleKind {
    Free,
    Minimal,
    Symmetric,
}

fn default_truncation() -> usize {
    3
}

fn default_trials() -> usize {
    3
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: String,
    #[serde(default)]
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureSpec>,
    #[serde(default = "default_truncation")]
    pub truncation: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub double: Option<DoubleKind>,
    /// Module of `G` the standard module is induced from.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<ModuleSpec>,
    /// Dimension of `V` for the Kaplansky command.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    /// Accept the module as irreducible without testing it.
    #[serde(default)]
    pub assume_irreducible: bool,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<RunConfig, CliError> {
        let cfg: RunConfig = serde_json::from_str(text).map_err(|e| CliError::Input(format!("config: {e}")))?;
        if cfg.truncation == 0 {
            return Err(CliError::Input("truncation must be at least 1".into()));
        }
        Ok(cfg)
    }

    pub fn field(&self) -> Result<Field, CliError> {
        match self.field {
            FieldSpec::Rationals => Ok(Field::Rationals),
            FieldSpec::Prime(p) => Field::prime(p).map_err(|e| CliError::Input(format!("field: {e}"))),
        }
    }

    pub fn group(&self, cap: usize) -> Result<Arc<FinGroup>, CliError> {
        let spec = self.group.as_ref().ok_or_else(|| CliError::Input(format!("{} needs a group", self.command)))?;
        let guard = |order: usize| {
            if order > cap {
                Err(CliError::Cap(format!("group of order {order} exceeds --max-group-order {cap}")))
            } else {
                Ok(())
            }
        };
        let g = match spec {
            GroupSpec::Trivial => FinGroup::trivial(),
            GroupSpec::Symmetric(n) => FinGroup::symmetric_capped(*n, cap)?,
            GroupSpec::Cyclic(n) => {
                guard(*n)?;
                FinGroup::cyclic(*n)?
            }
            GroupSpec::Dihedral(n) => {
                guard(n.saturating_mul(2))?;
                FinGroup::dihedral(*n)?
            }
            GroupSpec::Permutations { degree, generators } => {
                if generators.is_empty() {
                    return Err(CliError::Input("permutation group needs at least one generator".into()));
                }
                let perms = generators.iter().map(|s| parse_cycles(s, *degree)).collect::<Result<Vec<_>, _>>()?;
                FinGroup::from_permutations(&perms, cap)?
            }
        };
        Ok(Arc::new(g))
    }

    pub fn module(&self, group: &Arc<FinGroup>, field: Field) -> Result<GModule, CliError> {
        let spec = self.module.as_ref().ok_or_else(|| CliError::Input(format!("{} needs a module", self.command)))?;
        resolve_module(spec, self.group.as_ref(), group, field)
    }
}

pub fn resolve_module(spec: &ModuleSpec, named: Option<&GroupSpec>, group: &Arc<FinGroup>, field: Field) -> Result<GModule, CliError> {
    let g = group.clone();
    Ok(match spec {
        ModuleSpec::Reflection => match named {
            Some(GroupSpec::Symmetric(_)) => GModule::symmetric_reflection(g, field)?,
            Some(GroupSpec::Dihedral(n)) => GModule::dihedral_reflection(g, field, *n)?,
            _ => {
                return Err(CliError::Input(
                    "a named reflection representation needs a symmetric or dihedral group; give matrices instead".into(),
                ))
            }
        },
        ModuleSpec::Permutation => GModule::permutation(g, field),
        ModuleSpec::Sign => GModule::sign(g, field),
        ModuleSpec::Trivial(d) => GModule::trivial(g, field, *d),
        ModuleSpec::Character(q) => GModule::cyclic_character(g, q.resolve(field)?)?,
        ModuleSpec::Matrices(mats) => {
            let images = mats.iter().map(|m| matrix(m, field)).collect::<Result<Vec<_>, _>>()?;
            GModule::from_generator_images(g, field, &images)?
        }
    })
}

fn matrix(rows: &MatrixText, field: Field) -> Result<Matrix, CliError> {
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(CliError::Input("ragged matrix".into()));
    }
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|x| x.resolve(field)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(field, cols, &parsed).map_err(braided::BraidedError::from)?)
}

pub fn element(group: &FinGroup, label: &str) -> Result<Elem, CliError> {
    group.find_label(label).ok_or_else(|| CliError::Input(format!("no group element {label:?}")))
}

/// A structure spec resolved against a module.
#[derive(Clone, Debug)]
pub enum Structure {
    Qyd(QydStructure),
    Yd(YDModule),
    Cherednik(GModule, CherednikParams),
}

impl Structure {
    pub fn qyd(&self) -> Result<QydStructure, CliError> {
        Ok(match self {
            Structure::Qyd(q) => q.clone(),
            Structure::Yd(y) => QydStructure::from_yd(y),
            Structure::Cherednik(m, p) => braided::cherednik::delta_tc(m, p)?,
        })
    }

    pub fn yd(&self) -> Result<&YDModule, CliError> {
        match self {
            Structure::Yd(y) => Ok(y),
            _ => Err(CliError::Input("this command needs a Yetter-Drinfeld structure (yd, reflection_yd or reflection_yd_pi)".into())),
        }
    }

    pub fn cherednik(&self) -> Result<(&GModule, &CherednikParams), CliError> {
        match self {
            Structure::Cherednik(m, p) => Ok((m, p)),
            _ => Err(CliError::Input("this command needs a cherednik structure".into())),
        }
    }
}

pub fn resolve_structure(spec: &StructureSpec, module: &GModule) -> Result<Structure, CliError> {
    let field = module.field();
    let group = module.group();
    Ok(match spec {
        StructureSpec::Zero => Structure::Qyd(QydStructure::zero(module.clone())),
        StructureSpec::Cherednik { t, c } => {
            let t = t.resolve(field)?;
            let params = match c {
                ClassValues::Uniform(c) => CherednikParams::uniform(module, t, c.resolve(field)?),
                ClassValues::ByElement { by_element } => {
                    let values = labelled(group, by_element, field)?;
                    CherednikParams::from_element_values(module, t, &values)?
                }
                ClassValues::ByClass { by_class } => {
                    let classes = group.class_index();
                    let mut per_class = BTreeMap::new();
                    for (label, v) in by_class {
                        per_class.insert(classes[element(group, label)? as usize], v.resolve(field)?);
                    }
                    let mut values = BTreeMap::new();
                    for r in find_reflections(module) {
                        let v = per_class.get(&r.class_index).ok_or_else(|| {
                            CliError::Input(format!("no c for the class of the reflection {}", group.label(r.element)))
                        })?;
                        values.insert(r.element, v.clone());
                    }
                    CherednikParams::from_element_values(module, t, &values)?
                }
            };
            Structure::Cherednik(module.clone(), params)
        }
        StructureSpec::Yd { degrees } => {
            if degrees.len() != module.dim() {
                return Err(CliError::Input(format!("{} degrees given for a module of dimension {}", degrees.len(), module.dim())));
            }
            let degs = degrees.iter().map(|l| element(group, l)).collect::<Result<Vec<_>, _>>()?;
            Structure::Yd(YDModule::from_basis_degrees(module.clone(), &degs))
        }
        StructureSpec::ReflectionYd => Structure::Yd(build_reflection_yd(module)?.y_g),
        StructureSpec::ReflectionYdPi => Structure::Yd(build_reflection_yd(module)?.y_pi),
        StructureSpec::Explicit(maps) => {
            let mut family = BTreeMap::new();
            for (label, m) in maps {
                family.insert(element(group, label)?, matrix(m, field)?);
            }
            Structure::Qyd(QydStructure::new(module.clone(), family)?)
        }
        StructureSpec::Mixture(parts) => {
            let resolved = parts
                .iter()
                .map(|(w, s)| Ok((w.resolve(field)?, resolve_structure(s, module)?.qyd()?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            let refs: Vec<(Scalar, &QydStructure)> = resolved.iter().map(|(w, q)| (w.clone(), q)).collect();
            Structure::Qyd(QydStructure::mix(&refs)?)
        }
    })
}

fn labelled(group: &FinGroup, values: &BTreeMap<String, ScalarText>, field: Field) -> Result<BTreeMap<Elem, Scalar>, CliError> {
    values.iter().map(|(l, v)| Ok((element(group, l)?, v.resolve(field)?))).collect()
}
