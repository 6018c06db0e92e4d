//! Endomorphisms given by generator images, the injection catalogue into the braid group, and
//! the arithmetic of central transvections.

use std::fmt;

use serde::Serialize;

use crate::braid::{center_generator, BraidWord};
use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::framed::pair_curve;
use crate::hom::mapping::MappingClassSpec;
use crate::hom::presentation::{pure_pairs, Family, Presentation, SourceWord};

#[derive(Debug, Clone)]
pub struct EndomorphismSpec {
    pub source: Presentation,
    pub images: Vec<BraidWord>,
}

/// The first relation whose two sides have different images.
#[derive(Debug, Clone, Serialize)]
pub struct RelationWitness {
    pub relation: usize,
    pub lhs: String,
    pub rhs: String,
    pub lhs_image: String,
    pub rhs_image: String,
}

impl EndomorphismSpec {
    pub fn new(source: Presentation, images: Vec<BraidWord>) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(Error::Arity { expected: source.rank(), got: images.len() });
        }
        let s = images.first().map(|w| w.strands()).unwrap_or(source.target_strands());
        if let Some(w) = images.iter().find(|w| w.strands() != s) {
            return Err(Error::StrandMismatch(w.strands(), s));
        }
        Ok(EndomorphismSpec { source, images })
    }

    pub fn target_strands(&self) -> usize {
        self.images[0].strands()
    }

    pub fn apply(&self, w: &SourceWord) -> BraidWord {
        let mut out = BraidWord::identity(self.target_strands()).expect("strand count checked");
        for &(g, e) in w {
            out = out.compose(&self.images[g].pow(e)).expect("same strands");
        }
        out
    }

    /// Image of the source center generator.
    pub fn z_image(&self) -> BraidWord {
        self.apply(&self.source.center_word())
    }

    pub fn to_record(&self) -> EndomorphismRecord {
        EndomorphismRecord {
            family: self.source.family,
            n: self.source.n,
            target_strands: self.target_strands(),
            images: self.source.generators.iter().cloned().zip(self.images.iter().map(|w| w.to_string())).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EndomorphismRecord {
    pub family: Family,
    pub n: usize,
    pub target_strands: usize,
    pub images: Vec<(String, String)>,
}

/// `Ok(None)` when every relation maps to an equality, otherwise the first failing relation.
pub fn check_homomorphism(spec: &EndomorphismSpec) -> Result<Option<RelationWitness>> {
    for (k, (l, r)) in spec.source.relations.iter().enumerate() {
        let (li, ri) = (spec.apply(l), spec.apply(r));
        if !li.equals(&ri)? {
            return Ok(Some(RelationWitness {
                relation: k,
                lhs: spec.source.format_word(l),
                rhs: spec.source.format_word(r),
                lhs_image: li.to_string(),
                rhs_image: ri.to_string(),
            }));
        }
    }
    Ok(None)
}

/// Central parameters of a catalogue entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum TransvectionParams {
    /// One `t` for all `σ_i` (they are conjugate).
    A { t: i64 },
    /// `u` on `s_1`, `v` on `s_2..s_n`.
    B { u: i64, v: i64 },
    /// One `t_{i,j}` per pure generator, in generator order.
    Pure { t: Vec<i64> },
}

impl TransvectionParams {
    pub fn family(&self) -> Family {
        match self {
            TransvectionParams::A { .. } => Family::A,
            TransvectionParams::B { .. } => Family::B,
            TransvectionParams::Pure { .. } => Family::Pure,
        }
    }
}

impl fmt::Display for TransvectionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransvectionParams::A { t } => write!(f, "t={t}"),
            TransvectionParams::B { u, v } => write!(f, "u={u} v={v}"),
            TransvectionParams::Pure { t } => {
                write!(f, "t=[{}]", t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            }
        }
    }
}

fn pure_count(n: usize) -> usize {
    (n + 1) * n / 2
}

fn check_params(family: Family, n: usize, p: &TransvectionParams) -> Result<()> {
    if p.family() != family {
        return Err(Error::Unsupported(format!("{} parameters for family {family}", p.family())));
    }
    if let TransvectionParams::Pure { t } = p {
        if t.len() != pure_count(n) {
            return Err(Error::Arity { expected: pure_count(n), got: t.len() });
        }
    }
    Ok(())
}

/// Generator images `H_{f⋆a}^ε z^t`, `T_{f⋆a}^ε z^t` for the standard curves `a` of each
/// family. `f` must be geometric.
pub fn catalogue_injection(
    family: Family,
    n: usize,
    f: &MappingClassSpec,
    params: &TransvectionParams,
) -> Result<EndomorphismSpec> {
    let source = crate::hom::presentation::presentation_of(family, n)?;
    let s = n + 1;
    if f.strands() != s {
        return Err(Error::StrandMismatch(f.strands(), s));
    }
    if !f.is_geometric() {
        return Err(Error::NonGeometric);
    }
    check_params(family, n, params)?;
    let z = center_generator(s)?;
    let eps = f.epsilon();
    let image = |c: &Curve, half: bool, t: i64| -> Result<BraidWord> {
        Ok(f.image(c)?.twist_word(half)?.pow(eps).mul(&z.pow(t)))
    };
    let images = match params {
        TransvectionParams::A { t } => {
            (1..=n).map(|i| image(&Curve::standard(s, i, i + 1)?, true, *t)).collect::<Result<Vec<_>>>()?
        }
        TransvectionParams::B { u, v } => (1..=n)
            .map(|i| {
                let a = Curve::standard(s, i, i + 1)?;
                if i == 1 {
                    image(&a, false, *u)
                } else {
                    image(&a, true, *v)
                }
            })
            .collect::<Result<Vec<_>>>()?,
        TransvectionParams::Pure { t } => pure_pairs(s)
            .into_iter()
            .zip(t)
            .map(|((i, j), t)| image(&pair_curve(i, j, s)?, false, *t))
            .collect::<Result<Vec<_>>>()?,
    };
    EndomorphismSpec::new(source, images)
}

/// The exponent `e` with `ρ(z) = z^e` for an orientation-preserving catalogue entry:
/// `1 + t·n(n+1)`, `1 + nu + n(n−1)v`, or `1 + Σ t_{i,j}`.
pub fn z_image_exponent(family: Family, n: usize, params: &TransvectionParams) -> Result<i64> {
    z_image_exponent_signed(family, n, params, 1)
}

/// As [`z_image_exponent`] for either orientation: the leading `1` becomes `ε`.
pub fn z_image_exponent_signed(family: Family, n: usize, params: &TransvectionParams, epsilon: i64) -> Result<i64> {
    check_params(family, n, params)?;
    let n = n as i64;
    Ok(epsilon
        + match params {
            TransvectionParams::A { t } => t * n * (n + 1),
            TransvectionParams::B { u, v } => n * u + n * (n - 1) * v,
            TransvectionParams::Pure { t } => t.iter().sum(),
        })
}

/// Reads `e` off `ρ(z)` through its exponent sum and confirms `ρ(z) = z^e` by normal forms.
/// `None` when `ρ(z)` is not a power of `z`.
pub fn engine_z_exponent(spec: &EndomorphismSpec) -> Result<Option<i64>> {
    let s = spec.target_strands();
    let w = spec.z_image();
    let per_z = (s * (s - 1)) as i64;
    let sum = w.exponent_sum();
    if sum % per_z != 0 {
        return Ok(None);
    }
    let e = sum / per_z;
    Ok(center_generator(s)?.pow(e).equals(&w)?.then_some(e))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TransvectionClass {
    Automorphism,
    InjectiveNonsurjective,
    NonInjective,
}

impl fmt::Display for TransvectionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TransvectionClass::Automorphism => "automorphism",
            TransvectionClass::InjectiveNonsurjective => "injective-nonsurjective",
            TransvectionClass::NonInjective => "non-injective",
        })
    }
}

/// Solutions of `nu + n(n−1)v = c` for the B-type transvections.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BLattice {
    /// Generator of the rank-1 lattice `nu + n(n−1)v = 0`.
    pub generator: (i64, i64),
    /// `gcd(n, n(n−1)) = n`; the exponent `1 + c` is reachable iff `n | c`.
    pub gcd: i64,
    /// `z ↦ z^{−1}` needs `c = −2`, which `n ≥ 3` never divides.
    pub inverse_z_solvable: bool,
}

pub fn b_lattice(n: usize) -> BLattice {
    let n = n as i64;
    BLattice { generator: (n - 1, -1), gcd: n, inverse_z_solvable: (-2i64).rem_euclid(n) == 0 }
}

/// `(u, v)` with `z ↦ z^{target}`, or `None` when `n ∤ target − 1`.
pub fn b_solution(n: usize, target: i64) -> Option<(i64, i64)> {
    let n = n as i64;
    let c = target - 1;
    (c.rem_euclid(n) == 0).then_some((c / n, 0))
}

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub family: Family,
    pub n: usize,
    pub params: String,
    pub exponent: i64,
    pub class: TransvectionClass,
    pub lattice: Option<BLattice>,
}

/// Classification by the exponent `e` of `ρ(z) = z^e`: `±1` automorphism, `0` non-injective
/// (`z` in the kernel), otherwise injective but `z` has no preimage. Injectivity itself is the
/// structural argument; the certificate computed here is `ker ∩ Z = 1`.
pub fn transvection_classify(family: Family, n: usize, params: &TransvectionParams) -> Result<Classification> {
    let exponent = z_image_exponent(family, n, params)?;
    let class = match exponent {
        1 | -1 => TransvectionClass::Automorphism,
        0 => TransvectionClass::NonInjective,
        _ => TransvectionClass::InjectiveNonsurjective,
    };
    Ok(Classification {
        family,
        n,
        params: params.to_string(),
        exponent,
        class,
        lattice: (family == Family::B).then(|| b_lattice(n)),
    })
}

/// `n` in `lo..=hi` for which `z ↦ z^{−1}` is solvable among B-type transvections.
pub fn b_inverse_z_sweep(lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi).filter(|&n| b_lattice(n).inverse_z_solvable).collect()
}
