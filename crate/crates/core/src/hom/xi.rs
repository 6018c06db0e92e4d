//! Generalized Artin generators of the subgroups `L_k` (punctures `1..=k` fixed) and the lifts
//! `ξ_k(f) = π_k ∘ ψ_f ∘ ι_k` evaluated symbolically.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::braid::{center_generator, BraidWord};
use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::framed::{iota, TwistExpression, TwistSymbol};
use crate::hom::mapping::MappingClassSpec;
use crate::report::Certificate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenCase {
    /// 2-curve about two moveable punctures: `H_a`.
    HalfTwist,
    /// 2-curve about at least one fixed puncture: `T_a`.
    FullTwist,
    /// n-curve whose exterior puncture is moveable: `T_a z⁻¹`.
    MoveableExterior,
    /// n-curve whose exterior puncture is fixed: `T_a z^α`.
    FixedExterior,
}

impl fmt::Display for GenCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenCase::HalfTwist => "half-twist",
            GenCase::FullTwist => "full-twist",
            GenCase::MoveableExterior => "moveable-exterior",
            GenCase::FixedExterior => "fixed-exterior",
        })
    }
}

#[derive(Debug, Clone)]
pub struct GenArtinGenerator {
    pub k: usize,
    pub curve: Curve,
    /// `±1`; forced to `−1` for a moveable exterior and `+1` for 2-curves.
    pub alpha: i64,
    pub case: GenCase,
}

fn fixed(k: usize) -> BTreeSet<usize> {
    (1..=k).collect()
}

/// Tags `a` for the subgroup fixing punctures `1..=k` of the disk with `n + 1 ≥ 4` punctures.
pub fn gen_artin_generator(k: usize, a: &Curve, alpha: i64) -> Result<GenArtinGenerator> {
    let s = a.strands();
    if s < 4 {
        return Err(Error::Unsupported(format!("generalized Artin generators need n >= 3, got n = {}", s - 1)));
    }
    if k > s {
        return Err(Error::IndexOutOfRange(format!("k = {k} with {s} punctures")));
    }
    let enc = a.enclosed();
    let fixed = fixed(k);
    let (case, alpha) = if enc.len() == 2 {
        if enc.is_disjoint(&fixed) {
            (GenCase::HalfTwist, 1)
        } else {
            (GenCase::FullTwist, 1)
        }
    } else if enc.len() == s - 1 {
        let ext = (1..=s).find(|p| !enc.contains(p)).expect("one exterior puncture");
        if ext > k {
            (GenCase::MoveableExterior, -1)
        } else {
            if alpha != 1 && alpha != -1 {
                return Err(Error::Unsupported(format!("alpha must be +1 or -1, got {alpha}")));
            }
            (GenCase::FixedExterior, alpha)
        }
    } else {
        return Err(Error::WrongCurveType(format!("{a} encloses {} punctures; expected 2 or {}", enc.len(), s - 1)));
    };
    Ok(GenArtinGenerator { k, curve: a.clone(), alpha, case })
}

impl GenArtinGenerator {
    pub fn strands(&self) -> usize {
        self.curve.strands()
    }

    pub fn word(&self) -> Result<BraidWord> {
        let z = center_generator(self.strands())?;
        Ok(match self.case {
            GenCase::HalfTwist => self.curve.half_twist()?,
            GenCase::FullTwist => self.curve.full_twist().clone(),
            GenCase::MoveableExterior | GenCase::FixedExterior => self.curve.full_twist().mul(&z.pow(self.alpha)),
        })
    }

    pub fn support(&self) -> Vec<usize> {
        (1..=self.k).collect()
    }
}

impl fmt::Display for GenArtinGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.case {
            GenCase::HalfTwist => write!(f, "H_{{{}}}", self.curve),
            GenCase::FullTwist => write!(f, "T_{{{}}}", self.curve),
            _ => write!(f, "T_{{{}}} z^{}", self.curve, self.alpha),
        }
    }
}

/// `ι_k(g)` as twists: `H_a`; `T_a ∏_{i ∈ a, i ≤ k} T_{d_i}⁻¹`; and for n-curves that times
/// `(T_{d_1}⁻¹ ⋯ T_{d_k}⁻¹ T_{d_{n+2}})^α`, the image of `z^α`.
pub fn iota_k_expression(g: &GenArtinGenerator) -> TwistExpression {
    let s = g.strands();
    let mut e = TwistExpression::new(s);
    if g.case == GenCase::HalfTwist {
        e.push(TwistSymbol::Half(g.curve.clone()), 1);
        return e;
    }
    e.push(TwistSymbol::Curve(g.curve.clone()), 1);
    for i in g.curve.enclosed().into_iter().filter(|&i| i <= g.k) {
        e.push(TwistSymbol::Boundary(i), -1);
    }
    if matches!(g.case, GenCase::MoveableExterior | GenCase::FixedExterior) {
        let mut iz = TwistExpression::new(s);
        for i in 1..=g.k {
            iz.push(TwistSymbol::Boundary(i), -1);
        }
        iz.push(TwistSymbol::Boundary(s + 1), 1);
        e = e.concat(&iz.pow(g.alpha));
    }
    e
}

/// `ψ_f`: conjugation by `f`, symbol by symbol.
pub fn psi(f: &MappingClassSpec, e: &TwistExpression) -> Result<TwistExpression> {
    let eps = f.epsilon();
    let mut out = TwistExpression::new(e.strands());
    for (sym, x) in e.terms() {
        let img = match sym {
            TwistSymbol::Curve(c) => TwistSymbol::Curve(f.image(c)?),
            TwistSymbol::Half(c) => TwistSymbol::Half(f.image(c)?),
            TwistSymbol::Boundary(l) => TwistSymbol::Boundary(f.delta(*l)),
        };
        out.push(img, x * eps);
    }
    Ok(out)
}

/// How `π_k` treats inner boundary twists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapMode {
    /// Every inner boundary twist dies, the outer one becomes `z`.
    Exact,
    /// Fault injection: `T_{d_1}` becomes `z` instead of dying.
    Corrupted,
}

pub fn pi_k(e: &TwistExpression, mode: CapMode) -> Result<BraidWord> {
    match mode {
        CapMode::Exact => e.cap_all(),
        CapMode::Corrupted => {
            let s = e.strands();
            let mut fake = TwistExpression::new(s);
            for (sym, x) in e.terms() {
                match sym {
                    TwistSymbol::Boundary(1) => fake.push(TwistSymbol::Boundary(s + 1), *x),
                    _ => fake.push(sym.clone(), *x),
                }
            }
            fake.cap_all()
        }
    }
}

#[derive(Debug, Clone)]
pub struct XiEvaluation {
    pub iota: TwistExpression,
    pub pushed: TwistExpression,
    pub word: BraidWord,
}

fn check_labels(k: usize, f: &MappingClassSpec) -> Result<()> {
    let s = f.strands();
    let labels: BTreeSet<usize> = (1..=k).chain([s + 1]).collect();
    let image: BTreeSet<usize> = labels.iter().map(|&l| f.delta(l)).collect();
    if image != labels {
        return Err(Error::InvalidBoundaryData(format!(
            "the label permutation does not preserve the fixed punctures 1..={k} and the outer boundary"
        )));
    }
    Ok(())
}

/// `ξ_k(f)(g) = π_k(ψ_f(ι_k(g)))`.
pub fn xi_evaluate(k: usize, f: &MappingClassSpec, g: &GenArtinGenerator, mode: CapMode) -> Result<XiEvaluation> {
    if f.strands() != g.strands() {
        return Err(Error::StrandMismatch(f.strands(), g.strands()));
    }
    if g.k != k {
        return Err(Error::IndexOutOfRange(format!("generator of L_{} evaluated by xi_{k}", g.k)));
    }
    check_labels(k, f)?;
    let iota = iota_k_expression(g).collect_boundaries();
    let pushed = psi(f, &iota)?.collect_boundaries();
    let word = pi_k(&pushed, mode)?;
    Ok(XiEvaluation { iota, pushed, word })
}

/// Confirms that the twist form of `ι_k(g)` is the zero-framed lift of the word of `g`.
pub fn iota_expression_consistent(g: &GenArtinGenerator) -> Result<bool> {
    let support = g.support();
    iota_k_expression(g).evaluate(&support)?.framed_equals(&iota(&g.word()?, &support)?)
}

/// `δ(f) = +1` when `f` fixes puncture 1, `−1` when it swaps it with the outer boundary.
pub fn delta_sign(f: &MappingClassSpec) -> i64 {
    if f.delta(1) == 1 {
        1
    } else {
        -1
    }
}

/// One representative per case for `k = 1`, with both signs in the fixed-exterior case.
pub fn xi1_representatives(n: usize) -> Result<Vec<GenArtinGenerator>> {
    let s = n + 1;
    Ok(vec![
        gen_artin_generator(1, &Curve::standard(s, 2, 3)?, 1)?,
        gen_artin_generator(1, &Curve::standard(s, 1, 2)?, 1)?,
        gen_artin_generator(1, &Curve::standard(s, 1, s - 1)?, -1)?,
        gen_artin_generator(1, &Curve::standard(s, 2, s)?, 1)?,
        gen_artin_generator(1, &Curve::standard(s, 2, s)?, -1)?,
    ])
}

/// Compares `ξ_1(f)(g(a, α))` with `g(f⋆a, δ(f)α)^{ε(f)}` on every case representative whose
/// curve `f` can map; representatives outside an extensional table are noted and skipped.
pub fn xi1_formula_check(n: usize, f: &MappingClassSpec, mode: CapMode) -> Result<Certificate> {
    if n < 3 {
        return Err(Error::Unsupported(format!("xi_1 formula check needs n >= 3, got {n}")));
    }
    let mut cert = Certificate::new(format!("xi_1 formula, n = {n}, epsilon = {}, delta = {}", f.epsilon(), delta_sign(f)));
    for g in xi1_representatives(n)? {
        let fa = match f.image(&g.curve) {
            Ok(c) => c,
            Err(Error::MissingCurveImage(c)) => {
                cert.note(format!("{} skipped: no image for {c}", g.case));
                continue;
            }
            Err(e) => return Err(e),
        };
        let ev = xi_evaluate(1, f, &g, mode)?;
        let expected = gen_artin_generator(1, &fa, delta_sign(f) * g.alpha)?;
        let rhs = expected.word()?.pow(f.epsilon());
        cert.push(
            format!("{} alpha={}", g.case, g.alpha),
            format!("xi_1(f)({g}) = ({expected})^{}", f.epsilon()),
            format!("{} => {}", ev.pushed, ev.word.normal_form()),
            rhs.normal_form().to_string(),
            ev.word.equals(&rhs)?,
        );
    }
    Ok(cert)
}

/// Recognizes `w` as `g'^{ε'}` for a generator `g'` on curve `c`.
pub fn identify_generator(k: usize, c: &Curve, w: &BraidWord) -> Result<Option<(GenArtinGenerator, i64)>> {
    for alpha in [1, -1] {
        let g = gen_artin_generator(k, c, alpha)?;
        for eps in [1, -1] {
            if g.word()?.pow(eps).equals(w)? {
                return Ok(Some((g, eps)));
            }
        }
    }
    Ok(None)
}

/// `ξ_k(f ∘ f')(g)` against `ξ_k(f)(ξ_k(f')(g))`, the inner result read back as a generator.
pub fn xi_functorial_on(k: usize, f: &MappingClassSpec, f2: &MappingClassSpec, g: &GenArtinGenerator) -> Result<bool> {
    let inner = xi_evaluate(k, f2, g, CapMode::Exact)?;
    let (g2, eps) = identify_generator(k, &f2.image(&g.curve)?, &inner.word)?
        .ok_or_else(|| Error::WrongCurveType(format!("xi image {} is not a generator", inner.word)))?;
    let outer = xi_evaluate(k, f, &g2, CapMode::Exact)?.word.pow(eps);
    let direct = xi_evaluate(k, &f.compose(f2)?, g, CapMode::Exact)?.word;
    outer.equals(&direct)
}

/// Writes `w` as `T_c^e z^m` over the named curves, if possible.
fn describe(w: &BraidWord, named: &[(&str, &Curve)]) -> Result<String> {
    let z = center_generator(w.strands())?;
    for m in -2i64..=2 {
        let rest = w.mul(&z.pow(-m));
        if m != 0 && rest.is_identity_element() {
            return Ok(format!("z^{m}"));
        }
        for (name, c) in named {
            for e in [1i64, -1] {
                if c.full_twist().pow(e).equals(&rest)? {
                    let t = if e == 1 { format!("T_{name}") } else { format!("T_{name}^-1") };
                    return Ok(match m {
                        0 => t,
                        1 => format!("{t} z"),
                        _ => format!("{t} z^{m}"),
                    });
                }
            }
        }
    }
    Ok(w.normal_form().to_string())
}

fn sphere_perm(s: usize, map: impl Fn(usize) -> usize) -> Vec<usize> {
    (1..=s + 1).map(map).collect()
}

/// The failure of `ξ_{n+1}` to be a homomorphism, with `k = n + 1` (every puncture fixed) and
/// `a` the curve about punctures `2..=n+1`:
///
/// - `g` sends `a` to the curve `b` about `1, 2`, fixing label 1 and moving the outer label to 2
/// - `f` sends `b` back to `a`, moving label 1 to the outer label
/// - `f ∘ g` fixes `a` and swaps label 1 with the outer label
///
/// The transcript records `ξ(g)(T_a z⁻¹) = T_b`, `ξ(f)(T_b) = T_a z⁻¹`, and
/// `ξ(fg)(T_a z⁻¹) = T_a z`. A control pair `g⁻¹, g` composes correctly.
pub fn xi_top_counterexample(n: usize) -> Result<Certificate> {
    if n < 3 {
        return Err(Error::Unsupported(format!("the counterexample needs n >= 3, got {n}")));
    }
    let s = n + 1;
    let k = s;
    let a = Curve::standard(s, 2, s)?;
    let b = Curve::standard(s, 1, 2)?;
    let named = [("a", &a), ("g(a)", &b)];
    let g_delta = sphere_perm(s, |l| match l {
        1 => 1,
        l if l == s + 1 => 2,
        l => l + 1,
    });
    let f_delta = sphere_perm(s, |l| match l {
        1 => s + 1,
        2 => 1,
        l => l - 1,
    });
    let g_inv_delta = sphere_perm(s, |l| match l {
        1 => 1,
        2 => s + 1,
        l => l - 1,
    });
    let g = MappingClassSpec::table(s, vec![(a.clone(), b.clone())], 1, g_delta)?;
    let f = MappingClassSpec::table(s, vec![(b.clone(), a.clone())], 1, f_delta)?;
    let control = MappingClassSpec::table(s, vec![(b.clone(), a.clone())], 1, g_inv_delta)?;
    let fg = f.compose(&g)?;

    let gen = gen_artin_generator(k, &a, -1)?;
    let mut cert = Certificate::new(format!("xi_(n+1) is not a homomorphism, n = {n}"));
    cert.note(format!("a = {a}, g(a) = {b}, k = {k}"));
    cert.note(format!("delta(g) = {:?}, delta(f) = {:?}, delta(fg) = {:?}", g.delta_images(), f.delta_images(), fg.delta_images()));

    let src = describe(&gen.word()?, &named)?;
    let iota_e = iota_k_expression(&gen).collect_boundaries();
    cert.note(format!("iota({src}) = {iota_e}"));
    cert.push(
        "iota-consistent",
        "the twist form of iota(T_a z^-1) is its zero-framed lift",
        iota_e.to_string(),
        "iota(T_a z^-1)",
        iota_expression_consistent(&gen)?,
    );

    let xg = xi_evaluate(k, &g, &gen, CapMode::Exact)?;
    let xg_s = describe(&xg.word, &named)?;
    cert.note(format!("xi(g): {src} -> {} -> {xg_s}", xg.pushed));
    let (g1, e1) = identify_generator(k, &b, &xg.word)?
        .ok_or_else(|| Error::WrongCurveType(format!("xi(g) image {} is not a generator", xg.word)))?;
    let xf = xi_evaluate(k, &f, &g1, CapMode::Exact)?;
    let xf_word = xf.word.pow(e1);
    let xf_s = describe(&xf_word, &named)?;
    cert.note(format!("xi(f): {xg_s} -> {} -> {xf_s}", xf.pushed));
    let xfg = xi_evaluate(k, &fg, &gen, CapMode::Exact)?;
    let xfg_s = describe(&xfg.word, &named)?;
    cert.note(format!("xi(fg): {src} -> {} -> {xfg_s}", xfg.pushed));

    cert.push("xi(g)", "xi(g)(T_a z^-1) = T_g(a)", &xg_s, "T_g(a)", xg.word.equals(b.full_twist())?);
    let z = center_generator(s)?;
    let ta_zinv = a.full_twist().mul(&z.pow(-1));
    let ta_z = a.full_twist().mul(&z);
    cert.push("xi(f)", "xi(f)(T_g(a)) = T_a z^-1", &xf_s, "T_a z^-1", xf_word.equals(&ta_zinv)?);
    cert.push("xi(fg)", "xi(fg)(T_a z^-1) = T_a z", &xfg_s, "T_a z", xfg.word.equals(&ta_z)?);
    cert.push(
        "discrepancy",
        "xi(f) xi(g) differs from xi(fg)",
        format!("{src} -> {xf_s}"),
        format!("{src} -> {xfg_s}"),
        !xf_word.equals(&xfg.word)?,
    );

    let ctl = control.compose(&g)?;
    let xc = xi_evaluate(k, &control, &g1, CapMode::Exact)?.word.pow(e1);
    let xcg = xi_evaluate(k, &ctl, &gen, CapMode::Exact)?.word;
    cert.push(
        "control",
        "with the identity label permutation on the composite, xi(g^-1) xi(g) = xi(g^-1 g)",
        describe(&xc, &named)?,
        describe(&xcg, &named)?,
        xc.equals(&xcg)? && xcg.equals(&ta_zinv)?,
    );
    cert.note(format!("takes {src} to {xfg_s}; composing the lifts gives {xf_s}"));
    Ok(cert)
}
