//! Seeded property suite over generated instances.
//!
//! Every instance is produced from its own generator (see [`crate::random`])
//! and evaluated by a named [`Check`]. Failing instances are kept as
//! [`ReplayDoc`]s, which re-run the same check from JSON.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::endo::{
    artin_rees_holds, artin_rees_index, one_minus_t_surjective, parse_unipoly, split_sequence_check,
    EndoDoc, EndoModule, SubmoduleRep, TVector,
};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graded::{GradedMorphism, GradedPresentation, MorphismDoc, PresentationDoc};
use crate::k0::{
    check_base_change, check_devissage_classes, check_localization_classes, check_main_diagram,
    check_ses_additivity, check_tf_decomposition, kpoly, EndoSes, GradedSes, ShortExactSequence,
};
use crate::linalg::UniPoly;
use crate::poly::Monomial;
use crate::random::{self, GenParams, SplitMix64};
use crate::theta;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub seed: u64,
    pub instance_count: usize,
    pub max_gens: usize,
    pub max_degree: usize,
    pub piece_bound: usize,
    pub field: FieldSpec,
    pub artin_rees_bound: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            instance_count: 50,
            max_gens: 6,
            max_degree: 6,
            piece_bound: 12,
            field: FieldSpec::Prime(32003),
            artin_rees_bound: 16,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("max_gens", self.max_gens),
            ("max_degree", self.max_degree),
            ("piece_bound", self.piece_bound),
            ("artin_rees_bound", self.artin_rees_bound),
        ] {
            if v == 0 {
                return Err(Error::InvalidConfig(format!("{name} must be positive")));
            }
        }
        Ok(())
    }

    fn limits(&self) -> Limits {
        Limits {
            piece_bound: self.piece_bound,
            artin_rees_bound: self.artin_rees_bound,
        }
    }

    fn params(&self, nvars: usize) -> GenParams {
        GenParams {
            field: self.field,
            nvars,
            max_gens: self.max_gens,
            max_degree: self.max_degree as i64,
        }
    }
}

/// Bounds a single check needs; carried along in replay files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Limits {
    pub piece_bound: usize,
    pub artin_rees_bound: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    KoszulSquare,
    KoszulFree,
    KoszulProperties,
    EulerIdentity,
    SplitSequence,
    ArtinRees,
    NilpotencyIndex,
    ThetaExactness,
    ThetaNilpotent,
    ThetaFree,
    PsiTorsion,
    Devissage,
    MainDiagram,
    Localization,
    TfDecomposition,
    BaseChange,
    SesAdditivity,
    OracleAgreement,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::KoszulSquare => "koszul_square",
            Check::KoszulFree => "koszul_free",
            Check::KoszulProperties => "koszul_properties",
            Check::EulerIdentity => "euler_identity",
            Check::SplitSequence => "split_sequence",
            Check::ArtinRees => "artin_rees",
            Check::NilpotencyIndex => "nilpotency_index",
            Check::ThetaExactness => "theta_exactness",
            Check::ThetaNilpotent => "theta_nilpotent",
            Check::ThetaFree => "theta_free",
            Check::PsiTorsion => "psi_torsion",
            Check::Devissage => "devissage",
            Check::MainDiagram => "main_diagram",
            Check::Localization => "localization",
            Check::TfDecomposition => "tf_decomposition",
            Check::BaseChange => "base_change",
            Check::SesAdditivity => "ses_additivity",
            Check::OracleAgreement => "oracle_agreement",
        }
    }
}

/// A check input in its canonical JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Instance {
    Presentation {
        module: PresentationDoc,
    },
    /// The injective map of a short exact sequence; the quotient is its cokernel.
    Inclusion {
        map: MorphismDoc,
    },
    EndoPair {
        module: EndoDoc,
        submodule: Vec<Vec<String>>,
        #[serde(default)]
        expected_index: Option<usize>,
    },
    GradedTModule {
        module: EndoDoc,
        degrees: Vec<i64>,
    },
    Grid {
        field: FieldSpec,
        a_dim: usize,
        shift: i64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub check: String,
    #[serde(rename = "instance-id")]
    pub instance_id: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// Everything needed to re-run one check on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReplayDoc {
    pub check: Check,
    pub instance_id: String,
    pub limits: Limits,
    pub instance: Instance,
}

impl ReplayDoc {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn run(&self) -> Result<Vec<Record>> {
        evaluate(self.check, &self.instance_id, &self.instance, &self.limits)
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub records: Vec<Record>,
    pub failures: Vec<ReplayDoc>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.records).expect("serializable")
    }

    /// One row per check: `check,instances,passed,failed`.
    pub fn to_csv(&self) -> String {
        let mut counts: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for r in &self.records {
            let e = counts.entry(&r.check).or_default();
            e.0 += 1;
            if r.pass {
                e.1 += 1;
            }
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["check", "instances", "passed", "failed"])
            .expect("in-memory write");
        for (check, (total, passed)) in counts {
            w.write_record([
                check.to_string(),
                total.to_string(),
                passed.to_string(),
                (total - passed).to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii")
    }
}

fn record(check: &str, id: &str, expected: impl ToString, actual: impl ToString, pass: bool) -> Record {
    Record {
        check: check.to_string(),
        instance_id: id.to_string(),
        expected: expected.to_string(),
        actual: actual.to_string(),
        pass,
    }
}

fn bool_record(check: &str, id: &str, actual: bool) -> Record {
    record(check, id, true, actual, actual)
}

// ---------------------------------------------------------------------------
// instance decoding

fn presentation(inst: &Instance, check: Check) -> Result<GradedPresentation> {
    match inst {
        Instance::Presentation { module } => GradedPresentation::from_doc(module),
        _ => Err(wrong_kind(check)),
    }
}

fn graded_ses(inst: &Instance, check: Check) -> Result<GradedSes> {
    match inst {
        Instance::Inclusion { map } => GradedSes::from_inclusion(GradedMorphism::from_doc(map)?),
        _ => Err(wrong_kind(check)),
    }
}

fn grid(inst: &Instance, check: Check) -> Result<(FieldSpec, usize, i64)> {
    match inst {
        Instance::Grid { field, a_dim, shift } => Ok((*field, *a_dim, *shift)),
        _ => Err(wrong_kind(check)),
    }
}

fn wrong_kind(check: Check) -> Error {
    Error::InvalidPresentation(format!("instance kind does not fit check {}", check.name()))
}

fn tvector_strings(v: &TVector) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn parse_tvector(v: &[String], field: FieldSpec) -> Result<TVector> {
    v.iter().map(|s| parse_unipoly(s, field)).collect()
}

// ---------------------------------------------------------------------------
// evaluation

/// Run `check` on one instance. Malformed instances are errors; a failing
/// computation is reported as a failing record.
pub fn evaluate(check: Check, id: &str, inst: &Instance, limits: &Limits) -> Result<Vec<Record>> {
    let name = check.name();
    let bound = limits.piece_bound;
    let out = match check {
        Check::KoszulSquare => {
            let x = presentation(inst, check)?;
            vec![bool_record(name, id, x.koszul_complex().squares_to_zero())]
        }
        Check::KoszulFree => {
            let (field, a, k) = grid(inst, check)?;
            let x = GradedPresentation::free(field, a, 2, k);
            let expected = format!("T1 = T2 = 0, T0 = {a} in degree {k}");
            vec![match koszul_free_actual(&x, bound) {
                Ok((t1, t2, t0)) => {
                    let want: Vec<i64> = (0..=bound as i64).map(|m| if m == k { a as i64 } else { 0 }).collect();
                    let pass = t1 && t2 && t0 == want;
                    record(name, id, expected, format!("T1 zero {t1}, T2 zero {t2}, T0 dims {t0:?}"), pass)
                }
                Err(e) => record(name, id, expected, format!("error: {e}"), false),
            }]
        }
        Check::KoszulProperties => {
            let x = presentation(inst, check)?;
            koszul_properties(&x, id, bound)
        }
        Check::EulerIdentity => {
            let s = graded_ses(inst, check)?;
            let actual = euler_defects(&s, bound);
            let pass = matches!(&actual, Ok(d) if d.is_empty());
            let shown = match actual {
                Ok(d) if d.is_empty() => "all zero".to_string(),
                Ok(d) => format!("nonzero at degrees {d:?}"),
                Err(e) => format!("error: {e}"),
            };
            vec![record(name, id, "all zero", shown, pass)]
        }
        Check::SplitSequence => {
            let (field, a, _) = grid(inst, check)?;
            vec![bool_record(name, id, split_sequence_check(field, a))]
        }
        Check::ArtinRees => {
            let Instance::EndoPair {
                module,
                submodule,
                expected_index,
            } = inst
            else {
                return Err(wrong_kind(check));
            };
            let x = EndoModule::from_doc(module)?;
            let gens = submodule
                .iter()
                .map(|v| parse_tvector(v, x.field()))
                .collect::<Result<Vec<_>>>()?;
            let y = SubmoduleRep::new(&x, gens)?;
            let b = limits.artin_rees_bound;
            let expected = match expected_index {
                Some(n) => format!("n0 = {n}, identity holds up to {b}"),
                None => format!("n0 < {b}, identity holds up to {b}"),
            };
            let (actual, pass) = match artin_rees_index(&x, &y, b) {
                Ok(n0) => {
                    let holds = artin_rees_holds(&y, n0, b);
                    let pass = matches!(holds, Ok(true)) && expected_index.map_or(true, |n| n == n0);
                    (format!("n0 = {n0}, identity holds {holds:?}"), pass)
                }
                Err(e) => (format!("error: {e}"), false),
            };
            vec![record(name, id, expected, actual, pass)]
        }
        Check::NilpotencyIndex => {
            let Instance::GradedTModule { module, degrees } = inst else {
                return Err(wrong_kind(check));
            };
            let m = EndoModule::from_doc(module)?;
            let surj = one_minus_t_surjective(&m, degrees)?;
            let index = m.nilpotency_index();
            vec![record(
                name,
                id,
                "1-t surjective iff nilpotent",
                format!("surjective {surj}, index {index:?}"),
                surj == index.is_some(),
            )]
        }
        Check::ThetaExactness => {
            let s = graded_ses(inst, check)?;
            let res = (|| -> Result<(bool, bool)> {
                let i = theta::theta_morphism(&s.inclusion)?;
                let p = theta::theta_morphism(&s.projection)?;
                let exact = EndoSes::new(i, p);
                let ranks = exact
                    .as_ref()
                    .map(|e| check_ses_additivity(&ShortExactSequence::Endo(e.clone())))
                    .unwrap_or(false);
                Ok((exact.is_ok(), ranks))
            })();
            let (actual, pass) = match res {
                Ok((e, r)) => (format!("exact {e}, ranks add {r}"), e && r),
                Err(e) => (format!("error: {e}"), false),
            };
            vec![record(name, id, "exact true, ranks add true", actual, pass)]
        }
        Check::ThetaNilpotent => {
            let x = presentation(inst, check)?;
            let brute = psi_power_search(&x, NIL_SEARCH);
            let (actual, pass) = match theta::theta(&x) {
                Ok(t) => (
                    format!("theta zero {}, psi^n kills for n = {brute:?}", t.is_zero()),
                    t.is_zero() == brute.is_some(),
                ),
                Err(e) => (format!("error: {e}"), false),
            };
            vec![record(name, id, "theta zero iff psi nilpotent", actual, pass)]
        }
        Check::ThetaFree => {
            let (field, a, k) = grid(inst, check)?;
            let expected = format!("free of rank {a}");
            vec![match theta::theta(&GradedPresentation::free(field, a, 2, k)) {
                Ok(t) => {
                    let pass = t.free_rank() == a && t.torsion_divisors().is_empty();
                    let actual = format!("rank {}, torsion {}", t.free_rank(), t.torsion_divisors().len());
                    record(name, id, expected, actual, pass)
                }
                Err(e) => record(name, id, expected, format!("error: {e}"), false),
            }]
        }
        Check::PsiTorsion => {
            let x = presentation(inst, check)?;
            vec![match psi_torsion_parts(&x) {
                Ok(parts) => {
                    let pass = parts.iter().all(|(_, b)| *b);
                    let actual = parts
                        .iter()
                        .map(|(n, b)| format!("{n} {b}"))
                        .collect::<Vec<_>>()
                        .join(", ");
                    record(name, id, "all true", actual, pass)
                }
                Err(e) => record(name, id, "all true", format!("error: {e}"), false),
            }]
        }
        Check::Devissage => {
            let x = presentation(inst, check)?;
            vec![result_record(name, id, check_devissage_classes(&x))]
        }
        Check::MainDiagram => {
            let (field, a, m) = grid(inst, check)?;
            vec![result_record(name, id, check_main_diagram(field, a, m))]
        }
        Check::Localization => {
            let x = presentation(inst, check)?;
            vec![result_record(name, id, check_localization_classes(&x))]
        }
        Check::TfDecomposition => {
            let x = presentation(inst, check)?;
            vec![result_record(name, id, check_tf_decomposition(&x))]
        }
        Check::BaseChange => {
            let (field, a, _) = grid(inst, check)?;
            let r = check_base_change(field, a);
            vec![record(name, id, a, r, r == a)]
        }
        Check::SesAdditivity => {
            let s = graded_ses(inst, check)?;
            vec![bool_record(name, id, check_ses_additivity(&ShortExactSequence::Graded(s)))]
        }
        Check::OracleAgreement => {
            let modules = match inst {
                Instance::Presentation { module } => vec![GradedPresentation::from_doc(module)?],
                Instance::Inclusion { .. } => {
                    let s = graded_ses(inst, check)?;
                    vec![s.sub().clone(), s.middle().clone(), s.quotient().clone()]
                }
                _ => return Err(wrong_kind(check)),
            };
            modules
                .iter()
                .map(|x| {
                    let series = kpoly(x).series_coefficients(x.nvars(), bound);
                    let oracle = piece_dims(x, bound);
                    record(name, id, format!("{oracle:?}"), format!("{series:?}"), series == oracle)
                })
                .collect()
        }
    };
    Ok(out)
}

fn result_record(name: &str, id: &str, r: Result<bool>) -> Record {
    match r {
        Ok(b) => bool_record(name, id, b),
        Err(e) => record(name, id, true, format!("error: {e}"), false),
    }
}

/// Largest `psi` power tried by the brute-force nilpotence test.
const NIL_SEARCH: usize = 32;

/// Dimensions of the degree pieces `0..=bound`, by linear algebra only.
fn piece_dims(x: &GradedPresentation, bound: usize) -> Vec<i64> {
    (0..=bound as i64).map(|m| x.piece_dim(m) as i64).collect()
}

fn homology_dims(x: &GradedPresentation, i: usize, bound: usize) -> Result<Vec<i64>> {
    Ok(kpoly(&x.koszul_homology(i)?).series_coefficients(x.nvars(), bound))
}

fn koszul_free_actual(x: &GradedPresentation, bound: usize) -> Result<(bool, bool, Vec<i64>)> {
    Ok((
        x.koszul_homology(1)?.is_zero(),
        x.koszul_homology(2)?.is_zero(),
        homology_dims(x, 0, bound)?,
    ))
}

fn koszul_properties(x: &GradedPresentation, id: &str, bound: usize) -> Vec<Record> {
    let mut out = Vec::new();
    let t0 = match homology_dims(x, 0, bound) {
        Ok(d) => d,
        Err(e) => return vec![record("koszul_properties", id, "computed", format!("error: {e}"), false)],
    };
    let dims = piece_dims(x, bound);

    // T_0 vanishing below s forces the pieces to vanish below s
    let s = t0.iter().take_while(|&&d| d == 0).count();
    let pass = dims[..s].iter().all(|&d| d == 0);
    out.push(record(
        "koszul_t0_vanishing",
        id,
        format!("pieces zero below {s}"),
        format!("{:?}", &dims[..s]),
        pass,
    ));

    // T_0(F_p x) is T_0(x) truncated at p
    let top = x.degree().unwrap_or(-1).min(bound as i64);
    let mut bad = Vec::new();
    for p in 0..=top {
        let (fp, _) = x.canonical_filtration(p);
        let want: Vec<i64> = t0
            .iter()
            .enumerate()
            .map(|(k, &d)| if k as i64 <= p { d } else { 0 })
            .collect();
        match homology_dims(&fp, 0, bound) {
            Ok(got) if got == want => {}
            _ => bad.push(p),
        }
    }
    out.push(record(
        "koszul_t0_truncation",
        id,
        "truncation at every p",
        format!("failures at {bad:?}"),
        bad.is_empty(),
    ));

    // T_1 = 0 makes every alpha_p an isomorphism
    match x.koszul_homology(1) {
        Ok(t1) if t1.is_zero() => {
            let bad: Vec<i64> = (0..=top)
                .filter(|&p| !matches!(x.alpha_p(p).is_isomorphism(), Ok(true)))
                .collect();
            out.push(record(
                "koszul_alpha_iso",
                id,
                "alpha_p iso for p <= deg x",
                format!("failures at {bad:?}"),
                bad.is_empty(),
            ));
        }
        Ok(_) => {}
        Err(e) => out.push(record("koszul_alpha_iso", id, "computed", format!("error: {e}"), false)),
    }
    out
}

/// Degrees where the alternating sum of Koszul homology dimensions over a
/// short exact sequence does not vanish.
fn euler_defects(s: &GradedSes, bound: usize) -> Result<Vec<usize>> {
    let n = s.middle().nvars();
    let mut total = vec![0i64; bound + 1];
    for (x, sign) in [(s.sub(), 1i64), (s.middle(), -1), (s.quotient(), 1)] {
        for i in 0..=n {
            let sgn = if i % 2 == 0 { sign } else { -sign };
            for (m, d) in homology_dims(x, i, bound)?.into_iter().enumerate() {
                total[m] += sgn * d;
            }
        }
    }
    Ok(total
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(m, _)| m)
        .collect())
}

/// Least `n <= limit` with `psi^n` killing every generator, by membership.
fn psi_power_search(x: &GradedPresentation, limit: usize) -> Option<usize> {
    let amb = x.ambient();
    let one = x.field().one();
    (0..=limit).find(|&n| {
        let m = Monomial::var_pow(2, 0, n as u32);
        (0..x.num_gens()).all(|j| x.vanishes(&amb.basis_vector(j).mul_term(&one, &m)).unwrap_or(false))
    })
}

fn psi_torsion_parts(x: &GradedPresentation) -> Result<Vec<(&'static str, bool)>> {
    let (tor, _) = theta::psi_torsion(x)?;
    let (q, proj) = theta::psi_free_quotient(x)?;
    let tx = theta::theta(x)?;
    let tq = theta::theta(&q)?;
    Ok(vec![
        ("torsion nilpotent", theta::is_psi_nilpotent(&tor)?.is_some()),
        ("quotient torsion-free", theta::psi_torsion(&q)?.0.is_zero()),
        ("numerators add", kpoly(&tor).add(&kpoly(&q)) == kpoly(x)),
        ("theta iso", theta::theta_morphism(&proj)?.is_isomorphism()),
        (
            "invariants equal",
            tx.free_rank() == tq.free_rank() && tx.torsion_divisors() == tq.torsion_divisors(),
        ),
    ])
}

// ---------------------------------------------------------------------------
// instance generation

struct Job {
    check: Check,
    id: String,
    instance: Instance,
}

fn rng(cfg: &SuiteConfig, stream: u64, index: usize) -> SplitMix64 {
    SplitMix64::new(random::stream_seed(cfg.seed, stream, index as u64))
}

fn push(jobs: &mut Vec<Job>, checks: &[Check], id: String, instance: Instance) {
    for &check in checks {
        jobs.push(Job {
            check,
            id: id.clone(),
            instance: instance.clone(),
        });
    }
}

fn pres(x: &GradedPresentation) -> Instance {
    Instance::Presentation { module: x.to_doc() }
}

fn jobs(cfg: &SuiteConfig) -> Vec<Job> {
    use Check::*;
    let mut jobs = Vec::new();
    let n = cfg.instance_count;
    if n == 0 {
        return jobs;
    }
    let f = cfg.field;
    let grid = |a_dim: usize, shift: i64| Instance::Grid {
        field: f,
        a_dim,
        shift,
    };

    for i in 0..n {
        let x = random::random_presentation(&mut rng(cfg, 1, i), &cfg.params(1 + i % 2));
        push(&mut jobs, &[KoszulSquare, OracleAgreement], format!("c01-koszul-{i:04}"), pres(&x));
    }
    for a in 1..=4 {
        for k in 0..=4 {
            push(&mut jobs, &[KoszulFree, ThetaFree], format!("c02-free-a{a}-k{k}"), grid(a, k));
        }
    }
    for i in 0..n {
        let mut r = rng(cfg, 3, i);
        let x = if i % 2 == 0 {
            random::random_presentation(&mut r, &cfg.params(2))
        } else {
            random::random_torsion_free(&mut r, &cfg.params(2))
        };
        push(&mut jobs, &[KoszulProperties, OracleAgreement], format!("c03-props-{i:04}"), pres(&x));
    }
    for i in 0..n {
        let inc = random_ses(cfg, 4, i);
        push(
            &mut jobs,
            &[EulerIdentity, ThetaExactness, OracleAgreement],
            format!("c04-ses-{i:04}"),
            inc,
        );
    }
    for a in 0..=5 {
        push(&mut jobs, &[SplitSequence], format!("c05-split-a{a}"), grid(a, 0));
    }

    let kt = EndoModule::poly_object(f, 1);
    push(
        &mut jobs,
        &[ArtinRees],
        "c06-artin-rees-example".into(),
        Instance::EndoPair {
            module: kt.to_doc(),
            submodule: vec![vec![UniPoly::t_pow(f, 2).to_string()]],
            expected_index: Some(2),
        },
    );
    for i in 0..n {
        let (x, y) = random::random_endo_pair(&mut rng(cfg, 6, i), f);
        push(
            &mut jobs,
            &[ArtinRees],
            format!("c06-artin-rees-{i:04}"),
            Instance::EndoPair {
                module: x.to_doc(),
                submodule: y.generators().iter().map(tvector_strings).collect(),
                expected_index: None,
            },
        );
    }

    push(
        &mut jobs,
        &[NilpotencyIndex],
        "c07-t-module-free".into(),
        Instance::GradedTModule {
            module: kt.to_doc(),
            degrees: vec![0],
        },
    );
    for i in 0..n {
        let (m, degrees) = random::random_graded_t_module(&mut rng(cfg, 7, i), f, cfg.max_gens);
        push(
            &mut jobs,
            &[NilpotencyIndex],
            format!("c07-t-module-{i:04}"),
            Instance::GradedTModule {
                module: m.to_doc(),
                degrees,
            },
        );
    }

    for i in 0..n {
        let mut r = rng(cfg, 8, i);
        let x = match i % 3 {
            0 => random::random_nilpotent(&mut r, &cfg.params(2)),
            1 => random::random_presentation(&mut r, &cfg.params(2)),
            _ => theta::embed_nil(f, r.range(0, 3) as usize, r.range(0, 3)),
        };
        push(&mut jobs, &[ThetaNilpotent, OracleAgreement], format!("c08-mixed-{i:04}"), pres(&x));
    }
    for i in 0..n {
        let x = random::random_presentation(&mut rng(cfg, 9, i), &cfg.params(2));
        push(
            &mut jobs,
            &[PsiTorsion, Localization, OracleAgreement],
            format!("c09-psi-{i:04}"),
            pres(&x),
        );
    }
    for i in 0..n {
        let x = random::random_nilpotent(&mut rng(cfg, 10, i), &cfg.params(2));
        push(&mut jobs, &[Devissage, OracleAgreement], format!("c10-nil-{i:04}"), pres(&x));
    }

    for a in 0..=3 {
        for m in 0..=4 {
            push(&mut jobs, &[MainDiagram], format!("c11-diagram-a{a}-m{m}"), grid(a, m));
        }
    }
    for a in 0..=10 {
        push(&mut jobs, &[BaseChange], format!("c11-base-change-a{a:02}"), grid(a, 0));
    }
    for i in 0..n {
        let x = random::random_torsion_free(&mut rng(cfg, 11, i), &cfg.params(2));
        push(&mut jobs, &[TfDecomposition, OracleAgreement], format!("c11-tf-{i:04}"), pres(&x));
    }
    for i in 0..2 * n {
        let inc = random_ses(cfg, 12, i);
        push(&mut jobs, &[SesAdditivity, OracleAgreement], format!("c11-ses-{i:04}"), inc);
    }
    jobs
}

fn random_ses(cfg: &SuiteConfig, stream: u64, i: usize) -> Instance {
    let mut r = rng(cfg, stream, i);
    let x = random::random_presentation(&mut r, &cfg.params(2));
    Instance::Inclusion {
        map: random::random_inclusion(&mut r, &x).to_doc(),
    }
}

/// Run every check on every generated instance. The report is ordered by
/// instance id, then check, and is identical for identical configurations.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let limits = cfg.limits();
    let mut report = SuiteReport::default();
    let mut jobs = jobs(cfg);
    jobs.sort_by(|a, b| (&a.id, a.check).cmp(&(&b.id, b.check)));
    for job in jobs {
        let records = evaluate(job.check, &job.id, &job.instance, &limits)?;
        if records.iter().any(|r| !r.pass) {
            report.failures.push(ReplayDoc {
                check: job.check,
                instance_id: job.id.clone(),
                limits,
                instance: job.instance.clone(),
            });
        }
        report.records.extend(records);
    }
    Ok(report)
}
