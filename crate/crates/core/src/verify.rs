//! Executable checks of the identities satisfied by interval-vector
//! polytopes. Each check recomputes a quantity from scratch and compares it
//! exactly with the value the identity predicts.
//!
//! Claim identifiers are stable wire names (`"thm1.1"`, `"lem5.6"`, ...)
//! used by the CLI, the report formats and the C interface.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ehrhart::{self, EhrhartPolynomial};
use crate::error::{Error, Result};
use crate::family::{build_family, build_root_polytope, make_interval_vector, FamilySpec};
use crate::flow::{build_graph, components_and_k0, dahl_dimension};
use crate::hull::{self, FVector, VertexSet};
use crate::lattice::{IntVec, RatMat};
use crate::polytope::LatticePolytope;

/// Every known claim, in report order.
pub const CLAIMS: [&str; 15] = [
    "thm1.1", "cor1.2", "thm1.3", "thm1.4", "thm1.5", "prop4.4", "thm4.2", "lem4.3", "prop5.1",
    "lem5.2", "lem5.4", "thm5.5", "lem5.6", "prop6.2", "conj6.3",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ConjectureConsistent,
    ConjectureViolated,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ConjectureConsistent => "conjecture-consistent",
            Status::ConjectureViolated => "conjecture-violated",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    pub i: Option<usize>,
    /// Extra direct counts at `t = 0..=t_max`, compared against the polynomial.
    pub t_max: Option<u64>,
    /// Whether complete families include the origin.
    pub include_origin: bool,
    /// Seed for checks that sample at random.
    pub seed: Option<u64>,
}

impl Params {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            i: None,
            t_max: None,
            include_origin: true,
            seed: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_i(mut self, i: usize) -> Self {
        self.i = Some(i);
        self
    }

    pub fn with_t_max(mut self, t: u64) -> Self {
        self.t_max = Some(t);
        self
    }

    pub fn with_origin(mut self, include: bool) -> Self {
        self.include_origin = include;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub claim_id: String,
    pub params: Params,
    pub status: Status,
    pub computed: String,
    pub expected: String,
    /// Supplementary findings that do not affect the status.
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
    pub elapsed_ms: u64,
}

/// Inclusive parameter range accepted for one claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub n_min: usize,
    pub n_max: usize,
    /// Upper bound on `i`; `None` when the claim takes no `i`.
    pub i_max: Option<usize>,
}

/// Hard default bounds: enumeration cost grows like `(t+1)^n`.
pub fn default_limits(claim: &str) -> Result<Limits> {
    let l = |n_min, n_max, i_max| Limits {
        n_min,
        n_max,
        i_max,
    };
    Ok(match claim {
        "thm1.1" => l(1, 5, None),
        "cor1.2" => l(1, 6, None),
        "thm1.3" => l(1, 8, Some(8)),
        "thm1.4" | "thm1.5" => l(3, 7, None),
        "prop4.4" | "lem4.3" => l(1, 10, Some(10)),
        "thm4.2" => l(1, 8, None),
        "prop5.1" | "lem5.4" => l(3, 10, None),
        "lem5.2" | "thm5.5" => l(3, 7, None),
        "lem5.6" => l(2, 10, None),
        "prop6.2" => l(3, 8, Some(3)),
        "conj6.3" => l(3, 8, Some(3)),
        other => return Err(Error::UnknownClaim(other.to_string())),
    })
}

fn out_of_bounds(claim: &str, param: &'static str, value: usize, limit: String) -> Error {
    Error::OutOfBounds {
        claim: claim.to_string(),
        param,
        value: value as i64,
        limit,
    }
}

fn check_limits(claim: &str, p: &Params, lim: &Limits) -> Result<()> {
    if p.n < lim.n_min || p.n > lim.n_max {
        return Err(out_of_bounds(
            claim,
            "n",
            p.n,
            format!("{} <= n <= {}", lim.n_min, lim.n_max),
        ));
    }
    if let Some(i_max) = lim.i_max {
        let Some(i) = p.i else {
            return Err(Error::InvalidSpec(format!("{claim} needs a value for i")));
        };
        let tower = matches!(claim, "prop6.2" | "conj6.3");
        let hi = if tower {
            i_max.min((p.n - 1) / 2)
        } else {
            i_max.min(p.n)
        };
        if i < 1 || i > hi {
            let limit = if tower {
                format!("1 <= i <= {i_max} and n >= 2i+1")
            } else {
                format!("1 <= i <= min({i_max}, n)")
            };
            return Err(out_of_bounds(claim, "i", i, limit));
        }
    }
    Ok(())
}

struct Outcome {
    ok: bool,
    computed: String,
    expected: String,
    detail: String,
}

fn compare(computed: String, expected: String) -> Outcome {
    Outcome {
        ok: computed == expected,
        computed,
        expected,
        detail: String::new(),
    }
}

/// Runs one check within the default bounds.
pub fn verify_claim(claim_id: &str, params: &Params) -> Result<CheckResult> {
    verify_claim_with(claim_id, params, &default_limits(claim_id)?)
}

pub fn verify_claim_with(claim_id: &str, params: &Params, limits: &Limits) -> Result<CheckResult> {
    default_limits(claim_id)?;
    check_limits(claim_id, params, limits)?;
    let start = Instant::now();
    let n = params.n;
    let i = params.i.unwrap_or(0);
    let conjecture = claim_id == "conj6.3";
    let out = match claim_id {
        "thm1.1" => root_polytope_equality(n, params.include_origin, params.t_max)?,
        "cor1.2" => catalan_volume(n, params.include_origin, params.t_max)?,
        "thm1.3" => fixed_unimodular(n, i)?,
        "thm1.4" => pyramid_f_vector_formula(n)?,
        "thm1.5" => pyramid_volume(n)?,
        "prop4.4" => fixed_dimension(n, i)?,
        "thm4.2" => flow_dimension_agreement(n, params.seed)?,
        "lem4.3" => fixed_components(n, i)?,
        "prop5.1" => pyramid_dimension(n)?,
        "lem5.2" => base_is_two_face(n)?,
        "lem5.4" => base_f_vector(n)?,
        "thm5.5" => pyramid_recursion(n)?,
        "lem5.6" => hollow_ones_det(n)?,
        "prop6.2" => tower(n, i)?,
        "conj6.3" => conjecture_volume(n, i)?,
        other => return Err(Error::UnknownClaim(other.to_string())),
    };
    let status = match (conjecture, out.ok) {
        (false, true) => Status::Pass,
        (false, false) => Status::Fail,
        (true, true) => Status::ConjectureConsistent,
        (true, false) => Status::ConjectureViolated,
    };
    Ok(CheckResult {
        claim_id: claim_id.to_string(),
        params: params.clone(),
        status,
        computed: out.computed,
        expected: out.expected,
        detail: out.detail,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn poly_str(l: &EhrhartPolynomial) -> String {
    format!("[{}]", l.coeff_strings().join(","))
}

fn catalan(n: usize) -> BigInt {
    binomial(BigInt::from(2 * n), BigInt::from(n)) / BigInt::from(n + 1)
}

/// Direct counts disagreeing with `l` at some `t <= t_max`, if any.
fn count_mismatch(
    p: &LatticePolytope,
    l: &EhrhartPolynomial,
    t_max: Option<u64>,
) -> Result<Option<String>> {
    let Some(t_max) = t_max else {
        return Ok(None);
    };
    let counter = ehrhart::LatticeCounter::new(p)?;
    for t in 0..=t_max {
        let c = counter.count(t, ehrhart::CountStrategy::FiberPruned);
        if l.eval(&BigInt::from(t)) != BigRational::from_integer(c.clone()) {
            return Ok(Some(format!(
                "count {c} at t={t} disagrees with the polynomial"
            )));
        }
    }
    Ok(None)
}

fn root_polytope_equality(n: usize, origin: bool, t_max: Option<u64>) -> Result<Outcome> {
    let q = build_root_polytope(n + 1)?;
    let p = build_family(&FamilySpec::complete(n, origin)?)?;
    let lq = ehrhart::ehrhart_polynomial(&q)?;
    let lp = ehrhart::ehrhart_polynomial(&p)?;
    let mut out = compare(poly_str(&lq), poly_str(&lp));
    if let Some(m) = count_mismatch(&q, &lq, t_max)?.or(count_mismatch(&p, &lp, t_max)?) {
        out.ok = false;
        out.detail = m;
    }
    Ok(out)
}

fn catalan_volume(n: usize, origin: bool, t_max: Option<u64>) -> Result<Outcome> {
    let p = build_family(&FamilySpec::complete(n, origin)?)?;
    let l = ehrhart::ehrhart_polynomial(&p)?;
    let mut out = compare(l.normalized_volume()?.to_string(), catalan(n).to_string());
    if let Some(m) = count_mismatch(&p, &l, t_max)? {
        out.ok = false;
        out.detail = m;
    }
    Ok(out)
}

fn fixed_unimodular(n: usize, i: usize) -> Result<Outcome> {
    let spec = FamilySpec::fixed(n, i)?;
    let p = build_family(&spec)?;
    let computed = format!(
        "dim={} dahl={} vertices={} unimodular={} L={}",
        p.dim(),
        dahl_dimension(&spec)?,
        p.vertices().len(),
        ehrhart::is_unimodular_simplex(&p)?,
        poly_str(&ehrhart::ehrhart_polynomial(&p)?)
    );
    let d = n - i;
    let expected = format!(
        "dim={d} dahl={d} vertices={} unimodular=true L={}",
        d + 1,
        poly_str(&EhrhartPolynomial::unimodular_simplex(d))
    );
    Ok(compare(computed, expected))
}

fn fixed_dimension(n: usize, i: usize) -> Result<Outcome> {
    let spec = FamilySpec::fixed(n, i)?;
    let p = build_family(&spec)?;
    let computed = format!(
        "dim={} dahl={} vertices={} simplex={}",
        p.dim(),
        dahl_dimension(&spec)?,
        p.vertices().len(),
        p.is_simplex()
    );
    let expected = format!(
        "dim={0} dahl={0} vertices={1} simplex=true",
        n - i,
        n - i + 1
    );
    Ok(compare(computed, expected))
}

/// Length sets checked exhaustively up to this `n`, sampled above it.
const EXHAUSTIVE_MAX_N: usize = 6;
const SAMPLES: usize = 200;
const DEFAULT_SEED: u64 = 0x1e57;

/// Length sets for the dimension cross-check: all nonempty subsets of `[n]`
/// for small `n`, otherwise a seeded random sample.
pub fn length_sets(n: usize, seed: Option<u64>) -> Vec<Vec<usize>> {
    let subset = |mask: u64| {
        (1..=n)
            .filter(|k| mask >> (k - 1) & 1 == 1)
            .collect::<Vec<_>>()
    };
    if n <= EXHAUSTIVE_MAX_N {
        return (1..1u64 << n).map(subset).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(DEFAULT_SEED) ^ n as u64);
    (0..SAMPLES)
        .map(|_| subset(rng.gen_range(1..1u64 << n)))
        .collect()
}

fn flow_dimension_agreement(n: usize, seed: Option<u64>) -> Result<Outcome> {
    let sets = length_sets(n, seed);
    let specs: Vec<FamilySpec> = sets
        .iter()
        .flat_map(|s| [false, true].map(|o| FamilySpec::new(n, s.iter().copied(), o)))
        .collect::<Result<_>>()?;
    let mismatches: Vec<String> = specs
        .par_iter()
        .map(|spec| {
            let rank = crate::lattice::affine_dim(&spec.generators())?;
            let dahl = dahl_dimension(spec)?;
            Ok((rank != dahl).then(|| {
                format!(
                    "{spec}{}: rank {rank}, graph {dahl}",
                    if spec.include_origin { "+0" } else { "" }
                )
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let total = specs.len();
    let mut out = compare(
        format!("agree={}/{total}", total - mismatches.len()),
        format!("agree={total}/{total}"),
    );
    out.detail = mismatches.join("; ");
    Ok(out)
}

fn fixed_components(n: usize, i: usize) -> Result<Outcome> {
    let g = build_graph(&FamilySpec::fixed(n, i)?)?;
    let comps = components_and_k0(&g).components;
    let classes: Vec<Vec<usize>> = (1..=i.min(n))
        .map(|r| (r..=n).step_by(i).collect())
        .collect();
    Ok(compare(format!("{comps:?}"), format!("{classes:?}")))
}

/// Face counts `C(n-1,k) + C(n+1,k+1)` for `k = 0..n-1`, framed by ones.
pub fn pascal_three_f_vector(n: usize) -> Result<FVector> {
    let mut counts = vec![1u64];
    for k in 0..n {
        counts.push(binomial(n as u64 - 1, k as u64) + binomial(n as u64 + 1, k as u64 + 1));
    }
    counts.push(1);
    FVector::new(counts)
}

fn pyramid_f_vector_formula(n: usize) -> Result<Outcome> {
    let f = hull::f_vector(&build_family(&FamilySpec::pyramidal(n, 1)?)?)?;
    let want = pascal_three_f_vector(n)?;
    Ok(compare(
        format!("{f} palindromic={}", f.is_palindromic()),
        format!("{want} palindromic=true"),
    ))
}

/// The two simplices splitting the base quadrilateral, each coned over
/// `e_2, ..., e_{n-1}`.
pub fn pyramid_split_simplices(n: usize) -> Result<[Vec<IntVec>; 2]> {
    let a1 = make_interval_vector(n, 1, n - 1)?.to_intvec();
    let a2 = make_interval_vector(n, 2, n)?.to_intvec();
    let mut s1: Vec<IntVec> = (1..=n).map(|k| IntVec::unit(n, k)).collect();
    s1.push(a1.clone());
    let mut s2: Vec<IntVec> = (2..=n).map(|k| IntVec::unit(n, k)).collect();
    s2.extend([a1, a2]);
    Ok([s1, s2])
}

fn pyramid_volume(n: usize) -> Result<Outcome> {
    let vol = ehrhart::normalized_volume(&build_family(&FamilySpec::pyramidal(n, 1)?)?)?;
    let [s1, s2] = pyramid_split_simplices(n)?;
    let v1 = ehrhart::simplex_volume_det(&s1)?;
    let v2 = ehrhart::simplex_volume_det(&s2)?;
    Ok(compare(
        format!("vol={vol} S1={v1} S2={v2}"),
        format!("vol={} S1={1} S2={1}", 2 * (n - 2), n - 2),
    ))
}

fn pyramid_dimension(n: usize) -> Result<Outcome> {
    let spec = FamilySpec::pyramidal(n, 1)?;
    let p = build_family(&spec)?;
    Ok(compare(
        format!("dim={} dahl={}", p.dim(), dahl_dimension(&spec)?),
        format!("dim={n} dahl={n}"),
    ))
}

fn vertex_mask(p: &LatticePolytope, points: &[IntVec]) -> Option<VertexSet> {
    points.iter().try_fold(VertexSet(0), |acc, q| {
        let k = p.vertices().iter().position(|v| v == q)?;
        Some(VertexSet(acc.0 | VertexSet::singleton(k).0))
    })
}

fn base_is_two_face(n: usize) -> Result<Outcome> {
    let p = build_family(&FamilySpec::pyramidal(n, 1)?)?;
    let base = hull::pyramid_base(n, 1)?;
    let lattice = hull::face_lattice(&p)?;
    let computed = match vertex_mask(&p, &base) {
        None => "base points are not all vertices".to_string(),
        Some(mask) => match (0..=lattice.dim).find(|&k| lattice.has_face(k, mask)) {
            Some(k) => format!("{k}-face"),
            None => "not a face".to_string(),
        },
    };
    Ok(compare(computed, "2-face".into()))
}

fn base_f_vector(n: usize) -> Result<Outcome> {
    let b = LatticePolytope::from_generators(n, hull::pyramid_base(n, 1)?)?;
    Ok(compare(hull::f_vector(&b)?.to_string(), "(1,4,4,1)".into()))
}

fn pyramid_recursion(n: usize) -> Result<Outcome> {
    let direct = hull::f_vector(&build_family(&FamilySpec::pyramidal(n, 1)?)?)?;
    let mut f = FVector::new(vec![1, 4, 4, 1])?;
    for _ in 0..n - 2 {
        f = hull::pyramid_f_vector(&f)?;
    }
    Ok(compare(direct.to_string(), f.to_string()))
}

fn hollow_ones_det(n: usize) -> Result<Outcome> {
    let m = RatMat::from_fn(n, n, |r, c| {
        if r == c {
            BigRational::from_integer(BigInt::from(0))
        } else {
            BigRational::one()
        }
    });
    let det = m.det()?;
    let sign = if n % 2 == 1 { 1 } else { -1 };
    Ok(compare(
        det.to_string(),
        (sign * (n as i64 - 1)).to_string(),
    ))
}

fn tower(n: usize, i: usize) -> Result<Outcome> {
    let spec = FamilySpec::pyramidal(n, i)?;
    let t = hull::pyramid_tower_check(&spec)?;
    let p = build_family(&spec)?;
    let computed = format!(
        "dim={} dahl={} base_dim={} apexes_outside={}",
        p.dim(),
        dahl_dimension(&spec)?,
        t.base_dim,
        t.all_apexes_outside()
    );
    Ok(compare(
        computed,
        format!("dim={n} dahl={n} base_dim={} apexes_outside=true", 2 * i),
    ))
}

/// Placing triangulation of the tower base, each simplex coned over every
/// apex; returns the normalized volume of each resulting simplex.
pub fn tower_triangulation_volumes(n: usize, i: usize) -> Result<Vec<BigInt>> {
    let base = hull::pyramid_base(n, i)?;
    let apexes: Vec<IntVec> = (i + 1..=n - i).map(|k| IntVec::unit(n, k)).collect();
    hull::placing_triangulation(&base)?
        .iter()
        .map(|s| {
            let mut pts: Vec<IntVec> = s.iter().map(|&k| base[k].clone()).collect();
            pts.extend(apexes.iter().cloned());
            ehrhart::simplex_volume_det(&pts)
        })
        .collect()
}

fn conjecture_volume(n: usize, i: usize) -> Result<Outcome> {
    let vol = ehrhart::normalized_volume(&build_family(&FamilySpec::pyramidal(n, i)?)?)?;
    let formula = (BigInt::one() << i) * BigInt::from(n - i - 1);
    let vols = tower_triangulation_volumes(n, i)?;
    let total: BigInt = vols.iter().sum();
    let each = BigInt::from(n - i - 1);
    let uniform = vols.iter().all(|v| *v == each);
    let listed: Vec<String> = vols.iter().map(ToString::to_string).collect();
    let mut out = compare(vol.to_string(), formula.to_string());
    out.detail = format!(
        "triangulation: {} simplices, volumes [{}], sum {total}, all equal n-(i+1)={each}: {uniform}",
        vols.len(),
        listed.join(",")
    );
    if total != vol {
        return Err(Error::InternalConsistency(format!(
            "triangulation volumes sum to {total}, Ehrhart volume is {vol}"
        )));
    }
    Ok(out)
}

/// Runs the conjecture check for each `n` in the range.
pub fn probe_conjecture(
    i: usize,
    n_range: std::ops::RangeInclusive<usize>,
) -> Result<Vec<CheckResult>> {
    let limits = default_limits("conj6.3")?;
    for n in n_range.clone() {
        check_limits("conj6.3", &Params::new(n).with_i(i), &limits)?;
    }
    n_range
        .into_par_iter()
        .map(|n| verify_claim("conj6.3", &Params::new(n).with_i(i)))
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub checks: Vec<(String, Params)>,
    /// Per-claim overrides of the default bounds.
    #[serde(default)]
    pub limits: std::collections::BTreeMap<String, Limits>,
}

impl SuiteConfig {
    /// Every claim over its parameter sweep, capped at `n <= n_cap`.
    pub fn default_suite(n_cap: usize) -> Self {
        let mut checks = Vec::new();
        for claim in CLAIMS {
            let lim = default_limits(claim).expect("listed claim");
            for n in lim.n_min..=lim.n_max.min(n_cap) {
                match lim.i_max {
                    None => checks.push((claim.to_string(), Params::new(n))),
                    Some(i_max) => {
                        let tower = matches!(claim, "prop6.2" | "conj6.3");
                        let hi = if tower {
                            i_max.min((n - 1) / 2)
                        } else {
                            i_max.min(n)
                        };
                        for i in 1..=hi {
                            checks.push((claim.to_string(), Params::new(n).with_i(i)));
                        }
                    }
                }
            }
        }
        Self {
            checks,
            limits: Default::default(),
        }
    }

    /// Keeps only the listed claims.
    pub fn restrict(mut self, claims: &[String]) -> Result<Self> {
        for c in claims {
            default_limits(c)?;
        }
        self.checks.retain(|(c, _)| claims.contains(c));
        Ok(self)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub conjecture_consistent: usize,
    pub conjecture_violated: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnvInfo {
    pub version: String,
    pub threads: usize,
    pub os: String,
    pub arch: String,
}

impl EnvInfo {
    pub fn current() -> Self {
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            threads: rayon::current_num_threads(),
            os: std::env::consts::OS.to_string(),
            arch: std::env::consts::ARCH.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub results: Vec<CheckResult>,
    pub summary: Summary,
    pub env: EnvInfo,
}

fn claim_rank(id: &str) -> usize {
    CLAIMS.iter().position(|c| *c == id).unwrap_or(CLAIMS.len())
}

impl Report {
    pub fn new(mut results: Vec<CheckResult>) -> Self {
        results.sort_by(|a, b| {
            (claim_rank(&a.claim_id), &a.claim_id, &a.params).cmp(&(
                claim_rank(&b.claim_id),
                &b.claim_id,
                &b.params,
            ))
        });
        let mut summary = Summary {
            total: results.len(),
            ..Default::default()
        };
        for r in &results {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::ConjectureConsistent => summary.conjecture_consistent += 1,
                Status::ConjectureViolated => summary.conjecture_violated += 1,
            }
        }
        Self {
            results,
            summary,
            env: EnvInfo::current(),
        }
    }

    /// True when a non-conjecture check failed.
    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Columns `claim_id,n,i,status,computed,expected`; timing is left out.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["claim_id", "n", "i", "status", "computed", "expected"])
            .expect("in-memory write");
        for r in &self.results {
            let i = r.params.i.map(|i| i.to_string()).unwrap_or_default();
            w.write_record([
                r.claim_id.as_str(),
                &r.params.n.to_string(),
                &i,
                &r.status.to_string(),
                &r.computed,
                &r.expected,
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    /// Aligned plain-text table plus a summary line; timing is left out.
    pub fn to_text(&self) -> String {
        let rows: Vec<[String; 6]> = self
            .results
            .iter()
            .map(|r| {
                [
                    r.claim_id.clone(),
                    r.params.n.to_string(),
                    r.params
                        .i
                        .map(|i| i.to_string())
                        .unwrap_or_else(|| "-".into()),
                    r.status.to_string(),
                    r.computed.clone(),
                    r.expected.clone(),
                ]
            })
            .collect();
        let header = ["claim", "n", "i", "status", "computed", "expected"].map(String::from);
        let mut width = [0usize; 6];
        for row in std::iter::once(&header).chain(&rows) {
            for (w, cell) in width.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        for row in std::iter::once(&header).chain(&rows) {
            let cells: Vec<String> = row
                .iter()
                .zip(width)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        let s = &self.summary;
        out.push_str(&format!(
            "total {}  pass {}  fail {}  conjecture-consistent {}  conjecture-violated {}\n",
            s.total, s.pass, s.fail, s.conjecture_consistent, s.conjecture_violated
        ));
        out
    }
}

/// Runs every configured check; errors become failed results.
pub fn verify_suite(config: &SuiteConfig) -> Report {
    let results = config
        .checks
        .par_iter()
        .map(|(claim, params)| {
            let limits = match config.limits.get(claim) {
                Some(l) => Ok(*l),
                None => default_limits(claim),
            };
            limits
                .and_then(|l| verify_claim_with(claim, params, &l))
                .unwrap_or_else(|e| CheckResult {
                    claim_id: claim.clone(),
                    params: params.clone(),
                    status: Status::Fail,
                    computed: format!("error: {e}"),
                    expected: String::new(),
                    detail: String::new(),
                    elapsed_ms: 0,
                })
        })
        .collect();
    Report::new(results)
}
