//! `ssn`: queries, sweeps, network exports and the regression suite.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ssn_core::classify::{
    knm_d, knm_report, kp_report, non_satellite_certificate, ps_construction_excluded,
    successive_triple, torus_knot_exclusion, KnmReport, NonSatelliteCertificate, TorusExclusion,
    DEFAULT_TORUS_BOUND,
};
use ssn_core::claims::{verify, ClaimResult};
use ssn_core::network::{
    export_dot, export_json, seiferter_by_name, NetworkConfig, NetworkGraph,
};
use ssn_core::seiferter::{
    annular_pairs, basic_annular_candidates, has_hyperbolic_seiferter, same_lk_filter,
    seiferter_status, twist, twisted_orbifold, AnnularCandidate, AnnularPairInfo, SameLkHit,
};
use ssn_core::sfs::SfsClass;
use ssn_core::sweep::{grid, map_ordered};
use ssn_core::torus_surgery::moser_classify;
use ssn_core::{Error, Fraction, OrbifoldTriple, SurgeryVertex, TorusKnot};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ssn", version, about = "Seifert surgeries on the trefoil and their seiferters")]
pub struct Cli {
    /// Machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Base orbifold of r/s-surgery on the torus knot T(p, q).
    #[command(allow_negative_numbers = true)]
    Surgery {
        p: i64,
        q: i64,
        /// Surgery slope r or r/s.
        #[arg(long, allow_hyphen_values = true)]
        slope: Fraction,
    },
    /// K_n^m and its three successive Seifert surgeries.
    #[command(allow_negative_numbers = true)]
    Knm(KnmArgs),
    /// Twist (T(-3,2), m) along a seiferter: c_mu, c, or c^k.
    #[command(allow_negative_numbers = true)]
    Twist { m: i64, seiferter: String, n: i64 },
    /// Annular pairs of seiferters for (T(-3,2), m).
    #[command(allow_negative_numbers = true)]
    Pairs { m: i64 },
    /// K_p, the trefoil twisted p times along c, and its (-1)-surgery.
    #[command(allow_negative_numbers = true)]
    Kp { p: i64 },
    /// A hyperbolic knot with small Seifert surgeries m, m+1, m+2.
    #[command(allow_negative_numbers = true)]
    Triple { m: i64 },
    /// Build a piece of the surgery network.
    #[command(allow_negative_numbers = true)]
    Network(NetworkArgs),
    /// Re-check every tabulated result; optional tag or claim id.
    Verify { filter: Option<String> },
}

#[derive(Args, Debug)]
pub struct KnmArgs {
    #[arg(required_unless_present = "grid")]
    pub m: Option<i64>,
    #[arg(required_unless_present = "grid")]
    pub n: Option<i64>,
    /// Sweep `mlo:mhi,nlo:nhi` instead of a single pair.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["m", "n"])]
    pub grid: Option<String>,
    /// |p| bound for the torus-knot search.
    #[arg(long, default_value_t = DEFAULT_TORUS_BOUND)]
    pub bound: i64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresetName {
    NamedKnots,
    CmLines,
}

#[derive(Args, Debug)]
pub struct NetworkArgs {
    #[arg(long, value_enum)]
    pub preset: Option<PresetName>,
    /// The slope m of the cm-lines preset.
    #[arg(long)]
    pub m: Option<i64>,
    #[arg(long)]
    pub radius: Option<u32>,
    /// TOML file with `preset`, `m`, `radius`, `seeds`, `seiferters`.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, conflicts_with = "json_out")]
    pub dot: bool,
    /// Same as the global --json.
    #[arg(long = "json-out", hide = true)]
    pub json_out: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out<'a> = &'a mut dyn Write;

fn io<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(format!("write failed: {e}"))
}

fn emit_json<T: Serialize>(out: Out, value: &T) -> Result<(), Failure> {
    let v = serde_json::to_value(value).map_err(io)?;
    let s = serde_json::to_string_pretty(&v).map_err(io)?;
    writeln!(out, "{s}").map_err(io)
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verify) => EXIT_VERIFY_FAILED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli, out: Out) -> Result<(), Failure> {
    match &cli.command {
        Command::Surgery { p, q, slope } => surgery(out, cli.json, *p, *q, *slope),
        Command::Knm(a) => knm(out, cli.json, a),
        Command::Twist { m, seiferter, n } => twist_cmd(out, cli.json, *m, seiferter, *n),
        Command::Pairs { m } => pairs(out, cli.json, *m),
        Command::Kp { p } => kp(out, cli.json, *p),
        Command::Triple { m } => triple(out, cli.json, *m),
        Command::Network(a) => network(out, cli.json, a),
        Command::Verify { filter } => verify_cmd(out, cli.json, filter.as_deref()),
    }
}

#[derive(Serialize)]
struct SurgeryOut {
    knot: TorusKnot,
    slope: Fraction,
    orbifold: OrbifoldTriple,
    class: SfsClass,
}

fn surgery(out: Out, json: bool, p: i64, q: i64, slope: Fraction) -> Result<(), Failure> {
    let k = TorusKnot::new(p, q)?;
    let (orbifold, class) = moser_classify(&k, slope)?;
    if json {
        return emit_json(out, &SurgeryOut { knot: k, slope, orbifold, class });
    }
    writeln!(out, "{k}({slope})").map_err(io)?;
    writeln!(out, "  orbifold  {orbifold}").map_err(io)?;
    writeln!(out, "  manifold  {}", class.label()).map_err(io)
}

fn parse_range(s: &str) -> Option<(i64, i64)> {
    let (a, b) = s.split_once(':')?;
    let (a, b) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
    (a <= b).then_some((a, b))
}

type Span = (i64, i64);

fn parse_grid(s: &str) -> Result<(Span, Span), Failure> {
    let bad = || Failure::Usage(format!("--grid `{s}`: expected mlo:mhi,nlo:nhi with lo <= hi"));
    let (m, n) = s.split_once(',').ok_or_else(bad)?;
    Ok((parse_range(m).ok_or_else(bad)?, parse_range(n).ok_or_else(bad)?))
}

#[derive(Serialize)]
struct KnmOut {
    #[serde(flatten)]
    report: KnmReport,
    non_satellite: Option<NonSatelliteCertificate>,
    torus_exclusion: Option<TorusExclusion>,
}

fn knm_full(m: i64, n: i64, bound: i64) -> Result<KnmOut, Error> {
    let report = knm_report(m, n)?;
    let (non_satellite, torus_exclusion) = if report.hyperbolic {
        let ex = torus_knot_exclusion(&report.triples, knm_d(m, n)?, bound)?;
        (non_satellite_certificate(&report), Some(ex))
    } else {
        (None, None)
    };
    Ok(KnmOut {
        report,
        non_satellite,
        torus_exclusion,
    })
}

fn knm(out: Out, json: bool, a: &KnmArgs) -> Result<(), Failure> {
    if a.bound < 2 {
        return Err(Error::InvalidBound(a.bound).into());
    }
    if let Some(g) = &a.grid {
        let ((m0, m1), (n0, n1)) = parse_grid(g)?;
        let pts = grid(m0..=m1, n0..=n1);
        let rows = map_ordered(&pts, |&(m, n)| knm_full(m, n, a.bound))
            .into_iter()
            .collect::<Result<Vec<_>, _>>()?;
        if json {
            return emit_json(out, &rows);
        }
        writeln!(out, "{:>5} {:>5}  {:<26} {:<26} {:<26} hyperbolic", "m", "n", "S1", "S2", "S3")
            .map_err(io)?;
        for r in &rows {
            let t = &r.report.triples;
            writeln!(
                out,
                "{:>5} {:>5}  {:<26} {:<26} {:<26} {}",
                r.report.m,
                r.report.n,
                format!("{}@{}", t[0], r.report.slopes[0]),
                format!("{}@{}", t[1], r.report.slopes[1]),
                format!("{}@{}", t[2], r.report.slopes[2]),
                r.report.hyperbolic
            )
            .map_err(io)?;
        }
        return Ok(());
    }
    let (Some(m), Some(n)) = (a.m, a.n) else {
        return Err(Failure::Usage("knm needs M and N, or --grid".into()));
    };
    let r = knm_full(m, n, a.bound)?;
    if json {
        return emit_json(out, &r);
    }
    let rep = &r.report;
    let name = rep.name.map_or_else(|| "unnamed".to_string(), |k| k.to_string());
    writeln!(out, "K_{n}^{m} = {} ({name})", rep.knot).map_err(io)?;
    writeln!(out, "{:>8}  {:<18} manifold", "slope", "orbifold").map_err(io)?;
    for i in 0..3 {
        writeln!(
            out,
            "{:>8}  {:<18} {}",
            rep.slopes[i],
            rep.triples[i].to_string(),
            rep.classes[i].label()
        )
        .map_err(io)?;
    }
    writeln!(out, "hyperbolic: {}", rep.hyperbolic).map_err(io)?;
    if let Some(c) = r.non_satellite {
        let why = match c {
            NonSatelliteCertificate::ThreeSmallSfs => "three small Seifert surgeries",
            NonSatelliteCertificate::NonzeroIndices => "all fiber indices nonzero",
        };
        writeln!(out, "not a satellite: {why}").map_err(io)?;
    }
    if let Some(ex) = r.torus_exclusion {
        match ex.witness {
            None => writeln!(out, "no torus knot T(p,q) with |p| <= {} matches", ex.bound),
            Some((p, q)) => writeln!(out, "torus knot T({p},{q}) matches (|p| <= {})", ex.bound),
        }
        .map_err(io)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct TwistOut {
    from: SurgeryVertex,
    seiferter: String,
    n: i64,
    to: SurgeryVertex,
    orbifold: OrbifoldTriple,
    class: SfsClass,
}

fn twist_cmd(out: Out, json: bool, m: i64, name: &str, n: i64) -> Result<(), Failure> {
    let s = seiferter_by_name(name)?;
    let from = SurgeryVertex::torus(TorusKnot::trefoil(), m);
    let role = s.role_at(&from)?.ok_or_else(|| Error::InvalidAmbient {
        seiferter: s.name.clone(),
        vertex: from.to_string(),
    })?;
    let mut to = twist(&from, &s, n)?;
    to.knot = ssn_core::classify::canonical_knot(&to);
    let orbifold = twisted_orbifold(&role, n)?;
    let class = ssn_core::sfs::classify_triple(&orbifold)?;
    if json {
        return emit_json(
            out,
            &TwistOut {
                from,
                seiferter: s.name,
                n,
                to,
                orbifold,
                class,
            },
        );
    }
    writeln!(out, "{from} --[{} x {n}]--> {to}", s.name).map_err(io)?;
    writeln!(out, "  orbifold  {orbifold}").map_err(io)?;
    writeln!(out, "  manifold  {}", class.label()).map_err(io)
}

#[derive(Serialize)]
struct PairsOut {
    m: i64,
    hyperbolic_seiferter: Option<bool>,
    statuses: [String; 3],
    same_lk: Vec<SameLkHit>,
    basic_candidates: Vec<AnnularCandidate>,
    pairs: Vec<AnnularPairInfo>,
}

fn tri_state(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    }
}

fn pairs(out: Out, json: bool, m: i64) -> Result<(), Failure> {
    let ovf = || Failure::from(Error::Overflow("seiferter exponent"));
    let statuses = [
        seiferter_status(m).to_string(),
        seiferter_status(m.checked_add(1).ok_or_else(ovf)?).to_string(),
        seiferter_status(m.checked_add(2).ok_or_else(ovf)?).to_string(),
    ];
    let o = PairsOut {
        m,
        hyperbolic_seiferter: has_hyperbolic_seiferter(m),
        statuses,
        same_lk: same_lk_filter(m)?,
        basic_candidates: basic_annular_candidates(m)?,
        pairs: annular_pairs(m)?,
    };
    if json {
        return emit_json(out, &o);
    }
    writeln!(out, "(T(-3,2), {m})").map_err(io)?;
    writeln!(
        out,
        "  c_1, c_2, c_3 status: {}, {}, {}",
        o.statuses[0], o.statuses[1], o.statuses[2]
    )
    .map_err(io)?;
    writeln!(out, "  hyperbolic seiferter: {}", tri_state(o.hyperbolic_seiferter)).map_err(io)?;
    writeln!(out, "{:<22} {:<10} hyperbolic", "pair", "relevant").map_err(io)?;
    for p in &o.pairs {
        let relevant = if p.irrelevant { "no" } else { "yes" };
        writeln!(out, "{:<22} {:<10} {}", p.label, relevant, tri_state(p.hyperbolic)).map_err(io)?;
    }
    for c in &o.basic_candidates {
        match &c.rejected {
            None => writeln!(out, "basic: {} looks like {{{}, {}}}", c.label, c.matches.first, c.matches.second),
            Some(why) => writeln!(out, "rejected: {} ({why})", c.label),
        }
        .map_err(io)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct KpOut {
    #[serde(flatten)]
    report: ssn_core::classify::KpReport,
    ps_excluded: bool,
}

fn kp(out: Out, json: bool, p: i64) -> Result<(), Failure> {
    let o = KpOut {
        report: kp_report(p)?,
        ps_excluded: ps_construction_excluded(p)?,
    };
    if json {
        return emit_json(out, &o);
    }
    let r = &o.report;
    writeln!(out, "K_{p}: {}", r.vertex).map_err(io)?;
    writeln!(out, "  orbifold          {}", r.triple).map_err(io)?;
    writeln!(out, "  hyperbolic        {}", r.hyperbolic).map_err(io)?;
    writeln!(out, "  genus one         {}", r.genus_one).map_err(io)?;
    writeln!(out, "  primitive/Seifert {}", if o.ps_excluded { "excluded" } else { "possible" })
        .map_err(io)
}

fn triple(out: Out, json: bool, m: i64) -> Result<(), Failure> {
    let t = successive_triple(m)?;
    if json {
        return emit_json(out, &t);
    }
    let mirror = if t.mirror { "mirror of " } else { "" };
    writeln!(out, "{mirror}{} (K_{}^0)", t.report.knot, t.report.n).map_err(io)?;
    writeln!(out, "  slopes      {:?}", t.slopes).map_err(io)?;
    for (s, tr) in t.report.slopes.iter().zip(&t.report.triples) {
        let s = if t.mirror { -s } else { *s };
        writeln!(out, "  {s:>6}  {tr}").map_err(io)?;
    }
    writeln!(out, "  hyperbolic  {}", t.report.hyperbolic).map_err(io)?;
    if let Some(q) = &t.open_question {
        writeln!(out, "  note: {q}").map_err(io)?;
    }
    Ok(())
}

fn network(out: Out, json: bool, a: &NetworkArgs) -> Result<(), Failure> {
    let mut cfg = match &a.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            toml::from_str::<NetworkConfig>(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
        }
        None => NetworkConfig::default(),
    };
    if let Some(p) = a.preset {
        cfg.preset = Some(match p {
            PresetName::NamedKnots => "named-knots".into(),
            PresetName::CmLines => "cm-lines".into(),
        });
    }
    if a.m.is_some() {
        cfg.m = a.m;
    }
    if a.radius.is_some() {
        cfg.radius = a.radius;
    }
    if cfg.preset.is_none() && cfg.seeds.is_empty() {
        return Err(Failure::Usage("network needs --preset or --config".into()));
    }
    let g: NetworkGraph = cfg.to_preset()?.build()?;
    if a.dot {
        return write!(out, "{}", export_dot(&g)).map_err(io);
    }
    if json || a.json_out {
        return write!(out, "{}", export_json(&g)?).map_err(io);
    }
    writeln!(
        out,
        "{} vertices, {} edges, radius {}",
        g.vertices.len(),
        g.edges.len(),
        g.radius
    )
    .map_err(io)?;
    for v in &g.vertices {
        let orb = v.orbifold.as_ref().map_or("?".to_string(), |o| o.to_string());
        let mut notes = Vec::new();
        if v.frontier {
            notes.push("frontier");
        }
        if !v.identity_known {
            notes.push("identity unknown");
        }
        writeln!(out, "  {:<28} {:<20} {}", v.id, orb, notes.join(", ")).map_err(io)?;
    }
    for w in &g.warnings {
        writeln!(out, "warning: {w}").map_err(io)?;
    }
    Ok(())
}

fn verify_cmd(out: Out, json: bool, filter: Option<&str>) -> Result<(), Failure> {
    let results: Vec<ClaimResult> = verify(filter)?;
    let failed = results.iter().filter(|r| !r.check.pass).count();
    if json {
        emit_json(out, &results)?;
    } else {
        for r in &results {
            let mark = if r.check.pass { "PASS" } else { "FAIL" };
            writeln!(out, "{mark} {:<22} [{}] {}", r.id, r.tag, r.anchor).map_err(io)?;
            writeln!(out, "     computed: {}", r.check.computed).map_err(io)?;
            if !r.check.pass {
                writeln!(out, "     expected: {}", r.check.expected).map_err(io)?;
            }
        }
        if failed == 0 {
            writeln!(out, "all claims pass ({})", results.len()).map_err(io)?;
        } else {
            writeln!(out, "{failed} of {} claims fail", results.len()).map_err(io)?;
        }
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}
