//! Command-line front end for the `nilcone` crate.
//!
//! Every subcommand renders in three formats. `json` is pretty-printed with
//! keys in declaration order, `tsv` is a header row plus tab-separated data
//! rows, and `pretty` is for reading.

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use nilcone::{
    chi_to_kappa, fundamental_group, hecke_params, hyperplane_listing, kappa_to_chi, orbit_report,
    orbit_report_filtered, CircleElement, DimVector, Error, FGAbelianGroup, HeckeSummary,
    Hyperplane, KappaParams, MultiPartition, OrbitCatalog, OrbitLabel, OrbitReport, Partition,
    RationalCharacter, SemisimplicityReport,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const EXIT_SEMISIMPLE: u8 = 0;
pub const EXIT_NOT_SEMISIMPLE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_DISAGREEMENT: u8 = 3;

/// Characters drawn per self-test run.
const SELF_TEST_SAMPLES: usize = 200;

#[derive(Debug, Parser)]
#[command(
    name = "nilcone",
    version,
    about = "Orbits, local systems and semi-simplicity for the enhanced cyclic nilpotent cone"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Debug, Args)]
pub struct Shape {
    /// Rank n (dimension vector nδ on the cycle).
    #[arg(short = 'n')]
    pub n: usize,
    /// Cycle length ℓ.
    #[arg(short = 'l', long = "ell")]
    pub ell: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List Q(n, ℓ) with summands and fundamental groups.
    Orbits {
        #[command(flatten)]
        shape: Shape,
        /// Also flag which orbits carry a χ-monodromic local system.
        #[arg(long)]
        chi: Option<String>,
    },
    /// Fundamental group of one orbit.
    Pi1 {
        /// Rank; derived from the label when omitted.
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(short = 'l', long = "ell")]
        ell: usize,
        /// Partition, e.g. `[2,1]` or `[]`.
        #[arg(long)]
        lambda: String,
        /// ℓ-multipartition, e.g. `[1];[]`.
        #[arg(long)]
        nu: String,
    },
    /// List Q_χ(n, ℓ), the orbits indexing simple objects.
    Simples {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        chi: String,
    },
    /// Decide semi-simplicity at χ; with `--seed` and no `--chi`, cross-check
    /// the criteria on random characters.
    Semisimple {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        chi: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// The hyperplanes χ·α ∈ Z, α ∈ R_n.
    Hyperplanes {
        #[command(flatten)]
        shape: Shape,
    },
    /// Convert between χ and κ and show the Hecke parameters.
    Translate {
        /// Cycle length; derived from the input when omitted.
        #[arg(short = 'l', long = "ell")]
        ell: Option<usize>,
        #[arg(long, conflicts_with = "kappa", required_unless_present = "kappa")]
        chi: Option<String>,
        /// `k00=<q>,k=<κ_0>,…,<κ_{ℓ-1}>`
        #[arg(long)]
        kappa: Option<String>,
    },
}

/// What a subcommand produced, in all three formats.
struct Rendered {
    json: String,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    pretty: String,
    exit: u8,
}

impl Rendered {
    fn new<T: Serialize>(
        value: &T,
        header: Vec<&'static str>,
        rows: Vec<Vec<String>>,
        pretty: String,
    ) -> Self {
        Rendered {
            json: serde_json::to_string_pretty(value).expect("report types serialize"),
            header,
            rows,
            pretty,
            exit: EXIT_SEMISIMPLE,
        }
    }

    fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Json => writeln!(out, "{}", self.json),
            Format::Tsv => {
                writeln!(out, "{}", self.header.join("\t"))?;
                for row in &self.rows {
                    writeln!(out, "{}", row.join("\t"))?;
                }
                Ok(())
            }
            Format::Pretty => out.write_all(self.pretty.as_bytes()),
        }
    }
}

/// Runs one command, writing the result to `out` and diagnostics to stderr.
/// Returns the process exit code.
pub fn run(config: &CliConfig, out: &mut dyn Write) -> u8 {
    let rendered = match dispatch(&config.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    match rendered.write(config.format, out) {
        Ok(()) => rendered.exit,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CriteriaDisagreement { .. } => EXIT_DISAGREEMENT,
        _ => EXIT_INPUT,
    }
}

fn dispatch(command: &Command) -> nilcone::Result<Rendered> {
    match command {
        Command::Orbits { shape, chi } => {
            check_ell(shape.ell)?;
            let chi = chi
                .as_deref()
                .map(|s| parse_chi(s, shape.ell))
                .transpose()?;
            Ok(render_orbits(&orbit_report(
                shape.n,
                shape.ell,
                chi.as_ref(),
            )?))
        }
        Command::Simples { shape, chi } => {
            check_ell(shape.ell)?;
            let chi = parse_chi(chi, shape.ell)?;
            let catalog = OrbitCatalog::new(shape.n, shape.ell);
            Ok(render_orbits(&orbit_report_filtered(
                &catalog,
                Some(&chi),
                true,
            )?))
        }
        Command::Pi1 { n, ell, lambda, nu } => pi1(*n, *ell, lambda, nu),
        Command::Semisimple { shape, chi, seed } => match (chi, seed) {
            (Some(chi), _) => {
                let chi = parse_chi(chi, shape.ell)?;
                let report = nilcone::semisimplicity_report(shape.n, shape.ell, &chi)?;
                Ok(render_semisimple(&report))
            }
            (None, Some(seed)) => self_test(shape, *seed),
            (None, None) => Err(Error::InvalidParameter(
                "semisimple needs --chi, or --seed for a randomized self-test".into(),
            )),
        },
        Command::Hyperplanes { shape } => hyperplanes(shape),
        Command::Translate { ell, chi, kappa } => translate(*ell, chi.as_deref(), kappa.as_deref()),
    }
}

fn check_ell(ell: usize) -> nilcone::Result<()> {
    if ell == 0 {
        return Err(Error::InvalidParameter("ℓ must be at least 1".into()));
    }
    Ok(())
}

fn check_len(found: usize, expected: Option<usize>) -> nilcone::Result<()> {
    match expected {
        Some(expected) if expected != found => Err(Error::DimensionMismatch { expected, found }),
        _ => Ok(()),
    }
}

fn parse_chi(s: &str, ell: usize) -> nilcone::Result<RationalCharacter> {
    let chi: RationalCharacter = s.parse()?;
    check_len(chi.ell(), Some(ell))?;
    Ok(chi)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn circle(c: &CircleElement) -> String {
    format!("e({c})")
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

/// Columns padded to a common width, two spaces apart.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut s = line(header.to_vec());
    for row in rows {
        s.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    s
}

fn render_orbits(report: &OrbitReport) -> Rendered {
    let flagged = report.chi.is_some();
    let mut header = vec!["lambda", "nu", "framed", "summands", "pi1"];
    if flagged {
        header.push("monodromic");
    }
    let rows: Vec<Vec<String>> = report
        .records
        .iter()
        .map(|r| {
            let summands: Vec<&DimVector> = r.summands.iter().map(|s| &s.dim_vector).collect();
            let mut row = vec![
                r.lambda.to_string(),
                r.nu.to_string(),
                r.framed.to_string(),
                if summands.is_empty() {
                    "-".into()
                } else {
                    join(&summands, " ")
                },
                r.pi1.to_string(),
            ];
            if let Some(flag) = r.monodromic_for_chi {
                row.push(yes_no(flag).into());
            }
            row
        })
        .collect();

    let t = &report.totals;
    let mut pretty = format!(
        "Q({}, {}): {} orbits, |P_ℓ(n)| = {}",
        report.n, report.ell, t.orbits, t.multipartitions
    );
    if let (Some(chi), Some(simples)) = (&report.chi, t.simples) {
        pretty.push_str(&format!(", |Q_χ| = {simples} at χ = {chi}"));
    }
    pretty.push_str("\n\n");
    pretty.push_str(&table(&header, &rows));
    Rendered::new(report, header, rows, pretty)
}

#[derive(Serialize)]
struct Pi1Output<'a> {
    lambda: &'a Partition,
    nu: &'a MultiPartition,
    n: usize,
    ell: usize,
    pi1: String,
    group: &'a FGAbelianGroup,
}

fn pi1(n: Option<usize>, ell: usize, lambda: &str, nu: &str) -> nilcone::Result<Rendered> {
    check_ell(ell)?;
    let lambda: Partition = lambda.parse()?;
    let nu: MultiPartition = nu.parse()?;
    check_len(nu.ell(), Some(ell))?;
    let label = match n {
        Some(n) => OrbitLabel::with_n(lambda, nu, n)?,
        None => OrbitLabel::new(lambda, nu)?,
    };
    let group = fundamental_group(&label);
    let out = Pi1Output {
        lambda: label.lambda(),
        nu: label.nu(),
        n: label.n(),
        ell,
        pi1: group.to_string(),
        group: &group,
    };
    let rows = vec![vec![
        label.lambda().to_string(),
        label.nu().to_string(),
        group.to_string(),
    ]];
    Ok(Rendered::new(
        &out,
        vec!["lambda", "nu", "pi1"],
        rows,
        format!("{group}\n"),
    ))
}

fn render_semisimple(r: &SemisimplicityReport) -> Rendered {
    let violated: Vec<String> = r
        .violated_roots
        .iter()
        .map(|v| v.root.to_string())
        .collect();
    let header = vec![
        "n",
        "ell",
        "chi",
        "semisimple",
        "verdict_roots",
        "verdict_hecke",
        "verdict_cherednik",
        "verdict_counting",
        "simple_count",
        "pell_count",
        "orbit_count",
        "chi_integral",
        "violated_roots",
    ];
    let rows = vec![vec![
        r.n.to_string(),
        r.ell.to_string(),
        r.chi.to_string(),
        r.is_semisimple().to_string(),
        r.verdict_roots.to_string(),
        r.verdict_hecke.to_string(),
        r.verdict_cherednik.to_string(),
        r.verdict_counting.to_string(),
        r.simple_count.to_string(),
        r.pell_count.to_string(),
        r.orbit_count.to_string(),
        r.chi_integral.to_string(),
        if violated.is_empty() {
            "-".into()
        } else {
            violated.join(" ")
        },
    ]];

    let mut pretty = format!(
        "n = {}, ℓ = {}, χ = {}\nsemi-simple: {}\n\n",
        r.n,
        r.ell,
        r.chi,
        yes_no(r.is_semisimple())
    );
    let criteria = vec![
        vec![
            "roots".into(),
            yes_no(r.verdict_roots).into(),
            format!("{} of R_n on integral hyperplanes", r.violated_roots.len()),
        ],
        vec![
            "hecke".into(),
            yes_no(r.verdict_hecke).into(),
            "Ariki product at the Hecke parameters".into(),
        ],
        vec![
            "cherednik".into(),
            yes_no(r.verdict_cherednik).into(),
            "spherical category O, k ∉ Z".into(),
        ],
        vec![
            "counting".into(),
            yes_no(r.verdict_counting).into(),
            format!(
                "|Q_χ| = {}, |P_ℓ(n)| = {}, |Q| = {}",
                r.simple_count, r.pell_count, r.orbit_count
            ),
        ],
    ];
    pretty.push_str(&table(&["criterion", "holds", "detail"], &criteria));
    if !r.violated_roots.is_empty() {
        pretty.push_str("\nviolated roots:\n");
        for v in &r.violated_roots {
            pretty.push_str(&format!("  {}  χ·α = {}\n", v.root, v.pairing));
        }
    }
    pretty.push_str(&format!("\nκ: {} (κ_01 = {})\n", r.kappa, r.kappa.k01()));
    let h = &r.hecke;
    pretty.push_str(&format!(
        "Hecke: q0 = {}, q1 = {}, u = [{}], q = {}\n",
        circle(&h.q0),
        circle(&h.q1),
        h.u.iter().map(circle).collect::<Vec<_>>().join(", "),
        circle(&h.q)
    ));

    let mut rendered = Rendered::new(r, header, rows, pretty);
    rendered.exit = if r.is_semisimple() {
        EXIT_SEMISIMPLE
    } else {
        EXIT_NOT_SEMISIMPLE
    };
    rendered
}

#[derive(Serialize)]
struct SelfTest {
    n: usize,
    ell: usize,
    seed: u64,
    samples: usize,
    semisimple: usize,
    not_semisimple: usize,
    disagreements: usize,
}

/// Checks that the criteria agree on random characters with denominators up
/// to 12. Exits 3 on the first disagreement.
fn self_test(shape: &Shape, seed: u64) -> nilcone::Result<Rendered> {
    if shape.n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    check_ell(shape.ell)?;
    let catalog = OrbitCatalog::new(shape.n, shape.ell);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut semisimple = 0;
    for _ in 0..SELF_TEST_SAMPLES {
        let shared: i64 = rng.gen_range(1..=12);
        let same = rng.gen_bool(0.5);
        let pairs: Vec<(i64, i64)> = (0..shape.ell)
            .map(|_| {
                let d = if same { shared } else { rng.gen_range(1..=12) };
                (rng.gen_range(-2 * d..=2 * d), d)
            })
            .collect();
        let chi = RationalCharacter::from_fractions(&pairs);
        let report = SemisimplicityReport::from_catalog(&catalog, &chi)
            .inspect_err(|_| eprintln!("criteria disagree at χ = {chi}"))?;
        semisimple += usize::from(report.is_semisimple());
    }
    let out = SelfTest {
        n: shape.n,
        ell: shape.ell,
        seed,
        samples: SELF_TEST_SAMPLES,
        semisimple,
        not_semisimple: SELF_TEST_SAMPLES - semisimple,
        disagreements: 0,
    };
    let header = vec![
        "n",
        "ell",
        "seed",
        "samples",
        "semisimple",
        "not_semisimple",
        "disagreements",
    ];
    let rows = vec![vec![
        out.n.to_string(),
        out.ell.to_string(),
        seed.to_string(),
        out.samples.to_string(),
        out.semisimple.to_string(),
        out.not_semisimple.to_string(),
        "0".into(),
    ]];
    let pretty = format!(
        "self-test n = {}, ℓ = {}, seed {seed}: {} characters, {} semi-simple, {} not, criteria agree on all\n",
        out.n, out.ell, out.samples, out.semisimple, out.not_semisimple
    );
    Ok(Rendered::new(&out, header, rows, pretty))
}

#[derive(Serialize)]
struct HyperplaneOutput {
    n: usize,
    ell: usize,
    count: usize,
    hyperplanes: Vec<Hyperplane>,
}

fn hyperplanes(shape: &Shape) -> nilcone::Result<Rendered> {
    let hs = hyperplane_listing(shape.n, shape.ell)?;
    let rows: Vec<Vec<String>> = hs
        .iter()
        .map(|h| vec![h.root.to_string(), h.equation.clone()])
        .collect();
    let mut pretty = format!(
        "R_{} for ℓ = {}: {} hyperplanes\n\n",
        shape.n,
        shape.ell,
        hs.len()
    );
    pretty.push_str(&table(&["root", "hyperplane"], &rows));
    let out = HyperplaneOutput {
        n: shape.n,
        ell: shape.ell,
        count: hs.len(),
        hyperplanes: hs,
    };
    Ok(Rendered::new(
        &out,
        vec!["root", "hyperplane"],
        rows,
        pretty,
    ))
}

#[derive(Serialize)]
struct Translation {
    ell: usize,
    chi: RationalCharacter,
    kappa: KappaParams,
    hecke: HeckeSummary,
}

fn translate(
    ell: Option<usize>,
    chi: Option<&str>,
    kappa: Option<&str>,
) -> nilcone::Result<Rendered> {
    if let Some(ell) = ell {
        check_ell(ell)?;
    }
    let (chi, kappa) = match (chi, kappa) {
        (Some(c), None) => {
            let chi: RationalCharacter = c.parse()?;
            check_len(chi.ell(), ell)?;
            let kappa = chi_to_kappa(&chi);
            (chi, kappa)
        }
        (None, Some(k)) => {
            let kappa: KappaParams = k.parse()?;
            check_len(kappa.ell(), ell)?;
            (kappa_to_chi(&kappa), kappa)
        }
        _ => {
            return Err(Error::InvalidParameter(
                "translate takes exactly one of --chi, --kappa".into(),
            ))
        }
    };
    let hecke = HeckeSummary::from(&hecke_params(&kappa));
    let header = vec!["chi", "k00", "k01", "kappa", "q0", "q1", "u", "q"];
    let rows = vec![vec![
        chi.to_string(),
        kappa.k00().to_string(),
        kappa.k01().to_string(),
        join(kappa.kappa(), ","),
        hecke.q0.to_string(),
        hecke.q1.to_string(),
        join(&hecke.u, ","),
        hecke.q.to_string(),
    ]];
    let pretty = format!(
        "χ = {chi}\nκ = {kappa} (κ_01 = {})\nq0 = {}, q1 = {}, u = [{}], q = {}\n",
        kappa.k01(),
        circle(&hecke.q0),
        circle(&hecke.q1),
        hecke.u.iter().map(circle).collect::<Vec<_>>().join(", "),
        circle(&hecke.q)
    );
    let out = Translation {
        ell: chi.ell(),
        chi,
        kappa,
        hecke,
    };
    Ok(Rendered::new(&out, header, rows, pretty))
}
