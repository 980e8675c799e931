//! `gproj`: build algebras, enumerate Gorenstein projectives, run the
//! tilting checks and classify.
//!
//! Exit codes: 0 for a result (including an exceeded budget), 1 for bad
//! input, 2 when a verification fails.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use gproj_core::ar::{almost_split_sequence, knit_gproj, tau, tau_gp, tau_gp_inverse, tau_inverse, KnitMode, KnitOptions};
use gproj_core::classify::{classify, detect_dynkin, Dynkin, Verdict};
use gproj_core::gorenstein::{global_dimension, gorenstein_dimension, is_gorenstein_projective, is_gp, GpMethod};
use gproj_core::linalg::{Field, FieldSpec, PrimeField, Rationals};
use gproj_core::modules::{decompose, is_projective, standard_module, ModuleFile, ModuleKind, Representation};
use gproj_core::quiver::{
    build_lambda_k, build_triangular, gorenstein_parameter, parse_quiver_spec, tensor_presentation, AlgebraPresentation,
    BoundQuiverAlgebra, GorensteinParameter,
};
use gproj_core::tilting::verify_tilting;
use gproj_core::Error;

#[derive(Parser, Debug)]
#[command(name = "gproj", version, about = "Gorenstein projective modules over bound quiver algebras")]
struct Cli {
    /// Field override: a prime such as `101`, `p=2`, `GF(3)`, or `Q`.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an algebra and summarise it.
    Build {
        spec: PathBuf,
        #[command(flatten)]
        shape: Shape,
        /// Tensor with the algebra in this spec file.
        #[arg(long)]
        tensor: Option<PathBuf>,
    },
    /// Enumerate the indecomposable Gorenstein projectives.
    Knit {
        spec: PathBuf,
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = 200)]
        budget: usize,
        #[arg(long, default_value = "knit")]
        mode: KnitMode,
        /// Largest total dimension admitted.
        #[arg(long, default_value_t = 64)]
        dim_cap: usize,
        /// Write the AR quiver in DOT format here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Write a standard module (simple, projective or injective) as a module file.
    Module {
        spec: PathBuf,
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Vertex label.
        #[arg(long)]
        vertex: String,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Test a module file for Gorenstein projectivity.
    GpTest {
        module: PathBuf,
        #[arg(long, default_value = "all")]
        method: GpMethod,
    },
    /// Check the tilting object of the stable graded category.
    VerifyTilting {
        spec: PathBuf,
        #[arg(long = "lambda-k", default_value_t = 2)]
        lambda_k: usize,
        /// Check stable Hom into shifts up to this bound.
        #[arg(long, default_value_t = 4)]
        hom_bound: usize,
    },
    /// Decide whether `Λ ⊗ K[X]/(X^k)` has finitely many indecomposable Gorenstein projectives.
    Classify {
        /// A hereditary presentation whose Dynkin type is detected.
        spec: Option<PathBuf>,
        /// Dynkin type such as `A2` or `D4`.
        #[arg(long = "type")]
        dynkin: Option<Dynkin>,
        #[arg(long)]
        k: usize,
    },
    /// Auslander–Reiten translate of a module file.
    Tau {
        module: PathBuf,
        #[arg(long)]
        inverse: bool,
        /// Use the translate of the Gorenstein projectives.
        #[arg(long)]
        relative: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Almost split sequence ending at a module file.
    ArSeq {
        module: PathBuf,
        /// In the Gorenstein projectives rather than all modules.
        #[arg(long)]
        relative: bool,
        /// Write `<prefix>.left.json`, `.middle.json`, `.right.json`.
        #[arg(long)]
        out_prefix: Option<String>,
    },
}

#[derive(clap::Args, Debug, Default)]
struct Shape {
    /// Replace `Λ` by `Λ ⊗ K[X]/(X^k)`.
    #[arg(long = "lambda-k")]
    lambda_k: Option<usize>,
    /// Replace `Λ` by the triangular matrix algebra `T_m(Λ)`.
    #[arg(long)]
    triangular: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Kind {
    Simple,
    Projective,
    Injective,
}

/// A computed result, and whether every verification in it passed.
struct Outcome {
    json: Value,
    text: String,
    verified: bool,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Self {
        Outcome { json, text, verified: true }
    }
}

macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec {
            FieldSpec::Prime(p) => {
                let $f = PrimeField::new(p);
                $body
            }
            FieldSpec::Rational => {
                let $f = Rationals;
                $body
            }
        }
    };
}

fn main() -> ExitCode {
    // Usage errors exit 1 like other bad input; 2 is reserved for failed checks.
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("JSON values serialize") + "\n"
            } else {
                out.text
            };
            // A closed pipe (`| head`) is not an error worth reporting.
            let _ = std::io::stdout().write_all(body.as_bytes());
            if out.verified {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn field_override(cli: &Cli) -> anyhow::Result<Option<FieldSpec>> {
    cli.field.as_deref().map(|s| s.parse::<FieldSpec>().map_err(|e| anyhow!(e))).transpose()
}

fn read_spec(path: &Path, field: Option<FieldSpec>) -> anyhow::Result<AlgebraPresentation> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut p = parse_quiver_spec(&text).with_context(|| format!("parsing {}", path.display()))?;
    if let Some(f) = field {
        p.field = f;
    }
    Ok(p)
}

fn apply_shape(p: AlgebraPresentation, shape: &Shape) -> anyhow::Result<AlgebraPresentation> {
    let mut p = p;
    if let Some(k) = shape.lambda_k {
        p = build_lambda_k(&p, k)?;
    }
    if let Some(m) = shape.triangular {
        p = build_triangular(&p, m)?;
    }
    Ok(p)
}

fn read_module_file(path: &Path, field: Option<FieldSpec>) -> anyhow::Result<(ModuleFile, AlgebraPresentation)> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file = ModuleFile::from_json(&text).with_context(|| format!("parsing {}", path.display()))?;
    let mut p = file.presentation().context("module file algebra")?;
    if let Some(f) = field {
        p.field = f;
    }
    Ok((file, p))
}

fn write_or_embed(path: Option<&Path>, file: &ModuleFile) -> anyhow::Result<Value> {
    match path {
        Some(p) => {
            std::fs::write(p, file.to_json()).with_context(|| format!("writing {}", p.display()))?;
            Ok(json!(p.display().to_string()))
        }
        None => Ok(serde_json::to_value(file)?),
    }
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let field = field_override(cli)?;
    match &cli.command {
        Command::Build { spec, shape, tensor } => {
            let mut p = apply_shape(read_spec(spec, field)?, shape)?;
            if let Some(other) = tensor {
                let mut q = read_spec(other, field)?;
                q.field = p.field;
                p = tensor_presentation(&p, &q)?;
            }
            with_field!(p.field, |f| cmd_build(&f, &p))
        }
        Command::Knit { spec, shape, budget, mode, dim_cap, dot } => {
            let p = apply_shape(read_spec(spec, field)?, shape)?;
            let opts = KnitOptions { budget: *budget, dim_cap: *dim_cap, mode: *mode, seed: cli.seed, ..Default::default() };
            with_field!(p.field, |f| cmd_knit(&f, &p, &opts, dot.as_deref()))
        }
        Command::Module { spec, shape, kind, vertex, out } => {
            let p = apply_shape(read_spec(spec, field)?, shape)?;
            with_field!(p.field, |f| cmd_module(&f, &p, *kind, vertex, out.as_deref()))
        }
        Command::GpTest { module, method } => {
            let (file, p) = read_module_file(module, field)?;
            with_field!(p.field, |f| cmd_gp_test(&f, &p, &file, *method))
        }
        Command::VerifyTilting { spec, lambda_k, hom_bound } => {
            let p = read_spec(spec, field)?;
            if *lambda_k == 0 {
                bail!("--lambda-k must be at least 1");
            }
            with_field!(p.field, |f| cmd_verify_tilting(&f, &p, *lambda_k, *hom_bound, cli.seed))
        }
        Command::Classify { spec, dynkin, k } => {
            let detected = match spec {
                Some(s) => Some(detect_dynkin(&read_spec(s, field)?)),
                None => None,
            };
            cmd_classify(*dynkin, detected, *k)
        }
        Command::Tau { module, inverse, relative, out } => {
            let (file, p) = read_module_file(module, field)?;
            with_field!(p.field, |f| cmd_tau(&f, &p, &file, *inverse, *relative, out.as_deref()))
        }
        Command::ArSeq { module, relative, out_prefix } => {
            let (file, p) = read_module_file(module, field)?;
            with_field!(p.field, |f| cmd_ar_seq(&f, &p, &file, *relative, out_prefix.as_deref(), cli.seed))
        }
    }
}

fn cmd_build<F: Field>(f: &F, p: &AlgebraPresentation) -> anyhow::Result<Outcome> {
    let a = BoundQuiverAlgebra::build(f, p)?;
    let graded = p.quiver.arrows.iter().any(|ar| ar.degree != 0);
    let parameter = graded.then(|| gorenstein_parameter(&a));
    let cert = gorenstein_dimension(&a, 16);
    let gldim = global_dimension(&a, 16);
    let json = json!({
        "field": p.field.to_string(),
        "vertices": p.quiver.num_vertices(),
        "arrows": p.quiver.num_arrows(),
        "relations": p.relations.len(),
        "dim": a.dim(),
        "basis_size": a.basis().len(),
        "graded": graded,
        "max_degree": a.max_degree(),
        "gorenstein_parameter": parameter,
        "gorenstein_dimension": cert.dimension(),
        "injective_dimensions": { "left": cert.left, "right": cert.right },
        "global_dimension": gldim,
        "cartan": a.cartan_matrix(),
        "presentation": p.to_spec_text(),
    });
    let mut text = String::new();
    writeln!(text, "field {}", p.field)?;
    writeln!(text, "vertices {}, arrows {}, relations {}", p.quiver.num_vertices(), p.quiver.num_arrows(), p.relations.len())?;
    writeln!(text, "dim {}", a.dim())?;
    match &parameter {
        Some(GorensteinParameter::Degree(d)) => writeln!(text, "gorenstein parameter {d}")?,
        Some(GorensteinParameter::Mixed(ds)) => writeln!(text, "socle in degrees {ds:?}")?,
        None => writeln!(text, "ungraded")?,
    }
    match cert.dimension() {
        Some(d) => writeln!(text, "gorenstein dimension {d}")?,
        None => writeln!(text, "gorenstein dimension exceeds {}", cert.bound)?,
    }
    match gldim {
        Some(d) => writeln!(text, "global dimension {d}")?,
        None => writeln!(text, "global dimension exceeds 16")?,
    }
    Ok(Outcome::ok(json, text))
}

fn cmd_knit<F: Field>(f: &F, p: &AlgebraPresentation, opts: &KnitOptions, dot: Option<&Path>) -> anyhow::Result<Outcome> {
    let a = BoundQuiverAlgebra::build(f, p)?;
    let q = match knit_gproj(&a, opts) {
        Ok(q) => q,
        // A produced term failed the membership check: the run itself is evidence.
        Err(e @ Error::NotGorensteinProjective(_)) => {
            let text = format!("{e}\n");
            return Ok(Outcome { json: json!({ "error": e.to_string() }), text, verified: false });
        }
        Err(e) => return Err(e.into()),
    };
    if let Some(path) = dot {
        std::fs::write(path, q.to_dot()).with_context(|| format!("writing {}", path.display()))?;
    }
    let mut json = q.summary();
    json["budget"] = json!(opts.budget);
    json["seed"] = json!(opts.seed);
    let mut text = String::new();
    writeln!(text, "{} nodes ({} projective), {}", q.len(), q.nodes.iter().filter(|n| n.projective).count(), closure_word(&q))?;
    let mut dims = q.dim_vectors();
    dims.sort();
    for d in dims {
        writeln!(text, "  {}", d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))?;
    }
    Ok(Outcome::ok(json, text))
}

fn closure_word<F: Field>(q: &gproj_core::ar::ArQuiver<F>) -> &'static str {
    if q.is_closed() {
        "closed"
    } else {
        "budget exceeded"
    }
}

fn vertex_of(p: &AlgebraPresentation, label: &str) -> anyhow::Result<usize> {
    p.quiver.vertex_index(label).ok_or_else(|| {
        anyhow!("no vertex {label}; vertices are {}", p.quiver.vertices.join(" "))
    })
}

fn cmd_module<F: Field>(
    f: &F,
    p: &AlgebraPresentation,
    kind: Kind,
    vertex: &str,
    out: Option<&Path>,
) -> anyhow::Result<Outcome> {
    let a = BoundQuiverAlgebra::build(f, p)?;
    let v = vertex_of(p, vertex)?;
    let kind = match kind {
        Kind::Simple => ModuleKind::Simple,
        Kind::Projective => ModuleKind::Projective,
        Kind::Injective => ModuleKind::Injective,
    };
    let m = standard_module(&a, v, kind);
    let file = ModuleFile::from_module(&m);
    let text = match out {
        Some(path) => {
            std::fs::write(path, file.to_json()).with_context(|| format!("writing {}", path.display()))?;
            format!("wrote {} with dims {:?}\n", path.display(), m.dims())
        }
        None => file.to_json() + "\n",
    };
    Ok(Outcome::ok(serde_json::to_value(&file)?, text))
}

fn load_module<F: Field>(f: &F, p: &AlgebraPresentation, file: &ModuleFile) -> anyhow::Result<Representation<F>> {
    let a = BoundQuiverAlgebra::build(f, p)?;
    Ok(file.to_module(&a)?)
}

fn require_gp<F: Field>(m: &Representation<F>) -> anyhow::Result<()> {
    if !is_gp(m)? {
        bail!("the module is not Gorenstein projective; drop --relative");
    }
    Ok(())
}

fn cmd_gp_test<F: Field>(f: &F, p: &AlgebraPresentation, file: &ModuleFile, method: GpMethod) -> anyhow::Result<Outcome> {
    let m = load_module(f, p, file)?;
    let report = is_gorenstein_projective(&m, method)?;
    let mut text = String::new();
    writeln!(text, "gorenstein projective: {}", report.gorenstein_projective)?;
    for v in &report.verdicts {
        writeln!(text, "  {:?}: {}", v.method, v.gorenstein_projective)?;
    }
    if !report.agree {
        writeln!(text, "methods disagree")?;
    }
    Ok(Outcome { verified: report.agree, json: serde_json::to_value(&report)?, text })
}

fn cmd_verify_tilting<F: Field>(
    f: &F,
    p: &AlgebraPresentation,
    k: usize,
    hom_bound: usize,
    seed: u64,
) -> anyhow::Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = verify_tilting(f, p, k, hom_bound, &mut rng)?;
    let pass = r.all_pass();
    let mut text = String::new();
    if r.trivial {
        writeln!(text, "k = {k}: the tilting candidate is zero, nothing to check")?;
    } else {
        let mark = |b: bool| if b { "pass" } else { "FAIL" };
        writeln!(text, "k = {k}, dim Λ = {}, dim T = {}", r.lambda_dim, r.t_dim)?;
        writeln!(text, "  gorenstein projective      {}", mark(r.gorenstein_projective && r.gp_methods_agree))?;
        writeln!(text, "  top summands projective    {}", mark(r.higher_summands_projective))?;
        if let Some(e) = &r.end {
            writeln!(text, "  degree-0 endomorphisms     {} (dim {}, expected {})", mark(e.matched()), e.dim, e.expected_dim)?;
        }
        if let Some(s) = &r.syzygy_period {
            writeln!(text, "  second syzygy shift        {}", mark(s.holds))?;
        }
        let hom_ok = r.hom_vanishing.iter().all(|h| h.shift == 0 || h.dim == 0);
        writeln!(text, "  stable Hom into shifts     {}", mark(hom_ok))?;
        if let Some(s) = &r.sequences {
            writeln!(text, "  short exact sequences      {}", mark(s.holds()))?;
        }
    }
    writeln!(text, "{}", if pass { "all checks pass" } else { "some checks failed" })?;
    Ok(Outcome { verified: pass, json: serde_json::to_value(&r)?, text })
}

fn cmd_classify(given: Option<Dynkin>, detected: Option<Option<Dynkin>>, k: usize) -> anyhow::Result<Outcome> {
    if k == 0 {
        bail!("--k must be at least 1");
    }
    let t = given.or(detected.flatten());
    let report = classify(t, k);
    let mut json = serde_json::to_value(&report)?;
    if let Some(d) = detected {
        json["detected_type"] = json!(d);
    }
    let mut text = String::new();
    let name = t.map(|t| t.to_string()).unwrap_or_else(|| "unknown type".into());
    let verdict = match report.verdict {
        Verdict::CmFinite => "CM-finite",
        Verdict::CmInfinite => "CM-infinite",
        Verdict::Unknown => "unknown",
    };
    writeln!(text, "{name}, k = {k}: {verdict}")?;
    if let Some(c) = report.count {
        writeln!(text, "  indecomposable Gorenstein projectives: {c}")?;
    }
    if let Some(src) = &report.count_source {
        writeln!(text, "  count: {src}")?;
    }
    if let Some((a, b, c)) = report.tubular_boundary {
        writeln!(text, "  boundary: tubular type ({a}, {b}, {c})")?;
    }
    Ok(Outcome::ok(json, text))
}

fn cmd_tau<F: Field>(
    f: &F,
    p: &AlgebraPresentation,
    file: &ModuleFile,
    inverse: bool,
    relative: bool,
    out: Option<&Path>,
) -> anyhow::Result<Outcome> {
    let m = load_module(f, p, file)?;
    if relative {
        require_gp(&m)?;
    }
    let r = match (inverse, relative) {
        (false, false) => tau(&m)?,
        (true, false) => tau_inverse(&m)?,
        (false, true) => tau_gp(&m)?,
        (true, true) => tau_gp_inverse(&m)?,
    };
    let result = ModuleFile::from_module(&r);
    let json = json!({ "dims": r.dims(), "module": write_or_embed(out, &result)? });
    let text = format!("dims {:?}\n", r.dims());
    Ok(Outcome::ok(json, text))
}

fn cmd_ar_seq<F: Field>(
    f: &F,
    p: &AlgebraPresentation,
    file: &ModuleFile,
    relative: bool,
    prefix: Option<&str>,
    seed: u64,
) -> anyhow::Result<Outcome> {
    let z = load_module(f, p, file)?;
    if relative {
        require_gp(&z)?;
    }
    let s = almost_split_sequence(&z, relative)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut middle: Vec<(Vec<usize>, bool)> =
        decompose(&s.middle, &mut rng).modules().into_iter().map(|m| (m.dims().to_vec(), is_projective(m))).collect();
    middle.sort();
    let exact = s.is_exact();
    let splits = s.splits();
    let path = |part: &str| prefix.map(|pre| PathBuf::from(format!("{pre}.{part}.json")));
    let json = json!({
        "exact": exact,
        "splits": splits,
        "ext_dim": s.ext_dim,
        "socle_dim": s.socle_dim,
        "left_dims": s.left.dims(),
        "middle_dims": s.middle.dims(),
        "right_dims": s.right.dims(),
        "middle_summands": middle.iter().map(|(d, proj)| json!({ "dims": d, "projective": proj })).collect::<Vec<_>>(),
        "left": write_or_embed(path("left").as_deref(), &ModuleFile::from_module(&s.left))?,
        "middle": write_or_embed(path("middle").as_deref(), &ModuleFile::from_module(&s.middle))?,
        "right": write_or_embed(path("right").as_deref(), &ModuleFile::from_module(&s.right))?,
    });
    let mut text = String::new();
    writeln!(text, "0 -> {:?} -> {:?} -> {:?} -> 0", s.left.dims(), s.middle.dims(), s.right.dims())?;
    writeln!(text, "  exact {exact}, split {splits}")?;
    for (d, proj) in &middle {
        writeln!(text, "  middle summand {d:?}{}", if *proj { " (projective)" } else { "" })?;
    }
    Ok(Outcome { verified: exact && !splits, json, text })
}
