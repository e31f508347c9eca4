use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use tricover::cayley::{forces_positive_b1, one_skeleton};
use tricover::census;
use tricover::cocycle::{
    cut_boundary_edges, search_certificate, verify_certificate, Cocycle, Verdict,
};
use tricover::cover::build_cover;
use tricover::graph::{cheeger_exact, cheeger_sweep, spectral_brackets, CutCertificate, MultiGraph};
use tricover::homology::homology;
use tricover::presentation::{
    abelianization, cyclic_quotients, parse_quotient, presentation_from, validate_quotient,
    FiniteQuotient,
};
use tricover::report::ValidationReport;
use tricover::skeleton::build_skeleton;
use tricover::splitting::{component_bound, corollary4_bounds, verify_star, SplittingProfile};
use tricover::surface::{
    dual_surface, profile, rebuild_cocycle, separates, validate_surface, verify_counting_bounds,
};
use tricover::Triangulation;

/// Covers of triangulated 3-manifolds: validation, homology, Cayley
/// graph cuts, cocycle certificates, dual normal surfaces, and splitting
/// arithmetic.
#[derive(Parser)]
#[command(name = "tricover", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format: human-readable or line-oriented key=value records.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Records,
}

#[derive(Args)]
struct TriSource {
    /// Path to a triangulation file.
    input: Option<PathBuf>,
    /// Use a built-in census triangulation (S3, L(4,1), S2xS1, RP3,
    /// L(3,1), L(5,2), T3) instead of a file.
    #[arg(long, conflicts_with = "input")]
    census: Option<String>,
}

#[derive(Args)]
struct QuotientSource {
    /// Path to a finite quotient file (group table plus generator images).
    #[arg(long)]
    quotient: Option<PathBuf>,
    /// Use the canonical cyclic quotients of this degree instead.
    #[arg(long, conflicts_with = "quotient")]
    cyclic: Option<usize>,
    /// Which cyclic quotient to pick (in canonical enumeration order).
    #[arg(long, default_value_t = 0)]
    index: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Structural checks: closedness, gluing involution, orientability,
    /// connectedness.
    Validate {
        #[command(flatten)]
        tri: TriSource,
    },
    /// Integer homology (Betti numbers and torsion) via Smith normal form.
    Homology {
        #[command(flatten)]
        tri: TriSource,
    },
    /// Edge-generated fundamental group presentation and its
    /// abelianization; optionally list cyclic quotients.
    Presentation {
        #[command(flatten)]
        tri: TriSource,
        /// List the cyclic quotients of this degree.
        #[arg(long)]
        cyclic: Option<usize>,
    },
    /// Build the finite regular cover of a quotient and report on it.
    Cover {
        #[command(flatten)]
        tri: TriSource,
        #[command(flatten)]
        quot: QuotientSource,
        /// Write the lifted triangulation here (labels at <path>.labels).
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Cheeger constant of a multigraph file: exact cut within the limit,
    /// spectral sweep and brackets otherwise.
    Cheeger {
        /// Path to a graph file.
        graph: PathBuf,
        /// Exhaustive search limit on the vertex count.
        #[arg(long, default_value_t = tricover::graph::EXACT_VERTEX_LIMIT)]
        limit: usize,
    },
    /// Full pipeline: cover, Cayley graph cut, threshold test, cocycle
    /// certificate search, homology cross-check.
    Certify {
        #[command(flatten)]
        tri: TriSource,
        #[command(flatten)]
        quot: QuotientSource,
        #[arg(long, default_value_t = tricover::graph::EXACT_VERTEX_LIMIT)]
        limit: usize,
        /// Certificate search support cap.
        #[arg(long, default_value_t = tricover::cocycle::SEARCH_SUPPORT_LIMIT)]
        cap: usize,
        /// Search for a certificate even when the cut misses the
        /// threshold.
        #[arg(long)]
        force: bool,
        /// Write a found certificate here.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Dual normal surface of a certificate: profile, counting bounds,
    /// separation.
    Surface {
        #[command(flatten)]
        tri: TriSource,
        #[command(flatten)]
        quot: QuotientSource,
        /// Read the certificate from a file instead of searching.
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long, default_value_t = tricover::graph::EXACT_VERTEX_LIMIT)]
        limit: usize,
        #[arg(long, default_value_t = tricover::cocycle::SEARCH_SUPPORT_LIMIT)]
        cap: usize,
        /// Search even when the cut misses the threshold.
        #[arg(long)]
        force: bool,
        /// Write the surface file here.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// One row per degree over a family of cyclic quotients: Cheeger
    /// ratio, threshold verdict, certificate verdict, first Betti number.
    Sweep {
        #[command(flatten)]
        tri: TriSource,
        /// Degree range, inclusive, as <min>..<max>.
        #[arg(long, default_value = "2..8")]
        degrees: String,
        #[arg(long, default_value_t = tricover::graph::EXACT_VERTEX_LIMIT)]
        limit: usize,
        #[arg(long, default_value_t = tricover::cocycle::SEARCH_SUPPORT_LIMIT)]
        cap: usize,
    },
    /// Splitting arithmetic: telescoping identity and derived bounds for
    /// a profile file (`splitting chiF=<int> chis=<int,...>`).
    Ledger {
        /// Path to a profile file.
        profile: PathBuf,
    },
}

struct Report {
    format: Format,
    lines: Vec<String>,
}

impl Report {
    fn new(format: Format) -> Self {
        Report {
            format,
            lines: Vec::new(),
        }
    }

    /// `records` gets the key=value form, `human` the readable one.
    fn dual(&mut self, records: String, human: String) {
        self.lines.push(match self.format {
            Format::Records => records,
            Format::Human => human,
        });
    }

    fn checks(&mut self, report: &ValidationReport) {
        for c in &report.checks {
            self.dual(
                format!("check={} pass={}", c.name, c.pass),
                format!(
                    "{}: {} ({})",
                    c.name,
                    if c.pass { "pass" } else { "FAIL" },
                    c.detail
                ),
            );
        }
    }

    fn finish(self, out: &Option<PathBuf>) -> Result<()> {
        let text = self.lines.join("\n") + "\n";
        match out {
            Some(path) => std::fs::write(path, text)
                .with_context(|| format!("writing {}", path.display()))?,
            None => print!("{}", text),
        }
        Ok(())
    }
}

fn load_triangulation(src: &TriSource) -> Result<Triangulation> {
    match (&src.input, &src.census) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            Ok(Triangulation::parse(&text)?)
        }
        (None, Some(name)) => census::all()
            .into_iter()
            .find(|(n, _)| n.eq_ignore_ascii_case(name))
            .map(|(_, t)| t)
            .ok_or_else(|| {
                let names: Vec<&str> = census::all().iter().map(|(n, _)| *n).collect();
                anyhow!("unknown census manifold '{}'; known: {}", name, names.join(", "))
            }),
        _ => bail!("provide either an input file or --census <name>"),
    }
}

fn load_quotient(t: &Triangulation, src: &QuotientSource) -> Result<FiniteQuotient> {
    let skeleton = build_skeleton(t)?;
    let presentation = presentation_from(&skeleton)?;
    let q = match (&src.quotient, src.cyclic) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            parse_quotient(&text)?
        }
        (None, Some(n)) => {
            let all = cyclic_quotients(&presentation, n);
            if all.is_empty() {
                bail!("no cyclic quotients of degree {}", n);
            }
            all.into_iter().nth(src.index).ok_or_else(|| {
                anyhow!("cyclic quotient index {} out of range", src.index)
            })?
        }
        _ => bail!("provide either --quotient <file> or --cyclic <degree>"),
    };
    let report = validate_quotient(&presentation, &q);
    if !report.all_pass() {
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect();
        bail!("quotient failed validation: {}", failed.join(", "));
    }
    Ok(q)
}

fn torsion_field(torsion: &[i128]) -> String {
    if torsion.is_empty() {
        "-".to_string()
    } else {
        torsion
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn list_field(xs: &[usize]) -> String {
    if xs.is_empty() {
        "-".to_string()
    } else {
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Exit 0 clean, 1 on validation/input failure, 2 on invariant violation.
fn run(cli: &Cli) -> Result<u8> {
    let mut report = Report::new(cli.format);
    let code = match &cli.command {
        Command::Validate { tri } => {
            let t = load_triangulation(tri)?;
            report.dual(
                format!("tets={}", t.tet_count()),
                format!("tetrahedra: {}", t.tet_count()),
            );
            let v = t.validate();
            report.checks(&v);
            report.dual(
                format!("valid={}", v.all_pass()),
                if v.all_pass() {
                    "all checks passed".to_string()
                } else {
                    "validation FAILED".to_string()
                },
            );
            u8::from(!v.all_pass())
        }
        Command::Homology { tri } => {
            let t = load_triangulation(tri)?;
            let h = homology(&t)?;
            for k in 0..4 {
                report.dual(
                    format!("b{}={} torsion{}={}", k, h.betti[k], k, torsion_field(&h.torsion[k])),
                    format!(
                        "H_{}: rank {}, torsion [{}]",
                        k,
                        h.betti[k],
                        torsion_field(&h.torsion[k])
                    ),
                );
            }
            0
        }
        Command::Presentation { tri, cyclic } => {
            let t = load_triangulation(tri)?;
            let skeleton = build_skeleton(&t)?;
            let p = presentation_from(&skeleton)?;
            let ab = abelianization(&p);
            report.dual(
                format!(
                    "generators={} relators={} rank={} torsion={}",
                    p.generator_count,
                    p.relators.len(),
                    ab.rank,
                    torsion_field(&ab.torsion)
                ),
                format!(
                    "{} generators, {} relators; abelianization rank {}, torsion [{}]",
                    p.generator_count,
                    p.relators.len(),
                    ab.rank,
                    torsion_field(&ab.torsion)
                ),
            );
            if let Some(n) = cyclic {
                let quotients = cyclic_quotients(&p, *n);
                report.dual(
                    format!("cyclic_degree={} quotients={}", n, quotients.len()),
                    format!("{} cyclic quotients of degree {}", quotients.len(), n),
                );
                for (i, q) in quotients.iter().enumerate() {
                    report.dual(
                        format!("quotient={} images={}", i, list_field(&q.images)),
                        format!("  #{}: generator images [{}]", i, list_field(&q.images)),
                    );
                }
            }
            0
        }
        Command::Cover { tri, quot, export } => {
            let t = load_triangulation(tri)?;
            let q = load_quotient(&t, quot)?;
            let cover = build_cover(&t, &q)?;
            let h = homology(&cover.lifted)?;
            report.dual(
                format!(
                    "degree={} lifted_tets={} vertices={} euler={} b1={}",
                    cover.degree(),
                    cover.lifted.tet_count(),
                    cover.skeleton.vertex_count,
                    cover.skeleton.euler_characteristic(),
                    h.b1()
                ),
                format!(
                    "degree {} cover: {} tetrahedra, {} vertices, euler {}, b1 = {}",
                    cover.degree(),
                    cover.lifted.tet_count(),
                    cover.skeleton.vertex_count,
                    cover.skeleton.euler_characteristic(),
                    h.b1()
                ),
            );
            if let Some(path) = export {
                std::fs::write(path, cover.lifted.to_text())
                    .with_context(|| format!("writing {}", path.display()))?;
                let labels = path.with_extension("labels");
                std::fs::write(&labels, cover.labels_to_text())
                    .with_context(|| format!("writing {}", labels.display()))?;
                report.dual(
                    format!("exported={}", path.display()),
                    format!("wrote {} and {}", path.display(), labels.display()),
                );
            }
            0
        }
        Command::Cheeger { graph, limit } => {
            let text = std::fs::read_to_string(graph)
                .with_context(|| format!("reading {}", graph.display()))?;
            let g = MultiGraph::parse(&text)?;
            report.dual(
                format!("vertices={} edges={}", g.vertex_count(), g.edges().len()),
                format!("{} vertices, {} edges", g.vertex_count(), g.edges().len()),
            );
            let cut = if g.vertex_count() <= *limit {
                cheeger_exact(&g, *limit)?
            } else {
                cheeger_sweep(&g)?
            };
            emit_cut(&mut report, &cut);
            if let Ok((lo, hi)) = spectral_brackets(&g) {
                report.dual(
                    format!("bracket_low={:.9} bracket_high={:.9}", lo, hi),
                    format!("spectral brackets [{:.9}, {:.9}]", lo, hi),
                );
            }
            0
        }
        Command::Certify {
            tri,
            quot,
            limit,
            cap,
            force,
            export,
        } => {
            let t = load_triangulation(tri)?;
            let q = load_quotient(&t, quot)?;
            let (verdict_code, outcome) =
                certify_pipeline(&mut report, &t, &q, *limit, *cap, *force, None)?;
            if let (Some(path), Some((_, cert, _))) = (export, &outcome) {
                std::fs::write(path, cert.to_text())
                    .with_context(|| format!("writing {}", path.display()))?;
                report.dual(
                    format!("exported={}", path.display()),
                    format!("wrote {}", path.display()),
                );
            }
            verdict_code
        }
        Command::Surface {
            tri,
            quot,
            certificate,
            limit,
            cap,
            force,
            export,
        } => {
            let t = load_triangulation(tri)?;
            let q = load_quotient(&t, quot)?;
            let cert_override = match certificate {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    Some(Cocycle::parse(&text)?)
                }
                None => None,
            };
            let (code, outcome) =
                certify_pipeline(&mut report, &t, &q, *limit, *cap, *force, cert_override)?;
            if code != 0 {
                report.dual(
                    "surface=unavailable".to_string(),
                    "no certificate: no surface to build".to_string(),
                );
                code
            } else {
                let (cover, cert, support) = outcome.expect("code 0 implies a certificate");
                let surf = dual_surface(&cover.skeleton, &cert);
                let sv = validate_surface(&cover.lifted, &surf);
                report.checks(&sv);
                if !sv.all_pass() {
                    2
                } else {
                    let prof = profile(&cover.lifted, &cover.skeleton, &surf)?;
                    report.dual(
                        format!(
                            "discs={} points={} arcs={} euler={} components={}",
                            prof.discs,
                            prof.points,
                            prof.arcs,
                            prof.euler,
                            prof.components.len()
                        ),
                        format!(
                            "{} discs, {} points, {} arcs; euler {}, {} components",
                            prof.discs,
                            prof.points,
                            prof.arcs,
                            prof.euler,
                            prof.components.len()
                        ),
                    );
                    for (i, comp) in prof.components.iter().enumerate() {
                        report.dual(
                            format!(
                                "component={} euler={} orientable={} genus={} discs={}",
                                i, comp.euler, comp.orientable, comp.genus, comp.discs
                            ),
                            format!(
                                "  component {}: euler {}, {}, genus {}, {} discs",
                                i,
                                comp.euler,
                                if comp.orientable {
                                    "orientable"
                                } else {
                                    "non-orientable"
                                },
                                comp.genus,
                                comp.discs
                            ),
                        );
                    }
                    let rebuilt = rebuild_cocycle(&cover.skeleton, &surf)?;
                    report.dual(
                        format!("round_trip={}", rebuilt == cert),
                        format!(
                            "cocycle round trip: {}",
                            if rebuilt == cert { "exact" } else { "MISMATCH" }
                        ),
                    );
                    let bounds = verify_counting_bounds(
                        &prof,
                        support.len(),
                        cover.skeleton.max_edge_valence(),
                    );
                    report.checks(&bounds);
                    match separates(&cover.lifted, &surf) {
                        Ok(sep) => report.dual(
                            format!("separating={}", sep),
                            format!("separating: {}", sep),
                        ),
                        Err(_) => report.dual(
                            "separating=unknown".to_string(),
                            "separating: unknown (more than one disc in a tetrahedron)"
                                .to_string(),
                        ),
                    }
                    if let Some(path) = export {
                        std::fs::write(path, surf.to_text())
                            .with_context(|| format!("writing {}", path.display()))?;
                        report.dual(
                            format!("exported={}", path.display()),
                            format!("wrote {}", path.display()),
                        );
                    }
                    if rebuilt != cert || !bounds.all_pass() {
                        2
                    } else {
                        0
                    }
                }
            }
        }
        Command::Sweep {
            tri,
            degrees,
            limit,
            cap,
        } => {
            let t = load_triangulation(tri)?;
            let (lo, hi) = degrees
                .split_once("..")
                .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
                .filter(|(a, b)| *a >= 1 && a <= b)
                .ok_or_else(|| anyhow!("--degrees must be <min>..<max> with 1 <= min <= max"))?;
            let skeleton = build_skeleton(&t)?;
            let presentation = presentation_from(&skeleton)?;
            let mut worst = 0u8;
            for n in lo..=hi {
                let quotients = cyclic_quotients(&presentation, n);
                let Some(q) = quotients.into_iter().next() else {
                    report.dual(
                        format!("row degree={} quotients=0", n),
                        format!("degree {:>2}: no cyclic quotients", n),
                    );
                    continue;
                };
                let cover = build_cover(&t, &q)?;
                let graph = one_skeleton(&cover);
                let cut = if graph.vertex_count() <= *limit {
                    cheeger_exact(&graph, *limit)?
                } else {
                    cheeger_sweep(&graph)?
                };
                let forced = forces_positive_b1(cut.ratio, graph.vertex_count());
                let support = cut_boundary_edges(&cover, &cut.side);
                let found = match search_certificate(&cover.skeleton, &support, *cap) {
                    Ok(c) => {
                        if c.is_some() {
                            "found"
                        } else {
                            "not_found"
                        }
                    }
                    Err(_) => "support_too_large",
                };
                let b1 = homology(&cover.lifted)?.b1();
                if forced && cut.optimal && found == "not_found" {
                    worst = worst.max(2);
                }
                if found == "found" && b1 == 0 {
                    worst = worst.max(2);
                }
                report.dual(
                    format!(
                        "row degree={} h={}/{} forced={} certificate={} b1={}",
                        n,
                        cut.ratio.numer(),
                        cut.ratio.denom(),
                        forced,
                        found,
                        b1
                    ),
                    format!(
                        "degree {:>2}: h = {}/{}, threshold {}, certificate {}, b1 = {}",
                        n,
                        cut.ratio.numer(),
                        cut.ratio.denom(),
                        if forced { "met" } else { "unmet" },
                        found,
                        b1
                    ),
                );
            }
            worst
        }
        Command::Ledger { profile } => {
            let text = std::fs::read_to_string(profile)
                .with_context(|| format!("reading {}", profile.display()))?;
            let p = SplittingProfile::parse(&text)?;
            report.dual(
                format!("chiF={} surfaces={}", p.chi_f, p.chi_list.len()),
                format!("chi(F) = {}, {} surfaces", p.chi_f, p.chi_list.len()),
            );
            if let Some(terms) = p.star_terms() {
                let terms: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
                report.dual(
                    format!("terms={}", terms.join(",")),
                    format!("telescoping terms ({})", terms.join(", ")),
                );
            }
            let star = verify_star(&p);
            report.checks(&star);
            let pass = if star.all_pass() {
                let bounds = corollary4_bounds(&p);
                report.checks(&bounds);
                report.dual(
                    format!("component_bound={}", component_bound(p.chi_f)),
                    format!("component bound: {}", component_bound(p.chi_f)),
                );
                bounds.all_pass()
            } else {
                false
            };
            report.dual(
                format!("ledger={}", if pass { "pass" } else { "fail" }),
                format!("ledger: {}", if pass { "pass" } else { "FAIL" }),
            );
            u8::from(!pass)
        }
    };
    report.finish(&cli.out)?;
    Ok(code)
}

fn emit_cut(report: &mut Report, cut: &CutCertificate) {
    report.dual(
        format!(
            "cut={} boundary={} ratio={}/{} optimal={}",
            list_field(&cut.side),
            cut.boundary_size,
            cut.ratio.numer(),
            cut.ratio.denom(),
            cut.optimal
        ),
        format!(
            "cut side [{}]: boundary {}, ratio {}/{} ({})",
            list_field(&cut.side),
            cut.boundary_size,
            cut.ratio.numer(),
            cut.ratio.denom(),
            if cut.optimal {
                "exhaustive"
            } else {
                "sweep upper bound"
            }
        ),
    );
}

type PipelineOutcome = Option<(tricover::cover::CoverTriangulation, Cocycle, Vec<usize>)>;

/// Shared cover -> cut -> threshold -> certificate -> homology pipeline.
/// Returns the exit code plus, on success, what `surface` needs next.
#[allow(clippy::too_many_arguments)]
fn certify_pipeline(
    report: &mut Report,
    t: &Triangulation,
    q: &FiniteQuotient,
    limit: usize,
    cap: usize,
    force: bool,
    certificate_override: Option<Cocycle>,
) -> Result<(u8, PipelineOutcome)> {
    let cover = build_cover(t, q)?;
    let graph = one_skeleton(&cover);
    let cut = if graph.vertex_count() <= limit {
        cheeger_exact(&graph, limit)?
    } else {
        cheeger_sweep(&graph)?
    };
    report.dual(
        format!(
            "degree={} vertices={} edges={}",
            cover.degree(),
            graph.vertex_count(),
            graph.edges().len()
        ),
        format!(
            "degree {} cover; Cayley graph with {} vertices, {} edges",
            cover.degree(),
            graph.vertex_count(),
            graph.edges().len()
        ),
    );
    emit_cut(report, &cut);
    let forced = forces_positive_b1(cut.ratio, graph.vertex_count());
    report.dual(
        format!("forced={}", forced),
        format!(
            "threshold: {}",
            if forced {
                "met (small cut forces b1 > 0)"
            } else {
                "not met"
            }
        ),
    );
    let support = cut_boundary_edges(&cover, &cut.side);
    let b1 = homology(&cover.lifted)?.b1();

    let certificate = match certificate_override {
        Some(c) => {
            let v = verify_certificate(&cover.skeleton, &c);
            report.checks(&v);
            if !v.all_pass() {
                report.dual(
                    "certificate=rejected verdict=INVALID".to_string(),
                    "supplied certificate rejected".to_string(),
                );
                report.dual(format!("b1={}", b1), format!("b1 = {}", b1));
                return Ok((1, None));
            }
            Some(c)
        }
        None if forced || force => {
            if !forced {
                report.dual(
                    "warning=threshold_overridden".to_string(),
                    "warning: searching despite unmet threshold (--force)".to_string(),
                );
            }
            search_certificate(&cover.skeleton, &support, cap)?
        }
        None => None,
    };

    let searched = forced || force || certificate.is_some();
    let (verdict, code) = match (&certificate, searched) {
        (Some(_), _) => {
            if b1 > 0 {
                (Verdict::Agree.to_string(), 0)
            } else {
                (Verdict::Disagree.to_string(), 2)
            }
        }
        (None, true) => {
            if forced && cut.optimal {
                (Verdict::Violation.to_string(), 2)
            } else {
                (Verdict::Inconclusive.to_string(), 1)
            }
        }
        (None, false) => ("SKIPPED".to_string(), 1),
    };
    report.dual(
        format!(
            "certificate={} support={} b1={} verdict={}",
            match (&certificate, searched) {
                (Some(_), _) => "found",
                (None, true) => "not_found",
                (None, false) => "skipped",
            },
            support.len(),
            b1,
            verdict
        ),
        format!(
            "certificate {} on {} boundary edges; b1 = {}; verdict {}",
            match (&certificate, searched) {
                (Some(_), _) => "found",
                (None, true) => "not found",
                (None, false) => "skipped (threshold unmet, no --force)",
            },
            support.len(),
            b1,
            verdict
        ),
    );
    Ok((code, certificate.map(|c| (cover, c, support))))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(1)
        }
    }
}
