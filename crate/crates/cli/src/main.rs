//! Command line front end: skew-morphism enumeration, map analysis and
//! quotients, exhaustive classification, and the named verification sweeps.

use anyhow::{bail, Context, Result};
use cayleymap::catalog::{self, ClassificationResult};
use cayleymap::group::FiniteGroup;
use cayleymap::json as wire;
use cayleymap::map::CayleyMap;
use cayleymap::quotient;
use cayleymap::skew;
use cayleymap::subgroup::Subgroup;
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cayleymap", version, about = "Regular Cayley maps on dihedral groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Skew-morphism operations
    Skew {
        #[command(subcommand)]
        cmd: SkewCmd,
    },
    /// Cayley map operations
    Map {
        #[command(subcommand)]
        cmd: MapCmd,
    },
    /// Classify regular Cayley maps on the dihedral group of order 2n
    Classify {
        /// Half-order of the dihedral group
        #[arg(long)]
        n: usize,
        /// Keep only classes whose power-function kernel has this order
        #[arg(long)]
        kernel: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Worker thread count (defaults to the number of cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Verification sweeps; the exit code is 0 only if every check passes
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum SkewCmd {
    /// List every skew-morphism of a group
    Enumerate {
        /// Group spec, e.g. dihedral:8 or swap_extension:3
        #[arg(long)]
        group: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum MapCmd {
    /// Analyze a Cayley map descriptor
    Analyze {
        #[command(flatten)]
        input: MapInput,
        #[arg(long)]
        json: bool,
    },
    /// Quotient a map by a normal subgroup and check the quotient laws
    Quotient {
        #[command(flatten)]
        input: MapInput,
        /// Generators of the normal subgroup, by label (e.g. "a^4")
        #[arg(long)]
        normal: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct MapInput {
    /// Path to a JSON map descriptor {"group":…,"X":[…],"p":[…]}
    #[arg(long)]
    file: PathBuf,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Match the kernel-4 classification against the named families
    Main {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check the minimum-kernel statement over all regular maps
    Min {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Closed-form checks of the infinite families at the listed n
    Families {
        #[arg(long, value_delimiter = ',')]
        n_list: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Check the core-free classification at one n
    Cfree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(ok) => {
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Skew {
            cmd: SkewCmd::Enumerate { group, json },
        } => {
            let group = parse_group(&group)?;
            cmd_skew_enumerate(&group, json)
        }
        Command::Map { cmd } => match cmd {
            MapCmd::Analyze { input, json } => {
                let map = load_map(&input.file)?;
                cmd_map_analyze(&map, json)
            }
            MapCmd::Quotient { input, normal, json } => {
                let map = load_map(&input.file)?;
                cmd_map_quotient(&map, &normal, json)
            }
        },
        Command::Classify {
            n,
            kernel,
            json,
            jobs,
        } => {
            if let Some(jobs) = jobs {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build_global()
                    .context("configuring the worker pool")?;
            }
            let result = catalog::classify(n, kernel).context("classification")?;
            cmd_classify(&result, kernel, json)
        }
        Command::Verify { cmd } => run_verify(cmd),
    }
}

fn parse_group(spec: &str) -> Result<FiniteGroup> {
    let (kind, param) = spec
        .split_once(':')
        .with_context(|| format!("group spec {spec:?} is not KIND:PARAM"))?;
    let param: usize = param
        .parse()
        .with_context(|| format!("group parameter {param:?} is not a number"))?;
    let group = match kind {
        "dihedral" => FiniteGroup::dihedral(param)?,
        "swap_extension" => FiniteGroup::swap_extension(param)?,
        other => bail!("unknown group kind {other:?} (expected dihedral or swap_extension)"),
    };
    Ok(group)
}

fn load_map(path: &PathBuf) -> Result<CayleyMap> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", path.display()))?;
    Ok(wire::map_from_json(&value)?)
}

fn cmd_skew_enumerate(group: &FiniteGroup, as_json: bool) -> Result<bool> {
    let morphisms = skew::enumerate_skew_morphisms(group)?;
    if as_json {
        for s in &morphisms {
            println!("{}", serde_json::to_string(&s.to_json())?);
        }
    } else {
        println!(
            "{} skew-morphisms of the order-{} group",
            morphisms.len(),
            group.order()
        );
        println!("{:>4}  {:>5}  {:>6}  {:>10}  auto", "#", "order", "kernel", "pi values");
        for (i, s) in morphisms.iter().enumerate() {
            let mut pi: Vec<usize> = s.pi_table().to_vec();
            pi.sort_unstable();
            pi.dedup();
            let pi = pi
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",");
            println!(
                "{:>4}  {:>5}  {:>6}  {:>10}  {}",
                i,
                s.order(),
                s.kernel(group).order(),
                pi,
                if s.is_automorphism() { "yes" } else { "no" }
            );
        }
    }
    Ok(true)
}

fn cmd_map_analyze(map: &CayleyMap, as_json: bool) -> Result<bool> {
    let analysis = map.analyze();
    if as_json {
        println!("{}", wire::analysis_to_json(map, &analysis));
        return Ok(true);
    }
    let group = map.group();
    let rotation = map
        .rotation()
        .iter()
        .map(|&x| group.label(x))
        .collect::<Vec<_>>()
        .join(", ");
    println!("group order  {}", group.order());
    println!("valence      {}", map.valence());
    println!("rotation     ({rotation})");
    println!("regular      {}", analysis.regular);
    if let Some(s) = &analysis.skew {
        println!("skew order   {}", s.order());
    }
    if let Some(k) = &analysis.kernel {
        let members = k
            .members()
            .iter()
            .map(|&g| group.label(g))
            .collect::<Vec<_>>()
            .join(", ");
        println!("kernel       {{{members}}} (order {})", k.order());
    }
    if let Some(t) = analysis.skew_type {
        println!("skew type    {t}");
    }
    match analysis.balance {
        Some(t) => println!("balance      t = {t}"),
        None => println!("balance      none"),
    }
    println!("|Aut|        {}", analysis.aut_count);
    Ok(true)
}

fn cmd_map_quotient(map: &CayleyMap, normal_spec: &str, as_json: bool) -> Result<bool> {
    let group = map.group_arc();
    let gens: Vec<_> = normal_spec
        .split([',', ' '])
        .filter(|s| !s.is_empty())
        .map(|label| {
            group
                .elem_by_label(label)
                .with_context(|| format!("no element labelled {label:?}"))
        })
        .collect::<Result<_>>()?;
    let normal = Subgroup::generated(&group, &gens);
    let witness = quotient::quotient_map(map, &normal)?;
    let report = quotient::verify_quotient_laws(map, &normal)?;
    if as_json {
        println!(
            "{}",
            json!({
                "map": wire::map_to_json(&witness.map),
                "normal_order": witness.normal_order,
                "parent_skew_order": witness.parent_skew_order,
                "quotient_skew_order": witness.quotient_skew_order,
                "quotient_regular": report.quotient_regular,
                "order_inequality": report.order_inequality,
                "x_union_of_cosets": report.x_union_of_cosets,
                "equality_iff_union": report.equality_iff_union,
                "skew_action_matches": report.skew_action_matches,
                "aut_action_matches": report.aut_action_matches,
                "power_congruence": report.power_congruence,
                "quotient_kernel_order": report.quotient_kernel_order,
                "pass": report.pass(),
            })
        );
        return Ok(report.pass());
    }
    let q = &witness.map;
    let rotation = q
        .rotation()
        .iter()
        .map(|&x| q.group().label(x))
        .collect::<Vec<_>>()
        .join(", ");
    println!("quotient group order   {}", q.group().order());
    println!("quotient rotation      ({rotation})");
    println!("normal subgroup order  {}", witness.normal_order);
    println!(
        "skew orders            parent {} / quotient {}",
        witness.parent_skew_order, witness.quotient_skew_order
    );
    for (name, ok) in [
        ("quotient regular", report.quotient_regular),
        ("order inequality", report.order_inequality),
        ("X union of cosets", report.x_union_of_cosets),
        ("equality iff union", report.equality_iff_union),
        ("skew action matches", report.skew_action_matches),
        ("aut action matches", report.aut_action_matches),
        ("power congruence", report.power_congruence),
    ] {
        println!("{:<22} {}", name, if ok { "ok" } else { "FAIL" });
    }
    println!("quotient kernel order  {}", report.quotient_kernel_order);
    Ok(report.pass())
}

fn cmd_classify(result: &ClassificationResult, kernel: Option<usize>, as_json: bool) -> Result<bool> {
    if as_json {
        for entry in &result.classes {
            let group = entry.map.group();
            let kernel_labels = entry.analysis.kernel.as_ref().map(|k| {
                k.members()
                    .iter()
                    .map(|&g| group.label(g))
                    .collect::<Vec<_>>()
            });
            println!(
                "{}",
                json!({
                    "n": result.n,
                    "map": wire::map_to_json(&entry.map),
                    "valence": entry.map.valence(),
                    "skew_order": entry.analysis.skew.as_ref().map(|s| s.order()),
                    "kernel": kernel_labels,
                    "skew_type": entry.analysis.skew_type,
                    "balance": entry.analysis.balance,
                    "aut_count": entry.analysis.aut_count,
                    "family": entry.family.map(|f| f.name()),
                })
            );
        }
        return Ok(true);
    }
    match kernel {
        Some(k) => println!(
            "n = {}: {} equivalence classes with kernel order {k} ({} up to reflection; {} candidates)",
            result.n,
            result.classes.len(),
            result.reflection_class_count,
            result.candidate_count
        ),
        None => println!(
            "n = {}: {} equivalence classes ({} up to reflection; {} candidates)",
            result.n,
            result.classes.len(),
            result.reflection_class_count,
            result.candidate_count
        ),
    }
    println!(
        "{:>3}  {:>7}  {:>6}  {:>7}  {:>8}  family      rotation",
        "#", "valence", "kernel", "|Aut|", "balance"
    );
    for (i, entry) in result.classes.iter().enumerate() {
        let group = entry.map.group();
        let rotation = entry
            .map
            .rotation()
            .iter()
            .map(|&x| group.label(x))
            .collect::<Vec<_>>()
            .join(", ");
        let balance = entry
            .analysis
            .balance
            .map_or_else(|| "-".to_string(), |t| format!("t={t}"));
        let family = entry
            .family
            .map_or_else(|| "(none)".to_string(), |f| f.name());
        println!(
            "{:>3}  {:>7}  {:>6}  {:>7}  {:>8}  {:<10}  ({rotation})",
            i,
            entry.map.valence(),
            entry
                .analysis
                .kernel
                .as_ref()
                .map_or(0, cayleymap::subgroup::Subgroup::order),
            entry.analysis.aut_count,
            balance,
            family
        );
    }
    Ok(true)
}

fn run_verify(cmd: VerifyCmd) -> Result<bool> {
    match cmd {
        VerifyCmd::Main { max_n, json } => {
            let report = catalog::verify_theorem_main(max_n)?;
            for e in &report.entries {
                let families: Vec<String> = e
                    .families
                    .iter()
                    .map(|(f, ok)| format!("{}{}", f.name(), if *ok { "" } else { "!" }))
                    .collect();
                if json {
                    println!(
                        "{}",
                        json!({
                            "n": e.n,
                            "classes": e.class_count,
                            "reflection_classes": e.reflection_class_count,
                            "families": families,
                            "unmatched": e.unmatched_classes,
                            "pass": e.pass(),
                        })
                    );
                } else {
                    println!(
                        "n = {:>2}: {} classes, families [{}], {} unmatched  {}",
                        e.n,
                        e.class_count,
                        families.join(", "),
                        e.unmatched_classes,
                        verdict(e.pass())
                    );
                }
            }
            finish("kernel-4 classification", report.pass(), json)
        }
        VerifyCmd::Min { max_n, json } => {
            let report = catalog::verify_theorem_min(max_n)?;
            for e in &report.entries {
                if json {
                    println!(
                        "{}",
                        json!({
                            "n": e.n,
                            "classes": e.class_count,
                            "kernels_dihedral": e.kernels_dihedral,
                            "sizes_ok": e.sizes_ok,
                            "exceptional": e.exceptional_classes,
                            "pass": e.pass(),
                        })
                    );
                } else {
                    println!(
                        "n = {:>2}: {} classes, kernels dihedral {}, sizes {}, {} exceptional  {}",
                        e.n,
                        e.class_count,
                        e.kernels_dihedral,
                        e.sizes_ok,
                        e.exceptional_classes,
                        verdict(e.pass())
                    );
                }
            }
            finish("minimum kernel", report.pass(), json)
        }
        VerifyCmd::Families { n_list, json } => {
            let report = catalog::verify_family_lemmas(&n_list)?;
            for c in &report.checks {
                if json {
                    println!(
                        "{}",
                        json!({
                            "family": c.id.name(),
                            "regular_both": c.regular_both,
                            "psi_closed_form": c.psi_closed_form,
                            "kernel_exact": c.kernel_exact,
                            "pi_values": c.pi_values,
                            "congruence": c.congruence,
                            "core_order": c.core_order,
                            "core_order_ok": c.core_order_ok,
                            "pass": c.pass(),
                        })
                    );
                } else {
                    println!(
                        "{:<9}: regular {}, psi {}, kernel {}, pi {}, congruence {}, core {}  {}",
                        c.id.name(),
                        c.regular_both,
                        c.psi_closed_form,
                        c.kernel_exact,
                        c.pi_values,
                        c.congruence,
                        c.core_order,
                        verdict(c.pass())
                    );
                }
            }
            finish("infinite families", report.pass(), json)
        }
        VerifyCmd::Cfree { n, json } => {
            let r = catalog::verify_cfree(n)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "n": r.n,
                        "core_free_classes": r.class_count,
                        "matches_family": r.matches_family,
                        "aut_order": r.aut_order,
                        "aut_order_ok": r.aut_order_ok,
                        "swap_extension_iso": r.swap_extension_iso,
                        "pass": r.pass(),
                    })
                );
            } else {
                println!(
                    "n = {:>2}: {} core-free class(es), family match {}, |Aut| = {} ({}), swap iso {:?}  {}",
                    r.n,
                    r.class_count,
                    r.matches_family,
                    r.aut_order,
                    r.aut_order_ok,
                    r.swap_extension_iso,
                    verdict(r.pass())
                );
            }
            finish("core-free case", r.pass(), json)
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn finish(name: &str, pass: bool, json: bool) -> Result<bool> {
    if !json {
        println!("verify {name}: {}", if pass { "PASS" } else { "FAIL" });
    }
    Ok(pass)
}
