use std::fs;
use std::path::Path;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use faircut::exact::{Enumerator, Mode, MAX_LIMIT};
use faircut::families::{self, NamedInstance};
use faircut::format::{parse_instance, write_instance, Frac};
use faircut::graph::{cut_value, Graph, GroupPartition, PartitionKind};
use faircut::heuristics::{
    default_group_oracle, gw_expected_proportions, gw_round, gw_sdp_solve, is_locally_optimal, local_search_from_empty,
    naive_random_sample, naive_random_stats, sdp_objective, separate_solve, UnitVectorEmbedding,
};
use faircut::rational::{self, int, one, rat, to_f64, zero, Rational};
use faircut::utility::group_proportion;
use faircut::verify::{self, BoundCheck, Relation, Subproblem, Verdict};
use faircut::{evaluate_distribution, Objective, UtilityModel};

use crate::report::{
    lottery, GwEdgeRecord, InstanceEcho, NaiveGroupRecord, ObjectiveRecord, Report, ReproRow, RunRecord,
};
use crate::{exit, table, Cli, CliError, Command, GenerateArgs, GlobalOpts, Outcome};

pub const ALGORITHMS: [&str; 4] = ["separate-solve", "naive-random", "local-search", "gw"];

pub fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let g = &cli.global;
    if g.limit > MAX_LIMIT {
        return Err(CliError::new(exit::PARSE, format!("--limit must be at most {MAX_LIMIT}")));
    }
    let mode = match &g.mode {
        Some(m) => Some(m.parse::<Mode>().map_err(|e| CliError::new(exit::PARSE, e))?),
        None => None,
    };
    let start = Instant::now();
    let mut outcome = match &cli.command {
        Command::Solve { instance, objectives } => solve(g, mode, instance, objectives)?,
        Command::Run { instance, algorithm, trials, embedding, iterations, rank } => {
            run_algorithm(g, instance, algorithm, *trials, embedding.as_deref(), *iterations, *rank)?
        }
        Command::Generate(args) => return generate(g, args),
        Command::Verify { suite, count, instances } => verify_suites(g, suite, *count, instances)?,
        Command::Reproduce => reproduce(g)?,
        Command::Trend { family, k, max } => return trend(g, family, *k, *max),
    };
    if let Some(report) = outcome.report.as_mut() {
        if !g.no_timestamp {
            report.generated_unix = SystemTime::now().duration_since(UNIX_EPOCH).ok().map(|d| d.as_secs());
            report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        }
        outcome.file = Some(report.to_json());
        if g.json {
            outcome.text = report.to_json();
        }
    }
    Ok(outcome)
}

pub fn load_instance(path: &Path) -> Result<NamedInstance, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::new(exit::PARSE, format!("{}: {e}", path.display())))?;
    parse_instance(&text)
        .map_err(|e| CliError::new(exit::PARSE, format!("{}:{}:{}: {}", path.display(), e.line, e.column, e.message)))
}

fn enumerator(g: &GlobalOpts) -> Enumerator {
    Enumerator::with_limit(g.limit)
}

fn approx(g: &GlobalOpts, r: &Rational) -> Option<f64> {
    g.approx.then(|| to_f64(r))
}

fn solve(g: &GlobalOpts, mode: Option<Mode>, path: &Path, names: &[String]) -> Result<Outcome, CliError> {
    let inst = load_instance(path)?;
    let mut wanted: Vec<Objective> = if names.is_empty() {
        Objective::ALL.to_vec()
    } else {
        names
            .iter()
            .map(|n| n.trim().parse::<Objective>().map_err(|e| CliError::new(exit::PARSE, e)))
            .collect::<Result<_, _>>()?
    };
    if let Some(mode) = mode {
        wanted.retain(|o| o.mode() == mode);
    }
    inst.model.check_partition(&inst.partition)?;
    inst.model.check_graph(&inst.graph)?;
    let e = enumerator(g);
    let mut report = Report::new("solve", g.seed);
    report.instance = Some(InstanceEcho::from(&inst));
    for objective in wanted {
        let mut record = match objective {
            Objective::Mv | Objective::Mp => {
                let (value, cut) = if objective == Objective::Mv {
                    e.max_value(&inst.graph, inst.model)?
                } else {
                    e.max_proportion(&inst.graph, inst.model)?
                };
                ObjectiveRecord {
                    name: objective.name().into(),
                    value: Frac(value),
                    approx: None,
                    witness: Some(cut.to_string()),
                    lottery: Vec::new(),
                    dual_weights: Vec::new(),
                }
            }
            Objective::SfMv | Objective::SfMp => {
                let s = e.static_fair(&inst.graph, inst.model, &inst.partition, objective.mode())?;
                ObjectiveRecord {
                    name: objective.name().into(),
                    value: Frac(s.objective),
                    approx: None,
                    witness: Some(s.witness_cut.to_string()),
                    lottery: Vec::new(),
                    dual_weights: Vec::new(),
                }
            }
            Objective::DfMv | Objective::DfMp => {
                let s = e.dynamic_fair(&inst.graph, inst.model, &inst.partition, objective.mode())?;
                ObjectiveRecord {
                    name: objective.name().into(),
                    value: Frac(s.value.clone()),
                    approx: None,
                    witness: None,
                    lottery: lottery(&s.distribution),
                    dual_weights: s.dual_weights.iter().map(Frac::from).collect(),
                }
            }
        };
        record.approx = approx(g, &record.value.0);
        report.objectives.push(record);
    }
    let checks: Vec<BoundCheck> = inst
        .expected
        .iter()
        .filter_map(|x| {
            let got = report.objectives.iter().find(|o| o.name == x.objective.name())?;
            Some(BoundCheck::new(
                "expected",
                &inst.label,
                format!("{} ({})", x.objective, x.note),
                got.value.0.clone(),
                Relation::Eq,
                x.value.clone(),
            ))
        })
        .collect();
    if !checks.is_empty() {
        report.set_checks(&checks);
    }
    let text = table::solve(&report, g.approx);
    Ok(Outcome { report: Some(report), text, file: None, code: exit::OK })
}

fn read_embedding(path: &Path) -> Result<UnitVectorEmbedding, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::new(exit::PARSE, format!("{}: {e}", path.display())))?;
    let mut vectors = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let v = line
            .split_whitespace()
            .map(|t| t.parse::<f64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::new(exit::PARSE, format!("{}:{}: {e}", path.display(), i + 1)))?;
        vectors.push(v);
    }
    Ok(UnitVectorEmbedding::new(vectors)?)
}

#[allow(clippy::too_many_arguments)]
fn run_algorithm(
    g: &GlobalOpts,
    path: &Path,
    algorithm: &str,
    trials: Option<u64>,
    embedding: Option<&Path>,
    iterations: usize,
    rank: Option<usize>,
) -> Result<Outcome, CliError> {
    if !ALGORITHMS.contains(&algorithm) {
        return Err(CliError::new(
            exit::UNKNOWN_ALGORITHM,
            format!("unknown algorithm `{algorithm}` (expected one of {})", ALGORITHMS.join(", ")),
        ));
    }
    let inst = load_instance(path)?;
    inst.model.check_partition(&inst.partition)?;
    inst.model.check_graph(&inst.graph)?;
    let (graph, model, partition) = (&inst.graph, inst.model, &inst.partition);
    let mut report = Report::new(&format!("run {algorithm}"), g.seed);
    report.instance = Some(InstanceEcho::from(&inst));
    let mut checks = Vec::new();
    let record = match algorithm {
        "separate-solve" => {
            let out = separate_solve(graph, model, partition, &default_group_oracle)?;
            checks.push(BoundCheck::new(
                "separate-solve",
                &inst.label,
                "worst expected proportion >= alpha/gamma",
                out.score.minimum.clone(),
                Relation::Ge,
                out.guarantee.clone(),
            ));
            RunRecord::SeparateSolve {
                oracle_cuts: out.oracle.per_group_cuts.iter().map(ToString::to_string).collect(),
                alpha: Frac(out.oracle.alpha),
                groups: partition.len(),
                guarantee: Frac(out.guarantee),
                per_group: out.score.per_group.iter().map(Frac::from).collect(),
                minimum: Frac(out.score.minimum),
            }
        }
        "naive-random" => {
            let trials = trials.unwrap_or(100_000);
            let stats = naive_random_stats(graph, model, partition)?;
            let sample = naive_random_sample(graph, model, partition, g.seed, trials)?;
            if model == UtilityModel::Edge {
                checks.extend(verify::check_naive_stats(graph, partition, g.seed, trials, &inst.label)?);
            }
            RunRecord::NaiveRandom {
                trials,
                groups: stats
                    .iter()
                    .zip(&sample)
                    .zip(partition.groups())
                    .map(|((s, emp), grp)| NaiveGroupRecord {
                        size: grp.len(),
                        mean: Frac(s.mean.clone()),
                        variance: Frac(s.variance.clone()),
                        mean_lower_bound: s.lower_bound.as_ref().map(Frac::from),
                        mean_upper_bound: s.upper_bound.as_ref().map(Frac::from),
                        sample_mean: emp.mean,
                        sample_variance: emp.variance,
                    })
                    .collect(),
            }
        }
        "local-search" => {
            let cut = local_search_from_empty(graph);
            let per_group = partition
                .groups()
                .iter()
                .map(|grp| group_proportion(graph, model, &cut, grp))
                .collect::<Result<Vec<_>, _>>()?;
            let minimum = per_group.iter().min().cloned().expect("at least one group");
            checks.push(BoundCheck::new(
                "local-search",
                &inst.label,
                "every vertex has at least half its edges crossing (1 = yes)",
                int(i64::from(is_locally_optimal(graph, &cut))),
                Relation::Eq,
                one(),
            ));
            let degree_floor = (model == UtilityModel::NodeMaxDeg).then(|| {
                let delta = rational::from_usize(graph.max_degree());
                partition
                    .groups()
                    .iter()
                    .map(|grp| {
                        let total: usize = grp.iter().map(|&v| graph.degree(v)).sum();
                        rational::from_usize(total) / (rational::from_usize(2 * grp.len()) * &delta)
                    })
                    .min()
                    .expect("at least one group")
            });
            if let Some(floor) = &degree_floor {
                checks.push(BoundCheck::new(
                    "local-search",
                    &inst.label,
                    "worst group proportion >= min avg-deg/(2 max-deg)",
                    minimum.clone(),
                    Relation::Ge,
                    floor.clone(),
                ));
            }
            RunRecord::LocalSearch {
                cut: cut.to_string(),
                cut_value: cut_value(graph, &cut),
                per_group: per_group.iter().map(Frac::from).collect(),
                minimum: Frac(minimum),
                degree_floor: degree_floor.map(Frac),
            }
        }
        _ => {
            if model != UtilityModel::Edge {
                return Err(CliError::new(exit::MODEL_MISMATCH, "gw rounding is scored with edge utilities only"));
            }
            let samples = trials.unwrap_or(1000);
            let (emb, source) = match embedding {
                Some(p) => (read_embedding(p)?, p.display().to_string()),
                None => {
                    let sdp = gw_sdp_solve(graph, rank, iterations, g.seed)?;
                    (sdp.embedding, format!("coordinate-ascent SDP, {iterations} sweeps"))
                }
            };
            let rounding = gw_round(graph, &emb, g.seed, samples)?;
            let expected = gw_expected_proportions(graph, model, partition, &emb)?;
            let dist = faircut::heuristics::gw::sampled_distribution(&rounding);
            let score = evaluate_distribution(graph, model, partition, &dist)?;
            let best = rounding.cuts.iter().max_by_key(|c| cut_value(graph, c)).expect("at least one sample");
            RunRecord::Gw {
                source,
                samples,
                sdp_objective: sdp_objective(graph, &emb),
                edges: graph
                    .edges()
                    .iter()
                    .enumerate()
                    .map(|(i, &edge)| {
                        let p = rounding.analytic_probabilities[i];
                        GwEdgeRecord {
                            edge,
                            analytic_probability: p,
                            exact: (p == 0.0 || p == 1.0).then(|| Frac(int(p as i64))),
                            sampled_frequency: rounding.edge_frequencies[i],
                        }
                    })
                    .collect(),
                expected_per_group: expected,
                sampled_per_group: score.per_group.iter().map(Frac::from).collect(),
                sampled_minimum: Frac(score.minimum),
                best_sampled_cut: best.to_string(),
                best_sampled_value: cut_value(graph, best),
            }
        }
    };
    report.run = Some(record);
    if !checks.is_empty() {
        report.set_checks(&checks);
    }
    let text = table::run(&report, g.approx);
    let code = if report.failed() { exit::VERIFICATION_FAILED } else { exit::OK };
    Ok(Outcome { report: Some(report), text, file: None, code })
}

fn need(value: Option<usize>, name: &str, family: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::new(exit::BAD_GENERATOR, format!("family `{family}` needs --{name}")))
}

fn bad(e: faircut::Error) -> CliError {
    CliError::new(exit::BAD_GENERATOR, e.to_string())
}

fn with_partition(
    graph: Graph,
    label: String,
    choice: &str,
    groups: Option<usize>,
    seed: u64,
) -> Result<NamedInstance, CliError> {
    let (kind, how) = match choice {
        "singleton-edges" => (PartitionKind::Edge, "singleton"),
        "singleton-nodes" => (PartitionKind::Node, "singleton"),
        "whole-edges" => (PartitionKind::Edge, "whole"),
        "whole-nodes" => (PartitionKind::Node, "whole"),
        "random-edges" => (PartitionKind::Edge, "random"),
        "random-nodes" => (PartitionKind::Node, "random"),
        other => return Err(CliError::new(exit::BAD_GENERATOR, format!("unknown partition `{other}`"))),
    };
    let partition = match how {
        "singleton" => GroupPartition::singletons(&graph, kind),
        "whole" => GroupPartition::whole(&graph, kind),
        _ => {
            let count = groups.ok_or_else(|| CliError::new(exit::BAD_GENERATOR, "random partitions need --groups"))?;
            families::random_partition(&graph, kind, count, seed)
        }
    }
    .map_err(bad)?;
    let model = match kind {
        PartitionKind::Edge => UtilityModel::Edge,
        PartitionKind::Node => UtilityModel::NodeMaxDeg,
    };
    Ok(NamedInstance { label: format!("{label} {choice}"), graph, partition, model, expected: Vec::new() })
}

pub fn build_family(args: &GenerateArgs, seed: u64) -> Result<NamedInstance, CliError> {
    let family = args.family.as_str();
    let partition = args.partition.as_deref();
    let inst = match family {
        "diamond" | "example-c1" => families::diamond(),
        "paw" | "example-c3" => families::paw(),
        "clique-tail" => {
            families::clique_with_tail(need(args.k, "k", family)?, need(args.n, "n", family)?).map_err(bad)?
        }
        "cycle-biclique" => {
            families::cycle_plus_biclique(need(args.k, "k", family)?, need(args.r, "r", family)?).map_err(bad)?
        }
        "cycle" => {
            let n = need(args.n, "n", family)?;
            let choice = partition.unwrap_or("singleton-edges");
            match (n % 2, choice) {
                (1, "singleton-edges") if n >= 3 => families::odd_cycle_edges(n / 2).map_err(bad)?,
                (1, "singleton-nodes") if n >= 3 => families::odd_cycle_nodes(n / 2).map_err(bad)?,
                _ => {
                    with_partition(families::cycle(n).map_err(bad)?, format!("cycle C{n}"), choice, args.groups, seed)?
                }
            }
        }
        "complete" => {
            let n = need(args.n, "n", family)?;
            let choice = partition.unwrap_or("whole-edges");
            with_partition(families::complete(n).map_err(bad)?, format!("complete K{n}"), choice, args.groups, seed)?
        }
        "complete-bipartite" => {
            let a = need(args.a.or(args.n), "a", family)?;
            let b = need(args.b.or(args.n), "b", family)?;
            let choice = partition.unwrap_or("singleton-edges");
            let mut inst = with_partition(
                families::complete_bipartite(a, b).map_err(bad)?,
                format!("K{a},{b}"),
                choice,
                args.groups,
                seed,
            )?;
            if inst.partition.kind() == PartitionKind::Edge || a == b {
                for o in [Objective::SfMp, Objective::DfMp, Objective::Mp] {
                    inst.expected.push(families::Expected {
                        objective: o,
                        value: one(),
                        note: "the bipartition cuts every edge".into(),
                    });
                }
            }
            inst
        }
        "random" => {
            let n = need(args.n, "n", family)?;
            let kind = match partition.unwrap_or("random-edges") {
                "random-edges" => PartitionKind::Edge,
                "random-nodes" => PartitionKind::Node,
                other => {
                    return Err(CliError::new(
                        exit::BAD_GENERATOR,
                        format!("random instances take random-edges or random-nodes, not `{other}`"),
                    ))
                }
            };
            families::random_instance(n, args.p.unwrap_or(0.5), args.groups.unwrap_or(1), kind, seed).map_err(bad)?
        }
        other => return Err(CliError::new(exit::BAD_GENERATOR, format!("unknown family `{other}`"))),
    };
    Ok(inst)
}

fn generate(g: &GlobalOpts, args: &GenerateArgs) -> Result<Outcome, CliError> {
    let inst = build_family(args, g.seed)?;
    let text = write_instance(&inst);
    Ok(Outcome {
        report: None,
        text: if g.output.is_some() { String::new() } else { text.clone() },
        file: Some(text),
        code: exit::OK,
    })
}

fn verify_suites(
    g: &GlobalOpts,
    suite: &str,
    count: u64,
    instances: &[std::path::PathBuf],
) -> Result<Outcome, CliError> {
    let e = enumerator(g);
    let mut checks = Vec::new();
    match suite {
        "paper" | "curated" => checks.extend(verify::curated_suite(&e, g.seed)?),
        "random" => checks.extend(verify::random_suite(&e, g.seed, count)?),
        "all" => {
            checks.extend(verify::curated_suite(&e, g.seed)?);
            checks.extend(verify::random_suite(&e, g.seed, count)?);
        }
        "none" => {}
        other => {
            return Err(CliError::new(
                exit::PARSE,
                format!("unknown suite `{other}` (paper or curated, random, all, none)"),
            ))
        }
    }
    for path in instances {
        let inst = load_instance(path)?;
        let ctx = format!("{} ({})", inst.label, path.display());
        let mut named = inst.clone();
        named.label = ctx.clone();
        checks.extend(verify::check_expected(&e, &named)?);
        checks.extend(verify::check_chain(&e, &inst.graph, inst.model, &inst.partition, &ctx)?);
    }
    let mut report = Report::new(&format!("verify {suite}"), g.seed);
    report.set_checks(&checks);
    let text = table::verify(&report);
    let code = if report.failed() { exit::VERIFICATION_FAILED } else { exit::OK };
    Ok(Outcome { report: Some(report), text, file: None, code })
}

fn row(key: impl Into<String>, check: &BoundCheck) -> ReproRow {
    let show = |r: &Option<Rational>| r.as_ref().map_or_else(|| "-".to_string(), rational::format);
    ReproRow {
        key: key.into(),
        measured: show(&check.lhs),
        relation: check.relation.symbol().into(),
        reference: show(&check.rhs),
        verdict: check.verdict.name().into(),
    }
}

fn value_row(key: impl Into<String>, measured: Rational, relation: Relation, reference: Rational) -> ReproRow {
    row(key, &BoundCheck::new("reproduce", "", "", measured, relation, reference))
}

/// Number of adjacent pairs that break the trend, compared against 0.
fn trend_row(key: &str, values: &[Rational], strict: bool) -> ReproRow {
    let breaks = values.windows(2).filter(|w| if strict { w[1] <= w[0] } else { w[1] < w[0] }).count();
    let mut r = value_row(key, rational::from_usize(breaks), Relation::Eq, zero());
    r.measured = format!("{breaks} breaks");
    r.reference = "0 breaks".into();
    r
}

/// Every worked value and family formula, recomputed.
pub fn reproduce_rows(e: &Enumerator, seed: u64) -> Result<Vec<ReproRow>, CliError> {
    let mut rows = Vec::new();

    let paw = families::paw();
    let r = e.all_objectives(&paw.graph, paw.model, &paw.partition)?;
    rows.push(value_row(
        "paw, singleton edges: DF-MP (maximin LP value)",
        r.df_mp.value.clone(),
        Relation::Eq,
        rat(2, 3),
    ));
    rows.push(value_row("paw, singleton edges: MP", r.mp.clone(), Relation::Eq, rat(3, 4)));
    rows.push(value_row("paw, singleton edges: SF-MP", r.sf_mp.objective.clone(), Relation::Eq, zero()));
    rows.push(value_row("paw, singleton edges: LP dual value", r.df_mp.dual_value.clone(), Relation::Eq, rat(2, 3)));

    let diamond = families::diamond();
    let df = e.objective(&diamond.graph, diamond.model, &diamond.partition, Objective::DfMp)?;
    rows.push(value_row("diamond: DF-MP", df.clone(), Relation::Eq, rat(2, 3)));
    let names = ["cycle edges", "chord", "cycle edges and chord"];
    let mut smallest: Option<Rational> = None;
    for (groups, (name, expected)) in
        [vec![0], vec![1], vec![0, 1]].iter().zip(names.iter().zip([one(), one(), rat(4, 5)]))
    {
        let sub = Subproblem::edge_union(&diamond.graph, &diamond.partition, groups)?;
        let (mp, _) = e.max_proportion(&sub.graph, UtilityModel::Edge)?;
        smallest = Some(smallest.map_or(mp.clone(), |s: Rational| s.min(mp.clone())));
        rows.push(value_row(format!("diamond: MP of subgraph on {name}"), mp, Relation::Eq, expected));
    }
    rows.push(value_row(
        "diamond: DF-MP below every subgraph MP",
        df,
        Relation::Lt,
        smallest.expect("three subgraphs"),
    ));
    let pinned = verify::check_pinned_embedding(
        &diamond.graph,
        &diamond.partition,
        &families::diamond_embedding(),
        4,
        seed,
        "diamond",
    )?;
    rows.push(row("diamond, pinned embedding: crossing probability of chord (0,3)", &pinned[0]));
    rows.push(row("diamond, pinned embedding: worst analytic group expectation", &pinned[1]));
    rows.push(row("diamond, pinned embedding: worst group under sampled lottery", &pinned[2]));

    let mut gaps: Vec<Rational> = Vec::new();
    for n in [6usize, 10, 14] {
        let inst = families::clique_with_tail(2, n)?;
        let mp = e.objective(&inst.graph, inst.model, &inst.partition, Objective::Mp)?;
        let df = e.objective(&inst.graph, inst.model, &inst.partition, Objective::DfMp)?;
        let (mp_formula, df_formula) = families::clique_tail_values(2, n);
        rows.push(value_row(format!("clique-tail k=2 n={n}: DF-MP"), df.clone(), Relation::Eq, df_formula));
        rows.push(value_row(format!("clique-tail k=2 n={n}: MP"), mp.clone(), Relation::Eq, mp_formula));
        gaps.push(&mp - &df);
        rows.push(value_row(format!("clique-tail k=2 n={n}: MP - DF-MP"), mp - df, Relation::Lt, rat(1, 2)));
    }
    rows.push(trend_row("clique-tail k=2: MP - DF-MP strictly increasing over n=6,10,14", &gaps, true));
    let (mp, df) = families::clique_tail_values(2, 50);
    rows.push(value_row("clique-tail k=2 n=50 (closed form): MP - DF-MP", mp - df, Relation::Eq, rat(23, 78)));

    for n in 2..=5usize {
        let inst = families::odd_cycle_edges(n)?;
        let r = e.all_objectives(&inst.graph, inst.model, &inst.partition)?;
        let m = 2 * n as i64 + 1;
        rows.push(value_row(format!("C{m}, singleton edges: SF-MP"), r.sf_mp.objective.clone(), Relation::Eq, zero()));
        rows.push(value_row(
            format!("C{m}, singleton edges: DF-MP"),
            r.df_mp.value.clone(),
            Relation::Ge,
            one() - rat(1, m),
        ));
        rows.push(value_row(format!("C{m}, singleton edges: MP"), r.mp.clone(), Relation::Eq, rat(m - 1, m)));
        rows.push(value_row(
            format!("C{m}, singleton edges: DF-MP vs MP"),
            r.df_mp.value.clone(),
            Relation::Le,
            r.mp.clone(),
        ));
    }
    let mut gaps: Vec<Rational> = Vec::new();
    for n in 2..=4usize {
        let inst = families::odd_cycle_nodes(n)?;
        let r = e.all_objectives(&inst.graph, inst.model, &inst.partition)?;
        let m = 2 * n as i64 + 1;
        rows.push(value_row(
            format!("C{m}, singleton nodes: SF-MP"),
            r.sf_mp.objective.clone(),
            Relation::Eq,
            rat(1, 2),
        ));
        rows.push(value_row(
            format!("C{m}, singleton nodes: DF-MP"),
            r.df_mp.value.clone(),
            Relation::Ge,
            one() - rat(1, m),
        ));
        gaps.push(&r.df_mp.value - &r.sf_mp.objective);
        rows.push(value_row(
            format!("C{m}, singleton nodes: DF-MP - SF-MP"),
            &r.df_mp.value - &r.sf_mp.objective,
            Relation::Le,
            rat(1, 2),
        ));
    }
    rows.push(trend_row("odd cycles, singleton nodes: DF-MP - SF-MP increasing over C5,C7,C9", &gaps, false));

    let cb = families::cycle_plus_biclique(2, 3)?;
    let r = e.all_objectives(&cb.graph, cb.model, &cb.partition)?;
    rows.push(value_row(
        "cycle-biclique k=2 r=3: max cut",
        e.max_value(&cb.graph, UtilityModel::Edge)?.0,
        Relation::Eq,
        int(14),
    ));
    rows.push(value_row("cycle-biclique k=2 r=3: MP", r.mp.clone(), Relation::Eq, rat(7, 10)));
    rows.push(value_row("cycle-biclique k=2 r=3: DF-MP vs 3/(r+1)", r.df_mp.value.clone(), Relation::Le, rat(3, 4)));

    let graph = Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (1, 4), (0, 5)])?;
    let partition =
        GroupPartition::for_graph(&graph, PartitionKind::Edge, vec![vec![0, 1, 2, 6], vec![3, 4], vec![5, 7]])?;
    let trials = 100_000;
    let stats = naive_random_stats(&graph, UtilityModel::Edge, &partition)?;
    let sample = naive_random_sample(&graph, UtilityModel::Edge, &partition, seed, trials)?;
    for (i, ((s, emp), grp)) in stats.iter().zip(&sample).zip(partition.groups()).enumerate() {
        let size = grp.len();
        rows.push(value_row(
            format!("naive random cut, group {i} ({size} edges): mean"),
            s.mean.clone(),
            Relation::Eq,
            rat(1, 2),
        ));
        rows.push(value_row(
            format!("naive random cut, group {i} ({size} edges): variance"),
            s.variance.clone(),
            Relation::Eq,
            rat(1, 4 * size as i64),
        ));
        let band = 3.0 * (1.0 / (4.0 * size as f64 * trials as f64)).sqrt();
        let dev = (emp.mean - 0.5).abs();
        rows.push(ReproRow {
            key: format!("naive random cut, group {i} ({size} edges): |sample mean - 1/2| over {trials} trials"),
            measured: format!("{dev:.6}"),
            relation: "<=".into(),
            reference: format!("{band:.6}"),
            verdict: if dev <= band { Verdict::Pass } else { Verdict::Fail }.name().into(),
        });
    }
    Ok(rows)
}

fn reproduce(g: &GlobalOpts) -> Result<Outcome, CliError> {
    let rows = reproduce_rows(&enumerator(g), g.seed)?;
    let failed = rows.iter().filter(|r| r.verdict == "fail").count();
    let mut report = Report::new("reproduce", g.seed);
    report.summary = Some(crate::report::SummaryRecord { passed: rows.len() - failed, failed, skipped: 0 });
    report.rows = rows;
    let text = table::reproduce(&report);
    Ok(Outcome {
        report: Some(report),
        text,
        file: None,
        code: if failed > 0 { exit::VERIFICATION_FAILED } else { exit::OK },
    })
}

/// Family instances along one varied parameter, in increasing order.
type FamilyRun = (&'static str, Vec<(usize, NamedInstance)>);

fn trend_instances(family: &str, k: usize, max: Option<usize>) -> Result<FamilyRun, CliError> {
    let bad = |e: faircut::Error| CliError::new(exit::BAD_GENERATOR, e.to_string());
    let collect = |range: std::ops::RangeInclusive<usize>, make: &dyn Fn(usize) -> faircut::Result<NamedInstance>| {
        range.map(|x| make(x).map(|inst| (x, inst)).map_err(bad)).collect::<Result<Vec<_>, _>>()
    };
    Ok(match family {
        "clique-tail" => ("n", collect(2 * k..=max.unwrap_or(2 * k + 8), &|n| families::clique_with_tail(k, n))?),
        "cycle-biclique" => ("r", collect(2..=max.unwrap_or(5), &|r| families::cycle_plus_biclique(k, r))?),
        "odd-cycle-edges" => ("n", collect(1..=max.unwrap_or(5), &families::odd_cycle_edges)?),
        "odd-cycle-nodes" => ("n", collect(1..=max.unwrap_or(5), &families::odd_cycle_nodes)?),
        other => return Err(CliError::new(exit::BAD_GENERATOR, format!("no trend for family `{other}`"))),
    })
}

fn trend(g: &GlobalOpts, family: &str, k: usize, max: Option<usize>) -> Result<Outcome, CliError> {
    let (param, list) = trend_instances(family, k, max)?;
    let e = enumerator(g);
    let mut header = vec![param, "vertices", "MP", "DF-MP", "SF-MP", "MP-DF-MP", "DF-MP-SF-MP"];
    if g.approx {
        header.extend(["MP~", "DF-MP~", "SF-MP~"]);
    }
    let mut text = header.join("\t");
    text.push('\n');
    for (x, inst) in list {
        let r = e.all_objectives(&inst.graph, inst.model, &inst.partition)?;
        let (mp, df, sf) = (&r.mp, &r.df_mp.value, &r.sf_mp.objective);
        let mut cells = vec![
            x.to_string(),
            inst.graph.vertex_count().to_string(),
            rational::format(mp),
            rational::format(df),
            rational::format(sf),
            rational::format(&(mp - df)),
            rational::format(&(df - sf)),
        ];
        if g.approx {
            cells.extend([mp, df, sf].map(|v| format!("{:.6}", to_f64(v))));
        }
        text.push_str(&cells.join("\t"));
        text.push('\n');
    }
    Ok(Outcome {
        report: None,
        text: if g.output.is_some() { String::new() } else { text.clone() },
        file: Some(text),
        code: exit::OK,
    })
}
