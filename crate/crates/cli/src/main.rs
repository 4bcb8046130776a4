mod format;
mod report;
mod svg;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use linarr::cycles::{
    cycle_at_infinity, decompose, global_cyclicity, gonality_census, in_tn, local_gonality,
    observed_census, Cycle,
};
use linarr::isomorphism::{
    derive_orders_bijection, iso_search, nook_iso_check, slope_order_relabel,
};
use linarr::kernel::{Rational, Slope};
use linarr::linefold::{fold_census, fold_oracle_census, LineFold};
use linarr::regions::{enumerate_regions, oracle_enumerate};
use linarr::transforms::{
    build_iso_class_graph, ect_applicable, ect_apply, export_class_graph, make_applicable,
    realize_cycle,
};
use linarr::{Arrangement, Error};

use format::ArrangementFile;
use report::{line_list, rows_label, vertex_label, Report};

const EXIT_PARSE: u8 = 2;
const EXIT_GENERIC: u8 = 3;
const EXIT_OP: u8 = 4;

/// Exact combinatorics of line arrangements: regions, cycles at infinity,
/// gonality censuses, collineation isomorphism, ECT moves and line-folds.
#[derive(Parser)]
#[command(name = "linarr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the two genericity conditions of an arrangement file.
    Validate { file: PathBuf },
    /// Enumerate regions with sign vectors, boundedness and gonalities.
    Regions {
        file: PathBuf,
        /// Re-run the census through the feasibility oracle and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Cycle at infinity and its consecutive standard decomposition.
    Cycle { file: PathBuf },
    /// Global cyclicity, gonality censuses, and local gonality of a subset.
    Gonality {
        file: PathBuf,
        /// 1-based line indices of a subset to analyze.
        #[arg(long, num_args = 3.., value_name = "IDX")]
        subset: Option<Vec<usize>>,
    },
    /// Decide whether two arrangements are isomorphic.
    Iso {
        file_a: PathBuf,
        file_b: PathBuf,
        /// orders: search a witnessing bijection; nook: slope-order indexing
        /// with the identity bijection, decided through nook points.
        #[arg(long, default_value = "orders")]
        mode: IsoMode,
    },
    /// Apply an elementary collineation transformation to a triangle.
    Ect {
        file: PathBuf,
        /// 1-based indices of the triangle lines; `k` is the moving line.
        i: usize,
        j: usize,
        k: usize,
        /// Translate blocking lines away until the move is admissible.
        #[arg(long)]
        auto_clear: bool,
        /// Write the transformed arrangement here (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Realize a 2-standard consecutive cycle with a prescribed slope set.
    Realize {
        /// Whitespace-separated slopes, rationals or `inf`, e.g. "0 1 -1".
        slopes: String,
        /// The cycle, e.g. "1 3 2 4".
        #[arg(long)]
        cycle: String,
    },
    /// Region census of a line-fold (parallels and concurrencies allowed).
    Fold { file: PathBuf },
    /// Render the arrangement as an SVG figure.
    Svg {
        file: PathBuf,
        out: PathBuf,
        /// Highlight the nook point of this 4-subset (1-based indices).
        #[arg(long, num_args = 4, value_name = "IDX")]
        quad: Option<Vec<usize>>,
    },
    /// Export the finite graph of isomorphism classes as CLASS/EDGE records.
    Classes {
        n: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum IsoMode {
    Orders,
    Nook,
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_file(path: &PathBuf) -> Result<ArrangementFile, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| fail(EXIT_PARSE, format!("{}: {}", path.display(), e)))?;
    format::parse(&text).map_err(|e| fail(EXIT_PARSE, e.to_string()))
}

fn build(file: &ArrangementFile) -> Result<Arrangement, Failure> {
    Arrangement::build_with_flips(file.lines.clone(), file.flips.clone()).map_err(|e| match e {
        Error::ParallelLines(i, j) => fail(
            EXIT_GENERIC,
            format!("not generic: parallel ({},{})", i + 1, j + 1),
        ),
        Error::ConcurrentLines(i, j, k) => fail(
            EXIT_GENERIC,
            format!("not generic: concurrent ({},{},{})", i + 1, j + 1, k + 1),
        ),
        other => fail(EXIT_OP, other.to_string()),
    })
}

fn op_err(e: Error) -> Failure {
    fail(EXIT_OP, e.to_string())
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Regions { file, oracle } => cmd_regions(&file, oracle),
        Command::Cycle { file } => cmd_cycle(&file),
        Command::Gonality { file, subset } => cmd_gonality(&file, subset),
        Command::Iso {
            file_a,
            file_b,
            mode,
        } => cmd_iso(&file_a, &file_b, mode),
        Command::Ect {
            file,
            i,
            j,
            k,
            auto_clear,
            out,
        } => cmd_ect(&file, i, j, k, auto_clear, out),
        Command::Realize { slopes, cycle } => cmd_realize(&slopes, &cycle),
        Command::Fold { file } => cmd_fold(&file),
        Command::Svg { file, out, quad } => cmd_svg(&file, &out, quad),
        Command::Classes { n, samples, seed } => {
            if !(3..=5).contains(&n) {
                return Err(fail(EXIT_OP, "class graphs are built for 3 <= n <= 5"));
            }
            let graph = build_iso_class_graph(n, samples, seed);
            print!("{}", export_class_graph(&graph));
            Ok(())
        }
    }
}

fn cmd_validate(path: &PathBuf) -> Result<(), Failure> {
    let file = read_file(path)?;
    let mut rep = Report::new();
    rep.push("n", file.lines.len());
    match Arrangement::build_with_flips(file.lines.clone(), file.flips.clone()) {
        Ok(_) => {
            rep.push("generic", true);
            print!("{}", rep.render());
            Ok(())
        }
        Err(e) => {
            rep.push("generic", false);
            match e {
                Error::ParallelLines(i, j) => {
                    rep.push("parallel", format!("({},{})", i + 1, j + 1))
                }
                Error::ConcurrentLines(i, j, k) => {
                    rep.push("concurrent", format!("({},{},{})", i + 1, j + 1, k + 1))
                }
                other => rep.push("error", other.to_string()),
            }
            print!("{}", rep.render());
            Err(fail(EXIT_GENERIC, "arrangement is not generic"))
        }
    }
}

fn cmd_regions(path: &PathBuf, oracle: bool) -> Result<(), Failure> {
    let file = read_file(path)?;
    let arr = build(&file)?;
    let regions = enumerate_regions(&arr);
    let bounded = regions.iter().filter(|r| r.bounded).count();
    let mut rep = Report::new();
    rep.push("n", arr.n());
    rep.push("total", regions.len());
    rep.push("bounded", bounded);
    rep.push("unbounded", regions.len() - bounded);
    for (t, r) in regions.iter().enumerate() {
        rep.push(format!("region.{}.sign", t), &r.sign);
        rep.push(format!("region.{}.bounded", t), r.bounded);
        rep.push(format!("region.{}.gonality", t), r.gonality);
        rep.push(format!("region.{}.lines", t), line_list(&r.boundary_lines));
    }
    if oracle {
        let cells = oracle_enumerate(arr.lines());
        let agrees = cells.len() == regions.len()
            && regions
                .iter()
                .zip(&cells)
                .all(|(r, (sv, v))| &r.sign == sv && r.bounded == v.bounded);
        rep.push("oracle_agrees", agrees);
    }
    print!("{}", rep.render());
    Ok(())
}

fn cmd_cycle(path: &PathBuf) -> Result<(), Failure> {
    let file = read_file(path)?;
    let arr = build(&file)?;
    let cy = cycle_at_infinity(&arr);
    let d = decompose(&cy.as_cycle);
    let mut rep = Report::new();
    rep.push("cycle", cy.as_cycle.format_one_based());
    rep.push("rows", rows_label(&d.rows));
    rep.push("i", d.standardness);
    rep.push("consecutive", d.consecutive);
    rep.push("in_tn", in_tn(&cy.as_cycle));
    rep.push(
        "slope_property",
        linarr::cycles::slope_property_check(&arr, &d),
    );
    print!("{}", rep.render());
    Ok(())
}

fn cmd_gonality(path: &PathBuf, subset: Option<Vec<usize>>) -> Result<(), Failure> {
    let file = read_file(path)?;
    let arr = build(&file)?;
    let regions = enumerate_regions(&arr);
    let (ob, ou) = observed_census(&regions);
    let mut rep = Report::new();
    match global_cyclicity(&arr) {
        Some(ngon) => {
            rep.push("ngon", "present");
            rep.push("ngon.acw", line_list(&ngon.sides_acw));
            let census = gonality_census(&arr).map_err(op_err)?;
            rep.push("k_triangles", census.k_triangles);
            rep.push("r_extreme", census.r_extreme);
            rep.push("k_nonouter_on_t", census.k_nonouter_on_t);
            for (g, c) in &census.bounded {
                rep.push(format!("bounded.{}", g), c);
            }
            for (g, c) in &census.unbounded {
                rep.push(format!("unbounded.{}", g), c);
            }
            let agrees = census.bounded == ob && census.unbounded == ou;
            rep.push("census_agrees", agrees);
        }
        None => {
            rep.push("ngon", "absent");
            for (g, c) in &ob {
                rep.push(format!("observed.bounded.{}", g), c);
            }
            for (g, c) in &ou {
                rep.push(format!("observed.unbounded.{}", g), c);
            }
        }
    }
    if let Some(subset) = subset {
        let zero: Vec<usize> = subset
            .iter()
            .map(|&t| {
                t.checked_sub(1)
                    .ok_or_else(|| fail(EXIT_OP, "subset indices are 1-based"))
            })
            .collect::<Result<_, _>>()?;
        let local = local_gonality(&arr, &zero).map_err(op_err)?;
        rep.push("subset", line_list(&zero));
        rep.push("subset.has_gonality", local.has_gonality);
        if let Some(b) = local.bounded {
            rep.push("subset.bounded", b);
        }
        if let Some(chart) = &local.witness_chart {
            rep.push("subset.chart", line_list(chart));
        }
        if let Some(cycle) = &local.chart_cycle {
            rep.push("subset.chart_cycle", cycle.format_one_based());
        }
        rep.push("subset.in_tk", local.in_tk);
        rep.push("subset.one_sided", local.one_sided);
        if let Some(chart) = &local.one_sided_chart {
            rep.push("subset.one_sided_chart", line_list(chart));
        }
    }
    print!("{}", rep.render());
    Ok(())
}

fn cmd_iso(path_a: &PathBuf, path_b: &PathBuf, mode: IsoMode) -> Result<(), Failure> {
    let a = build(&read_file(path_a)?)?;
    let b = build(&read_file(path_b)?)?;
    if a.n() != b.n() {
        return Err(op_err(Error::SizeMismatch));
    }
    let mut rep = Report::new();
    match mode {
        IsoMode::Orders => match iso_search(&a, &b) {
            Some(f) => {
                rep.push("isomorphic", true);
                rep.push("witness.perm", line_list(&f.perm));
                let flips: String = f.flips.iter().map(|&x| if x { '-' } else { '+' }).collect();
                rep.push("witness.flips", flips);
            }
            None => rep.push("isomorphic", false),
        },
        IsoMode::Nook => {
            let preserved = nook_iso_check(&a, &b).map_err(op_err)?;
            rep.push("nook_preserved", preserved);
            // The nook criterion coincides with the order criterion under
            // the identity bijection in slope-order indexing.
            let (ra, rb) = (slope_order_relabel(&a), slope_order_relabel(&b));
            let ident: Vec<usize> = (0..a.n()).collect();
            let same = derive_orders_bijection(&ra, &rb, &ident).is_some();
            debug_assert_eq!(preserved, same);
            rep.push("isomorphic", preserved);
        }
    }
    print!("{}", rep.render());
    Ok(())
}

fn cmd_ect(
    path: &PathBuf,
    i: usize,
    j: usize,
    k: usize,
    auto_clear: bool,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    let file = read_file(path)?;
    let arr = build(&file)?;
    let n = arr.n();
    let (i, j, k) = (i.wrapping_sub(1), j.wrapping_sub(1), k.wrapping_sub(1));
    if i >= n || j >= n || k >= n {
        return Err(fail(EXIT_OP, "line indices are 1-based"));
    }
    let source = if auto_clear {
        make_applicable(&arr, i, j, k).map_err(op_err)?
    } else {
        arr
    };
    let window = ect_applicable(&source, i, j, k)
        .map_err(op_err)?
        .ok_or_else(|| op_err(Error::StripViolation))?;
    let before = |line: usize, other: usize| source.rank_on_line(line, other);
    let swaps = [
        (window.i, window.j, window.k),
        (window.j, window.i, window.k),
        (window.k, window.i, window.j),
    ];
    let (image, mv) =
        ect_apply(&source, window.i, window.j, window.k, window.default_c2()).map_err(op_err)?;
    let mut rep = Report::new();
    rep.push("applied", true);
    rep.push("i", window.i + 1);
    rep.push("j", window.j + 1);
    rep.push("k", window.k + 1);
    rep.push("vertex", vertex_label(window.vertex));
    rep.push("c1", &mv.c1);
    rep.push("c2", &mv.c2);
    for (line, x, y) in swaps {
        rep.push(
            format!("swap.line{}", line + 1),
            format!(
                "ranks of {} and {}: {}<->{}",
                vertex_label(linarr::VertexId::new(line, x)),
                vertex_label(linarr::VertexId::new(line, y)),
                before(line, x),
                before(line, y),
            ),
        );
    }
    print!("{}", rep.render());
    let new_file = format::from_arrangement(file.names.clone(), &image);
    let text = format::emit(&new_file);
    match out {
        Some(path) => fs::write(&path, text)
            .map_err(|e| fail(EXIT_OP, format!("{}: {}", path.display(), e)))?,
        None => {
            println!();
            print!("{}", text);
        }
    }
    Ok(())
}

fn cmd_realize(slope_arg: &str, cycle_arg: &str) -> Result<(), Failure> {
    let slope_args: Vec<&str> = slope_arg.split_whitespace().collect();
    let mut slopes = Vec::with_capacity(slope_args.len());
    for s in &slope_args {
        if *s == "inf" {
            slopes.push(Slope::Infinity);
        } else {
            let r = Rational::from_str(s)
                .map_err(|_| fail(EXIT_PARSE, format!("bad slope `{}`", s)))?;
            slopes.push(Slope::Finite(r));
        }
    }
    let letters: Vec<usize> = cycle_arg
        .split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .ok()
                .and_then(|x| x.checked_sub(1))
                .ok_or_else(|| fail(EXIT_PARSE, format!("bad cycle letter `{}`", t)))
        })
        .collect::<Result<_, _>>()?;
    if letters.len() != slopes.len() {
        return Err(fail(EXIT_OP, "cycle length must match the slope count"));
    }
    let sigma = Cycle::from_word(&letters);
    let real = realize_cycle(&slopes, &sigma).map_err(op_err)?;
    let file = format::from_arrangement(
        format::default_names(real.arrangement.n()),
        &real.arrangement,
    );
    print!("{}", format::emit(&file));
    Ok(())
}

fn cmd_fold(path: &PathBuf) -> Result<(), Failure> {
    let file = read_file(path)?;
    let factors: Vec<(linarr::LineEq, u32)> = file
        .lines
        .iter()
        .cloned()
        .zip(file.mults.iter().copied())
        .collect();
    let fold = LineFold::from_factored_polynomial(factors);
    let census = fold_census(&fold);
    let oracle = fold_oracle_census(&fold);
    let mut rep = Report::new();
    rep.push("d", fold.degree());
    let classes: Vec<String> = fold
        .parallel_classes()
        .iter()
        .map(|c| c.len().to_string())
        .collect();
    rep.push("parallel_classes", classes.join(" "));
    for (t, (p, k)) in fold
        .concurrency_points()
        .iter()
        .filter(|(_, k)| *k >= 3)
        .enumerate()
    {
        rep.push(
            format!("concurrency.{}", t),
            format!("({},{}) order {}", p.x, p.y, k),
        );
    }
    rep.push("formula.total", census.total);
    match (census.bounded, census.unbounded) {
        (Some(b), Some(u)) => {
            rep.push("formula.bounded", b);
            rep.push("formula.unbounded", u);
        }
        _ => rep.push("formula.split", "unavailable with parallels"),
    }
    rep.push("oracle.total", oracle.total);
    rep.push("oracle.bounded", oracle.bounded);
    rep.push("oracle.unbounded", oracle.unbounded);
    rep.push("agrees", census.total == oracle.total);
    print!("{}", rep.render());
    Ok(())
}

fn cmd_svg(path: &PathBuf, out: &PathBuf, quad: Option<Vec<usize>>) -> Result<(), Failure> {
    let file = read_file(path)?;
    let arr = build(&file)?;
    let quad = match quad {
        None => None,
        Some(idx) => {
            let mut q = [0usize; 4];
            for (slot, v) in idx.iter().enumerate() {
                q[slot] = v
                    .checked_sub(1)
                    .ok_or_else(|| fail(EXIT_OP, "quad indices are 1-based"))?;
                if q[slot] >= arr.n() {
                    return Err(fail(EXIT_OP, "quad index out of range"));
                }
            }
            Some(q)
        }
    };
    let doc = svg::render(&arr, quad);
    fs::write(out, doc).map_err(|e| fail(EXIT_OP, format!("{}: {}", out.display(), e)))?;
    Ok(())
}
