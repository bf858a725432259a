use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use circle_envelope::document::EnvelopeDocument;
use circle_envelope::envelope::{build_prepared, prepare_circles_indexed};
use circle_envelope::geometry::{Point2, UnitCircle};
use circle_envelope::{csv, oracle, query, svg, DirectionalFrame, Envelope};

/// Directional extremal boundary of a union of equal-radius circles.
#[derive(Parser)]
#[command(name = "circle-envelope", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the envelope of circle centers read from CSV.
    Build(BuildArgs),
    /// Evaluate the boundary at one position.
    Eval(EvalArgs),
    /// Sample the boundary over a range and write CSV rows.
    Sample(SampleArgs),
    /// Render circles and the boundary to SVG.
    Plot(PlotArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// CSV file of circle centers, one "x,y" per line.
    #[arg(long)]
    input: PathBuf,
    /// Envelope document to write.
    #[arg(long)]
    output: PathBuf,
    /// Circle radius in world units.
    #[arg(long, default_value_t = 1.0)]
    radius: f64,
    /// Extremal direction as "dx,dy".
    #[arg(long, default_value = "0,1", value_parser = parse_direction)]
    direction: (f64, f64),
}

#[derive(Args)]
struct EvalArgs {
    /// Envelope document produced by `build`.
    #[arg(long)]
    envelope: PathBuf,
    /// Position along the axis perpendicular to the extremal direction.
    #[arg(long, allow_hyphen_values = true)]
    at: f64,
    /// Also print the brute-force value and the absolute difference.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long)]
    envelope: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    from: f64,
    #[arg(long, allow_hyphen_values = true)]
    to: f64,
    #[arg(long)]
    step: f64,
    /// CSV file to write ("x,y" rows, empty y where undefined).
    #[arg(long)]
    output: PathBuf,
}

#[derive(Args)]
struct PlotArgs {
    #[arg(long)]
    envelope: PathBuf,
    /// The original CSV input; all its circles are drawn, contributing or not.
    #[arg(long)]
    input: PathBuf,
    /// SVG file to write.
    #[arg(long)]
    output: PathBuf,
    #[arg(long, default_value_t = 800)]
    width: u32,
    #[arg(long, default_value_t = 600)]
    height: u32,
}

fn parse_direction(s: &str) -> Result<(f64, f64), String> {
    let (dx, dy) = s
        .split_once(',')
        .ok_or_else(|| "expected 'dx,dy'".to_string())?;
    let dx: f64 = dx.trim().parse().map_err(|_| "dx is not a number".to_string())?;
    let dy: f64 = dy.trim().parse().map_err(|_| "dy is not a number".to_string())?;
    Ok((dx, dy))
}

/// A command failure carrying its exit code: 2 malformed/unreadable input,
/// 3 invalid frame, 4 invalid query, 5 unwritable output.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure { code: 2, message: message.to_string() }
    }
    fn frame(message: impl ToString) -> Self {
        Failure { code: 3, message: message.to_string() }
    }
    fn query(message: impl ToString) -> Self {
        Failure { code: 4, message: message.to_string() }
    }
    fn output(message: impl ToString) -> Self {
        Failure { code: 5, message: message.to_string() }
    }
}

fn read_input(path: &PathBuf) -> Result<Vec<Point2>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    csv::parse_centers(&text)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_document(path: &PathBuf) -> Result<(DirectionalFrame, Envelope, EnvelopeDocument), Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    let doc = EnvelopeDocument::from_json(&text)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let (frame, envelope) = doc
        .reconstruct()
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    Ok((frame, envelope, doc))
}

fn write_output(path: &PathBuf, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents)
        .map_err(|e| Failure::output(format!("cannot write {}: {e}", path.display())))
}

fn cmd_build(args: &BuildArgs) -> Result<(), Failure> {
    let frame = DirectionalFrame::new(args.radius, Point2::new(args.direction.0, args.direction.1))
        .map_err(Failure::frame)?;
    let world = read_input(&args.input)?;
    let canonical = frame.all_to_canonical(&world).map_err(Failure::input)?;
    let kept = prepare_circles_indexed(&canonical).map_err(Failure::input)?;
    let table: Vec<UnitCircle> = kept
        .iter()
        .map(|&i| UnitCircle { center: canonical[i] })
        .collect();
    let world_table: Vec<Point2> = kept.iter().map(|&i| world[i]).collect();
    let (envelope, _) = build_prepared(table);
    let contributing: usize = envelope.segments.iter().map(|s| s.circles.len()).sum();
    let doc = EnvelopeDocument::new(&frame, &world_table, &envelope);
    write_output(&args.output, &doc.to_json())?;
    println!("segments: {}", envelope.segments.len());
    println!("contributing circles: {contributing}");
    Ok(())
}

fn cmd_eval(args: &EvalArgs) -> Result<(), Failure> {
    if !args.at.is_finite() {
        return Err(Failure::query("--at must be finite"));
    }
    let (frame, envelope, _) = read_document(&args.envelope)?;
    let r = frame.radius();
    let hit = query::evaluate(&envelope, args.at / r).map_err(Failure::query)?;
    match hit {
        Some(hit) => {
            let value = hit.y * r;
            println!("{value:?}");
            if args.oracle {
                let brute = oracle::brute_force_evaluate(&envelope.circles, args.at / r)
                    .expect("oracle defined wherever the envelope is")
                    * r;
                println!("oracle: {brute:?}");
                println!("difference: {:?}", (value - brute).abs());
            }
        }
        None => {
            println!("none");
            if args.oracle {
                let brute = oracle::brute_force_evaluate(&envelope.circles, args.at / r);
                println!("oracle: {}", brute.map_or("none".to_string(), |v| format!("{:?}", v * r)));
            }
        }
    }
    Ok(())
}

fn cmd_sample(args: &SampleArgs) -> Result<(), Failure> {
    let (frame, envelope, _) = read_document(&args.envelope)?;
    let r = frame.radius();
    let rows = query::sample(&envelope, args.from / r, args.to / r, args.step / r)
        .map_err(Failure::query)?;
    let mut out = String::new();
    for (x, hit) in rows {
        let world_x = x * r;
        match hit {
            Some(hit) => out.push_str(&format!("{world_x:?},{:?}\n", hit.y * r)),
            None => out.push_str(&format!("{world_x:?},\n")),
        }
    }
    write_output(&args.output, &out)
}

fn cmd_plot(args: &PlotArgs) -> Result<(), Failure> {
    let (frame, envelope, _) = read_document(&args.envelope)?;
    let world = read_input(&args.input)?;
    let canonical = frame.all_to_canonical(&world).map_err(Failure::input)?;
    let circles: Vec<UnitCircle> = canonical
        .into_iter()
        .map(|center| UnitCircle { center })
        .collect();
    if args.width < 40 || args.height < 40 {
        return Err(Failure::query("plot dimensions must be at least 40x40"));
    }
    let svg = svg::render_plot(&circles, &envelope, args.width, args.height);
    write_output(&args.output, &svg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Build(args) => cmd_build(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Sample(args) => cmd_sample(args),
        Command::Plot(args) => cmd_plot(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
