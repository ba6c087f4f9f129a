use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use homalg::algebra::{realize_complex, KModule, KModuleMap};
use homalg::exactla::exchange::{parse_matrix, write_fp_matrix, write_int_matrix, ExchangeMatrix};
use homalg::exactla::{fp_kernel, integer_kernel, smith_normal_form};
use homalg::homology::graded_ce_homology;
use homalg::lie::{ce_complex, pbw_kernel_weight2};
use homalg::multilinear::{exterior_power, koszul_complex, lambda_to_tensor_map, symmetric_power, tensor};
use homalg::ring::to_ab_complex;
use homalg::Error;
use homalg_harness::descriptors::{parse_lie, parse_module, LieDescriptor};
use homalg_harness::report::Report;
use homalg_harness::scenarios::{list_scenarios, run_all, run_scenario, Overrides};

#[derive(Parser)]
#[command(name = "homalg", version, about = "Verification scenarios and ad hoc computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List scenario ids in their stable order.
    List,
    /// Run one scenario, or `all`.
    Run {
        id: String,
        #[arg(long)]
        weight: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record wall time per claim (reports are then no longer reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Ad hoc computations on a module over F_p[t_1..t_m]/(t_i^2).
    Module {
        /// Inline JSON, @file.json, diagonal:p=2,n=3 or free:p=3,m=2,rank=2
        descriptor: String,
        #[arg(long, value_enum)]
        op: ModuleOp,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Write the matrices involved in exchange format to this directory.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Ad hoc CE homology: heisenberg, free:g=2, free-mod2:g=2, class2:<module>, fprime:<module>.
    Lie {
        descriptor: String,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        /// Weight component; omitted means the whole (ungraded) complex.
        #[arg(long)]
        weight: Option<usize>,
        /// Truncation for free algebras and fprime.
        #[arg(long, default_value_t = 3)]
        truncation: usize,
    },
    /// Rank, Smith form or kernel of a matrix in exchange format.
    Matrix {
        file: PathBuf,
        #[arg(long, value_enum)]
        op: MatrixOp,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleOp {
    Dim,
    Exterior,
    Symmetric,
    TensorSquare,
    Koszul,
    WedgeKernel,
    PbwKernel,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixOp {
    Rank,
    Snf,
    Kernel,
}

fn usage(e: &Error) -> bool {
    matches!(e, Error::Parse(_) | Error::Unsupported(_))
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(if usage(&e) { 2 } else { 1 })
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Parse(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn dump(dir: Option<&Path>, name: &str, contents: &str) -> Result<(), Error> {
    if let Some(dir) = dir {
        std::fs::create_dir_all(dir).map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?;
        let path = dir.join(name);
        std::fs::write(&path, contents).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn module_op(desc: &str, op: ModuleOp, n: usize, dir: Option<&Path>) -> Result<(), Error> {
    let m = parse_module(desc)?;
    let dim = |p| KModule::from_presentation(p).map(|k| k.dim());
    match op {
        ModuleOp::Dim => {
            let k = KModule::from_presentation(&m)?;
            for i in 0..m.ring().variables() as usize {
                dump(dir, &format!("action_t{}.txt", i + 1), &write_fp_matrix(k.action(i)))?;
            }
            println!("dim {}", k.dim());
        }
        ModuleOp::Exterior => println!("dim Λ^{n} {}", dim(&exterior_power(&m, n).presentation)?),
        ModuleOp::Symmetric => println!("dim S^{n} {}", dim(&symmetric_power(&m, n).presentation)?),
        ModuleOp::TensorSquare => println!("dim M⊗M {}", dim(&tensor(&m, &m))?),
        ModuleOp::Koszul => {
            let kos = koszul_complex(&m, n)?;
            let c = realize_complex(kos.complex())?;
            for i in 1..c.len() {
                dump(dir, &format!("boundary_{i}.txt"), &write_fp_matrix(c.boundary(i)))?;
            }
            let dims: Vec<String> = (0..c.len()).map(|i| c.dim(i).to_string()).collect();
            println!("dims [{}]", dims.join(", "));
            let hs: Vec<String> = c.homology_all().iter().map(ToString::to_string).collect();
            println!("homology [{}]", hs.join(", "));
        }
        ModuleOp::WedgeKernel => {
            if n == 0 {
                return Err(Error::Unsupported("--n must be at least 1".into()));
            }
            let d = lambda_to_tensor_map(&m, n);
            let src = KModule::from_presentation(&d.source.presentation)?;
            let tgt = KModule::from_presentation(&d.target)?;
            let map = KModuleMap::from_images(&src, &tgt, &d.images)?;
            dump(dir, "map.txt", &write_fp_matrix(map.matrix()))?;
            println!("kernel of Λ^{n}M -> M⊗Λ^{}M: dim {}", n - 1, map.kernel().dim());
        }
        ModuleOp::PbwKernel => println!("kernel of Λ²M -> U_2: dim {}", pbw_kernel_weight2(&m)?.kernel_dim()),
    }
    Ok(())
}

fn lie_op(desc: &str, degree: usize, weight: Option<usize>, truncation: usize) -> Result<(), Error> {
    let h = match (parse_lie(desc, truncation)?, weight) {
        (LieDescriptor::Integral(l), Some(w)) => graded_ce_homology(&l, degree, w)?.to_string(),
        (LieDescriptor::Integral(l), None) => {
            to_ab_complex(ce_complex(&l, degree + 1, None)?.complex())?.homology(degree)?.to_string()
        }
        (LieDescriptor::Modular(l), Some(w)) => graded_ce_homology(&l, degree, w)?.to_string(),
        (LieDescriptor::Modular(l), None) => ce_complex(&l, degree + 1, None)?.homology()?[degree].to_string(),
    };
    println!("H_{degree} {h}");
    Ok(())
}

fn matrix_op(file: &Path, op: MatrixOp) -> Result<(), Error> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::Parse(format!("{}: {e}", file.display())))?;
    match (parse_matrix(&text)?, op) {
        (ExchangeMatrix::Integer(a), MatrixOp::Rank) => println!("{}", smith_normal_form(&a).rank()),
        (ExchangeMatrix::Modular(a), MatrixOp::Rank) => println!("{}", a.rank()),
        (ExchangeMatrix::Integer(a), MatrixOp::Snf) => {
            let d: Vec<String> = smith_normal_form(&a).diagonal.iter().map(ToString::to_string).collect();
            println!("[{}]", d.join(", "));
        }
        (ExchangeMatrix::Modular(a), MatrixOp::Snf) => println!("[{}]", vec!["1"; a.rank()].join(", ")),
        (ExchangeMatrix::Integer(a), MatrixOp::Kernel) => print!("{}", write_int_matrix(&integer_kernel(&a))),
        (ExchangeMatrix::Modular(a), MatrixOp::Kernel) => print!("{}", write_fp_matrix(&fp_kernel(&a))),
    }
    Ok(())
}

fn render(reports: &[Report], text: bool) -> String {
    if text {
        reports.iter().map(Report::to_text).collect::<Vec<_>>().join("\n")
    } else if let [one] = reports {
        one.to_json() + "\n"
    } else {
        serde_json::to_string_pretty(reports).expect("reports serialize") + "\n"
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::List => {
            for s in list_scenarios() {
                println!("{:<26} {}", s.id, s.summary);
            }
            Ok(())
        }
        Command::Run {
            id,
            weight,
            k,
            json: _,
            text,
            out,
            timings,
        } => {
            let o = Overrides { weight, k, timings };
            let reports = if id == "all" {
                run_all(o)
            } else {
                run_scenario(&id, o).map(|r| vec![r])
            };
            match reports {
                Ok(reports) => {
                    if let Err(e) = emit(&render(&reports, text), out.as_deref()) {
                        return fail(e);
                    }
                    let failed: Vec<&str> = reports.iter().filter(|r| r.failed()).map(|r| r.scenario.as_str()).collect();
                    if !failed.is_empty() {
                        eprintln!("failed claims in: {}", failed.join(", "));
                        return ExitCode::from(1);
                    }
                    Ok(())
                }
                Err(e) => Err(e),
            }
        }
        Command::Module {
            descriptor,
            op,
            n,
            dump,
        } => module_op(&descriptor, op, n, dump.as_deref()),
        Command::Lie {
            descriptor,
            degree,
            weight,
            truncation,
        } => lie_op(&descriptor, degree, weight, truncation),
        Command::Matrix { file, op } => matrix_op(&file, op),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(e),
    }
}
