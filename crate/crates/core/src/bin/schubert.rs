use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use schubert_core::app::parse::{parse_composition, parse_partition, parse_permutation, parse_polynomial};
use schubert_core::app::render::{self, Format};
use schubert_core::app::sweep::{self, Suite};
use schubert_core::bracket::{rewrite_search, skew_element};
use schubert_core::key::{key_polynomial, skew_key, skew_schubert};
use schubert_core::nilcox::theorem2_constants;
use schubert_core::perm::Permutation;
use schubert_core::schubert::{constants_by_product, schubert_poly, SchubertExpansion};
use schubert_core::schur::{lr_coefficients, skew_schur_jt, skew_schur_ssyt, Partition};
use schubert_core::skew::{constants_by_skew, skew_apply};
use schubert_core::Error;

#[derive(Parser)]
#[command(
    name = "schubert",
    version,
    about = "Exact Schubert calculus: divided differences, skew operators, structure constants"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the Schubert polynomial of a permutation
    Schubert {
        /// Permutation: one-line digits, a comma list, or "w:<reduced word>"
        w: String,
    },
    /// Apply the skew divided difference operator d_{w/v} to a polynomial
    SkewApply {
        w: String,
        v: String,
        /// Polynomial, e.g. "x1^3*x2^2" (explicit '*' and '^')
        poly: String,
    },
    /// Print the skew Schubert polynomial S_{w/v} in n variables
    SkewSchubert {
        w: String,
        v: String,
        n: usize,
    },
    /// Structure constants c^w_{uv} over S_n
    Constants {
        u: String,
        v: String,
        n: usize,
        #[arg(long, value_enum, default_value_t = Route::Product)]
        route: Route,
    },
    /// The bracket-algebra form of d_{w/v}, optionally rewritten towards
    /// nonnegative coefficients
    Bracket {
        w: String,
        v: String,
        /// Rewrite budget (number of explored rewrites)
        #[arg(long)]
        search: Option<usize>,
        /// Ambient rank; defaults to the rank of w
        #[arg(long)]
        n: Option<usize>,
    },
    /// Key polynomial of a composition, or the skew key polynomial below v
    Key {
        /// Composition, e.g. "c:0,2,1" or "0,2,1"
        alpha: String,
        #[arg(long)]
        skew: Option<String>,
    },
    /// Skew Schur polynomial by the chosen route
    Schur {
        /// Partition, e.g. "p:2,1" or "2,1"
        lambda: String,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long, value_enum, default_value_t = SchurRoute::Jt)]
        route: SchurRoute,
        /// Number of variables; defaults to the number of parts of lambda
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run a verification sweep and report pass/fail per instance
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        n: usize,
        /// Worker count (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// Cache directory (default: the SCHUBERT_CACHE_DIR environment
        /// variable, if set)
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Rewrite budget for the conjecture2 suite
        #[arg(long, default_value_t = 200_000)]
        budget: usize,
        /// Trial count for the identities suite
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Product,
    Skew,
    Paths,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchurRoute {
    Jt,
    Ssyt,
    Lr,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let fmt = cli.format;
    match cli.cmd {
        Cmd::Schubert { w } => {
            let w = parse_permutation(&w)?;
            print!("{}", render::polynomial(&schubert_poly(&w), fmt));
        }
        Cmd::SkewApply { w, v, poly } => {
            let w = parse_permutation(&w)?;
            let v = parse_permutation(&v)?;
            let f = parse_polynomial(&poly)?;
            print!("{}", render::polynomial(&skew_apply(&w, &v, &f)?, fmt));
        }
        Cmd::SkewSchubert { w, v, n } => {
            let w = parse_permutation(&w)?;
            let v = parse_permutation(&v)?;
            print!("{}", render::polynomial(&skew_schubert(&w, &v, n)?, fmt));
        }
        Cmd::Constants { u, v, n, route } => {
            let u = parse_permutation(&u)?;
            let v = parse_permutation(&v)?;
            return constants_cmd(&u, &v, n, route, fmt);
        }
        Cmd::Bracket { w, v, search, n } => {
            let w = parse_permutation(&w)?;
            let v = parse_permutation(&v)?;
            let n = n.unwrap_or_else(|| w.rank().max(v.rank()));
            let e = skew_element(&w, &v, n)?;
            match search {
                None => println!("{e}"),
                Some(budget) => {
                    if e.is_nonnegative() {
                        println!("{e}");
                    } else {
                        match rewrite_search(&e, budget) {
                            Some(pos) => println!("{pos}"),
                            None => {
                                println!("{e}");
                                eprintln!(
                                    "no nonnegative form found within {budget} rewrites"
                                );
                                return Ok(ExitCode::from(1));
                            }
                        }
                    }
                }
            }
        }
        Cmd::Key { alpha, skew } => {
            let alpha = parse_composition(&alpha)?;
            let p = match skew {
                None => key_polynomial(&alpha),
                Some(v) => skew_key(&alpha, &parse_permutation(&v)?)?,
            };
            print!("{}", render::polynomial(&p, fmt));
        }
        Cmd::Schur {
            lambda,
            mu,
            route,
            n,
        } => {
            let lambda = parse_partition(&lambda)?;
            let mu = match mu {
                None => Partition::empty(),
                Some(m) => parse_partition(&m)?,
            };
            let n = n.unwrap_or_else(|| lambda.len().max(1));
            match route {
                SchurRoute::Jt => {
                    print!("{}", render::polynomial(&skew_schur_jt(&lambda, &mu, n)?, fmt))
                }
                SchurRoute::Ssyt => print!(
                    "{}",
                    render::polynomial(&skew_schur_ssyt(&lambda, &mu, n)?, fmt)
                ),
                SchurRoute::Lr => {
                    let coeffs = lr_coefficients(&lambda, &mu)?;
                    print!("{}", render_lr(&coeffs, fmt));
                }
            }
        }
        Cmd::Verify {
            suite,
            n,
            jobs,
            cache,
            budget,
            trials,
        } => {
            let cache = cache.or_else(|| std::env::var_os("SCHUBERT_CACHE_DIR").map(PathBuf::from));
            let report = sweep::run_cached(
                suite,
                n,
                budget,
                trials,
                jobs.unwrap_or(0),
                cache.as_deref(),
            );
            print!("{}", report.render(fmt));
            eprintln!("elapsed: {} ms", report.elapsed_ms);
            if !report.ok() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn constants_cmd(
    u: &Permutation,
    v: &Permutation,
    n: usize,
    route: Route,
    fmt: Format,
) -> Result<ExitCode, Error> {
    let tables: Vec<(&str, SchubertExpansion)> = match route {
        Route::Product => vec![("product", product_table(u, v, n)?)],
        Route::Skew => vec![("skew", skew_table(u, v, n)?)],
        Route::Paths => vec![("paths", paths_table(u, v, n)?)],
        Route::All => vec![
            ("product", product_table(u, v, n)?),
            ("skew", skew_table(u, v, n)?),
            ("paths", paths_table(u, v, n)?),
        ],
    };
    for (name, table) in &tables {
        if tables.len() > 1 {
            println!("route {name}:");
        }
        print!("{}", render::expansion(table, fmt));
    }
    let agree = tables.windows(2).all(|t| t[0].1.coeffs == t[1].1.coeffs);
    if !agree {
        eprintln!("routes disagree");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn product_table(u: &Permutation, v: &Permutation, n: usize) -> Result<SchubertExpansion, Error> {
    check_rank(u, v, n)?;
    constants_by_product(u, v, n)
}

fn skew_table(u: &Permutation, v: &Permutation, n: usize) -> Result<SchubertExpansion, Error> {
    check_rank(u, v, n)?;
    let mut out = SchubertExpansion::zero(n);
    for w in Permutation::all(n) {
        if w.length() != u.length() + v.length() || !v.bruhat_leq(&w) {
            continue;
        }
        out.add_term(w.clone(), constants_by_skew(u, v, &w)?);
    }
    Ok(out)
}

fn paths_table(u: &Permutation, v: &Permutation, n: usize) -> Result<SchubertExpansion, Error> {
    check_rank(u, v, n)?;
    let mut out = SchubertExpansion::zero(n);
    for w in Permutation::all(n) {
        if w.length() != u.length() + v.length() || !u.bruhat_leq(&w) {
            continue;
        }
        out.add_term(w.clone(), theorem2_constants(&w, u, n)?.coeff(v));
    }
    Ok(out)
}

fn check_rank(u: &Permutation, v: &Permutation, n: usize) -> Result<(), Error> {
    if u.rank() > n || v.rank() > n {
        return Err(Error::Invalid(format!(
            "permutations {u} and {v} must lie in S_{n}"
        )));
    }
    Ok(())
}

fn render_lr(coeffs: &std::collections::BTreeMap<Partition, usize>, fmt: Format) -> String {
    match fmt {
        Format::Text => {
            if coeffs.is_empty() {
                return "0\n".into();
            }
            let mut out = String::new();
            for (nu, c) in coeffs {
                let parts: Vec<String> = nu.parts.iter().map(|p| p.to_string()).collect();
                out.push_str(&format!("({}): {c}\n", parts.join(",")));
            }
            out
        }
        Format::Json => {
            let items: Vec<_> = coeffs
                .iter()
                .map(|(nu, c)| serde_json::json!({"partition": nu.parts, "count": c}))
                .collect();
            let mut s = serde_json::to_string(&serde_json::json!({ "coefficients": items })).unwrap();
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from("partition,count\n");
            for (nu, c) in coeffs {
                let parts: Vec<String> = nu.parts.iter().map(|p| p.to_string()).collect();
                out.push_str(&format!("{},{c}\n", parts.join(" ")));
            }
            out
        }
    }
}
