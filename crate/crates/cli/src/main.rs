mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(threads) = cli.global.parallel {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("kblocks: error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(status) => ExitCode::from(status),
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            eprintln!("kblocks: error: {msg}");
            ExitCode::from(2)
        }
    }
}
