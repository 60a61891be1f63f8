use clap::Parser;

use zar_cli::dispatch::{run, Cli};

fn main() {
    // Argument-shape errors (unknown subcommand, bad flags) exit with
    // clap's usage text and code 2; everything past that point reports
    // structured JSON.
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(out) => {
            println!("{}", out.json);
            std::process::exit(out.code);
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            std::process::exit(e.exit_code());
        }
    }
}
