use clap::Parser;
use hsrep::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let out = run(&cli);
    print!("{}", out.stdout);
    std::process::exit(out.code);
}
