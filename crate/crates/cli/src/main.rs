use clap::Parser;
use gitfan_cli::run::{dispatch, Cli};

fn main() {
    std::process::exit(dispatch(Cli::parse()));
}
