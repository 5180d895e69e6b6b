use clap::Parser;

use boxpierce::cli::{run, Cli, Io};

fn main() {
    let cli = Cli::parse();
    let (mut stdin, mut stdout, mut stderr) = (std::io::stdin().lock(), std::io::stdout().lock(), std::io::stderr().lock());
    let code = run(cli, &mut Io { stdin: &mut stdin, stdout: &mut stdout, stderr: &mut stderr });
    std::process::exit(code);
}
