//! Describing a code in a spec file and producing the reports the command
//! line tool prints.

use qcode::report::{build_report, distance_report, gate_run};
use qcode::specfile::SpecFile;

const SPEC: &str = "
# distance-3 surface code and its transversal Hadamard
[code]
kind = surface
d = 3

[gate]
type = hadamard
";

fn main() -> qcode::Result<()> {
    let spec = SpecFile::parse(SPEC)?;
    let built = spec.build()?;
    print!("{}", build_report(&spec, &built));
    println!();
    print!("{}", distance_report(&spec, &built, 4));
    println!();
    print!("{}", gate_run(&spec, &built)?.text);

    let bad = SpecFile::parse("[code]\nkind = bb\nl = 6\nshape = round\n");
    println!("\nmalformed spec: {}", bad.unwrap_err());
    Ok(())
}
