//! Writing check matrices and the Tanner graph of a pruned code.

use qcode::classical::{from_alist, to_alist};
use qcode::report::export;
use qcode::specfile::SpecFile;

const SPEC: &str = "
[code]
kind = bb
l = 6
m = 6
A = 1 + x + x^2
B = 1 + y + y^2

[prune]
method = reduced
";

fn main() -> qcode::Result<()> {
    let spec = SpecFile::parse(SPEC)?;
    let built = spec.build()?;
    let dir = std::env::temp_dir().join("qcode-export-example");
    for path in export(&spec, &built, &dir)? {
        let size = std::fs::metadata(&path).map(|m| m.len()).unwrap_or(0);
        println!("{:>8} bytes  {}", size, path.display());
    }
    let hx = built.lattice().unwrap().code.hx();
    assert_eq!(&from_alist(&to_alist(hx))?, hx);
    Ok(())
}
