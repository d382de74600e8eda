//! The report layer behind the `wedderburn` binary: build a report from a
//! validated configuration, render it as text, or round-trip it through JSON.
//!
//! ```bash
//! cargo run --release --example reports
//! ```

use wedderburn::report::{self, CodeReport, RunConfig};
use wedderburn::GroupKind;

fn main() -> wedderburn::Result<()> {
    let cfg = RunConfig::new(GroupKind::An, 4, 5, 1)?.with_lambda("3,1")?;
    let code = report::code(&cfg)?;
    print!("{}", code.to_text());

    let json = serde_json::to_string(&code).expect("serializable");
    let back: CodeReport = serde_json::from_str(&json).expect("parses");
    assert_eq!(back, code);
    println!("\nJSON round-trip ok ({} bytes)", json.len());

    // Invalid input is rejected before any computation.
    let err = RunConfig::new(GroupKind::Sn, 5, 5, 1).unwrap_err();
    println!("p = 5, n = 5 rejected: {err} (exit status {})", report::exit_code(&err));
    Ok(())
}
