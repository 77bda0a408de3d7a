//! Runs the bounded verification suites over Boolean and Ł3.

use enritch::diagonal::DiagonalQuantaloid;
use enritch::hull::{run_suite, Suite, Typing};
use enritch::quantale::{boolean, lukasiewicz};

fn main() -> enritch::Result<()> {
    let bound = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    for (name, q) in [("boolean", boolean()), ("lukasiewicz3", lukasiewicz(3))] {
        let d = DiagonalQuantaloid::new(q);
        for suite in Suite::ALL {
            let out = run_suite(&d, suite, bound, Typing::Strict, 1)?;
            println!(
                "{name:<13} {:<4} categories={:<4} cases={:<7} discrepancies={}",
                suite.name(),
                out.categories,
                out.cases,
                out.discrepancies
            );
        }
    }
    Ok(())
}
