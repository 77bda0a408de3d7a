//! On a classical metric with r = 0 the tight functions are the usual
//! tight span: on two points at distance 4 they form the segment s + t = 4.

use enritch::extrat::ExtRat;
use enritch::parmet::{classical_sigma, classical_tight_check, random_space, sample_ambient, sigma, tighten_sweep, ParMetSpace, RadiusFunction};
use enritch::rat;

fn main() -> enritch::Result<()> {
    let m = ParMetSpace::parse(&["a", "b"], &[&["0", "4"], &["4", "0"]])?;
    let mut segment = Vec::new();
    for s in 0..=8u64 {
        for t in 0..=8u64 {
            let mu = RadiusFunction::new(rat("0"), vec![ExtRat::ratio(s, 2)?, ExtRat::ratio(t, 2)?]);
            if classical_tight_check(&m, &mu)? {
                segment.push(format!("({}, {})", mu.values[0], mu.values[1]));
            }
        }
    }
    println!("tight on the half grid: {}", segment.join(" "));

    let m = random_space(5, 7, true);
    let mu = tighten_sweep(&m, &sample_ambient(&m, &rat("0"), 1))?.function;
    for x in 0..m.len() {
        let y = RadiusFunction::yoneda(&m, x);
        println!("{}: σ = {}, sup norm = {}", m.points()[x], sigma(&m, &mu, &y)?, classical_sigma(&m, &mu, &y)?);
    }
    Ok(())
}
