//! Tight functions on a partial metric space: membership, the single-sweep
//! tightening, the distance σ and the span as a space of its own.

use enritch::parmet::{sigma, tight_member, tight_span_space, tighten_sweep, ParMetSpace, RadiusFunction};

fn main() -> enritch::Result<()> {
    let m = ParMetSpace::parse(&["a", "b", "c"], &[&["1", "3", "3"], &["3", "1", "2"], &["3", "2", "0"]])?;
    println!("matthews: {}, classical: {}", m.is_matthews(), m.is_classical());

    let mu = RadiusFunction::parse("1", &["4", "4", "4"])?;
    let t = tighten_sweep(&m, &mu)?;
    println!("tightened {:?} in {} sweep(s)", t.function.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(), t.sweeps);
    println!("tight: {}", tight_member(&m, &t.function)?);

    let ya = RadiusFunction::yoneda(&m, 0);
    println!("σ(y_a, y_b) = {}", sigma(&m, &ya, &RadiusFunction::yoneda(&m, 1))?);
    println!("σ(μ, y_a) = {}", sigma(&m, &t.function, &ya)?);
    println!("σ(μ, μ) = {}", sigma(&m, &t.function, &t.function)?);

    let span = tight_span_space(&m, &[("a".into(), ya), ("mu".into(), t.function)])?;
    println!("span points {:?}, matthews: {}", span.points(), span.is_matthews());
    Ok(())
}
