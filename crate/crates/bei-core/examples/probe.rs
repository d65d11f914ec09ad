use bei_core::binomial::EdgeBinomialKind;
use bei_core::field::CoefficientField;
use bei_core::graph::*;
use bei_core::resolution::*;
use std::time::Instant;

fn main() {
    let fp = CoefficientField::prime(32003).unwrap();
    let g = build_unicyclic(&TmSpec::new(vec![3,0]).unwrap(), UnicyclicKind::PendantToCenter{leg:1}).unwrap();
    let t0 = Instant::now();
    match regularity_of_power(&g, EdgeBinomialKind::Standard, 2, fp) {
        Ok(res) => println!("balloon g5 J s=2: reg={} certified={} in {:?}", res.value, res.certified, t0.elapsed()),
        Err(e) => println!("ERR {e}"),
    }
}
