use pencilforge_core::charpoly::char_poly;
use pencilforge_core::historic::{build_laffey, lax_commutator_system, lax_rank_certify, quantize_laffey};
use std::time::Instant;

fn main() {
    let l = quantize_laffey();
    let cl = char_poly(&l).unwrap();
    let pencil = build_laffey();
    let t = Instant::now();
    let sys = lax_commutator_system(pencil.h(), pencil.k()).unwrap();
    println!("lax system: {:?} ({} eqs, {} unknowns)", t.elapsed(), sys.equations.len(), sys.unknowns.len());
    let t = Instant::now();
    let ok = lax_rank_certify(&sys, &cl).unwrap();
    println!("lax rank certify: {:?} -> {}", t.elapsed(), ok);
}
