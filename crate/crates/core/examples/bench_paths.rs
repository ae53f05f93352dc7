use pencilforge_core::algebra::generated_algebra_dim;
use pencilforge_core::charpoly::char_poly;
use pencilforge_core::family::{build_pencil, FamilyParams};
use pencilforge_core::historic::quantize_laffey;
use pencilforge_core::scalar::rat_int;
use std::time::Instant;

fn main() {
    let which: u32 = std::env::args().nth(1).unwrap().parse().unwrap();
    match which {
        1 => {
            for n in [4usize, 5, 6] {
                let p = FamilyParams::new(n, rat_int(1)).unwrap();
                let pencil = build_pencil(&p).unwrap();
                let t = Instant::now();
                let rep = generated_algebra_dim(&[pencil.h().clone(), pencil.k().clone()], 4 * n * n).unwrap();
                println!("closure n={n}: dim={} gens={} in {:?}", rep.dimension, rep.generations, t.elapsed());
            }
        }
        2 => {
            let l = quantize_laffey();
            let t = Instant::now();
            let cl = char_poly(&l).unwrap();
            println!("laffey char: {:?}", t.elapsed());
            let t = Instant::now();
            let disc = cl.discriminant().unwrap();
            println!("laffey discriminant: {:?} (zero: {})", t.elapsed(), disc == rat_int(0));
        }
        _ => unreachable!(),
    }
}
