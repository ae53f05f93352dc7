use pencilforge_core::charpoly::{char_poly, char_poly_bareiss};
use pencilforge_core::family::{build_pencil, FamilyParams};
use pencilforge_core::quantizer::{certify_spectrum, quantize, standard_quantisation_pair};
use pencilforge_core::scalar::rat_int;
use std::time::Instant;

fn main() {
    let p = FamilyParams::new(4, rat_int(1)).unwrap();
    let pencil = build_pencil(&p).unwrap();
    let (x, y) = standard_quantisation_pair(&p.q());
    let l = quantize(&x, &y, &pencil).unwrap();
    println!("L order {}", l.rows());

    let t = Instant::now();
    let c1 = char_poly(&l).unwrap();
    println!("faddeev 16x16: {:?}", t.elapsed());

    let t = Instant::now();
    let c2 = char_poly_bareiss(&l).unwrap();
    println!("bareiss 16x16: {:?}", t.elapsed());
    assert_eq!(c1, c2);

    let t = Instant::now();
    let cert = certify_spectrum(&l).unwrap();
    println!("certify total: {:?}  simple={}", t.elapsed(), cert.simple_count);

    // n=6 L0 (24x24)
    let p6 = FamilyParams::new(6, rat_int(0)).unwrap();
    let pencil6 = build_pencil(&p6).unwrap();
    let (x6, y6) = standard_quantisation_pair(&p6.q());
    let l6 = quantize(&x6, &y6, &pencil6).unwrap();
    let t = Instant::now();
    let cert6 = certify_spectrum(&l6).unwrap();
    println!("certify 24x24: {:?}  simple={}", t.elapsed(), cert6.simple_count);
}
