use exterior::*;
use exterior::scalar::Rat;
use exterior::correspond::*;
use exterior::altform::AltForm;

fn main() {
    let s = su3::standard_su3::<Rat>();
    let z = AltForm::basis_covector(7, 1);
    let triple = CorrespondenceTriple::from_su3(z, &s.omega_c, &s.omega).unwrap();
    let g2 = g2_from_su3(&triple).unwrap();
    println!("phi      = {:?}", g2.phi());
    println!("star_phi = {:?}", g2.star_phi());
    let back = su3_from_g2(&g2, true).unwrap();
    println!("z        = {:?}", back.z);
    println!("omega in = {:?}", triple.omega);
    println!("omega out= {:?}", back.omega);
    println!("reO in   = {:?}", triple.re_omega);
    println!("reO out  = {:?}", back.re_omega);
    println!("imO in   = {:?}", triple.im_omega);
    println!("imO out  = {:?}", back.im_omega);
}
