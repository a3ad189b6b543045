//! Turning Eulerian tours, strong turning, and the split certificate.

use xplanar::oracle::random_xgraph;
use xplanar::{
    is_turning, simplify_cycle, split_at_violation, strong_turning_violation, turning_euler_tour,
    verify_forbidden_pair,
};

fn main() -> xplanar::Result<()> {
    let g = random_xgraph(6, 11, true)?;
    print!("{}", xplanar::write_xgraph(&g));
    let tour = turning_euler_tour(&g)?;
    println!("{}", tour.dump(&g));
    println!("turning: {}", is_turning(&tour, &g));

    let Some(a) = strong_turning_violation(&tour, &g) else {
        println!("strongly turning");
        return Ok(());
    };
    let split = split_at_violation(&tour, a, &g)?;
    println!("vertex {a} is entered through both pairs");
    println!("  T1 = {}", split.walk1);
    println!("  T2 = {}", split.walk2);

    let k1 = simplify_cycle(&split.walk1, a, &g)?;
    let k2 = simplify_cycle(&split.walk2, a, &g)?;
    let report = verify_forbidden_pair(&k1, &k2, &g);
    println!("simple: {k1} and {k2}, crossing {:?}, valid {}", report.crossing, report.valid);
    Ok(())
}
