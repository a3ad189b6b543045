//! Inside/outside chord placement, the contracted rotation system, and a
//! schematic drawing. Writes `embedding.svg` into the given directory
//! (default: the system temp dir).

use std::path::PathBuf;

use xplanar::format::write_embedding;
use xplanar::{
    interlacement_graph, is_planar_rotation, render_schematic, rotation_from_tour, trace_faces,
    turning_euler_tour, two_coloring, Result, TwoColoring,
};

fn main() -> Result<()> {
    let g = xplanar::from_gauss_code(&xplanar::parse_word("a b c d b a d c"))?;
    let tour = turning_euler_tour(&g)?;
    let TwoColoring::Bipartite(coloring) = two_coloring(&interlacement_graph(&tour)) else {
        panic!("this curve is realizable")
    };
    println!("{}", tour.dump(&g));
    println!("sides {:?}", coloring.sides);

    let r = rotation_from_tour(&tour, &coloring, &g)?;
    let faces = trace_faces(&g, &r);
    print!("{}", write_embedding(&r, &[&faces]));
    println!("planar: {}", is_planar_rotation(&g, &r)?);
    for (i, f) in faces.faces.iter().enumerate() {
        let darts: Vec<String> = f.iter().map(ToString::to_string).collect();
        println!("face {i}: {}", darts.join(" "));
    }

    let dir = std::env::args().nth(1).map_or_else(std::env::temp_dir, PathBuf::from);
    let path = dir.join("embedding.svg");
    std::fs::write(&path, render_schematic(&g, &r, &faces)).expect("writable output directory");
    println!("wrote {}", path.display());
    Ok(())
}
