//! Gauss codes to X-graphs, and what the pipeline says about them.

use xplanar::{decide, format, from_gauss_code, gauss::turning_instance, parse_word};

fn main() -> xplanar::Result<()> {
    let words = ["a a", "a b a b", "a b c a b c", "a b c d b a d c", "a b c a d e b f d c f e"];
    for word in words {
        let symbols = parse_word(word);
        let g = from_gauss_code(&symbols)?;
        let turned = turning_instance(&symbols)?;
        println!(
            "{word:<24} V={} curve {:<5} turning {}",
            g.vertex_count(),
            decide(&g)?.planar(),
            decide(&turned)?.planar()
        );
    }
    print!("\n{}", format::write_xgraph(&from_gauss_code(&parse_word("a b a b"))?));
    match from_gauss_code(&parse_word("a b a")) {
        Err(e) => println!("\na b a: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
