//! Round trip of a certificate through its text format, and what the
//! checker says about altered copies.

use xplanar::format::{parse_certificate, write_certificate};
use xplanar::{decide, verify_forbidden_pair, ClosedWalk, OrientedEdge};

fn main() -> xplanar::Result<()> {
    let g = xplanar::from_gauss_code(&xplanar::parse_word("a b c d a b c d"))?;
    let verdict = decide(&g)?;
    let cert = verdict.certificate().expect("not realizable as a curve");
    let text = write_certificate(&cert.walk1, &cert.walk2, cert.crossing);
    print!("{text}");

    let parsed = parse_certificate(&text)?;
    let report = verify_forbidden_pair(&parsed.walk1, &parsed.walk2, &g);
    println!("parsed back: valid {}, crossing {:?}", report.valid, report.crossing);

    let report = verify_forbidden_pair(&parsed.walk1, &parsed.walk1, &g);
    println!("same walk twice: valid {}, {}", report.valid, report.failure.unwrap_or_default());

    let reversed = ClosedWalk::new(parsed.walk2.steps().iter().rev().map(|s| s.reversed()).collect())?;
    let report = verify_forbidden_pair(&parsed.walk1, &reversed, &g);
    println!("second walk reversed: valid {}, crossing {:?}", report.valid, report.crossing);

    let bogus = ClosedWalk::new(vec![OrientedEdge::forward(0), OrientedEdge::forward(5)])?;
    let report = verify_forbidden_pair(&parsed.walk1, &bogus, &g);
    println!("broken walk: valid {}, {}", report.valid, report.failure.unwrap_or_default());
    Ok(())
}
