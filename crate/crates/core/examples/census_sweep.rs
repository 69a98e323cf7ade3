//! Exhaustive census of small degrees, printed as TSV.

use stabpoly::census::{stability_census, CensusConfig, TSV_HEADER};
use stabpoly::format::parse_field;

fn main() -> stabpoly::Result<()> {
    println!("{TSV_HEADER}");
    for (spec, d) in [("3", 2), ("5", 2), ("7", 2), ("3^2", 2), ("3", 3), ("5", 3)] {
        let field = parse_field(spec)?;
        let mut config = CensusConfig::new(d);
        config.direct_depth = if d == 2 { 5 } else { 3 };
        let r = stability_census(&field, &config)?;
        assert_eq!(r.counts.contradictions, 0);
        println!("{}", r.tsv_row());
    }
    Ok(())
}
