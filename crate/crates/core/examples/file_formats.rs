//! Reading the text and JSON formats, strict versus minimalizing builds,
//! and parse errors with positions.

use bouquet_kit::io::{parse_hypergraph, write_json, write_text};
use bouquet_kit::BuildMode;

fn main() -> bouquet_kit::Result<()> {
    let text = "# bridged paths\na b\nb c\ne d\ne f\nb e\n";
    let h = parse_hypergraph(text, BuildMode::Strict)?;
    println!("text:\n{}", write_text(&h));
    println!("json: {}", write_json(&h));
    assert_eq!(parse_hypergraph(&write_json(&h), BuildMode::Strict)?, h);

    for bad in ["x\nx y\n", "a b\n\nc c\n", "{\"edges\": [[\"a\"], 3]}"] {
        match parse_hypergraph(bad, BuildMode::Strict) {
            Ok(_) => println!("{bad:?} parsed"),
            Err(e) => println!("{bad:?}: {e}"),
        }
    }
    let m = parse_hypergraph("x\nx y\n", BuildMode::Minimalize)?;
    println!("minimalized: {:?}", m.raw_edges());
    Ok(())
}
