//! Round-trips instances, reduction artifacts and graphs through their text formats.

use consensus_core::generate::{gen_gnp, gen_random_partitions};
use consensus_core::io::{
    format_graph, format_instance, parse_graph_str, parse_instance_str, read_artifact,
    write_artifact,
};
use consensus_core::{build_reduction, Graph};

fn main() -> consensus_core::Result<()> {
    let inst = gen_random_partitions(6, 3, 3, 21)?;
    let text = format_instance(&inst);
    print!("{text}");
    assert_eq!(parse_instance_str(&text)?, inst);

    match parse_instance_str("3 1\n0 1\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    let g = gen_gnp(4, 0.5, 9)?;
    let gtext = format_graph(&g);
    print!("{gtext}");
    assert_eq!(parse_graph_str(&gtext)?, g);

    let dir = std::env::temp_dir().join(format!("consensus-formats-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| consensus_core::Error::Io(e.to_string()))?;
    let path = dir.join("square.inst");
    let art = build_reduction(&Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)])?)?;
    write_artifact(&art, &path)?;
    let back = read_artifact(&path)?;
    println!("artifact reread: {} elements, graph edges {:?}", back.universe_size(), back.graph.edges());
    let _ = std::fs::remove_dir_all(&dir);
    Ok(())
}
