//! Draws F_3 with its facet labels and writes the SVG to the temp directory.

use freehedra::figures::freehedron_figure;

fn main() -> freehedra::Result<()> {
    let f = freehedron_figure(3)?;
    let path = std::env::temp_dir().join("freehedron3.svg");
    std::fs::write(&path, &f.svg)?;
    println!("F_3: {} vertices, {} edges -> {}", f.vertices, f.edges, path.display());
    for (cell, ops) in &f.facets {
        println!("  {cell}: {}", ops.join(" = "));
    }
    Ok(())
}
