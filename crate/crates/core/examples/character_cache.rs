//! Persisting computed characters between runs.
//!
//! ```text
//! cargo run --example character_cache -- /tmp/chi.cache
//! ```

use std::path::PathBuf;

use charsum::character::{CacheLoad, CharacterEngine};
use charsum::ev::r_even_rows;
use charsum::partition::Partition;

fn main() -> charsum::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("charsum-example.cache"));
    let engine = CharacterEngine::new();
    match engine.load_cache(&path)? {
        CacheLoad::Missing => println!("no cache at {}, starting cold", path.display()),
        CacheLoad::VersionMismatch(h) => println!("ignoring cache with header {h:?}"),
        CacheLoad::Loaded(k) => println!("loaded {k} values"),
    }
    let lambda = Partition::rectangle(1, 16);
    let rows = r_even_rows(3, 16)?;
    println!(
        "sum over R_3(16) at (1^16): {}",
        engine.chi_column_sum(&rows, &lambda)?
    );
    let written = engine.save_cache(&path)?;
    println!("wrote {written} values to {}", path.display());
    Ok(())
}
