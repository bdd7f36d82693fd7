//! Reproducible parallel sampling.
//!
//! The sample index range is cut into fixed-size chunks. Chunk `c` draws
//! from a ChaCha8 stream keyed by `(seed, c)`, so results do not depend on
//! how many worker threads process the chunks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Samples per chunk.
pub const CHUNK: u64 = 4096;

/// Generator for chunk `chunk` of a run seeded with `seed`.
pub fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

/// Run `f(index, rng)` for every sample index in `0..n_samples` and keep
/// the `Some` results, in index order.
pub fn par_collect<T, F>(n_samples: u64, seed: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64, &mut ChaCha8Rng) -> Option<T> + Sync,
{
    let n_chunks = n_samples.div_ceil(CHUNK);
    (0..n_chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = chunk_rng(seed, c);
            let lo = c * CHUNK;
            let hi = (lo + CHUNK).min(n_samples);
            (lo..hi).filter_map(|i| f(i, &mut rng)).collect::<Vec<T>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}
