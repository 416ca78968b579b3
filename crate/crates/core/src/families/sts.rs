use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Steiner triple system on `n = 3v` points (`v` odd) by the Bose
/// construction. Point `(x, i)` is `i * v + x`.
pub fn bose_triples(n: usize) -> Result<Vec<[usize; 3]>> {
    if n < 9 || n % 6 != 3 {
        return Err(Error::InvalidParameter(format!("Bose construction needs n = 3 mod 6 and n >= 9, got {n}")));
    }
    let v = n / 3;
    let half = v.div_ceil(2);
    let op = |x: usize, y: usize| ((x + y) * half) % v;
    let pt = |x: usize, i: usize| (i % 3) * v + x;
    let mut triples: Vec<[usize; 3]> = (0..v).map(|x| [pt(x, 0), pt(x, 1), pt(x, 2)]).collect();
    for x in 0..v {
        for y in x + 1..v {
            for i in 0..3 {
                triples.push([pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    Ok(triples)
}

/// Tournament from orienting every Bose triple as a directed triangle, the
/// direction of each triangle drawn from the seeded generator.
pub fn sts_tournament(n: usize, seed: u64) -> Result<Digraph> {
    let triples = bose_triples(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::with_capacity(triples.len() * 3);
    for [a, b, c] in triples {
        if rng.gen_bool(0.5) {
            arcs.extend([(a, b), (b, c), (c, a)]);
        } else {
            arcs.extend([(a, c), (c, b), (b, a)]);
        }
    }
    Digraph::new(n, arcs)
}
