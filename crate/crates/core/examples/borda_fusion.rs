//! Fusing several rank vectors with a weighted Borda count.

use greyrank::ranking::weighted_borda;

fn main() -> greyrank::Result<()> {
    let ranks = vec![vec![1, 3, 2, 4], vec![2, 1, 3, 4], vec![1, 2, 4, 3]];

    for weights in [[1.0 / 3.0; 3], [0.6, 0.2, 0.2], [0.2, 0.6, 0.2]] {
        let borda = weighted_borda(&ranks, &weights)?;
        println!(
            "weights {weights:.2?}: scores {:.3?} final {:?} ties {:?}",
            borda.scores, borda.ranking.ranks, borda.ranking.ties
        );
    }
    Ok(())
}
