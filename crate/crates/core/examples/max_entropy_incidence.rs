//! Comprehensive incidence with weights from the maximum entropy principle.

use greyrank::ranking::{entropy_incidence_scores, max_entropy_weights};

fn main() -> greyrank::Result<()> {
    let g_plus = [0.82, 0.55, 0.61, 0.47];
    let g_minus = [0.44, 0.70, 0.58, 0.79];

    let (beta1, beta2) = max_entropy_weights(&g_plus, &g_minus);
    println!("beta1 = {beta1:.6}, beta2 = {beta2:.6}");

    let result = entropy_incidence_scores(&g_plus, &g_minus, beta1, beta2)?;
    for (i, (score, rank)) in result.scores.iter().zip(&result.ranking.ranks).enumerate() {
        println!("A{}: {score:.5} (rank {rank})", i + 1);
    }

    // the weights saturate smoothly instead of overflowing
    let (b1, b2) = max_entropy_weights(&[1.0; 2000], &[1.0; 2000]);
    println!("saturated: ({b1}, {b2})");
    Ok(())
}
