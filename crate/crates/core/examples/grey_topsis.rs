//! Grey TOPSIS: distances to the positive and negative ideal plans.

use greyrank::model::normalize;
use greyrank::ranking::{blend_preference, ideal_vectors, topsis_scores, weighted_matrix, Trace};
use greyrank::weighting::compute_weights;
use greyrank::DecisionProblem;

fn main() -> greyrank::Result<()> {
    let problem = DecisionProblem::from_json(include_str!("../fixtures/table1.json"))?;
    let x = normalize(&problem)?;
    let weights = compute_weights(problem.expert_weights(), &x, &problem.attribute_names())?;

    let z = blend_preference(&x, problem.preferences())?;
    let y = weighted_matrix(&z, &weights.w)?;
    let ideals = ideal_vectors(&y);
    let result = topsis_scores(&y, &ideals)?;

    let Trace::Topsis { d_plus, d_minus, .. } = &result.trace else {
        unreachable!()
    };
    println!("plan      D+        D-        C   rank");
    for (i, plan) in problem.plans().iter().enumerate() {
        println!(
            "{plan:<4} {:>8.5} {:>8.5} {:>8.5} {:>4}",
            d_plus[i], d_minus[i], result.scores[i], result.ranking.ranks[i]
        );
    }
    Ok(())
}
