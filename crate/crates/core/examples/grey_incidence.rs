//! Grey incidence degrees toward both ideals and the combined closeness score.

use greyrank::model::normalize;
use greyrank::ranking::{
    blend_preference, ideal_vectors, incidence_coefficients, incidence_degrees, incidence_scores, weighted_matrix,
};
use greyrank::weighting::compute_weights;
use greyrank::DecisionProblem;

fn main() -> greyrank::Result<()> {
    let problem = DecisionProblem::from_json(include_str!("../fixtures/table1.json"))?;
    let params = problem.params();
    let x = normalize(&problem)?;
    let weights = compute_weights(problem.expert_weights(), &x, &problem.attribute_names())?;
    let y = weighted_matrix(&blend_preference(&x, problem.preferences())?, &weights.w)?;
    let r = incidence_coefficients(&y, &ideal_vectors(&y), params.rho)?;
    let (g_plus, g_minus) = incidence_degrees(&r);

    for (theta_plus, theta_minus) in [(0.5, 0.5), (0.7, 0.3), (1.0, 0.0)] {
        let result = incidence_scores(&g_plus, &g_minus, theta_plus, theta_minus)?;
        let scores: Vec<String> = result.scores.iter().map(|s| format!("{s:.4}")).collect();
        println!(
            "theta = ({theta_plus}, {theta_minus}): scores {} ranks {:?}",
            scores.join(" "),
            result.ranking.ranks
        );
    }
    println!("G+ {g_plus:.4?}");
    println!("G- {g_minus:.4?}");
    Ok(())
}
