//! Subjective, deviation-based and entropy-based weights combined into final interval weights.

use greyrank::model::normalize;
use greyrank::weighting::compute_weights;
use greyrank::DecisionProblem;

fn main() -> greyrank::Result<()> {
    let mut file = greyrank::ProblemFile::from_json(include_str!("../fixtures/table1.json"))?;
    file.expert_weights = vec![
        vec![0.25, 0.20, 0.20, 0.15, 0.20],
        vec![0.15, 0.25, 0.20, 0.20, 0.20],
        vec![0.20, 0.20, 0.30, 0.15, 0.15],
    ];
    let problem = DecisionProblem::try_from(file)?;
    let x = normalize(&problem)?;
    let set = compute_weights(problem.expert_weights(), &x, &problem.attribute_names())?;

    println!(
        "{:<4} {:>18} {:>8} {:>8} {:>8} {:>18} {:>18}",
        "", "alpha", "opt", "ent_lo", "ent_hi", "beta", "w"
    );
    for (j, name) in problem.attribute_names().iter().enumerate() {
        println!(
            "{:<4} {:>18} {:>8.4} {:>8.4} {:>8.4} {:>18} {:>18}",
            name,
            format!("{:.4}", set.alpha[j]),
            set.beta_opt[j],
            set.beta_ent_lo[j],
            set.beta_ent_hi[j],
            format!("{:.4}", set.beta[j]),
            format!("{:.4}", set.w[j]),
        );
    }
    if !set.clamped.is_empty() {
        println!("upper bound clamped for {:?}", set.clamped);
    }
    Ok(())
}
