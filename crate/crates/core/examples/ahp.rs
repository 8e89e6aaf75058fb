//! Turning a pairwise comparison matrix into an expert weight vector.

use greyrank::weighting::ahp_eigenvector;
use greyrank::Matrix;

fn main() -> greyrank::Result<()> {
    let pairwise = Matrix::from_rows(vec![
        vec![1.0, 3.0, 5.0],
        vec![1.0 / 3.0, 1.0, 2.0],
        vec![1.0 / 5.0, 1.0 / 2.0, 1.0],
    ])?;
    let ahp = ahp_eigenvector(&pairwise)?;
    println!("weights    {:?}", ahp.weights.values());
    println!("lambda_max {:.6}", ahp.lambda_max);
    println!(
        "CI {:.6}  CR {:.6}  acceptable: {}",
        ahp.consistency_index,
        ahp.consistency_ratio,
        ahp.is_acceptable()
    );
    println!("converged after {} iterations", ahp.iterations);

    // the vector can be used directly as one expert's row in `expert_weights`
    println!("expert_weights row: {:?}", ahp.weights.values());
    Ok(())
}
