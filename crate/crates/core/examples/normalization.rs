//! Normalizing benefit (effect) and cost attributes.

use greyrank::model::{normalize, normalize_cost_column, normalize_effect_column};
use greyrank::{DecisionProblem, GreyInterval};

fn main() -> greyrank::Result<()> {
    let column = [
        GreyInterval::new(4.0, 6.0)?,
        GreyInterval::new(5.0, 7.0)?,
        GreyInterval::new(2.0, 3.0)?,
    ];
    println!("raw      {:?}", column.map(|c| format!("{c:.0}")));
    let effect = normalize_effect_column(&column)?;
    let cost = normalize_cost_column(&column)?;
    for (i, (e, c)) in effect.iter().zip(&cost).enumerate() {
        println!("plan {i}: effect {e:.4}  cost {c:.4}");
    }

    let problem = DecisionProblem::from_json(include_str!("../fixtures/table1.json"))?;
    let x = normalize(&problem)?;
    println!();
    for (plan, row) in problem.plans().iter().zip(x.matrix().iter_rows()) {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:.4}")).collect();
        println!("{plan}: {}", cells.join(" "));
    }
    Ok(())
}
