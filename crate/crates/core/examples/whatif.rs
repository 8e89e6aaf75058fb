//! Sensitivity check: perturb cells and preferences, then compare the final ranks.

use greyrank::{whatif, Input, Override, RunOptions};

fn main() -> greyrank::Result<()> {
    let input = Input::from_json(include_str!("../fixtures/table1.json"))?;
    let scenarios: [&[&str]; 3] = [
        &["A2.G3=[6,7]"],
        &["A4.G1=[9,10]", "A4.G2=[9,10]"],
        &["A4.G1=[9,10]", "A4.G2=[9,10]", "q.A4=[0.8,0.9]"],
    ];
    for scenario in scenarios {
        let overrides = scenario
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<Override>, _>>()?;
        let result = whatif(input.clone(), &overrides, &RunOptions::default())?;
        let order = &result.perturbed.ranking.as_ref().expect("full run").final_order;
        println!("{}", scenario.join(" "));
        println!("  final: {}", order.join(" > "));
        if result.diff.is_empty() {
            println!("  no change");
        }
        for change in &result.diff.changed {
            println!("  {}: {} -> {}", change.plan, change.before, change.after);
        }
    }
    Ok(())
}
