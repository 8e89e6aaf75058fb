//! Basic operations on interval grey numbers.

use greyrank::GreyInterval;

fn main() -> greyrank::Result<()> {
    let a = GreyInterval::new(2.0, 3.0)?;
    let b = GreyInterval::new(1.0, 4.0)?;

    println!("a = {a}, b = {b}");
    println!("a + b = {}", a.add(&b));
    println!("2.5 a = {}", a.scale(2.5)?);
    println!("a * b = {}", a.mul(&b)?);
    println!("d(a, b) = {:.6}", a.distance(&b));
    println!("width(b) = {}", b.width());

    // point values embed the crisp reals
    let p = GreyInterval::point(5.0);
    println!("{p} degenerate: {}", p.is_degenerate());

    match GreyInterval::new(3.0, 2.0) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
