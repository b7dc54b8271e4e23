//! Build a dyadic grid in double-word precision and write it as CSV and binary.

use std::fs::File;
use std::io::BufWriter;

use daubechies::dyadic::{build_wavelet_grid, validate, GridOptions};
use daubechies::filters::FilterBank;
use daubechies::io::GridFile;
use daubechies::real::DoubleF64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (p, j) = (4, 10);
    let grid = build_wavelet_grid::<DoubleF64>(p, j, 0, &GridOptions::default())?;
    println!("psi, p = {p}, j = {j}: {} samples on {:?}", grid.len(), grid.support());

    let check = validate(&build_phi(p, j)?, &FilterBank::new(p)?);
    println!("phi grid checks: {check:?}");

    let dir = std::env::temp_dir();
    let file = GridFile::from_grid(&grid);
    let csv = dir.join("psi4.csv");
    let bin = dir.join("psi4.bin");
    file.write_csv(BufWriter::new(File::create(&csv)?))?;
    file.write_binary(BufWriter::new(File::create(&bin)?))?;
    let back = GridFile::read_binary(File::open(&bin)?)?;
    assert_eq!(back, file);
    println!("wrote {} and {}", csv.display(), bin.display());
    Ok(())
}

fn build_phi(p: u32, j: u32) -> daubechies::Result<daubechies::dyadic::DyadicGrid<DoubleF64>> {
    daubechies::dyadic::build_scaling_grid(p, j, 0, &GridOptions::default())
}
