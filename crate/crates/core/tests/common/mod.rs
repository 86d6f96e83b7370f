#![allow(dead_code)]

use permclass::grid::{CellType, GriddingMatrix};
use permclass::perm::{permutations_of_length, Permutation};
use rand::Rng;

/// A random permutation of length `n` drawn by placing points directly into
/// the cells of `m`, so it lies in the grid class by construction. Single
/// point cells receive at most one point.
pub fn random_gridded<R: Rng>(m: &GriddingMatrix, n: usize, rng: &mut R) -> Permutation {
    let open: Vec<(usize, usize)> = (0..m.rows())
        .flat_map(|r| (0..m.cols()).map(move |c| (r, c)))
        .filter(|&(r, c)| m.cell(r, c) != CellType::Empty)
        .collect();
    let mut per_cell: Vec<usize> = vec![0; open.len()];
    for _ in 0..n {
        let choices: Vec<usize> = (0..open.len())
            .filter(|&i| m.cell(open[i].0, open[i].1) != CellType::SinglePoint || per_cell[i] == 0)
            .collect();
        if choices.is_empty() {
            break;
        }
        per_cell[choices[rng.gen_range(0..choices.len())]] += 1;
    }
    // (x, y) in the unit square of each cell; the cell type fixes how the
    // sorted xs pair with the sorted ys
    let mut points: Vec<(f64, f64)> = Vec::new();
    for (&(r, c), &k) in open.iter().zip(&per_cell) {
        let mut xs: Vec<f64> = (0..k).map(|_| c as f64 + rng.gen::<f64>()).collect();
        let mut ys: Vec<f64> = (0..k)
            .map(|_| (m.rows() - 1 - r) as f64 + rng.gen::<f64>())
            .collect();
        xs.sort_by(f64::total_cmp);
        ys.sort_by(f64::total_cmp);
        if m.cell(r, c) == CellType::Decreasing {
            ys.reverse();
        }
        points.extend(xs.into_iter().zip(ys));
    }
    points.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut by_y: Vec<usize> = (0..points.len()).collect();
    by_y.sort_by(|&i, &j| points[i].1.total_cmp(&points[j].1));
    let mut values = vec![0; points.len()];
    for (rank, &i) in by_y.iter().enumerate() {
        values[i] = rank + 1;
    }
    Permutation::new(values).expect("ranks form a permutation")
}

/// Members of `Av(basis)` of length `n` by filtering every permutation.
pub fn naive_members(basis: &[Permutation], n: usize) -> Vec<Permutation> {
    permutations_of_length(n)
        .filter(|p| p.avoids_all(basis))
        .collect()
}

pub fn simple_permutations(n: usize) -> Vec<Permutation> {
    permutations_of_length(n)
        .filter(Permutation::is_simple)
        .collect()
}
