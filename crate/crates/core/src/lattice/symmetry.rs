use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Cell, LatticeError};

/// Which lattice symmetries a tile may be placed under.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "kebab-case")]
pub enum Symmetry {
    /// Translation only.
    Fixed,
    /// Proper rotations of the hypercubic lattice (signed permutations with determinant +1).
    Rotations,
    /// The full hyperoctahedral group (all signed permutations of the axes).
    RotationsAndReflections,
}

impl Symmetry {
    pub fn as_str(self) -> &'static str {
        match self {
            Symmetry::Fixed => "fixed",
            Symmetry::Rotations => "rotations",
            Symmetry::RotationsAndReflections => "rotations-and-reflections",
        }
    }

    /// All group elements in dimension `dim`, identity first.
    pub fn group(self, dim: usize) -> Vec<SignedPermutation> {
        match self {
            Symmetry::Fixed => vec![SignedPermutation::identity(dim)],
            Symmetry::Rotations => SignedPermutation::all(dim).into_iter().filter(|g| g.determinant() == 1).collect(),
            Symmetry::RotationsAndReflections => SignedPermutation::all(dim),
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Symmetry {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fixed" => Ok(Symmetry::Fixed),
            "rotations" => Ok(Symmetry::Rotations),
            "rotations-and-reflections" => Ok(Symmetry::RotationsAndReflections),
            other => Err(LatticeError::Parse(format!("unknown symmetry mode `{other}`"))),
        }
    }
}

/// `x -> y` with `y[i] = sign[i] * x[perm[i]]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    negate: Vec<bool>,
}

impl SignedPermutation {
    pub fn identity(dim: usize) -> Self {
        SignedPermutation { perm: (0..dim).collect(), negate: vec![false; dim] }
    }

    /// Every signed permutation of `dim` axes; `2^d * d!` elements.
    pub fn all(dim: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for perm in permutations(dim) {
            for mask in 0u32..(1 << dim) {
                let negate = (0..dim).map(|i| mask & (1 << i) != 0).collect();
                out.push(SignedPermutation { perm: perm.clone(), negate });
            }
        }
        out
    }

    pub fn determinant(&self) -> i32 {
        let mut sign = 1;
        let mut seen = vec![false; self.perm.len()];
        for start in 0..self.perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.perm[i];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        for &n in &self.negate {
            if n {
                sign = -sign;
            }
        }
        sign
    }

    pub fn apply(&self, c: &Cell) -> Cell {
        let src = c.coords();
        Cell::new(self.perm.iter().zip(&self.negate).map(|(&p, &neg)| if neg { -src[p] } else { src[p] }))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}
