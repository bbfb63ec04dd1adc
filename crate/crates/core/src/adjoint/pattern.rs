use std::fmt;

use crate::rings::Z3;

/// A `4×4` matrix over `Z₃`, compared up to generalized row and column
/// permutations (monomial matrices on both sides).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ResiduePattern(pub [[Z3; 4]; 4]);

const PERMS: [[usize; 4]; 24] = {
    let mut out = [[0; 4]; 24];
    let mut n = 0;
    let mut code = 0;
    while code < 256 {
        let p = [code & 3, code >> 2 & 3, code >> 4 & 3, code >> 6 & 3];
        let mask = 1 << p[0] | 1 << p[1] | 1 << p[2] | 1 << p[3];
        if mask == 15 {
            out[n] = p;
            n += 1;
        }
        code += 1;
    }
    out
};

impl ResiduePattern {
    pub fn zero() -> Self {
        ResiduePattern([[Z3::ZERO; 4]; 4])
    }

    pub fn from_values(rows: [[u8; 4]; 4]) -> Self {
        ResiduePattern(rows.map(|r| r.map(|v| Z3::new(v as i64))))
    }

    /// Zero first row and column, `v` everywhere else.
    pub fn bordered(v: Z3) -> Self {
        let mut m = [[v; 4]; 4];
        for k in 0..4 {
            m[0][k] = Z3::ZERO;
            m[k][0] = Z3::ZERO;
        }
        ResiduePattern(m)
    }

    pub fn get(&self, r: usize, c: usize) -> Z3 {
        self.0[r][c]
    }

    /// `L·P` for `L` the monomial matrix with `L[r][perm[r]] = scale[r]`.
    fn rows_moved(&self, perm: &[usize; 4], scale: [Z3; 4]) -> [[Z3; 4]; 4] {
        let mut out = [[Z3::ZERO; 4]; 4];
        for r in 0..4 {
            for c in 0..4 {
                out[r][c] = scale[r] * self.0[perm[r]][c];
            }
        }
        out
    }
}

fn scalings() -> impl Iterator<Item = [Z3; 4]> {
    (0..16u8).map(|bits| {
        let mut s = [Z3::ONE; 4];
        for (k, v) in s.iter_mut().enumerate() {
            if bits >> k & 1 == 1 {
                *v = Z3::TWO;
            }
        }
        s
    })
}

/// Whether monomial `L, R` over `Z₃` exist with `L·P·R = Q`. Every row
/// monomial is tried; for each, every column permutation, with the column
/// scalar read off column by column.
pub fn pattern_equiv(p: &ResiduePattern, q: &ResiduePattern) -> bool {
    for perm in &PERMS {
        for scale in scalings() {
            let lp = p.rows_moved(perm, scale);
            for cols in &PERMS {
                let fits = (0..4).all(|j| {
                    let col = cols[j];
                    [Z3::ONE, Z3::TWO]
                        .iter()
                        .any(|&s| (0..4).all(|r| lp[r][col] * s == q.0[r][j]))
                });
                if fits {
                    return true;
                }
            }
        }
    }
    false
}

impl fmt::Display for ResiduePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.0.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}
