//! Cartan matrix constructors for the finite series and the sixteen affine
//! families. Convention everywhere: `a[i][j] = ⟨ᾱ_j, ᾱ_i∨⟩`, so the Dynkin
//! labels are the right null vector and the colabels the left null vector.
//!
//! Finite types follow Bourbaki numbering shifted to 0-based indices. Affine
//! types put the added node at index 0 and keep the remaining nodes in the
//! drawn order.

use crate::error::Error;

struct Builder {
    a: Vec<Vec<i64>>,
}

impl Builder {
    fn new(n: usize) -> Self {
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        Builder { a }
    }

    /// Single edge between equal-length roots.
    fn edge(&mut self, i: usize, j: usize) {
        self.bond(i, j, -1, -1);
    }

    /// General bond: `a[i][j] = aij`, `a[j][i] = aji`.
    fn bond(&mut self, i: usize, j: usize, aij: i64, aji: i64) {
        self.a[i][j] = aij;
        self.a[j][i] = aji;
    }

    fn path(&mut self, from: usize, to: usize) {
        for i in from..to {
            self.edge(i, i + 1);
        }
    }

    fn done(self) -> Vec<Vec<i64>> {
        self.a
    }
}

/// Finite series identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

/// Cartan matrix of the irreducible finite type `X_rank`.
pub fn finite_cartan(series: Series, rank: u32) -> Result<Vec<Vec<i64>>, Error> {
    let n = rank as usize;
    let bad = |legal: &str| {
        Err(Error::IllegalHost(format!(
            "{}{} is not a finite type here; legal: {}",
            series.letter(),
            rank,
            legal
        )))
    };
    let mut b;
    match series {
        Series::A => {
            if n < 1 {
                return bad("A_n with n >= 1");
            }
            b = Builder::new(n);
            b.path(0, n - 1);
        }
        Series::B => {
            if n < 2 {
                return bad("B_n with n >= 2");
            }
            b = Builder::new(n);
            b.path(0, n - 2);
            b.bond(n - 2, n - 1, -1, -2); // α_n short
        }
        Series::C => {
            if n < 3 {
                return bad("C_n with n >= 3 (use B2 for rank 2)");
            }
            b = Builder::new(n);
            b.path(0, n - 2);
            b.bond(n - 2, n - 1, -2, -1); // α_n long
        }
        Series::D => {
            if n < 4 {
                return bad("D_n with n >= 4 (use A3 for rank 3)");
            }
            b = Builder::new(n);
            b.path(0, n - 3);
            b.edge(n - 3, n - 2);
            b.edge(n - 3, n - 1);
        }
        Series::E => {
            if !(6..=8).contains(&n) {
                return bad("E6, E7, E8");
            }
            b = Builder::new(n);
            // Bourbaki: branch node α2 (index 1) attached to α4 (index 3).
            b.edge(0, 2);
            b.edge(1, 3);
            for i in 2..n - 1 {
                b.edge(i, i + 1);
            }
        }
        Series::F => {
            if n != 4 {
                return bad("F4");
            }
            b = Builder::new(4);
            b.edge(0, 1);
            b.bond(1, 2, -1, -2); // α3, α4 short
            b.edge(2, 3);
        }
        Series::G => {
            if n != 2 {
                return bad("G2");
            }
            b = Builder::new(2);
            b.bond(0, 1, -3, -1); // α1 short, α2 long
        }
    }
    Ok(b.done())
}

/// Cartan matrix of the affine type `X_rank^(twist)`. `rank` is the subscript
/// of the printed name (so `A4~2` has 3 nodes).
pub fn affine_cartan(series: Series, rank: u32, twist: u8) -> Result<Vec<Vec<i64>>, Error> {
    let n = rank as usize;
    let bad = |legal: &str| {
        Err(Error::IllegalHost(format!(
            "{}{}~{} is not an affine type; legal: {}",
            series.letter(),
            rank,
            twist,
            legal
        )))
    };
    let mut b;
    match (series, twist) {
        (Series::A, 1) => {
            if n < 1 {
                return bad("A_n~1 with n >= 1");
            }
            if n == 1 {
                b = Builder::new(2);
                b.bond(0, 1, -2, -2);
            } else {
                // cycle of n+1 nodes
                b = Builder::new(n + 1);
                b.path(0, n);
                b.edge(n, 0);
            }
        }
        (Series::B, 1) => {
            if n < 3 {
                return bad("B_n~1 with n >= 3");
            }
            b = Builder::new(n + 1);
            b.edge(0, 2);
            b.path(1, n - 1);
            b.bond(n - 1, n, -1, -2);
        }
        (Series::C, 1) => {
            if n < 2 {
                return bad("C_n~1 with n >= 2");
            }
            b = Builder::new(n + 1);
            b.bond(0, 1, -1, -2);
            b.path(1, n - 1);
            b.bond(n - 1, n, -2, -1);
        }
        (Series::D, 1) => {
            if n < 4 {
                return bad("D_n~1 with n >= 4");
            }
            b = Builder::new(n + 1);
            b.edge(0, 2);
            b.path(1, n - 2);
            b.edge(n - 2, n - 1);
            b.edge(n - 2, n);
        }
        (Series::E, 1) => match n {
            6 => {
                b = Builder::new(7);
                b.edge(1, 3);
                b.edge(2, 4);
                b.path(3, 6);
                b.edge(0, 2);
            }
            7 => {
                b = Builder::new(8);
                b.edge(1, 3);
                b.edge(2, 4);
                b.path(3, 7);
                b.edge(0, 1);
            }
            8 => {
                b = Builder::new(9);
                b.edge(1, 3);
                b.edge(2, 4);
                b.path(3, 8);
                b.edge(0, 8);
            }
            _ => return bad("E6~1, E7~1, E8~1"),
        },
        (Series::F, 1) => {
            if n != 4 {
                return bad("F4~1");
            }
            b = Builder::new(5);
            b.edge(0, 1);
            b.edge(1, 2);
            b.bond(2, 3, -1, -2);
            b.edge(3, 4);
        }
        (Series::G, 1) => {
            if n != 2 {
                return bad("G2~1");
            }
            b = Builder::new(3);
            b.edge(0, 1);
            b.bond(1, 2, -1, -3);
        }
        (Series::A, 2) => {
            if n == 2 {
                b = Builder::new(2);
                b.bond(0, 1, -4, -1);
            } else if n >= 4 && n % 2 == 0 {
                // A_{2m}~2, m = n/2: double edges at both ends, oriented the same way
                let m = n / 2;
                b = Builder::new(m + 1);
                b.bond(0, 1, -2, -1);
                b.path(1, m - 1);
                b.bond(m - 1, m, -2, -1);
            } else if n >= 5 && n % 2 == 1 {
                // A_{2m-1}~2, m = (n+1)/2: fork at one end, double edge at the other
                let m = (n + 1) / 2;
                b = Builder::new(m + 1);
                b.edge(0, 2);
                b.path(1, m - 1);
                b.bond(m - 1, m, -2, -1);
            } else {
                return bad("A2~2, A_{2m}~2 with m >= 2, A_{2m-1}~2 with m >= 3");
            }
        }
        (Series::D, 2) => {
            if n < 3 {
                return bad("D_n~2 with n >= 3");
            }
            b = Builder::new(n);
            b.bond(0, 1, -2, -1);
            b.path(1, n - 2);
            b.bond(n - 2, n - 1, -1, -2);
        }
        (Series::E, 2) => {
            if n != 6 {
                return bad("E6~2");
            }
            b = Builder::new(5);
            b.edge(0, 1);
            b.edge(1, 2);
            b.bond(2, 3, -2, -1);
            b.edge(3, 4);
        }
        (Series::D, 3) => {
            if n != 4 {
                return bad("D4~3");
            }
            b = Builder::new(3);
            b.edge(0, 1);
            b.bond(1, 2, -3, -1);
        }
        _ => return bad("twist must be 1, 2 (A, D, E6) or 3 (D4)"),
    }
    Ok(b.done())
}
