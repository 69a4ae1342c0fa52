//! The groupoid `Z_n(t,u)` and its explicit Cayley table.

use std::fmt;

use crate::error::{Error, Result};

/// A finite set `{0, .., n-1}` with a binary operation.
///
/// The property checkers are generic over this trait. Implementors must
/// return values in `0..order()` for operands in `0..order()`; operands are
/// not range-checked on this path.
pub trait Magma: Sync {
    fn order(&self) -> usize;

    fn op(&self, a: usize, b: usize) -> usize;
}

/// `Z_n` with `a * b = (t*a + u*b) mod n`.
///
/// Coefficients are stored reduced into `0..n`. Products are computed on the
/// fly, so a groupoid of any order up to `u32::MAX` can be probed without
/// materializing its table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModGroupoid {
    n: usize,
    t: usize,
    u: usize,
}

impl ModGroupoid {
    pub const MIN_ORDER: usize = 3;
    pub const MAX_ORDER: usize = u32::MAX as usize;

    /// Builds `Z_n(t mod n, u mod n)`. Negative coefficients are reduced to
    /// their canonical residue.
    pub fn new(n: i128, t: i128, u: i128) -> Result<Self> {
        if n < Self::MIN_ORDER as i128 {
            return Err(Error::ModulusTooSmall(n));
        }
        if n > Self::MAX_ORDER as i128 {
            return Err(Error::ModulusTooLarge(n));
        }
        Ok(ModGroupoid {
            n: n as usize,
            t: t.rem_euclid(n) as usize,
            u: u.rem_euclid(n) as usize,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn u(&self) -> usize {
        self.u
    }

    /// `(t*a + u*b) mod n`, rejecting operands outside `0..n`.
    pub fn apply(&self, a: usize, b: usize) -> Result<usize> {
        for operand in [a, b] {
            if operand >= self.n {
                return Err(Error::OperandOutOfRange { operand, n: self.n });
            }
        }
        Ok(self.op(a, b))
    }

    pub fn cayley_table(&self) -> CayleyTable {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for a in 0..n {
            let left = (self.t * a) % n;
            let mut cell = left;
            for _ in 0..n {
                entries.push(cell as u32);
                cell += self.u;
                if cell >= n {
                    cell -= n;
                }
            }
        }
        CayleyTable { n, entries }
    }
}

impl Magma for ModGroupoid {
    #[inline]
    fn order(&self) -> usize {
        self.n
    }

    #[inline]
    fn op(&self, a: usize, b: usize) -> usize {
        // n <= u32::MAX keeps each product below 2^64.
        let n = self.n as u64;
        let left = (self.t as u64 * a as u64) % n;
        let right = (self.u as u64 * b as u64) % n;
        ((left + right) % n) as usize
    }
}

impl fmt::Display for ModGroupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}({},{})", self.n, self.t, self.u)
    }
}

/// An explicit `n x n` operation table, row-major, `entry(a, b) = a * b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    n: usize,
    entries: Vec<u32>,
}

impl CayleyTable {
    /// Validates that `rows` is non-empty, square, and closed over `0..n`.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        if n > ModGroupoid::MAX_ORDER {
            return Err(Error::ModulusTooLarge(n as i128));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (row, cells) in rows.iter().enumerate() {
            let cells = cells.as_ref();
            if cells.len() != n {
                return Err(Error::NotSquare {
                    row,
                    len: cells.len(),
                    n,
                });
            }
            for (col, &value) in cells.iter().enumerate() {
                if value >= n {
                    return Err(Error::EntryOutOfRange { row, col, value, n });
                }
                entries.push(value as u32);
            }
        }
        Ok(CayleyTable { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.n + b] as usize
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.entries[a * self.n..(a + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.entries.chunks_exact(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.rows()
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }
}

impl Magma for CayleyTable {
    #[inline]
    fn order(&self) -> usize {
        self.n
    }

    #[inline]
    fn op(&self, a: usize, b: usize) -> usize {
        self.get(a, b)
    }
}

/// Operation-table layout with the left operand down the side:
///
/// ```text
/// * | 0 1 2
/// --+------
/// 0 | 0 1 2
/// 1 | 2 0 1
/// 2 | 1 2 0
/// ```
impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = (self.n - 1).to_string().len();
        write!(f, "{:>w$} |", "*")?;
        for b in 0..self.n {
            write!(f, " {b:>w$}")?;
        }
        writeln!(f)?;
        writeln!(f, "{}+{}", "-".repeat(w + 1), "-".repeat((w + 1) * self.n))?;
        for (a, row) in self.rows().enumerate() {
            write!(f, "{a:>w$} |")?;
            for cell in row {
                write!(f, " {cell:>w$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
