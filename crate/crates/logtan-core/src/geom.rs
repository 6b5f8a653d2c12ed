//! Closed-form cohomology of line bundles on the projective bundle
//! `T = P(O_{P2}(1) ⊕ O_{P2})`, Euler characteristics on the degree-n
//! surface via its defining four-term sequence, and the small Diophantine
//! system classifying divisor classes of double covers.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::CoreError;

/// `h^0(P², O(m)) = C(m+2, 2)` for `m >= 0`.
pub fn p2_h0(m: i64) -> u64 {
    if m >= 0 {
        ((m + 1) * (m + 2) / 2) as u64
    } else {
        0
    }
}

/// `h^2(P², O(m)) = C(-m-1, 2)` for `m <= -3`; `h^1` always vanishes.
pub fn p2_h2(m: i64) -> u64 {
    if m <= -3 {
        ((-m - 1) * (-m - 2) / 2) as u64
    } else {
        0
    }
}

/// `χ(P², O(m)) = (m+1)(m+2)/2` (valid for every integer m).
pub fn p2_chi(m: i64) -> i64 {
    (m + 1) * (m + 2) / 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CohomVector {
    pub i: i64,
    pub j: i64,
    /// `k -> h^k`, zeros omitted; supported in `0..=3`.
    pub dims: BTreeMap<u32, u64>,
}

impl CohomVector {
    pub fn h(&self, k: u32) -> u64 {
        self.dims.get(&k).copied().unwrap_or(0)
    }

    pub fn chi(&self) -> i64 {
        self.dims
            .iter()
            .map(|(&k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// Cohomology of `O_T(i·h + j·l)` where `h` is the tautological class and
/// `l` the pullback of a line: pushforward gives `⊕_{u=0..i} O_{P2}(j+u)`
/// for `i >= 0`, zero for `i = -1`, and for `i <= -2` the first derived
/// pushforward contributes `⊕_{u=i+1..-1} O_{P2}(j+u)` with a degree
/// shift of one.
pub fn cohom_t(i: i64, j: i64) -> CohomVector {
    let mut dims: BTreeMap<u32, u64> = BTreeMap::new();
    let mut add = |k: u32, v: u64| {
        if v > 0 {
            *dims.entry(k).or_insert(0) += v;
        }
    };
    if i >= 0 {
        for u in 0..=i {
            add(0, p2_h0(j + u));
            add(2, p2_h2(j + u));
        }
    } else if i <= -2 {
        for u in (i + 1)..=-1 {
            add(1, p2_h0(j + u));
            add(3, p2_h2(j + u));
        }
    }
    CohomVector { i, j, dims }
}

/// `χ(O_T(i·h + j·l))` as exact integer arithmetic; agrees with
/// `cohom_t(i, j).chi()` and is polynomial in `(i, j)`.
pub fn chi_t(i: i64, j: i64) -> i64 {
    if i >= 0 {
        (0..=i).map(|u| p2_chi(j + u)).sum()
    } else if i == -1 {
        0
    } else {
        -((i + 1)..=-1).map(|u| p2_chi(j + u)).sum::<i64>()
    }
}

/// `χ(O_S(h + i·h + j·l))` on the degree-n surface, via the four-term
/// sequence `0 → O_T((1-n)l - h) ⊕ O_T(l - h) → O_T(l) ⊕ O_T → O_S(h) → 0`
/// twisted by `O_T(i·h + j·l)`.
pub fn euler_s_h_twist(n: i64, i: i64, j: i64) -> Result<i64, CoreError> {
    if n < 1 {
        return Err(CoreError::Invalid("n must be at least 1".into()));
    }
    Ok(chi_t(i, j + 1) + chi_t(i, j) - chi_t(i - 1, j + 1 - n) - chi_t(i - 1, j + 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CoverSolution {
    pub x: i64,
    pub y: i64,
    pub nontrivial: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CoverSolutionSet {
    pub n: i64,
    pub solutions: Vec<CoverSolution>,
}

/// All integer solutions of `x·C(n,2) + y·n = C(n,2)`, `y >= 0`,
/// `y >= (1-n)x`: the constraints force `x ∈ {-1, 0, 1}`, and the
/// solutions with `x != 0` are exactly `(1, 0)` and `(-1, n-1)`.  For odd
/// n the raw system also admits `(0, (n-1)/2)`; it is surfaced with
/// `nontrivial: false` rather than dropped.
pub fn cover_solutions(n: i64) -> Result<CoverSolutionSet, CoreError> {
    if n < 3 {
        return Err(CoreError::Invalid("n must be at least 3".into()));
    }
    let c = n * (n - 1) / 2;
    let mut solutions = Vec::new();
    // y >= 0 forces x <= 1; y >= (1-n)x forces x >= -1.
    for x in -1..=1i64 {
        let rhs = c * (1 - x);
        if rhs % n != 0 {
            continue;
        }
        let y = rhs / n;
        if y >= 0 && y >= (1 - n) * x {
            solutions.push(CoverSolution {
                x,
                y,
                nontrivial: x != 0,
            });
        }
    }
    Ok(CoverSolutionSet { n, solutions })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cohom_t_basics() {
        let v = cohom_t(0, 0);
        assert_eq!(v.h(0), 1);
        assert_eq!(v.dims.len(), 1);
        for j in -5..=5 {
            assert!(cohom_t(-1, j).dims.is_empty());
        }
        // h^0 of the tautological class: 1 + 3 = 4.
        let w = cohom_t(1, 0);
        assert_eq!(w.h(0), 4);
        assert_eq!(w.dims.len(), 1);
        // A deep negative twist lands in top degree only.
        let d = cohom_t(-2, -3);
        assert_eq!(d.h(3), p2_h2(-4));
        assert_eq!(d.dims.len(), 1);
    }

    #[test]
    fn chi_matches_dimension_sum() {
        for i in -6..=6 {
            for j in -6..=6 {
                assert_eq!(chi_t(i, j), cohom_t(i, j).chi(), "({i},{j})");
            }
        }
    }

    #[test]
    fn chi_is_cubic_polynomial() {
        // chi agrees with its degree-<=3 interpolation from a 4x4 grid,
        // tested on a larger grid.
        // Lagrange interpolation over nodes 0..3 in each variable.
        let node = |i: i64, j: i64| chi_t(i, j);
        let lagrange = |x: i64, k: i64| -> f64 {
            let mut v = 1.0;
            for m in 0..4 {
                if m != k {
                    v *= (x - m) as f64 / (k - m) as f64;
                }
            }
            v
        };
        for x in -4..=6i64 {
            for y in -4..=6i64 {
                let mut acc = 0.0;
                for a in 0..4 {
                    for b in 0..4 {
                        acc += node(a, b) as f64 * lagrange(x, a) * lagrange(y, b);
                    }
                }
                assert!(
                    (acc - chi_t(x, y) as f64).abs() < 1e-6,
                    "({x},{y}): {acc} vs {}",
                    chi_t(x, y)
                );
            }
        }
    }

    #[test]
    fn euler_on_surface() {
        // chi of the structure sheaf, n = 2: the blown-up plane gives 1.
        assert_eq!(euler_s_h_twist(2, -1, 0).unwrap(), 1);
        // The four-term sequence, taken literally, yields
        // 1 + C(n-1, 2) for the structure sheaf: 2 at n = 3.  (A divisor
        // in |h + c·l| would give 1 for every n; the sequence is
        // evaluated exactly as stated, not repaired.)
        assert_eq!(euler_s_h_twist(3, -1, 0).unwrap(), 2);
        for n in 2..=8 {
            assert_eq!(
                euler_s_h_twist(n, -1, 0).unwrap(),
                1 + (n - 1) * (n - 2) / 2,
                "n={n}"
            );
        }
        // chi of the hyperplane-pullback class: 4 sections for n = 3.
        assert_eq!(euler_s_h_twist(3, 0, 0).unwrap(), 4);
    }

    #[test]
    fn chi_t_serre_duality() {
        // K_T = -2h - 2l; on the threefold chi(D) = -chi(K - D).
        for i in -5..=5i64 {
            for j in -5..=5i64 {
                assert_eq!(chi_t(i, j), -chi_t(-2 - i, -2 - j), "({i},{j})");
            }
        }
    }

    #[test]
    fn cover_solution_sets() {
        assert!(cover_solutions(2).is_err());
        let s4 = cover_solutions(4).unwrap();
        assert_eq!(
            s4.solutions,
            vec![
                CoverSolution { x: -1, y: 3, nontrivial: true },
                CoverSolution { x: 1, y: 0, nontrivial: true },
            ]
        );
        let s3 = cover_solutions(3).unwrap();
        assert_eq!(
            s3.solutions,
            vec![
                CoverSolution { x: -1, y: 2, nontrivial: true },
                CoverSolution { x: 0, y: 1, nontrivial: false },
                CoverSolution { x: 1, y: 0, nontrivial: true },
            ]
        );
        let s6 = cover_solutions(6).unwrap();
        assert_eq!(s6.solutions.len(), 2);
        for n in 3..=40i64 {
            let s = cover_solutions(n).unwrap();
            let nontrivial: Vec<(i64, i64)> = s
                .solutions
                .iter()
                .filter(|sol| sol.nontrivial)
                .map(|sol| (sol.x, sol.y))
                .collect();
            assert_eq!(nontrivial, vec![(-1, n - 1), (1, 0)], "n={n}");
            if n % 2 == 0 {
                assert_eq!(s.solutions.len(), 2, "even n={n}");
            }
            for sol in &s.solutions {
                assert_eq!(sol.x * n * (n - 1) / 2 + sol.y * n, n * (n - 1) / 2);
                assert!(sol.y >= 0 && sol.y >= (1 - n) * sol.x);
            }
        }
    }
}
