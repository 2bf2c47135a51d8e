use crate::error::{Error, Result};

/// Smallest grid accepted by the problem builders.
pub const MIN_GRID_POINTS: usize = 64;

/// Uniform grid of `n` points on `[a, b]`, endpoints included.
///
/// The endpoints carry Dirichlet walls; unknowns live on the `n - 2`
/// interior points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    pub a: f64,
    pub b: f64,
    pub n: usize,
}

impl Grid1D {
    pub fn new(a: f64, b: f64, n: usize) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && b > a) {
            return Err(Error::InvalidGrid(format!("need finite a < b, got [{a}, {b}]")));
        }
        if n < 3 {
            return Err(Error::InvalidGrid(format!("need at least 3 points, got {n}")));
        }
        Ok(Self { a, b, n })
    }

    pub fn h(&self) -> f64 {
        (self.b - self.a) / (self.n - 1) as f64
    }

    /// Coordinate of grid point `i` (0 and `n - 1` are the walls).
    pub fn x(&self, i: usize) -> f64 {
        if i + 1 == self.n {
            self.b
        } else {
            self.a + i as f64 * self.h()
        }
    }

    pub fn interior_len(&self) -> usize {
        self.n - 2
    }

    pub fn interior(&self) -> Vec<f64> {
        (1..self.n - 1).map(|i| self.x(i)).collect()
    }

    /// Grid with the spacing halved over the same interval.
    pub fn refined(&self) -> Grid1D {
        Grid1D { a: self.a, b: self.b, n: 2 * self.n - 1 }
    }
}

/// Origin of a Dirichlet wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Wall {
    /// the domain is infinite on this side and was cut off
    Truncation,
    /// the domain genuinely ends here (axis crossing, pole)
    Physical,
}

/// `-(1/eta) y'' + V(x) y = E y` on a grid with Dirichlet walls.
#[derive(Debug, Clone, PartialEq)]
pub struct EffectiveProblem1D {
    pub grid: Grid1D,
    /// `V_eff` at the interior points
    pub potential: Vec<f64>,
    /// sign of the kinetic term
    pub eta: i8,
    pub ell: f64,
    /// `w` with `chi = y w`, at the interior points
    pub weight: Vec<f64>,
    pub walls: [Wall; 2],
}

impl EffectiveProblem1D {
    pub fn new(
        grid: Grid1D,
        potential: Vec<f64>,
        eta: i8,
        ell: f64,
        weight: Vec<f64>,
        walls: [Wall; 2],
    ) -> Result<Self> {
        let m = grid.interior_len();
        if potential.len() != m || weight.len() != m {
            return Err(Error::InvalidGrid(format!(
                "expected {m} interior samples, got {} potential / {} weight",
                potential.len(),
                weight.len()
            )));
        }
        if eta != 1 && eta != -1 {
            return Err(Error::InvalidArgument(format!("eta must be +1 or -1, got {eta}")));
        }
        if let Some(i) = potential.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidGrid(format!("potential is not finite at x = {}", grid.x(i + 1))));
        }
        if let Some(i) = weight.iter().position(|w| !(w.is_finite() && *w > 0.0)) {
            return Err(Error::InvalidGrid(format!("weight is not positive at x = {}", grid.x(i + 1))));
        }
        Ok(Self { grid, potential, eta, ell, weight, walls })
    }

    /// Problem with unit weight, sampling `v` at the interior points.
    pub fn from_fn(grid: Grid1D, eta: i8, ell: f64, walls: [Wall; 2], v: impl Fn(f64) -> f64) -> Result<Self> {
        let potential = grid.interior().into_iter().map(v).collect();
        let weight = vec![1.0; grid.interior_len()];
        Self::new(grid, potential, eta, ell, weight, walls)
    }

    pub fn kinetic_coefficient(&self) -> f64 {
        1.0 / f64::from(self.eta)
    }

    /// `min eta V` over the truncation walls, `+inf` without any.
    pub fn continuum_floor(&self) -> f64 {
        let eta = f64::from(self.eta);
        let mut floor = f64::INFINITY;
        if self.walls[0] == Wall::Truncation {
            floor = floor.min(eta * self.potential[0]);
        }
        if self.walls[1] == Wall::Truncation {
            floor = floor.min(eta * self.potential[self.potential.len() - 1]);
        }
        floor
    }
}
