use specfun::LogScaled;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    Interior,
    Exterior,
}

/// One region's solution of the radial Fock recurrence.
///
/// For `w > 0`, `coeff_a` multiplies the Laguerre (J) branch and `coeff_b`
/// the cut Re U (Y) branch. For `w < 0`, with `x = -w`, `coeff_a` multiplies
/// the growing Laguerre (I) branch and `coeff_b` the decaying U (K) branch.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegionSolution {
    pub region: Region,
    pub w: f64,
    pub coeff_a: LogScaled,
    pub coeff_b: LogScaled,
}

impl RegionSolution {
    pub fn new(region: Region, w: f64, coeff_a: LogScaled, coeff_b: LogScaled) -> Self {
        RegionSolution { region, w, coeff_a, coeff_b }
    }

    /// Regular solution with unit amplitude.
    pub fn regular(region: Region, w: f64) -> Self {
        Self::new(region, w, LogScaled::ONE, LogScaled::ZERO)
    }
}
