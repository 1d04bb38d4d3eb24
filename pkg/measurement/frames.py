"""
Mapping between raw complex gamma and the canonical real problem.

For gamma = |gamma| e^{i theta}, relabelling b2 = e^{-i theta} a2 gives
Z = a1 + |gamma| b2^dagger, so mode 2 is rotated by -theta. When |gamma| > 1,
Z = |gamma| (b2 + a1^dagger/|gamma|)^dagger: modes 1 and 2 swap roles,
the canonical gamma is 1/|gamma| and raw outcomes are tau = |gamma| conj(tau').
"""

from dataclasses import replace

from measurement.types import GridSpec, IntrinsicMoments, MomentReport, OutcomeGrid, Preparation, QuadratureMoments
from network.types import GammaParam
from states.functions import rotate


class CanonicalFrame:
    """Translate preparations, grids and moments between raw and canonical gamma."""

    def __init__(self, param: GammaParam):
        self.param = param

    @property
    def gamma(self) -> float:
        return self.param.reduced

    @property
    def swapped(self) -> bool:
        return self.param.swapped

    def preparation(self, prep: Preparation) -> Preparation:
        rho2 = rotate(prep.rho2, -self.param.phase)
        if self.swapped:
            return Preparation(rho1=rho2, rho2=prep.rho1, sigma=prep.sigma)
        return Preparation(rho1=prep.rho1, rho2=rho2, sigma=prep.sigma)

    def grid_spec_to_canonical(self, spec: GridSpec) -> GridSpec:
        if not self.swapped:
            return spec
        s = self.param.scale
        return replace(spec, x_min=spec.x_min / s, x_max=spec.x_max / s,
                       y_min=-spec.y_max / s, y_max=-spec.y_min / s)

    def grid_to_raw(self, grid: OutcomeGrid) -> OutcomeGrid:
        if not self.swapped:
            return grid
        s = self.param.scale
        spec = replace(grid.spec, x_min=s * grid.x_min, x_max=s * grid.x_max,
                       y_min=-s * grid.y_max, y_max=-s * grid.y_min)
        return OutcomeGrid(
            spec=spec,
            density=grid.density[:, ::-1] / s ** 2,
            raw_minimum=grid.raw_minimum / s ** 2,
            imag_residue=grid.imag_residue / s ** 2,
            source=grid.source,
        )

    def moments_to_raw(self, moments: QuadratureMoments) -> QuadratureMoments:
        if not self.swapped:
            return moments
        s = self.param.scale
        return QuadratureMoments(
            mean_q1=s * moments.mean_q1,
            mean_p2=-s * moments.mean_p2,
            var_q1=s ** 2 * moments.var_q1,
            var_p2=s ** 2 * moments.var_p2,
            cov=-s ** 2 * moments.cov,
        )

    def report_to_raw(self, report: MomentReport) -> MomentReport:
        if not self.swapped:
            return report
        return replace(
            report,
            predicted=self.moments_to_raw(report.predicted) if report.predicted else None,
            measured=self.moments_to_raw(report.measured) if report.measured else None,
            intrinsic=self._intrinsic_to_raw(report.intrinsic) if report.intrinsic else None,
        )

    def _intrinsic_to_raw(self, intrinsic: IntrinsicMoments) -> IntrinsicMoments:
        s_sq = self.param.scale ** 2
        return IntrinsicMoments(
            var_x=s_sq * intrinsic.var_x,
            var_y=s_sq * intrinsic.var_y,
            cov_xy=-s_sq * intrinsic.cov_xy,
            commutator=s_sq * intrinsic.commutator,
        )
