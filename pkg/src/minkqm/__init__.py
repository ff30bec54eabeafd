"""Surfaces in 3D Minkowski space and the quantum mechanics of particles confined to them."""

__version__ = "0.1.0"

from .lorentz import (
    CausalClass,
    MinkVector,
    Signature2,
    SignatureLabel,
    classify_signature,
    classify_vector,
    lorentz_cross,
    lorentz_inner,
)
from .revolution import (
    EffectiveProblem1D,
    FamilyTag,
    GridSpec,
    ProfileCurve,
    RevolutionFamily,
    angular_mode,
    build_family,
    closed_form_curvatures,
    curve_1d_potential,
    effective_problem,
)
from .surface import (
    SurfaceChart,
    first_fundamental_form,
    geometric_potential,
    shape_data,
    tubular_metric,
    unit_normal,
)
