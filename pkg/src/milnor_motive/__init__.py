"""Motivic Milnor fiber, Hodge spectrum and monodromy of irreducible plane curve singularities."""

from ._ring import L, LaurentL, SpectrumElem
from .monodromy import (
    CycloProduct,
    DensePoly,
    charpoly_torus,
    expand,
    milnor_number,
    monodromy_recursion,
    root_multiplicity,
    substitute,
)
from .motive import (
    POINT,
    FermatClass,
    MotiveExpr,
    MuRoots,
    Point,
    base_case_motive,
    motivic_milnor_fiber,
    theorem1_step,
)
from .puiseux import (
    ExponentError,
    ExponentList,
    ExponentTower,
    LevelData,
    decompose,
    derive,
    newton_data,
    parse_exponents,
)
from .spectrum import (
    guibert_sp_f1,
    sp_fermat,
    sp_mu_L,
    spectrum_via_motive,
    spectrum_via_process,
    torus_knot_spectrum,
)

__all__ = [
    "L", "LaurentL", "SpectrumElem",
    "CycloProduct", "DensePoly", "charpoly_torus", "expand", "milnor_number",
    "monodromy_recursion", "root_multiplicity", "substitute",
    "POINT", "FermatClass", "MotiveExpr", "MuRoots", "Point",
    "base_case_motive", "motivic_milnor_fiber", "theorem1_step",
    "ExponentError", "ExponentList", "ExponentTower", "LevelData",
    "decompose", "derive", "newton_data", "parse_exponents",
    "guibert_sp_f1", "sp_fermat", "sp_mu_L", "spectrum_via_motive",
    "spectrum_via_process", "torus_knot_spectrum",
]
