"""
Exception classes for cpdyn.

Every error raised by the library derives from CpdynError, itself a ValueError, so callers that only care about bad
input can keep catching ValueError. Each class carries a module-qualified code which the command line prints before
exiting with a nonzero status.

General Documentation:
    Codes are formatted as '<module>.<Name>', such as 'core_polygon.DegeneratePolygon'. The class name is the code
    name with an 'Error' suffix.
"""

from typing import Optional


# ======================== CLASSES =====================================================================================
class CpdynError(ValueError):
    """
    Base class of all cpdyn errors.
    """
    code = 'cpdyn.Error'

    def __init__(self, message: str, index: Optional[int] = None) -> None:
        super().__init__(message)
        self.index = index

    def __str__(self) -> str:
        message = super().__str__()
        if self.index is None:
            return message
        return f'{message} (index {self.index})'


# core_polygon
class DegeneratePolygonError(CpdynError):
    code = 'core_polygon.DegeneratePolygon'


class FrameMismatchError(CpdynError):
    code = 'core_polygon.FrameMismatch'


class IndexOrderError(CpdynError):
    code = 'core_polygon.IndexOrder'


class WrongArityError(CpdynError):
    code = 'core_polygon.WrongArity'


# lax_crelation
class CollinearPairError(CpdynError):
    code = 'lax_crelation.CollinearPair'


class ZeroCError(CpdynError):
    code = 'lax_crelation.ZeroC'


class BranchLostError(CpdynError):
    code = 'lax_crelation.BranchLost'


class NoRealPartnerError(CpdynError):
    code = 'lax_crelation.NoRealPartner'


class NotClosedChainError(CpdynError):
    code = 'lax_crelation.NotClosedChain'


class SingularCompletionError(CpdynError):
    code = 'lax_crelation.SingularCompletion'


class NotRelatedError(CpdynError):
    code = 'lax_crelation.NotRelated'


# integrals_flow
class SingularSpectralError(CpdynError):
    code = 'integrals_flow.SingularSpectral'


class EvenArityError(CpdynError):
    code = 'integrals_flow.EvenArity'


class StepBlowupError(CpdynError):
    code = 'integrals_flow.StepBlowup'


# recutting
class DegenerateDiagonalError(CpdynError):
    code = 'recutting.DegenerateDiagonal'


# symplectic_center
class NotTangentError(CpdynError):
    code = 'symplectic_center.NotTangent'


class SingularSystemError(CpdynError):
    code = 'symplectic_center.SingularSystem'


# smallgons
class DegenerateQuadError(CpdynError):
    code = 'smallgons.DegenerateQuad'


class FitSingularError(CpdynError):
    code = 'smallgons.FitSingular'


class ChartSingularError(CpdynError):
    code = 'smallgons.ChartSingular'


# cli_harness
class ExhaustedRejectionError(CpdynError):
    code = 'cli_harness.ExhaustedRejection'
