"""
Configuration for cpdyn, read from the packaged info.json.

The Info object gathers every numerical tolerance, default run parameter and CSV column layout used by the library,
the verification suites and the command line. A single module-level instance, info, is loaded on import.

General Documentation:
    Tolerances are absolute unless stated otherwise in the function using them. Exact (Fraction) computations ignore
    tolerances entirely.
"""

import json

from importlib.resources import files


# ======================== CLASSES =====================================================================================
class Tolerances:
    """
    Class storing the numerical tolerances used for float comparisons.
    """

    def __init__(self, float_equal: float, branch: float, all_related: float, parabolic: float, tangency: float,
                 conservation: float, finite_difference_step: float, finite_difference: float, omega_pullback: float,
                 period: float, flow_drift: float) -> None:
        self.float_equal = float_equal
        self.branch = branch
        self.all_related = all_related
        self.parabolic = parabolic
        self.tangency = tangency
        self.conservation = conservation
        self.finite_difference_step = finite_difference_step
        self.finite_difference = finite_difference
        self.omega_pullback = omega_pullback
        self.period = period
        self.flow_drift = flow_drift

    def __str__(self) -> str:
        return f'Tolerances object with float equality {self.float_equal}'

    @classmethod
    def from_json(cls, data):
        """
        Converts dictionary from JSON read to object.
        Args:
            data: The dictionary.

        Returns:
            The object.

        """
        return cls(**data)


class Defaults:
    """
    Class storing default run parameters: seed, trial count, scalar backend and the parameters of the flow, orbit and
    grid computations.
    """

    def __init__(self, seed: int, trials: int, backend: str, c: float, rejection_limit: int, blowup: float,
                 coordinate_range: int, flow_T: float, flow_dt: float, max_period: int, level_values: list[float],
                 grid_size: int) -> None:
        self.seed = seed
        self.trials = trials
        self.backend = backend
        self.c = c
        self.rejection_limit = rejection_limit
        self.blowup = blowup
        self.coordinate_range = coordinate_range
        self.flow_T = flow_T
        self.flow_dt = flow_dt
        self.max_period = max_period
        self.level_values = level_values
        self.grid_size = grid_size

    def __str__(self) -> str:
        return f'Defaults object with seed {self.seed} and backend \'{self.backend}\''

    @classmethod
    def from_json(cls, data):
        """
        Converts dictionary from JSON read to object.
        Args:
            data: The dictionary.

        Returns:
            The object.

        """
        return cls(**data)


class Info:
    """
    Class storing all configuration: tolerances, defaults, CSV column layouts and the names of the verification suites.
    """

    def __init__(self, tolerances: Tolerances, defaults: Defaults, csv: dict[str, list[str]],
                 suites: list[str]) -> None:
        self.tolerances = tolerances
        self.defaults = defaults
        self.csv = csv
        self.suites = suites

    def __str__(self) -> str:
        return f'Info object with suites {", ".join(self.suites)}'

    @classmethod
    def from_json(cls, data):
        """
        Converts dictionary from JSON read to object.
        Args:
            data: The dictionary.

        Returns:
            The object.

        """
        return cls(Tolerances.from_json(data['tolerances']), Defaults.from_json(data['defaults']), data['csv'],
                   data['suites'])


# ======================== CONSTANTS AND GLOBALS  ======================================================================
def init_load_info() -> Info:
    """
    Loads configuration from the info.json file.

    Returns:
        The Info object.

    """
    return Info.from_json(json.loads(files('cpdyn').joinpath('info.json').read_text()))


info = init_load_info()
