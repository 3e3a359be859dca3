from .config import *
from .errors import *
from .core_polygon import *
from .sampling import *
from .lax_crelation import *
from .integrals_flow import *
from .recutting import *
from .symplectic_center import *
from .smallgons import *
from .verify import *
