"""palinkit: palindromic-length toolkit.

Words, periods, the eertree, per-prefix palindromic lengths with minimal
factorization enumeration, the palindromic-prefix density scanner, and
exhaustive checkers for the periodic-palindrome statements, served over a
small HTTP API with a thin CLI.
"""

__version__ = "0.1.0"

from .words import (  # noqa: F401
    Alphabet,
    BINARY,
    Word,
    empty_word,
    enumerate_factors,
    factor,
    is_palindrome,
    palindromic_prefixes,
    reverse,
)
from .periodicity import (  # noqa: F401
    PeriodDecomposition,
    PeriodEntry,
    border_array,
    decompose_periodic_palindrome,
    min_period,
    period_from_palindromic_affix,
    period_set,
)
from .eertree import Eertree, EertreeNode  # noqa: F401
from .palen import (  # noqa: F401
    Factorization,
    PLProfile,
    check_mpf_infix,
    check_palindrome_append,
    check_subadditivity,
    check_triangle,
    mpf_enumerate,
    pl_oracle,
    pl_oracle_prefixes,
    pl_profile_fast,
)
from .omega import (  # noqa: F401
    OmegaMember,
    OmegaReport,
    PeriodicPalPrefix,
    extract_periodic_prefix,
    hunt_periodic_palindromes,
    omega_member,
    scan_omega,
    tau,
)
from .delta import (  # noqa: F401
    CentralWitness,
    DeltaQuad,
    check_dvd_factor,
    check_main_theorem,
    delta_check,
    delta_conditions,
    delta_enumerate,
    find_central_palindrome,
    verify_quad,
)
from .wordgen import (  # noqa: F401
    Morphism,
    WordFamily,
    fibonacci_prefix,
    mechanical_prefix,
    morphic_prefix,
    parse_family,
    periodic_prefix,
    thue_morse_prefix,
)
from .errors import (  # noqa: F401
    AlphabetError,
    FalsificationError,
    PalinkitError,
    PreconditionError,
    ResourceLimitError,
    WordRangeError,
)
