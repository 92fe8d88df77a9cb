from .regex import *
from .automata import (
    Dfa,
    Nfa,
    accepted_words,
    compile_regex,
    complement,
    dfa_to_regex,
    difference,
    equivalent,
    intersection,
    is_empty,
    product,
    run,
    subset_construct,
    symmetric_difference,
    thompson_nfa,
    union,
)
from .minimization import (
    class_representatives,
    distinguishing_extension,
    minimize,
    mn_index,
    state_distinguisher,
)
from .formats import DfaFormatError, dumps_dfa, loads_dfa, read_dfa, to_dot, write_dfa
from .zoo import LanguageOracle, OracleName, PrimeSet, divisibility_dfa, prime_union_dfa, resolve_oracle
from .nonregularity import (
    EvidenceReport,
    ObservationTable,
    Verdict,
    class_count_series,
    observation_table,
    primes_demo,
    unary_periodicity_check,
)
from .client import LanguageClient, ToolkitSettings

__version__ = "0.1.0"
