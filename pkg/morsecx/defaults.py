# maximum number of gradient vector fields produced by an enumeration
DEFAULT_GVF_BUDGET = 5_000_000

# maximum number of group elements produced by an automorphism search
DEFAULT_GROUP_BUDGET = 10**7

DEFAULT_NWORKERS = 1
