import numpy as np

# the check could not be run because a prerequisite is unavailable
NO_ATTEMPT = 2**0
BUDGET_EXCEEDED = 2**1
ORDER_MISMATCH = 2**2
NOT_HOMOMORPHISM = 2**3
NOT_INJECTIVE = 2**4
NOT_SURJECTIVE = 2**5
FACES_NOT_PRESERVED = 2**6
NOT_INVOLUTION = 2**7
NOT_COMMUTING = 2**8

# the reflection-induced map coincides with a simplicially induced map
GHOST_INDUCED = 2**9

NO_ISOMORPHISM = 2**10
ORBIT_MISMATCH = 2**11
NOT_COSIMPLICIAL = 2**12
LAYER_MISMATCH = 2**13
ORACLE_MISMATCH = 2**14

NAME_MAP = {
    NO_ATTEMPT: 'no attempt',
    BUDGET_EXCEEDED: 'budget exceeded',
    ORDER_MISMATCH: 'group orders differ',
    NOT_HOMOMORPHISM: 'map is not a homomorphism',
    NOT_INJECTIVE: 'map is not injective',
    NOT_SURJECTIVE: 'map is not surjective',
    FACES_NOT_PRESERVED: 'face set not preserved',
    NOT_INVOLUTION: 'map is not an involution',
    NOT_COMMUTING: 'maps do not commute',
    GHOST_INDUCED: 'ghost map is simplicially induced',
    NO_ISOMORPHISM: 'no isomorphism found',
    ORBIT_MISMATCH: 'orbit or stabilizer size mismatch',
    NOT_COSIMPLICIAL: 'map does not reverse inclusion',
    LAYER_MISMATCH: 'layer sizes or degrees differ',
    ORACLE_MISMATCH: 'gradient test disagrees with V-path search',
}


def get_flags_str(val, name_map=None):
    """Get a descriptive string given a flag value.

    Parameters
    ----------
    val : int
        The flag value. This must be non-negative.
    name_map : dict, optional
        A dictionary mapping values to names. Default is global at
        morsecx.flags.NAME_MAP.

    Returns
    -------
    flagstr : str
        A string of descriptions for each bit separated by `|`.
    """
    if name_map is None:
        name_map = NAME_MAP

    if val < 0:
        raise ValueError(f"Flag value {val} must be non-negative.")

    # all defined flags fit in 32 bits; higher bits are dropped by the cast
    val = np.array(val, dtype=np.uint32)

    nstrs = []
    for pow in range(31):
        fval = 2**pow
        if ((val & fval) != 0):
            if fval in name_map:
                nstrs.append(name_map[fval])
            else:
                nstrs.append("bit 2**%d" % pow)
    return "|".join(nstrs)
