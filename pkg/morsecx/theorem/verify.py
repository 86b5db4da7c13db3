"""
End to end check of the automorphism classification of Morse complexes on a
given complex

Depending on the classification of K:

    other           |Aut(M(K))| = |Aut(H(K))| = |Aut(K)| and every
                    automorphism of M(K) is induced from K
    cycle C_n       H(C_n) is a 2n-cycle and |Aut(M(C_n))| = |Aut(C_2n)|
    boundary of
    the n-simplex   |Aut(M)| = 2 (n+1)!, generated by the induced maps and
                    the ghost map from reflection

In all cases the transport of Hasse automorphisms is compared with the
automorphisms of M(K) computed directly, when M(K) fits the budget.
"""
__all__ = ['verify_main_theorem', 'VerificationReport']
import json
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from sys import stdout
import numpy as np
import networkx as nx

from ..hasse import build_hasse, as_graph
from ..morse import (
    build_morse_complex,
    primitives,
    random_dvf,
    is_gradient_by_vpaths,
)
from ..autgroup import (
    Permutation,
    PermutationGroup,
    complex_automorphisms,
    graph_automorphisms,
    graph_isomorphism,
    is_homomorphism,
    is_injective,
    orbit,
    stabilizer_order,
)
from ..simplicial import classify, generate_cycle
from ..defaults import (
    DEFAULT_GVF_BUDGET,
    DEFAULT_GROUP_BUDGET,
    DEFAULT_NWORKERS,
)
from ..mexceptions import (
    BudgetExceeded,
    MorseFatalError,
    NonUniformLayerError,
)
from ..util import print_table
from .. import flags as mflags
from .maps import (
    phi_map,
    transport,
    transport_group,
    reflection_map,
    reflection_induced,
    preserves_faces,
)

logger = logging.getLogger(__name__)

# label of the checks whose conclusion rests on a result cited, not proved
EXTERNAL_BASIS = 'external-theorem-consistency'

# exhaustive pair checks of homomorphisms up to this group order
EXHAUSTIVE_HOM_ORDER = 1000


class VerificationReport(dict):
    """
    The result of verify_main_theorem.  This inherits from dict.

    The entries are
    ---------------
    classification: str
        e.g. 'Cycle(3)'
    checks: list of dict
        one entry per check with name, expected, actual, pass, flags,
        flagstr, and elapsed_ms when timings were requested
    overall: bool
        True if every check passed
    flags: int
        union of the flags of the failed checks
    flagstr: str
        Explanation of flags
    orders: dict
        |Aut(K)|, |Aut(H(K))| and |Aut(M(K))| under keys complex, hasse and
        morse, None where not computed
    via_hasse: bool
        True if Aut(M(K)) was obtained by transport from Aut(H(K)) instead
        of directly from M(K)
    partial: bool
        True if some check was not attempted or ran out of budget
    basis: str or None
        'external-theorem-consistency' for complexes that are neither cycles
        nor boundaries of simplices
    """
    def __init__(
        self, classification, checks, orders, via_hasse, basis=None,
    ):
        self['classification'] = repr(classification)
        self['checks'] = checks
        self['overall'] = all(check['pass'] for check in checks)

        flags = 0
        for check in checks:
            if not check['pass']:
                flags |= check['flags']
        self['flags'] = flags
        self['flagstr'] = mflags.get_flags_str(flags)

        self['orders'] = orders
        self['via_hasse'] = via_hasse
        self['partial'] = via_hasse or any(
            check['flags'] & (mflags.NO_ATTEMPT | mflags.BUDGET_EXCEEDED)
            for check in checks
        )
        self['basis'] = basis

    def get_failed(self):
        """
        get the checks that did not pass
        """
        return [check for check in self['checks'] if not check['pass']]

    def budget_exceeded(self):
        """
        True if some check ran out of budget
        """
        return any(
            check['flags'] & mflags.BUDGET_EXCEEDED
            for check in self['checks']
        )

    def to_json(self, indent=2):
        return json.dumps(self, indent=indent)

    def write_table(self, stream=stdout):
        """
        write a human readable table of the checks
        """
        orders = self['orders']
        stream.write('classification: %s\n' % self['classification'])
        stream.write('orders (complex, hasse, morse): (%s, %s, %s)\n' % (
            orders['complex'], orders['hasse'], orders['morse'],
        ))
        if self['via_hasse']:
            stream.write('Aut(M) obtained by transport from Aut(H)\n')
        if self['basis'] is not None:
            stream.write('basis: %s\n' % self['basis'])

        header = ['check', 'expected', 'actual', 'pass', 'flags']
        rows = []
        for check in self['checks']:
            rows.append([
                check['name'],
                check['expected'],
                check['actual'],
                'yes' if check['pass'] else 'NO',
                check['flagstr'],
            ])
            if 'elapsed_ms' in check:
                rows[-1].append('%.1f' % check['elapsed_ms'])
        if any('elapsed_ms' in check for check in self['checks']):
            header.append('ms')

        print_table(rows, header, stream=stream)
        stream.write('overall: %s\n' % ('pass' if self['overall'] else 'FAIL'))


def _order(group):
    return None if group is None else group.order


class _TheoremContext(object):
    """
    lazily computed groups and maps shared by the checks

    Each getter raises the BudgetExceeded of its computation, every time it
    is called, if that computation ran out of budget.
    """
    def __init__(self, K, budget, group_budget, via_hasse, nworkers):
        self.K = K
        self.budget = budget
        self.group_budget = group_budget
        self.force_via_hasse = via_hasse
        self.nworkers = nworkers
        self.cache = {}

        self.classification = classify(K)
        self.H = build_hasse(K)
        self.nprim = len(primitives(K))

    def _get(self, name, func):
        if name not in self.cache:
            try:
                self.cache[name] = (func(), None)
            except BudgetExceeded as err:
                logger.info('%s: %s', name, err)
                self.cache[name] = (None, err)

        value, err = self.cache[name]
        if err is not None:
            raise err
        return value

    def prefetch(self):
        """
        compute the independent groups concurrently
        """
        getters = [self.get_autK, self.get_autH, self.get_M]
        with ThreadPoolExecutor(max_workers=self.nworkers) as executor:
            futures = [executor.submit(self._quiet, g) for g in getters]
            for future in futures:
                future.result()

    def _quiet(self, getter):
        try:
            getter()
        except BudgetExceeded:
            pass

    def get_autK(self):
        return self._get(
            'autK',
            lambda: complex_automorphisms(self.K, budget=self.group_budget),
        )

    def get_autH(self):
        return self._get(
            'autH',
            lambda: graph_automorphisms(
                as_graph(self.H), budget=self.group_budget,
            ),
        )

    def get_M(self):
        """
        the Morse complex, or None if it is not computed directly
        """
        if self.force_via_hasse:
            return None
        try:
            return self._get(
                'M',
                lambda: build_morse_complex(
                    self.K, budget=self.budget, nworkers=self.nworkers,
                ),
            )
        except BudgetExceeded:
            return None

    @property
    def via_hasse(self):
        return self.get_M() is None

    def get_autM(self):
        M = self.get_M()
        if M is not None:
            return self._get(
                'autM',
                lambda: complex_automorphisms(M, budget=self.group_budget),
            )
        return self._get(
            'autM', lambda: transport_group(self.K, autH=self.get_autH()),
        )

    def get_transport_map(self):
        def _make():
            M = self.get_M()
            return {g: transport(g, self.K, M=M) for g in self.get_autH()}
        return self._get('transport', _make)

    def get_phi_map(self):
        return self._get(
            'phi_map', lambda: phi_map(self.K, autK=self.get_autK()),
        )

    def get_phi(self):
        return self._get(
            'phi',
            lambda: PermutationGroup(self.nprim, self.get_phi_map().values()),
        )

    def get_ghost(self):
        n = self.classification.n_boundary
        return self._get(
            'ghost',
            lambda: reflection_induced(n, K=self.K, check=False),
        )

    def get_autC2n(self):
        n = self.classification.n_cycle
        return self._get(
            'autC2n',
            lambda: complex_automorphisms(
                generate_cycle(2 * n), budget=self.group_budget,
            ),
        )


def _result(expected, actual, fail_flag):
    flags = 0 if expected == actual else fail_flag
    return expected, actual, flags


def _skipped():
    return None, None, mflags.NO_ATTEMPT


def _run_check(name, func, fatal_flag, timings):
    tm0 = time.time()
    try:
        expected, actual, flags = func()
    except BudgetExceeded as err:
        logger.info('check %s: %s', name, err)
        expected, actual, flags = None, None, mflags.BUDGET_EXCEEDED
    except MorseFatalError as err:
        logger.info('check %s: %s', name, err)
        expected, actual, flags = None, str(err.value), fatal_flag

    record = {
        'name': name,
        'expected': expected,
        'actual': actual,
        'pass': (flags & ~mflags.NO_ATTEMPT) == 0,
        'flags': flags,
        'flagstr': mflags.get_flags_str(flags),
    }
    if timings:
        record['elapsed_ms'] = (time.time() - tm0) * 1000.0

    logger.debug('check %s: %s', name, 'pass' if record['pass'] else 'FAIL')
    return record


def _common_checks(ctx):
    """
    checks run for every complex
    """
    def hasse_morse_order():
        if ctx.via_hasse:
            return _skipped()
        return _result(
            ctx.get_autH().order, ctx.get_autM().order, mflags.ORDER_MISMATCH,
        )

    def transport_bijection():
        if ctx.via_hasse:
            return _skipped()
        autM = ctx.get_autM()
        images = set(ctx.get_transport_map().values())
        flags = 0
        if len(images) != ctx.get_autH().order:
            flags |= mflags.NOT_INJECTIVE
        if images != set(autM):
            flags |= mflags.NOT_SURJECTIVE
        return autM.order, len(images & set(autM)), flags

    def phi_homomorphism():
        autK = ctx.get_autK()
        exhaustive = autK.order <= EXHAUSTIVE_HOM_ORDER
        ok = is_homomorphism(ctx.get_phi_map(), autK, exhaustive=exhaustive)
        return _result(True, ok, mflags.NOT_HOMOMORPHISM)

    def phi_injective():
        return _result(
            True, is_injective(ctx.get_phi_map()), mflags.NOT_INJECTIVE,
        )

    def phi_in_aut_morse():
        ok = ctx.get_phi().is_subgroup_of(ctx.get_autM())
        return _result(True, ok, mflags.FACES_NOT_PRESERVED)

    return [
        ('hasse-morse-order', hasse_morse_order, mflags.ORDER_MISMATCH),
        ('transport-bijection', transport_bijection,
         mflags.FACES_NOT_PRESERVED),
        ('phi-homomorphism', phi_homomorphism, mflags.NOT_HOMOMORPHISM),
        ('phi-injective', phi_injective, mflags.NOT_INJECTIVE),
        ('phi-in-aut-morse', phi_in_aut_morse, mflags.FACES_NOT_PRESERVED),
    ]


def _other_checks(ctx):
    prefix = EXTERNAL_BASIS + ':'

    def hasse_order():
        return _result(
            ctx.get_autK().order, ctx.get_autH().order, mflags.ORDER_MISMATCH,
        )

    def morse_order():
        if ctx.via_hasse:
            return _skipped()
        return _result(
            ctx.get_autK().order, ctx.get_autM().order, mflags.ORDER_MISMATCH,
        )

    def phi_onto():
        return _result(
            ctx.get_autM().order, ctx.get_phi().order, mflags.NOT_SURJECTIVE,
        )

    return [
        (prefix + 'hasse-order', hasse_order, mflags.ORDER_MISMATCH),
        (prefix + 'morse-order', morse_order, mflags.ORDER_MISMATCH),
        (prefix + 'phi-onto', phi_onto, mflags.NOT_SURJECTIVE),
    ]


def _cycle_checks(ctx):
    n = ctx.classification.n_cycle

    def hasse_isomorphism():
        bijection = graph_isomorphism(
            as_graph(ctx.H), nx.cycle_graph(2 * n), budget=ctx.group_budget,
        )
        return _result(True, bijection is not None, mflags.NO_ISOMORPHISM)

    def hasse_order():
        return _result(
            ctx.get_autC2n().order, ctx.get_autH().order,
            mflags.ORDER_MISMATCH,
        )

    def morse_order():
        if ctx.via_hasse:
            return _skipped()
        return _result(
            ctx.get_autC2n().order, ctx.get_autM().order,
            mflags.ORDER_MISMATCH,
        )

    checks = [
        ('cycle-hasse-isomorphism', hasse_isomorphism, mflags.NO_ISOMORPHISM),
        ('cycle-hasse-order', hasse_order, mflags.ORDER_MISMATCH),
        ('cycle-morse-order', morse_order, mflags.ORDER_MISMATCH),
    ]

    if n % 2 == 1:
        def odd_product_order():
            return _result(
                2 * ctx.get_autK().order, ctx.get_autM().order,
                mflags.ORDER_MISMATCH,
            )
        checks.append(
            ('cycle-odd-product-order', odd_product_order,
             mflags.ORDER_MISMATCH)
        )

    return checks


def _product_with_z2(autK):
    """
    Aut(K) x Z2 as a permutation group on the vertices plus two extra
    points, which the Z2 factor swaps

    Returns
    -------
    group, dict mapping each element to its (f, i) pair
    """
    nvert = autK.degree
    pairs = {}
    for f in autK:
        for i in (0, 1):
            tail = (nvert, nvert + 1) if i == 0 else (nvert + 1, nvert)
            pairs[Permutation(f.images + tail, check=False)] = (f, i)
    return PermutationGroup(nvert + 2, pairs.keys()), pairs


def _boundary_checks(ctx):
    n = ctx.classification.n_boundary
    order = 2 * math.factorial(n + 1)

    def layer_sizes():
        expected = [math.comb(n + 1, i + 1) for i in range(n)]
        return _result(
            expected, ctx.H.get_layer_sizes(), mflags.LAYER_MISMATCH,
        )

    def layer_degrees():
        expected = [n if i in (0, n - 1) else n + 1 for i in range(n)]
        try:
            actual = [ctx.H.get_layer_degree(i) for i in range(n)]
        except NonUniformLayerError:
            actual = 'non-uniform'
        return _result(expected, actual, mflags.LAYER_MISMATCH)

    def h0_orbit():
        layer0 = [int(v) for v in ctx.H.layers[0]]
        return _result(
            2, len(orbit(ctx.get_autH(), layer0)), mflags.ORBIT_MISMATCH,
        )

    def h0_stabilizer():
        autH = ctx.get_autH()
        layer0 = [int(v) for v in ctx.H.layers[0]]
        stab = stabilizer_order(autH, layer0)
        flags = 0
        if stab != math.factorial(n + 1):
            flags |= mflags.ORBIT_MISMATCH
        if stab * len(orbit(autH, layer0)) != autH.order:
            flags |= mflags.ORBIT_MISMATCH
        return math.factorial(n + 1), stab, flags

    def hasse_order():
        return _result(order, ctx.get_autH().order, mflags.ORDER_MISMATCH)

    def morse_order():
        if ctx.via_hasse:
            return _skipped()
        return _result(order, ctx.get_autM().order, mflags.ORDER_MISMATCH)

    def reflection_cosimplicial():
        reflection_map(ctx.K)
        return True, True, 0

    def ghost_involution():
        ghost = ctx.get_ghost()
        return _result(
            True, ghost.compose(ghost).is_identity(), mflags.NOT_INVOLUTION,
        )

    def ghost_preserves_faces():
        M = ctx.get_M()
        if M is None:
            return _skipped()
        return _result(
            True, preserves_faces(M, ctx.get_ghost()),
            mflags.FACES_NOT_PRESERVED,
        )

    def ghost_commutes():
        ghost = ctx.get_ghost()
        ok = all(
            g.compose(ghost) == ghost.compose(g) for g in ctx.get_phi()
        )
        return _result(True, ok, mflags.NOT_COMMUTING)

    def ghost_not_induced():
        return _result(
            False, ctx.get_ghost() in ctx.get_phi(), mflags.GHOST_INDUCED,
        )

    def _product_map():
        ghost = ctx.get_ghost()
        phi = ctx.get_phi_map()
        group, pairs = _product_with_z2(ctx.get_autK())
        mapping = {}
        for element, (f, i) in pairs.items():
            mapping[element] = phi[f].compose(ghost.power(i))
        return group, mapping

    def product_homomorphism():
        group, mapping = _product_map()
        exhaustive = group.order <= EXHAUSTIVE_HOM_ORDER
        ok = is_homomorphism(mapping, group, exhaustive=exhaustive)
        return _result(True, ok, mflags.NOT_HOMOMORPHISM)

    def product_bijective():
        _, mapping = _product_map()
        autM = ctx.get_autM()
        images = set(mapping.values())
        flags = 0
        if not is_injective(mapping):
            flags |= mflags.NOT_INJECTIVE
        if images != set(autM):
            flags |= mflags.NOT_SURJECTIVE
        return autM.order, len(images & set(autM)), flags

    def coset_cover():
        ghost = ctx.get_ghost()
        phi = set(ctx.get_phi())
        coset = set(g.compose(ghost) for g in phi)
        flags = 0
        if phi & coset:
            flags |= mflags.GHOST_INDUCED
        if phi | coset != set(ctx.get_autM()):
            flags |= mflags.NOT_SURJECTIVE
        return ctx.get_autM().order, len(phi | coset), flags

    return [
        ('boundary-layer-sizes', layer_sizes, mflags.LAYER_MISMATCH),
        ('boundary-layer-degrees', layer_degrees, mflags.LAYER_MISMATCH),
        ('boundary-h0-orbit', h0_orbit, mflags.ORBIT_MISMATCH),
        ('boundary-h0-stabilizer', h0_stabilizer, mflags.ORBIT_MISMATCH),
        ('boundary-hasse-order', hasse_order, mflags.ORDER_MISMATCH),
        ('boundary-morse-order', morse_order, mflags.ORDER_MISMATCH),
        ('reflection-cosimplicial', reflection_cosimplicial,
         mflags.NOT_COSIMPLICIAL),
        ('ghost-involution', ghost_involution, mflags.NOT_INVOLUTION),
        ('ghost-preserves-faces', ghost_preserves_faces,
         mflags.FACES_NOT_PRESERVED),
        ('ghost-commutes', ghost_commutes, mflags.NOT_COMMUTING),
        ('ghost-not-induced', ghost_not_induced, mflags.GHOST_INDUCED),
        ('ghost-product-homomorphism', product_homomorphism,
         mflags.NOT_HOMOMORPHISM),
        ('ghost-product-bijective', product_bijective,
         mflags.NOT_SURJECTIVE),
        ('ghost-coset-cover', coset_cover, mflags.NOT_SURJECTIVE),
    ]


def _both_checks(ctx):
    n_boundary = ctx.classification.n_boundary

    def orders_agree():
        return _result(
            ctx.get_autC2n().order, 2 * math.factorial(n_boundary + 1),
            mflags.ORDER_MISMATCH,
        )

    return [('both-orders-agree', orders_agree, mflags.ORDER_MISMATCH)]


def _oracle_checks(ctx, nsweep, seed):
    def oracle_sweep():
        rng = np.random.RandomState(seed)
        agree = 0
        for _ in range(nsweep):
            V = random_dvf(ctx.K, rng)
            if V.is_gradient() == is_gradient_by_vpaths(V):
                agree += 1
        return _result(nsweep, agree, mflags.ORACLE_MISMATCH)

    return [('oracle-sweep', oracle_sweep, mflags.ORACLE_MISMATCH)]


def verify_main_theorem(
    K,
    budget=DEFAULT_GVF_BUDGET,
    group_budget=DEFAULT_GROUP_BUDGET,
    via_hasse=False,
    nworkers=DEFAULT_NWORKERS,
    timings=False,
    oracle_sweep=0,
    seed=None,
):
    """
    check the automorphism classification of M(K) on a complex

    Parameters
    ----------
    K: SimplicialComplex
        Must be connected
    budget: int, optional
        Maximum number of gradient vector fields when building M(K),
        default DEFAULT_GVF_BUDGET.  If exceeded, Aut(M(K)) is obtained by
        transport from the Hasse diagram and the checks that need M(K)
        itself are not attempted.
    group_budget: int, optional
        Maximum order of any automorphism group, default
        DEFAULT_GROUP_BUDGET.  Checks that exceed it fail with the
        BUDGET_EXCEEDED flag; the others still run.
    via_hasse: bool, optional
        If True, never build M(K).  Default False
    nworkers: int, optional
        Threads for the enumeration and for computing the groups
    timings: bool, optional
        If True, record elapsed_ms for each check
    oracle_sweep: int, optional
        If positive, also compare is_gradient with the V-path search on
        this many random discrete vector fields of K
    seed: int, optional
        Seed for the random fields

    Returns
    -------
    VerificationReport
    """
    ctx = _TheoremContext(K, budget, group_budget, via_hasse, nworkers)
    cls = ctx.classification
    logger.info('verifying classification %r', cls)

    if nworkers > 1:
        ctx.prefetch()

    checklist = _common_checks(ctx)
    basis = None
    if cls.is_cycle:
        checklist += _cycle_checks(ctx)
    if cls.is_boundary:
        checklist += _boundary_checks(ctx)
    if cls.is_cycle and cls.is_boundary:
        checklist += _both_checks(ctx)
    if not (cls.is_cycle or cls.is_boundary):
        basis = EXTERNAL_BASIS
        checklist += _other_checks(ctx)

    if oracle_sweep > 0:
        checklist += _oracle_checks(ctx, oracle_sweep, seed)

    checks = [
        _run_check(name, func, fatal_flag, timings)
        for name, func, fatal_flag in checklist
    ]

    orders = {}
    for key, getter in (
        ('complex', ctx.get_autK),
        ('hasse', ctx.get_autH),
        ('morse', ctx.get_autM),
    ):
        try:
            orders[key] = _order(getter())
        except BudgetExceeded:
            orders[key] = None

    return VerificationReport(
        cls, checks, orders, ctx.via_hasse, basis=basis,
    )
