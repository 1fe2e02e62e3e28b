"""
The composition product: a question to ``Q`` followed, for each of its
answers, by a question to ``P``.
"""
import typing as t
import logging
import itertools as it

from ..containers import Container, make_container, require_same_kind
from ..finbase import FinSetObj, FinMap, all_maps, sigma_along, reindex, pi_along, SliceObj, pullback
from ..finbase import limits as fl
from ..finbase.labels import pair_label, split_pair, graph_label, parse_graph_label
from ..assemblies import PartitionedAssembly, search_tracking, track
from ..assemblies.assembly import as_partitioned
from ..pca import EvalBudget, pair_of, FST
from ..errors import KindMismatch
from ..typing import DEFAULT_SETTINGS

logger = logging.getLogger("WeiContainers")


def composition_product(p: 'Container', q: 'Container') -> 'Container':
    """
    Positions are ``(v, f)`` with ``f: Y_v → U``; directions over ``(v, f)``
    are ``(y, x)`` with ``y ∈ Y_v`` and ``x ∈ X_{f(y)}``.
    """
    require_same_kind(p, q)
    if p.kind != "finset":
        raise KindMismatch("The composition product is only defined over finite sets; use the bounded variant")

    positions = []
    graph = {}
    for v in q.positions:
        ys = q.fiber(v)
        for values in it.product(p.positions.elements, repeat=len(ys)):
            f = dict(zip(ys, values))
            position = pair_label(v, graph_label(f, ys))
            positions.append(position)
            for y in ys:
                for x in p.fiber(f[y]):
                    graph[pair_label(position, pair_label(y, x))] = position

    return make_container(FinMap(FinSetObj(tuple(graph)), FinSetObj(tuple(positions)), graph))

def composition_product_via_adjoints(p: 'Container', q: 'Container') -> 'Container':
    """
    The same construction through ``Π_Q``, reindexing and ``Σ``: positions are
    sections of the constant family ``U`` over ``Q``, directions the pullback of
    ``P`` along evaluation.
    """
    require_same_kind(p, q)
    if p.kind != "finset":
        raise KindMismatch("The composition product is only defined over finite sets")

    constant = reindex(fl.terminal_map(q.directions), SliceObj.of(fl.terminal_map(p.positions)))
    sections = pi_along(q.map, constant)

    pb = pullback(sections.map, q.map)
    evaluation = {}
    for label in pb.apex:
        section, y = split_pair(label)
        graph = parse_graph_label(split_pair(section)[1][len("sec:"):])
        evaluation[label] = split_pair(graph[y])[1]

    ev = FinMap(pb.apex, p.positions, evaluation)
    directions = sigma_along(pb.proj1, reindex(ev, SliceObj.of(p.map)))
    return make_container(directions.map)


def composition_product_bounded(
    p: 'Container',
    q: 'Container',
    size_bound: 'int' = DEFAULT_SETTINGS["bound"],
    budget: 'EvalBudget' = None,
) -> 'Container':
    """
    Positions are ``(e, (v, f))`` where ``e`` is the least code of size
    ``≤ size_bound`` tracking ``f: Y_v → U``, realized by ``pair r_v e``.
    Each tracked ``f`` gets exactly one position: the least code stands for
    every code tracking it, so raising the bound only adds positions for
    newly tracked maps. Functions no such code tracks are left out.
    """
    require_same_kind(p, q)
    if p.kind != "pasm":
        raise KindMismatch("The bounded composition product is defined over assemblies")

    budget = budget or EvalBudget()
    u_asm, x_asm = as_partitioned(p.base), as_partitioned(p.total)
    v_asm, y_asm = as_partitioned(q.base), as_partitioned(q.total)

    positions = {}
    directions = {}
    graph = {}
    for v in q.positions:
        ys = q.fiber(v)
        fiber = PartitionedAssembly.from_codes({y: y_asm.realizer(y) for y in ys})
        for f in all_maps(fiber.carrier, u_asm.carrier):
            e = search_tracking(fiber, u_asm, f, size_bound, budget)
            if e is None:
                logger.debug(f"No code of size <= {size_bound} tracks {f} over `{v}`")
                continue

            position = pair_label(str(e), pair_label(v, graph_label(f.graph, ys)))
            positions[position] = pair_of(v_asm.realizer(v), e)
            for y in ys:
                for x in p.fiber(f(y)):
                    direction = pair_label(position, pair_label(y, x))
                    directions[direction] = pair_of(positions[position], pair_of(y_asm.realizer(y), x_asm.realizer(x)))
                    graph[direction] = position

    base = PartitionedAssembly.from_codes(positions)
    total = PartitionedAssembly.from_codes(directions)
    return make_container(track(total, base, FinMap(total.carrier, base.carrier, graph), FST, budget))
