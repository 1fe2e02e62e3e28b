from hypothesis import strategies as st

from WeiContainers.containers import from_fibers, make_container
from WeiContainers.assemblies import PartitionedAssembly, track
from WeiContainers.pca import IDENT, underline
from WeiContainers.finbase import FinSetObj, FinMap
from WeiContainers.laws import corpus

fiber_sizes = st.lists(st.integers(min_value=0, max_value=2), max_size=3)
answerable_sizes = st.lists(st.integers(min_value=1, max_value=2), min_size=1, max_size=3)
seeds = st.integers(min_value=0, max_value=2**16)


def _container(sizes):
    count = iter(range(sum(sizes)))
    return from_fibers({f"u{i}": [f"x{next(count)}" for _ in range(n)] for i, n in enumerate(sizes)})

containers = fiber_sizes.map(_container)
answerable_containers = answerable_sizes.map(_container)

sets = st.integers(min_value=0, max_value=3).map(lambda n: FinSetObj(tuple(corpus.labels("a", n))))

@st.composite
def maps(draw, dom=None, cod=None):
    dom = dom if dom is not None else draw(sets)
    cod = cod if cod is not None else draw(sets.filter(lambda s: len(s) > 0 or len(dom) == 0))
    graph = {a: draw(st.sampled_from(cod.elements)) for a in dom}
    return FinMap(dom, cod, graph)

@st.composite
def composable_maps(draw):
    f = draw(maps())
    b = f.cod
    c = draw(sets.filter(lambda s: len(s) > 0 or len(b) == 0))
    g = draw(maps(dom=b, cod=c))
    return f, g

@st.composite
def cospans(draw):
    c = draw(sets.filter(lambda s: len(s) > 0))
    a = draw(sets)
    b = draw(sets)
    return draw(maps(dom=a, cod=c)), draw(maps(dom=b, cod=c))

@st.composite
def pasm_containers(draw):
    """One or two positions realized by ``0̲`` or ``1̲``; each direction shares its position's realizer."""
    positions, directions, graph = {}, {}, {}
    for i in range(draw(st.integers(min_value=1, max_value=2))):
        positions[f"u{i}"] = draw(st.sampled_from((underline(0), underline(1))))
        if draw(st.booleans()):
            directions[f"x{i}"] = positions[f"u{i}"]
            graph[f"x{i}"] = f"u{i}"

    base = PartitionedAssembly.from_codes(positions)
    total = PartitionedAssembly.from_codes(directions)
    return make_container(track(total, base, FinMap(total.carrier, base.carrier, graph), IDENT))
