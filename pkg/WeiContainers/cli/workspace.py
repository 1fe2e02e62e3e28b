"""
JSON workspaces: named containers, problems, predicates and terms, plus the
settings every command runs with.
"""
import typing as t
import json
import logging
from dataclasses import dataclass, field

from frozendict import frozendict

from ..finbase import FinSetObj, FinMap
from ..assemblies import Assembly, track, sort_terms
from ..containers import Container, Morphism, make_container, from_fibers, build_morphism
from ..weihrauch import FiniteProblem, ExtendedPredicate, ExtReductionWitness, ProblemReduction
from ..pca import Term, EvalBudget, code, normal_form
from ..typing import (
    Settings, merge_settings, SET_JSON, MAP_JSON, ASSEMBLY_JSON, CONTAINER_JSON, MORPHISM_JSON,
    PROBLEM_JSON, PREDICATE_JSON, BINDING_JSON, WORKSPACE_JSON,
)
from ..errors import WorkspaceError

logger = logging.getLogger("WeiContainers")

BINDING = t.Union[Container, FiniteProblem, ExtendedPredicate, Term]


def read_term(text: 'str', budget: 'EvalBudget' = None) -> 'Term':
    """A closed term in normal form; λ-text and the standard code names are accepted."""
    return normal_form(code(text), budget)


def set_from_json(data: 'SET_JSON') -> 'FinSetObj':
    return FinSetObj(tuple(data["elements"]))

def set_to_json(a: 'FinSetObj') -> 'SET_JSON':
    return {"elements": list(a)}

def map_to_json(f: 'FinMap') -> 'MAP_JSON':
    return {"dom": set_to_json(f.dom), "cod": set_to_json(f.cod), "graph": dict(f.graph)}

def assembly_from_json(data: 'ASSEMBLY_JSON', budget: 'EvalBudget' = None) -> 'Assembly':
    realizers = {x: [read_term(r, budget) for r in data["realizers"].get(x, [])] for x in data["carrier"]}
    return Assembly.of(realizers)

def assembly_to_json(a: 'Assembly') -> 'ASSEMBLY_JSON':
    return {"carrier": list(a.carrier), "realizers": {x: [str(r) for r in a.realizers_of(x)] for x in a.carrier}}


def container_from_json(data: 'CONTAINER_JSON', budget: 'EvalBudget' = None) -> 'Container':
    if "fibers" in data:
        return from_fibers(data["fibers"])

    kind = data.get("kind", "finset")
    if kind == "finset":
        return make_container(FinMap(set_from_json(data["total"]), set_from_json(data["base"]), frozendict(data["bundle"]["graph"])))
    if kind == "pasm":
        total = assembly_from_json(data["total"], budget)
        base = assembly_from_json(data["base"], budget)
        fn = FinMap(total.carrier, base.carrier, frozendict(data["bundle"]["graph"]))
        return make_container(track(total, base, fn, code(data["bundle"]["code"]), budget))
    raise WorkspaceError(f"Unknown container kind `{kind}`")

def container_to_json(p: 'Container') -> 'CONTAINER_JSON':
    if p.kind == "finset":
        return {
            "kind": "finset",
            "total": set_to_json(p.total),
            "base": set_to_json(p.base),
            "bundle": map_to_json(p.bundle),
        }
    return {
        "kind": "pasm",
        "total": assembly_to_json(p.total),
        "base": assembly_to_json(p.base),
        "bundle": {"graph": dict(p.map.graph), "code": str(p.bundle.code)},
    }


def problem_from_json(data: 'PROBLEM_JSON') -> 'FiniteProblem':
    solutions = frozendict({u: frozenset(ys) for u, ys in data["solutions"].items()})
    return FiniteProblem(FinSetObj(tuple(data["inputs"])), FinSetObj(tuple(data["outputs"])), solutions)

def problem_to_json(f: 'FiniteProblem') -> 'PROBLEM_JSON':
    return {
        "inputs": list(f.inputs),
        "outputs": list(f.outputs),
        "solutions": {u: sorted(f(u)) for u in f.inputs},
    }


def predicate_from_json(data: 'PREDICATE_JSON', budget: 'EvalBudget' = None) -> 'ExtendedPredicate':
    theta = {}
    for r, sets in data["theta"].items():
        theta[read_term(r, budget)] = [{read_term(s, budget) for s in xs} for xs in sets]
    p = ExtendedPredicate.of(theta)

    support = {read_term(r, budget) for r in data.get("support", [str(r) for r in p.support])}
    if support != set(p.support):
        raise WorkspaceError(f"The declared support differs from the realizers with nonempty values in {p}")
    return p

def predicate_to_json(p: 'ExtendedPredicate') -> 'PREDICATE_JSON':
    return {
        "support": [str(r) for r in p.support],
        "theta": {str(r): [[str(s) for s in sort_terms(xs)] for xs in p.sets_of(r)] for r in p.support},
    }


def morphism_to_json(m: 'Morphism') -> 'MORPHISM_JSON':
    ret: 'MORPHISM_JSON' = {"forward": dict(m.forward_map.graph), "backward": dict(m.backward_map.graph)}
    if m.category.kind == "pasm":
        ret["forward_code"] = str(m.forward.code)
        ret["backward_code"] = str(m.backward.code)
    return ret

def morphism_from_json(p: 'Container', q: 'Container', data: 'MORPHISM_JSON', budget: 'EvalBudget' = None) -> 'Morphism':
    forward_code = code(data["forward_code"]) if "forward_code" in data else None
    backward_code = code(data["backward_code"]) if "backward_code" in data else None
    return build_morphism(p, q, data["forward"], data["backward"], forward_code, backward_code, budget)

def reduction_to_json(r: 'ProblemReduction') -> 'dict':
    return {"phi": dict(r.phi.graph), "psi": dict(r.psi.graph)}

def reduction_from_json(f: 'FiniteProblem', g: 'FiniteProblem', data: 'dict') -> 'ProblemReduction':
    psi = data["psi"]
    return ProblemReduction(
        FinMap(f.domain, g.domain, frozendict(data["phi"])),
        FinMap(FinSetObj(tuple(psi)), f.outputs, frozendict(psi)),
    )

def witness_to_json(w: 'ExtReductionWitness') -> 'dict':
    family = [
        {"r": str(r), "theta": [str(s) for s in sort_terms(theta)], "xi": [str(s) for s in sort_terms(xi)]}
        for (r, theta), xi in w.f_family.items()
    ]
    family.sort(key=lambda entry: (entry["r"], entry["theta"]))
    return {"e_fwd": str(w.e_fwd), "f_family": family, "e_bwd": str(w.e_bwd), "budget": w.budget.max_steps}

def witness_from_json(data: 'dict', budget: 'EvalBudget' = None) -> 'ExtReductionWitness':
    family = {}
    for entry in data["f_family"]:
        key = (read_term(entry["r"], budget), frozenset(read_term(s, budget) for s in entry["theta"]))
        family[key] = frozenset(read_term(s, budget) for s in entry["xi"])
    return ExtReductionWitness(
        code(data["e_fwd"]), frozendict(family), code(data["e_bwd"]), EvalBudget(data.get("budget", 10_000)),
    )


def binding_from_json(name: 'str', data: 'BINDING_JSON', budget: 'EvalBudget' = None) -> 'BINDING':
    kind = data.get("type")
    try:
        if kind == "container":
            return container_from_json(data, budget)
        if kind == "problem":
            return problem_from_json(data)
        if kind == "predicate":
            return predicate_from_json(data, budget)
        if kind == "term":
            return code(data["term"])
    except (KeyError, ValueError, TypeError) as e:
        raise WorkspaceError(f"Binding `{name}` is invalid: {e!r}") from e
    raise WorkspaceError(f"Binding `{name}` has unknown type `{kind}`")

def binding_to_json(value: 'BINDING') -> 'BINDING_JSON':
    if isinstance(value, Container):
        return {"type": "container", **container_to_json(value)}
    if isinstance(value, FiniteProblem):
        return {"type": "problem", **problem_to_json(value)}
    if isinstance(value, ExtendedPredicate):
        return {"type": "predicate", **predicate_to_json(value)}
    return {"type": "term", "term": str(value)}


@dataclass
class Workspace:
    bindings: 'dict[str, BINDING]' = field(default_factory=dict)
    settings: 'Settings' = field(default_factory=merge_settings)

    @property
    def budget(self) -> 'EvalBudget':
        return EvalBudget(self.settings["budget"])

    def __getitem__(self, name: 'str') -> 'BINDING':
        if name not in self.bindings:
            raise WorkspaceError(f"Name `{name}` is not bound, choose one of {sorted(self.bindings)}")
        return self.bindings[name]

    def bind(self, name: 'str', value: 'BINDING'):
        if name in self.bindings:
            raise WorkspaceError(f"Name `{name}` is already bound")
        self.bindings[name] = value

    @classmethod
    def from_json(cls, data: 'WORKSPACE_JSON', overrides: 'Settings' = None) -> 'Workspace':
        settings = merge_settings(data.get("settings"), overrides)
        budget = EvalBudget(settings["budget"])
        bindings = {name: binding_from_json(name, b, budget) for name, b in data.get("bindings", {}).items()}
        logger.debug(f"Loaded {len(bindings)} bindings")
        return cls(bindings, settings)

    def to_json(self) -> 'WORKSPACE_JSON':
        return {
            "settings": dict(self.settings),
            "bindings": {name: binding_to_json(value) for name, value in sorted(self.bindings.items())},
        }

def load_workspace(path: 'str', overrides: 'Settings' = None) -> 'Workspace':
    try:
        with open(path, encoding="utf-8") as file:
            data = json.load(file)
    except (OSError, json.JSONDecodeError) as e:
        logger.error(f"Cannot read workspace {path}")
        raise WorkspaceError(f"Cannot read workspace {path}: {e}") from e
    return Workspace.from_json(data, overrides)

def dump_workspace(ws: 'Workspace', path: 'str'):
    with open(path, "w", encoding="utf-8") as file:
        json.dump(ws.to_json(), file, indent=2, sort_keys=True, ensure_ascii=False)
