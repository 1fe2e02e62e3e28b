import typing as t

LABEL = str

class Settings(t.TypedDict, total=False):
    bound: 'int'
    budget: 'int'
    seed: 'int'
    sizes: 'int'

DEFAULT_SETTINGS: 'Settings' = {
    "bound": 7,
    "budget": 10_000,
    "seed": 0,
    "sizes": 3,
}

def merge_settings(*overrides: 't.Optional[Settings]') -> 'Settings':
    settings: 'Settings' = dict(DEFAULT_SETTINGS)
    for override in overrides:
        if override:
            settings.update({k: v for k, v in override.items() if v is not None})
    return settings


class SET_JSON(t.TypedDict):
    elements: 'list[str]'

class MAP_JSON(t.TypedDict):
    dom: 'SET_JSON'
    cod: 'SET_JSON'
    graph: 'dict[str, str]'

class ASSEMBLY_JSON(t.TypedDict):
    carrier: 'list[str]'
    realizers: 'dict[str, list[str]]'

class TRACKED_JSON(t.TypedDict):
    graph: 'dict[str, str]'
    code: 'str'

class CONTAINER_JSON(t.TypedDict):
    kind: 't.Literal["finset", "pasm"]'
    total: 't.Union[SET_JSON, ASSEMBLY_JSON]'
    base: 't.Union[SET_JSON, ASSEMBLY_JSON]'
    bundle: 't.Union[MAP_JSON, TRACKED_JSON]'

class MORPHISM_JSON(t.TypedDict, total=False):
    forward: 'dict[str, str]'
    backward: 'dict[str, str]'
    forward_code: 'str'
    backward_code: 'str'

class PROBLEM_JSON(t.TypedDict):
    inputs: 'list[str]'
    outputs: 'list[str]'
    solutions: 'dict[str, list[str]]'

class PREDICATE_JSON(t.TypedDict):
    support: 'list[str]'
    theta: 'dict[str, list[list[str]]]'

class BINDING_JSON(t.TypedDict, total=False):
    type: 't.Literal["container", "problem", "predicate", "term"]'
    term: 'str'

class WORKSPACE_JSON(t.TypedDict, total=False):
    settings: 'Settings'
    bindings: 'dict[str, BINDING_JSON]'
