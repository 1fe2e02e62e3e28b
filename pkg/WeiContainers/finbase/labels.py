"""
Canonical label schemes.

Every derived element is named by a string built from the labels of its
components, so two constructions agree exactly when their label lists agree.
Atomic labels must be bracket-balanced and contain no top-level ``,`` or
``;``; derived labels then split back into their parts.
"""
import typing as t

OPEN = "([{"
CLOSE = ")]}"
MAPSTO = "↦"

def is_balanced(label: 'str') -> 'bool':
    depth = 0
    for char in label:
        if char in OPEN:
            depth += 1
        elif char in CLOSE:
            depth -= 1
            if depth < 0:
                return False
    return depth == 0

def split_top(text: 'str', sep: 'str') -> 'list[str]':
    """Split on ``sep`` occurrences that are not nested inside brackets."""
    if not text:
        return []

    parts = []
    depth = 0
    buffer = ""
    i = 0
    while i < len(text):
        char = text[i]
        if char in OPEN:
            depth += 1
        elif char in CLOSE:
            depth -= 1

        if depth == 0 and text.startswith(sep, i):
            parts.append(buffer)
            buffer = ""
            i += len(sep)
            continue

        buffer += char
        i += 1

    parts.append(buffer)
    return parts

def pair_label(a: 'str', b: 'str') -> 'str':
    return f"({a},{b})"

def split_pair(label: 'str') -> 'tuple[str, str]':
    if not (label.startswith("(") and label.endswith(")")):
        raise ValueError(f"`{label}` is not a pair label")

    parts = split_top(label[1:-1], ",")
    if len(parts) != 2:
        raise ValueError(f"`{label}` is not a pair label")
    return parts[0], parts[1]

def label_key(label: 'str') -> 'tuple':
    """
    Sort key reading pair labels as tuples of their components, so ``(a,x)``
    precedes ``(a!,x)`` and ``(K,e)`` precedes ``(K K,e)``. Atomic labels sort
    before pairs and among themselves as strings.
    """
    if label.startswith("(") and label.endswith(")"):
        parts = split_top(label[1:-1], ",")
        if len(parts) == 2 and all(is_balanced(part) for part in parts):
            return (1, label_key(parts[0]), label_key(parts[1]))
    return (0, label)

def inl(a: 'str') -> 'str':
    return f"inl:{a}"

def inr(b: 'str') -> 'str':
    return f"inr:{b}"

def split_tag(label: 'str') -> 'tuple[t.Literal["inl", "inr"], str]':
    tag, _, rest = label.partition(":")
    if tag not in ("inl", "inr"):
        raise ValueError(f"`{label}` is not a coproduct label")
    return tag, rest

def graph_label(graph: 't.Mapping[str, str]', order: 't.Iterable[str]' = None) -> 'str':
    keys = list(order) if order is not None else sorted(graph)
    return "{" + ",".join(f"{k}{MAPSTO}{graph[k]}" for k in keys) + "}"

def parse_graph_label(label: 'str') -> 'dict[str, str]':
    if not (label.startswith("{") and label.endswith("}")):
        raise ValueError(f"`{label}` is not a graph label")

    graph = {}
    for entry in split_top(label[1:-1], ","):
        key, value = split_top(entry, MAPSTO)
        graph[key] = value
    return graph

def section_label(j: 'str', graph: 't.Mapping[str, str]') -> 'str':
    return pair_label(j, "sec:" + graph_label(graph))

def set_label(items: 't.Iterable[str]') -> 'str':
    return "{" + ";".join(sorted(items)) + "}"

def parse_set_label(label: 'str') -> 'list[str]':
    if not (label.startswith("{") and label.endswith("}")):
        raise ValueError(f"`{label}` is not a set label")
    return split_top(label[1:-1], ";")
