from .workspace import Workspace, load_workspace, dump_workspace, binding_from_json, binding_to_json, read_term
from .expr import ExprParser, evaluate
from .main import main, build_parser, cmd_reduce, cmd_expr, cmd_laws, cmd_poset

__all__ = [
    "Workspace", "load_workspace", "dump_workspace", "binding_from_json", "binding_to_json", "read_term",
    "ExprParser", "evaluate", "main", "build_parser", "cmd_reduce", "cmd_expr", "cmd_laws", "cmd_poset",
]
