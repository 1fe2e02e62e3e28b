class CodDomMismatch(ValueError):
    """Composing or pulling back maps whose endpoints do not line up."""

class SquareDoesNotCommute(ValueError): ...

class BaseMismatch(ValueError): ...

class DuplicateLabel(ValueError): ...

class TermSyntaxError(ValueError): ...

class UnboundVariable(ValueError): ...

class UnverifiedInput(ValueError): ...

class UnverifiedTracking(ValueError): ...

class IllTyped(ValueError): ...

class InvalidRep(ValueError): ...

class TypeMismatch(TypeError): ...

class KindMismatch(TypeError): ...

class NotAnswerable(ValueError): ...

class SearchSpaceExceeded(ValueError): ...

class ExpressionError(ValueError): ...

class WorkspaceError(ValueError): ...
