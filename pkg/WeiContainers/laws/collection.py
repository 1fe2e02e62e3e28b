import typing as t

if t.TYPE_CHECKING:
    from .suite import Suite

class Collection:
    def __init__(self, *suites: 'type[Suite]'):
        self.suites = list(suites)
        self.cached = False
        self.names_cache = {}

    @property
    def names(self) -> 'dict[str, type[Suite]]':
        if self.cached:
            return self.names_cache

        self.names_cache = {s.name.lower(): s for s in self.suites}
        self.cached = True
        return self.names_cache

    def add_suite(self, suite: 'type[Suite]'):
        self.cached = False
        self.suites.append(suite)

    def remove_suite(self, suite: 'type[Suite]'):
        self.cached = False
        self.suites.remove(suite)

    @t.overload
    def find_suite(self, name: 'str', raise_errors: 't.Literal[False]' = False) -> 't.Optional[type[Suite]]': ...

    @t.overload
    def find_suite(self, name: 'str', raise_errors: 't.Literal[True]') -> 't.Union[type[Suite], t.NoReturn]': ...

    def find_suite(self, name: 'str', raise_errors: 'bool' = False):
        lname = name.lower()
        if lname in self.names:
            return self.names[lname]

        if raise_errors:
            raise ValueError(f"Suite `{name}` not found in collection, choose one of {sorted(self.names)}")
        return None
