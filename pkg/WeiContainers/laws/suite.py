import typing as t
import random
import logging
from dataclasses import dataclass, field

from .collection import Collection
from ..pca import EvalBudget
from ..typing import Settings, merge_settings

logger = logging.getLogger("WeiContainers")

CHECK = t.Tuple[str, bool, str]


@dataclass(frozen=True)
class CheckResult:
    suite: 'str'
    law: 'str'
    passed: 'bool'
    detail: 'str' = ""

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        detail = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.suite}: {self.law}{detail}"

@dataclass
class SuiteReport:
    suite: 'str'
    settings: 'Settings'
    results: 'list[CheckResult]' = field(default_factory=list)

    @property
    def passed(self) -> 'bool':
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> 'list[CheckResult]':
        return [r for r in self.results if not r.passed]

    def lines(self) -> 'list[str]':
        return [str(r) for r in self.results]


class Suite:
    """
    A named family of law checks. Subclasses with a ``name`` register
    themselves and yield ``(law, passed, detail)`` from ``checks``.
    """
    name: 'str' = ""
    description: 'str' = ""

    collection = Collection()

    def __init_subclass__(cls, **kwargs) -> None:
        if cls.name:
            cls.collection.add_suite(cls)
        super().__init_subclass__(**kwargs)

    def __init__(self, settings: 'Settings' = None):
        self.settings = merge_settings(settings)
        self.rng = random.Random(self.settings["seed"])
        self.sizes = self.settings["sizes"]
        self.bound = self.settings["bound"]
        self.budget = EvalBudget(self.settings["budget"])

    def checks(self) -> 't.Iterator[CHECK]':
        raise NotImplementedError("Method not implemented")

    def run(self) -> 'SuiteReport':
        report = SuiteReport(self.name, self.settings)
        logger.info(f"Running suite `{self.name}` with seed {self.settings['seed']}")
        try:
            for law, passed, detail in self.checks():
                if not passed:
                    logger.debug(f"{self.name}: `{law}` failed {detail}")
                report.results.append(CheckResult(self.name, law, passed, detail))
        except (ValueError, TypeError) as e:
            logger.debug(f"{self.name}: raised {e!r}")
            report.results.append(CheckResult(self.name, "completes without error", False, str(e)))
        return report


def find_suite(name: 'str') -> 'type[Suite]':
    return Suite.collection.find_suite(name, raise_errors=True)

def all_suites() -> 'list[type[Suite]]':
    return sorted(Suite.collection.suites, key=lambda s: s.name)

def run_suite(name: 'str', settings: 'Settings' = None) -> 'SuiteReport':
    return find_suite(name)(settings).run()
