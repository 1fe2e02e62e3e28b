"""
The registered law suites. Every check is tagged with the law it certifies;
counts and carrier sizes are fixed per suite so that a seed determines the run.
"""
import typing as t
import itertools as it

from . import corpus
from .suite import Suite, CHECK
from ..finbase import FinSetObj, all_maps, is_bijection
from ..containers import (
    compose_morphisms, identity_morphism, enumerate_morphisms, is_answerable, is_isomorphic,
    initial_container, terminal_container, factorize, find_morphism, search_morphism, MorphismRep, check_rep,
)
from ..assemblies import verify_tracking
from ..operators import (
    coproduct, coprojections, copairing, product, projections, pairing, distributivity,
    tensor, tensor_laws, composition_product, composition_product_via_adjoints,
    poly_cardinality, certifies_star_semantics, star_associativity_bijection, naturality_check,
    strength_witness,
)
from ..weihrauch import (
    container_of_problem, problem_of_container, problem_roundtrip_iso, reduce_problems,
    verify_reduction, compose_reductions, predicate_roundtrip_witnesses, ext_reduce_verify,
    container_of_predicate, container_roundtrip_morphisms, reduction_of_morphism,
    predicate_of_container, morphism_of_reduction, nabla_container, degree_poset,
)
from ..pca import (
    Term, Normal, EvalBudget, reduce, apply_all, substitute, compile_lambda, Lam, enumerate_terms,
    FST, SND, PAIR, TRUE, FALSE,
)

# poly_eval results above this size are only compared by cardinality
EVAL_LIMIT = 4096


def _normal_form(outcome) -> 't.Optional[Term]':
    return outcome.term if isinstance(outcome, Normal) else None

def _is_tracked(m, budget: 'EvalBudget') -> 'bool':
    """Re-check a morphism from its parts: both codes track, and the representation is valid."""
    codes = all(verify_tracking(f.src, f.dst, f.fn, f.code, f.budget) for f in (m.forward, m.backward))
    return codes and not check_rep(MorphismRep(m.src, m.dst, m.forward, m.backward), budget)

def _round_trip(there, back) -> 'bool':
    return (
        compose_morphisms(back, there) == identity_morphism(there.src)
        and compose_morphisms(there, back) == identity_morphism(there.dst)
    )


class CategorySuite(Suite):
    name = "category"
    description = "composition of container morphisms is associative and unital"
    count = 200

    def checks(self) -> 't.Iterator[CHECK]':
        for n in range(self.count):
            f, g, h = corpus.composable_triple(self.rng, self.sizes, self.sizes)
            left = compose_morphisms(h, compose_morphisms(g, f))
            right = compose_morphisms(compose_morphisms(h, g), f)
            yield "composition is associative", left == right, f"triple {n}"
            yield "identities are units", (
                compose_morphisms(identity_morphism(f.dst), f) == f
                and compose_morphisms(f, identity_morphism(f.src)) == f
            ), f"triple {n}"

            horizontal, vertical = factorize(g)
            yield "morphisms factor as horizontal after vertical", compose_morphisms(horizontal, vertical) == g, f"triple {n}"


class LatticeSuite(Suite):
    name = "lattice"
    description = "universal properties of products and coproducts, and distributivity"

    def checks(self) -> 't.Iterator[CHECK]':
        small = corpus.all_containers(2, 2)
        tests = corpus.all_containers(1, 2)

        for (i, p), (j, q) in it.product(enumerate(small), repeat=2):
            inl, inr = coprojections(p, q)
            pr1, pr2 = projections(p, q)
            s, m = coproduct(p, q), product(p, q)

            for r in tests:
                joint = list(enumerate_morphisms(s, r))
                for m1, m2 in it.product(enumerate_morphisms(p, r), enumerate_morphisms(q, r)):
                    c = copairing(m1, m2)
                    ok = compose_morphisms(c, inl) == m1 and compose_morphisms(c, inr) == m2
                    unique = sum(
                        1 for k in joint if compose_morphisms(k, inl) == m1 and compose_morphisms(k, inr) == m2
                    ) == 1
                    yield "copairing is the unique mediator", ok and unique, f"pair ({i}, {j})"

                into = list(enumerate_morphisms(r, m))
                for m1, m2 in it.product(enumerate_morphisms(r, p), enumerate_morphisms(r, q)):
                    c = pairing(m1, m2)
                    ok = compose_morphisms(pr1, c) == m1 and compose_morphisms(pr2, c) == m2
                    unique = sum(
                        1 for k in into if compose_morphisms(pr1, k) == m1 and compose_morphisms(pr2, k) == m2
                    ) == 1
                    yield "pairing is the unique mediator", ok and unique, f"pair ({i}, {j})"

        for (i, p1), (j, p2), (k, q) in it.product(enumerate(tests), repeat=3):
            there, back = distributivity(p1, p2, q)
            yield "distributivity maps are inverse", _round_trip(there, back), f"triple ({i}, {j}, {k})"


class AnswerabilitySuite(Suite):
    name = "answerability"
    description = "answerable containers are closed under the lattice operations"
    count = 100

    def checks(self) -> 't.Iterator[CHECK]':
        yield "the initial container is answerable", is_answerable(initial_container()), ""
        yield "the terminal container is not answerable", not is_answerable(terminal_container()), ""

        for n in range(self.count):
            p = corpus.random_container(self.rng, self.sizes, self.sizes, answerable=True)
            q = corpus.random_container(self.rng, self.sizes, self.sizes, answerable=True)
            yield "products of answerable containers are answerable", is_answerable(product(p, q)), f"pair {n}"
            yield "coproducts of answerable containers are answerable", is_answerable(coproduct(p, q)), f"pair {n}"
            yield "tensors of answerable containers are answerable", is_answerable(tensor(p, q)), f"pair {n}"


class TensorSuite(Suite):
    name = "tensor"
    description = "the parallel product distributes over coproducts"
    count = 30

    def checks(self) -> 't.Iterator[CHECK]':
        for n in range(self.count):
            p, q, r = (corpus.random_container(self.rng, 2, 2) for _ in range(3))
            laws = tensor_laws(p, q, r)
            yield "tensor distributes over coproducts", _round_trip(laws.distribute, laws.collect), f"triple {n}"
            yield "the tensor strength is a morphism", laws.strength.src == product(tensor(p, q), r), f"triple {n}"


class StarSemanticsSuite(Suite):
    name = "star-semantics"
    description = "the composition product evaluates as composition of polynomial functors"
    count = 200
    pairs = 20

    def checks(self) -> 't.Iterator[CHECK]':
        fixed = [
            (corpus.random_container(self.rng, self.sizes, self.sizes), corpus.random_container(self.rng, self.sizes, self.sizes))
            for _ in range(self.pairs)
        ]
        for i, (p, q) in enumerate(fixed):
            yield "both constructions agree", is_isomorphic(composition_product(p, q), composition_product_via_adjoints(p, q)), f"pair {i}"
            for n in range(4):
                if poly_cardinality(q, poly_cardinality(p, n)) > EVAL_LIMIT:
                    continue
                a = FinSetObj(tuple(corpus.labels("a", n)))
                yield "evaluation of the composition product is composite evaluation", certifies_star_semantics(p, q, a), f"pair {i}, |A| = {n}"

        for i in range(self.count):
            p = corpus.random_container(self.rng, self.sizes, self.sizes)
            q = corpus.random_container(self.rng, self.sizes, self.sizes)
            pq = composition_product(p, q)
            ok = all(poly_cardinality(pq, n) == poly_cardinality(q, poly_cardinality(p, n)) for n in range(4))
            yield "cardinalities of the composition product compose", ok, f"pair {i}"

        for i in range(self.pairs):
            p, q, r = (corpus.random_container(self.rng, 2, 2) for _ in range(3))
            for n in range(3):
                if poly_cardinality(r, poly_cardinality(q, poly_cardinality(p, n))) > EVAL_LIMIT:
                    continue
                a = FinSetObj(tuple(corpus.labels("a", n)))
                yield "the composition product is associative", is_bijection(star_associativity_bijection(p, q, r, a)), f"triple {i}, |A| = {n}"

        for i in range(self.pairs):
            p, q = corpus.random_container(self.rng, 2, 2), corpus.random_container(self.rng, 2, 2)
            m = corpus.random_morphism(self.rng, p, q)
            if m is None:
                continue
            a, b = FinSetObj(tuple(corpus.labels("a", 2))), FinSetObj(tuple(corpus.labels("b", 2)))
            ok = all(naturality_check(m, f) for f in all_maps(a, b))
            yield "morphisms act naturally on polynomial evaluation", ok, f"pair {i}"


class StrengthSuite(Suite):
    name = "strength"
    description = "(P ★ Q) × R reduces to (P × R) ★ Q"
    count = 10

    def checks(self) -> 't.Iterator[CHECK]':
        for n in range(self.count):
            p, q, r = (corpus.random_container(self.rng, 2, 2) for _ in range(3))
            m = strength_witness(p, q, r)
            src, dst = product(composition_product(p, q), r), composition_product(product(p, r), q)
            yield "the strength map exists", m.src == src and m.dst == dst, f"triple {n}"
            yield "exhaustive search finds the strength map", search_morphism(src, dst).verdict == "REDUCIBLE", f"triple {n}"

        for n in range(self.count):
            p, q, r = (corpus.random_container(self.rng, 2, 2, answerable=True) for _ in range(3))
            poset = degree_poset({"lhs": product(composition_product(p, q), r), "rhs": composition_product(product(p, r), q)})
            yield "the strength holds between degrees", poset.leq("lhs", "rhs"), f"answerable triple {n}"


class ProblemRoundtripSuite(Suite):
    name = "problem-roundtrip"
    description = "problems and answerable containers translate into each other"
    count = 50

    def checks(self) -> 't.Iterator[CHECK]':
        for n in range(self.count):
            f = corpus.random_problem(self.rng, self.sizes, self.sizes)
            g = problem_of_container(container_of_problem(f))
            there, back = reduce_problems(f, g), reduce_problems(g, f)
            ok = there is not None and back is not None and verify_reduction(f, g, there) and verify_reduction(g, f, back)
            yield "a problem is equivalent to the problem of its container", ok, f"problem {n}"
            yield "reductions are reflexive", reduce_problems(f, f) is not None, f"problem {n}"

            h = corpus.random_problem(self.rng, self.sizes, self.sizes)
            r1, r2 = reduce_problems(f, g), reduce_problems(g, h)
            if r1 is not None and r2 is not None:
                yield "reductions compose", verify_reduction(f, h, compose_reductions(r1, r2, f)), f"problem {n}"

        for n in range(self.count):
            p = corpus.random_container(self.rng, self.sizes, self.sizes, answerable=True)
            yield "a container is isomorphic to the container of its problem", _round_trip(*problem_roundtrip_iso(p)), f"container {n}"


class PredicateRoundtripSuite(Suite):
    name = "predicate-roundtrip"
    description = "extended predicates and partitioned containers translate into each other"

    def checks(self) -> 't.Iterator[CHECK]':
        for name, p in corpus.predicate_corpus().items():
            down, up = predicate_roundtrip_witnesses(p, self.budget)
            hat = predicate_of_container(container_of_predicate(p, self.budget))
            yield "the predicate of its container reduces to a predicate", ext_reduce_verify(hat, p, down), name
            yield "a predicate reduces to the predicate of its container", ext_reduce_verify(p, hat, up), name

            m = morphism_of_reduction(p, hat, up)
            yield "reductions become tracked container morphisms", _is_tracked(m, self.budget), name
            yield "container morphisms become reductions", ext_reduce_verify(
                predicate_of_container(m.src), predicate_of_container(m.dst), reduction_of_morphism(m),
            ), name

        containers = {"id2": corpus.id2_distinct(), "nabla": nabla_container()}
        containers.update({name: container_of_predicate(p, self.budget) for name, p in corpus.predicate_corpus().items()})
        for name, p in containers.items():
            there, back = container_roundtrip_morphisms(p, self.budget)
            yield "explicit round trip morphisms exist", there.dst == back.src, name
            yield "the round trip morphisms are tracked", _is_tracked(there, self.budget) and _is_tracked(back, self.budget), name
            h = there.dst
            found = find_morphism(p, h, self.bound, self.budget) is not None and find_morphism(h, p, self.bound, self.budget) is not None
            yield "bounded search confirms the round trip", found, name


class SkKernelSuite(Suite):
    name = "sk-kernel"
    description = "reduction is deterministic and budget monotone, bracket abstraction simulates β"
    count = 1000
    lambdas = 50

    def checks(self) -> 't.Iterator[CHECK]':
        small = EvalBudget(200)
        for n in range(self.count):
            term = corpus.random_term(self.rng, self.rng.randint(1, 12))
            first, second = reduce(term, small), reduce(term, small)
            yield "reduction is deterministic", first == second, f"term {n}"
            if isinstance(first, Normal):
                larger = _normal_form(reduce(term, small + small))
                yield "a larger budget reaches the same normal form", larger == first.term, f"term {n}"

        closed = list(enumerate_terms(3))
        for n in range(self.lambdas):
            body = corpus.random_term(self.rng, self.rng.randint(1, 6), ("x", "y"))
            a, b = self.rng.choice(closed), self.rng.choice(closed)
            compiled = apply_all(compile_lambda(Lam("x", Lam("y", body))), a, b, budget=self.budget)
            direct = reduce(substitute(substitute(body, "x", a), "y", b), self.budget)
            if isinstance(compiled, Normal) and isinstance(direct, Normal):
                yield "compiled abstractions simulate substitution", compiled.term == direct.term, f"body {n}"

        for a, b in it.product(closed, repeat=2):
            a_, b_ = _normal_form(reduce(a)), _normal_form(reduce(b))
            w = _normal_form(apply_all(PAIR, a, b, budget=self.budget))
            yield "fst recovers the first component", _normal_form(apply_all(FST, w, budget=self.budget)) == a_, str(w)
            yield "snd recovers the second component", _normal_form(apply_all(SND, w, budget=self.budget)) == b_, str(w)
            yield "booleans select", (
                _normal_form(apply_all(TRUE, a, b, budget=self.budget)) == a_
                and _normal_form(apply_all(FALSE, a, b, budget=self.budget)) == b_
            ), f"{a}, {b}"


class DegeneracySuite(Suite):
    name = "degeneracy"
    description = "choice collapses finite degrees but not degrees over assemblies"
    count = 20

    def checks(self) -> 't.Iterator[CHECK]':
        items = {
            f"c{n}": corpus.random_container(self.rng, self.sizes, self.sizes, answerable=True)
            for n in range(self.count)
        }
        poset = degree_poset(items)
        yield "answerable finite containers form one degree", len(poset.classes) == 1, f"{len(poset.classes)} classes"

        pasm = degree_poset({"id2": corpus.id2_distinct(), "nabla": nabla_container()}, self.bound, self.budget)
        verdicts = {pasm.verdict(a, b) for a in pasm.names for b in pasm.names if a != b}
        yield "some reduction over assemblies is found", "REDUCIBLE" in verdicts, str(sorted(verdicts))
        yield "some reduction over assemblies stays open at the bound", "UNKNOWN-AT-BOUND" in verdicts, str(sorted(verdicts))
