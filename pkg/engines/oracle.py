"""
Brute-force propositional oracle.

Class atoms and lexical units are treated as propositional variables and all
2^n valuations over the joint signature are enumerated. Used to cross-check
the tableau on role-free inputs.
"""

from __future__ import annotations

from itertools import product
from typing import Mapping

from config.settings import DEFAULT_CONFIG, OntoCompConfig
from models.axioms import DlAxiom, Equiv, Tbox
from models.terms import (
    And, Atom, Bottom, ConceptExpr, NlAtom, Not, Oid, Or, Top, class_oids, has_roles, lexical_units,
)

MAX_ATOMS = 20


class OracleInputError(ValueError):
    pass


def evaluate(e: ConceptExpr, valuation: Mapping) -> bool:
    """Truth value of a role-free expression; atoms absent from the valuation are false."""
    if isinstance(e, Top):
        return True
    if isinstance(e, Bottom):
        return False
    if isinstance(e, Atom):
        return valuation.get(e.oid, False)
    if isinstance(e, NlAtom):
        return valuation.get(e.unit, False)
    if isinstance(e, Not):
        return not evaluate(e.operand, valuation)
    if isinstance(e, And):
        return all(evaluate(op, valuation) for op in e.operands)
    if isinstance(e, Or):
        return any(evaluate(op, valuation) for op in e.operands)
    raise OracleInputError(f"Oracle cannot evaluate {e!r}")


def holds(a: DlAxiom, valuation: Mapping) -> bool:
    lhs, rhs = evaluate(a.lhs, valuation), evaluate(a.rhs, valuation)
    if isinstance(a, Equiv):
        return lhs == rhs
    return (not lhs) or rhs


def _variables(axioms) -> list:
    names = set()
    for axiom in axioms:
        for side in (axiom.lhs, axiom.rhs):
            if has_roles(side):
                raise OracleInputError("Oracle inputs must be role-free")
            names |= class_oids(side)
            names |= lexical_units(side)
    return sorted(names, key=lambda n: (0, n.key) if isinstance(n, Oid) else (1, (n.lang, n.text)))


def oracle_entails(t: Tbox, a: DlAxiom, max_atoms: int = MAX_ATOMS) -> bool:
    """True iff every valuation satisfying all axioms of t satisfies a."""
    variables = _variables([*t.axioms, a])
    if len(variables) > min(max_atoms, MAX_ATOMS):
        raise OracleInputError(f"Oracle signature has {len(variables)} atoms (limit {min(max_atoms, MAX_ATOMS)})")
    for values in product((False, True), repeat=len(variables)):
        valuation = dict(zip(variables, values))
        if all(holds(axiom, valuation) for axiom in t.axioms) and not holds(a, valuation):
            return False
    return True


def oracle_equivalent(left: ConceptExpr, right: ConceptExpr) -> bool:
    """
    Same truth value under every valuation of the empty theory.

    Evaluates the expressions as given, without normalizing them first.
    """
    for side in (left, right):
        if has_roles(side):
            raise OracleInputError("Oracle inputs must be role-free")
    variables = sorted(class_oids(left) | class_oids(right), key=lambda o: o.key)
    variables += sorted(lexical_units(left) | lexical_units(right), key=lambda u: (u.lang, u.text))
    if len(variables) > MAX_ATOMS:
        raise OracleInputError(f"Oracle signature has {len(variables)} atoms (limit {MAX_ATOMS})")
    for values in product((False, True), repeat=len(variables)):
        valuation = dict(zip(variables, values))
        if evaluate(left, valuation) != evaluate(right, valuation):
            return False
    return True


def oracle_satisfiable(c: ConceptExpr, t: Tbox) -> bool:
    return not oracle_entails(t, Equiv(c, Bottom()))


class TruthTableOracle:
    """Oracle entry point bounded by ``config.oracle_max_atoms``."""

    def __init__(self, config: OntoCompConfig = None):
        self.config = config or DEFAULT_CONFIG

    @property
    def max_atoms(self) -> int:
        return self.config.oracle_max_atoms

    def entails(self, t: Tbox, a: DlAxiom) -> bool:
        return oracle_entails(t, a, self.max_atoms)

    def is_satisfiable(self, c: ConceptExpr, t: Tbox) -> bool:
        return not self.entails(t, Equiv(c, Bottom()))
