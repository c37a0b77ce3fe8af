"""
Satisfiability Checker

On-the-fly generalized Büchi emptiness check over the tableau graph. States
are explored depth-first; strongly connected components are tracked with a
stack of (root number, acceptance mask) pairs and merged whenever a back edge
closes a cycle. The search stops at the first component whose merged mask
covers every fairness set. Every witness is re-checked with the independent
lasso evaluator before it is returned.
"""

import logging
import time
from collections import deque
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional

from reqlint.ltl.formula import Formula, is_boolean
from reqlint.ltl.lasso import LassoTrace, eval_on_lasso
from reqlint.ltl.transforms import to_nnf
from reqlint.engine.tableau import TableauGraph

DEFAULT_MAX_STATES = 1_000_000
DEFAULT_TIMEOUT = 60.0

# Marks a state whose component has been fully explored and rejected
_DEAD = 0


class EngineError(Exception):
    """Base class for satisfiability engine errors"""


class ResourceLimit(EngineError):
    """A configured state or time cap was exceeded"""

    def __init__(self, kind: str, stats: "EngineStats"):
        super().__init__(f"Resource limit reached ({kind}) after {stats.states} states, {stats.elapsed:.2f}s")
        self.kind = kind
        self.stats = stats


class WitnessError(EngineError):
    """A produced witness does not satisfy the formula"""


@dataclass
class EngineStats:
    """Exploration statistics of one check"""

    states: int = 0
    edges: int = 0
    sccs: int = 0
    elapsed: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class SatVerdict:
    """Result of a satisfiability check

    Attributes:
        satisfiable: True if the formula has a model
        witness: Lasso model of the formula, present iff satisfiable
        stats: Exploration statistics
        graph: Explored tableau (None for verdicts built without the engine)
        abstraction: Boolean abstraction the check was run on, if any
    """

    satisfiable: bool
    witness: Optional[LassoTrace]
    stats: EngineStats
    graph: Optional[TableauGraph] = None
    abstraction: Optional[Any] = None

    def __post_init__(self):
        if self.satisfiable != (self.witness is not None):
            raise ValueError("A verdict carries a witness exactly when it is satisfiable")


class SatChecker:
    """LTL satisfiability checker with state and time caps"""

    def __init__(self, max_states: int = DEFAULT_MAX_STATES, timeout: Optional[float] = DEFAULT_TIMEOUT):
        """
        Initialize checker

        Args:
            max_states: Maximum number of tableau states to create
            timeout: Wall-clock limit in seconds (None for no limit)
        """
        self.logger = logging.getLogger("reqlint.SatChecker")
        self.max_states = max_states
        self.timeout = timeout
        self._stats = EngineStats()
        self._started = 0.0

    def check(self, formula: Formula) -> SatVerdict:
        """
        Decide satisfiability of a propositional LTL formula

        Args:
            formula: Formula without numerical atoms (converted to NNF here)

        Returns:
            SatVerdict: Verdict with a verified lasso witness when satisfiable

        Raises:
            EngineError: If the formula contains numerical atoms
            ResourceLimit: If the state or time cap is exceeded
            WitnessError: If the extracted witness fails verification
        """
        if not is_boolean(formula):
            raise EngineError("Numerical atoms must be abstracted before the satisfiability check")

        self._stats = EngineStats()
        self._started = time.monotonic()
        graph = TableauGraph(to_nnf(formula), on_new_state=self._on_new_state, tick=self._check_time)

        witness = self._search(graph)
        self._finish(graph)

        if witness is not None and not eval_on_lasso(formula, witness):
            raise WitnessError(f"Witness {witness!r} does not satisfy the formula")

        self.logger.debug(
            f"{'SAT' if witness is not None else 'UNSAT'}: {self._stats.states} states, "
            f"{self._stats.edges} edges, {self._stats.sccs} SCCs, {self._stats.elapsed:.3f}s"
        )
        return SatVerdict(witness is not None, witness, self._stats, graph)

    def _on_new_state(self, count: int):
        self._stats.states = count
        if count > self.max_states:
            raise ResourceLimit("states", self._snapshot())
        if count % 256 == 0:
            self._check_time()

    def _check_time(self):
        if self.timeout is not None and time.monotonic() - self._started > self.timeout:
            raise ResourceLimit("time", self._snapshot())

    def _snapshot(self) -> EngineStats:
        return EngineStats(
            states=self._stats.states,
            edges=self._stats.edges,
            sccs=self._stats.sccs,
            elapsed=time.monotonic() - self._started,
        )

    def _finish(self, graph: TableauGraph):
        self._stats.states = len(graph)
        self._stats.edges = graph.edge_count
        self._stats.elapsed = time.monotonic() - self._started

    def _search(self, graph: TableauGraph) -> Optional[LassoTrace]:
        number: Dict[int, int] = {}
        roots: List[List[int]] = []  # [dfs number, acceptance mask]
        live: List[int] = []
        count = 0

        for initial in graph.initial:
            if initial in number:
                continue

            count += 1
            number[initial] = count
            roots.append([count, graph.masks[initial]])
            live.append(initial)
            path = [(initial, iter(graph.successors(initial)))]

            while path:
                state, successors = path[-1]
                target = next(successors, None)

                if target is None:
                    path.pop()
                    if roots[-1][0] == number[state]:
                        roots.pop()
                        while True:
                            member = live.pop()
                            number[member] = _DEAD
                            if member == state:
                                break
                        self._stats.sccs += 1
                    continue

                if target not in number:
                    count += 1
                    number[target] = count
                    roots.append([count, graph.masks[target]])
                    live.append(target)
                    path.append((target, iter(graph.successors(target))))
                    continue

                if number[target] == _DEAD:
                    continue

                # Back or cross edge into a live component: collapse the cycle
                mask = 0
                while roots[-1][0] > number[target]:
                    mask |= roots.pop()[1]
                roots[-1][1] |= mask
                if roots[-1][1] == graph.all_accepting:
                    self._stats.sccs += 1
                    return self._witness(graph, number, roots[-1][0], [s for s, _ in path])

        return None

    def _witness(self, graph: TableauGraph, number: Dict[int, int], root_number: int,
                 path: List[int]) -> LassoTrace:
        component = {state for state, n in number.items() if n >= root_number}
        root = next(state for state in path if number[state] == root_number)
        prefix = path[: path.index(root)]

        # Visit every fairness set in order, then close the cycle at the root
        cycle = [root]
        current = root
        for index in range(len(graph.fairness)):
            if graph.accepts(current, index):
                continue
            steps = self._shortest_path(graph, component, current, lambda s: graph.accepts(s, index))
            cycle.extend(steps)
            current = cycle[-1]
        cycle.extend(self._shortest_path(graph, component, current, lambda s: s == root))
        loop = cycle[:-1]

        return LassoTrace(
            tuple(graph.assignment(state) for state in prefix),
            tuple(graph.assignment(state) for state in loop),
        )

    @staticmethod
    def _shortest_path(graph: TableauGraph, component, source: int, goal) -> List[int]:
        # Breadth-first search over explored edges; at least one step is taken
        parent: Dict[int, int] = {}
        queue = deque()
        for target in graph.edges.get(source, ()):
            if target in component and target not in parent:
                parent[target] = source
                queue.append(target)
        while queue:
            state = queue.popleft()
            if goal(state):
                steps = [state]
                while parent[steps[-1]] != source:
                    steps.append(parent[steps[-1]])
                return steps[::-1]
            for target in graph.edges.get(state, ()):
                if target in component and target not in parent:
                    parent[target] = state
                    queue.append(target)
        raise WitnessError("Accepting component is not strongly connected")


def check_sat(formula: Formula, max_states: int = DEFAULT_MAX_STATES,
              timeout: Optional[float] = DEFAULT_TIMEOUT) -> SatVerdict:
    """
    Decide satisfiability of a propositional LTL formula

    Args:
        formula: Formula without numerical atoms
        max_states: Tableau state cap
        timeout: Wall-clock cap in seconds

    Returns:
        SatVerdict: Verdict with a verified witness when satisfiable
    """
    return SatChecker(max_states=max_states, timeout=timeout).check(formula)
