"""
Arrowing engine resource for Dagster.
Exhaustive search over red/blue colorings of F for a coloring with no monochromatic H.
"""

import math
import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import dagster as dg

from models import (
    ArrowingResult,
    BudgetExhausted,
    Color,
    ColoringError,
    Edge,
    EdgeColoring,
    Graph,
    PreconditionError,
    SearchStats,
    Verdict,
    norm_edge,
)

from graphs.canonical import canonical_hash
from graphs.embedding import RootedMatcher, automorphisms, edge_permutations
from graphs.operations import induced_subgraph

logger = dg.get_dagster_logger("engine.arrowing")

# Wall clock and the shared node counter are consulted once per this many nodes.
CHECK_INTERVAL = 256


@dataclass(frozen=True)
class SearchBudget:
    """Per-call limits; None falls back to the engine's configured value."""

    max_nodes: Optional[int] = None
    timeout_ms: Optional[int] = None


class _Exhausted(Exception):
    pass


class _Cancelled(Exception):
    pass


class _Budget:
    """
    Node and wall-clock accounting for one search.

    Subtree processes each hold their own _Budget; `shared_nodes` (a multiprocessing Value)
    carries the node total across them and `stop` (a multiprocessing Event) cancels them.
    """

    def __init__(
        self,
        max_nodes: Optional[int],
        deadline: Optional[float],
        stop: Optional[Any] = None,
        shared_nodes: Optional[Any] = None,
    ):
        self.max_nodes = max_nodes
        self.started = time.monotonic()
        self.deadline = deadline
        self.stop = stop
        self.shared_nodes = shared_nodes
        self.committed = 0
        self.prunes = 0

    def _total(self) -> int:
        return self.shared_nodes.value if self.shared_nodes is not None else self.committed

    def commit(self, nodes: int, prunes: int = 0, owner_found: bool = False) -> None:
        self.committed += nodes
        self.prunes += prunes
        if self.shared_nodes is not None:
            with self.shared_nodes.get_lock():
                self.shared_nodes.value += nodes
        if self.max_nodes is not None and self._total() > self.max_nodes:
            raise _Exhausted(f"node limit {self.max_nodes} reached")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _Exhausted(f"timeout after {self.elapsed_ms():.0f} ms")
        if self.stop is not None and self.stop.is_set() and not owner_found:
            raise _Cancelled()

    def over_nodes(self, pending: int) -> bool:
        return self.max_nodes is not None and self._total() + pending > self.max_nodes

    def elapsed_ms(self) -> float:
        return (time.monotonic() - self.started) * 1000.0

    def stats(self, subtrees: int = 1) -> SearchStats:
        return SearchStats(
            nodes=self.committed, prunes=self.prunes, wall_time_ms=self.elapsed_ms(), subtrees=subtrees
        )


class _Problem:
    """Everything about one (F, H, fixed colors) query that workers share read-only."""

    def __init__(self, f: Graph, h: Graph, fixed: Mapping[Edge, Color], swap_symmetry: bool, use_automorphisms: bool):
        self.query = (f, h, dict(fixed), swap_symmetry, use_automorphisms)
        self.f = f
        self.h = h
        self.matcher = RootedMatcher(h)
        fixed_index = {}
        for (u, v), color in fixed.items():
            e = norm_edge(u, v)
            if e not in f.edge_index:
                raise ColoringError(f"fixed edge {e} is not an edge of F")
            fixed_index[f.edge_index[e]] = color
        degrees = f.degrees
        free = [i for i in range(f.num_edges) if i not in fixed_index]
        # dense regions first; ties broken by edge label
        free.sort(key=lambda i: (-(degrees[f.edges[i][0]] + degrees[f.edges[i][1]]), f.edges[i]))
        self.fixed = sorted(fixed_index.items())
        self.order: List[int] = free
        unconstrained = not fixed_index
        self.fix_first_red = swap_symmetry and unconstrained and bool(self.order)
        self.edge_perms: List[Tuple[int, ...]] = []
        if use_automorphisms and unconstrained:
            auts = automorphisms(f)
            if auts is None:
                logger.debug("automorphism group too large; lex-leader reduction disabled")
            else:
                self.edge_perms = [p for p in edge_permutations(f, auts) if p != tuple(range(f.num_edges))]


class _Worker:
    """Depth-first search from one partial assignment."""

    def __init__(self, problem: _Problem, budget: _Budget):
        self.p = problem
        self.budget = budget
        n = problem.f.n
        self.rows = {Color.RED: [0] * n, Color.BLUE: [0] * n}
        self.colors: List[Optional[Color]] = [None] * problem.f.num_edges
        self.pending = 0
        self.prunes = 0
        self.found = False

    # ------------------------------------------------------------------ #
    # State
    # ------------------------------------------------------------------ #
    def _set(self, edge: int, color: Color) -> None:
        u, v = self.p.f.edges[edge]
        rows = self.rows[color]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        self.colors[edge] = color

    def _unset(self, edge: int) -> None:
        u, v = self.p.f.edges[edge]
        rows = self.rows[self.colors[edge]]
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        self.colors[edge] = None

    def _creates_copy(self, edge: int) -> bool:
        u, v = self.p.f.edges[edge]
        rows = self.rows[self.colors[edge]]
        return self.p.matcher.through_edge(rows, self.p.f.n, u, v) is not None

    def apply_fixed(self) -> bool:
        """Colors the fixed edges; False when they already force a monochromatic copy."""
        for edge, color in self.p.fixed:
            self._set(edge, color)
            if self._creates_copy(edge):
                return False
        return True

    def replay(self, prefix: Sequence[Color]) -> None:
        for pos, color in enumerate(prefix):
            self._set(self.p.order[pos], color)

    def coloring(self) -> EdgeColoring:
        return EdgeColoring(self.p.f, tuple(self.colors))

    # ------------------------------------------------------------------ #
    # Search
    # ------------------------------------------------------------------ #
    def _tick(self) -> None:
        self.pending += 1
        if self.pending >= CHECK_INTERVAL or self.budget.over_nodes(self.pending):
            self.flush()

    def flush(self) -> None:
        pending, prunes = self.pending, self.prunes
        self.pending = self.prunes = 0
        self.budget.commit(pending, prunes, owner_found=self.found)

    def _lex_rejects(self, depth: int) -> bool:
        """True when some symmetric image of the partial coloring is lexicographically smaller."""
        order, colors = self.p.order, self.colors
        for perm in self.p.edge_perms:
            for swap in (False, True):
                for pos in range(depth + 1):
                    mine = colors[order[pos]]
                    theirs = colors[perm[order[pos]]]
                    if theirs is None:
                        break
                    if swap:
                        theirs = theirs.other
                    if theirs is mine:
                        continue
                    if theirs is Color.RED:
                        return True
                    break
        return False

    def _choices(self, pos: int) -> Tuple[Color, ...]:
        if pos == 0 and self.p.fix_first_red:
            return (Color.RED,)
        return (Color.RED, Color.BLUE)

    def search(self, pos: int, stop_depth: Optional[int] = None, frontier: Optional[list] = None) -> bool:
        """True once a complete mono-free coloring is in place (colors left set)."""
        order = self.p.order
        if pos == len(order):
            return True
        if stop_depth is not None and pos == stop_depth:
            frontier.append(tuple(self.colors[order[i]] for i in range(pos)))
            return False
        edge = order[pos]
        for color in self._choices(pos):
            self._tick()
            self._set(edge, color)
            if self._creates_copy(edge) or (self.p.edge_perms and self._lex_rejects(pos)):
                self.prunes += 1
            elif self.search(pos + 1, stop_depth, frontier):
                return True
            self._unset(edge)
        return False


@dataclass(frozen=True)
class _SubtreeOutcome:
    colors: Optional[Tuple[Color, ...]] = None
    nodes: int = 0
    prunes: int = 0
    exhausted: Optional[str] = None


# Per-process state of the subtree pool, filled by _init_subtree_process.
_subtree_state: Dict[str, Any] = {}


def _init_subtree_process(query: tuple, max_nodes: Optional[int], deadline: Optional[float], stop, shared_nodes) -> None:
    _subtree_state["problem"] = _Problem(*query)
    _subtree_state["budget"] = (max_nodes, deadline, stop, shared_nodes)


def _explore_subtree(prefix: Tuple[Color, ...]) -> _SubtreeOutcome:
    budget = _Budget(*_subtree_state["budget"])
    if budget.stop.is_set():
        return _SubtreeOutcome()
    worker = _Worker(_subtree_state["problem"], budget)
    worker.apply_fixed()
    worker.replay(prefix)
    colors = None
    try:
        found = worker.search(len(prefix))
    except _Cancelled:
        found = False
    except _Exhausted as e:
        budget.stop.set()
        return _SubtreeOutcome(nodes=budget.committed, prunes=budget.prunes, exhausted=str(e))
    if found:
        colors = tuple(worker.colors)
        budget.stop.set()
    worker.found = found
    try:
        worker.flush()
    except (_Cancelled, _Exhausted):
        pass
    return _SubtreeOutcome(colors=colors, nodes=budget.committed, prunes=budget.prunes)


class ArrowingEngine(dg.ConfigurableResource):
    """
    Exact arrowing decisions F -> H.

    Config:
        max_nodes: Search-node limit per call (default: unlimited)
        timeout_ms: Wall-clock limit per call (default: unlimited)
        threads: Worker processes for the split search (default: 1)
        deterministic: Run the canonical sequential order regardless of threads (default: False)
        split_depth: Tree levels enumerated up front to form parallel subtrees (default: 6)
        use_automorphisms: Lex-leader reduction over Aut(F) (default: False)
        swap_symmetry: Fix the first branching edge red (default: True)
    """

    max_nodes: Optional[int] = None
    timeout_ms: Optional[int] = None
    threads: int = 1
    deterministic: bool = False
    split_depth: int = 6
    use_automorphisms: bool = False
    swap_symmetry: bool = True

    def _budget(self, budget: Optional[SearchBudget]) -> _Budget:
        budget = budget or SearchBudget()
        max_nodes = budget.max_nodes if budget.max_nodes is not None else self.max_nodes
        timeout_ms = budget.timeout_ms if budget.timeout_ms is not None else self.timeout_ms
        deadline = time.monotonic() + timeout_ms / 1000.0 if timeout_ms else None
        return _Budget(max_nodes, deadline)

    def _parallel(self) -> bool:
        return self.threads > 1 and not self.deterministic

    # ------------------------------------------------------------------ #
    # Core search
    # ------------------------------------------------------------------ #
    def _solve(
        self,
        f: Graph,
        h: Graph,
        fixed: Mapping[Edge, Color],
        budget: Optional[SearchBudget],
    ) -> Tuple[Optional[EdgeColoring], SearchStats]:
        if h.num_edges == 0:
            raise PreconditionError("H must have at least one edge")
        tracker = self._budget(budget)
        problem = _Problem(f, h, fixed, self.swap_symmetry, self.use_automorphisms)
        root = _Worker(problem, tracker)
        try:
            if not root.apply_fixed():
                return None, tracker.stats()
            if not self._parallel() or len(problem.order) <= self.split_depth:
                found = root.search(0)
                root.found = found
                root.flush()
                return (root.coloring() if found else None), tracker.stats()
            frontier: list = []
            if root.search(0, stop_depth=self.split_depth, frontier=frontier):
                root.found = True
                root.flush()
                return root.coloring(), tracker.stats()
            root.flush()
            witness = self._run_subtrees(problem, tracker, frontier)
            return witness, tracker.stats(subtrees=max(1, len(frontier)))
        except _Exhausted as e:
            stats = tracker.stats()
            logger.warning(f"search budget exhausted ({e}) after {stats.nodes} nodes")
            raise BudgetExhausted(f"search budget exhausted: {e}", stats) from e

    def _run_subtrees(self, problem: _Problem, tracker: _Budget, frontier: List[tuple]) -> Optional[EdgeColoring]:
        """Explores each frontier prefix in a worker process; the first witness in frontier order wins."""
        context = multiprocessing.get_context()
        stop = context.Event()
        shared_nodes = context.Value("q", tracker.committed)
        logger.debug(f"splitting search into {len(frontier)} subtrees over {self.threads} processes")
        # the monotonic clock is system-wide, so the deadline holds in every process
        with ProcessPoolExecutor(
            max_workers=self.threads,
            mp_context=context,
            initializer=_init_subtree_process,
            initargs=(problem.query, tracker.max_nodes, tracker.deadline, stop, shared_nodes),
        ) as pool:
            outcomes = list(pool.map(_explore_subtree, frontier))
        tracker.committed = shared_nodes.value
        tracker.prunes += sum(outcome.prunes for outcome in outcomes)
        for outcome in outcomes:
            if outcome.colors is not None:
                return EdgeColoring(problem.f, outcome.colors)
        for outcome in outcomes:
            if outcome.exhausted is not None:
                raise _Exhausted(outcome.exhausted)
        return None

    # ------------------------------------------------------------------ #
    # Public operations
    # ------------------------------------------------------------------ #
    def arrows(self, f: Graph, h: Graph, budget: Optional[SearchBudget] = None) -> ArrowingResult:
        """Arrows when every coloring of F has a monochromatic H; otherwise NotArrows with a witness."""
        witness, stats = self._solve(f, h, {}, budget)
        verdict = Verdict.NOT_ARROWS if witness is not None else Verdict.ARROWS
        logger.info(
            f"F(n={f.n}, m={f.num_edges}) vs H(n={h.n}, m={h.num_edges}): {verdict.value} "
            f"after {stats.nodes} nodes, {stats.prunes} prunes"
        )
        return ArrowingResult(verdict, witness, stats)

    def find_coloring(
        self,
        f: Graph,
        h: Graph,
        fixed: Optional[Mapping[Edge, Color]] = None,
        budget: Optional[SearchBudget] = None,
    ) -> Optional[EdgeColoring]:
        """A mono-free coloring of F agreeing with `fixed`, or None when none exists."""
        witness, stats = self._solve(f, h, fixed or {}, budget)
        logger.debug(f"constrained search over {len(fixed or {})} fixed edges: {stats.nodes} nodes")
        return witness

    def epsilon_counterexample(
        self, f: Graph, h: Graph, eps: float, budget: Optional[SearchBudget] = None
    ) -> Optional[Tuple[Tuple[int, ...], EdgeColoring]]:
        """
        A vertex set S with |S| >= eps*|V(F)| whose induced subgraph does not arrow H, with its witness.

        Only sets of size ceil(eps*n) are tried: a larger set contains one of them, and induced
        supergraphs of a Ramsey graph are Ramsey.
        """
        if not 0 < eps <= 1:
            raise PreconditionError(f"eps must lie in (0, 1], got {eps}")
        size = math.ceil(round(eps * f.n, 9))
        verdicts: Dict[str, Optional[EdgeColoring]] = {}
        for subset in combinations(range(f.n), size):
            sub, _ = induced_subgraph(f, subset)
            key = canonical_hash(sub)
            if key not in verdicts:
                verdicts[key] = self.arrows(sub, h, budget).witness
            if verdicts[key] is not None:
                return subset, verdicts[key]
        return None

    def epsilon_arrows(self, f: Graph, h: Graph, eps: float, budget: Optional[SearchBudget] = None) -> bool:
        return self.epsilon_counterexample(f, h, eps, budget) is None


def default_engine(engine: Optional[ArrowingEngine] = None) -> ArrowingEngine:
    return engine if engine is not None else ArrowingEngine()


def arrows(
    f: Graph, h: Graph, budget: Optional[SearchBudget] = None, engine: Optional[ArrowingEngine] = None
) -> ArrowingResult:
    return default_engine(engine).arrows(f, h, budget)


def find_coloring(
    f: Graph,
    h: Graph,
    fixed: Optional[Mapping[Edge, Color]] = None,
    budget: Optional[SearchBudget] = None,
    engine: Optional[ArrowingEngine] = None,
) -> Optional[EdgeColoring]:
    return default_engine(engine).find_coloring(f, h, fixed, budget)


def epsilon_arrows(
    f: Graph, h: Graph, eps: float, budget: Optional[SearchBudget] = None, engine: Optional[ArrowingEngine] = None
) -> bool:
    return default_engine(engine).epsilon_arrows(f, h, eps, budget)
