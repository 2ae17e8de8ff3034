"""Problem instances, solutions, feasibility checking, and objective/gap.

Task indices are 1-based: index i in a route refers to ``instance.tasks[i-1]``;
index 0 is the depot.  Routes store only real task visits, the depot
start/end legs are implicit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .rng import GENERATOR_NAME, SplitMix64

# Absolute slack on the budget check, absorbs float summation order.
BUDGET_TOL = 1e-9

Point = tuple[float, float]


@dataclass(frozen=True)
class Instance:
    """Depot + task coordinates, fleet size, per-vehicle distance budget."""

    depot: Point
    tasks: tuple[Point, ...]
    n_vehicles: int
    budget: float
    seed: int | None = None  # generation seed, kept for file provenance

    def __post_init__(self):
        if len(self.tasks) < 1:
            raise ValueError("instance needs at least one task")
        if self.n_vehicles < 1:
            raise ValueError("instance needs at least one vehicle")
        if self.budget <= 0:
            raise ValueError("budget must be positive")

    @property
    def n_tasks(self) -> int:
        return len(self.tasks)

    def coords(self) -> np.ndarray:
        """(N, 2) array, row 0 = depot, rows 1..N-1 = tasks."""
        return np.asarray([self.depot, *self.tasks], dtype=np.float64)

    def point(self, index: int) -> Point:
        """Coordinates for task index 0..N-1 (0 = depot)."""
        if index == 0:
            return self.depot
        if 1 <= index <= len(self.tasks):
            return self.tasks[index - 1]
        raise IndexError(f"task index {index} out of range 1..{len(self.tasks)}")


@dataclass(frozen=True)
class Route:
    """One vehicle's ordered visits (task indices, depot legs implicit)."""

    vehicle_id: int
    visits: tuple[int, ...] = ()


@dataclass(frozen=True)
class Solution:
    """One Route per vehicle, in vehicle order 1..V."""

    routes: tuple[Route, ...]

    def total_visits(self) -> int:
        return sum(len(r.visits) for r in self.routes)


@dataclass
class ValidationReport:
    feasible: bool
    violations: list[tuple[str, str]] = field(default_factory=list)


def euclid(a: Point, b: Point) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def generate_instance(seed: int, n_tasks: int, n_vehicles: int, budget: float) -> Instance:
    """Sample depot and tasks i.i.d. uniform on the unit square.

    Pure function of its arguments: the same seed gives a bitwise-identical
    instance.  Draw order is depot (x, y) then each task (x, y).
    """
    if n_tasks < 1 or n_vehicles < 1:
        raise ValueError("n_tasks and n_vehicles must be >= 1")
    if budget <= 0:
        raise ValueError("budget must be positive")
    rng = SplitMix64(seed)
    depot = (rng.next_double(), rng.next_double())
    tasks = tuple((rng.next_double(), rng.next_double()) for _ in range(n_tasks))
    return Instance(depot=depot, tasks=tasks, n_vehicles=n_vehicles,
                    budget=float(budget), seed=seed)


def route_length(route: Route, instance: Instance) -> float:
    """Closed tour length depot -> visits... -> depot; empty route is 0."""
    if not route.visits:
        return 0.0
    pts = [instance.point(i) for i in route.visits]
    total = euclid(instance.depot, pts[0])
    for a, b in zip(pts, pts[1:]):
        total += euclid(a, b)
    total += euclid(pts[-1], instance.depot)
    return total


def validate_solution(solution: Solution, instance: Instance) -> ValidationReport:
    """Check uniqueness, index validity, and the per-route budget.

    Subtours cannot be expressed by the Route representation, so the
    remaining constraints reduce to: each task at most once anywhere,
    every index valid, every route within budget (+ BUDGET_TOL).
    """
    violations: list[tuple[str, str]] = []
    if len(solution.routes) != instance.n_vehicles:
        violations.append(("routes", f"expected {instance.n_vehicles} routes, "
                           f"got {len(solution.routes)}"))
    seen: dict[int, int] = {}
    for route in solution.routes:
        for i in route.visits:
            if not (1 <= i <= instance.n_tasks):
                violations.append(("index", f"route {route.vehicle_id} visits "
                                   f"unknown task {i}"))
                continue
            if i in seen:
                violations.append(("constraint-(1-3)", f"task {i} appears in "
                                   f"routes {seen[i]} and {route.vehicle_id}"))
            else:
                seen[i] = route.vehicle_id
    for route in solution.routes:
        if any(not (1 <= i <= instance.n_tasks) for i in route.visits):
            continue
        length = route_length(route, instance)
        if length > instance.budget + BUDGET_TOL:
            violations.append(("constraint-(5)", f"route {route.vehicle_id} "
                               f"length {length:.6f} exceeds budget {instance.budget}"))
    return ValidationReport(feasible=not violations, violations=violations)


def objective(solution: Solution) -> int:
    """Total number of executed tasks."""
    return solution.total_visits()


def gap(obj: float, best: float) -> float:
    """Normalized shortfall from the best objective, in percent."""
    if best <= 0:
        raise ValueError("best objective must be positive")
    return (best - obj) / best * 100.0


# --- interchange file formats -------------------------------------------

def format_instance(instance: Instance) -> str:
    lines = ["uavsched v1"]
    if instance.seed is not None:
        lines.append(f"# rng {GENERATOR_NAME} seed {instance.seed}")
    lines.append(f"vehicles {instance.n_vehicles}")
    lines.append(f"budget {instance.budget!r}")
    lines.append(f"depot {instance.depot[0]!r} {instance.depot[1]!r}")
    for x, y in instance.tasks:
        lines.append(f"task {x!r} {y!r}")
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> Instance:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0] != "uavsched v1":
        raise ValueError("not a uavsched v1 instance file")
    vehicles = budget = depot = None
    tasks: list[Point] = []
    for ln in lines[1:]:
        key, *rest = ln.split()
        if key == "vehicles":
            vehicles = int(rest[0])
        elif key == "budget":
            budget = float(rest[0])
        elif key == "depot":
            depot = (float(rest[0]), float(rest[1]))
        elif key == "task":
            tasks.append((float(rest[0]), float(rest[1])))
        else:
            raise ValueError(f"unknown instance line: {ln}")
    if vehicles is None or budget is None or depot is None:
        raise ValueError("instance file missing vehicles/budget/depot")
    return Instance(depot=depot, tasks=tuple(tasks), n_vehicles=vehicles, budget=budget)


def write_instance(instance: Instance, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_instance(instance))


def read_instance(path) -> Instance:
    with open(path) as fh:
        return parse_instance(fh.read())


def format_solution(solution: Solution) -> str:
    lines = []
    for route in solution.routes:
        visits = " ".join(str(i) for i in route.visits)
        lines.append(f"route {route.vehicle_id}:" + (f" {visits}" if visits else ""))
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> Solution:
    routes = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        if not ln.startswith("route "):
            raise ValueError(f"unknown solution line: {ln}")
        head, _, rest = ln.partition(":")
        vehicle_id = int(head.split()[1])
        visits = tuple(int(tok) for tok in rest.split())
        routes.append(Route(vehicle_id=vehicle_id, visits=visits))
    return Solution(routes=tuple(routes))


def write_solution(solution: Solution, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_solution(solution))


def read_solution(path) -> Solution:
    with open(path) as fh:
        return parse_solution(fh.read())


def empty_solution(n_vehicles: int) -> Solution:
    return Solution(routes=tuple(Route(vehicle_id=k) for k in range(1, n_vehicles + 1)))


def solution_from_visit_lists(visit_lists: Sequence[Iterable[int]]) -> Solution:
    return Solution(routes=tuple(
        Route(vehicle_id=k + 1, visits=tuple(v)) for k, v in enumerate(visit_lists)))
