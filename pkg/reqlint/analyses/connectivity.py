"""
Connected Requirements Check

Two requirements are connected when they share a proposition or numerical
variable. A set that splits into several components often hides a typo or a
missing requirement.
"""

import logging
from collections import deque
from typing import Iterable, List, Tuple

from reqlint.analyses.results import ConnectivityResult, DependencyGraph
from reqlint.psp.requirement import Requirement

logger = logging.getLogger("reqlint.connectivity")


def build_dependency_graph(requirements: Iterable[Requirement]) -> DependencyGraph:
    requirements = list(requirements)
    variables = [set(r.variables) for r in requirements]
    edges = set()
    for i in range(len(requirements)):
        for j in range(i + 1, len(requirements)):
            if variables[i] & variables[j]:
                edges.add(frozenset((requirements[i].id, requirements[j].id)))
    return DependencyGraph(tuple(r.id for r in requirements), frozenset(edges))


def connected_components(graph: DependencyGraph) -> List[Tuple[str, ...]]:
    """Components in discovery order, members in vertex order"""
    order = {vertex: i for i, vertex in enumerate(graph.vertices)}
    seen = set()
    components = []
    for start in graph.vertices:
        if start in seen:
            continue
        seen.add(start)
        members = [start]
        queue = deque([start])
        while queue:
            vertex = queue.popleft()
            for other in graph.neighbors(vertex):
                if other not in seen:
                    seen.add(other)
                    members.append(other)
                    queue.append(other)
        components.append(tuple(sorted(members, key=order.__getitem__)))
    return components


def check_connectivity(requirements: Iterable[Requirement]) -> ConnectivityResult:
    """
    Compute the connected components of the dependency graph

    Components are sorted by size, then by their smallest id. When there is
    more than one component, every component of minimum size is flagged.

    Args:
        requirements: Parsed requirements

    Returns:
        ConnectivityResult: Components and flagged components
    """
    graph = build_dependency_graph(requirements)
    components = sorted(connected_components(graph), key=lambda c: (len(c), min(c)))

    flagged = []
    if len(components) > 1:
        smallest = len(components[0])
        flagged = [c for c in components if len(c) == smallest]
        for component in flagged:
            logger.warning(f"Requirements {', '.join(component)} share no variable with the rest of the set")
    return ConnectivityResult(components, flagged)
