"""Gács-Körner common information through the support graph.

The common part of (X, Y) is the connected component of the bipartite
graph whose nodes are the supported symbols of X and Y and whose edges are
the cells of positive mass. Its entropy is the Gács-Körner common
information, and it is positive exactly when the maximal correlation is 1.
"""

from __future__ import annotations

import networkx as nx
import numpy as np

from corrlab.common.constants import MASS_TOL
from corrlab.common.units import Unit
from corrlab.dist.models import FloatArray, JointDist2
from corrlab.info.entropy import entropy


def _support_graph(p: FloatArray) -> nx.Graph:
    graph = nx.Graph()
    px = p.sum(axis=1)
    py = p.sum(axis=0)
    graph.add_nodes_from(("x", int(i)) for i in np.flatnonzero(px > MASS_TOL))
    graph.add_nodes_from(("y", int(j)) for j in np.flatnonzero(py > MASS_TOL))
    rows, cols = np.nonzero(p > MASS_TOL)
    graph.add_edges_from(
        (("x", int(i)), ("y", int(j))) for i, j in zip(rows, cols, strict=True)
    )
    return graph


def common_part(d: JointDist2) -> tuple[list[int], list[int]]:
    """Component index of every x and every y; -1 for unsupported symbols.

    Components are numbered by their smallest x index so the labelling is
    deterministic. Both returned lists map a symbol to the value of the
    common variable, which is a function of X alone and of Y alone.
    """
    p = d.array
    graph = _support_graph(p)
    components = sorted(
        nx.connected_components(graph),
        key=lambda c: min((i for kind, i in c if kind == "x"), default=p.shape[0]),
    )
    x_part = [-1] * p.shape[0]
    y_part = [-1] * p.shape[1]
    for k, component in enumerate(components):
        for kind, i in component:
            if kind == "x":
                x_part[i] = k
            else:
                y_part[i] = k
    return x_part, y_part


def common_part_masses(d: JointDist2) -> FloatArray:
    """Distribution of the common part."""
    x_part, _ = common_part(d)
    px = d.array.sum(axis=1)
    n = max(x_part) + 1
    masses = np.zeros(max(n, 1))
    for i, k in enumerate(x_part):
        if k >= 0:
            masses[k] += px[i]
    return masses


def gk_common_info(d: JointDist2, unit: Unit = Unit.BITS) -> float:
    """C_GK(X;Y): entropy of the connected-component masses."""
    return entropy(common_part_masses(d), unit)


__all__ = ["common_part", "common_part_masses", "gk_common_info"]
