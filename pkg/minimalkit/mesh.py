# -*- coding: utf-8 -*-
#
# This file is part of Minimal Kit.
# Copyright (C) 2026 Minimal Kit developers.
#
# Minimal Kit is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License as
# published by the Free Software Foundation; either version 2 of the
# License, or (at your option) any later version.
#
# Minimal Kit is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# General Public License for more details.

"""Triangulated samples of a minimal immersion and OBJ export."""

import math

from collections import deque, namedtuple

import numpy as np

from scipy.spatial import Delaunay

from .config import (CFG_MESH_RING_RATIO,
                     CFG_MESH_R_MIN,
                     CFG_MESH_R_MAX,
                     CFG_MESH_RESOLUTION,
                     resolve_tolerances)
from .weierstrass import (immersion_eval,
                          segment_integral,
                          minimal_separation,
                          NearSingularityError)
from .utils import create_logger

logger = create_logger("minimalkit.mesh")


ParameterTriangulation = namedtuple('ParameterTriangulation',
                                    ['nodes', 'faces', 'r_min', 'r_max'])

SurfaceMesh = namedtuple('SurfaceMesh', ['vertices', 'faces', 'param',
                                         'projection'])


def _shrink_r_max(w, r_min, r_max):
    limit = r_max
    finite = w.finite_punctures
    if len(finite) > 1:
        separation = minimal_separation(finite)
        if 2 * limit >= separation:
            limit = separation / 2.5
    if w.has_infinity and finite:
        farthest = max(abs(p) for p in finite)
        while farthest + limit > 1.0 / limit:
            limit *= 0.8
    if limit != r_max:
        logger.warning("End annuli overlap, r_max shrunk from %g to %g"
                       % (r_max, limit))
    if limit <= r_min:
        raise ValueError("r_max %g fell below r_min %g; the punctures are "
                         "too close for this r_min" % (limit, r_min))
    return limit


def _ring_radii(r_min, r_max):
    count = int(math.ceil(math.log(r_max / r_min)
                          / math.log(CFG_MESH_RING_RATIO)))
    count = max(count, 1)
    return r_min * (r_max / r_min) ** (np.arange(count + 1) / float(count))


def _fan(p, radii, res):
    theta = 2.0 * math.pi * np.arange(res) / res
    rings = [r * np.exp(1j * theta) for r in radii]
    offsets = np.concatenate(rings)
    if p is None:
        return np.exp(-1j * np.angle(offsets)) / np.abs(offsets)
    return p + offsets


def _dedupe(nodes):
    seen = {}
    unique = []
    for z in nodes:
        key = (round(z.real, 12), round(z.imag, 12))
        if key not in seen:
            seen[key] = len(unique)
            unique.append(z)
    return np.array(unique, dtype=complex)


def _signed_area(a, b, c):
    return ((b - a).conjugate() * (c - a)).imag / 2.0


def sample_domain(w, r_min=CFG_MESH_R_MIN, r_max=CFG_MESH_R_MAX,
                  res=CFG_MESH_RESOLUTION):
    """Triangulate the punctured sphere chart.

    Annular fans with geometric ring radii surround each end from
    ``r_min`` to ``r_max`` (in ``1/z`` at infinity); a square grid fills
    the central region; Delaunay glues everything together.

    :returns: ParameterTriangulation
    """
    if not 0 < r_min < r_max:
        raise ValueError("Need 0 < r_min < r_max, got %g, %g" % (r_min, r_max))
    if res < 8:
        raise ValueError("Need res >= 8, got %d" % (res,))
    r_max = _shrink_r_max(w, r_min, r_max)
    radii = _ring_radii(r_min, r_max)
    finite = w.finite_punctures

    pieces = [_fan(p, radii, res) for p in finite]
    if w.has_infinity:
        pieces.append(_fan(None, radii, res))
        extent = 1.0 / r_max
    else:
        extent = 2.0 * (1.0 + max([abs(p) for p in finite] or [0.0]))

    step = 2.0 * extent / (res // 2)
    axis = np.arange(-extent, extent + step / 2.0, step)
    grid = (axis[:, None] + 1j * axis[None, :]).ravel()
    keep = np.abs(grid) <= extent
    if w.has_infinity:
        keep &= np.abs(grid) < extent / 1.05
    for p in finite:
        keep &= np.abs(grid - p) > 1.05 * r_max
    pieces.append(grid[keep])

    nodes = _dedupe(np.concatenate(pieces))
    triangulation = Delaunay(np.column_stack([nodes.real, nodes.imag]))
    scale = max(1.0, float(np.max(np.abs(nodes))))
    faces = []
    for simplex in triangulation.simplices:
        a, b, c = nodes[simplex]
        area = _signed_area(a, b, c)
        if abs(area) <= 1e-14 * scale ** 2:
            continue
        centroid = (a + b + c) / 3.0
        if any(abs(centroid - p) < r_min for p in finite):
            continue
        if area < 0:
            simplex = simplex[[0, 2, 1]]
        faces.append([int(i) for i in simplex])
    used = sorted(set(i for face in faces for i in face))
    renumber = dict((old, new) for new, old in enumerate(used))
    nodes = nodes[used]
    faces = sorted(tuple(renumber[i] for i in face) for face in faces)
    logger.info("Sampled %d nodes and %d faces for %r"
                % (len(nodes), len(faces), w.label))
    return ParameterTriangulation(nodes, np.array(faces, dtype=int),
                                  r_min, r_max)


def build_mesh(w, tri, tol=None):
    """Evaluate the immersion on every node of a parameter triangulation.

    The root node is integrated from the basepoint; every other node is
    reached along a breadth-first spanning tree of mesh edges.

    :raises NearSingularityError: naming the offending node.
    """
    tol = resolve_tolerances(tol)
    nodes = tri.nodes
    neighbours = [set() for _ in nodes]
    for face in tri.faces:
        for i in range(3):
            a, b = face[i], face[(i + 1) % 3]
            neighbours[a].add(b)
            neighbours[b].add(a)
    vertices = np.full((len(nodes), w.n), np.nan)
    used = sorted(set(int(i) for i in tri.faces.ravel()))
    while used:
        root = min(used, key=lambda i: (abs(nodes[i] - w.basepoint), i))
        try:
            vertices[root] = immersion_eval(w, nodes[root], tol=tol)
        except NearSingularityError as err:
            raise NearSingularityError("Mesh node %d at %r: %s"
                                       % (root, nodes[root], err),
                                       point=nodes[root])
        queue = deque([root])
        while queue:
            current = queue.popleft()
            for other in sorted(neighbours[current]):
                if not np.isnan(vertices[other, 0]):
                    continue
                vertices[other] = vertices[current] + segment_integral(
                    w, nodes[current], nodes[other], tol)
                queue.append(other)
        used = [i for i in used if np.isnan(vertices[i, 0])]
    return SurfaceMesh(vertices, tri.faces, nodes, None)


def default_projection(mesh):
    """The 3 axes of largest vertex variance, in ascending order."""
    n = mesh.vertices.shape[1]
    if n == 3:
        return (0, 1, 2)
    variance = np.nanvar(mesh.vertices, axis=0)
    order = np.argsort(-variance, kind='stable')[:3]
    return tuple(sorted(int(i) for i in order))


def project(mesh, projection=None):
    """Project the vertices to R^3 by axes or by a 3 x n frame."""
    if projection is None:
        projection = mesh.projection or default_projection(mesh)
    projection = np.asarray(projection)
    n = mesh.vertices.shape[1]
    if projection.ndim == 1:
        if len(projection) != 3 or projection.min() < 0 or projection.max() >= n:
            raise ValueError("Projection axes %r invalid for n=%d"
                             % (projection.tolist(), n))
        return mesh.vertices[:, projection.astype(int)]
    if projection.shape != (3, n):
        raise ValueError("Projection frame must be 3 x %d" % (n,))
    return np.dot(mesh.vertices, projection.T)


def export_obj(mesh, path, projection=None):
    """Write the mesh as OBJ text.

    Faces use 1-based indices.  For ``n > 3`` the full coordinates also
    go to ``<path>.coords.tsv``.

    :returns: list of written paths.
    """
    coordinates = project(mesh, projection)
    with open(path, 'w') as fd:
        fd.write("# minimal surface, %d vertices, %d faces\n"
                 % (len(coordinates), len(mesh.faces)))
        for x, y, z in coordinates:
            fd.write("v %.17g %.17g %.17g\n" % (x, y, z))
        for i, j, k in mesh.faces:
            fd.write("f %d %d %d\n" % (i + 1, j + 1, k + 1))
    written = [path]
    n = mesh.vertices.shape[1]
    if n > 3:
        sidecar = path + '.coords.tsv'
        with open(sidecar, 'w') as fd:
            fd.write("\t".join(["u", "v"] + ["x%d" % (i + 1,)
                                             for i in range(n)]) + "\n")
            for z, row in zip(mesh.param, mesh.vertices):
                fields = [z.real, z.imag] + list(row)
                fd.write("\t".join("%.17g" % (value,) for value in fields)
                         + "\n")
        written.append(sidecar)
    return written


def parse_obj(path):
    """Read ``v`` and ``f`` lines of an OBJ file.

    :returns: (vertices array, 0-based faces array)
    """
    vertices, faces = [], []
    with open(path) as fd:
        for line in fd:
            fields = line.split()
            if not fields:
                continue
            if fields[0] == 'v':
                vertices.append([float(x) for x in fields[1:4]])
            elif fields[0] == 'f':
                faces.append([int(x.split('/')[0]) - 1 for x in fields[1:4]])
    return (np.array(vertices, dtype=float),
            np.array(faces, dtype=int).reshape(-1, 3))
