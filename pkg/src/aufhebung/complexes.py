"""Finitely presented skeletal complexes and their cell calculus.

A :class:`SkeletalComplex` is generated by finitely many cells with
attaching data; every cell above the generating dimensions is a formal
degeneracy.  Cells are stored in decomposed form as a generator paired
with the canonical epimorphism acting on it, so the degenerate-cell
normal form is structural rather than computed.

The only nontrivial operation is the contravariant action
:meth:`SkeletalComplex.act`: acting by a morphism composes it into the
cell's epimorphism, splits off the mono part, and pushes the mono into
the generator's attaching data recursively.

:class:`TabulatedPresheaf` materialises all cells up to a dimension with
integer ids and dense face/degeneracy tables; it serves both as the fast
backend for sphere search and as an independent oracle representation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import shapes
from .shapes import (
    CubeMorphism,
    CyclicMorphism,
    GlobeMorphism,
    ShapeError,
    ShapeMorphism,
    SimplexMorphism,
    compose,
    count_epis,
    enumerate_epis,
    epi_mono_factor,
    identity,
)


class ComplexError(ValueError):
    """Raised for ill-formed complexes or out-of-range cell operations."""


class TruncationError(ComplexError):
    """Raised when an action would leave the tabulated window."""


class BudgetError(RuntimeError):
    """Raised when a tabulation exceeds the configured cell budget."""


@dataclass(frozen=True)
class Cell:
    """A cell: a generator acted on by a canonical epimorphism.

    The epi maps the cell's dimension onto the generator's dimension; an
    identity epi means the cell is the generator itself.  For cyclic
    complexes the epi may carry a rotation, in which case the cell is a
    rotated copy and still counts as non-degenerate when the monotone
    part is trivial.
    """

    generator: str
    epi: ShapeMorphism

    @property
    def dim(self) -> int:
        return self.epi.dom

    @property
    def generator_dim(self) -> int:
        return self.epi.cod

    @property
    def is_nondegenerate(self) -> bool:
        return self.dim == self.generator_dim

    def __repr__(self) -> str:
        return f"Cell({self.generator}, {shapes.format_morphism(self.epi)})"


@dataclass(frozen=True)
class GeneratorDecl:
    """A generating cell with its attaching data.

    ``faces`` holds cells of dimension dim - 1: the ordered face list
    c_0..c_dim for ordinal shapes, the pairs (1,0),(1,1),...,(dim,0),(dim,1)
    for cubes, and the (source, target) pair for globs.  Dimension-0
    generators have no faces.
    """

    name: str
    dim: int
    faces: tuple[Cell, ...]


def face_arity(shape: str, dim: int) -> int:
    if dim == 0:
        return 0
    if shape in ("simplicial", "cyclic"):
        return dim + 1
    if shape == "cubical":
        return 2 * dim
    if shape == "globular":
        return 2
    raise ShapeError(f"unknown shape {shape!r}")


@dataclass(frozen=True)
class Violation:
    generator: str
    kind: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]

    def __bool__(self) -> bool:
        return self.ok


class SkeletalComplex:
    """An n-skeletal presheaf presented by generators and attaching data.

    Immutable after construction; all queries are pure, so instances are
    safe to share across worker threads.  Face actions are memoised.
    """

    def __init__(self, shape: str, skeletal_level: int, generators,
                 truncation: int | None = None):
        if shape not in shapes.SHAPES:
            raise ComplexError(f"unknown shape {shape!r}")
        self.shape = shape
        self.skeletal_level = skeletal_level
        self.generators: dict[str, GeneratorDecl] = {}
        for g in generators:
            if g.name in self.generators:
                raise ComplexError(f"duplicate generator {g.name!r}")
            self.generators[g.name] = g
        if truncation is None:
            truncation = 2 * skeletal_level + 2
        if truncation < skeletal_level:
            raise ComplexError("truncation below skeletal level")
        self.truncation = truncation
        self._act_memo: dict[tuple[Cell, ShapeMorphism], Cell] = {}
        self._cells_memo: dict[int, list[Cell]] = {}

    # -- construction helpers ------------------------------------------------

    def generator_cell(self, name: str) -> Cell:
        decl = self.generators[name]
        return Cell(name, identity(self.shape, decl.dim))

    def cell(self, name: str, epi_word="", dim: int | None = None) -> Cell:
        """Build a cell from a generator name and an epi word."""
        decl = self.generators[name]
        if isinstance(epi_word, str):
            toks = epi_word.split()
            if dim is None:
                drop = sum(1 for t in toks if t.startswith("s") or t == "iot"
                           or t.startswith("b"))
                dim = decl.dim + drop
            epi = shapes.normalize(self.shape, toks, dom=dim)
        else:
            epi = epi_word
        if epi.cod != decl.dim:
            raise ComplexError(
                f"epi lands in dimension {epi.cod}, generator {name!r} has"
                f" dimension {decl.dim}")
        if not epi.is_epi:
            raise ComplexError("cell word must be an epimorphism")
        return Cell(name, epi)

    # -- validation -----------------------------------------------------------

    def validate(self) -> ValidationReport:
        """Check arity, dimensions and the cycle equations of every generator."""
        problems: list[Violation] = []
        seen: set[str] = set()
        for name, g in self.generators.items():
            if g.dim > self.skeletal_level:
                problems.append(Violation(name, "dimension",
                                          f"dim {g.dim} exceeds skeletal level"
                                          f" {self.skeletal_level}"))
            arity = face_arity(self.shape, g.dim)
            if len(g.faces) != arity:
                problems.append(Violation(name, "arity",
                                          f"expected {arity} faces, got {len(g.faces)}"))
                seen.add(name)
                continue
            for c in g.faces:
                if c.generator not in seen:
                    problems.append(Violation(name, "reference",
                                              f"face uses undeclared generator"
                                              f" {c.generator!r}"))
                elif c.dim != g.dim - 1:
                    problems.append(Violation(name, "dimension",
                                              f"face {c!r} has dimension {c.dim},"
                                              f" expected {g.dim - 1}"))
            if any(v.generator == name for v in problems):
                seen.add(name)
                continue
            problems.extend(self._cycle_violations(name, g.dim, g.faces))
            seen.add(name)
        return ValidationReport(not problems, tuple(problems))

    def _cycle_violations(self, name: str, dim: int, faces: tuple[Cell, ...]):
        problems = []
        if dim < 2:
            return problems
        if self.shape in ("simplicial", "cyclic"):
            for j in range(dim + 1):
                for i in range(j):
                    lhs = self.act(faces[j], self._delta(i, dim - 2))
                    rhs = self.act(faces[i], self._delta(j - 1, dim - 2))
                    if lhs != rhs:
                        problems.append(Violation(
                            name, "cycle",
                            f"c_{j} d_{i} = {lhs!r} but c_{i} d_{j - 1} = {rhs!r}"))
        elif self.shape == "cubical":
            for j in range(1, dim + 1):
                for i in range(1, j):
                    for io in (0, 1):
                        for up in (0, 1):
                            lhs = self.act(faces[2 * (j - 1) + io],
                                           CubeMorphism.face(i, up, dim - 1))
                            rhs = self.act(faces[2 * (i - 1) + up],
                                           CubeMorphism.face(j - 1, io, dim - 1))
                            if lhs != rhs:
                                problems.append(Violation(
                                    name, "cycle",
                                    f"c^{io}_{j} a{up}@{i} != c^{up}_{i} a{io}@{j - 1}"))
        elif self.shape == "globular":
            src, tgt = faces
            for gen in ("sig", "tau"):
                m = GlobeMorphism.generator(gen, dim - 2)
                if self.act(src, m) != self.act(tgt, m):
                    problems.append(Violation(
                        name, "cycle", f"source and target disagree on {gen}"))
        return problems

    def _delta(self, i: int, n: int):
        d = SimplexMorphism.face(i, n + 1)
        if self.shape == "cyclic":
            return CyclicMorphism.from_simplex(d)
        return d

    # -- the contravariant action ----------------------------------------------

    def act(self, cell: Cell, f: ShapeMorphism) -> Cell:
        """The action cell . f, computed in decomposed normal form."""
        if f.cod != cell.dim:
            raise ComplexError(
                f"morphism lands in dimension {f.cod}, cell has dimension"
                f" {cell.dim}")
        if f.dom > self.truncation:
            raise TruncationError(
                f"action result dimension {f.dom} exceeds truncation"
                f" {self.truncation}")
        key = (cell, f)
        hit = self._act_memo.get(key)
        if hit is not None:
            return hit
        composite = compose(cell.epi, f)
        mono, epi = epi_mono_factor(composite)
        base = self._act_mono(cell.generator, mono)
        out = Cell(base.generator, compose(base.epi, epi))
        self._act_memo[key] = out
        return out

    def _act_mono(self, name: str, mono: ShapeMorphism) -> Cell:
        """Push a monomorphism into a generator's attaching data."""
        decl = self.generators[name]
        if self.shape == "cyclic":
            rot = mono.rotation
            plain = mono.delta_part
            if plain.is_identity:
                return Cell(name, CyclicMorphism.rotation_map(decl.dim, rot))
            i = plain.monos[0]
            rest = SimplexMorphism(plain.dom, plain.cod - 1, plain.monos[1:], ())
            face = decl.faces[i]
            inner = CyclicMorphism.from_simplex(rest)
            tail = self.act(face, inner) if not rest.is_identity else face
            if rot:
                return self.act(tail, CyclicMorphism.rotation_map(tail.dim, rot))
            return tail
        if mono.is_identity:
            return Cell(name, identity(self.shape, decl.dim))
        if self.shape == "simplicial":
            i = mono.monos[0]
            rest = SimplexMorphism(mono.dom, mono.cod - 1, mono.monos[1:], ())
            face = decl.faces[i]
        elif self.shape == "cubical":
            pos, sign = mono.inserts[0]
            rest = CubeMorphism(mono.dom, mono.cod - 1, mono.inserts[1:], ())
            face = decl.faces[2 * (pos - 1) + sign]
        else:  # globular
            outer = mono.word[0]
            rest = GlobeMorphism(mono.dom, mono.cod - 1, mono.word[1:])
            face = decl.faces[0 if outer == "sig" else 1]
        if rest.is_identity:
            return face
        return self.act(face, rest)

    # -- degeneracy calculus ----------------------------------------------------

    def ez_decompose(self, cell: Cell) -> tuple[Cell, ShapeMorphism]:
        """The (non-degenerate part, epi) pair; structural by representation."""
        return Cell(cell.generator,
                    identity(self.shape, cell.generator_dim)), cell.epi

    def dgn(self, cell: Cell) -> int:
        return cell.dim - cell.generator_dim

    def _delta_like(self, i: int, n: int, sign: int = 0):
        if self.shape in ("simplicial", "cyclic"):
            return self._delta(i, n - 1)
        if self.shape == "cubical":
            return CubeMorphism.face(i, sign, n)
        return GlobeMorphism.generator("sig" if sign == 0 else "tau", n - 1)

    def reduces(self, cell: Cell, i: int) -> bool:
        """Does the i-face drop the degeneracy by one?"""
        n = cell.dim
        if self.shape in ("simplicial", "cyclic"):
            if not (0 <= i <= n):
                raise ComplexError(f"face index {i} out of range")
            f = self.act(cell, self._delta(i, n - 1))
            return self.dgn(f) == self.dgn(cell) - 1
        if self.shape == "cubical":
            if not (1 <= i <= n):
                raise ComplexError(f"face position {i} out of range")
            for sign in (0, 1):
                f = self.act(cell, CubeMorphism.face(i, sign, n))
                if self.dgn(f) == self.dgn(cell) - 1:
                    return True
            return False
        raise ComplexError(f"reduces is not defined for shape {self.shape!r}")

    def properly_reduces(self, cell: Cell, i: int) -> bool:
        """Ordinal shapes only: is the cell its own i-face degenerated at i?"""
        if self.shape not in ("simplicial", "cyclic"):
            raise ComplexError("properly_reduces is defined for ordinal shapes")
        n = cell.dim
        if not (0 <= i <= n):
            raise ComplexError(f"face index {i} out of range")
        if i > n - 1:
            return False
        face = self.act(cell, self._delta(i, n - 1))
        back = self.act(face, self._sigma(i, n - 1))
        return back == cell

    def _sigma(self, j: int, n: int):
        s = SimplexMorphism.degeneracy(j, n + 1)
        if self.shape == "cyclic":
            return CyclicMorphism.from_simplex(s)
        return s

    def reduction_profile(self, cell: Cell) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(reducing indices, properly reducing indices) for one cell.

        For cubes the second component repeats the first; proper reduction
        is an ordinal-shape distinction.
        """
        n = cell.dim
        if self.shape == "cubical":
            red = tuple(i for i in range(1, n + 1) if self.reduces(cell, i))
            return red, red
        red = tuple(i for i in range(n + 1) if self.reduces(cell, i))
        proper = tuple(i for i in range(n + 1) if self.properly_reduces(cell, i))
        return red, proper

    # -- cell enumeration ---------------------------------------------------------

    def cells_of_dim(self, k: int) -> list[Cell]:
        """All cells in dimension k: one per generator per canonical epi."""
        if k < 0:
            return []
        if k > self.truncation:
            raise TruncationError(f"dimension {k} exceeds truncation {self.truncation}")
        memo = self._cells_memo.get(k)
        if memo is None:
            memo = [Cell(name, eps)
                    for name, g in self.generators.items()
                    for eps in enumerate_epis(k, g.dim, self.shape)]
            self._cells_memo[k] = memo
        return list(memo)

    def count_cells(self, k: int) -> int:
        return sum(count_epis(k, g.dim, self.shape)
                   for g in self.generators.values())

    def face_maps(self, k: int) -> list[ShapeMorphism]:
        """The elementary faces from dimension k, in sphere slot order."""
        if self.shape in ("simplicial", "cyclic"):
            return [self._delta(i, k - 1) for i in range(k + 1)]
        if self.shape == "cubical":
            return [CubeMorphism.face(i, sign, k)
                    for i in range(1, k + 1) for sign in (0, 1)]
        return [GlobeMorphism.generator("sig", k - 1),
                GlobeMorphism.generator("tau", k - 1)]

    def degeneracy_maps(self, k: int) -> list[ShapeMorphism]:
        """The elementary degeneracies hitting dimension k from k + 1."""
        if self.shape == "simplicial":
            return [SimplexMorphism.degeneracy(j, k + 1) for j in range(k + 1)]
        if self.shape == "cyclic":
            out = [CyclicMorphism.from_simplex(SimplexMorphism.degeneracy(j, k + 1))
                   for j in range(k + 1)]
            out.append(CyclicMorphism.extra_degeneracy(k + 1))
            return out
        if self.shape == "cubical":
            return [CubeMorphism.projection(i, k + 1) for i in range(1, k + 2)]
        return [GlobeMorphism.generator("iot", k + 1)]

    def tabulate(self, up_to: int, budget_cells: int = 10 ** 6) -> "TabulatedPresheaf":
        return TabulatedPresheaf.build(self, up_to, budget_cells)


# ---------------------------------------------------------------------------
# tabulation


@dataclass
class TabulatedPresheaf:
    """Dense tables for all cells of a complex up to a dimension.

    ``faces[k]`` is an int32 array of shape (N_k, slots) giving the id of
    each elementary face of each k-cell, in the sphere slot order of
    :meth:`SkeletalComplex.face_maps`.  ``degens[k]`` likewise tabulates
    the elementary degeneracies into dimension k + 1, and for cyclic
    complexes ``rotations[k]`` tabulates the basic rotation of each layer.
    """

    complex: SkeletalComplex
    up_to: int
    cells: list[list[Cell]]
    index: dict[Cell, tuple[int, int]]
    faces: list[np.ndarray]
    degens: list[np.ndarray]
    rotations: list[np.ndarray]

    @classmethod
    def build(cls, X: SkeletalComplex, up_to: int,
              budget_cells: int = 10 ** 6) -> "TabulatedPresheaf":
        if up_to > X.truncation:
            raise TruncationError(
                f"tabulation to {up_to} exceeds truncation {X.truncation}")
        cells: list[list[Cell]] = []
        index: dict[Cell, tuple[int, int]] = {}
        for k in range(up_to + 1):
            layer = X.cells_of_dim(k)
            if len(layer) > budget_cells:
                raise BudgetError(
                    f"{len(layer)} cells in dimension {k} exceed the budget"
                    f" of {budget_cells}")
            for j, c in enumerate(layer):
                index[c] = (k, j)
            cells.append(layer)
        faces: list[np.ndarray] = []
        degens: list[np.ndarray] = []
        rotations: list[np.ndarray] = []
        for k in range(up_to + 1):
            layer = cells[k]
            fmaps = X.face_maps(k) if k >= 1 else []
            table = np.empty((len(layer), len(fmaps)), dtype=np.int32)
            for j, c in enumerate(layer):
                for s, fm in enumerate(fmaps):
                    table[j, s] = index[X.act(c, fm)][1]
            faces.append(table)
            if k + 1 <= up_to:
                dmaps = X.degeneracy_maps(k)
                dtable = np.empty((len(layer), len(dmaps)), dtype=np.int32)
                for j, c in enumerate(layer):
                    for s, dm in enumerate(dmaps):
                        dtable[j, s] = index[X.act(c, dm)][1]
                degens.append(dtable)
            else:
                degens.append(np.empty((len(layer), 0), dtype=np.int32))
            if X.shape == "cyclic":
                rot = CyclicMorphism.rotation_map(k)
                rtable = np.empty(len(layer), dtype=np.int32)
                for j, c in enumerate(layer):
                    rtable[j] = index[X.act(c, rot)][1]
                rotations.append(rtable)
            else:
                rotations.append(np.empty(0, dtype=np.int32))
        return cls(X, up_to, cells, index, faces, degens, rotations)

    @property
    def shape(self) -> str:
        return self.complex.shape

    def cell_id(self, cell: Cell) -> int:
        k, j = self.index[cell]
        return j

    def nondegenerate_ids(self, k: int) -> set[int]:
        """Ids of k-cells that are not hit by any elementary degeneracy."""
        hit: set[int] = set()
        if k >= 1:
            hit.update(int(v) for v in self.degens[k - 1].ravel())
        out = set(range(len(self.cells[k]))) - hit
        return out

    def act_by_epi(self, cell_id: int, k: int, epi: ShapeMorphism) -> int:
        """Act on a tabulated k-cell by a canonical epi, tables only.

        The epi's elementary degeneracies are applied outermost first (the
        ascending canonical word read left to right); a cyclic rotation,
        which is applied first in the morphism, acts last on the cell at
        the top dimension.
        """
        cur, dim = cell_id, k
        if self.shape == "cyclic":
            word = epi.delta_part.epis
            rot = epi.rotation
        elif self.shape == "simplicial":
            word, rot = epi.epis, 0
        elif self.shape == "cubical":
            word, rot = epi.deletes, 0
        else:
            word, rot = ("iot",) * (epi.dom - epi.cod), 0
        for j in word:
            if self.shape == "simplicial" or self.shape == "cyclic":
                col = j
            elif self.shape == "cubical":
                col = j - 1
            else:
                col = 0
            cur = int(self.degens[dim][cur, col])
            dim += 1
        if dim != epi.dom:
            raise ComplexError("epi word length does not match its dimensions")
        for _ in range(rot):
            cur = int(self.rotations[dim][cur])
        return cur

    def ez_decompose_tabulated(self, cell_id: int, k: int) -> list[tuple[int, int, ShapeMorphism]]:
        """All (dim, id, epi) triples with nondegenerate core reproducing the cell.

        Found by exhaustive search over lower cells and canonical epis; a
        plain shape has exactly one, the cyclic category one per rotation
        of the core.
        """
        out = []
        for m in range(k + 1):
            nondeg = self.nondegenerate_ids(m)
            for eps in enumerate_epis(k, m, self.shape):
                for y in sorted(nondeg):
                    if self.act_by_epi(y, m, eps) == cell_id:
                        out.append((m, y, eps))
        return out

    def verify_tables(self) -> list[str]:
        """Check every defining relation of the shape category on the
        tables alone, instance by instance; returns the violations."""
        bad: list[str] = []

        def note(k, x, what):
            bad.append(f"dim {k} cell {x}: {what}")

        F, D, R = self.faces, self.degens, self.rotations
        for k in range(self.up_to + 1):
            n_cells = len(self.cells[k])
            for x in range(n_cells):
                if self.shape in ("simplicial", "cyclic"):
                    self._verify_ordinal_row(k, x, F, D, note)
                    if self.shape == "cyclic":
                        self._verify_cyclic_row(k, x, F, D, R, note)
                elif self.shape == "cubical":
                    self._verify_cubical_row(k, x, F, D, note)
                else:
                    self._verify_globular_row(k, x, F, D, note)
        return bad

    def _verify_ordinal_row(self, k, x, F, D, note):
        for j in range(k + 1):
            for i in range(j):
                if k >= 2 and F[k - 1][F[k][x, j], i] != F[k - 1][F[k][x, i], j - 1]:
                    note(k, x, f"d{j} d{i} relation fails")
        if k + 2 <= self.up_to:
            for j in range(k + 1):
                for i in range(j + 1):
                    if D[k + 1][D[k][x, j], i] != D[k + 1][D[k][x, i], j + 1]:
                        note(k, x, f"s{j} s{i} relation fails")
        if k + 1 <= self.up_to:
            for j in range(k + 1):
                for i in range(k + 2):
                    got = F[k + 1][D[k][x, j], i]
                    if i < j:
                        want = D[k - 1][F[k][x, i], j - 1]
                    elif i in (j, j + 1):
                        want = x
                    else:
                        want = D[k - 1][F[k][x, i - 1], j]
                    if got != want:
                        note(k, x, f"s{j} d{i} relation fails")

    def _verify_cubical_row(self, k, x, F, D, note):
        for j in range(1, k + 1):
            for i in range(1, j):
                for io in (0, 1):
                    for up in (0, 1):
                        if k >= 2 and F[k - 1][F[k][x, 2 * (j - 1) + io], 2 * (i - 1) + up] != \
                                F[k - 1][F[k][x, 2 * (i - 1) + up], 2 * (j - 2) + io]:
                            note(k, x, f"a@{j} a@{i} relation fails")
        if k + 2 <= self.up_to:
            for j in range(1, k + 2):
                for i in range(1, j + 1):
                    if D[k + 1][D[k][x, j - 1], i - 1] != \
                            D[k + 1][D[k][x, i - 1], j]:
                        note(k, x, f"b{j} b{i} relation fails")
        if k + 1 <= self.up_to:
            for j in range(1, k + 2):
                for i in range(1, k + 2):
                    for sign in (0, 1):
                        got = F[k + 1][D[k][x, j - 1], 2 * (i - 1) + sign]
                        if i < j:
                            want = D[k - 1][F[k][x, 2 * (i - 1) + sign], j - 2]
                        elif i == j:
                            want = x
                        else:
                            want = D[k - 1][F[k][x, 2 * (i - 2) + sign], j - 1]
                        if got != want:
                            note(k, x, f"b{j} a{sign}@{i} relation fails")

    def _verify_globular_row(self, k, x, F, D, note):
        if k + 1 <= self.up_to:
            up = D[k][x, 0]
            for col in (0, 1):
                if F[k + 1][up, col] != x:
                    note(k, x, "iot section relation fails")
        if k >= 2:
            src, tgt = F[k][x, 0], F[k][x, 1]
            for col in (0, 1):
                # tau.sig = sig.sig and tau.tau = sig.tau collapse to:
                # both faces of a face agree with the matching face's face
                if F[k - 1][src, col] != F[k - 1][tgt, col]:
                    note(k, x, "glob faces are not parallel")

    def _verify_cyclic_row(self, k, x, F, D, R, note):
        # with the rotation t: p -> p + 1 the presentation reads
        # t^(k+1) = id, t.d_i = d_(i+1).t (i < k), t.d_k = d_0,
        # t.s_i = s_(i+1).t (i < k), t.s_k = sx.t, sx = s_0.t
        cur = x
        for _ in range(k + 1):
            cur = R[k][cur]
        if cur != x:
            note(k, x, "rotation order exceeds k + 1")
        if k >= 1:
            for i in range(k):
                if F[k][R[k][x], i] != R[k - 1][F[k][x, i + 1]]:
                    note(k, x, f"t d{i} relation fails")
            if F[k][R[k][x], k] != F[k][x, 0]:
                note(k, x, f"t d{k} relation fails")
        if k + 1 <= self.up_to:
            if D[k][x, k + 1] != R[k + 1][D[k][x, 0]]:
                note(k, x, "wrap-around degeneracy relation fails")
            for i in range(k):
                if D[k][R[k][x], i] != R[k + 1][D[k][x, i + 1]]:
                    note(k, x, f"t s{i} relation fails")
            if D[k][R[k][x], k] != R[k + 1][D[k][x, k + 1]]:
                note(k, x, f"t s{k} relation fails")
