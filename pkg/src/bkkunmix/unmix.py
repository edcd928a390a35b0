"""Face-based certificates that a mixed volume equals the union's normalized volume.

Every proper face ``F`` of dimension >= 1 of ``conv(S_1 u ... u S_n)`` is
tested against three sufficient conditions, in this order:

* ``A``: ``F`` meets every support;
* ``B``: ``F`` meets some support in exactly one point;
* ``C``: with ``I`` the supports meeting ``F``, all of ``F n S_i`` (``i in I``)
  lie in a coordinate subspace of dimension ``|I|`` onto which ``F``
  projects to dimension ``< |I|``.

If all faces pass ``A`` the stronger certificate (``theorem1``) holds; if each
face passes one of them, ``theorem2`` holds.  Both mean
``mvol(conv S_1, ..., conv S_n) = n! vol_n(conv(S_1 u ... u S_n))``.
Failure is not an error: the conditions are sufficient only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .hull import Face, Support, convex_hull, enumerate_faces
from .mixedvol import NonSquareSystem, SupportSystem, mixed_volume
from .ratgeom import affine_dim, dot, format_rat
from .volume import normalized_volume

CERTIFIED = "certified"
NOT_CERTIFIED = "not-certified"
DEGENERATE = "degenerate"


class InvalidGrouping(ValueError):
    pass


@dataclass(frozen=True)
class FaceVerdict:
    face: Face
    intersections: tuple[tuple, ...]
    satisfied_by: str  # "A", "B", "C" or "none"
    detail: dict = field(default_factory=dict)

    def to_dict(self, union: Support) -> dict:
        return {
            "vertices": [[format_rat(c) for c in union.points[i]]
                         for i in sorted(self.face.vertex_ids)],
            "dim": self.face.dim,
            "normal": [format_rat(c) for c in self.face.normal],
            "meets": [i for i, x in enumerate(self.intersections) if x],
            "sizes": [len(x) for x in self.intersections],
            "satisfied_by": self.satisfied_by,
            **({"detail": self.detail} if self.detail else {}),
        }


@dataclass
class UnmixReport:
    theorem1: bool
    theorem2: bool
    verdicts: list[FaceVerdict]
    union: Support
    face_count: int = 0
    degenerate: bool = False
    bkk: int | None = None
    bound: int | None = None
    status: str = ""

    def failures(self) -> list[FaceVerdict]:
        return [v for v in self.verdicts if v.satisfied_by == "none"]

    def to_dict(self, verbose: bool = False) -> dict:
        shown = self.verdicts if verbose else self.failures()
        return {
            "status": self.status,
            "theorem1": self.theorem1,
            "theorem2": self.theorem2,
            "degenerate": self.degenerate,
            "face_count": self.face_count,
            "bkk": None if self.bkk is None else format_rat(self.bkk),
            "bound": None if self.bound is None else format_rat(self.bound),
            "faces": [v.to_dict(self.union) for v in shown],
        }

    def to_json(self, verbose: bool = False) -> str:
        return json.dumps(self.to_dict(verbose), indent=1)


@dataclass(frozen=True)
class Grouping:
    """Partition of support indices into blocks of sizes ``k_1, ..., k_m``."""
    groups: tuple[tuple[int, ...], ...]

    @classmethod
    def parse(cls, text: str) -> "Grouping":
        """``"0,1;2"`` -> ``((0, 1), (2,))``."""
        blocks = []
        for part in text.split(";"):
            part = part.strip()
            if not part:
                raise InvalidGrouping(f"empty block in {text!r}")
            blocks.append(tuple(int(x) for x in part.split(",")))
        return cls(tuple(blocks))

    def validate(self, n: int):
        flat = [i for g in self.groups for i in g]
        if any(len(g) == 0 for g in self.groups):
            raise InvalidGrouping("empty block")
        if sorted(flat) != list(range(n)):
            raise InvalidGrouping(
                f"blocks {self.groups} do not partition 0..{n - 1}")


def _intersections(face: Face, union: Support, supports: Sequence[Support]):
    alpha = face.normal
    h = dot(union.points[next(iter(face.vertex_ids))], alpha)
    return tuple(tuple(p for p in s.points if dot(p, alpha) == h)
                 for s in supports)


def classify(face: Face, inter: Sequence[tuple]) -> tuple[str, dict]:
    """First of A, B, C that ``face`` satisfies (or ``"none"``), with details."""
    if all(inter):
        return "A", {}
    if any(len(x) == 1 for x in inter):
        return "B", {}
    meets = [i for i, x in enumerate(inter) if x]
    pts = [p for i in meets for p in inter[i]]
    used = sorted({j for p in pts for j, c in enumerate(p) if c != 0})
    detail = {"I": meets, "coords": used}
    if len(used) > len(meets):
        return "none", detail
    proj = [tuple(p[j] for j in used) for p in pts]
    pdim = affine_dim(proj) if proj else 0
    detail["projected_dim"] = pdim
    if pdim < len(meets):
        return "C", detail
    return "none", detail


def _prepare(sys: SupportSystem):
    if not sys.is_square():
        raise NonSquareSystem(f"{len(sys.supports)} supports in R^{sys.dim}")
    union = sys.union()
    return union, convex_hull(union)


def _run(sys: SupportSystem, face_cap=None) -> UnmixReport:
    union, poly = _prepare(sys)
    if not poly.full_dimensional:
        return UnmixReport(True, True, [], union, 0, degenerate=True,
                           bkk=0, bound=0, status=DEGENERATE)
    faces = enumerate_faces(poly, face_cap)
    verdicts = []
    for f in faces:
        inter = _intersections(f, union, sys.supports)
        tag, detail = classify(f, inter)
        verdicts.append(FaceVerdict(f, inter, tag, detail))
    return UnmixReport(all(v.satisfied_by == "A" for v in verdicts),
                       all(v.satisfied_by != "none" for v in verdicts),
                       verdicts, union, len(faces))


def check_theorem1(sys: SupportSystem, face_cap=None) -> UnmixReport:
    """Every proper positive-dimensional face of the union hull meets every support."""
    rep = _run(sys, face_cap)
    if not rep.degenerate:
        rep.status = CERTIFIED if rep.theorem1 else NOT_CERTIFIED
    return rep


def check_theorem2(sys: SupportSystem, face_cap=None) -> UnmixReport:
    """Each proper positive-dimensional face satisfies condition A, B or C."""
    rep = _run(sys, face_cap)
    if not rep.degenerate:
        rep.status = CERTIFIED if rep.theorem2 else NOT_CERTIFIED
    return rep


def unmixed_bkk(sys: SupportSystem, seed: int = 0, face_cap=None):
    """Certified ``n! vol_n(conv(union))``, or ``None`` when not certified.

    Returns ``(value, report)``.  The report always carries ``bound``, the
    union's normalized volume, which is an upper bound on the mixed volume
    whether or not the certificate holds.
    """
    rep = check_theorem2(sys, face_cap)
    if rep.degenerate:
        return 0, rep
    rep.bound = normalized_volume(rep.union, seed)
    if rep.theorem2:
        rep.bkk = rep.bound
    return rep.bkk, rep


@dataclass
class SemiMixedReport:
    ok: bool
    groups: list[dict]

    def __bool__(self):
        return self.ok


def check_semimixed(sys: SupportSystem, g: Grouping, face_cap=None) -> SemiMixedReport:
    """Within each block, a face meeting one member in >= 2 points meets all members."""
    n = len(sys.supports)
    g.validate(n)
    ok = True
    diag = []
    for block in g.groups:
        entry = {"block": list(block), "faces": 0, "failures": []}
        diag.append(entry)
        if len(block) == 1:
            continue
        members = [sys.supports[i] for i in block]
        union = Support.from_points([p for s in members for p in s.points], sys.dim)
        poly = convex_hull(union)
        faces = enumerate_faces(poly, face_cap, relative=True)
        entry["faces"] = len(faces)
        entry["dim"] = poly.dim
        for f in faces:
            inter = _intersections(f, union, members)
            if any(len(x) >= 2 for x in inter) and not all(inter):
                ok = False
                entry["failures"].append({
                    "vertices": [[format_rat(c) for c in union.points[i]]
                                 for i in sorted(f.vertex_ids)],
                    "sizes": [len(x) for x in inter],
                })
    return SemiMixedReport(ok, diag)


def merged_system(sys: SupportSystem, g: Grouping) -> SupportSystem:
    """Replace each support by the union of its block."""
    g.validate(len(sys.supports))
    new = list(sys.supports)
    for block in g.groups:
        u = Support.from_points([p for i in block for p in sys.supports[i].points],
                                sys.dim)
        for i in block:
            new[i] = u
    return sys.replace(new)


def semimixed_bkk(sys: SupportSystem, g: Grouping, seed: int = 0, face_cap=None):
    """Mixed volume of the block-merged system when the block condition holds.

    Returns ``(value or None, SemiMixedReport)``.
    """
    rep = check_semimixed(sys, g, face_cap)
    if not rep.ok:
        return None, rep
    return mixed_volume(merged_system(sys, g), seed), rep
