"""Built-in catalog of the census groups and their reference metadata.

Five two-generator Kleinian group classes (k1, k2, k4, k5, k19) with
their elliptic degrees p, q, Bianchi discriminant d, commutator-trace
parameter gamma and covolume, plus the two large finitely presented
groups g1, g2 and their distinguished finite-index subgroups h1, h2.

The arithmetic metadata (p, q, d, gamma, covolume) is reference data
only; nothing here computes traces or covolumes.  known_results records
the verified subgroup counts at each index; where a published count
differs from the verified one, both are kept.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Presentation, SubgroupSpec, parse_presentation, parse_word


class UnknownId(KeyError):
    """No census entry with the requested id."""


@dataclass(frozen=True)
class KnownResult:
    """A verified enumeration fact at one index.

    count is the number of conjugacy classes at the index that satisfy
    the filter (order and/or geometry); raw_count is the total number of
    classes at the index when the filter is proper; published_count is
    kept when a published table states a different number.
    """

    index: int
    count: int
    order: int | None = None
    geometry: str | None = None
    raw_count: int | None = None
    published_count: int | None = None


@dataclass(frozen=True)
class CensusEntry:
    id: str
    presentation: Presentation
    p: int | None = None
    q: int | None = None
    d: int | None = None
    gamma: str | None = None
    covolume: str | None = None
    geometries: str | None = None
    known_results: tuple = ()
    subgroups: tuple = ()        # ((name, SubgroupSpec), ...)

    def subgroup(self, name: str) -> SubgroupSpec:
        for n, spec in self.subgroups:
            if n == name:
                return spec
        raise KeyError(name)

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "presentation": str(self.presentation),
            "p": self.p, "q": self.q, "d": self.d,
            "gamma": self.gamma,
            "covolume": self.covolume,
            "geometries": self.geometries,
            "known_results": [
                {k: v for k, v in (
                    ("index", r.index), ("count", r.count),
                    ("order", r.order), ("geometry", r.geometry),
                    ("raw_count", r.raw_count),
                    ("published_count", r.published_count),
                ) if v is not None}
                for r in self.known_results
            ],
            "subgroups": {n: [str(g) for g in s.generators]
                          for n, s in self.subgroups},
        }


def _entry(id, pres_text, subgroup_words=(), **kw):
    pres = parse_presentation(pres_text)
    subs = tuple(
        (name, SubgroupSpec(pres, tuple(parse_word(w) for w in words)))
        for name, words in subgroup_words
    )
    return CensusEntry(id=id, presentation=pres, subgroups=subs, **kw)


_ENTRIES = (
    _entry(
        "k1",
        "< x, y | y^2, x^3, ((y*x^-1)^2*(y^-1*x)^2)^3 >",
        p=2, q=3, d=3, gamma="(-3+sqrt(3)i)/2", covolume="0.33831",
        geometries="Mermin pentagram, GH(2,1)",
        known_results=(
            KnownResult(index=6, count=4, published_count=5),
            KnownResult(index=7, count=2, order=168, geometry="Fano plane"),
            KnownResult(index=10, count=1, order=60,
                        geometry="Mermin pentagram", raw_count=2),
            KnownResult(index=21, count=1, order=336, geometry="GH(2,1)",
                        raw_count=10),
        ),
    ),
    _entry(
        "k2",
        "< x, y | y^2, x^3, ((y*x^-1)^3*(y^-1*x)^3)^3 >",
        p=2, q=3, d=3, gamma="(-1+sqrt(3)i)/2", covolume="0.67664",
        geometries="GH(2,1), \"J2\"",
    ),
    _entry(
        "k4",
        "< x, y | y^2, x^4, ((y*x^-1)^2*(y^-1*x)^2)^2 >",
        p=2, q=4, d=1, gamma="-1+i", covolume="0.45798",
        geometries="Hesse, Petersen",
        known_results=(
            KnownResult(index=4, count=4, raw_count=7),
            KnownResult(index=9, count=2, order=144,
                        geometry="Hesse configuration"),
            KnownResult(index=10, count=2, order=120,
                        geometry="Petersen graph", raw_count=9),
            KnownResult(index=15, count=2, order=120,
                        geometry="Petersen line graph"),
        ),
    ),
    _entry(
        "k5",
        "< x, y | y^2, x^4, (y*x*y^-1*x*y*x^-1)^4 >",
        p=2, q=4, d=1, gamma="-2+i", covolume="0.91596",
        geometries="GO(2,1), \"GO(2,4)\"",
        known_results=(
            KnownResult(index=45, count=1, order=360, geometry="GO(2,1)"),
        ),
    ),
    _entry(
        "k19",
        "< x, y | y^4, x^6, [x,y]^3, ([y,x]*y)^2, (y^-1*[y,x])^2, "
        "(x^-1*[y,x]*y)^2 >",
        p=4, q=6, d=3, gamma="-1", covolume="0.21145",
        geometries="GQ(2,1) (Mermin square)",
        known_results=(
            KnownResult(index=9, count=1, order=36, geometry="GQ(2,1)",
                        raw_count=3),
        ),
    ),
    _entry(
        "g1",
        "< x, y | x^2, y^3, (x*y)^13, [x,y]^5, [x,y*x*y]^4, "
        "((x*y)^4*(x*y^-1))^6 >",
        subgroup_words=(
            ("h1", ("x", "y^-1*(x*y)^2*x*y^-1*(x*y)^3*(x*y^-1)^2")),
        ),
        known_results=(
            KnownResult(index=1755, count=1, order=17971200),
        ),
    ),
    _entry(
        "g2",
        "< x, y | x^2, y^3, (x*y)^7, [x,y]^12, ((x*y)^2*x*y^-1*x*y*"
        "(x*y^-1)^2*(x*y)^2*(x*y^-1)^2*x*y*x*y^-1)^3 >",
        subgroup_words=(
            ("h2", ("y", "(x*y)^2*x*y^-1*x*y*x")),
        ),
        known_results=(
            KnownResult(index=100, count=1, order=604800),
        ),
    ),
)

_BY_ID = {e.id: e for e in _ENTRIES}
CENSUS_IDS = ("k1", "k2", "k4", "k5", "k19", "g1", "g2")


def census_entry(id: str) -> CensusEntry:
    try:
        return _BY_ID[id]
    except KeyError:
        raise UnknownId("unknown census id %r (known: %s)"
                        % (id, ", ".join(CENSUS_IDS))) from None


def list_census():
    return [_BY_ID[i] for i in CENSUS_IDS]
