"""The generated classification catalog.

The catalog is data plus construction: base-algebra records (structure
constants, listed H^2 generator forms, automorphism shapes) and entry
records (cocycle coefficient expressions over parameters).  An entry at
a parameter sample *is* the central extension built from its base and
cocycle; nothing 5-dimensional is stored.

Data lives in JSON files next to this module (override the directory
with the NOVIKOV_DATA environment variable):
    bases/<key>.json    one base algebra record
    entries/N_xxx.json  one catalog entry
    meta.json           census totals, noted isomorphisms, flagged
                        specializations
"""

from __future__ import annotations

import json
import os
from fractions import Fraction

from .algebra import Algebra
from .cohomology import (Cocycle, coboundary_space, flatten, in_Ts)
from .exprs import Expr, ExprError, SqrtNotInField
from .extensions import central_extension
from .fields import DivisionByZero, Field, QQ, PrimeField
from .linalg import Matrix

DATA_ENV = "NOVIKOV_DATA"

#: default parameter values tried, in order, when an entry has no
#: curated samples; three admissible tuples are kept.
SAMPLE_POOL = ("2", "3", "1/2", "-2", "-1", "5", "-3", "1/3")


class CatalogError(Exception):
    pass


class InadmissibleSample(CatalogError):
    pass


def _evaluate(text, field, env):
    return Expr(text).evaluate(field, env)


def _exclusion_holds(excl, field, env):
    """True when the constraint is satisfied (nonzero where required)."""
    if "nonzero" in excl:
        return bool(_evaluate(excl["nonzero"], field, env))
    if "any_nonzero" in excl:
        return any(bool(_evaluate(e, field, env))
                   for e in excl["any_nonzero"])
    raise CatalogError(f"unknown exclusion form {excl!r}")


class BaseRecord:
    """A base algebra with its listed H^2 generator forms."""

    def __init__(self, doc):
        self.key = doc["key"]
        self.dim = doc["dim"]
        self.params = doc.get("params") or []
        self.param_exclusions = doc.get("param_exclusions") or []
        self.table_raw = doc["table"]
        self.nablas_raw = doc.get("nablas")
        self.expected_h2_dim = doc.get("expected_h2_dim")
        self.printed_tokens = doc.get("printed_tokens")
        self.typo = doc.get("typo", False)
        self.aut_shape = doc.get("aut_shape")
        self.aut_params = doc.get("aut_params")
        self.aut_det = doc.get("aut_det")
        self.aut_action = doc.get("aut_action")
        self.extra_orbits = doc.get("extra_orbits") or []
        self.note = doc.get("note")

    def check_params(self, field: Field, env) -> bool:
        try:
            return all(_exclusion_holds(x, field, env)
                       for x in self.param_exclusions)
        except (SqrtNotInField, DivisionByZero, ExprError):
            return False

    def algebra(self, field: Field, env=None) -> Algebra:
        env = env or {}
        n = self.dim
        table = {}
        for i, j, k, c in self.table_raw:
            table[(i - 1, j - 1, k - 1)] = _evaluate(c, field, env)
        return Algebra(field, n, table)

    def nabla_matrices(self, field: Field, env=None):
        if self.nablas_raw is None:
            raise CatalogError(f"{self.key} has no trusted generator list")
        env = env or {}
        n = self.dim
        out = []
        for nab in self.nablas_raw:
            m = [[field.zero()] * n for _ in range(n)]
            for i, j, c in nab:
                m[i - 1][j - 1] = _evaluate(c, field, env)
            out.append(Matrix(field, m))
        return out

    def nabla_cocycles(self, field: Field, env=None, check=True):
        A = self.algebra(field, env)
        return A, [Cocycle(A, [m], check=check)
                   for m in self.nabla_matrices(field, env)]

    def automorphism(self, field: Field, env) -> Matrix:
        if self.aut_shape is None:
            raise CatalogError(f"{self.key} has no recorded shape")
        return Matrix(field, [[_evaluate(c, field, env) for c in row]
                              for row in self.aut_shape])

    def __repr__(self):
        return f"BaseRecord({self.key})"


class CatalogEntry:
    """One classification entry: base key, parameters, cocycle."""

    def __init__(self, doc, base: BaseRecord):
        self.label = doc["label"]
        self.display = doc["display"]
        self.base = base
        self.s = doc["s"]
        self.params = doc.get("params") or []
        self.exclusions = doc.get("exclusions") or []
        self.base_params = doc.get("base_params") or {}
        self.cocycle_raw = doc["cocycle"]
        self.census_arity = doc["census_arity"]
        self.curated_samples = doc.get("samples")
        self.equivalences = doc.get("equivalences") or []
        self.note = doc.get("note")

    # -- parameter handling -------------------------------------------

    def base_env(self, field: Field, env):
        return {name: _evaluate(expr, field, env)
                for name, expr in self.base_params.items()}

    def admissible(self, field: Field, env) -> bool:
        """Sample satisfies every exclusion and all expressions evaluate
        in the field."""
        try:
            for x in self.exclusions:
                if not _exclusion_holds(x, field, env):
                    return False
            benv = self.base_env(field, env)
            if not self.base.check_params(field, benv):
                return False
            for comp in self.cocycle_raw:
                for expr in comp.values():
                    _evaluate(expr, field, env)
            return True
        except (SqrtNotInField, DivisionByZero, ExprError):
            return False

    def sample_env(self, field: Field, sample):
        if len(sample) != len(self.params):
            raise InadmissibleSample(
                f"{self.label} needs {len(self.params)} values")
        return {name: _evaluate(str(v), field, {})
                for name, v in zip(self.params, sample)}

    def default_samples(self, field: Field = QQ):
        """Curated samples if recorded, else the first three admissible
        tuples from the deterministic pool (>= 3 distinct values per
        parameter by construction)."""
        if self.curated_samples is not None:
            return [tuple(s) for s in self.curated_samples]
        k = len(self.params)
        if k == 0:
            return [()]
        pool = SAMPLE_POOL
        out = []
        m = 0
        while len(out) < 3 and m < 10 * len(pool):
            cand = tuple(pool[(m + j) % len(pool)] for j in range(k))
            try:
                env = self.sample_env(field, cand)
            except (SqrtNotInField, DivisionByZero, ExprError):
                m += 1
                continue
            if self.admissible(field, env):
                out.append(cand)
            m += 1
        if len(out) < 3:
            raise CatalogError(f"no admissible samples for {self.label}")
        return out

    def find_sample(self, field: Field, require_ts=False):
        """First admissible sample in the given field; for prime fields
        the search falls back to all parameter tuples over the field."""
        candidates = list(self.default_samples())
        if isinstance(field, PrimeField) and self.params:
            from itertools import product
            candidates += list(product(range(field.p),
                                       repeat=len(self.params)))
        for cand in candidates:
            try:
                env = self.sample_env(field, cand)
            except (SqrtNotInField, DivisionByZero, ExprError):
                continue
            if not self.admissible(field, env):
                continue
            if require_ts:
                A, theta = self.specialize(field, cand)
                try:
                    if not in_Ts(A, [theta]):
                        continue
                except Exception:
                    continue
            return cand
        return None

    # -- construction -------------------------------------------------

    def specialize(self, field: Field, sample, strict=True):
        """(base algebra, cocycle) at the sample.  With strict=False the
        entry's own exclusions are ignored (boundary values stay
        constructible as long as the expressions evaluate)."""
        env = self.sample_env(field, sample)
        if strict and not self.admissible(field, env):
            raise InadmissibleSample(f"{self.label} at {sample!r}")
        benv = self.base_env(field, env)
        A = self.base.algebra(field, benv)
        nablas = self.base.nabla_matrices(field, benv)
        comps = []
        for comp in self.cocycle_raw:
            m = Matrix.zero(field, A.dim, A.dim)
            for idx, expr in comp.items():
                c = _evaluate(expr, field, env)
                m = m + nablas[int(idx) - 1] * c
            comps.append(m)
        return A, Cocycle(A, comps)

    def extension(self, field: Field, sample, strict=True) -> Algebra:
        A, theta = self.specialize(field, sample, strict=strict)
        return central_extension(A, theta)

    def __repr__(self):
        return f"CatalogEntry({self.display})"


class Catalog:
    def __init__(self, bases, entries, meta):
        self.bases = bases           # key -> BaseRecord
        self.entries = entries       # label -> CatalogEntry (ordered)
        self.meta = meta

    def entry(self, label) -> CatalogEntry:
        if label in self.entries:
            return self.entries[label]
        # accept short forms like "N_16"
        if label.startswith("N_"):
            padded = "N_%03d" % int(label[2:])
            if padded in self.entries:
                return self.entries[padded]
        raise KeyError(label)

    def __len__(self):
        return len(self.entries)


def data_dir():
    return os.environ.get(
        DATA_ENV, os.path.join(os.path.dirname(__file__), "data"))


def load_catalog(directory=None) -> Catalog:
    d = directory or data_dir()
    bases = {}
    bdir = os.path.join(d, "bases")
    for name in sorted(os.listdir(bdir)):
        if name.endswith(".json"):
            with open(os.path.join(bdir, name)) as fh:
                rec = BaseRecord(json.load(fh))
            bases[rec.key] = rec
    entries = {}
    edir = os.path.join(d, "entries")
    for name in sorted(os.listdir(edir)):
        if name.endswith(".json"):
            with open(os.path.join(edir, name)) as fh:
                doc = json.load(fh)
            entries[doc["label"]] = CatalogEntry(doc, bases[doc["base"]])
    with open(os.path.join(d, "meta.json")) as fh:
        meta = json.load(fh)
    return Catalog(bases, entries, meta)


def census(catalog: Catalog):
    """Entry count and parameter-arity histogram (3 means >= 3)."""
    hist = [0, 0, 0, 0]
    for e in catalog.entries.values():
        hist[min(e.census_arity, 3)] += 1
    return {"total": len(catalog.entries), "histogram": tuple(hist)}


#: names of the six membership predicates, in report order
PREDICATES = ("novikov", "nilpotency", "non_2_step", "annihilator",
              "generators", "noncommutative")


def membership_checks(A: Algebra, theta: Cocycle):
    """The six predicates for a catalog extension, plus a splitness
    check.  The annihilator predicate asks dim Ann = s (the number of
    adjoined central directions) with Ann inside the square."""
    B = central_extension(A, theta)
    ann = B.annihilator()
    return {
        "novikov": B.is_novikov(),
        "nilpotency": B.nilpotency_index() >= 4,
        "non_2_step": not B.is_two_step(),
        "annihilator": ann.dim == theta.s and B.square().contains(ann),
        "generators": B.min_generators() >= 2,
        "noncommutative": not B.is_commutative(),
        "nonsplit": not B.is_split(),
    }


def verify_entry(entry: CatalogEntry, field: Field = QQ, samples=None):
    """Run the six membership predicates at each sample.  Returns a list
    of {"sample", "checks", "passed"} dicts; "passed" covers exactly the
    six predicates (splitness is reported but not counted)."""
    out = []
    for sample in (samples if samples is not None
                   else entry.default_samples(field)):
        A, theta = entry.specialize(field, sample)
        checks = membership_checks(A, theta)
        out.append({
            "sample": tuple(sample),
            "checks": checks,
            "passed": all(checks[k] for k in PREDICATES),
        })
    return out


def class_coordinates(A: Algebra, theta: Cocycle, nabla_mats):
    """Coordinates of theta's components in the printed class basis,
    modulo coboundaries.  Raises if a component is outside the span."""
    cob = list(coboundary_space(A).basis)
    cols = [list(flatten(m)) for m in nabla_mats] + [list(v) for v in cob]
    stack = Matrix(A.field, cols).transpose()
    out = []
    for m in theta.components:
        sol = stack.solve(list(flatten(m)))
        if sol is None:
            raise CatalogError("component outside the printed class span")
        out.append(tuple(sol[:len(nabla_mats)]))
    return out


def generate(catalog: Catalog, field: Field = QQ, labels=None):
    """Materialize extensions: {label: [(sample, Algebra), ...]}."""
    out = {}
    for label, entry in catalog.entries.items():
        if labels is not None and label not in labels:
            continue
        built = []
        for sample in entry.default_samples(field):
            built.append((sample, entry.extension(field, sample)))
        out[label] = built
    return out
