"""Embedded resolution of reduced plane curve germs by iterated blow-ups.

Every blow-up center gets a DivisorRecord with discrepancy a and
total-transform multiplicity m, maintained by the recursions
a = 1 + sum(parent a), m = center_mult + sum(parent m) over the exceptional
divisors through the center.  Points are followed per Galois orbit over the
germ's base field: an irreducible direction factor of degree e either splits
a single simple extension off Q, or, when its points are already simple
normal crossings, is closed out as e conjugate branches without leaving the
base field.  Exceptional axes are tracked by chart bookkeeping, never
re-derived geometrically.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from . import config, kpoly
from .errors import (CurvelabError, DepthExceededError, ExtensionLimitError,
                     NotReducedError, UnresolvedError)
from .factor import factor_list_k
from .linear import LinearChange
from .mpoly import MPoly, squarefree_part
from .numberfield import QQ, FieldElement, NumberField
from .rationals import Rat

GERM_VARS = ("x", "y")


class CurveGerm:
    """A reduced bivariate germ at the origin, over Q or one extension."""

    __slots__ = ("equation", "field", "origin_history")

    def __init__(self, equation: MPoly, field: NumberField | None = None,
                 origin_history: LinearChange | None = None, check: bool = True):
        if equation.vars != GERM_VARS:
            equation = equation.with_vars(GERM_VARS)
        self.equation = equation
        self.field = field if field is not None else equation.field
        if self.field != equation.field:
            raise CurvelabError("germ field does not match its equation")
        self.origin_history = origin_history
        if check:
            if equation.is_zero():
                raise CurvelabError("germ equation is zero")
            if not equation.constant_term().is_zero():
                raise CurvelabError("germ equation does not vanish at the origin")
            _, reduced = squarefree_part(equation)
            if not reduced:
                raise NotReducedError("germ equation has a repeated factor")

    @classmethod
    def from_text(cls, text: str, **kw) -> "CurveGerm":
        from .parsing import parse_polynomial

        return cls(parse_polynomial(text, GERM_VARS), **kw)

    def multiplicity(self) -> int:
        return self.equation.multiplicity()

    def __repr__(self) -> str:
        return f"CurveGerm({self.equation})"


@dataclass(frozen=True)
class DivisorRecord:
    id: int
    parents: tuple[int, ...]
    a: int
    m: int
    center_mult: int
    count: int  # conjugate copies of this divisor over the germ's base field

    def to_json(self) -> dict:
        return {"id": self.id, "parents": list(self.parents), "a": self.a,
                "m": self.m, "center_mult": self.center_mult, "count": self.count}


@dataclass(frozen=True)
class Branch:
    centers: tuple[int, ...]  # divisor ids of the centers the branch runs through
    count: int                # conjugate copies

    def to_json(self) -> dict:
        return {"centers": list(self.centers), "count": self.count}


@dataclass
class _TreeNode:
    div_id: int
    center_mult: int
    parents: tuple[int, ...]
    count: int
    path: tuple[int, ...]
    children: list = dataclass_field(default_factory=list)
    leaf_counts: list = dataclass_field(default_factory=list)


class Direction:
    """A point of the exceptional P^1 after one blow-up: [1 : t] for finite
    tangent t, [0 : 1] for the vertical direction."""

    __slots__ = ("field", "at_infinity", "t")

    def __init__(self, field: NumberField, t: FieldElement | None):
        self.field = field
        self.at_infinity = t is None
        self.t = t

    def __repr__(self) -> str:
        return "Direction[0:1]" if self.at_infinity else f"Direction[1:{self.t}]"


class ResolutionTree:
    def __init__(self, germ: CurveGerm, divisors, branches, root, status: str, depth: int):
        self.germ = germ
        self.divisors: list[DivisorRecord] = divisors
        self.branches: list[Branch] = branches
        self.root: _TreeNode | None = root
        self.status = status  # "resolved" | "extension_limit"
        self.depth = depth
        self._nodes: dict[int, _TreeNode] = {}
        if root is not None:
            stack = [root]
            while stack:
                node = stack.pop()
                self._nodes[node.div_id] = node
                stack.extend(node.children)

    @property
    def resolved(self) -> bool:
        return self.status == "resolved"

    def branch_count(self) -> int:
        return sum(b.count for b in self.branches)

    def milnor_number(self) -> int:
        total = sum(d.count * d.center_mult * (d.center_mult - 1) for d in self.divisors)
        return total - self.branch_count() + 1

    def delta_invariant(self) -> int:
        return sum(d.count * d.center_mult * (d.center_mult - 1) for d in self.divisors) // 2

    # -- equisingularity ------------------------------------------------------

    def encoding(self):
        """Canonical form of the weighted cluster: invariant under coordinate
        change, equal iff the resolutions are combinatorially isomorphic."""
        if self.root is None:
            return ("smooth",)
        return ("singular", self._encode(self.root, 1))

    def _encode(self, node: _TreeNode, parent_count: int):
        rel = node.count // parent_count
        sat = 0
        if len(node.parents) == 2:
            pred = node.path[-1]
            secondary = next(p for p in node.parents if p != pred)
            sat = len(node.path) - node.path.index(secondary)
        children = tuple(sorted(self._encode(ch, node.count) for ch in node.children))
        leaves = tuple(sorted(l // node.count for l in node.leaf_counts))
        return (node.center_mult, rel, sat, children, leaves)

    # -- per-branch multiplicities and contacts ----------------------------------

    def branch_multiplicities(self, branch: Branch) -> dict[int, int]:
        """Multiplicity of the branch's strict transform at each of its centers,
        reconstructed from the proximity structure."""
        path = branch.centers
        mults: dict[int, int] = {}
        for i in range(len(path) - 1, -1, -1):
            q = path[i]
            val = 1 if i == len(path) - 1 else 0
            for j in range(i + 1, len(path)):
                if q in self.divisors[path[j]].parents:
                    val += mults[path[j]]
            mults[q] = val
        return mults

    def contact(self, b1: Branch, b2: Branch) -> int:
        """Intersection multiplicity of two distinct branches at the origin."""
        m1 = self.branch_multiplicities(b1)
        m2 = self.branch_multiplicities(b2)
        total = 0
        for q1, q2 in zip(b1.centers, b2.centers):
            if q1 != q2:
                break
            total += m1[q1] * m2[q1]
        return total

    def conjugate_contact(self, branch: Branch) -> int | None:
        """Contact between two conjugate copies of a cluster branch, or None
        for a branch with no conjugates."""
        if not branch.centers:
            return None
        m = self.branch_multiplicities(branch)
        leaf_node = self._nodes[branch.centers[-1]]
        if branch.count // leaf_node.count > 1:
            return sum(m[q] ** 2 for q in branch.centers)
        parent_count = 1
        birth = None
        for q in branch.centers:
            node = self._nodes[q]
            if node.count // parent_count > 1:
                birth = q  # conjugates diverge at the deepest such node
            parent_count = node.count
        if birth is None:
            return None
        idx = branch.centers.index(birth)
        return sum(m[q] ** 2 for q in branch.centers[:idx])

    def to_json(self) -> dict:
        return {"status": self.status,
                "divisors": [d.to_json() for d in self.divisors],
                "branches": [b.to_json() for b in self.branches]}


class EquisingularityType:
    """Hashable, comparable equisingularity invariant of a germ."""

    __slots__ = ("enc", "branch_count", "multiplicity")

    def __init__(self, tree: ResolutionTree):
        if not tree.resolved:
            raise ExtensionLimitError("equisingularity type of a partial resolution")
        self.enc = tree.encoding()
        self.branch_count = tree.branch_count()
        self.multiplicity = tree.germ.multiplicity()

    def __eq__(self, other) -> bool:
        if not isinstance(other, EquisingularityType):
            return NotImplemented
        return self.enc == other.enc

    def __hash__(self) -> int:
        return hash(self.enc)

    def __repr__(self) -> str:
        return f"EquisingularityType(branches={self.branch_count}, enc={self.enc})"


# ---------------------------------------------------------------------------
# blow-up substitutions


def _tangent_coeffs(eq: MPoly, m: int) -> list:
    """T(t) = lowest_form(1, t): coefficient j is the x^(m-j) y^j coefficient."""
    field = eq.field
    out = [field.zero()] * (m + 1)
    for e, c in eq.terms.items():
        if e[0] + e[1] == m:
            out[e[1]] = c
    return kpoly.strip(out)


def _chart_a_child(eq: MPoly, m: int, alpha: FieldElement) -> MPoly:
    """f(x, x*(y + alpha)) / x^m, the strict transform at direction alpha."""
    field = eq.field
    terms: dict = {}
    binom_cache: dict = {}
    pow_cache = {0: field.one()}

    def apow(k):
        j = k
        while j not in pow_cache:
            j -= 1
        while j < k:
            j += 1
            pow_cache[j] = pow_cache[j - 1] * alpha
        return pow_cache[k]

    from math import comb

    zero_alpha = alpha.is_zero()
    for (i, j), c in eq.terms.items():
        if zero_alpha:
            e = (i + j - m, j)
            terms[e] = terms.get(e, field.zero()) + c
            continue
        for q in range(j + 1):
            coeff = c.scale(Rat(comb(j, q))) * apow(j - q)
            if coeff.is_zero():
                continue
            e = (i + j - m, q)
            terms[e] = terms.get(e, field.zero()) + coeff
    return MPoly(GERM_VARS, field, terms)


def _chart_b_child(eq: MPoly, m: int) -> MPoly:
    """f(x*y, y) / y^m, the strict transform at the vertical direction."""
    terms: dict = {}
    field = eq.field
    for (i, j), c in eq.terms.items():
        e = (i, i + j - m)
        terms[e] = terms.get(e, field.zero()) + c
    return MPoly(GERM_VARS, field, terms)


def blow_up(germ: CurveGerm, ext_bound: int | None = None):
    """One blow-up at the origin: the points of the strict transform on the
    exceptional line, as (Direction, child germ) pairs.  Extends Q once for
    an irrational direction; raises ExtensionLimit on a proper extension's
    irrational direction or past the degree bound."""
    bound = config.ext_degree(ext_bound)
    eq = germ.equation
    m = eq.multiplicity()
    if m < 1:
        raise CurvelabError("germ does not vanish at the origin")
    field = germ.field
    out = []
    tangent = _tangent_coeffs(eq, m)
    for fac, _mult in factor_list_k(field, tangent):
        d = kpoly.degree(fac)
        if d == 1:
            alpha = -(fac[0] / fac[1])
            child = _chart_a_child(eq, m, alpha)
            out.append((Direction(field, alpha),
                        CurveGerm(child, field, origin_history=germ.origin_history,
                                  check=False)))
        else:
            if not field.is_q:
                raise ExtensionLimitError(
                    "tangent direction needs a tower over a proper extension")
            if d > bound:
                raise ExtensionLimitError(
                    f"tangent direction needs an extension of degree {d} > bound {bound}")
            ext = NumberField([c.coords[0] for c in fac], check_irreducible=False)
            alpha = ext.generator()
            child = _chart_a_child(eq.to_field(ext), m, alpha)
            out.append((Direction(ext, alpha),
                        CurveGerm(child, ext, origin_history=germ.origin_history,
                                  check=False)))
    if kpoly.degree(tangent) < m:
        child = _chart_b_child(eq, m)
        out.append((Direction(field, None),
                    CurveGerm(child, field, origin_history=germ.origin_history,
                              check=False)))
    return out


# ---------------------------------------------------------------------------
# full resolution


def _is_terminal(eq: MPoly, axes) -> bool:
    """Simple normal crossing test for the total transform at this point."""
    if eq.multiplicity() != 1:
        return False
    n_axes = (axes[0] is not None) + (axes[1] is not None)
    if n_axes == 0:
        return True
    if n_axes == 2:
        return False
    lx = eq.coeff((1, 0))
    ly = eq.coeff((0, 1))
    if axes[0] is not None:  # exceptional is {x = 0}; transversal iff tangent differs
        return not ly.is_zero()
    return not lx.is_zero()


def resolve(germ: CurveGerm, ext_bound: int | None = None,
            depth_cap: int | None = None) -> ResolutionTree:
    """Minimal embedded resolution: blow up every non-SNC point over the origin."""
    bound = config.ext_degree(ext_bound)
    cap = config.depth_cap(depth_cap)
    divisors: list[DivisorRecord] = []
    branches: list[Branch] = []
    state = {"status": "resolved", "max_depth": 0}

    def process(eq: MPoly, field: NumberField, axes, path: tuple[int, ...],
                count: int, depth: int, parent_node: _TreeNode | None):
        state["max_depth"] = max(state["max_depth"], depth)
        if _is_terminal(eq, axes):
            branches.append(Branch(path, count))
            if parent_node is not None:
                parent_node.leaf_counts.append(count)
            return None
        if depth >= cap:
            raise DepthExceededError(cap)
        m = eq.multiplicity()
        parents = tuple(sorted(a for a in axes if a is not None))
        a_val = 1 + sum(divisors[p].a for p in parents)
        m_val = m + sum(divisors[p].m for p in parents)
        div = DivisorRecord(len(divisors), parents, a_val, m_val, m, count)
        divisors.append(div)
        node = _TreeNode(div.id, m, parents, count, path)
        if parent_node is not None:
            parent_node.children.append(node)
        child_path = path + (div.id,)

        tangent = _tangent_coeffs(eq, m)
        for fac, fac_mult in factor_list_k(field, tangent):
            d = kpoly.degree(fac)
            if d == 1:
                alpha = -(fac[0] / fac[1])
                child_eq = _chart_a_child(eq, m, alpha)
                child_axes = (div.id, axes[1] if alpha.is_zero() else None)
                process(child_eq, field, child_axes, child_path,
                        count, depth + 1, node)
            elif fac_mult == 1:
                # a cluster of d conjugate points where the strict transform is
                # smooth and transversal to the new divisor: already SNC
                branches.append(Branch(child_path, count * d))
                node.leaf_counts.append(count * d)
            elif field.is_q and d <= bound:
                ext = NumberField([c.coords[0] for c in fac], check_irreducible=False)
                alpha = ext.generator()
                child_eq = _chart_a_child(eq.to_field(ext), m, alpha)
                child_axes = (div.id, None)
                process(child_eq, ext, child_axes, child_path,
                        count * d, depth + 1, node)
            else:
                state["status"] = "extension_limit"
        if kpoly.degree(tangent) < m:
            child_eq = _chart_b_child(eq, m)
            child_axes = (axes[0], div.id)
            process(child_eq, field, child_axes, child_path, count, depth + 1, node)
        return node

    eq0 = germ.equation
    axes0 = (None, None)
    if _is_terminal(eq0, axes0) or eq0.multiplicity() == 1:
        # smooth germ: nothing to blow up, a single branch through the origin
        return ResolutionTree(germ, [], [Branch((), 1)], None, "resolved", 0)
    root = process(eq0, germ.field, axes0, (), 1, 0, None)
    return ResolutionTree(germ, divisors, branches, root, state["status"],
                          state["max_depth"])


def equisingularity_type(germ: CurveGerm, ext_bound: int | None = None) -> EquisingularityType:
    return EquisingularityType(resolve(germ, ext_bound=ext_bound))


def branch_count(germ: CurveGerm, ext_bound: int | None = None) -> int:
    tree = resolve(germ, ext_bound=ext_bound)
    if not tree.resolved:
        raise ExtensionLimitError("branch count of a partial resolution")
    return tree.branch_count()
