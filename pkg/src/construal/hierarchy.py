"""The supersense taxonomy: a rooted multiple-inheritance DAG of labels.

File format (UTF-8, one node per line)::

    Name < Parent1, Parent2 | definition text | hint; hint
    Root < . | definition text

The third (hints) field is optional. ``#`` begins a comment line and blank
lines are ignored. Comment lines before the first node are preserved as a
header block so that canonical files round-trip byte-for-byte; a header line
of the form ``# version: <id>`` sets the hierarchy version.

Revision files, used to simplify a hierarchy, contain lines::

    rename Old -> New
    rewrite Old -> Role ~> Function
    drop Old
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

import re

from construal.core import Construal, parse_construal
from construal.exceptions import (
    HierarchyFileError,
    RevisionError,
    UnknownLabelError,
)

VERSION_DIRECTIVE = "# version:"
ROOT_MARKER = "."

# no whitespace, and none of the characters that carry structure in the
# hierarchy file format or the construal notation
LABEL_PATTERN = re.compile(r"[A-Za-z0-9][A-Za-z0-9_/-]*$")


@dataclass(frozen=True)
class Supersense:
    """One node of the taxonomy."""

    name: str
    parents: tuple[str, ...] = ()
    definition: str = ""
    hints: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not LABEL_PATTERN.match(self.name):
            raise ValueError(f"bad supersense name: {self.name!r}")
        object.__setattr__(self, "parents", tuple(self.parents))
        object.__setattr__(self, "hints", tuple(self.hints))

    @property
    def is_root(self) -> bool:
        return not self.parents


class SupersenseHierarchy:
    """A validated, immutable label taxonomy.

    Safe for unlimited concurrent readers; all transforms return new values.
    """

    def __init__(
        self,
        nodes: Iterable[Supersense],
        version: str = "unversioned",
        header: tuple[str, ...] = (),
    ):
        self.version = version
        self.header = tuple(header)
        self._nodes: dict[str, Supersense] = {}
        for node in nodes:
            if node.name in self._nodes:
                raise HierarchyFileError(f"duplicate label {node.name!r}")
            self._nodes[node.name] = node
        self._children: dict[str, list[str]] = {name: [] for name in self._nodes}
        for node in self._nodes.values():
            for parent in node.parents:
                if parent not in self._nodes:
                    raise HierarchyFileError(
                        f"label {node.name!r} names unknown parent {parent!r}"
                    )
                self._children[parent].append(node.name)
        self._order = self._toposort()
        self.roots: tuple[str, ...] = tuple(n.name for n in self._nodes.values() if n.is_root)
        if not self.roots:
            raise HierarchyFileError("hierarchy has zero roots")
        self._depths: dict[str, int] = {}
        self._ancestor_cache: dict[str, frozenset[str]] = {}

    # -- basic queries ---------------------------------------------------

    def __contains__(self, label: str) -> bool:
        return label in self._nodes

    def __len__(self) -> int:
        return len(self._nodes)

    def __iter__(self) -> Iterator[str]:
        return iter(self._nodes)

    def node(self, label: str) -> Supersense:
        try:
            return self._nodes[label]
        except KeyError:
            raise UnknownLabelError(label) from None

    @property
    def nodes(self) -> Mapping[str, Supersense]:
        return dict(self._nodes)

    def parents(self, label: str) -> tuple[str, ...]:
        return self.node(label).parents

    def children(self, label: str) -> tuple[str, ...]:
        self.node(label)
        return tuple(self._children[label])

    def _toposort(self) -> tuple[str, ...]:
        """Topological order (parents before children); raises on cycles."""
        indegree = {name: len(node.parents) for name, node in self._nodes.items()}
        queue = deque(sorted(name for name, deg in indegree.items() if deg == 0))
        order: list[str] = []
        while queue:
            name = queue.popleft()
            order.append(name)
            for child in self._children[name]:
                indegree[child] -= 1
                if indegree[child] == 0:
                    queue.append(child)
        if len(order) != len(self._nodes):
            stuck = sorted(name for name, deg in indegree.items() if deg > 0)
            raise HierarchyFileError(f"cycle detected involving {', '.join(stuck)}")
        return tuple(order)

    def topological_order(self) -> tuple[str, ...]:
        return self._order

    # -- reachability ----------------------------------------------------

    def ancestors(self, label: str) -> frozenset[str]:
        """All labels reachable via parent edges, including ``label`` itself."""
        cached = self._ancestor_cache.get(label)
        if cached is not None:
            return cached
        self.node(label)
        seen: set[str] = set()
        stack = [label]
        while stack:
            current = stack.pop()
            if current in seen:
                continue
            seen.add(current)
            stack.extend(self._nodes[current].parents)
        result = frozenset(seen)
        self._ancestor_cache[label] = result
        return result

    def is_ancestor(self, ancestor: str, descendant: str) -> bool:
        """True iff ``ancestor`` is reachable from ``descendant``, or they are equal."""
        self.node(ancestor)
        return ancestor in self.ancestors(descendant)

    def lowest_common_subsumers(self, a: str, b: str) -> frozenset[str]:
        """Common ancestors of ``a`` and ``b`` with no common-ancestor descendant.

        Empty iff the two labels share no root.
        """
        common = self.ancestors(a) & self.ancestors(b)
        minimal = {
            x
            for x in common
            if not any(y != x and x in self.ancestors(y) for y in common)
        }
        return frozenset(minimal)

    def depth(self, label: str) -> int:
        """Length of the shortest parent-edge path from ``label`` to any root."""
        cached = self._depths.get(label)
        if cached is not None:
            return cached
        self.node(label)
        queue = deque([(label, 0)])
        seen = {label}
        while queue:
            current, dist = queue.popleft()
            node = self._nodes[current]
            if node.is_root:
                self._depths[label] = dist
                return dist
            for parent in node.parents:
                if parent not in seen:
                    seen.add(parent)
                    queue.append((parent, dist + 1))
        raise HierarchyFileError(f"label {label!r} reaches no root")  # pragma: no cover


# -- file I/O ------------------------------------------------------------


def _parse_node_line(line: str, lineno: int) -> Supersense:
    if "<" not in line:
        raise HierarchyFileError("expected 'Name < Parents | definition'", lineno)
    name_part, _, rest = line.partition("<")
    name = name_part.strip()
    if not name:
        raise HierarchyFileError("empty label name", lineno)
    if not LABEL_PATTERN.match(name):
        raise HierarchyFileError(
            f"label {name!r} may only use letters, digits, '_', '/', and '-'", lineno
        )
    fields = [f.strip() for f in rest.split("|")]
    if len(fields) > 3:
        raise HierarchyFileError("too many '|' fields", lineno)
    parent_field = fields[0]
    definition = fields[1] if len(fields) > 1 else ""
    hints: tuple[str, ...] = ()
    if len(fields) > 2 and fields[2]:
        hints = tuple(h.strip() for h in fields[2].split(";") if h.strip())
    if parent_field == ROOT_MARKER:
        parents: tuple[str, ...] = ()
    else:
        parents = tuple(p.strip() for p in parent_field.split(",") if p.strip())
        if not parents:
            raise HierarchyFileError(f"label {name!r} has an empty parent list", lineno)
    return Supersense(name, parents, definition, hints)


def load_hierarchy(source: str, version: str | None = None) -> SupersenseHierarchy:
    """Parse and validate a hierarchy file.

    Errors (duplicate label, unknown parent, cycle, zero roots) are reported
    with the offending label name; parse errors carry line numbers.
    """
    header: list[str] = []
    nodes: list[Supersense] = []
    seen: dict[str, int] = {}
    file_version = "unversioned"
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if not nodes:
                header.append(line)
                if line.startswith(VERSION_DIRECTIVE):
                    file_version = line[len(VERSION_DIRECTIVE):].strip()
            continue
        node = _parse_node_line(line, lineno)
        if node.name in seen:
            raise HierarchyFileError(
                f"duplicate label {node.name!r} (first defined on line {seen[node.name]})",
                lineno,
            )
        seen[node.name] = lineno
        nodes.append(node)
    for node in nodes:
        for parent in node.parents:
            if parent not in seen:
                raise HierarchyFileError(
                    f"label {node.name!r} names unknown parent {parent!r}",
                    seen[node.name],
                )
    return SupersenseHierarchy(nodes, version or file_version, tuple(header))


def serialize_hierarchy(hierarchy: SupersenseHierarchy) -> str:
    """Canonical text form; ``load_hierarchy`` of the result is identical."""
    lines = list(hierarchy.header)
    if not any(line.startswith(VERSION_DIRECTIVE) for line in lines):
        lines.insert(0, f"{VERSION_DIRECTIVE} {hierarchy.version}")
    for node in hierarchy.nodes.values():
        parent_field = ", ".join(node.parents) if node.parents else ROOT_MARKER
        line = f"{node.name} < {parent_field} | {node.definition}"
        if node.hints:
            line += f" | {'; '.join(node.hints)}"
        lines.append(line)
    return "\n".join(lines) + "\n"


# -- revisions -----------------------------------------------------------


@dataclass(frozen=True)
class RevisionMap:
    """A single-step simplification of the hierarchy.

    ``renames`` merge the old label into its replacement, ``rewrites`` retire
    a label in favor of a role/function construal, and ``dropped`` removes
    labels outright.
    """

    renames: Mapping[str, str] = field(default_factory=dict)
    rewrites: Mapping[str, Construal] = field(default_factory=dict)
    dropped: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "renames", dict(self.renames))
        object.__setattr__(self, "rewrites", dict(self.rewrites))
        object.__setattr__(self, "dropped", tuple(self.dropped))
        sources = list(self.renames) + list(self.rewrites) + list(self.dropped)
        duplicated = {s for s in sources if sources.count(s) > 1}
        if duplicated:
            raise RevisionError(
                f"labels in more than one revision action: {', '.join(sorted(duplicated))}"
            )

    @property
    def retired(self) -> frozenset[str]:
        return frozenset(self.renames) | frozenset(self.rewrites) | frozenset(self.dropped)


def load_revision(source: str) -> RevisionMap:
    """Parse a revision file (``rename``/``rewrite``/``drop`` lines)."""
    renames: dict[str, str] = {}
    rewrites: dict[str, Construal] = {}
    dropped: list[str] = []
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        action, _, rest = line.partition(" ")
        rest = rest.strip()
        if action == "rename":
            old, arrow, new = rest.partition("->")
            if not arrow or not old.strip() or not new.strip():
                raise RevisionError(f"line {lineno}: expected 'rename Old -> New'")
            renames[old.strip()] = new.strip()
        elif action == "rewrite":
            old, arrow, target = rest.partition("->")
            if not arrow or not old.strip() or not target.strip():
                raise RevisionError(f"line {lineno}: expected 'rewrite Old -> Role ~> Function'")
            rewrites[old.strip()] = parse_construal(target.strip())
        elif action == "drop":
            if not rest:
                raise RevisionError(f"line {lineno}: expected 'drop Old'")
            dropped.append(rest)
        else:
            raise RevisionError(f"line {lineno}: unknown revision action {action!r}")
    return RevisionMap(renames, rewrites, tuple(dropped))


def serialize_revision(revision: RevisionMap) -> str:
    lines = [f"rename {old} -> {new}" for old, new in revision.renames.items()]
    lines += [
        f"rewrite {old} -> {construal.notation().replace('~>', ' ~> ')}"
        for old, construal in revision.rewrites.items()
    ]
    lines += [f"drop {old}" for old in revision.dropped]
    return "\n".join(lines) + "\n"


def apply_revision(hierarchy: SupersenseHierarchy, revision: RevisionMap) -> SupersenseHierarchy:
    """Produce a new hierarchy with the revision applied.

    Renamed labels are merged into their replacements (the replacement
    additionally absorbs the retired node's parent edges), rewritten and
    dropped labels are removed, and surviving parent edges are re-pointed.
    Missing sources are ignored; the result is re-validated.
    """
    retired = revision.retired

    def repoint(label: str) -> str:
        return revision.renames.get(label, label)

    for old, new in revision.renames.items():
        if new not in hierarchy or new in retired:
            raise RevisionError(f"rename target {new!r} missing from the revised hierarchy")
    for old, construal in revision.rewrites.items():
        for label in (construal.role, *construal.functions):
            if label not in hierarchy or label in retired:
                raise RevisionError(f"rewrite target {label!r} missing from the revised hierarchy")

    absorbed: dict[str, tuple[str, ...]] = {}
    for old, new in revision.renames.items():
        if old in hierarchy:
            absorbed[new] = hierarchy.parents(old)

    nodes: list[Supersense] = []
    for name, node in hierarchy.nodes.items():
        if name in retired:
            continue
        merged = list(node.parents) + list(absorbed.get(name, ()))
        parents: list[str] = []
        for parent in merged:
            target = repoint(parent)
            if target == name or target in parents:
                continue
            if target in retired:
                raise RevisionError(
                    f"label {name!r} would keep a dangling parent {parent!r}"
                )
            parents.append(target)
        if node.parents and not parents:
            raise RevisionError(f"label {name!r} would lose all parents")
        nodes.append(Supersense(name, tuple(parents), node.definition, node.hints))
    try:
        return SupersenseHierarchy(nodes, hierarchy.version, hierarchy.header)
    except HierarchyFileError as exc:
        raise RevisionError(f"revision produces an invalid hierarchy: {exc}") from exc
