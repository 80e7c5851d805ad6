"""Complete binary trees with {1,2}-labeled leaves and their involutions.

The scan-based rewriting rule is the engine of the bijective proofs: walk
the leaves left to right; the first leaf labeled 2 becomes an internal node
with two new leaves labeled 1, and the first leaf labeled 1 whose sibling
is also a leaf labeled 1 merges with it into a single leaf labeled 2.
Either move preserves the label sum and flips the parity of the leaf count.

Enumeration is exhaustive and therefore deliberately desk-scale: operations
that would materialize an astronomically large census raise
:class:`SizeLimitError` instead of silently attempting exponential work.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Union

from .identities import binomial_gen, catalan


class SizeLimitError(ValueError):
    """Raised when an exhaustive enumeration would exceed desk scale."""


MAX_WEIGHT_PARAM = 14          # largest s accepted by enumerate_creatures1
MAX_CENSUS = 5_000_000         # largest creature census materialized
MAX_TREE_COUNT = 1_000_000     # largest shape list materialized


class Leaf:
    """The unique leaf node; complete trees share this singleton."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Leaf"


LEAF = Leaf()


@dataclass(frozen=True)
class Node:
    """Internal node of a complete binary tree (always two children)."""

    left: "BinaryTree"
    right: "BinaryTree"


BinaryTree = Union[Leaf, Node]


def leaf_count(tree: BinaryTree) -> int:
    if tree is LEAF:
        return 1
    return leaf_count(tree.left) + leaf_count(tree.right)


@functools.lru_cache(maxsize=None)
def _shapes(n_leaves: int) -> tuple[BinaryTree, ...]:
    if n_leaves == 1:
        return (LEAF,)
    out: list[BinaryTree] = []
    for left_leaves in range(1, n_leaves):
        for left in _shapes(left_leaves):
            for right in _shapes(n_leaves - left_leaves):
                out.append(Node(left, right))
    return tuple(out)


def enumerate_trees(n_leaves: int) -> list[BinaryTree]:
    """All complete binary tree shapes with the given number of leaves.

    Ordered recursively by left-subtree leaf count, then lexicographically
    in the subtrees; the count is the Catalan number C(n_leaves - 1).
    """
    if n_leaves < 1:
        raise ValueError("a tree has at least one leaf")
    if catalan(n_leaves - 1) > MAX_TREE_COUNT:
        raise SizeLimitError(
            f"{catalan(n_leaves - 1)} shapes with {n_leaves} leaves exceeds desk scale"
        )
    return list(_shapes(n_leaves))


# ---------------------------------------------------------------------------
# labeled creatures (proof of the alternating Catalan sum)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LabeledTree:
    """A complete binary tree plus one label in {1, 2} per leaf."""

    shape: BinaryTree
    labels: tuple[int, ...]

    def __post_init__(self):
        if any(x not in (1, 2) for x in self.labels):
            raise ValueError("labels must be 1 or 2")
        if len(self.labels) != leaf_count(self.shape):
            raise ValueError("label count must equal leaf count")

    @property
    def weight(self) -> int:
        return sum(self.labels)

    @property
    def n_leaves(self) -> int:
        return len(self.labels)

    def __str__(self) -> str:
        return serialize_labeled(self)


class _FixedPoint:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "FixedPoint"


FIXED_POINT = _FixedPoint()


class _Survivor:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Survivor"


SURVIVOR = _Survivor()


def _cherry_left_flags(shape: BinaryTree) -> list[bool]:
    """flags[i] is True when leaf i is the left leaf of a two-leaf cherry."""
    flags: list[bool] = []

    def walk(node: BinaryTree) -> None:
        if node is LEAF:
            flags.append(False)
            return
        if node.left is LEAF and node.right is LEAF:
            flags.append(True)
            flags.append(False)
            return
        walk(node.left)
        walk(node.right)

    walk(shape)
    return flags


def _first_event(shape: BinaryTree, labels: tuple[int, ...]) -> tuple[str, int] | None:
    """First leaf (left to right) at which a rewrite rule fires."""
    flags = _cherry_left_flags(shape)
    for i, label in enumerate(labels):
        if label == 2:
            return ("expand", i)
        if flags[i] and labels[i + 1] == 1:
            return ("contract", i)
    return None


def _expand_leaf(shape: BinaryTree, index: int) -> BinaryTree:
    counter = [0]

    def walk(node: BinaryTree) -> BinaryTree:
        if node is LEAF:
            i = counter[0]
            counter[0] += 1
            return Node(LEAF, LEAF) if i == index else node
        left = walk(node.left)
        right = walk(node.right)
        return Node(left, right)

    return walk(shape)


def _contract_cherry(shape: BinaryTree, index: int) -> BinaryTree:
    """Replace the cherry whose left leaf has the given index by a leaf."""
    counter = [0]

    def walk(node: BinaryTree) -> BinaryTree:
        if node is LEAF:
            counter[0] += 1
            return node
        if node.left is LEAF and node.right is LEAF:
            i = counter[0]
            counter[0] += 2
            return LEAF if i == index else node
        left = walk(node.left)
        right = walk(node.right)
        return Node(left, right)

    return walk(shape)


def involution1(creature: LabeledTree) -> LabeledTree | _FixedPoint:
    """Apply the leaf-scan rewriting rule once.

    Returns the image creature (same weight, leaf count changed by one) or
    :data:`FIXED_POINT` when no leaf triggers either rule, which happens
    exactly for the single leaf labeled 1.
    """
    event = _first_event(creature.shape, creature.labels)
    if event is None:
        return FIXED_POINT
    kind, i = event
    labels = creature.labels
    if kind == "expand":
        new_shape = _expand_leaf(creature.shape, i)
        new_labels = labels[:i] + (1, 1) + labels[i + 1:]
    else:
        new_shape = _contract_cherry(creature.shape, i)
        new_labels = labels[:i] + (2,) + labels[i + 2:]
    return LabeledTree(new_shape, new_labels)


def _words(length: int, twos: int) -> Iterator[tuple[int, ...]]:
    """All {1,2}-words of a given length with a given number of 2s, in
    lexicographic order (1 before 2)."""
    if twos < 0 or twos > length:
        return
    if length == 0:
        yield ()
        return
    if twos < length:
        for rest in _words(length - 1, twos):
            yield (1,) + rest
    if twos > 0:
        for rest in _words(length - 1, twos - 1):
            yield (2,) + rest


def creatures1_count(s: int) -> int:
    """Census size: sum over i of C_i * binomial(i+1, s-i)."""
    return sum(catalan(i) * binomial_gen(i + 1, s - i) for i in range(s + 1))


def _check_census_size(count: int, limit_param: int, what: str) -> None:
    if limit_param > MAX_WEIGHT_PARAM or count > MAX_CENSUS:
        raise SizeLimitError(f"census of {count} {what} exceeds desk scale")


def iter_creatures1(s: int) -> Iterator[LabeledTree]:
    """Stream all labeled trees of weight s+1, smallest leaf count first.

    Size limits are checked eagerly, before the stream is consumed.
    """
    if s < 0:
        raise ValueError("s must be nonnegative")
    _check_census_size(creatures1_count(s), s, f"creatures at s={s}")

    def generate() -> Iterator[LabeledTree]:
        for i in range(s + 1):
            n = i + 1
            twos = s - i
            if twos < 0 or twos > n:
                continue
            for shape in _shapes(n):
                for word in _words(n, twos):
                    yield LabeledTree(shape, word)

    return generate()


def enumerate_creatures1(s: int) -> list[LabeledTree]:
    """All creatures of weight s+1; rejects inputs beyond desk scale."""
    return list(iter_creatures1(s))


# ---------------------------------------------------------------------------
# creature pairs (proof of the shifted identity)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CreaturePair:
    """A tree whose leaves are labeled by the prefix of a {1,2}-word.

    The word has l - m - 1 more letters than the tree has leaves and sums
    to l; the tree has at most m + 1 leaves.
    """

    shape: BinaryTree
    word: tuple[int, ...]
    l: int
    m: int

    def __post_init__(self):
        n = leaf_count(self.shape)
        if any(x not in (1, 2) for x in self.word):
            raise ValueError("word letters must be 1 or 2")
        if len(self.word) != n + (self.l - self.m - 1):
            raise ValueError("word length must be leaf count + (l - m - 1)")
        if sum(self.word) != self.l:
            raise ValueError("word must sum to l")
        if n > self.m + 1:
            raise ValueError("tree may have at most m + 1 leaves")

    @property
    def n_leaves(self) -> int:
        return leaf_count(self.shape)

    @property
    def prefix(self) -> tuple[int, ...]:
        return self.word[: self.n_leaves]

    @property
    def suffix(self) -> tuple[int, ...]:
        return self.word[self.n_leaves:]

    def labeled_tree(self) -> LabeledTree:
        return LabeledTree(self.shape, self.prefix)

    def __str__(self) -> str:
        return serialize_pair(self)


def creatures3_count(l: int, m: int) -> int:
    """Census size: sum over leaf counts n of C_{n-1} * binomial(n+l-m-1, m+1-n)."""
    return sum(
        catalan(n - 1) * binomial_gen(n + l - m - 1, m + 1 - n)
        for n in range(1, m + 2)
    )


def iter_creatures3(l: int, m: int) -> Iterator[CreaturePair]:
    """Stream all pairs for the given l, m; size limits checked eagerly."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if l <= m:
        raise ValueError("pairs require l >= m + 1 (word length l - m - 1 >= 0)")
    _check_census_size(creatures3_count(l, m), m, f"pairs at l={l}, m={m}")

    def generate() -> Iterator[CreaturePair]:
        for n in range(1, m + 2):
            length = n + l - m - 1
            twos = l - length
            if twos < 0 or twos > length:
                continue
            for shape in _shapes(n):
                for word in _words(length, twos):
                    yield CreaturePair(shape, word, l, m)

    return generate()


def enumerate_creatures3(l: int, m: int) -> list[CreaturePair]:
    """All pairs (tree, word) for the given l, m; desk scale enforced."""
    return list(iter_creatures3(l, m))


def involution3(pair: CreaturePair) -> CreaturePair | _Survivor:
    """Apply the leaf-scan rule to the prefix-labeled tree of a pair.

    An expansion turns a 2 in the prefix into two 1s (word grows by one
    letter); a contraction merges two prefix 1s into a 2.  The survivors
    are exactly the pairs whose tree is a single leaf and whose word starts
    with 1.
    """
    n = pair.n_leaves
    event = _first_event(pair.shape, pair.prefix)
    if event is None:
        return SURVIVOR
    kind, i = event
    word = pair.word
    if kind == "expand":
        shape = _expand_leaf(pair.shape, i)
        new_word = word[:i] + (1, 1) + word[i + 1:]
    else:
        shape = _contract_cherry(pair.shape, i)
        new_word = word[:i] + (2,) + word[i + 2:]
    return CreaturePair(shape, new_word, pair.l, pair.m)


def survivor_count(l: int, m: int) -> int:
    """Number of {1,2}-words of length l-m-1 with letter sum l-1.

    Equals binomial(l-m-1, m): the surviving pairs are a single leaf
    labeled 1 followed by such a word.
    """
    if l <= m:
        raise ValueError("requires l >= m + 1")
    length = l - m - 1
    twos = (l - 1) - length
    if twos < 0 or twos > length:
        return 0
    count = 0
    for _ in _words(length, twos):
        count += 1
    return count


# ---------------------------------------------------------------------------
# census reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CensusReport:
    """Creature counts split by leaf-count parity."""

    total: int
    even_leaves: int
    odd_leaves: int
    fixed_points: int

    @property
    def signed(self) -> int:
        """#odd-leaf minus #even-leaf creatures."""
        return self.odd_leaves - self.even_leaves


def census1(s: int) -> CensusReport:
    total = even = odd = fixed = 0
    for creature in iter_creatures1(s):
        total += 1
        if creature.n_leaves % 2 == 0:
            even += 1
        else:
            odd += 1
        if involution1(creature) is FIXED_POINT:
            fixed += 1
    return CensusReport(total, even, odd, fixed)


def census3(l: int, m: int) -> CensusReport:
    total = even = odd = fixed = 0
    for pair in iter_creatures3(l, m):
        total += 1
        if pair.n_leaves % 2 == 0:
            even += 1
        else:
            odd += 1
        if involution3(pair) is SURVIVOR:
            fixed += 1
    return CensusReport(total, even, odd, fixed)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def serialize_shape(tree: BinaryTree) -> str:
    """Shape-only text form; leaves print as a middle dot."""
    if tree is LEAF:
        return "·"
    return f"({serialize_shape(tree.left)},{serialize_shape(tree.right)})"


def serialize_labeled(creature: LabeledTree) -> str:
    """Nested parentheses with labels at the leaves, e.g. ``((1,1),2)``."""
    labels = iter(creature.labels)

    def walk(node: BinaryTree) -> str:
        if node is LEAF:
            return str(next(labels))
        return f"({walk(node.left)},{walk(node.right)})"

    return walk(creature.shape)


def parse_labeled(text: str) -> LabeledTree:
    """Inverse of :func:`serialize_labeled`."""
    text = text.strip()
    pos = 0

    def parse() -> tuple[BinaryTree, list[int]]:
        nonlocal pos
        if pos >= len(text):
            raise ValueError("unexpected end of creature text")
        if text[pos] == "(":
            pos += 1
            left, ll = parse()
            if pos >= len(text) or text[pos] != ",":
                raise ValueError(f"expected ',' at position {pos}")
            pos += 1
            right, rl = parse()
            if pos >= len(text) or text[pos] != ")":
                raise ValueError(f"expected ')' at position {pos}")
            pos += 1
            return Node(left, right), ll + rl
        if text[pos] in "12":
            label = int(text[pos])
            pos += 1
            return LEAF, [label]
        raise ValueError(f"unexpected character {text[pos]!r} at position {pos}")

    shape, labels = parse()
    if pos != len(text):
        raise ValueError(f"trailing input at position {pos}")
    return LabeledTree(shape, tuple(labels))


def serialize_pair(pair: CreaturePair) -> str:
    """Prefix-labeled tree, a '|' separator, then the suffix letters."""
    tree_text = serialize_labeled(pair.labeled_tree())
    suffix = "".join(str(x) for x in pair.suffix)
    return f"{tree_text}|{suffix}"


def parse_pair(text: str, l: int, m: int) -> CreaturePair:
    """Inverse of :func:`serialize_pair` for given l, m."""
    if "|" not in text:
        raise ValueError("expected 'tree|suffix' with a '|' separator")
    tree_text, suffix_text = text.split("|", 1)
    labeled = parse_labeled(tree_text)
    suffix = tuple(int(c) for c in suffix_text.strip())
    if any(c not in (1, 2) for c in suffix):
        raise ValueError("suffix letters must be 1 or 2")
    return CreaturePair(labeled.shape, labeled.labels + suffix, l, m)


def orbit_trace(start: LabeledTree) -> list[str]:
    """Lines of the involution orbit: the creature and its image (or a
    fixed-point marker)."""
    lines = [serialize_labeled(start)]
    image = involution1(start)
    if image is FIXED_POINT:
        lines.append("fixed point")
    else:
        lines.append(serialize_labeled(image))
    return lines
