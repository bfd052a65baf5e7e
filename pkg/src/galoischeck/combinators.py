"""Direct implementations of the sequence combinators under test.

Everything is total over tuples of small ints.  The word/line splitters fix
element 0 as the separator.
"""

from __future__ import annotations

from itertools import groupby

from .core import PairSeq, Pred, Seq, SeqList

SEPARATOR = 0


def take_while(p: Pred, xs: Seq) -> Seq:
    out = []
    for e in xs:
        if not p(e):
            break
        out.append(e)
    return tuple(out)


def take_n(n: int, xs: Seq) -> Seq:
    if n < 0:
        raise ValueError("take count must be non-negative")
    return xs[:n]


def filter_p(p: Pred, xs: Seq) -> Seq:
    return tuple(e for e in xs if p(e))


def drop_while(p: Pred, xs: Seq) -> Seq:
    i = 0
    while i < len(xs) and p(xs[i]):
        i += 1
    return xs[i:]


def head_fails(p: Pred, zs: Seq) -> bool:
    """The easy side of the dropWhile split: zs is empty or its head
    falsifies p."""
    return not zs or not p(zs[0])


def zip_pair(xs: Seq, ys: Seq) -> PairSeq:
    return tuple(zip(xs, ys))


def unzip_pair(zs: PairSeq) -> tuple[Seq, Seq]:
    if not zs:
        return ((), ())
    left, right = zip(*zs)
    return (tuple(left), tuple(right))


def words_split(xs: Seq) -> SeqList:
    """Split on separator runs, discarding empty words."""
    return tuple(tuple(g) for k, g in groupby(xs, lambda e: e == SEPARATOR)
                 if not k)


def unwords_join(ws: SeqList) -> Seq:
    out: list[int] = []
    for i, w in enumerate(ws):
        if i:
            out.append(SEPARATOR)
        out.extend(w)
    return tuple(out)


def lines_split(xs: Seq) -> SeqList:
    """Cut at every separator, then drop the trailing run of empty segments.

    Adjacent separators in the middle keep their empty segments; only the
    empty tail produced by a terminating separator (or by an empty input)
    is discarded.
    """
    segments: list[Seq] = []
    current: list[int] = []
    for e in xs:
        if e == SEPARATOR:
            segments.append(tuple(current))
            current = []
        else:
            current.append(e)
    segments.append(tuple(current))
    while segments and not segments[-1]:
        segments.pop()
    return tuple(segments)


def unlines_join(ws: SeqList) -> Seq:
    out: list[int] = []
    for w in ws:
        out.extend(w)
        out.append(SEPARATOR)
    return tuple(out)
