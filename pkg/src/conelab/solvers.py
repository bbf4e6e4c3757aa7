"""Ground-truth deciders for both subset-sum flavours.

Plain dynamic programs over the value range [0, t] with explicit witness
reconstruction.  These exist to be obviously correct at desk scale; they
anchor every equivalence test in the package.
"""

from __future__ import annotations

from .instances import SsmInstance, SubsetSumInstance, Witness


def ss_decide(inst: SubsetSumInstance) -> Witness | None:
    """Decide subset sum; a yes ships the lex-smallest index set as 0/1 map.

    Suffix reachability is built with one pass per item, then the witness
    is read off greedily from the front: include an index whenever a
    completion from the remaining items still exists.
    """
    items, t = inst.items, inst.target
    n = len(items)
    # reach[i][s]: s attainable from a subset of items i..n (1-based)
    reach = [bytearray(t + 1) for _ in range(n + 2)]
    reach[n + 1][0] = 1
    for i in range(n, 0, -1):
        a = items[i - 1]
        nxt = reach[i + 1]
        cur = reach[i]
        cur[:] = nxt
        for s in range(a, t + 1):
            if nxt[s - a]:
                cur[s] = 1
    if not reach[1][t]:
        return None
    witness: Witness = {}
    remaining = t
    for i in range(1, n + 1):
        a = items[i - 1]
        if a <= remaining and reach[i + 1][remaining - a]:
            witness[i] = 1
            remaining -= a
    return witness


def ssm_decide(inst: SsmInstance) -> Witness | None:
    """Decide subset sum with multiplicities, coin-change style.

    A sum is reachable iff it is zero or some item steps down to a
    reachable sum; the back-pointer at each sum is the smallest such item
    index, which makes the reconstructed witness deterministic.
    """
    items, t = inst.items, inst.target
    n = len(items)
    reach = bytearray(t + 1)
    reach[0] = 1
    back = [0] * (t + 1)
    for s in range(1, t + 1):
        for i in range(n):
            a = items[i]
            if a <= s and reach[s - a]:
                reach[s] = 1
                back[s] = i + 1
                break
    if not reach[t]:
        return None
    witness: Witness = {}
    s = t
    while s:
        i = back[s]
        witness[i] = witness.get(i, 0) + 1
        s -= items[i - 1]
    return witness


def ss_certificate_ok(inst: SubsetSumInstance, witness: Witness) -> bool:
    """Exact re-check of a 0/1 witness against its defining equation."""
    if any(lam != 1 for lam in witness.values()):
        return False
    if any(not 1 <= i <= len(inst.items) for i in witness):
        return False
    return sum(inst.items[i - 1] for i in witness) == inst.target


def ssm_certificate_ok(inst: SsmInstance, witness: Witness) -> bool:
    """Exact re-check of a multiplicity witness against its equation."""
    if any(lam < 1 for lam in witness.values()):
        return False
    if any(not 1 <= i <= len(inst.items) for i in witness):
        return False
    return sum(lam * inst.items[i - 1] for i, lam in witness.items()) == inst.target
