"""Maximum-weight matching in general graphs (primal-dual blossom method).

All unmatched vertices grow alternating trees simultaneously, sharing one
global dual-adjustment budget. Tight edges extend trees, odd cycles shrink
into blossoms, and an edge between two trees augments the matching, after
which only those two trees are dismantled; the rest of the forest persists.
The returned matching always has maximum cardinality; when it is perfect,
it also has maximum total weight among all perfect matchings (certified by
the primal-dual invariants: matched edges tight, duals feasible, positive
blossoms full). Callers that need "maximum weight first" semantics offset
the weights so that cardinality dominates.

Weights must be integers: all dual arithmetic is exact (weights are doubled
internally so dual variables stay integral), which keeps results
deterministic and free of floating-point drift.

Dual variables are updated lazily: a running delta sum is folded into a
node's stored dual only when its tree label changes. Candidate events for
the next dual adjustment live in three heaps keyed by the delta sum at
which each event fires; keys stay valid because every tracked quantity
decays at exactly one unit per unit of delta, and entries invalidated by
label or blossom changes are discarded or rekeyed when they surface.
"""

from __future__ import annotations

from heapq import heappush, heappop


def max_weight_matching(n_vertex: int, edges: list[tuple[int, int, int]]) -> list[int]:
    """Return mate[v] = matched partner of v, or -1, for integer-weight edges.

    Edges are (i, j, weight) tuples with i != j and no duplicate pairs.
    """
    m = len(edges)
    for i, j, w in edges:
        if i == j:
            raise ValueError(f"self-loop at vertex {i}")
        if not (0 <= i < n_vertex and 0 <= j < n_vertex):
            raise ValueError(f"edge ({i}, {j}) out of range for n={n_vertex}")
        if not isinstance(w, int):
            raise ValueError("edge weights must be integers")
    if len({(min(i, j), max(i, j)) for i, j, _ in edges}) != m:
        raise ValueError("duplicate edge")
    if n_vertex == 0:
        return []

    # Doubled weights keep dual variables integral throughout.
    weight2 = [2 * w for _, _, w in edges]

    # endpoint[2k] / endpoint[2k+1] are the two ends of edge k. neighbend[v]
    # lists pointers p such that endpoint[p] is the far end of an edge at v.
    endpoint = [0] * (2 * m)
    neighbend = [[] for _ in range(n_vertex)]
    for k, (i, j, _) in enumerate(edges):
        endpoint[2 * k] = i
        endpoint[2 * k + 1] = j
        neighbend[i].append(2 * k + 1)
        neighbend[j].append(2 * k)

    # mate[v] is an endpoint pointer (endpoint[mate[v]] is v's partner) or -1.
    mate = [-1] * n_vertex

    # Slots 0..n-1 are trivial (vertex) blossoms, n..2n-1 hold nontrivial
    # ones. Slots are recycled; slotgen guards stale heap references.
    nslot = 2 * n_vertex
    label = [0] * nslot          # 0 free, 1 = S, 2 = T (valid on top slots)
    labelend = [-1] * nslot      # endpoint pointer through which label arrived
    inblossom = list(range(n_vertex))
    blossomparent = [-1] * nslot
    blossombase = list(range(n_vertex)) + [-1] * n_vertex
    blossomchilds: list = [None] * nslot
    blossomendps: list = [None] * nslot
    unusedblossoms = list(range(n_vertex, nslot))
    slotgen = [0] * nslot
    treeroot = [-1] * nslot      # root vertex of the tree a top belongs to

    # Stored duals; the actual dual of a labeled node also involves the
    # running delta sum and the fold timestamp (tau) of the node. Initial
    # duals are the max incident weight, rounded up to even so every dual
    # shares one parity: S-to-S slacks then stay even across trees and the
    # halved delta3 adjustments remain integral.
    dualvar = [0] * nslot
    for k, (i, j, _) in enumerate(edges):
        w2 = weight2[k]
        if w2 > dualvar[i]:
            dualvar[i] = w2
        if w2 > dualvar[j]:
            dualvar[j] = w2
    for v in range(n_vertex):
        half = dualvar[v] // 2
        dualvar[v] = half + (half & 1)
    tau = [0] * nslot

    delta_sum = 0
    queue: list[int] = []
    allowed: set[int] = set()
    tree_verts: dict[int, list[int]] = {}  # root -> labeled vertices
    tree_tops: dict[int, list[int]] = {}   # root -> labeled top slots
    heap2: list = []  # (fire_delta, edge) for S-to-unlabeled edges
    heap3: list = []  # (fire_delta, edge) for S-to-S edges
    heap4: list = []  # (fire_delta, slot_gen, blossom) for T-blossom duals

    def blossom_leaves(b):
        if b < n_vertex:
            return [b]
        out = []
        stack = [b]
        while stack:
            t = stack.pop()
            if t < n_vertex:
                out.append(t)
            else:
                stack.extend(blossomchilds[t])
        return out

    def vdual(v):
        lt = label[inblossom[v]]
        if lt == 1:
            return dualvar[v] - (delta_sum - tau[v])
        if lt == 2:
            return dualvar[v] + (delta_sum - tau[v])
        return dualvar[v]

    def fold_vertex(v, lt):
        # Bring the stored dual up to date for label class lt, then restamp.
        if lt == 1:
            dualvar[v] -= delta_sum - tau[v]
        elif lt == 2:
            dualvar[v] += delta_sum - tau[v]
        tau[v] = delta_sum

    def fold_blossom(b, lt):
        if lt == 1:
            dualvar[b] += delta_sum - tau[b]
        elif lt == 2:
            dualvar[b] -= delta_sum - tau[b]
        tau[b] = delta_sum

    def assign_label(w, t, p, root):
        b = inblossom[w]
        assert label[w] == 0 and label[b] == 0
        label[w] = label[b] = t
        labelend[w] = labelend[b] = p
        treeroot[b] = root
        tau[b] = delta_sum
        tree_tops[root].append(b)
        leaves = blossom_leaves(b)
        verts = tree_verts[root]
        for v in leaves:
            tau[v] = delta_sum
            verts.append(v)
        if t == 1:
            queue.extend(leaves)
        else:
            if b >= n_vertex:
                heappush(heap4, (dualvar[b] + delta_sum, slotgen[b], b))
            base = blossombase[b]
            assert mate[base] >= 0
            assign_label(endpoint[mate[base]], 1, mate[base] ^ 1, root)

    def scan_blossom(v, w):
        # Trace back from v and w to find the common ancestor blossom, or -1
        # if the paths reach two different tree roots (an augmenting path).
        path = []
        base = -1
        while v != -1 or w != -1:
            b = inblossom[v]
            if label[b] & 4:
                base = blossombase[b]
                break
            assert label[b] == 1
            path.append(b)
            label[b] = 5
            assert labelend[b] == mate[blossombase[b]]
            if labelend[b] == -1:
                v = -1
            else:
                v = endpoint[labelend[b]]
                b = inblossom[v]
                assert label[b] == 2
                assert labelend[b] >= 0
                v = endpoint[labelend[b]]
            if w != -1:
                v, w = w, v
        for b in path:
            label[b] = 1
        return base

    def add_blossom(base, k):
        # Shrink the odd cycle through edge k and the tree paths to `base`.
        v, w, _ = edges[k]
        bb = inblossom[base]
        bv = inblossom[v]
        bw = inblossom[w]
        b = unusedblossoms.pop()
        blossombase[b] = base
        blossomparent[b] = -1
        blossomparent[bb] = b
        path = blossomchilds[b] = []
        endps = blossomendps[b] = []
        while bv != bb:
            blossomparent[bv] = b
            path.append(bv)
            endps.append(labelend[bv])
            assert label[bv] == 2 or (
                label[bv] == 1 and labelend[bv] == mate[blossombase[bv]]
            )
            assert labelend[bv] >= 0
            v = endpoint[labelend[bv]]
            bv = inblossom[v]
        path.append(bb)
        path.reverse()
        endps.reverse()
        endps.append(2 * k)
        while bw != bb:
            blossomparent[bw] = b
            path.append(bw)
            endps.append(labelend[bw] ^ 1)
            assert label[bw] == 2 or (
                label[bw] == 1 and labelend[bw] == mate[blossombase[bw]]
            )
            assert labelend[bw] >= 0
            w = endpoint[labelend[bw]]
            bw = inblossom[w]
        assert label[bb] == 1
        label[b] = 1
        labelend[b] = labelend[bb]
        root = treeroot[bb]
        treeroot[b] = root
        tree_tops[root].append(b)
        dualvar[b] = 0
        tau[b] = delta_sum
        # Freeze the duals of the absorbed child blossoms.
        for c in path:
            if c >= n_vertex:
                fold_blossom(c, label[c])
        for x in blossom_leaves(b):
            if label[inblossom[x]] == 2:
                # Former T-vertices become S and must be (re)scanned.
                fold_vertex(x, 2)
                queue.append(x)
            inblossom[x] = b

    def expand_blossom(b, relabel):
        if relabel:
            # Expansion of a T-blossom whose dual hit zero: settle all lazy
            # dual state first so the restructuring works on stored values.
            assert label[b] == 2
            fold_blossom(b, 2)
            assert dualvar[b] == 0
            for x in blossom_leaves(b):
                fold_vertex(x, 2)
        pending = list(blossomchilds[b])
        while pending:
            s = pending.pop()
            blossomparent[s] = -1
            if s < n_vertex:
                inblossom[s] = s
            elif not relabel and dualvar[s] == 0:
                # Zero-dual children dissolve along with their parent.
                pending.extend(blossomchilds[s])
                label[s] = 0
                labelend[s] = -1
                blossomchilds[s] = blossomendps[s] = None
                blossombase[s] = -1
                slotgen[s] += 1
                unusedblossoms.append(s)
            else:
                for v in blossom_leaves(s):
                    inblossom[v] = s
        # A T-blossom expanded mid-search must relabel its children along
        # the alternating path from the entry edge to the base.
        if relabel:
            root = treeroot[b]
            assert labelend[b] >= 0
            entrychild = inblossom[endpoint[labelend[b] ^ 1]]
            j = blossomchilds[b].index(entrychild)
            if j & 1:
                j -= len(blossomchilds[b])
                jstep = 1
                endptrick = 0
            else:
                jstep = -1
                endptrick = 1
            p = labelend[b]
            while j != 0:
                label[endpoint[p ^ 1]] = 0
                label[endpoint[blossomendps[b][j - endptrick] ^ endptrick ^ 1]] = 0
                assign_label(endpoint[p ^ 1], 2, p, root)
                allowed.add(blossomendps[b][j - endptrick] // 2)
                j += jstep
                p = blossomendps[b][j - endptrick] ^ endptrick
                allowed.add(p // 2)
                j += jstep
            bv = blossomchilds[b][j]
            label[endpoint[p ^ 1]] = label[bv] = 2
            labelend[endpoint[p ^ 1]] = labelend[bv] = p
            treeroot[bv] = root
            tau[bv] = delta_sum
            tree_tops[root].append(bv)
            if bv >= n_vertex:
                heappush(heap4, (dualvar[bv] + delta_sum, slotgen[bv], bv))
            for x in blossom_leaves(bv):
                tau[x] = delta_sum
            j += jstep
            freed = []
            while blossomchilds[b][j] != entrychild:
                bv = blossomchilds[b][j]
                if label[bv] == 1:
                    j += jstep
                    continue
                for v in blossom_leaves(bv):
                    if label[v] != 0:
                        break
                if label[v] != 0:
                    assert label[v] == 2
                    assert inblossom[v] == bv
                    label[v] = 0
                    label[endpoint[mate[blossombase[bv]]]] = 0
                    assign_label(v, 2, labelend[v], root)
                else:
                    freed.append(bv)
                j += jstep
            # Children left unlabeled: their edges to S-vertices become
            # delta2 candidates that no scan would otherwise revisit.
            for bv in freed:
                for v in blossom_leaves(bv):
                    for p2 in neighbend[v]:
                        k2 = p2 >> 1
                        if k2 in allowed:
                            continue
                        u = endpoint[p2]
                        bu = inblossom[u]
                        if bu != bv and label[bu] == 1:
                            s = vdual(u) + dualvar[v] - weight2[k2]
                            heappush(heap2, (s + delta_sum, k2))
        label[b] = 0
        labelend[b] = -1
        blossomchilds[b] = blossomendps[b] = None
        blossombase[b] = -1
        slotgen[b] += 1
        unusedblossoms.append(b)

    def expand_zero_dual(w):
        # Dissolve shrunk zero-dual unlabeled blossoms around w before it is
        # pulled into a tree; they no longer constrain the duals and must
        # not force fullness on the new alternating structure.
        b = inblossom[w]
        while b >= n_vertex and label[b] == 0 and dualvar[b] == 0:
            expand_blossom(b, False)
            b = inblossom[w]
        return b

    def augment_blossom(b, v):
        # Rotate blossom b (and affected sub-blossoms) so that vertex v
        # becomes its base. Iterative: blossom chains can nest too deeply
        # for recursion. A "flip" task runs only after the descent task
        # that fixes the base of the entry child has completed.
        tasks = [("down", b, v)]
        while tasks:
            kind, b, v = tasks.pop()
            if kind == "down":
                t = v
                while blossomparent[t] != b:
                    t = blossomparent[t]
                tasks.append(("flip", b, v))
                if t >= n_vertex:
                    tasks.append(("down", t, v))
                continue
            t = v
            while blossomparent[t] != b:
                t = blossomparent[t]
            i = j = blossomchilds[b].index(t)
            if i & 1:
                j -= len(blossomchilds[b])
                jstep = 1
                endptrick = 0
            else:
                jstep = -1
                endptrick = 1
            while j != 0:
                j += jstep
                t = blossomchilds[b][j]
                p = blossomendps[b][j - endptrick] ^ endptrick
                if t >= n_vertex:
                    tasks.append(("down", t, endpoint[p]))
                j += jstep
                t = blossomchilds[b][j]
                if t >= n_vertex:
                    tasks.append(("down", t, endpoint[p ^ 1]))
                mate[endpoint[p]] = p ^ 1
                mate[endpoint[p ^ 1]] = p
            blossomchilds[b] = blossomchilds[b][i:] + blossomchilds[b][:i]
            blossomendps[b] = blossomendps[b][i:] + blossomendps[b][:i]
            blossombase[b] = blossombase[blossomchilds[b][0]]
            assert blossombase[b] == v

    def augment_matching(k):
        # Flip matched/unmatched along the augmenting path through edge k.
        # Returns the roots of the two trees the path connects.
        roots = []
        v, w, _ = edges[k]
        for s, p in ((v, 2 * k + 1), (w, 2 * k)):
            while True:
                bs = inblossom[s]
                assert label[bs] == 1
                assert labelend[bs] == mate[blossombase[bs]]
                if bs >= n_vertex:
                    augment_blossom(bs, s)
                mate[s] = p
                if labelend[bs] == -1:
                    roots.append(treeroot[bs])
                    break  # reached the tree root
                t = endpoint[labelend[bs]]
                bt = inblossom[t]
                assert label[bt] == 2
                assert labelend[bt] >= 0
                s = endpoint[labelend[bt]]
                j = endpoint[labelend[bt] ^ 1]
                assert blossombase[bt] == t
                if bt >= n_vertex:
                    augment_blossom(bt, j)
                mate[j] = labelend[bt]
                p = labelend[bt] ^ 1
        return roots

    def dismantle_tree(root):
        # Remove one tree from the forest: settle lazy duals, clear labels,
        # and re-register edges from the freed vertices to surviving trees
        # as delta2 candidates.
        verts = tree_verts.pop(root)
        tops = tree_tops.pop(root)
        for v in verts:
            fold_vertex(v, label[inblossom[v]])
        for b in tops:
            if b >= n_vertex and blossombase[b] >= 0 and blossomparent[b] == -1 \
                    and treeroot[b] == root and label[b] != 0:
                fold_blossom(b, label[b])
        for v in verts:
            label[v] = 0
            labelend[v] = -1
        for b in tops:
            if treeroot[b] == root:
                label[b] = 0
                labelend[b] = -1
        for v in verts:
            for p in neighbend[v]:
                k = p >> 1
                if k in allowed:
                    continue
                u = endpoint[p]
                bu = inblossom[u]
                if label[bu] == 1 and bu != inblossom[v]:
                    s = vdual(u) + dualvar[v] - weight2[k]
                    heappush(heap2, (s + delta_sum, k))

    def plant_tree(root):
        tree_verts[root] = []
        tree_tops[root] = []
        assign_label(root, 1, -1, root)

    # Grow the forest from every matchable exposed vertex.
    exposed = 0
    for v in range(n_vertex):
        if mate[v] == -1 and neighbend[v]:
            plant_tree(v)
            exposed += 1

    while exposed > 0:
        # Scan tight edges from S-vertices: grow trees, shrink odd cycles,
        # and augment when two trees meet.
        augmented_roots = None
        while queue:
            v = queue.pop()
            bv = inblossom[v]
            if label[bv] != 1:
                continue  # stale entry from a dismantled or absorbed tree
            dv = dualvar[v] - (delta_sum - tau[v])
            restart = False
            for p in neighbend[v]:
                k = p >> 1
                w = endpoint[p]
                bv = inblossom[v]
                bw = inblossom[w]
                if bv == bw:
                    continue
                if k not in allowed:
                    lw = label[bw]
                    if lw == 1:
                        s = dv + dualvar[w] - (delta_sum - tau[w]) - weight2[k]
                        if s > 0:
                            assert s % 2 == 0
                            heappush(heap3, ((s >> 1) + delta_sum, k))
                            continue
                    elif lw == 2:
                        continue
                    else:
                        s = dv + dualvar[w] - weight2[k]
                        if s > 0:
                            heappush(heap2, (s + delta_sum, k))
                            continue
                    allowed.add(k)
                bw = inblossom[w]
                lw = label[bw]
                if lw == 0:
                    bw = expand_zero_dual(w)
                    assert mate[blossombase[bw]] >= 0
                    assign_label(w, 2, p ^ 1, treeroot[inblossom[v]])
                elif lw == 1:
                    base = scan_blossom(v, w)
                    if base >= 0:
                        add_blossom(base, k)
                        dv = dualvar[v] - (delta_sum - tau[v])
                    else:
                        augmented_roots = augment_matching(k)
                        restart = True
                        break
                elif label[w] == 0:
                    # First outside contact with a T-blossom interior
                    # vertex; remember the entry edge for expansion.
                    label[w] = 2
                    labelend[w] = p ^ 1
            if restart:
                r1, r2 = augmented_roots
                dismantle_tree(r1)
                dismantle_tree(r2)
                exposed -= 2
                augmented_roots = None
        if exposed == 0:
            break

        # Pick the next event: the smallest fire time among the heaps.
        # Entries invalidated by label or blossom changes are discarded;
        # entries whose key drifted (the tracked quantity was frozen for an
        # interval) are reinserted with the recomputed key.
        fire2 = fire3 = fire4 = None
        while heap2:
            key, k = heap2[0]
            i, j, _ = edges[k]
            li = label[inblossom[i]]
            lj = label[inblossom[j]]
            if k in allowed or {li, lj} != {0, 1}:
                heappop(heap2)
                continue
            true_key = vdual(i) + vdual(j) - weight2[k] + delta_sum
            if true_key != key:
                assert true_key > key
                heappop(heap2)
                heappush(heap2, (true_key, k))
                continue
            fire2 = key
            break
        while heap3:
            key, k = heap3[0]
            i, j, _ = edges[k]
            bi = inblossom[i]
            bj = inblossom[j]
            if k in allowed or bi == bj or label[bi] != 1 or label[bj] != 1:
                heappop(heap3)
                continue
            s = vdual(i) + vdual(j) - weight2[k]
            assert s % 2 == 0
            true_key = (s >> 1) + delta_sum
            if true_key != key:
                assert true_key > key
                heappop(heap3)
                heappush(heap3, (true_key, k))
                continue
            fire3 = key
            break
        while heap4:
            key, gen, b = heap4[0]
            if (
                slotgen[b] != gen
                or blossombase[b] < 0
                or blossomparent[b] != -1
                or label[b] != 2
            ):
                heappop(heap4)
                continue
            assert key == dualvar[b] + tau[b]
            fire4 = key
            break

        fires = [f for f in (fire2, fire3, fire4) if f is not None]
        if not fires:
            # Every remaining tree is hungarian: no augmenting paths exist
            # and the matching has maximum cardinality.
            break
        fire = min(fires)
        assert fire >= delta_sum
        delta_sum = fire

        if fire2 is not None and fire == fire2:
            _, k = heappop(heap2)
            i, j, _ = edges[k]
            allowed.add(k)
            if label[inblossom[i]] != 1:
                i = j
            assert label[inblossom[i]] == 1
            queue.append(i)
        elif fire3 is not None and fire == fire3:
            _, k = heappop(heap3)
            i, j, _ = edges[k]
            allowed.add(k)
            assert label[inblossom[i]] == 1
            queue.append(i)
        else:
            _, _, b = heappop(heap4)
            expand_blossom(b, True)

    result = [-1] * n_vertex
    for v in range(n_vertex):
        if mate[v] >= 0:
            result[v] = endpoint[mate[v]]
    for v in range(n_vertex):
        assert result[v] == -1 or result[result[v]] == v
    return result
