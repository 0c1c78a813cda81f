"""Exact solvers, each tuned to a different instance regime.

* ``subset_dp_min_cost``: few books, any shops.  Dynamic program over book
  subsets: after processing shops 0..j, dp[B] is the cheapest way to buy
  exactly the books in B from those shops.  O(m * 3^n) worst case, but the
  per-shop enumeration only ranges over subsets of that shop's inventory.
* ``price_vector_dp``: few shops, pseudo-polynomial in prices.  Forward
  reachability over per-shop spend vectors, one book at a time.
* ``matching2_min_cost``: every shop sells at most two books.  Reduces to
  maximum-weight matching in a derived graph whose edges encode "this shop
  earns its discount".
* ``fstar_unit_price_min_cost``: unit prices, few shops.  Enumerates the
  set of shops that will earn their discount and checks each candidate
  with a degree-constrained subgraph (flow) computation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DegreeTooHigh,
    InfeasibleParameters,
    NegativeValue,
    NotUnitPrice,
    StateSpaceTooLarge,
    TooManyBooks,
    TooManyShops,
)
from .matching import WeightedEdge, WeightedGraph, matching_weight, max_weight_matching
from .model import (
    Assignment,
    Instance,
    SolveResult,
    cheapest_shop,
    evaluate_assignment,
    min_price,
)

INF = float("inf")

DEFAULT_MAX_BOOKS = 20
DEFAULT_MAX_SHOPS_DP = 4
DEFAULT_MAX_STATES = 2_000_000
DEFAULT_MAX_SHOPS_FSTAR = 20


# --- subset dynamic program -------------------------------------------------


def _shop_subset_tables(instance: Instance, shop: int) -> tuple[list[int], list[int]]:
    """Spend and global-bitmask tables over subsets of one shop's inventory.

    Entry ``ls`` (a bitmask over the shop's own book list) gives the spend
    for buying exactly those books there and the corresponding bitmask over
    all books.
    """
    books = instance.books_by_shop[shop]
    k = len(books)
    spends = [0] * (1 << k)
    gmasks = [0] * (1 << k)
    for ls in range(1, 1 << k):
        low = ls & -ls
        idx = low.bit_length() - 1
        spends[ls] = spends[ls ^ low] + instance.price[(books[idx], shop)]
        gmasks[ls] = gmasks[ls ^ low] | (1 << books[idx])
    return spends, gmasks


def subset_dp_min_cost(instance: Instance, *, max_books: int = DEFAULT_MAX_BOOKS) -> SolveResult:
    """Minimum cost via dynamic programming over subsets of books.

    dp_j[B] = min over B'' subset of B of (net price of buying B'' at shop
    j) + dp_{j-1}[B without B''], where the net price includes shop j's
    discount when the spend reaches its threshold.  Buying nothing at a
    threshold-0 shop still earns its discount.
    """
    n = instance.num_books
    if n > max_books:
        raise TooManyBooks(n, max_books)
    m = instance.num_shops
    full = (1 << n) - 1

    layers: list[list[float]] = []
    dp: list[float] = [INF] * (full + 1)
    dp[0] = 0
    layers.append(dp)
    tables: list[tuple[list[int], list[int]]] = []

    for s in range(m):
        rule = instance.rules[s]
        spends, gmasks = _shop_subset_tables(instance, s)
        tables.append((spends, gmasks))
        prev = layers[-1]
        base = -rule.discount if rule.threshold == 0 else 0
        cur = [v + base for v in prev]
        threshold = rule.threshold
        discount = rule.discount
        for ls in range(1, len(spends)):
            spend = spends[ls]
            value = spend - discount if spend >= threshold else spend
            g = gmasks[ls]
            comp = full ^ g
            t = comp
            while True:
                cand = value + prev[t]
                i = g | t
                if cand < cur[i]:
                    cur[i] = cand
                if t == 0:
                    break
                t = (t - 1) & comp
        layers.append(cur)

    assert layers[m][full] != INF
    # Reconstruct: walk shops backwards, re-finding the subset bought at
    # each one (first match in ascending local-mask order).
    choice = [-1] * n
    mask = full
    for s in range(m - 1, -1, -1):
        rule = instance.rules[s]
        spends, gmasks = tables[s]
        target = layers[s + 1][mask]
        prev = layers[s]
        base = -rule.discount if rule.threshold == 0 else 0
        picked = None
        for ls in range(len(spends)):
            g = gmasks[ls]
            if g & ~mask:
                continue
            if ls == 0:
                value = base
            else:
                spend = spends[ls]
                value = spend - rule.discount if spend >= rule.threshold else spend
            if value + prev[mask ^ g] == target:
                picked = ls
                break
        assert picked is not None
        books = instance.books_by_shop[s]
        for idx in range(len(books)):
            if picked >> idx & 1:
                choice[books[idx]] = s
        mask ^= gmasks[picked]
    assert mask == 0

    result = evaluate_assignment(instance, Assignment(tuple(choice)))
    assert result.total_cost == layers[m][full]
    return result


# --- price-vector dynamic program -------------------------------------------


@dataclass(frozen=True)
class Decision:
    """Outcome of a budget decision: feasibility plus a witness if yes."""

    feasible: bool
    result: SolveResult | None


def _price_vector_search(
    instance: Instance, max_shops: int, max_states: int
) -> tuple[int, Assignment]:
    m = instance.num_shops
    if m > max_shops:
        raise TooManyShops(m, max_shops)
    n = instance.num_books

    # layers[i] maps each reachable spend vector after books 0..i-1 to a
    # back-pointer (previous vector, shop chosen for book i-1).  Iteration
    # in sorted order with first-writer-wins keeps everything deterministic.
    start: tuple[int, ...] = (0,) * m
    layers: list[dict[tuple[int, ...], tuple[tuple[int, ...], int] | None]] = [{start: None}]
    total = 1
    for b in range(n):
        nxt: dict[tuple[int, ...], tuple[tuple[int, ...], int] | None] = {}
        for state in sorted(layers[-1]):
            for shop, price in instance.offers_by_book[b]:
                ns = state[:shop] + (state[shop] + price,) + state[shop + 1 :]
                if ns not in nxt:
                    nxt[ns] = (state, shop)
        total += len(nxt)
        if total > max_states:
            raise StateSpaceTooLarge(total, max_states)
        layers.append(nxt)

    best_cost: int | None = None
    best_state: tuple[int, ...] | None = None
    for state in sorted(layers[-1]):
        cost = sum(state)
        for s, rule in enumerate(instance.rules):
            if state[s] >= rule.threshold:
                cost -= rule.discount
        if best_cost is None or cost < best_cost:
            best_cost = cost
            best_state = state
    assert best_cost is not None and best_state is not None

    choice = [0] * n
    state = best_state
    for b in range(n - 1, -1, -1):
        back = layers[b + 1][state]
        assert back is not None
        state, shop = back
        choice[b] = shop
    return best_cost, Assignment(tuple(choice))


def price_vector_min_cost(
    instance: Instance,
    *,
    max_shops: int = DEFAULT_MAX_SHOPS_DP,
    max_states: int = DEFAULT_MAX_STATES,
) -> SolveResult:
    """Minimum cost via reachable per-shop spend vectors."""
    best_cost, assignment = _price_vector_search(instance, max_shops, max_states)
    result = evaluate_assignment(instance, assignment)
    assert result.total_cost == best_cost
    return result


def price_vector_dp(
    instance: Instance,
    budget: int | None = None,
    *,
    max_shops: int = DEFAULT_MAX_SHOPS_DP,
    max_states: int = DEFAULT_MAX_STATES,
) -> Decision:
    """Decide whether total cost ``budget`` (or the instance budget) is
    achievable; on yes, the witness is a cheapest assignment."""
    if budget is None:
        budget = instance.budget
    if budget is None:
        raise InfeasibleParameters("decision requires a budget")
    result = price_vector_min_cost(instance, max_shops=max_shops, max_states=max_states)
    if result.total_cost <= budget:
        return Decision(True, result)
    return Decision(False, None)


# --- matching reduction for shops selling at most two books ------------------


def build_discount_graph(instance: Instance) -> WeightedGraph:
    """Derived graph whose maximum-weight matching encodes earned discounts.

    Vertices are the n books followed by the m shops.  A book-shop edge
    means "buy just this book at this shop and earn its discount"; a
    book-book edge (tagged with the shop) means "buy this pair at the
    tagged shop and earn its discount".  Edge weights are the savings
    relative to buying each book at its cheapest price anywhere; negative
    edges can never help a maximum matching and are dropped, and parallel
    book-book candidates keep the heaviest (ties to the lower shop index).
    Threshold-0 shops earn their discount unconditionally, so their edges
    carry no discount term; the caller accounts for those discounts as a
    constant.
    """
    n = instance.num_books
    base = [min_price(instance, b) for b in range(n)]
    chosen: dict[tuple[int, int], tuple[int, int]] = {}
    for s, rule in enumerate(instance.rules):
        books = instance.books_by_shop[s]
        if len(books) > 2:
            raise DegreeTooHigh(s, len(books))
        bonus = rule.discount if rule.threshold > 0 else 0
        for b in books:
            w = instance.price[(b, s)]
            if w >= rule.threshold:
                weight = bonus + base[b] - w
                if weight >= 0:
                    chosen[(b, n + s)] = (weight, s)
        if len(books) == 2:
            b1, b2 = books
            w1 = instance.price[(b1, s)]
            w2 = instance.price[(b2, s)]
            if w1 + w2 >= rule.threshold:
                weight = bonus + (base[b1] - w1) + (base[b2] - w2)
                prev = chosen.get((b1, b2))
                if weight >= 0 and (prev is None or weight > prev[0]):
                    chosen[(b1, b2)] = (weight, s)
    edges = tuple(
        WeightedEdge(u, v, weight, tag=s)
        for (u, v), (weight, s) in sorted(chosen.items())
    )
    return WeightedGraph(num_vertices=n + instance.num_shops, edges=edges)


def matching2_min_cost(instance: Instance) -> SolveResult:
    """Minimum cost when every shop sells at most two books.

    The cost equals (sum of per-book minimum prices) minus the weight of a
    maximum matching in the derived graph, minus the discounts of
    threshold-0 shops which are earned no matter what.
    """
    n = instance.num_books
    graph = build_discount_graph(instance)
    matched = max_weight_matching(graph)
    weight = matching_weight(graph, matched)
    free = sum(rule.discount for rule in instance.rules if rule.threshold == 0)

    tag_of = {(min(e.u, e.v), max(e.u, e.v)): e.tag for e in graph.edges}
    choice = [cheapest_shop(instance, b) for b in range(n)]
    for (u, v) in matched:
        if v >= n:
            choice[u] = v - n  # buy this book alone at the shop
        else:
            shop = tag_of[(u, v)]
            assert shop is not None
            choice[u] = choice[v] = shop  # buy the pair at the tagged shop

    result = evaluate_assignment(instance, Assignment(tuple(choice)))
    assert result.total_cost == sum(min_price(instance, b) for b in range(n)) - weight - free
    return result


# --- discount-set enumeration for unit prices --------------------------------


@dataclass(frozen=True)
class StarDegreeBound:
    """Per-shop degree caps for subgraph extraction; books are capped at 1."""

    shop_caps: tuple[int, ...]


def max_fstar_subgraph(instance: Instance, bound: StarDegreeBound) -> tuple[tuple[int, int], ...]:
    """Largest set of offers with each book used at most once and each shop
    at most its cap.  Augmenting-path maximum flow on the unit-capacity
    network source -> books (cap 1) -> shops (availability) -> sink (cap
    per shop); returns the chosen (book, shop) edges.
    """
    m = instance.num_shops
    if len(bound.shop_caps) != m:
        raise InfeasibleParameters(
            f"need {m} shop caps, got {len(bound.shop_caps)}"
        )
    n = instance.num_books
    slot_shop: list[int] = []
    slot_start = []
    for s, cap in enumerate(bound.shop_caps):
        if cap < 0:
            raise NegativeValue(f"cap of shop {s}", cap)
        slot_start.append(len(slot_shop))
        slot_shop.extend([s] * min(cap, n))  # more than n slots can never fill

    adj: list[list[int]] = []
    for b in range(n):
        slots: list[int] = []
        for shop, _ in instance.offers_by_book[b]:
            begin = slot_start[shop]
            end = begin + min(bound.shop_caps[shop], n)
            slots.extend(range(begin, end))
        adj.append(slots)

    slot_book = [-1] * len(slot_shop)
    book_slot = [-1] * n

    def augment(b: int, banned: set[int]) -> bool:
        for t in adj[b]:
            if t in banned:
                continue
            banned.add(t)
            if slot_book[t] == -1 or augment(slot_book[t], banned):
                book_slot[b] = t
                slot_book[t] = b
                return True
        return False

    for b in range(n):
        augment(b, set())

    return tuple(
        (b, slot_shop[book_slot[b]]) for b in range(n) if book_slot[b] != -1
    )


def fstar_unit_price_min_cost(
    instance: Instance, *, max_shops: int = DEFAULT_MAX_SHOPS_FSTAR
) -> SolveResult:
    """Minimum cost for unit-price instances by discount-set enumeration.

    For each candidate set S of shops to earn their discounts, a feasible
    plan exists iff the offer graph has a subgraph hitting every shop of S
    exactly at its threshold with books used at most once; the cost is
    then (number of books) - (discounts of S).  Ties between optimal sets
    go to the lexicographically smallest shop tuple.
    """
    m = instance.num_shops
    if m > max_shops:
        raise TooManyShops(m, max_shops)
    for o in instance.offers:
        if o.price != 1:
            raise NotUnitPrice(o.book, o.shop, o.price)
    n = instance.num_books
    rules = instance.rules

    best: tuple[int, tuple[int, ...], tuple[tuple[int, int], ...]] | None = None
    for mask in range(1 << m):
        shops = tuple(s for s in range(m) if mask >> s & 1)
        tsum = sum(rules[s].threshold for s in shops)
        if tsum > n:
            continue
        cost = n - sum(rules[s].discount for s in shops)
        if best is not None and (cost, shops) >= (best[0], best[1]):
            continue
        caps = tuple(rules[s].threshold if mask >> s & 1 else 0 for s in range(m))
        star = max_fstar_subgraph(instance, StarDegreeBound(caps))
        if len(star) == tsum:
            best = (cost, shops, star)
    assert best is not None  # the empty set always qualifies

    choice = [-1] * n
    for b, s in best[2]:
        choice[b] = s
    for b in range(n):
        if choice[b] == -1:
            choice[b] = instance.offers_by_book[b][0][0]
    result = evaluate_assignment(instance, Assignment(tuple(choice)))
    assert result.total_cost == best[0]
    return result
