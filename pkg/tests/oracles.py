"""Independent brute-force oracles.

Everything here is written from the definitions, separately from the package
internals, so tests can compare the two routes.  Keep these naive: clarity
over speed is the point.
"""

from fractions import Fraction
from itertools import permutations, product


def oracle_is_associative(table) -> bool:
    n = len(table)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    return False
    return True


def oracle_labeled_count(n: int) -> int:
    """Scan all n^(n*n) tables and count the associative ones."""
    count = 0
    for flat in product(range(n), repeat=n * n):
        table = [flat[i * n:(i + 1) * n] for i in range(n)]
        if oracle_is_associative(table):
            count += 1
    return count


def oracle_isomorphic(table_a, table_b) -> bool:
    """Pairwise isomorphism by trying every carrier bijection."""
    n = len(table_a)
    if len(table_b) != n:
        return False
    for perm in permutations(range(n)):
        if all(
            perm[table_a[i][j]] == table_b[perm[i]][perm[j]]
            for i in range(n)
            for j in range(n)
        ):
            return True
    return False


def oracle_iso_class_count(tables) -> int:
    reps = []
    for table in tables:
        if not any(oracle_isomorphic(table, rep) for rep in reps):
            reps.append(table)
    return len(reps)


# Crisp predicates straight from the set-inclusion definitions.


def oracle_crisp(table, members: set, kind: str) -> bool:
    n = len(table)
    everything = range(n)
    if not members:
        return False
    products_in = lambda left, right: {table[i][j] for i in left for j in right}
    sub = products_in(members, members) <= members
    left = products_in(everything, members) <= members
    right = products_in(members, everything) <= members
    if kind == "subsemigroup":
        return sub
    if kind == "interior_ideal":
        sis = {
            table[table[x][a]][y]
            for x in everything for a in members for y in everything
        }
        return sub and sis <= members
    if kind == "left_ideal":
        return left
    if kind == "right_ideal":
        return right
    if kind == "ideal":
        return left and right
    if kind == "completely_prime":
        if not (left and right):
            return False
        return all(
            not (table[x][y] in members) or x in members or y in members
            for x in everything for y in everything
        )
    if kind == "completely_semiprime":
        if not (left and right):
            return False
        return all(not (table[x][x] in members) or x in members for x in everything)
    raise ValueError(kind)


# Fuzzy predicates straight from the grade inequalities.


def oracle_q_kind(table, grades, kind: str) -> bool:
    """grades: list of per-element tuples; returns the full definitional
    predicate (non-empty, ideal chain for prime kinds, then the condition)."""
    n = len(table)
    nq = range(len(grades[0]))
    if all(g == 0 for row in grades for g in row):
        return False

    def left():
        return all(
            grades[table[x][y]][k] >= grades[y][k]
            for x in range(n) for y in range(n) for k in nq
        )

    def right():
        return all(
            grades[table[x][y]][k] >= grades[x][k]
            for x in range(n) for y in range(n) for k in nq
        )

    if kind == "q_subsemigroup":
        return all(
            grades[table[x][y]][k] >= min(grades[x][k], grades[y][k])
            for x in range(n) for y in range(n) for k in nq
        )
    if kind == "q_interior_ideal":
        return oracle_q_kind(table, grades, "q_subsemigroup") and all(
            grades[table[table[x][a]][y]][k] >= grades[a][k]
            for x in range(n) for a in range(n) for y in range(n) for k in nq
        )
    if kind == "q_left_ideal":
        return left()
    if kind == "q_right_ideal":
        return right()
    if kind == "q_ideal":
        return left() and right()
    if kind == "q_completely_prime":
        if not (left() and right()):
            return False
        return all(
            grades[table[x][y]][k] == max(grades[x][k], grades[y][k])
            for x in range(n) for y in range(n) for k in nq
        )
    if kind == "q_completely_semiprime":
        if not (left() and right()):
            return False
        return all(
            grades[x][k] >= grades[table[x][x]][k] for x in range(n) for k in nq
        )
    raise ValueError(kind)


def oracle_level_set(grades, t: Fraction) -> set:
    return {
        x for x, row in enumerate(grades) if all(g >= t for g in row)
    }
