"""
Hazır Graf ve Ortam Örnekleri
-----------------------------
Testlerin ve komut satırının adla başvurduğu sabit örnekler: yollar,
yıldız, çevreler, tam iki parçalı K23, hiperküpler, domino, 15 tepeli ağaç,
iki bileşenli graf ve tohumlu rastgele kısmi küp.
"""

from itertools import combinations
from typing import Callable, Dict, Iterable, List, Optional

import numpy as np

from core.errors import InputError
from core.token_system import Token, TokenSystem
from convert.bijection import graph_to_medium
from graphs.graph import Graph, is_isometric_subgraph_of_hypercube
from utils.logging_config import get_logger

logger = get_logger(__name__)


def subset_name(elements: Iterable[int]) -> str:
    """{1,2} biçiminde küme adı; boş küme "{}"."""
    return "{" + ",".join(str(e) for e in sorted(elements)) + "}"


def path_graph(n: int) -> Graph:
    return Graph([str(i) for i in range(n)], [(str(i), str(i + 1)) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph([str(i) for i in range(n)], [(str(i), str((i + 1) % n)) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph([str(i) for i in range(leaves + 1)], [("0", str(i)) for i in range(1, leaves + 1)])


def k23() -> Graph:
    left, right = ["a1", "a2"], ["b1", "b2", "b3"]
    return Graph(left + right, [(a, b) for a in left for b in right])


def hypercube_graph(dim: int) -> Graph:
    """Q_dim; tepeler {1..dim} kümesinin alt kümeleri."""
    subsets = [frozenset(c) for k in range(dim + 1) for c in combinations(range(1, dim + 1), k)]
    edges = [(subset_name(s), subset_name(s | {e})) for s in subsets for e in range(1, dim + 1) if e not in s]
    return Graph([subset_name(s) for s in subsets], edges)


def hypercube_medium(dim: int) -> TokenSystem:
    """Alt kümeler üzerinde add<i> / remove<i> tokenlarıyla hiperküp ortamı."""
    subsets = [frozenset(c) for k in range(dim + 1) for c in combinations(range(1, dim + 1), k)]
    tokens: List[Token] = []
    for e in range(1, dim + 1):
        moves = frozenset((subset_name(s), subset_name(s | {e})) for s in subsets if e not in s)
        tokens.append(Token(f"add{e}", moves))
        tokens.append(Token(f"remove{e}", frozenset((v, u) for u, v in moves)))
    return TokenSystem([subset_name(s) for s in subsets], tokens)


def k2_medium() -> TokenSystem:
    return TokenSystem(["0", "1"], [Token("t01", frozenset({("0", "1")})), Token("t10", frozenset({("1", "0")}))])


def domino() -> Graph:
    """Bir kirişle iki kareye bölünmüş C6."""
    base = cycle_graph(6)
    return Graph(base.vertices, sorted(base.edges) + [("0", "3")])


def tree15() -> Graph:
    return Graph([str(i) for i in range(15)],
                 [(str(i), str(c)) for i in range(7) for c in (2 * i + 1, 2 * i + 2)])


def two_components() -> Graph:
    return Graph(["0", "1", "2", "3"], [("0", "1"), ("2", "3")])


def random_partial_cube(seed: int = 0, dim: int = 4, size: int = 10, attempts: int = 2000) -> Graph:
    """
    Q_dim içinde boş kümeden başlayıp rastgele komşular ekleyerek büyüyen
    izometrik bir alt küme. Her ekleme sonrasında izometri korunur.

    Rastgele alt kümelerin en büyük izometrik bileşeni alınmaz; küme
    baştan bağlı ve izometrik büyütüldüğünden sonuç her tohum için bir
    kısmi küptür; deneme sınırına ulaşılmadıkça size tepelidir.

    Args:
        seed: numpy üretecinin tohumu
        dim: Hiperküp boyutu
        size: Hedef tepe sayısı (en fazla 2^dim)
        attempts: Deneme sınırı; sınırda o ana kadarki küme döner
    """
    if not 2 <= size <= 2 ** dim:
        raise InputError(f"size 2 ile {2 ** dim} arasında olmalı: {size}", details={"field": "size"})
    rng = np.random.default_rng(seed)
    members = [0]
    for _ in range(attempts):
        if len(members) >= size:
            break
        base = members[int(rng.integers(len(members)))]
        candidate = base ^ (1 << int(rng.integers(dim)))
        if candidate in members:
            continue
        if is_isometric_subgraph_of_hypercube(members + [candidate]):
            members.append(candidate)
    names = {m: format(m, f"0{dim}b") for m in members}
    edges = [(names[a], names[b]) for a, b in combinations(sorted(members), 2) if bin(a ^ b).count("1") == 1]
    logger.debug(f"Rastgele kısmi küp: tohum={seed}, {len(members)} tepe")
    return Graph(names.values(), edges)


GRAPH_FIXTURES: Dict[str, Callable[[], Graph]] = {
    "k2": lambda: path_graph(2),
    "p3": lambda: path_graph(3),
    "p6": lambda: path_graph(6),
    "k13": lambda: star_graph(3),
    "c4": lambda: cycle_graph(4),
    "c5": lambda: cycle_graph(5),
    "c6": lambda: cycle_graph(6),
    "c8": lambda: cycle_graph(8),
    "k23": k23,
    "q3": lambda: hypercube_graph(3),
    "q4": lambda: hypercube_graph(4),
    "domino": domino,
    "tree15": tree15,
    "two-components": two_components,
    "random-partial-cube": random_partial_cube,
}

MEDIATIC_FIXTURES = ("k2", "p3", "p6", "k13", "c4", "c6", "c8", "q3", "q4", "domino", "tree15",
                     "random-partial-cube")
NON_MEDIATIC_FIXTURES = ("c5", "k23", "two-components")


def fixture_graph(name: str, seed: Optional[int] = None) -> Graph:
    """
    Adı verilen örnek grafı döndürür.

    Raises:
        InputError: Ad bilinmiyorsa
    """
    if name not in GRAPH_FIXTURES:
        raise InputError(f"Bilinmeyen örnek: {name} (geçerli: {', '.join(sorted(GRAPH_FIXTURES))})",
                         details={"field": "name"})
    if name == "random-partial-cube" and seed is not None:
        return random_partial_cube(seed)
    return GRAPH_FIXTURES[name]()


def fixture_medium(name: str, seed: Optional[int] = None) -> TokenSystem:
    """
    Adı verilen örnek ortamı döndürür. k2, q3 ve q4 elle adlandırılmış
    tokenlar taşır; diğerleri grafın indüklediği ortamdır.

    Raises:
        InputError: Ad bilinmiyorsa
        PreconditionError: Örnek graf mediatik değilse
    """
    if name == "k2":
        return k2_medium()
    if name in ("q3", "q4"):
        return hypercube_medium(int(name[1]))
    return graph_to_medium(fixture_graph(name, seed))
