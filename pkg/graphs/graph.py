"""
MedyaKiti Graf Modülü
---------------------
Sonlu basit yönsüz graflar, mesafe tabloları, iki parçalılık, devreler,
benzerlik (like) ilişkisi ve mediatik graf kararı ([G1]-[G3]).

Mesafeler networkx ile hesaplanır ve salt okunur bir numpy matrisinde
tutulur; farklı bileşenlerdeki tepeler arası mesafe `inf` olarak saklanır.
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
from networkx.utils import UnionFind

from core.errors import BudgetExceededError, InputError, PreconditionError
from core.token_system import ReportModel, StateId
from utils.config import MediaKitSettings, resolve_settings
from utils.logging_config import get_logger

logger = get_logger(__name__)


class Arc(NamedTuple):
    """Yönlü kenar ST; demet sıralaması sözlük sırasıdır."""
    source: StateId
    target: StateId

    def reversed(self) -> "Arc":
        return Arc(self.target, self.source)

    def label(self) -> str:
        return f"{self.source}{self.target}"


Circuit = Tuple[StateId, ...]


class Graph:
    """
    Sonlu basit yönsüz graf. Değiştirilemez ve değer olarak karşılaştırılabilir;
    bu sayede mesafe tabloları grafa göre önbelleğe alınabilir.
    """

    def __init__(self, vertices: Iterable[StateId], edges: Iterable[Sequence[StateId]]):
        """
        Grafı oluşturur ve doğrular.

        Args:
            vertices: Tepe kimlikleri (en az iki, benzersiz)
            edges: İki uçlu kenar listesi

        Raises:
            InputError: Döngü, tekrar eden kenar ya da bilinmeyen tepe varsa
        """
        vertex_list = [str(v) for v in vertices]
        if any(not v for v in vertex_list):
            raise InputError("Tepe kimlikleri boş olamaz", details={"field": "vertices"})
        if len(set(vertex_list)) != len(vertex_list):
            raise InputError("Tepe kimlikleri benzersiz olmalı", details={"field": "vertices"})
        if len(vertex_list) < 2:
            raise InputError("Bir grafta en az iki tepe olmalı", details={"field": "vertices"})
        self._vertices: Tuple[StateId, ...] = tuple(sorted(vertex_list))
        vertex_set = frozenset(self._vertices)

        edge_set = set()
        for i, edge in enumerate(edges):
            if len(edge) != 2:
                raise InputError(f"edges[{i}] iki uçlu olmalı", details={"field": f"edges[{i}]"})
            u, v = str(edge[0]), str(edge[1])
            if u == v:
                raise InputError(f"Grafta döngü olamaz: {u}-{v}", details={"field": f"edges[{i}]"})
            if u not in vertex_set or v not in vertex_set:
                raise InputError(f"edges[{i}] bilinmeyen bir tepeye değiyor: {u}-{v}",
                                 details={"field": f"edges[{i}]"})
            key = (min(u, v), max(u, v))
            if key in edge_set:
                raise InputError(f"Kenar tekrar ediyor: {u}-{v}", details={"field": f"edges[{i}]"})
            edge_set.add(key)
        self._edges: FrozenSet[Tuple[StateId, StateId]] = frozenset(edge_set)

        adjacency: Dict[StateId, List[StateId]] = {v: [] for v in self._vertices}
        for u, v in self._edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        self._adjacency = {v: tuple(sorted(ns)) for v, ns in adjacency.items()}
        self._index = {v: i for i, v in enumerate(self._vertices)}

    @property
    def vertices(self) -> Tuple[StateId, ...]:
        return self._vertices

    @property
    def edges(self) -> FrozenSet[Tuple[StateId, StateId]]:
        return self._edges

    def index(self, vertex: StateId) -> int:
        try:
            return self._index[vertex]
        except KeyError:
            raise InputError(f"Bilinmeyen tepe: {vertex}", details={"field": "vertex"})

    def neighbors(self, vertex: StateId) -> Tuple[StateId, ...]:
        """Komşular, sözlük sırasında."""
        self.index(vertex)
        return self._adjacency[vertex]

    def degree(self, vertex: StateId) -> int:
        return len(self.neighbors(vertex))

    def has_edge(self, u: StateId, v: StateId) -> bool:
        return (min(u, v), max(u, v)) in self._edges

    def arcs(self) -> List[Arc]:
        """Tüm yönlü kenarlar (her kenar iki yönde), sıralı."""
        return sorted(Arc(u, v) for a, b in self._edges for u, v in ((a, b), (b, a)))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self._vertices)
        graph.add_edges_from(sorted(self._edges))
        return graph

    def to_dict(self) -> dict:
        return {"vertices": list(self._vertices), "edges": [list(e) for e in sorted(self._edges)]}

    @classmethod
    def from_dict(cls, data: Mapping) -> "Graph":
        """
        Grafı JSON biçiminden okur.

        Raises:
            InputError: Eksik ya da hatalı alan varsa
        """
        if not isinstance(data, Mapping):
            raise InputError("Graf bir JSON nesnesi olmalı", details={"field": "<root>"})
        if not isinstance(data.get("vertices"), list):
            raise InputError("'vertices' alanı eksik ya da liste değil", details={"field": "vertices"})
        if not isinstance(data.get("edges"), list):
            raise InputError("'edges' alanı eksik ya da liste değil", details={"field": "edges"})
        for i, edge in enumerate(data["edges"]):
            if not isinstance(edge, list):
                raise InputError(f"edges[{i}] bir liste olmalı", details={"field": f"edges[{i}]"})
        return cls(data["vertices"], data["edges"])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"Graph(vertices={len(self._vertices)}, edges={len(self._edges)})"


def induced_subgraph(graph: Graph, vertices: Iterable[StateId]) -> Graph:
    keep = frozenset(vertices)
    return Graph(keep, [e for e in graph.edges if e[0] in keep and e[1] in keep])


# ----------------------------------------------------------------------
# Mesafeler
# ----------------------------------------------------------------------
class DistanceTable:
    """Tüm tepe çiftleri arası atlama mesafeleri; erişilemeyen çiftler için inf."""

    def __init__(self, graph: Graph, matrix: np.ndarray):
        self.graph = graph
        self.matrix = matrix

    def d(self, u: StateId, v: StateId) -> float:
        return float(self.matrix[self.graph.index(u), self.graph.index(v)])

    def finite(self, u: StateId, v: StateId) -> bool:
        return bool(np.isfinite(self.matrix[self.graph.index(u), self.graph.index(v)]))

    def row(self, u: StateId) -> np.ndarray:
        return self.matrix[self.graph.index(u)]


@lru_cache(maxsize=64)
def distances(graph: Graph) -> DistanceTable:
    """
    Her tepeden genişlik öncelikli arama ile kesin mesafeleri hesaplar.

    Args:
        graph: Graf

    Returns:
        DistanceTable: Simetrik mesafe tablosu (bileşenler arası inf)
    """
    n = len(graph.vertices)
    matrix = np.full((n, n), np.inf)
    for source, lengths in nx.all_pairs_shortest_path_length(graph.to_networkx()):
        i = graph.index(source)
        for target, hops in lengths.items():
            matrix[i, graph.index(target)] = hops
    matrix.setflags(write=False)
    logger.debug(f"Mesafe tablosu hesaplandı: {n} tepe")
    return DistanceTable(graph, matrix)


def component_witness(graph: Graph) -> Optional[Tuple[StateId, StateId]]:
    """Farklı bileşenlerdeki en küçük tepe çifti; bağlıysa None."""
    first = graph.vertices[0]
    table = distances(graph)
    for other in graph.vertices[1:]:
        if not table.finite(first, other):
            return first, other
    return None


def is_connected(graph: Graph) -> bool:
    """[G1]: graf bağlı mı."""
    return component_witness(graph) is None


class BipartiteResult(ReportModel):
    bipartite: bool
    odd_cycle: Optional[List[StateId]] = None


def is_bipartite(graph: Graph) -> BipartiteResult:
    """
    [G2]: BFS ile iki renklendirme. Çatışan bir kenar bulunursa, BFS ağacında
    iki ucun ortak atasına giden yollar birleştirilerek tek uzunluklu bir
    devre tanık olarak döndürülür.
    """
    color: Dict[StateId, int] = {}
    parent: Dict[StateId, Optional[StateId]] = {}
    depth: Dict[StateId, int] = {}
    for root in graph.vertices:
        if root in color:
            continue
        color[root], parent[root], depth[root] = 0, None, 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in graph.neighbors(u):
                if v not in color:
                    color[v], parent[v], depth[v] = 1 - color[u], u, depth[u] + 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return BipartiteResult(bipartite=False, odd_cycle=_odd_cycle(u, v, parent, depth))
    return BipartiteResult(bipartite=True)


def _odd_cycle(u: StateId, v: StateId, parent: Mapping, depth: Mapping) -> List[StateId]:
    left, right = [u], [v]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    # left: u ... ata, right: v ... ata
    return left + list(reversed(right[:-1]))


# ----------------------------------------------------------------------
# Benzerlik (like) ilişkisi
# ----------------------------------------------------------------------
def _validate_arc(graph: Graph, arc: Sequence[StateId]) -> Arc:
    arc = Arc(str(arc[0]), str(arc[1]))
    if not graph.has_edge(arc.source, arc.target):
        raise InputError(f"Grafta böyle bir yay yok: {arc.source}->{arc.target}", details={"field": "arc"})
    return arc


def like_related(graph: Graph, a: Sequence[StateId], b: Sequence[StateId]) -> bool:
    """
    ST 𝔏 PQ ⟺ δ(S,P)+1 = δ(T,Q)+1 = δ(S,Q) = δ(T,P).

    Raises:
        InputError: Yaylardan biri grafta yoksa
        PreconditionError: Graf bağlı değilse
    """
    a, b = _validate_arc(graph, a), _validate_arc(graph, b)
    if not is_connected(graph):
        raise PreconditionError("Benzerlik ilişkisi bağlı bir graf gerektirir",
                                details={"components": list(component_witness(graph))})
    table = distances(graph)
    s, t, p, q = a.source, a.target, b.source, b.target
    return table.d(s, p) + 1 == table.d(t, q) + 1 == table.d(s, q) == table.d(t, p)


def _like_matrix(graph: Graph) -> Tuple[List[Arc], np.ndarray]:
    """
    Tüm yay çiftleri için ilişki matrisi. Farklı bileşenlerdeki yaylar
    hiçbir zaman ilişkili sayılmaz.
    """
    arcs = graph.arcs()
    table = distances(graph).matrix
    src = np.array([graph.index(a.source) for a in arcs], dtype=int)
    tgt = np.array([graph.index(a.target) for a in arcs], dtype=int)
    sp = table[np.ix_(src, src)]
    tq = table[np.ix_(tgt, tgt)]
    sq = table[np.ix_(src, tgt)]
    tp = table[np.ix_(tgt, src)]
    related = np.isfinite(sp) & (sp == tq) & (sq == sp + 1) & (tp == sp + 1)
    return arcs, related


@dataclass(frozen=True)
class LikePartition:
    """
    Benzerlik ilişkisinin denklik sınıfları ⟨ST⟩. Sınıflar en küçük
    yaylarına göre sıralıdır; sınıf indisi bu sıradır.
    """
    classes: Tuple[Tuple[Arc, ...], ...]
    class_of: Mapping[Arc, int]

    def class_index(self, arc: Sequence[StateId]) -> int:
        return self.class_of[Arc(*arc)]


@dataclass(frozen=True)
class NonTransitiveTriple:
    """a𝔏b, b𝔏c ama a𝔏c değil."""
    a: Arc
    b: Arc
    c: Arc

    def as_list(self) -> List[List[StateId]]:
        return [list(self.a), list(self.b), list(self.c)]


def _partition(graph: Graph) -> Union[LikePartition, NonTransitiveTriple]:
    arcs, related = _like_matrix(graph)
    union_find = UnionFind(range(len(arcs)))
    rows, cols = np.nonzero(related)
    for i, j in zip(rows.tolist(), cols.tolist()):
        union_find.union(i, j)
    groups = [sorted(group) for group in union_find.to_sets()]
    transitive = all(related[np.ix_(group, group)].all() for group in groups)
    if not transitive:
        # Sözlük sırasında en küçük ihlal eden üçlü
        for i in range(len(arcs)):
            for j in np.flatnonzero(related[i]).tolist():
                bad = related[j] & ~related[i]
                if bad.any():
                    k = int(np.argmax(bad))
                    logger.debug(f"Benzerlik ilişkisi geçişli değil: {arcs[i]}, {arcs[j]}, {arcs[k]}")
                    return NonTransitiveTriple(arcs[i], arcs[j], arcs[k])
    # Yaylar sıralı olduğundan her grubun ilk elemanı en küçük yaydır
    groups.sort(key=lambda group: group[0])
    classes = tuple(tuple(arcs[i] for i in group) for group in groups)
    class_of = {arc: k for k, cls in enumerate(classes) for arc in cls}
    logger.debug(f"Benzerlik sınıfları: {len(classes)} sınıf, {len(arcs)} yay")
    return LikePartition(classes, class_of)


def like_partition(graph: Graph) -> Union[LikePartition, NonTransitiveTriple]:
    """
    Benzerlik ilişkisini denklik sınıflarına ayırır.

    Args:
        graph: Bağlı ve iki parçalı graf

    Returns:
        LikePartition ya da geçişlilik bozulmuşsa NonTransitiveTriple

    Raises:
        PreconditionError: Graf bağlı değilse ya da iki parçalı değilse
    """
    witness = component_witness(graph)
    if witness is not None:
        raise PreconditionError("like_partition bağlı bir graf gerektirir", details={"components": list(witness)})
    bipartite = is_bipartite(graph)
    if not bipartite.bipartite:
        raise PreconditionError("like_partition iki parçalı bir graf gerektirir",
                                details={"oddCycle": bipartite.odd_cycle})
    return _partition(graph)


class MediaticReport(ReportModel):
    """[G1]-[G3] sonuçları ve tanıkları."""
    is_mediatic: bool
    g1: bool
    g2: bool
    g3: bool
    components: Optional[List[StateId]] = None
    odd_cycle: Optional[List[StateId]] = None
    non_transitive: Optional[List[List[StateId]]] = None


@lru_cache(maxsize=64)
def is_mediatic(graph: Graph) -> MediaticReport:
    """
    Grafın mediatik olup olmadığını belirler. Üç bayrak da her zaman
    hesaplanır; biri başarısız olsa da diğerleri değerlendirilir.
    """
    witness = component_witness(graph)
    bipartite = is_bipartite(graph)
    partition = _partition(graph)
    g1, g2 = witness is None, bipartite.bipartite
    g3 = isinstance(partition, LikePartition)
    report = MediaticReport(
        is_mediatic=g1 and g2 and g3,
        g1=g1,
        g2=g2,
        g3=g3,
        components=list(witness) if witness else None,
        odd_cycle=bipartite.odd_cycle,
        non_transitive=None if g3 else partition.as_list(),
    )
    logger.info(f"Mediatik graf kontrolü: {graph!r} -> g1={g1}, g2={g2}, g3={g3}")
    return report


# ----------------------------------------------------------------------
# Devreler
# ----------------------------------------------------------------------
def canonical_circuit(cycle: Sequence[StateId]) -> Circuit:
    """Tüm döndürme ve yansımalar içinde sözlük sırasında en küçük gösterim."""
    cycle = list(cycle)
    variants = []
    for seq in (cycle, cycle[::-1]):
        for i in range(len(seq)):
            variants.append(tuple(seq[i:] + seq[:i]))
    return min(variants)


def circuits_upto(graph: Graph, max_len: int, settings: Optional[MediaKitSettings] = None) -> List[Circuit]:
    """
    Uzunluğu en fazla max_len olan tüm devreler, her biri bir kez ve kanonik
    biçimde (uzunluk, sonra sözlük sırası).

    Raises:
        InputError: max_len < 3 ise
        BudgetExceededError: Devre sayısı bütçeyi aşarsa
    """
    if max_len < 3:
        raise InputError(f"max_len en az 3 olmalı: {max_len}", details={"field": "maxLen"})
    budget = resolve_settings(settings).max_enum
    found = set()
    for cycle in nx.simple_cycles(graph.to_networkx(), length_bound=max_len):
        if len(cycle) < 3:
            continue
        found.add(canonical_circuit(cycle))
        if len(found) > budget:
            raise BudgetExceededError(f"Devre sayımı bütçeyi aştı ({budget})", details={"budget": budget})
    logger.debug(f"{len(found)} devre bulundu (maxLen={max_len})")
    return sorted(found, key=lambda c: (len(c), c))


def _validate_circuit(graph: Graph, circuit: Sequence[StateId]) -> Circuit:
    circuit = tuple(str(v) for v in circuit)
    ok = (len(circuit) >= 3 and len(set(circuit)) == len(circuit)
          and all(v in graph.vertices for v in circuit)
          and all(graph.has_edge(circuit[i], circuit[(i + 1) % len(circuit)]) for i in range(len(circuit))))
    if not ok:
        raise PreconditionError(f"Verilen dizi grafın bir devresi değil: {list(circuit)}",
                                details={"circuit": list(circuit)})
    return circuit


def is_minimal_circuit(graph: Graph, circuit: Sequence[StateId]) -> bool:
    """Devrenin her iki tepesi arasındaki en kısa yollardan biri devrenin bir parçası mı."""
    circuit = _validate_circuit(graph, circuit)
    table = distances(graph)
    m = len(circuit)
    for i in range(m):
        for j in range(i + 1, m):
            if min(j - i, m - (j - i)) != table.d(circuit[i], circuit[j]):
                return False
    return True


def is_isometric_subgraph_of_hypercube(vertex_bitsets: Iterable[int]) -> bool:
    """
    Hiperküp tepelerinin (bit kümeleri) indüklediği alt grafta mesafeler
    Hamming mesafelerine eşit mi.
    """
    members = sorted(set(vertex_bitsets))
    if len(members) < 2:
        return True
    graph = Graph([str(m) for m in members],
                  [(str(a), str(b)) for i, a in enumerate(members) for b in members[i + 1:]
                   if bin(a ^ b).count("1") == 1])
    table = distances(graph)
    return all(table.d(str(a), str(b)) == bin(a ^ b).count("1")
               for i, a in enumerate(members) for b in members[i + 1:])
