"""
MedyaKiti Dönüşüm Modülü
------------------------
Ortam (medium) ile mediatik graf arasındaki eşlemenin iki yönü:

  - medium_to_graph: durumlar tepe, bir tokenın taşıdığı her çift bir kenar olur.
  - graph_to_medium: her benzerlik sınıfı ⟨ST⟩ bir token olur; token, sınıftaki
    her PQ yayı için P'yi Q'ya taşır, diğer durumları sabit bırakır.

Ayrıca en kısa yollardan özlü (concise) mesaj üretimi burada yer alır.
"""

from collections import deque
from functools import lru_cache
from typing import Dict, List, Optional, Sequence

from core.errors import InputError, InternalContradictionError, MalformedSystemError, PreconditionError
from core.token_system import Message, StateId, Token, TokenSystem
from graphs.graph import Graph, LikePartition, is_mediatic, like_partition
from utils.config import MediaKitSettings
from utils.logging_config import get_logger

logger = get_logger(__name__)


@lru_cache(maxsize=64)
def adjacency_graph(system: TokenSystem) -> Graph:
    """Token sisteminin komşuluk grafı; ortam olup olmadığına bakılmaz."""
    edges = {tuple(sorted(move)) for token in system.tokens.values() for move in token.moves}
    return Graph(system.states, sorted(edges))


def require_medium(system: TokenSystem, operation: str, settings: Optional[MediaKitSettings] = None) -> None:
    # Döngüsel içe aktarmayı önlemek için geç yükleme
    from medium.axioms import check_medium, is_medium

    if not is_medium(system):
        report = check_medium(system, settings=settings)
        raise PreconditionError(f"{operation} bir ortam (medium) gerektirir", details=report.to_payload())


def medium_to_graph(system: TokenSystem, allow_non_medium: bool = False,
                    settings: Optional[MediaKitSettings] = None) -> Graph:
    """
    Ortamın graf gösterimini üretir: {S,T} ∈ E ⟺ bir token S'yi T'ye taşır.

    Args:
        system: Token sistemi
        allow_non_medium: True ise ortam kontrolü yapılmadan komşuluk grafı döner (tanı amaçlı)
        settings: İsteğe bağlı ayarlar

    Returns:
        Graph: Durumlarla aynı tepe kümesine sahip graf

    Raises:
        PreconditionError: Sistem bir ortam değilse (allow_non_medium False iken)
    """
    if not allow_non_medium:
        require_medium(system, "medium_to_graph", settings)
    graph = adjacency_graph(system)
    logger.info(f"Ortamdan graf üretildi: {graph!r}")
    return graph


def induced_token_id(index: int) -> str:
    return f"t{index}"


def graph_to_medium(graph: Graph) -> TokenSystem:
    """
    Mediatik grafın indüklediği ortamı üretir.

    Tokenlar "t<k>" olarak adlandırılır; k, sınıfın en küçük yayına göre
    sınıf sırasıdır.

    Args:
        graph: Mediatik graf

    Returns:
        TokenSystem: Her benzerlik sınıfı için bir token içeren ortam

    Raises:
        PreconditionError: Graf mediatik değilse (MediaticReport ayrıntılarda)
        InternalContradictionError: Bir sınıfta aynı kaynaklı iki yay varsa
    """
    report = is_mediatic(graph)
    if not report.is_mediatic:
        raise PreconditionError("graph_to_medium mediatik bir graf gerektirir", details=report.to_payload())
    partition = like_partition(graph)
    assert isinstance(partition, LikePartition)

    tokens = []
    for k, arcs in enumerate(partition.classes):
        sources = [arc.source for arc in arcs]
        if len(set(sources)) != len(sources):
            raise InternalContradictionError(
                f"Benzerlik sınıfı {k} aynı kaynaklı iki yay içeriyor",
                details={"class": [list(a) for a in arcs]})
        tokens.append(Token(induced_token_id(k), frozenset(arcs)))

    system = TokenSystem(graph.vertices, tokens)
    logger.info(f"Graftan ortam üretildi: {len(graph.vertices)} durum, {len(tokens)} token")
    return system


def path_to_message(system: TokenSystem, vertices: Sequence[StateId]) -> Message:
    """
    Bir tepe yürüyüşünü token dizisine çevirir; her adımda S'yi T'ye taşıyan
    tek token seçilir.

    Raises:
        InputError: Ardışık iki tepe komşu değilse ya da yürüyüş boşsa
        MalformedSystemError: Bir adımı birden çok token gerçekleştiriyorsa
    """
    if len(vertices) < 2:
        raise InputError("Yürüyüş en az iki tepe içermeli", details={"field": "path"})
    message: List[str] = []
    for u, v in zip(vertices, vertices[1:]):
        system.require_state(u)
        candidates = [token_id for token_id, target in system.moves_from(u) if target == v]
        if not candidates:
            raise InputError(f"{u} durumundan {v} durumuna giden token yok", details={"field": "path"})
        if len(candidates) > 1:
            raise MalformedSystemError(f"{u}->{v} adımını birden çok token gerçekleştiriyor: {candidates}",
                                       details={"tokens": candidates})
        message.append(candidates[0])
    return tuple(message)


def shortest_path(graph: Graph, source: StateId, target: StateId) -> Optional[List[StateId]]:
    """Komşuları sözlük sırasında gezen BFS ile en kısa yol; erişilemiyorsa None."""
    parent: Dict[StateId, Optional[StateId]] = {source: None}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u == target:
            break
        for v in graph.neighbors(u):
            if v not in parent:
                parent[v] = u
                queue.append(v)
    if target not in parent:
        return None
    path = [target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def concise_message(system: TokenSystem, source: StateId, target: StateId,
                    settings: Optional[MediaKitSettings] = None) -> Message:
    """
    s'den t'ye özlü bir mesaj döndürür (ortamın grafındaki en kısa yol).

    Raises:
        InputError: s = t ise ya da durumlar bilinmiyorsa
        PreconditionError: Sistem bir ortam değilse
    """
    system.require_state(source)
    system.require_state(target)
    if source == target:
        raise InputError("concise_message için s ve t farklı olmalı", details={"field": "target"})
    require_medium(system, "concise_message", settings)
    path = shortest_path(adjacency_graph(system), source, target)
    if path is None:
        raise InternalContradictionError(f"Ortamda {source} ile {target} bağlı değil")
    return path_to_message(system, path)
