"""
MedyaKiti İzomorfizma Modülü
----------------------------
Graf izomorfizması, ortam izomorfizması ve ikisini bağlayan kaldırma işlemi.

Graf araması küçük graflar içindir: tepeler sözlük sırasında atanır, adaylar
sözlük sırasında denenir; derece ve mesafe profili ile budanır. Bulunan ilk
eşleme bu nedenle sözlük sırasında en küçük eşlemedir. Her sonuç
döndürülmeden önce doğrulanır.
"""

from typing import Dict, List, Mapping, Optional, Tuple

import networkx as nx
import numpy as np

from core.errors import BudgetExceededError, InternalContradictionError, PreconditionError
from core.token_system import ReportModel, StateId, Token, TokenId, TokenSystem
from convert.bijection import adjacency_graph, path_to_message, require_medium
from graphs.graph import Graph, distances
from utils.config import ENV_MAX_ISO_VERTICES, MediaKitSettings, resolve_settings
from utils.logging_config import get_logger

logger = get_logger(__name__)


class GraphIso(ReportModel):
    """{P,Q} ∈ E ⟺ {φ(P),φ(Q)} ∈ E′ olan tepe eşlemesi."""
    phi: Dict[StateId, StateId]


class MediaIso(ReportModel):
    """Sτ = V ⟺ α(S)β(τ) = α(V) olan (α, β) ikilisi."""
    alpha: Dict[StateId, StateId]
    beta: Dict[TokenId, TokenId]


def _is_graph_iso(g: Graph, h: Graph, phi: Mapping[StateId, StateId]) -> bool:
    if sorted(phi) != list(g.vertices) or sorted(phi.values()) != list(h.vertices):
        return False
    image = {tuple(sorted((phi[u], phi[v]))) for u, v in g.edges}
    return image == set(h.edges)


def _profiles(graph: Graph) -> Dict[StateId, Tuple[float, ...]]:
    table = distances(graph)
    return {v: tuple(np.sort(table.row(v)).tolist()) for v in graph.vertices}


def find_graph_iso(g: Graph, h: Graph, settings: Optional[MediaKitSettings] = None) -> Optional[GraphIso]:
    """
    İki graf arasında izomorfizma arar.

    Args:
        g: İlk graf
        h: İkinci graf
        settings: İsteğe bağlı ayarlar (tepe sınırı)

    Returns:
        GraphIso ya da graflar izomorf değilse None

    Raises:
        BudgetExceededError: Tepe sayısı arama sınırını aşarsa
        InternalContradictionError: Bulunan eşleme doğrulanamazsa
    """
    settings = resolve_settings(settings)
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return None
    if len(g.vertices) > settings.max_iso_vertices:
        raise BudgetExceededError(
            f"İzomorfizma araması {settings.max_iso_vertices} tepe ile sınırlı ({ENV_MAX_ISO_VERTICES})",
            details={"vertices": len(g.vertices), "limit": settings.max_iso_vertices})
    if not nx.faster_could_be_isomorphic(g.to_networkx(), h.to_networkx()):
        logger.debug("Derece dizileri farklı, izomorfizma yok")
        return None

    dg, dh = distances(g).matrix, distances(h).matrix
    pg, ph = _profiles(g), _profiles(h)
    order = list(g.vertices)
    phi: Dict[StateId, StateId] = {}
    used = set()
    branches = 0

    def extend(depth: int) -> bool:
        nonlocal branches
        if depth == len(order):
            return True
        v = order[depth]
        for candidate in h.vertices:
            if candidate in used or ph[candidate] != pg[v]:
                continue
            branches += 1
            iv, ic = g.index(v), h.index(candidate)
            if any(dg[iv, g.index(u)] != dh[ic, h.index(phi[u])] for u in order[:depth]):
                continue
            phi[v] = candidate
            used.add(candidate)
            if extend(depth + 1):
                return True
            del phi[v]
            used.discard(candidate)
        return False

    found = extend(0)
    logger.debug(f"İzomorfizma araması: {branches} dal, bulundu={found}")
    if not found:
        return None
    if not _is_graph_iso(g, h, phi):
        raise InternalContradictionError("Bulunan eşleme bir graf izomorfizması değil", details={"phi": phi})
    return GraphIso(phi=dict(phi))


def token_image(phi: GraphIso, target: TokenSystem, source_state: StateId, target_state: StateId) -> TokenId:
    """φ(S)'yi φ(T)'ye taşıyan tek token: β(τ) bir komşu çift üzerinden yoklanır."""
    return path_to_message(target, [phi.phi[source_state], phi.phi[target_state]])[0]


def lift_to_media_iso(phi: GraphIso, first: TokenSystem, second: TokenSystem,
                      settings: Optional[MediaKitSettings] = None) -> MediaIso:
    """
    Graf izomorfizmasını ortam izomorfizmasına kaldırır.

    Args:
        phi: İki ortamın grafları arasındaki izomorfizma
        first: İlk ortam
        second: İkinci ortam

    Returns:
        MediaIso: α = φ ve her token için yoklanan β

    Raises:
        PreconditionError: Girdiler ortam değilse ya da φ izomorfizma değilse
        InternalContradictionError: (α, β) doğrulanamazsa
    """
    require_medium(first, "lift_to_media_iso", settings)
    require_medium(second, "lift_to_media_iso", settings)
    if not _is_graph_iso(adjacency_graph(first), adjacency_graph(second), phi.phi):
        raise PreconditionError("φ, ortamların grafları arasında bir izomorfizma değil", details=phi.to_payload())

    beta = {}
    for token in first.tokens.values():
        s, t = min(token.moves)
        beta[token.id] = token_image(phi, second, s, t)

    if sorted(beta.values()) != sorted(second.token_ids):
        raise InternalContradictionError("β tokenlar arasında bir eşleme değil", details={"beta": beta})
    for token in first.tokens.values():
        image = second.token(beta[token.id])
        for state in first.states:
            if phi.phi[token.apply(state)] != image.apply(phi.phi[state]):
                raise InternalContradictionError(
                    f"(φ, β) eşitliği {state} durumunda {token.id} için sağlanmıyor",
                    details={"state": state, "token": token.id})
    return MediaIso(alpha=dict(phi.phi), beta=beta)


def media_isomorphic(first: TokenSystem, second: TokenSystem,
                     settings: Optional[MediaKitSettings] = None) -> Optional[MediaIso]:
    """
    İki ortam izomorf mu: graflarının izomorfizması aranır ve kaldırılır.

    Returns:
        MediaIso ya da graflar izomorf değilse None

    Raises:
        PreconditionError: Girdilerden biri ortam değilse
    """
    require_medium(first, "media_isomorphic", settings)
    require_medium(second, "media_isomorphic", settings)
    phi = find_graph_iso(adjacency_graph(first), adjacency_graph(second), settings)
    if phi is None:
        logger.info("Ortamların grafları izomorf değil")
        return None
    return lift_to_media_iso(phi, first, second, settings)


def relabel_graph(graph: Graph, mapping: Mapping[StateId, StateId]) -> Graph:
    return Graph([mapping[v] for v in graph.vertices], [(mapping[u], mapping[v]) for u, v in graph.edges])


def relabel_medium(system: TokenSystem, state_map: Mapping[StateId, StateId],
                   token_map: Optional[Mapping[TokenId, TokenId]] = None) -> TokenSystem:
    """Durum ve token adlarını değiştirilmiş yeni bir token sistemi."""
    token_map = token_map or {t: t for t in system.token_ids}
    tokens: List[Token] = [
        Token(token_map[token.id], frozenset((state_map[s], state_map[v]) for s, v in token.moves))
        for token in system.tokens.values()
    ]
    return TokenSystem([state_map[s] for s in system.states], tokens)
