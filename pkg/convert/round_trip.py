"""
Gidiş-Dönüş Doğrulama Modülü
----------------------------
Graf → ortam → graf ve ortam → graf → ortam dönüşümlerinin yapıyı koruduğunu
doğrular. Ortam yönünde tokenlar adlarıyla değil eylem tablolarıyla eşlenir.
"""

from typing import Dict, List, Optional, Union

from pydantic import Field

from core.token_system import ReportModel, TokenSystem
from convert.bijection import graph_to_medium, medium_to_graph
from graphs.graph import Graph
from utils.config import MediaKitSettings
from utils.logging_config import get_logger

logger = get_logger(__name__)


class RoundTripReport(ReportModel):
    ok: bool
    direction: str
    missing_edges: List[List[str]] = Field(default_factory=list)
    extra_edges: List[List[str]] = Field(default_factory=list)
    unmatched_tokens: List[str] = Field(default_factory=list)
    token_bijection: Dict[str, str] = Field(default_factory=dict)


def verify_round_trip(value: Union[Graph, TokenSystem],
                      settings: Optional[MediaKitSettings] = None) -> RoundTripReport:
    """
    Gidiş-dönüşü doğrular ve fark raporu döndürür.

    Args:
        value: Mediatik graf ya da ortam

    Returns:
        RoundTripReport: ok bayrağı ve farklar

    Raises:
        PreconditionError: Graf mediatik değilse ya da sistem ortam değilse
    """
    if isinstance(value, Graph):
        back = medium_to_graph(graph_to_medium(value), settings=settings)
        missing = sorted(value.edges - back.edges)
        extra = sorted(back.edges - value.edges)
        ok = back.vertices == value.vertices and not missing and not extra
        logger.info(f"Graf gidiş-dönüşü: ok={ok}")
        return RoundTripReport(ok=ok, direction="graph", missing_edges=[list(e) for e in missing],
                               extra_edges=[list(e) for e in extra])

    induced = graph_to_medium(medium_to_graph(value, settings=settings))
    by_moves = {token.moves: token.id for token in induced.tokens.values()}
    bijection: Dict[str, str] = {}
    unmatched: List[str] = []
    for token in value.tokens.values():
        if token.moves in by_moves:
            bijection[token.id] = by_moves[token.moves]
        else:
            unmatched.append(token.id)
    unmatched += sorted(set(induced.token_ids) - set(bijection.values()))
    ok = induced.states == value.states and not unmatched and len(bijection) == len(induced.tokens)
    logger.info(f"Ortam gidiş-dönüşü: ok={ok}, eşlenen token={len(bijection)}")
    return RoundTripReport(ok=ok, direction="medium", unmatched_tokens=unmatched, token_bijection=bijection)
