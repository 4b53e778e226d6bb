"""
DOT Dışa Aktarma Modülü
-----------------------
Grafı Graphviz DOT metnine çevirir. Graf mediatikse her kenar, küçük uçtan
büyük uca giden yayının benzerlik sınıfı indisiyle etiketlenir ve sınıfa göre
sabit bir paletten renklendirilir.
"""

from typing import List

from graphs.graph import Graph, LikePartition, is_mediatic, like_partition
from utils.logging_config import get_logger

logger = get_logger(__name__)

PALETTE = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
]


def to_dot(graph: Graph, name: str = "G") -> str:
    """
    Grafı yönsüz DOT metni olarak döndürür.

    Args:
        graph: Graf
        name: DOT graf adı

    Returns:
        str: Belirlenimci DOT çıktısı (sıralı tepeler ve kenarlar)
    """
    partition = like_partition(graph) if is_mediatic(graph).is_mediatic else None
    lines: List[str] = [f"graph {name} {{"]

    for vertex in graph.vertices:
        lines.append(f'  "{vertex}";')

    for u, v in sorted(graph.edges):
        if isinstance(partition, LikePartition):
            k = partition.class_index((u, v))
            lines.append(f'  "{u}" -- "{v}" [label="{k}", color="{PALETTE[k % len(PALETTE)]}"];')
        else:
            lines.append(f'  "{u}" -- "{v}";')

    lines.append("}")
    logger.debug(f"DOT çıktısı üretildi: {graph!r}, sınıflı={partition is not None}")
    return "\n".join(lines) + "\n"
