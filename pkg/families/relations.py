"""
MedyaKiti İlişki Aileleri Modülü
--------------------------------
Küçük zemin kümeleri üzerinde kısmi sıralar, aralık sıraları, yarı sıralar
ve iki sıralar (biorder) ailelerini üretir; ailenin iyi derecelenmiş
(well-graded) olup olmadığını denetler ve iyi derecelenmiş aileleri ortama
dönüştürür.

İlişkiler n² bitlik maskeler olarak sayılır: (i, j) çifti i·n + j bitidir.
Elemanlar a, b, c, d olarak adlandırılır; "ab" anahtarı (a, b) çiftidir.
"""

from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from tqdm import tqdm

from core.errors import InputError, PreconditionError
from core.token_system import ReportModel, Token, TokenSystem
from graphs.graph import Graph
from utils.config import FAMILY_HARD_CAP, MediaKitSettings, resolve_settings
from utils.logging_config import get_logger

logger = get_logger(__name__)

ELEMENT_NAMES = "abcd"
KINDS = ("partial-order", "interval-order", "semiorder", "biorder")

Pair = Tuple[str, str]


@dataclass(frozen=True)
class Relation:
    """Bir zemin kümesi üzerindeki ikili ilişki."""
    ground: Tuple[str, ...]
    pairs: FrozenSet[Pair]

    def keys(self) -> List[str]:
        return sorted(a + b for a, b in self.pairs)

    def name(self) -> str:
        return "{" + ",".join(self.keys()) + "}"


@dataclass(frozen=True)
class RelationFamily:
    """Ortak zeminli ilişkiler kümesi; üyeler (boyut, ad) sırasındadır."""
    kind: str
    ground: Tuple[str, ...]
    members: Tuple[Relation, ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "ground": list(self.ground), "members": [m.keys() for m in self.members]}

    @classmethod
    def from_dict(cls, data: Mapping) -> "RelationFamily":
        """
        Aile JSON biçiminden okur.

        Raises:
            InputError: Zemin, üye ya da çift anahtarları geçersizse
        """
        if not isinstance(data, Mapping):
            raise InputError("Aile bir JSON nesnesi olmalı", details={"field": "<root>"})
        ground = data.get("ground")
        if not isinstance(ground, list) or not ground or any(not isinstance(g, str) or len(g) != 1 for g in ground):
            raise InputError("'ground' tek karakterli eleman adlarından oluşan bir liste olmalı",
                             details={"field": "ground"})
        if len(set(ground)) != len(ground):
            raise InputError("'ground' elemanları benzersiz olmalı", details={"field": "ground"})
        members = data.get("members")
        if not isinstance(members, list):
            raise InputError("'members' alanı eksik ya da liste değil", details={"field": "members"})
        relations = []
        for i, member in enumerate(members):
            if not isinstance(member, list):
                raise InputError(f"members[{i}] bir liste olmalı", details={"field": f"members[{i}]"})
            pairs = set()
            for key in member:
                if not isinstance(key, str) or len(key) != 2 or key[0] not in ground or key[1] not in ground:
                    raise InputError(f"members[{i}] geçersiz çift anahtarı içeriyor: {key!r}",
                                     details={"field": f"members[{i}]"})
                pairs.add((key[0], key[1]))
            relations.append(Relation(tuple(ground), frozenset(pairs)))
        return make_family(str(data.get("kind", "custom")), ground, relations)


def make_family(kind: str, ground: Sequence[str], members: Sequence[Relation]) -> RelationFamily:
    unique = {m.pairs: m for m in members}.values()
    ordered = tuple(sorted(unique, key=lambda m: (len(m.pairs), m.keys())))
    return RelationFamily(kind, tuple(ground), ordered)


# ----------------------------------------------------------------------
# Yüklemler (bit maskeleri üzerinde)
# ----------------------------------------------------------------------
def _has(mask: int, n: int, i: int, j: int) -> bool:
    return bool(mask >> (i * n + j) & 1)


def is_irreflexive(mask: int, n: int) -> bool:
    return not any(_has(mask, n, i, i) for i in range(n))


def is_transitive(mask: int, n: int) -> bool:
    return all(_has(mask, n, i, k)
               for i, j, k in product(range(n), repeat=3)
               if _has(mask, n, i, j) and _has(mask, n, j, k))


def is_ferrers(mask: int, n: int) -> bool:
    """aKb ∧ cKd ⟹ aKd ∨ cKb"""
    return all(_has(mask, n, a, d) or _has(mask, n, c, b)
               for a, b, c, d in product(range(n), repeat=4)
               if _has(mask, n, a, b) and _has(mask, n, c, d))


def is_semitransitive(mask: int, n: int) -> bool:
    """aKb ∧ bKc ⟹ aKd ∨ dKc"""
    return all(_has(mask, n, a, d) or _has(mask, n, d, c)
               for a, b, c, d in product(range(n), repeat=4)
               if _has(mask, n, a, b) and _has(mask, n, b, c))


PREDICATES: Dict[str, Callable[[int, int], bool]] = {
    "partial-order": lambda m, n: is_irreflexive(m, n) and is_transitive(m, n),
    "biorder": is_ferrers,
    "interval-order": lambda m, n: is_irreflexive(m, n) and is_ferrers(m, n),
    "semiorder": lambda m, n: is_irreflexive(m, n) and is_ferrers(m, n) and is_semitransitive(m, n),
}


def _mask_to_relation(mask: int, ground: Tuple[str, ...]) -> Relation:
    n = len(ground)
    pairs = frozenset((ground[i], ground[j]) for i in range(n) for j in range(n) if _has(mask, n, i, j))
    return Relation(ground, pairs)


def enumerate_family(kind: str, n: int, settings: Optional[MediaKitSettings] = None) -> RelationFamily:
    """
    Verilen türdeki tüm ilişkileri, 2^(n²) adayı süzerek üretir.

    Args:
        kind: partial-order, interval-order, semiorder ya da biorder
        n: Zemin büyüklüğü (1..4)

    Returns:
        RelationFamily: Yüklemi sağlayan tüm ilişkiler

    Raises:
        InputError: Tür bilinmiyorsa ya da n aralık dışındaysa
    """
    settings = resolve_settings(settings)
    if kind not in PREDICATES:
        raise InputError(f"Bilinmeyen aile türü: {kind} (geçerli: {', '.join(KINDS)})", details={"field": "kind"})
    limit = min(settings.max_family_n, FAMILY_HARD_CAP)
    if not 1 <= n <= limit:
        raise InputError(f"n 1 ile {limit} arasında olmalı: {n}", details={"field": "n"})

    ground = tuple(ELEMENT_NAMES[:n])
    predicate = PREDICATES[kind]
    candidates = range(1 << (n * n))
    members = [
        _mask_to_relation(mask, ground)
        for mask in tqdm(candidates, desc=f"{kind} n={n}", disable=not settings.show_progress)
        if predicate(mask, n)
    ]
    logger.info(f"{kind} ailesi (n={n}): {len(members)} üye")
    return make_family(kind, ground, members)


# ----------------------------------------------------------------------
# İyi derecelenme
# ----------------------------------------------------------------------
def _flip_neighbors(family: RelationFamily) -> Dict[FrozenSet[Pair], List[Pair]]:
    """Her üye için, tek çifti değiştirildiğinde yine ailede kalan çiftler."""
    by_pairs = {m.pairs for m in family.members}
    union = sorted(frozenset().union(*by_pairs)) if by_pairs else []
    return {m.pairs: [p for p in union if (m.pairs ^ {p}) in by_pairs] for m in family.members}


def family_graph(family: RelationFamily) -> Graph:
    """Simetrik farkı tek çift olan üyeler komşudur."""
    names = {m.pairs: m.name() for m in family.members}
    edges = [(names[pairs], names[pairs | {p}])
             for pairs, flips in _flip_neighbors(family).items() for p in flips if p not in pairs]
    return Graph([m.name() for m in family.members], edges)


class WellGradedResult(ReportModel):
    wellgraded: bool
    witness: Optional[List[str]] = None
    graph_distance: Optional[int] = None
    symmetric_difference: Optional[int] = None


def _member_masks(family: RelationFamily) -> Tuple[np.ndarray, Dict[Pair, int]]:
    union = sorted(frozenset().union(*(m.pairs for m in family.members)))
    bit_of = {p: 1 << k for k, p in enumerate(union)}
    dtype = np.int64 if len(union) < 63 else object
    masks = np.array([sum(bit_of[p] for p in m.pairs) for m in family.members], dtype=dtype)
    return masks, bit_of


def is_wellgraded(family: RelationFamily) -> WellGradedResult:
    """
    Her K, L üye çifti için aile grafındaki mesafe |K△L| mi.

    Yerel ölçüt kullanılır: K ≠ L ise K△L içinde, K'den değiştirildiğinde
    yine ailede kalan bir çift bulunmalıdır. Bu ölçüt mesafe koşuluna denktir.
    Tanık, ölçütün ilk bozulduğu üyeden çıkan çifttir; mesafesi aile grafında
    ölçülür (bağlı değilse None).
    """
    members = family.members
    if len(members) < 2:
        return WellGradedResult(wellgraded=True)
    masks, bit_of = _member_masks(family)
    flips = _flip_neighbors(family)
    for i, member in enumerate(members):
        toward = sum(bit_of[p] for p in flips[member.pairs])
        diff = masks ^ masks[i]
        stuck = np.flatnonzero((diff != 0) & ((diff & toward) == 0))
        if stuck.size == 0:
            continue
        j = int(stuck[0])
        first, second = members[min(i, j)], members[max(i, j)]
        try:
            found = nx.shortest_path_length(family_graph(family).to_networkx(), first.name(), second.name())
        except nx.NetworkXNoPath:
            found = None
        logger.debug(f"İyi derecelenme ihlali: {first.name()} - {second.name()}")
        return WellGradedResult(wellgraded=False, witness=[first.name(), second.name()],
                                graph_distance=found, symmetric_difference=len(first.pairs ^ second.pairs))
    return WellGradedResult(wellgraded=True)


def add_token_id(pair: Pair) -> str:
    return f"add_{pair[0]}{pair[1]}"


def remove_token_id(pair: Pair) -> str:
    return f"remove_{pair[0]}{pair[1]}"


def family_to_medium(family: RelationFamily) -> TokenSystem:
    """
    İyi derecelenmiş aileyi ortama dönüştürür: her değişken p çifti için
    add_p (K ↦ K∪{p}, sonuç ailedeyse) ve remove_p tokenları.

    Raises:
        PreconditionError: Aile iyi derecelenmemişse ya da ikiden az üyesi varsa
    """
    if len(family.members) < 2:
        raise PreconditionError("family_to_medium en az iki üyeli bir aile gerektirir",
                                details={"members": len(family.members)})
    graded = is_wellgraded(family)
    if not graded.wellgraded:
        raise PreconditionError("Aile iyi derecelenmiş değil", details=graded.to_payload())

    by_pairs = {m.pairs: m for m in family.members}
    union = frozenset().union(*(m.pairs for m in family.members))
    common = frozenset.intersection(*(m.pairs for m in family.members))
    tokens = []
    for pair in sorted(union - common):
        moves = {(m.name(), by_pairs[m.pairs | {pair}].name())
                 for m in family.members if pair not in m.pairs and (m.pairs | {pair}) in by_pairs}
        tokens.append(Token(add_token_id(pair), frozenset(moves)))
        tokens.append(Token(remove_token_id(pair), frozenset((v, s) for s, v in moves)))
    system = TokenSystem([m.name() for m in family.members], tokens)
    logger.info(f"Aileden ortam üretildi: {len(family.members)} durum, {len(tokens)} token")
    return system
