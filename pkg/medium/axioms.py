"""
MedyaKiti Ortam Aksiyomları Modülü
----------------------------------
Bir token sisteminin ortam (medium) olup olmadığına karar verir.

Karar graf yoluyla verilir:
  1. Her tokenın tek bir tersi var mı ([M1])
  2. Komşuluk grafı kurulur
  3. Graf mediatik mi ([G1]-[G3])
  4. Grafın indüklediği ortamın tokenları, sistemin tokenlarıyla eylem
     tablosu üzerinden birebir eşleşiyor mu

Sistem ortam değilse, hangi aksiyomun bozulduğu sınırlı mesaj sayımıyla
tanıklarıyla birlikte bulunur. Sayım yalnızca basit mesajları (başlangıç
dışında hiçbir durumu iki kez ziyaret etmeyen) dolaşır; [Ma], [M2] ve [Mb]
için bu kısıtlama kayıpsızdır.
"""

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Set, Tuple

from pydantic import Field

from core.errors import BudgetExceededError, InputError, InternalContradictionError
from core.token_system import Message, ReportModel, StateId, TokenId, TokenSystem, is_vacuous
from convert.bijection import graph_to_medium, medium_to_graph
from graphs.graph import MediaticReport, is_mediatic
from utils.config import MediaKitSettings, resolve_settings
from utils.logging_config import get_logger

logger = get_logger(__name__)


class MessageWitness(ReportModel):
    """Bir durumdan uygulanan mesaj ve ulaştığı durum."""
    start: StateId
    message: List[TokenId]
    end: StateId


class JointWitness(ReportModel):
    """Aynı durumu üreten, birlikte tutarlı olmayan iki tutarlı mesaj."""
    state: StateId
    first: MessageWitness
    second: MessageWitness


class MediumReport(ReportModel):
    is_medium: bool
    method: str = "graph"
    max_len: Optional[int] = None
    failed_step: Optional[int] = None
    axiom_ma: bool
    ma_witness: Optional[List[StateId]] = None
    axiom_mb: bool
    mb_witness: Optional[MessageWitness] = None
    m1: bool
    m1_witness: Optional[TokenId] = None
    m2: bool
    m2_witness: Optional[List[StateId]] = None
    m3: bool
    m3_witness: Optional[MessageWitness] = None
    m4: bool
    m4_witness: Optional[JointWitness] = None
    mediatic: Optional[MediaticReport] = None
    mismatch_token: Optional[TokenId] = None
    notes: List[str] = Field(default_factory=list)


# ----------------------------------------------------------------------
# Graf yolu
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class _GraphVerdict:
    is_medium: bool
    failed_step: Optional[int] = None
    m1_witness: Optional[TokenId] = None
    mediatic: Optional[MediaticReport] = None
    mismatch_token: Optional[TokenId] = None


def missing_reverse(system: TokenSystem) -> Optional[TokenId]:
    """Tersi olmayan ya da tersi tek olmayan ilk token."""
    for token_id in system.token_ids:
        if len(system.reverse_candidates(token_id)) != 1:
            return token_id
    return None


@lru_cache(maxsize=128)
def _graph_verdict(system: TokenSystem) -> _GraphVerdict:
    witness = missing_reverse(system)
    if witness is not None:
        return _GraphVerdict(False, failed_step=1, m1_witness=witness)

    graph = medium_to_graph(system, allow_non_medium=True)
    mediatic = is_mediatic(graph)
    if not mediatic.is_mediatic:
        return _GraphVerdict(False, failed_step=3, mediatic=mediatic)

    induced = graph_to_medium(graph)
    by_moves = {token.moves: token.id for token in induced.tokens.values()}
    for token in system.tokens.values():
        if token.moves not in by_moves:
            return _GraphVerdict(False, failed_step=4, mediatic=mediatic, mismatch_token=token.id)
    if len(induced.tokens) != len(system.tokens):
        return _GraphVerdict(False, failed_step=4, mediatic=mediatic)
    return _GraphVerdict(True, mediatic=mediatic)


# ----------------------------------------------------------------------
# Sınırlı sayım
# ----------------------------------------------------------------------
@dataclass
class _AxiomTally:
    """Sayım sırasında toplanan gözlemler; tanıklar ilk bulunanlardır."""
    concise_pairs: Set[Tuple[StateId, StateId]] = field(default_factory=set)
    consistent_pairs: Set[Tuple[StateId, StateId]] = field(default_factory=set)
    mb_witness: Optional[MessageWitness] = None
    m3_witness: Optional[MessageWitness] = None
    m4_witness: Optional[JointWitness] = None
    produced_by: Dict[StateId, Dict[TokenId, MessageWitness]] = field(default_factory=dict)
    count: int = 0


class MessageExplorer:
    """
    Her durumdan adım adım etkili mesajları derinlik öncelikli sayar.

    simple=True iken bir mesaj başlangıç durumuna dönmedikçe hiçbir durumu
    ikinci kez ziyaret etmez; başlangıca dönen mesaj uzatılmaz.
    """

    def __init__(self, system: TokenSystem, max_len: int, budget: int, simple: bool = True):
        self.system = system
        self.max_len = max_len
        self.budget = budget
        self.simple = simple
        self.candidates = {t: system.reverse_candidates(t) for t in system.token_ids}
        self.tally = _AxiomTally()

    def run(self) -> _AxiomTally:
        for start in self.system.states:
            self._extend(start, start, (), frozenset({start}), frozenset(), True, True)
        logger.debug(f"Sayım tamamlandı: {self.tally.count} mesaj (maxLen={self.max_len}, simple={self.simple})")
        return self.tally

    def _extend(self, start: StateId, state: StateId, message: Message, visited: frozenset,
                used: frozenset, consistent: bool, distinct: bool) -> None:
        for token_id, target in self.system.moves_from(state):
            if self.simple and target != start and target in visited:
                continue
            self.tally.count += 1
            if self.tally.count > self.budget:
                raise BudgetExceededError(
                    f"Mesaj sayımı bütçeyi aştı ({self.budget}); MEDIA_KIT_MAX_ENUM ile artırılabilir",
                    details={"budget": self.budget, "maxLen": self.max_len})
            extended = message + (token_id,)
            now_consistent = consistent and not any(r in used or r == token_id for r in self.candidates[token_id])
            now_distinct = distinct and token_id not in used
            now_used = used | {token_id}
            self._record(start, extended, target, now_used, now_consistent, now_distinct)
            if len(extended) < self.max_len and not (self.simple and target == start):
                self._extend(start, target, extended, visited | {target}, now_used, now_consistent, now_distinct)

    def _record(self, start: StateId, message: Message, end: StateId, used: frozenset,
                consistent: bool, distinct: bool) -> None:
        tally = self.tally
        if end != start and consistent:
            tally.consistent_pairs.add((start, end))
            if distinct:
                tally.concise_pairs.add((start, end))

        vacuous = len(message) % 2 == 0 and is_vacuous(self.system, message)
        if (end == start) != vacuous and tally.m3_witness is None:
            tally.m3_witness = MessageWitness(start=start, message=list(message), end=end)
        if end == start and not vacuous and tally.mb_witness is None:
            tally.mb_witness = MessageWitness(start=start, message=list(message), end=end)

        if consistent:
            produced = tally.produced_by.setdefault(end, {})
            if tally.m4_witness is None:
                for token_id in sorted(used):
                    clash = next((r for r in self.candidates[token_id] if r in produced), None)
                    if clash is not None:
                        tally.m4_witness = JointWitness(
                            state=end, first=produced[clash],
                            second=MessageWitness(start=start, message=list(message), end=end))
                        break
            witness = MessageWitness(start=start, message=list(message), end=end)
            for token_id in used:
                produced.setdefault(token_id, witness)


def _directed_reach(system: TokenSystem) -> Dict[StateId, Dict[StateId, int]]:
    reach = {}
    for start in system.states:
        seen = {start: 0}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for _, v in system.moves_from(u):
                if v not in seen:
                    seen[v] = seen[u] + 1
                    queue.append(v)
        reach[start] = seen
    return reach


def _first_missing_pair(system: TokenSystem, found: Set[Tuple[StateId, StateId]],
                        max_len: int) -> Optional[List[StateId]]:
    # Yönlü mesafesi sınır içinde olan ya da hiç erişilemeyen sıralı çiftler
    reach = _directed_reach(system)
    for s in system.states:
        for v in system.states:
            if s == v or (s, v) in found:
                continue
            if v not in reach[s] or reach[s][v] <= max_len:
                return [s, v]
    return None


def _flags_from_tally(system: TokenSystem, tally: _AxiomTally, max_len: int) -> dict:
    ma_witness = _first_missing_pair(system, tally.concise_pairs, max_len)
    m2_witness = _first_missing_pair(system, tally.consistent_pairs, max_len)
    m1_witness = missing_reverse(system)
    return {
        "axiom_ma": ma_witness is None, "ma_witness": ma_witness,
        "axiom_mb": tally.mb_witness is None, "mb_witness": tally.mb_witness,
        "m1": m1_witness is None, "m1_witness": m1_witness,
        "m2": m2_witness is None, "m2_witness": m2_witness,
        "m3": tally.m3_witness is None, "m3_witness": tally.m3_witness,
        "m4": tally.m4_witness is None, "m4_witness": tally.m4_witness,
    }


def _reconcile(system: TokenSystem, flags: dict, max_len: int, budget: int, notes: List[str]) -> bool:
    """
    ([Ma]∧[Mb]) yanlışken [M1]-[M4] hepsi doğru görünüyorsa, basit olmayan
    mesajlar da sayılarak [M3]/[M4] için tanık aranır. Bayraklar yalnızca bir
    tanık bulunduğunda değişir.

    Returns:
        bool: Sayım bütçe içinde tamamlandığı halde tanık bulunamadıysa True
    """
    if flags["axiom_ma"] and flags["axiom_mb"]:
        return False
    if not all(flags[k] for k in ("m1", "m2", "m3", "m4")):
        return False
    try:
        tally = MessageExplorer(system, max_len, budget, simple=False).run()
    except BudgetExceededError:
        notes.append(f"[M3]/[M4] tanık araması bütçeyi aştı ({budget}); bayraklar sayıldığı gibi bırakıldı")
        logger.warning(f"{system!r}: [M3]/[M4] tanık araması bütçeyi aştı")
        return False
    if tally.m3_witness is not None:
        flags.update(m3=False, m3_witness=tally.m3_witness)
        return False
    if tally.m4_witness is not None:
        flags.update(m4=False, m4_witness=tally.m4_witness)
        return False
    return True


def check_medium(system: TokenSystem, settings: Optional[MediaKitSettings] = None) -> MediumReport:
    """
    Token sisteminin ortam olup olmadığını graf yoluyla belirler.

    Args:
        system: Token sistemi
        settings: İsteğe bağlı ayarlar (sayım bütçesi)

    Returns:
        MediumReport: isMedium ve aksiyom bazında bayraklar ile tanıklar.
        Olumsuz sonuçlar hata olarak fırlatılmaz.

    Raises:
        InternalContradictionError: Graf yolu ortam değil dediği halde [Ma]∧[Mb]
            sağlanıyorsa ya da 2·|durum| uzunluğa kadar [M1]-[M4] için tanık yoksa
    """
    verdict = _graph_verdict(system)
    if verdict.is_medium:
        logger.info(f"{system!r} bir ortamdır")
        return MediumReport(is_medium=True, axiom_ma=True, axiom_mb=True, m1=True, m2=True, m3=True, m4=True,
                            mediatic=verdict.mediatic)

    settings = resolve_settings(settings)
    max_len = len(system.states)
    notes: List[str] = []
    try:
        tally = MessageExplorer(system, max_len, settings.max_enum).run()
        flags = _flags_from_tally(system, tally, max_len)
    except BudgetExceededError:
        notes.append("Aksiyom tanıkları bulunamadı: sayım bütçesi aşıldı")
        logger.warning(f"{system!r}: aksiyom tanık araması bütçeyi aştı")
        m1_witness = missing_reverse(system)
        flags = {"axiom_ma": False, "axiom_mb": False, "m1": m1_witness is None, "m1_witness": m1_witness,
                 "m2": False, "m3": False, "m4": False}

    if flags["axiom_ma"] and flags["axiom_mb"]:
        raise InternalContradictionError(
            f"Graf yolu ortam değil diyor (adım {verdict.failed_step}) ama [Ma] ve [Mb] sağlanıyor")

    search_len = settings.default_max_len(len(system.states))
    if _reconcile(system, flags, search_len, settings.max_enum, notes):
        if search_len >= 2 * len(system.states):
            raise InternalContradictionError(
                f"[Ma]∧[Mb] yanlış ama {search_len} uzunluğa kadar [M1]-[M4] ihlali yok",
                details={key: value for key, value in flags.items() if not key.endswith("_witness")})
        notes.append(f"[M1]-[M4] ihlali {search_len} uzunluğa kadar tanıklanamadı; "
                     "MEDIA_KIT_MAX_LEN_CAP ile artırılabilir")
        logger.warning(f"{system!r}: [M1]-[M4] tanığı {search_len} uzunluğa kadar bulunamadı")

    logger.info(f"{system!r} bir ortam değil: adım {verdict.failed_step} başarısız")
    return MediumReport(is_medium=False, failed_step=verdict.failed_step, mediatic=verdict.mediatic,
                        mismatch_token=verdict.mismatch_token, notes=notes, **flags)


def check_axioms_bounded(system: TokenSystem, max_len: int,
                         settings: Optional[MediaKitSettings] = None) -> MediumReport:
    """
    Aksiyomları, uzunluğu en fazla max_len olan basit mesajları sayarak denetler.
    check_medium için bağımsız bir doğrulama yoludur. isMedium = [Ma]∧[Mb];
    [M1]-[M4] bununla uyuşmazsa ayrışma notlara yazılır.

    Args:
        system: Token sistemi
        max_len: Mesaj uzunluğu sınırı (en az 2)
        settings: İsteğe bağlı ayarlar (sayım bütçesi)

    Returns:
        MediumReport: method="bounded"

    Raises:
        InputError: max_len < 2 ise
        BudgetExceededError: Sayım bütçesi aşılırsa
    """
    if max_len < 2:
        raise InputError(f"maxLen en az 2 olmalı: {max_len}", details={"field": "maxLen"})
    settings = resolve_settings(settings)
    tally = MessageExplorer(system, max_len, settings.max_enum).run()
    flags = _flags_from_tally(system, tally, max_len)
    notes: List[str] = []
    _reconcile(system, flags, max_len, settings.max_enum, notes)

    is_medium = flags["axiom_ma"] and flags["axiom_mb"]
    if is_medium != all(flags[k] for k in ("m1", "m2", "m3", "m4")):
        notes.append(f"maxLen={max_len} ile [Ma]∧[Mb] ve [M1]-[M4] ayrıştı; sınır yetersiz olabilir")
        logger.warning(f"{system!r}: maxLen={max_len} ile aksiyom sistemleri ayrıştı")
    logger.info(f"Sınırlı aksiyom denetimi: {system!r}, maxLen={max_len}, isMedium={is_medium}")
    return MediumReport(is_medium=is_medium, method="bounded", max_len=max_len, notes=notes, **flags)


def is_medium(system: TokenSystem) -> bool:
    """Graf yolu kararının kısayolu."""
    return _graph_verdict(system).is_medium
