"""
MedyaKiti Ortam Teoremleri Modülü
---------------------------------
Bir ortamın durum içerikleri, devre/dönüş sınıflandırması ve temel
sonuçların denetlenebilir biçimleri:

  - state_content: Ŝ, graf mesafeleriyle hesaplanır
  - classify_circuit: dönüş / düzenli (orderly) / muntazam (regular) ayrımı
  - check_theta: dört koşulun denkliği ve düzenli devre tanığı
  - check_opposite: karşıt tokenlar, muntazamlık ve döndürmeler
  - hypercube_embedding: içerik ailesi ve hiperküp gösterimi
"""

from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import Field

from core.errors import BudgetExceededError, InputError, InternalContradictionError, PreconditionError
from core.token_system import (
    Message,
    ReportModel,
    StateId,
    TokenId,
    TokenSystem,
    as_message,
    content,
    is_concise,
    is_stepwise_effective,
    reverse_message,
)
from convert.bijection import adjacency_graph, path_to_message, require_medium, shortest_path
from graphs.graph import DistanceTable, distances, is_isometric_subgraph_of_hypercube
from utils.config import MediaKitSettings, resolve_settings
from utils.logging_config import get_logger

logger = get_logger(__name__)


class Content(ReportModel):
    """Bir durumun içeriği Ŝ."""
    state: StateId
    tokens: List[TokenId]


def state_content(system: TokenSystem, state: StateId, settings: Optional[MediaKitSettings] = None) -> Content:
    """
    Durumun içeriğini hesaplar. Her {τ, τ̃} çifti için, Aτ = B olan temsilci
    (A, B) taşıması alınır: d(S, B) < d(S, A) ise τ ∈ Ŝ.

    Args:
        system: Ortam
        state: Durum

    Returns:
        Content: Sıralı token listesi, |Ŝ| = |𝒯|/2

    Raises:
        PreconditionError: Sistem bir ortam değilse
    """
    system.require_state(state)
    require_medium(system, "state_content", settings)
    return Content(state=state, tokens=_content_tokens(system, state, distances(adjacency_graph(system))))


def _content_tokens(system: TokenSystem, state: StateId, table: DistanceTable) -> List[TokenId]:
    tokens = []
    for token in system.tokens.values():
        a, b = min(token.moves)
        if table.d(state, b) < table.d(state, a):
            tokens.append(token.id)

    for token_id in tokens:
        if system.reverse_id(token_id) in tokens:
            raise InternalContradictionError(f"{state} içeriği hem {token_id} hem de tersini içeriyor")
    if 2 * len(tokens) != len(system.tokens):
        raise InternalContradictionError(f"{state} içeriği tokenların yarısı değil: {len(tokens)}")
    return sorted(tokens)


class HypercubeEmbedding(ReportModel):
    """
    İçerik ailesi ve onun hiperküp gösterimi. k. bit, token_classes[k]
    çiftinin ilk tokenı durumun içeriğindeyse 1'dir.
    """
    dimension: int
    token_classes: List[Tuple[TokenId, TokenId]]
    contents: Dict[StateId, List[TokenId]]
    coordinates: Dict[StateId, str]
    wellgraded: bool
    isometric: bool


def token_classes(system: TokenSystem) -> List[Tuple[TokenId, TokenId]]:
    """{τ, τ̃} çiftleri; her çiftte küçük kimlik önce, çiftler sıralı."""
    classes = set()
    for token_id in system.token_ids:
        reverse = system.reverse_id(token_id)
        if reverse is None:
            raise PreconditionError(f"'{token_id}' tokenının tersi yok", details={"token": token_id})
        classes.add(tuple(sorted((token_id, reverse))))
    return sorted(classes)


def content_family(system: TokenSystem, settings: Optional[MediaKitSettings] = None) -> Dict[StateId, List[TokenId]]:
    """
    Tüm durumların içerikleri (Ŝ ailesi).

    Raises:
        PreconditionError: Sistem bir ortam değilse
    """
    require_medium(system, "content_family", settings)
    table = distances(adjacency_graph(system))
    return {state: _content_tokens(system, state, table) for state in system.states}


def hypercube_embedding(system: TokenSystem, settings: Optional[MediaKitSettings] = None) -> HypercubeEmbedding:
    """
    Her durumu içeriğinin bit vektörüne eşler. Ortamın içerik ailesi iyi
    derecelidir; eşleme birebirdir ve graf mesafesi Hamming mesafesine eşittir,
    yani ortamın grafı hiperküpün izometrik bir alt grafıdır.

    Args:
        system: Ortam
        settings: İsteğe bağlı ayarlar

    Returns:
        HypercubeEmbedding: Koordinatlar "0101" biçiminde, token_classes sırasıyla

    Raises:
        PreconditionError: Sistem bir ortam değilse
        InternalContradictionError: Eşleme birebir değilse ya da mesafeleri korumuyorsa
    """
    family = content_family(system, settings)
    classes = token_classes(system)
    bit_of = {first: 1 << k for k, (first, _) in enumerate(classes)}
    bitsets = {state: sum(bit_of.get(t, 0) for t in tokens) for state, tokens in family.items()}
    if len(set(bitsets.values())) != len(bitsets):
        raise InternalContradictionError("İki farklı durumun içeriği aynı", details={"contents": family})

    wellgraded = is_isometric_subgraph_of_hypercube(bitsets.values())
    table = distances(adjacency_graph(system))
    isometric = all(
        table.d(s, v) == bin(bitsets[s] ^ bitsets[v]).count("1")
        for i, s in enumerate(system.states) for v in system.states[i + 1:]
    )
    coordinates = {state: format(bits, f"0{len(classes)}b")[::-1] for state, bits in bitsets.items()}
    embedding = HypercubeEmbedding(dimension=len(classes), token_classes=classes, contents=family,
                                   coordinates=coordinates, wellgraded=wellgraded, isometric=isometric)
    if not (wellgraded and isometric):
        raise InternalContradictionError("İçerik eşlemesi izometrik değil", details=embedding.to_payload())
    logger.debug(f"{system!r} {len(classes)} boyutlu hiperküpe gömüldü")
    return embedding


class CircuitClassification(ReportModel):
    is_return: bool
    is_orderly: bool
    is_regular: bool
    split_witness: Optional[int] = None
    opposite_pairs: List[Tuple[int, int]] = Field(default_factory=list)


def _orderly_split(system: TokenSystem, state: StateId, message: Message, allow_identical_halves: bool) -> Optional[int]:
    # m = q·ñ: q ve n, S'den aynı V ≠ S durumunu üreten özlü mesajlar
    for i in range(1, len(message)):
        q = message[:i]
        n = reverse_message(system, message[i:])
        if not allow_identical_halves and q == n:
            continue
        if not (is_concise(system, state, q) and is_concise(system, state, n)):
            continue
        target = system.apply(state, q)
        if target != state and system.apply(state, n) == target:
            return i
    return None


def _windows_concise(system: TokenSystem, state: StateId, message: Message) -> bool:
    half = len(message) // 2
    path = system.trajectory(state, message)
    for i in range(len(message)):
        window = tuple(message[(i + k) % len(message)] for k in range(half))
        if not is_concise(system, path[i], window):
            return False
    return True


def classify_circuit(
    system: TokenSystem,
    state: StateId,
    message: Sequence[TokenId],
    allow_identical_halves: bool = False,
    settings: Optional[MediaKitSettings] = None,
) -> CircuitClassification:
    """
    Adım adım etkili bir mesajı sınıflandırır.

    Args:
        system: Ortam
        state: Başlangıç durumu
        message: Mesaj
        allow_identical_halves: True ise q = n olan bölünmeler de düzenli sayılır

    Returns:
        CircuitClassification: isReturn, isOrderly, isRegular, ilk geçerli bölünme indisi
        ve çift uzunlukta karşıt indis çiftleri

    Raises:
        PreconditionError: Sistem ortam değilse ya da mesaj adım adım etkili değilse
    """
    message = as_message(message)
    system.require_state(state)
    require_medium(system, "classify_circuit", settings)
    if not is_stepwise_effective(system, state, message):
        raise PreconditionError("Mesaj bu durum için adım adım etkili değil",
                                details={"state": state, "message": list(message)})

    is_return = system.apply(state, message) == state
    split = _orderly_split(system, state, message, allow_identical_halves) if is_return else None
    is_orderly = split is not None
    is_regular = is_orderly and len(message) % 2 == 0 and _windows_concise(system, state, message)
    half = len(message) // 2
    pairs = [(i, i + half) for i in range(half)] if len(message) % 2 == 0 else []
    return CircuitClassification(is_return=is_return, is_orderly=is_orderly, is_regular=is_regular,
                                 split_witness=split, opposite_pairs=pairs)


class OppositeResult(ReportModel):
    opposite_mutual_reverses: bool
    regular: bool
    all_rotations_orderly: bool


def check_opposite(system: TokenSystem, state: StateId, message: Sequence[TokenId],
                   settings: Optional[MediaKitSettings] = None) -> OppositeResult:
    """
    Düzenli bir dönüş için üç koşulu değerlendirir: (i) karşıt tokenlar
    karşılıklı ters, (ii) dönüş muntazam, (iii) her döndürme kendi başlangıç
    durumu için düzenli bir dönüş. Üçünün aynı sonucu vermesi beklenir.

    Raises:
        PreconditionError: Mesaj düzenli bir dönüş değilse
        InternalContradictionError: Koşullar farklı sonuç verirse
    """
    message = as_message(message)
    base = classify_circuit(system, state, message, settings=settings)
    if not base.is_orderly:
        raise PreconditionError("check_opposite düzenli bir dönüş gerektirir",
                                details={"state": state, "message": list(message)})

    half = len(message) // 2
    mutual = all(system.reverse_id(message[i]) == message[i + half] for i in range(half))
    path = system.trajectory(state, message)
    rotations = all(
        classify_circuit(system, path[i], message[i:] + message[:i], settings=settings).is_orderly
        for i in range(len(message))
    )
    result = OppositeResult(opposite_mutual_reverses=mutual, regular=base.is_regular,
                            all_rotations_orderly=rotations)
    if not (mutual == base.is_regular == rotations):
        raise InternalContradictionError("Karşıt token koşulları farklı sonuç verdi", details=result.to_payload())
    return result


class ThetaConfig(ReportModel):
    """Dört durum, iki token ve dört özlü mesajdan oluşan yapılandırma."""
    state_s: StateId = Field(alias="S")
    state_n: StateId = Field(alias="N")
    state_q: StateId = Field(alias="Q")
    state_w: StateId = Field(alias="W")
    tau: TokenId
    mu: TokenId
    q: List[TokenId]
    q_prime: List[TokenId]
    w: List[TokenId]
    w_prime: List[TokenId]


class ThetaResult(ReportModel):
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    cond_iv: bool
    orderly_witness: Optional[List[TokenId]] = None
    candidate_circuit: List[TokenId]
    candidate_is_orderly: bool


def _validate_theta(system: TokenSystem, cfg: ThetaConfig) -> None:
    s, n, q_state, w_state = cfg.state_s, cfg.state_n, cfg.state_q, cfg.state_w
    for st in (s, n, q_state, w_state):
        system.require_state(st)
    for token_id in (cfg.tau, cfg.mu):
        system.token(token_id)
    for name, message in (("q", cfg.q), ("qPrime", cfg.q_prime), ("w", cfg.w), ("wPrime", cfg.w_prime)):
        if not message:
            raise InputError(f"'{name}' mesajı boş olamaz", details={"field": name})
        for token_id in message:
            system.token(token_id)

    def fail(reason: str):
        raise PreconditionError(f"Yapılandırma varsayımları sağlanmıyor: {reason}", details=cfg.to_payload())

    if len({s, n, q_state, w_state}) != 4:
        fail("S, N, Q, W farklı olmalı")
    if system.apply(n, [cfg.tau]) != s:
        fail("Nτ = S değil")
    if system.apply(w_state, [cfg.mu]) != q_state:
        fail("Wμ = Q değil")
    for name, start, message, end in (("q", s, cfg.q, q_state), ("qPrime", n, cfg.q_prime, q_state),
                                      ("wPrime", s, cfg.w_prime, w_state), ("w", n, cfg.w, w_state)):
        if system.apply(start, message) != end:
            fail(f"{name} beklenen durumu üretmiyor")
        if not is_concise(system, start, message):
            fail(f"{name} özlü değil")


def check_theta(system: TokenSystem, cfg: ThetaConfig, settings: Optional[MediaKitSettings] = None) -> ThetaResult:
    """
    Dört koşulu değerlendirir:
      (i)   ℓ(q)+ℓ(w) ≠ ℓ(q′)+ℓ(w′) ve μ ≠ τ̃
      (ii)  τ = μ
      (iii) C(q) = C(w) ve ℓ(q) = ℓ(w)
      (iv)  ℓ(q)+ℓ(w)+2 = ℓ(q′)+ℓ(w′)
    Koşullar doğruysa q·μ̃·w̃·τ, S için düzenli bir devre olarak döndürülür.

    Raises:
        PreconditionError: Varsayımlar sağlanmıyorsa
        InternalContradictionError: Koşullar farklı sonuç verirse ya da tanık doğrulanamazsa
    """
    require_medium(system, "check_theta", settings)
    _validate_theta(system, cfg)
    q, w, q_prime, w_prime = tuple(cfg.q), tuple(cfg.w), tuple(cfg.q_prime), tuple(cfg.w_prime)

    cond_i = len(q) + len(w) != len(q_prime) + len(w_prime) and cfg.mu != system.reverse_id(cfg.tau)
    cond_ii = cfg.tau == cfg.mu
    cond_iii = content(q) == content(w) and len(q) == len(w)
    cond_iv = len(q) + len(w) + 2 == len(q_prime) + len(w_prime)

    candidate = q + reverse_message(system, [cfg.mu]) + reverse_message(system, w) + (cfg.tau,)
    try:
        candidate_orderly = classify_circuit(system, cfg.state_s, candidate, settings=settings).is_orderly
    except PreconditionError:
        candidate_orderly = False

    result = ThetaResult(cond_i=cond_i, cond_ii=cond_ii, cond_iii=cond_iii, cond_iv=cond_iv,
                         candidate_circuit=list(candidate), candidate_is_orderly=candidate_orderly)
    if not (cond_i == cond_ii == cond_iii == cond_iv):
        raise InternalContradictionError("Dört koşul farklı sonuç verdi", details=result.to_payload())
    if cond_ii:
        middle = system.apply(cfg.state_s, q + reverse_message(system, [cfg.mu]))
        if not candidate_orderly or middle != cfg.state_w:
            raise InternalContradictionError("q·μ̃·w̃·τ düzenli bir devre değil", details=result.to_payload())
        result = result.model_copy(update={"orderly_witness": list(candidate)})
    return result


def enumerate_theta_configs(system: TokenSystem, settings: Optional[MediaKitSettings] = None) -> List[ThetaConfig]:
    """
    Mesajları BFS özlü mesajları olan tüm yapılandırmaları üretir: her
    Nτ = S ve Wμ = Q komşu çifti için, dört durum farklıysa.

    Raises:
        PreconditionError: Sistem bir ortam değilse
        BudgetExceededError: Yapılandırma sayısı bütçeyi aşarsa
    """
    require_medium(system, "enumerate_theta_configs", settings)
    budget = resolve_settings(settings).max_enum
    graph = adjacency_graph(system)
    cache: Dict[Tuple[StateId, StateId], Message] = {}

    def bfs_message(a: StateId, b: StateId) -> Message:
        if (a, b) not in cache:
            cache[(a, b)] = path_to_message(system, shortest_path(graph, a, b))
        return cache[(a, b)]

    steps = [(source, token_id, target) for source in system.states for token_id, target in system.moves_from(source)]
    configs: List[ThetaConfig] = []
    for n, tau, s in steps:
        for w_state, mu, q_state in steps:
            if len({s, n, q_state, w_state}) != 4:
                continue
            configs.append(ThetaConfig(
                S=s, N=n, Q=q_state, W=w_state, tau=tau, mu=mu,
                q=list(bfs_message(s, q_state)), q_prime=list(bfs_message(n, q_state)),
                w=list(bfs_message(n, w_state)), w_prime=list(bfs_message(s, w_state)),
            ))
            if len(configs) > budget:
                raise BudgetExceededError(f"Yapılandırma sayımı bütçeyi aştı ({budget})", details={"budget": budget})
    logger.debug(f"{len(configs)} yapılandırma üretildi")
    return configs
