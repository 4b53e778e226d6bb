"""
MedyaKiti Token Sistemi Modülü
------------------------------
Bu modül token sistemlerini, tokenları ve mesaj cebirini tanımlar.
Diğer tüm modüller bu sözlüğü kullanır.

Tokenlar seyrek olarak, yer değiştirdikleri (kaynak, hedef) çiftlerinin kümesi
ile saklanır; listede olmayan her durum tokenın sabit noktasıdır.
"""

from collections import Counter
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict
from pydantic.alias_generators import to_camel

from core.errors import InputError, MalformedSystemError
from utils.logging_config import get_logger

logger = get_logger(__name__)

StateId = str
TokenId = str
Move = Tuple[StateId, StateId]
# Mesaj: soldan sağa uygulanan token kimlikleri dizisi
Message = Tuple[TokenId, ...]


class ReportModel(BaseModel):
    """JSON'a camelCase anahtarlarla yazılan rapor modellerinin tabanı."""
    model_config = ConfigDict(alias_generator=to_camel, populate_by_name=True, frozen=True)

    def to_payload(self) -> dict:
        return self.model_dump(by_alias=True, mode="json")


@dataclass(frozen=True)
class Token:
    """
    Durum kümesi üzerinde birim olmayan bir dönüşüm.

    Attributes:
        id: Token kimliği
        moves: Tokenın taşıdığı (S, V) çiftleri, S ≠ V
    """
    id: TokenId
    moves: FrozenSet[Move]
    action: Mapping[StateId, StateId] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise InputError("Token kimliği boş olmayan bir metin olmalı", details={"field": "tokens[].id"})
        moves = frozenset((str(s), str(v)) for s, v in self.moves)
        if not moves:
            raise InputError(f"'{self.id}' tokenı birim dönüşüm olamaz: hiç taşıma yok",
                             details={"field": f"tokens[{self.id}].moves"})
        action: Dict[StateId, StateId] = {}
        for source, target in sorted(moves):
            if source == target:
                raise InputError(f"'{self.id}' tokenında döngü taşıması: {source}->{target}",
                                 details={"field": f"tokens[{self.id}].moves"})
            if source in action:
                raise InputError(f"'{self.id}' tokenında '{source}' durumu iki kez kaynak",
                                 details={"field": f"tokens[{self.id}].moves"})
            action[source] = target
        object.__setattr__(self, "moves", moves)
        object.__setattr__(self, "action", MappingProxyType(action))

    def apply(self, state: StateId) -> StateId:
        """Tokenı tek bir duruma uygular."""
        return self.action.get(state, state)

    def reversed_moves(self) -> FrozenSet[Move]:
        return frozenset((v, s) for s, v in self.moves)


class TokenSystem:
    """
    Durumlar ve tokenlardan oluşan (𝒮, 𝒯) çifti.

    Oluşturulduktan sonra değiştirilemez. Ters eşleşme (reverse pairing) yükleme
    sırasında tüm tokenlar taranarak hesaplanır; girdide verilen eşleşmeler
    doğrulanır, körü körüne kabul edilmez.
    """

    def __init__(
        self,
        states: Iterable[StateId],
        tokens: Iterable[Token],
        reverses: Optional[Mapping[TokenId, TokenId]] = None,
    ):
        """
        Token sistemini oluşturur ve doğrular.

        Args:
            states: Durum kimlikleri (en az iki, benzersiz, boş olmayan)
            tokens: Token nesneleri (boş olmayan, benzersiz kimlikli)
            reverses: İsteğe bağlı açık ters eşleşmesi; hesaplanan eşleşmeyle doğrulanır

        Raises:
            InputError: Durum/token kümesi geçersizse
            MalformedSystemError: Açık ters eşleşmesi denklemle uyuşmuyorsa
        """
        state_list = [str(s) for s in states]
        if any(not s for s in state_list):
            raise InputError("Durum kimlikleri boş olamaz", details={"field": "states"})
        if len(set(state_list)) != len(state_list):
            raise InputError("Durum kimlikleri benzersiz olmalı", details={"field": "states"})
        if len(state_list) < 2:
            raise InputError("Bir token sisteminde en az iki durum olmalı", details={"field": "states"})
        self._states: Tuple[StateId, ...] = tuple(sorted(state_list))
        self._state_set = frozenset(self._states)

        token_map: Dict[TokenId, Token] = {}
        for token in tokens:
            if token.id in token_map:
                raise InputError(f"Token kimliği tekrar ediyor: {token.id}", details={"field": "tokens"})
            for source, target in token.moves:
                if source not in self._state_set or target not in self._state_set:
                    raise InputError(f"'{token.id}' tokenı bilinmeyen bir durumu taşıyor: {source}->{target}",
                                     details={"field": f"tokens[{token.id}].moves"})
            token_map[token.id] = token
        if not token_map:
            raise InputError("Token kümesi boş olamaz", details={"field": "tokens"})
        self._tokens: Mapping[TokenId, Token] = MappingProxyType(dict(sorted(token_map.items())))

        self._reverse, self._ambiguous = self._compute_reverses()
        self._moves_from = self._index_moves()
        if reverses is not None:
            self._validate_explicit_reverses(reverses)

        logger.debug(f"Token sistemi oluşturuldu: {len(self._states)} durum, {len(self._tokens)} token")

    # ------------------------------------------------------------------
    # İç hesaplamalar
    # ------------------------------------------------------------------
    def _compute_reverses(self) -> Tuple[Dict[TokenId, Optional[TokenId]], Dict[TokenId, Tuple[TokenId, ...]]]:
        # Sτ=V ⟺ Vτ̃=S, taşıma kümeleri üzerinden: τ̃'nın taşımaları τ'nunkilerin tersidir
        by_moves: Dict[FrozenSet[Move], List[TokenId]] = {}
        for token in self._tokens.values():
            by_moves.setdefault(token.moves, []).append(token.id)
        reverse: Dict[TokenId, Optional[TokenId]] = {}
        ambiguous: Dict[TokenId, Tuple[TokenId, ...]] = {}
        for token in self._tokens.values():
            candidates = [c for c in by_moves.get(token.reversed_moves(), []) if c != token.id]
            if len(candidates) > 1:
                ambiguous[token.id] = tuple(sorted(candidates))
                reverse[token.id] = None
            else:
                reverse[token.id] = candidates[0] if candidates else None
        return reverse, ambiguous

    def _index_moves(self) -> Mapping[StateId, Tuple[Tuple[TokenId, StateId], ...]]:
        index: Dict[StateId, List[Tuple[TokenId, StateId]]] = {s: [] for s in self._states}
        for token in self._tokens.values():
            for source, target in token.moves:
                index[source].append((token.id, target))
        return MappingProxyType({s: tuple(sorted(pairs)) for s, pairs in index.items()})

    def _validate_explicit_reverses(self, reverses: Mapping[TokenId, TokenId]) -> None:
        for key, value in reverses.items():
            for tid in (key, value):
                if tid not in self._tokens:
                    raise MalformedSystemError(f"'reverses' bilinmeyen bir token içeriyor: {tid}",
                                               details={"field": "reverses"})
            if key == value:
                raise MalformedSystemError(f"'{key}' tokenı kendi tersi olamaz", details={"field": "reverses"})
            if reverses.get(value, key) != key:
                raise MalformedSystemError(f"'reverses' bir involüsyon değil: {key}->{value}",
                                           details={"field": "reverses"})
            if self._reverse.get(key) != value:
                raise MalformedSystemError(
                    f"'reverses' eşleşmesi doğrulanamadı: {value}, {key} tokenının tersi değil",
                    details={"field": f"reverses.{key}"})

    # ------------------------------------------------------------------
    # Genel arayüz
    # ------------------------------------------------------------------
    @property
    def states(self) -> Tuple[StateId, ...]:
        return self._states

    @property
    def tokens(self) -> Mapping[TokenId, Token]:
        return self._tokens

    @property
    def token_ids(self) -> Tuple[TokenId, ...]:
        return tuple(self._tokens)

    def has_state(self, state: StateId) -> bool:
        return state in self._state_set

    def token(self, token_id: TokenId) -> Token:
        """Kimliği verilen tokenı döndürür; bilinmiyorsa InputError fırlatır."""
        try:
            return self._tokens[token_id]
        except KeyError:
            raise InputError(f"Bilinmeyen token: {token_id}", details={"field": "message"})

    def require_state(self, state: StateId) -> StateId:
        if state not in self._state_set:
            raise InputError(f"Bilinmeyen durum: {state}", details={"field": "state"})
        return state

    def moves_from(self, state: StateId) -> Tuple[Tuple[TokenId, StateId], ...]:
        """Bir durumda etkili olan (token, hedef) çiftleri, sıralı."""
        return self._moves_from[state]

    def reverse_id(self, token_id: TokenId) -> Optional[TokenId]:
        """
        Tokenın tersini döndürür (yoksa None).

        Raises:
            MalformedSystemError: Birden çok aday varsa
        """
        self.token(token_id)
        if token_id in self._ambiguous:
            raise MalformedSystemError(
                f"'{token_id}' tokenının tersi tek değil: {', '.join(self._ambiguous[token_id])}",
                details={"token": token_id, "candidates": list(self._ambiguous[token_id])})
        return self._reverse[token_id]

    def reverse_candidates(self, token_id: TokenId) -> Tuple[TokenId, ...]:
        """Ters denklemini sağlayan tüm tokenlar; belirsizlikte hata fırlatmaz."""
        self.token(token_id)
        if token_id in self._ambiguous:
            return self._ambiguous[token_id]
        reverse = self._reverse[token_id]
        return (reverse,) if reverse is not None else ()

    def reverse_pairing(self) -> Dict[TokenId, TokenId]:
        """Hesaplanan (belirsiz olmayan) ters eşleşmesi."""
        return {t: r for t, r in self._reverse.items() if r is not None}

    def apply(self, state: StateId, message: Sequence[TokenId]) -> StateId:
        current = self.require_state(state)
        for token_id in message:
            current = self.token(token_id).apply(current)
        return current

    def trajectory(self, state: StateId, message: Sequence[TokenId]) -> List[StateId]:
        """Mesaj boyunca uğranan durumlar (başlangıç dahil)."""
        current = self.require_state(state)
        visited = [current]
        for token_id in message:
            current = self.token(token_id).apply(current)
            visited.append(current)
        return visited

    def to_dict(self) -> dict:
        return {
            "states": list(self._states),
            "tokens": [
                {"id": t.id, "moves": [list(m) for m in sorted(t.moves)]}
                for t in self._tokens.values()
            ],
            "reverses": dict(sorted(self.reverse_pairing().items())),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "TokenSystem":
        """
        Token sistemi JSON biçiminden okur.

        Raises:
            InputError: Eksik ya da hatalı alan varsa (hatalı alan adı mesajda yer alır)
        """
        if not isinstance(data, Mapping):
            raise InputError("Token sistemi bir JSON nesnesi olmalı", details={"field": "<root>"})
        if "states" not in data or not isinstance(data["states"], list):
            raise InputError("'states' alanı eksik ya da liste değil", details={"field": "states"})
        if "tokens" not in data or not isinstance(data["tokens"], list):
            raise InputError("'tokens' alanı eksik ya da liste değil", details={"field": "tokens"})
        tokens = []
        for i, entry in enumerate(data["tokens"]):
            if not isinstance(entry, Mapping) or "id" not in entry or "moves" not in entry:
                raise InputError(f"tokens[{i}] bir {{id, moves}} nesnesi olmalı", details={"field": f"tokens[{i}]"})
            moves = entry["moves"]
            if not isinstance(moves, list) or any(not isinstance(m, list) or len(m) != 2 for m in moves):
                raise InputError(f"tokens[{i}].moves [[S, V], ...] biçiminde olmalı",
                                 details={"field": f"tokens[{i}].moves"})
            tokens.append(Token(str(entry["id"]), frozenset((str(s), str(v)) for s, v in moves)))
        reverses = data.get("reverses")
        if reverses is not None and not isinstance(reverses, Mapping):
            raise InputError("'reverses' bir nesne olmalı", details={"field": "reverses"})
        return cls([str(s) for s in data["states"]], tokens, reverses)

    def __repr__(self) -> str:
        return f"TokenSystem(states={len(self._states)}, tokens={len(self._tokens)})"


# ----------------------------------------------------------------------
# Mesaj cebiri
# ----------------------------------------------------------------------
def as_message(tokens: Sequence[TokenId], allow_empty: bool = False) -> Message:
    """
    Token dizisini mesaja çevirir. Genel API boş mesajı reddeder.

    Raises:
        InputError: Mesaj boşsa (allow_empty False iken)
    """
    message = tuple(str(t) for t in tokens)
    if not message and not allow_empty:
        raise InputError("Mesaj en az bir token içermeli", details={"field": "message"})
    return message


def content(message: Sequence[TokenId]) -> FrozenSet[TokenId]:
    """Mesajın içeriği C(m)."""
    return frozenset(message)


def length(message: Sequence[TokenId]) -> int:
    """Mesajın uzunluğu ℓ(m)."""
    return len(message)


def apply(system: TokenSystem, state: StateId, message: Sequence[TokenId]) -> StateId:
    """
    Mesajı bir duruma soldan sağa uygular: Sτ₁τ₂⋯τₙ.

    Raises:
        InputError: Durum ya da token bilinmiyorsa
    """
    return system.apply(state, as_message(message))


def reverse_of(system: TokenSystem, token_id: TokenId) -> Optional[Token]:
    """
    Tokenın tersini (τ̃) döndürür; yoksa None.

    Raises:
        InputError: Token bilinmiyorsa
        MalformedSystemError: Birden çok ters adayı varsa
    """
    reverse = system.reverse_id(token_id)
    return system.token(reverse) if reverse is not None else None


def reverse_message(system: TokenSystem, message: Sequence[TokenId]) -> Message:
    """
    m = τ₁…τₙ için m̃ = τ̃ₙ…τ̃₁ döndürür.

    Raises:
        MalformedSystemError: Tokenlardan birinin tersi yoksa
    """
    message = as_message(message)
    result = []
    for token_id in reversed(message):
        reverse = system.reverse_id(token_id)
        if reverse is None:
            raise MalformedSystemError(f"'{token_id}' tokenının tersi yok", details={"token": token_id})
        result.append(reverse)
    return tuple(result)


def is_stepwise_effective(system: TokenSystem, state: StateId, message: Sequence[TokenId]) -> bool:
    path = system.trajectory(state, message)
    return all(path[i] != path[i + 1] for i in range(len(message)))


def is_consistent(system: TokenSystem, message: Sequence[TokenId]) -> bool:
    """Mesaj hem bir tokenı hem de tersini içermiyorsa tutarlıdır."""
    tokens = content(message)
    for token_id in tokens:
        if any(reverse in tokens for reverse in system.reverse_candidates(token_id)):
            return False
    return True


def jointly_consistent(system: TokenSystem, first: Sequence[TokenId], second: Sequence[TokenId]) -> bool:
    return is_consistent(system, tuple(first) + tuple(second))


def is_concise(system: TokenSystem, state: StateId, message: Sequence[TokenId]) -> bool:
    """Tutarlı, adım adım etkili ve tekrarsız mesaj."""
    return (len(set(message)) == len(message)
            and is_consistent(system, message)
            and is_stepwise_effective(system, state, message))


def is_vacuous(system: TokenSystem, message: Sequence[TokenId]) -> bool:
    """
    İndisler karşılıklı ters çiftlere bölünebiliyorsa mesaj boştur (vacuous).
    Bu, her {τ, τ̃} çifti için iki tokenın eşit sayıda geçmesine denktir.
    Tersi olmayan ya da tersi tek olmayan bir token mesajı boş olmaktan çıkarır.
    """
    counts = Counter(message)
    for token_id, count in counts.items():
        candidates = system.reverse_candidates(token_id)
        if len(candidates) != 1 or counts.get(candidates[0], 0) != count:
            return False
    return True


class MessageStats(ReportModel):
    """message_stats sonucu."""
    effective: bool
    stepwise_effective: bool
    consistent: bool
    concise: bool
    vacuous: bool
    is_return: bool
    content: List[TokenId]
    length: int


def message_stats(system: TokenSystem, state: StateId, message: Sequence[TokenId]) -> MessageStats:
    """
    Bir mesajın bir durum için tüm niteliklerini hesaplar.

    Args:
        system: Token sistemi
        state: Başlangıç durumu
        message: Token kimlikleri dizisi (boş olamaz)

    Returns:
        MessageStats: effective, stepwiseEffective, consistent, concise, vacuous, isReturn, content, length

    Raises:
        InputError: Bilinmeyen kimlik ya da boş mesaj
        MalformedSystemError: Ters eşleşmesi belirsizse
    """
    message = as_message(message)
    final = system.apply(state, message)
    stepwise = is_stepwise_effective(system, state, message)
    consistent = is_consistent(system, message)
    return MessageStats(
        effective=final != state,
        stepwise_effective=stepwise,
        consistent=consistent,
        concise=consistent and stepwise and len(set(message)) == len(message),
        vacuous=is_vacuous(system, message),
        is_return=stepwise and final == state,
        content=sorted(content(message)),
        length=length(message),
    )


# ----------------------------------------------------------------------
# Geçersiz örnek üretimi için değişiklik yardımcıları
# ----------------------------------------------------------------------
def without_token(system: TokenSystem, token_id: TokenId) -> TokenSystem:
    """Bir tokenı silinmiş yeni bir token sistemi döndürür."""
    system.token(token_id)
    remaining = [t for t in system.tokens.values() if t.id != token_id]
    return TokenSystem(system.states, remaining)


def split_token(system: TokenSystem, token_id: TokenId) -> TokenSystem:
    """
    Tokenı ve tersini, uyumlu iki yarıya böler: ilk yarı en küçük taşımayı,
    ikinci yarı kalanları alır. Her yarının tersi korunur.

    Raises:
        InputError: Tokenın bölünecek kadar taşıması yoksa
        MalformedSystemError: Tokenın tersi yoksa
    """
    token = system.token(token_id)
    if len(token.moves) < 2:
        raise InputError(f"'{token_id}' tokenı tek taşımalı, bölünemez", details={"token": token_id})
    reverse_id = system.reverse_id(token_id)
    if reverse_id is None:
        raise MalformedSystemError(f"'{token_id}' tokenının tersi yok", details={"token": token_id})
    first = min(token.moves)
    rest = token.moves - {first}
    tokens = [t for t in system.tokens.values() if t.id not in (token_id, reverse_id)]
    tokens += [
        Token(f"{token_id}.a", frozenset({first})),
        Token(f"{token_id}.b", rest),
        Token(f"{reverse_id}.a", frozenset({(first[1], first[0])})),
        Token(f"{reverse_id}.b", frozenset((v, s) for s, v in rest)),
    ]
    return TokenSystem(system.states, tokens)
