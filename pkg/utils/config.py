"""
MedyaKiti Yapılandırma Modülü
-----------------------------
Sayım bütçeleri, arama sınırları ve loglama ayarları ortam değişkenlerinden
(veya .env dosyasından) okunur. Tüm işlemler isteğe bağlı bir `settings`
parametresi alır; verilmezse `load_settings()` kullanılır.
"""

import os
from typing import Optional

import dotenv
from pydantic import BaseModel, Field

from core.errors import InputError

# .env dosyasını yükle
dotenv.load_dotenv()

# Ortam değişkeni adları
ENV_MAX_ENUM = "MEDIA_KIT_MAX_ENUM"
ENV_MAX_LEN_CAP = "MEDIA_KIT_MAX_LEN_CAP"
ENV_MAX_ISO_VERTICES = "MEDIA_KIT_MAX_ISO_VERTICES"
ENV_MAX_FAMILY_N = "MEDIA_KIT_MAX_FAMILY_N"
ENV_LOG_LEVEL = "MEDIA_KIT_LOG_LEVEL"
ENV_LOG_FILE = "MEDIA_KIT_LOG_FILE"
ENV_PROGRESS = "MEDIA_KIT_PROGRESS"

# Aile sayımında kesin üst sınır (2^(n²) aday ilişki)
FAMILY_HARD_CAP = 4


class MediaKitSettings(BaseModel):
    """Kütüphane ve komut satırı için ortak ayarlar."""
    max_enum: int = Field(default=2_000_000, ge=1)  # Mesaj/devre sayım bütçesi
    max_len_cap: int = Field(default=12, ge=2)  # Varsayılan maxLen = min(2·|durum|, cap)
    max_iso_vertices: int = Field(default=12, ge=1)  # İzomorfizma araması için tepe sınırı
    max_family_n: int = Field(default=FAMILY_HARD_CAP, ge=1, le=FAMILY_HARD_CAP)
    log_level: str = "WARNING"
    log_file: Optional[str] = None
    show_progress: bool = False

    def default_max_len(self, state_count: int) -> int:
        """Sınırlı aksiyom denetimi için varsayılan mesaj uzunluğu sınırı."""
        return max(2, min(2 * state_count, self.max_len_cap))


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{name} ortam değişkeni tamsayı olmalı: {raw!r}", details={"field": name})


def _bool_from_env(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on", "evet")


def load_settings() -> MediaKitSettings:
    """
    Ortam değişkenlerinden ayarları okur.

    Returns:
        MediaKitSettings: Doğrulanmış ayar nesnesi

    Raises:
        InputError: Bir ortam değişkeni geçersizse
    """
    values = {
        "max_enum": _int_from_env(ENV_MAX_ENUM, 2_000_000),
        "max_len_cap": _int_from_env(ENV_MAX_LEN_CAP, 12),
        "max_iso_vertices": _int_from_env(ENV_MAX_ISO_VERTICES, 12),
        "max_family_n": _int_from_env(ENV_MAX_FAMILY_N, FAMILY_HARD_CAP),
        "log_level": os.getenv(ENV_LOG_LEVEL, "WARNING"),
        "log_file": os.getenv(ENV_LOG_FILE) or None,
        "show_progress": _bool_from_env(ENV_PROGRESS, False),
    }
    try:
        return MediaKitSettings(**values)
    except ValueError as e:
        raise InputError(f"Geçersiz MEDIA_KIT_* ayarı: {str(e)}")


def resolve_settings(settings: Optional[MediaKitSettings]) -> MediaKitSettings:
    """Verilen ayarları ya da ortamdan okunanları döndürür."""
    return settings if settings is not None else load_settings()
