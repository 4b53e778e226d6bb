"""
MedyaKiti Hata Sınıfları
------------------------
Tüm modüllerin fırlattığı hata hiyerarşisi. Her hata, komut satırının tanık
(witness) olarak yazdırabileceği isteğe bağlı bir `details` yükü taşır.
"""

from typing import Any, Optional


class MediaKitError(Exception):
    """Kütüphanenin temel hata sınıfı."""

    def __init__(self, message: str, details: Optional[Any] = None):
        super().__init__(message)
        self.message = message
        self.details = details


class InputError(MediaKitError, ValueError):
    """Bilinmeyen kimlik, bozuk dosya, boş mesaj ya da aralık dışı argüman."""


class MalformedSystemError(MediaKitError, ValueError):
    """Token sistemi tutarsız: ters tokenın tekliği bozulmuş ya da gerekli ters yok."""


class PreconditionError(MediaKitError, ValueError):
    """Bir işlemin ön koşulu sağlanmadı (ortam değil, mediatik değil, ...)."""


class BudgetExceededError(MediaKitError, RuntimeError):
    """Sayım ya da arama bütçesi aşıldı; sonuçlar sessizce kırpılmaz."""


class InternalContradictionError(MediaKitError, RuntimeError):
    """Teoremle güvence altındaki bir doğrulama başarısız oldu; bir hata işaretidir."""
