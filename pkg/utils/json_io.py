"""
JSON Okuma/Yazma Yardımcıları
-----------------------------
Tüm çıktılar sıralı anahtarlarla ve sabit girintiyle yazılır; aynı girdi her
çalıştırmada bayt bayt aynı çıktıyı verir.
"""

import json
from pathlib import Path
from typing import Any, Union

from core.errors import InputError
from utils.logging_config import get_logger

logger = get_logger(__name__)


def read_json(path: Union[str, Path]) -> Any:
    """
    JSON dosyasını okur.

    Args:
        path: Dosya yolu

    Returns:
        Any: Ayrıştırılmış JSON değeri

    Raises:
        InputError: Dosya okunamazsa ya da geçerli JSON değilse
    """
    path = Path(path)
    if not path.exists():
        raise InputError(f"Dosya bulunamadı: {path}", details={"file": str(path)})
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise InputError(f"{path} geçerli bir JSON değil (satır {e.lineno}): {e.msg}",
                         details={"file": str(path)})
    except OSError as e:
        raise InputError(f"{path} okunamadı: {str(e)}", details={"file": str(path)})


def dump_json(payload: Any) -> str:
    """Yükü kanonik JSON metnine çevirir (sıralı anahtarlar, sonda yeni satır)."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(path: Union[str, Path], payload: Any) -> None:
    """Yükü kanonik biçimde dosyaya yazar."""
    with open(path, "w", encoding="utf-8") as f:
        f.write(dump_json(payload))
    logger.debug(f"JSON yazıldı: {path}")
