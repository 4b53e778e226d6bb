"""
MedyaKiti Loglama Yapılandırması
--------------------------------
Bu modül, tüm proje için merkezi bir loglama yapılandırması sağlar.
Konsol logları stderr'e yazılır; stdout, komut satırının JSON çıktısına ayrılmıştır.
İstenirse loglar ayrıca dönen (rotating) bir dosyaya da yazılır.
"""

import os
import sys
import logging
from logging.handlers import RotatingFileHandler
from typing import Optional

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(
    log_file: Optional[str] = None,
    console_level: int = logging.WARNING,
    file_level: int = logging.DEBUG,
    max_file_size: int = 10 * 1024 * 1024,  # 10 MB
    backup_count: int = 5,
) -> None:
    """
    Proje genelinde kullanılacak loglama yapılandırmasını ayarlar.

    Args:
        log_file: Log dosyasının yolu (None ise dosyaya log yazılmaz)
        console_level: Konsol (stderr) loglarının seviyesi
        file_level: Dosya loglarının seviyesi
        max_file_size: Maksimum log dosyası boyutu (byte)
        backup_count: Tutulacak yedek log dosyası sayısı
    """
    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG)  # En düşük seviye (filtreler handler'larda)

    # Önceki tüm handler'ları temizle
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    log_format = logging.Formatter(LOG_FORMAT)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console_level)
    console_handler.setFormatter(log_format)
    root_logger.addHandler(console_handler)

    if log_file:
        try:
            log_dir = os.path.dirname(log_file)
            if log_dir and not os.path.exists(log_dir):
                os.makedirs(log_dir, exist_ok=True)

            file_handler = RotatingFileHandler(
                log_file,
                maxBytes=max_file_size,
                backupCount=backup_count,
                delay=True  # Dosyayı hemen açmak yerine, gerektiğinde açacak
            )
            file_handler.setLevel(file_level)
            file_handler.setFormatter(log_format)
            root_logger.addHandler(file_handler)
        except OSError as e:
            # Dosya loglaması olmasa da uygulama çalışmaya devam etsin
            root_logger.warning(f"Log dosyası yapılandırılırken hata: {str(e)}")

    logging.getLogger(__name__).debug(f"Loglama yapılandırması tamamlandı. Log dosyası: {log_file}")


def level_from_name(name: str) -> int:
    """
    'DEBUG', 'info' gibi bir seviye adını logging sabitine çevirir.

    Args:
        name: Seviye adı

    Returns:
        int: logging seviyesi (tanınmayan adlar için WARNING)
    """
    level = logging.getLevelName(name.upper())
    return level if isinstance(level, int) else logging.WARNING


def get_logger(name: str) -> logging.Logger:
    """
    Belirtilen isimde bir logger döndürür.

    Args:
        name: Logger adı

    Returns:
        Logger: Yapılandırılmış logger nesnesi
    """
    return logging.getLogger(name)
