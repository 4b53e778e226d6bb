#!/usr/bin/env python3
"""
MedyaKiti - Ortam Teorisi Araç Takımı
-------------------------------------
Token sistemlerini ve grafları doğrular, ortam ile mediatik graf arasında
dönüştürür, izomorfizma arar, ilişki ailelerini üretir ve DOT çıktısı verir.

Tüm sonuçlar standart çıktıya sıralı anahtarlı JSON olarak yazılır; renkli
durum mesajları ve loglar standart hataya gider.

Çıkış kodları: 0 = doğru/başarılı, 1 = olumsuz sonuç (tanıkla), 2 = girdi/kullanım hatası.

Kullanım:
  python main.py check graph fixtures/c6.json            # Mediatik graf kontrolü
  python main.py check medium fixtures/q3.json --bounded 6
  python main.py convert g2m fixtures/c6.json            # Graftan ortam
  python main.py iso graphs a.json b.json                 # Graf izomorfizması
  python main.py gen-family --kind partial-order --n 3 --to-medium
  python main.py circuits fixtures/q3_graph.json --max-len 4
  python main.py content fixtures/q3.json --state "{}"
  python main.py embed fixtures/q3.json                  # Hiperküp gösterimi
  python main.py export dot fixtures/c6.json
  python main.py gen-fixture random-partial-cube --seed 7
"""

import argparse
import logging
import sys
from typing import Any, List, Optional, TextIO

from colorama import Fore, Style, init

from core.errors import MediaKitError
from core.token_system import TokenSystem
from convert.bijection import graph_to_medium, medium_to_graph
from families.relations import KINDS, enumerate_family, family_to_medium, is_wellgraded
from graphs.export import to_dot
from graphs.fixtures import GRAPH_FIXTURES, fixture_graph, fixture_medium
from graphs.graph import Graph, circuits_upto, is_mediatic, is_minimal_circuit
from iso.isomorphism import find_graph_iso, media_isomorphic
from medium.axioms import check_axioms_bounded, check_medium
from medium.theorems import hypercube_embedding, state_content
from utils.config import MediaKitSettings, load_settings
from utils.json_io import dump_json, read_json
from utils.logging_config import get_logger, level_from_name, setup_logging

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class MedyaKiti:
    """Komut satırı işlemlerini yürüten sınıf; her alt komut bir yöntemdir."""

    def __init__(self, settings: MediaKitSettings, out: TextIO = None, err: TextIO = None):
        self.settings = settings
        self.out = out or sys.stdout
        self.err = err or sys.stderr

    # ------------------------------------------------------------------
    # Çıktı yardımcıları
    # ------------------------------------------------------------------
    def _emit(self, payload: Any) -> None:
        self.out.write(dump_json(payload))

    def _status(self, ok: bool, message: str) -> None:
        color, mark = (Fore.GREEN, "✓") if ok else (Fore.RED, "✗")
        self.err.write(f"{color}{mark} {message}{Style.RESET_ALL}\n")

    @staticmethod
    def _load_graph(path: str) -> Graph:
        return Graph.from_dict(read_json(path))

    @staticmethod
    def _load_system(path: str) -> TokenSystem:
        return TokenSystem.from_dict(read_json(path))

    # ------------------------------------------------------------------
    # Alt komutlar
    # ------------------------------------------------------------------
    def check_graph(self, path: str) -> int:
        report = is_mediatic(self._load_graph(path))
        self._emit(report.to_payload())
        self._status(report.is_mediatic, f"{path}: graf {'mediatik' if report.is_mediatic else 'mediatik değil'}")
        return EXIT_OK if report.is_mediatic else EXIT_NEGATIVE

    def check_medium(self, path: str, bounded: Optional[int] = None) -> int:
        system = self._load_system(path)
        report = check_medium(system, self.settings)
        payload = {"medium": report.to_payload(), "bounded": None, "agree": None}
        ok = report.is_medium
        if bounded is not None:
            bounded_report = check_axioms_bounded(system, bounded, self.settings)
            agree = bounded_report.is_medium == report.is_medium
            payload.update(bounded=bounded_report.to_payload(), agree=agree)
            ok = ok and agree
            self._status(agree, f"Graf yolu ve sınırlı sayım {'uyuşuyor' if agree else 'uyuşmuyor'}")
        self._emit(payload)
        self._status(report.is_medium, f"{path}: {'ortam' if report.is_medium else 'ortam değil'}")
        return EXIT_OK if ok else EXIT_NEGATIVE

    def convert(self, direction: str, path: str) -> int:
        if direction == "m2g":
            self._emit(medium_to_graph(self._load_system(path), settings=self.settings).to_dict())
        else:
            self._emit(graph_to_medium(self._load_graph(path)).to_dict())
        self._status(True, f"{path} dönüştürüldü ({direction})")
        return EXIT_OK

    def iso(self, kind: str, first: str, second: str) -> int:
        if kind == "graphs":
            found = find_graph_iso(self._load_graph(first), self._load_graph(second), self.settings)
            payload = {"isomorphic": found is not None, "phi": found.phi if found else None}
        else:
            found = media_isomorphic(self._load_system(first), self._load_system(second), self.settings)
            payload = {"isomorphic": found is not None,
                       "alpha": found.alpha if found else None,
                       "beta": found.beta if found else None}
        self._emit(payload)
        self._status(found is not None, "izomorf" if found is not None else "izomorf değil")
        return EXIT_OK if found is not None else EXIT_NEGATIVE

    def gen_family(self, kind: str, n: int, to_medium: bool = False, to_graph: bool = False) -> int:
        family = enumerate_family(kind, n, self.settings)
        if to_medium or to_graph:
            system = family_to_medium(family)
            self._emit(medium_to_graph(system, settings=self.settings).to_dict() if to_graph else system.to_dict())
            self._status(True, f"{kind} ailesi (n={n}): {len(family.members)} üye")
            return EXIT_OK
        graded = is_wellgraded(family)
        payload = family.to_dict()
        payload["wellgraded"] = graded.to_payload()
        self._emit(payload)
        self._status(graded.wellgraded, f"{kind} ailesi (n={n}): {len(family.members)} üye")
        return EXIT_OK if graded.wellgraded else EXIT_NEGATIVE

    def circuits(self, path: str, max_len: int, minimal_only: bool = False) -> int:
        graph = self._load_graph(path)
        entries = []
        for circuit in circuits_upto(graph, max_len, self.settings):
            minimal = is_minimal_circuit(graph, circuit)
            if minimal_only and not minimal:
                continue
            entries.append({"vertices": list(circuit), "length": len(circuit), "minimal": minimal})
        self._emit({"count": len(entries), "circuits": entries, "maxLen": max_len})
        self._status(True, f"{len(entries)} devre bulundu")
        return EXIT_OK

    def content(self, path: str, state: str) -> int:
        self._emit(state_content(self._load_system(path), state, self.settings).to_payload())
        return EXIT_OK

    def embed(self, path: str) -> int:
        embedding = hypercube_embedding(self._load_system(path), self.settings)
        self._emit(embedding.to_payload())
        self._status(True, f"{path}: {embedding.dimension} boyutlu hiperküpe izometrik gömüldü")
        return EXIT_OK

    def export_dot(self, path: str) -> int:
        self.out.write(to_dot(self._load_graph(path)))
        return EXIT_OK

    def gen_fixture(self, name: str, seed: Optional[int] = None, kind: str = "graph") -> int:
        if kind == "medium":
            self._emit(fixture_medium(name, seed).to_dict())
        else:
            self._emit(fixture_graph(name, seed).to_dict())
        return EXIT_OK


def setup_argparse() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="MedyaKiti - Ortam teorisi araç takımı")
    parser.add_argument("--verbose", "-v", action="store_true", help="Ayrıntılı (DEBUG) loglama")
    subparsers = parser.add_subparsers(dest="command", required=True, help="Komutlar")

    check_parser = subparsers.add_parser("check", help="Graf ya da token sistemi doğrula")
    check_sub = check_parser.add_subparsers(dest="target", required=True)
    check_graph = check_sub.add_parser("graph", help="Mediatik graf kontrolü")
    check_graph.add_argument("file", type=str, help="Graf JSON dosyası")
    check_medium_parser = check_sub.add_parser("medium", help="Ortam kontrolü")
    check_medium_parser.add_argument("file", type=str, help="Token sistemi JSON dosyası")
    check_medium_parser.add_argument("--bounded", type=int, metavar="L", help="Ek olarak sınırlı aksiyom sayımı")

    convert_parser = subparsers.add_parser("convert", help="Ortam ile graf arasında dönüştür")
    convert_parser.add_argument("direction", choices=["m2g", "g2m"], help="Dönüşüm yönü")
    convert_parser.add_argument("file", type=str, help="Girdi JSON dosyası")

    iso_parser = subparsers.add_parser("iso", help="İzomorfizma ara")
    iso_parser.add_argument("kind", choices=["graphs", "media"], help="Graflar ya da ortamlar")
    iso_parser.add_argument("first", type=str, help="İlk JSON dosyası")
    iso_parser.add_argument("second", type=str, help="İkinci JSON dosyası")

    family_parser = subparsers.add_parser("gen-family", help="İlişki ailesi üret")
    family_parser.add_argument("--kind", required=True, choices=list(KINDS), help="Aile türü")
    family_parser.add_argument("--n", required=True, type=int, help="Zemin büyüklüğü (1-4)")
    family_output = family_parser.add_mutually_exclusive_group()
    family_output.add_argument("--to-medium", action="store_true", help="Aileyi ortam olarak yaz")
    family_output.add_argument("--to-graph", action="store_true", help="Ailenin ortam grafını yaz")

    circuits_parser = subparsers.add_parser("circuits", help="Devreleri listele")
    circuits_parser.add_argument("file", type=str, help="Graf JSON dosyası")
    circuits_parser.add_argument("--max-len", required=True, type=int, help="En büyük devre uzunluğu")
    circuits_parser.add_argument("--minimal-only", action="store_true", help="Yalnızca minimal devreler")

    content_parser = subparsers.add_parser("content", help="Durum içeriğini hesapla")
    content_parser.add_argument("file", type=str, help="Token sistemi JSON dosyası")
    content_parser.add_argument("--state", required=True, type=str, help="Durum kimliği")

    embed_parser = subparsers.add_parser("embed", help="Ortamı içerik vektörleriyle hiperküpe göm")
    embed_parser.add_argument("file", type=str, help="Token sistemi JSON dosyası")

    export_parser = subparsers.add_parser("export", help="Dışa aktar")
    export_parser.add_argument("format", choices=["dot"], help="Çıktı biçimi")
    export_parser.add_argument("file", type=str, help="Graf JSON dosyası")

    fixture_parser = subparsers.add_parser("gen-fixture", help="Hazır örnek üret")
    fixture_parser.add_argument("name", choices=sorted(GRAPH_FIXTURES), help="Örnek adı")
    fixture_parser.add_argument("--seed", type=int,
                                help="Rastgele kısmi küp tohumu "
                                     "(Q4 içinde izometrik büyütme, en büyük bileşen seçimi değil)")
    fixture_parser.add_argument("--kind", choices=["graph", "medium"], default="graph", help="Çıktı türü")

    return parser


def run(argv: Optional[List[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    """
    Komut satırını çalıştırır ve çıkış kodunu döndürür.

    Args:
        argv: Argümanlar (None ise sys.argv)
        out: JSON çıktısı için akış (varsayılan stdout)
        err: Durum mesajları için akış (varsayılan stderr)
    """
    err = err or sys.stderr
    parser = setup_argparse()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        settings = load_settings()
        console_level = logging.DEBUG if args.verbose else level_from_name(settings.log_level)
        setup_logging(log_file=settings.log_file, console_level=console_level)
        app = MedyaKiti(settings, out=out, err=err)

        if args.command == "check":
            if args.target == "graph":
                return app.check_graph(args.file)
            return app.check_medium(args.file, args.bounded)
        if args.command == "convert":
            return app.convert(args.direction, args.file)
        if args.command == "iso":
            return app.iso(args.kind, args.first, args.second)
        if args.command == "gen-family":
            return app.gen_family(args.kind, args.n, args.to_medium, args.to_graph)
        if args.command == "circuits":
            return app.circuits(args.file, args.max_len, args.minimal_only)
        if args.command == "content":
            return app.content(args.file, args.state)
        if args.command == "embed":
            return app.embed(args.file)
        if args.command == "export":
            return app.export_dot(args.file)
        if args.command == "gen-fixture":
            return app.gen_fixture(args.name, args.seed, args.kind)
    except MediaKitError as e:
        logger.debug(f"{type(e).__name__}: {e.message}")
        err.write(f"{Fore.RED}✗ {type(e).__name__}: {e.message}{Style.RESET_ALL}\n")
        if e.details is not None:
            err.write(dump_json(e.details))
        return EXIT_USAGE
    except OSError as e:
        err.write(f"{Fore.RED}✗ Dosya hatası: {str(e)}{Style.RESET_ALL}\n")
        return EXIT_USAGE
    return EXIT_USAGE


def main() -> None:
    init()
    try:
        sys.exit(run())
    except KeyboardInterrupt:
        print(f"\n{Fore.YELLOW}Program kullanıcı tarafından sonlandırıldı.{Style.RESET_ALL}", file=sys.stderr)
        sys.exit(130)


if __name__ == "__main__":
    main()
