"""
File location; .../main/management/commands/export.py
Description: Export the matrices of a constructed code in the text matrix
            format, and the stabilizer as GF(4) symbol strings.
(c) 2024 QGPCodes - all rights reserved
"""

# Global imports
from pathlib import Path

# Django imports
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand

# Application imports
from classical.lincode import BitVector
from main.utils import as_command_error, default_path, read_manifest, write_matrix
from quantum.stabilizer import steane_enlarge
from quantum.symplectic import gf4_symbols
from quantum.unioncode import GPComponents


class Command(BaseCommand):
    help = "Export generator, stabilizer and logical matrices of a manifest"

    def add_arguments(self, parser):
        parser.add_argument("--manifest", required=True, help="Manifest written by construct")
        parser.add_argument("--out", default=None, help="Output directory")

    def export_classical(self, manifest: dict, out: Path) -> list[Path]:
        n, family = manifest["n"], manifest["family"]
        generator = [BitVector.from_hex(n, h) for h in manifest["generator"]]
        reps = [BitVector.from_hex(n, h) for h in manifest["reps"]]
        return [
            write_matrix(out / f"{family}_generator.txt", generator, n),
            write_matrix(out / f"{family}_reps.txt", reps, n),
        ]

    def export_quantum(self, manifest: dict, out: Path) -> list[Path]:
        family = manifest["family"]
        components = GPComponents.from_manifest({"m": manifest["m"], **manifest["components"]})
        code = steane_enlarge(components.c_g, components.c_p, components.transform)
        n = code.n
        logicals = [v.to_vector() for v in code.logical_x + code.logical_z]
        gf4 = out / "stab_gf4.txt"
        gf4.write_text("".join(gf4_symbols(v) + "\n" for v in code.stab.vectors))
        return [
            write_matrix(out / f"{family}_reps.txt", components.reps, n),
            write_matrix(out / "stab.txt", code.stab.generators.rows, 2 * n),
            write_matrix(out / "norm.txt", code.norm.generators.rows, 2 * n),
            write_matrix(out / "logicals.txt", logicals, 2 * n),
            gf4,
        ]

    def handle(self, *args, **options):
        try:
            manifest = read_manifest(options["manifest"])
            out = Path(options["out"] or default_path(f"{manifest['family']}_m{manifest['m']}"))
            out.mkdir(parents=True, exist_ok=True)
            if manifest["family"] in ("goethals", "preparata"):
                written = self.export_classical(manifest, out)
            else:
                written = self.export_quantum(manifest, out)
        except (ValidationError, OSError, KeyError) as error:
            raise as_command_error(error) from error

        for path in written:
            self.stdout.write(f"wrote {path}")
        self.stdout.write(self.style.SUCCESS(f"Exported {len(written)} files to {out}"))
