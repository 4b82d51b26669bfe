"""
File location; .../main/management/commands/construct.py
Description: Construct a code and write its JSON manifest.
(c) 2024 QGPCodes - all rights reserved
"""

# Django imports
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand

# Application imports
from main.constants import FAMILIES
from main.utils import as_command_error, build_manifest, default_path, write_manifest


class Command(BaseCommand):
    help = "Construct a Goethals, Preparata, stabilizer or quantum GP code and write its manifest"

    def add_arguments(self, parser):
        parser.add_argument("--family", required=True, choices=FAMILIES)
        parser.add_argument("-m", type=int, required=True)
        parser.add_argument("--seed", type=int, default=None)
        parser.add_argument("--out", default=None, help="Manifest path")

    def handle(self, *args, **options):
        family, m = options["family"], options["m"]
        try:
            manifest = build_manifest(family, m, seed=options["seed"])
            path = write_manifest(manifest, options["out"] or default_path(f"{family}_m{m}.json"))
        except (ValidationError, OSError) as error:
            raise as_command_error(error) from error

        summary = f"{family} m={m}: n={manifest['n']}, k={manifest['k']}"
        if "K2" in manifest:
            summary += f", K^2={manifest['K2']}, log2 dim={manifest['log2_dim']:g}"
        elif "K" in manifest:
            summary += f", {manifest['K']} coset representatives"
        self.stdout.write(self.style.SUCCESS(f"{summary}. Manifest written to {path}"))
