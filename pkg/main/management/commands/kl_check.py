"""
File location; .../main/management/commands/kl_check.py
Description: Compare the exact union-code distance with the Knill-Laflamme
            distance on random small union stabilizer codes.
(c) 2024 QGPCodes - all rights reserved
"""

# Django imports
from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

# Application imports
from main.constants import EXIT_VERIFICATION_FAILED
from main.utils import as_command_error, render, write_manifest
from main.validators import validate_workers
from quantum.oracle import run_kl_suite


class Command(BaseCommand):
    help = "Run the Knill-Laflamme equivalence suite on random union codes"

    def add_arguments(self, parser):
        parser.add_argument("--instances", type=int, default=50)
        parser.add_argument("--seed", type=int, default=settings.QGP_SEED)
        parser.add_argument("--workers", type=int, default=settings.QGP_WORKERS)
        parser.add_argument("--corrupt", action="store_true", help="Move one translation into a used coset")
        parser.add_argument("--out", default=None, help="Report path")
        parser.add_argument("--format", choices=["text", "json"], default="text")

    def handle(self, *args, **options):
        if options["instances"] < 0:
            raise as_command_error(ValidationError("The number of instances cannot be negative."))
        try:
            validate_workers(options["workers"])
            results = run_kl_suite(
                options["instances"], seed=options["seed"], corrupt=options["corrupt"], workers=options["workers"]
            )
            records = [r.to_dict() for r in results]
            if options["out"]:
                write_manifest({"seed": options["seed"], "instances": records}, options["out"])
        except (ValidationError, OSError) as error:
            raise as_command_error(error) from error

        if not results:
            self.stdout.write(self.style.WARNING("No instances requested, nothing to compare."))
            return
        self.stdout.write(render(records, options["format"]))
        mismatches = [r for r in results if not r.agree]
        if mismatches:
            raise CommandError(
                f"{len(mismatches)} of {len(results)} instances disagree", returncode=EXIT_VERIFICATION_FAILED
            )
        self.stdout.write(self.style.SUCCESS(f"All {len(results)} instances agree."))
