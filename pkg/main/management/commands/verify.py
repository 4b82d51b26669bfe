"""
File location; .../main/management/commands/verify.py
Description: Certify the distance of the quantum Goethals-Preparata code,
            built for a given m or read from a manifest, and write the
            verification report.
(c) 2024 QGPCodes - all rights reserved
"""

# Global imports
import json

# Django imports
from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

# Application imports
from main.constants import EXIT_VERIFICATION_FAILED
from main.utils import as_command_error, default_path, read_manifest, render, write_manifest
from main.validators import validate_m, validate_radius, validate_workers
from quantum.unioncode import GPComponents, gp_components, verify_gp_distance


class Command(BaseCommand):
    help = "Verify d = 8 for the quantum Goethals-Preparata code"

    def add_arguments(self, parser):
        parser.add_argument("-m", type=int, default=None)
        parser.add_argument("--manifest", default=None, help="Manifest written by construct")
        parser.add_argument("--radius-g", type=int, default=settings.QGP_RADII["goethals"])
        parser.add_argument("--radius-p", type=int, default=settings.QGP_RADII["preparata"])
        parser.add_argument("--radius-rm", type=int, default=settings.QGP_RADII["reed_muller"])
        parser.add_argument("--workers", type=int, default=settings.QGP_WORKERS)
        parser.add_argument("--budget", type=int, default=None)
        parser.add_argument("--out", default=None, help="Report path")
        parser.add_argument("--format", choices=["text", "json"], default="text")

    def load_components(self, options) -> GPComponents:
        if options["manifest"]:
            manifest = read_manifest(options["manifest"])
            if manifest["family"] not in ("gp-quantum", "stabilizer"):
                raise ValidationError(f"A {manifest['family']} manifest has no quantum components.")
            return GPComponents.from_manifest({"m": manifest["m"], **manifest["components"]})
        if options["m"] is None:
            raise ValidationError("Either -m or --manifest is required.")
        validate_m(options["m"])
        return gp_components(options["m"])

    def handle(self, *args, **options):
        radii = {
            "goethals": options["radius_g"],
            "preparata": options["radius_p"],
            "reed_muller": options["radius_rm"],
        }
        try:
            components = self.load_components(options)
            for radius in radii.values():
                validate_radius(radius, components.n)
            validate_workers(options["workers"])
            report = verify_gp_distance(
                components, radii=radii, workers=options["workers"], budget=options["budget"]
            )
            data = report.to_dict()
            path = write_manifest(data, options["out"] or default_path(f"verify_m{components.m}.json"))
        except (ValidationError, OSError, KeyError) as error:
            raise as_command_error(error) from error

        if options["format"] == "json":
            self.stdout.write(json.dumps(data, sort_keys=True, indent=2))
        else:
            rows = [{"check": c.name, "passed": c.passed, "seconds": round(c.seconds, 2)} for c in report.checks]
            self.stdout.write(render(rows))
            if report.audit is not None:
                self.stdout.write(f"audit of the base code: {'passed' if report.audit.passed else report.audit.failed()}")
            self.stdout.write(f"lower bound from the radii: {report.lower_bound}, upper bound: {report.upper_bound}")

        if not report.passed:
            raise CommandError(
                f"Verification failed for m={components.m}, report written to {path}",
                returncode=EXIT_VERIFICATION_FAILED,
            )
        self.stdout.write(
            self.style.SUCCESS(f"d = {report.distance} certified for m={components.m}. Report written to {path}")
        )
