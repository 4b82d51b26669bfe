"""
File location; .../main/management/commands/table.py
Description: Print the parameters of the quantum Goethals-Preparata codes.
(c) 2024 QGPCodes - all rights reserved
"""

# Django imports
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand

# Application imports
from main.utils import as_command_error, parameter_row, render
from main.validators import validate_m


class Command(BaseCommand):
    help = "Print the parameter table of the quantum Goethals-Preparata codes"

    def add_arguments(self, parser):
        parser.add_argument("-m", type=int, nargs="+", default=[6, 8, 10])
        parser.add_argument("--format", choices=["text", "json"], default="text")

    def handle(self, *args, **options):
        try:
            for m in options["m"]:
                validate_m(m)
        except ValidationError as error:
            raise as_command_error(error) from error
        self.stdout.write(render([parameter_row(m) for m in options["m"]], options["format"]))
