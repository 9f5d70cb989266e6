# backend/cli/base.py

"""
BASE MANAGEMENT COMMAND

Every toolkit subcommand derives from SheafCommand:
- shared --format option
- domain errors mapped onto the exit-code contract
  (bad input -> 2, contradictions -> 3); mismatches exit 1 via _exit()
"""

from __future__ import annotations

import logging
from typing import Callable

from django.core.management.base import BaseCommand, CommandError

from backend.cli.exit_codes import (
    EXIT_CONTRADICTION,
    EXIT_INVALID_ARGUMENTS,
    EXIT_MISMATCH,
)
from backend.cli.formats import (
    FORMAT_JSON,
    FORMAT_MARKDOWN,
    FORMAT_PLAIN,
    OUTPUT_FORMATS,
    render_json,
)
from cohomtable.services.exceptions import TableContradictionError

logger = logging.getLogger("cli")


class SheafCommand(BaseCommand):
    default_format = FORMAT_PLAIN

    def add_arguments(self, parser):
        parser.add_argument(
            "--format",
            dest="output_format",
            choices=OUTPUT_FORMATS,
            default=self.default_format,
            help="Output format (json, markdown, plain).",
        )

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except CommandError:
            raise
        except TableContradictionError as exc:
            logger.warning("cli.contradiction", extra={"command": self._name(), "error": str(exc)})
            raise CommandError(f"contradiction: {exc}", returncode=EXIT_CONTRADICTION)
        except ValueError as exc:
            raise CommandError(str(exc), returncode=EXIT_INVALID_ARGUMENTS)

    # --------------------------------------------------
    # OUTPUT
    # --------------------------------------------------
    def emit(
        self,
        output_format: str,
        *,
        data: Callable[[], object],
        markdown: Callable[[], str],
        plain: Callable[[], str],
    ) -> None:
        if output_format == FORMAT_JSON:
            self.stdout.write(render_json(data()))
        elif output_format == FORMAT_MARKDOWN:
            self.stdout.write(markdown())
        else:
            self.stdout.write(plain())

    def ok(self, message: str) -> None:
        self.stdout.write(self.style.SUCCESS(f"[OK] {message}"))

    def fail(self, message: str) -> None:
        self.stderr.write(self.style.ERROR(f"[FAIL] {message}"))

    def invalid(self, message: str):
        raise CommandError(message, returncode=EXIT_INVALID_ARGUMENTS)

    def _exit(self, fail: bool):
        if fail:
            raise SystemExit(EXIT_MISMATCH)
        return None

    def _name(self) -> str:
        return self.__class__.__module__.rsplit(".", 1)[-1]


__all__ = ["SheafCommand", "FORMAT_JSON", "FORMAT_MARKDOWN", "FORMAT_PLAIN"]
