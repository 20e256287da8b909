# management/commands/endoring.py
import logging
import sys
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from ...algebra import census, unit_density
from ...exceptions import ExpressionError, ParameterError, RingError
from ...expressions import Session
from ...forms import BudgetForm, RingParamsForm, form_errors
from ...formatting import format_value, to_json
from ...verification import run_checks

logger = logging.getLogger(__name__)

ACTIONS = ('eval', 'verify', 'census')

EXIT_EVALUATION = 1
EXIT_PARSE = 2
EXIT_VERIFICATION = 3
EXIT_PARAMETERS = 4


class Command(BaseCommand):
    help = (
        "Evaluate expressions in the ring E_{p,p^m} from a script or standard "
        "input, check the arithmetic against the brute-force oracle (verify), "
        "or print the ring and unit counts (census)."
    )
    requires_system_checks = []
    stealth_options = ('stdin',)

    def add_arguments(self, parser):
        parser.add_argument('--p', required=True, help="Prime p")
        parser.add_argument('--m', required=True, help="Exponent m >= 2")
        parser.add_argument('--json', action='store_true', help="Print one JSON object per result")
        parser.add_argument(
            '--budget',
            help="verify: largest ring the pairwise checks may enumerate",
        )
        parser.add_argument(
            'targets', nargs='*', metavar='[eval|verify|census] [script.ring]',
            help="Action (default eval) and, for eval, a script file",
        )

    def handle(self, *args, **options):
        form = RingParamsForm({'p': options['p'], 'm': options['m']})
        if not form.is_valid():
            raise CommandError(f"bad parameters: {form_errors(form)}", returncode=EXIT_PARAMETERS)
        params = form.cleaned_data['params']
        self.params = params
        self.as_json = options['json']

        targets = list(options['targets'])
        action = targets.pop(0) if targets and targets[0] in ACTIONS else 'eval'
        if action != 'eval' and targets or len(targets) > 1:
            raise CommandError(f"unexpected arguments: {' '.join(targets)}", returncode=EXIT_PARAMETERS)

        if action == 'census':
            self.census()
        elif action == 'verify':
            self.verify(options.get('budget'))
        elif targets:
            self.run_script(Path(targets[0]))
        else:
            self.run_repl(options.get('stdin') or sys.stdin)

    # eval

    def execute_line(self, session, line):
        """Run one line; (exit code, message) on failure, None on success."""
        try:
            value = session.execute(line)
        except ExpressionError as exc:
            return EXIT_PARSE, str(exc)
        except RingError as exc:
            return EXIT_EVALUATION, f"{type(exc).__name__}: {exc}"
        if value is not None:
            if self.as_json:
                self.stdout.write(to_json(value, self.params))
            else:
                self.stdout.write(format_value(value, self.params))
        return None

    def run_script(self, path):
        try:
            lines = path.read_text().splitlines()
        except OSError as exc:
            raise CommandError(f"cannot read {path}: {exc}", returncode=EXIT_PARAMETERS)
        session = Session(self.params)
        for number, line in enumerate(lines, start=1):
            failure = self.execute_line(session, line)
            if failure:
                code, message = failure
                raise CommandError(f"{path.name}, line {number}: {message}", returncode=code)

    def run_repl(self, stdin):
        session = Session(self.params)
        interactive = stdin.isatty()
        first_failure = None
        failures = 0
        while True:
            if interactive:
                self.stdout.write("> ", ending='')
                self.stdout.flush()
            line = stdin.readline()
            if not line:
                break
            failure = self.execute_line(session, line.rstrip('\n'))
            if failure:
                code, message = failure
                self.stderr.write(message)
                failures += 1
                first_failure = first_failure or code
        if first_failure:
            raise CommandError(f"{failures} statement(s) failed", returncode=first_failure)

    # census and verify

    def census(self):
        try:
            ring_size, unit_count = census(self.params)
        except ParameterError as exc:
            raise CommandError(str(exc), returncode=EXIT_PARAMETERS)
        density = unit_density(self.params)
        if self.as_json:
            value = {'ring_size': ring_size, 'unit_count': unit_count, 'unit_density': str(density)}
            self.stdout.write(to_json(value, self.params, kind='census'))
            return
        self.stdout.write(f"elements: {ring_size}")
        self.stdout.write(f"units: {unit_count}")
        self.stdout.write(f"unit density: {density}")

    def verify(self, budget):
        form = BudgetForm({'budget': budget})
        if not form.is_valid():
            raise CommandError(f"bad budget: {form_errors(form)}", returncode=EXIT_PARAMETERS)
        budget = form.cleaned_data['budget'] or settings.ENDORING_PAIR_BUDGET
        try:
            results = run_checks(
                self.params,
                budget,
                trials=settings.ENDORING_RANDOM_TRIALS,
                seed=settings.ENDORING_RANDOM_SEED,
            )
        except RingError as exc:
            raise CommandError(f"{type(exc).__name__}: {exc}", returncode=EXIT_VERIFICATION)

        if self.as_json:
            value = [
                {'name': r.name, 'passed': r.passed, 'cases': r.cases, 'detail': r.detail}
                for r in results
            ]
            self.stdout.write(to_json(value, self.params, kind='verification'))
        else:
            for r in results:
                status = self.style.SUCCESS("PASS") if r.passed else self.style.ERROR("FAIL")
                line = f"{status}  {r.name} ({r.cases} cases)"
                self.stdout.write(f"{line}: {r.detail}" if r.detail else line)

        failed = [r for r in results if not r.passed]
        if failed:
            raise CommandError(f"{len(failed)} of {len(results)} checks failed", returncode=EXIT_VERIFICATION)
        logger.info("verified %s: %d checks", self.params, len(results))
