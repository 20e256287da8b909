"""Run the endoring command: ``python -m endoring --p 5 --m 3 [script]``."""
import os
import sys


def run(argv):
    """Execute a management command line against endoring.settings."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'endoring.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Is it installed (pip install -r requirements.txt) "
            "and is a virtual environment active?"
        ) from exc
    execute_from_command_line(argv)


def main():
    run([sys.argv[0], 'endoring', *sys.argv[1:]])


if __name__ == '__main__':
    main()
